//! Planar convex hulls and their radial sampling about the origin.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

#[inline]
fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain. Returns the hull vertices in
/// counter-clockwise order with collinear points dropped.
pub(crate) fn convex_hull(points: &[[f64; 2]]) -> Result<Vec<[f64; 2]>> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    let mut lower: Vec<[f64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[f64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    Ok(lower)
}

/// Distances from the origin to the hull boundary along `m` uniform
/// directions. Requires the origin strictly inside the hull.
pub(crate) fn radialize(hull: &[[f64; 2]], m: usize) -> Result<Vec<f64>> {
    // origin strictly interior <=> it is on the positive side of every
    // CCW edge
    let v = hull.len();
    for i in 0..v {
        let p1 = hull[i];
        let p2 = hull[(i + 1) % v];
        if p1[0] * p2[1] - p1[1] * p2[0] <= 0.0 {
            return Err(Error::OriginNotInterior);
        }
    }
    // vertices by polar angle in (-pi, pi]
    let mut order: Vec<usize> = (0..v).collect();
    let angle = |i: usize| math::atan2(hull[i][1], hull[i][0]);
    order.sort_by(|&i, &j| angle(i).total_cmp(&angle(j)));
    let sorted: Vec<[f64; 2]> = order.iter().map(|&i| hull[i]).collect();
    let angles: Vec<f64> = order.iter().map(|&i| angle(i)).collect();

    let mut rho = Vec::with_capacity(m);
    for j in 0..m {
        let theta = math::TAU * j as f64 / m as f64;
        let t = if theta > math::PI {
            theta - math::TAU
        } else {
            theta
        };
        // edge from sorted[k] to sorted[k+1] spans t
        let k = match angles.partition_point(|&a| a <= t) {
            0 => v - 1, // before the first vertex angle: wrap-around edge
            idx => idx - 1,
        };
        let p1 = sorted[k];
        let p2 = sorted[(k + 1) % v];
        let (c, s) = (math::cos(t), math::sin(t));
        let denom = c * (p2[1] - p1[1]) - s * (p2[0] - p1[0]);
        rho.push((p1[0] * p2[1] - p1[1] * p2[0]) / denom);
    }
    Ok(rho)
}
