//! Convex star-shaped planar bodies given by truncated Fourier radial
//! functions `ρ(θ) = a₀ + Σ_k (c_k cos kθ + s_k sin kθ)`, and the
//! annular domains built from them.
//!
//! The representation buys exact differentiation and spectrally
//! accurate periodic trapezoidal quadrature: every boundary quantity
//! (area, perimeter, support data, boundary integrals) is a plain mean
//! over `M` uniform angle samples.

mod hull;
mod random;

pub use random::random_convex_body;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Smallest admissible quadrature size.
pub const MIN_QUADRATURE: usize = 64;

/// Convexity slack: the polar curvature expression may dip this far
/// (times `(max ρ)²`) below zero before a body is flagged non-convex,
/// absorbing Fourier truncation ripple.
pub const CONVEXITY_TOLERANCE: f64 = 1e-9;

/// A star-shaped body about the origin with radial function given by a
/// truncated Fourier series, together with its quadrature grid size.
///
/// Bodies are immutable after construction. Construction validates that
/// the radial function is strictly positive on the grid; convexity is
/// *flagged*, not enforced: the polar curvature `ρ² + 2ρ′² − ρρ″` must
/// stay above `-CONVEXITY_TOLERANCE·(max ρ)²` everywhere for
/// [`StarBody2D::is_convex`] to hold. Non-convex bodies remain usable
/// for quadrature; theorem checks reject them.
#[derive(Debug, Clone, PartialEq)]
pub struct StarBody2D {
    a0: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
    m: usize,
    convex: bool,
    min_rho: f64,
    max_rho: f64,
    // cached boundary samples on the M-point grid
    rho: Vec<f64>,
    drho: Vec<f64>,
}

impl StarBody2D {
    /// Build a body from Fourier coefficients of its radial function.
    /// `m` must be a power of two, at least [`MIN_QUADRATURE`], and
    /// large enough to resolve the highest harmonic (`order < m/2`).
    pub fn new(a0: f64, cos_coeffs: Vec<f64>, sin_coeffs: Vec<f64>, m: usize) -> Result<Self> {
        if m < MIN_QUADRATURE || !m.is_power_of_two() {
            return Err(Error::BadQuadratureSize { m });
        }
        let order = cos_coeffs.len().max(sin_coeffs.len());
        if 2 * (order + 1) > m {
            return Err(Error::QuadratureTooCoarse {
                m,
                required: (2 * (order + 1)).next_power_of_two(),
            });
        }
        let mut cos_coeffs = cos_coeffs;
        let mut sin_coeffs = sin_coeffs;
        cos_coeffs.resize(order, 0.0);
        sin_coeffs.resize(order, 0.0);

        let mut rho = Vec::with_capacity(m);
        let mut drho = Vec::with_capacity(m);
        let mut min_rho = f64::INFINITY;
        let mut max_rho = f64::NEG_INFINITY;
        let mut min_curvature = f64::INFINITY;
        for j in 0..m {
            let theta = math::TAU * j as f64 / m as f64;
            let (r, dr, ddr) = eval_series(a0, &cos_coeffs, &sin_coeffs, theta);
            min_rho = min_rho.min(r);
            max_rho = max_rho.max(r);
            min_curvature = min_curvature.min(r * r + 2.0 * dr * dr - r * ddr);
            rho.push(r);
            drho.push(dr);
        }
        if !(min_rho > 0.0) {
            return Err(Error::NonPositiveRadialFunction { min_rho });
        }
        let convex = min_curvature >= -CONVEXITY_TOLERANCE * max_rho * max_rho;
        Ok(StarBody2D {
            a0,
            cos_coeffs,
            sin_coeffs,
            m,
            convex,
            min_rho,
            max_rho,
            rho,
            drho,
        })
    }

    /// Circle of the given radius about the origin.
    pub fn circle(radius: f64, m: usize) -> Result<Self> {
        StarBody2D::new(radius, Vec::new(), Vec::new(), m)
    }

    /// Discrete Fourier fit of radial samples on a uniform grid,
    /// truncated at `max_order`. `samples.len()` becomes the body's
    /// quadrature size.
    pub fn from_radial_samples(samples: &[f64], max_order: usize) -> Result<Self> {
        let m = samples.len();
        if m < MIN_QUADRATURE || !m.is_power_of_two() {
            return Err(Error::BadQuadratureSize { m });
        }
        let order = max_order.min(m / 2 - 1);
        let mut a0 = 0.0;
        for &s in samples {
            a0 += s;
        }
        a0 /= m as f64;
        let mut cos_coeffs = Vec::with_capacity(order);
        let mut sin_coeffs = Vec::with_capacity(order);
        for k in 1..=order {
            let mut c = 0.0;
            let mut s = 0.0;
            for (j, &v) in samples.iter().enumerate() {
                let ang = math::TAU * (k * j % m) as f64 / m as f64;
                c += v * math::cos(ang);
                s += v * math::sin(ang);
            }
            cos_coeffs.push(2.0 * c / m as f64);
            sin_coeffs.push(2.0 * s / m as f64);
        }
        StarBody2D::new(a0, cos_coeffs, sin_coeffs, m)
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn cos_coeffs(&self) -> &[f64] {
        &self.cos_coeffs
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.sin_coeffs
    }

    pub fn quadrature_size(&self) -> usize {
        self.m
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn min_rho(&self) -> f64 {
        self.min_rho
    }

    pub fn max_rho(&self) -> f64 {
        self.max_rho
    }

    /// Same coefficients on a different quadrature grid.
    pub fn with_quadrature_size(&self, m: usize) -> Result<Self> {
        StarBody2D::new(self.a0, self.cos_coeffs.clone(), self.sin_coeffs.clone(), m)
    }

    /// Drop all harmonics above `order`.
    pub fn truncated(&self, order: usize) -> Result<Self> {
        let order = order.min(self.cos_coeffs.len());
        StarBody2D::new(
            self.a0,
            self.cos_coeffs[..order].to_vec(),
            self.sin_coeffs[..order].to_vec(),
            self.m,
        )
    }

    /// The body scaled by `t > 0` about the origin.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        StarBody2D::new(
            t * self.a0,
            self.cos_coeffs.iter().map(|c| t * c).collect(),
            self.sin_coeffs.iter().map(|s| t * s).collect(),
            self.m,
        )
    }

    /// `(ρ, ρ′, ρ″)` at `theta`, by exact termwise differentiation.
    pub fn eval_rho(&self, theta: f64) -> (f64, f64, f64) {
        eval_series(self.a0, &self.cos_coeffs, &self.sin_coeffs, theta)
    }

    /// Boundary point `p(θ) = ρ(θ)(cos θ, sin θ)`.
    pub fn boundary_point(&self, theta: f64) -> [f64; 2] {
        let (r, _, _) = self.eval_rho(theta);
        [r * math::cos(theta), r * math::sin(theta)]
    }

    /// Enclosed area `(1/2)∫ρ² dθ`.
    pub fn volume(&self) -> f64 {
        let sum: f64 = self.rho.iter().map(|r| r * r).sum();
        0.5 * sum * math::TAU / self.m as f64
    }

    /// Boundary length `∫√(ρ² + ρ′²) dθ`.
    pub fn perimeter(&self) -> f64 {
        let sum: f64 = self
            .rho
            .iter()
            .zip(&self.drho)
            .map(|(&r, &dr)| math::hypot(r, dr))
            .sum();
        sum * math::TAU / self.m as f64
    }

    /// Support value at the outward normal of the boundary point at
    /// parameter `theta`: `h(ν(θ)) = ρ²/√(ρ² + ρ′²)`, the distance from
    /// the origin to the tangent line there.
    pub fn support_function(&self, theta: f64) -> f64 {
        let (r, dr, _) = self.eval_rho(theta);
        r * r / math::hypot(r, dr)
    }

    /// Support value in the fixed direction `(cos φ, sin φ)`:
    /// `h(φ) = max_θ ρ(θ) cos(θ - φ)`, by grid scan plus Newton
    /// refinement. Exact for convex bodies.
    pub fn support_in_direction(&self, phi: f64) -> f64 {
        let m = self.m;
        let mut best = f64::NEG_INFINITY;
        let mut best_theta = 0.0;
        for (j, &r) in self.rho.iter().enumerate() {
            let theta = math::TAU * j as f64 / m as f64;
            let g = r * math::cos(theta - phi);
            if g > best {
                best = g;
                best_theta = theta;
            }
        }
        let mut t = best_theta;
        for _ in 0..30 {
            let (r, dr, ddr) = self.eval_rho(t);
            let (c, s) = (math::cos(t - phi), math::sin(t - phi));
            let g1 = dr * c - r * s;
            let g2 = ddr * c - 2.0 * dr * s - r * c;
            if g2 >= 0.0 {
                break; // not locally concave: stay with the grid maximum
            }
            let step = g1 / g2;
            t -= step;
            if math::abs(step) < 1e-14 {
                break;
            }
        }
        let (r, _, _) = self.eval_rho(t);
        best.max(r * math::cos(t - phi))
    }

    /// Largest `r` with `B_r ⊆ K` among balls centered at the origin:
    /// the minimum of [`Self::support_function`] over the grid. A lower
    /// bound for the true inradius, exact when the incenter is the origin.
    pub fn inradius_origin(&self) -> f64 {
        self.rho
            .iter()
            .zip(&self.drho)
            .map(|(&r, &dr)| r * r / math::hypot(r, dr))
            .fold(f64::INFINITY, f64::min)
    }

    /// Diameter as the maximal distance between boundary grid samples.
    pub fn diameter(&self) -> f64 {
        let pts: Vec<[f64; 2]> = (0..self.m)
            .map(|j| {
                let theta = math::TAU * j as f64 / self.m as f64;
                [
                    self.rho[j] * math::cos(theta),
                    self.rho[j] * math::sin(theta),
                ]
            })
            .collect();
        let mut best: f64 = 0.0;
        for i in 0..pts.len() {
            for p in &pts[i + 1..] {
                let d = math::hypot(pts[i][0] - p[0], pts[i][1] - p[1]);
                best = best.max(d);
            }
        }
        best
    }

    /// Boundary integral of a scalar field:
    /// `∫_{∂K} f ds = ∫ f(p(θ)) √(ρ² + ρ′²) dθ` by the radial change of
    /// variables, with periodic trapezoidal quadrature on the body grid.
    pub fn boundary_integral<F: FnMut([f64; 2]) -> f64>(&self, mut f: F) -> f64 {
        let mut sum = 0.0;
        for j in 0..self.m {
            let theta = math::TAU * j as f64 / self.m as f64;
            let (r, dr) = (self.rho[j], self.drho[j]);
            let p = [r * math::cos(theta), r * math::sin(theta)];
            sum += f(p) * math::hypot(r, dr);
        }
        sum * math::TAU / self.m as f64
    }
}

/// Ellipse `x²/a² + y²/b² = 1` as a Fourier body: the interpolation of
/// `ρ(θ) = ab/√(b²cos²θ + a²sin²θ)` on `m` uniform samples.
pub fn body_from_ellipse(a: f64, b: f64, m: usize) -> Result<StarBody2D> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::NonPositiveAxis { a, b });
    }
    if m < MIN_QUADRATURE || !m.is_power_of_two() {
        return Err(Error::BadQuadratureSize { m });
    }
    let samples: Vec<f64> = (0..m)
        .map(|j| {
            let theta = math::TAU * j as f64 / m as f64;
            let (c, s) = (math::cos(theta), math::sin(theta));
            a * b / math::sqrt(b * b * c * c + a * a * s * s)
        })
        .collect();
    StarBody2D::from_radial_samples(&samples, m / 2 - 1)
}

/// The excess perimeter approximation for an ellipse with semi-axes
/// `a`, `b`: exactly `2π√((a² + b²)/2)`.
pub fn perimeter_approx_formula(a: f64, b: f64) -> f64 {
    math::TAU * math::sqrt(0.5 * (a * a + b * b))
}

/// Convex hull of a point set, converted to a Fourier body: the hull
/// boundary is sampled at `m` uniform angles and the series truncated
/// at order `m/8`, which rounds the corners that would otherwise
/// degrade spectral quadrature. The result is convexity-flagged like
/// any other body (mild truncation ripple at corners may flag it
/// non-convex).
pub fn body_from_hull(points: &[[f64; 2]], m: usize) -> Result<StarBody2D> {
    if m < MIN_QUADRATURE || !m.is_power_of_two() {
        return Err(Error::BadQuadratureSize { m });
    }
    let hull = hull::convex_hull(points)?;
    let samples = hull::radialize(&hull, m)?;
    StarBody2D::from_radial_samples(&samples, m / 8)
}

/// Hausdorff distance between two convex bodies with the origin
/// interior: the maximum over sampled directions of the support gap
/// `|h₁ - h₂|`.
pub fn hausdorff_distance(first: &StarBody2D, second: &StarBody2D) -> f64 {
    let m = first.quadrature_size().max(second.quadrature_size());
    let mut best: f64 = 0.0;
    for j in 0..m {
        let phi = math::TAU * j as f64 / m as f64;
        let gap = math::abs(first.support_in_direction(phi) - second.support_in_direction(phi));
        best = best.max(gap);
    }
    best
}

/// An annular domain `Ω = Ω₀ \ B̄_{R1}`: a star-shaped outer body with a
/// concentric circular hole of radius `R1` compactly contained in it.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnularDomain2D {
    r1: f64,
    outer: StarBody2D,
}

impl AnnularDomain2D {
    /// Requires `0 < R1 < min ρ₀` (the hole closure inside the body).
    pub fn new(r1: f64, outer: StarBody2D) -> Result<Self> {
        if !(r1 > 0.0) || outer.min_rho() <= r1 {
            return Err(Error::InnerBallNotContained {
                min_rho: outer.min_rho(),
                r1,
            });
        }
        Ok(AnnularDomain2D { r1, outer })
    }

    pub fn inner_radius(&self) -> f64 {
        self.r1
    }

    pub fn outer(&self) -> &StarBody2D {
        &self.outer
    }

    /// `V(Ω) = V(Ω₀) - π R1²`.
    pub fn annulus_volume(&self) -> f64 {
        self.outer.volume() - math::PI * self.r1 * self.r1
    }

    /// The domain scaled by `t > 0` (both the hole and the outer body).
    pub fn scaled(&self, t: f64) -> Result<Self> {
        AnnularDomain2D::new(t * self.r1, self.outer.scaled(t)?)
    }
}

fn eval_series(a0: f64, cos_coeffs: &[f64], sin_coeffs: &[f64], theta: f64) -> (f64, f64, f64) {
    let (c1, s1) = (math::cos(theta), math::sin(theta));
    let (mut ck, mut sk) = (1.0, 0.0); // cos/sin of k*theta, starting at k=0
    let mut r = a0;
    let mut dr = 0.0;
    let mut ddr = 0.0;
    for k in 1..=cos_coeffs.len() {
        let (cn, sn) = (ck * c1 - sk * s1, sk * c1 + ck * s1);
        ck = cn;
        sk = sn;
        let kf = k as f64;
        let (a, b) = (cos_coeffs[k - 1], sin_coeffs[k - 1]);
        r += a * ck + b * sk;
        dr += kf * (b * ck - a * sk);
        ddr -= kf * kf * (a * ck + b * sk);
    }
    (r, dr, ddr)
}
