//! Seeded random convex bodies sandwiched between `B_{R1}` and `B_{Rmax}`.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{hull, StarBody2D};
use crate::error::{Error, Result};
use crate::math;

/// Margin by which the generated hull encloses the inner ball.
const DELTA: f64 = 0.05;
/// Points approximating the protected inner circle inside the hull.
const CIRCLE_POINTS: usize = 48;
const MAX_ATTEMPTS: u32 = 40;

/// Deterministic random convex body with `R1 < ρ ≤ Rmax` everywhere.
///
/// Each attempt takes the convex hull of `B_{R1(1+δ)}` (δ = 0.05,
/// approximated by 48 circle points) together with a few uniform random
/// points in `B_{Rmax}`, samples its radial function on `m` uniform
/// angles, truncates the Fourier series at order `m/8`, and then
/// re-projects onto the body invariants: a Gaussian spectral low-pass
/// with geometrically tightening cutoff until the polar-curvature
/// convexity test passes, rescaling whenever `max ρ` exceeds `Rmax`.
/// Attempts that lose the `R1` clearance are rejected and redrawn;
/// the generator fails once the rejection budget is exhausted (the
/// requested sandwich is then infeasible, e.g. `Rmax ≤ R1(1+δ)cos(π/48)`).
pub fn random_convex_body(seed: u64, r1: f64, rmax: f64, m: usize) -> Result<StarBody2D> {
    if !(r1 > 0.0) || !(rmax > r1) {
        return Err(Error::InnerBallNotContained { min_rho: rmax, r1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = m / 8;
    for _attempt in 0..MAX_ATTEMPTS {
        let npts: usize = rng.random_range(4..=16);
        let mut pts: Vec<[f64; 2]> = Vec::with_capacity(npts + CIRCLE_POINTS);
        for _ in 0..npts {
            let radius = rmax * math::sqrt(rng.random_range(0.0..1.0));
            let angle = rng.random_range(0.0..math::TAU);
            pts.push([radius * math::cos(angle), radius * math::sin(angle)]);
        }
        let guard = r1 * (1.0 + DELTA);
        for j in 0..CIRCLE_POINTS {
            let angle = math::TAU * j as f64 / CIRCLE_POINTS as f64;
            pts.push([guard * math::cos(angle), guard * math::sin(angle)]);
        }
        let hull = hull::convex_hull(&pts)?;
        let samples = hull::radialize(&hull, m)?;
        let fitted = StarBody2D::from_radial_samples(&samples, order)?;

        // tighten the low-pass until the curvature test passes
        let mut cutoff = order as f64;
        while cutoff >= 2.0 {
            if let Some(body) = project_candidate(&fitted, cutoff, r1, rmax, m)? {
                return Ok(body);
            }
            cutoff *= 0.8;
        }
    }
    Err(Error::BodyGenerationFailed {
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

/// One low-pass + containment projection. `Ok(None)` means this cutoff
/// fails the invariants; a tighter cutoff or a fresh draw is needed.
fn project_candidate(
    fitted: &StarBody2D,
    cutoff: f64,
    r1: f64,
    rmax: f64,
    m: usize,
) -> Result<Option<StarBody2D>> {
    let damp = |k: usize, v: f64| {
        let x = (k + 1) as f64 / cutoff;
        v * math::exp(-x * x)
    };
    let cos_coeffs: Vec<f64> = fitted
        .cos_coeffs()
        .iter()
        .enumerate()
        .map(|(k, &v)| damp(k, v))
        .collect();
    let sin_coeffs: Vec<f64> = fitted
        .sin_coeffs()
        .iter()
        .enumerate()
        .map(|(k, &v)| damp(k, v))
        .collect();
    let body = StarBody2D::new(fitted.a0(), cos_coeffs, sin_coeffs, m)?;
    let body = if body.max_rho() > rmax {
        body.scaled(rmax / body.max_rho() * (1.0 - 1e-12))?
    } else {
        body
    };
    if body.min_rho() > r1 && body.max_rho() <= rmax && body.is_convex() {
        Ok(Some(body))
    } else {
        Ok(None)
    }
}
