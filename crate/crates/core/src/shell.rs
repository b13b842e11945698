//! Closed-form spectral data of spherical shells `A_{R1,R2}` in any
//! dimension: the first eigenvalue and eigenfunction of the mixed
//! Steklov-Dirichlet problem, the explicit volume upper bound, the
//! critical comparison radius `r̄`, and the profile function whose
//! convexity window `[α₋, α₊]` powers the Jensen step of the shell
//! comparison.
//!
//! Logs and powers of radius ratios are evaluated through
//! `log1p`/`expm1` forms so thin shells (`R2/R1` near 1) lose no
//! precision to cancellation.

use crate::error::{Error, Result};
use crate::math;

/// A spherical shell `A_{R1,R2} = { R1 < |x| < R2 }` in dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellSpec {
    n: u32,
    r1: f64,
    r2: f64,
}

impl ShellSpec {
    /// Validates `n >= 2` and `0 < R1 < R2`.
    pub fn new(n: u32, r1: f64, r2: f64) -> Result<Self> {
        if n < 2 || !(r1 > 0.0) || !(r2 > r1) || !r2.is_finite() {
            return Err(Error::InvalidShell { n, r1, r2 });
        }
        Ok(ShellSpec { n, r1, r2 })
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn inner_radius(&self) -> f64 {
        self.r1
    }

    pub fn outer_radius(&self) -> f64 {
        self.r2
    }

    /// First Steklov-Dirichlet eigenvalue of the shell:
    /// `1/(R2 ln(R2/R1))` in 2D, `(n-2)/(R2 [(R2/R1)^{n-2} - 1])` for n ≥ 3.
    pub fn sigma1(&self) -> f64 {
        if self.n == 2 {
            1.0 / (self.r2 * math::ln_ratio(self.r2, self.r1))
        } else {
            let p = (self.n - 2) as f64;
            p / (self.r2 * math::pow_ratio_minus_one(self.r2, self.r1, p))
        }
    }

    /// First eigenfunction `w` at radius `r`: radially symmetric,
    /// vanishing at `R1`, strictly increasing in `r`.
    ///
    /// `w` does not depend on the outer radius, so any `r >= R1` is
    /// admissible (the harness evaluates it on boundaries beyond `R2`).
    pub fn eigenfunction(&self, r: f64) -> Result<f64> {
        if !(r >= self.r1) {
            return Err(Error::RadiusBelowInner { r, r1: self.r1 });
        }
        Ok(if self.n == 2 {
            math::ln_ratio(r, self.r1)
        } else {
            // 1/R1^{n-2} - 1/r^{n-2} = ((r/R1)^{n-2} - 1) / r^{n-2}
            let p = (self.n - 2) as f64;
            math::pow_ratio_minus_one(r, self.r1, p) / math::powf(r, p)
        })
    }

    /// `∫_A |∇w|² dx` in closed form: `2π ln(R2/R1)` in 2D and
    /// `(n-2) n ω_n (R1^{2-n} - R2^{2-n})` for n ≥ 3.
    pub fn gradient_energy(&self) -> f64 {
        if self.n == 2 {
            math::TAU * math::ln_ratio(self.r2, self.r1)
        } else {
            let p = (self.n - 2) as f64;
            let surface_coeff = self.n as f64 * unit_ball_volume(self.n);
            // R1^{2-n} - R2^{2-n} = (1 - (R1/R2)^{n-2}) / R1^{n-2}
            let diff = -math::pow_ratio_minus_one(self.r1, self.r2, p) / math::powf(self.r1, p);
            p * surface_coeff * diff
        }
    }

    /// `∫_{∂B_{R2}} w² dH^{n-1} = n ω_n R2^{n-1} w(R2)²`.
    pub fn outer_boundary_mass(&self) -> f64 {
        let w = self.eigenfunction(self.r2).expect("r2 >= r1 by construction");
        let surface = self.n as f64 * unit_ball_volume(self.n) * math::powf(self.r2, (self.n - 1) as f64);
        surface * w * w
    }

    /// Scale factor `c` such that `c·w` has unit boundary mass on `∂B_{R2}`.
    pub fn eigenfunction_normalization(&self) -> f64 {
        1.0 / math::sqrt(self.outer_boundary_mass())
    }

    /// The same shell scaled by `t > 0`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        ShellSpec::new(self.n, t * self.r1, t * self.r2)
    }
}

/// Volume of the unit ball in `R^n`, by the recurrence
/// `ω_n = ω_{n-2} · 2π/n` with `ω_1 = 2`, `ω_2 = π`.
pub fn unit_ball_volume(n: u32) -> f64 {
    assert!(n >= 1, "dimension must be at least 1");
    let mut v = if n % 2 == 0 { math::PI } else { 2.0 };
    let mut k = 2 - n % 2;
    while k < n {
        k += 2;
        v *= math::TAU / k as f64;
    }
    v
}

/// Explicit upper bound for `σ₁` at fixed hole radius and volume:
/// `C(n, R1, V) · V^{1/n}` with
/// `C = 2 / (n ω_n^{1/n} ((V/(2ω_n) + R1^n)^{1/n} - R1)²)`.
pub fn upper_bound_volume(n: u32, r1: f64, volume: f64) -> Result<f64> {
    if n < 2 || !(r1 > 0.0) {
        return Err(Error::InvalidShell { n, r1, r2: f64::INFINITY });
    }
    if !(volume > 0.0) {
        return Err(Error::NonPositiveVolume { volume });
    }
    let nf = n as f64;
    let omega = unit_ball_volume(n);
    // (V/(2w) + R1^n)^{1/n} - R1 = R1 expm1(log1p(V/(2w R1^n))/n)
    let ratio = volume / (2.0 * omega * math::powf(r1, nf));
    let gap = r1 * math::expm1(math::log1p(ratio) / nf);
    let c = 2.0 / (nf * math::powf(omega, 1.0 / nf) * gap * gap);
    Ok(c * math::powf(volume, 1.0 / nf))
}

/// Critical comparison radius `r̄`: the shell comparison is proved for
/// outer bodies contained in `B_r̄`.
///
/// `r̄ = R1 e^{√2}` in 2D and
/// `R1 [((n-1) + (n-2)√(2(n-1)))/(n-1)]^{1/(n-2)}` for n ≥ 3.
///
/// Panics if `n < 2`; callers validate dimensions at the boundary.
pub fn rbar(n: u32, r1: f64) -> f64 {
    assert!(n >= 2, "rbar requires n >= 2");
    if n == 2 {
        r1 * math::exp(math::sqrt(2.0))
    } else {
        let nf = n as f64;
        let bracket = ((nf - 1.0) + (nf - 2.0) * math::sqrt(2.0 * (nf - 1.0))) / (nf - 1.0);
        r1 * math::powf(bracket, 1.0 / (nf - 2.0))
    }
}

/// Convexity window `(α₋, α₊)` of the profile function: `f` is convex
/// on `[α₋ R1^n, α₊ R1^n]`.
///
/// `α± = e^{±2√2}` in 2D; for n ≥ 3 the displayed bracket is raised to
/// `n/(n-2)`, and `α₋` is clamped to 0 whenever the bracket is
/// non-positive (n = 3 gives exactly 0; it is negative for n ≥ 4, where
/// the fractional power would not be real and the profile argument is
/// positive anyway).
pub fn alpha_pm(n: u32) -> (f64, f64) {
    assert!(n >= 2, "alpha_pm requires n >= 2");
    if n == 2 {
        let two_sqrt2 = 2.0 * math::sqrt(2.0);
        (math::exp(-two_sqrt2), math::exp(two_sqrt2))
    } else {
        let nf = n as f64;
        let root = (nf - 2.0) * math::sqrt(2.0 * (nf - 1.0));
        let plus = ((nf - 1.0) + root) / (nf - 1.0);
        let minus = ((nf - 1.0) - root) / (nf - 1.0);
        let e = nf / (nf - 2.0);
        let alpha_minus = if minus <= 0.0 { 0.0 } else { math::powf(minus, e) };
        (alpha_minus, math::powf(plus, e))
    }
}

/// Profile function of the Jensen step, as a function of the
/// volume-like variable `t` (`t = ρ²` in 2D, `t = ρ^n` for n ≥ 3):
///
/// * n = 2: `f(t) = ln²(√t/R1) √t`
/// * n ≥ 3: `f(t) = (1/R1^{n-2} - 1/t^{(n-2)/n})² t^{(n-1)/n}`
pub fn f_profile(t: f64, n: u32, r1: f64) -> Result<f64> {
    profile_guard(t, n, r1)?;
    let nf = n as f64;
    Ok(if n == 2 {
        // ln(sqrt(t)/R1) = ln(t/R1^2)/2, cancellation-free near t = R1^2
        let u = 0.5 * math::ln_ratio(t, r1 * r1);
        u * u * math::sqrt(t)
    } else {
        // bracket = R1^{2-n} (1 - (R1^n/t)^{(n-2)/n})
        let u = math::ln_ratio(t, math::powf(r1, nf)) / nf;
        let bracket = -math::powf(r1, 2.0 - nf) * math::expm1(-(nf - 2.0) * u);
        bracket * bracket * math::powf(t, (nf - 1.0) / nf)
    })
}

/// Analytic second derivative of [`f_profile`]:
///
/// * n = 2: `f''(t) = (2 - ln²(√t/R1)) / (4 t √t)`
/// * n ≥ 3: `f''(t) = t^{3/n-3} [ R1^{4-2n}/n (1/n - 1) t^{2-4/n}
///   + 2 R1^{2-n}/n (1 - 1/n) t^{1-2/n} + (3/n - 2)(3/n - 1) ]`
///
/// Non-negative exactly on `[α₋ R1^n, α₊ R1^n]`.
pub fn f_second(t: f64, n: u32, r1: f64) -> Result<f64> {
    profile_guard(t, n, r1)?;
    let nf = n as f64;
    Ok(if n == 2 {
        let u = 0.5 * math::ln_ratio(t, r1 * r1);
        (2.0 - u * u) / (4.0 * t * math::sqrt(t))
    } else {
        let term1 = math::powf(r1, 4.0 - 2.0 * nf) / nf * (1.0 / nf - 1.0) * math::powf(t, 2.0 - 4.0 / nf);
        let term2 = 2.0 * math::powf(r1, 2.0 - nf) / nf * (1.0 - 1.0 / nf) * math::powf(t, 1.0 - 2.0 / nf);
        let term3 = (3.0 / nf - 2.0) * (3.0 / nf - 1.0);
        math::powf(t, 3.0 / nf - 3.0) * (term1 + term2 + term3)
    })
}

fn profile_guard(t: f64, n: u32, r1: f64) -> Result<()> {
    if !(t > 0.0) {
        return Err(Error::NonPositiveProfileArgument { t });
    }
    if n < 2 || !(r1 > 0.0) {
        return Err(Error::InvalidShell { n, r1, r2: f64::INFINITY });
    }
    Ok(())
}

/// The explicit bound data for one configuration: the volume upper
/// bound, the critical radius, the convexity window, and whether the
/// body's maximal extent keeps it inside `B_r̄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub sigma_upper_volume: f64,
    pub rbar: f64,
    pub alpha_minus: f64,
    pub alpha_plus: f64,
    pub inside_rbar: bool,
}

impl BoundsReport {
    /// `volume` is the annulus volume `V(Ω)`; `max_extent` the largest
    /// distance from the origin to the outer boundary.
    pub fn evaluate(n: u32, r1: f64, volume: f64, max_extent: f64) -> Result<Self> {
        let sigma_upper_volume = upper_bound_volume(n, r1, volume)?;
        let rb = rbar(n, r1);
        let (alpha_minus, alpha_plus) = alpha_pm(n);
        Ok(BoundsReport {
            sigma_upper_volume,
            rbar: rb,
            alpha_minus,
            alpha_plus,
            inside_rbar: max_extent <= rb,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{E, PI};

    const TAU: f64 = 2.0 * PI;

    /// Independent oracle: Rayleigh quotient of `w` by composite Simpson
    /// quadrature in the radial variable. Never touches `sigma1()`.
    fn rayleigh_quotient_by_radial_quadrature(spec: &ShellSpec) -> f64 {
        let (n, r1, r2) = (spec.dimension(), spec.inner_radius(), spec.outer_radius());
        let nf = n as f64;
        let surface_coeff = nf * unit_ball_volume(n); // H^{n-1}(S^{n-1}) r^{n-1}
        // |grad w|^2 = r^{-2} (n=2) or (n-2)^2 r^{2-2n} (n>=3)
        let grad_sq = |r: f64| -> f64 {
            if n == 2 {
                1.0 / (r * r)
            } else {
                let p = (n - 2) as f64;
                p * p * libm::pow(r, 2.0 - 2.0 * nf)
            }
        };
        let integrand = |r: f64| grad_sq(r) * surface_coeff * libm::pow(r, nf - 1.0);
        let panels = 40_000; // even
        let h = (r2 - r1) / panels as f64;
        let mut sum = integrand(r1) + integrand(r2);
        for i in 1..panels {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * integrand(r1 + i as f64 * h);
        }
        let energy = sum * h / 3.0;
        let w_r2 = spec.eigenfunction(r2).unwrap();
        let mass = surface_coeff * libm::pow(r2, nf - 1.0) * w_r2 * w_r2;
        energy / mass
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn sigma1_closed_forms() {
        let s = ShellSpec::new(2, 1.0, E).unwrap();
        assert!(rel(s.sigma1(), 1.0 / E) < 1e-15);
        let s = ShellSpec::new(3, 1.0, 2.0).unwrap();
        assert!(rel(s.sigma1(), 0.5) < 1e-15);
        let s = ShellSpec::new(2, 1.0, 2.0).unwrap();
        assert!(rel(s.sigma1(), 0.721_347_520_444_481_7) < 1e-15);
    }

    #[test]
    fn sigma1_rejects_bad_specs() {
        assert!(matches!(
            ShellSpec::new(2, 2.0, 1.0),
            Err(Error::InvalidShell { .. })
        ));
        assert!(ShellSpec::new(1, 1.0, 2.0).is_err());
        assert!(ShellSpec::new(2, 0.0, 1.0).is_err());
        assert!(ShellSpec::new(2, -1.0, 1.0).is_err());
        assert!(ShellSpec::new(2, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn sigma1_small_hole_limit() {
        // sigma1 -> 0 as R1 -> 0. In 2D the decay is logarithmic, so even
        // at the smallest representable R1 the value stays above 1e-3;
        // assert the honest scale and strict monotone decay instead.
        let v50 = ShellSpec::new(2, 1e-50, 1.0).unwrap().sigma1();
        assert!(v50 < 1e-2, "sigma1(2, 1e-50, 1) = {v50}");
        let v20 = ShellSpec::new(2, 1e-20, 1.0).unwrap().sigma1();
        let v05 = ShellSpec::new(2, 1e-5, 1.0).unwrap().sigma1();
        assert!(v50 < v20 && v20 < v05);
        // polynomial decay already in 3D
        let v3 = ShellSpec::new(3, 1e-5, 1.0).unwrap().sigma1();
        assert!(v3 < 1e-3, "sigma1(3, 1e-5, 1) = {v3}");
    }

    #[test]
    fn sigma1_matches_radial_quadrature_oracle() {
        let cases = [
            (2, 1.0, E),
            (2, 0.7, 3.1),
            (3, 1.0, 2.0),
            (4, 0.5, 1.9),
            (5, 2.0, 7.5),
            (6, 1.3, 1.9),
        ];
        for (n, r1, r2) in cases {
            let s = ShellSpec::new(n, r1, r2).unwrap();
            let oracle = rayleigh_quotient_by_radial_quadrature(&s);
            assert!(
                rel(s.sigma1(), oracle) < 1e-10,
                "n={n} r1={r1} r2={r2}: {} vs {}",
                s.sigma1(),
                oracle
            );
        }
    }

    #[test]
    fn sigma1_thin_shell_is_cancellation_free() {
        // R2 = 1 + 2^-20 is exactly representable; values frozen from
        // 40-digit arithmetic
        let h = 9.5367431640625e-7;
        let s = ShellSpec::new(2, 1.0, 1.0 + h).unwrap();
        assert!(rel(s.sigma1(), 1_048_575.500_000_397_4) < 1e-14);
        let s = ShellSpec::new(3, 1.0, 1.0 + h).unwrap();
        assert!(rel(s.sigma1(), 1_048_575.000_000_953_7) < 1e-14);
        let s = ShellSpec::new(5, 1.0, 1.0 + h).unwrap();
        assert!(rel(s.sigma1(), 1_048_574.000_002_543_1) < 1e-14);
    }

    #[test]
    fn sigma1_monotone_in_inner_radius() {
        // deterministic pseudo-random triples r1 < q1 < r2
        let mut x = 0.42_f64;
        let mut next = move || {
            x = libm::fmod(x * 9301.0 + 0.49297, 1.0);
            x
        };
        for n in [2u32, 3, 4, 5] {
            for _ in 0..25 {
                let r2 = 0.5 + 4.0 * next();
                let r1 = r2 * (0.05 + 0.6 * next());
                let q1 = r1 + (r2 - r1) * (0.1 + 0.8 * next());
                let lo = ShellSpec::new(n, r1, r2).unwrap().sigma1();
                let hi = ShellSpec::new(n, q1, r2).unwrap().sigma1();
                assert!(hi > lo, "n={n} r1={r1} q1={q1} r2={r2}");
            }
        }
    }

    #[test]
    fn sigma1_scaling_property() {
        for n in [2u32, 3, 5] {
            let base = ShellSpec::new(n, 0.8, 2.9).unwrap();
            for t in [0.1, 2.0, 17.0] {
                let scaled = base.scaled(t).unwrap();
                assert!(
                    rel(scaled.sigma1(), base.sigma1() / t) < 1e-12,
                    "n={n} t={t}"
                );
            }
        }
    }

    #[test]
    fn eigenfunction_values_and_errors() {
        let s = ShellSpec::new(2, 1.0, 2.0).unwrap();
        assert_eq!(s.eigenfunction(1.0).unwrap(), 0.0);
        let s = ShellSpec::new(3, 1.0, 2.0).unwrap();
        assert!(rel(s.eigenfunction(2.0).unwrap(), 0.5) < 1e-15);
        let s = ShellSpec::new(2, 0.5, 2.0).unwrap();
        assert!(rel(s.eigenfunction(E * 0.5).unwrap(), 1.0) < 1e-15);
        assert!(matches!(
            s.eigenfunction(0.49),
            Err(Error::RadiusBelowInner { .. })
        ));
    }

    #[test]
    fn eigenfunction_strictly_increasing() {
        for n in [2u32, 3, 4, 7] {
            let s = ShellSpec::new(n, 0.9, 5.0).unwrap();
            let mut prev = -1.0;
            for i in 0..200 {
                let r = 0.9 + 6.0 * i as f64 / 199.0;
                let w = s.eigenfunction(r).unwrap();
                assert!(w > prev, "n={n} r={r}");
                prev = w;
            }
        }
    }

    #[test]
    fn sigma1_equals_energy_over_boundary_mass() {
        for (n, r1, r2) in [(2, 1.0, E), (3, 1.0, 2.0), (5, 0.4, 1.1)] {
            let s = ShellSpec::new(n, r1, r2).unwrap();
            assert!(rel(s.sigma1(), s.gradient_energy() / s.outer_boundary_mass()) < 1e-14);
        }
        // 2D closed form: 2 pi ln(R2/R1)
        let s = ShellSpec::new(2, 1.0, E).unwrap();
        assert!(rel(s.gradient_energy(), TAU) < 1e-15);
    }

    #[test]
    fn unit_ball_volumes() {
        let expected = [
            (1, 2.0),
            (2, PI),
            (3, 4.188_790_204_786_391),
            (4, 4.934_802_200_544_679),
            (5, 5.263_789_013_914_324),
        ];
        for (n, v) in expected {
            assert!(rel(unit_ball_volume(n), v) < 1e-14, "n={n}");
        }
    }

    #[test]
    fn upper_bound_dominates_shell_values() {
        // equal-volume comparisons
        let b = upper_bound_volume(2, 1.0, PI * (E * E - 1.0)).unwrap();
        assert!(rel(b, 2.301_179_263_690_705_7) < 1e-12);
        assert!(b >= ShellSpec::new(2, 1.0, E).unwrap().sigma1());
        let v3 = 4.0 * PI / 3.0 * 7.0;
        let b3 = upper_bound_volume(3, 1.0, v3).unwrap();
        assert!(rel(b3, 3.009_502_063_787_545_4) < 1e-12);
        assert!(b3 >= 0.5);
    }

    #[test]
    fn upper_bound_vanishes_for_large_volume() {
        let mut prev = f64::INFINITY;
        for v in [1e2, 1e4, 1e6, 1e8, 1e10] {
            let b = upper_bound_volume(2, 1.0, v).unwrap();
            assert!(b < prev);
            prev = b;
        }
        assert!(prev < 1e-4);
        assert!(matches!(
            upper_bound_volume(2, 1.0, 0.0),
            Err(Error::NonPositiveVolume { .. })
        ));
    }

    #[test]
    fn rbar_values() {
        assert!(rel(rbar(2, 1.0), 4.113_250_378_782_927_5) < 1e-14);
        assert!(rel(rbar(3, 1.0), 2.0) < 1e-14);
        assert!(rel(rbar(4, 1.0), 1.622_650_042_940_699) < 1e-14);
        assert!(rel(rbar(2, 0.25), 0.25 * 4.113_250_378_782_927_5) < 1e-14);
    }

    #[test]
    fn alpha_values() {
        let (am, ap) = alpha_pm(2);
        assert!(rel(am, 0.059_105_746_561_956_24) < 1e-13);
        assert!(rel(ap, 16.918_828_678_557_897) < 1e-13);
        let (am, ap) = alpha_pm(3);
        assert_eq!(am, 0.0);
        assert!(rel(ap, 8.0) < 1e-13);
        let (am, ap) = alpha_pm(4);
        assert_eq!(am, 0.0);
        assert!(rel(ap, 6.932_652_990_377_571) < 1e-13);
        let (am, ap) = alpha_pm(5);
        assert_eq!(am, 0.0);
        assert!(am < ap);
    }

    #[test]
    fn rbar_consistent_with_alpha_plus() {
        for n in 2..=8u32 {
            for r1 in [0.3, 1.0, 2.7] {
                let lhs = libm::pow(rbar(n, r1), n as f64);
                let rhs = alpha_pm(n).1 * libm::pow(r1, n as f64);
                assert!(rel(lhs, rhs) < 1e-12, "n={n} r1={r1}");
            }
        }
    }

    #[test]
    fn profile_zero_at_inner_volume_2d() {
        let v = f_profile(1.0, 2, 1.0).unwrap();
        assert_eq!(v, 0.0);
        let v = f_profile(0.25, 2, 0.5).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn profile_rejects_nonpositive_argument() {
        assert!(matches!(
            f_profile(0.0, 2, 1.0),
            Err(Error::NonPositiveProfileArgument { .. })
        ));
        assert!(f_second(-1.0, 3, 1.0).is_err());
    }

    #[test]
    fn second_derivative_vanishes_at_window_edge() {
        for n in [2u32, 3, 4, 5] {
            let ap = alpha_pm(n).1;
            let t = ap * libm::pow(1.0, n as f64);
            let v = f_second(t, n, 1.0).unwrap();
            assert!(v.abs() < 1e-10, "n={n}: f''(alpha+ R1^n) = {v}");
        }
    }

    #[test]
    fn second_derivative_negative_beyond_window() {
        // n=3, t = 1.5 alpha+ R1^3, checked against a central difference
        let t = 1.5 * alpha_pm(3).1;
        let analytic = f_second(t, 3, 1.0).unwrap();
        assert!(analytic < 0.0);
        let h = 1e-5 * t;
        let fd = (f_profile(t + h, 3, 1.0).unwrap() - 2.0 * f_profile(t, 3, 1.0).unwrap()
            + f_profile(t - h, 3, 1.0).unwrap())
            / (h * h);
        assert!(rel(analytic, fd) < 1e-4, "{analytic} vs {fd}");
    }

    #[test]
    fn second_derivative_matches_finite_differences_inside_window() {
        for n in [2u32, 3, 4, 5] {
            let (am, ap) = alpha_pm(n);
            let r1 = 1.3;
            let r1n = libm::pow(r1, n as f64);
            let (lo, hi) = (am * r1n, ap * r1n);
            for i in 1..=40 {
                let t = lo + (hi - lo) * i as f64 / 40.0;
                let analytic = f_second(t, n, r1).unwrap();
                let h = 1e-5 * t;
                let f_t = f_profile(t, n, r1).unwrap();
                let fd = (f_profile(t + h, n, r1).unwrap() - 2.0 * f_t
                    + f_profile(t - h, n, r1).unwrap())
                    / (h * h);
                // the difference quotient carries rounding noise of
                // order eps·|f|/h², which dominates near the zeros of f''
                let noise = 256.0 * f64::EPSILON * (1.0 + f_t.abs()) / (h * h);
                assert!(
                    (analytic - fd).abs() < 1e-4 * analytic.abs() + noise,
                    "n={n} t={t}: {analytic} vs {fd}"
                );
            }
        }
    }

    #[test]
    fn bounds_report_flags_rbar() {
        let r = BoundsReport::evaluate(2, 1.0, PI * 3.0, 2.0).unwrap();
        assert!(r.inside_rbar);
        assert!(r.alpha_minus < r.alpha_plus);
        let r = BoundsReport::evaluate(2, 1.0, PI * 3.0, 5.0).unwrap();
        assert!(!r.inside_rbar);
    }
}
