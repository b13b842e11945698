//! Every inequality of the shell comparison theory as an executable
//! check: the main comparison `σ₁(Ω) ≤ σ₁(A_{R1,R2})` for convex outer
//! bodies inside the critical ball, its proof chain (the rearrangement
//! step for gradient energies and the Jensen step for boundary
//! masses), the explicit upper bounds, and the perimeter-constraint
//! counterexample.
//!
//! All inequality flags use relative tolerance [`REL_TOL`] against the
//! larger side; solver discretization error is budgeted separately (the
//! default discretization converges well below it).

use alloc::vec::Vec;

use crate::eigensolver::{self, solve_sigma1};
use crate::error::{Error, Result};
use crate::geometry::{body_from_ellipse, random_convex_body, AnnularDomain2D, StarBody2D};
use crate::math;
use crate::shell::{self, BoundsReport, ShellSpec};

/// Relative tolerance for all inequality assertions.
pub const REL_TOL: f64 = 1e-8;

/// Radius of the ball with the same area as the outer body: the
/// comparison shell `A_{R1,R2}` then has the same annulus volume as the
/// domain (both sides subtract the same hole).
pub fn equivalent_radius_volume(domain: &AnnularDomain2D) -> f64 {
    math::sqrt(domain.outer().volume() / math::PI)
}

/// The comparison shell: same hole, same annulus volume.
pub fn comparison_shell(domain: &AnnularDomain2D) -> ShellSpec {
    ShellSpec::new(2, domain.inner_radius(), equivalent_radius_volume(domain))
        .expect("equivalent radius exceeds the hole radius by containment")
}

/// Dirichlet energy `∫_Ω |∇w|² dx` of the shell eigenfunction over the
/// annular domain, in the closed radial form `∫ ln(ρ₀(θ)/R1) dθ`
/// (only a θ-quadrature remains).
pub fn gradient_energy(domain: &AnnularDomain2D) -> f64 {
    let r1 = domain.inner_radius();
    let body = domain.outer();
    let m = body.quadrature_size();
    let mut sum = 0.0;
    for j in 0..m {
        let theta = math::TAU * j as f64 / m as f64;
        let (rho, _, _) = body.eval_rho(theta);
        sum += math::ln_ratio(rho, r1);
    }
    sum * math::TAU / m as f64
}

/// Boundary mass `D(K) = ∫_{∂K} w² ds` of the shell eigenfunction with
/// hole radius `r1`. Requires the hole strictly inside the body.
pub fn d_functional(body: &StarBody2D, r1: f64) -> Result<f64> {
    if !(r1 > 0.0) || body.min_rho() <= r1 {
        return Err(Error::InnerBallNotContained {
            min_rho: body.min_rho(),
            r1,
        });
    }
    let m = body.quadrature_size();
    let mut sum = 0.0;
    for j in 0..m {
        let theta = math::TAU * j as f64 / m as f64;
        let (rho, drho, _) = body.eval_rho(theta);
        let w = math::ln_ratio(rho, r1);
        sum += w * w * math::hypot(rho, drho);
    }
    Ok(sum * math::TAU / m as f64)
}

/// Rayleigh quotient of the shell eigenfunction on the domain: an upper
/// bound for `σ₁(Ω)` since `w` is admissible.
pub fn rayleigh_w(domain: &AnnularDomain2D) -> f64 {
    let d = d_functional(domain.outer(), domain.inner_radius())
        .expect("domain guarantees containment");
    gradient_energy(domain) / d
}

/// One row of an inequality sweep: every quantity entering the main
/// comparison and its proof steps, plus the pass flags.
///
/// The flags are pure functions of the numeric fields at tolerance
/// [`REL_TOL`]; see [`VerificationRecord::recompute_passes`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub seed: u64,
    pub r1: f64,
    pub volume_omega: f64,
    pub r2_equiv: f64,
    pub sigma1_num: f64,
    pub sigma1_shell: f64,
    pub rayleigh_w: f64,
    pub grad_energy_omega: f64,
    pub grad_energy_shell: f64,
    pub d_omega: f64,
    pub d_shell: f64,
    pub inside_rbar: bool,
    pub pass_main: bool,
    pub pass_hl: bool,
    pub pass_key: bool,
}

impl VerificationRecord {
    /// The pass flags recomputed from the numeric fields.
    pub fn recompute_passes(&self) -> (bool, bool, bool) {
        (
            self.sigma1_num <= self.sigma1_shell * (1.0 + REL_TOL),
            self.grad_energy_omega <= self.grad_energy_shell * (1.0 + REL_TOL),
            self.d_omega >= self.d_shell * (1.0 - REL_TOL),
        )
    }
}

/// Verify the main comparison and its proof steps on one domain.
/// The outer body must be convex; `seed` only labels the record.
pub fn check_main(domain: &AnnularDomain2D, seed: u64) -> Result<VerificationRecord> {
    check_main_with(domain, seed, eigensolver::DEFAULT_ORDERS, eigensolver::DEFAULT_QUADRATURE)
}

/// [`check_main`] with explicit discretization parameters.
pub fn check_main_with(
    domain: &AnnularDomain2D,
    seed: u64,
    orders: usize,
    quadrature: usize,
) -> Result<VerificationRecord> {
    if !domain.outer().is_convex() {
        return Err(Error::NonConvexOuterBody);
    }
    let r1 = domain.inner_radius();
    let solve = solve_sigma1(domain, orders, quadrature)?;
    let shell = comparison_shell(domain);
    let grad_omega = gradient_energy(domain);
    let grad_shell = shell.gradient_energy();
    let d_omega = d_functional(domain.outer(), r1)?;
    let d_shell = shell.outer_boundary_mass();
    let mut record = VerificationRecord {
        seed,
        r1,
        volume_omega: domain.annulus_volume(),
        r2_equiv: shell.outer_radius(),
        sigma1_num: solve.sigma1,
        sigma1_shell: shell.sigma1(),
        rayleigh_w: grad_omega / d_omega,
        grad_energy_omega: grad_omega,
        grad_energy_shell: grad_shell,
        d_omega,
        d_shell,
        inside_rbar: domain.outer().max_rho() <= shell::rbar(2, r1),
        pass_main: false,
        pass_hl: false,
        pass_key: false,
    };
    let (main, hl, key) = record.recompute_passes();
    record.pass_main = main;
    record.pass_hl = hl;
    record.pass_key = key;
    Ok(record)
}

/// Sweep seeded random convex bodies in the `R1`/`rmax` sandwich and
/// verify every inequality on each. Records are ordered by seed and
/// each is a pure function of its seed.
///
/// Eccentric bodies can push the boundary mass matrix past the solver's
/// condition limit at the requested order; the sweep then follows the
/// solver's recommendation and retries at a lower order. The inequality
/// flags are insensitive to the order: the discrete eigenvalue bounds
/// `σ₁(Ω)` from above at every order, and `w` lies in the trial space
/// already at order zero.
pub fn verify_main_sweep(
    base_seed: u64,
    samples: usize,
    r1: f64,
    rmax: f64,
    orders: usize,
    quadrature: usize,
) -> Result<Vec<VerificationRecord>> {
    let mut records = Vec::with_capacity(samples);
    for i in 0..samples {
        let seed = base_seed.wrapping_add(i as u64);
        let body = random_convex_body(seed, r1, rmax, quadrature.max(512))?;
        let domain = AnnularDomain2D::new(r1, body)?;
        let mut n = orders;
        let record = loop {
            match check_main_with(&domain, seed, n, quadrature) {
                Err(Error::IllConditionedBoundaryMass { .. }) if n > 0 => n = n * 2 / 3,
                other => break other?,
            }
        };
        records.push(record);
    }
    Ok(records)
}

/// Exploratory probe of the Jensen-step inequality for bodies allowed
/// to leave the critical ball (`rmax = 3 r̄`): records the sign of
/// `D(Ω₀) - D(shell)` without asserting anything, since the comparison
/// is only proved inside `B_r̄`.
pub fn check_key_outside_rbar(
    samples: usize,
    base_seed: u64,
    r1: f64,
) -> Result<Vec<VerificationRecord>> {
    verify_main_sweep(
        base_seed,
        samples,
        r1,
        3.0 * shell::rbar(2, r1),
        eigensolver::DEFAULT_ORDERS,
        eigensolver::DEFAULT_QUADRATURE,
    )
}

/// Previously reported boundary-mass values for the perimeter-matched
/// configuration (`R1 = 1e-5`, `b = 1.1`): the figure attributed to the
/// ellipse and the figure attributed to the comparison shell. Direct
/// recomputation reproduces both numbers to all printed digits but with
/// the attributions interchanged; see [`CounterexampleReport`].
pub const REFERENCE_D_ELLIPSE: f64 = 832.820208;
pub const REFERENCE_D_SHELL: f64 = 828.919156;

/// Boundary-mass comparison under a perimeter constraint.
///
/// The ellipse has semi-axis `b` given and `a` chosen so the excess
/// perimeter formula `2π√((a²+b²)/2)` matches the outer perimeter `2π`
/// of the unit-radius comparison shell. In the volume-matched theory
/// the Jensen step gives `D(Ω₀) ≥ D(shell)`; under the perimeter
/// matching the direction reverses (`d_ellipse < d_shell`), which is
/// exactly why the shell cannot be proved maximal this way once the
/// volume constraint is traded for a perimeter constraint.
///
/// `d_shell_closed_form` is `2π ln²(1/R1)`, the exact value of
/// `d_shell`; it coincides with [`REFERENCE_D_ELLIPSE`] to all printed
/// digits while the computed ellipse integral coincides with
/// [`REFERENCE_D_SHELL`], so the two reference figures carry swapped
/// attributions (`references_swapped`). The reported inequality between
/// the two printed *numbers* is therefore reproduced with the roles of
/// the two bodies interchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub r1: f64,
    pub a: f64,
    pub b: f64,
    pub d_ellipse: f64,
    pub d_shell: f64,
    pub d_shell_closed_form: f64,
    /// `d_ellipse - d_shell` (negative: the Jensen direction fails).
    pub difference: f64,
    /// The perimeter-constrained Jensen direction `D(Ω₀) ≥ D(shell)`
    /// fails strictly.
    pub key_inequality_violated: bool,
    pub reference_d_ellipse: f64,
    pub reference_d_shell: f64,
    /// Computed values match the references with attributions
    /// interchanged (to the references' printed precision).
    pub references_swapped: bool,
    /// `D(Ω₀)` under the alternative perimeter reading that matches the
    /// total annulus perimeter `2π(1 + R1)` instead of the outer circle
    /// alone; differs from `d_ellipse` below reporting precision.
    pub d_ellipse_total_perimeter: f64,
}

/// Run the perimeter-constraint comparison for hole radius `r1` and
/// ellipse semi-axis `b` (defaults `1e-5` and `1.1`).
pub fn counterexample_ellipse(r1: f64, b: f64) -> Result<CounterexampleReport> {
    let two = 2.0;
    if !(b > 0.0) || b * b >= two {
        return Err(Error::NonPositiveAxis { a: two - b * b, b });
    }
    if !(r1 > 0.0) {
        return Err(Error::InnerBallNotContained { min_rho: 1.0, r1 });
    }
    let m = 1024;
    let a = math::sqrt(two - b * b);
    let ellipse = body_from_ellipse(a, b, m)?;
    let d_ellipse = d_functional(&ellipse, r1)?;
    let shell_body = StarBody2D::circle(1.0, m)?;
    let d_shell = d_functional(&shell_body, r1)?;
    let log = math::ln(1.0 / r1);
    let d_shell_closed_form = math::TAU * log * log;

    // alternative reading: match the total annulus perimeter 2π(1 + R1)
    let p_total = (1.0 + r1) * (1.0 + r1);
    let a_total = math::sqrt(two * p_total - b * b);
    let d_ellipse_total_perimeter = d_functional(&body_from_ellipse(a_total, b, m)?, r1)?;

    let printed_precision = 5e-6; // the references carry six decimals
    let references_swapped = math::abs(d_ellipse - REFERENCE_D_SHELL) < printed_precision
        && math::abs(d_shell - REFERENCE_D_ELLIPSE) < printed_precision;

    Ok(CounterexampleReport {
        r1,
        a,
        b,
        d_ellipse,
        d_shell,
        d_shell_closed_form,
        difference: d_ellipse - d_shell,
        key_inequality_violated: d_ellipse < d_shell * (1.0 - REL_TOL),
        reference_d_ellipse: REFERENCE_D_ELLIPSE,
        reference_d_shell: REFERENCE_D_SHELL,
        references_swapped,
        d_ellipse_total_perimeter,
    })
}

/// Explicit bound verification for one domain: the volume-form bound
/// and the first (fully explicit) member of the perimeter-chain bound,
/// evaluated independently; they coincide algebraically, so agreement
/// is also a consistency check.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsCheckReport {
    pub sigma1_num: f64,
    pub annulus_volume: f64,
    pub volume_bound: f64,
    pub upperp_first_bound: f64,
    pub bounds: BoundsReport,
    pub pass: bool,
}

/// Check `σ₁(Ω) ≤ C(2, R1, V) V^{1/2}` with both displayed evaluations
/// of the explicit bound.
pub fn check_bounds(
    domain: &AnnularDomain2D,
    orders: usize,
    quadrature: usize,
) -> Result<BoundsCheckReport> {
    let r1 = domain.inner_radius();
    let solve = solve_sigma1(domain, orders, quadrature)?;
    let volume = domain.annulus_volume();
    let volume_bound = shell::upper_bound_volume(2, r1, volume)?;
    // first member of the perimeter chain, written out directly:
    // 2 V^{1/2} / (2 π^{1/2} ((V/(2π) + R1²)^{1/2} - R1)²)
    let gap = math::sqrt(volume / math::TAU + r1 * r1) - r1;
    let upperp_first_bound =
        2.0 * math::sqrt(volume) / (2.0 * math::sqrt(math::PI) * gap * gap);
    let bounds = BoundsReport::evaluate(2, r1, volume, domain.outer().max_rho())?;
    let pass = solve.sigma1 <= volume_bound * (1.0 + REL_TOL)
        && solve.sigma1 <= upperp_first_bound * (1.0 + REL_TOL);
    Ok(BoundsCheckReport {
        sigma1_num: solve.sigma1,
        annulus_volume: volume,
        volume_bound,
        upperp_first_bound,
        bounds,
        pass,
    })
}
