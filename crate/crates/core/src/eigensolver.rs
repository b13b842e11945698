//! Rayleigh-Ritz computation of the first Steklov-Dirichlet eigenvalue
//! on 2D annular domains.
//!
//! The trial space consists of functions that are exactly harmonic on
//! the punctured plane and vanish identically on the inner circle:
//!
//! ```text
//! φ₀ = ln(r/R1),   φ_k^{c,s} = ((r/R1)^k - (R1/r)^k)·{cos kθ, sin kθ}
//! ```
//!
//! Because the PDE and the inner boundary condition hold exactly, the
//! Dirichlet energy reduces to a boundary integral over `∂Ω₀` by
//! Green's identity, so no 2D meshing is needed anywhere:
//! `A_ij = ∫_{∂Ω₀} φ_i ∂φ_j/∂ν ds`, `B_ij = ∫_{∂Ω₀} φ_i φ_j ds`, and
//! `σ₁` is the smallest eigenvalue of the symmetric-definite pencil
//! `(A, B)`. On shells the trial space contains the true eigenfunction
//! and the method is exact at any order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::AnnularDomain2D;
use crate::linalg::{self, Matrix};
use crate::math;

/// Default maximum angular order of the trial space.
pub const DEFAULT_ORDERS: usize = 24;
/// Default number of boundary quadrature points.
pub const DEFAULT_QUADRATURE: usize = 512;
/// Boundary mass matrices with a larger condition number are rejected.
pub const CONDITION_LIMIT: f64 = 1e12;

/// Harmonic trial functions vanishing on `|x| = R1`, with per-order
/// normalization scales. Basis size is `2N+1`: index 0 is the
/// logarithmic mode, indices `2k-1`/`2k` the cosine/sine modes of
/// order `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicTrialBasis {
    r1: f64,
    max_order: usize,
    scale: Vec<f64>,
}

impl HarmonicTrialBasis {
    /// Basis with unit scales.
    pub fn new(r1: f64, max_order: usize) -> Self {
        HarmonicTrialBasis {
            r1,
            max_order,
            scale: vec![1.0; max_order + 1],
        }
    }

    pub fn inner_radius(&self) -> f64 {
        self.r1
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Number of trial functions, `2N + 1`.
    pub fn len(&self) -> usize {
        2 * self.max_order + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Per-order normalization constants (length `N + 1`).
    pub fn scales(&self) -> &[f64] {
        &self.scale
    }

    fn order_of(&self, index: usize) -> usize {
        (index + 1) / 2
    }

    /// Value and Cartesian gradient of basis function `index` at `point`.
    pub fn eval(&self, index: usize, point: [f64; 2]) -> Result<(f64, [f64; 2])> {
        if index >= self.len() {
            return Err(Error::BasisIndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        let [x, y] = point;
        let r = math::hypot(x, y);
        if r == 0.0 {
            return Err(Error::OriginEvaluation);
        }
        let (er, et) = ([x / r, y / r], [-y / r, x / r]);
        if index == 0 {
            let s = self.scale[0];
            let value = s * math::ln_ratio(r, self.r1);
            let dr = s / r;
            return Ok((value, [dr * er[0], dr * er[1]]));
        }
        let k = self.order_of(index);
        let s = self.scale[k];
        let kf = k as f64;
        let q = math::powi(r / self.r1, k as i32);
        let qi = math::powi(self.r1 / r, k as i32);
        let g = q - qi;
        let gp = kf / r * (q + qi);
        let theta = math::atan2(y, x);
        let (c, sn) = (math::cos(kf * theta), math::sin(kf * theta));
        let (value, d_r, d_t_over_r) = if index % 2 == 1 {
            // cosine mode
            (s * g * c, s * gp * c, -s * kf * g * sn / r)
        } else {
            (s * g * sn, s * gp * sn, s * kf * g * c / r)
        };
        Ok((
            value,
            [
                d_r * er[0] + d_t_over_r * et[0],
                d_r * er[1] + d_t_over_r * et[1],
            ],
        ))
    }
}

/// Discretized Rayleigh quotient: stiffness `A` (Dirichlet energy via
/// the boundary form) and boundary mass `B` on the scaled trial basis.
#[derive(Debug, Clone)]
pub struct SymmetricPencil {
    a: Matrix,
    b: Matrix,
    basis: HarmonicTrialBasis,
    quadrature: usize,
    b_condition: f64,
    b_smallest_eigenvalue: f64,
    asymmetry: f64,
}

impl SymmetricPencil {
    pub fn stiffness(&self) -> &Matrix {
        &self.a
    }

    pub fn boundary_mass(&self) -> &Matrix {
        &self.b
    }

    pub fn basis(&self) -> &HarmonicTrialBasis {
        &self.basis
    }

    pub fn quadrature_size(&self) -> usize {
        self.quadrature
    }

    /// Condition number of `B` (ratio of extreme eigenvalues).
    pub fn b_condition(&self) -> f64 {
        self.b_condition
    }

    /// Smallest eigenvalue of `B`; positive iff `B` is definite.
    pub fn b_smallest_eigenvalue(&self) -> f64 {
        self.b_smallest_eigenvalue
    }

    /// Relative Frobenius asymmetry `‖A - Aᵀ‖/‖A‖` of the stiffness
    /// before symmetrization: a quadrature-quality diagnostic, since
    /// the continuum form is exactly symmetric.
    pub fn asymmetry(&self) -> f64 {
        self.asymmetry
    }
}

/// Solver output: the eigenvalue, the minimizing coefficients in the
/// scaled basis (unit boundary mass, non-negative boundary trace), the
/// discretization parameters and conditioning diagnostics.
#[derive(Debug, Clone)]
pub struct EigenSolveResult {
    pub sigma1: f64,
    pub coeffs: Vec<f64>,
    pub orders: usize,
    pub quadrature: usize,
    pub b_condition: f64,
    pub residual: f64,
    basis: HarmonicTrialBasis,
}

impl EigenSolveResult {
    pub fn basis(&self) -> &HarmonicTrialBasis {
        &self.basis
    }

    /// Trace of the minimizer on `∂Ω₀` at `samples` uniform angles.
    pub fn boundary_trace(&self, domain: &AnnularDomain2D, samples: usize) -> Vec<f64> {
        (0..samples)
            .map(|j| {
                let theta = math::TAU * j as f64 / samples as f64;
                let p = domain.outer().boundary_point(theta);
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * self.basis.eval(i, p).expect("boundary point off origin").0)
                    .sum()
            })
            .collect()
    }
}

/// Assemble the Rayleigh-Ritz pencil for a domain at angular order `n`
/// with `m` boundary quadrature points (`m >= max(8n, 64)`).
///
/// `A` uses the flux form `ρ ∂_r φ - (ρ'/ρ) ∂_θ φ` of `∂φ/∂ν ds/dθ` and
/// is symmetrized after assembly; per-order scales are chosen so
/// `diag(B) ≈ 1`. Fails when `B` has condition beyond
/// [`CONDITION_LIMIT`] (remedy: lower `n`).
pub fn assemble_pencil(domain: &AnnularDomain2D, n: usize, m: usize) -> Result<SymmetricPencil> {
    let required = (8 * n).max(64);
    if m < required {
        return Err(Error::QuadratureTooCoarse { m, required });
    }
    let r1 = domain.inner_radius();
    let dim = 2 * n + 1;
    let dtheta = math::TAU / m as f64;

    // values[i][j], fluxes[i][j] on the quadrature grid
    let mut values = vec![vec![0.0; m]; dim];
    let mut fluxes = vec![vec![0.0; m]; dim];
    let mut weights = vec![0.0; m]; // |p'(θ)| = sqrt(ρ² + ρ'²)
    for j in 0..m {
        let theta = math::TAU * j as f64 / m as f64;
        let (rho, drho, _) = domain.outer().eval_rho(theta);
        weights[j] = math::hypot(rho, drho);
        values[0][j] = math::ln_ratio(rho, r1);
        fluxes[0][j] = 1.0; // ρ · (1/ρ)
        let ratio = rho / r1;
        let (c1, s1) = (math::cos(theta), math::sin(theta));
        let (mut ck, mut sk) = (1.0, 0.0);
        let mut q = 1.0;
        let mut qi = 1.0;
        for k in 1..=n {
            let (cn, snn) = (ck * c1 - sk * s1, sk * c1 + ck * s1);
            ck = cn;
            sk = snn;
            q *= ratio;
            qi /= ratio;
            let kf = k as f64;
            let g = q - qi;
            let gp = kf / rho * (q + qi);
            // flux = ρ g' ang - (ρ'/ρ) ∂θ(g ang)
            values[2 * k - 1][j] = g * ck;
            fluxes[2 * k - 1][j] = rho * gp * ck + drho / rho * kf * g * sk;
            values[2 * k][j] = g * sk;
            fluxes[2 * k][j] = rho * gp * sk - drho / rho * kf * g * ck;
        }
    }

    let mut a = Matrix::zeros(dim);
    let mut b = Matrix::zeros(dim);
    for i in 0..dim {
        for l in 0..dim {
            let mut sa = 0.0;
            let mut sb = 0.0;
            for j in 0..m {
                sa += values[i][j] * fluxes[l][j];
                sb += values[i][j] * values[l][j] * weights[j];
            }
            a.set(i, l, sa * dtheta);
            b.set(i, l, sb * dtheta);
        }
    }
    let asymmetry = a.asymmetry_norm() / a.norm().max(f64::MIN_POSITIVE);
    a.symmetrize();
    b.symmetrize();

    // per-order scales: diag(B) ≈ 1 (cos and sine of one order share a scale)
    let mut order_scale = vec![1.0; n + 1];
    order_scale[0] = 1.0 / math::sqrt(b.get(0, 0));
    for k in 1..=n {
        let mean = 0.5 * (b.get(2 * k - 1, 2 * k - 1) + b.get(2 * k, 2 * k));
        order_scale[k] = 1.0 / math::sqrt(mean);
    }
    let per_element: Vec<f64> = (0..dim).map(|i| order_scale[(i + 1) / 2]).collect();
    a.scale_symmetric(&per_element);
    b.scale_symmetric(&per_element);

    let eig_b = linalg::symmetric_eigen(&b);
    let b_min = eig_b.values[0];
    let b_max = eig_b.values[dim - 1];
    let b_condition = if b_min > 0.0 {
        b_max / b_min
    } else {
        f64::INFINITY
    };
    if !(b_condition <= CONDITION_LIMIT) {
        return Err(Error::IllConditionedBoundaryMass {
            condition: b_condition,
        });
    }

    let basis = HarmonicTrialBasis {
        r1,
        max_order: n,
        scale: order_scale,
    };
    Ok(SymmetricPencil {
        a,
        b,
        basis,
        quadrature: m,
        b_condition,
        b_smallest_eigenvalue: b_min,
        asymmetry,
    })
}

/// Smallest eigenvalue of the assembled pencil: factor `B = LLᵀ`,
/// reduce to the standard symmetric problem `L⁻¹AL⁻ᵀ`, and solve by
/// Jacobi iteration. Coefficients are normalized to unit boundary mass
/// with a non-negative boundary trace.
pub fn solve_sigma1(domain: &AnnularDomain2D, n: usize, m: usize) -> Result<EigenSolveResult> {
    let pencil = assemble_pencil(domain, n, m)?;
    solve_pencil(domain, pencil)
}

/// As [`solve_sigma1`] with the default discretization.
pub fn solve_sigma1_default(domain: &AnnularDomain2D) -> Result<EigenSolveResult> {
    solve_sigma1(domain, DEFAULT_ORDERS, DEFAULT_QUADRATURE)
}

fn solve_pencil(domain: &AnnularDomain2D, pencil: SymmetricPencil) -> Result<EigenSolveResult> {
    let chol = linalg::cholesky(&pencil.b).ok_or(Error::IllConditionedBoundaryMass {
        condition: pencil.b_condition,
    })?;
    let c = chol.reduce(&pencil.a);
    let eig = linalg::symmetric_eigen(&c);
    let sigma1 = eig.values[0];
    let mut coeffs = chol.back_solve(&eig.vectors[0]);

    // orient: the first eigenfunction has one sign on the outer boundary
    let samples = 64.min(pencil.quadrature);
    let result_probe = EigenSolveResult {
        sigma1,
        coeffs: coeffs.clone(),
        orders: pencil.basis.max_order,
        quadrature: pencil.quadrature,
        b_condition: pencil.b_condition,
        residual: 0.0,
        basis: pencil.basis.clone(),
    };
    let trace_sum: f64 = result_probe.boundary_trace(domain, samples).iter().sum();
    if trace_sum < 0.0 {
        for c in &mut coeffs {
            *c = -*c;
        }
    }

    let ax = pencil.a.mul_vec(&coeffs);
    let bx = pencil.b.mul_vec(&coeffs);
    let residual = math::sqrt(
        ax.iter()
            .zip(&bx)
            .map(|(a, b)| {
                let r = a - sigma1 * b;
                r * r
            })
            .sum(),
    );

    Ok(EigenSolveResult {
        sigma1,
        coeffs,
        orders: pencil.basis.max_order,
        quadrature: pencil.quadrature,
        b_condition: pencil.b_condition,
        residual,
        basis: pencil.basis,
    })
}
