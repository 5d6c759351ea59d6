//! Stiefel–Whitney and Pontryagin data of tangent bundles.
//!
//! For `PV_{n,k}` the stable tangent bundle is `nk` copies of the Hopf line
//! bundle, and for `Y_{n,k}` the tensor-square summands have trivial total
//! Stiefel–Whitney class, so in both cases `w = (1 + x)^{nk}` and
//! `w̄ = (1 + x)^{-nk}`, read in `Z2[x]/(x^T)`.

use serde::Serialize;

use crate::cohomology::{cutoff_j, cutoff_n};
use crate::error::{Error, Result};
use crate::gf2::{geometric_inverse_coefficient, TruncatedGF2Poly};
use crate::manifold::{Family, ManifoldId};

/// Formulas behind the class computations for each supported family.
pub fn citations(family: Family) -> &'static [&'static str] {
    match family {
        Family::PV => &[
            "w(PV_{n,k}) = (1+x)^{nk}, from T(PV_{n,k}) ⊕ binom(k+1,2)ε = nk ζ (Lam)",
            "m = max{j < N : binom(nk+j-1, nk-1) odd} is the top power of x in w̄ = (1+x)^{-nk}",
        ],
        Family::Y => &[
            "w(Y_{n,k}) = (1+x)^{nk} and w̄(Y_{n,k}) = (1+x)^{-nk}, since w(ζ_r ⊗ ζ_r) = 1",
            "m = max{j < J : binom(nk+j-1, nk-1) odd}; w̄_{2m}(Y_{n,k}) != 0",
            "p1(TY_{n,k}) = (nk - 2k^2 - 2k) x0^2, and x0^2 != 0 in H^4 for n-2k >= 4 (Gysin sequence)",
        ],
        _ => &[],
    }
}

/// Truncation and degree of `x` for the families with a tangent-class formula.
fn sw_setting(id: ManifoldId, operation: &'static str) -> Result<(usize, u64)> {
    let (n, k) = (id.n(), id.k());
    match id.family() {
        Family::PV => Ok((cutoff_n(n, k) as usize, 1)),
        Family::Y => Ok((cutoff_j(n, k)? as usize, 2)),
        Family::PW => Err(Error::UnsupportedFamily {
            family: id.family(),
            operation,
            reason: "no tangent SW formula for PW",
        }),
        Family::V | Family::W => Err(Error::UnsupportedFamily {
            family: id.family(),
            operation,
            reason: "Stiefel manifolds are stably parallelizable; no polynomial generator to express classes in",
        }),
    }
}

/// Total Stiefel–Whitney class `(1 + x)^{nk}` of `PV_{n,k}` or `Y_{n,k}`.
pub fn total_sw(id: ManifoldId) -> Result<TruncatedGF2Poly> {
    let (t, _) = sw_setting(id, "total Stiefel-Whitney class")?;
    TruncatedGF2Poly::one_plus_x(t).pow(id.nk() as i64)
}

/// Dual class `w̄ = w^{-1}`, by inverting [`total_sw`].
pub fn inverse_sw(id: ManifoldId) -> Result<TruncatedGF2Poly> {
    total_sw(id)?.inverse()
}

/// `m`: the largest `j < T` with `binom(nk + j - 1, nk - 1)` odd, i.e. the top
/// power of `x` in `w̄`. Computed from the closed form, not from [`inverse_sw`].
pub fn dual_top_index(id: ManifoldId) -> Result<u64> {
    let (t, _) = sw_setting(id, "dual top index")?;
    let q = id.nk();
    Ok((0..t as u64)
        .rev()
        .find(|&j| geometric_inverse_coefficient(q, j).is_odd())
        .unwrap_or(0))
}

/// Coefficient of `x_0^2` in `p_1(TY_{n,k})`: `nk - 2k^2 - 2k = k(n - 2k - 2)`.
pub fn p1_coefficient(id: ManifoldId) -> Result<i64> {
    if id.family() != Family::Y {
        return Err(Error::UnsupportedFamily {
            family: id.family(),
            operation: "first Pontryagin class",
            reason: "p1 is only computed for Y",
        });
    }
    let n = i64::from(id.n());
    let k = i64::from(id.k());
    Ok(n * k - 2 * k * k - 2 * k)
}

/// Whether `x_0^2` is known to be nonzero in `H^4(Y_{n,k}; Z)`, which the
/// Gysin sequence gives for `n - 2k >= 4`.
pub fn p1_generator_nonzero(id: ManifoldId) -> bool {
    id.family() == Family::Y && id.n() >= 2 * id.k() + 4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharClassReport {
    pub manifold: ManifoldId,
    /// Cohomological degree of `x`; exponents in the polynomials below count
    /// powers of `x`.
    pub poly_degree: u64,
    pub total_sw: TruncatedGF2Poly,
    pub inverse_sw: TruncatedGF2Poly,
    pub m: u64,
    pub dual_top_cohomological_degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1_coefficient: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1_generator_nonzero: Option<bool>,
}

pub fn char_class_report(id: ManifoldId) -> Result<CharClassReport> {
    let (_, poly_degree) = sw_setting(id, "characteristic classes")?;
    let total = total_sw(id)?;
    let inverse = total.inverse()?;
    let m = dual_top_index(id)?;
    if inverse.degree() != Some(m as usize) {
        return Err(Error::InternalInconsistency(format!(
            "{id}: top term of w̄ = {inverse} disagrees with closed-form m = {m}"
        )));
    }
    let is_y = id.family() == Family::Y;
    Ok(CharClassReport {
        manifold: id,
        poly_degree,
        total_sw: total,
        inverse_sw: inverse,
        m,
        dual_top_cohomological_degree: m * poly_degree,
        p1_coefficient: if is_y {
            Some(p1_coefficient(id)?)
        } else {
            None
        },
        p1_generator_nonzero: is_y.then(|| p1_generator_nonzero(id)),
    })
}
