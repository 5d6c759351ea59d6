//! Geometric consequences of the cohomology and characteristic classes:
//! skew-embedding and immersion lower bounds, stable span upper bounds,
//! upper characteristic rank and parallelizability.
//!
//! Verdicts follow the theorems' hypotheses exactly. Parameters outside a
//! theorem's range come back as [`VerdictStatus::OutOfTheoremRange`] or
//! [`VerdictStatus::Unknown`], never as an extrapolated value.

use serde::Serialize;

use crate::classes::{dual_top_index, p1_coefficient};
use crate::cohomology::{charrank_of_canonical_bundle, presentation};
use crate::error::{Error, Result};
use crate::gf2::binom_parity;
use crate::manifold::{manifold_dim, Family, ManifoldId};

pub const RULE_UCHARRANK_PV: &str =
    "ucharrank(PV_{n,k}) for n-k in {5,6} or n-k >= 9: n-k-1 if binom(n,k-1) is even, n-k if odd";
pub const RULE_UCHARRANK_PV_CODIM_ONE: &str =
    "ucharrank(PV_{n,n-1}) = 2 when n = 0,1 mod 4 and binom(n,4) is even: y_3 survives and is not a Stiefel-Whitney polynomial on V_{n,n-1}";
pub const RULE_UCHARRANK_PV_RANGE: &str =
    "ucharrank(PV_{n,k}) is determined only for n-k in {5,6}, n-k >= 9, and the n-k = 1 case with n = 0,1 mod 4 and binom(n,4) even";
pub const RULE_UCHARRANK_PW: &str =
    "ucharrank(PW_{n,k}) = 2(n-k) if binom(n,k-1) is even, 2(n-k)+2 if odd";
pub const RULE_UCHARRANK_PW_SPHERE: &str =
    "ucharrank(PW_{n,1}) = dim: CP^{n-1} is generated by x (the 2(n-k)+2 formula exceeds the dimension here)";
pub const RULE_UCHARRANK_Y: &str =
    "ucharrank(Y_{n,k}) for n-2k in {5,6} or n-2k >= 9: n-2k-1 if binom(n,2k-1) is even, n-2k if odd";
pub const RULE_UCHARRANK_Y_RANGE: &str =
    "ucharrank(Y_{n,k}) is determined only for n-2k in {5,6} or n-2k >= 9";
pub const RULE_NOT_PARALLELIZABLE: &str =
    "Y_{n,k} is not parallelizable for n-2k >= 4: p1(TY) = k(n-2k-2) x0^2 with x0^2 != 0";
pub const RULE_PARALLELIZABLE_UNKNOWN: &str =
    "parallelizability of Y_{n,k} is not decided by p1 for n-2k <= 3";

pub const RULE_SKEW: &str =
    "N(M) >= 2 dim M + 2d + 1 when w̄_d(M) != 0 is the top nonzero dual class (Baralic et al.); d = m for PV, 2m for Y";
pub const RULE_NON_IMMERSION: &str = "w̄_d(M) != 0 rules out an immersion of M in R^{dim M + d - 1}";
pub const RULE_STABLE_SPAN: &str = "span^0(Y_{n,k}) <= dim Y_{n,k} - 2m";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    Determined,
    OutOfTheoremRange,
    Unknown,
}

/// The outcome of applying a theorem, with the rule that was applied.
/// A value is present exactly when the status is `Determined`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<T> {
    status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<T>,
    rule: String,
}

impl<T> Verdict<T> {
    pub fn determined(value: T, rule: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Determined,
            value: Some(value),
            rule: rule.into(),
        }
    }

    pub fn out_of_range(rule: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::OutOfTheoremRange,
            value: None,
            rule: rule.into(),
        }
    }

    pub fn unknown(rule: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Unknown,
            value: None,
            rule: rule.into(),
        }
    }

    pub fn status(&self) -> VerdictStatus {
        self.status
    }

    pub fn value(&self) -> Option<&T> {
        self.value.as_ref()
    }

    pub fn rule(&self) -> &str {
        &self.rule
    }

    pub fn is_determined(&self) -> bool {
        self.status == VerdictStatus::Determined
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub manifold: ManifoldId,
    pub dim: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skew_embed_lower_bound: Option<u64>,
    /// Largest `E` for which an immersion in `R^E` is ruled out.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_immersion_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_span_upper_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ucharrank: Option<Verdict<u64>>,
    /// `value == false` means "not parallelizable".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parallelizable: Option<Verdict<bool>>,
}

fn unsupported(id: ManifoldId, operation: &'static str, reason: &'static str) -> Error {
    Error::UnsupportedFamily {
        family: id.family(),
        operation,
        reason,
    }
}

/// If `w̄_d(M) != 0` with `d` maximal, a totally skew embedding of `M^dim`
/// needs at least `2 dim + 2d + 1` dimensions.
pub fn skew_lower_bound_from_dual_index(dim: u64, top_dual_degree: u64) -> u64 {
    2 * dim + 2 * top_dual_degree + 1
}

/// Top cohomological degree of a nonzero dual Stiefel–Whitney class.
fn top_dual_degree(id: ManifoldId, operation: &'static str) -> Result<u64> {
    match id.family() {
        Family::PV => dual_top_index(id),
        Family::Y => Ok(2 * dual_top_index(id)?),
        _ => Err(unsupported(
            id,
            operation,
            "needs the tangent Stiefel-Whitney class (PV or Y)",
        )),
    }
}

/// Lower bound on the totally skew embedding dimension `N(M)`.
pub fn skew_report(id: ManifoldId) -> Result<u64> {
    let d = top_dual_degree(id, "skew embedding bound")?;
    Ok(skew_lower_bound_from_dual_index(manifold_dim(id), d))
}

/// `dim + d - 1` for the top nonzero dual class `w̄_d`, or `None` when
/// `d = 0` and there is no obstruction.
pub fn non_immersion(id: ManifoldId) -> Result<Option<u64>> {
    let d = top_dual_degree(id, "non-immersion bound")?;
    Ok((d > 0).then(|| manifold_dim(id) + d - 1))
}

/// `span^0(Y_{n,k}) <= dim - 2m`.
pub fn stable_span_upper(id: ManifoldId) -> Result<u64> {
    if id.family() != Family::Y {
        return Err(unsupported(id, "stable span bound", "only derived for Y"));
    }
    Ok(manifold_dim(id) - 2 * dual_top_index(id)?)
}

fn in_theorem_range(codim: u32) -> bool {
    matches!(codim, 5 | 6) || codim >= 9
}

/// Upper characteristic rank of `PV`, `PW` or `Y`.
pub fn ucharrank(id: ManifoldId) -> Result<Verdict<u64>> {
    let (n, k) = (id.n(), id.k());
    let n64 = u64::from(n);
    let k64 = u64::from(k);
    match id.family() {
        Family::PV => {
            let codim = n - k;
            if in_theorem_range(codim) {
                let odd = binom_parity(n64, k64 - 1).is_odd();
                let value = if odd {
                    u64::from(codim)
                } else {
                    u64::from(codim) - 1
                };
                Ok(Verdict::determined(value, RULE_UCHARRANK_PV))
            } else if codim == 1 && matches!(n % 4, 0 | 1) && binom_parity(n64, 4).is_even() {
                Ok(Verdict::determined(2, RULE_UCHARRANK_PV_CODIM_ONE))
            } else {
                Ok(Verdict::out_of_range(RULE_UCHARRANK_PV_RANGE))
            }
        }
        Family::PW => {
            let base = 2 * u64::from(n - k);
            let value = if binom_parity(n64, k64 - 1).is_odd() {
                base + 2
            } else {
                base
            };
            let dim = manifold_dim(id);
            if value > dim {
                Ok(Verdict::determined(dim, RULE_UCHARRANK_PW_SPHERE))
            } else {
                Ok(Verdict::determined(value, RULE_UCHARRANK_PW))
            }
        }
        Family::Y => {
            let codim = n - 2 * k;
            if in_theorem_range(codim) {
                let odd = binom_parity(n64, 2 * k64 - 1).is_odd();
                let value = if odd {
                    u64::from(codim)
                } else {
                    u64::from(codim) - 1
                };
                Ok(Verdict::determined(value, RULE_UCHARRANK_Y))
            } else {
                Ok(Verdict::out_of_range(RULE_UCHARRANK_Y_RANGE))
            }
        }
        Family::V | Family::W => Err(unsupported(
            id,
            "upper characteristic rank",
            "only derived for PV, PW and Y",
        )),
    }
}

/// Parallelizability of `Y_{n,k}` from the first Pontryagin class.
pub fn parallelizable(id: ManifoldId) -> Result<Verdict<bool>> {
    if id.family() != Family::Y {
        return Err(unsupported(id, "parallelizability", "only decided for Y"));
    }
    if id.n() < 2 * id.k() + 4 {
        return Ok(Verdict::unknown(RULE_PARALLELIZABLE_UNKNOWN));
    }
    let p1 = p1_coefficient(id)?;
    if p1 == 0 {
        return Err(Error::InternalInconsistency(format!(
            "{id}: p1 coefficient vanishes although n - 2k >= 4"
        )));
    }
    Ok(Verdict::determined(false, RULE_NOT_PARALLELIZABLE))
}

/// Everything that applies to `id`; inapplicable fields are `None`.
pub fn full_report(id: ManifoldId) -> Result<InvariantReport> {
    let dim = manifold_dim(id);
    let has_sw = matches!(id.family(), Family::PV | Family::Y);
    let is_y = id.family() == Family::Y;
    let ucharrank = match id.family() {
        Family::PV | Family::PW | Family::Y => Some(ucharrank(id)?),
        Family::V | Family::W => None,
    };
    if let Some(value) = ucharrank.as_ref().and_then(Verdict::value) {
        let charrank = charrank_of_canonical_bundle(&presentation(id)?)?;
        if *value < charrank {
            return Err(Error::InternalInconsistency(format!(
                "{id}: ucharrank {value} below charrank of the canonical bundle {charrank}"
            )));
        }
    }
    Ok(InvariantReport {
        manifold: id,
        dim,
        skew_embed_lower_bound: if has_sw { Some(skew_report(id)?) } else { None },
        non_immersion_dim: if has_sw { non_immersion(id)? } else { None },
        stable_span_upper_bound: if is_y {
            Some(stable_span_upper(id)?)
        } else {
            None
        },
        ucharrank,
        parallelizable: if is_y {
            Some(parallelizable(id)?)
        } else {
            None
        },
    })
}
