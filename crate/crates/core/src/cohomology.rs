//! Additive mod-2 cohomology of Stiefel manifolds and their quotients.
//!
//! Each presentation is `Λ(y_j : j ∈ A) ⊗ Z2[x]/(x^T)`: an exterior part on
//! generators `y_j` and, for the quotients, a truncated polynomial part on
//! the mod-2 Euler class `x` of the canonical line bundle.
//!
//! | family | exterior generators                      | `|x|` | `T` |
//! |--------|------------------------------------------|-------|-----|
//! | V      | `y_j`, `n-k <= j < n`, `|y_j| = j`        | -     | -   |
//! | W      | `y_j`, `n-k < j <= n`, `|y_j| = 2j-1`     | -     | -   |
//! | PV     | as V, without `y_{N-1}`                   | 1     | N   |
//! | PW     | as W, without `y_N`                       | 2     | N   |
//! | Y      | as V_{n,2k}, without `y_{2J-1}`           | 2     | J   |

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::binom_parity;
use crate::manifold::{manifold_dim, Family, ManifoldId};

/// `N = min { j : n-k < j <= n, binom(n, j) odd }`.
///
/// Always exists because `binom(n, n) = 1`. Panics unless `1 <= k < n`.
pub fn cutoff_n(n: u32, k: u32) -> u32 {
    assert!(
        1 <= k && k < n,
        "cutoff_n needs 1 <= k < n, got n={n}, k={k}"
    );
    (n - k + 1..=n)
        .find(|&j| binom_parity(n.into(), j.into()).is_odd())
        .expect("binom(n, n) is odd")
}

/// Range of `r` searched for `J`: exactly the `r` with `y_{2r-1}` among the
/// generators `y_{n-2k}, ..., y_{n-1}` of `V_{n,2k}`, i.e. `n-2k < 2r <= n`.
/// It holds `k` integers.
pub fn cutoff_j_window(n: u32, k: u32) -> RangeInclusive<u32> {
    let low = (n - 2 * k) / 2 + 1;
    let high = n / 2;
    low..=high
}

/// The window as usually printed, `n-2k <= 2r <= n-1`. Agrees with
/// [`cutoff_j_window`] for odd `n`; for even `n` it is shifted down by one
/// and can pick `2J - 1 = n-2k-1`, which is not a generator.
pub fn cutoff_j_window_published(n: u32, k: u32) -> RangeInclusive<u32> {
    let low = (n - 2 * k).div_ceil(2);
    let high = (n - 1) / 2;
    low..=high
}

fn first_odd_in(window: RangeInclusive<u32>, n: u32, k: u32) -> Result<u32> {
    let k64 = u64::from(k);
    window
        .clone()
        .find(|&r| binom_parity(k64 + u64::from(r) - 1, k64 - 1).is_odd())
        .ok_or_else(|| {
            Error::InternalInconsistency(format!(
                "no r in {}..={} with binom(k+r-1, k-1) odd for n={n}, k={k}",
                window.start(),
                window.end()
            ))
        })
}

/// `J = min { r : binom(k+r-1, k-1) odd }` over [`cutoff_j_window`]: the first
/// power of `x` hit by the transgression `y_{2r-1} -> binom(k+r-1, k-1) x^r`.
///
/// Needs `1 <= k` and `2k < n`.
pub fn cutoff_j(n: u32, k: u32) -> Result<u32> {
    assert!(
        k >= 1 && 2 * u64::from(k) < u64::from(n),
        "cutoff_j needs 1 <= 2k < n"
    );
    first_odd_in(cutoff_j_window(n, k), n, k)
}

/// `J` computed over [`cutoff_j_window_published`]. Only used to show where
/// the two readings disagree.
pub fn cutoff_j_published(n: u32, k: u32) -> Result<u32> {
    assert!(
        k >= 1 && 2 * u64::from(k) < u64::from(n),
        "cutoff_j needs 1 <= 2k < n"
    );
    first_odd_in(cutoff_j_window_published(n, k), n, k)
}

/// Statements of the presentation used for each family.
pub fn citations(family: Family) -> &'static [&'static str] {
    match family {
        Family::V => &["H*(V_{n,k}; Z2) = Λ(y_j : n-k <= j < n) additively, |y_j| = j (Borel)"],
        Family::W => &["H*(W_{n,k}; Z2) = Λ(y_j : n-k < j <= n), |y_j| = 2j-1"],
        Family::PV => &[
            "H*(PV_{n,k}; Z2) = Z2[x]/(x^N) ⊗ Λ(y_j : n-k <= j < n, j != N-1), |x| = 1, |y_j| = j, N = min{j : n-k < j <= n, binom(n,j) odd} (Gitler-Handel)",
        ],
        Family::PW => &[
            "H*(PW_{n,k}; Z2) = Z2[x]/(x^N) ⊗ Λ(y_j : n-k < j <= n, j != N), |x| = 2, |y_j| = 2j-1, N as for PV (Astey-Gitler)",
            "the PW generator set is also printed as removing y_{N-1}; since x^N has degree 2N the transgression kills y_N (degree 2N-1), the only choice matching dim PW_{n,k} and Poincare duality",
        ],
        Family::Y => &[
            "H*(Y_{n,k}; Z2) = Λ(y_j : n-2k <= j < n, j != 2J-1) ⊗ Z2[x]/(x^J) additively, |x| = 2, |y_j| = j, J = min{r : binom(k+r-1,k-1) odd, n-2k < 2r <= n}",
            "the J window is also printed as n-2k <= 2r <= n-1; both agree for odd n, and for even n only n-2k < 2r <= n (the r with y_{2r-1} a generator) matches dim Y_{n,k}",
        ],
    }
}

/// An exterior generator `y_index` living in cohomological degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub index: u32,
    pub degree: u64,
}

/// The truncated polynomial factor `Z2[x]/(x^truncation)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialPart {
    /// Cohomological degree of `x`.
    pub degree: u64,
    /// `N` or `J`; `x^truncation = 0`.
    pub truncation: u64,
    /// The generator killed by the transgression onto `x^truncation`.
    pub excluded: Generator,
}

/// Additive model of `H*(M; Z2)`.
///
/// Fields are public so that deliberately wrong presentations can be built
/// and checked; [`presentation`] is the only constructor that guarantees the
/// invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyPresentation {
    pub manifold: ManifoldId,
    /// Sorted by degree.
    pub exterior: Vec<Generator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialPart>,
    pub manifold_dim: u64,
}

impl CohomologyPresentation {
    pub fn exterior_degrees(&self) -> Vec<u64> {
        self.exterior.iter().map(|g| g.degree).collect()
    }

    /// Degree of `x`, or 0 without a polynomial part.
    pub fn poly_degree(&self) -> u64 {
        self.polynomial.map_or(0, |p| p.degree)
    }

    /// `N` or `J`, or 1 without a polynomial part (only `x^0` survives).
    pub fn truncation_exponent(&self) -> u64 {
        self.polynomial.map_or(1, |p| p.truncation)
    }

    /// Degree of the top class `x^{T-1} ∏ y_j`.
    pub fn top_degree(&self) -> u64 {
        self.exterior.iter().map(|g| g.degree).sum::<u64>()
            + self.poly_degree() * (self.truncation_exponent() - 1)
    }

    /// `2^{#generators} * T`.
    pub fn total_rank(&self) -> Result<u128> {
        1u128
            .checked_shl(self.exterior.len() as u32)
            .filter(|_| self.exterior.len() < 128)
            .and_then(|r| r.checked_mul(u128::from(self.truncation_exponent())))
            .ok_or(Error::Overflow("total rank"))
    }

    /// Mod-2 Betti numbers `b_0, ..., b_top`: coefficients of
    /// `∏ (1 + t^{|y_j|}) · (1 + t^c + ... + t^{c(T-1)})`.
    pub fn betti_numbers(&self) -> Result<Vec<u128>> {
        let top = self.top_degree() as usize;
        let mut counts = vec![0u128; top + 1];
        counts[0] = 1;
        let mut reached = 0usize;
        for g in &self.exterior {
            let d = g.degree as usize;
            reached += d;
            for i in (d..=reached).rev() {
                counts[i] = counts[i]
                    .checked_add(counts[i - d])
                    .ok_or(Error::Overflow("Betti number"))?;
            }
        }
        if let Some(p) = self.polynomial {
            let c = p.degree as usize;
            let t = p.truncation as usize;
            // Multiply by (1 - t^{cT}) / (1 - t^c) via a running sum.
            let mut out = vec![0u128; top + 1];
            for i in 0..=top {
                let mut v = counts[i];
                if c > 0 && i >= c {
                    v = v
                        .checked_add(out[i - c])
                        .ok_or(Error::Overflow("Betti number"))?;
                    if i >= c * t {
                        v -= counts[i - c * t];
                    }
                }
                out[i] = v;
            }
            counts = out;
        }
        Ok(counts)
    }

    /// Checks top degree = dimension, rank = `2^g T` and `b_i = b_{dim-i}`.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| {
            Err(Error::InternalInconsistency(format!(
                "{}: {msg}",
                self.manifold
            )))
        };
        if self.top_degree() != self.manifold_dim {
            return fail(format!(
                "top degree {} differs from dimension {}",
                self.top_degree(),
                self.manifold_dim
            ));
        }
        let betti = self.betti_numbers()?;
        let mut sum = 0u128;
        for b in &betti {
            sum = sum.checked_add(*b).ok_or(Error::Overflow("total rank"))?;
        }
        if sum != self.total_rank()? {
            return fail(format!(
                "Betti numbers sum to {sum}, expected {}",
                self.total_rank()?
            ));
        }
        if let Some(i) = (0..betti.len()).find(|&i| betti[i] != betti[betti.len() - 1 - i]) {
            return fail(format!("b_{i} differs from its dual"));
        }
        Ok(())
    }
}

fn generators(
    indices: impl Iterator<Item = u32>,
    degree_of: impl Fn(u32) -> u64,
) -> Vec<Generator> {
    let mut gens: Vec<Generator> = indices
        .map(|index| Generator {
            index,
            degree: degree_of(index),
        })
        .collect();
    gens.sort_by_key(|g| g.degree);
    gens
}

fn real_degree(j: u32) -> u64 {
    u64::from(j)
}

fn complex_degree(j: u32) -> u64 {
    2 * u64::from(j) - 1
}

/// Builds the presentation of `id` and checks that its top degree is the
/// dimension.
pub fn presentation(id: ManifoldId) -> Result<CohomologyPresentation> {
    let (n, k) = (id.n(), id.k());
    let (exterior, polynomial) = match id.family() {
        Family::V => (generators(n - k..n, real_degree), None),
        Family::W => (generators(n - k + 1..=n, complex_degree), None),
        Family::PV => {
            let big_n = cutoff_n(n, k);
            let excluded = big_n - 1;
            (
                generators((n - k..n).filter(|&j| j != excluded), real_degree),
                Some(PolynomialPart {
                    degree: 1,
                    truncation: big_n.into(),
                    excluded: Generator {
                        index: excluded,
                        degree: real_degree(excluded),
                    },
                }),
            )
        }
        Family::PW => {
            // x^N sits in degree 2N, so the transgression kills y_N (degree
            // 2N - 1). Removing y_{N-1} instead overshoots the dimension by 2.
            let big_n = cutoff_n(n, k);
            (
                generators((n - k + 1..=n).filter(|&j| j != big_n), complex_degree),
                Some(PolynomialPart {
                    degree: 2,
                    truncation: big_n.into(),
                    excluded: Generator {
                        index: big_n,
                        degree: complex_degree(big_n),
                    },
                }),
            )
        }
        Family::Y => {
            let j = cutoff_j(n, k)?;
            let excluded = 2 * j - 1;
            (
                generators((n - 2 * k..n).filter(|&i| i != excluded), real_degree),
                Some(PolynomialPart {
                    degree: 2,
                    truncation: j.into(),
                    excluded: Generator {
                        index: excluded,
                        degree: real_degree(excluded),
                    },
                }),
            )
        }
    };
    let p = CohomologyPresentation {
        manifold: id,
        exterior,
        polynomial,
        manifold_dim: manifold_dim(id),
    };
    if p.top_degree() != p.manifold_dim {
        return Err(Error::InternalInconsistency(format!(
            "{id}: top degree {} differs from dimension {}",
            p.top_degree(),
            p.manifold_dim
        )));
    }
    Ok(p)
}

/// Characteristic rank of the canonical line bundle: the largest `d` with
/// every class of degree `<= d` a polynomial in `x`. Below the first exterior
/// generator the monomial basis only has powers of `x`, so this is that
/// generator's degree minus one, or the whole dimension when there is none.
pub fn charrank_of_canonical_bundle(p: &CohomologyPresentation) -> Result<u64> {
    if p.polynomial.is_none() {
        return Err(Error::NoPolynomialPart {
            family: p.manifold.family(),
        });
    }
    Ok(p.exterior
        .iter()
        .map(|g| g.degree)
        .min()
        .map_or(p.manifold_dim, |d| d - 1))
}
