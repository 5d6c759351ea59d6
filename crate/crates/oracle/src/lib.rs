//! Deliberately naive reference implementations for cross-checking
//! `stiefel`.
//!
//! Nothing here calls into the arithmetic of the main crate. Polynomials are
//! only read and written through their coefficient accessors, binomial
//! parities come from an additive Pascal triangle, and Betti numbers from
//! explicit monomials. Limits are explicit: exceeding one is an error, never a
//! silent pass.

use std::collections::BTreeMap;

use stiefel::cohomology::CohomologyPresentation;
use stiefel::{Parity, TruncatedGF2Poly};
use thiserror::Error;

pub mod verify;

pub const DEFAULT_TRIANGLE_MAX: u64 = 4096;
pub const DEFAULT_BASIS_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {requested} exceeds the oracle limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("constant term is zero; no inverse")]
    NonUnit,
}

/// Binomial coefficients mod 2 built row by row from `C(n,r) = C(n-1,r-1) +
/// C(n-1,r)`. Row `n` is stored packed, bit `r` holding `C(n,r) mod 2`.
#[derive(Clone, Debug)]
pub struct ParityTriangle {
    rows: Vec<Vec<u64>>,
}

impl ParityTriangle {
    /// Rows `0..=max_n`.
    pub fn new(max_n: u64) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![1]);
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = vec![0u64; n / 64 + 1];
            for r in 0..=n {
                let above_left = r >= 1 && bit(prev, r - 1);
                let above = r < n && bit(prev, r);
                if above_left ^ above {
                    row[r / 64] |= 1 << (r % 64);
                }
            }
            rows.push(row);
        }
        ParityTriangle { rows }
    }

    pub fn max_n(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    /// Parity of `C(n, r)`; `r > n` is even.
    pub fn pascal_parity(&self, n: u64, r: u64) -> Result<Parity, OracleError> {
        if n > self.max_n() {
            return Err(OracleError::LimitExceeded {
                what: "triangle row",
                requested: n.into(),
                limit: self.max_n().into(),
            });
        }
        let odd = r <= n && bit(&self.rows[n as usize], r as usize);
        Ok(if odd { Parity::Odd } else { Parity::Even })
    }
}

impl Default for ParityTriangle {
    fn default() -> Self {
        ParityTriangle::new(DEFAULT_TRIANGLE_MAX)
    }
}

fn bit(words: &[u64], i: usize) -> bool {
    words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
}

/// Degree-by-degree back-substitution: `b_0 = 1`, `b_j = Σ_{i=1..j} a_i b_{j-i}`.
pub fn naive_inverse(a: &TruncatedGF2Poly) -> Result<TruncatedGF2Poly, OracleError> {
    let t = a.truncation();
    if !a.coeff(0) {
        return Err(OracleError::NonUnit);
    }
    let mut b = vec![false; t];
    b[0] = true;
    for j in 1..t {
        let mut acc = false;
        for i in 1..=j {
            acc ^= a.coeff(i) && b[j - i];
        }
        b[j] = acc;
    }
    Ok(TruncatedGF2Poly::from_exponents(
        (0..t).filter(|&j| b[j]),
        t,
    ))
}

/// Schoolbook product of coefficient lists.
pub fn naive_mul(a: &TruncatedGF2Poly, b: &TruncatedGF2Poly) -> TruncatedGF2Poly {
    assert_eq!(a.truncation(), b.truncation(), "truncation mismatch");
    let t = a.truncation();
    let mut c = vec![false; t];
    for i in 0..t {
        if !a.coeff(i) {
            continue;
        }
        for j in 0..t - i {
            c[i + j] ^= b.coeff(j);
        }
    }
    TruncatedGF2Poly::from_exponents((0..t).filter(|&j| c[j]), t)
}

/// One basis element `x^x_power · ∏ y_j` of an additive presentation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisMonomial {
    pub degree: u64,
    pub x_power: u64,
    /// Indices `j` of the `y_j` factors, ascending.
    pub y_indices: Vec<u32>,
}

fn checked_basis_size(
    p: &CohomologyPresentation,
    limit: u128,
) -> Result<(u64, u64, u128), OracleError> {
    let (x_degree, trunc) = match p.polynomial {
        Some(poly) => (poly.degree, poly.truncation),
        None => (0, 1),
    };
    let count = if p.exterior.len() >= 127 {
        u128::MAX
    } else {
        (1u128 << p.exterior.len()).saturating_mul(trunc.into())
    };
    if count > limit {
        return Err(OracleError::LimitExceeded {
            what: "basis size",
            requested: count,
            limit,
        });
    }
    Ok((x_degree, trunc, count))
}

/// Lists every monomial of the presentation, refusing once the count passes
/// `limit`.
pub fn enumerate_basis(
    p: &CohomologyPresentation,
    limit: u128,
) -> Result<Vec<BasisMonomial>, OracleError> {
    let gens = &p.exterior;
    let (x_degree, trunc, count) = checked_basis_size(p, limit)?;
    let mut out = Vec::with_capacity(count as usize);
    for subset in 0u64..(1u64 << gens.len()) {
        let chosen: Vec<_> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| (subset >> i) & 1 == 1)
            .map(|(_, g)| *g)
            .collect();
        let y_degree: u64 = chosen.iter().map(|g| g.degree).sum();
        let mut y_indices: Vec<u32> = chosen.iter().map(|g| g.index).collect();
        y_indices.sort_unstable();
        for x_power in 0..trunc {
            out.push(BasisMonomial {
                degree: y_degree + x_power * x_degree,
                x_power,
                y_indices: y_indices.clone(),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Degree histogram of the monomial basis, visiting every monomial once
/// without storing it. Subsets are walked in Gray-code order so each step
/// toggles a single generator.
pub fn count_basis_by_degree(
    p: &CohomologyPresentation,
    limit: u128,
) -> Result<Vec<u128>, OracleError> {
    let (x_degree, trunc, _) = checked_basis_size(p, limit)?;
    let gens = &p.exterior;
    let top = gens.iter().map(|g| g.degree).sum::<u64>() + (trunc - 1) * x_degree;
    let mut h = vec![0u128; top as usize + 1];
    let mut y_degree = 0u64;
    let mut mask = 0u64;
    for step in 0u64..(1u64 << gens.len()) {
        if step > 0 {
            let bit = step.trailing_zeros();
            mask ^= 1 << bit;
            let d = gens[bit as usize].degree;
            if mask >> bit & 1 == 1 {
                y_degree += d;
            } else {
                y_degree -= d;
            }
        }
        for x_power in 0..trunc {
            h[(y_degree + x_power * x_degree) as usize] += 1;
        }
    }
    Ok(h)
}

/// Number of basis monomials in each degree, as a dense list.
pub fn degree_histogram(basis: &[BasisMonomial]) -> Vec<u128> {
    let top = basis.iter().map(|m| m.degree).max().unwrap_or(0) as usize;
    let mut h = vec![0u128; top + 1];
    for m in basis {
        h[m.degree as usize] += 1;
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityCheck {
    Pass,
    /// `degree` is the first offending degree; for a top-degree mismatch it
    /// is the top degree found.
    Fail {
        degree: u64,
        reason: String,
    },
}

impl DualityCheck {
    pub fn passed(&self) -> bool {
        *self == DualityCheck::Pass
    }
}

/// Poincaré duality over `Z2`: top degree equals the dimension and
/// `b_i = b_{dim-i}`. Betti numbers are counted by adding one generator at a
/// time to a degree table (no enumeration, so no size ceiling).
pub fn check_duality(p: &CohomologyPresentation) -> DualityCheck {
    let mut table: BTreeMap<u64, u128> = BTreeMap::new();
    table.insert(0, 1);
    for g in &p.exterior {
        let shifted: Vec<(u64, u128)> = table.iter().map(|(&d, &c)| (d + g.degree, c)).collect();
        for (d, c) in shifted {
            let slot = table.entry(d).or_insert(0);
            *slot = slot.saturating_add(c);
        }
    }
    if let Some(poly) = p.polynomial {
        let mut with_x: BTreeMap<u64, u128> = BTreeMap::new();
        for (&d, &c) in &table {
            for power in 0..poly.truncation {
                let slot = with_x.entry(d + power * poly.degree).or_insert(0);
                *slot = slot.saturating_add(c);
            }
        }
        table = with_x;
    }
    let top = *table.keys().next_back().expect("degree 0 is present");
    if top != p.manifold_dim {
        return DualityCheck::Fail {
            degree: top,
            reason: format!("top degree {top} but dimension {}", p.manifold_dim),
        };
    }
    let betti = |d: u64| table.get(&d).copied().unwrap_or(0);
    for d in 0..=top {
        if betti(d) != betti(top - d) {
            return DualityCheck::Fail {
                degree: d,
                reason: format!(
                    "b_{d} = {} but b_{} = {}",
                    betti(d),
                    top - d,
                    betti(top - d)
                ),
            };
        }
    }
    DualityCheck::Pass
}

/// The checks the verification runner needs. [`BruteForce`] is the real
/// implementation; tests substitute broken ones to prove failures surface.
pub trait Oracles {
    fn pascal_parity(&self, n: u64, r: u64) -> Result<Parity, OracleError>;
    fn naive_inverse(&self, a: &TruncatedGF2Poly) -> Result<TruncatedGF2Poly, OracleError>;
    /// Basis monomial counts per degree, or `LimitExceeded` when too large to visit.
    fn basis_histogram(&self, p: &CohomologyPresentation) -> Result<Vec<u128>, OracleError>;
    fn check_duality(&self, p: &CohomologyPresentation) -> DualityCheck;
}

#[derive(Clone, Debug)]
pub struct BruteForce {
    triangle: ParityTriangle,
    basis_limit: u128,
}

impl BruteForce {
    pub fn new(triangle_max: u64, basis_limit: u128) -> Self {
        BruteForce {
            triangle: ParityTriangle::new(triangle_max),
            basis_limit,
        }
    }
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce::new(DEFAULT_TRIANGLE_MAX, DEFAULT_BASIS_LIMIT)
    }
}

impl Oracles for BruteForce {
    fn pascal_parity(&self, n: u64, r: u64) -> Result<Parity, OracleError> {
        self.triangle.pascal_parity(n, r)
    }

    fn naive_inverse(&self, a: &TruncatedGF2Poly) -> Result<TruncatedGF2Poly, OracleError> {
        naive_inverse(a)
    }

    fn basis_histogram(&self, p: &CohomologyPresentation) -> Result<Vec<u128>, OracleError> {
        count_basis_by_degree(p, self.basis_limit)
    }

    fn check_duality(&self, p: &CohomologyPresentation) -> DualityCheck {
        check_duality(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use stiefel::cohomology::{cutoff_n, presentation, Generator, PolynomialPart};
    use stiefel::{Family, ManifoldId};

    fn poly(exps: &[usize], t: usize) -> TruncatedGF2Poly {
        TruncatedGF2Poly::from_exponents(exps.iter().copied(), t)
    }

    #[test]
    fn triangle_examples() {
        let t = ParityTriangle::new(64);
        assert_eq!(t.pascal_parity(5, 2).unwrap(), Parity::Even);
        assert_eq!(t.pascal_parity(14, 8).unwrap(), Parity::Odd);
        assert_eq!(t.pascal_parity(3, 7).unwrap(), Parity::Even);
        for n in 0..=64 {
            assert_eq!(t.pascal_parity(n, 0).unwrap(), Parity::Odd);
            assert_eq!(t.pascal_parity(n, n).unwrap(), Parity::Odd);
        }
        assert!(matches!(
            t.pascal_parity(65, 1),
            Err(OracleError::LimitExceeded { .. })
        ));
    }

    #[test]
    fn triangle_rows_follow_the_additive_rule() {
        // Row sums of Pascal's triangle mod 2 are 2^{popcount(n)}.
        let t = ParityTriangle::new(300);
        for n in 0..=300u64 {
            let odd = (0..=n)
                .filter(|&r| t.pascal_parity(n, r).unwrap().is_odd())
                .count();
            assert_eq!(odd, 1 << n.count_ones(), "row {n}");
        }
    }

    #[test]
    fn naive_inverse_examples() {
        assert_eq!(naive_inverse(&poly(&[0], 3)).unwrap(), poly(&[0], 3));
        assert_eq!(
            naive_inverse(&poly(&[0, 1], 5)).unwrap(),
            poly(&[0, 1, 2, 3, 4], 5)
        );
        assert_eq!(naive_inverse(&poly(&[1], 5)), Err(OracleError::NonUnit));
    }

    #[test]
    fn basis_examples() {
        let pv = presentation(ManifoldId::new(Family::PV, 5, 2).unwrap()).unwrap();
        let basis = enumerate_basis(&pv, DEFAULT_BASIS_LIMIT).unwrap();
        assert_eq!(basis.len(), 8);
        assert_eq!(degree_histogram(&basis), vec![1; 8]);
        assert_eq!(
            count_basis_by_degree(&pv, DEFAULT_BASIS_LIMIT).unwrap(),
            vec![1; 8]
        );

        let sphere = presentation(ManifoldId::new(Family::V, 6, 1).unwrap()).unwrap();
        assert_eq!(enumerate_basis(&sphere, 16).unwrap().len(), 2);

        let y = presentation(ManifoldId::new(Family::Y, 7, 1).unwrap()).unwrap();
        let degrees: Vec<u64> = enumerate_basis(&y, 16)
            .unwrap()
            .iter()
            .map(|m| m.degree)
            .collect();
        assert_eq!(degrees, vec![0, 2, 4, 6, 8, 10]);

        assert!(matches!(
            enumerate_basis(&pv, 7),
            Err(OracleError::LimitExceeded { requested: 8, .. })
        ));
    }

    #[test]
    fn streamed_counts_match_enumeration() {
        for family in Family::ALL {
            for id in ManifoldId::enumerate(family, 12) {
                let p = presentation(id).unwrap();
                if let Ok(basis) = enumerate_basis(&p, 1 << 14) {
                    assert_eq!(
                        count_basis_by_degree(&p, 1 << 14).unwrap(),
                        degree_histogram(&basis),
                        "{id}"
                    );
                }
            }
        }
    }

    #[test]
    fn duality_examples() {
        let pv = presentation(ManifoldId::new(Family::PV, 5, 2).unwrap()).unwrap();
        assert!(check_duality(&pv).passed());
        let sphere = presentation(ManifoldId::new(Family::V, 9, 1).unwrap()).unwrap();
        assert!(check_duality(&sphere).passed());
    }

    /// PW with `y_{N-1}` removed, as the generator set is usually printed.
    fn pw_published_exclusion(n: u32, k: u32) -> CohomologyPresentation {
        let id = ManifoldId::new(Family::PW, n, k).unwrap();
        let big_n = cutoff_n(n, k);
        let exterior = (n - k + 1..=n)
            .filter(|&j| j != big_n - 1)
            .map(|j| Generator {
                index: j,
                degree: 2 * u64::from(j) - 1,
            })
            .collect();
        CohomologyPresentation {
            manifold: id,
            exterior,
            polynomial: Some(PolynomialPart {
                degree: 2,
                truncation: big_n.into(),
                excluded: Generator {
                    index: big_n - 1,
                    degree: 2 * u64::from(big_n) - 3,
                },
            }),
            manifold_dim: stiefel::manifold_dim(id),
        }
    }

    #[test]
    fn published_pw_exclusion_fails_duality() {
        // PW_{8,3}: N = 8 and y_7 is among y_6, y_7, y_8.
        let bad = pw_published_exclusion(8, 3);
        match check_duality(&bad) {
            DualityCheck::Fail { degree, .. } => assert_eq!(degree, bad.manifold_dim + 2),
            DualityCheck::Pass => panic!("published PW exclusion should fail"),
        }
        let good = presentation(ManifoldId::new(Family::PW, 8, 3).unwrap()).unwrap();
        assert!(check_duality(&good).passed());
        // Every PW id where y_{N-1} is a generator is off by exactly 2.
        for id in ManifoldId::enumerate(Family::PW, 30) {
            let big_n = cutoff_n(id.n(), id.k());
            if big_n - 1 > id.n() - id.k() {
                let bad = pw_published_exclusion(id.n(), id.k());
                assert_eq!(bad.top_degree(), bad.manifold_dim + 2, "{id}");
                assert!(!check_duality(&bad).passed());
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn naive_mul_of_inverse_is_one(bits in prop::collection::vec(any::<bool>(), 1..200)) {
                let t = bits.len();
                let a = TruncatedGF2Poly::from_exponents(
                    std::iter::once(0).chain((1..t).filter(|&i| bits[i])),
                    t,
                );
                let inv = naive_inverse(&a).unwrap();
                prop_assert_eq!(naive_mul(&a, &inv), TruncatedGF2Poly::one(t));
            }
        }
    }
}
