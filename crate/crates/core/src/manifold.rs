//! Manifold identifiers and dimension counts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The five families of Stiefel manifolds and their quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Real Stiefel manifold `V_{n,k}` of orthonormal k-frames in `R^n`.
    V,
    /// Complex Stiefel manifold `W_{n,k}`.
    W,
    /// Real projective Stiefel manifold `PV_{n,k} = V_{n,k} / {±1}`.
    PV,
    /// Complex projective Stiefel manifold `PW_{n,k} = W_{n,k} / S^1`.
    PW,
    /// Circle quotient `Y_{n,k} = V_{n,2k} / S^1`, the circle acting diagonally
    /// through `SO(2)^k ⊂ SO(2k)`.
    Y,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::V, Family::W, Family::PV, Family::PW, Family::Y];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::V => "V",
            Family::W => "W",
            Family::PV => "PV",
            Family::PW => "PW",
            Family::Y => "Y",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseFamilyError(pub String);

impl fmt::Display for ParseFamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown family `{}` (expected one of V, W, PV, PW, Y)",
            self.0
        )
    }
}

impl std::error::Error for ParseFamilyError {}

impl FromStr for Family {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ParseFamilyError(s.to_string()))
    }
}

/// A family tag with its parameters, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ManifoldId {
    family: Family,
    n: u32,
    k: u32,
}

impl ManifoldId {
    /// `V`, `W`, `PV`, `PW` need `1 <= k < n`; `Y` needs `1 <= k` and `2k < n`.
    pub fn new(family: Family, n: u32, k: u32) -> Result<Self> {
        let invalid = |constraint| Error::InvalidManifold {
            family,
            n,
            k,
            constraint,
        };
        if k == 0 {
            return Err(invalid("k >= 1"));
        }
        match family {
            Family::Y => {
                if u64::from(n) <= 2 * u64::from(k) {
                    return Err(invalid("n > 2k"));
                }
            }
            _ => {
                if k >= n {
                    return Err(invalid("k < n"));
                }
            }
        }
        Ok(ManifoldId { family, n, k })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `n * k`, the exponent in `w = (1 + x)^{nk}`.
    pub fn nk(&self) -> u64 {
        u64::from(self.n) * u64::from(self.k)
    }

    /// Every valid id of `family` with `n <= max_n`, ordered by `n` then `k`.
    pub fn enumerate(family: Family, max_n: u32) -> impl Iterator<Item = ManifoldId> {
        (1..=max_n)
            .flat_map(move |n| (1..n).filter_map(move |k| ManifoldId::new(family, n, k).ok()))
    }
}

impl fmt::Display for ManifoldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.family, self.n, self.k)
    }
}

/// Real dimension of the manifold.
pub fn manifold_dim(id: ManifoldId) -> u64 {
    let n = u64::from(id.n);
    let k = u64::from(id.k);
    match id.family {
        Family::V | Family::PV => n * k - k * (k + 1) / 2,
        Family::W => 2 * n * k - k * k,
        Family::PW => 2 * n * k - k * k - 1,
        Family::Y => 2 * n * k - k * (2 * k + 1) - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(f: Family, n: u32, k: u32) -> ManifoldId {
        ManifoldId::new(f, n, k).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(manifold_dim(id(Family::PV, 5, 2)), 7);
        assert_eq!(manifold_dim(id(Family::Y, 7, 1)), 10);
        assert_eq!(manifold_dim(id(Family::Y, 9, 2)), 25);
        assert_eq!(manifold_dim(id(Family::PW, 5, 1)), 8);
        for n in 2..20 {
            assert_eq!(manifold_dim(id(Family::V, n, 1)), u64::from(n) - 1);
        }
        // Y_{n,k} is a circle quotient of V_{n,2k}.
        for n in 3..30 {
            for k in 1..=(n - 1) / 2 {
                assert_eq!(
                    manifold_dim(id(Family::Y, n, k)) + 1,
                    manifold_dim(id(Family::V, n, 2 * k))
                );
            }
        }
    }

    #[test]
    fn validation() {
        let err = ManifoldId::new(Family::Y, 4, 2).unwrap_err();
        assert!(err.to_string().contains("Y requires n > 2k"), "{err}");
        assert!(ManifoldId::new(Family::PV, 5, 5).is_err());
        assert!(ManifoldId::new(Family::V, 5, 0).is_err());
        assert!(ManifoldId::new(Family::Y, 5, 2).is_ok());
        assert!(ManifoldId::new(Family::W, 2, 1).is_ok());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("pv".parse::<Family>().unwrap(), Family::PV);
        assert_eq!("Y".parse::<Family>().unwrap(), Family::Y);
        assert!("Q".parse::<Family>().is_err());
        assert_eq!(id(Family::PV, 5, 2).to_string(), "PV_{5,2}");
    }

    #[test]
    fn enumeration_order() {
        let ids: Vec<_> = ManifoldId::enumerate(Family::Y, 7)
            .map(|i| (i.n(), i.k()))
            .collect();
        assert_eq!(
            ids,
            vec![
                (3, 1),
                (4, 1),
                (5, 1),
                (5, 2),
                (6, 1),
                (6, 2),
                (7, 1),
                (7, 2),
                (7, 3)
            ]
        );
    }
}
