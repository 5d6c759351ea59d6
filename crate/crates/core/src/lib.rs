//! Exact mod-2 computations for Stiefel manifolds and their quotients.
//!
//! The crate covers five families, all parametrised by `(n, k)`:
//!
//! - `V_{n,k}`, `W_{n,k}`: real and complex Stiefel manifolds,
//! - `PV_{n,k}`, `PW_{n,k}`: their projective quotients,
//! - `Y_{n,k} = V_{n,2k}/S^1`: the circle quotient through the diagonal of a
//!   maximal torus of `SO(2k)`.
//!
//! [`cohomology`] builds the additive presentations of `H*(M; Z2)`,
//! [`classes`] the tangent Stiefel–Whitney classes and `p_1(TY)`, and
//! [`invariants`] the bounds and verdicts that follow from them. All
//! arithmetic is exact and lives in [`gf2`].
//!
//! ```
//! use stiefel::{classes, cohomology, invariants, Family, ManifoldId};
//!
//! let pv = ManifoldId::new(Family::PV, 5, 2)?;
//! let p = cohomology::presentation(pv)?;
//! assert_eq!(p.truncation_exponent(), 4);
//! assert_eq!(classes::inverse_sw(pv)?.to_string(), "1 + x^2");
//! assert_eq!(invariants::skew_report(pv)?, 19);
//! # Ok::<(), stiefel::Error>(())
//! ```

pub mod classes;
pub mod cohomology;
mod error;
pub mod gf2;
pub mod invariants;
mod manifold;

pub use error::{Error, Result};
pub use gf2::{binom_parity, geometric_inverse_coefficient, Parity, TruncatedGF2Poly};
pub use manifold::{manifold_dim, Family, ManifoldId, ParseFamilyError};
