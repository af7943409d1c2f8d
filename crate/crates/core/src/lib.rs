//! Ranks and minimal generating sets of finite Rees matrix semigroups over
//! groups, with applications to transformation semigroups.
//!
//! The crate is organised around a few layers:
//!
//! * [`group`] and [`perm`]: finite groups as Cayley tables, subgroup
//!   closure, exact rank and relative rank.
//! * [`rees`]: Rees matrix semigroups `M0[G; I, Λ; P]`.
//! * [`graham`]: Graham–Houghton graphs and the Graham normal form.
//! * [`rank`]: the rank formula, `σ_min`, and explicit minimal generating sets.
//! * [`transform`]: transformations, `S(A, B)` semigroups, `K(n, r)` and
//!   partial injections.
//! * [`oracle`]: brute-force closure, Green's relations, principal factors
//!   and exact rank search, used to cross-check everything above.
//! * [`cli`]: the input format and subcommands behind the `sgrank` binary.
//!
//! All products are read left to right: `x·y` means "apply `x`, then `y`".
//!
//! ```
//! use std::sync::Arc;
//! use semigroup_rank::group::FiniteGroup;
//! use semigroup_rank::rees::{ReesMatrixSemigroup, StructureMatrix};
//! use semigroup_rank::rank::rank_rms;
//!
//! let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
//! let p = StructureMatrix::identity(4, g.identity()).unwrap();
//! let s = ReesMatrixSemigroup::new(g, p).unwrap();
//! assert_eq!(rank_rms(&s).unwrap().value, 5);
//! ```

pub mod cli;
pub mod error;
pub mod graham;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod rank;
pub mod rees;
pub mod selftest;
pub mod transform;

pub use error::{Error, Result};
