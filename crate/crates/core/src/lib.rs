//! Meadows: commutative rings with a total inverse satisfying
//! `(x^-1)^-1 = x` and `x*(x*x^-1) = x`.
//!
//! The crate builds finite meadows and zero-totalized fields as operation
//! tables, checks equations and conditional equations over them
//! exhaustively, checks them over the zero-totalized rationals by exact
//! sampling, expands finite regular rings to meadows and embeds finite
//! meadows into products of fields.
//!
//! ```
//! use meadow::finite_meadows::build_mdk;
//! use meadow::logic::{check_conditional, gil};
//!
//! let md6 = build_mdk(6).unwrap();
//! assert_eq!(md6.inv(2), Some(2));
//! let v = check_conditional(&md6, &gil()).unwrap();
//! assert_eq!(v.witness().unwrap().get("x"), Some(2));
//! ```

pub mod arith;
mod engine;
pub mod error;
pub mod finite_meadows;
pub mod inverse;
pub mod logic;
pub mod models;
pub mod rationals;
pub mod structures;
pub mod terms;
pub mod vnr;

pub use error::{Error, Result};
