//! Finite Coxeter groups with exact root systems: weak-order joins, Bruhat
//! path reachability and conjecture sweeps over all pairs of elements.
//!
//! ```
//! use weakorder::{bruhat, CoxeterSystem};
//!
//! let sys = CoxeterSystem::named("A3").unwrap();
//! let g = sys.group();
//! let u = sys.parse_element("3124").unwrap().element;
//! let v = sys.parse_element("1423").unwrap().element;
//! let verdict = bruhat::check_conjecture_h(g, u, v).unwrap();
//! assert!(verdict.holds);
//! assert_eq!(verdict.lhs.len(), 5);
//! ```

pub mod bruhat;
pub mod coxeter;
mod error;
pub mod perm;
pub mod scalar;
mod subset;
pub mod verifier;
pub mod weak_order;

pub use coxeter::{
    BuildConfig, CoxeterGraph, CoxeterSystem, ElemId, ElementSet, Group, GroupElement, RootTable,
};
pub use error::{Error, Result};
pub use scalar::Backend;
pub use subset::RootSubset;
pub use verifier::{Conjecture, SweepConfig, SweepMode, SweepReport};
