//! Lascoux polynomials through set-valued tableaux.
//!
//! Two independent routes compute the same polynomials: the recursion with
//! the β-deformed Demazure operators ([`poly`]) and the weighted sum over
//! set-valued tableaux whose right key lies below `key(α)` ([`starkeys`]),
//! generated by square-root crystal operators ([`crystal`]).

pub mod crystal;
pub mod poly;
pub mod starkeys;
pub mod tableaux;
pub mod verify;

pub use num_bigint::BigInt;
pub use poly::Polynomial;
pub use tableaux::{Composition, EntrySet, KeyTableau, Partition, SetValuedTableau};
