//! Finite poset partitions, scattered order-type terms, symbolic example posets, and
//! desk-scale verification of finite lemmas about them.

pub mod families;
pub mod oracle;
pub mod ordertype;
pub mod partition;
pub mod poset;
pub mod random;
pub mod report;
pub mod sweep;
pub mod verifier;

pub use poset::{ElementId, FinitePoset, IntervalQuery, PosetError, PosetFile, Subset};
pub use report::{Status, VerificationReport};
