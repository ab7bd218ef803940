//! Exact structure-constant computations for associative, triassociative,
//! Leibniz and ternary Leibniz algebras.
//!
//! Algebras are stored as sparse tensors over `BigRational`. Every identity
//! is checked on basis tuples and failures come back as a
//! [`ViolationReport`] listing the identity, the witness tuple and the exact
//! discrepancy.

pub mod action;
pub mod algebra;
pub mod crossed;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod functors;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod structure;
pub mod tensor;


pub use algebra::{Algebra, Kind, Slot};

pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};

pub use report::{Violation, ViolationReport};
pub use structure::Side;
pub use tensor::Tensor;
pub use action::{Action, Space};
pub use crossed::CrossedModule;
pub use operators::OperatorKind;
