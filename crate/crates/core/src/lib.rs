//! Külshammer ideals and related invariants of finite-dimensional algebras
//! over finite fields.
//!
//! The crate is `no_std` (it needs `alloc`). Algebras are built from quiver
//! presentations, group multiplication tables or raw structure constants;
//! everything downstream works on the resulting [`algebra::Algebra`].

#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod linalg;
pub mod algebra;
pub mod form;
pub mod presentation;
pub mod kuelshammer;
pub mod stable;
pub mod families;
pub mod report;

pub use error::{Error, ErrorClass, Result};
pub use field::{Field, FieldSpec, Scalar};
pub use algebra::{Algebra, Metadata, Origin};
pub use linalg::{Echelon, Matrix, SemilinearMap, Subspace};
