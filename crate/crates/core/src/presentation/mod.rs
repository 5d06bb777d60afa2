//! Builders producing validated algebras: quiver quotients, group algebras
//! and trivial extensions.

pub mod group;
pub mod quiver;
pub mod trivext;

pub use group::{group_algebra, p_primary_decompose, p_regular_class_count, reynolds_class_sums, CayleyTable};
pub use quiver::{quotient_algebra, quotient_algebra_auto, Arrow, Quiver, QuiverAlgebra, Relation};
pub use trivext::trivial_extension;
