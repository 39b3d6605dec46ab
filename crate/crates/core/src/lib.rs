//! Exact invariant theory of finite matrix groups.
//!
//! Scalars live in cyclotomic fields, groups are closed matrix groups with
//! Cayley tables, and invariant rings are computed by exact linear algebra.
//! The toric module specializes everything to diagonal abelian actions.

pub mod arith;
pub mod group;
pub mod poly;
pub mod reflection;
pub mod toric;
pub mod invariant;
pub mod builtin;
pub mod geometry;
