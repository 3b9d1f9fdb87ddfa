//! Fundamental groups of complements of real conic-line arrangements.
//!
//! The pipeline: local braid monodromies (numerically tracked or taken from
//! closed-form models), braid monodromy factorizations, van Kampen
//! presentations, Tietze simplification and invariant-based comparison.

pub mod braid;
pub mod catalog;
pub mod invariants;
pub mod local_models;
pub mod tracker;
pub mod van_kampen;
pub mod word;
