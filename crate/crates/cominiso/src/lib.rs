//! Decides whether two Schubert varieties in (possibly different)
//! cominuscule flag varieties are isomorphic.
//!
//! A cominuscule flag variety `X` is determined by a Dynkin diagram together
//! with a cominuscule simple root `γ` (one appearing with coefficient 1 in
//! the highest root). Its Schubert varieties are indexed by lower order
//! ideals in the poset `P_X` of positive roots above `γ`, each root labeled
//! long or short. Two Schubert varieties are isomorphic exactly when their
//! labeled posets are isomorphic, and this crate decides that criterion
//! through three independent routes that must always agree:
//!
//! * **poset** — direct backtracking search for a labeled poset isomorphism;
//! * **chow** — reconstruct each labeled poset from nothing but the degree
//!   lowering multiplication table of its Schubert basis, then compare;
//! * **minimal** — embed each Schubert variety in the smallest cominuscule
//!   flag variety containing it and compare the resulting marked diagrams
//!   and transported ideals.
//!
//! The [`census`] module runs all of this over whole catalogs of spaces and
//! partitions every Schubert variety into isomorphism classes.

pub mod census;
pub mod chow;
pub mod comin_poset;
pub mod error;
pub mod labeled_poset;
pub mod layout;
pub mod minimal_model;
pub mod root_system;
pub mod space;
pub mod weyl;


pub use comin_poset::{CominPoset, Ideal};
pub use error::{Error, Result};

pub use root_system::{DynkinType, Family, LengthClass, Root, RootSystem};

