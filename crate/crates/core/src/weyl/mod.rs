//! Weyl group elements, Bruhat order and Bruhat intervals.

mod bruhat;
mod element;
mod group;
mod interval;
mod inversion;
pub mod notation;

pub use bruhat::{bruhat_leq, bruhat_leq_by_reflections, covers, interval};
pub use element::WeylElement;
pub use group::{enumerate, WeylGroup, DEFAULT_CAP};
pub use interval::{interval_isomorphic, posets_isomorphic, BruhatInterval, GradedPoset};
pub use inversion::InversionSet;
