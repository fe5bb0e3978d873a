//! Condorcet domains of linear orders: never-conditions, peak-pit domains,
//! geodesics in the permutahedron, connectivity, a constructive geodesic
//! builder and small-n enumeration.
//!
//! Alternatives are small integer ids (`0..16`); [`text::Alphabet`] maps them
//! to single-character labels.

pub mod builder;
pub mod connectivity;
pub mod domains;
pub mod enumerate;
pub mod error;
pub mod lemmas;
pub mod orders;
pub mod par;
pub mod paths;
pub mod text;
pub mod wiring;

pub use builder::{build_geodesic, build_geodesic_with, BuildOptions};
pub use connectivity::{connectivity_report, is_connected, is_directly_connected, no_restoration_check};
pub use domains::{classify, is_condorcet, is_peak_pit, Classification, Domain, Family, NeverCondition, Triple};
pub use error::{Error, Result};
pub use orders::{Alt, AltSet, LinearOrder, SwitchingPair};
pub use par::Exec;
pub use paths::{Path, SwitchSeq};
pub use text::Alphabet;
