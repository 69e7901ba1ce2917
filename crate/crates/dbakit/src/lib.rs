//! Finite formal contexts, their pair algebras, finite double Boolean
//! algebras, and machine verification of the representation and duality
//! facts connecting them.
//!
//! The pieces, bottom up:
//!
//! - [`context`]: formal contexts with the derivation and modal operators.
//! - [`concept`]: semiconcepts, protoconcepts and their object-oriented
//!   variants; enumeration and materialization as operation tables.
//! - [`dba`]: finite double Boolean algebras, axiom sweeps, classification,
//!   Boolean reducts and bridges, homomorphisms, pure-part extension.
//! - [`filters`]: filters, ideals, the primary spectrum and the standard
//!   context.
//! - [`topology`]: finite topologies, contexts on topological spaces,
//!   relation continuity, clopen pair algebras, Stone contexts.
//! - [`representation`]: the spectrum CTS of a dBa, the realization maps
//!   and their verdict ladder, evaluation maps back from Stone contexts,
//!   and instance-level functor checks.
//!
//! Every runnable capability has a worked example under `examples/`; the
//! thin `dbakit` binary exposes enumeration, verification suites and seeded
//! instance generation over the file formats in [`io`].

pub mod cli;
pub mod concept;
pub mod context;
pub mod dba;
pub mod error;
pub mod filters;
pub mod io;
pub mod random;
pub mod report;
pub mod representation;
pub mod samples;
pub mod set;
pub mod topology;

pub use concept::{ConceptAlgebra, ConceptPair, DEFAULT_CANDIDATE_CAP};
pub use context::{AttributeSet, FormalContext, MorphismClass, ObjectSet};
pub use dba::{DbaClass, DbaHom, FiniteDba, ValidationReport};
pub use error::{Error, Result};
pub use filters::{CarrierSubset, PrimarySpectrum, SubsetKind};
pub use report::TheoremReport;
pub use set::BitSet;
pub use topology::{Cts, CtsHom, CtsHomClass, FiniteTopology};
