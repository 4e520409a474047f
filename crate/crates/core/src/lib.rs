//! Binary reliability block diagrams.
//!
//! Diagrams are terms over elementary components combined in series,
//! parallel and complement. This crate parses and renders them, evaluates
//! the structure function, decides equality through reduced ordered decision
//! graphs, computes reliabilities over independent components, and checks
//! the Boolean-algebra laws of diagrams and of their canonical forms.
//!
//! ```
//! use rbd_core::{parse, reliability_exact, GeneratingSet, ReliabilityAssignment};
//!
//! let d = parse("A1 * A2 + A1 * A3").unwrap();
//! let p = ReliabilityAssignment::from_slice(&[0.9, 0.8, 0.5]).unwrap();
//! let r = reliability_exact(&d, &GeneratingSet::of(&d), &p).unwrap();
//! assert!((r - 0.81).abs() < 1e-12);
//! ```

pub mod canonical;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod laws;
pub mod parser;
pub mod reliability;

pub use canonical::{enumerate_classes, equals, CanonicalForm, ClassEnumeration, NodeStore};
pub use diagram::{ComponentId, Diagram, GeneratingSet, StateAssignment};
pub use error::{Error, Result};
pub use laws::{
    check_diagram_algebra, check_reliability_algebra, check_structure_homomorphism, LawReport,
};
pub use parser::{parse, render, ParseError, ParseErrorKind};
pub use reliability::{
    reliability_bruteforce, reliability_exact, reliability_montecarlo, reliability_polynomial,
    MonteCarloReport, ReliabilityAssignment, ReliabilityPolynomial,
};
