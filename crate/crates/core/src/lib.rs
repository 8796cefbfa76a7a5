//! Workbench for finite relational structures, partial-polymorphism-closed
//! CSP templates, CFI-style instances over Z3 and Z4, and the two
//! Spoiler/Duplicator games that certify their indistinguishability.
//!
//! Everything is deterministic: element sets are kept sorted, randomized
//! verifiers take explicit seeds, and identical inputs produce byte-identical
//! outputs.

pub mod cfi;
pub mod cli;
pub mod csp;
pub mod games;
pub mod linalg;
pub mod partial_poly;
pub mod report;
pub mod structures;
pub mod templates;

mod gen;

pub use report::Report;
