//! Exact {k}-packing numbers of graphs and recognition of graphs whose
//! closed neighbourhood matrix is perfect.
//!
//! Nodes, rows and columns are zero-based in memory. Text formats and
//! JSON output use 1-based labels.

pub mod certify;
pub mod error;
pub mod generators;
pub mod graph;
mod labels;
pub mod packing;
pub mod perfection;
pub mod recognition;
pub mod report;
pub mod suites;
#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use generators::{FamilySpec, Generated};
pub use graph::{closed_neighbourhood_matrix, BinaryMatrix, Graph};
pub use packing::{PackingFunction, SolveResult, Variant};
pub use perfection::{PerfectionReport, RationalPoint};
pub use recognition::{Method, RecognitionCertificate, Witness};
pub use report::{AnalysisReport, InputDescriptor};
