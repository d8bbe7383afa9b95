//! Density-matrix simulation of micro-macro superposition states under local
//! qubit noise: state families, Kraus channels, logarithmic negativity,
//! discord, closed-form eigenvalue oracles and a sweep harness.

pub mod analytic;
pub mod channels;
pub mod correlations;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod states;

pub use analytic::{analytic_log_negativity, validate_against_dense, AnalyticCase, FormulaId};
pub use channels::{make_channel, ChannelKind, KrausChannel};
pub use correlations::{discord, log_negativity, mutual_information, partial_trace, partial_transpose, von_neumann_entropy};
pub use error::{Error, Result};
pub use linalg::{Matrix, C64};
pub use states::{build_density, build_pure, dicke, to_density, Bipartition, DensityMatrix, FamilyKind, PureState, StateFamily};
