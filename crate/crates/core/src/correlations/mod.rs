//! Correlation measures across a micro : macro cut.

mod discord;
mod entropy;
mod negativity;
mod partial;

pub use discord::{
    conditional_entropy, discord, discord_with, min_conditional_entropy, min_conditional_entropy_with,
    ConditionalEntropy, DiscordOptions, DiscordResult, MeasurementBasis, MIN_OUTCOME_PROBABILITY,
};
pub use entropy::{entropy_of_spectrum, mutual_information, von_neumann_entropy, CLIP_TOL};
pub use negativity::{log_negativity, negativity, NEGATIVE_EIGENVALUE_TOL};
pub use partial::{partial_trace, partial_transpose, partial_transpose_on};
