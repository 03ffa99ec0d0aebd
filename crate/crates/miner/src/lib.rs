//! Sweeps (shape, center) pairs, keeps relations stable across seeded samples
//! and filters those inherited from an ancestor shape.

mod center;
pub mod fixtures;
mod mine;
pub mod report;
mod verify;

pub use center::{Center, CenterSpec};
pub use mine::{
    mine, sample_seeds, shape_caps, stream_seed, Confirmation, Diagnostic, Finding, MineOutput, Miner, Novelty, RunConfig,
    CONFIRM_SAMPLES, DEFAULT_SAMPLES, HP_SAMPLES,
};
pub use verify::{verify, Claim, Outcome, SampleCheck, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum MinerError {
    #[error("cannot read center `{0}`; expected an index, `brocard1` or `family(k=..)`")]
    CenterSpec(String),
    #[error("X{0} is not in the catalog")]
    NotInCatalog(u32),
    #[error("family: {0}")]
    Family(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },
}
