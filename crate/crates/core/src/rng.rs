//! Reproducible random streams.
//!
//! Every random decision in an experiment is drawn from a [`ChaCha8Rng`]
//! seeded with the experiment's master seed and positioned on a stream
//! derived from the work item's coordinates. ChaCha exposes 2^64
//! independent streams per key, so the stream id packs
//!
//! ```text
//!   bits 56..64  purpose tag   (network, infection, simulation, ...)
//!   bits 28..56  primary index (network index or p-grid index)
//!   bits  0..28  secondary index (simulation index)
//! ```
//!
//! Results therefore depend only on `(master_seed, tag, primary, secondary)`
//! and never on the order in which parallel workers run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use rand_chacha::ChaCha8Rng as SimRng;

/// What a substream is used for. Distinct tags never share a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum StreamTag {
    Network = 1,
    Infection = 2,
    Simulation = 3,
    Baseline = 4,
    Cli = 5,
}

const INDEX_BITS: u32 = 28;
const INDEX_MASK: u64 = (1 << INDEX_BITS) - 1;

pub fn stream_id(tag: StreamTag, primary: u64, secondary: u64) -> u64 {
    ((tag as u64) << 56) | ((primary & INDEX_MASK) << INDEX_BITS) | (secondary & INDEX_MASK)
}

/// Generator for one work item.
pub fn substream(master_seed: u64, tag: StreamTag, primary: u64, secondary: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(stream_id(tag, primary, secondary));
    rng
}
