//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("inconsistent group: {0}")]
    InconsistentGroup(String),
    #[error("invalid note: {0}")]
    InvalidNote(String),
    #[error("out of range: onset {onset} with grid width {width}")]
    OnsetOutOfRange { onset: u32, width: usize },
    #[error("unknown pitch tuple {tuple:?} on track {track} at onset {onset}")]
    UnknownTuple { track: &'static str, onset: u32, tuple: Vec<u8> },
    #[error("undenoised score: MASK at row {row}, column {col}")]
    Undenoised { row: usize, col: usize },
    #[error("malformed pair at row {row}, column {col}: {detail}")]
    MalformedPair { row: usize, col: usize, detail: String },
    #[error("token {token} is not a {expected} token (row {row}, column {col})")]
    WrongClass { token: u32, expected: &'static str, row: usize, col: usize },
    #[error("no tracks")]
    NoTracks,
    #[error("track count {0} too large for combination count")]
    CombinationOverflow(u32),
    #[error("invalid grid width {0}, expected 1..={1}")]
    BadWidth(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("unsupported format {0}")]
    UnsupportedFormat(u16),
    #[error("SMPTE division is not supported")]
    SmpteDivision,
    #[error("unexpected end of data in {0}")]
    UnexpectedEnd(&'static str),
    #[error("unpaired note_on (channel {channel}, key {key})")]
    UnpairedNoteOn { channel: u8, key: u8 },
    #[error("no melody candidate")]
    NoMelody,
    #[error("empty song")]
    EmptySong,
    #[error("parse error at line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error("song filtered out: {0}")]
    Filtered(FilterReason),
}

/// Why the preprocessing pipeline dropped a file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterReason {
    TooFewNotes,
    TooFewTracks,
    MultipleTempos,
    NoMelody,
}

impl std::fmt::Display for FilterReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FilterReason::TooFewNotes => "too few notes",
            FilterReason::TooFewTracks => "fewer than 2 tracks",
            FilterReason::MultipleTempos => "multiple tempos",
            FilterReason::NoMelody => "no melody candidate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum DiffusionError {
    #[error("timestep count must be at least 1")]
    ZeroTimesteps,
    #[error("timestep {t} outside [{lo}, {hi}]")]
    TimestepOutOfRange { t: usize, lo: usize, hi: usize },
    #[error("zero-probability conditioning: x_t={xt} cannot arise from x_0={x0}")]
    ImpossiblePair { xt: u32, x0: u32 },
    #[error("invalid roles: {0}")]
    InvalidRoles(String),
    #[error("nothing to generate: mask set is empty")]
    EmptyMask,
    #[error("model grid mismatch: {0}")]
    ModelMismatch(String),
    #[error("non-finite loss: {0}")]
    NonFiniteLoss(String),
}

#[derive(Debug, Error)]
pub enum NnError {
    #[error("token id {id} outside vocabulary of size {k}")]
    TokenOutOfRange { id: u32, k: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("model width {0} is not divisible by head count {1}")]
    BadHeadCount(usize, usize),
    #[error("head dimension {0} must be even for rotary pairing")]
    OddHeadDim(usize),
    #[error("grid width {0} exceeds maximum {1}")]
    WidthTooLarge(usize, usize),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("vocab mismatch: checkpoint K={ckpt} but vocabulary K={vocab}")]
    VocabMismatch { ckpt: usize, vocab: usize },
}

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("empty distribution")]
    EmptyDistribution,
    #[error("no chords")]
    NoChords,
    #[error("bar count mismatch: generated {generated}, reference {reference}")]
    BarMismatch { generated: usize, reference: usize },
    #[error("track sets differ: {0}")]
    TrackMismatch(String),
}
