use thiserror::Error;

/// Errors raised by code-domain constructors and operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CodeError {
    /// Check-bit count outside the supported range.
    #[error("check-bit count k={0} outside supported range 2..=16")]
    CheckCountOutOfRange(u32),

    /// Check index must satisfy `j < k`.
    #[error("check index j={j} out of range for k={k}")]
    CheckIndexOutOfRange { j: u32, k: u32 },

    /// A bit vector had the wrong length for the code parameters.
    #[error("expected {expected} bits, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A bit vector contained a value other than 0 or 1.
    #[error("bit {index} has value {value}, expected 0 or 1")]
    NotABit { index: usize, value: u8 },

    /// A 1-based codeword position fell outside `1..=n`.
    #[error("position {position} outside 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },

    /// A block index fell outside the stream being corrupted.
    #[error("block {block} out of range, stream has {count} blocks")]
    BlockOutOfRange { block: usize, count: usize },

    /// Flip probability must lie in the closed unit interval.
    #[error("flip probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    /// Two values built for different code parameters were combined.
    #[error("code parameter mismatch: k={left} vs k={right}")]
    ParamsMismatch { left: u32, right: u32 },
}

/// Errors raised while parsing the framed stream container.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    /// Header shorter than the fixed 14 bytes.
    #[error("truncated header: got {0} bytes, need 14")]
    TruncatedHeader(usize),

    /// Magic bytes did not spell "HAM1".
    #[error("bad magic {found:02x?}, expected \"HAM1\"")]
    BadMagic { found: [u8; 4] },

    /// Unknown container version byte.
    #[error("unsupported container version {0:#04x}")]
    BadVersion(u8),

    /// Header named a check-bit count outside 2..=16.
    #[error("header check-bit count {0} outside supported range 2..=16")]
    BadCheckCount(u8),

    /// Body length disagrees with the block count implied by the header.
    #[error("body length {got} bytes, header implies {expected}")]
    BodyLength { expected: usize, got: usize },

    /// A packed block had the wrong byte length for the code parameters.
    #[error("packed block length {got} bytes, expected {expected}")]
    BlockLength { expected: usize, got: usize },
}
