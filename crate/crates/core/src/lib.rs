//! Matrix-free single-error codec for the `(2^k - 1, 2^k - 1 - k)` family.
//!
//! The trick is positional: check bit `j` sits at position `2^j` of the
//! block and covers exactly the positions whose binary expansion has bit
//! `j` set. A failed check therefore contributes `2^j` to the syndrome
//! value, and reading all failed checks as one binary numeral names the
//! flipped position outright. Encode and decode reduce to summing bits
//! over those index sets, which the [`sets`] module enumerates with plain
//! arithmetic; nothing stores or multiplies a matrix.
//!
//! Module map:
//! - [`code`]: parameters, bit containers, and the set-based passes.
//! - [`sets`]: the check sets and their three enumeration schedules.
//! - [`matrix`]: dense reference matrices, the independent slow route.
//! - [`counts`]: operation tallies for cost comparisons.
//! - [`channel`]: reproducible single-flip corruption.
//! - [`stream`]: the framed byte container, parallel when built with the
//!   `parallel` feature (on by default).

pub mod channel;
pub mod code;
pub mod counts;
pub mod error;
pub mod matrix;
pub mod sets;
pub mod stream;

pub use code::{
    decode, encode, extract_info, parity_bit, recompute_checks, syndrome_bit, CodeParams, Codeword,
    DecodeOutcome, DecodeStatus, InfoBits, Syndrome,
};
pub use counts::OpCounts;
pub use error::{CodeError, FormatError};
pub use sets::Form;
