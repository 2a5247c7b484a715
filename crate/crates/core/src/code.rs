//! Code parameters, bit containers, and the set-based codec passes.
//!
//! Everything here works on 1-based block positions. Check bit `j` lives at
//! position `2^j` and covers exactly the positions whose binary expansion has
//! bit `j` set, so the failed checks, read as a binary numeral with check 0 as
//! the low bit, spell out the position of a single flipped bit (0 = no flip).

use crate::counts::OpCounts;
use crate::error::CodeError;
use crate::sets::{self, Form};

/// Parameters of one code in the family: `k` check bits protect a block of
/// `n = 2^k - 1` bits carrying `m = n - k` information bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    k: u32,
}

impl CodeParams {
    pub const MIN_K: u32 = 2;
    pub const MAX_K: u32 = 16;

    pub fn new(k: u32) -> Result<Self, CodeError> {
        if (Self::MIN_K..=Self::MAX_K).contains(&k) {
            Ok(Self { k })
        } else {
            Err(CodeError::CheckCountOutOfRange(k))
        }
    }

    /// Number of check bits.
    pub const fn k(self) -> u32 {
        self.k
    }

    /// Block length in bits.
    pub const fn n(self) -> usize {
        (1 << self.k) - 1
    }

    /// Information bits per block.
    pub const fn m(self) -> usize {
        self.n() - self.k as usize
    }

    /// Whether 1-based `position` holds a check bit, i.e. is a power of two.
    pub fn is_check_position(self, position: usize) -> Result<bool, CodeError> {
        if position < 1 || position > self.n() {
            return Err(CodeError::PositionOutOfRange {
                position,
                n: self.n(),
            });
        }
        Ok(position.is_power_of_two())
    }

    /// Check-bit positions 1, 2, 4, ... in ascending order.
    pub fn check_positions(self) -> impl Iterator<Item = usize> {
        (0..self.k).map(|j| 1usize << j)
    }

    /// Information positions: every position in `1..=n` that is not a power
    /// of two, ascending.
    pub fn info_positions(self) -> impl Iterator<Item = usize> {
        (1..=self.n()).filter(|p| !p.is_power_of_two())
    }

    pub(crate) fn validate_check_index(self, j: u32) -> Result<(), CodeError> {
        if j < self.k {
            Ok(())
        } else {
            Err(CodeError::CheckIndexOutOfRange { j, k: self.k })
        }
    }
}

fn validate_bits(bits: &[u8], expected: usize) -> Result<(), CodeError> {
    if bits.len() != expected {
        return Err(CodeError::LengthMismatch {
            expected,
            got: bits.len(),
        });
    }
    for (index, &value) in bits.iter().enumerate() {
        if value > 1 {
            return Err(CodeError::NotABit { index, value });
        }
    }
    Ok(())
}

/// A full block of `n` bits, one byte per bit, position 1 first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    params: CodeParams,
    bits: Vec<u8>,
}

impl Codeword {
    /// Wrap raw bits; rejects wrong lengths and values other than 0/1.
    pub fn from_bits(params: CodeParams, bits: Vec<u8>) -> Result<Self, CodeError> {
        validate_bits(&bits, params.n())?;
        Ok(Self { params, bits })
    }

    pub fn zero(params: CodeParams) -> Self {
        Self {
            params,
            bits: vec![0; params.n()],
        }
    }

    /// Internal constructor for bits already known to be valid.
    pub(crate) fn from_raw(params: CodeParams, bits: Vec<u8>) -> Self {
        debug_assert!(validate_bits(&bits, params.n()).is_ok());
        Self { params, bits }
    }

    pub const fn params(&self) -> CodeParams {
        self.params
    }

    /// Bit at 1-based `position`.
    ///
    /// Panics when `position` is 0 or past `n`; positions normally come
    /// straight from a set enumeration, which cannot leave range.
    pub fn bit(&self, position: usize) -> u8 {
        self.bits[position - 1]
    }

    /// All bits as a slice, position 1 at index 0.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub(crate) fn set_bit(&mut self, position: usize, value: u8) {
        self.bits[position - 1] = value;
    }

    pub(crate) fn toggle(&mut self, position: usize) {
        self.bits[position - 1] ^= 1;
    }
}

/// The `m` information bits of one block, in ascending position order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfoBits {
    params: CodeParams,
    bits: Vec<u8>,
}

impl InfoBits {
    /// Wrap raw bits; rejects wrong lengths and values other than 0/1.
    pub fn from_bits(params: CodeParams, bits: Vec<u8>) -> Result<Self, CodeError> {
        validate_bits(&bits, params.m())?;
        Ok(Self { params, bits })
    }

    pub(crate) fn from_raw(params: CodeParams, bits: Vec<u8>) -> Self {
        debug_assert!(validate_bits(&bits, params.m()).is_ok());
        Self { params, bits }
    }

    pub const fn params(&self) -> CodeParams {
        self.params
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }
}

/// Results of the `k` check equations, check 0 first.
///
/// Read as a binary numeral the bits give [`Syndrome::value`], the 1-based
/// position of a single flipped bit, or 0 when every equation balances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    params: CodeParams,
    bits: Vec<u8>,
}

impl Syndrome {
    pub(crate) fn from_bits(params: CodeParams, bits: Vec<u8>) -> Self {
        debug_assert_eq!(bits.len(), params.k() as usize);
        Self { params, bits }
    }

    pub const fn params(&self) -> CodeParams {
        self.params
    }

    /// Check equation results, check 0 at index 0.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// The failed checks read as a binary numeral: the flipped position,
    /// or 0 for a clean block. Always at most `n`.
    pub fn value(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .map(|(j, &bit)| (bit as usize) << j)
            .sum()
    }

    pub fn is_clean(&self) -> bool {
        self.bits.iter().all(|&bit| bit == 0)
    }
}

/// What decoding did to a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeStatus {
    /// Every check equation balanced; the block passed through unchanged.
    Clean,
    /// The syndrome named this 1-based position and the bit was flipped back.
    Corrected(usize),
}

/// Everything `decode` learned about one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    syndrome: Syndrome,
    word: Codeword,
    status: DecodeStatus,
}

impl DecodeOutcome {
    pub fn syndrome(&self) -> &Syndrome {
        &self.syndrome
    }

    /// The block after correction; identical to the input when clean.
    pub fn word(&self) -> &Codeword {
        &self.word
    }

    pub fn status(&self) -> DecodeStatus {
        self.status
    }

    pub fn into_word(self) -> Codeword {
        self.word
    }
}

/// Sum the word's bits over check set `j`, walking it in `form` order.
/// Folding the 2^(k-1) members costs one addition fewer than that.
fn set_sum(word: &Codeword, j: u32, form: Form, counts: &mut OpCounts) -> u32 {
    let mut sum = 0u32;
    sets::for_each_member(word.params(), j, form, |position| {
        sum += u32::from(word.bit(position));
    });
    counts.additions += (1 << (word.params().k() - 1)) - 1;
    sum
}

/// Value check bit `j` must hold: the mod-2 sum of every other position in
/// its set.
///
/// Computed as the full-set sum minus the stored check bit, so whatever the
/// check slot holds cancels out and every enumeration form costs the same.
pub fn parity_bit(word: &Codeword, j: u32, form: Form) -> Result<u8, CodeError> {
    parity_bit_counted(word, j, form, &mut OpCounts::new())
}

pub fn parity_bit_counted(
    word: &Codeword,
    j: u32,
    form: Form,
    counts: &mut OpCounts,
) -> Result<u8, CodeError> {
    word.params().validate_check_index(j)?;
    let sum = set_sum(word, j, form, counts);
    let stored = u32::from(word.bit(1 << j));
    counts.additions += 1;
    Ok(((sum - stored) % 2) as u8)
}

/// Check equation `j` over the full set; 0 when the equation balances.
pub fn syndrome_bit(word: &Codeword, j: u32, form: Form) -> Result<u8, CodeError> {
    syndrome_bit_counted(word, j, form, &mut OpCounts::new())
}

pub fn syndrome_bit_counted(
    word: &Codeword,
    j: u32,
    form: Form,
    counts: &mut OpCounts,
) -> Result<u8, CodeError> {
    word.params().validate_check_index(j)?;
    Ok((set_sum(word, j, form, counts) % 2) as u8)
}

/// Overwrite every check slot of `word` with its computed parity bit.
///
/// Each check position is a member of its own set only (a power of two has
/// a single binary digit), and the parity sum subtracts the stored slot, so
/// stale check values cannot leak into the result and the fill order does
/// not matter.
fn fill_checks(word: &mut Codeword, form: Form, counts: &mut OpCounts) {
    for j in 0..word.params().k() {
        let bit = parity_bit_counted(word, j, form, counts).expect("j < k by construction");
        word.set_bit(1 << j, bit);
    }
}

/// Spread information bits over the non-power positions and fill the check
/// slots. Costs `k * 2^(k-1)` additions and no multiplications.
pub fn encode(info: &InfoBits, form: Form) -> Codeword {
    encode_counted(info, form, &mut OpCounts::new())
}

pub fn encode_counted(info: &InfoBits, form: Form, counts: &mut OpCounts) -> Codeword {
    let params = info.params();
    let mut word = Codeword::zero(params);
    for (position, &bit) in params.info_positions().zip(info.bits()) {
        word.set_bit(position, bit);
    }
    fill_checks(&mut word, form, counts);
    word
}

/// Recompute the check slots of an arbitrary word, leaving information bits
/// alone. The result always has an all-zero syndrome.
pub fn recompute_checks(word: &Codeword, form: Form) -> Codeword {
    recompute_checks_counted(word, form, &mut OpCounts::new())
}

pub fn recompute_checks_counted(word: &Codeword, form: Form, counts: &mut OpCounts) -> Codeword {
    let mut out = word.clone();
    fill_checks(&mut out, form, counts);
    out
}

/// Evaluate all check equations and flip the position the syndrome names,
/// if any. Costs `k * (2^(k-1) - 1)` additions and no multiplications.
pub fn decode(word: &Codeword, form: Form) -> DecodeOutcome {
    decode_counted(word, form, &mut OpCounts::new())
}

pub fn decode_counted(word: &Codeword, form: Form, counts: &mut OpCounts) -> DecodeOutcome {
    let params = word.params();
    let mut bits = Vec::with_capacity(params.k() as usize);
    for j in 0..params.k() {
        bits.push(syndrome_bit_counted(word, j, form, counts).expect("j < k by construction"));
    }
    let syndrome = Syndrome::from_bits(params, bits);
    let mut corrected = word.clone();
    let status = match syndrome.value() {
        0 => DecodeStatus::Clean,
        position => {
            corrected.toggle(position);
            DecodeStatus::Corrected(position)
        }
    };
    DecodeOutcome {
        syndrome,
        word: corrected,
        status,
    }
}

/// Read the information bits back out of a block, ascending position order.
pub fn extract_info(word: &Codeword) -> InfoBits {
    let params = word.params();
    let bits = params.info_positions().map(|p| word.bit(p)).collect();
    InfoBits::from_raw(params, bits)
}
