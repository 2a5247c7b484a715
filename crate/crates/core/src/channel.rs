//! Single-error channel: deterministic bit flips over a block stream.
//!
//! Corruption is a test instrument here, so reproducibility outranks
//! statistical niceties: a run is fixed entirely by its spec, independent
//! of platform, thread count, or what earlier blocks drew.

use crate::code::Codeword;
use crate::error::CodeError;

/// Keyed pseudo-random generator driving the probabilistic channel.
///
/// The 64-bit state advances by a fixed odd constant and each output is a
/// bit-mix of the new state, so streams from equal seeds are identical
/// everywhere and any state value is allowed, including zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)` built from the top 53 bits, the full
    /// precision a double can hold.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// How to damage a stream of blocks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelSpec {
    /// Flip exactly one named bit of one named block.
    FlipExact { block: usize, position: usize },
    /// Per block, independently: with probability `prob` flip one uniformly
    /// chosen position. At most one flip lands in any block.
    Bernoulli { prob: f64, seed: u64 },
}

/// Flips applied to a stream, as `(block index, 1-based position)` pairs
/// in block order.
pub type FlipLog = Vec<(usize, usize)>;

/// Copy of `word` with the bit at 1-based `position` inverted.
pub fn flip(word: &Codeword, position: usize) -> Result<Codeword, CodeError> {
    let n = word.params().n();
    if position < 1 || position > n {
        return Err(CodeError::PositionOutOfRange { position, n });
    }
    let mut out = word.clone();
    out.toggle(position);
    Ok(out)
}

/// Apply `spec` to every block, returning the damaged blocks plus a log of
/// `(block index, flipped position)` pairs in block order.
pub fn corrupt_stream(
    blocks: &[Codeword],
    spec: &ChannelSpec,
) -> Result<(Vec<Codeword>, FlipLog), CodeError> {
    match *spec {
        ChannelSpec::FlipExact { block, position } => {
            let Some(target) = blocks.get(block) else {
                return Err(CodeError::BlockOutOfRange {
                    block,
                    count: blocks.len(),
                });
            };
            let mut out = blocks.to_vec();
            out[block] = flip(target, position)?;
            Ok((out, vec![(block, position)]))
        }
        ChannelSpec::Bernoulli { prob, seed } => {
            if !(0.0..=1.0).contains(&prob) {
                return Err(CodeError::ProbabilityOutOfRange(prob));
            }
            let mut rng = SplitMix64::new(seed);
            let mut out = Vec::with_capacity(blocks.len());
            let mut log = Vec::new();
            for (index, word) in blocks.iter().enumerate() {
                // Both draws are consumed whether or not the flip fires, so
                // block i's fate never depends on earlier outcomes.
                let fires = rng.next_f64() < prob;
                let draw = rng.next_u64();
                if fires {
                    let position = 1 + (draw % word.params().n() as u64) as usize;
                    out.push(flip(word, position)?);
                    log.push((index, position));
                } else {
                    out.push(word.clone());
                }
            }
            Ok((out, log))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeParams;

    fn blocks(k: u32, count: usize) -> Vec<Codeword> {
        let params = CodeParams::new(k).unwrap();
        let mut rng = SplitMix64::new(0xB10C);
        (0..count)
            .map(|_| {
                let bits = (0..params.n())
                    .map(|_| (rng.next_u64() & 1) as u8)
                    .collect();
                Codeword::from_bits(params, bits).unwrap()
            })
            .collect()
    }

    fn distance(a: &Codeword, b: &Codeword) -> usize {
        a.bits()
            .iter()
            .zip(b.bits())
            .filter(|(x, y)| x != y)
            .count()
    }

    #[test]
    fn generator_matches_reference_stream() {
        // First five outputs for seed 1234567, a widely published fixture
        // for this mixer.
        let mut rng = SplitMix64::new(1234567);
        let expect = [
            6457827717110365317u64,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ];
        for value in expect {
            assert_eq!(rng.next_u64(), value);
        }
    }

    #[test]
    fn unit_draws_stay_in_range() {
        let mut rng = SplitMix64::new(0);
        for _ in 0..1000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn flip_is_a_self_inverse() {
        let word = &blocks(4, 1)[0];
        let once = flip(word, 9).unwrap();
        assert_eq!(distance(word, &once), 1);
        assert_ne!(once.bit(9), word.bit(9));
        assert_eq!(&flip(&once, 9).unwrap(), word);
    }

    #[test]
    fn flip_rejects_positions_off_the_block() {
        let word = &blocks(3, 1)[0];
        assert_eq!(
            flip(word, 0),
            Err(CodeError::PositionOutOfRange { position: 0, n: 7 })
        );
        assert_eq!(
            flip(word, 8),
            Err(CodeError::PositionOutOfRange { position: 8, n: 7 })
        );
    }

    #[test]
    fn exact_spec_hits_only_the_named_block() {
        let stream = blocks(3, 4);
        let spec = ChannelSpec::FlipExact {
            block: 2,
            position: 5,
        };
        let (out, log) = corrupt_stream(&stream, &spec).unwrap();
        assert_eq!(log, vec![(2, 5)]);
        for (i, (before, after)) in stream.iter().zip(&out).enumerate() {
            assert_eq!(distance(before, after), usize::from(i == 2));
        }
    }

    #[test]
    fn exact_spec_rejects_missing_block() {
        let stream = blocks(3, 4);
        let spec = ChannelSpec::FlipExact {
            block: 4,
            position: 1,
        };
        assert_eq!(
            corrupt_stream(&stream, &spec),
            Err(CodeError::BlockOutOfRange { block: 4, count: 4 })
        );
    }

    #[test]
    fn probability_bounds_are_enforced() {
        let stream = blocks(3, 1);
        for prob in [-0.1, 1.5, f64::NAN] {
            let spec = ChannelSpec::Bernoulli { prob, seed: 1 };
            assert!(matches!(
                corrupt_stream(&stream, &spec),
                Err(CodeError::ProbabilityOutOfRange(_))
            ));
        }
    }

    #[test]
    fn zero_probability_leaves_the_stream_alone() {
        let stream = blocks(4, 16);
        let spec = ChannelSpec::Bernoulli { prob: 0.0, seed: 9 };
        let (out, log) = corrupt_stream(&stream, &spec).unwrap();
        assert_eq!(out, stream);
        assert!(log.is_empty());
    }

    #[test]
    fn unit_probability_flips_every_block_once() {
        let stream = blocks(4, 16);
        let spec = ChannelSpec::Bernoulli { prob: 1.0, seed: 9 };
        let (out, log) = corrupt_stream(&stream, &spec).unwrap();
        assert_eq!(log.len(), 16);
        for (i, (before, after)) in stream.iter().zip(&out).enumerate() {
            assert_eq!(distance(before, after), 1, "block {i}");
            let (block, position) = log[i];
            assert_eq!(block, i);
            assert_ne!(after.bit(position), before.bit(position));
        }
    }

    #[test]
    fn equal_specs_corrupt_identically() {
        let stream = blocks(5, 64);
        let spec = ChannelSpec::Bernoulli {
            prob: 0.5,
            seed: 42,
        };
        let first = corrupt_stream(&stream, &spec).unwrap();
        let second = corrupt_stream(&stream, &spec).unwrap();
        assert_eq!(first, second);
        // Flips land somewhere strictly between never and always.
        let hits = first.1.len();
        assert!(hits > 0 && hits < 64, "got {hits} flips");
    }

    #[test]
    fn draw_schedule_is_two_per_block() {
        // Replay the documented schedule by hand and compare logs.
        let stream = blocks(4, 32);
        let (prob, seed) = (0.4, 7u64);
        let (_, log) = corrupt_stream(&stream, &ChannelSpec::Bernoulli { prob, seed }).unwrap();
        let mut rng = SplitMix64::new(seed);
        let mut expect = Vec::new();
        for index in 0..32 {
            let fires = rng.next_f64() < prob;
            let draw = rng.next_u64();
            if fires {
                expect.push((index, 1 + (draw % 15) as usize));
            }
        }
        assert_eq!(log, expect);
    }
}
