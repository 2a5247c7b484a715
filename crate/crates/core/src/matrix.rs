//! Dense reference matrices for the same code family.
//!
//! The set-based codec never touches these. They exist as an independent
//! route to the same answers and as the cost baseline the operation counters
//! are judged against: the matrix passes pay one multiplication per term and
//! fold whole rows, while the set passes pay additions only, and fewer.

use crate::code::{self, CodeParams, Codeword, InfoBits, Syndrome};
use crate::counts::OpCounts;
use crate::error::CodeError;
use crate::sets::Form;

/// Check matrix with `k` rows of `n` entries. Entry `(j, t)` is bit `j` of
/// the 1-based position `t`, so column `t` spells `t` in binary and the
/// columns at check positions are the unit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    params: CodeParams,
    rows: Vec<Vec<u8>>,
}

pub fn build_h(params: CodeParams) -> ParityCheckMatrix {
    let rows = (0..params.k())
        .map(|j| (1..=params.n()).map(|t| ((t >> j) & 1) as u8).collect())
        .collect();
    ParityCheckMatrix { params, rows }
}

impl ParityCheckMatrix {
    pub const fn params(&self) -> CodeParams {
        self.params
    }

    pub fn row(&self, j: u32) -> &[u8] {
        &self.rows[j as usize]
    }

    /// Entry for check `j` at 1-based position `t`.
    pub fn entry(&self, j: u32, t: usize) -> u8 {
        self.rows[j as usize][t - 1]
    }
}

/// Generator matrix with `m` rows of `n` entries. Row `i` is the codeword
/// of the `i`-th unit information word, so encoding is a vector-by-matrix
/// product over the integers followed by mod 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    params: CodeParams,
    rows: Vec<Vec<u8>>,
}

pub fn build_g(params: CodeParams) -> GeneratorMatrix {
    let m = params.m();
    let rows = (0..m)
        .map(|i| {
            let mut bits = vec![0u8; m];
            bits[i] = 1;
            let info = InfoBits::from_bits(params, bits).expect("unit vector is valid");
            code::encode(&info, Form::default()).into_bits()
        })
        .collect();
    GeneratorMatrix { params, rows }
}

impl GeneratorMatrix {
    pub const fn params(&self) -> CodeParams {
        self.params
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i]
    }
}

/// Multiply information bits by `G`, counting every term: `m * n`
/// multiplications and `(m - 1) * n` additions.
pub fn matrix_encode(
    info: &InfoBits,
    g: &GeneratorMatrix,
    counts: &mut OpCounts,
) -> Result<Codeword, CodeError> {
    if info.params() != g.params {
        return Err(CodeError::ParamsMismatch {
            left: info.params().k(),
            right: g.params.k(),
        });
    }
    let params = g.params;
    let (n, m) = (params.n(), params.m());
    let mut bits = vec![0u8; n];
    for (t, out) in bits.iter_mut().enumerate() {
        let mut acc = 0u32;
        for (i, row) in g.rows.iter().enumerate() {
            acc += u32::from(info.bits()[i]) * u32::from(row[t]);
        }
        counts.multiplications += m as u64;
        counts.additions += m as u64 - 1;
        *out = (acc % 2) as u8;
    }
    Ok(Codeword::from_raw(params, bits))
}

/// Multiply a received word by `H`, counting every term: `k * n`
/// multiplications and `k * (n - 1)` additions.
pub fn matrix_syndrome(
    word: &Codeword,
    h: &ParityCheckMatrix,
    counts: &mut OpCounts,
) -> Result<Syndrome, CodeError> {
    if word.params() != h.params {
        return Err(CodeError::ParamsMismatch {
            left: word.params().k(),
            right: h.params.k(),
        });
    }
    let n = h.params.n();
    let mut bits = Vec::with_capacity(h.rows.len());
    for row in &h.rows {
        let mut acc = 0u32;
        for (&entry, &bit) in row.iter().zip(word.bits()) {
            acc += u32::from(entry) * u32::from(bit);
        }
        counts.multiplications += n as u64;
        counts.additions += n as u64 - 1;
        bits.push((acc % 2) as u8);
    }
    Ok(Syndrome::from_bits(h.params, bits))
}

/// The counted passes whose cost is known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pass {
    MatrixEncode,
    MatrixSyndrome,
    CoreEncode,
    CoreDecode,
}

/// Closed-form operation counts for one block-sized pass.
///
/// The core predictions are independent of the enumeration form: encode
/// folds each full set (`2^(k-1) - 1` additions) and subtracts the stored
/// check bit, decode folds the full set only.
pub fn predicted_counts(params: CodeParams, pass: Pass) -> OpCounts {
    let k = u64::from(params.k());
    let n = params.n() as u64;
    let m = params.m() as u64;
    let half = 1u64 << (params.k() - 1);
    let (additions, multiplications) = match pass {
        Pass::MatrixEncode => ((m - 1) * n, m * n),
        Pass::MatrixSyndrome => (k * (n - 1), k * n),
        Pass::CoreEncode => (k * half, 0),
        Pass::CoreDecode => (k * (half - 1), 0),
    };
    OpCounts {
        additions,
        multiplications,
        comparisons: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DecodeStatus;

    fn params(k: u32) -> CodeParams {
        CodeParams::new(k).unwrap()
    }

    #[test]
    fn check_matrix_columns_count_in_binary() {
        let h = build_h(params(3));
        assert_eq!(h.row(0), &[1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(h.row(1), &[0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(h.row(2), &[0, 0, 0, 1, 1, 1, 1]);
        // Check positions carry unit columns.
        for j in 0..3u32 {
            for i in 0..3u32 {
                assert_eq!(h.entry(i, 1 << j), u8::from(i == j));
            }
        }
    }

    #[test]
    fn smallest_generator_is_the_repetition_row() {
        let g = build_g(params(2));
        assert_eq!(g.row(0), &[1, 1, 1]);
    }

    #[test]
    fn generator_rows_satisfy_every_check() {
        let p = params(4);
        let g = build_g(p);
        let h = build_h(p);
        for i in 0..p.m() {
            let word = Codeword::from_bits(p, g.row(i).to_vec()).unwrap();
            let syndrome = matrix_syndrome(&word, &h, &mut OpCounts::new()).unwrap();
            assert!(syndrome.is_clean(), "row {i}");
        }
    }

    #[test]
    fn matrix_encode_matches_known_block() {
        let p = params(4);
        let info = InfoBits::from_bits(p, vec![0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1]).unwrap();
        let g = build_g(p);
        let word = matrix_encode(&info, &g, &mut OpCounts::new()).unwrap();
        assert_eq!(word.bits(), &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1]);
    }

    #[test]
    fn matrix_syndrome_names_the_flip() {
        let p = params(4);
        let word =
            Codeword::from_bits(p, vec![0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1]).unwrap();
        let h = build_h(p);
        let syndrome = matrix_syndrome(&word, &h, &mut OpCounts::new()).unwrap();
        assert_eq!(syndrome.bits(), &[1, 0, 1, 0]);
        assert_eq!(syndrome.value(), 5);
        // The set-based decoder agrees.
        assert_eq!(
            code::decode(&word, Form::U).status(),
            DecodeStatus::Corrected(5)
        );
    }

    #[test]
    fn counted_passes_match_closed_forms() {
        let p = params(4);
        let g = build_g(p);
        let h = build_h(p);
        let info = InfoBits::from_bits(p, vec![1; p.m()]).unwrap();

        let mut counts = OpCounts::new();
        let word = matrix_encode(&info, &g, &mut counts).unwrap();
        assert_eq!(counts.multiplications, 165); // m * n = 11 * 15
        assert_eq!(counts.additions, 150); // (m - 1) * n = 10 * 15
        assert_eq!(counts, predicted_counts(p, Pass::MatrixEncode));

        let mut counts = OpCounts::new();
        matrix_syndrome(&word, &h, &mut counts).unwrap();
        assert_eq!(counts.multiplications, 60); // k * n = 4 * 15
        assert_eq!(counts.additions, 56); // k * (n - 1) = 4 * 14
        assert_eq!(counts, predicted_counts(p, Pass::MatrixSyndrome));
    }

    #[test]
    fn one_info_bit_still_multiplies_across_the_row() {
        // k = 2 has m = 1: no additions at all, one product per column.
        let p = params(2);
        let g = build_g(p);
        let info = InfoBits::from_bits(p, vec![1]).unwrap();
        let mut counts = OpCounts::new();
        matrix_encode(&info, &g, &mut counts).unwrap();
        assert_eq!(counts.multiplications, 3);
        assert_eq!(counts.additions, 0);
    }

    #[test]
    fn rejects_mismatched_parameters() {
        let info = InfoBits::from_bits(params(3), vec![0; 4]).unwrap();
        let g = build_g(params(4));
        assert_eq!(
            matrix_encode(&info, &g, &mut OpCounts::new()),
            Err(CodeError::ParamsMismatch { left: 3, right: 4 })
        );
        let word = Codeword::zero(params(4));
        let h = build_h(params(3));
        assert_eq!(
            matrix_syndrome(&word, &h, &mut OpCounts::new()),
            Err(CodeError::ParamsMismatch { left: 4, right: 3 })
        );
    }
}
