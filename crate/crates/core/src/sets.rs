//! Check-index sets and the schedules that walk them.
//!
//! The set for check `j` is every position in `1..=n` whose binary expansion
//! has bit `j` set. Writing a position as `q * 2^(j+1) + r * 2^j + offset`
//! with `r` either 0 or 1 shows the structure: members are the positions
//! with `r = 1`, so they fall in runs of `2^j` consecutive values starting
//! at the odd multiples of `2^j`. Each set has exactly `2^(k-1)` members,
//! the smallest being the check position `2^j` and the largest `n`.
//!
//! The schedules below generate those members arithmetically, in ascending
//! order, without testing any bits. All three visit the same positions; they
//! differ only in loop shape, which is what the operation-count comparisons
//! care about.

use crate::code::CodeParams;
use crate::error::CodeError;

/// Enumeration schedule for walking a check set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    /// Nested loops: for each run, visit `2^j` consecutive positions
    /// starting at an odd multiple of `2^j`.
    T,
    /// Single loop: member `i` is `2^j + 2i - (i mod 2^j)`.
    #[default]
    U,
    /// Single loop: member `i` is `2^j * (1 + i / 2^j) + i`.
    Floor,
}

/// Visit every member of check set `j` in ascending order.
///
/// The caller guarantees `j < k`; public entry points validate first.
pub(crate) fn for_each_member(
    params: CodeParams,
    j: u32,
    form: Form,
    mut visit: impl FnMut(usize),
) {
    let stride = 1usize << j;
    let half = 1usize << (params.k() - 1);
    match form {
        Form::T => {
            let runs = half / stride;
            for run in 0..runs {
                let base = (2 * run + 1) * stride;
                for offset in 0..stride {
                    visit(base + offset);
                }
            }
        }
        Form::U => {
            for i in 0..half {
                visit(stride + 2 * i - (i % stride));
            }
        }
        Form::Floor => {
            for i in 0..half {
                visit(stride * (1 + i / stride) + i);
            }
        }
    }
}

/// A materialized check set: the positions check bit `j` covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    j: u32,
    members: Vec<usize>,
}

impl IndexSet {
    pub const fn j(&self) -> u32 {
        self.j
    }

    /// Position of the check bit this set belongs to.
    pub const fn check_position(&self) -> usize {
        1 << self.j
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.members.binary_search(&position).is_ok()
    }
}

/// The definitional set: filter every position on its `j`-th binary digit.
/// This is the reference the arithmetic schedules are checked against.
pub fn index_set_s(params: CodeParams, j: u32) -> Result<IndexSet, CodeError> {
    params.validate_check_index(j)?;
    let members = (1..=params.n()).filter(|&u| (u >> j) & 1 == 1).collect();
    Ok(IndexSet { j, members })
}

/// Materialize the set by running an enumeration schedule.
pub fn index_set(params: CodeParams, j: u32, form: Form) -> Result<IndexSet, CodeError> {
    params.validate_check_index(j)?;
    let mut members = Vec::with_capacity(1 << (params.k() - 1));
    for_each_member(params, j, form, |u| members.push(u));
    Ok(IndexSet { j, members })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u32) -> CodeParams {
        CodeParams::new(k).unwrap()
    }

    fn members(k: u32, j: u32, form: Form) -> Vec<usize> {
        index_set(params(k), j, form).unwrap().members().to_vec()
    }

    #[test]
    fn known_sets_for_fifteen_bit_blocks() {
        let expect: [&[usize]; 4] = [
            &[1, 3, 5, 7, 9, 11, 13, 15],
            &[2, 3, 6, 7, 10, 11, 14, 15],
            &[4, 5, 6, 7, 12, 13, 14, 15],
            &[8, 9, 10, 11, 12, 13, 14, 15],
        ];
        for j in 0..4 {
            assert_eq!(
                index_set_s(params(4), j).unwrap().members(),
                expect[j as usize]
            );
            for form in [Form::T, Form::U, Form::Floor] {
                assert_eq!(members(4, j, form), expect[j as usize], "j={j} {form:?}");
            }
        }
    }

    #[test]
    fn smallest_code_sets() {
        assert_eq!(members(2, 0, Form::U), vec![1, 3]);
        assert_eq!(members(2, 1, Form::U), vec![2, 3]);
    }

    #[test]
    fn top_check_set_is_one_run() {
        // j = k-1 has a single run covering the whole upper half.
        assert_eq!(members(3, 2, Form::T), vec![4, 5, 6, 7]);
        assert_eq!(members(4, 3, Form::Floor), (8..=15).collect::<Vec<_>>());
    }

    #[test]
    fn set_shape_invariants() {
        for k in 2..=8 {
            let p = params(k);
            for j in 0..k {
                let set = index_set_s(p, j).unwrap();
                assert_eq!(set.len(), 1 << (k - 1));
                assert_eq!(set.members()[0], 1 << j);
                assert_eq!(set.check_position(), 1 << j);
                assert_eq!(*set.members().last().unwrap(), p.n());
                assert!(set.members().windows(2).all(|w| w[0] < w[1]));
                assert!(set.contains(1 << j));
            }
        }
    }

    #[test]
    fn every_check_position_belongs_to_its_own_set_only() {
        let p = params(5);
        for j in 0..5 {
            for i in 0..5 {
                let set = index_set_s(p, i).unwrap();
                assert_eq!(set.contains(1 << j), i == j);
            }
        }
    }

    #[test]
    fn rejects_check_index_at_or_past_k() {
        assert_eq!(
            index_set(params(3), 3, Form::U),
            Err(CodeError::CheckIndexOutOfRange { j: 3, k: 3 })
        );
        assert_eq!(
            index_set_s(params(3), 7),
            Err(CodeError::CheckIndexOutOfRange { j: 7, k: 3 })
        );
    }
}
