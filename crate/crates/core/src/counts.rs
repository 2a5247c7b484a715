use std::ops::{Add, AddAssign};

/// Tally of arithmetic work performed by a counted codec pass.
///
/// Counters are cheap saturating-free `u64` sums: summing N terms costs
/// N-1 additions, and every term-by-term product costs one multiplication.
/// Comparisons are tracked for completeness; none of the shipped passes
/// branch per element, so the field stays zero today.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounts {
    pub additions: u64,
    pub multiplications: u64,
    pub comparisons: u64,
}

impl OpCounts {
    pub const fn new() -> Self {
        Self {
            additions: 0,
            multiplications: 0,
            comparisons: 0,
        }
    }

    /// Total of all tracked operations.
    pub const fn total(&self) -> u64 {
        self.additions + self.multiplications + self.comparisons
    }
}

impl Add for OpCounts {
    type Output = OpCounts;

    fn add(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            additions: self.additions + rhs.additions,
            multiplications: self.multiplications + rhs.multiplications,
            comparisons: self.comparisons + rhs.comparisons,
        }
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: OpCounts) {
        *self = *self + rhs;
    }
}
