//! Argument subsets as fixed-width bit sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr};

/// A subset of a framework's arguments, stored as a bit set.
///
/// Bit `i` stands for the argument with index `i` in the framework the set
/// was built against. Equality is extensional: two sets are equal exactly
/// when they contain the same indices. The ordering is the canonical
/// extension order used everywhere in this crate: ascending cardinality
/// first, then ascending numeric value of the bit pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ArgSet {
    bits: u64,
}

impl ArgSet {
    /// Widest supported framework; one bit per argument.
    pub const MAX_WIDTH: usize = 64;

    /// The empty set.
    pub const EMPTY: ArgSet = ArgSet { bits: 0 };

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::MAX_WIDTH);
        if n == Self::MAX_WIDTH {
            ArgSet { bits: u64::MAX }
        } else {
            ArgSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    /// The set `{index}`.
    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < Self::MAX_WIDTH);
        ArgSet { bits: 1u64 << index }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            debug_assert!(i < Self::MAX_WIDTH);
            bits |= 1u64 << i;
        }
        ArgSet { bits }
    }

    /// Reinterprets a raw bit pattern as a set.
    pub fn from_bits(bits: u64) -> Self {
        ArgSet { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, index: usize) -> bool {
        index < Self::MAX_WIDTH && self.bits & (1u64 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < Self::MAX_WIDTH);
        self.bits |= 1u64 << index;
    }

    /// Number of members.
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(self, other: ArgSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members of `self` that are not in `other`.
    pub fn difference(self, other: ArgSet) -> ArgSet {
        ArgSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn intersects(self, other: ArgSet) -> bool {
        self.bits & other.bits != 0
    }

    /// Iterates member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl BitOr for ArgSet {
    type Output = ArgSet;
    fn bitor(self, rhs: ArgSet) -> ArgSet {
        ArgSet {
            bits: self.bits | rhs.bits,
        }
    }
}

impl BitAnd for ArgSet {
    type Output = ArgSet;
    fn bitand(self, rhs: ArgSet) -> ArgSet {
        ArgSet {
            bits: self.bits & rhs.bits,
        }
    }
}

/// Canonical extension order: cardinality, then bit pattern value.
impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for ArgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ArgSet::from_indices(iter)
    }
}
