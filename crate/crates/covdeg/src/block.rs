use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A subset of a universe of at most [`MAX_WIDTH`] elements, stored as a bitmask.
/// Bit `i` corresponds to the element at position `i` of the universe.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Block {
    bits: u64,
}

/// Widest universe a single-word [`Block`] can represent.
pub const MAX_WIDTH: usize = 64;

impl Block {
    pub const EMPTY: Block = Block { bits: 0 };

    pub fn from_bits(bits: u64) -> Block {
        Block { bits }
    }

    /// The full set over a universe of `n` elements.
    pub fn full(n: usize) -> Block {
        debug_assert!(n <= MAX_WIDTH);
        if n == MAX_WIDTH {
            Block { bits: !0 }
        } else {
            Block {
                bits: (1u64 << n) - 1,
            }
        }
    }

    pub fn singleton(index: usize) -> Block {
        debug_assert!(index < MAX_WIDTH);
        Block {
            bits: 1u64 << index,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Block {
        let mut bits = 0u64;
        for i in indices {
            debug_assert!(i < MAX_WIDTH);
            bits |= 1u64 << i;
        }
        Block { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn cardinality(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_WIDTH && self.bits >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Block {
        debug_assert!(index < MAX_WIDTH);
        Block {
            bits: self.bits | 1u64 << index,
        }
    }

    pub fn is_subset_of(self, other: Block) -> bool {
        self.bits & other.bits == self.bits
    }

    /// Set-bit positions in ascending order.
    pub fn iter(self) -> Indices {
        Indices { bits: self.bits }
    }

    /// Ordering used everywhere a block sequence must be deterministic:
    /// by cardinality, then lexicographically on the ascending index list.
    pub fn canonical_cmp(self, other: Block) -> Ordering {
        self.cardinality().cmp(&other.cardinality()).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits & (diff & diff.wrapping_neg()) != 0 {
                // The lowest differing index belongs to `self`, so its index
                // list is lexicographically smaller.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(*other)
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for Block {
    type Output = Block;
    fn bitor(self, rhs: Block) -> Block {
        Block {
            bits: self.bits | rhs.bits,
        }
    }
}

impl BitAnd for Block {
    type Output = Block;
    fn bitand(self, rhs: Block) -> Block {
        Block {
            bits: self.bits & rhs.bits,
        }
    }
}

impl Sub for Block {
    type Output = Block;
    fn sub(self, rhs: Block) -> Block {
        Block {
            bits: self.bits & !rhs.bits,
        }
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Block{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the set-bit positions of a block.
pub struct Indices {
    bits: u64,
}

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_yields_ascending_indices() {
        let b = Block::from_indices([5, 0, 3]);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(b.cardinality(), 3);
    }

    #[test]
    fn canonical_order_is_cardinality_then_lexicographic() {
        let b01 = Block::from_indices([0, 1]);
        let b02 = Block::from_indices([0, 2]);
        let b03 = Block::from_indices([0, 3]);
        let b12 = Block::from_indices([1, 2]);
        let b2 = Block::singleton(2);

        // Smaller sets first.
        assert!(b2 < b01);
        // {0,1} < {0,2} < {0,3} < {1,2}: lexicographic on index lists,
        // not numeric on masks ({0,3} has mask 9 > {1,2} mask 6).
        let mut v = vec![b12, b03, b01, b02];
        v.sort();
        assert_eq!(v, vec![b01, b02, b03, b12]);
    }

    #[test]
    fn full_block_handles_max_width() {
        assert_eq!(Block::full(64).bits(), !0u64);
        assert_eq!(Block::full(3).bits(), 0b111);
        assert_eq!(Block::full(1).cardinality(), 1);
    }

    #[test]
    fn set_operators() {
        let a = Block::from_indices([0, 1]);
        let b = Block::from_indices([1, 2]);
        assert_eq!(a | b, Block::from_indices([0, 1, 2]));
        assert_eq!(a & b, Block::singleton(1));
        assert_eq!(a - b, Block::singleton(0));
        assert!(Block::singleton(1).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert!(Block::EMPTY.is_subset_of(b));
    }
}
