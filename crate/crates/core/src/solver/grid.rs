/// Fixed-size bit array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    len: u64,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: u64) -> Self {
        Self { len, words: vec![0; len.div_ceil(64) as usize] }
    }

    pub fn bytes_for(len: u64) -> u64 {
        len.div_ceil(64) * 8
    }

    #[cfg(test)]
    pub fn len(&self) -> u64 {
        self.len
    }

    #[inline(always)]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] >> (i & 63) & 1 != 0
    }

    #[inline(always)]
    pub fn set(&mut self, i: u64) {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] |= 1 << (i & 63);
    }
}

/// One bit per cell of a `width x height` rectangle, `x`-major so that the
/// storage order is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGrid {
    height: u64,
    bits: BitSet,
}

impl BitGrid {
    pub fn new(width: u64, height: u64) -> Self {
        Self { height, bits: BitSet::new(width * height) }
    }

    #[inline(always)]
    pub fn get(&self, x: u64, y: u64) -> bool {
        self.bits.get(x * self.height + y)
    }

    #[inline(always)]
    pub fn set(&mut self, x: u64, y: u64) {
        self.bits.set(x * self.height + y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_and_get() {
        let mut g = BitGrid::new(7, 13);
        g.set(0, 0);
        g.set(6, 12);
        g.set(3, 5);
        for x in 0..7 {
            for y in 0..13 {
                assert_eq!(g.get(x, y), matches!((x, y), (0, 0) | (6, 12) | (3, 5)));
            }
        }
        assert_eq!(BitSet::bytes_for(65), 16);
    }
}
