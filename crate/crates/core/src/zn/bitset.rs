/// Fixed-size bitset indexed by residues `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueBitset {
    n: u64,
    words: Vec<u64>,
}

impl ResidueBitset {
    pub fn new(n: u64) -> Self {
        Self { n, words: vec![0; (n as usize).div_ceil(64)] }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: u64) {
        self.words[(v / 64) as usize] |= 1 << (v % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + bit)
            })
        })
    }
}
