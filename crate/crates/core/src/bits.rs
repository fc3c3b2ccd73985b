//! Fixed-length bit table used for membership windows.

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct BitTable {
    words: Vec<u64>,
    len: usize,
}

impl BitTable {
    pub(crate) fn new(len: usize) -> Self {
        BitTable {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub(crate) fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut t = BitTable::new(len);
        for i in 0..len {
            if f(i) {
                t.set(i);
            }
        }
        t
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub(crate) fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| !self.get(i))
    }
}
