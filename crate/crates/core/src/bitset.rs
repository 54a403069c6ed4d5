//! Fixed-capacity bit set over vertex ids.
//!
//! The solver stores one resolver set per vertex pair and spends most of its
//! time intersecting them, so the representation is a plain `Vec<u64>` with
//! word-level access for the hot loops.

/// Set of vertex ids below a fixed capacity.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    /// Set containing every id below `capacity`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for w in s.bits.iter_mut() {
            *w = u64::MAX;
        }
        let tail = capacity % 64;
        if tail != 0 {
            if let Some(last) = s.bits.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Inserts `v`; returns true when it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let fresh = self.bits[w] & b == 0;
        self.bits[w] |= b;
        fresh
    }

    /// Removes `v`; returns true when it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let had = self.bits[w] & b != 0;
        self.bits[w] &= !b;
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.bits[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.bits.iter_mut().for_each(|w| *w = 0);
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let v = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                Some(v)
            })
        })
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Raw words, for callers that combine several masks in one pass.
    pub fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects ids into a set sized to fit the largest one.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let ids: Vec<usize> = iter.into_iter().collect();
        let cap = ids.iter().max().map_or(0, |m| m + 1);
        let mut s = VertexSet::new(cap);
        for v in ids {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
