//! Dense linear algebra over F2 with `u64`-packed bit rows.
//!
//! Pivots are always the lowest set index so every result is deterministic.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

/// A matrix stored as bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { ncols, rows: vec![BitVec::zeros(ncols); nrows] }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "row length mismatch");
        Self { ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        BitVec::from_bits(self.rows.iter().map(|r| r.dot(v)))
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVec::zeros(other.ncols);
                for k in r.ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        F2Matrix { ncols: other.ncols, rows }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        (F2Matrix { ncols: self.ncols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = BitVec::unit(self.ncols, free);
                for (row, &p) in pivots.iter().enumerate() {
                    if reduced.rows[row].get(free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.nrows(), "right-hand side length mismatch");
        // augment with b as the last column
        let aug_rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = BitVec::zeros(self.ncols + 1);
                for j in r.ones() {
                    v.set(j, true);
                }
                v.set(self.ncols, b.get(i));
                v
            })
            .collect();
        let (reduced, pivots) = F2Matrix { ncols: self.ncols + 1, rows: aug_rows }.rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = BitVec::zeros(self.ncols);
        for (row, &p) in pivots.iter().enumerate() {
            if reduced.rows[row].get(self.ncols) {
                x.set(p, true);
            }
        }
        Some(x)
    }
}

/// Incrementally built echelon basis of a subspace.
///
/// Each stored row carries a tag vector recording which inserted vectors it
/// combines, so reductions can report coordinates.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    tag_len: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
}

impl Echelon {
    pub fn new(len: usize, tag_len: usize) -> Self {
        Self { len, tag_len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combined tag of the rows used.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = v.clone();
        let mut tag = BitVec::zeros(self.tag_len);
        for (pivot, row, row_tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                tag.xor_assign(row_tag);
            }
        }
        (v, tag)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v` with the given tag; returns false if it was already in the span.
    pub fn insert(&mut self, v: &BitVec, tag: BitVec) -> bool {
        let (rem, used) = self.reduce(v);
        match rem.first_one() {
            None => false,
            Some(pivot) => {
                let mut t = tag;
                t.xor_assign(&used);
                self.rows.push((pivot, rem, t));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> F2Matrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        F2Matrix::from_rows(ncols, rows.iter().map(|r| BitVec::from_bits(r.chars().map(|c| c == '1'))).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&["110", "011", "101"]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).is_zero());
        assert_eq!(format!("{:?}", ns[0]), "[111]");
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&["110", "011"]);
        let b = BitVec::from_bits([true, false]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let a = m(&["11", "11"]);
        assert!(a.solve(&BitVec::from_bits([true, false])).is_none());
    }

    #[test]
    fn echelon_tracks_coordinates() {
        let mut e = Echelon::new(3, 2);
        assert!(e.insert(&BitVec::from_bits([true, true, false]), BitVec::unit(2, 0)));
        assert!(e.insert(&BitVec::from_bits([false, true, true]), BitVec::unit(2, 1)));
        assert!(!e.insert(&BitVec::from_bits([true, false, true]), BitVec::zeros(2)));
        let (rem, tag) = e.reduce(&BitVec::from_bits([true, false, true]));
        assert!(rem.is_zero());
        assert_eq!(tag, BitVec::from_bits([true, true]));
    }

    #[test]
    fn wide_vectors() {
        let mut v = BitVec::zeros(200);
        v.set(130, true);
        assert_eq!(v.first_one(), Some(130));
        assert_eq!(v.count_ones(), 1);
        v.flip(130);
        assert!(v.is_zero());
    }
}
