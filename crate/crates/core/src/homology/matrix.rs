//! Dense matrices over `F_2`, rows packed 64 columns per word.

use std::fmt;

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A packed `F_2` vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// An `rows × cols` matrix over `F_2`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows: vec![BitVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 entries; every row must have `cols` entries.
    pub fn from_dense(cols: usize, rows: &[&[u8]]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v & 1 == 1);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            debug_assert_eq!(v.len(), rows);
            for r in v.ones() {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn toggle(&mut self, r: usize, c: usize) {
        self.rows[r].toggle(c)
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.rows[r]
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            if row.get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(BitVector::count_ones).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows.len(), "dimension mismatch in product");
        let mut out = BitMatrix::zeros(self.rows.len(), rhs.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for k in row.ones() {
                out.rows[r].xor_assign(&rhs.rows[k]);
            }
        }
        out
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &BitVector) -> BitVector {
        assert_eq!(self.cols, v.len());
        let mut out = BitVector::zeros(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            let dot = row
                .words
                .iter()
                .zip(&v.words)
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if dot & 1 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Row reduction in place; returns the pivot column of each nonzero row,
    /// in order. With `reduced`, pivots are also cleared above.
    fn eliminate(&mut self, reduced: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows.len() {
                break;
            }
            let Some(found) = (next..self.rows.len()).find(|&r| self.rows[r].get(col)) else {
                continue;
            };
            self.rows.swap(next, found);
            let pivot = self.rows[next].clone();
            let start = if reduced { 0 } else { next + 1 };
            for r in start..self.rows.len() {
                if r != next && self.rows[r].get(col) {
                    self.rows[r].xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.cols < self.rows.len() {
            return self.transpose().rank();
        }
        self.clone().eliminate(false).len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in pivots.iter().enumerate() {
                    if reduced.rows[row].get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.rows.len();
        if n != self.cols {
            return None;
        }
        if n == 0 {
            return Some(BitMatrix::zeros(0, 0));
        }
        let mut aug = BitMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in self.rows[r].ones() {
                aug.set(r, c, true);
            }
            aug.set(r, n + r, true);
        }
        let pivots = aug.eliminate(true);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = BitMatrix::zeros(n, n);
        for r in 0..n {
            for c in aug.rows[r].ones() {
                if c >= n {
                    inv.set(r, c - n, true);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows.len(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

/// Rank of the span of `vectors`.
pub fn span_rank(len: usize, vectors: &[BitVector]) -> usize {
    let mut basis: Vec<BitVector> = Vec::new();
    for v in vectors {
        debug_assert_eq!(v.len(), len);
        let mut v = v.clone();
        for b in &basis {
            if let Some(lead) = b.first_one() {
                if v.get(lead) {
                    v.xor_assign(b);
                }
            }
        }
        if !v.is_zero() {
            // keep basis in reduced form so leads stay unique
            let lead = v.first_one().unwrap();
            for b in basis.iter_mut() {
                if b.get(lead) {
                    b.xor_assign(&v);
                }
            }
            basis.push(v);
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(3, 7).rank(), 0);
        assert_eq!(BitMatrix::from_dense(2, &[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(BitMatrix::zeros(0, 4).rank(), 0);
        assert_eq!(BitMatrix::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 64, true);
        m.set(2, 0, true);
        m.set(2, 64, true);
        m.set(2, 129, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_basis().len(), 128);
    }

    #[test]
    fn inverse_of_unitriangular() {
        let m = BitMatrix::from_dense(3, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), BitMatrix::identity(3));
        assert!(BitMatrix::from_dense(2, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    fn matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
        (0..max, 0..max).prop_flat_map(|(r, c)| {
            prop::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
                let mut m = BitMatrix::zeros(r, c);
                for (i, b) in bits.into_iter().enumerate() {
                    if b {
                        m.set(i / c.max(1), i % c.max(1), true);
                    }
                }
                m
            })
        })
    }

    // independent rank: count pivots by brute-force Gaussian elimination on
    // bool vectors
    fn naive_rank(m: &BitMatrix) -> usize {
        let mut rows: Vec<Vec<bool>> = (0..m.num_rows())
            .map(|r| (0..m.num_cols()).map(|c| m.get(r, c)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.num_cols() {
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) {
                rows.swap(rank, p);
                for r in 0..rows.len() {
                    if r != rank && rows[r][col] {
                        let pivot = rows[rank].clone();
                        for (x, y) in rows[r].iter_mut().zip(pivot) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    proptest! {
        #[test]
        fn rank_agrees_with_naive(m in matrix(90)) {
            prop_assert_eq!(m.rank(), naive_rank(&m));
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in matrix(70)) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(kernel.len() + m.rank(), m.num_cols());
            for v in &kernel {
                prop_assert!(m.apply(v).is_zero());
            }
            prop_assert_eq!(span_rank(m.num_cols(), &kernel), kernel.len());
        }

        #[test]
        fn span_rank_is_column_rank(m in matrix(40)) {
            let cols: Vec<BitVector> = (0..m.num_cols()).map(|c| m.column(c)).collect();
            prop_assert_eq!(span_rank(m.num_rows(), &cols), m.rank());
        }
    }
}
