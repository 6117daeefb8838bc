//! `Q_n` homology of graded `F_2` complexes with a single differential of
//! fixed degree, and the cofiber sequence
//! `Gr_d(R^{m-1}) → Gr_d(R^m) → C_d(R^m)`.

pub mod matrix;

use thiserror::Error;

pub use matrix::{span_rank, BitMatrix, BitVector};

use crate::schubert::{
    conjugated_map, lenart_qn, lenart_qn_matrix_with_basis, multiply_by_polynomial, qn_shift, Grid,
    GridBasis, SchubertVector,
};
use crate::steenrod::{alpha, milnor_q_monomial, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("map does not square to zero starting in degree {degree}")]
    NotADifferential { degree: usize },
    #[error("the cofiber of Gr_{d}(R^{m}) needs 1 <= d < m")]
    GridTooSmall { d: usize, m: usize },
    #[error("{what} has odd value {value}")]
    ParityViolation { what: &'static str, value: i64 },
}

/// A degree-`shift` map on a graded vector space with `dims[t]` in degree `t`.
/// `blocks[t]` is the `dims[t + shift] × dims[t]` matrix out of degree `t`
/// (with zero rows when `t + shift` is past the top).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    shift: usize,
    dims: Vec<usize>,
    blocks: Vec<BitMatrix>,
}

impl GradedMap {
    pub fn zero(shift: usize, dims: Vec<usize>) -> Self {
        let blocks = (0..dims.len())
            .map(|t| BitMatrix::zeros(dims.get(t + shift).copied().unwrap_or(0), dims[t]))
            .collect();
        GradedMap {
            shift,
            dims,
            blocks,
        }
    }

    /// Panics if a block has the wrong shape.
    pub fn from_blocks(shift: usize, dims: Vec<usize>, blocks: Vec<BitMatrix>) -> Self {
        assert!(shift > 0, "shift must be positive");
        assert_eq!(blocks.len(), dims.len(), "one block per degree");
        for (t, b) in blocks.iter().enumerate() {
            let target = dims.get(t + shift).copied().unwrap_or(0);
            assert_eq!(
                (b.num_rows(), b.num_cols()),
                (target, dims[t]),
                "block shape in degree {t}"
            );
        }
        GradedMap {
            shift,
            dims,
            blocks,
        }
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, t: usize) -> usize {
        self.dims.get(t).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Number of degrees carried (top degree plus one).
    pub fn degrees(&self) -> usize {
        self.dims.len()
    }

    pub fn block(&self, t: usize) -> &BitMatrix {
        &self.blocks[t]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(BitMatrix::is_zero)
    }

    /// Ok when the map squares to zero; otherwise the first failing degree.
    pub fn check_differential(&self) -> Result<(), HomologyError> {
        for t in 0..self.dims.len() {
            let next = t + self.shift;
            if next >= self.dims.len() || self.blocks[t].is_zero() {
                continue;
            }
            if !self.blocks[next].mul(&self.blocks[t]).is_zero() {
                return Err(HomologyError::NotADifferential { degree: t });
            }
        }
        Ok(())
    }

    /// Restriction to the graded pieces spanned by `keep[t]` (indices into
    /// degree `t`), composed with projection onto the same pieces. This is
    /// the induced map on a subcomplex or quotient complex.
    pub fn restrict(&self, keep: &[Vec<usize>]) -> GradedMap {
        assert_eq!(keep.len(), self.dims.len());
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        let blocks = (0..dims.len())
            .map(|t| {
                let rows = keep.get(t + self.shift).map_or(&[][..], Vec::as_slice);
                self.blocks[t].select(rows, &keep[t])
            })
            .collect();
        GradedMap {
            shift: self.shift,
            dims,
            blocks,
        }
    }

    /// Drops trailing degrees of dimension zero.
    pub fn trimmed(mut self) -> GradedMap {
        while self.dims.len() > 1 && self.dims.last() == Some(&0) {
            self.dims.pop();
            self.blocks.pop();
        }
        self
    }

    /// Ranks of every block, by source degree.
    pub fn ranks(&self) -> Vec<usize> {
        use rayon::prelude::*;
        self.blocks.par_iter().map(BitMatrix::rank).collect()
    }
}

/// Dimensions of `ker / im` per degree, and their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub per_degree: Vec<usize>,
    pub total: usize,
}

impl HomologyProfile {
    fn from_per_degree(per_degree: Vec<usize>) -> Self {
        let total = per_degree.iter().sum();
        HomologyProfile { per_degree, total }
    }

    /// The profile with every class moved up by `offset` degrees.
    pub fn shifted(&self, offset: usize) -> Self {
        let mut per_degree = vec![0; offset];
        per_degree.extend_from_slice(&self.per_degree);
        HomologyProfile {
            per_degree,
            total: self.total,
        }
    }

    /// Lowest and highest degrees carrying homology.
    pub fn support(&self) -> Option<(usize, usize)> {
        let lo = self.per_degree.iter().position(|&k| k > 0)?;
        let hi = self.per_degree.iter().rposition(|&k| k > 0)?;
        Some((lo, hi))
    }
}

/// `dim H^t = dim C^t − rank(out of t) − rank(into t)`.
pub fn qn_homology(map: &GradedMap) -> Result<HomologyProfile, HomologyError> {
    map.check_differential()?;
    Ok(homology_unchecked(map))
}

fn homology_unchecked(map: &GradedMap) -> HomologyProfile {
    let ranks = map.ranks();
    let per_degree = (0..map.degrees())
        .map(|t| {
            let incoming = t.checked_sub(map.shift).map_or(0, |s| ranks[s]);
            map.dims[t] - ranks[t] - incoming
        })
        .collect();
    HomologyProfile::from_per_degree(per_degree)
}

/// Indices, per degree, of the classes `s_λ` with `λ_1 = c`. They span the
/// ideal `(w̄_c)`, the kernel of restriction to `Gr_d(R^{m-1})`.
pub fn ideal_indices(basis: &GridBasis) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let c = basis.grid().c;
    let top = basis.grid().top_degree();
    let mut sub = Vec::with_capacity(top + 1);
    let mut quot = Vec::with_capacity(top + 1);
    for t in 0..=top {
        let (a, b): (Vec<usize>, Vec<usize>) =
            (0..basis.degree(t).len()).partition(|&i| c > 0 && basis.degree(t)[i].part(1) == c);
        sub.push(a);
        quot.push(b);
    }
    (sub, quot)
}

/// The short exact sequence `0 → H̃^*(C_d(R^m)) → H^*(Gr_d(R^m)) →
/// H^*(Gr_d(R^{m-1})) → 0` with its `Q_n` actions.
#[derive(Clone, Debug)]
pub struct CofiberSequence {
    pub total: GradedMap,
    pub sub: GradedMap,
    pub quot: GradedMap,
    sub_indices: Vec<Vec<usize>>,
}

impl CofiberSequence {
    /// Uses Lenart's formula for `Q_n` on `Gr_d(R^m)`.
    pub fn new(n: u32, d: usize, m: usize) -> Result<Self, HomologyError> {
        if d == 0 || d >= m {
            return Err(HomologyError::GridTooSmall { d, m });
        }
        let basis = Grid::for_grassmannian(d, m).basis();
        let total = lenart_qn_matrix_with_basis(n, &basis);
        Ok(Self::split(total, &basis))
    }

    /// Splits an already built map on `basis`.
    pub fn split(total: GradedMap, basis: &GridBasis) -> Self {
        let (sub_indices, quot_indices) = ideal_indices(basis);
        let sub = total.restrict(&sub_indices);
        let quot = total.restrict(&quot_indices).trimmed();
        CofiberSequence {
            total,
            sub,
            quot,
            sub_indices,
        }
    }

    pub fn check_differentials(&self) -> Result<(), HomologyError> {
        self.total.check_differential()?;
        self.sub.check_differential()?;
        self.quot.check_differential()
    }

    /// `k(sub)`, `k(total)`, `k(quot)`.
    pub fn profiles(
        &self,
    ) -> Result<(HomologyProfile, HomologyProfile, HomologyProfile), HomologyError> {
        Ok((
            qn_homology(&self.sub)?,
            qn_homology(&self.total)?,
            qn_homology(&self.quot)?,
        ))
    }

    /// Total rank of the connecting map, from
    /// `k(total) = k(sub) + k(quot) − 2 rank δ`.
    pub fn connecting_rank(&self) -> Result<usize, HomologyError> {
        let (sub, total, quot) = self.profiles()?;
        let twice = (sub.total + quot.total) as i64 - total.total as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(HomologyError::ParityViolation {
                what: "k(sub) + k(quot) - k(total)",
                value: twice,
            });
        }
        Ok((twice / 2) as usize)
    }

    /// Rank of `H(sub) → H(total)`, computed directly from cycles and
    /// boundaries.
    pub fn inclusion_rank(&self) -> Result<usize, HomologyError> {
        self.check_differentials()?;
        let mut rank = 0;
        for t in 0..self.total.degrees() {
            let len = self.total.dim(t);
            let boundaries: Vec<BitVector> = match t.checked_sub(self.total.shift) {
                Some(s) => {
                    let b = self.total.block(s);
                    (0..b.num_cols()).map(|j| b.column(j)).collect()
                }
                None => Vec::new(),
            };
            let base = span_rank(len, &boundaries);
            let mut spanning = boundaries;
            for z in self.sub.block(t).kernel_basis() {
                let mut v = BitVector::zeros(len);
                for i in z.ones() {
                    v.set(self.sub_indices[t][i], true);
                }
                spanning.push(v);
            }
            rank += span_rank(len, &spanning) - base;
        }
        Ok(rank)
    }
}

/// `x ↦ Q_n(x) + x·α_n` on `H^*(Gr_{d-1}(R^{m-1}))`, the `Q_n` action on the
/// Thom class side of `C_d(R^m)`. Built from Lenart's formula plus Pieri.
pub fn twisted_complex(n: u32, d: usize, m: usize) -> Result<GradedMap, HomologyError> {
    if d == 0 || d >= m {
        return Err(HomologyError::GridTooSmall { d, m });
    }
    let grid = Grid::new(d - 1, m - d);
    let basis = grid.basis();
    let shift = qn_shift(n);
    let twist = alpha(n, d);
    let dims = basis.dims();
    let blocks = (0..dims.len())
        .map(|t| {
            let target = dims.get(t + shift).copied().unwrap_or(0);
            let columns: Vec<BitVector> = basis
                .degree(t)
                .iter()
                .map(|lambda| {
                    if target == 0 {
                        return BitVector::zeros(0);
                    }
                    let s = SchubertVector::basis(grid, lambda.clone()).expect("λ in grid");
                    let mut image = lenart_qn(n, lambda, grid);
                    image.add_assign(&multiply_by_polynomial(&s, &twist).expect("ambient d-1"));
                    basis.coordinates(&image, t + shift)
                })
                .collect();
            BitMatrix::from_columns(target, &columns)
        })
        .collect();
    Ok(GradedMap::from_blocks(shift, dims, blocks))
}

/// The same twisted map, from the free-ring derivation and the monomial
/// change of basis.
pub fn twisted_complex_by_derivation(
    n: u32,
    d: usize,
    m: usize,
) -> Result<GradedMap, HomologyError> {
    if d == 0 || d >= m {
        return Err(HomologyError::GridTooSmall { d, m });
    }
    let grid = Grid::new(d - 1, m - d);
    let twist = alpha(n, d);
    Ok(conjugated_map(grid, qn_shift(n), |mono| {
        let x = Polynomial::from_monomial(mono.clone());
        &milnor_q_monomial(n, mono) + &(&x * &twist)
    }))
}
