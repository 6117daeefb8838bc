//! `H^*(Gr_d(R^{d+c}); Z/2)` in the Schubert basis `{s_λ}`, `λ` in the
//! `d × c` grid.
//!
//! Products with Stiefel–Whitney classes use the Pieri rule for
//! `w_i = s_{(1^i)}` (add a vertical strip of `i` boxes), and partitions
//! leaving the grid are dropped. The `Q_n` action is assembled two ways:
//! from Lenart's border-strip formula, and from the free-ring derivation
//! pushed through the monomial-to-Schubert change of basis.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::homology::{BitMatrix, BitVector, GradedMap};
use crate::steenrod::{milnor_q_monomial, Monomial, Polynomial};
use crate::young::{self, partitions_of_weight, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchubertError {
    #[error("w_{i} is zero in a ring with only {d} generators")]
    IndexOutOfRange { i: usize, d: usize },
    #[error("expected {expected} generators, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("{partition} does not fit in the {d}x{c} grid")]
    NotInGrid { partition: Partition, d: usize, c: usize },
}

/// The `d × c` grid indexing Schubert cells of `Gr_d(R^{d+c})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    pub d: usize,
    pub c: usize,
}

impl Grid {
    pub fn new(d: usize, c: usize) -> Self {
        Grid { d, c }
    }

    /// The grid of `Gr_d(R^m)`; panics when `d > m`.
    pub fn for_grassmannian(d: usize, m: usize) -> Self {
        assert!(d <= m, "Gr_{d}(R^{m}) is empty");
        Grid { d, c: m - d }
    }

    pub fn m(&self) -> usize {
        self.d + self.c
    }

    pub fn top_degree(&self) -> usize {
        self.d * self.c
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits_in_grid(self.d, self.c)
    }

    pub fn basis(&self) -> GridBasis {
        GridBasis::new(*self)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr_{}(R^{})", self.d, self.m())
    }
}

/// The Schubert basis of a grid, split by degree, with reverse lookup.
#[derive(Clone, Debug)]
pub struct GridBasis {
    grid: Grid,
    by_degree: Vec<Vec<Partition>>,
    index: HashMap<Partition, usize>,
}

impl GridBasis {
    fn new(grid: Grid) -> Self {
        let by_degree: Vec<Vec<Partition>> = (0..=grid.top_degree())
            .map(|w| partitions_of_weight(w, grid.d, grid.c))
            .collect();
        let index = by_degree
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, p)| (p.clone(), i)))
            .collect();
        GridBasis {
            grid,
            by_degree,
            index,
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn degree(&self, t: usize) -> &[Partition] {
        self.by_degree.get(t).map_or(&[], Vec::as_slice)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    /// Position of `λ` inside its degree.
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Coordinates of the degree-`t` part of `v`.
    pub fn coordinates(&self, v: &SchubertVector, t: usize) -> BitVector {
        let mut out = BitVector::zeros(self.degree(t).len());
        for lambda in v.support() {
            if lambda.weight() == t {
                out.toggle(self.index[lambda]);
            }
        }
        out
    }
}

/// An element of the grid ring: a set of Schubert classes, summed mod 2.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertVector {
    grid: Grid,
    support: BTreeSet<Partition>,
}

impl SchubertVector {
    pub fn zero(grid: Grid) -> Self {
        SchubertVector {
            grid,
            support: BTreeSet::new(),
        }
    }

    pub fn one(grid: Grid) -> Self {
        let mut v = Self::zero(grid);
        v.support.insert(Partition::empty());
        v
    }

    pub fn basis(grid: Grid, lambda: Partition) -> Result<Self, SchubertError> {
        let mut v = Self::zero(grid);
        v.add_class(lambda)?;
        Ok(v)
    }

    pub fn from_partitions(
        grid: Grid,
        parts: impl IntoIterator<Item = Partition>,
    ) -> Result<Self, SchubertError> {
        let mut v = Self::zero(grid);
        for p in parts {
            v.add_class(p)?;
        }
        Ok(v)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    /// Classes with coefficient one, in basis order.
    pub fn support(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.support.iter()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.support.contains(lambda)
    }

    pub fn num_classes(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add_class(&mut self, lambda: Partition) -> Result<(), SchubertError> {
        if !self.grid.contains(&lambda) {
            return Err(SchubertError::NotInGrid {
                partition: lambda,
                d: self.grid.d,
                c: self.grid.c,
            });
        }
        self.toggle(lambda);
        Ok(())
    }

    fn toggle(&mut self, lambda: Partition) {
        if !self.support.remove(&lambda) {
            self.support.insert(lambda);
        }
    }

    pub fn add_assign(&mut self, other: &SchubertVector) {
        assert_eq!(self.grid, other.grid, "grid mismatch");
        for p in &other.support {
            self.toggle(p.clone());
        }
    }
}

impl fmt::Debug for SchubertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.support.iter().map(|p| format!("s{p}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

// μ ⊇ λ inside the grid with μ/λ a vertical strip of `i` boxes.
fn vertical_strips(lambda: &Partition, i: usize, grid: Grid) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        row: usize,
        remaining: usize,
        grid: Grid,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining > grid.d + 1 - row {
            return;
        }
        if row > grid.d {
            out.push(Partition::from_parts_unchecked(current.clone()));
            return;
        }
        let base = lambda.part(row);
        let ceiling = current.last().copied().unwrap_or(grid.c);
        for add in [1usize, 0] {
            if add > remaining || base + add > ceiling {
                continue;
            }
            current.push(base + add);
            go(lambda, row + 1, remaining - add, grid, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 1, i, grid, &mut Vec::with_capacity(grid.d), &mut out);
    out
}

/// `v · w_i`.
pub fn pieri_multiply(v: &SchubertVector, i: usize) -> Result<SchubertVector, SchubertError> {
    let grid = v.grid;
    if i > grid.d {
        return Err(SchubertError::IndexOutOfRange { i, d: grid.d });
    }
    if i == 0 {
        return Ok(v.clone());
    }
    let mut out = SchubertVector::zero(grid);
    for lambda in &v.support {
        for mu in vertical_strips(lambda, i, grid) {
            out.toggle(mu);
        }
    }
    Ok(out)
}

/// `v · p` for a polynomial in the Stiefel–Whitney classes.
pub fn multiply_by_polynomial(
    v: &SchubertVector,
    p: &Polynomial,
) -> Result<SchubertVector, SchubertError> {
    let grid = v.grid;
    if p.ambient() != grid.d {
        return Err(SchubertError::AmbientMismatch {
            expected: grid.d,
            found: p.ambient(),
        });
    }
    let mut out = SchubertVector::zero(grid);
    for mono in p.terms() {
        let mut term = v.clone();
        for j in 1..=grid.d {
            for _ in 0..mono.exponent(j) {
                if term.is_zero() {
                    break;
                }
                term = pieri_multiply(&term, j)?;
            }
        }
        out.add_assign(&term);
    }
    Ok(out)
}

/// Image of `w_1^{r_1} ⋯ w_d^{r_d}` in the grid ring.
pub fn monomial_to_schubert(mono: &Monomial, grid: Grid) -> Result<SchubertVector, SchubertError> {
    SchubertConverter::new(grid).monomial(mono)
}

pub fn polynomial_to_schubert(p: &Polynomial, grid: Grid) -> Result<SchubertVector, SchubertError> {
    SchubertConverter::new(grid).polynomial(p)
}

/// Memoizing monomial-to-Schubert converter for one grid.
pub struct SchubertConverter {
    grid: Grid,
    cache: HashMap<Monomial, SchubertVector>,
}

impl SchubertConverter {
    pub fn new(grid: Grid) -> Self {
        SchubertConverter {
            grid,
            cache: HashMap::new(),
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn monomial(&mut self, mono: &Monomial) -> Result<SchubertVector, SchubertError> {
        if mono.ambient() != self.grid.d {
            return Err(SchubertError::AmbientMismatch {
                expected: self.grid.d,
                found: mono.ambient(),
            });
        }
        Ok(self.convert(mono))
    }

    fn convert(&mut self, mono: &Monomial) -> SchubertVector {
        if mono.degree() > self.grid.top_degree() {
            return SchubertVector::zero(self.grid);
        }
        if mono.is_one() {
            return SchubertVector::one(self.grid);
        }
        if let Some(hit) = self.cache.get(mono) {
            return hit.clone();
        }
        let j = (1..=self.grid.d)
            .rev()
            .find(|&j| mono.exponent(j) > 0)
            .expect("non-unit monomial");
        let prefix = self.convert(&mono.without(j));
        let value = pieri_multiply(&prefix, j).expect("j ≤ d");
        self.cache.insert(mono.clone(), value.clone());
        value
    }

    pub fn polynomial(&mut self, p: &Polynomial) -> Result<SchubertVector, SchubertError> {
        let mut out = SchubertVector::zero(self.grid);
        for mono in p.terms() {
            out.add_assign(&self.monomial(mono)?);
        }
        Ok(out)
    }
}

/// `Q_n(s_λ)` from Lenart's formula.
pub fn lenart_qn(n: u32, lambda: &Partition, grid: Grid) -> SchubertVector {
    let shift = qn_shift(n);
    let mut out = SchubertVector::zero(grid);
    for mu in young::strips_at_distance(lambda, shift, grid.d, grid.c) {
        let shape = young::skew(&mu, lambda).expect("μ ⊇ λ by construction");
        if young::strip_coefficient(shape.cells()) {
            out.toggle(mu);
        }
    }
    out
}

/// `|Q_n| = 2^{n+1} − 1`.
pub fn qn_shift(n: u32) -> usize {
    (1usize << (n + 1)) - 1
}

/// The `Q_n` differential in the Schubert basis, column `λ` holding the
/// Lenart expansion of `Q_n(s_λ)`.
pub fn lenart_qn_matrix(n: u32, grid: Grid) -> GradedMap {
    lenart_qn_matrix_with_basis(n, &grid.basis())
}

pub fn lenart_qn_matrix_with_basis(n: u32, basis: &GridBasis) -> GradedMap {
    let grid = basis.grid();
    let shift = qn_shift(n);
    let dims = basis.dims();
    let blocks = (0..dims.len())
        .into_par_iter()
        .map(|t| {
            let target = dims.get(t + shift).copied().unwrap_or(0);
            let mut block = BitMatrix::zeros(target, dims[t]);
            if target == 0 {
                return block;
            }
            for (col, lambda) in basis.degree(t).iter().enumerate() {
                for mu in lenart_qn(n, lambda, grid).support() {
                    block.set(basis.index_of(mu).expect("μ in grid"), col, true);
                }
            }
            block
        })
        .collect();
    GradedMap::from_blocks(shift, dims, blocks)
}

/// Monomials `w^r` with `Σ r_i ≤ c`, grouped by degree (lexicographic inside
/// a degree). This is an additive basis of the grid ring.
pub fn monomial_basis(grid: Grid) -> Vec<Vec<Monomial>> {
    let mut by_degree = vec![Vec::new(); grid.top_degree() + 1];
    let mut exps = vec![0u32; grid.d];
    fn go(j: usize, left: usize, exps: &mut Vec<u32>, out: &mut Vec<Vec<Monomial>>) {
        if j == exps.len() {
            let m = Monomial::new(exps.clone());
            let deg = m.degree();
            out[deg].push(m);
            return;
        }
        for r in 0..=left {
            exps[j] = r as u32;
            go(j + 1, left - r, exps, out);
        }
        exps[j] = 0;
    }
    go(0, grid.c, &mut exps, &mut by_degree);
    for level in &mut by_degree {
        level.sort();
    }
    by_degree
}

/// Transports a degree-raising operator given on monomials into the
/// Schubert basis: with `B_t` the Schubert coordinates of the degree-`t`
/// monomial basis and `C_t` those of `f(w^r)`, the block is `C_t · B_t^{-1}`.
pub fn conjugated_map<F>(grid: Grid, shift: usize, f: F) -> GradedMap
where
    F: Fn(&Monomial) -> Polynomial,
{
    let basis = grid.basis();
    let monos = monomial_basis(grid);
    let dims = basis.dims();
    let mut converter = SchubertConverter::new(grid);
    let mut blocks = Vec::with_capacity(dims.len());
    for t in 0..dims.len() {
        assert_eq!(monos[t].len(), dims[t], "monomial basis size in degree {t}");
        let target = dims.get(t + shift).copied().unwrap_or(0);
        if target == 0 || dims[t] == 0 {
            blocks.push(BitMatrix::zeros(target, dims[t]));
            continue;
        }
        let mut domain = Vec::with_capacity(dims[t]);
        let mut images = Vec::with_capacity(dims[t]);
        for mono in &monos[t] {
            let v = converter.monomial(mono).expect("ambient matches");
            domain.push(basis.coordinates(&v, t));
            let image = converter.polynomial(&f(mono)).expect("ambient matches");
            images.push(basis.coordinates(&image, t + shift));
        }
        let change = BitMatrix::from_columns(dims[t], &domain)
            .inverse()
            .expect("monomial basis maps onto the Schubert basis");
        let raw = BitMatrix::from_columns(target, &images);
        blocks.push(raw.mul(&change));
    }
    GradedMap::from_blocks(shift, dims, blocks)
}

/// The `Q_n` differential from Wu's formula and the commutator recursion,
/// expressed in the Schubert basis.
pub fn derivation_qn_matrix(n: u32, grid: Grid) -> GradedMap {
    conjugated_map(grid, qn_shift(n), |mono| milnor_q_monomial(n, mono))
}
