//! Young diagrams inside a `d × c` grid, skew shapes, and the border-strip
//! combinatorics that drive Lenart's formula for `Q_n` on Schubert classes.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YoungError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
    #[error("skew shape contains a 2x2 block, so it is not a broken border strip")]
    InvalidStrip,
}

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0`. Trailing zeros are dropped on
/// construction, so `(2,1,0)` and `(2,1)` are the same value.
///
/// The `Ord` impl is the canonical basis order used everywhere in the crate:
/// by weight first, then lexicographically *descending* within a weight.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, YoungError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(k^rows)`, the rectangle with `rows` rows of length `k`.
    pub fn rectangle(rows: usize, k: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Partition { parts: vec![k; rows] }
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `|λ|`, the cohomological degree of `s_λ`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fits_in_grid(&self, d: usize, c: usize) -> bool {
        self.parts.len() <= d && self.parts.first().is_none_or(|&p| p <= c)
    }

    /// True when `other ⊆ self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A box of a Young diagram, rows and columns counted from 1 (English
/// notation: row 1 on top).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: i64,
    pub col: i64,
}

impl Cell {
    pub fn new(row: i64, col: i64) -> Self {
        Cell { row, col }
    }

    pub fn translate(self, dr: i64, dc: i64) -> Self {
        Cell::new(self.row + dr, self.col + dc)
    }
}

/// `col − row`.
pub fn content(b: Cell) -> i64 {
    b.col - b.row
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    inner: Partition,
    outer: Partition,
    cells: Vec<Cell>,
}

impl SkewShape {
    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// `outer / inner`: the cells `(i, j)` with `inner_i < j ≤ outer_i`.
pub fn skew(outer: &Partition, inner: &Partition) -> Result<SkewShape, YoungError> {
    if !outer.contains(inner) {
        return Err(YoungError::NotContained {
            inner: inner.clone(),
            outer: outer.clone(),
        });
    }
    let cells = (1..=outer.len())
        .flat_map(|i| {
            ((inner.part(i) + 1)..=outer.part(i)).map(move |j| Cell::new(i as i64, j as i64))
        })
        .collect();
    Ok(SkewShape {
        inner: inner.clone(),
        outer: outer.clone(),
        cells,
    })
}

/// `components` is the number of edge-connected pieces. Shapes containing a
/// 2x2 block are `NotBrokenBorderStrip`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripClass {
    NotBrokenBorderStrip,
    BrokenBorderStrip { components: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CornerKind {
    Sharp,
    Dull,
}

struct CellSet<'a> {
    cells: &'a [Cell],
    lookup: HashSet<Cell>,
}

impl<'a> CellSet<'a> {
    fn new(cells: &'a [Cell]) -> Self {
        CellSet {
            cells,
            lookup: cells.iter().copied().collect(),
        }
    }

    fn has(&self, row: i64, col: i64) -> bool {
        self.lookup.contains(&Cell::new(row, col))
    }

    fn has_square(&self) -> bool {
        self.cells.iter().any(|b| {
            self.has(b.row, b.col + 1) && self.has(b.row + 1, b.col) && self.has(b.row + 1, b.col + 1)
        })
    }

    fn components(&self) -> usize {
        let mut seen: HashSet<Cell> = HashSet::with_capacity(self.cells.len());
        let mut count = 0;
        let mut stack = Vec::new();
        for &start in self.cells {
            if !seen.insert(start) {
                continue;
            }
            count += 1;
            stack.push(start);
            while let Some(b) = stack.pop() {
                for (dr, dc) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
                    let nb = b.translate(dr, dc);
                    if self.lookup.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
        }
        count
    }

    fn corners(&self) -> Vec<(Cell, CornerKind)> {
        self.cells
            .iter()
            .filter_map(|&b| {
                let north = self.has(b.row - 1, b.col);
                let west = self.has(b.row, b.col - 1);
                let northwest = self.has(b.row - 1, b.col - 1);
                match (north, west, northwest) {
                    (false, false, false) => Some((b, CornerKind::Sharp)),
                    (true, true, false) => Some((b, CornerKind::Dull)),
                    _ => None,
                }
            })
            .collect()
    }
}

/// Classifies an arbitrary finite set of boxes. Works on shapes that are not
/// skew diagrams of partitions (translated or hand-drawn shapes).
pub fn classify_cells(cells: &[Cell]) -> StripClass {
    let set = CellSet::new(cells);
    if set.has_square() {
        StripClass::NotBrokenBorderStrip
    } else {
        StripClass::BrokenBorderStrip {
            components: set.components(),
        }
    }
}

pub fn classify_strip(s: &SkewShape) -> StripClass {
    classify_cells(&s.cells)
}

/// Sharp and dull corners of a broken border strip given as a cell set.
pub fn cell_corners(cells: &[Cell]) -> Result<Vec<(Cell, CornerKind)>, YoungError> {
    let set = CellSet::new(cells);
    if set.has_square() {
        return Err(YoungError::InvalidStrip);
    }
    Ok(set.corners())
}

pub fn corners(s: &SkewShape) -> Result<Vec<(Cell, CornerKind)>, YoungError> {
    cell_corners(&s.cells)
}

/// The mod-2 coefficient `d_{λμ}` of `s_μ` in `Q_n(s_λ)`.
pub fn lenart_coefficient(lambda: &Partition, mu: &Partition) -> Result<bool, YoungError> {
    let shape = skew(mu, lambda)?;
    Ok(strip_coefficient(shape.cells()))
}

pub(crate) fn strip_coefficient(cells: &[Cell]) -> bool {
    let set = CellSet::new(cells);
    if set.has_square() {
        return false;
    }
    match set.components() {
        1 => {
            let total: i64 = set.corners().iter().map(|(b, _)| content(*b)).sum();
            total.rem_euclid(2) == 1
        }
        2 => true,
        _ => false,
    }
}

/// All partitions in the `d × c` grid, graded by weight and lexicographically
/// descending inside each weight. There are `binomial(d + c, d)` of them.
pub fn partitions_in_grid(d: usize, c: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=d * c {
        out.extend(partitions_of_weight(w, d, c));
    }
    out
}

/// Partitions of exactly `weight` inside the `d × c` grid, lexicographically
/// descending.
pub fn partitions_of_weight(weight: usize, d: usize, c: usize) -> Vec<Partition> {
    covers_at_distance(&Partition::empty(), weight, d, c)
}

/// All `μ ⊇ λ` in the grid with `|μ| − |λ| = k`, in basis order.
pub fn covers_at_distance(lambda: &Partition, k: usize, d: usize, c: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if !lambda.fits_in_grid(d, c) {
        return out;
    }
    let mut current = Vec::with_capacity(d);
    extend_rows(lambda, k, d, c, false, &mut current, &mut out);
    out
}

/// Like [`covers_at_distance`] but only yields `μ` whose skew shape `μ/λ`
/// has no 2×2 block, i.e. the candidates that can carry a nonzero Lenart
/// coefficient.
pub fn strips_at_distance(lambda: &Partition, k: usize, d: usize, c: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if !lambda.fits_in_grid(d, c) {
        return out;
    }
    let mut current = Vec::with_capacity(d);
    extend_rows(lambda, k, d, c, true, &mut current, &mut out);
    out
}

// Chooses μ_i for row i = current.len() + 1, largest first, so the output is
// lexicographically descending.
fn extend_rows(
    lambda: &Partition,
    remaining: usize,
    d: usize,
    c: usize,
    strips_only: bool,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let row = current.len() + 1;
    if row > d {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(current.clone()));
        }
        return;
    }
    let low = lambda.part(row);
    let mut high = current.last().copied().unwrap_or(c);
    if strips_only && row > 1 {
        // rows row-1 and row share at most one column: μ_row ≤ λ_{row-1} + 1
        high = high.min(lambda.part(row - 1) + 1);
    }
    if high < low {
        return;
    }
    // rows below can add at most (μ_row − λ_i) each
    let rows_left = d - row;
    for mu in (low..=high.min(low + remaining)).rev() {
        let used = mu - low;
        let rest = remaining - used;
        let capacity: usize = ((row + 1)..=(row + rows_left))
            .map(|i| mu.saturating_sub(lambda.part(i)))
            .sum();
        if rest > capacity {
            // smaller μ only shrinks the capacity further
            break;
        }
        current.push(mu);
        extend_rows(lambda, rest, d, c, strips_only, current, out);
        current.pop();
    }
}
