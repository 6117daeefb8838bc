//! Closed-form predictions for `k_{Q_n}` of Grassmannians and their
//! cofibers, evaluated exactly in arbitrary precision.
//!
//! Throughout, `m = 2^{n+1} − ε + 2l` with `ε ∈ {0, 1}` and `l ≥ 0`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid cell: d = {d} exceeds m = {m}")]
    InvalidCell { d: u64, m: u64 },
    #[error("the cofiber needs d >= 1")]
    EmptyCofiber,
}

/// Exact `binomial(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binomial(a, b) mod 2` by Lucas' theorem: odd iff the binary digits of
/// `b` are dominated by those of `a`.
pub fn binom_parity(a: u64, b: u64) -> bool {
    b & !a == 0
}

/// `2^{n+1}`.
pub fn two_power(n: u32) -> u64 {
    assert!(n < 62, "n = {n} is out of range");
    1u64 << (n + 1)
}

/// `(ε, l)` with `m = 2^{n+1} − ε + 2l`, defined once `m ≥ 2^{n+1} − 1`.
pub fn decompose(n: u32, m: u64) -> Option<(u64, u64)> {
    let p = two_power(n);
    if m + 1 < p {
        return None;
    }
    let eps = m % 2;
    Some((eps, (m + eps - p) / 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictionKind {
    /// `m ≤ 2^{n+1}`: the spectral sequence collapses and the value is the
    /// full mod-2 Betti sum.
    Collapse,
    /// `m > 2^{n+1}`: the conjectured (and lower-bound) sum.
    ConjecturalEquality,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPrediction {
    pub n: u32,
    pub d: u64,
    pub m: u64,
    pub epsilon: Option<u64>,
    pub l: Option<u64>,
    pub value: BigUint,
    pub kind: PredictionKind,
}

// Σ_i binom(top, d − 2i)·binom(l, i)
fn even_step_sum(top: i64, d: i64, l: i64) -> BigUint {
    if d < 0 {
        return BigUint::zero();
    }
    (0..=d / 2)
        .map(|i| binomial(top, d - 2 * i) * binomial(l, i))
        .sum()
}

pub fn predict_cell(n: u32, d: u64, m: u64) -> Result<CellPrediction, FormulaError> {
    if d > m {
        return Err(FormulaError::InvalidCell { d, m });
    }
    let p = two_power(n);
    let split = decompose(n, m);
    let (value, kind) = if m <= p {
        let v = binomial(m as i64, d as i64);
        if let Some((eps, l)) = split {
            debug_assert_eq!(v, even_step_sum((p - eps) as i64, d as i64, l as i64));
        }
        (v, PredictionKind::Collapse)
    } else {
        let (eps, l) = split.expect("m > 2^{n+1}");
        (
            even_step_sum((p - eps) as i64, d as i64, l as i64),
            PredictionKind::ConjecturalEquality,
        )
    };
    Ok(CellPrediction {
        n,
        d,
        m,
        epsilon: split.map(|s| s.0),
        l: split.map(|s| s.1),
        value,
        kind,
    })
}

/// Predicted `k_{Q_n}(Gr_d(R^m))` (also the lower bound for `k_n`).
pub fn predicted_k(n: u32, d: u64, m: u64) -> Result<BigUint, FormulaError> {
    predict_cell(n, d, m).map(|c| c.value)
}

/// Predicted reduced `k̄_{Q_n}(C_d(R^m))` for the inclusion cofiber.
pub fn predicted_cofiber_k(n: u32, d: u64, m: u64) -> Result<BigUint, FormulaError> {
    if d == 0 {
        return Err(FormulaError::EmptyCofiber);
    }
    if d > m {
        return Err(FormulaError::InvalidCell { d, m });
    }
    let p = two_power(n);
    if m <= p {
        return Ok(binomial(m as i64 - 1, d as i64 - 1));
    }
    let (eps, l) = decompose(n, m).expect("m > 2^{n+1}");
    Ok(even_step_sum((p - 1 - eps) as i64, d as i64 - 1, l as i64))
}

/// Predicted rank of the connecting map `δ`; nonzero only for odd
/// `m > 2^{n+1}`.
pub fn predicted_delta_rank(n: u32, d: u64, m: u64) -> BigUint {
    let p = two_power(n);
    if m.is_multiple_of(2) || m <= p || d == 0 {
        return BigUint::zero();
    }
    let (_, l) = decompose(n, m).expect("m > 2^{n+1}");
    even_step_sum((p - 2) as i64, d as i64 - 1, l as i64 - 1)
}

/// Checks the exact identity
/// `(k^G(d, m−1) + k̄^C(d, m) − k^G(d, m)) / 2 = predicted_delta_rank`
/// at `m = 2^{n+1} − 1 + 2l`.
pub fn lemma65_check(n: u32, d: u64, l: u64) -> bool {
    assert!(l > 0, "l must be positive");
    let p = two_power(n) as i64;
    let (d, l) = (d as i64, l as i64);
    // m − 1 = 2^{n+1} + 2(l − 1) is even; m itself is odd
    let grass_prev = BigInt::from(even_step_sum(p, d, l - 1));
    let cofiber = BigInt::from(even_step_sum(p - 2, d - 1, l));
    let grass = BigInt::from(even_step_sum(p - 1, d, l));
    let lhs = grass_prev + cofiber - grass;
    let two = BigInt::from(2u8);
    if (&lhs % &two) != BigInt::zero() {
        return false;
    }
    lhs / two == BigInt::from(even_step_sum(p - 2, d - 1, l - 1))
}

/// `k_n(RP^{m−1}) = k_n(Gr_1(R^m))`.
pub fn projective_k(n: u32, m: u64) -> BigUint {
    let p = two_power(n);
    if m <= p {
        BigUint::from(m)
    } else {
        BigUint::from(p - m % 2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// A one-dimensional real summand; contributes `Gr_j(R^mult)`.
    Real,
    /// A two-dimensional irreducible summand; contributes `Gr_j(C^mult)`,
    /// which uses up `2j` real dimensions.
    Complex,
}

impl FactorKind {
    fn weight(self) -> u64 {
        match self {
            FactorKind::Real => 1,
            FactorKind::Complex => 2,
        }
    }
}

/// Total mod-2 Betti number of the fixed-point set `Gr_d(V)^G` where `V`
/// splits into isotypic pieces `rep`: the sum over `Σ j_i r_i = d` of
/// `Π binom(m_i, j_i)`.
pub fn fixed_point_count(rep: &[(FactorKind, u64)], d: u64) -> BigUint {
    let d = d as usize;
    // ways[s] = contributions using exactly s real dimensions so far
    let mut ways = vec![BigUint::zero(); d + 1];
    ways[0] = BigUint::one();
    for &(kind, mult) in rep {
        let r = kind.weight() as usize;
        let mut next = vec![BigUint::zero(); d + 1];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let mut j = 0usize;
            while s + j * r <= d && j as u64 <= mult {
                next[s + j * r] += w * binomial(mult as i64, j as i64);
                j += 1;
            }
        }
        ways = next;
    }
    ways.swap_remove(d)
}

/// The cyclic-group-of-order-four representation whose fixed points give
/// the lower bound at `m = 2^{n+1} − ε + 2l`.
pub fn c4_representation(n: u32, eps: u64, l: u64) -> Vec<(FactorKind, u64)> {
    let half = two_power(n) / 2;
    vec![
        (FactorKind::Real, half),
        (FactorKind::Real, half - eps),
        (FactorKind::Complex, l),
    ]
}
