//! The polynomial ring `F_2[w_1, …, w_d] = H^*(BO(d); Z/2)` with Steenrod
//! squares (Wu formula on generators, Cartan formula on products), the
//! Milnor primitives `Q_n`, the dual classes `w̄_k`, and the s-class.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::sync::{OnceLock, RwLock};

use thiserror::Error;

use crate::formulas::binom_parity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteenrodError {
    #[error("polynomials live over different rings: {0} vs {1} generators")]
    AmbientMismatch(usize, usize),
}

/// `w_1^{r_1} ⋯ w_d^{r_d}`, stored as the exponent vector `(r_1, …, r_d)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(d: usize) -> Self {
        Monomial {
            exponents: vec![0; d],
        }
    }

    /// `w_j` for `1 ≤ j ≤ d`.
    pub fn generator(j: usize, d: usize) -> Self {
        assert!((1..=d).contains(&j), "w_{j} is not a generator when d = {d}");
        let mut exponents = vec![0; d];
        exponents[j - 1] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `w_j`, 1-based.
    pub fn exponent(&self, j: usize) -> u32 {
        self.exponents[j - 1]
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    /// Cohomological degree `Σ i·r_i`.
    pub fn degree(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &r)| (i + 1) * r as usize)
            .sum()
    }

    /// `Σ r_i`, which bounds the monomial basis of a Grassmannian.
    pub fn length(&self) -> usize {
        self.exponents.iter().map(|&r| r as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&r| r == 0)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Divides by `w_j`; caller ensures `r_j > 0`.
    pub(crate) fn without(&self, j: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[j - 1] -= 1;
        Monomial { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &r) in self.exponents.iter().enumerate() {
            if r == 0 {
                continue;
            }
            if !first {
                write!(f, "·")?;
            }
            first = false;
            write!(f, "w{}", i + 1)?;
            if r > 1 {
                write!(f, "^{r}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sum of distinct monomials over `F_2`. Adding a monomial already present
/// cancels it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    d: usize,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(d: usize) -> Self {
        Polynomial {
            d,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(d: usize) -> Self {
        Self::from_monomial(Monomial::one(d))
    }

    pub fn from_monomial(mono: Monomial) -> Self {
        let d = mono.ambient();
        let mut terms = BTreeSet::new();
        terms.insert(mono);
        Polynomial { d, terms }
    }

    /// `w_j`, with `w_0 = 1` and `w_j = 0` for `j > d`.
    pub fn w(j: usize, d: usize) -> Self {
        match j {
            0 => Self::one(d),
            j if j > d => Self::zero(d),
            j => Self::from_monomial(Monomial::generator(j, d)),
        }
    }

    /// Builds a polynomial from exponent vectors, toggling repeats.
    pub fn from_exponents(d: usize, monos: &[&[u32]]) -> Self {
        let mut p = Self::zero(d);
        for e in monos {
            assert_eq!(e.len(), d);
            p.toggle(Monomial::new(e.to_vec()));
        }
        p
    }

    pub fn ambient(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, mono: Monomial) {
        debug_assert_eq!(mono.ambient(), self.d);
        if !self.terms.remove(&mono) {
            self.terms.insert(mono);
        }
    }

    /// True when every term has degree `deg` (the zero polynomial counts).
    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.terms.iter().all(|m| m.degree() == deg)
    }

    /// Terms of exactly degree `deg`.
    pub fn component(&self, deg: usize) -> Polynomial {
        Polynomial {
            d: self.d,
            terms: self.terms.iter().filter(|m| m.degree() == deg).cloned().collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.d);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn times_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            d: self.d,
            terms: self.terms.iter().map(|t| t.times(mono)).collect(),
        }
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<(), SteenrodError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(SteenrodError::AmbientMismatch(self.d, other.d))
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.d, rhs.d, "ambient mismatch");
        for t in &rhs.terms {
            self.toggle(t.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// Panics on mismatched ambients; use [`multiply`] for a checked product.
impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.d, rhs.d, "ambient mismatch");
        let mut out = Polynomial::zero(self.d);
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.times(b));
            }
        }
        out
    }
}

pub fn multiply(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, SteenrodError> {
    p.check_ambient(q)?;
    Ok(p * q)
}

pub fn add(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, SteenrodError> {
    p.check_ambient(q)?;
    Ok(p + q)
}

/// Wu's formula: `Sq^i(w_j) = Σ_{t=0}^{i} binom(j − i + t − 1, t)·w_{i−t}·w_{j+t}`.
pub fn sq_generator(i: usize, j: usize, d: usize) -> Polynomial {
    if i == 0 {
        return Polynomial::w(j, d);
    }
    if i > j || j > d {
        return Polynomial::zero(d);
    }
    let mut out = Polynomial::zero(d);
    for t in 0..=i {
        if j + t > d {
            break;
        }
        // binom(-1, 0) = 1 covers t = 0 when i = j
        let odd = t == 0 || binom_parity((j + t - i - 1) as u64, t as u64);
        if odd {
            out += &(&Polynomial::w(i - t, d) * &Polynomial::w(j + t, d));
        }
    }
    out
}

/// `Sq^i` of a monomial, by the Cartan formula applied factor by factor.
fn sq_monomial(i: usize, mono: &Monomial) -> Polynomial {
    let d = mono.ambient();
    if i == 0 {
        return Polynomial::from_monomial(mono.clone());
    }
    if i > mono.degree() {
        return Polynomial::zero(d);
    }
    // partial[s] = the degree-s part of the total square of the factors so far
    let mut partial = vec![Polynomial::zero(d); i + 1];
    partial[0] = Polynomial::one(d);
    for j in 1..=d {
        let gen_squares: Vec<Polynomial> = (0..=i.min(j)).map(|t| sq_generator(t, j, d)).collect();
        for _ in 0..mono.exponent(j) {
            let mut next = vec![Polynomial::zero(d); i + 1];
            for (s, acc) in partial.iter().enumerate() {
                if acc.is_zero() {
                    continue;
                }
                for (t, sq) in gen_squares.iter().enumerate() {
                    if s + t > i {
                        break;
                    }
                    if !sq.is_zero() {
                        next[s + t] += &(acc * sq);
                    }
                }
            }
            partial = next;
        }
    }
    partial.swap_remove(i)
}

/// `Sq^i(p)`.
pub fn sq(i: usize, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.d);
    for t in &p.terms {
        out += &sq_monomial(i, t);
    }
    out
}

/// `Σ_{i ≤ max_degree} Sq^i(p)`, the total square truncated in degree.
pub fn sq_total(p: &Polynomial, max_degree: usize) -> Polynomial {
    let mut out = Polynomial::zero(p.d);
    for i in 0..=max_degree {
        let part = sq(i, p);
        for t in part.terms {
            if t.degree() <= max_degree {
                out.toggle(t);
            }
        }
    }
    out
}

type QnKey = (u32, usize, usize);

fn qn_cache() -> &'static RwLock<HashMap<QnKey, Polynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<QnKey, Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Q_n(w_j)` in the free ring on `d` generators, memoized.
///
/// `Q_0 = Sq^1` and `Q_n = Sq^{2^n} Q_{n−1} + Q_{n−1} Sq^{2^n}`.
pub fn milnor_q_generator(n: u32, j: usize, d: usize) -> Polynomial {
    if j == 0 || j > d {
        return Polynomial::zero(d);
    }
    let key = (n, j, d);
    if let Some(hit) = qn_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let value = if n == 0 {
        sq_generator(1, j, d)
    } else {
        let step = 1usize << n;
        let prev = milnor_q_generator(n - 1, j, d);
        let mut v = sq(step, &prev);
        v += &milnor_q(n - 1, &sq_generator(step, j, d));
        v
    };
    // concurrent writers compute the same value, so either insert wins
    qn_cache().write().unwrap().insert(key, value.clone());
    value
}

/// `Q_n(w^r) = Σ_j [r_j odd]·w^{r − e_j}·Q_n(w_j)`.
pub fn milnor_q_monomial(n: u32, mono: &Monomial) -> Polynomial {
    let d = mono.ambient();
    let mut out = Polynomial::zero(d);
    for j in 1..=d {
        if mono.exponent(j) % 2 == 1 {
            let rest = mono.without(j);
            out += &milnor_q_generator(n, j, d).times_monomial(&rest);
        }
    }
    out
}

/// `Q_n(p)`, raising degree by `2^{n+1} − 1`.
pub fn milnor_q(n: u32, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.d);
    for t in &p.terms {
        out += &milnor_q_monomial(n, t);
    }
    out
}

/// `[w̄_0, …, w̄_k]` from `(1 + w_1 + ⋯ + w_d)(1 + w̄_1 + ⋯) = 1`.
pub fn dual_classes_up_to(k: usize, d: usize) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(k + 1);
    out.push(Polynomial::one(d));
    for deg in 1..=k {
        let mut acc = Polynomial::zero(d);
        for i in 1..=d.min(deg) {
            acc += &(&Polynomial::w(i, d) * &out[deg - i]);
        }
        out.push(acc);
    }
    out
}

/// `w̄_k` as a polynomial in `w_1, …, w_d`.
pub fn dual_class(k: usize, d: usize) -> Polynomial {
    dual_classes_up_to(k, d).swap_remove(k)
}

/// The power-sum s-class `p_k` reduced mod 2, from Newton's identity
/// `p_k = Σ_{i=1}^{k−1} w_i·p_{k−i} + k·w_k`.
pub fn s_class(k: usize, d: usize) -> Polynomial {
    let mut sums: Vec<Polynomial> = vec![Polynomial::zero(d)];
    for deg in 1..=k {
        let mut acc = Polynomial::zero(d);
        for i in 1..deg.min(d + 1) {
            acc += &(&Polynomial::w(i, d) * &sums[deg - i]);
        }
        if deg % 2 == 1 {
            acc += &Polynomial::w(deg, d);
        }
        sums.push(acc);
    }
    sums.swap_remove(k)
}

/// `α_n` for `Gr_{d−1}(R^{m−1})`: the s-class of degree `2^{n+1} − 1` of
/// the tautological `(d − 1)`-plane bundle.
pub fn alpha(n: u32, d: usize) -> Polynomial {
    assert!(d >= 1);
    s_class((1usize << (n + 1)) - 1, d - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::binomial;
    use num_traits::Zero;

    fn w(j: usize, d: usize) -> Polynomial {
        Polynomial::w(j, d)
    }

    fn mono(e: &[u32]) -> Polynomial {
        Polynomial::from_monomial(Monomial::new(e.to_vec()))
    }

    fn parity(a: i64, b: i64) -> bool {
        !(binomial(a, b) % num_bigint::BigUint::from(2u8)).is_zero()
    }

    #[test]
    fn products() {
        let d = 2;
        let s = &w(1, d) + &w(2, d);
        assert_eq!(&s * &w(1, d), &mono(&[2, 0]) + &mono(&[1, 1]));
        assert_eq!(&s * &Polynomial::one(d), s);
        assert_eq!(&s * &s, &mono(&[2, 0]) + &mono(&[0, 2]));
        assert_eq!(
            multiply(&w(1, 2), &w(1, 3)),
            Err(SteenrodError::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn squares_on_generators() {
        assert_eq!(sq(1, &w(2, 2)), mono(&[1, 1]));
        assert_eq!(sq(2, &w(2, 2)), mono(&[0, 2]));
        let p = &mono(&[3, 1]) + &w(1, 2);
        assert_eq!(sq(0, &p), p);
        // Sq^1 w_1 = w_1^2 and Sq^i w_j = 0 for i > j
        assert_eq!(sq(1, &w(1, 3)), mono(&[2, 0, 0]));
        assert!(sq(3, &w(2, 3)).is_zero());
        // classical: Sq^1 w_2 = w_1 w_2 + w_3, Sq^2 w_3 = w_2 w_3 + w_1 w_4
        assert_eq!(sq(1, &w(2, 4)), &mono(&[1, 1, 0, 0]) + &mono(&[0, 0, 1, 0]));
        assert_eq!(sq(2, &w(3, 4)), &mono(&[0, 1, 1, 0]) + &mono(&[1, 0, 0, 1]));
    }

    #[test]
    fn instability() {
        for d in 1..=3 {
            for e1 in 0..3u32 {
                for e2 in 0..3u32 {
                    let mut e = vec![e1, e2, 0];
                    e.truncate(d);
                    let x = Polynomial::from_monomial(Monomial::new(e));
                    let deg = x.terms().next().unwrap().degree();
                    assert_eq!(sq(deg, &x), &x * &x);
                    assert!(sq(deg + 1, &x).is_zero());
                }
            }
        }
    }

    #[test]
    fn q_on_w1() {
        for n in 0..4 {
            let d = 3;
            let expect = w(1, d).pow(1 << (n + 1));
            assert_eq!(milnor_q(n, &w(1, d)), expect);
        }
    }

    #[test]
    fn q1_on_w2() {
        assert_eq!(milnor_q(1, &w(2, 2)), &mono(&[3, 1]) + &mono(&[1, 2]));
    }

    #[test]
    fn q_kills_squares() {
        let p = &(&w(1, 3) + &w(3, 3)) + &mono(&[1, 1, 0]);
        for n in 0..3 {
            assert!(milnor_q(n, &(&p * &p)).is_zero());
        }
    }

    #[test]
    fn dual_class_examples() {
        assert_eq!(dual_class(3, 2), mono(&[3, 0]));
        assert_eq!(dual_class(2, 2), &mono(&[2, 0]) + &mono(&[0, 1]));
        for d in 1..4 {
            assert_eq!(dual_class(0, d), Polynomial::one(d));
        }
    }

    #[test]
    fn s_class_examples() {
        for k in 1..12 {
            assert_eq!(s_class(k, 1), w(1, 1).pow(k as u32));
        }
        for d in 1..5 {
            assert_eq!(s_class(1, d), w(1, d));
        }
        assert_eq!(s_class(3, 2), &mono(&[3, 0]) + &mono(&[1, 1]));
    }

    // Power sums of x_1..x_d computed by expanding in elementary symmetric
    // functions by brute force over the roots, mod 2.
    #[test]
    fn s_class_matches_power_sums_of_roots() {
        // Represent symmetric polynomials in the roots as maps from root
        // exponent vectors; e_i are computed directly.
        use std::collections::BTreeMap;
        type RootPoly = BTreeMap<Vec<u32>, bool>;
        fn mul(a: &RootPoly, b: &RootPoly) -> RootPoly {
            let mut out = RootPoly::new();
            for (ea, _) in a.iter().filter(|(_, v)| **v) {
                for (eb, _) in b.iter().filter(|(_, v)| **v) {
                    let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    let entry = out.entry(e).or_insert(false);
                    *entry = !*entry;
                }
            }
            out.retain(|_, v| *v);
            out
        }
        fn elementary(i: usize, d: usize) -> RootPoly {
            let mut out = RootPoly::new();
            for subset in 0u32..(1 << d) {
                if subset.count_ones() as usize == i {
                    let e = (0..d).map(|b| (subset >> b) & 1).collect();
                    out.insert(e, true);
                }
            }
            out
        }
        for d in 1..=3usize {
            for k in 1..=7usize {
                let mut power_sum = RootPoly::new();
                for r in 0..d {
                    let mut e = vec![0u32; d];
                    e[r] = k as u32;
                    power_sum.insert(e, true);
                }
                // substitute w_i = e_i(roots) into s_class
                let mut image = RootPoly::new();
                for m in s_class(k, d).terms() {
                    let mut term = RootPoly::new();
                    term.insert(vec![0; d], true);
                    for j in 1..=d {
                        for _ in 0..m.exponent(j) {
                            term = mul(&term, &elementary(j, d));
                        }
                    }
                    for (e, _) in term {
                        let entry = image.entry(e).or_insert(false);
                        *entry = !*entry;
                    }
                }
                image.retain(|_, v| *v);
                assert_eq!(image, power_sum, "d={d} k={k}");
            }
        }
    }

    #[test]
    fn s_class_is_additive_over_split_roots() {
        // Whitney-sum additivity: with w(ξ⊕ν) = w(ξ)w(ν), the s-class of the
        // sum equals s(ξ) + s(ν). Model ξ on generators a_1..a_p and ν on
        // b_1..b_q inside one ring of p+q generators.
        for (p, q) in [(1usize, 1usize), (1, 2), (2, 2), (1, 3)] {
            let total = p + q;
            // total Stiefel–Whitney class of the sum, degree by degree
            let a = |i: usize| if i == 0 { Polynomial::one(total) } else if i <= p { w(i, total) } else { Polynomial::zero(total) };
            let b = |i: usize| if i == 0 { Polynomial::one(total) } else if i <= q { w(p + i, total) } else { Polynomial::zero(total) };
            let combined: Vec<Polynomial> = (0..=total)
                .map(|k| {
                    let mut acc = Polynomial::zero(total);
                    for i in 0..=k {
                        acc += &(&a(i) * &b(k - i));
                    }
                    acc
                })
                .collect();
            for k in 1..=7 {
                // substitute w_i ↦ combined[i] into s_class(k, total)
                let mut lhs = Polynomial::zero(total);
                for m in s_class(k, total).terms() {
                    let mut term = Polynomial::one(total);
                    for (j, c) in combined.iter().enumerate().skip(1) {
                        term = &term * &c.pow(m.exponent(j));
                    }
                    lhs += &term;
                }
                let embed = |poly: &Polynomial, offset: usize| {
                    let mut out = Polynomial::zero(total);
                    for m in poly.terms() {
                        let mut e = vec![0u32; total];
                        for (i, &r) in m.exponents().iter().enumerate() {
                            e[offset + i] = r;
                        }
                        out.toggle(Monomial::new(e));
                    }
                    out
                };
                let rhs = &embed(&s_class(k, p), 0) + &embed(&s_class(k, q), p);
                assert_eq!(lhs, rhs, "p={p} q={q} k={k}");
            }
        }
    }

    #[test]
    fn rank_two_dual_class_identities() {
        let d = 2;
        let bars = dual_classes_up_to(40, d);
        // (a) recursion
        assert_eq!(bars[1], w(1, d));
        for k in 2..=20 {
            assert_eq!(bars[k], &(&w(1, d) * &bars[k - 1]) + &(&w(2, d) * &bars[k - 2]));
        }
        // (b)
        for j in 0..=6u32 {
            for k in 0..=10usize {
                let lhs = &w(2, d).pow(j) * &bars[k];
                let mut rhs = Polynomial::zero(d);
                for i in 0..=j {
                    if parity(j as i64, i as i64) {
                        rhs += &(&w(1, d).pow(j - i) * &bars[k + j as usize + i as usize]);
                    }
                }
                assert_eq!(lhs, rhs, "j={j} k={k}");
            }
        }
        // (c)
        for (k, bar) in bars.iter().enumerate() {
            let mut rhs = Polynomial::zero(d);
            for j in 0..=k / 2 {
                if parity((k - j) as i64, j as i64) {
                    rhs += &mono(&[(k - 2 * j) as u32, j as u32]);
                }
            }
            assert_eq!(*bar, rhs, "k={k}");
        }
        // (d), (e)
        for b in 0..=5u32 {
            assert_eq!(bars[(1 << b) - 1], w(1, d).pow((1 << b) - 1));
        }
        for b in 1..=5u32 {
            let mut rhs = Polynomial::zero(d);
            for c in 0..b {
                rhs += &mono(&[(1 << b) - (1 << (c + 1)), (1 << c) - 1]);
            }
            assert_eq!(bars[(1 << b) - 2], rhs, "b={b}");
        }
    }

    #[test]
    fn q_n_of_w2_closed_form() {
        let d = 2;
        for n in 0..=4u32 {
            let mut expect = Polynomial::zero(d);
            for c in 0..=n {
                expect += &mono(&[(1 << (n + 1)) - (1 << (c + 1)) + 1, 1 << c]);
            }
            assert_eq!(milnor_q(n, &w(2, d)), expect, "n={n}");
            // second form: w_1 w_2 w̄_{2^{n+1}-2}
            let other = &(&w(1, d) * &w(2, d)) * &dual_class((1 << (n + 1)) - 2, d);
            assert_eq!(expect, other);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(d: usize, max_deg: usize) -> impl Strategy<Value = Polynomial> {
            prop::collection::vec(prop::collection::vec(0u32..4, d), 0..5).prop_map(move |es| {
                let mut p = Polynomial::zero(d);
                for e in es {
                    let m = Monomial::new(e);
                    if m.degree() <= max_deg {
                        p.toggle(m);
                    }
                }
                p
            })
        }

        fn pair() -> impl Strategy<Value = (usize, Polynomial, Polynomial)> {
            (1usize..=4).prop_flat_map(|d| (Just(d), poly(d, 12), poly(d, 12)))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn q_squares_to_zero((_d, p, _q) in pair(), n in 0u32..=3) {
                prop_assert!(milnor_q(n, &milnor_q(n, &p)).is_zero());
            }

            #[test]
            fn q_is_a_derivation((_d, p, q) in pair(), n in 0u32..=2) {
                let lhs = milnor_q(n, &(&p * &q));
                let rhs = &(&milnor_q(n, &p) * &q) + &(&p * &milnor_q(n, &q));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn total_square_is_multiplicative((_d, p, q) in pair()) {
                let bound = 14;
                let lhs = sq_total(&(&p * &q), bound);
                let prod = &sq_total(&p, bound) * &sq_total(&q, bound);
                let mut rhs = Polynomial::zero(p.ambient());
                for t in prod.terms() {
                    if t.degree() <= bound {
                        rhs.toggle(t.clone());
                    }
                }
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn q_raises_degree((_d, p, _q) in pair(), n in 0u32..=2) {
                for t in p.terms() {
                    let image = milnor_q_monomial(n, t);
                    prop_assert!(image.is_homogeneous_of(t.degree() + (1 << (n + 1)) - 1));
                }
            }
        }
    }
}
