//! Binomial representations, Macaulay's growth operator `a^⟨i⟩`, exact real
//! binomial inversion, and Hilbert functions of sumset algebras.
//!
//! The real root `x ≥ i − 1` of `C(x, i) = a` is bracketed by dyadic
//! rationals of width `2^-40`; every integer bound derived from it is taken on
//! the safe side of the bracket. No floating point is involved anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{InvariantError, MacaulayError};
use crate::invariants::{decompose, profile};
use crate::semigroup::{ElementSet, NumericalSemigroup};

/// Bracket width for real inverses is `2^-BRACKET_BITS`.
pub const BRACKET_BITS: u32 = 40;

/// `C(n, k)` in 128-bit arithmetic, `None` on overflow.
pub fn binomial(n: u64, k: u32) -> Option<u128> {
    let k = k as u64;
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        // acc * (n - t) is divisible by (t + 1) after the multiplication.
        let num = (n - t) as u128;
        let den = (t + 1) as u128;
        let g = num_integer::gcd(acc, den);
        let (acc_r, den_r) = (acc / g, den / g);
        acc = acc_r.checked_mul(num / den_r)?;
    }
    Some(acc)
}

/// Largest `n ≥ k − 1` with `C(n, k) ≤ a`, for `k ≥ 1`.
fn binomial_floor_index(a: u128, k: u32) -> u64 {
    if k == 1 {
        return a.min(u64::MAX as u128) as u64;
    }
    let fits = |n: u64| binomial(n, k).is_some_and(|v| v <= a);
    let mut lo = k as u64 - 1;
    let mut step = 1u64;
    let mut hi = lo + step;
    while fits(hi) {
        lo = hi;
        step = step.saturating_mul(2);
        hi = lo.saturating_add(step);
    }
    // fits(lo), !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `i`-th binomial representation `a = C(a_i, i) + … + C(a_1, 1)` with
/// `a_i > … > a_1 ≥ 0`. For `a = 0` every coefficient is `a_j = j − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialRep {
    pub degree: u32,
    /// `a_i, a_{i−1}, …, a_1`.
    pub coeffs: Vec<u64>,
}

impl BinomialRep {
    /// The coefficient `a_j` paired with `C(·, j)`.
    pub fn coeff(&self, j: u32) -> u64 {
        self.coeffs[(self.degree - j) as usize]
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(t, &a)| (a, self.degree - t as u32))
    }

    pub fn value(&self) -> Option<u128> {
        self.terms()
            .try_fold(0u128, |acc, (a, j)| acc.checked_add(binomial(a, j)?))
    }
}

impl fmt::Display for BinomialRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, (a, j)) in self.terms().enumerate() {
            if t > 0 {
                f.write_str("+")?;
            }
            write!(f, "C({a},{j})")?;
        }
        Ok(())
    }
}

pub fn binomial_representation(a: u64, i: u32) -> Result<BinomialRep, MacaulayError> {
    if i == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    let mut rem = a as u128;
    let mut coeffs = Vec::with_capacity(i as usize);
    for j in (1..=i).rev() {
        let n = binomial_floor_index(rem, j);
        rem -= binomial(n, j).expect("fits by construction");
        coeffs.push(n);
    }
    debug_assert_eq!(rem, 0);
    Ok(BinomialRep { degree: i, coeffs })
}

/// `a^⟨i⟩ = Σ C(a_j + 1, j + 1)` over the `i`-th binomial representation.
pub fn macaulay_step(a: u64, i: u32) -> Result<u128, MacaulayError> {
    let rep = binomial_representation(a, i)?;
    let mut total: u128 = 0;
    for (aj, j) in rep.terms() {
        let term = binomial(aj + 1, j + 1).ok_or(MacaulayError::Overflow)?;
        total = total.checked_add(term).ok_or(MacaulayError::Overflow)?;
    }
    Ok(total)
}

/// `x(x−1)…(x−i+1)/i!`, and `1` for `i = 0`.
pub fn binomial_real(x: &BigRational, i: u32) -> BigRational {
    let mut num = BigRational::one();
    let mut fact = BigInt::one();
    for t in 0..i {
        num *= x - BigRational::from_integer(BigInt::from(t));
        fact *= BigInt::from(t + 1);
    }
    num / BigRational::from_integer(fact)
}

/// Bracket `lo ≤ x ≤ hi` for the unique `x ≥ i − 1` with `C(x, i) = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBinomialQuery {
    pub a: u64,
    pub i: u32,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RealBinomialQuery {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn exact(&self) -> Option<&BigRational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

pub fn binomial_inverse(a: u64, i: u32) -> Result<RealBinomialQuery, MacaulayError> {
    if i == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    let n = binomial_floor_index(a as u128, i);
    if binomial(n, i) == Some(a as u128) {
        let x = BigRational::from_integer(BigInt::from(n));
        return Ok(RealBinomialQuery {
            a,
            i,
            lo: x.clone(),
            hi: x,
        });
    }
    // A monic integer polynomial has only integer rational roots, so x is
    // irrational in (n, n + 1). Bisect over x = k / 2^BRACKET_BITS.
    let scale = BigInt::one() << BRACKET_BITS;
    let mut target = BigInt::from(a) << (BRACKET_BITS * i);
    for t in 1..=i {
        target *= BigInt::from(t);
    }
    let falling = |k: &BigInt| -> BigInt {
        let mut p = BigInt::one();
        for t in 0..i {
            p *= k - &scale * BigInt::from(t);
        }
        p
    };
    let mut lo = &scale * BigInt::from(n);
    let mut hi = &scale * BigInt::from(n + 1);
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if falling(&mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RealBinomialQuery {
        a,
        i,
        lo: BigRational::new(lo, scale.clone()),
        hi: BigRational::new(hi, scale),
    })
}

fn ceil_nonneg(v: &BigRational) -> u128 {
    if v.is_negative() {
        return 0;
    }
    v.ceil().to_integer().to_u128().unwrap_or(u128::MAX)
}

fn floor_nonneg(v: &BigRational) -> u128 {
    if v.is_negative() {
        return 0;
    }
    v.floor().to_integer().to_u128().unwrap_or(u128::MAX)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensedBounds {
    pub x: RealBinomialQuery,
    /// Valid lower bound on `h_{r−1}`: `⌈C(x_lo − 1, r − 1)⌉`.
    pub lower_prev: u128,
    /// Valid upper bound on `h_{r+1}`: `⌊C(x_hi + 1, r + 1)⌋`.
    pub upper_next: u128,
}

/// With `C(x, r) = h_r`: `h_{r−1} ≥ C(x − 1, r − 1)` and `h_{r+1} ≤ C(x + 1, r + 1)`.
pub fn condensed_bounds(h_r: u64, r: u32) -> Result<CondensedBounds, MacaulayError> {
    let x = binomial_inverse(h_r, r)?;
    let one = BigRational::one();
    let lower_prev = ceil_nonneg(&binomial_real(&(&x.lo - &one), r - 1));
    let upper_next = floor_nonneg(&binomial_real(&(&x.hi + &one), r + 1));
    Ok(CondensedBounds {
        x,
        lower_prev,
        upper_next,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetSource {
    pub generators: Vec<u64>,
    pub top_degree: usize,
}

/// `h_0, h_1, …, h_n` of a standard graded algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSequence {
    values: Vec<u64>,
    source: Option<SumsetSource>,
}

impl HilbertSequence {
    pub fn new(values: Vec<u64>) -> Result<Self, MacaulayError> {
        if values.first() != Some(&1) {
            return Err(MacaulayError::BadStart);
        }
        Ok(HilbertSequence { values, source: None })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn source(&self) -> Option<&SumsetSource> {
        self.source.as_ref()
    }

    /// Top degree `n`.
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.values.get(i).copied()
    }
}

impl fmt::Display for HilbertSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `h_{i+1} ≤ h_i^⟨i⟩` for every `1 ≤ i < n`.
pub fn macaulay_growth_ok(h: &HilbertSequence) -> bool {
    h.values
        .windows(2)
        .enumerate()
        .skip(1)
        .all(|(i, w)| match macaulay_step(w[0], i as u32) {
            Ok(bound) => w[1] as u128 <= bound,
            Err(_) => true,
        })
}

/// `q·h_q ≤ h_1(1 + h_1 + … + h_{q−1})`.
pub fn averaging_bound_ok(h: &HilbertSequence, q: usize) -> Result<bool, MacaulayError> {
    if q == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    if h.values.len() < q + 1 {
        return Err(MacaulayError::TooShort {
            len: h.values.len(),
            need: q + 1,
        });
    }
    let lhs = q as u128 * h.values[q] as u128;
    let partial: u128 = h.values[..q].iter().map(|&v| v as u128).sum();
    Ok(lhs <= h.values[1] as u128 * partial)
}

/// `h_i = |iA|` for `0 ≤ i ≤ n`: the Hilbert function of `K[t^a u : a ∈ A]`.
pub fn hilbert_from_sumsets(a: &ElementSet, n: usize) -> Result<HilbertSequence, MacaulayError> {
    if a.is_empty() || a.contains(0) {
        return Err(MacaulayError::BadGenerators);
    }
    let max = a.iter().last().unwrap() as usize;
    let len = n * max + 1;
    let mut gens = BitSet::new(len);
    for x in a {
        gens.insert(x as usize);
    }
    let mut values = Vec::with_capacity(n + 1);
    values.push(1);
    let mut cur = BitSet::new(len);
    cur.insert(0);
    for _ in 0..n {
        cur = cur.sumset(&gens, len);
        values.push(cur.count() as u64);
    }
    Ok(HilbertSequence {
        values,
        source: Some(SumsetSource {
            generators: a.as_slice().to_vec(),
            top_degree: n,
        }),
    })
}

/// `(|X_1|, |2X_1 ∩ X_2|, |3X_1 ∩ X_3|)` for `q = 3` and profile `(k, 0)`:
/// the Hilbert function in degrees 1 to 3 of the quotient algebra killing
/// the non-Apéry monomials.
pub fn quotient_dims(s: &NumericalSemigroup) -> Result<(u64, u64, u64), InvariantError> {
    let dec = decompose(s);
    if dec.q != 3 {
        return Err(InvariantError::WrongQ { need: 3, q: dec.q });
    }
    let p = profile(s);
    if p[1] != 0 {
        return Err(InvariantError::WrongProfile(p));
    }
    let x1 = &dec.apery_levels[1];
    let len = 3 * s.window_end() as usize;
    let mut b1 = BitSet::new(len);
    for x in x1 {
        b1.insert(x as usize);
    }
    let two = b1.sumset(&b1, len);
    let three = two.sumset(&b1, len);
    let count_in =
        |sums: &BitSet, level: &ElementSet| level.iter().filter(|&x| sums.contains(x as usize)).count() as u64;
    Ok((
        x1.len() as u64,
        count_in(&two, &dec.apery_levels[2]),
        count_in(&three, &dec.apery_levels[3]),
    ))
}

/// `C(x, i)` evaluated at both bracket ends.
pub fn binomial_at_bracket(q: &RealBinomialQuery, shift: i64, k: u32) -> (BigRational, BigRational) {
    let s = BigRational::from_integer(BigInt::from(shift));
    (binomial_real(&(&q.lo + &s), k), binomial_real(&(&q.hi + &s), k))
}
