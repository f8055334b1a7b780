//! Level partition, profile, Apéry levels, and the constants `W` and `W₀`.
//!
//! With `c = q·m − ρ` and `0 ≤ ρ < m`, the intervals
//! `I_j = [jm − ρ, (j+1)m − ρ)` cut `S` into levels `S_j = S ∩ I_j`.
//! `S_q = I_q = [c, c + m)` is the first level entirely inside `S`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::InvariantError;
use crate::semigroup::{ElementSet, NumericalSemigroup};

/// `q = ⌈c/m⌉` and `ρ = q·m − c`.
pub fn q_rho(m: u64, c: u64) -> (u64, u64) {
    let q = c.div_ceil(m);
    (q, q * m - c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub q: u64,
    pub rho: u64,
    /// `S_0, …, S_q`.
    pub levels: Vec<ElementSet>,
    /// `X_j = X ∩ S_j` for `0 ≤ j ≤ q`.
    pub apery_levels: Vec<ElementSet>,
    /// `α_i = |X_i|` for `i < q`, and `α_q = |X_q \ P|`.
    pub alpha: Vec<u64>,
}

impl LevelDecomposition {
    /// Index of the level holding `x`, i.e. the `j` with `x ∈ I_j`.
    pub fn level_of(&self, x: u64, m: u64) -> u64 {
        (x + self.rho) / m
    }
}

pub fn decompose(s: &NumericalSemigroup) -> LevelDecomposition {
    let m = s.multiplicity();
    let (q, rho) = q_rho(m, s.conductor());
    let apery = s.apery_set();
    let mut levels = Vec::with_capacity(q as usize + 1);
    let mut apery_levels = Vec::with_capacity(q as usize + 1);
    let mut alpha = Vec::with_capacity(q as usize + 1);
    for j in 0..=q {
        let lo = (j * m).saturating_sub(rho);
        let hi = (j + 1) * m - rho;
        let level = s.members_in(lo, hi).expect("levels lie inside the window");
        let xj = ElementSet::new(level.iter().filter(|&x| apery.contains(x)).collect());
        let a = if j < q {
            xj.len()
        } else {
            xj.iter().filter(|&x| !s.is_primitive(x)).count()
        };
        alpha.push(a as u64);
        levels.push(level);
        apery_levels.push(xj);
    }
    LevelDecomposition {
        q,
        rho,
        levels,
        apery_levels,
        alpha,
    }
}

/// Primitive counts `(p_1, …, p_{q−1})`; empty when `q = 1`.
pub fn profile(s: &NumericalSemigroup) -> Vec<u64> {
    profile_of(s, &decompose(s))
}

fn profile_of(s: &NumericalSemigroup, dec: &LevelDecomposition) -> Vec<u64> {
    dec.levels[1..dec.q as usize]
        .iter()
        .map(|level| level.iter().filter(|&x| s.is_primitive(x)).count() as u64)
        .collect()
}

/// Every quantity entering `W(S) = e|L| − c` and `W₀(S) = |P∩L||L| − q·d_q + ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfReport {
    pub m: u64,
    pub c: u64,
    /// `-1` for `ℕ`.
    pub frobenius: i64,
    pub genus: u64,
    pub q: u64,
    pub rho: u64,
    pub e: u64,
    #[serde(rename = "L_size")]
    pub l_size: u64,
    pub profile: Vec<u64>,
    pub p_q: u64,
    pub d_q: u64,
    #[serde(rename = "W")]
    pub w: i64,
    #[serde(rename = "W0")]
    pub w0: i64,
    #[serde(skip)]
    pub alpha: Vec<u64>,
}

impl WilfReport {
    /// Header matching the JSON field order.
    pub const CSV_HEADER: &'static str = "m,c,frobenius,genus,q,rho,e,L_size,profile,p_q,d_q,W,W0";

    /// One CSV row; the profile is written `p1;p2;…` to keep the row comma-safe.
    pub fn csv_row(&self) -> String {
        let profile = self.profile.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.m,
            self.c,
            self.frobenius,
            self.genus,
            self.q,
            self.rho,
            self.e,
            self.l_size,
            profile,
            self.p_q,
            self.d_q,
            self.w,
            self.w0
        )
    }

    /// `|P ∩ L| = p_1 + … + p_{q−1}`.
    pub fn left_primitive_count(&self) -> u64 {
        self.profile.iter().sum()
    }
}

/// `W₀ = |P∩L|·|L| − q·d_q + ρ`.
pub fn w0_value(left_primitives: u64, l_size: u64, q: u64, d_q: u64, rho: u64) -> i64 {
    (left_primitives * l_size) as i64 - (q * d_q) as i64 + rho as i64
}

pub fn wilf_report(s: &NumericalSemigroup) -> WilfReport {
    let dec = decompose(s);
    wilf_report_with(s, &dec)
}

pub fn wilf_report_with(s: &NumericalSemigroup, dec: &LevelDecomposition) -> WilfReport {
    let (m, c) = (s.multiplicity(), s.conductor());
    let (q, rho) = (dec.q, dec.rho);
    let profile = profile_of(s, dec);
    let p_q = s.right_primitives().len() as u64;
    let d_q = s.decomposables_in(c, c + m).expect("I_q is in the window").len() as u64;
    let e = s.embedding_dimension() as u64;
    let l_size = s.left_size();
    let left: u64 = profile.iter().sum();
    let w = (e * l_size) as i64 - c as i64;
    let w0 = w0_value(left, l_size, q, d_q, rho);

    let report = WilfReport {
        m,
        c,
        frobenius: s.frobenius().map_or(-1, |f| f as i64),
        genus: s.genus(),
        q,
        rho,
        e,
        l_size,
        profile,
        p_q,
        d_q,
        w,
        w0,
        alpha: dec.alpha.clone(),
    };
    assert_identities(&report);
    report
}

/// Identities that hold for every numerical semigroup; a failure is a bug.
fn assert_identities(r: &WilfReport) {
    assert_eq!(r.w, (r.p_q * (r.l_size - r.q)) as i64 + r.w0, "W = p_q(|L|-q) + W0");
    assert_eq!(r.p_q + r.d_q, r.m, "p_q + d_q = m");
    assert_eq!(r.e, r.left_primitive_count() + r.p_q, "e = sum of profile + p_q");
    assert_eq!(r.d_q, alpha_sum_for_dq(&r.alpha, r.q), "d_q from Apéry levels");
    let l_from_alpha: u64 = r.alpha[..r.q as usize]
        .iter()
        .enumerate()
        .map(|(i, &a)| (r.q - i as u64) * a)
        .sum();
    assert_eq!(r.l_size, l_from_alpha, "|L| = sum (q-i) alpha_i");
}

/// `Σ α_i`, corrected for `q = 1` where `m ∈ P_q` is not an Apéry element.
pub fn alpha_sum_for_dq(alpha: &[u64], q: u64) -> u64 {
    let sum: u64 = alpha.iter().sum();
    if q == 1 {
        sum - 1
    } else {
        sum
    }
}

/// Measured sizes of the off-diagonal parts of `S_i + S_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelExcess {
    pub i: u64,
    pub j: u64,
    /// `|(S_i + S_j) ∩ S_{i+j−1}|`
    pub below: u64,
    /// `|(S_i + S_j) ∩ S_{i+j+1}|`
    pub above: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingCheck {
    /// Every `S_i + S_j` (`1 ≤ i ≤ j`, `i + j ≤ q`) lands in the allowed levels.
    pub weak_grading_ok: bool,
    /// All excesses satisfy `below ≤ ρ` and `above ≤ m − ρ − 1`.
    pub bounds_ok: bool,
    pub true_grading_ok: bool,
    pub intersection_excesses: Vec<LevelExcess>,
}

fn level_bits(level: &ElementSet, len: usize) -> BitSet {
    let mut b = BitSet::new(len);
    for x in level {
        b.insert(x as usize);
    }
    b
}

pub fn check_weak_grading(s: &NumericalSemigroup) -> GradingCheck {
    check_weak_grading_with(s, &decompose(s))
}

pub fn check_weak_grading_with(s: &NumericalSemigroup, dec: &LevelDecomposition) -> GradingCheck {
    let m = s.multiplicity();
    let (q, rho) = (dec.q, dec.rho);
    // Sums of two window elements stay below 2(c + m); those past the window
    // are classified by level arithmetic alone.
    let len = 2 * s.window_end() as usize;
    let bits: Vec<BitSet> = dec.levels.iter().map(|l| level_bits(l, len)).collect();

    let mut inclusion_ok = true;
    let mut bounds_ok = true;
    let mut excesses = Vec::new();
    for i in 1..=q / 2 {
        for j in i..=q - i {
            let sums = bits[i as usize].sumset(&bits[j as usize], len);
            let (mut below, mut above) = (0, 0);
            for x in sums.iter() {
                let lvl = dec.level_of(x as u64, m);
                let k = i + j;
                if lvl + 1 == k && i >= 2 {
                    below += 1;
                } else if lvl == k + 1 {
                    above += 1;
                } else if lvl != k {
                    inclusion_ok = false;
                }
            }
            if below > rho || above + rho + 1 > m {
                bounds_ok = false;
            }
            excesses.push(LevelExcess { i, j, below, above });
        }
    }
    GradingCheck {
        weak_grading_ok: inclusion_ok && bounds_ok,
        bounds_ok,
        true_grading_ok: true_grading_with(s, dec),
        intersection_excesses: excesses,
    }
}

/// `S_i + S_j = S_{i+j}` for all `i + j ≤ q − 1`.
pub fn check_true_grading(s: &NumericalSemigroup) -> bool {
    true_grading_with(s, &decompose(s))
}

fn true_grading_with(s: &NumericalSemigroup, dec: &LevelDecomposition) -> bool {
    let q = dec.q;
    if q < 3 {
        return true;
    }
    let len = 2 * s.window_end() as usize;
    let bits: Vec<BitSet> = dec.levels.iter().map(|l| level_bits(l, len)).collect();
    (1..q).all(|i| (i..q - i).all(|j| bits[i as usize].sumset(&bits[j as usize], len) == bits[(i + j) as usize]))
}

/// Whether every left primitive lies in `[m, m + (m − ρ)/(q − 1))`.
/// Requires `q ≥ 4`. Compared exactly as `(x − m)(q − 1) < m − ρ`.
pub fn check_packed_left_primitives(s: &NumericalSemigroup) -> Result<bool, InvariantError> {
    let m = s.multiplicity();
    let (q, rho) = q_rho(m, s.conductor());
    if q < 4 {
        return Err(InvariantError::QTooSmall { need: 4, q });
    }
    Ok(s.left_primitives().iter().all(|x| (x - m) * (q - 1) < m - rho))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdCheck {
    /// `gcd(L \ {0})`, which equals the gcd of the left primitives; `0` when
    /// `L = {0}`.
    pub gcd: u64,
    /// `2e ≥ m`.
    pub e_ge_half_m: bool,
}

pub fn check_gcd_left(s: &NumericalSemigroup) -> Result<GcdCheck, InvariantError> {
    if s.is_naturals() {
        return Err(InvariantError::Naturals);
    }
    let gcd = s.left_primitives().iter().fold(0u64, |acc, x| acc.gcd(&x));
    Ok(GcdCheck {
        gcd,
        e_ge_half_m: 2 * s.embedding_dimension() as u64 >= s.multiplicity(),
    })
}
