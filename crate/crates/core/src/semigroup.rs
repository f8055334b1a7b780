//! Numerical semigroups stored as a dense membership window.
//!
//! A semigroup `S` with multiplicity `m` and conductor `c` is completely
//! described by its members in `[0, c + m)`: everything at or above `c` is a
//! member, and every primitive lies in `[m, c + m)`. The window is exactly
//! that interval.
//!
//! `S = ℕ` has no Frobenius number. It is stored with `m = 1`, `c = 1`, so
//! that `|L| = c - g = 1` and it sits at the root of the semigroup tree with
//! `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::SemigroupError;

/// Generators above this bound are rejected so that sums stay far from overflow.
pub const MAX_GENERATOR: u64 = 1 << 31;

/// Largest membership table (in bits) `build` is willing to allocate.
pub const MAX_WINDOW: usize = 1 << 28;

/// Generator data for `⟨A⟩` or, with a cap, `⟨A⟩_c = ⟨A⟩ ∪ [c, ∞)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub generators: Vec<u64>,
    pub cap: Option<u64>,
}

impl GeneratorSpec {
    pub fn new(generators: Vec<u64>, cap: Option<u64>) -> Result<Self, SemigroupError> {
        let spec = GeneratorSpec { generators, cap };
        spec.validate()?;
        Ok(spec)
    }

    pub fn uncapped(generators: Vec<u64>) -> Result<Self, SemigroupError> {
        Self::new(generators, None)
    }

    pub fn capped(generators: Vec<u64>, cap: u64) -> Result<Self, SemigroupError> {
        Self::new(generators, Some(cap))
    }

    pub fn validate(&self) -> Result<(), SemigroupError> {
        let Some(&first) = self.generators.first() else {
            return Err(SemigroupError::EmptyGenerators);
        };
        if first == 0 {
            return Err(SemigroupError::ZeroGenerator);
        }
        for w in self.generators.windows(2) {
            if w[0] >= w[1] {
                return Err(SemigroupError::NotIncreasing(w[0], w[1]));
            }
        }
        if let Some(&big) = self.generators.iter().find(|&&a| a > MAX_GENERATOR) {
            return Err(SemigroupError::GeneratorTooLarge(big));
        }
        match self.cap {
            None => {
                let g = self.generators.iter().fold(0u64, |acc, &a| acc.gcd(&a));
                if g != 1 {
                    return Err(SemigroupError::NotCoprime(g));
                }
            }
            Some(cap) => {
                if cap < first {
                    return Err(SemigroupError::CapBelowMultiplicity { cap, m: first });
                }
                if cap > MAX_GENERATOR {
                    return Err(SemigroupError::GeneratorTooLarge(cap));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.generators {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{a}")?;
        }
        if let Some(cap) = self.cap {
            write!(f, ":{cap}")?;
        }
        Ok(())
    }
}

/// Parses `INT(,INT)*(:INT)?`, e.g. `14,22,23:56`.
impl FromStr for GeneratorSpec {
    type Err = SemigroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (gens, cap) = match s.split_once(':') {
            Some((g, c)) => (g, Some(c)),
            None => (s, None),
        };
        let parse = |tok: &str| -> Result<u64, SemigroupError> {
            let t = tok.trim();
            t.parse::<u64>()
                .map_err(|_| SemigroupError::Parse { token: t.to_string() })
        };
        let generators = gens.split(',').map(parse).collect::<Result<Vec<_>, _>>()?;
        let cap = cap.map(parse).transpose()?;
        GeneratorSpec::new(generators, cap)
    }
}

/// Sorted, duplicate-free set of semigroup elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<u64>);

impl ElementSet {
    /// Sorts and deduplicates.
    pub fn new(mut v: Vec<u64>) -> Self {
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub(crate) fn from_sorted(v: Vec<u64>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        ElementSet(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }
}

impl From<ElementSet> for Vec<u64> {
    fn from(e: ElementSet) -> Self {
        e.0
    }
}

impl IntoIterator for ElementSet {
    type Item = u64;
    type IntoIter = std::vec::IntoIter<u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = u64;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, u64>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A numerical semigroup, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// Membership on `[0, c + m)`.
    members: BitSet,
    /// Decomposable elements (`S* + S*`) on the same window.
    decomposable: BitSet,
    m: u64,
    c: u64,
    genus: u64,
}

/// JSON form: `{generators, cap, m, c, frobenius, genus}`; `frobenius` is `-1` for `ℕ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub generators: Vec<u64>,
    pub cap: Option<u64>,
    pub m: u64,
    pub c: u64,
    pub frobenius: i64,
    pub genus: u64,
}

/// Builds `⟨A⟩` or `⟨A⟩_cap`, reporting the true conductor.
pub fn build(spec: &GeneratorSpec) -> Result<NumericalSemigroup, SemigroupError> {
    spec.validate()?;
    let m = spec.generators[0];
    if m == 1 {
        return Ok(NumericalSemigroup::naturals());
    }
    let m = m as usize;

    let (table, c) = match spec.cap {
        Some(cap) => {
            let cap = cap as usize;
            let len = cap + m;
            check_window(len)?;
            let mut t = closure(&spec.generators, len);
            t.insert_range(cap, len);
            let c = last_gap(&t, cap).map_or(1, |f| f + 1);
            (t, c)
        }
        None => {
            let mut len = (2 * spec.generators[spec.generators.len() - 1] as usize).max(4 * m);
            loop {
                check_window(len)?;
                let t = closure(&spec.generators, len);
                // The closure is final once the table ends in a run of m members.
                let f = last_gap(&t, len).expect("m > 1 leaves gaps below m");
                if len - (f + 1) >= m {
                    break (t, f + 1);
                }
                len *= 2;
            }
        }
    };

    let mut members = BitSet::new(c + m);
    for x in table.iter().take_while(|&x| x < c + m) {
        members.insert(x);
    }
    members.insert_range(c, c + m);
    Ok(NumericalSemigroup::from_window(members, m as u64, c as u64))
}

fn check_window(len: usize) -> Result<(), SemigroupError> {
    if len > MAX_WINDOW {
        Err(SemigroupError::WindowTooLarge(len))
    } else {
        Ok(())
    }
}

/// `⟨A⟩ ∩ [0, len)` by successive closure under each generator.
fn closure(generators: &[u64], len: usize) -> BitSet {
    let mut t = BitSet::new(len);
    t.insert(0);
    for &a in generators {
        let a = a as usize;
        if a < len {
            t.close_under_step(a);
        }
    }
    t
}

fn last_gap(t: &BitSet, below: usize) -> Option<usize> {
    (0..below.min(t.len())).rev().find(|&x| !t.contains(x))
}

impl NumericalSemigroup {
    /// `ℕ` itself, stored with `m = c = 1`.
    pub fn naturals() -> Self {
        let mut members = BitSet::new(2);
        members.insert_range(0, 2);
        Self::from_window(members, 1, 1)
    }

    /// `{0} ∪ [m, ∞)`.
    pub fn ordinary(m: u64) -> Self {
        if m <= 1 {
            return Self::naturals();
        }
        let mut members = BitSet::new(2 * m as usize);
        members.insert(0);
        members.insert_range(m as usize, 2 * m as usize);
        Self::from_window(members, m, m)
    }

    /// Wraps a membership table on exactly `[0, c + m)`. The caller
    /// guarantees additive closure and that `m`, `c` are the true
    /// multiplicity and conductor.
    pub(crate) fn from_window(members: BitSet, m: u64, c: u64) -> Self {
        debug_assert_eq!(members.len() as u64, c + m);
        let mut nonzero = members.clone();
        nonzero.remove(0);
        let decomposable = nonzero.sumset(&nonzero, members.len());
        let gaps = c as usize - members.count_range(0, c as usize);
        let s = NumericalSemigroup {
            members,
            decomposable,
            m,
            c,
            genus: gaps as u64,
        };
        debug_assert!(s.m == 1 || s.frobenius().is_some_and(|f| !s.contains(f)));
        s
    }

    /// Builds a semigroup from a membership predicate sampled on `[0, c + m)`.
    pub(crate) fn from_predicate(m: u64, c: u64, is_member: impl Fn(usize) -> bool) -> Self {
        let len = (c + m) as usize;
        let mut members = BitSet::new(len);
        for x in 0..len {
            if x >= c as usize || is_member(x) {
                members.insert(x);
            }
        }
        Self::from_window(members, m, c)
    }

    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    pub fn conductor(&self) -> u64 {
        self.c
    }

    /// `F = c - 1`, absent for `ℕ`.
    pub fn frobenius(&self) -> Option<u64> {
        if self.is_naturals() {
            None
        } else {
            Some(self.c - 1)
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.genus == 0
    }

    /// End of the window, `c + m`.
    pub fn window_end(&self) -> u64 {
        self.c + self.m
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.c || self.members.contains(x as usize)
    }

    fn collect(&self, lo: u64, hi: u64, pick: impl Fn(usize) -> bool) -> ElementSet {
        ElementSet::from_sorted(
            (lo as usize..hi as usize)
                .filter(|&x| pick(x))
                .map(|x| x as u64)
                .collect(),
        )
    }

    /// Members in `[lo, hi)`; `hi` may not exceed the window.
    pub fn members_in(&self, lo: u64, hi: u64) -> Result<ElementSet, SemigroupError> {
        self.check_range(lo, hi)?;
        Ok(self.collect(lo, hi, |x| self.members.contains(x)))
    }

    /// Minimal generating set `P = S* \ (S* + S*)`, all inside `[m, c + m)`.
    pub fn primitives(&self) -> ElementSet {
        self.collect(self.m, self.window_end(), |x| {
            self.members.contains(x) && !self.decomposable.contains(x)
        })
    }

    pub fn is_primitive(&self, x: u64) -> bool {
        x > 0 && x < self.window_end() && self.members.contains(x as usize) && !self.decomposable.contains(x as usize)
    }

    /// Embedding dimension `e = |P|`.
    pub fn embedding_dimension(&self) -> usize {
        (self.m..self.window_end()).filter(|&x| self.is_primitive(x)).count()
    }

    /// Primitives below the conductor, `P ∩ L`.
    pub fn left_primitives(&self) -> ElementSet {
        self.collect(self.m, self.c, |x| self.is_primitive(x as u64))
    }

    /// Primitives in `[c, c + m)`; these are the children in the semigroup tree.
    pub fn right_primitives(&self) -> ElementSet {
        self.collect(self.c, self.window_end(), |x| self.is_primitive(x as u64))
    }

    /// `D ∩ [lo, hi)` where `D = S* + S*`.
    pub fn decomposables_in(&self, lo: u64, hi: u64) -> Result<ElementSet, SemigroupError> {
        self.check_range(lo, hi)?;
        Ok(self.collect(lo, hi, |x| self.decomposable.contains(x)))
    }

    pub fn is_decomposable(&self, x: u64) -> bool {
        x >= self.window_end() || self.decomposable.contains(x as usize)
    }

    /// Apéry set with respect to `m`: the least member of each residue class.
    pub fn apery_set(&self) -> ElementSet {
        self.collect(0, self.window_end(), |x| {
            self.members.contains(x) && (x < self.m as usize || !self.contains(x as u64 - self.m))
        })
    }

    /// `L = S ∩ [0, c)`.
    pub fn left_part(&self) -> ElementSet {
        self.collect(0, self.c, |x| self.members.contains(x))
    }

    /// `|L| = c - g`.
    pub fn left_size(&self) -> u64 {
        self.c - self.genus
    }

    pub fn gaps(&self) -> ElementSet {
        self.collect(0, self.c, |x| !self.members.contains(x))
    }

    /// Canonical generator data: the minimal generating set when it has no
    /// elements above `F` or none below, otherwise `⟨P ∩ L⟩_c`.
    pub fn generator_spec(&self) -> GeneratorSpec {
        let left = self.left_primitives();
        if left.is_empty() || self.right_primitives().is_empty() {
            GeneratorSpec {
                generators: self.primitives().into_vec(),
                cap: None,
            }
        } else {
            GeneratorSpec {
                generators: left.into_vec(),
                cap: Some(self.c),
            }
        }
    }

    pub fn summary(&self) -> SemigroupSummary {
        let spec = self.generator_spec();
        SemigroupSummary {
            generators: spec.generators,
            cap: spec.cap,
            m: self.m,
            c: self.c,
            frobenius: self.frobenius().map_or(-1, |f| f as i64),
            genus: self.genus,
        }
    }

    /// `S \ {x}` for a right primitive `x`: the child of `S` in the tree.
    pub(crate) fn remove_right_primitive(&self, x: u64) -> NumericalSemigroup {
        debug_assert!(x >= self.c && self.is_primitive(x));
        let m = if x == self.m { self.m + 1 } else { self.m };
        NumericalSemigroup::from_predicate(m, x + 1, |y| y as u64 != x && self.contains(y as u64))
    }

    /// `S ∪ {F}`: the parent of `S` in the tree. `None` for `ℕ`.
    pub fn parent(&self) -> Option<NumericalSemigroup> {
        let f = self.frobenius()?;
        let new_c = (0..f).rev().find(|&x| !self.contains(x)).map_or(0, |g| g + 1);
        if new_c == 0 {
            return Some(NumericalSemigroup::naturals());
        }
        let m = if f < self.m { f } else { self.m };
        Some(NumericalSemigroup::from_predicate(m, new_c, |y| {
            y as u64 == f || self.contains(y as u64)
        }))
    }

    fn check_range(&self, lo: u64, hi: u64) -> Result<(), SemigroupError> {
        if lo > hi || hi > self.window_end() {
            Err(SemigroupError::RangeOutsideWindow {
                lo,
                hi,
                end: self.window_end(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("spec", &self.generator_spec().to_string())
            .field("m", &self.m)
            .field("c", &self.c)
            .field("genus", &self.genus)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = self.generator_spec();
        write!(f, "<")?;
        for (i, a) in spec.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")?;
        if let Some(cap) = spec.cap {
            write!(f, "_{cap}")?;
        }
        Ok(())
    }
}
