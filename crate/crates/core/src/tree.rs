//! The tree of numerical semigroups, rooted at `ℕ`.
//!
//! The parent of `S ≠ ℕ` is `S ∪ {F(S)}`, so the children of `S` are the
//! sets `S \ {x}` for the right primitives `x ∈ [c, c + m)`, and level `g` of
//! the tree holds exactly the semigroups of genus `g`. Every semigroup has a
//! unique parent, so a depth-first walk visits each one once.
//!
//! The walk keeps, for each node, the decomposition numbers
//! `dec[t] = #{(a, b) : a ≤ b, a + b = t, a, b ∈ S}` on a fixed window of
//! length `3·genus_max + 3`, which covers `[0, c + m)` of every semigroup of
//! genus at most `genus_max`. `t ∈ S` iff `dec[t] > 0`, and a nonzero `t` is
//! primitive iff `dec[t] = 1`. Removing a primitive `x` decrements `dec[t]`
//! for each `t` with `t − x ∈ S`.

use std::fmt::Write as _;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::TreeError;
use crate::invariants::{profile, q_rho, w0_value};
use crate::semigroup::NumericalSemigroup;

/// Enumerations deeper than this are refused unless the limit is raised.
pub const DEFAULT_GENUS_LIMIT: u32 = 40;

/// Depth below which subtrees are handed to the worker pool.
pub const DEFAULT_SPLIT_DEPTH: u32 = 8;

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub split_depth: u32,
    pub genus_limit: u32,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            workers: None,
            split_depth: DEFAULT_SPLIT_DEPTH,
            genus_limit: DEFAULT_GENUS_LIMIT,
        }
    }
}

impl EnumerationConfig {
    pub fn with_workers(workers: usize) -> Self {
        EnumerationConfig {
            workers: Some(workers),
            ..Default::default()
        }
    }
}

/// A semigroup as seen by the tree walk.
#[derive(Clone)]
pub struct TreeNode {
    genus: u32,
    m: u32,
    c: u32,
    dec: Vec<u16>,
}

impl TreeNode {
    fn root(size: usize) -> Self {
        TreeNode {
            genus: 0,
            m: 1,
            c: 1,
            dec: (0..size).map(|t| (t / 2 + 1) as u16).collect(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn conductor(&self) -> u32 {
        self.c
    }

    pub fn contains(&self, x: usize) -> bool {
        self.dec[x] > 0
    }

    fn is_primitive(&self, x: usize) -> bool {
        x > 0 && self.dec[x] == 1
    }

    /// Right primitives in increasing order.
    fn right_primitives(&self) -> impl Iterator<Item = u32> + '_ {
        (self.c..self.c + self.m).filter(move |&x| self.dec[x as usize] == 1)
    }

    fn child(&self, x: u32) -> TreeNode {
        let mut dec = self.dec.clone();
        let x = x as usize;
        for (d, &below) in dec[x..].iter_mut().zip(&self.dec) {
            if below > 0 {
                *d -= 1;
            }
        }
        TreeNode {
            genus: self.genus + 1,
            m: if x as u32 == self.m { self.m + 1 } else { self.m },
            c: x as u32 + 1,
            dec,
        }
    }

    pub fn q(&self) -> u64 {
        q_rho(self.m as u64, self.c as u64).0
    }

    /// `(W, W₀)` computed from the decomposition numbers alone.
    pub fn wilf_pair(&self) -> (i64, i64) {
        let (m, c) = (self.m as u64, self.c as u64);
        let (q, rho) = q_rho(m, c);
        let left = (1..self.c as usize).filter(|&x| self.is_primitive(x)).count() as u64;
        let p_q = self.right_primitives().count() as u64;
        let l_size = c - self.genus as u64;
        let w = ((left + p_q) * l_size) as i64 - c as i64;
        (w, w0_value(left, l_size, q, m - p_q, rho))
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_predicate(self.m as u64, self.c as u64, |x| self.dec[x] > 0)
    }
}

/// Counts of semigroups per `(genus, q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    /// `rows[g][q - 1]`.
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct CensusRowJson<'a> {
    genus: usize,
    counts: &'a [u64],
    total: u64,
}

impl CensusTable {
    pub fn new(genus_max: u32) -> Self {
        CensusTable {
            rows: vec![Vec::new(); genus_max as usize + 1],
        }
    }

    pub fn genus_max(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    fn add(&mut self, genus: u32, q: u64) {
        let row = &mut self.rows[genus as usize];
        let idx = q as usize - 1;
        if row.len() <= idx {
            row.resize(idx + 1, 0);
        }
        row[idx] += 1;
    }

    fn merge(mut self, other: CensusTable) -> CensusTable {
        for (row, orow) in self.rows.iter_mut().zip(other.rows) {
            if row.len() < orow.len() {
                row.resize(orow.len(), 0);
            }
            for (a, b) in row.iter_mut().zip(orow) {
                *a += b;
            }
        }
        self
    }

    pub fn cell(&self, genus: u32, q: u64) -> u64 {
        if q == 0 {
            return 0;
        }
        self.rows
            .get(genus as usize)
            .and_then(|r| r.get(q as usize - 1))
            .copied()
            .unwrap_or(0)
    }

    /// Counts for `q = 1, 2, …` up to the largest `q` seen at this genus.
    pub fn row(&self, genus: u32) -> &[u64] {
        &self.rows[genus as usize]
    }

    pub fn row_total(&self, genus: u32) -> u64 {
        self.rows.get(genus as usize).map_or(0, |r| r.iter().sum())
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    /// `genus,q,count` with one line per cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("genus,q,count\n");
        for (g, row) in self.rows.iter().enumerate() {
            for (i, n) in row.iter().enumerate() {
                writeln!(out, "{g},{},{n}", i + 1).unwrap();
            }
        }
        out
    }

    /// Rows are genera, columns are values of `q`.
    pub fn to_table(&self) -> String {
        let cols = self.rows.iter().map(Vec::len).max().unwrap_or(1).max(1);
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|n| n.to_string().len())
            .max()
            .unwrap_or(1)
            .max(cols.to_string().len());
        let mut out = String::new();
        write!(out, "{:>5} |", "g\\q").unwrap();
        for q in 1..=cols {
            write!(out, " {q:>width$}").unwrap();
        }
        writeln!(out).unwrap();
        writeln!(out, "{}", "-".repeat(7 + cols * (width + 1))).unwrap();
        for (g, row) in self.rows.iter().enumerate() {
            write!(out, "{g:>5} |").unwrap();
            for q in 0..cols {
                match row.get(q) {
                    Some(n) => write!(out, " {n:>width$}").unwrap(),
                    None => write!(out, " {:>width$}", "").unwrap(),
                }
            }
            writeln!(out).unwrap();
        }
        out
    }

    /// Serializable row view: `{genus, counts, total}` per genus.
    pub fn json_rows(&self) -> Vec<impl Serialize + '_> {
        self.rows
            .iter()
            .enumerate()
            .map(|(genus, r)| CensusRowJson {
                genus,
                counts: r,
                total: r.iter().sum(),
            })
            .collect()
    }
}

/// Which constant a scan compares against its threshold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanTarget {
    #[default]
    W0,
    W,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanHit {
    /// Generator spec text reconstructing the semigroup, e.g. `14,22,23:56`.
    pub spec: String,
    pub genus: u64,
    pub m: u64,
    #[serde(rename = "W")]
    pub w: i64,
    #[serde(rename = "W0")]
    pub w0: i64,
    pub q: u64,
    pub rho: u64,
    pub profile: Vec<u64>,
    #[serde(skip)]
    generators: Vec<u64>,
}

impl ScanHit {
    fn from_node(node: &TreeNode) -> ScanHit {
        let s = node.to_semigroup();
        let (w, w0) = node.wilf_pair();
        let (q, rho) = q_rho(s.multiplicity(), s.conductor());
        let spec = s.generator_spec();
        ScanHit {
            spec: spec.to_string(),
            genus: s.genus(),
            m: s.multiplicity(),
            w,
            w0,
            q,
            rho,
            profile: profile(&s),
            generators: spec.generators,
        }
    }
}

fn run_in_pool<R: Send>(cfg: &EnumerationConfig, f: impl FnOnce() -> R + Send) -> Result<R, TreeError> {
    match cfg.workers {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| TreeError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Depth-first fold over every semigroup of genus at most `genus_max`.
///
/// `visit` sees each node exactly once; per-worker accumulators are combined
/// with `merge`, which must be associative and commutative for the result to
/// be scheduling-independent.
pub fn fold_tree<A, I, V, M>(
    genus_max: u32,
    cfg: &EnumerationConfig,
    init: I,
    visit: V,
    merge: M,
) -> Result<A, TreeError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &TreeNode) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    if genus_max > cfg.genus_limit {
        return Err(TreeError::GenusTooLarge {
            requested: genus_max,
            limit: cfg.genus_limit,
        });
    }
    let size = 3 * genus_max as usize + 3;
    let walker = Walker {
        genus_max,
        split_depth: cfg.split_depth,
        init: &init,
        visit: &visit,
        merge: &merge,
    };
    run_in_pool(cfg, || walker.walk(TreeNode::root(size)))
}

struct Walker<'a, I, V, M> {
    genus_max: u32,
    split_depth: u32,
    init: &'a I,
    visit: &'a V,
    merge: &'a M,
}

impl<A, I, V, M> Walker<'_, I, V, M>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &TreeNode) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    fn walk(&self, node: TreeNode) -> A {
        if node.genus < self.split_depth && node.genus < self.genus_max {
            let mut acc = (self.init)();
            (self.visit)(&mut acc, &node);
            let kids: Vec<u32> = node.right_primitives().collect();
            let sub = kids
                .into_par_iter()
                .map(|x| self.walk(node.child(x)))
                .reduce(self.init, self.merge);
            (self.merge)(acc, sub)
        } else {
            let mut acc = (self.init)();
            let mut stack = vec![node];
            while let Some(n) = stack.pop() {
                (self.visit)(&mut acc, &n);
                if n.genus < self.genus_max {
                    // Reverse so children pop in increasing order of the removed primitive.
                    let kids: Vec<u32> = n.right_primitives().collect();
                    stack.extend(kids.into_iter().rev().map(|x| n.child(x)));
                }
            }
            acc
        }
    }
}

/// Census of `q` by genus, without materializing semigroups.
pub fn census(genus_max: u32, cfg: &EnumerationConfig) -> Result<CensusTable, TreeError> {
    fold_tree(
        genus_max,
        cfg,
        || CensusTable::new(genus_max),
        |t, n| t.add(n.genus, n.q()),
        CensusTable::merge,
    )
}

/// Visits every semigroup of genus at most `genus_max` and returns the census.
///
/// The visitor may run concurrently from several workers; the order of calls
/// is unspecified.
pub fn enumerate<F>(genus_max: u32, cfg: &EnumerationConfig, visitor: F) -> Result<CensusTable, TreeError>
where
    F: Fn(&NumericalSemigroup) + Sync + Send,
{
    fold_tree(
        genus_max,
        cfg,
        || CensusTable::new(genus_max),
        |t, n| {
            t.add(n.genus, n.q());
            visitor(&n.to_semigroup());
        },
        CensusTable::merge,
    )
}

/// All semigroups of genus at most `genus_max` whose `W₀` (or `W`) is below
/// `threshold`, sorted by genus, multiplicity, then generators.
pub fn scan(
    genus_max: u32,
    threshold: i64,
    target: ScanTarget,
    cfg: &EnumerationConfig,
) -> Result<Vec<ScanHit>, TreeError> {
    let mut hits = fold_tree(
        genus_max,
        cfg,
        Vec::new,
        |hits: &mut Vec<ScanHit>, n| {
            let (w, w0) = n.wilf_pair();
            let v = match target {
                ScanTarget::W0 => w0,
                ScanTarget::W => w,
            };
            if v < threshold {
                hits.push(ScanHit::from_node(n));
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    hits.sort_by(|a, b| (a.genus, a.m, &a.generators).cmp(&(b.genus, b.m, &b.generators)));
    Ok(hits)
}

pub fn scan_w0(genus_max: u32, threshold: i64, cfg: &EnumerationConfig) -> Result<Vec<ScanHit>, TreeError> {
    scan(genus_max, threshold, ScanTarget::W0, cfg)
}

/// `{S \ {x} : x ∈ P_q(S)}` in increasing order of `x`.
pub fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    s.right_primitives()
        .iter()
        .map(|x| s.remove_right_primitive(x))
        .collect()
}

/// Whether the subtree rooted at `s` is finite, i.e. `gcd(L \ {0}) = 1`.
/// `ℕ` and the semigroups `{0} ∪ [m, ∞)` have infinite subtrees.
pub fn subtree_is_finite(s: &NumericalSemigroup) -> bool {
    if s.is_naturals() {
        return false;
    }
    s.left_primitives().iter().fold(0u64, |acc, x| acc.gcd(&x)) == 1
}
