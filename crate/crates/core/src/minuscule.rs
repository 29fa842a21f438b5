//! The type-B minuscule lattice Z(n) and the Mixedmiddleswitch puzzle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::digraph::{Color, ColoredDigraph};
use crate::error::{Error, Result};
use crate::lattice::DiamondLattice;
use crate::puzzle::{self, Direction, PathCertificate, Via, Walk};

/// A zero-cushioned subset of `[1, n]`: `n >= x_1 >= ... >= x_n >= 0`, strictly
/// decreasing while nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZTuple(pub Vec<u32>);

impl ZTuple {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n() as u32;
        self.0.first().map_or(true, |&x| x <= n) && self.0.windows(2).all(|w| w[0] > w[1] || (w[0] == 0 && w[1] == 0))
    }

    pub fn validate(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidObject(format!("{} is not a zero-cushioned subset", self)))
        }
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for ZTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for ZTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(ZTuple(parse_csv(s)?))
    }
}

/// A binary sequence `(s_1, ..., s_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySeq(pub Vec<u8>);

impl BinarySeq {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn flipped(&self, i: usize) -> Self {
        let mut b = self.0.clone();
        b[i - 1] ^= 1;
        BinarySeq(b)
    }

    /// Position `i` (1-based) may be switched under the puzzle rules.
    pub fn can_switch(&self, i: usize) -> bool {
        let n = self.n();
        let s = |j: usize| self.0[j - 1];
        if i == 0 || i > n {
            false
        } else if i == n {
            true
        } else if i == 1 {
            s(2) == 1
        } else {
            s(i - 1) != s(i + 1)
        }
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for BinarySeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("bad bit {:?} in {:?}", c, s))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinarySeq)
    }
}

/// Intervals `I_0, ..., I_n` of integers; `lo > hi` means empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFamily(pub Vec<(i64, i64)>);

impl IntervalFamily {
    /// Pairwise disjoint with union `{1, ..., n}`.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut hit = vec![0u32; n + 1];
        for &(lo, hi) in &self.0 {
            for j in lo..=hi {
                if j < 1 || j > n as i64 {
                    return false;
                }
                hit[j as usize] += 1;
            }
        }
        hit[1..].iter().all(|&h| h == 1)
    }
}

/// `I_i = [n+1-x_i, n-x_{i+1}]` with `x_0 = n`, `x_{n+1} = 0`.
pub fn interval_family_of_z(x: &ZTuple) -> IntervalFamily {
    let n = x.n() as i64;
    let at = |i: usize| -> i64 {
        if i == 0 {
            n
        } else if i > x.n() {
            0
        } else {
            x.0[i - 1] as i64
        }
    };
    IntervalFamily((0..=x.n()).map(|i| (n + 1 - at(i), n - at(i + 1))).collect())
}

/// Positions `j` where `y_{j-1} != y_j`, with `y_0 = 0`.
pub fn change_set(y: &BinarySeq) -> Vec<usize> {
    let mut prev = 0;
    let mut out = Vec::new();
    for (k, &b) in y.0.iter().enumerate() {
        if b != prev {
            out.push(k + 1);
        }
        prev = b;
    }
    out
}

/// `J_i = [j_i, j_{i+1} - 1]` from the change set, padded with empty
/// intervals `[n+1, n]`.
pub fn interval_family_of_bits(y: &BinarySeq) -> IntervalFamily {
    let n = y.n() as i64;
    let mut js: Vec<i64> = vec![1];
    js.extend(change_set(y).into_iter().map(|j| j as i64));
    js.push(n + 1);
    let k = js.len() - 2;
    let mut out: Vec<(i64, i64)> = (0..=k).map(|i| (js[i], js[i + 1] - 1)).collect();
    out.resize(y.n() + 1, (n + 1, n));
    IntervalFamily(out)
}

pub fn b_map(x: &ZTuple) -> BinarySeq {
    let mut y = vec![0u8; x.n()];
    for (i, (lo, hi)) in interval_family_of_z(x).0.into_iter().enumerate() {
        for j in lo..=hi {
            y[(j - 1) as usize] = (i % 2) as u8;
        }
    }
    BinarySeq(y)
}

pub fn b_inv(y: &BinarySeq) -> ZTuple {
    let n = y.n();
    let mut x = vec![0u32; n];
    for (i, j) in change_set(y).into_iter().enumerate() {
        x[i] = (n + 1 - j) as u32;
    }
    ZTuple(x)
}

pub fn z_tuples(n: usize) -> Vec<ZTuple> {
    let mut out: Vec<ZTuple> = (0u32..1 << n)
        .map(|mask| {
            let mut v: Vec<u32> = (1..=n as u32).rev().filter(|&b| mask >> (b - 1) & 1 == 1).collect();
            v.resize(n, 0);
            ZTuple(v)
        })
        .collect();
    out.sort();
    out
}

pub fn z_digraph(n: usize) -> Result<ColoredDigraph<ZTuple>> {
    if n < 2 {
        return Err(Error::Unsupported(format!("Z(n) requires n >= 2, got {}", n)));
    }
    let verts = z_tuples(n);
    let mut g = ColoredDigraph::new(verts.iter().cloned())?;
    for (s, x) in verts.iter().enumerate() {
        for q in 0..n {
            let mut y = x.clone();
            y.0[q] += 1;
            if y.is_valid() {
                let color = (n as u32 + 1) - y.0[q];
                let t = g.require(&y)?;
                g.add_edge(s, t, color)?;
            }
        }
    }
    Ok(g)
}

pub fn z_lattice(n: usize) -> Result<DiamondLattice<ZTuple>> {
    DiamondLattice::new(z_digraph(n)?)
}

pub fn binary_seqs(n: usize) -> Vec<BinarySeq> {
    (0u32..1 << n).map(|m| BinarySeq((0..n).map(|k| (m >> (n - 1 - k) & 1) as u8).collect())).collect()
}

pub fn mixedmiddleswitch_digraph(n: usize) -> Result<ColoredDigraph<BinarySeq>> {
    if n < 2 {
        return Err(Error::Unsupported(format!("B(n) requires n >= 2, got {}", n)));
    }
    let verts = binary_seqs(n);
    let mut g = ColoredDigraph::new(verts.iter().cloned())?;
    for (a, s) in verts.iter().enumerate() {
        let b = |j: usize| s.0[j - 1];
        for i in 1..=n {
            let up = if i == 1 {
                (b(1), b(2)) == (0, 1)
            } else if i == n {
                (b(n - 1), b(n)) == (0, 0) || (b(n - 1), b(n)) == (1, 1)
            } else {
                let w = (b(i - 1), b(i), b(i + 1));
                w == (0, 0, 1) || w == (1, 1, 0)
            };
            if up {
                let t = g.require(&s.flipped(i))?;
                g.add_edge(a, t, i as Color)?;
            }
        }
    }
    Ok(g)
}

/// Replays a move sequence under the switching rules; each step must flip
/// the single legal position named by its color.
pub fn replay_switches(start: &BinarySeq, walk: &Walk<BinarySeq>) -> Result<BinarySeq> {
    if walk.sequence.first() != Some(start) {
        return Err(Error::Inconsistent("walk does not start at the given sequence".into()));
    }
    let mut cur = start.clone();
    for (next, &(c, _)) in walk.sequence[1..].iter().zip(&walk.color_trace) {
        let i = c as usize;
        if !cur.can_switch(i) || cur.flipped(i) != *next {
            return Err(Error::Inconsistent(format!("illegal switch at {} from {}", i, cur)));
        }
        cur = next.clone();
    }
    Ok(cur)
}

#[derive(Debug, Clone)]
pub struct SwitchSolution {
    pub distance: u32,
    pub color_counts: BTreeMap<Color, u32>,
    pub path: PathCertificate<BinarySeq>,
}

/// Optimal Mixedmiddleswitch solution via Z(n): join and meet are
/// component-wise max and min, and rank is the coordinate sum.
pub fn solve_mixedmiddleswitch(n: usize, s: &BinarySeq, t: &BinarySeq, via: Via) -> Result<SwitchSolution> {
    for y in [s, t] {
        if y.n() != n {
            return Err(Error::InvalidObject(format!("{} does not have length {}", y, n)));
        }
    }
    let (x, y) = (b_inv(s), b_inv(t));
    let join: u32 = x.0.iter().zip(&y.0).map(|(a, b)| *a.max(b)).sum();
    let meet: u32 = x.0.iter().zip(&y.0).map(|(a, b)| *a.min(b)).sum();
    let via_join = 2 * join - x.rank() - y.rank();
    let via_meet = x.rank() + y.rank() - 2 * meet;
    if via_join != via_meet {
        return Err(Error::Inconsistent("rank formulas disagree".into()));
    }
    let l = z_lattice(n)?;
    let (si, ti) = (l.index_of(&x)?, l.index_of(&y)?);
    let cert = puzzle::shortest_path_idx(&l, si, ti, via)?;
    let color_counts = puzzle::color_counts_idx(&l, si, ti)?;
    let path = cert.map(b_map);
    if path.len() as u32 != via_join || replay_switches(s, &path.walk)? != *t {
        return Err(Error::Inconsistent("certificate does not replay".into()));
    }
    debug_assert!(path.walk.color_trace.iter().all(|&(_, d)| matches!(d, Direction::Up | Direction::Down)));
    Ok(SwitchSolution { distance: via_join, color_counts, path })
}

pub(crate) fn write_csv<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", x)?;
    }
    Ok(())
}

pub(crate) fn parse_csv(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{:?}: {}", p, e)))).collect()
}
