//! Symplectic columnar tableaux, their partition and tally codings, the
//! domino puzzles, and the lattices `L_A`, `L_C^KN`, `L_C^DeC`.

mod admissible;
mod board;
mod solve;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::minuscule::{parse_csv, write_csv};
use crate::poly::WeightVector;

pub use admissible::{
    a_lattice, conjugate, dec_admissible, dec_admissible_tally, dec_lattice, durfee, is_ballot_tally, kn_admissible,
    kn_admissible_tally, kn_lattice, l_side_tally, recolor_sigma, sigma, tilde_c_lattice,
};
pub use board::{domino_digraph, legal_moves, Board, BoardKind, DominoMove, MoveKind, Square};
pub use solve::{board_lattice, replay_dominoes, solve_domino, DominoSolution};

/// A weakly decreasing tuple of nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Fits the `k × (2n-k)` box.
    pub fn fits(&self, k: usize, n: usize) -> bool {
        self.k() == k && self.is_weakly_decreasing() && self.0.first().map_or(true, |&p| p as usize <= 2 * n - k)
    }

    /// `τ_i <= 2n-k-i+1`.
    pub fn is_ballot(&self, n: usize) -> bool {
        let k = self.k();
        (1..=k).all(|i| self.part(i) as usize + i <= 2 * n - k + 1)
    }

    /// `τ_i >= k-i`.
    pub fn is_staircase(&self) -> bool {
        let k = self.k();
        (1..=k).all(|i| self.part(i) as usize + i >= k)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Partition(parse_csv(s)?))
    }
}

/// All partitions in the `k × w` box, sorted.
pub fn partitions_in_box(k: usize, w: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == k {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in 0..=max {
            cur.push(p);
            rec(k, p, cur, out);
            cur.pop();
        }
    }
    rec(k, w as u32, &mut cur, &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauVariant {
    King,
    Seminarii,
}

/// A strictly increasing column `T_1 < ... < T_k` with entries in `[1, 2n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnarTableau {
    pub entries: Vec<u32>,
    pub n: usize,
}

impl ColumnarTableau {
    pub fn new(entries: Vec<u32>, n: usize) -> Result<Self> {
        let t = Self { entries, n };
        let ok = t.entries.windows(2).all(|w| w[0] < w[1])
            && t.entries.iter().all(|&e| e >= 1 && e as usize <= 2 * n)
            && t.k() <= n;
        if ok {
            Ok(t)
        } else {
            Err(Error::InvalidObject(format!("{} is not an increasing column in [1,{}]", t, 2 * n)))
        }
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    fn at(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    /// `T_i <= 2(n-k+i)`.
    pub fn is_king(&self) -> bool {
        let (n, k) = (self.n, self.k());
        (1..=k).all(|i| self.at(i) <= 2 * (n - k + i))
    }

    /// `T_i >= 2i-1`.
    pub fn is_seminarii(&self) -> bool {
        (1..=self.k()).all(|i| self.at(i) + 1 >= 2 * i)
    }

    pub fn is_variant(&self, v: TableauVariant) -> bool {
        match v {
            TableauVariant::King => self.is_king(),
            TableauVariant::Seminarii => self.is_seminarii(),
        }
    }

    fn count(&self, m: usize) -> i64 {
        self.entries.contains(&(m as u32)) as i64
    }
}

impl fmt::Display for ColumnarTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_csv(f, &self.entries)?;
        f.write_str("]")
    }
}

/// Every tableau of the variant, lexicographically sorted.
pub fn enumerate_tableaux(variant: TableauVariant, k: usize, n: usize) -> Vec<ColumnarTableau> {
    (1..=2 * n as u32)
        .combinations(k)
        .map(|entries| ColumnarTableau { entries, n })
        .filter(|t| t.is_variant(variant))
        .collect()
}

/// `τ_i = T_{k+1-i} - (k+1-i)`.
pub fn tab_to_part(t: &ColumnarTableau) -> Partition {
    let k = t.k();
    Partition((1..=k).map(|i| t.entries[k - i] - (k + 1 - i) as u32).collect())
}

/// `T_j = j + τ_{k+1-j}`.
pub fn part_to_tab(p: &Partition, n: usize) -> Result<ColumnarTableau> {
    let k = p.k();
    if !p.fits(k, n) {
        return Err(Error::InvalidObject(format!("{} is not a {}x{} partition", p, k, 2 * n - k)));
    }
    ColumnarTableau::new((1..=k).map(|j| j as u32 + p.0[k - j]).collect(), n)
}

/// `K_i = #_{2i-1} - #_{2i} - #_{2i+1} + #_{2i+2}` for `i < n`, `K_n = #_{2n-1} - #_{2n}`.
pub fn wt_c(t: &ColumnarTableau) -> WeightVector {
    let n = t.n;
    WeightVector(
        (1..=n)
            .map(|i| {
                let base = t.count(2 * i - 1) - t.count(2 * i);
                if i < n {
                    base - t.count(2 * i + 1) + t.count(2 * i + 2)
                } else {
                    base
                }
            })
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TallyLayout {
    Original,
    Reordered,
}

/// A length-`2n` 0/1 sequence with `k` ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TallyDiagram {
    pub bits: Vec<u8>,
    pub layout: TallyLayout,
}

impl TallyDiagram {
    pub fn n(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// `t_i` with 1-based index.
    pub fn at(&self, i: usize) -> u32 {
        self.bits[i - 1] as u32
    }

    /// Positions of the ones, as an increasing column.
    pub fn to_tableau(&self) -> ColumnarTableau {
        let entries = (1..=self.bits.len() as u32).filter(|&i| self.bits[i as usize - 1] == 1).collect();
        ColumnarTableau { entries, n: self.n() }
    }
}

impl fmt::Display for TallyDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

pub fn to_tally(t: &ColumnarTableau) -> TallyDiagram {
    let mut bits = vec![0u8; 2 * t.n];
    for &e in &t.entries {
        bits[e as usize - 1] = 1;
    }
    TallyDiagram { bits, layout: TallyLayout::Original }
}

/// Reading order of the reordered tally: `2i-1` for `i <= n`, else `4n+2-2i`.
pub fn reading_order(n: usize, i: usize) -> usize {
    if i <= n {
        2 * i - 1
    } else {
        4 * n + 2 - 2 * i
    }
}

/// `t'_i = t_{π(i)}`.
pub fn reorder_tally(t: &TallyDiagram) -> TallyDiagram {
    let n = t.n();
    TallyDiagram {
        bits: (1..=2 * n).map(|i| t.bits[reading_order(n, i) - 1]).collect(),
        layout: TallyLayout::Reordered,
    }
}

pub fn inverse_reorder_tally(t: &TallyDiagram) -> TallyDiagram {
    let n = t.n();
    let mut bits = vec![0u8; 2 * n];
    for i in 1..=2 * n {
        bits[reading_order(n, i) - 1] = t.bits[i - 1];
    }
    TallyDiagram { bits, layout: TallyLayout::Original }
}

/// The bijection from domino-puzzle partitions to `L_A` partitions.
pub fn l_map(p: &Partition, k: usize, n: usize) -> Result<Partition> {
    if !p.fits(k, n) {
        return Err(Error::InvalidObject(format!("{} is not a {}x{} partition", p, k, 2 * n - k)));
    }
    let t = part_to_tab(p, n)?;
    let tp = reorder_tally(&to_tally(&t)).to_tableau();
    Ok(Partition((1..=k).map(|j| (2 * n - k + j) as u32 - tp.entries[j - 1]).collect()))
}

pub fn l_inv(p: &Partition, k: usize, n: usize) -> Result<Partition> {
    if !p.fits(k, n) {
        return Err(Error::InvalidObject(format!("{} is not a {}x{} partition", p, k, 2 * n - k)));
    }
    let tp = ColumnarTableau { entries: (1..=k).map(|j| (2 * n - k + j) as u32 - p.0[j - 1]).collect(), n };
    let t = inverse_reorder_tally(&to_tally(&tp)).to_tableau();
    Ok(tab_to_part(&t))
}
