//! The Catalan lattice `C(n)`, Ming'antu tilings, and Snakes on a Ming'antu Square.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::digraph::{Color, ColoredDigraph};
use crate::error::{Error, Result};
use crate::iso::{find_isomorphism, is_isomorphism};
use crate::lattice::DiamondLattice;
use crate::minuscule::{parse_csv, write_csv};
use crate::puzzle::{self, Direction, PathCertificate, Via, Walk};
use crate::symplectic::MoveKind;

/// `s_1 >= ... >= s_n` with `0 <= s_i <= n+1-i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanTuple(pub Vec<u32>);

impl CatalanTuple {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n();
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.iter().enumerate().all(|(i, &x)| x as usize <= n - i)
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for CatalanTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for CatalanTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(CatalanTuple(parse_csv(s)?))
    }
}

fn decreasing_tuples(n: usize, bound: impl Fn(usize) -> u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cap: u32, bound: &dyn Fn(usize) -> u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=cap.min(bound(i)) {
            cur.push(x);
            go(n, x, bound, cur, out);
            cur.pop();
        }
    }
    go(n, u32::MAX, &bound, &mut cur, &mut out);
    out.sort();
    out
}

pub fn catalan_tuples(n: usize) -> Vec<CatalanTuple> {
    decreasing_tuples(n, |i| (n - i) as u32).into_iter().map(CatalanTuple).collect()
}

/// `C(n)`: raising `s_q` to `t_q` is colored `n + q - t_q`.
pub fn c_lattice(n: usize) -> Result<DiamondLattice<CatalanTuple>> {
    if n == 0 {
        return Err(Error::InvalidObject("n must be positive".into()));
    }
    let verts = catalan_tuples(n);
    let mut g = ColoredDigraph::new(verts.iter().cloned())?;
    for (s, x) in verts.iter().enumerate() {
        for q in 0..n {
            let mut y = x.clone();
            y.0[q] += 1;
            if y.is_valid() {
                let t = g.require(&y)?;
                g.add_edge(s, t, (n + q + 1) as Color - y.0[q])?;
            }
        }
    }
    DiamondLattice::new(g)
}

/// `(row, column)`, 1-based, matrix orientation.
pub type Square = (usize, usize);

/// Row lengths of an upper-left justified tiling of the `n × n` board.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MingantuTiling(pub Vec<u32>);

impl MingantuTiling {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Vec<u32> {
        (1..=self.n() as u32).map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32).collect()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n();
        if self.0.windows(2).any(|w| w[0] < w[1]) || self.0.first().is_some_and(|&x| x as usize > n) {
            return false;
        }
        let conj = self.conjugate();
        (1..=n).all(|i| (self.0[i - 1] as usize) < i || conj[i - 1] <= self.0[i - 1])
    }

    pub fn validate(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidObject(format!("{} is not a Ming'antu tiling", self)))
        }
    }

    pub fn cells(&self) -> BTreeSet<Square> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len as usize).map(move |c| (r + 1, c))).collect()
    }

    /// The tiling whose tiled squares are exactly `cells`, if any.
    pub fn from_cells(n: usize, cells: &BTreeSet<Square>) -> Option<Self> {
        let mut rows = vec![0u32; n];
        for &(r, _) in cells {
            rows[r - 1] += 1;
        }
        let t = MingantuTiling(rows);
        (t.cells() == *cells && t.is_valid()).then_some(t)
    }

    /// `#` for tiled squares, `.` for blank ones.
    pub fn render(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        for &len in &self.0 {
            let row: Vec<&str> = (1..=n).map(|c| if c <= len as usize { "#" } else { "." }).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }
}

impl fmt::Display for MingantuTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for MingantuTiling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(MingantuTiling(parse_csv(s)?))
    }
}

pub fn enumerate_tilings(n: usize) -> Vec<MingantuTiling> {
    decreasing_tuples(n, |_| n as u32).into_iter().map(MingantuTiling).filter(MingantuTiling::is_valid).collect()
}

/// A centered southwesterly snake, squares in path order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Snake(pub Vec<Square>);

impl Snake {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid(&self, n: usize) -> bool {
        let m = self.len();
        m > 0
            && self.0.iter().all(|&(r, c)| (1..=n).contains(&r) && (1..=n).contains(&c))
            && self
                .0
                .windows(2)
                .all(|w| (w[1].0 == w[0].0 + 1 && w[1].1 == w[0].1) || (w[1].0 == w[0].0 && w[1].1 + 1 == w[0].1))
            && {
                let (r, c) = self.0[(m + 1) / 2 - 1];
                r == c
            }
    }

    /// Recover the path order of a set of squares, if it is a snake.
    pub fn from_squares(n: usize, squares: &BTreeSet<Square>) -> Option<Self> {
        let mut v: Vec<Square> = squares.iter().copied().collect();
        v.sort_by_key(|&(r, c)| (r, std::cmp::Reverse(c)));
        let s = Snake(v);
        s.is_valid(n).then_some(s)
    }
}

impl fmt::Display for Snake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (r, c)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({},{})", r, c)?;
        }
        Ok(())
    }
}

/// Every centered southwesterly snake on the `n × n` board.
pub fn snakes(n: usize) -> Vec<Snake> {
    let mut out = Vec::new();
    for m in 1..2 * n {
        let before = (m + 1) / 2 - 1;
        let after = m - 1 - before;
        for d in 1..=n {
            for pre in 0..1u32 << before {
                for post in 0..1u32 << after {
                    let (mut r, mut c) = (d as i64, d as i64);
                    let mut back = Vec::with_capacity(before);
                    for b in 0..before {
                        if pre >> b & 1 == 1 {
                            r -= 1
                        } else {
                            c += 1
                        }
                        back.push((r, c));
                    }
                    let (mut r, mut c) = (d as i64, d as i64);
                    let mut fwd = Vec::with_capacity(after);
                    for b in 0..after {
                        if post >> b & 1 == 1 {
                            r += 1
                        } else {
                            c -= 1
                        }
                        fwd.push((r, c));
                    }
                    back.reverse();
                    let seq: Vec<(i64, i64)> = back.into_iter().chain([(d as i64, d as i64)]).chain(fwd).collect();
                    if seq.iter().all(|&(r, c)| 1 <= r && r <= n as i64 && 1 <= c && c <= n as i64) {
                        out.push(Snake(seq.into_iter().map(|(r, c)| (r as usize, c as usize)).collect()));
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeMove {
    pub snake: Snake,
    pub kind: MoveKind,
    pub result: MingantuTiling,
}

impl SnakeMove {
    /// Orientation in `M(n)`: even additions and odd removals point up.
    pub fn direction(&self) -> Direction {
        match (self.kind, self.snake.len() % 2 == 0) {
            (MoveKind::Add, true) | (MoveKind::Remove, false) => Direction::Up,
            _ => Direction::Down,
        }
    }
}

fn moves_with(n: usize, t: &MingantuTiling, all: &[Snake]) -> Vec<SnakeMove> {
    let cells = t.cells();
    let mut out = Vec::new();
    for s in all {
        let set: BTreeSet<Square> = s.0.iter().copied().collect();
        let (kind, next) = if set.is_disjoint(&cells) {
            (MoveKind::Add, cells.union(&set).copied().collect())
        } else if set.is_subset(&cells) {
            (MoveKind::Remove, cells.difference(&set).copied().collect())
        } else {
            continue;
        };
        if let Some(result) = MingantuTiling::from_cells(n, &next) {
            out.push(SnakeMove { snake: s.clone(), kind, result });
        }
    }
    out
}

/// Every legal snake addition or removal on `t`.
pub fn legal_snake_moves(n: usize, t: &MingantuTiling) -> Result<Vec<SnakeMove>> {
    if t.n() != n || !t.is_valid() {
        return Err(Error::InvalidObject(format!("{} is not a Ming'antu tiling of size {}", t, n)));
    }
    Ok(moves_with(n, t, &snakes(n)))
}

/// `M(n)`: `s →ⁱ t` when `t` adds an even snake of length `i` to `s` or
/// removes an odd one.
pub fn ming_digraph(n: usize) -> Result<ColoredDigraph<MingantuTiling>> {
    if n == 0 {
        return Err(Error::InvalidObject("n must be positive".into()));
    }
    let all = snakes(n);
    let verts = enumerate_tilings(n);
    let mut g = ColoredDigraph::new(verts.iter().cloned())?;
    for (s, t) in verts.iter().enumerate() {
        for m in moves_with(n, t, &all) {
            if m.direction() == Direction::Up {
                let r = g.require(&m.result)?;
                g.add_edge(s, r, m.snake.len() as Color)?;
            }
        }
    }
    Ok(g)
}

const CACHED_TABLES: [&str; 5] = [
    include_str!("../data/ming_iso_1.txt"),
    include_str!("../data/ming_iso_2.txt"),
    include_str!("../data/ming_iso_3.txt"),
    include_str!("../data/ming_iso_4.txt"),
    include_str!("../data/ming_iso_5.txt"),
];

/// The shipped `tuple<TAB>tiling` table for `n`, if any.
pub fn cached_table(n: usize) -> Option<&'static str> {
    n.checked_sub(1).and_then(|i| CACHED_TABLES.get(i)).copied().filter(|t| !t.trim().is_empty())
}

/// `C(n)`, `M(n)`, and an isomorphism between them.
#[derive(Debug, Clone)]
pub struct MingIsomorphism {
    pub catalan: DiamondLattice<CatalanTuple>,
    pub ming: ColoredDigraph<MingantuTiling>,
    /// `forward[i]` is the index in `ming` of `catalan.vertex(i)`.
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl MingIsomorphism {
    pub fn to_tiling(&self, x: &CatalanTuple) -> Result<&MingantuTiling> {
        Ok(self.ming.vertex(self.forward[self.catalan.index_of(x)?]))
    }

    pub fn to_tuple(&self, t: &MingantuTiling) -> Result<&CatalanTuple> {
        let i = self.ming.require(t)?;
        Ok(self.catalan.vertex(self.backward[i]))
    }

    /// One `tuple<TAB>tiling` line per vertex, in tuple order.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (i, x) in self.catalan.diagram().vertices().iter().enumerate() {
            writeln!(out, "{}\t{}", x, self.ming.vertex(self.forward[i])).unwrap();
        }
        out
    }

    fn from_parts(
        catalan: DiamondLattice<CatalanTuple>,
        ming: ColoredDigraph<MingantuTiling>,
        forward: Vec<usize>,
    ) -> Self {
        let mut backward = vec![0; forward.len()];
        for (i, &j) in forward.iter().enumerate() {
            backward[j] = i;
        }
        Self { catalan, ming, forward, backward }
    }
}

fn parse_table(text: &str, c: &DiamondLattice<CatalanTuple>, m: &ColoredDigraph<MingantuTiling>) -> Result<Vec<usize>> {
    let mut forward = vec![usize::MAX; c.len()];
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let (x, t) = line.split_once('\t').ok_or_else(|| Error::Parse(format!("bad table line {:?}", line)))?;
        let i = c.index_of(&x.parse()?)?;
        forward[i] = m.require(&t.parse()?)?;
    }
    Ok(forward)
}

/// Search for `C(n) ≅ M(n)` without consulting the cache.
pub fn search_isomorphism(n: usize) -> Result<MingIsomorphism> {
    let catalan = c_lattice(n)?;
    let ming = ming_digraph(n)?;
    let forward = find_isomorphism(catalan.diagram(), &ming)?;
    Ok(MingIsomorphism::from_parts(catalan, ming, forward))
}

/// The cached table for `n <= 5` after re-checking it, else a fresh search.
pub fn ming_isomorphism(n: usize) -> Result<MingIsomorphism> {
    if let Some(text) = cached_table(n) {
        let catalan = c_lattice(n)?;
        let ming = ming_digraph(n)?;
        if let Ok(forward) = parse_table(text, &catalan, &ming) {
            if is_isomorphism(catalan.diagram(), &ming, &forward) {
                return Ok(MingIsomorphism::from_parts(catalan, ming, forward));
            }
        }
    }
    search_isomorphism(n)
}

/// Re-derive each move of `walk` from snake semantics, starting at `start`.
pub fn replay_snakes(n: usize, start: &MingantuTiling, walk: &Walk<MingantuTiling>) -> Result<Vec<SnakeMove>> {
    if walk.sequence.first() != Some(start) {
        return Err(Error::Inconsistent("walk does not start at the given tiling".into()));
    }
    let all = snakes(n);
    let mut out = Vec::with_capacity(walk.len());
    for (pair, &(color, dir)) in walk.sequence.windows(2).zip(&walk.color_trace) {
        let mv = moves_with(n, &pair[0], &all)
            .into_iter()
            .find(|m| m.result == pair[1])
            .ok_or_else(|| Error::Inconsistent(format!("no snake move {} -> {}", pair[0], pair[1])))?;
        if mv.snake.len() as Color != color || mv.direction() != dir {
            return Err(Error::Inconsistent(format!("move {} -> {} is mislabelled", pair[0], pair[1])));
        }
        out.push(mv);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct SnakeSolution {
    pub distance: u32,
    pub color_counts: BTreeMap<Color, u32>,
    pub path: PathCertificate<MingantuTiling>,
    pub moves: Vec<SnakeMove>,
}

/// Optimal Snakes solution pulled back to `C(n)`, where join and meet are
/// component-wise and rank is the coordinate sum.
pub fn solve_snakes(n: usize, s: &MingantuTiling, t: &MingantuTiling, via: Via) -> Result<SnakeSolution> {
    for y in [s, t] {
        if y.n() != n || !y.is_valid() {
            return Err(Error::InvalidObject(format!("{} is not a Ming'antu tiling of size {}", y, n)));
        }
    }
    solve_snakes_with(&ming_isomorphism(n)?, s, t, via)
}

/// As [`solve_snakes`], reusing an already built isomorphism.
pub fn solve_snakes_with(
    iso: &MingIsomorphism,
    s: &MingantuTiling,
    t: &MingantuTiling,
    via: Via,
) -> Result<SnakeSolution> {
    let n = iso.catalan.vertex(0).n();
    let (x, y) = (iso.to_tuple(s)?.clone(), iso.to_tuple(t)?.clone());
    let join: u32 = x.0.iter().zip(&y.0).map(|(a, b)| *a.max(b)).sum();
    let meet: u32 = x.0.iter().zip(&y.0).map(|(a, b)| *a.min(b)).sum();
    let distance = 2 * join - x.rank() - y.rank();
    if distance != x.rank() + y.rank() - 2 * meet {
        return Err(Error::Inconsistent("rank formulas disagree".into()));
    }
    let l = &iso.catalan;
    let (si, ti) = (l.index_of(&x)?, l.index_of(&y)?);
    let cert = puzzle::shortest_path_idx(l, si, ti, via)?;
    let color_counts = puzzle::color_counts_idx(l, si, ti)?;
    let path = cert.map(|v| iso.to_tiling(v).expect("vertex of C(n)").clone());
    let moves = replay_snakes(n, s, &path.walk)?;
    if moves.len() as u32 != distance || moves.last().map_or(s, |m| &m.result) != t {
        return Err(Error::Inconsistent("certificate does not replay".into()));
    }
    Ok(SnakeSolution { distance, color_counts, path, moves })
}
