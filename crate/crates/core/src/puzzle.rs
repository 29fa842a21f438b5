//! Optimal move counts and shortest-path certificates on diamond-colored lattices.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::digraph::{Color, Vertex};
use crate::error::{Error, Result};
use crate::lattice::DiamondLattice;
use crate::poset::OrderIdeal;

pub const DEFAULT_GEODESIC_CAP: u32 = 12;

/// Lattices up to this size have God's number cross-checked over all pairs.
pub const GODS_CHECK_LIMIT: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    Join,
    Meet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Mountain,
    Valley,
}

/// Both evaluations of the distance formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distance {
    pub via_join: u32,
    pub via_meet: u32,
}

impl Distance {
    pub fn value(&self) -> u32 {
        self.via_join
    }
}

pub fn lattice_distance_idx<V: Vertex>(l: &DiamondLattice<V>, s: usize, t: usize) -> Result<Distance> {
    let (rs, rt) = (l.rank(s) as i64, l.rank(t) as i64);
    let rj = l.rank(l.join_idx(s, t)) as i64;
    let rm = l.rank(l.meet_idx(s, t)) as i64;
    let via_join = 2 * rj - rs - rt;
    let via_meet = rs + rt - 2 * rm;
    if via_join != via_meet || via_join < 0 || via_join > l.length() as i64 {
        return Err(Error::Inconsistent(format!("join formula gives {}, meet formula gives {}", via_join, via_meet)));
    }
    Ok(Distance { via_join: via_join as u32, via_meet: via_meet as u32 })
}

/// Minimum number of moves between `s` and `t`.
pub fn lattice_distance<V: Vertex>(l: &DiamondLattice<V>, s: &V, t: &V) -> Result<u32> {
    Ok(lattice_distance_idx(l, l.index_of(s)?, l.index_of(t)?)?.value())
}

fn ideals<'a, V: Vertex>(l: &'a DiamondLattice<V>, s: usize, t: usize) -> Result<(&'a OrderIdeal, &'a OrderIdeal)> {
    match (l.ideal(s), l.ideal(t)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::NotDistributive),
    }
}

/// Number of color-`i` edges on every shortest path, per color.
pub fn color_counts_idx<V: Vertex>(l: &DiamondLattice<V>, s: usize, t: usize) -> Result<BTreeMap<Color, u32>> {
    let (x, y) = ideals(l, s, t)?;
    let poset = l.join_irreducibles()?;
    let tally = |a: &OrderIdeal, b: &OrderIdeal| {
        let mut out: BTreeMap<Color, u32> = BTreeMap::new();
        for k in a.members().filter(|&k| !b.contains(k)) {
            *out.entry(poset.color(k)).or_default() += 1;
        }
        out
    };
    let merge = |mut a: BTreeMap<Color, u32>, b: BTreeMap<Color, u32>| {
        for (c, n) in b {
            *a.entry(c).or_default() += n;
        }
        a
    };
    let u = x.union(y);
    let m = x.intersection(y);
    let via_join = merge(tally(&u, x), tally(&u, y));
    let via_meet = merge(tally(x, &m), tally(y, &m));
    if via_join != via_meet {
        return Err(Error::Inconsistent("join and meet color counts differ".into()));
    }
    Ok(via_join)
}

pub fn color_count_min<V: Vertex>(l: &DiamondLattice<V>, s: &V, t: &V, color: Color) -> Result<u32> {
    let counts = color_counts_idx(l, l.index_of(s)?, l.index_of(t)?)?;
    Ok(counts.get(&color).copied().unwrap_or(0))
}

/// A walk in the undirected diagram with the color and direction of each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk<V> {
    pub sequence: Vec<V>,
    pub color_trace: Vec<(Color, Direction)>,
}

impl<V: Vertex> Walk<V> {
    pub fn len(&self) -> usize {
        self.color_trace.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color_trace.is_empty()
    }

    pub fn color_counts(&self) -> BTreeMap<Color, u32> {
        let mut out = BTreeMap::new();
        for &(c, _) in &self.color_trace {
            *out.entry(c).or_default() += 1;
        }
        out
    }

    pub fn map<W: Vertex>(&self, f: impl Fn(&V) -> W) -> Walk<W> {
        Walk { sequence: self.sequence.iter().map(f).collect(), color_trace: self.color_trace.clone() }
    }

    /// Every step follows an edge of `l` with the recorded color and direction.
    pub fn validate(&self, l: &DiamondLattice<V>) -> Result<()> {
        if self.sequence.len() != self.color_trace.len() + 1 {
            return Err(Error::Inconsistent("walk length mismatch".into()));
        }
        let g = l.diagram();
        for (w, &(c, dir)) in self.sequence.windows(2).zip(&self.color_trace) {
            let (a, b) = (g.require(&w[0])?, g.require(&w[1])?);
            let found = match dir {
                Direction::Up => g.edge_color(a, b),
                Direction::Down => g.edge_color(b, a),
            };
            if found != Some(c) {
                return Err(Error::Inconsistent(format!("no color-{} step {} to {}", c, w[0], w[1])));
            }
        }
        Ok(())
    }

    fn write_steps(&self, out: &mut String) {
        for (w, &(c, dir)) in self.sequence.windows(2).zip(&self.color_trace) {
            match dir {
                Direction::Up => writeln!(out, "{} --{}--> {}", w[0], c, w[1]).unwrap(),
                Direction::Down => writeln!(out, "{} <--{}-- {}", w[0], c, w[1]).unwrap(),
            }
        }
    }
}

/// A mountain path through `s ∨ t` or a valley path through `s ∧ t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCertificate<V> {
    pub walk: Walk<V>,
    pub pivot: V,
    pub orientation: Orientation,
}

impl<V: Vertex> PathCertificate<V> {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Checks each step against `l` and the rise-then-fall (or fall-then-rise)
    /// shape through the pivot.
    pub fn validate(&self, l: &DiamondLattice<V>) -> Result<()> {
        self.walk.validate(l)?;
        let (first, second) = match self.orientation {
            Orientation::Mountain => (Direction::Up, Direction::Down),
            Orientation::Valley => (Direction::Down, Direction::Up),
        };
        let turn = self.walk.color_trace.iter().take_while(|&&(_, d)| d == first).count();
        if self.walk.color_trace[turn..].iter().any(|&(_, d)| d != second) {
            return Err(Error::Inconsistent("path changes direction twice".into()));
        }
        if self.walk.sequence[turn] != self.pivot {
            return Err(Error::Inconsistent("path turns away from its pivot".into()));
        }
        Ok(())
    }

    pub fn map<W: Vertex>(&self, f: impl Fn(&V) -> W) -> PathCertificate<W> {
        PathCertificate { walk: self.walk.map(&f), pivot: f(&self.pivot), orientation: self.orientation }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "distance {}", self.len()).unwrap();
        let label = match self.orientation {
            Orientation::Mountain => "apex",
            Orientation::Valley => "nadir",
        };
        writeln!(out, "{} {}", label, self.pivot).unwrap();
        self.walk.write_steps(&mut out);
        out
    }
}

impl<V: Vertex> fmt::Display for PathCertificate<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Saturated chain from `x` up to `y` (with `x <= y`), adding at each step the
/// smallest addable join-irreducible of `y \ x`.
fn climb<V: Vertex>(l: &DiamondLattice<V>, x: usize, y: usize) -> Result<Vec<usize>> {
    let (mut cur, target) = (l.ideal(x).ok_or(Error::NotDistributive)?.clone(), l.ideal(y).unwrap());
    let poset = l.join_irreducibles()?;
    let mut chain = vec![x];
    while cur != *target {
        let k = target
            .members()
            .find(|&k| !cur.contains(k) && poset.lower_covers(k).iter().all(|&j| cur.contains(j)))
            .ok_or_else(|| Error::Inconsistent("no addable element".into()))?;
        cur = cur.with(k);
        chain.push(l.vertex_of_ideal(&cur).ok_or_else(|| Error::Inconsistent("ideal has no vertex".into()))?);
    }
    Ok(chain)
}

fn walk_of<V: Vertex>(l: &DiamondLattice<V>, idx: &[usize]) -> Walk<V> {
    let g = l.diagram();
    let mut trace = Vec::with_capacity(idx.len().saturating_sub(1));
    for w in idx.windows(2) {
        match g.edge_color(w[0], w[1]) {
            Some(c) => trace.push((c, Direction::Up)),
            None => trace.push((g.edge_color(w[1], w[0]).expect("consecutive chain vertices"), Direction::Down)),
        }
    }
    Walk { sequence: idx.iter().map(|&i| l.vertex(i).clone()).collect(), color_trace: trace }
}

pub fn shortest_path_idx<V: Vertex>(l: &DiamondLattice<V>, s: usize, t: usize, via: Via) -> Result<PathCertificate<V>> {
    if !l.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let (pivot, idx, orientation) = match via {
        Via::Join => {
            let u = l.join_idx(s, t);
            let mut up = climb(l, s, u)?;
            let mut down = climb(l, t, u)?;
            down.pop();
            down.reverse();
            up.extend(down);
            (u, up, Orientation::Mountain)
        }
        Via::Meet => {
            let m = l.meet_idx(s, t);
            let mut down = climb(l, m, s)?;
            down.reverse();
            let up = climb(l, m, t)?;
            down.extend(up.into_iter().skip(1));
            (m, down, Orientation::Valley)
        }
    };
    let cert = PathCertificate { walk: walk_of(l, &idx), pivot: l.vertex(pivot).clone(), orientation };
    let d = lattice_distance_idx(l, s, t)?.value() as usize;
    if cert.len() != d {
        return Err(Error::Inconsistent(format!("path of length {} for distance {}", cert.len(), d)));
    }
    Ok(cert)
}

pub fn shortest_path<V: Vertex>(l: &DiamondLattice<V>, s: &V, t: &V, via: Via) -> Result<PathCertificate<V>> {
    shortest_path_idx(l, l.index_of(s)?, l.index_of(t)?, via)
}

/// The length of the lattice; for small lattices also confirmed as the
/// largest pairwise distance.
pub fn gods_number<V: Vertex>(l: &DiamondLattice<V>) -> Result<u32> {
    if l.len() <= GODS_CHECK_LIMIT {
        let mut best = 0;
        for s in 0..l.len() {
            for t in s + 1..l.len() {
                best = best.max(lattice_distance_idx(l, s, t)?.value());
            }
        }
        if best != l.length() {
            return Err(Error::Inconsistent(format!("max distance {} but length {}", best, l.length())));
        }
    }
    Ok(l.length())
}

/// Every geodesic between `s` and `t` in the undirected diagram.
pub fn all_shortest_paths_idx<V: Vertex>(l: &DiamondLattice<V>, s: usize, t: usize, cap: u32) -> Result<Vec<Walk<V>>> {
    let g = l.diagram();
    let dist = g.undirected_distances(t);
    let d = dist[s].ok_or(Error::Unreachable)?;
    if d > cap {
        return Err(Error::CapExceeded { what: "geodesic length", cap: cap as usize });
    }
    let mut out = Vec::new();
    let mut stack = vec![s];
    fn rec<V: Vertex>(
        l: &DiamondLattice<V>,
        dist: &[Option<u32>],
        t: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Walk<V>>,
    ) {
        let u = *stack.last().unwrap();
        if u == t {
            out.push(walk_of(l, stack));
            return;
        }
        let du = dist[u].unwrap();
        let mut next: Vec<usize> =
            l.diagram().neighbors(u).filter(|&(w, _, _)| dist[w] == Some(du - 1)).map(|(w, _, _)| w).collect();
        next.sort_unstable();
        for w in next {
            stack.push(w);
            rec(l, dist, t, stack, out);
            stack.pop();
        }
    }
    rec(l, &dist, t, &mut stack, &mut out);
    Ok(out)
}

pub fn all_shortest_paths<V: Vertex>(l: &DiamondLattice<V>, s: &V, t: &V, cap: u32) -> Result<Vec<Walk<V>>> {
    all_shortest_paths_idx(l, l.index_of(s)?, l.index_of(t)?, cap)
}
