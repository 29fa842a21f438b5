//! Diamond-colored modular and distributive lattices given by their order diagrams.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::digraph::{Color, ColoredDigraph, Vertex};
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, VertexColoredPoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    Modular,
    Distributive,
}

/// Rank of every vertex of a weakly connected acyclic diagram.
///
/// Ranks are propagated along edges in both directions and shifted so the
/// least rank is 0; every edge must then raise rank by exactly one.
pub fn rank_function<V: Vertex>(g: &ColoredDigraph<V>) -> Result<Vec<u32>> {
    if g.is_empty() {
        return Ok(Vec::new());
    }
    if g.topological_order().is_none() {
        return Err(Error::NotAPoset("directed cycle".into()));
    }
    if !g.is_weakly_connected() {
        return Err(Error::NotConnected);
    }
    let all: Vec<usize> = (0..g.len()).collect();
    grade(g, &all).ok_or_else(|| Error::NotRanked("an edge does not raise rank by one".into()))
}

/// Grades the weak component `comp` of `g`, returning ranks indexed like `comp`'s
/// parent graph positions (entries outside `comp` are 0). `None` if not graded.
pub(crate) fn grade<V: Vertex>(g: &ColoredDigraph<V>, comp: &[usize]) -> Option<Vec<u32>> {
    let mut level: Vec<Option<i64>> = vec![None; g.len()];
    let mut queue = VecDeque::new();
    let start = *comp.first()?;
    level[start] = Some(0);
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        let lu = level[u].unwrap();
        for (w, _, up) in g.neighbors(u) {
            let want = if up { lu + 1 } else { lu - 1 };
            match level[w] {
                None => {
                    level[w] = Some(want);
                    queue.push_back(w);
                }
                Some(lw) if lw != want => return None,
                Some(_) => {}
            }
        }
    }
    let min = comp.iter().map(|&i| level[i].unwrap()).min().unwrap();
    Some(level.iter().map(|l| l.map_or(0, |x| (x - min) as u32)).collect())
}

/// Every cover-diamond `v -> s, v -> t, s -> u, t -> u` has equal colors on
/// opposite edges.
pub fn is_diamond_colored<V: Vertex>(g: &ColoredDigraph<V>) -> bool {
    diamond_violation(g).is_none()
}

fn diamond_violation<V: Vertex>(g: &ColoredDigraph<V>) -> Option<String> {
    for v in 0..g.len() {
        let out = g.out_edges(v);
        for (a, &(s, k)) in out.iter().enumerate() {
            for &(t, l) in &out[a + 1..] {
                for &(u, i) in g.out_edges(s) {
                    if let Some(j) = g.edge_color(t, u) {
                        if i != l || j != k {
                            return Some(format!(
                                "diamond {} < {}, {} < {}",
                                g.vertex(v),
                                g.vertex(s),
                                g.vertex(t),
                                g.vertex(u)
                            ));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Both diamond-completion conditions hold with a unique completing vertex.
pub fn is_topographically_balanced<V: Vertex>(g: &ColoredDigraph<V>) -> bool {
    for v in 0..g.len() {
        let out = g.out_edges(v);
        for (a, &(s, _)) in out.iter().enumerate() {
            for &(t, _) in &out[a + 1..] {
                let common = g.out_edges(s).iter().filter(|&&(u, _)| g.edge_color(t, u).is_some()).count();
                if common != 1 {
                    return false;
                }
            }
        }
        let inc = g.in_edges(v);
        for (a, &(s, _)) in inc.iter().enumerate() {
            for &(t, _) in &inc[a + 1..] {
                let common = g.in_edges(s).iter().filter(|&&(r, _)| g.edge_color(r, t).is_some()).count();
                if common != 1 {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone)]
struct IdealCoords<V> {
    irreducibles: Vec<usize>,
    ideal: Vec<OrderIdeal>,
    lookup: HashMap<OrderIdeal, usize>,
    poset: VertexColoredPoset<V>,
}

#[derive(Debug, Clone)]
struct Closure {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

#[derive(Debug, Clone)]
enum Repr<V> {
    Ideals(Box<IdealCoords<V>>),
    Closure(Closure),
}

/// A validated diamond-colored modular lattice with its rank function.
///
/// Distributive lattices additionally carry Birkhoff coordinates: each
/// vertex is identified with the order ideal of join-irreducibles below it.
#[derive(Debug, Clone)]
pub struct DiamondLattice<V> {
    diagram: ColoredDigraph<V>,
    rank: Vec<u32>,
    length: u32,
    bottom: usize,
    top: usize,
    repr: Repr<V>,
}

impl<V: Vertex> DiamondLattice<V> {
    pub fn new(diagram: ColoredDigraph<V>) -> Result<Self> {
        if diagram.is_empty() {
            return Err(Error::NotALattice("no vertices".into()));
        }
        let rank = rank_function(&diagram)?;
        let sources = diagram.sources();
        let sinks = diagram.sinks();
        if sources.len() != 1 || sinks.len() != 1 {
            return Err(Error::NotALattice(format!("{} minimal and {} maximal vertices", sources.len(), sinks.len())));
        }
        if let Some(msg) = diamond_violation(&diagram) {
            return Err(Error::NotDiamondColored(msg));
        }
        let (bottom, top) = (sources[0], sinks[0]);
        let length = rank[top];
        let repr = match birkhoff(&diagram, &rank) {
            Some(coords) => Repr::Ideals(Box::new(coords)),
            None => {
                let closure = closure(&diagram, &rank);
                check_lattice(&diagram, &rank, &closure)?;
                if !is_topographically_balanced(&diagram) {
                    return Err(Error::NotModular("diamond completion fails".into()));
                }
                Repr::Closure(closure)
            }
        };
        Ok(Self { diagram, rank, length, bottom, top, repr })
    }

    pub fn diagram(&self) -> &ColoredDigraph<V> {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.diagram.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    pub fn rank_of(&self, v: &V) -> Result<u32> {
        Ok(self.rank[self.diagram.require(v)?])
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn vertex(&self, i: usize) -> &V {
        self.diagram.vertex(i)
    }

    pub fn index_of(&self, v: &V) -> Result<usize> {
        self.diagram.require(v)
    }

    pub fn kind(&self) -> LatticeKind {
        match self.repr {
            Repr::Ideals(_) => LatticeKind::Distributive,
            Repr::Closure(_) => LatticeKind::Modular,
        }
    }

    pub fn is_distributive(&self) -> bool {
        self.kind() == LatticeKind::Distributive
    }

    /// Order ideal of join-irreducibles below vertex `i` (distributive only).
    pub fn ideal(&self, i: usize) -> Option<&OrderIdeal> {
        match &self.repr {
            Repr::Ideals(c) => Some(&c.ideal[i]),
            Repr::Closure(_) => None,
        }
    }

    /// Vertex whose Birkhoff coordinate is `x` (distributive only).
    pub fn vertex_of_ideal(&self, x: &OrderIdeal) -> Option<usize> {
        match &self.repr {
            Repr::Ideals(c) => c.lookup.get(x).copied(),
            Repr::Closure(_) => None,
        }
    }

    /// Join-irreducible vertices, in coordinate order (distributive only).
    pub fn irreducibles(&self) -> Option<&[usize]> {
        match &self.repr {
            Repr::Ideals(c) => Some(&c.irreducibles),
            Repr::Closure(_) => None,
        }
    }

    /// The vertex-colored poset of join-irreducibles.
    pub fn join_irreducibles(&self) -> Result<&VertexColoredPoset<V>> {
        match &self.repr {
            Repr::Ideals(c) => Ok(&c.poset),
            Repr::Closure(_) => Err(Error::NotDistributive),
        }
    }

    pub fn leq_idx(&self, s: usize, t: usize) -> bool {
        match &self.repr {
            Repr::Ideals(c) => c.ideal[s].is_subset(&c.ideal[t]),
            Repr::Closure(cl) => cl.up[s].contains(t),
        }
    }

    pub fn join_idx(&self, s: usize, t: usize) -> usize {
        match &self.repr {
            Repr::Ideals(c) => c.lookup[&c.ideal[s].union(&c.ideal[t])],
            Repr::Closure(cl) => extremum(&cl.up, &self.rank, s, t, true).expect("validated lattice"),
        }
    }

    pub fn meet_idx(&self, s: usize, t: usize) -> usize {
        match &self.repr {
            Repr::Ideals(c) => c.lookup[&c.ideal[s].intersection(&c.ideal[t])],
            Repr::Closure(cl) => extremum(&cl.down, &self.rank, s, t, false).expect("validated lattice"),
        }
    }

    pub fn join(&self, s: &V, t: &V) -> Result<V> {
        let j = self.join_idx(self.index_of(s)?, self.index_of(t)?);
        Ok(self.vertex(j).clone())
    }

    pub fn meet(&self, s: &V, t: &V) -> Result<V> {
        let m = self.meet_idx(self.index_of(s)?, self.index_of(t)?);
        Ok(self.vertex(m).clone())
    }

    /// Colors used on edges of the diagram.
    pub fn colors(&self) -> Vec<Color> {
        self.diagram.colors().into_iter().collect()
    }
}

/// Birkhoff coordinates, or `None` when the diagram is not that of a
/// distributive lattice.
fn birkhoff<V: Vertex>(g: &ColoredDigraph<V>, rank: &[u32]) -> Option<IdealCoords<V>> {
    let mut irreducibles: Vec<usize> = (0..g.len()).filter(|&i| g.in_edges(i).len() == 1).collect();
    irreducibles.sort_by(|&a, &b| g.vertex(a).cmp(g.vertex(b)));
    let m = irreducibles.len();
    let mut slot = vec![usize::MAX; g.len()];
    for (k, &j) in irreducibles.iter().enumerate() {
        slot[j] = k;
    }
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_key(|&i| rank[i]);
    let mut ideal = vec![OrderIdeal::empty(m); g.len()];
    for &v in &order {
        let mut bits = FixedBitSet::with_capacity(m);
        for &(u, _) in g.in_edges(v) {
            bits.union_with(ideal[u].bits());
        }
        if slot[v] != usize::MAX {
            bits.insert(slot[v]);
        }
        ideal[v] = OrderIdeal::from_bits(bits);
    }
    for e in g.edges() {
        let (a, b) = (&ideal[e.source], &ideal[e.target]);
        if !a.is_subset(b) || b.len() != a.len() + 1 {
            return None;
        }
    }
    let mut lookup = HashMap::with_capacity(g.len());
    for (i, x) in ideal.iter().enumerate() {
        if lookup.insert(x.clone(), i).is_some() {
            return None;
        }
    }
    let below: Vec<OrderIdeal> = irreducibles
        .iter()
        .enumerate()
        .map(|(k, &j)| {
            let mut b = ideal[j].bits().clone();
            b.set(k, false);
            OrderIdeal::from_bits(b)
        })
        .collect();
    for (x, id) in ideal.iter().enumerate() {
        for k in 0..m {
            if !id.contains(k) && below[k].is_subset(id) {
                let y = lookup.get(&id.with(k))?;
                g.edge_color(x, *y)?;
            }
        }
    }
    let colors: Vec<Color> = irreducibles.iter().map(|&j| g.in_edges(j)[0].1).collect();
    let mut covers = Vec::new();
    for b in 0..m {
        let strict = &below[b];
        for a in strict.members() {
            if !strict.members().any(|c| c != a && below[c].contains(a)) {
                covers.push((a, b));
            }
        }
    }
    let elements = irreducibles.iter().map(|&j| g.vertex(j).clone()).collect();
    let poset = VertexColoredPoset::new(elements, colors, covers).ok()?;
    Some(IdealCoords { irreducibles, ideal, lookup, poset })
}

fn closure<V: Vertex>(g: &ColoredDigraph<V>, rank: &[u32]) -> Closure {
    let n = g.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| rank[i]);
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for &v in &order {
        let mut d = FixedBitSet::with_capacity(n);
        d.insert(v);
        for &(u, _) in g.in_edges(v) {
            d.union_with(&down[u]);
        }
        down[v] = d;
    }
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for &v in order.iter().rev() {
        let mut d = FixedBitSet::with_capacity(n);
        d.insert(v);
        for &(w, _) in g.out_edges(v) {
            d.union_with(&up[w]);
        }
        up[v] = d;
    }
    Closure { up, down }
}

/// Least element of `sets[s] ∩ sets[t]` (greatest when `least` is false),
/// checked to lie below (above) every common bound.
fn extremum(sets: &[FixedBitSet], rank: &[u32], s: usize, t: usize, least: bool) -> Option<usize> {
    let mut common = sets[s].clone();
    common.intersect_with(&sets[t]);
    let pick = if least { common.ones().min_by_key(|&i| rank[i])? } else { common.ones().max_by_key(|&i| rank[i])? };
    common.is_subset(&sets[pick]).then_some(pick)
}

fn check_lattice<V: Vertex>(g: &ColoredDigraph<V>, rank: &[u32], cl: &Closure) -> Result<()> {
    for s in 0..g.len() {
        for t in s + 1..g.len() {
            if extremum(&cl.up, rank, s, t, true).is_none() {
                return Err(Error::NotALattice(format!("{} and {} have no join", g.vertex(s), g.vertex(t))));
            }
            if extremum(&cl.down, rank, s, t, false).is_none() {
                return Err(Error::NotALattice(format!("{} and {} have no meet", g.vertex(s), g.vertex(t))));
            }
        }
    }
    Ok(())
}
