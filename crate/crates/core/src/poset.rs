//! Vertex-colored posets and their order ideals.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use rand::Rng;

use crate::digraph::{Color, ColoredDigraph, Vertex};
use crate::error::{Error, Result};
use crate::lattice::DiamondLattice;

/// A down-closed set of poset elements, stored as a bitset over element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderIdeal(FixedBitSet);

impl OrderIdeal {
    pub fn empty(universe: usize) -> Self {
        Self(FixedBitSet::with_capacity(universe))
    }

    pub fn from_bits(bits: FixedBitSet) -> Self {
        Self(bits)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn with(&self, x: usize) -> Self {
        let mut b = self.0.clone();
        b.insert(x);
        Self(b)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut b = self.0.clone();
        b.union_with(&other.0);
        Self(b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut b = self.0.clone();
        b.intersect_with(&other.0);
        Self(b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl Hash for OrderIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl Ord for OrderIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.members().cmp(other.members()))
    }
}

impl PartialOrd for OrderIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str("}")
    }
}

/// A finite poset given by its covering pairs, with a color on each element.
#[derive(Debug, Clone)]
pub struct VertexColoredPoset<V> {
    elements: Vec<V>,
    colors: Vec<Color>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    down: Vec<FixedBitSet>,
}

impl<V: Vertex> VertexColoredPoset<V> {
    /// Validates that `covers` (pairs `(lower, upper)` of element indices)
    /// is acyclic and transitively reduced.
    pub fn new(elements: Vec<V>, colors: Vec<Color>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = elements.len();
        if colors.len() != n {
            return Err(Error::NotAPoset("one color per element required".into()));
        }
        if colors.iter().any(|&c| c == 0) {
            return Err(Error::ZeroColor);
        }
        let mut g = ColoredDigraph::new(0..n)?;
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::NotAPoset(format!("cover ({}, {}) out of range", a, b)));
            }
            g.add_edge(a, b, 1).map_err(|e| Error::NotAPoset(e.to_string()))?;
        }
        let order = g.topological_order().ok_or_else(|| Error::NotAPoset("covers contain a cycle".into()))?;
        let mut lower_covers = vec![Vec::new(); n];
        for &(a, b) in &covers {
            lower_covers[b].push(a);
        }
        for l in &mut lower_covers {
            l.sort_unstable();
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            let mut d = FixedBitSet::with_capacity(n);
            d.insert(x);
            for &y in &lower_covers[x] {
                d.union_with(&down[y]);
            }
            down[x] = d;
        }
        for &(a, b) in &covers {
            if lower_covers[b].iter().any(|&c| c != a && down[c].contains(a)) {
                return Err(Error::NotAPoset(format!(
                    "cover {} < {} is implied transitively",
                    elements[a], elements[b]
                )));
            }
        }
        Ok(Self { elements, colors, covers, lower_covers, down })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[V] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &V {
        &self.elements[i]
    }

    pub fn color(&self, i: usize) -> Color {
        self.colors[i]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// `a <= b` in the poset order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn principal_ideal(&self, x: usize) -> OrderIdeal {
        OrderIdeal(self.down[x].clone())
    }

    pub fn is_order_ideal(&self, set: &OrderIdeal) -> bool {
        set.members().all(|x| self.down[x].is_subset(set.bits()))
    }

    /// Elements outside `ideal` whose lower covers all lie in it.
    pub fn addable(&self, ideal: &OrderIdeal) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !ideal.contains(x) && self.lower_covers[x].iter().all(|&y| ideal.contains(y)))
            .collect()
    }

    /// All order ideals, in breadth-first order from the empty ideal.
    pub fn order_ideals(&self) -> Vec<OrderIdeal> {
        let mut seen = std::collections::HashSet::new();
        let start = OrderIdeal::empty(self.len());
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for v in self.addable(&x) {
                let y = x.with(v);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        out
    }

    /// True when some bijection of elements preserves covers and colors,
    /// given as `map[i]` = image in `other` of element `i`.
    pub fn is_isomorphism<W: Vertex>(&self, other: &VertexColoredPoset<W>, map: &[usize]) -> bool {
        if self.len() != other.len() || map.len() != self.len() {
            return false;
        }
        let mut hit = vec![false; other.len()];
        for &m in map {
            if m >= other.len() || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        if (0..self.len()).any(|i| self.colors[i] != other.colors[map[i]]) {
            return false;
        }
        let mut a: Vec<(usize, usize)> = self.covers.iter().map(|&(x, y)| (map[x], map[y])).collect();
        let mut b = other.covers.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// The distributive lattice of order ideals of `poset`: `x -> x ∪ {v}` has the color of `v`.
pub fn ideals_lattice<V: Vertex>(poset: &VertexColoredPoset<V>) -> Result<DiamondLattice<OrderIdeal>> {
    let mut ideals = poset.order_ideals();
    ideals.sort();
    let mut g = ColoredDigraph::new(ideals.iter().cloned())?;
    for (i, x) in ideals.iter().enumerate() {
        for v in poset.addable(x) {
            let j = g.require(&x.with(v))?;
            g.add_edge(i, j, poset.color(v))?;
        }
    }
    DiamondLattice::new(g)
}

/// A random vertex-colored poset on `n` labelled elements.
///
/// Each pair `i < j` is related with probability `density`; the transitive
/// closure is then reduced to covers.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, colors: Color, density: f64) -> VertexColoredPoset<u32> {
    let mut rel = vec![FixedBitSet::with_capacity(n); n];
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                rel[j].insert(i);
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            if rel[j].contains(i) {
                let below = rel[i].clone();
                rel[j].union_with(&below);
            }
        }
    }
    let mut covers = Vec::new();
    for j in 0..n {
        for i in rel[j].ones() {
            let implied = rel[j].ones().any(|m| m != i && rel[m].contains(i));
            if !implied {
                covers.push((i, j));
            }
        }
    }
    let palette: Vec<Color> = (0..n).map(|_| rng.gen_range(1..=colors)).collect();
    VertexColoredPoset::new((0..n as u32).collect(), palette, covers).expect("reduced closure is a poset")
}
