//! Finite edge-colored directed graphs without loops or parallel edges.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Debug, Display, Write as _};
use std::hash::Hash;

use crate::error::{Error, Result};

pub type Color = u32;

/// Vertex payload: a canonical coordinate with a total order used for
/// deterministic output.
pub trait Vertex: Clone + Eq + Hash + Ord + Debug + Display {}

impl<T: Clone + Eq + Hash + Ord + Debug + Display> Vertex for T {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub color: Color,
}

#[derive(Clone)]
pub struct ColoredDigraph<V> {
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    edges: Vec<Edge>,
    out: Vec<Vec<(usize, Color)>>,
    inc: Vec<Vec<(usize, Color)>>,
}

impl<V> Debug for ColoredDigraph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredDigraph")
            .field("vertices", &self.vertices.len())
            .field("edges", &self.edges.len())
            .finish()
    }
}

impl<V: Vertex> ColoredDigraph<V> {
    pub fn new(vertices: impl IntoIterator<Item = V>) -> Result<Self> {
        let vertices: Vec<V> = vertices.into_iter().collect();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
        }
        let n = vertices.len();
        Ok(Self { vertices, index, edges: Vec::new(), out: vec![Vec::new(); n], inc: vec![Vec::new(); n] })
    }

    pub fn from_edges(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (V, V, Color)>,
    ) -> Result<Self> {
        let mut g = Self::new(vertices)?;
        for (s, t, c) in edges {
            g.add_edge_between(&s, &t, c)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, source: usize, target: usize, color: Color) -> Result<()> {
        if source >= self.len() || target >= self.len() {
            return Err(Error::UnknownVertex(format!("#{}", source.max(target))));
        }
        if source == target {
            return Err(Error::SelfLoop(self.vertices[source].to_string()));
        }
        if color == 0 {
            return Err(Error::ZeroColor);
        }
        if self.out[source].iter().any(|&(t, _)| t == target) {
            return Err(Error::DuplicateEdge(self.vertices[source].to_string(), self.vertices[target].to_string()));
        }
        self.out[source].push((target, color));
        self.inc[target].push((source, color));
        self.edges.push(Edge { source, target, color });
        Ok(())
    }

    pub fn add_edge_between(&mut self, s: &V, t: &V, color: Color) -> Result<()> {
        let si = self.require(s)?;
        let ti = self.require(t)?;
        self.add_edge(si, ti, color)
    }

    pub fn require(&self, v: &V) -> Result<usize> {
        self.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, i: usize) -> &V {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, i: usize) -> &[(usize, Color)] {
        &self.out[i]
    }

    pub fn in_edges(&self, i: usize) -> &[(usize, Color)] {
        &self.inc[i]
    }

    pub fn edge_color(&self, s: usize, t: usize) -> Option<Color> {
        self.out[s].iter().find(|&&(x, _)| x == t).map(|&(_, c)| c)
    }

    pub fn colors(&self) -> BTreeSet<Color> {
        self.edges.iter().map(|e| e.color).collect()
    }

    /// Edge set in vertex-payload form, sorted.
    pub fn labeled_edges(&self) -> Vec<(V, V, Color)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| (self.vertices[e.source].clone(), self.vertices[e.target].clone(), e.color))
            .collect();
        out.sort();
        out
    }

    pub fn map_vertices<W: Vertex>(&self, f: impl Fn(&V) -> W) -> Result<ColoredDigraph<W>> {
        let mut g = ColoredDigraph::new(self.vertices.iter().map(f))?;
        for e in &self.edges {
            g.add_edge(e.source, e.target, e.color)?;
        }
        Ok(g)
    }

    pub fn recolor(&self, f: impl Fn(Color) -> Color) -> Result<Self> {
        let mut g = Self::new(self.vertices.iter().cloned())?;
        for e in &self.edges {
            g.add_edge(e.source, e.target, f(e.color))?;
        }
        Ok(g)
    }

    /// Subgraph induced on the vertices satisfying `keep`, in the original order.
    pub fn induced(&self, keep: impl Fn(&V) -> bool) -> Self {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(&self.vertices[i])).collect();
        let mut remap = vec![usize::MAX; self.len()];
        for (j, &i) in kept.iter().enumerate() {
            remap[i] = j;
        }
        let mut g = Self::new(kept.iter().map(|&i| self.vertices[i].clone())).expect("subset of distinct vertices");
        for e in &self.edges {
            let (s, t) = (remap[e.source], remap[e.target]);
            if s != usize::MAX && t != usize::MAX {
                g.add_edge(s, t, e.color).expect("edge of a simple digraph");
            }
        }
        g
    }

    /// Undirected neighbours with the color and whether the step goes up.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, Color, bool)> + '_ {
        self.out[i].iter().map(|&(t, c)| (t, c, true)).chain(self.inc[i].iter().map(|&(s, c)| (s, c, false)))
    }

    /// Breadth-first distances from `source`, ignoring edge direction.
    pub fn undirected_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for (w, _, _) in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs_distance_idx(&self, s: usize, t: usize) -> Result<u32> {
        self.undirected_distances(s)[t].ok_or(Error::Unreachable)
    }

    pub fn bfs_distance(&self, s: &V, t: &V) -> Result<u32> {
        self.bfs_distance_idx(self.require(s)?, self.require(t)?)
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.is_empty() || self.undirected_distances(0).iter().all(Option::is_some)
    }

    /// Weak components as lists of vertex indices, each sorted.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for (w, _, _) in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Vertices with no incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.inc[i].is_empty()).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.out[i].is_empty()).collect()
    }

    /// Kahn topological order, or `None` when a directed cycle exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(w, _) in &self.out[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.len()).then_some(order)
    }

    /// Graphviz rendering with vertices and edges in coordinate order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        let mut pos = vec![0; self.len()];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", name).unwrap();
        for (p, &i) in order.iter().enumerate() {
            writeln!(out, "  v{} [label=\"{}\"];", p, self.vertices[i]).unwrap();
        }
        let mut edges: Vec<(usize, usize, Color)> =
            self.edges.iter().map(|e| (pos[e.source], pos[e.target], e.color)).collect();
        edges.sort_unstable();
        for (s, t, c) in edges {
            writeln!(out, "  v{} -> v{} [label={}];", s, t, c).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
