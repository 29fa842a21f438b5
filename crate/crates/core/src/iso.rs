//! Edge- and color-preserving isomorphism search between colored digraphs.

use std::collections::VecDeque;

use crate::digraph::{Color, ColoredDigraph, Vertex};
use crate::error::{Error, Result};

pub const ISO_SIZE_CAP: usize = 2000;

fn signature<V: Vertex>(g: &ColoredDigraph<V>, i: usize) -> Vec<(Color, bool)> {
    let mut s: Vec<(Color, bool)> = g.neighbors(i).map(|(_, c, up)| (c, up)).collect();
    s.sort_unstable();
    s
}

/// Search order: BFS from the unique source when there is one, restarting
/// in each weak component.
fn search_order<V: Vertex>(g: &ColoredDigraph<V>) -> Vec<(usize, Option<usize>)> {
    let mut starts: Vec<usize> = g.sources();
    if starts.len() != 1 {
        starts.clear();
    }
    starts.extend(0..g.len());
    let mut seen = vec![false; g.len()];
    let mut order = Vec::with_capacity(g.len());
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([(s, None)]);
        while let Some((u, parent)) = queue.pop_front() {
            order.push((u, parent));
            for (w, _, _) in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back((w, Some(u)));
                }
            }
        }
    }
    order
}

struct Search<'a, V, W> {
    a: &'a ColoredDigraph<V>,
    b: &'a ColoredDigraph<W>,
    sig_a: Vec<Vec<(Color, bool)>>,
    sig_b: Vec<Vec<(Color, bool)>>,
    order: Vec<(usize, Option<usize>)>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    anchor: Option<usize>,
}

impl<V: Vertex, W: Vertex> Search<'_, V, W> {
    fn consistent(&self, x: usize, fx: usize) -> bool {
        let mut mapped = 0;
        for (y, c, up) in self.a.neighbors(x) {
            if let Some(fy) = self.map[y] {
                mapped += 1;
                let found = if up { self.b.edge_color(fx, fy) } else { self.b.edge_color(fy, fx) };
                if found != Some(c) {
                    return false;
                }
            }
        }
        self.b.neighbors(fx).filter(|&(w, _, _)| self.used[w]).count() == mapped
    }

    fn candidates(&self, x: usize, parent: Option<usize>) -> Vec<usize> {
        let Some(p) = parent else {
            return match (self.anchor, self.map.iter().all(Option::is_none)) {
                (Some(b0), true) => vec![b0],
                _ => (0..self.b.len()).filter(|&w| !self.used[w]).collect(),
            };
        };
        let fp = self.map[p].expect("parent precedes child");
        let want = self.a.edge_color(p, x).map(|c| (c, true)).or_else(|| self.a.edge_color(x, p).map(|c| (c, false)));
        self.b.neighbors(fp).filter(|&(w, c, up)| !self.used[w] && Some((c, up)) == want).map(|(w, _, _)| w).collect()
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let (x, parent) = self.order[depth];
        for fx in self.candidates(x, parent) {
            if self.sig_a[x] != self.sig_b[fx] || !self.consistent(x, fx) {
                continue;
            }
            self.map[x] = Some(fx);
            self.used[fx] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[x] = None;
            self.used[fx] = false;
        }
        false
    }
}

/// A bijection `f` (as `f[i]` for vertex index `i` of `a`) such that
/// `i →ᶜ j` in `a` iff `f[i] →ᶜ f[j]` in `b`.
pub fn find_isomorphism<V: Vertex, W: Vertex>(a: &ColoredDigraph<V>, b: &ColoredDigraph<W>) -> Result<Vec<usize>> {
    for n in [a.len(), b.len()] {
        if n > ISO_SIZE_CAP {
            return Err(Error::CapExceeded { what: "isomorphism search size", cap: ISO_SIZE_CAP });
        }
    }
    let sig_a: Vec<_> = (0..a.len()).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..b.len()).map(|i| signature(b, i)).collect();
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort();
    sb.sort();
    if a.edge_count() != b.edge_count() || sa != sb {
        return Err(Error::NotIsomorphic("vertex signatures differ".into()));
    }
    let anchor = match (a.sources().as_slice(), b.sources().as_slice()) {
        ([_], [y]) => Some(*y),
        _ => None,
    };
    let mut search = Search {
        a,
        b,
        sig_a,
        sig_b,
        order: search_order(a),
        map: vec![None; a.len()],
        used: vec![false; b.len()],
        anchor,
    };
    if !search.extend(0) {
        return Err(Error::NotIsomorphic("search exhausted".into()));
    }
    Ok(search.map.into_iter().map(|x| x.expect("complete map")).collect())
}

/// Whether `f` is an edge- and color-preserving bijection from `a` onto `b`.
pub fn is_isomorphism<V: Vertex, W: Vertex>(a: &ColoredDigraph<V>, b: &ColoredDigraph<W>, f: &[usize]) -> bool {
    if f.len() != a.len() || a.len() != b.len() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &y in f {
        if y >= b.len() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    a.edges().iter().all(|e| b.edge_color(f[e.source], f[e.target]) == Some(e.color))
}
