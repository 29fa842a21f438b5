use super::{partitions_in_box, Partition, TallyDiagram, TallyLayout};
use crate::digraph::{Color, ColoredDigraph};
use crate::error::{Error, Result};
use crate::lattice::DiamondLattice;

/// Column lengths of `p` inside a box of width `w`.
pub fn conjugate(p: &Partition, w: usize) -> Vec<u32> {
    (1..=w as u32).map(|j| p.0.iter().filter(|&&x| x >= j).count() as u32).collect()
}

/// Side of the Durfee square, `max{i : τ_i >= i}`.
pub fn durfee(p: &Partition) -> usize {
    (1..=p.k()).filter(|&i| p.part(i) as usize >= i).max().unwrap_or(0)
}

fn kn_bound(p: &Partition, w: usize, bound: i64) -> bool {
    let conj = conjugate(p, w.max(p.k()));
    (1..=durfee(p)).all(|i| p.part(i) as i64 - conj[i - 1] as i64 <= bound)
}

/// `τ_i - τ'_i <= 2n - 2k` on the Durfee range.
pub fn kn_admissible(p: &Partition, k: usize, n: usize) -> bool {
    p.fits(k, n) && kn_bound(p, 2 * n - k, 2 * (n - k) as i64)
}

/// The conjugate of the middle `k × k` block (first and last `n-k` columns
/// removed) is KN-admissible with bound 0.
pub fn dec_admissible(p: &Partition, k: usize, n: usize) -> bool {
    if !p.fits(k, n) {
        return false;
    }
    let off = (n - k) as u32;
    let mid = Partition(p.0.iter().map(|&x| x.saturating_sub(off).min(k as u32)).collect());
    kn_bound(&Partition(conjugate(&mid, k)), k, 0)
}

/// Reordered tally of an `L_A` partition: ones at `T'_j = 2n-k+j-τ_j`.
pub fn l_side_tally(p: &Partition, k: usize, n: usize) -> TallyDiagram {
    let mut bits = vec![0u8; 2 * n];
    for j in 1..=k {
        bits[2 * n - k + j - p.part(j) as usize - 1] = 1;
    }
    TallyDiagram { bits, layout: TallyLayout::Reordered }
}

fn prefix_bounded(n: usize, f: impl Fn(usize) -> u32) -> bool {
    let mut sum = 0;
    (1..=n).all(|p| {
        sum += f(p);
        sum as usize <= p
    })
}

/// `Σ_{i<=p} (t'_i + t'_{2n+1-i}) <= p` for every `p`.
pub fn kn_admissible_tally(t: &TallyDiagram) -> bool {
    let n = t.n();
    prefix_bounded(n, |i| t.at(i) + t.at(2 * n + 1 - i))
}

/// `Σ_{i<=p} (t'_{n+1-i} + t'_{n+i}) <= p` for every `p`.
pub fn dec_admissible_tally(t: &TallyDiagram) -> bool {
    let n = t.n();
    prefix_bounded(n, |i| t.at(n + 1 - i) + t.at(n + i))
}

/// `Σ_{i<=p} (t_{2n+1-2i} + t_{2n+2-2i}) <= p` for every `p`, on an original-layout tally.
pub fn is_ballot_tally(t: &TallyDiagram) -> bool {
    let n = t.n();
    prefix_bounded(n, |i| t.at(2 * n + 1 - 2 * i) + t.at(2 * n + 2 - 2 * i))
}

/// `L_A(k, 2n-k)`: partitions in the box, component-wise order, and raising
/// part `q` to `t_q` colored `q - t_q + 2n - k`.
pub fn a_lattice(k: usize, n: usize) -> Result<DiamondLattice<Partition>> {
    if k == 0 || k > n {
        return Err(Error::InvalidObject(format!("need 1 <= k <= n, got k={} n={}", k, n)));
    }
    let verts = partitions_in_box(k, 2 * n - k);
    let mut g = ColoredDigraph::new(verts.iter().cloned())?;
    for (s, p) in verts.iter().enumerate() {
        for q in 1..=k {
            let mut r = p.clone();
            r.0[q - 1] += 1;
            if r.fits(k, n) {
                let color = (q + 2 * n - k) as Color - r.part(q);
                let t = g.require(&r)?;
                g.add_edge(s, t, color)?;
            }
        }
    }
    DiamondLattice::new(g)
}

/// `σ(i) = 2n - i` for `i > n`, identity otherwise.
pub fn sigma(n: usize, i: Color) -> Color {
    if i as usize > n {
        2 * n as Color - i
    } else {
        i
    }
}

pub fn recolor_sigma(l: &DiamondLattice<Partition>, n: usize) -> Result<DiamondLattice<Partition>> {
    DiamondLattice::new(l.diagram().recolor(|c| sigma(n, c))?)
}

/// `L_A` recolored by `σ`.
pub fn tilde_c_lattice(k: usize, n: usize) -> Result<DiamondLattice<Partition>> {
    recolor_sigma(&a_lattice(k, n)?, n)
}

fn admissible_sublattice(k: usize, n: usize, keep: impl Fn(&Partition) -> bool) -> Result<DiamondLattice<Partition>> {
    let full = tilde_c_lattice(k, n)?;
    let sub = full.diagram().induced(keep);
    let l = DiamondLattice::new(sub).map_err(|e| Error::StructureViolation(e.to_string()))?;
    if l.length() as usize != k * (2 * n - k) {
        return Err(Error::StructureViolation(format!("length {} for k={} n={}", l.length(), k, n)));
    }
    let base = l.vertex(l.bottom()).size();
    for i in 0..l.len() {
        if l.vertex(i).size() - base != l.rank(i) {
            return Err(Error::StructureViolation(format!("rank of {} is not inherited", l.vertex(i))));
        }
    }
    for s in 0..l.len() {
        for t in s + 1..l.len() {
            let (a, b) = (l.vertex(s), l.vertex(t));
            let max = Partition(a.0.iter().zip(&b.0).map(|(x, y)| *x.max(y)).collect());
            let min = Partition(a.0.iter().zip(&b.0).map(|(x, y)| *x.min(y)).collect());
            if *l.vertex(l.join_idx(s, t)) != max || *l.vertex(l.meet_idx(s, t)) != min {
                return Err(Error::StructureViolation(format!("{} and {} do not join component-wise", a, b)));
            }
        }
    }
    Ok(l)
}

/// KN-admissible sublattice of `L_A` recolored by `σ`.
pub fn kn_lattice(k: usize, n: usize) -> Result<DiamondLattice<Partition>> {
    admissible_sublattice(k, n, |p| kn_admissible(p, k, n))
}

/// De Concini-admissible sublattice of `L_A` recolored by `σ`.
pub fn dec_lattice(k: usize, n: usize) -> Result<DiamondLattice<Partition>> {
    admissible_sublattice(k, n, |p| dec_admissible(p, k, n))
}
