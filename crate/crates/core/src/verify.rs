//! Invariant sweeps with a machine-readable report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalan::{c_lattice, enumerate_tilings, ming_digraph, solve_snakes};
use crate::digraph::{ColoredDigraph, Vertex};
use crate::error::{Error, Result};
use crate::iso::{find_isomorphism, is_isomorphism};
use crate::lattice::DiamondLattice;
use crate::minuscule::{b_inv, b_map, mixedmiddleswitch_digraph, z_digraph};
use crate::poly::{is_symmetric_unimodal, shifted_product, WeightVector};
use crate::poset::{ideals_lattice, random_poset};
use crate::puzzle::{self, Via};
use crate::symplectic::{
    dec_admissible, dec_admissible_tally, dec_lattice, domino_digraph, enumerate_tableaux, is_ballot_tally,
    kn_admissible, kn_admissible_tally, kn_lattice, l_map, l_side_tally, part_to_tab, partitions_in_box, to_tally,
    wt_c, BoardKind, Partition, TableauVariant,
};
use crate::weyl::{self, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Birkhoff,
    Theorem2,
    Minuscule,
    Symplectic,
    Weyl,
    Catalan,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Birkhoff, Suite::Theorem2, Suite::Minuscule, Suite::Symplectic, Suite::Weyl, Suite::Catalan];

    /// Default size bound for the suite.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Birkhoff | Suite::Theorem2 => 8,
            Suite::Minuscule => 6,
            Suite::Symplectic => 4,
            Suite::Weyl => 3,
            Suite::Catalan | Suite::All => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Birkhoff => "birkhoff",
            Suite::Theorem2 => "theorem2",
            Suite::Minuscule => "minuscule",
            Suite::Symplectic => "symplectic",
            Suite::Weyl => "weyl",
            Suite::Catalan => "catalan",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {:?}", s)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Overrides every suite's default size bound.
    pub max_n: Option<usize>,
    /// Random lattices per sweep.
    pub samples: usize,
    pub seed: u64,
    /// Recolor one edge of every constructed diagram before checking it.
    pub fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_n: None, samples: 100, seed: 0x5eed, fault: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Sweep<'a> {
    suite: Suite,
    cfg: VerifyConfig,
    report: &'a mut Report,
}

impl Sweep<'_> {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let res = f();
        self.report.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed: res.is_ok(),
            counterexample: res.err(),
        });
    }

    fn max_n(&self) -> usize {
        self.cfg.max_n.unwrap_or(self.suite.default_max_n())
    }

    fn prepare<V: Vertex>(&self, g: ColoredDigraph<V>) -> ColoredDigraph<V> {
        if self.cfg.fault {
            perturb(&g)
        } else {
            g
        }
    }

    fn lattice<V: Vertex>(&self, l: DiamondLattice<V>) -> Result<DiamondLattice<V>> {
        if self.cfg.fault && l.diagram().edge_count() > 0 {
            DiamondLattice::new(perturb(l.diagram()))
        } else {
            Ok(l)
        }
    }
}

/// Shift the color of the first edge by one, the seeded coloring bug.
pub fn perturb<V: Vertex>(g: &ColoredDigraph<V>) -> ColoredDigraph<V> {
    let mut h = ColoredDigraph::new(g.vertices().iter().cloned()).expect("distinct vertices");
    for (k, e) in g.edges().iter().enumerate() {
        let color = if k == 0 { e.color + 1 } else { e.color };
        h.add_edge(e.source, e.target, color).expect("edge of a simple digraph");
    }
    h
}

pub fn run(suite: Suite, cfg: VerifyConfig) -> Report {
    let mut report = Report::default();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        let mut sweep = Sweep { suite: s, cfg, report: &mut report };
        match s {
            Suite::Birkhoff => birkhoff(&mut sweep),
            Suite::Theorem2 => theorem2(&mut sweep),
            Suite::Minuscule => minuscule(&mut sweep),
            Suite::Symplectic => symplectic(&mut sweep),
            Suite::Weyl => weyl_suite(&mut sweep),
            Suite::Catalan => catalan(&mut sweep),
            Suite::All => unreachable!(),
        }
    }
    report
}

fn birkhoff(sw: &mut Sweep) {
    let mut rng = ChaCha8Rng::seed_from_u64(sw.cfg.seed);
    let size = sw.max_n();
    for sample in 0..sw.cfg.samples {
        let n = rng.gen_range(0..=size);
        let density = rng.gen_range(0.1..0.6);
        let p = random_poset(&mut rng, n, 3, density);
        let prepared = ideals_lattice(&p).and_then(|l| sw.lattice(l));
        sw.check(format!("round trip #{} ({} elements)", sample, n), || {
            let l = lib(prepared)?;
            ensure(l.is_distributive(), || "ideal lattice not recognized as distributive".into())?;
            let j = lib(l.join_irreducibles())?;
            let map: Vec<usize> = (0..p.len())
                .map(|v| j.elements().iter().position(|x| *x == p.principal_ideal(v)))
                .collect::<Option<_>>()
                .ok_or("principal ideal missing from join-irreducibles")?;
            ensure(p.is_isomorphism(j, &map), || format!("poset {:?} not recovered", p.covers()))
        });
    }
}

fn theorem2(sw: &mut Sweep) {
    let mut rng = ChaCha8Rng::seed_from_u64(sw.cfg.seed ^ 0x7);
    let size = sw.max_n();
    for sample in 0..sw.cfg.samples {
        let density = rng.gen_range(0.1..0.5);
        let p = random_poset(&mut rng, size, 3, density);
        let prepared = ideals_lattice(&p).and_then(|l| sw.lattice(l));
        let (a, b) = (rng.gen::<usize>(), rng.gen::<usize>());
        sw.check(format!("distance and geodesics #{}", sample), || {
            let l = lib(prepared)?;
            let (s, t) = (a % l.len(), b % l.len());
            for x in 0..l.len() {
                let bfs = l.diagram().undirected_distances(x);
                for y in 0..l.len() {
                    let d = lib(puzzle::lattice_distance_idx(&l, x, y))?.value();
                    ensure(bfs[y] == Some(d), || {
                        format!("dist({}, {}) = {} but BFS gives {:?}", l.vertex(x), l.vertex(y), d, bfs[y])
                    })?;
                }
            }
            let d = lib(puzzle::lattice_distance_idx(&l, s, t))?.value();
            let counts = lib(puzzle::color_counts_idx(&l, s, t))?;
            for walk in lib(puzzle::all_shortest_paths_idx(&l, s, t, puzzle::DEFAULT_GEODESIC_CAP))? {
                ensure(walk.color_counts() == counts, || {
                    format!("geodesic {:?} has other color counts", walk.sequence)
                })?;
            }
            for via in [Via::Join, Via::Meet] {
                let cert = lib(puzzle::shortest_path_idx(&l, s, t, via))?;
                lib(cert.validate(&l))?;
                ensure(cert.len() as u32 == d, || format!("certificate of length {} for distance {}", cert.len(), d))?;
            }
            Ok(())
        });
    }
}

fn minuscule(sw: &mut Sweep) {
    for n in 2..=sw.max_n().max(2) {
        let z = z_digraph(n).map(|g| sw.prepare(g));
        sw.check(format!("Z({}) to B({}) is a colored isomorphism", n, n), || {
            let z = lib(z)?;
            let b = lib(mixedmiddleswitch_digraph(n))?;
            ensure(z.len() == 1 << n, || format!("|Z({})| = {}", n, z.len()))?;
            let image = lib(z.map_vertices(b_map))?;
            ensure(image.labeled_edges() == b.labeled_edges(), || {
                let diff = image.labeled_edges().into_iter().find(|e| !b.labeled_edges().contains(e));
                format!("edge {:?} is not a switch move", diff)
            })?;
            ensure(z.vertices().iter().all(|x| b_inv(&b_map(x)) == *x), || "b_inv is not inverse".into())
        });
        let z = z_digraph(n).map(|g| sw.prepare(g));
        sw.check(format!("Z({}) distances, RGF and length", n), || {
            let l = lib(DiamondLattice::new(lib(z)?))?;
            let b = lib(mixedmiddleswitch_digraph(n))?;
            for x in 0..l.len() {
                let bx = lib(b.require(&b_map(l.vertex(x))))?;
                let bfs = b.undirected_distances(bx);
                for y in 0..l.len() {
                    let by = lib(b.require(&b_map(l.vertex(y))))?;
                    let d = lib(puzzle::lattice_distance_idx(&l, x, y))?.value();
                    ensure(bfs[by] == Some(d), || {
                        format!("dist({}, {}) = {} vs BFS {:?}", l.vertex(x), l.vertex(y), d, bfs[by])
                    })?;
                }
            }
            ensure(weyl::rgf(&l) == shifted_product(n), || format!("RGF of Z({}) is {}", n, weyl::rgf(&l)))?;
            ensure(l.length() as usize == n * (n + 1) / 2, || format!("length {}", l.length()))?;
            let god = lib(puzzle::gods_number(&l))?;
            ensure(god == l.length(), || format!("God's number {} differs from length", god))
        });
    }
}

fn multiset(mut v: Vec<WeightVector>) -> Vec<WeightVector> {
    v.sort();
    v
}

fn symplectic(sw: &mut Sweep) {
    let max = sw.max_n();
    for n in 1..=max {
        for k in 1..=n {
            let kn = kn_lattice(k, n).and_then(|l| sw.lattice(l));
            let dec = dec_lattice(k, n).and_then(|l| sw.lattice(l));
            sw.check(format!("counts, lengths and RGF for k={} n={}", k, n), || {
                let card = lib(weyl::closed_card_c(n, k))?;
                let king = enumerate_tableaux(TableauVariant::King, k, n).len();
                let semi = enumerate_tableaux(TableauVariant::Seminarii, k, n).len();
                ensure(card == king.into() && card == semi.into(), || {
                    format!("{} King, {} seminarii, closed {}", king, semi, card)
                })?;
                let rgf = lib(weyl::closed_rgf_c(n, k))?;
                for (name, l) in [("KN", lib(kn.clone())?), ("DeC", lib(dec.clone())?)] {
                    ensure(l.length() as usize == k * (2 * n - k), || format!("{} length {}", name, l.length()))?;
                    ensure(weyl::rgf(&l) == rgf, || format!("{} RGF {} vs {}", name, weyl::rgf(&l), rgf))?;
                    ensure(is_symmetric_unimodal(&rgf), || "RGF not symmetric unimodal".into())?;
                }
                Ok(())
            });
            sw.check(format!("domino puzzles map onto admissible lattices for k={} n={}", k, n), || {
                for (kind, l) in [(BoardKind::Staircase, lib(kn.clone())?), (BoardKind::Ballot, lib(dec.clone())?)] {
                    let d = lib(domino_digraph(kind, k, n))?;
                    let image = lib(d.map_vertices(|p| l_map(p, k, n).expect("fits")))?;
                    ensure(image.labeled_edges() == l.diagram().labeled_edges(), || {
                        let diff = image.labeled_edges().into_iter().find(|e| !l.diagram().labeled_edges().contains(e));
                        format!("{:?} board: edge {:?} not in the lattice", kind, diff)
                    })?;
                }
                Ok(())
            });
            sw.check(format!("tally forms of admissibility for k={} n={}", k, n), || {
                for p in partitions_in_box(k, 2 * n - k) {
                    let t = l_side_tally(&p, k, n);
                    ensure(kn_admissible(&p, k, n) == kn_admissible_tally(&t), || {
                        format!("KN tally disagrees at {}", p)
                    })?;
                    ensure(dec_admissible(&p, k, n) == dec_admissible_tally(&t), || {
                        format!("DeC tally disagrees at {}", p)
                    })?;
                    let orig = to_tally(&lib(part_to_tab(&p, n))?);
                    ensure(p.is_ballot(n) == is_ballot_tally(&orig), || format!("ballot tally disagrees at {}", p))?;
                }
                Ok(())
            });
        }
    }
    sw.check("l_map sends (4,3) to (1,1)", || {
        let got = lib(l_map(&Partition(vec![4, 3]), 2, 3))?;
        ensure(got == Partition(vec![1, 1]), || format!("got {}", got))
    });
}

fn weyl_suite(sw: &mut Sweep) {
    let max = sw.max_n();
    for n in 2..=max {
        let phi = match weyl::root_data(Family::C, n) {
            Ok(phi) => phi,
            Err(e) => return sw.check(format!("C{} root data", n), || Err(e.to_string())),
        };
        let group = weyl::weyl_group(&phi, weyl::DEFAULT_GROUP_CAP);
        for k in 1..=n {
            let kn = kn_lattice(k, n).and_then(|l| sw.lattice(l));
            let dec = dec_lattice(k, n).and_then(|l| sw.lattice(l));
            let group = group.clone();
            let phi = phi.clone();
            sw.check(format!("C{} fundamental weight {} splitting posets", n, k), || {
                let group = lib(group)?;
                let lambda = WeightVector::unit(n, k - 1);
                let king: Vec<_> = enumerate_tableaux(TableauVariant::King, k, n).iter().map(wt_c).collect();
                let semi: Vec<_> = enumerate_tableaux(TableauVariant::Seminarii, k, n).iter().map(wt_c).collect();
                let (king, semi) = (multiset(king), multiset(semi));
                ensure(king == semi, || "King and seminarii weights differ".into())?;
                for (name, l) in [("KN", lib(kn)?), ("DeC", lib(dec)?)] {
                    ensure(lib(weyl::is_structured(l.diagram(), &phi))?, || {
                        format!("{} lattice is not C{}-structured", name, n)
                    })?;
                    let w = multiset(lib(weyl::poset_weights(l.diagram(), n))?);
                    ensure(w == king, || format!("{} weights differ from tableau weights", name))?;
                    let x = lib(weyl::wgf(l.diagram(), n))?;
                    ensure(weyl::w_invariant(&phi, &x), || format!("{} WGF is not W-invariant", name))?;
                    ensure(weyl::bialternant_check(&phi, &group, &lambda, &x), || {
                        format!("{} WGF fails the bialternant identity", name)
                    })?;
                }
                let pf = lib(weyl::product_formula(&phi, &lambda))?;
                ensure(pf.rgf == lib(weyl::closed_rgf_c(n, k))?, || {
                    "product formula disagrees with the closed form".into()
                })?;
                ensure(pf.length as usize == k * (2 * n - k), || format!("product-formula length {}", pf.length))
            });
        }
    }
    for n in 2..=max + 1 {
        let z = z_digraph(n).map(|g| sw.prepare(g));
        sw.check(format!("B{} minuscule splitting poset", n), || {
            let phi = lib(weyl::root_data(Family::B, n))?;
            let group = lib(weyl::weyl_group(&phi, weyl::DEFAULT_GROUP_CAP))?;
            let l = lib(DiamondLattice::new(lib(z)?))?;
            let lambda = WeightVector::unit(n, n - 1);
            ensure(lib(weyl::is_structured(l.diagram(), &phi))?, || format!("Z({}) is not B{}-structured", n, n))?;
            let x = lib(weyl::wgf(l.diagram(), n))?;
            let orbit = weyl::orbit(&phi, &lambda);
            ensure(x.len() == orbit.len() && orbit.iter().all(|mu| x.coefficient(mu) == 1.into()), || {
                "WGF is not the orbit sum of the minuscule weight".into()
            })?;
            ensure(weyl::bialternant_check(&phi, &group, &lambda, &x), || "bialternant identity fails".into())?;
            let pf = lib(weyl::product_formula(&phi, &lambda))?;
            ensure(pf.rgf == weyl::rgf(&l) && pf.length == l.length() as i64, || {
                "product formula disagrees with Z(n)".into()
            })
        });
    }
}

fn catalan(sw: &mut Sweep) {
    let max = sw.max_n();
    for n in 1..=max + 1 {
        sw.check(format!("C({}) and tilings are counted by Catalan({})", n, n + 1), || {
            let catalan = (0..n as u64 + 1).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2));
            let l = lib(c_lattice(n))?;
            let t = enumerate_tilings(n).len();
            ensure(l.len() as u64 == catalan && t as u64 == catalan, || {
                format!("|C| = {}, tilings = {}, Catalan = {}", l.len(), t, catalan)
            })?;
            ensure(l.length() as usize == n * (n + 1) / 2, || format!("length {}", l.length()))
        });
    }
    for n in 1..=max {
        let m = ming_digraph(n).map(|g| sw.prepare(g));
        sw.check(format!("M({}) is isomorphic to C({})", n, n), || {
            let c = lib(c_lattice(n))?;
            let m = lib(m)?;
            let f = lib(find_isomorphism(c.diagram(), &m))?;
            ensure(is_isomorphism(c.diagram(), &m, &f), || "search returned a non-isomorphism".into())
        });
    }
    if max >= 4 {
        let m = ming_digraph(4).map(|g| sw.prepare(g));
        sw.check("snake instance 4,4,1,0 -> 1,0,0,0 by BFS and by the lattice formula", || {
            let (s, t) = ("4,4,1,0".parse().unwrap(), "1,0,0,0".parse().unwrap());
            let bfs = lib(lib(m)?.bfs_distance(&s, &t))?;
            let sol = lib(solve_snakes(4, &s, &t, Via::Join))?;
            ensure(sol.distance == bfs, || format!("formula {} vs BFS {}", sol.distance, bfs))
        });
    }
}

/// Per-suite pass and fail counts.
pub fn summary(report: &Report) -> BTreeMap<String, (usize, usize)> {
    let mut out = BTreeMap::new();
    for c in &report.checks {
        let e = out.entry(c.suite.to_string()).or_insert((0, 0));
        if c.passed {
            e.0 += 1
        } else {
            e.1 += 1
        }
    }
    out
}
