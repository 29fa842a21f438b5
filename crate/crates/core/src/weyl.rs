//! Root data for `B_n` and `C_n`, combinatorial weights of colored posets,
//! generating functions, and Weyl-group oracles for the splitting property.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::digraph::{ColoredDigraph, Vertex};
use crate::error::{Error, Result};
use crate::lattice::DiamondLattice;
use crate::poly::{qbinomial, shifted_product, LaurentPoly, QPolynomial, WeightVector};

pub const DEFAULT_GROUP_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    B,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::C => "C",
        })
    }
}

type Vector = Vec<i64>;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cartan data together with the standard Euclidean realization.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub family: Family,
    pub n: usize,
    /// `cartan[i][j] = <α_i, α_j^∨>`.
    pub cartan: Vec<Vec<i64>>,
    /// `α_i` in ω-coordinates (row `i` of the Cartan matrix).
    pub simple_roots_omega: Vec<WeightVector>,
    /// `α_i` in the `e`-basis.
    pub simple_roots_euclid: Vec<Vector>,
    /// `2ω_i` in the `e`-basis.
    pub omega2_euclid: Vec<Vector>,
    /// Positive roots in the `e`-basis.
    pub positive_roots: Vec<Vector>,
}

pub fn root_data(family: Family, n: usize) -> Result<RootSystemData> {
    if n < 2 {
        return Err(Error::Unsupported(format!("rank {} root system", n)));
    }
    let e = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let sub = |a: Vector, b: Vector| a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vector>();
    let add = |a: Vector, b: Vector| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vector>();
    let long_last = match family {
        Family::B => 1,
        Family::C => 2,
    };
    let mut simple: Vec<Vector> = (0..n - 1).map(|i| sub(e(i), e(i + 1))).collect();
    simple.push(e(n - 1).iter().map(|x| x * long_last).collect());
    let mut positive = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            positive.push(sub(e(i), e(j)));
            positive.push(add(e(i), e(j)));
        }
        positive.push(e(i).iter().map(|x| x * long_last).collect());
    }
    let omega2: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v: Vector = (0..n).map(|j| if j <= i { 2 } else { 0 }).collect();
            if family == Family::B && i == n - 1 {
                v = vec![1; n];
            }
            v
        })
        .collect();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j])).collect())
        .collect();
    let data = RootSystemData {
        family,
        n,
        simple_roots_omega: cartan.iter().map(|r| WeightVector(r.clone())).collect(),
        cartan,
        simple_roots_euclid: simple,
        omega2_euclid: omega2,
        positive_roots: positive,
    };
    for i in 0..n {
        for j in 0..n {
            if data.pair2(&data.omega2_euclid[i], &data.simple_roots_euclid[j])? != (i == j) as i64 {
                return Err(Error::Inconsistent("fundamental weights are not dual to simple coroots".into()));
            }
        }
    }
    Ok(data)
}

impl RootSystemData {
    pub fn rho(&self) -> WeightVector {
        WeightVector(vec![1; self.n])
    }

    /// `<λ, α^∨>` from `2λ` in the `e`-basis.
    fn pair2(&self, lambda2: &[i64], alpha: &[i64]) -> Result<i64> {
        let num = dot(lambda2, alpha);
        let den = dot(alpha, alpha);
        if num % den != 0 {
            return Err(Error::Inconsistent("non-integral coroot pairing".into()));
        }
        Ok(num / den)
    }

    /// `2λ` in the `e`-basis.
    pub fn euclid2(&self, lambda: &WeightVector) -> Vector {
        let mut v = vec![0; self.n];
        for (c, w) in lambda.0.iter().zip(&self.omega2_euclid) {
            for (x, y) in v.iter_mut().zip(w) {
                *x += c * y;
            }
        }
        v
    }

    /// `<λ, α^∨>` for each positive root `α`.
    pub fn coroot_pairings(&self, lambda: &WeightVector) -> Result<Vec<i64>> {
        let l2 = self.euclid2(lambda);
        self.positive_roots.iter().map(|a| self.pair2(&l2, a)).collect()
    }

    /// `Σ α^∨` over positive roots, i.e. `2ϱ^∨`, in the `e`-basis.
    pub fn two_rho_vee(&self) -> Vector {
        let mut v = vec![0; self.n];
        for a in &self.positive_roots {
            let len = dot(a, a);
            for (x, y) in v.iter_mut().zip(a) {
                *x += 2 * y / len;
            }
        }
        v
    }

    /// `s_i.μ = μ - μ_i α_i`.
    pub fn reflect(&self, i: usize, mu: &WeightVector) -> WeightVector {
        &mu.clone() - &self.simple_roots_omega[i].scale(mu.0[i])
    }

    fn generator(&self, i: usize) -> GroupElement {
        let n = self.n;
        let mut m: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
        for (j, row) in m.iter_mut().enumerate() {
            row[i] -= self.cartan[i][j];
        }
        GroupElement { matrix: m, sign: -1 }
    }
}

/// A Weyl group element acting on ω-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub matrix: Vec<Vec<i64>>,
    pub sign: i64,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        Self { matrix: (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect(), sign: 1 }
    }

    pub fn apply(&self, mu: &WeightVector) -> WeightVector {
        WeightVector(self.matrix.iter().map(|row| dot(row, &mu.0)).collect())
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let n = self.matrix.len();
        let matrix = (0..n)
            .map(|r| (0..n).map(|c| (0..n).map(|k| self.matrix[r][k] * other.matrix[k][c]).sum()).collect())
            .collect();
        GroupElement { matrix, sign: self.sign * other.sign }
    }
}

/// All group elements, by closure under left multiplication by generators.
pub fn weyl_group(phi: &RootSystemData, cap: usize) -> Result<Vec<GroupElement>> {
    let gens: Vec<GroupElement> = (0..phi.n).map(|i| phi.generator(i)).collect();
    let id = GroupElement::identity(phi.n);
    let mut seen: HashMap<Vec<Vec<i64>>, i64> = HashMap::from([(id.matrix.clone(), 1)]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = s.compose(&g);
            if let Some(&sign) = seen.get(&h.matrix) {
                if sign != h.sign {
                    return Err(Error::Inconsistent("sign is not a homomorphism".into()));
                }
                continue;
            }
            if out.len() >= cap {
                return Err(Error::CapExceeded { what: "Weyl group order", cap });
            }
            seen.insert(h.matrix.clone(), h.sign);
            out.push(h.clone());
            queue.push_back(h);
        }
    }
    Ok(out)
}

/// Orbit of `lambda` under the generators, by saturation.
pub fn orbit(phi: &RootSystemData, lambda: &WeightVector) -> BTreeSet<WeightVector> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..phi.n {
            let nu = phi.reflect(i, &mu);
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen
}

/// `Σ_w det(w) z^{w.μ}`.
pub fn alternant(group: &[GroupElement], mu: &WeightVector) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for g in group {
        out.add_term(g.apply(mu), BigInt::from(g.sign));
    }
    out
}

/// `A(z^ϱ) · X = A(z^{λ+ϱ})`.
pub fn bialternant_check(phi: &RootSystemData, group: &[GroupElement], lambda: &WeightVector, x: &LaurentPoly) -> bool {
    let rho = phi.rho();
    &alternant(group, &rho) * x == alternant(group, &(lambda + &rho))
}

/// Invariance of `x` under every simple reflection.
pub fn w_invariant(phi: &RootSystemData, x: &LaurentPoly) -> bool {
    (0..phi.n).all(|i| x.map_exponents(|mu| phi.reflect(i, mu)) == *x)
}

/// Rank within the color-`i` component minus depth, for every vertex and color.
pub fn poset_weights<V: Vertex>(g: &ColoredDigraph<V>, n: usize) -> Result<Vec<WeightVector>> {
    if let Some(&c) = g.colors().iter().find(|&&c| c as usize > n) {
        return Err(Error::Unsupported(format!("color {} exceeds rank {}", c, n)));
    }
    let mut weights = vec![WeightVector::zero(n); g.len()];
    for color in 1..=n as u32 {
        let mut level: Vec<Option<i64>> = vec![None; g.len()];
        for start in 0..g.len() {
            if level[start].is_some() {
                continue;
            }
            level[start] = Some(0);
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                let lu = level[u].unwrap();
                for (w, c, up) in g.neighbors(u) {
                    if c != color {
                        continue;
                    }
                    let want = if up { lu + 1 } else { lu - 1 };
                    match level[w] {
                        None => {
                            level[w] = Some(want);
                            comp.push(w);
                        }
                        Some(x) if x != want => return Err(Error::UnrankedComponent { color }),
                        Some(_) => {}
                    }
                }
            }
            let lo = comp.iter().map(|&u| level[u].unwrap()).min().unwrap();
            let hi = comp.iter().map(|&u| level[u].unwrap()).max().unwrap();
            for &u in &comp {
                let r = level[u].unwrap() - lo;
                weights[u].0[color as usize - 1] = 2 * r - (hi - lo);
            }
        }
    }
    Ok(weights)
}

/// Every color-`i` edge raises the weight by `α_i`.
pub fn is_structured<V: Vertex>(g: &ColoredDigraph<V>, phi: &RootSystemData) -> Result<bool> {
    let w = poset_weights(g, phi.n)?;
    Ok(g.edges().iter().all(|e| &w[e.target] - &w[e.source] == phi.simple_roots_omega[e.color as usize - 1]))
}

pub fn wgf<V: Vertex>(g: &ColoredDigraph<V>, n: usize) -> Result<LaurentPoly> {
    Ok(poset_weights(g, n)?.into_iter().collect())
}

pub fn rgf<V: Vertex>(l: &DiamondLattice<V>) -> QPolynomial {
    let mut c = vec![BigInt::zero(); l.length() as usize + 1];
    for &r in l.ranks() {
        c[r as usize] += 1;
    }
    QPolynomial::new(c)
}

/// Closed type-B form `∏ (1 + q^i)`.
pub fn closed_rgf_b(n: usize) -> QPolynomial {
    shifted_product(n)
}

/// `(1 - q^{2n+2-2k}) / (1 - q^{2n+2-k}) · [2n+1 choose k]_q`.
pub fn closed_rgf_c(n: usize, k: usize) -> Result<QPolynomial> {
    let num = &QPolynomial::binomial(2 * n + 2 - 2 * k, -1) * &qbinomial(2 * n + 1, k)?;
    num.div_exact(&QPolynomial::binomial(2 * n + 2 - k, -1))
}

/// `(2n+2-2k) / (2n+2-k) · C(2n+1, k)`.
pub fn closed_card_c(n: usize, k: usize) -> Result<BigInt> {
    let binom = (0..k).fold(BigInt::one(), |acc, i| acc * (2 * n + 1 - i) / (i + 1));
    let num = binom * (2 * n + 2 - 2 * k);
    let den = BigInt::from(2 * n + 2 - k);
    if !(&num % &den).is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(num / den)
}

/// Rank generating function, cardinality, and length predicted by the
/// product over positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFormula {
    pub rgf: QPolynomial,
    pub card: BigInt,
    pub length: i64,
}

pub fn product_formula(phi: &RootSystemData, lambda: &WeightVector) -> Result<ProductFormula> {
    let shifted = phi.coroot_pairings(&(lambda + &phi.rho()))?;
    let base = phi.coroot_pairings(&phi.rho())?;
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    let mut cnum = BigInt::one();
    let mut cden = BigInt::one();
    for (&a, &b) in shifted.iter().zip(&base) {
        num = &num * &QPolynomial::binomial(a as usize, -1);
        den = &den * &QPolynomial::binomial(b as usize, -1);
        cnum *= a;
        cden *= b;
    }
    if !(&cnum % &cden).is_zero() {
        return Err(Error::InexactDivision);
    }
    let length: i64 = phi.coroot_pairings(lambda)?.iter().sum();
    let via_rho_vee = dot(&phi.euclid2(lambda), &phi.two_rho_vee());
    if via_rho_vee != 2 * length {
        return Err(Error::Inconsistent("length formulas disagree".into()));
    }
    Ok(ProductFormula { rgf: num.div_exact(&den)?, card: cnum / cden, length })
}
