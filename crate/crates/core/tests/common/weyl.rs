use std::collections::BTreeMap;

use itertools::Itertools;
use latpuzzle_core::poly::LaurentPoly;
use latpuzzle_core::weyl::Family;

pub type Poly = BTreeMap<Vec<i64>, i64>;

/// Doubled e-coordinates of a weight given in ω-coordinates.
pub fn to_e2(family: Family, mu: &[i64]) -> Vec<i64> {
    let n = mu.len();
    (0..n)
        .map(|j| {
            (j..n)
                .map(|i| {
                    let half_spin = family == Family::B && i == n - 1;
                    mu[i] * if half_spin { 1 } else { 2 }
                })
                .sum()
        })
        .collect()
}

fn perm_sign(p: &[usize]) -> i64 {
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Σ det(w) e^{w v} over signed permutations, the common Weyl group of B_n and C_n.
pub fn alternant(v: &[i64]) -> Poly {
    let n = v.len();
    let mut out = Poly::new();
    for p in (0..n).permutations(n) {
        for flips in 0u32..1 << n {
            let image: Vec<i64> = (0..n).map(|i| if flips >> i & 1 == 1 { -v[p[i]] } else { v[p[i]] }).collect();
            let det = perm_sign(&p) * if flips.count_ones() % 2 == 0 { 1 } else { -1 };
            *out.entry(image).or_default() += det;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            let z: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(z).or_default() += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn in_e2(family: Family, x: &LaurentPoly) -> Poly {
    x.terms().iter().map(|(mu, c)| (to_e2(family, &mu.0), i64::try_from(c.clone()).unwrap())).collect()
}

/// A(e^ρ) · X = A(e^{λ+ρ}), computed without the library's group or alternant.
pub fn weyl_identity(family: Family, lambda: &[i64], x: &LaurentPoly) -> bool {
    let n = lambda.len();
    let rho = to_e2(family, &vec![1; n]);
    let shifted: Vec<i64> = lambda.iter().map(|l| l + 1).collect();
    mul(&alternant(&rho), &in_e2(family, x)) == alternant(&to_e2(family, &shifted))
}
