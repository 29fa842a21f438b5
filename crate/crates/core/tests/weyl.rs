mod common;

use latpuzzle_core::catalan::c_lattice;
use latpuzzle_core::minuscule::{z_digraph, z_lattice};
use latpuzzle_core::poly::WeightVector;
use latpuzzle_core::symplectic::{a_lattice, dec_lattice, kn_lattice, tilde_c_lattice};
use latpuzzle_core::weyl::{
    bialternant_check, closed_rgf_b, closed_rgf_c, is_structured, orbit, product_formula, rgf, root_data, w_invariant,
    weyl_group, wgf, Family, DEFAULT_GROUP_CAP,
};
use latpuzzle_core::{DiamondLattice, Vertex};
use num_bigint::BigInt;

use common::weyl::weyl_identity;
use common::{rank_counts, symmetric_unimodal};

fn fundamental(n: usize, k: usize) -> Vec<i64> {
    (1..=n).map(|i| (i == k) as i64).collect()
}

fn check_rgf<V: Vertex>(l: &DiamondLattice<V>) -> Vec<u64> {
    let counts = rank_counts(l.diagram());
    let lib: Vec<u64> = rgf(l).coeffs().iter().map(|c| u64::try_from(c.clone()).unwrap()).collect();
    assert_eq!(counts, lib);
    counts
}

#[test]
fn group_orders() {
    for family in [Family::B, Family::C] {
        for n in 2..=4 {
            let phi = root_data(family, n).unwrap();
            let w = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
            let factorial: usize = (1..=n).product();
            assert_eq!(w.len(), (1 << n) * factorial);
            assert_eq!(w.iter().filter(|g| g.sign == 1).count(), w.len() / 2);
        }
    }
    assert!(weyl_group(&root_data(Family::B, 4).unwrap(), 100).is_err());
}

#[test]
fn z_is_the_spin_orbit() {
    for n in 2..=4 {
        let phi = root_data(Family::B, n).unwrap();
        let x = wgf(&z_digraph(n).unwrap(), n).unwrap();
        let orb = orbit(&phi, &WeightVector(fundamental(n, n)));
        assert_eq!(orb.len(), 1 << n);
        assert_eq!(x.len(), orb.len());
        assert!(x.terms().iter().all(|(mu, c)| orb.contains(mu) && *c == BigInt::from(1)));
        assert!(w_invariant(&phi, &x));
        assert!(weyl_identity(Family::B, &fundamental(n, n), &x), "B{}", n);
        let group = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
        assert!(bialternant_check(&phi, &group, &WeightVector(fundamental(n, n)), &x));
    }
}

#[test]
fn z_is_structured() {
    for n in 2..=6 {
        let phi = root_data(Family::B, n).unwrap();
        assert!(is_structured(&z_digraph(n).unwrap(), &phi).unwrap(), "n = {}", n);
    }
}

#[test]
fn symplectic_lattices_split_fundamentals() {
    for n in 2..=3 {
        let phi = root_data(Family::C, n).unwrap();
        let group = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
        for k in 1..=n {
            let lambda = fundamental(n, k);
            for l in [kn_lattice(k, n).unwrap(), dec_lattice(k, n).unwrap()] {
                assert!(is_structured(l.diagram(), &phi).unwrap());
                let x = wgf(l.diagram(), n).unwrap();
                assert!(weyl_identity(Family::C, &lambda, &x), "C{} ω{}", n, k);
                assert!(bialternant_check(&phi, &group, &WeightVector(lambda.clone()), &x));
            }
        }
    }
}

#[test]
fn a_wrong_weight_breaks_the_identity() {
    let x = wgf(&z_digraph(3).unwrap(), 3).unwrap();
    let mut bad = x.clone();
    bad.add_term(WeightVector(vec![0, 0, 1]), BigInt::from(1));
    assert!(!weyl_identity(Family::B, &fundamental(3, 3), &bad));
    let phi = root_data(Family::B, 3).unwrap();
    assert!(!w_invariant(&phi, &bad));
}

#[test]
fn product_formula_matches_lattices() {
    for n in 2..=6 {
        let phi = root_data(Family::B, n).unwrap();
        let pf = product_formula(&phi, &WeightVector(fundamental(n, n))).unwrap();
        let l = z_lattice(n).unwrap();
        assert_eq!(pf.rgf, rgf(&l));
        assert_eq!(pf.rgf, closed_rgf_b(n));
        assert_eq!(pf.card, BigInt::from(l.len()));
        assert_eq!(pf.length, (n * (n + 1) / 2) as i64);
    }
    for n in 2..=4 {
        let phi = root_data(Family::C, n).unwrap();
        for k in 1..=n {
            let pf = product_formula(&phi, &WeightVector(fundamental(n, k))).unwrap();
            let l = kn_lattice(k, n).unwrap();
            assert_eq!(pf.rgf, rgf(&l));
            assert_eq!(pf.rgf, closed_rgf_c(n, k).unwrap());
            assert_eq!(pf.card, BigInt::from(l.len()));
            assert_eq!(pf.length, (k * (2 * n - k)) as i64);
        }
    }
}

#[test]
fn bundled_lattices_are_rank_symmetric_and_unimodal() {
    for n in 2..=7 {
        assert!(symmetric_unimodal(&check_rgf(&z_lattice(n).unwrap())), "Z({})", n);
    }
    for n in 1..=4 {
        for k in 1..=n {
            for (name, l) in [
                ("KN", kn_lattice(k, n).unwrap()),
                ("DeC", dec_lattice(k, n).unwrap()),
                ("A", a_lattice(k, n).unwrap()),
                ("tilde C", tilde_c_lattice(k, n).unwrap()),
            ] {
                assert!(symmetric_unimodal(&check_rgf(&l)), "{} k={} n={}", name, k, n);
            }
        }
    }
}

#[test]
fn catalan_lattices_are_not_rank_symmetric() {
    assert_eq!(check_rgf(&c_lattice(1).unwrap()), vec![1, 1]);
    assert_eq!(check_rgf(&c_lattice(2).unwrap()), vec![1, 1, 2, 1]);
    for n in 2..=6 {
        let c = check_rgf(&c_lattice(n).unwrap());
        assert!(!c.iter().eq(c.iter().rev()), "C({})", n);
    }
}
