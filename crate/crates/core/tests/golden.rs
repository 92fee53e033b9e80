//! Worked examples with known answers.
mod common;

use bousfield_core::catalog::{catalog, two_chains};
use bousfield_core::family::{star, threads, w};
use bousfield_core::tuple::{delta, is_collapsed, is_concatenated};
use bousfield_core::{canonical, thread_set_family, Poset, Subset, SubsetTuple};
use common::*;

fn tup(p: &Poset, parts: &[&[&str]]) -> SubsetTuple {
    SubsetTuple::from_names(p, parts).unwrap()
}

#[test]
fn delta_of_collapsed_pair_is_not_collapsed() {
    let p = Poset::new(["p", "q", "r"], &[]).unwrap();
    let t = tup(&p, &[&["p", "r"], &["q", "r"]]);
    assert!(is_collapsed(&t));
    let d = delta(&p, &t);
    assert_eq!(d, tup(&p, &[&["r"], &["r"]]));
    assert!(!is_collapsed(&d));
    assert_eq!(canonical(&p, &t), tup(&p, &[&["r"]]));
}

#[test]
fn triple_and_pair_share_thread_sets() {
    let e = two_chains();
    let p = &e.poset;
    let triple = thread_set_family(p, e.tuple("triple").unwrap());
    let pair = thread_set_family(p, e.tuple("pair").unwrap());
    assert_eq!(triple, pair);
    let want = vec![p.subset(&["p1", "p2"]).unwrap(), p.subset(&["q1", "q2"]).unwrap()];
    assert_eq!(generators(&triple), want);
    assert_eq!(generators(&triple), brute_family(p, e.tuple("triple").unwrap()));
}

#[test]
fn zariski_example_threads_and_reduction() {
    let e = catalog("zariski_xy", &[2, 2]).unwrap();
    let p = &e.poset;
    let example = e.tuple("example").unwrap();
    let reduced = e.tuple("reduced").unwrap();
    assert_eq!(thread_set_family(p, example), thread_set_family(p, reduced));

    let idx = |s: &str| p.index_of(s).unwrap();
    let (x, y, o) = (idx("X"), idx("Y"), idx("O"));
    let a: Vec<usize> = ["a1", "a2"].iter().map(|s| idx(s)).collect();
    let b: Vec<usize> = ["b1", "b2"].iter().map(|s| idx(s)).collect();
    // Three shapes, with O as the parameter-zero member of each family:
    // (X, X, a_mu), (X, O, O) and (Y, b_lambda, b_lambda).
    let mut want: Vec<Vec<usize>> = Vec::new();
    for &am in a.iter().chain([&o]) {
        want.push(vec![x, x, am]);
    }
    want.push(vec![x, o, o]);
    for &bl in b.iter().chain([&o]) {
        want.push(vec![y, bl, bl]);
    }
    want.sort();
    let got: Vec<Vec<usize>> = threads(p, example).map(|t| t.sequence().to_vec()).collect();
    assert_eq!(got, want);
}

#[test]
fn torus_tuple_reduces_to_outer_parts() {
    for n in 0..=4 {
        let e = catalog("torus2", &[n]).unwrap();
        let p = &e.poset;
        let full = e.tuple("full").unwrap();
        assert!(is_collapsed(full) && is_concatenated(p, full));
        assert_eq!(
            thread_set_family(p, full),
            thread_set_family(p, e.tuple("reduced").unwrap())
        );
    }
}

fn diamond_identities(k: usize) {
    let e = catalog("diamond", &[k]).unwrap();
    let p = &e.poset;
    let t = Subset::singleton(p.index_of("t").unwrap());
    let m = Subset::singleton(p.index_of("m").unwrap());
    let mid = p.universe() - t - m;
    let tf = |parts: Vec<Subset>| thread_set_family(p, &SubsetTuple::new(p, parts).unwrap());
    for a in 0..1u64 << p.len() {
        let a = Subset::from_bits(a);
        if !a.is_subset(mid) {
            continue;
        }
        for b in 0..1u64 << p.len() {
            let b = Subset::from_bits(b);
            if !b.is_subset(mid) {
                continue;
            }
            let ab = a & b;
            assert_eq!(tf(vec![t | a | m, t | b | m]), tf(vec![t | ab | m]));
            assert_eq!(tf(vec![t | a, t | b | m]), tf(vec![t | a, t | ab | m]));
            assert_eq!(tf(vec![t | a | m, b | m]), tf(vec![t | ab | m, b | m]));
            assert_eq!(tf(vec![t | a, t | ab | m, b | m]), tf(vec![t | a, b | m]));
        }
    }
}

#[test]
fn diamond_thread_set_identities() {
    for k in 1..=3 {
        diamond_identities(k);
    }
}

#[test]
fn chromatic_tuples_are_distinct_and_canonical() {
    let e = catalog("chromatic", &[3]).unwrap();
    let p = &e.poset;
    let mut seen = Vec::new();
    for (_, t) in &e.tuples {
        assert_eq!(&canonical(p, t), t);
        let f = thread_set_family(p, t);
        assert!(!seen.contains(&f));
        seen.push(f);
    }
}

#[test]
fn star_of_singletons_on_chain() {
    let p = Poset::new(["0", "1"], &[("0", "1")]).unwrap();
    let f = star(&p, &w(&p, p.subset(&["1"]).unwrap()).unwrap(), &w(&p, p.subset(&["0"]).unwrap()).unwrap());
    assert_eq!(generators(&f), vec![p.universe()]);
}
