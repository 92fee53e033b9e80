mod common;

use bousfield_core::family::*;
use bousfield_core::{canonical, ChainFamily, Poset, Subset, SubsetTuple};
use common::*;
use proptest::prelude::*;

fn arb_family(p: &Poset, max_gens: usize) -> impl Strategy<Value = ChainFamily> {
    let chains = all_chains(p);
    let p = p.clone();
    proptest::collection::vec(proptest::sample::select(chains), 0..=max_gens)
        .prop_map(move |gens| family_of(&p, &gens))
}

fn poset_and_families(n: usize) -> impl Strategy<Value = (Poset, ChainFamily, ChainFamily, ChainFamily)> {
    arb_poset(n).prop_flat_map(|p| {
        let (u, v, w) = (arb_family(&p, 2), arb_family(&p, 2), arb_family(&p, 2));
        (Just(p), u, v, w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn family_matches_oracle((p, t) in arb_poset_tuple(5, 3)) {
        let f = thread_set_family(&p, &t);
        prop_assert_eq!(generators(&f), brute_family(&p, &t));
    }

    #[test]
    fn threads_match_oracle((p, t) in arb_poset_tuple(5, 3)) {
        let got: Vec<Vec<usize>> = threads(&p, &t).map(|th| th.sequence().to_vec()).collect();
        let mut want = brute_threads(&p, &t);
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn decomposition((p, t) in arb_poset_tuple(4, 3)) {
        let mut acc = w(&p, t.parts()[0]).unwrap();
        for &a in &t.parts()[1..] {
            acc = star(&p, &acc, &w(&p, a).unwrap());
        }
        prop_assert_eq!(acc, thread_set_family(&p, &t));
    }

    #[test]
    fn concatenation_law((p, t) in arb_poset_tuple(4, 4)) {
        for split in 1..t.len() {
            let l = t.slice(0..split).unwrap();
            let r = t.slice(split..t.len()).unwrap();
            prop_assert_eq!(
                star(&p, &thread_set_family(&p, &l), &thread_set_family(&p, &r)),
                thread_set_family(&p, &t)
            );
        }
    }

    #[test]
    fn star_matches_definition((p, u, v, _w) in poset_and_families(4)) {
        prop_assert_eq!(generators(&star(&p, &u, &v)), brute_star(&p, &u, &v));
    }

    #[test]
    fn star_associative((p, u, v, x) in poset_and_families(5)) {
        prop_assert_eq!(
            star(&p, &star(&p, &u, &v), &x),
            star(&p, &u, &star(&p, &v, &x))
        );
    }

    #[test]
    fn upward_closed_membership((p, t) in arb_poset_tuple(5, 3)) {
        let f = thread_set_family(&p, &t);
        let chains = all_chains(&p);
        for &c in &chains {
            if f.contains(chain_of(&p, c)) {
                for &d in &chains {
                    if c.is_subset(d) {
                        prop_assert!(f.contains(chain_of(&p, d)));
                    }
                }
            }
        }
    }

    #[test]
    fn generators_are_canonical((p, t) in arb_poset_tuple(5, 3)) {
        let f = thread_set_family(&p, &t);
        let ext = extension(&p, &f);
        prop_assert_eq!(generators(&f), minimal(&ext));
        let gens = generators(&f);
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                prop_assert!(!a.is_subset(*b) && !b.is_subset(*a));
            }
        }
    }

    #[test]
    fn zero_iff_empty((p, t) in arb_poset_tuple(5, 4)) {
        prop_assert_eq!(thread_set_family(&p, &t).is_empty(), canonical(&p, &t).is_zero());
    }

    #[test]
    fn reduction_shadows((p, t) in arb_poset_tuple(5, 2)) {
        prop_assume!(t.len() == 2);
        let (a, b) = (t.parts()[0], t.parts()[1]);
        let f = thread_set_family(&p, &t);
        let a2 = a & p.cofamily_geq(b).unwrap();
        let b2 = b & p.family_leq(a).unwrap();
        prop_assert_eq!(thread_set_family(&p, &SubsetTuple::new(&p, vec![a2, b]).unwrap()), f.clone());
        prop_assert_eq!(thread_set_family(&p, &SubsetTuple::new(&p, vec![a, b2]).unwrap()), f);
    }
}

#[test]
fn w_is_family_of_one_tuple() {
    for n in 1..=5 {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let rel: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let p = Poset::from_indices(names, &rel).unwrap();
        for bits in 0..1u64 << n {
            let a = Subset::from_bits(bits);
            let t = SubsetTuple::new(&p, vec![a]).unwrap();
            assert_eq!(w(&p, a).unwrap(), thread_set_family(&p, &t));
        }
    }
}

#[test]
fn phi_gives_principal_family() {
    let p = Poset::new(
        ["t", "a", "b", "m", "x"],
        &[("a", "t"), ("b", "t"), ("m", "a"), ("m", "b")],
    )
    .unwrap();
    for c in all_chains(&p) {
        let ch = chain_of(&p, c);
        let t = phi_tuple(&p, ch).unwrap();
        assert_eq!(thread_set_family(&p, &t), principal(ch).unwrap());
    }
}
