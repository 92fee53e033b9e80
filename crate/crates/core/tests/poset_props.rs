mod common;

use bousfield_core::{Poset, Subset};
use common::*;
use proptest::prelude::*;

fn arb_poset_subsets(n: usize) -> impl Strategy<Value = (Poset, Subset, Subset)> {
    arb_poset(n).prop_flat_map(|p| {
        let m = 1u64 << p.len();
        (Just(p), 0..m, 0..m).prop_map(|(p, a, b)| (p, Subset::from_bits(a), Subset::from_bits(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_operators((p, s, t) in arb_poset_subsets(6)) {
        let down = p.family_leq(s).unwrap();
        let up = p.cofamily_geq(s).unwrap();
        prop_assert!(s.is_subset(down) && s.is_subset(up));
        prop_assert_eq!(p.family_leq(down).unwrap(), down);
        prop_assert_eq!(p.cofamily_geq(up).unwrap(), up);
        let big = s | t;
        prop_assert!(down.is_subset(p.family_leq(big).unwrap()));
        prop_assert!(up.is_subset(p.cofamily_geq(big).unwrap()));
        prop_assert_eq!(p.not_leq(s).unwrap(), p.universe() - down);
        prop_assert_eq!(p.not_geq(s).unwrap(), p.universe() - up);
    }

    #[test]
    fn closed_complement((p, s, _t) in arb_poset_subsets(6)) {
        prop_assert_eq!(
            p.is_downward_closed(s).unwrap(),
            p.is_upward_closed(p.universe() - s).unwrap()
        );
    }

    #[test]
    fn chains_match_filter(p in arb_poset(6)) {
        let mut got: Vec<Subset> = p.chains().map(|c| c.members()).collect();
        got.sort();
        let mut want = all_chains(&p);
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn dimension_is_max_length(p in arb_poset(6)) {
        let max_len = (0..p.len()).map(|i| p.length(i).unwrap()).max().unwrap();
        prop_assert_eq!(p.dimension(), max_len as isize);
        let longest = all_chains(&p).iter().map(|c| c.len()).max().unwrap();
        prop_assert_eq!(p.dimension(), longest as isize - 1);
    }

    #[test]
    fn covers_generate_order(p in arb_poset(6)) {
        let q = Poset::from_indices(p.names().to_vec(), p.covers()).unwrap();
        prop_assert_eq!(q, p.clone());
        for &(a, b) in p.covers() {
            prop_assert!(p.lt(a, b));
            for c in 0..p.len() {
                prop_assert!(!(p.lt(a, c) && p.lt(c, b)));
            }
        }
    }
}
