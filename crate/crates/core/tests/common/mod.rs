//! Brute-force oracles, written without the library's fast paths.
#![allow(dead_code)]

use bousfield_core::{Chain, ChainFamily, Poset, Subset, SubsetTuple};
use proptest::prelude::*;

/// Every sequence `a1 >= .. >= ak` with `ai ∈ Ai`, by full cartesian
/// product.
pub fn brute_threads(p: &Poset, t: &SubsetTuple) -> Vec<Vec<usize>> {
    let mut seqs: Vec<Vec<usize>> = vec![vec![]];
    for part in t.parts() {
        let mut next = Vec::new();
        for s in &seqs {
            for a in part.iter() {
                let mut s2 = s.clone();
                s2.push(a);
                next.push(s2);
            }
        }
        seqs = next;
    }
    seqs.retain(|s| s.windows(2).all(|w| p.leq(w[1], w[0])));
    seqs
}

/// All non-empty chains of `p`, by filtering every subset.
pub fn all_chains(p: &Poset) -> Vec<Subset> {
    (1u64..1 << p.len())
        .map(Subset::from_bits)
        .filter(|&s| s.iter().all(|a| s.iter().all(|b| p.leq(a, b) || p.leq(b, a))))
        .collect()
}

/// Minimal members of an explicit list of sets.
pub fn minimal(sets: &[Subset]) -> Vec<Subset> {
    let mut out: Vec<Subset> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&x| x != s && x.is_subset(s)))
        .collect();
    out.sort_by(|a, b| a.cmp_lex(*b));
    out.dedup();
    out
}

pub fn generators(f: &ChainFamily) -> Vec<Subset> {
    f.generators().iter().map(|g| g.members()).collect()
}

/// `T(t)` as the minimal chains containing the members of some thread.
pub fn brute_family(p: &Poset, t: &SubsetTuple) -> Vec<Subset> {
    let supports: Vec<Subset> = brute_threads(p, t)
        .iter()
        .map(|s| s.iter().copied().collect())
        .collect();
    let members: Vec<Subset> = all_chains(p)
        .into_iter()
        .filter(|&c| supports.iter().any(|s| s.is_subset(c)))
        .collect();
    minimal(&members)
}

/// Full extension of a family over the chains of `p`.
pub fn extension(p: &Poset, f: &ChainFamily) -> Vec<Subset> {
    all_chains(p)
        .into_iter()
        .filter(|&c| f.contains(p.chain(c).unwrap()))
        .collect()
}

/// `U * V` from the definition, over full extensions.
pub fn brute_star(p: &Poset, u: &ChainFamily, v: &ChainFamily) -> Vec<Subset> {
    let eu = extension(p, u);
    let ev = extension(p, v);
    let mut out = Vec::new();
    for &c in &eu {
        for &d in &ev {
            if c.iter().all(|x| d.iter().all(|y| p.leq(y, x))) {
                out.push(c | d);
            }
        }
    }
    minimal(&out)
}

pub fn family_of(p: &Poset, sets: &[Subset]) -> ChainFamily {
    ChainFamily::from_chains(sets.iter().map(|&s| p.chain(s).unwrap()))
}

pub fn chain_of(p: &Poset, s: Subset) -> Chain {
    p.chain(s).unwrap()
}

/// Posets on up to `max_n` elements: relations only go from lower to higher
/// index, so the result is acyclic, and closure fills in transitivity.
pub fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let rel: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&r, _)| r)
                .collect();
            let names = (0..n).map(|i| format!("x{i}")).collect();
            Poset::from_indices(names, &rel).unwrap()
        })
    })
}

pub fn arb_tuple(p: &Poset, max_k: usize) -> impl Strategy<Value = SubsetTuple> {
    let n = p.len();
    let p = p.clone();
    proptest::collection::vec(0u64..1 << n, 1..=max_k).prop_map(move |bits| {
        SubsetTuple::new(&p, bits.into_iter().map(Subset::from_bits).collect()).unwrap()
    })
}

pub fn arb_poset_tuple(max_n: usize, max_k: usize) -> impl Strategy<Value = (Poset, SubsetTuple)> {
    arb_poset(max_n).prop_flat_map(move |p| {
        let t = arb_tuple(&p, max_k);
        (Just(p), t)
    })
}
