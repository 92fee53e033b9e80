//! Tuples of subsets and the reductions that preserve the iterated
//! localization they name.
//!
//! A tuple `(A1, .., Ak)` stands for the composite `L_{A1} .. L_{Ak}`. The
//! reductions are:
//!
//! * [`tau`] prunes each part to elements below something kept in the
//!   previous part, making the tuple upward concatenated;
//! * [`beta`] is the mirror image, pruning from the right;
//! * [`delta`] is their composite, keeping exactly the elements that sit on
//!   some thread;
//! * [`gamma`] drops a part whenever an adjacent part is contained in it.
//!
//! [`canonical`] is `gamma . delta`, the collapsed concatenated form.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;

/// An ordered k-tuple `(A1, .., Ak)` of subsets of a poset, `k >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetTuple {
    parts: Vec<Subset>,
}

impl SubsetTuple {
    pub fn new(poset: &Poset, parts: Vec<Subset>) -> Result<SubsetTuple> {
        if parts.is_empty() {
            return Err(Error::EmptyTuple);
        }
        for &p in &parts {
            poset.check_subset(p)?;
        }
        Ok(SubsetTuple { parts })
    }

    /// Tuple from element names, one slice per part.
    pub fn from_names<S: AsRef<str>>(poset: &Poset, parts: &[&[S]]) -> Result<SubsetTuple> {
        let parts = parts
            .iter()
            .map(|names| poset.subset(names))
            .collect::<Result<Vec<_>>>()?;
        SubsetTuple::new(poset, parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<Subset>) -> SubsetTuple {
        debug_assert!(!parts.is_empty());
        SubsetTuple { parts }
    }

    /// The 1-tuple `(∅)`: the representative of the zero functor.
    pub fn zero() -> SubsetTuple {
        SubsetTuple {
            parts: alloc::vec![Subset::EMPTY],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].is_empty()
    }

    pub fn parts(&self) -> &[Subset] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; tuples have at least one part.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `self ⧺ other`, the tuple naming the composite of both functors.
    #[must_use]
    pub fn concat(&self, other: &SubsetTuple) -> SubsetTuple {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        SubsetTuple { parts }
    }

    /// Appends one part.
    #[must_use]
    pub fn append(&self, part: Subset) -> SubsetTuple {
        let mut parts = self.parts.clone();
        parts.push(part);
        SubsetTuple { parts }
    }

    /// Parts `range` as a new tuple; `None` when the range is empty.
    pub fn slice(&self, range: core::ops::Range<usize>) -> Option<SubsetTuple> {
        let parts = self.parts.get(range)?;
        if parts.is_empty() {
            None
        } else {
            Some(SubsetTuple {
                parts: parts.to_vec(),
            })
        }
    }
}

impl fmt::Debug for SubsetTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("").field(&self.parts).finish()
    }
}

/// `A1' = A1`, `A(i+1)' = A(i+1) ∩ [<= Ai']`.
pub fn tau(poset: &Poset, t: &SubsetTuple) -> SubsetTuple {
    let mut parts = Vec::with_capacity(t.len());
    let mut prev = t.parts[0];
    parts.push(prev);
    for &a in &t.parts[1..] {
        prev = a & poset.down(prev);
        parts.push(prev);
    }
    SubsetTuple { parts }
}

/// `Bk' = Bk`, `B(i)' = B(i) ∩ [>= B(i+1)']`.
pub fn beta(poset: &Poset, t: &SubsetTuple) -> SubsetTuple {
    let mut parts = t.parts.clone();
    for i in (0..parts.len() - 1).rev() {
        let next = poset.up(parts[i + 1]);
        parts[i] &= next;
    }
    SubsetTuple { parts }
}

/// `beta . tau`, which equals `tau . beta`.
pub fn delta(poset: &Poset, t: &SubsetTuple) -> SubsetTuple {
    let d = beta(poset, &tau(poset, t));
    debug_assert_eq!(d, tau(poset, &beta(poset, t)));
    debug_assert_eq!(d, delta_explicit(poset, t));
    d
}

/// `delta` from its closed description: `Ai'` is the set of `a ∈ Ai` through
/// which some thread `a1 >= .. >= ak` passes at position `i`.
///
/// Decided element by element with a memoised search for a thread prefix
/// ending at `a` and a thread suffix starting at `a`.
pub fn delta_explicit(poset: &Poset, t: &SubsetTuple) -> SubsetTuple {
    let k = t.len();
    let n = poset.len();
    let mut prefix: Vec<Option<bool>> = alloc::vec![None; k * n];
    let mut suffix: Vec<Option<bool>> = alloc::vec![None; k * n];

    fn search(
        poset: &Poset,
        parts: &[Subset],
        memo: &mut [Option<bool>],
        n: usize,
        i: usize,
        a: usize,
        forward: bool,
    ) -> bool {
        let done = if forward { i + 1 == parts.len() } else { i == 0 };
        if done {
            return true;
        }
        if let Some(v) = memo[i * n + a] {
            return v;
        }
        let (j, candidates) = if forward {
            (i + 1, parts[i + 1] & poset.below(a))
        } else {
            (i - 1, parts[i - 1] & poset.above(a))
        };
        let found = candidates
            .iter()
            .any(|b| search(poset, parts, memo, n, j, b, forward));
        memo[i * n + a] = Some(found);
        found
    }

    let parts = t
        .parts
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            a.iter()
                .filter(|&x| {
                    search(poset, &t.parts, &mut prefix, n, i, x, false)
                        && search(poset, &t.parts, &mut suffix, n, i, x, true)
                })
                .collect()
        })
        .collect();
    SubsetTuple { parts }
}

/// All tuples reachable from `t` by one removal step of `gamma`.
///
/// For each adjacent pair where one part contains the other, the larger part
/// is removed. A 1-tuple has no successors.
pub fn gamma_steps(t: &SubsetTuple) -> Vec<SubsetTuple> {
    let mut out = Vec::new();
    for j in 0..t.len().saturating_sub(1) {
        let (a, b) = (t.parts[j], t.parts[j + 1]);
        if b.is_subset(a) {
            out.push(remove_part(t, j));
        }
        if a.is_subset(b) && a != b {
            out.push(remove_part(t, j + 1));
        }
    }
    out
}

fn remove_part(t: &SubsetTuple, j: usize) -> SubsetTuple {
    let mut parts = t.parts.clone();
    parts.remove(j);
    SubsetTuple { parts }
}

/// Removes parts that contain an adjacent part until the tuple is collapsed.
/// The result does not depend on the removal order.
pub fn gamma(t: &SubsetTuple) -> SubsetTuple {
    let mut parts = t.parts.clone();
    'scan: loop {
        for j in 0..parts.len().saturating_sub(1) {
            if parts[j + 1].is_subset(parts[j]) {
                parts.remove(j);
                continue 'scan;
            }
            if parts[j].is_subset(parts[j + 1]) {
                parts.remove(j + 1);
                continue 'scan;
            }
        }
        break;
    }
    SubsetTuple { parts }
}

/// `gamma . delta`: the collapsed concatenated representative.
///
/// A tuple without threads reduces to the zero tuple `(∅)`.
pub fn canonical(poset: &Poset, t: &SubsetTuple) -> SubsetTuple {
    gamma(&delta(poset, t))
}

/// `A(i+1) ⊆ [<= Ai]` for all `i`.
pub fn is_upward_concatenated(poset: &Poset, t: &SubsetTuple) -> bool {
    t.parts
        .windows(2)
        .all(|w| w[1].is_subset(poset.down(w[0])))
}

/// `Ai ⊆ [>= A(i+1)]` for all `i`.
pub fn is_downward_concatenated(poset: &Poset, t: &SubsetTuple) -> bool {
    t.parts.windows(2).all(|w| w[0].is_subset(poset.up(w[1])))
}

pub fn is_concatenated(poset: &Poset, t: &SubsetTuple) -> bool {
    is_upward_concatenated(poset, t) && is_downward_concatenated(poset, t)
}

/// No part is contained in an adjacent one.
pub fn is_collapsed(t: &SubsetTuple) -> bool {
    t.parts
        .windows(2)
        .all(|w| !w[0].is_subset(w[1]) && !w[1].is_subset(w[0]))
}

/// `(A1 ∩ Z, .., Ak ∩ Z)` for an upward closed `Z`.
pub fn restrict(poset: &Poset, t: &SubsetTuple, z: Subset) -> Result<SubsetTuple> {
    if !poset.is_upward_closed(z)? {
        return Err(Error::NotUpwardClosed);
    }
    Ok(SubsetTuple {
        parts: t.parts.iter().map(|&a| a & z).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tup(p: &Poset, parts: &[&[&str]]) -> SubsetTuple {
        SubsetTuple::from_names(p, parts).unwrap()
    }

    fn antichain3() -> Poset {
        Poset::new(["p", "q", "r"], &[]).unwrap()
    }

    fn chain2() -> Poset {
        Poset::new(["0", "1"], &[("0", "1")]).unwrap()
    }

    fn diamond() -> Poset {
        Poset::new(
            ["t", "a", "b", "m"],
            &[("a", "t"), ("b", "t"), ("m", "a"), ("m", "b")],
        )
        .unwrap()
    }

    fn two_chains() -> Poset {
        Poset::new(["p1", "p2", "q1", "q2"], &[("p2", "p1"), ("q2", "q1")]).unwrap()
    }

    #[test]
    fn empty_tuple_rejected() {
        let p = antichain3();
        assert_eq!(SubsetTuple::new(&p, vec![]), Err(Error::EmptyTuple));
        assert!(SubsetTuple::new(&p, vec![Subset::singleton(5)]).is_err());
    }

    #[test]
    fn tau_examples() {
        let p = Poset::new(["t", "a", "b"], &[("a", "t"), ("b", "t")]).unwrap();
        let t = tup(&p, &[&["a", "b"], &["t"]]);
        assert_eq!(tau(&p, &t), tup(&p, &[&["a", "b"], &[]]));

        let c = chain2();
        let t = tup(&c, &[&["1"], &["0"]]);
        assert_eq!(tau(&c, &t), t);
    }

    #[test]
    fn beta_examples() {
        let p = Poset::new(["t", "a", "b"], &[("a", "t"), ("b", "t")]).unwrap();
        let t = tup(&p, &[&["a"], &["t"]]);
        assert_eq!(beta(&p, &t), tup(&p, &[&[], &["t"]]));

        let c = chain2();
        let t = tup(&c, &[&["1"], &["0"]]);
        assert_eq!(beta(&c, &t), t);
    }

    #[test]
    fn delta_breaks_collapse() {
        let p = antichain3();
        let t = tup(&p, &[&["p", "r"], &["q", "r"]]);
        assert!(is_collapsed(&t));
        let d = delta(&p, &t);
        assert_eq!(d, tup(&p, &[&["r"], &["r"]]));
        assert!(!is_collapsed(&d));
        assert_eq!(canonical(&p, &t), tup(&p, &[&["r"]]));
    }

    #[test]
    fn delta_keeps_threaded_pairs() {
        let p = two_chains();
        let t = tup(&p, &[&["p1", "q1"], &["p2", "q2"]]);
        assert_eq!(delta(&p, &t), t);
        assert_eq!(delta_explicit(&p, &t), t);
    }

    #[test]
    fn gamma_examples() {
        let p = antichain3();
        assert_eq!(gamma(&tup(&p, &[&["r"], &["r"]])), tup(&p, &[&["r"]]));
        let t = tup(&p, &[&["p"], &["p", "q"], &["p"]]);
        assert_eq!(gamma(&t), tup(&p, &[&["p"]]));
        let collapsed = tup(&p, &[&["p"], &["q"], &["p"]]);
        assert_eq!(gamma(&collapsed), collapsed);
        assert!(gamma_steps(&collapsed).is_empty());
    }

    #[test]
    fn canonical_zero() {
        let c = chain2();
        let t = tup(&c, &[&["0"], &["1"]]);
        let z = canonical(&c, &t);
        assert!(z.is_zero());
        assert_eq!(z, SubsetTuple::zero());
    }

    #[test]
    fn predicates() {
        let c = Poset::new(["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        let t = tup(&c, &[&["2"], &["1"], &["0"]]);
        assert!(is_concatenated(&c, &t));
        assert!(is_collapsed(&t));
        let p = antichain3();
        assert!(!is_collapsed(&tup(&p, &[&["p"], &["p"]])));
        let one = tup(&p, &[&["p", "q"]]);
        assert!(is_upward_concatenated(&p, &one));
        assert!(is_downward_concatenated(&p, &one));
        assert!(is_concatenated(&p, &one));
        assert!(is_collapsed(&one));
    }

    #[test]
    fn restrict_examples() {
        let d = diamond();
        let t = tup(&d, &[&["t", "b"], &["a", "m"]]);
        let z = d.subset(&["t", "a"]).unwrap();
        assert_eq!(restrict(&d, &t, z).unwrap(), tup(&d, &[&["t"], &["a"]]));
        assert_eq!(restrict(&d, &t, d.universe()).unwrap(), t);
        let bad = d.subset(&["m"]).unwrap();
        assert_eq!(restrict(&d, &t, bad), Err(Error::NotUpwardClosed));
    }

    #[test]
    fn one_tuples_are_fixed_by_tau_and_beta() {
        let d = diamond();
        let t = tup(&d, &[&["a", "m"]]);
        assert_eq!(tau(&d, &t), t);
        assert_eq!(beta(&d, &t), t);
    }
}
