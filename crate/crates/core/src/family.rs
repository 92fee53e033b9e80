//! Threads, thread-set families and the composition product on them.
//!
//! A thread of `(A1, .., Ak)` is a sequence `a1 >= a2 >= .. >= ak` with
//! `ai ∈ Ai`; repeats are allowed. A chain is a thread set when it contains
//! the members of some thread. Thread sets form an upward closed family of
//! chains, which [`ChainFamily`] stores through its inclusion-minimal
//! members.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::{Chain, Poset};
use crate::subset::Subset;
use crate::tuple::{delta, SubsetTuple};

/// A decreasing sequence `a1 >= .. >= ak` of element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Thread {
    sequence: Vec<usize>,
}

impl Thread {
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// The distinct members, which always form a chain.
    pub fn support(&self) -> Chain {
        Chain::new_unchecked(self.sequence.iter().copied().collect())
    }
}

/// Depth-first enumeration of the threads of a tuple, in lexicographic order
/// of the index sequences.
///
/// The search runs over `delta(t)`: every element kept there lies on a full
/// thread, so no branch dead-ends.
pub struct Threads<'a> {
    poset: &'a Poset,
    parts: Vec<Subset>,
    /// Candidates still to try at each depth.
    stack: Vec<Subset>,
    sequence: Vec<usize>,
}

impl Iterator for Threads<'_> {
    type Item = Thread;

    fn next(&mut self) -> Option<Thread> {
        let k = self.parts.len();
        loop {
            let candidates = self.stack.last_mut()?;
            let Some(a) = candidates.first() else {
                self.stack.pop();
                self.sequence.pop();
                continue;
            };
            candidates.remove(a);
            let depth = self.stack.len();
            self.sequence.truncate(depth - 1);
            self.sequence.push(a);
            if depth == k {
                return Some(Thread {
                    sequence: self.sequence.clone(),
                });
            }
            self.stack.push(self.parts[depth] & self.poset.below(a));
        }
    }
}

/// All threads of `t`.
pub fn threads<'a>(poset: &'a Poset, t: &SubsetTuple) -> Threads<'a> {
    let parts = delta(poset, t).parts().to_vec();
    let first = parts[0];
    Threads {
        poset,
        parts,
        stack: alloc::vec![first],
        sequence: Vec::new(),
    }
}

/// An upward closed family of non-empty chains, stored by its minimal
/// members.
///
/// Two families are equal iff their generator lists are equal; generators
/// are kept pairwise incomparable and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainFamily {
    generators: Vec<Chain>,
}

impl ChainFamily {
    pub fn empty() -> ChainFamily {
        ChainFamily::default()
    }

    /// The family generated by `chains`, keeping only minimal ones. Empty
    /// chains are dropped.
    pub fn from_chains<I: IntoIterator<Item = Chain>>(chains: I) -> ChainFamily {
        let mut all: Vec<Chain> = chains.into_iter().filter(|c| !c.is_empty()).collect();
        all.sort_unstable_by_key(|c| (c.len(), c.members()));
        all.dedup();
        let mut generators: Vec<Chain> = Vec::new();
        for c in all {
            if !generators.iter().any(|g| g.is_subset(c)) {
                generators.push(c);
            }
        }
        generators.sort_unstable();
        ChainFamily { generators }
    }

    pub fn generators(&self) -> &[Chain] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `c` belongs to the family iff it contains a generator.
    pub fn contains(&self, c: Chain) -> bool {
        self.generators.iter().any(|g| g.is_subset(c))
    }

    /// `self ⊆ other`.
    pub fn is_subfamily(&self, other: &ChainFamily) -> bool {
        self.generators.iter().all(|&g| other.contains(g))
    }

    /// A generator of one family that is not a member of the other, if any.
    /// The flag is `true` when the witness comes from `self`.
    pub fn distinguishing(&self, other: &ChainFamily) -> Option<(Chain, bool)> {
        if let Some(&g) = self.generators.iter().find(|&&g| !other.contains(g)) {
            return Some((g, true));
        }
        other
            .generators
            .iter()
            .find(|&&g| !self.contains(g))
            .map(|&g| (g, false))
    }
}

/// Membership test, as a free function.
pub fn membership(family: &ChainFamily, c: Chain) -> bool {
    family.contains(c)
}

/// `family ⊆ other`.
pub fn is_subfamily(family: &ChainFamily, other: &ChainFamily) -> bool {
    family.is_subfamily(other)
}

/// `T(t)`: the thread sets of `t`.
///
/// Computed left to right over thread prefixes. For each possible last
/// element only the inclusion-minimal supports are carried forward: a prefix
/// whose support contains another one ending at the same element can only
/// produce larger thread sets.
pub fn thread_set_family(poset: &Poset, t: &SubsetTuple) -> ChainFamily {
    let n = poset.len();
    let parts = t.parts();
    let mut states: Vec<Vec<Subset>> = alloc::vec![Vec::new(); n];
    for a in parts[0].iter() {
        states[a].push(Subset::singleton(a));
    }
    for &part in &parts[1..] {
        let mut next: Vec<Vec<Subset>> = alloc::vec![Vec::new(); n];
        for (a, supports) in states.iter().enumerate() {
            if supports.is_empty() {
                continue;
            }
            for b in (part & poset.below(a)).iter() {
                for &s in supports {
                    insert_minimal(&mut next[b], s.with(b));
                }
            }
        }
        states = next;
    }
    ChainFamily::from_chains(
        states
            .into_iter()
            .flatten()
            .map(Chain::new_unchecked),
    )
}

fn insert_minimal(list: &mut Vec<Subset>, s: Subset) {
    if list.iter().any(|&x| x.is_subset(s)) {
        return;
    }
    list.retain(|&x| !s.is_subset(x));
    list.push(s);
}

/// `w(A)`: chains meeting `A`.
pub fn w(poset: &Poset, a: Subset) -> Result<ChainFamily> {
    poset.check_subset(a)?;
    Ok(ChainFamily::from_chains(
        a.iter().map(|i| Chain::new_unchecked(Subset::singleton(i))),
    ))
}

/// `u(C)`: chains containing `C`.
pub fn principal(c: Chain) -> Result<ChainFamily> {
    if c.is_empty() {
        return Err(Error::EmptyChain);
    }
    Ok(ChainFamily {
        generators: alloc::vec![c],
    })
}

/// `C ∠ D`: every member of `C` lies above every member of `D`.
pub fn angle(poset: &Poset, c: Chain, d: Chain) -> bool {
    let common_above = d
        .members()
        .iter()
        .fold(poset.universe(), |acc, q| acc & poset.above(q));
    c.members().is_subset(common_above)
}

/// `U * V = { C ∪ D : C ∈ U, D ∈ V, C ∠ D }`, computed on generators.
///
/// If `C' ∠ D'` then `C ∠ D` for all `C ⊆ C'`, `D ⊆ D'`, so minimal members
/// of the product come from pairs of generators.
pub fn star(poset: &Poset, u: &ChainFamily, v: &ChainFamily) -> ChainFamily {
    let mut out = Vec::new();
    for &c in &u.generators {
        for &d in &v.generators {
            if angle(poset, c, d) {
                out.push(Chain::new_unchecked(c.members() | d.members()));
            }
        }
    }
    ChainFamily::from_chains(out)
}

/// `phi_C`: the tuple of singletons of `C` listed from the top down.
pub fn phi_tuple(poset: &Poset, c: Chain) -> Result<SubsetTuple> {
    if c.is_empty() {
        return Err(Error::EmptyChain);
    }
    poset.check_subset(c.members())?;
    let parts = poset
        .descending(c)
        .into_iter()
        .map(Subset::singleton)
        .collect();
    Ok(SubsetTuple::from_parts_unchecked(parts))
}
