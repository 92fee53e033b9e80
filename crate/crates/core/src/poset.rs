//! Finite posets of primes.
//!
//! The order models inclusion of primes: `a <= b` reads "a is contained in
//! b". Elements are addressed by their index in the declaration order; all
//! iteration happens in index order so results are reproducible.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A finite partial order with its transitive closure and Hasse diagram.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// `below[i]` is the principal down-set of `i`, including `i`.
    below: Vec<Subset>,
    /// `above[i]` is the principal up-set of `i`, including `i`.
    above: Vec<Subset>,
    covers: Vec<(usize, usize)>,
    /// Length of each element: the longest chain having it as maximum, minus one.
    heights: Vec<usize>,
}

pub(crate) fn check_identifier(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || c == '<' || c == '#');
    if bad {
        Err(Error::InvalidIdentifier(name.to_string()))
    } else {
        Ok(())
    }
}

impl Poset {
    /// Builds a poset from element names and strict relations `(a, b)`
    /// meaning `a < b`. The order is the reflexive-transitive closure.
    pub fn new<I, S>(elements: I, relations: &[(&str, &str)]) -> Result<Poset>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = elements.into_iter().map(Into::into).collect();
        let lookup = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        // Names are checked before relations so that duplicate and invalid
        // identifiers are reported first.
        validate_names(&names)?;
        let mut pairs = Vec::with_capacity(relations.len());
        for &(a, b) in relations {
            pairs.push((lookup(a)?, lookup(b)?));
        }
        Poset::from_indices(names, &pairs)
    }

    /// Same as [`Poset::new`] with relations given by element index.
    pub fn from_indices(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        validate_names(&names)?;
        let n = names.len();
        let mut below: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in relations {
            if a >= n {
                return Err(Error::UnknownElement(alloc::format!("#{a}")));
            }
            if b >= n {
                return Err(Error::UnknownElement(alloc::format!("#{b}")));
            }
            if a == b {
                return Err(Error::CycleDetected(names[a].clone(), names[b].clone()));
            }
            below[b].insert(a);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row = below[k];
            for set in below.iter_mut() {
                if set.contains(k) {
                    *set |= row;
                }
            }
        }
        for i in 0..n {
            for j in below[i].iter() {
                if j != i && below[j].contains(i) {
                    let (x, y) = if j < i { (j, i) } else { (i, j) };
                    return Err(Error::CycleDetected(names[x].clone(), names[y].clone()));
                }
            }
        }
        let mut above = alloc::vec![Subset::EMPTY; n];
        for (i, set) in below.iter().enumerate() {
            for j in set.iter() {
                above[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        for (b, &down) in below.iter().enumerate() {
            for a in down.iter() {
                if a != b && (above[a] & down).len() == 2 {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (below[i].len(), i));
        let mut heights = alloc::vec![0usize; n];
        for &i in &order {
            heights[i] = (below[i] - Subset::singleton(i))
                .iter()
                .map(|j| heights[j] + 1)
                .max()
                .unwrap_or(0);
        }
        Ok(Poset {
            names,
            below,
            above,
            covers,
            heights,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// The set of all elements.
    pub fn universe(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Subset from element names; duplicates are rejected.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for name in names {
            let i = self.index_of(name.as_ref())?;
            if s.contains(i) {
                return Err(Error::DuplicateElement(name.as_ref().to_string()));
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Names of the members of `s`, in index order.
    pub fn subset_names(&self, s: Subset) -> Vec<&str> {
        s.iter().map(|i| self.name(i)).collect()
    }

    pub fn check_subset(&self, s: Subset) -> Result<()> {
        match (s - self.universe()).first() {
            None => Ok(()),
            Some(i) => Err(Error::UnknownElement(alloc::format!("#{i}"))),
        }
    }

    fn check_element(&self, p: usize) -> Result<()> {
        if p < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement(alloc::format!("#{p}")))
        }
    }

    /// `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Principal down-set `[<= p]`.
    pub fn below(&self, p: usize) -> Subset {
        self.below[p]
    }

    /// Principal up-set `[>= p]`.
    pub fn above(&self, p: usize) -> Subset {
        self.above[p]
    }

    /// Elements comparable to `p`, including `p`.
    pub fn comparable_to(&self, p: usize) -> Subset {
        self.below[p] | self.above[p]
    }

    /// Cover relation as `(lower, upper)` pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub(crate) fn down(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, i| acc | self.below[i])
    }

    pub(crate) fn up(&self, s: Subset) -> Subset {
        s.iter().fold(Subset::EMPTY, |acc, i| acc | self.above[i])
    }

    /// `[<= S]`: elements below some member of `s`.
    pub fn family_leq(&self, s: Subset) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(self.down(s))
    }

    /// `[>= S]`: elements above some member of `s`.
    pub fn cofamily_geq(&self, s: Subset) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(self.up(s))
    }

    /// Complement of `[<= S]`.
    pub fn not_leq(&self, s: Subset) -> Result<Subset> {
        Ok(self.universe() - self.family_leq(s)?)
    }

    /// Complement of `[>= S]`.
    pub fn not_geq(&self, s: Subset) -> Result<Subset> {
        Ok(self.universe() - self.cofamily_geq(s)?)
    }

    /// Downward closed subsets are exactly the Thomason subsets of a
    /// noetherian spectrum.
    pub fn is_downward_closed(&self, s: Subset) -> Result<bool> {
        Ok(self.family_leq(s)? == s)
    }

    pub fn is_upward_closed(&self, s: Subset) -> Result<bool> {
        Ok(self.cofamily_geq(s)? == s)
    }

    pub fn maximal_elements(&self) -> Subset {
        (0..self.len())
            .filter(|&i| self.above[i].len() == 1)
            .collect()
    }

    pub fn minimal_elements(&self) -> Subset {
        (0..self.len())
            .filter(|&i| self.below[i].len() == 1)
            .collect()
    }

    /// Krull dimension: largest `|C| - 1` over chains, `-1` when empty.
    pub fn dimension(&self) -> isize {
        self.heights.iter().map(|&h| h as isize).max().unwrap_or(-1)
    }

    /// Length of `p`: the dimension of the longest chain with maximum `p`.
    pub fn length(&self, p: usize) -> Result<usize> {
        self.check_element(p)?;
        Ok(self.heights[p])
    }

    /// Enumerates the non-empty chains; see [`Chains`] for options.
    pub fn chains(&self) -> Chains<'_> {
        Chains::new(self)
    }

    /// Chain from a subset, checking pairwise comparability.
    pub fn chain(&self, s: Subset) -> Result<Chain> {
        self.check_subset(s)?;
        for a in s.iter() {
            let bad = s - self.comparable_to(a);
            if let Some(b) = bad.first() {
                let (x, y) = if a < b { (a, b) } else { (b, a) };
                return Err(Error::NotAChain(
                    self.name(x).to_string(),
                    self.name(y).to_string(),
                ));
            }
        }
        Ok(Chain(s))
    }

    pub fn is_chain(&self, s: Subset) -> bool {
        s.iter().all(|a| s.is_subset(self.comparable_to(a)))
    }

    /// Members of a chain from the largest down to the smallest.
    pub fn descending(&self, c: Chain) -> Vec<usize> {
        let mut v: Vec<usize> = c.members().iter().collect();
        v.sort_by_key(|&i| core::cmp::Reverse(self.below[i].len()));
        v
    }
}

fn validate_names(names: &[String]) -> Result<()> {
    if names.len() > MAX_ELEMENTS {
        return Err(Error::TooManyElements(names.len()));
    }
    for (i, name) in names.iter().enumerate() {
        check_identifier(name)?;
        if names[..i].contains(name) {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(())
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.name(a), self.name(b)))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

/// A set of pairwise comparable elements.
///
/// The induced order on the members is total, so the member set determines
/// the chain. Ordering on chains is lexicographic on increasing index
/// sequences, which keeps family listings stable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Chain(Subset);

impl Chain {
    pub const EMPTY: Chain = Chain(Subset::EMPTY);

    /// Wraps a subset without checking comparability.
    pub(crate) fn new_unchecked(s: Subset) -> Chain {
        Chain(s)
    }

    pub fn members(self) -> Subset {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(self, other: Chain) -> bool {
        self.0.is_subset(other.0)
    }

    /// `dim(C) = |C| - 1`, `-1` for the empty chain.
    pub fn dimension(self) -> isize {
        self.0.len() as isize - 1
    }
}

impl Ord for Chain {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.0.cmp_lex(other.0)
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain{:?}", self.0)
    }
}

/// Depth-first enumeration of chains in lexicographic order of their index
/// sequences. Each chain is produced exactly once.
pub struct Chains<'a> {
    poset: &'a Poset,
    /// Frames of (chain so far, candidates that may extend it).
    stack: Vec<(Subset, Subset)>,
    max_size: usize,
    emit_empty: bool,
}

impl<'a> Chains<'a> {
    fn new(poset: &'a Poset) -> Self {
        Chains {
            poset,
            stack: alloc::vec![(Subset::EMPTY, poset.universe())],
            max_size: usize::MAX,
            emit_empty: false,
        }
    }

    /// Only chains with at most `n` members.
    pub fn max_size(mut self, n: usize) -> Self {
        self.max_size = n;
        self
    }

    /// Also yield the empty chain, first.
    pub fn with_empty(mut self) -> Self {
        self.emit_empty = true;
        self
    }
}

impl Iterator for Chains<'_> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Chain::EMPTY);
        }
        if self.max_size == 0 {
            return None;
        }
        loop {
            let (chain, candidates) = self.stack.last_mut()?;
            let Some(j) = candidates.first() else {
                self.stack.pop();
                continue;
            };
            candidates.remove(j);
            let next = chain.with(j);
            let rest = *candidates & self.poset.comparable_to(j);
            if next.len() < self.max_size && !rest.is_empty() {
                self.stack.push((next, rest));
            }
            return Some(Chain(next));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn diamond() -> Poset {
        Poset::new(
            ["t", "a", "b", "m"],
            &[("a", "t"), ("b", "t"), ("m", "a"), ("m", "b")],
        )
        .unwrap()
    }

    fn set(p: &Poset, names: &[&str]) -> Subset {
        p.subset(names).unwrap()
    }

    #[test]
    fn build_star() {
        let p = Poset::new(["t", "a", "b"], &[("a", "t"), ("b", "t")]).unwrap();
        assert_eq!(p.maximal_elements(), set(&p, &["t"]));
        assert_eq!(p.minimal_elements(), set(&p, &["a", "b"]));
        assert_eq!(p.covers(), &[(1, 0), (2, 0)]);
    }

    #[test]
    fn build_point() {
        let p = Poset::new(["p"], &[]).unwrap();
        assert_eq!(p.dimension(), 0);
        assert_eq!(Poset::new(Vec::<String>::new(), &[]).unwrap().dimension(), -1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Poset::new(["x", "y"], &[("x", "y"), ("y", "x")]),
            Err(Error::CycleDetected("x".into(), "y".into()))
        );
        assert_eq!(
            Poset::new(["x", "x"], &[]),
            Err(Error::DuplicateElement("x".into()))
        );
        assert_eq!(
            Poset::new(["x"], &[("x", "z")]),
            Err(Error::UnknownElement("z".into()))
        );
        assert!(matches!(
            Poset::new(["x"], &[("x", "x")]),
            Err(Error::CycleDetected(..))
        ));
        assert!(matches!(
            Poset::new(["a b"], &[]),
            Err(Error::InvalidIdentifier(_))
        ));
        let many: Vec<String> = (0..65).map(|i| alloc::format!("e{i}")).collect();
        assert_eq!(Poset::new(many, &[]), Err(Error::TooManyElements(65)));
    }

    #[test]
    fn transitive_closure_and_covers() {
        let p = Poset::new(["0", "1", "2"], &[("0", "1"), ("1", "2"), ("0", "2")]).unwrap();
        assert!(p.leq(0, 2));
        // 0 < 2 is implied, so it is not a cover.
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn family_operators() {
        let p = diamond();
        assert_eq!(p.family_leq(set(&p, &["a"])).unwrap(), set(&p, &["a", "m"]));
        assert_eq!(p.family_leq(p.universe()).unwrap(), p.universe());
        assert_eq!(p.family_leq(Subset::EMPTY).unwrap(), Subset::EMPTY);
        assert_eq!(p.cofamily_geq(set(&p, &["a"])).unwrap(), set(&p, &["a", "t"]));
        assert_eq!(p.cofamily_geq(Subset::EMPTY).unwrap(), Subset::EMPTY);
        assert_eq!(p.not_geq(Subset::EMPTY).unwrap(), p.universe());
        assert!(matches!(
            p.family_leq(Subset::singleton(7)),
            Err(Error::UnknownElement(_))
        ));

        let c = Poset::new(["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        assert_eq!(c.not_leq(set(&c, &["1"])).unwrap(), set(&c, &["2"]));
    }

    #[test]
    fn chain_enumeration() {
        let c = Poset::new(["0", "1"], &[("0", "1")]).unwrap();
        let got: Vec<Subset> = c.chains().map(Chain::members).collect();
        assert_eq!(got, vec![set(&c, &["0"]), set(&c, &["0", "1"]), set(&c, &["1"])]);

        let a = Poset::new(["p", "q"], &[]).unwrap();
        assert_eq!(a.chains().count(), 2);
        assert_eq!(a.chains().with_empty().count(), 3);

        let d = diamond();
        assert_eq!(d.chains().count(), 11);
        assert_eq!(d.chains().max_size(1).count(), 4);
        assert_eq!(d.chains().max_size(0).count(), 0);
    }

    #[test]
    fn dimension_and_length() {
        let c = Poset::new(["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.length(2).unwrap(), 2);
        assert_eq!(c.length(0).unwrap(), 0);
        assert!(c.length(3).is_err());

        let d = diamond();
        assert_eq!(d.dimension(), 2);
        assert_eq!(d.length(1).unwrap(), 1);
        assert_eq!(d.length(2).unwrap(), 1);

        let a = Poset::new(["p", "q", "r"], &[]).unwrap();
        assert_eq!(a.dimension(), 0);
    }

    #[test]
    fn closedness() {
        let d = diamond();
        assert!(d.is_downward_closed(set(&d, &["m", "a"])).unwrap());
        assert!(!d.is_downward_closed(set(&d, &["a"])).unwrap());
        for s in [Subset::EMPTY, d.universe()] {
            assert!(d.is_downward_closed(s).unwrap());
            assert!(d.is_upward_closed(s).unwrap());
        }
    }

    #[test]
    fn extremes() {
        let d = diamond();
        assert_eq!(d.maximal_elements(), set(&d, &["t"]));
        assert_eq!(d.minimal_elements(), set(&d, &["m"]));
        let a = Poset::new(["p", "q"], &[]).unwrap();
        assert_eq!(a.maximal_elements(), a.universe());
        assert_eq!(a.minimal_elements(), a.universe());
    }

    #[test]
    fn chain_validation() {
        let d = diamond();
        assert!(d.chain(set(&d, &["t", "a", "m"])).is_ok());
        assert_eq!(
            d.chain(set(&d, &["a", "b"])),
            Err(Error::NotAChain("a".into(), "b".into()))
        );
        let c = d.chain(set(&d, &["m", "t", "a"])).unwrap();
        assert_eq!(d.descending(c), vec![0, 1, 3]);
    }
}
