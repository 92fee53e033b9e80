//! Named example posets, with tuples of interest attached.
//!
//! All builders are pure: the same parameters give the same poset, element
//! order included. Orders are stored with `a < b` meaning the prime `a` is
//! contained in `b`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::{Subset, MAX_ELEMENTS};
use crate::tuple::SubsetTuple;

/// A built catalog poset.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<usize>,
    pub poset: Poset,
    pub tuples: Vec<(String, SubsetTuple)>,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn tuple(&self, name: &str) -> Option<&SubsetTuple> {
        self.tuples.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }
}

/// Catalog names with their parameter lists and a short description.
pub const ENTRIES: &[(&str, &str, &str)] = &[
    ("chain", "n", "chain 0 < 1 < .. < n"),
    ("chromatic", "n", "E_n < .. < E_0, with monotone index tuples"),
    ("zariski_xy", "n_lambda n_mu", "D(k[x,y]/(xy)) truncated"),
    ("circle", "N", "T over e, C_2 .. C_N"),
    ("torus2", "n", "T2 over S_i, with F_i < S_i and e < S_i"),
    ("diamond", "k", "top t over k middles over bottom m"),
    ("star", "k", "top t over k leaves"),
    ("antichain", "n", "n incomparable points"),
    ("two_chains", "", "p2 < p1 and q2 < q1"),
];

/// Letters for middles and leaves; `t` and `m` name the extremes.
const LETTERS: &[u8] = b"abcdefghijklnopqrsuvwxyz";

/// Builds the entry `name` with `params`.
pub fn catalog(name: &str, params: &[usize]) -> Result<CatalogEntry> {
    let arity = match name {
        "two_chains" => 0,
        "zariski_xy" => 2,
        _ if ENTRIES.iter().any(|e| e.0 == name) => 1,
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    if params.len() != arity {
        return Err(Error::BadParameter(format!(
            "`{name}` takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let p = |i: usize| params[i];
    let mut entry = match name {
        "chain" => chain(p(0))?,
        "chromatic" => chromatic(p(0))?,
        "zariski_xy" => zariski_xy(p(0), p(1))?,
        "circle" => circle(p(0))?,
        "torus2" => torus2(p(0))?,
        "diamond" => diamond(p(0))?,
        "star" => star(p(0))?,
        "antichain" => antichain(p(0))?,
        _ => two_chains(),
    };
    entry.params = params.to_vec();
    Ok(entry)
}

fn entry(name: &str, poset: Poset, notes: &'static str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        params: Vec::new(),
        poset,
        tuples: Vec::new(),
        notes,
    }
}

fn bound(name: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::BadParameter(format!(
            "`{name}` must lie in {lo}..={hi}, got {value}"
        )));
    }
    Ok(())
}

fn build(names: Vec<String>, relations: &[(usize, usize)]) -> Poset {
    Poset::from_indices(names, relations).expect("catalog posets are valid")
}

fn tuple(parts: Vec<Subset>) -> SubsetTuple {
    SubsetTuple::from_parts_unchecked(parts)
}

pub fn chain(n: usize) -> Result<CatalogEntry> {
    bound("n", n, 0, MAX_ELEMENTS - 1)?;
    let names = (0..=n).map(|i| i.to_string()).collect();
    let rel: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    Ok(entry("chain", build(names, &rel), "a chain of n + 1 points"))
}

/// `E_n < .. < E_0`. The tuple `L{a1}_{a2}..` is `({E_a1}, {E_a2}, ..)`
/// for each increasing index sequence.
pub fn chromatic(n: usize) -> Result<CatalogEntry> {
    bound("n", n, 0, 10)?;
    let names = (0..=n).map(|i| format!("E{i}")).collect();
    let rel: Vec<_> = (0..n).map(|i| (i + 1, i)).collect();
    let mut e = entry(
        "chromatic",
        build(names, &rel),
        "spectrum of the E(n)-local stable homotopy category: E_i are the \
         kernels of K(i)-homology, E_n = 0 is minimal",
    );
    for mask in 1u64..1 << (n + 1) {
        let idx: Vec<usize> = Subset::from_bits(mask).iter().collect();
        let name = format!(
            "L{}",
            idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("_")
        );
        let parts = idx.iter().map(|&i| Subset::singleton(i)).collect();
        e.tuples.push((name, tuple(parts)));
    }
    Ok(e)
}

/// Primes of `k[x,y]/(xy)` in containment order: `X = (x)`, `Y = (y)`,
/// `O = (x,y)`, `a_i = (x, y - mu_i) < X` and `b_j = (x - lambda_j, y) < Y`.
///
/// Tuples: `example = ({X,Y}, {X} ∪ A, B)` with `A = {b_j} ∪ {O}` and `B`
/// everything but `X, Y`; `reduced = ({X,Y}, B)`.
pub fn zariski_xy(n_lambda: usize, n_mu: usize) -> Result<CatalogEntry> {
    bound("n_lambda + n_mu", n_lambda + n_mu, 0, MAX_ELEMENTS - 3)?;
    let mut names: Vec<String> = ["X", "Y", "O"].iter().map(|s| s.to_string()).collect();
    names.extend((1..=n_mu).map(|i| format!("a{i}")));
    names.extend((1..=n_lambda).map(|j| format!("b{j}")));
    let (x, y, o) = (0, 1, 2);
    let a: Vec<usize> = (3..3 + n_mu).collect();
    let b: Vec<usize> = (3 + n_mu..3 + n_mu + n_lambda).collect();
    let mut rel = alloc::vec![(o, x), (o, y)];
    rel.extend(a.iter().map(|&i| (i, x)));
    rel.extend(b.iter().map(|&j| (j, y)));
    let poset = build(names, &rel);

    let xy = Subset::singleton(x).with(y);
    let low = poset.universe() - xy;
    let a_set: Subset = b.iter().copied().chain([o]).collect();
    let mut e = entry(
        "zariski_xy",
        poset,
        "Zariski spectrum of k[x,y]/(xy) truncated to finitely many closed \
         points; the Zariski order is reversed so that a < b means a ⊂ b",
    );
    e.tuples.push((
        "example".to_string(),
        tuple(alloc::vec![xy, Subset::singleton(x) | a_set, low]),
    ));
    e.tuples
        .push(("reduced".to_string(), tuple(alloc::vec![xy, low])));
    Ok(e)
}

/// Closed subgroups of the circle: `T` above the finite subgroups
/// `e, C_2, .., C_N`.
pub fn circle(n: usize) -> Result<CatalogEntry> {
    bound("N", n, 1, MAX_ELEMENTS - 1)?;
    let mut names = alloc::vec!["T".to_string(), "e".to_string()];
    names.extend((2..=n).map(|i| format!("C{i}")));
    let rel: Vec<_> = (1..=n).map(|i| (i, 0)).collect();
    Ok(entry(
        "circle",
        build(names, &rel),
        "closed subgroups of the circle group under cotoral inclusion, \
         truncated to cyclic groups of order at most N",
    ))
}

/// `T2` above circles `S_0 .. S_n`, each above `e` and its own finite
/// subgroup `F_i`; `F_i` and `e` also lie below `T2`.
///
/// Tuples: `full = (A_0, .., A_{n+1})` with `A_0 = {S_i}`,
/// `A_j = {S_i : i >= j} ∪ {F_i : i < j} ∪ {e}` and
/// `A_{n+1} = {F_i} ∪ {e}`; `reduced = (A_0, A_{n+1})`.
pub fn torus2(n: usize) -> Result<CatalogEntry> {
    bound("n", n, 0, (MAX_ELEMENTS - 4) / 2)?;
    let mut names = alloc::vec!["T2".to_string(), "e".to_string()];
    names.extend((0..=n).map(|i| format!("S{i}")));
    names.extend((0..=n).map(|i| format!("F{i}")));
    let (top, e_idx) = (0, 1);
    let s = |i: usize| 2 + i;
    let f = |i: usize| 3 + n + i;
    let mut rel = alloc::vec![(e_idx, top)];
    for i in 0..=n {
        rel.extend([(s(i), top), (f(i), s(i)), (e_idx, s(i)), (f(i), top)]);
    }
    let poset = build(names, &rel);

    let all_s: Subset = (0..=n).map(s).collect();
    let mut parts = alloc::vec![all_s];
    for j in 1..=n {
        let mut a: Subset = (j..=n).map(s).collect();
        a |= (0..j).map(f).collect();
        parts.push(a.with(e_idx));
    }
    let last = (0..=n).map(f).collect::<Subset>().with(e_idx);
    parts.push(last);
    let mut entry = entry(
        "torus2",
        poset,
        "closed subgroups of the 2-torus under cotoral inclusion, truncated \
         to n + 1 circle subgroups and one finite subgroup below each",
    );
    entry
        .tuples
        .push(("reduced".to_string(), tuple(alloc::vec![all_s, last])));
    entry.tuples.push(("full".to_string(), tuple(parts)));
    Ok(entry)
}

fn letters(k: usize) -> Result<Vec<String>> {
    bound("k", k, 1, LETTERS.len())?;
    Ok(LETTERS[..k]
        .iter()
        .map(|&c| char::from(c).to_string())
        .collect())
}

/// `t` over middles `a, b, ..` over `m`.
pub fn diamond(k: usize) -> Result<CatalogEntry> {
    let mut names = alloc::vec!["t".to_string()];
    names.extend(letters(k)?);
    names.push("m".to_string());
    let bottom = k + 1;
    let mut rel = Vec::new();
    for i in 1..=k {
        rel.extend([(i, 0), (bottom, i)]);
    }
    Ok(entry(
        "diamond",
        build(names, &rel),
        "dimension 2 with a unique maximal and a unique minimal point",
    ))
}

/// `t` over leaves `a, b, ..`.
pub fn star(k: usize) -> Result<CatalogEntry> {
    let mut names = alloc::vec!["t".to_string()];
    names.extend(letters(k)?);
    let rel: Vec<_> = (1..=k).map(|i| (i, 0)).collect();
    Ok(entry(
        "star",
        build(names, &rel),
        "irreducible of dimension 1",
    ))
}

pub fn antichain(n: usize) -> Result<CatalogEntry> {
    bound("n", n, 0, MAX_ELEMENTS)?;
    let names = (1..=n).map(|i| format!("p{i}")).collect();
    Ok(entry("antichain", build(names, &[]), "dimension 0"))
}

/// `p2 < p1`, `q2 < q1`, with `triple = ({p1,q1}, {p1,q2}, {p2,q2})` and
/// `pair = ({p1,q1}, {p2,q2})`, which have the same thread sets.
pub fn two_chains() -> CatalogEntry {
    let names = ["p1", "p2", "q1", "q2"].iter().map(|s| s.to_string()).collect();
    let poset = build(names, &[(1, 0), (3, 2)]);
    let s = |v: &[usize]| v.iter().copied().collect::<Subset>();
    let mut e = entry(
        "two_chains",
        poset,
        "two disjoint chains of length 1",
    );
    e.tuples.push((
        "triple".to_string(),
        tuple(alloc::vec![s(&[0, 2]), s(&[0, 3]), s(&[1, 3])]),
    ));
    e.tuples
        .push(("pair".to_string(), tuple(alloc::vec![s(&[0, 2]), s(&[1, 3])])));
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{shape_of, Shape};
    use crate::tuple::{is_collapsed, is_concatenated};

    #[test]
    fn sizes_and_dimensions() {
        let c = catalog("chain", &[0]).unwrap();
        assert_eq!(c.poset.len(), 1);
        let z = catalog("zariski_xy", &[1, 1]).unwrap();
        assert_eq!(z.poset.len(), 5);
        assert_eq!(z.poset.dimension(), 1);
        assert_eq!(z.poset.maximal_elements().len(), 2);
        let t = catalog("torus2", &[2]).unwrap();
        assert_eq!(t.poset.len(), 8);
        assert_eq!(t.poset.dimension(), 2);
        assert_eq!(catalog("circle", &[4]).unwrap().poset.len(), 5);
        assert_eq!(catalog("chromatic", &[3]).unwrap().tuples.len(), 15);
    }

    #[test]
    fn shapes() {
        assert!(matches!(
            shape_of(&catalog("diamond", &[3]).unwrap().poset),
            Shape::Dim2UniqueExtremes { .. }
        ));
        assert!(matches!(
            shape_of(&catalog("star", &[4]).unwrap().poset),
            Shape::Dim1Irreducible { .. }
        ));
        assert_eq!(shape_of(&catalog("antichain", &[3]).unwrap().poset), Shape::Dim0);
        assert_eq!(shape_of(&catalog("torus2", &[2]).unwrap().poset), Shape::Finite);
    }

    #[test]
    fn torus_tuple_is_collapsed_and_concatenated() {
        for n in 0..5 {
            let e = torus2(n).unwrap();
            let full = e.tuple("full").unwrap();
            assert_eq!(full.len(), n + 2);
            assert!(is_collapsed(full));
            assert!(is_concatenated(&e.poset, full));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            catalog("nope", &[]).unwrap_err().code(),
            "UnknownCatalogEntry"
        );
        assert_eq!(catalog("chain", &[]).unwrap_err().code(), "BadParameter");
        assert_eq!(catalog("chromatic", &[11]).unwrap_err().code(), "BadParameter");
        assert_eq!(catalog("diamond", &[0]).unwrap_err().code(), "BadParameter");
    }

    #[test]
    fn builders_are_deterministic() {
        let a = catalog("zariski_xy", &[2, 3]).unwrap();
        let b = catalog("zariski_xy", &[2, 3]).unwrap();
        assert_eq!(a.poset, b.poset);
        assert_eq!(a.tuples, b.tuples);
    }
}
