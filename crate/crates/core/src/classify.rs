//! Normal forms of tuples on the poset shapes where thread sets are known to
//! determine the composite.
//!
//! Each classifier reads a [`ChainFamily`] and reconstructs the collapsed
//! concatenated tuple it came from. Equal thread-set families give equal
//! normal forms; the converse is not claimed, since distinct families may
//! still name isomorphic composites.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::{thread_set_family, ChainFamily};
use crate::poset::{Chain, Poset};
use crate::subset::Subset;
use crate::tuple::{canonical, SubsetTuple};

/// Which classification applies to a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Dimension at most 0: an antichain.
    Dim0,
    /// Dimension 1 with a unique maximal element.
    Dim1Irreducible { top: usize },
    /// Dimension 2 with a unique maximal and a unique minimal element.
    Dim2UniqueExtremes { top: usize, bottom: usize },
    /// Any other finite poset.
    Finite,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::Dim0 => "Dim0",
            Shape::Dim1Irreducible { .. } => "Dim1Irreducible",
            Shape::Dim2UniqueExtremes { .. } => "Dim2UniqueExtremes",
            Shape::Finite => "Finite",
        }
    }

    pub fn is_supported(self) -> bool {
        self != Shape::Finite
    }
}

pub fn shape_of(poset: &Poset) -> Shape {
    let max = poset.maximal_elements();
    let min = poset.minimal_elements();
    match poset.dimension() {
        d if d <= 0 => Shape::Dim0,
        1 if max.len() == 1 => Shape::Dim1Irreducible {
            top: max.first().unwrap(),
        },
        2 if max.len() == 1 && min.len() == 1 => Shape::Dim2UniqueExtremes {
            top: max.first().unwrap(),
            bottom: min.first().unwrap(),
        },
        _ => Shape::Finite,
    }
}

/// A normal form. Payloads hold elements of one stratum only: leaves for
/// the dimension 1 forms, middle elements for the dimension 2 forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    /// The identity functor, named by the empty tuple.
    Identity,
    Zero,
    /// `L_A` on an antichain.
    D0Smash { a: Subset },
    /// `(C)`.
    D1Lambda { c: Subset },
    /// `(t ∪ C)`.
    D1TopSmash { c: Subset },
    /// `(t ∪ C, D)` with `C ⊊ D`.
    D1Mixed { c: Subset, d: Subset },
    /// `(A)`.
    D2Form1 { a: Subset },
    /// `(t ∪ A)`.
    D2Form2 { a: Subset },
    /// `(A ∪ m)`.
    D2Form3 { a: Subset },
    /// `(t ∪ A ∪ m)`.
    D2Form4 { a: Subset },
    /// `(t ∪ A, B)` with `A ⊊ B`.
    D2Form5 { a: Subset, b: Subset },
    /// `(A, B ∪ m)` with `B ⊊ A`.
    D2Form6 { a: Subset, b: Subset },
    /// `(t ∪ A, B ∪ m)`.
    D2Form7 { a: Subset, b: Subset },
    /// `(t ∪ A, t ∪ B ∪ m)` with `B ⊊ A`.
    D2Form8 { a: Subset, b: Subset },
    /// `(t ∪ A ∪ m, B ∪ m)` with `A ⊊ B`.
    D2Form9 { a: Subset, b: Subset },
    /// `(t ∪ A, B, C ∪ m)` with `A, C ⊊ B`.
    D2Form10 { a: Subset, b: Subset, c: Subset },
    /// `(t ∪ A, t ∪ B ∪ m, C ∪ m)` with `B ⊊ A ∩ C`.
    D2Form11 { a: Subset, b: Subset, c: Subset },
    /// Outside the supported shapes: the canonical tuple.
    Unresolved(SubsetTuple),
}

/// Serialized names of the payload slots, per tag.
const D1_KEYS: [&str; 2] = ["C", "D"];
const D2_KEYS: [&str; 3] = ["A1", "B1", "C1"];

impl NormalForm {
    pub fn tag(&self) -> &'static str {
        use NormalForm::*;
        match self {
            Identity => "Identity",
            Zero => "Zero",
            D0Smash { .. } => "D0_Smash",
            D1Lambda { .. } => "D1_Lambda",
            D1TopSmash { .. } => "D1_TopSmash",
            D1Mixed { .. } => "D1_Mixed",
            D2Form1 { .. } => "D2_Form1",
            D2Form2 { .. } => "D2_Form2",
            D2Form3 { .. } => "D2_Form3",
            D2Form4 { .. } => "D2_Form4",
            D2Form5 { .. } => "D2_Form5",
            D2Form6 { .. } => "D2_Form6",
            D2Form7 { .. } => "D2_Form7",
            D2Form8 { .. } => "D2_Form8",
            D2Form9 { .. } => "D2_Form9",
            D2Form10 { .. } => "D2_Form10",
            D2Form11 { .. } => "D2_Form11",
            Unresolved(_) => "Unresolved",
        }
    }

    /// Named payload subsets, in declaration order. Empty for `Identity`,
    /// `Zero` and `Unresolved`.
    pub fn payloads(&self) -> Vec<(&'static str, Subset)> {
        use NormalForm::*;
        match *self {
            Identity | Zero | Unresolved(_) => Vec::new(),
            D0Smash { a } => alloc::vec![("A", a)],
            D1Lambda { c } | D1TopSmash { c } => alloc::vec![(D1_KEYS[0], c)],
            D1Mixed { c, d } => alloc::vec![(D1_KEYS[0], c), (D1_KEYS[1], d)],
            D2Form1 { a } | D2Form2 { a } | D2Form3 { a } | D2Form4 { a } => {
                alloc::vec![(D2_KEYS[0], a)]
            }
            D2Form5 { a, b }
            | D2Form6 { a, b }
            | D2Form7 { a, b }
            | D2Form8 { a, b }
            | D2Form9 { a, b } => alloc::vec![(D2_KEYS[0], a), (D2_KEYS[1], b)],
            D2Form10 { a, b, c } | D2Form11 { a, b, c } => {
                alloc::vec![(D2_KEYS[0], a), (D2_KEYS[1], b), (D2_KEYS[2], c)]
            }
        }
    }

    /// Builds a form from its tag and payload lookup. `Unresolved` is not
    /// handled here since it carries a tuple.
    pub fn from_tag(tag: &str, mut get: impl FnMut(&str) -> Result<Subset>) -> Result<NormalForm> {
        use NormalForm::*;
        let form = match tag {
            "Identity" => Identity,
            "Zero" => Zero,
            "D0_Smash" => D0Smash { a: get("A")? },
            "D1_Lambda" => D1Lambda { c: get("C")? },
            "D1_TopSmash" => D1TopSmash { c: get("C")? },
            "D1_Mixed" => D1Mixed {
                c: get("C")?,
                d: get("D")?,
            },
            "D2_Form1" => D2Form1 { a: get("A1")? },
            "D2_Form2" => D2Form2 { a: get("A1")? },
            "D2_Form3" => D2Form3 { a: get("A1")? },
            "D2_Form4" => D2Form4 { a: get("A1")? },
            "D2_Form5" | "D2_Form6" | "D2_Form7" | "D2_Form8" | "D2_Form9" => {
                let (a, b) = (get("A1")?, get("B1")?);
                match tag {
                    "D2_Form5" => D2Form5 { a, b },
                    "D2_Form6" => D2Form6 { a, b },
                    "D2_Form7" => D2Form7 { a, b },
                    "D2_Form8" => D2Form8 { a, b },
                    _ => D2Form9 { a, b },
                }
            }
            "D2_Form10" | "D2_Form11" => {
                let (a, b, c) = (get("A1")?, get("B1")?, get("C1")?);
                if tag == "D2_Form10" {
                    D2Form10 { a, b, c }
                } else {
                    D2Form11 { a, b, c }
                }
            }
            other => {
                return Err(Error::BadParameter(alloc::format!(
                    "unknown normal form `{other}`"
                )))
            }
        };
        Ok(form)
    }

    /// Whether the side conditions of the form hold.
    pub fn side_conditions_hold(&self) -> bool {
        use NormalForm::*;
        let proper = |x: Subset, y: Subset| x.is_subset(y) && x != y;
        match *self {
            D1Mixed { c, d } => proper(c, d),
            D2Form5 { a, b } | D2Form9 { a, b } => proper(a, b),
            D2Form6 { a, b } | D2Form8 { a, b } => proper(b, a),
            D2Form10 { a, b, c } => proper(a, b) && proper(c, b),
            D2Form11 { a, b, c } => proper(b, a & c),
            _ => true,
        }
    }

    /// The collapsed concatenated tuple the form stands for. `None` for
    /// `Identity`, and when the form does not fit the poset's shape.
    pub fn as_tuple(&self, poset: &Poset) -> Option<SubsetTuple> {
        use NormalForm::*;
        let mk = |parts: Vec<Subset>| SubsetTuple::new(poset, parts).ok();
        let shape = shape_of(poset);
        let (t, m) = match shape {
            Shape::Dim1Irreducible { top } => (Subset::singleton(top), Subset::EMPTY),
            Shape::Dim2UniqueExtremes { top, bottom } => {
                (Subset::singleton(top), Subset::singleton(bottom))
            }
            _ => (Subset::EMPTY, Subset::EMPTY),
        };
        let dim1 = matches!(shape, Shape::Dim1Irreducible { .. });
        let dim2 = matches!(shape, Shape::Dim2UniqueExtremes { .. });
        match self {
            Identity => None,
            Zero => Some(SubsetTuple::zero()),
            Unresolved(tuple) => Some(tuple.clone()),
            &D0Smash { a } => mk(alloc::vec![a]),
            _ if !(dim1 || dim2) => None,
            &D1Lambda { c } if dim1 => mk(alloc::vec![c]),
            &D1TopSmash { c } if dim1 => mk(alloc::vec![t | c]),
            &D1Mixed { c, d } if dim1 => mk(alloc::vec![t | c, d]),
            D1Lambda { .. } | D1TopSmash { .. } | D1Mixed { .. } => None,
            _ if !dim2 => None,
            &D2Form1 { a } => mk(alloc::vec![a]),
            &D2Form2 { a } => mk(alloc::vec![t | a]),
            &D2Form3 { a } => mk(alloc::vec![a | m]),
            &D2Form4 { a } => mk(alloc::vec![t | a | m]),
            &D2Form5 { a, b } => mk(alloc::vec![t | a, b]),
            &D2Form6 { a, b } => mk(alloc::vec![a, b | m]),
            &D2Form7 { a, b } => mk(alloc::vec![t | a, b | m]),
            &D2Form8 { a, b } => mk(alloc::vec![t | a, t | b | m]),
            &D2Form9 { a, b } => mk(alloc::vec![t | a | m, b | m]),
            &D2Form10 { a, b, c } => mk(alloc::vec![t | a, b, c | m]),
            &D2Form11 { a, b, c } => mk(alloc::vec![t | a, t | b | m, c | m]),
        }
    }
}

fn mismatch(expected: &'static str, poset: &Poset) -> Error {
    Error::ShapeMismatch {
        expected,
        found: shape_of(poset).name(),
    }
}

/// `{p ∈ candidates : extra ∪ {p} ∈ F}`.
fn members_with(
    family: &ChainFamily,
    candidates: Subset,
    extra: Subset,
) -> Subset {
    candidates
        .iter()
        .filter(|&p| family.contains(Chain::new_unchecked(extra.with(p))))
        .collect()
}

fn has(family: &ChainFamily, s: Subset) -> bool {
    family.contains(Chain::new_unchecked(s))
}

/// Accepts `form` only if it reproduces `family`.
fn confirm(poset: &Poset, family: &ChainFamily, form: NormalForm) -> Result<NormalForm> {
    let tuple = form
        .as_tuple(poset)
        .ok_or(Error::Inconsistent("form does not fit the poset"))?;
    if &thread_set_family(poset, &tuple) == family {
        Ok(form)
    } else {
        Err(Error::Inconsistent("reconstructed tuple has different thread sets"))
    }
}

/// On an antichain the composite is `L` of the intersection of the parts.
pub fn normal_form_dim0(poset: &Poset, t: &SubsetTuple) -> Result<NormalForm> {
    if shape_of(poset) != Shape::Dim0 {
        return Err(mismatch("Dim0", poset));
    }
    let a = t
        .parts()
        .iter()
        .fold(poset.universe(), |acc, &p| acc & p);
    Ok(if a.is_empty() {
        NormalForm::Zero
    } else {
        NormalForm::D0Smash { a }
    })
}

/// Family version of [`normal_form_dim0`]: on an antichain every generator
/// is a singleton.
pub fn classify_dim0(poset: &Poset, family: &ChainFamily) -> Result<NormalForm> {
    if shape_of(poset) != Shape::Dim0 {
        return Err(mismatch("Dim0", poset));
    }
    if family.is_empty() {
        return Ok(NormalForm::Zero);
    }
    let a = members_with(family, poset.universe(), Subset::EMPTY);
    confirm(poset, family, NormalForm::D0Smash { a })
}

pub fn classify_dim1(poset: &Poset, family: &ChainFamily) -> Result<NormalForm> {
    let Shape::Dim1Irreducible { top } = shape_of(poset) else {
        return Err(mismatch("Dim1Irreducible", poset));
    };
    if family.is_empty() {
        return Ok(NormalForm::Zero);
    }
    let t = Subset::singleton(top);
    let rest = poset.universe() - t;
    let c = members_with(family, rest, Subset::EMPTY);
    let form = if has(family, t) {
        NormalForm::D1TopSmash { c }
    } else {
        let d = members_with(family, rest, t);
        if c == d {
            NormalForm::D1Lambda { c }
        } else if c.is_subset(d) {
            NormalForm::D1Mixed { c, d }
        } else {
            return Err(Error::Inconsistent("leaf sets are not nested"));
        }
    };
    confirm(poset, family, form)
}

pub fn classify_dim2(poset: &Poset, family: &ChainFamily) -> Result<NormalForm> {
    let Shape::Dim2UniqueExtremes { top, bottom } = shape_of(poset) else {
        return Err(mismatch("Dim2UniqueExtremes", poset));
    };
    if family.is_empty() {
        return Ok(NormalForm::Zero);
    }
    let t = Subset::singleton(top);
    let m = Subset::singleton(bottom);
    let middles = poset.universe() - t - m;
    let f0 = members_with(family, middles, Subset::EMPTY);
    let d = members_with(family, middles, m);
    let e = members_with(family, middles, t);
    let g = members_with(family, middles, t | m);
    let proper = |x: Subset, y: Subset| x.is_subset(y) && x != y;

    let form = match (has(family, t), has(family, m)) {
        (true, true) => NormalForm::D2Form4 { a: f0 },
        (true, false) if f0 == d => NormalForm::D2Form2 { a: f0 },
        (true, false) if proper(f0, d) => NormalForm::D2Form8 { a: d, b: f0 },
        (false, true) if f0 == e => NormalForm::D2Form3 { a: f0 },
        (false, true) if proper(f0, e) => NormalForm::D2Form9 { a: f0, b: e },
        (true, false) | (false, true) => {
            return Err(Error::Inconsistent("singleton sets are not nested"))
        }
        (false, false) if has(family, t | m) => {
            if d & e == f0 {
                NormalForm::D2Form7 { a: d, b: e }
            } else if proper(f0, d & e) {
                NormalForm::D2Form11 { a: d, b: f0, c: e }
            } else {
                return Err(Error::Inconsistent("no case with {t, m} matches"));
            }
        }
        (false, false) => {
            if f0 == d && f0 == e && f0 == g {
                NormalForm::D2Form1 { a: f0 }
            } else if f0 == d && proper(f0, e) && e == g {
                NormalForm::D2Form5 { a: f0, b: e }
            } else if f0 == e && proper(f0, d) && d == g {
                NormalForm::D2Form6 { a: d, b: f0 }
            } else if proper(d, g) && proper(e, g) {
                NormalForm::D2Form10 { a: d, b: g, c: e }
            } else {
                return Err(Error::Inconsistent("no case without {t, m} matches"));
            }
        }
    };
    confirm(poset, family, form)
}

/// Classifies `t` on a supported shape; otherwise returns the canonical
/// tuple as `Unresolved`. Tuples without threads are `Zero` on every shape.
pub fn normal_form(poset: &Poset, t: &SubsetTuple) -> Result<NormalForm> {
    for &p in t.parts() {
        poset.check_subset(p)?;
    }
    let reduced = canonical(poset, t);
    if reduced.is_zero() {
        return Ok(NormalForm::Zero);
    }
    match shape_of(poset) {
        Shape::Dim0 => normal_form_dim0(poset, t),
        Shape::Dim1Irreducible { .. } => classify_dim1(poset, &thread_set_family(poset, t)),
        Shape::Dim2UniqueExtremes { .. } => {
            classify_dim2(poset, &thread_set_family(poset, t))
        }
        Shape::Finite => Ok(NormalForm::Unresolved(reduced)),
    }
}

/// Classifies a family on whichever supported shape the poset has.
pub fn classify(poset: &Poset, family: &ChainFamily) -> Result<NormalForm> {
    match shape_of(poset) {
        Shape::Dim0 => classify_dim0(poset, family),
        Shape::Dim1Irreducible { .. } => classify_dim1(poset, family),
        Shape::Dim2UniqueExtremes { .. } => classify_dim2(poset, family),
        Shape::Finite => Err(Error::ShapeMismatch {
            expected: "a supported shape",
            found: "Finite",
        }),
    }
}

fn subsets_of(s: Subset) -> impl Iterator<Item = Subset> {
    let members: Vec<usize> = s.iter().collect();
    (0u64..1 << members.len()).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// Every syntactic instance of the forms on the poset's shape whose side
/// conditions hold, plus `Zero`. Forms whose tuple has no threads are left
/// out, as they coincide with `Zero`.
pub fn all_forms(poset: &Poset) -> Vec<NormalForm> {
    use NormalForm::*;
    let mut out = alloc::vec![Zero];
    match shape_of(poset) {
        Shape::Dim0 => {
            out.extend(
                subsets_of(poset.universe())
                    .filter(|a| !a.is_empty())
                    .map(|a| D0Smash { a }),
            );
        }
        Shape::Dim1Irreducible { top } => {
            let leaves = poset.universe() - Subset::singleton(top);
            for c in subsets_of(leaves) {
                if !c.is_empty() {
                    out.push(D1Lambda { c });
                }
                out.push(D1TopSmash { c });
                for d in subsets_of(leaves) {
                    out.push(D1Mixed { c, d });
                }
            }
        }
        Shape::Dim2UniqueExtremes { top, bottom } => {
            let middles = poset.universe() - Subset::singleton(top) - Subset::singleton(bottom);
            let all: Vec<Subset> = subsets_of(middles).collect();
            for &a in &all {
                if !a.is_empty() {
                    out.push(D2Form1 { a });
                }
                out.extend([D2Form2 { a }, D2Form3 { a }, D2Form4 { a }]);
                for &b in &all {
                    out.extend([
                        D2Form5 { a, b },
                        D2Form6 { a, b },
                        D2Form7 { a, b },
                        D2Form8 { a, b },
                        D2Form9 { a, b },
                    ]);
                    for &c in &all {
                        out.extend([D2Form10 { a, b, c }, D2Form11 { a, b, c }]);
                    }
                }
            }
        }
        Shape::Finite => {}
    }
    out.retain(NormalForm::side_conditions_hold);
    out
}
