//! Exhaustive and sampled checks of the reduction, monoid and classifier
//! laws over a corpus of small posets.
//!
//! Every check compares the library against an independent computation
//! where one exists: thread sets are recomputed from a brute-force thread
//! list, `delta` from the same list, and `gamma` by exploring all removal
//! orders. Each failure records the full inputs so it can be replayed.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use bousfield_core::classify::{all_forms, classify};
use bousfield_core::tuple::{
    delta_explicit, gamma_steps, is_collapsed, is_concatenated, is_downward_concatenated,
    is_upward_concatenated,
};
use bousfield_core::{
    beta, canonical, catalog, delta, gamma, normal_form, shape_of, star, tau, thread_set_family,
    w, Chain, ChainFamily, NormalForm, Poset, Shape, Subset, SubsetTuple,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::format::{family_to_json, tuple_to_json};

/// How much of the tuple space to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_k: usize,
    /// Largest space enumerated exhaustively.
    pub budget: u64,
    /// Refuse to sample: an oversized space is an error instead.
    pub exhaustive: bool,
    pub seed: u64,
    /// Samples drawn per tuple length when a space is over budget.
    pub samples: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_k: 2,
            budget: 1 << 20,
            exhaustive: false,
            seed: 0,
            samples: 4096,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub space: u128,
    pub budget: u64,
}

impl std::fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "exhaustive mode needs {} cases, over the budget of {}",
            self.space, self.budget
        )
    }
}

impl std::error::Error for BudgetExceeded {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    pub inputs: Vec<serde_json::Value>,
    pub expected: serde_json::Value,
    pub actual: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub poset: String,
    pub elements: usize,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Set when part of the space was sampled.
    pub seed: Option<u64>,
    pub notes: BTreeMap<String, u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Failures kept in full per report; the rest are only counted.
const MAX_RECORDED: usize = 20;

impl VerificationReport {
    fn new(suite: &str, name: &str, p: &Poset) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            poset: name.to_string(),
            elements: p.len(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            seed: None,
            notes: BTreeMap::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, property: &str, inputs: Vec<serde_json::Value>, expected: serde_json::Value, actual: serde_json::Value) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(Failure {
                property: property.to_string(),
                inputs,
                expected,
                actual,
            });
        }
    }

    fn note(&mut self, key: &str, by: u64) {
        *self.notes.entry(key.to_string()).or_default() += by;
    }
}

/// Checks `expected == actual`, recording a failure otherwise.
macro_rules! check_eq {
    ($rep:expr, $prop:expr, $inputs:expr, $exp:expr, $act:expr, $show:expr) => {{
        let (e, a) = (&$exp, &$act);
        if e != a {
            $rep.fail($prop, $inputs, $show(e), $show(a));
        }
    }};
}

fn check(rep: &mut VerificationReport, property: &str, inputs: Vec<serde_json::Value>, ok: bool) {
    if !ok {
        rep.fail(property, inputs, true.into(), false.into());
    }
}

/// The tuples to test on `p`: every tuple of each length up to `max_k` when
/// the space fits the budget, else a seeded sample.
pub fn tuples(p: &Poset, bounds: &Bounds, max_k: usize) -> Result<(Vec<SubsetTuple>, bool), BudgetExceeded> {
    let n = p.len();
    let per_part = 1u128 << n;
    let mut out = Vec::new();
    let mut sampled = false;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for k in 1..=max_k {
        let space = per_part.pow(k as u32);
        if space <= bounds.budget as u128 {
            let count = space as u64;
            let base = per_part as u64;
            for code in 0..count {
                let parts = (0..k)
                    .map(|i| Subset::from_bits(code / base.pow(i as u32) % base))
                    .collect();
                out.push(SubsetTuple::new(p, parts).unwrap());
            }
        } else if bounds.exhaustive {
            return Err(BudgetExceeded {
                space,
                budget: bounds.budget,
            });
        } else {
            sampled = true;
            let full = p.universe().bits();
            for _ in 0..bounds.samples {
                let parts = (0..k)
                    .map(|_| Subset::from_bits(rng.random::<u64>() & full))
                    .collect();
                out.push(SubsetTuple::new(p, parts).unwrap());
            }
        }
    }
    Ok((out, sampled))
}

/// Thread list by cartesian product of the parts.
pub fn brute_threads(p: &Poset, t: &SubsetTuple) -> Vec<Vec<usize>> {
    let mut seqs: Vec<Vec<usize>> = vec![Vec::new()];
    for part in t.parts() {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                part.iter().map(move |a| {
                    let mut s2 = s.clone();
                    s2.push(a);
                    s2
                })
            })
            .filter(|s| s.len() < 2 || p.leq(s[s.len() - 1], s[s.len() - 2]))
            .collect();
    }
    seqs
}

/// `T(t)` as the minimal thread supports, from the brute-force thread list.
pub fn brute_family(p: &Poset, t: &SubsetTuple) -> ChainFamily {
    ChainFamily::from_chains(
        brute_threads(p, t)
            .iter()
            .map(|s| p.chain(s.iter().copied().collect()).unwrap()),
    )
}

fn delta_oracle(p: &Poset, t: &SubsetTuple) -> SubsetTuple {
    let threads = brute_threads(p, t);
    let parts = (0..t.len())
        .map(|i| threads.iter().map(|s| s[i]).collect())
        .collect();
    SubsetTuple::new(p, parts).unwrap()
}

/// Every result reachable by a maximal sequence of `gamma` steps.
fn gamma_normal_forms(t: &SubsetTuple) -> BTreeSet<SubsetTuple> {
    let mut seen = BTreeSet::new();
    let mut leaves = BTreeSet::new();
    let mut stack = vec![t.clone()];
    while let Some(u) = stack.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        let next = gamma_steps(&u);
        if next.is_empty() {
            leaves.insert(u);
        } else {
            stack.extend(next);
        }
    }
    leaves
}

pub fn verify_operator_laws(name: &str, p: &Poset, bounds: &Bounds) -> Result<VerificationReport, BudgetExceeded> {
    let start = Instant::now();
    let mut rep = VerificationReport::new("operator-laws", name, p);
    let (ts, sampled) = tuples(p, bounds, bounds.max_k)?;
    if sampled {
        rep.seed = Some(bounds.seed);
    }
    let tj = |t: &SubsetTuple| tuple_to_json(p, t);
    for t in &ts {
        rep.cases += 1;
        let inputs = || vec![tj(t)];
        let (ta, be) = (tau(p, t), beta(p, t));
        check_eq!(rep, "tau idempotent", inputs(), ta, tau(p, &ta), tj);
        check_eq!(rep, "beta idempotent", inputs(), be, beta(p, &be), tj);
        let g = gamma(t);
        check_eq!(rep, "gamma idempotent", inputs(), g, gamma(&g), tj);
        let c = canonical(p, t);
        check_eq!(rep, "canonical idempotent", inputs(), c, canonical(p, &c), tj);

        let d = delta(p, t);
        check_eq!(rep, "tau beta = delta", inputs(), d, tau(p, &be), tj);
        check_eq!(rep, "beta tau = delta", inputs(), d, beta(p, &ta), tj);
        check_eq!(rep, "explicit delta", inputs(), d, delta_explicit(p, t), tj);
        check_eq!(rep, "delta from threads", inputs(), delta_oracle(p, t), d, tj);
        check(&mut rep, "tau upward concatenated", inputs(), is_upward_concatenated(p, &ta));
        check(&mut rep, "beta downward concatenated", inputs(), is_downward_concatenated(p, &be));
        check(
            &mut rep,
            "canonical collapsed and concatenated",
            inputs(),
            c.is_zero() || (is_collapsed(&c) && is_concatenated(p, &c)),
        );
        if t.len() == 1 {
            check(&mut rep, "1-tuples fixed", inputs(), ta == *t && be == *t && g == *t);
        }

        let leaves = gamma_normal_forms(t);
        let confluent = leaves.len() == 1 && leaves.contains(&g);
        if !confluent {
            let actual = leaves.iter().map(tj).collect::<Vec<_>>();
            rep.fail("gamma confluent", inputs(), tj(&g), actual.into());
        }
        check(&mut rep, "gamma keeps upward concatenated", inputs(), is_upward_concatenated(p, &gamma(&ta)));
        check(&mut rep, "gamma keeps downward concatenated", inputs(), is_downward_concatenated(p, &gamma(&be)));

        if is_collapsed(t) && !is_collapsed(&d) {
            rep.note("collapsed inputs with non-collapsed delta", 1);
        }
    }
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// Families with at most two generators, one per antichain of chains.
fn small_families(p: &Poset) -> Vec<ChainFamily> {
    let chains: Vec<Chain> = p.chains().collect();
    let mut out = vec![ChainFamily::empty()];
    for (i, &a) in chains.iter().enumerate() {
        out.push(ChainFamily::from_chains([a]));
        for &b in &chains[i + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) {
                out.push(ChainFamily::from_chains([a, b]));
            }
        }
    }
    out
}

pub fn verify_thread_monoid(name: &str, p: &Poset, bounds: &Bounds) -> Result<VerificationReport, BudgetExceeded> {
    let start = Instant::now();
    let mut rep = VerificationReport::new("monoid", name, p);
    let (ts, sampled) = tuples(p, bounds, bounds.max_k)?;
    let tj = |t: &SubsetTuple| tuple_to_json(p, t);
    let fj = |f: &ChainFamily| family_to_json(p, f);
    for t in &ts {
        rep.cases += 1;
        let inputs = || vec![tj(t)];
        let f = thread_set_family(p, t);
        check_eq!(rep, "T from threads", inputs(), brute_family(p, t), f, fj);

        let mut product = w(p, t.parts()[0]).unwrap();
        for &a in &t.parts()[1..] {
            product = star(p, &product, &w(p, a).unwrap());
        }
        check_eq!(rep, "T = w(A1) * .. * w(Ak)", inputs(), f, product, fj);

        for split in 1..t.len() {
            let l = t.slice(0..split).unwrap();
            let r = t.slice(split..t.len()).unwrap();
            let joined = star(p, &thread_set_family(p, &l), &thread_set_family(p, &r));
            check_eq!(rep, "T(t ++ s) = T(t) * T(s)", vec![tj(&l), tj(&r)], f, joined, fj);
        }

        let c = canonical(p, t);
        check_eq!(rep, "T(canonical) = T", inputs(), f, thread_set_family(p, &c), fj);
        if f.is_empty() != c.is_zero() {
            rep.fail("T empty iff Zero", inputs(), f.is_empty().into(), c.is_zero().into());
        }

        if t.len() == 2 {
            let (a, b) = (t.parts()[0], t.parts()[1]);
            let a2 = a & p.cofamily_geq(b).unwrap();
            let b2 = b & p.family_leq(a).unwrap();
            let left = SubsetTuple::new(p, vec![a2, b]).unwrap();
            let right = SubsetTuple::new(p, vec![a, b2]).unwrap();
            check_eq!(rep, "T(A, B) = T(A ∩ [>= B], B)", inputs(), f, thread_set_family(p, &left), fj);
            check_eq!(rep, "T(A, B) = T(A, B ∩ [<= A])", inputs(), f, thread_set_family(p, &right), fj);
        }
    }

    let fams = small_families(p);
    let triples = (fams.len() as u128).pow(3);
    let assoc = |rep: &mut VerificationReport, u: &ChainFamily, v: &ChainFamily, x: &ChainFamily| {
        rep.cases += 1;
        let l = star(p, &star(p, u, v), x);
        let r = star(p, u, &star(p, v, x));
        check_eq!(rep, "* associative", vec![fj(u), fj(v), fj(x)], l, r, fj);
    };
    if triples <= bounds.budget as u128 {
        for u in &fams {
            for v in &fams {
                for x in &fams {
                    assoc(&mut rep, u, v, x);
                }
            }
        }
    } else if bounds.exhaustive {
        return Err(BudgetExceeded {
            space: triples,
            budget: bounds.budget,
        });
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x5eed);
        for _ in 0..bounds.samples {
            let mut pick = || &fams[rng.random_range(0..fams.len())];
            let (u, v, x) = (pick(), pick(), pick());
            assoc(&mut rep, u, v, x);
        }
        rep.seed = Some(bounds.seed);
    }
    if sampled {
        rep.seed = Some(bounds.seed);
    }

    if let Shape::Dim2UniqueExtremes { top, bottom } = shape_of(p) {
        diamond_identities(&mut rep, p, top, bottom);
    }
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// The thread-set identities on a poset with unique extremes `t > m`, for
/// all `A, B` among the middle elements.
fn diamond_identities(rep: &mut VerificationReport, p: &Poset, top: usize, bottom: usize) {
    let t = Subset::singleton(top);
    let m = Subset::singleton(bottom);
    let middles: Vec<usize> = (p.universe() - t - m).iter().collect();
    let subsets: Vec<Subset> = (0u64..1 << middles.len())
        .map(|mask| {
            middles
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    let tf = |parts: Vec<Subset>| thread_set_family(p, &SubsetTuple::new(p, parts).unwrap());
    let fj = |f: &ChainFamily| family_to_json(p, f);
    for &a in &subsets {
        for &b in &subsets {
            rep.cases += 1;
            let ab = a & b;
            let sj = |s: Subset| serde_json::Value::from(p.subset_names(s));
            let inputs = || vec![sj(a), sj(b)];
            check_eq!(rep, "T(tAm, tBm) = T(t(A∩B)m)", inputs(), tf(vec![t | a | m, t | b | m]), tf(vec![t | ab | m]), fj);
            check_eq!(rep, "T(tA, tBm) = T(tA, t(A∩B)m)", inputs(), tf(vec![t | a, t | b | m]), tf(vec![t | a, t | ab | m]), fj);
            check_eq!(rep, "T(tAm, Bm) = T(t(A∩B)m, Bm)", inputs(), tf(vec![t | a | m, b | m]), tf(vec![t | ab | m, b | m]), fj);
            check_eq!(rep, "T(tA, t(A∩B)m, Bm) = T(tA, Bm)", inputs(), tf(vec![t | a, t | ab | m, b | m]), tf(vec![t | a, b | m]), fj);
        }
    }
}

/// Groups tuples by thread-set family and checks that every group has one
/// normal form.
pub fn verify_normal_form_buckets(name: &str, p: &Poset, bounds: &Bounds) -> Result<VerificationReport, BudgetExceeded> {
    let start = Instant::now();
    let mut rep = VerificationReport::new("conjecture", name, p);
    let max_k = if p.len() <= 3 { bounds.max_k.max(3) } else { bounds.max_k };
    let (ts, sampled) = tuples(p, bounds, max_k)?;
    if sampled {
        rep.seed = Some(bounds.seed);
    }
    let shape = shape_of(p);
    let tj = |t: &SubsetTuple| tuple_to_json(p, t);

    struct Bucket {
        first: SubsetTuple,
        size: u64,
        form: Option<NormalForm>,
        canonicals: BTreeSet<SubsetTuple>,
        intersections: BTreeSet<Subset>,
    }
    let mut buckets: BTreeMap<ChainFamily, Bucket> = BTreeMap::new();
    for t in &ts {
        rep.cases += 1;
        let f = thread_set_family(p, t);
        let c = canonical(p, t);
        let form = match normal_form(p, t) {
            Ok(form) => form,
            Err(e) => {
                rep.fail("normal form defined", vec![tj(t)], "a normal form".into(), e.to_string().into());
                continue;
            }
        };
        if shape.is_supported() && matches!(form, NormalForm::Unresolved(_)) {
            rep.fail("supported shape resolved", vec![tj(t)], "resolved".into(), "Unresolved".into());
        }
        let meet = t.parts().iter().fold(p.universe(), |acc, &a| acc & a);
        let fj = |f: &ChainFamily| family_to_json(p, f);
        check_eq!(rep, "T(canonical) = T", vec![tj(t)], f, thread_set_family(p, &c), fj);
        let b = buckets.entry(f).or_insert_with(|| Bucket {
            first: t.clone(),
            size: 0,
            form: shape.is_supported().then(|| form.clone()),
            canonicals: BTreeSet::new(),
            intersections: BTreeSet::new(),
        });
        b.size += 1;
        b.canonicals.insert(c);
        b.intersections.insert(meet);
        if let Some(expected) = &b.form {
            if *expected != form {
                let first = b.first.clone();
                rep.fail(
                    "one normal form per thread-set class",
                    vec![tj(&first), tj(t)],
                    crate::format::form_to_json(p, expected),
                    crate::format::form_to_json(p, &form),
                );
            }
        }
    }

    rep.note("classes", buckets.len() as u64);
    rep.note("largest class", buckets.values().map(|b| b.size).max().unwrap_or(0));
    let collisions = buckets.values().filter(|b| b.canonicals.len() > 1).count();
    rep.note("classes with several canonical tuples", collisions as u64);
    if shape == Shape::Dim0 {
        let mut seen = BTreeSet::new();
        for b in buckets.values() {
            let single = b.intersections.len() == 1;
            let fresh = b.intersections.iter().all(|s| seen.insert(*s));
            if !(single && fresh) {
                rep.fail(
                    "antichain classes indexed by the intersection",
                    vec![tj(&b.first)],
                    1.into(),
                    (b.intersections.len() as u64).into(),
                );
            }
        }
    }
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// Round-trips every normal form through its thread-set family.
pub fn verify_classifier(name: &str, p: &Poset) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::new("classifier", name, p);
    if !shape_of(p).is_supported() {
        rep.note("unsupported shape", 1);
        return rep;
    }
    let fj = |f: &ChainFamily| family_to_json(p, f);
    let formj = |f: &NormalForm| crate::format::form_to_json(p, f);
    let mut seen: BTreeMap<ChainFamily, NormalForm> = BTreeMap::new();
    for form in all_forms(p) {
        rep.cases += 1;
        let Some(t) = form.as_tuple(p) else {
            rep.fail("form has a tuple", vec![formj(&form)], true.into(), false.into());
            continue;
        };
        let f = thread_set_family(p, &t);
        match classify(p, &f) {
            Ok(back) => check_eq!(rep, "classify(T(form)) = form", vec![fj(&f)], form, back, formj),
            Err(e) => rep.fail("classify(T(form)) = form", vec![fj(&f)], formj(&form), e.to_string().into()),
        }
        if let Some(prev) = seen.insert(f.clone(), form.clone()) {
            rep.fail("distinct forms have distinct T", vec![formj(&prev), formj(&form)], false.into(), fj(&f));
        }
    }
    rep.cases += 1;
    match classify(p, &ChainFamily::empty()) {
        Ok(NormalForm::Zero) => {}
        other => rep.fail("empty family is Zero", vec![], "Zero".into(), format!("{other:?}").into()),
    }
    rep.elapsed = start.elapsed();
    rep
}

/// All posets on `n` labeled elements `x0 .. x(n-1)`.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let lt = |a: usize, b: usize| {
            pairs
                .iter()
                .position(|&q| q == (a, b))
                .is_some_and(|i| mask >> i & 1 == 1)
        };
        let antisymmetric = pairs.iter().all(|&(a, b)| !(lt(a, b) && lt(b, a)));
        let transitive = pairs.iter().all(|&(a, b)| {
            !lt(a, b) || (0..n).all(|c| c == b || !lt(b, c) || lt(a, c))
        });
        if antisymmetric && transitive {
            let rel: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(a, b)| lt(a, b)).collect();
            out.push(Poset::from_indices(names.clone(), &rel).unwrap());
        }
    }
    out
}

/// The default corpus: every labeled poset on 1 to 4 elements, then the
/// catalog examples.
pub fn default_corpus() -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for (i, p) in labeled_posets(n).into_iter().enumerate() {
            out.push((format!("labeled{n}#{i}"), p));
        }
    }
    let entries: &[(&str, &[usize])] = &[
        ("chain", &[2]),
        ("chain", &[3]),
        ("star", &[3]),
        ("star", &[4]),
        ("diamond", &[2]),
        ("diamond", &[3]),
        ("two_chains", &[]),
        ("zariski_xy", &[1, 1]),
        ("zariski_xy", &[2, 2]),
        ("circle", &[4]),
        ("torus2", &[2]),
        ("chromatic", &[3]),
    ];
    for &(name, params) in entries {
        let e = catalog(name, params).unwrap();
        let label = std::iter::once(name.to_string())
            .chain(params.iter().map(|x| x.to_string()))
            .collect::<Vec<_>>()
            .join(" ");
        out.push((label, e.poset));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    OperatorLaws,
    Monoid,
    Conjecture,
    Classifier,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::OperatorLaws, Suite::Monoid, Suite::Conjecture, Suite::Classifier];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OperatorLaws => "operator-laws",
            Suite::Monoid => "monoid",
            Suite::Conjecture => "conjecture",
            Suite::Classifier => "classifier",
        }
    }
}

pub fn run_suite(suite: Suite, name: &str, p: &Poset, bounds: &Bounds) -> Result<VerificationReport, BudgetExceeded> {
    match suite {
        Suite::OperatorLaws => verify_operator_laws(name, p, bounds),
        Suite::Monoid => verify_thread_monoid(name, p, bounds),
        Suite::Conjecture => verify_normal_form_buckets(name, p, bounds),
        Suite::Classifier => Ok(verify_classifier(name, p)),
    }
}

/// Runs `suite` over a corpus, in corpus order.
pub fn run_corpus(suite: Suite, corpus: &[(String, Poset)], bounds: &Bounds) -> Result<Vec<VerificationReport>, BudgetExceeded> {
    corpus
        .iter()
        .map(|(name, p)| run_suite(suite, name, p, bounds))
        .collect()
}
