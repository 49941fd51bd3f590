//! Strategies and property checks shared by the property suite and the
//! acceptance run.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::sync::Arc;

use ncgb::gbcheck::{check_gb, enumerate_overlaps};
use ncgb::monoid::word_overlaps;
use ncgb::order::OrderKind;
use ncgb::reduce::{divide, is_normal};
use ncgb::{CoefficientRing, MonomialOrder, NcPoly, Presentation, RingElement, WeightVector, Word};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn rings() -> Vec<CoefficientRing> {
    vec![
        CoefficientRing::Integers,
        CoefficientRing::Rationals,
        CoefficientRing::integers_mod(6).unwrap(),
        CoefficientRing::integers_mod(5).unwrap(),
        CoefficientRing::laurent("q"),
    ]
}

pub fn ring_strategy() -> impl Strategy<Value = CoefficientRing> {
    prop::sample::select(rings())
}

/// Raw material for a coefficient: `a + b q^e` over a Laurent ring,
/// `a / (|b| + 1)` over Q, `a` otherwise.
pub type RawCoeff = (i64, i64, i64);

pub fn raw_coeff() -> impl Strategy<Value = RawCoeff> {
    (-4i64..=4, -3i64..=3, -2i64..=2)
}

pub fn coeff(ring: &CoefficientRing, (a, b, e): RawCoeff) -> RingElement {
    match ring {
        CoefficientRing::Rationals => ring.rational(a, b.abs() + 1).unwrap(),
        CoefficientRing::LaurentIntPoly(_) => &ring.from_int(a) + &ring.laurent_monomial(b, e).unwrap(),
        _ => ring.from_int(a),
    }
}

/// `(n, graded, precedence, weights, commutative)`.
pub type OrderSpec = (usize, bool, Vec<u32>, Vec<u64>, Vec<u32>);

pub fn order_spec(max_vars: usize) -> impl Strategy<Value = OrderSpec> {
    (1..=max_vars).prop_flat_map(|n| {
        let perm = || Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle();
        (Just(n), any::<bool>(), perm(), prop::collection::vec(1u64..=3, n), perm())
    })
}

pub fn build_order((n, graded, prec, weights, comm): &OrderSpec) -> MonomialOrder {
    if *graded {
        MonomialOrder::grlex(prec.clone(), WeightVector::new(weights.clone()).unwrap()).unwrap()
    } else {
        let _ = n;
        MonomialOrder::etlex(comm.clone(), prec.clone()).unwrap()
    }
}

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n as u32, 0..=max_len).prop_map(Word::new)
}

/// Comparison read off the definitions: weighted degree or the exponent
/// vector, scanned from the top variable down, then the leftmost letter
/// where the words differ.
pub fn reference_compare(o: &MonomialOrder, a: &Word, b: &Word) -> Ordering {
    let n = o.nvars();
    let first = match o.kind() {
        OrderKind::Grlex => {
            let deg = |w: &Word| w.letters().iter().map(|&x| o.weights().as_slice()[x as usize]).sum::<u64>();
            deg(a).cmp(&deg(b))
        }
        OrderKind::Etlex => {
            let count = |w: &Word, x: u32| w.letters().iter().filter(|&&y| y == x).count();
            let mut res = Ordering::Equal;
            for &x in o.commutative_precedence().iter().rev() {
                if count(a, x) != count(b, x) {
                    res = count(a, x).cmp(&count(b, x));
                    break;
                }
            }
            res
        }
    };
    if first != Ordering::Equal {
        return first;
    }
    let pos = |x: u32| o.precedence().iter().position(|&y| y == x).unwrap();
    let _ = n;
    for (x, y) in a.letters().iter().zip(b.letters()) {
        if x != y {
            return pos(*x).cmp(&pos(*y));
        }
    }
    a.len().cmp(&b.len())
}

#[derive(Debug, Clone)]
pub struct OrderCase {
    pub spec: OrderSpec,
    pub words: [Word; 5],
}

pub fn order_case() -> impl Strategy<Value = OrderCase> {
    order_spec(3).prop_flat_map(|spec| {
        let n = spec.0;
        (
            Just(spec),
            [word(n, 5), word(n, 5), word(n, 5), word(n, 3), word(n, 3)],
        )
            .prop_map(|(spec, words)| OrderCase { spec, words })
    })
}

/// Totality, antisymmetry, transitivity, agreement with the definition and
/// with the sort key, compatibility with two-sided multiplication, 1 as the
/// minimum, and finite down-sets for graded orders.
pub fn check_order_axioms(c: &OrderCase) -> Result<(), TestCaseError> {
    let o = build_order(&c.spec);
    let [a, b, d, u, v] = &c.words;
    let ab = o.compare(a, b);
    prop_assert_eq!(ab, reference_compare(&o, a, b));
    prop_assert_eq!(ab, o.key(a).cmp(&o.key(b)));
    prop_assert_eq!(ab.reverse(), o.compare(b, a));
    prop_assert_eq!(ab == Ordering::Equal, a == b);
    if ab.is_lt() && o.compare(b, d).is_lt() {
        prop_assert!(o.compare(a, d).is_lt());
    }
    if ab != Ordering::Equal {
        prop_assert_eq!(o.compare(&a.sandwich(u, v), &b.sandwich(u, v)), ab);
    }
    prop_assert!(o.compare(&Word::one(), a).is_le());
    prop_assert!(o.compare(a, &a.concat(u)).is_le());
    if o.is_graded() {
        // anything below `a` has weighted degree at most that of `a`
        let deg = |w: &Word| w.degree(o.weights()).unwrap();
        if o.compare(b, a).is_lt() {
            prop_assert!(deg(b) <= deg(a));
        }
    }
    let mut set = [a.clone(), b.clone(), d.clone(), u.clone(), v.clone()];
    set.sort_by(|x, y| o.compare(x, y));
    prop_assert!(set.windows(2).all(|w| o.compare(&w[0], &w[1]).is_le()));
    Ok(())
}

/// Random terms `(coefficient material, word)`.
pub fn raw_poly(n: usize, max_len: usize, max_terms: usize) -> impl Strategy<Value = Vec<(RawCoeff, Word)>> {
    prop::collection::vec((raw_coeff(), word(n, max_len)), 1..=max_terms)
}

pub fn poly(ring: &CoefficientRing, order: &Arc<MonomialOrder>, raw: &[(RawCoeff, Word)]) -> NcPoly {
    NcPoly::normalize(raw.iter().map(|(c, w)| (coeff(ring, *c), w.clone())).collect(), ring, order).unwrap()
}

/// Turns `p` into a monic relation by resetting its leading coefficient;
/// `None` when `p` is zero or has leading monomial 1.
pub fn monic(p: &NcPoly) -> Option<NcPoly> {
    let lt = p.leading_term().ok()?;
    if lt.word.is_one() {
        return None;
    }
    let fix = &p.ring().one() - &lt.coeff;
    let m = NcPoly::monomial(fix, lt.word.clone(), p.order()).ok()?;
    let g = p.add(&m).ok()?;
    (g.is_monic() && g.lm().ok() == Some(&lt.word)).then_some(g)
}

#[derive(Debug, Clone)]
pub struct DivisionCase {
    pub ring: CoefficientRing,
    pub spec: OrderSpec,
    pub relations: Vec<Vec<(RawCoeff, Word)>>,
    pub dividend: Vec<(RawCoeff, Word)>,
}

pub fn division_case() -> impl Strategy<Value = DivisionCase> {
    (ring_strategy(), order_spec(3)).prop_flat_map(|(ring, spec)| {
        let n = spec.0;
        (
            Just(ring),
            Just(spec),
            prop::collection::vec(raw_poly(n, 3, 3), 1..=3),
            raw_poly(n, 5, 5),
        )
            .prop_map(|(ring, spec, relations, dividend)| DivisionCase {
                ring,
                spec,
                relations,
                dividend,
            })
    })
}

impl DivisionCase {
    pub fn build(&self) -> (Vec<NcPoly>, NcPoly) {
        let order = Arc::new(build_order(&self.spec));
        let rels = self
            .relations
            .iter()
            .filter_map(|r| monic(&poly(&self.ring, &order, r)))
            .collect();
        (rels, poly(&self.ring, &order, &self.dividend))
    }
}

/// The trace rebuilds the dividend, the remainder is normal, the trace
/// steps strip strictly decreasing monomials and nothing in the remainder
/// exceeds the dividend's leading monomial.
pub fn check_division(c: &DivisionCase) -> Result<(), TestCaseError> {
    let (rels, f) = c.build();
    prop_assume!(!rels.is_empty());
    let r = divide(&f, &rels).unwrap();
    prop_assert_eq!(r.reconstruct(&rels).unwrap(), f.clone());
    prop_assert!(is_normal(&r.remainder, &rels));
    let order = f.order();
    let stripped: Vec<Word> = r
        .trace
        .iter()
        .map(|s| s.left.concat(rels[s.relation].lm().unwrap()).concat(&s.right))
        .collect();
    prop_assert!(stripped.windows(2).all(|w| order.compare(&w[0], &w[1]).is_gt()));
    if let (Ok(top), Ok(rm)) = (f.lm(), r.remainder.lm()) {
        prop_assert!(order.compare(rm, top).is_le());
    }
    for s in &r.trace {
        prop_assert!(!s.coeff.is_zero());
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct OverlapCase {
    pub n: usize,
    pub p: Word,
    pub q: Word,
}

pub fn overlap_case() -> impl Strategy<Value = OverlapCase> {
    (1usize..=3).prop_flat_map(|n| {
        let nonempty = move || prop::collection::vec(0..n as u32, 1..=4).prop_map(Word::new);
        (Just(n), nonempty(), nonempty()).prop_map(|(n, p, q)| OverlapCase { n, p, q })
    })
}

/// Every word over `n` letters of length below `len`.
pub fn all_words(n: usize, below_len: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    let mut frontier = vec![Vec::<u32>::new()];
    for _ in 1..below_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 0..n as u32 {
                let mut w2 = w.clone();
                w2.push(x);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        frontier = next;
    }
    out
}

/// Overlaps found by scanning every candidate right flank `u`.
pub fn brute_overlaps(n: usize, p: &Word, q: &Word) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for u in all_words(n, q.len()) {
        let pu = p.concat(&u);
        let cut = pu.len() as isize - q.len() as isize;
        if cut < 0 || cut as usize >= p.len() {
            continue;
        }
        let v = pu.slice(0, cut as usize);
        if v.concat(q) == pu {
            out.push((u, v));
        }
    }
    out.sort_by_key(|(_, v)| v.len());
    out
}

pub fn check_overlaps(c: &OverlapCase) -> Result<(), TestCaseError> {
    let found = word_overlaps(&c.p, &c.q).unwrap();
    prop_assert_eq!(&found, &brute_overlaps(c.n, &c.p, &c.q));
    for (u, v) in &found {
        prop_assert_eq!(c.p.concat(u), v.concat(&c.q));
    }
    // as relations: the overlap element cancels the common word
    let order = Arc::new(MonomialOrder::grlex_natural(c.n));
    let ring = CoefficientRing::Integers;
    let mk = |w: &Word| -> Option<NcPoly> {
        let lower = NcPoly::word(Word::one(), &ring, &order).unwrap();
        NcPoly::word(w.clone(), &ring, &order).unwrap().add(&lower).ok()
    };
    let (Some(gp), Some(gq)) = (mk(&c.p), mk(&c.q)) else {
        return Ok(());
    };
    let rels = vec![gp, gq];
    let all = enumerate_overlaps(&rels).unwrap();
    let keys: Vec<(usize, usize, usize)> = all.iter().map(|o| (o.i, o.j, o.v.len())).collect();
    prop_assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    for o in &all {
        let top = rels[o.i].lm().unwrap().concat(&o.u);
        let el = o.element(&rels).unwrap();
        prop_assert!(el.coeff_of(&top).is_zero());
        if let Ok(lm) = el.lm() {
            prop_assert!(order.compare(lm, &top).is_lt());
        }
    }
    let expected: usize = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| brute_overlaps(c.n, rels[i].lm().unwrap(), rels[j].lm().unwrap()).len())
        .sum();
    prop_assert_eq!(all.len(), expected);
    Ok(())
}

const NAME_POOL: &[&str] = &["X1", "X2", "X3", "a", "b", "y_2", "z0", "x12", "t"];

#[derive(Debug, Clone)]
pub struct PresentationCase {
    pub ring: CoefficientRing,
    pub spec: OrderSpec,
    pub names: Vec<String>,
    pub relations: Vec<Vec<(RawCoeff, Word)>>,
}

pub fn presentation_case() -> impl Strategy<Value = PresentationCase> {
    (ring_strategy(), order_spec(4)).prop_flat_map(|(ring, spec)| {
        let n = spec.0;
        (
            Just(ring),
            Just(spec),
            prop::sample::subsequence(NAME_POOL.to_vec(), n).prop_shuffle(),
            prop::collection::vec(raw_poly(n, 4, 4), 0..=4),
        )
            .prop_map(|(ring, spec, names, relations)| PresentationCase {
                ring,
                spec,
                names: names.into_iter().map(String::from).collect(),
                relations,
            })
    })
}

impl PresentationCase {
    pub fn build(&self) -> Presentation {
        let order = Arc::new(build_order(&self.spec));
        let rels = self
            .relations
            .iter()
            .map(|r| poly(&self.ring, &order, r))
            .filter(|p| !p.is_zero())
            .collect();
        Presentation::new(self.ring.clone(), self.names.clone(), order, rels).unwrap()
    }
}

/// `parse(format(P)) = P`, formatting is a fixed point, and each relation
/// survives a standalone polynomial round trip.
pub fn check_round_trip(c: &PresentationCase) -> Result<(), TestCaseError> {
    let p = c.build();
    let text = p.to_string();
    let back = Presentation::parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
    prop_assert_eq!(&back, &p);
    prop_assert_eq!(back.to_string(), text);
    for g in p.relations() {
        prop_assert_eq!(&p.poly(&p.display_poly(g)).unwrap(), g);
    }
    Ok(())
}

/// Runs `check_gb` and insists every reported remainder is consistent: the
/// trace rebuilds the overlap element, and a failing remainder is normal.
pub fn check_report_consistency(c: &DivisionCase) -> Result<(), TestCaseError> {
    let (rels, _) = c.build();
    prop_assume!(!rels.is_empty());
    let report = check_gb(&rels).unwrap();
    for r in &report.overlaps {
        prop_assert_eq!(r.reduction.reconstruct(&rels).unwrap(), r.element.clone());
        if !r.reduced_to_zero() {
            let kept: Vec<NcPoly> = report.kept.iter().map(|&i| rels[i].clone()).collect();
            prop_assert!(is_normal(&r.reduction.remainder, &kept));
        }
    }
    prop_assert_eq!(report.verdict, report.witnesses().is_empty());
    Ok(())
}
