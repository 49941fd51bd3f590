//! Normal words, their counts by degree, the PBW verdict for relation sets
//! whose leading monomials are the descending pair products, and a brute
//! force check of the direct-sum decomposition over a field.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gbcheck::check_gb;
use crate::linalg::RowEchelon;
use crate::monoid::{WeightVector, Word};
use crate::order::MonomialOrder;
use crate::presentation::Presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Weighted degree at most `d`.
    MaxDegree(u64),
    /// At most `L` letters.
    MaxLength(usize),
}

fn check_patterns(patterns: &[Word]) -> Result<()> {
    if patterns.iter().any(Word::is_empty) {
        return Err(Error::EmptyWord);
    }
    Ok(())
}

/// Words within `bound` avoiding every pattern as a subword, ascending in
/// `order`. Degrees use the order's weights.
pub fn normal_words(patterns: &[Word], order: &MonomialOrder, bound: Bound) -> Result<Vec<Word>> {
    check_patterns(patterns)?;
    let weights = order.weights().as_slice();
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<u32>::new(), 0u64)];
    while let Some((letters, deg)) = stack.pop() {
        for x in 0..order.nvars() as u32 {
            let d = deg + weights[x as usize];
            let fits = match bound {
                Bound::MaxDegree(max) => d <= max,
                Bound::MaxLength(max) => letters.len() < max,
            };
            if !fits {
                continue;
            }
            let mut next = letters.clone();
            next.push(x);
            if patterns.iter().all(|p| !next.ends_with(p.letters())) {
                stack.push((next, d));
            }
        }
        out.push(Word::new(letters));
    }
    out.sort_by(|a, b| order.compare(a, b));
    Ok(out)
}

/// Multi-pattern automaton: a trie with failure links, where a state is
/// dead once any pattern ends there.
struct Automaton {
    next: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl Automaton {
    fn new(patterns: &[Word], nvars: usize) -> Self {
        let mut children: Vec<HashMap<u32, usize>> = vec![HashMap::new()];
        let mut dead = vec![false];
        for p in patterns {
            let mut s = 0;
            for &x in p.letters() {
                s = match children[s].get(&x) {
                    Some(&t) => t,
                    None => {
                        children.push(HashMap::new());
                        dead.push(false);
                        let t = children.len() - 1;
                        children[s].insert(x, t);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let n = children.len();
        let mut next = vec![vec![0; nvars]; n];
        let mut fail = vec![0; n];
        let mut queue = VecDeque::new();
        for x in 0..nvars as u32 {
            if let Some(&t) = children[0].get(&x) {
                next[0][x as usize] = t;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for x in 0..nvars as u32 {
                match children[s].get(&x) {
                    Some(&t) => {
                        fail[t] = next[fail[s]][x as usize];
                        next[s][x as usize] = t;
                        queue.push_back(t);
                    }
                    None => next[s][x as usize] = next[fail[s]][x as usize],
                }
            }
        }
        Automaton { next, dead }
    }
}

/// Number of normal words of each weighted degree `0..=max_degree`.
pub fn count_normal_words_by_degree(patterns: &[Word], weights: &WeightVector, max_degree: u64) -> Result<Vec<u128>> {
    check_patterns(patterns)?;
    let n = weights.len();
    let auto = Automaton::new(patterns, n);
    let states = auto.next.len();
    let top = max_degree as usize;
    let mut dp = vec![vec![0u128; states]; top + 1];
    dp[0][0] = 1;
    let overflow = || Error::InvalidParameter("normal word count overflows".into());
    for d in 0..=top {
        for s in 0..states {
            let c = dp[d][s];
            if c == 0 {
                continue;
            }
            for x in 0..n {
                let e = d + weights.as_slice()[x] as usize;
                let t = auto.next[s][x];
                if e <= top && !auto.dead[t] {
                    dp[e][t] = dp[e][t].checked_add(c).ok_or_else(overflow)?;
                }
            }
        }
    }
    dp.iter()
        .map(|row| row.iter().try_fold(0u128, |acc, &c| acc.checked_add(c).ok_or_else(overflow)))
        .collect()
}

pub fn count_normal_words(patterns: &[Word], weights: &WeightVector, degree: u64) -> Result<u128> {
    Ok(*count_normal_words_by_degree(patterns, weights, degree)?.last().expect("degree 0 included"))
}

/// One factor `X^a` of an ordered product, with `a <= max` when bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFactor {
    pub var: u32,
    pub max_exponent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwVerdict {
    pub shape_ok: bool,
    pub gb_ok: bool,
    pub pbw: bool,
    /// Pairs `(a, b)`, `a` below `b` in precedence, with no relation of
    /// leading monomial `b*a`.
    pub missing_pairs: Vec<(u32, u32)>,
    /// Ordered-product basis, variables in ascending precedence.
    pub basis: Vec<BasisFactor>,
    /// Leading monomials that are neither descending pairs nor powers of a
    /// single variable; when present the ordered products overcount.
    pub other_lms: Vec<Word>,
}

impl PbwVerdict {
    /// Ordered products of weighted degree `d`, with the exponent bounds.
    pub fn basis_count(&self, weights: &WeightVector, d: u64) -> u128 {
        let mut ways = vec![0u128; d as usize + 1];
        ways[0] = 1;
        for f in &self.basis {
            let w = weights.as_slice()[f.var as usize] as usize;
            let mut next = vec![0u128; ways.len()];
            for (deg, &c) in ways.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut k = 0;
                while deg + k * w < next.len() && f.max_exponent.is_none_or(|m| k <= m) {
                    next[deg + k * w] += c;
                    k += 1;
                }
            }
            ways = next;
        }
        ways[d as usize]
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> BasisDisplay<'a> {
        BasisDisplay { verdict: self, names }
    }
}

pub struct BasisDisplay<'a> {
    verdict: &'a PbwVerdict,
    names: &'a [String],
}

impl fmt::Display for BasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |x: u32| self.names.get(x as usize).cloned().unwrap_or_else(|| format!("X{}", x + 1));
        let factors: Vec<String> = self
            .verdict
            .basis
            .iter()
            .map(|b| format!("{}^a{}", name(b.var), b.var + 1))
            .collect();
        write!(f, "{}", factors.join("*"))?;
        let bounds: Vec<String> = self
            .verdict
            .basis
            .iter()
            .filter_map(|b| b.max_exponent.map(|m| format!("a{} <= {m}", b.var + 1)))
            .collect();
        if !bounds.is_empty() {
            write!(f, " with {}", bounds.join(", "))?;
        }
        Ok(())
    }
}

pub fn pbw_verdict(p: &Presentation) -> Result<PbwVerdict> {
    let report = check_gb(p.relations())?;
    let order = p.order();
    let prec = order.precedence();
    let lms: Vec<&Word> = p.relations().iter().map(|g| g.lm()).collect::<Result<_>>()?;

    let mut missing_pairs = Vec::new();
    for (k, &a) in prec.iter().enumerate() {
        for &b in &prec[k + 1..] {
            let ba = Word::new(vec![b, a]);
            if !lms.iter().any(|w| **w == ba) {
                missing_pairs.push((a, b));
            }
        }
    }
    let shape_ok = missing_pairs.is_empty();

    let mut other_lms = Vec::new();
    let mut bounds: Vec<Option<usize>> = vec![None; p.nvars()];
    for w in &lms {
        let l = w.letters();
        let is_power = l.iter().all(|&x| x == l[0]);
        let is_descending_pair = l.len() == 2 && order.rank(l[0]) > order.rank(l[1]);
        if is_power {
            let b = &mut bounds[l[0] as usize];
            *b = Some(b.map_or(l.len() - 1, |m| m.min(l.len() - 1)));
        } else if !is_descending_pair {
            other_lms.push((*w).clone());
        }
    }
    let basis = prec
        .iter()
        .map(|&x| BasisFactor {
            var: x,
            max_exponent: bounds[x as usize],
        })
        .collect();
    Ok(PbwVerdict {
        shape_ok,
        gb_ok: report.verdict,
        pbw: shape_ok && report.verdict,
        missing_pairs,
        basis,
        other_lms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub degree: u64,
    /// Words of degree at most `degree`.
    pub words: usize,
    pub normal: usize,
    /// Rank of the span of the products `u*g*v` within the bound.
    pub rank: usize,
    pub trivial_intersection: bool,
}

impl DecompositionReport {
    pub fn pass(&self) -> bool {
        self.rank + self.normal == self.words && self.trivial_intersection
    }
}

/// All words of weighted degree at most `d`, ascending in `order`.
fn words_up_to(order: &MonomialOrder, d: u64) -> Vec<Word> {
    normal_words(&[], order, Bound::MaxDegree(d)).expect("no patterns")
}

/// Checks, in the space of words of degree at most `d`, that the ideal
/// part spanned by the products `u*g*v` and the span of the normal words
/// are complementary. Needs field coefficients and a graded order.
pub fn decomposition_oracle(p: &Presentation, d: u64) -> Result<DecompositionReport> {
    let order = p.order();
    if !order.is_graded() {
        return Err(Error::NotGraded);
    }
    let ring = p.ring();
    let words = words_up_to(order, d);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ideal = RowEchelon::new(ring, words.len())?;
    let weights = order.weights();

    for g in p.relations() {
        let gdeg = g.lm()?.degree(weights)?;
        if gdeg > d {
            continue;
        }
        let flanks = words_up_to(order, d - gdeg);
        for u in &flanks {
            let ud = u.degree(weights)?;
            for v in &flanks {
                if ud + v.degree(weights)? + gdeg > d {
                    continue;
                }
                let mut row = ideal.zero_vector();
                for t in g.terms() {
                    row[index[&t.word.sandwich(u, v)]] = t.coeff.clone();
                }
                ideal.insert(row);
            }
        }
    }
    let rank = ideal.rank();

    let lms: Vec<Word> = p.relations().iter().map(|g| g.lm().cloned()).collect::<Result<_>>()?;
    let normal = normal_words(&lms, order, Bound::MaxDegree(d))?;
    let mut joint = ideal;
    let mut trivial_intersection = true;
    for w in &normal {
        let mut row = joint.zero_vector();
        row[index[w]] = ring.one();
        trivial_intersection &= joint.insert(row);
    }
    Ok(DecompositionReport {
        degree: d,
        words: words.len(),
        normal: normal.len(),
        rank,
        trivial_intersection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    fn lms(p: &Presentation) -> Vec<Word> {
        p.relations().iter().map(|g| g.lm().unwrap().clone()).collect()
    }

    fn w(v: &[u32]) -> Word {
        Word::from(v)
    }

    #[test]
    fn quantum_plane_staircase() {
        let p = pres("ring Z\nvars X1 X2\nrel X2*X1 - 3*X1*X2\n");
        let words = normal_words(&lms(&p), p.order(), Bound::MaxDegree(2)).unwrap();
        assert_eq!(
            words,
            vec![Word::one(), w(&[0]), w(&[1]), w(&[0, 0]), w(&[0, 1]), w(&[1, 1])]
        );
        for d in 0..10 {
            assert_eq!(count_normal_words(&lms(&p), p.weights(), d).unwrap(), d as u128 + 1);
        }
    }

    #[test]
    fn free_algebra_counts() {
        let counts = count_normal_words_by_degree(&[], &WeightVector::uniform(2), 12).unwrap();
        let expected: Vec<u128> = (0..=12).map(|d| 1u128 << d).collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn clifford_words_by_length() {
        let p = pres("ring Z\nvars X1 X2 X3\nrel X1^2\nrel X2^2\nrel X3^2\nrel X2*X1 + X1*X2\nrel X3*X1 + X1*X3\nrel X3*X2 + X2*X3\n");
        let words = normal_words(&lms(&p), p.order(), Bound::MaxLength(3)).unwrap();
        assert_eq!(words.len(), 8);
        assert!(words.contains(&w(&[0, 1, 2])));
    }

    #[test]
    fn empty_pattern_rejected() {
        let ord = MonomialOrder::grlex_natural(1);
        assert_eq!(normal_words(&[Word::one()], &ord, Bound::MaxLength(1)), Err(Error::EmptyWord));
    }

    #[test]
    fn verdicts() {
        let q = pres("ring Z\nvars X1 X2\nrel X2*X1 - 3*X1*X2\n");
        let v = pbw_verdict(&q).unwrap();
        assert!(v.pbw);
        assert_eq!(v.display(q.names()).to_string(), "X1^a1*X2^a2");
        let sq = pres("ring Q\nvars X1 X2\norder grlex X2 < X1\nrel X1^2 - X2\n");
        let v = pbw_verdict(&sq).unwrap();
        assert!(!v.shape_ok && !v.gb_ok && !v.pbw);
        assert_eq!(v.missing_pairs, vec![(1, 0)]);
        let ext = pres("ring Z\nvars X1 X2\nrel X1^2\nrel X2^2\nrel X2*X1 + X1*X2\n");
        let v = pbw_verdict(&ext).unwrap();
        assert!(v.pbw);
        assert_eq!(v.display(ext.names()).to_string(), "X1^a1*X2^a2 with a1 <= 1, a2 <= 1");
        assert_eq!((0..4).map(|d| v.basis_count(ext.weights(), d)).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn decomposition_quantum_plane() {
        let p = pres("ring Q\nvars X1 X2\nrel X2*X1 - 3*X1*X2\n");
        let r = decomposition_oracle(&p, 3).unwrap();
        assert_eq!((r.words, r.normal, r.rank), (15, 10, 5));
        assert!(r.pass());
        let r0 = decomposition_oracle(&p, 0).unwrap();
        assert_eq!((r0.words, r0.normal, r0.rank), (1, 1, 0));
        assert!(r0.pass());
    }

    #[test]
    fn decomposition_detects_non_basis() {
        let p = pres("ring Q\nvars X1 X2\norder grlex X2 < X1\nrel X1^2 - X2\n");
        let r = decomposition_oracle(&p, 3).unwrap();
        assert!(!r.pass());
        assert!(!r.trivial_intersection);
    }

    #[test]
    fn decomposition_preconditions() {
        let z = pres("ring Z\nvars X1 X2\nrel X2*X1 - X1*X2\n");
        assert!(matches!(decomposition_oracle(&z, 2), Err(Error::NotField(_))));
        let e = pres("ring Q\nvars X1 X2\norder etlex [X2 < X1] [X1 < X2]\nrel X2*X1 - X1*X2\n");
        assert_eq!(decomposition_oracle(&e, 2), Err(Error::NotGraded));
    }
}
