//! Generators for the standard algebra families, with their bundled
//! orders. Variable indices in the typed constructors are 0-based.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::coeff::{CoefficientRing, RingElement};
use crate::error::{Error, Result};
use crate::linalg::RowEchelon;
use crate::monoid::{WeightVector, Word};
use crate::order::MonomialOrder;
use crate::poly::NcPoly;
use crate::presentation::Presentation;

/// Terms `c * w` attached to an index pair `(j, i)`.
pub type PairTerms = Vec<((usize, usize), Vec<(RingElement, Word)>)>;
/// Linear terms `c * X_k` attached to an index pair `(j, i)`.
pub type PairBrackets = Vec<((usize, usize), Vec<(RingElement, usize)>)>;

fn xnames(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn poly(ring: &CoefficientRing, order: &Arc<MonomialOrder>, terms: Vec<(RingElement, Vec<u32>)>) -> Result<NcPoly> {
    NcPoly::normalize(terms.into_iter().map(|(c, w)| (c, Word::new(w))).collect(), ring, order)
}

/// Pairs `(j, i)` with `i < j < n`, in the order `(1,0), (2,0), (2,1), ...`.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (j, i)))
}

/// Skew relations `X_j X_i - lambda(j, i) X_i X_j` for every pair, after
/// the powers `X_s^p` for `s` in `omega`. Natural graded order.
pub fn quantum_affine(
    ring: &CoefficientRing,
    n: usize,
    p: usize,
    omega: &[usize],
    lambda: impl Fn(usize, usize) -> RingElement,
) -> Result<Presentation> {
    if n == 0 || p < 2 {
        return Err(invalid("quantum_affine needs n >= 1 and p >= 2"));
    }
    if let Some(&s) = omega.iter().find(|&&s| s >= n) {
        return Err(Error::IndexOutOfRange { index: s, count: n });
    }
    let order = Arc::new(MonomialOrder::grlex_natural(n));
    let mut rels = Vec::new();
    let mut powers: Vec<usize> = omega.to_vec();
    powers.sort_unstable();
    powers.dedup();
    for s in powers {
        rels.push(poly(ring, &order, vec![(ring.one(), vec![s as u32; p])])?);
    }
    for (j, i) in pairs(n) {
        let l = lambda(j, i);
        rels.push(poly(
            ring,
            &order,
            vec![(ring.one(), vec![j as u32, i as u32]), (-l, vec![i as u32, j as u32])],
        )?);
    }
    Presentation::new(ring.clone(), xnames(n), order, rels)
}

/// Defining data of a quadratic algebra with relations
/// `X_j X_i - q_ji X_i X_j - {X_j, X_i}`. Quadratic words `X_k X_l` in a
/// brace must satisfy `i < k <= l < j` and `k - i = j - l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QEnvelopingSpec {
    ring: CoefficientRing,
    order: Arc<MonomialOrder>,
    q: BTreeMap<(usize, usize), RingElement>,
    braces: BTreeMap<(usize, usize), NcPoly>,
}

impl QEnvelopingSpec {
    /// Missing `q_ji` default to 1 and missing braces to 0. Braces are
    /// given as term lists.
    pub fn new(
        ring: &CoefficientRing,
        n: usize,
        q: Vec<((usize, usize), RingElement)>,
        braces: PairTerms,
    ) -> Result<Self> {
        let order = Arc::new(MonomialOrder::grlex_natural(n));
        let check_pair = |j: usize, i: usize| {
            if i < j && j < n {
                Ok(())
            } else {
                Err(invalid(format!("pair ({}, {}) needs 1 <= i < j <= {n}", j + 1, i + 1)))
            }
        };
        let mut qs = BTreeMap::new();
        for ((j, i), v) in q {
            check_pair(j, i)?;
            if v.is_zero() {
                return Err(invalid(format!("q{}{} must be nonzero", j + 1, i + 1)));
            }
            qs.insert((j, i), v);
        }
        let mut bs = BTreeMap::new();
        for ((j, i), terms) in braces {
            check_pair(j, i)?;
            let b = NcPoly::normalize(terms, ring, &order)?;
            for t in b.terms() {
                let l = t.word.letters();
                match l.len() {
                    0 | 1 => {}
                    2 => {
                        let (k, m) = (l[0] as usize, l[1] as usize);
                        if !(i < k && k <= m && m < j && k - i == j - m) {
                            return Err(invalid(format!(
                                "brace {{X{}, X{}}}: term X{}*X{} violates the index constraint",
                                j + 1,
                                i + 1,
                                k + 1,
                                m + 1
                            )));
                        }
                    }
                    _ => {
                        return Err(invalid(format!(
                            "brace {{X{}, X{}}} has a term of degree {}",
                            j + 1,
                            i + 1,
                            l.len()
                        )))
                    }
                }
            }
            bs.insert((j, i), b);
        }
        Ok(QEnvelopingSpec {
            ring: ring.clone(),
            order,
            q: qs,
            braces: bs,
        })
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn q(&self, j: usize, i: usize) -> RingElement {
        self.q.get(&(j, i)).cloned().unwrap_or_else(|| self.ring.one())
    }

    /// `{X_j, X_i}` for `i < j`.
    pub fn brace(&self, j: usize, i: usize) -> NcPoly {
        self.braces
            .get(&(j, i))
            .cloned()
            .unwrap_or_else(|| NcPoly::zero(&self.ring, &self.order))
    }

    pub fn relation(&self, j: usize, i: usize) -> Result<NcPoly> {
        let head = poly(
            &self.ring,
            &self.order,
            vec![
                (self.ring.one(), vec![j as u32, i as u32]),
                (-self.q(j, i), vec![i as u32, j as u32]),
            ],
        )?;
        head.sub(&self.brace(j, i))
    }

    pub fn relations(&self) -> Result<Vec<NcPoly>> {
        pairs(self.nvars()).map(|(j, i)| self.relation(j, i)).collect()
    }

    pub fn presentation(&self) -> Result<Presentation> {
        Presentation::new(self.ring.clone(), xnames(self.nvars()), self.order.clone(), self.relations()?)
    }

    /// The spanning set of `E1 + E2`: each relation, and each relation
    /// multiplied on either side by either of its two variables.
    pub fn e_span(&self) -> Result<Vec<NcPoly>> {
        let mut out = Vec::new();
        for (j, i) in pairs(self.nvars()) {
            out.push(self.relation(j, i)?);
        }
        for (j, i) in pairs(self.nvars()) {
            let g = self.relation(j, i)?;
            for x in [i, j] {
                let w = Word::letter(x as u32);
                out.push(g.mul_word_left(&w));
                out.push(g.mul_word_right(&w));
            }
        }
        Ok(out)
    }
}

pub fn q_enveloping(spec: &QEnvelopingSpec) -> Result<Presentation> {
    spec.presentation()
}

/// `J(X_k, X_j, X_i)` for `i < j < k`, with `lambda` read as the `q` of the
/// specification.
pub fn jacobi_sum(spec: &QEnvelopingSpec, k: usize, j: usize, i: usize) -> Result<NcPoly> {
    if !(i < j && j < k && k < spec.nvars()) {
        return Err(invalid(format!("Jacobi sum needs i < j < k, got ({}, {}, {})", k + 1, j + 1, i + 1)));
    }
    let one = Word::one();
    let x = |v: usize| Word::letter(v as u32);
    let (lki, lji, lkj) = (spec.q(k, i), spec.q(j, i), spec.q(k, j));
    let (bkj, bki, bji) = (spec.brace(k, j), spec.brace(k, i), spec.brace(j, i));
    let r = spec.ring.one();
    let parts = [
        bkj.sandwich(&one, &r, &x(i))?,
        bkj.sandwich(&x(i), &-(&lki * &lji), &one)?,
        bki.sandwich(&one, &-lji.clone(), &x(j))?,
        bki.sandwich(&x(j), &lkj, &one)?,
        bji.sandwich(&one, &(&lkj * &lki), &x(k))?,
        bji.sandwich(&x(k), &-r.clone(), &one)?,
    ];
    let mut acc = NcPoly::zero(&spec.ring, &spec.order);
    for p in &parts {
        acc = acc.add(p)?;
    }
    Ok(acc)
}

/// Lie-type relations `X_j X_i - X_i X_j - [X_j, X_i]` with linear
/// brackets. Natural graded order.
pub fn lie_enveloping(
    ring: &CoefficientRing,
    n: usize,
    brackets: PairBrackets,
) -> Result<Presentation> {
    let braces = brackets
        .into_iter()
        .map(|(pair, terms)| {
            let terms = terms.into_iter().map(|(c, l)| (c, Word::letter(l as u32))).collect();
            (pair, terms)
        })
        .collect();
    QEnvelopingSpec::new(ring, n, Vec::new(), braces)?.presentation()
}

/// Position of a generator `x_ij` (`1 <= i < j <= N + 1`) in the
/// lexicographic order on index pairs.
fn jimbo_index(pairs: &[(usize, usize)], p: (usize, usize)) -> u32 {
    pairs.iter().position(|&x| x == p).expect("generator exists") as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JimboClass {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

/// Class of the pair `((i, j), (m, n))`, for index pairs with `i < j`,
/// `m < n` and `(i, j) < (m, n)` lexicographically.
pub fn jimbo_class(a: (usize, usize), b: (usize, usize)) -> Option<JimboClass> {
    let ((i, j), (m, n)) = (a, b);
    if !(i < j && m < n && a < b) {
        return None;
    }
    Some(if i == m {
        JimboClass::C1
    } else if j < m {
        JimboClass::C6
    } else if j == m {
        JimboClass::C5
    } else if n < j {
        JimboClass::C2
    } else if n == j {
        JimboClass::C3
    } else {
        JimboClass::C4
    })
}

/// Generators `x_ij`, `1 <= i < j <= N + 1`, ordered lexicographically by
/// index pair; `q` must be a unit.
pub fn jimbo(big_n: usize, ring: &CoefficientRing, q: &RingElement) -> Result<Presentation> {
    if big_n == 0 {
        return Err(invalid("jimbo needs N >= 1"));
    }
    if !q.belongs_to(ring) {
        return Err(Error::RingMismatch {
            left: q.ring().to_string(),
            right: ring.to_string(),
        });
    }
    let q_inv = q.invert_unit()?;
    let q2 = q * q;
    let q_2 = &q_inv * &q_inv;
    let gens: Vec<(usize, usize)> = (1..=big_n + 1)
        .flat_map(|i| (i + 1..=big_n + 1).map(move |j| (i, j)))
        .collect();
    let wide = big_n + 1 >= 10;
    let names = gens
        .iter()
        .map(|&(i, j)| if wide { format!("x{i}_{j}") } else { format!("x{i}{j}") })
        .collect();
    let order = Arc::new(MonomialOrder::grlex_natural(gens.len()));
    let one = ring.one();
    let mut rels = Vec::new();
    for (b_pos, &(m, n)) in gens.iter().enumerate() {
        for &(i, j) in &gens[..b_pos] {
            let mn = jimbo_index(&gens, (m, n));
            let ij = jimbo_index(&gens, (i, j));
            let head = (one.clone(), vec![mn, ij]);
            let terms = match jimbo_class((i, j), (m, n)).expect("ordered pair") {
                JimboClass::C1 | JimboClass::C3 => vec![head, (-q_2.clone(), vec![ij, mn])],
                JimboClass::C2 | JimboClass::C6 => vec![head, (-one.clone(), vec![ij, mn])],
                JimboClass::C4 => vec![
                    head,
                    (-one.clone(), vec![ij, mn]),
                    (&q2 - &q_2, vec![jimbo_index(&gens, (i, n)), jimbo_index(&gens, (m, j))]),
                ],
                JimboClass::C5 => vec![
                    head,
                    (-q2.clone(), vec![ij, mn]),
                    (q.clone(), vec![jimbo_index(&gens, (i, n))]),
                ],
            };
            rels.push(poly(ring, &order, terms)?);
        }
    }
    Presentation::new(ring.clone(), names, order, rels)
}

/// Relations `X_j X_i - q_ji X_i X_j - r_ji` under the etlex order with
/// commutative precedence `t_n < ... < t_1`. Each tail `r_ji` may only
/// involve words `X_a X_b ...` with `i < a <= b <= ... < j`, and constants.
pub fn skew_iterated(
    ring: &CoefficientRing,
    n: usize,
    q: Vec<((usize, usize), RingElement)>,
    tails: PairTerms,
) -> Result<Presentation> {
    let order = Arc::new(MonomialOrder::etlex(
        (0..n as u32).rev().collect(),
        (0..n as u32).collect(),
    )?);
    let qs: HashMap<_, _> = q.into_iter().collect();
    let mut ts: HashMap<(usize, usize), NcPoly> = HashMap::new();
    for ((j, i), terms) in tails {
        if !(i < j && j < n) {
            return Err(invalid(format!("pair ({}, {}) out of range", j + 1, i + 1)));
        }
        let t = NcPoly::normalize(terms, ring, &order)?;
        for term in t.terms() {
            let l = term.word.letters();
            let inside = l.iter().all(|&x| (i as u32) < x && x < j as u32);
            if !inside || !l.windows(2).all(|w| w[0] <= w[1]) {
                return Err(invalid(format!(
                    "tail of X{}*X{}: word {} is not an ascending product of X{}..X{}",
                    j + 1,
                    i + 1,
                    term.word.display(&xnames(n)),
                    i + 2,
                    j
                )));
            }
        }
        ts.insert((j, i), t);
    }
    let mut rels = Vec::new();
    for (j, i) in pairs(n) {
        let qji = qs.get(&(j, i)).cloned().unwrap_or_else(|| ring.one());
        let head = poly(
            ring,
            &order,
            vec![(ring.one(), vec![j as u32, i as u32]), (-qji, vec![i as u32, j as u32])],
        )?;
        rels.push(match ts.get(&(j, i)) {
            Some(t) => head.sub(t)?,
            None => head,
        });
    }
    Presentation::new(ring.clone(), xnames(n), order, rels)
}

/// Highest power of `X1` in a polynomial in `X1` alone.
fn x1_degree(f: &NcPoly) -> Result<usize> {
    let mut deg = 0;
    for t in f.terms() {
        if t.word.letters().iter().any(|&x| x != 0) {
            return Err(invalid("f must be a polynomial in X1 alone"));
        }
        deg = deg.max(t.word.len());
    }
    Ok(deg)
}

/// `f` re-expressed over `order`; `f` must only involve `X1`.
fn lift_f(f: &[(RingElement, usize)], ring: &CoefficientRing, order: &Arc<MonomialOrder>) -> Result<NcPoly> {
    NcPoly::normalize(f.iter().map(|(c, e)| (c.clone(), Word::power(0, *e))).collect(), ring, order)
}

/// `X2 X1 - q X1 X2 - alpha X2 - f(X1)` with `f = sum c X1^e`. Weights are
/// `(1, 1)` when `deg f <= 2` and `(1, deg f)` otherwise.
pub fn two_gen_ore(
    ring: &CoefficientRing,
    q: &RingElement,
    alpha: &RingElement,
    f: &[(RingElement, usize)],
) -> Result<Presentation> {
    let probe = Arc::new(MonomialOrder::grlex_natural(2));
    let deg = x1_degree(&lift_f(f, ring, &probe)?)?;
    let weights = WeightVector::new(vec![1, if deg <= 2 { 1 } else { deg as u64 }])?;
    let order = Arc::new(MonomialOrder::grlex(vec![0, 1], weights)?);
    let head = poly(
        ring,
        &order,
        vec![
            (ring.one(), vec![1, 0]),
            (-q.clone(), vec![0, 1]),
            (-alpha.clone(), vec![1]),
        ],
    )?;
    let g = head.sub(&lift_f(f, ring, &order)?)?;
    Presentation::new(ring.clone(), xnames(2), order, vec![g])
}

/// Parameters of the three-generator family close to `U(sl2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Params {
    pub lambda: RingElement,
    pub gamma: RingElement,
    pub omega: RingElement,
    /// `f(X1)` as `(coefficient, exponent)` pairs.
    pub f: Vec<(RingElement, usize)>,
}

impl Sl2Params {
    /// The deformation with `lambda = z^4`, `omega = z^2`,
    /// `gamma = -(1 + z^2)` and `f = -z X1`, for a unit `z`.
    pub fn woronowicz(zeta: &RingElement) -> Result<Self> {
        zeta.invert_unit()?;
        let z2 = zeta * zeta;
        let ring = zeta.ring();
        Ok(Sl2Params {
            lambda: &z2 * &z2,
            omega: z2.clone(),
            gamma: -(&ring.one() + &z2),
            f: vec![(-zeta.clone(), 1)],
        })
    }

    /// `f = a X1^2 + b X1` with `lambda * gamma * omega * b` nonzero.
    pub fn le_bruyn(
        lambda: RingElement,
        gamma: RingElement,
        omega: RingElement,
        a: RingElement,
        b: RingElement,
    ) -> Result<Self> {
        if (&(&lambda * &gamma) * &(&omega * &b)).is_zero() {
            return Err(invalid("le_bruyn needs lambda*gamma*omega*b nonzero"));
        }
        Ok(Sl2Params {
            lambda,
            gamma,
            omega,
            f: vec![(a, 2), (b, 1)],
        })
    }
}

/// `X3 X1 - lambda X1 X3 + gamma X3`, `X1 X2 - lambda X2 X1 + gamma X2`,
/// `X3 X2 - omega X2 X3 + f(X1)` under graded lex with `X2 < X1 < X3`;
/// weights `(1, 1, 1)` when `deg f <= 2` and `(1, n, n)` for `deg f = n > 2`.
pub fn sl2_like(ring: &CoefficientRing, p: &Sl2Params) -> Result<Presentation> {
    let probe = Arc::new(MonomialOrder::grlex_natural(3));
    let deg = x1_degree(&lift_f(&p.f, ring, &probe)?)?;
    let n = if deg <= 2 { 1 } else { deg as u64 };
    let order = Arc::new(MonomialOrder::grlex(vec![1, 0, 2], WeightVector::new(vec![1, n, n])?)?);
    let one = ring.one();
    let g31 = poly(
        ring,
        &order,
        vec![(one.clone(), vec![2, 0]), (-p.lambda.clone(), vec![0, 2]), (p.gamma.clone(), vec![2])],
    )?;
    let g12 = poly(
        ring,
        &order,
        vec![(one.clone(), vec![0, 1]), (-p.lambda.clone(), vec![1, 0]), (p.gamma.clone(), vec![1])],
    )?;
    let g32 = poly(ring, &order, vec![(one, vec![2, 1]), (-p.omega.clone(), vec![1, 2])])?
        .add(&lift_f(&p.f, ring, &order)?)?;
    Presentation::new(ring.clone(), xnames(3), order, vec![g31, g12, g32])
}

/// `X2 X1 - X1 X2`, `X3 X1 - lambda X1 X3 - mu X2 X3 - gamma X2`,
/// `X3 X2 - X2 X3` under the natural graded lex order.
pub fn three_gen(ring: &CoefficientRing, lambda: &RingElement, mu: &RingElement, gamma: &RingElement) -> Result<Presentation> {
    let order = Arc::new(MonomialOrder::grlex_natural(3));
    let one = ring.one();
    let rels = vec![
        poly(ring, &order, vec![(one.clone(), vec![1, 0]), (-one.clone(), vec![0, 1])])?,
        poly(
            ring,
            &order,
            vec![
                (one.clone(), vec![2, 0]),
                (-lambda.clone(), vec![0, 2]),
                (-mu.clone(), vec![1, 2]),
                (-gamma.clone(), vec![1]),
            ],
        )?,
        poly(ring, &order, vec![(one.clone(), vec![2, 1]), (-one, vec![1, 2])])?,
    ];
    Presentation::new(ring.clone(), xnames(3), order, rels)
}

/// `X_i^2 - q_i` and `X_k X_l + X_l X_k - q_kl` for `k > l`, natural graded
/// lex order.
pub fn clifford(
    ring: &CoefficientRing,
    n: usize,
    squares: impl Fn(usize) -> RingElement,
    pairs_q: impl Fn(usize, usize) -> RingElement,
) -> Result<Presentation> {
    let order = Arc::new(MonomialOrder::grlex_natural(n));
    let one = ring.one();
    let mut rels = Vec::new();
    for s in 0..n {
        rels.push(poly(ring, &order, vec![(one.clone(), vec![s as u32; 2]), (-squares(s), vec![])])?);
    }
    for (k, l) in pairs(n) {
        rels.push(poly(
            ring,
            &order,
            vec![
                (one.clone(), vec![k as u32, l as u32]),
                (one.clone(), vec![l as u32, k as u32]),
                (-pairs_q(k, l), vec![]),
            ],
        )?);
    }
    Presentation::new(ring.clone(), xnames(n), order, rels)
}

/// Down-up relations under graded lex with `X2 < X1`.
pub fn down_up(ring: &CoefficientRing, alpha: &RingElement, beta: &RingElement, gamma: &RingElement) -> Result<Presentation> {
    let order = Arc::new(MonomialOrder::grlex(vec![1, 0], WeightVector::uniform(2))?);
    let one = ring.one();
    let rel = |a: u32, b: u32| {
        poly(
            ring,
            &order,
            vec![
                (one.clone(), vec![a, a, b]),
                (-alpha.clone(), vec![a, b, a]),
                (-beta.clone(), vec![b, a, a]),
                (-gamma.clone(), vec![a]),
            ],
        )
    };
    let g1 = rel(0, 1)?;
    // the second relation swaps the roles in the tail: X1 X2^2 - a X2 X1 X2 - b X2^2 X1 - c X2
    let g2 = poly(
        ring,
        &order,
        vec![
            (one.clone(), vec![0, 1, 1]),
            (-alpha.clone(), vec![1, 0, 1]),
            (-beta.clone(), vec![1, 1, 0]),
            (-gamma.clone(), vec![1]),
        ],
    )?;
    Presentation::new(ring.clone(), xnames(2), order, vec![g1, g2])
}

/// Whether `f` is a linear combination of `spanning`, over a field.
pub fn span_membership(f: &NcPoly, spanning: &[NcPoly]) -> Result<bool> {
    let ring = f.ring();
    let mut index: HashMap<Word, usize> = HashMap::new();
    for p in spanning.iter().chain(std::iter::once(f)) {
        p.check_compatible(f)?;
        for t in p.terms() {
            let next = index.len();
            index.entry(t.word.clone()).or_insert(next);
        }
    }
    let mut ech = RowEchelon::new(ring, index.len())?;
    let vector = |p: &NcPoly, ech: &RowEchelon| {
        let mut v = ech.zero_vector();
        for t in p.terms() {
            v[index[&t.word]] = t.coeff.clone();
        }
        v
    };
    for p in spanning {
        let v = vector(p, &ech);
        ech.insert(v);
    }
    let v = vector(f, &ech);
    Ok(ech.contains(v))
}

/// Names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &[
    "quantum_affine",
    "lie_enveloping",
    "jimbo",
    "q_enveloping",
    "skew_iterated",
    "two_gen_ore",
    "sl2_like",
    "three_gen",
    "clifford",
    "down_up",
];

/// String parameters for [`preset`]: `key=value` pairs.
struct Params<'a> {
    map: BTreeMap<&'a str, &'a str>,
}

/// A pair key such as `q21` or `q2_1` (1-based, first index larger).
fn pair_key(key: &str, prefix: &str, n: usize) -> Option<Result<(usize, usize)>> {
    let rest = key.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit() || c == '_') {
        return None;
    }
    let parsed = match rest.split_once('_') {
        Some((a, b)) => a.parse().ok().zip(b.parse().ok()),
        None if rest.len() == 2 => {
            let d: Vec<usize> = rest.chars().map(|c| c.to_digit(10).unwrap_or(0) as usize).collect();
            Some((d[0], d[1]))
        }
        None => None,
    };
    Some(match parsed {
        Some((j, i)) if 1 <= i && i < j && j <= n => Ok((j - 1, i - 1)),
        _ => Err(invalid(format!("bad index pair in {key}, expected {prefix}JI with 1 <= I < J <= {n}"))),
    })
}

impl<'a> Params<'a> {
    fn new(entries: &'a [(String, String)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if map.insert(k.as_str(), v.as_str()).is_some() {
                return Err(invalid(format!("parameter {k} given twice")));
            }
        }
        Ok(Params { map })
    }

    /// Rejects keys that are neither in `plain` nor pair keys with one of
    /// `pair_prefixes`.
    fn allow(&self, plain: &[&str], pair_prefixes: &[&str], n: usize) -> Result<()> {
        for key in self.map.keys() {
            if plain.contains(key) {
                continue;
            }
            let mut matched = false;
            for p in pair_prefixes {
                if let Some(r) = pair_key(key, p, n) {
                    r?;
                    matched = true;
                    break;
                }
            }
            if !matched {
                return Err(invalid(format!("unknown parameter {key}")));
            }
        }
        Ok(())
    }

    fn ring(&self, default: CoefficientRing) -> Result<CoefficientRing> {
        self.map.get("ring").map_or(Ok(default), |s| s.parse())
    }

    fn usize(&self, key: &str, default: usize) -> Result<usize> {
        match self.map.get(key) {
            None => Ok(default),
            Some(s) => s.parse().map_err(|_| invalid(format!("{key} must be a natural number, got {s}"))),
        }
    }

    fn coeff(&self, key: &str, ring: &CoefficientRing, default: RingElement) -> Result<RingElement> {
        match self.map.get(key) {
            None => Ok(default),
            Some(s) => RingElement::parse(s, ring),
        }
    }

    fn pairs(&self, prefix: &str, n: usize) -> Result<Vec<((usize, usize), &'a str)>> {
        let mut out = Vec::new();
        for (k, v) in &self.map {
            if let Some(r) = pair_key(k, prefix, n) {
                out.push((r?, *v));
            }
        }
        Ok(out)
    }

    fn coeff_pairs(&self, prefix: &str, n: usize, ring: &CoefficientRing) -> Result<Vec<((usize, usize), RingElement)>> {
        self.pairs(prefix, n)?
            .into_iter()
            .map(|(p, s)| Ok((p, RingElement::parse(s, ring)?)))
            .collect()
    }
}

/// Term list of a polynomial in `X1..Xn` given as text.
fn terms_of(text: &str, ring: &CoefficientRing, n: usize) -> Result<Vec<(RingElement, Word)>> {
    let order = Arc::new(MonomialOrder::grlex_natural(n));
    let p = NcPoly::parse(text, ring, &order, &xnames(n))?;
    Ok(p.into_terms().into_iter().map(|t| (t.coeff, t.word)).collect())
}

fn f_of_x1(text: &str, ring: &CoefficientRing, n: usize) -> Result<Vec<(RingElement, usize)>> {
    terms_of(text, ring, n)?
        .into_iter()
        .map(|(c, w)| {
            if w.letters().iter().all(|&x| x == 0) {
                Ok((c, w.len()))
            } else {
                Err(invalid("f must be a polynomial in X1 alone"))
            }
        })
        .collect()
}

/// Parses a 1-based index list such as `1,3`, or `all` / `none`.
fn index_list(text: &str, n: usize) -> Result<Vec<usize>> {
    match text {
        "all" => Ok((0..n).collect()),
        "none" | "" => Ok(Vec::new()),
        _ => text
            .split(',')
            .map(|s| match s.trim().parse::<usize>() {
                Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
                _ => Err(invalid(format!("bad variable index {s:?} (1..={n})"))),
            })
            .collect(),
    }
}

/// Builds the named family from `key=value` parameters; see the README for
/// the keys of each family.
pub fn preset(name: &str, params: &[(String, String)]) -> Result<Presentation> {
    let p = Params::new(params)?;
    match name {
        "quantum_affine" => {
            let n = p.usize("n", 3)?;
            p.allow(&["ring", "n", "p", "omega", "lambda"], &["lambda"], n)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            let deg = p.usize("p", 2)?;
            let omega = index_list(p.map.get("omega").copied().unwrap_or("none"), n)?;
            let uniform = p.coeff("lambda", &ring, ring.one())?;
            let overrides: HashMap<_, _> = p.coeff_pairs("lambda", n, &ring)?.into_iter().collect();
            quantum_affine(&ring, n, deg, &omega, |j, i| {
                overrides.get(&(j, i)).cloned().unwrap_or_else(|| uniform.clone())
            })
        }
        "lie_enveloping" => {
            let n = p.usize("n", 3)?;
            p.allow(&["ring", "n", "algebra"], &["bracket"], n)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            let mut brackets = Vec::new();
            if let Some(alg) = p.map.get("algebra") {
                match *alg {
                    // X1 = f, X2 = h, X3 = e
                    "sl2" if n == 3 => brackets.extend([
                        ((1, 0), vec![(ring.from_int(-2), 0)]),
                        ((2, 0), vec![(ring.one(), 1)]),
                        ((2, 1), vec![(ring.from_int(-2), 2)]),
                    ]),
                    "abelian" => {}
                    other => return Err(invalid(format!("unknown Lie algebra {other} for n = {n}"))),
                }
            }
            for (pair, text) in p.pairs("bracket", n)? {
                let terms = terms_of(text, &ring, n)?
                    .into_iter()
                    .map(|(c, w)| match w.letters() {
                        [x] => Ok((c, *x as usize)),
                        _ => Err(invalid("brackets must be linear in the variables")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                brackets.retain(|(q, _)| *q != pair);
                brackets.push((pair, terms));
            }
            lie_enveloping(&ring, n, brackets)
        }
        "jimbo" => {
            p.allow(&["ring", "n", "q"], &[], 0)?;
            let ring = p.ring(CoefficientRing::laurent("q"))?;
            let default_q = match &ring {
                CoefficientRing::LaurentIntPoly(_) => ring.laurent_monomial(1, 1)?,
                _ => ring.from_int(2),
            };
            let q = p.coeff("q", &ring, default_q)?;
            jimbo(p.usize("n", 2)?, &ring, &q)
        }
        "q_enveloping" => {
            let n = p.usize("n", 3)?;
            p.allow(&["ring", "n", "q"], &["q", "brace"], n)?;
            let ring = p.ring(CoefficientRing::Rationals)?;
            let uniform = p.coeff("q", &ring, ring.one())?;
            let overrides: HashMap<_, _> = p.coeff_pairs("q", n, &ring)?.into_iter().collect();
            let q = pairs(n)
                .map(|pair| (pair, overrides.get(&pair).cloned().unwrap_or_else(|| uniform.clone())))
                .collect();
            let braces = p
                .pairs("brace", n)?
                .into_iter()
                .map(|(pair, text)| Ok((pair, terms_of(text, &ring, n)?)))
                .collect::<Result<Vec<_>>>()?;
            q_enveloping(&QEnvelopingSpec::new(&ring, n, q, braces)?)
        }
        "skew_iterated" => {
            let n = p.usize("n", 3)?;
            p.allow(&["ring", "n", "q"], &["q", "tail"], n)?;
            let ring = p.ring(CoefficientRing::Rationals)?;
            let uniform = p.coeff("q", &ring, ring.one())?;
            let overrides: HashMap<_, _> = p.coeff_pairs("q", n, &ring)?.into_iter().collect();
            let q = pairs(n)
                .map(|pair| (pair, overrides.get(&pair).cloned().unwrap_or_else(|| uniform.clone())))
                .collect();
            let tails = p
                .pairs("tail", n)?
                .into_iter()
                .map(|(pair, text)| Ok((pair, terms_of(text, &ring, n)?)))
                .collect::<Result<Vec<_>>>()?;
            skew_iterated(&ring, n, q, tails)
        }
        "two_gen_ore" => {
            p.allow(&["ring", "q", "alpha", "f"], &[], 0)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            let q = p.coeff("q", &ring, ring.one())?;
            let alpha = p.coeff("alpha", &ring, ring.zero())?;
            let f = f_of_x1(p.map.get("f").copied().unwrap_or("0"), &ring, 2)?;
            two_gen_ore(&ring, &q, &alpha, &f)
        }
        "sl2_like" => {
            p.allow(&["ring", "bundle", "lambda", "gamma", "omega", "f", "zeta", "a", "b"], &[], 0)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            let params = match p.map.get("bundle").copied() {
                None => {
                    if p.map.contains_key("zeta") || p.map.contains_key("a") || p.map.contains_key("b") {
                        return Err(invalid("zeta, a and b belong to the woronowicz and le_bruyn bundles"));
                    }
                    Sl2Params {
                        lambda: p.coeff("lambda", &ring, ring.one())?,
                        gamma: p.coeff("gamma", &ring, ring.from_int(2))?,
                        omega: p.coeff("omega", &ring, ring.one())?,
                        f: f_of_x1(p.map.get("f").copied().unwrap_or("-X1"), &ring, 3)?,
                    }
                }
                Some("woronowicz") => Sl2Params::woronowicz(&p.coeff("zeta", &ring, ring.one())?)?,
                Some("le_bruyn") => Sl2Params::le_bruyn(
                    p.coeff("lambda", &ring, ring.one())?,
                    p.coeff("gamma", &ring, ring.one())?,
                    p.coeff("omega", &ring, ring.one())?,
                    p.coeff("a", &ring, ring.zero())?,
                    p.coeff("b", &ring, ring.one())?,
                )?,
                Some(other) => return Err(invalid(format!("unknown bundle {other}"))),
            };
            sl2_like(&ring, &params)
        }
        "three_gen" => {
            p.allow(&["ring", "lambda", "mu", "gamma"], &[], 0)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            three_gen(
                &ring,
                &p.coeff("lambda", &ring, ring.one())?,
                &p.coeff("mu", &ring, ring.zero())?,
                &p.coeff("gamma", &ring, ring.zero())?,
            )
        }
        "clifford" => {
            let n = p.usize("n", 3)?;
            let squares: Vec<String> = (1..=n).map(|i| format!("sq{i}")).collect();
            let mut plain = vec!["ring", "n", "sq", "q"];
            plain.extend(squares.iter().map(String::as_str));
            p.allow(&plain, &["q"], n)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            let sq_uniform = p.coeff("sq", &ring, ring.zero())?;
            let sq = (0..n)
                .map(|s| p.coeff(&squares[s], &ring, sq_uniform.clone()))
                .collect::<Result<Vec<_>>>()?;
            let q_uniform = p.coeff("q", &ring, ring.zero())?;
            let overrides: HashMap<_, _> = p.coeff_pairs("q", n, &ring)?.into_iter().collect();
            clifford(&ring, n, |s| sq[s].clone(), |k, l| {
                overrides.get(&(k, l)).cloned().unwrap_or_else(|| q_uniform.clone())
            })
        }
        "down_up" => {
            p.allow(&["ring", "alpha", "beta", "gamma"], &[], 0)?;
            let ring = p.ring(CoefficientRing::Integers)?;
            down_up(
                &ring,
                &p.coeff("alpha", &ring, ring.from_int(2))?,
                &p.coeff("beta", &ring, ring.from_int(-1))?,
                &p.coeff("gamma", &ring, ring.zero())?,
            )
        }
        other => Err(invalid(format!("unknown preset {other}; known: {}", PRESET_NAMES.join(", ")))),
    }
}
