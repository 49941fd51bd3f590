//! Noncommutative polynomials in canonical form: terms strictly descending
//! under the governing monomial order, no repeated words, no zero
//! coefficients.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{parse_unsigned_coeff, starts_coeff, CoefficientRing, RingElement};
use crate::error::{Error, Result};
use crate::monoid::{WeightVector, Word};
use crate::order::MonomialOrder;
use crate::syntax::Cursor;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: RingElement,
    pub word: Word,
}

impl Term {
    pub fn new(coeff: RingElement, word: Word) -> Self {
        Term { coeff, word }
    }
}

#[derive(Debug, Clone)]
pub struct NcPoly {
    ring: CoefficientRing,
    order: Arc<MonomialOrder>,
    terms: Vec<Term>,
}

impl PartialEq for NcPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms && same_order(&self.order, &other.order)
    }
}

impl Eq for NcPoly {}

fn same_order(a: &Arc<MonomialOrder>, b: &Arc<MonomialOrder>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl NcPoly {
    pub fn zero(ring: &CoefficientRing, order: &Arc<MonomialOrder>) -> Self {
        NcPoly {
            ring: ring.clone(),
            order: order.clone(),
            terms: Vec::new(),
        }
    }

    /// Canonical form of `sum c_i w_i`.
    pub fn normalize(raw: Vec<(RingElement, Word)>, ring: &CoefficientRing, order: &Arc<MonomialOrder>) -> Result<Self> {
        for (c, _) in &raw {
            if !c.belongs_to(ring) {
                return Err(Error::RingMismatch {
                    left: c.ring().to_string(),
                    right: ring.to_string(),
                });
            }
        }
        let n = order.nvars();
        for (_, w) in &raw {
            if let Some(x) = w.max_index() {
                if x as usize >= n {
                    return Err(Error::IndexOutOfRange { index: x as usize, count: n });
                }
            }
        }
        Ok(Self::normalize_unchecked(raw, ring, order))
    }

    pub(crate) fn normalize_unchecked(
        raw: Vec<(RingElement, Word)>,
        ring: &CoefficientRing,
        order: &Arc<MonomialOrder>,
    ) -> Self {
        let mut keyed: Vec<_> = raw.into_iter().map(|(c, w)| (order.key(&w), c, w)).collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<Term> = Vec::with_capacity(keyed.len());
        for (_, c, w) in keyed {
            match terms.last_mut() {
                Some(last) if last.word == w => last.coeff = &last.coeff + &c,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(Term::new(c, w));
                }
            }
        }
        if terms.last().is_some_and(|t| t.coeff.is_zero()) {
            terms.pop();
        }
        NcPoly {
            ring: ring.clone(),
            order: order.clone(),
            terms,
        }
    }

    /// Terms already strictly descending and nonzero.
    pub(crate) fn from_sorted_terms(terms: Vec<Term>, ring: &CoefficientRing, order: &Arc<MonomialOrder>) -> Self {
        debug_assert!(terms.windows(2).all(|p| order.compare(&p[0].word, &p[1].word).is_gt()));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        NcPoly {
            ring: ring.clone(),
            order: order.clone(),
            terms,
        }
    }

    pub fn monomial(coeff: RingElement, word: Word, order: &Arc<MonomialOrder>) -> Result<Self> {
        let ring = coeff.ring();
        Self::normalize(vec![(coeff, word)], &ring, order)
    }

    pub fn word(word: Word, ring: &CoefficientRing, order: &Arc<MonomialOrder>) -> Result<Self> {
        Self::normalize(vec![(ring.one(), word)], ring, order)
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn lm(&self) -> Result<&Word> {
        Ok(&self.leading_term()?.word)
    }

    pub fn lc(&self) -> Result<&RingElement> {
        Ok(&self.leading_term()?.coeff)
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|t| t.coeff.is_one())
    }

    /// Coefficient of `w`, zero when absent.
    pub fn coeff_of(&self, w: &Word) -> RingElement {
        self.terms
            .iter()
            .find(|t| t.word == *w)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        if !same_order(&self.order, &other.order) {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    fn raw(&self) -> impl Iterator<Item = (RingElement, Word)> + '_ {
        self.terms.iter().map(|t| (t.coeff.clone(), t.word.clone()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let raw = self.raw().chain(other.raw()).collect();
        Ok(Self::normalize_unchecked(raw, &self.ring, &self.order))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let raw = self.raw().chain(other.terms.iter().map(|t| (-&t.coeff, t.word.clone()))).collect();
        Ok(Self::normalize_unchecked(raw, &self.ring, &self.order))
    }

    pub fn neg(&self) -> Self {
        NcPoly {
            ring: self.ring.clone(),
            order: self.order.clone(),
            terms: self.terms.iter().map(|t| Term::new(-&t.coeff, t.word.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &RingElement) -> Result<Self> {
        if !c.belongs_to(&self.ring) {
            return Err(Error::RingMismatch {
                left: c.ring().to_string(),
                right: self.ring.to_string(),
            });
        }
        Ok(self.sandwich_unchecked(&Word::one(), c, &Word::one()))
    }

    /// `c * left * self * right`. Two-sided multiplication by words keeps
    /// the term order, so only zero products need removing.
    pub fn sandwich(&self, left: &Word, c: &RingElement, right: &Word) -> Result<Self> {
        if !c.belongs_to(&self.ring) {
            return Err(Error::RingMismatch {
                left: c.ring().to_string(),
                right: self.ring.to_string(),
            });
        }
        Ok(self.sandwich_unchecked(left, c, right))
    }

    pub(crate) fn sandwich_unchecked(&self, left: &Word, c: &RingElement, right: &Word) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let k = &t.coeff * c;
                (!k.is_zero()).then(|| Term::new(k, t.word.sandwich(left, right)))
            })
            .collect();
        NcPoly {
            ring: self.ring.clone(),
            order: self.order.clone(),
            terms,
        }
    }

    pub fn mul_word_left(&self, w: &Word) -> Self {
        self.sandwich_unchecked(w, &self.ring.one(), &Word::one())
    }

    pub fn mul_word_right(&self, w: &Word) -> Self {
        self.sandwich_unchecked(&Word::one(), &self.ring.one(), w)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((&a.coeff * &b.coeff, a.word.concat(&b.word)));
            }
        }
        Ok(Self::normalize_unchecked(raw, &self.ring, &self.order))
    }

    /// Sum of the terms of maximal weighted degree.
    pub fn lh_n(&self, weights: &WeightVector) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degrees = self
            .terms
            .iter()
            .map(|t| t.word.degree(weights))
            .collect::<Result<Vec<_>>>()?;
        let top = *degrees.iter().max().expect("nonzero");
        let terms = self
            .terms
            .iter()
            .zip(&degrees)
            .filter(|(_, d)| **d == top)
            .map(|(t, _)| t.clone())
            .collect();
        Ok(Self::from_sorted_terms(terms, &self.ring, &self.order))
    }

    /// The leading term `LC * LM`.
    pub fn lh_b(&self) -> Result<Term> {
        self.leading_term().cloned()
    }

    pub fn is_homogeneous(&self, weights: &WeightVector) -> bool {
        let mut degrees = self.terms.iter().map(|t| t.word.degree(weights).ok());
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    /// Same terms under another order (re-sorted).
    pub fn with_order(&self, order: &Arc<MonomialOrder>) -> Self {
        Self::normalize_unchecked(self.raw().collect(), &self.ring, order)
    }

    /// Coefficients mapped through `f`, then renormalised in `ring`.
    pub fn map_coefficients(
        &self,
        ring: &CoefficientRing,
        mut f: impl FnMut(&RingElement) -> Result<RingElement>,
    ) -> Result<Self> {
        let raw = self
            .terms
            .iter()
            .map(|t| Ok((f(&t.coeff)?, t.word.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(raw, ring, &self.order)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    /// Parses `text` in the polynomial grammar over the named variables.
    pub fn parse(text: &str, ring: &CoefficientRing, order: &Arc<MonomialOrder>, names: &[String]) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let p = parse_poly(&mut cur, ring, order, names)?;
        cur.expect_end()?;
        Ok(p)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a NcPoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let (negative, abs) = t.coeff.split_sign();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.word.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.word.display(self.names))?;
            } else {
                write!(f, "{abs}*{}", t.word.display(self.names))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_poly(
    cur: &mut Cursor<'_>,
    ring: &CoefficientRing,
    order: &Arc<MonomialOrder>,
    names: &[String],
) -> Result<NcPoly> {
    let mut raw = Vec::new();
    let mut negative = cur.eat('-');
    loop {
        let (c, w) = parse_term(cur, ring, names)?;
        raw.push((if negative { -c } else { c }, w));
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    NcPoly::normalize(raw, ring, order)
}

fn parse_term(cur: &mut Cursor<'_>, ring: &CoefficientRing, names: &[String]) -> Result<(RingElement, Word)> {
    if starts_coeff(cur, ring) {
        let c = parse_unsigned_coeff(cur, ring)?;
        if cur.eat('*') {
            Ok((c, parse_word(cur, names)?))
        } else {
            Ok((c, Word::one()))
        }
    } else {
        Ok((ring.one(), parse_word(cur, names)?))
    }
}

pub(crate) fn parse_word(cur: &mut Cursor<'_>, names: &[String]) -> Result<Word> {
    let mut letters = Vec::new();
    loop {
        if cur.peek() == Some('1') {
            cur.nat()
                .ok()
                .filter(|n| *n == 1.into())
                .ok_or_else(|| cur.error("expected a variable or 1"))?;
        } else {
            cur.skip_ws();
            let (line, column) = cur.position();
            let name = cur.ident().ok_or_else(|| cur.error("expected a variable"))?;
            let index = names.iter().position(|n| n == name).ok_or_else(|| Error::Parse {
                line,
                column,
                message: format!("unknown variable {name}"),
            })?;
            let exponent = if cur.eat('^') { cur.small_nat()? } else { 1 };
            letters.extend(std::iter::repeat_n(index as u32, exponent));
        }
        if !cur.eat('*') {
            break;
        }
    }
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("X{i}")).collect()
    }

    fn setup(ring: CoefficientRing, n: usize) -> (CoefficientRing, Arc<MonomialOrder>, Vec<String>) {
        (ring, Arc::new(MonomialOrder::grlex_natural(n)), names(n))
    }

    fn p(text: &str, ctx: &(CoefficientRing, Arc<MonomialOrder>, Vec<String>)) -> NcPoly {
        NcPoly::parse(text, &ctx.0, &ctx.1, &ctx.2).unwrap()
    }

    #[test]
    fn normalize_merges_and_cancels() {
        let ctx = setup(CoefficientRing::Integers, 2);
        let r = &ctx.0;
        let x1x2 = Word::new(vec![0, 1]);
        let merged = NcPoly::normalize(vec![(r.from_int(2), x1x2.clone()), (r.from_int(3), x1x2.clone())], r, &ctx.1).unwrap();
        assert_eq!(merged, p("5*X1*X2", &ctx));
        let x1 = Word::letter(0);
        let zero = NcPoly::normalize(vec![(r.from_int(3), x1.clone()), (r.from_int(-3), x1)], r, &ctx.1).unwrap();
        assert!(zero.is_zero());
        let z5 = CoefficientRing::integers_mod(5).unwrap();
        let zero = NcPoly::normalize(vec![(z5.from_int(2), x1x2.clone()), (z5.from_int(3), x1x2)], &z5, &ctx.1).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn normalize_rejects_foreign_coefficients() {
        let ctx = setup(CoefficientRing::Integers, 2);
        let q = CoefficientRing::Rationals;
        assert!(matches!(
            NcPoly::normalize(vec![(q.from_int(1), Word::letter(0))], &ctx.0, &ctx.1),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn products_keep_noncommutativity() {
        let ctx = setup(CoefficientRing::Integers, 2);
        let prod = p("X1 + X2", &ctx).mul(&p("X1 - X2", &ctx)).unwrap();
        assert_eq!(prod, p("X1^2 - X1*X2 + X2*X1 - X2^2", &ctx));
        let a = p("X2*X1 - 3*X1*X2", &ctx);
        assert_eq!(a.mul(&p("1", &ctx)).unwrap(), a);
        let z6 = setup(CoefficientRing::integers_mod(6).unwrap(), 2);
        assert!(p("2*X1", &z6).mul(&p("3*X2", &z6)).unwrap().is_zero());
    }

    #[test]
    fn mismatched_operands() {
        let a = setup(CoefficientRing::Integers, 2);
        let b = setup(CoefficientRing::Rationals, 2);
        assert!(p("X1", &a).add(&p("X1", &b)).is_err());
        let c = (CoefficientRing::Integers, Arc::new(MonomialOrder::grlex(vec![1, 0], WeightVector::uniform(2)).unwrap()), names(2));
        assert_eq!(p("X1", &a).mul(&p("X1", &c)), Err(Error::OrderMismatch));
    }

    #[test]
    fn leading_data() {
        let ctx = setup(CoefficientRing::Integers, 2);
        let f = p("X2*X1 - 3*X1*X2", &ctx);
        assert_eq!(f.lm().unwrap(), &Word::new(vec![1, 0]));
        assert_eq!(f.lh_b().unwrap(), Term::new(ctx.0.one(), Word::new(vec![1, 0])));
        let g = p("5*X1 + 2", &ctx);
        assert_eq!(g.lh_b().unwrap(), Term::new(ctx.0.from_int(5), Word::letter(0)));
        let zero = NcPoly::zero(&ctx.0, &ctx.1);
        assert_eq!(zero.lm(), Err(Error::ZeroPolynomial));
        assert_eq!(zero.lh_n(&WeightVector::uniform(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn leading_homogeneous_parts() {
        let ctx = setup(CoefficientRing::Integers, 2);
        let g1 = p("X1^2*X2 - 2*X1*X2*X1 + X2*X1^2 - 5*X1", &ctx);
        assert_eq!(g1.lh_n(&WeightVector::uniform(2)).unwrap(), p("X1^2*X2 - 2*X1*X2*X1 + X2*X1^2", &ctx));
        let h = p("X2*X1 - X1*X2", &ctx);
        assert_eq!(h.lh_n(&WeightVector::uniform(2)).unwrap(), h);
        let ctx3 = setup(CoefficientRing::Integers, 3);
        let g32 = p("X3*X2 - 2*X2*X3 + 4*X1^2 + 5*X1 + 6", &ctx3);
        assert_eq!(g32.lh_n(&WeightVector::uniform(3)).unwrap(), p("X3*X2 - 2*X2*X3 + 4*X1^2", &ctx3));
    }

    #[test]
    fn display_and_parse() {
        let ctx = setup(CoefficientRing::Integers, 3);
        let f = p("-X2*X3*X1 + X3*X1*X2", &ctx);
        assert_eq!(f.display(&ctx.2).to_string(), "X3*X1*X2 - X2*X3*X1");
        let g = p("-X1 - 2", &ctx);
        assert_eq!(g.display(&ctx.2).to_string(), "-X1 - 2");
        assert_eq!(p("X1 - X1", &ctx).display(&ctx.2).to_string(), "0");
        match NcPoly::parse("X2*X1 - X3", &ctx.0, &ctx.1, &names(2)) {
            Err(Error::Parse { message, column, .. }) => {
                assert!(message.contains("X3"));
                assert_eq!(column, 9);
            }
            other => panic!("{other:?}"),
        }
        let lq = CoefficientRing::laurent("q");
        let names3 = vec!["x12".to_string(), "x13".to_string(), "x23".to_string()];
        let ord = Arc::new(MonomialOrder::grlex_natural(3));
        let r = NcPoly::parse("x13*x12 - q^-2*x12*x13", &lq, &ord, &names3).unwrap();
        assert_eq!(r.terms()[1].coeff, RingElement::parse("-q^-2", &lq).unwrap());
        assert_eq!(r.display(&names3).to_string(), "x13*x12 - q^-2*x12*x13");
        let s = NcPoly::parse("x23*x12 - (q^2 - 1)*x12*x23 + 2*q*x13", &lq, &ord, &names3).unwrap();
        assert_eq!(s.display(&names3).to_string(), "x23*x12 + (-q^2 + 1)*x12*x23 + 2*q*x13");
    }
}
