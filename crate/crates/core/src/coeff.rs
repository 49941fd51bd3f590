//! Exact arithmetic in the supported commutative coefficient rings: the
//! integers, the residue rings `Z/n` (composite `n` allowed), the rationals,
//! and Laurent polynomials with integer coefficients in one symbol.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::syntax::Cursor;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    IntegersMod(BigInt),
    Rationals,
    /// `Z[q, q^-1]`; the payload is the symbol name.
    LaurentIntPoly(Arc<str>),
}

impl CoefficientRing {
    pub fn integers_mod(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::from(2) {
            return Err(Error::BadModulus(n.to_string()));
        }
        Ok(CoefficientRing::IntegersMod(n))
    }

    pub fn laurent(symbol: &str) -> Self {
        CoefficientRing::LaurentIntPoly(Arc::from(symbol))
    }

    pub fn zero(&self) -> RingElement {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> RingElement {
        self.from_bigint(BigInt::one())
    }

    pub fn from_int(&self, n: i64) -> RingElement {
        self.from_bigint(BigInt::from(n))
    }

    /// Image of an integer under the canonical map `Z -> R`.
    pub fn from_bigint(&self, n: BigInt) -> RingElement {
        match self {
            CoefficientRing::Integers => RingElement::Integer(n),
            CoefficientRing::IntegersMod(m) => RingElement::Modular {
                value: n.mod_floor(m),
                modulus: m.clone(),
            },
            CoefficientRing::Rationals => RingElement::Rational(BigRational::from_integer(n)),
            CoefficientRing::LaurentIntPoly(sym) => {
                RingElement::Laurent(LaurentPoly::monomial(sym.clone(), n, 0))
            }
        }
    }

    pub fn rational(&self, numer: i64, denom: i64) -> Result<RingElement> {
        match self {
            CoefficientRing::Rationals if denom != 0 => Ok(RingElement::Rational(
                BigRational::new(numer.into(), denom.into()),
            )),
            _ => Err(Error::OutsideRing(format!("{numer}/{denom}"), self.to_string())),
        }
    }

    /// `c * q^exponent` in a Laurent ring.
    pub fn laurent_monomial(&self, c: i64, exponent: i64) -> Result<RingElement> {
        match self {
            CoefficientRing::LaurentIntPoly(sym) => Ok(RingElement::Laurent(
                LaurentPoly::monomial(sym.clone(), BigInt::from(c), exponent),
            )),
            _ => Err(Error::OutsideRing(
                format!("laurent monomial of degree {exponent}"),
                self.to_string(),
            )),
        }
    }

    /// Fields supported by the linear-algebra oracles: `Q` and `Z/p`, `p` prime.
    pub fn is_field(&self) -> bool {
        match self {
            CoefficientRing::Rationals => true,
            CoefficientRing::IntegersMod(n) => is_prime(n),
            _ => false,
        }
    }

    /// Maps `a` along the canonical homomorphism into `self`. Laurent
    /// elements need the image of the symbol, which must be a unit.
    pub fn map_element(&self, a: &RingElement, q_value: Option<&RingElement>) -> Result<RingElement> {
        let fail = || Error::Unmappable {
            element: a.to_string(),
            target: self.to_string(),
        };
        match (a, self) {
            (RingElement::Integer(n), _) => Ok(self.from_bigint(n.clone())),
            (RingElement::Rational(r), CoefficientRing::Rationals) => Ok(RingElement::Rational(r.clone())),
            (RingElement::Rational(r), CoefficientRing::IntegersMod(_)) => {
                let num = self.from_bigint(r.numer().clone());
                let den = self.from_bigint(r.denom().clone());
                let inv = den.invert_unit().map_err(|_| fail())?;
                Ok(&num * &inv)
            }
            (RingElement::Rational(r), _) if r.is_integer() => Ok(self.from_bigint(r.to_integer())),
            (RingElement::Modular { value, modulus }, CoefficientRing::IntegersMod(m))
                if modulus.is_multiple_of(m) =>
            {
                Ok(self.from_bigint(value.clone()))
            }
            (RingElement::Laurent(p), CoefficientRing::LaurentIntPoly(sym)) => {
                let mut p = p.clone();
                p.symbol = sym.clone();
                Ok(RingElement::Laurent(p))
            }
            (RingElement::Laurent(p), _) => {
                let q = q_value.ok_or_else(fail)?;
                if q.ring() != *self || !q.is_unit() {
                    return Err(fail());
                }
                let q_inv = q.invert_unit()?;
                let mut acc = self.zero();
                for (&e, c) in &p.terms {
                    let base = if e >= 0 { q } else { &q_inv };
                    let mut t = self.from_bigint(c.clone());
                    for _ in 0..e.unsigned_abs() {
                        t = &t * base;
                    }
                    acc = &acc + &t;
                }
                Ok(acc)
            }
            _ => Err(fail()),
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::IntegersMod(n) => write!(f, "Zmod {n}"),
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::LaurentIntPoly(s) => write!(f, "LaurentZ {s}"),
        }
    }
}

fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Finite sum `sum c_e q^e` with integer coefficients; no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    symbol: Arc<str>,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    fn monomial(symbol: Arc<str>, c: BigInt, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { symbol, terms }
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    /// Exponent/coefficient pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            if sign > 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { symbol: self.symbol.clone(), terms }
    }

    fn product(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *terms.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { symbol: self.symbol.clone(), terms }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64) -> fmt::Result {
        if e == 0 {
            return write!(f, "{c}");
        }
        if c.is_negative() {
            write!(f, "-")?;
        }
        let abs = c.abs();
        if !abs.is_one() {
            write!(f, "{abs}*")?;
        }
        write!(f, "{}", self.symbol)?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.terms.len() {
            0 => write!(f, "0"),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                self.fmt_term(f, c, *e)
            }
            _ => {
                write!(f, "(")?;
                for (k, (e, c)) in self.terms.iter().rev().enumerate() {
                    if k == 0 {
                        self.fmt_term(f, c, *e)?;
                    } else if c.is_negative() {
                        write!(f, " - ")?;
                        self.fmt_term(f, &-c, *e)?;
                    } else {
                        write!(f, " + ")?;
                        self.fmt_term(f, c, *e)?;
                    }
                }
                write!(f, ")")
            }
        }
    }
}

/// An element of one of the supported rings, in canonical form, so that
/// structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    /// Least nonnegative representative.
    Modular { value: BigInt, modulus: BigInt },
    Rational(BigRational),
    Laurent(LaurentPoly),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// `op(a, b)`; `Neg` ignores `b` apart from the ring check.
pub fn arith(op: ArithOp, a: &RingElement, b: &RingElement) -> Result<RingElement> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Neg => {
            a.check_same_ring(b)?;
            Ok(-a)
        }
    }
}

impl RingElement {
    pub fn ring(&self) -> CoefficientRing {
        match self {
            RingElement::Integer(_) => CoefficientRing::Integers,
            RingElement::Modular { modulus, .. } => CoefficientRing::IntegersMod(modulus.clone()),
            RingElement::Rational(_) => CoefficientRing::Rationals,
            RingElement::Laurent(p) => CoefficientRing::LaurentIntPoly(p.symbol.clone()),
        }
    }

    pub fn belongs_to(&self, ring: &CoefficientRing) -> bool {
        match (self, ring) {
            (RingElement::Integer(_), CoefficientRing::Integers) => true,
            (RingElement::Modular { modulus, .. }, CoefficientRing::IntegersMod(m)) => modulus == m,
            (RingElement::Rational(_), CoefficientRing::Rationals) => true,
            (RingElement::Laurent(p), CoefficientRing::LaurentIntPoly(s)) => p.symbol == *s,
            _ => false,
        }
    }

    fn same_ring(&self, other: &Self) -> bool {
        match (self, other) {
            (RingElement::Integer(_), RingElement::Integer(_)) => true,
            (RingElement::Modular { modulus: a, .. }, RingElement::Modular { modulus: b, .. }) => a == b,
            (RingElement::Rational(_), RingElement::Rational(_)) => true,
            (RingElement::Laurent(a), RingElement::Laurent(b)) => a.symbol == b.symbol,
            _ => false,
        }
    }

    pub fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring().to_string(),
                right: other.ring().to_string(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(n) => n.is_zero(),
            RingElement::Modular { value, .. } => value.is_zero(),
            RingElement::Rational(r) => r.is_zero(),
            RingElement::Laurent(p) => p.terms.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Integer(n) => n.is_one(),
            RingElement::Modular { value, .. } => value.is_one(),
            RingElement::Rational(r) => r.is_one(),
            RingElement::Laurent(p) => p.terms.len() == 1 && p.terms.get(&0).is_some_and(|c| c.is_one()),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a + b),
            (RingElement::Modular { value: a, modulus }, RingElement::Modular { value: b, .. }) => {
                let mut v = a + b;
                if v >= *modulus {
                    v -= modulus;
                }
                RingElement::Modular { value: v, modulus: modulus.clone() }
            }
            (RingElement::Rational(a), RingElement::Rational(b)) => RingElement::Rational(a + b),
            (RingElement::Laurent(a), RingElement::Laurent(b)) => RingElement::Laurent(a.combine(b, 1)),
            _ => panic!("ring mismatch: {} vs {}", self.ring(), other.ring()),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a * b),
            (RingElement::Modular { value: a, modulus }, RingElement::Modular { value: b, .. }) => {
                RingElement::Modular {
                    value: (a * b) % modulus,
                    modulus: modulus.clone(),
                }
            }
            (RingElement::Rational(a), RingElement::Rational(b)) => RingElement::Rational(a * b),
            (RingElement::Laurent(a), RingElement::Laurent(b)) => RingElement::Laurent(a.product(b)),
            _ => panic!("ring mismatch: {} vs {}", self.ring(), other.ring()),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Integer(n) => n.abs().is_one(),
            RingElement::Modular { value, modulus } => value.gcd(modulus).is_one(),
            RingElement::Rational(r) => !r.is_zero(),
            RingElement::Laurent(p) => p.terms.len() == 1 && p.terms.values().all(|c| c.abs().is_one()),
        }
    }

    pub fn invert_unit(&self) -> Result<Self> {
        let fail = || Error::NonUnit {
            element: self.to_string(),
            ring: self.ring().to_string(),
        };
        if !self.is_unit() {
            return Err(fail());
        }
        Ok(match self {
            RingElement::Integer(n) => RingElement::Integer(n.clone()),
            RingElement::Modular { value, modulus } => {
                let eg = value.extended_gcd(modulus);
                RingElement::Modular {
                    value: eg.x.mod_floor(modulus),
                    modulus: modulus.clone(),
                }
            }
            RingElement::Rational(r) => RingElement::Rational(r.recip()),
            RingElement::Laurent(p) => {
                let (e, c) = p.terms.iter().next().ok_or_else(fail)?;
                RingElement::Laurent(LaurentPoly::monomial(p.symbol.clone(), c.clone(), -e))
            }
        })
    }

    /// Splits off a leading minus sign for display inside sums: returns
    /// `(true, -self)` when the canonical text of `self` starts with `-`.
    pub fn split_sign(&self) -> (bool, RingElement) {
        let negative = match self {
            RingElement::Integer(n) => n.is_negative(),
            RingElement::Rational(r) => r.is_negative(),
            RingElement::Laurent(p) => p.terms.len() == 1 && p.terms.values().all(|c| c.is_negative()),
            RingElement::Modular { .. } => false,
        };
        if negative {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    /// Canonical text form.
    pub fn format_coeff(&self) -> String {
        self.to_string()
    }

    /// Parses a coefficient of `ring`; the whole text must be consumed.
    pub fn parse(text: &str, ring: &CoefficientRing) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let value = parse_coeff(&mut cur, ring)?;
        cur.expect_end()?;
        Ok(value)
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            RingElement::Integer(n) => n.to_i64(),
            RingElement::Modular { value, .. } => value.to_i64(),
            RingElement::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            _ => None,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(n) => write!(f, "{n}"),
            RingElement::Modular { value, .. } => write!(f, "{value}"),
            RingElement::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            RingElement::Laurent(p) => write!(f, "{p}"),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        match self {
            RingElement::Integer(n) => RingElement::Integer(-n),
            RingElement::Modular { value, modulus } => RingElement::Modular {
                value: if value.is_zero() { value.clone() } else { modulus - value },
                modulus: modulus.clone(),
            },
            RingElement::Rational(r) => RingElement::Rational(-r),
            RingElement::Laurent(p) => RingElement::Laurent(LaurentPoly {
                symbol: p.symbol.clone(),
                terms: p.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            }),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -&self
    }
}

// Operator forms panic on a ring mismatch; they are used where the operands
// have already been validated (e.g. inside a polynomial over one ring).
impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        self.add_unchecked(rhs)
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self.add_unchecked(&-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        self.mul_unchecked(rhs)
    }
}

/// Full coefficient grammar, including a leading minus sign.
pub(crate) fn parse_coeff(cur: &mut Cursor<'_>, ring: &CoefficientRing) -> Result<RingElement> {
    let negative = cur.eat('-');
    let value = parse_unsigned_coeff(cur, ring)?;
    Ok(if negative { -value } else { value })
}

pub(crate) fn laurent_symbol(ring: &CoefficientRing) -> Option<&str> {
    match ring {
        CoefficientRing::LaurentIntPoly(s) => Some(s),
        _ => None,
    }
}

/// Whether a coefficient (rather than a word) starts at the cursor.
pub(crate) fn starts_coeff(cur: &mut Cursor<'_>, ring: &CoefficientRing) -> bool {
    if cur.peek_digit() || cur.peek() == Some('(') {
        return true;
    }
    match laurent_symbol(ring) {
        Some(sym) => cur.peek_ident() == Some(sym),
        None => false,
    }
}

pub(crate) fn parse_unsigned_coeff(cur: &mut Cursor<'_>, ring: &CoefficientRing) -> Result<RingElement> {
    let sym = laurent_symbol(ring);
    if cur.eat('(') {
        let mut acc = parse_coeff(cur, ring)?;
        loop {
            if cur.eat('+') {
                acc = &acc + &parse_coeff(cur, ring)?;
            } else if cur.eat('-') {
                acc = &acc - &parse_coeff(cur, ring)?;
            } else {
                break;
            }
        }
        cur.expect(')')?;
        return Ok(acc);
    }
    if cur.peek_digit() {
        let n = cur.nat()?;
        if cur.peek() == Some('/') {
            cur.eat('/');
            let d = cur.nat()?;
            if d.is_zero() {
                return Err(cur.error("zero denominator"));
            }
            return match ring {
                CoefficientRing::Rationals => Ok(RingElement::Rational(BigRational::new(n, d))),
                _ => Err(Error::OutsideRing(format!("{n}/{d}"), ring.to_string())),
            };
        }
        if let Some(s) = sym {
            if cur.lookahead_star_ident(s) {
                cur.eat('*');
                cur.ident();
                let e = parse_exponent(cur)?;
                return ring.laurent_monomial_big(n, e);
            }
        }
        return Ok(ring.from_bigint(n));
    }
    match (cur.peek_ident(), sym) {
        (Some(id), Some(s)) if id == s => {
            cur.ident();
            let e = parse_exponent(cur)?;
            ring.laurent_monomial_big(BigInt::one(), e)
        }
        (Some(id), _) => Err(Error::OutsideRing(id.to_string(), ring.to_string())),
        _ => Err(cur.error("expected a coefficient")),
    }
}

fn parse_exponent(cur: &mut Cursor<'_>) -> Result<i64> {
    if cur.eat('^') {
        cur.small_int()
    } else {
        Ok(1)
    }
}

/// `Z`, `Q`, `Zmod n` or `LaurentZ sym`.
pub(crate) fn parse_ring(cur: &mut Cursor<'_>) -> Result<CoefficientRing> {
    match cur.ident() {
        Some("Z") => Ok(CoefficientRing::Integers),
        Some("Q") => Ok(CoefficientRing::Rationals),
        Some("Zmod") => {
            let n = cur.nat()?;
            CoefficientRing::integers_mod(n).map_err(|e| cur.error(e.to_string()))
        }
        Some("LaurentZ") => {
            let sym = cur.ident().ok_or_else(|| cur.error("expected the Laurent symbol"))?;
            Ok(CoefficientRing::laurent(sym))
        }
        _ => Err(cur.error("expected Z, Q, Zmod n or LaurentZ q")),
    }
}

impl std::str::FromStr for CoefficientRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let ring = parse_ring(&mut cur)?;
        cur.expect_end()?;
        Ok(ring)
    }
}

impl CoefficientRing {
    fn laurent_monomial_big(&self, c: BigInt, e: i64) -> Result<RingElement> {
        match self {
            CoefficientRing::LaurentIntPoly(sym) => Ok(RingElement::Laurent(LaurentPoly::monomial(sym.clone(), c, e))),
            _ => Err(Error::OutsideRing("laurent monomial".into(), self.to_string())),
        }
    }
}
