//! Presentations: ring, variables, monomial order and defining relations,
//! with the line-oriented text format used for fixtures and the CLI.
//!
//! ```text
//! # comment
//! ring Zmod 6            # Z | Q | Zmod n | LaurentZ q
//! vars X1 X2 X3
//! weights 1 3 3          # optional, graded orders only
//! order grlex X2 < X1 < X3
//! rel X2*X1 - 3*X1*X2
//! ```
//!
//! The etlex form is `order etlex [t3 < t2 < t1] [X1 < X2 < X3]`, where the
//! first chain may name variables directly or as `tK`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{laurent_symbol, parse_ring, CoefficientRing};
use crate::error::{Error, Result};
use crate::monoid::WeightVector;
use crate::order::MonomialOrder;
use crate::poly::{parse_poly, NcPoly};
use crate::syntax::Cursor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ring: CoefficientRing,
    names: Vec<String>,
    order: Arc<MonomialOrder>,
    relations: Vec<NcPoly>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn check_names(names: &[String], ring: &CoefficientRing) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if !valid_name(name) {
            return Err(Error::InvalidParameter(format!("invalid variable name {name:?}")));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidParameter(format!("variable {name} declared twice")));
        }
        if laurent_symbol(ring) == Some(name.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "variable {name} clashes with the coefficient symbol"
            )));
        }
    }
    Ok(())
}

impl Presentation {
    pub fn new(
        ring: CoefficientRing,
        names: Vec<String>,
        order: Arc<MonomialOrder>,
        relations: Vec<NcPoly>,
    ) -> Result<Self> {
        check_names(&names, &ring)?;
        if names.len() != order.nvars() {
            return Err(Error::InvalidParameter(format!(
                "{} variable names for an order on {} variables",
                names.len(),
                order.nvars()
            )));
        }
        for (index, g) in relations.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::ZeroRelation { index });
            }
            if g.ring() != &ring {
                return Err(Error::RingMismatch {
                    left: g.ring().to_string(),
                    right: ring.to_string(),
                });
            }
            if g.order().as_ref() != order.as_ref() {
                return Err(Error::OrderMismatch);
            }
        }
        let relations = relations.into_iter().map(|g| g.with_order(&order)).collect();
        Ok(Presentation {
            ring,
            names,
            order,
            relations,
        })
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn weights(&self) -> &WeightVector {
        self.order.weights()
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Same ring, variables and order with another relation list.
    pub fn with_relations(&self, relations: Vec<NcPoly>) -> Result<Self> {
        Self::new(self.ring.clone(), self.names.clone(), self.order.clone(), relations)
    }

    /// A polynomial over this presentation's ring, order and variables.
    pub fn poly(&self, text: &str) -> Result<NcPoly> {
        NcPoly::parse(text, &self.ring, &self.order, &self.names)
    }

    pub fn display_poly(&self, f: &NcPoly) -> String {
        f.display(&self.names).to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring)?;
        writeln!(f, "vars {}", self.names.join(" "))?;
        if self.order.is_graded() && !self.weights().is_uniform() {
            let w: Vec<String> = self.weights().as_slice().iter().map(u64::to_string).collect();
            writeln!(f, "weights {}", w.join(" "))?;
        }
        writeln!(f, "order {}", self.order.display(&self.names))?;
        for g in &self.relations {
            writeln!(f, "rel {}", g.display(&self.names))?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Parser {
    ring: Option<CoefficientRing>,
    names: Option<Vec<String>>,
    weights: Option<WeightVector>,
    order: Option<Arc<MonomialOrder>>,
    relations: Vec<NcPoly>,
}

fn at_line(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn located(cur: &Cursor<'_>, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => cur.error(other.to_string()),
    }
}

impl Parser {
    fn run(mut self, text: &str) -> Result<Presentation> {
        let mut last = 0;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            last = line;
            let body = raw.split('#').next().unwrap_or("");
            let mut cur = Cursor::at(body, line, 0);
            if cur.at_end() {
                continue;
            }
            let keyword = cur.ident().ok_or_else(|| cur.error("expected a directive"))?;
            match keyword {
                "ring" => self.ring_line(&mut cur)?,
                "vars" => self.vars_line(&mut cur)?,
                "weights" => self.weights_line(&mut cur)?,
                "order" => self.order_line(&mut cur)?,
                "rel" => self.rel_line(&mut cur)?,
                other => return Err(at_line(line, 1, format!("unknown directive {other}"))),
            }
            cur.expect_end()?;
        }
        let ring = self.ring.ok_or_else(|| at_line(last + 1, 1, "missing ring declaration"))?;
        let names = self.names.ok_or_else(|| at_line(last + 1, 1, "missing vars declaration"))?;
        let order = match self.order {
            Some(o) => o,
            None => default_order(names.len(), self.weights)?,
        };
        Presentation::new(ring, names, order, self.relations)
    }

    fn ring_line(&mut self, cur: &mut Cursor<'_>) -> Result<()> {
        if self.ring.is_some() {
            return Err(cur.error("ring declared twice"));
        }
        let ring = parse_ring(cur)?;
        self.ring = Some(ring);
        Ok(())
    }

    fn vars_line(&mut self, cur: &mut Cursor<'_>) -> Result<()> {
        let ring = self.ring.as_ref().ok_or_else(|| cur.error("ring must be declared before vars"))?;
        if self.names.is_some() {
            return Err(cur.error("vars declared twice"));
        }
        let mut names = Vec::new();
        while !cur.at_end() {
            let (line, column) = cur.position();
            let name = cur.ident().ok_or_else(|| cur.error("expected a variable name"))?;
            if names.iter().any(|n: &String| n == name) {
                return Err(at_line(line, column, format!("variable {name} declared twice")));
            }
            if laurent_symbol(ring) == Some(name) {
                return Err(at_line(line, column, format!("variable {name} clashes with the coefficient symbol")));
            }
            names.push(name.to_string());
        }
        if names.is_empty() {
            return Err(cur.error("expected at least one variable"));
        }
        self.names = Some(names);
        Ok(())
    }

    fn weights_line(&mut self, cur: &mut Cursor<'_>) -> Result<()> {
        let n = self.names.as_ref().ok_or_else(|| cur.error("vars must be declared before weights"))?.len();
        if self.weights.is_some() || self.order.is_some() {
            return Err(cur.error("weights must appear once, before order"));
        }
        let mut w = Vec::new();
        while !cur.at_end() {
            let k = cur.small_nat()?;
            w.push(k as u64);
        }
        if w.len() != n {
            return Err(cur.error(format!("expected {n} weights, found {}", w.len())));
        }
        self.weights = Some(WeightVector::new(w).map_err(|e| located(cur, e))?);
        Ok(())
    }

    fn order_line(&mut self, cur: &mut Cursor<'_>) -> Result<()> {
        let names = self.names.as_ref().ok_or_else(|| cur.error("vars must be declared before order"))?;
        if self.order.is_some() {
            return Err(cur.error("order declared twice"));
        }
        if !self.relations.is_empty() {
            return Err(cur.error("order must precede the relations"));
        }
        let n = names.len();
        let order = match cur.ident() {
            Some("grlex") => {
                let prec = chain(cur, names, false)?;
                let weights = self.weights.clone().unwrap_or_else(|| WeightVector::uniform(n));
                MonomialOrder::grlex(prec, weights).map_err(|e| located(cur, e))?
            }
            Some("etlex") => {
                if self.weights.is_some() {
                    return Err(cur.error("weights require a graded order"));
                }
                cur.expect('[')?;
                let comm = chain(cur, names, true)?;
                cur.expect(']')?;
                cur.expect('[')?;
                let tie = chain(cur, names, false)?;
                cur.expect(']')?;
                MonomialOrder::etlex(comm, tie).map_err(|e| located(cur, e))?
            }
            _ => return Err(cur.error("expected grlex or etlex")),
        };
        self.order = Some(Arc::new(order));
        Ok(())
    }

    fn rel_line(&mut self, cur: &mut Cursor<'_>) -> Result<()> {
        let ring = self.ring.clone().ok_or_else(|| cur.error("ring must be declared before rel"))?;
        let names = self.names.clone().ok_or_else(|| cur.error("vars must be declared before rel"))?;
        if self.order.is_none() {
            self.order = Some(default_order(names.len(), self.weights.clone())?);
        }
        let order = self.order.clone().expect("set above");
        cur.skip_ws();
        let (line, column) = cur.position();
        let g = parse_poly(cur, &ring, &order, &names).map_err(|e| located(cur, e))?;
        if g.is_zero() {
            return Err(at_line(line, column, "relation is zero"));
        }
        self.relations.push(g);
        Ok(())
    }
}

fn default_order(n: usize, weights: Option<WeightVector>) -> Result<Arc<MonomialOrder>> {
    let weights = weights.unwrap_or_else(|| WeightVector::uniform(n));
    Ok(Arc::new(MonomialOrder::grlex((0..n as u32).collect(), weights)?))
}

/// `a < b < c` over the declared names; with `aliases`, `tK` also names
/// variable K.
fn chain(cur: &mut Cursor<'_>, names: &[String], aliases: bool) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    loop {
        cur.skip_ws();
        let (line, column) = cur.position();
        let name = cur.ident().ok_or_else(|| cur.error("expected a variable"))?;
        let index = names.iter().position(|n| n == name).or_else(|| {
            if !aliases {
                return None;
            }
            let k: usize = name.strip_prefix('t')?.parse().ok()?;
            (1..=names.len()).contains(&k).then(|| k - 1)
        });
        match index {
            Some(i) => out.push(i as u32),
            None => return Err(at_line(line, column, format!("unknown variable {name}"))),
        }
        if !cur.eat('<') {
            break;
        }
    }
    let mut seen = vec![false; names.len()];
    for &x in &out {
        if std::mem::replace(&mut seen[x as usize], true) {
            return Err(cur.error(format!("variable {} repeated in precedence", names[x as usize])));
        }
    }
    if out.len() != names.len() {
        return Err(cur.error(format!("precedence must list all {} variables", names.len())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Word;

    const THREE_GEN: &str = "\
ring Z
vars X1 X2 X3
order grlex X1 < X2 < X3
rel X2*X1 - X1*X2
rel X3*X1 - 3*X2*X3 - 2*X1*X3 - 5*X2
rel X3*X2 - X2*X3
";

    #[test]
    fn parses_three_relations() {
        let p = Presentation::parse(THREE_GEN).unwrap();
        let lms: Vec<Word> = p.relations().iter().map(|g| g.lm().unwrap().clone()).collect();
        assert_eq!(lms, vec![Word::new(vec![1, 0]), Word::new(vec![2, 0]), Word::new(vec![2, 1])]);
        assert_eq!(p.to_string(), THREE_GEN);
    }

    #[test]
    fn unknown_variable_is_named() {
        let err = Presentation::parse("ring Z\nvars X1 X2\nrel X2*X1 - X3*X1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                column: 13,
                message: "unknown variable X3".into()
            }
        );
    }

    #[test]
    fn laurent_coefficients() {
        let p = Presentation::parse("ring LaurentZ q\nvars x12 x13\norder grlex x12 < x13\nrel x13*x12 - q^-2*x12*x13\n").unwrap();
        let g = &p.relations()[0];
        assert_eq!(g.terms()[1].coeff, p.ring().laurent_monomial(-1, -2).unwrap());
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn etlex_with_aliases() {
        let text = "ring Q\nvars X1 X2 X3\norder etlex [t3 < t2 < t1] [X1 < X2 < X3]\nrel X3*X1 - X1*X3 - X2^5\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.relations()[0].lm().unwrap(), &Word::new(vec![2, 0]));
        let again = Presentation::parse(&p.to_string()).unwrap();
        assert_eq!(again, p);
        assert_eq!(
            p.to_string().lines().nth(2).unwrap(),
            "order etlex [X3 < X2 < X1] [X1 < X2 < X3]"
        );
    }

    #[test]
    fn weights_round_trip() {
        let text = "ring Z\nvars X1 X2\nweights 1 3\norder grlex X1 < X2\nrel X2*X1 - X1*X2 - X1^3\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.relations()[0].lm().unwrap(), &Word::new(vec![1, 0]));
        assert_eq!(p.to_string(), text);
    }

    #[test]
    fn comments_and_defaults() {
        let p = Presentation::parse("# quantum plane\nring Zmod 6 # ring\n\nvars X1 X2\nrel X2*X1 - 5*X1*X2\n").unwrap();
        assert_eq!(p.order().as_ref(), &MonomialOrder::grlex_natural(2));
        assert_eq!(p.relations()[0].terms()[1].coeff, p.ring().from_int(1));
    }

    #[test]
    fn structural_errors() {
        let cases = [
            ("vars X1\n", 1, "ring must be declared before vars"),
            ("ring Z\nvars X1 X1\n", 2, "variable X1 declared twice"),
            ("ring LaurentZ q\nvars q\n", 2, "variable q clashes with the coefficient symbol"),
            ("ring Z\nvars X1\nrel 1/2*X1\n", 3, "1/2 is not representable in Z"),
            ("ring Z\nvars X1 X2\norder grlex X1\n", 3, "precedence must list all 2 variables"),
            ("ring Z\nvars X1\nrel X1 - X1\n", 3, "relation is zero"),
            ("ring Zmod 1\n", 1, "modulus must be at least 2, got 1"),
            ("ring Z\nfoo\n", 2, "unknown directive foo"),
            ("ring Z\n", 2, "missing vars declaration"),
        ];
        for (text, line, message) in cases {
            match Presentation::parse(text) {
                Err(Error::Parse { line: l, message: m, .. }) => {
                    assert_eq!((l, m.as_str()), (line, message), "{text:?}");
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
