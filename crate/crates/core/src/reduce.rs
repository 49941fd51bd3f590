//! Division by a monic relation set.
//!
//! Strategy: repeatedly take the leading term of the working polynomial,
//! scan the relations in list order, and for the first relation whose
//! leading monomial divides it, cancel the whole term at the leftmost
//! occurrence. Terms no relation divides move to the remainder. Since the
//! divisors are monic no coefficient is ever inverted.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::coeff::RingElement;
use crate::error::{Error, Result};
use crate::monoid::Word;
use crate::order::OrderKey;
use crate::poly::{NcPoly, Term};

/// One division step: `coeff * left * g[relation] * right` was subtracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub coeff: RingElement,
    pub left: Word,
    pub relation: usize,
    pub right: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub remainder: NcPoly,
    pub trace: Vec<TraceStep>,
}

impl ReductionResult {
    /// `sum coeff * left * g * right + remainder`; equals the dividend.
    pub fn reconstruct(&self, relations: &[NcPoly]) -> Result<NcPoly> {
        let mut acc = self.remainder.clone();
        for step in &self.trace {
            let g = relations.get(step.relation).ok_or(Error::IndexOutOfRange {
                index: step.relation,
                count: relations.len(),
            })?;
            acc = acc.add(&g.sandwich(&step.left, &step.coeff, &step.right)?)?;
        }
        Ok(acc)
    }

    /// One line per step: `coeff | left | rel#k | right`.
    pub fn render_trace(&self, names: &[String]) -> Vec<String> {
        self.trace
            .iter()
            .map(|s| {
                format!(
                    "{} | {} | rel#{} | {}",
                    s.coeff,
                    s.left.display(names),
                    s.relation,
                    s.right.display(names)
                )
            })
            .collect()
    }
}

/// Checks the preconditions for dividing by `relations`: each nonzero, monic,
/// with leading monomial different from 1, over the ring and order of `like`.
pub fn validate_relations(relations: &[NcPoly], like: &NcPoly) -> Result<()> {
    for (index, g) in relations.iter().enumerate() {
        g.check_compatible(like)?;
        let lt = g.leading_term().map_err(|_| Error::ZeroRelation { index })?;
        if !lt.coeff.is_one() {
            return Err(Error::NonMonic {
                index,
                lc: lt.coeff.to_string(),
            });
        }
        if lt.word.is_one() {
            return Err(Error::UnitRelation { index });
        }
    }
    Ok(())
}

pub fn divide(f: &NcPoly, relations: &[NcPoly]) -> Result<ReductionResult> {
    validate_relations(relations, f)?;
    Ok(divide_unchecked(f, relations))
}

pub(crate) fn divide_unchecked(f: &NcPoly, relations: &[NcPoly]) -> ReductionResult {
    let order = f.order().clone();
    let ring = f.ring().clone();
    let mut work: BTreeMap<OrderKey, Term> = f.terms().iter().map(|t| (order.key(&t.word), t.clone())).collect();
    let mut remainder = Vec::new();
    let mut trace = Vec::new();
    let mut previous: Option<OrderKey> = None;

    while let Some((key, term)) = work.pop_last() {
        if let Some(prev) = &previous {
            debug_assert!(key < *prev, "division must strictly descend");
        }
        let divisor = relations
            .iter()
            .enumerate()
            .find_map(|(i, g)| term.word.find(&g.terms()[0].word).map(|pos| (i, pos)));
        match divisor {
            None => remainder.push(term),
            Some((i, pos)) => {
                let g = &relations[i];
                let lm_len = g.terms()[0].word.len();
                let left = term.word.slice(0, pos);
                let right = term.word.slice(pos + lm_len, term.word.len());
                for t in &g.terms()[1..] {
                    let c = -(&term.coeff * &t.coeff);
                    if c.is_zero() {
                        continue;
                    }
                    let w = t.word.sandwich(&left, &right);
                    match work.entry(order.key(&w)) {
                        Entry::Vacant(slot) => {
                            slot.insert(Term::new(c, w));
                        }
                        Entry::Occupied(mut slot) => {
                            let sum = &slot.get().coeff + &c;
                            if sum.is_zero() {
                                slot.remove();
                            } else {
                                slot.get_mut().coeff = sum;
                            }
                        }
                    }
                }
                trace.push(TraceStep {
                    coeff: term.coeff,
                    left,
                    relation: i,
                    right,
                });
            }
        }
        previous = Some(key);
    }

    ReductionResult {
        remainder: NcPoly::from_sorted_terms(remainder, &ring, &order),
        trace,
    }
}

pub fn normal_form(f: &NcPoly, relations: &[NcPoly]) -> Result<NcPoly> {
    Ok(divide(f, relations)?.remainder)
}

pub fn reduces_to_zero(f: &NcPoly, relations: &[NcPoly]) -> Result<bool> {
    Ok(normal_form(f, relations)?.is_zero())
}

/// No word of `f` contains the leading monomial of any relation.
pub fn is_normal(f: &NcPoly, relations: &[NcPoly]) -> bool {
    let lms: Vec<&Word> = relations.iter().filter_map(|g| g.lm().ok()).collect();
    f.terms().iter().all(|t| lms.iter().all(|m| !t.word.contains(m)))
}
