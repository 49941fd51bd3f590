//! Monomial orderings on words: weighted graded lexicographic order, and the
//! lexicographic extension of a commutative lexicographic order through
//! abelianization.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::{WeightVector, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Weighted degree first, then leftmost differing letter.
    Grlex,
    /// Abelianized exponent vectors under commutative lex, then leftmost
    /// differing letter.
    Etlex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Variables in ascending precedence (the word-lex tie breaker).
    precedence: Vec<u32>,
    /// `rank[x]` is the position of variable `x` in `precedence`.
    rank: Vec<u32>,
    weights: WeightVector,
    /// Etlex only: commutative precedence, ascending.
    commutative: Vec<u32>,
}

fn ranks_of(precedence: &[u32], n: usize) -> Result<Vec<u32>> {
    if precedence.len() != n {
        return Err(Error::InvalidParameter(format!(
            "precedence lists {} variables, expected {n}",
            precedence.len()
        )));
    }
    let mut rank = vec![u32::MAX; n];
    for (pos, &x) in precedence.iter().enumerate() {
        let slot = rank.get_mut(x as usize).ok_or(Error::IndexOutOfRange { index: x as usize, count: n })?;
        if *slot != u32::MAX {
            return Err(Error::InvalidParameter(format!("variable {} repeated in precedence", x + 1)));
        }
        *slot = pos as u32;
    }
    Ok(rank)
}

impl MonomialOrder {
    /// Weighted graded lexicographic order; `precedence` lists the variables
    /// from smallest to largest.
    pub fn grlex(precedence: Vec<u32>, weights: WeightVector) -> Result<Self> {
        let rank = ranks_of(&precedence, weights.len())?;
        Ok(MonomialOrder {
            kind: OrderKind::Grlex,
            precedence,
            rank,
            weights,
            commutative: Vec::new(),
        })
    }

    /// Graded lex with unit weights and `X1 < X2 < ... < Xn`.
    pub fn grlex_natural(n: usize) -> Self {
        Self::grlex((0..n as u32).collect(), WeightVector::uniform(n)).expect("identity permutation")
    }

    /// Lexicographic extension: `commutative` orders the abelianized
    /// variables, `tie` breaks ties between words with equal abelianization.
    /// Both list variables from smallest to largest.
    pub fn etlex(commutative: Vec<u32>, tie: Vec<u32>) -> Result<Self> {
        let n = tie.len();
        let rank = ranks_of(&tie, n)?;
        ranks_of(&commutative, n)?;
        Ok(MonomialOrder {
            kind: OrderKind::Etlex,
            precedence: tie,
            rank,
            weights: WeightVector::uniform(n),
            commutative,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn is_graded(&self) -> bool {
        self.kind == OrderKind::Grlex
    }

    pub fn nvars(&self) -> usize {
        self.rank.len()
    }

    /// Variables in ascending precedence.
    pub fn precedence(&self) -> &[u32] {
        &self.precedence
    }

    pub fn rank(&self, x: u32) -> u32 {
        self.rank[x as usize]
    }

    /// Grading weights; unit weights for etlex, which is not graded.
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn commutative_precedence(&self) -> &[u32] {
        &self.commutative
    }

    fn lex_tie(&self, a: &Word, b: &Word) -> Ordering {
        for (x, y) in a.letters().iter().zip(b.letters()) {
            if x != y {
                return self.rank[*x as usize].cmp(&self.rank[*y as usize]);
            }
        }
        a.len().cmp(&b.len())
    }

    fn weighted_degree(&self, w: &Word) -> u64 {
        let wt = self.weights.as_slice();
        w.letters().iter().map(|&x| wt[x as usize]).sum()
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        match self.kind {
            OrderKind::Grlex => self
                .weighted_degree(a)
                .cmp(&self.weighted_degree(b))
                .then_with(|| self.lex_tie(a, b)),
            OrderKind::Etlex => {
                let n = self.nvars();
                let ea = abelianize(a, n);
                let eb = abelianize(b, n);
                self.commutative
                    .iter()
                    .rev()
                    .map(|&x| ea[x as usize].cmp(&eb[x as usize]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
                    .then_with(|| self.lex_tie(a, b))
            }
        }
    }

    /// A key whose lexicographic order coincides with this monomial order.
    pub fn key(&self, w: &Word) -> OrderKey {
        let mut key = Vec::with_capacity(w.len() + self.nvars() + 1);
        match self.kind {
            OrderKind::Grlex => key.push(self.weighted_degree(w)),
            OrderKind::Etlex => {
                let e = abelianize(w, self.nvars());
                key.extend(self.commutative.iter().rev().map(|&x| e[x as usize] as u64));
            }
        }
        key.extend(w.letters().iter().map(|&x| self.rank[x as usize] as u64));
        OrderKey(key)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> OrderDisplay<'a> {
        OrderDisplay { order: self, names }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey(Vec<u64>);

/// Exponent vector of `w` under `X_i -> t_i`.
pub fn abelianize(w: &Word, n: usize) -> Vec<usize> {
    let mut e = vec![0; n];
    for &x in w.letters() {
        e[x as usize] += 1;
    }
    e
}

pub struct OrderDisplay<'a> {
    order: &'a MonomialOrder,
    names: &'a [String],
}

impl OrderDisplay<'_> {
    fn chain(&self, f: &mut fmt::Formatter<'_>, vars: &[u32]) -> fmt::Result {
        for (k, &x) in vars.iter().enumerate() {
            if k > 0 {
                write!(f, " < ")?;
            }
            match self.names.get(x as usize) {
                Some(n) => write!(f, "{n}")?,
                None => write!(f, "X{}", x + 1)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for OrderDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order.kind {
            OrderKind::Grlex => {
                write!(f, "grlex ")?;
                self.chain(f, &self.order.precedence)
            }
            OrderKind::Etlex => {
                write!(f, "etlex [")?;
                self.chain(f, &self.order.commutative)?;
                write!(f, "] [")?;
                self.chain(f, &self.order.precedence)?;
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[u32]) -> Word {
        Word::from(v)
    }

    #[test]
    fn grlex_examples() {
        let ord = MonomialOrder::grlex_natural(2);
        assert_eq!(ord.compare(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
        let n = 3;
        let ord = MonomialOrder::grlex(vec![1, 0, 2], WeightVector::new(vec![1, n, n]).unwrap()).unwrap();
        assert_eq!(ord.compare(&Word::power(0, 3), &w(&[2, 1])), Ordering::Less);
    }

    #[test]
    fn etlex_examples() {
        let ord = MonomialOrder::etlex(vec![2, 1, 0], vec![0, 1, 2]).unwrap();
        assert_eq!(ord.compare(&Word::power(1, 5), &w(&[2, 0])), Ordering::Less);
        // equal abelianization falls back to the letter order
        assert_eq!(ord.compare(&w(&[1, 0]), &w(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(abelianize(&w(&[0, 1, 0]), 2), vec![2, 1]);
        assert_eq!(abelianize(&Word::one(), 3), vec![0, 0, 0]);
        assert_eq!(abelianize(&w(&[2, 0]), 3), vec![1, 0, 1]);
    }

    #[test]
    fn rejects_bad_precedence() {
        assert!(MonomialOrder::grlex(vec![0, 0], WeightVector::uniform(2)).is_err());
        assert!(MonomialOrder::grlex(vec![0], WeightVector::uniform(2)).is_err());
        assert!(MonomialOrder::etlex(vec![0, 1], vec![0, 1, 2]).is_err());
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::grlex_natural(3),
            MonomialOrder::grlex(vec![1, 0, 2], WeightVector::new(vec![1, 3, 3]).unwrap()).unwrap(),
            MonomialOrder::etlex(vec![2, 1, 0], vec![0, 1, 2]).unwrap(),
            MonomialOrder::etlex(vec![0, 2, 1], vec![2, 0, 1]).unwrap(),
        ]
    }

    fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u32..3, 0..=max_len).prop_map(Word::from)
    }

    proptest! {
        #[test]
        fn total_antisymmetric_transitive(a in word_strategy(8), b in word_strategy(8), c in word_strategy(8)) {
            for ord in orders() {
                let ab = ord.compare(&a, &b);
                prop_assert_eq!(ab, ord.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab != Ordering::Greater && ord.compare(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(ord.compare(&a, &c), Ordering::Greater);
                }
                prop_assert_eq!(ab, ord.key(&a).cmp(&ord.key(&b)));
                prop_assert_ne!(ord.compare(&Word::one(), &a), Ordering::Greater);
            }
        }

        #[test]
        fn multiplicative(u in word_strategy(6), v in word_strategy(6), l in word_strategy(4), r in word_strategy(4)) {
            for ord in orders() {
                let o = ord.compare(&u, &v);
                prop_assert_eq!(ord.compare(&u.sandwich(&l, &r), &v.sandwich(&l, &r)), o);
            }
        }
    }
}
