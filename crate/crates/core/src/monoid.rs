//! Words of the free monoid on the declared variables.

use std::fmt;

use crate::error::{Error, Result};

/// A word in the variables, as 0-based variable indices. The empty word is
/// the identity monomial `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letter(index: u32) -> Self {
        Word(vec![index])
    }

    pub fn power(index: u32, exponent: usize) -> Self {
        Word(vec![index; exponent])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left * self * right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.0.len() + self.0.len() + right.0.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Start position of the leftmost occurrence of `pattern` in `self`.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() {
            return Some(0);
        }
        if pattern.len() > self.len() {
            return None;
        }
        self.0.windows(pattern.len()).position(|w| w == pattern.0.as_slice())
    }

    /// Whether `pattern` is a subword (`pattern | self`).
    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern).is_some()
    }

    pub fn degree(&self, weights: &WeightVector) -> Result<u64> {
        self.0.iter().try_fold(0u64, |acc, &x| {
            weights
                .get(x as usize)
                .map(|w| acc + w)
                .ok_or(Error::IndexOutOfRange {
                    index: x as usize,
                    count: weights.len(),
                })
        })
    }

    pub fn max_index(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Text form `X1^2*X2`, with `1` for the empty word.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl From<&[u32]> for Word {
    fn from(v: &[u32]) -> Self {
        Word(v.to_vec())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.0;
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let x = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == x {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match self.names.get(x as usize) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "X{}", x + 1)?,
            }
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Positive integer degree per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidParameter(format!("weight of variable {} must be positive", i + 1)));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.0.get(i).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn is_uniform(&self) -> bool {
        self.0.iter().all(|&w| w == 1)
    }
}

pub fn concat(a: &Word, b: &Word) -> Word {
    a.concat(b)
}

pub fn degree(w: &Word, weights: &WeightVector) -> Result<u64> {
    w.degree(weights)
}

/// All splits `w = left * pattern * right`, by increasing `left` length.
pub fn subword_occurrences(pattern: &Word, w: &Word) -> Result<Vec<(Word, Word)>> {
    if pattern.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = pattern.len();
    if p > w.len() {
        return Ok(Vec::new());
    }
    Ok((0..=w.len() - p)
        .filter(|&s| w.0[s..s + p] == pattern.0[..])
        .map(|s| (w.slice(0, s), w.slice(s + p, w.len())))
        .collect())
}

/// All `(u, v)` with `p*u = v*q`, `len(u) < len(q)` and `len(v) < len(p)`,
/// by increasing `len(v)`.
///
/// The length bounds are equivalent to `p` not dividing `v` and `q` not
/// dividing `u`: a flank at least as long as the opposite word would contain
/// it, since `p` is a prefix of `v*q` and `q` a suffix of `p*u`.
pub fn word_overlaps(p: &Word, q: &Word) -> Result<Vec<(Word, Word)>> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut out = Vec::new();
    for split in 0..p.len() {
        let suffix = &p.0[split..];
        if suffix.len() <= q.len() && q.0[..suffix.len()] == *suffix {
            let u = q.slice(suffix.len(), q.len());
            let v = p.slice(0, split);
            out.push((u, v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[u32]) -> Word {
        Word::from(v)
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&w(&[0, 1]), &w(&[0])), w(&[0, 1, 0]));
        assert_eq!(concat(&Word::one(), &w(&[1, 2])), w(&[1, 2]));
        assert_eq!(concat(&w(&[2]), &w(&[2])), Word::power(2, 2));
    }

    #[test]
    fn degree_examples() {
        let wt = WeightVector::new(vec![1, 3]).unwrap();
        assert_eq!(degree(&w(&[1, 0]), &wt).unwrap(), 4);
        assert_eq!(degree(&Word::one(), &wt).unwrap(), 0);
        assert_eq!(degree(&Word::power(0, 3), &WeightVector::new(vec![2]).unwrap()).unwrap(), 6);
        assert!(matches!(degree(&w(&[2]), &wt), Err(Error::IndexOutOfRange { .. })));
        assert!(WeightVector::new(vec![1, 0]).is_err());
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(
            subword_occurrences(&w(&[0, 0]), &w(&[0, 0, 0])).unwrap(),
            vec![(Word::one(), w(&[0])), (w(&[0]), Word::one())]
        );
        assert!(subword_occurrences(&w(&[1, 0]), &w(&[0, 1])).unwrap().is_empty());
        assert_eq!(
            subword_occurrences(&w(&[0]), &w(&[1, 0, 1, 0])).unwrap(),
            vec![(w(&[1]), w(&[1, 0])), (w(&[1, 0, 1]), Word::one())]
        );
        assert_eq!(subword_occurrences(&Word::one(), &w(&[0])), Err(Error::EmptyWord));
    }

    #[test]
    fn overlap_examples() {
        let x2x1 = w(&[1, 0]);
        assert_eq!(word_overlaps(&x2x1, &x2x1).unwrap(), vec![(Word::one(), Word::one())]);
        let aba = w(&[0, 1, 0]);
        assert_eq!(
            word_overlaps(&aba, &aba).unwrap(),
            vec![(Word::one(), Word::one()), (w(&[1, 0]), w(&[0, 1]))]
        );
        assert_eq!(word_overlaps(&w(&[2, 1]), &w(&[1, 0])).unwrap(), vec![(w(&[0]), w(&[2]))]);
        assert_eq!(word_overlaps(&Word::one(), &aba), Err(Error::EmptyWord));
    }

    #[test]
    fn display_uses_powers() {
        let names: Vec<String> = vec!["X1".into(), "X2".into()];
        assert_eq!(w(&[0, 0, 1]).display(&names).to_string(), "X1^2*X2");
        assert_eq!(Word::one().display(&names).to_string(), "1");
    }

    fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u32..3, 0..=max_len).prop_map(Word::from)
    }

    fn brute_occurrences(pattern: &Word, word: &Word) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        for a in 0..=word.len() {
            for b in a..=word.len() {
                if word.slice(a, b) == *pattern {
                    out.push((word.slice(0, a), word.slice(b, word.len())));
                }
            }
        }
        out
    }

    fn brute_overlaps(p: &Word, q: &Word) -> Vec<(Word, Word)> {
        // Every (u, v) with p*u = v*q and the flank bounds, found by trying
        // all flank lengths.
        let mut out = Vec::new();
        for lv in 0..p.len() {
            for lu in 0..q.len() {
                if p.len() + lu != lv + q.len() {
                    continue;
                }
                let u = q.slice(q.len() - lu, q.len());
                let v = p.slice(0, lv);
                if p.concat(&u) == v.concat(q) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn concat_is_associative(a in word_strategy(6), b in word_strategy(6), c in word_strategy(6)) {
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            prop_assert_eq!(a.concat(&Word::one()), a.clone());
            prop_assert_eq!(Word::one().concat(&a), a);
        }

        #[test]
        fn occurrences_match_brute_force(p in word_strategy(3), w in word_strategy(12)) {
            prop_assume!(!p.is_empty());
            let occ = subword_occurrences(&p, &w).unwrap();
            for (l, r) in &occ {
                prop_assert_eq!(&p.sandwich(l, r), &w);
            }
            prop_assert_eq!(occ, brute_occurrences(&p, &w));
        }

        #[test]
        fn overlaps_match_brute_force(p in word_strategy(10), q in word_strategy(10)) {
            prop_assume!(!p.is_empty() && !q.is_empty());
            let ov = word_overlaps(&p, &q).unwrap();
            prop_assert!(ov.len() <= p.len().min(q.len()));
            for (u, v) in &ov {
                prop_assert_eq!(p.concat(u), v.concat(&q));
                prop_assert!(u.len() < q.len() && v.len() < p.len());
                prop_assert!(!v.contains(&p) && !u.contains(&q));
            }
            prop_assert_eq!(ov, brute_overlaps(&p, &q));
        }
    }
}
