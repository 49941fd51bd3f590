//! Leading-homogeneous presentations: replace each relation by its top
//! weighted-degree part (`N` mode) or by its leading term (`B` mode), and
//! compare the result with the original.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gbcheck::{check_gb, GbReport};
use crate::monoid::Word;
use crate::pbw::{normal_words, Bound};
use crate::poly::NcPoly;
use crate::presentation::Presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LhMode {
    /// Top weighted-degree component of each relation.
    N,
    /// Leading term of each relation.
    B,
}

impl FromStr for LhMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n" | "N" => Ok(LhMode::N),
            "b" | "B" => Ok(LhMode::B),
            other => Err(Error::InvalidParameter(format!("unknown mode {other}, expected n or b"))),
        }
    }
}

impl fmt::Display for LhMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LhMode::N => "n",
            LhMode::B => "b",
        })
    }
}

pub fn lh_presentation(p: &Presentation, mode: LhMode) -> Result<Presentation> {
    let relations = match mode {
        LhMode::N => {
            if !p.order().is_graded() {
                return Err(Error::NotGraded);
            }
            p.relations()
                .iter()
                .map(|g| g.lh_n(p.weights()))
                .collect::<Result<Vec<_>>>()?
        }
        LhMode::B => p
            .relations()
            .iter()
            .map(|g| {
                let t = g.lh_b()?;
                NcPoly::monomial(t.coeff, t.word, p.order())
            })
            .collect::<Result<Vec<_>>>()?,
    };
    p.with_relations(relations)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    /// Both verdicts agree.
    Equal,
    /// The original passes while its leading-homogeneous set fails.
    Violated,
    /// The original fails but the leading-homogeneous set passes. The two
    /// sets then generate different leading ideals, so no equality is
    /// asserted.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LhTransferReport {
    pub original: GbReport,
    pub leading: GbReport,
    pub consistency: Consistency,
}

/// Runs the overlap criterion on `p` and on its `N`-mode presentation.
pub fn check_lh_transfer(p: &Presentation) -> Result<LhTransferReport> {
    let lh = lh_presentation(p, LhMode::N)?;
    let original = check_gb(p.relations())?;
    let leading = check_gb(lh.relations())?;
    let consistency = match (original.verdict, leading.verdict) {
        (true, false) => Consistency::Violated,
        (false, true) => Consistency::NotApplicable,
        _ => Consistency::Equal,
    };
    Ok(LhTransferReport {
        original,
        leading,
        consistency,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LhNormalWordsReport {
    pub degree: u64,
    pub original: Vec<Word>,
    pub leading_homogeneous: Vec<Word>,
    pub leading_monomials: Vec<Word>,
    /// Relations whose top-degree part has a different leading monomial.
    pub lm_changed: Vec<usize>,
}

impl LhNormalWordsReport {
    pub fn pass(&self) -> bool {
        self.lm_changed.is_empty()
            && self.original == self.leading_homogeneous
            && self.original == self.leading_monomials
    }
}

fn patterns(p: &Presentation) -> Result<Vec<Word>> {
    p.relations().iter().map(|g| g.lm().cloned()).collect()
}

/// Compares the normal words of a certified presentation with those of its
/// two leading-homogeneous presentations, up to degree `d`.
pub fn check_lh_normal_words(p: &Presentation, d: u64) -> Result<LhNormalWordsReport> {
    if !p.order().is_graded() {
        return Err(Error::NotGraded);
    }
    if !check_gb(p.relations())?.verdict {
        return Err(Error::Uncertified);
    }
    let n = lh_presentation(p, LhMode::N)?;
    let b = lh_presentation(p, LhMode::B)?;
    let bound = Bound::MaxDegree(d);
    let lm_changed = p
        .relations()
        .iter()
        .zip(n.relations())
        .enumerate()
        .filter(|(_, (g, h))| g.lm().ok() != h.lm().ok())
        .map(|(i, _)| i)
        .collect();
    Ok(LhNormalWordsReport {
        degree: d,
        original: normal_words(&patterns(p)?, p.order(), bound)?,
        leading_homogeneous: normal_words(&patterns(&n)?, n.order(), bound)?,
        leading_monomials: normal_words(&patterns(&b)?, b.order(), bound)?,
        lm_changed,
    })
}
