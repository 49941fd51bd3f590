//! Gröbner basis verification for monic relation sets: LM-interreduction,
//! overlap elements, the overlap criterion, membership, monicization,
//! best-effort completion and base change.

use rayon::prelude::*;

use crate::coeff::{CoefficientRing, RingElement};
use crate::error::{Error, Result};
use crate::monoid::{word_overlaps, Word};
use crate::poly::NcPoly;
use crate::presentation::Presentation;
use crate::reduce::{divide_unchecked, validate_relations, ReductionResult};

/// `LM(g_i) * u = v * LM(g_j)` with proper flanks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub i: usize,
    pub j: usize,
    pub u: Word,
    pub v: Word,
}

impl Overlap {
    pub fn is_trivial(&self) -> bool {
        self.i == self.j && self.u.is_one() && self.v.is_one()
    }

    /// `g_i * u - v * g_j`.
    pub fn element(&self, relations: &[NcPoly]) -> Result<NcPoly> {
        let gi = relations.get(self.i).ok_or(Error::IndexOutOfRange {
            index: self.i,
            count: relations.len(),
        })?;
        let gj = relations.get(self.j).ok_or(Error::IndexOutOfRange {
            index: self.j,
            count: relations.len(),
        })?;
        gi.mul_word_right(&self.u).sub(&gj.mul_word_left(&self.v))
    }

    /// `(i,j,u,v)` with words rendered over `names`.
    pub fn label(&self, names: &[String]) -> String {
        format!(
            "({},{},{},{})",
            self.i,
            self.j,
            self.u.display(names),
            self.v.display(names)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapRecord {
    pub overlap: Overlap,
    pub element: NcPoly,
    pub reduction: ReductionResult,
}

impl OverlapRecord {
    pub fn reduced_to_zero(&self) -> bool {
        self.reduction.remainder.is_zero()
    }
}

/// A relation dropped by LM-interreduction, with its reduction modulo the
/// surviving relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovedRelation {
    pub index: usize,
    pub divisor: usize,
    pub reduction: ReductionResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbReport {
    pub verdict: bool,
    /// Indices of the relations kept after LM-interreduction.
    pub kept: Vec<usize>,
    pub removed: Vec<RemovedRelation>,
    pub overlaps: Vec<OverlapRecord>,
}

impl GbReport {
    pub fn nontrivial_count(&self) -> usize {
        self.overlaps.iter().filter(|r| !r.overlap.is_trivial()).count()
    }

    pub fn failing_overlaps(&self) -> impl Iterator<Item = &OverlapRecord> {
        self.overlaps.iter().filter(|r| !r.reduced_to_zero())
    }

    pub fn failing_removed(&self) -> impl Iterator<Item = &RemovedRelation> {
        self.removed.iter().filter(|r| !r.reduction.remainder.is_zero())
    }

    /// Every nonzero remainder, removed relations first.
    pub fn witnesses(&self) -> Vec<&NcPoly> {
        self.failing_removed()
            .map(|r| &r.reduction.remainder)
            .chain(self.failing_overlaps().map(|r| &r.reduction.remainder))
            .collect()
    }
}

fn validate_set(relations: &[NcPoly]) -> Result<()> {
    match relations.first() {
        Some(first) => validate_relations(relations, first),
        None => Ok(()),
    }
}

/// `(kept, removed)` where each removed index is paired with a kept index
/// whose leading monomial divides its own. Ties keep the earlier relation.
fn interreduce_indices(relations: &[NcPoly]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let lms: Vec<&Word> = relations.iter().map(|g| &g.terms()[0].word).collect();
    let dominated = |i: usize, j: usize| -> bool {
        i != j && lms[i].contains(lms[j]) && (lms[i] != lms[j] || j < i)
    };
    let kept: Vec<usize> = (0..lms.len())
        .filter(|&i| !(0..lms.len()).any(|j| dominated(i, j)))
        .collect();
    let removed = (0..lms.len())
        .filter(|i| !kept.contains(i))
        .map(|i| {
            let d = *kept.iter().find(|&&j| lms[i].contains(lms[j])).expect("a minimal divisor survives");
            (i, d)
        })
        .collect();
    (kept, removed)
}

pub fn is_lm_reduced(relations: &[NcPoly]) -> Result<bool> {
    validate_set(relations)?;
    Ok(interreduce_indices(relations).1.is_empty())
}

/// Drops every relation whose leading monomial is divisible by that of
/// another surviving relation.
pub fn interreduce_lm(relations: &[NcPoly]) -> Result<Vec<NcPoly>> {
    validate_set(relations)?;
    let (kept, _) = interreduce_indices(relations);
    Ok(kept.into_iter().map(|i| relations[i].clone()).collect())
}

/// All overlaps among `relations`, by `(i, j, len(v))`.
pub fn enumerate_overlaps(relations: &[NcPoly]) -> Result<Vec<Overlap>> {
    validate_set(relations)?;
    Ok(overlaps_of(relations, &(0..relations.len()).collect::<Vec<_>>()))
}

fn overlaps_of(relations: &[NcPoly], indices: &[usize]) -> Vec<Overlap> {
    let mut out = Vec::new();
    for &i in indices {
        for &j in indices {
            let p = &relations[i].terms()[0].word;
            let q = &relations[j].terms()[0].word;
            for (u, v) in word_overlaps(p, q).expect("nonempty leading monomials") {
                out.push(Overlap { i, j, u, v });
            }
        }
    }
    out
}

fn remap(mut r: ReductionResult, kept: &[usize]) -> ReductionResult {
    for step in &mut r.trace {
        step.relation = kept[step.relation];
    }
    r
}

/// Overlap criterion. A relation set that is not LM-reduced is interreduced
/// first; the dropped relations must then also reduce to zero modulo the
/// survivors for the verdict to hold.
pub fn check_gb(relations: &[NcPoly]) -> Result<GbReport> {
    validate_set(relations)?;
    let (kept, removed_pairs) = interreduce_indices(relations);
    let basis: Vec<NcPoly> = kept.iter().map(|&i| relations[i].clone()).collect();

    let overlaps = overlaps_of(relations, &kept);
    let records: Vec<OverlapRecord> = overlaps
        .into_par_iter()
        .map(|overlap| {
            let element = overlap.element(relations).expect("compatible relations");
            let reduction = remap(divide_unchecked(&element, &basis), &kept);
            OverlapRecord {
                overlap,
                element,
                reduction,
            }
        })
        .collect();

    let removed: Vec<RemovedRelation> = removed_pairs
        .into_par_iter()
        .map(|(index, divisor)| RemovedRelation {
            index,
            divisor,
            reduction: remap(divide_unchecked(&relations[index], &basis), &kept),
        })
        .collect();

    let verdict = records.iter().all(OverlapRecord::reduced_to_zero)
        && removed.iter().all(|r| r.reduction.remainder.is_zero());
    Ok(GbReport {
        verdict,
        kept,
        removed,
        overlaps: records,
    })
}

/// A relation set that passed [`check_gb`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedBasis {
    relations: Vec<NcPoly>,
}

impl CertifiedBasis {
    pub fn certify(relations: &[NcPoly]) -> Result<Self> {
        if check_gb(relations)?.verdict {
            Ok(CertifiedBasis {
                relations: relations.to_vec(),
            })
        } else {
            Err(Error::Uncertified)
        }
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }
}

/// Whether `f` lies in the ideal, with the division trace as witness.
pub fn membership(f: &NcPoly, basis: &CertifiedBasis) -> Result<(bool, ReductionResult)> {
    if let Some(g) = basis.relations.first() {
        f.check_compatible(g)?;
    }
    let r = divide_unchecked(f, &basis.relations);
    Ok((r.remainder.is_zero(), r))
}

/// Scales every relation by the inverse of its leading coefficient.
pub fn monicize(relations: &[NcPoly]) -> Result<Vec<NcPoly>> {
    relations
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let lc = g.lc().map_err(|_| Error::ZeroRelation { index })?;
            let inv = lc.invert_unit().map_err(|_| Error::NonUnitLeading {
                index,
                lc: lc.to_string(),
            })?;
            g.scale(&inv)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionLimits {
    /// Rounds that adjoin new relations.
    pub max_rounds: usize,
    /// Largest weighted degree of an adjoined leading monomial.
    pub max_degree: Option<u64>,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_rounds: 10,
            max_degree: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionStatus {
    Completed,
    /// A remainder whose leading coefficient is not a unit.
    AbortedNonUnit { remainder: NcPoly },
    AbortedLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub status: CompletionStatus,
    pub relations: Vec<NcPoly>,
    pub rounds: usize,
    /// Report for `relations` as of the last check.
    pub report: GbReport,
}

/// Adjoins monicized remainders of failing overlaps until the overlap
/// criterion holds. Stops at a remainder with a non-unit leading
/// coefficient, or at the limits.
pub fn try_complete(relations: &[NcPoly], limits: CompletionLimits) -> Result<Completion> {
    validate_set(relations)?;
    let mut basis = relations.to_vec();
    let mut rounds = 0;
    loop {
        let report = check_gb(&basis)?;
        let survivors: Vec<NcPoly> = report.kept.iter().map(|&i| basis[i].clone()).collect();
        if report.verdict {
            return Ok(Completion {
                status: CompletionStatus::Completed,
                relations: survivors,
                rounds,
                report,
            });
        }
        let mut next = survivors.clone();
        let mut added = Vec::new();
        for w in report.witnesses() {
            let r = divide_unchecked(w, &next).remainder;
            if r.is_zero() {
                continue;
            }
            let lc = r.lc()?;
            let Ok(inv) = lc.invert_unit() else {
                return Ok(Completion {
                    status: CompletionStatus::AbortedNonUnit { remainder: r },
                    relations: survivors,
                    rounds,
                    report,
                });
            };
            let g = r.scale(&inv)?;
            next.push(g.clone());
            added.push(g);
        }
        let too_deep = limits.max_degree.is_some_and(|d| {
            added
                .iter()
                .any(|g| g.lm().ok().and_then(|w| w.degree(g.order().weights()).ok()).unwrap_or(0) > d)
        });
        if rounds >= limits.max_rounds || too_deep {
            return Ok(Completion {
                status: CompletionStatus::AbortedLimit,
                relations: survivors,
                rounds,
                report,
            });
        }
        rounds += 1;
        basis = next;
    }
}

/// Whether the canonical map `from -> to` is the inclusion of a subring
/// with the same identity.
pub fn is_subring_inclusion(from: &CoefficientRing, to: &CoefficientRing) -> bool {
    from == to
        || matches!(
            (from, to),
            (CoefficientRing::Integers, CoefficientRing::Rationals)
                | (CoefficientRing::Integers, CoefficientRing::LaurentIntPoly(_))
        )
}

/// Maps every coefficient of `p` into `target`; Laurent sources need the
/// image `q_value` of the symbol. Mapped relations must keep their leading
/// monomial and stay monic.
pub fn base_change(p: &Presentation, target: &CoefficientRing, q_value: Option<&RingElement>) -> Result<Presentation> {
    let mut mapped = Vec::with_capacity(p.relations().len());
    for (index, g) in p.relations().iter().enumerate() {
        let h = g.map_coefficients(target, |c| target.map_element(c, q_value))?;
        let lm_kept = h.lm().ok() == g.lm().ok();
        if !lm_kept {
            return Err(Error::LmNotPreserved { index });
        }
        if g.is_monic() && !h.is_monic() {
            return Err(Error::NonMonic {
                index,
                lc: h.lc()?.to_string(),
            });
        }
        mapped.push(h);
    }
    Presentation::new(target.clone(), p.names().to_vec(), p.order().clone(), mapped)
}
