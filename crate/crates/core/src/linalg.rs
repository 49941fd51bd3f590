//! Incremental row reduction over `Q` or `Z/p`.

use crate::coeff::{CoefficientRing, RingElement};
use crate::error::{Error, Result};

/// Rows in echelon form, each normalised to pivot 1 and reduced against the
/// rows inserted before it.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    ring: CoefficientRing,
    width: usize,
    rows: Vec<(usize, Vec<RingElement>)>,
}

impl RowEchelon {
    pub fn new(ring: &CoefficientRing, width: usize) -> Result<Self> {
        if !ring.is_field() {
            return Err(Error::NotField(ring.to_string()));
        }
        Ok(RowEchelon {
            ring: ring.clone(),
            width,
            rows: Vec::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn zero_vector(&self) -> Vec<RingElement> {
        vec![self.ring.zero(); self.width]
    }

    /// `v` minus its projection onto the current row space.
    pub fn reduce(&self, mut v: Vec<RingElement>) -> Vec<RingElement> {
        assert_eq!(v.len(), self.width, "vector width");
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row).skip(*pivot) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<RingElement>) -> bool {
        self.reduce(v).iter().all(RingElement::is_zero)
    }

    /// Adds `v`; returns whether it was independent of the existing rows.
    pub fn insert(&mut self, v: Vec<RingElement>) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].invert_unit().expect("nonzero field element");
        let row = v.iter().map(|x| x * &inv).collect();
        self.rows.push((pivot, row));
        true
    }
}
