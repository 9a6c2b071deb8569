//! Sparse reduced row-echelon forms over the rationals.
//!
//! Columns are plain indices; a row's pivot is its smallest column index.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::polyring::Rational;

/// Sparse row, sorted by column, no zero entries.
pub type SparseRow = Vec<(usize, Rational)>;

/// Incrementally maintained reduced row-echelon basis of a subspace.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    /// pivot column -> monic, fully reduced row
    rows: BTreeMap<usize, SparseRow>,
}

fn axpy(target: &SparseRow, scale: &Rational, source: &SparseRow) -> SparseRow {
    // target - scale * source
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let take_t = j >= source.len() || (i < target.len() && target[i].0 < source[j].0);
        let take_s = i >= target.len() || (j < source.len() && source[j].0 < target[i].0);
        if take_t {
            out.push(target[i].clone());
            i += 1;
        } else if take_s {
            out.push((source[j].0, -(scale * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - scale * &source[j].1;
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.rows.values()
    }

    /// Reduces `row` against every stored pivot.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut cur = row.clone();
        let mut k = 0;
        while k < cur.len() {
            let col = cur[k].0;
            if let Some(p) = self.rows.get(&col) {
                let c = cur[k].1.clone();
                cur = axpy(&cur, &c, p);
            } else {
                k += 1;
            }
        }
        cur
    }

    /// Adds `row` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce(&row);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for e in r.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        let pivot = r[0].0;
        for existing in self.rows.values_mut() {
            if let Ok(pos) = existing.binary_search_by_key(&pivot, |e| e.0) {
                let c = existing[pos].1.clone();
                *existing = axpy(existing, &c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}
