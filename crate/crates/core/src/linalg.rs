//! Sparse exact linear algebra over Q.
//!
//! Vectors are `BTreeMap<K, Rational>` with no stored zeros. Pivots are
//! always the smallest key of a vector, so results depend only on key order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// `x -= c * y`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(x: &mut SparseVec<K>, c: &Rational, y: &SparseVec<K>) {
    for (k, v) in y {
        let delta = c * v;
        match x.get_mut(k) {
            Some(slot) => {
                *slot -= delta;
                if slot.is_zero() {
                    x.remove(k);
                }
            }
            None => {
                x.insert(k.clone(), -delta);
            }
        }
    }
}

fn normalize<K: Ord + Clone>(x: &mut SparseVec<K>) -> Rational {
    let lead = x.values().next().expect("nonzero vector").clone();
    if !lead.is_one() {
        let inv = lead.recip();
        for v in x.values_mut() {
            *v *= &inv;
        }
    }
    lead
}

/// Row-echelon basis of a growing subspace.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    /// pivot key -> row whose smallest key is the pivot, with leading entry 1
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `x` until its smallest key is not a pivot.
    pub fn reduce(&self, mut x: SparseVec<K>) -> SparseVec<K> {
        while let Some((k, c)) = x.iter().next() {
            let Some(row) = self.rows.get(k) else { break };
            let c = c.clone();
            axpy(&mut x, &c, row);
        }
        x
    }

    pub fn contains(&self, x: &SparseVec<K>) -> bool {
        self.reduce(x.clone()).is_empty()
    }

    /// Adds `x` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, x: SparseVec<K>) -> bool {
        let mut r = self.reduce(x);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        let key = r.keys().next().expect("nonzero").clone();
        self.rows.insert(key, r);
        true
    }

    /// Reduced row-echelon basis: each row has leading 1 at its pivot and
    /// zeros at every other pivot. Rows are sorted by pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K>> {
        let pivots: Vec<K> = self.rows.keys().cloned().collect();
        let mut out: Vec<SparseVec<K>> = Vec::with_capacity(pivots.len());
        // back-substitute from the last pivot
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        for p in pivots.iter().rev() {
            let mut row = self.rows[p].clone();
            loop {
                let hit = row.keys().find(|k| *k != p && done.contains_key(*k)).cloned();
                let Some(k) = hit else { break };
                let c = row[&k].clone();
                axpy(&mut row, &c, &done[&k]);
            }
            done.insert(p.clone(), row);
        }
        for p in pivots {
            out.push(done.remove(&p).expect("pivot row"));
        }
        out
    }
}

/// Basis of `{ x : Σ_j x_j columns[j] = 0 }` in reduced row-echelon form over
/// column positions.
///
/// The matrix is transposed into sparse rows and row-reduced; the kernel is
/// read off the free columns of the reduced form.
pub fn kernel<K: Ord + Clone>(columns: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut rows: BTreeMap<K, SparseVec<usize>> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (k, c) in col {
            rows.entry(k.clone()).or_default().insert(j, c.clone());
        }
    }
    let mut ech = Echelon::<usize>::new();
    // sparsest rows first keeps fill-in down
    let mut rows: Vec<SparseVec<usize>> = rows.into_values().collect();
    rows.sort_by_key(|r| r.len());
    for r in rows {
        ech.insert(r);
    }
    let reduced = ech.reduced_basis();
    let pivots: BTreeMap<usize, &SparseVec<usize>> =
        reduced.iter().map(|r| (*r.keys().next().expect("nonzero"), r)).collect();
    let mut null = Echelon::<usize>::new();
    for f in (0..columns.len()).filter(|j| !pivots.contains_key(j)) {
        let mut x = SparseVec::new();
        x.insert(f, Rational::one());
        for (p, row) in &pivots {
            if let Some(c) = row.get(&f) {
                x.insert(*p, -c.clone());
            }
        }
        null.insert(x);
    }
    null.reduced_basis()
}
