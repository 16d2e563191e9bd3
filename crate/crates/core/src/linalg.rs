//! Exact Gaussian elimination over the scalar field.

use crate::scalar::{Field, Scalar};

/// Row-reduced echelon form of a dense matrix, built incrementally from
/// column vectors.
#[derive(Clone, Debug)]
pub struct ColumnSpan {
    field: Field,
    len: usize,
    /// Reduced basis vectors, each with a pivot coordinate equal to one; the
    /// pivot coordinate is zero in every other stored vector.
    rows: Vec<(usize, Vec<Scalar>)>,
    /// For each stored vector, its expression in the inserted vectors.
    combos: Vec<Vec<Scalar>>,
    inserted: usize,
}

impl ColumnSpan {
    pub fn new(field: Field, len: usize) -> Self {
        Self {
            field,
            len,
            rows: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored basis, returning the remainder and the
    /// coefficients `c` with `v = remainder + Σ c_k stored_k`.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.len);
        let mut rem = v.to_vec();
        let mut coeffs = vec![self.field.zero(); self.rows.len()];
        for (k, (pivot, row)) in self.rows.iter().enumerate() {
            let c = rem[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in rem.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= &(&c * x);
                }
            }
            coeffs[k] = c;
        }
        (rem, coeffs)
    }

    /// Adds `v`; returns `true` iff it was independent of the earlier ones.
    /// Dependent vectors are not recorded and do not count as inserted.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let (rem, coeffs) = self.reduce(v);
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rem[pivot].inverse().expect("nonzero pivot");
        let row: Vec<Scalar> = rem.iter().map(|x| x * &inv).collect();
        // combo of the new row: (v − Σ c_k stored_k) / pivot
        let width = self.inserted + 1;
        let mut combo = vec![self.field.zero(); width];
        combo[self.inserted] = inv.clone();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in combo.iter_mut().zip(&self.combos[k]) {
                *slot -= &(&(c * x) * &inv);
            }
        }
        for (other_row, other_combo) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            let c = other_row.1[pivot].clone();
            if c.is_zero() {
                other_combo.resize(width, self.field.zero());
                continue;
            }
            for (x, y) in other_row.1.iter_mut().zip(&row) {
                *x -= &(&c * y);
            }
            other_combo.resize(width, self.field.zero());
            for (x, y) in other_combo.iter_mut().zip(&combo) {
                *x -= &(&c * y);
            }
        }
        self.rows.push((pivot, row));
        self.combos.push(combo);
        self.inserted += 1;
        true
    }

    /// Coordinates of `v` in the independent vectors inserted so far, or
    /// `None` when `v` is outside their span.
    pub fn solve(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (rem, coeffs) = self.reduce(v);
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out = vec![self.field.zero(); self.inserted];
        for (c, combo) in coeffs.iter().zip(&self.combos) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(combo) {
                *o += &(c * x);
            }
        }
        Some(out)
    }
}

/// Basis of the null space of the `rows × cols` matrix given by columns.
pub fn kernel(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut span = ColumnSpan::new(field, rows);
    let mut pivots = Vec::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Some(coords) = span.solve(col) {
            // col = Σ coords_k col_{pivots[k]}
            let mut v = vec![field.zero(); columns.len()];
            v[j] = field.one();
            for (k, c) in coords.into_iter().enumerate() {
                v[pivots[k]] = -c;
            }
            kernel.push(v);
        } else {
            span.insert(col);
            pivots.push(j);
        }
    }
    kernel
}
