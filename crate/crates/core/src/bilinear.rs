//! Even bilinear maps given by structure constants.
//!
//! A [`Bilinear`] map `L × R → O` is stored densely as `c[i][j][k]` with
//! `b_i ∗ b_j = Σ_k c[i][j][k] b_k`, and additionally as a per-pair list of
//! nonzero terms so that products of sparse vectors stay cheap.

use crate::error::{Error, Result, Violation};
use crate::linear::{EvenMap, Vector};
use crate::scalar::{Field, Scalar};
use crate::space::SuperSpace;

#[derive(Clone, Debug)]
pub struct Bilinear {
    left: SuperSpace,
    right: SuperSpace,
    out: SuperSpace,
    field: Field,
    coeffs: Vec<Scalar>,
    terms: Vec<Vec<(usize, Scalar)>>,
}

/// An even product on a single space.
pub type EvenProduct = Bilinear;

impl PartialEq for Bilinear {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left
            && self.right == other.right
            && self.out == other.out
            && self.field == other.field
            && self.coeffs == other.coeffs
    }
}

impl Eq for Bilinear {}

impl Bilinear {
    /// Validates that `c[i][j][k] = 0` whenever `|k| ≠ |i| + |j|`, listing
    /// every offending index triple.
    pub fn new(
        left: SuperSpace,
        right: SuperSpace,
        out: SuperSpace,
        field: Field,
        coeffs: Vec<Scalar>,
    ) -> Result<Self> {
        let expected = left.dim() * right.dim() * out.dim();
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        let mut violations = Vec::new();
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                for k in 0..out.dim() {
                    let c = &coeffs[(i * right.dim() + j) * out.dim() + k];
                    if c.field() != field {
                        return Err(Error::FieldMismatch {
                            expected: field,
                            found: c.field(),
                        });
                    }
                    if !c.is_zero() && out.parity(k) != left.parity(i) + right.parity(j) {
                        violations.push(Violation::new(
                            format!("({i},{j},{k})"),
                            format!(
                                "parity violation: {}·{} → {} is not even",
                                left.parity(i),
                                right.parity(j),
                                out.parity(k)
                            ),
                        ));
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        Ok(Self::assemble(left, right, out, field, coeffs))
    }

    fn assemble(
        left: SuperSpace,
        right: SuperSpace,
        out: SuperSpace,
        field: Field,
        coeffs: Vec<Scalar>,
    ) -> Self {
        let no = out.dim();
        let terms = (0..left.dim() * right.dim())
            .map(|ij| {
                coeffs[ij * no..(ij + 1) * no]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        Self {
            left,
            right,
            out,
            field,
            coeffs,
            terms,
        }
    }

    pub fn from_fn(
        left: SuperSpace,
        right: SuperSpace,
        out: SuperSpace,
        field: Field,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(left.dim() * right.dim() * out.dim());
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                for k in 0..out.dim() {
                    coeffs.push(f(i, j, k));
                }
            }
        }
        Self::new(left, right, out, field, coeffs)
    }

    /// Builds the map from the products of basis pairs.
    pub fn from_pairs(
        left: SuperSpace,
        right: SuperSpace,
        out: SuperSpace,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(left.dim() * right.dim() * out.dim());
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                let v = f(i, j);
                out.ensure_eq(&v.space())?;
                coeffs.extend(v.coords().iter().cloned());
            }
        }
        Self::new(left, right, out, field, coeffs)
    }

    /// Sparse constructor: unlisted constants are zero. Repeated indices add up.
    pub fn from_entries(
        left: SuperSpace,
        right: SuperSpace,
        out: SuperSpace,
        field: Field,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut coeffs = vec![field.zero(); left.dim() * right.dim() * out.dim()];
        for (i, j, k, c) in entries {
            if i >= left.dim() || j >= right.dim() || k >= out.dim() {
                return Err(Error::Validation(vec![Violation::new(
                    format!("({i},{j},{k})"),
                    "index out of range",
                )]));
            }
            coeffs[(i * right.dim() + j) * out.dim() + k] += &c;
        }
        Self::new(left, right, out, field, coeffs)
    }

    pub fn product(space: SuperSpace, field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        Self::new(space, space, space, field, coeffs)
    }

    pub fn zero(left: SuperSpace, right: SuperSpace, out: SuperSpace, field: Field) -> Self {
        let coeffs = vec![field.zero(); left.dim() * right.dim() * out.dim()];
        Self::assemble(left, right, out, field, coeffs)
    }

    pub fn zero_product(space: SuperSpace, field: Field) -> Self {
        Self::zero(space, space, space, field)
    }

    pub fn left(&self) -> SuperSpace {
        self.left
    }

    pub fn right(&self) -> SuperSpace {
        self.right
    }

    pub fn out(&self) -> SuperSpace {
        self.out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// True when all three slots are the same space.
    pub fn is_product(&self) -> bool {
        self.left == self.right && self.right == self.out
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.right.dim() + j) * self.out.dim() + k]
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    /// Nonzero constants `(i, j, k, c)` in lexicographic index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let nr = self.right.dim().max(1);
        self.terms.iter().enumerate().flat_map(move |(ij, ts)| {
            ts.iter().map(move |(k, c)| (ij / nr, ij % nr, *k, c))
        })
    }

    /// `b_i ∗ b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zero(self.out, self.field);
        for (k, c) in &self.terms[i * self.right.dim() + j] {
            out.add_at(*k, c);
        }
        out
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.left.ensure_eq(&x.space())?;
        self.right.ensure_eq(&y.space())?;
        for f in [x.field(), y.field()] {
            if f != self.field {
                return Err(Error::FieldMismatch {
                    expected: self.field,
                    found: f,
                });
            }
        }
        Ok(self.apply_unchecked(x, y))
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.out, self.field);
        let nr = self.right.dim();
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let ts = &self.terms[i * nr + j];
                if ts.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in ts {
                    out.add_at(*k, &(&xy * c));
                }
            }
        }
        out
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Bilinear) -> Result<Bilinear> {
        self.check_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::assemble(self.left, self.right, self.out, self.field, coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Bilinear {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Self::assemble(self.left, self.right, self.out, self.field, coeffs)
    }

    fn check_shape(&self, other: &Bilinear) -> Result<()> {
        self.left.ensure_eq(&other.left)?;
        self.right.ensure_eq(&other.right)?;
        self.out.ensure_eq(&other.out)?;
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    /// `(x, y) ↦ f(x ∗ y)`.
    pub fn then_map(&self, f: &EvenMap) -> Result<Bilinear> {
        self.out.ensure_eq(&f.domain())?;
        Self::from_pairs(self.left, self.right, f.codomain(), self.field, |i, j| {
            f.apply_unchecked(&self.basis_product(i, j))
        })
    }

    /// `(x, y) ↦ f(x) ∗ y`.
    pub fn precompose_left(&self, f: &EvenMap) -> Result<Bilinear> {
        self.left.ensure_eq(&f.codomain())?;
        Self::from_pairs(f.domain(), self.right, self.out, self.field, |i, j| {
            self.apply_unchecked(&f.column(i), &Vector::basis(self.right, self.field, j))
        })
    }

    /// `(x, y) ↦ x ∗ f(y)`.
    pub fn precompose_right(&self, f: &EvenMap) -> Result<Bilinear> {
        self.right.ensure_eq(&f.codomain())?;
        Self::from_pairs(self.left, f.domain(), self.out, self.field, |i, j| {
            self.apply_unchecked(&Vector::basis(self.left, self.field, i), &f.column(j))
        })
    }

    /// `(x, y) ↦ (−1)^{|x||y|} y ∗ x`, defined when both arguments live in the
    /// same space.
    pub fn signed_opposite(&self) -> Result<Bilinear> {
        self.left.ensure_eq(&self.right)?;
        let s = self.left;
        Self::from_fn(s, s, self.out, self.field, |i, j, k| {
            self.coeff(j, i, k)
                .clone()
                .signed(crate::space::koszul(s.parity(i), s.parity(j)))
        })
    }

    /// Copy with the single constant `c[i][j][k]` replaced. The result is not
    /// re-validated for parity, so callers must keep the constant admissible.
    pub fn with_coeff(&self, i: usize, j: usize, k: usize, value: Scalar) -> Result<Bilinear> {
        let mut coeffs = self.coeffs.clone();
        coeffs[(i * self.right.dim() + j) * self.out.dim() + k] = value;
        Self::new(self.left, self.right, self.out, self.field, coeffs)
    }
}
