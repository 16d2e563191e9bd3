//! Coordinate vectors and even linear maps.

use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::scalar::{Field, Scalar};
use crate::space::{Parity, SuperSpace};

/// A vector of a [`SuperSpace`] in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    space: SuperSpace,
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(space: SuperSpace, field: Field) -> Self {
        Self {
            space,
            field,
            coords: vec![field.zero(); space.dim()],
        }
    }

    pub fn basis(space: SuperSpace, field: Field, index: usize) -> Self {
        let mut v = Self::zero(space, field);
        v.coords[index] = field.one();
        v
    }

    pub fn from_coords(space: SuperSpace, field: Field, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::LengthMismatch {
                expected: space.dim(),
                found: coords.len(),
            });
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(Self {
            space,
            field,
            coords,
        })
    }

    /// Integer coordinates, mostly for tests and builtin data.
    pub fn from_ints(space: SuperSpace, field: Field, coords: &[i64]) -> Result<Self> {
        Self::from_coords(space, field, coords.iter().map(|&c| field.int(c)).collect())
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Nonzero coordinates as `(index, value)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// The parity shared by every nonzero coordinate. `None` when the support
    /// mixes parities; the zero vector is homogeneous of either parity and
    /// reports `Some(Even)`.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut found = None;
        for (i, _) in self.support() {
            let p = self.space.parity(i);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn check_same(&self, other: &Vector) -> Result<()> {
        self.space.ensure_eq(&other.space)?;
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    pub(crate) fn add_at(&mut self, index: usize, value: &Scalar) {
        self.coords[index] += value;
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out += other;
        out
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out -= other;
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            space: self.space,
            field: self.field,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            space: self.space,
            field: self.field,
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    /// Multiplies by `(−1)` when `odd` is set.
    pub fn signed(self, odd: bool) -> Vector {
        if odd {
            self.neg()
        } else {
            self
        }
    }
}

impl std::ops::AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        debug_assert_eq!(self.space, rhs.space);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl std::ops::SubAssign<&Vector> for Vector {
    fn sub_assign(&mut self, rhs: &Vector) {
        debug_assert_eq!(self.space, rhs.space);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.support().map(|(i, c)| format!("{c}·b{i}")).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A vector declared homogeneous of a given parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub vector: Vector,
    pub parity: Parity,
}

impl Homogeneous {
    pub fn new(vector: Vector, parity: Parity) -> Result<Self> {
        let space = vector.space();
        if let Some((i, _)) = vector.support().find(|(i, _)| space.parity(*i) != parity) {
            return Err(Error::Validation(vec![Violation::new(
                format!("coordinate {i}"),
                format!("vector declared of parity {parity} has support of the other parity"),
            )]));
        }
        Ok(Self { vector, parity })
    }

    pub fn basis(space: SuperSpace, field: Field, index: usize) -> Self {
        Self {
            vector: Vector::basis(space, field, index),
            parity: space.parity(index),
        }
    }
}

/// An even linear map between super spaces, stored as a dense
/// `codomain × domain` matrix whose column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    field: Field,
    entries: Vec<Scalar>,
}

impl EvenMap {
    /// Validates even-ness: entry `(i, j)` must vanish when the parities of
    /// `i` and `j` differ. Every offending entry is listed.
    pub fn new(
        domain: SuperSpace,
        codomain: SuperSpace,
        field: Field,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        let expected = domain.dim() * codomain.dim();
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: entries.len(),
            });
        }
        let mut violations = Vec::new();
        for i in 0..codomain.dim() {
            for j in 0..domain.dim() {
                let c = &entries[i * domain.dim() + j];
                if c.field() != field {
                    return Err(Error::FieldMismatch {
                        expected: field,
                        found: c.field(),
                    });
                }
                if !c.is_zero() && codomain.parity(i) != domain.parity(j) {
                    violations.push(Violation::new(
                        format!("({i},{j})"),
                        "even map mixes parities",
                    ));
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        Ok(Self {
            domain,
            codomain,
            field,
            entries,
        })
    }

    pub fn from_fn(
        domain: SuperSpace,
        codomain: SuperSpace,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(domain.dim() * codomain.dim());
        for i in 0..codomain.dim() {
            for j in 0..domain.dim() {
                entries.push(f(i, j));
            }
        }
        Self::new(domain, codomain, field, entries)
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_columns(domain: SuperSpace, codomain: SuperSpace, field: Field, columns: &[Vector]) -> Result<Self> {
        if columns.len() != domain.dim() {
            return Err(Error::LengthMismatch {
                expected: domain.dim(),
                found: columns.len(),
            });
        }
        for c in columns {
            codomain.ensure_eq(&c.space())?;
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
        }
        Self::from_fn(domain, codomain, field, |i, j| columns[j].coord(i).clone())
    }

    pub fn zero(domain: SuperSpace, codomain: SuperSpace, field: Field) -> Self {
        Self {
            domain,
            codomain,
            field,
            entries: vec![field.zero(); domain.dim() * codomain.dim()],
        }
    }

    pub fn identity(space: SuperSpace, field: Field) -> Self {
        Self::scalar(space, field.one())
    }

    /// `λ · id`.
    pub fn scalar(space: SuperSpace, lambda: Scalar) -> Self {
        let field = lambda.field();
        let mut m = Self::zero(space, space, field);
        for i in 0..space.dim() {
            m.entries[i * space.dim() + i] = lambda.clone();
        }
        m
    }

    /// Diagonal map with the given integer entries.
    pub fn diagonal(space: SuperSpace, field: Field, diag: &[i64]) -> Result<Self> {
        if diag.len() != space.dim() {
            return Err(Error::LengthMismatch {
                expected: space.dim(),
                found: diag.len(),
            });
        }
        Self::from_fn(space, space, field, |i, j| {
            if i == j {
                field.int(diag[i])
            } else {
                field.zero()
            }
        })
    }

    pub fn domain(&self) -> SuperSpace {
        self.domain
    }

    pub fn codomain(&self) -> SuperSpace {
        self.codomain
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_endo(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.domain.dim() + col]
    }

    pub(crate) fn set_entry(&mut self, row: usize, col: usize, value: Scalar) {
        let n = self.domain.dim();
        self.entries[row * n + col] = value;
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.domain.dim();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }

    /// Image of basis vector `j`.
    pub fn column(&self, j: usize) -> Vector {
        let coords = (0..self.codomain.dim())
            .map(|i| self.entry(i, j).clone())
            .collect();
        Vector {
            space: self.codomain,
            field: self.field,
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_endo() && *self == Self::identity(self.domain, self.field)
    }

    fn check_field(&self, field: Field) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: field,
            });
        }
        Ok(())
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.domain.ensure_eq(&x.space())?;
        self.check_field(x.field())?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector) -> Vector {
        let mut out = Vector::zero(self.codomain, self.field);
        let n = self.domain.dim();
        for (j, xj) in x.support() {
            for i in 0..self.codomain.dim() {
                let a = &self.entries[i * n + j];
                if !a.is_zero() {
                    out.coords[i] += &(a * xj);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EvenMap) -> Result<EvenMap> {
        self.domain.ensure_eq(&other.codomain)?;
        self.check_field(other.field)?;
        let (rows, inner, cols) = (self.codomain.dim(), self.domain.dim(), other.domain.dim());
        let mut entries = vec![self.field.zero(); rows * cols];
        for i in 0..rows {
            for k in 0..inner {
                let a = &self.entries[i * inner + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let b = &other.entries[k * cols + j];
                    if !b.is_zero() {
                        entries[i * cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(EvenMap {
            domain: other.domain,
            codomain: self.codomain,
            field: self.field,
            entries,
        })
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn power(&self, mut k: u64) -> Result<EvenMap> {
        if !self.is_endo() {
            return Err(Error::SpaceMismatch {
                expected: self.domain.dims(),
                found: self.codomain.dims(),
            });
        }
        let mut acc = Self::identity(self.domain, self.field);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn add(&self, other: &EvenMap) -> Result<EvenMap> {
        self.domain.ensure_eq(&other.domain)?;
        self.codomain.ensure_eq(&other.codomain)?;
        self.check_field(other.field)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(EvenMap {
            entries,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &EvenMap) -> Result<EvenMap> {
        self.add(&other.scale(&-other.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> EvenMap {
        EvenMap {
            entries: self.entries.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda1() -> SuperSpace {
        SuperSpace::new(1, 1)
    }

    #[test]
    fn identity_fixes_vectors() {
        let q = Field::Rational;
        let s = SuperSpace::new(2, 1);
        let x = Vector::from_ints(s, q, &[3, -1, 7]).unwrap();
        assert_eq!(EvenMap::identity(s, q).apply(&x).unwrap(), x);
    }

    #[test]
    fn alpha2_doubles_the_odd_generator() {
        let q = Field::Rational;
        let alpha2 = EvenMap::diagonal(lambda1(), q, &[1, 2]).unwrap();
        let eps = Vector::basis(lambda1(), q, 1);
        assert_eq!(
            alpha2.apply(&eps).unwrap(),
            Vector::from_ints(lambda1(), q, &[0, 2]).unwrap()
        );
    }

    #[test]
    fn odd_to_even_entry_is_rejected() {
        let q = Field::Rational;
        let err = EvenMap::from_fn(lambda1(), lambda1(), q, |i, j| {
            if (i, j) == (0, 1) {
                q.one()
            } else {
                q.zero()
            }
        })
        .unwrap_err();
        match err {
            Error::Validation(v) => {
                assert_eq!(v.len(), 1);
                assert_eq!(v[0].location, "(0,1)");
                assert_eq!(v[0].message, "even map mixes parities");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn apply_rejects_wrong_space() {
        let q = Field::Rational;
        let id = EvenMap::identity(lambda1(), q);
        let x = Vector::zero(SuperSpace::new(2, 0), q);
        assert!(matches!(id.apply(&x), Err(Error::SpaceMismatch { .. })));
    }

    #[test]
    fn powers_match_repeated_composition() {
        let q = Field::Rational;
        let s = SuperSpace::new(2, 1);
        let m = EvenMap::from_fn(s, s, q, |i, j| match (i, j) {
            (0, 0) => q.int(1),
            (0, 1) => q.int(2),
            (1, 1) => q.int(-1),
            (2, 2) => q.int(3),
            _ => q.zero(),
        })
        .unwrap();
        let mut slow = EvenMap::identity(s, q);
        for k in 0..7u64 {
            assert_eq!(m.power(k).unwrap(), slow);
            slow = slow.compose(&m).unwrap();
        }
    }

    #[test]
    fn homogeneous_declaration_is_checked() {
        let q = Field::Rational;
        let v = Vector::from_ints(lambda1(), q, &[1, 1]).unwrap();
        assert!(Homogeneous::new(v.clone(), Parity::Even).is_err());
        assert_eq!(v.homogeneous_parity(), None);
        let e = Vector::basis(lambda1(), q, 1);
        assert!(Homogeneous::new(e, Parity::Odd).is_ok());
    }
}
