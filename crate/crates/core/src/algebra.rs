//! Hom-superalgebras `(A, μ, α)` and Hom-pre-superalgebras `(A, ≺, ≻, α)`.

use crate::bilinear::{Bilinear, EvenProduct};
use crate::error::{Error, Result};
use crate::linear::{EvenMap, Vector};
use crate::scalar::Field;
use crate::space::SuperSpace;

/// `Σ_{i,j} x_i y_j (b_i ∗ b_j)`.
pub fn multiply(product: &EvenProduct, x: &Vector, y: &Vector) -> Result<Vector> {
    product.apply(x, y)
}

pub fn apply_map(map: &EvenMap, x: &Vector) -> Result<Vector> {
    map.apply(x)
}

fn check_endo(space: SuperSpace, field: Field, map: &EvenMap, what: &str) -> Result<()> {
    if map.domain() != space || map.codomain() != space {
        return Err(Error::InvalidParameter(format!(
            "{what} must be an endomorphism of {space}, got {} → {}",
            map.domain(),
            map.codomain()
        )));
    }
    if map.field() != field {
        return Err(Error::FieldMismatch {
            expected: field,
            found: map.field(),
        });
    }
    Ok(())
}

fn check_product(space: SuperSpace, field: Field, product: &Bilinear, what: &str) -> Result<()> {
    if !product.is_product() || product.out() != space {
        return Err(Error::InvalidParameter(format!(
            "{what} must be a product on {space}"
        )));
    }
    if product.field() != field {
        return Err(Error::FieldMismatch {
            expected: field,
            found: product.field(),
        });
    }
    Ok(())
}

/// A Hom-superalgebra: one even product and an even twisting map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    mu: EvenProduct,
    alpha: EvenMap,
}

impl HomAlgebra {
    pub fn new(mu: EvenProduct, alpha: EvenMap) -> Result<Self> {
        let space = mu.out();
        check_product(space, mu.field(), &mu, "μ")?;
        check_endo(space, mu.field(), &alpha, "α")?;
        Ok(Self { mu, alpha })
    }

    /// Untwisted algebra, `α = id`.
    pub fn untwisted(mu: EvenProduct) -> Result<Self> {
        let alpha = EvenMap::identity(mu.out(), mu.field());
        Self::new(mu, alpha)
    }

    pub fn space(&self) -> SuperSpace {
        self.mu.out()
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    pub fn product(&self) -> &EvenProduct {
        &self.mu
    }

    pub fn alpha(&self) -> &EvenMap {
        &self.alpha
    }

    pub(crate) fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.mu.apply_unchecked(x, y)
    }

    pub(crate) fn twist(&self, x: &Vector) -> Vector {
        self.alpha.apply_unchecked(x)
    }

    pub fn with_alpha(&self, alpha: EvenMap) -> Result<Self> {
        Self::new(self.mu.clone(), alpha)
    }

    pub fn with_product(&self, mu: EvenProduct) -> Result<Self> {
        Self::new(mu, self.alpha.clone())
    }
}

/// A Hom-pre-superalgebra: two even products `≺`, `≻` and an even twisting
/// map. The circle product `∘ = ≺ + ≻` is always derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPreAlgebra {
    left: EvenProduct,
    right: EvenProduct,
    alpha: EvenMap,
}

impl HomPreAlgebra {
    pub fn new(left: EvenProduct, right: EvenProduct, alpha: EvenMap) -> Result<Self> {
        let space = left.out();
        let field = left.field();
        check_product(space, field, &left, "≺")?;
        check_product(space, field, &right, "≻")?;
        check_endo(space, field, &alpha, "α")?;
        Ok(Self { left, right, alpha })
    }

    pub fn zero(space: SuperSpace, field: Field) -> Self {
        Self {
            left: Bilinear::zero_product(space, field),
            right: Bilinear::zero_product(space, field),
            alpha: EvenMap::identity(space, field),
        }
    }

    pub fn space(&self) -> SuperSpace {
        self.left.out()
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    /// The product `≺`.
    pub fn prec_product(&self) -> &EvenProduct {
        &self.left
    }

    /// The product `≻`.
    pub fn succ_product(&self) -> &EvenProduct {
        &self.right
    }

    pub fn alpha(&self) -> &EvenMap {
        &self.alpha
    }

    /// The tensor of `∘ = ≺ + ≻`.
    pub fn circ_product(&self) -> EvenProduct {
        self.left
            .add(&self.right)
            .expect("both products live on the same space")
    }

    pub(crate) fn prec(&self, x: &Vector, y: &Vector) -> Vector {
        self.left.apply_unchecked(x, y)
    }

    pub(crate) fn succ(&self, x: &Vector, y: &Vector) -> Vector {
        self.right.apply_unchecked(x, y)
    }

    pub(crate) fn circ(&self, x: &Vector, y: &Vector) -> Vector {
        let mut v = self.prec(x, y);
        v += &self.succ(x, y);
        v
    }

    pub(crate) fn twist(&self, x: &Vector) -> Vector {
        self.alpha.apply_unchecked(x)
    }
}
