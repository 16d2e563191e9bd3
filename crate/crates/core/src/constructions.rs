//! Instance-producing constructions. Each one checks its hypotheses and
//! refuses with [`Error::Precondition`] when they fail.

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::laws::{check_morphism, check_pre_morphism, check_product_law, LawReport, ProductLaw};
use crate::linear::{EvenMap, Vector};
use crate::operators::{check_operator, OperatorKind};
use crate::scalar::{Field, Scalar};
use crate::space::{koszul, SuperSpace};

/// Largest `n` accepted by [`derived_n`].
pub const MAX_DERIVED: u32 = 16;

pub(crate) fn require(report: LawReport, requirement: impl Into<String>) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::Precondition {
            requirement: requirement.into(),
            report: Box::new(report),
        })
    }
}

fn same_field(expected: Field, found: Field) -> Result<()> {
    if expected != found {
        return Err(Error::FieldMismatch { expected, found });
    }
    Ok(())
}

/// `Alt(P) = (A, ≺ + ≻, α)`.
pub fn alt_of(p: &HomPreAlgebra) -> HomAlgebra {
    HomAlgebra::new(p.circ_product(), p.alpha().clone()).expect("same space and field")
}

/// `x ≺′ y = (−1)^{xy} y ≻ x`, `x ≻′ y = (−1)^{xy} y ≺ x`.
pub fn transpose(p: &HomPreAlgebra) -> HomPreAlgebra {
    let left = p.succ_product().signed_opposite().expect("square product");
    let right = p.prec_product().signed_opposite().expect("square product");
    HomPreAlgebra::new(left, right, p.alpha().clone()).expect("same space and field")
}

/// The signed opposite algebra `x ∘_op y = (−1)^{xy} y ∘ x`.
pub fn opposite(a: &HomAlgebra) -> HomAlgebra {
    let mu = a.product().signed_opposite().expect("square product");
    HomAlgebra::new(mu, a.alpha().clone()).expect("same space and field")
}

/// `x ∗ y = xy + (−1)^{xy} yx`.
pub fn plus_jordan(a: &HomAlgebra) -> HomAlgebra {
    let op = a.product().signed_opposite().expect("square product");
    let mu = a.product().add(&op).expect("same shape");
    HomAlgebra::new(mu, a.alpha().clone()).expect("same space and field")
}

/// Graded tensor product `C ⊗ B` with its basis bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorProduct {
    pub algebra: HomAlgebra,
    left: SuperSpace,
    right: SuperSpace,
    /// `pairs[flat] = (i, a)`: flat basis vector `flat` is `b_i ⊗ b_a`.
    pairs: Vec<(usize, usize)>,
    flat: Vec<usize>,
}

impl TensorProduct {
    /// Lays out `left ⊗ right` with even pairs first, each block in
    /// lexicographic pair order.
    pub fn layout(left: SuperSpace, right: SuperSpace) -> (SuperSpace, Vec<(usize, usize)>) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 0..left.dim() {
            for a in 0..right.dim() {
                if (left.parity(i) + right.parity(a)).is_odd() {
                    odd.push((i, a));
                } else {
                    even.push((i, a));
                }
            }
        }
        let space = SuperSpace::new(even.len(), odd.len());
        even.extend(odd);
        (space, even)
    }

    fn from_layout(algebra: HomAlgebra, left: SuperSpace, right: SuperSpace, pairs: Vec<(usize, usize)>) -> Self {
        let mut flat = vec![0; pairs.len()];
        for (f, &(i, a)) in pairs.iter().enumerate() {
            flat[i * right.dim() + a] = f;
        }
        Self {
            algebra,
            left,
            right,
            pairs,
            flat,
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn flat_index(&self, i: usize, a: usize) -> usize {
        self.flat[i * self.right.dim() + a]
    }

    /// `(f ⊗ g)(x ⊗ a) = f(x) ⊗ g(a)`; both maps are even, so no sign appears.
    pub fn tensor_map(&self, f: &EvenMap, g: &EvenMap) -> Result<EvenMap> {
        self.left.ensure_eq(&f.domain())?;
        self.left.ensure_eq(&f.codomain())?;
        self.right.ensure_eq(&g.domain())?;
        self.right.ensure_eq(&g.codomain())?;
        same_field(f.field(), g.field())?;
        let space = self.algebra.space();
        EvenMap::from_fn(space, space, f.field(), |row, col| {
            let (k, l) = self.pairs[row];
            let (x, a) = self.pairs[col];
            f.entry(k, x) * g.entry(l, a)
        })
    }
}

/// `(x ⊗ a) ∗ (y ⊗ b) = (−1)^{|a||y|} xy ⊗ ab` with twist `α ⊗ α′`, for `C`
/// super-commutative and Hom-associative and `B` Hom-alternative.
pub fn tensor_alt(c: &HomAlgebra, b: &HomAlgebra) -> Result<TensorProduct> {
    same_field(c.field(), b.field())?;
    require(
        check_product_law(c, ProductLaw::SuperCommutative),
        "first factor must be super-commutative",
    )?;
    require(
        check_product_law(c, ProductLaw::HomAssociative),
        "first factor must be hom-associative",
    )?;
    require(
        check_product_law(b, ProductLaw::HomAlternative),
        "second factor must be hom-alternative",
    )?;
    Ok(tensor_unchecked(c, b))
}

pub(crate) fn tensor_unchecked(c: &HomAlgebra, b: &HomAlgebra) -> TensorProduct {
    let (cs, bs) = (c.space(), b.space());
    let field = c.field();
    let (space, pairs) = TensorProduct::layout(cs, bs);
    let scratch = TensorProduct::from_layout(
        HomAlgebra::untwisted(Bilinear::zero_product(space, field)).expect("zero algebra"),
        cs,
        bs,
        pairs.clone(),
    );
    let mu = Bilinear::from_pairs(space, space, space, field, |xa, yb| {
        let (x, a) = pairs[xa];
        let (y, bb) = pairs[yb];
        let mut out = Vector::zero(space, field);
        let left = c.product().basis_product(x, y);
        let right = b.product().basis_product(a, bb);
        let sign = koszul(bs.parity(a), cs.parity(y));
        for (k, ck) in left.support() {
            for (l, bl) in right.support() {
                out.add_at(scratch.flat_index(k, l), &(ck * bl).signed(sign));
            }
        }
        out
    })
    .expect("tensor product of even products is even");
    let alpha = scratch
        .tensor_map(c.alpha(), b.alpha())
        .expect("twists are endomorphisms of the factors");
    let algebra = HomAlgebra::new(mu, alpha).expect("consistent tensor data");
    TensorProduct::from_layout(algebra, cs, bs, pairs)
}

/// `(A, β∘μ, α)` for `β` in the centroid.
pub fn centroid_twist(a: &HomAlgebra, beta: &EvenMap) -> Result<HomAlgebra> {
    require(
        check_operator(&OperatorKind::Centroid, beta, a)?,
        "map must lie in the centroid",
    )?;
    a.with_product(a.product().then_map(beta)?)
}

/// `x ∗ y = x·∂(y)` for an averaging operator `∂`.
pub fn averaging_product(a: &HomAlgebra, d: &EvenMap) -> Result<HomAlgebra> {
    require(
        check_operator(&OperatorKind::Averaging, d, a)?,
        "map must be an averaging operator",
    )?;
    a.with_product(a.product().precompose_right(d)?)
}

/// `x ≺ y = x·R(y)`, `x ≻ y = R(x)·y` for a weight-0 Rota–Baxter operator on a
/// Hom-alternative superalgebra.
pub fn rb_split(a: &HomAlgebra, r: &EvenMap) -> Result<HomPreAlgebra> {
    require(
        check_product_law(a, ProductLaw::HomAlternative),
        "algebra must be hom-alternative",
    )?;
    require(
        check_operator(&OperatorKind::RotaBaxter(a.field().zero()), r, a)?,
        "map must be a weight-0 Rota-Baxter operator",
    )?;
    let left = a.product().precompose_right(r)?;
    let right = a.product().precompose_left(r)?;
    HomPreAlgebra::new(left, right, a.alpha().clone())
}

/// `(A, β∘≺, β∘≻, β∘α)` for an endomorphism `β` of the pre-algebra.
pub fn yau_twist(p: &HomPreAlgebra, beta: &EvenMap) -> Result<HomPreAlgebra> {
    require(
        check_pre_morphism(beta, p, p, false)?,
        "map must be an endomorphism of the pre-algebra",
    )?;
    Ok(yau_twist_unchecked(p, beta))
}

fn yau_twist_unchecked(p: &HomPreAlgebra, beta: &EvenMap) -> HomPreAlgebra {
    let left = p.prec_product().then_map(beta).expect("endomorphism");
    let right = p.succ_product().then_map(beta).expect("endomorphism");
    let alpha = beta.compose(p.alpha()).expect("endomorphism");
    HomPreAlgebra::new(left, right, alpha).expect("same space")
}

/// `(A, β∘μ, β∘α)` for an endomorphism `β` of a Hom-superalgebra.
pub fn yau_twist_algebra(a: &HomAlgebra, beta: &EvenMap) -> Result<HomAlgebra> {
    require(
        check_morphism(beta, a, a, false)?,
        "map must be an endomorphism of the algebra",
    )?;
    HomAlgebra::new(a.product().then_map(beta)?, beta.compose(a.alpha())?)
}

/// The `n`-th derived algebra: products composed with `α^{2ⁿ−1}`, twist
/// `α^{2ⁿ}`. Its `alt_of` is the `n`-th derived Hom-alternative superalgebra.
pub fn derived_n(p: &HomPreAlgebra, n: u32) -> Result<HomPreAlgebra> {
    if n < 1 || n > MAX_DERIVED {
        return Err(Error::InvalidParameter(format!(
            "derived index must lie in 1..={MAX_DERIVED}, got {n}"
        )));
    }
    require(
        check_pre_morphism(p.alpha(), p, p, false)?,
        "pre-algebra must be multiplicative",
    )?;
    let beta = p.alpha().power((1u64 << n) - 1)?;
    Ok(yau_twist_unchecked(p, &beta))
}

/// Both products multiplied by `λ`.
pub fn scale(p: &HomPreAlgebra, lambda: &Scalar) -> Result<HomPreAlgebra> {
    same_field(p.field(), lambda.field())?;
    HomPreAlgebra::new(
        p.prec_product().scale(lambda),
        p.succ_product().scale(lambda),
        p.alpha().clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::laws::{check_pre_law, PreLaw};

    fn q() -> Field {
        Field::Rational
    }

    fn basis(space: SuperSpace, i: usize) -> Vector {
        Vector::basis(space, q(), i)
    }

    #[test]
    fn alt_of_split_p3_doubles_integration() {
        let p = corpus::p3_split(q()).unwrap();
        let alt = alt_of(&p);
        let s = p.space();
        // 1 ∘ 1 = 1·R(1) + R(1)·1 = 2t
        assert_eq!(
            alt.product().apply(&basis(s, 0), &basis(s, 0)).unwrap(),
            basis(s, 1).scale(&q().int(2))
        );
    }

    #[test]
    fn transpose_is_an_involution() {
        for p in [corpus::p3_split(q()).unwrap(), corpus::graded_split(q()).unwrap()] {
            assert_eq!(transpose(&transpose(&p)), p);
        }
    }

    #[test]
    fn transpose_of_split_p3_swaps_products() {
        let p = corpus::p3_split(q()).unwrap();
        let t = transpose(&p);
        let s = p.space();
        let one = basis(s, 0);
        assert_eq!(t.prec_product().apply(&one, &one).unwrap(), basis(s, 1));
    }

    #[test]
    fn plus_of_grassmann_doubles() {
        let a = corpus::grassmann1(q());
        let plus = plus_jordan(&a);
        assert_eq!(plus.product(), &a.product().scale(&q().int(2)));
    }

    #[test]
    fn plus_of_octonion_units_vanishes() {
        let o = corpus::octonions(q()).unwrap();
        let plus = plus_jordan(&o);
        let s = o.space();
        assert!(plus.product().apply(&basis(s, 1), &basis(s, 2)).unwrap().is_zero());
    }

    #[test]
    fn tensor_with_ground_field_reproduces_factor() {
        let k = corpus::truncpoly(q(), 1).unwrap();
        let o = corpus::octonions(q()).unwrap();
        let t = tensor_alt(&k, &o).unwrap();
        assert_eq!(t.algebra, o);
        let g = corpus::grassmann1(q());
        let t = tensor_alt(&k, &g).unwrap();
        assert_eq!(t.algebra, g);
    }

    #[test]
    fn tensor_sign_example() {
        // (ε⊗e1)∗(1⊗e2) = ε⊗e1e2 = ε⊗e3
        let g = corpus::grassmann1(q());
        let o = corpus::octonions(q()).unwrap();
        let t = tensor_alt(&g, &o).unwrap();
        let s = t.algebra.space();
        assert_eq!(s.dims(), (8, 8));
        let lhs = basis(s, t.flat_index(1, 1));
        let rhs = basis(s, t.flat_index(0, 2));
        let prod = t.algebra.product().apply(&lhs, &rhs).unwrap();
        assert_eq!(prod, basis(s, t.flat_index(1, 3)));
    }

    #[test]
    fn tensor_refuses_noncommutative_left_factor() {
        let o = corpus::octonions(q()).unwrap();
        let err = tensor_alt(&o, &o).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }

    #[test]
    fn tensor_layout_puts_even_pairs_first() {
        let (space, pairs) = TensorProduct::layout(SuperSpace::new(1, 1), SuperSpace::new(2, 1));
        assert_eq!(space.dims(), (3, 3));
        assert_eq!(pairs, vec![(0, 0), (0, 1), (1, 2), (0, 2), (1, 0), (1, 1)]);
    }

    #[test]
    fn centroid_and_averaging_scalars() {
        let o = corpus::octonions(q()).unwrap();
        let three = EvenMap::scalar(o.space(), q().int(3));
        let t = centroid_twist(&o, &three).unwrap();
        assert_eq!(t.product(), &o.product().scale(&q().int(3)));
        let id = EvenMap::identity(o.space(), q());
        assert_eq!(averaging_product(&o, &id).unwrap(), o);
        let zero = EvenMap::zero(o.space(), o.space(), q());
        assert!(averaging_product(&o, &zero).unwrap().product().is_zero());
    }

    #[test]
    fn rb_split_of_p3_matches_hand_products() {
        let p = corpus::p3_split(q()).unwrap();
        let s = p.space();
        // 1 ≻ t = R(1)·t = t², t ≺ 1 = t·R(1) = t²
        assert_eq!(p.succ_product().apply(&basis(s, 0), &basis(s, 1)).unwrap(), basis(s, 2));
        assert_eq!(p.prec_product().apply(&basis(s, 1), &basis(s, 0)).unwrap(), basis(s, 2));
    }

    #[test]
    fn rb_split_with_zero_operator_is_zero() {
        let a = corpus::truncpoly(q(), 3).unwrap();
        let z = EvenMap::zero(a.space(), a.space(), q());
        let p = rb_split(&a, &z).unwrap();
        assert!(p.prec_product().is_zero() && p.succ_product().is_zero());
    }

    #[test]
    fn rb_split_refuses_non_rb_map() {
        let a = corpus::truncpoly(q(), 3).unwrap();
        let id = EvenMap::identity(a.space(), q());
        assert!(matches!(rb_split(&a, &id), Err(Error::Precondition { .. })));
    }

    #[test]
    fn yau_and_derived_agree() {
        let p = corpus::graded_split_twisted(q()).unwrap();
        assert_eq!(derived_n(&p, 1).unwrap(), yau_twist(&p, p.alpha()).unwrap());
        let id = EvenMap::identity(p.space(), q());
        assert_eq!(yau_twist(&p, &id).unwrap(), p);
    }

    #[test]
    fn derived_of_untwisted_is_unchanged() {
        let p = corpus::p3_split(q()).unwrap();
        for n in 1..=3 {
            assert_eq!(derived_n(&p, n).unwrap(), p);
        }
        assert!(derived_n(&p, 0).is_err());
        assert!(derived_n(&p, MAX_DERIVED + 1).is_err());
    }

    #[test]
    fn scaling_by_zero_and_one() {
        let p = corpus::p3_split(q()).unwrap();
        assert_eq!(scale(&p, &q().one()).unwrap(), p);
        let z = scale(&p, &q().zero()).unwrap();
        assert_eq!(z, HomPreAlgebra::zero(p.space(), q()));
        assert!(check_pre_law(&scale(&p, &q().int(2)).unwrap(), PreLaw::HomPrealternative).passed);
    }
}
