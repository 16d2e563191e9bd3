//! Bimodules over Hom-alternative and Hom-prealternative superalgebras.
//!
//! Actions are written in operator form: for an alternative bimodule
//! `x ≻ v = L(x)v` and `v ≺ x = R(x)v`; for a pre-bimodule there are four
//! actions `x ≺ v`, `x ≻ v`, `v ≺ x`, `v ≻ x`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::bilinear::Bilinear;
use crate::constructions::{alt_of, require, rb_split};
use crate::error::{Error, Result};
use crate::laws::{
    check_identities, check_morphism, check_pre_law, check_pre_morphism, check_product_law,
    Identity, LawReport, PreLaw, ProductLaw,
};
use crate::linear::{EvenMap, Homogeneous, Vector};
use crate::operators::{check_operator, OperatorKind};
use crate::scalar::Field;
use crate::space::{koszul, SuperSpace};

fn check_action(
    action: &Bilinear,
    left: SuperSpace,
    right: SuperSpace,
    out: SuperSpace,
    field: Field,
    what: &str,
) -> Result<()> {
    if action.left() != left || action.right() != right || action.out() != out {
        return Err(Error::InvalidParameter(format!(
            "{what} must map {left} × {right} → {out}"
        )));
    }
    if action.field() != field {
        return Err(Error::FieldMismatch {
            expected: field,
            found: action.field(),
        });
    }
    Ok(())
}

fn check_beta(beta: &EvenMap, module: SuperSpace, field: Field) -> Result<()> {
    if beta.domain() != module || beta.codomain() != module {
        return Err(Error::InvalidParameter(format!(
            "β must be an endomorphism of {module}"
        )));
    }
    if beta.field() != field {
        return Err(Error::FieldMismatch {
            expected: field,
            found: beta.field(),
        });
    }
    Ok(())
}

/// A candidate bimodule `(V, L, R, β)` over a Hom-superalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltBimodule {
    base: HomAlgebra,
    module: SuperSpace,
    beta: EvenMap,
    /// `x ≻ v`, a map `A × V → V`.
    left: Bilinear,
    /// `v ≺ x`, a map `V × A → V`.
    right: Bilinear,
}

impl AltBimodule {
    pub fn new(base: HomAlgebra, beta: EvenMap, left: Bilinear, right: Bilinear) -> Result<Self> {
        let module = beta.domain();
        let (a, f) = (base.space(), base.field());
        check_beta(&beta, module, f)?;
        check_action(&left, a, module, module, f, "left action")?;
        check_action(&right, module, a, module, f, "right action")?;
        Ok(Self {
            base,
            module,
            beta,
            left,
            right,
        })
    }

    /// The regular bimodule `(A, μ, μ, α)`; the base must be Hom-alternative.
    pub fn regular(a: &HomAlgebra) -> Result<Self> {
        require(
            check_product_law(a, ProductLaw::HomAlternative),
            "algebra must be hom-alternative",
        )?;
        Self::new(a.clone(), a.alpha().clone(), a.product().clone(), a.product().clone())
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn module(&self) -> SuperSpace {
        self.module
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn beta(&self) -> &EvenMap {
        &self.beta
    }

    pub fn left_action(&self) -> &Bilinear {
        &self.left
    }

    pub fn right_action(&self) -> &Bilinear {
        &self.right
    }

    pub fn with_actions(&self, left: Bilinear, right: Bilinear) -> Result<Self> {
        Self::new(self.base.clone(), self.beta.clone(), left, right)
    }

    fn l(&self, x: &Vector, v: &Vector) -> Vector {
        self.left.apply_unchecked(x, v)
    }

    fn r(&self, v: &Vector, x: &Vector) -> Vector {
        self.right.apply_unchecked(v, x)
    }
}

/// A candidate pre-bimodule `(V, L≺, R≺, L≻, R≻, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreBimodule {
    base: HomPreAlgebra,
    module: SuperSpace,
    beta: EvenMap,
    /// `x ≺ v`
    left_prec: Bilinear,
    /// `x ≻ v`
    left_succ: Bilinear,
    /// `v ≺ x`
    right_prec: Bilinear,
    /// `v ≻ x`
    right_succ: Bilinear,
}

/// The four actions of a pre-bimodule, in the order
/// `(x ≺ v, x ≻ v, v ≺ x, v ≻ x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreActions {
    pub left_prec: Bilinear,
    pub left_succ: Bilinear,
    pub right_prec: Bilinear,
    pub right_succ: Bilinear,
}

impl PreBimodule {
    pub fn new(base: HomPreAlgebra, beta: EvenMap, actions: PreActions) -> Result<Self> {
        let module = beta.domain();
        let (a, f) = (base.space(), base.field());
        check_beta(&beta, module, f)?;
        check_action(&actions.left_prec, a, module, module, f, "x ≺ v")?;
        check_action(&actions.left_succ, a, module, module, f, "x ≻ v")?;
        check_action(&actions.right_prec, module, a, module, f, "v ≺ x")?;
        check_action(&actions.right_succ, module, a, module, f, "v ≻ x")?;
        Ok(Self {
            base,
            module,
            beta,
            left_prec: actions.left_prec,
            left_succ: actions.left_succ,
            right_prec: actions.right_prec,
            right_succ: actions.right_succ,
        })
    }

    /// The regular pre-bimodule; the base must be Hom-prealternative.
    pub fn regular(p: &HomPreAlgebra) -> Result<Self> {
        require(
            check_pre_law(p, PreLaw::HomPrealternative),
            "pre-algebra must be hom-prealternative",
        )?;
        Self::new(
            p.clone(),
            p.alpha().clone(),
            PreActions {
                left_prec: p.prec_product().clone(),
                left_succ: p.succ_product().clone(),
                right_prec: p.prec_product().clone(),
                right_succ: p.succ_product().clone(),
            },
        )
    }

    pub fn base(&self) -> &HomPreAlgebra {
        &self.base
    }

    pub fn module(&self) -> SuperSpace {
        self.module
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn beta(&self) -> &EvenMap {
        &self.beta
    }

    pub fn actions(&self) -> PreActions {
        PreActions {
            left_prec: self.left_prec.clone(),
            left_succ: self.left_succ.clone(),
            right_prec: self.right_prec.clone(),
            right_succ: self.right_succ.clone(),
        }
    }

    pub fn with_actions(&self, actions: PreActions) -> Result<Self> {
        Self::new(self.base.clone(), self.beta.clone(), actions)
    }

    fn lp(&self, x: &Vector, v: &Vector) -> Vector {
        self.left_prec.apply_unchecked(x, v)
    }

    fn ls(&self, x: &Vector, v: &Vector) -> Vector {
        self.left_succ.apply_unchecked(x, v)
    }

    fn rp(&self, v: &Vector, x: &Vector) -> Vector {
        self.right_prec.apply_unchecked(v, x)
    }

    fn rs(&self, v: &Vector, x: &Vector) -> Vector {
        self.right_succ.apply_unchecked(v, x)
    }

    fn lc(&self, x: &Vector, v: &Vector) -> Vector {
        self.lp(x, v).add(&self.ls(x, v))
    }

    fn rc(&self, v: &Vector, x: &Vector) -> Vector {
        self.rp(v, x).add(&self.rs(v, x))
    }
}

#[inline]
fn s(a: &Homogeneous, b: &Homogeneous) -> bool {
    koszul(a.parity, b.parity)
}

/// The alternative-bimodule axioms, each on argument slots `(x, y, v)`.
pub fn alt_bimodule_identities(m: &AltBimodule) -> Vec<Identity<'_>> {
    let a = &m.base;
    let slots = vec![a.space(), a.space(), m.module];
    let f = a.field();
    let ax = |name: &'static str, body: fn(&AltBimodule, &[Homogeneous]) -> Vector| {
        Identity::new(name, slots.clone(), f, move |v| body(m, v))
    };
    vec![
        ax("abm1", |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let a = &m.base;
            let sxv = s(&h[0], &h[2]);
            let mut r = m.r(&m.r(v, x), &a.twist(y));
            r += &m.r(&m.l(x, v), &a.twist(y)).signed(sxv);
            r -= &m.l(&a.twist(x), &m.r(v, y)).signed(sxv);
            r -= &m.r(&m.beta.apply_unchecked(v), &a.mul(x, y));
            r
        }),
        ax("abm2", |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let a = &m.base;
            let sxv = s(&h[0], &h[2]);
            let mut r = m.l(&a.twist(y), &m.r(v, x));
            r -= &m.r(&m.l(y, v), &a.twist(x));
            r -= &m.l(&a.mul(y, x), &m.beta.apply_unchecked(v)).signed(sxv);
            r += &m.l(&a.twist(y), &m.l(x, v)).signed(sxv);
            r
        }),
        ax("abm3", |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let a = &m.base;
            let sxy = s(&h[0], &h[1]);
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.l(&a.mul(x, y), &bv);
            r += &m.l(&a.mul(y, x), &bv).signed(sxy);
            r -= &m.l(&a.twist(x), &m.l(y, v));
            r -= &m.l(&a.twist(y), &m.l(x, v)).signed(sxy);
            r
        }),
        ax("abm4", |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let a = &m.base;
            let sxy = s(&h[0], &h[1]);
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.r(&bv, &a.mul(x, y));
            r += &m.r(&bv, &a.mul(y, x)).signed(sxy);
            r -= &m.r(&m.r(v, x), &a.twist(y));
            r -= &m.r(&m.r(v, y), &a.twist(x)).signed(sxy);
            r
        }),
    ]
}

/// Checks the bimodule axioms. Refuses when the base is not Hom-alternative.
pub fn check_alt_bimodule(m: &AltBimodule) -> Result<LawReport> {
    require(
        check_product_law(&m.base, ProductLaw::HomAlternative),
        "base algebra must be hom-alternative",
    )?;
    Ok(check_identities("alt-bimodule", &alt_bimodule_identities(m)))
}

/// Sign between the two right-hand terms of the second pre-bimodule axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pbm2Sign {
    Minus,
    Plus,
}

/// Inner product in the last term of the fourth pre-bimodule axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pbm4Inner {
    Circ,
    Prec,
}

/// Inner action in the first term of the seventh pre-bimodule axiom,
/// `(v ≻ ·) ≺ α(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pbm7Inner {
    Y,
    X,
}

/// A reading of the three pre-bimodule axioms whose transcription is
/// ambiguous. [`PreAxiomReading::default`] is the reading under which every
/// regular pre-bimodule of the calibration corpus passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PreAxiomReading {
    pub pbm2: Pbm2Sign,
    pub pbm4: Pbm4Inner,
    pub pbm7: Pbm7Inner,
}

impl Default for PreAxiomReading {
    fn default() -> Self {
        Self {
            pbm2: Pbm2Sign::Plus,
            pbm4: Pbm4Inner::Prec,
            pbm7: Pbm7Inner::Y,
        }
    }
}

impl PreAxiomReading {
    pub fn all() -> Vec<PreAxiomReading> {
        let mut out = Vec::new();
        for pbm2 in [Pbm2Sign::Minus, Pbm2Sign::Plus] {
            for pbm4 in [Pbm4Inner::Circ, Pbm4Inner::Prec] {
                for pbm7 in [Pbm7Inner::Y, Pbm7Inner::X] {
                    out.push(PreAxiomReading { pbm2, pbm4, pbm7 });
                }
            }
        }
        out
    }
}

impl fmt::Display for PreAxiomReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.pbm2 {
            Pbm2Sign::Minus => "minus",
            Pbm2Sign::Plus => "plus",
        };
        let inner = match self.pbm4 {
            Pbm4Inner::Circ => "circ",
            Pbm4Inner::Prec => "prec",
        };
        let seven = match self.pbm7 {
            Pbm7Inner::Y => "y",
            Pbm7Inner::X => "x",
        };
        write!(f, "pbm2={sign},pbm4={inner},pbm7={seven}")
    }
}

impl FromStr for PreAxiomReading {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        PreAxiomReading::all()
            .into_iter()
            .find(|r| r.to_string() == text)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown axiom reading {text:?}")))
    }
}

/// The ten pre-bimodule axioms on slots `(x, y, v)`, each written as
/// left-hand side minus right-hand side.
pub fn pre_bimodule_identities(m: &PreBimodule, reading: PreAxiomReading) -> Vec<Identity<'_>> {
    let a = &m.base;
    let slots = vec![a.space(), a.space(), m.module];
    let f = a.field();
    let mk = |name: &'static str, body: Box<dyn Fn(&PreBimodule, &[Homogeneous]) -> Vector + Send + Sync>| {
        Identity::new(name, slots.clone(), f, move |v| body(m, v))
    };
    vec![
        mk("pbm1", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxy) = (&m.base, s(&h[0], &h[1]));
            let bv = m.beta.apply_unchecked(v);
            let sym = p.circ(x, y).add(&p.circ(y, x).signed(sxy));
            let mut r = m.ls(&sym, &bv);
            r -= &m.ls(&p.twist(x), &m.ls(y, v));
            r -= &m.ls(&p.twist(y), &m.ls(x, v)).signed(sxy);
            r
        })),
        mk("pbm2", Box::new(move |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxv) = (&m.base, s(&h[0], &h[2]));
            let bv = m.beta.apply_unchecked(v);
            let inner = m.lc(x, v).add(&m.rc(v, x).signed(sxv));
            let mut r = m.rs(&inner, &p.twist(y));
            r -= &m.ls(&p.twist(x), &m.rs(v, y));
            let last = m.rs(&bv, &p.succ(x, y)).signed(sxv);
            match reading.pbm2 {
                Pbm2Sign::Minus => r += &last,
                Pbm2Sign::Plus => r -= &last,
            }
            r
        })),
        mk("pbm3", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxv) = (&m.base, s(&h[0], &h[2]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.rp(&m.rp(v, x), &p.twist(y));
            r += &m.rp(&m.ls(x, v), &p.twist(y)).signed(sxv);
            r -= &m.rp(&bv, &p.circ(x, y));
            r -= &m.ls(&p.twist(x), &m.rp(v, y)).signed(sxv);
            r
        })),
        mk("pbm4", Box::new(move |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxv) = (&m.base, s(&h[0], &h[2]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.rp(&m.lp(x, v), &p.twist(y));
            r += &m.rp(&m.rs(v, x), &p.twist(y)).signed(sxv);
            r -= &m.lp(&p.twist(x), &m.rc(v, y));
            let inner = match reading.pbm4 {
                Pbm4Inner::Circ => p.circ(x, y),
                Pbm4Inner::Prec => p.prec(x, y),
            };
            r -= &m.rs(&bv, &inner).signed(sxv);
            r
        })),
        mk("pbm5", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxy) = (&m.base, s(&h[0], &h[1]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.lp(&p.prec(y, x), &bv);
            r += &m.lp(&p.succ(x, y), &bv).signed(sxy);
            r -= &m.lp(&p.twist(y), &m.lc(x, v));
            r -= &m.ls(&p.twist(x), &m.lp(y, v)).signed(sxy);
            r
        })),
        mk("pbm6", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxv) = (&m.base, s(&h[0], &h[2]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.rp(&m.ls(y, v), &p.twist(x));
            r += &m.ls(&p.circ(y, x), &bv).signed(sxv);
            r -= &m.ls(&p.twist(y), &m.rp(v, x));
            r -= &m.ls(&p.twist(y), &m.ls(x, v)).signed(sxv);
            r
        })),
        mk("pbm7", Box::new(move |m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxy) = (&m.base, s(&h[0], &h[1]));
            let bv = m.beta.apply_unchecked(v);
            let w = match reading.pbm7 {
                Pbm7Inner::Y => y,
                Pbm7Inner::X => x,
            };
            let mut r = m.rp(&m.rs(v, w), &p.twist(x));
            r += &m.rs(&m.rc(v, x), &p.twist(y)).signed(sxy);
            r -= &m.rs(&bv, &p.prec(y, x));
            r -= &m.rs(&bv, &p.succ(x, y)).signed(sxy);
            r
        })),
        mk("pbm8", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxv) = (&m.base, s(&h[0], &h[2]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.lp(&p.succ(y, x), &bv);
            r += &m.rs(&m.lc(y, v), &p.twist(x)).signed(sxv);
            r -= &m.ls(&p.twist(y), &m.lp(x, v));
            r -= &m.ls(&p.twist(y), &m.rs(v, x)).signed(sxv);
            r
        })),
        mk("pbm9", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, sxy) = (&m.base, s(&h[0], &h[1]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.rp(&m.rp(v, x), &p.twist(y));
            r += &m.rp(&m.rp(v, y), &p.twist(x)).signed(sxy);
            let sym = p.circ(x, y).add(&p.circ(y, x).signed(sxy));
            r -= &m.rp(&bv, &sym);
            r
        })),
        mk("pbm10", Box::new(|m, h| {
            let (x, y, v) = (&h[0].vector, &h[1].vector, &h[2].vector);
            let (p, syv) = (&m.base, s(&h[1], &h[2]));
            let bv = m.beta.apply_unchecked(v);
            let mut r = m.rp(&m.lp(x, v), &p.twist(y));
            r += &m.lp(&p.prec(x, y), &bv).signed(syv);
            let inner = m.rc(v, y).add(&m.lc(y, v).signed(syv));
            r -= &m.lp(&p.twist(x), &inner);
            r
        })),
    ]
}

/// Checks the pre-bimodule axioms under the calibrated reading. Refuses when
/// the base is not Hom-prealternative.
pub fn check_pre_bimodule(m: &PreBimodule) -> Result<LawReport> {
    check_pre_bimodule_with(m, PreAxiomReading::default())
}

pub fn check_pre_bimodule_with(m: &PreBimodule, reading: PreAxiomReading) -> Result<LawReport> {
    require(
        check_pre_law(&m.base, PreLaw::HomPrealternative),
        "base pre-algebra must be hom-prealternative",
    )?;
    let report = check_identities("pre-bimodule", &pre_bimodule_identities(m, reading));
    Ok(if reading == PreAxiomReading::default() {
        report
    } else {
        report.with_note(format!("axiom reading override: {reading}"))
    })
}

/// How a pre-bimodule gives a bimodule over the associated algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Projection {
    /// `(V, L≻, R≺, β)`
    Outer,
    /// `(V, L≺ + L≻, R≺ + R≻, β)`
    Circle,
}

impl FromStr for Projection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "outer" | "i" => Ok(Projection::Outer),
            "circle" | "ii" => Ok(Projection::Circle),
            other => Err(Error::InvalidParameter(format!("unknown projection {other:?}"))),
        }
    }
}

/// A bimodule over `alt_of(base)` obtained from a pre-bimodule.
pub fn project(m: &PreBimodule, how: Projection) -> Result<AltBimodule> {
    let (left, right) = match how {
        Projection::Outer => (m.left_succ.clone(), m.right_prec.clone()),
        Projection::Circle => (
            m.left_prec.add(&m.left_succ)?,
            m.right_prec.add(&m.right_succ)?,
        ),
    };
    AltBimodule::new(alt_of(&m.base), m.beta.clone(), left, right)
}

/// `(V, 0, R, L, 0, β)`: an `Alt(P)`-bimodule seen as a pre-bimodule over `P`.
pub fn embed(m: &AltBimodule, p: &HomPreAlgebra) -> Result<PreBimodule> {
    if alt_of(p) != m.base {
        return Err(Error::InvalidParameter(
            "bimodule base must equal the associated algebra of the pre-algebra".into(),
        ));
    }
    let (a, v, f) = (p.space(), m.module, p.field());
    PreBimodule::new(
        p.clone(),
        m.beta.clone(),
        PreActions {
            left_prec: Bilinear::zero(a, v, v, f),
            left_succ: m.left.clone(),
            right_prec: m.right.clone(),
            right_succ: Bilinear::zero(v, a, v, f),
        },
    )
}

/// Precomposes the algebra slot of both actions with `α²`. The base must be
/// multiplicative and the bimodule valid.
pub fn twist_alt_bimodule(m: &AltBimodule) -> Result<AltBimodule> {
    require(
        check_product_law(&m.base, ProductLaw::Multiplicative),
        "base algebra must be multiplicative",
    )?;
    require(check_alt_bimodule(m)?, "bimodule axioms must hold")?;
    let a2 = m.base.alpha().power(2)?;
    AltBimodule::new(
        m.base.clone(),
        m.beta.clone(),
        m.left.precompose_left(&a2)?,
        m.right.precompose_right(&a2)?,
    )
}

/// Precomposes the algebra slot of all four actions with `α²`. The base must be
/// multiplicative and the pre-bimodule valid; both projections of the result
/// are bimodules over the associated algebra.
pub fn twist_pre_bimodule(m: &PreBimodule) -> Result<PreBimodule> {
    require(
        check_pre_morphism(m.base.alpha(), &m.base, &m.base, false)?,
        "base pre-algebra must be multiplicative",
    )?;
    require(check_pre_bimodule(m)?, "pre-bimodule axioms must hold")?;
    let a2 = m.base.alpha().power(2)?;
    PreBimodule::new(
        m.base.clone(),
        m.beta.clone(),
        PreActions {
            left_prec: m.left_prec.precompose_left(&a2)?,
            left_succ: m.left_succ.precompose_left(&a2)?,
            right_prec: m.right_prec.precompose_right(&a2)?,
            right_succ: m.right_succ.precompose_right(&a2)?,
        },
    )
}

/// The bimodules induced by a weight-0 Rota–Baxter operator `R` on the base of
/// `m`: `(V, x ▷ v = R(x) ≻ v, v ◁ x = v ≺ R(x), β)` over
/// `(A, R(x)y + xR(y), α)`, and the pre-bimodule `(V, 0, ◁, ▷, 0, β)` over the
/// split pre-algebra.
pub fn rb_induced(m: &AltBimodule, r: &EvenMap) -> Result<(AltBimodule, PreBimodule)> {
    let split = rb_split(&m.base, r)?;
    require(check_alt_bimodule(m)?, "bimodule axioms must hold")?;
    let left = m.left.precompose_left(r)?;
    let right = m.right.precompose_right(r)?;
    let alt = AltBimodule::new(alt_of(&split), m.beta.clone(), left.clone(), right.clone())?;
    let (a, v, f) = (split.space(), m.module, split.field());
    let pre = PreBimodule::new(
        split,
        m.beta.clone(),
        PreActions {
            left_prec: Bilinear::zero(a, v, v, f),
            left_succ: left,
            right_prec: right,
            right_succ: Bilinear::zero(v, a, v, f),
        },
    )?;
    Ok((alt, pre))
}

/// Checks that `r` is a weight-0 Rota–Baxter operator before any induced
/// structure is built; exposed for reporting.
pub fn rb_precondition(m: &AltBimodule, r: &EvenMap) -> Result<LawReport> {
    check_operator(&OperatorKind::RotaBaxter(m.field().zero()), r, &m.base)
}

/// Whether `f: A → A′` together with `g: V → V′` intertwines two bimodules:
/// `g(x ≻ v) = f(x) ≻ g(v)`, `g(v ≺ x) = g(v) ≺ f(x)`, `g∘β = β′∘g`.
pub fn check_bimodule_morphism(
    f: &EvenMap,
    g: &EvenMap,
    src: &AltBimodule,
    dst: &AltBimodule,
) -> Result<LawReport> {
    let base = check_morphism(f, &src.base, &dst.base, false)?;
    src.module.ensure_eq(&g.domain())?;
    dst.module.ensure_eq(&g.codomain())?;
    let (a, v, fld) = (src.base.space(), src.module, src.field());
    let ids = vec![
        Identity::new("left", vec![a, v], fld, move |h| {
            let (x, w) = (&h[0].vector, &h[1].vector);
            g.apply_unchecked(&src.l(x, w))
                .sub(&dst.l(&f.apply_unchecked(x), &g.apply_unchecked(w)))
        }),
        Identity::new("right", vec![v, a], fld, move |h| {
            let (w, x) = (&h[0].vector, &h[1].vector);
            g.apply_unchecked(&src.r(w, x))
                .sub(&dst.r(&g.apply_unchecked(w), &f.apply_unchecked(x)))
        }),
        Identity::new("beta", vec![v], fld, move |h| {
            let w = &h[0].vector;
            g.apply_unchecked(&src.beta.apply_unchecked(w))
                .sub(&dst.beta.apply_unchecked(&g.apply_unchecked(w)))
        }),
    ];
    Ok(LawReport::combine(
        "bimodule-morphism",
        vec![base, check_identities("module", &ids)],
    ))
}
