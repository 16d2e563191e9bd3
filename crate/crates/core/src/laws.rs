//! Hom-associators, component associators and exhaustive law checks.
//!
//! Every law is a list of multilinear [`Identity`] values. A law holds iff each
//! identity vanishes on every tuple of homogeneous basis vectors; Koszul sign
//! exponents come from the basis parities. Because the identities are
//! multilinear, the basis verdict equals the verdict over all homogeneous
//! elements.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::error::{Error, Result};
use crate::linear::{EvenMap, Homogeneous, Vector};
use crate::scalar::Field;
use crate::space::{koszul, Parity, SuperSpace};

type Evaluator<'a> = dyn Fn(&[Homogeneous]) -> Vector + Send + Sync + 'a;

/// A signed multilinear expression that must vanish.
pub struct Identity<'a> {
    name: String,
    slots: Vec<SuperSpace>,
    field: Field,
    eval: Box<Evaluator<'a>>,
}

impl<'a> Identity<'a> {
    pub fn new(
        name: impl Into<String>,
        slots: Vec<SuperSpace>,
        field: Field,
        eval: impl Fn(&[Homogeneous]) -> Vector + Send + Sync + 'a,
    ) -> Self {
        Self {
            name: name.into(),
            slots,
            field,
            eval: Box::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[SuperSpace] {
        &self.slots
    }

    /// Evaluates on arbitrary homogeneous arguments.
    pub fn evaluate(&self, args: &[Homogeneous]) -> Vector {
        assert_eq!(args.len(), self.arity(), "identity {}", self.name);
        (self.eval)(args)
    }

    pub fn evaluate_basis(&self, indices: &[usize]) -> Vector {
        let args: Vec<Homogeneous> = self
            .slots
            .iter()
            .zip(indices)
            .map(|(s, &i)| Homogeneous::basis(*s, self.field, i))
            .collect();
        self.evaluate(&args)
    }

    pub fn tuple_count(&self) -> usize {
        self.slots.iter().map(SuperSpace::dim).product()
    }

    fn decode(&self, mut t: usize) -> Vec<usize> {
        let mut idx = vec![0; self.arity()];
        for (slot, out) in self.slots.iter().zip(idx.iter_mut()).rev() {
            let d = slot.dim();
            *out = t % d;
            t /= d;
        }
        idx
    }

    fn parities(&self, indices: &[usize]) -> Vec<Parity> {
        self.slots
            .iter()
            .zip(indices)
            .map(|(s, &i)| s.parity(i))
            .collect()
    }
}

/// A failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub indices: Vec<usize>,
    pub parities: Vec<Parity>,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySummary {
    pub name: String,
    pub arity: usize,
    pub tuples: usize,
    pub failures: usize,
}

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub passed: bool,
    /// Distinct basis tuples evaluated, summed over tuple shapes.
    pub tuples_checked: usize,
    pub identities: Vec<IdentitySummary>,
    /// First failure in identity order, then lexicographic tuple order.
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn failures(&self) -> usize {
        self.identities.iter().map(|s| s.failures).sum()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Merges reports of sub-checks into one verdict.
    pub fn combine(law: impl Into<String>, parts: Vec<LawReport>) -> LawReport {
        let mut out = LawReport {
            law: law.into(),
            passed: true,
            tuples_checked: 0,
            identities: Vec::new(),
            witness: None,
            notes: Vec::new(),
        };
        for p in parts {
            out.passed &= p.passed;
            out.tuples_checked += p.tuples_checked;
            out.identities.extend(p.identities);
            if out.witness.is_none() {
                out.witness = p.witness;
            }
            out.notes.extend(p.notes);
        }
        out
    }

    /// A passing report that evaluated nothing, used when a precondition makes
    /// the check moot.
    pub fn trivial(law: impl Into<String>) -> LawReport {
        Self::combine(law, Vec::new())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({} tuples checked",
            self.law, self.tuples_checked
        )?;
        if !self.passed {
            write!(f, ", {} failing", self.failures())?;
        }
        write!(f, ")")?;
        if let Some(w) = &self.witness {
            let par: Vec<String> = w.parities.iter().map(ToString::to_string).collect();
            write!(
                f,
                "; witness {} at {:?} parities [{}]: residual {}",
                w.identity,
                w.indices,
                par.join(","),
                w.residual
            )?;
        }
        Ok(())
    }
}

/// Runs every identity on every basis tuple.
pub fn check_identities(law: impl Into<String>, identities: &[Identity<'_>]) -> LawReport {
    let mut summaries = Vec::with_capacity(identities.len());
    let mut witness = None;
    let mut shapes: Vec<&[SuperSpace]> = Vec::new();
    let mut tuples_checked = 0;
    for id in identities {
        let total = id.tuple_count();
        let failing: Vec<usize> = (0..total)
            .into_par_iter()
            .filter(|&t| !id.evaluate_basis(&id.decode(t)).is_zero())
            .collect();
        if witness.is_none() {
            if let Some(&t) = failing.first() {
                let indices = id.decode(t);
                witness = Some(Witness {
                    identity: id.name.clone(),
                    parities: id.parities(&indices),
                    residual: id.evaluate_basis(&indices),
                    indices,
                });
            }
        }
        if !shapes.contains(&id.slots()) {
            shapes.push(id.slots());
            tuples_checked += total;
        }
        summaries.push(IdentitySummary {
            name: id.name.clone(),
            arity: id.arity(),
            tuples: total,
            failures: failing.len(),
        });
    }
    LawReport {
        law: law.into(),
        passed: witness.is_none(),
        tuples_checked,
        identities: summaries,
        witness,
        notes: Vec::new(),
    }
}

#[inline]
fn s(a: &Homogeneous, b: &Homogeneous) -> bool {
    koszul(a.parity, b.parity)
}

fn ensure_vectors(space: SuperSpace, field: Field, xs: &[&Vector]) -> Result<()> {
    for x in xs {
        space.ensure_eq(&x.space())?;
        if x.field() != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: x.field(),
            });
        }
    }
    Ok(())
}

pub(crate) fn assoc(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let lhs = a.mul(&a.mul(x, y), &a.twist(z));
    let rhs = a.mul(&a.twist(x), &a.mul(y, z));
    lhs.sub(&rhs)
}

/// `as(x, y, z) = (xy)α(z) − α(x)(yz)`.
pub fn hom_associator(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    ensure_vectors(a.space(), a.field(), &[x, y, z])?;
    Ok(assoc(a, x, y, z))
}

/// Which component associator of a Hom-pre-superalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    /// `(x∘y)≻α(z) − α(x)≻(y≻z)`
    One,
    /// `(x≻y)≺α(z) − α(x)≻(y≺z)`
    Two,
    /// `(x≺y)≺α(z) − α(x)≺(y∘z)`
    Three,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::One, Component::Two, Component::Three];

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

pub(crate) fn component(p: &HomPreAlgebra, c: Component, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let (ax, az) = (p.twist(x), p.twist(z));
    match c {
        Component::One => p.succ(&p.circ(x, y), &az).sub(&p.succ(&ax, &p.succ(y, z))),
        Component::Two => p.prec(&p.succ(x, y), &az).sub(&p.succ(&ax, &p.prec(y, z))),
        Component::Three => p.prec(&p.prec(x, y), &az).sub(&p.prec(&ax, &p.circ(y, z))),
    }
}

pub fn pre_associator(
    p: &HomPreAlgebra,
    c: Component,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector> {
    ensure_vectors(p.space(), p.field(), &[x, y, z])?;
    Ok(component(p, c, x, y, z))
}

/// Reading of the summation in the Hom-Jordan identity
/// `Σ (−1)^{t(x+z)} as(x∘y, α(z), α(t))`: which three of the four variables
/// are permuted cyclically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JordanCycle {
    Xyz,
    Xyt,
    Xzt,
}

/// The interpretation under which plus-algebras of the multiplicative
/// Hom-alternative corpus are Hom-Jordan; see [`crate::calibration`].
pub const DEFAULT_JORDAN_CYCLE: JordanCycle = JordanCycle::Xyt;

impl JordanCycle {
    pub const ALL: [JordanCycle; 3] = [JordanCycle::Xyz, JordanCycle::Xyt, JordanCycle::Xzt];

    fn slots(self) -> [usize; 3] {
        match self {
            JordanCycle::Xyz => [0, 1, 2],
            JordanCycle::Xyt => [0, 1, 3],
            JordanCycle::Xzt => [0, 2, 3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            JordanCycle::Xyz => "xyz",
            JordanCycle::Xyt => "xyt",
            JordanCycle::Xzt => "xzt",
        }
    }
}

impl fmt::Display for JordanCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<&str> = self.slots().iter().map(|&i| ["x", "y", "z", "t"][i]).collect();
        write!(f, "({})", v.join(","))
    }
}

impl FromStr for JordanCycle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        JordanCycle::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown Jordan cycle {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductLaw {
    HomAssociative,
    LeftHomAlternative,
    RightHomAlternative,
    HomAlternative,
    HomFlexible,
    SuperCommutative,
    HomJordan(JordanCycle),
    Multiplicative,
}

impl ProductLaw {
    pub const ALL: [ProductLaw; 8] = [
        ProductLaw::HomAssociative,
        ProductLaw::LeftHomAlternative,
        ProductLaw::RightHomAlternative,
        ProductLaw::HomAlternative,
        ProductLaw::HomFlexible,
        ProductLaw::SuperCommutative,
        ProductLaw::HomJordan(DEFAULT_JORDAN_CYCLE),
        ProductLaw::Multiplicative,
    ];
}

impl fmt::Display for ProductLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductLaw::HomAssociative => write!(f, "hom-associative"),
            ProductLaw::LeftHomAlternative => write!(f, "left-hom-alternative"),
            ProductLaw::RightHomAlternative => write!(f, "right-hom-alternative"),
            ProductLaw::HomAlternative => write!(f, "hom-alternative"),
            ProductLaw::HomFlexible => write!(f, "hom-flexible"),
            ProductLaw::SuperCommutative => write!(f, "super-commutative"),
            ProductLaw::HomJordan(c) if *c == DEFAULT_JORDAN_CYCLE => write!(f, "hom-jordan"),
            ProductLaw::HomJordan(c) => write!(f, "hom-jordan:{}", c.name()),
            ProductLaw::Multiplicative => write!(f, "multiplicative"),
        }
    }
}

impl FromStr for ProductLaw {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hom-associative" => ProductLaw::HomAssociative,
            "left-hom-alternative" => ProductLaw::LeftHomAlternative,
            "right-hom-alternative" => ProductLaw::RightHomAlternative,
            "hom-alternative" => ProductLaw::HomAlternative,
            "hom-flexible" => ProductLaw::HomFlexible,
            "super-commutative" => ProductLaw::SuperCommutative,
            "hom-jordan" => ProductLaw::HomJordan(DEFAULT_JORDAN_CYCLE),
            "multiplicative" => ProductLaw::Multiplicative,
            other => match other.strip_prefix("hom-jordan:") {
                Some(c) => ProductLaw::HomJordan(c.parse()?),
                None => return Err(Error::UnknownLaw(other.to_string())),
            },
        })
    }
}

fn left_alternative(a: &HomAlgebra) -> Identity<'_> {
    let sp = a.space();
    Identity::new("left-hom-alternative", vec![sp; 3], a.field(), move |v| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let mut r = assoc(a, &x.vector, &y.vector, &z.vector);
        r += &assoc(a, &y.vector, &x.vector, &z.vector).signed(s(x, y));
        r
    })
}

fn right_alternative(a: &HomAlgebra) -> Identity<'_> {
    let sp = a.space();
    Identity::new("right-hom-alternative", vec![sp; 3], a.field(), move |v| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let mut r = assoc(a, &x.vector, &y.vector, &z.vector);
        r += &assoc(a, &x.vector, &z.vector, &y.vector).signed(s(y, z));
        r
    })
}

fn super_commutative(a: &HomAlgebra) -> Identity<'_> {
    Identity::new("super-commutative", vec![a.space(); 2], a.field(), move |v| {
        let (x, y) = (&v[0], &v[1]);
        a.mul(&x.vector, &y.vector)
            .sub(&a.mul(&y.vector, &x.vector).signed(s(x, y)))
    })
}

fn jordan_cyclic(a: &HomAlgebra, cycle: JordanCycle) -> Identity<'_> {
    let name = format!("hom-jordan-cyclic{cycle}");
    Identity::new(name, vec![a.space(); 4], a.field(), move |v| {
        let [p, q, r] = cycle.slots();
        let mut args: Vec<&Homogeneous> = v.iter().collect();
        let mut total = Vector::zero(a.space(), a.field());
        for _ in 0..3 {
            let (x, y, z, t) = (args[0], args[1], args[2], args[3]);
            let odd = t.parity.is_odd() && (x.parity + z.parity).is_odd();
            let xy = a.mul(&x.vector, &y.vector);
            let term = assoc(a, &xy, &a.twist(&z.vector), &a.twist(&t.vector));
            total += &term.signed(odd);
            // new[p] = old[q], new[q] = old[r], new[r] = old[p]
            let first = args[p];
            args[p] = args[q];
            args[q] = args[r];
            args[r] = first;
        }
        total
    })
}

/// The identities making up `law` for the algebra `a`.
pub fn product_identities(a: &HomAlgebra, law: ProductLaw) -> Vec<Identity<'_>> {
    let sp = a.space();
    let f = a.field();
    match law {
        ProductLaw::HomAssociative => vec![Identity::new("hom-associative", vec![sp; 3], f, move |v| {
            assoc(a, &v[0].vector, &v[1].vector, &v[2].vector)
        })],
        ProductLaw::LeftHomAlternative => vec![left_alternative(a)],
        ProductLaw::RightHomAlternative => vec![right_alternative(a)],
        ProductLaw::HomAlternative => vec![left_alternative(a), right_alternative(a)],
        ProductLaw::HomFlexible => vec![Identity::new("hom-flexible", vec![sp; 3], f, move |v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let odd = s(x, y) ^ s(x, z) ^ s(y, z);
            let mut r = assoc(a, &x.vector, &y.vector, &z.vector);
            r += &assoc(a, &z.vector, &y.vector, &x.vector).signed(odd);
            r
        })],
        ProductLaw::SuperCommutative => vec![super_commutative(a)],
        ProductLaw::HomJordan(cycle) => vec![super_commutative(a), jordan_cyclic(a, cycle)],
        ProductLaw::Multiplicative => vec![Identity::new("multiplicative", vec![sp; 2], f, move |v| {
            let (x, y) = (&v[0].vector, &v[1].vector);
            a.twist(&a.mul(x, y))
                .sub(&a.mul(&a.twist(x), &a.twist(y)))
        })],
    }
}

pub fn check_product_law(a: &HomAlgebra, law: ProductLaw) -> LawReport {
    let report = check_identities(law.to_string(), &product_identities(a, law));
    match law {
        ProductLaw::HomJordan(c) => report.with_note(format!(
            "cyclic sum over {c}{}",
            if c == DEFAULT_JORDAN_CYCLE {
                " (calibrated default; rerun with calibrate-jordan)"
            } else {
                " (explicit override)"
            }
        )),
        _ => report,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PreLaw {
    HomPrealternative,
    LeftPrealternative,
    RightPrealternative,
    FlexiblePrealternative,
}

impl PreLaw {
    pub const ALL: [PreLaw; 4] = [
        PreLaw::HomPrealternative,
        PreLaw::LeftPrealternative,
        PreLaw::RightPrealternative,
        PreLaw::FlexiblePrealternative,
    ];
}

impl fmt::Display for PreLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PreLaw::HomPrealternative => "hom-prealternative",
            PreLaw::LeftPrealternative => "left-prealternative",
            PreLaw::RightPrealternative => "right-prealternative",
            PreLaw::FlexiblePrealternative => "flexible-prealternative",
        })
    }
}

impl FromStr for PreLaw {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PreLaw::ALL
            .into_iter()
            .find(|l| l.to_string() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

/// The four multilinear Hom-prealternative axioms, written out term by term.
fn prealternative_axioms(p: &HomPreAlgebra) -> Vec<Identity<'_>> {
    let sp = p.space();
    let f = p.field();
    let axiom = |name: &'static str, body: fn(&HomPreAlgebra, &[Homogeneous]) -> Vector| {
        Identity::new(name, vec![sp; 3], f, move |v| body(p, v))
    };
    vec![
        axiom("pa3", |p, v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let (xv, yv, zv) = (&x.vector, &y.vector, &z.vector);
            let mut r = p.prec(&p.succ(xv, yv), &p.twist(zv));
            r -= &p.succ(&p.twist(xv), &p.prec(yv, zv));
            let mut t = p.prec(&p.prec(yv, xv), &p.twist(zv));
            t -= &p.prec(&p.twist(yv), &p.circ(xv, zv));
            r += &t.signed(s(x, y));
            r
        }),
        axiom("pa4", |p, v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let (xv, yv, zv) = (&x.vector, &y.vector, &z.vector);
            let mut r = p.prec(&p.succ(xv, yv), &p.twist(zv));
            r -= &p.succ(&p.twist(xv), &p.prec(yv, zv));
            let mut t = p.succ(&p.circ(xv, zv), &p.twist(yv));
            t -= &p.succ(&p.twist(xv), &p.succ(zv, yv));
            r += &t.signed(s(y, z));
            r
        }),
        axiom("pa5", |p, v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let (xv, yv, zv) = (&x.vector, &y.vector, &z.vector);
            let mut r = p.succ(&p.circ(xv, yv), &p.twist(zv));
            r -= &p.succ(&p.twist(xv), &p.succ(yv, zv));
            let mut t = p.succ(&p.circ(yv, xv), &p.twist(zv));
            t -= &p.succ(&p.twist(yv), &p.succ(xv, zv));
            r += &t.signed(s(x, y));
            r
        }),
        axiom("pa6", |p, v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let (xv, yv, zv) = (&x.vector, &y.vector, &z.vector);
            let mut r = p.prec(&p.prec(xv, yv), &p.twist(zv));
            r -= &p.prec(&p.twist(xv), &p.circ(yv, zv));
            let mut t = p.prec(&p.prec(xv, zv), &p.twist(yv));
            t -= &p.prec(&p.twist(xv), &p.circ(zv, yv));
            r += &t.signed(s(y, z));
            r
        }),
    ]
}

fn component_law<'a>(
    p: &'a HomPreAlgebra,
    prefix: &str,
    swap: fn(&[Homogeneous]) -> (bool, [usize; 3]),
) -> Vec<Identity<'a>> {
    Component::ALL
        .into_iter()
        .map(|c| {
            Identity::new(
                format!("{prefix}-{}", c.index()),
                vec![p.space(); 3],
                p.field(),
                move |v| {
                    let (odd, [i, j, k]) = swap(v);
                    let mut r = component(p, c, &v[0].vector, &v[1].vector, &v[2].vector);
                    r += &component(p, c, &v[i].vector, &v[j].vector, &v[k].vector).signed(odd);
                    r
                },
            )
        })
        .collect()
}

pub fn pre_identities(p: &HomPreAlgebra, law: PreLaw) -> Vec<Identity<'_>> {
    match law {
        PreLaw::HomPrealternative => prealternative_axioms(p),
        PreLaw::LeftPrealternative => component_law(p, "left", |v| (s(&v[0], &v[1]), [1, 0, 2])),
        PreLaw::RightPrealternative => component_law(p, "right", |v| (s(&v[1], &v[2]), [0, 2, 1])),
        PreLaw::FlexiblePrealternative => {
            component_law(p, "flexible", |v| (s(&v[0], &v[2]), [2, 1, 0]))
        }
    }
}

pub fn check_pre_law(p: &HomPreAlgebra, law: PreLaw) -> LawReport {
    let report = check_identities(law.to_string(), &pre_identities(p, law));
    if law != PreLaw::HomPrealternative {
        return report;
    }
    let diag = odd_diagonal_residuals(p);
    let note = if diag.passed {
        format!(
            "odd-diagonal quadratic forms (x∘x)≻α(z) − α(x)≻(x≻z) and (z≺x)≺α(x) − α(z)≺(x∘x) vanish on all {} odd-basis tuples (informational)",
            diag.tuples_checked
        )
    } else {
        format!(
            "odd-diagonal quadratic forms are nonzero on {} of {} odd-basis tuples (informational, not part of the verdict): {}",
            diag.failures(),
            diag.tuples_checked,
            diag
        )
    };
    report.with_note(note)
}

/// The repeated-variable axioms at odd basis vectors `x`, which the
/// multilinear forms do not constrain. Informational only.
pub fn odd_diagonal_residuals(p: &HomPreAlgebra) -> LawReport {
    let sp = p.space();
    let odd = SuperSpace::new(0, sp.n1());
    let lift = move |h: &Homogeneous| {
        let mut coords = vec![p.field().zero(); sp.n0()];
        coords.extend(h.vector.coords().iter().cloned());
        Vector::from_coords(sp, p.field(), coords).expect("odd block embeds")
    };
    let ids = vec![
        Identity::new("pa1-odd-diagonal", vec![odd, sp], p.field(), move |v| {
            let x = lift(&v[0]);
            let z = &v[1].vector;
            p.succ(&p.circ(&x, &x), &p.twist(z))
                .sub(&p.succ(&p.twist(&x), &p.succ(&x, z)))
        }),
        Identity::new("pa2-odd-diagonal", vec![odd, sp], p.field(), move |v| {
            let x = lift(&v[0]);
            let z = &v[1].vector;
            p.prec(&p.prec(z, &x), &p.twist(&x))
                .sub(&p.prec(&p.twist(z), &p.circ(&x, &x)))
        }),
    ];
    check_identities("odd-diagonal", &ids)
}

fn check_map_between(f: &EvenMap, src: SuperSpace, dst: SuperSpace, field: Field) -> Result<()> {
    src.ensure_eq(&f.domain())?;
    dst.ensure_eq(&f.codomain())?;
    if f.field() != field {
        return Err(Error::FieldMismatch {
            expected: field,
            found: f.field(),
        });
    }
    Ok(())
}

/// Weak morphism: `f(xy) = f(x)f(y)`; a (strict) morphism also satisfies
/// `f∘α = α′∘f`.
pub fn check_morphism(f: &EvenMap, src: &HomAlgebra, dst: &HomAlgebra, weak: bool) -> Result<LawReport> {
    check_map_between(f, src.space(), dst.space(), src.field())?;
    let mut ids = vec![Identity::new("product", vec![src.space(); 2], src.field(), move |v| {
        let (x, y) = (&v[0].vector, &v[1].vector);
        f.apply_unchecked(&src.mul(x, y))
            .sub(&dst.mul(&f.apply_unchecked(x), &f.apply_unchecked(y)))
    })];
    if !weak {
        ids.push(intertwining(f, src.alpha(), dst.alpha(), src.space(), src.field()));
    }
    let law = if weak { "weak-morphism" } else { "morphism" };
    Ok(check_identities(law, &ids))
}

/// Morphism of Hom-pre-superalgebras: preserves `≺` and `≻` (and the twists
/// unless `weak`).
pub fn check_pre_morphism(
    f: &EvenMap,
    src: &HomPreAlgebra,
    dst: &HomPreAlgebra,
    weak: bool,
) -> Result<LawReport> {
    check_map_between(f, src.space(), dst.space(), src.field())?;
    let sp = src.space();
    let fld = src.field();
    let mut ids = vec![
        Identity::new("prec", vec![sp; 2], fld, move |v| {
            let (x, y) = (&v[0].vector, &v[1].vector);
            f.apply_unchecked(&src.prec(x, y))
                .sub(&dst.prec(&f.apply_unchecked(x), &f.apply_unchecked(y)))
        }),
        Identity::new("succ", vec![sp; 2], fld, move |v| {
            let (x, y) = (&v[0].vector, &v[1].vector);
            f.apply_unchecked(&src.succ(x, y))
                .sub(&dst.succ(&f.apply_unchecked(x), &f.apply_unchecked(y)))
        }),
    ];
    if !weak {
        ids.push(intertwining(f, src.alpha(), dst.alpha(), sp, fld));
    }
    let law = if weak { "weak-pre-morphism" } else { "pre-morphism" };
    Ok(check_identities(law, &ids))
}

/// `f∘a − b∘f` on basis vectors.
pub(crate) fn intertwining<'a>(
    f: &'a EvenMap,
    a: &'a EvenMap,
    b: &'a EvenMap,
    space: SuperSpace,
    field: Field,
) -> Identity<'a> {
    Identity::new("twist", vec![space], field, move |v| {
        let x = &v[0].vector;
        f.apply_unchecked(&a.apply_unchecked(x))
            .sub(&b.apply_unchecked(&f.apply_unchecked(x)))
    })
}
