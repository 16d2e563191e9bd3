//! Builtin example instances.

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::bilinear::Bilinear;
use crate::constructions::{rb_split, tensor_alt, yau_twist, yau_twist_algebra};
use crate::error::{Error, Result};
use crate::linear::{EvenMap, Vector};
use crate::scalar::Field;
use crate::space::SuperSpace;

/// Oriented quaternionic triples of the octonion units: `e_i e_j = e_k` along
/// each line and its cyclic rotations, with reversed order giving `−e_k`.
pub const FANO_LINES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

/// A builtin instance of any document kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Algebra(HomAlgebra),
    Pre(HomPreAlgebra),
    Map(EvenMap),
}

/// Names accepted by [`builtin`]; `truncpoly<k>` and `matrix<n>` take a size
/// suffix (e.g. `truncpoly3`, `matrix2`), `zero<n0>x<n1>` two.
pub const NAMES: [&str; 18] = [
    "zero<n0>x<n1>",
    "grassmann1",
    "grassmann1-twisted",
    "grassmann-alpha2",
    "truncpoly<k>",
    "integration<k>",
    "octonions",
    "octonions-twisted",
    "octonion-involution",
    "matrix<n>",
    "grassmann-truncpoly3",
    "grassmann-octonions",
    "p3-split",
    "graded-split",
    "graded-split-twisted",
    "graded-twist",
    "octonion-split",
    "graded-octonion-split-twisted",
];

pub fn zero(field: Field, n0: usize, n1: usize) -> HomAlgebra {
    HomAlgebra::untwisted(Bilinear::zero_product(SuperSpace::new(n0, n1), field))
        .expect("zero algebra")
}

/// `Λ¹ = span{1, ε}` with `ε` odd and `ε² = 0`.
pub fn grassmann1(field: Field) -> HomAlgebra {
    let s = SuperSpace::new(1, 1);
    let one = field.one();
    let mu = Bilinear::from_entries(
        s,
        s,
        s,
        field,
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one)],
    )
    .expect("valid structure constants");
    HomAlgebra::untwisted(mu).expect("square product")
}

/// `α₂ = diag(1, 2)` on `Λ¹`, an automorphism since `2 ≠ 0`.
pub fn grassmann_alpha2(field: Field) -> EvenMap {
    EvenMap::diagonal(SuperSpace::new(1, 1), field, &[1, 2]).expect("even diagonal")
}

/// The Yau twist of `Λ¹` along `α₂`.
pub fn grassmann1_twisted(field: Field) -> Result<HomAlgebra> {
    yau_twist_algebra(&grassmann1(field), &grassmann_alpha2(field))
}

/// `P_k = F[t]/(t^k)`, purely even with basis `1, t, …, t^{k−1}`.
pub fn truncpoly(field: Field, k: usize) -> Result<HomAlgebra> {
    if k == 0 {
        return Err(Error::InvalidParameter("truncpoly needs k ≥ 1".into()));
    }
    let s = SuperSpace::even(k);
    let entries = (0..k).flat_map(|i| (0..k - i).map(move |j| (i, j, i + j)));
    let mu = Bilinear::from_entries(
        s,
        s,
        s,
        field,
        entries.map(|(i, j, l)| (i, j, l, field.one())),
    )?;
    HomAlgebra::untwisted(mu)
}

/// `R(t^i) = t^{i+1}/(i+1)` on `P_k`, with `R(t^{k−1}) = 0`.
pub fn integration(field: Field, k: usize) -> Result<EvenMap> {
    if k == 0 {
        return Err(Error::InvalidParameter("integration needs k ≥ 1".into()));
    }
    let s = SuperSpace::even(k);
    let mut m = EvenMap::zero(s, s, field);
    for i in 0..k - 1 {
        let c = field.ratio(1, i as i64 + 1).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "integration on P{k} needs {} invertible in {field}",
                i + 1
            ))
        })?;
        m.set_entry(i + 1, i, c);
    }
    Ok(m)
}

fn octonion_sign(i: usize, j: usize) -> (usize, i64) {
    match (i, j) {
        (0, j) => (j, 1),
        (i, 0) => (i, 1),
        (i, j) if i == j => (0, -1),
        _ => {
            for &(a, b, c) in &FANO_LINES {
                for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
                    if (i, j) == (p, q) {
                        return (r, 1);
                    }
                    if (i, j) == (q, p) {
                        return (r, -1);
                    }
                }
            }
            unreachable!("every pair of distinct units lies on a line")
        }
    }
}

/// The octonions with basis `e₀ = 1, e₁, …, e₇`, purely even.
///
/// The table is validated on construction: the norm `Σ xᵢ²` must be
/// multiplicative on basis pairs and on the sums `eᵢ + eⱼ`.
pub fn octonions(field: Field) -> Result<HomAlgebra> {
    let s = SuperSpace::even(8);
    let mut entries = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let (k, sign) = octonion_sign(i, j);
            entries.push((i, j, k, field.int(sign)));
        }
    }
    let o = HomAlgebra::untwisted(Bilinear::from_entries(s, s, s, field, entries)?)?;
    let norm = |v: &Vector| {
        v.coords()
            .iter()
            .fold(field.zero(), |acc, c| &acc + &(c * c))
    };
    for i in 0..8 {
        for j in 0..8 {
            let x = Vector::basis(s, field, i).add(&Vector::basis(s, field, 1));
            let y = Vector::basis(s, field, j).add(&Vector::basis(s, field, 2));
            if norm(&o.mul(&x, &y)) != &norm(&x) * &norm(&y) {
                return Err(Error::InvalidParameter(format!(
                    "octonion table is not normed at ({i}, {j})"
                )));
            }
        }
    }
    Ok(o)
}

/// `σ = diag(1,1,1,1,−1,−1,−1,−1)`, an automorphism of the octonions.
pub fn octonion_involution(field: Field) -> EvenMap {
    EvenMap::diagonal(SuperSpace::even(8), field, &[1, 1, 1, 1, -1, -1, -1, -1])
        .expect("even diagonal")
}

/// The Yau twist of the octonions along `σ`.
pub fn octonions_twisted(field: Field) -> Result<HomAlgebra> {
    yau_twist_algebra(&octonions(field)?, &octonion_involution(field))
}

/// `M_n(F)` with `E_ij` at index `i·n + j`.
pub fn matrix(field: Field, n: usize) -> Result<HomAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("matrix size must be positive".into()));
    }
    let s = SuperSpace::even(n * n);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, field.one()));
            }
        }
    }
    HomAlgebra::untwisted(Bilinear::from_entries(s, s, s, field, entries)?)
}

/// `Λ¹ ⊗ P₃`, dims `(3, 3)`.
pub fn grassmann_truncpoly3(field: Field) -> Result<HomAlgebra> {
    Ok(tensor_alt(&grassmann1(field), &truncpoly(field, 3)?)?.algebra)
}

/// `Λ¹ ⊗ O`, dims `(8, 8)`: graded and not associative.
pub fn grassmann_octonions(field: Field) -> Result<HomAlgebra> {
    Ok(tensor_alt(&grassmann1(field), &octonions(field)?)?.algebra)
}

/// `P₃` split by the integration operator.
pub fn p3_split(field: Field) -> Result<HomPreAlgebra> {
    rb_split(&truncpoly(field, 3)?, &integration(field, 3)?)
}

/// `Λ¹ ⊗ P₃` split by `id ⊗ R`.
pub fn graded_split(field: Field) -> Result<HomPreAlgebra> {
    let t = tensor_alt(&grassmann1(field), &truncpoly(field, 3)?)?;
    let r = t.tensor_map(&EvenMap::identity(SuperSpace::new(1, 1), field), &integration(field, 3)?)?;
    rb_split(&t.algebra, &r)
}

/// `α₂ ⊗ id` on `Λ¹ ⊗ P₃`.
pub fn graded_twist(field: Field) -> Result<EvenMap> {
    let t = tensor_alt(&grassmann1(field), &truncpoly(field, 3)?)?;
    t.tensor_map(&grassmann_alpha2(field), &EvenMap::identity(SuperSpace::even(3), field))
}

/// The Yau twist of [`graded_split`] along `α₂ ⊗ id`: a graded,
/// multiplicative Hom-prealternative superalgebra with `α ≠ id`.
pub fn graded_split_twisted(field: Field) -> Result<HomPreAlgebra> {
    yau_twist(&graded_split(field)?, &graded_twist(field)?)
}

/// `P₃ ⊗ O` split by `R ⊗ id`: a pre-algebra whose associated algebra is
/// alternative but not associative.
pub fn octonion_split(field: Field) -> Result<HomPreAlgebra> {
    let t = tensor_alt(&truncpoly(field, 3)?, &octonions(field)?)?;
    let r = t.tensor_map(&integration(field, 3)?, &EvenMap::identity(SuperSpace::even(8), field))?;
    rb_split(&t.algebra, &r)
}

/// `(Λ¹ ⊗ P₃) ⊗ O` split by `(id ⊗ R) ⊗ id` and Yau-twisted by
/// `(α₂ ⊗ id) ⊗ σ`: graded, non-associative and genuinely twisted.
pub fn graded_octonion_split_twisted(field: Field) -> Result<HomPreAlgebra> {
    let inner = tensor_alt(&grassmann1(field), &truncpoly(field, 3)?)?;
    let grass_id = EvenMap::identity(SuperSpace::new(1, 1), field);
    let p3_id = EvenMap::identity(SuperSpace::even(3), field);
    let r_inner = inner.tensor_map(&grass_id, &integration(field, 3)?)?;
    let twist_inner = inner.tensor_map(&grassmann_alpha2(field), &p3_id)?;
    let outer = tensor_alt(&inner.algebra, &octonions(field)?)?;
    let r = outer.tensor_map(&r_inner, &EvenMap::identity(SuperSpace::even(8), field))?;
    let beta = outer.tensor_map(&twist_inner, &octonion_involution(field))?;
    yau_twist(&rb_split(&outer.algebra, &r)?, &beta)
}

fn sized(name: &str, prefix: &str) -> Option<Result<usize>> {
    let rest = name.strip_prefix(prefix)?;
    Some(
        rest.parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad size in {name:?}"))),
    )
}

/// Looks up a builtin instance by name.
pub fn builtin(name: &str, field: Field) -> Result<Builtin> {
    use Builtin::*;
    if let Some(k) = sized(name, "truncpoly") {
        return Ok(Algebra(truncpoly(field, k?)?));
    }
    if let Some(k) = sized(name, "integration") {
        return Ok(Map(integration(field, k?)?));
    }
    if let Some(n) = sized(name, "matrix") {
        return Ok(Algebra(matrix(field, n?)?));
    }
    if let Some(rest) = name.strip_prefix("zero") {
        let parsed = rest
            .split_once('x')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
        let (n0, n1) = parsed
            .ok_or_else(|| Error::InvalidParameter(format!("expected zero<n0>x<n1>, got {name:?}")))?;
        return Ok(Algebra(zero(field, n0, n1)));
    }
    Ok(match name {
        "grassmann1" => Algebra(grassmann1(field)),
        "grassmann1-twisted" => Algebra(grassmann1_twisted(field)?),
        "grassmann-alpha2" => Map(grassmann_alpha2(field)),
        "octonions" => Algebra(octonions(field)?),
        "octonions-twisted" => Algebra(octonions_twisted(field)?),
        "octonion-involution" => Map(octonion_involution(field)),
        "grassmann-truncpoly3" => Algebra(grassmann_truncpoly3(field)?),
        "grassmann-octonions" => Algebra(grassmann_octonions(field)?),
        "p3-split" => Pre(p3_split(field)?),
        "graded-split" => Pre(graded_split(field)?),
        "graded-split-twisted" => Pre(graded_split_twisted(field)?),
        "graded-twist" => Map(graded_twist(field)?),
        "octonion-split" => Pre(octonion_split(field)?),
        "graded-octonion-split-twisted" => Pre(graded_octonion_split_twisted(field)?),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown builtin {other:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    })
}

/// Multiplicative Hom-alternative superalgebras used to calibrate the
/// Hom-Jordan reading.
pub fn jordan_calibration_set(field: Field) -> Result<Vec<(String, HomAlgebra)>> {
    let mut out = vec![
        ("grassmann1".to_string(), grassmann1(field)),
        ("grassmann1-twisted".to_string(), grassmann1_twisted(field)?),
        ("truncpoly3".to_string(), truncpoly(field, 3)?),
        ("grassmann-truncpoly3".to_string(), grassmann_truncpoly3(field)?),
        ("octonions".to_string(), octonions(field)?),
        ("octonions-twisted".to_string(), octonions_twisted(field)?),
        ("grassmann-octonions".to_string(), grassmann_octonions(field)?),
        ("matrix2".to_string(), matrix(field, 2)?),
        ("zero2x1".to_string(), zero(field, 2, 1)),
    ];
    // the 48-dimensional member is left out: arity-4 checks on it are costly
    // and it adds no new shape of product
    for (name, p) in pre_calibration_set(field)?.into_iter().filter(|(_, p)| p.space().dim() <= 24) {
        out.push((format!("alt({name})"), crate::constructions::alt_of(&p)));
    }
    Ok(out)
}

/// Multiplicative Hom-prealternative superalgebras whose regular
/// pre-bimodules calibrate the pre-bimodule axioms.
pub fn pre_calibration_set(field: Field) -> Result<Vec<(String, HomPreAlgebra)>> {
    Ok(vec![
        ("p3-split".to_string(), p3_split(field)?),
        ("graded-split".to_string(), graded_split(field)?),
        ("graded-split-twisted".to_string(), graded_split_twisted(field)?),
        ("octonion-split".to_string(), octonion_split(field)?),
        (
            "graded-octonion-split-twisted".to_string(),
            graded_octonion_split_twisted(field)?,
        ),
    ])
}
