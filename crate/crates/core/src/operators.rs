//! Rota–Baxter, averaging, centroid and O-operators; the structures they
//! induce; and exhaustive search for operators over finite fields.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::bilinear::Bilinear;
use crate::bimodule::AltBimodule;
use crate::constructions::alt_of;
use crate::error::{Error, Result};
use crate::laws::{
    check_identities, check_morphism, check_pre_morphism, intertwining, Identity, LawReport,
};
use crate::linalg::{kernel, ColumnSpan};
use crate::linear::{EvenMap, Vector};
use crate::scalar::{Field, Scalar};
use crate::space::{Parity, SuperSpace};

/// Default number of candidates examined by [`search`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// `R(x)R(y) = R(R(x)y + xR(y) + λxy)`
    RotaBaxter(Scalar),
    /// `β(x)β(y) = β(β(x)y)`
    AveragingLeft,
    /// `β(x)β(y) = β(xβ(y))`
    AveragingRight,
    /// both averaging identities
    Averaging,
    /// `β(xy) = β(x)y = xβ(y)`
    Centroid,
    /// `β(xy) = β(x)β(y)`
    Endomorphism,
}

impl OperatorKind {
    pub const NAMES: [&'static str; 6] = [
        "rota-baxter",
        "averaging-left",
        "averaging-right",
        "averaging",
        "centroid",
        "endomorphism",
    ];

    /// Builds a kind from its name; the weight must be given exactly for
    /// `rota-baxter`.
    pub fn from_parts(name: &str, weight: Option<Scalar>) -> Result<Self> {
        let kind = match (name, weight) {
            ("rota-baxter", Some(w)) => return Ok(OperatorKind::RotaBaxter(w)),
            ("rota-baxter", None) => {
                return Err(Error::InvalidParameter("rota-baxter requires a weight".into()))
            }
            (_, Some(_)) if Self::NAMES.contains(&name) => {
                return Err(Error::InvalidParameter(format!(
                    "a weight is only meaningful for rota-baxter, not {name}"
                )))
            }
            ("averaging-left", None) => OperatorKind::AveragingLeft,
            ("averaging-right", None) => OperatorKind::AveragingRight,
            ("averaging", None) => OperatorKind::Averaging,
            ("centroid", None) => OperatorKind::Centroid,
            ("endomorphism", None) => OperatorKind::Endomorphism,
            (other, _) => {
                return Err(Error::InvalidParameter(format!(
                    "unknown operator kind {other:?}"
                )))
            }
        };
        Ok(kind)
    }

    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::RotaBaxter(_) => "rota-baxter",
            OperatorKind::AveragingLeft => "averaging-left",
            OperatorKind::AveragingRight => "averaging-right",
            OperatorKind::Averaging => "averaging",
            OperatorKind::Centroid => "centroid",
            OperatorKind::Endomorphism => "endomorphism",
        }
    }

    pub fn weight(&self) -> Option<&Scalar> {
        match self {
            OperatorKind::RotaBaxter(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::RotaBaxter(w) => write!(f, "rota-baxter(weight {w})"),
            other => f.write_str(other.name()),
        }
    }
}

fn ensure_operator(kind: &OperatorKind, map: &EvenMap, a: &HomAlgebra) -> Result<()> {
    a.space().ensure_eq(&map.domain())?;
    a.space().ensure_eq(&map.codomain())?;
    for found in std::iter::once(map.field()).chain(kind.weight().map(Scalar::field)) {
        if found != a.field() {
            return Err(Error::FieldMismatch {
                expected: a.field(),
                found,
            });
        }
    }
    Ok(())
}

fn operator_identities<'a>(kind: &'a OperatorKind, b: &'a EvenMap, a: &'a HomAlgebra) -> Vec<Identity<'a>> {
    let sp = a.space();
    let f = a.field();
    let pair = |name: &'static str, body: fn(&EvenMap, &HomAlgebra, &Vector, &Vector) -> Vector| {
        Identity::new(name, vec![sp; 2], f, move |v| body(b, a, &v[0].vector, &v[1].vector))
    };
    let mut ids = match kind {
        OperatorKind::RotaBaxter(w) => vec![Identity::new("rota-baxter", vec![sp; 2], f, move |v| {
            let (x, y) = (&v[0].vector, &v[1].vector);
            let (rx, ry) = (b.apply_unchecked(x), b.apply_unchecked(y));
            let mut inner = a.mul(&rx, y);
            inner += &a.mul(x, &ry);
            if !w.is_zero() {
                inner += &a.mul(x, y).scale(w);
            }
            a.mul(&rx, &ry).sub(&b.apply_unchecked(&inner))
        })],
        OperatorKind::AveragingLeft => vec![pair("averaging-left", averaging_left)],
        OperatorKind::AveragingRight => vec![pair("averaging-right", averaging_right)],
        OperatorKind::Averaging => vec![
            pair("averaging-left", averaging_left),
            pair("averaging-right", averaging_right),
        ],
        OperatorKind::Centroid => vec![
            pair("centroid-left", |b, a, x, y| {
                b.apply_unchecked(&a.mul(x, y)).sub(&a.mul(&b.apply_unchecked(x), y))
            }),
            pair("centroid-right", |b, a, x, y| {
                b.apply_unchecked(&a.mul(x, y)).sub(&a.mul(x, &b.apply_unchecked(y)))
            }),
        ],
        OperatorKind::Endomorphism => vec![pair("endomorphism", |b, a, x, y| {
            b.apply_unchecked(&a.mul(x, y))
                .sub(&a.mul(&b.apply_unchecked(x), &b.apply_unchecked(y)))
        })],
    };
    ids.push(intertwining(b, a.alpha(), a.alpha(), sp, f));
    ids
}

fn averaging_left(b: &EvenMap, a: &HomAlgebra, x: &Vector, y: &Vector) -> Vector {
    let bx = b.apply_unchecked(x);
    a.mul(&bx, &b.apply_unchecked(y))
        .sub(&b.apply_unchecked(&a.mul(&bx, y)))
}

fn averaging_right(b: &EvenMap, a: &HomAlgebra, x: &Vector, y: &Vector) -> Vector {
    let by = b.apply_unchecked(y);
    a.mul(&b.apply_unchecked(x), &by)
        .sub(&b.apply_unchecked(&a.mul(x, &by)))
}

/// Checks the defining identities of `kind` and commutation with `α`.
pub fn check_operator(kind: &OperatorKind, map: &EvenMap, a: &HomAlgebra) -> Result<LawReport> {
    ensure_operator(kind, map, a)?;
    Ok(check_identities(kind.to_string(), &operator_identities(kind, map, a)))
}

/// Fast yes/no version used by the search: stops at the first failure.
fn operator_holds(kind: &OperatorKind, map: &EvenMap, a: &HomAlgebra) -> bool {
    identities_hold(&operator_identities(kind, map, a))
}

fn identities_hold(ids: &[Identity<'_>]) -> bool {
    ids.iter().all(|id| {
        let dims: Vec<usize> = id.slots().iter().map(SuperSpace::dim).collect();
        let mut idx = vec![0; dims.len()];
        if dims.contains(&0) {
            return true;
        }
        loop {
            if !id.evaluate_basis(&idx).is_zero() {
                return false;
            }
            let mut k = dims.len();
            loop {
                if k == 0 {
                    return true;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < dims[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
    })
}

fn ensure_o_operator(t: &EvenMap, m: &AltBimodule) -> Result<()> {
    m.module().ensure_eq(&t.domain())?;
    m.base().space().ensure_eq(&t.codomain())?;
    if t.field() != m.field() {
        return Err(Error::FieldMismatch {
            expected: m.field(),
            found: t.field(),
        });
    }
    Ok(())
}

/// `T(u)T(v) = T(T(u) ≻ v + u ≺ T(v))` and `T∘β = α∘T`.
pub fn check_o_operator(t: &EvenMap, m: &AltBimodule) -> Result<LawReport> {
    ensure_o_operator(t, m)?;
    let a = m.base();
    let v = m.module();
    let f = m.field();
    let ids = vec![
        Identity::new("o-operator", vec![v; 2], f, move |h| {
            let (x, y) = (&h[0].vector, &h[1].vector);
            let (tx, ty) = (t.apply_unchecked(x), t.apply_unchecked(y));
            let inner = m
                .left_action()
                .apply_unchecked(&tx, y)
                .add(&m.right_action().apply_unchecked(x, &ty));
            a.mul(&tx, &ty).sub(&t.apply_unchecked(&inner))
        }),
        intertwining(t, m.beta(), a.alpha(), v, f),
    ];
    Ok(check_identities("o-operator", &ids))
}

/// The image `T(V) ⊆ A` with its transported structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageStructure {
    /// Inclusion `T(V) → A`; its columns are images of basis vectors of `V`.
    pub inclusion: EvenMap,
    /// Indices of the basis vectors of `V` whose images span `T(V)`.
    pub spanning: Vec<usize>,
    /// `T` viewed as a map `V → T(V)`.
    pub corestriction: EvenMap,
    /// `T(u) ≺ T(v) = T(u ≺ v)`, `T(u) ≻ T(v) = T(u ≻ v)` with twist `α`.
    pub pre: HomPreAlgebra,
}

/// Everything an O-operator induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OInduced {
    /// `u ≺ v = u ≺_M T(v)`, `u ≻ v = T(u) ≻_M v`, twist `β`.
    pub pre: HomPreAlgebra,
    pub image: ImageStructure,
    /// `T` is a morphism `(V, ∘, β) → (A, ∘_A, α)` and the corestriction is
    /// a morphism of pre-algebras onto the image.
    pub morphisms: LawReport,
}

/// The pre-algebra on `V` induced by an O-operator, the transported structure
/// on its image and the accompanying morphism checks.
pub fn o_induced(t: &EvenMap, m: &AltBimodule) -> Result<OInduced> {
    let report = check_o_operator(t, m)?;
    crate::constructions::require(report, "map must be an O-operator")?;
    let v = m.module();
    let f = m.field();
    let left = m.right_action().precompose_right(t)?;
    let right = m.left_action().precompose_left(t)?;
    let pre = HomPreAlgebra::new(left, right, m.beta().clone())?;
    let image = image_structure(t, &pre, m.base())?;

    let alt_v = alt_of(&pre);
    let as_algebra = check_morphism(t, &alt_v, m.base(), false)?;
    let corestricted = check_pre_morphism(&image.corestriction, &pre, &image.pre, false)?;
    let inclusion = check_morphism(&image.inclusion, &alt_of(&image.pre), m.base(), false)?;
    let morphisms = LawReport::combine(
        "o-operator-morphisms",
        vec![as_algebra, corestricted, inclusion],
    );
    debug_assert_eq!(pre.space(), v);
    debug_assert_eq!(pre.field(), f);
    Ok(OInduced {
        pre,
        image,
        morphisms,
    })
}

fn image_structure(t: &EvenMap, pre: &HomPreAlgebra, a: &HomAlgebra) -> Result<ImageStructure> {
    let v = t.domain();
    let f = t.field();
    let target = a.space();
    let mut span = ColumnSpan::new(f, target.dim());
    let mut spanning = Vec::new();
    let mut counts = [0usize; 2];
    for parity in [Parity::Even, Parity::Odd] {
        for j in v.indices(parity) {
            if span.insert(t.column(j).coords()) {
                spanning.push(j);
                counts[parity.as_u8() as usize] += 1;
            }
        }
    }
    let img = SuperSpace::new(counts[0], counts[1]);
    let columns: Vec<Vector> = spanning.iter().map(|&j| t.column(j)).collect();
    let inclusion = EvenMap::from_columns(img, target, f, &columns)?;
    let coords = |w: &Vector, what: &str| -> Result<Vector> {
        let c = span
            .solve(w.coords())
            .ok_or_else(|| Error::Image(format!("{what} leaves the image")))?;
        Vector::from_coords(img, f, c)
    };
    let corestriction_cols: Vec<Vector> = (0..v.dim())
        .map(|j| coords(&t.column(j), "T(v)"))
        .collect::<Result<_>>()?;
    let corestriction = EvenMap::from_columns(v, img, f, &corestriction_cols)?;

    // The transported products must not depend on the chosen preimages:
    // T(k ≺ u), T(u ≺ k), T(k ≻ u), T(u ≻ k) vanish for k ∈ ker T.
    let cols: Vec<Vec<_>> = (0..v.dim()).map(|j| t.column(j).coords().to_vec()).collect();
    for k in kernel(f, target.dim(), &cols) {
        let k = Vector::from_coords(v, f, k)?;
        for j in 0..v.dim() {
            let u = Vector::basis(v, f, j);
            for (w, what) in [
                (pre.prec(&k, &u), "k ≺ u"),
                (pre.prec(&u, &k), "u ≺ k"),
                (pre.succ(&k, &u), "k ≻ u"),
                (pre.succ(&u, &k), "u ≻ k"),
            ] {
                if !t.apply_unchecked(&w).is_zero() {
                    return Err(Error::Image(format!(
                        "transported product depends on the preimage: T({what}) ≠ 0 for k = {k} in ker T, u = b{j}"
                    )));
                }
            }
        }
    }
    let prod = |which: fn(&HomPreAlgebra, &Vector, &Vector) -> Vector| {
        Bilinear::from_pairs(img, img, img, f, |i, j| {
            let w = which(
                pre,
                &Vector::basis(v, f, spanning[i]),
                &Vector::basis(v, f, spanning[j]),
            );
            coords(&t.apply_unchecked(&w), "product").expect("products of images are images")
        })
    };
    let left = prod(HomPreAlgebra::prec)?;
    let right = prod(HomPreAlgebra::succ)?;
    let alpha_cols: Vec<Vector> = columns
        .iter()
        .map(|c| coords(&a.twist(c), "α(T(v))"))
        .collect::<Result<_>>()?;
    let alpha = EvenMap::from_columns(img, img, f, &alpha_cols)?;
    Ok(ImageStructure {
        inclusion,
        spanning,
        corestriction,
        pre: HomPreAlgebra::new(left, right, alpha)?,
    })
}

/// Which candidate maps the search enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Every even matrix over the field.
    All,
    /// Signed permutation matrices preserving parity.
    SignedPermutations,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Matching maps in enumeration order.
    pub maps: Vec<EvenMap>,
    pub examined: u64,
    /// Size of the candidate space (saturating).
    pub total: u128,
    /// `false` when the budget stopped the enumeration early.
    pub complete: bool,
}

/// Positions `(row, col)` an even endomorphism may occupy, in row-major order.
fn even_positions(space: SuperSpace) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..space.dim() {
        for j in 0..space.dim() {
            if space.parity(i) == space.parity(j) {
                out.push((i, j));
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// Enumerates even endomorphisms of `space` over a prime field and keeps the
/// ones accepted by `accept`.
///
/// In [`SearchMode::All`] candidate `m` assigns to the `k`-th admissible
/// position (row-major) the `k`-th base-`p` digit of `m`, the last position
/// being least significant. Results keep enumeration order regardless of
/// parallelism.
pub fn search_maps(
    space: SuperSpace,
    field: Field,
    mode: SearchMode,
    budget: u64,
    accept: impl Fn(&EvenMap) -> bool + Sync,
) -> Result<SearchResult> {
    let Some(p) = field.order() else {
        return Err(Error::InvalidParameter(
            "search needs a finite field; Q is infinite".into(),
        ));
    };
    let build = |assign: &[(usize, usize, Scalar)]| {
        let mut m = EvenMap::zero(space, space, field);
        for (i, j, c) in assign {
            m.set_entry(*i, *j, c.clone());
        }
        m
    };
    match mode {
        SearchMode::All => {
            let positions = even_positions(space);
            let total = (p as u128).checked_pow(positions.len() as u32).unwrap_or(u128::MAX);
            let examined = total.min(budget as u128) as u64;
            let decode = |mut m: u64| {
                let mut assign = Vec::with_capacity(positions.len());
                for &(i, j) in positions.iter().rev() {
                    let digit = m % p;
                    m /= p;
                    if digit != 0 {
                        assign.push((i, j, field.element(digit)));
                    }
                }
                build(&assign)
            };
            let maps: Vec<EvenMap> = (0..examined)
                .into_par_iter()
                .filter_map(|m| {
                    let map = decode(m);
                    accept(&map).then_some(map)
                })
                .collect();
            Ok(SearchResult {
                maps,
                examined,
                total,
                complete: examined as u128 == total,
            })
        }
        SearchMode::SignedPermutations => {
            let (n0, n1) = space.dims();
            let mut perms = Vec::new();
            for even in permutations(n0) {
                for odd in permutations(n1) {
                    let mut perm = even.clone();
                    perm.extend(odd.iter().map(|x| x + n0));
                    perms.push(perm);
                }
            }
            let n = space.dim();
            let signs = 1u128 << n;
            let total = perms.len() as u128 * signs;
            let examined = total.min(budget as u128) as u64;
            let minus = -field.one();
            let maps: Vec<EvenMap> = (0..examined)
                .into_par_iter()
                .filter_map(|m| {
                    let perm = &perms[(m as u128 / signs) as usize];
                    let bits = m as u128 % signs;
                    // column j goes to ±b_{perm[j]}; the first column is the
                    // most significant sign bit
                    let assign: Vec<(usize, usize, Scalar)> = (0..n)
                        .map(|j| {
                            let neg = bits >> (n - 1 - j) & 1 == 1;
                            let c = if neg { minus.clone() } else { field.one() };
                            (perm[j], j, c)
                        })
                        .collect();
                    let map = build(&assign);
                    accept(&map).then_some(map)
                })
                .collect();
            Ok(SearchResult {
                maps,
                examined,
                total,
                complete: examined as u128 == total,
            })
        }
    }
}

/// Searches even endomorphisms of `a` satisfying the identities of `kind`.
pub fn search(a: &HomAlgebra, kind: &OperatorKind, mode: SearchMode, budget: u64) -> Result<SearchResult> {
    if let Some(w) = kind.weight() {
        if w.field() != a.field() {
            return Err(Error::FieldMismatch {
                expected: a.field(),
                found: w.field(),
            });
        }
    }
    search_maps(a.space(), a.field(), mode, budget, |m| operator_holds(kind, m, a))
}

/// Searches endomorphisms of a pre-algebra (maps preserving `≺`, `≻` and
/// commuting with `α`).
pub fn search_pre_endomorphisms(p: &HomPreAlgebra, mode: SearchMode, budget: u64) -> Result<SearchResult> {
    search_maps(p.space(), p.field(), mode, budget, |m| {
        check_pre_morphism(m, p, p, false).is_ok_and(|r| r.passed)
    })
}
