//! Independent oracles for the integration tests. Everything here works
//! directly on structure constants and dense coordinate vectors, without the
//! library's identity machinery.

#![allow(dead_code)]

use hompre::{
    AltBimodule, Bilinear, EvenMap, Field, HomAlgebra, HomPreAlgebra, Homogeneous, Parity, PreBimodule,
    Scalar, SuperSpace, Vector,
};
use rand::Rng;

pub fn q() -> Field {
    Field::Rational
}

pub fn f(p: u64) -> Field {
    Field::prime(p).unwrap()
}

/// `Σ x_i y_j c[i][j][k] b_k` from the raw constants.
pub fn naive_apply(b: &Bilinear, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let field = b.field();
    let mut out = vec![field.zero(); b.out().dim()];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let xy = xi * yj;
            for (k, o) in out.iter_mut().enumerate() {
                let c = b.coeff(i, j, k);
                if !c.is_zero() {
                    *o += &(&xy * c);
                }
            }
        }
    }
    out
}

pub fn naive_map(m: &EvenMap, x: &[Scalar]) -> Vec<Scalar> {
    let field = m.field();
    (0..m.codomain().dim())
        .map(|i| {
            let mut s = field.zero();
            for (j, xj) in x.iter().enumerate() {
                s += &(m.entry(i, j) * xj);
            }
            s
        })
        .collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn signed(x: Vec<Scalar>, odd: bool) -> Vec<Scalar> {
    if odd {
        x.iter().map(|c| -c).collect()
    } else {
        x
    }
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn is_zero(x: &[Scalar]) -> bool {
    x.iter().all(Scalar::is_zero)
}

/// `(xy)α(z) − α(x)(yz)` on coordinate vectors.
pub fn naive_assoc(a: &HomAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
    let mu = a.product();
    let al = a.alpha();
    let l = naive_apply(mu, &naive_apply(mu, x, y), &naive_map(al, z));
    let r = naive_apply(mu, &naive_map(al, x), &naive_apply(mu, y, z));
    sub(&l, &r)
}

/// Left and right super-alternativity residuals at basis indices.
pub fn naive_alternators(a: &HomAlgebra, i: usize, j: usize, k: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let sp = a.space();
    let n = sp.dim();
    let e = |t| unit(a.field(), n, t);
    let odd = |s: usize, t: usize| sp.parity(s).is_odd() && sp.parity(t).is_odd();
    let left = add(&naive_assoc(a, &e(i), &e(j), &e(k)), &signed(naive_assoc(a, &e(j), &e(i), &e(k)), odd(i, j)));
    let right = add(&naive_assoc(a, &e(i), &e(j), &e(k)), &signed(naive_assoc(a, &e(i), &e(k), &e(j)), odd(j, k)));
    (left, right)
}

/// Whether `a` is Hom-alternative, by brute force over basis triples.
pub fn naive_is_alternative(a: &HomAlgebra) -> bool {
    let n = a.space().dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let (l, r) = naive_alternators(a, i, j, k);
                is_zero(&l) && is_zero(&r)
            })
        })
    })
}

/// `c'[i][j][k] = (−1)^{|i||j|} c[j][i][k]`.
pub fn naive_signed_opposite(b: &Bilinear) -> Bilinear {
    let sp = b.left();
    Bilinear::from_fn(sp, sp, sp, b.field(), |i, j, k| {
        b.coeff(j, i, k).clone().signed(sp.parity(i).is_odd() && sp.parity(j).is_odd())
    })
    .unwrap()
}

/// Index of `A`'s and `V`'s basis vectors inside `A ⊕ V` (even part first).
pub struct DirectSum {
    pub space: SuperSpace,
    a: SuperSpace,
    v: SuperSpace,
}

impl DirectSum {
    pub fn new(a: SuperSpace, v: SuperSpace) -> Self {
        Self {
            space: SuperSpace::new(a.n0() + v.n0(), a.n1() + v.n1()),
            a,
            v,
        }
    }

    pub fn of_a(&self, i: usize) -> usize {
        if i < self.a.n0() {
            i
        } else {
            self.a.n0() + self.v.n0() + (i - self.a.n0())
        }
    }

    pub fn of_v(&self, j: usize) -> usize {
        if j < self.v.n0() {
            self.a.n0() + j
        } else {
            self.a.n0() + self.v.n0() + self.a.n1() + (j - self.v.n0())
        }
    }

    /// `(f ⊕ g)` on the sum.
    pub fn map(&self, f: &EvenMap, g: &EvenMap) -> EvenMap {
        let mut cols = vec![Vec::new(); self.space.dim()];
        let field = f.field();
        for j in 0..self.a.dim() {
            let mut c = vec![field.zero(); self.space.dim()];
            for i in 0..self.a.dim() {
                c[self.of_a(i)] = f.entry(i, j).clone();
            }
            cols[self.of_a(j)] = c;
        }
        for j in 0..self.v.dim() {
            let mut c = vec![field.zero(); self.space.dim()];
            for i in 0..self.v.dim() {
                c[self.of_v(i)] = g.entry(i, j).clone();
            }
            cols[self.of_v(j)] = c;
        }
        EvenMap::from_fn(self.space, self.space, field, |i, j| cols[j][i].clone()).unwrap()
    }

    /// `(x, u)·(y, v) = (x·y, x▷v + u◁y)` from an algebra product and two
    /// actions.
    pub fn product(&self, mu: &Bilinear, left: &Bilinear, right: &Bilinear) -> Bilinear {
        let field = mu.field();
        let mut entries = Vec::new();
        for (i, j, k, c) in mu.nonzero_entries() {
            entries.push((self.of_a(i), self.of_a(j), self.of_a(k), c.clone()));
        }
        for (i, j, k, c) in left.nonzero_entries() {
            entries.push((self.of_a(i), self.of_v(j), self.of_v(k), c.clone()));
        }
        for (i, j, k, c) in right.nonzero_entries() {
            entries.push((self.of_v(i), self.of_a(j), self.of_v(k), c.clone()));
        }
        Bilinear::from_entries(self.space, self.space, self.space, field, entries).unwrap()
    }
}

/// The split null extension `A ⋉ V` of an alternative bimodule.
pub fn semidirect_alt(m: &AltBimodule) -> HomAlgebra {
    let a = m.base();
    let ds = DirectSum::new(a.space(), m.module());
    HomAlgebra::new(
        ds.product(a.product(), m.left_action(), m.right_action()),
        ds.map(a.alpha(), m.beta()),
    )
    .unwrap()
}

/// The split null extension `P ⋉ V` of a pre-bimodule: both products are
/// extended by the matching pair of actions.
pub fn semidirect_pre(m: &PreBimodule) -> HomPreAlgebra {
    let p = m.base();
    let ds = DirectSum::new(p.space(), m.module());
    let acts = m.actions();
    HomPreAlgebra::new(
        ds.product(p.prec_product(), &acts.left_prec, &acts.right_prec),
        ds.product(p.succ_product(), &acts.left_succ, &acts.right_succ),
        ds.map(p.alpha(), m.beta()),
    )
    .unwrap()
}

/// A random homogeneous vector of the given parity with small integer
/// coordinates (never zero unless the parity block is empty).
pub fn random_homogeneous(rng: &mut impl Rng, space: SuperSpace, field: Field, parity: Parity) -> Homogeneous {
    let range = space.indices(parity);
    loop {
        let coords: Vec<Scalar> = (0..space.dim())
            .map(|i| {
                if range.contains(&i) {
                    field.int(rng.gen_range(-3..=3))
                } else {
                    field.zero()
                }
            })
            .collect();
        let v = Vector::from_coords(space, field, coords).unwrap();
        if !v.is_zero() || range.is_empty() {
            return Homogeneous::new(v, parity).unwrap();
        }
    }
}

/// Random parity admissible for `space` (only parities with basis vectors).
pub fn random_parity(rng: &mut impl Rng, space: SuperSpace) -> Parity {
    match (space.n0() > 0, space.n1() > 0) {
        (true, true) => {
            if rng.gen_bool(0.5) {
                Parity::Odd
            } else {
                Parity::Even
            }
        }
        (false, true) => Parity::Odd,
        _ => Parity::Even,
    }
}

/// Positions `(i, j, k)` where a product may be nonzero without breaking
/// evenness.
pub fn even_slots(b: &Bilinear) -> Vec<(usize, usize, usize)> {
    let (l, r, o) = (b.left(), b.right(), b.out());
    let mut out = Vec::new();
    for i in 0..l.dim() {
        for j in 0..r.dim() {
            for k in 0..o.dim() {
                if o.parity(k) == l.parity(i) + r.parity(j) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// `c + 1` at `(i, j, k)`.
pub fn bump(b: &Bilinear, (i, j, k): (usize, usize, usize)) -> Bilinear {
    let c = b.coeff(i, j, k) + &b.field().one();
    b.with_coeff(i, j, k, c).unwrap()
}
