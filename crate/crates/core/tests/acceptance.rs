//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check is exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use hompre::bimodule::{
    alt_bimodule_identities, check_alt_bimodule, check_pre_bimodule, embed, pre_bimodule_identities, project,
    rb_induced, twist_alt_bimodule, twist_pre_bimodule,
};
use hompre::calibration::calibrate_jordan;
use hompre::constructions::{
    alt_of, averaging_product, centroid_twist, derived_n, plus_jordan, rb_split, scale, tensor_alt, transpose,
    yau_twist,
};
use hompre::corpus;
use hompre::laws::{check_pre_law, check_product_law, pre_identities, product_identities, Identity};
use hompre::operators::{check_o_operator, check_operator, o_induced, search, search_pre_endomorphisms};
use hompre::{
    AltBimodule, EvenMap, Field, HomAlgebra, HomPreAlgebra, Homogeneous, JordanCycle, LawReport, OperatorKind,
    PreAxiomReading, PreBimodule, PreLaw, ProductLaw, Projection, SearchMode, SuperSpace,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(r: &LawReport, what: &str) -> Result<(), String> {
    ensure(r.passed, || format!("{what}: {r}"))
}

fn unwrap<T>(r: hompre::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn rb0(field: Field) -> OperatorKind {
    OperatorKind::RotaBaxter(field.zero())
}

/// `id ⊗ R` on `Λ¹ ⊗ P₃` and the tensor algebra itself.
fn graded_p3(field: Field) -> (HomAlgebra, EvenMap) {
    let t = tensor_alt(&corpus::grassmann1(field), &corpus::truncpoly(field, 3).unwrap()).unwrap();
    let r = t
        .tensor_map(&EvenMap::identity(SuperSpace::new(1, 1), field), &corpus::integration(field, 3).unwrap())
        .unwrap();
    (t.algebra, r)
}

fn criterion_1() -> Outcome {
    use ProductLaw::*;
    let f = q();
    let declared: Vec<(&str, HomAlgebra, Vec<ProductLaw>)> = vec![
        ("zero(2,1)", corpus::zero(f, 2, 1), vec![HomAssociative, HomAlternative, HomFlexible, SuperCommutative]),
        ("grassmann1", corpus::grassmann1(f), vec![HomAssociative, HomAlternative, HomFlexible, SuperCommutative]),
        ("truncpoly3", corpus::truncpoly(f, 3).unwrap(), vec![HomAssociative, HomAlternative, SuperCommutative]),
        (
            "grassmann-truncpoly3",
            corpus::grassmann_truncpoly3(f).unwrap(),
            vec![HomAssociative, HomAlternative, HomFlexible, SuperCommutative],
        ),
        ("octonions", corpus::octonions(f).unwrap(), vec![HomAlternative, HomFlexible, Multiplicative]),
        ("matrix2", corpus::matrix(f, 2).unwrap(), vec![HomAssociative, HomAlternative, HomFlexible]),
        ("grassmann-octonions", corpus::grassmann_octonions(f).unwrap(), vec![HomAlternative, HomFlexible]),
    ];
    let mut checked = 0;
    for (name, a, laws) in &declared {
        for law in laws {
            let r = check_product_law(a, *law);
            passes(&r, &format!("{name} {law}"))?;
            ensure(r.tuples_checked > 0, || format!("{name} {law}: vacuous"))?;
            checked += 1;
        }
        ensure(naive_is_alternative(a), || format!("{name}: brute-force alternativity disagrees"))?;
    }
    let o = &declared[4].1;
    let r = check_product_law(o, HomAssociative);
    ensure(!r.passed, || "octonions pass hom-associative".into())?;
    let w = r.witness.as_ref().ok_or("no witness for octonions")?;
    let e = |i| unit(f, 8, i);
    let expected = naive_assoc(o, &e(w.indices[0]), &e(w.indices[1]), &e(w.indices[2]));
    ensure(!is_zero(&expected) && w.residual.coords() == expected.as_slice(), || {
        format!("octonion witness {:?} does not reproduce", w.indices)
    })?;
    Ok(format!(
        "{checked} declared laws hold; octonions non-associative, witness {:?} residual {}",
        w.indices, w.residual
    ))
}

/// Hom-prealternative instances minted by every construction.
fn minted() -> Result<Vec<(String, HomPreAlgebra)>, String> {
    let f = q();
    let mut out: Vec<(String, HomPreAlgebra)> = Vec::new();
    let p3 = corpus::truncpoly(f, 3).unwrap();
    let r = corpus::integration(f, 3).unwrap();
    let (gp3, gr) = graded_p3(f);
    let split = unwrap(rb_split(&p3, &r), "rb_split(P3)")?;
    let gsplit = unwrap(rb_split(&gp3, &gr), "rb_split(Λ¹⊗P3)")?;
    out.push(("rb_split(P3,R)".into(), split.clone()));
    out.push(("rb_split(Λ¹⊗P3,id⊗R)".into(), gsplit.clone()));
    out.push(("rb_split(P3⊗O,R⊗id)".into(), corpus::octonion_split(f).unwrap()));
    let twisted = unwrap(yau_twist(&gsplit, &corpus::graded_twist(f).unwrap()), "yau_twist")?;
    out.push(("yau_twist(Λ¹⊗P3 split, α₂⊗id)".into(), twisted.clone()));

    // every weight-0 Rota–Baxter operator of P3 over F5 and every
    // endomorphism of the split over F3
    let f5 = Field::prime(5).unwrap();
    let p3_5 = corpus::truncpoly(f5, 3).unwrap();
    let found = unwrap(search(&p3_5, &rb0(f5), SearchMode::All, u64::MAX), "search")?;
    for (n, m) in found.maps.iter().enumerate().step_by(4) {
        out.push((format!("rb_split(P3/F5, RB #{n})"), unwrap(rb_split(&p3_5, m), "rb_split")?));
    }
    let f3 = Field::prime(3).unwrap();
    let split3 = corpus::p3_split(f3).unwrap();
    let endos = unwrap(search_pre_endomorphisms(&split3, SearchMode::All, u64::MAX), "endo search")?;
    ensure(endos.maps.len() > 2, || "too few pre-endomorphisms".into())?;
    for (n, b) in endos.maps.iter().enumerate() {
        out.push((format!("yau_twist(P3 split/F3, endo #{n})"), unwrap(yau_twist(&split3, b), "yau_twist")?));
    }
    for n in 1..=3 {
        out.push((format!("derived_{n}(twisted)"), unwrap(derived_n(&twisted, n), "derived")?));
    }
    out.push(("scale(twisted, 2)".into(), unwrap(scale(&twisted, &f.int(2)), "scale")?));
    out.push(("scale(twisted, -1/3)".into(), unwrap(scale(&twisted, &f.ratio(-1, 3).unwrap()), "scale")?));
    out.push((
        "o_induced(R, reg P3)".into(),
        unwrap(o_induced(&r, &AltBimodule::regular(&p3).unwrap()), "o_induced")?.pre,
    ));
    let gind = unwrap(o_induced(&gr, &AltBimodule::regular(&gp3).unwrap()), "o_induced graded")?;
    out.push(("o_induced(id⊗R, reg Λ¹⊗P3)".into(), gind.pre));
    out.push(("o_induced image (id⊗R)".into(), gind.image.pre));
    let transposed: Vec<(String, HomPreAlgebra)> =
        out.iter().map(|(n, p)| (format!("transpose({n})"), transpose(p))).collect();
    out.extend(transposed);
    Ok(out)
}

fn criterion_2(minted: &[(String, HomPreAlgebra)]) -> Outcome {
    for (name, p) in minted {
        passes(&check_pre_law(p, PreLaw::HomPrealternative), name)?;
        let a = alt_of(p);
        passes(&check_product_law(&a, ProductLaw::HomAlternative), &format!("alt_of({name})"))?;
        if a.space().dim() <= 12 {
            ensure(naive_is_alternative(&a), || format!("alt_of({name}): brute force disagrees"))?;
        }
    }
    Ok(format!("{} minted instances; every alt_of is hom-alternative", minted.len()))
}

fn criterion_3(minted: &[(String, HomPreAlgebra)]) -> Outcome {
    let mut n = 0;
    for (name, p) in minted.iter().filter(|(n, _)| !n.starts_with("transpose(")) {
        let t = transpose(p);
        passes(&check_pre_law(&t, PreLaw::HomPrealternative), &format!("transpose({name})"))?;
        let alt_t = alt_of(&t);
        let alt = alt_of(p);
        let expected = naive_signed_opposite(alt.product());
        ensure(alt_t.product() == &expected && alt_t.alpha() == alt.alpha(), || {
            format!("Alt(transpose({name})) differs from the signed opposite")
        })?;
        n += 1;
    }
    Ok(format!("{n} transposes prealternative; Alt(P') = Alt(P)^op entrywise"))
}

fn criterion_4() -> Outcome {
    let f = q();
    let instances = vec![
        ("zero(2,1)", corpus::zero(f, 2, 1)),
        ("grassmann1", corpus::grassmann1(f)),
        ("grassmann1 α₂", corpus::grassmann1_twisted(f).unwrap()),
        ("truncpoly3", corpus::truncpoly(f, 3).unwrap()),
        ("grassmann-truncpoly3", corpus::grassmann_truncpoly3(f).unwrap()),
        ("octonions", corpus::octonions(f).unwrap()),
        ("octonions σ", corpus::octonions_twisted(f).unwrap()),
        ("matrix2", corpus::matrix(f, 2).unwrap()),
        ("grassmann-octonions", corpus::grassmann_octonions(f).unwrap()),
    ];
    for (name, a) in &instances {
        passes(&check_product_law(a, ProductLaw::Multiplicative), &format!("{name} multiplicative"))?;
        passes(&check_product_law(a, ProductLaw::HomAlternative), name)?;
        let plus = plus_jordan(a);
        passes(&check_product_law(&plus, ProductLaw::SuperCommutative), &format!("{name}⁺"))?;
        passes(&check_product_law(&plus, ProductLaw::HomJordan(hompre::laws::DEFAULT_JORDAN_CYCLE)), &format!("{name}⁺"))?;
    }
    let cal = unwrap(calibrate_jordan(f), "calibration")?;
    ensure(cal.survivors.len() == 1 && cal.confirms_default(), || format!("calibration: {cal}"))?;
    ensure(JordanCycle::ALL.len() == 3, || "unexpected candidate count".into())?;
    Ok(format!(
        "{} plus-algebras Hom-Jordan; calibration over {} instances leaves exactly {} (recorded as default)",
        instances.len(),
        cal.rows.len(),
        cal.survivors[0]
    ))
}

fn criterion_5() -> Outcome {
    let f = q();
    let t = unwrap(tensor_alt(&corpus::grassmann1(f), &corpus::octonions(f).unwrap()), "tensor")?;
    ensure(t.algebra.space().dims() == (8, 8), || format!("dims {:?}", t.algebra.space().dims()))?;
    let r = check_product_law(&t.algebra, ProductLaw::HomAlternative);
    passes(&r, "Λ¹⊗O")?;
    ensure(r.tuples_checked == 4096, || format!("{} tuples checked", r.tuples_checked))?;
    ensure(naive_is_alternative(&t.algebra), || "brute force disagrees".into())?;
    ensure(!check_product_law(&t.algebra, ProductLaw::HomAssociative).passed, || "Λ¹⊗O associative".into())?;
    Ok(format!("Λ¹⊗O dims (8,8) hom-alternative; {} triples checked", r.tuples_checked))
}

fn criterion_6() -> Outcome {
    let f = q();
    let mut built = 0;
    let corpus_q = vec![
        corpus::grassmann1(f),
        corpus::grassmann1_twisted(f).unwrap(),
        corpus::truncpoly(f, 3).unwrap(),
        corpus::octonions(f).unwrap(),
        corpus::octonions_twisted(f).unwrap(),
        corpus::matrix(f, 2).unwrap(),
        corpus::grassmann_truncpoly3(f).unwrap(),
    ];
    for a in &corpus_q {
        for lambda in [f.int(1), f.int(2), f.int(-1), f.ratio(1, 3).unwrap(), f.zero()] {
            let l = EvenMap::scalar(a.space(), lambda.clone());
            for b in [unwrap(centroid_twist(a, &l), "centroid_twist")?, unwrap(averaging_product(a, &l), "averaging")?] {
                passes(&check_product_law(&b, ProductLaw::HomAlternative), &format!("λ = {lambda}"))?;
                built += 1;
            }
        }
    }
    let f3 = Field::prime(3).unwrap();
    let small = vec![
        ("zero(1,1)", corpus::zero(f3, 1, 1)),
        ("zero(2,1)", corpus::zero(f3, 2, 1)),
        ("grassmann1", corpus::grassmann1(f3)),
        ("grassmann1 α₂", corpus::grassmann1_twisted(f3).unwrap()),
        ("truncpoly2", corpus::truncpoly(f3, 2).unwrap()),
        ("matrix1", corpus::matrix(f3, 1).unwrap()),
    ];
    let mut found = 0;
    for (name, a) in &small {
        let (n0, n1) = a.space().dims();
        ensure(n0 <= 2 && n1 <= 1, || format!("{name} too large"))?;
        let res = unwrap(search(a, &OperatorKind::Averaging, SearchMode::All, u64::MAX), "search")?;
        ensure(res.complete, || format!("{name}: search incomplete"))?;
        for d in &res.maps {
            let b = unwrap(averaging_product(a, d), name)?;
            passes(&check_product_law(&b, ProductLaw::HomAlternative), &format!("{name} ∂"))?;
            ensure(naive_is_alternative(&b), || format!("{name}: brute force disagrees"))?;
            found += 1;
        }
    }
    Ok(format!(
        "{built} scalar centroid/averaging instances and {found} searched averaging operators over F3 give hom-alternative products"
    ))
}

/// Weight-0 Rota–Baxter identity from the raw constants.
fn naive_is_rb0(a: &HomAlgebra, r: &EvenMap) -> bool {
    let n = a.space().dim();
    let fld = a.field();
    let mu = a.product();
    let commutes = r.compose(a.alpha()).unwrap() == a.alpha().compose(r).unwrap();
    commutes
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (unit(fld, n, i), unit(fld, n, j));
                let (rx, ry) = (naive_map(r, &x), naive_map(r, &y));
                let lhs = naive_apply(mu, &rx, &ry);
                let inner = add(&naive_apply(mu, &rx, &y), &naive_apply(mu, &x, &ry));
                is_zero(&sub(&lhs, &naive_map(r, &inner)))
            })
        })
}

fn criterion_7() -> Outcome {
    let f = q();
    let p3 = corpus::truncpoly(f, 3).unwrap();
    let r = corpus::integration(f, 3).unwrap();
    passes(&unwrap(check_operator(&rb0(f), &r, &p3), "check_operator")?, "integration")?;
    passes(&check_pre_law(&unwrap(rb_split(&p3, &r), "rb_split")?, PreLaw::HomPrealternative), "rb_split(P3)")?;
    let (gp3, gr) = graded_p3(f);
    passes(&check_pre_law(&unwrap(rb_split(&gp3, &gr), "rb_split")?, PreLaw::HomPrealternative), "rb_split(Λ¹⊗P3)")?;

    let f5 = Field::prime(5).unwrap();
    let p3_5 = corpus::truncpoly(f5, 3).unwrap();
    let res = unwrap(search(&p3_5, &rb0(f5), SearchMode::All, u64::MAX), "search")?;
    let reduced = EvenMap::from_fn(p3_5.space(), p3_5.space(), f5, |i, j| match (i, j) {
        (1, 0) => f5.one(),
        (2, 1) => f5.int(3),
        _ => f5.zero(),
    })
    .unwrap();
    ensure(res.maps.contains(&reduced), || "reduced integration operator not found".into())?;
    ensure(res.maps.iter().all(|m| naive_is_rb0(&p3_5, m)), || "unsound search result".into())?;

    // completeness against an independent enumeration on Λ¹ over F3
    let f3 = Field::prime(3).unwrap();
    let g = corpus::grassmann1(f3);
    let got = unwrap(search(&g, &rb0(f3), SearchMode::All, u64::MAX), "search")?.maps;
    let mut expected = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            let m = EvenMap::diagonal(g.space(), f3, &[a, b]).unwrap();
            if naive_is_rb0(&g, &m) {
                expected.push(m);
            }
        }
    }
    let mut got_sorted: Vec<String> = got.iter().map(|m| format!("{m:?}")).collect();
    let mut exp_sorted: Vec<String> = expected.iter().map(|m| format!("{m:?}")).collect();
    got_sorted.sort();
    exp_sorted.sort();
    ensure(got_sorted == exp_sorted, || "search on Λ¹/F3 is not complete".into())?;
    Ok(format!(
        "integration RB on P3; both splits prealternative; {} RB operators on P3/F5 incl. R(1)=t, R(t)=3t²",
        res.maps.len()
    ))
}

fn criterion_8() -> Outcome {
    let f3 = Field::prime(3).unwrap();
    let f5 = Field::prime(5).unwrap();
    let instances = vec![
        ("P3/F5", corpus::truncpoly(f5, 3).unwrap()),
        ("Λ¹/F3", corpus::grassmann1(f3)),
        ("truncpoly2/F3", corpus::truncpoly(f3, 2).unwrap()),
        ("matrix1/F5", corpus::matrix(f5, 1).unwrap()),
    ];
    let mut total = 0;
    for (name, a) in &instances {
        let field = a.field();
        let res = unwrap(search(a, &rb0(field), SearchMode::All, u64::MAX), "search")?;
        let m = AltBimodule::regular(a).unwrap();
        for r in &res.maps {
            passes(&unwrap(check_o_operator(r, &m), "check_o_operator")?, name)?;
            let induced = unwrap(o_induced(r, &m), name)?;
            ensure(induced.pre == unwrap(rb_split(a, r), "rb_split")?, || format!("{name}: o_induced ≠ rb_split"))?;
            passes(&induced.morphisms, &format!("{name} morphisms"))?;
            total += 1;
        }
    }
    let f = q();
    let (gp3, gr) = graded_p3(f);
    let induced = unwrap(o_induced(&gr, &AltBimodule::regular(&gp3).unwrap()), "graded")?;
    ensure(induced.pre == rb_split(&gp3, &gr).unwrap(), || "graded o_induced ≠ rb_split".into())?;
    passes(&induced.morphisms, "graded morphisms")?;
    Ok(format!("{} weight-0 RB operators are O-operators; induced = split; morphism reports pass", total + 1))
}

fn criterion_9() -> Outcome {
    let f = q();
    let alts = vec![
        ("zero(2,1)", corpus::zero(f, 2, 1)),
        ("grassmann1", corpus::grassmann1(f)),
        ("grassmann1 α₂", corpus::grassmann1_twisted(f).unwrap()),
        ("truncpoly3", corpus::truncpoly(f, 3).unwrap()),
        ("octonions", corpus::octonions(f).unwrap()),
        ("octonions σ", corpus::octonions_twisted(f).unwrap()),
        ("matrix2", corpus::matrix(f, 2).unwrap()),
        ("grassmann-truncpoly3", corpus::grassmann_truncpoly3(f).unwrap()),
        ("grassmann-octonions", corpus::grassmann_octonions(f).unwrap()),
    ];
    let mut checks = 0;
    for (name, a) in &alts {
        let m = unwrap(AltBimodule::regular(a), name)?;
        passes(&unwrap(check_alt_bimodule(&m), name)?, &format!("regular {name}"))?;
        checks += 1;
        if check_product_law(a, ProductLaw::Multiplicative).passed {
            let t = unwrap(twist_alt_bimodule(&m), name)?;
            passes(&unwrap(check_alt_bimodule(&t), name)?, &format!("twisted {name}"))?;
            checks += 1;
        }
    }
    let pres = unwrap(corpus::pre_calibration_set(f), "corpus")?;
    for (name, p) in pres.iter().filter(|(_, p)| p.space().dim() <= 24) {
        let m = unwrap(PreBimodule::regular(p), name)?;
        passes(&unwrap(check_pre_bimodule(&m), name)?, &format!("regular pre {name}"))?;
        checks += 1;
        for how in [Projection::Outer, Projection::Circle] {
            passes(&unwrap(check_alt_bimodule(&unwrap(project(&m, how), name)?), name)?, &format!("{name} {how:?}"))?;
            checks += 1;
        }
        let reg_alt = unwrap(AltBimodule::regular(&alt_of(p)), name)?;
        let embedded = unwrap(embed(&reg_alt, p), name)?;
        passes(&unwrap(check_pre_bimodule(&embedded), name)?, &format!("{name} (0,R,L,0)"))?;
        let t = unwrap(twist_pre_bimodule(&m), name)?;
        for how in [Projection::Outer, Projection::Circle] {
            let proj = unwrap(project(&t, how), name)?;
            passes(&unwrap(check_alt_bimodule(&proj), name)?, &format!("twisted {name} {how:?}"))?;
        }
        checks += 3;
    }
    let p3 = corpus::truncpoly(f, 3).unwrap();
    let r = corpus::integration(f, 3).unwrap();
    let (gp3, gr) = graded_p3(f);
    for (name, a, r) in [("P3", &p3, &r), ("Λ¹⊗P3", &gp3, &gr)] {
        let (alt, pre) = unwrap(rb_induced(&AltBimodule::regular(a).unwrap(), r), name)?;
        passes(&unwrap(check_alt_bimodule(&alt), name)?, &format!("RB alt bimodule {name}"))?;
        passes(&unwrap(check_pre_bimodule(&pre), name)?, &format!("RB pre-bimodule {name}"))?;
        checks += 2;
    }
    Ok(format!("{checks} bimodule checks pass (regular, twisted, projections i/ii/iii, RB-induced)"))
}

/// Re-evaluates a witness and confirms it is a genuine nonzero residual.
fn witness_reproduces(ids: &[Identity<'_>], r: &LawReport) -> Result<(), String> {
    let w = r.witness.as_ref().ok_or("failing report without witness")?;
    let id = ids.iter().find(|i| i.name() == w.identity).ok_or("witness names an unknown identity")?;
    let parities: Vec<_> = id.slots().iter().zip(&w.indices).map(|(sp, &i)| sp.parity(i)).collect();
    let residual = id.evaluate_basis(&w.indices);
    ensure(!residual.is_zero() && residual == w.residual && parities == w.parities, || {
        format!("witness {} at {:?} does not reproduce", w.identity, w.indices)
    })
}

fn criterion_10() -> Outcome {
    let f = q();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let o = corpus::octonions(f).unwrap();
    let lo = corpus::grassmann_truncpoly3(f).unwrap();
    let split = corpus::graded_split_twisted(f).unwrap();
    let reg_o = AltBimodule::regular(&o).unwrap();
    let reg_split = PreBimodule::regular(&corpus::graded_split(f).unwrap()).unwrap();
    let mut done = Vec::new();
    for n in 0..20 {
        let label = match n % 5 {
            0 | 1 => {
                let a = if n % 5 == 0 { &o } else { &lo };
                let slot = *even_slots(a.product()).choose(&mut rng).unwrap();
                let m = a.with_product(bump(a.product(), slot)).unwrap();
                let r = check_product_law(&m, ProductLaw::HomAlternative);
                ensure(!r.passed, || format!("algebra mutation {slot:?} still alternative"))?;
                let w = r.witness.as_ref().unwrap();
                let (l, rr) = naive_alternators(&m, w.indices[0], w.indices[1], w.indices[2]);
                let expected = if w.identity == "left-hom-alternative" { l } else { rr };
                ensure(w.residual.coords() == expected.as_slice(), || "witness residual disagrees with brute force".into())?;
                format!("product{slot:?}")
            }
            2 => {
                let use_prec = rng.gen_bool(0.5);
                let target = if use_prec { split.prec_product() } else { split.succ_product() };
                let slot = *even_slots(target).choose(&mut rng).unwrap();
                let bumped = bump(target, slot);
                let (l, r) = if use_prec {
                    (bumped, split.succ_product().clone())
                } else {
                    (split.prec_product().clone(), bumped)
                };
                let m = HomPreAlgebra::new(l, r, split.alpha().clone()).unwrap();
                let rep = check_pre_law(&m, PreLaw::HomPrealternative);
                ensure(!rep.passed, || format!("pre-algebra mutation {slot:?} still prealternative"))?;
                witness_reproduces(&pre_identities(&m, PreLaw::HomPrealternative), &rep)?;
                format!("{}{slot:?}", if use_prec { "prec" } else { "succ" })
            }
            3 => {
                let use_left = rng.gen_bool(0.5);
                let (l, r) = (reg_o.left_action(), reg_o.right_action());
                let target = if use_left { l } else { r };
                let slot = *even_slots(target).choose(&mut rng).unwrap();
                let m = if use_left {
                    reg_o.with_actions(bump(l, slot), r.clone()).unwrap()
                } else {
                    reg_o.with_actions(l.clone(), bump(r, slot)).unwrap()
                };
                let rep = check_alt_bimodule(&m).unwrap();
                ensure(!rep.passed, || format!("bimodule mutation {slot:?} still passes"))?;
                witness_reproduces(&alt_bimodule_identities(&m), &rep)?;
                ensure(!naive_is_alternative(&semidirect_alt(&m)), || "split extension still alternative".into())?;
                format!("action{slot:?}")
            }
            _ => {
                let mut acts = reg_split.actions();
                let which = rng.gen_range(0..4);
                let target = match which {
                    0 => &mut acts.left_prec,
                    1 => &mut acts.left_succ,
                    2 => &mut acts.right_prec,
                    _ => &mut acts.right_succ,
                };
                let slot = *even_slots(target).choose(&mut rng).unwrap();
                *target = bump(target, slot);
                let m = reg_split.with_actions(acts).unwrap();
                let rep = check_pre_bimodule(&m).unwrap();
                ensure(!rep.passed, || format!("pre-bimodule mutation {which}{slot:?} still passes"))?;
                witness_reproduces(&pre_bimodule_identities(&m, PreAxiomReading::default()), &rep)?;
                ensure(!check_pre_law(&semidirect_pre(&m), PreLaw::HomPrealternative).passed, || {
                    "split extension still prealternative".into()
                })?;
                format!("pre-action{which}{slot:?}")
            }
        };
        done.push(label);
    }
    Ok(format!("{} perturbations all detected with reproducible witnesses", done.len()))
}

use rand::Rng;

/// Whether all identities vanish on `samples` random homogeneous tuples.
fn random_verdict(ids: &[Identity<'_>], field: Field, rng: &mut ChaCha8Rng, samples: usize) -> bool {
    ids.iter().all(|id| {
        (0..samples).all(|_| {
            let args: Vec<Homogeneous> = id
                .slots()
                .iter()
                .map(|&sp| {
                    let par = random_parity(rng, sp);
                    random_homogeneous(rng, sp, field, par)
                })
                .collect();
            id.evaluate(&args).is_zero()
        })
    })
}

fn criterion_11() -> Outcome {
    let f = q();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let algebras = vec![
        corpus::grassmann1_twisted(f).unwrap(),
        corpus::truncpoly(f, 3).unwrap(),
        corpus::octonions_twisted(f).unwrap(),
        corpus::matrix(f, 2).unwrap(),
        corpus::grassmann_octonions(f).unwrap(),
    ];
    let mut comparisons = 0;
    for a in &algebras {
        for law in ProductLaw::ALL.into_iter().chain(JordanCycle::ALL.map(ProductLaw::HomJordan)) {
            let basis = check_product_law(a, law).passed;
            let random = random_verdict(&product_identities(a, law), f, &mut rng, 100);
            ensure(basis == random, || format!("{law} on {}-dim instance: basis {basis}, random {random}", a.space().dim()))?;
            comparisons += 1;
        }
        let m = AltBimodule::regular(a).unwrap();
        let basis = check_alt_bimodule(&m).unwrap().passed;
        ensure(basis == random_verdict(&alt_bimodule_identities(&m), f, &mut rng, 100), || "alt bimodule".into())?;
        comparisons += 1;
    }
    let pres = vec![
        corpus::p3_split(f).unwrap(),
        corpus::graded_split(f).unwrap(),
        corpus::graded_split_twisted(f).unwrap(),
        transpose(&corpus::graded_split_twisted(f).unwrap()),
        corpus::octonion_split(f).unwrap(),
    ];
    for p in &pres {
        for law in PreLaw::ALL {
            let basis = check_pre_law(p, law).passed;
            let random = random_verdict(&pre_identities(p, law), f, &mut rng, 100);
            ensure(basis == random, || format!("{law}: basis {basis}, random {random}"))?;
            comparisons += 1;
        }
        let m = PreBimodule::regular(p).unwrap();
        for reading in PreAxiomReading::all() {
            let ids = pre_bimodule_identities(&m, reading);
            let basis = hompre::laws::check_identities("pre-bimodule", &ids).passed;
            ensure(basis == random_verdict(&ids, f, &mut rng, 100), || format!("pre-bimodule {reading}"))?;
            comparisons += 1;
        }
    }
    Ok(format!("{comparisons} law/instance verdicts agree between basis tuples and 100 random homogeneous tuples"))
}

fn main() -> ExitCode {
    let minted = minted();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("corpus sanity", Box::new(criterion_1)),
        ("associated algebra of every minted pre-algebra", Box::new(|| criterion_2(minted.as_ref()?))),
        ("transpose and signed opposite", Box::new(|| criterion_3(minted.as_ref()?))),
        ("plus-algebras are Hom-Jordan; calibration", Box::new(criterion_4)),
        ("graded tensor product", Box::new(criterion_5)),
        ("centroid and averaging constructions", Box::new(criterion_6)),
        ("Rota-Baxter pipeline", Box::new(criterion_7)),
        ("O-operator theorem", Box::new(criterion_8)),
        ("bimodule suite", Box::new(criterion_9)),
        ("mutation sensitivity", Box::new(criterion_10)),
        ("multilinearity cross-check", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {title} — {detail} ({secs:.1}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title} — {why} ({secs:.1}s)", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
