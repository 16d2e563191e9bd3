//! Calibration of the ambiguous readings against the builtin corpus.
//!
//! The Hom-Jordan summation and three of the pre-bimodule axioms admit more
//! than one transcription. Each candidate reading is run against instances
//! that must satisfy the law (plus-algebras of multiplicative Hom-alternative
//! superalgebras; regular pre-bimodules of Hom-prealternative ones) and the
//! readings that pass everywhere survive.

use std::fmt;

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::bimodule::{
    pre_bimodule_identities, Pbm2Sign, Pbm4Inner, Pbm7Inner, PreAxiomReading, PreBimodule,
};
use crate::constructions::plus_jordan;
use crate::corpus;
use crate::error::Result;
use crate::laws::{
    check_identities, check_pre_law, Identity, check_pre_morphism, check_product_law, JordanCycle, PreLaw, ProductLaw,
    DEFAULT_JORDAN_CYCLE,
};
use crate::scalar::Field;

/// Verdicts of every candidate on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationRow<C> {
    pub instance: String,
    pub verdicts: Vec<(C, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration<C> {
    pub rows: Vec<CalibrationRow<C>>,
    /// Instances left out because they do not meet the hypotheses.
    pub skipped: Vec<(String, String)>,
    /// Candidates that passed on every instance, in candidate order.
    pub survivors: Vec<C>,
    pub default: C,
}

impl<C: Copy + PartialEq> Calibration<C> {
    fn new(default: C) -> Self {
        Self {
            rows: Vec::new(),
            skipped: Vec::new(),
            survivors: Vec::new(),
            default,
        }
    }

    fn finish(mut self, candidates: &[C]) -> Self {
        self.survivors = candidates
            .iter()
            .copied()
            .filter(|c| {
                self.rows
                    .iter()
                    .all(|r| r.verdicts.iter().any(|(d, ok)| d == c && *ok))
            })
            .collect();
        self
    }

    /// The default reading is confirmed iff it is the only survivor.
    pub fn confirms_default(&self) -> bool {
        self.survivors == [self.default]
    }
}

impl<C: fmt::Display> fmt::Display for Calibration<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row
                .verdicts
                .iter()
                .map(|(c, ok)| format!("{c}={}", if *ok { "pass" } else { "FAIL" }))
                .collect();
            writeln!(f, "{}: {}", row.instance, cells.join(" "))?;
        }
        for (name, why) in &self.skipped {
            writeln!(f, "{name}: skipped ({why})")?;
        }
        let surv: Vec<String> = self.survivors.iter().map(ToString::to_string).collect();
        write!(
            f,
            "survivors: [{}]; default {}",
            surv.join(", "),
            self.default
        )
    }
}

/// Runs every Jordan cycle on the plus-algebras of `instances`.
pub fn calibrate_jordan_on(instances: &[(String, HomAlgebra)]) -> Calibration<JordanCycle> {
    let mut cal = Calibration::new(DEFAULT_JORDAN_CYCLE);
    for (name, a) in instances {
        if !check_product_law(a, ProductLaw::HomAlternative).passed {
            cal.skipped.push((name.clone(), "not hom-alternative".into()));
            continue;
        }
        if !check_product_law(a, ProductLaw::Multiplicative).passed {
            cal.skipped.push((name.clone(), "not multiplicative".into()));
            continue;
        }
        let plus = plus_jordan(a);
        let verdicts = JordanCycle::ALL
            .into_iter()
            .map(|c| (c, check_product_law(&plus, ProductLaw::HomJordan(c)).passed))
            .collect();
        cal.rows.push(CalibrationRow {
            instance: name.clone(),
            verdicts,
        });
    }
    cal.finish(&JordanCycle::ALL)
}

/// [`calibrate_jordan_on`] over the builtin calibration corpus.
pub fn calibrate_jordan(field: Field) -> Result<Calibration<JordanCycle>> {
    Ok(calibrate_jordan_on(&corpus::jordan_calibration_set(field)?))
}

/// The axioms whose transcription varies between readings.
const VARIABLE: [&str; 3] = ["pbm2", "pbm4", "pbm7"];

/// Runs every pre-bimodule axiom reading on the regular pre-bimodules of
/// `instances`.
pub fn calibrate_pre_bimodule_on(instances: &[(String, HomPreAlgebra)]) -> Result<Calibration<PreAxiomReading>> {
    let candidates = PreAxiomReading::all();
    let mut cal = Calibration::new(PreAxiomReading::default());
    for (name, p) in instances {
        if !check_pre_law(p, PreLaw::HomPrealternative).passed {
            cal.skipped.push((name.clone(), "not hom-prealternative".into()));
            continue;
        }
        if !check_pre_morphism(p.alpha(), p, p, false)?.passed {
            cal.skipped.push((name.clone(), "not multiplicative".into()));
            continue;
        }
        let m = PreBimodule::regular(p)?;
        // Readings differ only in pbm2, pbm4 and pbm7, so every axiom variant
        // is evaluated once and the readings are assembled from those.
        let default = PreAxiomReading::default();
        let other = PreAxiomReading {
            pbm2: Pbm2Sign::Minus,
            pbm4: Pbm4Inner::Circ,
            pbm7: Pbm7Inner::X,
        };
        let base = check_identities("pre-bimodule", &pre_bimodule_identities(&m, default));
        let variants: Vec<Identity<'_>> = pre_bimodule_identities(&m, other)
            .into_iter()
            .filter(|id| VARIABLE.contains(&id.name()))
            .collect();
        let alt = check_identities("pre-bimodule", &variants);
        let holds = |name: &str, use_default: bool| {
            let report = if use_default || !VARIABLE.contains(&name) { &base } else { &alt };
            report
                .identities
                .iter()
                .any(|s| s.name == name && s.failures == 0)
        };
        let verdicts = candidates
            .iter()
            .map(|&r| {
                let fixed = base
                    .identities
                    .iter()
                    .filter(|s| !VARIABLE.contains(&s.name.as_str()))
                    .all(|s| s.failures == 0);
                let ok = fixed
                    && holds("pbm2", r.pbm2 == default.pbm2)
                    && holds("pbm4", r.pbm4 == default.pbm4)
                    && holds("pbm7", r.pbm7 == default.pbm7);
                (r, ok)
            })
            .collect();
        cal.rows.push(CalibrationRow {
            instance: name.clone(),
            verdicts,
        });
    }
    Ok(cal.finish(&candidates))
}

/// [`calibrate_pre_bimodule_on`] over the builtin calibration corpus.
pub fn calibrate_pre_bimodule(field: Field) -> Result<Calibration<PreAxiomReading>> {
    calibrate_pre_bimodule_on(&corpus::pre_calibration_set(field)?)
}
