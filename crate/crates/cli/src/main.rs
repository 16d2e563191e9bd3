//! Command-line front end: check laws, build constructions, verify
//! bimodules and operators, search small prime fields and emit corpus files.
//!
//! Exit status: 0 when every check passes, 1 when a law or axiom fails (the
//! report carries a witness), 2 on usage, parse or validation errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hompre::bimodule::{self, check_alt_bimodule, check_pre_bimodule_with};
use hompre::calibration::{calibrate_jordan, calibrate_pre_bimodule, Calibration};
use hompre::constructions;
use hompre::corpus::{self, Builtin};
use hompre::document::{scalar_json, Body, Document, ParseMode};
use hompre::laws::{check_pre_law, check_product_law};
use hompre::operators::{self, check_o_operator, check_operator, SearchMode, SearchResult, DEFAULT_BUDGET};
use hompre::{
    AltBimodule, EvenMap, Field, LawReport, OperatorKind, PreAxiomReading, PreBimodule, PreLaw,
    ProductLaw, Projection,
};

#[derive(Parser, Debug)]
#[command(name = "hompre", version, about = "Exact checks for Hom-alternative and Hom-prealternative superalgebras")]
struct Cli {
    /// Worker threads for law checks (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Reject non-canonical input instead of normalizing it with a warning.
    #[arg(long, global = true)]
    strict_canonical: bool,

    /// Print the canonical JSON report instead of the summary.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the canonical JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a law of a Hom-superalgebra document.
    Check {
        file: PathBuf,
        /// hom-associative, hom-alternative, left-/right-hom-alternative,
        /// hom-flexible, super-commutative, hom-jordan[:xyz|xzt|xyt],
        /// multiplicative
        #[arg(long)]
        law: String,
    },
    /// Check a law of a Hom-pre-superalgebra document.
    CheckPre {
        file: PathBuf,
        /// hom-prealternative, left-prealternative, right-prealternative,
        /// flexible-prealternative
        #[arg(long)]
        law: String,
    },
    /// Build a new document from existing ones.
    Construct {
        op: ConstructOp,
        /// Input documents.
        #[arg(long = "in", num_args = 1.., required = true, value_name = "FILE")]
        inputs: Vec<PathBuf>,
        /// Operator or twisting map document.
        #[arg(long, value_name = "FILE")]
        map: Option<PathBuf>,
        /// Iteration count for `derived`.
        #[arg(long, value_name = "K")]
        n: Option<u32>,
        /// Scalar for `scale`.
        #[arg(long, value_name = "C", allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Projection for `project`: i (outer actions) or ii (circle actions).
        #[arg(long)]
        direction: Option<String>,
        /// Name recorded in the output (default derived from the inputs).
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Check the bimodule axioms.
    VerifyBimodule {
        file: PathBuf,
        #[arg(long, value_enum)]
        law: BimoduleLaw,
        /// Override the pre-bimodule reading, e.g. pbm2=minus,pbm4=circ,pbm7=x.
        #[arg(long)]
        reading: Option<String>,
    },
    /// Check the defining identities of an operator on an algebra (or of an
    /// O-operator on a bimodule).
    CheckOperator {
        /// Algebra document; a bimodule document for `--kind o-operator`.
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        /// Operator kind; defaults to the kind recorded in the map document.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Enumerate operators of a kind over a prime field.
    Search {
        /// Algebra document; a pre-algebra for `--kind pre-endomorphism`.
        file: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Only enumerate parity-preserving signed permutation matrices.
        #[arg(long)]
        signed_permutations: bool,
        /// Write every map found as an operator document here.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
    /// Write a builtin instance.
    Corpus {
        /// e.g. octonions, grassmann1, truncpoly3, integration3, matrix2,
        /// zero2x1, p3-split; `list` prints every name.
        name: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Q or Fp (e.g. F5).
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Run the Hom-Jordan calibration and print the adopted cycle.
    CalibrateJordan {
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Run the pre-bimodule calibration and print the adopted reading.
    CalibratePrebimodule {
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructOp {
    /// Alt(P): the sum product of a pre-algebra.
    Alt,
    Transpose,
    Opposite,
    PlusJordan,
    /// Graded tensor product of two algebras.
    Tensor,
    CentroidTwist,
    AveragingProduct,
    RbSplit,
    YauTwist,
    Derived,
    Scale,
    /// Pre-algebra on V induced by an O-operator (--in bimodule --map T).
    OInduced,
    /// Transported pre-algebra on the image T(V).
    OImage,
    RegularBimodule,
    Project,
    /// (0, R, L, 0) embedding: --in alt-bimodule pre-algebra.
    Embed,
    TwistBimodule,
    RbBimoduleAlt,
    RbBimodulePre,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BimoduleLaw {
    Alt,
    Pre,
}

/// Why a command did not succeed.
enum Failure {
    /// A law or hypothesis fails; exit 1.
    Law(String),
    /// Bad usage or input; exit 2.
    Usage(String),
}

impl From<hompre::Error> for Failure {
    fn from(e: hompre::Error) -> Self {
        match e {
            hompre::Error::Precondition { requirement, report } => {
                Failure::Law(format!("precondition failed: {requirement}\n{report}"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx {
    mode: ParseMode,
    json: bool,
    report: Option<PathBuf>,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Document, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let parsed = Document::parse(&text, self.mode)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        for w in &parsed.warnings {
            eprintln!("warning: {}: {w}", path.display());
        }
        Ok(parsed.document)
    }

    fn scalar(&self, field: Field, text: &str) -> Result<hompre::Scalar, Failure> {
        let r = match self.mode {
            ParseMode::Lenient => field.parse(text),
            ParseMode::StrictCanonical => field.parse_canonical(text),
        };
        r.map_err(|e| Failure::Usage(e.to_string()))
    }

    /// Prints the summary (or JSON) and writes the report file if asked.
    fn emit(&self, doc: &Document, summary: &str) -> Result<(), Failure> {
        let text = doc.to_canonical_string();
        if self.json {
            say(&text);
        } else {
            say(&format!("{summary}\n"));
        }
        if let Some(path) = &self.report {
            write_file(path, &text)?;
        }
        Ok(())
    }

    fn emit_report(&self, input: &Path, subject: &Document, report: &LawReport) -> Outcome {
        let doc = Document::report(
            format!("{} of {}", report.law, subject.name),
            subject.field(),
            subject.dims(),
            report,
        )
        .with_metadata("input", json!(input.display().to_string()));
        let mut summary = report.to_string();
        for note in &report.notes {
            let _ = write!(summary, "\nnote: {note}");
        }
        self.emit(&doc, &summary)?;
        Ok(report.passed)
    }
}

/// Writes to stdout, ignoring a closed pipe (e.g. `| head`).
fn say(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    s.parse::<Field>().map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot set up {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx {
        mode: if cli.strict_canonical {
            ParseMode::StrictCanonical
        } else {
            ParseMode::Lenient
        },
        json: cli.json,
        report: cli.report.clone(),
    };
    match run(&ctx, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Law(msg)) => {
            say(&format!("{msg}\n"));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Check { file, law } => {
            let doc = ctx.load(&file)?;
            let law: ProductLaw = law.parse()?;
            let report = check_product_law(doc.as_algebra()?, law);
            ctx.emit_report(&file, &doc, &report)
        }
        Command::CheckPre { file, law } => {
            let doc = ctx.load(&file)?;
            let law: PreLaw = law.parse()?;
            let report = check_pre_law(doc.as_pre_algebra()?, law);
            ctx.emit_report(&file, &doc, &report)
        }
        Command::Construct {
            op,
            inputs,
            map,
            n,
            lambda,
            direction,
            name,
            out,
        } => construct(ctx, op, &inputs, map.as_deref(), n, lambda.as_deref(), direction.as_deref(), name, &out),
        Command::VerifyBimodule { file, law, reading } => {
            let doc = ctx.load(&file)?;
            let report = match (law, &doc.body) {
                (BimoduleLaw::Alt, Body::AltBimodule(m)) => {
                    if reading.is_some() {
                        return Err(Failure::Usage("--reading only applies to pre-bimodules".into()));
                    }
                    check_alt_bimodule(m)?
                }
                (BimoduleLaw::Pre, Body::PreBimodule(m)) => {
                    let reading = match reading {
                        Some(r) => r.parse::<PreAxiomReading>()?,
                        None => PreAxiomReading::default(),
                    };
                    check_pre_bimodule_with(m, reading)?
                }
                (law, _) => {
                    return Err(Failure::Usage(format!(
                        "{} is not a{} bimodule document",
                        file.display(),
                        if law == BimoduleLaw::Alt { "n alt" } else { " pre" }
                    )))
                }
            };
            ctx.emit_report(&file, &doc, &report)
        }
        Command::CheckOperator {
            file,
            map,
            kind,
            weight,
        } => {
            let doc = ctx.load(&file)?;
            let map_doc = ctx.load(&map)?;
            let t = map_doc.as_map()?;
            let report = if kind.as_deref() == Some("o-operator") {
                let Body::AltBimodule(m) = &doc.body else {
                    return Err(Failure::Usage("o-operator needs an alt bimodule document".into()));
                };
                check_o_operator(t, m)?
            } else {
                let a = doc.as_algebra()?;
                let kind = match kind {
                    Some(k) => {
                        let w = weight.map(|w| ctx.scalar(a.field(), &w)).transpose()?;
                        OperatorKind::from_parts(&k, w)?
                    }
                    None => map_doc.operator_kind().cloned().ok_or_else(|| {
                        Failure::Usage("no --kind given and the map document records none".into())
                    })?,
                };
                check_operator(&kind, t, a)?
            };
            ctx.emit_report(&file, &doc, &report)
        }
        Command::Search {
            file,
            kind,
            weight,
            budget,
            signed_permutations,
            out_dir,
        } => {
            let doc = ctx.load(&file)?;
            let mode = if signed_permutations {
                SearchMode::SignedPermutations
            } else {
                SearchMode::All
            };
            let (result, kind_doc) = if kind == "pre-endomorphism" {
                if weight.is_some() {
                    return Err(Failure::Usage("pre-endomorphism takes no weight".into()));
                }
                (operators::search_pre_endomorphisms(doc.as_pre_algebra()?, mode, budget)?, None)
            } else {
                let a = doc.as_algebra()?;
                let w = weight.map(|w| ctx.scalar(a.field(), &w)).transpose()?;
                let kind = OperatorKind::from_parts(&kind, w)?;
                (operators::search(a, &kind, mode, budget)?, Some(kind))
            };
            search_output(ctx, &file, &doc, &kind, kind_doc, &result, out_dir.as_deref())
        }
        Command::Corpus { name, out, field } => {
            if name == "list" {
                for n in corpus::NAMES {
                    say(&format!("{n}\n"));
                }
                return Ok(true);
            }
            let field = parse_field(&field)?;
            let body = match corpus::builtin(&name, field)? {
                Builtin::Algebra(a) => Body::Algebra(a),
                Builtin::Pre(p) => Body::PreAlgebra(p),
                Builtin::Map(m) => Body::Map {
                    operator: default_operator(&name, field),
                    map: m,
                },
            };
            let doc = Document::new(name.clone(), body).with_metadata("builtin", json!(name));
            let text = doc.to_canonical_string();
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    let (n0, n1) = doc.dims();
                    say(&format!("wrote {}: {} {name} over {field}, dims ({n0},{n1})\n", path.display(), doc.kind()));
                }
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::CalibrateJordan { field } => {
            let cal = calibrate_jordan(parse_field(&field)?)?;
            calibration_output(ctx, "hom-jordan calibration", &cal)
        }
        Command::CalibratePrebimodule { field } => {
            let cal = calibrate_pre_bimodule(parse_field(&field)?)?;
            calibration_output(ctx, "pre-bimodule calibration", &cal)
        }
    }
}

/// Builtin maps that are operators of a known kind carry it in their file.
fn default_operator(name: &str, field: Field) -> Option<OperatorKind> {
    name.starts_with("integration")
        .then(|| OperatorKind::RotaBaxter(field.zero()))
}

fn calibration_output<C: Copy + PartialEq + std::fmt::Display>(ctx: &Ctx, title: &str, cal: &Calibration<C>) -> Outcome {
    let rows: Vec<Value> = cal
        .rows
        .iter()
        .map(|r| {
            let verdicts: serde_json::Map<String, Value> =
                r.verdicts.iter().map(|(c, ok)| (c.to_string(), json!(ok))).collect();
            json!({ "instance": r.instance, "verdicts": verdicts })
        })
        .collect();
    let adopted = if cal.confirms_default() {
        json!(cal.default.to_string())
    } else {
        Value::Null
    };
    let payload = json!({
        "rows": rows,
        "skipped": cal.skipped.iter().map(|(n, why)| json!([n, why])).collect::<Vec<_>>(),
        "survivors": cal.survivors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "default": cal.default.to_string(),
        "adopted": adopted,
    });
    let doc = Document::new(
        title,
        Body::Report {
            field: Field::Rational,
            dims: (0, 0),
            payload,
        },
    );
    let verdict = if cal.confirms_default() {
        format!("adopted: {}", cal.default)
    } else {
        format!("default {} not confirmed", cal.default)
    };
    ctx.emit(&doc, &format!("{title}\n{cal}\n{verdict}"))?;
    Ok(cal.confirms_default())
}

fn search_output(
    ctx: &Ctx,
    input: &Path,
    doc: &Document,
    kind_name: &str,
    kind: Option<OperatorKind>,
    result: &SearchResult,
    out_dir: Option<&Path>,
) -> Outcome {
    let maps: Vec<Value> = result
        .maps
        .iter()
        .map(|m| Document::map("", m.clone()).to_json()["payload"]["entries"].clone())
        .collect();
    let mut payload = json!({
        "kind": kind_name,
        "examined": result.examined,
        "total": result.total.to_string(),
        "complete": result.complete,
        "maps": maps,
    });
    if let Some(w) = kind.as_ref().and_then(OperatorKind::weight) {
        payload["weight"] = scalar_json(w);
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))?;
        for (n, m) in result.maps.iter().enumerate() {
            let name = format!("{}-{kind_name}-{n:04}", doc.name);
            let out = match &kind {
                Some(k) => Document::operator(name.clone(), m.clone(), k.clone()),
                None => Document::map(name.clone(), m.clone()),
            }
            .with_metadata(
                "search",
                json!({ "input": input.display().to_string(), "kind": kind_name, "index": n }),
            );
            write_file(&dir.join(format!("{name}.json")), &out.to_canonical_string())?;
        }
    }
    let report = Document::new(
        format!("{kind_name} search on {}", doc.name),
        Body::Report {
            field: doc.field(),
            dims: doc.dims(),
            payload: payload.clone(),
        },
    )
    .with_metadata("input", json!(input.display().to_string()));
    let mut summary = format!(
        "found {} {kind_name} map(s); examined {} of {} candidates{}",
        result.maps.len(),
        result.examined,
        result.total,
        if result.complete { "" } else { " (budget exhausted, partial result)" }
    );
    for m in &payload["maps"].as_array().cloned().unwrap_or_default() {
        let _ = write!(summary, "\n  {m}");
    }
    ctx.emit(&report, &summary)?;
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn construct(
    ctx: &Ctx,
    op: ConstructOp,
    inputs: &[PathBuf],
    map_path: Option<&Path>,
    n: Option<u32>,
    lambda: Option<&str>,
    direction: Option<&str>,
    name: Option<String>,
    out: &Path,
) -> Outcome {
    use ConstructOp::*;
    let docs: Vec<Document> = inputs.iter().map(|p| ctx.load(p)).collect::<Result<_, _>>()?;
    let expected_inputs = match op {
        Tensor | Embed => 2,
        _ => 1,
    };
    if docs.len() != expected_inputs {
        return Err(Failure::Usage(format!(
            "{} takes {expected_inputs} input(s), got {}",
            op_name(op),
            docs.len()
        )));
    }
    let needs_map = matches!(
        op,
        CentroidTwist | AveragingProduct | RbSplit | YauTwist | OInduced | OImage | RbBimoduleAlt | RbBimodulePre
    );
    let map_doc = match (needs_map, map_path) {
        (true, Some(p)) => Some(ctx.load(p)?),
        (true, None) => return Err(Failure::Usage(format!("{} needs --map", op_name(op)))),
        (false, Some(_)) => return Err(Failure::Usage(format!("{} takes no --map", op_name(op)))),
        (false, None) => None,
    };
    let map = || -> Result<&EvenMap, Failure> { Ok(map_doc.as_ref().expect("checked").as_map()?) };
    let d = &docs[0];
    let mut provenance = json!({
        "operation": op_name(op),
        "inputs": inputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    if let Some(p) = map_path {
        provenance["map"] = json!(p.display().to_string());
    }
    let mut extra: Vec<(&str, Value)> = Vec::new();
    let body = match op {
        Alt => Body::Algebra(constructions::alt_of(d.as_pre_algebra()?)),
        Transpose => Body::PreAlgebra(constructions::transpose(d.as_pre_algebra()?)),
        Opposite => Body::Algebra(constructions::opposite(d.as_algebra()?)),
        PlusJordan => Body::Algebra(constructions::plus_jordan(d.as_algebra()?)),
        Tensor => {
            let t = constructions::tensor_alt(d.as_algebra()?, docs[1].as_algebra()?)?;
            extra.push(("pairs", json!(t.pairs().iter().map(|&(i, a)| json!([i, a])).collect::<Vec<_>>())));
            Body::Algebra(t.algebra)
        }
        CentroidTwist => Body::Algebra(constructions::centroid_twist(d.as_algebra()?, map()?)?),
        AveragingProduct => Body::Algebra(constructions::averaging_product(d.as_algebra()?, map()?)?),
        RbSplit => Body::PreAlgebra(constructions::rb_split(d.as_algebra()?, map()?)?),
        YauTwist => match &d.body {
            Body::Algebra(a) => Body::Algebra(constructions::yau_twist_algebra(a, map()?)?),
            Body::PreAlgebra(p) => Body::PreAlgebra(constructions::yau_twist(p, map()?)?),
            _ => return Err(Failure::Usage("yau-twist needs an algebra or pre-algebra".into())),
        },
        Derived => {
            let k = n.ok_or_else(|| Failure::Usage("derived needs --n".into()))?;
            provenance["n"] = json!(k);
            Body::PreAlgebra(constructions::derived_n(d.as_pre_algebra()?, k)?)
        }
        Scale => {
            let p = d.as_pre_algebra()?;
            let text = lambda.ok_or_else(|| Failure::Usage("scale needs --lambda".into()))?;
            let c = ctx.scalar(p.field(), text)?;
            provenance["lambda"] = scalar_json(&c);
            Body::PreAlgebra(constructions::scale(p, &c)?)
        }
        OInduced | OImage => {
            let m = alt_bimodule(d)?;
            let induced = operators::o_induced(map()?, m)?;
            if !induced.morphisms.passed {
                return Err(Failure::Law(format!("morphism report failed\n{}", induced.morphisms)));
            }
            if op == OInduced {
                Body::PreAlgebra(induced.pre)
            } else {
                extra.push(("spanning", json!(induced.image.spanning)));
                extra.push((
                    "inclusion",
                    Document::map("", induced.image.inclusion.clone()).to_json()["payload"].clone(),
                ));
                Body::PreAlgebra(induced.image.pre)
            }
        }
        RegularBimodule => match &d.body {
            Body::Algebra(a) => Body::AltBimodule(AltBimodule::regular(a)?),
            Body::PreAlgebra(p) => Body::PreBimodule(PreBimodule::regular(p)?),
            _ => return Err(Failure::Usage("regular-bimodule needs an algebra or pre-algebra".into())),
        },
        Project => {
            let Body::PreBimodule(m) = &d.body else {
                return Err(Failure::Usage("project needs a pre-bimodule".into()));
            };
            let how: Projection = direction
                .ok_or_else(|| Failure::Usage("project needs --direction i|ii".into()))?
                .parse()?;
            provenance["direction"] = json!(direction);
            Body::AltBimodule(bimodule::project(m, how)?)
        }
        Embed => {
            let m = alt_bimodule(d)?;
            Body::PreBimodule(bimodule::embed(m, docs[1].as_pre_algebra()?)?)
        }
        TwistBimodule => match &d.body {
            Body::AltBimodule(m) => Body::AltBimodule(bimodule::twist_alt_bimodule(m)?),
            Body::PreBimodule(m) => Body::PreBimodule(bimodule::twist_pre_bimodule(m)?),
            _ => return Err(Failure::Usage("twist-bimodule needs a bimodule".into())),
        },
        RbBimoduleAlt | RbBimodulePre => {
            let (alt, pre) = bimodule::rb_induced(alt_bimodule(d)?, map()?)?;
            if op == RbBimoduleAlt {
                Body::AltBimodule(alt)
            } else {
                Body::PreBimodule(pre)
            }
        }
    };
    if direction.is_some() && op != Project {
        return Err(Failure::Usage("--direction only applies to project".into()));
    }
    let names: Vec<&str> = docs.iter().map(|d| d.name.as_str()).collect();
    let name = name.unwrap_or_else(|| format!("{}({})", op_name(op), names.join(",")));
    let mut doc = Document::new(name, body).with_metadata("construction", provenance);
    for (k, v) in extra {
        doc = doc.with_metadata(k, v);
    }
    write_file(out, &doc.to_canonical_string())?;
    let (n0, n1) = doc.dims();
    say(&format!("wrote {}: {} {:?}, dims ({n0},{n1})\n", out.display(), doc.kind(), doc.name));
    Ok(true)
}

fn alt_bimodule(d: &Document) -> Result<&AltBimodule, Failure> {
    match &d.body {
        Body::AltBimodule(m) => Ok(m),
        _ => Err(Failure::Usage(format!("{:?} is not an alt bimodule", d.name))),
    }
}

fn op_name(op: ConstructOp) -> String {
    op.to_possible_value().expect("no skipped variants").get_name().to_string()
}
