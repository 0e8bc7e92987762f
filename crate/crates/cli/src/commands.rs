use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use evprop_core::constructions::{cyclic4, f3_c2, gl25, m_group, q8_sl25, quaternion, semidirect, sylow2_gl25, wreath};
use evprop_core::eigen::{has_eigenvector_property, is_fixed_point_free};
use evprop_core::forms::{find_nonsingular_invariant, invariant_forms, FormSearch};
use evprop_core::gmodules::GModule;
use evprop_core::groups::{is_rational, DEFAULT_CAP};
use evprop_core::verify::{
    classify_theorem_a, lemma22_pipeline, prop32_case, prop34_case, remark21_case, run_driver, CaseReport,
    ClassificationReport, DriverReport, Expect, Status, DRIVERS,
};

use crate::document::{DocError, ModuleDocument};

#[derive(Debug, Parser)]
#[command(
    name = "evprop",
    version,
    about = "Eigenvector-property computations for finite linear groups over prime fields"
)]
pub struct Cli {
    /// Largest group the closure may enumerate.
    #[arg(long, global = true, env = "EVPROP_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Seed for the sampling fallbacks.
    #[arg(long, global = true, env = "EVPROP_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a named construction as a module document.
    Construct {
        #[arg(long)]
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one predicate on a module document.
    Check { predicate: Predicate, file: PathBuf },
    /// Classify a module with the eigenvector property.
    Classify { file: PathBuf },
    /// Run a verification driver on its corpus or on a module document.
    Verify { driver: String, file: Option<PathBuf> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Rationality,
    Evp,
    Fpf,
    Forms,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Document(#[from] DocError),
    #[error("{0}")]
    Core(#[from] evprop_core::Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

/// What a command prints and how the process exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub subject: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

pub fn run(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok((stdout, status)) => Output {
            stdout,
            stderr: String::new(),
            code: status.exit_code(),
        },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

fn dispatch(cli: &Cli) -> Result<(String, Status), CliError> {
    match &cli.command {
        Command::Construct { name, output } => {
            let doc = construct(name, cli.cap)?;
            match output {
                Some(path) => {
                    std::fs::write(path, doc.to_text()).map_err(|e| io_error(path, e))?;
                    Ok((String::new(), Status::Pass))
                }
                None => Ok((doc.to_text(), Status::Pass)),
            }
        }
        Command::Check { predicate, file } => {
            let (subject, v) = load(file, cli.cap)?;
            let report = check(*predicate, &subject, &v, cli.seed)?;
            let text = if cli.json {
                to_json(&report)
            } else {
                render_check(&report)
            };
            Ok((text, report.status))
        }
        Command::Classify { file } => {
            let (subject, v) = load(file, cli.cap)?;
            let report = classify_theorem_a(&subject, &v, cli.cap, cli.seed)?;
            let text = if cli.json {
                to_json(&report)
            } else {
                render_classification(&report, "")
            };
            Ok((text, report.verdict.status()))
        }
        Command::Verify { driver, file } => {
            let reports = verify(driver, file.as_deref(), cli.cap, cli.seed)?;
            let status = reports.iter().fold(Status::Pass, |acc, r| acc.combine(r.status));
            let text = if cli.json {
                to_json(&reports)
            } else {
                reports.iter().map(render_driver).collect()
            };
            Ok((text, status))
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn load(path: &Path, cap: usize) -> Result<(String, GModule), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let doc = ModuleDocument::parse(&text)?;
    let subject = doc.name.clone().unwrap_or_else(|| path.display().to_string());
    Ok((subject, doc.to_module(cap)?))
}

/// Builds the document for a construction id.
///
/// Ids: `M`, `q8-sl25`, `f3-c2`, `cyclic4`, `sylow2-gl25`, `gl25`,
/// `quaternion:<m>`, `semidirect:<file>` and `wreath:<base id>:<top>`, where
/// `<top>` is either a block count (trivial top group) or `;`-separated
/// 0-based image lists such as `1,0` or `1,0,2,3;2,3,0,1`.
pub fn construct(id: &str, cap: usize) -> Result<ModuleDocument, CliError> {
    let v = construct_module(id, cap)?;
    let doc = ModuleDocument::from_module(Some(id), &v);
    Ok(if id == "q8-sl25" {
        doc.with_labels(&["i", "j"])
    } else {
        doc
    })
}

fn construct_module(id: &str, cap: usize) -> Result<GModule, CliError> {
    let natural = |g| GModule::natural(Arc::new(g));
    match id {
        "M" => return Ok(natural(m_group().group)),
        "q8-sl25" => return Ok(q8_sl25()),
        "f3-c2" => return Ok(f3_c2()),
        "cyclic4" => return Ok(cyclic4()),
        "sylow2-gl25" => return Ok(natural(sylow2_gl25())),
        "gl25" => return Ok(natural(gl25())),
        _ => {}
    }
    if let Some(m) = id.strip_prefix("quaternion:") {
        let m: u32 = m
            .parse()
            .map_err(|_| CliError::Usage(format!("bad quaternion exponent {m:?}")))?;
        return Ok(natural(quaternion(m)?));
    }
    if let Some(path) = id.strip_prefix("semidirect:") {
        let (_, v) = load(Path::new(path), cap)?;
        return Ok(natural(semidirect(&v, cap)?.group));
    }
    if let Some(rest) = id.strip_prefix("wreath:") {
        let (base, top) = rest
            .rsplit_once(':')
            .ok_or_else(|| CliError::Usage(format!("wreath id needs a base and a top group: {id:?}")))?;
        let base = construct_module(base, cap)?;
        let (n, perms) = parse_top(top)?;
        return Ok(wreath(base.group(), n, &perms, cap)?.module());
    }
    Err(CliError::Usage(format!("unknown construction {id:?}")))
}

fn parse_top(top: &str) -> Result<(usize, Vec<Vec<usize>>), CliError> {
    if let Ok(n) = top.parse::<usize>() {
        return Ok((n, Vec::new()));
    }
    let bad = || CliError::Usage(format!("bad permutation list {top:?}"));
    let perms: Vec<Vec<usize>> = top
        .split(';')
        .map(|p| {
            p.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = perms[0].len();
    Ok((n, perms))
}

pub fn check(predicate: Predicate, subject: &str, v: &GModule, seed: u64) -> Result<CheckReport, CliError> {
    let group = v.group();
    let report = match predicate {
        Predicate::Rationality => {
            let r = is_rational(group);
            CheckReport {
                check: "rationality".into(),
                subject: subject.into(),
                status: Status::from_bool(r.rational),
                detail: match r.witness {
                    Some((g, k)) => format!("element {g} is not conjugate to its power {k}"),
                    None => format!(
                        "all {} elements are conjugate to the generators of their cyclic subgroups",
                        group.order()
                    ),
                },
                witness: r
                    .witness
                    .map(|(g, k)| json!({"element": g, "power": k, "matrix": group.element(g).to_rows()})),
            }
        }
        Predicate::Evp => match has_eigenvector_property(v) {
            Ok(r) => CheckReport {
                check: "evp".into(),
                subject: subject.into(),
                status: Status::from_bool(r.holds),
                detail: match &r.failure {
                    Some((x, l)) => format!("no element sends {x:?} to {l} times itself"),
                    None => format!(
                        "each of the {} line orbits has an element scaling it by the primitive root {}",
                        r.orbit_count, r.alpha
                    ),
                },
                witness: Some(match &r.failure {
                    Some((x, l)) => json!({"vector": x, "lambda": l}),
                    None => json!({"alpha": r.alpha, "orbit_witnesses": r.witnesses}),
                }),
            },
            Err(evprop_core::Error::ScanTooLarge { size, cap }) => CheckReport {
                check: "evp".into(),
                subject: subject.into(),
                status: Status::Inconclusive,
                detail: format!("{size} vectors exceed the scan cap {cap}"),
                witness: None,
            },
            Err(e) => return Err(e.into()),
        },
        Predicate::Fpf => {
            let r = is_fixed_point_free(v);
            CheckReport {
                check: "fpf".into(),
                subject: subject.into(),
                status: Status::from_bool(r.fixed_point_free),
                detail: match &r.witness {
                    Some((g, x)) => format!("element {g} fixes {x:?}"),
                    None => "no non-identity element fixes a non-zero vector".into(),
                },
                witness: r.witness.map(|(g, x)| json!({"element": g, "vector": x})),
            }
        }
        Predicate::Forms => {
            let space = invariant_forms(v);
            let (status, detail, witness) = match find_nonsingular_invariant(v, seed) {
                FormSearch::Found(b) => (
                    Status::Pass,
                    format!(
                        "invariant forms span dimension {}; a non-singular one is {}",
                        space.dim(),
                        if b.is_alternating() {
                            "alternating"
                        } else {
                            "not alternating"
                        }
                    ),
                    Some(json!({"gram": b.gram().to_rows(), "alternating": b.is_alternating()})),
                ),
                FormSearch::NoneExists => (
                    Status::Fail,
                    format!("invariant forms span dimension {}, all singular", space.dim()),
                    None,
                ),
                FormSearch::NotFound => (
                    Status::Inconclusive,
                    format!(
                        "invariant forms span dimension {}; sampling found no non-singular one",
                        space.dim()
                    ),
                    None,
                ),
            };
            CheckReport {
                check: "forms".into(),
                subject: subject.into(),
                status,
                detail,
                witness,
            }
        }
    };
    Ok(report)
}

pub fn verify(driver: &str, file: Option<&Path>, cap: usize, seed: u64) -> Result<Vec<DriverReport>, CliError> {
    let Some(path) = file else {
        if driver == "all" {
            return Ok(DRIVERS
                .iter()
                .map(|d| run_driver(d, cap, seed))
                .collect::<Result<_, _>>()?);
        }
        if !DRIVERS.contains(&driver) {
            return Err(CliError::Usage(format!("unknown driver {driver:?}")));
        }
        return Ok(vec![run_driver(driver, cap, seed)?]);
    };
    let (subject, v) = load(path, cap)?;
    let mut report = DriverReport::new(driver);
    let case: CaseReport = match driver {
        "remark21" => remark21_case(&subject, &v, None, Expect::Holds, seed)?,
        "lemma22" => lemma22_pipeline(&subject, &v, Expect::Holds, seed)?.0,
        "prop32" => prop32_case(&subject, &v, Expect::Holds, seed)?,
        "prop34" => prop34_case(&subject, &v, Expect::Holds, cap, seed)?.0,
        "theoremA" => {
            let cls = classify_theorem_a(&subject, &v, cap, seed)?;
            let mut case = CaseReport::new(subject.as_str(), Expect::Holds);
            case.conclusion(
                "classified",
                cls.verdict.status(),
                format!("n = {:?}, |K| = {:?}", cls.n, cls.k_order),
            );
            case.diagnostics = cls.diagnostics.clone();
            report.classifications.push(cls);
            case.finish()
        }
        other if DRIVERS.contains(&other) => {
            return Err(CliError::Usage(format!(
                "driver {other} runs on its own corpus and takes no file"
            )))
        }
        other => return Err(CliError::Usage(format!("unknown driver {other:?}"))),
    };
    report.cases.push(case);
    Ok(vec![report.finish()])
}

fn render_check(r: &CheckReport) -> String {
    let mut s = format!("{} {}: {}\n  {}\n", r.check, r.subject, r.status.label(), r.detail);
    if let Some(w) = &r.witness {
        writeln!(s, "  witness: {w}").unwrap();
    }
    s
}

fn render_certificates(s: &mut String, indent: &str, kind: &str, certs: &[evprop_core::verify::Certificate]) {
    for c in certs {
        writeln!(s, "{indent}{:<12} {kind}: {} ({})", c.status.label(), c.name, c.detail).unwrap();
    }
}

fn render_case(s: &mut String, c: &CaseReport) {
    let expect = match c.expect {
        Expect::Holds => "expected to hold",
        Expect::Rejected => "expected to be rejected",
    };
    writeln!(s, "  case {}: {} ({expect})", c.subject, c.outcome.label()).unwrap();
    render_certificates(s, "    ", "hypothesis", &c.hypotheses);
    render_certificates(s, "    ", "conclusion", &c.conclusions);
    for d in &c.diagnostics {
        writeln!(s, "    note: {d}").unwrap();
    }
}

fn render_driver(r: &DriverReport) -> String {
    let mut s = format!("{}: {}\n  statement: {}\n", r.driver, r.status.label(), r.statement);
    for c in &r.cases {
        render_case(&mut s, c);
    }
    for c in &r.classifications {
        s.push_str(&render_classification(c, "  "));
    }
    s
}

fn render_classification(r: &ClassificationReport, indent: &str) -> String {
    let verdict = serde_json::to_value(r.verdict).unwrap();
    let mut s = format!(
        "{indent}classification of {}: {}\n",
        r.subject,
        verdict.as_str().unwrap()
    );
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |x| x.to_string());
    writeln!(
        s,
        "{indent}  p = {}, dim V = {}, |G| = {}, n = {}, |K| = {}, block orbits {:?}",
        r.p,
        r.dim,
        r.group_order,
        opt(r.n),
        opt(r.k_order),
        r.block_orbits
    )
    .unwrap();
    let inner = format!("{indent}  ");
    render_certificates(&mut s, &inner, "hypothesis", &r.hypotheses);
    render_certificates(&mut s, &inner, "certificate", &r.certificates);
    for d in &r.diagnostics {
        writeln!(s, "{inner}note: {d}").unwrap();
    }
    s
}
