use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vecdual::duality::{
    check_feasible_d, check_feasible_j, check_feasible_l, check_feasible_u, construct_dual_solution, membership,
    recover_primal, ImageSet, MembershipVerdict,
};
use vecdual::efficiency::{certify, efficient_vertices, enumerate_vertices, is_efficient, EfficiencyCertificate};
use vecdual::harness::{
    emit_report, run_all_fixtures, run_random_campaign, verify_problem, CampaignConfig, ReportFormat,
    VerificationReport,
};
use vecdual::model::{
    load_problem, objective_d, objective_j, objective_l, DualCandidateD, DualCandidateJ, DualCandidateL,
    DualCandidateU, UFlavor,
};
use vecdual::{Error, QMatrix, QVector, VlpProblem};

#[derive(Parser)]
#[command(
    name = "vecdual",
    version,
    about = "Exact duality workbench for linear vector optimization"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DualKind {
    #[value(name = "D")]
    D,
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    #[value(name = "L")]
    L,
    #[value(name = "H")]
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    #[value(name = "hB")]
    HB,
    #[value(name = "hL")]
    HL,
    #[value(name = "hJ")]
    HJ,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a problem file
    Validate { file: PathBuf },
    /// List the vertices of the feasible set
    Vertices { file: PathBuf },
    /// List efficient vertices with scalarization certificates
    Efficient { file: PathBuf },
    /// Decide efficiency of a feasible point
    Certify {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Build a dual feasible point with the same objective as an efficient point
    DualConstruct {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Check feasibility of a dual candidate file
    CheckDual {
        file: PathBuf,
        #[arg(long)]
        dual: PathBuf,
        #[arg(long, value_enum)]
        kind: DualKind,
    },
    /// Find a feasible point with a given objective value
    Recover {
        file: PathBuf,
        #[arg(long)]
        value: String,
    },
    /// Decide membership of a value in a dual image set
    Member {
        file: PathBuf,
        #[arg(long, value_enum)]
        set: SetArg,
        #[arg(long)]
        value: String,
        /// Include the reconstructed dual point
        #[arg(long)]
        witness: bool,
    },
    /// Run every verification check on one problem
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the checks on seeded random instances
    Campaign {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Report zero elapsed times so output is byte-identical across runs
        #[arg(long)]
        no_timings: bool,
    },
    /// Run every registered fixture
    Examples,
}

/// A reply: human text, JSON value, and whether a verification failed.
struct Reply {
    human: String,
    json: Value,
    failed: bool,
}

impl Reply {
    fn ok(human: String, json: Value) -> Self {
        Reply {
            human,
            json,
            failed: false,
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })
}

fn problem(path: &Path) -> Result<VlpProblem, Error> {
    load_problem(&read(path)?).map_err(|e| match e {
        Error::Parse { context, message } => Error::Parse {
            context: format!("{}: {context}", path.display()),
            message,
        },
        other => other,
    })
}

fn vector(arg: &str, what: &str) -> Result<QVector, Error> {
    serde_json::from_str(arg).map_err(|e| Error::Parse {
        context: format!("--{what}"),
        message: e.to_string(),
    })
}

fn points_text(points: &[QVector]) -> String {
    if points.is_empty() {
        return "none\n".into();
    }
    points.iter().map(|x| format!("{x}\n")).collect()
}

fn matrix_text(m: &QMatrix) -> String {
    let rows: Vec<String> = m.row_vectors().iter().map(ToString::to_string).collect();
    format!("[{}]", rows.join(", "))
}

fn report_reply(report: VerificationReport, format: Format) -> Reply {
    let failed = !report.is_success();
    let mut human = emit_report(&report, ReportFormat::Human);
    let counts = report.execution_counts();
    human.push_str(&format!(
        "{} records: {} pass, {} fail, {} skipped\n",
        report.records().len(),
        report.count(vecdual::harness::Status::Pass),
        report.count(vecdual::harness::Status::Fail),
        report.count(vecdual::harness::Status::Skipped),
    ));
    for (check, n) in counts {
        human.push_str(&format!("  {check}: {n} cases\n"));
    }
    let json = match format {
        Format::Json => serde_json::from_str(&emit_report(&report, ReportFormat::Json)).expect("report JSON"),
        Format::Human => Value::Null,
    };
    Reply { human, json, failed }
}

fn certificate_text(cert: &EfficiencyCertificate) -> String {
    match cert {
        EfficiencyCertificate::EfficientWithScalarization { lambda, eta } => {
            format!("efficient: lambda = {lambda}, eta = {eta}")
        }
        EfficiencyCertificate::Dominated { dominator } => format!("dominated by {dominator}"),
        EfficiencyCertificate::UnboundedDomination { dominator } => {
            format!("dominated along an unbounded direction, e.g. by {dominator}")
        }
    }
}

fn dual_text(c: &DualCandidateD, h: &QVector) -> String {
    format!(
        "lambda = {}\nU = {}\nv = {}\nobjective = {h}\n",
        c.lambda,
        matrix_text(&c.u),
        c.v
    )
}

/// The candidate object from a dual file, unwrapping `member --witness` output.
fn candidate_value(text: &str, path: &Path) -> Result<Value, Error> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(match value.get("candidate") {
        Some(inner) => inner.clone(),
        None => value,
    })
}

fn decode<T: serde::de::DeserializeOwned>(value: Value, path: &Path) -> Result<T, Error> {
    serde_json::from_value(value).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })
}

fn check_dual(p: &VlpProblem, path: &Path, kind: DualKind) -> Result<Reply, Error> {
    let value = candidate_value(&read(path)?, path)?;
    let (name, feasible, objective) = match kind {
        DualKind::D => {
            let c: DualCandidateD = decode(value, path)?;
            let feasible = check_feasible_d(p, &c)?;
            ("D", feasible, feasible.then(|| objective_d(&c, p)).transpose()?)
        }
        DualKind::J => {
            let c: DualCandidateJ = decode(value, path)?;
            let feasible = check_feasible_j(p, &c)?;
            ("J", feasible, feasible.then(|| objective_j(&c, p)).transpose()?)
        }
        DualKind::L => {
            let c: DualCandidateL = decode(value, path)?;
            let feasible = check_feasible_l(p, &c)?;
            ("L", feasible, feasible.then(|| objective_l(&c)))
        }
        DualKind::I | DualKind::H => {
            let u = value.get("U").cloned().ok_or_else(|| Error::Parse {
                context: path.display().to_string(),
                message: "missing field `U`".into(),
            })?;
            let flavor = if matches!(kind, DualKind::I) {
                UFlavor::Orthant
            } else {
                UFlavor::Cone
            };
            let c = DualCandidateU {
                u: decode(u, path)?,
                flavor,
            };
            let name = if flavor == UFlavor::Cone { "H" } else { "I" };
            (name, check_feasible_u(p, &c)?, None)
        }
    };
    let mut human = if feasible {
        format!("feasible for {name}\n")
    } else {
        format!("not feasible for {name}\n")
    };
    if let Some(h) = &objective {
        human.push_str(&format!("objective = {h}\n"));
    }
    Ok(Reply {
        human,
        json: json!({"kind": name, "feasible": feasible, "objective": objective}),
        failed: !feasible,
    })
}

fn member_reply(verdict: MembershipVerdict, set: &str, d: &QVector, witness: bool) -> Reply {
    let mut human = if verdict.member {
        format!("member of {set}: {d}\n")
    } else {
        format!("not a member of {set}: {d}\n")
    };
    let mut json = json!({"set": set, "value": d, "member": verdict.member});
    if verdict.member {
        let (lambda, z) = (verdict.lambda.expect("member has λ"), verdict.z.expect("member has z"));
        human.push_str(&format!("lambda = {lambda}\nz = {z}\n"));
        json["lambda"] = json!(lambda);
        json["z"] = json!(z);
        if witness {
            let (kind, candidate) = match verdict.candidate.expect("member has a candidate") {
                vecdual::duality::DualWitness::D(c) => ("D", serde_json::to_value(c)),
                vecdual::duality::DualWitness::J(c) => ("J", serde_json::to_value(c)),
                vecdual::duality::DualWitness::L(c) => ("L", serde_json::to_value(c)),
            };
            let candidate = candidate.expect("candidate serializes");
            human.push_str(&format!("candidate ({kind}) = {candidate}\n"));
            json["kind"] = json!(kind);
            json["candidate"] = candidate;
        }
    }
    Reply::ok(human, json)
}

fn run(cli: Cli) -> Result<Reply, Error> {
    let format = cli.format;
    match cli.command {
        Command::Validate { file } => {
            let p = problem(&file)?;
            let cone = if p.cone().is_orthant() {
                "the nonnegative orthant".to_string()
            } else {
                format!("a cone on {} generators", p.cone().generators().len())
            };
            Ok(Reply::ok(
                format!(
                    "valid: n = {}, m = {}, k = {}, ordered by {cone}\n",
                    p.n(),
                    p.m(),
                    p.k()
                ),
                json!({"valid": true, "n": p.n(), "m": p.m(), "k": p.k(), "orthant": p.cone().is_orthant()}),
            ))
        }
        Command::Vertices { file } => {
            let vs = enumerate_vertices(&problem(&file)?)?;
            Ok(Reply::ok(points_text(&vs), json!({"vertices": vs})))
        }
        Command::Efficient { file } => {
            let p = problem(&file)?;
            let eff = efficient_vertices(&p)?;
            let mut human = String::new();
            let mut items = Vec::new();
            for (x, cert) in &eff {
                let lx = p.image(x)?;
                human.push_str(&format!("x = {x}  Lx = {lx}  {}\n", certificate_text(cert)));
                items.push(json!({"x": x, "image": lx, "certificate": cert}));
            }
            if eff.is_empty() {
                human.push_str("no efficient vertices\n");
            }
            Ok(Reply::ok(human, json!({"efficient": items})))
        }
        Command::Certify { file, point } => {
            let p = problem(&file)?;
            let x = vector(&point, "point")?;
            let cert = certify(&p, &x)?;
            Ok(Reply::ok(
                format!("{}\n", certificate_text(&cert)),
                json!({"efficient": is_efficient(&p, &x)?.is_efficient(), "certificate": cert}),
            ))
        }
        Command::DualConstruct { file, point } => {
            let p = problem(&file)?;
            let x = vector(&point, "point")?;
            let cert = certify(&p, &x)?;
            if !matches!(cert, EfficiencyCertificate::EfficientWithScalarization { .. }) {
                return Ok(Reply {
                    human: format!("no construction: {}\n", certificate_text(&cert)),
                    json: json!({"constructed": false, "certificate": cert}),
                    failed: true,
                });
            }
            let c = construct_dual_solution(&p, &x, &cert)?;
            let h = objective_d(&c, &p)?;
            Ok(Reply::ok(
                dual_text(&c, &h),
                json!({"constructed": true, "candidate": c, "objective": h}),
            ))
        }
        Command::CheckDual { file, dual, kind } => check_dual(&problem(&file)?, &dual, kind),
        Command::Recover { file, value } => {
            let p = problem(&file)?;
            let d = vector(&value, "value")?;
            match recover_primal(&p, &d)? {
                Some(x) => {
                    let efficient = is_efficient(&p, &x)?.is_efficient();
                    Ok(Reply::ok(
                        format!("x = {x}\nefficient: {efficient}\n"),
                        json!({"x": x, "efficient": efficient}),
                    ))
                }
                None => Ok(Reply::ok(format!("no feasible x with Lx = {d}\n"), json!({"x": null}))),
            }
        }
        Command::Member {
            file,
            set,
            value,
            witness,
        } => {
            let p = problem(&file)?;
            let d = vector(&value, "value")?;
            let (set, name) = match set {
                SetArg::HB => (ImageSet::HB, "hB"),
                SetArg::HL => (ImageSet::HL, "hL"),
                SetArg::HJ => (ImageSet::HJ, "hJ"),
            };
            Ok(member_reply(membership(&p, set, &d)?, name, &d, witness))
        }
        Command::Verify { file, seed } => {
            let p = problem(&file)?;
            let id = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "problem".into());
            Ok(report_reply(
                verify_problem(&id, &p, seed, &CampaignConfig::default()),
                format,
            ))
        }
        Command::Campaign {
            seed,
            count,
            no_timings,
        } => {
            let mut report = run_random_campaign(seed, count)?;
            if no_timings {
                report = report.strip_timings();
            }
            Ok(report_reply(report, format))
        }
        Command::Examples => Ok(report_reply(run_all_fixtures()?, format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(reply) => {
            match format {
                Format::Human => print!("{}", reply.human),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&reply.json).expect("JSON output serializes")
                ),
            }
            ExitCode::from(u8::from(reply.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
