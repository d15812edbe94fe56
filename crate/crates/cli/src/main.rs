mod report;
mod suites;

use std::process::ExitCode;

use bipermutahedron::combinatorics::enumerate_bipermutations;
use bipermutahedron::deformation::{
    enumerate_walls, minkowski_quotient, nef_report, supermodular_case, wall_inequality, WallKind,
};
use bipermutahedron::geometry::{facets_json, vertex_of_bipermutation, vertices_json, SupportFunction};
use bipermutahedron::invariants::{
    bieulerian_by_descents, bieulerian_by_ehrhart, f_vector_bruteforce, f_vector_formula, h_from_f, polynomial_json,
};
use bipermutahedron::poly::IntPolynomial;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use report::{strings, Format, Report, Status};
use suites::{Params, Suite};

#[derive(Parser)]
#[command(name = "biperm", version, about = "Exact computations and checks for the bipermutahedron")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for randomized checks; echoed in every report header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker thread cap (0 = rayon default).
    #[arg(long, global = true, env = "BIPERM_THREADS", default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaceObject {
    Fan,
    Polytope,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaceMethod {
    Formula,
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyMethod {
    Descents,
    HFromF,
    Ehrhart,
}

#[derive(Subcommand)]
enum Command {
    /// Face numbers of the fan or of the polytope.
    Fvector {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "fan")]
        object: FaceObject,
        #[arg(long, value_enum, default_value = "formula")]
        method: FaceMethod,
    },
    /// h-vector of the fan, from its face numbers.
    Hvector {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: FaceMethod,
    },
    /// The biEulerian polynomial B_n.
    Bieulerian {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "descents")]
        method: PolyMethod,
    },
    /// Vertices v_B of the bipermutahedron.
    Vertices {
        #[arg(long)]
        n: usize,
    },
    /// Facet inequalities of the bipermutahedron.
    Facets {
        #[arg(long)]
        n: usize,
    },
    /// Walls with their inequalities, evaluated on a support function.
    Walls {
        #[arg(long)]
        n: usize,
        /// `biperm`, `harmonic`, `zero` or a CSV file.
        #[arg(long, default_value = "biperm")]
        support: String,
    },
    /// Checks every wall inequality on a support function.
    NefCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        support: String,
    },
    /// Largest λ with λQ a Minkowski summand of P.
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "biperm")]
        p: String,
        #[arg(long, default_value = "harmonic")]
        q: String,
    },
    /// Runs verification suites.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Size to check; each suite's default range when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

/// Bad input; exit code 2.
struct Malformed(String);

impl<E: std::fmt::Display> From<E> for Malformed {
    fn from(e: E) -> Self {
        Malformed(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.global.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.global.format, cli.global.seed));
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Violation => ExitCode::from(1),
            }
        }
        Err(Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn check_n(n: usize) -> Result<usize, Malformed> {
    if (1..=bipermutahedron::sets::MAX_ELEMENTS).contains(&n) {
        Ok(n)
    } else {
        Err(Malformed(format!("--n must be between 1 and {}", bipermutahedron::sets::MAX_ELEMENTS)))
    }
}

fn load_support(spec: &str, n: usize) -> Result<SupportFunction, Malformed> {
    Ok(match spec {
        "biperm" => SupportFunction::bipermutahedron(n),
        "harmonic" => SupportFunction::harmonic(n),
        "zero" => SupportFunction::zero(n),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Malformed(format!("{path}: {e}")))?;
            SupportFunction::parse_csv(&text, n).map_err(|e| Malformed(format!("{path}: {e}")))?
        }
    })
}

fn sequence_report(command: &'static str, n: usize, label: &str, values: &[BigInt]) -> Report {
    let coeffs = strings(values);
    Report::new(command, json!({ "n": n, label: coeffs }))
        .csv("index,value", coeffs.iter().enumerate().map(|(i, c)| format!("{i},{c}")).collect())
        .text(vec![coeffs.join(",")])
}

fn polynomial_report(command: &'static str, n: usize, p: &IntPolynomial) -> Report {
    let values: Vec<BigInt> = p.coeffs().to_vec();
    let mut r = sequence_report(command, n, "coeffs", &values);
    r.json = match polynomial_json(n, p) {
        serde_json::Value::Object(m) => m,
        _ => unreachable!("polynomial_json returns an object"),
    };
    r
}

fn run(cli: &Cli) -> Result<Report, Malformed> {
    match &cli.command {
        Command::Fvector { n, object, method } => {
            let n = check_n(*n)?;
            let fan = match method {
                FaceMethod::Formula => f_vector_formula(n),
                FaceMethod::Bruteforce => f_vector_bruteforce(n),
            };
            let values = match object {
                FaceObject::Fan => fan,
                FaceObject::Polytope => std::iter::once(BigInt::from(1)).chain(fan.into_iter().rev()).collect(),
            };
            Ok(sequence_report("fvector", n, "f", &values))
        }
        Command::Hvector { n, method } => {
            let n = check_n(*n)?;
            let f = match method {
                FaceMethod::Formula => f_vector_formula(n),
                FaceMethod::Bruteforce => f_vector_bruteforce(n),
            };
            let h = h_from_f(&f, 2 * n - 2)?;
            Ok(sequence_report("hvector", n, "h", h.coeffs()))
        }
        Command::Bieulerian { n, method } => {
            let n = check_n(*n)?;
            let p = match method {
                PolyMethod::Descents => bieulerian_by_descents(n),
                PolyMethod::HFromF => h_from_f(&f_vector_formula(n), 2 * n - 2)?,
                PolyMethod::Ehrhart => bieulerian_by_ehrhart(n)?,
            };
            Ok(polynomial_report("bieulerian", n, &p))
        }
        Command::Vertices { n } => {
            let n = check_n(*n)?;
            let rows = enumerate_bipermutations(n)
                .map(|b| {
                    let v = vertex_of_bipermutation(&b);
                    format!("{b};{};{}", strings(&v.top).join(","), strings(&v.bottom).join(","))
                })
                .collect();
            Ok(Report::new("vertices", vertices_json(n)).csv("biperm;top;bottom", rows))
        }
        Command::Facets { n } => {
            let n = check_n(*n)?;
            let json = facets_json(n);
            let rows = json["facets"]
                .as_array()
                .map(|fs| {
                    fs.iter()
                        .map(|f| {
                            let set = |k: &str| {
                                f[k].as_array().map(|a| a.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
                            };
                            format!(
                                "{};{};{}",
                                set("S").unwrap_or_default(),
                                set("T").unwrap_or_default(),
                                f["rhs"].as_str().unwrap_or_default()
                            )
                        })
                        .collect()
                })
                .unwrap_or_default();
            Ok(Report::new("facets", json).csv("S;T;rhs", rows))
        }
        Command::Walls { n, support } => {
            let n = check_n(*n)?;
            let h = load_support(support, n)?;
            let mut rows = Vec::new();
            let mut items = Vec::new();
            for w in enumerate_walls(n) {
                let ineq = wall_inequality(&w);
                let value = ineq.evaluate(&h);
                let kind = match w.kind() {
                    WallKind::A => format!("A/{:?}", supermodular_case(&w).expect("kind A")),
                    WallKind::B => "B".to_string(),
                };
                rows.push(format!("{w};{kind};{value};{ineq}"));
                items.push(
                    json!({ "wall": w.to_string(), "kind": kind, "value": value.to_string(), "inequality": ineq }),
                );
            }
            Ok(Report::new("walls", json!({ "n": n, "support": support, "walls": items }))
                .csv("wall;kind;value;inequality", rows))
        }
        Command::NefCheck { n, support } => {
            let n = check_n(*n)?;
            let h = load_support(support, n)?;
            let r = nef_report(&h);
            let mut text = vec![format!("nef: {}", r.nef), format!("ample: {}", r.ample)];
            if let Some((w, v)) = &r.violation {
                text.push(format!("violated wall-crossing inequality at wall {w}: value {v}"));
            }
            if let Some((w, v)) = &r.degenerate {
                text.push(format!("first tight wall {w}: value {v}"));
            }
            let status = Status::from_passed(r.nef);
            Ok(Report::new("nef-check", json!(r))
                .csv("nef;ample", vec![format!("{};{}", r.nef, r.ample)])
                .text(text)
                .status(status))
        }
        Command::Quotient { n, p, q } => {
            let n = check_n(*n)?;
            let (hp, hq) = (load_support(p, n)?, load_support(q, n)?);
            Ok(match minkowski_quotient(&hp, &hq) {
                Ok((value, quot)) => {
                    // A zero quotient means no positive multiple of Q is a summand.
                    let status = Status::from_passed(value > BigRational::from_integer(0.into()));
                    Report::new("quotient", json!({ "n": n, "value": quot.value, "binding_wall": quot.binding_wall }))
                        .csv("value;binding_wall", vec![format!("{};{}", quot.value, quot.binding_wall)])
                        .text(vec![quot.value.clone()])
                        .status(status)
                }
                Err(e) => Report::new("quotient", json!({ "n": n, "error": e.to_string() }))
                    .csv("error", vec![e.to_string()])
                    .text(vec![format!("error: {e}")])
                    .status(Status::Violation),
            })
        }
        Command::Check { suite, n, samples } => {
            let params = Params { samples: *samples, seed: cli.global.seed };
            let mut checks = Vec::new();
            for member in suite.members() {
                let sizes = match n {
                    Some(n) => {
                        let n = check_n(*n)?;
                        n..=n
                    }
                    None => member.default_sizes(),
                };
                for size in sizes {
                    checks.extend(suites::run(member, size, &params));
                }
            }
            let passed = !checks.iter().any(suites::Check::failed);
            let lines: Vec<String> = checks.iter().map(suites::Check::line).collect();
            let summary = format!("{} of {} checks failed", checks.iter().filter(|c| c.failed()).count(), checks.len());
            Ok(Report::new("check", json!({ "suite": suite, "passed": passed, "samples": samples, "checks": checks }))
                .csv("verdict suite n check", lines.clone())
                .text(lines.into_iter().chain([summary]).collect())
                .status(Status::from_passed(passed)))
        }
    }
}
