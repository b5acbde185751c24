//! `macd` — construction, verification, norm tables, positivity scans,
//! graph export and singularity certification for nonsymmetric Macdonald
//! polynomials, scalar and vector-valued, in exact arithmetic.
//!
//! Exit codes: 0 success, 1 bad input, 2 non-generic parameters,
//! 3 verification failure, 4 invalid certificate.

mod verify;

use clap::{Parser, Subcommand};
use macdonald::combinat::{compositions_of, Composition, Shape};
use macdonald::form::{norm_factored, positivity_classify_shape, region_boundary_csv};
use macdonald::graph::GraphBuilder;
use macdonald::hecke::ModuleData;
use macdonald::qt::is_generic_point;
use macdonald::tableaux::Tableau;
use num::BigRational;
use std::process::ExitCode;
use std::sync::Arc;

const EXIT_INPUT: u8 = 1;
const EXIT_NONGENERIC: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_CERTIFICATE: u8 = 4;

#[derive(Parser)]
#[command(name = "macd", about = "Exact engine for nonsymmetric Macdonald polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one Macdonald polynomial and print the node data.
    Poly {
        #[arg(long)]
        shape: String,
        /// Composition, e.g. 0,1,0 (length must equal the shape size).
        #[arg(long)]
        comp: String,
        /// Tableau selector: S0, S1, an index, or a content vector [c1,...].
        #[arg(long, default_value = "S0")]
        tableau: String,
        /// Evaluate coefficients at an exact rational point "q,t".
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run exact verification suites.
    Verify {
        #[arg(long)]
        shape: String,
        /// hecke | jm | operators | eigen | norms | bf2 | fdxg | all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        /// Degree for the fdxg suite (alias kept separate for clarity).
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Norm table for all labels up to a degree, symbolic or at a point.
    Norms {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 1)]
        max_degree: u32,
        /// Exact rational point "q,t", e.g. 1/10,3/2.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Classify a point against the positivity region, or emit boundary CSV.
    Positivity {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        point: Option<String>,
        /// Maximal hook for the boundary CSV.
        #[arg(long)]
        h: Option<u32>,
        #[arg(long, default_value_t = false)]
        boundary_csv: bool,
        #[arg(long, default_value_t = 1.0)]
        log_range: f64,
        #[arg(long, default_value_t = 100)]
        samples: u32,
    },
    /// Certify a singular polynomial family on its boundary curve.
    Singular {
        #[arg(long)]
        shape: String,
        /// S0 or S1.
        #[arg(long)]
        family: String,
    },
    /// Export the Yang-Baxter graph in DOT format.
    Graph {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 1)]
        max_degree: u32,
    },
    /// Dump the generator matrices of the module in JSON.
    Tau {
        #[arg(long)]
        shape: String,
    },
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(code)
}

fn parse_shape(s: &str) -> Result<Shape, String> {
    Shape::parse(s).map_err(|e| e.to_string())
}

fn parse_point(s: &str) -> Result<(BigRational, BigRational), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("point must be `q,t`, got `{}`", s));
    }
    let q: BigRational = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("bad rational `{}`", parts[0]))?;
    let t: BigRational = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("bad rational `{}`", parts[1]))?;
    Ok((q, t))
}

fn parse_tableau(md: &ModuleData, sel: &str) -> Result<usize, String> {
    match sel {
        "S0" => Ok(md.extremal_indices().0),
        "S1" => Ok(md.extremal_indices().1),
        other => {
            if let Ok(idx) = other.parse::<usize>() {
                if idx < md.dim() {
                    return Ok(idx);
                }
                return Err(format!("tableau index {} out of range", idx));
            }
            if other.starts_with('[') && other.ends_with(']') {
                let inner = &other[1..other.len() - 1];
                let content: Result<Vec<i32>, _> =
                    inner.split(',').map(|x| x.trim().parse::<i32>()).collect();
                if let Ok(c) = content {
                    return md
                        .index_of_content(&c)
                        .ok_or_else(|| format!("no tableau with contents {}", other));
                }
            }
            if let Ok(t) = Tableau::parse(other) {
                if let Some(idx) = md.index_of_content(t.content_vector()) {
                    return Ok(idx);
                }
            }
            Err(format!("cannot resolve tableau selector `{}`", sel))
        }
    }
}

/// Point-mode guard: the run must avoid every denominator 1 - q^a t^b that
/// the construction can meet up to the given degree.
fn guard_generic(q0: &BigRational, t0: &BigRational, shape: &Shape, degree: u32) -> bool {
    let b_max = shape.max_hook().saturating_sub(1).max(1);
    is_generic_point(q0, t0, degree + 1, b_max)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Poly {
            shape,
            comp,
            tableau,
            point,
            format,
        } => {
            let shape = match parse_shape(&shape) {
                Ok(s) => s,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let alpha = match Composition::parse(&comp) {
                Ok(c) => c,
                Err(e) => return fail(EXIT_INPUT, &e.to_string()),
            };
            if alpha.len() != shape.size() {
                return fail(EXIT_INPUT, "composition length must equal the shape size");
            }
            let pt = match point {
                Some(p) => match parse_point(&p) {
                    Ok(pt) => {
                        if !guard_generic(&pt.0, &pt.1, &shape, alpha.weight()) {
                            return fail(
                                EXIT_NONGENERIC,
                                "point fails the genericity scan for this degree",
                            );
                        }
                        Some(pt)
                    }
                    Err(e) => return fail(EXIT_INPUT, &e),
                },
                None => None,
            };
            let md = ModuleData::new(shape);
            let tab = match parse_tableau(&md, &tableau) {
                Ok(t) => t,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let gb = GraphBuilder::new(md.clone());
            let node = gb.node(&alpha.0, tab);
            // the construction is symbolic, so the eigencheck is exact
            let ops = macdonald::poly::Operators::new(&md);
            let eigencheck = (1..=md.n()).all(|i| {
                ops.cherednik(&node.poly, i) == node.poly.scaled(&node.zeta_scalar(i))
            });
            let poly_json = match &pt {
                None => node.poly.to_json(&md),
                Some((q0, t0)) => {
                    let mut items = Vec::new();
                    for e in node.poly.exponents_desc() {
                        let v = node.poly.coeff(&e);
                        let mut coeffs = serde_json::Map::new();
                        for (tabidx, c) in v.iter() {
                            let key = format!("{:?}", md.tableau(tabidx).content_vector());
                            match c.eval(q0, t0) {
                                Ok(val) => {
                                    coeffs.insert(
                                        key,
                                        serde_json::Value::String(val.to_string()),
                                    );
                                }
                                Err(e) => return fail(EXIT_NONGENERIC, &e.to_string()),
                            }
                        }
                        items.push(serde_json::json!({
                            "exponent": e,
                            "coeffs": serde_json::Value::Object(coeffs),
                        }));
                    }
                    serde_json::Value::Array(items)
                }
            };
            if format == "text" {
                println!("alpha: {}", alpha);
                println!(
                    "tableau: {} (contents {:?})",
                    md.tableau(tab).serialize(),
                    md.tableau(tab).content_vector()
                );
                println!(
                    "zeta: [{}]",
                    (1..=md.n())
                        .map(|i| node.zeta_scalar(i).to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                println!("eta: {}", node.eta_scalar());
                println!("r_word: {:?}", node.r_word.letters);
                println!("eigencheck: {}", eigencheck);
                println!("poly: {}", poly_json);
            } else {
                let doc = serde_json::json!({
                    "schema": 1,
                    "shape": md.shape.parts(),
                    "alpha": node.alpha,
                    "tableau": md.tableau(tab).serialize(),
                    "contents": md.tableau(tab).content_vector(),
                    "zeta": (1..=md.n()).map(|i| node.zeta_scalar(i).to_string()).collect::<Vec<_>>(),
                    "eta": node.eta_scalar().to_string(),
                    "r_word": node.r_word.letters,
                    "eigencheck": eigencheck,
                    "poly": poly_json,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            shape,
            suite,
            max_degree,
            degree,
        } => {
            let shape = match parse_shape(&shape) {
                Ok(s) => s,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let md = ModuleData::new(shape);
            let gb = GraphBuilder::new(md.clone());
            let run = |name: &str| -> verify::SuiteResult {
                match name {
                    "hecke" => verify::suite_hecke(&md, max_degree),
                    "jm" => verify::suite_jm(&md),
                    "operators" => verify::suite_operators(&md, max_degree),
                    "eigen" => verify::suite_eigen(&gb, max_degree),
                    "norms" => verify::suite_norms(&md, max_degree),
                    "bf2" => verify::suite_bf2(&gb, max_degree),
                    "fdxg" => verify::suite_fdxg(&gb, degree.unwrap_or(1)),
                    other => Err(format!("unknown suite `{}`", other)),
                }
            };
            let suites: Vec<&str> = if suite == "all" {
                vec!["hecke", "jm", "operators", "eigen", "norms", "bf2", "fdxg"]
            } else {
                vec![suite.as_str()]
            };
            let mut failed = false;
            for name in suites {
                match run(name) {
                    Ok(()) => println!("suite {}: PASS", name),
                    Err(msg) => {
                        println!("suite {}: FAIL — {}", name, msg);
                        failed = true;
                    }
                }
            }
            if failed {
                ExitCode::from(EXIT_VERIFY)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Norms {
            shape,
            max_degree,
            point,
            format,
        } => {
            let shape = match parse_shape(&shape) {
                Ok(s) => s,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let md = ModuleData::new(shape.clone());
            let pt = match point {
                Some(p) => match parse_point(&p) {
                    Ok(pt) => {
                        if !guard_generic(&pt.0, &pt.1, &shape, max_degree) {
                            return fail(
                                EXIT_NONGENERIC,
                                "point fails the genericity scan for this degree bound",
                            );
                        }
                        Some(pt)
                    }
                    Err(e) => return fail(EXIT_INPUT, &e),
                },
                None => None,
            };
            let mut entries = Vec::new();
            for d in 0..=max_degree {
                for alpha in compositions_of(d, md.n()) {
                    for tab in 0..md.dim() {
                        let f = norm_factored(&md, &alpha.0, tab);
                        let value = match &pt {
                            Some((q0, t0)) => match f.eval(q0, t0) {
                                Ok(v) => v.to_string(),
                                Err(e) => return fail(EXIT_NONGENERIC, &e.to_string()),
                            },
                            None => f.to_scalar().to_string(),
                        };
                        entries.push((alpha.to_string(), tab, value));
                    }
                }
            }
            if format == "text" {
                for (alpha, tab, value) in entries {
                    println!(
                        "alpha {} tableau {:?}: {}",
                        alpha,
                        md.tableau(tab).content_vector(),
                        value
                    );
                }
            } else {
                let doc = serde_json::json!({
                    "schema": 1,
                    "shape": md.shape.parts(),
                    "entries": entries.iter().map(|(alpha, tab, value)| serde_json::json!({
                        "alpha": alpha,
                        "contents": md.tableau(*tab).content_vector(),
                        "norm": value,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            ExitCode::SUCCESS
        }
        Command::Positivity {
            shape,
            point,
            h,
            boundary_csv,
            log_range,
            samples,
        } => {
            if boundary_csv {
                let h = match h.or_else(|| {
                    shape
                        .as_deref()
                        .and_then(|s| parse_shape(s).ok())
                        .map(|s| s.max_hook())
                }) {
                    Some(h) if h >= 1 => h,
                    _ => return fail(EXIT_INPUT, "boundary CSV needs --h or --shape"),
                };
                print!("{}", region_boundary_csv(h, log_range, samples));
                return ExitCode::SUCCESS;
            }
            let shape = match shape.as_deref().map(parse_shape) {
                Some(Ok(s)) => s,
                Some(Err(e)) => return fail(EXIT_INPUT, &e),
                None => return fail(EXIT_INPUT, "positivity needs --shape with --point"),
            };
            let (q0, t0) = match point.as_deref().map(parse_point) {
                Some(Ok(p)) => p,
                Some(Err(e)) => return fail(EXIT_INPUT, &e),
                None => return fail(EXIT_INPUT, "positivity needs --point"),
            };
            if t0 == BigRational::from_integer(1.into()) {
                return fail(EXIT_INPUT, "t must differ from 1");
            }
            match positivity_classify_shape(&shape, &q0, &t0) {
                Ok(class) => {
                    let doc = serde_json::json!({
                        "schema": 1,
                        "shape": shape.parts(),
                        "q": q0.to_string(),
                        "t": t0.to_string(),
                        "max_hook": shape.max_hook(),
                        "class": class.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(EXIT_INPUT, &e.to_string()),
            }
        }
        Command::Singular { shape, family } => {
            let shape = match parse_shape(&shape) {
                Ok(s) => s,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let md = ModuleData::new(shape);
            if md.dim() < 2 {
                return fail(
                    EXIT_INPUT,
                    "singular certification needs a module of dimension >= 2",
                );
            }
            let cert = match family.as_str() {
                "S1" => macdonald::singular::certify_singular_s1(Arc::clone(&md)),
                "S0" => macdonald::singular::certify_singular_s0(Arc::clone(&md)),
                other => return fail(EXIT_INPUT, &format!("unknown family `{}`", other)),
            };
            match cert {
                Ok(c) => {
                    println!("{}", serde_json::to_string_pretty(&c).unwrap());
                    if c.valid {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_CERTIFICATE)
                    }
                }
                Err(e) => fail(EXIT_CERTIFICATE, &e.to_string()),
            }
        }
        Command::Graph { shape, max_degree } => {
            let shape = match parse_shape(&shape) {
                Ok(s) => s,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let gb = GraphBuilder::new(ModuleData::new(shape));
            print!("{}", gb.export_dot(max_degree));
            ExitCode::SUCCESS
        }
        Command::Tau { shape } => {
            let shape = match parse_shape(&shape) {
                Ok(s) => s,
                Err(e) => return fail(EXIT_INPUT, &e),
            };
            let md = ModuleData::new(shape);
            let mut gens = Vec::new();
            for i in 1..md.n() {
                let m = md.gen_matrix(i);
                let rows: Vec<Vec<String>> = (0..md.dim())
                    .map(|r| (0..md.dim()).map(|c| m.at(r, c).to_string()).collect())
                    .collect();
                gens.push(serde_json::json!({ "generator": i, "rows": rows }));
            }
            let doc = serde_json::json!({
                "schema": 1,
                "shape": md.shape.parts(),
                "tableaux": md.tableaux().iter().map(|t| format!("{:?}", t.content_vector())).collect::<Vec<_>>(),
                "generators": gens,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            ExitCode::SUCCESS
        }
    }
}
