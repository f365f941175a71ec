//! Command-line front end: parse structure-constant JSON, run validation,
//! classification, invariant, normal-form, duality, contraction, network and
//! family-generator commands, and render text, JSON, or DOT output.

pub mod contraction;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lieclass_catalog::{family, Catalog};
use lieclass_classifier::{
    canonical_njnf, chirality, classify, duality_verdict, Classification, VerdictMethod,
};
use lieclass_core::scalar::{format_q, parse_q, Q};
use lieclass_core::tensor::Violation;
use lieclass_core::{json as algjson, StructureConstants};
use lieclass_invariants::invariant_signature;
use lieclass_transitions::{build_graph, contract_limit, EdgeKind};
use serde_json::json;
use thiserror::Error;

pub use contraction::{parse_contraction_spec, parse_ratfun};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation: wrong flags, shapes, or spec syntax. Exit 2.
    #[error("{0}")]
    Usage(String),
    /// Well-formed request about bad data: unreadable input, invalid
    /// algebra, unknown class or family. Exit 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

fn domain(msg: impl Into<String>) -> CliError {
    CliError::Domain(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "lieclass",
    version,
    about = "Exact classification, contraction, and transition networks of low-dimensional real Lie algebras"
)]
pub struct Cli {
    /// Catalog JSON file overriding the bundled one (also via the
    /// LIECLASS_CATALOG environment variable).
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,

    /// Output format; `dot` is accepted by the graph command only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Also render parameter values as decimal approximations.
    #[arg(long, global = true)]
    pub approx: bool,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Check the Lie-algebra axioms and report every violation.
    Validate {
        /// Path to a structure-constant JSON file, `-` for stdin, or inline JSON.
        input: String,
    },
    /// Name the isomorphism class of an algebra of dimension at most 4.
    Classify { input: String },
    /// Print the basis-independent invariant fingerprint.
    Invariants { input: String },
    /// Print the normalized real Jordan form of the restricted adjoint.
    Njnf { input: String },
    /// Decide selfduality and report a witness or handedness.
    Dual { input: String },
    /// Apply a contraction family and classify the limit.
    Contract {
        input: String,
        /// Family spec: `iw:m`, `iw:m:[[rows]]`, or a matrix of rational
        /// functions of t such as [[1,0],[0,"t"]].
        #[arg(long)]
        family: String,
    },
    /// Materialize the transition network of dimension 3 or 4.
    Graph {
        #[arg(long)]
        dim: usize,
        /// Split non-selfdual classes into right/left handed copies.
        #[arg(long)]
        oriented: bool,
    },
    /// Generate a member of one of the any-dimension series as JSON.
    Family {
        /// Series name: ve, II, IV, ii, iv, a_m, A_n2, or nA_1.
        name: String,
        #[arg(long)]
        n: usize,
        /// Scaling-block size for the a_m series.
        #[arg(long)]
        m: Option<usize>,
        /// Rational parameter for the A_n2 series.
        #[arg(long)]
        a: Option<String>,
    },
}

fn load_algebra(input: &str) -> Result<StructureConstants, CliError> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| domain(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| domain(format!("cannot read `{input}`: {e}")))?
    };
    algjson::from_json_str(&text).map_err(|e| domain(e.to_string()))
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::Jacobi { i, j, k, residual } => format!(
            "Jacobi identity fails on (e{i}, e{j}, e{k}); residual [{}]",
            residual.iter().map(format_q).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn params_json(c: &Classification, approx: bool) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    for (name, v) in &c.params {
        if approx {
            m.insert(name.clone(), json!({ "value": v.to_string(), "approx": v.approx() }));
        } else {
            m.insert(name.clone(), json!(v.to_string()));
        }
    }
    serde_json::Value::Object(m)
}

fn class_line(
    c: &Classification,
    cat: &Catalog,
    sc: &StructureConstants,
    approx: bool,
) -> String {
    let mut out = c.id.clone();
    if let Some(class) = cat.get(&c.id) {
        if let Some(b) = &class.bianchi {
            let _ = write!(out, " (Bianchi {b})");
        }
    }
    for (name, v) in &c.params {
        let _ = write!(out, ", {name} = {v}");
        if approx {
            let _ = write!(out, " \u{2248} {:.6}", v.approx());
        }
    }
    let selfdual = cat.get(&c.id).map(|cl| cl.selfdual);
    match selfdual {
        Some(b) => {
            let _ = write!(out, ", selfdual: {}", yesno(b));
        }
        None => {
            let _ = write!(out, ", selfdual: unknown");
        }
    }
    let _ = write!(out, ", unimodular: {}", yesno(sc.is_unimodular()));
    out
}

pub fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let cat = Catalog::load(cli.catalog.as_deref()).map_err(|e| domain(e.to_string()))?;
    if cli.format == Format::Dot && !matches!(cli.cmd, Cmd::Graph { .. }) {
        return Err(CliError::Usage(
            "dot output is available only for the graph command".into(),
        ));
    }
    match &cli.cmd {
        Cmd::Validate { input } => {
            let sc = load_algebra(input)?;
            let report = sc.validate();
            let class = report
                .is_valid()
                .then(|| classify(&sc).ok())
                .flatten();
            let code = i32::from(!report.is_valid());
            let out = match cli.format {
                Format::Json => {
                    let violations: Vec<String> =
                        report.violations.iter().map(violation_text).collect();
                    let v = json!({
                        "valid": report.is_valid(),
                        "violations": violations,
                        "class": class.as_ref().map(|c| c.id.clone()),
                    });
                    format!("{v:#}\n")
                }
                _ => {
                    if report.is_valid() {
                        match class {
                            Some(c) => format!("valid ({})\n", c.id),
                            None => "valid\n".to_string(),
                        }
                    } else {
                        let mut s = String::from("invalid\n");
                        for v in &report.violations {
                            let _ = writeln!(s, "  {}", violation_text(v));
                        }
                        s
                    }
                }
            };
            Ok((out, code))
        }
        Cmd::Classify { input } => {
            let sc = load_algebra(input)?;
            let c = classify(&sc).map_err(|e| domain(e.to_string()))?;
            let out = match cli.format {
                Format::Json => {
                    let class = cat.get(&c.id);
                    let v = json!({
                        "id": c.id,
                        "params": params_json(&c, cli.approx),
                        "factors": c.factor_ids,
                        "bianchi": class.and_then(|cl| cl.bianchi.clone()),
                        "petrov": class.and_then(|cl| cl.petrov.clone()),
                        "selfdual": class.map(|cl| cl.selfdual),
                        "unimodular": sc.is_unimodular(),
                    });
                    format!("{v:#}\n")
                }
                _ => format!("{}\n", class_line(&c, &cat, &sc, cli.approx)),
            };
            Ok((out, 0))
        }
        Cmd::Invariants { input } => {
            let sc = load_algebra(input)?;
            let sig = invariant_signature(&sc);
            let out = match cli.format {
                Format::Json => {
                    let v = json!({
                        "dim": sig.dim,
                        "derived_dim": sig.derived_dim,
                        "center_dim": sig.center_dim,
                        "unimodular": sig.unimodular,
                        "nilpotent": sig.nilpotent,
                        "solvable": sig.solvable,
                        "killing_signature": [
                            sig.killing_signature.0,
                            sig.killing_signature.1,
                            sig.killing_signature.2,
                        ],
                        "behr": sig.behr.as_ref().map(|b| json!({
                            "n_signs": [b.n_signs.0, b.n_signs.1, b.n_signs.2],
                            "a_nonzero": b.a_nonzero,
                        })),
                    });
                    format!("{v:#}\n")
                }
                _ => {
                    let mut s = String::new();
                    let _ = writeln!(s, "dim: {}", sig.dim);
                    let _ = writeln!(s, "derived dim: {}", sig.derived_dim);
                    let _ = writeln!(s, "center dim: {}", sig.center_dim);
                    let _ = writeln!(s, "unimodular: {}", yesno(sig.unimodular));
                    let _ = writeln!(s, "nilpotent: {}", yesno(sig.nilpotent));
                    let _ = writeln!(s, "solvable: {}", yesno(sig.solvable));
                    let k = sig.killing_signature;
                    let _ = writeln!(s, "killing signature: ({}, {}, {})", k.0, k.1, k.2);
                    if let Some(b) = &sig.behr {
                        let n = b.n_signs;
                        let _ = writeln!(
                            s,
                            "quadratic-form signs: ({}, {}, {}), trace vector nonzero: {}",
                            n.0,
                            n.1,
                            n.2,
                            yesno(b.a_nonzero)
                        );
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Njnf { input } => {
            let sc = load_algebra(input)?;
            let form = canonical_njnf(&sc).map_err(|e| domain(e.to_string()))?;
            let out = match cli.format {
                Format::Json => {
                    let v = json!({
                        "njnf": form.as_ref().map(|f| f.to_string()),
                        "blocks": form.as_ref().map(|f| {
                            f.blocks().iter().map(|b| json!({ "size": b.size })).collect::<Vec<_>>()
                        }),
                    });
                    format!("{v:#}\n")
                }
                _ => match &form {
                    Some(f) => format!("{f}\n"),
                    None => "no restricted adjoint normal form (no distinguished abelian ideal)\n"
                        .to_string(),
                },
            };
            Ok((out, 0))
        }
        Cmd::Dual { input } => {
            let sc = load_algebra(input)?;
            let verdict = duality_verdict(&sc).map_err(|e| domain(e.to_string()))?;
            let hand = if verdict.selfdual {
                None
            } else {
                chirality(&sc).map_err(|e| domain(e.to_string()))?
            };
            let method = match verdict.method {
                VerdictMethod::SignedPermWitness => "signed-permutation witness",
                VerdictMethod::CatalogFlag => "classification table",
                VerdictMethod::SearchOnly => "witness search only",
            };
            let witness_rows = verdict.witness.as_ref().map(|w| {
                let m = w.matrix();
                (0..m.rows())
                    .map(|i| (0..m.cols()).map(|j| format_q(&m[(i, j)])).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            });
            let out = match cli.format {
                Format::Json => {
                    let v = json!({
                        "selfdual": verdict.selfdual,
                        "method": method,
                        "witness": witness_rows,
                        "chirality": hand.map(|h| format!("{h:?}")),
                    });
                    format!("{v:#}\n")
                }
                _ => {
                    let mut s = format!("selfdual: {} ({method})\n", yesno(verdict.selfdual));
                    if let Some(rows) = &witness_rows {
                        let _ = writeln!(s, "witness (columns are image basis vectors):");
                        for r in rows {
                            let _ = writeln!(s, "  [{}]", r.join(", "));
                        }
                    }
                    if let Some(h) = hand {
                        let _ = writeln!(s, "chirality: {h:?}");
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Contract { input, family } => {
            let sc = load_algebra(input)?;
            let fam = parse_contraction_spec(family, sc.dim())?;
            let limit = contract_limit(&sc, &fam).map_err(|e| domain(e.to_string()))?;
            let out = match limit {
                None => match cli.format {
                    Format::Json => format!(
                        "{:#}\n",
                        json!({ "diverges": true, "limit": null, "class": null })
                    ),
                    _ => "no finite limit: the family diverges as t -> 0\n".to_string(),
                },
                Some(lim) => {
                    let class = classify(&lim).ok();
                    let improper = classify(&sc)
                        .ok()
                        .zip(class.as_ref())
                        .map(|(src, c)| src.same_as(c));
                    match cli.format {
                        Format::Json => {
                            let doc: serde_json::Value =
                                serde_json::from_str(&algjson::to_json_string(&lim))
                                    .expect("tensor serialization is valid JSON");
                            let v = json!({
                                "diverges": false,
                                "limit": doc,
                                "class": class.as_ref().map(|c| json!({
                                    "id": c.id,
                                    "params": params_json(c, cli.approx),
                                })),
                                "improper": improper,
                            });
                            format!("{v:#}\n")
                        }
                        _ => {
                            let mut s = String::new();
                            match &class {
                                Some(c) => {
                                    let _ = writeln!(
                                        s,
                                        "limit: {}",
                                        class_line(c, &cat, &lim, cli.approx)
                                    );
                                }
                                None => {
                                    let _ = writeln!(s, "limit: (unclassified)");
                                }
                            }
                            if let Some(imp) = improper {
                                let _ = writeln!(s, "improper: {}", yesno(imp));
                            }
                            let _ = writeln!(s, "tensor: {}", algjson::to_json_string(&lim));
                            s
                        }
                    }
                }
            };
            Ok((out, 0))
        }
        Cmd::Graph { dim, oriented } => {
            let g = build_graph(*dim, *oriented).map_err(|e| domain(e.to_string()))?;
            let out = match cli.format {
                Format::Dot => g.to_dot(),
                Format::Json => format!("{:#}\n", g.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "nodes: {}", g.nodes().len());
                    for e in g.base_edges() {
                        let kind = match e.kind {
                            EdgeKind::Transition => "transition",
                            EdgeKind::ParametricLimit => "parametric limit",
                        };
                        let _ = writeln!(s, "{} -> {} ({kind}): {}", e.from, e.to, e.note);
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Family { name, n, m, a } => {
            let a_val: Option<Q> = match a {
                None => None,
                Some(s) => Some(parse_q(s).map_err(|e| CliError::Usage(e.to_string()))?),
            };
            let sc = family::family(name, *n, *m, a_val.as_ref())
                .map_err(|e| domain(e.to_string()))?;
            let out = match cli.format {
                Format::Json => {
                    let doc: serde_json::Value =
                        serde_json::from_str(&algjson::to_json_string(&sc))
                            .expect("tensor serialization is valid JSON");
                    format!("{doc:#}\n")
                }
                _ => {
                    let mut s = format!("dim: {}\n", sc.dim());
                    let mut by_pair: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
                    for (&(i, j, k), c) in sc.canonical_entries() {
                        let term = if c == &lieclass_core::qi(1) {
                            format!("e{k}")
                        } else {
                            format!("{}*e{k}", format_q(c))
                        };
                        by_pair.entry((i, j)).or_default().push(term);
                    }
                    for ((i, j), terms) in by_pair {
                        let _ = writeln!(s, "[e{i}, e{j}] = {}", terms.join(" + "));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
    }
}
