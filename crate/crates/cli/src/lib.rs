//! Command-line surface over the `k3bn` library. Every subcommand produces a
//! [`report::ReportDocument`] rendered as a table (default), CSV, or JSON.
//!
//! Exit codes: 0 on success, 1 on a domain error (or a failing audit
//! verdict), 2 on a usage error.

pub mod report;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use k3bn::bn;
use k3bn::bundles::{self, BundleInvariants, MukaiVector};
use k3bn::lattice;
use k3bn::lifting::{self, AuditCase};

use report::{Cell, Format, ReportDocument};

type Int = BigInt;

/// Result of one invocation: exit code plus captured output streams.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "k3bn", version, about = "Exact Brill-Noether numerics for polarized K3 surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_int(s: &str) -> Result<Int, String> {
    s.parse::<Int>().map_err(|_| format!("`{s}` is not an integer"))
}

#[derive(Subcommand)]
enum Cmd {
    /// Brill-Noether number rho(g,r,d) with the Clifford index and predicates.
    Rho {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        r: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        d: Int,
    },
    /// Marking-lattice discriminant Delta(g,r,d) and the Hodge constraint.
    Delta {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        r: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        d: Int,
    },
    /// Brill-Noether special Noether-Lefschetz divisors in genus g.
    #[command(name = "classify-nl")]
    ClassifyNl {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Int,
    },
    /// Non-computing linear systems in genus g.
    Noncomputing {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Int,
    },
    /// Donagi-Morrison lift candidates of a Brill-Noether special g^r_d.
    Lifts {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        r: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        d: Int,
        /// Clifford index of the ambient curve; defaults to floor((g-1)/2).
        #[arg(long = "gamma-c", value_parser = parse_int, allow_hyphen_values = true)]
        gamma_c: Option<Int>,
        /// Use the brute-force box filter instead of the bounded enumerator.
        #[arg(long = "box")]
        boxed: bool,
    },
    /// Mukai self-pairing and stability feasibility, from a raw vector
    /// (--rank --c1sq --c2) or from an LM bundle (--g --r --d).
    Mukai {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        rank: Option<Int>,
        #[arg(long = "c1sq", value_parser = parse_int, allow_hyphen_values = true)]
        c1_sq: Option<Int>,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        c2: Option<Int>,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Option<Int>,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        r: Option<Int>,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        d: Option<Int>,
    },
    /// Replay the non-computing case analysis for one genus or a range.
    /// Exits 0 only when every verdict is true.
    Audit {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Option<Int>,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        from: Option<Int>,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        to: Option<Int>,
        /// One row per lift candidate instead of one row per case.
        #[arg(long)]
        detail: bool,
    },
    /// Lifting degree bounds and thresholds at (g, r).
    Bounds {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        g: Int,
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        r: Int,
        /// Clifford index gamma(A) of the source series; enables the
        /// delta_upper and glm_gamma_ceiling rows.
        #[arg(long = "gamma-a", value_parser = parse_int, allow_hyphen_values = true)]
        gamma_a: Option<Int>,
        /// Clifford index of a gLM quotient; enables the instability
        /// threshold row.
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        k: Option<Int>,
        /// Length correction for the instability threshold (default 0).
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        ell: Option<Int>,
        /// Curve Clifford index for the g^3_d lifting bound.
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        gamma: Option<Int>,
        /// Minimal square of an effective class with D^2 >= 0.
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        m: Option<Int>,
        /// Minimal positive slope of such a class.
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        mu: Option<Int>,
        /// h^1(S, L(-C)); enables the expected_square row.
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        h1: Option<Int>,
    },
}

enum RunError {
    Usage(String),
    Domain(k3bn::Error),
}

impl From<k3bn::Error> for RunError {
    fn from(e: k3bn::Error) -> Self {
        RunError::Domain(e)
    }
}

/// Execute one invocation. `args` does not include the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut argv: Vec<String> = vec!["k3bn".into()];
    argv.extend(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok((doc, success)) => Outcome {
            code: if success { 0 } else { 1 },
            stdout: doc.render(cli.format),
            stderr: String::new(),
        },
        Err(RunError::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("usage error: {msg}\n"),
        },
        Err(RunError::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cmd: Cmd) -> Result<(ReportDocument, bool), RunError> {
    match cmd {
        Cmd::Rho { g, r, d } => cmd_rho(g, r, d),
        Cmd::Delta { g, r, d } => cmd_delta(g, r, d),
        Cmd::ClassifyNl { g } => cmd_classify_nl(g),
        Cmd::Noncomputing { g } => cmd_noncomputing(g),
        Cmd::Lifts { g, r, d, gamma_c, boxed } => cmd_lifts(g, r, d, gamma_c, boxed),
        Cmd::Mukai { rank, c1_sq, c2, g, r, d } => cmd_mukai(rank, c1_sq, c2, g, r, d),
        Cmd::Audit { g, from, to, detail } => cmd_audit(g, from, to, detail),
        Cmd::Bounds { g, r, gamma_a, k, ell, gamma, m, mu, h1 } => {
            cmd_bounds(g, r, gamma_a, k, ell, gamma, m, mu, h1)
        }
    }
}

fn cmd_rho(g: Int, r: Int, d: Int) -> Result<(ReportDocument, bool), RunError> {
    let rho = bn::rho(&g, &r, &d)?;
    let gamma = bn::clifford_index(&r, &d)?;
    let special = bn::is_bn_special_type(&g, &r, &d)?;
    let non_computing = bn::is_non_computing(&g, &r, &d)?;
    let mut doc = ReportDocument::new(
        "rho",
        vec!["g", "r", "d", "rho", "gamma", "bn_special", "non_computing"],
    );
    doc.input("g", &g).input("r", &r).input("d", &d);
    doc.push_row(vec![
        Cell::from(&g),
        Cell::from(&r),
        Cell::from(&d),
        Cell::from(rho),
        Cell::from(gamma),
        Cell::from(special),
        Cell::from(non_computing),
    ]);
    Ok((doc, true))
}

fn cmd_delta(g: Int, r: Int, d: Int) -> Result<(ReportDocument, bool), RunError> {
    let disc = lattice::discriminant(&g, &r, &d)?;
    let hodge = lattice::hodge_constraint(&g, &r, &d)?;
    let mut doc = ReportDocument::new("delta", vec!["g", "r", "d", "delta", "hodge"]);
    doc.input("g", &g).input("r", &r).input("d", &d);
    doc.push_row(vec![
        Cell::from(&g),
        Cell::from(&r),
        Cell::from(&d),
        Cell::from(disc),
        Cell::from(hodge),
    ]);
    Ok((doc, true))
}

fn cmd_classify_nl(g: Int) -> Result<(ReportDocument, bool), RunError> {
    let rows = lattice::enumerate_bn_special_nl(&g)?;
    let mut doc = ReportDocument::new(
        "classify-nl",
        vec!["r", "d", "rho", "delta", "fixed_component", "comp_r", "comp_d"],
    );
    doc.input("g", &g);
    for e in rows {
        let rho = bn::rho(&g, &e.r, &e.d)?;
        let disc = lattice::discriminant(&g, &e.r, &e.d)?;
        let (comp_r, comp_d) = lattice::complement_class(&g, &e.r, &e.d)?;
        doc.push_row(vec![
            Cell::from(&e.r),
            Cell::from(&e.d),
            Cell::from(rho),
            Cell::from(disc),
            Cell::from(e.fixed_component),
            Cell::from(comp_r),
            Cell::from(comp_d),
        ]);
    }
    Ok((doc, true))
}

fn cmd_noncomputing(g: Int) -> Result<(ReportDocument, bool), RunError> {
    let rows = lifting::enumerate_non_computing(&g)?;
    let mut doc = ReportDocument::new("noncomputing", vec!["r", "d", "rho", "gamma"]);
    doc.input("g", &g);
    for (r, d) in rows {
        let rho = bn::rho(&g, &r, &d)?;
        let gamma = bn::clifford_index(&r, &d)?;
        doc.push_row(vec![
            Cell::from(r),
            Cell::from(d),
            Cell::from(rho),
            Cell::from(gamma),
        ]);
    }
    Ok((doc, true))
}

fn ledger_flag(candidate: &lifting::LiftCandidate<Int>, id: &str) -> bool {
    candidate
        .ledger
        .iter()
        .find(|e| e.id == id)
        .map(|e| e.satisfied)
        .unwrap_or(false)
}

fn cmd_lifts(
    g: Int,
    r: Int,
    d: Int,
    gamma_c: Option<Int>,
    boxed: bool,
) -> Result<(ReportDocument, bool), RunError> {
    let gamma_c = match gamma_c {
        Some(v) => v,
        None => bn::generic_clifford(&g)?,
    };
    if boxed {
        let pairs = lifting::lift_candidates_box(&g, &r, &d, &gamma_c)?;
        let mut doc = ReportDocument::new("lifts", vec!["r_p", "d_p"]);
        doc.input("g", &g)
            .input("r", &r)
            .input("d", &d)
            .input("gamma_c", &gamma_c)
            .input("box", true);
        doc.flags.push("box_oracle");
        for (r_p, d_p) in pairs {
            doc.push_row(vec![Cell::from(r_p), Cell::from(d_p)]);
        }
        return Ok((doc, true));
    }
    let candidates = lifting::enumerate_lift_candidates(&g, &r, &d, &gamma_c)?;
    let mut doc = ReportDocument::new(
        "lifts",
        vec![
            "r_p", "d_p", "delta", "gamma_m", "rho_p", "q_rank", "q_c1sq", "q_c2", "q_gamma",
            "pairing", "cert_product", "special", "mukai_ok", "min_c2_ok", "gamma_m_gt_gamma_c",
        ],
    );
    doc.input("g", &g)
        .input("r", &r)
        .input("d", &d)
        .input("gamma_c", &gamma_c)
        .input("box", false);
    for cand in candidates {
        let pairing = bundles::mukai_self_pairing(&cand.quotient.mukai_vector())?;
        let cert = lattice::marking_certificate(&g, &cand.r_p, &cand.d_p)?;
        doc.push_row(vec![
            Cell::from(&cand.r_p),
            Cell::from(&cand.d_p),
            Cell::from(&cand.delta),
            Cell::from(&cand.gamma_m),
            Cell::from(&cand.rho_p),
            Cell::from(cand.quotient.rank()),
            Cell::from(cand.quotient.c1_sq()),
            Cell::from(cand.quotient.c2()),
            Cell::from(cand.quotient.gamma()),
            Cell::from(pairing),
            Cell::from(cert.product),
            Cell::from(cert.is_special_marking),
            Cell::from(ledger_flag(&cand, "mukai_feasible")),
            Cell::from(ledger_flag(&cand, "min_c2_bound")),
            Cell::from(ledger_flag(&cand, "gamma_m_exceeds_gamma_c")),
        ]);
    }
    Ok((doc, true))
}

fn cmd_mukai(
    rank: Option<Int>,
    c1_sq: Option<Int>,
    c2: Option<Int>,
    g: Option<Int>,
    r: Option<Int>,
    d: Option<Int>,
) -> Result<(ReportDocument, bool), RunError> {
    match (rank, c1_sq, c2, g, r, d) {
        (Some(rank), Some(c1_sq), Some(c2), None, None, None) => {
            let inv = BundleInvariants::new(rank.clone(), c1_sq.clone(), c2.clone(), None)?;
            let v = MukaiVector {
                rank: rank.clone(),
                c1_sq: c1_sq.clone(),
                c2: c2.clone(),
            };
            let pairing = bundles::mukai_self_pairing(&v)?;
            let feasible = bundles::stability_feasible(&v)?;
            let min_c2 = bundles::min_c2_for_stable(&rank, &c1_sq)?;
            let mut doc = ReportDocument::new(
                "mukai",
                vec!["rank", "c1_sq", "c2", "gamma", "pairing", "stable_feasible", "min_c2"],
            );
            doc.input("rank", &rank).input("c1_sq", &c1_sq).input("c2", &c2);
            doc.push_row(vec![
                Cell::from(rank),
                Cell::from(c1_sq),
                Cell::from(c2),
                Cell::from(inv.gamma()),
                Cell::from(pairing),
                Cell::from(feasible),
                Cell::from(min_c2),
            ]);
            Ok((doc, true))
        }
        (None, None, None, Some(g), Some(r), Some(d)) => {
            let lm = bundles::lm_invariants(&g, &r, &d)?;
            let v = lm.invariants.mukai_vector();
            let pairing = bundles::mukai_self_pairing(&v)?;
            let feasible = bundles::stability_feasible(&v)?;
            let mut doc = ReportDocument::new(
                "mukai",
                vec![
                    "rank", "c1_sq", "c2", "h0", "gamma", "chi_f_tensor_e", "pairing",
                    "stable_feasible",
                ],
            );
            doc.input("g", &g).input("r", &r).input("d", &d);
            doc.push_row(vec![
                Cell::from(lm.invariants.rank()),
                Cell::from(lm.invariants.c1_sq()),
                Cell::from(lm.invariants.c2()),
                lm.invariants.h0().map(Cell::from).unwrap_or(Cell::Empty),
                Cell::from(lm.invariants.gamma()),
                Cell::from(lm.chi_f_tensor_e),
                Cell::from(pairing),
                Cell::from(feasible),
            ]);
            Ok((doc, true))
        }
        _ => Err(RunError::Usage(
            "mukai takes either --rank, --c1sq, --c2 or --g, --r, --d".into(),
        )),
    }
}

fn audit_summary_row(g: &Int, case: &AuditCase<Int>) -> Vec<Cell> {
    let (red_r, red_d) = match &case.reduced_to {
        Some(t) => (Cell::from(t.r()), Cell::from(t.d())),
        None => (Cell::Empty, Cell::Empty),
    };
    vec![
        Cell::from(g),
        Cell::from(case.source.r()),
        Cell::from(case.source.d()),
        Cell::from(case.route.as_str()),
        red_r,
        red_d,
        Cell::Int(Int::from(case.candidates.len())),
        Cell::from(case.verdict),
    ]
}

fn cmd_audit(
    g: Option<Int>,
    from: Option<Int>,
    to: Option<Int>,
    detail: bool,
) -> Result<(ReportDocument, bool), RunError> {
    let genera: Vec<Int> = match (g, from, to) {
        (Some(g), None, None) => vec![g],
        (None, Some(from), Some(to)) => {
            let mut v = Vec::new();
            let mut cur = from;
            while cur <= to {
                v.push(cur.clone());
                cur += 1;
            }
            v
        }
        _ => {
            return Err(RunError::Usage(
                "audit takes either --g or both --from and --to".into(),
            ))
        }
    };

    let columns = if detail {
        vec![
            "g", "case_r", "case_d", "route", "r_p", "d_p", "delta", "gamma_m", "rho_p", "disc",
            "pairing", "cert_product", "special", "verdict",
        ]
    } else {
        vec!["g", "r", "d", "route", "red_r", "red_d", "candidates", "verdict"]
    };
    let mut doc = ReportDocument::new("audit", columns);
    match (genera.first(), genera.last()) {
        (Some(a), Some(b)) if genera.len() == 1 => {
            doc.input("g", a);
            let _ = b;
        }
        (Some(a), Some(b)) => {
            doc.input("from", a).input("to", b);
        }
        _ => {}
    }
    doc.input("detail", detail);

    let mut all_true = true;
    let mut out_of_range = false;
    for g in &genera {
        let report = lifting::audit_genus(g)?;
        out_of_range |= !report.in_theorem_range;
        all_true &= report.verdict();
        for case in &report.cases {
            if detail {
                if case.candidates.is_empty() {
                    doc.push_row(vec![
                        Cell::from(g),
                        Cell::from(case.source.r()),
                        Cell::from(case.source.d()),
                        Cell::from(case.route.as_str()),
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::from(case.verdict),
                    ]);
                }
                for ac in &case.candidates {
                    let pairing = bundles::mukai_self_pairing(&ac.candidate.quotient.mukai_vector())?;
                    doc.push_row(vec![
                        Cell::from(g),
                        Cell::from(case.source.r()),
                        Cell::from(case.source.d()),
                        Cell::from(case.route.as_str()),
                        Cell::from(&ac.candidate.r_p),
                        Cell::from(&ac.candidate.d_p),
                        Cell::from(&ac.candidate.delta),
                        Cell::from(&ac.candidate.gamma_m),
                        Cell::from(&ac.candidate.rho_p),
                        Cell::from(&ac.disc),
                        Cell::from(pairing),
                        Cell::from(&ac.certificate.product),
                        Cell::from(ac.certificate.is_special_marking),
                        Cell::from(case.verdict),
                    ]);
                }
            } else {
                doc.push_row(audit_summary_row(g, case));
            }
        }
    }
    if out_of_range {
        doc.flags.push("out_of_theorem_range");
    }
    Ok((doc, all_true))
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    g: Int,
    r: Int,
    gamma_a: Option<Int>,
    k: Option<Int>,
    ell: Option<Int>,
    gamma: Option<Int>,
    m: Option<Int>,
    mu: Option<Int>,
    h1: Option<Int>,
) -> Result<(ReportDocument, bool), RunError> {
    let mut doc = ReportDocument::new("bounds", vec!["bound", "value"]);
    doc.input("g", &g).input("r", &r);

    let two = Int::from(2);
    doc.push_row(vec![
        Cell::from("generic_clifford"),
        Cell::from(bn::generic_clifford(&g)?),
    ]);
    if r >= two {
        doc.push_row(vec![
            Cell::from("proof_strategy"),
            Cell::from(lifting::proof_strategy_bound(&g, &r)?),
        ]);
    }
    if let Some(gamma_a) = &gamma_a {
        doc.input("gamma_a", gamma_a);
        doc.push_row(vec![
            Cell::from("delta_upper"),
            Cell::from(lifting::delta_upper(&g, &r, gamma_a)?),
        ]);
        doc.push_row(vec![
            Cell::from("glm_gamma_ceiling"),
            Cell::from(bundles::glm_gamma_ceiling(&g, &r, gamma_a)?),
        ]);
    }
    if let Some(k) = &k {
        doc.input("k", k);
        let value = match &ell {
            Some(ell) => {
                doc.input("ell", ell);
                bundles::glm_instability_threshold_with_correction(&r, k, ell)?
            }
            None => bundles::glm_instability_threshold(&r, k)?,
        };
        doc.push_row(vec![Cell::from("instability_threshold"), Cell::from(value)]);
    } else if ell.is_some() {
        return Err(RunError::Usage("--ell requires --k".into()));
    }
    match (&gamma, &m, &mu) {
        (Some(gamma), Some(m), Some(mu)) => {
            doc.input("gamma", gamma).input("m", m).input("mu", mu);
            doc.push_row(vec![
                Cell::from("g3_lifting"),
                Cell::from(lifting::g3_lifting_bound(&g, gamma, m, mu)?),
            ]);
        }
        (None, None, None) => {}
        _ => {
            return Err(RunError::Usage(
                "--gamma, --m, --mu must be given together".into(),
            ))
        }
    }
    if let Some(h1) = &h1 {
        doc.input("h1", h1);
        doc.push_row(vec![
            Cell::from("expected_square"),
            Cell::from(bn::expected_square(&r, h1)?),
        ]);
    }
    Ok((doc, true))
}
