//! The subcommands. Each one produces a JSON value, a human-readable
//! rendering for `--pretty`, and whether every check it ran passed.

use std::fmt::Write;
use std::time::Instant;

use chromabij::bijection::{EdgeState, PhiRule, PsiRule, StagedMixed};
use chromabij::chromatic::{
    chi_poly_all_subgraphs_with_stats, chi_poly_nbc_with_stats, reciprocity_value,
};
use chromabij::verify::{
    compare_csf, enumerate_graphs, tree_conjecture_sweep, Totals, TREE_CAP,
};
use chromabij::{
    acyclic_orientations, check_theorems, chi_poly, compatible_pair_count, expand_monomials,
    is_forest, omega, phi, phi_colored, phi_trace, psi, psi_colored, psi_trace, x_all_subgraphs,
    x_nbc, Budget, ChiMethod, Graph, VerificationReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::json::{big, monomials, poly, psym};
use crate::{
    format_orientation, parse_coloring, parse_orientation, parse_subset, subset_indices, CliError,
    GraphDocument,
};

#[derive(Debug, Parser)]
#[command(
    name = "chromabij",
    version,
    about = "Exact chromatic polynomials, chromatic symmetric functions and their bijections"
)]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Edge-list or graph6 file, or a fixture name (fig1, butterfly, kite, net, x169).
    #[arg(long, short = 'g')]
    pub graph: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Count,
    Subgraphs,
    Nbc,
    Delcon,
}

impl From<MethodArg> for ChiMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Count => ChiMethod::Count,
            MethodArg::Subgraphs => ChiMethod::Subgraphs,
            MethodArg::Nbc => ChiMethod::Nbc,
            MethodArg::Delcon => ChiMethod::DelCon,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CsfMethodArg {
    Subgraphs,
    Nbc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic polynomial, or its value at one point.
    Chi {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "nbc")]
        method: MethodArg,
        /// Evaluate at this integer instead of printing coefficients.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
    },
    /// Chromatic symmetric function in the power-sum basis.
    Csf {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "nbc")]
        method: CsfMethodArg,
        /// Apply the involution p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ first.
        #[arg(long)]
        omega: bool,
        /// Expand into monomials in this many variables.
        #[arg(long, value_name = "MU")]
        expand: Option<usize>,
    },
    /// Acyclic orientations.
    Acyclic {
        #[command(flatten)]
        graph: GraphArg,
        /// List the orientations as '+'/'-' strings.
        #[arg(long)]
        list: bool,
    },
    /// Pairs (acyclic orientation, compatible coloring with colors in [t]).
    Compat {
        #[command(flatten)]
        graph: GraphArg,
        /// Number of colors.
        #[arg(long, short = 't')]
        t: u32,
        /// Compare with (-1)^n χ(-t); exit 1 on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// Acyclic orientation ↔ NBC subgraph bijection.
    Bijection(BijectionArgs),
    /// Run every identity on one graph, or on all graphs with n vertices.
    Verify(VerifyArgs),
    /// Tree isomorphism classes on n vertices versus their CSFs.
    Trees {
        /// Vertex count, at most 10.
        #[arg(long, short = 'n')]
        n: usize,
    },
    /// Time the all-subgraphs and NBC expansions of χ.
    Bench {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["phi", "psi", "trace"]).multiple(true)))]
pub struct BijectionArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    /// Acyclic orientation, one '+' (low to high) or '-' per edge.
    #[arg(long, conflicts_with = "psi", allow_hyphen_values = true)]
    pub phi: Option<String>,
    /// NBC subset as comma-separated 1-based edge indices ("" for none).
    #[arg(long)]
    pub psi: Option<String>,
    /// Print every intermediate stage (phi of the all-normal orientation if
    /// no input is given).
    #[arg(long)]
    pub trace: bool,
    /// Apply the color-classwise maps for this coloring (comma-separated).
    #[arg(long, conflicts_with = "trace")]
    pub coloring: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["n", "graph"])))]
pub struct VerifyArgs {
    /// Check every labeled graph on this many vertices.
    #[arg(long, short = 'n')]
    pub n: Option<usize>,
    /// Check one graph: a file or a fixture name.
    #[arg(long, short = 'g')]
    pub graph: Option<String>,
    /// Also compare chromatic symmetric functions with this graph.
    #[arg(long, requires = "graph")]
    pub against: Option<String>,
    /// Largest t for the reciprocity checks.
    #[arg(long, default_value_t = 3)]
    pub tmax: u32,
    /// Largest variable count for the monomial checks.
    #[arg(long, default_value_t = 3)]
    pub mumax: usize,
}

/// Result of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// False when a check the command ran failed.
    pub ok: bool,
}

impl Outcome {
    fn new(json: Value, text: String) -> Self {
        Outcome { json, text, ok: true }
    }

    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.text.clone()
        } else {
            serde_json::to_string(&self.json).expect("serializable")
        }
    }
}

fn load(spec: &str) -> Result<Graph, CliError> {
    Ok(GraphDocument::load(spec)?.graph)
}

pub fn run(command: &Command, budget: &Budget) -> Result<Outcome, CliError> {
    match command {
        Command::Chi { graph, method, at } => chi(&load(&graph.graph)?, (*method).into(), *at, budget),
        Command::Csf {
            graph,
            method,
            omega,
            expand,
        } => csf(&load(&graph.graph)?, *method, *omega, *expand, budget),
        Command::Acyclic { graph, list } => acyclic(&load(&graph.graph)?, *list, budget),
        Command::Compat { graph, t, check } => compat(&load(&graph.graph)?, *t, *check, budget),
        Command::Bijection(args) => bijection(args),
        Command::Verify(args) => verify(args, budget),
        Command::Trees { n } => trees(*n, budget),
        Command::Bench { graph, reps } => bench(&load(&graph.graph)?, *reps, budget),
    }
}

fn chi(g: &Graph, method: ChiMethod, at: Option<i64>, budget: &Budget) -> Result<Outcome, CliError> {
    let p = chi_poly(g, method, budget)?;
    Ok(match at {
        Some(t) => {
            let v = p.evaluate_i64(t);
            Outcome::new(big(&v), format!("chi({t}) = {v}"))
        }
        None => Outcome::new(poly(&p), format!("chi(t) = {p}")),
    })
}

fn csf(
    g: &Graph,
    method: CsfMethodArg,
    apply_omega: bool,
    expand: Option<usize>,
    budget: &Budget,
) -> Result<Outcome, CliError> {
    let mut x = match method {
        CsfMethodArg::Subgraphs => x_all_subgraphs(g, budget)?,
        CsfMethodArg::Nbc => x_nbc(g, budget)?,
    };
    if apply_omega {
        x = omega(&x);
    }
    let name = if apply_omega { "omega(X)" } else { "X" };
    Ok(match expand {
        Some(mu) => {
            let m = expand_monomials(&x, mu, budget)?;
            Outcome::new(monomials(&m), format!("{name} in {mu} variables = {m}"))
        }
        None => {
            let mut text = format!("{name} = {x}\n");
            for (lambda, c) in x.terms() {
                writeln!(text, "  {:<16} {:>8}", lambda.to_string(), c.to_string()).unwrap();
            }
            Outcome::new(psym(&x), text.trim_end().to_string())
        }
    })
}

fn acyclic(g: &Graph, list: bool, budget: &Budget) -> Result<Outcome, CliError> {
    let all = acyclic_orientations(g, budget)?;
    let mut text = format!("{} acyclic orientations", all.len());
    let mut json = json!({ "count": all.len() });
    if list {
        let strings: Vec<String> = all.iter().map(format_orientation).collect();
        for s in &strings {
            write!(text, "\n  {s}").unwrap();
        }
        json["orientations"] = json!(strings);
    }
    Ok(Outcome::new(json, text))
}

fn compat(g: &Graph, t: u32, check: bool, budget: &Budget) -> Result<Outcome, CliError> {
    let count = BigInt::from(compatible_pair_count(g, t, budget)?);
    let mut json = json!({ "t": t, "count": big(&count) });
    let mut text = format!("{count} compatible pairs with colors in [{t}]");
    let mut ok = true;
    if check {
        let chi = chi_poly(g, ChiMethod::Nbc, budget)?;
        let expected = reciprocity_value(g.vertex_count(), &chi, t);
        ok = expected == count;
        json["expected"] = big(&expected);
        json["agrees"] = json!(ok);
        write!(text, "\n(-1)^n chi(-{t}) = {expected}: {}", if ok { "agrees" } else { "DISAGREES" }).unwrap();
    }
    Ok(Outcome { json, text, ok })
}

fn state_string(s: &StagedMixed) -> String {
    s.states()
        .iter()
        .map(|st| match st {
            EdgeState::Absent => '.',
            EdgeState::Undirected => '|',
            EdgeState::Normal => '+',
            EdgeState::Abnormal => '-',
        })
        .collect()
}

fn phi_rule_name(r: PhiRule) -> &'static str {
    match r {
        PhiRule::Unoriented => "unoriented",
        PhiRule::RemovedAbnormal => "removed_abnormal",
        PhiRule::RemovedWouldCycle => "removed_would_cycle",
    }
}

fn psi_rule_name(r: PsiRule) -> &'static str {
    match r {
        PsiRule::Abnormal => "abnormal",
        PsiRule::NormalWasEdge => "normal_was_edge",
        PsiRule::NormalWouldCycle => "normal_would_cycle",
    }
}

fn stage_rows<R>(
    trace: &[(StagedMixed, Option<R>)],
    name: impl Fn(&R) -> &'static str,
    edge_of: impl Fn(&StagedMixed) -> usize,
    text: &mut String,
) -> Vec<Value> {
    trace
        .iter()
        .map(|(s, rule)| {
            let rule = rule.as_ref().map(&name);
            match rule {
                Some(r) => writeln!(text, "  {s}    (e{}: {r})", edge_of(s)).unwrap(),
                None => writeln!(text, "  {s}").unwrap(),
            }
            json!({ "stage": s.stage(), "edges": state_string(s), "rule": rule })
        })
        .collect()
}

fn bijection(args: &BijectionArgs) -> Result<Outcome, CliError> {
    let g = load(&args.graph.graph)?;
    if let Some(k) = &args.coloring {
        let k = parse_coloring(k, &g)?;
        let colors = json!(k.colors());
        return Ok(if let Some(s) = &args.psi {
            let s = parse_subset(s, &g)?;
            let o = psi_colored(&g, &k, &s)?;
            Outcome::new(
                json!({ "map": "psi", "coloring": colors, "nbc_subset": subset_indices(&s), "orientation": format_orientation(&o) }),
                format!("Psi({:?}) = {}", subset_indices(&s), format_orientation(&o)),
            )
        } else {
            let o = parse_orientation(args.phi.as_deref().unwrap_or_default(), &g)?;
            let s = phi_colored(&g, &k, &o)?;
            Outcome::new(
                json!({ "map": "phi", "coloring": colors, "orientation": format_orientation(&o), "nbc_subset": subset_indices(&s) }),
                format!("Phi({}) = {:?}", format_orientation(&o), subset_indices(&s)),
            )
        });
    }

    if let Some(s) = &args.psi {
        let s = parse_subset(s, &g)?;
        let o = psi(&g, &s)?;
        let mut text = format!("psi({:?}) = {}\n", subset_indices(&s), format_orientation(&o));
        let mut json = json!({ "map": "psi", "nbc_subset": subset_indices(&s), "orientation": format_orientation(&o) });
        if args.trace {
            let trace = psi_trace(&g, &s)?;
            json["stages"] = json!(stage_rows(&trace, |r| psi_rule_name(*r), |st| st.stage() + 1, &mut text));
        }
        return Ok(Outcome::new(json, text.trim_end().to_string()));
    }
    let o = match &args.phi {
        Some(p) => parse_orientation(p, &g)?,
        None => chromabij::Orientation::all_low_to_high(g.edge_count()),
    };
    let s = phi(&g, &o)?;
    let mut text = format!("phi({}) = {:?}\n", format_orientation(&o), subset_indices(&s));
    let mut json = json!({ "map": "phi", "orientation": format_orientation(&o), "nbc_subset": subset_indices(&s) });
    if args.trace {
        let trace = phi_trace(&g, &o)?;
        json["stages"] = json!(stage_rows(&trace, |r| phi_rule_name(*r), |st| st.stage(), &mut text));
    }
    Ok(Outcome::new(json, text.trim_end().to_string()))
}

fn report_text(r: &VerificationReport) -> String {
    let mut text = format!("{}\n", r.graph_id);
    for c in &r.checks {
        let status = serde_json::to_value(c.status).unwrap();
        writeln!(text, "  {:<24} {:<8} {}", c.name, status.as_str().unwrap(), c.details).unwrap();
    }
    write!(text, "  pass {} / fail {} / skipped {}", r.totals.pass, r.totals.fail, r.totals.skipped).unwrap();
    text
}

fn verify(args: &VerifyArgs, budget: &Budget) -> Result<Outcome, CliError> {
    if let Some(n) = args.n {
        let mut totals = Totals::default();
        let mut failed = Vec::new();
        let mut graphs = 0u64;
        for g in enumerate_graphs(n)? {
            let r = check_theorems(&g, args.tmax, args.mumax, budget);
            graphs += 1;
            totals.merge(&r.totals);
            if !r.passed() {
                failed.push(r);
            }
        }
        let mut text = format!(
            "{graphs} graphs on {n} vertices: pass {} / fail {} / skipped {}",
            totals.pass, totals.fail, totals.skipped
        );
        for r in &failed {
            write!(text, "\n{}", report_text(r)).unwrap();
        }
        return Ok(Outcome {
            json: json!({ "n": n, "graphs": graphs, "totals": totals, "failed_graphs": failed }),
            text,
            ok: failed.is_empty(),
        });
    }

    let g = load(args.graph.as_deref().expect("clap requires --n or --graph"))?;
    let r = check_theorems(&g, args.tmax, args.mumax, budget);
    let Some(other) = &args.against else {
        return Ok(Outcome {
            json: serde_json::to_value(&r).unwrap(),
            text: report_text(&r),
            ok: r.passed(),
        });
    };
    let h = load(other)?;
    let r2 = check_theorems(&h, args.tmax, args.mumax, budget);
    let cmp = compare_csf(&g, &h, budget)?;
    let text = format!(
        "{}\n{}\nX equal: {}; chi equal: {}; degree sequences {:?} vs {:?}{}",
        report_text(&r),
        report_text(&r2),
        cmp.csf_equal,
        cmp.chi_equal,
        cmp.left_degrees,
        cmp.right_degrees,
        if cmp.certified_non_isomorphic() { " (non-isomorphic)" } else { "" }
    );
    Ok(Outcome {
        json: json!({ "left": r, "right": r2, "comparison": cmp, "certified_non_isomorphic": cmp.certified_non_isomorphic() }),
        text,
        ok: r.passed() && r2.passed(),
    })
}

fn trees(n: usize, budget: &Budget) -> Result<Outcome, CliError> {
    if n == 0 || n > TREE_CAP {
        return Err(CliError::Usage(format!("--n must be in 1..={TREE_CAP}")));
    }
    let r = tree_conjecture_sweep(n, budget)?;
    let mut text = format!(
        "n = {}: {} labeled trees, {} isomorphism classes, chi formula {}, {} collisions",
        r.n,
        r.labeled_trees,
        r.isomorphism_classes,
        if r.chi_formula_holds { "holds" } else { "FAILS" },
        r.collisions.len()
    );
    for c in &r.collisions {
        write!(text, "\n  {} ~ {}", c.left, c.right).unwrap();
    }
    Ok(Outcome {
        json: serde_json::to_value(&r).unwrap(),
        text,
        ok: r.chi_formula_holds && r.collisions.is_empty(),
    })
}

fn bench(g: &Graph, reps: u32, budget: &Budget) -> Result<Outcome, CliError> {
    let reps = reps.max(1);
    let time = |f: &dyn Fn() -> Result<(), chromabij::Error>| -> Result<f64, CliError> {
        let start = Instant::now();
        for _ in 0..reps {
            f()?;
        }
        Ok(start.elapsed().as_secs_f64() * 1e3 / reps as f64)
    };
    let (p_all, all) = chi_poly_all_subgraphs_with_stats(g, budget)?;
    let (p_nbc, nbc) = chi_poly_nbc_with_stats(g, budget)?;
    let all_ms = time(&|| chi_poly_all_subgraphs_with_stats(g, budget).map(drop))?;
    let nbc_ms = time(&|| chi_poly_nbc_with_stats(g, budget).map(drop))?;

    let agree = p_all == p_nbc;
    let forest = is_forest(g, &g.all_edges())?;
    let ok = agree && nbc.subsets <= all.subsets && (nbc.subsets == all.subsets) == forest;
    let json = json!({
        "graph": g.to_string(),
        "edges": g.edge_count(),
        "forest": forest,
        "agree": agree,
        "subgraphs": { "visited_subsets": all.subsets, "wall_time_ms": all_ms },
        "nbc": { "visited_subsets": nbc.subsets, "search_nodes": nbc.nodes, "wall_time_ms": nbc_ms },
        "reps": reps,
    });
    let text = format!(
        "{g}\n  {:<10} {:>12} {:>14}\n  {:<10} {:>12} {:>14.3}\n  {:<10} {:>12} {:>14.3}\n  polynomials agree: {agree}; search nodes: {}",
        "method", "subsets", "wall time ms",
        "subgraphs", all.subsets, all_ms,
        "nbc", nbc.subsets, nbc_ms,
        nbc.nodes,
    );
    Ok(Outcome { json, text, ok })
}
