use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use msq_core::constructions::{
    cycle_structured_witness, edge_cover_witness, odd_cycle_cs_witness, squares_chain_witness, sum_all_vars_witness,
    triangular_complete_witness, wedge_complete_witness,
};
use msq_core::graph::families;
use msq_core::invariants::{self, DEFAULT_TRIALS};
use msq_core::veronese::veronese_cs_bounds;
use msq_core::wlp::{has_wlp, ms_via_wlp_chain, DEFAULT_WLP_TRIALS};
use msq_core::{FieldCtx, InvariantKind, LinearForm, QuadIdeal, SearchMode};
use serde::Serialize;

use msq::campaign::{run_search, SearchConfig};
use msq::input::{parse_graph, parse_input};
use msq::record::{render_table, run_invariant};
use msq::verify::{self, VerifyConfig};

#[derive(Parser)]
#[command(name = "msq", version, about = "Minimal reductions of the square of the maximal ideal for quadratic algebras")]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = FieldCtx::DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials per level before a level is excluded.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Randomized)]
    mode: Mode,
    /// Permit p = 2 (the results then describe characteristic two only).
    #[arg(long = "allow-char-2", global = true)]
    allow_char_2: bool,
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Append JSON lines to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Randomized,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ms,
    Cs,
}

impl From<Kind> for InvariantKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Ms => InvariantKind::Ms,
            Kind::Cs => InvariantKind::Cs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute ms of a graph's edge ring or of a quadratic ideal.
    Ms { input: String },
    /// Compute cs of a graph's edge ring or of a quadratic ideal.
    Cs { input: String },
    /// Run a fixed-level random search and stream hits as JSON lines.
    Search {
        #[arg(value_enum)]
        kind: Kind,
        input: String,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Index of the first trial, for resuming a campaign.
        #[arg(long, default_value_t = 0)]
        offset: u64,
    },
    /// Run the verification suite.
    Verify {
        /// Only these criteria (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
        /// Trials per campaign in the null-result criterion.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Build an explicit witness and check it.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        params: Vec<usize>,
    },
    /// Bounds on cs of the Veronese ring via doubling sets.
    Veronese { n: usize },
    /// Weak Lefschetz data and the ms chain of an Artinian quotient.
    Wlp { input: String },
    /// Find a clique-adjacent edge cover with `size` edges and check its ms
    /// witness.
    Cover { input: String, size: usize },
    /// Graph invariants.
    Graph { input: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// cs witness for K_{C(r+1,2)}; parameter r.
    Triangular,
    /// cs witness for the squares ideal; parameter n.
    SquaresChain,
    /// cs witness for C_{2m+1}; parameter m.
    OddCycle,
    /// ms witness of size n - 3 for C_n; parameter n.
    Cycle,
    /// ms witness for the wedge of K_m and K_n; parameters m n.
    WedgeComplete,
    /// The single form x_1 + ... + x_n; parameter n.
    SumAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, table: impl FnOnce() -> String) -> Result<()> {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", table());
    }
    if let Some(path) = &cli.out {
        let mut f = open_append(path)?;
        writeln!(f, "{}", serde_json::to_string(value)?)?;
    }
    Ok(())
}

fn open_append(path: &PathBuf) -> Result<std::fs::File> {
    OpenOptions::new().create(true).append(true).open(path).with_context(|| format!("opening {}", path.display()))
}

fn run(cli: &Cli) -> Result<u8> {
    let ctx = FieldCtx::with_options(cli.prime as u64, cli.seed, cli.allow_char_2)?;
    let mode = match cli.mode {
        Mode::Randomized => SearchMode::Randomized,
        Mode::Exhaustive => SearchMode::Exhaustive,
    };
    match &cli.command {
        Command::Ms { input } | Command::Cs { input } => {
            let kind = if matches!(cli.command, Command::Ms { .. }) { InvariantKind::Ms } else { InvariantKind::Cs };
            let input = parse_input(&ctx, input)?;
            let rec = run_invariant(&ctx, &input, kind, cli.trials, mode)?;
            emit(cli, &rec, || render_table(&rec))?;
            Ok(rec.exit_code() as u8)
        }
        Command::Search { kind, input, level, budget, offset } => {
            let input = parse_input(&ctx, input)?;
            let cfg = SearchConfig { kind: (*kind).into(), level: *level, budget: *budget, offset: *offset };
            let summary = match &cli.out {
                Some(path) => run_search(&ctx, &input, &cfg, &mut io::BufWriter::new(open_append(path)?))?,
                None => run_search(&ctx, &input, &cfg, &mut io::stdout().lock())?,
            };
            if cli.out.is_some() {
                eprintln!("{} hits in {} trials", summary.hits, summary.trials);
            }
            Ok(0)
        }
        Command::Verify { only, budget } => {
            let cfg = VerifyConfig { prime: cli.prime, seed: cli.seed, trials: cli.trials, campaign_budget: *budget };
            let ids: Vec<usize> = if only.is_empty() { (1..=verify::CRITERIA).collect() } else { only.clone() };
            let mut failed = false;
            let mut outcomes = Vec::new();
            for id in ids {
                let row = verify::run_criterion(id, &cfg);
                if !cli.json {
                    print!("{row}");
                    io::stdout().flush()?;
                }
                failed |= row.status.is_failure();
                outcomes.push(row);
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            }
            if let Some(path) = &cli.out {
                let mut f = open_append(path)?;
                for row in &outcomes {
                    writeln!(f, "{}", serde_json::to_string(row)?)?;
                }
            }
            Ok(u8::from(failed))
        }
        Command::Construct { name, params } => construct(cli, &ctx, *name, params),
        Command::Veronese { n } => {
            let b = veronese_cs_bounds(*n)?;
            emit(cli, &b, || {
                let exact = b.exact.map_or_else(|| String::from("beyond search guard"), |k| k.to_string());
                format!(
                    "n             {}\nms            {}\ncs lower      {}\nsmallest set  {exact}\nbest S(n,d)   {}\nupper formula {}\nset           {:?}\n",
                    b.n, b.ms, b.lower, b.upper, b.upper_formula, b.set
                )
            })?;
            Ok(0)
        }
        Command::Wlp { input } => {
            let ideal = parse_input(&ctx, input)?.ideal();
            let wlp = has_wlp(&ctx, &ideal, DEFAULT_WLP_TRIALS)?;
            let (value, chain) = ms_via_wlp_chain(&ctx, &ideal)?;
            #[derive(Serialize)]
            struct WlpOut<'a> {
                wlp: bool,
                chain_value: usize,
                chain: &'a msq_core::wlp::HilbertChain,
            }
            emit(cli, &WlpOut { wlp, chain_value: value, chain: &chain }, || {
                let mut s = format!("weak Lefschetz  {}\nchain value     {value}\n", if wlp { "yes" } else { "not observed" });
                for st in &chain.steps {
                    let flag = if st.wlp_verified { "" } else { "  (form not Lefschetz)" };
                    s.push_str(&format!("R_{:<3} h = {:?}{flag}\n", st.i, st.hilbert));
                }
                s
            })?;
            Ok(0)
        }
        Command::Cover { input, size } => {
            let g = parse_graph(&ctx, input)?;
            let cover = g.k_connected_edge_cover(*size)?.context("no clique-adjacent edge cover of that size")?;
            let forms = edge_cover_witness(&g, &cover)?;
            let ok = invariants::ms_check(&ctx, &g.edge_ideal(), &forms)?;
            report_witness(cli, InvariantKind::Ms, g.n(), &forms, ok)
        }
        Command::Graph { input } => {
            let g = parse_graph(&ctx, input)?;
            #[derive(Serialize)]
            struct GraphOut {
                n: usize,
                edges: Vec<(usize, usize)>,
                alpha: Option<usize>,
                clique_number: Option<usize>,
                clique_cover: Option<usize>,
                chordal: bool,
                complement_chordal: bool,
                mcn: Option<usize>,
                diameter: Option<usize>,
            }
            let out = GraphOut {
                n: g.n(),
                edges: g.edges(),
                alpha: g.independence_number().ok(),
                clique_number: g.clique_number().ok(),
                clique_cover: g.clique_cover_number().ok(),
                chordal: g.is_chordal(),
                complement_chordal: g.complement().is_chordal(),
                mcn: g.mcn().ok().flatten(),
                diameter: g.diameter().ok(),
            };
            emit(cli, &out, || {
                let opt = |v: Option<usize>| v.map_or_else(|| String::from("-"), |v| v.to_string());
                format!(
                    "vertices      {}\nedges         {}\nalpha         {}\nclique number {}\nclique cover  {}\nchordal       {}\nco-chordal    {}\nmcn           {}\ndiameter      {}\n",
                    out.n,
                    out.edges.len(),
                    opt(out.alpha),
                    opt(out.clique_number),
                    opt(out.clique_cover),
                    out.chordal,
                    out.complement_chordal,
                    opt(out.mcn),
                    opt(out.diameter)
                )
            })?;
            Ok(0)
        }
    }
}

fn construct(cli: &Cli, ctx: &FieldCtx, name: Construction, params: &[usize]) -> Result<u8> {
    let need = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("this construction takes {k} parameter(s)");
        }
        Ok(())
    };
    let (kind, ideal, forms): (InvariantKind, QuadIdeal, Vec<LinearForm>) = match name {
        Construction::Triangular => {
            need(1)?;
            let (t, forms) = triangular_complete_witness(params[0])?;
            (InvariantKind::Cs, families::complete(t)?.edge_ideal(), forms)
        }
        Construction::SquaresChain => {
            need(1)?;
            (InvariantKind::Cs, QuadIdeal::squares(params[0]), squares_chain_witness(params[0])?)
        }
        Construction::OddCycle => {
            need(1)?;
            let n = 2 * params[0] + 1;
            (InvariantKind::Cs, families::cycle(n)?.edge_ideal(), odd_cycle_cs_witness(params[0])?)
        }
        Construction::Cycle => {
            need(1)?;
            (InvariantKind::Ms, families::cycle(params[0])?.edge_ideal(), cycle_structured_witness(ctx, params[0])?)
        }
        Construction::WedgeComplete => {
            need(2)?;
            let g = families::wedge_complete(params[0], params[1])?;
            (InvariantKind::Ms, g.edge_ideal(), wedge_complete_witness(params[0], params[1])?)
        }
        Construction::SumAll => {
            need(1)?;
            (InvariantKind::Ms, QuadIdeal::zero(params[0]), sum_all_vars_witness(params[0])?)
        }
    };
    let ok = invariants::check(ctx, kind, &ideal, &forms)?;
    report_witness(cli, kind, ideal.n(), &forms, ok)
}

fn report_witness(cli: &Cli, kind: InvariantKind, n: usize, forms: &[LinearForm], ok: bool) -> Result<u8> {
    #[derive(Serialize)]
    struct WitnessOut<'a> {
        kind: InvariantKind,
        n: usize,
        forms: &'a [LinearForm],
        passes: bool,
    }
    emit(cli, &WitnessOut { kind, n, forms, passes: ok }, || {
        let mut s = format!("{} check on {n} variables: {}\n", kind.name(), if ok { "passes" } else { "fails" });
        for f in forms {
            s.push_str(&format!("  {f}\n"));
        }
        s
    })?;
    Ok(if ok { 0 } else { 1 })
}
