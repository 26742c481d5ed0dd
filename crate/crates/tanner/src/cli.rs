//! The `tanner` command line. [`run`] parses arguments, executes one
//! subcommand and returns the exit code with everything it printed, so the
//! binary and the tests share one code path.
//!
//! Exit codes: 0 when the check passes (or the command simply ran), 1 when
//! a failure or violation was found, 2 for usage, input or budget errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tanner_core::bounds::{
    cage_order, cage_upper_bound, cage_witness, gldpc_beta_threshold, gldpc_guarantee, ldpc_failure_bound,
    ldpc_guarantee, moore_bound, BipartiteSearch, BoundValue, CageOrder,
};
use tanner_core::decode::{BitWord, Decoder, GldpcCode};
use tanner_core::expansion::{gldpc_expansion_plan, ldpc_expansion_plan, Comparison, ExpansionReport, DEFAULT_BUDGET};
use tanner_core::graph::{edge_vertex_incidence, GeneralGraph, NodeSet, TannerGraph};
use tanner_core::peg::peg_construct;
use tanner_core::qc::{quasi_cyclic, search_exponents, QcSearch};
use tanner_core::trapping::{
    check_trapping_conditions, construct_gldpc_trapping_set, construct_potential_trapping_set, critical_number,
    embed_gldpc_trapping_set, embed_trapping_set, locate_gldpc_trapping_set, CandidatePool, EmbedConfig, Landing,
};
use tanner_core::{Error, Rational};

use crate::expansion::verify_expansion_par;
use crate::format::{
    load_alist, load_edge_list, load_sidecar, load_subcode, save_alist, save_edge_list, save_sidecar, write_alist,
    FormatError, Sidecar,
};
use crate::sweep::{sweep_guarantee, SweepMode, Verdict, DEFAULT_MAX_ROUNDS};

#[derive(Debug, Parser)]
#[command(name = "tanner", version, about = "Tanner-graph analysis: girth, bounds, bit-flipping decoders, expansion and trapping sets")]
pub struct Cli {
    /// Worker threads for sweeps and expansion checks (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Cap on subsets or patterns an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// `text` for people, `lines` for one `name=value` per line.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Lines,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, degrees and girth of a graph file.
    Girth(GirthArgs),
    /// Moore, cage and correction thresholds for given parameters.
    Bounds(BoundsArgs),
    /// Decode one error pattern against the zero codeword.
    Decode(DecodeArgs),
    /// Exhaustive subset-expansion check.
    Expansion(ExpansionArgs),
    /// Trapping-set verification, construction and search.
    #[command(subcommand)]
    Trapping(TrappingCommand),
    /// Decode every low-weight pattern and compare with the guarantee.
    Sweep(SweepArgs),
    /// Build codes and graphs.
    #[command(subcommand)]
    Construct(ConstructCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// `.alist` files are Tanner graphs, anything else an edge list.
    Auto,
    Alist,
    Edges,
}

#[derive(Debug, Args)]
pub struct GirthArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t = InputKind::Auto)]
    pub input: InputKind,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Column weight γ.
    #[arg(long)]
    pub gamma: usize,
    /// Tanner-graph girth 2g'.
    #[arg(long)]
    pub girth: usize,
    /// Errors the GLDPC sub-code corrects.
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Parallel,
    Serial,
    Gldpc,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Parity-check matrix in alist form.
    pub alist: PathBuf,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Parallel)]
    pub algorithm: AlgorithmArg,
    /// Sub-code spec (`rho k` then k generator rows); required for gldpc.
    #[arg(long)]
    pub subcode: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
    pub max_rounds: usize,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Corrupt positions, comma-separated, 0-based.
    #[arg(long, value_delimiter = ',', conflicts_with = "weight")]
    pub errors: Option<Vec<usize>>,
    /// Draw this many corrupt positions from `--seed` instead.
    #[arg(long)]
    pub weight: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertificateArg {
    /// Sets of fewer than n₀(γ/2, g') variables against 3γ/4.
    Ldpc,
    /// Sets of fewer than n₀(γt/(t+1), g') variables against γ(t+2)/(2(t+1)).
    Gldpc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComparisonArg {
    Strict,
    NonStrict,
}

#[derive(Debug, Args)]
pub struct ExpansionArgs {
    pub alist: PathBuf,
    /// Largest subset size; taken from the certificate when omitted.
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Expansion factor as `p/q` or an integer; taken from the certificate
    /// when omitted.
    #[arg(long, value_parser = parse_rational)]
    pub delta: Option<Rational>,
    #[arg(long, value_enum, default_value_t = ComparisonArg::Strict)]
    pub comparison: ComparisonArg,
    /// Derive the size bound and factor from the code parameters.
    #[arg(long, value_enum)]
    pub certificate: Option<CertificateArg>,
    /// Sub-code correction radius for the gldpc certificate.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PoolArg {
    /// Subsets of the target set.
    Target,
    /// The target and every variable sharing a check with it.
    Neighborhood,
    /// All variables.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LandingArg {
    Exact,
    Contains,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    /// Variable indices, comma-separated, 0-based.
    #[arg(long, value_delimiter = ',', required_unless_present = "sidecar")]
    pub set: Option<Vec<usize>>,
    /// Read the set from a sidecar file's `set:` line.
    #[arg(long, conflicts_with = "set")]
    pub sidecar: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Output prefix; writes `<prefix>.alist` and `<prefix>.set`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum TrappingCommand {
    /// Check both trapping conditions and the decoder fixed points.
    Verify {
        alist: PathBuf,
        #[command(flatten)]
        set: SetArgs,
    },
    /// The γ-augmented cage fragment for column weight γ and half-girth g'.
    Construct {
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        g_prime: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Grow a γ-left-regular host of the given girth around the fragment.
    Embed {
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        girth: usize,
        /// Largest host size tried.
        #[arg(long, default_value_t = 200)]
        max_vars: usize,
        #[arg(long, default_value_t = 8)]
        max_check_degree: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Least number of initial errors that ends in the given set.
    Critical {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum, default_value_t = PoolArg::Target)]
        pool: PoolArg,
        /// Weight cap for `--pool all`.
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, value_enum, default_value_t = LandingArg::Exact)]
        landing: LandingArg,
    },
    /// The GLDPC fragment, located in `--host` or grown into a new host.
    Gldpc {
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        girth: usize,
        /// Look for the fragment inside this code instead of growing one.
        #[arg(long)]
        host: Option<PathBuf>,
        /// Check degree of a grown host.
        #[arg(long, default_value_t = 7)]
        rho: usize,
        #[arg(long, default_value_t = 200)]
        max_vars: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Largest pattern weight; defaults to the guaranteed weight.
    #[arg(long)]
    pub w_max: Option<usize>,
    /// Draw this many patterns per weight (seeded by `--seed`) instead of
    /// enumerating all of them.
    #[arg(long)]
    pub sample: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// Progressive edge growth of a regular code with a girth floor.
    Peg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        rho: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quasi-cyclic lift of an exponent matrix (rows `;`-separated,
    /// entries `,`-separated).
    Qc {
        #[arg(long)]
        exponents: String,
        #[arg(long)]
        lift: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a quasi-cyclic exponent matrix of girth 4, 6 or 8.
    QcSearch {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        lift: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value_t = 8)]
        restarts: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge-vertex incidence code of an edge-list graph.
    Ev {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The shipped d-regular girth-g cage as an edge list.
    Cage {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let parse = |t: &str| t.trim().parse::<i128>().map_err(|_| format!("`{s}` is not an integer or p/q"));
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q == 0 {
                return Err("zero denominator".into());
            }
            Ok(Rational::new(parse(p)?, q))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

/// Everything that stops a command early.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Collected output: named fields printed as aligned text or `name=value`.
struct Out {
    format: OutputFormat,
    buf: String,
}

impl Out {
    fn field(&mut self, name: &str, value: impl std::fmt::Display) {
        match self.format {
            OutputFormat::Text => self.buf.push_str(&format!("{name:<28} {value}\n")),
            OutputFormat::Lines => self.buf.push_str(&format!("{name}={value}\n")),
        }
    }

    fn text(&mut self, s: &str) {
        self.buf.push_str(s);
    }
}

fn list(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn rat(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn girth_str(g: Option<usize>) -> String {
    g.map_or("inf".into(), |g| g.to_string())
}

/// Parses and runs a command line, returning the exit code and the output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let mut out = Out { format: cli.format, buf: String::new() };
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut out)),
            Err(e) => Err(usage(format!("cannot start {threads} threads: {e}"))),
        },
        None => execute(&cli, &mut out),
    };
    match result {
        Ok(pass) => (if pass { 0 } else { 1 }, out.buf),
        Err(e) => {
            out.buf.push_str(&format!("error: {e}\n"));
            (2, out.buf)
        }
    }
}

/// Returns whether the command's check passed.
fn execute(cli: &Cli, out: &mut Out) -> CliResult<bool> {
    match &cli.command {
        Command::Girth(a) => girth(a, out),
        Command::Bounds(a) => bounds(a, out),
        Command::Decode(a) => decode(cli, a, out),
        Command::Expansion(a) => expansion(cli, a, out),
        Command::Trapping(t) => trapping(cli, t, out),
        Command::Sweep(a) => sweep(cli, a, out),
        Command::Construct(c) => construct(cli, c, out),
    }
}

fn is_alist(path: &Path, kind: InputKind) -> bool {
    match kind {
        InputKind::Alist => true,
        InputKind::Edges => false,
        InputKind::Auto => path.extension().is_some_and(|e| e == "alist"),
    }
}

fn girth(a: &GirthArgs, out: &mut Out) -> CliResult<bool> {
    if is_alist(&a.path, a.input) {
        let g = load_alist(&a.path)?;
        out.field("variables", g.n_vars());
        out.field("checks", g.n_checks());
        out.field("edges", g.n_edges());
        out.field("variable_degree", g.left_degree().map_or("irregular".into(), |d| d.to_string()));
        out.field("check_degree", g.right_degree().map_or("irregular".into(), |d| d.to_string()));
        out.field("girth", girth_str(g.girth()));
    } else {
        let g = load_edge_list(&a.path)?;
        out.field("nodes", g.n_nodes());
        out.field("edges", g.n_edges());
        out.field("degree", g.regular_degree().map_or("irregular".into(), |d| d.to_string()));
        out.field("girth", girth_str(g.girth()));
    }
    Ok(true)
}

fn bound_fields(out: &mut Out, name: &str, b: Result<BoundValue, Error>) {
    match b {
        Ok(b) => {
            out.field(name, rat(&b.value));
            out.field(&format!("{name}_floor"), b.floor_int);
        }
        Err(e) => out.field(name, format!("n/a ({e})")),
    }
}

fn cage_field(out: &mut Out, name: &str, c: CageOrder) {
    match c {
        CageOrder::Exact(n) => out.field(name, n),
        CageOrder::Unknown { lower, upper } => {
            let show = |r: Option<Rational>| r.map_or("?".into(), |r| rat(&r));
            out.field(name, format!("unknown in [{}, {}]", show(lower), show(upper)));
        }
    }
}

fn bounds(a: &BoundsArgs, out: &mut Out) -> CliResult<bool> {
    if a.girth % 2 == 1 || a.girth < 4 {
        return Err(usage("girth must be even and at least 4"));
    }
    let g_half = a.girth / 2;
    out.field("gamma", a.gamma);
    out.field("girth", a.girth);
    out.field("g_prime", g_half);
    bound_fields(out, "moore_half_gamma", moore_bound(Rational::new(a.gamma as i128, 2), g_half));
    bound_fields(out, "ldpc_guarantee", ldpc_guarantee(a.gamma, a.girth));
    match ldpc_failure_bound(a.gamma, a.girth) {
        Ok(c) => cage_field(out, "ldpc_failure_weight", c),
        Err(e) => out.field("ldpc_failure_weight", format!("n/a ({e})")),
    }
    let half_up = a.gamma.div_ceil(2);
    bound_fields(out, "cage_upper_bound", cage_upper_bound(half_up, g_half));
    out.field("ldpc_expansion_factor", rat(&Rational::new(3 * a.gamma as i128, 4)));
    if let Some(t) = a.t {
        out.field("t", t);
        bound_fields(out, "gldpc_guarantee", gldpc_guarantee(a.gamma, t, a.girth));
        let beta = gldpc_beta_threshold(t);
        out.field("gldpc_beta", rat(&beta));
        out.field("gldpc_expansion_factor", rat(&(beta * Rational::from_integer(a.gamma as i128))));
    }
    Ok(true)
}

/// The graph and, for GLDPC decoding, the assembled code.
struct LoadedCode {
    graph: TannerGraph,
    gldpc: Option<GldpcCode>,
    algorithm: AlgorithmArg,
}

impl LoadedCode {
    fn load(a: &CodeArgs) -> CliResult<Self> {
        let graph = load_alist(&a.alist)?;
        let gldpc = match (a.algorithm, &a.subcode) {
            (AlgorithmArg::Gldpc, Some(path)) => Some(GldpcCode::new(graph.clone(), load_subcode(path)?)?),
            (AlgorithmArg::Gldpc, None) => return Err(usage("--algorithm gldpc needs --subcode")),
            _ => None,
        };
        Ok(LoadedCode { graph, gldpc, algorithm: a.algorithm })
    }

    fn decoder(&self) -> Decoder<'_> {
        match (self.algorithm, &self.gldpc) {
            (AlgorithmArg::Serial, _) => Decoder::Serial(&self.graph),
            (AlgorithmArg::Gldpc, Some(code)) => Decoder::Gldpc(code),
            _ => Decoder::Parallel(&self.graph),
        }
    }
}

fn decode(cli: &Cli, a: &DecodeArgs, out: &mut Out) -> CliResult<bool> {
    let code = LoadedCode::load(&a.code)?;
    let decoder = code.decoder();
    let n = decoder.n_vars();
    let support = match (&a.errors, a.weight) {
        (Some(errors), _) => errors.clone(),
        (None, Some(w)) if w <= n => {
            let mut p = sample(&mut ChaCha8Rng::seed_from_u64(cli.seed), n, w).into_vec();
            p.sort_unstable();
            p
        }
        (None, Some(w)) => return Err(usage(format!("weight {w} exceeds the {n} variables"))),
        (None, None) => return Err(usage("give --errors or --weight")),
    };
    let start = BitWord::try_from_support(n, &support)?;
    let outcome = decoder.decode(start, a.code.max_rounds)?;
    out.field("algorithm", decoder.algorithm().as_str());
    out.field("errors", list(&support));
    out.field("status", outcome.status.as_str());
    out.field("rounds", outcome.rounds_used);
    out.field("flips_per_round", list(&outcome.per_round_flip_counts));
    out.field("final_support", list(&outcome.final_word.support()));
    Ok(outcome.final_word.is_zero())
}

fn render_expansion(r: &ExpansionReport, out: &mut Out) {
    out.field("k_max", r.k_max);
    out.field("delta", rat(&r.delta));
    out.field("subsets_examined", r.subsets_examined);
    match out.format {
        OutputFormat::Text => {
            out.text("  size  min |N(S)|  delta*size  witness\n");
            for row in &r.rows {
                let need = r.delta * Rational::from_integer(row.size as i128);
                out.text(&format!("{:>6} {:>11} {:>11}  {}\n", row.size, row.min_neighbors, rat(&need), list(row.witness.as_slice())));
            }
        }
        OutputFormat::Lines => {
            for row in &r.rows {
                out.text(&format!("size={} min_neighbors={} witness={}\n", row.size, row.min_neighbors, list(row.witness.as_slice())));
            }
        }
    }
    out.field("strict", if r.strict_pass { "pass" } else { "fail" });
    out.field("non_strict", if r.non_strict_pass { "pass" } else { "fail" });
    out.field("verdict", if r.passed() { "pass" } else { "fail" });
}

fn expansion(cli: &Cli, a: &ExpansionArgs, out: &mut Out) -> CliResult<bool> {
    let g = load_alist(&a.alist)?;
    let plan = match a.certificate {
        Some(CertificateArg::Ldpc) => Some(ldpc_expansion_plan(&g)?),
        Some(CertificateArg::Gldpc) => Some(gldpc_expansion_plan(&g, a.t)?),
        None => None,
    };
    let k_max = a.k_max.or(plan.map(|p| p.k_max)).ok_or_else(|| usage("give --k-max or --certificate"))?;
    let delta = a.delta.or(plan.map(|p| p.delta)).ok_or_else(|| usage("give --delta or --certificate"))?;
    let comparison = match a.comparison {
        ComparisonArg::Strict => Comparison::Strict,
        ComparisonArg::NonStrict => Comparison::NonStrict,
    };
    let report = verify_expansion_par(&g, k_max, delta, comparison, cli.budget)?;
    render_expansion(&report, out);
    Ok(report.passed())
}

fn read_set(args: &SetArgs, n: usize) -> CliResult<NodeSet> {
    match (&args.set, &args.sidecar) {
        (Some(set), _) => Ok(NodeSet::new(set.clone(), n)?),
        (None, Some(path)) => Ok(load_sidecar(path)?.set(n)?),
        (None, None) => Err(usage("give --set or --sidecar")),
    }
}

fn save_with_sidecar(out: &mut Out, args: &OutArgs, g: &TannerGraph, sidecar: &Sidecar) -> CliResult<()> {
    match &args.out {
        Some(prefix) => {
            let alist = prefix.with_extension("alist");
            let set = prefix.with_extension("set");
            save_alist(g, &alist)?;
            save_sidecar(sidecar, &set)?;
            out.field("wrote", format!("{} {}", alist.display(), set.display()));
        }
        None => out.text(&write_alist(g)),
    }
    Ok(())
}

fn describe_graph(out: &mut Out, g: &TannerGraph) {
    out.field("variables", g.n_vars());
    out.field("checks", g.n_checks());
    out.field("girth", girth_str(g.girth()));
}

fn trapping(cli: &Cli, cmd: &TrappingCommand, out: &mut Out) -> CliResult<bool> {
    match cmd {
        TrappingCommand::Verify { alist, set } => {
            let g = load_alist(alist)?;
            let set = read_set(set, g.n_vars())?;
            let r = check_trapping_conditions(&g, &set)?;
            out.field("set", list(r.set.as_slice()));
            out.field("a", r.a_vars);
            out.field("b", r.b_checks);
            out.field("cond_a", r.cond_a);
            out.field("cond_b", r.cond_b);
            out.field("fixed_point_parallel", r.fixed_point_parallel);
            out.field("fixed_point_serial", r.fixed_point_serial);
            out.field("odd_checks", list(&r.odd_checks));
            out.field("cond_a_violators", list(&r.cond_a_violators));
            out.field("cond_b_violators", list(&r.cond_b_violators));
            Ok(r.is_trapping_set())
        }
        TrappingCommand::Construct { gamma, g_prime, out: dest } => {
            let g = construct_potential_trapping_set(*gamma, *g_prime)?;
            describe_graph(out, &g);
            save_with_sidecar(out, dest, &g, &Sidecar::with_set(&NodeSet::full(g.n_vars())))?;
            Ok(true)
        }
        TrappingCommand::Embed { gamma, girth, max_vars, max_check_degree, out: dest } => {
            if girth % 2 == 1 {
                return Err(usage("girth must be even"));
            }
            let fragment = construct_potential_trapping_set(*gamma, girth / 2)?;
            let cfg = EmbedConfig { max_vars: *max_vars, max_check_degree: *max_check_degree, seed: cli.seed, ..EmbedConfig::default() };
            let e = embed_trapping_set(&fragment, *gamma, *girth, &cfg)?;
            describe_graph(out, &e.graph);
            out.field("set", list(e.set.as_slice()));
            out.field("growth_seed", e.seed);
            save_with_sidecar(out, dest, &e.graph, &Sidecar::with_set(&e.set))?;
            Ok(true)
        }
        TrappingCommand::Critical { code, set, pool, max_weight, landing } => {
            let loaded = LoadedCode::load(code)?;
            let decoder = loaded.decoder();
            let target = read_set(set, decoder.n_vars())?;
            let pool = match pool {
                PoolArg::Target => CandidatePool::SubsetsOfTarget,
                PoolArg::Neighborhood => CandidatePool::TargetAndNeighborhood,
                PoolArg::All => CandidatePool::AllVariables { max_weight: max_weight.unwrap_or(target.len()) },
            };
            let landing = match landing {
                LandingArg::Exact => Landing::Exact,
                LandingArg::Contains => Landing::Contains,
            };
            let r = critical_number(&decoder, &target, pool, landing, code.max_rounds, cli.budget)?;
            out.field("target", list(target.as_slice()));
            out.field("pool_size", r.pool.len());
            out.field("patterns_tried", r.patterns_tried);
            out.field("critical_number", r.value.map_or("none".into(), |v| v.to_string()));
            out.field("witness", r.witness.as_ref().map_or("-".into(), |w| list(w.as_slice())));
            if r.budget_exhausted {
                return Err(Error::BudgetExceeded { needed: r.patterns_tried + 1, budget: cli.budget }.into());
            }
            Ok(r.value.is_some())
        }
        TrappingCommand::Gldpc { gamma, t, girth, host, rho, max_vars, out: dest } => {
            let fragment = construct_gldpc_trapping_set(*gamma, *t, *girth, BipartiteSearch::default())?;
            out.field("fragment_variables", fragment.graph.n_vars());
            out.field("fragment_inner_checks", fragment.inner_checks.len());
            let (graph, sidecar) = match host {
                Some(path) => {
                    let g = load_alist(path)?;
                    let Some(found) = locate_gldpc_trapping_set(&g, &fragment) else {
                        out.field("located", false);
                        return Ok(false);
                    };
                    let mut s = Sidecar::with_set(&found.set);
                    s.insert("inner_checks", &found.inner_checks);
                    s.insert("pendant_checks", &found.pendant_checks);
                    (g, s)
                }
                None => {
                    let cfg = EmbedConfig { max_vars: *max_vars, max_check_degree: *rho, seed: cli.seed, ..EmbedConfig::default() };
                    let e = embed_gldpc_trapping_set(&fragment, *gamma, *girth, &cfg)?;
                    let mut s = Sidecar::with_set(&e.set);
                    s.insert("inner_checks", &fragment.inner_checks);
                    s.insert("pendant_checks", &fragment.pendant_checks);
                    (e.graph, s)
                }
            };
            describe_graph(out, &graph);
            for (key, values) in &sidecar.lists {
                out.field(key, list(values));
            }
            match (&dest.out, host) {
                (None, Some(_)) => {}
                _ => save_with_sidecar(out, dest, &graph, &sidecar)?,
            }
            Ok(true)
        }
    }
}

fn sweep(cli: &Cli, a: &SweepArgs, out: &mut Out) -> CliResult<bool> {
    let code = LoadedCode::load(&a.code)?;
    let decoder = code.decoder();
    let w_max = match a.w_max {
        Some(w) => w,
        None => crate::sweep::claimed_guarantee(&decoder)
            .ok_or_else(|| usage("no guarantee applies to this code; give --w-max"))?,
    };
    let mode = match a.sample {
        Some(count) => SweepMode::Sample { count, seed: cli.seed },
        None => SweepMode::Exhaustive,
    };
    let report = sweep_guarantee(&decoder, w_max, mode, a.code.max_rounds, cli.budget)?;
    out.field("file", a.code.alist.display());
    out.text(&match out.format {
        OutputFormat::Text => report.render_text(),
        OutputFormat::Lines => report.render_lines(),
    });
    Ok(report.verdict == Verdict::Consistent)
}

fn parse_exponents(s: &str) -> CliResult<Vec<Vec<usize>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("bad exponent `{x}`"))))
                .collect()
        })
        .collect()
}

fn emit_tanner(out: &mut Out, g: &TannerGraph, path: &Option<PathBuf>) -> CliResult<()> {
    match path {
        Some(p) => {
            describe_graph(out, g);
            save_alist(g, p)?;
            out.field("wrote", p.display());
        }
        None => out.text(&write_alist(g)),
    }
    Ok(())
}

fn construct(cli: &Cli, cmd: &ConstructCommand, out: &mut Out) -> CliResult<bool> {
    match cmd {
        ConstructCommand::Peg { n, gamma, rho, girth, out: path } => {
            let g = peg_construct(*n, *gamma, *rho, *girth, cli.seed)?;
            emit_tanner(out, &g, path)?;
        }
        ConstructCommand::Qc { exponents, lift, out: path } => {
            let g = quasi_cyclic(&parse_exponents(exponents)?, *lift)?;
            emit_tanner(out, &g, path)?;
        }
        ConstructCommand::QcSearch { rows, cols, lift, girth, restarts, out: path } => {
            let search = QcSearch { seed: cli.seed, restarts: *restarts, ..QcSearch::default() };
            let Some(a) = search_exponents(*rows, *cols, *lift, *girth, search)? else {
                out.field("exponents", "none found");
                return Ok(false);
            };
            let rendered: Vec<String> = a.iter().map(|r| list(r)).collect();
            out.field("exponents", rendered.join(";"));
            if path.is_some() {
                emit_tanner(out, &quasi_cyclic(&a, *lift)?, path)?;
            }
        }
        ConstructCommand::Ev { graph, out: path } => {
            let g = edge_vertex_incidence(&load_edge_list(graph)?);
            emit_tanner(out, &g, path)?;
        }
        ConstructCommand::Cage { degree, girth, out: path } => {
            let g: GeneralGraph = cage_witness(*degree, *girth).ok_or(Error::UnknownCage { degree: *degree, girth: *girth })?;
            match path {
                Some(p) => {
                    out.field("nodes", g.n_nodes());
                    cage_field(out, "cage_order", cage_order(*degree, *girth));
                    save_edge_list(&g, p)?;
                    out.field("wrote", p.display());
                }
                None => out.text(&crate::format::write_edge_list(&g)),
            }
        }
    }
    Ok(true)
}
