use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use decohere::analytic::{validate_against_dense, AnalyticCase};
use decohere::channels::ChannelKind;
use decohere::harness::{
    emit_csv, find_critical_point, p_grid, reproduce_table1, run_sweep, write_csv, Engine, Measure, SweepConfig,
    DEFAULT_THRESHOLD, ENGINE_AGREEMENT_TOL,
};
use decohere::states::FamilyKind;
use decohere::{Error, Result};

#[derive(Parser)]
#[command(name = "decohere", version, about = "Correlations of micro-macro superposition states under local noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Log-negativity and discord over a p grid, written as CSV.
    Sweep(SweepArgs),
    /// Bisect for the p at which the log-negativity first reaches the threshold.
    Critical(CaseArgs),
    /// Recompute the critical-value table at N = 6, k = 1.
    Table1(TableArgs),
    /// Compare the closed form with dense simulation on a p grid.
    Validate(CaseArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// hcnm, ghz, g or dicke
    #[arg(long)]
    family: Option<String>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// lpdc, ladc or ldpc
    #[arg(long)]
    channel: Option<String>,
    /// dense, analytic or both
    #[arg(long)]
    engine: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON file with any subset of the sweep fields; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    case: FamilyArgs,
    #[arg(long)]
    p_start: Option<f64>,
    #[arg(long)]
    p_end: Option<f64>,
    #[arg(long)]
    p_steps: Option<usize>,
    /// Comma-separated: ln, discord
    #[arg(long)]
    measures: Option<String>,
    /// Discord optimizer seed.
    #[arg(long)]
    seed: Option<u64>,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CaseArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    case: FamilyArgs,
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
    /// Grid size for `validate`.
    #[arg(long, default_value_t = 21)]
    p_steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
    /// Also write the cells as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn apply_case(cfg: &mut SweepConfig, args: &FamilyArgs) -> Result<()> {
    if let Some(f) = &args.family {
        cfg.family.kind = FamilyKind::parse(f)?;
        if cfg.family.kind == FamilyKind::GState {
            cfg.family.m = 1;
            cfg.family.k = 1;
        }
    }
    if let Some(n) = args.n {
        cfg.family.n = n;
    }
    if let Some(m) = args.m {
        cfg.family.m = m;
    }
    if let Some(k) = args.k {
        cfg.family.k = k;
    }
    if let Some(c) = &args.channel {
        cfg.channel = ChannelKind::parse(c)?;
    }
    if let Some(e) = &args.engine {
        cfg.engine = Engine::parse(e)?;
    }
    Ok(())
}

fn load(config: &Option<PathBuf>) -> Result<SweepConfig> {
    match config {
        Some(path) => SweepConfig::from_json_file(path),
        None => Ok(SweepConfig::default()),
    }
}

fn write_text(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let mut cfg = load(&args.config)?;
    apply_case(&mut cfg, &args.case)?;
    if let Some(v) = args.p_start {
        cfg.p_start = v;
    }
    if let Some(v) = args.p_end {
        cfg.p_end = v;
    }
    if let Some(v) = args.p_steps {
        cfg.p_steps = v;
    }
    if let Some(v) = &args.measures {
        cfg.measures = Measure::parse_list(v)?;
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    let records = run_sweep(&cfg)?;
    match &args.out {
        Some(path) => emit_csv(&records, path),
        None => write_csv(&records, std::io::stdout().lock()),
    }
}

fn critical(args: CaseArgs) -> Result<()> {
    let mut cfg = load(&args.config)?;
    apply_case(&mut cfg, &args.case)?;
    let cp = find_critical_point(cfg.family, cfg.channel, args.threshold, cfg.engine)?;
    let text = format!(
        "{} {} p_star={} percent={:.1} bracket_width={:e} threshold={:e} engine={}\n",
        cfg.family.label(),
        cfg.channel,
        cp.p_star,
        cp.percent(),
        cp.bracket_width,
        cp.threshold,
        cp.engine
    );
    write_text(&args.out, &text)
}

fn table1(args: TableArgs) -> Result<()> {
    let table = reproduce_table1(args.threshold)?;
    print!("{}", table.render());
    for (ch, hi, lo) in table.ordering_violations() {
        println!("ordering: {ch} expects {hi} > {lo}");
    }
    if let Some(path) = &args.out {
        std::fs::write(path, serde_json::to_string_pretty(&table)?)?;
    }
    Ok(())
}

fn validate(args: CaseArgs) -> Result<()> {
    let mut cfg = load(&args.config)?;
    apply_case(&mut cfg, &args.case)?;
    let case = AnalyticCase::new(cfg.family, cfg.channel)?;
    let report = validate_against_dense(&case, &p_grid(0.0, 1.0, args.p_steps))?;
    let mut text = format!("{} {} formula={}\n", cfg.family.label(), cfg.channel, case.formula_id);
    for c in &case.corrections {
        text.push_str(&format!("correction {}: {} -> {}\n", c.symbol, c.reference_form, c.corrected_form));
    }
    text.push_str("p,analytic,dense,deviation\n");
    for pt in &report.points {
        text.push_str(&format!("{},{},{},{:e}\n", pt.p, pt.analytic, pt.dense, (pt.analytic - pt.dense).abs()));
    }
    text.push_str(&format!("max_deviation={:e}\n", report.max_deviation));
    write_text(&args.out, &text)?;
    if !report.within(ENGINE_AGREEMENT_TOL) {
        return Err(Error::ValidationMismatch(format!(
            "max deviation {:e} exceeds {ENGINE_AGREEMENT_TOL:e}",
            report.max_deviation
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Critical(a) => critical(a),
        Command::Table1(a) => table1(a),
        Command::Validate(a) => validate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("decohere: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
