//! `nw`: search, verify and export near Williamson quadruples.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nw_core::format::{parse_catalog, serialize_catalog, write_quaternary, Catalog, QuadrupleRecord};
use nw_core::search::{four_square_decompositions, DEFAULT_EPSILON};
use nw_core::{
    build_quaternary, build_williamson_block, classify, is_hadamard, search, verify_additivity, verify_amicability,
    verify_quaternary, williamson_type_set, EquivalenceGroup, SearchConfig, SearchMode,
};

#[derive(Parser)]
#[command(
    name = "nw",
    version,
    about = "Near Williamson matrices: search, verification and export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    AlmostSymmetric,
}

impl Mode {
    fn as_search(self) -> SearchMode {
        match self {
            Mode::Full => SearchMode::Full,
            Mode::AlmostSymmetric => SearchMode::AlmostSymmetricA,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::AlmostSymmetric => "almost-symmetric",
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Group {
    #[default]
    Unordered,
    SlotFixed,
}

impl From<Group> for EquivalenceGroup {
    fn from(g: Group) -> Self {
        match g {
            Group::Unordered => EquivalenceGroup::Unordered,
            Group::SlotFixed => EquivalenceGroup::SlotFixed,
        }
    }
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "full")]
    mode: Mode,
    #[arg(long, env = "NW_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    /// Equivalence relation used for classification.
    #[arg(long, value_enum, default_value = "unordered")]
    group: Group,
}

impl SearchArgs {
    fn config(&self, first_only: bool) -> SearchConfig {
        SearchConfig {
            order: self.order,
            mode: self.mode.as_search(),
            epsilon: self.epsilon,
            jobs: self.jobs,
            limit: first_only.then_some(1),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the exhaustive search and write the class representatives.
    Search {
        #[command(flatten)]
        args: SearchArgs,
        /// Stop after the first validated quadruple.
        #[arg(long)]
        first_only: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check additivity and the Hadamard construction for every record.
    Verify { file: PathBuf },
    /// Canonicalise and deduplicate the records of a file.
    Canon {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "unordered")]
        group: Group,
    },
    /// Write the quaternary Hadamard matrix of every record.
    Quaternary {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the four-square decompositions of 4N.
    Decompose { order: usize },
    /// Search and classify, printing only the number of classes.
    Count {
        #[command(flatten)]
        args: SearchArgs,
    },
}

fn read_catalog(path: &Path) -> Result<Catalog> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_catalog(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn row_sums(record: &nw_core::Quadruple) -> String {
    let [a, b, c, d] = record.row_sums();
    format!("{a}, {b}, {c}, {d}")
}

fn run_search(args: &SearchArgs, first_only: bool, out: &Path) -> Result<ExitCode> {
    let started = Instant::now();
    let outcome = search(&args.config(first_only))?;
    let reps = classify(&outcome.solutions, args.group.into());
    let catalog = Catalog {
        header: vec![
            ("order".into(), args.order.to_string()),
            ("mode".into(), args.mode.name().into()),
            ("raw_solutions".into(), outcome.solutions.len().to_string()),
            ("classes".into(), reps.len().to_string()),
        ],
        records: reps
            .into_iter()
            .map(|q| {
                let sums = row_sums(&q);
                QuadrupleRecord::new(q).with("row_sums", sums)
            })
            .collect(),
    };
    write_file(out, &serialize_catalog(&catalog))?;
    println!("order: {}", args.order);
    println!("mode: {}", args.mode.name());
    for (k, v) in outcome.stats.summary_lines() {
        println!("{k}: {v}");
    }
    println!("raw_solutions: {}", outcome.solutions.len());
    println!("classes: {}", catalog.records.len());
    eprintln!("elapsed_ms: {}", started.elapsed().as_millis());
    Ok(ExitCode::SUCCESS)
}

fn run_verify(file: &Path) -> Result<ExitCode> {
    let catalog = read_catalog(file)?;
    let mut passed = 0;
    for (i, rec) in catalog.records.iter().enumerate() {
        let q = &rec.quad;
        let n = q.order();
        let additive = verify_additivity(q);
        let amicable = verify_amicability(&williamson_type_set(q))?;
        let hadamard = build_williamson_block(q).map(|w| is_hadamard(&w)).unwrap_or(false);
        let ok = additive && amicable && hadamard;
        let word = |b: bool| if b { "pass" } else { "fail" };
        println!(
            "record {}: order={} additivity={} amicability={} hadamard_{}={} result={}",
            i + 1,
            n,
            word(additive),
            word(amicable),
            4 * n,
            word(hadamard),
            word(ok)
        );
        passed += usize::from(ok);
    }
    println!("verified: {}/{}", passed, catalog.records.len());
    Ok(if passed == catalog.records.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_canon(file: &Path, out: &Path, group: Group) -> Result<ExitCode> {
    let catalog = read_catalog(file)?;
    let quads: Vec<_> = catalog.records.iter().map(|r| r.quad.clone()).collect();
    if let Some(first) = quads.first() {
        if let Some(bad) = quads.iter().find(|q| q.order() != first.order()) {
            anyhow::bail!("records have mixed orders ({} and {})", first.order(), bad.order());
        }
    }
    let reps = classify(&quads, group.into());
    let result = Catalog {
        header: vec![("classes".into(), reps.len().to_string())],
        records: reps.into_iter().map(QuadrupleRecord::new).collect(),
    };
    write_file(out, &serialize_catalog(&result))?;
    println!("records: {}", quads.len());
    println!("classes: {}", result.records.len());
    Ok(ExitCode::SUCCESS)
}

fn run_quaternary(file: &Path, out: &Path) -> Result<ExitCode> {
    let catalog = read_catalog(file)?;
    let mut blocks = Vec::new();
    for (i, rec) in catalog.records.iter().enumerate() {
        let h = match build_quaternary(&rec.quad) {
            Ok(h) => h,
            Err(e) => {
                eprintln!("record {}: {e}", i + 1);
                return Ok(ExitCode::from(1));
            }
        };
        if !verify_quaternary(&h)? {
            eprintln!("record {}: HH* != {}I", i + 1, h.dimension());
            return Ok(ExitCode::from(1));
        }
        println!("record {}: quaternary_order={} verified=pass", i + 1, h.dimension());
        blocks.push(write_quaternary(&h, &vec![("order".into(), h.dimension().to_string())]));
    }
    write_file(out, &blocks.join("\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Search { args, first_only, out } => run_search(&args, first_only, &out),
        Command::Verify { file } => run_verify(&file),
        Command::Canon { file, out, group } => run_canon(&file, &out, group),
        Command::Quaternary { file, out } => run_quaternary(&file, &out),
        Command::Decompose { order } => {
            let ds = four_square_decompositions(order)?;
            for d in &ds {
                println!("{d}");
            }
            println!("count: {}", ds.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { args } => {
            let outcome = search(&args.config(false))?;
            println!("{}", classify(&outcome.solutions, args.group.into()).len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
