use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use arcnum::oracle::{
    brute_force_arc_number, brute_force_find_star, enumerate_diagrams, random_diagram,
};
use arcnum::{
    arc_number, extract_star, make_star, minimal_partition, verify_witness, ChordDiagram,
};

mod records;
mod render;

use records::{process_batch, Mode};
use render::{render_svg, Overlays};

#[derive(Parser)]
#[command(
    name = "arcnum",
    version,
    about = "Arc numbers of chord diagrams given as Gauss words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BatchArgs {
    /// File with one Gauss word per line, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Emit one JSON record per line.
    #[arg(long)]
    json: bool,
    /// Worker threads; output order always follows input order.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Arc number of each word.
    Arcnum(BatchArgs),
    /// Arc number and a minimal set of cut gaps.
    Partition(BatchArgs),
    /// A star subdiagram certifying the arc number.
    Star(BatchArgs),
    /// Canonical word (least rotation, relabeled by first occurrence).
    Canon(BatchArgs),
    /// Print the star S(t, a) as a Gauss word.
    GenStar {
        #[arg(short, long)]
        t: usize,
        #[arg(short, long)]
        a: usize,
    },
    /// Draw a diagram as SVG.
    Render {
        /// Gauss word to draw.
        word: String,
        /// Mark the cut points of a minimal partition.
        #[arg(long)]
        cuts: bool,
        /// Highlight the chords of an extracted star.
        #[arg(long)]
        witness: bool,
        /// Write to a file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time arc-number computation on seeded random diagrams.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "256,512,1024,2048")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Timed runs per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
    /// Cross-check against the brute-force oracles.
    #[command(hide = true)]
    OracleCheck {
        /// Exhaustive census up to this many chords.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Number of extra random diagrams with up to 8 chords.
        #[arg(long, default_value_t = 500)]
        random: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read_lines(input: &str) -> Result<Vec<String>> {
    let lines = if input == "-" {
        io::stdin().lock().lines().collect::<io::Result<Vec<_>>>()?
    } else {
        fs::read_to_string(input)
            .with_context(|| format!("reading {input}"))?
            .lines()
            .map(str::to_string)
            .collect()
    };
    Ok(lines)
}

fn run_batch(args: &BatchArgs, mode: Mode) -> Result<bool> {
    let lines = read_lines(&args.input)?;
    let records = process_batch(&lines, mode, args.jobs);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut all_ok = true;
    for (i, record) in records.iter().enumerate() {
        if let Some(err) = &record.error {
            all_ok = false;
            eprintln!("line {}: {err}", i + 1);
        }
        if args.json {
            writeln!(out, "{}", serde_json::to_string(record)?)?;
        } else if let Some(line) = record.plain(mode) {
            writeln!(out, "{line}")?;
        }
    }
    Ok(all_ok)
}

fn render(word: &str, cuts: bool, witness: bool, output: Option<PathBuf>) -> Result<()> {
    let diagram = ChordDiagram::parse(word)?;
    let cut_list = cuts.then(|| minimal_partition(&diagram).sorted_indices());
    let star = if witness {
        match extract_star(&diagram) {
            Ok(w) => Some(w.crossings),
            Err(arcnum::Error::NoStar(n)) => {
                eprintln!("arc number {n}: no star to highlight");
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let svg = render_svg(
        &diagram,
        &Overlays {
            cuts: cut_list.as_deref(),
            witness: star.as_deref(),
        },
    );
    match output {
        Some(path) => {
            fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{svg}"),
    }
    Ok(())
}

fn median_arc_number_time(diagram: &ChordDiagram, runs: usize) -> Duration {
    let mut times: Vec<Duration> = (0..runs.max(1))
        .map(|_| {
            let started = Instant::now();
            std::hint::black_box(arc_number(diagram));
            started.elapsed()
        })
        .collect();
    times.sort();
    times[times.len() / 2]
}

fn bench(sizes: &[usize], seed: u64, runs: usize) {
    println!("n\tarc_number\tmedian_ms\tratio");
    let mut previous: Option<Duration> = None;
    for &n in sizes {
        let diagram = random_diagram(n, seed);
        let time = median_arc_number_time(&diagram, runs);
        let ratio = previous
            .map(|p| format!("{:.2}", time.as_secs_f64() / p.as_secs_f64().max(1e-12)))
            .unwrap_or_else(|| "-".into());
        println!(
            "{n}\t{}\t{:.4}\t{ratio}",
            arc_number(&diagram),
            time.as_secs_f64() * 1e3
        );
        previous = Some(time);
    }
}

fn check_one(d: &ChordDiagram) -> Result<()> {
    let word = d.to_gauss_word();
    let fast = arc_number(d);
    let slow = brute_force_arc_number(d)?;
    if fast != slow {
        bail!("{word}: arc number {fast}, brute force {slow}");
    }
    if fast >= 3 {
        let w = extract_star(d)?;
        if w.params.a != fast - 2 || !verify_witness(&w)? {
            bail!("{word}: bad witness {w}");
        }
        if brute_force_find_star(d, fast - 2)?.is_none() {
            bail!("{word}: brute force finds no S(t,{})", fast - 2);
        }
    } else if fast == 2 && brute_force_find_star(d, 1)?.is_some() {
        bail!("{word}: arc number 2 but contains S(t,1)");
    }
    Ok(())
}

fn oracle_check(max_n: usize, random: u64, seed: u64) -> Result<bool> {
    let mut checked = 0u64;
    let mut failures = 0u64;
    let census = (0..=max_n)
        .map(enumerate_diagrams)
        .collect::<arcnum::Result<Vec<_>>>()?
        .into_iter()
        .flatten();
    let randoms = (0..random).map(|i| random_diagram((i % 9) as usize, seed.wrapping_add(i)));
    for d in census.chain(randoms) {
        checked += 1;
        if let Err(e) = check_one(&d) {
            failures += 1;
            eprintln!("{e}");
        }
    }
    println!("checked {checked} diagrams, {failures} failures");
    Ok(failures == 0)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Arcnum(args) => run_batch(&args, Mode::ArcNumber),
        Command::Partition(args) => run_batch(&args, Mode::Partition),
        Command::Star(args) => run_batch(&args, Mode::Star),
        Command::Canon(args) => run_batch(&args, Mode::Canon),
        Command::GenStar { t, a } => {
            println!("{}", make_star(t, a)?.to_gauss_word());
            Ok(true)
        }
        Command::Render {
            word,
            cuts,
            witness,
            output,
        } => render(&word, cuts, witness, output).map(|_| true),
        Command::Bench { sizes, seed, runs } => {
            bench(&sizes, seed, runs);
            Ok(true)
        }
        Command::OracleCheck {
            max_n,
            random,
            seed,
        } => oracle_check(max_n, random, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
