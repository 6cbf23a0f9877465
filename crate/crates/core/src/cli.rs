//! Command-line front end. Exit codes: 0 success, 1 a queried property is
//! false or a mismatch was found, 2 invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::arrangement::{Arrangement, TriangleSet};
use crate::cyclicity::{self, GonalityCycle};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::fuzz::{self, canonical_nomenclature, Family, FuzzConfig};
use crate::io;
use crate::nomenclature::{realize_nomenclature, search_infinity_permutation, Nomenclature};
use crate::render::{render_svg, RenderSpec};
use crate::symbolic::{self, ConditionReading};
use crate::LineId;

#[derive(Parser, Debug)]
#[command(name = "linearr", version, about = "Exact combinatorics of line arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "thmB")]
    ThmB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InfinityMethod {
    Symbolic,
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Generic,
    Infinity,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    Mirrored,
    Literal,
}

#[derive(clap::Args, Debug)]
struct Source {
    /// Arrangement file in `arr v1` format.
    file: Option<PathBuf>,
    /// Nomenclature such as "1^+1 2^-1 3^+1".
    #[arg(long, conflicts_with_all = ["file", "cycle"])]
    nomenclature: Option<String>,
    /// Gonality cycle such as "(1 2 4 3)".
    #[arg(long, conflicts_with = "file")]
    cycle: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Everything known about an arrangement file.
    Analyze { file: PathBuf },
    /// Triangle faces, one ascending triple per line.
    Triangles {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
    },
    /// Whether a line is at infinity; prints true or false.
    InfinityLine {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        line: LineId,
        #[arg(long, value_enum, default_value = "symbolic")]
        method: InfinityMethod,
    },
    /// Builds an arrangement from a nomenclature or a cycle.
    Realize {
        #[arg(long, conflicts_with = "cycle", required_unless_present = "cycle")]
        nomenclature: Option<String>,
        #[arg(long)]
        cycle: Option<String>,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Counts gonality cycles on n lines.
    Census {
        #[arg(short)]
        n: usize,
        /// Also print every cycle.
        #[arg(long)]
        list: bool,
    },
    /// Differential fuzzing of the symbolic rules against geometry.
    Fuzz {
        #[arg(long, value_enum, default_value = "infinity")]
        family: FamilyArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "mirrored")]
        reading: ReadingArg,
        /// Emit the machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Draws an arrangement file as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Margin around the vertices, integer or p/q.
        #[arg(long, default_value = "1")]
        padding: String,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        no_shade: bool,
    },
}

enum Input {
    Arrangement(Arrangement),
    Nomenclature(Nomenclature),
    Cycle(GonalityCycle),
}

impl Source {
    fn load(&self) -> Result<Input> {
        match (&self.file, &self.nomenclature, &self.cycle) {
            (Some(f), None, None) => Ok(Input::Arrangement(io::load_arr(f)?)),
            (None, Some(s), None) => Ok(Input::Nomenclature(s.parse()?)),
            (None, None, Some(s)) => Ok(Input::Cycle(s.parse()?)),
            _ => Err(Error::BadToken("give exactly one of FILE, --nomenclature, --cycle".into())),
        }
    }
}

impl Input {
    fn arrangement(&self) -> Result<Arrangement> {
        match self {
            Input::Arrangement(a) => Ok(a.clone()),
            Input::Nomenclature(n) => realize_nomenclature(n),
            Input::Cycle(c) => cyclicity::realize_cycle(c),
        }
    }
}

/// Output of a command: exit code when no error occurred.
type Outcome = Result<i32>;

fn write_set(out: &mut dyn Write, set: &TriangleSet) -> std::io::Result<()> {
    write!(out, "{set}")
}

fn analyze(out: &mut dyn Write, file: &PathBuf) -> Outcome {
    let arr = io::load_arr(file)?;
    writeln!(out, "lines: {}", arr.n())?;
    for id in arr.ids() {
        writeln!(out, "  {id}: {}", arr.line(id))?;
    }
    let corners: Vec<String> = arr.corner_points().iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
    writeln!(out, "corner points: {}", corners.join(" "))?;

    let oracle = arr.triangle_faces_oracle();
    let mut mismatch = false;
    let search = search_infinity_permutation(&arr);
    let nom = canonical_nomenclature(&arr);
    match &nom {
        Some(n) => writeln!(out, "nomenclature: {n}")?,
        None => writeln!(out, "nomenclature: not infinity-type")?,
    }
    if search.note_violation() {
        writeln!(out, "note: greedy permutation failed where backtracking succeeded")?;
    }
    let cycle = cyclicity::detect_gonality_cycle(&arr);
    match &cycle {
        Some(c) => writeln!(out, "gonality cycle: {c}")?,
        None => writeln!(out, "gonality cycle: none")?,
    }

    writeln!(out, "triangles (oracle):")?;
    write_set(out, &oracle)?;
    if let Some(n) = &nom {
        let t = symbolic::thm_b_triangles(n);
        mismatch |= t != oracle;
        writeln!(out, "triangles (thmB):{}", if t == oracle { " same" } else { "" })?;
        if t != oracle {
            write_set(out, &t)?;
        }
    }
    if let Some(c) = cycle.as_ref().filter(|c| c.n() >= 4) {
        let t = cyclicity::thm_a_triangles(c)?;
        mismatch |= t != oracle;
        writeln!(out, "triangles (thmA):{}", if t == oracle { " same" } else { "" })?;
        if t != oracle {
            write_set(out, &t)?;
        }
    }
    writeln!(out, "equivalence classes:")?;
    for class in oracle.equivalence_classes() {
        let items: Vec<String> = class.iter().map(ToString::to_string).collect();
        writeln!(out, "  {}", items.join(", "))?;
    }
    Ok(if mismatch { 1 } else { 0 })
}

fn triangles(out: &mut dyn Write, err: &mut dyn Write, source: &Source, method: Method) -> Outcome {
    let input = source.load()?;
    let set = match method {
        Method::Oracle => input.arrangement()?.triangle_faces_oracle(),
        Method::ThmB => {
            let nom = match &input {
                Input::Nomenclature(n) => n.clone(),
                other => match canonical_nomenclature(&other.arrangement()?) {
                    Some(n) => n,
                    None => {
                        writeln!(err, "not infinity-type: no nomenclature")?;
                        return Ok(1);
                    }
                },
            };
            symbolic::thm_b_triangles(&nom)
        }
        Method::ThmA => {
            let cycle = match &input {
                Input::Cycle(c) => c.clone(),
                other => match cyclicity::detect_gonality_cycle(&other.arrangement()?) {
                    Some(c) => c,
                    None => {
                        writeln!(err, "no gonality cycle")?;
                        return Ok(1);
                    }
                },
            };
            cyclicity::thm_a_triangles(&cycle)?
        }
    };
    write_set(out, &set)?;
    Ok(0)
}

fn infinity_line(out: &mut dyn Write, source: &Source, line: LineId, method: InfinityMethod) -> Outcome {
    let input = source.load()?;
    let answer = match (&input, method) {
        (Input::Nomenclature(n), InfinityMethod::Symbolic) => {
            let t = n.position_of(line).ok_or(Error::UnknownLine(line))?;
            symbolic::line_at_infinity_symbolic(n, t)?
        }
        (_, InfinityMethod::Geometric) | (Input::Arrangement(_) | Input::Cycle(_), _) => {
            input.arrangement()?.member_at_infinity(line)?
        }
    };
    writeln!(out, "{answer}")?;
    Ok(if answer { 0 } else { 1 })
}

fn realize(out: &mut dyn Write, nom: &Option<String>, cycle: &Option<String>, output: &Option<PathBuf>) -> Outcome {
    let arr = match (nom, cycle) {
        (Some(n), None) => realize_nomenclature(&n.parse()?)?,
        (None, Some(c)) => cyclicity::realize_cycle(&c.parse()?)?,
        _ => return Err(Error::BadToken("give exactly one of --nomenclature, --cycle".into())),
    };
    match output {
        Some(path) => io::save_arr(path, &arr)?,
        None => write!(out, "{}", io::format_arr(&arr))?,
    }
    Ok(0)
}

fn census(out: &mut dyn Write, n: usize, list: bool) -> Outcome {
    let cycles = cyclicity::cycles(n)?;
    let mut count = 0u64;
    for c in cycles {
        count += 1;
        if list {
            writeln!(out, "{c}")?;
        }
    }
    let formula = cyclicity::cycle_count_formula(n);
    writeln!(out, "valid cycles: {count} (formula 2^{{n-1}}-n = {formula})")?;
    Ok(if count == formula { 0 } else { 1 })
}

fn run_fuzz(out: &mut dyn Write, cfg: FuzzConfig, json: bool) -> Outcome {
    let report = fuzz::fuzz_differential(&cfg)?;
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(if report.is_clean() { 0 } else { 1 })
}

fn render(file: &Path, output: &Path, padding: &str, labels: bool, shade: bool) -> Outcome {
    let arr = io::load_arr(file)?;
    let padding: Rat = padding.parse().map_err(|_| Error::BadToken(padding.to_string()))?;
    render_svg(&arr, &RenderSpec { path: output.to_path_buf(), padding, labels, shade })?;
    Ok(0)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Analyze { file } => analyze(out, &file),
        Command::Triangles { source, method } => triangles(out, err, &source, method),
        Command::InfinityLine { source, line, method } => infinity_line(out, &source, line, method),
        Command::Realize { nomenclature, cycle, output } => realize(out, &nomenclature, &cycle, &output),
        Command::Census { n, list } => census(out, n, list),
        Command::Fuzz { family, trials, n_min, n_max, seed, reading, json } => {
            let family = match family {
                FamilyArg::Generic => Family::Generic,
                FamilyArg::Infinity => Family::Infinity,
                FamilyArg::Cyclic => Family::Cyclic,
            };
            let mut cfg = FuzzConfig::new(family, seed, trials, n_min, n_max);
            cfg.reading = match reading {
                ReadingArg::Mirrored => ConditionReading::Mirrored,
                ReadingArg::Literal => ConditionReading::Literal,
            };
            run_fuzz(out, cfg, json)
        }
        Command::Render { file, output, padding, no_labels, no_shade } => {
            render(&file, &output, &padding, !no_labels, !no_shade)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
