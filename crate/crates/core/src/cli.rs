//! The `mrlrc` command line. Kept in the library so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a verification or search came back negative,
//! 2 usage or parse error, 3 invalid parameters or field, 4 size refusal,
//! 5 certification false (`code check` only).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{eq3_range, eq3_size, largest_uniform_size, BoundsReport};
use crate::code::{is_mds_code, is_mr_lrc, puncture, search_mr_code, shorten, GenMatrix};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matroid::{check_axioms, flats, TableMatroid};
use crate::mr::{LrcShape, MrMatroid, MrParams};
use crate::subset::Subset;
use crate::sweep::{sweep, to_csv};
use crate::witness::{
    all_witnesses, oracle_max_uniform, oracle_max_uniform_all, verify_witness, witness_eq1,
    witness_eq2, witness_eq3, witness_eq4, MinorWitness,
};

pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARAMS: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;
pub const EXIT_CERT_FALSE: i32 = 5;

/// Uniform minors and field-size bounds for MR locally repairable codes.
///
/// Parameters are written `n,k,r`, optionally followed by a repair-set partition,
/// e.g. `8,4,3:0,2,4,6;1,3,5,7`.
#[derive(Parser, Debug)]
#[command(name = "mrlrc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exhaustively check the rank axioms of the MR matroid
    Axioms { params: String },
    /// List the flats of the MR matroid by rank
    Flats {
        params: String,
        /// Also recompute the flats by closure and compare
        #[arg(long)]
        check: bool,
    },
    /// Build (or verify) uniform-minor witnesses
    Witness(WitnessArgs),
    /// Exhaustive search for the largest uniform minors
    Oracle {
        params: String,
        #[arg(long = "kprime")]
        k_prime: Option<usize>,
    },
    /// Minor sizes and field-size lower bounds
    Bounds {
        params: String,
        /// Print the sweep CSV row instead of key=value lines
        #[arg(long)]
        csv: bool,
    },
    /// Tabulate sizes and bounds over a range of n
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generator-matrix operations
    #[command(subcommand)]
    Code(CodeCommand),
}

#[derive(Args, Debug)]
struct WitnessArgs {
    params: String,
    /// Which construction: 1, 2, 3, 4 or all
    #[arg(long = "eq", default_value = "all")]
    which: String,
    #[arg(long = "kprime")]
    k_prime: Option<usize>,
    /// Re-verify a witness line instead of constructing one
    #[arg(long)]
    verify: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    /// Certify a code as MR for the given parameters and/or as MDS
    Check {
        file: PathBuf,
        #[arg(long)]
        mr: Option<String>,
        #[arg(long)]
        mds: bool,
    },
    /// Delete columns
    Puncture {
        file: PathBuf,
        #[arg(long)]
        cols: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Keep codewords vanishing on the columns, then delete them
    Shorten {
        file: PathBuf,
        #[arg(long)]
        cols: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random search for an MR code
    Search {
        params: String,
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        Error::Params(_)
        | Error::Field(_)
        | Error::EmptySweep { .. }
        | Error::RankOutOfRange { .. } => EXIT_PARAMS,
        Error::TooLarge { .. } => EXIT_TOO_LARGE,
        _ => EXIT_NEGATIVE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn mr(params: &str) -> Result<MrMatroid> {
    Ok(MrMatroid::new(params.parse::<MrParams>()?))
}

fn braces(s: Subset) -> String {
    format!("{{{s}}}")
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_matrix(path: &Path) -> Result<GenMatrix> {
    fs::read_to_string(path)?.parse()
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Axioms { params } => {
            let m = mr(&params)?;
            let rep = check_axioms(&m)?;
            writeln!(out, "params={}", m.params())?;
            let show = |o: Option<String>| o.unwrap_or_else(|| "ok".into());
            writeln!(
                out,
                "R1: {}",
                show(rep.r1.map(|x| format!("rank({}) != 0", braces(x))))
            )?;
            writeln!(
                out,
                "R2: {}",
                show(
                    rep.r2
                        .map(|(x, y)| format!("violated at {} -> {}", braces(x), braces(y)))
                )
            )?;
            writeln!(
                out,
                "R3: {}",
                show(
                    rep.r3
                        .map(|(x, y)| format!("violated at {}, {}", braces(x), braces(y)))
                )
            )?;
            writeln!(
                out,
                "axioms: {}",
                if rep.passed() { "pass" } else { "FAIL" }
            )?;
            Ok(if rep.passed() { 0 } else { EXIT_NEGATIVE })
        }
        Command::Flats { params, check } => {
            let m = mr(&params)?;
            let fs = m.flats()?;
            for f in &fs {
                writeln!(out, "rank {}: {}", m.rank_closed_form(*f), braces(*f))?;
            }
            writeln!(out, "flats={}", fs.len())?;
            if check {
                // a bare rank table, so the flats come from closures rather than the closed form
                let table = TableMatroid::from_fn(m.params().n(), |s| m.rank_closed_form(s))?;
                let same = flats(&table)? == fs;
                writeln!(out, "closure_agrees={same}")?;
                return Ok(if same { 0 } else { EXIT_NEGATIVE });
            }
            Ok(0)
        }
        Command::Witness(args) => witness(args, out),
        Command::Oracle { params, k_prime } => oracle(&params, k_prime, out),
        Command::Bounds { params, csv } => {
            let p: LrcShape = params.parse()?;
            if csv {
                let row = crate::sweep::SweepRow::new(p);
                writeln!(out, "{}", crate::sweep::CSV_HEADER)?;
                writeln!(out, "{}", row.to_csv())?;
            } else {
                write!(out, "{}", BoundsReport::new(p).to_key_value())?;
            }
            Ok(0)
        }
        Command::Sweep {
            k,
            r,
            n_min,
            n_max,
            out: path,
        } => {
            let rows = sweep(k, r, n_min, n_max)?;
            let command = format!("mrlrc sweep --k {k} --r {r} --n-min {n_min} --n-max {n_max}");
            emit(&to_csv(&rows, &command), path.as_deref(), out)?;
            Ok(0)
        }
        Command::Code(c) => code(c, out),
    }
}

fn witness(args: WitnessArgs, out: &mut dyn Write) -> Result<i32> {
    let m = mr(&args.params)?;
    let p = m.params().clone();
    if let Some(line) = args.verify {
        let w: MinorWitness = line.parse()?;
        let ok = verify_witness(&m, &w)?;
        writeln!(out, "verified={ok}")?;
        return Ok(if ok { 0 } else { EXIT_NEGATIVE });
    }
    let list: Vec<(&str, MinorWitness)> = match (args.which.as_str(), args.k_prime) {
        ("1", _) => vec![("eq1", witness_eq1(&m)?)],
        ("2", _) => vec![("eq2", witness_eq2(&m)?)],
        ("3", Some(kp)) => vec![("eq3", witness_eq3(&m, kp)?)],
        ("4", Some(kp)) => vec![("eq4", witness_eq4(&m, kp)?)],
        ("3" | "4", None) | ("all", _) => {
            let tag = match args.which.as_str() {
                "3" => Some("eq3"),
                "4" => Some("eq4"),
                _ => None,
            };
            all_witnesses(&m)?
                .into_iter()
                .filter(|(t, _)| tag.is_none_or(|want| *t == want))
                .collect()
        }
        (other, _) => {
            return Err(Error::Parse(format!(
                "--eq must be 1, 2, 3, 4 or all, not {other:?}"
            )))
        }
    };
    let labelled = list.len() > 1 || args.which == "all";
    let mut all_ok = true;
    for (tag, w) in &list {
        all_ok &= w.verified;
        if labelled {
            writeln!(out, "{tag}: {w}")?;
        } else {
            writeln!(out, "{w}")?;
        }
        if *tag == "eq3" && w.boundary_case {
            let formula = eq3_size(&p, w.target_rank)?;
            writeln!(
                out,
                "# eq3 k'={}: formula size {formula}, witness size {}",
                w.target_rank, w.claimed_size
            )?;
        }
    }
    Ok(if all_ok { 0 } else { EXIT_NEGATIVE })
}

fn oracle(params: &str, k_prime: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let m = mr(params)?;
    let p = m.params().clone();
    let results = match k_prime {
        Some(kp) => oracle_max_uniform(&m, kp)?
            .into_iter()
            .map(|hit| (kp, hit))
            .collect(),
        None => oracle_max_uniform_all(&m)?,
    };
    writeln!(out, "params={p}")?;
    if results.is_empty() {
        writeln!(out, "no uniform minor found")?;
        return Ok(EXIT_NEGATIVE);
    }
    for (kp, (size, w)) in &results {
        writeln!(out, "k'={kp}: max n'={size}; {w}")?;
    }
    for kp in eq3_range(&p) {
        if let Some((size, _)) = results.get(&kp) {
            let formula = eq3_size(&p, kp)?;
            if formula != *size {
                writeln!(out, "# eq3 k'={kp}: formula {formula}, oracle {size}")?;
            }
        }
    }
    if k_prime.is_none() {
        let best = results.values().map(|(s, _)| *s).max().unwrap_or(0);
        let thm = largest_uniform_size(&p);
        writeln!(out, "oracle_largest={best}")?;
        writeln!(out, "theorem_largest={thm}")?;
    }
    Ok(0)
}

fn code(cmd: CodeCommand, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        CodeCommand::Check { file, mr, mds } => {
            let g = read_matrix(&file)?;
            let mut ok = true;
            writeln!(
                out,
                "code: [{}, {}] over GF({})",
                g.n(),
                g.k(),
                g.field().order()
            )?;
            writeln!(out, "rank: {}", g.rank())?;
            if let Some(params) = mr {
                let p: MrParams = params.parse()?;
                let v = is_mr_lrc(&g, &p)?;
                writeln!(out, "MR: {v}")?;
                ok &= v;
            }
            if mds {
                let v = is_mds_code(&g)?;
                writeln!(out, "MDS: {v}")?;
                ok &= v;
            }
            Ok(if ok { 0 } else { EXIT_CERT_FALSE })
        }
        CodeCommand::Puncture {
            file,
            cols,
            out: path,
        } => {
            let g = puncture(&read_matrix(&file)?, cols.parse()?)?;
            emit(&g.to_text(), path.as_deref(), out)?;
            Ok(0)
        }
        CodeCommand::Shorten {
            file,
            cols,
            out: path,
        } => {
            let g = shorten(&read_matrix(&file)?, cols.parse()?)?;
            emit(&g.to_text(), path.as_deref(), out)?;
            Ok(0)
        }
        CodeCommand::Search {
            params,
            field,
            seed,
            trials,
            out: path,
        } => {
            let p: MrParams = params.parse()?;
            let spec: FieldSpec = field.parse()?;
            match search_mr_code(&p, &spec, trials, seed)? {
                Some(hit) => {
                    let text = format!(
                        "# mrlrc code search {p} --field {spec} --seed {seed} (trial {})\n{}",
                        hit.trial,
                        hit.matrix.to_text()
                    );
                    emit(&text, path.as_deref(), out)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "no MR code found in {trials} trials")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}
