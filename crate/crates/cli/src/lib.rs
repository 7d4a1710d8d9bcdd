//! Command-line front end. [`run`] takes the arguments (without the program
//! name) and two output streams, and returns the process exit code:
//! 0 on success, 1 when a verification fails, 2 on a usage or input error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use partition_forge::characters::{build_config, verify_character, CrystalFamily};
use partition_forge::deg1::{omega, omega_inv};
use partition_forge::deg2::{merge_flat1, split_flat2, verify_flatreg2_range};
use partition_forge::degree_k::{flatten_k, unflatten_k};
use partition_forge::energy::{descent_example, ColorWord, Energy};
use partition_forge::enumerate::{count_by_word, enumerate, sufficient_parts, EnumBudget, Family};
use partition_forge::identities::{verify_named_identity, NamedIdentity};
use partition_forge::partition::ColoredPartition;
use partition_forge::qseries::{gf_from_partitions, Substitution};
use partition_forge::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "partition-forge", version, about = "Flat and regular colored partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct EnergyArg {
    /// Energy file; defaults to the built-in a, b, c descent example.
    #[arg(long, value_name = "FILE")]
    energy: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[command(flatten)]
    energy: EnergyArg,
    /// Input partition, e.g. "10a 8a 8b 0c".
    #[arg(long = "in", value_name = "PARTITION")]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of a family, in canonical order.
    Enumerate {
        #[command(flatten)]
        energy: EnergyArg,
        #[arg(long)]
        family: String,
        /// Keep only this non-ground color word.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        max_size: i64,
        /// Bound on non-terminal parts; implied by the word when one is given.
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Number of members with a given color word and size.
    Count {
        #[command(flatten)]
        energy: EnergyArg,
        #[arg(long)]
        family: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        size: i64,
        #[arg(long)]
        json: bool,
    },
    /// Ω: grounded flat to grounded regular.
    Omega(MapArgs),
    /// Ω⁻¹: grounded regular to grounded flat.
    OmegaInv(MapArgs),
    /// Split a flat partition into secondary parts into its primary halves.
    Split2(MapArgs),
    /// Pair up the parts of a flat partition into secondary parts.
    Merge2(MapArgs),
    /// F_k: a flat partition into degree-k parts to primary parts.
    Flatten {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        degree: usize,
        /// Apply F_k⁻¹ instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Compare the six degree-two counts for a color word.
    VerifyDeg2 {
        #[command(flatten)]
        energy: EnergyArg,
        #[arg(long)]
        word: String,
        /// Check this size only.
        #[arg(long, conflicts_with = "max_size")]
        size: Option<i64>,
        /// Check every size up to this one.
        #[arg(long)]
        max_size: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Check a character identity: A2n2, D-L0, D-Ln or B-Ln.
    Character {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check a named partition identity.
    Verify {
        /// euler, glaisher, keith_xiong, glaisher_analogue or siladic_companion.
        #[arg(long)]
        identity: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Generating function of a family in q and the non-ground colors.
    Series {
        #[command(flatten)]
        energy: EnergyArg,
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        word: Option<String>,
        /// Bound on non-terminal parts; defaults to 2·order + |C| + 2.
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

/// Any failure that ends the command early.
enum Failure {
    Usage(String),
    Verification,
    /// The reader went away; not an error.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn load_energy(arg: &EnergyArg) -> Result<Energy, Failure> {
    match &arg.energy {
        None => Ok(descent_example()),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(Energy::parse(&text)?)
        }
    }
}

fn parse_word(energy: &Energy, word: &str) -> Result<ColorWord, Failure> {
    Ok(energy.colors().parse_word(word)?)
}

fn parse_input(text: &str, energy: &Energy, family: Family) -> Result<ColoredPartition, Failure> {
    let pi = ColoredPartition::parse(text, energy, family.relation(), family.is_grounded())?;
    family.check_member(&pi, energy)?;
    Ok(pi)
}

fn partition_json(pi: &ColoredPartition, energy: &Energy) -> serde_json::Value {
    let cs = energy.colors();
    json!({
        "partition": pi.to_text(energy),
        "size": pi.size(energy),
        "word": cs.format_colors(pi.color_word(energy).as_slice()),
    })
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn map_command(
    args: &MapArgs,
    from: Family,
    map: impl Fn(&ColoredPartition, &Energy) -> partition_forge::Result<ColoredPartition>,
    out: &mut dyn Write,
) -> Outcome {
    let e = load_energy(&args.energy)?;
    let pi = parse_input(&args.input, &e, from)?;
    let image = map(&pi, &e)?;
    if args.json {
        writeln!(out, "{}", json!({"input": partition_json(&pi, &e), "output": partition_json(&image, &e)}))?;
    } else {
        writeln!(out, "{}", image.to_text(&e))?;
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Enumerate { energy, family, word, max_size, max_parts, json } => {
            let e = load_energy(&energy)?;
            let family: Family = family.parse()?;
            let word = word.map(|w| parse_word(&e, &w)).transpose()?;
            let parts = match (&word, max_parts) {
                (_, Some(p)) => p,
                (Some(w), None) => sufficient_parts(family, w, max_size),
                (None, None) => return Err(Failure::Usage("enumerate needs --word or --max-parts".into())),
            };
            let mut budget = EnumBudget::new(max_size, parts);
            if let Some(w) = word {
                budget = budget.with_word(w);
            }
            let list = enumerate(family, &e, &budget)?;
            if json {
                let items: Vec<_> = list.iter().map(|p| partition_json(p, &e)).collect();
                writeln!(out, "{}", serde_json::Value::Array(items))?;
            } else {
                for p in &list {
                    writeln!(out, "{}", p.to_text(&e))?;
                }
            }
            Ok(())
        }
        Command::Count { energy, family, word, size, json } => {
            let e = load_energy(&energy)?;
            let family: Family = family.parse()?;
            let w = parse_word(&e, &word)?;
            let n = count_by_word(family, &e, &w, size)?;
            if json {
                writeln!(out, "{}", json!({"family": family.to_string(), "word": word, "size": size, "count": n}))?;
            } else {
                writeln!(out, "{n}")?;
            }
            Ok(())
        }
        Command::Omega(a) => map_command(&a, Family::F1, omega, out),
        Command::OmegaInv(a) => map_command(&a, Family::R1, omega_inv, out),
        Command::Split2(a) => map_command(&a, Family::F2, split_flat2, out),
        Command::Merge2(a) => map_command(&a, Family::F1, merge_flat1, out),
        Command::Flatten { map, degree, inverse } => {
            if degree == 0 {
                return Err(Failure::Usage("--degree must be at least 1".into()));
            }
            if inverse {
                map_command(&map, Family::F1, |p, e| unflatten_k(p, e, degree), out)
            } else {
                map_command(&map, Family::Fk(degree), |p, e| flatten_k(p, e, degree), out)
            }
        }
        Command::VerifyDeg2 { energy, word, size, max_size, json } => {
            let e = load_energy(&energy)?;
            let w = parse_word(&e, &word)?;
            let (lo, hi) = match (size, max_size) {
                (Some(n), None) => (n, n),
                (None, Some(m)) => (0, m),
                _ => return Err(Failure::Usage("verify-deg2 needs --size or --max-size".into())),
            };
            if lo < 0 {
                return Err(Failure::Usage("size must be non-negative".into()));
            }
            let reports: Vec<_> = verify_flatreg2_range(&e, &w, hi)?.into_iter().skip(lo as usize).collect();
            let pass = reports.iter().all(|r| r.all_equal && r.links_ok);
            if json {
                writeln!(out, "{}", json!({"word": word, "reports": reports, "pass": pass}))?;
            } else {
                writeln!(out, "word {:?}: F2 F1 R1 O E R2", word)?;
                for r in &reports {
                    let c = r.counts.as_array().map(|x| x.to_string());
                    let links = if r.links_ok { "maps ok" } else { "maps FAIL" };
                    writeln!(out, "n={}: {} ({links})", r.n, c.join(if r.all_equal { " = " } else { " != " }))?;
                }
                writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
            }
            verdict(pass)
        }
        Command::Character { family, rank, order, json } => {
            let family: CrystalFamily = family.parse()?;
            let config = build_config(family, rank)?;
            let r = verify_character(&config, order)?;
            if json {
                writeln!(out, "{}", json!({"report": r, "pass": r.pass()}))?;
            } else {
                writeln!(out, "character {} rank={} order={}", r.family, r.rank, r.order)?;
                writeln!(out, "variables: {}", r.variables.join(" "))?;
                writeln!(out, "terms: {}", r.terms)?;
                writeln!(out, "transform consistent: {}", r.transform_consistent)?;
                writeln!(out, "lhs = rhs: {}", r.lhs_equals_rhs)?;
                writeln!(out, "direct path = transformed path: {}", r.paths_agree)?;
                for d in r.diffs.iter().take(10) {
                    writeln!(out, "  q^{} {:?}: lhs {} rhs {}", d.q, d.exponents, d.left, d.right)?;
                }
                writeln!(out, "{}", if r.pass() { "PASS" } else { "FAIL" })?;
            }
            verdict(r.pass())
        }
        Command::Verify { identity, m, order, json } => {
            let id = NamedIdentity::parse(&identity, m)?;
            let r = verify_named_identity(id, order)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&r).expect("report serializes"))?;
            } else {
                write!(out, "{}", r.to_text())?;
            }
            verdict(r.pass)
        }
        Command::Series { energy, family, order, word, max_parts, json } => {
            let e = load_energy(&energy)?;
            let family: Family = family.parse()?;
            let word = word.map(|w| parse_word(&e, &w)).transpose()?;
            let parts = match (&word, max_parts) {
                (_, Some(p)) => p,
                (Some(w), None) => sufficient_parts(family, w, order as i64),
                (None, None) => 2 * order as usize + e.colors().len() + 2,
            };
            let mut budget = EnumBudget::new(order as i64, parts);
            if let Some(w) = word {
                budget = budget.with_word(w);
            }
            let list = enumerate(family, &e, &budget)?;
            let s = gf_from_partitions(&list, &e, &Substitution::sizes(e.colors()), order)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&s.dump()).expect("dump serializes"))?;
            } else {
                writeln!(out, "{}", s.to_text())?;
            }
            Ok(())
        }
    }
}

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("partition-forge")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    exit_code(execute(cli.command, out), err)
}

fn exit_code(outcome: Outcome, err: &mut dyn Write) -> i32 {
    match outcome {
        Ok(()) | Err(Failure::Closed) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mut err = Vec::new();
        assert_eq!(exit_code(Ok(()), &mut err), EXIT_OK);
        assert_eq!(exit_code(verdict(false), &mut err), EXIT_FAILED);
        assert_eq!(exit_code(Err(Failure::Closed), &mut err), EXIT_OK);
        assert!(err.is_empty());
        assert_eq!(exit_code(Err(Failure::Usage("bad".into())), &mut err), EXIT_USAGE);
        assert_eq!(String::from_utf8(err).unwrap(), "error: bad\n");
    }
}
