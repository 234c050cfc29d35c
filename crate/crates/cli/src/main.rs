use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use bfcorr::correspondence::{check_identity, check_names, default_n, vev, CheckParams, IdentityReport, Model, Side, Symbol, VevSpec};
use bfcorr::{Error, Result};

mod output;

#[derive(Parser)]
#[command(name = "bfcorr", version, about = "Exact checks of the boson-fermion correspondences of types A and B")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Truncation cutoff D.
    #[arg(long, env = "BFCORR_CUTOFF", default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    cutoff: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::A => Model::A,
            ModelArg::B => Model::B,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Fermion,
    Boson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckGroup {
    Cauchy,
    SchurPfaffian,
    VevMatch,
    DetFormula,
    PfFormula,
    ProductFormula,
    Supercommutativity,
    Heisenberg,
    Character,
    OpeResidues,
    Hopf,
    Vacuum,
    Kernel,
    All,
}

impl CheckGroup {
    fn members(self) -> Vec<&'static str> {
        let all = check_names().to_vec();
        match self {
            CheckGroup::Cauchy => vec!["cauchy"],
            CheckGroup::SchurPfaffian => vec!["schur-pfaffian"],
            CheckGroup::VevMatch => vec!["vev-match-A", "vev-match-B"],
            CheckGroup::DetFormula => vec!["det-formula-A"],
            CheckGroup::PfFormula => vec!["pf-formula-B"],
            CheckGroup::ProductFormula => vec!["product-formula-A", "product-formula-B"],
            CheckGroup::Supercommutativity => vec!["supercommutativity-A", "supercommutativity-B"],
            CheckGroup::Heisenberg => vec!["heisenberg-from-fermions-A", "twisted-heisenberg-from-fermions-B"],
            CheckGroup::Character => vec!["character-A", "character-B"],
            CheckGroup::OpeResidues => vec!["ope-residues"],
            CheckGroup::Hopf => vec!["hopf-relations"],
            CheckGroup::Vacuum => vec!["vacuum-creation"],
            CheckGroup::Kernel => vec!["kernel-properties"],
            CheckGroup::All => all,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run named identity checks.
    Verify {
        #[arg(value_enum)]
        check: CheckGroup,
        /// Restrict to checks of one model.
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        /// Size: pairs phi/psi in type A, half the number of points in type B.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run checks on a thread pool.
        #[arg(long)]
        parallel: bool,
        /// Cap the cutoff at 6 and sizes at 2.
        #[arg(long)]
        quick: bool,
        /// Record wall-clock time in the reports.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print the truncated vacuum expectation value of a word of fields.
    Vev {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = SideArg::Fermion)]
        side: SideArg,
        /// Number of fields in the standard word.
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        points: Option<usize>,
        /// An explicit word such as "phi(z) psi(w)".
        #[arg(long)]
        word: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Graded dimensions of the fermion and boson spaces.
    Character {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Charge sector (type A only).
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        charge: i64,
        /// Highest level listed.
        #[arg(long, default_value_t = 12)]
        max_level: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a rational function in the region given by the variable order.
    Expand {
        /// e.g. "(z - w)/(z + w)"
        expr: String,
        /// Variables from outermost to innermost, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("bfcorr: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs a command, returning whether everything passed.
fn run(command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Verify {
            check,
            model,
            n,
            seed,
            parallel,
            quick,
            timing,
            common,
        } => {
            let names: Vec<&str> = check
                .members()
                .into_iter()
                .filter(|name| match (model, name_model(name)) {
                    (Some(m), Some(k)) => Model::from(m) == k,
                    _ => true,
                })
                .collect();
            if names.is_empty() {
                return Err(Error::Invalid("no check of that kind for this model".into()));
            }
            let cutoff = if quick { common.cutoff.min(6) } else { common.cutoff };
            let job = |name: &&str| -> Result<IdentityReport> {
                let size = n.or_else(|| default_n(name)).map(|k| if quick { k.min(2) } else { k });
                let params = CheckParams { n: size, cutoff, seed };
                let start = std::time::Instant::now();
                let mut report = check_identity(name, &params)?;
                if timing {
                    report.elapsed_ms = start.elapsed().as_millis() as u64;
                }
                Ok(report)
            };
            let reports: Result<Vec<IdentityReport>> = if parallel {
                names.par_iter().map(job).collect()
            } else {
                names.iter().map(job).collect()
            };
            let mut reports = reports?;
            reports.sort_by(|a, b| a.check.cmp(&b.check));
            output::reports(out, &reports, common.format)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Vev {
            model,
            side,
            points,
            word,
            common,
        } => {
            let model = Model::from(model);
            let side = match side {
                SideArg::Fermion => Side::Fermion,
                SideArg::Boson => Side::Boson,
            };
            let spec = match (points, word) {
                (_, Some(w)) => VevSpec {
                    model,
                    side,
                    word: parse_word(&w)?,
                    cutoff: common.cutoff,
                },
                (Some(p), None) => standard_word(model, side, p, common.cutoff)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let series = vev(&spec)?;
            output::vev(out, &spec, &series, common.format)?;
            Ok(true)
        }
        Command::Character {
            model,
            charge,
            max_level,
            format,
        } => {
            if max_level < 0 {
                return Err(Error::Invalid("max-level must be non-negative".into()));
            }
            if model == ModelArg::B && charge != 0 {
                return Err(Error::Invalid("type B has no charge sectors".into()));
            }
            output::character(out, model.into(), charge, max_level, format)?;
            Ok(true)
        }
        Command::Expand { expr, order, common } => {
            let series = output::expand(&expr, &order, common.cutoff)?;
            output::series(out, &series, common.format)?;
            Ok(true)
        }
    }
}

fn name_model(name: &str) -> Option<Model> {
    match name {
        "cauchy" => Some(Model::A),
        "schur-pfaffian" => Some(Model::B),
        _ if name.ends_with("-A") => Some(Model::A),
        _ if name.ends_with("-B") => Some(Model::B),
        _ => None,
    }
}

fn standard_word(model: Model, side: Side, points: usize, cutoff: u32) -> Result<VevSpec> {
    if points == 0 {
        return Err(Error::Invalid("points must be at least 1".into()));
    }
    match model {
        Model::A if points % 2 == 1 => Err(Error::Invalid("the standard type A word has an even number of points; use --word".into())),
        Model::A => Ok(VevSpec::standard(model, side, points / 2, cutoff)),
        Model::B => {
            let word = (1..=points).map(|i| (Symbol::Phi, format!("z{i}"))).collect();
            Ok(VevSpec { model, side, word, cutoff })
        }
    }
}

/// Parses `phi(z) psi(w) …`; whitespace between factors is optional.
fn parse_word(input: &str) -> Result<Vec<(Symbol, String)>> {
    let bad = |m: &str| Error::Parse {
        input: input.to_string(),
        message: m.to_string(),
    };
    let mut rest = input.trim();
    let mut word = Vec::new();
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| bad("expected ')'"))?;
        if close < open {
            return Err(bad("unbalanced parentheses"));
        }
        let symbol = match rest[..open].trim() {
            "phi" => Symbol::Phi,
            "psi" => Symbol::Psi,
            other => return Err(bad(&format!("unknown field '{other}'"))),
        };
        word.push((symbol, rest[open + 1..close].trim().to_string()));
        rest = rest[close + 1..].trim_start();
    }
    if word.is_empty() {
        return Err(bad("empty word"));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let w = parse_word("phi(z) psi( w )").unwrap();
        assert_eq!(w, vec![(Symbol::Phi, "z".into()), (Symbol::Psi, "w".into())]);
        assert!(parse_word("chi(z)").is_err());
        assert!(parse_word("phi z").is_err());
        assert!(parse_word("  ").is_err());
    }

    #[test]
    fn groups_cover_every_check() {
        let mut covered: Vec<&str> = [
            CheckGroup::Cauchy,
            CheckGroup::SchurPfaffian,
            CheckGroup::VevMatch,
            CheckGroup::DetFormula,
            CheckGroup::PfFormula,
            CheckGroup::ProductFormula,
            CheckGroup::Supercommutativity,
            CheckGroup::Heisenberg,
            CheckGroup::Character,
            CheckGroup::OpeResidues,
            CheckGroup::Hopf,
            CheckGroup::Vacuum,
            CheckGroup::Kernel,
        ]
        .iter()
        .flat_map(|g| g.members())
        .collect();
        covered.sort();
        assert_eq!(covered, CheckGroup::All.members());
    }
}
