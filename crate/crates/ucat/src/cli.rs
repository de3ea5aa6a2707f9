//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use ucat_core::{
    chromatic_p_expansion, irreducible_factorization, l_class_bruteforce, l_polynomial,
    normalize_triple, phi, psi, sym_class, u_polynomial_tree, u_restricted, Composition,
    PartitionPolynomial, Tree, WitnessData,
};

use crate::edgelist::{parse_tree, render_edge_list};
use crate::json::polynomial_to_json;
use crate::verify::{admit, run_check, Check, VerifyConfig, DEFAULT_SEED};

/// Exit status for user-input errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a verification check reports failures.
pub const EXIT_CHECK_FAILED: i32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "ucat",
    version,
    about = "Compositions, caterpillars and U-polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for `verify`.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct TreeSource {
    /// Edge-list file.
    #[arg(long)]
    tree: Option<PathBuf>,
    /// Composition; the tree is its caterpillar.
    #[arg(long)]
    composition: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// L-polynomial of a composition.
    Lpoly { composition: String },
    /// U-polynomial of a tree.
    Upoly {
        #[command(flatten)]
        source: TreeSource,
        /// Print the power-sum expansion of the chromatic symmetric function instead.
        #[arg(long)]
        power_sum: bool,
    },
    /// U^L-polynomial of a caterpillar.
    Ulpoly {
        #[command(flatten)]
        source: TreeSource,
    },
    /// Irreducible ∘-factorization.
    Factor { composition: String },
    /// Symmetry class (reverse any irreducible factors).
    Sym { composition: String },
    /// L-class: compositions with the same L-polynomial.
    Lclass {
        composition: String,
        /// Scan every composition of the same size instead of using the symmetry class.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Composition of a proper caterpillar.
    Phi {
        #[arg(long)]
        tree: PathBuf,
    },
    /// Caterpillar of a composition, as an edge list.
    Psi { composition: String },
    /// Separating coefficient for the caterpillars of α∘γ and β∘γ.
    Witness {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        /// Require an already-normalized triple.
        #[arg(long)]
        no_normalize: bool,
    },
    /// Run a verification check.
    Verify {
        /// One of the check names, e.g. main-result.
        check: String,
        #[arg(long)]
        n: Option<u32>,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Raise the cap on n (also settable through UCAT_MAX_N).
        #[arg(long)]
        max_n: Option<u32>,
        /// Print elapsed time to the error stream.
        #[arg(long)]
        timing: bool,
    },
}

struct UserError(String);

impl<E: std::fmt::Display> From<E> for UserError {
    fn from(e: E) -> Self {
        UserError(e.to_string())
    }
}

fn composition(s: &str) -> Result<Composition, UserError> {
    s.parse::<Composition>()
        .map_err(|e| UserError(format!("invalid composition {s:?}: {e}")))
}

fn read_tree(path: &PathBuf) -> Result<Tree, UserError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| UserError(format!("{}: {e}", path.display())))?;
    parse_tree(&text).map_err(|e| UserError(format!("{}: {e}", path.display())))
}

fn source_tree(source: &TreeSource) -> Result<Tree, UserError> {
    match (&source.tree, &source.composition) {
        (Some(path), _) => read_tree(path),
        (None, Some(c)) => Ok(psi(&composition(c)?)?),
        (None, None) => Err(UserError(
            "one of --tree or --composition is required".into(),
        )),
    }
}

fn parts_json(c: &Composition) -> serde_json::Value {
    json!(c.parts())
}

fn poly_output(poly: &PartitionPolynomial, format: Format) -> String {
    match format {
        Format::Text => poly.canonical_string(),
        Format::Json => polynomial_to_json(poly),
    }
}

fn class_output(
    input: &Composition,
    class: &std::collections::BTreeSet<Composition>,
    format: Format,
) -> String {
    match format {
        Format::Text => class
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => json!({
            "input": parts_json(input),
            "class": class.iter().map(parts_json).collect::<Vec<_>>(),
        })
        .to_string(),
    }
}

fn witness_output(w: &WitnessData, format: Format) -> String {
    match format {
        Format::Text => [
            format!("alpha: {}", w.alpha),
            format!("beta: {}", w.beta),
            format!("gamma: {}", w.gamma),
            format!("k_ab: {}", w.k_ab),
            format!("k_g: {}", w.k_g),
            format!("a: {}", w.a),
            format!("b: {}", w.b),
            format!("delta1: {}", w.delta1),
            format!("delta2: {}", w.delta2),
            format!("lambda: {}", w.lambda_witness),
            format!("rho1: {}", w.rho1),
            format!("rho2: {}", w.rho2),
            format!("coeff_s: {}", w.coeff_s),
            format!("coeff_t: {}", w.coeff_t),
        ]
        .join("\n"),
        Format::Json => json!({
            "alpha": parts_json(&w.alpha),
            "beta": parts_json(&w.beta),
            "gamma": parts_json(&w.gamma),
            "k_ab": w.k_ab,
            "k_g": w.k_g,
            "a": w.a,
            "b": w.b,
            "delta1": w.delta1,
            "delta2": w.delta2,
            "lambda": w.lambda_witness.parts(),
            "rho1": parts_json(&w.rho1),
            "rho2": parts_json(&w.rho2),
            "coeff_s": w.coeff_s,
            "coeff_t": w.coeff_t,
        })
        .to_string(),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, UserError> {
    let format = cli.format;
    let text = match &cli.command {
        Command::Lpoly { composition: c } => poly_output(&l_polynomial(&composition(c)?), format),
        Command::Upoly { source, power_sum } => {
            let t = source_tree(source)?;
            let poly = if *power_sum {
                chromatic_p_expansion(&t)
            } else {
                u_polynomial_tree(&t)
            };
            poly_output(&poly, format)
        }
        Command::Ulpoly { source } => poly_output(&u_restricted(&source_tree(source)?)?, format),
        Command::Factor { composition: c } => {
            let beta = composition(c)?;
            let f = irreducible_factorization(&beta);
            match format {
                Format::Text => f.to_string(),
                Format::Json => json!({
                    "input": parts_json(&beta),
                    "factors": f.factors().iter().map(parts_json).collect::<Vec<_>>(),
                })
                .to_string(),
            }
        }
        Command::Sym { composition: c } => {
            let beta = composition(c)?;
            class_output(&beta, &sym_class(&beta), format)
        }
        Command::Lclass {
            composition: c,
            exhaustive,
        } => {
            let beta = composition(c)?;
            let class = if *exhaustive {
                l_class_bruteforce(&beta)
            } else {
                sym_class(&beta)
            };
            class_output(&beta, &class, format)
        }
        Command::Phi { tree } => {
            let beta = phi(&read_tree(tree)?)?;
            match format {
                Format::Text => beta.to_string(),
                Format::Json => json!({ "composition": parts_json(&beta) }).to_string(),
            }
        }
        Command::Psi { composition: c } => {
            let t = psi(&composition(c)?)?;
            match format {
                Format::Text => render_edge_list(&t).trim_end().to_string(),
                Format::Json => json!({ "n": t.vertex_count(), "edges": t.edges() }).to_string(),
            }
        }
        Command::Witness {
            alpha,
            beta,
            gamma,
            no_normalize,
        } => {
            let (mut a, mut b, mut g) =
                (composition(alpha)?, composition(beta)?, composition(gamma)?);
            if !no_normalize {
                (a, b, g) = normalize_triple(&a, &b, &g);
            }
            witness_output(&ucat_core::witness_theorem(&a, &b, &g)?, format)
        }
        Command::Verify {
            check,
            n,
            seed,
            max_n,
            timing,
        } => {
            let check: Check = check.parse()?;
            let n = n.unwrap_or(check.default_cap());
            if let Some(warning) = admit(check, n, *max_n)? {
                writeln!(err, "warning: {warning}")?;
            }
            let config = VerifyConfig {
                jobs: cli.jobs as usize,
                seed: *seed,
                cap_override: *max_n,
            };
            let report = run_check(check, n, &config)?;
            let body = match format {
                Format::Text => report.text().trim_end().to_string(),
                Format::Json => report.json(),
            };
            writeln!(out, "{body}")?;
            if *timing {
                writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64())?;
            }
            return Ok(if report.passed() {
                0
            } else {
                EXIT_CHECK_FAILED
            });
        }
    };
    writeln!(out, "{text}")?;
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(UserError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
