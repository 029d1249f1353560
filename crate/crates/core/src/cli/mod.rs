//! Command-line front end.
//!
//! [`run`] parses arguments, executes one verb and returns the exit status
//! together with everything that would be written to stdout and stderr, so
//! the binary is a thin wrapper and tests can drive the CLI in-process.
//!
//! Exit statuses: 0 on success, 1 on usage and domain errors, 2 when a
//! verification suite finds a counterexample.

pub mod expr;
pub mod json;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::grothendieck::TwoTermComplex;
use crate::oracle;
use crate::partitions::Partition;
use crate::plethysm::PlethoryBounds;
use crate::rational::{parse_q, render_q, Q};
use crate::symfunc::{BasisTag, Lambda, SymFunc};

pub use expr::{parse_expression, parse_tensor};

/// Environment variable holding the default degree cap.
pub const CAP_ENV: &str = "PLETHORY_CAP";

#[derive(Debug, Parser)]
#[command(name = "plethory", version, about = "Exact symmetric functions, plethysm and Schur functor checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Basis for symmetric-function results (m, e, h, p or s).
    #[arg(long, global = true, default_value = "s")]
    pub basis: BasisTag,

    /// Maximum degree of any intermediate symmetric function.
    #[arg(long, global = true, env = CAP_ENV, default_value_t = Lambda::DEFAULT_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoprodKind {
    Add,
    Mul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Birig,
    Plethory,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite an expression in the output basis.
    Convert { expr: String },
    /// Sum of two expressions.
    Add { f: String, g: String },
    /// Product of two expressions.
    Mul { f: String, g: String },
    /// Plethysm f•g.
    Plethysm { f: String, g: String },
    /// Adams operation ψⁿ(f).
    Adams { n: usize, f: String },
    /// Coaddition (`add`) or comultiplication (`mul`) of an expression.
    Coprod {
        #[arg(long, value_enum)]
        kind: CoprodKind,
        expr: String,
    },
    /// Antipode p_n ↦ -p_n.
    Antipode { expr: String },
    /// Evaluate at `--dim` equal variables, optionally with `--odd-dim` odd
    /// ones, or at explicit power-sum values `--phi v1,v2,...`.
    Eval {
        expr: String,
        #[arg(long, conflicts_with = "phi", required_unless_present = "phi")]
        dim: Option<usize>,
        #[arg(long, requires = "dim")]
        odd_dim: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phi: Option<Vec<String>>,
    },
    /// Character table of Sₙ.
    Char {
        #[arg(long)]
        n: usize,
    },
    /// Littlewood–Richardson coefficient c^λ_{μν}.
    Lr { mu: Partition, nu: Partition, lambda: Partition },
    /// Kronecker coefficient g(a, b, c).
    Kronecker { a: Partition, b: Partition, c: Partition },
    /// Rank of the Young symmetrizer on tensor space beside the hook-content value.
    SchurDim {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        dim: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Defaults to 8 for birig and 6 for plethory.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Homology and Euler characteristic of a two-term complex in JSON
    /// (a file path, or `-` for standard input).
    Homology { input: String },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { status: 0, stdout, stderr: String::new() }
    }

    fn error(status: i32, stderr: String) -> Self {
        Output { status, stdout: String::new(), stderr }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Standard input is read only by `homology -`.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Output::error(1, rendered)
            } else {
                Output::ok(rendered)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Output::error(1, format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let lambda = Lambda::with_cap(cli.cap);
    let ctx = Ctx { lambda, format: cli.format, basis: cli.basis };
    let parse = |src: &str| parse_expression(src, &lambda);
    match &cli.command {
        Command::Convert { expr } => ctx.symfunc(&parse(expr)?),
        Command::Add { f, g } => ctx.symfunc(&lambda.add(&parse(f)?, &parse(g)?)?),
        Command::Mul { f, g } => ctx.symfunc(&lambda.mul(&parse(f)?, &parse(g)?)?),
        Command::Plethysm { f, g } => ctx.symfunc(&lambda.plethysm(&parse(f)?, &parse(g)?)?),
        Command::Adams { n, f } => ctx.symfunc(&lambda.adams(*n, &parse(f)?)?),
        Command::Antipode { expr } => ctx.symfunc(&lambda.antipode(&parse(expr)?)?),
        Command::Coprod { kind, expr } => {
            let f = parse(expr)?;
            let t = match kind {
                CoprodKind::Add => lambda.coaddition(&f)?,
                CoprodKind::Mul => lambda.comultiplication(&f)?,
            };
            let t = lambda.tensor_to_basis(&t, (ctx.basis, ctx.basis))?;
            Ok(ctx.render(t.to_string(), &json::tensor_to_json(&t)))
        }
        Command::Eval { expr, dim, odd_dim, phi } => {
            let f = parse(expr)?;
            let value = match (dim, phi) {
                (Some(d), _) => eval_dimension(&lambda, &f, *d, odd_dim.unwrap_or(0))?,
                (None, Some(values)) => {
                    let values = values.iter().map(|v| parse_q(v.trim())).collect::<Result<Vec<Q>>>()?;
                    lambda.eval_adams(&f, |n| values.get(n - 1).cloned())?
                }
                (None, None) => return Err(Error::Domain("eval needs --dim or --phi".into())),
            };
            Ok(ctx.scalar(&value))
        }
        Command::Char { n } => {
            let table = lambda.char_table(*n)?;
            Ok(ctx.render(render_char_table(&table), &json::char_table_to_json(&table)))
        }
        Command::Lr { mu, nu, lambda: shape } => {
            let c = lambda.lr_coeff(mu, nu, shape)?;
            Ok(ctx.scalar(&Q::from_integer(c.into())))
        }
        Command::Kronecker { a, b, c } => {
            let g = lambda.kronecker_coeff(a, b, c)?;
            Ok(ctx.scalar(&Q::from_integer(g.into())))
        }
        Command::SchurDim { shape, dim } => {
            let rank = oracle::schur_image_dim(shape, *dim)?;
            let hook = lambda.eval_principal(&SymFunc::basis_element(BasisTag::S, shape.clone()), *dim)?;
            let text = format!("rank {rank}  hook-content {}", render_q(&hook));
            let j = json::SchurDimJson {
                shape: shape.clone(),
                dim: *dim,
                rank,
                hook_content: render_q(&hook),
            };
            Ok(ctx.render(text, &j))
        }
        Command::Verify { suite, max_degree } => {
            let report = match suite {
                Suite::Birig => lambda.verify_birig_axioms(max_degree.unwrap_or(8))?,
                Suite::Plethory => {
                    let d = max_degree.unwrap_or(6);
                    lambda.verify_plethory_with(PlethoryBounds {
                        generator_degree: d,
                        composite_degree: d,
                    })?
                }
            };
            let mut out = ctx.render(report.to_string(), &report);
            if !report.passed() {
                out.status = 2;
            }
            Ok(out)
        }
        Command::Homology { input } => {
            let src = if input == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(input)
            }
            .map_err(|e| Error::Domain(format!("cannot read {input}: {e}")))?;
            let complex = TwoTermComplex::from_json(&src)?;
            let (h0, h1) = complex.homology()?;
            let euler = lambda.euler_char(&complex)?;
            let (h0, h1) = (ctx.convert(&h0.to_symfunc())?, ctx.convert(&h1.to_symfunc())?);
            let euler = ctx.convert(&euler)?;
            let text = format!("H0 = {h0}\nH1 = {h1}\neuler = {euler}");
            let j = json::HomologyJson {
                h0: json::symfunc_to_json(&h0),
                h1: json::symfunc_to_json(&h1),
                euler: json::symfunc_to_json(&euler),
            };
            Ok(ctx.render(text, &j))
        }
    }
}

/// `f` on a super space of dimension `(d0|d1)`: `p_n ↦ d0 - (-1)^n d1`.
fn eval_dimension(lambda: &Lambda, f: &SymFunc, d0: usize, d1: usize) -> Result<Q> {
    if d1 == 0 {
        return lambda.eval_principal(f, d0);
    }
    let (d0, d1) = (d0 as i64, d1 as i64);
    lambda.eval_adams(f, |n| {
        let odd = if n % 2 == 0 { -d1 } else { d1 };
        Some(Q::from_integer((d0 + odd).into()))
    })
}

fn render_char_table(table: &CharacterTable) -> String {
    let labels: Vec<String> = table.partitions().iter().map(|p| p.to_string()).collect();
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    let cells: Vec<Vec<String>> = table
        .values()
        .iter()
        .map(|row| row.iter().map(i64::to_string).collect())
        .collect();
    let col_width = cells
        .iter()
        .flatten()
        .chain(labels.iter())
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:label_width$}", "");
    for l in &labels {
        let _ = write!(out, " {l:>col_width$}");
    }
    for (label, row) in labels.iter().zip(&cells) {
        let _ = write!(out, "\n{label:<label_width$}");
        for v in row {
            let _ = write!(out, " {v:>col_width$}");
        }
    }
    out
}

struct Ctx {
    lambda: Lambda,
    format: Format,
    basis: BasisTag,
}

impl Ctx {
    fn convert(&self, f: &SymFunc) -> Result<SymFunc> {
        self.lambda.to_basis(f, self.basis)
    }

    fn render<T: serde::Serialize>(&self, text: String, value: &T) -> Output {
        match self.format {
            Format::Text => Output::ok(text + "\n"),
            Format::Json => Output::ok(json::to_string(value) + "\n"),
        }
    }

    fn symfunc(&self, f: &SymFunc) -> Result<Output> {
        let f = self.convert(f)?;
        Ok(self.render(f.to_string(), &json::symfunc_to_json(&f)))
    }

    fn scalar(&self, x: &Q) -> Output {
        self.render(render_q(x), &json::scalar_to_json(x))
    }
}
