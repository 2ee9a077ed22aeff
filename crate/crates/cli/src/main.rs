use std::fs;
use std::io::{self as stdio, ErrorKind, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dcliff::claims::{self, Grid};
use dcliff::decompose::Decomposition;
use dcliff::io::{self, print_polynomial};
use dcliff::operators::DifferenceOperator;
use dcliff::quaternion_dirac as qd;
use dcliff::rational::{self, Rational};
use dcliff::{factorial, fischer, Blade, FamilySign, LatticePolynomial, Strategy};

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "dcliff", version, about = "Exact discrete Clifford analysis on the lattice h·Z^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Lattice {
    /// Dimension of the lattice.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Mesh width as a rational, e.g. 1/2.
    #[arg(long, default_value = "1")]
    h: String,
    /// Factorial family: `-` (falling) or `+` (rising).
    #[arg(long, default_value = "-", allow_hyphen_values = true)]
    family: String,
}

impl Lattice {
    fn parse(&self) -> Result<(usize, Rational, FamilySign)> {
        if self.n == 0 {
            bail!("--n must be at least 1");
        }
        let h = rational::parse_rational(&self.h).with_context(|| format!("bad --h `{}`", self.h))?;
        if h <= Rational::from_integer(0.into()) {
            bail!("--h must be positive, got {h}");
        }
        Ok((self.n, h, FamilySign::parse(&self.family)?))
    }
}

#[derive(Args, Clone)]
struct Input {
    /// Polynomial in the text grammar, e.g. "1/2 X1^(1) e1 + X2^(2) e12".
    #[arg(long, conflicts_with = "input")]
    expr: Option<String>,
    /// File holding a text expression or a JSON polynomial (which carries its own n, h and family).
    #[arg(long)]
    input: Option<PathBuf>,
}

impl Input {
    fn read(&self, lattice: &Lattice) -> Result<LatticePolynomial> {
        let text = match (&self.expr, &self.input) {
            (Some(e), _) => e.clone(),
            (None, Some(path)) => {
                fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
            }
            (None, None) => bail!("pass a polynomial with --expr or --input"),
        };
        if text.trim_start().starts_with('{') {
            return Ok(io::polynomial_from_json(&text)?);
        }
        let (n, h, family) = lattice.parse()?;
        Ok(io::parse_polynomial(&text, n, &h, family)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelKind {
    Monogenic,
    Harmonic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Factorial,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a difference operator, e.g. `dh+`, `euler-`, `R+:3/2`, `lap`, `D-+`, `dh+.mh`.
    Apply {
        #[command(flatten)]
        lattice: Lattice,
        #[command(flatten)]
        input: Input,
        #[arg(long = "op")]
        op: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Fischer decomposition for the matched difference Dirac operator.
    Decompose {
        #[command(flatten)]
        lattice: Lattice,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decomposition into harmonic pieces times powers of |mh|^2.
    Harmonic {
        #[command(flatten)]
        lattice: Lattice,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Basis of the monogenic or harmonic polynomials of one degree.
    Kernel {
        #[command(flatten)]
        lattice: Lattice,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = KernelKind::Monogenic)]
        kind: KernelKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the claim registry; exits nonzero iff an expected-exact claim fails.
    Verify {
        /// Comma-separated id globs, e.g. "Eq4*,P?".
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per grid cell.
        #[arg(long)]
        cases: Option<usize>,
        /// Dimensions, e.g. "1,2".
        #[arg(long)]
        dims: Option<String>,
        /// Degrees, e.g. "0,1,2".
        #[arg(long)]
        degrees: Option<String>,
        /// Mesh widths, e.g. "1,1/2".
        #[arg(long)]
        meshes: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a single power in the other basis.
    Convert {
        #[command(flatten)]
        lattice: Lattice,
        /// Multi-index, e.g. "2,1".
        #[arg(long)]
        alpha: String,
        /// Basis to expand into: `factorial` takes x^alpha, `monomial` takes (mh)^(alpha).
        #[arg(long, value_enum)]
        to: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate at a point given in real coordinates, e.g. --at "1,1/2".
    Eval {
        #[command(flatten)]
        lattice: Lattice,
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Result of a command: what to print and the exit status.
struct Output {
    text: String,
    json: Value,
    success: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, success: true }
    }
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(head), Value::Object(rest)) = (&mut v, body) {
        head.extend(rest);
    }
    v
}

fn decomposition_text(d: &Decomposition) -> String {
    let mut out = format!("strategy: {}\nfeasible: {}\n", json!(d.strategy).as_str().unwrap_or("?"), d.feasible);
    for c in &d.components {
        out += &format!("component s={} degree={}: {}\n", c.power, c.degree, print_polynomial(&c.polynomial));
    }
    out += &format!("residual: {}\n", print_polynomial(&d.residual));
    if let Some(e) = d.exact_feasible {
        out += &format!("exact strategy feasible: {e}\n");
    }
    for line in &d.diagnostics {
        out += &format!("note: {line}\n");
    }
    out
}

fn basis_output(command: &str, kind: &str, degree: usize, elements: &[LatticePolynomial]) -> Output {
    let mut text = format!("{kind} kernel, degree {degree}, dimension {}\n", elements.len());
    for (i, e) in elements.iter().enumerate() {
        text += &format!("[{i}] {}\n", print_polynomial(e));
    }
    let json =
        envelope(command, json!({ "kind": kind, "degree": degree, "dimension": elements.len(), "basis": elements }));
    Output::ok(text, json)
}

fn run(command: Command) -> Result<(Output, Format)> {
    Ok(match command {
        Command::Apply { lattice, input, op, format } => {
            let p = input.read(&lattice)?;
            let operator: DifferenceOperator = op.parse()?;
            let image = operator.apply(&p)?;
            let json = envelope("apply", json!({ "operator": operator.to_string(), "input": p, "output": image }));
            (Output::ok(format!("{}\n", print_polynomial(&image)), json), format)
        }
        Command::Decompose { lattice, input, strategy, format } => {
            let p = input.read(&lattice)?;
            let strategy: Strategy = strategy.parse()?;
            let d = fischer::fischer_decompose(&p, strategy)?;
            let json = envelope("decompose", json!({ "input": p, "result": d }));
            (Output::ok(decomposition_text(&d), json), format)
        }
        Command::Harmonic { lattice, input, strategy, format } => {
            let p = input.read(&lattice)?;
            let strategy: Strategy = strategy.parse()?;
            let d = qd::harmonic_fischer_decompose(&p, strategy)?;
            let json = envelope("harmonic", json!({ "input": p, "result": d }));
            (Output::ok(decomposition_text(&d), json), format)
        }
        Command::Kernel { lattice, degree, kind, format } => {
            let (n, h, family) = lattice.parse()?;
            let out = match kind {
                KernelKind::Monogenic => {
                    let b = fischer::monogenic_kernel(degree, n, &h, family, family.matched_sign())?;
                    basis_output("kernel", "monogenic", degree, &b.elements)
                }
                KernelKind::Harmonic => {
                    let (b, _) = qd::harmonic_kernel(degree, n, &h, family, Blade::all(n))?;
                    basis_output("kernel", "harmonic", degree, &b)
                }
            };
            (out, format)
        }
        Command::Verify { filter, seed, cases, dims, degrees, meshes, format } => {
            let mut grid = Grid::default();
            if let Some(c) = cases {
                grid.cases = c;
            }
            if let Some(d) = dims {
                grid.dims = parse_list(&d, |s| Ok(s.parse::<usize>()?))?;
            }
            if let Some(d) = degrees {
                grid.degrees = parse_list(&d, |s| Ok(s.parse::<usize>()?))?;
            }
            if let Some(m) = meshes {
                grid.meshes = parse_list(&m, |s| Ok(rational::parse_rational(s)?))?;
            }
            let report = claims::run_registry(&filter, &grid, seed)?;
            let json: Value = serde_json::from_str(&report.to_json())?;
            (Output { text: report.to_table(), json, success: report.success() }, format)
        }
        Command::Convert { lattice, alpha, to, format } => {
            let (n, h, family) = lattice.parse()?;
            let alpha = io::parse_multi_index(&alpha)?;
            if alpha.dim() != n {
                bail!("multi-index {alpha} has {} entries but --n is {n}", alpha.dim());
            }
            let (map, from, into) = match to {
                Basis::Factorial => (factorial::monomial_to_factorial(&alpha, family, &h)?, "monomial", "factorial"),
                Basis::Monomial => (factorial::factorial_to_monomial(&alpha, family, &h)?, "factorial", "monomial"),
            };
            let mut text = String::new();
            let mut terms = Vec::new();
            for (beta, c) in map.iter().rev() {
                let power = power_text(beta.entries(), to);
                text += &format!("{c:>12}  {power}\n");
                terms.push(json!({ "alpha": beta.entries(), "coeff": c.to_string() }));
            }
            let json = envelope(
                "convert",
                json!({ "n": n, "h": h.to_string(), "family": family.to_string(), "alpha": alpha.entries(),
                        "from": from, "to": into, "terms": terms }),
            );
            (Output::ok(text, json), format)
        }
        Command::Eval { lattice, input, at, format } => {
            let p = input.read(&lattice)?;
            let point = io::parse_point(&at)?;
            let value = p.evaluate(&point)?;
            let json = envelope(
                "eval",
                json!({ "input": p, "at": point.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "value": io::clifford_to_map(&value) }),
            );
            (Output::ok(format!("{value}\n"), json), format)
        }
    })
}

/// `X1^(2) X2^(1)` for factorial powers, `x1^2 x2` for monomials.
fn power_text(alpha: &[u32], basis: Basis) -> String {
    let factors: Vec<String> = alpha
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| match (basis, a) {
            (Basis::Factorial, _) => format!("X{}^({a})", i + 1),
            (Basis::Monomial, 1) => format!("x{}", i + 1),
            (Basis::Monomial, _) => format!("x{}^{a}", i + 1),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" ")
    }
}

fn parse_list<T>(text: &str, item: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    text.split(',').map(|s| item(s.trim()).with_context(|| format!("bad list entry `{s}` in `{text}`"))).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, format)) => {
            let text = match format {
                Format::Text => out.text,
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json values serialize"))
                }
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            if let Err(e) = stdio::stdout().lock().write_all(text.as_bytes()) {
                if e.kind() != ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
