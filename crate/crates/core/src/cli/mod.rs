//! The `adrlab` command-line front end.
//!
//! Every analysis subcommand reads a presentation (a file path, or standard
//! input when the path is absent or `-`) and prints a JSON report with sorted
//! keys. Exit codes: 0 when every verdict passes, 1 when one fails, 2 for
//! unreadable or invalid input, 3 for internal errors.

mod dot;

use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use dot::emit_dot;

use crate::adr::{adr_algebra, AdrData};
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;
use crate::modrep::global_dimension;
use crate::presentation::{generators, AlgebraBasis, AlgebraPresentation};
use crate::qh::{verify_structure_theorems, LabelPoset, QhContext, VerifyOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "adrlab",
    version,
    about = "ADR algebras and quasihereditary structures, computed exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the ADR algebra of the input and print its presentation.
    Adr {
        #[command(flatten)]
        input: InputArgs,
        /// Print the quiver of the ADR algebra in DOT format instead.
        #[arg(long)]
        dot: bool,
    },
    /// Check that the order makes the algebra quasihereditary.
    QhCheck {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
        /// Random linear extensions used to test stability of the standard modules.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Check the two ultra-strong conditions and relabel by chains.
    UsqCheck {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Build the indecomposable tilting modules and, for USQ algebras, their chains.
    Tilting {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Compute the Ringel dual and check that it is quasihereditary.
    RingelDual {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
        /// Print the quiver of the Ringel dual in DOT format instead.
        #[arg(long)]
        dot: bool,
    },
    /// Global dimension, by syzygies of the simple modules.
    Gldim {
        #[command(flatten)]
        input: InputArgs,
        /// Which algebra to measure; defaults to the ADR algebra.
        #[arg(long, value_enum, default_value_t = Target::Adr)]
        target: Target,
        /// Give up after this many syzygies; defaults to the algebra's dimension.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Run the full structure-theorem suite.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, default_value_t = 50)]
        modules: usize,
        #[arg(long, default_value_t = 50)]
        submodules: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Skip the Ringel dual items.
        #[arg(long)]
        no_ringel: bool,
        /// A presentation whose quiver the Ringel dual must have.
        #[arg(long)]
        expect_ringel: Option<PathBuf>,
    },
    /// Print a presentation of a standard family.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        field: Option<FieldSpec>,
        /// Print the quiver in DOT format instead.
        #[arg(long, global = true)]
        dot: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Brauer tree algebra of a line with n edges and no exceptional vertex (n >= 3).
    Brauer {
        #[arg(short = 'n', default_value_t = 3)]
        n: usize,
    },
    /// Path algebra of the linear quiver n -> ... -> 2 -> 1.
    Linear {
        #[arg(short = 'n', default_value_t = 3)]
        n: usize,
    },
    /// Path algebra of the star 2 <- 1 -> 3.
    Star,
    /// The expected ADR algebra of the Brauer tree algebra with n edges.
    BrauerAdr {
        #[arg(short = 'n', default_value_t = 3)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Presentation file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    /// Reinterpret the coefficients over this field (`rational` or `p:5`).
    #[arg(long)]
    pub field: Option<FieldSpec>,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// `adr`, `natural`, `reverse`, or relations such as `1<2,1<3`.
    #[arg(long, default_value = "adr")]
    pub order: String,
    /// Which algebra to study; `adr` unless an order other than `adr` is given.
    #[arg(long, value_enum)]
    pub target: Option<Target>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// The ADR algebra of the input.
    Adr,
    /// The input algebra itself.
    Input,
}

/// What a run prints and how it exits.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidPresentation(_)
        | Error::PossiblyInfiniteDimensional(_)
        | Error::InvalidArgument(_)
        | Error::Io(_) => EXIT_INPUT,
        _ => EXIT_INTERNAL,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            Outcome {
                stdout,
                stderr,
                code,
            }
        }
    }
}

/// Runs the process's command line against its standard input and streams,
/// returning the exit code.
pub fn run_from_env() -> i32 {
    let out = execute(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn run(cli: Cli, stdin: &mut dyn Read) -> Outcome {
    match dispatch(cli.command, stdin) {
        Ok((text, passed)) => Outcome {
            stdout: text,
            stderr: String::new(),
            code: if passed { EXIT_PASS } else { EXIT_FAIL },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("adrlab: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn render(mut v: Value, passed: bool) -> (String, bool) {
    if let Value::Object(map) = &mut v {
        map.insert("passed".into(), Value::Bool(passed));
    }
    let mut text = serde_json::to_string_pretty(&v).expect("reports serialize");
    text.push('\n');
    (text, passed)
}

fn read_input(args: &InputArgs, stdin: &mut dyn Read) -> Result<AlgebraPresentation> {
    let text = match args.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    let p = AlgebraPresentation::from_json(&text)?;
    match args.field {
        Some(f) if f != p.field() => p.over_field(f),
        _ => Ok(p),
    }
}

/// Parses vertex labels of the form `(i,j)`.
fn adr_labels(labels: &[String]) -> Result<Vec<(usize, usize)>> {
    labels
        .iter()
        .map(|l| {
            l.strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.split_once(','))
                .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "vertex `{l}` is not of the form (i,j), so the order `adr` does not apply"
                    ))
                })
        })
        .collect()
}

struct Subject {
    ctx: QhContext,
    adr: Option<AdrData>,
    target: Target,
}

fn subject(p: &AlgebraPresentation, order: &OrderArgs) -> Result<Subject> {
    let is_adr_order = order.order.trim() == "adr";
    let target = order.target.unwrap_or(if is_adr_order {
        Target::Adr
    } else {
        Target::Input
    });
    match target {
        Target::Adr => {
            if !is_adr_order {
                return Err(Error::InvalidArgument(
                    "the ADR algebra carries the order `adr`; use --target input for other orders"
                        .into(),
                ));
            }
            let adr = adr_algebra(p)?;
            let ctx = QhContext::for_adr(&adr)?;
            Ok(Subject {
                ctx,
                adr: Some(adr),
                target,
            })
        }
        Target::Input => {
            let basis = p.clone().into_basis()?;
            let labels = basis.quiver().vertices().to_vec();
            let poset = if is_adr_order {
                LabelPoset::adr(&adr_labels(&labels)?)
            } else {
                LabelPoset::parse(&order.order, &labels)?
            };
            Ok(Subject {
                ctx: QhContext::new(basis, poset)?,
                adr: None,
                target,
            })
        }
    }
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Adr => "adr",
        Target::Input => "input",
    }
}

fn algebra_summary(a: &Arc<AlgebraBasis>) -> Value {
    json!({
        "dim": a.dim(),
        "vertices": a.quiver().vertices(),
        "arrow_count": a.quiver().arrows().len(),
        "loewy_length": a.loewy_length(),
        "field": a.field().to_string(),
    })
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<(String, bool)> {
    match command {
        Command::Gen { family, field, dot } => {
            let field = field.unwrap_or(FieldSpec::Rational);
            let p = match family {
                Family::Brauer { n } => generators::brauer_tree(n, field)?,
                Family::Linear { n } => generators::linear(n, field)?,
                Family::Star => generators::star(field)?,
                Family::BrauerAdr { n } => generators::brauer_adr_quiver(n, field)?,
            };
            let mut text = if dot {
                emit_dot(p.quiver())
            } else {
                p.to_json()
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Ok((text, true))
        }
        Command::Adr { input, dot } => {
            let p = read_input(&input, stdin)?;
            let adr = adr_algebra(&p)?;
            if dot {
                return Ok((emit_dot(adr.quiver()), true));
            }
            let corner = adr.corner()?;
            let r = adr.basis();
            let v = json!({
                "algebra": algebra_summary(adr.algebra()),
                "adr": {
                    "dim": r.dim(),
                    "vertex_count": r.vertex_count(),
                    "arrow_count": r.quiver().arrows().len(),
                    "loewy_length": r.loewy_length(),
                    "loewy_lengths": adr.loewy_lengths(),
                    "presentation": adr.presentation().to_json_value(),
                },
                "corner": to_value(&corner),
            });
            Ok(render(v, corner.matches))
        }
        Command::QhCheck {
            input,
            order,
            samples,
            seed,
        } => {
            let p = read_input(&input, stdin)?;
            let s = subject(&p, &order)?;
            let report = s.ctx.check_quasihereditary(samples, seed)?;
            let v = json!({
                "target": target_name(s.target),
                "algebra": algebra_summary(s.ctx.algebra()),
                "order": order_pairs(&s.ctx),
                "report": to_value(&report),
            });
            Ok(render(v, report.passed))
        }
        Command::UsqCheck { input, order } => {
            let p = read_input(&input, stdin)?;
            let s = subject(&p, &order)?;
            let qh = s.ctx.check_quasihereditary(0, 0)?;
            let usq = s.ctx.check_usq()?;
            let passed = qh.passed && usq.passed;
            let relabel = if passed {
                Some(to_value(&s.ctx.usq_relabel()?))
            } else {
                None
            };
            let v = json!({
                "target": target_name(s.target),
                "algebra": algebra_summary(s.ctx.algebra()),
                "order": order_pairs(&s.ctx),
                "quasihereditary": qh.passed,
                "report": to_value(&usq),
                "relabel": relabel,
            });
            Ok(render(v, passed))
        }
        Command::Tilting { input, order } => {
            let p = read_input(&input, stdin)?;
            let s = subject(&p, &order)?;
            let ctx = &s.ctx;
            let mut modules = Vec::new();
            for i in 0..ctx.label_count() {
                let t = ctx.tilting(i)?;
                let factors = |r: crate::qh::FiltrationReport| -> Vec<(String, usize)> {
                    r.factors
                        .iter()
                        .map(|&(l, m)| (ctx.label(l).to_string(), m))
                        .collect()
                };
                modules.push(json!({
                    "label": ctx.label(i),
                    "dims": t.dims(),
                    "delta_factors": factors(ctx.delta_filtration(t)?),
                    "nabla_factors": factors(ctx.nabla_filtration(t)?),
                }));
            }
            let usq = ctx.check_usq()?.passed;
            let mut chains = Vec::new();
            let mut passed = true;
            if usq {
                for chain in ctx.usq_relabel()?.chains {
                    let tc = ctx.tilting_chain(&chain)?;
                    passed &= tc.passed();
                    chains.push(to_value(&tc));
                }
            }
            let v = json!({
                "target": target_name(s.target),
                "algebra": algebra_summary(ctx.algebra()),
                "tilting": modules,
                "usq": usq,
                "chains": chains,
            });
            Ok(render(v, passed))
        }
        Command::RingelDual { input, order, dot } => {
            let p = read_input(&input, stdin)?;
            let s = subject(&p, &order)?;
            let dual = s.ctx.ringel_dual()?;
            if dot {
                return Ok((emit_dot(dual.endo.presentation().quiver()), true));
            }
            let qh = dual.context.check_quasihereditary(0, 0)?;
            let v = json!({
                "target": target_name(s.target),
                "algebra": algebra_summary(s.ctx.algebra()),
                "dual": {
                    "dim": dual.endo.dim(),
                    "vertex_count": dual.endo.basis().vertex_count(),
                    "arrow_count": dual.endo.basis().quiver().arrows().len(),
                    "presentation": dual.endo.presentation().to_json_value(),
                    "order": order_pairs(&dual.context),
                },
                "quasihereditary": to_value(&qh),
            });
            Ok(render(v, qh.passed))
        }
        Command::Gldim {
            input,
            target,
            bound,
        } => {
            let p = read_input(&input, stdin)?;
            let algebra = match target {
                Target::Adr => adr_algebra(&p)?.basis().clone(),
                Target::Input => p.into_basis()?,
            };
            let bound = bound.unwrap_or(algebra.dim());
            let (value, passed) = match global_dimension(&algebra, bound) {
                Ok(d) => (json!(d), true),
                Err(Error::PossiblyInfiniteGlobalDimension(_)) => (Value::Null, false),
                Err(e) => return Err(e),
            };
            let v = json!({
                "target": target_name(target),
                "algebra": algebra_summary(&algebra),
                "bound": bound,
                "global_dimension": value,
            });
            Ok(render(v, passed))
        }
        Command::Verify {
            input,
            order,
            modules,
            submodules,
            seed,
            no_ringel,
            expect_ringel,
        } => {
            let p = read_input(&input, stdin)?;
            let s = subject(&p, &order)?;
            let expected_ringel_quiver = match expect_ringel {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    Some(AlgebraPresentation::from_json(&text)?.quiver().clone())
                }
                None => None,
            };
            let opts = VerifyOptions {
                random_modules: modules,
                random_submodules: submodules,
                seed,
                ringel: !no_ringel,
                expected_ringel_quiver,
            };
            let qh = s.ctx.check_quasihereditary(0, seed)?;
            let usq = s.ctx.check_usq()?;
            let theorems = if qh.passed && usq.passed {
                Some(verify_structure_theorems(&s.ctx, s.adr.as_ref(), &opts)?)
            } else {
                None
            };
            let passed = qh.passed && usq.passed && theorems.as_ref().is_some_and(|t| t.passed);
            let v = json!({
                "target": target_name(s.target),
                "algebra": algebra_summary(s.ctx.algebra()),
                "quasihereditary": to_value(&qh),
                "usq": to_value(&usq),
                "theorems": theorems.as_ref().map(to_value),
            });
            Ok(render(v, passed))
        }
    }
}

fn order_pairs(ctx: &QhContext) -> Vec<(String, String)> {
    ctx.poset()
        .pairs()
        .into_iter()
        .map(|(a, b)| (ctx.label(a).to_string(), ctx.label(b).to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_INPUT);
        assert_eq!(
            exit_code(&Error::InvalidPresentation(vec!["x".into()])),
            EXIT_INPUT
        );
        assert_eq!(
            exit_code(&Error::PossiblyInfiniteDimensional(32)),
            EXIT_INPUT
        );
        assert_eq!(exit_code(&Error::Internal("x".into())), EXIT_INTERNAL);
        assert_eq!(exit_code(&Error::NonSplit("x".into())), EXIT_INTERNAL);
        assert_eq!(exit_code(&Error::Inconclusive("x".into())), EXIT_INTERNAL);
    }

    #[test]
    fn adr_labels_parse() {
        let labels = ["(1,2)".to_string(), "(10, 3)".to_string()];
        assert_eq!(adr_labels(&labels).unwrap(), vec![(1, 2), (10, 3)]);
        assert!(adr_labels(&["x".to_string()]).is_err());
    }

    #[test]
    fn adr_target_rejects_other_orders() {
        let order = OrderArgs {
            order: "natural".into(),
            target: Some(Target::Adr),
        };
        let p = generators::linear(2, FieldSpec::Rational).unwrap();
        assert!(matches!(
            subject(&p, &order),
            Err(Error::InvalidArgument(_))
        ));
    }
}
