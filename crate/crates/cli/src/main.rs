//! Expression evaluator and Cayley-table printer over one algebra per
//! invocation.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, ValueEnum};

use gaq::expr::{self, Context};
use gaq::{Engine, QuadraticForm, Signature};

#[derive(Parser)]
#[command(
    name = "gaq",
    about = "Exact geometric algebra: evaluate expressions or print product tables",
    group(ArgGroup::new("algebra").required(true).args(["signature", "metric", "preset"]))
)]
struct Args {
    /// Counts of basis vectors squaring to +1, -1, 0, e.g. "3,0,1"
    #[arg(long, value_name = "P,Q,R")]
    signature: Option<String>,

    /// Metric matrix file: {"dim": N, "matrix": [["0", "-1/2"], ...]}
    #[arg(long, value_name = "PATH")]
    metric: Option<PathBuf>,

    /// Named algebra: complex, quaternion, cga2, cga3, pga3, euclid2, euclid3
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,

    /// Expression to evaluate; repeatable, one output line each
    #[arg(long, value_name = "EXPR")]
    eval: Vec<String>,

    /// Print the full blade-by-blade product table
    #[arg(long)]
    table: bool,

    /// Product engine; "fast" needs a diagonal metric
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Oracle,
    Fast,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Fast => Engine::Fast,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

const USER_ERROR: i32 = 1;
const INTERNAL_ERROR: i32 = 2;

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USER_ERROR,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&args) {
        Ok(()) => 0,
        Err((code, message)) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn user_err(message: impl ToString) -> (i32, String) {
    (USER_ERROR, message.to_string())
}

fn parse_signature(text: &str) -> Result<Signature, (i32, String)> {
    let parts: Vec<&str> = text.split(',').collect();
    let counts: Option<Vec<usize>> = parts.iter().map(|p| p.trim().parse().ok()).collect();
    match counts.as_deref() {
        Some([p, q, r]) => Ok(Signature::new(*p, *q, *r)),
        _ => Err(user_err(format!(
            "invalid signature \"{text}\": expected three counts like \"3,0,1\""
        ))),
    }
}

fn build_context(args: &Args) -> Result<Context, (i32, String)> {
    let engine = args.engine.into();
    let ctx = if let Some(sig) = &args.signature {
        Context::from_signature(parse_signature(sig)?, engine).map_err(user_err)?
    } else if let Some(path) = &args.metric {
        let form = QuadraticForm::from_metric_path(path).map_err(user_err)?;
        Context::from_form(form, engine)
    } else if let Some(name) = &args.preset {
        Context::from_preset(name, engine).map_err(user_err)?
    } else {
        unreachable!("clap enforces the algebra group")
    };
    if matches!(engine, Engine::Fast) && !ctx.form().is_diagonal() {
        return Err(user_err(
            "the fast engine requires a diagonal metric; use --engine oracle or --engine auto",
        ));
    }
    Ok(ctx)
}

fn execute(args: &Args) -> Result<(), (i32, String)> {
    let ctx = build_context(args)?;
    if args.eval.is_empty() && !args.table {
        return Err(user_err("nothing to do: pass --eval EXPR or --table"));
    }
    for source in &args.eval {
        let parsed = expr::parse(source).map_err(user_err)?;
        let value = expr::eval(&parsed, &ctx).map_err(eval_err)?;
        match args.format {
            FormatArg::Human => println!("{}", expr::render_human(&value, ctx.names())),
            FormatArg::Json => println!("{}", expr::render_json(&value, ctx.names())),
        }
    }
    if args.table {
        match args.format {
            FormatArg::Human => print!("{}", expr::render_table_human(&ctx).map_err(eval_err)?),
            FormatArg::Json => println!("{}", expr::render_table_json(&ctx).map_err(eval_err)?),
        }
    }
    Ok(())
}

fn eval_err(e: expr::EvalError) -> (i32, String) {
    let code = if e.is_internal() {
        INTERNAL_ERROR
    } else {
        USER_ERROR
    };
    (code, e.to_string())
}
