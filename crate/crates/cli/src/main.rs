mod commands;
mod emit;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "g2cartan", version, about = "Exact verification of G2 Cartan geometry computations")]
pub struct Cli {
    /// machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// adjoined square root `s`, as `r=<rational>`
    #[arg(long, global = true, value_name = "r=RATIONAL")]
    pub ext: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jacobi, Killing form, 7-dim representation, root decomposition
    VerifyCore,
    /// basis chains and component table of the 24-dim curvature module
    CurvatureModule,
    /// Tanaka prolongation of a binary quartic
    Prolong {
        /// five comma-separated coefficients on y^4, xy^3, x^2y^2, x^3y, x^4
        #[arg(long, num_args = 1, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        quartic: Vec<String>,
    },
    /// algebraic models
    Model {
        #[command(subcommand)]
        action: ModelAction,
    },
    /// real forms of a model
    Realform(RealformArgs),
    /// rolling spheres with radius ratio rho
    Rolling {
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
    },
    /// Cartan's covariants F and G of a model's curvature
    Covariants {
        #[arg(long = "model", value_name = "LABEL")]
        label: String,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// D.6 / b=0 parameter
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// N.7 parameter
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    #[arg(long)]
    pub label: String,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Subcommand, Debug)]
pub enum ModelAction {
    /// structure, normality and curvature checks; formal when the parameter is omitted
    Verify(ModelArgs),
    Holonomy(ModelArgs),
    Einstein(ModelArgs),
    /// nonexistence of multiply-transitive type III models
    Iii6,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct RealformArgs {
    #[command(subcommand)]
    pub action: Option<RealformAction>,
    #[arg(long, required = true)]
    pub label: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
    /// e.g. psi_1, tilde_-i, tau_1
    #[arg(long, required = true)]
    pub psi: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RealformAction {
    /// all inequivalent anti-involutions of the model
    Classify(ModelArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(out) => {
            let pass = out.pass();
            let text = if cli.json {
                serde_json::to_string_pretty(&out.into_json()).expect("serializable") + "\n"
            } else {
                format!("{}elapsed: {:.1?}\n", emit::human(&out.into_json()), start.elapsed())
            };
            // a closed pipe is not an error of the computation
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
