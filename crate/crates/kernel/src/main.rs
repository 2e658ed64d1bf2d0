//! `lamt`: batch command-line front end for the kernel.
//!
//! Exit codes: 0 on success, 1 for negative domain answers (ill-typed,
//! not alpha-equivalent, no finite height, property failures), 2 for
//! usage and syntax errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lamt::alpha::alpha_eq;
use lamt::harness::{run_suite, AlphabetChoice, CorpusConfig};
use lamt::normalization::{count_const, explore, normalize, Status};
use lamt::parse::{parse_term, parse_type};
use lamt::print::print_term;
use lamt::reduction::{beta_rules, one_step_reducts, path_to_string, systemt_rules, RuleSet};
use lamt::subst::Subst;
use lamt::syntax::{Alphabet, Empty, TConst, Term, Var};
use lamt::typing::{check, empty_signature, infer, system_t_signature, Context, Signature};

#[derive(Parser)]
#[command(name = "lamt", version, about = "Lambda calculus and System T kernel")]
struct Cli {
    /// Calculus to work in: the pure lambda calculus or System T
    #[arg(long, global = true, value_enum, default_value_t = SystemArg::T)]
    system: SystemArg,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Pure,
    T,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a term against a type; prints the verdict
    Check {
        term: String,
        #[arg(long = "type")]
        ty: String,
        /// Typing context, e.g. "v0:nat,v1:nat->nat"
        #[arg(long)]
        ctx: Option<String>,
    },
    /// Infer the principal type of a term
    Infer {
        term: String,
        #[arg(long)]
        ctx: Option<String>,
    },
    /// Reduce to normal form
    Normalize {
        term: String,
        #[arg(long, default_value_t = 10_000)]
        fuel: usize,
    },
    /// Reduce to normal form, printing every step
    Trace {
        term: String,
        #[arg(long, default_value_t = 10_000)]
        fuel: usize,
    },
    /// List all one-step reducts with rule tags and redex paths
    Reducts { term: String },
    /// Decide alpha-equivalence of two terms
    Alpha { left: String, right: String },
    /// Apply a simultaneous substitution, e.g. --map "v0:=S 0,v1:=v2"
    Subst {
        term: String,
        #[arg(long)]
        map: String,
    },
    /// Compute the reduction height v(M) of a strongly normalizing term
    Height {
        term: String,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Count successor symbols (the measure ℓ)
    Scount { term: String },
    /// Explore the reduction graph; optionally emit Graphviz
    Graph {
        term: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Run the exhaustive property suite over an enumerated corpus
    Props {
        #[arg(long, default_value_t = 7)]
        size: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        substs: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 10_000)]
        fuel: usize,
        /// Write the machine-readable JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.system {
        SystemArg::Pure => run(
            &cli.command,
            &beta_rules::<Empty>(),
            &empty_signature(),
            AlphabetChoice::Empty,
        ),
        SystemArg::T => run(
            &cli.command,
            &systemt_rules(),
            &system_t_signature(),
            AlphabetChoice::SystemT,
        ),
    };
    ExitCode::from(code)
}

/// Parses or exits with code 2, printing the error to stderr.
macro_rules! try_usage {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        }
    };
}

fn parse_ctx(text: Option<&str>) -> Result<Context, String> {
    let mut entries = Vec::new();
    if let Some(text) = text {
        for item in text.split(',').filter(|s| !s.trim().is_empty()) {
            let (var, ty) = item
                .split_once(':')
                .ok_or_else(|| format!("context entry '{item}' is not of the form v0:TYPE"))?;
            let var = var.trim();
            let v: Var = var
                .strip_prefix('v')
                .and_then(|d| d.parse().ok().map(Var))
                .ok_or_else(|| format!("'{var}' is not a variable (v0, v1, ...)"))?;
            let ty = parse_type(ty.trim()).map_err(|e| e.to_string())?;
            entries.push((v, ty));
        }
    }
    Ok(Context::from_entries(entries))
}

fn parse_map<C: Alphabet>(text: &str) -> Result<Subst<C>, String> {
    let mut s = Subst::identity();
    for item in text.split(',').filter(|i| !i.trim().is_empty()) {
        let (var, image) = item
            .split_once(":=")
            .ok_or_else(|| format!("mapping '{item}' is not of the form v0:=TERM"))?;
        let var = var.trim();
        let v: Var = var
            .strip_prefix('v')
            .and_then(|d| d.parse().ok().map(Var))
            .ok_or_else(|| format!("'{var}' is not a variable (v0, v1, ...)"))?;
        let image = parse_term(image.trim()).map_err(|e| e.to_string())?;
        s = s.update(v, image);
    }
    Ok(s)
}

fn run<C: Alphabet>(
    cmd: &Cmd,
    rules: &RuleSet<C>,
    sig: &Signature<C>,
    alphabet: AlphabetChoice,
) -> u8 {
    match cmd {
        Cmd::Check { term, ty, ctx } => {
            let m: Term<C> = try_usage!(parse_term(term));
            let a = try_usage!(parse_type(ty));
            let ctx = try_usage!(parse_ctx(ctx.as_deref()));
            match check(sig, &ctx, &m, &a) {
                Ok(true) => {
                    println!("well-typed: {} : {}", print_term(&m), a);
                    0
                }
                Ok(false) => {
                    println!("ill-typed: {} is not of type {}", print_term(&m), a);
                    1
                }
                Err(e) => {
                    println!("ill-typed: {e}");
                    1
                }
            }
        }
        Cmd::Infer { term, ctx } => {
            let m: Term<C> = try_usage!(parse_term(term));
            let ctx = try_usage!(parse_ctx(ctx.as_deref()));
            match infer(sig, &ctx, &m) {
                Ok(ty) => {
                    println!("{ty}");
                    0
                }
                Err(e) => {
                    println!("no type: {e}");
                    1
                }
            }
        }
        Cmd::Normalize { term, fuel } => {
            let m: Term<C> = try_usage!(parse_term(term));
            match normalize(rules, &m, *fuel) {
                Ok((nf, trace)) => {
                    println!("{}", print_term(&nf));
                    eprintln!("{} steps", trace.len());
                    0
                }
                Err(e) => {
                    eprintln!("{e}");
                    1
                }
            }
        }
        Cmd::Trace { term, fuel } => {
            let m: Term<C> = try_usage!(parse_term(term));
            match normalize(rules, &m, *fuel) {
                Ok((_, trace)) => {
                    println!("{}", print_term(&m));
                    for s in &trace {
                        println!("{}@{}  {}", s.tag, path_to_string(&s.path), print_term(&s.target));
                    }
                    0
                }
                Err(e) => {
                    eprintln!("{e}");
                    1
                }
            }
        }
        Cmd::Reducts { term } => {
            let m: Term<C> = try_usage!(parse_term(term));
            for s in one_step_reducts(rules, &m) {
                println!("{}@{}  {}", s.tag, path_to_string(&s.path), print_term(&s.target));
            }
            0
        }
        Cmd::Alpha { left, right } => {
            let l: Term<C> = try_usage!(parse_term(left));
            let r: Term<C> = try_usage!(parse_term(right));
            if alpha_eq(&l, &r) {
                println!("alpha-equivalent");
                0
            } else {
                println!("not alpha-equivalent");
                1
            }
        }
        Cmd::Subst { term, map } => {
            let m: Term<C> = try_usage!(parse_term(term));
            let s: Subst<C> = try_usage!(parse_map(map));
            println!("{}", print_term(&m.subst(&s)));
            0
        }
        Cmd::Height { term, budget } => {
            let m: Term<C> = try_usage!(parse_term(term));
            let g = explore(rules, &m, *budget);
            match (&g.status, g.root_height()) {
                (Status::Finite, Some(v)) => {
                    println!("{v}");
                    0
                }
                (Status::CycleFound(_), _) => {
                    eprintln!("no finite height: reduction cycle found");
                    1
                }
                _ => {
                    eprintln!("no finite height: node budget exhausted");
                    1
                }
            }
        }
        Cmd::Scount { term } => {
            let Some(succ) = C::succ_const() else {
                eprintln!("error: the pure system has no successor constant");
                return 2;
            };
            let m: Term<C> = try_usage!(parse_term(term));
            println!("{}", count_const(&m, &succ));
            0
        }
        Cmd::Graph { term, dot, budget } => {
            let m: Term<C> = try_usage!(parse_term(term));
            let g = explore(rules, &m, *budget);
            let status = match &g.status {
                Status::Finite => "finite".to_string(),
                Status::CycleFound(_) => "cycle".to_string(),
                Status::BudgetExhausted => "budget-exhausted".to_string(),
            };
            println!(
                "nodes={} edges={} status={}{}",
                g.nodes.len(),
                g.edges.len(),
                status,
                g.root_height().map_or(String::new(), |v| format!(" v={v}")),
            );
            if let Some(path) = dot {
                try_usage!(std::fs::write(path, g.to_dot()));
            }
            u8::from(g.status != Status::Finite)
        }
        Cmd::Props {
            size,
            seed,
            substs,
            budget,
            fuel,
            out,
        } => {
            let cfg = CorpusConfig {
                max_term_size: *size,
                alphabet,
                substitution_pool_size: *substs,
                seed: *seed,
                node_budget: *budget,
                fuel: *fuel,
                ..CorpusConfig::default()
            };
            let report = run_suite(&cfg);
            print!("{}", report.log());
            if let Some(path) = out {
                try_usage!(std::fs::write(path, report.to_json()));
            }
            u8::from(report.total_failures() > 0)
        }
    }
}

// Keep the unused-import lint honest in the pure-system instantiation.
#[allow(dead_code)]
fn _assert_alphabets_cover(_: Empty, _: TConst) {}
