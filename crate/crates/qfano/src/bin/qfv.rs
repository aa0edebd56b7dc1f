use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use qfano::data::Stage;
use qfano::harness::{self, CheckConfig, Verdict};

#[derive(Parser)]
#[command(name = "qfv", about = "Run the verification checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum StageArg {
    One,
    Two,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the checks.
    List,
    /// Run one check (C1..C14) or `all`.
    Verify {
        check: String,
        #[arg(long)]
        family: Option<u32>,
        #[arg(long)]
        d: Option<i64>,
        /// 0 for exact arithmetic over Q.
        #[arg(long, default_value_t = 0)]
        prime: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum S-pair reductions per Gröbner basis.
        #[arg(long)]
        budget: Option<u64>,
        /// Wall-clock limit per check, in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        workers: usize,
        /// Include the stretch check in `all`.
        #[arg(long)]
        stretch: bool,
        /// Report elapsed_ms as 0.
        #[arg(long)]
        stable_timing: bool,
    },
    /// Print the chamber structure of a family's torus action.
    Vgit {
        #[arg(long, value_enum)]
        stage: StageArg,
        #[arg(long)]
        family: u32,
        #[arg(long)]
        dump_diagram: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::List => {
            for c in harness::list_checks() {
                println!("{:<4} {:<8} {:<42} {}", c.id, if c.stretch { "stretch" } else { "" }, format!("\"{}\"", c.anchor), c.description);
            }
            ExitCode::SUCCESS
        }
        Cmd::Vgit { stage, family, dump_diagram } => {
            let stage = match stage {
                StageArg::One => Stage::One,
                StageArg::Two => Stage::Two,
            };
            match harness::diagram(stage, family) {
                Ok(text) => {
                    print!("{}", text);
                    if let Some(p) = dump_diagram {
                        if let Err(e) = std::fs::write(&p, &text) {
                            eprintln!("cannot write {}: {}", p.display(), e);
                            return ExitCode::from(2);
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    ExitCode::from(2)
                }
            }
        }
        Cmd::Verify {
            check,
            family,
            d,
            prime,
            seed,
            budget,
            time_limit,
            json,
            workers,
            stretch,
            stable_timing,
        } => {
            let mut base = CheckConfig::new(&check);
            base.family = family;
            base.d = d;
            base.prime = prime;
            base.seed = seed;
            base.budget = budget;
            base.time_limit = time_limit.map(Duration::from_secs);
            base.stable_timing = stable_timing;
            let cfgs = if check == "all" {
                harness::expand_all(&base, stretch)
            } else {
                harness::expand(&check, &base)
            };
            let cfgs = match cfgs {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return ExitCode::from(2);
                }
            };
            let mut code = 0u8;
            let mut reports = Vec::new();
            for (cfg, res) in harness::run_many(&cfgs, workers) {
                match res {
                    Ok(r) => {
                        let fam = r.family.map(|f| f.to_string()).unwrap_or_else(|| "-".into());
                        println!("{:<4} {:<15} {:<16} family {:<5} {} ms", r.check, format!("{:?}", r.verdict), r.mode, fam, r.elapsed_ms);
                        for a in r.assertions.iter().filter(|a| !a.ok) {
                            println!("     failed \"{}\": {}", a.anchor, a.detail);
                        }
                        match r.verdict {
                            Verdict::Fail => code = 1,
                            Verdict::BudgetExceeded if code == 0 => code = 2,
                            _ => {}
                        }
                        reports.push(r);
                    }
                    Err(e) => {
                        eprintln!("{} (family {:?}): error: {}", cfg.check, cfg.family, e);
                        code = code.max(2);
                    }
                }
            }
            if let Some(p) = json {
                let text = if reports.len() == 1 {
                    reports[0].to_json()
                } else {
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                };
                if let Err(e) = std::fs::write(&p, text) {
                    eprintln!("cannot write {}: {}", p.display(), e);
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(code)
        }
    }
}
