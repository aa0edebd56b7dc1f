//! Runs one check and prints its JSON report.

use qfano::harness::{run_check, CheckConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let check = args.next().unwrap_or_else(|| "C7".into());
    let mut cfg = CheckConfig::new(&check);
    cfg.family = args.next().map(|s| s.parse()).transpose()?.or(Some(501));
    let report = run_check(&cfg)?;
    println!("{}", report.to_json());
    Ok(())
}
