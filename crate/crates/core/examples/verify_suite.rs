//! Runs a verification suite from code and prints a one-line summary per check.
//!
//! cargo run --release --example verify_suite -- kernels 3

use sfq::verify::{run, Config, Status};

fn main() -> sfq::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite = args.next().unwrap_or_else(|| "all".into()).parse()?;
    let max_n = args.next().map_or(3, |s| s.parse().expect("max_n must be an integer"));
    let report = run(suite, &Config { max_n, ..Config::default() })?;
    for c in &report.checks {
        let mark = if c.status == Status::Pass { "ok  " } else { "FAIL" };
        println!("{mark} {}  {}", c.id, c.detail);
    }
    println!("{} checks, all passed: {}", report.checks.len(), report.passed());
    Ok(())
}
