//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line;
//! run with `cargo test --release --test acceptance -- --nocapture` to see them.

use std::process::Command;
use std::time::{Duration, Instant};

use sfq::hall_littlewood::{charge_matrix, kostka_foulkes_matrix};
use sfq::macdonald::{gram_schmidt_j, hook_formula, j_from_h, lv_j, qt_kostka_matrix, rodriguez_h};
use sfq::partitions::{enumerate, Partition};
use sfq::ring::{PolyQT, RatQT};
use sfq::symfun::Basis;
use sfq::verify::{run, Config, Report, Suite};

fn report(n: u32, what: &str, ok: bool, detail: &str) {
    println!("criterion {n}: {} {what} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {detail}");
}

fn t() -> RatQT {
    RatQT::from_poly(PolyQT::t())
}

fn upto(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(enumerate)
}

/// Checks of `r` whose id starts with one of `prefixes`; fails if any prefix
/// matched nothing.
fn selected(r: &Report, prefixes: &[&str]) -> (bool, String) {
    let mut bad = Vec::new();
    let mut total = 0;
    for p in prefixes {
        let hits: Vec<_> = r.checks.iter().filter(|c| c.id.starts_with(p)).collect();
        if hits.is_empty() {
            bad.push(format!("no checks for {p}"));
        }
        total += hits.len();
        bad.extend(hits.iter().filter(|c| c.status != sfq::verify::Status::Pass).map(|c| format!("{}: {}", c.id, c.detail)));
    }
    (bad.is_empty(), if bad.is_empty() { format!("{total} checks") } else { bad.join("; ") })
}

fn sfq(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sfq")).args(args).output().expect("run sfq");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), start.elapsed())
}

#[test]
fn criterion_1_polynomiality() {
    let (code, _, took) = sfq(&["--no-cache", "verify", "polynomiality", "--max-n", "6"]);
    let mut ok = code == 0 && took < Duration::from_secs(60);
    let mut violations = 0;
    for n in 0..=6 {
        match qt_kostka_matrix(n) {
            Ok(_) => {}
            Err(_) => violations += 1,
        }
    }
    let m = qt_kostka_matrix(2).unwrap();
    let (two, ones): (Partition, Partition) = ("2".parse().unwrap(), "1,1".parse().unwrap());
    ok &= violations == 0 && m.get(&ones, &two) == PolyQT::q() && m.get(&two, &ones) == PolyQT::t();
    report(1, "q,t-Kostka polynomiality n <= 6", ok, &format!("exit {code}, {violations} violations, cli {took:.2?}"));
}

#[test]
fn criterion_2_q_zero() {
    let mut ok = true;
    for n in 0..=6 {
        let at0 = qt_kostka_matrix(n).unwrap().specialize(&RatQT::zero(), &t()).unwrap();
        ok &= at0 == kostka_foulkes_matrix(n).unwrap().0 && at0 == charge_matrix(n);
    }
    report(2, "K(0,t) = Kostka-Foulkes (TLV and charge), n <= 6", ok, "exact matrix equality");
}

#[test]
fn criterion_3_q_equals_t() {
    let mut bad = Vec::new();
    for mu in upto(5) {
        let j = j_from_h(&mu).unwrap().specialize(&t(), &t()).unwrap();
        if j.convert(Basis::S).unwrap() != hook_formula(&mu) {
            bad.push(mu.to_string());
        }
    }
    report(3, "J(t,t) = hook product * s_mu, |mu| <= 5", bad.is_empty(), &format!("failures: {bad:?}"));
}

#[test]
fn criterion_4_duality() {
    let mut bad = Vec::new();
    for mu in upto(6) {
        if rodriguez_h(&mu.conjugate()).unwrap() != rodriguez_h(&mu).unwrap().swap_qt().omega() {
            bad.push(mu.to_string());
        }
    }
    report(4, "H_mu'(q,t) = omega H_mu(t,q), n <= 6", bad.is_empty(), &format!("failures: {bad:?}"));
}

#[test]
fn criterion_5_three_routes() {
    let mut bad = Vec::new();
    for mu in upto(5) {
        let a = j_from_h(&mu).unwrap().to_rat().convert(Basis::S).unwrap();
        let b = lv_j(&mu, mu.size().max(1)).unwrap().to_rat().convert(Basis::S).unwrap();
        let c = gram_schmidt_j(&mu).unwrap().convert(Basis::S).unwrap();
        if a != b || a != c {
            bad.push(mu.to_string());
        }
    }
    report(5, "adders, Lapointe-Vinet and Gram-Schmidt give the same J, |mu| <= 5", bad.is_empty(), &format!("failures: {bad:?}"));
}

#[test]
fn criterion_6_operator_theorems() {
    // |mu| + k reaches 7 so every |mu| <= 4, k <= 3 pair is covered.
    let r = run(Suite::Operators, &Config { max_n: 7, vars: 5, jobs: 0, cache: None }).unwrap();
    let (ok, detail) = selected(
        &r,
        &[
            "operators/lapointe-vinet/",
            "operators/tlv/",
            "operators/tlv-vanishes/",
            "operators/tlv-limit/",
            "operators/w-twist/",
            "operators/hook-factor/",
            "operators/htilde-adder/",
            "operators/row-adder/",
            "operators/column-adder/",
        ],
    );
    report(6, "operator theorems, |mu| <= 4, k <= 3, <= 5 variables", ok, &detail);
}

#[test]
fn criterion_7_kernels() {
    let r = run(Suite::Kernels, &Config { max_n: 3, vars: 3, jobs: 0, cache: None }).unwrap();
    let (ok, detail) = selected(
        &r,
        &[
            "kernels/cauchy",
            "kernels/column-kernel",
            "kernels/vanishing",
            "kernels/ratio/",
            "kernels/twisted-ratio/",
            "kernels/operator-ratio/",
        ],
    );
    report(7, "kernel and ratio identities to bidegree (3,3), k = 2", ok, &detail);
}

#[test]
fn criterion_8_macdonald_operator() {
    let r = run(Suite::Operators, &Config { max_n: 4, vars: 4, jobs: 0, cache: None }).unwrap();
    let (ok, detail) = selected(
        &r,
        &[
            "operators/macdonald-forms/n=4/u=1",
            "operators/macdonald-forms/n=4/u=q",
            "operators/macdonald-forms/n=4/u=t^2",
            "operators/eigen/n=4/lambda=3",
            "operators/eigen/",
            "operators/remark-twist/n=4/",
        ],
    );
    report(8, "Macdonald operator: sum = det, eigenvalues, twist", ok, &detail);
}

#[test]
fn criterion_9_full_suite() {
    let (code, out, took) = sfq(&["--no-cache", "verify", "all", "--max-n", "6", "--vars", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("JSON report");
    let checks = v["checks"].as_array().map_or(0, |c| c.len());
    let fails = v["checks"].as_array().map_or(0, |c| c.iter().filter(|x| x["status"] != "pass").count());
    let ok = code == 0 && fails == 0 && checks > 0 && took < Duration::from_secs(300);
    report(9, "verify all --max-n 6 --vars 4", ok, &format!("{checks} checks, {fails} failures, {took:.2?}"));
}
