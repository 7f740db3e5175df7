//! Prints the q,t-Kostka matrix and its modified version for partitions of n.
//!
//! cargo run --release --example qt_kostka_table -- 4

use sfq::macdonald::{qt_kostka_matrix, qt_kostka_tilde_matrix};

fn main() -> sfq::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(3, |s| s.parse().expect("n must be an integer"));
    println!("K(q,t), n = {n}\n{}", qt_kostka_matrix(n)?);
    println!("modified K~(q,t), n = {n}\n{}", qt_kostka_tilde_matrix(n)?);
    Ok(())
}
