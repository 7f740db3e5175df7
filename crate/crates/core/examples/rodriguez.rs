//! Builds H, H~ and J for one partition by applying q-twisted column adders.
//!
//! cargo run --release --example rodriguez -- 3,1

use sfq::macdonald::{j_from_h, rodriguez_h, rodriguez_htilde};
use sfq::partitions::Partition;
use sfq::symfun::Basis;

fn main() -> sfq::Result<()> {
    let mu: Partition = std::env::args().nth(1).unwrap_or_else(|| "2,1".into()).parse()?;
    println!("H[{mu}]  = {}", rodriguez_h(&mu)?);
    println!("H~[{mu}] = {}", rodriguez_htilde(&mu)?);
    let j = j_from_h(&mu)?;
    println!("J[{mu}]  = {j}");
    println!("J[{mu}] in monomials = {}", j.convert(Basis::M)?);
    Ok(())
}
