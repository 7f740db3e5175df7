//! Hall-Littlewood functions by the TLV operator chain, checked against charge.

use sfq::hall_littlewood::{charge_matrix, hl_h, hl_q, kostka_foulkes_matrix};
use sfq::partitions::enumerate;

fn main() -> sfq::Result<()> {
    for mu in enumerate(3) {
        println!("Q[{mu}] = {}", hl_q(&mu, mu.size())?);
        println!("H[{mu}] = {}", hl_h(&mu)?);
    }
    let n = 4;
    let kf = kostka_foulkes_matrix(n)?;
    println!("\nKostka-Foulkes K(t), n = {n}\n{}", kf.0);
    println!("inverse\n{}", kf.1);
    println!("agrees with the charge statistic: {}", kf.0 == charge_matrix(n));
    Ok(())
}
