//! J_mu three ways: twisted column adders, Lapointe-Vinet operators, and
//! Gram-Schmidt orthogonalization.

use sfq::macdonald::{gram_schmidt_j, j_from_h, lv_j};
use sfq::partitions::enumerate;
use sfq::symfun::Basis;

fn main() -> sfq::Result<()> {
    for n in 1..=4 {
        for mu in enumerate(n) {
            let a = j_from_h(&mu)?.to_rat().convert(Basis::S)?;
            let b = lv_j(&mu, n)?.to_rat().convert(Basis::S)?;
            let c = gram_schmidt_j(&mu)?.convert(Basis::S)?;
            println!("J[{mu}]: adders = LV {}, adders = GS {}", a == b, a == c);
        }
    }
    Ok(())
}
