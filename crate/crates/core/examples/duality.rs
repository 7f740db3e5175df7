//! H_{mu'}(q,t) = omega H_mu(t,q) and H~_{mu'}(q,t) = H~_mu(t,q).

use sfq::macdonald::{rodriguez_h, rodriguez_htilde};
use sfq::partitions::enumerate;

fn main() -> sfq::Result<()> {
    for mu in enumerate(4) {
        let nu = mu.conjugate();
        let h = rodriguez_h(&nu)? == rodriguez_h(&mu)?.swap_qt().omega();
        let ht = rodriguez_htilde(&nu)? == rodriguez_htilde(&mu)?.swap_qt();
        println!("{:>8} -> {:<8} H: {h}  H~: {ht}", mu.to_string(), nu.to_string());
    }
    Ok(())
}
