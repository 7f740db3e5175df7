//! The q-twisted column adder sends H_mu to H_{mu+1^k}; conjugating by omega
//! with q and t swapped adds a row instead.

use sfq::macdonald::rodriguez_h;
use sfq::operators::{column_adder, Family, Param};
use sfq::partitions::Partition;

fn main() -> sfq::Result<()> {
    let mu: Partition = "2,1".parse()?;
    let h = rodriguez_h(&mu)?;
    for k in 2..=3 {
        let op = column_adder(k, mu.size(), Family::HT, Some(Param::Q))?;
        let up = op.apply(&h)?;
        let target = mu.add_column(k)?;
        println!("column k={k}: gives H[{target}]: {}", up == rodriguez_h(&target)?);
        let row = op.swap_qt().omega_conjugate();
        let target = mu.add_row(k)?;
        println!("row    k={k}: gives H[{target}]: {}", row.apply(&h)? == rodriguez_h(&target)?);
    }
    Ok(())
}
