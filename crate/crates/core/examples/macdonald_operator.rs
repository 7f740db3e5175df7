//! The Macdonald operator M(u) in three variables: the A_I sum form against
//! the determinantal form, and its eigenvalues on P_lambda.

use sfq::macdonald::gram_schmidt_p;
use sfq::partitions::Partition;
use sfq::ring::{PolyQT, RatQT};
use sfq::xpoly::{expand, macdonald_det_form, macdonald_sum_form};

fn main() -> sfq::Result<()> {
    let n = 3;
    let u = RatQT::from_poly(PolyQT::q());
    let lam: Partition = "2,1".parse()?;
    let p = expand(&gram_schmidt_p(&lam, lam.size())?, n)?;
    let sum = macdonald_sum_form(&p, &u)?;
    let det = macdonald_det_form(&p, &u)?;
    println!("sum form = det form: {}", sum == det);

    let mut ev = RatQT::one();
    for i in 1..=n {
        let m = PolyQT::qt_pow(lam[i - 1] as i32, (n - i) as i32);
        ev = ev.mul(&RatQT::one().add(&u.mul(&RatQT::from_poly(m))));
    }
    println!("eigenvalue at u = q: {ev}");
    println!("M(q) P[{lam}] = eigenvalue * P[{lam}]: {}", sum == p.scale(&ev));
    Ok(())
}
