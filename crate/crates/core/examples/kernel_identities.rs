//! Truncated kernel identities in two auxiliary variables up to bidegree (3,3).

use sfq::kernels::{cauchy_sides, column_kernel_sides, macdonald_ratio_sides};
use sfq::ring::{PolyQT, RatQT};

fn main() -> sfq::Result<()> {
    let (k, d) = (2, 3);
    let (l, r) = cauchy_sides(k, d)?;
    println!("Cauchy kernel = sum Q_lambda P_lambda: {}", l == r);
    let (l, r) = column_kernel_sides(k, d)?;
    println!("M(-1) on the kernel = column sum: {}", l == r);
    println!("  every term divisible by y1 y2: {}", l.divisible_by_all_y());
    let t = RatQT::from_poly(PolyQT::t());
    let (l, r) = macdonald_ratio_sides(&t, k, d)?;
    println!("kernel ratio at u = t matches, free of q: {} {}", l == r, l.is_free_of_q());
    Ok(())
}
