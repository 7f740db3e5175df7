//! Alphabet substitutions X -> X(1-t) and X -> X/(1-t), and their round trip.

use sfq::ring::PolyQT;
use sfq::symfun::{Basis, SymFun};

fn main() -> sfq::Result<()> {
    let f: SymFun<PolyQT> = SymFun::s("3,1");
    let g = f.one_minus_alphabet(&PolyQT::t());
    println!("s[3,1][X(1-t)] = {g}");
    println!("in power sums  = {}", g.to_rat().convert(Basis::P)?);
    let back = g.divide_alphabet_one_minus_t()?;
    println!("divided back   = {back}");
    println!("round trip ok: {}", back.to_poly()? == f);
    println!("omega s[3,1][X(1-t)] = {}", g.omega());
    Ok(())
}
