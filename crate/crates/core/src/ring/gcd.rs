//! Greatest common divisors in `Z[q,t]`, by primitive pseudo-remainder
//! sequences over `Z[t][q]`.
//!
//! Monomials are units of the Laurent ring, so the gcd returned here has no
//! monomial factor and a positive leading coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Mono, PolyQT};

/// Dense univariate polynomial over `Z`, lowest degree first, no trailing zeros.
type UPoly = Vec<BigInt>;

fn trim(mut p: UPoly) -> UPoly {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
    p
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_scale(p: &UPoly, c: &BigInt) -> UPoly {
    trim(p.iter().map(|x| x * c).collect())
}

fn u_div_int(p: &UPoly, c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient; the caller guarantees divisibility.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); r.len() - db];
    let lb = &b[db];
    for i in (0..quot.len()).rev() {
        let c = &r[i + db] / lb;
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &c * y;
        }
        quot[i] = c;
    }
    trim(quot)
}

fn u_primitive(p: &UPoly) -> (BigInt, UPoly) {
    let c = u_content(p);
    if c.is_zero() {
        return (c, Vec::new());
    }
    let c = if p.last().unwrap().is_negative() { -c } else { c };
    (c.clone(), u_div_int(p, &c))
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: UPoly = r.iter().map(|x| x * lb).collect();
        for (j, y) in b.iter().enumerate() {
            next[shift + j] -= &lr * y;
        }
        r = trim(next);
    }
    r
}

/// Gcd in `Z[t]`, normalized with positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive_sign(b);
    }
    if b.is_empty() {
        return u_primitive_sign(a);
    }
    let (ca, mut pa) = u_primitive(a);
    let (cb, mut pb) = u_primitive(b);
    let c = ca.gcd(&cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while pb.len() > 1 {
        let r = u_prem(&pa, &pb);
        pa = pb;
        pb = if r.is_empty() { Vec::new() } else { u_primitive(&r).1 };
        if pb.is_empty() {
            break;
        }
    }
    let g = if pb.is_empty() { pa } else { vec![BigInt::one()] };
    u_scale(&g, &c)
}

fn u_primitive_sign(p: &UPoly) -> UPoly {
    match p.last() {
        Some(c) if c.is_negative() => p.iter().map(|x| -x).collect(),
        _ => p.clone(),
    }
}

/// Polynomial in `q` with coefficients in `Z[t]`, lowest `q` degree first.
type BPoly = Vec<UPoly>;

fn b_trim(mut p: BPoly) -> BPoly {
    while matches!(p.last(), Some(c) if c.is_empty()) {
        p.pop();
    }
    p
}

fn to_dense(p: &PolyQT) -> BPoly {
    let lo = p.min_exponents();
    let hi = p.max_exponents();
    let nq = (hi.q - lo.q + 1) as usize;
    let nt = (hi.t - lo.t + 1) as usize;
    let mut out = vec![vec![BigInt::zero(); nt]; nq];
    for (m, c) in p.terms() {
        out[(m.q - lo.q) as usize][(m.t - lo.t) as usize] = c.clone();
    }
    b_trim(out.into_iter().map(trim).collect())
}

fn from_dense(p: &BPoly) -> PolyQT {
    let mut terms = Vec::new();
    for (i, row) in p.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push((Mono::new(i as i32, j as i32), c.clone()));
            }
        }
    }
    PolyQT::from_terms(terms)
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: BPoly = r.iter().map(|x| u_mul(x, lb)).collect();
        for (j, y) in b.iter().enumerate() {
            next[shift + j] = u_sub(&next[shift + j], &u_mul(&lr, y));
        }
        r = b_trim(next);
    }
    r
}

fn b_primitive(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    p.iter().map(|x| u_div_exact(x, &c)).collect()
}

/// Greatest common divisor up to units (monomials and sign).
pub fn gcd(a: &PolyQT, b: &PolyQT) -> PolyQT {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_monomial() || b.is_monomial() {
        return PolyQT::from_bigint(a.content().gcd(&b.content()));
    }
    if let Some(g) = heuristic_gcd(a, b) {
        return g;
    }
    prs_gcd(a, b)
}

/// Gcd of two non-monomial polynomials by primitive pseudo-remainder sequences.
fn prs_gcd(a: &PolyQT, b: &PolyQT) -> PolyQT {
    let da = to_dense(a);
    let db = to_dense(b);
    let ca = b_content(&da);
    let cb = b_content(&db);
    let c = u_gcd(&ca, &cb);
    let mut pa: BPoly = da.iter().map(|x| u_div_exact(x, &ca)).collect();
    let mut pb: BPoly = db.iter().map(|x| u_div_exact(x, &cb)).collect();
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        if pb.len() <= 1 {
            // pb is a nonzero element of Z[t] with trivial content: a unit here.
            break vec![vec![BigInt::one()]];
        }
        let r = b_prem(&pa, &pb);
        if r.is_empty() {
            break pb;
        }
        pa = pb;
        pb = b_primitive(&r);
    };
    let g: BPoly = g.iter().map(|x| u_mul(x, &c)).collect();
    normalize(&from_dense(&b_trim(g)))
}

/// Symmetric `ξ`-adic digits of `v`, lowest first.
fn xi_adic(mut v: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (&v - &d) / xi;
        out.push(d);
    }
    out
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn coeffs(p: &PolyQT) -> Vec<BigInt> {
    p.terms().iter().map(|(_, c)| c.clone()).collect()
}

fn u_eval(p: &UPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn u_divides(d: &UPoly, a: &UPoly) -> bool {
    let mut r = a.clone();
    let dd = d.len() - 1;
    let ld = &d[dd];
    while r.len() >= d.len() {
        let (c, rem) = r.last().unwrap().div_rem(ld);
        if !rem.is_zero() {
            return false;
        }
        let shift = r.len() - 1 - dd;
        for (j, y) in d.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        r = trim(r);
    }
    r.is_empty()
}

/// Gcd of two nonzero primitive polynomials in `Z[x]` by evaluation at large
/// integers; `None` when every attempt fails the divisibility check.
fn u_heuristic(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let mut xi = max_norm(a).min(max_norm(b)) * 2 + 29;
    for _ in 0..6 {
        let g = u_eval(a, &xi).gcd(&u_eval(b, &xi));
        let h = trim(xi_adic(g, &xi));
        if !h.is_empty() {
            let h = u_primitive(&h).1;
            if u_divides(&h, a) && u_divides(&h, b) {
                return Some(h);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Bivariate version: evaluate `t`, recurse into `Z[q]`, rebuild `t` digitwise.
fn heuristic_gcd(a: &PolyQT, b: &PolyQT) -> Option<PolyQT> {
    let c = a.content().gcd(&b.content());
    let a = normalize(&a.div_int(&a.content())?);
    let b = normalize(&b.div_int(&b.content())?);
    let as_q = |p: &PolyQT, x: &BigInt| -> UPoly {
        let d = (p.max_exponents().q + 1) as usize;
        let mut out = vec![BigInt::zero(); d];
        for (m, c) in p.terms() {
            out[m.q as usize] += c * x.pow(m.t as u32);
        }
        trim(out)
    };
    let mut xi = max_norm(&coeffs(&a)).min(max_norm(&coeffs(&b))) * 2 + 29;
    for _ in 0..6 {
        let (ax, bx) = (as_q(&a, &xi), as_q(&b, &xi));
        if !ax.is_empty() && !bx.is_empty() {
            let (ca, pa) = u_primitive(&ax);
            let (cb, pb) = u_primitive(&bx);
            if let Some(h) = u_heuristic(&pa, &pb) {
                let h = u_scale(&h, &ca.gcd(&cb));
                let mut terms = Vec::new();
                for (i, coeff) in h.iter().enumerate() {
                    for (j, d) in xi_adic(coeff.clone(), &xi).into_iter().enumerate() {
                        if !d.is_zero() {
                            terms.push((Mono::new(i as i32, j as i32), d));
                        }
                    }
                }
                let g = PolyQT::from_terms(terms);
                if !g.is_zero() {
                    let g = normalize(&g.div_int(&g.content())?);
                    if a.div_exact(&g).is_ok() && b.div_exact(&g).is_ok() {
                        return Some(g.scale(&c));
                    }
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Strips the monomial factor and makes the leading coefficient positive.
pub fn normalize(p: &PolyQT) -> PolyQT {
    if p.is_zero() {
        return PolyQT::zero();
    }
    let m = p.min_exponents();
    let s = p.shift(Mono::new(-m.q, -m.t));
    match s.leading() {
        Some((_, c)) if c.is_negative() => -s,
        _ => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyQT {
        s.parse().unwrap()
    }

    #[test]
    fn univariate_common_factor() {
        let a = &p("1 - t") * &p("1 + t + t^2");
        let b = &p("1 - t") * &p("1 + t");
        assert_eq!(gcd(&a, &b), p("t - 1"));
    }

    #[test]
    fn bivariate_common_factor() {
        let f = p("1 - q*t^2");
        let a = &(&f * &p("1 - q")) * &p("3");
        let b = &(&f * &p("1 + q*t + t^3")) * &p("6*q^2");
        assert_eq!(gcd(&a, &b), p("3*q*t^2 - 3"));
    }

    proptest::proptest! {
        #[test]
        fn heuristic_matches_prs(
            a in proptest::collection::vec((0i32..4, 0i32..4, -5i64..6), 2..6),
            b in proptest::collection::vec((0i32..4, 0i32..4, -5i64..6), 2..6),
            c in proptest::collection::vec((0i32..3, 0i32..3, -3i64..4), 1..4),
        ) {
            let mk = |v: &Vec<(i32, i32, i64)>| PolyQT::from_terms(v.iter().map(|&(x, y, k)| (Mono::new(x, y), BigInt::from(k))).collect());
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            let (a, b) = (&a * &c, &b * &c);
            if a.is_zero() || b.is_zero() || a.is_monomial() || b.is_monomial() {
                return Ok(());
            }
            let g = gcd(&a, &b);
            proptest::prop_assert_eq!(&g, &prs_gcd(&a, &b));
            proptest::prop_assert!(g.div_exact(&normalize(&c)).is_ok());
        }
    }

    #[test]
    fn coprime_inputs() {
        assert_eq!(gcd(&p("1 - q"), &p("1 - t")), PolyQT::one());
        assert_eq!(gcd(&p("2 - 2*q"), &p("4 - 4*t")), p("2"));
    }

    #[test]
    fn content_in_t_is_found() {
        let a = &p("1 - t^2") * &p("q + 1");
        let b = &p("1 - t^3") * &p("q^2 - t");
        assert_eq!(gcd(&a, &b), p("t - 1"));
    }
}
