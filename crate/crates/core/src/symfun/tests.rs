use super::*;
use crate::partitions::enumerate;
use proptest::prelude::*;

type S = SymFun<RatQT>;
type SP = SymFun<PolyQT>;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}
fn rat(s: &str) -> RatQT {
    s.parse().unwrap()
}
fn poly(s: &str) -> PolyQT {
    s.parse().unwrap()
}

#[test]
fn conversion_examples() {
    assert_eq!(S::p("1").convert(Basis::S).unwrap(), S::s("1"));
    let expect = S::from_terms(Basis::P, [(part("1,1"), rat("(1)/(2)")), (part("2"), rat("(-1)/(2)"))]);
    assert_eq!(S::s("1,1").convert(Basis::P).unwrap(), expect);
    let expect = SP::from_terms(Basis::S, [(part("2"), PolyQT::one()), (part("1,1"), PolyQT::constant(-1))]);
    assert_eq!(SP::m("2").convert(Basis::S).unwrap(), expect);
}

#[test]
fn power_sum_target_needs_a_field() {
    assert!(matches!(SP::s("1,1").convert(Basis::P), Err(Error::NonIntegral(_))));
}

#[test]
fn multiplication_examples() {
    let s1 = SP::s("1");
    assert_eq!(s1.multiply(&s1).unwrap(), SP::s("2").plus(&SP::s("1,1")));
    let f = SP::s("2,1").scale(&poly("q - t"));
    assert_eq!(f.multiply(&SP::one(Basis::S)).unwrap(), f);
    let e2 = SP::e(2).convert(Basis::S).unwrap();
    assert_eq!(e2.multiply(&s1).unwrap(), SP::s("2,1").plus(&SP::s("1,1,1")));
}

#[test]
fn multiplication_matches_power_sum_product() {
    for (a, b) in [("2,1", "1"), ("2", "2"), ("1,1", "2,1"), ("3", "1,1")] {
        let lr = S::s(a).multiply(&S::s(b)).unwrap();
        let pa = S::s(a).convert(Basis::P).unwrap();
        let pb = S::s(b).convert(Basis::P).unwrap();
        let pp = pa.multiply(&pb).unwrap().convert(Basis::S).unwrap();
        assert_eq!(lr, pp);
    }
}

#[test]
fn plethysm_examples() {
    let one_minus_t = AlphabetExpr::single(rat("1 - t"), Alphabet::X);
    let got = S::p("2").plethysm(&one_minus_t).unwrap().x_part();
    assert_eq!(got, S::p("2").scale(&rat("1 - t^2")));
    let f = S::s("2,1").plus(&S::s("3").scale(&rat("q")));
    assert_eq!(f.plethysm(&AlphabetExpr::x()).unwrap().x_part().convert(Basis::S).unwrap(), f);
    let got = S::s("2").plethysm(&one_minus_t).unwrap().x_part().convert(Basis::S).unwrap();
    let expect = S::s("2").minus(&S::s("1,1").scale(&rat("t"))).scale(&rat("1 - t"));
    assert_eq!(got, expect);
}

#[test]
fn integral_one_minus_matches_plethysm() {
    for n in 0..6 {
        for lam in enumerate(n) {
            let integral = SP::basis_element(Basis::S, lam.clone()).one_minus_alphabet(&PolyQT::t());
            let via_p = S::basis_element(Basis::S, lam)
                .plethysm(&AlphabetExpr::single(rat("1 - t"), Alphabet::X))
                .unwrap()
                .x_part()
                .convert(Basis::S)
                .unwrap();
            assert_eq!(integral.to_rat(), via_p);
        }
    }
}

#[test]
fn f_t_is_invertible() {
    for n in 0..=6 {
        for lam in enumerate(n) {
            let f = S::basis_element(Basis::S, lam);
            let g = f.one_minus_alphabet(&PolyQT::t()).divide_alphabet_one_minus_t().unwrap();
            assert_eq!(g, f);
        }
    }
}

#[test]
fn skew_examples() {
    assert_eq!(skew_schur::<PolyQT>(&part("2,1"), &part("2,1")).unwrap(), SP::one(Basis::S));
    assert_eq!(skew_schur::<PolyQT>(&part("2,1"), &part("1")).unwrap(), SP::s("2").plus(&SP::s("1,1")));
    assert_eq!(skew_schur::<PolyQT>(&part("2"), &part("1")).unwrap(), SP::s("1"));
    assert!(matches!(skew_schur::<PolyQT>(&part("2"), &part("1,1")), Err(Error::NotContained { .. })));
}

#[test]
fn addition_formula_via_skews() {
    // s_λ[X+Y] = Σ_μ s_{λ/μ}[X] s_μ[Y]
    let xy = AlphabetExpr::x().plus(RatQT::one(), Alphabet::Y);
    for n in 0..=6 {
        for lam in enumerate(n) {
            let lhs = S::basis_element(Basis::S, lam.clone()).plethysm(&xy).unwrap();
            let mut rhs = SymFun2::zero();
            for mu in lam.subpartitions() {
                let sk = SymFun2::from_x(&skew_schur::<RatQT>(&lam, &mu).unwrap()).unwrap();
                let smu = SymFun2::from_y(&S::basis_element(Basis::S, mu)).unwrap();
                rhs = rhs.plus(&sk.multiply(&smu));
            }
            assert_eq!(lhs, rhs, "{lam}");
        }
    }
}

#[test]
fn straighten_examples() {
    use crate::partitions::Composition;
    assert_eq!(straighten::<PolyQT>(&Composition::new(vec![0, 0])), SP::one(Basis::S));
    assert_eq!(straighten::<PolyQT>(&Composition::new(vec![0, 2])), SP::s("1,1").neg());
    assert!(straighten::<PolyQT>(&Composition::new(vec![1, 2])).is_zero());
}

#[test]
fn omega_examples() {
    assert_eq!(SP::s("2").omega(), SP::s("1,1"));
    for k in 0..5 {
        let e = SP::e(k).convert(Basis::S).unwrap();
        let h = SP::h(k).convert(Basis::S).unwrap();
        assert_eq!(e.omega(), h);
        assert_eq!(SP::e(k).omega(), SP::h(k));
    }
    let m = SP::m("2,1");
    assert_eq!(m.omega().convert(Basis::S).unwrap(), m.convert(Basis::S).unwrap().omega());
}

#[test]
fn omega_kernel_examples() {
    let k = omega_kernel(&AlphabetExpr::x(), 3).unwrap();
    assert_eq!(k[2].x_part().convert(Basis::H).unwrap(), S::h(2));
    // Ω[X+Y] = Ω[X]Ω[Y]
    let xy = omega_kernel(&AlphabetExpr::x().plus(RatQT::one(), Alphabet::Y), 3).unwrap();
    let ky = omega_kernel(&AlphabetExpr::single(RatQT::one(), Alphabet::Y), 3).unwrap();
    for d in 0..=3 {
        let mut prod = SymFun2::zero();
        for i in 0..=d {
            prod = prod.plus(&k[i].multiply(&ky[d - i]));
        }
        assert_eq!(xy[d], prod);
    }
    let c = rat("(1 - t)/(1 - q)");
    let kern = omega_kernel(&AlphabetExpr::single(c.clone(), Alphabet::XY), 1).unwrap();
    let mut expect = SymFun2::zero();
    expect.add_term((part("1"), part("1")), c);
    assert_eq!(kern[1], expect);
}

#[test]
fn hall_inner_examples() {
    assert_eq!(SP::s("2").hall_inner(&SP::s("2")), PolyQT::one());
    assert!(SP::s("2").hall_inner(&SP::s("1,1")).is_zero());
    assert_eq!(S::p("2").hall_inner(&S::p("2")), RatQT::from_int(2));
}

#[test]
fn display_and_json() {
    let f = SP::s("2").plus(&SP::s("1,1").scale(&PolyQT::q()));
    assert_eq!(f.to_string(), "s[2] + q*s[1,1]");
    let g = SP::s("1").scale(&poly("1 - t"));
    assert_eq!(g.to_string(), "(-t + 1)*s[1]");
    let h = SP::s("2").minus(&SP::s("1,1").scale(&PolyQT::t()));
    assert_eq!(h.to_string(), "s[2] - t*s[1,1]");
    assert_eq!(SP::one(Basis::S).to_string(), "1");
    assert_eq!(SP::zero(Basis::S).to_string(), "0");
    let j = serde_json::to_string(&f).unwrap();
    assert_eq!(j, r#"{"basis":"s","terms":[{"part":"2","coeff":"1"},{"part":"1,1","coeff":"q"}]}"#);
    let back: SP = serde_json::from_str(&j).unwrap();
    assert_eq!(back, f);
}

fn random_fun(seed: Vec<(usize, i64, i32, i32)>, basis: Basis) -> S {
    let mut f = S::zero(basis);
    for (pick, c, a, b) in seed {
        let n = pick % 7;
        let parts = enumerate(n);
        let lam = parts[(pick / 7) % parts.len()].clone();
        f.add_term(lam, RatQT::from_poly(PolyQT::monomial(c.into(), a, b)));
    }
    f
}

const BASES: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_round_trips(seed in proptest::collection::vec((0usize..200, -3i64..4, 0i32..3, 0i32..3), 0..4), b1 in 0usize..5, b2 in 0usize..5) {
        let f = random_fun(seed, BASES[b1]);
        let g = f.convert(BASES[b2]).unwrap().convert(BASES[b1]).unwrap();
        prop_assert_eq!(g, f);
    }

    #[test]
    fn conversions_preserve_hall_pairing(seed in proptest::collection::vec((0usize..200, -3i64..4, 0i32..3, 0i32..3), 0..4), seed2 in proptest::collection::vec((0usize..200, -3i64..4, 0i32..3, 0i32..3), 0..4), b in 0usize..5) {
        let f = random_fun(seed, Basis::S);
        let g = random_fun(seed2, Basis::S);
        let fc = f.convert(BASES[b]).unwrap();
        let gc = g.convert(Basis::P).unwrap();
        prop_assert_eq!(fc.hall_inner(&gc), f.hall_inner(&g));
    }

    #[test]
    fn omega_is_an_involutive_ring_morphism(seed in proptest::collection::vec((0usize..200, -3i64..4, 0i32..3, 0i32..3), 0..3), seed2 in proptest::collection::vec((0usize..200, -3i64..4, 0i32..3, 0i32..3), 0..3)) {
        let f = random_fun(seed, Basis::S);
        let g = random_fun(seed2, Basis::S);
        prop_assert_eq!(f.omega().omega(), f.clone());
        let lhs = f.multiply(&g).unwrap().omega();
        let rhs = f.omega().multiply(&g.omega()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
