use hodgev_core::hodge::{minimal_generators, HodgeIdeals};
use hodgev_core::milnor::{build_milnor, mlct, spectrum, MilnorData};
use hodgev_core::oracles::{bp_spectrum, bp_v_member, DiagonalSpec};
use hodgev_core::polyring::rational::{int, rat};
use hodgev_core::polyring::{alpha_value, parse_expression, scan_variables};
use hodgev_core::vfilt::VFiltration;
use hodgev_core::{Monomial, Polynomial, Rational, Ring, WeightSystem};
use proptest::prelude::*;

fn milnor(text: &str) -> MilnorData {
    let ring = Ring::new(scan_variables(text).unwrap());
    build_milnor(&parse_expression(text, &ring).unwrap(), None).unwrap()
}

const EXAMPLES: [&str; 6] = ["x^2+y^3", "x^3+y^5", "x^2+y^2+z^2", "x^3+y^3+z^3", "x^2+x*y^2+y^4", "x^2*y+y^3+z^2"];

#[test]
fn unit_ideal_law() {
    for f in EXAMPLES {
        let m = milnor(f);
        let v = VFiltration::new(&m);
        let one = Polynomial::one(m.f().ring());
        let t = mlct(&m);
        for c in v.candidates_upto(&int(3)) {
            assert_eq!(v.v_member(&one, &c), c <= t, "{f} at {c}");
        }
    }
}

#[test]
fn jumps_telescope_to_codimension() {
    for f in EXAMPLES {
        let m = milnor(f);
        let v = VFiltration::new(&m);
        let jl = v.jumping_numbers(&int(3)).unwrap();
        assert_eq!(jl.jumps[0].0, mlct(&m), "{f}");
        assert!(jl.jumps.windows(2).all(|w| w[0].0 < w[1].0));
        let mut total = 0;
        for (c, d) in &jl.jumps {
            total += d;
            let above = v.v_level(&v.next_candidate(c));
            assert_eq!(above.ideal().quotient_dim().unwrap(), total, "{f} at {c}");
        }
    }
}

#[test]
fn levels_contain_jacobian_power() {
    for f in EXAMPLES {
        let m = milnor(f);
        let v = VFiltration::new(&m);
        for c in v.candidates_upto(&int(3)) {
            let level = v.v_level(&c);
            let power = m.jacobian().power(level.truncation());
            assert!(level.ideal().contains_ideal(&power), "{f} at {c}");
            for g in level.generators() {
                let a = alpha_value(&g.basis_monomial, m.weights()).unwrap();
                let k: u32 = g.nu.iter().sum();
                assert!(a + Rational::from_integer(k.into()) >= c);
            }
        }
    }
}

#[test]
fn hodge_ideals_grow_with_f() {
    for f in ["x^2+y^3", "x^3+y^3+z^3", "x^2+y^2+z^2"] {
        let m = milnor(f);
        let h = HodgeIdeals::new(&m);
        for p in 1..=2 {
            let prev = h.ideal(p - 1);
            let cur = h.ideal(p);
            for g in prev.ideal().generators() {
                assert!(cur.ideal().contains(&(m.f() * g)), "{f} p={p}");
            }
            assert!(cur.ideal().contains(&m.f().pow(p + 1)));
        }
    }
}

#[test]
fn weighted_minimal_generators_reach_threshold() {
    let w = WeightSystem::new(vec![rat(1, 2), rat(1, 3), rat(1, 7)]).unwrap();
    for m in 1..=3u32 {
        let gens = minimal_generators(&w, m);
        let target = Rational::from_integer(m.into());
        for u in &gens {
            assert!(alpha_value(u, &w).unwrap() >= target);
            for i in 0..3 {
                if let Some(v) = u.lowered(i) {
                    assert!(alpha_value(&v, &w).unwrap() < target);
                }
            }
        }
        for d in 0..=8 {
            for u in Monomial::all_of_degree(3, d) {
                let inside = alpha_value(&u, &w).unwrap() >= target;
                assert_eq!(inside, gens.iter().any(|g| g.divides(&u)), "{u:?} m={m}");
            }
        }
    }
}

fn spec_strategy() -> impl Strategy<Value = DiagonalSpec> {
    prop::collection::vec(2u32..=6, 1..=3).prop_map(|e| DiagonalSpec::new(e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_spectrum_has_box_size(spec in spec_strategy()) {
        let expected: usize = spec.exponents().iter().map(|&a| (a - 1) as usize).product();
        prop_assert_eq!(bp_spectrum(&spec).total(), expected);
        let m = build_milnor(&spec.polynomial(), None).unwrap();
        prop_assert_eq!(spectrum(&m), bp_spectrum(&spec));
    }

    #[test]
    fn oracle_membership_matches_pipeline(spec in spec_strategy(), num in 1i64..=24, exps in prop::collection::vec(0u32..=7, 3)) {
        let alpha = rat(num, 6);
        let n = spec.nvars();
        let v = Monomial::new(exps[..n].to_vec());
        let m = build_milnor(&spec.polynomial(), None).unwrap();
        let vf = VFiltration::new(&m);
        let g = Polynomial::monomial(m.f().ring(), v.clone());
        prop_assert_eq!(vf.v_member(&g, &alpha), bp_v_member(&spec, &v, &alpha));
    }

    #[test]
    fn canonical_candidate_brackets(num in 0i64..=40) {
        let m = milnor("x^2+y^3");
        let v = VFiltration::new(&m);
        let alpha = rat(num, 7);
        let c = v.canonical(&alpha);
        let next = v.next_candidate(&alpha);
        prop_assert!(c >= alpha);
        prop_assert!(next > alpha);
        prop_assert!(next >= c);
        prop_assert!(v.v_level(&alpha).ideal().same_ideal(v.v_level(&c).ideal()));
    }
}
