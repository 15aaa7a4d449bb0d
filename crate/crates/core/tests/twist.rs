use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use qtangle::qsymbols::*;
use qtangle::tangle::*;
use qtangle::twist::*;
use BoundaryConfig::{UPs, OP, UP};
use TwistMove::{Right as R, Top as T};

fn p4(s: &str) -> LaurentPoly4 {
    s.parse().unwrap()
}

fn counts(s: &ComplexState) -> Vec<u64> {
    generator_count(s).iter().map(|c| u64::try_from(c.clone()).unwrap()).collect()
}

fn word_of(bits: &[bool]) -> Vec<TwistMove> {
    bits.iter().map(|&b| if b { T } else { R }).collect()
}

#[test]
fn single_step_examples() {
    let s0 = ComplexState::start(1, UP);
    let s1 = apply_twist(&s0, T);
    assert_eq!(s1.config, UPs);
    assert_eq!(s1.coeffs, vec![p4("1"), p4("q*t^-1")]);
    let s2 = apply_twist(&s1, T);
    assert_eq!(s2.config, UP);
    assert_eq!(s2.coeffs, vec![p4("1"), p4("q*s*t^-1 + q^3*s*t^-2")]);
    let r = apply_twist(&s0, R);
    assert_eq!(r.config, OP);
    assert_eq!(r.coeffs, vec![p4("1"), p4("0")]);
}

fn torus(k: u64) -> TangleDesc {
    TangleDesc::from_cf(ContinuedFraction::new(vec![k]).unwrap())
}

/// At s = 1 the weight-1 part of T(k, 1) is the sum of q^(2m-1) t^-m; the
/// s-exponents alternate in pairs, as forced by TUP (s^k) and TUPs (s^h).
#[test]
fn torus_tangle_pattern() {
    for k in 1..=10u64 {
        let (st, shift) = poincare_polynomial(&torus(k), 1, UP);
        assert_eq!(shift, ExponentVector::default());
        assert_eq!(st.coeffs[0], p4("1"));
        let at_one = substitute(&st.coeffs[1], &Bindings::new().s(Binding::Sign(1))).unwrap().into_poly4().unwrap();
        let expect: LaurentPoly4 = (1..=k as i64).map(|m| LaurentPoly4::mono(0, 2 * m - 1, 0, -m)).sum();
        assert_eq!(at_one, expect, "k={k}");
    }
    assert_eq!(poincare_polynomial(&torus(3), 1, UP).0.coeffs[1], p4("q*t^-1 + q^3*s^2*t^-2 + q^5*s^2*t^-3"));
    assert_eq!(
        poincare_polynomial(&torus(4), 1, UP).0.coeffs[1],
        p4("q*s*t^-1 + q^3*s*t^-2 + q^5*s^3*t^-3 + q^7*s^3*t^-4")
    );
}

#[test]
fn trefoil_tangle_table() {
    let (st, shift) = poincare_polynomial(&TangleDesc::from_fraction(3, 1).unwrap(), 2, UP);
    assert_eq!(counts(&st), vec![1, 3, 9]);
    assert_eq!(shift, ExponentVector::default());
    assert_eq!(st.coeffs[1], p4("q*t^-1 + q^3*s^2*t^-2 + q^5*s^2*t^-3"));
    let w2 = p4("q^2*t^-2 + q^6*s^2*t^-3 + q^8*s^2*t^-4 + q^4*s^2*t^-3 + q^8*s^4*t^-4 \
                 + q^10*s^4*t^-5 + q^6*s^2*t^-4 + q^12*s^4*t^-5 + q^14*s^4*t^-6");
    assert_eq!(st.coeffs[2], w2);
}

#[test]
fn small_counts_and_empty_word() {
    let (st, _) = poincare_polynomial(&TangleDesc::from_fraction(2, 1).unwrap(), 2, UP);
    assert_eq!(counts(&st), vec![1, 2, 4]);
    for n in 1..=5u64 {
        let (st, _) = poincare_polynomial(&TangleDesc::from_fraction(2 * n + 1, 1).unwrap(), 1, UP);
        assert_eq!(counts(&st), vec![1, 2 * n + 1]);
    }
    for start in [UP, OP] {
        let (st, shift) = poincare_polynomial(&TangleDesc::trivial_horizontal(), 3, start);
        assert_eq!(st, ComplexState::start(3, start));
        assert_eq!(shift, ExponentVector::default());
    }
}

#[test]
fn configs_follow_automaton_for_short_words() {
    for len in 0..=8 {
        for bits in 0..(1u32 << len) {
            let w: Vec<TwistMove> = (0..len).map(|i| if bits >> i & 1 == 1 { T } else { R }).collect();
            for start in [UP, OP] {
                let st = TwistEngine::new().run(&w, 1, start);
                assert_eq!(st.config, final_config(start, &w));
            }
        }
    }
}

/// Weight-h count is L^h R^(j-h) with (L, R) = (p, q) for odd-length
/// expansions and (q, p) for even-length ones.
#[test]
fn count_law() {
    for p in 2..=13u64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let c = fraction_to_cf(p, q).unwrap();
            for cf in [c.clone(), c.alternate().unwrap()] {
                let t = TangleDesc::from_cf(cf.clone());
                let (l, r) = if cf.len() % 2 == 1 { (p, q) } else { (q, p) };
                assert_eq!(intersection_numbers(&t.word), (l, r));
                for j in 1..=3u32 {
                    for start in [UP, OP] {
                        let st = TwistEngine::new().run(&t.word, j, start);
                        let expect: Vec<u64> = (0..=j).map(|h| l.pow(h) * r.pow(j - h)).collect();
                        assert_eq!(counts(&st), expect, "{cf} j={j} {start}");
                    }
                }
            }
        }
    }
}

#[test]
fn rule_table_shape() {
    let mut e = TwistEngine::new();
    for rule in RuleId::ALL {
        for j in 0..=3u32 {
            for k in 0..=j {
                for h in rule.range(j, k) {
                    let c = e.coefficient(rule, j, k, h).clone();
                    assert!(c.all_nonnegative());
                    assert!(c.terms().keys().all(|m| m.e_t == -(h as i64)));
                    let n = c.eval_ones();
                    let (top, bot) = if rule.is_top() { (h, k) } else { (j - h, k - h) };
                    let binom = (0..bot).fold(BigInt::from(1), |acc, i| acc * (top - i) / (i + 1));
                    assert_eq!(n, binom);
                }
            }
        }
    }
}

#[test]
fn mutation_changes_output() {
    let t = TangleDesc::from_fraction(3, 1).unwrap();
    let good = TwistEngine::new().run(&t.word, 2, UP);
    let bad = TwistEngine::with_mutation(Mutation { rule: RuleId::TUPs, q_offset: 2 }).run(&t.word, 2, UP);
    assert_ne!(good, bad);
    assert_eq!(generator_count(&good), generator_count(&bad));
}

fn subst_state(s: &ComplexState, n: i64, m: i64) -> Vec<LaurentPoly4> {
    s.coeffs.iter().map(|p| substitute(p, &Bindings::color(n, m)).unwrap().into_poly4().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn nonnegative_and_weight_sound(bits in prop::collection::vec(prop::bool::ANY, 0..7), j in 1u32..4, op in prop::bool::ANY) {
        let mut e = TwistEngine::new();
        let mut st = ComplexState::start(j, if op { OP } else { UP });
        for m in word_of(&bits) {
            let lowest = st.coeffs.iter().position(|p| !p.is_zero()).unwrap();
            let highest = st.coeffs.iter().rposition(|p| !p.is_zero()).unwrap();
            st = e.apply_twist(&st, m);
            prop_assert!(st.is_nonnegative());
            prop_assert_eq!(st.coeffs.len(), j as usize + 1);
            match m {
                T => prop_assert!(st.coeffs[..lowest].iter().all(LaurentPoly4::is_zero)),
                R => prop_assert!(st.coeffs[highest + 1..].iter().all(LaurentPoly4::is_zero)),
            }
        }
    }

    #[test]
    fn specialization_commutes(bits in prop::collection::vec(prop::bool::ANY, 0..6), j in 1u32..3, n in 2i64..7, m in -2i64..3) {
        let w = word_of(&bits);
        let mut e = TwistEngine::new();
        let end = subst_state(&e.run(&w, j, UP), n, m);
        let mut st = ComplexState::start(j, UP);
        for mv in &w {
            st = e.apply_twist(&st, *mv);
            st.coeffs = subst_state(&st, n, m);
        }
        prop_assert_eq!(end, st.coeffs);
    }
}
