use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use qtangle::alexander::*;
use qtangle::geom::build_diagram;
use qtangle::qsymbols::*;
use qtangle::tangle::*;
use qtangle::Error;
use qtangle_oracles::{diagram, wirtinger};
use BoundaryConfig::{OP, UP};

fn tangle(parts: &[u64]) -> TangleDesc {
    TangleDesc::from_cf(ContinuedFraction::new(parts.to_vec()).unwrap())
}

/// Both expansions of every coprime `p/q` with even `p <= max_p`.
fn even_sample(max_p: u64) -> Vec<TangleDesc> {
    let mut out = vec![];
    for p in (2..=max_p).step_by(2) {
        for q in 1..p {
            if p.gcd(&q) == 1 {
                let cf = fraction_to_cf(p, q).unwrap();
                out.extend(cf.alternate().map(TangleDesc::from_cf));
                out.push(TangleDesc::from_cf(cf));
            }
        }
    }
    out
}

fn mva(s: &str) -> MVAPoly {
    s.parse().unwrap()
}

/// `Δ(u², v²)` from the Wirtinger presentation of the oracle's closed diagram.
fn oracle(t: &TangleDesc, start: BoundaryConfig) -> MVAPoly {
    let word: Vec<bool> = t.word.iter().map(|m| *m == TwistMove::Top).collect();
    let lr = t.cf.as_ref().unwrap().len() % 2 == 1;
    let d = diagram::two_bridge(&word, start == UP, lr).unwrap();
    let a = wirtinger::alexander(&d);
    MVAPoly::from_terms(a.0.iter().map(|(e, c)| (UV::new(2 * e[0], 2 * e[1]), BigInt::from(*c))))
}

fn word(d_cf: &[u64], start: BoundaryConfig) -> GroupWord {
    fundamental_group_word(&build_diagram(&tangle(d_cf), start)).unwrap()
}

fn letters(s: &str) -> GroupWord {
    let letters = s
        .split_whitespace()
        .map(|l| Letter {
            generator: if l.starts_with('u') { Generator::U } else { Generator::V },
            inverse: l.ends_with("-2"),
        })
        .collect();
    GroupWord { letters }
}

#[test]
fn hopf_word() {
    let w = word(&[2], UP);
    assert_eq!(w.to_string(), "v^2 u^2 v^-2 u^-2");
    assert_eq!(w.abelianization(), UV::default());
    let count = |g: Generator| w.letters.iter().filter(|l| l.generator == g).count();
    assert_eq!((count(Generator::U), count(Generator::V)), (2, 2));
    assert!(fox_alexander(&w).unwrap().equal_up_to_monomial(&MVAPoly::one(), true));
}

#[test]
fn word_lengths_are_twice_p() {
    for t in even_sample(12) {
        for start in [UP, OP] {
            let w = fundamental_group_word(&build_diagram(&t, start)).unwrap();
            assert_eq!(w.len() as u64, 2 * t.p, "{t}");
            assert_eq!(w.abelianization(), UV::default(), "{t}");
        }
    }
}

#[test]
fn fox_examples() {
    assert!(fox_alexander(&GroupWord::default()).unwrap().is_zero());
    let w = word(&[4], UP);
    assert_eq!(w.to_string(), "v^2 u^2 v^2 u^2 v^-2 u^-2 v^-2 u^-2");
    assert_eq!(fox_alexander(&w).unwrap(), mva("1 + u^2*v^2"));
    assert!(fox_alexander(&w).unwrap().equal_up_to_monomial(&oracle(&tangle(&[4]), UP), true));
    assert!(fox_alexander(&word(&[4], OP)).unwrap().equal_up_to_monomial(&mva("1 + u^2*v^-2"), true));
    let e = fox_alexander(&letters("v^2")).unwrap_err();
    assert!(matches!(e, Error::InexactDivision(_)));
}

#[test]
fn odd_p_is_rejected() {
    for cf in [&[3u64][..], &[2, 2], &[1, 1, 1]] {
        let d = build_diagram(&tangle(cf), UP);
        let e = fundamental_group_word(&d).unwrap_err();
        assert!(e.to_string().contains("knot"), "{e}");
        assert!(geometric_alexander(&d).is_err());
    }
    assert!(geometric_alexander(&build_diagram(&TangleDesc::trivial_horizontal(), UP)).is_err());
}

#[test]
fn geometric_examples() {
    let hopf = geometric_alexander(&build_diagram(&tangle(&[2]), UP)).unwrap();
    assert!(hopf.equal_up_to_monomial(&MVAPoly::one(), true));
    let t83 = tangle(&[2, 1, 2]);
    for start in [UP, OP] {
        let d = build_diagram(&t83, start);
        let g = geometric_alexander(&d).unwrap();
        assert!(g.equal_up_to_monomial(&fox_alexander(&fundamental_group_word(&d).unwrap()).unwrap(), true));
    }
}

/// One monomial per crossing of `α` with the far bridge, `p/2` of them.
#[test]
fn geometric_term_count() {
    for t in even_sample(12) {
        let d = build_diagram(&t, UP);
        assert_eq!(d.far_bridge_windings().len() as u64, t.p / 2, "{t}");
    }
}

#[test]
fn both_routes_match_wirtinger_oracle() {
    for t in even_sample(12) {
        for start in [UP, OP] {
            let d = build_diagram(&t, start);
            let o = oracle(&t, start);
            let fox = fox_alexander(&fundamental_group_word(&d).unwrap()).unwrap();
            let geo = geometric_alexander(&d).unwrap();
            assert!(fox.equal_up_to_monomial(&o, true), "{t} start={start}: {fox} vs {o}");
            assert!(geo.equal_up_to_monomial(&o, true), "{t} start={start}: {geo} vs {o}");
        }
    }
}

/// The orientation matters: the two starts give different polynomials for
/// `T(4,1)`, and the oracle tells them apart the same way.
#[test]
fn orientation_distinguishes_torus_links() {
    let t = tangle(&[4]);
    let (a, b) = (oracle(&t, UP), oracle(&t, OP));
    assert!(!a.equal_up_to_monomial(&b, true));
    let fa = fox_alexander(&word(&[4], UP)).unwrap();
    assert!(!fa.equal_up_to_monomial(&b, true));
}

#[test]
fn torres_symmetry() {
    for t in even_sample(12) {
        for start in [UP, OP] {
            let d = fox_alexander(&fundamental_group_word(&build_diagram(&t, start)).unwrap()).unwrap();
            let inv = d.map_terms(|m, c| (UV::new(-m.e_u, -m.e_v), c.clone()));
            assert!(d.equal_up_to_monomial(&inv, true), "{t}");
        }
    }
}

#[test]
fn specialization_identity() {
    for t in even_sample(12) {
        for start in [UP, OP] {
            let r = verify_specialization(&t, start).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
    let r = verify_specialization(&tangle(&[2]), UP).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn specialization_detects_a_wrong_delta() {
    let lhs = specialized_stable(&tangle(&[4]), UP).unwrap();
    let wrong = fox_alexander(&word(&[6], UP)).unwrap();
    let rhs = &(&mva("1 - v^2") * &mva("1 - u^2")) * &wrong;
    assert!(!lhs.equal_up_to_monomial(&rhs, true));
}

fn arb_word(max: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((any::<bool>(), any::<bool>()), 0..max).prop_map(|v| GroupWord {
        letters: v
            .into_iter()
            .map(|(u, inverse)| Letter { generator: if u { Generator::U } else { Generator::V }, inverse })
            .collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// `∂(w₁w₂) = ∂w₁ + ab(w₁)·∂w₂`.
    #[test]
    fn fox_product_rule(w1 in arb_word(12), w2 in arb_word(12), u in any::<bool>()) {
        let g = if u { Generator::U } else { Generator::V };
        let ab = MVAPoly::monomial(w1.abelianization(), 1);
        let lhs = fox_derivative(&w1.concat(&w2), g);
        let rhs = &fox_derivative(&w1, g) + &(&ab * &fox_derivative(&w2, g));
        prop_assert_eq!(lhs, rhs);
    }

    /// `∂(w⁻¹) = -ab(w)⁻¹·∂w`.
    #[test]
    fn fox_inverse_rule(w in arb_word(16), u in any::<bool>()) {
        let g = if u { Generator::U } else { Generator::V };
        let a = w.abelianization();
        let inv = MVAPoly::monomial(UV::new(-a.e_u, -a.e_v), -1);
        prop_assert_eq!(fox_derivative(&w.inverse(), g), &inv * &fox_derivative(&w, g));
    }
}
