use num_integer::Integer;
use proptest::prelude::*;
use qtangle::tangle::*;
use TwistMove::{Right as R, Top as T};

fn cf(v: &[u64]) -> ContinuedFraction {
    ContinuedFraction::new(v.to_vec()).unwrap()
}

/// Exact rational evaluation by folding from the right, as an independent check.
fn eval(parts: &[u64]) -> (u64, u64) {
    let mut acc: Option<(u64, u64)> = None;
    for &a in parts.iter().rev() {
        acc = Some(match acc {
            None => (a, 1),
            Some((n, d)) => (a * n + d, n),
        });
    }
    let (n, d) = acc.unwrap();
    let g = n.gcd(&d);
    (n / g, d / g)
}

#[test]
fn fraction_examples() {
    assert_eq!(cf_to_fraction(&cf(&[3, 2])), (7, 2));
    assert_eq!(cf_to_fraction(&cf(&[2])), (2, 1));
    assert_eq!(cf_to_fraction(&cf(&[1, 1, 1])), (3, 2));
    assert_eq!(fraction_to_cf(7, 2).unwrap(), cf(&[3, 2]));
    assert_eq!(fraction_to_cf(2, 1).unwrap(), cf(&[2]));
    assert_eq!(fraction_to_cf(5, 2).unwrap(), cf(&[2, 2]));
    assert!(fraction_to_cf(6, 4).is_err());
    assert!(fraction_to_cf(2, 3).is_err());
    assert!(fraction_to_cf(3, 0).is_err());
    assert!(ContinuedFraction::new(vec![2, 0]).is_err());
    assert!(ContinuedFraction::new(vec![]).is_err());
}

#[test]
fn twist_word_examples() {
    assert_eq!(twist_word(&cf(&[3, 2])), vec![T, T, R, R, R]);
    assert_eq!(twist_word(&cf(&[2])), vec![T, T]);
    assert_eq!(twist_word(&cf(&[1, 1])), vec![T, R]);
    assert!(TangleDesc::trivial_horizontal().word.is_empty());
    assert!(TangleDesc::trivial_vertical().word.is_empty());
}

#[test]
fn automaton() {
    use BoundaryConfig::*;
    assert_eq!(config_step(UP, T), UPs);
    assert_eq!(config_step(UP, R), OP);
    for c in BoundaryConfig::ALL {
        for m in [T, R] {
            assert_eq!(config_step(config_step(c, m), m), c);
            assert_ne!(config_step(c, m), c);
        }
        assert_eq!(c.name().parse::<BoundaryConfig>().unwrap(), c);
    }
    // hexagon: alternating T and R returns after six steps, not before
    let mut c = UP;
    for i in 1..=6 {
        c = config_step(c, if i % 2 == 1 { T } else { R });
        assert_eq!(c == UP, i == 6);
    }
}

#[test]
fn both_expansions_agree_up_to_30() {
    for p in 2..=30u64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let c = fraction_to_cf(p, q).unwrap();
            assert!(c.is_canonical());
            assert_eq!(cf_to_fraction(&c), (p, q));
            let alt = c.alternate().unwrap();
            assert_eq!(cf_to_fraction(&alt), (p, q));
            assert_eq!(alt.alternate().unwrap(), c);
        }
    }
}

#[test]
fn parsers() {
    assert_eq!(parse_fraction("7/2").unwrap(), (7, 2));
    assert!(parse_fraction("7").is_err());
    assert_eq!("3,2".parse::<ContinuedFraction>().unwrap(), cf(&[3, 2]));
    assert!("3,x".parse::<ContinuedFraction>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn round_trips(parts in prop::collection::vec(1u64..6, 1..6)) {
        let c = ContinuedFraction::new(parts.clone()).unwrap();
        let (p, q) = cf_to_fraction(&c);
        prop_assert_eq!((p, q), eval(&parts));
        prop_assert_eq!(p.gcd(&q), 1);
        if p > q && q >= 1 {
            let back = fraction_to_cf(p, q).unwrap();
            prop_assert_eq!(cf_to_fraction(&back), (p, q));
            if c.is_canonical() {
                prop_assert_eq!(back, c.clone());
            }
        }
        let w = twist_word(&c);
        prop_assert_eq!(w.len() as u64, parts.iter().sum::<u64>());
    }

    #[test]
    fn automaton_deterministic(word in prop::collection::vec(prop::bool::ANY, 0..12)) {
        let w: Vec<TwistMove> = word.iter().map(|&b| if b { T } else { R }).collect();
        for c in BoundaryConfig::ALL {
            prop_assert_eq!(final_config(c, &w), final_config(c, &w));
            let mut back = final_config(c, &w);
            for m in w.iter().rev() {
                back = config_step(back, *m);
            }
            prop_assert_eq!(back, c);
        }
    }
}
