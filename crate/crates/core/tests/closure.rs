use num_bigint::BigInt;
use num_integer::Integer;
use qtangle::closure::*;
use qtangle::qsymbols::*;
use qtangle::tangle::*;
use qtangle::twist::TwistEngine;
use qtangle_oracles::{diagram, homfly, kauffman, LPoly};
use BoundaryConfig::{OP, UP};

fn from_oracle(p: &LPoly<1>) -> QLaurent {
    QLaurent::from_terms(p.0.iter().map(|(e, c)| (e[0], BigInt::from(*c))))
}

fn q(s: &str) -> QLaurent {
    s.parse().unwrap()
}

fn tangle(parts: &[u64]) -> TangleDesc {
    TangleDesc::from_cf(ContinuedFraction::new(parts.to_vec()).unwrap())
}

/// Both expansions of every coprime `p/q` with `2 <= p <= max_p`.
fn sample(max_p: u64) -> Vec<TangleDesc> {
    let mut out = vec![];
    for p in 2..=max_p {
        for qq in 1..p {
            if p.gcd(&qq) == 1 {
                let cf = fraction_to_cf(p, qq).unwrap();
                out.extend(cf.alternate().map(TangleDesc::from_cf));
                out.push(TangleDesc::from_cf(cf));
            }
        }
    }
    out
}

fn oracle_diagram(t: &TangleDesc, start: BoundaryConfig) -> Option<diagram::Diagram> {
    let word: Vec<bool> = t.word.iter().map(|m| *m == TwistMove::Top).collect();
    diagram::two_bridge(&word, start == UP, ClosureKind::for_tangle(t) == ClosureKind::LeftRight)
}

fn hopf_formula(n: i64, i: i64, j: i64) -> QLaurent {
    (0..=j).map(|k| &QLaurent::q_pow(k * (2 + n)) * &(&qbinom(n - i, k) * &qbinom(i, j - k))).sum()
}

#[test]
fn closed_up_examples() {
    assert_eq!(closed_up_value(1, 1, 0, 2).unwrap(), q("q^-2 + 2 + q^2"));
    assert!(closed_up_value(2, 1, 2, 4).unwrap().is_zero());
    for (i, j, n) in [(2, 2, 5), (3, 1, 4), (1, 1, 1)] {
        let direct = &qbinom(n - j, i) * &qbinom(n, j);
        assert_eq!(closed_up_value(i as u32, j as u32, j as u32, n as u32).unwrap(), direct);
    }
    assert!(closed_up_value(1, 2, 0, 3).is_err());
    assert!(closed_up_value(4, 2, 0, 3).is_err());
}

#[test]
fn reduced_stable_examples_and_coherence() {
    assert!(reduced_stable_closure(2, 0).is_s_free());
    let v = substitute_stable(&reduced_stable_closure(2, 1), &Bindings::color(5, 0)).unwrap().into_q().unwrap();
    assert_eq!(v, QRational::from(&qbinom(4, 1) * &qbinom(3, 1)));
    for j in 0..=3i64 {
        for k in 0..=j {
            for i in j..=5 {
                for n in i.max(1)..=8 {
                    let v = substitute_stable(&reduced_stable_closure(j as u32, k as u32), &Bindings::color(n, i - j))
                        .unwrap()
                        .into_q()
                        .unwrap();
                    let expect = &qbinom(n - k, j - k) * &qbinom(n - i, k);
                    assert_eq!(v, QRational::from(expect), "j={j} k={k} i={i} N={n}");
                }
            }
        }
    }
}

#[test]
fn hopf_reproduction() {
    let hopf = tangle(&[2]);
    for n in 2..=6i64 {
        for i in 1..n {
            for j in 1..=i {
                let v = colored_homfly(&hopf, i as u32, j as u32, n as u32, UP, true).unwrap();
                assert!(v.poly.equal_up_to_monomial(&hopf_formula(n, i, j), true), "N={n} i={i} j={j}");
            }
        }
    }
    let v = colored_homfly(&hopf, 1, 1, 2, UP, true).unwrap();
    assert_eq!(v.raw(), q("q^-1 + q^3"));
}

#[test]
fn trivial_tangle_closes_to_the_unlink() {
    let unlink = TangleDesc::trivial_vertical();
    for (n, i, j) in [(3i64, 1i64, 1i64), (5, 3, 2), (6, 3, 3)] {
        let v = colored_homfly(&unlink, i as u32, j as u32, n as u32, UP, false).unwrap();
        assert_eq!(v.raw(), &qbinom(n, i) * &qbinom(n, j));
        let v = colored_homfly(&unlink, i as u32, j as u32, n as u32, UP, true).unwrap();
        assert_eq!(v.raw(), qbinom(n, j));
        let (st, _, _) = color_stable_homfly(&unlink, j as u32, UP).unwrap();
        assert!(st.is_s_free());
        assert!(st.equal_up_to_monomial(&a_binomial(0, j as u32), false));
    }
}

/// Every closure family against the skein-theoretic HOMFLY oracle at
/// `i = j = 1`; the oracle's diagrams use the opposite crossing convention,
/// hence the global `q ↦ q^-1`.
#[test]
fn fundamental_color_matches_skein_oracle() {
    let mut seen = std::collections::BTreeSet::new();
    for t in sample(13) {
        for start in [UP, OP] {
            let Some(d) = oracle_diagram(&t, start) else {
                assert!(colored_homfly(&t, 1, 1, 3, start, true).is_err(), "{t} start={start}");
                continue;
            };
            for n in 2..=5u32 {
                let v = colored_homfly(&t, 1, 1, n, start, true).unwrap();
                let o = from_oracle(&homfly::sl_n_reduced(&d, n as i64));
                assert!(v.poly.bar().equal_up_to_monomial(&o, true), "{t} start={start} N={n}");
            }
            seen.insert((t.final_config(start), ClosureKind::for_tangle(&t) == ClosureKind::LeftRight));
        }
    }
    assert_eq!(seen.len(), 8);
}

#[test]
fn trefoil_matches_jones() {
    let t = tangle(&[3]);
    let v = colored_homfly(&t, 1, 1, 2, UP, true).unwrap();
    let o = from_oracle(&kauffman::jones(&oracle_diagram(&t, UP).unwrap()));
    assert!(v.poly.bar().equal_up_to_monomial(&o, true));
    assert!(!v.poly.equal_up_to_monomial(&o, true));
}

/// The two expansions of one fraction close up to mirror-image links: the
/// expansion ending in 1 builds the rotated inverse tangle and is closed the
/// other way round. Orientation is matched by trying both starts.
#[test]
fn expansions_agree_up_to_mirror() {
    for p in 2..=11u64 {
        for qq in 1..p {
            if p.gcd(&qq) != 1 {
                continue;
            }
            let cf = fraction_to_cf(p, qq).unwrap();
            let Some(alt) = cf.alternate() else { continue };
            let (t1, t2) = (TangleDesc::from_cf(cf), TangleDesc::from_cf(alt));
            for (n, i, j) in [(3, 1, 1), (4, 2, 1), (4, 2, 2), (5, 3, 2)] {
                for s1 in [UP, OP] {
                    let Ok(a) = colored_homfly(&t1, i, j, n, s1, true) else { continue };
                    let matched = [UP, OP].into_iter().any(|s2| {
                        colored_homfly(&t2, i, j, n, s2, true)
                            .is_ok_and(|b| b.poly.equal_up_to_monomial(&a.poly.bar(), true))
                    });
                    assert!(matched, "{p}/{qq} ({n},{i},{j}) start={s1}");
                }
            }
        }
    }
}

#[test]
fn knot_closures_reject_unequal_colors() {
    let e = colored_homfly(&tangle(&[3]), 2, 1, 4, UP, true).unwrap_err();
    assert!(matches!(e, qtangle::Error::ClosureUnavailable(_)));
    assert!(color_stable_homfly(&tangle(&[3]), 1, UP).is_err());
}

fn classical(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, l| acc * (n - l) / (l + 1))
}

/// At `q = 1` the unreduced value is the signed integer obtained by summing
/// classical binomial closures against the `t = -1, a = s = q = 1` weights.
#[test]
fn classical_limit_matches_closure_sum() {
    let mut engine = TwistEngine::new();
    for t in sample(9) {
        for start in [UP, OP] {
            for (n, i, j) in [(3i64, 1i64, 1i64), (4, 2, 2), (5, 2, 2), (5, 3, 2), (6, 3, 3)] {
                let st = engine.run(&t.word, j as u32, start);
                let kind = ClosureKind::for_tangle(&t);
                let Ok(v) = colored_homfly_of_state(&st, kind, i as u32, j as u32, n as u32, false) else { continue };
                let mut expect = BigInt::from(0);
                for (k, c) in st.coeffs.iter().enumerate() {
                    let w: BigInt =
                        c.terms().iter().map(|(e, c)| if e.e_t % 2 == 0 { c.clone() } else { -c.clone() }).sum();
                    let k = k as i64;
                    let kk = if kind == ClosureKind::LeftRight { k } else { j - k };
                    // UP-like families close to C(N-k,i)C(j,k)C(N,j); OP-like to C(N-k,N-j)C(i,k)C(N,i).
                    let up_like = matches!(
                        st.config,
                        BoundaryConfig::UP | BoundaryConfig::UPs | BoundaryConfig::RI | BoundaryConfig::RIs
                    );
                    let cl = if up_like {
                        classical(n - kk, i) * classical(j, kk) * classical(n, j)
                    } else {
                        classical(n - kk, n - j) * classical(i, kk) * classical(n, i)
                    };
                    expect += w * cl;
                }
                assert_eq!(v.eval_one(), expect, "{t} start={start} ({n},{i},{j})");
            }
        }
    }
}
