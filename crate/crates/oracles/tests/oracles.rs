use qtangle_oracles::diagram::two_bridge;
use qtangle_oracles::{homfly, kauffman, wirtinger, LPoly};

/// Word of the continued fraction: a_r tops, a_{r-1} rights, …
fn word(cf: &[u64]) -> Vec<bool> {
    let mut w = Vec::new();
    for (n, &a) in cf.iter().rev().enumerate() {
        w.extend(std::iter::repeat_n(n % 2 == 0, a as usize));
    }
    w
}

fn closure(cf: &[u64], parallel: bool) -> Option<qtangle_oracles::diagram::Diagram> {
    two_bridge(&word(cf), parallel, cf.len() % 2 == 1)
}

fn q(terms: &[(i64, i128)]) -> LPoly<1> {
    let mut p = LPoly::zero();
    for (e, c) in terms {
        p.add_term([*e], *c);
    }
    p
}

fn flip(p: &LPoly<1>) -> LPoly<1> {
    LPoly(p.0.iter().map(|(e, c)| ([-e[0]], *c)).collect())
}

/// |f(i)|^2 where q = i, i.e. t = q^2 = -1.
fn det_sq(p: &LPoly<1>) -> i128 {
    let (mut re, mut im) = (0i128, 0i128);
    for (e, c) in &p.0 {
        match e[0].rem_euclid(4) {
            0 => re += c,
            1 => im += c,
            2 => re -= c,
            _ => im -= c,
        }
    }
    re * re + im * im
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn cf_of(mut p: u64, mut qq: u64) -> Vec<u64> {
    let mut v = vec![];
    while qq != 0 {
        v.push(p / qq);
        (p, qq) = (qq, p % qq);
    }
    v
}

#[test]
fn trefoil_and_hopf_jones() {
    let t = closure(&[3], true).unwrap();
    assert_eq!(t.components, 1);
    assert_eq!(t.crossings.len(), 3);
    let j = kauffman::jones(&t).normalized();
    let a = q(&[(0, 1), (4, 1), (6, -1)]);
    assert!(j == a || j == flip(&a).normalized(), "{j:?}");
    let h = closure(&[2], true).unwrap();
    assert_eq!(h.components, 2);
    let j = kauffman::jones(&h).normalized();
    assert!(j == q(&[(0, 1), (4, 1)]), "{j:?}");
}

#[test]
fn determinants_equal_numerators() {
    for p in 2..=11u64 {
        for qq in 1..p {
            if gcd(p, qq) != 1 {
                continue;
            }
            let c = cf_of(p, qq);
            for par in [true, false] {
                if let Some(d) = closure(&c, par) {
                    assert_eq!(d.components, if p % 2 == 0 { 2 } else { 1 }, "{c:?}");
                    let j = kauffman::jones(&d);
                    assert_eq!(det_sq(&j), (p * p) as i128, "{c:?}");
                }
            }
        }
    }
}

#[test]
fn homfly_specializes_to_jones() {
    let t = closure(&[3], true).unwrap();
    let p = homfly::homfly_az(&t);
    // 2a^-2 - a^-4 + a^-2 z^2, or its mirror
    let mut e = LPoly::zero();
    e.add_term([-2, 0], 2);
    e.add_term([-4, 0], -1);
    e.add_term([-2, 2], 1);
    let mirror = LPoly(e.0.iter().map(|(k, c)| ([-k[0], k[1]], *c)).collect());
    assert!(p == e || p == mirror, "{p:?}");
    for c in [vec![3u64], vec![2, 2], vec![3, 2], vec![2, 1, 1], vec![4], vec![1, 3]] {
        for par in [true, false] {
            if let Some(d) = closure(&c, par) {
                let s2 = homfly::sl_n_reduced(&d, 2).normalized();
                let j = kauffman::jones(&d).normalized();
                assert!(s2 == j || s2 == flip(&j).normalized(), "{c:?}");
            }
        }
    }
}

#[test]
fn alexander_examples() {
    let x = |e: &[([i64; 2], i128)]| {
        let mut p = LPoly::zero();
        for (k, c) in e {
            p.add_term(*k, *c);
        }
        p
    };
    let t = closure(&[3], true).unwrap();
    assert_eq!(wirtinger::alexander(&t), x(&[([0, 0], 1), ([1, 0], -1), ([2, 0], 1)]));
    let h = closure(&[2], true).unwrap();
    assert_eq!(wirtinger::alexander(&h), LPoly::one());
    let t4 = closure(&[4], true).unwrap();
    assert_eq!(wirtinger::alexander(&t4), x(&[([0, 0], 1), ([1, 1], 1)]));
}
