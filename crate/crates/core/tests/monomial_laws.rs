mod common;

use common::*;
use proptest::prelude::*;
use sympow_core::Monomial;

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn lcm_laws(a in monomial(4, 4), b in monomial(4, 4), c in monomial(4, 4)) {
        let (u, v, w) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        prop_assert_eq!(u.lcm(&v), v.lcm(&u));
        prop_assert_eq!(u.lcm(&v).lcm(&w), u.lcm(&v.lcm(&w)));
        prop_assert_eq!(u.lcm(&u), u.clone());
        prop_assert!(u.divides(&u.lcm(&v)));
    }

    #[test]
    fn minimalize_matches_oracle(g in gens(4, 3, 8), extra in prop::collection::vec(monomial(4, 2), 0..5)) {
        let r = ring(4);
        let i = ideal(&r, &g);
        prop_assert_eq!(exps_of(&i), minimal(g.clone()));
        // Adding multiples of generators changes nothing.
        let mut bigger = g.clone();
        for (k, e) in extra.iter().enumerate() {
            bigger.push(mul(&g[k % g.len()], e));
        }
        prop_assert_eq!(ideal(&r, &bigger), i.clone());
        let again = ideal(&r, &exps_of(&i));
        prop_assert_eq!(again, i);
    }

    #[test]
    fn intersection_by_membership(
        k in gens(5, 3, 4),
        l in gens(5, 3, 4),
        probes in prop::collection::vec(monomial(5, 3), 200),
    ) {
        let r = ring(5);
        let (ki, li) = (ideal(&r, &k), ideal(&r, &l));
        let meet = ki.intersect(&li).unwrap();
        prop_assert_eq!(exps_of(&meet), intersect(&k, &l));
        for w in probes.iter().filter(|w| w.iter().sum::<u32>() <= 8) {
            let m = Monomial::new(w.clone());
            prop_assert_eq!(meet.contains(&m).unwrap(), member(&k, w) && member(&l, w));
        }
    }

    #[test]
    fn power_laws(g in gens(3, 2, 3), a in 0u32..3, b in 0u32..3) {
        let r = ring(3);
        let i = ideal(&r, &g);
        let lhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &i.power(a + b).unwrap());
        prop_assert_eq!(exps_of(&lhs), power(&g, 3, a + b));
    }

    #[test]
    fn quotient_and_saturation(g in gens(4, 3, 5), u in nonunit_monomial(4, 2)) {
        let r = ring(4);
        let i = ideal(&r, &g);
        let um = Monomial::new(u.clone());
        let q = i.quotient(&um).unwrap();
        for h in q.generators() {
            prop_assert!(i.contains(&um.checked_mul(h).unwrap()).unwrap());
        }
        // Oracle: (I : u) is generated by g / gcd(g, u).
        let oracle = minimal(g.iter().map(|e| e.iter().zip(&u).map(|(x, y)| x.saturating_sub(*y)).collect()).collect());
        prop_assert_eq!(exps_of(&q), oracle);
        let (sat, steps) = i.saturate_counting(&um).unwrap();
        let lcm_degree = i.generator_lcm().map_or(0, |l| l.degree());
        prop_assert!(steps as u64 <= lcm_degree, "steps {} > deg lcm {}", steps, lcm_degree);
        prop_assert_eq!(&sat.quotient(&um).unwrap(), &sat);
        // Saturation by u equals saturation by supp(u): drop those coordinates.
        let support: Vec<usize> = (0..4).filter(|&j| u[j] > 0).collect();
        let oracle = minimal(g.iter().map(|e| {
            e.iter().enumerate().map(|(j, &x)| if support.contains(&j) { 0 } else { x }).collect()
        }).collect());
        prop_assert_eq!(exps_of(&sat), oracle);
    }

    #[test]
    fn results_ignore_generator_order(g in gens(4, 3, 6), h in gens(4, 3, 4), seed in any::<u64>()) {
        let r = ring(4);
        let mut shuffled = g.clone();
        let len = shuffled.len();
        for k in 0..len {
            let j = (seed.rotate_left(k as u32) as usize) % len;
            shuffled.swap(k, j);
        }
        shuffled.reverse();
        let (a, b, hh) = (ideal(&r, &g), ideal(&r, &shuffled), ideal(&r, &h));
        prop_assert_eq!(a.generators(), b.generators());
        prop_assert_eq!(exps_of(&a.intersect(&hh).unwrap()), exps_of(&hh.intersect(&b).unwrap()));
        prop_assert_eq!(exps_of(&a.power(2).unwrap()), exps_of(&b.power(2).unwrap()));
        prop_assert_eq!(exps_of(&a.radical()), exps_of(&b.radical()));
    }
}

/// `(x_1, …, x_k)^n` is generated by all monomials of degree n in those variables.
#[test]
fn prime_power_is_the_multiset_formula() {
    let r = ring(4);
    for n in 1..=4u32 {
        let p = ideal(&r, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let expected: Vec<Exps> = minimal(
            boxed(4, n).into_iter().filter(|e| e[3] == 0 && e.iter().sum::<u32>() == n).collect(),
        );
        assert_eq!(exps_of(&p.power(n).unwrap()), expected);
        // C(n + 2, 2) monomials of degree n in three variables.
        assert_eq!(expected.len() as u32, (n + 1) * (n + 2) / 2);
    }
}

#[test]
fn square_of_the_non_squarefree_example() {
    let r = sympow_core::Ring::shared(&["x", "y", "z", "t"]).unwrap();
    let g = vec![vec![1, 0, 1, 0], vec![1, 0, 0, 2], vec![0, 2, 1, 0]];
    let i = ideal(&r, &g);
    let sq = i.power(2).unwrap();
    let brute = minimal(g.iter().flat_map(|a| g.iter().map(move |b| mul(a, b))).collect());
    assert_eq!(exps_of(&sq), brute);
    assert!(sq.generators().iter().all(|m| m.degree() <= 6));
    // (I^2 : (yt)^∞) by repeated quotients until stable.
    let yt = Monomial::new(vec![0, 1, 0, 1]);
    let mut cur = sq.clone();
    loop {
        let next = cur.quotient(&yt).unwrap();
        if next == cur {
            break;
        }
        cur = next;
    }
    assert_eq!(cur, sq.saturate(&yt).unwrap());
    assert!(cur.contains(&Monomial::new(vec![2, 0, 0, 0])).unwrap());
}
