//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{elem, elements_up_to, random_element};
use num::rational::BigRational;
use num::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use castella::arith::{big_omega, big_omega_co, lcm, lcm_pair, pdm, pdm_co, DivisorCache};
use castella::castle::{is_castled_free, strong_castle, weak_castle};
use castella::complexity::{tau0_estimate, tau_powers};
use castella::functions::{convolve, delta_one, inverse, mu, mu_fn, one, rational};
use castella::instances::{folner_ratio, parse_natural, uv_multiply, UvElement};
use castella::word::{enumerate_words, max_word, min_word, multiply, Element, Word};
use castella::{parse_element, word_precedes};

const CAP: usize = 1_000_000;

#[test]
fn criterion_01_divisor_golden() {
    let divs = DivisorCache::new();
    let u = parse_element("p0^2 p1 p4").unwrap();
    let got: BTreeSet<Element> = divs.divisors(&u).unwrap().iter().cloned().collect();
    let expected: BTreeSet<Element> = [
        "1", "p0", "p1", "p0^2", "p0 p2", "p0^2 p1", "p0^2 p3", "p0^2 p1 p4",
    ]
    .iter()
    .map(|s| parse_element(s).unwrap())
    .collect();
    assert_eq!(got, expected);

    let v = parse_element("p0 p2 p3").unwrap();
    let got: BTreeSet<Element> = divs.divisors(&v).unwrap().iter().cloned().collect();
    let expected: BTreeSet<Element> = ["1", "p0", "p1", "p0 p2", "p1 p2", "p0 p2 p3"]
        .iter()
        .map(|s| parse_element(s).unwrap())
        .collect();
    assert_eq!(got, expected);
    println!("criterion 1 PASS: divisor sets match the two golden lists exactly");
}

#[test]
fn criterion_02_gcd_golden() {
    let divs = DivisorCache::new();
    let u = parse_element("p0^2 p1 p4").unwrap();
    let v = parse_element("p0 p2 p3").unwrap();
    assert_eq!(
        divs.gcd(&[u, v]).unwrap(),
        parse_element("p0 p2").unwrap()
    );
    println!("criterion 2 PASS: gcd(p0^2 p1 p4, p0 p2 p3) = p0 p2");
}

#[test]
fn criterion_03_word_set_golden() {
    let u = elem(&[2, 4, 6]);
    let words = enumerate_words(&u, CAP).unwrap();
    let w = |ix: &[u32]| Word::from_indices(ix);
    let bottom = w(&[4, 3, 2]);
    let a = w(&[3, 5, 2]);
    let b = w(&[4, 2, 4]);
    let c = w(&[3, 2, 6]);
    let d = w(&[2, 5, 4]);
    let top = w(&[2, 4, 6]);
    let expected: BTreeSet<Word> = [&bottom, &a, &b, &c, &d, &top].iter().map(|&x| x.clone()).collect();
    assert_eq!(words, expected);
    assert_eq!(min_word(&u), bottom);
    assert_eq!(max_word(&u), top);

    // the order diagram: bottom below the two chains a -> c and b -> d,
    // everything below top
    let le = |x: &Word, y: &Word| word_precedes(x, y).unwrap();
    for x in [&a, &b, &c, &d, &top] {
        assert!(le(&bottom, x));
    }
    assert!(le(&a, &c) && le(&b, &d));
    for x in [&a, &b, &c, &d] {
        assert!(le(x, &top));
    }
    // parallel branches are incomparable in both directions
    for (x, y) in [(&a, &b), (&a, &d), (&b, &c), (&c, &d)] {
        assert!(!le(x, y) && !le(y, x));
    }
    println!("criterion 3 PASS: word set, extremal words, and order diagram of p2 p4 p6");
}

#[test]
fn criterion_04_prime_capture_golden() {
    let u = parse_element("p0 p3^2 p5").unwrap();
    let m = pdm(&u);
    assert_eq!(m.iter().collect::<Vec<_>>(), vec![(0, 1), (2, 2)]);
    let mc = pdm_co(&u);
    assert_eq!(mc.iter().collect::<Vec<_>>(), vec![(0, 1), (3, 1), (5, 1)]);

    let v = parse_element("p0 p1^2").unwrap();
    assert_eq!(big_omega(&v), 1);
    assert_eq!(big_omega_co(&v), 2);
    println!("criterion 4 PASS: prime multisets of p0 p3^2 p5 and p0 p1^2");
}

#[test]
fn criterion_05_lcm_golden() {
    let p = |s: &str| parse_element(s).unwrap();
    assert_eq!(lcm_pair(&p("p0"), &p("p1")), p("p0 p2"));
    assert_eq!(lcm_pair(&p("p0^2"), &p("p1^2")), p("p0^2 p3^2"));
    assert_eq!(
        lcm_pair(&p("p0 p1 p2 p8"), &p("p3")),
        multiply(&p("p0 p1 p2 p8"), &p("p6"))
    );
    println!("criterion 5 PASS: the three golden lcm values");
}

#[test]
fn criterion_06_prime_power_laws() {
    let divs = DivisorCache::new();
    for j in 0..=4u32 {
        for k in 1..=10u32 {
            assert_eq!(
                divs.tau(&Element::prime_power(j, k)).unwrap(),
                u64::from(k) + 1
            );
        }
    }
    for triple in [[0u32, 1, 2], [0, 2, 4], [1, 3, 5], [2, 3, 6]] {
        let l = lcm(&triple.map(Element::prime));
        assert_eq!(divs.tau(&l).unwrap(), 8);
    }
    for (q1, q2) in [(0u32, 1u32), (0, 3), (1, 2), (2, 5)] {
        for m1 in 1..=3u32 {
            for m2 in 1..=3u32 {
                let l = lcm(&[Element::prime_power(q1, m1), Element::prime_power(q2, m2)]);
                assert_eq!(
                    divs.tau(&l).unwrap(),
                    u64::from(m1 + 1) * u64::from(m2 + 1),
                    "q1 = p{q1}, q2 = p{q2}, m1 = {m1}, m2 = {m2}"
                );
            }
        }
    }
    println!("criterion 6 PASS: tau on prime powers and lcms of prime powers");
}

#[test]
fn criterion_07_moebius_suite() {
    assert_eq!(mu(&Element::one()), 1);
    for j in 0..=4 {
        assert_eq!(mu(&Element::prime(j)), -1);
        assert_eq!(mu(&Element::prime_power(j, 2)), 0);
    }
    assert_eq!(mu(&elem(&[0, 2])), 1);

    let divs = Arc::new(DivisorCache::new());
    let moebius = inverse(&divs, &one()).unwrap();
    let mu_star_one = convolve(&divs, &mu_fn(), &one());
    let one_star_mu = convolve(&divs, &one(), &mu_fn());
    let delta = delta_one();
    for u in elements_up_to(4, 5) {
        assert_eq!(moebius.eval(&u).unwrap(), rational(mu(&u)), "u = {u}");
        assert_eq!(mu_star_one.eval(&u).unwrap(), delta.eval(&u).unwrap(), "u = {u}");
        assert_eq!(one_star_mu.eval(&u).unwrap(), delta.eval(&u).unwrap(), "u = {u}");
    }
    println!("criterion 7 PASS: Moebius values, inversion route, and both convolution identities");
}

#[test]
fn criterion_08_submultiplicativity_with_equality_case() {
    let divs = DivisorCache::new();
    let elems = elements_up_to(6, 4);
    let mut pairs = 0u64;
    let mut equalities = 0u64;
    for u in &elems {
        for v in &elems {
            if u.ind() + v.ind() > 6 {
                continue;
            }
            pairs += 1;
            let product = divs.tau(&multiply(u, v)).unwrap();
            let bound = divs.tau(u).unwrap() * divs.tau(v).unwrap();
            assert!(product <= bound, "tau({u} * {v}) = {product} > {bound}");
            let free = is_castled_free(u, v);
            assert_eq!(product == bound, free, "u = {u}, v = {v}");
            if free {
                equalities += 1;
            }
        }
    }
    println!(
        "criterion 8 PASS: tau(uv) <= tau(u) tau(v) with equality iff castled-free \
         ({pairs} ordered pairs, {equalities} equality cases)"
    );
}

#[test]
fn criterion_09_ind_identity() {
    let divs = DivisorCache::new();
    let elems = elements_up_to(6, 4);
    let mut pairs = 0u64;
    for u in &elems {
        for v in &elems {
            if u.ind() + v.ind() > 6 {
                continue;
            }
            pairs += 1;
            let g = divs.gcd(&[u.clone(), v.clone()]).unwrap();
            let l = lcm_pair(u, v);
            assert_eq!(g.ind() + l.ind(), u.ind() + v.ind(), "u = {u}, v = {v}");
        }
    }
    println!("criterion 9 PASS: ind(gcd) + ind(lcm) = ind(u) + ind(v) on {pairs} pairs");
}

#[test]
fn criterion_10_castling_laws() {
    let mut rng = StdRng::seed_from_u64(977);
    let mut weak_seen = 0;
    let mut strong_seen = 0;
    let mut composed = 0;
    let divs = DivisorCache::new();

    while weak_seen < 300 || strong_seen < 300 || composed < 300 {
        let u = random_element(&mut rng, 5, 6);
        let v = random_element(&mut rng, 5, 6);

        if weak_seen < 300 {
            if let Some(pair) = weak_castle(&u, &v) {
                weak_seen += 1;
                // product and ind preservation
                assert_eq!(multiply(&pair.left, &pair.right), multiply(&u, &v));
                assert_eq!(pair.left.ind(), v.ind());
                assert_eq!(pair.right.ind(), u.ind());
                // involution
                let back = weak_castle(&pair.left, &pair.right).expect("castling reverses");
                assert_eq!(back.left, u);
                assert_eq!(back.right, v);
            }
        }

        // composition: castle v over u2, then over u1, then in one step
        if composed < 300 {
            let u1 = random_element(&mut rng, 3, 6);
            if let Some(first) = weak_castle(&u, &v) {
                if let Some(second) = weak_castle(&u1, &first.left) {
                    composed += 1;
                    let whole = weak_castle(&multiply(&u1, &u), &v)
                        .expect("composed pair castles");
                    assert_eq!(whole.left, second.left);
                    assert_eq!(whole.right, multiply(&second.right, &first.right));
                }
            }
        }

        // decomposition of a strong castling across every split of u
        if strong_seen < 300 {
            if let Some(pair) = strong_castle(&u, &v) {
                strong_seen += 1;
                for (u1, u2) in divs.divisor_pairs(&u).unwrap() {
                    let tail = strong_castle(&u2, &v)
                        .unwrap_or_else(|| panic!("split ({u1}, {u2}) of {u} blocks on {v}"));
                    let head = strong_castle(&u1, &tail.left)
                        .unwrap_or_else(|| panic!("head {u1} blocks on {}", tail.left));
                    assert_eq!(head.left, pair.left);
                    assert_eq!(multiply(&head.right, &tail.right), pair.right);
                }
            }
        }
    }
    println!(
        "criterion 10 PASS: involution, preservation, composition, decomposition \
         (>= 300 samples each)"
    );
}

#[test]
fn criterion_11_complexity_brackets() {
    let divs = DivisorCache::new();
    for (n, tau) in tau_powers(&divs, &elem(&[0, 1]), 6).unwrap() {
        let lo = 1u64 << n;
        let hi = u64::from(n + 1) << n;
        assert!(lo <= tau && tau <= hi, "n = {n}: tau = {tau}");
    }
    for (k, tau) in tau_powers(&divs, &elem(&[0, 1, 2]), 4).unwrap() {
        let lo = 3u64.pow(k);
        let hi = u64::from(k + 1) * 3u64.pow(k);
        assert!(lo <= tau && tau <= hi, "k = {k}: tau = {tau}");
    }
    let est = tau0_estimate(&divs, &Element::prime_power(1, 3), 8).unwrap();
    for pair in est.samples.windows(2) {
        assert!(pair[1].nth_root < pair[0].nth_root);
    }
    assert!(*est.samples.last().map(|s| &s.nth_root).unwrap() > 1.0);
    assert_eq!(est.samples.last().unwrap().tau, 25);
    println!("criterion 11 PASS: tau brackets for (p0 p1)^n and (p0 p1 p2)^k, prime-power roots decrease");
}

#[test]
fn criterion_12_folner_ratio() {
    for n in [2u32, 5, 10] {
        for i in 0..3 {
            assert_eq!(
                folner_ratio(3, i, n, CAP).unwrap(),
                BigRational::new(BigInt::from(2), BigInt::from(n))
            );
        }
    }
    println!("criterion 12 PASS: boundary ratio 2/n for the 3-generator grid, exact rationals");
}

#[test]
fn criterion_13_uv_instance() {
    // string-rewriting oracle over the alphabet {U, V}: push every U left
    // past the V's, doubling them
    fn oracle(word: &[bool]) -> UvElement {
        // true = U, false = V
        let mut w = word.to_vec();
        while let Some(t) = w.windows(2).position(|p| !p[0] && p[1]) {
            w.splice(t..t + 2, [true, false, false]);
        }
        let m = w.iter().filter(|&&c| c).count() as u32;
        let n = w.iter().filter(|&&c| !c).count() as u64;
        UvElement::new(m, n)
    }

    let mut rng = StdRng::seed_from_u64(4242);
    for _ in 0..100 {
        let a = UvElement::new(rng.gen_range(0..4), rng.gen_range(0..6));
        let b = UvElement::new(rng.gen_range(0..4), rng.gen_range(0..6));
        let mut word: Vec<bool> = Vec::new();
        for e in [a, b] {
            word.extend(std::iter::repeat_n(true, e.u_pow as usize));
            word.extend(std::iter::repeat_n(false, e.v_pow as usize));
        }
        assert_eq!(uv_multiply(&a, &b).unwrap(), oracle(&word), "a = {a}, b = {b}");
    }

    // tau((2, 3)) = 7 by brute-force search over a bounding grid
    let target = UvElement::new(2, 3);
    let mut found = 0;
    for m1 in 0..=2u32 {
        for n1 in 0..=3u64 {
            for m2 in 0..=2u32 {
                for n2 in 0..=3u64 {
                    if uv_multiply(&UvElement::new(m1, n1), &UvElement::new(m2, n2)).unwrap()
                        == target
                    {
                        found += 1;
                    }
                }
            }
        }
    }
    assert_eq!(found, 7);

    // non-homogeneity witness: factorizations of (1, 2) with 2 and 3 letters
    let v = UvElement::new(0, 1);
    let u = UvElement::new(1, 0);
    assert_eq!(uv_multiply(&v, &u).unwrap(), UvElement::new(1, 2));
    assert_eq!(
        uv_multiply(&uv_multiply(&u, &v).unwrap(), &v).unwrap(),
        UvElement::new(1, 2)
    );
    println!("criterion 13 PASS: composition law vs string oracle, tau((2,3)) = 7, witness");
}

#[test]
fn criterion_14_natural_numbers_instance() {
    assert_eq!(parse_natural(12).unwrap().tau(), 6);
    assert_eq!(parse_natural(30).unwrap().mu(), -1);
    assert_eq!(
        parse_natural(12).unwrap().gcd(&parse_natural(18).unwrap()),
        parse_natural(6).unwrap()
    );
    println!("criterion 14 PASS: tau(12) = 6, mu(30) = -1, gcd(12, 18) = 6");
}
