use std::collections::{BTreeMap, HashSet};

use kabelian::generators::{mechanical_word, Rational, SlopeApprox};
use kabelian::{
    abelian_complexity_binary, abelian_eq, k_abelian_complexity, k_abelian_eq, k_abelian_eq_naive,
    phi_map, two_abelian_eq_binary, Level, Morphism, Word, WordSpec,
};
use proptest::prelude::*;

/// Counts of every factor of length at most `k`, built by brute force.
fn profile_of(u: &[u8], k: usize) -> BTreeMap<Vec<u8>, usize> {
    let mut m = BTreeMap::new();
    for len in 1..=k.min(u.len()) {
        for f in u.windows(len) {
            *m.entry(f.to_vec()).or_insert(0) += 1;
        }
    }
    m
}

fn oracle_eq(u: &[u8], v: &[u8], k: usize) -> bool {
    u.len() == v.len() && profile_of(u, k) == profile_of(v, k)
}

fn oracle_classes(prefix: &[u8], k: Option<usize>, n: usize) -> usize {
    let factors: HashSet<&[u8]> = prefix.windows(n).collect();
    match k {
        None => factors.len(),
        Some(k) => factors
            .iter()
            .map(|f| profile_of(f, k))
            .collect::<HashSet<_>>()
            .len(),
    }
}

fn binary(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 0..=max_len)
}

fn spec() -> impl Strategy<Value = WordSpec> {
    prop_oneof![
        Just(WordSpec::ThueMorse),
        Just(WordSpec::PeriodDoubling),
        Just(WordSpec::Fibonacci),
        Just(WordSpec::ChampernowneBinary),
        Just(WordSpec::TauChampernowne),
        Just(WordSpec::Staircase),
        prop::collection::vec(2u64..5, 1..4).prop_map(|b| WordSpec::u_word(b).unwrap()),
        (binary(4), prop::collection::vec(0u8..3, 1..6)).prop_map(|(pre, per)| {
            let show = |w: &[u8]| w.iter().map(|a| char::from(b'0' + a)).collect::<String>();
            WordSpec::ultimately_periodic(&show(&pre), &show(&per)).unwrap()
        }),
    ]
}

#[test]
fn exhaustive_agreement_up_to_length_eight() {
    for len in 0..=8usize {
        for a in 0u32..1 << len {
            let u: Vec<u8> = (0..len).map(|i| ((a >> i) & 1) as u8).collect();
            for b in 0u32..1 << len {
                let v: Vec<u8> = (0..len).map(|i| ((b >> i) & 1) as u8).collect();
                for k in 1..=4 {
                    let expected = oracle_eq(&u, &v, k);
                    assert_eq!(k_abelian_eq(&u, &v, k), expected, "{u:?} {v:?} k={k}");
                    assert_eq!(k_abelian_eq_naive(&u, &v, k), expected, "{u:?} {v:?} k={k}");
                }
                assert_eq!(two_abelian_eq_binary(&u, &v).unwrap(), oracle_eq(&u, &v, 2));
            }
        }
    }
}

#[test]
fn short_words_are_rigid() {
    for k in 1..=4usize {
        for n in 0..=2 * k - 1 {
            let words: Vec<Vec<u8>> = (0u32..1 << n)
                .map(|a| (0..n).map(|i| ((a >> i) & 1) as u8).collect())
                .collect();
            for u in &words {
                for v in &words {
                    assert_eq!(k_abelian_eq(u, v, k), u == v, "{u:?} {v:?} k={k}");
                }
            }
        }
    }
}

#[test]
fn pair_discrepancy_follows_end_letters() {
    for len in 0..=10usize {
        for a in 0u32..1 << len {
            let w: Vec<u8> = (0..len).map(|i| ((a >> i) & 1) as u8).collect();
            let count = |x: &[u8]| w.windows(2).filter(|f| *f == x).count() as i64;
            let d = count(&[0, 1]) - count(&[1, 0]);
            let expected = match (w.first(), w.last()) {
                (Some(0), Some(1)) => 1,
                (Some(1), Some(0)) => -1,
                _ => 0,
            };
            assert_eq!(d, expected, "{w:?}");
        }
    }
}

#[test]
fn class_counts_never_exceed_all_classes() {
    // Number of 2-Abelian classes among all binary words of each length.
    for n in 1..=8usize {
        let all: Vec<Vec<u8>> = (0u32..1 << n)
            .map(|a| (0..n).map(|i| ((a >> i) & 1) as u8).collect())
            .collect();
        let total = all.iter().map(|w| profile_of(w, 2)).collect::<HashSet<_>>().len();
        for spec in [WordSpec::ThueMorse, WordSpec::ChampernowneBinary] {
            let w = spec.expand(2048).unwrap();
            assert!(k_abelian_complexity(&w, Level::Finite(2), n).unwrap() <= total);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fast_equivalence_matches_oracle(u in binary(24), v in binary(24), k in 1usize..6) {
        let v = if v.len() == u.len() { v } else { u.iter().rev().copied().collect() };
        prop_assert_eq!(k_abelian_eq(&u, &v, k), oracle_eq(&u, &v, k));
    }

    #[test]
    fn ternary_equivalence_matches_oracle(
        u in prop::collection::vec(0u8..3, 0..16),
        seed in any::<u64>(),
        k in 1usize..5,
    ) {
        // A rotation of u keeps the Parikh vector, so k = 1 is often true.
        let r = if u.is_empty() { 0 } else { (seed as usize) % u.len() };
        let mut v = u.clone();
        v.rotate_left(r);
        prop_assert_eq!(k_abelian_eq(&u, &v, k), oracle_eq(&u, &v, k));
    }

    #[test]
    fn equivalence_refines(u in binary(16), v in binary(16), k in 1usize..6) {
        let v = if v.len() == u.len() { v } else { u.iter().rev().copied().collect() };
        if k_abelian_eq(&u, &v, k + 1) {
            prop_assert!(k_abelian_eq(&u, &v, k));
        }
        prop_assert_eq!(k_abelian_eq(&u, &v, 1), abelian_eq(&u, &v));
        prop_assert!(k_abelian_eq(&u, &u, k));
    }

    #[test]
    fn prefixes_cohere(spec in spec(), n in 0usize..300, extra in 0usize..300) {
        let short = spec.expand(n).unwrap();
        let long = spec.expand(n + extra).unwrap();
        prop_assert_eq!(short.len(), n);
        prop_assert_eq!(&long[..n], &short[..]);
    }

    #[test]
    fn spec_text_round_trips(spec in spec()) {
        let text = spec.to_string();
        let back: WordSpec = text.parse().unwrap();
        prop_assert_eq!(back.expand(200).unwrap(), spec.expand(200).unwrap());
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn fixed_points_are_fixed(which in 0usize..4, n in 1usize..400) {
        let m = match which {
            0 => Morphism::thue_morse(),
            1 => Morphism::period_doubling(),
            2 => Morphism::fibonacci(),
            _ => Morphism::perlin(2).unwrap(),
        };
        let w = m.fixed_point_prefix(0, n).unwrap();
        let image = m.apply(&w).unwrap();
        prop_assert_eq!(&image[..n], &w[..]);
    }

    #[test]
    fn phi_shrinks_by_one(w in binary(40)) {
        prop_assume!(!w.is_empty());
        let out = phi_map(&Word::binary(w.clone())).unwrap();
        prop_assert_eq!(out.len(), w.len() - 1);
        for (i, &b) in out.iter().enumerate() {
            prop_assert_eq!(b == 1, w[i] == w[i + 1]);
        }
    }

    #[test]
    fn complexity_matches_oracle_and_refines(spec in spec(), n in 1usize..12) {
        let w = spec.expand(600).unwrap();
        let mut last = 0;
        for k in [Some(1), Some(2), Some(3), Some(5), None] {
            let level = k.map_or(Level::Infinite, Level::Finite);
            let got = k_abelian_complexity(&w, level, n).unwrap();
            prop_assert_eq!(got, oracle_classes(&w, k, n));
            prop_assert!(got >= last);
            last = got;
            if let Some(k) = k {
                if n < 2 * k {
                    prop_assert_eq!(got, oracle_classes(&w, None, n));
                }
            }
        }
    }

    #[test]
    fn binary_abelian_formula_on_named_words(which in 0usize..4, n in 1usize..40) {
        let spec = [WordSpec::PeriodDoubling, WordSpec::ThueMorse, WordSpec::Fibonacci, WordSpec::TauChampernowne][which].clone();
        let w = spec.expand(4096).unwrap();
        prop_assert_eq!(
            abelian_complexity_binary(&w, n).unwrap(),
            k_abelian_complexity(&w, Level::Finite(1), n).unwrap()
        );
    }

    #[test]
    fn mechanical_words_are_balanced(num in 1i128..50, extra in 1i128..50, c in 0i128..20) {
        let slope = Rational::new(num, num + extra);
        let intercept = Rational::new(c, 20);
        let w = mechanical_word(&SlopeApprox::exact(slope), intercept, 120).unwrap();
        for n in 1..30 {
            let ones: Vec<usize> = w.windows(n).map(|f| f.iter().filter(|&&a| a == 1).count()).collect();
            let (lo, hi) = (ones.iter().min().unwrap(), ones.iter().max().unwrap());
            prop_assert!(hi - lo <= 1);
        }
        if num * 2 < num + extra {
            prop_assert!(w.windows(2).all(|p| p != [1, 1]));
        }
    }
}
