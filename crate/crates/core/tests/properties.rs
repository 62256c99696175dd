//! Property-based checks of the pure operations on arbitrary families,
//! not just intersecting ones.

use proptest::collection::btree_set;
use proptest::prelude::*;

use setfam_core::bounds::{binom_exact, kk_shadow_lb, ExactCount};
use setfam_core::{
    delete, diversity, elements_of, is_intersecting, k_subsets, link, make_family, quotient,
    relabel, shadow, shift_family, shift_set, Family, Params, SetWord,
};

/// A uniform random k-subset of [n] as a word.
fn word(n: u32, k: u32) -> impl Strategy<Value = SetWord> {
    let all = k_subsets(n, k);
    (0..all.len()).prop_map(move |i| all[i])
}

/// A nonempty family of k-subsets of [n].
fn family(n: u32, k: u32) -> impl Strategy<Value = Family> {
    btree_set(word(n, k), 1..25).prop_map(move |words| {
        let lists: Vec<Vec<u32>> = words.into_iter().map(elements_of).collect();
        make_family(Params::new(n, k).unwrap(), &lists).unwrap()
    })
}

fn perm(n: u32) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=n).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn shift_set_is_idempotent_and_within_bounds(w in word(10, 4), i in 1u32..10, d in 1u32..10) {
        let j = (i + d - 1) % 10 + 1;
        prop_assume!(i < j);
        let s = shift_set(w, i, j).unwrap();
        prop_assert_eq!(s.count_ones(), w.count_ones());
        prop_assert_eq!(shift_set(s, i, j).unwrap(), s);
    }

    #[test]
    fn shift_family_preserves_size_and_intersection_property(f in family(9, 4), i in 1u32..9, d in 1u32..9) {
        let j = (i + d - 1) % 9 + 1;
        prop_assume!(i < j);
        let g = shift_family(&f, i, j).unwrap();
        prop_assert_eq!(g.size(), f.size());
        prop_assert_eq!(g.k(), f.k());
        if is_intersecting(&f) {
            prop_assert!(is_intersecting(&g));
        }
    }

    #[test]
    fn link_and_delete_partition(f in family(10, 4), i in 1u32..=10) {
        let l = link(&f, i).unwrap();
        let d = delete(&f, i).unwrap();
        prop_assert_eq!(l.size() + d.size(), f.size());
        prop_assert!(l.iter().all(|w| w & (1 << (i - 1)) == 0));
        prop_assert!(d.iter().all(|w| w & (1 << (i - 1)) == 0));
    }

    #[test]
    fn shadow_is_monotone(f in family(9, 4), g in family(9, 4)) {
        // Compare against the union, which contains both.
        let mut lists: Vec<Vec<u32>> = f.to_element_lists();
        lists.extend(g.to_element_lists());
        let u = make_family(Params::new(9, 4).unwrap(), &lists).unwrap();
        let sf = shadow(&f).unwrap();
        let su = shadow(&u).unwrap();
        prop_assert!(sf.iter().all(|w| su.contains(w)));
    }

    #[test]
    fn shadow_meets_lower_bound(f in family(11, 5)) {
        let lb = kk_shadow_lb(&ExactCount::from(f.size() as u64), 5).unwrap();
        let actual = shadow(&f).unwrap().size() as f64;
        prop_assert!(actual >= lb.value - 1e-6);
    }

    #[test]
    fn relabel_preserves_size_diversity_and_roundtrips(f in family(9, 4), pi in perm(9)) {
        let g = relabel(&f, &pi).unwrap();
        prop_assert_eq!(g.size(), f.size());
        prop_assert_eq!(diversity(&g).0, diversity(&f).0);

        let mut inverse = vec![0u32; 9];
        for (x, &img) in pi.iter().enumerate() {
            inverse[img as usize - 1] = x as u32 + 1;
        }
        let back = relabel(&g, &inverse).unwrap();
        prop_assert_eq!(back.words(), f.words());
    }

    #[test]
    fn quotient_counts_add_up(f in family(9, 4), j in 1u32..=4) {
        // Members with trace s on [j], summed over all s, cover f exactly
        // once; traces containing 1 are unreachable by construction.
        let mut total = 0usize;
        let mut s_words: Vec<SetWord> = vec![0];
        for x in 2..=j {
            let more: Vec<SetWord> = s_words.iter().map(|w| w | (1 << (x - 1))).collect();
            s_words.extend(more);
        }
        for &s in &s_words {
            if s.count_ones() > f.k() {
                continue;
            }
            total += quotient(&f, s, j).unwrap().size();
        }
        let ones = f.iter().filter(|w| w & 1 == 1).count();
        prop_assert_eq!(total + ones, f.size());
    }

    #[test]
    fn binomials_satisfy_pascal(n in 1i64..40, r in 1i64..20) {
        prop_assume!(r <= n);
        let lhs = binom_exact(n, r).unwrap();
        let rhs = binom_exact(n - 1, r - 1).unwrap() + binom_exact(n - 1, r).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
