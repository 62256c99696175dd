use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::{format_set, mask_interval, Params, SetWord};

/// All (k−1)-sets contained in some member.
pub fn shadow(f: &Family) -> Result<Family> {
    let k = f.k();
    if k == 0 {
        return Err(Error::Uniformity { k: 0, n: f.n() });
    }
    let mut out: BTreeSet<SetWord> = BTreeSet::new();
    for w in f.iter() {
        let mut m = w;
        while m != 0 {
            let bit = m & m.wrapping_neg();
            out.insert(w & !bit);
            m &= m - 1;
        }
    }
    Ok(Family::from_sorted_unchecked(
        Params::relaxed(f.n(), k - 1),
        out.into_iter().collect(),
    ))
}

/// Members whose trace on [j] is exactly `s`, with `s` stripped off.
/// The result lives in [j+1,n] but keeps the original labels.
pub fn quotient(f: &Family, s: SetWord, j: u32) -> Result<Family> {
    let n = f.n();
    if j == 0 || j > n {
        return Err(Error::ElementOutOfRange { element: j, n });
    }
    let window = mask_interval(2, j);
    if s & !window != 0 {
        return Err(Error::out_of_range(
            "quotient trace",
            format_set(s),
            format!("subsets of [2,{j}]"),
        ));
    }
    let picked = s.count_ones();
    if picked > f.k() {
        return Err(Error::WrongCardinality {
            got: picked,
            expected: f.k(),
        });
    }
    let prefix = mask_interval(1, j);
    let words: Vec<SetWord> = f
        .iter()
        .filter(|&w| w & prefix == s)
        .map(|w| w & !s)
        .collect();
    Ok(Family::from_sorted_unchecked(
        Params::relaxed(n, f.k() - picked),
        words,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{delete, make_family, Family};
    use crate::set::{word_from_elements, Params};

    fn p(n: u32, k: u32) -> Params {
        Params::new(n, k).unwrap()
    }

    #[test]
    fn shadow_of_single_triple() {
        let f = make_family(p(5, 3), &[vec![1, 2, 3]]).unwrap();
        let s = shadow(&f).unwrap();
        assert_eq!(
            s.to_element_lists(),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(s.k(), 2);
    }

    #[test]
    fn shadow_of_star_is_everything() {
        let words: Vec<SetWord> = crate::set::k_subsets(6, 3)
            .into_iter()
            .filter(|w| w & 1 != 0)
            .collect();
        let star = Family::new(p(6, 3), words).unwrap();
        let s = shadow(&star).unwrap();
        assert_eq!(s.size(), 15); // C(6,2): every pair extends to a set through 1
    }

    #[test]
    fn shadow_is_monotone_and_bottoms_out() {
        let f = make_family(p(5, 2), &[vec![1, 2], vec![3, 4]]).unwrap();
        let g = make_family(p(5, 2), &[vec![1, 2], vec![3, 4], vec![2, 3]]).unwrap();
        let sf = shadow(&f).unwrap();
        let sg = shadow(&g).unwrap();
        assert!(sf.iter().all(|w| sg.contains(w)));

        let empties = shadow(&sf).unwrap();
        assert_eq!(empties.size(), 1);
        assert_eq!(empties.words(), &[0]);
        assert!(shadow(&empties).is_err());
    }

    #[test]
    fn quotient_membership_rule() {
        // Members of a bar-1 family with trace {2} on [3], minus {2}.
        let f = make_family(
            p(9, 4),
            &[
                vec![2, 4, 5, 6],   // trace on [3] is {2} → contributes {4,5,6}
                vec![2, 3, 4, 5],   // trace {2,3} → no
                vec![4, 5, 6, 7],   // trace ∅ → no
                vec![2, 5, 6, 9],   // trace {2} → contributes {5,6,9}
            ],
        )
        .unwrap();
        let s = word_from_elements(9, &[2]).unwrap();
        let q = quotient(&f, s, 3).unwrap();
        assert_eq!(q.k(), 3);
        assert_eq!(
            q.to_element_lists(),
            vec![vec![4, 5, 6], vec![5, 6, 9]]
        );
    }

    #[test]
    fn quotient_with_empty_trace_at_one() {
        // On a family avoiding 1, the empty trace at j = 1 returns the
        // family unchanged.
        let f = make_family(p(9, 4), &[vec![2, 3, 4, 5], vec![3, 4, 5, 6]]).unwrap();
        let q = quotient(&f, 0, 1).unwrap();
        assert_eq!(q.words(), f.words());

        // On a family with 1-containing members it selects the bar-1 part.
        let g = make_family(p(9, 4), &[vec![1, 2, 3, 4], vec![2, 3, 4, 5]]).unwrap();
        let q2 = quotient(&g, 0, 1).unwrap();
        assert_eq!(q2, delete(&g, 1).unwrap());
    }

    #[test]
    fn quotient_validates_trace() {
        let f = make_family(p(9, 4), &[vec![2, 3, 4, 5]]).unwrap();
        let s = word_from_elements(9, &[5]).unwrap();
        assert!(quotient(&f, s, 3).is_err());
        let one = word_from_elements(9, &[1]).unwrap();
        assert!(quotient(&f, one, 3).is_err());
    }
}
