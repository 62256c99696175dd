use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{
    elements_of, k_subsets_of_mask, mask_full, mask_of, word_from_elements, Params, SetWord,
};

/// A k-uniform family over [n], stored as a strictly increasing list of
/// mask words. Canonical order makes equality bit-exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    params: Params,
    sets: Vec<SetWord>,
}

impl Family {
    /// Validates every word against `params`, then sorts and deduplicates.
    pub fn new(params: Params, mut sets: Vec<SetWord>) -> Result<Self> {
        for &w in &sets {
            params.validate_member(w)?;
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(Family { params, sets })
    }

    pub fn empty(params: Params) -> Self {
        Family {
            params,
            sets: Vec::new(),
        }
    }

    /// Caller guarantees the words are valid members in strictly
    /// increasing order. Used on hot paths that construct in order.
    pub(crate) fn from_sorted_unchecked(params: Params, sets: Vec<SetWord>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(sets
            .iter()
            .all(|&w| params.validate_member(w).is_ok()));
        Family { params, sets }
    }

    pub(crate) fn from_unsorted_unchecked(params: Params, mut sets: Vec<SetWord>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        debug_assert!(sets
            .iter()
            .all(|&w| params.validate_member(w).is_ok()));
        Family { params, sets }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn n(&self) -> u32 {
        self.params.n()
    }

    pub fn k(&self) -> u32 {
        self.params.k()
    }

    pub fn size(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn words(&self) -> &[SetWord] {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = SetWord> + '_ {
        self.sets.iter().copied()
    }

    pub fn contains(&self, word: SetWord) -> bool {
        self.sets.binary_search(&word).is_ok()
    }

    /// Members as sorted element lists, for display and serialization.
    pub fn to_element_lists(&self) -> Vec<Vec<u32>> {
        self.sets.iter().map(|&w| elements_of(w)).collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &w) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::set::format_set(w))?;
        }
        write!(f, "}}")
    }
}

// JSON shape: {"n": …, "k": …, "sets": [[sorted 1-based ints], …]}.
// The writer emits canonical order; the reader accepts any order.
impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Family", 3)?;
        st.serialize_field("n", &self.params.n())?;
        st.serialize_field("k", &self.params.k())?;
        st.serialize_field("sets", &self.to_element_lists())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            k: u32,
            sets: Vec<Vec<u32>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let params = Params::new(raw.n, raw.k).map_err(de::Error::custom)?;
        let mut words = Vec::with_capacity(raw.sets.len());
        for elems in &raw.sets {
            words.push(word_from_elements(raw.n, elems).map_err(de::Error::custom)?);
        }
        Family::new(params, words).map_err(de::Error::custom)
    }
}

/// Builds a family from element lists; identical sets collapse.
pub fn make_family(params: Params, sets: &[Vec<u32>]) -> Result<Family> {
    let mut words = Vec::with_capacity(sets.len());
    for elems in sets {
        let w = word_from_elements(params.n(), elems)?;
        params.validate_member(w)?;
        words.push(w);
    }
    Family::new(params, words)
}

/// The complete k-uniform family on [n].
pub fn full_family(params: Params) -> Family {
    Family::from_sorted_unchecked(params, k_subsets_of_mask(params.ground_mask(), params.k()))
}

/// True iff every two members share an element. Empty and singleton
/// families count as intersecting.
pub fn is_intersecting(f: &Family) -> bool {
    let w = f.words();
    for (idx, &a) in w.iter().enumerate() {
        for &b in &w[idx + 1..] {
            if a & b == 0 {
                return false;
            }
        }
    }
    true
}

/// True iff every member of `a` meets every member of `b`. The families
/// must share a ground set; uniformities may differ.
pub fn is_cross_intersecting(a: &Family, b: &Family) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::GroundSetMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    for wa in a.iter() {
        for wb in b.iter() {
            if wa & wb == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Members containing `i`, with `i` removed; uniformity drops by one.
pub fn link(f: &Family, i: u32) -> Result<Family> {
    if i == 0 || i > f.n() {
        return Err(Error::ElementOutOfRange {
            element: i,
            n: f.n(),
        });
    }
    let bit = mask_of(i);
    let words: Vec<SetWord> = f.iter().filter(|&w| w & bit != 0).map(|w| w & !bit).collect();
    let params = Params::relaxed(f.n(), f.k() - 1);
    // Removing the same bit from increasing words keeps them increasing.
    Ok(Family::from_sorted_unchecked(params, words))
}

/// Members avoiding `i`; uniformity unchanged.
pub fn delete(f: &Family, i: u32) -> Result<Family> {
    if i == 0 || i > f.n() {
        return Err(Error::ElementOutOfRange {
            element: i,
            n: f.n(),
        });
    }
    let bit = mask_of(i);
    let words: Vec<SetWord> = f.iter().filter(|&w| w & bit == 0).collect();
    Ok(Family::from_sorted_unchecked(f.params(), words))
}

/// Minimum over elements i of |members avoiding i|, with the smallest
/// attaining element. Zero exactly for stars (and the empty family).
pub fn diversity(f: &Family) -> (u64, u32) {
    let n = f.n() as usize;
    let mut degree = vec![0u64; n];
    for w in f.iter() {
        let mut m = w;
        while m != 0 {
            degree[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
    }
    let mut best = (f.size() as u64, 1u32);
    for (idx, &d) in degree.iter().enumerate() {
        let avoid = f.size() as u64 - d;
        if avoid < best.0 {
            best = (avoid, idx as u32 + 1);
        }
    }
    best
}

/// Relabels by `perm`, where `perm[x-1]` is the image of element x.
pub fn relabel(f: &Family, perm: &[u32]) -> Result<Family> {
    let n = f.n();
    if perm.len() != n as usize {
        return Err(Error::BadPermutation { n });
    }
    let mut seen: SetWord = 0;
    for &img in perm {
        if img == 0 || img > n || seen & mask_of(img) != 0 {
            return Err(Error::BadPermutation { n });
        }
        seen |= mask_of(img);
    }
    let words: Vec<SetWord> = f
        .iter()
        .map(|w| {
            let mut out: SetWord = 0;
            let mut m = w;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                out |= mask_of(perm[x]);
                m &= m - 1;
            }
            out
        })
        .collect();
    Ok(Family::from_unsorted_unchecked(f.params(), words))
}

/// Swaps element 1 with the diversity argmin so the minimum is attained
/// at 1. Identity when it already is.
pub fn normalize_diversity(f: &Family) -> Family {
    let (_, argmin) = diversity(f);
    if argmin == 1 {
        return f.clone();
    }
    let mut perm: Vec<u32> = (1..=f.n()).collect();
    perm.swap(0, argmin as usize - 1);
    relabel(f, &perm).expect("transposition is a valid permutation")
}

/// Bitwise AND of all members.
pub fn common_intersection(f: &Family) -> Result<SetWord> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(f.iter().fold(!0u64, |acc, w| acc & w))
}

/// Smallest size of a set meeting every member, by exhaustive search over
/// subsets of the union in increasing size.
pub fn covering_number(f: &Family) -> Result<u32> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if f.words().contains(&0) {
        return Err(Error::Uncoverable);
    }
    let union = f.iter().fold(0u64, |acc, w| acc | w);
    let bound = union.count_ones();
    for t in 1..=bound {
        for cover in k_subsets_of_mask(union, t) {
            if f.iter().all(|w| w & cover != 0) {
                return Ok(t);
            }
        }
    }
    unreachable!("the union itself covers every member")
}

/// The inclusion-maximal intersecting family whose members avoiding 1 are
/// exactly `m`: adds {1} ∪ A for every (k−1)-set A ⊆ [2,n] meeting all of
/// `m`. For empty `m` this is the full star at 1.
pub fn maximal_extension(params: Params, m: &Family) -> Result<Family> {
    if m.params().n() != params.n() {
        return Err(Error::GroundSetMismatch {
            left: params.n(),
            right: m.params().n(),
        });
    }
    if m.params().k() != params.k() {
        return Err(Error::Uniformity {
            k: m.params().k(),
            n: params.n(),
        });
    }
    if m.iter().any(|w| w & 1 != 0) {
        return Err(Error::ContainsOne);
    }
    if !is_intersecting(m) {
        return Err(Error::NotIntersecting);
    }
    let tail = params.ground_mask() & !1;
    let mut words: Vec<SetWord> = m.words().to_vec();
    for a in k_subsets_of_mask(tail, params.k() - 1) {
        if m.iter().all(|w| w & a != 0) {
            words.push(a | 1);
        }
    }
    Ok(Family::from_unsorted_unchecked(params, words))
}

/// All r-sets of h's ground set meeting every member of h: the largest
/// family of that uniformity cross-intersecting with h.
pub fn max_cross_partner(h: &Family, r: u32) -> Result<Family> {
    let n = h.n();
    if r > n {
        return Err(Error::Uniformity { k: r, n });
    }
    let words: Vec<SetWord> = k_subsets_of_mask(mask_full(n), r)
        .into_iter()
        .filter(|&a| h.iter().all(|w| w & a != 0))
        .collect();
    Ok(Family::from_sorted_unchecked(Params::relaxed(n, r), words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::k_subsets;

    fn p(n: u32, k: u32) -> Params {
        Params::new(n, k).unwrap()
    }

    #[test]
    fn make_family_dedups_and_validates() {
        let f = make_family(p(5, 2), &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(f.size(), 1);
        assert_eq!(f.to_element_lists(), vec![vec![1, 2]]);

        let empty = make_family(p(9, 4), &[]).unwrap();
        assert!(empty.is_empty());

        assert_eq!(
            make_family(p(5, 2), &[vec![1, 6]]),
            Err(Error::ElementOutOfRange { element: 6, n: 5 })
        );
        assert!(matches!(
            make_family(p(5, 3), &[vec![1, 2]]),
            Err(Error::WrongCardinality { .. })
        ));
    }

    #[test]
    fn intersecting_checks() {
        let star: Vec<Vec<u32>> = (2..=5).map(|x| vec![1, x]).collect();
        let star = make_family(p(5, 2), &star).unwrap();
        assert!(is_intersecting(&star));

        let split = make_family(p(5, 2), &[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(!is_intersecting(&split));

        assert!(is_intersecting(&Family::empty(p(5, 2))));
        assert!(is_intersecting(
            &make_family(p(5, 2), &[vec![1, 2]]).unwrap()
        ));
    }

    #[test]
    fn cross_intersecting_checks() {
        let a = Family::empty(p(8, 3));
        let b = make_family(p(8, 3), &[vec![1, 2, 3]]).unwrap();
        assert!(is_cross_intersecting(&a, &b).unwrap());

        let c = make_family(p(5, 2), &[vec![1, 2]]).unwrap();
        let d = make_family(p(5, 2), &[vec![3, 4]]).unwrap();
        assert!(!is_cross_intersecting(&c, &d).unwrap());

        let e = make_family(p(6, 2), &[vec![1, 2]]).unwrap();
        assert_eq!(
            is_cross_intersecting(&c, &e),
            Err(Error::GroundSetMismatch { left: 5, right: 6 })
        );
    }

    #[test]
    fn link_delete_partition() {
        let full = full_family(p(6, 3));
        for i in 1..=6 {
            let l = link(&full, i).unwrap();
            let d = delete(&full, i).unwrap();
            assert_eq!(l.size() + d.size(), full.size());
            assert_eq!(l.k(), 2);
            assert_eq!(d.k(), 3);
        }
        assert!(link(&full, 7).is_err());
    }

    #[test]
    fn link_of_star_is_ground_subsets() {
        let star_words: Vec<SetWord> = k_subsets(5, 2)
            .into_iter()
            .filter(|w| w & 1 != 0)
            .collect();
        let star = Family::new(p(5, 2), star_words).unwrap();
        let l = link(&star, 1).unwrap();
        // All 1-subsets of [2,5].
        assert_eq!(l.size(), 4);
        assert!(l.iter().all(|w| w & 1 == 0 && w.count_ones() == 1));
        assert!(delete(&star, 1).unwrap().is_empty());
    }

    #[test]
    fn diversity_of_star_and_split() {
        let star_words: Vec<SetWord> = k_subsets(7, 3)
            .into_iter()
            .filter(|w| w & 0b100 != 0)
            .collect();
        let star = Family::new(p(7, 3), star_words).unwrap();
        assert_eq!(diversity(&star), (0, 3));

        let norm = normalize_diversity(&star);
        assert_eq!(diversity(&norm), (0, 1));
        assert_eq!(norm.size(), star.size());
    }

    #[test]
    fn common_intersection_and_cover() {
        let m = make_family(p(9, 4), &[vec![2, 3, 4, 5], vec![2, 3, 4, 6]]).unwrap();
        assert_eq!(
            elements_of(common_intersection(&m).unwrap()),
            vec![2, 3, 4]
        );
        assert_eq!(common_intersection(&Family::empty(p(9, 4))), Err(Error::EmptyFamily));

        let pair = make_family(p(8, 3), &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(covering_number(&pair).unwrap(), 2);
        let tri = make_family(p(5, 2), &[vec![1, 2], vec![3, 4], vec![1, 3]]).unwrap();
        assert_eq!(covering_number(&tri).unwrap(), 2);
        let single = make_family(p(9, 4), &[vec![2, 3, 4, 5]]).unwrap();
        assert_eq!(covering_number(&single).unwrap(), 1);
        assert_eq!(covering_number(&Family::empty(p(5, 2))), Err(Error::EmptyFamily));
    }

    #[test]
    fn maximal_extension_of_single_set() {
        // One (k)-set [2,k+1]; the extension has the classical
        // largest-nontrivial size 1 + C(8,3) − C(4,3) = 53 at (9,4).
        let m = make_family(p(9, 4), &[vec![2, 3, 4, 5]]).unwrap();
        let ext = maximal_extension(p(9, 4), &m).unwrap();
        assert_eq!(ext.size(), 53);
        assert!(is_intersecting(&ext));
        assert_eq!(delete(&ext, 1).unwrap(), m);

        let with_one = make_family(p(9, 4), &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(
            maximal_extension(p(9, 4), &with_one),
            Err(Error::ContainsOne)
        );

        let split = make_family(p(9, 4), &[vec![2, 3, 4, 5], vec![6, 7, 8, 9]]).unwrap();
        assert_eq!(
            maximal_extension(p(9, 4), &split),
            Err(Error::NotIntersecting)
        );
    }

    #[test]
    fn maximal_extension_of_empty_is_full_star() {
        let ext = maximal_extension(p(9, 4), &Family::empty(p(9, 4))).unwrap();
        assert_eq!(ext.size(), 56); // C(8,3)
        assert!(ext.iter().all(|w| w & 1 != 0));
    }

    #[test]
    fn max_cross_partner_counts() {
        let h = make_family(p(8, 3), &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let f = max_cross_partner(&h, 3).unwrap();
        assert_eq!(f.size(), 36); // 56 − 10 − 10 + 0
        assert!(is_cross_intersecting(&f, &h).unwrap());

        let all = max_cross_partner(&Family::empty(p(8, 3)), 3).unwrap();
        assert_eq!(all.size(), 56);
    }

    #[test]
    fn relabel_rejects_bad_permutations() {
        let f = make_family(p(5, 2), &[vec![1, 2]]).unwrap();
        assert!(relabel(&f, &[1, 2, 3]).is_err());
        assert!(relabel(&f, &[1, 1, 3, 4, 5]).is_err());
        assert!(relabel(&f, &[0, 2, 3, 4, 5]).is_err());
        let g = relabel(&f, &[5, 4, 3, 2, 1]).unwrap();
        assert_eq!(g.to_element_lists(), vec![vec![4, 5]]);
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let f = make_family(p(9, 4), &[vec![2, 3, 4, 6], vec![1, 2, 3, 4]]).unwrap();
        let s1 = serde_json::to_string(&f).unwrap();
        let back: Family = serde_json::from_str(&s1).unwrap();
        assert_eq!(back, f);
        assert_eq!(serde_json::to_string(&back).unwrap(), s1);

        // Reader accepts non-canonical order.
        let loose = r#"{"n":5,"k":2,"sets":[[4,5],[2,1]]}"#;
        let g: Family = serde_json::from_str(loose).unwrap();
        assert_eq!(g.to_element_lists(), vec![vec![1, 2], vec![4, 5]]);
    }
}
