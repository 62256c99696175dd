use crate::error::{Error, Result};
use crate::family::{is_intersecting, Family};
use crate::set::{k_subsets_of_mask, mask_interval, mask_of, Params, SetWord};

/// Trace prescription for the two sides of the switching step: the a-side
/// holds (k−1)-sets of [2,n] whose trace on za ∪ zb is exactly `za` (they
/// pair with element 1), the b-side holds k-sets of [2,n] with trace `zb`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchContext {
    za: SetWord,
    zb: SetWord,
}

impl SwitchContext {
    pub fn new(params: Params, za: SetWord, zb: SetWord) -> Result<Self> {
        let tail = params.ground_mask() & !1;
        if (za | zb) & !tail != 0 {
            return Err(Error::BadSwitchContext(
                "trace sets must lie in [2,n]".into(),
            ));
        }
        if za & zb != 0 {
            return Err(Error::BadSwitchContext("trace sets must be disjoint".into()));
        }
        Ok(SwitchContext { za, zb })
    }

    /// The single-element/a-prefix shape: za = {i}, zb = [2,i−1].
    pub fn pivot_element(params: Params, i: u32) -> Result<Self> {
        if i < 2 || i > params.n() {
            return Err(Error::ElementOutOfRange {
                element: i,
                n: params.n(),
            });
        }
        SwitchContext::new(params, mask_of(i), mask_interval(2, i - 1))
    }

    /// The interval/window shape: za = I, zb = [2,t′].
    pub fn prefix_window(params: Params, t_prime: u32, i_mask: SetWord) -> Result<Self> {
        if t_prime < 1 || t_prime > params.n() {
            return Err(Error::ElementOutOfRange {
                element: t_prime,
                n: params.n(),
            });
        }
        SwitchContext::new(params, i_mask, mask_interval(2, t_prime))
    }

    pub fn za(&self) -> SetWord {
        self.za
    }

    pub fn zb(&self) -> SetWord {
        self.zb
    }

    fn traced(&self) -> SetWord {
        self.za | self.zb
    }

    /// All (k−1)-sets of [2,n] with trace za on za ∪ zb.
    pub fn a_side(&self, params: Params) -> Vec<SetWord> {
        let k1 = params.k() - 1;
        let need = self.za.count_ones();
        if need > k1 {
            return Vec::new();
        }
        let free = params.ground_mask() & !1 & !self.traced();
        k_subsets_of_mask(free, k1 - need)
            .into_iter()
            .map(|w| w | self.za)
            .collect()
    }

    /// All k-sets of [2,n] with trace zb on za ∪ zb.
    pub fn b_side(&self, params: Params) -> Vec<SetWord> {
        let k = params.k();
        let need = self.zb.count_ones();
        if need > k {
            return Vec::new();
        }
        let free = params.ground_mask() & !1 & !self.traced();
        k_subsets_of_mask(free, k - need)
            .into_iter()
            .map(|w| w | self.zb)
            .collect()
    }
}

/// What a switch did. The op does not promise the result is intersecting;
/// `intersecting_after` reports the check so callers can decide.
#[derive(Debug, Clone)]
pub struct SwitchOutcome {
    pub family: Family,
    pub size_delta: i64,
    pub removed_b: u64,
    pub added_b: u64,
    pub removed_a: u64,
    pub added_a: u64,
    pub intersecting_after: bool,
}

/// Replaces the b-side members of `f` (sets avoiding 1 with trace zb) by
/// `b_target`, then replaces the a-side of the link at 1 with every a-side
/// set meeting all of `b_target`.
pub fn bipartite_switch(
    f: &Family,
    ctx: SwitchContext,
    b_target: &Family,
) -> Result<SwitchOutcome> {
    let params = f.params();
    let tail = params.ground_mask() & !1;
    if (ctx.za | ctx.zb) & !tail != 0 || ctx.za & ctx.zb != 0 {
        return Err(Error::BadSwitchContext(
            "context does not fit the family's ground set".into(),
        ));
    }
    if !is_intersecting(f) {
        return Err(Error::NotIntersecting);
    }
    if b_target.params() != params {
        return Err(Error::BadSwitchTarget(
            "target must share the family's parameters".into(),
        ));
    }
    let traced = ctx.traced();
    for w in b_target.iter() {
        if w & 1 != 0 || w & traced != ctx.zb {
            return Err(Error::BadSwitchTarget(format!(
                "{} is not a b-side set for this context",
                crate::set::format_set(w)
            )));
        }
    }

    let is_b_side = |w: SetWord| w & 1 == 0 && w & traced == ctx.zb;
    let is_a_side = |w: SetWord| w & 1 != 0 && (w & !1) & traced == ctx.za;

    let mut removed_b = 0u64;
    let mut kept: Vec<SetWord> = Vec::with_capacity(f.size());
    let mut old_a: Vec<SetWord> = Vec::new();
    for w in f.iter() {
        if is_b_side(w) {
            if b_target.contains(w) {
                kept.push(w);
            } else {
                removed_b += 1;
            }
        } else if is_a_side(w) {
            old_a.push(w);
        } else {
            kept.push(w);
        }
    }

    let mut added_b = 0u64;
    for w in b_target.iter() {
        if !f.contains(w) {
            added_b += 1;
            kept.push(w);
        }
    }

    let mut added_a = 0u64;
    for a in ctx.a_side(params) {
        if b_target.iter().all(|b| b & a != 0) {
            let full = a | 1;
            if old_a.contains(&full) {
                kept.push(full);
            } else {
                added_a += 1;
                kept.push(full);
            }
        }
    }
    let removed_a = old_a
        .iter()
        .filter(|&&w| {
            let a = w & !1;
            !b_target.iter().all(|b| b & a != 0)
        })
        .count() as u64;

    let family = Family::from_unsorted_unchecked(params, kept);
    let size_delta = family.size() as i64 - f.size() as i64;
    let intersecting_after = is_intersecting(&family);
    Ok(SwitchOutcome {
        family,
        size_delta,
        removed_b,
        added_b,
        removed_a,
        added_a,
        intersecting_after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{delete, link, make_family};
    use crate::set::{word_from_elements, Params};

    fn p(n: u32, k: u32) -> Params {
        Params::new(n, k).unwrap()
    }

    #[test]
    fn context_validation() {
        let params = p(9, 4);
        let za = word_from_elements(9, &[3]).unwrap();
        let zb = word_from_elements(9, &[2]).unwrap();
        assert!(SwitchContext::new(params, za, zb).is_ok());
        assert!(SwitchContext::new(params, za, za).is_err());
        let with_one = word_from_elements(9, &[1, 3]).unwrap();
        assert!(SwitchContext::new(params, with_one, zb).is_err());
    }

    #[test]
    fn empty_b_target_fills_a_side() {
        // Family: the two-set seed {[2,5], [3,6]∪{2}}… keep it simple: a
        // small intersecting family with one b-side member for the pivot
        // context at i = 2 (za = {2}, zb = ∅).
        let f = make_family(
            p(9, 4),
            &[vec![3, 4, 5, 6], vec![1, 3, 4, 7], vec![1, 2, 3, 4]],
        )
        .unwrap();
        let ctx = SwitchContext::pivot_element(p(9, 4), 2).unwrap();
        // b-side sets: avoid 1, avoid 2 (trace ∅ on {2}): {3,4,5,6} qualifies.
        let out = bipartite_switch(&f, ctx, &Family::empty(p(9, 4))).unwrap();
        assert_eq!(out.removed_b, 1);
        assert_eq!(out.added_b, 0);
        // With an empty target every a-side set qualifies vacuously:
        // all {1,2}∪pair sets appear.
        let a_count = out
            .family
            .iter()
            .filter(|&w| w & 0b11 == 0b11)
            .count();
        assert_eq!(a_count, 21); // C(7,2)
        assert!(out.size_delta > 0);
        assert!(out.intersecting_after);
    }

    #[test]
    fn switch_inserts_b_target_members() {
        let f = make_family(
            p(9, 4),
            &[vec![1, 2, 3, 4], vec![1, 2, 5, 6]],
        )
        .unwrap();
        let ctx = SwitchContext::pivot_element(p(9, 4), 2).unwrap();
        let target = make_family(p(9, 4), &[vec![3, 4, 5, 6]]).unwrap();
        let out = bipartite_switch(&f, ctx, &target).unwrap();
        assert!(out.family.contains(word_from_elements(9, &[3, 4, 5, 6]).unwrap()));
        assert_eq!(out.added_b, 1);
        // {1,2,x,y} a-side sets must now meet {3,4,5,6}; the original
        // {1,2,5,6} does, so it survives.
        assert!(out.family.contains(word_from_elements(9, &[1, 2, 5, 6]).unwrap()));
        assert!(out.intersecting_after);

        // A target set with the wrong trace shape errors out.
        let bad = make_family(p(9, 4), &[vec![2, 3, 4, 5]]).unwrap();
        assert!(bipartite_switch(&f, ctx, &bad).is_err());
    }

    #[test]
    fn switch_reports_non_intersecting_results() {
        // {2,7,8,9} is neither a-side nor b-side for the pivot at 2, so it
        // survives the switch and ends up disjoint from the inserted
        // target set.
        let f = make_family(
            p(9, 4),
            &[vec![1, 2, 3, 4], vec![2, 7, 8, 9]],
        )
        .unwrap();
        let ctx = SwitchContext::pivot_element(p(9, 4), 2).unwrap();
        let target = make_family(p(9, 4), &[vec![3, 4, 5, 6]]).unwrap();
        let out = bipartite_switch(&f, ctx, &target).unwrap();
        assert!(out.family.contains(word_from_elements(9, &[2, 7, 8, 9]).unwrap()));
        assert!(!out.intersecting_after);
    }

    #[test]
    fn switch_preserves_link_and_deletion_shapes() {
        let f = make_family(
            p(9, 4),
            &[vec![2, 3, 4, 5], vec![1, 2, 3, 6], vec![1, 4, 5, 6]],
        )
        .unwrap();
        let ctx = SwitchContext::pivot_element(p(9, 4), 3).unwrap();
        // za = {3}, zb = {2}: b-side sets contain 2, avoid 3 (and 1);
        // none present, so removal is a no-op and the a-side fills.
        let out = bipartite_switch(&f, ctx, &Family::empty(p(9, 4))).unwrap();
        assert_eq!(out.removed_b, 0);
        let d = delete(&out.family, 1).unwrap();
        assert!(d.contains(word_from_elements(9, &[2, 3, 4, 5]).unwrap()));
        let l = link(&out.family, 1).unwrap();
        // Every {3}-trace (k−1)-set joined 1.
        assert!(l
            .iter()
            .filter(|&w| {
                w & word_from_elements(9, &[2, 3]).unwrap() == word_from_elements(9, &[3]).unwrap()
            })
            .count() as u64 >= out.added_a);
    }
}
