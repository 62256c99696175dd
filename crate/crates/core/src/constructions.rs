//! Generators for the named extremal families. Each generator fixes one
//! concrete labeling; the families are meaningful up to relabeling.

use crate::error::{Error, Result};
use crate::family::{make_family, maximal_extension, max_cross_partner, Family};
use crate::set::{k_subsets_of_mask, mask_interval, mask_of, Params, SetWord};

/// All k-sets through `center`.
pub fn full_star(params: Params, center: u32) -> Result<Family> {
    if center == 0 || center > params.n() {
        return Err(Error::ElementOutOfRange {
            element: center,
            n: params.n(),
        });
    }
    let bit = mask_of(center);
    let rest = params.ground_mask() & !bit;
    let words: Vec<SetWord> = k_subsets_of_mask(rest, params.k() - 1)
        .into_iter()
        .map(|w| w | bit)
        .collect();
    Ok(Family::from_unsorted_unchecked(params, words))
}

/// Sets containing the block [2,u+1], plus sets through 1 that meet it.
pub fn h_u(params: Params, u: u32) -> Result<Family> {
    let (n, k) = (params.n(), params.k());
    if u < 2 || u > k {
        return Err(Error::out_of_range("u", u, format!("2..={k}")));
    }
    if n < u + 1 {
        return Err(Error::Regime(format!(
            "ground set [{n}] cannot hold the block [2,{}]",
            u + 1
        )));
    }
    let core = mask_interval(2, u + 1);
    let mut words: Vec<SetWord> = Vec::new();
    let rest = params.ground_mask() & !core;
    for w in k_subsets_of_mask(rest, k - u) {
        words.push(w | core);
    }
    let tail = params.ground_mask() & !1;
    for w in k_subsets_of_mask(tail, k - 1) {
        if w & core != 0 {
            words.push(w | 1);
        }
    }
    Ok(Family::from_unsorted_unchecked(params, words))
}

/// The two blocks I_1 = [2,k+1] and I_i = [i+1,k+i], plus every set
/// through 1 meeting both. For i = 1 the blocks coincide.
pub fn j_i(params: Params, i: u32) -> Result<Family> {
    let (n, k) = (params.n(), params.k());
    if i < 1 || i > k {
        return Err(Error::out_of_range("i", i, format!("1..={k}")));
    }
    if n < k + i {
        return Err(Error::Regime(format!(
            "ground set [{n}] cannot hold the block [{},{}]",
            i + 1,
            k + i
        )));
    }
    let i1 = mask_interval(2, k + 1);
    let ii = mask_interval(i + 1, k + i);
    let mut words: Vec<SetWord> = vec![i1, ii];
    let tail = params.ground_mask() & !1;
    for w in k_subsets_of_mask(tail, k - 1) {
        if w & i1 != 0 && w & ii != 0 {
            words.push(w | 1);
        }
    }
    Ok(Family::from_unsorted_unchecked(params, words))
}

/// The canonical (k−1)-core family: members avoiding 1 are
/// [2,k] ∪ {x} for x ∈ [k+1,k+l], completed to the maximal extension.
pub fn e_l(params: Params, l: u32) -> Result<Family> {
    let (n, k) = (params.n(), params.k());
    if l < 2 || l > n - k {
        return Err(Error::out_of_range("l", l, format!("2..={}", n - k)));
    }
    let core = mask_interval(2, k);
    let bar: Vec<SetWord> = (k + 1..=k + l).map(|x| core | mask_of(x)).collect();
    let m = Family::new(params, bar)?;
    maximal_extension(params, &m)
}

/// The two disjoint blocks [1,s] and [s+1,2s] over [m].
pub fn t2s(m: u32, s: u32) -> Result<Family> {
    if s < 1 {
        return Err(Error::out_of_range("s", s, "1.."));
    }
    if m <= 2 * s {
        return Err(Error::Regime(format!("need m > 2s, got m={m}, s={s}")));
    }
    let params = Params::new(m, s)?;
    let first: Vec<u32> = (1..=s).collect();
    let second: Vec<u32> = (s + 1..=2 * s).collect();
    make_family(params, &[first, second])
}

/// The largest (k−1)-uniform family cross-intersecting with t2s(m, s).
pub fn f2s(m: u32, k: u32, s: u32) -> Result<Family> {
    if m < k + s {
        return Err(Error::Regime(format!(
            "need m ≥ k+s, got m={m}, k={k}, s={s}"
        )));
    }
    let pair = t2s(m, s)?;
    max_cross_partner(&pair, k - 1)
}
