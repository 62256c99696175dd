//! Exact and real-valued size formulas. Integer formulas are evaluated in
//! arbitrary precision; real-topped binomials appear only in the
//! diversity-threshold bound (real u) and the shadow threshold solver.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactCount = BigUint;

/// A double-precision value with the absolute error bound it was computed
/// under.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealBound {
    pub value: f64,
    pub tolerance: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

impl RealBound {
    fn new(value: f64) -> Self {
        RealBound {
            value,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Some bounds are exact at integer parameters and real-valued otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Exact(ExactCount),
    Real(RealBound),
}

impl BoundValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(v) => v.to_f64().unwrap_or(f64::INFINITY),
            BoundValue::Real(r) => r.value,
        }
    }

    pub fn exact(&self) -> Option<&ExactCount> {
        match self {
            BoundValue::Exact(v) => Some(v),
            BoundValue::Real(_) => None,
        }
    }
}

/// Formula-internal binomial: zero outside 0 ≤ r ≤ n, including negative
/// tops, which legitimately appear as vanished terms.
fn bi(n: i64, r: i64) -> BigInt {
    if r < 0 || r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r) as u64;
    let mut acc = BigInt::from(1);
    for i in 0..r {
        acc = acc * BigInt::from(n as u64 - i) / BigInt::from(i + 1);
    }
    acc
}

fn to_count(v: BigInt, what: &'static str) -> Result<ExactCount> {
    if v.is_negative() {
        return Err(Error::Overflow(what));
    }
    Ok(v.to_biguint().expect("checked non-negative"))
}

/// C(n, r). Zero when r < 0 or r > n; a negative top is a contract error.
pub fn binom_exact(n: i64, r: i64) -> Result<ExactCount> {
    if n < 0 {
        return Err(Error::out_of_range("n", n, "0.."));
    }
    to_count(bi(n, r), "binomial")
}

/// x(x−1)…(x−r+1)/r! for real x ≥ r−1, the monotone regime.
pub fn binom_real(x: f64, r: i64) -> Result<RealBound> {
    if r < 0 {
        return Err(Error::out_of_range("r", r, "0.."));
    }
    if x < r as f64 - 1.0 {
        return Err(Error::out_of_range(
            "x",
            x,
            format!("{}..", r as f64 - 1.0),
        ));
    }
    let mut acc = 1.0f64;
    for i in 0..r {
        acc *= (x - i as f64) / (i as f64 + 1.0);
    }
    Ok(RealBound::new(acc))
}

/// Solves binom_real(x, r) = size for x by bisection on
/// [r−1, r−1+size]; binom_real is zero at the left end and at least
/// `size` at the right end, so the bracket always holds.
pub fn kk_threshold_x(size: &ExactCount, r: i64) -> Result<RealBound> {
    if size.is_zero() {
        return Err(Error::out_of_range("size", 0, "1.."));
    }
    if r < 1 {
        return Err(Error::out_of_range("r", r, "1.."));
    }
    let target = size.to_f64().unwrap_or(f64::INFINITY);
    let mut lo = r as f64 - 1.0;
    let mut hi = lo + target;
    for _ in 0..200 {
        if hi - lo <= DEFAULT_TOLERANCE {
            break;
        }
        let mid = lo + (hi - lo) / 2.0;
        if binom_real(mid, r)?.value < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RealBound::new(lo + (hi - lo) / 2.0))
}

/// The shadow lower bound binom_real(x, r−1) at the solved threshold x.
pub fn kk_shadow_lb(size: &ExactCount, r: i64) -> Result<RealBound> {
    let x = kk_threshold_x(size, r)?;
    let lb = binom_real(x.value, r - 1)?;
    Ok(RealBound {
        value: lb.value,
        tolerance: x.tolerance.max(lb.tolerance),
    })
}

fn require_regime(n: u32, k: u32) -> Result<()> {
    if n <= 2 * k {
        return Err(Error::Regime(format!("need n > 2k, got n={n}, k={k}")));
    }
    Ok(())
}

/// Largest non-star size: C(n−1,k−1) − C(n−k−1,k−1) + 1.
pub fn hm_bound(n: u32, k: u32) -> Result<ExactCount> {
    require_regime(n, k)?;
    let (n, k) = (n as i64, k as i64);
    to_count(bi(n - 1, k - 1) - bi(n - k - 1, k - 1) + 1, "hm bound")
}

/// Diversity-threshold bound C(n−1,k−1) + C(n−u−1,n−k−1) − C(n−u−1,k−1):
/// exact at integer u, real-valued otherwise.
pub fn kz_bound(n: u32, k: u32, u: f64) -> Result<BoundValue> {
    require_regime(n, k)?;
    if !(3.0..=k as f64).contains(&u) {
        return Err(Error::out_of_range("u", u, format!("3..={k}")));
    }
    let (ni, ki) = (n as i64, k as i64);
    if u.fract() == 0.0 {
        let ui = u as i64;
        let v = bi(ni - 1, ki - 1) + bi(ni - ui - 1, ni - ki - 1) - bi(ni - ui - 1, ki - 1);
        return Ok(BoundValue::Exact(to_count(v, "kz bound")?));
    }
    let x = n as f64 - u - 1.0;
    let head = bi(ni - 1, ki - 1).to_f64().unwrap_or(f64::INFINITY);
    let mid = binom_real(x, ni - ki - 1)?.value;
    let tail = binom_real(x, ki - 1)?.value;
    Ok(BoundValue::Real(RealBound::new(head + mid - tail)))
}

/// Diversity-two bound C(n−1,k−1) − C(n−k−1,k−1) − C(n−k−2,k−2) + 2.
pub fn hk_bound(n: u32, k: u32) -> Result<ExactCount> {
    require_regime(n, k)?;
    if k < 4 {
        return Err(Error::Regime(format!("need k ≥ 4, got k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    to_count(
        bi(n - 1, k - 1) - bi(n - k - 1, k - 1) - bi(n - k - 2, k - 2) + 2,
        "hk bound",
    )
}

/// |H_u| = C(n−1,k−1) − C(n−u−1,k−1) + C(n−u−1,k−u).
pub fn size_h_u(n: u32, k: u32, u: u32) -> Result<ExactCount> {
    if u < 2 || u > k {
        return Err(Error::out_of_range("u", u, format!("2..={k}")));
    }
    if n < u + 1 {
        return Err(Error::Regime(format!("need n ≥ u+1, got n={n}, u={u}")));
    }
    let (n, k, u) = (n as i64, k as i64, u as i64);
    to_count(
        bi(n - 1, k - 1) - bi(n - u - 1, k - 1) + bi(n - u - 1, k - u),
        "h_u size",
    )
}

/// |J_i|: the two-block family through element 1. For i = 1 this is the
/// largest non-star size; for i ≥ 2 inclusion–exclusion over the blocks
/// gives 2 + C(n−1,k−1) − 2C(n−k−1,k−1) + C(n−k−i,k−1).
pub fn size_j_i(n: u32, k: u32, i: u32) -> Result<ExactCount> {
    if i < 1 || i > k {
        return Err(Error::out_of_range("i", i, format!("1..={k}")));
    }
    if n < k + i {
        return Err(Error::Regime(format!("need n ≥ k+i, got n={n}, k={k}, i={i}")));
    }
    let (n, k, i) = (n as i64, k as i64, i as i64);
    let v = if i == 1 {
        bi(n - 1, k - 1) - bi(n - k - 1, k - 1) + 1
    } else {
        bi(n - 1, k - 1) - 2 * bi(n - k - 1, k - 1) + bi(n - k - i, k - 1) + 2
    };
    to_count(v, "j_i size")
}

/// |E_l| = l + C(n−1,k−1) − C(n−k,k−1) + [l ≤ k−1]·C(n−k−l,k−1−l).
pub fn size_e_l(n: u32, k: u32, l: u32) -> Result<ExactCount> {
    if l < 2 || l + k > n {
        return Err(Error::out_of_range("l", l, format!("2..={}", n.saturating_sub(k))));
    }
    let (n, k, l) = (n as i64, k as i64, l as i64);
    let mut v = BigInt::from(l) + bi(n - 1, k - 1) - bi(n - k, k - 1);
    if l <= k - 1 {
        v += bi(n - k - l, k - 1 - l);
    }
    to_count(v, "e_l size")
}

fn require_f_params(m: u32, k: u32, s: u32) -> Result<()> {
    if s < 1 {
        return Err(Error::out_of_range("s", s, "1.."));
    }
    if k < 4 {
        return Err(Error::Regime(format!("need k ≥ 4, got k={k}")));
    }
    if m < k + s {
        return Err(Error::Regime(format!("need m ≥ k+s, got m={m}, k={k}, s={s}")));
    }
    Ok(())
}

/// Size of the largest family cross-intersecting with the two disjoint
/// blocks: Σ_{r=1..s} [C(m−r,k−2) − C(m−s−r,k−2)].
pub fn f2s_size(m: u32, k: u32, s: u32) -> Result<ExactCount> {
    require_f_params(m, k, s)?;
    let (m, k, s) = (m as i64, k as i64, s as i64);
    let mut v = BigInt::zero();
    for r in 1..=s {
        v += bi(m - r, k - 2) - bi(m - s - r, k - 2);
    }
    to_count(v, "f2s size")
}

/// The ladder function f(z): the largest partner size when the minimal
/// covering-pair family has z members.
pub fn f_of_z(m: u32, k: u32, s: u32, z: u32) -> Result<ExactCount> {
    require_f_params(m, k, s)?;
    if z < 2 || z > s + 1 {
        return Err(Error::out_of_range("z", z, format!("2..={}", s + 1)));
    }
    let (m, k, s, z) = (m as i64, k as i64, s as i64, z as i64);
    let mut v = BigInt::zero();
    for l in 1..z {
        v += bi(m - l, k - 2) - bi(m - s - 1, k - 2);
    }
    for l in z..=s {
        v += bi(m - l, k - 2) - bi(m - s - 2 - (l - z), k - 2);
    }
    to_count(v, "f(z)")
}

fn require_cross(n: u32, a: u32, b: u32) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::out_of_range("a,b", format!("({a},{b})"), "1.."));
    }
    if n <= a + b {
        return Err(Error::Regime(format!("need n > a+b, got n={n}, a={a}, b={b}")));
    }
    Ok(())
}

/// The plain cross-intersecting sum bound C(n,a).
pub fn cross_easy_bound(n: u32, a: u32, b: u32) -> Result<ExactCount> {
    require_cross(n, a, b)?;
    binom_exact(n as i64, a as i64)
}

/// Hypothesis cap for the plain bound when b ≥ a: it applies while
/// |B| ≤ C(n−b−1+a, a−1).
pub fn cross_easy_threshold(n: u32, a: u32, b: u32) -> Result<ExactCount> {
    require_cross(n, a, b)?;
    binom_exact((n - b - 1 + a) as i64, a as i64 - 1)
}

/// The refined bound C(n,a) + C(n−j,b−j) − C(n−j,a) for b < a, j ∈ [b].
pub fn cross_j_bound(n: u32, a: u32, b: u32, j: u32) -> Result<ExactCount> {
    require_cross(n, a, b)?;
    if b >= a {
        return Err(Error::Regime(format!("need b < a, got a={a}, b={b}")));
    }
    if j < 1 || j > b {
        return Err(Error::out_of_range("j", j, format!("1..={b}")));
    }
    let (n, a, b, j) = (n as i64, a as i64, b as i64, j as i64);
    to_count(bi(n, a) + bi(n - j, b - j) - bi(n - j, a), "cross bound")
}

/// The refined bound applies while |B| ≥ C(n−j, b−j).
pub fn cross_j_threshold(n: u32, b: u32, j: u32) -> Result<ExactCount> {
    if j < 1 || j > b {
        return Err(Error::out_of_range("j", j, format!("1..={b}")));
    }
    binom_exact((n - j) as i64, (b - j) as i64)
}

/// Cap on the size of a minimal covering-pair family of s-sets: s + 1.
pub fn bollobas_limit(s: u32) -> Result<ExactCount> {
    if s < 1 {
        return Err(Error::out_of_range("s", s, "1.."));
    }
    Ok(ExactCount::from(s + 1u32))
}
