use crate::error::{Error, Result};

/// A subset of the ground set [n] = {1, ..., n}, packed into a word.
/// Element `i` occupies bit `i - 1`, so n is capped at 64.
pub type SetWord = u64;

/// Ground-set size and uniformity, validated once and threaded through
/// everything that builds or checks families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    n: u32,
    k: u32,
}

impl Params {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::GroundSetSize { n });
        }
        if k == 0 || k > n {
            return Err(Error::Uniformity { k, n });
        }
        Ok(Params { n, k })
    }

    /// Derived families (links, shadows, quotients) can legitimately reach
    /// uniformity 0; only direct construction insists on k ≥ 1.
    pub(crate) fn relaxed(n: u32, k: u32) -> Self {
        debug_assert!(n >= 1 && n <= 64 && k <= n);
        Params { n, k }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Mask with bits 0..n set: the full ground set as a word.
    pub fn ground_mask(&self) -> SetWord {
        mask_full(self.n)
    }

    /// Checks `word` is a k-subset of [n].
    pub fn validate_member(&self, word: SetWord) -> Result<()> {
        if word & !self.ground_mask() != 0 {
            let stray = 64 - (word & !self.ground_mask()).leading_zeros();
            return Err(Error::ElementOutOfRange {
                element: stray,
                n: self.n,
            });
        }
        let got = word.count_ones();
        if got != self.k {
            return Err(Error::WrongCardinality {
                got,
                expected: self.k,
            });
        }
        Ok(())
    }
}

/// Bits 0..n set. n == 64 needs the two-step form to dodge the shift overflow.
pub fn mask_full(n: u32) -> SetWord {
    debug_assert!(n <= 64);
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Mask for the interval [lo, hi] (1-based, inclusive). Empty when lo > hi.
pub fn mask_interval(lo: u32, hi: u32) -> SetWord {
    if lo > hi {
        return 0;
    }
    debug_assert!(lo >= 1 && hi <= 64);
    mask_full(hi) & !mask_full(lo - 1)
}

/// Mask for a single element.
pub fn mask_of(element: u32) -> SetWord {
    debug_assert!((1..=64).contains(&element));
    1u64 << (element - 1)
}

/// Builds a word from 1-based elements, rejecting out-of-range values and
/// duplicates (a duplicate shows up as a popcount shortfall at validation,
/// but catching it here gives the caller a precise error).
pub fn word_from_elements(n: u32, elements: &[u32]) -> Result<SetWord> {
    let mut word: SetWord = 0;
    for &e in elements {
        if e == 0 || e > n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        let bit = mask_of(e);
        if word & bit != 0 {
            return Err(Error::WrongCardinality {
                got: elements.len() as u32 - 1,
                expected: elements.len() as u32,
            });
        }
        word |= bit;
    }
    Ok(word)
}

/// Unpacks a word into sorted 1-based elements.
pub fn elements_of(mut word: SetWord) -> Vec<u32> {
    let mut out = Vec::with_capacity(word.count_ones() as usize);
    while word != 0 {
        let bit = word & word.wrapping_neg();
        out.push(bit.trailing_zeros() + 1);
        word &= word - 1;
    }
    out
}

/// Renders a word as `{a, b, c}` for error messages and reports.
pub fn format_set(word: SetWord) -> String {
    let elems = elements_of(word);
    let inner: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

/// All k-subsets of the ground set `universe` (given as a mask), in
/// ascending order as words. Uses Gosper's hack on the compressed index
/// space and expands through the universe's bit positions, which preserves
/// the ascending order because position expansion is monotone.
pub fn k_subsets_of_mask(universe: SetWord, k: u32) -> Vec<SetWord> {
    let t = universe.count_ones();
    if k > t {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let positions: Vec<u32> = elements_of(universe).iter().map(|e| e - 1).collect();
    let expand = |compressed: SetWord| -> SetWord {
        let mut out = 0u64;
        let mut c = compressed;
        while c != 0 {
            let idx = c.trailing_zeros() as usize;
            out |= 1u64 << positions[idx];
            c &= c - 1;
        }
        out
    };

    let count = binom_usize(t, k);
    let mut out = Vec::with_capacity(count);
    // Last combination in compressed space: k high bits of the t-bit window.
    let last: SetWord = mask_full(t) & !mask_full(t - k);
    let mut cur: SetWord = mask_full(k);
    loop {
        out.push(expand(cur));
        if cur == last {
            break;
        }
        // Gosper's hack: next k-bit word in ascending order.
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
    }
    out
}

/// All k-subsets of [n], ascending as words.
pub fn k_subsets(n: u32, k: u32) -> Vec<SetWord> {
    k_subsets_of_mask(mask_full(n), k)
}

/// Small binomial for capacity hints; saturates instead of overflowing.
fn binom_usize(n: u32, k: u32) -> usize {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_rejects_bad_shapes() {
        assert!(Params::new(0, 0).is_err());
        assert!(Params::new(65, 3).is_err());
        assert!(Params::new(5, 0).is_err());
        assert!(Params::new(5, 6).is_err());
        assert!(Params::new(64, 64).is_ok());
    }

    #[test]
    fn masks() {
        assert_eq!(mask_full(3), 0b111);
        assert_eq!(mask_full(64), !0u64);
        assert_eq!(mask_interval(2, 4), 0b1110);
        assert_eq!(mask_interval(4, 2), 0);
        assert_eq!(mask_of(1), 1);
        assert_eq!(mask_of(64), 1 << 63);
    }

    #[test]
    fn word_round_trip() {
        let w = word_from_elements(9, &[1, 3, 9]).unwrap();
        assert_eq!(elements_of(w), vec![1, 3, 9]);
        assert_eq!(format_set(w), "{1, 3, 9}");
        assert!(word_from_elements(9, &[10]).is_err());
        assert!(word_from_elements(9, &[2, 2]).is_err());
    }

    #[test]
    fn subsets_count_and_order() {
        let s = k_subsets(5, 2);
        assert_eq!(s.len(), 10);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s[0], 0b11);
        assert_eq!(*s.last().unwrap(), 0b11000);

        // Degenerate shapes.
        assert_eq!(k_subsets(4, 0), vec![0]);
        assert_eq!(k_subsets(4, 4), vec![0b1111]);
        assert_eq!(k_subsets(3, 5), Vec::<SetWord>::new());
        assert_eq!(k_subsets(64, 1).len(), 64);
        assert_eq!(k_subsets(64, 63).len(), 64);
    }

    #[test]
    fn subsets_of_sparse_mask() {
        // Universe {1, 4, 6}: pairs should be {1,4}, {1,6}, {4,6}.
        let universe = word_from_elements(6, &[1, 4, 6]).unwrap();
        let pairs = k_subsets_of_mask(universe, 2);
        assert_eq!(
            pairs,
            vec![
                word_from_elements(6, &[1, 4]).unwrap(),
                word_from_elements(6, &[1, 6]).unwrap(),
                word_from_elements(6, &[4, 6]).unwrap(),
            ]
        );
    }
}
