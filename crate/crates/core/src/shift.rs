use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::{mask_of, SetWord};

fn validate_pair(i: u32, j: u32, n: u32) -> Result<()> {
    if i == 0 || j > n {
        let bad = if i == 0 { i } else { j };
        return Err(Error::ElementOutOfRange { element: bad, n });
    }
    if i >= j {
        return Err(Error::InvalidShiftPair { i, j });
    }
    Ok(())
}

/// The (i,j)-compression of one set: replaces j by i unless i is already
/// present or j is absent.
pub fn shift_set(a: SetWord, i: u32, j: u32) -> Result<SetWord> {
    validate_pair(i, j, 64)?;
    let bi = mask_of(i);
    let bj = mask_of(j);
    if a & bi != 0 || a & bj == 0 {
        Ok(a)
    } else {
        Ok((a & !bj) | bi)
    }
}

/// Family-wise shift: a member moves to its compression unless the
/// compression is already a member, in which case it stays. Size and
/// uniformity are always preserved.
pub fn shift_family(f: &Family, i: u32, j: u32) -> Result<Family> {
    validate_pair(i, j, f.n())?;
    let words: Vec<SetWord> = f
        .iter()
        .map(|w| {
            let shifted = shift_set(w, i, j).expect("pair validated");
            if shifted != w && f.contains(shifted) {
                w
            } else {
                shifted
            }
        })
        .collect();
    debug_assert_eq!(words.len(), f.size());
    Ok(Family::from_unsorted_unchecked(f.params(), words))
}

/// Applies the listed shifts in order, repeatedly, until a full pass
/// changes nothing. Terminates because every effective shift strictly
/// decreases the sum of member masks.
pub fn shift_closure(f: &Family, pairs: &[(u32, u32)]) -> Result<Family> {
    for &(i, j) in pairs {
        validate_pair(i, j, f.n())?;
    }
    let mut cur = f.clone();
    loop {
        let mut next = cur.clone();
        for &(i, j) in pairs {
            next = shift_family(&next, i, j)?;
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{is_intersecting, make_family};
    use crate::set::{word_from_elements, Params};

    fn p(n: u32, k: u32) -> Params {
        Params::new(n, k).unwrap()
    }

    #[test]
    fn set_rule() {
        let a = word_from_elements(5, &[2, 3]).unwrap();
        assert_eq!(
            shift_set(a, 1, 2).unwrap(),
            word_from_elements(5, &[1, 3]).unwrap()
        );
        // i present: unchanged. j absent: unchanged.
        let b = word_from_elements(5, &[1, 2]).unwrap();
        assert_eq!(shift_set(b, 1, 2).unwrap(), b);
        let c = word_from_elements(5, &[3, 4]).unwrap();
        assert_eq!(shift_set(c, 1, 2).unwrap(), c);
        assert_eq!(shift_set(a, 2, 2), Err(Error::InvalidShiftPair { i: 2, j: 2 }));
        assert_eq!(shift_set(a, 3, 2), Err(Error::InvalidShiftPair { i: 3, j: 2 }));
    }

    #[test]
    fn family_rule_collision() {
        let f = make_family(p(5, 2), &[vec![1, 3], vec![2, 3]]).unwrap();
        let shifted = shift_family(&f, 1, 2).unwrap();
        // {2,3} wants to move to {1,3}, already present, so it stays.
        assert_eq!(shifted, f);
    }

    #[test]
    fn shifting_preserves_size_and_intersecting() {
        let f = make_family(
            p(7, 3),
            &[vec![2, 3, 4], vec![3, 4, 5], vec![2, 4, 7], vec![4, 6, 7]],
        )
        .unwrap();
        assert!(is_intersecting(&f));
        let g = shift_family(&f, 1, 4).unwrap();
        assert_eq!(g.size(), f.size());
        assert_eq!(g.k(), f.k());
        assert!(is_intersecting(&g));
    }

    #[test]
    fn closure_reaches_fixed_point() {
        let f = make_family(
            p(6, 2),
            &[vec![5, 6], vec![4, 5], vec![4, 6]],
        )
        .unwrap();
        let pairs: Vec<(u32, u32)> = (1..=6u32)
            .flat_map(|i| ((i + 1)..=6u32).map(move |j| (i, j)))
            .collect();
        let closed = shift_closure(&f, &pairs).unwrap();
        assert_eq!(closed.size(), f.size());
        // A fixed point: another pass changes nothing.
        assert_eq!(shift_closure(&closed, &pairs).unwrap(), closed);
        // Fully-shifted 3-member 2-uniform family is the triangle on {1,2,3}.
        assert_eq!(
            closed,
            make_family(p(6, 2), &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap()
        );
    }

    #[test]
    fn closure_keeps_core_containing_families_intact() {
        // Members all contain [2,4]; shifts among {2,3,4} with i < j in
        // that window cannot move anything.
        let f = make_family(
            p(9, 4),
            &[vec![2, 3, 4, 7], vec![2, 3, 4, 9]],
        )
        .unwrap();
        let pairs: Vec<(u32, u32)> = vec![(2, 3), (2, 4), (3, 4)];
        assert_eq!(shift_closure(&f, &pairs).unwrap(), f);
    }
}
