use crate::family::{relabel, Family};

fn degree_and_cooccurrence(f: &Family) -> (Vec<u64>, Vec<Vec<u64>>) {
    let n = f.n() as usize;
    let mut deg = vec![0u64; n];
    let mut co = vec![vec![0u64; n]; n];
    for w in f.iter() {
        let elems: Vec<usize> = crate::set::elements_of(w)
            .into_iter()
            .map(|e| e as usize - 1)
            .collect();
        for (ai, &a) in elems.iter().enumerate() {
            deg[a] += 1;
            for &b in &elems[ai + 1..] {
                co[a][b] += 1;
                co[b][a] += 1;
            }
        }
    }
    (deg, co)
}

/// Pruning invariant per element: its degree plus the sorted vector of
/// co-occurrence counts against all other elements.
fn signatures(deg: &[u64], co: &[Vec<u64>]) -> Vec<(u64, Vec<u64>)> {
    deg.iter()
        .zip(co.iter())
        .map(|(&d, row)| {
            let mut r = row.clone();
            r.sort_unstable();
            (d, r)
        })
        .collect()
}

struct Search<'a> {
    co_f: Vec<Vec<u64>>,
    co_g: Vec<Vec<u64>>,
    candidates: Vec<Vec<usize>>,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    f: &'a Family,
    g: &'a Family,
}

impl Search<'_> {
    fn consistent(&self, x: usize, y: usize) -> bool {
        self.image.iter().enumerate().all(|(x2, img)| match img {
            Some(y2) => self.co_f[x][x2] == self.co_g[y][*y2],
            None => true,
        })
    }

    fn dfs(&mut self, depth: usize) -> Option<Vec<u32>> {
        if depth == self.order.len() {
            return self.verify();
        }
        let x = self.order[depth];
        let cands = self.candidates[x].clone();
        for y in cands {
            if self.used[y] || !self.consistent(x, y) {
                continue;
            }
            self.image[x] = Some(y);
            self.used[y] = true;
            if let Some(hit) = self.dfs(depth + 1) {
                return Some(hit);
            }
            self.image[x] = None;
            self.used[y] = false;
        }
        None
    }

    /// Completes the partial map with the unconstrained elements (those in
    /// no member on either side) and checks exact equality after relabeling.
    fn verify(&self) -> Option<Vec<u32>> {
        let n = self.image.len();
        let mut perm = vec![0u32; n];
        let mut taken = vec![false; n];
        for (x, img) in self.image.iter().enumerate() {
            if let Some(y) = img {
                perm[x] = *y as u32 + 1;
                taken[*y] = true;
            }
        }
        let mut spare = (0..n).filter(|&y| !taken[y]);
        for slot in perm.iter_mut() {
            if *slot == 0 {
                *slot = spare.next().expect("bijection completes") as u32 + 1;
            }
        }
        let mapped = relabel(self.f, &perm).expect("constructed permutation is valid");
        if &mapped == self.g {
            Some(perm)
        } else {
            None
        }
    }
}

/// Searches for a relabeling π of [n] with π(f) = g. Returns the
/// permutation (image of element x at index x−1) or None. Families with
/// different shapes or sizes are never isomorphic.
pub fn are_isomorphic(f: &Family, g: &Family) -> Option<Vec<u32>> {
    if f.params() != g.params() || f.size() != g.size() {
        return None;
    }
    let n = f.n() as usize;
    if f == g {
        return Some((1..=n as u32).collect());
    }
    let (deg_f, co_f) = degree_and_cooccurrence(f);
    let (deg_g, co_g) = degree_and_cooccurrence(g);
    let sig_f = signatures(&deg_f, &co_f);
    let sig_g = signatures(&deg_g, &co_g);
    {
        let mut a = sig_f.clone();
        let mut b = sig_g.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }

    // Only elements that actually occur need assignment; spares are filled
    // in at verification time.
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order: Vec<usize> = Vec::new();
    for x in 0..n {
        if deg_f[x] == 0 {
            continue;
        }
        candidates[x] = (0..n).filter(|&y| sig_g[y] == sig_f[x]).collect();
        if candidates[x].is_empty() {
            return None;
        }
        order.push(x);
    }
    // Most-constrained first.
    order.sort_by_key(|&x| (candidates[x].len(), x));

    let mut search = Search {
        co_f,
        co_g,
        candidates,
        order,
        image: vec![None; n],
        used: vec![false; n],
        f,
        g,
    };
    search.dfs(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{diversity, make_family, relabel};
    use crate::set::Params;

    fn p(n: u32, k: u32) -> Params {
        Params::new(n, k).unwrap()
    }

    #[test]
    fn identity_on_equal_families() {
        let f = make_family(p(6, 2), &[vec![1, 2], vec![2, 3]]).unwrap();
        let perm = are_isomorphic(&f, &f).unwrap();
        assert_eq!(perm, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn relabeled_family_is_found() {
        let f = make_family(
            p(7, 3),
            &[vec![1, 2, 3], vec![1, 4, 5], vec![2, 4, 6]],
        )
        .unwrap();
        let sigma = vec![3u32, 7, 1, 5, 2, 6, 4];
        let g = relabel(&f, &sigma).unwrap();
        let pi = are_isomorphic(&f, &g).expect("isomorphic by construction");
        assert_eq!(relabel(&f, &pi).unwrap(), g);
        assert_eq!(diversity(&f).0, diversity(&g).0);
    }

    #[test]
    fn shape_and_invariant_mismatches() {
        let f = make_family(p(6, 2), &[vec![1, 2], vec![1, 3]]).unwrap();
        let g = make_family(p(6, 2), &[vec![1, 2], vec![3, 4]]).unwrap();
        // Same size, but f is a path through 1 and g is a matching.
        assert!(are_isomorphic(&f, &g).is_none());

        let h = make_family(p(7, 2), &[vec![1, 2], vec![1, 3]]).unwrap();
        assert!(are_isomorphic(&f, &h).is_none());

        let bigger = make_family(p(6, 2), &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert!(are_isomorphic(&f, &bigger).is_none());
    }

    #[test]
    fn triangle_vs_star_of_three() {
        let tri = make_family(p(5, 2), &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let star3 = make_family(p(5, 2), &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert!(are_isomorphic(&tri, &star3).is_none());
    }
}
