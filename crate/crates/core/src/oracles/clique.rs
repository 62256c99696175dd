use std::time::Instant;

use crate::error::Result;
use crate::family::Family;
use crate::oracles::{BudgetUsage, EnumBudget};
use crate::set::{k_subsets, Params, SetWord};

/// Pivot selection for the maximal-clique recursion. MaxCover picks the
/// candidate dominating the most of P (strongest pruning); LowestIndex is
/// an intentionally different rule used to cross-check censuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    #[default]
    MaxCover,
    LowestIndex,
}

#[derive(Debug, Clone)]
pub struct EnumOutcome {
    pub usage: BudgetUsage,
}

/// Adjacency as packed bit rows over vertex indices.
struct Graph {
    rows: Vec<Vec<u64>>,
    words: usize,
}

impl Graph {
    fn intersecting(vertices: &[SetWord]) -> Self {
        let v = vertices.len();
        let words = v.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; v];
        for i in 0..v {
            for j in (i + 1)..v {
                if vertices[i] & vertices[j] != 0 {
                    rows[i][j / 64] |= 1 << (j % 64);
                    rows[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        Graph { rows, words }
    }
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn full(v: usize, words: usize) -> Self {
        let mut bits = vec![0u64; words];
        for i in 0..v {
            bits[i / 64] |= 1 << (i % 64);
        }
        BitSet(bits)
    }

    fn empty(words: usize) -> Self {
        BitSet(vec![0u64; words])
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn and(&self, other: &[u64]) -> BitSet {
        BitSet(self.0.iter().zip(other).map(|(a, b)| a & b).collect())
    }

    fn count_and(&self, other: &[u64]) -> u32 {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut m = w;
            std::iter::from_fn(move || {
                if m == 0 {
                    None
                } else {
                    let b = m.trailing_zeros() as usize;
                    m &= m - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

struct Enumerator<'a, F: FnMut(&Family)> {
    graph: Graph,
    vertices: &'a [SetWord],
    params: Params,
    rule: PivotRule,
    sink: F,
    started: Instant,
    budget: EnumBudget,
    nodes: u64,
    families: u64,
    capped: Option<&'static str>,
}

impl<F: FnMut(&Family)> Enumerator<'_, F> {
    fn over_budget(&mut self) -> bool {
        if self.capped.is_some() {
            return true;
        }
        if let Some(cap) = self.budget.max_nodes {
            if self.nodes >= cap {
                self.capped = Some("nodes");
                return true;
            }
        }
        if let Some(cap) = self.budget.max_families {
            if self.families >= cap {
                self.capped = Some("families");
                return true;
            }
        }
        if let Some(cap) = self.budget.max_millis {
            // Clock checks are rationed; node counts keep them rare.
            if self.nodes % 1024 == 0 && self.started.elapsed().as_millis() as u64 >= cap {
                self.capped = Some("millis");
                return true;
            }
        }
        false
    }

    fn emit(&mut self, clique: &[usize]) {
        let words: Vec<SetWord> = clique.iter().map(|&i| self.vertices[i]).collect();
        let fam = Family::from_unsorted_unchecked(self.params, words);
        self.families += 1;
        (self.sink)(&fam);
    }

    fn pivot(&self, p: &BitSet, x: &BitSet) -> usize {
        match self.rule {
            PivotRule::LowestIndex => p
                .iter()
                .next()
                .or_else(|| x.iter().next())
                .expect("P ∪ X nonempty"),
            PivotRule::MaxCover => {
                let mut best = usize::MAX;
                let mut best_cover = -1i64;
                for u in p.iter().chain(x.iter()) {
                    let cover = p.count_and(&self.graph.rows[u]) as i64;
                    if cover > best_cover {
                        best_cover = cover;
                        best = u;
                    }
                }
                best
            }
        }
    }

    fn recurse(&mut self, r: &mut Vec<usize>, p: BitSet, x: BitSet) {
        self.nodes += 1;
        if self.over_budget() {
            return;
        }
        if p.is_empty() && x.is_empty() {
            self.emit(r);
            return;
        }
        let pivot = self.pivot(&p, &x);
        let mut p = p;
        let mut x = x;
        // Candidates outside the pivot's neighborhood, in ascending order.
        let cands: Vec<usize> = p
            .iter()
            .filter(|&v| self.graph.rows[pivot][v / 64] >> (v % 64) & 1 == 0)
            .collect();
        for v in cands {
            if self.capped.is_some() {
                return;
            }
            r.push(v);
            let np = p.and(&self.graph.rows[v]);
            let nx = x.and(&self.graph.rows[v]);
            self.recurse(r, np, nx);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
}

/// Streams every inclusion-maximal intersecting family in C([n], k) into
/// `sink`, each exactly once, as maximal cliques of the set-intersection
/// graph. Order is deterministic for a fixed pivot rule. Returns how much
/// of the search ran; an exhausted budget means the stream is a prefix.
pub fn enumerate_maximal_intersecting<F: FnMut(&Family)>(
    params: Params,
    budget: &EnumBudget,
    rule: PivotRule,
    sink: F,
) -> Result<EnumOutcome> {
    let (n, k) = (params.n(), params.k());
    if n <= 2 * k {
        return Err(crate::error::Error::Regime(format!(
            "census needs n > 2k, got n={n}, k={k}"
        )));
    }
    let vertices = k_subsets(n, k);
    let graph = Graph::intersecting(&vertices);
    let words = graph.words;
    let v = vertices.len();
    let mut e = Enumerator {
        graph,
        vertices: &vertices,
        params,
        rule,
        sink,
        started: Instant::now(),
        budget: *budget,
        nodes: 0,
        families: 0,
        capped: None,
    };
    let mut r = Vec::new();
    e.recurse(&mut r, BitSet::full(v, words), BitSet::empty(words));
    Ok(EnumOutcome {
        usage: BudgetUsage {
            families: e.families,
            nodes: e.nodes,
            complete: e.capped.is_none(),
            capped_by: e.capped.map(str::to_string),
        },
    })
}

/// Collects the census into memory; optionally keeps one representative
/// per isomorphism class. Only sensible at small scales.
pub fn collect_maximal_intersecting(
    params: Params,
    budget: &EnumBudget,
    dedup_isomorphic: bool,
) -> Result<(Vec<Family>, BudgetUsage)> {
    let mut all: Vec<Family> = Vec::new();
    let outcome = enumerate_maximal_intersecting(params, budget, PivotRule::default(), |f| {
        all.push(f.clone());
    })?;
    if dedup_isomorphic {
        let mut reps: Vec<Family> = Vec::new();
        for f in all {
            if !reps
                .iter()
                .any(|r| crate::iso::are_isomorphic(r, &f).is_some())
            {
                reps.push(f);
            }
        }
        all = reps;
    } else {
        all.sort_by(|a, b| a.words().cmp(b.words()));
    }
    Ok((all, outcome.usage))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{diversity, is_intersecting, full_family};

    #[test]
    fn census_at_five_two() {
        let params = Params::new(5, 2).unwrap();
        let (fams, usage) =
            collect_maximal_intersecting(params, &EnumBudget::default(), false).unwrap();
        assert!(usage.complete);
        assert_eq!(usage.families, 15);
        assert_eq!(fams.len(), 15);
        let stars = fams.iter().filter(|f| diversity(f).0 == 0).count();
        assert_eq!(stars, 5);
        // The other ten are the triangles.
        assert!(fams
            .iter()
            .filter(|f| diversity(f).0 > 0)
            .all(|f| f.size() == 3));
    }

    #[test]
    fn census_agrees_with_subset_brute_force() {
        // Independent check at (5,2): test every subfamily of the ten
        // 2-sets for maximal intersecting.
        let params = Params::new(5, 2).unwrap();
        let all = full_family(params);
        let words = all.words();
        let mut expected: Vec<Vec<SetWord>> = Vec::new();
        for mask in 0u32..(1 << words.len()) {
            let chosen: Vec<SetWord> = (0..words.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| words[i])
                .collect();
            if chosen.is_empty() {
                continue;
            }
            let fam = Family::new(params, chosen.clone()).unwrap();
            if !is_intersecting(&fam) {
                continue;
            }
            let extendable = words.iter().any(|&w| {
                !chosen.contains(&w) && chosen.iter().all(|&c| c & w != 0)
            });
            if !extendable {
                expected.push(fam.words().to_vec());
            }
        }
        expected.sort();

        let (fams, _) =
            collect_maximal_intersecting(params, &EnumBudget::default(), false).unwrap();
        let got: Vec<Vec<SetWord>> = fams.iter().map(|f| f.words().to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn pivot_rules_agree_at_seven_three() {
        let params = Params::new(7, 3).unwrap();
        let mut a: Vec<Vec<SetWord>> = Vec::new();
        let mut b: Vec<Vec<SetWord>> = Vec::new();
        let out_a = enumerate_maximal_intersecting(
            params,
            &EnumBudget::default(),
            PivotRule::MaxCover,
            |f| a.push(f.words().to_vec()),
        )
        .unwrap();
        let out_b = enumerate_maximal_intersecting(
            params,
            &EnumBudget::default(),
            PivotRule::LowestIndex,
            |f| b.push(f.words().to_vec()),
        )
        .unwrap();
        assert!(out_a.usage.complete && out_b.usage.complete);
        a.sort();
        b.sort();
        assert_eq!(a, b);
        // Every census member is maximal intersecting; stars are present.
        assert_eq!(out_a.usage.families as usize, a.len());
    }

    #[test]
    fn budget_caps_are_reported() {
        let params = Params::new(7, 3).unwrap();
        let budget = EnumBudget {
            max_families: Some(3),
            ..EnumBudget::default()
        };
        let (fams, usage) = collect_maximal_intersecting(params, &budget, false).unwrap();
        assert!(!usage.complete);
        assert_eq!(usage.capped_by.as_deref(), Some("families"));
        assert!(fams.len() <= 4);

        let tight = EnumBudget {
            max_nodes: Some(10),
            ..EnumBudget::default()
        };
        let (_, usage2) = collect_maximal_intersecting(params, &tight, false).unwrap();
        assert!(!usage2.complete);
        assert_eq!(usage2.capped_by.as_deref(), Some("nodes"));
    }

    #[test]
    fn iso_dedup_collapses_orbits() {
        let params = Params::new(5, 2).unwrap();
        let (reps, _) = collect_maximal_intersecting(params, &EnumBudget::default(), true).unwrap();
        // Stars collapse to one class, triangles to another.
        assert_eq!(reps.len(), 2);
    }
}
