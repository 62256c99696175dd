use crate::error::{Error, Result};
use crate::family::Family;
use crate::oracles::{BudgetUsage, EnumOutcome};
use crate::set::{k_subsets, Params, SetWord};

/// Streams every family H of s-sets over [m] with covering number 2 that
/// is minimal for it: the members have empty common intersection, but
/// dropping any one member leaves a common element. Members arrive in
/// ascending word order, whole families in lexicographic order. The search
/// never extends past s+1 members; no minimal family is larger.
pub fn enumerate_minimal_tau2<F: FnMut(&Family)>(m: u32, s: u32, sink: F) -> Result<EnumOutcome> {
    enumerate_with_cap(m, s, (s + 1) as usize, sink)
}

/// Same search with an explicit size cap, so tests can raise the cap and
/// confirm nothing lives beyond s+1.
pub(crate) fn enumerate_with_cap<F: FnMut(&Family)>(
    m: u32,
    s: u32,
    cap: usize,
    mut sink: F,
) -> Result<EnumOutcome> {
    let params = Params::new(m, s)?;
    if m <= 2 * s {
        return Err(Error::Regime(format!(
            "minimal covering-pair search needs m > 2s, got m={m}, s={s}"
        )));
    }
    let verts = k_subsets(m, s);
    let mut search = Search {
        verts: &verts,
        params,
        cap,
        sink: &mut sink,
        chosen: Vec::with_capacity(cap),
        loo: Vec::with_capacity(cap),
        families: 0,
        nodes: 0,
    };
    search.extend(params.ground_mask(), 0);
    let (families, nodes) = (search.families, search.nodes);
    Ok(EnumOutcome {
        usage: BudgetUsage::complete_with(families, nodes),
    })
}

struct Search<'a, F: FnMut(&Family)> {
    verts: &'a [SetWord],
    params: Params,
    cap: usize,
    sink: &'a mut F,
    chosen: Vec<SetWord>,
    /// loo[l] = intersection of chosen members with member l left out.
    loo: Vec<SetWord>,
    families: u64,
    nodes: u64,
}

impl<F: FnMut(&Family)> Search<'_, F> {
    /// Invariant on entry: the chosen prefix has nonempty intersection
    /// `and_all` and every leave-one-out intersection is nonempty. Both
    /// only shrink as members are added, so dead branches are cut early.
    fn extend(&mut self, and_all: SetWord, start: usize) {
        self.nodes += 1;
        for idx in start..self.verts.len() {
            let w = self.verts[idx];
            if self.loo.iter().any(|&r| r & w == 0) {
                continue;
            }
            let and_next = and_all & w;
            if and_next == 0 {
                // Minimal: intersection just emptied and each member still
                // has a private leave-one-out element. Extensions would
                // leave the new member's complement-intersection empty, so
                // stop here.
                self.chosen.push(w);
                self.families += 1;
                let fam = Family::from_sorted_unchecked(self.params, self.chosen.clone());
                (self.sink)(&fam);
                self.chosen.pop();
            } else if self.chosen.len() + 1 < self.cap {
                let saved = self.loo.clone();
                for r in &mut self.loo {
                    *r &= w;
                }
                self.loo.push(and_all);
                self.chosen.push(w);
                self.extend(and_next, idx + 1);
                self.chosen.pop();
                self.loo = saved;
            }
        }
    }
}
