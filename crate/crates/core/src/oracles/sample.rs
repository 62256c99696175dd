use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::family::{diversity, relabel, Family};
use crate::set::{k_subsets, mask_interval, mask_of, Params, SetWord};

const ATTEMPTS: u32 = 64;

/// Samples a maximal intersecting family with diversity at least
/// `target_diversity`, deterministic in `seed`. Target 0 is a full star at
/// a random center. Positive targets seed a greedy completion with block
/// fragments biased toward the target and retry on misses; a target this
/// sampler cannot reach fails after a fixed number of attempts.
pub fn random_intersecting(params: Params, target_diversity: u64, seed: u64) -> Result<Family> {
    let (n, k) = (params.n(), params.k());
    if n <= 2 * k {
        return Err(Error::Regime(format!(
            "sampler needs n > 2k, got n={n}, k={k}"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    if target_diversity == 0 {
        let center = rng.gen_range(1..=n);
        let words: Vec<SetWord> = k_subsets(n, k)
            .into_iter()
            .filter(|w| w & mask_of(center) != 0)
            .collect();
        return Ok(Family::from_sorted_unchecked(params, words));
    }
    for attempt in 0..ATTEMPTS {
        let fragment = if attempt % 2 == 0 {
            core_fragment(params, target_diversity)
        } else {
            block_fragment(params, &mut rng)
        };
        let completed = greedy_complete(params, fragment, &mut rng);
        let perm = {
            let mut p: Vec<u32> = (1..=n).collect();
            p.shuffle(&mut rng);
            p
        };
        let shuffled = relabel(&completed, &perm).expect("shuffled identity is a bijection");
        if diversity(&shuffled).0 >= target_diversity {
            return Ok(shuffled);
        }
    }
    Err(Error::DiversityInfeasible {
        target: target_diversity,
        attempts: ATTEMPTS,
    })
}

/// d sets sharing the (k-1)-core [2,k], with distinct tails past k. All
/// avoid element 1, so the completed family keeps at least d members off
/// any one element.
fn core_fragment(params: Params, d: u64) -> Vec<SetWord> {
    let (n, k) = (params.n(), params.k());
    if k < 2 {
        // No common core to share; fall back to an unseeded completion.
        return Vec::new();
    }
    let l = d.min(u64::from(n - k)) as u32;
    let core = mask_interval(2, k);
    (1..=l).map(|x| core | mask_of(k + x)).collect()
}

/// The two blocks [2,k+1] and [i+1,k+i] for a random i. Overlapping, both
/// avoiding 1.
fn block_fragment(params: Params, rng: &mut ChaCha12Rng) -> Vec<SetWord> {
    let (n, k) = (params.n(), params.k());
    if k.min(n - k) < 2 {
        return Vec::new();
    }
    let i = rng.gen_range(2..=k.min(n - k));
    vec![mask_interval(2, k + 1), mask_interval(i + 1, k + i)]
}

/// One pass over the candidate sets in shuffled order, keeping whatever
/// stays intersecting. A single pass already yields a maximal family:
/// every rejected candidate conflicts with a member that survives to the
/// end.
fn greedy_complete(params: Params, fragment: Vec<SetWord>, rng: &mut ChaCha12Rng) -> Family {
    let mut members = fragment;
    let mut cands = k_subsets(params.n(), params.k());
    cands.shuffle(rng);
    for w in cands {
        if !members.contains(&w) && members.iter().all(|&m| m & w != 0) {
            members.push(w);
        }
    }
    Family::from_unsorted_unchecked(params, members)
}
