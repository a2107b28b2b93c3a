use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Best, Meter, SearchProblem, SearchResult};
use crate::bits::{bit, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Hill climbing from `seed` by random single-edge additions and swaps that
/// keep the host free and never lower the objective. Each restart begins at
/// the seed; the run is a pure function of `rng_seed`. The result is never
/// exhaustive and its value is never below the seed's.
pub fn lower_bound_local_search(
    problem: &SearchProblem,
    seed: &UniformHypergraph,
    restarts: usize,
    steps: usize,
    rng_seed: u64,
) -> Result<SearchResult> {
    problem.validate()?;
    if seed.n() != problem.n || seed.r() != problem.host_uniformity {
        return Err(Error::BadParameters(format!(
            "seed has n = {}, r = {}; problem needs n = {}, r = {}",
            seed.n(),
            seed.r(),
            problem.n,
            problem.host_uniformity
        )));
    }
    if !problem.is_free(seed)? {
        return Err(Error::SeedNotFree);
    }
    let all_sets: Vec<u64> = Combinations::new(problem.n, problem.host_uniformity)
        .map(|c| c.iter().fold(0u64, |m, &v| m | bit(v)))
        .collect();
    let meter = Meter::new(&problem.budget);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut best = Best::new(problem.n, problem.host_uniformity);
    let seed_value = problem.objective.value(seed);
    best.offer(seed_value, seed);

    'outer: for _ in 0..restarts {
        let mut current = seed.clone();
        let mut value = seed_value;
        for _ in 0..steps {
            if !meter.tick() {
                break 'outer;
            }
            let absent: Vec<u64> = all_sets.iter().copied().filter(|&m| !current.contains_mask(m)).collect();
            if absent.is_empty() {
                break;
            }
            let e = absent[rng.gen_range(0..absent.len())];
            let swap = !current.is_empty() && rng.gen_bool(0.5);
            let base = if swap {
                let f = current.edge_masks()[rng.gen_range(0..current.edge_count())];
                current.without_mask(f)
            } else {
                current.clone()
            };
            let candidate = base.with_mask(e);
            if !problem.admits(&candidate, e) {
                continue;
            }
            let v = problem.objective.value(&candidate);
            if v < value {
                continue;
            }
            current = candidate;
            value = v;
            if v > best.value {
                best.offer(v, &current);
            }
        }
    }

    Ok(SearchResult {
        problem: problem.summary("local_search"),
        value: best.value,
        witness: best.witness,
        exhaustive: false,
        nodes: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}
