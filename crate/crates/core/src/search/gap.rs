use std::fmt::Write as _;

use serde::Serialize;

use super::{ex_graph_cliques, ex_hypergraph, lower_bound_local_search, Budget, Forbidden, Objective, SearchProblem};
use crate::bits::binomial;
use crate::chromatic::{chromatic_number, is_star};
use crate::cliques::clique_expansion;
use crate::constructions::{fixed_vertex_hypergraph, h_prime, optimal_m, turan_cone, turan_hypergraph};
use crate::error::{Error, Result};
use crate::expansion::is_expansion_free;
use crate::hypergraph::{Graph, UniformHypergraph};

/// Hosts with at most this many candidate edges are solved exactly.
pub const EXHAUSTIVE_EDGE_LIMIT: u64 = 24;
const LOCAL_STEPS: usize = 200;
const LOCAL_SEED: u64 = 0;

/// One row of the gap table. Lower-bound cells are `None` where the
/// construction does not apply or is not free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapRow {
    pub n: usize,
    pub lb_clique: Option<u64>,
    pub lb_fixed: Option<u64>,
    pub lb_turan: Option<u64>,
    pub lb_cone: Option<u64>,
    pub lb_hprime: Option<u64>,
    pub value: u64,
    pub exhaustive: bool,
}

impl GapRow {
    pub fn lower_bounds(&self) -> impl Iterator<Item = u64> + '_ {
        [self.lb_clique, self.lb_fixed, self.lb_turan, self.lb_cone, self.lb_hprime].into_iter().flatten()
    }
}

fn free_count(h: UniformHypergraph, f: &Graph, r: usize, seeds: &mut Vec<UniformHypergraph>) -> Result<Option<u64>> {
    if is_expansion_free(&h, f, r)? {
        let e = h.edge_count() as u64;
        seeds.push(h);
        Ok(Some(e))
    } else {
        Ok(None)
    }
}

fn row(f: &Graph, r: usize, n: usize, budget: &Budget) -> Result<GapRow> {
    let mut seeds = Vec::new();
    let cliques = ex_graph_cliques(n, r, std::slice::from_ref(f), budget)?;
    let lb_clique = Some(cliques.value);
    seeds.push(clique_expansion(&Graph::from_hypergraph(cliques.witness)?, r)?);
    let lb_fixed = if !is_star(f) && n >= r {
        seeds.push(fixed_vertex_hypergraph(n, r)?);
        Some(binomial((n - 1) as u64, (r - 1) as u64))
    } else {
        None
    };
    let k = chromatic_number(f).saturating_sub(1);
    let (mut lb_turan, mut lb_cone, mut lb_hprime) = (None, None, None);
    if k >= r {
        lb_turan = free_count(turan_hypergraph(n, k, r)?, f, r, &mut seeds)?;
        if n >= 1 {
            lb_cone = free_count(turan_cone(n, k, r, 1)?, f, r, &mut seeds)?;
        }
        if n > k {
            let (m, _) = optimal_m(n, k, r)?;
            lb_hprime = free_count(h_prime(n, k, r, m)?, f, r, &mut seeds)?;
        }
    }
    let (value, exhaustive) = if binomial(n as u64, r as u64) <= EXHAUSTIVE_EDGE_LIMIT {
        let res = ex_hypergraph(n, r, f, budget)?;
        (res.value, res.exhaustive)
    } else {
        let seed = seeds.into_iter().max_by_key(|h| h.edge_count()).expect("clique seed present");
        let problem = SearchProblem {
            n,
            host_uniformity: r,
            forbidden: vec![Forbidden::Expansion(f.clone())],
            objective: Objective::Edges,
            budget: budget.clone(),
        };
        let res = lower_bound_local_search(&problem, &seed, 1, LOCAL_STEPS, LOCAL_SEED)?;
        (res.value, false)
    };
    Ok(GapRow { n, lb_clique, lb_fixed, lb_turan, lb_cone, lb_hprime, value, exhaustive })
}

/// Lower-bound constructions against the exact (or locally improved) value
/// of `ex_r(n, F^(r)+)` for each `n` in `ns`.
pub fn gap_table(f: &Graph, r: usize, ns: impl IntoIterator<Item = usize>, budget: &Budget) -> Result<Vec<GapRow>> {
    if f.edge_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    ns.into_iter().map(|n| row(f, r, n, budget)).collect()
}

/// CSV rendering; lower-bound columns that are empty in every row are left out.
pub fn gap_table_csv(rows: &[GapRow]) -> String {
    type Cell = fn(&GapRow) -> Option<u64>;
    let columns: [(&str, Cell); 5] = [
        ("lb_clique", |r| r.lb_clique),
        ("lb_fixed", |r| r.lb_fixed),
        ("lb_turan", |r| r.lb_turan),
        ("lb_cone", |r| r.lb_cone),
        ("lb_hprime", |r| r.lb_hprime),
    ];
    let kept: Vec<&(&str, Cell)> = columns.iter().filter(|(_, get)| rows.iter().any(|r| get(r).is_some())).collect();
    let mut out = String::from("n");
    for (name, _) in &kept {
        out.push(',');
        out.push_str(name);
    }
    out.push_str(",value,exhaustive\n");
    for r in rows {
        let _ = write!(out, "{}", r.n);
        for (_, get) in &kept {
            out.push(',');
            if let Some(v) = get(r) {
                let _ = write!(out, "{v}");
            }
        }
        let _ = writeln!(out, ",{},{}", r.value, r.exhaustive);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_rows_are_exhaustive_and_sandwiched() {
        let rows = gap_table(&Graph::complete(3).unwrap(), 3, 4..=6, &Budget::default()).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert!(row.exhaustive);
            assert!(row.lower_bounds().all(|lb| lb <= row.value), "{row:?}");
            assert_eq!(row.lb_fixed, Some(binomial((row.n - 1) as u64, 2)));
        }
        let csv = gap_table_csv(&rows);
        assert!(csv.starts_with("n,lb_clique,lb_fixed,value,exhaustive\n"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn star_drops_fixed_column() {
        let rows = gap_table(&Graph::star(2).unwrap(), 3, 4..=5, &Budget::default()).unwrap();
        assert!(rows.iter().all(|r| r.lb_fixed.is_none()));
        assert!(!gap_table_csv(&rows).lines().next().unwrap().contains("lb_fixed"));
    }
}
