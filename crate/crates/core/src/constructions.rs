//! Extremal constructions: Turán graphs and hypergraphs, cones over them, the
//! `H(m)` / `H'(m)` family, books and the fixed-vertex star.

use serde::Serialize;

use crate::bits::{binomial, bit, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, UniformHypergraph, VertexPartition, MAX_VERTICES};

/// Part sizes of a multipartite construction. Vertices are assigned to parts
/// contiguously in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartSizeProfile {
    sizes: Vec<usize>,
}

impl PartSizeProfile {
    pub fn new(sizes: Vec<usize>) -> Self {
        PartSizeProfile { sizes }
    }

    /// `n` split into `k` parts differing by at most one, larger parts first.
    pub fn balanced(n: usize, k: usize) -> Self {
        let (q, rem) = (n / k, n % k);
        PartSizeProfile { sizes: (0..k).map(|i| q + usize::from(i < rem)).collect() }
    }

    /// A first part of size `m` followed by `n - m` split into `k - 1`
    /// balanced parts.
    pub fn with_first(n: usize, k: usize, m: usize) -> Self {
        let mut sizes = vec![m];
        sizes.extend(PartSizeProfile::balanced(n - m, k - 1).sizes);
        PartSizeProfile { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn partition(&self) -> VertexPartition {
        VertexPartition::contiguous(&self.sizes)
    }
}

/// Elementary symmetric polynomial `e_j` of `sizes`.
pub fn elementary_symmetric(sizes: &[usize], j: usize) -> u64 {
    let mut e = vec![0u64; j + 1];
    e[0] = 1;
    for &s in sizes {
        for d in (1..=j).rev() {
            e[d] = e[d].saturating_add(e[d - 1].saturating_mul(s as u64));
        }
    }
    e[j]
}

fn check_uniformity(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::UniformityTooLow { r });
    }
    Ok(())
}

fn check_k(k: usize, r: usize) -> Result<()> {
    check_uniformity(r)?;
    if k < r {
        return Err(Error::KTooSmall { k, r });
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    Ok(())
}

fn transversals(sizes: &[usize], r: usize) -> Vec<u64> {
    let mut starts = Vec::with_capacity(sizes.len());
    let mut next = 0;
    for &s in sizes {
        starts.push(next);
        next += s;
    }
    let mut out = Vec::new();
    fn go(sizes: &[usize], starts: &[usize], part: usize, left: usize, mask: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        if sizes.len() - part < left {
            return;
        }
        for v in starts[part]..starts[part] + sizes[part] {
            go(sizes, starts, part + 1, left - 1, mask | bit(v), out);
        }
        go(sizes, starts, part + 1, left, mask, out);
    }
    go(sizes, &starts, 0, r, 0, &mut out);
    out
}

/// The complete multipartite `r`-graph: all `r`-sets meeting each part at most
/// once.
pub fn complete_multipartite(sizes: &[usize], r: usize) -> Result<UniformHypergraph> {
    check_uniformity(r)?;
    let n = sizes.iter().sum();
    check_n(n)?;
    Ok(UniformHypergraph::from_masks_unchecked(n, r, transversals(sizes, r)))
}

/// `T_2(n, k)`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameters("k must be at least 1".into()));
    }
    Graph::from_hypergraph(complete_multipartite(PartSizeProfile::balanced(n, k).sizes(), 2)?)
}

/// `T_r(n, k)`.
pub fn turan_hypergraph(n: usize, k: usize, r: usize) -> Result<UniformHypergraph> {
    check_k(k, r)?;
    complete_multipartite(PartSizeProfile::balanced(n, k).sizes(), r)
}

/// `t_r(n, k)`, the edge count of `T_r(n, k)`.
pub fn turan_count(n: usize, k: usize, r: usize) -> Result<u64> {
    check_k(k, r)?;
    Ok(elementary_symmetric(PartSizeProfile::balanced(n, k).sizes(), r))
}

/// `T_r(n - i, k)` on vertices `i..n` plus every `r`-set meeting the apex
/// set `{0, ..., i-1}`.
pub fn turan_cone(n: usize, k: usize, r: usize, i: usize) -> Result<UniformHypergraph> {
    check_k(k, r)?;
    check_n(n)?;
    if i > n {
        return Err(Error::BadParameters(format!("{i} apex vertices exceed n = {n}")));
    }
    let mut masks: Vec<u64> =
        transversals(PartSizeProfile::balanced(n - i, k).sizes(), r).into_iter().map(|m| m << i).collect();
    masks.extend(Combinations::new(n, r).take_while(|c| c[0] < i).map(|c| c.iter().fold(0u64, |m, &v| m | bit(v))));
    Ok(UniformHypergraph::from_masks_unchecked(n, r, masks))
}

/// Closed form for the edge count of [`turan_cone`].
pub fn turan_cone_count(n: usize, k: usize, r: usize, i: usize) -> Result<u64> {
    if i > n {
        return Err(Error::BadParameters(format!("{i} apex vertices exceed n = {n}")));
    }
    let apex: u64 = (1..=i).map(|j| binomial((n - j) as u64, (r - 1) as u64)).sum();
    Ok(apex + turan_count(n - i, k, r)?)
}

fn check_m(n: usize, k: usize, r: usize, m: usize, min_m: usize) -> Result<()> {
    check_k(k, r)?;
    check_n(n)?;
    if n < k || m < min_m || m > n + 1 - k {
        return Err(Error::BadM { m, n, k });
    }
    Ok(())
}

/// `H(m)`: complete `k`-partite `r`-graph whose first part `V_1 = {0..m-1}`
/// has `m` vertices, the other `n - m` being balanced over `k - 1` parts.
pub fn h_part(n: usize, k: usize, r: usize, m: usize) -> Result<UniformHypergraph> {
    check_m(n, k, r, m, 1)?;
    complete_multipartite(PartSizeProfile::with_first(n, k, m).sizes(), r)
}

/// `H'(m)`: `H(m)` plus every `r`-set through `u = 0` and `v = 1`, and every
/// `r`-set made of `u` and `r - 1` vertices outside `V_1`.
pub fn h_prime(n: usize, k: usize, r: usize, m: usize) -> Result<UniformHypergraph> {
    check_m(n, k, r, m, 2)?;
    let mut masks = transversals(PartSizeProfile::with_first(n, k, m).sizes(), r);
    masks.extend(Combinations::new(n - 2, r - 2).map(|c| c.iter().fold(0b11u64, |acc, &v| acc | bit(v + 2))));
    masks.extend(Combinations::new(n - m, r - 1).map(|c| c.iter().fold(1u64, |acc, &v| acc | bit(v + m))));
    Ok(UniformHypergraph::from_masks_unchecked(n, r, masks))
}

/// Closed form for `|E(H'(m))|`.
pub fn h_prime_count(n: usize, k: usize, r: usize, m: usize) -> Result<u64> {
    check_m(n, k, r, m, 2)?;
    let profile = PartSizeProfile::with_first(n, k, m);
    let others = &profile.sizes()[1..];
    Ok(elementary_symmetric(profile.sizes(), r)
        + binomial((n - 2) as u64, (r - 2) as u64)
        + binomial((n - m) as u64, (r - 1) as u64)
        - elementary_symmetric(others, r - 1))
}

/// The `m` maximising `|E(H'(m))|` over `2..=n-k+1`, with its edge count;
/// ties go to the smallest `m`.
pub fn optimal_m(n: usize, k: usize, r: usize) -> Result<(usize, u64)> {
    check_k(k, r)?;
    if n < k + 1 {
        return Err(Error::BadParameters(format!("optimal m needs n >= k + 1, got n = {n}, k = {k}")));
    }
    let mut best = (0, 0);
    for m in 2..=n + 1 - k {
        let e = h_prime_count(n, k, r, m)?;
        if best.0 == 0 || e > best.1 {
            best = (m, e);
        }
    }
    Ok(best)
}

/// Every `m` attaining the maximum of `|E(H'(m))|`.
pub fn optimal_m_set(n: usize, k: usize, r: usize) -> Result<Vec<usize>> {
    let (_, best) = optimal_m(n, k, r)?;
    let mut out = Vec::new();
    for m in 2..=n + 1 - k {
        if h_prime_count(n, k, r, m)? == best {
            out.push(m);
        }
    }
    Ok(out)
}

/// `B_{k+1,1}`: two copies of `K_{k+1}` sharing vertex 0.
pub fn book_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParameters("book needs k >= 1".into()));
    }
    let mut edges = Vec::new();
    for side in [1, k + 1] {
        let clique: Vec<usize> = std::iter::once(0).chain(side..side + k).collect();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::new(2 * k + 1, &edges)
}

/// All `r`-sets containing vertex 0.
pub fn fixed_vertex_hypergraph(n: usize, r: usize) -> Result<UniformHypergraph> {
    check_uniformity(r)?;
    check_n(n)?;
    if n < r {
        return Err(Error::BadParameters(format!("need n >= r, got n = {n}, r = {r}")));
    }
    let masks = Combinations::new(n - 1, r - 1).map(|c| c.iter().fold(1u64, |acc, &v| acc | bit(v + 1))).collect();
    Ok(UniformHypergraph::from_masks_unchecked(n, r, masks))
}
