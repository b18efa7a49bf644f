//! Brute-force oracles shared by the integration and acceptance suites.
//!
//! Everything here works from raw matrices and edge masks, not from the
//! crate's rank tables or grouping shortcuts.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use itertools::Itertools;
use ultragraph_core::{FiniteSpace, Rational, SimpleGraph, SpaceClass};

/// Literal triple scan over the matrix entries.
pub fn brute_class(rows: &[Vec<Rational>]) -> SpaceClass {
    let n = rows.len();
    let triples = || (0..n).flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    let strong = triples().all(|(x, y, z)| {
        let m = if rows[x][z] > rows[z][y] { &rows[x][z] } else { &rows[z][y] };
        &rows[x][y] <= m
    });
    if strong {
        return SpaceClass::Ultrametric;
    }
    if triples().all(|(x, y, z)| rows[x][y] <= &rows[x][z] + &rows[z][y]) {
        SpaceClass::MetricOnly
    } else {
        SpaceClass::SemimetricOnly
    }
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// All unordered pairs of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// Graph on `n` vertices whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let edges = pairs(n).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| p);
    SimpleGraph::new(labels(n), edges).unwrap()
}

/// Every graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let m = n * (n - 1) / 2;
    (0..1u64 << m).map(move |mask| graph_from_mask(n, mask))
}

/// Every set partition of `0..n`, as block-index vectors (restricted growth
/// strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            go(i + 1, n, cur, max.max(b), out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = vec![0];
    go(1, n, &mut cur, 0, &mut out);
    out
}

/// Def.-level complete multipartite test: some partition with at least two
/// blocks has no edge inside a block and every cross pair an edge. Returns
/// the blocks (sorted, ordered by smallest member).
pub fn brute_multipartite(g: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    for assign in set_partitions(n) {
        let k = assign.iter().max().map_or(0, |m| m + 1);
        if k < 2 {
            continue;
        }
        let ok = pairs(n).into_iter().all(|(u, v)| g.has_edge(u, v) == (assign[u] != assign[v]));
        if ok {
            let mut blocks = vec![Vec::new(); k];
            for (v, &b) in assign.iter().enumerate() {
                blocks[b].push(v);
            }
            return Some(blocks);
        }
    }
    None
}

/// Some 3-vertex set induces a connected subgraph of the complement.
pub fn has_connected_triple_in_complement(g: &SimpleGraph) -> bool {
    (0..g.vertex_count()).tuple_combinations().any(|(a, b, c)| {
        let non = [!g.has_edge(a, b), !g.has_edge(b, c), !g.has_edge(a, c)];
        non.iter().filter(|&&e| e).count() >= 2
    })
}

/// Whether `perm` (a's point i -> b's point perm[i]) admits a strictly
/// increasing bijection `ψ: D(b) -> D(a)` with `d_a = ψ ∘ d_b ∘ perm`.
pub fn is_weak_similarity(a: &FiniteSpace, b: &FiniteSpace, perm: &[usize]) -> bool {
    let n = a.len();
    let mut psi: BTreeMap<Rational, Rational> = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let rho = b.distance(perm[x], perm[y]).clone();
            let d = a.distance(x, y).clone();
            if let Some(prev) = psi.insert(rho, d.clone()) {
                if prev != d {
                    return false;
                }
            }
        }
    }
    // ψ is now a function defined on all of D(b); it must be strictly
    // increasing and hit all of D(a).
    let images: Vec<&Rational> = psi.values().collect();
    images.windows(2).all(|w| w[0] < w[1]) && images.len() == a.distance_set().len()
}

pub fn brute_weakly_similar(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    a.len() == b.len() && (0..a.len()).permutations(a.len()).any(|p| is_weak_similarity(a, b, &p))
}

pub fn brute_isometric(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    let n = a.len();
    n == b.len()
        && (0..n).permutations(n).any(|p| (0..n).all(|x| (0..n).all(|y| a.distance(x, y) == b.distance(p[x], p[y]))))
}

/// Every vertex has exactly one vertex at distance equal to the graph
/// diameter. Hop counts via Floyd–Warshall.
pub fn brute_unique_diametrical_partner(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
        for j in 0..n {
            if g.has_edge(i, j) {
                row[j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let diam = d.iter().flatten().copied().max().unwrap();
    (0..n).all(|u| d[u].iter().filter(|&&x| x == diam).count() == 1)
}

/// Deterministic strictly increasing rescaling of a distance set: the
/// k-th positive distance maps to `offset + sum of the first k steps`.
pub fn rescale(space: &FiniteSpace, steps: &[Rational], offset: &Rational) -> FiniteSpace {
    let values = space.distance_set();
    let mut image = BTreeMap::new();
    let mut acc = offset.clone();
    for (k, v) in values.iter().enumerate().skip(1) {
        acc = &acc + &steps[(k - 1) % steps.len()];
        image.insert(v.clone(), acc.clone());
    }
    space.map_distances(|t| image[t].clone()).unwrap()
}
