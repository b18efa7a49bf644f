//! Spaces built from graphs, parameters and seeds, plus the distance
//! transforms (truncation, bounding, unbounding).

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::rational::Rational;
use crate::space::{numbered_labels, positive_radius, FiniteSpace};

/// Largest point count `padic_space` will materialize.
pub const MAX_PADIC_POINTS: u64 = 4096;

/// Distances 2 across edges of `g`, 1 across non-edges. Its diametrical
/// graph is `g` again.
pub fn metric_from_graph(g: &SimpleGraph) -> Result<FiniteSpace> {
    require_nonempty(g)?;
    let two = Rational::from(2);
    FiniteSpace::from_fn(g.labels().to_vec(), |i, j| if g.has_edge(i, j) { two.clone() } else { Rational::one() })
}

/// Same shape as [`metric_from_graph`] but every non-edge gets an
/// independent value drawn from `[1, 2)`. Values in `[1, 2]` always satisfy
/// the triangle inequality, and only edges of `g` reach the diameter 2.
pub fn perturbed_metric_from_graph<R: Rng + ?Sized>(g: &SimpleGraph, rng: &mut R) -> Result<FiniteSpace> {
    require_nonempty(g)?;
    let two = Rational::from(2);
    FiniteSpace::from_fn(g.labels().to_vec(), |i, j| {
        if g.has_edge(i, j) {
            two.clone()
        } else {
            Rational::new(64 + rng.gen_range(0..64), 64)
        }
    })
}

fn require_nonempty(g: &SimpleGraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewPoints { required: 2, actual: g.vertex_count() });
    }
    if g.is_edgeless() {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// Every connected subgraph of the complement has at most two vertices,
/// i.e. every complement component has size <= 2. When this holds, every
/// metric with diametrical graph `g` is ultrametric.
pub fn safe_graph_predicate(g: &SimpleGraph) -> Result<bool> {
    if g.is_edgeless() {
        return Err(Error::EmptyGraph);
    }
    Ok(g.complement().connected_components().blocks().iter().all(|b| b.len() <= 2))
}

/// Lexicographically smallest vertex triple `i < j < k` that induces a
/// connected subgraph of the complement, returned as `(x, z, y)` where `z`
/// is the smallest vertex of the triple adjacent (in the complement) to the
/// other two.
pub fn witness_triple(g: &SimpleGraph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let non_edge = |u: usize, v: usize| !g.has_edge(u, v);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let t = [i, j, k];
                for c in 0..3 {
                    let z = t[c];
                    let (x, y) = match c {
                        0 => (j, k),
                        1 => (i, k),
                        _ => (i, j),
                    };
                    if non_edge(x, z) && non_edge(z, y) {
                        return Some((x, z, y));
                    }
                }
            }
        }
    }
    None
}

/// Default side lengths `(a, b)` for [`counterexample_metric`].
pub fn default_counterexample_sides() -> (Rational, Rational) {
    (Rational::new(5, 4), Rational::new(7, 4))
}

/// A non-ultrametric metric whose diametrical graph is `g`, or `None` when
/// [`safe_graph_predicate`] holds and no such metric exists.
///
/// Distances: 2 across edges of `g`, `a` on `{x, z}`, `b` on `{z, y}` for the
/// [`witness_triple`], and `(a + b) / 2` on every other pair.
pub fn counterexample_metric(g: &SimpleGraph, a: &Rational, b: &Rational) -> Result<Option<FiniteSpace>> {
    let (one, two) = (Rational::one(), Rational::from(2));
    for (name, v) in [("a", a), ("b", b)] {
        if v <= &one || v >= &two {
            return Err(Error::InvalidParameter(format!("{name} = {v} is not in the open interval (1, 2)")));
        }
    }
    if a == b {
        return Err(Error::InvalidParameter("a and b must differ".into()));
    }
    if safe_graph_predicate(g)? {
        return Ok(None);
    }
    let (x, z, y) = witness_triple(g).ok_or_else(|| Error::Internal("predicate false but no witness triple".into()))?;
    let mid = &(a + b) / &two;
    let is = |p: (usize, usize), u: usize, v: usize| (p.0 == u && p.1 == v) || (p.0 == v && p.1 == u);
    FiniteSpace::from_fn(g.labels().to_vec(), |i, j| {
        if g.has_edge(i, j) {
            two.clone()
        } else if is((i, j), x, z) {
            a.clone()
        } else if is((i, j), z, y) {
            b.clone()
        } else {
            mid.clone()
        }
    })
    .map(Some)
}

/// Entrywise `min{r, t}`.
pub fn truncate(space: &FiniteSpace, r: &Rational) -> Result<FiniteSpace> {
    positive_radius(r)?;
    space.map_distances(|t| t.min(r).clone())
}

/// The `d*` parameter of the bounding transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformParams {
    dstar: Rational,
}

impl TransformParams {
    pub fn new(dstar: Rational) -> Result<Self> {
        if !dstar.is_positive() {
            return Err(Error::InvalidParameter(format!("d* must be positive, got {dstar}")));
        }
        Ok(TransformParams { dstar })
    }

    pub fn dstar(&self) -> &Rational {
        &self.dstar
    }
}

/// `t -> d* t / (1 + t)`.
pub fn bound_value(t: &Rational, params: &TransformParams) -> Rational {
    &(&params.dstar * t) / &(&Rational::one() + t)
}

/// `s -> s / (d* - s)`, defined for `0 <= s < d*`.
pub fn unbound_value(s: &Rational, params: &TransformParams) -> Option<Rational> {
    let gap = &params.dstar - s;
    if gap.is_positive() {
        s.checked_div(&gap)
    } else {
        None
    }
}

/// Maps an ultrametric space into one with every distance below `d*`,
/// keeping ultrametricity and the order of distances.
pub fn bound_transform(space: &FiniteSpace, params: &TransformParams) -> Result<FiniteSpace> {
    if !space.is_ultrametric() {
        return Err(Error::NotUltrametric);
    }
    space.map_distances(|t| bound_value(t, params))
}

/// Inverse of [`bound_transform`]. `d*` must exceed every distance; a
/// finite space attains its diameter, so `d* = diam` is never allowed.
pub fn unbound_transform(space: &FiniteSpace, params: &TransformParams) -> Result<FiniteSpace> {
    if !space.is_ultrametric() {
        return Err(Error::NotUltrametric);
    }
    if params.dstar() <= space.diameter() {
        return Err(Error::InvalidParameter(format!(
            "d* = {} must exceed the diameter {}",
            params.dstar(),
            space.diameter()
        )));
    }
    space.map_distances(|s| unbound_value(s, params).expect("s < d*"))
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Residues `0 .. p^k` with the p-adic distance `p^(-v(x - y))`.
pub fn padic_space(p: u64, k: u32) -> Result<FiniteSpace> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = p
        .checked_pow(k)
        .filter(|&n| n <= MAX_PADIC_POINTS)
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} exceeds {MAX_PADIC_POINTS} points")))?;
    let labels = (0..n).map(|r| r.to_string()).collect();
    FiniteSpace::from_fn(labels, |i, j| {
        let v = valuation((j - i) as u64, p);
        Rational::from_big(BigInt::from(1), num_traits::pow(BigInt::from(p), v as usize)).expect("p^v > 0")
    })
}

/// Exponent of `p` in `m`, for `m > 0`.
fn valuation(mut m: u64, p: u64) -> u32 {
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

/// Nested chain `q0, ..., qm` with `d(qi, qj) = values[min(i, j)]`. The
/// distance set is exactly `{0} ∪ values`.
pub fn space_from_distance_chain(values: &[Rational]) -> Result<FiniteSpace> {
    if values.is_empty() {
        return Err(Error::InvalidParameter("need at least one distance".into()));
    }
    if let Some(v) = values.iter().find(|v| !v.is_positive()) {
        return Err(Error::InvalidParameter(format!("distance {v} is not positive")));
    }
    if values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidParameter("distances must be strictly decreasing".into()));
    }
    FiniteSpace::from_fn(numbered_labels("q", values.len() + 1), |i, _| values[i].clone())
}

/// Random ultrametric on `n` points from a random rooted tree of depth at
/// most `levels`. Depth `i` carries the `i`-th largest of `levels` distinct
/// scales drawn from `{1/4, 2/4, ..., 16}`; two points are at the scale of
/// the shallowest depth that separates them. Deterministic per seed.
pub fn random_ultrametric(n: usize, levels: usize, seed: u64) -> Result<FiniteSpace> {
    if n == 0 || levels == 0 {
        return Err(Error::InvalidParameter("n and levels must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grid: Vec<i64> = (1..=64).collect();
    grid.shuffle(&mut rng);
    let mut picks: Vec<i64> = grid[..levels.min(grid.len())].to_vec();
    picks.sort_unstable_by(|a, b| b.cmp(a));
    let scales: Vec<Rational> = picks.into_iter().map(|k| Rational::new(k, 4)).collect();
    let depth_limit = scales.len();

    let mut depth_of = vec![0usize; n * n];
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(&mut rng);
    let mut stack = vec![(points, 0usize)];
    while let Some((group, depth)) = stack.pop() {
        if group.len() < 2 {
            continue;
        }
        let parts = if depth + 1 == depth_limit {
            group.iter().map(|&p| vec![p]).collect()
        } else {
            let count = rng.gen_range(1..=group.len().min(4));
            split_random(&group, count, &mut rng)
        };
        for (a, pa) in parts.iter().enumerate() {
            for pb in &parts[a + 1..] {
                for &x in pa {
                    for &y in pb {
                        depth_of[x * n + y] = depth;
                        depth_of[y * n + x] = depth;
                    }
                }
            }
        }
        stack.extend(parts.into_iter().map(|p| (p, depth + 1)));
    }
    FiniteSpace::from_fn(numbered_labels("x", n), |i, j| scales[depth_of[i * n + j]].clone())
}

/// Random metric on `n` points: shortest-path closure of the complete graph
/// with edge weights drawn from `{1/2, 1, ..., 4}`. The coarse grid makes
/// ties, and with them ultrametric outputs, common.
pub fn random_metric(n: usize, seed: u64) -> Result<FiniteSpace> {
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = Rational::new(rng.gen_range(1..=8), 2);
            d[i][j] = w.clone();
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    FiniteSpace::new(numbered_labels("x", n), d)
}

/// Cuts an already shuffled group into `count` nonempty runs.
fn split_random<R: Rng>(group: &[usize], count: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut cuts: Vec<usize> = (1..group.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(count - 1).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(count);
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(group.len())) {
        out.push(group[start..c].to_vec());
        start = c;
    }
    out
}
