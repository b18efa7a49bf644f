//! Simple undirected graphs on labeled vertices, with the few structural
//! queries the diametrical-graph machinery needs.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::FiniteSpace;

/// Disjoint nonempty blocks covering `0..n`.
///
/// Blocks are kept canonical: each block sorted ascending, blocks ordered by
/// their smallest member (which is label order, since vertices are indexed
/// by their position in the label list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes `blocks` and checks that they partition `0..n`.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidParameter("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidParameter(format!("vertex {v} repeated or out of range")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidParameter("blocks do not cover every vertex".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index for each vertex.
    pub fn membership(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut m = vec![0; n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &v in b {
                m[v] = k;
            }
        }
        m
    }
}

/// A finite simple graph: no loops, no multi-edges, at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<bool>,
}

impl SimpleGraph {
    pub fn new<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::edgeless(labels)?;
        let n = g.vertex_count();
        for (u, v) in edges {
            if u >= n || v >= n {
                let name = |x: usize| g.labels.get(x).cloned().unwrap_or_else(|| x.to_string());
                return Err(Error::InvalidEdge(name(u), name(v), "endpoint out of range"));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_labeled_edges<S: AsRef<str>>(labels: Vec<String>, edges: &[(S, S)]) -> Result<Self> {
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            match (index.get(a), index.get(b)) {
                (Some(&u), Some(&v)) => pairs.push((u, v)),
                _ => return Err(Error::InvalidEdge(a.into(), b.into(), "unknown vertex")),
            }
        }
        Self::new(labels, pairs)
    }

    pub fn edgeless(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidParameter("a graph needs at least one vertex".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::DuplicateLabel(dup.clone()));
        }
        let n = labels.len();
        Ok(SimpleGraph { labels, adj: vec![false; n * n] })
    }

    pub fn complete(labels: Vec<String>) -> Result<Self> {
        Ok(Self::edgeless(labels)?.complement())
    }

    /// Cycle `v0 - v1 - ... - v(n-1) - v0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
        }
        Self::new(default_labels(n), (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `v0 - v1 - ... - v(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(default_labels(n), (1..n).map(|i| (i - 1, i)))
    }

    /// Rejects loops and edges already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Err(Error::InvalidEdge(u.to_string(), v.to_string(), "endpoint out of range"));
        }
        if u == v {
            return Err(Error::InvalidEdge(self.labels[u].clone(), self.labels[v].clone(), "loop"));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidEdge(self.labels[u].clone(), self.labels[v].clone(), "duplicate edge"));
        }
        let n = self.vertex_count();
        self.adj[u * n + v] = true;
        self.adj[v * n + u] = true;
        Ok(())
    }

    /// Builds a graph from a symmetric predicate evaluated on `i < j`.
    pub(crate) fn from_predicate<F>(labels: Vec<String>, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let n = labels.len();
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                if f(i, j) {
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                }
            }
        }
        SimpleGraph { labels, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.vertex_count() + v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| self.has_edge(u, v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    /// No edges at all.
    pub fn is_edgeless(&self) -> bool {
        !self.adj.iter().any(|&e| e)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let adj = (0..n * n).map(|k| k / n != k % n && !self.adj[k]).collect();
        SimpleGraph { labels: self.labels.clone(), adj }
    }

    pub fn connected_components(&self) -> Partition {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        block.push(u);
                        queue.push_back(u);
                    }
                }
            }
            blocks.push(block);
        }
        Partition::new(n, blocks).expect("components partition the vertex set")
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Classes of the reflexive non-adjacency relation, if that relation is
    /// an equivalence and every cross-class pair is an edge. Allows a single
    /// class (edgeless graphs).
    pub(crate) fn nonadjacency_classes(&self) -> Option<Partition> {
        let n = self.vertex_count();
        // closed non-neighbourhood of v, as a bit row
        let key = |v: usize| -> Vec<bool> { (0..n).map(|u| u == v || !self.has_edge(v, u)).collect() };
        let mut groups: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
        for v in 0..n {
            groups.entry(key(v)).or_default().push(v);
        }
        for (k, members) in &groups {
            if k.iter().filter(|&&b| b).count() != members.len() || members.iter().any(|&m| !k[m]) {
                return None;
            }
        }
        Some(Partition::new(n, groups.into_values().collect()).expect("classes partition vertices"))
    }

    /// The parts of this graph if it is complete k-partite for some k >= 2.
    ///
    /// Vertices are grouped by identical closed non-neighbourhoods; the
    /// grouping is accepted only if no block contains an edge and every
    /// pair across blocks is an edge. Edgeless graphs and single vertices
    /// give `None`.
    pub fn multipartite_parts(&self) -> Option<Partition> {
        self.nonadjacency_classes().filter(|p| p.len() >= 2)
    }

    /// Shortest-path metric of a connected graph.
    pub fn graph_metric(&self) -> Result<FiniteSpace> {
        let n = self.vertex_count();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (s, row) in rows.iter_mut().enumerate() {
            let hops = self.bfs(s);
            for (t, h) in hops.into_iter().enumerate() {
                match h {
                    Some(h) => row[t] = Rational::from(h as i64),
                    None => return Err(Error::Disconnected(self.labels[s].clone(), self.labels[t].clone())),
                }
            }
        }
        FiniteSpace::new(self.labels.clone(), rows)
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = next;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    fn connected_metric(&self) -> Result<FiniteSpace> {
        if self.vertex_count() < 2 {
            return Err(Error::TooFewPoints { required: 2, actual: self.vertex_count() });
        }
        self.graph_metric()
    }

    /// Every vertex has exactly one partner at distance equal to the
    /// graph's diameter.
    pub fn has_unique_diametrical_partners(&self) -> Result<bool> {
        let metric = self.connected_metric()?;
        let n = metric.len();
        let top = metric.distance_set().len() as u32 - 1;
        Ok((0..n).all(|u| (0..n).filter(|&v| metric.rank(u, v) == top).count() == 1))
    }

    /// The complement of the diametrical graph of the path metric is
    /// complete multipartite with every part of size 2.
    ///
    /// With two vertices that complement is edgeless with a single part
    /// of size 2; this is accepted as the degenerate one-part case.
    pub fn diametrical_complement_is_pairing(&self) -> Result<bool> {
        let metric = self.connected_metric()?;
        let complement = crate::diametrical::diametrical_graph(&metric).complement();
        Ok(complement.nonadjacency_classes().is_some_and(|p| p.blocks().iter().all(|b| b.len() == 2)))
    }

    /// Classical diametrical graph test: every vertex has a unique vertex at
    /// maximal distance. Computed two ways; disagreement is reported as an
    /// internal error.
    pub fn is_classical_diametrical(&self) -> Result<bool> {
        let direct = self.has_unique_diametrical_partners()?;
        let via_complement = self.diametrical_complement_is_pairing()?;
        if direct != via_complement {
            return Err(Error::Internal(format!(
                "diametrical tests disagree: unique partners {direct}, complement pairing {via_complement}"
            )));
        }
        Ok(direct)
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    crate::space::numbered_labels("v", n)
}
