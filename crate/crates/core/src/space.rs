//! Finite semimetric spaces over exact rationals: validation, axiomatic
//! classification, distance sets and open balls.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A breach of the semimetric axioms found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Nonzero diagonal entry.
    Identity { point: String, value: Rational },
    /// Off-diagonal entry that is zero or negative.
    NonPositive { a: String, b: String, value: Rational },
    /// `d(a, b) != d(b, a)`.
    Asymmetric { a: String, b: String, ab: Rational, ba: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Identity { point, value } => {
                write!(f, "identity violated at ({point},{point}): d = {value}")
            }
            Violation::NonPositive { a, b, value } => {
                write!(f, "non-positive distance at ({a},{b}): d = {value}")
            }
            Violation::Asymmetric { a, b, ab, ba } => {
                write!(f, "symmetry violated at ({a},{b}): d({a},{b}) = {ab}, d({b},{a}) = {ba}")
            }
        }
    }
}

/// Strongest axiom class satisfied by a space. Ordered by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SpaceClass {
    SemimetricOnly,
    MetricOnly,
    Ultrametric,
}

impl SpaceClass {
    pub fn is_metric(self) -> bool {
        self >= SpaceClass::MetricOnly
    }
}

impl fmt::Display for SpaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceClass::SemimetricOnly => "SemimetricOnly",
            SpaceClass::MetricOnly => "MetricOnly",
            SpaceClass::Ultrametric => "Ultrametric",
        })
    }
}

/// The deduplicated open balls of one radius.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallFamily {
    pub radius: Rational,
    /// Point indices, each ball sorted, balls ordered by smallest member.
    pub balls: Vec<Vec<usize>>,
}

impl BallFamily {
    /// True when the balls are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.balls.iter().flatten().all(|&p| seen.insert(p))
    }
}

/// Checks raw labels and a square matrix against the semimetric axioms.
///
/// Structural problems (empty input, duplicate labels, wrong shape) are
/// errors; axiom breaches are returned as a list, empty iff the data forms a
/// valid [`FiniteSpace`].
pub fn validate(labels: &[String], rows: &[Vec<Rational>]) -> Result<Vec<Violation>> {
    check_structure(labels, rows)?;
    let n = labels.len();
    let mut out = Vec::new();
    for i in 0..n {
        if !rows[i][i].is_zero() {
            out.push(Violation::Identity { point: labels[i].clone(), value: rows[i][i].clone() });
        }
        for j in i + 1..n {
            let (ab, ba) = (&rows[i][j], &rows[j][i]);
            if ab != ba {
                out.push(Violation::Asymmetric {
                    a: labels[i].clone(),
                    b: labels[j].clone(),
                    ab: ab.clone(),
                    ba: ba.clone(),
                });
            }
            for (x, y, v) in [(i, j, ab), (j, i, ba)] {
                if !v.is_positive() && (x < y || ab != ba) {
                    out.push(Violation::NonPositive { a: labels[x].clone(), b: labels[y].clone(), value: v.clone() });
                }
            }
        }
    }
    Ok(out)
}

fn check_structure(labels: &[String], rows: &[Vec<Rational>]) -> Result<()> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    let mut seen = HashMap::with_capacity(n);
    for l in labels {
        if seen.insert(l.as_str(), ()).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    if rows.len() != n {
        return Err(Error::DimensionMismatch { labels: n, detail: format!("{} rows", rows.len()) });
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::DimensionMismatch { labels: n, detail: format!("row {} has {} entries", i + 1, r.len()) });
    }
    Ok(())
}

/// A validated finite semimetric space.
///
/// Every distance is also stored as its rank inside the sorted distance set,
/// so order comparisons never touch big-number arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    dist: Vec<Rational>,
    rank: Vec<u32>,
    values: Vec<Rational>,
}

impl FiniteSpace {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let violations = validate(&labels, &rows)?;
        if !violations.is_empty() {
            return Err(Error::InvalidSpace(violations));
        }
        let dist = rows.into_iter().flatten().collect();
        Ok(Self::from_flat(labels, dist))
    }

    /// Builds a space from the upper triangle of `f`; `f(i, j)` is only
    /// called for `i < j`.
    pub fn from_fn<F>(labels: Vec<String>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Rational,
    {
        let n = labels.len();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                rows[j][i] = v.clone();
                rows[i][j] = v;
            }
        }
        Self::new(labels, rows)
    }

    fn from_flat(labels: Vec<String>, dist: Vec<Rational>) -> Self {
        let mut values: Vec<Rational> = dist.clone();
        values.sort_unstable();
        values.dedup();
        let rank = dist.iter().map(|d| values.binary_search(d).expect("value present") as u32).collect();
        FiniteSpace { labels, dist, rank, values }
    }

    /// Applies `f` to every off-diagonal distance; the result is revalidated.
    pub fn map_distances<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&Rational) -> Rational,
    {
        Self::from_fn(self.labels.clone(), |i, j| f(self.distance(i, j)))
    }

    /// New space whose point `i` is this space's point `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut check = order.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let dist = (0..n * n).map(|k| self.distance(order[k / n], order[k % n]).clone()).collect();
        Ok(Self::from_flat(labels, dist))
    }

    /// Same distances, new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        check_structure(&labels, &self.rows())?;
        Ok(FiniteSpace { labels, ..self.clone() })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn distance(&self, i: usize, j: usize) -> &Rational {
        &self.dist[i * self.len() + j]
    }

    /// Position of `d(i, j)` in [`distance_set`](Self::distance_set).
    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.rank[i * self.len() + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.dist.chunks(self.len()).map(<[Rational]>::to_vec).collect()
    }

    /// All attained distances, strictly increasing, starting with 0.
    pub fn distance_set(&self) -> &[Rational] {
        &self.values
    }

    pub fn diameter(&self) -> &Rational {
        self.values.last().expect("distance set contains 0")
    }

    pub fn is_ultrametric(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.rank(x, y);
                (0..n).all(|z| xy <= self.rank(x, z).max(self.rank(z, y)))
            })
        })
    }

    pub fn satisfies_triangle(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                let (xy, rxy) = (self.distance(x, y), self.rank(x, y));
                // d(x, y) <= max of the other two sides settles the triple
                // without bignum addition.
                (0..n).all(|z| {
                    rxy <= self.rank(x, z).max(self.rank(z, y)) || xy <= &(self.distance(x, z) + self.distance(z, y))
                })
            })
        })
    }

    /// Exhaustive check over all ordered triples. The strong triangle
    /// inequality implies the ordinary one, so the metric check only runs
    /// when the ultrametric one fails.
    pub fn classify(&self) -> SpaceClass {
        if self.is_ultrametric() {
            SpaceClass::Ultrametric
        } else if self.satisfies_triangle() {
            SpaceClass::MetricOnly
        } else {
            SpaceClass::SemimetricOnly
        }
    }

    /// Number of distance-set values strictly below `r`: `d(x, y) < r` iff
    /// `rank(x, y) < cut`.
    pub(crate) fn rank_cut(&self, r: &Rational) -> u32 {
        self.values.partition_point(|v| v < r) as u32
    }

    pub(crate) fn ball_indices(&self, center: usize, cut: u32) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.rank(center, x) < cut).collect()
    }

    /// `{x : d(center, x) < radius}` as sorted point indices.
    pub fn open_ball(&self, center: &str, radius: &Rational) -> Result<Vec<usize>> {
        let c = self.index_of(center).ok_or_else(|| Error::UnknownPoint(center.to_string()))?;
        self.open_ball_at(c, radius)
    }

    pub fn open_ball_at(&self, center: usize, radius: &Rational) -> Result<Vec<usize>> {
        positive_radius(radius)?;
        if center >= self.len() {
            return Err(Error::UnknownPoint(center.to_string()));
        }
        Ok(self.ball_indices(center, self.rank_cut(radius)))
    }

    pub fn ball_family(&self, radius: &Rational) -> Result<BallFamily> {
        positive_radius(radius)?;
        let cut = self.rank_cut(radius);
        let mut balls: Vec<Vec<usize>> = (0..self.len()).map(|c| self.ball_indices(c, cut)).collect();
        balls.sort();
        balls.dedup();
        Ok(BallFamily { radius: radius.clone(), balls })
    }

    /// Whether any two balls of `radius` are either disjoint or equal.
    ///
    /// Always true for ultrametric spaces; other spaces are accepted so the
    /// property can be probed where it fails.
    pub fn check_ball_lemma(&self, radius: &Rational) -> Result<bool> {
        positive_radius(radius)?;
        let cut = self.rank_cut(radius);
        let balls: Vec<Vec<usize>> = (0..self.len()).map(|c| self.ball_indices(c, cut)).collect();
        for (i, a) in balls.iter().enumerate() {
            for b in &balls[i + 1..] {
                if a != b && a.iter().any(|x| b.binary_search(x).is_ok()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn label_set(&self, points: &[usize]) -> Vec<&str> {
        points.iter().map(|&p| self.label(p)).collect()
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("FiniteSpace");
        d.field("labels", &self.labels);
        d.field("rows", &self.rows());
        d.finish()
    }
}

pub(crate) fn positive_radius(r: &Rational) -> Result<()> {
    if r.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveRadius(r.clone()))
    }
}

pub(crate) fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}
