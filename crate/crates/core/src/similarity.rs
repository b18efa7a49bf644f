//! Weak similarities and isometries between finite spaces.
//!
//! A weak similarity `a -> b` is a point bijection `Φ` together with a
//! strictly increasing bijection `ψ` from the distance set of `b` onto the
//! distance set of `a` with `d_a(x, y) = ψ(d_b(Φx, Φy))`. Since `ψ` is forced
//! to send the k-th smallest distance of `b` to the k-th smallest of `a`, the
//! search reduces to finding a bijection that preserves distance ranks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakSimilarity {
    /// `bijection[i]` is the point of `b` that point `i` of `a` maps to.
    pub bijection: Vec<usize>,
    /// `(ρ-value in b, d-value in a)` pairs, ascending in both coordinates.
    pub scaling: Vec<(Rational, Rational)>,
}

impl WeakSimilarity {
    pub fn identity(space: &FiniteSpace) -> Self {
        WeakSimilarity {
            bijection: (0..space.len()).collect(),
            scaling: space.distance_set().iter().map(|v| (v.clone(), v.clone())).collect(),
        }
    }

    /// Applies the scaling function to a distance of `b`.
    pub fn scale(&self, rho: &Rational) -> Option<&Rational> {
        self.scaling.binary_search_by(|(r, _)| r.cmp(rho)).ok().map(|k| &self.scaling[k].1)
    }

    /// Checks every witness invariant against the two spaces.
    pub fn verify(&self, a: &FiniteSpace, b: &FiniteSpace) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidWitness(m.to_string()));
        let n = a.len();
        if b.len() != n || self.bijection.len() != n {
            return bad("point counts differ");
        }
        let mut hit = vec![false; n];
        for &j in &self.bijection {
            if j >= n || std::mem::replace(&mut hit[j], true) {
                return bad("map is not a bijection");
            }
        }
        let (rhos, ds): (Vec<Rational>, Vec<Rational>) = self.scaling.iter().cloned().unzip();
        if rhos != b.distance_set() || ds != a.distance_set() {
            return bad("scaling does not cover both distance sets in increasing order");
        }
        for x in 0..n {
            for y in x + 1..n {
                let rho = b.distance(self.bijection[x], self.bijection[y]);
                if self.scale(rho) != Some(a.distance(x, y)) {
                    return bad(&format!("pair ({}, {}) is not preserved", a.label(x), a.label(y)));
                }
            }
        }
        Ok(())
    }

    /// Witness for `b -> a`.
    pub fn inverse(&self) -> WeakSimilarity {
        let mut bijection = vec![0; self.bijection.len()];
        for (i, &j) in self.bijection.iter().enumerate() {
            bijection[j] = i;
        }
        WeakSimilarity { bijection, scaling: self.scaling.iter().map(|(r, d)| (d.clone(), r.clone())).collect() }
    }

    /// Given `self: a -> b` and `next: b -> c`, the witness `a -> c`.
    pub fn then(&self, next: &WeakSimilarity) -> WeakSimilarity {
        WeakSimilarity {
            bijection: self.bijection.iter().map(|&j| next.bijection[j]).collect(),
            scaling: next.scaling.iter().zip(&self.scaling).map(|((c, _), (_, a))| (c.clone(), a.clone())).collect(),
        }
    }
}

/// A weak similarity `a -> b`, if one exists.
pub fn find_weak_similarity(a: &FiniteSpace, b: &FiniteSpace) -> Option<WeakSimilarity> {
    if a.len() != b.len() || a.distance_set().len() != b.distance_set().len() {
        return None;
    }
    let bijection = rank_preserving_bijection(a, b)?;
    let scaling = b.distance_set().iter().cloned().zip(a.distance_set().iter().cloned()).collect();
    let w = WeakSimilarity { bijection, scaling };
    w.verify(a, b).ok().map(|_| w)
}

/// A distance-preserving bijection exists.
pub fn is_isometric(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    a.len() == b.len() && a.distance_set() == b.distance_set() && rank_preserving_bijection(a, b).is_some()
}

/// Whether `a` and `b` are both ultrametric or both not, after checking
/// that `w` really is a weak similarity between them.
pub fn verify_class_preservation(a: &FiniteSpace, b: &FiniteSpace, w: &WeakSimilarity) -> Result<bool> {
    w.verify(a, b)?;
    Ok(a.is_ultrametric() == b.is_ultrametric())
}

/// Backtracking search for `φ` with `rank_a(x, y) = rank_b(φx, φy)`.
///
/// Candidates for a point must share its sorted row of ranks; points with
/// the fewest candidates are placed first.
fn rank_preserving_bijection(a: &FiniteSpace, b: &FiniteSpace) -> Option<Vec<usize>> {
    let n = a.len();
    let signature = |s: &FiniteSpace, x: usize| {
        let mut row: Vec<u32> = (0..n).map(|y| s.rank(x, y)).collect();
        row.sort_unstable();
        row
    };
    let sig_a: Vec<Vec<u32>> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<Vec<u32>> = (0..n).map(|x| signature(b, x)).collect();
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| sig_a[x] == sig_b[y]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| candidates[x].len());

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut cursor = vec![0usize; n];
    let mut depth = 0;
    while depth < n {
        let x = order[depth];
        let mut placed = false;
        while cursor[depth] < candidates[x].len() {
            let y = candidates[x][cursor[depth]];
            cursor[depth] += 1;
            if used[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&p| a.rank(x, p) == b.rank(y, image[p]));
            if consistent {
                image[x] = y;
                used[y] = true;
                placed = true;
                break;
            }
        }
        if placed {
            depth += 1;
            if depth < n {
                cursor[depth] = 0;
            }
        } else {
            if depth == 0 {
                return None;
            }
            depth -= 1;
            let prev = order[depth];
            used[image[prev]] = false;
            image[prev] = usize::MAX;
        }
    }
    Some(image)
}
