//! Double description method: extreme rays of a pointed polyhedral cone.
//!
//! Both directions of the vertex/facet conversion reduce to this routine.
//! For a point set `P` spanning `R^k`, the valid inequalities `<a, x> + b >= 0`
//! form the cone `{(a, b) : <a, p> + b >= 0 for p in P}` whose extreme rays are
//! the facets. For an inequality system, the homogenization `{(x, t) : A x +
//! b t >= 0, t >= 0}` has the vertices `x / t` as extreme rays.

use crate::linalg::{inverse, Matrix};
use crate::rational::{dot, primitive, Rational};
use num_traits::{Signed, Zero};

/// Fixed-capacity bitset over constraint indices.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn new(n: usize) -> Self {
        RowSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &RowSet) -> RowSet {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset(&self, other: &RowSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<Rational>,
    tight: RowSet,
}

fn greedy_basis(rows: &[Vec<Rational>], n: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut echelon: Matrix = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut cand = echelon.clone();
        cand.push(r.clone());
        if crate::linalg::rank(&cand, n) > echelon.len() {
            echelon = cand;
            chosen.push(i);
            if chosen.len() == n {
                return Some(chosen);
            }
        }
    }
    None
}

/// Extreme rays of `{z in R^n : <row, z> >= 0 for every row}`, each scaled to a
/// primitive integer vector. Returns `None` when the rows have rank below
/// `n`, i.e. the cone is not pointed.
pub(crate) fn extreme_rays(rows: &[Vec<Rational>], n: usize) -> Option<Vec<Vec<Rational>>> {
    let basis = greedy_basis(rows, n)?;
    let b: Matrix = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = inverse(&b)?;
    let m = rows.len();

    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let col: Vec<Rational> = inv.iter().map(|row| row[j].clone()).collect();
            let mut tight = RowSet::new(m);
            for (k, &bi) in basis.iter().enumerate() {
                if k != j {
                    tight.insert(bi);
                }
            }
            Ray {
                v: primitive(&col).0,
                tight,
            }
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        let values: Vec<Rational> = rays.iter().map(|r| dot(row, &r.v)).collect();
        if values.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&values) {
                if s.is_zero() {
                    r.tight.insert(idx);
                }
            }
            continue;
        }

        let plus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        let mut fresh = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let common = rays[p].tight.intersection(&rays[q].tight);
                if common.len() + 2 < n {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !r.tight.is_superset(&common));
                if !adjacent {
                    continue;
                }
                let sp = &values[p];
                let sq = &values[q];
                let v: Vec<Rational> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(a, b)| sp * a - sq * b)
                    .collect();
                let mut tight = common;
                tight.insert(idx);
                fresh.push(Ray {
                    v: primitive(&v).0,
                    tight,
                });
            }
        }

        let mut next = Vec::with_capacity(rays.len() + fresh.len());
        for (r, s) in rays.into_iter().zip(&values) {
            if s.is_negative() {
                continue;
            }
            let mut r = r;
            if s.is_zero() {
                r.tight.insert(idx);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    Some(rays.into_iter().map(|r| r.v).collect())
}
