//! Brute-force reference implementations used to cross-check the library.
//!
//! Nothing here calls into the library's geometry: hulls come from checking
//! every d-subset of points, vertex enumeration from every d-subset of
//! constraints, and membership from barycentric solves.

#![allow(dead_code)]

use nefdual::{Point, Rational, Space};
use num_traits::{One, Signed, Zero};

pub type Q = Rational;
pub type Vector = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| q(x)).collect()
}

pub fn coords(points: &[Point]) -> Vec<Vector> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

pub fn to_points(v: &[Vector], space: Space) -> Vec<Point> {
    v.iter().map(|c| Point::new(c.clone(), space)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn sorted_unique(mut v: Vec<Vector>) -> Vec<Vector> {
    v.sort();
    v.dedup();
    v
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Gauss-Jordan elimination in place; returns pivot columns.
fn eliminate(m: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..m[i].len() {
                    let t = &f * &m[row][c];
                    m[i][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    eliminate(&mut rows.to_vec(), cols).len()
}

pub enum Solution {
    Unique(Vector),
    Inconsistent,
    Underdetermined,
}

/// Solves `a x = b`.
pub fn solve(a: &[Vector], b: &[Q]) -> Solution {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut m, n + 1);
    if pivots.contains(&n) {
        return Solution::Inconsistent;
    }
    if pivots.len() < n {
        return Solution::Underdetermined;
    }
    let mut x = vec![Q::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][n].clone();
    }
    Solution::Unique(x)
}

/// The one-dimensional kernel of `rows`, if it is one-dimensional.
fn kernel_line(rows: &[Vector]) -> Option<Vector> {
    let cols = rows[0].len();
    let mut m = rows.to_vec();
    let pivots = eliminate(&mut m, cols);
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![Q::zero(); cols];
    v[free] = Q::one();
    for (row, &col) in pivots.iter().enumerate() {
        v[col] = -m[row][free].clone();
    }
    Some(v)
}

fn affine_rank(points: &[Vector]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let diffs: Vec<Vector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}

/// Facet inequalities `a.x + b >= 0` of a full-dimensional point set,
/// scaled so the first nonzero entry of `a` has absolute value one.
pub fn facets(points: &[Vector]) -> Vec<(Vector, Q)> {
    let pts = sorted_unique(points.to_vec());
    let d = pts[0].len();
    assert_eq!(
        affine_rank(&pts),
        d,
        "facet oracle needs a full-dimensional set"
    );
    let mut out: Vec<(Vector, Q)> = Vec::new();
    for subset in combinations(pts.len(), d) {
        let rows: Vec<Vector> = subset
            .iter()
            .map(|&i| {
                let mut r = pts[i].clone();
                r.push(Q::one());
                r
            })
            .collect();
        let Some(mut h) = kernel_line(&rows) else {
            continue;
        };
        let vals: Vec<Q> = pts.iter().map(|p| dot(&h[..d], p) + &h[d]).collect();
        if vals.iter().all(|v| !v.is_negative()) {
        } else if vals.iter().all(|v| !v.is_positive()) {
            h.iter_mut().for_each(|x| *x = -x.clone());
        } else {
            continue;
        }
        let lead = h[..d]
            .iter()
            .find(|x| !x.is_zero())
            .expect("nonzero normal")
            .abs();
        h.iter_mut().for_each(|x| *x /= &lead);
        let b = h.pop().expect("offset");
        out.push((h, b));
    }
    out.sort();
    out.dedup();
    out
}

/// Vertices of `{x : a.x + b >= 0}` in dimension `d`, bounded case only.
pub fn h_vertices(ineqs: &[(Vector, Q)], d: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for subset in combinations(ineqs.len(), d) {
        let a: Vec<Vector> = subset.iter().map(|&i| ineqs[i].0.clone()).collect();
        let b: Vec<Q> = subset.iter().map(|&i| -ineqs[i].1.clone()).collect();
        if let Solution::Unique(x) = solve(&a, &b) {
            if ineqs.iter().all(|(a, b)| !(dot(a, &x) + b).is_negative()) {
                out.push(x);
            }
        }
    }
    sorted_unique(out)
}

/// Membership in `conv(points)` through barycentric coordinates on
/// affinely independent subsets.
pub fn in_hull(x: &[Q], points: &[Vector]) -> bool {
    let d = x.len();
    for k in 1..=(d + 1).min(points.len()) {
        for subset in combinations(points.len(), k) {
            let sel: Vec<&Vector> = subset.iter().map(|&i| &points[i]).collect();
            // Rows: coordinates then the affine row; columns: lambdas.
            let mut a: Vec<Vector> = (0..d)
                .map(|c| sel.iter().map(|p| p[c].clone()).collect())
                .collect();
            a.push(vec![Q::one(); k]);
            let mut b = x.to_vec();
            b.push(Q::one());
            if let Solution::Unique(l) = solve(&a, &b) {
                if l.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Vertex set of `conv(points)`, sorted.
pub fn hull_vertices(points: &[Vector]) -> Vec<Vector> {
    let pts = sorted_unique(points.to_vec());
    let d = pts[0].len();
    if affine_rank(&pts) == d {
        return h_vertices(&facets(&pts), d);
    }
    pts.iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<Vector> = pts
                .iter()
                .enumerate()
                .filter(|(j, _)| j != i)
                .map(|(_, o)| o.clone())
                .collect();
            others.is_empty() || !in_hull(p, &others)
        })
        .map(|(_, p)| p.clone())
        .collect()
}

pub fn minkowski_vertices(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let sums: Vec<Vector> = a
        .iter()
        .flat_map(|x| {
            b.iter()
                .map(move |y| x.iter().zip(y).map(|(s, t)| s + t).collect())
        })
        .collect();
    hull_vertices(&sums)
}

/// Polar vertices `a / b` of a full-dimensional set with the origin inside;
/// `None` if the origin is not interior.
pub fn polar_vertices(points: &[Vector]) -> Option<Vec<Vector>> {
    let fs = facets(points);
    if fs.iter().any(|(_, b)| !b.is_positive()) {
        return None;
    }
    Some(sorted_unique(
        fs.into_iter()
            .map(|(a, b)| a.into_iter().map(|x| x / &b).collect())
            .collect(),
    ))
}

pub fn is_reflexive(points: &[Vector]) -> bool {
    let verts = hull_vertices(points);
    let d = verts[0].len();
    if affine_rank(&verts) != d || !verts.iter().all(|v| is_integral(v)) {
        return false;
    }
    match polar_vertices(&verts) {
        Some(p) => p.iter().all(|v| is_integral(v)),
        None => false,
    }
}

/// Checks one PL function given by vertex values on the face fan of the
/// polytope with vertex list `verts`. Returns the cone functionals when the
/// values are linear on every cone, integral and convex.
pub fn nef_functionals(verts: &[Vector], values: &[Q]) -> Option<Vec<Vector>> {
    let mut out = Vec::new();
    for (a, b) in facets(verts) {
        let on: Vec<usize> = (0..verts.len())
            .filter(|&i| (dot(&a, &verts[i]) + &b).is_zero())
            .collect();
        let rows: Vec<Vector> = on.iter().map(|&i| verts[i].clone()).collect();
        let rhs: Vec<Q> = on.iter().map(|&i| values[i].clone()).collect();
        let Solution::Unique(u) = solve(&rows, &rhs) else {
            return None;
        };
        if !is_integral(&u) {
            return None;
        }
        if verts.iter().zip(values).any(|(v, val)| dot(v, &u) > *val) {
            return None;
        }
        out.push(u);
    }
    Some(out)
}

/// Direct check of the nef-partition definition for `parts` (indices into
/// `verts`).
pub fn is_nef_partition(verts: &[Vector], parts: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; verts.len()];
    for p in parts {
        if p.is_empty() {
            return false;
        }
        for &i in p {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    parts.iter().all(|p| {
        let values: Vec<Q> = (0..verts.len())
            .map(|i| if p.contains(&i) { Q::one() } else { Q::zero() })
            .collect();
        nef_functionals(verts, &values).is_some()
    })
}

/// Support polytope vertices of the nef function for one part: the hull of
/// the negated cone functionals.
pub fn support_vertices(verts: &[Vector], part: &[usize]) -> Vec<Vector> {
    let values: Vec<Q> = (0..verts.len())
        .map(|i| {
            if part.contains(&i) {
                Q::one()
            } else {
                Q::zero()
            }
        })
        .collect();
    let us = nef_functionals(verts, &values).expect("part is nef");
    hull_vertices(
        &us.into_iter()
            .map(|u| u.into_iter().map(|x| -x).collect())
            .collect::<Vec<_>>(),
    )
}

/// Every unordered bipartition of `0..n` into two nonempty blocks.
pub fn bipartitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    (1..(1u64 << (n - 1)))
        .map(|mask| {
            // Element n-1 always sits in the second block.
            let (a, b): (Vec<usize>, Vec<usize>) =
                (0..n).partition(|&i| i + 1 < n && mask & (1 << i) != 0);
            vec![a, b]
        })
        .collect()
}

/// A partition as a sorted family of sorted coordinate sets.
pub fn family(verts: &[Vector], parts: &[Vec<usize>]) -> Vec<Vec<Vector>> {
    let mut f: Vec<Vec<Vector>> = parts
        .iter()
        .map(|p| sorted_unique(p.iter().map(|&i| verts[i].clone()).collect()))
        .collect();
    f.sort();
    f
}

pub mod golden;
