//! Exact Gauss-Jordan elimination over the rationals.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::point::{common_shape, Point};
use crate::rational::Rational;

pub(crate) type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form. Returns the reduced matrix (zero rows dropped)
/// and the pivot column of each remaining row.
pub(crate) fn rref(mut m: Matrix, cols: usize) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m, pivots)
}

pub(crate) fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
    rref(m.to_vec(), cols).1.len()
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub(crate) fn nullspace(m: &[Vec<Rational>], cols: usize) -> Matrix {
    let (r, pivots) = rref(m.to_vec(), cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, `None` when singular.
pub(crate) fn inverse(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let (r, pivots) = rref(aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Solves `A u = b` with `A` given row by row.
pub(crate) fn solve(rows: &[Vec<Rational>], rhs: &[Rational], cols: usize) -> LinearSolution {
    let aug: Matrix = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return LinearSolution::Inconsistent;
    }
    if pivots.len() < cols {
        return LinearSolution::Underdetermined;
    }
    LinearSolution::Unique(r.into_iter().map(|row| row[cols].clone()).collect())
}

/// Finds `u` in the dual lattice with `<p, u> = value` for every pair.
///
/// The solution is returned as a point of the space dual to the constraint
/// points. An empty system is rejected because its dimension is unknown.
pub fn solve_linear(system: &[(Point, Rational)]) -> Result<SolveOutcome> {
    let points: Vec<Point> = system.iter().map(|(p, _)| p.clone()).collect();
    let (dim, space) = common_shape(&points)?;
    let rows: Matrix = points.iter().map(|p| p.coords().to_vec()).collect();
    let rhs: Vec<Rational> = system.iter().map(|(_, v)| v.clone()).collect();
    Ok(match solve(&rows, &rhs, dim) {
        LinearSolution::Unique(u) => SolveOutcome::Unique(Point::new(u, space.dual())),
        LinearSolution::Inconsistent => SolveOutcome::Inconsistent,
        LinearSolution::Underdetermined => SolveOutcome::Underdetermined,
    })
}

/// Public counterpart of [`LinearSolution`] carrying a typed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Point),
    Inconsistent,
    Underdetermined,
}
