use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, dot, is_integral, Rational};

/// Which of the two dual lattices a point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Space {
    M,
    N,
}

impl Space {
    pub fn dual(self) -> Space {
        match self {
            Space::M => Space::N,
            Space::N => Space::M,
        }
    }
}

/// A point of `M_R` or `N_R` with exact rational coordinates.
///
/// Ordering is lexicographic on coordinates, which is the canonical vertex
/// order used everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Rational>,
    space: Space,
}

impl Point {
    pub fn new(coords: Vec<Rational>, space: Space) -> Self {
        Point { coords, space }
    }

    pub fn from_ints(coords: &[i64], space: Space) -> Self {
        Point::new(coords.iter().map(|&c| rational::int(c)).collect(), space)
    }

    pub fn origin(dim: usize, space: Space) -> Self {
        Point::from_ints(&vec![0; dim], space)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_origin(&self) -> bool {
        self.coords
            .iter()
            .all(|c| *c == Rational::from_integer(0.into()))
    }

    pub fn is_lattice(&self) -> bool {
        self.coords.iter().all(is_integral)
    }

    /// The canonical pairing `<x, y>` between an M-point and an N-point.
    pub fn pairing(&self, other: &Point) -> Result<Rational> {
        if self.space == other.space {
            return Err(Error::SpaceMismatch);
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(dot(&self.coords, &other.coords))
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.space, other.space);
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            self.space,
        )
    }

    pub fn neg(&self) -> Point {
        Point::new(self.coords.iter().map(|c| -c).collect(), self.space)
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * s).collect(), self.space)
    }

    /// Same coordinates, reinterpreted in the other lattice.
    pub fn dualized(&self) -> Point {
        Point::new(self.coords.clone(), self.space.dual())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords
            .cmp(&other.coords)
            .then(self.space.cmp(&other.space))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::format_vec(&self.coords))
    }
}

/// Checks that all points share one dimension and one lattice; returns them.
pub(crate) fn common_shape(points: &[Point]) -> Result<(usize, Space)> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    for p in points {
        if p.dim() != first.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                found: p.dim(),
            });
        }
        if p.space() != first.space() {
            return Err(Error::SpaceMismatch);
        }
    }
    Ok((first.dim(), first.space()))
}
