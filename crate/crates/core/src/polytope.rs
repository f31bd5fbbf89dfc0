//! Bounded convex polytopes with exact V- and H-representations.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::dd::extreme_rays;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, rref, Matrix};
use crate::point::{common_shape, Point, Space};
use crate::rational::{dot, primitive, Rational};

/// Affine equation `<normal, x> = value` cutting out (part of) the affine span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub normal: Vec<Rational>,
    pub value: Rational,
}

/// Facet inequality `<x, normal> >= -offset`, valid on the affine span.
///
/// `normal` is a primitive integer vector in the dual lattice; `incidence`
/// lists the indices of the vertices on the facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Point,
    pub offset: Rational,
    pub incidence: Vec<usize>,
}

impl Facet {
    /// `<x, normal> + offset`, zero exactly on the facet hyperplane.
    pub fn slack(&self, x: &Point) -> Rational {
        dot(x.coords(), self.normal.coords()) + &self.offset
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<x,{}> >= {}",
            self.normal,
            crate::rational::format(&-self.offset.clone())
        )
    }
}

/// Why a polytope fails to be reflexive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReflexivityFailure {
    NotFullDimensional { dim: usize },
    NonLatticeVertex(Point),
    ZeroNotInterior,
    FacetDistance(Facet),
}

impl fmt::Display for ReflexivityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotFullDimensional { dim } => write!(f, "polytope has dimension {dim}"),
            Self::NonLatticeVertex(v) => write!(f, "vertex {v} is not a lattice point"),
            Self::ZeroNotInterior => f.write_str("the origin is not interior"),
            Self::FacetDistance(facet) => write!(
                f,
                "facet {facet} has lattice distance {}",
                crate::rational::format(&facet.offset)
            ),
        }
    }
}

/// A convex polytope in `M_R` or `N_R`.
///
/// Vertices are irredundant and sorted lexicographically, so two polytopes
/// are equal exactly when their vertex lists are.
#[derive(Debug, Clone)]
pub struct Polytope {
    ambient_dim: usize,
    space: Space,
    vertices: Vec<Point>,
    affine_span: Vec<Equation>,
    facets: Vec<Facet>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.space == other.space
            && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    /// Convex hull of a nonempty point set.
    pub fn hull(points: &[Point]) -> Result<Polytope> {
        let (d, space) = common_shape(points)?;
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();

        let base = pts[0].clone();
        let diffs: Matrix = pts[1..]
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .zip(base.coords())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let (directions, pivots) = rref(diffs, d);
        let k = pivots.len();

        let affine_span: Vec<Equation> = nullspace(&directions, d)
            .into_iter()
            .map(|n| {
                let (normal, _) = primitive(&n);
                let value = dot(&normal, base.coords());
                Equation { normal, value }
            })
            .collect();

        if k == 0 {
            return Ok(Polytope {
                ambient_dim: d,
                space,
                vertices: vec![base],
                affine_span,
                facets: Vec::new(),
            });
        }

        let project = |p: &Point| -> Vec<Rational> {
            pivots.iter().map(|&c| p.coords()[c].clone()).collect()
        };
        let rows: Matrix = pts
            .iter()
            .map(|p| {
                let mut r = project(p);
                r.push(Rational::one());
                r
            })
            .collect();
        let rays = extreme_rays(&rows, k + 1).ok_or(Error::InvariantViolated {
            check: "hull",
            witness: "valid-inequality cone is not pointed".into(),
        })?;

        // (ray in projected coordinates, lifted primitive normal, offset)
        let mut raw: Vec<(Vec<Rational>, Point, Rational)> = rays
            .into_iter()
            .map(|ray| {
                let mut lifted = vec![Rational::zero(); d];
                for (j, &c) in pivots.iter().enumerate() {
                    lifted[c] = ray[j].clone();
                }
                let (normal, factor) = primitive(&lifted);
                let offset = &ray[k] * factor;
                (ray, Point::new(normal, space.dual()), offset)
            })
            .collect();
        raw.sort_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)));

        // A point is a vertex iff the facets through it have normals of full rank.
        let mut vertices: Vec<Point> = pts
            .iter()
            .filter(|p| {
                let mut lifted = project(p);
                lifted.push(Rational::one());
                let tight: Matrix = raw
                    .iter()
                    .filter(|(ray, _, _)| dot(ray, &lifted).is_zero())
                    .map(|(ray, _, _)| ray[..k].to_vec())
                    .collect();
                rank(&tight, k) == k
            })
            .cloned()
            .collect();
        vertices.sort();

        let facets = raw
            .into_iter()
            .map(|(_, normal, offset)| {
                let mut facet = Facet {
                    normal,
                    offset,
                    incidence: Vec::new(),
                };
                facet.incidence = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| facet.slack(v).is_zero())
                    .map(|(i, _)| i)
                    .collect();
                facet
            })
            .collect();

        Ok(Polytope {
            ambient_dim: d,
            space,
            vertices,
            affine_span,
            facets,
        })
    }

    /// Vertices of `{x : <a, x> + b >= 0 for (a, b) in ineqs, <a, x> = c for (a, c) in eqs}`,
    /// or `None` when the set is empty.
    pub fn from_inequalities(
        ambient_dim: usize,
        space: Space,
        ineqs: &[(Vec<Rational>, Rational)],
        eqs: &[Equation],
    ) -> Result<Option<Polytope>> {
        let n = ambient_dim + 1;
        let mut rows: Matrix = Vec::new();
        let mut push = |a: &[Rational], b: Rational| {
            if a.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: a.len(),
                });
            }
            let mut r = a.to_vec();
            r.push(b);
            rows.push(r);
            Ok(())
        };
        for (a, b) in ineqs {
            push(a, b.clone())?;
        }
        for eq in eqs {
            push(&eq.normal, -eq.value.clone())?;
            let neg: Vec<Rational> = eq.normal.iter().map(|x| -x).collect();
            push(&neg, eq.value.clone())?;
        }
        let mut homog = vec![Rational::zero(); ambient_dim];
        homog.push(Rational::one());
        rows.push(homog);

        let rays = extreme_rays(&rows, n).ok_or(Error::Unbounded)?;
        let (bounded, recession): (Vec<_>, Vec<_>) =
            rays.into_iter().partition(|r| r[ambient_dim].is_positive());
        if bounded.is_empty() {
            return Ok(None);
        }
        if !recession.is_empty() {
            return Err(Error::Unbounded);
        }
        let points: Vec<Point> = bounded
            .into_iter()
            .map(|r| {
                let t = r[ambient_dim].clone();
                Point::new(r[..ambient_dim].iter().map(|x| x / &t).collect(), space)
            })
            .collect();
        Polytope::hull(&points).map(Some)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn affine_span(&self) -> &[Equation] {
        &self.affine_span
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.affine_span.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_span.is_empty()
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    fn check_shape(&self, x: &Point) -> Result<()> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: x.dim(),
            });
        }
        if x.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    /// Exact membership test.
    pub fn contains(&self, x: &Point) -> Result<bool> {
        self.check_shape(x)?;
        Ok(self
            .affine_span
            .iter()
            .all(|eq| dot(&eq.normal, x.coords()) == eq.value)
            && self.facets.iter().all(|f| !f.slack(x).is_negative()))
    }

    pub fn contains_in_interior(&self, x: &Point) -> Result<bool> {
        self.check_shape(x)?;
        Ok(self.is_full_dimensional() && self.facets.iter().all(|f| f.slack(x).is_positive()))
    }

    pub fn has_origin_in_interior(&self) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.offset.is_positive())
    }

    pub fn is_subset_of(&self, other: &Polytope) -> Result<bool> {
        for v in &self.vertices {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(Point::is_lattice)
    }

    /// `P* = {y : <x, y> >= -1 for all x in P}`, living in the dual lattice.
    pub fn polar_dual(&self) -> Result<Polytope> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional {
                dim: self.dim(),
                ambient: self.ambient_dim,
            });
        }
        if !self.has_origin_in_interior() {
            return Err(Error::ZeroNotInterior);
        }
        let gens: Vec<Point> = self
            .facets
            .iter()
            .map(|f| f.normal.scale(&f.offset.recip()))
            .collect();
        Polytope::hull(&gens)
    }

    pub fn reflexivity_failure(&self) -> Option<ReflexivityFailure> {
        if !self.is_full_dimensional() {
            return Some(ReflexivityFailure::NotFullDimensional { dim: self.dim() });
        }
        if let Some(v) = self.vertices.iter().find(|v| !v.is_lattice()) {
            return Some(ReflexivityFailure::NonLatticeVertex(v.clone()));
        }
        if !self.has_origin_in_interior() {
            return Some(ReflexivityFailure::ZeroNotInterior);
        }
        self.facets
            .iter()
            .find(|f| !f.offset.is_one())
            .map(|f| ReflexivityFailure::FacetDistance(f.clone()))
    }

    /// Full-dimensional lattice polytope, origin interior, every facet at
    /// lattice distance one.
    pub fn is_reflexive(&self) -> bool {
        self.reflexivity_failure().is_none()
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let sums: Vec<Point> = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| p.add(q)))
            .collect();
        Polytope::hull(&sums)
    }

    /// Iterated Minkowski sum of a nonempty family.
    pub fn minkowski_sum_all<'a, I>(parts: I) -> Result<Polytope>
    where
        I: IntoIterator<Item = &'a Polytope>,
    {
        let mut it = parts.into_iter();
        let first = it.next().ok_or(Error::EmptyInput)?.clone();
        it.try_fold(first, |acc, p| acc.minkowski_sum(p))
    }

    /// The polytope as an inequality system `<a, x> + b >= 0`, with the affine
    /// span expanded into pairs of opposite inequalities.
    pub fn inequalities(&self) -> Vec<(Vec<Rational>, Rational)> {
        let mut out: Vec<(Vec<Rational>, Rational)> = self
            .facets
            .iter()
            .map(|f| (f.normal.coords().to_vec(), f.offset.clone()))
            .collect();
        for eq in &self.affine_span {
            out.push((eq.normal.clone(), -eq.value.clone()));
            out.push((eq.normal.iter().map(|x| -x).collect(), eq.value.clone()));
        }
        out
    }

    /// Exact intersection, `None` when empty.
    pub fn intersection(&self, other: &Polytope) -> Result<Option<Polytope>> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut ineqs = self.inequalities();
        ineqs.extend(other.inequalities());
        Polytope::from_inequalities(self.ambient_dim, self.space, &ineqs, &[])
    }

    /// All integer points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Point> {
        let d = self.ambient_dim;
        let bounds: Vec<(i64, i64)> = (0..d)
            .map(|i| {
                let lo = self
                    .vertices
                    .iter()
                    .map(|v| v.coords()[i].floor())
                    .min()
                    .unwrap();
                let hi = self
                    .vertices
                    .iter()
                    .map(|v| v.coords()[i].ceil())
                    .max()
                    .unwrap();
                (to_i64(&lo), to_i64(&hi))
            })
            .collect();
        let mut out = Vec::new();
        let mut cur = vec![0i64; d];
        self.scan_box(&bounds, 0, &mut cur, &mut out);
        out
    }

    fn scan_box(&self, bounds: &[(i64, i64)], i: usize, cur: &mut Vec<i64>, out: &mut Vec<Point>) {
        if i == bounds.len() {
            let p = Point::from_ints(cur, self.space);
            if self.contains(&p).unwrap_or(false) {
                out.push(p);
            }
            return;
        }
        for c in bounds[i].0..=bounds[i].1 {
            cur[i] = c;
            self.scan_box(bounds, i + 1, cur, out);
        }
    }
}

fn to_i64(q: &Rational) -> i64 {
    i64::try_from(q.to_integer()).expect("lattice box coordinate exceeds i64")
}
