//! Face fans and convex piecewise-linear functions on them.
//!
//! A PL function on the face fan of `P` is pinned down by its values at the
//! vertices of `P`: on the cone over a facet it is the linear functional
//! through the facet's vertex values. When it is convex its support polytope
//! `{y : <x, y> >= -f(x)}` is the hull of the negated linear pieces.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, LinearSolution, Matrix};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::rational::{dot, is_integral, Rational};

/// The complete fan of cones over the faces of a polytope with the origin in
/// its interior. Maximal cones are indexed like the facets of the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceFan {
    base: Polytope,
}

impl FaceFan {
    pub fn new(base: &Polytope) -> Result<Arc<FaceFan>> {
        if !base.is_full_dimensional() {
            return Err(Error::NotFullDimensional {
                dim: base.dim(),
                ambient: base.ambient_dim(),
            });
        }
        if !base.has_origin_in_interior() {
            return Err(Error::ZeroNotInterior);
        }
        Ok(Arc::new(FaceFan { base: base.clone() }))
    }

    pub fn base(&self) -> &Polytope {
        &self.base
    }

    pub fn cone_count(&self) -> usize {
        self.base.facets().len()
    }

    /// Vertex indices of the base polytope spanning maximal cone `cone`.
    pub fn cone_rays(&self, cone: usize) -> &[usize] {
        &self.base.facets()[cone].incidence
    }

    /// Index of a maximal cone containing `x`.
    pub fn locate(&self, x: &Point) -> Result<usize> {
        if x.dim() != self.base.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.base.ambient_dim(),
                found: x.dim(),
            });
        }
        if x.space() != self.base.space() {
            return Err(Error::SpaceMismatch);
        }
        if x.is_origin() {
            return Ok(0);
        }
        for (i, facet) in self.base.facets().iter().enumerate() {
            let s = dot(x.coords(), facet.normal.coords());
            if !s.is_negative() {
                continue;
            }
            // radial projection of x onto the facet hyperplane
            let z = x.scale(&(&facet.offset / -s));
            if self.base.contains(&z)? {
                return Ok(i);
            }
        }
        Err(Error::InvariantViolated {
            check: "fan completeness",
            witness: format!("no maximal cone contains {x}"),
        })
    }
}

/// Builds the face fan of `p`.
pub fn face_fan(p: &Polytope) -> Result<Arc<FaceFan>> {
    FaceFan::new(p)
}

/// A function on the face fan, linear on every maximal cone.
#[derive(Debug, Clone)]
pub struct PlFunction {
    fan: Arc<FaceFan>,
    values: Vec<Rational>,
    functionals: Vec<Point>,
    convex: bool,
    integral: bool,
}

impl PartialEq for PlFunction {
    fn eq(&self, other: &Self) -> bool {
        self.fan.base() == other.fan.base() && self.values == other.values
    }
}

impl PlFunction {
    /// Extends vertex values linearly over each maximal cone.
    ///
    /// Non-simplicial facets give overdetermined systems; an inconsistent one
    /// yields [`Error::NotPiecewiseLinear`] naming the cone.
    pub fn from_vertex_values(fan: &Arc<FaceFan>, values: Vec<Rational>) -> Result<PlFunction> {
        let base = fan.base();
        let n = base.vertices().len();
        if values.len() != n {
            return Err(Error::ValueCountMismatch {
                expected: n,
                found: values.len(),
            });
        }
        let d = base.ambient_dim();
        let mut functionals = Vec::with_capacity(fan.cone_count());
        for cone in 0..fan.cone_count() {
            let rays = fan.cone_rays(cone);
            let rows: Matrix = rays
                .iter()
                .map(|&v| base.vertices()[v].coords().to_vec())
                .collect();
            let rhs: Vec<Rational> = rays.iter().map(|&v| values[v].clone()).collect();
            match solve(&rows, &rhs, d) {
                LinearSolution::Unique(u) => {
                    functionals.push(Point::new(u, base.space().dual()));
                }
                LinearSolution::Inconsistent => return Err(Error::NotPiecewiseLinear { cone }),
                LinearSolution::Underdetermined => {
                    return Err(Error::InvariantViolated {
                        check: "facet vertices span",
                        witness: format!("cone {cone} is not full-dimensional"),
                    })
                }
            }
        }
        Ok(Self::assemble(fan.clone(), values, functionals))
    }

    fn assemble(fan: Arc<FaceFan>, values: Vec<Rational>, functionals: Vec<Point>) -> PlFunction {
        let mut f = PlFunction {
            fan,
            values,
            functionals,
            convex: false,
            integral: false,
        };
        f.integral = f.non_integral_cone().is_none();
        f.convex = f.convexity_violation().is_none();
        f
    }

    pub fn fan(&self) -> &Arc<FaceFan> {
        &self.fan
    }

    pub fn vertex_values(&self) -> &[Rational] {
        &self.values
    }

    /// The linear piece `u` with `f(x) = <x, u>` on each maximal cone.
    pub fn functionals(&self) -> &[Point] {
        &self.functionals
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn non_integral_cone(&self) -> Option<usize> {
        self.functionals
            .iter()
            .position(|u| !u.coords().iter().all(is_integral))
    }

    /// First `(vertex, cone)` with `f(vertex) < <vertex, u_cone>`.
    ///
    /// Checking vertices against every piece suffices: both sides are linear
    /// on each cone and the vertices generate all rays of the fan.
    pub fn convexity_violation(&self) -> Option<(usize, usize)> {
        let verts = self.fan.base().vertices();
        for (e, v) in verts.iter().enumerate() {
            for (c, u) in self.functionals.iter().enumerate() {
                if self.values[e] < dot(v.coords(), u.coords()) {
                    return Some((e, c));
                }
            }
        }
        None
    }

    pub fn evaluate(&self, x: &Point) -> Result<Rational> {
        let cone = self.fan.locate(x)?;
        let value = dot(x.coords(), self.functionals[cone].coords());
        if self.convex {
            let max = self
                .functionals
                .iter()
                .map(|u| dot(x.coords(), u.coords()))
                .max()
                .unwrap_or_else(Rational::zero);
            assert_eq!(
                value, max,
                "convex PL function disagrees with max of its pieces at {x}"
            );
        }
        Ok(value)
    }

    /// `{y : <x, y> >= -f(x) for all x}`, the hull of the negated pieces.
    pub fn support_polytope(&self) -> Result<Polytope> {
        if let Some((vertex, cone)) = self.convexity_violation() {
            return Err(Error::NotConvex { vertex, cone });
        }
        let gens: Vec<Point> = self.functionals.iter().map(Point::neg).collect();
        // sign guard: <e, -u> >= -f(e) for every generator and vertex
        for (c, g) in gens.iter().enumerate() {
            for (e, v) in self.fan.base().vertices().iter().enumerate() {
                if dot(v.coords(), g.coords()) < -self.values[e].clone() {
                    return Err(Error::InvariantViolated {
                        check: "support polytope sign convention",
                        witness: format!("generator of cone {c} violates vertex {e}"),
                    });
                }
            }
        }
        Polytope::hull(&gens)
    }

    /// Pointwise sum of two PL functions on the same fan.
    pub fn try_add(&self, other: &PlFunction) -> Result<PlFunction> {
        if !Arc::ptr_eq(&self.fan, &other.fan) && self.fan.base() != other.fan.base() {
            return Err(Error::FanMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        let functionals = self
            .functionals
            .iter()
            .zip(&other.functionals)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self::assemble(self.fan.clone(), values, functionals))
    }
}
