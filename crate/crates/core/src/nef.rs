//! Nef-partitions of reflexive polytopes.
//!
//! A partition `E_1 | ... | E_r` of the vertices of a reflexive `Delta` is a
//! nef-partition when every indicator assignment (1 on `E_i`, 0 elsewhere)
//! extends to an integral convex PL function `phi_i` on the face fan. Each
//! part then yields `Delta_i = conv({0} u E_i)` and the support polytope
//! `nabla_i = {y : <x, y> >= -phi_i(x)}`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fan::{FaceFan, PlFunction};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::rational::{self, dot, Rational};

/// Why a vertex partition is not a nef-partition. Indices are canonical
/// vertex indices of `Delta`, part positions, and maximal cone indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    EmptyPart {
        part: usize,
    },
    NotDisjoint {
        vertex: usize,
    },
    NotCovering {
        vertex: usize,
    },
    NotPiecewiseLinear {
        part: usize,
        cone: usize,
    },
    NotIntegral {
        part: usize,
        cone: usize,
        functional: Point,
    },
    NotConvex {
        part: usize,
        vertex: usize,
        cone: usize,
    },
}

impl Rejection {
    pub fn kind(&self) -> &'static str {
        match self {
            Rejection::EmptyPart { .. } => "EmptyPart",
            Rejection::NotDisjoint { .. } => "NotDisjoint",
            Rejection::NotCovering { .. } => "NotCovering",
            Rejection::NotPiecewiseLinear { .. } => "NotPiecewiseLinear",
            Rejection::NotIntegral { .. } => "NotIntegral",
            Rejection::NotConvex { .. } => "NotConvex",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::EmptyPart { part } => write!(f, "EmptyPart: part {part} is empty"),
            Rejection::NotDisjoint { vertex } => {
                write!(f, "NotDisjoint: vertex {vertex} appears in two parts")
            }
            Rejection::NotCovering { vertex } => {
                write!(f, "NotCovering: vertex {vertex} is in no part")
            }
            Rejection::NotPiecewiseLinear { part, cone } => write!(
                f,
                "NotPiecewiseLinear: part {part} has no linear piece on cone {cone}"
            ),
            Rejection::NotIntegral {
                part,
                cone,
                functional,
            } => write!(
                f,
                "NotIntegral: part {part} has functional {functional} on cone {cone}"
            ),
            Rejection::NotConvex { part, vertex, cone } => write!(
                f,
                "NotConvex: part {part} lies below the piece of cone {cone} at vertex {vertex}"
            ),
        }
    }
}

/// A validated nef-partition with its PL functions and both families of
/// polytopes.
#[derive(Debug, Clone)]
pub struct NefPartition {
    delta: Polytope,
    fan: Arc<FaceFan>,
    parts: Vec<Vec<usize>>,
    phi: Vec<PlFunction>,
    delta_parts: Vec<Polytope>,
    nabla_parts: Vec<Polytope>,
}

/// Minimum pairings between the `Delta_j` and `nabla_i`, with a witness pair
/// for every entry.
#[derive(Debug, Clone)]
pub struct RelationReport {
    /// `matrix[j][i] = min <x, y>` over vertices `x` of `Delta_j`, `y` of `nabla_i`.
    pub matrix: Vec<Vec<Rational>>,
    pub attained_at: Vec<Vec<(Point, Point)>>,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn rejected(r: Rejection) -> Error {
    Error::Rejected(r)
}

fn invariant(check: &'static str, witness: String) -> Error {
    Error::InvariantViolated { check, witness }
}

impl NefPartition {
    /// Validates `parts` (canonical vertex indices of `delta`) as a
    /// nef-partition.
    ///
    /// Parts keep their given order; indices inside a part are sorted.
    /// A partition that fails the definition comes back as
    /// [`Error::Rejected`] with a reproducible witness.
    pub fn validate(delta: &Polytope, parts: &[Vec<usize>]) -> Result<NefPartition> {
        if !delta.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let n = delta.vertices().len();
        for &i in parts.iter().flatten() {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
        }
        if let Some(part) = parts.iter().position(Vec::is_empty) {
            return Err(rejected(Rejection::EmptyPart { part }));
        }
        let mut seen = vec![false; n];
        for &i in parts.iter().flatten() {
            if seen[i] {
                return Err(rejected(Rejection::NotDisjoint { vertex: i }));
            }
            seen[i] = true;
        }
        if let Some(vertex) = seen.iter().position(|s| !s) {
            return Err(rejected(Rejection::NotCovering { vertex }));
        }

        let fan = FaceFan::new(delta)?;
        let mut phi = Vec::with_capacity(parts.len());
        for (part, members) in parts.iter().enumerate() {
            let mut values = vec![Rational::zero(); n];
            for &i in members {
                values[i] = Rational::one();
            }
            let f = PlFunction::from_vertex_values(&fan, values).map_err(|e| match e {
                Error::NotPiecewiseLinear { cone } => {
                    rejected(Rejection::NotPiecewiseLinear { part, cone })
                }
                other => other,
            })?;
            if let Some(cone) = f.non_integral_cone() {
                let functional = f.functionals()[cone].clone();
                return Err(rejected(Rejection::NotIntegral {
                    part,
                    cone,
                    functional,
                }));
            }
            if let Some((vertex, cone)) = f.convexity_violation() {
                return Err(rejected(Rejection::NotConvex { part, vertex, cone }));
            }
            phi.push(f);
        }

        let origin = Point::origin(delta.ambient_dim(), delta.space());
        let delta_parts = parts
            .iter()
            .map(|members| {
                let mut pts: Vec<Point> = members
                    .iter()
                    .map(|&i| delta.vertices()[i].clone())
                    .collect();
                pts.push(origin.clone());
                Polytope::hull(&pts)
            })
            .collect::<Result<Vec<_>>>()?;
        let nabla_parts = phi
            .iter()
            .map(PlFunction::support_polytope)
            .collect::<Result<Vec<_>>>()?;

        let mut sorted_parts: Vec<Vec<usize>> = parts.to_vec();
        for p in &mut sorted_parts {
            p.sort_unstable();
        }
        let np = NefPartition {
            delta: delta.clone(),
            fan,
            parts: sorted_parts,
            phi,
            delta_parts,
            nabla_parts,
        };
        np.assert_invariants()?;
        Ok(np)
    }

    fn assert_invariants(&self) -> Result<()> {
        let polar = self.delta.polar_dual()?;
        let ambient = self.delta.ambient_dim();

        let total = self.phi[1..]
            .iter()
            .try_fold(self.phi[0].clone(), |acc, f| acc.try_add(f))?;
        if !total.vertex_values().iter().all(One::is_one) {
            return Err(invariant(
                "sum of phi_i",
                "vertex value differs from 1".into(),
            ));
        }
        if total.support_polytope()? != polar {
            return Err(invariant(
                "sum of phi_i",
                "support polytope differs from the polar".into(),
            ));
        }

        let origin_m = Point::origin(ambient, self.delta.space());
        let zero_m = Polytope::hull(std::slice::from_ref(&origin_m))?;
        for i in 0..self.delta_parts.len() {
            for j in i + 1..self.delta_parts.len() {
                let meet = self.delta_parts[i].intersection(&self.delta_parts[j])?;
                if meet.as_ref() != Some(&zero_m) {
                    return Err(invariant(
                        "Delta_i meets Delta_j only in 0",
                        format!(
                            "parts {i} and {j} intersect in {:?}",
                            meet.map(|p| p.vertices().to_vec())
                        ),
                    ));
                }
            }
        }
        let union: Vec<Point> = self
            .delta_parts
            .iter()
            .flat_map(|p| p.vertices().iter().cloned())
            .collect();
        if Polytope::hull(&union)? != self.delta {
            return Err(invariant(
                "conv of Delta_i",
                "hull of the parts differs from Delta".into(),
            ));
        }

        let origin_n = Point::origin(ambient, self.delta.space().dual());
        for (i, nabla) in self.nabla_parts.iter().enumerate() {
            if !nabla.contains(&origin_n)? {
                return Err(invariant("0 in nabla_i", format!("part {i}")));
            }
            if !nabla.is_lattice() {
                return Err(invariant(
                    "nabla_i is a lattice polytope",
                    format!("part {i}"),
                ));
            }
            if !nabla.is_subset_of(&polar)? {
                return Err(invariant("nabla_i inside the polar", format!("part {i}")));
            }
        }
        Ok(())
    }

    pub fn delta(&self) -> &Polytope {
        &self.delta
    }

    pub fn fan(&self) -> &Arc<FaceFan> {
        &self.fan
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Parts in the order they were given, each sorted.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Parts ordered by their minimum vertex index.
    pub fn canonical_parts(&self) -> Vec<Vec<usize>> {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| p[0]);
        parts
    }

    /// Parts as sets of vertex coordinates, ordered; comparable across
    /// differently indexed but equal polytopes.
    pub fn part_family(&self) -> Vec<Vec<Point>> {
        let mut fam: Vec<Vec<Point>> = self
            .parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&i| self.delta.vertices()[i].clone())
                    .collect()
            })
            .collect();
        fam.sort();
        fam
    }

    pub fn phi(&self) -> &[PlFunction] {
        &self.phi
    }

    /// `Delta_i = conv({0} u E_i)`.
    pub fn delta_parts(&self) -> &[Polytope] {
        &self.delta_parts
    }

    /// `nabla_i = {y : <x, y> >= -phi_i(x)}`.
    pub fn nabla_parts(&self) -> &[Polytope] {
        &self.nabla_parts
    }

    /// Minimum pairings `<Delta_j, nabla_i>` against `-delta_ji`, and
    /// recovery of `phi_i` at every vertex of `Delta` from `nabla_i`.
    pub fn check_relations(&self) -> RelationReport {
        let r = self.r();
        let mut matrix = Vec::with_capacity(r);
        let mut attained_at = Vec::with_capacity(r);
        let mut violations = Vec::new();
        for (j, dj) in self.delta_parts.iter().enumerate() {
            let mut row = Vec::with_capacity(r);
            let mut where_row = Vec::with_capacity(r);
            for (i, ni) in self.nabla_parts.iter().enumerate() {
                let bound = if i == j {
                    -Rational::one()
                } else {
                    Rational::zero()
                };
                let mut best: Option<(Rational, Point, Point)> = None;
                for x in dj.vertices() {
                    for y in ni.vertices() {
                        let v = dot(x.coords(), y.coords());
                        if v < bound {
                            violations.push(format!(
                                "<{x},{y}> = {} below {} for Delta_{j}, nabla_{i}",
                                rational::format(&v),
                                rational::format(&bound)
                            ));
                        }
                        if best.as_ref().is_none_or(|b| v < b.0) {
                            best = Some((v, x.clone(), y.clone()));
                        }
                    }
                }
                let (v, x, y) = best.expect("polytopes have vertices");
                if v != bound {
                    violations.push(format!(
                        "min over Delta_{j} x nabla_{i} is {}, expected {}",
                        rational::format(&v),
                        rational::format(&bound)
                    ));
                }
                row.push(v);
                where_row.push((x, y));
            }
            matrix.push(row);
            attained_at.push(where_row);
        }

        for (i, (f, ni)) in self.phi.iter().zip(&self.nabla_parts).enumerate() {
            for (e, x) in self.delta.vertices().iter().enumerate() {
                let min = ni
                    .vertices()
                    .iter()
                    .map(|y| dot(x.coords(), y.coords()))
                    .min()
                    .expect("polytopes have vertices");
                if -min.clone() != f.vertex_values()[e] {
                    violations.push(format!(
                        "phi_{i}({x}) = {} but -min over nabla_{i} is {}",
                        rational::format(&f.vertex_values()[e]),
                        rational::format(&-min)
                    ));
                }
            }
        }
        RelationReport {
            matrix,
            attained_at,
            violations,
        }
    }
}

/// All set partitions of `0..n` into exactly `r` nonempty unlabeled blocks,
/// blocks ordered by minimum element, partitions in lexicographic order.
pub fn set_partitions(n: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        i: usize,
        n: usize,
        r: usize,
        used: usize,
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i == n {
            if used == r {
                let mut parts = vec![Vec::new(); r];
                for (v, &b) in assign.iter().enumerate() {
                    parts[b].push(v);
                }
                out.push(parts);
            }
            return;
        }
        // enough elements left to open the missing blocks
        if r - used > n - i {
            return;
        }
        for b in 0..=used.min(r - 1) {
            assign.push(b);
            rec(i + 1, n, r, used.max(b + 1), assign, out);
            assign.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 || r > n {
        return out;
    }
    rec(0, n, r, 0, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// Every nef-partition of `delta` into exactly `r` parts, in canonical order.
pub fn enumerate_nef_partitions(delta: &Polytope, r: usize) -> Result<Vec<NefPartition>> {
    if !delta.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let candidates = set_partitions(delta.vertices().len(), r);
    let results: Vec<Result<NefPartition>> = candidates
        .par_iter()
        .map(|parts| NefPartition::validate(delta, parts))
        .collect();
    let mut out = Vec::new();
    for res in results {
        match res {
            Ok(np) => out.push(np),
            Err(Error::Rejected(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
