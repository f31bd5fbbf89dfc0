//! The dual nef-partition `(nabla; E'_1, ..., E'_r)` and exact verification
//! of the identities that hold between the two sides.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nef::NefPartition;
use crate::point::Point;
use crate::polytope::Polytope;
use crate::rational::dot;

/// Outcome of one identity check; a failure carries an exact witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn pass() -> Self {
        CheckResult {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        CheckResult {
            passed: false,
            witness: Some(witness.into()),
        }
    }

    fn equal_polytopes(lhs: &Polytope, rhs: &Polytope, what: &str) -> Self {
        if lhs == rhs {
            return Self::pass();
        }
        let only_left: Vec<String> = lhs
            .vertices()
            .iter()
            .filter(|v| rhs.vertex_index(v).is_none())
            .map(ToString::to_string)
            .collect();
        let only_right: Vec<String> = rhs
            .vertices()
            .iter()
            .filter(|v| lhs.vertex_index(v).is_none())
            .map(ToString::to_string)
            .collect();
        Self::fail(format!(
            "{what}: vertices only on the left [{}], only on the right [{}]",
            only_left.join(" "),
            only_right.join(" ")
        ))
    }
}

/// One record per verified identity. Field names are the stable keys of
/// the JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// `Delta* = nabla_1 + ... + nabla_r`
    pub prop31: CheckResult,
    /// `nabla* = Delta_1 + ... + Delta_r`
    pub prop32: CheckResult,
    /// `nabla` is reflexive
    pub cor33: CheckResult,
    /// `min <Delta_j, nabla_i> = -delta_ji`
    pub cor212: CheckResult,
    /// `Delta_i` is the support polytope of `psi_i`
    pub cor35: CheckResult,
    /// applying the construction twice returns the input
    pub involution: CheckResult,
}

impl Checks {
    pub fn all_passed(&self) -> bool {
        self.iter().all(|(_, c)| c.passed)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &CheckResult)> {
        [
            ("prop31", &self.prop31),
            ("prop32", &self.prop32),
            ("cor33", &self.cor33),
            ("cor212", &self.cor212),
            ("cor35", &self.cor35),
            ("involution", &self.involution),
        ]
        .into_iter()
    }
}

/// Everything the construction produces for one nef-partition.
#[derive(Debug, Clone)]
pub struct DualityResult {
    pub source: NefPartition,
    pub nabla: Polytope,
    pub dual: NefPartition,
    pub checks: Checks,
}

impl DualityResult {
    /// The dual PL functions `psi_i` on the face fan of `nabla`.
    pub fn psi(&self) -> &[crate::fan::PlFunction] {
        self.dual.phi()
    }
}

fn violated(check: &'static str, witness: String) -> Error {
    Error::InvariantViolated { check, witness }
}

/// `nabla = conv(nabla_1 u ... u nabla_r)`, checked to lie inside `Delta*`.
pub fn nabla(np: &NefPartition) -> Result<Polytope> {
    let pts: Vec<Point> = np
        .nabla_parts()
        .iter()
        .flat_map(|p| p.vertices().iter().cloned())
        .collect();
    let nabla = Polytope::hull(&pts)?;
    if !nabla.is_subset_of(&np.delta().polar_dual()?)? {
        return Err(violated(
            "nabla inside the polar",
            "nabla leaves Delta*".into(),
        ));
    }
    Ok(nabla)
}

pub fn verify_polar_is_nabla_sum(np: &NefPartition) -> Result<CheckResult> {
    let sum = Polytope::minkowski_sum_all(np.nabla_parts())?;
    Ok(CheckResult::equal_polytopes(
        &np.delta().polar_dual()?,
        &sum,
        "Delta* vs sum of nabla_i",
    ))
}

pub fn verify_nabla_polar_is_delta_sum(np: &NefPartition) -> Result<CheckResult> {
    let nabla_polar = nabla(np)?.polar_dual()?;
    let sum = Polytope::minkowski_sum_all(np.delta_parts())?;
    let eq = CheckResult::equal_polytopes(&nabla_polar, &sum, "nabla* vs sum of Delta_i");
    if eq.passed && !nabla_polar.is_lattice() {
        return Ok(CheckResult::fail("nabla* is not a lattice polytope"));
    }
    Ok(eq)
}

pub fn verify_nabla_reflexive(np: &NefPartition) -> Result<CheckResult> {
    Ok(match nabla(np)?.reflexivity_failure() {
        None => CheckResult::pass(),
        Some(why) => CheckResult::fail(format!("nabla is not reflexive: {why}")),
    })
}

pub fn verify_pairings(np: &NefPartition) -> CheckResult {
    let report = np.check_relations();
    if report.passed() {
        CheckResult::pass()
    } else {
        CheckResult::fail(report.violations.join("; "))
    }
}

/// Builds the dual nef-partition on `nabla`, with `E'_i` the nonzero
/// vertices of `nabla_i`.
///
/// The origin can be a vertex of some `nabla_i` (a single-vertex part of
/// the octahedron does this) but never of `nabla`, so it is left out of
/// the dual parts. The dual functions `psi_i` go through the same validation
/// as the `phi_i`, and are then compared against
/// `psi_i(y) = -min_{x in Delta_i} <x, y>` on every vertex and every cone.
pub fn dual_nef_partition(np: &NefPartition) -> Result<NefPartition> {
    let nabla = nabla(np)?;
    let mut parts = Vec::with_capacity(np.r());
    for (i, part) in np.nabla_parts().iter().enumerate() {
        let mut idx = Vec::new();
        for v in part.vertices().iter().filter(|v| !v.is_origin()) {
            let k = nabla.vertex_index(v).ok_or_else(|| {
                violated(
                    "nonzero vertices of nabla_i are vertices of nabla",
                    format!("{v} of nabla_{i}"),
                )
            })?;
            idx.push(k);
        }
        parts.push(idx);
    }

    let dual = NefPartition::validate(&nabla, &parts).map_err(|e| match e {
        Error::Rejected(r) => violated("dual parts form a nef-partition", r.to_string()),
        Error::NotReflexive => violated("nabla is reflexive", "reflexivity failed".into()),
        other => other,
    })?;

    for (i, (psi, delta_i)) in dual.phi().iter().zip(np.delta_parts()).enumerate() {
        for (k, y) in nabla.vertices().iter().enumerate() {
            let min = delta_i
                .vertices()
                .iter()
                .map(|x| dot(x.coords(), y.coords()))
                .min()
                .expect("polytopes have vertices");
            if -min != psi.vertex_values()[k] {
                return Err(violated(
                    "psi_i = -min over Delta_i",
                    format!("part {i}, vertex {y}"),
                ));
            }
        }
        for (c, u) in psi.functionals().iter().enumerate() {
            if delta_i.vertex_index(&u.neg()).is_none() {
                return Err(violated(
                    "psi_i restricts to -<v_i, .> on each cone",
                    format!("part {i}, cone {c}, piece {u}"),
                ));
            }
        }
    }
    Ok(dual)
}

/// `Delta_i = {x : <x, y> >= -psi_i(y)}` for every `i`.
pub fn verify_support_recovers_delta(
    np: &NefPartition,
    dual: &NefPartition,
) -> Result<CheckResult> {
    for (i, (psi, delta_i)) in dual.phi().iter().zip(np.delta_parts()).enumerate() {
        let rebuilt = psi.support_polytope()?;
        let check = CheckResult::equal_polytopes(delta_i, &rebuilt, &format!("Delta_{i}"));
        if !check.passed {
            return Ok(check);
        }
    }
    Ok(CheckResult::pass())
}

fn involution_against(np: &NefPartition, dual: &NefPartition) -> Result<CheckResult> {
    let back = dual_nef_partition(dual)?;
    let base =
        CheckResult::equal_polytopes(np.delta(), back.delta(), "base polytope after two steps");
    if !base.passed {
        return Ok(base);
    }
    if back.part_family() != np.part_family() {
        return Ok(CheckResult::fail(format!(
            "parts after two steps {:?} differ from {:?}",
            back.canonical_parts(),
            np.canonical_parts()
        )));
    }
    Ok(CheckResult::pass())
}

/// Applies the construction twice and compares with the input, parts up to
/// relabeling.
pub fn verify_involution(np: &NefPartition) -> Result<CheckResult> {
    involution_against(np, &dual_nef_partition(np)?)
}

/// Builds `nabla` and the dual datum, and runs every check.
pub fn run_full_duality(np: &NefPartition) -> Result<DualityResult> {
    let nabla = nabla(np)?;
    let dual = dual_nef_partition(np)?;
    let checks = Checks {
        prop31: verify_polar_is_nabla_sum(np)?,
        prop32: verify_nabla_polar_is_delta_sum(np)?,
        cor33: verify_nabla_reflexive(np)?,
        cor212: verify_pairings(np),
        cor35: verify_support_recovers_delta(np, &dual)?,
        involution: involution_against(np, &dual)?,
    };
    Ok(DualityResult {
        source: np.clone(),
        nabla,
        dual,
        checks,
    })
}
