//! JSON reports emitted by the command-line tool.
//!
//! The layout is versioned through the top-level `schema` field. Rationals are strings (`"p"` or
//! `"p/q"`), points are arrays of such strings.

use serde::Serialize;

use crate::duality::Checks;
use crate::point::Point;
use crate::rational;

pub const SCHEMA: &str = "nefdual.report/1";

pub type Coords = Vec<String>;

pub fn coords(p: &Point) -> Coords {
    p.coords().iter().map(rational::format).collect()
}

pub fn coord_list(points: &[Point]) -> Vec<Coords> {
    points.iter().map(coords).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub points: Vec<Coords>,
}

/// A rejection with vertex indices in file order.
#[derive(Debug, Clone, Serialize)]
pub struct RejectionReport {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_coords: Option<Coords>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone_facet_normal: Option<Coords>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functional: Option<Coords>,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartsReport {
    pub file_order: Vec<Vec<usize>>,
    pub canonical: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub delta_parts: Vec<Vec<Coords>>,
    pub nabla_parts: Vec<Vec<Coords>>,
    pub nabla: Vec<Coords>,
    pub dual_parts: Vec<Vec<Coords>>,
    pub relation_matrix: Vec<Vec<String>>,
    pub checks: Checks,
    pub all_checks_passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    pub canonical_vertices: Vec<Coords>,
    /// `file_to_canonical[i]` is the canonical index of file row `i`.
    pub file_to_canonical: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejection: Option<RejectionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<PartsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partitions: Option<Vec<PartsReport>>,
    pub timings: Timings,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
