//! Command implementations behind the `nefdual` binary.
//!
//! Each command takes file contents and returns an [`Outcome`] holding the
//! exit code and both output streams: 0 for success or a positive verdict,
//! 1 for a well-formed input with a negative verdict, 2 for input errors.

use std::fmt::Write;
use std::time::Instant;

use crate::duality::run_full_duality;
use crate::error::Error;
use crate::io::{format_partition_spec, parse_partition_spec, parse_points, write_polytope};
use crate::nef::{enumerate_nef_partitions, NefPartition, Rejection};
use crate::point::{Point, Space};
use crate::polytope::Polytope;
use crate::rational;
use crate::report::{
    coord_list, coords, DualityReport, InputEcho, PartsReport, RejectionReport, Report, Timings,
    SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn negative(stdout: String, stderr: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_NEGATIVE,
            stdout,
            stderr: stderr.into(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// A named polytope file.
#[derive(Debug, Clone, Copy)]
pub struct Input<'a> {
    pub name: &'a str,
    pub text: &'a str,
}

fn load(input: Input) -> Result<(Vec<Point>, Polytope), Outcome> {
    let pts = parse_points(input.text, Space::M)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", input.name)))?;
    let poly =
        Polytope::hull(&pts).map_err(|e| Outcome::input_error(format!("{}: {e}", input.name)))?;
    Ok((pts, poly))
}

/// Vertex-list input for the nef commands: every row must be a distinct
/// vertex. Returns the file-to-canonical index map.
fn load_vertex_list(input: Input) -> Result<(Vec<Point>, Polytope, Vec<usize>), Outcome> {
    let (pts, poly) = load(input)?;
    let mut map = Vec::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        match poly.vertex_index(p) {
            Some(k) if !map.contains(&k) => map.push(k),
            Some(_) => {
                return Err(Outcome::input_error(format!(
                    "{}: row {i} repeats a vertex",
                    input.name
                )))
            }
            None => {
                return Err(Outcome::input_error(format!(
                    "{}: row {i} {p} is not a vertex of the polytope",
                    input.name
                )))
            }
        }
    }
    Ok((pts, poly, map))
}

fn file_index(map: &[usize], canonical: usize) -> usize {
    map.iter()
        .position(|&k| k == canonical)
        .expect("index map is a bijection")
}

fn to_canonical(map: &[usize], parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    parts
        .iter()
        .map(|p| p.iter().map(|&i| map[i]).collect())
        .collect()
}

fn to_file_order(map: &[usize], parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    parts
        .iter()
        .map(|p| {
            let mut q: Vec<usize> = p.iter().map(|&k| file_index(map, k)).collect();
            q.sort_unstable();
            q
        })
        .collect()
}

fn base_report(
    command: &'static str,
    input: Input,
    pts: &[Point],
    poly: &Polytope,
    map: &[usize],
) -> Report {
    Report {
        schema: SCHEMA,
        command,
        input: InputEcho {
            file: input.name.to_string(),
            parts: None,
            r: None,
            points: coord_list(pts),
        },
        canonical_vertices: coord_list(poly.vertices()),
        file_to_canonical: map.to_vec(),
        valid: None,
        rejection: None,
        parts: None,
        duality: None,
        partitions: None,
        timings: Timings { total_ms: 0.0 },
    }
}

fn finish(mut report: Report, start: Instant) -> String {
    report.timings.total_ms = start.elapsed().as_secs_f64() * 1e3;
    report.to_json()
}

fn rejection_report(r: &Rejection, delta: &Polytope, map: &[usize]) -> RejectionReport {
    let vertex = |k: usize| (Some(file_index(map, k)), Some(coords(&delta.vertices()[k])));
    let cone = |c: usize| (Some(c), Some(coords(&delta.facets()[c].normal)));
    let mut out = RejectionReport {
        kind: r.kind(),
        part: None,
        vertex: None,
        vertex_coords: None,
        cone: None,
        cone_facet_normal: None,
        functional: None,
        message: String::new(),
    };
    match r {
        Rejection::EmptyPart { part } => {
            out.part = Some(*part);
            out.message = format!("part {part} is empty");
        }
        Rejection::NotDisjoint { vertex: v } | Rejection::NotCovering { vertex: v } => {
            (out.vertex, out.vertex_coords) = vertex(*v);
            out.message = format!(
                "vertex {} {} {}",
                file_index(map, *v),
                delta.vertices()[*v],
                if r.kind() == "NotDisjoint" {
                    "is in two parts"
                } else {
                    "is in no part"
                }
            );
        }
        Rejection::NotPiecewiseLinear { part, cone: c } => {
            out.part = Some(*part);
            (out.cone, out.cone_facet_normal) = cone(*c);
            out.message = format!(
                "part {part}: indicator values are not linear on the cone over facet {}",
                delta.facets()[*c]
            );
        }
        Rejection::NotIntegral {
            part,
            cone: c,
            functional,
        } => {
            out.part = Some(*part);
            (out.cone, out.cone_facet_normal) = cone(*c);
            out.functional = Some(coords(functional));
            out.message = format!(
                "part {part}: functional {functional} on the cone over facet {} is not integral",
                delta.facets()[*c]
            );
        }
        Rejection::NotConvex {
            part,
            vertex: v,
            cone: c,
        } => {
            out.part = Some(*part);
            (out.vertex, out.vertex_coords) = vertex(*v);
            (out.cone, out.cone_facet_normal) = cone(*c);
            out.message = format!(
                "part {part}: vertex {} {} lies below the piece on the cone over facet {}",
                file_index(map, *v),
                delta.vertices()[*v],
                delta.facets()[*c]
            );
        }
    }
    out
}

/// Polar dual in file format.
pub fn polar(input: Input) -> Outcome {
    let (_, poly) = match load(input) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match poly.polar_dual() {
        Ok(p) => Outcome::ok(write_polytope(&p)),
        Err(Error::ZeroNotInterior) => Outcome::negative(
            String::new(),
            "ZeroNotInterior: the origin is not interior\n",
        ),
        Err(e @ Error::NotFullDimensional { .. }) => {
            Outcome::negative(String::new(), format!("NotFullDimensional: {e}\n"))
        }
        Err(e) => Outcome::input_error(e),
    }
}

pub fn check_reflexive(input: Input) -> Outcome {
    let (_, poly) = match load(input) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match poly.reflexivity_failure() {
        None => Outcome::ok("reflexive\n".into()),
        Some(why) => Outcome::negative(format!("not reflexive: {why}\n"), ""),
    }
}

pub fn minkowski(a: Input, b: Input) -> Outcome {
    let (_, pa) = match load(a) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let (_, pb) = match load(b) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match pa.minkowski_sum(&pb) {
        Ok(p) => Outcome::ok(write_polytope(&p)),
        Err(e) => Outcome::input_error(e),
    }
}

enum Validated {
    Valid(Box<NefPartition>),
    Rejected(Rejection),
    NotReflexive(String),
}

fn validate(poly: &Polytope, canonical: &[Vec<usize>]) -> Result<Validated, Outcome> {
    if let Some(why) = poly.reflexivity_failure() {
        return Ok(Validated::NotReflexive(why.to_string()));
    }
    match NefPartition::validate(poly, canonical) {
        Ok(np) => Ok(Validated::Valid(Box::new(np))),
        Err(Error::Rejected(r)) => Ok(Validated::Rejected(r)),
        Err(e) => Err(Outcome::negative(
            String::new(),
            format!("internal error: {e}\n"),
        )),
    }
}

fn parts_text(parts: &[Vec<usize>]) -> String {
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        let idx: Vec<String> = p.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "part {i}: {}", idx.join(","));
    }
    s
}

pub fn nef_validate(input: Input, spec: &str, json: bool) -> Outcome {
    let start = Instant::now();
    let (pts, poly, map) = match load_vertex_list(input) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let parts = match parse_partition_spec(spec, pts.len()) {
        Ok(p) => p,
        Err(e) => return Outcome::input_error(e),
    };
    let canonical = to_canonical(&map, &parts);
    let verdict = match validate(&poly, &canonical) {
        Ok(v) => v,
        Err(o) => return o,
    };

    let mut report = base_report("nef-validate", input, &pts, &poly, &map);
    report.input.parts = Some(spec.to_string());
    let (code, text, stderr) = match &verdict {
        Validated::Valid(np) => {
            report.valid = Some(true);
            report.parts = Some(PartsReport {
                file_order: parts.clone(),
                canonical: np.parts().to_vec(),
            });
            (
                EXIT_OK,
                format!(
                    "valid nef-partition (r = {})\n{}",
                    np.r(),
                    parts_text(&parts)
                ),
                String::new(),
            )
        }
        Validated::Rejected(r) => {
            let rr = rejection_report(r, &poly, &map);
            let text = format!("invalid: {}: {}\n", rr.kind, rr.message);
            report.valid = Some(false);
            report.rejection = Some(rr);
            (EXIT_NEGATIVE, text, String::new())
        }
        Validated::NotReflexive(why) => {
            report.valid = Some(false);
            (
                EXIT_NEGATIVE,
                String::new(),
                format!("NotReflexive: {why}\n"),
            )
        }
    };
    let stdout = if json { finish(report, start) } else { text };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

pub fn nef_dual(input: Input, spec: &str, json: bool) -> Outcome {
    let start = Instant::now();
    let (pts, poly, map) = match load_vertex_list(input) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let parts = match parse_partition_spec(spec, pts.len()) {
        Ok(p) => p,
        Err(e) => return Outcome::input_error(e),
    };
    let canonical = to_canonical(&map, &parts);
    let mut report = base_report("nef-dual", input, &pts, &poly, &map);
    report.input.parts = Some(spec.to_string());

    let np = match validate(&poly, &canonical) {
        Ok(Validated::Valid(np)) => np,
        Ok(Validated::Rejected(r)) => {
            let rr = rejection_report(&r, &poly, &map);
            let text = format!("invalid: {}: {}\n", rr.kind, rr.message);
            report.valid = Some(false);
            report.rejection = Some(rr);
            let stdout = if json { finish(report, start) } else { text };
            return Outcome::negative(stdout, "");
        }
        Ok(Validated::NotReflexive(why)) => {
            return Outcome::negative(String::new(), format!("NotReflexive: {why}\n"));
        }
        Err(o) => return o,
    };
    let res = match run_full_duality(&np) {
        Ok(r) => r,
        Err(e) => return Outcome::negative(String::new(), format!("internal error: {e}\n")),
    };

    let relations = np.check_relations();
    let dual_parts: Vec<Vec<Point>> = res
        .dual
        .parts()
        .iter()
        .map(|p| p.iter().map(|&k| res.nabla.vertices()[k].clone()).collect())
        .collect();
    let all = res.checks.all_passed();

    let mut text = String::new();
    let _ = writeln!(text, "nef-partition (r = {})", np.r());
    text.push_str(&parts_text(&parts));
    let _ = writeln!(text, "nabla");
    text.push_str(&write_polytope(&res.nabla));
    let _ = writeln!(text, "dual parts");
    for (i, p) in dual_parts.iter().enumerate() {
        let pts: Vec<String> = p.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "part {i}: {}", pts.join(" "));
    }
    let _ = writeln!(text, "checks");
    for (name, c) in res.checks.iter() {
        match &c.witness {
            None => {
                let _ = writeln!(text, "{name} {}", if c.passed { "pass" } else { "FAIL" });
            }
            Some(w) => {
                let _ = writeln!(text, "{name} FAIL {w}");
            }
        }
    }

    report.valid = Some(true);
    report.parts = Some(PartsReport {
        file_order: parts.clone(),
        canonical: np.parts().to_vec(),
    });
    report.duality = Some(DualityReport {
        delta_parts: np
            .delta_parts()
            .iter()
            .map(|p| coord_list(p.vertices()))
            .collect(),
        nabla_parts: np
            .nabla_parts()
            .iter()
            .map(|p| coord_list(p.vertices()))
            .collect(),
        nabla: coord_list(res.nabla.vertices()),
        dual_parts: dual_parts.iter().map(|p| coord_list(p)).collect(),
        relation_matrix: relations
            .matrix
            .iter()
            .map(|row| row.iter().map(rational::format).collect())
            .collect(),
        checks: res.checks.clone(),
        all_checks_passed: all,
    });
    let stdout = if json { finish(report, start) } else { text };
    Outcome {
        code: if all { EXIT_OK } else { EXIT_NEGATIVE },
        stdout,
        stderr: String::new(),
    }
}

pub fn nef_enumerate(input: Input, r: usize, json: bool) -> Outcome {
    let start = Instant::now();
    let (pts, poly, map) = match load_vertex_list(input) {
        Ok(v) => v,
        Err(o) => return o,
    };
    if r == 0 || r > pts.len() {
        return Outcome::input_error(format!("r must be between 1 and {}", pts.len()));
    }
    let found = match enumerate_nef_partitions(&poly, r) {
        Ok(f) => f,
        Err(Error::NotReflexive) => {
            let why = poly
                .reflexivity_failure()
                .map(|w| w.to_string())
                .unwrap_or_default();
            return Outcome::negative(String::new(), format!("NotReflexive: {why}\n"));
        }
        Err(e) => return Outcome::negative(String::new(), format!("internal error: {e}\n")),
    };
    let mut listed: Vec<PartsReport> = found
        .iter()
        .map(|np| {
            let mut file_order = to_file_order(&map, np.parts());
            file_order.sort();
            PartsReport {
                file_order,
                canonical: np.canonical_parts(),
            }
        })
        .collect();
    listed.sort_by(|a, b| a.file_order.cmp(&b.file_order));

    let stdout = if json {
        let mut report = base_report("nef-enumerate", input, &pts, &poly, &map);
        report.input.r = Some(r);
        report.partitions = Some(listed);
        finish(report, start)
    } else {
        listed
            .iter()
            .map(|p| format_partition_spec(&p.file_order) + "\n")
            .collect()
    };
    Outcome::ok(stdout)
}
