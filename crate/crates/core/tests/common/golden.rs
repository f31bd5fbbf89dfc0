//! Byte-exact golden comparisons for the command-line tool.
//!
//! Each case stores stdout in `tests/golden/<name>.out` and, when nonempty,
//! stderr in `<name>.err`. JSON timings are zeroed before comparison. Set
//! `NEFDUAL_BLESS=1` to rewrite the files.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

pub const CASES: &[Case] = &[
    case("polar_cube", &["polar", "fixtures/cube_3d.poly"], 0),
    case("polar_triangle", &["polar", "fixtures/triangle_2d.poly"], 0),
    case(
        "polar_non_lattice",
        &["polar", "tests/fixtures/non_lattice.poly"],
        0,
    ),
    case(
        "polar_off_center",
        &["polar", "tests/fixtures/off_center.poly"],
        1,
    ),
    case(
        "polar_malformed",
        &["polar", "tests/fixtures/malformed.poly"],
        2,
    ),
    case(
        "check_reflexive_cross",
        &["check-reflexive", "fixtures/cross_2d.poly"],
        0,
    ),
    case(
        "check_reflexive_square_2x",
        &["check-reflexive", "tests/fixtures/square_2x.poly"],
        1,
    ),
    case(
        "check_reflexive_non_lattice",
        &["check-reflexive", "tests/fixtures/non_lattice.poly"],
        1,
    ),
    case(
        "check_reflexive_off_center",
        &["check-reflexive", "tests/fixtures/off_center.poly"],
        1,
    ),
    case(
        "check_reflexive_malformed",
        &["check-reflexive", "tests/fixtures/malformed.poly"],
        2,
    ),
    case(
        "nef_validate_cross_axis",
        &[
            "nef-validate",
            "fixtures/cross_2d.poly",
            "--parts",
            "0,2;1,3",
        ],
        0,
    ),
    case(
        "nef_validate_cross_axis_json",
        &[
            "nef-validate",
            "fixtures/cross_2d.poly",
            "--parts",
            "0,2;1,3",
            "--json",
        ],
        0,
    ),
    case(
        "nef_validate_square",
        &[
            "nef-validate",
            "fixtures/square_2d.poly",
            "--parts",
            "0;1,2,3",
        ],
        1,
    ),
    case(
        "nef_validate_square_json",
        &[
            "nef-validate",
            "fixtures/square_2d.poly",
            "--parts",
            "0;1,2,3",
            "--json",
        ],
        1,
    ),
    case(
        "nef_validate_not_covering",
        &["nef-validate", "fixtures/cross_2d.poly", "--parts", "0,1;2"],
        1,
    ),
    case(
        "nef_validate_overlap",
        &[
            "nef-validate",
            "fixtures/cross_2d.poly",
            "--parts",
            "0,1;1,2",
        ],
        2,
    ),
    case(
        "nef_validate_out_of_range",
        &[
            "nef-validate",
            "fixtures/cross_2d.poly",
            "--parts",
            "0,1;2,7",
        ],
        2,
    ),
    case(
        "nef_validate_not_reflexive",
        &[
            "nef-validate",
            "tests/fixtures/square_2x.poly",
            "--parts",
            "0,1;2,3",
        ],
        1,
    ),
    case(
        "nef_dual_cross_diagonal",
        &["nef-dual", "fixtures/cross_2d.poly", "--parts", "0,1;2,3"],
        0,
    ),
    case(
        "nef_dual_cross_diagonal_json",
        &[
            "nef-dual",
            "fixtures/cross_2d.poly",
            "--parts",
            "0,1;2,3",
            "--json",
        ],
        0,
    ),
    case(
        "nef_dual_cross_axis",
        &["nef-dual", "fixtures/cross_2d.poly", "--parts", "0,2;1,3"],
        0,
    ),
    case(
        "nef_dual_hexagon_r1",
        &[
            "nef-dual",
            "fixtures/hexagon_2d.poly",
            "--parts",
            "0,1,2,3,4,5",
        ],
        0,
    ),
    case(
        "nef_dual_octahedron_e1",
        &[
            "nef-dual",
            "fixtures/octahedron_3d.poly",
            "--parts",
            "0;1,2,3,4,5",
        ],
        0,
    ),
    case(
        "nef_dual_square_invalid",
        &["nef-dual", "fixtures/square_2d.poly", "--parts", "0;1,2,3"],
        1,
    ),
    case(
        "nef_dual_malformed_spec",
        &["nef-dual", "fixtures/square_2d.poly", "--parts", "0;a"],
        2,
    ),
    case(
        "nef_enumerate_cross_r1",
        &["nef-enumerate", "fixtures/cross_2d.poly", "-r", "1"],
        0,
    ),
    case(
        "nef_enumerate_cross_r2",
        &["nef-enumerate", "fixtures/cross_2d.poly", "-r", "2"],
        0,
    ),
    case(
        "nef_enumerate_cross_r2_json",
        &[
            "nef-enumerate",
            "fixtures/cross_2d.poly",
            "-r",
            "2",
            "--json",
        ],
        0,
    ),
    case(
        "nef_enumerate_octahedron_r2",
        &["nef-enumerate", "fixtures/octahedron_3d.poly", "-r", "2"],
        0,
    ),
    case(
        "nef_enumerate_square_2x",
        &["nef-enumerate", "tests/fixtures/square_2x.poly", "-r", "2"],
        1,
    ),
    case(
        "nef_enumerate_malformed",
        &["nef-enumerate", "tests/fixtures/malformed.poly", "-r", "2"],
        2,
    ),
    case(
        "minkowski_segments",
        &[
            "minkowski",
            "tests/fixtures/segment_x.poly",
            "tests/fixtures/segment_y.poly",
        ],
        0,
    ),
    case(
        "minkowski_octahedron_parts",
        &[
            "minkowski",
            "tests/fixtures/nabla1_octahedron.poly",
            "tests/fixtures/nabla2_octahedron.poly",
        ],
        0,
    ),
    case(
        "minkowski_origin",
        &[
            "minkowski",
            "fixtures/pentagon_2d.poly",
            "tests/fixtures/origin_2d.poly",
        ],
        0,
    ),
    case(
        "minkowski_mismatch",
        &[
            "minkowski",
            "fixtures/cross_2d.poly",
            "fixtures/cube_3d.poly",
        ],
        2,
    ),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn nefdual() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nefdual"));
    cmd.current_dir(crate_dir());
    cmd
}

fn zero_timings(s: &str) -> String {
    s.split_inclusive('\n')
        .map(|line| match line.find("\"total_ms\":") {
            Some(at) => format!("{}\"total_ms\": 0\n", &line[..at]),
            None => line.to_string(),
        })
        .collect()
}

fn compare(path: &Path, actual: &str, bless: bool) -> Result<(), String> {
    if bless {
        if actual.is_empty() {
            let _ = std::fs::remove_file(path);
        } else {
            std::fs::write(path, actual).map_err(|e| e.to_string())?;
        }
        return Ok(());
    }
    let expected = std::fs::read_to_string(path).unwrap_or_default();
    if expected != actual {
        return Err(format!(
            "{} differs:\n--- expected\n{expected}--- actual\n{actual}",
            path.display()
        ));
    }
    Ok(())
}

pub fn run_case(c: &Case) -> Result<(), String> {
    let out = nefdual().args(c.args).output().map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    if code != c.code {
        return Err(format!(
            "{}: exit {code}, expected {}; stderr: {}",
            c.name,
            c.code,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let bless = std::env::var_os("NEFDUAL_BLESS").is_some();
    let dir = crate_dir().join("tests/golden");
    let stdout = zero_timings(&String::from_utf8_lossy(&out.stdout));
    compare(&dir.join(format!("{}.out", c.name)), &stdout, bless)?;
    compare(
        &dir.join(format!("{}.err", c.name)),
        &String::from_utf8_lossy(&out.stderr),
        bless,
    )
}
