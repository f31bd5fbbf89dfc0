//! Bundled reflexive polytopes with sample nef-partitions.
//!
//! Partition specs use the file's vertex order, as on the command line.

use crate::io::{parse_partition_spec, parse_points};
use crate::point::{Point, Space};
use crate::polytope::Polytope;

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub partitions: &'static [&'static str],
}

macro_rules! entry {
    ($name:literal, [$($spec:literal),* $(,)?]) => {
        CorpusEntry {
            name: $name,
            text: include_str!(concat!("../fixtures/", $name, ".poly")),
            partitions: &[$($spec),*],
        }
    };
}

static ENTRIES: &[CorpusEntry] = &[
    entry!("segment_1d", ["0,1", "0;1"]),
    entry!("cross_2d", ["0,1,2,3", "0,2;1,3", "0,1;2,3", "0;1,2,3"]),
    entry!("square_2d", ["0,1,2,3"]),
    entry!("hexagon_2d", ["0,1,2,3,4,5", "2,3,5;0,1,4", "0,3;1,4;2,5"]),
    entry!("triangle_2d", ["0,1,2", "0;1,2"]),
    entry!("triangle_dual_2d", ["0,1,2"]),
    entry!("pentagon_2d", ["0,1,2,3,4", "3;0,4;1,2"]),
    entry!("quadrilateral_2d", ["0,1,2,3", "2,3;0,1"]),
    entry!(
        "octahedron_3d",
        ["0,1,2,3,4,5", "0;1,2,3,4,5", "0,1;2,3;4,5"]
    ),
    entry!("cube_3d", ["0,1,2,3,4,5,6,7"]),
    entry!("simplex_3d", ["0,1,2,3", "0;1;2,3"]),
    entry!("simplex_dual_3d", ["0,1,2,3"]),
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn get(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

impl CorpusEntry {
    /// Points in file order.
    pub fn points(&self) -> Vec<Point> {
        parse_points(self.text, Space::M).expect("bundled fixture parses")
    }

    pub fn polytope(&self) -> Polytope {
        Polytope::hull(&self.points()).expect("bundled fixture is nonempty")
    }

    pub fn dim(&self) -> usize {
        self.points()[0].dim()
    }

    /// Bundled partitions translated to canonical vertex indices.
    pub fn canonical_partitions(&self) -> Vec<Vec<Vec<usize>>> {
        let pts = self.points();
        let poly = self.polytope();
        self.partitions
            .iter()
            .map(|spec| {
                parse_partition_spec(spec, pts.len())
                    .expect("bundled spec parses")
                    .into_iter()
                    .map(|part| {
                        part.iter()
                            .map(|&i| {
                                poly.vertex_index(&pts[i])
                                    .expect("fixture rows are vertices")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}
