//! Deterministic named fixtures: standard spheres and the torus, graph
//! fixtures, the glued two-complex `ak-Y` (an Euler space homeomorphic to an
//! algebraic set), its suspension `ak-X` (Euler but with obstructed
//! half-link products), and two small simplicial maps.

use crate::complex::{Complex, SimplicialComplex, Stratification};
use crate::error::{Error, Result};
use crate::maps::SimplicialMap;

/// A named fixture: a complex, optionally with a distinguished map or
/// stratification.
pub struct Fixture {
    pub name: &'static str,
    pub complex: Complex,
    pub map: Option<SimplicialMap>,
    pub stratification: Option<Stratification>,
}

pub const FIXTURE_NAMES: [&str; 11] = [
    "path",
    "circle",
    "sphere2",
    "sphere3",
    "torus",
    "figure-eight",
    "theta",
    "ak-Y",
    "ak-X",
    "fold-map",
    "double-cover",
];

fn plain(name: &'static str, complex: Complex) -> Fixture {
    Fixture {
        name,
        complex,
        map: None,
        stratification: None,
    }
}

fn simplex_boundary(verts: &[&str]) -> Complex {
    let lists: Vec<Vec<String>> = (0..verts.len())
        .map(|skip| {
            verts
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| v.to_string())
                .collect()
        })
        .collect();
    SimplicialComplex::build(&lists).expect("simplex boundary")
}

pub fn figure_eight() -> Complex {
    SimplicialComplex::build(&[
        vec!["w", "p1"],
        vec!["p1", "p2"],
        vec!["p2", "w"],
        vec!["w", "q1"],
        vec!["q1", "q2"],
        vec!["q2", "w"],
    ])
    .expect("figure eight")
}

/// The seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}`
/// modulo seven; a combinatorial two-manifold with Euler characteristic
/// zero.
fn torus() -> Complex {
    let v = |i: usize| format!("t{}", i % 7);
    let mut tris = Vec::new();
    for i in 0..7 {
        tris.push(vec![v(i), v(i + 1), v(i + 3)]);
        tris.push(vec![v(i), v(i + 2), v(i + 3)]);
    }
    SimplicialComplex::build(&tris).expect("torus")
}

/// The glued space: a suspended figure eight (apexes `g_ca`, `g_ab`), a
/// suspended three-point set (apexes `g_ab`, `g_bc`) and an arc from `g_bc`
/// to `g_ca`, sharing exactly the three glue vertices.
pub fn ak_y() -> Complex {
    let mut maximal: Vec<Vec<String>> = Vec::new();
    let fig8_edges = [
        ("w", "p1"),
        ("p1", "p2"),
        ("p2", "w"),
        ("w", "q1"),
        ("q1", "q2"),
        ("q2", "w"),
    ];
    for apex in ["g_ca", "g_ab"] {
        for (u, v) in fig8_edges {
            maximal.push(vec![u.to_string(), v.to_string(), apex.to_string()]);
        }
    }
    for apex in ["g_ab", "g_bc"] {
        for m in ["m1", "m2", "m3"] {
            maximal.push(vec![apex.to_string(), m.to_string()]);
        }
    }
    maximal.push(vec!["g_bc".to_string(), "g_ca".to_string()]);
    SimplicialComplex::build(&maximal).expect("glued two-complex")
}

fn fold_map() -> SimplicialMap {
    let domain = SimplicialComplex::build(&[vec!["-1", "0"], vec!["0", "1"]]).expect("fold domain");
    let codomain = SimplicialComplex::build(&[vec!["0", "1"]]).expect("fold codomain");
    SimplicialMap::new(&domain, &codomain, &[("-1", "1"), ("0", "0"), ("1", "1")])
        .expect("fold is simplicial")
}

fn double_cover() -> SimplicialMap {
    let hexagon = SimplicialComplex::build(&[
        vec!["c0", "c1"],
        vec!["c1", "c2"],
        vec!["c2", "c3"],
        vec!["c3", "c4"],
        vec!["c4", "c5"],
        vec!["c0", "c5"],
    ])
    .expect("hexagon");
    let triangle =
        SimplicialComplex::build(&[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]]).expect("cycle");
    SimplicialMap::new(
        &hexagon,
        &triangle,
        &[
            ("c0", "a"),
            ("c1", "b"),
            ("c2", "c"),
            ("c3", "a"),
            ("c4", "b"),
            ("c5", "c"),
        ],
    )
    .expect("double cover is simplicial")
}

/// Looks a fixture up by name (case-insensitive).
pub fn fixture(name: &str) -> Result<Fixture> {
    let key = name.to_ascii_lowercase();
    let fx = match key.as_str() {
        "path" => plain(
            "path",
            SimplicialComplex::build(&[vec!["a", "b"], vec!["b", "c"]]).expect("path"),
        ),
        "circle" => plain(
            "circle",
            SimplicialComplex::build(&[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]])
                .expect("circle"),
        ),
        "sphere2" => plain("sphere2", simplex_boundary(&["a", "b", "c", "d"])),
        "sphere3" => plain("sphere3", simplex_boundary(&["a", "b", "c", "d", "e"])),
        "torus" => plain("torus", torus()),
        "figure-eight" => plain("figure-eight", figure_eight()),
        "theta" => plain(
            "theta",
            SimplicialComplex::build(&[
                vec!["n", "m1"],
                vec!["n", "m2"],
                vec!["n", "m3"],
                vec!["s", "m1"],
                vec!["s", "m2"],
                vec!["s", "m3"],
            ])
            .expect("theta"),
        ),
        "ak-y" => plain("ak-Y", ak_y()),
        "ak-x" => {
            let x = SimplicialComplex::suspension(&ak_y());
            let strat = Stratification::single(&x);
            Fixture {
                name: "ak-X",
                complex: x,
                map: None,
                stratification: Some(strat),
            }
        }
        "fold-map" => {
            let map = fold_map();
            Fixture {
                name: "fold-map",
                complex: map.domain().clone(),
                map: Some(map),
                stratification: None,
            }
        }
        "double-cover" => {
            let map = double_cover();
            Fixture {
                name: "double-cover",
                complex: map.domain().clone(),
                map: Some(map),
                stratification: None,
            }
        }
        _ => {
            return Err(Error::UnknownFixture {
                name: name.to_string(),
            })
        }
    };
    Ok(fx)
}
