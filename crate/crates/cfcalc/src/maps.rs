//! Simplicial maps and the functorial operations on constructible
//! functions: pullback along the map and proper pushforward (fiberwise Euler
//! integration). On finite complexes every simplicial map is proper.

use std::collections::HashMap;

use crate::cf::ConstructibleFunction;
use crate::complex::{same_ambient, Complex};
use crate::error::{Error, Result};

/// A vertex map inducing a simplicial map: the image vertex set of every
/// domain simplex is a simplex of the codomain.
#[derive(Clone)]
pub struct SimplicialMap {
    domain: Complex,
    codomain: Complex,
    vertex_map: Vec<u32>,
    simplex_image: Vec<usize>,
}

impl std::fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<String> = self
            .domain
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                format!(
                    "{v}->{}",
                    self.codomain.vertices()[self.vertex_map[i] as usize]
                )
            })
            .collect();
        write!(f, "SimplicialMap[{}]", pairs.join(" "))
    }
}

impl SimplicialMap {
    /// Builds a map from vertex-name assignments. Every domain vertex must be
    /// assigned, targets must exist in the codomain, and the simplicial
    /// condition must hold.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(
        domain: &Complex,
        codomain: &Complex,
        assignments: &[(S, T)],
    ) -> Result<Self> {
        let mut by_name: HashMap<&str, &str> = HashMap::new();
        for (from, to) in assignments {
            if by_name.insert(from.as_ref(), to.as_ref()).is_some() {
                return Err(Error::ValidationError {
                    reason: format!("vertex `{}` is assigned twice", from.as_ref()),
                });
            }
        }
        let mut vertex_map = Vec::with_capacity(domain.vertices().len());
        for v in domain.vertices() {
            let target = by_name.get(v.as_str()).ok_or_else(|| Error::ValidationError {
                reason: format!("vertex `{v}` has no image"),
            })?;
            let t = codomain
                .vertices()
                .binary_search_by(|w| w.as_str().cmp(target))
                .map_err(|_| Error::ValidationError {
                    reason: format!("image vertex `{target}` is not in the codomain"),
                })?;
            vertex_map.push(t as u32);
        }
        Self::from_vertex_indices(domain, codomain, vertex_map)
    }

    fn from_vertex_indices(
        domain: &Complex,
        codomain: &Complex,
        vertex_map: Vec<u32>,
    ) -> Result<Self> {
        let mut simplex_image = Vec::with_capacity(domain.len());
        for id in domain.ids() {
            let mut image: Vec<&str> = domain
                .simplex_vertices(id)
                .iter()
                .map(|v| {
                    let i = domain
                        .vertices()
                        .binary_search_by(|w| w.as_str().cmp(v))
                        .expect("vertex of own complex");
                    codomain.vertices()[vertex_map[i] as usize].as_str()
                })
                .collect();
            image.sort_unstable();
            image.dedup();
            let target = codomain.find(&image).ok_or_else(|| Error::ValidationError {
                reason: format!(
                    "image of {} is not a simplex of the codomain",
                    domain.simplex_name(id)
                ),
            })?;
            simplex_image.push(target);
        }
        Ok(SimplicialMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            vertex_map,
            simplex_image,
        })
    }

    pub fn identity(k: &Complex) -> Self {
        Self::from_vertex_indices(k, k, (0..k.vertices().len() as u32).collect())
            .expect("identity is simplicial")
    }

    /// The constant map onto a codomain vertex.
    pub fn constant(domain: &Complex, codomain: &Complex, vertex: &str) -> Result<Self> {
        let t = codomain
            .vertices()
            .binary_search_by(|w| w.as_str().cmp(vertex))
            .map_err(|_| Error::ValidationError {
                reason: format!("`{vertex}` is not a codomain vertex"),
            })? as u32;
        Self::from_vertex_indices(domain, codomain, vec![t; domain.vertices().len()])
    }

    pub fn domain(&self) -> &Complex {
        &self.domain
    }

    pub fn codomain(&self) -> &Complex {
        &self.codomain
    }

    /// Image simplex id of a domain simplex id.
    pub fn image_simplex(&self, id: usize) -> usize {
        self.simplex_image[id]
    }

    /// Composition `g after f`; the codomain of `f` must be the domain of
    /// `g` as a canonical complex.
    pub fn compose(g: &SimplicialMap, f: &SimplicialMap) -> Result<SimplicialMap> {
        if !same_ambient(&f.codomain, &g.domain) {
            return Err(Error::AmbientMismatch);
        }
        let vertex_map = f
            .vertex_map
            .iter()
            .map(|v| g.vertex_map[*v as usize])
            .collect();
        Self::from_vertex_indices(&f.domain, &g.codomain, vertex_map)
    }

    /// Pullback: `(f* psi)(x) = psi(f(x))`, evaluated per open simplex.
    pub fn pullback(&self, psi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
        if !same_ambient(psi.ambient(), &self.codomain) {
            return Err(Error::AmbientMismatch);
        }
        let values = self
            .domain
            .ids()
            .map(|id| psi.get(self.simplex_image[id]))
            .collect();
        Ok(ConstructibleFunction::from_values(&self.domain, values))
    }

    /// Pushforward: fiberwise Euler integral. An open simplex mapping onto
    /// `tau` meets the fiber over an interior point of `tau` in an open cell
    /// of the dimension difference, so
    /// `(f_* phi)(tau) = sum over rho with image tau of
    /// (-1)^(dim rho - dim tau) phi(rho)`.
    pub fn pushforward(&self, phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
        if !same_ambient(phi.ambient(), &self.domain) {
            return Err(Error::AmbientMismatch);
        }
        let mut values = vec![0i64; self.codomain.len()];
        for rho in self.domain.ids() {
            let tau = self.simplex_image[rho];
            let diff = self.domain.simplex_dim(rho) - self.codomain.simplex_dim(tau);
            let term = if diff % 2 == 0 {
                phi.get(rho)
            } else {
                phi.get(rho)
                    .checked_neg()
                    .ok_or(Error::IntegerOverflow { context: "pushforward" })?
            };
            values[tau] = values[tau]
                .checked_add(term)
                .ok_or(Error::IntegerOverflow { context: "pushforward" })?;
        }
        Ok(ConstructibleFunction::from_values(&self.codomain, values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{SimplexSet, SimplicialComplex};
    use crate::ops::{dual_op, is_anti_self_dual, is_euler, is_self_dual, link_op, ones};

    fn fold() -> SimplicialMap {
        let domain = SimplicialComplex::build(&[vec!["-1", "0"], vec!["0", "1"]]).unwrap();
        let codomain = SimplicialComplex::build(&[vec!["0", "1"]]).unwrap();
        SimplicialMap::new(&domain, &codomain, &[("-1", "1"), ("0", "0"), ("1", "1")]).unwrap()
    }

    #[test]
    fn pullbacks() {
        let k = SimplicialComplex::build(&[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        let psi = ConstructibleFunction::indicator(&k.skeleton(0));

        let id = SimplicialMap::identity(&k);
        assert_eq!(id.pullback(&psi).unwrap(), psi);

        let pt = SimplicialComplex::build(&[vec!["p"]]).unwrap();
        let c = SimplicialMap::constant(&k, &pt, "p").unwrap();
        let pulled = c.pullback(&ones(&pt)).unwrap();
        assert!(k.ids().all(|i| pulled.get(i) == 1));

        // fold pullback of the indicator of vertex 0
        let f = fold();
        let zero_set = SimplexSet::from_ids(f.codomain(), [f.codomain().find(&["0"]).unwrap()]);
        let pulled = f.pullback(&ConstructibleFunction::indicator(&zero_set)).unwrap();
        let d = f.domain().clone();
        for id in d.ids() {
            let expect = if d.simplex_name(id) == "{0}" { 1 } else { 0 };
            assert_eq!(pulled.get(id), expect);
        }
    }

    #[test]
    fn fold_pushforward_matches_signed_counts() {
        let f = fold();
        let pushed = f.pushforward(&ones(f.domain())).unwrap();
        let c = f.codomain().clone();
        assert_eq!(pushed.get(c.find(&["0"]).unwrap()), 1);
        assert_eq!(pushed.get(c.find(&["1"]).unwrap()), 2);
        assert_eq!(pushed.get(c.find(&["0", "1"]).unwrap()), 2);
    }

    #[test]
    fn pushforward_to_point_is_the_integral() {
        let k = SimplicialComplex::build(&[
            vec!["a", "b", "c"],
            vec!["a", "b", "d"],
            vec!["a", "c", "d"],
            vec!["b", "c", "d"],
        ])
        .unwrap();
        let pt = SimplicialComplex::build(&[vec!["p"]]).unwrap();
        let c = SimplicialMap::constant(&k, &pt, "p").unwrap();
        let phi = ones(&k);
        let pushed = c.pushforward(&phi).unwrap();
        assert_eq!(pushed.get(0), phi.integral().unwrap());
    }

    #[test]
    fn double_cover_pushforward_is_two() {
        let hex = SimplicialComplex::build(&[
            vec!["c0", "c1"],
            vec!["c1", "c2"],
            vec!["c2", "c3"],
            vec!["c3", "c4"],
            vec!["c4", "c5"],
            vec!["c0", "c5"],
        ])
        .unwrap();
        let tri = SimplicialComplex::build(&[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]])
            .unwrap();
        let cover = SimplicialMap::new(
            &hex,
            &tri,
            &[
                ("c0", "a"),
                ("c1", "b"),
                ("c2", "c"),
                ("c3", "a"),
                ("c4", "b"),
                ("c5", "c"),
            ],
        )
        .unwrap();
        let pushed = cover.pushforward(&ones(&hex)).unwrap();
        assert!(tri.ids().all(|id| pushed.get(id) == 2));
    }

    #[test]
    fn functorial_identities_on_the_fold() {
        let f = fold();
        let phi = ones(f.domain());

        let lhs = f.pushforward(&dual_op(&phi).unwrap()).unwrap();
        let rhs = dual_op(&f.pushforward(&phi).unwrap()).unwrap();
        assert_eq!(lhs, rhs);

        let lhs = f.pushforward(&link_op(&phi).unwrap()).unwrap();
        let rhs = link_op(&f.pushforward(&phi).unwrap()).unwrap();
        assert_eq!(lhs, rhs);

        assert_eq!(
            f.pushforward(&phi).unwrap().integral().unwrap(),
            phi.integral().unwrap()
        );
    }

    #[test]
    fn pushforward_preserves_duality_classes() {
        // the hexagon cover of the triangle: anti-self-dual upstairs stays so
        let hex = SimplicialComplex::build(&[
            vec!["c0", "c1"],
            vec!["c1", "c2"],
            vec!["c0", "c2"],
        ])
        .unwrap();
        let phi = ones(&hex);
        assert!(is_anti_self_dual(&phi).unwrap());
        let pt = SimplicialComplex::build(&[vec!["p"]]).unwrap();
        let c = SimplicialMap::constant(&hex, &pt, "p").unwrap();
        let pushed = c.pushforward(&phi).unwrap();
        assert!(is_euler(&pushed).unwrap());
        assert!(is_anti_self_dual(&pushed).unwrap());
        assert!(is_self_dual(&c.pushforward(&link_op(&phi).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn composition_requires_matching_middles() {
        let k = SimplicialComplex::build(&[vec!["a", "b"]]).unwrap();
        let other = SimplicialComplex::build(&[vec!["x", "y"]]).unwrap();
        let f = SimplicialMap::identity(&k);
        let g = SimplicialMap::identity(&other);
        assert!(matches!(
            SimplicialMap::compose(&g, &f),
            Err(Error::AmbientMismatch)
        ));

        // structurally equal complexes compose even as separate allocations
        let k2 = SimplicialComplex::build(&[vec!["a", "b"]]).unwrap();
        let g = SimplicialMap::identity(&k2);
        let h = SimplicialMap::compose(&g, &f).unwrap();
        assert_eq!(h.image_simplex(0), 0);
    }

    #[test]
    fn rejects_non_simplicial_vertex_maps() {
        let square = SimplicialComplex::build(&[
            vec!["a", "b"],
            vec!["b", "c"],
            vec!["c", "d"],
            vec!["a", "d"],
        ])
        .unwrap();
        let tri = SimplicialComplex::build(&[vec!["x", "y"], vec!["y", "z"], vec!["x", "z"]])
            .unwrap();
        // sending opposite corners to the same place is fine; collapsing an
        // edge to a missing diagonal is not simplicial
        let bad = SimplicialMap::new(
            &square,
            &tri,
            &[("a", "x"), ("b", "x"), ("c", "y"), ("d", "z")],
        );
        // edge {a,b} maps to {x}, fine; edge {c,d} maps to {y,z}, fine;
        // this one is actually simplicial
        assert!(bad.is_ok());

        let really_bad = SimplicialMap::new(
            &square,
            &SimplicialComplex::build(&[vec!["x", "y"], vec!["z"]]).unwrap(),
            &[("a", "x"), ("b", "y"), ("c", "z"), ("d", "x")],
        );
        // edge {b,c} would map to {y,z}, not a simplex
        assert!(matches!(really_bad, Err(Error::ValidationError { .. })));
    }
}
