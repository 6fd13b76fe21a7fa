//! Topological operators on constructible functions: the link operator, the
//! duality involution, their halves on Euler functions, links along closed
//! subsets, and Euler characteristics of links of sets.
//!
//! The link operator has two independent evaluation routes. The fast path is
//! the star formula
//!
//! ```text
//! (L phi)(tau) = [dim tau odd] * 2 * phi(tau)
//!              + sum over rho > tau of (-1)^(dim rho - 1) * phi(rho)
//! ```
//!
//! The oracle path decomposes `phi` into closed-simplex indicators and uses
//! the fact that the link of a point of a closed simplex is a sphere (at an
//! interior point) or a disk (at a proper face). The two must agree; the
//! self-test surface checks that on random inputs.

use crate::cf::ConstructibleFunction;
use crate::complex::{Complex, SimplexSet};
use crate::error::{Error, Result};

fn checked_add(a: i64, b: i64, context: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::IntegerOverflow { context })
}

/// Star-formula link operator inside the closed subcomplex `within`. Values
/// of `phi` outside the subcomplex are ignored and the result is supported
/// inside it.
pub fn link_op_within(within: &SimplexSet, phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    let ambient = phi.ambient();
    let mut values = vec![0i64; ambient.len()];
    for tau in within.ids() {
        let mut acc = if ambient.simplex_dim(tau) % 2 == 1 {
            phi.get(tau)
                .checked_mul(2)
                .ok_or(Error::IntegerOverflow { context: "link operator" })?
        } else {
            0
        };
        for rho in ambient.cofaces_of(tau) {
            if !within.contains(*rho) {
                continue;
            }
            let term = if (ambient.simplex_dim(*rho) - 1) % 2 == 0 {
                phi.get(*rho)
            } else {
                phi.get(*rho)
                    .checked_neg()
                    .ok_or(Error::IntegerOverflow { context: "link operator" })?
            };
            acc = checked_add(acc, term, "link operator")?;
        }
        values[tau] = acc;
    }
    Ok(ConstructibleFunction::from_values(ambient, values))
}

/// The link operator on the whole complex.
pub fn link_op(phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    link_op_within(&phi.ambient().full_set(), phi)
}

/// Independent link evaluation through the closed-indicator presentation:
/// `L 1_{closure(sigma)}` is `1 + (-1)^(dim sigma - 1)` at `sigma`, `1` on
/// proper faces of `sigma`, and `0` elsewhere.
pub fn link_op_oracle(phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    let ambient = phi.ambient();
    let coeffs = phi.closed_presentation_coeffs()?;
    let mut values = vec![0i64; ambient.len()];
    for sigma in ambient.ids() {
        let c = coeffs[sigma];
        if c == 0 {
            continue;
        }
        let at_sigma = if ambient.simplex_dim(sigma) % 2 == 1 {
            2
        } else {
            0
        };
        values[sigma] = checked_add(
            values[sigma],
            c.checked_mul(at_sigma)
                .ok_or(Error::IntegerOverflow { context: "link oracle" })?,
            "link oracle",
        )?;
        for tau in ambient.faces_of(sigma) {
            values[*tau] = checked_add(values[*tau], c, "link oracle")?;
        }
    }
    Ok(ConstructibleFunction::from_values(ambient, values))
}

/// Duality inside a closed subcomplex: `phi - L phi` with the link taken in
/// the subcomplex.
pub fn dual_op_within(within: &SimplexSet, phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    phi.restrict(within).sub(&link_op_within(within, phi)?)
}

/// The duality involution `D phi = phi - L phi`.
pub fn dual_op(phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    phi.sub(&link_op(phi)?)
}

/// `Omega phi = phi + D phi = 2 phi - L phi`.
pub fn omega_op(phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    phi.add(&dual_op(phi)?)
}

/// Exact halving; fails with a witness simplex when a value is odd.
pub fn halve(psi: &ConstructibleFunction, what: &str) -> Result<ConstructibleFunction> {
    let ambient = psi.ambient();
    for id in ambient.ids() {
        if psi.get(id) % 2 != 0 {
            return Err(Error::NotEuler {
                function: what.to_string(),
                simplex: ambient.simplex_name(id),
                value: psi.get(id),
            });
        }
    }
    let values = ambient.ids().map(|id| psi.get(id) / 2).collect();
    Ok(ConstructibleFunction::from_values(ambient, values))
}

/// Half link; defined exactly on Euler functions.
pub fn half_link(phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    halve(&link_op(phi)?, "link")
}

/// Half of `Omega`; `half_link(phi) + half_omega(phi) = phi`.
pub fn half_omega(phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    halve(&omega_op(phi)?, "omega")
}

/// First simplex with an odd link value, if any.
pub fn euler_witness(phi: &ConstructibleFunction) -> Result<Option<(usize, i64)>> {
    let lam = link_op(phi)?;
    for id in phi.ambient().ids() {
        if lam.get(id) % 2 != 0 {
            return Ok(Some((id, lam.get(id))));
        }
    }
    Ok(None)
}

/// A function is Euler when its link is even everywhere.
pub fn is_euler(phi: &ConstructibleFunction) -> Result<bool> {
    Ok(euler_witness(phi)?.is_none())
}

/// Self-dual: `D phi = phi`, i.e. the link vanishes.
pub fn is_self_dual(phi: &ConstructibleFunction) -> Result<bool> {
    Ok(link_op(phi)?.is_zero())
}

/// Anti-self-dual: `D phi = -phi`, i.e. `Omega phi` vanishes.
pub fn is_anti_self_dual(phi: &ConstructibleFunction) -> Result<bool> {
    Ok(omega_op(phi)?.is_zero())
}

fn require_closed(set: &SimplexSet) -> Result<()> {
    for id in set.ids() {
        for f in set.ambient().faces_of(id) {
            if !set.contains(*f) {
                return Err(Error::SetNotClosed {
                    simplex: set.ambient().simplex_name(*f),
                });
            }
        }
    }
    Ok(())
}

/// The link of `phi` along a closed set `y`: the sum of the positive and
/// negative specializations of `phi` with respect to any nonnegative
/// equation of `y`. Both closed formulas are evaluated and must agree:
///
/// ```text
/// L_Y phi = phi|Y - D((D phi)|Y)
///         = L(phi|Y) - L((L phi)|Y) + (L phi)|Y
/// ```
///
/// where the restricted operators are taken in the subcomplex `y` and the
/// inner `L`/`D` in the ambient complex.
pub fn link_along(y: &SimplexSet, phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    require_closed(y)?;
    let lam = link_op(phi)?;
    let lam_on_y = lam.restrict(y);
    let via_links = link_op_within(y, &phi.restrict(y))?
        .sub(&link_op_within(y, &lam_on_y)?)?
        .add(&lam_on_y)?;
    let via_duals = phi
        .restrict(y)
        .sub(&dual_op_within(y, &dual_op(phi)?.restrict(y))?)?;
    if via_links != via_duals {
        return Err(Error::FormulaDisagreement {
            what: "the two closed formulas for the link along a set differ".to_string(),
        });
    }
    Ok(via_links)
}

/// The companion operator `Omega_Y phi = phi|Y + D((D phi)|Y)`, so that
/// `L_Y phi + Omega_Y phi = 2 phi|Y`.
pub fn omega_along(y: &SimplexSet, phi: &ConstructibleFunction) -> Result<ConstructibleFunction> {
    require_closed(y)?;
    phi.restrict(y)
        .add(&dual_op_within(y, &dual_op(phi)?.restrict(y))?)
}

/// Ordinary (homotopy) Euler characteristic of a locally closed union of
/// open simplices, computed as the Euler characteristic of the order complex
/// of its face poset. For a complex minus a closed subcomplex this is the
/// classical deformation retract onto the barycentric core.
fn homotopy_euler_char(set: &SimplexSet) -> i64 {
    let ambient = set.ambient();
    // chains_ending[sigma] = alternating count of chains with maximum sigma;
    // ids are ordered by dimension, so faces come first
    let mut chains_ending = vec![0i64; ambient.len()];
    let mut total = 0i64;
    for sigma in set.ids() {
        let mut g = 1i64;
        for tau in ambient.faces_of(sigma) {
            if set.contains(*tau) {
                g -= chains_ending[*tau];
            }
        }
        chains_ending[sigma] = g;
        total += g;
    }
    total
}

/// Euler characteristic of the link of `y` in a closed set `z`, evaluated by
/// two independent routes that must agree: the integral of the link operator
/// over the closure of `y`, and the additive formula
/// `chi(closure(y) /\ z) + chi(z - closure(y)) - chi(z)` with the middle term
/// the homotopy Euler characteristic of the complement.
pub fn chi_link_of_set(y: &SimplexSet, z: &SimplexSet) -> Result<i64> {
    require_closed(z)?;
    let ybar = y.closure();

    let one_z = ConstructibleFunction::indicator(z);
    let via_integral = link_op(&one_z)?.integral_over(&ybar)?;

    let via_additivity =
        ybar.intersection(z).euler_char() + homotopy_euler_char(&z.difference(&ybar)) - z.euler_char();

    if via_integral != via_additivity {
        return Err(Error::FormulaDisagreement {
            what: format!(
                "link Euler characteristic routes differ: integral {via_integral}, additivity {via_additivity}"
            ),
        });
    }
    Ok(via_integral)
}

/// Constant function 1 on the whole complex.
pub fn ones(ambient: &Complex) -> ConstructibleFunction {
    ConstructibleFunction::indicator(&ambient.full_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn path() -> Complex {
        SimplicialComplex::build(&[vec!["a", "b"], vec!["b", "c"]]).unwrap()
    }

    fn circle() -> Complex {
        SimplicialComplex::build(&[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]]).unwrap()
    }

    fn sphere2() -> Complex {
        SimplicialComplex::build(&[
            vec!["a", "b", "c"],
            vec!["a", "b", "d"],
            vec!["a", "c", "d"],
            vec!["b", "c", "d"],
        ])
        .unwrap()
    }

    fn values_by_name(k: &Complex, f: &ConstructibleFunction) -> Vec<(String, i64)> {
        k.ids().map(|id| (k.simplex_name(id), f.get(id))).collect()
    }

    #[test]
    fn link_of_constant_on_path() {
        let k = path();
        let lam = link_op(&ones(&k)).unwrap();
        let expect = [("{a}", 1), ("{b}", 2), ("{c}", 1), ("{a,b}", 2), ("{b,c}", 2)];
        for (name, v) in expect {
            let id = k.find(&name[1..name.len() - 1].split(',').collect::<Vec<_>>()).unwrap();
            assert_eq!(lam.get(id), v, "at {name}");
        }
        // oracle route agrees
        assert_eq!(lam, link_op_oracle(&ones(&k)).unwrap());
    }

    #[test]
    fn link_vanishes_on_the_sphere() {
        let s = sphere2();
        let lam = link_op(&ones(&s)).unwrap();
        assert!(lam.is_zero(), "{:?}", values_by_name(&s, &lam));
        assert!(is_self_dual(&ones(&s)).unwrap());
    }

    #[test]
    fn link_of_open_edge_indicator() {
        let k = path();
        let ab = k.find(&["a", "b"]).unwrap();
        let phi = ConstructibleFunction::indicator(&SimplexSet::from_ids(&k, [ab]));
        let lam = link_op(&phi).unwrap();
        assert_eq!(lam.get(k.find(&["a"]).unwrap()), 1);
        assert_eq!(lam.get(k.find(&["b"]).unwrap()), 1);
        assert_eq!(lam.get(ab), 2);
        assert_eq!(lam.get(k.find(&["c"]).unwrap()), 0);
        assert_eq!(lam, link_op_oracle(&phi).unwrap());
    }

    #[test]
    fn duality_small_cases() {
        // D of a closed edge indicator: -1 on the open edge
        let k = path();
        let ab = k.find(&["a", "b"]).unwrap();
        let closed_edge = SimplexSet::from_ids(&k, [ab]).closure();
        let d = dual_op(&ConstructibleFunction::indicator(&closed_edge)).unwrap();
        for id in k.ids() {
            let expect = if id == ab { -1 } else { 0 };
            assert_eq!(d.get(id), expect, "at {}", k.simplex_name(id));
        }

        // involution
        let phi = ConstructibleFunction::indicator(&k.full_set());
        assert_eq!(dual_op(&dual_op(&phi).unwrap()).unwrap(), phi);

        // fixed point on the sphere
        let s = sphere2();
        let one = ones(&s);
        assert_eq!(dual_op(&one).unwrap(), one);
    }

    #[test]
    fn integral_of_link_vanishes() {
        for k in [path(), circle(), sphere2()] {
            let phi = ones(&k);
            assert_eq!(link_op(&phi).unwrap().integral().unwrap(), 0);
        }
    }

    #[test]
    fn half_operators() {
        // on the circle the link of 1 is 2 everywhere
        let c = circle();
        let one = ones(&c);
        let hl = half_link(&one).unwrap();
        assert!(c.ids().all(|id| hl.get(id) == 1));
        assert!(is_euler(&one).unwrap());
        assert!(is_anti_self_dual(&one).unwrap());

        // idempotent on Euler inputs
        let hl2 = half_link(&link_op(&one).unwrap()).unwrap();
        assert_eq!(hl2, link_op(&hl).unwrap());
        assert_eq!(half_link(&hl).unwrap(), hl);

        // halving fails at the endpoint of a path
        let p = path();
        let err = half_link(&ones(&p)).unwrap_err();
        match err {
            Error::NotEuler { simplex, value, .. } => {
                assert!(simplex == "{a}" || simplex == "{c}");
                assert_eq!(value.rem_euclid(2), 1);
            }
            other => panic!("expected NotEuler, got {other:?}"),
        }
        assert!(!is_euler(&ones(&p)).unwrap());

        // decomposition identity on an Euler function
        let two = ones(&c).scale(2).unwrap();
        let sum = half_link(&two).unwrap().add(&half_omega(&two).unwrap()).unwrap();
        assert_eq!(sum, two);
    }

    #[test]
    fn link_along_point_in_path() {
        let k = path();
        let b = k.find(&["b"]).unwrap();
        let y = SimplexSet::from_ids(&k, [b]);
        let phi = ones(&k);
        let along = link_along(&y, &phi).unwrap();
        assert_eq!(along.get(b), 2);
        assert_eq!(along.support().count(), 1);

        let om = omega_along(&y, &phi).unwrap();
        assert_eq!(om.get(b), 0);

        // identity between the two companions
        let twice = phi.restrict(&y).scale(2).unwrap();
        assert_eq!(along.add(&om).unwrap(), twice);
    }

    #[test]
    fn link_along_whole_space_vanishes() {
        for k in [path(), circle(), sphere2()] {
            let phi = ones(&k);
            let along = link_along(&k.full_set(), &phi).unwrap();
            assert!(along.is_zero());
        }
    }

    #[test]
    fn link_along_disjoint_support() {
        let k = path();
        let a = k.find(&["a"]).unwrap();
        let c = k.find(&["c"]).unwrap();
        let y = SimplexSet::from_ids(&k, [a]);
        let phi = ConstructibleFunction::indicator(&SimplexSet::from_ids(&k, [c]));
        assert!(link_along(&y, &phi).unwrap().is_zero());
    }

    #[test]
    fn link_along_rejects_open_sets() {
        let k = path();
        let ab = k.find(&["a", "b"]).unwrap();
        let y = SimplexSet::from_ids(&k, [ab]);
        assert!(matches!(
            link_along(&y, &ones(&k)),
            Err(Error::SetNotClosed { .. })
        ));
    }

    #[test]
    fn link_along_closed_edge_in_path() {
        // checked by hand: zero on the open edge and at the far endpoint,
        // one at the shared vertex
        let k = path();
        let y = SimplexSet::from_ids(&k, [k.find(&["a", "b"]).unwrap()]).closure();
        let along = link_along(&y, &ones(&k)).unwrap();
        assert_eq!(along.get(k.find(&["a"]).unwrap()), 0);
        assert_eq!(along.get(k.find(&["b"]).unwrap()), 1);
        assert_eq!(along.get(k.find(&["a", "b"]).unwrap()), 0);
    }

    #[test]
    fn chi_of_links_of_sets() {
        // middle vertex of a path: two points
        let k = path();
        let y = SimplexSet::from_ids(&k, [k.find(&["b"]).unwrap()]);
        assert_eq!(chi_link_of_set(&y, &k.full_set()).unwrap(), 2);

        // closed edge in the sphere: a circle
        let s = sphere2();
        let y = SimplexSet::from_ids(&s, [s.find(&["a", "b"]).unwrap()]).closure();
        assert_eq!(chi_link_of_set(&y, &s.full_set()).unwrap(), 0);

        // disjoint: zero
        let y = SimplexSet::empty(&s);
        assert_eq!(chi_link_of_set(&y, &s.full_set()).unwrap(), 0);
    }

    #[test]
    fn geometric_link_consistency() {
        // chi(boundary(tau) * link(tau)) equals the link operator of the
        // constant one at tau
        for k in [path(), circle(), sphere2()] {
            let lam = link_op(&ones(&k)).unwrap();
            for tau in k.ids() {
                let joined = SimplicialComplex::join(&k.boundary_complex(tau), &k.link_complex(tau));
                assert_eq!(
                    joined.full_set().euler_char(),
                    lam.get(tau),
                    "at {} of {:?}",
                    k.simplex_name(tau),
                    k
                );
            }
        }
    }
}
