//! Decision procedures for low-dimensional complexes: Euler and
//! completely-Euler tests, the epsilon invariants and characteristic sets of
//! the one-skeleton, the stratified variant, iterated-link two-adic
//! divisibility diagnostics, and divisibility-ideal closure reports.
//!
//! Throughout, `phi` denotes `half_omega` of the constant one function; its
//! square and cube (which share its parity) feed the half-link products that
//! detect the obstructions.

use crate::cf::ConstructibleFunction;
use crate::complex::{same_ambient, Complex, SimplexSet, Stratification};
use crate::error::{Error, Result};
use crate::ops;

/// A failing item of a check: which function, where, and the offending odd
/// (or otherwise indivisible) value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub function: String,
    pub simplex: String,
    pub value: i64,
}

/// Structured verdict for the Euler-type checks. The verdict is true exactly
/// when there are no failing witnesses.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub verdict: bool,
    pub failing_witnesses: Vec<Witness>,
    pub characteristic_sets: Vec<(String, SimplexSet)>,
}

impl CheckReport {
    fn from_witnesses(
        failing_witnesses: Vec<Witness>,
        characteristic_sets: Vec<(String, SimplexSet)>,
    ) -> Self {
        CheckReport {
            verdict: failing_witnesses.is_empty(),
            failing_witnesses,
            characteristic_sets,
        }
    }
}

fn parity(v: i64) -> u8 {
    (v & 1) as u8
}

/// Records a witness when the function is not Euler; returns whether it is.
fn euler_check(
    phi: &ConstructibleFunction,
    name: &str,
    witnesses: &mut Vec<Witness>,
) -> Result<bool> {
    match ops::euler_witness(phi)? {
        None => Ok(true),
        Some((id, v)) => {
            witnesses.push(Witness {
                function: name.to_string(),
                simplex: phi.ambient().simplex_name(id),
                value: v,
            });
            Ok(false)
        }
    }
}

fn require_dim_at_most(x: &Complex, max: usize) -> Result<()> {
    if let Some(d) = x.dim() {
        if d > max {
            return Err(Error::DimensionTooHigh { dim: d, max });
        }
    }
    Ok(())
}

fn require_euler_space(x: &Complex) -> Result<ConstructibleFunction> {
    let one = ops::ones(x);
    if let Some((id, v)) = ops::euler_witness(&one)? {
        return Err(Error::NotEuler {
            function: "1_X".to_string(),
            simplex: x.simplex_name(id),
            value: v,
        });
    }
    Ok(one)
}

/// The boundary-type set `C0` (one-skeleton plus the two-simplices where
/// `half_omega` of the constant one is odd, equivalently where the link of
/// the two-stratum in the space has Euler characteristic divisible by four)
/// and its complement-in-the-two-skeleton companion `C1`. Both are closed.
pub fn c0_c1(x: &Complex) -> Result<(SimplexSet, SimplexSet)> {
    require_dim_at_most(x, 3)?;
    let one = require_euler_space(x)?;
    let phi = ops::half_omega(&one)?;
    let mut c0 = x.skeleton(1);
    let mut c1 = x.skeleton(1);
    let two_simplices: Vec<usize> = x.ids().filter(|id| x.simplex_dim(*id) == 2).collect();
    for id in two_simplices {
        if parity(phi.get(id)) == 1 {
            c0 = c0.union(&SimplexSet::from_ids(x, [id]));
        } else {
            c1 = c1.union(&SimplexSet::from_ids(x, [id]));
        }
    }
    if !c0.is_closed() || !c1.is_closed() {
        return Err(Error::FormulaDisagreement {
            what: "boundary-type sets failed the closure check".to_string(),
        });
    }
    Ok((c0, c1))
}

/// Per-simplex epsilon data on the one-skeleton.
#[derive(Clone, Debug)]
pub struct EpsilonEntry {
    pub simplex: usize,
    pub eps: [u8; 3],
    pub delta: [u8; 3],
    pub eps3: Option<u8>,
}

/// The epsilon invariants of the one-skeleton, with geometric cross-checks
/// and, when a stratification is supplied, the third invariant from links
/// along one-dimensional strata.
#[derive(Clone, Debug)]
pub struct EpsilonProfile {
    pub entries: Vec<EpsilonEntry>,
    pub warnings: Vec<String>,
    pub cross_check_failures: Vec<Witness>,
    /// Whether `eps3 = eps2 + half_omega(1_{X^2})` held on every edge with a
    /// third invariant (the closed form from the boundary-set lemma).
    pub eps3_matches_omega_form: Option<bool>,
    /// Whether `eps3 = eps2 + half_link(1_{X^2})` held on every such edge.
    pub eps3_matches_link_form: Option<bool>,
}

impl EpsilonProfile {
    pub fn entry_for(&self, id: usize) -> Option<&EpsilonEntry> {
        self.entries.iter().find(|e| e.simplex == id)
    }
}

fn check_skeleta_euler(strat: &Stratification) -> Result<()> {
    let x = strat.ambient();
    let max = strat.strata().iter().map(|s| s.dim).max().unwrap_or(0);
    for k in 0..=max {
        let ind = ConstructibleFunction::indicator(&strat.skeleton(k));
        if let Some((id, v)) = ops::euler_witness(&ind)? {
            return Err(Error::SkeletonNotEuler {
                level: k,
                simplex: x.simplex_name(id),
                value: v,
            });
        }
    }
    Ok(())
}

pub fn epsilon_profile(
    x: &Complex,
    stratification: Option<&Stratification>,
) -> Result<EpsilonProfile> {
    require_dim_at_most(x, 3)?;
    let one = require_euler_space(x)?;
    if let Some(s) = stratification {
        if !same_ambient(s.ambient(), x) {
            return Err(Error::AmbientMismatch);
        }
        check_skeleta_euler(s)?;
    }

    let phi = ops::half_omega(&one)?;
    let phi2 = phi.mul(&phi)?;
    let phi3 = phi2.mul(&phi)?;
    let hl2 = ops::half_link(&phi2)?;
    let hl3 = ops::half_link(&phi3)?;
    // independently halved sum; the linear relations tie it to hl2 + hl3
    let hl_sum = ops::half_link(&phi2.add(&phi3)?)?;

    let (c0, c1) = c0_c1(x)?;
    let one_c0 = ConstructibleFunction::indicator(&c0);
    let link_along_c0 = ops::link_along(&c0, &one)?;

    let mut entries = Vec::new();
    let mut cross_check_failures = Vec::new();
    for id in x.skeleton(1).ids() {
        let eps = [
            parity(hl_sum.get(id)),
            parity(hl3.get(id)),
            parity(phi.get(id) + hl2.get(id)),
        ];
        let delta = [parity(phi.get(id)), parity(hl2.get(id)), parity(hl3.get(id))];
        entries.push(EpsilonEntry {
            simplex: id,
            eps,
            delta,
            eps3: None,
        });

        if x.simplex_dim(id) != 1 {
            continue;
        }
        // geometric routes along this single edge
        let edge_closure = SimplexSet::from_ids(x, [id]).closure();
        let v2 = ops::link_along(&edge_closure, &one_c0)?.get(id);
        if v2 % 2 != 0 {
            return Err(Error::HalfNotIntegral {
                context: "link along an edge of the boundary-type set".to_string(),
                simplex: x.simplex_name(id),
                value: v2,
                divisor: 2,
            });
        }
        let geometric_eps2 = parity(v2 / 2);
        if geometric_eps2 != eps[2] {
            cross_check_failures.push(Witness {
                function: "eps2 geometric route".to_string(),
                simplex: x.simplex_name(id),
                value: v2,
            });
        }
        let v0 = ops::link_along(&edge_closure, &link_along_c0)?.get(id);
        if v0 % 4 != 0 {
            return Err(Error::HalfNotIntegral {
                context: "iterated link along an edge and the boundary-type set".to_string(),
                simplex: x.simplex_name(id),
                value: v0,
                divisor: 4,
            });
        }
        let geometric_eps0 = parity(v0 / 4);
        if geometric_eps0 != eps[0] {
            cross_check_failures.push(Witness {
                function: "eps0 geometric route".to_string(),
                simplex: x.simplex_name(id),
                value: v0,
            });
        }
    }

    let mut warnings = Vec::new();
    let mut eps3_matches_omega_form = None;
    let mut eps3_matches_link_form = None;
    if let Some(strat) = stratification {
        // third invariant from the link along each one-dimensional stratum
        let one_c1 = ConstructibleFunction::indicator(&c1);
        let sk2 = ConstructibleFunction::indicator(&strat.skeleton(2));
        let half_omega_sk2 = ops::half_omega(&sk2)?;
        let half_link_sk2 = ops::half_link(&sk2)?;
        let mut omega_form_ok = true;
        let mut link_form_ok = true;
        let mut any_eps3 = false;
        for stratum in strat.strata_of_dim(1) {
            let closure = SimplexSet::from_ids(x, stratum.members.iter().copied()).closure();
            let psi = ops::link_along(&closure, &one_c1)?;
            let mut tuples = Vec::new();
            for id in stratum.members.iter().copied() {
                if x.simplex_dim(id) != 1 {
                    continue;
                }
                let v = psi.get(id);
                if v % 2 != 0 {
                    return Err(Error::HalfNotIntegral {
                        context: format!("link along stratum `{}`", stratum.label),
                        simplex: x.simplex_name(id),
                        value: v,
                        divisor: 2,
                    });
                }
                let e3 = parity(v / 2);
                any_eps3 = true;
                let entry = entries
                    .iter_mut()
                    .find(|e| e.simplex == id)
                    .expect("edges of the one-skeleton are profiled");
                entry.eps3 = Some(e3);
                tuples.push((entry.eps, e3));
                let eps2 = entry.eps[2];
                if (eps2 + parity(half_omega_sk2.get(id))) % 2 != e3 {
                    omega_form_ok = false;
                }
                if (eps2 + parity(half_link_sk2.get(id))) % 2 != e3 {
                    link_form_ok = false;
                }
            }
            tuples.dedup();
            if tuples.len() > 1 {
                warnings.push(format!(
                    "epsilon invariants are not constant on stratum `{}`",
                    stratum.label
                ));
            }
        }
        if any_eps3 {
            eps3_matches_omega_form = Some(omega_form_ok);
            eps3_matches_link_form = Some(link_form_ok);
        }
        // the boundary-type split should be constant on declared two-strata
        for stratum in strat.strata_of_dim(2) {
            let mut parities: Vec<u8> = stratum
                .members
                .iter()
                .filter(|id| x.simplex_dim(**id) == 2)
                .map(|id| parity(phi.get(*id)))
                .collect();
            parities.dedup();
            if parities.len() > 1 {
                warnings.push(format!(
                    "boundary-type membership is not constant on stratum `{}`",
                    stratum.label
                ));
            }
        }
    }

    Ok(EpsilonProfile {
        entries,
        warnings,
        cross_check_failures,
        eps3_matches_omega_form,
        eps3_matches_link_form,
    })
}

/// The named obstruction sets of the one-skeleton: the eight delta-pattern
/// sets, the eight epsilon-pattern sets with the zero-skeleton adjoined, and
/// the four distinguished Z-sets among them.
#[derive(Clone, Debug)]
pub struct CharacteristicSets {
    pub x_delta: Vec<(String, SimplexSet)>,
    pub e_sets: Vec<(String, SimplexSet)>,
    pub z_sets: Vec<(String, SimplexSet)>,
}

fn bits(n: u8) -> [u8; 3] {
    [(n >> 2) & 1, (n >> 1) & 1, n & 1]
}

pub fn characteristic_sets(x: &Complex) -> Result<CharacteristicSets> {
    let profile = epsilon_profile(x, None)?;
    let x0 = x.skeleton(0);

    let mut x_delta = Vec::new();
    let mut e_sets = Vec::new();
    for n in 0..8u8 {
        let pattern = bits(n);
        let delta_ids = profile
            .entries
            .iter()
            .filter(|e| e.delta == pattern)
            .map(|e| e.simplex);
        x_delta.push((
            format!("X_{}{}{}", pattern[0], pattern[1], pattern[2]),
            SimplexSet::from_ids(x, delta_ids),
        ));
        let eps_edges = profile
            .entries
            .iter()
            .filter(|e| e.eps == pattern && x.simplex_dim(e.simplex) == 1)
            .map(|e| e.simplex);
        e_sets.push((
            format!("E_{}{}{}", pattern[0], pattern[1], pattern[2]),
            SimplexSet::from_ids(x, eps_edges).union(&x0),
        ));
    }

    // Z0..Z3 are the epsilon patterns (1,1,1), (0,1,0), (1,0,0), (1,1,0),
    // equivalently the delta patterns 101, 111, 110, 001.
    let z_patterns = [[1, 1, 1], [0, 1, 0], [1, 0, 0], [1, 1, 0]];
    let z_sets = z_patterns
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let set = e_sets
                .iter()
                .find(|(name, _)| name == &format!("E_{}{}{}", p[0], p[1], p[2]))
                .expect("all eight epsilon sets present")
                .1
                .clone();
            (format!("Z{i}"), set)
        })
        .collect();

    Ok(CharacteristicSets {
        x_delta,
        e_sets,
        z_sets,
    })
}

/// A set is Euler when every point link of its closure has even Euler
/// characteristic. The closure may add vertices only.
pub fn is_euler_set(s: &SimplexSet) -> Result<bool> {
    let closure = s.closure();
    for id in closure.difference(s).ids() {
        if s.ambient().simplex_dim(id) >= 1 {
            return Err(Error::SetNotClosable {
                simplex: s.ambient().simplex_name(id),
            });
        }
    }
    ops::is_euler(&ConstructibleFunction::indicator(&closure))
}

fn product_of(factors: &[(&str, &ConstructibleFunction)]) -> Result<(String, ConstructibleFunction)> {
    let mut iter = factors.iter();
    let (first_name, first) = iter.next().expect("nonempty product");
    let mut name = first_name.to_string();
    let mut value = (*first).clone();
    for (n, f) in iter {
        name.push('*');
        name.push_str(n);
        value = value.mul(f)?;
    }
    Ok((name, value))
}

/// Completely-Euler test for a function with support of dimension at most
/// two: the function must be Euler and the eleven products of it with its
/// half-link powers (at least two factors, at least one half-link factor)
/// must all be Euler. In dimension at most one, Euler alone decides.
pub fn completely_euler_dim2(phi: &ConstructibleFunction) -> Result<CheckReport> {
    let supp_dim = phi.support().dimension();
    if let Some(d) = supp_dim {
        if d > 2 {
            return Err(Error::DimensionTooHigh { dim: d, max: 2 });
        }
    }
    let mut witnesses = Vec::new();
    let euler = euler_check(phi, "phi", &mut witnesses)?;
    if supp_dim.unwrap_or(0) <= 1 || !euler {
        return Ok(CheckReport::from_witnesses(witnesses, Vec::new()));
    }

    let phi2 = phi.mul(phi)?;
    let phi3 = phi2.mul(phi)?;
    let hl1 = ops::half_link(phi)?;
    let hl2 = ops::half_link(&phi2)?;
    let hl3 = ops::half_link(&phi3)?;
    let factors: [(&str, &ConstructibleFunction); 4] = [
        ("phi", phi),
        ("hlink(phi)", &hl1),
        ("hlink(phi^2)", &hl2),
        ("hlink(phi^3)", &hl3),
    ];
    for mask in 1u8..16 {
        let chosen: Vec<_> = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, f)| *f)
            .collect();
        let half_link_factors = chosen.len() - usize::from(mask & 1 != 0);
        if half_link_factors == 0 || chosen.len() < 2 {
            continue;
        }
        let (name, product) = product_of(&chosen)?;
        euler_check(&product, &name, &mut witnesses)?;
    }
    Ok(CheckReport::from_witnesses(witnesses, Vec::new()))
}

/// Completely-Euler test for the constant one on a complex of dimension at
/// most three, via the four half-link products of `phi = half_omega(1_X)`,
/// with the equivalent characteristic-set form computed in parallel and
/// required to agree. In dimension at most two this reduces to the Euler
/// test.
pub fn completely_euler_dim3(x: &Complex) -> Result<CheckReport> {
    require_dim_at_most(x, 3)?;
    let one = ops::ones(x);
    let mut witnesses = Vec::new();
    let euler = euler_check(&one, "1_X", &mut witnesses)?;
    if x.dim().unwrap_or(0) <= 2 || !euler {
        return Ok(CheckReport::from_witnesses(witnesses, Vec::new()));
    }

    let phi = ops::half_omega(&one)?;
    let phi2 = phi.mul(&phi)?;
    let phi3 = phi2.mul(&phi)?;
    let hl2 = ops::half_link(&phi2)?;
    let hl3 = ops::half_link(&phi3)?;
    let products: [&[(&str, &ConstructibleFunction)]; 4] = [
        &[("phi", &phi), ("hlink(phi^2)", &hl2)],
        &[("phi", &phi), ("hlink(phi^3)", &hl3)],
        &[("hlink(phi^2)", &hl2), ("hlink(phi^3)", &hl3)],
        &[("phi", &phi), ("hlink(phi^2)", &hl2), ("hlink(phi^3)", &hl3)],
    ];
    for factors in products {
        let (name, product) = product_of(factors)?;
        euler_check(&product, &name, &mut witnesses)?;
    }
    let product_verdict = witnesses.is_empty();

    // set form: the four delta-pattern subsets of the one-skeleton must be
    // Euler once the zero-skeleton is adjoined
    let sets = characteristic_sets(x)?;
    let x0 = x.skeleton(0);
    let mut set_verdict = true;
    let mut named_sets = Vec::new();
    for pattern in ["X_111", "X_101", "X_011", "X_110"] {
        let (name, set) = sets
            .x_delta
            .iter()
            .find(|(n, _)| n == pattern)
            .expect("all delta sets present");
        let closed_up = set.union(&x0);
        if !is_euler_set(&closed_up)? {
            set_verdict = false;
            let w = ops::euler_witness(&ConstructibleFunction::indicator(&closed_up.closure()))?
                .expect("non-Euler set has a witness");
            witnesses.push(Witness {
                function: format!("set {name} + X^0"),
                simplex: x.simplex_name(w.0),
                value: w.1,
            });
        }
        named_sets.push((name.clone(), closed_up));
    }
    if product_verdict != set_verdict {
        return Err(Error::FormulaDisagreement {
            what: format!(
                "product form ({product_verdict}) and set form ({set_verdict}) of the completely-Euler test differ"
            ),
        });
    }
    Ok(CheckReport {
        verdict: product_verdict,
        failing_witnesses: witnesses,
        characteristic_sets: named_sets,
    })
}

/// Stratified completely-Euler test: the twelve functions built from
/// `phi = half_omega(1_X)`, the half-links of its powers, the half-link of
/// the stratification two-skeleton indicator, and the one-skeleton
/// indicator, must all be Euler. The equivalent twelve characteristic sets
/// are computed in parallel and the verdicts must agree. All stratification
/// skeleta must be Euler up front.
pub fn stratified_check(x: &Complex, strat: &Stratification) -> Result<CheckReport> {
    require_dim_at_most(x, 3)?;
    if !same_ambient(strat.ambient(), x) {
        return Err(Error::AmbientMismatch);
    }
    check_skeleta_euler(strat)?;
    let one = require_euler_space(x)?;

    let phi = ops::half_omega(&one)?;
    let phi2 = phi.mul(&phi)?;
    let phi3 = phi2.mul(&phi)?;
    let hl2 = ops::half_link(&phi2)?;
    let hl3 = ops::half_link(&phi3)?;
    let sk1_ind = ConstructibleFunction::indicator(&strat.skeleton(1));
    let sk2_ind = ConstructibleFunction::indicator(&strat.skeleton(2));
    let hl_sk2 = ops::half_link(&sk2_ind)?;

    let mut witnesses = Vec::new();
    let (name, product) = ("phi*ind(sk1)".to_string(), phi.mul(&sk1_ind)?);
    euler_check(&product, &name, &mut witnesses)?;
    let factors: [(&str, &ConstructibleFunction); 4] = [
        ("phi", &phi),
        ("hlink(phi^2)", &hl2),
        ("hlink(phi^3)", &hl3),
        ("hlink(ind(sk2))", &hl_sk2),
    ];
    for mask in 1u8..16 {
        let with_sk2 = mask & 8 != 0;
        let abc = (mask & 7).count_ones() as usize;
        let keep = if with_sk2 { abc >= 1 } else { abc >= 2 };
        if !keep {
            continue;
        }
        let chosen: Vec<_> = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, f)| *f)
            .collect();
        let (name, product) = product_of(&chosen)?;
        euler_check(&product, &name, &mut witnesses)?;
    }
    let function_verdict = witnesses.is_empty();

    // set form: patterns of (phi, hlink(phi^2), hlink(phi^3)) and the
    // half-link of the two-skeleton, on the one-skeleton of the triangulation
    let deltas: Vec<(usize, [u8; 4])> = x
        .skeleton(1)
        .ids()
        .map(|id| {
            (
                id,
                [
                    parity(phi.get(id)),
                    parity(hl2.get(id)),
                    parity(hl3.get(id)),
                    parity(hl_sk2.get(id)),
                ],
            )
        })
        .collect();
    let x0 = x.skeleton(0);
    let mut named_sets = Vec::new();
    let mut set_verdict = true;
    let mut set_witnesses = Vec::new();
    let mut push_set = |name: String,
                        members: Vec<usize>,
                        set_verdict: &mut bool,
                        set_witnesses: &mut Vec<Witness>|
     -> Result<()> {
        let set = SimplexSet::from_ids(x, members).union(&x0);
        if !is_euler_set(&set)? {
            *set_verdict = false;
            let w = ops::euler_witness(&ConstructibleFunction::indicator(&set.closure()))?
                .expect("non-Euler set has a witness");
            set_witnesses.push(Witness {
                function: format!("set {name} + X^0"),
                simplex: x.simplex_name(w.0),
                value: w.1,
            });
        }
        named_sets.push((name, set));
        Ok(())
    };
    for delta in [[1u8, 1, 1], [1, 0, 1], [0, 1, 1], [1, 1, 0]] {
        let members = deltas
            .iter()
            .filter(|(_, p)| p[0] == delta[0] && p[1] == delta[1] && p[2] == delta[2] && p[3] == 0)
            .map(|(id, _)| *id)
            .collect();
        push_set(
            format!("X_{}{}{},0", delta[0], delta[1], delta[2]),
            members,
            &mut set_verdict,
            &mut set_witnesses,
        )?;
    }
    for n in 1..8u8 {
        let delta = bits(n);
        let members = deltas
            .iter()
            .filter(|(_, p)| p[0] == delta[0] && p[1] == delta[1] && p[2] == delta[2] && p[3] == 1)
            .map(|(id, _)| *id)
            .collect();
        push_set(
            format!("X_{}{}{},1", delta[0], delta[1], delta[2]),
            members,
            &mut set_verdict,
            &mut set_witnesses,
        )?;
    }
    let sk1 = strat.skeleton(1);
    let members = deltas
        .iter()
        .filter(|(id, p)| *p == [1, 0, 0, 0] && sk1.contains(*id))
        .map(|(id, _)| *id)
        .collect();
    push_set(
        "X'".to_string(),
        members,
        &mut set_verdict,
        &mut set_witnesses,
    )?;

    if function_verdict != set_verdict {
        return Err(Error::FormulaDisagreement {
            what: format!(
                "function form ({function_verdict}) and set form ({set_verdict}) of the stratified test differ"
            ),
        });
    }
    witnesses.extend(set_witnesses);

    // emit the epsilon characteristic sets when one-strata are declared
    let profile = epsilon_profile(x, Some(strat))?;
    let mut e_abcd: Vec<(String, Vec<usize>)> = Vec::new();
    for entry in &profile.entries {
        let Some(e3) = entry.eps3 else { continue };
        let name = format!(
            "E_{}{}{}{}",
            entry.eps[0], entry.eps[1], entry.eps[2], e3
        );
        match e_abcd.iter_mut().find(|(n, _)| *n == name) {
            Some((_, ids)) => ids.push(entry.simplex),
            None => e_abcd.push((name, vec![entry.simplex])),
        }
    }
    e_abcd.sort_by(|a, b| a.0.cmp(&b.0));
    for (name, ids) in e_abcd {
        named_sets.push((name, SimplexSet::from_ids(x, ids).union(&strat.skeleton(0))));
    }

    Ok(CheckReport {
        verdict: function_verdict,
        failing_witnesses: witnesses,
        characteristic_sets: named_sets,
    })
}

/// One class of top-dimensional simplices of a candidate set, with the
/// residues of the iterated link on it.
#[derive(Clone, Debug)]
pub struct ComponentResidues {
    pub simplices: Vec<String>,
    pub residues: Vec<i64>,
    pub constant: bool,
}

/// Divisibility diagnostics of an iterated link. The tool reports and does
/// not assert: the two-adic bound holds for spaces homeomorphic to real
/// algebraic sets, and may fail for arbitrary complexes.
#[derive(Clone, Debug)]
pub struct DivisibilityReport {
    pub depth: usize,
    pub min_two_adic_valuation: Option<u32>,
    pub divisible: bool,
    pub per_set: Vec<(String, Vec<ComponentResidues>)>,
}

/// Applies the link along each of the given closed sets, innermost last in
/// the list, and reports two-adic divisibility by `2^depth` together with
/// the residues modulo `2^(depth+1)` on the pseudomanifold components of
/// each set.
pub fn iterated_link(
    x: &Complex,
    sets: &[(String, SimplexSet)],
) -> Result<(ConstructibleFunction, DivisibilityReport)> {
    let depth = sets.len();
    if depth >= 60 {
        return Err(Error::ValidationError {
            reason: "iterated links of depth sixty or more are unsupported".to_string(),
        });
    }
    let mut psi = ops::ones(x);
    for (_, y) in sets.iter().rev() {
        psi = ops::link_along(y, &psi)?;
    }
    let min_val = psi.min_two_adic_valuation();
    let divisible = min_val.map_or(true, |v| v as usize >= depth);
    let modulus = 1i64 << (depth + 1);
    let mut per_set = Vec::new();
    for (label, y) in sets {
        let mut classes = Vec::new();
        for class in y.top_components() {
            let mut simplices = Vec::new();
            let mut residues = Vec::new();
            for id in class.ids() {
                simplices.push(x.simplex_name(id));
                residues.push(psi.get(id).rem_euclid(modulus));
            }
            let constant = residues.windows(2).all(|w| w[0] == w[1]);
            classes.push(ComponentResidues {
                simplices,
                residues,
                constant,
            });
        }
        per_set.push((label.clone(), classes));
    }
    Ok((
        psi,
        DivisibilityReport {
            depth,
            min_two_adic_valuation: min_val,
            divisible,
            per_set,
        },
    ))
}

/// Divisibility-ideal and half-link closure diagnostics: membership of the
/// function and of its half-link in the two-adic ideal, and the Euler status
/// of the function and its halves. Statuses, not failures; the verdict is
/// the conjunction.
pub fn half_closure_suite(phi: &ConstructibleFunction) -> Result<CheckReport> {
    let ambient = phi.ambient();
    let mut witnesses = Vec::new();

    let ideal_witness = |f: &ConstructibleFunction, name: &str, witnesses: &mut Vec<Witness>| {
        if f.in_divisibility_ideal() {
            return;
        }
        let dim = ambient.dim().map(|d| d as u32).unwrap_or(0);
        for k in 1..=dim.max(1) {
            let bad = ambient.ids().find(|id| {
                !crate::cf::divisible_by_pow2(f.get(*id), k)
                    && ambient.simplex_dim(*id) as u32 >= k
            });
            if let Some(id) = bad {
                witnesses.push(Witness {
                    function: format!("{name} mod 2^{k}"),
                    simplex: ambient.simplex_name(id),
                    value: f.get(id),
                });
                return;
            }
        }
    };

    ideal_witness(phi, "phi", &mut witnesses);
    let euler = euler_check(phi, "phi", &mut witnesses)?;
    if euler {
        let hl = ops::half_link(phi)?;
        let ho = ops::half_omega(phi)?;
        ideal_witness(&hl, "hlink(phi)", &mut witnesses);
        euler_check(&hl, "hlink(phi)", &mut witnesses)?;
        euler_check(&ho, "homega(phi)", &mut witnesses)?;
    }
    Ok(CheckReport::from_witnesses(witnesses, Vec::new()))
}
