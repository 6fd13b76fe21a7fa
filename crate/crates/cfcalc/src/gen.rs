//! Seeded random generators for desk-scale test instances: small complexes,
//! integer functions, closed sets, divisibility-ideal members and simplicial
//! maps. Used by the self-test surface and the test suites; all streams are
//! deterministic in the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cf::ConstructibleFunction;
use crate::complex::{Complex, SimplexSet, SimplicialComplex};
use crate::maps::SimplicialMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex with at most `max_vertices` vertices (at most seven
/// useful here) and dimension at most three.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> Complex {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let count = rng.gen_range(1..=5);
    let mut lists = Vec::with_capacity(count);
    for _ in 0..count {
        let size = rng.gen_range(1..=4.min(n));
        let mut pick: Vec<usize> = (0..n).collect();
        for i in 0..size {
            let j = rng.gen_range(i..n);
            pick.swap(i, j);
        }
        lists.push(pick[..size].iter().map(|i| names[*i].clone()).collect::<Vec<_>>());
    }
    SimplicialComplex::build(&lists).expect("random lists are duplicate-free")
}

/// Uniform values in `[lo, hi]` per open simplex.
pub fn random_function(
    rng: &mut ChaCha8Rng,
    ambient: &Complex,
    lo: i64,
    hi: i64,
) -> ConstructibleFunction {
    let values = ambient.ids().map(|_| rng.gen_range(lo..=hi)).collect();
    ConstructibleFunction::from_values(ambient, values)
}

/// A random subset of open simplices.
pub fn random_set(rng: &mut ChaCha8Rng, ambient: &Complex) -> SimplexSet {
    SimplexSet::from_ids(ambient, ambient.ids().filter(|_| rng.gen_bool(0.4)))
}

/// The closure of a random subset.
pub fn random_closed_set(rng: &mut ChaCha8Rng, ambient: &Complex) -> SimplexSet {
    random_set(rng, ambient).closure()
}

/// A random member of the two-adic divisibility ideal: a sum of `2^k` times
/// functions supported in dimension below `k`.
pub fn random_ideal_member(rng: &mut ChaCha8Rng, ambient: &Complex) -> ConstructibleFunction {
    let mut f = ConstructibleFunction::zero(ambient);
    let dim = ambient.dim().unwrap_or(0);
    for k in 1..=(dim as u32 + 1) {
        let values = ambient
            .ids()
            .map(|id| {
                if ambient.simplex_dim(id) as u32 + 1 <= k && rng.gen_bool(0.5) {
                    rng.gen_range(-2..=2)
                } else {
                    0
                }
            })
            .collect();
        let layer = ConstructibleFunction::from_values(ambient, values)
            .scale(1 << k)
            .expect("small values");
        f = f.add(&layer).expect("small values");
    }
    f
}

/// A random simplicial map between the two complexes, retrying rejected
/// vertex assignments and falling back to a constant map.
pub fn random_map(
    rng: &mut ChaCha8Rng,
    domain: &Complex,
    codomain: &Complex,
    tries: usize,
) -> SimplicialMap {
    let cod_verts = codomain.vertices();
    for _ in 0..tries {
        let assignments: Vec<(String, String)> = domain
            .vertices()
            .iter()
            .map(|v| {
                (
                    v.clone(),
                    cod_verts[rng.gen_range(0..cod_verts.len())].clone(),
                )
            })
            .collect();
        if let Ok(map) = SimplicialMap::new(domain, codomain, &assignments) {
            return map;
        }
    }
    SimplicialMap::constant(domain, codomain, cod_verts[0].as_str())
        .expect("constant maps are simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let mut a = rng(7);
        let mut b = rng(7);
        let ka = random_complex(&mut a, 7);
        let kb = random_complex(&mut b, 7);
        assert_eq!(*ka, *kb);
        assert!(ka.dim().unwrap_or(0) <= 3);
        let fa = random_function(&mut a, &ka, -4, 4);
        let fb = random_function(&mut b, &kb, -4, 4);
        assert_eq!(fa.values(), fb.values());
    }

    #[test]
    fn ideal_members_are_members() {
        let mut r = rng(11);
        for _ in 0..50 {
            let k = random_complex(&mut r, 7);
            let f = random_ideal_member(&mut r, &k);
            assert!(f.in_divisibility_ideal());
        }
    }

    #[test]
    fn random_maps_are_valid() {
        let mut r = rng(13);
        for _ in 0..30 {
            let d = random_complex(&mut r, 5);
            let c = random_complex(&mut r, 5);
            let map = random_map(&mut r, &d, &c, 20);
            // image simplices exist for everything by construction
            for id in d.ids() {
                let _ = map.image_simplex(id);
            }
        }
    }
}
