//! Finite abstract simplicial complexes and the combinatorial geometry the
//! rest of the crate consumes: faces, stars, links, joins, skeleta and
//! compactly-supported Euler characteristics.
//!
//! A complex is a face-closed finite set of nonempty simplices over string
//! vertex identifiers. Vertices are ordered lexicographically and simplices
//! are kept in canonical form (strictly increasing vertex lists, list sorted
//! by dimension then lexicographically), so equal complexes are structurally
//! identical and serialization is byte-stable.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared handle to an immutable complex. Every derived object (simplex
/// set, constructible function, map, stratification) holds one of these.
pub type Complex = Arc<SimplicialComplex>;

/// A finite abstract simplicial complex.
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Box<[u32]>>,
    index: HashMap<Box<[u32]>, usize>,
    faces: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.simplices == other.simplices
    }
}
impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex({} vertices, {} simplices, dim {:?})",
            self.vertices.len(),
            self.simplices.len(),
            self.dim()
        )
    }
}

/// Two handles denote the same ambient space if they are the same allocation
/// or structurally equal canonical complexes.
pub fn same_ambient(a: &Complex, b: &Complex) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn subset_masks(len: usize) -> impl Iterator<Item = u32> {
    debug_assert!(len <= 31);
    (1..(1u32 << len)).filter(move |m| *m != (1u32 << len) - 1)
}

fn apply_mask(verts: &[u32], mask: u32) -> Box<[u32]> {
    verts
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, v)| *v)
        .collect()
}

impl SimplicialComplex {
    /// The empty complex.
    pub fn empty() -> Complex {
        Self::from_simplex_lists(&[]).expect("empty complex is valid")
    }

    /// Builds the face closure of the given maximal simplices. Vertex lists
    /// may come in any order but must be duplicate-free.
    pub fn build<S: AsRef<str>>(maximal_simplices: &[Vec<S>]) -> Result<Complex> {
        Self::from_simplex_lists(maximal_simplices)
    }

    fn from_simplex_lists<S: AsRef<str>>(lists: &[Vec<S>]) -> Result<Complex> {
        let mut names: Vec<&str> = lists
            .iter()
            .flat_map(|l| l.iter().map(|s| s.as_ref()))
            .collect();
        names.sort_unstable();
        names.dedup();
        let vertices: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let vertex_id: HashMap<&str, u32> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i as u32))
            .collect();

        let mut seen: HashSet<Box<[u32]>> = HashSet::new();
        for list in lists {
            if list.is_empty() {
                continue;
            }
            if list.len() > 31 {
                return Err(Error::ValidationError {
                    reason: format!("simplex with {} vertices is unsupported", list.len()),
                });
            }
            let mut ids: Vec<u32> = list.iter().map(|s| vertex_id[s.as_ref()]).collect();
            ids.sort_unstable();
            for w in ids.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateVertexInSimplex {
                        vertex: vertices[w[0] as usize].clone(),
                    });
                }
            }
            // face closure
            let top: Box<[u32]> = ids.into();
            for mask in subset_masks(top.len()) {
                seen.insert(apply_mask(&top, mask));
            }
            seen.insert(top);
        }

        let mut simplices: Vec<Box<[u32]>> = seen.into_iter().collect();
        simplices.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<Box<[u32]>, usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();

        let n = simplices.len();
        let mut faces = vec![Vec::new(); n];
        let mut cofaces = vec![Vec::new(); n];
        for (id, s) in simplices.iter().enumerate() {
            for mask in subset_masks(s.len()) {
                let face_id = index[&apply_mask(s, mask)];
                faces[id].push(face_id);
                cofaces[face_id].push(id);
            }
        }
        for list in faces.iter_mut().chain(cofaces.iter_mut()) {
            list.sort_unstable();
        }

        Ok(Arc::new(SimplicialComplex {
            vertices,
            simplices,
            index,
            faces,
            cofaces,
        }))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Number of simplices.
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Simplex ids, in canonical order (by dimension, then lexicographic).
    pub fn ids(&self) -> std::ops::Range<usize> {
        0..self.simplices.len()
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    pub fn simplex_dim(&self, id: usize) -> usize {
        self.simplices[id].len() - 1
    }

    pub fn simplex_vertices(&self, id: usize) -> Vec<&str> {
        self.simplices[id]
            .iter()
            .map(|v| self.vertices[*v as usize].as_str())
            .collect()
    }

    /// Canonical display form, e.g. `{a,b,c}`.
    pub fn simplex_name(&self, id: usize) -> String {
        format!("{{{}}}", self.simplex_vertices(id).join(","))
    }

    /// Looks a simplex up by vertex names (any order).
    pub fn find<S: AsRef<str>>(&self, verts: &[S]) -> Option<usize> {
        let mut ids = Vec::with_capacity(verts.len());
        for v in verts {
            let i = self
                .vertices
                .binary_search_by(|w| w.as_str().cmp(v.as_ref()))
                .ok()?;
            ids.push(i as u32);
        }
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != verts.len() {
            return None;
        }
        self.index.get(ids.as_slice()).copied()
    }

    /// Proper faces of a simplex.
    pub fn faces_of(&self, id: usize) -> &[usize] {
        &self.faces[id]
    }

    /// Proper cofaces of a simplex.
    pub fn cofaces_of(&self, id: usize) -> &[usize] {
        &self.cofaces[id]
    }

    /// Ids of simplices not properly contained in any other.
    pub fn maximal_ids(&self) -> Vec<usize> {
        self.ids().filter(|id| self.cofaces[*id].is_empty()).collect()
    }

    /// The skeleton of dimension `<= k` as a simplex set.
    pub fn skeleton(self: &Complex, k: usize) -> SimplexSet {
        SimplexSet::from_ids(self, self.ids().filter(|id| self.simplex_dim(*id) <= k))
    }

    /// Everything as a simplex set.
    pub fn full_set(self: &Complex) -> SimplexSet {
        SimplexSet::from_ids(self, self.ids())
    }

    /// The star `{rho : rho contains tau}`, including `tau` itself.
    pub fn star(self: &Complex, tau: usize) -> SimplexSet {
        let mut ids = vec![tau];
        ids.extend_from_slice(&self.cofaces[tau]);
        SimplexSet::from_ids(self, ids)
    }

    /// The link of `tau` as a complex: `{rho : rho disjoint from tau, rho
    /// union tau in the complex}`.
    pub fn link_complex(self: &Complex, tau: usize) -> Complex {
        let tau_verts: HashSet<u32> = self.simplices[tau].iter().copied().collect();
        let lists: Vec<Vec<&str>> = self.cofaces[tau]
            .iter()
            .map(|rho| {
                self.simplices[*rho]
                    .iter()
                    .filter(|v| !tau_verts.contains(v))
                    .map(|v| self.vertices[*v as usize].as_str())
                    .collect()
            })
            .collect();
        SimplicialComplex::from_simplex_lists(&lists).expect("link of a valid complex is valid")
    }

    /// The boundary of `tau` (its proper faces) as a complex.
    pub fn boundary_complex(&self, tau: usize) -> Complex {
        let verts = self.simplex_vertices(tau);
        if verts.len() == 1 {
            return SimplicialComplex::empty();
        }
        let lists: Vec<Vec<&str>> = (0..verts.len())
            .map(|skip| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        SimplicialComplex::from_simplex_lists(&lists).expect("boundary of a simplex is valid")
    }

    /// Join of two complexes. If the vertex universes collide, every vertex
    /// of `k` is renamed with the suffix `#L` and every vertex of `l` with
    /// `#R`; otherwise names are kept.
    pub fn join(k: &Complex, l: &Complex) -> Complex {
        let collide = k
            .vertices
            .iter()
            .any(|v| l.vertices.binary_search(v).is_ok());
        let name = |side: &SimplicialComplex, v: u32, suffix: &str| -> String {
            let base = &side.vertices[v as usize];
            if collide {
                format!("{base}{suffix}")
            } else {
                base.clone()
            }
        };
        let mut lists: Vec<Vec<String>> = Vec::new();
        let left: Vec<Vec<String>> = k
            .ids()
            .map(|id| k.simplices[id].iter().map(|v| name(k, *v, "#L")).collect())
            .collect();
        let right: Vec<Vec<String>> = l
            .ids()
            .map(|id| l.simplices[id].iter().map(|v| name(l, *v, "#R")).collect())
            .collect();
        lists.extend(left.iter().cloned());
        lists.extend(right.iter().cloned());
        for a in &left {
            for b in &right {
                let mut joined = a.clone();
                joined.extend(b.iter().cloned());
                lists.push(joined);
            }
        }
        SimplicialComplex::from_simplex_lists(&lists).expect("join of valid complexes is valid")
    }

    /// Cone with a fresh apex vertex.
    pub fn cone(k: &Complex) -> Complex {
        let apex = SimplicialComplex::build(&[vec!["apex"]]).expect("point complex");
        Self::join(k, &apex)
    }

    /// Suspension by two fresh points.
    pub fn suspension(k: &Complex) -> Complex {
        let poles = SimplicialComplex::build(&[vec!["south"], vec!["north"]]).expect("two points");
        Self::join(k, &poles)
    }
}

/// A subset of open simplices of an ambient complex; the combinatorial model
/// of a locally closed subset.
#[derive(Clone)]
pub struct SimplexSet {
    ambient: Complex,
    members: Vec<bool>,
}

impl PartialEq for SimplexSet {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.ambient, &other.ambient) && self.members == other.members
    }
}
impl Eq for SimplexSet {}

impl std::fmt::Debug for SimplexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = self.ids().map(|id| self.ambient.simplex_name(id)).collect();
        write!(f, "SimplexSet[{}]", names.join(" "))
    }
}

impl SimplexSet {
    pub fn empty(ambient: &Complex) -> Self {
        SimplexSet {
            ambient: ambient.clone(),
            members: vec![false; ambient.len()],
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ambient: &Complex, ids: I) -> Self {
        let mut set = Self::empty(ambient);
        for id in ids {
            set.members[id] = true;
        }
        set
    }

    /// Builds a set from vertex-name lists; every listed simplex must exist.
    pub fn from_names<S: AsRef<str>>(ambient: &Complex, simplices: &[Vec<S>]) -> Result<Self> {
        let mut set = Self::empty(ambient);
        for verts in simplices {
            let id = ambient.find(verts).ok_or_else(|| Error::SimplexNotInComplex {
                simplex: format!(
                    "{{{}}}",
                    verts
                        .iter()
                        .map(|s| s.as_ref())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            })?;
            set.members[id] = true;
        }
        Ok(set)
    }

    pub fn ambient(&self) -> &Complex {
        &self.ambient
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members[id]
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, m)| **m)
            .map(|(id, _)| id)
    }

    pub fn count(&self) -> usize {
        self.members.iter().filter(|m| **m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|m| *m)
    }

    /// Dimension of the set; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.ids().map(|id| self.ambient.simplex_dim(id)).max()
    }

    /// Adds all faces of all members.
    pub fn closure(&self) -> SimplexSet {
        let mut out = self.clone();
        for id in self.ids() {
            for f in self.ambient.faces_of(id) {
                out.members[*f] = true;
            }
        }
        out
    }

    /// Face-closed?
    pub fn is_closed(&self) -> bool {
        self.ids()
            .all(|id| self.ambient.faces_of(id).iter().all(|f| self.members[*f]))
    }

    fn check_same(&self, other: &SimplexSet) {
        assert!(
            same_ambient(&self.ambient, &other.ambient),
            "simplex sets live on different ambient complexes"
        );
    }

    pub fn union(&self, other: &SimplexSet) -> SimplexSet {
        self.check_same(other);
        let mut out = self.clone();
        for (m, o) in out.members.iter_mut().zip(&other.members) {
            *m = *m || *o;
        }
        out
    }

    pub fn intersection(&self, other: &SimplexSet) -> SimplexSet {
        self.check_same(other);
        let mut out = self.clone();
        for (m, o) in out.members.iter_mut().zip(&other.members) {
            *m = *m && *o;
        }
        out
    }

    pub fn difference(&self, other: &SimplexSet) -> SimplexSet {
        self.check_same(other);
        let mut out = self.clone();
        for (m, o) in out.members.iter_mut().zip(&other.members) {
            *m = *m && !*o;
        }
        out
    }

    /// Compactly-supported Euler characteristic: the alternating count of
    /// open simplices. Agrees with the classical invariant on closed sets.
    pub fn euler_char(&self) -> i64 {
        self.ids()
            .map(|id| {
                if self.ambient.simplex_dim(id) % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    /// Partitions the top-dimensional members into classes connected through
    /// shared codimension-one faces; the combinatorial stand-in for
    /// pseudomanifold components.
    pub fn top_components(&self) -> Vec<SimplexSet> {
        let Some(d) = self.dimension() else {
            return Vec::new();
        };
        let tops: Vec<usize> = self
            .ids()
            .filter(|id| self.ambient.simplex_dim(*id) == d)
            .collect();
        // facet -> incident top members
        let mut by_facet: HashMap<usize, Vec<usize>> = HashMap::new();
        for t in &tops {
            for f in self.ambient.faces_of(*t) {
                if self.ambient.simplex_dim(*f) + 1 == d {
                    by_facet.entry(*f).or_default().push(*t);
                }
            }
        }
        let pos: HashMap<usize, usize> = tops.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let mut seen = vec![false; tops.len()];
        let mut classes = Vec::new();
        for start in 0..tops.len() {
            if seen[start] {
                continue;
            }
            let mut class = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                class.push(tops[i]);
                for f in self.ambient.faces_of(tops[i]) {
                    if self.ambient.simplex_dim(*f) + 1 != d {
                        continue;
                    }
                    for nb in by_facet.get(f).into_iter().flatten() {
                        let j = pos[nb];
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            classes.push(SimplexSet::from_ids(&self.ambient, class));
        }
        classes
    }
}

/// A labeled block of a stratification: a union of open simplices with a
/// declared stratum dimension. Blocks may contain lower-dimensional
/// simplices (an open arc through a vertex is one stratum); the declared
/// dimension must equal the largest member dimension.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub label: String,
    pub dim: usize,
    pub members: Vec<usize>,
}

/// A partition of the ambient simplices into strata satisfying the frontier
/// condition: the closure of each stratum is the stratum together with whole
/// strata of strictly smaller dimension.
#[derive(Clone)]
pub struct Stratification {
    ambient: Complex,
    strata: Vec<Stratum>,
}

impl Stratification {
    pub fn new(ambient: &Complex, mut strata: Vec<Stratum>) -> Result<Self> {
        for s in &mut strata {
            s.members.sort_unstable();
            s.members.dedup();
        }
        strata.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.label.cmp(&b.label)));
        let st = Stratification {
            ambient: ambient.clone(),
            strata,
        };
        st.validate()?;
        Ok(st)
    }

    /// One stratum per dimension layer: the coarsest pure-dimensional
    /// stratification of the triangulation.
    pub fn by_dimension(ambient: &Complex) -> Self {
        let Some(dim) = ambient.dim() else {
            return Stratification {
                ambient: ambient.clone(),
                strata: Vec::new(),
            };
        };
        let strata = (0..=dim)
            .map(|d| Stratum {
                label: format!("dim{d}"),
                dim: d,
                members: ambient.ids().filter(|id| ambient.simplex_dim(*id) == d).collect(),
            })
            .filter(|s| !s.members.is_empty())
            .collect();
        Self::new(ambient, strata).expect("dimension layers always stratify")
    }

    /// The trivial stratification: everything in one stratum.
    pub fn single(ambient: &Complex) -> Self {
        let Some(dim) = ambient.dim() else {
            return Stratification {
                ambient: ambient.clone(),
                strata: Vec::new(),
            };
        };
        Self::new(
            ambient,
            vec![Stratum {
                label: "all".to_string(),
                dim,
                members: ambient.ids().collect(),
            }],
        )
        .expect("single stratum always stratifies")
    }

    fn validate(&self) -> Result<()> {
        let n = self.ambient.len();
        let mut owner = vec![usize::MAX; n];
        for (si, s) in self.strata.iter().enumerate() {
            if s.members.is_empty() {
                return Err(Error::ValidationError {
                    reason: format!("stratum `{}` is empty", s.label),
                });
            }
            let mut max_dim = 0;
            for id in &s.members {
                if *id >= n {
                    return Err(Error::ValidationError {
                        reason: format!("stratum `{}` references a missing simplex", s.label),
                    });
                }
                if owner[*id] != usize::MAX {
                    return Err(Error::ValidationError {
                        reason: format!(
                            "simplex {} belongs to more than one stratum",
                            self.ambient.simplex_name(*id)
                        ),
                    });
                }
                owner[*id] = si;
                let d = self.ambient.simplex_dim(*id);
                if d > s.dim {
                    return Err(Error::ValidationError {
                        reason: format!(
                            "stratum `{}` of dimension {} contains {} of dimension {}",
                            s.label,
                            s.dim,
                            self.ambient.simplex_name(*id),
                            d
                        ),
                    });
                }
                max_dim = max_dim.max(d);
            }
            if max_dim != s.dim {
                return Err(Error::ValidationError {
                    reason: format!(
                        "stratum `{}` declares dimension {} but its largest simplex has dimension {}",
                        s.label, s.dim, max_dim
                    ),
                });
            }
        }
        if let Some(id) = owner.iter().position(|o| *o == usize::MAX) {
            return Err(Error::ValidationError {
                reason: format!(
                    "simplex {} is not covered by any stratum",
                    self.ambient.simplex_name(id)
                ),
            });
        }
        // frontier condition: the closure of a stratum meets other strata
        // only in whole strata of strictly smaller dimension
        for (si, s) in self.strata.iter().enumerate() {
            let closure = SimplexSet::from_ids(&self.ambient, s.members.iter().copied()).closure();
            let mut touched: HashSet<usize> = HashSet::new();
            for id in closure.ids() {
                if owner[id] != si {
                    touched.insert(owner[id]);
                }
            }
            for ti in touched {
                let t = &self.strata[ti];
                if t.dim >= s.dim {
                    return Err(Error::ValidationError {
                        reason: format!(
                            "frontier condition fails: closure of `{}` (dim {}) meets `{}` (dim {})",
                            s.label, s.dim, t.label, t.dim
                        ),
                    });
                }
                if !t.members.iter().all(|id| closure.contains(*id)) {
                    return Err(Error::ValidationError {
                        reason: format!(
                            "frontier condition fails: closure of `{}` meets `{}` only partially",
                            s.label, t.label
                        ),
                    });
                }
            }
        }
        // skeleta face-closed (implied by the frontier condition; checked as
        // a belt against validation bugs)
        let max_dim = self.strata.iter().map(|s| s.dim).max().unwrap_or(0);
        for k in 0..=max_dim {
            if !self.skeleton(k).is_closed() {
                return Err(Error::ValidationError {
                    reason: format!("stratification skeleton of dimension {k} is not face-closed"),
                });
            }
        }
        Ok(())
    }

    pub fn ambient(&self) -> &Complex {
        &self.ambient
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    /// Union of strata of declared dimension `<= k`.
    pub fn skeleton(&self, k: usize) -> SimplexSet {
        SimplexSet::from_ids(
            &self.ambient,
            self.strata
                .iter()
                .filter(|s| s.dim <= k)
                .flat_map(|s| s.members.iter().copied()),
        )
    }

    pub fn strata_of_dim(&self, d: usize) -> impl Iterator<Item = &Stratum> {
        self.strata.iter().filter(move |s| s.dim == d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> Complex {
        SimplicialComplex::build(&[vec!["a", "b"], vec!["b", "c"]]).unwrap()
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

    #[test]
    fn build_face_closure() {
        let k = path();
        assert_eq!(k.len(), 5);
        assert_eq!(k.dim(), Some(1));

        let s = sphere2();
        assert_eq!(s.len(), 14);
        assert_eq!(s.dim(), Some(2));

        let e = SimplicialComplex::build::<&str>(&[]).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.dim(), None);
    }

    #[test]
    fn build_rejects_duplicate_vertices() {
        let err = SimplicialComplex::build(&[vec!["a", "a"]]).unwrap_err();
        assert!(matches!(err, Error::DuplicateVertexInSimplex { .. }));
    }

    #[test]
    fn star_and_link() {
        let k = path();
        let b = k.find(&["b"]).unwrap();
        let star = k.star(b);
        assert_eq!(star.count(), 3); // b, ab, bc

        let link = k.link_complex(b);
        assert_eq!(link.len(), 2);
        assert_eq!(link.dim(), Some(0));

        // edge of the 2-sphere: link is two vertices
        let s = sphere2();
        let ab = s.find(&["a", "b"]).unwrap();
        let link = s.link_complex(ab);
        assert_eq!(link.len(), 2);
        assert_eq!(link.dim(), Some(0));

        // isolated vertex: empty link
        let pt = SimplicialComplex::build(&[vec!["p"]]).unwrap();
        let link = pt.link_complex(0);
        assert!(link.is_empty());
    }

    #[test]
    fn joins_cones_suspensions() {
        let three = SimplicialComplex::build(&[vec!["x"], vec!["y"], vec!["z"]]).unwrap();
        let theta = SimplicialComplex::suspension(&three);
        assert_eq!(theta.vertices().len(), 5);
        assert_eq!(theta.full_set().euler_char(), -1);

        let s0 = SimplicialComplex::build(&[vec!["x"], vec!["y"]]).unwrap();
        let square = SimplicialComplex::suspension(&s0);
        assert_eq!(square.full_set().euler_char(), 0);
        assert_eq!(square.len(), 8); // 4-cycle

        let circle = SimplicialComplex::build(&[vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]])
            .unwrap();
        let disk = SimplicialComplex::cone(&circle);
        assert_eq!(disk.full_set().euler_char(), 1);
        assert_eq!(disk.dim(), Some(2));
    }

    #[test]
    fn join_renames_on_collision() {
        let k = SimplicialComplex::build(&[vec!["a", "b"]]).unwrap();
        let j = SimplicialComplex::join(&k, &k);
        assert_eq!(j.dim(), Some(3));
        assert!(j.vertices().contains(&"a#L".to_string()));
        assert!(j.vertices().contains(&"a#R".to_string()));
        // deterministic
        let j2 = SimplicialComplex::join(&k, &k);
        assert!(same_ambient(&j, &j2));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(sphere2().full_set().euler_char(), 2);

        let k = path();
        let edge = k.find(&["a", "b"]).unwrap();
        let open_edge = SimplexSet::from_ids(&k, [edge]);
        assert_eq!(open_edge.euler_char(), -1);
        assert_eq!(k.full_set().euler_char(), 1);
    }

    #[test]
    fn closure_and_closedness() {
        let k = path();
        let edge = k.find(&["a", "b"]).unwrap();
        let s = SimplexSet::from_ids(&k, [edge]);
        assert!(!s.is_closed());
        let c = s.closure();
        assert!(c.is_closed());
        assert_eq!(c.count(), 3);
        assert_eq!(c.closure(), c);
        // monotone
        assert!(c.ids().count() >= s.ids().count());
    }

    #[test]
    fn top_component_classes() {
        // two disjoint triangles
        let k = SimplicialComplex::build(&[vec!["a", "b", "c"], vec!["x", "y", "z"]]).unwrap();
        assert_eq!(k.full_set().top_components().len(), 2);

        assert_eq!(sphere2().full_set().top_components().len(), 1);

        // figure eight: all edges connect through the wedge vertex
        let fig8 = SimplicialComplex::build(&[
            vec!["w", "p1"],
            vec!["p1", "p2"],
            vec!["p2", "w"],
            vec!["w", "q1"],
            vec!["q1", "q2"],
            vec!["q2", "w"],
        ])
        .unwrap();
        assert_eq!(fig8.full_set().top_components().len(), 1);
    }

    #[test]
    fn suspension_euler_relation() {
        for k in [path(), sphere2()] {
            let chi = k.full_set().euler_char();
            let s = SimplicialComplex::suspension(&k);
            assert_eq!(s.full_set().euler_char(), 2 - chi);
        }
    }

    #[test]
    fn stratification_by_dimension_is_valid() {
        let s = Stratification::by_dimension(&sphere2());
        assert_eq!(s.strata().len(), 3);
        assert!(s.skeleton(1).is_closed());
    }

    #[test]
    fn stratification_rejects_partial_frontier() {
        // two edges sharing vertex b; a 0-stratum that splits {a,b} from {c}
        // violates nothing, but putting a and b with c's edge does
        let k = path();
        let find = |v: &[&str]| k.find(v).unwrap();
        let bad = Stratification::new(
            &k,
            vec![
                Stratum {
                    label: "edges".into(),
                    dim: 1,
                    members: vec![find(&["a", "b"]), find(&["b", "c"])],
                },
                Stratum {
                    label: "ab".into(),
                    dim: 0,
                    members: vec![find(&["a"]), find(&["b"])],
                },
                Stratum {
                    label: "c".into(),
                    dim: 0,
                    members: vec![find(&["c"])],
                },
            ],
        );
        assert!(bad.is_ok(), "closure of edges covers both vertex strata");

        // an honest failure: a 1-stratum whose closure hits only part of a 0-stratum
        let bad = Stratification::new(
            &k,
            vec![
                Stratum {
                    label: "left".into(),
                    dim: 1,
                    members: vec![find(&["a", "b"])],
                },
                Stratum {
                    label: "right".into(),
                    dim: 1,
                    members: vec![find(&["b", "c"])],
                },
                Stratum {
                    label: "ac".into(),
                    dim: 0,
                    members: vec![find(&["a"]), find(&["c"])],
                },
                Stratum {
                    label: "b".into(),
                    dim: 0,
                    members: vec![find(&["b"])],
                },
            ],
        );
        assert!(matches!(bad, Err(Error::ValidationError { .. })));
    }

    #[test]
    fn single_stratification_has_empty_skeleta() {
        let s = Stratification::single(&sphere2());
        assert!(s.skeleton(1).is_empty());
        assert_eq!(s.skeleton(2).count(), 14);
    }
}
