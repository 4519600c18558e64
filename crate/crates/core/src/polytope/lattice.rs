use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{HalfSpaceSystem, VertexRecord};

/// A face, keyed by its supporting labels and its vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub dim: usize,
    pub labels: Vec<String>,
    pub vertices: Vec<usize>,
}

/// The graded poset of nonempty faces, ordered by vertex-set inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceLattice {
    pub dim: usize,
    pub num_vertices: usize,
    pub faces: Vec<Face>,
}

impl FaceLattice {
    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    pub fn facets(&self) -> Vec<&Face> {
        if self.dim == 0 {
            return Vec::new();
        }
        self.faces_of_dim(self.dim - 1).collect()
    }

    pub fn ridges(&self) -> Vec<&Face> {
        if self.dim < 2 {
            return Vec::new();
        }
        self.faces_of_dim(self.dim - 2).collect()
    }

    pub fn edges(&self) -> Vec<&Face> {
        if self.dim < 2 {
            return Vec::new();
        }
        self.faces_of_dim(1).collect()
    }

    /// `(f₀, …, f_{n−1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.dim).map(|d| self.faces_of_dim(d).count()).collect()
    }

    /// Label-set family of each dimension.
    pub fn label_families(&self) -> Vec<BTreeSet<Vec<String>>> {
        (0..=self.dim).map(|d| self.faces_of_dim(d).map(|f| f.labels.clone()).collect()).collect()
    }

    /// Number of facets through the vertex with the given index.
    pub fn facets_at_vertex(&self, v: usize) -> usize {
        self.facets().iter().filter(|f| f.vertices.contains(&v)).count()
    }

    /// The face with exactly this label set and dimension.
    pub fn find(&self, dim: usize, labels: &[&str]) -> Option<&Face> {
        let mut want: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        want.sort();
        self.faces_of_dim(dim).find(|f| {
            let mut l = f.labels.clone();
            l.sort();
            l == want
        })
    }

    /// The lattice of faces of `face`, with `face` as top element.
    pub fn sublattice(&self, face: &Face) -> FaceLattice {
        let faces = self
            .faces
            .iter()
            .filter(|g| g.dim <= face.dim && !g.vertices.is_empty() && g.vertices.iter().all(|v| face.vertices.contains(v)))
            .cloned()
            .collect();
        FaceLattice { dim: face.dim, num_vertices: face.vertices.len(), faces }
    }
}

fn bits(n: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for i in items {
        b.insert(i);
    }
    b
}

/// Face lattice from vertex incidences: facets are the maximal label vertex-sets, and
/// the facets of a face `F` are the maximal proper nonempty sets `F ∩ G`.
///
/// Without vertices, every distinct half-space is reported as a facet with no vertices.
pub fn build_face_lattice(sys: &HalfSpaceSystem, vertices: &[VertexRecord]) -> FaceLattice {
    let n = sys.dim();
    let nv = vertices.len();
    let mut faces = vec![Face { dim: n, labels: Vec::new(), vertices: (0..nv).collect() }];
    if nv == 0 {
        let mut seen: Vec<&crate::projective::Covector> = Vec::new();
        for (l, c) in sys.entries() {
            if !seen.contains(&c) {
                seen.push(c);
                faces.push(Face { dim: n.saturating_sub(1), labels: vec![l.clone()], vertices: Vec::new() });
            }
        }
        return FaceLattice { dim: n, num_vertices: 0, faces };
    }
    let label_sets: Vec<FixedBitSet> = (0..sys.len())
        .map(|i| bits(nv, vertices.iter().enumerate().filter(|(_, v)| v.incidence_idx.contains(&i)).map(|(k, _)| k)))
        .collect();
    let labels_of = |s: &FixedBitSet| -> Vec<String> {
        label_sets.iter().enumerate().filter(|(_, ls)| s.is_subset(ls)).map(|(i, _)| sys.labels()[i].clone()).collect()
    };
    let top = bits(nv, 0..nv);
    let facets = maximal(label_sets.iter().filter(|s| s.count_ones(..) > 0 && **s != top).cloned().collect());
    let mut by_set: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut frontier: Vec<FixedBitSet> = Vec::new();
    for f in facets.iter() {
        by_set.insert(f.clone(), n - 1);
        frontier.push(f.clone());
    }
    let mut d = n - 1;
    while d > 0 && !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            let cands: Vec<FixedBitSet> = facets
                .iter()
                .map(|g| {
                    let mut x = f.clone();
                    x.intersect_with(g);
                    x
                })
                .filter(|x| x.count_ones(..) > 0 && x != f)
                .collect();
            for c in maximal(cands) {
                if !by_set.contains_key(&c) {
                    by_set.insert(c.clone(), d - 1);
                    next.push(c);
                }
            }
        }
        frontier = next;
        d -= 1;
    }
    let mut rest: Vec<Face> = by_set
        .into_iter()
        .map(|(s, dim)| Face { dim, labels: labels_of(&s), vertices: s.ones().collect() })
        .collect();
    rest.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    faces.extend(rest);
    FaceLattice { dim: n, num_vertices: nv, faces }
}

fn maximal(mut sets: Vec<FixedBitSet>) -> Vec<FixedBitSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones(..)));
    sets.dedup();
    let mut out: Vec<FixedBitSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|o| s.is_subset(o)) {
            out.push(s);
        }
    }
    out
}

/// Equality of label-set families in every dimension.
pub fn lattices_equal(a: &FaceLattice, b: &FaceLattice) -> bool {
    a.dim == b.dim && a.label_families() == b.label_families()
}

/// Combinatorial isomorphism, decided by a bijection of facets that carries the
/// vertex-facet incidence of `a` onto that of `b`.
pub fn lattices_isomorphic(a: &FaceLattice, b: &FaceLattice) -> bool {
    if a.dim != b.dim || a.f_vector() != b.f_vector() {
        return false;
    }
    let inc = |l: &FaceLattice| -> (Vec<FixedBitSet>, usize) {
        let verts: Vec<usize> = l.faces_of_dim(0).map(|f| f.vertices[0]).collect();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets = l.facets().iter().map(|f| bits(verts.len(), f.vertices.iter().filter_map(|v| pos.get(v).copied()))).collect();
        (facets, verts.len())
    };
    let (fa, nva) = inc(a);
    let (fb, nvb) = inc(b);
    if nva != nvb || fa.len() != fb.len() {
        return false;
    }
    let mut assign = vec![usize::MAX; fa.len()];
    let mut used = vec![false; fb.len()];
    backtrack(0, &fa, &fb, nva, &mut assign, &mut used)
}

fn inter(x: &FixedBitSet, y: &FixedBitSet) -> usize {
    x.intersection(y).count()
}

fn backtrack(i: usize, fa: &[FixedBitSet], fb: &[FixedBitSet], nv: usize, assign: &mut [usize], used: &mut [bool]) -> bool {
    if i == fa.len() {
        // Vertex signatures: the set of facets through each vertex must correspond.
        let sig = |fs: &[FixedBitSet], map: &dyn Fn(usize) -> usize| -> BTreeSet<Vec<usize>> {
            (0..nv)
                .map(|v| {
                    let mut s: Vec<usize> = (0..fs.len()).filter(|&k| fs[k].contains(v)).map(map).collect();
                    s.sort();
                    s
                })
                .collect()
        };
        return sig(fa, &|k| assign[k]) == sig(fb, &|k| k);
    }
    for j in 0..fb.len() {
        if used[j] || fa[i].count_ones(..) != fb[j].count_ones(..) {
            continue;
        }
        if (0..i).any(|k| inter(&fa[i], &fa[k]) != inter(&fb[j], &fb[assign[k]])) {
            continue;
        }
        assign[i] = j;
        used[j] = true;
        if backtrack(i + 1, fa, fb, nv, assign, used) {
            return true;
        }
        used[j] = false;
    }
    assign[i] = usize::MAX;
    false
}

/// Every edge has exactly two vertices, and there is at least one vertex.
pub fn bounded_edges_check(l: &FaceLattice) -> bool {
    l.num_vertices > 0 && l.faces_of_dim(1).all(|e| e.vertices.len() == 2) && (l.dim < 2 || l.faces_of_dim(1).count() > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::FieldScalar;
    use crate::polytope::{enumerate_vertices, EnumerateOptions};
    use crate::projective::Covector;

    fn cube() -> HalfSpaceSystem {
        let mut e = Vec::new();
        for (i, name) in ["x", "y", "z"].iter().enumerate() {
            for (s, suf) in [(1, "+"), (-1, "-")] {
                let mut c = vec![FieldScalar::from_int(-1), FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero()];
                c[i + 1] = FieldScalar::from_int(s);
                e.push((format!("{name}{suf}"), Covector::new(c).unwrap()));
            }
        }
        HalfSpaceSystem::new(3, e, None).unwrap()
    }

    #[test]
    fn cube_lattice() {
        let sys = cube();
        let v = enumerate_vertices(&sys, EnumerateOptions::default()).unwrap();
        let l = build_face_lattice(&sys, &v);
        assert_eq!(l.f_vector(), vec![8, 12, 6]);
        assert!(bounded_edges_check(&l));
        assert!(lattices_isomorphic(&l, &l));
        assert!(lattices_equal(&l, &l));
    }

    #[test]
    fn single_half_space() {
        let c = Covector::new(vec![FieldScalar::from_int(-1), FieldScalar::one(), FieldScalar::zero(), FieldScalar::zero()]).unwrap();
        let sys = HalfSpaceSystem::new(3, vec![("h".into(), c)], None).unwrap();
        let v = enumerate_vertices(&sys, EnumerateOptions::default()).unwrap();
        let l = build_face_lattice(&sys, &v);
        assert_eq!(l.facets().len(), 1);
        assert!(v.is_empty());
        assert!(!bounded_edges_check(&l));
    }
}
