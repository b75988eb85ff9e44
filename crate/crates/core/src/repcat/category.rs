//! The cluster category `D / F` on its fundamental domain, with explicit
//! morphisms and composition.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::derived::{CObject, DerivedLedger};
use super::mesh::{transport, Hammock, Vertex, Zq};
use super::representation::ModuleCategory;
use crate::error::{Error, Result};
use crate::linalg::{rank_of, Q};
use crate::root_system::{Root, RootSystem};

/// A morphism `X → Y` of the cluster category: a component in
/// `Hom_D(X, Y)` and one in `Hom_D(X, FY)`, each in the knitted basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMorphism {
    pub source: usize,
    pub target: usize,
    pub deg0: Vec<Q>,
    pub deg1: Vec<Q>,
}

impl CMorphism {
    pub fn is_zero(&self) -> bool {
        self.deg0.iter().chain(&self.deg1).all(Zero::is_zero)
    }

    /// The concatenated coordinate vector.
    pub fn coords(&self) -> Vec<Q> {
        self.deg0.iter().chain(&self.deg1).cloned().collect()
    }

    /// `Some(d)` when the morphism is nonzero and lives in degree `d` only.
    pub fn degree(&self) -> Option<u8> {
        let z0 = self.deg0.iter().all(Zero::is_zero);
        let z1 = self.deg1.iter().all(Zero::is_zero);
        match (z0, z1) {
            (false, true) => Some(0),
            (true, false) => Some(1),
            _ => None,
        }
    }

    pub fn add(&self, other: &CMorphism) -> CMorphism {
        assert_eq!((self.source, self.target), (other.source, other.target));
        let sum = |a: &[Q], b: &[Q]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        CMorphism {
            source: self.source,
            target: self.target,
            deg0: sum(&self.deg0, &other.deg0),
            deg1: sum(&self.deg1, &other.deg1),
        }
    }

    pub fn scale(&self, s: &Q) -> CMorphism {
        CMorphism {
            source: self.source,
            target: self.target,
            deg0: self.deg0.iter().map(|x| x * s).collect(),
            deg1: self.deg1.iter().map(|x| x * s).collect(),
        }
    }

    /// `Some(c)` with `other = c · self`, when both are nonzero and proportional.
    pub fn ratio(&self, other: &CMorphism) -> Option<Q> {
        let a = self.coords();
        let b = other.coords();
        let p = a.iter().position(|x| !x.is_zero())?;
        let c = &b[p] / &a[p];
        if c.is_zero() {
            return None;
        }
        a.iter()
            .zip(&b)
            .all(|(x, y)| &(x * &c) == y)
            .then_some(c)
    }
}

/// Dimension of the span of a family of parallel morphisms.
pub fn span_rank(ms: &[CMorphism]) -> usize {
    let vs: Vec<Vec<Q>> = ms.iter().map(CMorphism::coords).collect();
    if vs.is_empty() {
        0
    } else {
        rank_of(&vs)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HomEntry {
    pub source: String,
    pub target: String,
    pub hom: usize,
    pub ext: usize,
}

#[derive(Debug, Clone)]
pub struct ClusterCategory {
    rs: RootSystem,
    zq: Zq,
    objects: Vec<CObject>,
    vertices: Vec<Vertex>,
    index: HashMap<CObject, usize>,
    by_vertex: HashMap<Vertex, usize>,
    hammocks: Vec<Hammock>,
    /// `(dim Hom_D(X, Y), dim Hom_D(X, FY))`.
    dims: Vec<Vec<(usize, usize)>>,
    tau: Vec<usize>,
}

impl ClusterCategory {
    /// Build the category and check every Hom dimension and the AR translate
    /// against the module-theoretic ledger.
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let zq = Zq::new(rs)?;
        let objects: Vec<CObject> = rs
            .almost_positive_roots()
            .iter()
            .map(CObject::from_root)
            .collect::<Result<_>>()?;
        let vertices: Vec<Vertex> = objects
            .iter()
            .map(|o| match o {
                CObject::Module(b) => zq
                    .vertex_of_module(b)
                    .ok_or_else(|| Error::NotPositiveRoot(b.to_string())),
                CObject::Shifted(i) => Ok(zq.shifted_projective(*i)),
            })
            .collect::<Result<_>>()?;
        let index = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
        let by_vertex: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if by_vertex.len() != objects.len() {
            return Err(Error::Derived("fundamental domain vertices collide".into()));
        }
        let hammocks: Vec<Hammock> = vertices.iter().map(|&v| Hammock::new(&zq, v)).collect();
        let mut dims = vec![vec![(0, 0); objects.len()]; objects.len()];
        for (a, h) in hammocks.iter().enumerate() {
            for (b, &vb) in vertices.iter().enumerate() {
                for (k, w) in [(-1, zq.f_inverse(vb)), (2, zq.f(zq.f(vb)))] {
                    if h.dim(w) != 0 {
                        return Err(Error::Derived(format!(
                            "Hom_D({}, F^{k} {}) is nonzero",
                            objects[a], objects[b]
                        )));
                    }
                }
                dims[a][b] = (h.dim(vb), h.dim(zq.f(vb)));
            }
        }
        let mut cat = ClusterCategory {
            rs: rs.clone(),
            zq,
            objects,
            vertices,
            index,
            by_vertex,
            hammocks,
            dims,
            tau: Vec::new(),
        };
        cat.tau = (0..cat.len())
            .map(|i| cat.reduce(cat.zq.tau(cat.vertices[i])))
            .collect::<Result<_>>()?;
        for i in 0..cat.len() {
            if cat.hom_dims(i, i) != (1, 0) {
                return Err(Error::Derived(format!("End({}) is not k", cat.objects[i])));
            }
        }
        cat.cross_check()?;
        Ok(cat)
    }

    fn cross_check(&self) -> Result<()> {
        let mc = ModuleCategory::new(&self.rs)?;
        let ledger = DerivedLedger::new(&mc);
        for (a, x) in self.objects.iter().enumerate() {
            if self.objects[self.tau[a]] != ledger.tau_c(x) {
                return Err(Error::Derived(format!("τ({x}) disagrees")));
            }
            for (b, y) in self.objects.iter().enumerate() {
                if self.hom_dim(a, b) != ledger.hom_c(x, y)? {
                    return Err(Error::Derived(format!("Hom({x}, {y}) disagrees")));
                }
                let e = self.ext_dim(a, b);
                if e != ledger.ext_c(x, y)? || e != self.ext_dim(b, a) {
                    return Err(Error::Derived(format!("Ext({x}, {y}) disagrees")));
                }
            }
        }
        Ok(())
    }

    /// The fundamental-domain object in the `F`-orbit of a vertex.
    fn reduce(&self, v: Vertex) -> Result<usize> {
        let (mut up, mut down) = (v, v);
        for _ in 0..4 {
            if let Some(&i) = self.by_vertex.get(&up) {
                return Ok(i);
            }
            if let Some(&i) = self.by_vertex.get(&down) {
                return Ok(i);
            }
            up = self.zq.f(up);
            down = self.zq.f_inverse(down);
        }
        Err(Error::Derived(format!("vertex {v:?} has no representative")))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn zq(&self) -> &Zq {
        &self.zq
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[CObject] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &CObject {
        &self.objects[i]
    }

    pub fn index_of(&self, x: &CObject) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn index_of_root(&self, r: &Root) -> Option<usize> {
        CObject::from_root(r).ok().and_then(|o| self.index_of(&o))
    }

    pub fn root(&self, i: usize) -> Root {
        self.objects[i].to_root(self.rs.rank())
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    pub fn hom_dims(&self, a: usize, b: usize) -> (usize, usize) {
        self.dims[a][b]
    }

    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        let (d0, d1) = self.dims[a][b];
        d0 + d1
    }

    /// `dim Ext^1_C(X, Y) = dim Hom_C(X, τY)`, as `[1] = τ` in `C`.
    pub fn ext_dim(&self, a: usize, b: usize) -> usize {
        self.hom_dim(a, self.tau[b])
    }

    pub fn tau(&self, i: usize) -> usize {
        self.tau[i]
    }

    pub fn tau_inverse(&self, i: usize) -> usize {
        self.tau.iter().position(|&t| t == i).expect("τ is a bijection")
    }

    pub fn zero(&self, a: usize, b: usize) -> CMorphism {
        let (d0, d1) = self.dims[a][b];
        CMorphism {
            source: a,
            target: b,
            deg0: vec![Q::zero(); d0],
            deg1: vec![Q::zero(); d1],
        }
    }

    pub fn identity(&self, a: usize) -> CMorphism {
        let mut id = self.zero(a, a);
        id.deg0[0] = Q::one();
        id
    }

    /// Basis of `Hom_C(X, Y)`: degree 0 vectors first, then degree 1.
    pub fn hom_basis(&self, a: usize, b: usize) -> Vec<CMorphism> {
        let (d0, d1) = self.dims[a][b];
        (0..d0 + d1)
            .map(|k| {
                let mut m = self.zero(a, b);
                if k < d0 {
                    m.deg0[k] = Q::one();
                } else {
                    m.deg1[k - d0] = Q::one();
                }
                m
            })
            .collect()
    }

    /// `g ∘ f` for `f: X → Y`, `g: Y → Z`.
    pub fn compose(&self, f: &CMorphism, g: &CMorphism) -> Result<CMorphism> {
        if f.target != g.source {
            return Err(Error::Derived("morphisms are not composable".into()));
        }
        let (x, y, z) = (f.source, f.target, g.target);
        let hx = &self.hammocks[x];
        let hy = &self.hammocks[y];
        let vz = self.vertices[z];
        let zq = &self.zq;
        let id = |v: Vertex| v;
        let ff = |v: Vertex| zq.f(v);
        let mut out = self.zero(x, z);
        let apply = |acc: &mut Vec<Q>, t: crate::linalg::Matrix, g: &[Q]| {
            for (i, a) in acc.iter_mut().enumerate() {
                for (k, gk) in g.iter().enumerate() {
                    *a += &t[(i, k)] * gk;
                }
            }
        };
        if !g.deg0.is_empty() {
            apply(&mut out.deg0, transport(zq, hx, hy, &id, &f.deg0, vz), &g.deg0);
            if !f.deg1.is_empty() {
                apply(&mut out.deg1, transport(zq, hx, hy, &ff, &f.deg1, vz), &g.deg0);
            }
        }
        if !g.deg1.is_empty() {
            apply(&mut out.deg1, transport(zq, hx, hy, &id, &f.deg0, zq.f(vz)), &g.deg1);
        }
        // F(g1) ∘ f1 lands in Hom_D(X, F^2 Z), which vanishes by construction.
        Ok(out)
    }

    pub fn compose_path(&self, ms: &[CMorphism]) -> Result<CMorphism> {
        let (first, rest) = ms.split_first().ok_or_else(|| Error::Derived("empty path".into()))?;
        rest.iter().try_fold(first.clone(), |acc, g| self.compose(&acc, g))
    }

    /// Dimension table of `Hom_C` and `Ext_C` over all ordered pairs.
    pub fn hom_table(&self) -> Vec<HomEntry> {
        let mut out = Vec::with_capacity(self.len() * self.len());
        for a in 0..self.len() {
            for b in 0..self.len() {
                out.push(HomEntry {
                    source: self.objects[a].to_string(),
                    target: self.objects[b].to_string(),
                    hom: self.hom_dim(a, b),
                    ext: self.ext_dim(a, b),
                });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::DynkinType;

    fn cat(t: &str) -> ClusterCategory {
        ClusterCategory::new(&RootSystem::new(t.parse::<DynkinType>().unwrap())).unwrap()
    }

    #[test]
    fn builds_and_agrees_with_ledger() {
        for t in ["A1", "A2", "A3", "A4", "D4", "D5", "E6"] {
            let c = cat(t);
            let rs = c.root_system();
            assert_eq!(c.len(), rs.positive_roots().len() + rs.rank());
        }
    }

    #[test]
    fn identity_is_neutral() {
        let c = cat("D4");
        for a in 0..c.len() {
            for b in 0..c.len() {
                for f in c.hom_basis(a, b) {
                    assert_eq!(c.compose(&c.identity(a), &f).unwrap(), f);
                    assert_eq!(c.compose(&f, &c.identity(b)).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn composition_is_associative() {
        let c = cat("A3");
        let n = c.len();
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        for f in c.hom_basis(a, b) {
                            for g in c.hom_basis(b, d) {
                                for h in c.hom_basis(d, e) {
                                    let l = c.compose(&c.compose(&f, &g).unwrap(), &h).unwrap();
                                    let r = c.compose(&f, &c.compose(&g, &h).unwrap()).unwrap();
                                    assert_eq!(l, r);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hom_table_size() {
        let c = cat("A3");
        assert_eq!(c.hom_table().len(), 81);
    }
}
