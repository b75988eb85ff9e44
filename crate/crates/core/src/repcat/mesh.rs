//! The mesh category of `ZQ` for the alternating quiver, which models the
//! indecomposables of the bounded derived category together with explicit
//! morphisms.
//!
//! Vertex `(x, r)` sits at time `2r + [x is a source]`. Arrows run from a
//! sink `(j, r)` to each neighbouring source `(i, r)` and from a source
//! `(i, r)` to each neighbouring sink `(j, r + 1)`; `τ(x, r) = (x, r − 1)`.
//! Slice `0` holds the indecomposable projectives.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::root_system::{Root, RootSystem};

pub type Vertex = (usize, i64);

#[derive(Debug, Clone)]
pub struct Zq {
    rs: RootSystem,
    /// Nakayama permutation and slice of the injectives: `I_j = (π j, r_j)`.
    nakayama: Vec<(usize, i64)>,
    /// Module vertices with their dimension vectors.
    modules: HashMap<Vertex, Root>,
    by_root: HashMap<Root, Vertex>,
}

impl Zq {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        let mut modules = HashMap::new();
        let mut by_root = HashMap::new();
        // Additive knitting of dimension vectors, slice by slice.
        let mut slice: Vec<Option<Root>> = (0..n).map(|i| Some(rs.dim_projective(i))).collect();
        let mut r = 0i64;
        while slice.iter().any(Option::is_some) {
            for (x, d) in slice.iter().enumerate() {
                if let Some(d) = d {
                    modules.insert((x, r), d.clone());
                    by_root.insert(d.clone(), (x, r));
                }
            }
            let prev = slice.clone();
            let mut next: Vec<Option<Root>> = vec![None; n];
            let sinks = &rs.signs().plus;
            let sources = &rs.signs().minus;
            for &j in sinks.iter() {
                next[j] = knit_step(&prev[j], rs.neighbors(j).iter().map(|&i| &prev[i]), n);
            }
            for &i in sources.iter() {
                next[i] = knit_step(&prev[i], rs.neighbors(i).iter().map(|&j| &next[j]), n);
            }
            slice = next;
            r += 1;
        }
        if modules.len() != rs.positive_roots().len() || by_root.len() != modules.len() {
            return Err(Error::RootBijection(format!(
                "{} module vertices for {} positive roots",
                modules.len(),
                rs.positive_roots().len()
            )));
        }
        let nakayama = (0..n)
            .map(|j| {
                by_root
                    .get(&rs.dim_injective(j))
                    .copied()
                    .ok_or_else(|| Error::Derived(format!("injective I{} not found", j + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let zq = Zq {
            rs: rs.clone(),
            nakayama,
            modules,
            by_root,
        };
        zq.check_shift()?;
        Ok(zq)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn is_source(&self, x: usize) -> bool {
        self.rs.signs().is_source(x)
    }

    pub fn time(&self, v: Vertex) -> i64 {
        2 * v.1 + i64::from(self.is_source(v.0))
    }

    /// Vertices at time `t`.
    pub fn at_time(&self, t: i64) -> Vec<Vertex> {
        let r = t.div_euclid(2);
        let want_source = t.rem_euclid(2) == 1;
        (0..self.rs.rank())
            .filter(|&x| self.is_source(x) == want_source)
            .map(|x| (x, r))
            .collect()
    }

    /// Direct predecessors, in increasing node order.
    pub fn predecessors(&self, v: Vertex) -> Vec<Vertex> {
        let (x, r) = v;
        let mut ns = self.rs.neighbors(x);
        ns.sort_unstable();
        if self.is_source(x) {
            ns.into_iter().map(|j| (j, r)).collect()
        } else {
            ns.into_iter().map(|i| (i, r - 1)).collect()
        }
    }

    pub fn is_arrow(&self, a: Vertex, b: Vertex) -> bool {
        self.predecessors(b).contains(&a)
    }

    pub fn tau(&self, v: Vertex) -> Vertex {
        (v.0, v.1 - 1)
    }

    pub fn module_at(&self, v: Vertex) -> Option<&Root> {
        self.modules.get(&v)
    }

    pub fn vertex_of_module(&self, beta: &Root) -> Option<Vertex> {
        self.by_root.get(beta).copied()
    }

    /// The shift `[1]`: `P_j[1] = τ^{-1} I_j`.
    pub fn shift(&self, v: Vertex) -> Vertex {
        let (pj, rj) = self.nakayama[v.0];
        (pj, rj + 1 + v.1)
    }

    pub fn shift_inverse(&self, v: Vertex) -> Vertex {
        let j = self
            .nakayama
            .iter()
            .position(|&(p, _)| p == v.0)
            .expect("Nakayama permutation");
        (j, v.1 - self.nakayama[j].1 - 1)
    }

    /// `F = τ^{-1}[1]`.
    pub fn f(&self, v: Vertex) -> Vertex {
        let s = self.shift(v);
        (s.0, s.1 + 1)
    }

    pub fn f_inverse(&self, v: Vertex) -> Vertex {
        self.shift_inverse((v.0, v.1 - 1))
    }

    pub fn shifted_projective(&self, i: usize) -> Vertex {
        self.shift((i, 0))
    }

    /// `[1]` must be an automorphism of `ZQ` moving every vertex forward by
    /// the same amount of time.
    fn check_shift(&self) -> Result<()> {
        let n = self.rs.rank();
        let mut perm: Vec<usize> = self.nakayama.iter().map(|&(p, _)| p).collect();
        perm.sort_unstable();
        if perm != (0..n).collect::<Vec<_>>() {
            return Err(Error::Derived("Nakayama map is not a permutation".into()));
        }
        let dt = self.time(self.shift((0, 0))) - self.time((0, 0));
        for x in 0..n {
            for r in -1..2 {
                let v = (x, r);
                if self.time(self.shift(v)) - self.time(v) != dt {
                    return Err(Error::Derived("shift does not preserve time".into()));
                }
                for p in self.predecessors(v) {
                    if !self.is_arrow(self.shift(p), self.shift(v)) {
                        return Err(Error::Derived("shift is not a quiver map".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn knit_step<'a>(
    tau: &Option<Root>,
    preds: impl Iterator<Item = &'a Option<Root>>,
    n: usize,
) -> Option<Root> {
    let tau = tau.as_ref()?;
    let mut sum = Root::zero(n);
    for p in preds.flatten() {
        sum = sum.add(p);
    }
    let d = sum.sub(tau);
    d.is_positive().then_some(d)
}

/// The functor `Hom(x, −)` on the mesh category, knitted forward from `x`.
///
/// For `y ≠ x`, `V(y)` is the cokernel of `V(τy) → ⊕_{E→y} V(E)`; the arrow
/// maps `E → y` are the column blocks of the cokernel projection, taken in
/// reduced echelon form so that every basis vector of `V(y)` is the image of
/// one basis vector of some `V(E)` (its section).
#[derive(Debug, Clone)]
pub struct Hammock {
    pub source: Vertex,
    dims: HashMap<Vertex, usize>,
    maps: HashMap<(Vertex, Vertex), Matrix>,
    sections: HashMap<Vertex, Vec<(Vertex, usize)>>,
    last_time: i64,
}

impl Hammock {
    pub fn new(zq: &Zq, x: Vertex) -> Self {
        let mut h = Hammock {
            source: x,
            dims: HashMap::new(),
            maps: HashMap::new(),
            sections: HashMap::new(),
            last_time: zq.time(x),
        };
        h.dims.insert(x, 1);
        let mut zeros = 0;
        let mut t = zq.time(x) + 1;
        while zeros < 2 {
            let mut any = false;
            for y in zq.at_time(t) {
                let preds = zq.predecessors(y);
                let ty = zq.tau(y);
                let widths: Vec<usize> = preds.iter().map(|&e| h.dim(e)).collect();
                let total: usize = widths.iter().sum();
                let blocks: Vec<Matrix> = preds
                    .iter()
                    .map(|&e| h.map(ty, e))
                    .collect();
                let mesh = Matrix::vstack(&blocks, h.dim(ty));
                let (coker, pivots) = mesh.left_kernel_rref();
                let d = coker.rows();
                debug_assert_eq!(coker.cols(), total);
                if d == 0 {
                    continue;
                }
                any = true;
                h.dims.insert(y, d);
                let mut col = 0;
                let mut owner = Vec::with_capacity(total);
                for (&e, &w) in preds.iter().zip(&widths) {
                    if w > 0 {
                        h.maps.insert((e, y), coker.submatrix(0..d, col..col + w));
                    }
                    owner.extend((0..w).map(|c| (e, c)));
                    col += w;
                }
                h.sections.insert(y, pivots.iter().map(|&p| owner[p]).collect());
            }
            if any {
                zeros = 0;
                h.last_time = t;
            } else {
                zeros += 1;
            }
            t += 1;
        }
        h
    }

    pub fn dim(&self, y: Vertex) -> usize {
        self.dims.get(&y).copied().unwrap_or(0)
    }

    /// `V(a → b)`, a `dim V(b) × dim V(a)` matrix.
    pub fn map(&self, a: Vertex, b: Vertex) -> Matrix {
        self.maps
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(b), self.dim(a)))
    }

    pub fn support(&self) -> impl Iterator<Item = (&Vertex, &usize)> {
        self.dims.iter()
    }

    pub fn last_time(&self) -> i64 {
        self.last_time
    }

    fn section(&self, y: Vertex) -> &[(Vertex, usize)] {
        self.sections.get(&y).map_or(&[], Vec::as_slice)
    }
}

/// Precomposition with a morphism `f: x → φ(y)`: the matrix of
/// `Hom(y, target) → Hom(x, φ(target))`, `g ↦ φ(g) ∘ f`, where `φ` is an
/// automorphism of `ZQ` acting on the mesh category by relabelling vertices.
pub fn transport(
    zq: &Zq,
    hx: &Hammock,
    hy: &Hammock,
    phi: &dyn Fn(Vertex) -> Vertex,
    f: &[Q],
    target: Vertex,
) -> Matrix {
    let y = hy.source;
    assert_eq!(f.len(), hx.dim(phi(y)), "f must lie in Hom(x, φy)");
    let rows_of = |w: Vertex| hx.dim(phi(w));
    if hy.dim(target) == 0 {
        return Matrix::zeros(rows_of(target), 0);
    }
    let mut memo: HashMap<Vertex, Matrix> = HashMap::new();
    memo.insert(y, Matrix::column(f));
    let end = zq.time(target);
    for t in zq.time(y) + 1..=end {
        for w in zq.at_time(t) {
            let d = hy.dim(w);
            if d == 0 {
                continue;
            }
            let mut m = Matrix::zeros(rows_of(w), d);
            for (r, &(e, c)) in hy.section(w).iter().enumerate() {
                let arrow = hx.map(phi(e), phi(w));
                let te = &memo[&e];
                for i in 0..m.rows() {
                    let mut acc = Q::zero();
                    for k in 0..te.rows() {
                        acc += &arrow[(i, k)] * &te[(k, c)];
                    }
                    m[(i, r)] = acc;
                }
            }
            memo.insert(w, m);
        }
    }
    memo.remove(&target).expect("target reached")
}

/// Identity element of `Hom(x, x)`.
pub fn identity_vector() -> Vec<Q> {
    vec![Q::one()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::DynkinType;

    #[test]
    fn a2_layout() {
        let rs = RootSystem::new(DynkinType::a(2));
        let zq = Zq::new(&rs).unwrap();
        assert_eq!(zq.module_at((1, 0)), Some(&Root(vec![0, 1])));
        assert_eq!(zq.module_at((0, 0)), Some(&Root(vec![1, 1])));
        assert_eq!(zq.module_at((1, 1)), Some(&Root(vec![1, 0])));
        assert_eq!(zq.shifted_projective(0), (1, 2));
        assert_eq!(zq.shifted_projective(1), (0, 1));
        for v in [(0, 0), (1, 3), (0, -2)] {
            assert_eq!(zq.shift_inverse(zq.shift(v)), v);
            assert_eq!(zq.f_inverse(zq.f(v)), v);
        }
    }

    #[test]
    fn hammock_dims_match_module_homs() {
        for t in ["A4", "D4", "E6"] {
            let rs = RootSystem::new(t.parse().unwrap());
            let zq = Zq::new(&rs).unwrap();
            let mc = super::super::ModuleCategory::new(&rs).unwrap();
            for a in rs.positive_roots() {
                let h = Hammock::new(&zq, zq.vertex_of_module(a).unwrap());
                for b in rs.positive_roots() {
                    let vb = zq.vertex_of_module(b).unwrap();
                    assert_eq!(h.dim(vb), mc.hom(a, b).unwrap(), "{t} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn mesh_relations_vanish() {
        let rs = RootSystem::new(DynkinType::d(5));
        let zq = Zq::new(&rs).unwrap();
        let h = Hammock::new(&zq, (2, 0));
        for (&y, _) in h.support() {
            if y == h.source {
                continue;
            }
            let ty = zq.tau(y);
            let mut sum = Matrix::zeros(h.dim(y), h.dim(ty));
            for e in zq.predecessors(y) {
                sum.add_assign(&h.map(e, y).mul(&h.map(ty, e)));
            }
            assert!(sum.is_zero());
        }
    }
}
