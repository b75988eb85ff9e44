//! Explicit representations of the alternating quiver and the module
//! category they span.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::root_system::{Root, RootSystem};

/// A representation of a quiver without multiple arrows: one vector space
/// dimension per vertex and one matrix per arrow (`dims[t] x dims[s]` for an
/// arrow `s -> t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
    pub maps: Vec<Matrix>,
}

/// A morphism of representations: one matrix per vertex.
pub type Intertwiner = Vec<Matrix>;

impl Representation {
    pub fn zero(n: usize, arrows: &[(usize, usize)]) -> Self {
        Representation {
            dims: vec![0; n],
            arrows: arrows.to_vec(),
            maps: arrows.iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn simple(n: usize, arrows: &[(usize, usize)], i: usize) -> Self {
        let mut dims = vec![0; n];
        dims[i] = 1;
        let maps = arrows
            .iter()
            .map(|&(s, t)| Matrix::zeros(dims[t], dims[s]))
            .collect();
        Representation {
            dims,
            arrows: arrows.to_vec(),
            maps,
        }
    }

    /// Projective cover of the simple at `i` for a quiver whose underlying
    /// graph is a tree: one basis vector per vertex reachable from `i`.
    pub fn projective(n: usize, arrows: &[(usize, usize)], i: usize) -> Self {
        let mut dims = vec![0; n];
        dims[i] = 1;
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &(s, t) in arrows {
                if s == v && dims[t] == 0 {
                    dims[t] = 1;
                    stack.push(t);
                }
            }
        }
        let maps = arrows
            .iter()
            .map(|&(s, t)| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                if dims[s] == 1 && dims[t] == 1 {
                    m[(0, 0)] = Q::one();
                }
                m
            })
            .collect();
        Representation {
            dims,
            arrows: arrows.to_vec(),
            maps,
        }
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn dim_vector(&self) -> Root {
        Root(self.dims.iter().map(|&d| d as i32).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// BGP reflection at a source `k`: the space at `k` becomes the cokernel
    /// of `M_k -> ⊕_{k->j} M_j`, and the arrows at `k` turn around.
    pub fn reflect_at_source(&self, k: usize) -> Representation {
        assert!(
            self.arrows.iter().all(|&(_, t)| t != k),
            "reflection vertex must be a source"
        );
        let out: Vec<usize> = (0..self.arrows.len())
            .filter(|&a| self.arrows[a].0 == k)
            .collect();
        let blocks: Vec<Matrix> = out.iter().map(|&a| self.maps[a].clone()).collect();
        let phi = Matrix::vstack(&blocks, self.dims[k]);
        let (coker, _) = phi.left_kernel_rref();
        let new_dim = coker.rows();
        let mut rep = self.clone();
        rep.dims[k] = new_dim;
        let mut col = 0;
        for &a in &out {
            let j = self.arrows[a].1;
            rep.arrows[a] = (j, k);
            rep.maps[a] = coker.submatrix(0..new_dim, col..col + self.dims[j]);
            col += self.dims[j];
        }
        rep
    }

    /// Matrix of the linear system whose kernel is `Hom(self, other)`, with
    /// unknowns ordered vertex by vertex, row-major within each block.
    fn hom_system(&self, other: &Representation) -> (Matrix, Vec<usize>) {
        assert_eq!(self.arrows, other.arrows, "representations of different quivers");
        let n = self.n();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for v in 0..n {
            offsets.push(total);
            total += other.dims[v] * self.dims[v];
        }
        offsets.push(total);
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            let m = &self.maps[a];
            let nn = &other.maps[a];
            // phi_t * M_a - N_a * phi_s = 0, entry (r, c) for r < N_t, c < M_s
            for r in 0..other.dims[t] {
                for c in 0..self.dims[s] {
                    let mut row = vec![Q::zero(); total];
                    for k in 0..self.dims[t] {
                        let idx = offsets[t] + r * self.dims[t] + k;
                        row[idx] += &m[(k, c)];
                    }
                    for k in 0..other.dims[s] {
                        let idx = offsets[s] + k * self.dims[s] + c;
                        row[idx] -= &nn[(r, k)];
                    }
                    rows.push(row);
                }
            }
        }
        let mat = if rows.is_empty() {
            Matrix::zeros(0, total)
        } else {
            Matrix::from_rows(&rows)
        };
        (mat, offsets)
    }

    pub fn hom_dim(&self, other: &Representation) -> usize {
        let (m, offsets) = self.hom_system(other);
        offsets[self.n()] - m.rank()
    }

    pub fn hom_basis(&self, other: &Representation) -> Vec<Intertwiner> {
        let (m, offsets) = self.hom_system(other);
        let k = m.kernel();
        (0..k.cols())
            .map(|b| {
                (0..self.n())
                    .map(|v| {
                        let mut phi = Matrix::zeros(other.dims[v], self.dims[v]);
                        for r in 0..other.dims[v] {
                            for c in 0..self.dims[v] {
                                phi[(r, c)] = k[(offsets[v] + r * self.dims[v] + c, b)].clone();
                            }
                        }
                        phi
                    })
                    .collect()
            })
            .collect()
    }

    /// Check that a family of vertex matrices commutes with all arrows.
    pub fn is_morphism(&self, other: &Representation, phi: &Intertwiner) -> bool {
        self.arrows.iter().enumerate().all(|(a, &(s, t))| {
            phi[t].mul(&self.maps[a]) == other.maps[a].mul(&phi[s])
        })
    }
}

/// Euler form of the alternating quiver, `Σ a_i b_i − Σ_{i→j} a_i b_j`.
pub fn euler_form(arrows: &[(usize, usize)], a: &Root, b: &Root) -> i32 {
    let mut s: i32 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
    for &(i, j) in arrows {
        s -= a.0[i] * b.0[j];
    }
    s
}

/// Every indecomposable module over the alternating quiver, built as
/// `τ^{-k} P_i` by repeated source reflections, indexed like the positive
/// roots of the root system.
#[derive(Debug, Clone)]
pub struct ModuleCategory {
    rs: RootSystem,
    arrows: Vec<(usize, usize)>,
    reps: Vec<Representation>,
    /// `(i, k)` with the module equal to `τ^{-k} P_i`.
    orbit: Vec<(usize, usize)>,
    hom: Vec<Vec<usize>>,
}

impl ModuleCategory {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        let arrows: Vec<(usize, usize)> = rs
            .dynkin_type()
            .edges()
            .into_iter()
            .map(|(a, b)| if rs.signs().is_source(a) { (a, b) } else { (b, a) })
            .collect();
        let count = rs.positive_roots().len();
        let mut reps: Vec<Option<Representation>> = vec![None; count];
        let mut orbit = vec![(0, 0); count];
        for i in 0..n {
            let mut m = Representation::projective(n, &arrows, i);
            let mut k = 0;
            while !m.is_zero() {
                let dim = m.dim_vector();
                let idx = rs
                    .index_of(&dim)
                    .filter(|_| dim.is_positive())
                    .ok_or_else(|| Error::NotPositiveRoot(dim.to_string()))?
                    - n;
                if reps[idx].is_some() {
                    return Err(Error::Derived(format!("{dim} constructed twice")));
                }
                if m.hom_dim(&m) != 1 {
                    return Err(Error::Derived(format!("{dim} is not a brick")));
                }
                let next = tau_inverse(&m, rs);
                reps[idx] = Some(m);
                orbit[idx] = (i, k);
                m = next;
                k += 1;
            }
        }
        let reps: Vec<Representation> = reps
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.ok_or_else(|| Error::Derived(format!("no module for {}", rs.positive_roots()[i])))
            })
            .collect::<Result<_>>()?;
        let hom = reps
            .iter()
            .map(|m| reps.iter().map(|nn| m.hom_dim(nn)).collect())
            .collect();
        Ok(ModuleCategory {
            rs: rs.clone(),
            arrows,
            reps,
            orbit,
            hom,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    fn idx(&self, beta: &Root) -> Result<usize> {
        match self.rs.index_of(beta) {
            Some(i) if beta.is_positive() => Ok(i - self.rs.rank()),
            _ => Err(Error::NotPositiveRoot(beta.to_string())),
        }
    }

    /// The indecomposable with dimension vector `beta`.
    pub fn indecomposable(&self, beta: &Root) -> Result<&Representation> {
        Ok(&self.reps[self.idx(beta)?])
    }

    pub fn orbit_position(&self, beta: &Root) -> Result<(usize, usize)> {
        Ok(self.orbit[self.idx(beta)?])
    }

    pub fn hom(&self, m: &Root, n: &Root) -> Result<usize> {
        Ok(self.hom[self.idx(m)?][self.idx(n)?])
    }

    /// `dim Ext^1(M, N) = dim Hom(M, N) − ⟨M, N⟩`, which must be nonnegative.
    pub fn ext(&self, m: &Root, n: &Root) -> Result<usize> {
        let h = self.hom(m, n)? as i32;
        let e = h - euler_form(&self.arrows, m, n);
        if e < 0 {
            return Err(Error::NegativeExt(m.to_string(), n.to_string()));
        }
        Ok(e as usize)
    }

    pub fn is_projective(&self, beta: &Root) -> bool {
        (0..self.rs.rank()).any(|i| self.rs.dim_projective(i) == *beta)
    }

    pub fn is_injective(&self, beta: &Root) -> bool {
        self.injective_index(beta).is_some()
    }

    pub fn injective_index(&self, beta: &Root) -> Option<usize> {
        (0..self.rs.rank()).find(|&i| self.rs.dim_injective(i) == *beta)
    }

    pub fn projective_index(&self, beta: &Root) -> Option<usize> {
        (0..self.rs.rank()).find(|&i| self.rs.dim_projective(i) == *beta)
    }

    /// AR translate on dimension vectors; `None` for projectives.
    pub fn tau(&self, beta: &Root) -> Option<Root> {
        if self.is_projective(beta) {
            None
        } else {
            Some(self.rs.coxeter(beta))
        }
    }

    /// Inverse AR translate; `None` for injectives.
    pub fn tau_inverse(&self, beta: &Root) -> Option<Root> {
        if self.is_injective(beta) {
            None
        } else {
            Some(self.rs.inverse_coxeter(beta))
        }
    }
}

/// `τ^{-1}` as the Coxeter functor: reflect at all sources of the alternating
/// quiver, then at all sources of the opposite quiver.
pub fn tau_inverse(m: &Representation, rs: &RootSystem) -> Representation {
    let mut out = m.clone();
    for &i in &rs.signs().minus {
        out = out.reflect_at_source(i);
    }
    for &j in &rs.signs().plus {
        out = out.reflect_at_source(j);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::DynkinType;

    fn cat(t: &str) -> ModuleCategory {
        ModuleCategory::new(&RootSystem::new(t.parse::<DynkinType>().unwrap())).unwrap()
    }

    #[test]
    fn a2_modules() {
        let c = cat("A2");
        assert_eq!(c.len(), 3);
        let top = c.indecomposable(&Root(vec![1, 1])).unwrap();
        assert_eq!(top.maps[0], Matrix::from_i64(&[&[1]]));
        let s1 = Root(vec![1, 0]);
        let s2 = Root(vec![0, 1]);
        assert_eq!(c.hom(&s1, &s1).unwrap(), 1);
        assert_eq!(c.hom(&s1, &s2).unwrap(), 0);
        // arrow 1 -> 2: the source simple extends the sink simple
        assert_eq!(c.ext(&s1, &s2).unwrap(), 1);
        assert_eq!(c.ext(&s2, &s1).unwrap(), 0);
    }

    #[test]
    fn projectives_represent_coordinates() {
        let c = cat("D4");
        let rs = c.root_system().clone();
        for i in 0..4 {
            let p = rs.dim_projective(i);
            for beta in rs.positive_roots() {
                assert_eq!(c.hom(&p, beta).unwrap(), beta.0[i] as usize);
                assert_eq!(c.ext(&p, beta).unwrap(), 0);
            }
        }
    }

    #[test]
    fn indecomposables_are_rigid_bricks() {
        for t in ["A3", "D4", "D5"] {
            let c = cat(t);
            for beta in c.root_system().positive_roots() {
                assert_eq!(c.hom(beta, beta).unwrap(), 1);
                assert_eq!(c.ext(beta, beta).unwrap(), 0);
            }
        }
    }

    #[test]
    fn hom_basis_elements_are_morphisms() {
        let c = cat("D4");
        let rs = c.root_system().clone();
        for a in rs.positive_roots() {
            for b in rs.positive_roots() {
                let m = c.indecomposable(a).unwrap();
                let n = c.indecomposable(b).unwrap();
                let basis = m.hom_basis(n);
                assert_eq!(basis.len(), c.hom(a, b).unwrap());
                for phi in &basis {
                    assert!(m.is_morphism(n, phi));
                }
            }
        }
    }

    #[test]
    fn coxeter_matches_reflection_functors() {
        let c = cat("E6");
        let rs = c.root_system().clone();
        for beta in rs.positive_roots() {
            if let Some(next) = c.tau_inverse(beta) {
                let m = c.indecomposable(beta).unwrap();
                assert_eq!(tau_inverse(m, &rs).dim_vector(), next);
            }
        }
    }
}
