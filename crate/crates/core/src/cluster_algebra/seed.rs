use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::root_system::{BipartiteSigns, DynkinType};

/// An exchange quiver together with one Laurent polynomial per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub quiver: Quiver,
    pub vars: Vec<LaurentPolynomial>,
}

/// Exponent vectors over the positions of a seed, one per side of the
/// exchange relation at some vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMonomials {
    /// `∏_{b_xz > 0} x^{b_xz}`
    pub positive: Vec<i32>,
    /// `∏_{b_xz < 0} x^{-b_xz}`
    pub negative: Vec<i32>,
}

/// The alternating orientation: every arrow runs from a source (`I−`) to a
/// sink (`I+`).
pub fn alternating_quiver(ty: DynkinType) -> Quiver {
    let signs = BipartiteSigns::for_type(ty);
    let arrows: Vec<(usize, usize)> = ty
        .edges()
        .into_iter()
        .map(|(a, b)| if signs.is_source(a) { (a, b) } else { (b, a) })
        .collect();
    Quiver::from_arrows(ty.rank, &arrows)
}

pub fn initial_seed(ty: DynkinType) -> Seed {
    Seed::initial(alternating_quiver(ty))
}

impl Seed {
    /// `(Q, (x_1, ..., x_n))`.
    pub fn initial(quiver: Quiver) -> Self {
        let n = quiver.n();
        let vars = (0..n).map(|i| LaurentPolynomial::var(n, i)).collect();
        Seed { quiver, vars }
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn exchange_monomials(&self, k: usize) -> Result<ExchangeMonomials> {
        let n = self.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, rank: n });
        }
        let b = self.quiver.matrix();
        let positive = (0..n).map(|x| b[x][k].max(0)).collect();
        let negative = (0..n).map(|x| (-b[x][k]).max(0)).collect();
        Ok(ExchangeMonomials { positive, negative })
    }

    /// Evaluate an exponent vector over positions as a product of this
    /// seed's variables.
    pub fn monomial(&self, exponents: &[i32]) -> LaurentPolynomial {
        let nvars = self.vars.first().map_or(0, LaurentPolynomial::nvars);
        let mut out = LaurentPolynomial::one(nvars);
        for (v, &e) in self.vars.iter().zip(exponents) {
            debug_assert!(e >= 0);
            if !e.is_zero() {
                out = out.mul(&v.pow(e as u32));
            }
        }
        out
    }

    /// Seed mutation at `k`; the new variable is obtained by exact division.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let m = self.exchange_monomials(k)?;
        let sum = self.monomial(&m.positive).add(&self.monomial(&m.negative));
        let fresh = sum.div_exact(&self.vars[k])?;
        let mut vars = self.vars.clone();
        vars[k] = fresh;
        Ok(Seed {
            quiver: self.quiver.mutate(k)?,
            vars,
        })
    }

    pub fn mutate_path(&self, path: &[usize]) -> Result<Seed> {
        path.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// The same seed with positions reordered so that the variables increase.
    pub fn normalized(&self) -> Seed {
        let mut perm: Vec<usize> = (0..self.n()).collect();
        perm.sort_by(|&a, &b| self.vars[a].cmp(&self.vars[b]));
        Seed {
            quiver: self.quiver.permuted(&perm),
            vars: perm.iter().map(|&p| self.vars[p].clone()).collect(),
        }
    }

    /// Hex SHA-256 of the JSON encoding of the normalized seed. Seeds that
    /// differ only by a relabeling of positions share an id.
    pub fn id(&self) -> String {
        let bytes = serde_json::to_vec(&self.normalized()).expect("seeds serialize");
        hex::encode(Sha256::digest(bytes))
    }
}

pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    s.mutate(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_first_mutation() {
        let s = initial_seed(DynkinType::a(2));
        assert_eq!(s.quiver.entry(0, 1), 1);
        let m = s.mutate(0).unwrap();
        assert_eq!(m.vars[0].to_string(), "(x2 + 1)/x1");
        let em = s.exchange_monomials(0).unwrap();
        assert_eq!(em.positive, vec![0, 0]);
        assert_eq!(em.negative, vec![0, 1]);
    }

    #[test]
    fn mutation_twice_is_identity() {
        let s = initial_seed(DynkinType::d(4));
        for k in 0..4 {
            assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
        }
    }

    #[test]
    fn a2_pentagon() {
        let s = initial_seed(DynkinType::a(2));
        let t = s.mutate_path(&[0, 1, 0, 1, 0]).unwrap();
        // five steps return the initial cluster with positions swapped
        let mut a = t.vars.clone();
        a.sort();
        let mut b = s.vars.clone();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(t.vars[0], s.vars[1]);
        assert_eq!(t.id(), s.id());
        assert_ne!(s.mutate(0).unwrap().id(), s.id());
    }

    #[test]
    fn a3_alternating() {
        let q = alternating_quiver(DynkinType::a(3));
        assert_eq!(q.arrows(), vec![(0, 1, 1), (2, 1, 1)]);
    }

    #[test]
    fn isolated_vertex_monomials() {
        let s = Seed::initial(Quiver::empty(2));
        let m = s.exchange_monomials(1).unwrap();
        assert_eq!(m.positive, vec![0, 0]);
        assert_eq!(m.negative, vec![0, 0]);
        assert_eq!(s.mutate(1).unwrap().vars[1].to_string(), "2/x2");
    }
}
