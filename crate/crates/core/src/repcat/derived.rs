//! Objects of the cluster category and the dimension ledger that computes
//! Hom spaces through lifts to the derived category.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::representation::ModuleCategory;
use crate::error::{Error, Result};
use crate::root_system::Root;

/// An indecomposable of the cluster category, taken from the fundamental
/// domain: a module or a shifted projective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CObject {
    Module(Root),
    Shifted(usize),
}

impl CObject {
    /// `−α_i ↦ P_i[1]`, a positive root `β ↦ M_β`.
    pub fn from_root(r: &Root) -> Result<Self> {
        if let Some(i) = r.negative_simple_index() {
            Ok(CObject::Shifted(i))
        } else if r.is_positive() {
            Ok(CObject::Module(r.clone()))
        } else {
            Err(Error::NotARoot(r.0.clone()))
        }
    }

    /// Inverse of [`from_root`](Self::from_root); needs the rank for `P_i[1]`.
    pub fn to_root(&self, n: usize) -> Root {
        match self {
            CObject::Module(b) => b.clone(),
            CObject::Shifted(i) => Root::negative_simple(n, *i),
        }
    }

    pub fn is_module(&self) -> bool {
        matches!(self, CObject::Module(_))
    }
}

impl fmt::Display for CObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CObject::Module(b) => write!(f, "M({b})"),
            CObject::Shifted(i) => write!(f, "P{}[1]", i + 1),
        }
    }
}

/// `M[shift]` in the bounded derived category, `M` an indecomposable module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DObject {
    pub module: Root,
    pub shift: i32,
}

impl fmt::Display for DObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({})[{}]", self.module, self.shift)
    }
}

/// Hom and Ext dimensions in the derived and cluster categories, computed
/// from module data alone.
#[derive(Debug, Clone)]
pub struct DerivedLedger<'a> {
    modules: &'a ModuleCategory,
}

impl<'a> DerivedLedger<'a> {
    pub fn new(modules: &'a ModuleCategory) -> Self {
        DerivedLedger { modules }
    }

    pub fn modules(&self) -> &ModuleCategory {
        self.modules
    }

    pub fn lift(&self, x: &CObject) -> DObject {
        match x {
            CObject::Module(b) => DObject {
                module: b.clone(),
                shift: 0,
            },
            CObject::Shifted(i) => DObject {
                module: self.modules.root_system().dim_projective(*i),
                shift: 1,
            },
        }
    }

    pub fn shift(&self, x: &DObject, k: i32) -> DObject {
        DObject {
            module: x.module.clone(),
            shift: x.shift + k,
        }
    }

    /// `F = τ^{-1}[1]`, using `τ^{-1} I_j = P_j[1]`.
    pub fn f(&self, x: &DObject) -> DObject {
        match self.modules.injective_index(&x.module) {
            Some(j) => DObject {
                module: self.modules.root_system().dim_projective(j),
                shift: x.shift + 2,
            },
            None => DObject {
                module: self.modules.tau_inverse(&x.module).expect("not injective"),
                shift: x.shift + 1,
            },
        }
    }

    /// `F^{-1} = τ[-1]`, using `τ P_j = I_j[-1]`.
    pub fn f_inverse(&self, x: &DObject) -> DObject {
        match self.modules.projective_index(&x.module) {
            Some(j) => DObject {
                module: self.modules.root_system().dim_injective(j),
                shift: x.shift - 2,
            },
            None => DObject {
                module: self.modules.tau(&x.module).expect("not projective"),
                shift: x.shift - 1,
            },
        }
    }

    pub fn f_power(&self, x: &DObject, k: i32) -> DObject {
        let mut out = x.clone();
        for _ in 0..k.max(0) {
            out = self.f(&out);
        }
        for _ in 0..(-k).max(0) {
            out = self.f_inverse(&out);
        }
        out
    }

    /// `dim Hom_D(M[a], N[b])` for a hereditary category.
    pub fn hom_d(&self, x: &DObject, y: &DObject) -> Result<usize> {
        match y.shift - x.shift {
            0 => self.modules.hom(&x.module, &y.module),
            1 => self.modules.ext(&x.module, &y.module),
            _ => Ok(0),
        }
    }

    /// Summands `dim Hom_D(X, F^k Y)` for `k` in `-2..=3`.
    pub fn orbit_terms(&self, x: &DObject, y: &DObject) -> Result<Vec<(i32, usize)>> {
        (-2..=3)
            .map(|k| Ok((k, self.hom_d(x, &self.f_power(y, k))?)))
            .collect()
    }

    /// `dim Hom_C(X, Y) = dim Hom_D(X, Y) + dim Hom_D(X, FY)`; the other
    /// orbit terms must vanish on the fundamental domain.
    pub fn hom_c(&self, x: &CObject, y: &CObject) -> Result<usize> {
        let (lx, ly) = (self.lift(x), self.lift(y));
        let mut total = 0;
        for (k, d) in self.orbit_terms(&lx, &ly)? {
            if d > 0 && !(k == 0 || k == 1) {
                return Err(Error::Derived(format!(
                    "Hom_D({x}, F^{k} {y}) is nonzero"
                )));
            }
            total += d;
        }
        Ok(total)
    }

    /// `dim Hom_C(X, Y[1])`, summed over the whole `F`-orbit of `Y[1]`.
    pub fn ext_c(&self, x: &CObject, y: &CObject) -> Result<usize> {
        let lx = self.lift(x);
        let ly = self.shift(&self.lift(y), 1);
        Ok(self.orbit_terms(&lx, &ly)?.iter().map(|&(_, d)| d).sum())
    }

    /// AR translate in the cluster category, on the fundamental domain.
    pub fn tau_c(&self, x: &CObject) -> CObject {
        match x {
            CObject::Shifted(i) => {
                CObject::Module(self.modules.root_system().dim_injective(*i))
            }
            CObject::Module(b) => match self.modules.projective_index(b) {
                Some(i) => CObject::Shifted(i),
                None => CObject::Module(self.modules.tau(b).expect("not projective")),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::representation::euler_form;
    use crate::root_system::{DynkinType, RootSystem};

    fn objects(rs: &RootSystem) -> Vec<CObject> {
        rs.almost_positive_roots()
            .iter()
            .map(|r| CObject::from_root(r).unwrap())
            .collect()
    }

    #[test]
    fn shifted_projective_cases() {
        let rs = RootSystem::new(DynkinType::a(3));
        let mc = ModuleCategory::new(&rs).unwrap();
        let l = DerivedLedger::new(&mc);
        for h in 0..3 {
            let ph1 = l.lift(&CObject::Shifted(h));
            assert_eq!(l.hom_d(&ph1, &ph1).unwrap(), 1);
            let ph = rs.dim_projective(h);
            for m in rs.positive_roots() {
                let lm = l.lift(&CObject::Module(m.clone()));
                assert_eq!(l.hom_d(&ph1, &lm).unwrap(), 0);
                let e = mc.hom(m, &ph).unwrap() as i32 - euler_form(mc.arrows(), m, &ph);
                assert_eq!(l.hom_d(&lm, &ph1).unwrap() as i32, e);
            }
        }
    }

    #[test]
    fn tau_is_a_bijection_and_serre_duality_holds() {
        for t in ["A3", "D4", "A5"] {
            let rs = RootSystem::new(t.parse().unwrap());
            let mc = ModuleCategory::new(&rs).unwrap();
            let l = DerivedLedger::new(&mc);
            let objs = objects(&rs);
            let mut images: Vec<CObject> = objs.iter().map(|x| l.tau_c(x)).collect();
            images.sort();
            let mut sorted = objs.clone();
            sorted.sort();
            assert_eq!(images, sorted);
            for x in &objs {
                for y in &objs {
                    let e = l.ext_c(x, y).unwrap();
                    assert_eq!(e, l.ext_c(y, x).unwrap(), "{x} {y}");
                    assert_eq!(e, l.hom_c(y, &l.tau_c(x)).unwrap(), "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn tau_of_shifted_projective_is_injective() {
        let rs = RootSystem::new(DynkinType::d(4));
        let mc = ModuleCategory::new(&rs).unwrap();
        let l = DerivedLedger::new(&mc);
        for i in 0..4 {
            assert_eq!(
                l.tau_c(&CObject::Shifted(i)),
                CObject::Module(rs.dim_injective(i))
            );
        }
    }

    #[test]
    fn compatibility_degree_is_ext() {
        for t in ["A3", "D4"] {
            let rs = RootSystem::new(t.parse().unwrap());
            let mc = ModuleCategory::new(&rs).unwrap();
            let l = DerivedLedger::new(&mc);
            for a in rs.almost_positive_roots() {
                for b in rs.almost_positive_roots() {
                    let x = CObject::from_root(a).unwrap();
                    let y = CObject::from_root(b).unwrap();
                    assert_eq!(
                        rs.compatibility_degree(a, b) as usize,
                        l.ext_c(&x, &y).unwrap(),
                        "{a} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn indecomposables_are_rigid_in_c() {
        let rs = RootSystem::new(DynkinType::d(5));
        let mc = ModuleCategory::new(&rs).unwrap();
        let l = DerivedLedger::new(&mc);
        for x in objects(&rs) {
            assert_eq!(l.ext_c(&x, &x).unwrap(), 0);
            assert_eq!(l.hom_c(&x, &x).unwrap(), 1);
        }
    }
}
