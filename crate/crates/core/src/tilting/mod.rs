//! Tilting objects of the cluster category, the quiver of their endomorphism
//! algebras, and approximation triangles.

pub mod checks;
pub mod example;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cluster_algebra::Atlas;
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};
use crate::repcat::{span_rank, CMorphism, ClusterCategory};

/// `n` pairwise Ext-orthogonal indecomposables, listed by cluster position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingObject {
    /// Object indices in the cluster category.
    pub summands: Vec<usize>,
    pub cluster: Option<usize>,
}

impl TiltingObject {
    pub fn new(cat: &ClusterCategory, summands: Vec<usize>) -> Result<Self> {
        is_tilting(cat, &summands)?;
        Ok(TiltingObject {
            summands,
            cluster: None,
        })
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Summands with position `p` removed.
    pub fn without(&self, p: usize) -> Vec<usize> {
        let mut s = self.summands.clone();
        s.remove(p);
        s
    }
}

/// Errors unless `summands` are `n` distinct, pairwise Ext-orthogonal objects.
pub fn is_tilting(cat: &ClusterCategory, summands: &[usize]) -> Result<()> {
    let n = cat.root_system().rank();
    let mut sorted = summands.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != summands.len() || summands.len() != n {
        return Err(Error::NotTilting(
            format!("{} summands", summands.len()),
            format!("rank {n}"),
        ));
    }
    for &a in summands {
        for &b in summands {
            if cat.ext_dim(a, b) != 0 {
                return Err(Error::NotTilting(
                    cat.object(a).to_string(),
                    cat.object(b).to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// The tilting object whose summands correspond to the variables of an
/// atlas cluster, position by position.
pub fn tilting_from_cluster(
    cat: &ClusterCategory,
    atlas: &Atlas,
    cluster: usize,
) -> Result<TiltingObject> {
    let summands = atlas.cluster(cluster)
        .vars
        .iter()
        .map(|&v| {
            let r = atlas.root_of(v);
            cat.index_of_root(r).ok_or_else(|| Error::NotARoot(r.0.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = TiltingObject::new(cat, summands)?;
    t.cluster = Some(cluster);
    Ok(t)
}

/// `Q_T` with one chosen nonzero witness per arrow: an arrow `a → b` is
/// witnessed by a generator of `Hom_C(T_b, T_a)`.
#[derive(Debug, Clone)]
pub struct EndPresentation {
    pub quiver: Quiver,
    pub witnesses: BTreeMap<(usize, usize), CMorphism>,
}

impl EndPresentation {
    /// The morphism `T_end → T_start` given by a path, composing witnesses
    /// from the end of the path backwards.
    pub fn path_morphism(&self, cat: &ClusterCategory, path: &Path) -> Result<CMorphism> {
        let ms: Vec<CMorphism> = path
            .arrows()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|a| self.witnesses[&a].clone())
            .collect();
        cat.compose_path(&ms)
    }

    /// Degree (`0` or `1`) of the witness of each arrow.
    pub fn degree(&self, a: usize, b: usize) -> u8 {
        self.witnesses[&(a, b)]
            .degree()
            .expect("witnesses are homogeneous")
    }
}

/// An arrow `T_j → T_i` exists precisely when `dim Hom_C(T_i, T_j) = 1` and
/// no nonzero morphism `T_i → T_j` factors through another summand.
pub fn quiver_qt(cat: &ClusterCategory, t: &TiltingObject) -> Result<EndPresentation> {
    let s = &t.summands;
    let n = s.len();
    let mut arrows = Vec::new();
    let mut witnesses = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let d = cat.hom_dim(s[i], s[j]);
            if d == 0 {
                continue;
            }
            if d >= 2 {
                return Err(Error::HomBound(
                    cat.object(s[i]).to_string(),
                    cat.object(s[j]).to_string(),
                    d,
                ));
            }
            if factors_through_others(cat, s, i, j)? {
                continue;
            }
            let w = cat.hom_basis(s[i], s[j]).remove(0);
            if w.degree().is_none() {
                return Err(Error::Derived("witness is not homogeneous".into()));
            }
            arrows.push((j, i));
            witnesses.insert((j, i), w);
        }
    }
    Ok(EndPresentation {
        quiver: Quiver::from_arrows(n, &arrows),
        witnesses,
    })
}

fn factors_through_others(cat: &ClusterCategory, s: &[usize], i: usize, j: usize) -> Result<bool> {
    let mut composites = Vec::new();
    for k in 0..s.len() {
        if k == i || k == j {
            continue;
        }
        for f in cat.hom_basis(s[i], s[k]) {
            for g in cat.hom_basis(s[k], s[j]) {
                composites.push(cat.compose(&f, &g)?);
            }
        }
    }
    Ok(span_rank(&composites) > 0)
}

/// Whether `Q_T` is compared with the exchange quiver or with its opposite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Convention {
    pub flip: bool,
}

impl Convention {
    pub fn expected(&self, exchange: &Quiver) -> Quiver {
        if self.flip {
            exchange.opposite()
        } else {
            exchange.clone()
        }
    }

    /// Pin the convention on the initial cluster of `A_2`: the only choice
    /// under which the two quivers agree.
    pub fn pin() -> Result<Convention> {
        let ty = crate::root_system::DynkinType::a(2);
        let rs = crate::root_system::RootSystem::new(ty);
        let cat = ClusterCategory::new(&rs)?;
        let atlas = crate::cluster_algebra::explore(ty, Default::default())?;
        let t = tilting_from_cluster(&cat, &atlas, 0)?;
        let qt = quiver_qt(&cat, &t)?.quiver;
        let qc = &atlas.cluster(0).quiver;
        match (qt == *qc, qt == qc.opposite()) {
            (true, false) => Ok(Convention { flip: false }),
            (false, true) => Ok(Convention { flip: true }),
            _ => Err(Error::Derived("A2 does not pin the convention".into())),
        }
    }
}

/// The two objects completing `tbar` to a tilting object, in index order.
pub fn complements(cat: &ClusterCategory, tbar: &[usize]) -> Result<(usize, usize)> {
    let found: Vec<usize> = (0..cat.len())
        .filter(|x| !tbar.contains(x))
        .filter(|&x| tbar.iter().all(|&t| cat.ext_dim(t, x) == 0 && cat.ext_dim(x, t) == 0))
        .filter(|&x| cat.ext_dim(x, x) == 0)
        .collect();
    match found.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::ComplementCount(found.len())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `B → M`, surjective on `Hom_C(X, −)` for `X` in `add T̄`.
    Right,
    /// `M → B′`, surjective on `Hom_C(−, X)` for `X` in `add T̄`.
    Left,
}

/// Minimal `add T̄`-approximation of `m`, as the smallest subset of
/// positions of `tbar` that works. `None` when the minimal approximation is
/// zero, which happens exactly when `m` and its other complement differ by
/// the shift.
pub fn approximation(
    cat: &ClusterCategory,
    tbar: &[usize],
    m: usize,
    side: Side,
) -> Result<Option<Vec<usize>>> {
    let k = tbar.len();
    let mut best: Option<Vec<usize>> = None;
    for size in 0..=k {
        for subset in subsets(k, size) {
            if approximates(cat, tbar, &subset, m, side)? {
                if best.is_some() {
                    return Err(Error::Derived(format!(
                        "minimal approximation of {} is not unique",
                        cat.object(m)
                    )));
                }
                best = Some(subset);
            }
        }
        if best.is_some() {
            break;
        }
    }
    let b = best.ok_or_else(|| Error::Derived("no approximation found".into()))?;
    Ok(if b.is_empty() { None } else { Some(b) })
}

fn approximates(
    cat: &ClusterCategory,
    tbar: &[usize],
    subset: &[usize],
    m: usize,
    side: Side,
) -> Result<bool> {
    for &x in tbar {
        let target = match side {
            Side::Right => cat.hom_dim(x, m),
            Side::Left => cat.hom_dim(m, x),
        };
        if target == 0 {
            continue;
        }
        let mut images = Vec::new();
        for &p in subset {
            let b = tbar[p];
            match side {
                Side::Right => {
                    for f in cat.hom_basis(b, m) {
                        for h in cat.hom_basis(x, b) {
                            images.push(cat.compose(&h, &f)?);
                        }
                    }
                }
                Side::Left => {
                    for f in cat.hom_basis(m, b) {
                        for h in cat.hom_basis(b, x) {
                            images.push(cat.compose(&f, &h)?);
                        }
                    }
                }
            }
        }
        if span_rank(&images) < target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `size`-element subsets of `0..k` in lexicographic order.
fn subsets(k: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            go(i + 1, k, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster_algebra::explore;
    use crate::repcat::CObject;
    use crate::root_system::{DynkinType, Root, RootSystem};

    fn setup(t: &str) -> (ClusterCategory, Atlas) {
        let ty: DynkinType = t.parse().unwrap();
        let cat = ClusterCategory::new(&RootSystem::new(ty)).unwrap();
        let atlas = explore(ty, Default::default()).unwrap();
        (cat, atlas)
    }

    #[test]
    fn initial_cluster_gives_shifted_projectives() {
        let (cat, atlas) = setup("A3");
        let t = tilting_from_cluster(&cat, &atlas, 0).unwrap();
        let objs: Vec<CObject> = t.summands.iter().map(|&i| cat.object(i).clone()).collect();
        assert_eq!(objs, (0..3).map(CObject::Shifted).collect::<Vec<_>>());
        let q = quiver_qt(&cat, &t).unwrap().quiver;
        assert!(q.is_tree());
    }

    #[test]
    fn convention_needs_no_flip() {
        assert_eq!(Convention::pin().unwrap(), Convention { flip: false });
    }

    #[test]
    fn every_a3_cluster_is_tilting_with_two_complements() {
        let (cat, atlas) = setup("A3");
        for c in 0..atlas.num_clusters() {
            let t = tilting_from_cluster(&cat, &atlas, c).unwrap();
            for p in 0..3 {
                let (a, b) = complements(&cat, &t.without(p)).unwrap();
                let edge = atlas.edge(c, p);
                let mut expect = [
                    cat.index_of_root(atlas.root_of(edge.old)).unwrap(),
                    cat.index_of_root(atlas.root_of(edge.new)).unwrap(),
                ];
                expect.sort_unstable();
                assert_eq!([a, b], expect);
            }
        }
    }

    #[test]
    fn non_complement_is_rejected() {
        let (cat, atlas) = setup("A3");
        let t = tilting_from_cluster(&cat, &atlas, 0).unwrap();
        let mut s = t.without(0);
        let bad = (0..cat.len())
            .find(|x| !t.summands.contains(x) && is_tilting(&cat, &[vec![*x], s.clone()].concat()).is_err())
            .unwrap();
        s.insert(0, bad);
        assert!(is_tilting(&cat, &s).is_err());
    }

    #[test]
    fn figure_one_cycle() {
        // l = 1 (a leaf, source), l' = 3: T_j = P_l, T_k = I_l, T_i = P_{l'}[1]
        let (cat, _) = setup("A3");
        let rs = cat.root_system().clone();
        let tj = cat.index_of_root(&rs.dim_projective(0)).unwrap();
        let tk = cat.index_of_root(&rs.dim_injective(0)).unwrap();
        let ti = cat.index_of(&CObject::Shifted(2)).unwrap();
        let t = TiltingObject::new(&cat, vec![ti, tk, tj]).unwrap();
        let pres = quiver_qt(&cat, &t).unwrap();
        let q = &pres.quiver;
        assert_eq!(q.chordless_cycles().len(), 1);
        assert!(q.chordless_cycles()[0].oriented);
        // the path T_i -> T_k -> T_j composes to zero and Hom(T_j, T_i) = 0
        assert!(q.has_arrow(0, 1) && q.has_arrow(1, 2) && q.has_arrow(2, 0));
        let p = pres.path_morphism(&cat, &Path(vec![0, 1, 2])).unwrap();
        assert!(p.is_zero());
        assert_eq!(cat.hom_dim(tj, ti), 0);
        assert_eq!(rs.dim_projective(0), Root(vec![1, 1, 0]));
    }
}
