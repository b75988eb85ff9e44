//! Per-cluster verdicts comparing the homological side (tilting objects in
//! the cluster category) with the combinatorial side (seeds and roots).

use std::collections::BTreeSet;

use serde::Serialize;

use super::{
    approximation, complements, quiver_qt, tilting_from_cluster, Convention, EndPresentation,
    Side, TiltingObject,
};
use crate::cluster_algebra::{explore, Atlas, ExploreOptions, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver, RelationKind};
use crate::repcat::ClusterCategory;
use crate::root_system::{DynkinType, Root, RootSystem};

/// Everything computed once per Dynkin type.
#[derive(Debug, Clone)]
pub struct Context {
    pub rs: RootSystem,
    pub cat: ClusterCategory,
    pub atlas: Atlas,
    pub convention: Convention,
}

impl Context {
    pub fn new(ty: DynkinType, opts: ExploreOptions, convention: Convention) -> Result<Self> {
        let atlas = explore(ty, opts)?;
        let rs = RootSystem::new(ty);
        let cat = ClusterCategory::new(&rs)?;
        Ok(Context {
            rs,
            cat,
            atlas,
            convention,
        })
    }

    pub fn tilting(&self, cluster: usize) -> Result<TiltingObject> {
        tilting_from_cluster(&self.cat, &self.atlas, cluster)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuiverVerdict {
    pub cluster: usize,
    pub matches: bool,
    /// Pairs of positions with `dim Hom_C(T_i, T_j) ≥ 2`.
    pub hom_bound_violations: Vec<(usize, usize, usize)>,
    pub qt: Quiver,
    pub qc: Quiver,
}

/// `Q_T` against the exchange quiver, plus the bound `dim Hom_C(T_i, T_j) ≤ 1`.
pub fn quiver_check(ctx: &Context, cluster: usize) -> Result<(QuiverVerdict, Option<EndPresentation>)> {
    let t = ctx.tilting(cluster)?;
    let s = &t.summands;
    let mut violations = Vec::new();
    for i in 0..s.len() {
        for j in 0..s.len() {
            let d = ctx.cat.hom_dim(s[i], s[j]);
            if i != j && d > 1 {
                violations.push((i, j, d));
            }
        }
    }
    let qc = ctx.atlas.cluster(cluster).quiver.clone();
    if !violations.is_empty() {
        return Ok((
            QuiverVerdict {
                cluster,
                matches: false,
                hom_bound_violations: violations,
                qt: Quiver::empty(s.len()),
                qc,
            },
            None,
        ));
    }
    let pres = quiver_qt(&ctx.cat, &t)?;
    let verdict = QuiverVerdict {
        cluster,
        matches: pres.quiver == ctx.convention.expected(&qc),
        hom_bound_violations: violations,
        qt: pres.quiver.clone(),
        qc,
    };
    Ok((verdict, Some(pres)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum RelationOutcome {
    Zero,
    Proportional { scalar: String },
    Violation { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationVerdict {
    pub cluster: usize,
    /// The arrow `a → b`; the relation lives on paths `b → … → a`.
    pub arrow: (usize, usize),
    pub kind: RelationKind,
    pub paths: Vec<Path>,
    pub outcome: RelationOutcome,
    /// Paths `b → … → a` without repeated arrows that are not shortest.
    pub other_paths: usize,
    /// Those among them with a nonzero composite.
    pub nonzero_other_paths: Vec<Path>,
}

impl RelationVerdict {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, RelationOutcome::Violation { .. })
            && self.nonzero_other_paths.is_empty()
    }
}

/// Shortest-path relations of `Q_T` evaluated in `End_C(T)`: a single path
/// composes to zero, two paths compose to proportional nonzero morphisms,
/// and every other path between the same endpoints composes to zero.
pub fn relations_check(
    ctx: &Context,
    cluster: usize,
    pres: &EndPresentation,
) -> Result<Vec<RelationVerdict>> {
    let rels = pres.quiver.relations()?;
    let mut out = Vec::new();
    for e in &rels.entries {
        let (a, b) = (e.source, e.target);
        let composites = e
            .paths
            .iter()
            .map(|p| pres.path_morphism(&ctx.cat, p))
            .collect::<Result<Vec<_>>>()?;
        let outcome = match composites.as_slice() {
            [] => RelationOutcome::Zero,
            [p] if p.is_zero() => RelationOutcome::Zero,
            [_] => RelationOutcome::Violation {
                reason: "single shortest path is nonzero".into(),
            },
            [p, q] => match p.ratio(q) {
                Some(c) => RelationOutcome::Proportional {
                    scalar: c.to_string(),
                },
                None => RelationOutcome::Violation {
                    reason: "shortest paths are zero or not proportional".into(),
                },
            },
            _ => unreachable!("relations() rejects more than two paths"),
        };
        let shortest: BTreeSet<&Path> = e.paths.iter().collect();
        let mut other_paths = 0;
        let mut nonzero_other_paths = Vec::new();
        for p in pres.quiver.paths_without_repeated_arrows(b, a) {
            if shortest.contains(&p) {
                continue;
            }
            other_paths += 1;
            if !pres.path_morphism(&ctx.cat, &p)?.is_zero() {
                nonzero_other_paths.push(p);
            }
        }
        out.push(RelationVerdict {
            cluster,
            arrow: (a, b),
            kind: e.kind,
            paths: e.paths.clone(),
            outcome,
            other_paths,
            nonzero_other_paths,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct WindingFinding {
    pub cluster: usize,
    pub arrow: (usize, usize),
    pub path: Path,
    pub winding: u32,
}

/// Winding number of the closed path formed by each arrow and each of its
/// shortest return paths: the number of factors `F` picked up when lifting
/// the witnesses to the derived category.
pub fn winding_numbers(cluster: usize, pres: &EndPresentation) -> Result<Vec<WindingFinding>> {
    let mut out = Vec::new();
    for e in &pres.quiver.relations()?.entries {
        for p in &e.paths {
            let mut w = u32::from(pres.degree(e.source, e.target));
            for (x, y) in p.arrows() {
                w += u32::from(pres.degree(x, y));
            }
            out.push(WindingFinding {
                cluster,
                arrow: (e.source, e.target),
                path: p.clone(),
                winding: w,
            });
        }
    }
    Ok(out)
}

/// Winding number of an arbitrary closed path of `Q_T`.
pub fn winding_number(pres: &EndPresentation, closed: &Path) -> u32 {
    closed
        .arrows()
        .map(|(x, y)| u32::from(pres.degree(x, y)))
        .sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct NegativeSimpleVerdict {
    pub l: usize,
    pub l_is_sink: bool,
    pub epsilon: i32,
    pub epsilon_ok: bool,
    pub eq1: Option<bool>,
    pub eq2: Option<bool>,
    pub eq6: Option<bool>,
    pub eq7: Option<bool>,
}

impl NegativeSimpleVerdict {
    pub fn passed(&self) -> bool {
        self.epsilon_ok
            && [self.eq1, self.eq2, self.eq6, self.eq7]
                .iter()
                .all(|v| v.unwrap_or(true))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExchangeVerdict {
    pub cluster: usize,
    pub position: usize,
    pub old_var: usize,
    pub new_var: usize,
    /// Cluster positions of the summands of `B` and `B′`; `None` when the
    /// approximation is zero.
    pub b: Option<Vec<usize>>,
    pub b_prime: Option<Vec<usize>>,
    /// `{i : M → T_i}` and `{i : T_i → M}` in `Q_T`.
    pub i_set: Vec<usize>,
    pub i_prime_set: Vec<usize>,
    pub bb_ok: bool,
    pub complements_ok: bool,
    /// `z z′ = ∏_I x_i + ∏_{I′} x_i`.
    pub identity_ok: bool,
    /// `{I, I′}` equals the two sides of the B-matrix exchange relation.
    pub matrix_ok: bool,
    /// `I = {x : b_xz < 0}`.
    pub i_is_negative_side: bool,
    pub negative_simple: Option<NegativeSimpleVerdict>,
}

impl ExchangeVerdict {
    pub fn passed(&self) -> bool {
        self.bb_ok
            && self.complements_ok
            && self.identity_ok
            && self.matrix_ok
            && self.negative_simple.as_ref().is_none_or(NegativeSimpleVerdict::passed)
    }
}

/// Approximation triangles at the exchange of position `p` in `cluster`.
pub fn exchange_check(
    ctx: &Context,
    cluster: usize,
    p: usize,
    pres: &EndPresentation,
) -> Result<ExchangeVerdict> {
    let cat = &ctx.cat;
    let atlas = &ctx.atlas;
    let n = ctx.rs.rank();
    let t = ctx.tilting(cluster)?;
    let edge = atlas.edge(cluster, p);
    let m = t.summands[p];
    let m_new = cat
        .index_of_root(atlas.root_of(edge.new))
        .ok_or_else(|| Error::NotARoot(atlas.root_of(edge.new).0.clone()))?;
    let tbar = t.without(p);
    let (c1, c2) = complements(cat, &tbar)?;
    let complements_ok = [c1, c2] == sorted_pair(m, m_new);

    let to_pos = |q: usize| if q < p { q } else { q + 1 };
    let lift = |v: Option<Vec<usize>>| v.map(|s| s.into_iter().map(to_pos).collect::<Vec<_>>());
    let b = lift(approximation(cat, &tbar, m, Side::Right)?);
    let b_prime = lift(approximation(cat, &tbar, m, Side::Left)?);
    let i_set = pres.quiver.successors(p);
    let i_prime_set = pres.quiver.predecessors(p);
    let bb_ok = b.clone().unwrap_or_default() == i_set
        && b_prime.clone().unwrap_or_default() == i_prime_set;

    let vars = &atlas.cluster(cluster).vars;
    let product = |set: &[usize]| {
        set.iter().fold(LaurentPolynomial::one(n), |acc, &q| {
            acc.mul(atlas.variable(vars[q]))
        })
    };
    let lhs = atlas.variable(edge.old).mul(atlas.variable(edge.new));
    let rhs = product(&i_set).add(&product(&i_prime_set));
    let identity_ok = lhs == rhs;

    let bm = atlas.cluster(cluster).quiver.matrix().to_vec();
    let pos: Vec<usize> = (0..n).filter(|&x| bm[x][p] > 0).collect();
    let neg: Vec<usize> = (0..n).filter(|&x| bm[x][p] < 0).collect();
    let matrix_ok = (i_set == neg && i_prime_set == pos) || (i_set == pos && i_prime_set == neg);
    let i_is_negative_side = i_set == neg;

    let negative_simple = match atlas.root_of(edge.new).negative_simple_index() {
        Some(l) => Some(negative_simple_check(
            ctx,
            atlas.root_of(edge.old),
            l,
            &b,
            &b_prime,
            vars,
        )?),
        None => None,
    };

    Ok(ExchangeVerdict {
        cluster,
        position: p,
        old_var: edge.old,
        new_var: edge.new,
        b,
        b_prime,
        i_set,
        i_prime_set,
        bb_ok,
        complements_ok,
        identity_ok,
        matrix_ok,
        i_is_negative_side,
        negative_simple,
    })
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

/// Dimension identities when the new complement is `P_l[1]`.
fn negative_simple_check(
    ctx: &Context,
    beta: &Root,
    l: usize,
    b: &Option<Vec<usize>>,
    b_prime: &Option<Vec<usize>>,
    vars: &[usize],
) -> Result<NegativeSimpleVerdict> {
    let rs = &ctx.rs;
    let n = rs.rank();
    let sink = rs.signs().is_sink(l);
    let neg_l = Root::negative_simple(n, l);
    let epsilon = rs.sign_eps(beta, &neg_l)?;
    let epsilon_ok = epsilon == if sink { 1 } else { -1 };
    let sum = |set: &Option<Vec<usize>>| {
        set.as_ref().map(|s| {
            s.iter()
                .fold(Root::zero(n), |acc, &q| acc.add(ctx.atlas.root_of(vars[q])))
        })
    };
    let alpha_l = Root::simple(n, l);
    let plus = beta.add(&neg_l);
    let uplus = rs.uplus(beta, &neg_l)?;
    let mut closed = beta.sub(&alpha_l);
    for j in rs.neighbors(l) {
        closed = closed.sub(&Root::simple(n, j));
    }
    if closed != uplus {
        return Err(Error::Derived(format!("{beta} ⊎ -a{} disagrees", l + 1)));
    }
    let (eq1_rhs, eq2_rhs, eq6_rhs, eq7_rhs) = if sink {
        (
            beta.sub(&rs.dim_injective(l)),
            beta.sub(&alpha_l),
            uplus.clone(),
            plus.clone(),
        )
    } else {
        (
            beta.sub(&alpha_l),
            beta.sub(&rs.dim_projective(l)),
            plus.clone(),
            uplus.clone(),
        )
    };
    let sb = sum(b);
    let sbp = sum(b_prime);
    Ok(NegativeSimpleVerdict {
        l,
        l_is_sink: sink,
        epsilon,
        epsilon_ok,
        eq1: sb.as_ref().map(|s| *s == eq1_rhs),
        eq2: sbp.as_ref().map(|s| *s == eq2_rhs),
        eq6: sb.as_ref().map(|s| *s == eq6_rhs),
        eq7: sbp.as_ref().map(|s| *s == eq7_rhs),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DenominatorMismatch {
    pub variable: usize,
    pub expected: Vec<usize>,
    pub found: Vec<i32>,
    pub numerator_prime: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DenominatorVerdict {
    pub cluster: usize,
    pub checked: usize,
    pub mismatches: Vec<DenominatorMismatch>,
}

/// Every variable expanded in the variables of `cluster` has denominator
/// `∏ x_i^{dim Ext_C(T_i, M)}` and a numerator prime to every `x_i`.
pub fn denominator_check(ctx: &Context, cluster: usize) -> Result<DenominatorVerdict> {
    let t = ctx.tilting(cluster)?;
    let n = ctx.rs.rank();
    let exps = ctx.atlas.expand_in_cluster(cluster)?;
    let mut mismatches = Vec::new();
    for (v, x) in exps.iter().enumerate() {
        let m = ctx
            .cat
            .index_of_root(ctx.atlas.root_of(v))
            .ok_or_else(|| Error::NotARoot(ctx.atlas.root_of(v).0.clone()))?;
        let expected: Vec<usize> = t.summands.iter().map(|&ti| ctx.cat.ext_dim(ti, m)).collect();
        let found = x.denominator_vector();
        let ok = match t.summands.iter().position(|&s| s == m) {
            Some(p) => *x == LaurentPolynomial::var(n, p) && expected.iter().all(|&e| e == 0),
            None => {
                x.numerator_prime_to_variables()
                    && found.iter().zip(&expected).all(|(&f, &e)| f as usize == e)
            }
        };
        if !ok {
            mismatches.push(DenominatorMismatch {
                variable: v,
                expected,
                found,
                numerator_prime: x.numerator_prime_to_variables(),
            });
        }
    }
    Ok(DenominatorVerdict {
        cluster,
        checked: exps.len(),
        mismatches,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CountVerdict {
    pub cluster: usize,
    pub expected: usize,
    pub distinct: usize,
    pub zero_vectors: usize,
    pub injective: bool,
}

impl CountVerdict {
    pub fn passed(&self) -> bool {
        self.injective && self.zero_vectors == 0 && self.distinct == self.expected
    }
}

/// `M ↦ (dim Ext_C(T_i, M))_i` on indecomposables outside `add T` is
/// injective with `ν` distinct nonzero values.
pub fn module_count_check(ctx: &Context, cluster: usize) -> Result<CountVerdict> {
    let t = ctx.tilting(cluster)?;
    let mut seen = BTreeSet::new();
    let mut total = 0;
    let mut zero_vectors = 0;
    for m in 0..ctx.cat.len() {
        if t.summands.contains(&m) {
            continue;
        }
        total += 1;
        let d: Vec<usize> = t.summands.iter().map(|&ti| ctx.cat.ext_dim(ti, m)).collect();
        if d.iter().all(|&x| x == 0) {
            zero_vectors += 1;
        }
        seen.insert(d);
    }
    Ok(CountVerdict {
        cluster,
        expected: ctx.rs.positive_roots().len(),
        distinct: seen.len(),
        zero_vectors,
        injective: seen.len() == total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(t: &str) -> Context {
        Context::new(t.parse().unwrap(), Default::default(), Convention::default()).unwrap()
    }

    #[test]
    fn a3_everything_passes() {
        let c = ctx("A3");
        for cl in 0..c.atlas.num_clusters() {
            let (qv, pres) = quiver_check(&c, cl).unwrap();
            assert!(qv.matches, "cluster {cl}");
            let pres = pres.unwrap();
            for r in relations_check(&c, cl, &pres).unwrap() {
                assert!(r.passed(), "{r:?}");
            }
            for p in 0..3 {
                let e = exchange_check(&c, cl, p, &pres).unwrap();
                assert!(e.passed(), "{e:?}");
                assert!(e.i_is_negative_side);
            }
            assert!(denominator_check(&c, cl).unwrap().mismatches.is_empty());
            assert!(module_count_check(&c, cl).unwrap().passed());
            for w in winding_numbers(cl, &pres).unwrap() {
                assert_eq!(w.winding, 1);
            }
        }
    }

    #[test]
    fn a2_exchange_monomials() {
        let c = ctx("A2");
        let (_, pres) = quiver_check(&c, 0).unwrap();
        let e = exchange_check(&c, 0, 0, &pres.unwrap()).unwrap();
        // x1 x1' = x2 + 1
        assert_eq!(e.i_set.len() + e.i_prime_set.len(), 1);
        assert!(e.identity_ok && e.matrix_ok);
    }

    #[test]
    fn constant_path_has_winding_zero() {
        let c = ctx("A3");
        let (_, pres) = quiver_check(&c, 0).unwrap();
        assert_eq!(winding_number(&pres.unwrap(), &Path(vec![1])), 0);
    }
}
