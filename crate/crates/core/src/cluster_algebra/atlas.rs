//! The exchange graph, computed by breadth-first mutation from the
//! alternating seed.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPolynomial;
use super::seed::{initial_seed, Seed};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::root_system::{DynkinType, Root, RootSystem, Series};

pub const DEFAULT_ATLAS_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy)]
pub struct ExploreOptions {
    pub cap: usize,
    /// Required for E7 and E8.
    pub allow_large: bool,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        ExploreOptions {
            cap: DEFAULT_ATLAS_CAP,
            allow_large: false,
        }
    }
}

/// One vertex of the exchange graph, stored with the seed through which it
/// was first reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterRecord {
    /// Variable ids by seed position.
    pub vars: Vec<usize>,
    pub quiver: Quiver,
    /// Cluster reached by mutating at each position.
    pub neighbors: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Atlas {
    ty: DynkinType,
    variables: Vec<LaurentPolynomial>,
    roots: Vec<Root>,
    clusters: Vec<ClusterRecord>,
    var_index: HashMap<LaurentPolynomial, usize>,
    cluster_index: HashMap<Vec<usize>, usize>,
    root_index: HashMap<Root, usize>,
}

/// An edge of the exchange graph: mutating `cluster` at `position` swaps
/// `old` for `new` and lands in `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeEdge {
    pub cluster: usize,
    pub position: usize,
    pub target: usize,
    pub old: usize,
    pub new: usize,
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

pub fn explore(ty: DynkinType, opts: ExploreOptions) -> Result<Atlas> {
    if ty.series == Series::E && ty.rank >= 7 && !opts.allow_large {
        return Err(Error::LargeType(ty.to_string()));
    }
    let n = ty.rank;
    let start = initial_seed(ty);
    let mut atlas = Atlas {
        ty,
        variables: Vec::new(),
        roots: Vec::new(),
        clusters: Vec::new(),
        var_index: HashMap::new(),
        cluster_index: HashMap::new(),
        root_index: HashMap::new(),
    };
    let ids: Vec<usize> = start.vars.iter().map(|v| atlas.intern(v)).collect();
    atlas.cluster_index.insert(sorted(&ids), 0);
    atlas.clusters.push(ClusterRecord {
        vars: ids,
        quiver: start.quiver.clone(),
        neighbors: vec![usize::MAX; n],
    });

    let mut frontier = vec![(0usize, start)];
    while !frontier.is_empty() {
        let mutated: Vec<Vec<Seed>> = frontier
            .par_iter()
            .map(|(_, s)| (0..n).map(|k| s.mutate(k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for ((cid, _), seeds) in frontier.iter().zip(mutated) {
            for (k, s) in seeds.into_iter().enumerate() {
                let mut ids = atlas.clusters[*cid].vars.clone();
                ids[k] = atlas.intern(&s.vars[k]);
                let key = sorted(&ids);
                let target = match atlas.cluster_index.get(&key) {
                    Some(&t) => {
                        atlas.check_same_seed(t, &ids, &s.quiver)?;
                        t
                    }
                    None => {
                        let t = atlas.clusters.len();
                        if t >= opts.cap {
                            return Err(Error::AtlasCapExceeded(opts.cap));
                        }
                        atlas.cluster_index.insert(key, t);
                        atlas.clusters.push(ClusterRecord {
                            vars: ids,
                            quiver: s.quiver.clone(),
                            neighbors: vec![usize::MAX; n],
                        });
                        next.push((t, s));
                        t
                    }
                };
                atlas.clusters[*cid].neighbors[k] = target;
            }
        }
        frontier = next;
    }
    atlas.assign_roots()?;
    Ok(atlas)
}

impl Atlas {
    fn intern(&mut self, v: &LaurentPolynomial) -> usize {
        if let Some(&id) = self.var_index.get(v) {
            return id;
        }
        let id = self.variables.len();
        self.variables.push(v.clone());
        self.var_index.insert(v.clone(), id);
        id
    }

    /// A cluster reached along two paths must carry the same quiver up to
    /// the induced relabeling of positions.
    fn check_same_seed(&self, t: usize, ids: &[usize], quiver: &Quiver) -> Result<()> {
        let rec = &self.clusters[t];
        let perm: Vec<usize> = ids
            .iter()
            .map(|id| rec.vars.iter().position(|v| v == id).expect("same variable set"))
            .collect();
        if rec.quiver.permuted(&perm) != *quiver {
            return Err(Error::SeedMismatch(format!(
                "cluster {t} reached with two different quivers"
            )));
        }
        Ok(())
    }

    fn assign_roots(&mut self) -> Result<()> {
        let rs = RootSystem::new(self.ty);
        let n = self.ty.rank;
        for v in &self.variables {
            let root = match v.as_variable() {
                Some(i) => Root::negative_simple(n, i),
                None => {
                    if !v.numerator_prime_to_variables() {
                        return Err(Error::LaurentViolation(v.to_string()));
                    }
                    let d = v.denominator_vector();
                    let r = Root(d.clone());
                    if !r.is_positive() || !rs.is_almost_positive(&r) {
                        return Err(Error::NotARoot(d));
                    }
                    r
                }
            };
            if self.root_index.insert(root.clone(), self.roots.len()).is_some() {
                return Err(Error::RootBijection(format!("{root} appears twice")));
            }
            self.roots.push(root);
        }
        let expected = rs.almost_positive_roots().len();
        if self.roots.len() != expected {
            return Err(Error::RootBijection(format!(
                "{} variables for {} almost positive roots",
                self.roots.len(),
                expected
            )));
        }
        Ok(())
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn num_clusters(&self) -> usize {
        self.clusters.len()
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[LaurentPolynomial] {
        &self.variables
    }

    pub fn variable(&self, id: usize) -> &LaurentPolynomial {
        &self.variables[id]
    }

    pub fn variable_id(&self, v: &LaurentPolynomial) -> Option<usize> {
        self.var_index.get(v).copied()
    }

    pub fn root_of(&self, id: usize) -> &Root {
        &self.roots[id]
    }

    pub fn variable_of_root(&self, r: &Root) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    pub fn clusters(&self) -> &[ClusterRecord] {
        &self.clusters
    }

    pub fn cluster(&self, id: usize) -> &ClusterRecord {
        &self.clusters[id]
    }

    /// Cluster id of a set of variable ids, in any order.
    pub fn cluster_of(&self, vars: &[usize]) -> Option<usize> {
        self.cluster_index.get(&sorted(vars)).copied()
    }

    pub fn cluster_roots(&self, id: usize) -> Vec<Root> {
        self.clusters[id]
            .vars
            .iter()
            .map(|&v| self.roots[v].clone())
            .collect()
    }

    pub fn seed(&self, id: usize) -> Seed {
        let rec = &self.clusters[id];
        Seed {
            quiver: rec.quiver.clone(),
            vars: rec.vars.iter().map(|&v| self.variables[v].clone()).collect(),
        }
    }

    pub fn edge(&self, cluster: usize, position: usize) -> ExchangeEdge {
        let rec = &self.clusters[cluster];
        let target = rec.neighbors[position];
        let old = rec.vars[position];
        let new = *self.clusters[target]
            .vars
            .iter()
            .find(|v| !rec.vars.contains(v))
            .expect("neighbors differ in one variable");
        ExchangeEdge {
            cluster,
            position,
            target,
            old,
            new,
        }
    }

    /// Each undirected edge once, from its lower-numbered end.
    pub fn edges(&self) -> Vec<ExchangeEdge> {
        let mut out = Vec::new();
        for (c, rec) in self.clusters.iter().enumerate() {
            for (k, &t) in rec.neighbors.iter().enumerate() {
                if c < t {
                    out.push(self.edge(c, k));
                }
            }
        }
        out
    }

    /// Every variable as a Laurent polynomial in the variables of cluster
    /// `reference`, ordered by that cluster's positions. Indexed by variable
    /// id.
    pub fn expand_in_cluster(&self, reference: usize) -> Result<Vec<LaurentPolynomial>> {
        let base = &self.clusters[reference];
        let mut out: Vec<Option<LaurentPolynomial>> = vec![None; self.variables.len()];
        let formal = Seed::initial(base.quiver.clone());
        for (p, &v) in base.vars.iter().enumerate() {
            out[v] = Some(formal.vars[p].clone());
        }
        let mut seen = vec![false; self.clusters.len()];
        seen[reference] = true;
        let mut queue = VecDeque::from([(reference, formal)]);
        while let Some((c, s)) = queue.pop_front() {
            let rec = &self.clusters[c];
            for k in 0..self.rank() {
                let t = rec.neighbors[k];
                let edge = self.edge(c, k);
                let m = s.mutate(k)?;
                match &out[edge.new] {
                    Some(known) if *known != m.vars[k] => {
                        return Err(Error::SeedMismatch(format!(
                            "variable {} has two expansions",
                            edge.new
                        )))
                    }
                    Some(_) => {}
                    None => out[edge.new] = Some(m.vars[k].clone()),
                }
                if seen[t] {
                    continue;
                }
                seen[t] = true;
                // reorder positions to match the stored seed of t
                let mut ids = rec.vars.clone();
                ids[k] = edge.new;
                let target = &self.clusters[t];
                let perm: Vec<usize> = target
                    .vars
                    .iter()
                    .map(|id| ids.iter().position(|v| v == id).expect("same set"))
                    .collect();
                let aligned = Seed {
                    quiver: m.quiver.permuted(&perm),
                    vars: perm.iter().map(|&p| m.vars[p].clone()).collect(),
                };
                queue.push_back((t, aligned));
            }
        }
        Ok(out
            .into_iter()
            .map(|v| v.expect("exchange graph is connected"))
            .collect())
    }

    pub fn to_json(&self) -> AtlasJson {
        AtlasJson {
            dynkin_type: self.ty.to_string(),
            rank: self.rank(),
            num_clusters: self.num_clusters(),
            num_variables: self.num_variables(),
            variables: self
                .variables
                .iter()
                .enumerate()
                .map(|(id, v)| VariableJson {
                    id,
                    root: self.roots[id].clone(),
                    denominator: v.denominator_vector(),
                    display: v.to_string(),
                    polynomial: v.clone(),
                })
                .collect(),
            clusters: self
                .clusters
                .iter()
                .enumerate()
                .map(|(id, c)| ClusterJson {
                    id,
                    vars: c.vars.clone(),
                    b: c.quiver.matrix().to_vec(),
                    neighbors: c.neighbors.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariableJson {
    pub id: usize,
    pub root: Root,
    pub denominator: Vec<i32>,
    pub display: String,
    pub polynomial: LaurentPolynomial,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClusterJson {
    pub id: usize,
    pub vars: Vec<usize>,
    pub b: Vec<Vec<i32>>,
    pub neighbors: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AtlasJson {
    #[serde(rename = "type")]
    pub dynkin_type: String,
    pub rank: usize,
    pub num_clusters: usize,
    pub num_variables: usize,
    pub variables: Vec<VariableJson>,
    pub clusters: Vec<ClusterJson>,
}
