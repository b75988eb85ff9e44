//! A worked `D_5` example: a cluster whose exchange quiver is three oriented
//! triangles glued at one vertex, and an object with denominator
//! `x_1 x_2 x_3 x_4`.

use serde::Serialize;

use super::checks::Context;
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Arrows `5→1, 1→2, 1→4, 4→5, 3→1, 2→3, 4→3`, 0-based.
pub const D5_EXAMPLE_ARROWS: [(usize, usize); 7] =
    [(4, 0), (0, 1), (0, 3), (3, 4), (2, 0), (1, 2), (3, 2)];

pub const D5_EXAMPLE_D: [usize; 5] = [1, 1, 1, 1, 0];

pub fn d5_example_quiver() -> Quiver {
    Quiver::from_arrows(5, &D5_EXAMPLE_ARROWS)
}

#[derive(Debug, Clone, Serialize)]
pub struct D5Example {
    pub cluster: usize,
    /// `labels[i]` is the cluster position playing the role of vertex `i`.
    pub labels: Vec<usize>,
    /// Object index of `M` in the cluster category.
    pub object: usize,
    pub object_name: String,
    pub variable: usize,
    /// `(dim Ext_C(T_i, M))_i` in example labels.
    pub d: Vec<usize>,
    /// Denominator exponents of `x_M` in the cluster's variables, in example labels.
    pub denominator: Vec<i32>,
    pub numerator_prime: bool,
    /// `x_M` with variables renamed to example labels.
    pub display: String,
}

/// First cluster (by id), labelling (lexicographically) and object (by
/// index) realising the example.
pub fn find_d5_example(ctx: &Context) -> Result<D5Example> {
    let target = d5_example_quiver();
    let n = ctx.rs.rank();
    if n != 5 {
        return Err(Error::InvalidType(format!("{}", ctx.rs.dynkin_type())));
    }
    let perms = permutations(n);
    for cluster in 0..ctx.atlas.num_clusters() {
        let qc = &ctx.atlas.cluster(cluster).quiver;
        let t = ctx.tilting(cluster)?;
        for sigma in &perms {
            if qc.permuted(sigma) != target {
                continue;
            }
            for m in 0..ctx.cat.len() {
                if t.summands.contains(&m) {
                    continue;
                }
                let d: Vec<usize> = sigma
                    .iter()
                    .map(|&p| ctx.cat.ext_dim(t.summands[p], m))
                    .collect();
                if d != D5_EXAMPLE_D {
                    continue;
                }
                let root = ctx.cat.root(m);
                let variable = ctx
                    .atlas
                    .variable_of_root(&root)
                    .ok_or_else(|| Error::NotARoot(root.0.clone()))?;
                let x = &ctx.atlas.expand_in_cluster(cluster)?[variable];
                let den = x.denominator_vector();
                return Ok(D5Example {
                    cluster,
                    labels: sigma.clone(),
                    object: m,
                    object_name: ctx.cat.object(m).to_string(),
                    variable,
                    d,
                    denominator: sigma.iter().map(|&p| den[p]).collect(),
                    numerator_prime: x.numerator_prime_to_variables(),
                    display: x.permute_variables(sigma).to_string(),
                });
            }
        }
    }
    Err(Error::Derived("no D5 cluster realises the example".into()))
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilting::Convention;

    #[test]
    fn example_quiver_is_three_oriented_triangles() {
        let q = d5_example_quiver();
        let cycles = q.chordless_cycles();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.oriented));
        // mutating at 1 then 2 gives a D5 tree
        let m = q.mutate(0).unwrap().mutate(1).unwrap();
        assert!(m.is_tree());
    }

    #[test]
    fn d5_example_denominator() {
        let ctx = Context::new("D5".parse().unwrap(), Default::default(), Convention::default())
            .unwrap();
        let ex = find_d5_example(&ctx).unwrap();
        assert_eq!(ex.d, D5_EXAMPLE_D.to_vec());
        assert_eq!(ex.denominator, vec![1, 1, 1, 1, 0]);
        assert!(ex.numerator_prime);
    }
}
