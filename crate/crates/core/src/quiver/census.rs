//! Structural census of every quiver in a finite-type mutation class:
//! shortest paths, chordless cycles, and vertex links.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{mutation_class, Quiver, DEFAULT_CLASS_CAP};
use crate::cluster_algebra::alternating_quiver;
use crate::error::Result;
use crate::root_system::DynkinType;

/// Link profiles that occur in finite type.
pub const ALLOWED_LINKS: [&[usize]; 16] = [
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[1, 1],
    &[1, 2],
    &[2, 2],
    &[1, 3],
    &[1, 4],
    &[2, 3],
    &[2, 4],
    &[1, 1, 1],
    &[1, 1, 2],
    &[1, 2, 2],
];

/// Profiles ruled out because they contain an affine quiver.
pub const FORBIDDEN_LINKS: [&[usize]; 5] = [&[7], &[3, 3], &[1, 5], &[1, 1, 3], &[2, 2, 2]];

/// Mutations at `v` that change the profile of the link of `v`, as
/// unordered pairs.
pub const LINK_CHANGES: [(&[usize], &[usize]); 6] = [
    (&[2], &[1, 1]),
    (&[3], &[1, 1, 1]),
    (&[5], &[1, 2, 2]),
    (&[6], &[2, 4]),
    (&[4], &[1, 1, 2]),
    (&[1, 3], &[1, 1, 2]),
];

pub fn profile_name(components: &[usize]) -> String {
    let parts: Vec<String> = components.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn is_allowed_change(a: &[usize], b: &[usize]) -> bool {
    a == b || LINK_CHANGES
        .iter()
        .any(|&(x, y)| (x == a && y == b) || (x == b && y == a))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CensusReport {
    pub dynkin_type: String,
    pub class_size: usize,
    pub arrows: usize,
    /// Number of arrows by count of shortest return paths.
    pub shortest_path_counts: BTreeMap<usize, usize>,
    pub chordless_cycles: usize,
    pub unoriented_cycles: usize,
    /// Occurrences of each link profile over all vertices.
    pub profiles: BTreeMap<String, usize>,
    /// Distinct orientation classes seen per profile.
    pub orientations: BTreeMap<String, BTreeSet<String>>,
    pub non_alternating_links: usize,
    pub non_linear_links: usize,
    pub disallowed_profiles: BTreeSet<String>,
    pub forbidden_profiles: BTreeSet<String>,
    /// Profile changes `(before, after)` observed under mutation at the vertex.
    pub link_changes: BTreeSet<(String, String)>,
    pub bad_link_changes: BTreeSet<(String, String)>,
    pub involution_failures: usize,
    pub non_simply_laced: usize,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.shortest_path_counts.keys().all(|&k| k <= 2)
            && self.unoriented_cycles == 0
            && self.non_alternating_links == 0
            && self.non_linear_links == 0
            && self.disallowed_profiles.is_empty()
            && self.forbidden_profiles.is_empty()
            && self.bad_link_changes.is_empty()
            && self.involution_failures == 0
            && self.non_simply_laced == 0
    }
}

/// Run the census over the mutation class of the given type.
pub fn census(ty: DynkinType) -> Result<CensusReport> {
    let class = mutation_class(&alternating_quiver(ty), DEFAULT_CLASS_CAP)?;
    let mut r = CensusReport {
        dynkin_type: ty.to_string(),
        class_size: class.len(),
        ..Default::default()
    };
    for q in &class {
        visit(q, &mut r)?;
    }
    Ok(r)
}

fn visit(q: &Quiver, r: &mut CensusReport) -> Result<()> {
    if q.check_simply_laced().is_err() {
        r.non_simply_laced += 1;
    }
    for (i, j, _) in q.arrows() {
        r.arrows += 1;
        *r.shortest_path_counts
            .entry(q.shortest_paths(i, j).len())
            .or_default() += 1;
    }
    for c in q.chordless_cycles() {
        r.chordless_cycles += 1;
        if !c.oriented {
            r.unoriented_cycles += 1;
        }
    }
    for v in 0..q.n() {
        let link = q.link(v);
        let name = profile_name(&link.components);
        if link.components.is_empty() {
            continue;
        }
        *r.profiles.entry(name.clone()).or_default() += 1;
        r.orientations
            .entry(name.clone())
            .or_default()
            .insert(link.orientation.clone());
        if !link.alternating {
            r.non_alternating_links += 1;
        }
        if !link.linear {
            r.non_linear_links += 1;
        }
        let comps = link.components.as_slice();
        if !ALLOWED_LINKS.contains(&comps) {
            r.disallowed_profiles.insert(name.clone());
        }
        if FORBIDDEN_LINKS.contains(&comps) {
            r.forbidden_profiles.insert(name.clone());
        }
        let m = q.mutate(v)?;
        if m.mutate(v)? != *q {
            r.involution_failures += 1;
        }
        let after = m.link(v).components;
        if after != link.components {
            let pair = (name.clone(), profile_name(&after));
            if !is_allowed_change(comps, &after) {
                r.bad_link_changes.insert(pair.clone());
            }
            r.link_changes.insert(pair);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_classes_pass() {
        for t in ["A1", "A2", "A3", "A4", "D4", "D5"] {
            let r = census(t.parse().unwrap()).unwrap();
            assert!(r.passed(), "{t}: {r:?}");
        }
    }

    #[test]
    fn a3_class_has_four_members() {
        assert_eq!(census(DynkinType::a(3)).unwrap().class_size, 4);
    }
}
