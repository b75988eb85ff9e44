//! Quivers as skew-symmetric exchange matrices.
//!
//! `b[x][y] > 0` means `b[x][y]` arrows `x -> y`. Besides matrix mutation this
//! module holds the purely combinatorial structure of a cluster quiver:
//! shortest paths and the relations they generate, vertex links, chordless
//! cycles, canonical forms and mutation-class enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod census;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    b: Vec<Vec<i32>>,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    n: usize,
    b: Vec<Vec<i32>>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;
    fn try_from(j: QuiverJson) -> Result<Self> {
        if j.b.len() != j.n {
            return Err(Error::Parse(format!(
                "quiver declares n = {} but has {} rows",
                j.n,
                j.b.len()
            )));
        }
        Quiver::from_matrix(j.b)
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        QuiverJson { n: q.n(), b: q.b }
    }
}

/// An oriented path, listed by its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().expect("paths are nonempty")
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    None,
    Zero,
    Commutativity,
}

/// The relation attached to the arrow `source -> target`, generated by the
/// shortest paths from `target` back to `source`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Path>,
    pub kind: RelationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSet {
    pub entries: Vec<RelationEntry>,
}

impl RelationSet {
    pub fn relations(&self) -> impl Iterator<Item = &RelationEntry> {
        self.entries.iter().filter(|e| e.kind != RelationKind::None)
    }
}

/// Shape of the link of a vertex: sizes of its connected components, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinkProfile {
    pub components: Vec<usize>,
    /// Every link vertex is a sink or a source inside the link.
    pub alternating: bool,
    /// Every component is a path graph.
    pub linear: bool,
    /// Orientation class, invariant under global reversal and relabeling.
    pub orientation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub oriented: bool,
}

impl Quiver {
    pub fn empty(n: usize) -> Self {
        Quiver {
            b: vec![vec![0; n]; n],
        }
    }

    pub fn from_matrix(b: Vec<Vec<i32>>) -> Result<Self> {
        let n = b.len();
        for (x, row) in b.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSkewSymmetric);
            }
            for (y, &v) in row.iter().enumerate() {
                if v != -b[y][x] {
                    return Err(Error::NotSkewSymmetric);
                }
            }
        }
        Ok(Quiver { b })
    }

    /// Build from a list of single arrows `(from, to)`.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut q = Quiver::empty(n);
        for &(x, y) in arrows {
            q.b[x][y] += 1;
            q.b[y][x] -= 1;
        }
        q
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.b
    }

    pub fn entry(&self, x: usize, y: usize) -> i32 {
        self.b[x][y]
    }

    pub fn has_arrow(&self, x: usize, y: usize) -> bool {
        self.b[x][y] > 0
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.b[x][y] != 0
    }

    /// Arrows with multiplicity, in row-major order.
    pub fn arrows(&self) -> Vec<(usize, usize, i32)> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            for y in 0..self.n() {
                if self.b[x][y] > 0 {
                    out.push((x, y, self.b[x][y]));
                }
            }
        }
        out
    }

    pub fn successors(&self, x: usize) -> Vec<usize> {
        (0..self.n()).filter(|&y| self.b[x][y] > 0).collect()
    }

    pub fn predecessors(&self, x: usize) -> Vec<usize> {
        (0..self.n()).filter(|&y| self.b[y][x] > 0).collect()
    }

    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        (0..self.n()).filter(|&y| self.b[x][y] != 0).collect()
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            b: self
                .b
                .iter()
                .map(|r| r.iter().map(|v| -v).collect())
                .collect(),
        }
    }

    /// Matrix mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        let n = self.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, rank: n });
        }
        let b = &self.b;
        let mut out = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                out[x][y] = if x == k || y == k {
                    -b[x][y]
                } else {
                    b[x][y] + (b[x][k].abs() * b[k][y] + b[x][k] * b[k][y].abs()) / 2
                };
            }
        }
        Ok(Quiver { b: out })
    }

    /// Errors with the first entry of absolute value above 1.
    pub fn check_simply_laced(&self) -> Result<()> {
        for (x, row) in self.b.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                if v.abs() > 1 {
                    return Err(Error::NotFiniteType {
                        row: x,
                        col: y,
                        entry: v,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn permuted(&self, perm: &[usize]) -> Quiver {
        // new vertex i is old vertex perm[i]
        let n = self.n();
        let mut b = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                b[i][j] = self.b[perm[i]][perm[j]];
            }
        }
        Quiver { b }
    }

    /// Induced subquiver on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let b = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.b[i][j]).collect())
            .collect();
        Quiver { b }
    }

    /// Underlying graph has no cycles and one component.
    pub fn is_tree(&self) -> bool {
        let edges = self.arrows().len();
        self.is_connected() && edges + 1 == self.n()
    }

    /// Canonical representative up to vertex relabeling: the permuted quiver
    /// whose row-major matrix is lexicographically smallest among all
    /// relabelings compatible with a degree-based vertex refinement.
    pub fn canonical_form(&self) -> Quiver {
        let n = self.n();
        if n <= 1 {
            return self.clone();
        }
        let classes = self.refined_classes();
        let mut best: Option<Vec<i32>> = None;
        let mut best_perm = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut class_perms: Vec<Vec<usize>> = classes.clone();
        let mut visit = |perm: &[usize]| {
            let code: Vec<i32> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| self.b[perm[i]][perm[j]])
                .collect();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
                best_perm = perm.to_vec();
            }
        };
        permute_classes(&mut class_perms, 0, &mut perm, &mut visit);
        self.permuted(&best_perm)
    }

    fn refined_classes(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut color: Vec<usize> = vec![0; n];
        let mut count = 1;
        loop {
            let sigs: Vec<(usize, Vec<(i32, usize)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(i32, usize)> = (0..n)
                        .filter(|&w| self.b[v][w] != 0)
                        .map(|w| (self.b[v][w], color[w]))
                        .collect();
                    nb.sort_unstable();
                    (color[v], nb)
                })
                .collect();
            let distinct: BTreeSet<_> = sigs.iter().cloned().collect();
            let ids: BTreeMap<_, usize> = distinct
                .into_iter()
                .enumerate()
                .map(|(i, s)| (s, i))
                .collect();
            color = sigs.iter().map(|s| ids[s]).collect();
            if ids.len() == count {
                break;
            }
            count = ids.len();
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, c) in color.into_iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        classes.into_values().collect()
    }

    /// All oriented paths `j -> ... -> i` whose vertex set induces a cycle in
    /// the underlying graph, where `i -> j` is an arrow.
    pub fn shortest_paths(&self, i: usize, j: usize) -> Vec<Path> {
        if !self.has_arrow(i, j) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut path = vec![j];
        self.extend_shortest(i, &mut path, &mut out);
        out.sort();
        out
    }

    fn extend_shortest(&self, goal: usize, path: &mut Vec<usize>, out: &mut Vec<Path>) {
        let last = *path.last().expect("nonempty");
        for w in self.successors(last) {
            if path.contains(&w) {
                continue;
            }
            // the only adjacency allowed besides consecutive vertices is the
            // arrow goal -> start
            let chord = path[..path.len() - 1]
                .iter()
                .any(|&u| self.adjacent(u, w) && !(w == goal && u == path[0]));
            if chord {
                continue;
            }
            if w == goal {
                if path.len() >= 2 {
                    let mut p = path.clone();
                    p.push(w);
                    out.push(Path(p));
                }
                continue;
            }
            path.push(w);
            self.extend_shortest(goal, path, out);
            path.pop();
        }
    }

    /// Relations generated by shortest paths, one entry per arrow.
    pub fn relations(&self) -> Result<RelationSet> {
        let mut entries = Vec::new();
        for (i, j, _) in self.arrows() {
            let paths = self.shortest_paths(i, j);
            let kind = match paths.len() {
                0 => RelationKind::None,
                1 => RelationKind::Zero,
                2 => RelationKind::Commutativity,
                count => {
                    return Err(Error::TooManyShortestPaths {
                        from: i,
                        to: j,
                        count,
                    })
                }
            };
            entries.push(RelationEntry {
                source: i,
                target: j,
                paths,
                kind,
            });
        }
        Ok(RelationSet { entries })
    }

    /// All oriented paths from `from` to `to` that use no arrow twice.
    pub fn paths_without_repeated_arrows(&self, from: usize, to: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut used = BTreeSet::new();
        let mut path = vec![from];
        self.extend_paths(to, &mut path, &mut used, &mut out);
        out.sort();
        out
    }

    fn extend_paths(
        &self,
        to: usize,
        path: &mut Vec<usize>,
        used: &mut BTreeSet<(usize, usize)>,
        out: &mut Vec<Path>,
    ) {
        let last = *path.last().expect("nonempty");
        if last == to && path.len() > 1 {
            out.push(Path(path.clone()));
        }
        for w in self.successors(last) {
            if used.insert((last, w)) {
                path.push(w);
                self.extend_paths(to, path, used, out);
                path.pop();
                used.remove(&(last, w));
            }
        }
    }

    /// Link of `v`: the subquiver induced on its neighbours.
    pub fn link(&self, v: usize) -> LinkProfile {
        let nb = self.neighbors(v);
        let sub = self.induced(&nb);
        let m = nb.len();
        let mut comp = vec![usize::MAX; m];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..m {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for y in sub.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            comps.push(members);
        }
        let alternating = (0..m).all(|x| sub.successors(x).is_empty() || sub.predecessors(x).is_empty());
        let mut linear = true;
        let mut descriptors = Vec::new();
        for c in &comps {
            let edges: usize = c
                .iter()
                .map(|&x| c.iter().filter(|&&y| y > x && sub.adjacent(x, y)).count())
                .sum();
            let max_deg = c
                .iter()
                .map(|&x| c.iter().filter(|&&y| sub.adjacent(x, y)).count())
                .max()
                .unwrap_or(0);
            let is_path = edges + 1 == c.len() && max_deg <= 2;
            linear &= is_path;
            descriptors.push(self.component_descriptor(v, &nb, &sub, c, is_path));
        }
        let mut components: Vec<usize> = comps.iter().map(Vec::len).collect();
        components.sort_unstable();
        LinkProfile {
            components,
            alternating,
            linear,
            orientation: orientation_class(&descriptors),
        }
    }

    /// Describe one link component by walking it as a path: for each vertex,
    /// whether the arrow with `v` points in or out.
    fn component_descriptor(
        &self,
        v: usize,
        nb: &[usize],
        sub: &Quiver,
        c: &[usize],
        is_path: bool,
    ) -> Vec<i8> {
        if !is_path {
            let mut d: Vec<i8> = c.iter().map(|&x| self.b[v][nb[x]].signum() as i8).collect();
            d.sort_unstable();
            d.insert(0, 9);
            return d;
        }
        let start = c
            .iter()
            .copied()
            .find(|&x| c.iter().filter(|&&y| sub.adjacent(x, y)).count() <= 1)
            .expect("paths have an endpoint");
        let mut order = vec![start];
        while order.len() < c.len() {
            let last = *order.last().expect("nonempty");
            let next = c
                .iter()
                .copied()
                .find(|&y| sub.adjacent(last, y) && !order.contains(&y))
                .expect("connected path");
            order.push(next);
        }
        let fwd: Vec<i8> = order.iter().map(|&x| self.b[v][nb[x]].signum() as i8).collect();
        let mut rev = fwd.clone();
        rev.reverse();
        fwd.min(rev)
    }

    /// Induced cycles of the underlying graph of length at least 3.
    pub fn chordless_cycles(&self) -> Vec<Cycle> {
        let n = self.n();
        let mut out = Vec::new();
        for s in 0..n {
            let mut path = vec![s];
            self.extend_cycles(s, &mut path, &mut out);
        }
        out
    }

    fn extend_cycles(&self, s: usize, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
        let last = *path.last().expect("nonempty");
        for w in self.neighbors(last) {
            if w <= s || path.contains(&w) {
                continue;
            }
            if path.len() >= 2 && path[1..path.len() - 1].iter().any(|&u| self.adjacent(u, w)) {
                continue;
            }
            path.push(w);
            if path.len() >= 3 && self.adjacent(w, s) {
                // each cycle is found in both directions; keep one
                if path[1] < w {
                    out.push(Cycle {
                        vertices: path.clone(),
                        oriented: self.is_directed_cycle(path),
                    });
                }
            } else if path.len() < 3 || !self.adjacent(w, s) {
                self.extend_cycles(s, path, out);
            }
            path.pop();
        }
    }

    fn is_directed_cycle(&self, c: &[usize]) -> bool {
        let k = c.len();
        let fwd = (0..k).all(|i| self.has_arrow(c[i], c[(i + 1) % k]));
        let bwd = (0..k).all(|i| self.has_arrow(c[(i + 1) % k], c[i]));
        fwd || bwd
    }

    /// Graphviz digraph, one edge per arrow (repeated for multiplicity),
    /// vertices labeled `1..n` unless labels are given.
    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {name} {{");
        for v in 0..self.n() {
            let label = labels.map_or_else(|| (v + 1).to_string(), |l| l[v].clone());
            let _ = writeln!(s, "  {} [label=\"{}\"];", v + 1, label);
        }
        for (x, y, m) in self.arrows() {
            for _ in 0..m {
                let _ = writeln!(s, "  {} -> {};", x + 1, y + 1);
            }
        }
        s.push_str("}\n");
        s
    }
}

fn permute_classes(
    classes: &mut [Vec<usize>],
    idx: usize,
    perm: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == classes.len() {
        visit(perm);
        return;
    }
    let len = classes[idx].len();
    heap_permutations(&mut classes[idx].clone(), len, &mut |p: &[usize]| {
        let base = perm.len();
        perm.extend_from_slice(p);
        permute_classes(classes, idx + 1, perm, visit);
        perm.truncate(base);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    heap_permutations(items, k - 1, f);
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
        heap_permutations(items, k - 1, f);
    }
}

fn orientation_class(descriptors: &[Vec<i8>]) -> String {
    let render = |ds: &[Vec<i8>]| -> String {
        let mut parts: Vec<String> = ds
            .iter()
            .map(|d| {
                d.iter()
                    .map(|&x| match x {
                        1 => 'o',
                        -1 => 'i',
                        9 => '*',
                        _ => '?',
                    })
                    .collect()
            })
            .collect();
        parts.sort();
        parts.join("|")
    };
    let a = render(descriptors);
    let flipped: Vec<Vec<i8>> = descriptors
        .iter()
        .map(|d| {
            let mut f: Vec<i8> = d.iter().map(|&x| if x == 9 { 9 } else { -x }).collect();
            if f.first() != Some(&9) {
                let mut r = f.clone();
                r.reverse();
                f = f.min(r);
            }
            f
        })
        .collect();
    let b = render(&flipped);
    a.min(b)
}

/// Quivers reachable by mutation, each in canonical form, in BFS order.
pub fn mutation_class(q: &Quiver, cap: usize) -> Result<Vec<Quiver>> {
    let start = q.canonical_form();
    let mut seen: HashSet<Quiver> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for k in 0..cur.n() {
            let next = cur.mutate(k)?.canonical_form();
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::ClassCapExceeded(cap));
                }
                seen.insert(next.clone());
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> Quiver {
        Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)])
    }

    #[test]
    fn mutation_is_involutive() {
        let q = Quiver::from_arrows(4, &[(0, 1), (2, 1), (2, 3), (3, 0)]);
        for k in 0..4 {
            assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
        }
    }

    #[test]
    fn mutate_linear_a3_middle_gives_cycle() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]);
        let m = q.mutate(1).unwrap();
        assert_eq!(m.canonical_form(), cycle3().canonical_form());
        // the alternating orientation does not produce a cycle
        let alt = Quiver::from_arrows(3, &[(0, 1), (2, 1)]);
        assert!(alt.mutate(1).unwrap().chordless_cycles().is_empty());
    }

    #[test]
    fn mutate_out_of_range() {
        assert!(cycle3().mutate(3).is_err());
    }

    #[test]
    fn shortest_paths_cycle3() {
        let q = cycle3();
        assert_eq!(q.shortest_paths(0, 1), vec![Path(vec![1, 2, 0])]);
        let rel = q.relations().unwrap();
        assert_eq!(rel.entries.len(), 3);
        assert!(rel.entries.iter().all(|e| e.kind == RelationKind::Zero));
    }

    #[test]
    fn tree_has_no_shortest_paths() {
        let q = Quiver::from_arrows(4, &[(0, 1), (2, 1), (2, 3)]);
        for (i, j, _) in q.arrows() {
            assert!(q.shortest_paths(i, j).is_empty());
        }
        assert!(q.relations().unwrap().relations().next().is_none());
        assert!(q.chordless_cycles().is_empty());
    }

    #[test]
    fn chorded_square_paths() {
        // an oriented square without chords has one shortest path per arrow
        let sq = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(sq.shortest_paths(0, 1), vec![Path(vec![1, 2, 3, 0])]);
        // adding the chord 0->2 destroys the induced square for arrow 0->1
        let ch = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 0)]);
        assert_eq!(ch.shortest_paths(0, 1), vec![Path(vec![1, 2, 0])]);
        assert_eq!(ch.shortest_paths(2, 0), vec![Path(vec![0, 1, 2])]);
        assert!(ch.shortest_paths(3, 0).is_empty());
    }

    #[test]
    fn commutativity_square() {
        // two triangles sharing the arrow 2->0: 0->1->2->0 and 0->3->2->0
        let q = Quiver::from_arrows(4, &[(0, 1), (1, 2), (0, 3), (3, 2), (2, 0)]);
        let p = q.shortest_paths(2, 0);
        assert_eq!(p, vec![Path(vec![0, 1, 2]), Path(vec![0, 3, 2])]);
        let rel = q.relations().unwrap();
        let e = rel.entries.iter().find(|e| e.source == 2).unwrap();
        assert_eq!(e.kind, RelationKind::Commutativity);
    }

    #[test]
    fn links() {
        let a4 = Quiver::from_arrows(4, &[(0, 1), (2, 1), (2, 3)]);
        assert_eq!(a4.link(0).components, vec![1]);
        let d4 = Quiver::from_arrows(4, &[(0, 1), (2, 1), (3, 1)]);
        let l = d4.link(1);
        assert_eq!(l.components, vec![1, 1, 1]);
        assert!(l.alternating && l.linear);
        assert_eq!(cycle3().link(0).components, vec![2]);
    }

    #[test]
    fn cycles_flag_orientation() {
        let c = cycle3().chordless_cycles();
        assert_eq!(c.len(), 1);
        assert!(c[0].oriented);
        let un = Quiver::from_arrows(3, &[(0, 1), (1, 2), (0, 2)]);
        let c = un.chordless_cycles();
        assert_eq!(c.len(), 1);
        assert!(!c[0].oriented);
    }

    #[test]
    fn a2_and_a3_classes() {
        let a2 = Quiver::from_arrows(2, &[(0, 1)]);
        assert_eq!(mutation_class(&a2, 100).unwrap().len(), 1);
        let a3 = Quiver::from_arrows(3, &[(0, 1), (1, 2)]);
        assert_eq!(mutation_class(&a3, 100).unwrap().len(), 4);
    }

    #[test]
    fn class_cap_is_enforced() {
        let a5 = Quiver::from_arrows(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(mutation_class(&a5, 2), Err(Error::ClassCapExceeded(2)));
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let q = cycle3();
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"n":3,"b":[[0,1,-1],[-1,0,1],[1,-1,0]]}"#);
        let back: Quiver = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Quiver>(r#"{"n":2,"b":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn dot_export() {
        let q = Quiver::from_arrows(2, &[(0, 1)]);
        let d = q.to_dot("Q", None);
        assert!(d.contains("1 -> 2;"));
        assert_eq!(d.matches("->").count(), 1);
    }
}
