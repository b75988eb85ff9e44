//! Simply-laced root systems and the almost positive root calculus.
//!
//! Vertices are 0-based in the Rust API; wire formats and rendered output use
//! 1-based labels. `D_n` follows the fork labeling (chain `1..n-2`, leaves
//! `n-1` and `n` attached to `n-2`), `E_n` uses the Bourbaki labeling with
//! vertex 2 attached to vertex 4.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub series: Series,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series:?}{rank}")))
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Series::A, rank).expect("A_n needs n >= 1")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Series::D, rank).expect("D_n needs n >= 4")
    }

    pub fn e(rank: usize) -> Self {
        Self::new(Series::E, rank).expect("E_n needs n in 6..=8")
    }

    /// Every type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for r in 1..=max_rank {
            out.push(Self::a(r));
        }
        for r in 4..=max_rank {
            out.push(Self::d(r));
        }
        for r in 6..=max_rank.min(8) {
            out.push(Self::e(r));
        }
        out
    }

    /// Undirected edges of the Dynkin diagram, 0-based, smaller endpoint first.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Series::D => {
                let mut e: Vec<_> = (0..n - 3).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            Series::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match (self.series, self.rank) {
            (Series::A, n) => n + 1,
            (Series::D, n) => 2 * n - 2,
            (Series::E, 6) => 12,
            (Series::E, 7) => 18,
            (Series::E, _) => 30,
        }
    }

    /// Number of positive roots.
    pub fn nu(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges()
            .into_iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('D') => Series::D,
            Some('E') => Series::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinType::new(series, rank)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn zero(n: usize) -> Self {
        Root(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Root(v)
    }

    pub fn negative_simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = -1;
        Root(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// `Some(i)` when this is `-alpha_i`.
    pub fn negative_simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                -1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.negative_simple_index() {
            return write!(f, "-a{}", i + 1);
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Bipartition of the Dynkin diagram: `plus` are the sinks of the alternating
/// quiver, `minus` its sources. Vertex 1 is always a source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteSigns {
    pub plus: BTreeSet<usize>,
    pub minus: BTreeSet<usize>,
}

impl BipartiteSigns {
    pub fn for_type(ty: DynkinType) -> Self {
        let n = ty.rank;
        let mut color = vec![None; n];
        color[0] = Some(Sign::Minus);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored before push");
            for w in ty.neighbors(v) {
                if color[w].is_none() {
                    color[w] = Some(c.opposite());
                    stack.push(w);
                }
            }
        }
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for (v, c) in color.into_iter().enumerate() {
            match c.expect("Dynkin diagrams are connected") {
                Sign::Plus => plus.insert(v),
                Sign::Minus => minus.insert(v),
            };
        }
        BipartiteSigns { plus, minus }
    }

    pub fn sign(&self, v: usize) -> Sign {
        if self.plus.contains(&v) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn class(&self, s: Sign) -> &BTreeSet<usize> {
        match s {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.plus.contains(&v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.minus.contains(&v)
    }
}

/// Rational coordinates of a lattice vector in a cluster basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterExpansion {
    pub coefficients: Vec<Q>,
    pub nonnegative_integral: bool,
}

impl ClusterExpansion {
    /// Indices (into the cluster) with a nonzero coefficient.
    pub fn components(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: DynkinType,
    cartan: Vec<Vec<i32>>,
    signs: BipartiteSigns,
    positives: Vec<Root>,
    almost_positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: DynkinType) -> Self {
        let n = ty.rank;
        let mut cartan = vec![vec![0; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in ty.edges() {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        let signs = BipartiteSigns::for_type(ty);
        let mut rs = RootSystem {
            ty,
            cartan,
            signs,
            positives: Vec::new(),
            almost_positive: Vec::new(),
            index: HashMap::new(),
        };
        rs.positives = rs.generate_positive_roots();
        let mut ap: Vec<Root> = (0..n).map(|i| Root::negative_simple(n, i)).collect();
        ap.extend(rs.positives.iter().cloned());
        rs.index = ap.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        rs.almost_positive = ap;
        rs
    }

    fn generate_positive_roots(&self) -> Vec<Root> {
        let n = self.ty.rank;
        let mut found: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut frontier: Vec<Root> = found.iter().cloned().collect();
        while let Some(r) = frontier.pop() {
            for i in 0..n {
                let s = self.simple_reflection(i, &r);
                if s.is_positive() && found.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn signs(&self) -> &BipartiteSigns {
        &self.signs
    }

    /// Positive roots in lexicographic order of their coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    /// Negative simple roots `-a1..-an` followed by the positive roots.
    pub fn almost_positive_roots(&self) -> &[Root] {
        &self.almost_positive
    }

    /// Position in [`almost_positive_roots`](Self::almost_positive_roots).
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_almost_positive(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn highest_root(&self) -> &Root {
        self.positives
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty root system")
    }

    pub fn simple_reflection(&self, i: usize, g: &Root) -> Root {
        let pairing: i32 = (0..self.rank()).map(|j| self.cartan[i][j] * g.0[j]).sum();
        let mut out = g.clone();
        out.0[i] -= pairing;
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.ty.neighbors(v)
    }

    /// `tau_eps` extended piecewise-linearly to the whole root lattice: for
    /// `i` in the class of `eps`, `[g:a_i] -> -[g:a_i] - sum_{j~i} a_ij max([g:a_j], 0)`;
    /// other coordinates are unchanged. On almost positive roots this is the
    /// involution fixing `-a_i` for `i` of the opposite class and acting as the
    /// product of the commuting reflections `s_i` (`i` in the class) otherwise.
    pub fn tau(&self, eps: Sign, g: &Root) -> Root {
        let mut out = g.clone();
        for &i in self.signs.class(eps) {
            let s: i32 = self
                .neighbors(i)
                .iter()
                .map(|&j| self.cartan[i][j] * g.0[j].max(0))
                .sum();
            out.0[i] = -g.0[i] - s;
        }
        out
    }

    /// Apply a word of tau's, rightmost first.
    pub fn apply_word(&self, word: &[Sign], g: &Root) -> Root {
        word.iter().rev().fold(g.clone(), |acc, &s| self.tau(s, &acc))
    }

    /// Linear Coxeter transformation `(prod_{I-} s_i)(prod_{I+} s_i)`.
    pub fn coxeter(&self, g: &Root) -> Root {
        let mut out = g.clone();
        for &i in &self.signs.plus {
            out = self.simple_reflection(i, &out);
        }
        for &i in &self.signs.minus {
            out = self.simple_reflection(i, &out);
        }
        out
    }

    pub fn inverse_coxeter(&self, g: &Root) -> Root {
        let mut out = g.clone();
        for &i in &self.signs.minus {
            out = self.simple_reflection(i, &out);
        }
        for &i in &self.signs.plus {
            out = self.simple_reflection(i, &out);
        }
        out
    }

    /// Order of `tau_- tau_+` on the almost positive roots, asserted to be at
    /// most `h + 2`.
    pub fn tau_period(&self) -> usize {
        let bound = self.ty.coxeter_number() + 2;
        let mut current: Vec<Root> = self.almost_positive.clone();
        for k in 1..=bound {
            current = current
                .iter()
                .map(|r| self.tau(Sign::Minus, &self.tau(Sign::Plus, r)))
                .collect();
            if current == self.almost_positive {
                return k;
            }
        }
        panic!("tau_- tau_+ has order exceeding h + 2 = {bound}");
    }

    /// All words representing elements of the group generated by `tau_+` and
    /// `tau_-`: alternating words of length up to twice the period.
    pub fn group_words(&self) -> Vec<Vec<Sign>> {
        let p = self.tau_period();
        let mut words = vec![Vec::new()];
        for start in [Sign::Plus, Sign::Minus] {
            let mut w = Vec::new();
            let mut s = start;
            for _ in 0..2 * p {
                w.push(s);
                words.push(w.clone());
                s = s.opposite();
            }
        }
        words
    }

    /// The element `beta (+) beta'` of the two-element orbit set
    /// `{ s^-1(s(beta) + s(beta')) }` that differs from `beta + beta'`.
    pub fn uplus(&self, beta: &Root, beta_p: &Root) -> Result<Root> {
        let set = self.uplus_orbit_set(beta, beta_p);
        let sum = beta.add(beta_p);
        // In rank 1 both elements are zero and the set collapses.
        if set.len() == 1 && set.contains(&sum) && sum.is_zero() {
            return Ok(sum);
        }
        if set.len() != 2 || !set.contains(&sum) {
            return Err(Error::NotExchangeable(set.len()));
        }
        Ok(set.into_iter().find(|r| *r != sum).expect("two elements"))
    }

    pub fn uplus_orbit_set(&self, beta: &Root, beta_p: &Root) -> BTreeSet<Root> {
        self.group_words()
            .iter()
            .map(|w| {
                let inv: Vec<Sign> = w.iter().rev().copied().collect();
                let s = self.apply_word(w, beta).add(&self.apply_word(w, beta_p));
                self.apply_word(&inv, &s)
            })
            .collect()
    }

    /// The sign function on exchangeable pairs, by tau-reduction to a
    /// negative simple root. `first` picks which tau is applied first.
    pub fn sign_eps_with(&self, beta: &Root, beta_p: &Root, first: Sign) -> Result<i32> {
        let limit = 4 * (self.ty.coxeter_number() + 2);
        let (mut b, mut bp) = (beta.clone(), beta_p.clone());
        let mut sign = 1;
        let mut t = first;
        for _ in 0..=limit {
            if let Some(j) = b.negative_simple_index() {
                return Ok(-sign * self.signs.sign(j).value());
            }
            if let Some(j) = bp.negative_simple_index() {
                return Ok(sign * self.signs.sign(j).value());
            }
            b = self.tau(t, &b);
            bp = self.tau(t, &bp);
            sign = -sign;
            t = t.opposite();
        }
        Err(Error::SignReduction)
    }

    pub fn sign_eps(&self, beta: &Root, beta_p: &Root) -> Result<i32> {
        self.sign_eps_with(beta, beta_p, Sign::Plus)
    }

    /// Coordinates of `gamma` in the basis given by `cluster`.
    pub fn cluster_expand(&self, gamma: &Root, cluster: &[Root]) -> Result<ClusterExpansion> {
        let n = self.rank();
        if cluster.len() != n {
            return Err(Error::NotABasis);
        }
        let mut a = Matrix::zeros(n, n);
        for (j, r) in cluster.iter().enumerate() {
            for i in 0..n {
                a[(i, j)] = q(r.0[i] as i64);
            }
        }
        if a.rank() != n {
            return Err(Error::NotABasis);
        }
        let b: Vec<Q> = gamma.0.iter().map(|&c| q(c as i64)).collect();
        let coefficients = a.solve(&b).ok_or(Error::NotABasis)?;
        let nonnegative_integral = coefficients
            .iter()
            .all(|c| c.is_integer() && !c.is_negative());
        Ok(ClusterExpansion {
            coefficients,
            nonnegative_integral,
        })
    }

    /// Compatibility degree `(alpha || beta)`: tau-invariant, and
    /// `(-a_i || beta) = max([beta : a_i], 0)`.
    pub fn compatibility_degree(&self, alpha: &Root, beta: &Root) -> u32 {
        let limit = 2 * (self.ty.coxeter_number() + 2) + 2;
        for first in [Sign::Plus, Sign::Minus] {
            let (mut a, mut b) = (alpha.clone(), beta.clone());
            let mut t = first;
            for _ in 0..limit {
                if let Some(i) = a.negative_simple_index() {
                    return b.0[i].max(0) as u32;
                }
                a = self.tau(t, &a);
                b = self.tau(t, &b);
                t = t.opposite();
            }
        }
        panic!("tau orbit of {alpha} contains no negative simple root");
    }

    pub fn compatible(&self, alpha: &Root, beta: &Root) -> bool {
        self.compatibility_degree(alpha, beta) == 0
    }

    /// Tits form `q(x) = sum x_i^2 - sum_{edges} x_i x_j`.
    pub fn tits_form(&self, g: &Root) -> i32 {
        let mut s: i32 = g.0.iter().map(|x| x * x).sum();
        for (a, b) in self.ty.edges() {
            s -= g.0[a] * g.0[b];
        }
        s
    }

    /// Dimension vector of the indecomposable projective at `i` over the
    /// alternating quiver (sources point at sinks).
    pub fn dim_projective(&self, i: usize) -> Root {
        let n = self.rank();
        let mut r = Root::simple(n, i);
        if self.signs.is_source(i) {
            for j in self.neighbors(i) {
                r.0[j] += 1;
            }
        }
        r
    }

    pub fn dim_injective(&self, i: usize) -> Root {
        let n = self.rank();
        let mut r = Root::simple(n, i);
        if self.signs.is_sink(i) {
            for j in self.neighbors(i) {
                r.0[j] += 1;
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_types() {
        for s in ["A1", "A3", "D4", "D5", "E6", "E8"] {
            let t: DynkinType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("A0".parse::<DynkinType>().is_err());
        assert!("X2".parse::<DynkinType>().is_err());
    }

    #[test]
    fn a1_and_a2_roots() {
        let a1 = RootSystem::new(DynkinType::a(1));
        assert_eq!(a1.positive_roots(), &[Root(vec![1])]);
        let a2 = RootSystem::new(DynkinType::a(2));
        assert_eq!(
            a2.positive_roots(),
            &[Root(vec![0, 1]), Root(vec![1, 0]), Root(vec![1, 1])]
        );
    }

    #[test]
    fn reflections() {
        let a2 = RootSystem::new(DynkinType::a(2));
        assert_eq!(a2.simple_reflection(0, &Root(vec![1, 0])), Root(vec![-1, 0]));
        assert_eq!(a2.simple_reflection(0, &Root(vec![0, 1])), Root(vec![1, 1]));
    }

    #[test]
    fn bipartition_convention() {
        let d4 = RootSystem::new(DynkinType::d(4));
        assert!(d4.signs().is_source(0));
        // hub of D4 is vertex 2 (0-based 1)
        assert!(d4.signs().is_sink(1));
        for (a, b) in DynkinType::e(8).edges() {
            let s = BipartiteSigns::for_type(DynkinType::e(8));
            assert_ne!(s.sign(a), s.sign(b));
        }
    }

    #[test]
    fn tau_fixes_opposite_negative_simples() {
        let a3 = RootSystem::new(DynkinType::a(3));
        for &i in &a3.signs().minus {
            let r = Root::negative_simple(3, i);
            assert_eq!(a3.tau(Sign::Plus, &r), r);
        }
        for &i in &a3.signs().plus {
            let r = Root::negative_simple(3, i);
            assert_eq!(a3.tau(Sign::Plus, &r), Root::simple(3, i));
        }
    }

    #[test]
    fn uplus_special_case_a2() {
        let a2 = RootSystem::new(DynkinType::a(2));
        // clusters {a1, a1+a2} and {a1, -a2}: (a1+a2) (+) (-a2) = (a1+a2) - a2 - a1
        let r = a2.uplus(&Root(vec![1, 1]), &Root(vec![0, -1])).unwrap();
        assert_eq!(r, Root(vec![0, 0]));
        // a1 and a2 are exchanged across the cluster containing a1+a2
        let s = a2.uplus(&Root(vec![1, 0]), &Root(vec![0, 1])).unwrap();
        assert_ne!(s, Root(vec![1, 1]));
    }

    #[test]
    fn non_exchangeable_pair_errors() {
        let a2 = RootSystem::new(DynkinType::a(2));
        // a1 and -a2 lie in a common cluster
        let err = a2.uplus(&Root(vec![1, 0]), &Root(vec![0, -1]));
        assert!(matches!(err, Err(Error::NotExchangeable(_))));
    }

    #[test]
    fn cluster_expand_basics() {
        let a2 = RootSystem::new(DynkinType::a(2));
        let cl = [Root(vec![1, 0]), Root(vec![0, 1])];
        let e = a2.cluster_expand(&Root(vec![1, 1]), &cl).unwrap();
        assert_eq!(e.coefficients, vec![q(1), q(1)]);
        assert!(e.nonnegative_integral);
        let z = a2.cluster_expand(&Root(vec![0, 0]), &cl).unwrap();
        assert!(z.components().is_empty());
        let singular = [Root(vec![1, 0]), Root(vec![-1, 0])];
        assert_eq!(
            a2.cluster_expand(&Root(vec![1, 1]), &singular),
            Err(Error::NotABasis)
        );
    }

    #[test]
    fn compatibility_degree_base_cases() {
        let a3 = RootSystem::new(DynkinType::a(3));
        for i in 0..3 {
            for j in 0..3 {
                let ni = Root::negative_simple(3, i);
                let nj = Root::negative_simple(3, j);
                assert_eq!(a3.compatibility_degree(&ni, &nj), 0);
            }
            let ni = Root::negative_simple(3, i);
            assert_eq!(a3.compatibility_degree(&ni, &Root::simple(3, i)), 1);
        }
    }

    #[test]
    fn root_display() {
        assert_eq!(Root(vec![1, 1, 0]).to_string(), "a1+a2");
        assert_eq!(Root(vec![0, -1, 0]).to_string(), "-a2");
        assert_eq!(Root(vec![1, 2, 1]).to_string(), "a1+2a2+a3");
    }
}
