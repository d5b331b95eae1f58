//! Classical root systems: positive and simple roots, the root poset,
//! heights, addition triples and antichain enumeration.
//!
//! Coordinates follow the usual realizations: family A of rank `n` lives in
//! `R^{n+1}` (roots `e_i - e_j`), families B, C, D of rank `n` live in `R^n`.
//! The canonical order of the positive roots is frozen because sign types and
//! Shi vectors are serialized positionally against it:
//!
//! * differences `e_i - e_j` by `(i, j)` lexicographically,
//! * then sums `e_i + e_j` by `(i, j)` lexicographically,
//! * then `e_i` (family B) or `2 e_i` (family C) by `i`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::{Error, Result};

/// The four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Smallest rank for which the family is defined and irreducible.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// A family together with a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystemKind {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemKind {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(RootSystemKind { family, rank })
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Number of positive roots.
    pub fn positive_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, stored as its integer coordinates in the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    /// `e_i - e_j` (1-based indices) in a space of dimension `dim`.
    fn diff(dim: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0; dim];
        c[i - 1] = 1;
        c[j - 1] = -1;
        Root { coords: c }
    }

    /// `e_i + e_j` (1-based indices).
    fn sum(dim: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0; dim];
        c[i - 1] = 1;
        c[j - 1] = 1;
        Root { coords: c }
    }

    /// `k * e_i` (1-based index).
    fn axis(dim: usize, i: usize, k: i64) -> Self {
        let mut c = vec![0; dim];
        c[i - 1] = k;
        Root { coords: c }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Standard inner product.
    pub fn dot(&self, other: &Root) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> i64 {
        self.dot(self)
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// The coroot `2a / <a, a>`; integral for all crystallographic roots.
    pub fn coroot(&self) -> Root {
        let nsq = self.norm_sq();
        let coords: Vec<i64> = self
            .coords
            .iter()
            .map(|&c| {
                let num = 2 * c;
                debug_assert_eq!(num % nsq, 0, "coroot of a non-crystallographic vector");
                num / nsq
            })
            .collect();
        Root { coords }
    }

    pub(crate) fn sub(&self, other: &Root) -> Root {
        Root {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub(crate) fn add(&self, other: &Root) -> Root {
        Root {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Reflection of `self` in the hyperplane orthogonal to `mirror`.
    pub(crate) fn reflected_in(&self, mirror: &Root) -> Root {
        let k = self.dot(&mirror.coroot());
        let mut coords = self.coords.clone();
        for (c, m) in coords.iter_mut().zip(&mirror.coords) {
            *c -= k * m;
        }
        Root { coords }
    }

    /// Pattern of nonzero coordinates as `(1-based index, value)` pairs.
    fn support(&self) -> Vec<(usize, i64)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
            .collect()
    }
}

/// Renders roots in the conventional `e1-e2`, `e1+e2`, `2e1`, `e1` style,
/// falling back to the raw coordinate list.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sup = self.support();
        match sup.as_slice() {
            [(i, 1), (j, -1)] => write!(f, "e{i}-e{j}"),
            [(i, -1), (j, 1)] => write!(f, "e{j}-e{i}"),
            [(i, 1), (j, 1)] => write!(f, "e{i}+e{j}"),
            [(i, -1), (j, -1)] => write!(f, "-(e{i}+e{j})"),
            [(i, 1)] => write!(f, "e{i}"),
            [(i, -1)] => write!(f, "-e{i}"),
            [(i, 2)] => write!(f, "2e{i}"),
            [(i, -2)] => write!(f, "-2e{i}"),
            _ => write!(f, "{:?}", self.coords),
        }
    }
}

/// A classical root system with its positive roots in canonical order and
/// the derived poset data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootSystemKind,
    positive: Vec<Root>,
    simple: Vec<Root>,
    index: BTreeMap<Root, usize>,
    heights: Vec<u32>,
    leq: Vec<bool>,
    triples: Vec<(usize, usize, usize)>,
    highest: usize,
}

impl RootSystem {
    /// Builds the root system of the given kind (the `build_root_system`
    /// operation). Deterministic: roots always come out in canonical order.
    pub fn new(kind: RootSystemKind) -> Result<Self> {
        let kind = RootSystemKind::new(kind.family, kind.rank)?;
        let n = kind.rank;
        let dim = kind.ambient_dim();
        let mut positive = Vec::with_capacity(kind.positive_count());
        let mut simple = Vec::with_capacity(n);

        match kind.family {
            Family::A => {
                for i in 1..=n + 1 {
                    for j in i + 1..=n + 1 {
                        positive.push(Root::diff(dim, i, j));
                    }
                }
                for i in 1..=n {
                    simple.push(Root::diff(dim, i, i + 1));
                }
            }
            Family::B | Family::C | Family::D => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        positive.push(Root::diff(dim, i, j));
                    }
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        positive.push(Root::sum(dim, i, j));
                    }
                }
                for i in 1..=n - 1 {
                    simple.push(Root::diff(dim, i, i + 1));
                }
                match kind.family {
                    Family::B => {
                        for i in 1..=n {
                            positive.push(Root::axis(dim, i, 1));
                        }
                        simple.push(Root::axis(dim, n, 1));
                    }
                    Family::C => {
                        for i in 1..=n {
                            positive.push(Root::axis(dim, i, 2));
                        }
                        simple.push(Root::axis(dim, n, 2));
                    }
                    Family::D => {
                        simple.push(Root::sum(dim, n - 1, n));
                    }
                    Family::A => unreachable!(),
                }
            }
        }
        debug_assert_eq!(positive.len(), kind.positive_count());

        let index: BTreeMap<Root, usize> = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut rs = RootSystem {
            kind,
            positive,
            simple,
            index,
            heights: Vec::new(),
            leq: Vec::new(),
            triples: Vec::new(),
            highest: 0,
        };
        rs.compute_poset()?;
        rs.compute_triples();
        Ok(rs)
    }

    fn compute_poset(&mut self) -> Result<()> {
        let m = self.positive.len();
        self.heights = Vec::with_capacity(m);
        for r in &self.positive {
            let coeffs = self
                .decompose(r.coords())
                .filter(|cs| cs.iter().all(|c| c.is_integer() && *c >= Ratio::zero()))
                .expect("positive root must decompose over the simple roots");
            let h: i64 = coeffs.iter().map(|c| c.to_integer()).sum();
            self.heights.push(h as u32);
        }

        self.leq = vec![false; m * m];
        for a in 0..m {
            for b in 0..m {
                let diff = self.positive[b].sub(&self.positive[a]);
                let ok = match self.decompose(diff.coords()) {
                    Some(cs) => cs.iter().all(|c| c.is_integer() && *c >= Ratio::zero()),
                    None => false,
                };
                self.leq[a * m + b] = ok;
            }
        }

        let maximal: Vec<usize> = (0..m)
            .filter(|&a| (0..m).all(|b| b == a || !self.leq[a * m + b]))
            .collect();
        assert_eq!(maximal.len(), 1, "root poset must have a unique maximum");
        self.highest = maximal[0];
        Ok(())
    }

    fn compute_triples(&mut self) {
        let m = self.positive.len();
        for a in 0..m {
            for b in a..m {
                let sum = self.positive[a].add(&self.positive[b]);
                if let Some(&c) = self.index.get(&sum) {
                    self.triples.push((a, b, c));
                }
            }
        }
    }

    /// Exact coefficients of `v` over the simple roots, if `v` lies in their
    /// span. Solved by Gaussian elimination over rationals.
    pub(crate) fn decompose(&self, v: &[i64]) -> Option<Vec<Ratio<i64>>> {
        let k = self.simple.len();
        let m = self.kind.ambient_dim();
        if v.len() != m {
            return None;
        }
        let mut aug: Vec<Vec<Ratio<i64>>> = (0..m)
            .map(|r| {
                let mut row: Vec<Ratio<i64>> = (0..k)
                    .map(|c| Ratio::from_integer(self.simple[c].coords()[r]))
                    .collect();
                row.push(Ratio::from_integer(v[r]));
                row
            })
            .collect();

        let mut pivot_of_col = vec![usize::MAX; k];
        let mut next_row = 0;
        for col in 0..k {
            let pivot = (next_row..m).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(next_row, pivot);
            let p = aug[next_row][col];
            for x in aug[next_row].iter_mut() {
                *x /= p;
            }
            let pivot_row = aug[next_row].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != next_row && !row[col].is_zero() {
                    let factor = row[col];
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= factor * p;
                    }
                }
            }
            pivot_of_col[col] = next_row;
            next_row += 1;
        }
        // Consistency: leftover rows must have zero right-hand side.
        if aug[next_row..].iter().any(|row| !row[k].is_zero()) {
            return None;
        }
        Some(pivot_of_col.iter().map(|&r| aug[r][k]).collect())
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.kind.family
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.kind.ambient_dim()
    }

    /// Positive roots in canonical order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Canonical index of a positive root.
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.positive[idx]
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_simple_root(&self, r: &Root) -> bool {
        self.simple.contains(r)
    }

    /// Whether `r` is a positive root (`Ok(true)`), a negative root
    /// (`Ok(false)`), or not a root at all.
    pub fn is_positive(&self, r: &Root) -> Result<bool> {
        if self.is_positive_root(r) {
            Ok(true)
        } else if self.is_positive_root(&r.negated()) {
            Ok(false)
        } else {
            Err(Error::NotARoot)
        }
    }

    /// Height of a positive root: the coefficient sum over the simple roots.
    pub fn height(&self, r: &Root) -> Result<u32> {
        let idx = self.root_index(r).ok_or(Error::NotAPositiveRoot)?;
        Ok(self.heights[idx])
    }

    pub fn height_by_index(&self, idx: usize) -> u32 {
        self.heights[idx]
    }

    /// Root poset order: `a <= b` iff `b - a` is a nonnegative integer
    /// combination of simple roots.
    pub fn poset_leq(&self, a: &Root, b: &Root) -> Result<bool> {
        let ia = self.root_index(a).ok_or(Error::NotAPositiveRoot)?;
        let ib = self.root_index(b).ok_or(Error::NotAPositiveRoot)?;
        Ok(self.leq_by_index(ia, ib))
    }

    pub fn leq_by_index(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.positive.len() + b]
    }

    pub fn comparable_by_index(&self, a: usize, b: usize) -> bool {
        self.leq_by_index(a, b) || self.leq_by_index(b, a)
    }

    /// The unique maximum of the root poset.
    pub fn highest_root(&self) -> &Root {
        &self.positive[self.highest]
    }

    /// All unordered pairs `{a, b}` of positive roots with `a + b` again a
    /// positive root, as canonical indices `(a, b, a+b)` with `a <= b`.
    pub fn triple_indices(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    /// The addition triples as root references `(a, b, c)` with `a + b = c`.
    pub fn addition_triples(&self) -> Vec<(&Root, &Root, &Root)> {
        self.triples
            .iter()
            .map(|&(a, b, c)| (&self.positive[a], &self.positive[b], &self.positive[c]))
            .collect()
    }

    /// All antichains of the root poset, including the empty one, by
    /// backtracking over the canonical order. Deterministic order.
    pub fn antichains(&self) -> Vec<NonNestingPartition> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        self.antichain_rec(0, &mut cur, &mut out);
        out
    }

    fn antichain_rec(
        &self,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<NonNestingPartition>,
    ) {
        out.push(NonNestingPartition::from_indices(self, cur));
        for i in start..self.positive.len() {
            if cur.iter().all(|&j| !self.comparable_by_index(i, j)) {
                cur.push(i);
                self.antichain_rec(i + 1, cur, out);
                cur.pop();
            }
        }
    }
}

/// A non-nesting partition: an antichain of the root poset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonNestingPartition {
    roots: Vec<Root>,
}

impl NonNestingPartition {
    /// Validates that the roots are positive and pairwise incomparable.
    pub fn new(rs: &RootSystem, mut roots: Vec<Root>) -> Result<Self> {
        let mut indices = Vec::with_capacity(roots.len());
        for r in &roots {
            indices.push(rs.root_index(r).ok_or(Error::NotAPositiveRoot)?);
        }
        indices.sort_unstable();
        indices.dedup();
        if indices.len() != roots.len() {
            return Err(Error::NotAnAntichain);
        }
        for (k, &a) in indices.iter().enumerate() {
            for &b in &indices[k + 1..] {
                if rs.comparable_by_index(a, b) {
                    return Err(Error::NotAnAntichain);
                }
            }
        }
        roots.sort_by_key(|r| rs.root_index(r).unwrap());
        Ok(NonNestingPartition { roots })
    }

    pub fn empty() -> Self {
        NonNestingPartition { roots: Vec::new() }
    }

    fn from_indices(rs: &RootSystem, indices: &[usize]) -> Self {
        NonNestingPartition {
            roots: indices.iter().map(|&i| rs.positive[i].clone()).collect(),
        }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }
}

impl fmt::Display for NonNestingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(RootSystemKind { family, rank }).unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!(RootSystem::new(RootSystemKind { family: Family::A, rank: 0 }).is_err());
        assert!(RootSystem::new(RootSystemKind { family: Family::B, rank: 1 }).is_err());
        assert!(RootSystem::new(RootSystemKind { family: Family::C, rank: 1 }).is_err());
        assert!(RootSystem::new(RootSystemKind { family: Family::D, rank: 2 }).is_err());
        assert!(RootSystem::new(RootSystemKind { family: Family::A, rank: 1 }).is_ok());
        assert!(RootSystem::new(RootSystemKind { family: Family::D, rank: 3 }).is_ok());
    }

    #[test]
    fn positive_counts_match_closed_forms() {
        for n in 1..=4 {
            assert_eq!(rs(Family::A, n).num_positive(), n * (n + 1) / 2);
        }
        for n in 2..=4 {
            assert_eq!(rs(Family::B, n).num_positive(), n * n);
            assert_eq!(rs(Family::C, n).num_positive(), n * n);
        }
        for n in 3..=4 {
            assert_eq!(rs(Family::D, n).num_positive(), n * (n - 1));
        }
    }

    #[test]
    fn a2_roots_in_canonical_order() {
        let s = rs(Family::A, 2);
        let shown: Vec<_> = s.positive_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["e1-e2", "e1-e3", "e2-e3"]);
        let simple: Vec<_> = s.simple_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(simple, ["e1-e2", "e2-e3"]);
    }

    #[test]
    fn b2_and_c2_roots() {
        let b = rs(Family::B, 2);
        let shown: Vec<_> = b.positive_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["e1-e2", "e1+e2", "e1", "e2"]);
        let simple: Vec<_> = b.simple_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(simple, ["e1-e2", "e2"]);

        let c = rs(Family::C, 2);
        let shown: Vec<_> = c.positive_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["e1-e2", "e1+e2", "2e1", "2e2"]);
        let simple: Vec<_> = c.simple_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(simple, ["e1-e2", "2e2"]);
    }

    #[test]
    fn heights() {
        let a2 = rs(Family::A, 2);
        for s in a2.simple_roots() {
            assert_eq!(a2.height(s).unwrap(), 1);
        }
        assert_eq!(a2.height(&Root::diff(3, 1, 3)).unwrap(), 2);

        // 2e1 = 2(e1-e2) + (2e2) over the C2 simple roots.
        let c2 = rs(Family::C, 2);
        assert_eq!(c2.height(&Root::axis(2, 1, 2)).unwrap(), 3);

        assert!(a2.height(&Root::diff(3, 2, 1)).is_err());
    }

    #[test]
    fn poset_order_a2() {
        let a2 = rs(Family::A, 2);
        let a12 = Root::diff(3, 1, 2);
        let a13 = Root::diff(3, 1, 3);
        let a23 = Root::diff(3, 2, 3);
        assert!(a2.poset_leq(&a12, &a12).unwrap());
        assert!(a2.poset_leq(&a12, &a13).unwrap());
        assert!(!a2.poset_leq(&a13, &a12).unwrap());
        assert!(!a2.poset_leq(&a12, &a23).unwrap());
        assert!(!a2.poset_leq(&a23, &a12).unwrap());
    }

    #[test]
    fn poset_axioms_and_height_monotone() {
        for (family, max_rank) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 4),
        ] {
            for rank in family.min_rank()..=max_rank {
                let s = rs(family, rank);
                let m = s.num_positive();
                for a in 0..m {
                    assert!(s.leq_by_index(a, a));
                    for b in 0..m {
                        if a != b && s.leq_by_index(a, b) {
                            assert!(!s.leq_by_index(b, a), "{family}{rank}: antisymmetry");
                            assert!(
                                s.height_by_index(a) < s.height_by_index(b),
                                "{family}{rank}: height must grow strictly"
                            );
                        }
                        for c in 0..m {
                            if s.leq_by_index(a, b) && s.leq_by_index(b, c) {
                                assert!(s.leq_by_index(a, c), "{family}{rank}: transitivity");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn highest_root_examples() {
        for n in 1..=4 {
            let s = rs(Family::A, n);
            assert_eq!(*s.highest_root(), Root::diff(n + 1, 1, n + 1));
            // Exhaustive comparison oracle.
            let max: Vec<&Root> = s
                .positive_roots()
                .iter()
                .filter(|r| {
                    s.positive_roots()
                        .iter()
                        .all(|o| s.poset_leq(o, r).unwrap())
                })
                .collect();
            assert_eq!(max, [s.highest_root()]);
        }
        assert_eq!(*rs(Family::B, 2).highest_root(), Root::sum(2, 1, 2));
        assert_eq!(*rs(Family::C, 2).highest_root(), Root::axis(2, 1, 2));
        assert_eq!(*rs(Family::D, 3).highest_root(), Root::sum(3, 1, 2));
    }

    #[test]
    fn addition_triples_examples() {
        let a1 = rs(Family::A, 1);
        assert!(a1.triple_indices().is_empty());

        let a2 = rs(Family::A, 2);
        let triples = a2.addition_triples();
        assert_eq!(triples.len(), 1);
        assert_eq!(*triples[0].0, Root::diff(3, 1, 2));
        assert_eq!(*triples[0].1, Root::diff(3, 2, 3));
        assert_eq!(*triples[0].2, Root::diff(3, 1, 3));

        let c2 = rs(Family::C, 2);
        let has = c2.addition_triples().iter().any(|(a, b, c)| {
            **a == Root::diff(2, 1, 2) && **b == Root::sum(2, 1, 2) && **c == Root::axis(2, 1, 2)
        });
        assert!(has, "e1-e2 + e1+e2 = 2e1 must be a C2 triple");
    }

    #[test]
    fn triples_respect_heights() {
        for (family, rank) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 4),
        ] {
            let s = rs(family, rank);
            for &(a, b, c) in s.triple_indices() {
                assert_eq!(
                    s.height_by_index(a) + s.height_by_index(b),
                    s.height_by_index(c)
                );
            }
        }
    }

    #[test]
    fn antichain_counts_match_subset_filter() {
        for (family, rank, expected) in [
            (Family::A, 1, 2),
            (Family::A, 2, 5),
            (Family::B, 2, 6),
        ] {
            let s = rs(family, rank);
            assert_eq!(s.antichains().len(), expected);
        }
        // Independent oracle: filter all subsets.
        for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::C, 2), (Family::D, 3)] {
            let s = rs(family, rank);
            let m = s.num_positive();
            let mut count = 0usize;
            for mask in 0u32..1 << m {
                let picked: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
                let ok = picked.iter().enumerate().all(|(k, &a)| {
                    picked[k + 1..]
                        .iter()
                        .all(|&b| !s.comparable_by_index(a, b))
                });
                if ok {
                    count += 1;
                }
            }
            assert_eq!(s.antichains().len(), count, "{family}{rank}");
        }
    }

    #[test]
    fn antichains_are_valid_and_deterministic() {
        let s = rs(Family::B, 3);
        let first = s.antichains();
        let second = s.antichains();
        assert_eq!(first, second);
        assert!(first[0].is_empty());
        for p in &first {
            assert!(NonNestingPartition::new(&s, p.roots().to_vec()).is_ok());
        }
    }

    #[test]
    fn is_positive_examples() {
        let a2 = rs(Family::A, 2);
        assert!(a2.is_positive(&Root::diff(3, 1, 2)).unwrap());
        assert!(!a2.is_positive(&Root::diff(3, 2, 1)).unwrap());
        let b2 = rs(Family::B, 2);
        assert!(!b2.is_positive(&Root::axis(2, 1, -1)).unwrap());
        assert!(b2.is_positive(&Root::new(vec![1, 1])).unwrap());
        // Not a root at all.
        assert_eq!(b2.is_positive(&Root::new(vec![3, 0])).unwrap_err(), Error::NotARoot);
    }

    #[test]
    fn non_antichain_rejected() {
        let s = rs(Family::A, 2);
        let chain = vec![Root::diff(3, 1, 2), Root::diff(3, 1, 3)];
        assert_eq!(
            NonNestingPartition::new(&s, chain).unwrap_err(),
            Error::NotAnAntichain
        );
    }
}
