//! Ground-truth engine: enumerates alcoves of the affine Weyl group by exact
//! rational reflections, derives their K-vectors by flooring root pairings,
//! groups alcoves into Shi regions by sign type, and extracts the true
//! minimal element of every region.
//!
//! Internally the base point is scaled by a fixed denominator so that every
//! reflection stays in integer arithmetic; the integers are arbitrary
//! precision, so the ground truth can never overflow. The breadth-first
//! search reflects each alcove's interior point across both bounding
//! hyperplanes of every positive root and dedupes alcoves by K-vector.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::roots::{Family, Root, RootSystem};
use crate::shi::{check_shi_relations, ShiVector, Sign, SignType};
use crate::{Error, Result};

/// An open alcove, represented by an exact interior point together with the
/// derived K-vector and its breadth-first distance from the fundamental
/// alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alcove {
    pub point: Vec<BigRational>,
    pub kvec: ShiVector,
    pub depth: u32,
}

/// How far to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateMode {
    /// Visit everything within the given breadth-first radius.
    Radius(u32),
    /// Keep going until every discovered region holds its minimal element
    /// and two consecutive layers discover no new sign type. With a target,
    /// additionally insist on exactly that many regions.
    UntilRegions { target: Option<usize> },
}

/// Safety caps for the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_depth: u32,
    pub max_alcoves: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_depth: 96,
            max_alcoves: 8_000_000,
        }
    }
}

/// Result of [`enumerate_alcoves`]. `complete` is false when a limit cut the
/// search short of its goal; the alcoves gathered so far are still returned.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub alcoves: Vec<Alcove>,
    pub depth: u32,
    pub complete: bool,
}

/// Per-region statistics gathered during a census.
#[derive(Debug, Clone)]
pub struct RegionSummary {
    size: usize,
    first_depth: u32,
    best: Vec<i64>,
    best_abs: i64,
    envelope: Vec<i64>,
}

impl RegionSummary {
    fn new(kvec: &[i64], depth: u32) -> Self {
        RegionSummary {
            size: 1,
            first_depth: depth,
            best: kvec.to_vec(),
            best_abs: kvec.iter().map(|k| k.abs()).sum(),
            envelope: kvec.iter().map(|k| k.abs()).collect(),
        }
    }

    fn update(&mut self, kvec: &[i64]) {
        self.size += 1;
        for (e, k) in self.envelope.iter_mut().zip(kvec) {
            *e = (*e).min(k.abs());
        }
        let abs: i64 = kvec.iter().map(|k| k.abs()).sum();
        if (abs, kvec) < (self.best_abs, self.best.as_slice()) {
            self.best_abs = abs;
            self.best = kvec.to_vec();
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn first_depth(&self) -> u32 {
        self.first_depth
    }

    /// Componentwise minimum of `|k|` over the members seen so far.
    pub fn envelope(&self) -> &[i64] {
        &self.envelope
    }

    /// Whether some member realizes the envelope, i.e. dominates every other
    /// member in componentwise absolute value.
    pub fn is_saturated(&self) -> bool {
        self.best
            .iter()
            .zip(&self.envelope)
            .all(|(b, e)| b.abs() == *e)
    }

    /// The region's minimal element, once saturated.
    pub fn minimal_entries(&self) -> Option<&[i64]> {
        self.is_saturated().then_some(self.best.as_slice())
    }
}

/// Everything the breadth-first search learned, grouped by sign type.
#[derive(Debug, Clone)]
pub struct RegionCensus {
    kind: crate::roots::RootSystemKind,
    regions: BTreeMap<SignType, RegionSummary>,
    alcove_count: usize,
    depth: u32,
    complete: bool,
    shi_violations: usize,
}

impl RegionCensus {
    pub fn kind(&self) -> crate::roots::RootSystemKind {
        self.kind
    }

    pub fn regions(&self) -> &BTreeMap<SignType, RegionSummary> {
        &self.regions
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn alcove_count(&self) -> usize {
        self.alcove_count
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// False when a resource limit stopped the search before its goal.
    pub fn complete(&self) -> bool {
        self.complete
    }

    /// Number of enumerated K-vectors that failed the Shi relations
    /// (always zero; counted rather than assumed).
    pub fn shi_violations(&self) -> usize {
        self.shi_violations
    }

    pub fn minimal(&self, sign: &SignType) -> Option<ShiVector> {
        let summary = self.regions.get(sign)?;
        let entries = summary.minimal_entries()?;
        Some(ShiVector::new(self.kind, entries.to_vec()).expect("census entries are well formed"))
    }
}

/// Progress callbacks from the census walk, in deterministic order.
pub enum CensusEvent<'a> {
    Alcove { kvec: &'a [i64], depth: u32 },
    Layer { depth: u32, visited: usize, regions: usize, new_signs: usize },
}

struct Kernel<'a> {
    rs: &'a RootSystem,
    denom: i64,
    denom_big: BigInt,
    base: Vec<i64>,
    coroots: Vec<Vec<i64>>,
    /// `pairing[a][b] = <coroot(a), root(b)>`.
    pairing: Vec<Vec<i64>>,
}

impl<'a> Kernel<'a> {
    fn new(rs: &'a RootSystem) -> Kernel<'a> {
        let n = rs.rank() as i64;
        let (denom, base): (i64, Vec<i64>) = match rs.family() {
            Family::A => (n + 2, (0..=n).rev().collect()),
            Family::B => (2 * n + 1, (1..=n).rev().collect()),
            Family::C => (4 * n + 2, (0..n).map(|i| 2 * (n - i) - 1).collect()),
            Family::D => (2 * n - 1, (0..n).rev().collect()),
        };
        let c = rs
            .height(rs.highest_root())
            .expect("highest root has a height") as i64;
        for delta in rs.simple_roots() {
            let dot: i64 = base
                .iter()
                .zip(delta.coords())
                .map(|(q, c)| q * c)
                .sum();
            // <p, delta> = 1 / (c + 2) exactly, with p = base / denom.
            assert_eq!(dot * (c + 2), denom, "fundamental point solve failed");
        }
        let coroots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coroot().coords().to_vec())
            .collect();
        let pairing: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|a| {
                let cr = a.coroot();
                rs.positive_roots().iter().map(|b| cr.dot(b)).collect()
            })
            .collect();
        Kernel {
            rs,
            denom,
            denom_big: BigInt::from(denom),
            base,
            coroots,
            pairing,
        }
    }

    fn base_point(&self) -> Vec<BigInt> {
        self.base.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn pairings(&self, q: &[BigInt]) -> Vec<BigInt> {
        self.rs
            .positive_roots()
            .iter()
            .map(|r| {
                let mut acc = BigInt::zero();
                for (qi, &c) in q.iter().zip(r.coords()) {
                    if c != 0 {
                        acc += qi * c;
                    }
                }
                acc
            })
            .collect()
    }

    fn floor(&self, t: &BigInt) -> i64 {
        t.div_floor(&self.denom_big)
            .to_i64()
            .expect("K-vector entry fits in i64")
    }

    fn rational_point(&self, q: &[BigInt]) -> Vec<BigRational> {
        q.iter()
            .map(|x| BigRational::new(x.clone(), self.denom_big.clone()))
            .collect()
    }
}

fn walk(
    rs: &RootSystem,
    mode: EnumerateMode,
    limits: &EnumerationLimits,
    mut events: Option<&mut dyn FnMut(CensusEvent<'_>)>,
    mut collect: Option<&mut Vec<Alcove>>,
) -> RegionCensus {
    let kernel = Kernel::new(rs);
    let num_roots = rs.num_positive();

    let base_q = kernel.base_point();
    let base_t = kernel.pairings(&base_q);
    let base_k: Vec<i64> = base_t.iter().map(|t| kernel.floor(t)).collect();
    debug_assert!(base_k.iter().all(|&k| k == 0), "fundamental alcove has K = 0");

    let mut visited: BTreeSet<Vec<i64>> = BTreeSet::new();
    visited.insert(base_k.clone());
    let mut layer: Vec<(Vec<BigInt>, Vec<i64>)> = vec![(base_q, base_k)];

    let mut regions: BTreeMap<SignType, RegionSummary> = BTreeMap::new();
    let mut new_signs_history: Vec<usize> = Vec::new();
    let mut shi_violations = 0usize;
    let mut alcove_count = 0usize;
    let mut depth = 0u32;
    let complete;
    let mut truncated = false;

    loop {
        layer.sort_by(|a, b| a.1.cmp(&b.1));
        let mut new_signs = 0usize;
        for (q, kvec) in &layer {
            alcove_count += 1;
            for &(a, b, c) in rs.triple_indices() {
                let residual = kvec[c] - kvec[a] - kvec[b];
                if residual != 0 && residual != 1 {
                    shi_violations += 1;
                }
            }
            let sign = SignType::new(rs.kind(), kvec.iter().map(|&k| Sign::of(k)).collect())
                .expect("kvec has canonical length");
            match regions.entry(sign) {
                Entry::Vacant(slot) => {
                    new_signs += 1;
                    slot.insert(RegionSummary::new(kvec, depth));
                }
                Entry::Occupied(mut slot) => slot.get_mut().update(kvec),
            }
            if let Some(f) = events.as_deref_mut() {
                f(CensusEvent::Alcove { kvec, depth });
            }
            if let Some(out) = collect.as_deref_mut() {
                out.push(Alcove {
                    point: kernel.rational_point(q),
                    kvec: ShiVector::new(rs.kind(), kvec.clone())
                        .expect("kvec has canonical length"),
                    depth,
                });
            }
        }
        new_signs_history.push(new_signs);
        if let Some(f) = events.as_deref_mut() {
            f(CensusEvent::Layer {
                depth,
                visited: alcove_count,
                regions: regions.len(),
                new_signs,
            });
        }

        let goal_met = match mode {
            EnumerateMode::Radius(r) => depth >= r,
            EnumerateMode::UntilRegions { target } => {
                let saturated = regions.values().all(|r| r.is_saturated());
                let n = new_signs_history.len();
                let stable =
                    n >= 2 && new_signs_history[n - 1] == 0 && new_signs_history[n - 2] == 0;
                let target_ok = target.is_none_or(|t| regions.len() == t);
                saturated && stable && target_ok
            }
        };
        if goal_met {
            complete = true;
            break;
        }
        if depth >= limits.max_depth {
            complete = false;
            break;
        }

        let mut next: Vec<(Vec<BigInt>, Vec<i64>)> = Vec::new();
        'expand: for (q, kvec) in &layer {
            let t = kernel.pairings(q);
            for a in 0..num_roots {
                for k in [kvec[a], kvec[a] + 1] {
                    let delta = &t[a] - BigInt::from(k * kernel.denom);
                    debug_assert!(!delta.is_zero(), "interior points never sit on a wall");
                    let child_k: Vec<i64> = (0..num_roots)
                        .map(|b| {
                            let tb = &t[b] - &delta * kernel.pairing[a][b];
                            kernel.floor(&tb)
                        })
                        .collect();
                    if visited.contains(&child_k) {
                        continue;
                    }
                    if visited.len() >= limits.max_alcoves {
                        truncated = true;
                        break 'expand;
                    }
                    visited.insert(child_k.clone());
                    let child_q: Vec<BigInt> = q
                        .iter()
                        .zip(&kernel.coroots[a])
                        .map(|(qi, &cr)| qi - &delta * cr)
                        .collect();
                    next.push((child_q, child_k));
                }
            }
        }
        if truncated || next.is_empty() {
            complete = false;
            break;
        }
        layer = next;
        depth += 1;
    }

    RegionCensus {
        kind: rs.kind(),
        regions,
        alcove_count,
        depth,
        complete,
        shi_violations,
    }
}

/// Exact interior point of the fundamental alcove: pairs to `1 / (c + 2)`
/// with every simple root, where `c` is the height of the highest root, so
/// it pairs to `c / (c + 2) < 1` with the highest root.
pub fn fundamental_point(rs: &RootSystem) -> Vec<BigRational> {
    let kernel = Kernel::new(rs);
    kernel.rational_point(&kernel.base_point())
}

/// The fundamental alcove; its K-vector is zero.
pub fn fundamental_alcove(rs: &RootSystem) -> Alcove {
    let point = fundamental_point(rs);
    let kvec = k_vector(rs, &point).expect("fundamental point is interior");
    debug_assert_eq!(kvec, ShiVector::zero(rs.kind()));
    Alcove {
        point,
        kvec,
        depth: 0,
    }
}

/// Exact pairing of a rational point with a root.
pub fn pairing(p: &[BigRational], root: &Root) -> Result<BigRational> {
    if p.len() != root.dim() {
        return Err(Error::DimensionMismatch {
            expected: root.dim(),
            found: p.len(),
        });
    }
    let mut acc = BigRational::zero();
    for (x, &c) in p.iter().zip(root.coords()) {
        if c != 0 {
            acc += x * BigRational::from(BigInt::from(c));
        }
    }
    Ok(acc)
}

/// Affine reflection `s_{root, level}`: `p - 2(<p, root> - level) root / <root, root>`,
/// computed exactly.
pub fn reflect(p: &[BigRational], root: &Root, level: i64) -> Result<Vec<BigRational>> {
    let t = pairing(p, root)?;
    let level = BigRational::from(BigInt::from(level));
    if t == level {
        return Err(Error::PointOnHyperplane);
    }
    let scale = (t - level) * BigRational::new(BigInt::from(2), BigInt::from(root.norm_sq()));
    Ok(p.iter()
        .zip(root.coords())
        .map(|(x, &c)| x - &scale * BigRational::from(BigInt::from(c)))
        .collect())
}

/// Entrywise floor of the exact pairings of an interior point.
pub fn k_vector(rs: &RootSystem, p: &[BigRational]) -> Result<ShiVector> {
    let mut entries = Vec::with_capacity(rs.num_positive());
    for root in rs.positive_roots() {
        let t = pairing(p, root)?;
        if t.is_integer() {
            return Err(Error::DegeneratePoint);
        }
        entries.push(
            t.floor()
                .to_integer()
                .to_i64()
                .expect("K-vector entry fits in i64"),
        );
    }
    ShiVector::new(rs.kind(), entries)
}

/// Breadth-first enumeration of alcoves from the fundamental one, reflecting
/// across both bounding hyperplanes of every positive root and deduping by
/// K-vector. Deterministic layer order.
pub fn enumerate_alcoves(
    rs: &RootSystem,
    mode: EnumerateMode,
    limits: &EnumerationLimits,
) -> Enumeration {
    let mut alcoves = Vec::new();
    let census = walk(rs, mode, limits, None, Some(&mut alcoves));
    Enumeration {
        alcoves,
        depth: census.depth,
        complete: census.complete,
    }
}

/// Memory-light census: runs the search in `UntilRegions` mode and keeps
/// only per-region statistics.
pub fn region_census(
    rs: &RootSystem,
    target: Option<usize>,
    limits: &EnumerationLimits,
) -> RegionCensus {
    walk(rs, EnumerateMode::UntilRegions { target }, limits, None, None)
}

/// Census with progress/streaming callbacks.
pub fn region_census_observed(
    rs: &RootSystem,
    target: Option<usize>,
    limits: &EnumerationLimits,
    mut events: impl FnMut(CensusEvent<'_>),
) -> RegionCensus {
    walk(
        rs,
        EnumerateMode::UntilRegions { target },
        limits,
        Some(&mut events),
        None,
    )
}

/// Groups alcoves by the sign type of their K-vector.
pub fn regions_by_sign<'a>(alcoves: &'a [Alcove]) -> BTreeMap<SignType, Vec<&'a Alcove>> {
    let mut out: BTreeMap<SignType, Vec<&'a Alcove>> = BTreeMap::new();
    for alcove in alcoves {
        out.entry(alcove.kvec.sign_type()).or_default().push(alcove);
    }
    out
}

/// The member whose K-vector is dominated, in componentwise absolute value,
/// by every member of the group. Errors if no member dominates: the group is
/// not saturated and the enumeration radius must grow.
pub fn oracle_minimal(group: &[&Alcove]) -> Result<ShiVector> {
    let first = group.first().ok_or(Error::Unsaturated)?;
    let mut envelope: Vec<i64> = first.kvec.entries().iter().map(|k| k.abs()).collect();
    for alcove in &group[1..] {
        for (e, k) in envelope.iter_mut().zip(alcove.kvec.entries()) {
            *e = (*e).min(k.abs());
        }
    }
    for alcove in group {
        if alcove
            .kvec
            .entries()
            .iter()
            .zip(&envelope)
            .all(|(k, e)| k.abs() == *e)
        {
            return Ok(alcove.kvec.clone());
        }
    }
    Err(Error::Unsaturated)
}

/// Sanity handle used by tests: every K-vector an enumeration produces must
/// satisfy the Shi relations.
pub fn count_shi_violations(rs: &RootSystem, alcoves: &[Alcove]) -> usize {
    alcoves
        .iter()
        .map(|a| check_shi_relations(rs, &a.kvec).len())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystemKind;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(RootSystemKind { family, rank }).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fundamental_pairings() {
        let a2 = rs(Family::A, 2);
        let p = fundamental_point(&a2);
        let highest = a2.highest_root();
        assert_eq!(pairing(&p, highest).unwrap(), rat(1, 2));
        assert_eq!(fundamental_alcove(&a2).kvec, ShiVector::zero(a2.kind()));

        let c2 = rs(Family::C, 2);
        let p = fundamental_point(&c2);
        assert_eq!(pairing(&p, c2.highest_root()).unwrap(), rat(3, 5));

        for (family, rank) in [(Family::B, 3), (Family::D, 3), (Family::A, 3)] {
            let s = rs(family, rank);
            assert_eq!(fundamental_alcove(&s).kvec, ShiVector::zero(s.kind()));
        }
    }

    #[test]
    fn reflect_examples() {
        let a1 = rs(Family::A, 1);
        let alpha = &a1.positive_roots()[0];
        let p = fundamental_point(&a1);
        assert_eq!(pairing(&p, alpha).unwrap(), rat(1, 3));

        let q = reflect(&p, alpha, 0).unwrap();
        assert_eq!(pairing(&q, alpha).unwrap(), rat(-1, 3));
        assert_eq!(reflect(&q, alpha, 0).unwrap(), p);

        let q = reflect(&p, alpha, 1).unwrap();
        assert_eq!(pairing(&q, alpha).unwrap(), rat(5, 3));

        // Reflecting in a hyperplane through the point is rejected.
        let on_wall = vec![rat(1, 2), rat(1, 2)];
        assert_eq!(reflect(&on_wall, alpha, 0).unwrap_err(), Error::PointOnHyperplane);
    }

    #[test]
    fn k_vector_examples() {
        let a2 = rs(Family::A, 2);
        let p = fundamental_point(&a2);
        assert_eq!(k_vector(&a2, &p).unwrap(), ShiVector::zero(a2.kind()));

        // Across the level-one wall of the highest root: K = (0, 1, 0).
        let q = reflect(&p, a2.highest_root(), 1).unwrap();
        let k = k_vector(&a2, &q).unwrap();
        assert_eq!(k.entries(), [0, 1, 0]);

        // A point with an integer pairing is degenerate.
        let degenerate = vec![rat(1, 1), rat(0, 1), rat(0, 1)];
        assert_eq!(k_vector(&a2, &degenerate).unwrap_err(), Error::DegeneratePoint);
    }

    #[test]
    fn a1_line_of_alcoves() {
        let a1 = rs(Family::A, 1);
        let e = enumerate_alcoves(&a1, EnumerateMode::Radius(3), &Default::default());
        assert!(e.complete);
        assert_eq!(e.alcoves.len(), 7);
        let mut ks: Vec<i64> = e.alcoves.iter().map(|a| a.kvec.get(0)).collect();
        ks.sort_unstable();
        assert_eq!(ks, [-3, -2, -1, 0, 1, 2, 3]);

        let groups = regions_by_sign(&e.alcoves);
        assert_eq!(groups.len(), 3);
        let sizes: Vec<usize> = groups.values().map(|g| g.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 7);
        assert!(sizes.contains(&1) && sizes.contains(&3));
    }

    #[test]
    fn kernel_agrees_with_rational_route() {
        for (family, rank) in [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            let s = rs(family, rank);
            let e = enumerate_alcoves(&s, EnumerateMode::Radius(4), &Default::default());
            assert!(e.complete);
            for alcove in &e.alcoves {
                assert_eq!(
                    k_vector(&s, &alcove.point).unwrap(),
                    alcove.kvec,
                    "{family}{rank}: independent K computation must agree"
                );
            }
        }
    }

    #[test]
    fn a2_has_sixteen_sign_types() {
        let a2 = rs(Family::A, 2);
        let census = region_census(&a2, None, &Default::default());
        assert!(census.complete());
        assert_eq!(census.region_count(), 16);
        assert_eq!(census.shi_violations(), 0);
    }

    #[test]
    fn oracle_minimal_examples() {
        let a2 = rs(Family::A, 2);
        let e = enumerate_alcoves(
            &a2,
            EnumerateMode::UntilRegions { target: Some(16) },
            &Default::default(),
        );
        assert!(e.complete);
        let groups = regions_by_sign(&e.alcoves);

        let find = |signs: [Sign; 3]| {
            let key = SignType::new(a2.kind(), signs.to_vec()).unwrap();
            oracle_minimal(&groups[&key]).unwrap()
        };
        let zero = find([Sign::Zero, Sign::Zero, Sign::Zero]);
        assert_eq!(zero.entries(), [0, 0, 0]);
        let plus = find([Sign::Plus, Sign::Plus, Sign::Plus]);
        assert_eq!(plus.entries(), [1, 2, 1]);
        let mixed = find([Sign::Minus, Sign::Zero, Sign::Plus]);
        assert_eq!(mixed.entries(), [-1, 0, 1]);
    }

    #[test]
    fn census_minima_also_minimize_abs_sum() {
        let b2 = rs(Family::B, 2);
        let e = enumerate_alcoves(
            &b2,
            EnumerateMode::UntilRegions { target: None },
            &Default::default(),
        );
        assert!(e.complete);
        let groups = regions_by_sign(&e.alcoves);
        assert_eq!(groups.len(), 25);
        for (sign, group) in &groups {
            let min = oracle_minimal(group).unwrap();
            let best_sum = group.iter().map(|a| a.kvec.abs_sum()).min().unwrap();
            assert_eq!(min.abs_sum(), best_sum, "{sign}");
            let count = group
                .iter()
                .filter(|a| a.kvec.abs_sum() == best_sum)
                .count();
            assert_eq!(count, 1, "{sign}: abs-sum minimizer is unique");
        }
    }

    #[test]
    fn unsaturated_group_is_an_error() {
        // (1,3,2) and (2,3,1) sit in the all-plus A2 region; neither
        // dominates the other, and their envelope (1,3,1) is not a member.
        let a2 = rs(Family::A, 2);
        let e = enumerate_alcoves(&a2, EnumerateMode::Radius(6), &Default::default());
        let group: Vec<&Alcove> = e
            .alcoves
            .iter()
            .filter(|a| a.kvec.entries() == [1, 3, 2] || a.kvec.entries() == [2, 3, 1])
            .collect();
        assert_eq!(group.len(), 2);
        assert_eq!(oracle_minimal(&group).unwrap_err(), Error::Unsaturated);
        assert_eq!(oracle_minimal(&[]).unwrap_err(), Error::Unsaturated);
    }

    #[test]
    fn limits_cut_the_search_short() {
        let a2 = rs(Family::A, 2);
        let limits = EnumerationLimits {
            max_depth: 2,
            max_alcoves: 1_000,
        };
        let census = region_census(&a2, None, &limits);
        assert!(!census.complete());

        let limits = EnumerationLimits {
            max_depth: 96,
            max_alcoves: 5,
        };
        let e = enumerate_alcoves(&a2, EnumerateMode::Radius(8), &limits);
        assert!(!e.complete);
    }
}
