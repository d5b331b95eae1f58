//! Sign types, Shi vectors and their relations, parking functions, the
//! region bijections and the minimal-element formulas.
//!
//! A Shi vector is an integer vector indexed by the positive roots in
//! canonical order; it is realizable exactly when every addition triple
//! `a + b = c` satisfies `v_c - v_a - v_b` in `{0, 1}`. A sign type is the
//! componentwise sign of a Shi vector; it determines the Shi region. The
//! minimal element of a region is read off the arc diagram of the region's
//! parking function: at a root with value pair `(i, j)` it equals the arc
//! count `eta(i, j)`, negated and shifted by one where the sign is negative.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::arcs::{root_value_pair, ArcDiagram};
use crate::roots::{Family, NonNestingPartition, Root, RootSystem, RootSystemKind};
use crate::weyl::{decode_inversion_vector, from_negative_set, SignedPermutation};
use crate::{Error, Result};

/// Sign of a Shi vector entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        match x {
            _ if x < 0 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A full assignment of signs to the positive roots, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignType {
    kind: RootSystemKind,
    signs: Vec<Sign>,
}

impl SignType {
    pub fn new(kind: RootSystemKind, signs: Vec<Sign>) -> Result<Self> {
        let kind = RootSystemKind::new(kind.family, kind.rank)?;
        if signs.len() != kind.positive_count() {
            return Err(Error::DimensionMismatch {
                expected: kind.positive_count(),
                found: signs.len(),
            });
        }
        Ok(SignType { kind, signs })
    }

    pub fn zero(kind: RootSystemKind) -> Self {
        SignType {
            kind,
            signs: alloc::vec![Sign::Zero; kind.positive_count()],
        }
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn get(&self, idx: usize) -> Sign {
        self.signs[idx]
    }
}

impl fmt::Display for SignType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// An integer vector indexed by the positive roots in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiVector {
    kind: RootSystemKind,
    entries: Vec<i64>,
}

impl ShiVector {
    pub fn new(kind: RootSystemKind, entries: Vec<i64>) -> Result<Self> {
        let kind = RootSystemKind::new(kind.family, kind.rank)?;
        if entries.len() != kind.positive_count() {
            return Err(Error::DimensionMismatch {
                expected: kind.positive_count(),
                found: entries.len(),
            });
        }
        Ok(ShiVector { kind, entries })
    }

    pub fn zero(kind: RootSystemKind) -> Self {
        ShiVector {
            kind,
            entries: alloc::vec![0; kind.positive_count()],
        }
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, idx: usize) -> i64 {
        self.entries[idx]
    }

    pub fn abs_sum(&self) -> i64 {
        self.entries.iter().map(|e| e.abs()).sum()
    }

    /// The componentwise sign (the `sign_of` operation).
    pub fn sign_type(&self) -> SignType {
        SignType {
            kind: self.kind,
            signs: self.entries.iter().map(|&e| Sign::of(e)).collect(),
        }
    }

    /// Whether `|self|` is componentwise at most `|other|`.
    pub fn abs_dominated_by(&self, other: &ShiVector) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.abs() <= b.abs())
    }
}

impl fmt::Display for ShiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A failed Shi relation: the addition triple and the residual
/// `v_c - v_a - v_b`, which must lie in `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiViolation {
    pub alpha: Root,
    pub beta: Root,
    pub gamma: Root,
    pub residual: i64,
}

impl fmt::Display for ShiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v[{}] - v[{}] - v[{}] = {} is not in {{0, 1}}",
            self.gamma, self.alpha, self.beta, self.residual
        )
    }
}

/// Checks every Shi relation; an empty report means the vector is the
/// K-vector of an actual alcove.
pub fn check_shi_relations(rs: &RootSystem, v: &ShiVector) -> Vec<ShiViolation> {
    debug_assert_eq!(rs.kind(), v.kind());
    let mut out = Vec::new();
    for &(a, b, c) in rs.triple_indices() {
        let residual = v.get(c) - v.get(a) - v.get(b);
        if residual != 0 && residual != 1 {
            out.push(ShiViolation {
                alpha: rs.root(a).clone(),
                beta: rs.root(b).clone(),
                gamma: rs.root(c).clone(),
                residual,
            });
        }
    }
    out
}

/// A pair `(w, P)` of a group element and a non-nesting partition with
/// `w(P)` inside the positive roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction {
    w: SignedPermutation,
    partition: NonNestingPartition,
}

impl ParkingFunction {
    pub fn new(
        rs: &RootSystem,
        w: SignedPermutation,
        partition: NonNestingPartition,
    ) -> Result<Self> {
        if w.kind() != rs.kind() {
            return Err(Error::KindMismatch);
        }
        for alpha in partition.roots() {
            if !rs.is_positive(&w.act(alpha)?)? {
                return Err(Error::InvalidParkingFunction(
                    "w must map every root of the partition to a positive root",
                ));
            }
        }
        Ok(ParkingFunction { w, partition })
    }

    pub fn identity(rs: &RootSystem) -> Self {
        ParkingFunction {
            w: SignedPermutation::identity(rs.kind()),
            partition: NonNestingPartition::empty(),
        }
    }

    pub fn w(&self) -> &SignedPermutation {
        &self.w
    }

    pub fn partition(&self) -> &NonNestingPartition {
        &self.partition
    }

    pub fn diagram(&self, rs: &RootSystem) -> Result<ArcDiagram> {
        ArcDiagram::new(rs, &self.w, &self.partition)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.w, self.partition)
    }
}

/// The minimal element of the Shi region encoded by a parking function.
///
/// Each positive root contributes the arc count `eta` over its value pair;
/// the entry is `eta` where `w^{-1}` keeps the root positive and
/// `-(eta + 1)` where it does not. The latter test is equivalent to the
/// sign of the region at that root being minus.
pub fn minimal_element(rs: &RootSystem, pf: &ParkingFunction) -> Result<ShiVector> {
    let diagram = pf.diagram(rs)?;
    let winv = pf.w().inverse();
    let mut entries = Vec::with_capacity(rs.num_positive());
    for alpha in rs.positive_roots() {
        let (i, j) = root_value_pair(alpha)?;
        let eta = diagram.eta(i, j)? as i64;
        let positive = rs.is_positive(&winv.act(alpha)?)?;
        entries.push(if positive { eta } else { -(eta + 1) });
    }
    ShiVector::new(rs.kind(), entries)
}

/// `sign_of(minimal_element(pf))`: the sign type of the region a parking
/// function encodes.
pub fn sign_type_of_pf(rs: &RootSystem, pf: &ParkingFunction) -> Result<SignType> {
    Ok(minimal_element(rs, pf)?.sign_type())
}

fn sign_at(rs: &RootSystem, v: &SignType, i: i64, j: i64) -> Sign {
    let mut coords = alloc::vec![0i64; rs.ambient_dim()];
    coords[(i - 1) as usize] = 1;
    coords[(j - 1) as usize] = -1;
    let idx = rs
        .root_index(&Root::new(coords))
        .expect("e_i - e_j must be a positive root for i < j");
    v.get(idx)
}

/// The family A bijection from an admissible sign type to its parking
/// function: decode the permutation from the counts of non-minus entries,
/// draw an arc for every plus entry, and keep only the arcs whose position
/// interval contains no other.
pub fn al_forward(rs: &RootSystem, v: &SignType) -> Result<ParkingFunction> {
    if rs.family() != Family::A {
        return Err(Error::WrongFamily(
            "the arc-diagram bijection is a family A construction",
        ));
    }
    if v.kind() != rs.kind() {
        return Err(Error::KindMismatch);
    }
    let n1 = rs.rank() + 1;

    // Value-indexed inversion vector: entry i counts the values below i that
    // must sit to its left, i.e. the pairs (j, i) with a non-minus sign.
    let mut code = Vec::with_capacity(n1);
    for i in 1..=n1 as i64 {
        let c = (1..i)
            .filter(|&j| sign_at(rs, v, j, i) != Sign::Minus)
            .count();
        code.push(c);
    }
    let w = decode_inversion_vector(&code)?;

    let pos_of = |value: i64| -> i64 {
        w.images().iter().position(|&u| u == value).unwrap() as i64 + 1
    };

    // Position intervals of the plus arcs.
    let mut plus_arcs: Vec<(i64, i64)> = Vec::new();
    for i in 1..=n1 as i64 {
        for j in i + 1..=n1 as i64 {
            if sign_at(rs, v, i, j) == Sign::Plus {
                let (p, q) = (pos_of(i), pos_of(j));
                plus_arcs.push((p.min(q), p.max(q)));
            }
        }
    }

    // Keep the containment-minimal intervals.
    let kept: Vec<(i64, i64)> = plus_arcs
        .iter()
        .filter(|&&(l, r)| {
            !plus_arcs
                .iter()
                .any(|&(l2, r2)| (l2, r2) != (l, r) && l <= l2 && r2 <= r)
        })
        .copied()
        .collect();

    // The kept arcs must be exactly the consecutive-pair arcs of the blocks
    // they span; otherwise the sign pattern was not admissible.
    let mut block_of: Vec<usize> = (0..n1).collect();
    fn find(block_of: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while block_of[r] != r {
            r = block_of[r];
        }
        let mut c = x;
        while block_of[c] != r {
            let next = block_of[c];
            block_of[c] = r;
            c = next;
        }
        r
    }
    for &(l, r) in &kept {
        let (a, b) = (
            find(&mut block_of, (l - 1) as usize),
            find(&mut block_of, (r - 1) as usize),
        );
        block_of[a] = b;
    }
    let mut blocks: alloc::collections::BTreeMap<usize, Vec<i64>> = Default::default();
    for p in 0..n1 {
        blocks
            .entry(find(&mut block_of, p))
            .or_default()
            .push(p as i64 + 1);
    }
    let mut block_arcs: BTreeSet<(i64, i64)> = BTreeSet::new();
    for members in blocks.values() {
        for pair in members.windows(2) {
            block_arcs.insert((pair[0], pair[1]));
        }
    }
    let kept_set: BTreeSet<(i64, i64)> = kept.iter().copied().collect();
    if kept_set != block_arcs {
        return Err(Error::Inadmissible(
            "plus arcs do not assemble into a partition",
        ));
    }

    let dim = rs.ambient_dim();
    let roots: Vec<Root> = kept_set
        .iter()
        .map(|&(l, r)| {
            let mut coords = alloc::vec![0i64; dim];
            coords[(l - 1) as usize] = 1;
            coords[(r - 1) as usize] = -1;
            Root::new(coords)
        })
        .collect();
    let partition = NonNestingPartition::new(rs, roots)
        .map_err(|_| Error::Inadmissible("plus arcs are not an antichain"))?;
    let pf = ParkingFunction::new(rs, w, partition)
        .map_err(|_| Error::Inadmissible("blocks are not sorted"))?;

    if sign_type_of_pf(rs, &pf)? != *v {
        return Err(Error::Inadmissible("sign type does not round-trip"));
    }
    Ok(pf)
}

/// The general bijection from an admissible sign type to its parking
/// function: the group element comes from the minus set, the partition from
/// a search over all antichains. Exactly one antichain may match; more than
/// one would falsify the bijection and fails loudly.
pub fn arr_forward(rs: &RootSystem, v: &SignType) -> Result<ParkingFunction> {
    if v.kind() != rs.kind() {
        return Err(Error::KindMismatch);
    }
    let negatives: Vec<Root> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(i, _)| v.get(*i) == Sign::Minus)
        .map(|(_, r)| r.clone())
        .collect();
    let w = from_negative_set(rs, &negatives)
        .map_err(|_| Error::Inadmissible("minus set is not an inversion set"))?;

    let mut found: Option<ParkingFunction> = None;
    for p in rs.antichains() {
        let compatible = p
            .roots()
            .iter()
            .all(|a| matches!(w.act(a).and_then(|img| rs.is_positive(&img)), Ok(true)));
        if !compatible {
            continue;
        }
        let pf = ParkingFunction::new(rs, w.clone(), p)?;
        if sign_type_of_pf(rs, &pf)? == *v {
            if found.is_some() {
                return Err(Error::MultipleParkingFunctions);
            }
            found = Some(pf);
        }
    }
    found.ok_or(Error::Inadmissible("no antichain matches the sign type"))
}

/// Whether a sign type corresponds to a Shi region.
pub fn is_admissible(rs: &RootSystem, v: &SignType) -> bool {
    arr_forward(rs, v).is_ok()
}

/// Minimal element of the region with the given sign type.
pub fn minimal_from_sign(rs: &RootSystem, v: &SignType) -> Result<ShiVector> {
    let pf = arr_forward(rs, v)?;
    let m = minimal_element(rs, &pf)?;
    debug_assert_eq!(m.sign_type(), *v);
    Ok(m)
}

/// All parking functions of the system: antichains in canonical order, each
/// paired with every compatible group element in enumeration order.
pub fn enumerate_parking_functions(rs: &RootSystem) -> Vec<ParkingFunction> {
    let elements = SignedPermutation::enumerate(rs.kind());
    let mut out = Vec::new();
    for p in rs.antichains() {
        for w in &elements {
            let compatible = p
                .roots()
                .iter()
                .all(|a| matches!(w.act(a).and_then(|img| rs.is_positive(&img)), Ok(true)));
            if compatible {
                out.push(ParkingFunction {
                    w: w.clone(),
                    partition: p.clone(),
                });
            }
        }
    }
    out
}
