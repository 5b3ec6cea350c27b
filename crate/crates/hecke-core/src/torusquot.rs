//! The torus quotient (ℚ/ℤ)⊗X with its Weyl group action, the pairing
//! against coroots, the little Weyl groups attached to points, minimal
//! coset representatives, and the transport groupoid between points.
//!
//! Points are truncated to the torsion lattice (1/N)X/X per invocation:
//! every structure here restricts to any W-stable finite torsion subgroup,
//! and integer matrices preserve each such lattice.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::RwLock;

use num_traits::Zero;

use crate::coeff::{rat, rational_string, RatMod1, Rational};
use crate::rootdata::{RootDatum, WeylElt};
use crate::{Error, Result};

/// A point of the torus quotient in fundamental-weight coordinates, each
/// coordinate an exact rational in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coords: Vec<RatMod1>,
}

impl TorusPoint {
    pub fn new(coords: Vec<RatMod1>) -> Self {
        TorusPoint { coords }
    }

    pub fn zero(rank: usize) -> Self {
        TorusPoint { coords: vec![RatMod1::zero(); rank] }
    }

    /// Point with coordinates `nums[i]/den`.
    pub fn from_fracs(nums: &[i64], den: i64) -> Self {
        TorusPoint {
            coords: nums.iter().map(|&n| RatMod1::from_frac(n, den)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[RatMod1] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The point `k·λ` (reduced mod 1).
    pub fn scale(&self, k: i64) -> Self {
        TorusPoint {
            coords: self.coords.iter().map(|c| c.scale(k)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn add(&self, rhs: &TorusPoint) -> Self {
        assert_eq!(self.rank(), rhs.rank());
        TorusPoint {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The pairing ⌊α̌, λ⌋ of a coroot with a torus point: the coroot's
/// simple-coroot coordinates dotted with the point's ω-coordinates, mod 1.
pub fn pair(coroot: &[i64], lam: &TorusPoint) -> RatMod1 {
    let mut acc = Rational::zero();
    for (c, x) in coroot.iter().zip(lam.coords()) {
        acc += rat(*c, 1) * x.value();
    }
    RatMod1::new(acc)
}

/// The Weyl group action on torus points: the weight-side matrix applied to
/// the coordinate vector, reduced mod 1.
pub fn act(w: &WeylElt, lam: &TorusPoint) -> TorusPoint {
    let n = lam.rank();
    let m = w.xmat();
    let coords = (0..n)
        .map(|i| {
            let mut acc = Rational::zero();
            for j in 0..n {
                let a = m.get(i, j);
                if a != 0 {
                    acc += rat(a, 1) * lam.coords()[j].value();
                }
            }
            RatMod1::new(acc)
        })
        .collect();
    TorusPoint::new(coords)
}

/// True iff `(m² − 1)·λ = 0`, i.e. λ lies in the m-torsion part X̄_m.
pub fn in_xbar_m(lam: &TorusPoint, m: i64) -> bool {
    lam.scale(m * m - 1).is_zero()
}

/// All points of the (1/N)-lattice, in lexicographic coordinate order.
pub fn enumerate_xbar(datum: &RootDatum, n: i64) -> Vec<TorusPoint> {
    assert!(n >= 1);
    let rank = datum.rank();
    let mut out = Vec::new();
    let mut nums = vec![0i64; rank];
    loop {
        out.push(TorusPoint::from_fracs(&nums, n));
        let mut k = rank;
        let mut advanced = false;
        while k > 0 {
            k -= 1;
            nums[k] += 1;
            if nums[k] < n {
                advanced = true;
                break;
            }
            nums[k] = 0;
        }
        if !advanced {
            return out;
        }
    }
}

/// Partitions a W-closed point set into orbits; each orbit is sorted and the
/// orbits are sorted by their least element.
pub fn orbits(datum: &RootDatum, points: &[TorusPoint]) -> Result<Vec<Vec<TorusPoint>>> {
    let set: HashSet<&TorusPoint> = points.iter().collect();
    let mut remaining: HashSet<TorusPoint> = points.iter().cloned().collect();
    let mut out = Vec::new();
    for p in points {
        if !remaining.contains(p) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut queue = VecDeque::new();
        let mut seen = HashSet::new();
        queue.push_back(p.clone());
        seen.insert(p.clone());
        while let Some(q) = queue.pop_front() {
            if !set.contains(&q) {
                return Err(Error::NotWClosed);
            }
            remaining.remove(&q);
            orbit.push(q.clone());
            for s in datum.simple_reflections() {
                let img = act(s, &q);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        orbit.sort();
        out.push(orbit);
    }
    out.sort();
    Ok(out)
}

/// The W-orbit of a single point.
pub fn orbit_of(datum: &RootDatum, lam: &TorusPoint) -> Vec<TorusPoint> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(q) = queue.pop_front() {
        for s in datum.simple_reflections() {
            let img = act(s, &q);
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let mut orbit: Vec<TorusPoint> = seen.into_iter().collect();
    orbit.sort();
    orbit
}

/// All the structure the little Weyl group W_λ carries: its coroot system,
/// the positives, the simples, the generating reflections, and the group
/// itself materialized.
#[derive(Clone)]
pub struct LittleWeylData {
    pub base: TorusPoint,
    /// Ř_λ: all coroots pairing to zero with the base point.
    pub coroots: Vec<Vec<i64>>,
    /// Ř_λ⁺ = Ř_λ ∩ Ř⁺, in the datum's positive-coroot order.
    pub positives: Vec<Vec<i64>>,
    /// Π̌_λ: elements of Ř_λ⁺ not expressible as a sum of two of them.
    pub simples: Vec<Vec<i64>>,
    /// The reflections s_β for β ∈ Π̌_λ, aligned with `simples`.
    pub generators: Vec<WeylElt>,
    /// W_λ, materialized and sorted.
    pub elements: Vec<WeylElt>,
    element_set: HashSet<WeylElt>,
}

impl LittleWeylData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &WeylElt) -> bool {
        self.element_set.contains(w)
    }

    /// The length of `u` inside W_λ: inversions counted within Ř_λ⁺.
    pub fn length_lambda(&self, datum: &RootDatum, u: &WeylElt) -> Result<usize> {
        if !self.contains(u) {
            return Err(Error::NotInLittleWeyl);
        }
        Ok(self
            .positives
            .iter()
            .filter(|beta| !datum.is_positive_coroot(&u.act_coroot(beta)))
            .count())
    }

    /// Index of a simple generator by its coroot.
    pub fn simple_index(&self, coroot: &[i64]) -> Option<usize> {
        self.simples.iter().position(|c| c == coroot)
    }
}

/// Computes the little Weyl group data at a point.
pub fn little_weyl(datum: &RootDatum, lam: &TorusPoint) -> LittleWeylData {
    let positives: Vec<Vec<i64>> = datum
        .pos_coroots()
        .iter()
        .filter(|beta| pair(beta, lam).is_zero())
        .cloned()
        .collect();
    let mut coroots = positives.clone();
    coroots.extend(
        positives
            .iter()
            .map(|beta| beta.iter().map(|&c| -c).collect::<Vec<i64>>()),
    );

    let pos_set: HashSet<&Vec<i64>> = positives.iter().collect();
    let simples: Vec<Vec<i64>> = positives
        .iter()
        .filter(|beta| {
            // not a sum of two positives of the subsystem
            !positives.iter().any(|gamma| {
                let diff: Vec<i64> = beta.iter().zip(gamma).map(|(b, g)| b - g).collect();
                diff.iter().any(|&c| c != 0) && pos_set.contains(&diff)
            })
        })
        .cloned()
        .collect();

    let generators: Vec<WeylElt> = simples
        .iter()
        .map(|beta| datum.reflection(beta).clone())
        .collect();

    // close the generators into the subgroup
    let mut element_set: HashSet<WeylElt> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = datum.identity();
    element_set.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for s in &generators {
            let next = w.mul(s);
            if !element_set.contains(&next) {
                element_set.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<WeylElt> = element_set.iter().cloned().collect();
    elements.sort();

    LittleWeylData {
        base: lam.clone(),
        coroots,
        positives,
        simples,
        generators,
        elements,
        element_set,
    }
}

/// A read-shared memo of little Weyl data keyed by base point, for one root
/// datum.  The lock is held only around the map access, so concurrent
/// readers are fine.
pub struct LittleWeylCache<'a> {
    datum: &'a RootDatum,
    cache: RwLock<HashMap<TorusPoint, LittleWeylData>>,
}

impl<'a> LittleWeylCache<'a> {
    pub fn new(datum: &'a RootDatum) -> Self {
        LittleWeylCache { datum, cache: RwLock::new(HashMap::new()) }
    }

    pub fn datum(&self) -> &'a RootDatum {
        self.datum
    }

    pub fn get(&self, lam: &TorusPoint) -> LittleWeylData {
        if let Some(hit) = self.cache.read().unwrap().get(lam) {
            return hit.clone();
        }
        let data = little_weyl(self.datum, lam);
        self.cache
            .write()
            .unwrap()
            .entry(lam.clone())
            .or_insert(data)
            .clone()
    }
}

/// The minimal coset representative of `wW_λ`: the unique element of the
/// coset carrying Ř_λ⁺ into the positive coroots.
///
/// Found by greedy descent: while some simple β of the subsystem is sent to
/// a negative coroot, fold in s_β.  The exhaustive-uniqueness statement is
/// exercised by tests.
pub fn min_coset(datum: &RootDatum, w: &WeylElt, lw: &LittleWeylData) -> WeylElt {
    let mut z = w.clone();
    let bound = lw.order() + 1;
    for _ in 0..bound {
        let descent = lw
            .simples
            .iter()
            .zip(&lw.generators)
            .find(|(beta, _)| !datum.is_positive_coroot(&z.act_coroot(beta)));
        match descent {
            Some((_, s_beta)) => z = z.mul(s_beta),
            None => {
                debug_assert!(lw
                    .positives
                    .iter()
                    .all(|beta| datum.is_positive_coroot(&z.act_coroot(beta))));
                return z;
            }
        }
    }
    panic!("greedy descent failed to terminate; little Weyl data inconsistent");
}

/// Convenience wrapper computing the little Weyl data on the fly.
pub fn min_coset_at(datum: &RootDatum, w: &WeylElt, lam: &TorusPoint) -> WeylElt {
    min_coset(datum, w, &little_weyl(datum, lam))
}

/// Membership test for the bracket set `[λ′, λ]`: λ′ = z(λ) and z is the
/// minimal representative of its coset zW_λ.
pub fn bracket_contains(
    datum: &RootDatum,
    lam_target: &TorusPoint,
    z: &WeylElt,
    lam_source: &TorusPoint,
) -> bool {
    act(z, lam_source) == *lam_target && min_coset_at(datum, z, lam_source) == *z
}

/// A morphism (λ′, z, λ) of the transport groupoid: z carries λ to λ′ and
/// maps Ř_λ⁺ onto Ř_{λ′}⁺.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupoidArrow {
    pub target: TorusPoint,
    pub map: WeylElt,
    pub source: TorusPoint,
}

impl GroupoidArrow {
    /// Validates the membership condition before constructing the arrow.
    pub fn new(
        datum: &RootDatum,
        target: TorusPoint,
        map: WeylElt,
        source: TorusPoint,
    ) -> Result<Self> {
        if !bracket_contains(datum, &target, &map, &source) {
            return Err(Error::NotGroupoidArrow(format!(
                "{target:?} <- {source:?}"
            )));
        }
        Ok(GroupoidArrow { target, map, source })
    }

    /// Arrow composition: `self ∘ rhs` (first `rhs`, then `self`).
    pub fn compose(&self, datum: &RootDatum, rhs: &GroupoidArrow) -> Result<Self> {
        if self.source != rhs.target {
            return Err(Error::NotGroupoidArrow("source/target mismatch".into()));
        }
        GroupoidArrow::new(
            datum,
            self.target.clone(),
            self.map.mul(&rhs.map),
            rhs.source.clone(),
        )
    }

    pub fn inverse(&self, datum: &RootDatum) -> Result<Self> {
        GroupoidArrow::new(
            datum,
            self.source.clone(),
            self.map.inverse(),
            self.target.clone(),
        )
    }
}

impl fmt::Debug for GroupoidArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} <- {:?} via {:?})", self.target, self.source, self.map)
    }
}

/// All arrows of the groupoid over a fixed orbit.
pub fn groupoid_arrows(datum: &RootDatum, orbit: &[TorusPoint]) -> Vec<GroupoidArrow> {
    let w_all = datum.weyl_generate();
    let mut out = Vec::new();
    for lam in orbit {
        let lw = little_weyl(datum, lam);
        for z in &w_all {
            if min_coset(datum, z, &lw) == *z {
                let target = act(z, lam);
                out.push(GroupoidArrow {
                    target,
                    map: z.clone(),
                    source: lam.clone(),
                });
            }
        }
    }
    out
}

/// Serializes a torus point as a list of `p/q` strings.
pub fn torus_point_strings(lam: &TorusPoint) -> Vec<String> {
    lam.coords()
        .iter()
        .map(|c| rational_string(c.value()))
        .collect()
}

/// Parses a comma-separated list of rationals, e.g. `0/1,1/3`.
pub fn parse_torus_point(s: &str, rank: usize) -> Option<TorusPoint> {
    let coords: Option<Vec<RatMod1>> = s
        .split(',')
        .map(|part| crate::coeff::parse_rational(part).map(RatMod1::new))
        .collect();
    let coords = coords?;
    if coords.len() != rank {
        return None;
    }
    Some(TorusPoint::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, CartanType};

    fn datum(s: &str) -> RootDatum {
        build_root_datum(&CartanType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let third = TorusPoint::from_fracs(&[1], 3);
        assert_eq!(pair(&[1], &third), RatMod1::from_frac(1, 3));
        assert_eq!(pair(&[1], &TorusPoint::zero(1)), RatMod1::zero());
        let lam = TorusPoint::from_fracs(&[0, 1], 2);
        assert_eq!(pair(&[1, 1], &lam), RatMod1::from_frac(1, 2));
    }

    #[test]
    fn act_examples() {
        let a1 = datum("A1");
        let s = a1.simple_reflection(0);
        let third = TorusPoint::from_fracs(&[1], 3);
        assert_eq!(act(s, &third), TorusPoint::from_fracs(&[2], 3));
        assert_eq!(act(s, &TorusPoint::zero(1)), TorusPoint::zero(1));

        // s₁ fixes multiples of ω₂ since ⟨α̌₁, ω₂⟩ = 0
        let a2 = datum("A2");
        let lam = TorusPoint::from_fracs(&[0, 1], 2);
        assert_eq!(act(a2.simple_reflection(0), &lam), lam);
        // while s₂ moves it
        assert_eq!(
            act(a2.simple_reflection(1), &lam),
            TorusPoint::from_fracs(&[1, 1], 2)
        );
    }

    #[test]
    fn action_is_compatible_with_composition() {
        let d = datum("B2");
        let lam = TorusPoint::from_fracs(&[1, 3], 4);
        for w in d.weyl_generate() {
            for s in d.simple_reflections() {
                let both = act(&s.mul(&w), &lam);
                let stepwise = act(s, &act(&w, &lam));
                assert_eq!(both, stepwise);
            }
        }
    }

    #[test]
    fn xbar_m_membership() {
        let third = TorusPoint::from_fracs(&[1], 3);
        let half = TorusPoint::from_fracs(&[1], 2);
        assert!(in_xbar_m(&third, 2)); // 3λ = 0 so 4λ = λ
        assert!(!in_xbar_m(&half, 2)); // 3·(1/2) = 1/2 ≠ 0
        assert!(in_xbar_m(&half, 1));
        assert!(in_xbar_m(&third, 1));
    }

    #[test]
    fn xbar_enumeration() {
        let a1 = datum("A1");
        let pts = enumerate_xbar(&a1, 3);
        assert_eq!(
            pts,
            vec![
                TorusPoint::zero(1),
                TorusPoint::from_fracs(&[1], 3),
                TorusPoint::from_fracs(&[2], 3)
            ]
        );
        assert_eq!(enumerate_xbar(&a1, 1), vec![TorusPoint::zero(1)]);
        let a2 = datum("A2");
        assert_eq!(enumerate_xbar(&a2, 2).len(), 4);
    }

    #[test]
    fn orbit_partitions() {
        let a1 = datum("A1");
        let parts = orbits(&a1, &enumerate_xbar(&a1, 3)).unwrap();
        assert_eq!(
            parts,
            vec![
                vec![TorusPoint::zero(1)],
                vec![
                    TorusPoint::from_fracs(&[1], 3),
                    TorusPoint::from_fracs(&[2], 3)
                ],
            ]
        );
        assert_eq!(orbits(&a1, &enumerate_xbar(&a1, 1)).unwrap().len(), 1);

        let a2 = datum("A2");
        let parts = orbits(&a2, &enumerate_xbar(&a2, 2)).unwrap();
        let mut sizes: Vec<usize> = parts.iter().map(|o| o.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);

        // not W-closed: drop a point from the 3-orbit
        let broken: Vec<TorusPoint> = enumerate_xbar(&a2, 2)
            .into_iter()
            .filter(|p| *p != TorusPoint::from_fracs(&[1, 1], 2))
            .collect();
        assert!(orbits(&a2, &broken).is_err());
    }

    #[test]
    fn little_weyl_examples() {
        let a1 = datum("A1");
        let lw0 = little_weyl(&a1, &TorusPoint::zero(1));
        assert_eq!(lw0.positives.len(), 1);
        assert_eq!(lw0.simples, vec![vec![1]]);
        assert_eq!(lw0.order(), 2);

        let lw3 = little_weyl(&a1, &TorusPoint::from_fracs(&[1], 3));
        assert!(lw3.coroots.is_empty());
        assert_eq!(lw3.order(), 1);

        let a2 = datum("A2");
        let lw = little_weyl(&a2, &TorusPoint::from_fracs(&[0, 1], 2));
        assert_eq!(lw.simples, vec![vec![1, 0]]);
        assert_eq!(lw.order(), 2);
        assert_eq!(lw.generators[0], *a2.simple_reflection(0));

        // λ = 0 recovers the whole group with the simple coroots
        let lw0 = little_weyl(&a2, &TorusPoint::zero(2));
        assert_eq!(lw0.positives.len(), 3);
        assert_eq!(lw0.simples.len(), 2);
        assert_eq!(lw0.order(), 6);
    }

    #[test]
    fn length_lambda_examples() {
        let a2 = datum("A2");
        let lam = TorusPoint::from_fracs(&[0, 1], 2);
        let lw = little_weyl(&a2, &lam);
        let s1 = a2.simple_reflection(0).clone();
        assert_eq!(lw.length_lambda(&a2, &a2.identity()).unwrap(), 0);
        assert_eq!(lw.length_lambda(&a2, &s1).unwrap(), 1);
        assert!(lw.length_lambda(&a2, a2.simple_reflection(1)).is_err());

        // at λ = 0 the little length is the ambient length
        let lw0 = little_weyl(&a2, &TorusPoint::zero(2));
        for w in a2.weyl_generate() {
            assert_eq!(lw0.length_lambda(&a2, &w).unwrap(), a2.length(&w));
        }
    }

    #[test]
    fn little_length_equals_word_length_in_generators() {
        // brute-force cross-check: |u|_λ equals the minimal word length in
        // the generators {s_β : β ∈ Π̌_λ}
        let b2 = datum("B2");
        let lw = little_weyl(&b2, &TorusPoint::zero(2));
        let mut dist: HashMap<WeylElt, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(b2.identity(), 0);
        queue.push_back(b2.identity());
        while let Some(w) = queue.pop_front() {
            let d0 = dist[&w];
            for s in &lw.generators {
                let next = w.mul(s);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d0 + 1);
                    queue.push_back(next);
                }
            }
        }
        for u in &lw.elements {
            assert_eq!(lw.length_lambda(&b2, u).unwrap(), dist[u]);
        }
    }

    #[test]
    fn little_weyl_equals_reflection_closure() {
        // the group generated by the simples equals the closure of all
        // reflections s_β, β ∈ Ř_λ
        for (t, nums, den) in
            [("A2", vec![0i64, 1], 2i64), ("B2", vec![1, 0], 2), ("G2", vec![0, 1], 2)]
        {
            let d = datum(t);
            let lam = TorusPoint::from_fracs(&nums, den);
            let lw = little_weyl(&d, &lam);
            let mut set: HashSet<WeylElt> = HashSet::new();
            let mut queue = VecDeque::new();
            set.insert(d.identity());
            queue.push_back(d.identity());
            while let Some(w) = queue.pop_front() {
                for beta in &lw.positives {
                    let next = w.mul(d.reflection(beta));
                    if set.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            assert_eq!(set.len(), lw.order(), "reflection closure differs in {t}");
            assert!(lw.elements.iter().all(|w| set.contains(w)));
        }
    }

    #[test]
    fn s_in_w_lambda_fixes_lambda() {
        for t in ["A2", "B2", "G2"] {
            let d = datum(t);
            for lam in enumerate_xbar(&d, 4) {
                for i in 0..d.rank() {
                    if pair(&d.simple_coroot(i), &lam).is_zero() {
                        assert_eq!(act(d.simple_reflection(i), &lam), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_is_w_invariant() {
        for t in ["A2", "B2"] {
            let d = datum(t);
            for lam in enumerate_xbar(&d, 3) {
                for w in d.weyl_generate() {
                    for beta in d.pos_coroots() {
                        assert_eq!(
                            pair(&w.act_coroot(beta), &act(&w, &lam)),
                            pair(beta, &lam)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn min_coset_examples() {
        let a1 = datum("A1");
        let s = a1.simple_reflection(0).clone();
        // W_λ trivial at 1/2 in A1: min of {s} is s
        let half = TorusPoint::from_fracs(&[1], 2);
        assert_eq!(min_coset_at(&a1, &s, &half), s);
        // λ = 0: the whole group is one coset with minimum 1
        assert!(min_coset_at(&a1, &s, &TorusPoint::zero(1)).is_identity());

        let a2 = datum("A2");
        let lam = TorusPoint::from_fracs(&[0, 1], 2);
        let w = a2.simple_reflection(1).mul(a2.simple_reflection(0));
        assert_eq!(min_coset_at(&a2, &w, &lam), *a2.simple_reflection(1));
    }

    #[test]
    fn min_coset_is_unique_minimum_exhaustively() {
        for (t, den) in [("A2", 2i64), ("B2", 3), ("G2", 2)] {
            let d = datum(t);
            for lam in enumerate_xbar(&d, den) {
                let lw = little_weyl(&d, &lam);
                for w in d.weyl_generate() {
                    let z = min_coset(&d, &w, &lw);
                    let mut hits = 0usize;
                    for u in &lw.elements {
                        let cand = w.mul(u);
                        let ok = lw
                            .positives
                            .iter()
                            .all(|beta| d.is_positive_coroot(&cand.act_coroot(beta)));
                        if ok {
                            hits += 1;
                            assert_eq!(cand, z);
                        }
                        if cand != z {
                            assert!(d.length(&z) < d.length(&cand));
                        }
                    }
                    assert_eq!(hits, 1);
                }
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let a1 = datum("A1");
        let third = TorusPoint::from_fracs(&[1], 3);
        let two_thirds = TorusPoint::from_fracs(&[2], 3);
        let s = a1.simple_reflection(0);
        let id = a1.identity();
        assert!(bracket_contains(&a1, &third, &id, &third));
        assert!(bracket_contains(&a1, &two_thirds, s, &third));
        assert!(!bracket_contains(&a1, &TorusPoint::zero(1), s, &TorusPoint::zero(1)));
    }

    #[test]
    fn bracket_equals_transport_of_positives() {
        // membership is equivalent to z(Ř_λ⁺) = Ř_{λ′}⁺
        let d = datum("A2");
        for lam in enumerate_xbar(&d, 2) {
            let lw = little_weyl(&d, &lam);
            for z in d.weyl_generate() {
                let target = act(&z, &lam);
                let lw_t = little_weyl(&d, &target);
                let mut image: Vec<Vec<i64>> =
                    lw.positives.iter().map(|b| z.act_coroot(b)).collect();
                image.sort();
                let mut expected = lw_t.positives.clone();
                expected.sort();
                assert_eq!(
                    bracket_contains(&d, &target, &z, &lam),
                    image == expected
                );
            }
        }
    }

    #[test]
    fn groupoid_laws_on_small_orbit() {
        let a2 = datum("A2");
        let orbit = orbit_of(&a2, &TorusPoint::from_fracs(&[0, 1], 2));
        let arrows = groupoid_arrows(&a2, &orbit);
        for arrow in &arrows {
            let inv = arrow.inverse(&a2).expect("inverse arrow must exist");
            assert!(arrows.contains(&inv));
        }
        for a in &arrows {
            for b in &arrows {
                if a.source == b.target {
                    let c = a.compose(&a2, b).expect("composite arrow must exist");
                    assert!(arrows.contains(&c));
                }
            }
        }
    }

    #[test]
    fn point_string_round_trip() {
        let lam = TorusPoint::from_fracs(&[0, 1], 3);
        assert_eq!(torus_point_strings(&lam), vec!["0/1", "1/3"]);
        assert_eq!(parse_torus_point("0/1,1/3", 2), Some(lam));
        assert_eq!(parse_torus_point("1/3", 2), None);
    }

    #[test]
    fn cache_returns_same_data() {
        let d = datum("A2");
        let cache = LittleWeylCache::new(&d);
        let lam = TorusPoint::from_fracs(&[0, 1], 2);
        let a = cache.get(&lam);
        let b = cache.get(&lam);
        assert_eq!(a.simples, b.simples);
        assert_eq!(a.order(), b.order());
    }
}
