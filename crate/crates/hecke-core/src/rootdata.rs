//! Simply connected root data for the finite Cartan types and their Weyl
//! groups.
//!
//! The weight lattice X is identified with ℤ^r in the basis of fundamental
//! weights ω_i, so that the pairing with the coweight side is the dot
//! product against simple-coroot coordinates: ⟨α̌_j, ω_i⟩ = δ_ij.  A Weyl
//! group element is canonically the integer matrix of its action on X in
//! this basis; the action on coroots is the inverse transpose, which for the
//! generators is just the transpose and propagates through products without
//! ever inverting a matrix.
//!
//! Conventions: the Cartan matrix entry `A[i][j]` is ⟨α̌_i, α_j⟩, the simple
//! reflection acts on weights by s_i(x) = x − ⟨α̌_i, x⟩α_i, and column i of
//! `A` expresses α_i in the ω-basis.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::{Error, Result};

/// Hard limits for enumeration-based algorithms: they materialize the whole
/// Weyl group, so the supported types are capped.
pub const MAX_RANK: usize = 6;
pub const MAX_WEYL_ORDER: u128 = 51_840;

/// One of the seven families of finite irreducible Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    fn weyl_order(self, rank: usize) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            Family::A => fact(rank + 1),
            Family::B | Family::C => (1u128 << rank) * fact(rank),
            Family::D => (1u128 << (rank - 1)) * fact(rank),
            Family::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

/// A product of irreducible factors, e.g. `A2`, `B3`, `A1xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn new(factors: Vec<(Family, usize)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidCartanType("empty type".into()));
        }
        for &(family, rank) in &factors {
            if !family.rank_ok(rank) {
                return Err(Error::InvalidRank { family: family.letter(), rank });
            }
        }
        Ok(CartanType { factors })
    }

    /// Parses strings like `A2`, `B3`, `G2`, `A1xA1`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = match chars.next() {
                Some('A') | Some('a') => Family::A,
                Some('B') | Some('b') => Family::B,
                Some('C') | Some('c') => Family::C,
                Some('D') | Some('d') => Family::D,
                Some('E') | Some('e') => Family::E,
                Some('F') | Some('f') => Family::F,
                Some('G') | Some('g') => Family::G,
                _ => return Err(Error::InvalidCartanType(s.into())),
            };
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidCartanType(s.into()))?;
            factors.push((family, rank));
        }
        CartanType::new(factors)
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, r)| r).sum()
    }

    /// The order of the Weyl group, from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|&(f, r)| f.weyl_order(r)).product()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(fam, r)| format!("{}{}", fam.letter(), r))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A square integer matrix of side `n`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    data: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Mat { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend(row);
        }
        Mat { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat { n, data: vec![0; n * n] };
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        let n = self.n;
        assert_eq!(n, rhs.n);
        let mut out = Mat { n, data: vec![0; n * n] };
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    /// Applies the matrix to an integer column vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        assert_eq!(v.len(), n);
        (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum())
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// A Weyl group element in canonical form: the matrix of its action on the
/// weight lattice in fundamental-weight coordinates.
///
/// The matrix of the contragredient action on the coroot lattice is carried
/// along so that products and inverses never require a matrix inversion.
/// Equality, hashing and ordering use the weight-side matrix only; the
/// coroot-side matrix is determined by it.
#[derive(Clone, Eq)]
pub struct WeylElt {
    xmat: Mat,
    ymat: Mat,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.xmat == other.xmat
    }
}

impl std::hash::Hash for WeylElt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.xmat.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.xmat.cmp(&other.xmat)
    }
}

impl WeylElt {
    pub fn identity(rank: usize) -> Self {
        WeylElt { xmat: Mat::identity(rank), ymat: Mat::identity(rank) }
    }

    /// Builds an element whose action on X is an involution, so that the
    /// coroot-side matrix is the plain transpose.
    fn from_involution_xmat(xmat: Mat) -> Self {
        let ymat = xmat.transpose();
        WeylElt { xmat, ymat }
    }

    pub fn xmat(&self) -> &Mat {
        &self.xmat
    }

    /// Matrix of the action on the coroot lattice in simple-coroot
    /// coordinates (the inverse transpose of `xmat`).
    pub fn ymat(&self) -> &Mat {
        &self.ymat
    }

    pub fn mul(&self, rhs: &WeylElt) -> WeylElt {
        WeylElt {
            xmat: self.xmat.mul(&rhs.xmat),
            ymat: self.ymat.mul(&rhs.ymat),
        }
    }

    /// The inverse, read off by transposing the two stored matrices.
    pub fn inverse(&self) -> WeylElt {
        WeylElt {
            xmat: self.ymat.transpose(),
            ymat: self.xmat.transpose(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.xmat == Mat::identity(self.xmat.n)
    }

    pub fn is_involution(&self) -> bool {
        self.mul(self).is_identity()
    }

    /// Applies the element to a coroot in simple-coroot coordinates.
    pub fn act_coroot(&self, coroot: &[i64]) -> Vec<i64> {
        self.ymat.apply(coroot)
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.xmat)
    }
}

/// A simply connected root datum: Cartan matrix, the matched lists of
/// positive roots and coroots, and the simple reflections.
pub struct RootDatum {
    cartan_type: CartanType,
    rank: usize,
    /// `cartan.get(i, j)` = ⟨α̌_i, α_j⟩.
    cartan: Mat,
    /// Positive roots in simple-root coordinates, aligned with `pos_coroots`.
    pos_roots: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates.
    pos_coroots: Vec<Vec<i64>>,
    simple_reflections: Vec<WeylElt>,
    /// The reflection s_β for every coroot β (positive or negative).
    reflection_by_coroot: HashMap<Vec<i64>, WeylElt>,
    pos_coroot_index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(ct: &CartanType) -> Mat {
    let rank = ct.rank();
    let mut a = Mat::identity(rank);
    for i in 0..rank {
        a.set(i, i, 2);
    }
    let mut offset = 0;
    for &(family, r) in ct.factors() {
        // chain entries first, then the family-specific corrections
        for k in 0..r.saturating_sub(1) {
            let (i, j) = (offset + k, offset + k + 1);
            a.set(i, j, -1);
            a.set(j, i, -1);
        }
        match family {
            Family::A => {}
            Family::B => {
                // short root last: ⟨α̌_r, α_{r−1}⟩ = −2
                a.set(offset + r - 1, offset + r - 2, -2);
            }
            Family::C => {
                // long root last: ⟨α̌_{r−1}, α_r⟩ = −2
                a.set(offset + r - 2, offset + r - 1, -2);
            }
            Family::D => {
                // fork: the last node attaches to node r−3 instead of r−2
                a.set(offset + r - 2, offset + r - 1, 0);
                a.set(offset + r - 1, offset + r - 2, 0);
                a.set(offset + r - 3, offset + r - 1, -1);
                a.set(offset + r - 1, offset + r - 3, -1);
            }
            Family::E => {
                // Bourbaki: node 2 attaches to node 4; chain 1-3-4-5-...
                a.set(offset, offset + 1, 0);
                a.set(offset + 1, offset, 0);
                a.set(offset, offset + 2, -1);
                a.set(offset + 2, offset, -1);
                a.set(offset + 1, offset + 3, -1);
                a.set(offset + 3, offset + 1, -1);
                a.set(offset + 1, offset + 2, 0);
                a.set(offset + 2, offset + 1, 0);
            }
            Family::F => {
                // α₁,α₂ long, α₃,α₄ short: ⟨α̌₃, α₂⟩ = −2
                a.set(offset + 2, offset + 1, -2);
            }
            Family::G => {
                // α₁ short, α₂ long: ⟨α̌₁, α₂⟩ = −3
                a.set(offset, offset + 1, -3);
            }
        }
        offset += r;
    }
    a
}

/// Builds the root datum for a Cartan type.
///
/// The positive (co)roots are found by closing the simple (co)roots under
/// the simple reflections; roots and coroots are generated as matched pairs
/// so the two lists stay aligned.
pub fn build_root_datum(ct: &CartanType) -> Result<RootDatum> {
    if ct.rank() > MAX_RANK {
        return Err(Error::InvalidCartanType(format!(
            "{ct}: total rank exceeds the supported cap of {MAX_RANK}"
        )));
    }
    if ct.weyl_order() > MAX_WEYL_ORDER {
        return Err(Error::InvalidCartanType(format!(
            "{ct}: Weyl group order exceeds the supported cap of {MAX_WEYL_ORDER}"
        )));
    }
    let rank = ct.rank();
    let cartan = cartan_matrix(ct);

    // Simple reflection on X: s_i(x) = x − x_i·α_i, with α_i read off
    // column i of the Cartan matrix.
    let mut simple_reflections = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut m = Mat::identity(rank);
        for k in 0..rank {
            m.set(k, i, if k == i { -1 } else { -cartan.get(k, i) });
        }
        simple_reflections.push(WeylElt::from_involution_xmat(m));
    }

    // Orbit closure on (root, coroot) pairs.  s_i on a root in simple-root
    // coordinates subtracts ⟨α̌_i, ρ⟩ (row i of A against ρ) from
    // coordinate i; on a coroot it is the coroot-side matrix action.
    let refl_root = |i: usize, root: &[i64]| -> Vec<i64> {
        let pairing: i64 = (0..rank).map(|j| cartan.get(i, j) * root[j]).sum();
        let mut out = root.to_vec();
        out[i] -= pairing;
        out
    };

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    let mut all_pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back((e.clone(), e.clone()));
        all_pairs.push((e.clone(), e));
    }
    while let Some((root, coroot)) = queue.pop_front() {
        for (i, s) in simple_reflections.iter().enumerate() {
            let r2 = refl_root(i, &root);
            let c2 = s.act_coroot(&coroot);
            if seen.insert(c2.clone()) {
                queue.push_back((r2.clone(), c2.clone()));
                all_pairs.push((r2, c2));
            }
        }
    }

    // A (co)root has uniform-sign coordinates; keep the positive ones in
    // first-discovery order.
    let mut pos_roots = Vec::new();
    let mut pos_coroots = Vec::new();
    for (root, coroot) in &all_pairs {
        debug_assert!(
            coroot.iter().all(|&c| c >= 0) || coroot.iter().all(|&c| c <= 0),
            "coroot coordinates must have uniform sign: {coroot:?}"
        );
        if coroot.iter().any(|&c| c > 0) {
            pos_roots.push(root.clone());
            pos_coroots.push(coroot.clone());
        }
    }

    // The reflection attached to a coroot: walk the orbit from the simple
    // coroots tracking a witness w with β = w(α̌_i); then s_β = w s_i w⁻¹.
    // The reflection itself does not depend on the witness found.
    let mut reflection_by_coroot: HashMap<Vec<i64>, WeylElt> = HashMap::new();
    let mut queue: VecDeque<(Vec<i64>, WeylElt, usize)> = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        queue.push_back((e, WeylElt::identity(rank), i));
    }
    while let Some((coroot, witness, origin)) = queue.pop_front() {
        if reflection_by_coroot.contains_key(&coroot) {
            continue;
        }
        let s_beta = witness
            .mul(&simple_reflections[origin])
            .mul(&witness.inverse());
        let negated: Vec<i64> = coroot.iter().map(|&c| -c).collect();
        reflection_by_coroot.insert(coroot.clone(), s_beta.clone());
        reflection_by_coroot.insert(negated, s_beta);
        for s in &simple_reflections {
            let c2 = s.act_coroot(&coroot);
            if !reflection_by_coroot.contains_key(&c2) {
                let w2 = s.mul(&witness);
                queue.push_back((c2, w2, origin));
            }
        }
    }

    let pos_coroot_index = pos_coroots
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();

    Ok(RootDatum {
        cartan_type: ct.clone(),
        rank,
        cartan,
        pos_roots,
        pos_coroots,
        simple_reflections,
        reflection_by_coroot,
        pos_coroot_index,
    })
}

impl RootDatum {
    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &Mat {
        &self.cartan
    }

    pub fn pos_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    pub fn pos_coroots(&self) -> &[Vec<i64>] {
        &self.pos_coroots
    }

    pub fn num_pos_coroots(&self) -> usize {
        self.pos_coroots.len()
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElt {
        &self.simple_reflections[i]
    }

    pub fn simple_reflections(&self) -> &[WeylElt] {
        &self.simple_reflections
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::identity(self.rank)
    }

    /// The simple coroot α̌_i in simple-coroot coordinates.
    pub fn simple_coroot(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0i64; self.rank];
        e[i] = 1;
        e
    }

    /// True when the coroot's coordinates are all ≥ 0.
    pub fn is_positive_coroot(&self, coroot: &[i64]) -> bool {
        coroot.iter().all(|&c| c >= 0)
    }

    pub fn is_coroot(&self, coroot: &[i64]) -> bool {
        self.pos_coroot_index.contains_key(coroot)
            || self
                .pos_coroot_index
                .contains_key(&coroot.iter().map(|&c| -c).collect::<Vec<_>>())
    }

    /// The reflection s_β for a coroot β.
    pub fn reflection(&self, coroot: &[i64]) -> &WeylElt {
        self.reflection_by_coroot
            .get(coroot)
            .expect("reflection requested for a vector that is not a coroot")
    }

    /// Coxeter exponent m_ij of a generator pair, from the Cartan matrix.
    pub fn coxeter_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan.get(i, j) * self.cartan.get(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            other => panic!("impossible Cartan product {other}"),
        }
    }

    /// Length as the number of positive coroots sent to negative ones.
    pub fn length(&self, w: &WeylElt) -> usize {
        self.pos_coroots
            .iter()
            .filter(|beta| !self.is_positive_coroot(&w.act_coroot(beta)))
            .count()
    }

    /// The lexicographically smallest reduced word for `w`, as 0-based
    /// generator indices.
    pub fn reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            // the smallest left descent begins some reduced word, and
            // greedily taking it yields the lex-smallest one
            let i = (0..self.rank)
                .find(|&i| {
                    let shorter = self.simple_reflections[i].mul(&cur);
                    self.length(&shorter) < len
                })
                .expect("nonidentity element must have a left descent");
            cur = self.simple_reflections[i].mul(&cur);
            len -= 1;
            word.push(i);
        }
        word
    }

    /// The product of the listed generators.
    pub fn word_to_element(&self, word: &[usize]) -> WeylElt {
        word.iter()
            .fold(self.identity(), |acc, &i| acc.mul(&self.simple_reflections[i]))
    }

    /// Materializes the full Weyl group, sorted lexicographically on the
    /// weight-side matrices.
    pub fn weyl_generate(&self) -> Vec<WeylElt> {
        let mut seen: HashSet<Mat> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let id = self.identity();
        seen.insert(id.xmat.clone());
        queue.push_back(id.clone());
        out.push(id);
        while let Some(w) = queue.pop_front() {
            for s in &self.simple_reflections {
                let next = w.mul(s);
                if seen.insert(next.xmat.clone()) {
                    queue.push_back(next.clone());
                    out.push(next);
                }
            }
        }
        out.sort();
        out
    }

    /// All involutions of the Weyl group (identity included), sorted.
    pub fn involutions(&self) -> Vec<WeylElt> {
        self.weyl_generate()
            .into_iter()
            .filter(|w| w.is_involution())
            .collect()
    }
}
