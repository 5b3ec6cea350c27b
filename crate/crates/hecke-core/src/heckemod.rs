//! The Hecke module spanned by the m-twisted involutions: the braid-group
//! generator actions with exact Laurent coefficients, their inverses,
//! products along reduced words, the idempotent projections, the v = 1
//! specialization, and the independent blockwise-transport realization of
//! the same action used as an oracle.
//!
//! The generator action on a basis vector is dispatched on three exact
//! predicates: does s commute with w, does s shorten w, and does the simple
//! coroot of s pair to zero with λ.  The four resulting cases partition all
//! inputs; there is no fallthrough.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeff::Laurent;
use crate::extweyl::{enumerate_txm, Block, TwistedInvolution};
use crate::rootdata::{RootDatum, WeylElt};
use crate::torusquot::{act, min_coset, pair, LittleWeylCache, LittleWeylData, TorusPoint};
use crate::{Error, Result};

/// A finitely supported vector over the enumerated twisted-involution basis,
/// keyed by basis index.  Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ModuleVector {
    terms: BTreeMap<usize, Laurent>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(idx: usize) -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(idx, Laurent::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: usize, c: Laurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx).or_insert_with(Laurent::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add(&self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (&idx, c) in &rhs.terms {
            out.add_term(idx, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (&idx, c) in &rhs.terms {
            out.add_term(idx, -c.clone());
        }
        out
    }

    pub fn scale(&self, f: &Laurent) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (&idx, c) in &self.terms {
            out.add_term(idx, crate::coeff::laurent_mul(c, f));
        }
        out
    }

    pub fn coeff(&self, idx: usize) -> Laurent {
        self.terms.get(&idx).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Laurent)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    /// Bar-conjugates every coefficient (the scalar half of a semilinear map).
    pub fn bar_coeffs(&self) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (&idx, c) in &self.terms {
            out.add_term(idx, c.bar());
        }
        out
    }

    /// Evaluates every coefficient at v = 1.
    pub fn eval_one(&self) -> BTreeMap<usize, i64> {
        self.terms.iter().map(|(&i, c)| (i, c.eval_one())).collect()
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| format!("({c})·a[{i}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The braid-group module over one root datum, twist m, and denominator N:
/// the enumerated basis plus the caches the operators need.
pub struct HeckeModule<'a> {
    datum: &'a RootDatum,
    m: i64,
    n: i64,
    basis: Vec<TwistedInvolution>,
    /// (λ → (w → index)) lookup into the basis.
    index: HashMap<TorusPoint, HashMap<WeylElt, usize>>,
    /// Ambient lengths of the basis elements' w-parts.
    w_lengths: Vec<usize>,
    lw_cache: LittleWeylCache<'a>,
}

impl<'a> HeckeModule<'a> {
    pub fn new(datum: &'a RootDatum, m: i64, n: i64) -> Result<Self> {
        let basis = enumerate_txm(datum, m, n)?;
        let mut index: HashMap<TorusPoint, HashMap<WeylElt, usize>> = HashMap::new();
        for (i, ti) in basis.iter().enumerate() {
            index
                .entry(ti.lam.clone())
                .or_default()
                .insert(ti.w.clone(), i);
        }
        let w_lengths = basis.iter().map(|ti| datum.length(&ti.w)).collect();
        Ok(HeckeModule {
            datum,
            m,
            n,
            basis,
            index,
            w_lengths,
            lw_cache: LittleWeylCache::new(datum),
        })
    }

    pub fn datum(&self) -> &'a RootDatum {
        self.datum
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn denominator(&self) -> i64 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_elements(&self) -> &[TwistedInvolution] {
        &self.basis
    }

    pub fn element(&self, idx: usize) -> &TwistedInvolution {
        &self.basis[idx]
    }

    pub fn index_of(&self, w: &WeylElt, lam: &TorusPoint) -> Result<usize> {
        self.index
            .get(lam)
            .and_then(|by_w| by_w.get(w))
            .copied()
            .ok_or_else(|| Error::IndexOutsideBasis(format!("{w:?} at {lam:?}")))
    }

    pub fn little_weyl(&self, lam: &TorusPoint) -> LittleWeylData {
        self.lw_cache.get(lam)
    }

    /// Δ for a generator at a point: 1 when ⌊α̌_s, λ⌋ = 0.
    pub fn delta(&self, s: usize, lam: &TorusPoint) -> bool {
        pair(&self.datum.simple_coroot(s), lam).is_zero()
    }

    /// The generator action T_s on a vector.
    pub fn ts_act(&self, s: usize, xi: &ModuleVector) -> Result<ModuleVector> {
        let sref = self.datum.simple_reflection(s);
        let mut out = ModuleVector::zero();
        for (idx, c) in xi.terms() {
            let ti = &self.basis[idx];
            let w = &ti.w;
            let lam = &ti.lam;
            let sw = sref.mul(w);
            let ws = w.mul(sref);
            let commutes = sw == ws;
            let s_raises = self.datum.length(&sw) > self.w_lengths[idx];
            let delta = self.delta(s, lam);
            let slam = act(sref, lam);
            if !commutes {
                let sws = sw.mul(sref);
                let tgt = self.index_of(&sws, &slam)?;
                out.add_term(tgt, c.clone());
                if !s_raises && delta {
                    out.add_term(idx, crate::coeff::laurent_mul(c, &Laurent::v2_minus_vinv2()));
                }
            } else if s_raises {
                let tgt = self.index_of(w, &slam)?;
                out.add_term(tgt, c.clone());
                if delta {
                    let tgt2 = self.index_of(&sw, lam)?;
                    out.add_term(tgt2, crate::coeff::laurent_mul(c, &Laurent::v_plus_vinv()));
                }
            } else if delta {
                let tgt = self.index_of(&sw, lam)?;
                out.add_term(tgt, crate::coeff::laurent_mul(c, &Laurent::v_minus_vinv()));
                out.add_term(
                    idx,
                    crate::coeff::laurent_mul(c, &Laurent::v2_minus_vinv2_minus_one()),
                );
            } else {
                let tgt = self.index_of(w, &slam)?;
                out.add_term(tgt, c.clone());
            }
        }
        Ok(out)
    }

    /// The inverse generator action: on each λ-component,
    /// T_s⁻¹ = T_s − Δ(v² − v⁻²).
    pub fn ts_inv_act(&self, s: usize, xi: &ModuleVector) -> Result<ModuleVector> {
        let mut out = self.ts_act(s, xi)?;
        let corr = Laurent::v2_minus_vinv2();
        for (idx, c) in xi.terms() {
            if self.delta(s, &self.basis[idx].lam) {
                out.add_term(idx, -crate::coeff::laurent_mul(c, &corr));
            }
        }
        Ok(out)
    }

    /// T_w along the canonical reduced word (rightmost letter acts first).
    pub fn tw_act(&self, w: &WeylElt, xi: &ModuleVector) -> Result<ModuleVector> {
        let word = self.datum.reduced_word(w);
        let mut cur = xi.clone();
        for &i in word.iter().rev() {
            cur = self.ts_act(i, &cur)?;
        }
        Ok(cur)
    }

    /// T_w⁻¹ = T_{s_k}⁻¹ ⋯ T_{s_1}⁻¹ for w = s_1 ⋯ s_k reduced.
    pub fn tw_inv_act(&self, w: &WeylElt, xi: &ModuleVector) -> Result<ModuleVector> {
        let word = self.datum.reduced_word(w);
        let mut cur = xi.clone();
        for &i in word.iter() {
            cur = self.ts_inv_act(i, &cur)?;
        }
        Ok(cur)
    }

    /// The idempotent 1_λ: keeps exactly the terms whose index sits at λ.
    pub fn one_lambda(&self, lam: &TorusPoint, xi: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (idx, c) in xi.terms() {
            if self.basis[idx].lam == *lam {
                out.add_term(idx, c.clone());
            }
        }
        out
    }

    /// The matrix of T_s at v = 1, columns indexed by basis elements.
    pub fn generator_matrix_v1(&self, s: usize) -> Result<Vec<Vec<i64>>> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for idx in 0..n {
            let img = self.ts_act(s, &ModuleVector::basis(idx))?;
            let mut col = vec![0i64; n];
            for (j, c) in img.eval_one() {
                col[j] = c;
            }
            cols.push(col);
        }
        Ok(cols)
    }

    /// A reduced word for `u` in the simple generators of the little Weyl
    /// group, by greedy right-descent on the little length; ties broken by
    /// the lowest simple index.
    pub fn little_word(&self, lw: &LittleWeylData, u: &WeylElt) -> Result<Vec<usize>> {
        if !lw.contains(u) {
            return Err(Error::NotInLittleWeyl);
        }
        let mut word = Vec::new();
        let mut cur = u.clone();
        let mut len = lw.length_lambda(self.datum, &cur)?;
        while len > 0 {
            let mut found = None;
            for (j, sigma) in lw.generators.iter().enumerate() {
                let next = cur.mul(sigma);
                let next_len = lw.length_lambda(self.datum, &next)?;
                if next_len < len {
                    found = Some((j, next, next_len));
                    break;
                }
            }
            let (j, next, next_len) =
                found.expect("element of positive little length must have a descent");
            word.push(j);
            cur = next;
            len = next_len;
        }
        word.reverse();
        Ok(word)
    }

    /// The blockwise action of the little-Weyl generator σ (by index into
    /// Π̌_λ) on a vector supported on one block.
    pub fn circle_act(
        &self,
        block: &Block,
        sigma_idx: usize,
        xi: &ModuleVector,
    ) -> Result<ModuleVector> {
        let lw = self.little_weyl(&block.lam);
        if sigma_idx >= lw.generators.len() {
            return Err(Error::NotLittleSimple(sigma_idx));
        }
        for (idx, _) in xi.terms() {
            let ti = &self.basis[idx];
            if ti.lam != block.lam || ti.z != block.z {
                return Err(Error::SupportOutsideBlock);
            }
        }
        self.circle_act_sector(&block.lam, &lw, sigma_idx, xi)
    }

    /// The same action on a whole λ-sector; each term acts within its own
    /// block using its cached decomposition.
    fn circle_act_sector(
        &self,
        lam: &TorusPoint,
        lw: &LittleWeylData,
        sigma_idx: usize,
        xi: &ModuleVector,
    ) -> Result<ModuleVector> {
        let sigma = &lw.generators[sigma_idx];
        let mut out = ModuleVector::zero();
        for (idx, c) in xi.terms() {
            let ti = &self.basis[idx];
            debug_assert_eq!(ti.lam, *lam);
            let z = &ti.z;
            let u = &ti.u;
            let iota_sigma = z.mul(sigma).mul(&z.inverse());
            let u_sigma = u.mul(sigma);
            let commutes = u_sigma == iota_sigma.mul(u);
            let raises = lw.length_lambda(self.datum, &u_sigma)? > ti.u_len_lambda;
            if !commutes {
                let u_new = iota_sigma.mul(u).mul(sigma);
                let tgt = self.index_of(&z.mul(&u_new), lam)?;
                out.add_term(tgt, c.clone());
                if !raises {
                    out.add_term(idx, crate::coeff::laurent_mul(c, &Laurent::v2_minus_vinv2()));
                }
            } else if raises {
                out.add_term(idx, c.clone());
                let tgt = self.index_of(&z.mul(&u_sigma), lam)?;
                out.add_term(tgt, crate::coeff::laurent_mul(c, &Laurent::v_plus_vinv()));
            } else {
                let tgt = self.index_of(&z.mul(&u_sigma), lam)?;
                out.add_term(tgt, crate::coeff::laurent_mul(c, &Laurent::v_minus_vinv()));
                out.add_term(
                    idx,
                    crate::coeff::laurent_mul(c, &Laurent::v2_minus_vinv2_minus_one()),
                );
            }
        }
        Ok(out)
    }

    /// The transported module action of the basis element (T_u T_z 1_λ):
    /// kills every term away from λ, conjugates the surviving block indices
    /// through the arrow z, then acts by T_u through the blockwise action
    /// along a reduced little-Weyl word.
    pub fn bullet_act(
        &self,
        u: &WeylElt,
        z: &WeylElt,
        lam: &TorusPoint,
        xi: &ModuleVector,
    ) -> Result<ModuleVector> {
        let lam_target = act(z, lam);
        let lw_source = self.little_weyl(lam);
        if min_coset(self.datum, z, &lw_source) != *z {
            return Err(Error::NotGroupoidArrow(format!("{z:?} at {lam:?}")));
        }
        let lw_target = self.little_weyl(&lam_target);
        if !lw_target.contains(u) {
            return Err(Error::NotInLittleWeyl);
        }

        // transport: a_{w̃, λ} ↦ a_{z w̃ z⁻¹, λ′}
        let z_inv = z.inverse();
        let mut transported = ModuleVector::zero();
        for (idx, c) in xi.terms() {
            let ti = &self.basis[idx];
            if ti.lam != *lam {
                continue;
            }
            let w_new = z.mul(&ti.w).mul(&z_inv);
            let tgt = self.index_of(&w_new, &lam_target)?;
            transported.add_term(tgt, c.clone());
        }

        let word = self.little_word(&lw_target, u)?;
        let mut cur = transported;
        for &j in word.iter().rev() {
            cur = self.circle_act_sector(&lam_target, &lw_target, j, &cur)?;
        }
        Ok(cur)
    }

    /// Factors T_w 1_λ as (u, z) with z = min(wW_λ) and u = w z⁻¹, so that
    /// u lies in the little Weyl group of z(λ).
    pub fn decompose_tw1lambda(&self, w: &WeylElt, lam: &TorusPoint) -> (WeylElt, WeylElt) {
        let lw = self.little_weyl(lam);
        let z = min_coset(self.datum, w, &lw);
        let u = w.mul(&z.inverse());
        debug_assert!(self.little_weyl(&act(&z, lam)).contains(&u));
        (u, z)
    }

    /// The action-table rows of T_s: for each basis index, the image as a
    /// list of (target index, coefficient) pairs.
    pub fn action_table(&self, s: usize) -> Result<Vec<Vec<(usize, Laurent)>>> {
        (0..self.dim())
            .map(|idx| {
                let img = self.ts_act(s, &ModuleVector::basis(idx))?;
                Ok(img.terms().map(|(j, c)| (j, c.clone())).collect())
            })
            .collect()
    }
}

/// Multiplies two square integer matrices given as column lists.
pub fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    // columns of the product: a applied to each column of b
    for (j, bcol) in b.iter().enumerate() {
        for (k, &bkj) in bcol.iter().enumerate() {
            if bkj == 0 {
                continue;
            }
            for i in 0..n {
                out[j][i] += a[k][i] * bkj;
            }
        }
    }
    out
}

pub fn int_mat_identity(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; n]; n];
    for (j, col) in out.iter_mut().enumerate() {
        col[j] = 1;
    }
    out
}
