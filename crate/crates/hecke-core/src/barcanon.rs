//! The bar operator on the twisted-involution module and its canonical
//! basis.
//!
//! The bar operator is the semilinear map sending a basis element a_{w,λ}
//! to E(w,λ)·T_w⁻¹ a_{w,−mλ} and conjugating scalars by v ↦ v⁻¹.  Its
//! matrix is block-diagonal over the (z, λ) blocks and unitriangular with
//! respect to the little length of the u-part; the canonical basis is the
//! unique bar-fixed basis congruent to the standard one modulo negative
//! powers of v.  Triangularity is asserted at runtime, never assumed: a
//! violation surfaces as an error naming the offending entry.

use std::collections::{BTreeMap, HashMap};

use crate::coeff::Laurent;
use crate::heckemod::{HeckeModule, ModuleVector};
use crate::torusquot::TorusPoint;
use crate::{Error, Result};

/// The bar operator applied to a vector: semilinear on coefficients, and on
/// basis elements a_{w,λ} ↦ E(w,λ)·T_w⁻¹ a_{w,−mλ}.
pub fn bar_act(module: &HeckeModule, xi: &ModuleVector) -> Result<ModuleVector> {
    let m = module.m();
    let mut out = ModuleVector::zero();
    for (idx, c) in xi.terms() {
        let ti = module.element(idx);
        let mirrored = module.index_of(&ti.w, &ti.lam.scale(-m))?;
        let moved = module.tw_inv_act(&ti.w, &ModuleVector::basis(mirrored))?;
        let f = c.bar().scale(ti.sign);
        out = out.add(&moved.scale(&f));
    }
    Ok(out)
}

/// Exhaustive verification of the bar operator's contracts on the whole
/// enumerated basis: the intertwining relations with the generators and
/// their inverses, involutivity, and fixedness on block base points.
///
/// Returns the number of identities checked; the first violation aborts
/// with a description.
pub fn verify_bar(module: &HeckeModule) -> Result<usize> {
    let d = module.datum();
    let mut checks = 0usize;
    for idx in 0..module.dim() {
        let v = ModuleVector::basis(idx);
        let bv = bar_act(module, &v)?;
        for s in 0..d.rank() {
            // B T_s = T_s⁻¹ B
            let lhs = bar_act(module, &module.ts_act(s, &v)?)?;
            let rhs = module.ts_inv_act(s, &bv)?;
            if lhs != rhs {
                return Err(Error::VerificationFailed(format!(
                    "B·T_{s} ≠ T_{s}⁻¹·B at basis element {idx}"
                )));
            }
            checks += 1;
            // B T_s⁻¹ = T_s B
            let lhs = bar_act(module, &module.ts_inv_act(s, &v)?)?;
            let rhs = module.ts_act(s, &bv)?;
            if lhs != rhs {
                return Err(Error::VerificationFailed(format!(
                    "B·T_{s}⁻¹ ≠ T_{s}·B at basis element {idx}"
                )));
            }
            checks += 1;
        }
        // B² = 1
        if bar_act(module, &bv)? != v {
            return Err(Error::VerificationFailed(format!(
                "B² ≠ 1 at basis element {idx}"
            )));
        }
        checks += 1;
        // block base points are fixed
        if module.element(idx).u.is_identity() && bv != v {
            return Err(Error::VerificationFailed(format!(
                "B does not fix the block base point {idx}"
            )));
        }
        checks += 1;
    }
    Ok(checks)
}

/// The matrix of the bar operator over a chosen set of basis indices, in
/// the solve order.  Semilinearity means the involution identity reads
/// `M · bar(M) = 1`.
pub struct BarMatrix {
    /// Basis indices in solve order: graded by the little length of the
    /// u-part, then by enumeration order (optionally reversed within each
    /// grade to exercise uniqueness).
    pub order: Vec<usize>,
    /// Rank of each basis index in `order`.
    pub position: HashMap<usize, usize>,
    /// The bar image of each listed basis element.
    pub columns: HashMap<usize, ModuleVector>,
}

impl BarMatrix {
    /// Builds the bar matrix over the given indices and asserts it is
    /// unitriangular for the solve order.
    pub fn build(module: &HeckeModule, indices: &[usize], permuted: bool) -> Result<Self> {
        let mut order: Vec<usize> = indices.to_vec();
        order.sort_by_key(|&i| {
            let grade = module.element(i).u_len_lambda;
            let tie = if permuted { usize::MAX - i } else { i };
            (grade, tie)
        });
        let position: HashMap<usize, usize> =
            order.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut columns = HashMap::new();
        for &i in &order {
            let col = bar_act(module, &ModuleVector::basis(i))?;
            if col.coeff(i) != Laurent::one() {
                return Err(Error::NotUnitriangular(format!(
                    "diagonal entry at basis element {i} is {:?}",
                    col.coeff(i)
                )));
            }
            for (j, _) in col.terms() {
                if j == i {
                    continue;
                }
                let pj = position.get(&j).ok_or_else(|| {
                    Error::NotUnitriangular(format!(
                        "bar image of {i} leaves the chosen index set at {j}"
                    ))
                })?;
                if *pj >= position[&i] {
                    return Err(Error::NotUnitriangular(format!(
                        "entry ({j}, {i}) sits on or above the diagonal"
                    )));
                }
            }
            columns.insert(i, col);
        }
        Ok(BarMatrix { order, position, columns })
    }

    /// Checks `M · bar(M) = 1` entrywise by applying the operator twice.
    pub fn check_involution(&self, module: &HeckeModule) -> Result<()> {
        for &i in &self.order {
            let twice = bar_act(module, &self.columns[&i])?;
            if twice != ModuleVector::basis(i) {
                return Err(Error::VerificationFailed(format!(
                    "bar matrix squared is not the identity at column {i}"
                )));
            }
        }
        Ok(())
    }
}

/// A computed canonical basis: for each basis index, the bar-fixed element
/// congruent to it modulo negative powers of v.
pub struct CanonicalBasisTable {
    /// Solve order used (basis indices).
    pub order: Vec<usize>,
    /// The canonical element attached to each basis index.
    pub elements: BTreeMap<usize, ModuleVector>,
}

impl CanonicalBasisTable {
    pub fn get(&self, idx: usize) -> &ModuleVector {
        &self.elements[&idx]
    }
}

/// Computes the canonical basis over the basis indices whose λ lies in the
/// given orbit (all indices when `orbit` is `None`).
///
/// Successive correction: walk the solve order; at each step cancel the
/// topmost bar-unstable coefficient with the already-computed canonical
/// element below, choosing the unique correction in v⁻¹ℤ[v⁻¹].
pub fn canonical_basis(
    module: &HeckeModule,
    orbit: Option<&[TorusPoint]>,
    permuted: bool,
) -> Result<CanonicalBasisTable> {
    let indices: Vec<usize> = (0..module.dim())
        .filter(|&i| match orbit {
            Some(lams) => lams.contains(&module.element(i).lam),
            None => true,
        })
        .collect();
    let bar = BarMatrix::build(module, &indices, permuted)?;

    let mut elements: BTreeMap<usize, ModuleVector> = BTreeMap::new();
    for &i in &bar.order {
        let mut f = ModuleVector::basis(i);
        // each pass strictly lowers the topmost unstable position
        for _guard in 0..=bar.order.len() {
            let delta = bar_act(module, &f)?.sub(&f);
            if delta.is_zero() {
                break;
            }
            let (j, gamma) = delta
                .terms()
                .max_by_key(|(j, _)| {
                    *bar.position
                        .get(j)
                        .expect("bar image stays inside the index set")
                })
                .map(|(j, c)| (j, c.clone()))
                .expect("nonzero delta has a top term");
            if bar.position[&j] >= bar.position[&i] {
                return Err(Error::NotUnitriangular(format!(
                    "correction for {i} reached position {j}"
                )));
            }
            if gamma.bar() != -gamma.clone() {
                return Err(Error::NotUnitriangular(format!(
                    "bar-residue at ({j}, {i}) is not antisymmetric: {gamma:?}"
                )));
            }
            let rho = gamma.negative_part();
            let correction = elements
                .get(&j)
                .expect("solve order processes lower elements first")
                .scale(&rho);
            f = f.add(&correction);
        }
        let delta = bar_act(module, &f)?.sub(&f);
        if !delta.is_zero() {
            return Err(Error::NotUnitriangular(format!(
                "correction for {i} did not converge"
            )));
        }
        // congruence: diagonal 1, everything else in v⁻¹ℤ[v⁻¹]
        if f.coeff(i) != Laurent::one() {
            return Err(Error::NotUnitriangular(format!(
                "canonical element {i} has diagonal {:?}",
                f.coeff(i)
            )));
        }
        for (j, c) in f.terms() {
            if j != i && !c.in_vinv_zvinv() {
                return Err(Error::NotUnitriangular(format!(
                    "canonical element {i} has coefficient {c:?} at {j}"
                )));
            }
        }
        elements.insert(i, f);
    }
    Ok(CanonicalBasisTable { order: bar.order, elements })
}
