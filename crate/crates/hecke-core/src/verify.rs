//! Exhaustive verification suites over one module configuration.
//!
//! Each suite walks the whole enumerated basis and records every identity
//! violation as a human-readable string; an empty failure list means the
//! suite passed.  Internal errors (an operator index escaping the basis)
//! abort instead, since they indicate a broken enumeration rather than a
//! failed identity.
//!
//! The basis loops of the heavier suites are chunked across a scoped worker
//! pool; the operators are pure and the module is shared read-only.

use crate::barcanon::{bar_act, canonical_basis};
use crate::coeff::Laurent;
use crate::extweyl::enumerate_blocks;
use crate::heckemod::{int_mat_identity, int_mat_mul, HeckeModule, ModuleVector};
use crate::rootdata::WeylElt;
use crate::torusquot::{act, TorusPoint};
use crate::Result;

/// Outcome of one suite: how many identities were checked and which failed.
#[derive(Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All suite names, in the order `run_all` executes them.
pub const SUITE_NAMES: &[&str] = &[
    "braid",
    "quadratic",
    "oracle",
    "bar",
    "canonical",
    "v1",
    "signs",
    "bijection",
    "lv-sector",
];

fn chunked_basis_failures<F>(module: &HeckeModule, threads: usize, check: F) -> Result<Vec<String>>
where
    F: Fn(usize) -> Result<Vec<String>> + Sync,
{
    let dim = module.dim();
    let threads = threads.clamp(1, dim.max(1));
    if threads == 1 {
        let mut out = Vec::new();
        for idx in 0..dim {
            out.extend(check(idx)?);
        }
        return Ok(out);
    }
    let mut results: Vec<Result<Vec<String>>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let check = &check;
            handles.push(scope.spawn(move || -> Result<Vec<String>> {
                let mut out = Vec::new();
                let mut idx = t;
                while idx < dim {
                    out.extend(check(idx)?);
                    idx += threads;
                }
                Ok(out)
            }));
        }
        for h in handles {
            results.push(h.join().expect("verification worker panicked"));
        }
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    out.sort();
    Ok(out)
}

/// Braid relations: for every generator pair and basis element, the two
/// alternating products of the Coxeter order agree exactly.
pub fn suite_braid(module: &HeckeModule, threads: usize) -> Result<SuiteOutcome> {
    let d = module.datum();
    let rank = d.rank();
    let pairs: Vec<(usize, usize)> = (0..rank)
        .flat_map(|i| (i + 1..rank).map(move |j| (i, j)))
        .collect();
    let failures = chunked_basis_failures(module, threads, |idx| {
        let mut fails = Vec::new();
        for &(i, j) in &pairs {
            let ord = d.coxeter_order(i, j);
            let mut lhs = ModuleVector::basis(idx);
            let mut rhs = ModuleVector::basis(idx);
            for k in 0..ord {
                let (a, b) = if k % 2 == 0 { (i, j) } else { (j, i) };
                lhs = module.ts_act(a, &lhs)?;
                rhs = module.ts_act(b, &rhs)?;
            }
            if lhs != rhs {
                fails.push(format!(
                    "braid({},{}) of order {ord} differs on basis element {idx}",
                    i + 1,
                    j + 1
                ));
            }
        }
        Ok(fails)
    })?;
    let checks = module.dim() * pairs.len();
    Ok(SuiteOutcome { name: "braid", checks, failures })
}

/// Quadratic and idempotent relations: T_s²1_λ = 1_λ + Δ(v²−v⁻²)T_s1_λ,
/// 1_λ1_λ′ = δ·1_λ, and T_s1_λ = 1_{sλ}T_s, per basis element.
pub fn suite_quadratic(module: &HeckeModule, threads: usize) -> Result<SuiteOutcome> {
    let d = module.datum();
    let rank = d.rank();
    let mut lams: Vec<TorusPoint> = module
        .basis_elements()
        .iter()
        .map(|ti| ti.lam.clone())
        .collect();
    lams.sort();
    lams.dedup();
    let lams = &lams;
    let failures = chunked_basis_failures(module, threads, |idx| {
        let mut fails = Vec::new();
        let v = ModuleVector::basis(idx);
        let own_lam = module.element(idx).lam.clone();
        for s in 0..rank {
            let proj = module.one_lambda(&own_lam, &v);
            let lhs = module.ts_act(s, &module.ts_act(s, &proj)?)?;
            let mut rhs = proj.clone();
            if module.delta(s, &own_lam) {
                rhs = rhs.add(&module.ts_act(s, &proj)?.scale(&Laurent::v2_minus_vinv2()));
            }
            if lhs != rhs {
                fails.push(format!("quadratic relation fails for s{} at {idx}", s + 1));
            }
        }
        for la in lams {
            for lb in lams {
                let ab = module.one_lambda(la, &module.one_lambda(lb, &v));
                let expect = if la == lb {
                    module.one_lambda(la, &v)
                } else {
                    ModuleVector::zero()
                };
                if ab != expect {
                    fails.push(format!("idempotent product fails at {idx}"));
                }
            }
            for s in 0..rank {
                let lhs = module.ts_act(s, &module.one_lambda(la, &v))?;
                let sla = act(d.simple_reflection(s), la);
                let rhs = module.one_lambda(&sla, &module.ts_act(s, &v)?);
                if lhs != rhs {
                    fails.push(format!(
                        "T_s1_λ ≠ 1_(sλ)T_s for s{} at {idx}",
                        s + 1
                    ));
                }
            }
        }
        Ok(fails)
    })?;
    let checks = module.dim() * (rank + lams.len() * (lams.len() + rank));
    Ok(SuiteOutcome { name: "quadratic", checks, failures })
}

/// Oracle equivalence: the direct action of T_w 1_λ equals the transported
/// blockwise action through (u, z) = decompose(w, λ), for every w, every λ
/// carried by the basis, and every basis element.
pub fn suite_oracle(module: &HeckeModule, threads: usize) -> Result<SuiteOutcome> {
    let d = module.datum();
    let w_all = d.weyl_generate();
    let mut lams: Vec<TorusPoint> = module
        .basis_elements()
        .iter()
        .map(|ti| ti.lam.clone())
        .collect();
    lams.sort();
    lams.dedup();
    // (w, λ) with its decomposition, hoisted out of the basis loop
    let cases: Vec<(WeylElt, TorusPoint, WeylElt, WeylElt)> = w_all
        .iter()
        .flat_map(|w| {
            lams.iter().map(move |lam| {
                let (u, z) = module.decompose_tw1lambda(w, lam);
                (w.clone(), lam.clone(), u, z)
            })
        })
        .collect();
    let cases = &cases;
    let failures = chunked_basis_failures(module, threads, |idx| {
        let mut fails = Vec::new();
        let v = ModuleVector::basis(idx);
        for (w, lam, u, z) in cases {
            let direct = module.tw_act(w, &module.one_lambda(lam, &v))?;
            let oracle = module.bullet_act(u, z, lam, &v)?;
            if direct != oracle {
                fails.push(format!(
                    "transport oracle differs from the direct action at basis {idx}, w={w:?}, λ={lam:?}"
                ));
            }
        }
        Ok(fails)
    })?;
    let checks = module.dim() * cases.len();
    Ok(SuiteOutcome { name: "oracle", checks, failures })
}

/// Bar operator contracts: B² = 1, B·T_s = T_s⁻¹·B, B·T_s⁻¹ = T_s·B, and
/// fixedness on block base points.
pub fn suite_bar(module: &HeckeModule, threads: usize) -> Result<SuiteOutcome> {
    let rank = module.datum().rank();
    let failures = chunked_basis_failures(module, threads, |idx| {
        let mut fails = Vec::new();
        let v = ModuleVector::basis(idx);
        let bv = bar_act(module, &v)?;
        for s in 0..rank {
            if bar_act(module, &module.ts_act(s, &v)?)? != module.ts_inv_act(s, &bv)? {
                fails.push(format!("B·T_{} ≠ T_{}⁻¹·B at {idx}", s + 1, s + 1));
            }
            if bar_act(module, &module.ts_inv_act(s, &v)?)? != module.ts_act(s, &bv)? {
                fails.push(format!("B·T_{}⁻¹ ≠ T_{}·B at {idx}", s + 1, s + 1));
            }
        }
        if bar_act(module, &bv)? != v {
            fails.push(format!("B² ≠ 1 at {idx}"));
        }
        if module.element(idx).u.is_identity() && bv != v {
            fails.push(format!("B does not fix the block base point {idx}"));
        }
        Ok(fails)
    })?;
    let checks = module.dim() * (2 * rank + 2);
    Ok(SuiteOutcome { name: "bar", checks, failures })
}

/// Canonical basis: bar-fixed, unitriangular with coefficients in v⁻¹ℤ[v⁻¹]
/// off the diagonal, and identical under a permuted processing order.
pub fn suite_canonical(module: &HeckeModule) -> Result<SuiteOutcome> {
    let mut failures = Vec::new();
    let table = canonical_basis(module, None, false)?;
    let table_permuted = canonical_basis(module, None, true)?;
    let mut checks = 0usize;
    for (&idx, hat) in &table.elements {
        checks += 1;
        if &bar_act(module, hat)? != hat {
            failures.push(format!("canonical element {idx} is not bar-fixed"));
        }
        if hat.coeff(idx) != Laurent::one() {
            failures.push(format!("canonical element {idx} has a nonunit diagonal"));
        }
        for (j, c) in hat.terms() {
            if j != idx && !c.in_vinv_zvinv() {
                failures.push(format!(
                    "canonical element {idx} has coefficient {c:?} at {j}"
                ));
            }
        }
        if table_permuted.elements.get(&idx) != Some(hat) {
            failures.push(format!("permuted recomputation differs at {idx}"));
        }
        if module.element(idx).u.is_identity() && hat != &ModuleVector::basis(idx) {
            failures.push(format!("block base point {idx} is not its own canonical element"));
        }
    }
    Ok(SuiteOutcome { name: "canonical", checks, failures })
}

/// v = 1 specialization: the specialized generator matrices square to the
/// identity and satisfy the braid relations, so they generate a W-action.
pub fn suite_v1(module: &HeckeModule) -> Result<SuiteOutcome> {
    let d = module.datum();
    let rank = d.rank();
    let n = module.dim();
    let mut failures = Vec::new();
    let mats: Vec<Vec<Vec<i64>>> = (0..rank)
        .map(|s| module.generator_matrix_v1(s))
        .collect::<Result<_>>()?;
    let id = int_mat_identity(n);
    let mut checks = 0usize;
    for (i, mi) in mats.iter().enumerate() {
        checks += 1;
        if int_mat_mul(mi, mi) != id {
            failures.push(format!("σ_{}² ≠ 1 at v = 1", i + 1));
        }
        for (j, mj) in mats.iter().enumerate().skip(i + 1) {
            checks += 1;
            let ord = d.coxeter_order(i, j);
            let prod = int_mat_mul(mi, mj);
            let mut p = id.clone();
            for _ in 0..ord {
                p = int_mat_mul(&p, &prod);
            }
            if p != id {
                failures.push(format!(
                    "braid({},{}) fails at v = 1",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    Ok(SuiteOutcome { name: "v1", checks, failures })
}

/// Sign recursions: E(sws, sλ) = E(w, λ) for all s, and E(ws, λ) = −E(w, λ)
/// when s commutes with w and lies in the little Weyl group of λ.
pub fn suite_signs(module: &HeckeModule) -> Result<SuiteOutcome> {
    let d = module.datum();
    let mut failures = Vec::new();
    let mut checks = 0usize;
    for idx in 0..module.dim() {
        let ti = module.element(idx);
        for (s_idx, s) in d.simple_reflections().iter().enumerate() {
            let sws = s.mul(&ti.w).mul(s);
            let slam = act(s, &ti.lam);
            let conj = module.index_of(&sws, &slam)?;
            checks += 1;
            if module.element(conj).sign != ti.sign {
                failures.push(format!("conjugation sign recursion fails at {idx}, s{}", s_idx + 1));
            }
            if s.mul(&ti.w) == ti.w.mul(s) && module.delta(s_idx, &ti.lam) {
                let ws = ti.w.mul(s);
                let shifted = module.index_of(&ws, &ti.lam)?;
                checks += 1;
                if module.element(shifted).sign != -ti.sign {
                    failures.push(format!(
                        "right-multiplication sign recursion fails at {idx}, s{}",
                        s_idx + 1
                    ));
                }
            }
        }
    }
    Ok(SuiteOutcome { name: "signs", checks, failures })
}

/// Block decomposition: the blocks partition the twisted-involution set and
/// (z, λ, u) ↦ (zu, λ) is a bijection onto it.
pub fn suite_bijection(module: &HeckeModule) -> Result<SuiteOutcome> {
    let d = module.datum();
    let mut failures = Vec::new();
    let blocks = enumerate_blocks(d, module.m(), module.denominator())?;
    let total: usize = blocks.iter().map(|b| b.members.len()).sum();
    let mut checks = 1usize;
    if total != module.dim() {
        failures.push(format!(
            "block sizes sum to {total}, expected {}",
            module.dim()
        ));
    }
    let mut seen = vec![false; module.dim()];
    for b in &blocks {
        for u in &b.members {
            checks += 1;
            match module.index_of(&b.z.mul(u), &b.lam) {
                Ok(idx) => {
                    if seen[idx] {
                        failures.push(format!("block map hits basis element {idx} twice"));
                    }
                    seen[idx] = true;
                }
                Err(_) => failures.push("block map leaves the basis".to_string()),
            }
        }
    }
    if !seen.iter().all(|&x| x) {
        failures.push("block map is not onto the basis".to_string());
    }
    Ok(SuiteOutcome { name: "bijection", checks, failures })
}

/// λ = 0 sector: the direct action restricted to the zero sector equals the
/// blockwise involution-module action of the single block there, which has
/// the full group as its little Weyl group and the trivial twist.
pub fn suite_lv_sector(module: &HeckeModule) -> Result<SuiteOutcome> {
    let d = module.datum();
    let zero = TorusPoint::zero(d.rank());
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let blocks = enumerate_blocks(d, module.m(), 1)?;
    if blocks.len() != 1 || !blocks[0].z.is_identity() {
        failures.push("zero sector does not form a single identity block".to_string());
        return Ok(SuiteOutcome { name: "lv-sector", checks: 1, failures });
    }
    let block = &blocks[0];
    let lw = module.little_weyl(&zero);
    for idx in 0..module.dim() {
        if module.element(idx).lam != zero {
            continue;
        }
        let v = ModuleVector::basis(idx);
        for s in 0..d.rank() {
            let sigma_idx = match lw.simple_index(&d.simple_coroot(s)) {
                Some(k) => k,
                None => {
                    failures.push(format!("simple coroot {s} missing at λ = 0"));
                    continue;
                }
            };
            checks += 1;
            let direct = module.ts_act(s, &v)?;
            let blockwise = module.circle_act(block, sigma_idx, &v)?;
            if direct != blockwise {
                failures.push(format!(
                    "zero-sector action differs from the block action at {idx}, s{}",
                    s + 1
                ));
            }
            // everything stays in the sector
            for (j, _) in direct.terms() {
                if module.element(j).lam != zero {
                    failures.push(format!("zero sector is not stable at {idx}"));
                }
            }
        }
    }
    Ok(SuiteOutcome { name: "lv-sector", checks, failures })
}

/// Runs the named suites (all of them for an empty list) and returns the
/// outcomes in execution order.
pub fn run_suites(
    module: &HeckeModule,
    names: &[String],
    threads: usize,
) -> Result<Vec<SuiteOutcome>> {
    let enabled = |n: &str| names.is_empty() || names.iter().any(|x| x == n);
    let mut out = Vec::new();
    if enabled("braid") {
        out.push(suite_braid(module, threads)?);
    }
    if enabled("quadratic") {
        out.push(suite_quadratic(module, threads)?);
    }
    if enabled("oracle") {
        out.push(suite_oracle(module, threads)?);
    }
    if enabled("bar") {
        out.push(suite_bar(module, threads)?);
    }
    if enabled("canonical") {
        out.push(suite_canonical(module)?);
    }
    if enabled("v1") {
        out.push(suite_v1(module)?);
    }
    if enabled("signs") {
        out.push(suite_signs(module)?);
    }
    if enabled("bijection") {
        out.push(suite_bijection(module)?);
    }
    if enabled("lv-sector") {
        out.push(suite_lv_sector(module)?);
    }
    Ok(out)
}
