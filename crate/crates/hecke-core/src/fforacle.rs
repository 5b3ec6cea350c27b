//! Brute-force verification of two counting identities over small quadratic
//! field extensions.
//!
//! The field F_{q²} is realized as F_q[x]/(x² − r) with r the least
//! quadratic non-residue mod q.  The two identities count solutions d of
//!
//!   (e)  d^{q+1}·a − a⁻¹ = b   over a ≠ 0 with a^q + a = 0 and b^q + b = 0,
//!   (f)  −a′·d^q + a′⁻¹·d = b  over a′ with a′^{q+1} = 1 and b^q + b = 0.
//!
//! For (e) the count is 1 exactly when b = −a⁻¹ (at q = 3 this coincides
//! with b = a, since there a² = −1 for every admissible a) and 1 + q
//! otherwise; for (f) it is always q.

use crate::{Error, Result};

/// Configuration cap on the prime.
pub const MAX_PRIME: u64 = 101;

/// An element of F_{q²} = F_q[x]/(x² − r), as a pair (constant, x-part).
pub type GFElt = (u64, u64);

/// The quadratic extension field F_{q²}.
pub struct GF {
    q: u64,
    /// The least quadratic non-residue mod q; the modulus is x² − r.
    r: u64,
}

fn is_odd_prime(q: u64) -> bool {
    if q < 3 || q.is_multiple_of(2) {
        return false;
    }
    let mut k = 3;
    while k * k <= q {
        if q.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Builds F_{q²} for an odd prime q ≤ the configured cap.
pub fn gf_build(q: u64) -> Result<GF> {
    if !is_odd_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    if q > MAX_PRIME {
        return Err(Error::PrimeTooLarge(q, MAX_PRIME));
    }
    let r = (2..q)
        .find(|&r| pow_mod(r, (q - 1) / 2, q) != 1)
        .expect("an odd prime field has a quadratic non-residue");
    Ok(GF { q, r })
}

impl GF {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus_nonresidue(&self) -> u64 {
        self.r
    }

    /// Number of field elements, q².
    pub fn size(&self) -> u64 {
        self.q * self.q
    }

    pub fn zero(&self) -> GFElt {
        (0, 0)
    }

    pub fn one(&self) -> GFElt {
        (1, 0)
    }

    pub fn from_base(&self, c: u64) -> GFElt {
        (c % self.q, 0)
    }

    pub fn is_zero(&self, a: GFElt) -> bool {
        a == (0, 0)
    }

    /// All elements, in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = GFElt> + '_ {
        (0..self.q).flat_map(move |c0| (0..self.q).map(move |c1| (c0, c1)))
    }

    pub fn add(&self, a: GFElt, b: GFElt) -> GFElt {
        ((a.0 + b.0) % self.q, (a.1 + b.1) % self.q)
    }

    pub fn neg(&self, a: GFElt) -> GFElt {
        ((self.q - a.0) % self.q, (self.q - a.1) % self.q)
    }

    pub fn sub(&self, a: GFElt, b: GFElt) -> GFElt {
        self.add(a, self.neg(b))
    }

    /// (a₀ + a₁x)(b₀ + b₁x) with x² = r.
    pub fn mul(&self, a: GFElt, b: GFElt) -> GFElt {
        let q = self.q;
        let c0 = (a.0 * b.0 + a.1 * b.1 % q * self.r) % q;
        let c1 = (a.0 * b.1 + a.1 * b.0) % q;
        (c0, c1)
    }

    pub fn pow(&self, a: GFElt, mut exp: u64) -> GFElt {
        let mut acc = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// The inverse of a nonzero element, via the norm to the prime field:
    /// (a₀ + a₁x)⁻¹ = (a₀ − a₁x) / (a₀² − r·a₁²).
    pub fn inv(&self, a: GFElt) -> GFElt {
        assert!(!self.is_zero(a), "inverse of zero");
        let q = self.q;
        let norm = (a.0 * a.0 % q + q * q - self.r * (a.1 * a.1 % q) % q) % q;
        let norm_inv = pow_mod(norm, q - 2, q);
        let conj = (a.0, (q - a.1) % q);
        self.mul(conj, (norm_inv, 0))
    }

    /// The Frobenius x ↦ x^q.
    pub fn frobenius(&self, a: GFElt) -> GFElt {
        self.pow(a, self.q)
    }

    /// True when a^q + a = 0.
    pub fn is_trace_zero(&self, a: GFElt) -> bool {
        self.is_zero(self.add(self.frobenius(a), a))
    }

    /// True when a^{q+1} = 1.
    pub fn is_norm_one(&self, a: GFElt) -> bool {
        self.pow(a, self.q + 1) == self.one()
    }
}

/// First counting identity: for a ≠ 0 with a^q + a = 0 and b with
/// b^q + b = 0, the equation d^{q+1}·a − a⁻¹ = b has exactly one solution
/// when b = −a⁻¹ and 1 + q solutions otherwise.
///
/// Returns (brute-force count, predicted count).
pub fn count_identity_e(f: &GF, a: GFElt, b: GFElt) -> Result<(u64, u64)> {
    if f.is_zero(a) || !f.is_trace_zero(a) {
        return Err(Error::FieldPrecondition(format!(
            "a = {a:?} must be nonzero with a^q + a = 0"
        )));
    }
    if !f.is_trace_zero(b) {
        return Err(Error::FieldPrecondition(format!(
            "b = {b:?} must satisfy b^q + b = 0"
        )));
    }
    let a_inv = f.inv(a);
    let count = f
        .elements()
        .filter(|&d| f.sub(f.mul(f.pow(d, f.q() + 1), a), a_inv) == b)
        .count() as u64;
    let expected = if b == f.neg(a_inv) { 1 } else { 1 + f.q() };
    Ok((count, expected))
}

/// Second counting identity: for a′ with a′^{q+1} = 1 and b with
/// b^q + b = 0, the equation −a′·d^q + a′⁻¹·d = b has exactly q solutions.
///
/// Returns (brute-force count, predicted count).
pub fn count_identity_f(f: &GF, a_prime: GFElt, b: GFElt) -> Result<(u64, u64)> {
    if !f.is_norm_one(a_prime) {
        return Err(Error::FieldPrecondition(format!(
            "a′ = {a_prime:?} must satisfy a′^(q+1) = 1"
        )));
    }
    if !f.is_trace_zero(b) {
        return Err(Error::FieldPrecondition(format!(
            "b = {b:?} must satisfy b^q + b = 0"
        )));
    }
    let a_inv = f.inv(a_prime);
    let count = f
        .elements()
        .filter(|&d| {
            let lhs = f.add(f.neg(f.mul(a_prime, f.frobenius(d))), f.mul(a_inv, d));
            lhs == b
        })
        .count() as u64;
    Ok((count, f.q()))
}

/// One row of the exhaustive check: which identity, the parameters, and the
/// two counts.
#[derive(Debug, Clone)]
pub struct CheckRow {
    pub identity: char,
    pub a: GFElt,
    pub b: GFElt,
    pub count: u64,
    pub expected: u64,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.count == self.expected
    }
}

/// Runs both identities over every admissible parameter pair.
pub fn exhaustive_check(f: &GF) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let trace_zero: Vec<GFElt> = f.elements().filter(|&x| f.is_trace_zero(x)).collect();
    let norm_one: Vec<GFElt> = f.elements().filter(|&x| f.is_norm_one(x)).collect();
    for &a in trace_zero.iter().filter(|&&x| !f.is_zero(x)) {
        for &b in &trace_zero {
            let (count, expected) = count_identity_e(f, a, b)?;
            rows.push(CheckRow { identity: 'e', a, b, count, expected });
        }
    }
    for &a in &norm_one {
        for &b in &trace_zero {
            let (count, expected) = count_identity_f(f, a, b)?;
            rows.push(CheckRow { identity: 'f', a, b, count, expected });
        }
    }
    Ok(rows)
}
