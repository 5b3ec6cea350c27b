//! Exact coefficient arithmetic.
//!
//! Three scalar types are used throughout the crate: arbitrary-precision
//! rationals, rationals reduced mod 1 (the coefficients of torus points),
//! and Laurent polynomials in `v` with integer coefficients.  The Laurent
//! ring carries the bar involution `v ↦ v⁻¹` and the evaluation at `v = 1`.
//!
//! Laurent coefficients are machine integers with checked arithmetic: the
//! degrees arising here are bounded by word lengths in the Weyl group, and
//! an overflow is an internal capacity failure, never silent wraparound.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p/q`, keeping the denominator even when it is 1.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a `p/q` string; a bare integer is read as `p/1`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// A rational mod 1, kept in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMod1(Rational);

impl RatMod1 {
    pub fn new(r: Rational) -> Self {
        RatMod1(r.clone() - r.floor())
    }

    pub fn zero() -> Self {
        RatMod1(Rational::zero())
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(rat(num, den))
    }

    /// The representative in `[0, 1)`.
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplies by an integer, reducing mod 1.
    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.0.clone() * rat(k, 1))
    }
}

impl Add for RatMod1 {
    type Output = RatMod1;
    fn add(self, rhs: RatMod1) -> RatMod1 {
        RatMod1::new(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a RatMod1> for &'a RatMod1 {
    type Output = RatMod1;
    fn add(self, rhs: &'a RatMod1) -> RatMod1 {
        RatMod1::new(self.0.clone() + rhs.0.clone())
    }
}

impl Neg for RatMod1 {
    type Output = RatMod1;
    fn neg(self) -> RatMod1 {
        RatMod1::new(-self.0)
    }
}

impl fmt::Debug for RatMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational_string(&self.0))
    }
}

impl fmt::Display for RatMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational_string(&self.0))
    }
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

/// A Laurent polynomial in `v` with integer coefficients.
///
/// Stored densely as the coefficient run starting at the lowest exponent.
/// The zero polynomial has an empty run; otherwise the first and last
/// stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    lo: i64,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Laurent::monomial(1, 0)
    }

    /// The monomial `c·v^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Laurent { lo: k, coeffs: vec![c] }.normalized()
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut out = Laurent::zero();
        for &(c, k) in terms {
            out += &Laurent::monomial(c, k);
        }
        out
    }

    /// `v + v⁻¹`.
    pub fn v_plus_vinv() -> Self {
        Laurent::from_terms(&[(1, 1), (1, -1)])
    }

    /// `v − v⁻¹`.
    pub fn v_minus_vinv() -> Self {
        Laurent::from_terms(&[(1, 1), (-1, -1)])
    }

    /// `v² − v⁻²`.
    pub fn v2_minus_vinv2() -> Self {
        Laurent::from_terms(&[(1, 2), (-1, -2)])
    }

    /// `v² − v⁻² − 1`.
    pub fn v2_minus_vinv2_minus_one() -> Self {
        Laurent::from_terms(&[(1, 2), (-1, -2), (-1, 0)])
    }

    fn normalized(mut self) -> Self {
        while let Some(&last) = self.coeffs.last() {
            if last != 0 {
                break;
            }
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.lo += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn lowest_exponent(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn highest_exponent(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.lo + self.coeffs.len() as i64 - 1
        }
    }

    /// The coefficient of `v^k`.
    pub fn coeff(&self, k: i64) -> i64 {
        if k < self.lo {
            return 0;
        }
        let idx = (k - self.lo) as usize;
        self.coeffs.get(idx).copied().unwrap_or(0)
    }

    /// Iterates over `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.lo + i as i64, c))
    }

    /// The bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        let mut coeffs: Vec<i64> = self.coeffs.clone();
        coeffs.reverse();
        Laurent { lo: -self.highest_exponent(), coeffs }.normalized()
    }

    /// Evaluation at `v = 1`, i.e. the sum of the coefficients.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().fold(0, |acc, &c| checked_add(acc, c))
    }

    /// `c·self` for an integer `c`.
    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|&a| checked_mul(a, c)).collect(),
        }
    }

    /// The part of the polynomial with exponents `< 0`.
    pub fn negative_part(&self) -> Self {
        Laurent::from_terms(&self.terms().filter(|&(k, _)| k < 0).map(|(k, c)| (c, k)).collect::<Vec<_>>())
    }

    /// True when every exponent is `≤ -1`, i.e. the polynomial lies in v⁻¹ℤ[v⁻¹].
    pub fn in_vinv_zvinv(&self) -> bool {
        self.is_zero() || self.highest_exponent() <= -1
    }
}

impl Add<&Laurent> for Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self;
        out += rhs;
        out
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.highest_exponent().max(rhs.highest_exponent());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - lo) as usize] = c;
        }
        for (k, c) in rhs.terms() {
            let slot = &mut coeffs[(k - lo) as usize];
            *slot = checked_add(*slot, c);
        }
        *self = Laurent { lo, coeffs }.normalized();
    }
}

impl Sub<&Laurent> for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs.clone())
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let lo = self.lo + rhs.lo;
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let slot = &mut coeffs[i + j];
                *slot = checked_add(*slot, checked_mul(a, b));
            }
        }
        Laurent { lo, coeffs }.normalized()
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "v")?,
                1 => write!(f, "{a}v")?,
                _ if a == 1 => write!(f, "v^{k}")?,
                _ => write!(f, "{a}v^{k}")?,
            }
        }
        Ok(())
    }
}

/// Exact product of Laurent polynomials.
pub fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    a * b
}

/// The bar involution on Laurent polynomials.
pub fn laurent_bar(a: &Laurent) -> Laurent {
    a.bar()
}

/// Evaluation at `v = 1`.
pub fn laurent_eval_one(a: &Laurent) -> i64 {
    a.eval_one()
}
