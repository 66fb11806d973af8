//! Scalar types used throughout the crate: exact rationals, the field
//! with two elements, and cyclotomic fields `Q(ζ_n) = Q[t]/Φ_n(t)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

/// Exact rational scalar. All energies, coefficients and exponents in
/// this crate are `Rat`s unless a cyclotomic field is requested.
pub type Rat = BigRational;

/// What a coefficient field must provide. Blanket-implemented; both
/// [`Rat`] and [`Cyclotomic`] qualify.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn from_rat(r: &Rat) -> Self;
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Parse a rational written as `"num/den"` or a bare integer.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer {num:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid integer {den:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Canonical `"num/den"` form (always includes the denominator so round
/// trips are bit-exact).
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// gcd of two non-negative rationals: the generator of the subgroup of
/// `Q` generated by both.
pub fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    use num_integer::Integer;
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    // a = p/q, b = r/s: gcd = gcd(p*s, r*q) / (q*s)
    let num = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
    Rat::new(num, a.denom() * b.denom())
}

/// The field with two elements, written additively as {0, 1}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2(pub u8);

impl Gf2 {
    pub fn new(v: u8) -> Self {
        Gf2(v & 1)
    }
}

impl fmt::Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// xor is addition (and subtraction) in characteristic two
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // logical-and is the product in F₂
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Div for Gf2 {
    type Output = Gf2;
    fn div(self, rhs: Gf2) -> Gf2 {
        assert_eq!(rhs.0, 1, "division by zero in GF(2)");
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(1)
    }
}

impl Scalar for Gf2 {
    fn from_rat(r: &Rat) -> Self {
        // only 0 and ±1 ever arrive here
        if r.is_zero() {
            Gf2(0)
        } else {
            Gf2(1)
        }
    }
}

static CYCLOTOMIC_CACHE: Lazy<RwLock<HashMap<u64, Vec<Rat>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Coefficients (low degree first, monic) of the n-th cyclotomic
/// polynomial `Φ_n`, computed by repeatedly dividing `x^n - 1` by the
/// `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<Rat> {
    assert!(n >= 1);
    if let Some(p) = CYCLOTOMIC_CACHE.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut poly = vec![Rat::zero(); (n + 1) as usize];
    poly[0] = -Rat::one();
    poly[n as usize] = Rat::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(&poly, &phi_d);
        }
    }
    CYCLOTOMIC_CACHE.write().unwrap().insert(n, poly.clone());
    poly
}

fn poly_trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division of polynomials over Q; panics if the remainder is
/// nonzero (only used where divisibility is a theorem).
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let (q, r) = poly_div_rem(num, den);
    assert!(
        r.iter().all(Zero::is_zero),
        "polynomial division was not exact"
    );
    q
}

fn poly_div_rem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem: Vec<Rat> = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    if rem.len() - 1 < dd || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    while rem.len() > 1 || !rem[0].is_zero() {
        let rd = rem.len() - 1;
        if rd < dd {
            break;
        }
        let c = rem[rd].clone() / lead.clone();
        let shift = rd - dd;
        quot[shift] = c.clone();
        for i in 0..=dd {
            let t = rem[shift + i].clone() - c.clone() * den[i].clone();
            rem[shift + i] = t;
        }
        poly_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (quot, rem)
}

/// An element of `Q(ζ_N) = Q[t]/Φ_N(t)`, stored as a polynomial in `t`
/// of degree < deg Φ_N with rational coefficients. `t` is a primitive
/// N-th root of unity.
#[derive(Clone, PartialEq)]
pub struct Cyclotomic<const N: u64> {
    /// length = deg Φ_N, low degree first
    coeffs: Vec<Rat>,
}

/// The field used in the worked examples: `Q(ρ)` with `ρ` a primitive
/// cube root of unity, realized as `Q[t]/(t² + t + 1)`.
pub type Cyc3 = Cyclotomic<3>;

impl<const N: u64> Cyclotomic<N> {
    pub fn degree() -> usize {
        cyclotomic_polynomial(N).len() - 1
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        let d = Self::degree();
        if coeffs.len() > d {
            coeffs = reduce_mod_phi::<N>(&coeffs);
        }
        coeffs.resize(d, Rat::zero());
        Cyclotomic { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn from_rational(r: Rat) -> Self {
        let mut c = vec![Rat::zero(); Self::degree()];
        c[0] = r;
        Cyclotomic { coeffs: c }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    /// The distinguished primitive root `ζ_N` (the class of `t`).
    pub fn zeta() -> Self {
        let d = Self::degree();
        if d == 1 {
            // Φ_1 = t - 1, Φ_2 = t + 1
            let mut c = vec![Rat::zero()];
            c[0] = if N == 1 { Rat::one() } else { -Rat::one() };
            return Cyclotomic { coeffs: c };
        }
        let mut c = vec![Rat::zero(); d];
        c[1] = Rat::one();
        Cyclotomic { coeffs: c }
    }

    /// `ζ_N^k` for any integer k (negative allowed).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(N as i64) as u64;
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * Self::zeta();
        }
        acc
    }

    /// Rational part if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

fn reduce_mod_phi<const N: u64>(coeffs: &[Rat]) -> Vec<Rat> {
    let phi = cyclotomic_polynomial(N);
    let (_, r) = poly_div_rem(coeffs, &phi);
    r
}

impl<const N: u64> fmt::Display for Cyclotomic<N> {
    /// Polynomial-in-`t` form, e.g. `1+t` or `-1/2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = if c.is_one() && i > 0 {
                String::new()
            } else if (-c.clone()).is_one() && i > 0 {
                "-".to_string()
            } else if c.denom().is_one() {
                format!("{}", c.numer())
            } else {
                format!("{}/{}", c.numer(), c.denom())
            };
            let ts = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let sep = if !cs.is_empty() && !ts.is_empty() && cs != "-" {
                "*"
            } else {
                ""
            };
            parts.push(format!("{cs}{sep}{ts}"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join("+").replace("+-", "-"))
    }
}

impl<const N: u64> fmt::Debug for Cyclotomic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: u64> Add for Cyclotomic<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic { coeffs }
    }
}

impl<const N: u64> Sub for Cyclotomic<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic { coeffs }
    }
}

impl<const N: u64> Neg for Cyclotomic<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<const N: u64> Mul for Cyclotomic<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.coeffs.len();
        let mut prod = vec![Rat::zero(); 2 * d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] = &prod[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(reduce_mod_phi::<N>(&prod))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // division is inversion then product
impl<const N: u64> Div for Cyclotomic<N> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs
            .extended_gcd_inverse()
            .expect("division by zero in cyclotomic field");
        self * inv
    }
}

impl<const N: u64> Cyclotomic<N> {
    /// Inverse via the extended Euclidean algorithm in Q[t] mod Φ_N.
    fn extended_gcd_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_polynomial(N);
        // Maintain r0 = phi, r1 = self, with s-coefficients tracking
        // combinations of self only: r_i ≡ s_i * self (mod phi).
        let mut r0 = phi;
        let mut r1 = self.coeffs.clone();
        poly_trim(&mut r1);
        let mut s0 = vec![Rat::zero()];
        let mut s1 = vec![Rat::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_div_rem(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let s = poly_sub(&s0, &qs);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is the gcd; Φ_N is irreducible so r0 is a nonzero constant.
        assert_eq!(r0.len(), 1, "cyclotomic modulus must be irreducible");
        let c = r0[0].clone();
        let inv_coeffs: Vec<Rat> = s0.iter().map(|x| x / c.clone()).collect();
        Some(Self::from_coeffs(inv_coeffs))
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
        *slot = x - y;
    }
    poly_trim(&mut out);
    out
}

impl<const N: u64> Zero for Cyclotomic<N> {
    fn zero() -> Self {
        Cyclotomic {
            coeffs: vec![Rat::zero(); Self::degree()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<const N: u64> One for Cyclotomic<N> {
    fn one() -> Self {
        Self::from_rational(Rat::one())
    }
}

impl<const N: u64> Scalar for Cyclotomic<N> {
    fn from_rat(r: &Rat) -> Self {
        Self::from_rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        // Φ_1 = t - 1, Φ_2 = t + 1, Φ_3 = t² + t + 1, Φ_4 = t² + 1
        assert_eq!(cyclotomic_polynomial(1), vec![rat(-1, 1), rat(1, 1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(
            cyclotomic_polynomial(3),
            vec![rat(1, 1), rat(1, 1), rat(1, 1)]
        );
        assert_eq!(
            cyclotomic_polynomial(4),
            vec![rat(1, 1), rat(0, 1), rat(1, 1)]
        );
        // Φ_6 = t² - t + 1
        assert_eq!(
            cyclotomic_polynomial(6),
            vec![rat(1, 1), rat(-1, 1), rat(1, 1)]
        );
    }

    #[test]
    fn cube_root_relations() {
        let rho = Cyc3::zeta();
        assert_eq!(rho.clone() * rho.clone() * rho.clone(), Cyc3::one());
        // 1 + ρ + ρ² = 0
        let sum = Cyc3::one() + rho.clone() + rho.clone() * rho.clone();
        assert!(sum.is_zero());
        assert_eq!(Cyc3::zeta_pow(-1), rho.clone() * rho);
    }

    #[test]
    fn cyclotomic_inverse() {
        let x = Cyc3::from_coeffs(vec![rat(2, 1), rat(-3, 1)]);
        let inv = x.clone().inverse().unwrap();
        assert_eq!(x * inv, Cyc3::one());
        assert!(Cyc3::zero().inverse().is_none());
    }

    #[test]
    fn rat_parsing_round_trip() {
        let r = rat_from_str("-22/7").unwrap();
        assert_eq!(rat_to_string(&r), "-22/7");
        assert_eq!(rat_from_str("5").unwrap(), rat(5, 1));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(rat_gcd(&rat(2, 3), &rat(1, 2)), rat(1, 6));
        assert_eq!(rat_gcd(&rat(0, 1), &rat(3, 4)), rat(3, 4));
        assert_eq!(rat_gcd(&rat(4, 6), &rat(2, 6)), rat(1, 3));
    }
}
