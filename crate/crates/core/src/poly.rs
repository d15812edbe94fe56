//! Exact univariate polynomials over `Z` and `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Integer polynomial with coefficients in ascending degree; trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(1)`, the sum of the coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Coefficients as decimal strings, the JSON wire form.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(coeffs: &[String]) -> Option<Self> {
        coeffs.iter().map(|c| c.parse::<BigInt>().ok()).collect::<Option<Vec<_>>>().map(IntPolynomial::new)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        IntPolynomial::from_decimal_strings(&raw).ok_or_else(|| serde::de::Error::custom("invalid integer coefficient"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Rational polynomial with coefficients in ascending degree, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        RatPolynomial::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPolynomial::new(vec![c])
    }

    /// The binomial polynomial `C(x + shift, m) = (x+shift)(x+shift-1)…(x+shift-m+1)/m!`.
    pub fn binomial(shift: i64, m: usize) -> Self {
        let mut p = RatPolynomial::constant(BigRational::one());
        for t in 0..m as i64 {
            let factor = RatPolynomial::from_i64s(&[shift - t, 1]);
            p = &p * &factor;
        }
        let fact: BigInt = (1..=m as u64).map(BigInt::from).product();
        p.scale(&BigRational::new(BigInt::one(), fact))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    #[must_use]
    pub fn scale(&self, c: &BigRational) -> Self {
        RatPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    #[must_use]
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RatPolynomial::constant(BigRational::one()), |acc, _| &acc * self)
    }

    #[must_use]
    pub fn derivative(&self) -> Self {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    #[must_use]
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().expect("nonempty").clone() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (RatPolynomial::new(quot), RatPolynomial::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPolynomial) -> RatPolynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots as `p`, each simple.
    pub fn squarefree_part(&self) -> RatPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sturm sequence `p, p', -rem(p, p'), …` ending at the last nonzero term.
    pub fn sturm_sequence(&self) -> Vec<RatPolynomial> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let len = seq.len();
            let (_, r) = seq[len - 2].div_rem(&seq[len - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }

    /// Number of distinct real roots, from the sign changes of the Sturm
    /// sequence at `-∞` and `+∞`.
    pub fn count_distinct_real_roots(&self) -> usize {
        let seq = self.sturm_sequence();
        let at = |negative_infinity: bool| {
            let signs: Vec<i8> = seq
                .iter()
                .filter_map(|p| {
                    let lead = p.leading()?;
                    let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
                    if negative_infinity && p.degree().unwrap_or(0) % 2 == 1 {
                        s = -s;
                    }
                    Some(s)
                })
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        at(true) - at(false)
    }

    /// Integer coefficients, when every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "RatPolynomial[{}]", parts.join(", "))
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Binomial coefficient `C(n, k)` for nonnegative `n`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display_and_trim() {
        let p = IntPolynomial::from_i64s(&[1, 4, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "1 + 4x + x^2");
        assert!(p.is_palindromic());
        assert_eq!(IntPolynomial::from_i64s(&[0, -2, 0, 3]).to_string(), "-2x + 3x^3");
        assert_eq!(IntPolynomial::from_i64s(&[0]).to_string(), "0");
    }

    #[test]
    fn binomial_polynomial_values() {
        let p = RatPolynomial::binomial(2, 2);
        for k in 0..6 {
            assert_eq!(p.eval(&q(k)), q((k + 2) * (k + 1) / 2));
        }
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(1, 2), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn sturm_counts() {
        // x^2 + 4x + 1: discriminant 12.
        assert_eq!(RatPolynomial::from_i64s(&[1, 4, 1]).count_distinct_real_roots(), 2);
        assert_eq!(RatPolynomial::from_i64s(&[1, 0, 1]).count_distinct_real_roots(), 0);
        // (x-1)^2 (x+2): two distinct roots.
        let p = RatPolynomial::from_i64s(&[2, -3, 0, 1]);
        assert_eq!(p.count_distinct_real_roots(), 2);
        assert_eq!(p.squarefree_part().degree(), Some(2));
        assert_eq!(RatPolynomial::from_i64s(&[5]).count_distinct_real_roots(), 0);
    }

    #[test]
    fn division_identity() {
        let a = RatPolynomial::from_i64s(&[3, 0, -2, 7, 1]);
        let b = RatPolynomial::from_i64s(&[1, 2, 3]);
        let (qt, r) = a.div_rem(&b);
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(&(&qt * &b) + &r, a);
    }

    proptest! {
        #[test]
        fn product_of_linear_factors_has_all_roots(roots in proptest::collection::btree_set(-20i64..20, 1..7)) {
            let p = roots.iter().fold(RatPolynomial::from_i64s(&[1]), |acc, &r| &acc * &RatPolynomial::from_i64s(&[-r, 1]));
            prop_assert_eq!(p.count_distinct_real_roots(), roots.len());
            let squared = &p * &p;
            prop_assert_eq!(squared.squarefree_part().degree(), p.degree());
        }

        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-9i64..9, 1..6), b in proptest::collection::vec(-9i64..9, 1..6)) {
            let (a, b) = (RatPolynomial::from_i64s(&a), RatPolynomial::from_i64s(&b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(a.div_rem(&g).1.is_zero());
            prop_assert!(b.div_rem(&g).1.is_zero());
        }
    }
}
