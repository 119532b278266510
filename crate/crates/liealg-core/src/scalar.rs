//! Exact arithmetic over the Gaussian rationals ℚ(i).
//!
//! Every quantity in this crate — structure constants, basis-change matrices,
//! cocycle entries — is a [`GaussianRational`]: a complex number whose real and
//! imaginary parts are arbitrary-precision rationals. There is no floating
//! point anywhere; equality is always structural equality of canonical forms.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational number in canonical form: reduced, denominator positive,
/// zero stored as 0/1. Canonicalization happens at construction, so `==` is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator`, reducing to canonical form.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, Error> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Canonical-form predicate: reduced fraction with positive denominator.
    pub fn is_canonical(&self) -> bool {
        self.0.denom().is_positive()
            && BigRational::new(self.0.numer().clone(), self.0.denom().clone()) == self.0
    }

    fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A Gaussian rational a + b·i with exact rational components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(Rational::from_integer(n), Rational::zero())
    }

    /// n·i for integer n.
    pub fn int_i(n: i64) -> Self {
        GaussianRational::new(Rational::zero(), Rational::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self, Error> {
        Ok(GaussianRational::new(Rational::new(num, den)?, Rational::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re == Rational::one()
    }

    pub fn is_canonical(&self) -> bool {
        self.re.is_canonical() && self.im.is_canonical()
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self, Error> {
        // 1/(a+bi) = (a-bi) / (a²+b²)
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let scale = norm.inverse()?;
        Ok(GaussianRational::new(&self.re * &scale, -&(&self.im * &scale)))
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        GaussianRational::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

/// Exact division. Panics on a zero divisor; use [`GaussianRational::inverse`]
/// where the divisor is not known to be nonzero.
impl Div for &GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

macro_rules! gauss_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

gauss_owned_binop!(Add, add);
gauss_owned_binop!(Sub, sub);
gauss_owned_binop!(Mul, mul);
gauss_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

/// Canonical token form, one of `a`, `a/b`, `i`, `-i`, `c/d*i`, `a/b+c/d*i`,
/// `a/b-c/d*i` — never any whitespace. Parsing this form back is exact.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return if self.im == Rational::one() {
                write!(f, "i")
            } else if self.im == -Rational::one() {
                write!(f, "-i")
            } else {
                write!(f, "{}*i", self.im)
            };
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

fn parse_rational(token: &str) -> Result<Rational, Error> {
    let bad = || Error::ScalarParse(token.to_string());
    match token.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num).map_err(|_| bad())?;
            let den = BigInt::from_str(den).map_err(|_| bad())?;
            if den.is_negative() {
                return Err(bad());
            }
            Rational::new(num, den)
        }
        None => Ok(Rational::from_integer(BigInt::from_str(token).map_err(|_| bad())?)),
    }
}

/// Parses an imaginary token such as `i`, `-i`, `3*i`, `-5/2*i`.
fn parse_imaginary(token: &str) -> Result<Rational, Error> {
    let bad = || Error::ScalarParse(token.to_string());
    let body = token.strip_suffix('i').ok_or_else(bad)?;
    match body {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        _ => parse_rational(body.strip_suffix('*').unwrap_or(body)),
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ScalarParse(s.to_string());
        if s.is_empty() || s.chars().any(|c| c.is_whitespace()) {
            return Err(bad());
        }
        // Any sign past the first character separates the real and imaginary
        // parts: rational tokens carry a sign only at the front.
        if let Some(pos) = s[1..].find(['+', '-']).map(|p| p + 1) {
            let re = parse_rational(&s[..pos]).map_err(|_| bad())?;
            let im = parse_imaginary(&s[pos..]).map_err(|_| bad())?;
            Ok(GaussianRational::new(re, im))
        } else if s.ends_with('i') {
            Ok(GaussianRational::new(Rational::zero(), parse_imaginary(s).map_err(|_| bad())?))
        } else {
            Ok(GaussianRational::new(parse_rational(s).map_err(|_| bad())?, Rational::zero()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(Rational::new(re.0, re.1).unwrap(), Rational::new(im.0, im.1).unwrap())
    }

    #[test]
    fn addition_examples() {
        assert_eq!(g((1, 2), (0, 1)) + g((1, 3), (0, 1)), g((5, 6), (0, 1)));
        assert_eq!(GaussianRational::i() + GaussianRational::int_i(-1), GaussianRational::zero());
        assert_eq!(g((2, 3), (1, 5)) + g((1, 3), (4, 5)), g((1, 1), (1, 1)));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(GaussianRational::i() * GaussianRational::i(), GaussianRational::from_int(-1));
        assert_eq!(GaussianRational::i() * GaussianRational::int_i(-2), GaussianRational::from_int(2));
        assert_eq!(g((1, 2), (1, 2)) * g((1, 2), (-1, 2)), g((1, 2), (0, 1)));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(GaussianRational::one().inverse().unwrap(), GaussianRational::one());
        assert_eq!(GaussianRational::i().inverse().unwrap(), GaussianRational::int_i(-1));
        assert_eq!(
            g((3, 4), (0, 1)).inverse().unwrap(),
            g((4, 3), (0, 1))
        );
        assert!(matches!(GaussianRational::zero().inverse(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_round_trips_fixed_cases() {
        for s in ["0", "1", "-1", "5/6", "-5/6", "i", "-i", "2*i", "-3/4*i", "1+1*i", "1-1*i", "-1/2+3/4*i", "-1/2-3/4*i"] {
            let v: GaussianRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s, "canonical form should match input");
        }
        // Accepted non-canonical spellings.
        assert_eq!("1+i".parse::<GaussianRational>().unwrap(), g((1, 1), (1, 1)));
        assert_eq!("1-i".parse::<GaussianRational>().unwrap(), g((1, 1), (-1, 1)));
        assert_eq!("3i".parse::<GaussianRational>().unwrap(), GaussianRational::int_i(3));
    }

    #[test]
    fn parse_rejects_malformed() {
        for s in ["", " 1", "1 ", "1//2", "i*2", "1+", "1/0", "x", "1+2", "--i", "1/-2"] {
            assert!(s.parse::<GaussianRational>().is_err(), "should reject {s:?}");
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..40).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
        (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &GaussianRational::zero(), a.clone());
            prop_assert_eq!(&a * &GaussianRational::one(), a.clone());
        }

        #[test]
        fn inverse_involution(a in arb_gaussian()) {
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(&a * &inv, GaussianRational::one());
                prop_assert_eq!(inv.inverse().unwrap(), a);
            }
        }

        #[test]
        fn operations_stay_canonical(a in arb_gaussian(), b in arb_gaussian()) {
            prop_assert!((&a + &b).is_canonical());
            prop_assert!((&a - &b).is_canonical());
            prop_assert!((&a * &b).is_canonical());
            prop_assert!((-&a).is_canonical());
            if !b.is_zero() {
                prop_assert!((&a / &b).is_canonical());
            }
        }

        #[test]
        fn display_round_trip(a in arb_gaussian()) {
            let text = a.to_string();
            prop_assert!(!text.contains(char::is_whitespace));
            prop_assert_eq!(text.parse::<GaussianRational>().unwrap(), a);
        }
    }
}
