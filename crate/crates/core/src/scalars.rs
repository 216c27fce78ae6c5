//! Exact scalars: rationals and the quadratic extension `Q(eps)` with
//! `eps^2 + eps + 1 = 0`.
//!
//! [`Rational`] keeps small values in machine words and promotes to
//! arbitrary precision only when a result no longer fits, so the common
//! case of small integer structure constants stays cheap.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone)]
enum Repr {
    /// Reduced, denominator > 0.
    Small(i64, i64),
    /// Only used when numerator or denominator does not fit in `i64`.
    Big(Box<BigRational>),
}

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone)]
pub struct Rational(Repr);

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match &self.0 {
            Repr::Small(0, _) => Err(Error::DivisionByZero),
            Repr::Small(n, d) => Ok(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Ok(Self::from_big(r.recip())),
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) => rhs.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Self::zero(),
            (Repr::Small(1, 1), _) => rhs.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Self::from_i128(-(*n as i128), *d as i128),
            Repr::Big(r) => Self::from_big(-(**r).clone()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            // canonical form: a value representable as Small is never Big
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => r.hash(state),
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p/q` or `p` at the start of `s`; returns the value and the
/// number of bytes consumed.
pub(crate) fn parse_rational_prefix(s: &str, offset: usize) -> Result<(Rational, usize)> {
    let bytes = s.as_bytes();
    let mut i = 0;
    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
        i += 1;
    }
    let digits_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == digits_start {
        return Err(Error::parse(offset + i, "expected digits"));
    }
    let num: BigInt = s[..i]
        .trim_start_matches('+')
        .parse()
        .map_err(|_| Error::parse(offset, "bad integer"))?;
    let mut den = BigInt::one();
    if i < bytes.len() && bytes[i] == b'/' {
        i += 1;
        let ds = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == ds {
            return Err(Error::parse(offset + i, "expected denominator digits"));
        }
        den = s[ds..i]
            .parse()
            .map_err(|_| Error::parse(offset + ds, "bad denominator"))?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
    }
    Ok((Rational::from_big(BigRational::new(num, den)), i))
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (r, used) = parse_rational_prefix(s, 0)?;
        if used != s.len() {
            return Err(Error::parse(used, "trailing characters after rational"));
        }
        Ok(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident, $ty:ty) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                self.$imp(rhs)
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$imp(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$imp(rhs)
            }
        }
    };
}

impl Rational {
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
}

forward_binop!(Add, add, add_ref, Rational);
forward_binop!(Sub, sub, sub_ref, Rational);
forward_binop!(Mul, mul, mul_ref, Rational);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

/// An element `a + b*eps` of `Q(eps)`, `eps` a primitive cube root of unity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QEps {
    pub a: Rational,
    pub b: Rational,
}

impl QEps {
    pub fn new(a: Rational, b: Rational) -> Self {
        QEps { a, b }
    }

    pub fn zero() -> Self {
        QEps::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn eps() -> Self {
        QEps { a: Rational::zero(), b: Rational::one() }
    }

    pub fn from_rational(a: Rational) -> Self {
        QEps { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// `num/den` as a rational scalar. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den).expect("nonzero denominator"))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `N(a + b eps) = a^2 - ab + b^2`; zero only at zero.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a - &self.a * &self.b) + &(&self.b * &self.b)
    }

    /// Galois conjugate `a + b eps^2 = (a - b) - b eps`.
    pub fn conj(&self) -> Self {
        QEps { a: &self.a - &self.b, b: -&self.b }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Self::from_rational(self.a.inv()?));
        }
        let n = self.norm().inv()?;
        let c = self.conj();
        Ok(QEps { a: &c.a * &n, b: &c.b * &n })
    }

    /// Sign of the leading nonzero component; used to print `- c` instead of `+ -c`.
    pub fn is_negative(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_negative()
        } else {
            self.a.is_negative()
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        QEps { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        QEps { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.b.is_zero() && rhs.b.is_zero() {
            return Self::from_rational(&self.a * &rhs.a);
        }
        // eps^2 = -1 - eps
        let bb = &self.b * &rhs.b;
        QEps {
            a: &(&self.a * &rhs.a) - &bb,
            b: &(&(&self.a * &rhs.b) + &(&self.b * &rhs.a)) - &bb,
        }
    }

    /// Parses a coefficient at the start of `s`: `p/q`, `p/q+r/sE`,
    /// `p/q-r/sE` or `r/sE`. Returns the value and bytes consumed.
    pub(crate) fn parse_prefix(s: &str, offset: usize) -> Result<(QEps, usize)> {
        let (first, mut used) = parse_rational_prefix(s, offset)?;
        let bytes = s.as_bytes();
        if used < bytes.len() && bytes[used] == b'E' {
            return Ok((QEps::new(Rational::zero(), first), used + 1));
        }
        if used < bytes.len() && (bytes[used] == b'+' || bytes[used] == b'-') {
            if let Ok((second, n)) = parse_rational_prefix(&s[used..], offset + used) {
                if used + n < bytes.len() && bytes[used + n] == b'E' {
                    used += n + 1;
                    return Ok((QEps::new(first, second), used));
                }
            }
        }
        Ok((QEps::from_rational(first), used))
    }
}

forward_binop!(Add, add, add_ref, QEps);
forward_binop!(Sub, sub, sub_ref, QEps);
forward_binop!(Mul, mul, mul_ref, QEps);

impl Neg for QEps {
    type Output = QEps;
    fn neg(self) -> QEps {
        QEps { a: -self.a, b: -self.b }
    }
}

impl Neg for &QEps {
    type Output = QEps;
    fn neg(self) -> QEps {
        QEps { a: -&self.a, b: -&self.b }
    }
}

impl AddAssign<&QEps> for QEps {
    fn add_assign(&mut self, rhs: &QEps) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&QEps> for QEps {
    fn sub_assign(&mut self, rhs: &QEps) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&QEps> for QEps {
    fn mul_assign(&mut self, rhs: &QEps) {
        *self = self.mul_ref(rhs);
    }
}

impl From<Rational> for QEps {
    fn from(a: Rational) -> Self {
        Self::from_rational(a)
    }
}

impl From<i64> for QEps {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for QEps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}E", self.a, -&self.b)
        } else {
            write!(f, "{}+{}E", self.a, self.b)
        }
    }
}

impl fmt::Debug for QEps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QEps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (x, used) = QEps::parse_prefix(s, 0)?;
        if used != s.len() {
            return Err(Error::parse(used, "trailing characters after coefficient"));
        }
        Ok(x)
    }
}

impl QEps {
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QEps {
        s.parse().unwrap()
    }

    #[test]
    fn one_plus_eps_squared_is_eps() {
        let x = q("1/1+1/1E");
        assert_eq!(&x * &x, QEps::eps());
    }

    #[test]
    fn two_plus_eps_times_alpha_is_one() {
        let alpha = q("1/3-1/3E");
        assert_eq!(&q("2/1+1/1E") * &alpha, QEps::one());
    }

    #[test]
    fn multiplicative_identity() {
        let x = q("-2/3+5/7E");
        assert_eq!(&x * &QEps::one(), x);
    }

    #[test]
    fn inverses() {
        assert_eq!(QEps::eps().inv().unwrap(), q("-1/1-1/1E"));
        assert_eq!(q("2/1+1/1E").inv().unwrap(), q("1/3-1/3E"));
        assert_eq!(QEps::one().inv().unwrap(), QEps::one());
        assert_eq!(QEps::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_form() {
        assert_eq!(QEps::one().to_string(), "1/1");
        assert_eq!(q("-2/3+1/1E").to_string(), "-2/3+1/1E");
        assert_eq!(q("0/1-1/2E").to_string(), "0/1-1/2E");
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("3").to_string(), "3/1");
        assert!("1/0".parse::<QEps>().is_err());
        assert!("1/2+".parse::<QEps>().is_err());
        assert!("x".parse::<QEps>().is_err());
    }

    #[test]
    fn promotes_past_machine_words() {
        let big = Rational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249/1");
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        let min = Rational::from_integer(i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808/1");
        assert_eq!(-(-&min), min);
    }

    #[test]
    fn factorials_stay_exact() {
        let mut f = Rational::one();
        for k in 1..=30 {
            f = &f * &Rational::from_integer(k);
        }
        assert_eq!(f.to_string(), "265252859812191058636308480000000/1");
    }
}
