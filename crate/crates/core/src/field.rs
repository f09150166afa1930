//! Exact arithmetic in the Gaussian rationals Q(i).

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `re + im*i` of Q(i).
///
/// Both parts are kept as reduced fractions with positive denominators, so
/// derived equality is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(num.into(), den.into()),
            im: BigRational::zero(),
        }
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::gaussian(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar {
                re: self.re.recip(),
                im: BigRational::zero(),
            });
        }
        let n = self.norm();
        Ok(Scalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(k.into());
        Scalar {
            re: &self.re * &k,
            im: &self.im * &k,
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Most structure constants are real; skip the cross terms when possible.
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar {
                re: &self.re * &rhs.re,
                im: BigRational::zero(),
            },
            (true, false) => Scalar {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            },
            (false, true) => Scalar {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            },
            (false, false) => Scalar {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `a/b`, `c/d*i` or `a/b+c/d*i`; integers drop the
    /// denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im = format!("{}*i", fmt_rational(&self.im));
        if self.re.is_zero() {
            return f.write_str(&im);
        }
        let sep = if self.im.is_negative() { "" } else { "+" };
        write!(f, "{}{}{}", fmt_rational(&self.re), sep, im)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid scalar `{whole}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    match den {
        None => Ok(BigRational::from_integer(num)),
        Some(d) => {
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{whole}`")));
            }
            Ok(BigRational::new(num, d))
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `a`, `a/b`, `c/d*i`, `a/b+c/d*i`, `i`, `-i` with optional
    /// surrounding whitespace. No locale-dependent separators.
    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split into signed terms at + or - that are not leading.
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
                terms.push(&s[start..k]);
                start = k;
            }
        }
        terms.push(&s[start..]);
        if terms.len() > 2 {
            return Err(Error::Parse(format!("invalid scalar `{input}`")));
        }
        let mut out = Scalar::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'+' => (1, &term[1..]),
                b'-' => (-1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("invalid scalar `{input}`")));
            }
            let imag = body.ends_with('i');
            let mut value = if imag {
                let coeff = body[..body.len() - 1].trim_end_matches('*');
                if coeff.is_empty() {
                    BigRational::one()
                } else {
                    parse_rational(coeff, input)?
                }
            } else {
                parse_rational(body, input)?
            };
            if sign < 0 {
                value = -value;
            }
            if imag {
                if seen_im {
                    return Err(Error::Parse(format!("invalid scalar `{input}`")));
                }
                seen_im = true;
                out.im = value;
            } else {
                if seen_re {
                    return Err(Error::Parse(format!("invalid scalar `{input}`")));
                }
                seen_re = true;
                out.re = value;
            }
        }
        Ok(out)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s("1/2") + s("1/2"), Scalar::one());
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
        assert_eq!(s("1/3+1/6*i") * Scalar::from_int(6), s("2+1*i"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Scalar::from_int(2).inv().unwrap(), s("1/2"));
        assert_eq!(Scalar::i().inv().unwrap(), s("-i"));
        assert_eq!(s("1+i").inv().unwrap(), s("1/2-1/2*i"));
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(s("2/4").to_string(), "1/2");
        assert_eq!(s("-6/-4").to_string(), "3/2");
        assert_eq!(s("-i").to_string(), "-1*i");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(s("3"), Scalar::from_int(3));
        assert_eq!(s("-1/2*i"), Scalar::new(BigRational::zero(), BigRational::new((-1).into(), 2.into())));
        assert_eq!(s("i"), Scalar::i());
        assert_eq!(s(" 1/2 + 3/4*i "), s("1/2+3/4*i"));
        assert_eq!(s("2*i-1"), s("-1+2*i"));
        for bad in ["", "1/0", "x", "1+2+3", "1*i+2*i", "+", "1//2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for x in ["0", "-7", "5/3", "i", "-2/3*i", "1/2-1/2*i", "-4+9/5*i"] {
            let v = s(x);
            assert_eq!(s(&v.to_string()), v);
        }
        assert_eq!(s("-2/3*i").to_string(), "-2/3*i");
        assert_eq!(s("1/2-1/2*i").to_string(), "1/2-1/2*i");
    }
}
