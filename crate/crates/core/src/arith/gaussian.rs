use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{factor_biguint, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self / d` if `d` divides `self` in `Z[i]`.
    pub fn div_exact(&self, d: &GaussianInt) -> Option<GaussianInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let t = self * &d.conj();
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussianInt { re: qr, im: qi })
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// `re + im*i` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(super::int(re), super::int(im))
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput("inverse of 0"));
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    /// Writes `self = numerator / denominator` with a Gaussian integer
    /// numerator and a positive integer denominator.
    pub fn clear_denominators(&self) -> (GaussianInt, BigInt) {
        let d = self.re.denom().lcm(self.im.denom());
        let re = (&self.re * Rational::from_integer(d.clone())).to_integer();
        let im = (&self.im * Rational::from_integer(d.clone())).to_integer();
        (GaussianInt { re, im }, d)
    }
}

impl From<&GaussianInt> for GaussianRational {
    fn from(z: &GaussianInt) -> Self {
        Self::new(Rational::from_integer(z.re.clone()), Rational::from_integer(z.im.clone()))
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `a+bi`, `a-bi`, `a`, `bi`, with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad Gaussian rational {s:?}"));
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::new(parse_rational(&t)?, Rational::zero()));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other.strip_prefix('+').unwrap_or(other),
        };
        let re = parse_rational(re).map_err(|_| bad())?;
        let im = parse_rational(im).map_err(|_| bad())?;
        Ok(Self::new(re, im))
    }
}

/// A power of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Unit {
    pub fn value(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::new(1, 0),
            Unit::I => GaussianInt::new(0, 1),
            Unit::MinusOne => GaussianInt::new(-1, 0),
            Unit::MinusI => GaussianInt::new(0, -1),
        }
    }

    fn from_gaussian(z: &GaussianInt) -> Option<Unit> {
        match (z.re.to_i64()?, z.im.to_i64()?) {
            (1, 0) => Some(Unit::One),
            (0, 1) => Some(Unit::I),
            (-1, 0) => Some(Unit::MinusOne),
            (0, -1) => Some(Unit::MinusI),
            _ => None,
        }
    }
}

/// `unit * prod(pi^e)` over canonical Gaussian primes: `1+i` for the
/// ramified prime, `p` for inert `p = 3 mod 4`, and the pair `a+bi`, `a-bi`
/// with `a > b > 0` for split `p = 1 mod 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianPrimeFactorization {
    pub unit: Unit,
    pub factors: Vec<(GaussianInt, i64)>,
}

impl GaussianPrimeFactorization {
    pub fn reconstruct(&self) -> GaussianRational {
        let mut acc = GaussianRational::from(&self.unit.value());
        for (p, e) in &self.factors {
            let base = GaussianRational::from(p);
            let base = if *e < 0 { base.inv().expect("prime is nonzero") } else { base };
            acc = &acc * &base.pow(e.unsigned_abs() as u32);
        }
        acc
    }

    pub fn exponent(&self, prime: &GaussianInt) -> i64 {
        self.factors
            .iter()
            .find(|(p, _)| p == prime)
            .map_or(0, |(_, e)| *e)
    }
}

/// The canonical prime `a+bi`, `a > b > 0`, over a prime `p = 1 mod 4`.
pub fn split_prime(p: &BigUint) -> Result<GaussianInt> {
    let four = BigUint::from(4u32);
    if (p % &four) != BigUint::one() {
        return Err(Error::InvalidArgument(format!("{p} is not 1 mod 4")));
    }
    let pm1 = p - 1u32;
    let half = &pm1 >> 1;
    let quarter = &pm1 >> 2;
    // sqrt(-1) mod p from any quadratic non-residue
    let mut c = BigUint::from(2u32);
    let root = loop {
        if c.modpow(&half, p) == pm1 {
            break c.modpow(&quarter, p);
        }
        c += 1u32;
        if &c >= p {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
    };
    // Euclid on (p, root) until the remainder drops below sqrt(p)
    let (mut r0, mut r1) = (p.clone(), root);
    while &(&r1 * &r1) > p {
        let r2 = &r0 % &r1;
        r0 = r1;
        r1 = r2;
    }
    let rest = p - &r1 * &r1;
    let s = rest.sqrt();
    if &s * &s != rest {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let (a, b) = if r1 > s { (r1, s) } else { (s, r1) };
    Ok(GaussianInt::new(BigInt::from(a), BigInt::from(b)))
}

pub fn gaussian_factor(z: &GaussianInt) -> Result<GaussianPrimeFactorization> {
    if z.is_zero() {
        return Err(Error::ZeroInput("cannot factor the Gaussian integer 0"));
    }
    let norm = z.norm().to_biguint().expect("norm is positive");
    let mut rem = z.clone();
    let mut factors = Vec::new();
    let four = BigUint::from(4u32);
    for (p, e) in factor_biguint(&norm) {
        if p == BigUint::from(2u32) {
            let pi = GaussianInt::new(1, 1);
            for _ in 0..e {
                rem = rem.div_exact(&pi).expect("1+i divides");
            }
            factors.push((pi, e as i64));
        } else if &p % &four == BigUint::from(3u32) {
            let pi = GaussianInt::new(BigInt::from(p), 0);
            for _ in 0..e / 2 {
                rem = rem.div_exact(&pi).expect("inert prime divides");
            }
            factors.push((pi, (e / 2) as i64));
        } else {
            let pi = split_prime(&p)?;
            let pibar = pi.conj();
            let mut k = 0u32;
            while k < e {
                match rem.div_exact(&pi) {
                    Some(q) => {
                        rem = q;
                        k += 1;
                    }
                    None => break,
                }
            }
            for _ in k..e {
                rem = rem.div_exact(&pibar).expect("conjugate prime divides");
            }
            if k > 0 {
                factors.push((pi, k as i64));
            }
            if e > k {
                factors.push((pibar, (e - k) as i64));
            }
        }
    }
    let unit = Unit::from_gaussian(&rem).expect("cofactor of full norm is a unit");
    Ok(GaussianPrimeFactorization { unit, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianInt {
        GaussianInt::new(a, b)
    }

    #[test]
    fn canonical_prime_is_fixed_point() {
        let f = gaussian_factor(&g(2, 1)).unwrap();
        assert_eq!(f.unit, Unit::One);
        assert_eq!(f.factors, vec![(g(2, 1), 1)]);
    }

    #[test]
    fn five_splits() {
        let f = gaussian_factor(&g(5, 0)).unwrap();
        assert_eq!(f.exponent(&g(2, 1)), 1);
        assert_eq!(f.exponent(&g(2, -1)), 1);
        assert_eq!(f.reconstruct(), GaussianRational::from_ints(5, 0));
    }

    #[test]
    fn twelve_plus_sixteen_i() {
        let z = g(12, 16);
        assert_eq!(z.norm(), BigInt::from(400));
        let f = gaussian_factor(&z).unwrap();
        assert_eq!(f.exponent(&g(1, 1)), 4);
        assert_eq!(f.exponent(&g(2, 1)), 2);
        assert_eq!(f.exponent(&g(2, -1)), 0);
        assert_eq!(f.reconstruct(), GaussianRational::from_ints(12, 16));
    }

    #[test]
    fn inert_and_units() {
        let f = gaussian_factor(&g(0, -21)).unwrap();
        assert_eq!(f.exponent(&g(3, 0)), 1);
        assert_eq!(f.exponent(&g(7, 0)), 1);
        assert_eq!(f.unit, Unit::MinusI);
        assert!(gaussian_factor(&g(0, 0)).is_err());
    }

    #[test]
    fn split_primes_canonical() {
        for (p, a, b) in [(5u32, 2, 1), (13, 3, 2), (17, 4, 1), (29, 5, 2), (1_000_033, 0, 0)] {
            let pi = split_prime(&BigUint::from(p)).unwrap();
            assert_eq!(pi.norm(), BigInt::from(p));
            assert!(pi.re > pi.im && pi.im > BigInt::zero());
            if a > 0 {
                assert_eq!(pi, g(a, b));
            }
        }
        assert!(split_prime(&BigUint::from(7u32)).is_err());
    }

    #[test]
    fn parse_and_print() {
        let z: GaussianRational = "3/2-4i".parse().unwrap();
        assert_eq!(z, GaussianRational::new(super::super::rat(3, 2), super::super::int(-4)));
        assert_eq!(z.to_string(), "3/2-4i");
        let w: GaussianRational = "-i".parse().unwrap();
        assert_eq!(w, GaussianRational::from_ints(0, -1));
        let r: GaussianRational = "-7".parse().unwrap();
        assert_eq!(r.to_string(), "-7+0i");
        assert!("1+2j".parse::<GaussianRational>().is_err());
    }
}
