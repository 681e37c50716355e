use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{factor, factor_biguint, gaussian_factor, is_prime, GaussianRational, Rational};
use crate::error::{Error, Result};

/// An element of `Q*/(Q*)^2`: a sign and a strictly increasing list of
/// distinct primes. Serialized as the signed squarefree integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    negative: bool,
    primes: Vec<BigUint>,
}

impl SquareClass {
    pub fn trivial() -> Self {
        Self { negative: false, primes: Vec::new() }
    }

    pub fn from_parts(sign: i8, mut primes: Vec<BigUint>) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("sign {sign} is not +-1")));
        }
        primes.sort();
        for w in primes.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidArgument(format!("repeated prime {}", w[0])));
            }
        }
        if let Some(p) = primes.iter().find(|p| !is_prime(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(Self { negative: sign < 0, primes })
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    pub fn is_trivial(&self) -> bool {
        !self.negative && self.primes.is_empty()
    }

    /// The canonical squarefree integer representative.
    pub fn representative(&self) -> BigInt {
        let m: BigUint = self.primes.iter().product();
        BigInt::from_biguint(if self.negative { Sign::Minus } else { Sign::Plus }, m)
    }

    /// Group operation.
    pub fn combine(&self, other: &SquareClass) -> SquareClass {
        let mut primes: Vec<BigUint> = self
            .primes
            .iter()
            .filter(|p| other.primes.binary_search(p).is_err())
            .chain(other.primes.iter().filter(|p| self.primes.binary_search(p).is_err()))
            .cloned()
            .collect();
        primes.sort();
        SquareClass { negative: self.negative != other.negative, primes }
    }

    pub fn has_prime(&self, p: &BigUint) -> bool {
        self.primes.binary_search(p).is_ok()
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

impl FromStr for SquareClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n: BigInt = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad square class {s:?}")))?;
        if n.is_zero() {
            return Err(Error::Parse("square class of 0".into()));
        }
        let fac = factor(&n)?;
        if fac.factors.values().any(|&e| e > 1) {
            return Err(Error::Parse(format!("{n} is not squarefree")));
        }
        Ok(SquareClass { negative: fac.sign < 0, primes: fac.factors.into_keys().collect() })
    }
}

impl Serialize for SquareClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SquareClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn square_class(q: &Rational) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::ZeroInput("square class of 0"));
    }
    let mut parity: BTreeMap<BigUint, u32> = BTreeMap::new();
    for part in [q.numer().magnitude(), q.denom().magnitude()] {
        for (p, e) in factor_biguint(part) {
            *parity.entry(p).or_insert(0) += e;
        }
    }
    let primes = parity.into_iter().filter(|(_, e)| e % 2 == 1).map(|(p, _)| p).collect();
    Ok(SquareClass { negative: q.is_negative(), primes })
}

/// An element of `(K*/3)/(Q*/3)`, `K = Q(i)`, coordinatized by
/// `ord_pi(z) - ord_pibar(z) mod 3` at each split prime `p = 1 mod 4`, where
/// `pi = a+bi` with `a > b > 0`. Zero residues are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeClassModQ {
    residues: BTreeMap<BigUint, u8>,
}

impl CubeClassModQ {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn from_residues(pairs: impl IntoIterator<Item = (BigUint, u8)>) -> Result<Self> {
        let mut residues = BTreeMap::new();
        let four = BigUint::from(4u32);
        for (p, r) in pairs {
            if &p % &four != BigUint::one() || !is_prime(&p) {
                return Err(Error::InvalidArgument(format!("{p} is not a split prime")));
            }
            let r = r % 3;
            if r != 0 && residues.insert(p.clone(), r).is_some() {
                return Err(Error::InvalidArgument(format!("prime {p} repeated")));
            }
        }
        Ok(Self { residues })
    }

    pub fn residues(&self) -> &BTreeMap<BigUint, u8> {
        &self.residues
    }

    pub fn residue(&self, p: &BigUint) -> u8 {
        self.residues.get(p).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.is_empty()
    }

    /// Conjugation (equivalently `z -> i*conj(z)`, since units are cubes):
    /// every residue negated mod 3.
    pub fn conjugate(&self) -> Self {
        Self { residues: self.residues.iter().map(|(p, r)| (p.clone(), 3 - r)).collect() }
    }

    /// Group operation: pointwise sum mod 3.
    pub fn combine(&self, other: &Self) -> Self {
        let mut residues = self.residues.clone();
        for (p, r) in &other.residues {
            let e = residues.entry(p.clone()).or_insert(0);
            *e = (*e + r) % 3;
        }
        residues.retain(|_, r| *r != 0);
        Self { residues }
    }
}

pub fn conjugate_class(c: &CubeClassModQ) -> CubeClassModQ {
    c.conjugate()
}

impl fmt::Display for CubeClassModQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|(p, r)| format!("{p}:{r}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for CubeClassModQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::trivial());
        }
        let mut pairs = Vec::new();
        let mut last: Option<BigUint> = None;
        for item in s.split(',') {
            let (p, r) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad residue pair {item:?}")))?;
            let p: BigUint = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime {p:?}")))?;
            let r: u8 = r.trim().parse().map_err(|_| Error::Parse(format!("bad residue {r:?}")))?;
            if r != 1 && r != 2 {
                return Err(Error::Parse(format!("residue {r} not in {{1,2}}")));
            }
            if last.as_ref().is_some_and(|l| l >= &p) {
                return Err(Error::Parse("primes must be strictly increasing".into()));
            }
            last = Some(p.clone());
            pairs.push((p, r));
        }
        Self::from_residues(pairs).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn cube_class_mod_q(z: &GaussianRational) -> Result<CubeClassModQ> {
    if z.is_zero() {
        return Err(Error::ZeroInput("cube class of 0"));
    }
    // the rational denominator is killed by Q*
    let (num, _) = z.clear_denominators();
    let fac = gaussian_factor(&num)?;
    let mut residues = BTreeMap::new();
    for (pi, _) in &fac.factors {
        let p = pi.norm().magnitude().clone();
        // split primes only: nonzero imaginary part and odd norm
        if pi.im.is_zero() || p == BigUint::from(2u32) || residues.contains_key(&p) {
            continue;
        }
        let canonical = if pi.im.is_positive() { pi.clone() } else { pi.conj() };
        let diff = fac.exponent(&canonical) - fac.exponent(&canonical.conj());
        let r = diff.rem_euclid(3) as u8;
        residues.insert(p, r);
    }
    residues.retain(|_, r| *r != 0);
    Ok(CubeClassModQ { residues })
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn primes(ps: &[u32]) -> Vec<BigUint> {
        ps.iter().map(|&p| BigUint::from(p)).collect()
    }

    fn cc(pairs: &[(u32, u8)]) -> CubeClassModQ {
        CubeClassModQ::from_residues(pairs.iter().map(|&(p, r)| (BigUint::from(p), r))).unwrap()
    }

    #[test]
    fn square_class_examples() {
        assert!(square_class(&int(4)).unwrap().is_trivial());
        // -a0^7/a1^3 with a0 = 1, a1 = 3
        let q = -int(1) / int(27);
        let c = square_class(&q).unwrap();
        assert_eq!((c.sign(), c.primes()), (-1, primes(&[3]).as_slice()));
        let c = square_class(&rat(18, 5)).unwrap();
        assert_eq!((c.sign(), c.primes()), (1, primes(&[2, 5]).as_slice()));
        assert_eq!(c.to_string(), "10");
        assert!(square_class(&int(0)).is_err());
    }

    #[test]
    fn square_class_text_round_trip() {
        for s in ["1", "-1", "-3", "10", "-30"] {
            assert_eq!(s.parse::<SquareClass>().unwrap().to_string(), s);
        }
        assert!("12".parse::<SquareClass>().is_err());
        assert!("0".parse::<SquareClass>().is_err());
    }

    #[test]
    fn cube_class_examples() {
        assert!(cube_class_mod_q(&GaussianRational::new(rat(-7, 3), int(0))).unwrap().is_trivial());
        assert_eq!(cube_class_mod_q(&GaussianRational::from_ints(2, 1)).unwrap(), cc(&[(5, 1)]));
        assert_eq!(cube_class_mod_q(&GaussianRational::from_ints(12, 16)).unwrap(), cc(&[(5, 2)]));
        assert!(cube_class_mod_q(&GaussianRational::zero()).is_err());
    }

    #[test]
    fn split_prime_classes() {
        for (p, a, b) in [(5, 2, 1), (13, 3, 2), (17, 4, 1), (29, 5, 2)] {
            let pi = GaussianRational::from_ints(a, b);
            assert_eq!(cube_class_mod_q(&pi).unwrap(), cc(&[(p, 1)]));
            assert_eq!(cube_class_mod_q(&pi.conj()).unwrap(), cc(&[(p, 2)]));
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate_class(&cc(&[])), cc(&[]));
        assert_eq!(conjugate_class(&cc(&[(5, 1)])), cc(&[(5, 2)]));
        // beta + alpha i = i * conj(alpha + beta i)
        let z = GaussianRational::from_ints(12, 16);
        let swapped = GaussianRational::from_ints(16, 12);
        assert_eq!(
            cube_class_mod_q(&swapped).unwrap(),
            conjugate_class(&cube_class_mod_q(&z).unwrap())
        );
    }

    #[test]
    fn cube_class_text_round_trip() {
        let c = cc(&[(5, 2), (13, 1)]);
        assert_eq!(c.to_string(), "5:2,13:1");
        assert_eq!("5:2,13:1".parse::<CubeClassModQ>().unwrap(), c);
        assert_eq!("".parse::<CubeClassModQ>().unwrap(), cc(&[]));
        assert!("13:1,5:2".parse::<CubeClassModQ>().is_err());
        assert!("7:1".parse::<CubeClassModQ>().is_err());
        assert!("5:0".parse::<CubeClassModQ>().is_err());
    }
}
