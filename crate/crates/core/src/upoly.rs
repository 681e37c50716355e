//! Dense univariate polynomials over Q, with rational root finding and
//! factorization of small squarefree polynomials into irreducibles.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{common_denominator, factor_biguint, rational_sqrt, Rational};
use crate::error::{Error, Result};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + crate::to_f64(c))
    }

    /// `self(a*x + b)`
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(&lin).add(&Self::constant(c.clone())))
    }

    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = BTreeSet::new();
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut p = self.clone();
        if p.coeff(0).is_zero() {
            roots.insert(Rational::zero());
            let k = p.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
            p = Self::new(p.coeffs[k..].to_vec());
        }
        // candidates from numerical roots, confirmed exactly, then a
        // certificate that the rest has no rational root
        let mut rest = p.monic();
        for approx in real_root_estimates(&rest) {
            for cand in convergents(approx) {
                if rest.degree().unwrap_or(0) > 0 && rest.eval(&cand).is_zero() {
                    rest = rest.div_rem(&Self::new(vec![-cand.clone(), Rational::one()])).0;
                    roots.insert(cand);
                }
            }
        }
        if rest.degree().unwrap_or(0) > 0 && !has_no_rational_root_mod_small_prime(&rest) {
            roots.extend(rational_roots_by_divisors(&rest));
        }
        roots.into_iter().collect()
    }

    /// Monic irreducible factors of a squarefree polynomial of degree at most
    /// 4 (higher degrees are accepted when the part left after removing
    /// rational roots has degree at most 4).
    pub fn factor_squarefree_small(&self) -> Result<Vec<UPoly>> {
        let mut rest = self.monic();
        let mut out = Vec::new();
        for r in self.rational_roots() {
            let lin = Self::new(vec![-r, Rational::one()]);
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                return Err(Error::Precondition("polynomial is not squarefree".into()));
            }
            rest = q;
            out.push(lin);
        }
        match rest.degree() {
            None => return Err(Error::ZeroInput("factoring the zero polynomial")),
            Some(0) => {}
            Some(1..=3) => out.push(rest),
            Some(4) => out.extend(split_quartic(&rest)),
            Some(d) => {
                return Err(Error::InvalidArgument(format!(
                    "degree {d} remainder without rational roots is beyond the supported range"
                )))
            }
        }
        Ok(out)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn integer_coeffs(p: &UPoly) -> Vec<BigInt> {
    let den = common_denominator(p.coeffs.iter());
    p.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect()
}

/// Exhaustive rational root test over divisors of the extreme coefficients;
/// `p(0) != 0` is assumed.
fn rational_roots_by_divisors(p: &UPoly) -> Vec<Rational> {
    let ints = integer_coeffs(p);
    let nums = divisors(ints[0].magnitude());
    let dens = divisors(ints.last().expect("nonzero").magnitude());
    let mut roots = Vec::new();
    for n in &nums {
        for d in &dens {
            if n.gcd(d) != BigUint::one() {
                continue;
            }
            for sign in [1i32, -1] {
                let cand = Rational::new(BigInt::from(n.clone()) * sign, BigInt::from(d.clone()));
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// A root `n/d` in lowest terms has `d` dividing the leading coefficient,
/// so for a prime `l` not dividing it, `n/d` reduces to a root mod `l`.
fn has_no_rational_root_mod_small_prime(p: &UPoly) -> bool {
    let ints = integer_coeffs(p);
    const PRIMES: [u64; 24] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];
    PRIMES.iter().any(|&l| {
        let big = BigInt::from(l);
        let red: Vec<u64> =
            ints.iter().map(|c| c.mod_floor(&big).try_into().expect("residue fits")).collect();
        if *red.last().expect("nonzero") == 0 {
            return false;
        }
        (0..l).all(|x| red.iter().rev().fold(0, |acc, c| (acc * x + c) % l) != 0)
    })
}

/// Real parts of the nearly real complex roots, by Durand-Kerner.
fn real_root_estimates(p: &UPoly) -> Vec<f64> {
    let n = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let lead = crate::to_f64(&p.leading());
    let c: Vec<num_complex::Complex64> =
        p.coeffs.iter().map(|x| num_complex::Complex64::new(crate::to_f64(x) / lead, 0.0)).collect();
    if c.iter().any(|z| !z.re.is_finite()) {
        return Vec::new();
    }
    let bound = 1.0 + c[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let eval = |z: num_complex::Complex64| c.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
    let seed = num_complex::Complex64::from_polar(0.4 * bound.min(1e6), 0.9);
    let mut z: Vec<num_complex::Complex64> = (0..n).map(|k| seed * num_complex::Complex64::from_polar(1.0, k as f64 * std::f64::consts::TAU / n as f64)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(num_complex::Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / (1.0 + z[i].norm()));
        }
        if delta < 1e-15 {
            break;
        }
    }
    z.iter().filter(|r| r.re.is_finite() && r.im.abs() < 1e-4 * (1.0 + r.re.abs())).map(|r| r.re).collect()
}

/// Continued fraction convergents of `x` with denominators below `1e9`.
fn convergents(x: f64) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut t = x;
    for _ in 0..40 {
        if !t.is_finite() || t.abs() > 1e15 {
            break;
        }
        let a = t.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(1_000_000_000u64) {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = t - a;
        if frac.abs() < 1e-12 {
            break;
        }
        t = 1.0 / frac;
    }
    out
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factor_biguint(n) {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Splits a monic quartic without rational roots into two rational
/// quadratics when possible; otherwise returns it whole.
fn split_quartic(f: &UPoly) -> Vec<UPoly> {
    let a = f.coeff(3);
    let shift = &a / Rational::from_integer(4.into());
    // y = x + a/4, i.e. x = y - a/4
    let dep = f.compose_linear(&Rational::one(), &-shift.clone());
    let (p, q, r) = (dep.coeff(2), dep.coeff(1), dep.coeff(0));
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    let mut candidates: Vec<(Rational, Rational, Rational)> = Vec::new(); // (k, m, n)
    if q.is_zero() {
        if let Some(s) = rational_sqrt(&(&p * &p - &four * &r)) {
            candidates.push((Rational::zero(), (&p + &s) / &two, (&p - &s) / &two));
        }
        if let Some(m) = rational_sqrt(&r) {
            for m in [m.clone(), -m] {
                if let Some(k) = rational_sqrt(&(&two * &m - &p)) {
                    if !k.is_zero() {
                        candidates.push((k, m.clone(), m.clone()));
                    }
                }
            }
        }
    } else {
        let resolvent = UPoly::new(vec![
            -(&q * &q),
            &p * &p - &four * &r,
            &two * &p,
            Rational::one(),
        ]);
        for z in resolvent.rational_roots() {
            if let Some(k) = rational_sqrt(&z) {
                if k.is_zero() {
                    continue;
                }
                let m = (&p + &z - &q / &k) / &two;
                let n = (&p + &z + &q / &k) / &two;
                candidates.push((k, m, n));
            }
        }
    }
    for (k, m, n) in candidates {
        let g1 = UPoly::new(vec![m, k.clone(), Rational::one()]).compose_linear(&Rational::one(), &shift);
        let g2 = UPoly::new(vec![n, -k, Rational::one()]).compose_linear(&Rational::one(), &shift);
        if g1.mul(&g2) == *f {
            return vec![g1, g2];
        }
    }
    vec![f.clone()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn up(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn rational_roots_with_large_heights() {
        let lin = |r: Rational| UPoly::new(vec![-r, int(1)]);
        let big = rat(1_234_567_891, 8_191);
        let p = lin(big.clone()).mul(&lin(int(-3))).mul(&up(&[1, 0, 1])).mul(&lin(rat(1, 1_000_003)));
        assert_eq!(p.rational_roots(), vec![int(-3), rat(1, 1_000_003), big]);
        // has a root modulo every prime, so the exhaustive path decides
        let q = up(&[-2, 0, 1]).mul(&up(&[-3, 0, 1])).mul(&up(&[-6, 0, 1]));
        assert!(!has_no_rational_root_mod_small_prime(&q));
        assert!(q.rational_roots().is_empty());
        assert_eq!(q.mul(&lin(rat(5, 7))).rational_roots(), vec![rat(5, 7)]);
    }

    #[test]
    fn gcd_and_division() {
        let a = up(&[-1, 0, 1]); // t^2 - 1
        let b = up(&[1, 1]); // t + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, up(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&up(&[1, 2, 1])), b);
    }

    #[test]
    fn rational_roots_found() {
        // (2t - 3)(t + 5) t
        let p = up(&[0, -15, 7, 2]);
        assert_eq!(p.rational_roots(), vec![int(-5), int(0), rat(3, 2)]);
        assert!(up(&[2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn quartic_splitting() {
        // (t^2 + 1)(t^2 - 2t + 3)
        let f = up(&[1, 0, 1]).mul(&up(&[3, -2, 1]));
        let fs = f.factor_squarefree_small().unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].mul(&fs[1]), f);
        // (t^2 - 2)(t^2 - 3): biquadratic
        let g = up(&[-2, 0, 1]).mul(&up(&[-3, 0, 1]));
        assert_eq!(g.factor_squarefree_small().unwrap().len(), 2);
        // t^4 + 1 splits over Q(sqrt 2) only
        let h = up(&[1, 0, 0, 0, 1]);
        assert_eq!(h.factor_squarefree_small().unwrap(), vec![h.clone()]);
        // t^4 - 10 t^2 + 1 is irreducible but splits over every quadratic subfield
        let k = up(&[1, 0, -10, 0, 1]);
        assert_eq!(k.factor_squarefree_small().unwrap(), vec![k.clone()]);
        // (t - 1)(t + 2)(t^2 + t + 1)
        let l = up(&[-1, 1]).mul(&up(&[2, 1])).mul(&up(&[1, 1, 1]));
        let fs = l.factor_squarefree_small().unwrap();
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn squarefree_part_strips_repeats() {
        let f = up(&[-1, 1]).mul(&up(&[-1, 1])).mul(&up(&[2, 0, 1]));
        assert_eq!(f.squarefree_part(), up(&[-1, 1]).mul(&up(&[2, 0, 1])));
    }
}
