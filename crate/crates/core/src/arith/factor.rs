//! Integer factorization: trial division below 10^6, then Miller-Rabin and
//! Pollard rho (Brent's variant) for whatever cofactor is left.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;

/// `sign * prod(p^e)`; the empty product with sign -1 is `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        let sign = if self.sign < 0 { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, acc)
    }
}

pub fn factor(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput("cannot factor 0"));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    Ok(Factorization { sign, factors: factor_biguint(n.magnitude()) })
}

/// Prime factorization of a positive integer (`1` gives the empty map).
pub fn factor_biguint(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return out;
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in factor_u64(small) {
            *out.entry(BigUint::from(p)).or_insert(0) += e;
        }
        return out;
    }
    let mut rem = n.clone();
    for &p in small_primes() {
        if rem.to_u64().is_some() {
            break;
        }
        let pb = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rem.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rem = q;
            e += 1;
        }
        if e > 0 {
            out.insert(pb, e);
        }
    }
    if let Some(small) = rem.to_u64() {
        for (p, e) in factor_u64(small) {
            *out.entry(BigUint::from(p)).or_insert(0) += e;
        }
    } else {
        let mut stack = vec![rem];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if let Some(small) = m.to_u64() {
                for (p, e) in factor_u64(small) {
                    *out.entry(BigUint::from(p)).or_insert(0) += e;
                }
            } else if is_prime(&m) {
                *out.entry(m).or_insert(0) += 1;
            } else {
                let d = rho_big(&m);
                stack.push(&m / &d);
                stack.push(d);
            }
        }
    }
    out
}

pub fn is_prime(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => miller_rabin_big(n),
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for &p in small_primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if n > 1 {
        let limit = TRIAL_LIMIT as u64;
        if n < limit * limit {
            out.push((n, 1));
        } else {
            let mut stack = vec![n];
            let mut big = BTreeMap::new();
            while let Some(m) = stack.pop() {
                if m == 1 {
                    continue;
                }
                if is_prime_u64(m) {
                    *big.entry(m).or_insert(0u32) += 1;
                } else {
                    let d = rho_u64(m);
                    stack.push(m / d);
                    stack.push(d);
                }
            }
            out.extend(big);
        }
    }
    out.sort();
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

// Deterministic for all n < 2^64 with the first twelve prime bases.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn miller_rabin_big(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in &MR_BASES {
        let pb = BigUint::from(p);
        if (n % &pb).is_zero() {
            return n == &pb;
        }
    }
    let n1 = n - &one;
    let mut d = n1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'outer: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: i64) -> Vec<(u64, u32)> {
        factor(&BigInt::from(n))
            .unwrap()
            .factors
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(fac(12), vec![(2, 2), (3, 1)]);
        let m1 = factor(&BigInt::from(-1)).unwrap();
        assert_eq!(m1.sign, -1);
        assert!(m1.factors.is_empty());
        assert_eq!(fac(1_000_003), vec![(1_000_003, 1)]);
    }

    #[test]
    fn zero_rejected() {
        assert!(factor(&BigInt::zero()).is_err());
    }

    #[test]
    fn primality_oracle_agrees_on_small_range() {
        for n in 0u64..5000 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), naive, "n = {n}");
        }
        // 1000003 by naive trial division
        let n = 1_000_003u64;
        assert!((2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d)));
        assert!(is_prime_u64(n));
    }

    #[test]
    fn semiprime_above_trial_limit() {
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        let f = factor_u64(p * q);
        assert_eq!(f, vec![(p, 1), (q, 1)]);
        let big = BigUint::from(p) * BigUint::from(q) * BigUint::from(4_294_967_311u64);
        let f = factor_biguint(&big);
        assert_eq!(f.len(), 3);
        let prod: BigUint = f.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(prod, big);
    }

    #[test]
    fn value_round_trip() {
        for n in [-360i64, 97, -1, 1, 2 * 3 * 3 * 1_000_003] {
            assert_eq!(factor(&BigInt::from(n)).unwrap().value(), BigInt::from(n));
        }
    }
}
