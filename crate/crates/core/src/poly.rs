//! Sparse multivariate polynomials over Q.
//!
//! Terms print in graded-lex order (total degree first, then lexicographic
//! on the exponent vector, largest first) using the grammar
//! `c*x1^2*x3 + x2 - 1/2*x3^2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Self::unit_exp(n, i), c.clone());
        }
        p
    }

    /// `x^T G x` for a symmetric Gram matrix `G`.
    pub fn from_gram(g: &Matrix) -> Self {
        let n = g.nrows();
        let mut p = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(e, g[(i, j)].clone());
            }
        }
        p
    }

    fn unit_exp(n: usize, i: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        e[i] = 1;
        e
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common total degree of all terms, or `None` if the polynomial is
    /// zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[var].into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point dimension");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `x_i -> images[i]`; all images must share a variable count.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let m = images.first().map_or(0, Poly::nvars);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::constant(m, Rational::one()), p.clone()]).collect();
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Linear change of variables `x_i -> sum_j m[i][j] * x_j`.
    pub fn substitute_linear(&self, m: &Matrix) -> Poly {
        assert_eq!(m.nrows(), self.nvars, "substitution rows");
        let images: Vec<Poly> = (0..m.nrows()).map(|i| Poly::linear(m.row(i))).collect();
        self.substitute(&images)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Coefficient of `x_var^k`, as a polynomial with `x_var` absent.
    pub fn coefficient_in(&self, var: usize, k: u32) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (ld, lc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((le, lcoef)) = rem.leading() {
            if le.iter().zip(ld).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = le.iter().zip(ld).map(|(a, b)| a - b).collect();
            let t = Poly::monomial(self.nvars, e, lcoef / lc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Terms in graded-lex order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], p)),
                }
            }
            if factors.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses the text grammar against the given variable names.
    pub fn parse(s: &str, names: &[String]) -> Result<Poly> {
        let n = names.len();
        let text: String = s.replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Poly::zero(n);
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in text.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(k > 0 && cur.ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if k > 0 {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing sign in {s:?}")));
        }
        terms.push((neg, cur));
        for (neg, term) in terms {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; n];
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {s:?}")));
                }
                let (base, power) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
                        (b, e)
                    }
                    None => (factor, 1),
                };
                if let Some(i) = names.iter().position(|nm| nm == base) {
                    exps[i] += power;
                } else {
                    let c = parse_rational(base)?;
                    for _ in 0..power {
                        coeff *= &c;
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Self::default_names(self.nvars)))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { nvars: self.nvars, terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn names(n: usize) -> Vec<String> {
        Poly::default_names(n)
    }

    #[test]
    fn print_parse_round_trip() {
        let p = Poly::parse("3/2*x1^2*x3 - x2 + 4 - x1*x2", &names(3)).unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x3 - x1*x2 - x2 + 4");
        assert_eq!(Poly::parse(&p.to_string(), &names(3)).unwrap(), p);
        assert_eq!(Poly::parse("x1 \u{2212} x2", &names(2)).unwrap().to_string(), "x1 - x2");
        assert!(Poly::parse("x1 + ", &names(2)).is_err());
        assert!(Poly::parse("y1", &names(2)).is_err());
    }

    #[test]
    fn arithmetic_and_division() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let q = &(&x * &x) + &(&y * &y);
        let c = &(&x * &(&x * &y)).scale(&int(3)) - &y.pow(3);
        let prod = &q * &c;
        assert_eq!(prod.div_exact(&q), Some(c.clone()));
        assert_eq!(c.div_exact(&q), None);
        assert_eq!(prod.homogeneous_degree(), Some(5));
    }

    #[test]
    fn linear_substitution() {
        // x3 -> x3 - x1/2 - x2 turns x3*(x1 + 2*x2 + x3) into x3^2 - (x1/2 + x2)^2
        let n = names(3);
        let r = Poly::parse("x3*x1 + 2*x2*x3 + x3^2", &n).unwrap();
        let mut m = Matrix::identity(3);
        m[(2, 0)] = rat(-1, 2);
        m[(2, 1)] = int(-1);
        let s = r.substitute_linear(&m);
        assert_eq!(s, Poly::parse("x3^2 - 1/4*x1^2 - x1*x2 - x2^2", &n).unwrap());
    }

    #[test]
    fn derivative_and_eval() {
        let p = Poly::parse("x1^2*x2 + 5*x2", &names(2)).unwrap();
        assert_eq!(p.derivative(0).to_string(), "2*x1*x2");
        assert_eq!(p.eval(&[int(2), int(3)]), int(27));
    }
}
