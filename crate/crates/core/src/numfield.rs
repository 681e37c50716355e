//! Arithmetic in `Q[t]/(m(t))` for a monic irreducible `m`.

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    modulus: UPoly,
}

/// An element of a [`NumberField`], stored as its reduced representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem(UPoly);

impl NumberField {
    pub fn new(modulus: &UPoly) -> Result<Self> {
        match modulus.degree() {
            Some(d) if d >= 1 => Ok(Self { modulus: modulus.monic() }),
            _ => Err(Error::InvalidArgument("number field modulus must have positive degree".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("positive degree")
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElem {
        self.reduce(UPoly::x())
    }

    pub fn from_rational(&self, q: Rational) -> FieldElem {
        FieldElem(UPoly::constant(q))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(UPoly::zero())
    }

    fn reduce(&self, p: UPoly) -> FieldElem {
        FieldElem(p.div_rem(&self.modulus).1)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(a.0.add(&b.0))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(a.0.sub(&b.0))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.reduce(a.0.mul(&b.0))
    }

    pub fn scale(&self, a: &FieldElem, q: &Rational) -> FieldElem {
        FieldElem(a.0.scale(q))
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroInput("inverse of 0 in a number field"));
        }
        let (mut r0, mut r1) = (self.modulus.clone(), a.0.clone());
        let (mut s0, mut s1) = (UPoly::zero(), UPoly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return Err(Error::Precondition("modulus is reducible".into()));
        }
        let c = r0.coeff(0);
        Ok(self.reduce(s0.scale(&c.recip())))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Characteristic polynomial of multiplication by `a` (monic, degree
    /// equal to the field degree), via Faddeev-LeVerrier.
    pub fn char_poly(&self, a: &FieldElem) -> UPoly {
        let n = self.degree();
        let mut m = Matrix::zeros(n, n);
        let mut basis = self.from_rational(Rational::one());
        let t = self.generator();
        for j in 0..n {
            let col = self.mul(a, &basis);
            for i in 0..n {
                m[(i, j)] = col.0.coeff(i);
            }
            basis = self.mul(&basis, &t);
        }
        // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut mk = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = m.mul(&mk);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            mk = next;
            let am = m.mul(&mk);
            let tr = (0..n).fold(Rational::zero(), |acc, i| acc + &am[(i, i)]);
            coeffs[n - k] = -tr / Rational::from_integer((k as i64).into());
        }
        UPoly::new(coeffs)
    }
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.0.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.0.coeff(0)),
            _ => None,
        }
    }

    pub fn representative(&self) -> &UPoly {
        &self.0
    }
}
