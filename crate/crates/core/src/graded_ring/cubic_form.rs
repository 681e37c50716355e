use num_traits::Zero;

use super::LowDegreeRing;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;

/// Degree 2 and 4 of a Poincaré duality algebra determined by a cubic form
/// `F` on `V = H^2`: the symmetric trilinear form `T` with `T(x,x,x) = F(x)`
/// is the triple product integral, and `H^4` is identified with `V*` via
/// `uv -> T(u, v, .)`.
#[derive(Clone, Debug)]
pub struct CubicFormRing {
    n: usize,
    cubic: Poly,
    tensor: Vec<Rational>,
}

impl CubicFormRing {
    pub fn new(cubic: Poly) -> Result<Self> {
        if cubic.homogeneous_degree() != Some(3) {
            return Err(Error::InvalidArgument(format!("{cubic} is not a nonzero cubic form")));
        }
        let n = cubic.nvars();
        let sixth = Rational::new(1.into(), 6.into());
        let mut tensor = vec![Rational::zero(); n * n * n];
        for a in 0..n {
            let da = cubic.derivative(a);
            for b in 0..n {
                let dab = da.derivative(b);
                for c in 0..n {
                    let v = dab.derivative(c).coeff(&vec![0; n]);
                    tensor[(a * n + b) * n + c] = &v * &sixth;
                }
            }
        }
        Ok(Self { n, cubic, tensor })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn cubic(&self) -> &Poly {
        &self.cubic
    }

    pub fn entry(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.tensor[(a * self.n + b) * self.n + c]
    }

    pub fn trilinear(&self, u: &[Rational], v: &[Rational], w: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for a in (0..self.n).filter(|&a| !u[a].is_zero()) {
            for b in (0..self.n).filter(|&b| !v[b].is_zero()) {
                let uv = &u[a] * &v[b];
                for c in (0..self.n).filter(|&c| !w[c].is_zero()) {
                    let t = self.entry(a, b, c);
                    if !t.is_zero() {
                        acc += &uv * t * &w[c];
                    }
                }
            }
        }
        acc
    }

    /// Gram matrix of `(u, v) -> T(u, v, z)`.
    pub fn bilinear_form(&self, z: &[Rational]) -> Matrix {
        let mut g = Matrix::zeros(self.n, self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                g[(a, b)] = (0..self.n)
                    .filter(|&c| !z[c].is_zero())
                    .fold(Rational::zero(), |acc, c| acc + self.entry(a, b, c) * &z[c]);
            }
        }
        g
    }
}

impl LowDegreeRing for CubicFormRing {
    fn h2_dim(&self) -> usize {
        self.n
    }

    fn h4_dim(&self) -> usize {
        self.n
    }

    fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|k| {
                let mut e = vec![Rational::zero(); self.n];
                e[k] = Rational::from_integer(1.into());
                self.trilinear(u, v, &e)
            })
            .collect()
    }
}
