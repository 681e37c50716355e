//! Graded rings generated in degree 2: quotients of polynomial rings by
//! homogeneous relations, and Poincaré duality algebras given by a cubic
//! form. Everything is degreewise exact linear algebra over Q.

mod cubic_form;
mod quotient;

pub use cubic_form::CubicFormRing;
pub use quotient::{monomials, GradedQuotient, HomPoly};

use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace};
use crate::poly::Poly;

/// The part of a graded ring in degrees 2 and 4 that is needed for quadric
/// systems and multiplication maps.
pub trait LowDegreeRing {
    fn h2_dim(&self) -> usize;
    fn h4_dim(&self) -> usize;
    /// Coordinates in degree 4 of the product of two degree-2 classes,
    /// given by coordinates in the degree-2 basis.
    fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational>;
}

/// Index pairs `(i, j)`, `i <= j`, ordering the monomial basis of `S^2 V`.
pub fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from_integer(1.into());
    v
}

/// A linear system of quadrics on `Q^k`, stored as Gram matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSystem {
    ambient: usize,
    basis: Vec<Matrix>,
}

impl QuadricSystem {
    pub fn new(ambient: usize, basis: Vec<Matrix>) -> Result<Self> {
        for g in &basis {
            if g.nrows() != ambient || g.ncols() != ambient {
                return Err(Error::DimensionMismatch(format!("Gram matrix is not {ambient}x{ambient}")));
            }
            if !g.is_symmetric() {
                return Err(Error::InvalidArgument("Gram matrix is not symmetric".into()));
            }
        }
        let s = Self { ambient, basis };
        let vecs: Vec<_> = s.basis.iter().map(|g| s.vector(g)).collect();
        if RowSpace::new(sym_pairs(ambient).len(), &vecs).rank() != vecs.len() {
            return Err(Error::InvalidArgument("quadrics are linearly dependent".into()));
        }
        Ok(s)
    }

    /// Builds a system from quadratic forms in `ambient` variables.
    pub fn from_polys(ambient: usize, quadrics: &[Poly]) -> Result<Self> {
        let basis = quadrics
            .iter()
            .map(|q| gram_of(ambient, q))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, basis)
    }

    pub fn parse(ambient: usize, quadrics: &[&str]) -> Result<Self> {
        let names = Poly::default_names(ambient);
        let polys = quadrics
            .iter()
            .map(|s| Poly::parse(s, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::from_polys(ambient, &polys)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn to_polys(&self) -> Vec<Poly> {
        self.basis.iter().map(Poly::from_gram).collect()
    }

    /// Coefficients of the quadratic form in the monomials `x_i x_j`,
    /// ordered by [`sym_pairs`].
    pub fn vector(&self, g: &Matrix) -> Vec<Rational> {
        sym_pairs(self.ambient)
            .into_iter()
            .map(|(i, j)| if i == j { g[(i, i)].clone() } else { &g[(i, j)] * Rational::from_integer(2.into()) })
            .collect()
    }

    fn span(&self) -> RowSpace {
        let vecs: Vec<_> = self.basis.iter().map(|g| self.vector(g)).collect();
        RowSpace::new(sym_pairs(self.ambient).len(), &vecs)
    }

    pub fn contains(&self, g: &Matrix) -> bool {
        self.span().contains(&self.vector(g))
    }

    pub fn contains_poly(&self, q: &Poly) -> bool {
        gram_of(self.ambient, q).is_ok_and(|g| self.contains(&g))
    }

    pub fn same_span(&self, other: &QuadricSystem) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && other.basis.iter().all(|g| self.contains(g))
    }

    /// The system pulled back along `x -> m x`: each Gram matrix `G`
    /// becomes `m^T G m`.
    pub fn transform(&self, m: &Matrix) -> Result<Self> {
        if m.nrows() != self.ambient || m.ncols() != self.ambient {
            return Err(Error::DimensionMismatch(format!("substitution is not {0}x{0}", self.ambient)));
        }
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Self::new(self.ambient, self.basis.iter().map(|g| m.transpose().mul(g).mul(m)).collect())
    }

    /// Reduces a quadric modulo the system, returning the remainder vector
    /// in the [`sym_pairs`] coordinates.
    pub fn reduce(&self, q: &Poly) -> Result<Vec<Rational>> {
        Ok(self.span().reduce(&self.vector(&gram_of(self.ambient, q)?)))
    }
}

/// Gram matrix of a quadratic form (zero allowed).
pub fn gram_of(n: usize, q: &Poly) -> Result<Matrix> {
    if q.nvars() != n {
        return Err(Error::DimensionMismatch(format!("quadric in {} variables, expected {n}", q.nvars())));
    }
    let mut g = Matrix::zeros(n, n);
    let half = Rational::new(1.into(), 2.into());
    for (e, c) in q.terms() {
        let idx: Vec<usize> = e.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect();
        match idx.as_slice() {
            [i, j] if i == j => g[(*i, *i)] = c.clone(),
            [i, j] => {
                g[(*i, *j)] = c * &half;
                g[(*j, *i)] = c * &half;
            }
            _ => return Err(Error::InvalidArgument(format!("{q} is not a quadratic form"))),
        }
    }
    Ok(g)
}

/// The matrix of `S^2 V -> H^4`, columns indexed by [`sym_pairs`].
pub fn square_map_matrix<R: LowDegreeRing + ?Sized>(ring: &R) -> Matrix {
    let n = ring.h2_dim();
    let cols: Vec<Vec<Rational>> = sym_pairs(n)
        .into_iter()
        .map(|(i, j)| ring.product(&unit(n, i), &unit(n, j)))
        .collect();
    if cols.is_empty() {
        return Matrix::zeros(ring.h4_dim(), 0);
    }
    Matrix::from_columns(&cols)
}

/// Kernel of the product map `S^2 V -> H^4`.
pub fn kernel_of_square_map<R: LowDegreeRing + ?Sized>(ring: &R) -> QuadricSystem {
    let n = ring.h2_dim();
    let pairs = sym_pairs(n);
    let half = Rational::new(1.into(), 2.into());
    let basis = square_map_matrix(ring)
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut g = Matrix::zeros(n, n);
            for (c, &(i, j)) in v.iter().zip(&pairs) {
                if i == j {
                    g[(i, i)] = c.clone();
                } else {
                    g[(i, j)] = c * &half;
                    g[(j, i)] = c * &half;
                }
            }
            g
        })
        .collect();
    QuadricSystem { ambient: n, basis }
}

/// Multiplication by a degree-2 class as a map from degree 2 to degree 4.
#[derive(Clone, Debug)]
pub struct MultiplicationMap {
    /// `h4_dim x h2_dim`; column `j` is `y * e_j`.
    pub matrix: Matrix,
    pub kernel: Vec<Vec<Rational>>,
    /// Unit vectors of degree 4 spanning a complement of the image.
    pub cokernel: Vec<Vec<Rational>>,
}

impl MultiplicationMap {
    pub fn rank(&self) -> usize {
        self.matrix.ncols() - self.kernel.len()
    }
}

pub fn mult_by_class<R: LowDegreeRing + ?Sized>(ring: &R, y: &[Rational]) -> Result<MultiplicationMap> {
    let n = ring.h2_dim();
    if y.len() != n {
        return Err(Error::DimensionMismatch(format!("class has {} coordinates, expected {n}", y.len())));
    }
    let m = ring.h4_dim();
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| ring.product(y, &unit(n, j))).collect();
    let matrix = if n == 0 { Matrix::zeros(m, 0) } else { Matrix::from_columns(&cols) };
    let kernel = matrix.nullspace();
    let image = RowSpace::new(m, &cols);
    let cokernel = image.free_columns().into_iter().map(|c| unit(m, c)).collect();
    Ok(MultiplicationMap { matrix, kernel, cokernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn t1_kernel_contains_relations() {
        let ring = GradedQuotient::parse(3, &["x1^2", "2*x1*x2 + x2^2 + x2*x3", "3*x1*x3 + 2*x2*x3 + x3^2"], 6)
            .unwrap();
        let k = kernel_of_square_map(&ring);
        assert_eq!(k.dim(), 3);
        for r in ring.relations() {
            assert!(k.contains_poly(r.poly()));
        }
        assert_eq!(k.dim() + square_map_matrix(&ring).rank(), 6);
    }

    #[test]
    fn free_ring_kernel_empty() {
        let ring = GradedQuotient::new(3, vec![], 4).unwrap();
        assert_eq!(kernel_of_square_map(&ring).dim(), 0);
    }

    #[test]
    fn zero_class_kernel_is_everything() {
        let ring = GradedQuotient::parse(2, &["x1^2", "x2^2"], 4).unwrap();
        let m = mult_by_class(&ring, &[int(0), int(0)]).unwrap();
        assert_eq!(m.kernel.len(), 2);
        assert_eq!(m.cokernel.len(), 1);
        let m = mult_by_class(&ring, &[int(1), int(1)]).unwrap();
        assert_eq!(m.kernel.len(), 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn quadric_system_membership() {
        let s = QuadricSystem::parse(3, &["x1^2", "x2^2", "x3^2 - x1*x2"]).unwrap();
        assert!(s.contains_poly(&Poly::parse("2*x1^2 + x3^2 - x1*x2", &Poly::default_names(3)).unwrap()));
        assert!(!s.contains_poly(&Poly::parse("x1*x2", &Poly::default_names(3)).unwrap()));
        assert!(QuadricSystem::parse(2, &["x1^2", "2*x1^2"]).is_err());
        let polys = s.to_polys();
        assert_eq!(polys[2].to_string(), "-x1*x2 + x3^2");
    }
}
