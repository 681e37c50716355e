use num_traits::Zero;

use crate::arith::{square_class, Rational, SquareClass};
use crate::biquotient::{circle_bundle_degree4, klein_ring, Complement, KleinData};
use crate::error::{Error, Result};
use crate::graded_ring::LowDegreeRing;
use crate::linalg::Matrix;

/// Gram matrix of `(u, v) -> T(u, v, z)` on the Klein space.
pub fn t2_quadratic_form(a0: &Rational, a1: &Rational) -> Result<Matrix> {
    let k = klein_ring(a0, a1)?;
    Ok(k.ring.bilinear_form(&k.z))
}

/// The displayed matrix with `a2 = a0^2/a1`; a constant multiple of
/// [`t2_quadratic_form`].
pub fn t2_reference_matrix(a0: &Rational, a1: &Rational) -> Result<Matrix> {
    if a0.is_zero() || a1.is_zero() {
        return Err(Error::ZeroInput("klein parameter"));
    }
    let a2 = a0 * a0 / a1;
    let z = Rational::zero();
    Ok(Matrix::from_rows(vec![
        vec![a1.clone(), a0.clone(), z.clone(), z.clone(), z.clone()],
        vec![a0.clone(), a2.clone(), a1.clone(), z.clone(), z.clone()],
        vec![z.clone(), a1.clone(), z.clone(), a2.clone(), z.clone()],
        vec![z.clone(), z.clone(), a2.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), a0.clone()],
    ]))
}

fn complement_vectors(k: &KleinData, complement: &Complement) -> Result<Vec<Vec<Rational>>> {
    let data = circle_bundle_degree4(k.ring.clone(), &k.y, complement.clone())?;
    Ok(data.complement().to_vec())
}

/// The form restricted to a complement of `y`, in the complement basis.
pub fn t2_induced_form(a0: &Rational, a1: &Rational, complement: &Complement) -> Result<Matrix> {
    let k = klein_ring(a0, a1)?;
    let g = k.ring.bilinear_form(&k.z);
    let b = Matrix::from_columns(&complement_vectors(&k, complement)?);
    Ok(b.transpose().mul(&g).mul(&b))
}

pub fn t2_det_class_with(a0: &Rational, a1: &Rational, complement: &Complement) -> Result<SquareClass> {
    let det = t2_induced_form(a0, a1, complement)?.det();
    if det.is_zero() {
        return Err(Error::Degenerate(format!("induced form for ({a0}, {a1}) is degenerate")));
    }
    square_class(&det)
}

/// Square class of the determinant of `(u, v) = T(u, v, z)` on `V/<y>`.
pub fn t2_det_class(a0: &Rational, a1: &Rational) -> Result<SquareClass> {
    t2_det_class_with(a0, a1, &Complement::default())
}

/// The form on `W = V/<y>` read off the cup product `S^2 W -> H^4/(y V)`,
/// which is one-dimensional.
pub fn t2_bundle_form(a0: &Rational, a1: &Rational, complement: &Complement) -> Result<Matrix> {
    let k = klein_ring(a0, a1)?;
    let data = circle_bundle_degree4(k.ring, &k.y, complement.clone())?;
    if data.h4_dim() != 1 {
        return Err(Error::Degenerate(format!("cokernel of y has dimension {}", data.h4_dim())));
    }
    let n = data.h2_dim();
    let unit = |i: usize| -> Vec<Rational> {
        (0..n).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect()
    };
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = data.product(&unit(i), &unit(j))[0].clone();
        }
    }
    Ok(g)
}
