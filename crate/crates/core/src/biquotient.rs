//! Torus actions on products of 3-spheres, their quotient rings, and the
//! degree 2 and 4 data of circle bundles over the quotients.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factor_biguint, height, int, Rational};
use crate::error::{Error, Result};
use crate::graded_ring::{CubicFormRing, GradedQuotient, HomPoly, LowDegreeRing};
use crate::linalg::{Matrix, RowSpace};
use crate::poly::Poly;

/// Square integer matrix `A`: the circle factor `j` acts on the second
/// coordinate of the `i`-th 3-sphere with weight `a_ij`, and on the first
/// coordinate of the `i`-th sphere with weight `delta_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusActionMatrix {
    rows: Vec<Vec<i64>>,
}

impl TorusActionMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidArgument("empty action matrix".into()));
        }
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch(format!("action matrix must be {k}x{k}")));
        }
        Ok(Self { rows })
    }

    pub fn identity(k: usize) -> Self {
        Self { rows: (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Determinant of the principal submatrix on the index set `s`.
    pub fn principal_minor(&self, s: &[usize]) -> Rational {
        Matrix::from_rows(s.iter().map(|&i| s.iter().map(|&j| int(self.rows[i][j])).collect()).collect()).det()
    }

    pub(crate) fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let k = self.size();
        (1u32..1 << k).map(move |mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
    }
}

impl fmt::Display for TorusActionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// Accepts `"1,0,0;2,1,1;4,2,1"` or a JSON array of arrays.
impl FromStr for TorusActionMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rows: Vec<Vec<i64>> = if s.starts_with('[') {
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?
        } else {
            s.split(';')
                .map(|row| {
                    row.split(',')
                        .map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("matrix entry {x:?}: {e}"))))
                        .collect()
                })
                .collect::<Result<_>>()?
        };
        Self::new(rows)
    }
}

/// The 3x3 family `[[1,0,0],[b1,1,1],[c1,2,1]]`.
pub fn family_t1_matrix(b1: i64, c1: i64) -> TorusActionMatrix {
    TorusActionMatrix { rows: vec![vec![1, 0, 0], vec![b1, 1, 1], vec![c1, 2, 1]] }
}

/// Lower-triangular 4x4 action with unit diagonal whose quotient ring is
/// `(x1^2, x2^2, x3(x1+2x2+x3), x4(x1+2x2+x4))`.
pub fn family_t3_matrix() -> TorusActionMatrix {
    TorusActionMatrix { rows: vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 2, 1, 0], vec![1, 2, 0, 1]] }
}

/// `x3 -> x3 - x1/2 - x2`, `x4 -> x4 - x1/2 - x2`.
pub fn family_t3_substitution() -> Matrix {
    let h = Rational::new((-1).into(), 2.into());
    let mut p = Matrix::identity(4);
    for i in [2, 3] {
        p[(i, 0)] = h.clone();
        p[(i, 1)] = int(-1);
    }
    p
}

/// Every principal minor is `+-1`.
pub fn is_free(a: &TorusActionMatrix) -> bool {
    a.subsets().all(|s| {
        let d = a.principal_minor(&s);
        d.is_integer() && d.abs().is_one()
    })
}

/// Brute force: no nonzero `t` in `(Z/m)^S` with `A_S t = 0 mod m` for any
/// nonempty `S`, i.e. no element of order dividing `m` fixes any of the
/// `2^k` points where each sphere coordinate has one vanishing component.
pub fn stabilizer_oracle(a: &TorusActionMatrix, m: u32) -> Result<bool> {
    if !(2..=12).contains(&m) {
        return Err(Error::InvalidArgument(format!("oracle modulus {m} outside 2..=12")));
    }
    Ok(no_stabilizer_mod(a, i64::from(m)))
}

/// The same search for any modulus `m >= 2`; cost grows as `m^k`.
pub fn no_stabilizer_mod(a: &TorusActionMatrix, m: i64) -> bool {
    for s in a.subsets() {
        let sub: Vec<Vec<i64>> = s.iter().map(|&i| s.iter().map(|&j| a.entry(i, j).rem_euclid(m)).collect()).collect();
        let mut t = vec![0i64; s.len()];
        // odometer over (Z/m)^S, skipping t = 0
        loop {
            let mut carry = 0;
            while carry < t.len() {
                t[carry] += 1;
                if t[carry] < m {
                    break;
                }
                t[carry] = 0;
                carry += 1;
            }
            if carry == t.len() {
                break;
            }
            if sub.iter().all(|row| row.iter().zip(&t).map(|(x, y)| x * y).sum::<i64>() % m == 0) {
                return false;
            }
        }
    }
    true
}

/// Outcome of comparing [`is_free`] with the oracle over `m = 2..=12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Agree,
    /// Not free, invisible to the bounded oracle, and confirmed by the
    /// search at this prime.
    ConfirmedAt(i64),
    /// Not free, invisible to the bounded oracle, prime too large to search.
    BeyondRange,
    Disagree,
}

/// A non-free action whose non-unit principal minors only involve primes
/// above 12 has no stabilizer of order at most 12; it is then checked at
/// the smallest such prime when `p^k` is at most two million.
pub fn compare_with_oracle(a: &TorusActionMatrix) -> OracleVerdict {
    let free = is_free(a);
    let oracle = (2..=12).all(|m| no_stabilizer_mod(a, m));
    if free == oracle {
        return OracleVerdict::Agree;
    }
    if free {
        return OracleVerdict::Disagree;
    }
    let p = a
        .subsets()
        .map(|s| a.principal_minor(&s))
        .filter(|d| !d.abs().is_one() && !d.is_zero())
        .flat_map(|d| factor_biguint(d.numer().magnitude()).into_keys())
        .min();
    let Some(p) = p.and_then(|p| p.to_i64()) else {
        return OracleVerdict::Disagree;
    };
    if (p as f64).powi(a.size() as i32) > 2e6 {
        return OracleVerdict::BeyondRange;
    }
    if no_stabilizer_mod(a, p) {
        OracleVerdict::Disagree
    } else {
        OracleVerdict::ConfirmedAt(p)
    }
}

pub fn relation_polys(a: &TorusActionMatrix) -> Vec<Poly> {
    let k = a.size();
    (0..k)
        .map(|i| {
            let lin = Poly::linear(&a.rows[i].iter().map(|&x| int(x)).collect::<Vec<_>>());
            &Poly::var(k, i) * &lin
        })
        .collect()
}

/// `Q[x1..xk]/(x_i * sum_j a_ij x_j)`, computed through degree `2k + 2`.
pub fn quotient_ring(a: &TorusActionMatrix) -> Result<GradedQuotient> {
    quotient_ring_to_degree(a, 2 * a.size() + 2)
}

pub fn quotient_ring_to_degree(a: &TorusActionMatrix, max_degree: usize) -> Result<GradedQuotient> {
    if !is_free(a) {
        return Err(Error::NonFreeAction);
    }
    let rels = relation_polys(a).into_iter().map(HomPoly::new).collect::<Result<Vec<_>>>()?;
    GradedQuotient::new(a.size(), rels, max_degree)
}

/// How to pick the complement `W` of the Euler class line in `V`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Complement {
    /// Drop the coordinate of `y` of largest height (first on ties).
    #[default]
    DropLargest,
    /// Drop the given coordinate, which must be nonzero in `y`.
    Drop(usize),
    /// Explicit vectors that together with `y` form a basis of `V`.
    Vectors(Vec<Vec<Rational>>),
}

/// Degree 2 and 4 data of the circle bundle with Euler class `y` over a
/// base ring: `W = V/<y>` and the target `H^4/(y V)` of `S^2 W`.
#[derive(Clone, Debug)]
pub struct CircleBundleData<R> {
    base: R,
    y: Vec<Rational>,
    complement: Vec<Vec<Rational>>,
    y_image: RowSpace,
    target: Vec<usize>,
}

impl<R: LowDegreeRing> CircleBundleData<R> {
    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn euler_class(&self) -> &[Rational] {
        &self.y
    }

    /// Basis of `W` as vectors in `V`.
    pub fn complement(&self) -> &[Vec<Rational>] {
        &self.complement
    }

    /// Coordinates of `u` in the target `H^4/(y V)`.
    pub fn reduce_h4(&self, u: &[Rational]) -> Vec<Rational> {
        let r = self.y_image.reduce(u);
        self.target.iter().map(|&c| r[c].clone()).collect()
    }

    fn lift(&self, w: &[Rational]) -> Vec<Rational> {
        let n = self.y.len();
        let mut v = vec![Rational::zero(); n];
        for (c, b) in w.iter().zip(&self.complement) {
            if c.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        v
    }
}

impl<R: LowDegreeRing> LowDegreeRing for CircleBundleData<R> {
    fn h2_dim(&self) -> usize {
        self.complement.len()
    }

    fn h4_dim(&self) -> usize {
        self.target.len()
    }

    fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.reduce_h4(&self.base.product(&self.lift(u), &self.lift(v)))
    }
}

pub fn circle_bundle_degree4<R: LowDegreeRing>(
    base: R,
    y: &[Rational],
    complement: Complement,
) -> Result<CircleBundleData<R>> {
    let n = base.h2_dim();
    if y.len() != n {
        return Err(Error::DimensionMismatch(format!("Euler class has {} coordinates, expected {n}", y.len())));
    }
    if y.iter().all(Zero::is_zero) {
        return Err(Error::ZeroInput("Euler class"));
    }
    let unit = |j: usize| -> Vec<Rational> { (0..n).map(|i| if i == j { int(1) } else { int(0) }).collect() };
    let complement = match complement {
        Complement::DropLargest => {
            let drop = (0..n)
                .filter(|&i| !y[i].is_zero())
                .fold(None::<usize>, |best, i| match best {
                    Some(b) if height(&y[b]) >= height(&y[i]) => Some(b),
                    _ => Some(i),
                })
                .expect("y is nonzero");
            (0..n).filter(|&j| j != drop).map(unit).collect()
        }
        Complement::Drop(d) => {
            if d >= n || y[d].is_zero() {
                return Err(Error::InvalidArgument(format!("cannot drop coordinate {d} of the Euler class")));
            }
            (0..n).filter(|&j| j != d).map(unit).collect()
        }
        Complement::Vectors(vs) => {
            if vs.len() + 1 != n || vs.iter().any(|v| v.len() != n) {
                return Err(Error::DimensionMismatch(format!("complement needs {} vectors of length {n}", n - 1)));
            }
            let mut all = vs.clone();
            all.push(y.to_vec());
            if RowSpace::new(n, &all).rank() != n {
                return Err(Error::InvalidArgument("complement does not span V together with y".into()));
            }
            vs
        }
    };
    let m = base.h4_dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|j| base.product(y, &unit(j))).collect();
    let y_image = RowSpace::new(m, &images);
    let target = y_image.free_columns();
    Ok(CircleBundleData { base, y: y.to_vec(), complement, y_image, target })
}

/// The Klein cubic ring with its two distinguished classes.
#[derive(Clone, Debug)]
pub struct KleinData {
    pub ring: CubicFormRing,
    pub y: Vec<Rational>,
    pub z: Vec<Rational>,
}

/// Names `x0..x4` for the Klein cubic variables.
pub fn klein_names() -> Vec<String> {
    (0..5).map(|i| format!("x{i}")).collect()
}

/// Cubic form `x0^2 x1 + x1^2 x2 + x2^2 x3 + x3^2 x4 + x4^2 x0` with
/// `y = a0 x0 - a1 x1 + (a1^3/a0^2) x3` and `z = a0 x0 + a1 x1 + (a0^2/a1) x2`.
pub fn klein_ring(a0: &Rational, a1: &Rational) -> Result<KleinData> {
    if a0.is_zero() || a1.is_zero() {
        return Err(Error::ZeroInput("klein parameter"));
    }
    let mut cubic = Poly::zero(5);
    for i in 0..5 {
        let mut e = vec![0; 5];
        e[i] = 2;
        e[(i + 1) % 5] = 1;
        cubic.add_term(e, Rational::one());
    }
    let ring = CubicFormRing::new(cubic)?;
    let y = vec![a0.clone(), -a1.clone(), int(0), a1 * a1 * a1 / (a0 * a0), int(0)];
    let z = vec![a0.clone(), a1.clone(), a0 * a0 / a1, int(0), int(0)];
    Ok(KleinData { ring, y, z })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::graded_ring::{kernel_of_square_map, mult_by_class, square_map_matrix, QuadricSystem};

    #[test]
    fn parse_and_display() {
        let a: TorusActionMatrix = "1,0,0;2,1,1;4,2,1".parse().unwrap();
        assert_eq!(a, family_t1_matrix(2, 4));
        assert_eq!(a.to_string(), "1,0,0;2,1,1;4,2,1");
        let b: TorusActionMatrix = "[[1,0],[3,1]]".parse().unwrap();
        assert_eq!(b.size(), 2);
        assert!("1,0;2".parse::<TorusActionMatrix>().is_err());
        assert!("1,x".parse::<TorusActionMatrix>().is_err());
    }

    #[test]
    fn freeness_examples() {
        for b1 in -4..=4 {
            for c1 in -4..=4 {
                assert!(is_free(&family_t1_matrix(b1, c1)));
            }
        }
        assert!(is_free(&family_t3_matrix()));
        let bad = TorusActionMatrix::new(vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(!is_free(&bad));
        assert!(!stabilizer_oracle(&bad, 2).unwrap());
        assert!(stabilizer_oracle(&TorusActionMatrix::identity(3), 5).unwrap());
        assert!(stabilizer_oracle(&bad, 13).is_err());
    }

    #[test]
    fn oracle_agrees_on_family() {
        for m in 2..=12 {
            assert!(stabilizer_oracle(&family_t1_matrix(3, -2), m).unwrap());
        }
        let zero_det = TorusActionMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(!is_free(&zero_det));
        assert!(!stabilizer_oracle(&zero_det, 7).unwrap());
    }

    #[test]
    fn quotient_ring_examples() {
        let r = quotient_ring(&TorusActionMatrix::identity(1)).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 1, 0]);
        let r = quotient_ring(&family_t1_matrix(2, 4)).unwrap();
        assert_eq!(r.relations()[2].to_string(), "4*x1*x3 + 2*x2*x3 + x3^2");
        assert!(r.is_complete_intersection());
        let bad = TorusActionMatrix::new(vec![vec![2]]).unwrap();
        assert_eq!(quotient_ring(&bad).err(), Some(Error::NonFreeAction));
    }

    #[test]
    fn family_t3_change_of_variables() {
        let r = quotient_ring(&family_t3_matrix()).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 4, 6, 4, 1, 0]);
        let s = r.change_of_variables(&family_t3_substitution()).unwrap();
        let expected = GradedQuotient::parse(4, &["x1^2", "x2^2", "x3^2 - x1*x2", "x4^2 - x1*x2"], 10).unwrap();
        assert!(s.same_ideal(&expected));
        let x3 = HomPoly::var(4, 2);
        let x1x2 = Poly::parse("x1*x2", &Poly::default_names(4)).unwrap();
        assert_eq!(s.product_in_quotient(&x3, &x3).unwrap(), s.normal_form(&x1x2).unwrap());
    }

    #[test]
    fn family_t3_circle_bundle_kernel() {
        let ring = GradedQuotient::parse(4, &["x1^2", "x2^2", "x3^2 - x1*x2", "x4^2 - x1*x2"], 4).unwrap();
        let (a, b, c) = (rat(2, 3), int(-5), int(7));
        let y = vec![-a.clone(), -b.clone(), -c.clone(), int(1)];
        let data = circle_bundle_degree4(ring, &y, Complement::Drop(3)).unwrap();
        let k = kernel_of_square_map(&data);
        let lin = Poly::linear(&[a, b, c]);
        let q = &(&lin * &lin) - &Poly::parse("x1*x2", &Poly::default_names(3)).unwrap();
        let expected = QuadricSystem::from_polys(3, &[
            Poly::parse("x1^2", &Poly::default_names(3)).unwrap(),
            Poly::parse("x2^2", &Poly::default_names(3)).unwrap(),
            Poly::parse("x3^2 - x1*x2", &Poly::default_names(3)).unwrap(),
            q,
        ])
        .unwrap();
        assert!(k.same_span(&expected));
        assert!(circle_bundle_degree4(
            GradedQuotient::parse(2, &["x1^2", "x2^2"], 4).unwrap(),
            &[int(0), int(0)],
            Complement::default()
        )
        .is_err());
    }

    #[test]
    fn klein_kernel_and_surjectivity() {
        for (a0, a1) in [(int(1), int(1)), (int(2), int(1)), (rat(-3, 2), int(5))] {
            let k = klein_ring(&a0, &a1).unwrap();
            let m = mult_by_class(&k.ring, &k.y).unwrap();
            assert_eq!(m.kernel.len(), 1);
            assert_eq!(m.cokernel.len(), 1);
            let kv = &m.kernel[0];
            let pivot = kv.iter().position(|x| !x.is_zero()).unwrap();
            let s = &k.z[pivot] / &kv[pivot];
            assert!(kv.iter().zip(&k.z).all(|(x, z)| x * &s == *z));
            assert_eq!(square_map_matrix(&k.ring).rank(), 5);
            let bundle = circle_bundle_degree4(k.ring.clone(), &k.y, Complement::default()).unwrap();
            assert_eq!(bundle.h4_dim(), 1);
        }
        let k = klein_ring(&int(1), &int(1)).unwrap();
        let generic = [int(1), int(2), int(-1), int(3), int(1)];
        assert!(mult_by_class(&k.ring, &generic).unwrap().kernel.is_empty());
        assert!(klein_ring(&int(0), &int(1)).is_err());
    }

    #[test]
    fn oracle_verdicts() {
        let m = |rows: Vec<Vec<i64>>| TorusActionMatrix::new(rows).unwrap();
        assert_eq!(compare_with_oracle(&m(vec![vec![1, 0], vec![0, 2]])), OracleVerdict::Agree);
        assert_eq!(compare_with_oracle(&m(vec![vec![1, 0], vec![5, 1]])), OracleVerdict::Agree);
        assert_eq!(compare_with_oracle(&m(vec![vec![1, 0], vec![0, 13]])), OracleVerdict::ConfirmedAt(13));
        assert_eq!(compare_with_oracle(&m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1_000_003]])), OracleVerdict::BeyondRange);
    }
}
