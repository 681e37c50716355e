use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::graded_ring::{GradedQuotient, HomPoly, QuadricSystem};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::upoly::UPoly;

pub fn plane_names() -> Vec<String> {
    ["lambda", "mu", "nu"].iter().map(ToString::to_string).collect()
}

fn binary_names() -> Vec<String> {
    ["mu", "nu"].iter().map(ToString::to_string).collect()
}

/// A nonzero ternary cubic form in `(lambda, mu, nu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryCubic(Poly);

impl TernaryCubic {
    pub fn new(poly: Poly) -> Result<Self> {
        if poly.nvars() != 3 {
            return Err(Error::DimensionMismatch("ternary cubic needs 3 variables".into()));
        }
        if poly.homogeneous_degree() != Some(3) {
            return Err(Error::InvalidArgument(format!("{poly} is not a nonzero cubic form")));
        }
        Ok(Self(poly))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(Poly::parse(s, &plane_names())?)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn coeff(&self, a: u32, b: u32, c: u32) -> Rational {
        self.0.coeff(&[a, b, c])
    }

    /// `F(M v)`; `M` must be invertible.
    pub fn transform(&self, m: &Matrix) -> Result<TernaryCubic> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Self::new(self.0.substitute_linear(m))
    }

    pub fn gradient(&self) -> [Poly; 3] {
        [self.0.derivative(0), self.0.derivative(1), self.0.derivative(2)]
    }

    /// Determinant of the matrix of second partials.
    pub fn hessian(&self) -> Poly {
        let g = self.gradient();
        let h: Vec<Vec<Poly>> = g.iter().map(|d| (0..3).map(|j| d.derivative(j)).collect()).collect();
        det3(&h)
    }

    pub fn is_singular_at(&self, p: &[Rational]) -> bool {
        self.gradient().iter().all(|d| d.eval(p).is_zero())
    }
}

impl fmt::Display for TernaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with(&plane_names()))
    }
}

fn det3(m: &[Vec<Poly>]) -> Poly {
    let minor = |i: usize, j: usize, k: usize, l: usize| &(&m[i][k] * &m[j][l]) - &(&m[i][l] * &m[j][k]);
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// `det(lambda G1 + mu G2 + nu G3)` for a net of ternary quadrics.
pub fn det_cubic(net: &QuadricSystem) -> Result<TernaryCubic> {
    if net.ambient_dim() != 3 || net.dim() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "a net is 3 quadrics in 3 variables, got {} in {}",
            net.dim(),
            net.ambient_dim()
        )));
    }
    let entries: Vec<Vec<Poly>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| Poly::linear(&net.basis().iter().map(|g| g[(i, j)].clone()).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let det = det3(&entries);
    if det.is_zero() {
        return Err(Error::Degenerate("the net consists of singular quadrics".into()));
    }
    TernaryCubic::new(det)
}

/// Whether every singular point was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// The singular scheme is finite of length equal to the number of
    /// returned points, so there are no others over the algebraic closure.
    Complete,
    /// The search up to the given height ended without a completeness
    /// certificate; points of larger height or irrational points may exist.
    Exhausted { height: u32 },
    /// Exact elimination found every rational singular point, but the
    /// singular scheme also has irrational or non-reduced structure.
    AllRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoints {
    pub points: Vec<[BigInt; 3]>,
    pub status: SearchStatus,
}

impl SingularPoints {
    pub fn rational_points(&self) -> Vec<Vec<Rational>> {
        self.points.iter().map(|p| p.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect()
    }
}

pub const DEFAULT_SEARCH_HEIGHT: u32 = 50;

fn normalize_point(p: [BigInt; 3]) -> Option<[BigInt; 3]> {
    let g = p.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    let first = p.iter().find(|x| !x.is_zero())?;
    let g = if first.is_negative() { -g } else { g };
    Some(p.map(|x| x / &g))
}

/// Length of the singular scheme when it is finite, read off a stable
/// Hilbert function `H(d) = H(d+1) <= d` of the Jacobian ideal.
fn singular_scheme_length(f: &TernaryCubic) -> Option<usize> {
    const TOP: usize = 8;
    let rels: Vec<HomPoly> = f
        .gradient()
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| HomPoly::new(g).expect("partials of a cubic form are quadratic forms"))
        .collect();
    let h = |d: usize| GradedQuotient::piece_dim(3, &rels, 2 * d).expect("even degree");
    let mut prev = h(2);
    for d in 2..=TOP {
        let next = h(d + 1);
        if prev == next && prev <= d {
            return Some(prev);
        }
        prev = next;
    }
    None
}

type IntForm = Vec<([u32; 3], i128)>;

fn integer_forms(polys: &[Poly]) -> Option<Vec<IntForm>> {
    polys
        .iter()
        .map(|p| {
            let den = crate::arith::common_denominator(p.terms().map(|(_, c)| c));
            p.terms()
                .map(|(e, c)| {
                    let v = (c * Rational::from_integer(den.clone())).to_integer().to_i128()?;
                    Some(([e[0], e[1], e[2]], v))
                })
                .collect()
        })
        .collect()
}

fn eval_int(form: &[([u32; 3], i128)], p: [i128; 3]) -> Option<i128> {
    form.iter().try_fold(0i128, |acc, (e, c)| {
        let mut t = *c;
        for (x, &k) in p.iter().zip(e) {
            for _ in 0..k {
                t = t.checked_mul(*x)?;
            }
        }
        acc.checked_add(t)
    })
}

/// Rational singular points: exact elimination, with the bounded-height
/// search as a fallback when elimination degenerates.
pub fn singular_points(f: &TernaryCubic) -> Result<SingularPoints> {
    singular_points_with_height(f, DEFAULT_SEARCH_HEIGHT)
}

pub fn singular_points_with_height(f: &TernaryCubic, height: u32) -> Result<SingularPoints> {
    let grad = f.gradient();
    let length = singular_scheme_length(f);
    let mut found: Vec<[BigInt; 3]> = Vec::new();
    let push = |p: [BigInt; 3], found: &mut Vec<[BigInt; 3]>| {
        if let Some(p) = normalize_point(p) {
            if !found.contains(&p) {
                found.push(p);
            }
        }
    };
    let exact = rational_common_zeros(&grad);
    match &exact {
        Some(points) => {
            for p in points {
                push(integral_point(p), &mut found);
            }
        }
        None => {
            let forms = integer_forms(&grad)
                .ok_or_else(|| Error::Precondition("cubic coefficients too large for the point search".into()))?;
            let h = i128::from(height);
            for x in 0..=h {
                for y in -h..=h {
                    for z in -h..=h {
                        if x == 0 && (y < 0 || (y == 0 && z <= 0)) {
                            continue;
                        }
                        let p = [x, y, z];
                        if forms.iter().all(|form| eval_int(form, p) == Some(0)) {
                            push(p.map(BigInt::from), &mut found);
                        }
                    }
                }
            }
        }
    }
    found.sort();
    let status = if length == Some(found.len()) {
        SearchStatus::Complete
    } else if exact.is_some() {
        SearchStatus::AllRational
    } else {
        SearchStatus::Exhausted { height }
    };
    Ok(SingularPoints { points: found, status })
}

fn integral_point(p: &[Rational; 3]) -> [BigInt; 3] {
    let den = crate::arith::common_denominator(p.iter());
    p.clone().map(|x| (x * Rational::from_integer(den.clone())).to_integer())
}

/// `p` as a polynomial in `x` with coefficients in `Q[y]`.
fn as_bivariate(p: &Poly, x: usize, y: usize) -> Vec<UPoly> {
    let deg = p.degree_in(x).unwrap_or(0) as usize;
    let mut out = vec![UPoly::zero(); deg + 1];
    for (e, c) in p.terms() {
        let mut coeffs = vec![Rational::zero(); e[y] as usize + 1];
        coeffs[e[y] as usize] = c.clone();
        let k = e[x] as usize;
        out[k] = out[k].add(&UPoly::new(coeffs));
    }
    out
}

fn det_upoly(m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = m[0][j].mul(&det_upoly(minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Sylvester resultant in `x` of two polynomials given by their
/// coefficient lists (constant term first).
fn resultant_x(a: &[UPoly], b: &[UPoly]) -> UPoly {
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 && n == 0 {
        return UPoly::constant(Rational::one());
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![UPoly::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![UPoly::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det_upoly(rows)
}

fn univariate(p: &Poly, var: usize) -> UPoly {
    let mut coeffs = vec![Rational::zero(); p.degree_in(var).unwrap_or(0) as usize + 1];
    for (e, c) in p.terms() {
        coeffs[e[var] as usize] += c;
    }
    UPoly::new(coeffs)
}

/// Common rational zeros of univariate polynomials; `None` when all vanish.
fn common_rational_roots(ps: &[UPoly]) -> Option<Vec<Rational>> {
    let nonzero: Vec<&UPoly> = ps.iter().filter(|p| !p.is_zero()).collect();
    let g = nonzero.iter().skip(1).fold((*nonzero.first()?).clone(), |g, p| g.gcd(p));
    Some(g.rational_roots())
}

/// All rational points of `P^2` where the three forms vanish, or `None`
/// when they share a curve component and elimination gives no finite list.
fn rational_common_zeros(forms: &[Poly; 3]) -> Option<Vec<[Rational; 3]>> {
    let mut out = Vec::new();
    // chart z = 1: eliminate x, then back-substitute each rational y
    let set = |p: &Poly, idx: usize, v: &Rational| -> Poly {
        let n = p.nvars();
        let images: Vec<Poly> = (0..n)
            .map(|i| if i == idx { Poly::constant(n, v.clone()) } else { Poly::var(n, i) })
            .collect();
        p.substitute(&images)
    };
    let one = Rational::one();
    let affine: Vec<Poly> = forms.iter().map(|p| set(p, 2, &one)).collect();
    let bivariate: Vec<Vec<UPoly>> = affine.iter().filter(|p| !p.is_zero()).map(|p| as_bivariate(p, 0, 1)).collect();
    if bivariate.is_empty() {
        return None;
    }
    let ys = if bivariate.len() == 1 {
        // a single nonzero form cuts out a curve
        return None;
    } else {
        let mut res = UPoly::zero();
        'pairs: for i in 0..bivariate.len() {
            for j in i + 1..bivariate.len() {
                res = resultant_x(&bivariate[i], &bivariate[j]);
                if !res.is_zero() {
                    break 'pairs;
                }
            }
        }
        if res.is_zero() {
            return None;
        }
        res.squarefree_part().rational_roots()
    };
    for y in ys {
        let xs: Vec<UPoly> = affine.iter().map(|p| univariate(&set(p, 1, &y), 0)).collect();
        let roots = common_rational_roots(&xs)?;
        out.extend(roots.into_iter().map(|x| [x, y.clone(), one.clone()]));
    }
    // line z = 0: points [x : 1 : 0] and [1 : 0 : 0]
    let zero = Rational::zero();
    let at_infinity: Vec<UPoly> = forms.iter().map(|p| univariate(&set(&set(p, 2, &zero), 1, &one), 0)).collect();
    out.extend(common_rational_roots(&at_infinity)?.into_iter().map(|x| [x, one.clone(), zero.clone()]));
    let e1 = [one.clone(), zero.clone(), zero.clone()];
    if forms.iter().all(|p| p.eval(&e1).is_zero()) {
        out.push(e1);
    }
    Some(out)
}

/// `A mu^2 + B mu nu + C nu^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuadratic(pub [Rational; 3]);

impl BinaryQuadratic {
    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(2, [
            (vec![2, 0], self.0[0].clone()),
            (vec![1, 1], self.0[1].clone()),
            (vec![0, 2], self.0[2].clone()),
        ])
    }

    /// Nonzero multiple of `mu^2 + nu^2`.
    pub fn is_circle(&self) -> bool {
        self.0[1].is_zero() && !self.0[0].is_zero() && self.0[0] == self.0[2]
    }
}

impl fmt::Display for BinaryQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().display_with(&binary_names()))
    }
}

/// Coefficient form of `lambda` when `F = lambda q(mu,nu) + c(mu,nu)`.
pub fn tangent_cone(f: &TernaryCubic) -> Result<BinaryQuadratic> {
    for e in [[3, 0, 0], [2, 1, 0], [2, 0, 1]] {
        if !f.0.coeff(&e).is_zero() {
            return Err(Error::Precondition(format!("{f} is not singular at [1,0,0]")));
        }
    }
    let q = BinaryQuadratic([f.coeff(1, 2, 0), f.coeff(1, 1, 1), f.coeff(1, 0, 2)]);
    if q.0.iter().all(Zero::is_zero) {
        return Err(Error::Precondition(format!("{f} has a triple point at [1,0,0]")));
    }
    Ok(q)
}

/// `c0 mu^3 + c1 mu^2 nu + c2 mu nu^2 + c3 nu^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCubic(pub [Rational; 4]);

impl BinaryCubic {
    /// `beta mu^3 - 3 alpha mu^2 nu - 3 beta mu nu^2 + alpha nu^3`.
    pub fn from_alpha_beta(alpha: &Rational, beta: &Rational) -> Self {
        let three = int(3);
        Self([beta.clone(), -(&three * alpha), -(&three * beta), alpha.clone()])
    }

    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.nvars() != 2 || !(p.is_zero() || p.homogeneous_degree() == Some(3)) {
            return Err(Error::InvalidArgument(format!("{p} is not a binary cubic form")));
        }
        Ok(Self([p.coeff(&[3, 0]), p.coeff(&[2, 1]), p.coeff(&[1, 2]), p.coeff(&[0, 3])]))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(2, (0..4).map(|k| (vec![3 - k as u32, k as u32], self.0[k].clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Zero exactly when the cubic is orthogonal to `(mu^2 + nu^2) * linear`.
    pub fn non_harmonic_part(&self) -> [Rational; 2] {
        let c = &self.0;
        [&c[0] * int(3) + &c[2], &c[1] + &c[3] * int(3)]
    }

    pub fn is_harmonic(&self) -> bool {
        self.non_harmonic_part().iter().all(Zero::is_zero)
    }

    /// `(alpha, beta)` read from the `nu^3` and `mu^3` coefficients, with
    /// the remaining two coefficients checked.
    pub fn alpha_beta(&self) -> Result<(Rational, Rational)> {
        let alpha = self.0[3].clone();
        let beta = self.0[0].clone();
        if Self::from_alpha_beta(&alpha, &beta) != *self {
            return Err(Error::Degenerate(format!("{self} is not of the form (beta, -3 alpha, -3 beta, alpha)")));
        }
        Ok((alpha, beta))
    }

    /// Substitutes `mu -> m[0][0] mu + m[0][1] nu`, `nu -> m[1][0] mu + m[1][1] nu`.
    pub fn substitute(&self, m: &Matrix) -> BinaryCubic {
        Self::from_poly(&self.to_poly().substitute_linear(m)).expect("linear substitution keeps the degree")
    }

    /// `mu -> c mu + d nu`, `nu -> -d mu + c nu`.
    pub fn rotate(&self, c: &Rational, d: &Rational) -> BinaryCubic {
        self.substitute(&Matrix::from_rows(vec![vec![c.clone(), d.clone()], vec![-d.clone(), c.clone()]]))
    }

    pub fn swap(&self) -> BinaryCubic {
        let c = &self.0;
        Self([c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone()])
    }

    pub fn eval_f64(&self, mu: num_complex::Complex64, nu: num_complex::Complex64) -> num_complex::Complex64 {
        (0..4).fold(num_complex::Complex64::new(0.0, 0.0), |acc, k| {
            acc + mu.powu(3 - k as u32) * nu.powu(k as u32) * crate::to_f64(&self.0[k])
        })
    }
}

impl fmt::Display for BinaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().display_with(&binary_names()))
    }
}

/// Lines from the node `[1,0,0]` to the three inflection points.
///
/// With `F = lambda q + c` the Hessian is `lambda h1 + h0`; eliminating
/// `lambda` leaves `q h0 - c h1`, which is `q` times the inflection cubic
/// up to the constant `-8` when `q = -(mu^2 + nu^2)`.
pub fn inflection_lines(f: &TernaryCubic) -> Result<BinaryCubic> {
    let q = tangent_cone(f)?;
    if !q.is_circle() {
        return Err(Error::Precondition(format!("tangent cone {q} is not a multiple of mu^2 + nu^2")));
    }
    let hess = f.hessian();
    if hess.degree_in(0).unwrap_or(0) > 1 {
        return Err(Error::Precondition("Hessian is not linear in lambda".into()));
    }
    let to_binary = |p: Poly| -> Poly { Poly::from_terms(2, p.terms().map(|(e, c)| (vec![e[1], e[2]], c.clone()))) };
    let qp = q.to_poly();
    let c = to_binary(f.0.coefficient_in(0, 0));
    let h1 = to_binary(hess.coefficient_in(0, 1));
    let h0 = to_binary(hess.coefficient_in(0, 0));
    let mut res = &(&qp * &h0) - &(&c * &h1);
    if res.is_zero() {
        return Err(Error::Degenerate(format!("elimination for {f} gives a zero resultant")));
    }
    while let Some(r) = res.div_exact(&qp) {
        if r.total_degree() < Some(3) {
            break;
        }
        res = r;
    }
    if res.homogeneous_degree() != Some(3) {
        return Err(Error::Degenerate(format!("elimination for {f} leaves degree {:?}", res.total_degree())));
    }
    let cubic = BinaryCubic::from_poly(&res.scale(&Rational::new((-1).into(), 8.into())))?;
    if !cubic.is_harmonic() {
        return Err(Error::Degenerate(format!("inflection cubic {cubic} has a non-harmonic component")));
    }
    Ok(cubic)
}

/// `alpha' + beta' i = (alpha + beta i)(c + d i)^3`.
pub fn rotate_alpha_beta(alpha: &Rational, beta: &Rational, c: &Rational, d: &Rational) -> Result<(Rational, Rational)> {
    if c.is_zero() && d.is_zero() {
        return Err(Error::ZeroInput("rotation"));
    }
    let z = &GaussianRational::new(alpha.clone(), beta.clone())
        * &GaussianRational::new(c.clone(), d.clone()).pow(3);
    Ok((z.re, z.im))
}

/// `-lambda(mu^2 + nu^2) + alpha mu^2 nu + beta mu nu^2`.
pub fn family_cubic(alpha: &Rational, beta: &Rational) -> TernaryCubic {
    let mut p = Poly::zero(3);
    p.add_term(vec![1, 2, 0], int(-1));
    p.add_term(vec![1, 0, 2], int(-1));
    p.add_term(vec![0, 2, 1], alpha.clone());
    p.add_term(vec![0, 1, 2], beta.clone());
    TernaryCubic(p)
}

/// `x1^2`, `2(x2^2 + x2 x3) + 4(a + b) x1 x2`, `2 x2 x3 + x3^2 + 4a x1 x3`.
pub fn family_net(a: &Rational, b: &Rational) -> QuadricSystem {
    let n = Poly::default_names(3);
    let p = |s: &str| Poly::parse(s, &n).expect("fixed quadric");
    let two = int(2);
    let r2 = (&p("x2^2 + x2*x3") + &p("x1*x2").scale(&(&two * (a + b)))).scale(&two);
    let r3 = &p("2*x2*x3 + x3^2") + &p("x1*x3").scale(&(int(4) * a));
    QuadricSystem::from_polys(3, &[p("x1^2"), r2, r3]).expect("independent quadrics")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn det_cubic_of_family_net() {
        for (a, b) in [(int(1), int(1)), (rat(1, 2), int(-3)), (int(0), int(2))] {
            let f = det_cubic(&family_net(&a, &b)).unwrap();
            let alpha = int(4) * (&a * &a - &b * &b);
            let beta = int(8) * &a * &b;
            assert_eq!(f, family_cubic(&alpha, &beta));
        }
        let diag = QuadricSystem::parse(3, &["x1^2", "x2^2", "x3^2"]).unwrap();
        assert_eq!(det_cubic(&diag).unwrap().to_string(), "lambda*mu*nu");
    }

    #[test]
    fn singular_point_examples() {
        let f = family_cubic(&int(4), &int(0));
        let s = singular_points(&f).unwrap();
        assert_eq!(s.points, vec![[1.into(), 0.into(), 0.into()]]);
        assert_eq!(s.status, SearchStatus::Complete);

        let fermat = TernaryCubic::parse("lambda^3 + mu^3 + nu^3").unwrap();
        let s = singular_points(&fermat).unwrap();
        assert!(s.points.is_empty());
        assert_eq!(s.status, SearchStatus::Complete);

        let tri = TernaryCubic::parse("lambda*mu*nu").unwrap();
        let s = singular_points(&tri).unwrap();
        assert_eq!(s.points.len(), 3);
        assert_eq!(s.status, SearchStatus::Complete);
    }

    #[test]
    fn singular_point_off_axes() {
        // node moved to [1,2,-3]
        let f = family_cubic(&int(1), &int(2));
        let m = Matrix::from_i64(&[&[1, 0, 0], &[2, 1, 0], &[-3, 0, 1]]).inverse().unwrap();
        let g = f.transform(&m).unwrap();
        let s = singular_points(&g).unwrap();
        assert_eq!(s.points, vec![[1.into(), 2.into(), (-3).into()]]);
        assert_eq!(s.status, SearchStatus::Complete);
    }

    #[test]
    fn cuspidal_cubic_not_certified() {
        // a cusp has a length-2 singular scheme but one point
        let f = TernaryCubic::parse("lambda*mu^2 - nu^3").unwrap();
        let s = singular_points(&f).unwrap();
        assert_eq!(s.points.len(), 1);
        assert_eq!(s.status, SearchStatus::AllRational);
    }

    #[test]
    fn tangent_cone_examples() {
        let f = family_cubic(&int(3), &int(5));
        assert_eq!(tangent_cone(&f).unwrap().to_string(), "-mu^2 - nu^2");
        let g = TernaryCubic::parse("lambda*mu^2 - lambda*nu^2 + mu^3").unwrap();
        assert_eq!(tangent_cone(&g).unwrap().to_string(), "mu^2 - nu^2");
        let h = TernaryCubic::parse("lambda*mu*nu").unwrap();
        assert_eq!(tangent_cone(&h).unwrap().to_string(), "mu*nu");
        assert!(tangent_cone(&TernaryCubic::parse("lambda^3 + mu^3").unwrap()).is_err());
    }

    #[test]
    fn inflection_examples() {
        let b = inflection_lines(&family_cubic(&int(1), &int(0))).unwrap();
        assert_eq!(b.to_string(), "-3*mu^2*nu + nu^3");
        for (alpha, beta) in [(int(12), int(16)), (rat(-3, 4), int(2)), (int(0), int(-8))] {
            let b = inflection_lines(&family_cubic(&alpha, &beta)).unwrap();
            assert_eq!(b, BinaryCubic::from_alpha_beta(&alpha, &beta));
            assert_eq!(b.alpha_beta().unwrap(), (alpha, beta));
        }
        assert!(inflection_lines(&family_cubic(&int(0), &int(0))).is_err());
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate_alpha_beta(&int(3), &int(5), &int(1), &int(0)).unwrap(), (int(3), int(5)));
        assert_eq!(rotate_alpha_beta(&int(4), &int(0), &int(0), &int(1)).unwrap(), (int(0), int(-4)));
        assert!(rotate_alpha_beta(&int(4), &int(0), &int(0), &int(0)).is_err());
        let (al, be, c, d) = (int(2), int(-7), rat(1, 3), int(2));
        let rotated = BinaryCubic::from_alpha_beta(&al, &be).rotate(&c, &d);
        assert_eq!(rotated.alpha_beta().unwrap(), rotate_alpha_beta(&al, &be, &c, &d).unwrap());
        let swapped = BinaryCubic::from_alpha_beta(&al, &be).swap();
        assert_eq!(swapped.alpha_beta().unwrap(), (be, al));
    }
}
