use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use super::LowDegreeRing;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace};
use crate::poly::Poly;

/// A nonzero homogeneous polynomial in generators of cohomological degree 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomPoly {
    poly: Poly,
    degree: usize,
}

impl HomPoly {
    pub fn new(poly: Poly) -> Result<Self> {
        let d = poly
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidArgument(format!("{poly} is zero or not homogeneous")))?;
        Ok(Self { poly, degree: 2 * d as usize })
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        Self::new(Poly::parse(s, &Poly::default_names(nvars))?)
    }

    /// The class `sum coeffs[i] * x_{i+1}` in degree 2.
    pub fn linear(coeffs: &[Rational]) -> Result<Self> {
        Self::new(Poly::linear(coeffs))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self { poly: Poly::var(nvars, i), degree: 2 }
    }

    /// Cohomological degree: twice the polynomial degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Coefficient vector of a degree-2 class.
    pub fn linear_coords(&self) -> Result<Vec<Rational>> {
        if self.degree != 2 {
            return Err(Error::InvalidArgument(format!("{} has degree {}, not 2", self.poly, self.degree)));
        }
        let n = self.nvars();
        Ok((0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                self.poly.coeff(&e)
            })
            .collect())
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Monomials of total degree `k` in `n` variables, largest first in
/// graded-lex order (`x1^k` first).
pub fn monomials(n: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n - 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone)]
struct Piece {
    monomials: Vec<Vec<u32>>,
    position: HashMap<Vec<u32>, usize>,
    // vectors are indexed by column = len - 1 - position, so that RREF pivots
    // land on the graded-lex-last monomials and the free columns are the
    // greedy graded-lex-first independent subset
    ideal: RowSpace,
    basis: Vec<usize>,
}

impl Piece {
    fn column(&self, pos: usize) -> usize {
        self.monomials.len() - 1 - pos
    }

    fn vector(&self, p: &Poly) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (e, c) in p.terms() {
            let pos = self.position[e];
            v[self.column(pos)] = c.clone();
        }
        v
    }

    fn coords(&self, p: &Poly) -> Vec<Rational> {
        let r = self.ideal.reduce(&self.vector(p));
        self.basis.iter().map(|&pos| r[self.column(pos)].clone()).collect()
    }
}

/// `Q[x1..xn] / (relations)` with graded pieces computed through
/// `max_degree` by dense exact elimination on monomial bases.
#[derive(Debug, Clone)]
pub struct GradedQuotient {
    generators: usize,
    relations: Vec<HomPoly>,
    max_degree: usize,
    pieces: Vec<Piece>,
}

impl GradedQuotient {
    /// Relations must be homogeneous of cohomological degree at least 4, so
    /// the degree-2 piece is the span of the generators.
    pub fn new(generators: usize, relations: Vec<HomPoly>, max_degree: usize) -> Result<Self> {
        for r in &relations {
            if r.nvars() != generators {
                return Err(Error::DimensionMismatch(format!(
                    "relation {r} has {} variables, ring has {generators}",
                    r.nvars()
                )));
            }
            if r.degree() < 4 {
                return Err(Error::InvalidArgument(format!("relation {r} has degree below 4")));
            }
        }
        let pieces = (0..=max_degree / 2)
            .map(|k| Self::piece(generators, &relations, k as u32))
            .collect();
        Ok(Self { generators, relations, max_degree, pieces })
    }

    pub fn parse(generators: usize, relations: &[&str], max_degree: usize) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|s| HomPoly::parse(s, generators))
            .collect::<Result<Vec<_>>>()?;
        Self::new(generators, rels, max_degree)
    }

    /// Dimension of the degree-`d` piece alone, without building the ring.
    pub fn piece_dim(generators: usize, relations: &[HomPoly], d: usize) -> Result<usize> {
        if d % 2 == 1 {
            return Err(Error::OddDegree(d));
        }
        Ok(Self::piece(generators, relations, (d / 2) as u32).basis.len())
    }

    fn piece(n: usize, relations: &[HomPoly], k: u32) -> Piece {
        let monos = monomials(n, k);
        let position: HashMap<Vec<u32>, usize> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let len = monos.len();
        let mut rows = Vec::new();
        for r in relations {
            let e = (r.degree() / 2) as u32;
            if e > k {
                continue;
            }
            for m in monomials(n, k - e) {
                let prod = r.poly() * &Poly::monomial(n, m, Rational::from_integer(1.into()));
                let mut v = vec![Rational::zero(); len];
                for (ex, c) in prod.terms() {
                    v[len - 1 - position[ex]] = c.clone();
                }
                rows.push(v);
            }
        }
        let ideal = RowSpace::new(len, &rows);
        let mut basis: Vec<usize> = ideal.free_columns().into_iter().map(|c| len - 1 - c).collect();
        basis.sort_unstable();
        Piece { monomials: monos, position, ideal, basis }
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &[HomPoly] {
        &self.relations
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn piece_at(&self, d: usize) -> Result<&Piece> {
        if d % 2 == 1 {
            return Err(Error::OddDegree(d));
        }
        if d > self.max_degree {
            return Err(Error::DegreeOutOfBounds { degree: d, max: self.max_degree });
        }
        Ok(&self.pieces[d / 2])
    }

    pub fn graded_dim(&self, d: usize) -> Result<usize> {
        Ok(self.piece_at(d)?.basis.len())
    }

    /// Graded dimensions in degrees `0, 2, ..., max_degree`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    /// Coefficients of `prod(1 - t^deg r) / (1 - t^2)^n` in degrees
    /// `0, 2, ..., max_degree`.
    pub fn expected_complete_intersection_dims(&self) -> Vec<i64> {
        let len = self.max_degree / 2 + 1;
        let mut series = vec![0i64; len];
        series[0] = 1;
        for r in &self.relations {
            let e = r.degree() / 2;
            for k in (e..len).rev() {
                series[k] -= series[k - e];
            }
        }
        for _ in 0..self.generators {
            for k in 1..len {
                series[k] += series[k - 1];
            }
        }
        series
    }

    /// True iff there are as many relations as generators and the graded
    /// dimensions match the complete-intersection Hilbert series through
    /// `max_degree`.
    pub fn is_complete_intersection(&self) -> bool {
        if self.relations.len() != self.generators {
            return false;
        }
        self.hilbert_function()
            .iter()
            .zip(self.expected_complete_intersection_dims())
            .all(|(&a, b)| a as i64 == b)
    }

    /// Quotient basis monomials in degree `d`.
    pub fn basis_monomials(&self, d: usize) -> Result<Vec<Vec<u32>>> {
        let p = self.piece_at(d)?;
        Ok(p.basis.iter().map(|&i| p.monomials[i].clone()).collect())
    }

    /// Coordinates of the class of a homogeneous polynomial in the fixed
    /// quotient basis of its degree.
    pub fn normal_form(&self, p: &Poly) -> Result<Vec<Rational>> {
        if p.nvars() != self.generators {
            return Err(Error::DimensionMismatch("polynomial variable count".into()));
        }
        let Some(k) = p.homogeneous_degree() else {
            if p.is_zero() {
                return Err(Error::InvalidArgument("the zero polynomial has no degree".into()));
            }
            return Err(Error::InvalidArgument(format!("{p} is not homogeneous")));
        };
        Ok(self.piece_at(2 * k as usize)?.coords(p))
    }

    pub fn is_zero_class(&self, p: &Poly) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.normal_form(p)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `u*v` in the degree-4 quotient basis.
    pub fn product_in_quotient(&self, u: &HomPoly, v: &HomPoly) -> Result<Vec<Rational>> {
        if u.degree() != 2 || v.degree() != 2 {
            return Err(Error::InvalidArgument("product_in_quotient takes degree-2 classes".into()));
        }
        let prod = u.poly() * v.poly();
        if prod.is_zero() {
            return Ok(vec![Rational::zero(); self.graded_dim(4)?]);
        }
        self.normal_form(&prod)
    }

    /// Rewrites the relations under `x_i -> sum_j p[i][j] x_j`.
    pub fn change_of_variables(&self, p: &Matrix) -> Result<GradedQuotient> {
        if p.nrows() != self.generators || p.ncols() != self.generators {
            return Err(Error::DimensionMismatch("substitution matrix shape".into()));
        }
        if p.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let rels = self
            .relations
            .iter()
            .map(|r| HomPoly::new(r.poly().substitute_linear(p)))
            .collect::<Result<Vec<_>>>()?;
        GradedQuotient::new(self.generators, rels, self.max_degree)
    }

    /// Degreewise equality of the two ideals through the smaller max degree.
    pub fn same_ideal(&self, other: &GradedQuotient) -> bool {
        self.generators == other.generators
            && self
                .pieces
                .iter()
                .zip(&other.pieces)
                .all(|(a, b)| a.ideal.contains_space(&b.ideal) && b.ideal.contains_space(&a.ideal))
    }
}

impl LowDegreeRing for GradedQuotient {
    fn h2_dim(&self) -> usize {
        self.generators
    }

    fn h4_dim(&self) -> usize {
        self.graded_dim(4).expect("max_degree >= 4")
    }

    fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let prod = &Poly::linear(u) * &Poly::linear(v);
        if prod.is_zero() {
            return vec![Rational::zero(); self.h4_dim()];
        }
        self.normal_form(&prod).expect("degree-4 piece computed")
    }
}
