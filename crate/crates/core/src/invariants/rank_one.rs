use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::t3::quadratic_discriminant;
use crate::arith::{int, square_class, Rational, SquareClass};
use crate::error::{Error, Result};
use crate::graded_ring::{sym_pairs, QuadricSystem};
use crate::linalg::Matrix;
use crate::numfield::{FieldElem, NumberField};
use crate::poly::Poly;
use crate::upoly::UPoly;

/// Conjugate rank-one members `l^2` of a system, `l` defined over a number
/// field of degree at least 2 and normalized so its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug)]
pub struct RankOneOrbit {
    field: NumberField,
    point: [FieldElem; 3],
}

impl RankOneOrbit {
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn point(&self) -> &[FieldElem; 3] {
        &self.point
    }

    pub fn ratio(&self, i: usize, j: usize) -> Result<FieldElem> {
        self.field.div(&self.point[i], &self.point[j])
    }

    /// Minimal polynomial over Q of `l_i / l_j`.
    pub fn ratio_min_poly(&self, i: usize, j: usize) -> Result<UPoly> {
        Ok(self.field.char_poly(&self.ratio(i, j)?).squarefree_part())
    }

    /// Square class of the discriminant of the field when it is quadratic.
    pub fn field_square_class(&self) -> Option<SquareClass> {
        if self.degree() != 2 {
            return None;
        }
        square_class(&quadratic_discriminant(self.field.modulus()).ok()?).ok()
    }
}

impl fmt::Display for RankOneOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.point.iter().map(|c| c.representative().to_string()).collect();
        write!(f, "({}) over Q[t]/({})", coords.join(", "), self.field.modulus())
    }
}

#[derive(Clone, Debug)]
pub struct RankOneClassification {
    /// Rational linear forms with first nonzero coefficient 1, sorted.
    pub rational: Vec<[Rational; 3]>,
    pub orbits: Vec<RankOneOrbit>,
}

impl RankOneClassification {
    /// Number of rank-one members up to scalars over the algebraic closure.
    pub fn count(&self) -> usize {
        self.rational.len() + self.orbits.iter().map(RankOneOrbit::degree).sum::<usize>()
    }

    pub fn rational_squares(&self) -> Vec<Poly> {
        self.rational
            .iter()
            .map(|l| {
                let p = Poly::linear(l);
                &p * &p
            })
            .collect()
    }
}

/// `sum f_ij * coeff_{x_i x_j}(l^2)` as a conic in `l`.
fn conic(f: &[Rational]) -> Poly {
    let mut c = Poly::zero(3);
    for (k, (i, j)) in sym_pairs(3).into_iter().enumerate() {
        if f[k].is_zero() {
            continue;
        }
        let mut e = vec![0; 3];
        e[i] += 1;
        e[j] += 1;
        let w = if i == j { f[k].clone() } else { &f[k] * int(2) };
        c.add_term(e, w);
    }
    c
}

fn eval_in(field: &NumberField, p: &Poly, x: &[FieldElem]) -> FieldElem {
    let mut acc = field.zero();
    for (e, c) in p.terms() {
        let mut t = field.from_rational(c.clone());
        for (xi, &k) in x.iter().zip(e) {
            for _ in 0..k {
                t = field.mul(&t, xi);
            }
        }
        acc = field.add(&acc, &t);
    }
    acc
}

/// Seeded invertible integer matrices; the first column is the center of
/// projection.
fn projections() -> Vec<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0e1a);
    let mut out = Vec::new();
    while out.len() < 60 {
        let rows: Vec<Vec<Rational>> = (0..3).map(|_| (0..3).map(|_| int(rng.gen_range(-9..=9))).collect()).collect();
        let m = Matrix::from_rows(rows);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

fn combination_pairs(m: usize) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let unit = |i: usize| (0..m).map(|k| if k == i { int(1) } else { int(0) }).collect::<Vec<_>>();
    let moment = |s: i64| (0..m).map(|k| int(s.pow(k as u32))).collect::<Vec<_>>();
    let mut out = vec![(unit(0), unit(1))];
    for s in 2..=7 {
        for t in (s + 1)..=8 {
            out.push((moment(s), moment(-t)));
        }
    }
    out
}

enum Attempt {
    Found(RankOneClassification),
    CommonComponent,
    BadCenter,
}

/// Conics in `l` cutting out the `l` with `l^2` in the system.
pub fn annihilator_conics(system: &QuadricSystem) -> Result<Vec<Poly>> {
    if system.ambient_dim() != 3 {
        return Err(Error::DimensionMismatch("rank-one search needs quadrics in 3 variables".into()));
    }
    let annihilator = if system.dim() == 0 {
        Matrix::identity(6).to_rows()
    } else {
        Matrix::from_rows(system.basis().iter().map(|g| system.vector(g)).collect()).nullspace()
    };
    Ok(annihilator.iter().map(|f| conic(f)).collect())
}

/// Rank-one members of a linear system of ternary quadrics of codimension
/// at least 2, exactly: rational ones as linear forms, the others grouped
/// into Galois orbits with their fields.
pub fn rank_one_elements(system: &QuadricSystem) -> Result<RankOneClassification> {
    let conics = annihilator_conics(system)?;
    if conics.len() < 2 {
        return Err(Error::Degenerate(format!(
            "a system of dimension {} has a positive-dimensional rank-one locus",
            system.dim()
        )));
    }
    let combine = |w: &[Rational]| -> Poly {
        conics.iter().zip(w).fold(Poly::zero(3), |acc, (c, x)| &acc + &c.scale(x))
    };
    let mut saw_finite = false;
    for (wa, wb) in combination_pairs(conics.len()) {
        let (a, b) = (combine(&wa), combine(&wb));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        for t in projections() {
            match try_center(&conics, &a, &b, &t)? {
                Attempt::Found(c) => return Ok(c),
                Attempt::CommonComponent => break,
                Attempt::BadCenter => saw_finite = true,
            }
        }
    }
    if saw_finite {
        Err(Error::Degenerate("no projection separated the rank-one points".into()))
    } else {
        Err(Error::Degenerate("the rank-one locus is positive-dimensional".into()))
    }
}

fn try_center(conics: &[Poly], a: &Poly, b: &Poly, t: &Matrix) -> Result<Attempt> {
    let o = t.column(0);
    if a.eval(&o).is_zero() || b.eval(&o).is_zero() {
        return Ok(Attempt::BadCenter);
    }
    let (a, b) = (a.substitute_linear(t), b.substitute_linear(t));
    let parts = |p: &Poly| [p.coefficient_in(0, 0), p.coefficient_in(0, 1), p.coefficient_in(0, 2)];
    let [a0, a1, a2] = parts(&a);
    let [b0, b1, b2] = parts(&b);
    let d1 = &(&a2 * &b0) - &(&a0 * &b2);
    let res = &(&d1 * &d1) - &(&(&(&a2 * &b1) - &(&a1 * &b2)) * &(&(&a1 * &b0) - &(&a0 * &b1)));
    if res.is_zero() {
        return Ok(Attempt::CommonComponent);
    }
    let ru = UPoly::new((0..=4).map(|k| res.coeff(&[0, k, 4 - k])).collect());
    if ru.degree() != Some(4) {
        return Ok(Attempt::BadCenter);
    }
    let mut rational = Vec::new();
    let mut orbits = Vec::new();
    for g in ru.squarefree_part().factor_squarefree_small()? {
        let field = NumberField::new(&g)?;
        let u = field.generator();
        let one = field.from_rational(Rational::one());
        let at = |p: &Poly| eval_in(&field, p, &[field.zero(), u.clone(), one.clone()]);
        let (fa0, fa1, fa2) = (at(&a0), at(&a1), at(&a2));
        let (fb0, fb1, fb2) = (at(&b0), at(&b1), at(&b2));
        let den = field.sub(&field.mul(&fb2, &fa1), &field.mul(&fa2, &fb1));
        if den.is_zero() {
            return Ok(Attempt::BadCenter);
        }
        let num = field.sub(&field.mul(&fb2, &fa0), &field.mul(&fa2, &fb0));
        let p = field.sub(&field.zero(), &field.div(&num, &den)?);
        let local = [p, u.clone(), one.clone()];
        if !eval_in(&field, &a, &local).is_zero() || !eval_in(&field, &b, &local).is_zero() {
            return Ok(Attempt::BadCenter);
        }
        let mut ell: Vec<FieldElem> = (0..3)
            .map(|i| {
                (0..3).fold(field.zero(), |acc, j| field.add(&acc, &field.scale(&local[j], &t[(i, j)])))
            })
            .collect();
        if conics.iter().any(|c| !eval_in(&field, c, &ell).is_zero()) {
            continue;
        }
        let lead = ell.iter().find(|x| !x.is_zero()).expect("nonzero point").clone();
        for x in &mut ell {
            *x = field.div(x, &lead)?;
        }
        if field.degree() == 1 {
            let r: Vec<Rational> = ell.iter().map(|x| x.as_rational().expect("degree-1 field")).collect();
            rational.push([r[0].clone(), r[1].clone(), r[2].clone()]);
        } else {
            let [x, y, z]: [FieldElem; 3] = ell.try_into().expect("three coordinates");
            orbits.push(RankOneOrbit { field, point: [x, y, z] });
        }
    }
    rational.sort();
    orbits.sort_by_key(|o| (o.degree(), o.field.modulus().to_string()));
    Ok(Attempt::Found(RankOneClassification { rational, orbits }))
}
