use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cubic::{
    det_cubic, inflection_lines, singular_points, tangent_cone, BinaryCubic, SearchStatus, TernaryCubic,
};
use super::numeric::solve_in_chart;
use crate::arith::{conjugate_class, cube_class_mod_q, int, rational_sqrt, CubeClassModQ, GaussianRational, Rational};
use crate::biquotient::{family_t1_matrix, quotient_ring_to_degree};
use crate::error::{Error, Result};
use crate::graded_ring::{kernel_of_square_map, QuadricSystem};
use crate::linalg::Matrix;

/// Unordered pair `{class(alpha + beta i), class(beta + alpha i)}`, stored
/// sorted by serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct T1Invariant {
    members: [CubeClassModQ; 2],
}

impl T1Invariant {
    pub fn new(x: CubeClassModQ, y: CubeClassModQ) -> Self {
        let mut members = [x, y];
        members.sort_by_key(ToString::to_string);
        Self { members }
    }

    pub fn from_alpha_beta(alpha: &Rational, beta: &Rational) -> Result<Self> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::ZeroInput("alpha + beta i"));
        }
        let x = cube_class_mod_q(&GaussianRational::new(alpha.clone(), beta.clone()))?;
        let y = cube_class_mod_q(&GaussianRational::new(beta.clone(), alpha.clone()))?;
        Ok(Self::new(x, y))
    }

    pub fn members(&self) -> &[CubeClassModQ; 2] {
        &self.members
    }

    pub fn contains(&self, c: &CubeClassModQ) -> bool {
        self.members.contains(c)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.iter().all(CubeClassModQ::is_trivial)
    }

    /// Whether the two members are conjugate classes of each other.
    pub fn is_conjugate_pair(&self) -> bool {
        conjugate_class(&self.members[0]) == self.members[1]
    }
}

impl fmt::Display for T1Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}];[{}]", self.members[0], self.members[1])
    }
}

impl FromStr for T1Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invariant pair {s:?}"));
        let (x, y) = s.split_once(';').ok_or_else(bad)?;
        let strip = |t: &str| t.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).map(str::to_owned);
        let x: CubeClassModQ = strip(x).ok_or_else(bad)?.parse()?;
        let y: CubeClassModQ = strip(y).ok_or_else(bad)?.parse()?;
        let inv = Self::new(x, y);
        if inv.to_string() != s.trim() {
            return Err(Error::Parse(format!("invariant pair {s:?} is not in canonical order")));
        }
        Ok(inv)
    }
}

impl Serialize for T1Invariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for T1Invariant {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `a = c1/4`, `b = (2 b1 - c1)/4`.
pub fn t1_ab(b1: &BigInt, c1: &BigInt) -> (Rational, Rational) {
    let four = BigInt::from(4);
    (Rational::new(c1.clone(), four.clone()), Rational::new(BigInt::from(2) * b1 - c1, four))
}

/// `alpha = 4(a^2 - b^2)`, `beta = 8ab`.
pub fn t1_alpha_beta(b1: &BigInt, c1: &BigInt) -> (Rational, Rational) {
    let (a, b) = t1_ab(b1, c1);
    (int(4) * (&a * &a - &b * &b), int(8) * &a * &b)
}

pub fn t1_invariant(b1: impl Into<BigInt>, c1: impl Into<BigInt>) -> Result<T1Invariant> {
    let (b1, c1) = (b1.into(), c1.into());
    if b1.is_zero() && c1.is_zero() {
        return Err(Error::ZeroInput("(b1, c1)"));
    }
    let (alpha, beta) = t1_alpha_beta(&b1, &c1);
    T1Invariant::from_alpha_beta(&alpha, &beta)
}

/// Intermediate data of the ring-to-invariant computation.
#[derive(Clone, Debug)]
pub struct NodalCubicData {
    pub cubic: TernaryCubic,
    pub node: [BigInt; 3],
    /// The cubic after moving the node to `[1,0,0]` and the tangent cone to
    /// a multiple of `mu^2 + nu^2`.
    pub normalized: TernaryCubic,
    pub inflection: BinaryCubic,
    pub alpha: Rational,
    pub beta: Rational,
    pub invariant: T1Invariant,
}

/// Net of quadrics, determinant cubic, node, tangent cone, inflection lines.
pub fn nodal_cubic_invariant(net: &QuadricSystem) -> Result<NodalCubicData> {
    let cubic = det_cubic(net)?;
    let sing = singular_points(&cubic)?;
    if sing.status != SearchStatus::Complete || sing.points.len() != 1 {
        return Err(Error::Degenerate(format!("{cubic} does not have exactly one singular point")));
    }
    let node = sing.points[0].clone();
    let pivot = node.iter().position(|x| !x.is_zero()).expect("projective point");
    let mut m = Matrix::zeros(3, 3);
    let mut col = 1;
    for i in 0..3 {
        m[(i, 0)] = Rational::from_integer(node[i].clone());
        if i != pivot {
            m[(i, col)] = int(1);
            col += 1;
        }
    }
    let moved = cubic.transform(&m)?;
    let q = tangent_cone(&moved)?;
    let [a, b, c] = q.0.clone();
    if a.is_zero() {
        return Err(Error::Degenerate(format!("tangent cone {q} is isotropic over Q")));
    }
    let half_b = &b / int(2);
    let s = rational_sqrt(&(&a * &c - &half_b * &half_b))
        .filter(|s| !s.is_zero())
        .ok_or_else(|| Error::Degenerate(format!("tangent cone {q} is not similar to mu^2 + nu^2")))?;
    // mu = (mu' - (B/2) nu'/s) / A, nu = nu'/s
    let mut n = Matrix::identity(3);
    n[(1, 1)] = a.recip();
    n[(1, 2)] = -(&half_b / (&a * &s));
    n[(2, 2)] = s.recip();
    let normalized = moved.transform(&n)?;
    let inflection = inflection_lines(&normalized)?;
    let (alpha, beta) = inflection.alpha_beta()?;
    let invariant = T1Invariant::from_alpha_beta(&alpha, &beta)?;
    Ok(NodalCubicData { cubic, node, normalized, inflection, alpha, beta, invariant })
}

/// The invariant computed from the ring: quotient ring, kernel of the
/// square map, determinant cubic and its inflection lines.
pub fn t1_pipeline(b1: i64, c1: i64) -> Result<NodalCubicData> {
    if b1 == 0 && c1 == 0 {
        return Err(Error::ZeroInput("(b1, c1)"));
    }
    let ring = quotient_ring_to_degree(&family_t1_matrix(b1, c1), 4)?;
    nodal_cubic_invariant(&kernel_of_square_map(&ring))
}

/// `(b1, c1)` with `alpha + beta i = 4 (a + b i)^2` and `a + b i` an integral
/// multiple of `w^2`, so the invariant contains `cube_class(w)`.
pub fn t1_realize_class(w: &GaussianRational) -> Result<(BigInt, BigInt)> {
    if w.is_zero() {
        return Err(Error::ZeroInput("realizing element"));
    }
    let (z, _) = w.pow(2).clear_denominators();
    let (a, b) = (z.re, z.im);
    Ok((BigInt::from(2) * (&a + &b), BigInt::from(4) * a))
}

/// Largest normalized residual of the returned inflection cubic at the
/// numerically computed intersections of `F` with its Hessian, together
/// with the number of distinct intersections found away from the node.
pub fn inflection_numeric_residual(f: &TernaryCubic, lines: &BinaryCubic) -> (f64, usize) {
    let chart = if lines.0[0].is_zero() { 1 } else { 2 };
    let sols = solve_in_chart(&[f.poly().clone(), f.hessian()], chart, 0x5eed, 400, 3);
    let residual = sols
        .iter()
        .map(|s| {
            let (mu, nu) = (s[1], s[2]);
            let scale: f64 = (0..4)
                .map(|k| crate::to_f64(&lines.0[k]).abs() * mu.norm().powi(3 - k as i32) * nu.norm().powi(k as i32))
                .sum();
            lines.eval_f64(mu, nu).norm() / scale.max(f64::MIN_POSITIVE)
        })
        .fold(0.0, f64::max);
    let distinct = sols
        .iter()
        .enumerate()
        .filter(|(i, s)| sols[..*i].iter().all(|t| (s[1] * t[2] - s[2] * t[1]).norm() > 1e-7))
        .count();
    (residual, distinct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::invariants::cubic::family_cubic;

    #[test]
    fn closed_form_examples() {
        let inv = t1_invariant(2, 0).unwrap();
        assert!(inv.is_trivial());
        assert_eq!(inv.to_string(), "[];[]");
        let inv = t1_invariant(6, 8).unwrap();
        assert_eq!(inv.to_string(), "[5:1];[5:2]");
        assert!(inv.is_conjugate_pair());
        assert_eq!(inv.to_string().parse::<T1Invariant>().unwrap(), inv);
        assert!(t1_invariant(0, 0).is_err());
        assert!("[5:2];[5:1]".parse::<T1Invariant>().is_err());
    }

    #[test]
    fn pipeline_matches_closed_form() {
        for (b1, c1) in [(6, 8), (1, 0), (0, 1), (-3, 5), (7, -2)] {
            let data = t1_pipeline(b1, c1).unwrap();
            assert_eq!(data.invariant, t1_invariant(b1, c1).unwrap(), "({b1}, {c1})");
        }
    }

    #[test]
    fn realize_examples() {
        assert_eq!(t1_realize_class(&GaussianRational::one()).unwrap(), (2.into(), 4.into()));
        let w = GaussianRational::from_ints(2, 1);
        let (b1, c1) = t1_realize_class(&w).unwrap();
        assert_eq!((b1.clone(), c1.clone()), (14.into(), 12.into()));
        assert!(t1_invariant(b1, c1).unwrap().contains(&cube_class_mod_q(&w).unwrap()));
        let (b1, c1) = t1_realize_class(&GaussianRational::from_ints(3, 2)).unwrap();
        assert_eq!((b1, c1), (34.into(), 20.into()));
        let w = GaussianRational::new(rat(1, 2), rat(-1, 3));
        let (b1, c1) = t1_realize_class(&w).unwrap();
        assert!(t1_invariant(b1, c1).unwrap().contains(&cube_class_mod_q(&w).unwrap()));
    }

    #[test]
    fn numeric_oracle_agrees() {
        for (alpha, beta) in [(int(12), int(16)), (int(3), int(0)), (int(0), int(-4)), (rat(5, 2), int(7))] {
            let f = family_cubic(&alpha, &beta);
            let lines = inflection_lines(&f).unwrap();
            let (res, n) = inflection_numeric_residual(&f, &lines);
            assert_eq!(n, 3);
            assert!(res < 1e-9, "residual {res}");
        }
    }
}
