use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::arith::{int, square_class, Rational, SquareClass};
use crate::biquotient::{
    circle_bundle_degree4, family_t3_matrix, family_t3_substitution, quotient_ring_to_degree, Complement,
};
use crate::error::{Error, Result};
use crate::graded_ring::{kernel_of_square_map, GradedQuotient, QuadricSystem};
use crate::poly::Poly;
use crate::upoly::UPoly;
use crate::to_f64;

use super::numeric::solve_in_chart;
use super::rank_one::{annihilator_conics, rank_one_elements};

fn check_nonzero(a: &Rational, b: &Rational, c: &Rational) -> Result<()> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::ZeroInput("(a, b, c) must all be nonzero"));
    }
    Ok(())
}

/// The 8-dimensional ring over Q after the change of variables, through
/// degree 4.
pub fn t3_base_ring() -> Result<GradedQuotient> {
    static BASE: OnceLock<GradedQuotient> = OnceLock::new();
    if let Some(r) = BASE.get() {
        return Ok(r.clone());
    }
    let r = quotient_ring_to_degree(&family_t3_matrix(), 4)?.change_of_variables(&family_t3_substitution())?;
    Ok(BASE.get_or_init(|| r).clone())
}

/// Kernel of `S^2 W -> H^4/(y V)` for `y = x4 - (a x1 + b x2 + c x3)`, with
/// `W` spanned by `x1, x2, x3`.
pub fn t3_system(a: &Rational, b: &Rational, c: &Rational) -> Result<QuadricSystem> {
    t3_system_over(t3_base_ring()?, a, b, c)
}

pub fn t3_system_over(base: GradedQuotient, a: &Rational, b: &Rational, c: &Rational) -> Result<QuadricSystem> {
    let y = vec![-a.clone(), -b.clone(), -c.clone(), int(1)];
    let data = circle_bundle_degree4(base, &y, Complement::Drop(3))?;
    Ok(kernel_of_square_map(&data))
}

/// `x1^2, x2^2, x3^2 - x1 x2, (a x1 + b x2 + c x3)^2 - x1 x2`.
pub fn t3_reference_system(a: &Rational, b: &Rational, c: &Rational) -> Result<QuadricSystem> {
    let names = Poly::default_names(3);
    let p = |s: &str| Poly::parse(s, &names).expect("fixed quadric");
    let lin = Poly::linear(&[a.clone(), b.clone(), c.clone()]);
    let last = &(&lin * &lin) - &p("x1*x2");
    QuadricSystem::from_polys(3, &[p("x1^2"), p("x2^2"), p("x3^2 - x1*x2"), last])
}

/// Monic quadratic in `t` whose roots make `(a x1 + b x2 + t x3)^2` a member
/// of the system, found by reducing modulo the system: the residue is a
/// polynomial in `t` times the class of `x1 x2`.
pub fn membership_quadratic(system: &QuadricSystem, a: &Rational, b: &Rational) -> Result<UPoly> {
    if system.ambient_dim() != 3 {
        return Err(Error::DimensionMismatch("membership needs quadrics in 3 variables".into()));
    }
    let names = Poly::default_names(3);
    let x3 = Poly::var(3, 2);
    let head = Poly::linear(&[a.clone(), b.clone(), int(0)]);
    let parts = [&head * &head, (&head * &x3).scale(&int(2)), &x3 * &x3];
    let unit = system.reduce(&Poly::parse("x1*x2", &names)?)?;
    let pivot = unit
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Degenerate("x1*x2 lies in the system".into()))?;
    let mut coeffs = Vec::with_capacity(3);
    for part in &parts {
        let r = system.reduce(part)?;
        let k = &r[pivot] / &unit[pivot];
        if r.iter().zip(&unit).any(|(x, u)| *x != &k * u) {
            return Err(Error::Degenerate("residue is not a multiple of the class of x1*x2".into()));
        }
        coeffs.push(k);
    }
    let p = UPoly::new(coeffs);
    if p.degree() != Some(2) {
        return Err(Error::Degenerate(format!("membership polynomial {p} is not quadratic")));
    }
    Ok(p.monic())
}

/// Membership quadratic computed from the ring.
pub fn t3_membership_quadratic(a: &Rational, b: &Rational, c: &Rational) -> Result<UPoly> {
    check_nonzero(a, b, c)?;
    membership_quadratic(&t3_system(a, b, c)?, a, b)
}

/// `t^2 + (1/c)(-c^2 - 2ab + 1) t + 2ab`.
pub fn t3_reference_quadratic(a: &Rational, b: &Rational, c: &Rational) -> Result<UPoly> {
    check_nonzero(a, b, c)?;
    let ab2 = int(2) * a * b;
    Ok(UPoly::new(vec![ab2.clone(), (-(c * c) - &ab2 + Rational::one()) / c, Rational::one()]))
}

/// `4[((2ab - c^2 - 1)/(2c))^2 - 1]`.
pub fn t3_delta(a: &Rational, b: &Rational, c: &Rational) -> Result<Rational> {
    check_nonzero(a, b, c)?;
    let x = (int(2) * a * b - c * c - Rational::one()) / (int(2) * c);
    Ok(int(4) * (&x * &x - Rational::one()))
}

pub fn quadratic_discriminant(p: &UPoly) -> Result<Rational> {
    if p.degree() != Some(2) {
        return Err(Error::InvalidArgument(format!("{p} is not quadratic")));
    }
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    Ok(&b * &b - int(4) * a * c)
}

/// Square class of the discriminant of the membership quadratic.
pub fn t3_discriminant_class(a: &Rational, b: &Rational, c: &Rational) -> Result<SquareClass> {
    let delta = quadratic_discriminant(&t3_membership_quadratic(a, b, c)?)?;
    if delta.is_zero() {
        return Err(Error::Degenerate(format!("discriminant vanishes at ({a}, {b}, {c})")));
    }
    square_class(&delta)
}

/// The membership quadratic rebuilt from the rank-one classification of a
/// system: the members other than `x1^2` and `x2^2` must be `l^2` with
/// `l = (1, b/a, t/a)`, and the result is the monic polynomial whose roots
/// are those `t`.
pub fn rank_one_quadratic(system: &QuadricSystem, a: &Rational, b: &Rational) -> Result<UPoly> {
    if a.is_zero() {
        return Err(Error::ZeroInput("a"));
    }
    let r = rank_one_elements(system)?;
    let unit = |i: usize| -> [Rational; 3] { std::array::from_fn(|j| if i == j { int(1) } else { int(0) }) };
    let ratio = b / a;
    let mut extra = Vec::new();
    for l in &r.rational {
        if *l == unit(0) || *l == unit(1) {
            continue;
        }
        if l[0] != int(1) || l[1] != ratio {
            return Err(Error::Degenerate(format!("unexpected rational member {l:?}")));
        }
        extra.push(UPoly::new(vec![-(a * &l[2]), int(1)]));
    }
    if r.rational.len() - extra.len() != 2 {
        return Err(Error::Degenerate("x1^2 or x2^2 is missing".into()));
    }
    for o in &r.orbits {
        let field = o.field();
        let second = o.ratio(1, 0)?;
        if second.as_rational().as_ref() != Some(&ratio) {
            return Err(Error::Degenerate(format!("orbit {o} is not of the form (1, b/a, t/a)")));
        }
        extra.push(field.char_poly(&field.scale(&o.ratio(2, 0)?, a)).squarefree_part());
    }
    let q = extra.iter().fold(UPoly::constant(int(1)), |acc, p| acc.mul(p));
    if q.degree() != Some(2) {
        return Err(Error::Degenerate(format!("rank-one members give {q}, not a quadratic")));
    }
    Ok(q.monic())
}

/// Square class of the field of the non-rational rank-one members, trivial
/// when they are rational.
pub fn rank_one_field_class(system: &QuadricSystem) -> Result<SquareClass> {
    let r = rank_one_elements(system)?;
    match (r.rational.len(), r.orbits.as_slice()) {
        (2, [o]) if o.degree() == 2 => {
            o.field_square_class().ok_or_else(|| Error::Degenerate("quadratic field without class".into()))
        }
        (4, []) => Ok(SquareClass::trivial()),
        _ => Err(Error::Degenerate(format!("{} rational members and {} orbits", r.rational.len(), r.orbits.len()))),
    }
}

/// Numeric cross-check of the membership quadratic: intersect two
/// annihilator conics in the chart `l1 = 1`, keep the points with
/// `l2 = b/a`, and evaluate the quadratic at `a * l3`. Returns the largest
/// relative residual and the number of points used.
pub fn t3_numeric_residual(a: &Rational, b: &Rational, c: &Rational) -> Result<(f64, usize)> {
    let quad = t3_membership_quadratic(a, b, c)?;
    let conics = annihilator_conics(&t3_system(a, b, c)?)?;
    if conics.len() < 2 {
        return Err(Error::Degenerate("fewer than two annihilator conics".into()));
    }
    let (af, bf) = (to_f64(a), to_f64(b));
    let sols = solve_in_chart(&[conics[0].clone(), conics[1].clone()], 0, 0x7e3, 400, 4);
    let coeffs: Vec<f64> = (0..3).map(|k| to_f64(&quad.coeff(k))).collect();
    let mut worst: f64 = 0.0;
    let mut used = 0;
    for s in sols {
        if (s[1] * af - bf).norm() > 1e-7 * (1.0 + bf.abs()) {
            continue;
        }
        let t = s[2] * af;
        let value = coeffs.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * t + c);
        let scale: f64 = coeffs.iter().enumerate().map(|(k, c)| c.abs() * t.norm().powi(k as i32)).sum();
        worst = worst.max(value.norm() / scale.max(f64::MIN_POSITIVE));
        used += 1;
    }
    Ok((worst, used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn system_matches_reference() {
        for (a, b, c) in [(int(1), int(1), int(1)), (rat(2, 3), int(-5), int(7))] {
            let s = t3_system(&a, &b, &c).unwrap();
            assert!(s.same_span(&t3_reference_system(&a, &b, &c).unwrap()));
        }
    }

    #[test]
    fn quadratic_examples() {
        let q = t3_membership_quadratic(&int(1), &int(1), &int(1)).unwrap();
        assert_eq!(q.to_string(), "t^2 - 2*t + 2");
        let (a, b, c) = (rat(3, 2), int(-2), rat(5, 7));
        let q = t3_membership_quadratic(&a, &b, &c).unwrap();
        assert_eq!(q, t3_reference_quadratic(&a, &b, &c).unwrap());
        assert_eq!(q.coeff(0), int(2) * &a * &b);
        assert!(t3_membership_quadratic(&int(0), &int(1), &int(1)).is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(t3_discriminant_class(&int(1), &int(1), &int(1)).unwrap().to_string(), "-1");
        for p in [3i64, 5, 7, 11] {
            let cls = t3_discriminant_class(&int(1), &int(p + 2), &int(1)).unwrap();
            assert_eq!(cls, square_class(&int(p * (p + 2))).unwrap());
        }
        // (2ab - c^2 - 1)^2 = 4c^2 at (a, b, c) = (2, 1, 1)
        assert_eq!(t3_delta(&int(2), &int(1), &int(1)).unwrap(), int(0));
        assert!(matches!(t3_discriminant_class(&int(2), &int(1), &int(1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn rank_one_rebuilds_quadratic() {
        for (a, b, c) in [(int(1), int(1), int(1)), (int(3), int(-2), rat(1, 3)), (int(1), int(5), int(1))] {
            let s = t3_system(&a, &b, &c).unwrap();
            let q = rank_one_quadratic(&s, &a, &b).unwrap();
            assert_eq!(q, t3_reference_quadratic(&a, &b, &c).unwrap());
            assert_eq!(rank_one_field_class(&s).unwrap(), t3_discriminant_class(&a, &b, &c).unwrap());
        }
    }

    #[test]
    fn numeric_roots_agree() {
        for (a, b, c) in [(int(1), int(1), int(1)), (int(2), int(-3), int(5)), (rat(1, 2), int(4), rat(-3, 2))] {
            let (res, used) = t3_numeric_residual(&a, &b, &c).unwrap();
            assert_eq!(used, 2, "({a}, {b}, {c})");
            assert!(res < 1e-9, "residual {res}");
        }
    }
}
