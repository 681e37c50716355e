use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Poly;
use crate::to_f64;

/// A polynomial with `f64` coefficients, scaled so the largest is 1.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    terms: Vec<(Vec<u32>, f64)>,
}

impl FloatPoly {
    pub fn new(p: &Poly) -> Self {
        let mut terms: Vec<(Vec<u32>, f64)> = p.terms().map(|(e, c)| (e.clone(), to_f64(c))).collect();
        let scale = terms.iter().map(|(_, c)| c.abs()).fold(0.0, f64::max);
        if scale > 0.0 {
            for (_, c) in &mut terms {
                *c /= scale;
            }
        }
        Self { terms }
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(Complex64::new(*c, 0.0), |acc, (&k, xi)| acc * xi.powu(k)))
            .sum()
    }

    pub fn partial(&self, x: &[Complex64], var: usize) -> Complex64 {
        self.terms
            .iter()
            .filter(|(e, _)| e[var] > 0)
            .map(|(e, c)| {
                e.iter().zip(x).enumerate().fold(Complex64::new(*c, 0.0), |acc, (i, (&k, xi))| {
                    if i == var {
                        acc * xi.powu(k - 1) * f64::from(k)
                    } else {
                        acc * xi.powu(k)
                    }
                })
            })
            .sum()
    }

    /// Sum of `|c| * |x|^e`, the natural scale for a residual at `x`.
    pub fn magnitude(&self, x: &[Complex64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(c.abs(), |acc, (&k, xi)| acc * xi.norm().powi(k as i32)))
            .sum()
    }
}

/// Solutions of two homogeneous equations in three variables found by
/// complex Newton iteration in the affine chart `x[chart] = 1`, from
/// seeded random starts with log-uniform modulus in `[0.1, 1000]`,
/// deduplicated.
pub fn solve_in_chart(eqs: &[Poly; 2], chart: usize, seed: u64, starts: usize, want: usize) -> Vec<[Complex64; 3]> {
    let f = [FloatPoly::new(&eqs[0]), FloatPoly::new(&eqs[1])];
    let free: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<[Complex64; 3]> = Vec::new();
    for _ in 0..starts {
        let mut x = [Complex64::new(1.0, 0.0); 3];
        for &i in &free {
            let r = 10f64.powf(rng.gen_range(-1.0..3.0));
            x[i] = Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
        }
        if let Some(sol) = newton(&f, &free, x) {
            if !found.iter().any(|s| (0..3).all(|i| (s[i] - sol[i]).norm() < 1e-7 * (1.0 + s[i].norm()))) {
                found.push(sol);
                if found.len() >= want {
                    break;
                }
            }
        }
    }
    found
}

fn newton(f: &[FloatPoly; 2], free: &[usize], mut x: [Complex64; 3]) -> Option<[Complex64; 3]> {
    let (u, v) = (free[0], free[1]);
    for iter in 0..200 {
        let r = [f[0].eval(&x), f[1].eval(&x)];
        let j = [[f[0].partial(&x, u), f[0].partial(&x, v)], [f[1].partial(&x, u), f[1].partial(&x, v)]];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.norm() < 1e-300 {
            return None;
        }
        let du = (r[0] * j[1][1] - r[1] * j[0][1]) / det;
        let dv = (j[0][0] * r[1] - j[1][0] * r[0]) / det;
        x[u] -= du;
        x[v] -= dv;
        if !x.iter().all(|c| c.re.is_finite() && c.im.is_finite()) || x[u].norm() > 1e8 || x[v].norm() > 1e8 {
            return None;
        }
        let step = du.norm() + dv.norm();
        if step < 1e-15 * (1.0 + x[u].norm() + x[v].norm()) || (iter > 5 && step < 1e-13) {
            let res = f.iter().map(|p| p.eval(&x).norm() / p.magnitude(&x).max(1e-300)).fold(0.0, f64::max);
            return (res < 1e-11).then_some(x);
        }
    }
    None
}
