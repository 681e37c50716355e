use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{
    conjugate_class, cube_class_mod_q, factor, factor_biguint, gaussian_factor, int, rat, split_prime, square_class,
    GaussianInt, GaussianRational, Rational, SquareClass,
};
use crate::biquotient::{
    compare_with_oracle, family_t1_matrix, family_t3_matrix, is_free, klein_ring, quotient_ring, Complement,
    OracleVerdict, TorusActionMatrix,
};
use crate::error::{Error, Result};
use crate::graded_ring::{kernel_of_square_map, mult_by_class, square_map_matrix, LowDegreeRing};
use crate::invariants::{
    det_cubic, family_cubic, family_net, inflection_lines, inflection_numeric_residual, rank_one_field_class,
    rank_one_quadratic, rotate_alpha_beta, t1_ab, t1_alpha_beta, t1_invariant, t1_pipeline, t1_realize_class,
    t2_bundle_form, t2_det_class, t2_det_class_with, t2_induced_form, t2_quadratic_form, t2_reference_matrix,
    t3_base_ring, t3_delta, t3_discriminant_class, t3_membership_quadratic, t3_numeric_residual,
    t3_reference_quadratic, t3_reference_system, t3_system_over, BinaryCubic, T1Invariant,
};
use crate::linalg::{Matrix, RowSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Arith,
    Ring,
    Freeness,
    T1,
    T2,
    T3,
    All,
}

impl Suite {
    const EACH: [Suite; 6] = [Suite::Arith, Suite::Ring, Suite::Freeness, Suite::T1, Suite::T2, Suite::T3];

    fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Ring => "ring",
            Suite::Freeness => "freeness",
            Suite::T1 => "t1",
            Suite::T2 => "t2",
            Suite::T3 => "t3",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub input: Value,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub passed: usize,
    pub total: usize,
    /// Cases the oracle cannot decide; not counted as failures.
    pub inconclusive: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckResult {
    fn new(suite: Suite, name: &str) -> Self {
        Self {
            suite: suite.to_string(),
            name: name.into(),
            passed: 0,
            total: 0,
            inconclusive: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty() && self.passed + self.inconclusive == self.total
    }

    fn record(&mut self, ok: bool, input: Value, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.counterexamples.push(Counterexample { input, detail: detail() });
        }
    }

    fn record_result(&mut self, r: Result<bool>, input: Value) {
        match r {
            Ok(ok) => self.record(ok, input, || "check returned false".into()),
            Err(e) => self.record(false, input, || e.to_string()),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}/{} {}/{}", self.suite, self.name, self.passed, self.total)?;
        if self.inconclusive > 0 {
            write!(f, " ({} beyond oracle range)", self.inconclusive)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub seconds: f64,
}

impl VerifyReport {
    pub fn success(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn counterexamples_json(&self) -> String {
        let failures: Vec<&CheckResult> = self.checks.iter().filter(|c| !c.counterexamples.is_empty()).collect();
        serde_json::to_string_pretty(&failures).expect("counterexamples serialize")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.ok()).count();
        write!(f, "{} checks, {failed} failed, seed {}, {:.2}s", self.checks.len(), self.seed, self.seconds)
    }
}

/// Runs the named suite with a seeded generator.
pub fn verify(suite: Suite, seed: u64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (s as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        checks.extend(match s {
            Suite::Arith => arith_suite(&mut rng),
            Suite::Ring => ring_suite(&mut rng)?,
            Suite::Freeness => freeness_suite(&mut rng),
            Suite::T1 => t1_suite(&mut rng),
            Suite::T2 => t2_suite(&mut rng),
            Suite::T3 => t3_suite(&mut rng)?,
            Suite::All => unreachable!(),
        });
    }
    Ok(VerifyReport { seed, checks, seconds: start.elapsed().as_secs_f64() })
}

pub(crate) fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

pub(crate) fn random_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

fn random_nonzero_int(rng: &mut impl Rng, r: i64) -> i64 {
    loop {
        let x = rng.gen_range(-r..=r);
        if x != 0 {
            return x;
        }
    }
}

fn random_gaussian(rng: &mut impl Rng) -> GaussianRational {
    loop {
        let z = GaussianRational::new(random_rational(rng), random_rational(rng));
        if !z.is_zero() {
            return z;
        }
    }
}

fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_rows((0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-4..=4))).collect()).collect());
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn proportional(a: &Matrix, b: &Matrix) -> bool {
    let entries = |m: &Matrix| -> Vec<Rational> { m.to_rows().into_iter().flatten().collect() };
    let (ea, eb) = (entries(a), entries(b));
    let Some(k) = eb.iter().position(|x| !x.is_zero()) else {
        return a.is_zero();
    };
    let s = &ea[k] / &eb[k];
    !s.is_zero() && ea.iter().zip(&eb).all(|(x, y)| *x == &s * y)
}

fn arith_suite(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let s = Suite::Arith;
    let mut scaling = CheckResult::new(s, "square_class_scaling");
    let mut product = CheckResult::new(s, "square_class_product");
    let mut round = CheckResult::new(s, "class_round_trip");
    let mut cube = CheckResult::new(s, "cube_class_scaling");
    let mut conj = CheckResult::new(s, "cube_class_conjugate");
    let mut gfac = CheckResult::new(s, "gaussian_factor_reconstructs");
    let mut ifac = CheckResult::new(s, "integer_factor_reconstructs");
    for _ in 0..50 {
        let (x, y) = (random_nonzero(rng), random_nonzero(rng));
        let input = json!({"q": q(&x), "r": q(&y)});
        scaling.record_result(
            square_class(&(&x * &y * &y)).and_then(|a| Ok(a == square_class(&x)?)),
            input.clone(),
        );
        product.record_result(
            (|| Ok(square_class(&(&x * &y))? == square_class(&x)?.combine(&square_class(&y)?)))(),
            input.clone(),
        );
        round.record_result(
            (|| {
                let c = square_class(&x)?;
                Ok(c.to_string().parse::<SquareClass>()? == c)
            })(),
            input,
        );

        let (z, w) = (random_gaussian(rng), random_gaussian(rng));
        let input = json!({"z": [q(&z.re), q(&z.im)], "w": [q(&w.re), q(&w.im)]});
        cube.record_result(
            (|| {
                let c = cube_class_mod_q(&z)?;
                let scaled = cube_class_mod_q(&(&z * &w.pow(3)))?;
                let rational = cube_class_mod_q(&z.scale(&x))?;
                Ok(scaled == c && rational == c && c.to_string().parse::<crate::arith::CubeClassModQ>()? == c)
            })(),
            input.clone(),
        );
        conj.record_result(
            (|| Ok(cube_class_mod_q(&z.conj())? == conjugate_class(&cube_class_mod_q(&z)?)))(),
            input,
        );

        let g = GaussianInt::new(rng.gen_range(-500i64..=500), rng.gen_range(-500i64..=500));
        if g.re.is_zero() && g.im.is_zero() {
            continue;
        }
        gfac.record_result(
            gaussian_factor(&g).map(|f| f.reconstruct() == GaussianRational::from(&g)),
            json!({"gaussian": [g.re.to_string(), g.im.to_string()]}),
        );
        let n = BigInt::from(rng.gen_range(1i64..=1_000_000_000)) * if rng.gen() { 1 } else { -1 };
        ifac.record_result(factor(&n).map(|f| f.value() == n), json!({"n": n.to_string()}));
    }
    let mut split = CheckResult::new(s, "split_prime_norm");
    for p in [5u32, 13, 17, 29, 37, 41, 10_009] {
        let pb = BigUint::from(p);
        split.record_result(
            split_prime(&pb).map(|g| g.norm() == BigInt::from(p) && factor_biguint(&pb).len() == 1),
            json!({"p": p}),
        );
    }
    vec![scaling, product, round, cube, conj, gfac, ifac, split]
}

fn ring_suite(rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let s = Suite::Ring;
    let mut t1 = CheckResult::new(s, "t1_complete_intersection");
    let mut t1_net = CheckResult::new(s, "t1_kernel_is_family_net");
    for i in 0..20 {
        let (b1, c1) = if i == 0 { (6, 8) } else { (rng.gen_range(-20..=20), rng.gen_range(-20..=20)) };
        if b1 == 0 && c1 == 0 {
            continue;
        }
        let input = json!({"b1": b1, "c1": c1});
        match quotient_ring(&family_t1_matrix(b1, c1)) {
            Ok(ring) => {
                let dims = ring.hilbert_function();
                t1.record(ring.is_complete_intersection() && dims == [1, 3, 3, 1, 0], input.clone(), || {
                    format!("graded dimensions {dims:?}")
                });
                let (a, b) = t1_ab(&b1.into(), &c1.into());
                let k = kernel_of_square_map(&ring);
                t1_net.record(k.same_span(&family_net(&a, &b)), input, || "kernel differs from the net".into());
            }
            Err(e) => t1.record(false, input, || e.to_string()),
        }
    }
    let mut t3 = CheckResult::new(s, "t3_complete_intersection");
    let base = quotient_ring(&family_t3_matrix())?;
    for i in 0..20 {
        let m = if i == 0 { Matrix::identity(4) } else { random_invertible(rng, 4) };
        let input = json!({"substitution": m.to_rows().iter().map(|r| r.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>()});
        t3.record_result(
            base.change_of_variables(&m).map(|r| r.is_complete_intersection() && r.hilbert_function() == [1, 4, 6, 4, 1, 0]),
            input,
        );
    }
    let mut klein = CheckResult::new(s, "klein_square_map_surjective");
    for _ in 0..20 {
        let (a0, a1) = (random_nonzero(rng), random_nonzero(rng));
        klein.record_result(
            klein_ring(&a0, &a1).map(|k| square_map_matrix(&k.ring).rank() == k.ring.h4_dim() && k.ring.h4_dim() == 5),
            json!({"a0": q(&a0), "a1": q(&a1)}),
        );
    }
    Ok(vec![t1, t1_net, t3, klein])
}

fn freeness_agreement(c: &mut CheckResult, a: &TorusActionMatrix) {
    let input = json!({"matrix": a.to_string()});
    match compare_with_oracle(a) {
        OracleVerdict::Agree | OracleVerdict::ConfirmedAt(_) => c.record(true, input, String::new),
        OracleVerdict::BeyondRange => {
            c.total += 1;
            c.inconclusive += 1;
        }
        OracleVerdict::Disagree => c.record(false, input, || format!("is_free = {}", is_free(a))),
    }
}

fn freeness_suite(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let s = Suite::Freeness;
    let mut random = CheckResult::new(s, "oracle_agreement_random");
    for k in [3usize, 4] {
        for _ in 0..200 {
            let rows = (0..k).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
            freeness_agreement(&mut random, &TorusActionMatrix::new(rows).expect("square"));
        }
    }
    let mut triangular = CheckResult::new(s, "lower_triangular_unit_diagonal");
    for k in [2usize, 3, 4, 5] {
        for _ in 0..10 {
            let rows: Vec<Vec<i64>> = (0..k)
                .map(|i| (0..k).map(|j| if i == j { 1 } else if j < i { rng.gen_range(-9..=9) } else { 0 }).collect())
                .collect();
            let a = TorusActionMatrix::new(rows).expect("square");
            triangular.record(is_free(&a), json!({"matrix": a.to_string()}), || "reported not free".into());
            if k <= 4 {
                freeness_agreement(&mut triangular, &a);
            }
        }
    }
    let mut family = CheckResult::new(s, "t1_family_free");
    for _ in 0..20 {
        let (b1, c1) = (rng.gen_range(-50..=50), rng.gen_range(-50..=50));
        let a = family_t1_matrix(b1, c1);
        family.record(is_free(&a), json!({"b1": b1, "c1": c1}), || "reported not free".into());
    }
    family.record(is_free(&family_t3_matrix()), json!({"matrix": family_t3_matrix().to_string()}), || {
        "t3 matrix reported not free".into()
    });
    vec![random, triangular, family]
}

fn t1_suite(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let s = Suite::T1;
    let mut det = CheckResult::new(s, "det_cubic_formula");
    let mut infl = CheckResult::new(s, "inflection_cubic_formula");
    let mut numeric = CheckResult::new(s, "inflection_numeric_oracle");
    for _ in 0..20 {
        let (a, b) = (random_rational(rng), random_rational(rng));
        let alpha = int(4) * (&a * &a - &b * &b);
        let beta = int(8) * &a * &b;
        let input = json!({"a": q(&a), "b": q(&b)});
        det.record_result(det_cubic(&family_net(&a, &b)).map(|f| f == family_cubic(&alpha, &beta)), input.clone());
        if alpha.is_zero() && beta.is_zero() {
            continue;
        }
        let f = family_cubic(&alpha, &beta);
        match inflection_lines(&f) {
            Ok(lines) => {
                infl.record(lines == BinaryCubic::from_alpha_beta(&alpha, &beta), input.clone(), || {
                    format!("got {:?}", lines.0)
                });
                let (res, n) = inflection_numeric_residual(&f, &lines);
                numeric.record(res < 1e-9 && n == 3, input, || format!("residual {res:e}, {n} lines"));
            }
            Err(e) => infl.record(false, input, || e.to_string()),
        }
    }
    let mut rotation = CheckResult::new(s, "rotation_law");
    for _ in 0..50 {
        let (alpha, beta) = (random_rational(rng), random_rational(rng));
        let t = random_rational(rng);
        let den = int(1) + &t * &t;
        let (c, d) = ((int(1) - &t * &t) / &den, int(2) * &t / &den);
        let input = json!({"alpha": q(&alpha), "beta": q(&beta), "c": q(&c), "d": q(&d)});
        rotation.record_result(
            (|| {
                let rotated = BinaryCubic::from_alpha_beta(&alpha, &beta).rotate(&c, &d);
                Ok(rotated.alpha_beta()? == rotate_alpha_beta(&alpha, &beta, &c, &d)?)
            })(),
            input,
        );
    }
    let mut pipeline = CheckResult::new(s, "pipeline_matches_closed_form");
    let mut conjugate = CheckResult::new(s, "conjugate_pair_and_swap");
    for _ in 0..20 {
        let (b1, c1) = (rng.gen_range(-12i64..=12), rng.gen_range(-12i64..=12));
        if b1 == 0 && c1 == 0 {
            continue;
        }
        let input = json!({"b1": b1, "c1": c1});
        pipeline.record_result(
            (|| Ok(t1_pipeline(b1, c1)?.invariant == t1_invariant(b1, c1)?))(),
            input.clone(),
        );
        conjugate.record_result(
            (|| {
                let inv = t1_invariant(b1, c1)?;
                let (alpha, beta) = t1_alpha_beta(&b1.into(), &c1.into());
                let swapped = T1Invariant::from_alpha_beta(&beta, &alpha)?;
                Ok(inv.is_conjugate_pair() && swapped == inv && inv.to_string().parse::<T1Invariant>()? == inv)
            })(),
            input,
        );
    }
    let mut realize = CheckResult::new(s, "realize_split_primes");
    for p in [5u32, 13, 17] {
        realize.record_result(
            (|| {
                let w = GaussianRational::from(&split_prime(&BigUint::from(p))?);
                let (b1, c1) = t1_realize_class(&w)?;
                let inv = t1_invariant(b1.clone(), c1.clone())?;
                let (alpha, beta) = t1_alpha_beta(&b1, &c1);
                let z = GaussianInt::new(alpha.to_integer(), beta.to_integer());
                let f = gaussian_factor(&z)?;
                let hit = f.factors.iter().any(|(g, e)| g.norm() == BigInt::from(p) && e % 3 != 0);
                Ok(hit && inv.members().iter().all(|m| m.residue(&BigUint::from(p)) != 0))
            })(),
            json!({"p": p}),
        );
    }
    vec![det, infl, numeric, rotation, pipeline, conjugate, realize]
}

fn t2_suite(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let s = Suite::T2;
    let mut kernel = CheckResult::new(s, "mult_by_y_kernel_is_z");
    let mut gram = CheckResult::new(s, "gram_matches_display");
    let mut class = CheckResult::new(s, "det_class_formula");
    let mut complements = CheckResult::new(s, "class_independent_of_complement");
    let mut bases = CheckResult::new(s, "class_independent_of_basis");
    let mut surj = CheckResult::new(s, "square_map_surjective");
    let mut bundle = CheckResult::new(s, "bundle_form_proportional");
    for i in 0..20 {
        let (a0, a1) = (int(random_nonzero_int(rng, 30)), int(random_nonzero_int(rng, 30)));
        let input = json!({"a0": q(&a0), "a1": q(&a1)});
        let Ok(k) = klein_ring(&a0, &a1) else {
            kernel.record(false, input, || "klein ring failed".into());
            continue;
        };
        kernel.record_result(
            mult_by_class(&k.ring, &k.y).map(|m| m.kernel.len() == 1 && RowSpace::new(5, &m.kernel).contains(&k.z)),
            input.clone(),
        );
        gram.record_result(
            (|| Ok(proportional(&t2_quadratic_form(&a0, &a1)?, &t2_reference_matrix(&a0, &a1)?)))(),
            input.clone(),
        );
        let expected = square_class(&-(&a0 * &a1)).expect("nonzero");
        class.record_result(t2_det_class(&a0, &a1).map(|c| c == expected), input.clone());
        surj.record(square_map_matrix(&k.ring).rank() == 5, input.clone(), || "rank below 5".into());
        if i < 5 {
            bundle.record_result(
                (|| {
                    let c = Complement::DropLargest;
                    Ok(proportional(&t2_bundle_form(&a0, &a1, &c)?, &t2_induced_form(&a0, &a1, &c)?))
                })(),
                input.clone(),
            );
        }
        let y_row = RowSpace::new(5, std::slice::from_ref(&k.y));
        for _ in 0..20 {
            let vecs: Vec<Vec<Rational>> = loop {
                let v: Vec<Vec<Rational>> =
                    (0..4).map(|_| (0..5).map(|_| int(rng.gen_range(-3..=3))).collect()).collect();
                let mut all = v.clone();
                all.push(k.y.clone());
                if RowSpace::new(5, &all).rank() == 5 {
                    break v;
                }
            };
            debug_assert_eq!(y_row.rank(), 1);
            let cinput = json!({"a0": q(&a0), "a1": q(&a1), "complement": vecs.iter().map(|v| v.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>()});
            complements.record_result(
                t2_det_class_with(&a0, &a1, &Complement::Vectors(vecs)).map(|c| c == expected),
                cinput,
            );
            let p = random_invertible(rng, 4);
            let binput = json!({"a0": q(&a0), "a1": q(&a1), "basis_change": p.to_rows().iter().map(|r| r.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>()});
            bases.record_result(
                (|| {
                    let g = t2_induced_form(&a0, &a1, &Complement::default())?;
                    let h = p.transpose().mul(&g).mul(&p);
                    Ok(square_class(&h.det())? == expected)
                })(),
                binput,
            );
        }
    }
    vec![kernel, gram, class, complements, bases, surj, bundle]
}

fn random_t3_params(rng: &mut ChaCha8Rng) -> (Rational, Rational, Rational) {
    loop {
        let (a, b, c) = (random_nonzero(rng), random_nonzero(rng), random_nonzero(rng));
        if t3_delta(&a, &b, &c).is_ok_and(|d| !d.is_zero()) {
            return (a, b, c);
        }
    }
}

fn t3_suite(rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let s = Suite::T3;
    let base = t3_base_ring()?;
    let mut system = CheckResult::new(s, "system_matches_reference");
    let mut quad = CheckResult::new(s, "membership_quadratic_formula");
    let mut rank_one = CheckResult::new(s, "rank_one_members");
    let mut delta = CheckResult::new(s, "discriminant_class_formula");
    let mut field = CheckResult::new(s, "rank_one_field_class");
    let mut subst = CheckResult::new(s, "class_invariant_under_substitution");
    let mut numeric = CheckResult::new(s, "numeric_rank_one_oracle");
    for i in 0..20 {
        let (a, b, c) = random_t3_params(rng);
        let input = json!({"a": q(&a), "b": q(&b), "c": q(&c)});
        let sys = match t3_system_over(base.clone(), &a, &b, &c) {
            Ok(x) => x,
            Err(e) => {
                system.record(false, input, || e.to_string());
                continue;
            }
        };
        system.record_result(t3_reference_system(&a, &b, &c).map(|r| r.same_span(&sys)), input.clone());
        let reference = t3_reference_quadratic(&a, &b, &c)?;
        quad.record_result(t3_membership_quadratic(&a, &b, &c).map(|p| p == reference), input.clone());
        rank_one.record_result(rank_one_quadratic(&sys, &a, &b).map(|p| p == reference), input.clone());
        let expected = square_class(&t3_delta(&a, &b, &c)?)?;
        delta.record_result(t3_discriminant_class(&a, &b, &c).map(|x| x == expected), input.clone());
        field.record_result(rank_one_field_class(&sys).map(|x| x == expected), input.clone());
        if i < 3 {
            for _ in 0..20 {
                let m = random_invertible(rng, 3);
                let sinput = json!({"a": q(&a), "b": q(&b), "c": q(&c), "substitution": m.to_rows().iter().map(|r| r.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>()});
                subst.record_result(
                    sys.transform(&m).and_then(|t| rank_one_field_class(&t)).map(|x| x == expected),
                    sinput,
                );
            }
        }
        if i < 5 {
            match t3_numeric_residual(&a, &b, &c) {
                Ok((res, used)) => numeric.record(res < 1e-9 && used == 2, input, || format!("residual {res:e}, {used} points")),
                Err(e) => numeric.record(false, input, || e.to_string()),
            }
        }
    }
    let mut primes = CheckResult::new(s, "p_times_p_plus_2_classes");
    for p in [3i64, 5, 7, 11, 13] {
        primes.record_result(
            (|| Ok(t3_discriminant_class(&int(1), &int(p + 2), &int(1))? == square_class(&int(p * (p + 2)))?))(),
            json!({"a": 1, "b": p + 2, "c": 1}),
        );
    }
    Ok(vec![system, quad, rank_one, delta, field, subst, numeric, primes])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("freeness".parse::<Suite>().unwrap(), Suite::Freeness);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn arith_suite_passes() {
        let r = verify(Suite::Arith, 1).unwrap();
        assert!(r.success(), "{r}");
    }

    #[test]
    fn failures_are_recorded() {
        let mut c = CheckResult::new(Suite::Arith, "x");
        c.record(true, json!(1), String::new);
        c.record(false, json!({"q": "1/2"}), || "bad".into());
        assert!(!c.ok());
        assert_eq!(c.to_string(), "FAIL arith/x 1/2");
    }
}
