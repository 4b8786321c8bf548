//! The sets `Y`, `Z`, `W` attached to `(n, c, m)`, the explicit basis of the
//! `(c,1)` polynilpotent multiplier of the free nilpotent group of class `n`
//! on `m` generators, and machine checks of the statements behind it.
//!
//! - `Y`: basic commutators on `x_1..x_m` of weights `c+1 ..= c+n`.
//! - `Z`: pairs `[b, a]` with `b > a` in `Y`.
//! - `W`: pairs `[b, a]` of basics with `b > a`, `wt(b) >= c+n+1`,
//!   `wt(a) >= c+1` and `wt(b) + wt(a) <= 2c+2n+1`.
//!
//! Membership and independence statements are checked exhaustively. The
//! two congruences are checked on seeded random samples through their
//! valuation consequences, which is what the Magnus oracle can decide.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hall::{enumerate_hall_basis_capped, is_basic, Commutator, HallBasis, DEFAULT_MAX_ELEMENTS};
use crate::magnus::{integer_rank, CommutatorEvaluator, LeadingTermVector, MagnusElement, Valuation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YZWSets {
    pub n: u32,
    pub c: u32,
    pub m: u32,
    pub y: Vec<Commutator>,
    pub z: Vec<Commutator>,
    pub w: Vec<Commutator>,
}

/// What a [`VerificationReport`] verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// `Z` consists of basic commutators on `X` (needs `c >= n-1`).
    Lemma22,
    /// Commutators of `gamma_{c+1}` reduce to products over `Y` pairs.
    Lemma23,
    /// `W` consists of basic commutators on `X` (needs `c > 2n-2`).
    Lemma24,
    /// `[gamma_{c+n+1}, gamma_{c+1}]` is generated by `W` modulo `gamma_{2c+2n+2}`.
    Lemma25,
    /// Independence of `Z` together with `W`.
    Thm26,
    /// Basic commutators of weights `c+1..=c+n` are independent modulo `gamma_{c+n+1}`.
    Hall,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::Lemma22,
        Target::Lemma23,
        Target::Lemma24,
        Target::Lemma25,
        Target::Thm26,
        Target::Hall,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Target::Lemma22 => "lemma2.2",
            Target::Lemma23 => "lemma2.3",
            Target::Lemma24 => "lemma2.4",
            Target::Lemma25 => "lemma2.5",
            Target::Thm26 => "thm2.6",
            Target::Hall => "hall",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The parameters do not satisfy the statement's hypothesis; nothing was checked.
    HypothesisViolation,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisViolation => "hypothesis_violation",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Status::Pass, Status::Fail, Status::HypothesisViolation]
            .into_iter()
            .find(|st| st.as_str() == s)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub target: Target,
    pub n: u32,
    pub c: u32,
    pub m: u32,
    pub truncation: Option<u32>,
    pub trials: Option<u32>,
    pub seed: Option<u64>,
    pub status: Status,
    /// Number of elements or trials that were checked.
    pub checked: u64,
    /// Present exactly when `status` is [`Status::Fail`].
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

impl VerificationReport {
    fn new(target: Target, n: u32, c: u32, m: u32) -> Self {
        VerificationReport {
            target,
            n,
            c,
            m,
            truncation: None,
            trials: None,
            seed: None,
            status: Status::Pass,
            checked: 0,
            counterexample: None,
            note: None,
        }
    }

    fn violation(mut self, hypothesis: &str) -> Self {
        self.status = Status::HypothesisViolation;
        self.note = Some(format!(
            "hypothesis {hypothesis} does not hold for n={}, c={}",
            self.n, self.c
        ));
        self
    }

    fn fail(&mut self, counterexample: String) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.counterexample = Some(counterexample);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn c_at_least_n_minus_1(n: u32, c: u32) -> bool {
    c + 1 >= n
}

fn c_above_2n_minus_2(n: u32, c: u32) -> bool {
    c + 2 > 2 * n
}

fn check_params(n: u32, m: u32) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "n and m must be at least 1 (got n={n}, m={m})"
        )));
    }
    Ok(())
}

/// Builds `Y`, `Z` and `W`. `c = 0` is accepted so that hypothesis checks
/// can report on it; every statement here needs `c >= 1` in practice.
pub fn build_yzw(n: u32, c: u32, m: u32) -> Result<YZWSets> {
    build_yzw_capped(n, c, m, DEFAULT_MAX_ELEMENTS)
}

pub fn build_yzw_capped(n: u32, c: u32, m: u32, cap: usize) -> Result<YZWSets> {
    check_params(n, m)?;
    // `W` needs `b` up to weight (2c+2n+1) - (c+1) = c+2n.
    let basis = enumerate_hall_basis_capped(m, c + 2 * n, cap)?;
    let y = basis.weight_range(c + 1, c + n).to_vec();

    let mut z = Vec::new();
    for (i, b) in y.iter().enumerate() {
        for a in &y[..i] {
            z.push(Commutator::pair(b.clone(), a.clone()));
        }
    }
    check_cap(z.len(), cap)?;

    let mut w = Vec::new();
    for b in basis.weight_range(c + n + 1, c + 2 * n) {
        let room = 2 * c + 2 * n + 1 - b.weight();
        for a in basis.weight_range(c + 1, room) {
            // wt(a) <= c+n < wt(b), so b > a automatically.
            debug_assert!(b > a);
            w.push(Commutator::pair(b.clone(), a.clone()));
        }
        check_cap(w.len(), cap)?;
    }

    Ok(YZWSets { n, c, m, y, z, w })
}

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::ResourceLimit {
            requested: len.to_string(),
            cap,
        });
    }
    Ok(())
}

pub fn check_lemma_2_2(sets: &YZWSets) -> VerificationReport {
    let report = VerificationReport::new(Target::Lemma22, sets.n, sets.c, sets.m);
    if !c_at_least_n_minus_1(sets.n, sets.c) {
        return report.violation("c >= n-1");
    }
    check_all_basic(report, &sets.z, "Z")
}

pub fn check_lemma_2_4(sets: &YZWSets) -> VerificationReport {
    let report = VerificationReport::new(Target::Lemma24, sets.n, sets.c, sets.m);
    if !c_above_2n_minus_2(sets.n, sets.c) {
        return report.violation("c > 2n-2");
    }
    check_all_basic(report, &sets.w, "W")
}

fn check_all_basic(mut report: VerificationReport, set: &[Commutator], name: &str) -> VerificationReport {
    for element in set {
        report.checked += 1;
        if !is_basic(element) {
            report.fail(format!("{element} in {name} is not a basic commutator on X"));
            break;
        }
    }
    report
}

/// One random factor list: `(basic commutator, exponent)` pairs.
type Factors = Vec<(Commutator, i64)>;

fn sample_factors(rng: &mut ChaCha8Rng, pool: &[Commutator], min: usize, max: usize) -> Factors {
    if pool.is_empty() {
        return Vec::new();
    }
    let count = rng.gen_range(min..=max);
    (0..count)
        .map(|_| {
            let c = pool.choose(rng).expect("nonempty pool").clone();
            (c, rng.gen_range(-2..=2))
        })
        .collect()
}

fn render_factors(factors: &Factors) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|(c, e)| format!("{c}^{e}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Product of the given factors, in order.
fn product(ev: &mut CommutatorEvaluator, factors: &[(Commutator, i64)]) -> Result<MagnusElement> {
    let mut acc = ev.identity();
    for (c, e) in factors {
        acc = acc.mul(&ev.eval_power(c, *e)?)?;
    }
    Ok(acc)
}

/// A sampled group element `a_1^e_1 ... a_t^e_t * tail`.
struct Sample {
    head: Factors,
    tail: Factors,
}

impl Sample {
    fn draw(rng: &mut ChaCha8Rng, head_pool: &[Commutator], tail_pool: &[Commutator]) -> Self {
        Sample {
            head: sample_factors(rng, head_pool, 1, 3),
            tail: sample_factors(rng, tail_pool, 0, 2),
        }
    }

    fn value(&self, ev: &mut CommutatorEvaluator) -> Result<MagnusElement> {
        product(ev, &self.head)?.mul(&product(ev, &self.tail)?)
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * ({})", render_factors(&self.head), render_factors(&self.tail))
    }
}

/// `[alpha, beta] * (prod_{i,j} [alpha_i, beta_j])^-1` over the admitted pairs.
fn residual(
    ev: &mut CommutatorEvaluator,
    alpha: &Sample,
    beta: &Sample,
    admit: impl Fn(&Commutator, &Commutator) -> bool,
) -> Result<MagnusElement> {
    let full = alpha.value(ev)?.commutator(&beta.value(ev)?)?;
    let mut reduction = ev.identity();
    for (a, ea) in &alpha.head {
        let a_pow = ev.eval_power(a, *ea)?;
        for (b, eb) in &beta.head {
            if admit(a, b) {
                let b_pow = ev.eval_power(b, *eb)?;
                reduction = reduction.mul(&a_pow.commutator(&b_pow)?)?;
            }
        }
    }
    full.mul(&reduction.inv()?)
}

struct TrialSetup {
    report: VerificationReport,
    basis: HallBasis,
    ev: CommutatorEvaluator,
    rng: ChaCha8Rng,
}

fn trial_setup(
    target: Target,
    (n, c, m): (u32, u32, u32),
    trials: u32,
    seed: u64,
    truncation: u32,
    required: u32,
) -> Result<std::result::Result<TrialSetup, VerificationReport>> {
    check_params(n, m)?;
    let mut report = VerificationReport::new(target, n, c, m);
    report.truncation = Some(truncation);
    report.trials = Some(trials);
    report.seed = Some(seed);
    if !c_at_least_n_minus_1(n, c) {
        return Ok(Err(report.violation("c >= n-1")));
    }
    if truncation < required {
        return Err(Error::TruncationTooSmall { truncation, required });
    }
    let basis = enumerate_hall_basis_capped(m, truncation, DEFAULT_MAX_ELEMENTS)?;
    let ev = CommutatorEvaluator::new(m as usize, truncation)?;
    Ok(Ok(TrialSetup {
        report,
        basis,
        ev,
        rng: ChaCha8Rng::seed_from_u64(seed),
    }))
}

/// Sampled check that `[alpha, beta]` agrees with the product of pairwise
/// commutators of the `Y`-parts up to `gamma_{2c+n+2}`, at truncation
/// `2c+2n+1`.
pub fn check_lemma_2_3(n: u32, c: u32, m: u32, trials: u32, seed: u64) -> Result<VerificationReport> {
    check_lemma_2_3_at(n, c, m, trials, seed, 2 * c + 2 * n + 1)
}

pub fn check_lemma_2_3_at(
    n: u32,
    c: u32,
    m: u32,
    trials: u32,
    seed: u64,
    truncation: u32,
) -> Result<VerificationReport> {
    let bound = 2 * c + n + 2;
    let setup = trial_setup(Target::Lemma23, (n, c, m), trials, seed, truncation, bound)?;
    let TrialSetup { mut report, basis, mut ev, mut rng } = match setup {
        Ok(s) => s,
        Err(violation) => return Ok(violation),
    };
    let y_pool = basis.weight_range(c + 1, c + n);
    let tail_pool = basis.weight_range(c + n + 1, truncation);

    for trial in 0..trials {
        let alpha = Sample::draw(&mut rng, y_pool, tail_pool);
        let beta = Sample::draw(&mut rng, y_pool, tail_pool);
        let v = residual(&mut ev, &alpha, &beta, |_, _| true)?.valuation();
        report.checked += 1;
        if v < Valuation::Finite(bound) {
            report.fail(format!(
                "trial {trial}: alpha = {alpha}, beta = {beta}: residual valuation {v} < {bound}"
            ));
            break;
        }
    }
    Ok(report)
}

/// Sampled check that `[alpha, beta]` for `alpha` in `gamma_{c+n+1}` and
/// `beta` in `gamma_{c+1}` equals the product of the pairwise commutators of
/// total weight at most `2c+2n+1`, exactly at truncation `2c+2n+1`.
pub fn check_lemma_2_5(n: u32, c: u32, m: u32, trials: u32, seed: u64) -> Result<VerificationReport> {
    check_lemma_2_5_at(n, c, m, trials, seed, 2 * c + 2 * n + 1)
}

pub fn check_lemma_2_5_at(
    n: u32,
    c: u32,
    m: u32,
    trials: u32,
    seed: u64,
    truncation: u32,
) -> Result<VerificationReport> {
    let limit = 2 * c + 2 * n + 1;
    let setup = trial_setup(Target::Lemma25, (n, c, m), trials, seed, truncation, limit)?;
    let TrialSetup { mut report, basis, mut ev, mut rng } = match setup {
        Ok(s) => s,
        Err(violation) => return Ok(violation),
    };
    let alpha_pool = basis.weight_range(c + n + 1, c + 2 * n);
    let alpha_tail = basis.weight_range(c + 2 * n + 1, truncation);
    let beta_pool = basis.weight_range(c + 1, c + n);
    let beta_tail = basis.weight_range(c + n + 1, truncation);

    for trial in 0..trials {
        let alpha = Sample::draw(&mut rng, alpha_pool, alpha_tail);
        let beta = Sample::draw(&mut rng, beta_pool, beta_tail);
        let res = residual(&mut ev, &alpha, &beta, |a, b| a.weight() + b.weight() <= limit)?;
        let v = res.valuation();
        report.checked += 1;
        if v <= Valuation::Finite(limit) {
            report.fail(format!(
                "trial {trial}: alpha = {alpha}, beta = {beta}: residual valuation {v} <= {limit}"
            ));
            break;
        }
    }
    Ok(report)
}

/// Independence check for `Z` together with `W` in `gamma_{2c+2} / gamma_{2c+2n+2}`.
pub fn check_theorem_2_6(n: u32, c: u32, m: u32) -> Result<VerificationReport> {
    check_params(n, m)?;
    let truncation = 2 * c + 2 * n + 1;
    let mut report = VerificationReport::new(Target::Thm26, n, c, m);
    report.truncation = Some(truncation);
    if !c_above_2n_minus_2(n, c) {
        return Ok(report.violation("c > 2n-2"));
    }
    let sets = build_yzw(n, c, m)?;

    let z_set: HashSet<&Commutator> = sets.z.iter().collect();
    if let Some(shared) = sets.w.iter().find(|w| z_set.contains(w)) {
        report.fail(format!("{shared} lies in both Z and W"));
        return Ok(report);
    }

    let mut ev = CommutatorEvaluator::new(m as usize, truncation)?;
    let mut buckets: BTreeMap<u32, Vec<LeadingTermVector>> = BTreeMap::new();
    let window = Valuation::Finite(2 * c + 2)..=Valuation::Finite(truncation);
    for element in sets.z.iter().chain(&sets.w) {
        report.checked += 1;
        let value = ev.eval(element)?;
        let v = value.valuation();
        if !window.contains(&v) || v != Valuation::Finite(element.weight()) {
            report.fail(format!(
                "{element} of weight {} has valuation {v}, expected its weight within [{}, {}]",
                element.weight(),
                2 * c + 2,
                truncation
            ));
            return Ok(report);
        }
        buckets.entry(element.weight()).or_default().push(value.leading_term()?);
    }

    let mut total = 0usize;
    for (weight, vectors) in &buckets {
        let rank = integer_rank(vectors)?;
        if rank != vectors.len() {
            report.fail(format!(
                "leading terms of weight {weight} have rank {rank}, expected {}",
                vectors.len()
            ));
            return Ok(report);
        }
        total += rank;
    }
    report.note = Some(format!("|Z| = {}, |W| = {}, rank = {total}", sets.z.len(), sets.w.len()));
    Ok(report)
}

/// Checks that the basic commutators on `m` letters of weights
/// `c+1..=c+n` have Magnus valuation equal to their weight and independent
/// leading terms, at truncation `c+n`.
pub fn check_hall_independence(n: u32, c: u32, m: u32) -> Result<VerificationReport> {
    check_params(n, m)?;
    let truncation = c + n;
    let mut report = VerificationReport::new(Target::Hall, n, c, m);
    report.truncation = Some(truncation);
    let basis = enumerate_hall_basis_capped(m, truncation, DEFAULT_MAX_ELEMENTS)?;
    let mut ev = CommutatorEvaluator::new(m as usize, truncation)?;
    let mut total = 0usize;
    for weight in c + 1..=c + n {
        let mut vectors = Vec::new();
        for element in basis.of_weight(weight) {
            report.checked += 1;
            let value = ev.eval(element)?;
            if value.valuation() != Valuation::Finite(weight) {
                report.fail(format!(
                    "{element} has valuation {}, expected {weight}",
                    value.valuation()
                ));
                return Ok(report);
            }
            vectors.push(value.leading_term()?);
        }
        let rank = integer_rank(&vectors)?;
        if rank != vectors.len() {
            report.fail(format!(
                "leading terms of weight {weight} have rank {rank}, expected {}",
                vectors.len()
            ));
            return Ok(report);
        }
        total += rank;
    }
    report.note = Some(format!("rank = {total}"));
    Ok(report)
}

/// Coset representatives of a free basis of the `(c,1)` polynilpotent
/// multiplier: the set `Z`.
pub fn multiplier_basis(n: u32, c: u32, m: u32) -> Result<Vec<Commutator>> {
    check_params(n, m)?;
    if c == 0 || !c_above_2n_minus_2(n, c) {
        return Err(Error::Domain(format!(
            "the basis is established only for c > 2n-2, got n={n}, c={c}"
        )));
    }
    Ok(build_yzw(n, c, m)?.z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::chi;
    use num_bigint::BigUint;

    fn x(i: u32) -> Commutator {
        Commutator::generator(i).unwrap()
    }

    fn br(b: Commutator, a: Commutator) -> Commutator {
        Commutator::pair(b, a)
    }

    #[test]
    fn sets_for_metabelian_rank_three() {
        let s = build_yzw(1, 1, 3).unwrap();
        assert_eq!(s.y, vec![br(x(2), x(1)), br(x(3), x(1)), br(x(3), x(2))]);
        assert_eq!(s.z.len(), 3);
        assert_eq!(s.w.len(), 24);
        assert!(s.w.iter().all(|w| {
            let (b, a) = w.as_pair().unwrap();
            b.weight() == 3 && a.weight() == 2
        }));
    }

    #[test]
    fn sets_for_n2_c3_m2() {
        let s = build_yzw(2, 3, 2).unwrap();
        assert_eq!(s.y.len(), 9);
        assert_eq!(s.z.len(), 36);
        // (6,4), (6,5), (7,4) weight pairs: 9*3 + 9*6 + 18*3.
        assert_eq!(s.w.len(), 135);
    }

    #[test]
    fn sets_on_one_letter_are_empty() {
        let s = build_yzw(1, 1, 1).unwrap();
        assert!(s.y.is_empty() && s.z.is_empty() && s.w.is_empty());
    }

    #[test]
    fn z_size_is_pairs_of_y() {
        for (n, c, m) in [(1, 1, 2), (1, 2, 3), (2, 3, 2), (2, 2, 3), (3, 1, 2)] {
            let s = build_yzw(n, c, m).unwrap();
            let y: BigUint = (c + 1..=c + n).map(|i| chi(i, m).unwrap()).sum();
            assert_eq!(BigUint::from(s.y.len()), y);
            assert_eq!(BigUint::from(s.z.len()), chi(2, y).unwrap());
        }
    }

    #[test]
    fn lemma_2_2_and_2_4() {
        for (n, c, m) in [(1, 1, 3), (2, 3, 2)] {
            let s = build_yzw(n, c, m).unwrap();
            let r = check_lemma_2_2(&s);
            assert_eq!(r.status, Status::Pass);
            assert_eq!(r.checked as usize, s.z.len());
            let r = check_lemma_2_4(&s);
            assert_eq!(r.status, Status::Pass);
            assert_eq!(r.checked as usize, s.w.len());
        }
        let r = check_lemma_2_2(&build_yzw(2, 0, 2).unwrap());
        assert_eq!(r.status, Status::HypothesisViolation);
        assert!(r.counterexample.is_none());
        let r = check_lemma_2_4(&build_yzw(2, 2, 2).unwrap());
        assert_eq!(r.status, Status::HypothesisViolation);
    }

    #[test]
    fn failing_membership_check_reports_counterexample() {
        let mut s = build_yzw(1, 1, 2).unwrap();
        s.z.push(br(x(1), x(2)));
        let r = check_lemma_2_2(&s);
        assert_eq!(r.status, Status::Fail);
        assert!(r.counterexample.unwrap().contains("[x1,x2]"));
    }

    #[test]
    fn lemma_2_3_small() {
        let r = check_lemma_2_3(1, 1, 2, 25, 0).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.truncation, Some(5));
        assert_eq!(r.checked, 25);
        assert!(matches!(
            check_lemma_2_3_at(1, 1, 2, 1, 0, 4),
            Err(Error::TruncationTooSmall { truncation: 4, required: 5 })
        ));
        assert_eq!(check_lemma_2_3(3, 1, 2, 1, 0).unwrap().status, Status::HypothesisViolation);
    }

    #[test]
    fn lemma_2_3_equal_arguments_give_identity() {
        let mut ev = CommutatorEvaluator::new(2, 5).unwrap();
        let y = Sample { head: vec![(br(x(2), x(1)), 1)], tail: vec![] };
        let res = residual(&mut ev, &y, &y, |_, _| true).unwrap();
        assert!(res.is_identity());
    }

    #[test]
    fn lemma_2_5_small() {
        let r = check_lemma_2_5(1, 1, 2, 25, 0).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert!(matches!(
            check_lemma_2_5_at(1, 1, 2, 1, 0, 4),
            Err(Error::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn lemma_2_5_identity_argument() {
        let mut ev = CommutatorEvaluator::new(2, 5).unwrap();
        let alpha = Sample { head: vec![], tail: vec![] };
        let beta = Sample { head: vec![(br(x(2), x(1)), -2)], tail: vec![] };
        assert!(residual(&mut ev, &alpha, &beta, |_, _| true).unwrap().is_identity());
        assert!(residual(&mut ev, &beta, &alpha, |_, _| true).unwrap().is_identity());
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = check_lemma_2_3(1, 1, 3, 5, 42).unwrap();
        let b = check_lemma_2_3(1, 1, 3, 5, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn theorem_2_6_small() {
        let r = check_theorem_2_6(1, 1, 2).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.checked, 2);
        let r = check_theorem_2_6(1, 1, 3).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.checked, 27);
        assert_eq!(check_theorem_2_6(2, 2, 2).unwrap().status, Status::HypothesisViolation);
    }

    #[test]
    fn hall_target() {
        let r = check_hall_independence(3, 1, 2).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.checked, 1 + 2 + 3);
    }

    #[test]
    fn basis_examples() {
        assert!(multiplier_basis(1, 1, 2).unwrap().is_empty());
        let b = multiplier_basis(1, 1, 3).unwrap();
        assert_eq!(b.len(), 3);
        let y = [br(x(2), x(1)), br(x(3), x(1)), br(x(3), x(2))];
        assert_eq!(
            b,
            vec![
                br(y[1].clone(), y[0].clone()),
                br(y[2].clone(), y[0].clone()),
                br(y[2].clone(), y[1].clone()),
            ]
        );
        assert_eq!(multiplier_basis(2, 3, 2).unwrap().len(), 36);
        assert!(matches!(multiplier_basis(2, 2, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(Target::parse(t.as_str()), Some(t));
        }
        assert_eq!(Target::parse("lemma9"), None);
    }
}
