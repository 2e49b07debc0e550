//! Registry of executable identity checks.
//!
//! Every check verifies an exact polynomial identity in ℚ\[λ\] over a range
//! of indices and reports the first counterexample on failure. The
//! `*_with` variants run against caller-supplied tables (so an incorrect
//! entry can be traced to the checks it breaks); the plain variants build
//! cached canonical tables of the right size.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

use crate::boson::{self, NormalForm};
use crate::exactnum::{rat_int, LambdaPoly, XPoly};
use crate::factorials::{binomial, classical_falling, deg_falling, deg_rising};
use crate::report::{CheckId, Counterexample, IdentityReport};
use crate::series;
use crate::stirling::{self, Kind, StirlingTable};

/// `c0 + c1 * l` with integer coefficients.
fn lin(c0: i64, c1: i64) -> LambdaPoly {
    LambdaPoly::from_ints(&[c0, c1])
}

fn one_minus_lambda() -> LambdaPoly {
    lin(1, -1)
}

/// Scan `0 <= inner <= outer <= k_max`, comparing the two sides produced
/// by `sides(outer, inner)`.
fn scan_triangle(
    id: CheckId,
    k_max: usize,
    names: (&'static str, &'static str),
    mut sides: impl FnMut(usize, usize) -> (LambdaPoly, LambdaPoly),
) -> IdentityReport {
    let range = format!("0 <= {} <= {} <= {k_max}", names.1, names.0);
    for outer in 0..=k_max {
        for inner in 0..=outer {
            let (lhs, rhs) = sides(outer, inner);
            if lhs != rhs {
                return IdentityReport::fail(
                    id,
                    range,
                    Counterexample {
                        indices: vec![(names.0, outer as i64), (names.1, inner as i64)],
                        lhs,
                        rhs,
                    },
                );
            }
        }
    }
    IdentityReport::pass(id, range)
}

/// Scan the full rectangle `0 <= k <= k_max`, `0 <= m <= m_max`.
fn scan_rectangle(
    id: CheckId,
    k_max: usize,
    m_max: usize,
    mut sides: impl FnMut(usize, usize) -> (LambdaPoly, LambdaPoly),
) -> IdentityReport {
    let range = format!("0 <= k <= {k_max}, 0 <= m <= {m_max}");
    for k in 0..=k_max {
        for m in 0..=m_max {
            let (lhs, rhs) = sides(k, m);
            if lhs != rhs {
                return IdentityReport::fail(
                    id,
                    range,
                    Counterexample {
                        indices: vec![("k", k as i64), ("m", m as i64)],
                        lhs,
                        rhs,
                    },
                );
            }
        }
    }
    IdentityReport::pass(id, range)
}

/// Compare two normal forms, reporting the first differing coefficient.
fn compare_normal_forms(
    id: CheckId,
    range: String,
    k: usize,
    lhs: &NormalForm,
    rhs: &NormalForm,
) -> Option<IdentityReport> {
    lhs.first_difference(rhs).map(|((i, j), lhs_c, rhs_c)| {
        IdentityReport::fail(
            id,
            range,
            Counterexample {
                indices: vec![("k", k as i64), ("i", i as i64), ("j", j as i64)],
                lhs: lhs_c,
                rhs: rhs_c,
            },
        )
    })
}

// ---------------------------------------------------------------------------
// Orthogonality / inversion
// ---------------------------------------------------------------------------

pub fn check_orthogonality(n_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, n_max);
    let s2 = stirling::table(Kind::SecondKind, n_max);
    check_orthogonality_with(&s1, &s2, n_max)
}

/// Both delta-sums plus a round trip of the inverse pair of transforms on
/// a (seed-fixed) random integer sequence.
pub fn check_orthogonality_with(
    s1: &StirlingTable,
    s2: &StirlingTable,
    n_max: usize,
) -> IdentityReport {
    assert!(s1.n_max() >= n_max && s2.n_max() >= n_max);
    let id = CheckId::Prop1;
    let range = format!("0 <= l <= n <= {n_max}");
    for n in 0..=n_max {
        for l in 0..=n {
            let delta = if n == l {
                LambdaPoly::one()
            } else {
                LambdaPoly::zero()
            };
            for (family, first, second) in [(1i64, s1, s2), (2, s2, s1)] {
                let mut sum = LambdaPoly::zero();
                for k in l..=n {
                    sum = &sum + &(first.entry(n, k) * second.entry(k, l));
                }
                if sum != delta {
                    return IdentityReport::fail(
                        id,
                        range,
                        Counterexample {
                            indices: vec![("n", n as i64), ("l", l as i64), ("sum", family)],
                            lhs: sum,
                            rhs: delta,
                        },
                    );
                }
            }
        }
    }

    // round trip: transform by S2, back by S1, recover the input
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x57121a);
    let input: Vec<LambdaPoly> = (0..=n_max)
        .map(|_| LambdaPoly::from_ints(&[rng.gen_range(-100..=100)]))
        .collect();
    let transformed: Vec<LambdaPoly> = (0..=n_max)
        .map(|n| {
            let mut acc = LambdaPoly::zero();
            for (k, value) in input.iter().enumerate().take(n + 1) {
                acc = &acc + &(s2.entry(n, k) * value);
            }
            acc
        })
        .collect();
    for (n, expected) in input.iter().enumerate() {
        let mut recovered = LambdaPoly::zero();
        for (k, value) in transformed.iter().enumerate().take(n + 1) {
            recovered = &recovered + &(s1.entry(n, k) * value);
        }
        if recovered != *expected {
            return IdentityReport::fail(
                id,
                range,
                Counterexample {
                    indices: vec![("n", n as i64), ("sum", 3)],
                    lhs: recovered,
                    rhs: input[n].clone(),
                },
            );
        }
    }
    IdentityReport::pass(id, range)
}

// ---------------------------------------------------------------------------
// Theorem checks; each `sides` helper computes (lhs, rhs) for one instance
// ---------------------------------------------------------------------------

pub(crate) fn theorem3_sides(s2: &StirlingTable, k: usize, m: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for l in m..=k {
        let c = binomial(k as i64, l as i64);
        let fall = deg_falling(&one_minus_lambda(), k - l);
        sum = &sum + &(s2.entry(l, m) * &fall).scale(&c);
    }
    (sum, s2.entry(k + 1, m + 1).clone())
}

pub fn check_theorem_3(k_max: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, k_max + 1);
    check_theorem_3_with(&s2, k_max)
}

pub fn check_theorem_3_with(s2: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s2.n_max() > k_max);
    scan_triangle(CheckId::T3, k_max, ("k", "m"), |k, m| theorem3_sides(s2, k, m))
}

/// The braced coefficient shared by the fourth and fifth checks:
/// `binom(u, m) (-1)^(u-m) <1>_(u-m) + u*l*binom(u-1, m) (-1)^(u-m-1) <1>_(u-m-1)`,
/// with the second part dropped when `u = m`.
fn signed_rising_brace(u: usize, m: usize) -> LambdaPoly {
    let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
    let first = deg_rising(&LambdaPoly::one(), u - m)
        .scale(&(binomial(u as i64, m as i64) * rat_int(sign(u - m))));
    if u == m {
        return first;
    }
    let scalar = binomial(u as i64 - 1, m as i64) * rat_int(sign(u - m - 1) * u as i64);
    let second = deg_rising(&LambdaPoly::one(), u - m - 1)
        .scale(&scalar);
    &first + &(&second * &LambdaPoly::lambda())
}

pub(crate) fn theorem4_sides(s1: &StirlingTable, k: usize, m: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for l in m..=k {
        sum = &sum + &(s1.entry(k, l) * &signed_rising_brace(l, m));
    }
    (sum, s1.entry(k + 1, m + 1).clone())
}

pub fn check_theorem_4(k_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, k_max + 1);
    check_theorem_4_with(&s1, k_max)
}

pub fn check_theorem_4_with(s1: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s1.n_max() > k_max);
    scan_triangle(CheckId::T4, k_max, ("k", "m"), |k, m| theorem4_sides(s1, k, m))
}

pub(crate) fn theorem5_sides(s2: &StirlingTable, k: usize, p: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for m in p..=k {
        sum = &sum + &(s2.entry(m + 1, p + 1) * &signed_rising_brace(k, m));
    }
    (s2.entry(k, p).clone(), sum)
}

pub fn check_theorem_5(k_max: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, k_max + 1);
    check_theorem_5_with(&s2, k_max)
}

pub fn check_theorem_5_with(s2: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s2.n_max() > k_max);
    scan_triangle(CheckId::T5, k_max, ("k", "p"), |k, p| theorem5_sides(s2, k, p))
}

pub(crate) fn theorem6_sides(s1: &StirlingTable, k: usize, l: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for p in l..=k {
        let c = binomial(p as i64, l as i64);
        let fall = deg_falling(&one_minus_lambda(), p - l);
        sum = &sum + &(s1.entry(k + 1, p + 1) * &fall).scale(&c);
    }
    (s1.entry(k, l).clone(), sum)
}

pub fn check_theorem_6(k_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, k_max + 1);
    check_theorem_6_with(&s1, k_max)
}

pub fn check_theorem_6_with(s1: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s1.n_max() > k_max);
    scan_triangle(CheckId::T6, k_max, ("k", "l"), |k, l| theorem6_sides(s1, k, l))
}

pub(crate) fn theorem7_sides(s2: &StirlingTable, k: usize, l: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    // rising factorials of l + 1 - k*lambda
    let base = lin(l as i64 + 1, -(k as i64));
    for m in l..=k {
        let rise = deg_rising(&base, k - m);
        sum = &sum + &(s2.entry(m, l) * &rise);
    }
    (s2.entry(k + 1, l + 1).clone(), sum)
}

pub fn check_theorem_7(k_max: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, k_max + 1);
    check_theorem_7_with(&s2, k_max)
}

pub fn check_theorem_7_with(s2: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s2.n_max() > k_max);
    scan_triangle(CheckId::T7, k_max, ("k", "l"), |k, l| theorem7_sides(s2, k, l))
}

pub(crate) fn theorem8_sides(s1: &StirlingTable, k: usize, m: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    // classical falling factorials of k - (m+1)*lambda
    let base = lin(k as i64, -(m as i64 + 1));
    for l in m..=k {
        let sign = if (k - l).is_multiple_of(2) { 1 } else { -1 };
        let fall = classical_falling(&base, k - l).scale(&rat_int(sign));
        sum = &sum + &(s1.entry(l, m) * &fall);
    }
    (s1.entry(k + 1, m + 1).clone(), sum)
}

pub fn check_theorem_8(k_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, k_max + 1);
    check_theorem_8_with(&s1, k_max)
}

pub fn check_theorem_8_with(s1: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s1.n_max() > k_max);
    scan_triangle(CheckId::T8, k_max, ("k", "m"), |k, m| theorem8_sides(s1, k, m))
}

pub(crate) fn theorem9_sides(s2: &StirlingTable, k: usize, m: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for l in 0..=m {
        let factor = lin(l as i64, -((k + l) as i64));
        sum = &sum + &(s2.entry(k + l, l) * &factor);
    }
    (s2.entry(m + k + 1, m).clone(), sum)
}

pub fn check_theorem_9(k_max: usize, m_max: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, k_max + m_max + 1);
    check_theorem_9_with(&s2, k_max, m_max)
}

pub fn check_theorem_9_with(s2: &StirlingTable, k_max: usize, m_max: usize) -> IdentityReport {
    assert!(s2.n_max() > k_max + m_max);
    scan_rectangle(CheckId::T9, k_max, m_max, |k, m| theorem9_sides(s2, k, m))
}

/// Denominator-cleared form: the S2/S1 cross sum against
/// `binom(k, m) (1-l)_{k-m,l}`.
pub(crate) fn theorem10_sides(
    s1: &StirlingTable,
    s2: &StirlingTable,
    k: usize,
    m: usize,
) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for l in m..=k {
        sum = &sum + &(s2.entry(k + 1, l + 1) * s1.entry(l, m));
    }
    let rhs = deg_falling(&one_minus_lambda(), k - m).scale(&binomial(k as i64, m as i64));
    (sum, rhs)
}

pub fn check_theorem_10(k_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, k_max);
    let s2 = stirling::table(Kind::SecondKind, k_max + 1);
    check_theorem_10_with(&s1, &s2, k_max)
}

pub fn check_theorem_10_with(
    s1: &StirlingTable,
    s2: &StirlingTable,
    k_max: usize,
) -> IdentityReport {
    assert!(s1.n_max() >= k_max && s2.n_max() > k_max);
    scan_triangle(CheckId::T10, k_max, ("k", "m"), |k, m| {
        theorem10_sides(s1, s2, k, m)
    })
}

pub(crate) fn theorem11_sides(s1: &StirlingTable, k: usize, m: usize) -> (LambdaPoly, LambdaPoly) {
    let mut sum = LambdaPoly::zero();
    for l in 0..=m {
        let factor = lin((k + l) as i64, -(l as i64));
        sum = &sum + &(s1.entry(k + l, l) * &factor);
    }
    (s1.entry(m + k + 1, m).clone(), -sum)
}

pub fn check_theorem_11(k_max: usize, m_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, k_max + m_max + 1);
    check_theorem_11_with(&s1, k_max, m_max)
}

pub fn check_theorem_11_with(s1: &StirlingTable, k_max: usize, m_max: usize) -> IdentityReport {
    assert!(s1.n_max() > k_max + m_max);
    scan_rectangle(CheckId::T11, k_max, m_max, |k, m| theorem11_sides(s1, k, m))
}

// ---------------------------------------------------------------------------
// Boson-operator identities
// ---------------------------------------------------------------------------

/// Normal ordering of degenerate number-operator powers against the
/// second-kind rows: `(n)_{k,l} = sum_l S2(k, l) (a+)^l a^l`.
pub fn check_eq14(k_max: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, k_max);
    check_eq14_with(&s2, k_max)
}

pub fn check_eq14_with(s2: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s2.n_max() >= k_max);
    let range = format!("0 <= k <= {k_max}");
    for k in 0..=k_max {
        let lhs = boson::deg_power_number_op(k);
        let rhs = NormalForm::from_terms((0..=k).map(|l| ((l, l), s2.entry(k, l).clone())));
        if let Some(report) = compare_normal_forms(CheckId::Eq14, range.clone(), k, &lhs, &rhs) {
            return report;
        }
    }
    IdentityReport::pass(CheckId::Eq14, range)
}

/// The first-kind inversion collapses: `sum_m S1(k, m) (n)_{m,l}` is the
/// single term `(a+)^k a^k`, which is also the normal form of the
/// classical falling factorial of the number operator.
pub fn check_eq17(k_max: usize) -> IdentityReport {
    let s1 = stirling::table(Kind::FirstKind, k_max);
    check_eq17_with(&s1, k_max)
}

pub fn check_eq17_with(s1: &StirlingTable, k_max: usize) -> IdentityReport {
    assert!(s1.n_max() >= k_max);
    let range = format!("0 <= k <= {k_max}");
    for k in 0..=k_max {
        let mut sum = NormalForm::zero();
        for m in 0..=k {
            sum = sum.add(&boson::deg_power_number_op(m).scale(s1.entry(k, m)));
        }
        let expected = NormalForm::monomial(k, k, LambdaPoly::one());
        if let Some(report) = compare_normal_forms(CheckId::Eq17, range.clone(), k, &sum, &expected)
        {
            return report;
        }
        let classical = boson::npoly_to_nf(&crate::factorials::classical_falling_xpoly(k));
        if let Some(report) =
            compare_normal_forms(CheckId::Eq17, range.clone(), k, &classical, &expected)
        {
            return report;
        }
    }
    IdentityReport::pass(CheckId::Eq17, range)
}

/// Sandwich identity `a+ (n + 1 - l)_{k,l} a = (n)_{k+1,l}`.
pub fn check_eq19(k_max: usize) -> IdentityReport {
    let range = format!("0 <= k <= {k_max}");
    for k in 0..=k_max {
        let shifted = XPoly::new(vec![one_minus_lambda(), LambdaPoly::one()]);
        let lhs = boson::sandwich(&crate::factorials::deg_falling_poly(&shifted, k));
        let rhs = boson::deg_power_number_op(k + 1);
        if let Some(report) = compare_normal_forms(CheckId::Eq19, range.clone(), k, &lhs, &rhs) {
            return report;
        }
    }
    IdentityReport::pass(CheckId::Eq19, range)
}

/// Sandwich identity `a+ (n)_{k,l} a = n (n - 1)_{k,l}`.
pub fn check_eq23(k_max: usize) -> IdentityReport {
    let range = format!("0 <= k <= {k_max}");
    for k in 0..=k_max {
        let lhs = boson::sandwich(&crate::factorials::deg_falling_xpoly(k));
        let n_minus_1 = XPoly::new(vec![-LambdaPoly::one(), LambdaPoly::one()]);
        let rhs_poly = &XPoly::var() * &crate::factorials::deg_falling_poly(&n_minus_1, k);
        let rhs = boson::npoly_to_nf(&rhs_poly);
        if let Some(report) = compare_normal_forms(CheckId::Eq23, range.clone(), k, &lhs, &rhs) {
            return report;
        }
    }
    IdentityReport::pass(CheckId::Eq23, range)
}

// ---------------------------------------------------------------------------
// Series checks (aggregated over a range)
// ---------------------------------------------------------------------------

pub fn check_gf(k_max: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, k_max);
    check_gf_with(&s2, k_max)
}

pub fn check_gf_with(s2: &StirlingTable, k_max: usize) -> IdentityReport {
    let range = format!("0 <= k <= {k_max}, order = {k_max}");
    for k in 0..=k_max {
        let report = series::gf_check_with(s2, k, k_max).expect("k <= order by construction");
        if !report.passed() {
            return report;
        }
    }
    IdentityReport::pass(CheckId::Gf, range)
}

pub fn check_alternating_sums(bound: usize) -> IdentityReport {
    let s2 = stirling::table(Kind::SecondKind, bound);
    check_alternating_sums_with(&s2, bound)
}

pub fn check_alternating_sums_with(s2: &StirlingTable, bound: usize) -> IdentityReport {
    let range = format!("0 <= n, k <= {bound}");
    for n in 0..=bound {
        for k in 0..=bound {
            let report = series::alternating_sum_check_with(s2, n, k);
            if !report.passed() {
                return report;
            }
        }
    }
    IdentityReport::pass(CheckId::AltSum, range)
}

// ---------------------------------------------------------------------------
// Aggregation
// ---------------------------------------------------------------------------

/// Run a single registered check at the given bound.
pub fn run_check(id: CheckId, k_max: usize) -> IdentityReport {
    match id {
        CheckId::Prop1 => check_orthogonality(k_max),
        CheckId::T3 => check_theorem_3(k_max),
        CheckId::T4 => check_theorem_4(k_max),
        CheckId::T5 => check_theorem_5(k_max),
        CheckId::T6 => check_theorem_6(k_max),
        CheckId::T7 => check_theorem_7(k_max),
        CheckId::T8 => check_theorem_8(k_max),
        CheckId::T9 => check_theorem_9(k_max, k_max),
        CheckId::T10 => check_theorem_10(k_max),
        CheckId::T11 => check_theorem_11(k_max, k_max),
        CheckId::Eq14 => check_eq14(k_max),
        CheckId::Eq17 => check_eq17(k_max),
        CheckId::Eq19 => check_eq19(k_max),
        CheckId::Eq23 => check_eq23(k_max),
        CheckId::Gf => check_gf(k_max),
        CheckId::AltSum => check_alternating_sums(k_max),
    }
}

/// Run every registered check at the given bound, in fixed id order.
pub fn check_all(k_max: usize) -> Vec<IdentityReport> {
    let s1 = stirling::table(Kind::FirstKind, 2 * k_max + 1);
    let s2 = stirling::table(Kind::SecondKind, 2 * k_max + 1);
    check_all_with(&s1, &s2, k_max)
}

/// [`check_all`] against caller-supplied tables (both sized at least
/// `2 * k_max + 1`), so corrupted tables are visible to every check that
/// reads table entries.
pub fn check_all_with(
    s1: &StirlingTable,
    s2: &StirlingTable,
    k_max: usize,
) -> Vec<IdentityReport> {
    assert!(s1.n_max() > 2 * k_max && s2.n_max() > 2 * k_max);
    CheckId::ALL
        .iter()
        .map(|id| match id {
            CheckId::Prop1 => check_orthogonality_with(s1, s2, k_max),
            CheckId::T3 => check_theorem_3_with(s2, k_max),
            CheckId::T4 => check_theorem_4_with(s1, k_max),
            CheckId::T5 => check_theorem_5_with(s2, k_max),
            CheckId::T6 => check_theorem_6_with(s1, k_max),
            CheckId::T7 => check_theorem_7_with(s2, k_max),
            CheckId::T8 => check_theorem_8_with(s1, k_max),
            CheckId::T9 => check_theorem_9_with(s2, k_max, k_max),
            CheckId::T10 => check_theorem_10_with(s1, s2, k_max),
            CheckId::T11 => check_theorem_11_with(s1, k_max, k_max),
            CheckId::Eq14 => check_eq14_with(s2, k_max),
            CheckId::Eq17 => check_eq17_with(s1, k_max),
            CheckId::Eq19 => check_eq19(k_max),
            CheckId::Eq23 => check_eq23(k_max),
            CheckId::Gf => check_gf_with(s2, k_max),
            CheckId::AltSum => check_alternating_sums_with(s2, k_max),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonality_small() {
        let report = check_orthogonality(8);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn orthogonality_cancellation_example() {
        // n = 2, l = 1: S1(2,1) + S2(2,1) = (l-1) + (1-l) = 0
        let s1 = stirling::table(Kind::FirstKind, 2);
        let s2 = stirling::table(Kind::SecondKind, 2);
        let sum = &(s1.entry(2, 1) * s2.entry(1, 1)) + &(s1.entry(2, 2) * s2.entry(2, 1));
        assert!(sum.is_zero());
    }

    #[test]
    fn theorem_checks_pass_small() {
        for id in CheckId::ALL {
            let report = run_check(id, 6);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn theorem3_spot_values() {
        let s2 = stirling::table(Kind::SecondKind, 3);
        let (lhs, rhs) = theorem3_sides(&s2, 1, 0);
        assert_eq!(lhs, LambdaPoly::from_ints(&[1, -1]));
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = theorem3_sides(&s2, 2, 2);
        assert_eq!(lhs, LambdaPoly::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theorem4_spot_values() {
        let s1 = stirling::table(Kind::FirstKind, 2);
        let (lhs, rhs) = theorem4_sides(&s1, 1, 0);
        assert_eq!(lhs, LambdaPoly::from_ints(&[-1, 1]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theorem7_spot_values() {
        let s2 = stirling::table(Kind::SecondKind, 3);
        // k = 2, l = 0: <1 - 2l>_{2,l} = (1 - 2l)(1 - l) = S2(3, 1)
        let (lhs, rhs) = theorem7_sides(&s2, 2, 0);
        assert_eq!(rhs, LambdaPoly::from_ints(&[1, -3, 2]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialization_consistency() {
        // evaluating both sides at sample rationals commutes with the
        // symbolic comparison
        use crate::exactnum::{rat, Rat};
        let samples = [Rat::zero(), rat_int(1), rat(1, 2), rat_int(-1), rat(2, 3)];
        let k_max = 6;
        let s1 = stirling::table(Kind::FirstKind, 2 * k_max + 1);
        let s2 = stirling::table(Kind::SecondKind, 2 * k_max + 1);
        type SidesFn<'a> = Box<dyn Fn(usize, usize) -> (LambdaPoly, LambdaPoly) + 'a>;
        let all_sides: Vec<SidesFn> = vec![
            Box::new(|k, m| theorem3_sides(&s2, k, m)),
            Box::new(|k, m| theorem4_sides(&s1, k, m)),
            Box::new(|k, m| theorem5_sides(&s2, k, m)),
            Box::new(|k, m| theorem6_sides(&s1, k, m)),
            Box::new(|k, m| theorem7_sides(&s2, k, m)),
            Box::new(|k, m| theorem8_sides(&s1, k, m)),
            Box::new(|k, m| theorem9_sides(&s2, k, m)),
            Box::new(|k, m| theorem10_sides(&s1, &s2, k, m)),
            Box::new(|k, m| theorem11_sides(&s1, k, m)),
        ];
        for sides in &all_sides {
            for k in 0..=k_max {
                for m in 0..=k {
                    let (lhs, rhs) = sides(k, m);
                    assert_eq!(lhs, rhs);
                    for lam in &samples {
                        assert_eq!(lhs.eval(lam), rhs.eval(lam));
                    }
                }
            }
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // indices drive lookups in several triangles at once
    fn lambda_zero_reduction_is_classical() {
        // at λ=0 each check instance must reduce to a valid identity for
        // the classical numbers built by their own recurrences
        use crate::exactnum::Rat;
        use num_bigint::BigInt;
        let bound = 10usize;
        let c2 = stirling::classical_s2(2 * bound + 1);
        let c1 = stirling::classical_s1(2 * bound + 1);
        let int = |r: &Rat| -> BigInt {
            assert!(r.is_integer());
            r.to_integer()
        };
        for k in 0..=bound {
            for m in 0..=k {
                // binomial convolution for S2
                let mut sum = BigInt::from(0);
                for l in m..=k {
                    sum += int(&binomial(k as i64, l as i64)) * &c2[l][m];
                }
                assert_eq!(sum, c2[k + 1][m + 1]);
                // signed binomial convolution for S1
                let mut sum = BigInt::from(0);
                for l in m..=k {
                    let sign = if (l - m) % 2 == 0 { 1i64 } else { -1 };
                    sum += int(&binomial(l as i64, m as i64)) * sign * &c1[k][l];
                }
                assert_eq!(sum, c1[k + 1][m + 1]);
                // powers of (l+1) advance S2
                let mut sum = BigInt::from(0);
                for l in m..=k {
                    sum += BigInt::from(m as u64 + 1).pow((k - l) as u32) * &c2[l][m];
                }
                assert_eq!(sum, c2[k + 1][m + 1]);
                // cross convolution gives the binomial
                let mut sum = BigInt::from(0);
                for l in m..=k {
                    sum += &c2[k + 1][l + 1] * &c1[l][m];
                }
                assert_eq!(sum, int(&binomial(k as i64, m as i64)));
            }
        }
        for k in 0..=bound {
            for m in 0..=bound {
                // band sums
                let mut sum = BigInt::from(0);
                for l in 0..=m {
                    sum += BigInt::from(l as u64) * &c2[k + l][l];
                }
                assert_eq!(sum, c2[m + k + 1][m]);
                let mut sum = BigInt::from(0);
                for l in 0..=m {
                    sum += BigInt::from((k + l) as u64) * &c1[k + l][l];
                }
                assert_eq!(-sum, c1[m + k + 1][m]);
            }
        }
    }

    #[test]
    fn corrupted_entry_is_caught() {
        let n_max = 11;
        let s1 = stirling::build_s1_table(n_max);
        let s2 = stirling::build_s2_table(n_max);
        let bad = s2.with_entry(3, 1, s2.entry(3, 1) + &LambdaPoly::one());
        let reports = check_all_with(&s1, &bad, 5);
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        assert!(!failed.is_empty());
        for report in failed {
            let cex = report.counterexample.as_ref().expect("failure without counterexample");
            assert_ne!(cex.lhs, cex.rhs);
        }
    }
}
