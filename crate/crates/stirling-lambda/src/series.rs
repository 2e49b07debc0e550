//! Truncated formal power series in `t` over ℚ\[λ\], the degenerate
//! exponential, and the generating-function characterization of the
//! second-kind numbers.

use num_traits::{One, Zero};

use crate::exactnum::{rat_int, LambdaPoly, Rat};
use crate::factorials::{binomial, deg_falling, factorial};
use crate::report::{CheckId, Counterexample, IdentityReport};
use crate::stirling::{self, Kind, StirlingTable};
use crate::Error;

/// Power series truncated at a fixed order: `coeffs[n]` is the coefficient
/// of `t^n`, and exactly `order + 1` coefficients are stored. Operations on
/// mixed orders truncate to the smaller one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<LambdaPoly>,
}

impl TruncatedSeries {
    /// Build from coefficients in ascending powers of `t`, padded with
    /// zeros (or truncated) to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<LambdaPoly>) -> Self {
        coeffs.resize(order + 1, LambdaPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(order, LambdaPoly::one())
    }

    pub fn constant(order: usize, c: LambdaPoly) -> Self {
        TruncatedSeries::new(order, vec![c])
    }

    /// The variable `t` itself.
    pub fn var(order: usize) -> Self {
        TruncatedSeries::new(order, vec![LambdaPoly::zero(), LambdaPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &LambdaPoly {
        &self.coeffs[n]
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            order,
            (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            order,
            (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        )
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![LambdaPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }
}

/// The degenerate exponential: coefficient of `t^n` is the degenerate
/// falling factorial of `x` of length `n`, divided by `n!`. Reduces to the
/// classical exponential of `x t` at λ = 0.
pub fn degenerate_exp(x: &LambdaPoly, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| deg_falling(x, n).scale(&factorial(n).recip()))
        .collect();
    TruncatedSeries { coeffs }
}

/// Compare `(e_l(t) - 1)^k / k!` against column `k` of the second-kind
/// table: the `t^n` coefficient times `n!` must equal `S2(n, k)` for
/// `n >= k` and vanish for `n < k`.
pub fn gf_check(k: usize, order: usize) -> Result<IdentityReport, Error> {
    gf_check_with(&stirling::table(Kind::SecondKind, order), k, order)
}

/// [`gf_check`] against a caller-supplied table.
pub fn gf_check_with(
    s2: &StirlingTable,
    k: usize,
    order: usize,
) -> Result<IdentityReport, Error> {
    if k > order {
        return Err(Error::Range { k, order });
    }
    assert!(s2.n_max() >= order && s2.kind() == Kind::SecondKind);
    let range = format!("k = {k}, order = {order}");
    let base = degenerate_exp(&LambdaPoly::one(), order).sub(&TruncatedSeries::one(order));
    let powered = base.pow(k).scale(&factorial(k).recip());
    for n in 0..=order {
        let lhs = powered.coeff(n).scale(&factorial(n));
        let rhs = if n >= k {
            s2.entry(n, k).clone()
        } else {
            LambdaPoly::zero()
        };
        if lhs != rhs {
            return Ok(IdentityReport::fail(
                CheckId::Gf,
                range,
                Counterexample {
                    indices: vec![("k", k as i64), ("n", n as i64)],
                    lhs,
                    rhs,
                },
            ));
        }
    }
    Ok(IdentityReport::pass(CheckId::Gf, range))
}

/// Compare the alternating binomial sum of degenerate falling factorials
/// of the integers `0..=k` against `k! S2(n, k)` (zero when `n < k`).
pub fn alternating_sum_check(n: usize, k: usize) -> IdentityReport {
    alternating_sum_check_with(&stirling::table(Kind::SecondKind, n.max(k)), n, k)
}

/// [`alternating_sum_check`] against a caller-supplied table.
pub fn alternating_sum_check_with(s2: &StirlingTable, n: usize, k: usize) -> IdentityReport {
    assert!(s2.n_max() >= n.max(k) && s2.kind() == Kind::SecondKind);
    let range = format!("n = {n}, k = {k}");
    let mut lhs = LambdaPoly::zero();
    for m in 0..=k {
        let sign = if (k - m).is_multiple_of(2) { 1 } else { -1 };
        let c = binomial(k as i64, m as i64) * rat_int(sign);
        let fall = deg_falling(&LambdaPoly::from_ints(&[m as i64]), n);
        lhs = &lhs + &fall.scale(&c);
    }
    let rhs = if n >= k {
        s2.entry(n, k).scale(&factorial(k))
    } else {
        LambdaPoly::zero()
    };
    if lhs != rhs {
        IdentityReport::fail(
            CheckId::AltSum,
            range,
            Counterexample {
                indices: vec![("n", n as i64), ("k", k as i64)],
                lhs,
                rhs,
            },
        )
    } else {
        IdentityReport::pass(CheckId::AltSum, range)
    }
}
