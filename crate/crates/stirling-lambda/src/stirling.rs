//! Triangular tables of degenerate Stirling numbers.
//!
//! `build_s2_table` and `build_s1_table` fill the triangles row by row from
//! the two-term recurrences
//!
//! ```text
//! S2(n, k) = S2(n-1, k-1) + (k - (n-1) l) S2(n-1, k)
//! S1(n, k) = S1(n-1, k-1) - ((n-1) - k l) S1(n-1, k)
//! ```
//!
//! with `S(0,0) = 1` and out-of-triangle entries treated as zero. The
//! independent cross-check is [`s2_oracle`]/[`s1_oracle`], which re-derive
//! a row by explicit basis change: expand the degenerate falling factorial
//! in the classical falling-factorial basis (or vice versa) by triangular
//! elimination. The oracle shares no code with the recurrences.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{LambdaPoly, Rat, XPoly};
use crate::factorials::{classical_falling_xpoly, deg_falling_xpoly};

/// Which family a table holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    FirstKind,
    SecondKind,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::FirstKind => "s1",
            Kind::SecondKind => "s2",
        }
    }
}

/// Triangular array of [`LambdaPoly`] entries, `0 <= k <= n <= n_max`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StirlingTable {
    kind: Kind,
    n_max: usize,
    rows: Vec<Vec<LambdaPoly>>,
}

impl StirlingTable {
    /// Build a table of the requested kind from its recurrence.
    pub fn build(kind: Kind, n_max: usize) -> Self {
        let mut rows: Vec<Vec<LambdaPoly>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![LambdaPoly::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let diag = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    LambdaPoly::zero()
                };
                let scaled = if k < n {
                    // S2: (k - (n-1) l), S1: -((n-1) - k l)
                    let factor = match kind {
                        Kind::SecondKind => LambdaPoly::new(vec![
                            Rat::from(BigInt::from(k)),
                            -Rat::from(BigInt::from(n - 1)),
                        ]),
                        Kind::FirstKind => LambdaPoly::new(vec![
                            -Rat::from(BigInt::from(n - 1)),
                            Rat::from(BigInt::from(k)),
                        ]),
                    };
                    &prev[k] * &factor
                } else {
                    LambdaPoly::zero()
                };
                row.push(diag + scaled);
            }
            rows.push(row);
        }
        StirlingTable { kind, n_max, rows }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Entry (n, k). Panics outside the built triangle.
    pub fn entry(&self, n: usize, k: usize) -> &LambdaPoly {
        assert!(
            n <= self.n_max && k <= n,
            "entry ({n}, {k}) outside table with n_max = {}",
            self.n_max
        );
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[LambdaPoly] {
        &self.rows[n]
    }

    /// Copy of the table with one entry replaced; useful for probing which
    /// consistency checks an incorrect entry would trip.
    pub fn with_entry(&self, n: usize, k: usize, value: LambdaPoly) -> Self {
        assert!(n <= self.n_max && k <= n);
        let mut rows = self.rows.clone();
        rows[n][k] = value;
        StirlingTable {
            kind: self.kind,
            n_max: self.n_max,
            rows,
        }
    }
}

/// Second-kind table up to `n_max`.
pub fn build_s2_table(n_max: usize) -> StirlingTable {
    StirlingTable::build(Kind::SecondKind, n_max)
}

/// First-kind table up to `n_max`.
pub fn build_s1_table(n_max: usize) -> StirlingTable {
    StirlingTable::build(Kind::FirstKind, n_max)
}

type TableCache = Mutex<HashMap<(Kind, usize), Arc<StirlingTable>>>;

static CACHE: OnceLock<TableCache> = OnceLock::new();

/// Cached table lookup; builds on first request for a given (kind, n_max).
pub fn table(kind: Kind, n_max: usize) -> Arc<StirlingTable> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry((kind, n_max))
        .or_insert_with(|| Arc::new(StirlingTable::build(kind, n_max)))
        .clone()
}

/// Expand `target` over the monic basis `basis(0), ..., basis(deg)` by
/// descending triangular elimination. Each basis element must be monic of
/// exact degree equal to its index, so the elimination is exact.
fn expand_in_basis(target: &XPoly, basis: impl Fn(usize) -> XPoly) -> Vec<LambdaPoly> {
    let deg = target.degree().unwrap_or(0);
    let mut rem = target.clone();
    let mut coeffs = vec![LambdaPoly::zero(); deg + 1];
    for d in (0..=deg).rev() {
        let c = rem.coeff(d);
        if !c.is_zero() {
            rem = &rem - &basis(d).scale(&c);
            coeffs[d] = c;
        }
    }
    assert!(rem.is_zero(), "elimination left a nonzero remainder");
    coeffs
}

/// Row `n` of the second-kind table, derived independently: the expansion
/// of the degenerate falling factorial over the classical falling basis.
pub fn s2_oracle(n: usize) -> Vec<LambdaPoly> {
    expand_in_basis(&deg_falling_xpoly(n), classical_falling_xpoly)
}

/// Row `n` of the first-kind table: the expansion of the classical falling
/// factorial over the degenerate falling basis.
pub fn s1_oracle(n: usize) -> Vec<LambdaPoly> {
    expand_in_basis(&classical_falling_xpoly(n), deg_falling_xpoly)
}

/// Evaluate every entry at λ = 0, yielding the classical integer triangle.
pub fn classical_limit(table: &StirlingTable) -> Vec<Vec<BigInt>> {
    table
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| {
                    let v = p.eval(&Rat::zero());
                    assert!(v.is_integer(), "entry evaluated at 0 is not an integer");
                    v.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Classical Stirling numbers of the second kind by their own recurrence,
/// `S2(n+1, k) = S2(n, k-1) + k S2(n, k)`; integer arithmetic throughout.
pub fn classical_s2(n_max: usize) -> Vec<Vec<BigInt>> {
    classical_table(n_max, |_, k| BigInt::from(k), false)
}

/// Classical (signed) Stirling numbers of the first kind,
/// `S1(n+1, k) = S1(n, k-1) - n S1(n, k)`.
pub fn classical_s1(n_max: usize) -> Vec<Vec<BigInt>> {
    classical_table(n_max, |n, _| BigInt::from(n), true)
}

fn classical_table(
    n_max: usize,
    factor: impl Fn(usize, usize) -> BigInt,
    negate: bool,
) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let diag = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
            let above = if k < n { prev[k].clone() } else { BigInt::zero() };
            let scaled = factor(n - 1, k) * above;
            row.push(if negate { diag - scaled } else { diag + scaled });
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;

    #[test]
    fn second_kind_small_entries() {
        let t = build_s2_table(3);
        assert_eq!(t.entry(1, 1), &LambdaPoly::one());
        assert_eq!(t.entry(2, 1), &LambdaPoly::from_ints(&[1, -1]));
        // (1-l)(1-2l)
        assert_eq!(t.entry(3, 1), &LambdaPoly::from_ints(&[1, -3, 2]));
        assert_eq!(t.entry(3, 2), &LambdaPoly::from_ints(&[3, -3]));
    }

    #[test]
    fn first_kind_small_entries() {
        let t = build_s1_table(3);
        assert_eq!(t.entry(2, 1), &LambdaPoly::from_ints(&[-1, 1]));
        assert_eq!(t.entry(2, 2), &LambdaPoly::one());
        // -(2-l)(l-1) = 2 - 3l + l^2
        assert_eq!(t.entry(3, 1), &LambdaPoly::from_ints(&[2, -3, 1]));
    }

    #[test]
    fn boundary_invariants() {
        for kind in [Kind::FirstKind, Kind::SecondKind] {
            let t = StirlingTable::build(kind, 8);
            assert_eq!(t.entry(0, 0), &LambdaPoly::one());
            for n in 1..=8 {
                assert_eq!(t.entry(n, n), &LambdaPoly::one());
                assert!(t.entry(n, 0).is_zero());
            }
        }
    }

    #[test]
    fn oracle_small_rows() {
        assert_eq!(s2_oracle(0), vec![LambdaPoly::one()]);
        assert_eq!(s2_oracle(1), vec![LambdaPoly::zero(), LambdaPoly::one()]);
        assert_eq!(
            s2_oracle(2),
            vec![
                LambdaPoly::zero(),
                LambdaPoly::from_ints(&[1, -1]),
                LambdaPoly::one()
            ]
        );
        assert_eq!(
            s1_oracle(2),
            vec![
                LambdaPoly::zero(),
                LambdaPoly::from_ints(&[-1, 1]),
                LambdaPoly::one()
            ]
        );
        assert_eq!(s1_oracle(0), vec![LambdaPoly::one()]);
    }

    #[test]
    fn recurrence_agrees_with_oracle() {
        let n = 10;
        let s2 = build_s2_table(n);
        let s1 = build_s1_table(n);
        for row in 0..=n {
            assert_eq!(s2.row(row), s2_oracle(row).as_slice(), "S2 row {row}");
            assert_eq!(s1.row(row), s1_oracle(row).as_slice(), "S1 row {row}");
        }
    }

    #[test]
    fn lambda_degree_bound() {
        for kind in [Kind::FirstKind, Kind::SecondKind] {
            let t = StirlingTable::build(kind, 12);
            for n in 0..=12 {
                for k in 0..=n {
                    let deg = t.entry(n, k).degree().unwrap_or(0);
                    assert!(deg <= n - k, "deg of ({n},{k}) is {deg}");
                }
            }
        }
    }

    #[test]
    fn entries_have_integer_coefficients() {
        for kind in [Kind::FirstKind, Kind::SecondKind] {
            let t = StirlingTable::build(kind, 12);
            for n in 0..=12 {
                for k in 0..=n {
                    assert!(t.entry(n, k).is_integral());
                }
            }
        }
    }

    #[test]
    fn classical_limit_values() {
        let s2 = classical_limit(&build_s2_table(6));
        let s1 = classical_limit(&build_s1_table(6));
        assert_eq!(s2[3][2], BigInt::from(3));
        assert_eq!(s1[3][2], BigInt::from(-3));
        assert_eq!(s2[5][3], BigInt::from(25));
        assert_eq!(s1[5][2], BigInt::from(-50));
        for n in 0..=6 {
            assert_eq!(s2[n][n], BigInt::one());
            assert_eq!(s1[n][n], BigInt::one());
        }
    }

    #[test]
    fn classical_limit_matches_independent_recurrences() {
        assert_eq!(classical_limit(&build_s2_table(12)), classical_s2(12));
        assert_eq!(classical_limit(&build_s1_table(12)), classical_s1(12));
    }

    #[test]
    fn first_kind_sign_structure_at_lambda_zero() {
        let s1 = classical_limit(&build_s1_table(12));
        for (n, row) in s1.iter().enumerate() {
            for (k, value) in row.iter().enumerate() {
                let signed = if (n - k) % 2 == 0 {
                    value.clone()
                } else {
                    -value.clone()
                };
                assert!(signed >= BigInt::zero(), "(-1)^(n-k) S1({n},{k}) < 0");
            }
        }
    }

    #[test]
    fn cache_returns_shared_table() {
        let a = table(Kind::SecondKind, 5);
        let b = table(Kind::SecondKind, 5);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.entry(2, 1), &LambdaPoly::from_ints(&[1, -1]));
    }

    #[test]
    fn with_entry_replaces_one_value() {
        let t = build_s2_table(4);
        let bad = t.with_entry(3, 1, t.entry(3, 1) + &LambdaPoly::one());
        assert_ne!(t.entry(3, 1), bad.entry(3, 1));
        assert_eq!(t.entry(3, 2), bad.entry(3, 2));
        assert_eq!(
            bad.entry(3, 1),
            &(t.entry(3, 1) + &LambdaPoly::constant(rat_int(1)))
        );
    }
}
