//! Canonical normal-form arithmetic for the boson algebra.
//!
//! The two letters `a` (annihilation) and `a+` (creation) satisfy
//! `a a+ - a+ a = 1`. Every operator expression built from them has a
//! unique normal form `sum c_{i,j} (a+)^i a^j` with the creation letters
//! on the left; [`NormalForm`] stores exactly that, as a sorted map from
//! `(i, j)` to a [`LambdaPoly`] coefficient with zero terms removed, so
//! map equality is operator equality.
//!
//! Products are computed by iterated single-letter multiplication: the
//! only rewrite ever applied is `a^j a+ = a+ a^j + j a^(j-1)`, which is an
//! immediate consequence of the commutation relation. The independent
//! cross-check is [`monomial_action`], the realization `a = d/dx`,
//! `a+ = x` acting on monomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{LambdaPoly, Rat, XPoly};
use crate::factorials::deg_falling_xpoly;
use crate::stirling::{self, Kind};
use crate::Error;

/// Polynomial in the number operator `n = a+ a`.
pub type NPoly = XPoly;

/// One letter of a boson word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    /// Annihilation operator, token `a`.
    A,
    /// Creation operator, token `a+`.
    Adag,
}

/// Parse a whitespace-separated word of `a` / `a+` tokens, read
/// left-to-right as the operator product in writing order.
pub fn parse_word(input: &str) -> Result<Vec<Letter>, Error> {
    input
        .split_whitespace()
        .map(|tok| match tok {
            "a" => Ok(Letter::A),
            "a+" => Ok(Letter::Adag),
            other => Err(Error::InvalidToken(other.to_string())),
        })
        .collect()
}

/// Canonical normal form `sum c_{i,j} (a+)^i a^j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalForm {
    terms: BTreeMap<(usize, usize), LambdaPoly>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    /// The multiplicative identity `1`.
    pub fn identity() -> Self {
        NormalForm::monomial(0, 0, LambdaPoly::one())
    }

    /// The annihilation operator.
    pub fn a() -> Self {
        NormalForm::monomial(0, 1, LambdaPoly::one())
    }

    /// The creation operator.
    pub fn a_dag() -> Self {
        NormalForm::monomial(1, 0, LambdaPoly::one())
    }

    /// The number operator `a+ a`.
    pub fn number_op() -> Self {
        NormalForm::monomial(1, 1, LambdaPoly::one())
    }

    /// Single term `coeff * (a+)^i a^j`.
    pub fn monomial(i: usize, j: usize, coeff: LambdaPoly) -> Self {
        let mut nf = NormalForm::zero();
        nf.add_term((i, j), coeff);
        nf
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), LambdaPoly)>) -> Self {
        let mut nf = NormalForm::zero();
        for (key, coeff) in terms {
            nf.add_term(key, coeff);
        }
        nf
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &LambdaPoly)> {
        self.terms.iter().map(|(&key, coeff)| (key, coeff))
    }

    /// Coefficient of `(a+)^i a^j`, zero if absent.
    pub fn coeff(&self, i: usize, j: usize) -> LambdaPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    fn add_term(&mut self, key: (usize, usize), coeff: LambdaPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(LambdaPoly::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&key, coeff) in &other.terms {
            out.add_term(key, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&key, coeff) in &other.terms {
            out.add_term(key, -coeff.clone());
        }
        out
    }

    pub fn scale(&self, s: &LambdaPoly) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&key, coeff) in &self.terms {
            out.add_term(key, coeff * s);
        }
        out
    }

    /// Right-multiply by the annihilation letter:
    /// `(a+)^i a^j . a = (a+)^i a^(j+1)`.
    pub fn mul_a(&self) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(i, j), coeff) in &self.terms {
            out.add_term((i, j + 1), coeff.clone());
        }
        out
    }

    /// Right-multiply by the creation letter:
    /// `(a+)^i a^j . a+ = (a+)^(i+1) a^j + j (a+)^i a^(j-1)`.
    pub fn mul_adag(&self) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(i, j), coeff) in &self.terms {
            out.add_term((i + 1, j), coeff.clone());
            if j >= 1 {
                out.add_term((i, j - 1), coeff.scale(&Rat::from_integer(j.into())));
            }
        }
        out
    }

    /// Bilinear product; each factor `(a+)^i a^j` of `rhs` is appended one
    /// letter at a time through the single-letter multipliers.
    pub fn mul(&self, rhs: &NormalForm) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(i, j), coeff) in &rhs.terms {
            let mut part = self.clone();
            for _ in 0..i {
                part = part.mul_adag();
            }
            for _ in 0..j {
                part = part.mul_a();
            }
            out = out.add(&part.scale(coeff));
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &NormalForm) -> NormalForm {
        self.mul(other).sub(&other.mul(self))
    }

    /// First `(i, j)` position where the two forms disagree, with both
    /// coefficients, or `None` when they are equal.
    pub fn first_difference(
        &self,
        other: &NormalForm,
    ) -> Option<((usize, usize), LambdaPoly, LambdaPoly)> {
        let keys: std::collections::BTreeSet<_> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for key in keys {
            let lhs = self.coeff(key.0, key.1);
            let rhs = other.coeff(key.0, key.1);
            if lhs != rhs {
                return Some((key, lhs, rhs));
            }
        }
        None
    }
}

impl fmt::Display for NormalForm {
    /// Sorted term list, e.g. `1 + (a+)^1 a^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let ops = match (i, j) {
                (0, 0) => String::new(),
                (_, 0) => format!("(a+)^{i}"),
                (0, _) => format!("a^{j}"),
                _ => format!("(a+)^{i} a^{j}"),
            };
            let c = coeff.to_string();
            let c = if c.contains(' ') || c.starts_with('-') {
                format!("({c})")
            } else {
                c
            };
            if ops.is_empty() {
                write!(f, "{c}")?;
            } else if c == "1" {
                write!(f, "{ops}")?;
            } else {
                write!(f, "{c} * {ops}")?;
            }
        }
        Ok(())
    }
}

/// Normal form of a word, folded left-to-right from the identity.
pub fn word_to_normal(word: &[Letter]) -> NormalForm {
    let mut nf = NormalForm::identity();
    for letter in word {
        nf = match letter {
            Letter::A => nf.mul_a(),
            Letter::Adag => nf.mul_adag(),
        };
    }
    nf
}

/// Substitute `n = a+ a` into a polynomial in the number operator and
/// expand to canonical normal form (Horner in the commutative subalgebra
/// generated by `n`).
pub fn npoly_to_nf(p: &NPoly) -> NormalForm {
    let number_op = NormalForm::number_op();
    let mut acc = NormalForm::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&number_op).add(&NormalForm::monomial(0, 0, c.clone()));
    }
    acc
}

/// Normal form of the degenerate k-th power of the number operator,
/// `n (n - l) (n - 2l) ... (n - (k-1)l)`.
pub fn deg_power_number_op(k: usize) -> NormalForm {
    npoly_to_nf(&deg_falling_xpoly(k))
}

/// The first-kind expansion `sum_m S1(k, m) (n)_{m,l}`, which collapses to
/// the single term `(a+)^k a^k`.
pub fn inverse_normal_expansion(k: usize) -> NormalForm {
    let table = stirling::table(Kind::FirstKind, k);
    let mut acc = NormalForm::zero();
    for m in 0..=k {
        acc = acc.add(&deg_power_number_op(m).scale(table.entry(k, m)));
    }
    acc
}

/// `a+ . p(n) . a` in canonical normal form.
pub fn sandwich(p: &NPoly) -> NormalForm {
    NormalForm::a_dag().mul(&npoly_to_nf(p)).mul(&NormalForm::a())
}

/// Apply the realization `a = d/dx`, `a+ = x` to the monomial `x^m`:
/// each term `c (a+)^i a^j` contributes `c * m(m-1)...(m-j+1) x^(m-j+i)`.
/// Returns the collected nonzero terms sorted by exponent.
pub fn monomial_action(nf: &NormalForm, m: usize) -> Vec<(usize, LambdaPoly)> {
    let mut out: BTreeMap<usize, LambdaPoly> = BTreeMap::new();
    for ((i, j), coeff) in nf.terms() {
        if j > m {
            continue;
        }
        let mut fall = Rat::one();
        for step in 0..j {
            fall *= Rat::from_integer((m - step).into());
        }
        let exponent = m - j + i;
        let entry = out.entry(exponent).or_insert_with(LambdaPoly::zero);
        *entry = &*entry + &coeff.scale(&fall);
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
