//! Degenerate falling and rising factorials, classical falling factorials,
//! and binomial coefficients.
//!
//! The factorial operations take a [`LambdaPoly`] argument rather than a
//! bare variable, so they can be evaluated at λ-dependent points such as
//! `1 - l`; the `*_xpoly` builders produce the same products as
//! polynomials in an outer variable.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{Coeff, LambdaPoly, Poly, Rat, XPoly};

/// Π_{i=0}^{n-1} (p + i·step), the empty product for n = 0.
fn shifted_product<T: Coeff>(p: &Poly<T>, step: &Poly<T>, n: usize) -> Poly<T> {
    let mut acc = Poly::one();
    let mut factor = p.clone();
    for _ in 0..n {
        acc = &acc * &factor;
        factor = &factor + step;
    }
    acc
}

/// Degenerate falling factorial `p (p - l) (p - 2l) ... (p - (n-1)l)`.
pub fn deg_falling(p: &LambdaPoly, n: usize) -> LambdaPoly {
    shifted_product(p, &-LambdaPoly::lambda(), n)
}

/// Degenerate rising factorial `p (p + l) (p + 2l) ... (p + (n-1)l)`.
pub fn deg_rising(p: &LambdaPoly, n: usize) -> LambdaPoly {
    shifted_product(p, &LambdaPoly::lambda(), n)
}

/// Classical falling factorial `p (p - 1) (p - 2) ... (p - n + 1)`.
pub fn classical_falling(p: &LambdaPoly, n: usize) -> LambdaPoly {
    shifted_product(p, &-LambdaPoly::one(), n)
}

/// The degenerate falling factorial of the outer variable, as a polynomial
/// in that variable. Monic of degree exactly `n`.
pub fn deg_falling_xpoly(n: usize) -> XPoly {
    deg_falling_poly(&XPoly::var(), n)
}

/// The classical falling factorial of the outer variable.
pub fn classical_falling_xpoly(n: usize) -> XPoly {
    shifted_product(&XPoly::var(), &XPoly::constant(-LambdaPoly::one()), n)
}

/// Degenerate falling factorial of an arbitrary polynomial in the outer
/// variable: Π_{i=0}^{n-1} (p - i·l).
pub fn deg_falling_poly(p: &XPoly, n: usize) -> XPoly {
    shifted_product(p, &XPoly::constant(-LambdaPoly::lambda()), n)
}

/// Binomial coefficient, zero whenever the indices leave the triangle
/// (including negative arguments).
pub fn binomial(n: i64, k: i64) -> Rat {
    if n < 0 || k < 0 || k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: the running value is itself a binomial
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}
