//! Exact scalars and dense univariate polynomials over them.
//!
//! [`Rat`] is an arbitrary-precision rational and the base field for
//! everything else. [`Poly`] is a dense univariate polynomial over any
//! coefficient ring; the two instantiations used throughout the crate are
//! [`LambdaPoly`] (polynomials in the deformation parameter, printed with
//! the variable `l`) and [`XPoly`] (polynomials in an outer variable whose
//! coefficients are themselves `LambdaPoly`).
//!
//! All values are immutable after construction and safe to share across
//! threads.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator; zero is `0/1`.
pub type Rat = BigRational;

/// `p/q` as a [`Rat`].
///
/// Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Integer as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Exact multiplicative inverse; zero has none.
pub fn rat_inv(a: &Rat) -> Result<Rat, Error> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a.recip())
}

/// Coefficient ring requirements for [`Poly`].
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}
impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{}

/// Dense univariate polynomial. `coeffs[i]` holds the coefficient of the
/// i-th power; the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Polynomial in λ with rational coefficients.
pub type LambdaPoly = Poly<Rat>;

/// Polynomial in an outer variable (x, or the number operator) over ℚ\[λ\].
pub type XPoly = Poly<LambdaPoly>;

impl<T: Coeff> Poly<T> {
    /// Build from coefficients in ascending degree, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the i-th power (zero beyond the stored ones).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Poly::new(Vec::new());
        }
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, point: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point.clone() + c.clone();
        }
        acc
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl LambdaPoly {
    /// The deformation parameter λ.
    pub fn lambda() -> LambdaPoly {
        Poly::var()
    }

    /// Integer coefficients in ascending degree; test and example helper.
    pub fn from_ints(coeffs: &[i64]) -> LambdaPoly {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }
}

impl XPoly {
    /// Specialize every λ-coefficient at a rational point, leaving a
    /// polynomial in the outer variable with rational coefficients.
    pub fn at_lambda(&self, lam: &Rat) -> Poly<Rat> {
        Poly::new(self.coeffs.iter().map(|c| c.eval(lam)).collect())
    }
}

impl fmt::Display for LambdaPoly {
    /// Human form, e.g. `1 - 2*l + l^2`, with `l` denoting λ.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rat::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "l")?;
                } else {
                    write!(f, "l^{i}")?;
                }
            }
        }
        Ok(())
    }
}
