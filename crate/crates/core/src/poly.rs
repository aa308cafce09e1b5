//! Univariate polynomials with arbitrary-precision coefficients, rational
//! functions built from them, and exact interpolation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Name of the indeterminate. Only used for printing and serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Variable {
    #[default]
    N,
    T,
}

impl Variable {
    pub fn as_str(self) -> &'static str {
        match self {
            Variable::N => "n",
            Variable::T => "t",
        }
    }
}

/// Polynomial in one variable over the integers, `coeffs[i]` multiplying
/// `var^i`. The coefficient list never ends in a zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    var: Variable,
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(var: Variable, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { var, coeffs }
    }

    pub fn from_i64s(var: Variable, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(var: Variable) -> Self {
        IntPolynomial {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::constant(var, BigInt::one())
    }

    pub fn constant(var: Variable, c: BigInt) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^degree`.
    pub fn monomial(var: Variable, c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(var, coeffs)
    }

    /// The polynomial `var + shift`.
    pub fn linear(var: Variable, shift: i64) -> Self {
        Self::from_i64s(var, &[shift, 1])
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    /// Largest `m` with `var^m` dividing `self` (0 for the zero polynomial).
    pub fn lowest_degree(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::new(self.var, coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `var^shift`.
    pub fn shift_up(&self, shift: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial {
            var: self.var,
            coeffs,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &IntPolynomial) -> Self {
        let mut acc = Self::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(inner.var, c.clone());
        }
        acc
    }

    /// Quotient of an exact division in `Z[x]`, or `None` if `divisor` does
    /// not divide `self` there.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading_coefficient()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(self.var, quot))
        } else {
            None
        }
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading_coefficient().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.var, self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_remainder(&self, b: &IntPolynomial) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lead = b.leading_coefficient().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > db && !rem.is_empty() {
            let top = rem.pop().unwrap();
            let shift = rem.len() - db;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, d) in b.coeffs[..db].iter().enumerate() {
                rem[shift + j] -= &top * d;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::new(self.var, rem)
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading
    /// coefficient (times the gcd of the contents).
    pub fn gcd(&self, other: &IntPolynomial) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }

    /// Repeatedly divide out each candidate factor. Returns the exponent
    /// found for each candidate and the cofactor left over.
    pub fn factor_by_candidates(&self, candidates: &[IntPolynomial]) -> (Vec<u64>, IntPolynomial) {
        let mut rest = self.clone();
        let exps = candidates
            .iter()
            .map(|cand| {
                let mut e = 0;
                if cand.degree().unwrap_or(0) == 0 || rest.is_zero() {
                    return 0;
                }
                while let Some(q) = rest.div_exact(cand) {
                    rest = q;
                    e += 1;
                }
                e
            })
            .collect();
        (exps, rest)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        IntPolynomial::new(self.var, coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero(self.var);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(self.var, out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.var, self.coeffs.iter().enumerate().rev())
    }
}

fn write_terms<'a, C: 'a + TermCoeff>(
    f: &mut fmt::Formatter<'_>,
    var: Variable,
    terms: impl Iterator<Item = (usize, &'a C)>,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in terms {
        if c.is_zero_coeff() {
            continue;
        }
        let negative = c.is_negative_coeff();
        let mag = c.magnitude_string();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag == "1";
        match i {
            0 => f.write_str(&mag)?,
            _ => {
                if !unit {
                    write!(f, "{mag}*")?;
                }
                f.write_str(var.as_str())?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

trait TermCoeff {
    fn is_zero_coeff(&self) -> bool;
    fn is_negative_coeff(&self) -> bool;
    fn magnitude_string(&self) -> String;
}

impl TermCoeff for BigInt {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn magnitude_string(&self) -> String {
        use alloc::string::ToString;
        self.abs().to_string()
    }
}

impl TermCoeff for BigRational {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn magnitude_string(&self) -> String {
        crate::format_rational(&self.abs())
    }
}

/// Polynomial with rational coefficients; used where monic orthogonal
/// polynomials have non-integral recurrence data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// `(x - shift) * self`.
    pub fn mul_linear(&self, shift: &BigRational) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * shift;
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &RatPolynomial) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_default()
                        - other.coeffs.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &RatPolynomial) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// The integer polynomial with the same coefficients, if they are all
    /// integers.
    pub fn to_integer(&self, var: Variable) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|c| IntPolynomial::new(var, c))
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        Self::new(
            p.coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, Variable::N, self.coeffs.iter().enumerate().rev())
    }
}

/// Quotient of two integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

/// Result of reducing a [`RationalFunction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    Polynomial(IntPolynomial),
    Fraction(RationalFunction),
}

impl Reduced {
    pub fn into_polynomial(self) -> Result<IntPolynomial> {
        match self {
            Reduced::Polynomial(p) => Ok(p),
            Reduced::Fraction(_) => Err(Error::NonPolynomial),
        }
    }
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        RationalFunction { num, den }
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        let var = p.var();
        RationalFunction {
            num: p,
            den: IntPolynomial::one(var),
        }
    }

    /// `num * p^e` or `den * p^-e` depending on the sign of `e`.
    pub fn mul_power(&mut self, p: &IntPolynomial, e: i64) {
        if e >= 0 {
            self.num = &self.num * &p.pow(e as u64);
        } else {
            self.den = &self.den * &p.pow(e.unsigned_abs());
        }
    }

    /// Cancel common factors. The denominator of a surviving fraction has
    /// positive leading coefficient and the pair has coprime contents.
    pub fn normalize(&self) -> Result<Reduced> {
        if self.den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return Ok(Reduced::Polynomial(q));
        }
        let g = self.num.gcd(&self.den);
        let mut num = self.num.div_exact(&g).expect("gcd divides numerator");
        let mut den = self.den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() && !c.is_zero() {
            num = num
                .div_exact(&IntPolynomial::constant(num.var(), c.clone()))
                .unwrap();
            den = den
                .div_exact(&IntPolynomial::constant(den.var(), c))
                .unwrap();
        }
        if den.leading_coefficient().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        if den.is_one() {
            return Ok(Reduced::Polynomial(num));
        }
        Ok(Reduced::Fraction(RationalFunction { num, den }))
    }

    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        (!d.is_zero()).then(|| self.num.eval_rational(x) / d)
    }
}

/// The unique polynomial of degree at most `degree` through `points`.
///
/// The first `degree + 1` distinct nodes determine the fit; every further
/// point must lie on it.
pub fn interpolate_from_values(
    points: &[(BigInt, BigInt)],
    degree: usize,
) -> Result<IntPolynomial> {
    let mut nodes: Vec<(BigRational, BigRational)> = Vec::with_capacity(degree + 1);
    let mut extra = Vec::new();
    for (x, y) in points {
        let xr = BigRational::from_integer(x.clone());
        let yr = BigRational::from_integer(y.clone());
        if let Some((_, y0)) = nodes.iter().find(|(x0, _)| *x0 == xr) {
            if *y0 != yr {
                return Err(Error::DegreeExceeded { degree });
            }
            continue;
        }
        if nodes.len() <= degree {
            nodes.push((xr, yr));
        } else {
            extra.push((x.clone(), y.clone()));
        }
    }
    if nodes.len() <= degree {
        return Err(Error::TooFewPoints {
            needed: degree + 1,
            got: nodes.len(),
        });
    }

    // Newton divided differences, then expand the Newton basis.
    let m = nodes.len();
    let mut dd: Vec<BigRational> = nodes.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i].0 - &nodes[i - level].0);
        }
    }
    let poly = horner_newton(&dd, &nodes);
    let int = poly
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegral { degree: i })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let p = IntPolynomial::new(Variable::N, int);
    if extra.iter().any(|(x, y)| p.eval(x) != *y) {
        return Err(Error::DegreeExceeded { degree });
    }
    Ok(p)
}

/// Expand `sum dd[i] * prod_{j<i} (x - x_j)` into the monomial basis.
fn horner_newton(dd: &[BigRational], nodes: &[(BigRational, BigRational)]) -> RatPolynomial {
    let m = dd.len();
    let mut acc = RatPolynomial::new(vec![dd[m - 1].clone()]);
    for i in (0..m - 1).rev() {
        acc = acc.mul_linear(&nodes[i].0);
        let mut c = acc.coeffs.clone();
        if c.is_empty() {
            c.push(BigRational::zero());
        }
        c[0] += &dd[i];
        acc = RatPolynomial::new(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(Variable::N, c)
    }

    fn pts(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect()
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!((&a * &b).to_string(), "n^3 + n^2 - n - 1");
        assert_eq!((&a - &a).to_string(), "0");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "n^3 - 2*n");
        assert_eq!(b.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[0, 1])), None);
        assert_eq!(p(&[0, 0, 2]).div_exact(&p(&[0, 2])), Some(p(&[0, 1])));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn compose_shift() {
        // (n-1)^2 - 1 = n^2 - 2n
        assert_eq!(p(&[-1, 0, 1]).compose(&p(&[-1, 1])), p(&[0, -2, 1]));
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(
            interpolate_from_values(&pts(&[(0, 0), (1, 1), (2, 4)]), 2).unwrap(),
            p(&[0, 0, 1])
        );
        assert_eq!(
            interpolate_from_values(&pts(&[(1, 1), (2, 1)]), 0).unwrap(),
            p(&[1])
        );
        assert_eq!(
            interpolate_from_values(&pts(&[(0, 0), (1, 0), (2, 2)]), 1),
            Err(Error::DegreeExceeded { degree: 1 })
        );
        assert_eq!(
            interpolate_from_values(&pts(&[(0, 0), (2, 1)]), 1),
            Err(Error::NonIntegral { degree: 1 })
        );
        assert_eq!(
            interpolate_from_values(&pts(&[(0, 0), (0, 0)]), 1),
            Err(Error::TooFewPoints { needed: 2, got: 1 })
        );
    }

    #[test]
    fn ratfun_examples() {
        let n3n12 = &p(&[0, 0, 0, 1]) * &p(&[-1, 1]).pow(2);
        let r = RationalFunction::new(n3n12.clone(), p(&[1]));
        assert_eq!(r.normalize().unwrap(), Reduced::Polynomial(n3n12));
        let r = RationalFunction::new(p(&[0, 0, 0, 0, 1]), p(&[0, 0, 1]));
        assert_eq!(r.normalize().unwrap(), Reduced::Polynomial(p(&[0, 0, 1])));
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(r.normalize().unwrap(), Reduced::Polynomial(p(&[1, 1])));
        let r = RationalFunction::new(p(&[1]), p(&[]));
        assert_eq!(r.normalize(), Err(Error::ZeroDenominator));
        let r = RationalFunction::new(&p(&[2, 1]) * &p(&[-1, 1]), &p(&[0, -2]) * &p(&[-1, 1]));
        match r.normalize().unwrap() {
            Reduced::Fraction(f) => {
                assert_eq!(f.num, p(&[-2, -1]));
                assert_eq!(f.den, p(&[0, 2]));
            }
            other => panic!("expected fraction, got {other:?}"),
        }
    }
}
