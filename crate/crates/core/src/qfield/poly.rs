use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `s` with rational coefficients.
///
/// Stored densely from the lowest exponent upward; the first and last stored
/// coefficients are nonzero, so equal polynomials have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out = out.add(&Self::monomial(c, e));
        }
        out
    }

    fn from_dense(low: i32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly {
            low: low + lead_zeros as i32,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for a single term `c s^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Span of exponents, `high - low`; zero for monomials.
    pub fn width(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_dense(self.low + other.low, coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `s^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation; the caller guarantees `s != 0` when negative exponents occur.
    pub fn eval(&self, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s + c;
        }
        if self.low >= 0 {
            acc * pow_rat(s, self.low as u32)
        } else {
            acc / pow_rat(s, (-self.low) as u32)
        }
    }

    /// Coefficient vector of the ordinary polynomial `self * s^{-low}`.
    pub(crate) fn dense(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub(crate) fn from_dense_at(low: i32, coeffs: Vec<BigRational>) -> Self {
        Self::from_dense(low, coeffs)
    }

    /// Least common multiple of coefficient denominators and gcd of numerators.
    pub(crate) fn content_parts(&self) -> (BigInt, BigInt) {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        (den_lcm, num_gcd)
    }

    /// Writes the polynomial with integer coefficients, highest exponent first.
    /// Panics if a coefficient is not an integer.
    pub(crate) fn fmt_integer(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            debug_assert!(c.is_integer());
            let n = c.numer();
            let neg = n.is_negative();
            let mag = n.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{}*s", mag)?,
                (_, true) => write!(f, "s^{}", e)?,
                (_, false) => write!(f, "{}*s^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

pub(crate) fn pow_rat(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Ordinary polynomial helpers on ascending coefficient vectors.
pub(crate) mod dense {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    pub fn trim(v: &mut Vec<BigRational>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn degree(v: &[BigRational]) -> Option<usize> {
        v.iter().rposition(|c| !c.is_zero())
    }

    /// Quotient and remainder of `a / b`, `b` nonzero.
    pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let db = degree(b).expect("division by zero polynomial");
        let lb = &b[db];
        let mut r: Vec<BigRational> = a.to_vec();
        trim(&mut r);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = &r[dr] / lb;
            let shift = dr - db;
            for (i, bc) in b[..=db].iter().enumerate() {
                if !bc.is_zero() {
                    let t = &c * bc;
                    r[shift + i] -= t;
                }
            }
            r[dr] = BigRational::zero();
            q[shift] = c;
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn make_monic(v: &mut [BigRational]) {
        if let Some(d) = degree(v) {
            let lc = v[d].clone();
            if !lc.is_one() {
                for c in v.iter_mut() {
                    *c = &*c / &lc;
                }
            }
        }
    }

    /// Monic gcd; both inputs nonzero.
    pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while degree(&y).is_some() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
            make_monic(&mut x);
        }
        make_monic(&mut x);
        x
    }

    pub fn is_one(v: &[BigRational]) -> bool {
        v.len() == 1 && v[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn add_cancels_to_canonical_zero() {
        let p = LaurentPoly::from_terms([(2, r(1)), (-2, r(-1))]);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.sub(&p), LaurentPoly::zero());
    }

    #[test]
    fn mul_and_eval() {
        // (s - s^-1)(s + s^-1) = s^2 - s^-2
        let a = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1))]);
        let b = LaurentPoly::from_terms([(1, r(1)), (-1, r(1))]);
        let p = a.mul(&b);
        assert_eq!(p, LaurentPoly::from_terms([(2, r(1)), (-2, r(-1))]));
        let s = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(
            p.eval(&s),
            BigRational::new(BigInt::from(65), BigInt::from(36))
        );
    }

    #[test]
    fn dense_gcd() {
        // gcd(x^2 - 1, x^2 + 2x + 1) = x + 1
        let a = vec![r(-1), r(0), r(1)];
        let b = vec![r(1), r(2), r(1)];
        assert_eq!(dense::gcd(&a, &b), vec![r(1), r(1)]);
    }
}
