use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{dense, LaurentPoly};
use crate::error::{Error, Result};

/// Element of Q(s), s = q^{1/2}, kept as a reduced fraction of Laurent polynomials.
///
/// The denominator has lowest exponent 0 and is monic, and it shares no
/// nonunit factor with the numerator; equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        FieldElem {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(r))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FieldElem {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `s^e`.
    pub fn s_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(BigRational::one(), e))
    }

    pub fn s() -> Self {
        Self::s_pow(1)
    }

    /// `q^e = s^{2e}`.
    pub fn q_pow(e: i32) -> Self {
        Self::s_pow(2 * e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// λ = q − q^{-1}.
    pub fn lambda() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    /// Reduces `num / den` to canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.low();
        let num = num.shift(-shift);
        let den = den.shift(-shift);
        if den.is_constant() {
            let c = den.coeff(0);
            let inv = BigRational::one() / c;
            return FieldElem {
                num: num.scale(&inv),
                den: LaurentPoly::one(),
            };
        }
        let (mut n, mut d) = (num.dense().to_vec(), den.dense().to_vec());
        if !num.is_monomial() {
            let g = dense::gcd(&n, &d);
            if !dense::is_one(&g) {
                let (qn, rn) = dense::divrem(&n, &g);
                let (qd, rd) = dense::divrem(&d, &g);
                debug_assert!(rn.is_empty() && rd.is_empty());
                n = qn;
                d = qd;
            }
        }
        let lc = d.last().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            for c in n.iter_mut() {
                *c = &*c / &lc;
            }
            for c in d.iter_mut() {
                *c = &*c / &lc;
            }
        }
        let num = LaurentPoly::from_dense_at(num.low(), n);
        let den = LaurentPoly::from_dense_at(0, d);
        if den.is_one() {
            return FieldElem { num, den };
        }
        FieldElem { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element is a Laurent polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Single term `c s^e` with denominator 1.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    /// True for a single-term element whose coefficient is negative.
    pub fn is_negative_monomial(&self) -> bool {
        self.is_monomial() && self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv_unchecked())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> Self {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Exact value at `s`, failing when the reduced denominator vanishes there.
    pub fn eval(&self, s: &BigRational) -> Result<BigRational> {
        let pole = || Error::PoleAtEvaluationPoint {
            point: s.to_string(),
        };
        if s.is_zero() && (self.num.low() < 0 || !self.is_polynomial()) {
            return Err(pole());
        }
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(pole());
        }
        Ok(self.num.eval(s) / d)
    }

    /// Numerator and denominator scaled to coprime integer coefficients.
    pub fn integer_parts(&self) -> (LaurentPoly, LaurentPoly) {
        let (l1, g1) = self.num.content_parts();
        let (l2, g2) = self.den.content_parts();
        let l = l1.lcm(&l2);
        // After scaling by l the contents become g1*l/l1 and g2*l/l2.
        let c1 = &g1 * (&l / &l1);
        let c2 = &g2 * (&l / &l2);
        let g = c1.gcd(&c2);
        let factor = BigRational::new(l, g);
        (self.num.scale(&factor), self.den.scale(&factor))
    }
}

impl fmt::Display for FieldElem {
    /// Canonical text: `N` or `(N)` or `(N)/(D)` with integer-coefficient
    /// Laurent polynomials in `s`, rational constants as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", r);
        }
        let (n, d) = self.integer_parts();
        struct P<'a>(&'a LaurentPoly);
        impl fmt::Display for P<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_integer(f)
            }
        }
        if d.is_one() {
            if n.is_monomial() {
                write!(f, "{}", P(&n))
            } else {
                write!(f, "({})", P(&n))
            }
        } else {
            write!(f, "({})/({})", P(&n), P(&d))
        }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return FieldElem {
                num: self.num.add(&o.num),
                den: LaurentPoly::one(),
            };
        }
        if self.den == o.den {
            return FieldElem::normalize(self.num.add(&o.num), self.den.clone());
        }
        FieldElem::normalize(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        if self.is_zero() || o.is_zero() {
            return FieldElem::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return FieldElem {
                num: self.num.mul(&o.num),
                den: LaurentPoly::one(),
            };
        }
        FieldElem::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        self + &(-o)
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    /// Panics on a zero divisor; use [`FieldElem::checked_div`] to get an error instead.
    fn div(self, o: &FieldElem) -> FieldElem {
        self.checked_div(o).expect("division by zero in Q(s)")
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, o: &FieldElem) {
        *self = &*self + o;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, o: &FieldElem) {
        *self = &*self - o;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, o: &FieldElem) {
        *self = &*self * o;
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldElem {
        FieldElem::q()
    }

    fn qi() -> FieldElem {
        FieldElem::q_pow(-1)
    }

    #[test]
    fn cancellation_to_q() {
        assert_eq!((q() - qi()) + qi(), q());
    }

    #[test]
    fn quotient_reduces_to_q() {
        let num = q() * q() - FieldElem::one();
        assert_eq!(num.checked_div(&FieldElem::lambda()).unwrap(), q());
    }

    #[test]
    fn structure_constant_minus_q_inverse() {
        // (q^-2 - 1)/λ as a Laurent expansion: q^-2 - 1 = -q^-1 (q - q^-1)
        let v = (FieldElem::q_pow(-2) - FieldElem::one()) / FieldElem::lambda();
        let expected = -FieldElem::q_pow(-1);
        assert_eq!(v, expected);
        assert_eq!(expected.numerator().terms().count(), 1);
    }

    #[test]
    fn eval_examples() {
        let s = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(
            q().eval(&s).unwrap(),
            BigRational::new(BigInt::from(9), BigInt::from(4))
        );
        assert_eq!(
            FieldElem::lambda().eval(&s).unwrap(),
            BigRational::new(BigInt::from(65), BigInt::from(36))
        );
        let inv = FieldElem::lambda().inv().unwrap();
        assert!(matches!(
            inv.eval(&BigRational::one()),
            Err(Error::PoleAtEvaluationPoint { .. })
        ));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            q().checked_div(&FieldElem::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_text() {
        assert_eq!(FieldElem::lambda().to_string(), "(s^2 - s^-2)");
        let x = FieldElem::one().checked_div(&FieldElem::lambda()).unwrap();
        assert_eq!(x.to_string(), "(s^2)/(s^4 - 1)");
        assert_eq!(FieldElem::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!((q() * FieldElem::from_ratio(1, 2)).to_string(), "(s^2)/(2)");
        assert_eq!(q().to_string(), "s^2");
    }
}
