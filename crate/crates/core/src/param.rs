//! Exact polynomials and rational functions in the deformation parameter `k`.
//!
//! [`ParamPoly`] is a dense polynomial with arbitrary precision rational
//! coefficients; [`ParamRat`] is a reduced fraction of two such polynomials
//! with monic denominator. Together they realize the coefficient field
//! `Q(k)` used throughout the symmetric function layer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Polynomial in `k` over the rationals. Coefficients are stored densely by
/// degree; the leading coefficient is never zero and the zero polynomial has
/// an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPoly {
    coeffs: Vec<Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = ParamPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * k^d`.
    pub fn monomial(c: Rat, d: u32) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d as usize + 1];
        coeffs[d as usize] = c;
        ParamPoly { coeffs }
    }

    /// The variable `k` itself.
    pub fn k() -> Self {
        ParamPoly::monomial(Rat::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = ParamPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as u32 - 1)
        }
    }

    pub fn coeff(&self, d: u32) -> Rat {
        self.coeffs.get(d as usize).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, k0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * k0 + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, rhs: &ParamPoly) -> Option<ParamPoly> {
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn div_rem(&self, rhs: &ParamPoly) -> (ParamPoly, ParamPoly) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let dd = rhs.coeffs.len();
        if rem.coeffs.len() < dd {
            return (ParamPoly::zero(), rem);
        }
        let mut q = vec![Rat::zero(); rem.coeffs.len() - dd + 1];
        let lead = rhs.coeffs.last().unwrap().clone();
        while rem.coeffs.len() >= dd && !rem.is_zero() {
            let shift = rem.coeffs.len() - dd;
            let factor = rem.coeffs.last().unwrap() / &lead;
            q[shift] = factor.clone();
            for (i, c) in rhs.coeffs.iter().enumerate() {
                let idx = shift + i;
                let v = &rem.coeffs[idx] - c * &factor;
                rem.coeffs[idx] = v;
            }
            // the top coefficient cancels exactly
            rem.coeffs.pop();
            rem.trim();
        }
        (ParamPoly::from_coeffs(q), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &ParamPoly) -> ParamPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    fn into_monic(mut self) -> ParamPoly {
        if let Some(lead) = self.coeffs.last().cloned() {
            if !lead.is_one() {
                for c in &mut self.coeffs {
                    *c = &*c / &lead;
                }
            }
        }
        self
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            coeffs.push(a + b);
        }
        ParamPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &(-rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = v;
            }
        }
        ParamPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || d == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if d > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if d == 1 {
                    write!(f, "k")?;
                } else {
                    write!(f, "k^{}", d)?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduced fraction of two [`ParamPoly`]; the denominator is monic and
/// coprime to the numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamRat {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamRat {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return ParamRat {
                num: ParamPoly::zero(),
                den: ParamPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).unwrap();
        let mut den = den.div_exact(&g).unwrap();
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            num = num.scale(&(Rat::one() / &lead));
            den = den.scale(&(Rat::one() / &lead));
        }
        ParamRat { num, den }
    }

    pub fn zero() -> Self {
        ParamRat {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        ParamRat::from_poly(ParamPoly::one())
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamRat {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        ParamRat::from_poly(ParamPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    /// Extract a polynomial when the denominator is 1.
    pub fn to_poly(&self) -> Option<ParamPoly> {
        if self.den.degree() == Some(0) {
            // reduced form has monic denominator, so den == 1
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// Exact evaluation at `k0`; `None` if `k0` is a pole.
    pub fn eval(&self, k0: &Rat) -> Option<Rat> {
        let d = self.den.eval(k0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(k0) / d)
        }
    }

    pub fn recip(&self) -> ParamRat {
        assert!(!self.is_zero(), "reciprocal of zero");
        ParamRat::new(self.den.clone(), self.num.clone())
    }

    fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.num.degree() == Some(0) && self.den.degree() == Some(0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn scale_rat(&self, c: &Rat) -> ParamRat {
        if c.is_zero() {
            return ParamRat::zero();
        }
        ParamRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Add for &ParamRat {
    type Output = ParamRat;
    fn add(self, rhs: &ParamRat) -> ParamRat {
        if self.den == rhs.den {
            return ParamRat::new(&self.num + &rhs.num, self.den.clone());
        }
        ParamRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &ParamRat {
    type Output = ParamRat;
    fn sub(self, rhs: &ParamRat) -> ParamRat {
        self + &(-rhs)
    }
}

impl Neg for &ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        ParamRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ParamRat {
    type Output = ParamRat;
    fn mul(self, rhs: &ParamRat) -> ParamRat {
        // scalar factors never change the monic polynomial gcd, so
        // multiplying by a constant keeps the fraction reduced
        if let Some(c) = rhs.as_constant() {
            return self.scale_rat(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale_rat(&c);
        }
        ParamRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for ParamRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic() {
        let k = ParamPoly::k();
        let p = &(&k * &k) + &k; // k^2 + k
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&rat_int(3)), rat_int(12));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn poly_display() {
        let p = ParamPoly::from_coeffs(vec![rat_int(0), rat_int(-1), rat_int(2)]);
        assert_eq!(p.to_string(), "2*k^2 - k");
        assert_eq!(ParamPoly::zero().to_string(), "0");
        assert_eq!(ParamPoly::one().to_string(), "1");
    }

    #[test]
    fn rat_reduction() {
        // (k^2 - 1) / (k - 1) reduces to k + 1
        let k = ParamPoly::k();
        let num = &(&k * &k) - &ParamPoly::one();
        let den = &k - &ParamPoly::one();
        let r = ParamRat::new(num, den);
        assert_eq!(r.to_poly().unwrap(), &k + &ParamPoly::one());
    }

    #[test]
    fn rat_denominator_monic() {
        // k / (2k + 2) has monic denominator k + 1 after normalization
        let r = ParamRat::new(
            ParamPoly::k(),
            ParamPoly::from_coeffs(vec![rat_int(2), rat_int(2)]),
        );
        assert!(r.den().leading().unwrap().is_one());
        assert_eq!(r.eval(&rat_int(1)).unwrap(), rat(1, 4));
    }

    #[test]
    fn gcd_monic() {
        let k = ParamPoly::k();
        let a = &(&k * &k) - &ParamPoly::one();
        let b = &(&k + &ParamPoly::one()) * &ParamPoly::constant(rat_int(7));
        let g = a.gcd(&b);
        assert_eq!(g, &k + &ParamPoly::one());
    }
}
