//! Dense univariate polynomials over an exact field, low degree first.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::scalar::Scalar;

/// A polynomial with coefficients in `F`, stored densely from the constant
/// term up. The top coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field = Scalar> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * x^k.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The variable x.
    pub fn var() -> Self {
        Poly::monomial(F::one(), 1)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&n| F::from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Divide out the leading coefficient; returns (leading, monic part).
    /// Panics on zero.
    pub fn make_monic(&self) -> (F, Poly<F>) {
        let lead = self.leading().expect("monic part of zero").clone();
        let inv = lead.inv().expect("nonzero leading");
        (
            lead,
            Poly::new(self.coeffs.iter().map(|c| c.mul(&inv)).collect()),
        )
    }

    pub fn scale(&self, c: &F) -> Poly<F> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Poly<F> {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.mul(&F::from_int(k as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Coefficients of the expansion in powers of (x - a): index j holds the
    /// coefficient of (x - a)^j, i.e. p^(j)(a)/j!. Always returns `depth`
    /// entries (padded with zeros).
    pub fn taylor_at(&self, a: &F, depth: usize) -> Vec<F> {
        // repeated synthetic division by (x - a)
        let mut rem = self.coeffs.clone();
        let mut out = Vec::with_capacity(depth);
        for _ in 0..depth {
            if rem.is_empty() {
                out.push(F::zero());
                continue;
            }
            let mut carry = F::zero();
            for c in rem.iter_mut().rev() {
                carry = carry.mul(a).add(c);
                *c = carry.clone();
            }
            let r = rem.remove(0);
            out.push(r);
        }
        out
    }

    /// p(x + a); the coefficients are the Taylor coefficients of p at a.
    pub fn shift(&self, a: &F) -> Poly<F> {
        Poly::new(self.taylor_at(a, self.coeffs.len().max(1)))
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    /// Panics when d = 0.
    pub fn divrem(&self, d: &Poly<F>) -> (Poly<F>, Poly<F>) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dlead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<F> = vec![];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().mul(&dlead_inv);
            for j in 0..=dd {
                let t = rem[k + j].sub(&c.mul(&d.coeffs[j]));
                rem[k + j] = t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot.push(c);
        }
        quot.reverse();
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly<F>) -> Poly<F> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic().1
        }
    }

    pub fn pow(&self, e: u32) -> Poly<F> {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Valuation at a: the multiplicity of the root a (0 when p(a) != 0).
    /// Panics on the zero polynomial.
    pub fn valuation_at(&self, a: &F) -> usize {
        assert!(!self.is_zero(), "valuation of zero polynomial");
        let lin = Poly::new(vec![a.neg(), F::one()]);
        let mut p = self.clone();
        let mut v = 0;
        loop {
            let (q, r) = p.divrem(&lin);
            if r.is_zero() {
                v += 1;
                p = q;
            } else {
                return v;
            }
        }
    }

    /// Map coefficients into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                // only safe when the magnitude prints without a leading sign
                Some(rest) if !rest.is_empty() => ("-", rest.to_string()),
                _ => ("+", cs),
            };
            let needs_parens = mag.contains('+') || mag.contains('-');
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if needs_parens {
                format!("({mag})")
            } else {
                mag
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{var}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }

    pub fn to_string_var(&self, var: &str) -> String {
        struct W<'a, F: Field>(&'a Poly<F>, &'a str);
        impl<F: Field> fmt::Display for W<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        W(self, var).to_string()
    }
}

/// Truncated exponential of a polynomial with zero constant term:
/// sum of w^k / k! for k < depth, reduced mod x^depth.
pub fn exp_truncated<F: Field>(w: &Poly<F>, depth: usize) -> Poly<F> {
    assert!(
        w.coeff(0).is_zero(),
        "exp of series requires zero constant term"
    );
    let truncate = |p: &Poly<F>| Poly::new(p.coeffs().iter().take(depth).cloned().collect());
    let mut acc = Poly::one();
    let mut term = Poly::one();
    for k in 1..depth {
        term = truncate(&(&term * w)).scale(&F::from_int(k as i64).inv().unwrap());
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    truncate(&acc)
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Poly::new(out)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&rhs.coeff(k)));
        }
        Poly::new(out)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x")
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Scalar>;

    #[test]
    fn trim_and_degree() {
        let p = P::new(vec![
            Scalar::from_int(1),
            Scalar::from_int(0),
            Scalar::from_int(0),
        ]);
        assert_eq!(p.degree(), Some(0));
        assert!(P::zero().degree().is_none());
    }

    #[test]
    fn divrem_exact() {
        // x^2 - 1 = (x - 1)(x + 1)
        let p = P::from_ints(&[-1, 0, 1]);
        let d = P::from_ints(&[-1, 1]);
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, P::from_ints(&[1, 1]));
    }

    #[test]
    fn gcd_common_factor() {
        let a = P::from_ints(&[-1, 0, 1]); // (x-1)(x+1)
        let b = P::from_ints(&[1, -2, 1]); // (x-1)^2
        assert_eq!(a.gcd(&b), P::from_ints(&[-1, 1]));
    }

    #[test]
    fn taylor_and_shift() {
        // p = x^3 at a = 1: coefficients 1, 3, 3, 1
        let p = P::from_ints(&[0, 0, 0, 1]);
        let t = p.taylor_at(&Scalar::from_int(1), 4);
        let expected: Vec<Scalar> = [1, 3, 3, 1].iter().map(|&n| Scalar::from_int(n)).collect();
        assert_eq!(t, expected);
        assert_eq!(p.shift(&Scalar::from_int(1)), P::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn valuation() {
        let p = P::from_ints(&[0, 0, 3, 3]); // 3x^2(x+1)
        assert_eq!(p.valuation_at(&Scalar::from_int(0)), 2);
        assert_eq!(p.valuation_at(&Scalar::from_int(-1)), 1);
        assert_eq!(p.valuation_at(&Scalar::from_int(2)), 0);
    }

    #[test]
    fn exp_truncation() {
        // exp(x) mod x^4 = 1 + x + x^2/2 + x^3/6
        let e = exp_truncated(&P::var(), 4);
        assert_eq!(e.coeff(0), Scalar::from_int(1));
        assert_eq!(e.coeff(2), Scalar::ratio(1, 2));
        assert_eq!(e.coeff(3), Scalar::ratio(1, 6));
    }

    #[test]
    fn display_descending() {
        let p = P::from_ints(&[2, 4, 1]);
        assert_eq!(p.to_string(), "x^2 + 4*x + 2");
        assert_eq!(P::from_ints(&[0, -1]).to_string(), "-x");
    }
}
