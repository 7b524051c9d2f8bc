//! Truncated formal power series in `t`, stored in EGF form.
//!
//! Entry `n` of a series is the coefficient of t^n/n!, so every identity in
//! this crate reads off directly and products carry binomial weights instead
//! of divisions. All arithmetic is exact modulo t^(order+1); binary
//! operations truncate to the smaller order.

use num::{One, Zero};

use super::poly::Poly;
use super::rational::{binomial, factorial, Rational};
use crate::error::{Error, Result};

/// Coefficient ring for a series: exact rationals or polynomials in `x`.
pub trait SeriesCoeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, where one exists (nonzero rational; nonzero
    /// constant polynomial).
    fn try_invert(&self) -> Option<Self>;
    fn render(&self) -> String;
}

impl SeriesCoeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_invert(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl SeriesCoeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        Poly::scale(self, r)
    }
    fn try_invert(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Poly::constant(self.coeff(0).recip())),
            _ => None,
        }
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// Truncated series with coefficients in EGF form.
#[derive(Debug, Clone, PartialEq)]
pub struct EgfSeries<C: SeriesCoeff> {
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> EgfSeries<C> {
    /// Series from the coefficient sequence a_0..a_N (EGF form).
    pub fn from_sequence(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        EgfSeries { coeffs }
    }

    pub fn to_sequence(&self) -> &[C] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^n/n! (zero past the order).
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        EgfSeries { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        EgfSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        EgfSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        EgfSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].sub(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// EGF product: c_n = sum_k binom(n,k) a_k b_{n-k}.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = C::zero();
            for k in 0..=i {
                let term = self.coeffs[k].mul(&rhs.coeffs[i - k]);
                acc = acc.add(&term.scale(&Rational::from_integer(binomial(i, k))));
            }
            coeffs.push(acc);
        }
        EgfSeries { coeffs }
    }

    /// Reciprocal by the direct recurrence
    /// c_0 = 1/a_0, c_n = -(1/a_0) sum_{k=1..n} binom(n,k) a_k c_{n-k}.
    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_invert()
            .ok_or(Error::ZeroConstantTerm)?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for k in 1..=n {
                let term = self.coeffs[k].mul(&out[n - k]);
                acc = acc.add(&term.scale(&Rational::from_integer(binomial(n, k))));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// Exponential of a series with zero constant term:
    /// b_0 = 1, b_n = sum_{k=1..n} binom(n-1,k-1) a_k b_{n-k}.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::one());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for k in 1..=n {
                let term = self.coeffs[k].mul(&out[n - k]);
                acc = acc.add(&term.scale(&Rational::from_integer(binomial(n - 1, k - 1))));
            }
            out.push(acc);
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// Multiply by t^r: c_n = a_{n-r} * n!/(n-r)! for n >= r, else 0.
    pub fn scale_pow_t(&self, r: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![C::zero(); order + 1];
        for n in r..=order {
            let shift = Rational::from_integer(factorial(n) / factorial(n - r));
            coeffs[n] = self.coeffs[n - r].scale(&shift);
        }
        EgfSeries { coeffs }
    }
}

impl EgfSeries<Rational> {
    /// e^(ct).
    pub fn exp_ct(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = Rational::one();
        for _ in 0..=order {
            coeffs.push(acc.clone());
            acc *= c;
        }
        EgfSeries { coeffs }
    }

    /// e^t: every EGF coefficient is 1.
    pub fn exp_t(order: usize) -> Self {
        Self::exp_ct(&Rational::one(), order)
    }

    /// e^(-t): coefficients (-1)^n.
    pub fn exp_neg_t(order: usize) -> Self {
        Self::exp_ct(&-Rational::one(), order)
    }

    /// 1/(1-t)^k: EGF coefficient n! * binom(n+k-1, k-1).
    pub fn inv_one_minus_t_pow(k: usize, order: usize) -> Self {
        assert!(k >= 1);
        let coeffs = (0..=order)
            .map(|n| Rational::from_integer(factorial(n) * binomial(n + k - 1, k - 1)))
            .collect();
        EgfSeries { coeffs }
    }

    /// 1/(1-t): EGF coefficient n!.
    pub fn geometric(order: usize) -> Self {
        Self::inv_one_minus_t_pow(1, order)
    }
}

impl EgfSeries<Poly> {
    /// e^(xt): EGF coefficient x^n, carried symbolically.
    pub fn exp_xt(order: usize) -> Self {
        let coeffs = (0..=order).map(Poly::monomial).collect();
        EgfSeries { coeffs }
    }

    /// Lift a rational-coefficient series into constant polynomials.
    pub fn lift(series: &EgfSeries<Rational>) -> Self {
        EgfSeries {
            coeffs: series
                .coeffs
                .iter()
                .map(|c| Poly::constant(c.clone()))
                .collect(),
        }
    }

    /// 1/(1-xt): EGF coefficient n! * x^n.
    pub fn inv_one_minus_xt(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| Poly::monomial(n).scale(&Rational::from_integer(factorial(n))))
            .collect();
        EgfSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, ratio};

    fn rats(vals: &[(i64, i64)]) -> Vec<Rational> {
        vals.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn product_of_exp_and_its_reciprocal_is_one() {
        let a = EgfSeries::exp_t(4);
        let b = EgfSeries::exp_neg_t(4);
        assert_eq!(a.mul(&b), EgfSeries::one(4));
    }

    #[test]
    fn square_of_one_plus_t() {
        let a = EgfSeries::from_sequence(vec![rat(1), rat(1), rat(0), rat(0), rat(0)]);
        let c = a.mul(&a);
        assert_eq!(
            c.to_sequence(),
            &[rat(1), rat(2), rat(2), rat(0), rat(0)]
        );
    }

    #[test]
    fn geometric_times_exp_neg_gives_derangement_numbers() {
        let c = EgfSeries::geometric(6).mul(&EgfSeries::exp_neg_t(6));
        let expected: Vec<Rational> = [1, 0, 1, 2, 9, 44, 265].iter().map(|&v| rat(v)).collect();
        assert_eq!(c.to_sequence(), &expected[..]);
    }

    #[test]
    fn recip_of_exp_is_exp_neg() {
        assert_eq!(EgfSeries::exp_t(6).recip().unwrap(), EgfSeries::exp_neg_t(6));
    }

    #[test]
    fn recip_of_half_exp_plus_one_gives_euler_numbers() {
        // (e^t + 1)/2 has EGF coefficients [1, 1/2, 1/2, ...].
        let mut coeffs = vec![ratio(1, 2); 5];
        coeffs[0] = rat(1);
        let euler = EgfSeries::from_sequence(coeffs).recip().unwrap();
        assert_eq!(
            euler.to_sequence(),
            &rats(&[(1, 1), (-1, 2), (0, 1), (1, 4), (0, 1)])[..]
        );
    }

    #[test]
    fn recip_of_constant() {
        let two = EgfSeries::constant(rat(2), 3);
        assert_eq!(two.recip().unwrap(), EgfSeries::constant(ratio(1, 2), 3));
        assert_eq!(
            EgfSeries::constant(rat(0), 3).recip(),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn exp_of_t_and_of_zero() {
        let t = EgfSeries::from_sequence(vec![rat(0), rat(1), rat(0), rat(0)]);
        assert_eq!(t.exp().unwrap(), EgfSeries::exp_t(3));
        assert_eq!(EgfSeries::zero(3).exp().unwrap(), EgfSeries::one(3));
        assert_eq!(EgfSeries::one(3).exp(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn exp_of_exp_minus_one_gives_bell_numbers() {
        let mut coeffs = vec![rat(1); 6];
        coeffs[0] = rat(0);
        let bell = EgfSeries::from_sequence(coeffs).exp().unwrap();
        let expected: Vec<Rational> = [1, 1, 2, 5, 15, 52].iter().map(|&v| rat(v)).collect();
        assert_eq!(bell.to_sequence(), &expected[..]);
    }

    #[test]
    fn scale_pow_t_examples() {
        let a = EgfSeries::exp_neg_t(3);
        assert_eq!(a.scale_pow_t(0), a);
        assert_eq!(
            a.scale_pow_t(1).to_sequence(),
            &[rat(0), rat(1), rat(-2), rat(3)]
        );
        let g = EgfSeries::geometric(4);
        assert_eq!(
            g.scale_pow_t(2).to_sequence(),
            &[rat(0), rat(0), rat(2), rat(6), rat(24)]
        );
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = EgfSeries::exp_t(8);
        let b = EgfSeries::exp_neg_t(3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }

    #[test]
    fn poly_coefficient_kernel_expands_derangement_polynomials() {
        // e^(xt) * e^(-t) / (1-t), symbolically in x.
        let series = EgfSeries::exp_xt(4)
            .mul(&EgfSeries::lift(&EgfSeries::exp_neg_t(4)))
            .mul(&EgfSeries::lift(&EgfSeries::geometric(4)));
        assert_eq!(series.coeff(0), Poly::one());
        // D_1(x) = x, D_2(x) = x^2 + 1 (oracle output of this very expansion,
        // pinned: D_n(0) must equal the derangement numbers 0 and 1).
        assert_eq!(series.coeff(1), Poly::monomial(1));
        assert_eq!(
            series.coeff(2),
            Poly::from_coeffs(vec![rat(1), rat(0), rat(1)])
        );
        assert_eq!(series.coeff(2).eval(&rat(1)), rat(2));
    }
}
