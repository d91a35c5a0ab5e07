//! Exact integer polynomials in `x`, and sparse bivariate ones in `x, y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial with arbitrary-precision integer coefficients,
/// stored densely in ascending degree. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(1, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Polynomial::new(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial<T: Into<BigInt>>(c: T, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Polynomial::new(coeffs)
    }

    /// Builds from ascending coefficients, trimming high zero terms.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>, I: IntoIterator<Item = T>>(coeffs: I) -> Self {
        Polynomial::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(1 + x)^n` with exact binomial coefficients.
    pub fn binomial_power(n: usize) -> Polynomial {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for k in 0..n {
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
            coeffs.push(c.clone());
        }
        Polynomial::new(coeffs)
    }

    /// `self(inner(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Ascending coefficients as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Polynomial, num_bigint::ParseBigIntError> {
        let coeffs = items.iter().map(|s| s.as_ref().parse::<BigInt>()).collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }

    /// LaTeX rendering, e.g. `1 + 4x + 6x^{2}`.
    pub fn to_latex(&self) -> String {
        render_terms(self.coeffs.iter().enumerate().map(|(k, c)| (c, monomial_text(k, 0, true))))
    }
}

/// Renders `x^i y^j`; empty for the constant monomial.
fn monomial_text(i: usize, j: usize, latex: bool) -> String {
    let power = |var: char, e: usize| match e {
        0 => String::new(),
        1 => var.to_string(),
        _ if latex => format!("{var}^{{{e}}}"),
        _ => format!("{var}^{e}"),
    };
    format!("{}{}", power('x', i), power('y', j))
}

fn render_terms<'a, I: Iterator<Item = (&'a BigInt, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        let body = if mono.is_empty() {
            magnitude.to_string()
        } else if magnitude.is_one() {
            mono
        } else {
            format!("{magnitude}{mono}")
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    /// Ascending degree, `" + "` separators, zero terms omitted:
    /// `1 + 3x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render_terms(self.coeffs.iter().enumerate().map(|(k, c)| (c, monomial_text(k, 0, false))));
        f.write_str(&text)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coefficient(k) - rhs.coefficient(k)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A polynomial in `x` and `y`, stored as a sparse map from the exponent
/// pair `(i, j)` of `x^i y^j` to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    /// Adds `c * x^i y^j`, dropping the entry if it cancels to zero.
    pub fn add_term<T: Into<BigInt>>(&mut self, i: usize, j: usize, c: T) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms ordered by `(x-degree, y-degree)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `[y^k]`: the polynomial in `x` formed by all terms of y-degree `k`.
    pub fn coefficient_of_y(&self, k: usize) -> Polynomial {
        let degree = self.terms.keys().filter(|&&(_, j)| j == k).map(|&(i, _)| i).max();
        let Some(degree) = degree else {
            return Polynomial::zero();
        };
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for (&(i, j), c) in &self.terms {
            if j == k {
                coeffs[i] = c.clone();
            }
        }
        Polynomial::new(coeffs)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Dense table `rows[i][j]` = coefficient of `x^i y^j` as decimal strings.
    pub fn to_decimal_table(&self) -> Vec<Vec<String>> {
        let (Some(dx), Some(dy)) = (self.x_degree(), self.y_degree()) else {
            return Vec::new();
        };
        (0..=dx).map(|i| (0..=dy).map(|j| self.coefficient(i, j).to_string()).collect()).collect()
    }

    pub fn to_latex(&self) -> String {
        render_terms(self.terms.iter().map(|(&(i, j), c)| (c, monomial_text(i, j, true))))
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render_terms(self.terms.iter().map(|(&(i, j), c)| (c, monomial_text(i, j, false))));
        f.write_str(&text)
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn arithmetic_examples() {
        assert!((p(&[1, 3, 1]) - p(&[1, 3, 1])).is_zero());
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2]) * Polynomial::x(), p(&[0, 1, 2]));
        assert_eq!(p(&[1, 2]) + p(&[0, 0, 3]), p(&[1, 2, 3]));
        assert_eq!(-p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn normalization() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert_eq!(p(&[0, 0]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!((p(&[1, 1, 1]) - p(&[0, 0, 1])).degree(), Some(1));
    }

    #[test]
    fn composition_examples() {
        let inner = p(&[0, 2, 1]);
        assert_eq!(p(&[1, 2]).compose(&inner), p(&[1, 4, 2]));
        assert_eq!(p(&[1, 3, 1]).compose(&inner), p(&[1, 6, 7, 4, 1]));
        let q = p(&[4, 0, -3, 7]);
        assert_eq!(q.compose(&Polynomial::x()), q);
        assert_eq!(Polynomial::zero().compose(&q), Polynomial::zero());
    }

    #[test]
    fn binomial_rows() {
        assert_eq!(Polynomial::binomial_power(0), p(&[1]));
        assert_eq!(Polynomial::binomial_power(2), p(&[1, 2, 1]));
        assert_eq!(Polynomial::binomial_power(4), p(&[1, 4, 6, 4, 1]));
        let big = Polynomial::binomial_power(64);
        assert_eq!(big.coefficient(32).to_string(), "1832624140942590534");
        assert_eq!(big.coefficient_sum(), BigInt::one() << 64);
    }

    #[test]
    fn coefficients_and_evaluation() {
        let q = p(&[1, 3, 1]);
        assert_eq!(q.coefficient(1), BigInt::from(3));
        assert_eq!(q.coefficient(7), BigInt::zero());
        assert_eq!(q.evaluate(&BigRational::one()), BigRational::from_integer(5.into()));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(q.evaluate(&half), BigRational::new(11.into(), 4.into()));
        assert_eq!(q.evaluate_int(&BigInt::from(-1)), BigInt::from(-1));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[1, 3, 1]).to_string(), "1 + 3x + x^2");
        assert_eq!(p(&[1, 4, 0, 4]).to_string(), "1 + 4x + 4x^3");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1, -1, 2]).to_string(), "-1 - x + 2x^2");
        assert_eq!(p(&[0, 0, -3]).to_string(), "-3x^2");
        assert_eq!(p(&[1, 4, 6, 4]).to_latex(), "1 + 4x + 6x^{2} + 4x^{3}");
        assert_eq!(p(&[1, 4, 6]).to_decimal_strings(), vec!["1", "4", "6"]);
        assert_eq!(Polynomial::from_decimal_strings(&["1", "4", "6", "0"]).unwrap(), p(&[1, 4, 6]));
        assert!(Polynomial::from_decimal_strings(&["x"]).is_err());
    }

    fn q_p3() -> BivariatePolynomial {
        let mut q = BivariatePolynomial::zero();
        q.add_term(0, 0, 1);
        q.add_term(1, 1, 3);
        q.add_term(2, 1, 2);
        q.add_term(3, 1, 1);
        q.add_term(2, 2, 1);
        q
    }

    #[test]
    fn bivariate_slices() {
        let q = q_p3();
        assert_eq!(q.to_string(), "1 + 3xy + 2x^2y + x^2y^2 + x^3y");
        assert_eq!(q.coefficient_of_y(1), p(&[0, 3, 2, 1]));
        assert_eq!(q.coefficient_of_y(0), p(&[1]));
        assert_eq!(q.coefficient_of_y(2), p(&[0, 0, 1]));
        assert_eq!(q.coefficient_of_y(5), Polynomial::zero());
        assert_eq!(q.coefficient_sum(), BigInt::from(8));
        assert_eq!(q.to_decimal_table()[2], vec!["0", "2", "1"]);
        assert_eq!(q.to_latex(), "1 + 3xy + 2x^{2}y + x^{2}y^{2} + x^{3}y");
    }

    #[test]
    fn bivariate_drops_cancelled_terms() {
        let mut q = q_p3();
        q.add_term(2, 2, -1);
        assert_eq!(q.coefficient(2, 2), BigInt::zero());
        assert_eq!(q.terms().count(), 4);
        q.add_term(9, 9, 0);
        assert_eq!(q.terms().count(), 4);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(Polynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn product_degree(a in small_poly(), b in small_poly()) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }

        #[test]
        fn composition_commutes_with_evaluation(a in small_poly(), b in small_poly(), t in -5i64..5) {
            let t = BigInt::from(t);
            prop_assert_eq!(a.compose(&b).evaluate_int(&t), a.evaluate_int(&b.evaluate_int(&t)));
        }

        #[test]
        fn binomial_power_is_repeated_product(n in 0usize..30) {
            let base = Polynomial::from_coeffs([1, 1]);
            let repeated = (0..n).fold(Polynomial::one(), |acc, _| &acc * &base);
            prop_assert_eq!(Polynomial::binomial_power(n), repeated.clone());
            prop_assert_eq!(base.pow(n as u32), repeated);
            prop_assert_eq!(Polynomial::binomial_power(n).coefficient_sum(), BigInt::one() << n);
        }
    }
}
