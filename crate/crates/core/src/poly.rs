//! Sparse multivariate polynomials with exact formal differentiation.
//!
//! Terms live in a `BTreeMap` keyed by the exponent vector, so iteration
//! order (and every serialized form) is deterministic. No zero coefficient
//! is ever stored.

use std::collections::BTreeMap;


use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The coordinate function `x^var`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        assert!(var < nvars);
        let mut exp = vec![0; nvars];
        exp[var] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exp, T::one());
        p
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, coeff: T) -> Result<Self> {
        if exponents.len() != nvars {
            return Err(Error::DimensionMismatch(format!(
                "exponent vector has length {}, expected {nvars}",
                exponents.len()
            )));
        }
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        Ok(p)
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, T)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::DimensionMismatch(
                    "exponent vector length mismatch".into(),
                ));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (exp, c) in &other.terms {
            p.add_term(exp.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (exp, c) in &other.terms {
            p.add_term(exp.clone(), -c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(exp, ca.clone() * cb.clone());
            }
        }
        p
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c.clone() * k.clone());
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, T::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let mut p = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let e = exp[var];
            if e == 0 {
                continue;
            }
            let mut d = exp.clone();
            d[var] = e - 1;
            let mut factor = T::zero();
            for _ in 0..e {
                factor = factor + T::one();
            }
            p.add_term(d, c.clone() * factor);
        }
        p
    }

    pub fn eval(&self, x: &[T]) -> Result<T> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, polynomial expects {}",
                x.len(),
                self.nvars
            )));
        }
        let mut acc = T::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (xi, &e) in x.iter().zip(exp) {
                for _ in 0..e {
                    term = term * xi.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Value and exact gradient at a point.
    pub fn eval_with_grad(&self, x: &[T]) -> Result<(T, Vec<T>)> {
        let value = self.eval(x)?;
        let grad = (0..self.nvars)
            .map(|v| self.partial(v).eval(x))
            .collect::<Result<Vec<T>>>()?;
        Ok((value, grad))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }
}

impl<T: Scalar> std::fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| {
                        if p == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{p}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}·{}", vars.join("·"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
