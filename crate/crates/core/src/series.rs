//! Power series in a central variable `t` with coefficients in `H`,
//! truncated after `t^order`.

use std::fmt;

use num_traits::One;

use crate::poly::{Coeff, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    /// The constant series `p`.
    pub fn constant(p: Poly, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = p;
        s
    }

    /// Builds a series from its first coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Poly>, order: usize) -> TruncatedSeries {
        coeffs.resize(order + 1, Poly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> &Poly {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add_to_coeff(&mut self, degree: usize, p: &Poly) {
        if degree <= self.order() {
            self.coeffs[degree] += p;
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, s: &Coeff) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// Applies a `t`-linear map of `t`-degree zero coefficientwise.
    pub fn map<F: FnMut(&Poly) -> Poly>(&self, f: F) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Concatenation product, truncated.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
        let n = self.order();
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn tau(&self) -> TruncatedSeries {
        self.map(Poly::tau)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "t^{k} ({c})")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
