//! Exact multivariate polynomials truncated at a total degree.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

/// A polynomial in `num_vars` variables keeping only the terms of total
/// degree at most `degree_cap`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    num_vars: usize,
    degree_cap: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl TruncatedPolynomial {
    pub fn zero(num_vars: usize, degree_cap: usize) -> Self {
        TruncatedPolynomial {
            num_vars,
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, degree_cap: usize) -> Self {
        Self::monomial(num_vars, degree_cap, vec![0; num_vars], BigInt::one())
    }

    /// `coeff · x^exps`, or zero if the degree exceeds the cap.
    pub fn monomial(num_vars: usize, degree_cap: usize, exps: Exponents, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector length");
        let mut p = Self::zero(num_vars, degree_cap);
        p.add_term(exps, coeff);
        p
    }

    /// The single variable `x_i` (0-based).
    pub fn variable(num_vars: usize, degree_cap: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, degree_cap, e, BigInt::one())
    }

    /// `1 / (1 − x^exps)` expanded as a geometric series.
    pub fn geometric(num_vars: usize, degree_cap: usize, exps: &[u32]) -> Self {
        let d = degree(exps);
        assert!(d > 0, "geometric series of a constant");
        let mut p = Self::zero(num_vars, degree_cap);
        for t in 0..=degree_cap / d {
            p.add_term(exps.iter().map(|&x| x * t as u32).collect(), BigInt::one());
        }
        p
    }

    /// `1 + x^exps`.
    pub fn one_plus(num_vars: usize, degree_cap: usize, exps: &[u32]) -> Self {
        let mut p = Self::one(num_vars, degree_cap);
        p.add_term(exps.to_vec(), BigInt::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, …, 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        assert_eq!(exps.len(), self.num_vars, "exponent vector length");
        if coeff.is_zero() || degree(&exps) > self.degree_cap {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "variable counts differ");
        assert_eq!(self.degree_cap, other.degree_cap, "degree caps differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = Self::zero(self.num_vars, self.degree_cap);
        for (e1, c1) in &self.terms {
            let d1 = degree(e1);
            for (e2, c2) in &other.terms {
                if d1 + degree(e2) > self.degree_cap {
                    continue;
                }
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `x_var^power`.
    pub fn shift(&self, var: usize, power: u32) -> Self {
        let mut out = Self::zero(self.num_vars, self.degree_cap);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[var] += power;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Places the variables at `offset..offset+num_vars` of a polynomial in
    /// `total_vars` variables.
    pub fn embed(&self, total_vars: usize, offset: usize) -> Self {
        assert!(offset + self.num_vars <= total_vars, "embedding out of range");
        let mut out = Self::zero(total_vars, self.degree_cap);
        for (e, c) in &self.terms {
            let mut big = vec![0; total_vars];
            big[offset..offset + self.num_vars].copy_from_slice(e);
            out.add_term(big, c.clone());
        }
        out
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_vars, "permutation length");
        let mut out = Self::zero(self.num_vars, self.degree_cap);
        for (e, c) in &self.terms {
            let mut p = vec![0; self.num_vars];
            for (i, &x) in e.iter().enumerate() {
                p[perm[i]] = x;
            }
            out.add_term(p, c.clone());
        }
        out
    }

    /// True iff every exponent vector in an orbit of the symmetric group
    /// carries the same coefficient.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.coefficient(&sorted) == *c
        })
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        let mut out = Self::zero(self.num_vars, self.degree_cap);
        for (e, c) in &self.terms {
            if degree(e) == d {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn product<'a>(num_vars: usize, degree_cap: usize, factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(num_vars, degree_cap), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest degree first, then lexicographically descending
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| degree(b).cmp(&degree(a)).then(b.cmp(a)));
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let negative = c < &BigInt::zero();
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let abs = if negative { -c } else { c.clone() };
            let constant = degree(e) == 0;
            if !abs.is_one() || constant {
                write!(f, "{abs}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = TruncatedPolynomial;

    #[test]
    fn geometric_series_in_one_variable() {
        // 1/(1 − xy) with x, y the two variables
        let g = P::geometric(2, 3, &[1, 1]);
        assert_eq!(g.len(), 2);
        assert_eq!(g.to_string(), "x1x2 + 1");
        let g = P::geometric(2, 6, &[1, 1]);
        assert_eq!(g.coefficient(&[3, 3]), BigInt::one());
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn truncation_drops_high_degrees() {
        let x = P::variable(1, 2, 0);
        let x2 = x.mul(&x);
        assert_eq!(x2.coefficient(&[2]), BigInt::one());
        assert!(x2.mul(&x).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = P::variable(2, 3, 1);
        p.add_term(vec![0, 1], BigInt::from(-1));
        assert!(p.is_zero());
    }

    #[test]
    fn display_and_sum() {
        let x = P::one_plus(2, 4, &[1, 0]);
        let y = P::one_plus(2, 4, &[0, 1]);
        let p = x.mul(&y).mul(&x);
        assert_eq!(p.to_string(), "x1^2x2 + x1^2 + 2x1x2 + 2x1 + x2 + 1");
        assert_eq!(p.coefficient_sum(), BigInt::from(8));
        assert!(!p.is_symmetric());
        assert!(x.mul(&y).is_symmetric());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -3i64..4), 0..6).prop_map(|ts| {
            let mut p = P::zero(3, 5);
            for (e, c) in ts {
                p.add_term(e, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&P::one(3, 5)), a.clone());
            prop_assert!(a.terms().values().all(|c| !c.is_zero()));
            prop_assert!(a.mul(&b).terms().keys().all(|e| degree(e) <= 5));
        }

        #[test]
        fn permutation_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
            let perm = [2, 0, 1];
            prop_assert_eq!(a.mul(&b).permute(&perm), a.permute(&perm).mul(&b.permute(&perm)));
        }
    }
}
