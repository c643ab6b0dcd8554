//! Schur polynomials as chains of strips, and coefficient-wise checks of
//! the Cauchy, Littlewood and Pieri identities under a degree cap.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::thread;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, validation, Error, Result};
use crate::partition::{enumerate_partitions, is_strip, member, strips_added, strips_removed, Family, Partition};
use crate::poly::{Exponents, TruncatedPolynomial};

/// How a Schur polynomial is read off Young's lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMode {
    /// Add horizontal strips from the inner shape, `x_1` first.
    Up,
    /// Remove horizontal strips from the outer shape, `x_n` first.
    Down,
    /// Remove vertical strips from the outer shape, giving `s_{λ′/μ′}`.
    DualDown,
}

/// `s_{outer/inner}(x_1, …, x_n)` truncated at total degree `cap`.
pub fn schur(outer: &Partition, inner: &Partition, n: usize, cap: usize, mode: SchurMode) -> Result<TruncatedPolynomial> {
    if !outer.contains(inner) {
        return domain(format!("{inner} is not contained in {outer}"));
    }
    let mut states: BTreeMap<Partition, TruncatedPolynomial> = BTreeMap::new();
    let (start, target) = match mode {
        SchurMode::Up => (inner, outer),
        SchurMode::Down | SchurMode::DualDown => (outer, inner),
    };
    states.insert(start.clone(), TruncatedPolynomial::one(n, cap));
    for step in 0..n {
        let var = if mode == SchurMode::Up { step } else { n - 1 - step };
        let mut next: BTreeMap<Partition, TruncatedPolynomial> = BTreeMap::new();
        for (kappa, poly) in &states {
            let moves = match mode {
                SchurMode::Up => strips_added(kappa, outer.size() - kappa.size(), false, Some(outer)),
                SchurMode::Down => strips_removed(kappa, false, Some(inner)),
                SchurMode::DualDown => strips_removed(kappa, true, Some(inner)),
            };
            for nu in moves {
                let power = nu.size().abs_diff(kappa.size()) as u32;
                let term = poly.shift(var, power);
                if term.is_zero() {
                    continue;
                }
                match next.get_mut(&nu) {
                    Some(acc) => *acc = acc.add(&term),
                    None => {
                        next.insert(nu, term);
                    }
                }
            }
        }
        states = next;
    }
    Ok(states
        .remove(target)
        .unwrap_or_else(|| TruncatedPolynomial::zero(n, cap)))
}

/// Number of standard Young tableaux of shape `lambda`, counted over the
/// chains of single-cell additions from `∅`.
pub fn count_syt(lambda: &Partition) -> BigUint {
    fn go(lambda: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if lambda.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(lambda) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for mu in strips_removed(lambda, false, None) {
            if mu.size() + 1 == lambda.size() {
                total += go(&mu, memo);
            }
        }
        memo.insert(lambda.clone(), total.clone());
        total
    }
    go(lambda, &mut HashMap::new())
}

/// The identities that can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Cauchy,
    DualCauchy,
    SkewCauchy,
    SkewDualCauchy,
    Littlewood(Family),
    SkewLittlewood(Family),
    Pieri,
    DualPieri,
    Squarefree,
}

impl IdentityKind {
    pub fn all() -> Vec<IdentityKind> {
        let mut out = vec![
            IdentityKind::Cauchy,
            IdentityKind::DualCauchy,
            IdentityKind::SkewCauchy,
            IdentityKind::SkewDualCauchy,
        ];
        out.extend(Family::ALL.map(IdentityKind::Littlewood));
        out.extend(Family::ALL.map(IdentityKind::SkewLittlewood));
        out.extend([IdentityKind::Pieri, IdentityKind::DualPieri, IdentityKind::Squarefree]);
        out
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityKind::Cauchy => f.write_str("cauchy"),
            IdentityKind::DualCauchy => f.write_str("dual-cauchy"),
            IdentityKind::SkewCauchy => f.write_str("skew-cauchy"),
            IdentityKind::SkewDualCauchy => f.write_str("skew-dual-cauchy"),
            IdentityKind::Littlewood(x) => write!(f, "littlewood-{x}"),
            IdentityKind::SkewLittlewood(x) => write!(f, "skew-littlewood-{x}"),
            IdentityKind::Pieri => f.write_str("pieri"),
            IdentityKind::DualPieri => f.write_str("dual-pieri"),
            IdentityKind::Squarefree => f.write_str("squarefree"),
        }
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::all()
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Validation(format!("unknown identity `{s}`")))
    }
}

impl Serialize for IdentityKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IdentityKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parameters of an identity check. Which fields matter depends on the
/// identity: `m` only for the Cauchy family, `lambda`/`rho` for the skew
/// and Pieri identities, `k` for Pieri.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityParams {
    pub n: usize,
    pub m: usize,
    pub degree: usize,
    #[serde(default)]
    pub lambda: Partition,
    #[serde(default)]
    pub rho: Partition,
    #[serde(default)]
    pub k: usize,
}

impl IdentityParams {
    pub fn new(n: usize, m: usize, degree: usize) -> Self {
        IdentityParams {
            n,
            m,
            degree,
            lambda: Partition::empty(),
            rho: Partition::empty(),
            k: 0,
        }
    }

    pub fn with_lambda(mut self, lambda: Partition) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_rho(mut self, rho: Partition) -> Self {
        self.rho = rho;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }
}

/// The product factor of an identity, expanded up to total degree `cap`.
/// The `x` variables come first, then the `y` variables. Pieri factors are
/// the generating functions `Σ h_k` and `Σ e_k`; the squarefree identity has
/// the constant `n!`.
pub fn product_side(kind: IdentityKind, n: usize, m: usize, cap: usize) -> TruncatedPolynomial {
    type P = TruncatedPolynomial;
    let pair = |vars: usize, i: usize, j: usize| {
        let mut e = vec![0; vars];
        e[i] += 1;
        e[j] += 1;
        e
    };
    let mut factors = Vec::new();
    let vars = match kind {
        IdentityKind::Cauchy | IdentityKind::SkewCauchy | IdentityKind::DualCauchy | IdentityKind::SkewDualCauchy => {
            let dual = matches!(kind, IdentityKind::DualCauchy | IdentityKind::SkewDualCauchy);
            for i in 0..n {
                for j in 0..m {
                    let e = pair(n + m, i, n + j);
                    factors.push(if dual { P::one_plus(n + m, cap, &e) } else { P::geometric(n + m, cap, &e) });
                }
            }
            n + m
        }
        IdentityKind::Littlewood(family) | IdentityKind::SkewLittlewood(family) => {
            for i in 0..n {
                for j in i + 1..n {
                    let e = pair(n, i, j);
                    factors.push(if family.is_asym() { P::one_plus(n, cap, &e) } else { P::geometric(n, cap, &e) });
                }
                let mut single = vec![0; n];
                match family {
                    Family::EvenColumns | Family::AsymPlus => {}
                    Family::All => {
                        single[i] = 1;
                        factors.push(P::geometric(n, cap, &single));
                    }
                    Family::EvenRows => {
                        single[i] = 2;
                        factors.push(P::geometric(n, cap, &single));
                    }
                    Family::AsymMinus => {
                        single[i] = 2;
                        factors.push(P::one_plus(n, cap, &single));
                    }
                }
            }
            n
        }
        IdentityKind::Pieri | IdentityKind::DualPieri => {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                factors.push(if kind == IdentityKind::Pieri { P::geometric(n, cap, &e) } else { P::one_plus(n, cap, &e) });
            }
            n
        }
        IdentityKind::Squarefree => {
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            return P::monomial(0, cap, vec![], BigInt::from(fact));
        }
    };
    P::product(vars, cap, &factors)
}

/// Sums `f` over `items` on scoped worker threads. The sum is taken in
/// item order, so the result does not depend on scheduling.
fn parallel_sum<T: Sync>(
    items: &[T],
    zero: TruncatedPolynomial,
    f: impl Fn(&T) -> Result<TruncatedPolynomial> + Sync,
) -> Result<TruncatedPolynomial> {
    let workers = thread::available_parallelism().map_or(1, |w| w.get()).min(items.len().max(1));
    let chunk = items.len().div_ceil(workers).max(1);
    let partials: Vec<Result<TruncatedPolynomial>> = thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                let zero = zero.clone();
                scope.spawn(move || part.iter().try_fold(zero, |acc, t| Ok(acc.add(&f(t)?))))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("summand worker panicked")).collect()
    });
    partials.into_iter().try_fold(zero, |acc, p| Ok(acc.add(&p?)))
}

/// Partitions of size at most `max_size` containing `inner`.
fn partitions_containing(inner: &Partition, max_size: usize) -> Vec<Partition> {
    enumerate_partitions(max_size, None)
        .into_iter()
        .filter(|nu| nu.contains(inner))
        .collect()
}

fn contained_in(outer: &Partition) -> Vec<Partition> {
    enumerate_partitions(outer.size(), None)
        .into_iter()
        .filter(|mu| outer.contains(mu))
        .collect()
}

/// Both sides of the identity: the sum over partitions on the left and the
/// product (times a finite sum for skew identities) on the right.
pub fn identity_sides(kind: IdentityKind, params: &IdentityParams) -> Result<(TruncatedPolynomial, TruncatedPolynomial)> {
    use SchurMode::*;
    type P = TruncatedPolynomial;
    let (n, m, cap) = (params.n, params.m, params.degree);
    let (lambda, rho) = (&params.lambda, &params.rho);
    let empty = Partition::empty();
    match kind {
        IdentityKind::Cauchy | IdentityKind::DualCauchy | IdentityKind::SkewCauchy | IdentityKind::SkewDualCauchy => {
            let dual = matches!(kind, IdentityKind::DualCauchy | IdentityKind::SkewDualCauchy);
            let skew = matches!(kind, IdentityKind::SkewCauchy | IdentityKind::SkewDualCauchy);
            if !skew && !(lambda.is_empty() && rho.is_empty()) {
                return validation(format!("{kind} takes no shapes; use skew-{kind}"));
            }
            let y_mode = if dual { DualDown } else { Down };
            let vars = n + m;
            // pair term s_{a/b}(x) · s_{c/d}(y)
            let pair = |a: &Partition, b: &Partition, c: &Partition, d: &Partition| -> Result<P> {
                let x = schur(a, b, n, cap, Up)?.embed(vars, 0);
                let y = schur(c, d, m, cap, y_mode)?.embed(vars, n);
                Ok(x.mul(&y))
            };
            let max_nu = (cap + lambda.size() + rho.size()) / 2;
            let nus = partitions_containing(&lambda.join(rho), max_nu);
            let lhs = parallel_sum(&nus, P::zero(vars, cap), |nu| pair(nu, rho, nu, lambda))?;
            let mus = contained_in(&lambda.meet(rho));
            let inner = parallel_sum(&mus, P::zero(vars, cap), |mu| pair(lambda, mu, rho, mu))?;
            Ok((lhs, product_side(kind, n, m, cap).mul(&inner)))
        }
        IdentityKind::Littlewood(family) | IdentityKind::SkewLittlewood(family) => {
            let skew = matches!(kind, IdentityKind::SkewLittlewood(_));
            if !skew && !lambda.is_empty() {
                return validation(format!("{kind} takes no shape; use skew-{kind}"));
            }
            let nus: Vec<Partition> = partitions_containing(lambda, lambda.size() + cap)
                .into_iter()
                .filter(|nu| member(nu, family))
                .collect();
            let lhs = parallel_sum(&nus, P::zero(n, cap), |nu| schur(nu, lambda, n, cap, Up))?;
            // the asymmetric families pair with the conjugate shape and the
            // opposite family
            let (outer, partner) = match family {
                Family::AsymPlus => (lambda.conjugate(), Family::AsymMinus),
                Family::AsymMinus => (lambda.conjugate(), Family::AsymPlus),
                other => (lambda.clone(), other),
            };
            let mus: Vec<Partition> = contained_in(&outer).into_iter().filter(|mu| member(mu, partner)).collect();
            let inner = parallel_sum(&mus, P::zero(n, cap), |mu| schur(&outer, mu, n, cap, Up))?;
            Ok((lhs, product_side(kind, n, 0, cap).mul(&inner)))
        }
        IdentityKind::Pieri | IdentityKind::DualPieri => {
            let vertical = kind == IdentityKind::DualPieri;
            let k = params.k;
            let cap = lambda.size() + k;
            let generating = product_side(kind, n, 0, cap).homogeneous_part(k);
            let lhs = generating.mul(&schur(lambda, &empty, n, cap, Up)?);
            let nus: Vec<Partition> = strips_added(lambda, k, vertical, None)
                .into_iter()
                .filter(|nu| nu.size() == cap && is_strip(lambda, nu, vertical))
                .collect();
            let rhs = parallel_sum(&nus, P::zero(n, cap), |nu| schur(nu, &empty, n, cap, Up))?;
            Ok((lhs, rhs))
        }
        IdentityKind::Squarefree => {
            let sum: BigUint = enumerate_partitions(n, None)
                .iter()
                .filter(|l| l.size() == n)
                .map(|l| {
                    let f = count_syt(l);
                    &f * &f
                })
                .sum();
            let lhs = P::monomial(0, cap, vec![], BigInt::from(sum));
            Ok((lhs, product_side(kind, n, 0, cap)))
        }
    }
}

/// A coefficient where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponents: Exponents,
    #[serde(with = "json_int")]
    pub lhs: BigInt,
    #[serde(with = "json_int")]
    pub rhs: BigInt,
}

/// Outcome of comparing both sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub equal: bool,
    pub checked_terms: usize,
    pub mismatches: Vec<Mismatch>,
    #[serde(with = "json_int")]
    pub lhs_sum: BigInt,
    #[serde(with = "json_int")]
    pub rhs_sum: BigInt,
}

/// Compares both sides coefficient by coefficient. Mismatches are listed in
/// exponent order, so the first one is the first differing term.
pub fn compare(kind: IdentityKind, lhs: &TruncatedPolynomial, rhs: &TruncatedPolynomial) -> IdentityReport {
    let support: BTreeSet<&Exponents> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    let mismatches: Vec<Mismatch> = support
        .iter()
        .filter_map(|e| {
            let (a, b) = (lhs.coefficient(e), rhs.coefficient(e));
            (a != b).then(|| Mismatch {
                exponents: (*e).clone(),
                lhs: a,
                rhs: b,
            })
        })
        .collect();
    IdentityReport {
        identity: kind,
        equal: mismatches.is_empty(),
        checked_terms: support.len(),
        mismatches,
        lhs_sum: lhs.coefficient_sum(),
        rhs_sum: rhs.coefficient_sum(),
    }
}

pub fn verify_identity(kind: IdentityKind, params: &IdentityParams) -> Result<IdentityReport> {
    let (lhs, rhs) = identity_sides(kind, params)?;
    Ok(compare(kind, &lhs, &rhs))
}

/// Big integers as JSON numbers when they fit in 64 bits, as decimal
/// strings otherwise.
mod json_int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.collect_str(v),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(x) => Ok(BigInt::from(x)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;
    use itertools::Itertools;
    use proptest::prelude::*;

    type P = TruncatedPolynomial;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Oracle: fill the cells of `outer/inner` with every assignment of
    /// values in `1..=n` and keep the semistandard ones.
    fn brute_schur(outer: &Partition, inner: &Partition, n: usize, cap: usize) -> P {
        let cells = outer.skew_cells(inner);
        let mut out = P::zero(n, cap);
        for values in (0..cells.len()).map(|_| 1..=n).multi_cartesian_product() {
            let at = |col: usize, row: usize| cells.iter().position(|c| c.column == col && c.row == row).map(|i| values[i]);
            let ok = cells.iter().enumerate().all(|(i, c)| {
                at(c.column + 1, c.row).is_none_or(|v| values[i] <= v) && at(c.column, c.row + 1).is_none_or(|v| values[i] < v)
            });
            if ok {
                let mut e = vec![0; n];
                for v in &values {
                    e[v - 1] += 1;
                }
                out.add_term(e, int(1));
            }
        }
        if cells.is_empty() {
            return P::one(n, cap);
        }
        out
    }

    #[test]
    fn small_schur_polynomials() {
        let s1 = schur(&p(&[1]), &Partition::empty(), 2, 5, SchurMode::Up).unwrap();
        assert_eq!(s1.to_string(), "x1 + x2");
        let s21 = schur(&p(&[2, 1]), &Partition::empty(), 2, 5, SchurMode::Up).unwrap();
        assert_eq!(s21.to_string(), "x1^2x2 + x1x2^2");
        assert_eq!(s21, brute_schur(&p(&[2, 1]), &Partition::empty(), 2, 5));
        assert!(schur(&p(&[1]), &p(&[2]), 2, 5, SchurMode::Up).is_err());
    }

    #[test]
    fn displayed_tableau_weight_occurs() {
        let s = schur(&p(&[5, 4, 2, 1]), &Partition::empty(), 5, 12, SchurMode::Up).unwrap();
        assert!(s.coefficient(&[1, 3, 2, 2, 4]) >= int(1));
    }

    #[test]
    fn chains_match_fillings() {
        for outer in enumerate_partitions(5, Some((3, 3))) {
            for inner in contained_in(&outer) {
                for n in 1..=3 {
                    let want = brute_schur(&outer, &inner, n, 9);
                    assert_eq!(schur(&outer, &inner, n, 9, SchurMode::Up).unwrap(), want, "{outer}/{inner} n={n}");
                }
            }
        }
    }

    #[test]
    fn modes_agree_and_are_symmetric() {
        for outer in enumerate_partitions(12, Some((3, 4))) {
            if outer.first() > 4 {
                continue;
            }
            for inner in contained_in(&outer) {
                for n in 1..=3 {
                    let up = schur(&outer, &inner, n, 12, SchurMode::Up).unwrap();
                    assert_eq!(up, schur(&outer, &inner, n, 12, SchurMode::Down).unwrap());
                    assert!(up.is_symmetric(), "{outer}/{inner}");
                    let conj = schur(&outer.conjugate(), &inner.conjugate(), n, 12, SchurMode::Up).unwrap();
                    assert_eq!(schur(&outer, &inner, n, 12, SchurMode::DualDown).unwrap(), conj);
                }
            }
        }
    }

    #[test]
    fn product_side_examples() {
        // the cap bounds the joint degree, so x^3y^3 needs a cap of 6
        let c = product_side(IdentityKind::Cauchy, 1, 1, 3);
        assert_eq!(c.to_string(), "x1x2 + 1");
        let c = product_side(IdentityKind::Cauchy, 1, 1, 6);
        assert_eq!(c.to_string(), "x1^3x2^3 + x1^2x2^2 + x1x2 + 1");
        let l = product_side(IdentityKind::Littlewood(Family::All), 2, 0, 2);
        assert_eq!(l.to_string(), "x1^2 + 2x1x2 + x2^2 + x1 + x2 + 1");
    }

    /// Oracle for the product sides: enumerate exponent tuples of the
    /// factors directly. Each factor is a monomial with a flag saying
    /// whether its exponent may exceed 1.
    fn brute_product(vars: usize, cap: usize, factors: &[(Vec<u32>, bool)]) -> P {
        let mut out = P::zero(vars, cap);
        let ranges = factors.iter().map(|(e, geometric)| {
            let d: usize = e.iter().map(|&x| x as usize).sum();
            0..=if *geometric { cap / d } else { 1.min(cap / d) }
        });
        for powers in ranges.multi_cartesian_product() {
            let mut e = vec![0u32; vars];
            for ((f, _), t) in factors.iter().zip(&powers) {
                for (a, b) in e.iter_mut().zip(f) {
                    *a += b * *t as u32;
                }
            }
            out.add_term(e, int(1));
        }
        if factors.is_empty() {
            return P::one(vars, cap);
        }
        out
    }

    #[test]
    fn products_match_direct_expansion() {
        let unit = |vars: usize, idx: &[usize]| {
            let mut e = vec![0u32; vars];
            for &i in idx {
                e[i] += 1;
            }
            e
        };
        let (n, m, cap) = (2, 2, 5);
        let cauchy: Vec<_> = (0..n).cartesian_product(0..m).map(|(i, j)| (unit(n + m, &[i, n + j]), true)).collect();
        assert_eq!(product_side(IdentityKind::Cauchy, n, m, cap), brute_product(n + m, cap, &cauchy));
        let dual: Vec<_> = cauchy.iter().map(|(e, _)| (e.clone(), false)).collect();
        let dual_product = product_side(IdentityKind::DualCauchy, n, m, 2);
        assert_eq!(dual_product, brute_product(n + m, 2, &dual));
        assert_eq!(dual_product.len(), 1 + 4);

        let n = 3;
        let pairs: Vec<Vec<u32>> = (0..n).tuple_combinations().map(|(i, j)| unit(n, &[i, j])).collect();
        let with = |extra: &[(Vec<u32>, bool)], geometric: bool| {
            let mut fs: Vec<_> = pairs.iter().map(|e| (e.clone(), geometric)).collect();
            fs.extend_from_slice(extra);
            brute_product(n, 6, &fs)
        };
        let singles: Vec<_> = (0..n).map(|i| (unit(n, &[i]), true)).collect();
        let squares: Vec<_> = (0..n).map(|i| (unit(n, &[i, i]), true)).collect();
        let squares_once: Vec<_> = (0..n).map(|i| (unit(n, &[i, i]), false)).collect();
        let lw = |f| product_side(IdentityKind::Littlewood(f), n, 0, 6);
        assert_eq!(lw(Family::EvenColumns), with(&[], true));
        assert_eq!(lw(Family::All), with(&singles, true));
        assert_eq!(lw(Family::EvenRows), with(&squares, true));
        assert_eq!(lw(Family::AsymPlus), with(&[], false));
        assert_eq!(lw(Family::AsymMinus), with(&squares_once, false));
    }

    #[test]
    fn count_syt_examples() {
        assert_eq!(count_syt(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(count_syt(&p(&[5])), BigUint::one());
        assert_eq!(count_syt(&Partition::empty()), BigUint::one());
        let sum: BigUint = partitions_containing(&Partition::empty(), 4)
            .iter()
            .filter(|l| l.size() == 4)
            .map(|l| count_syt(l).pow(2))
            .sum();
        assert_eq!(sum, BigUint::from(24u32));
    }

    #[test]
    fn count_syt_matches_hook_lengths() {
        for lambda in enumerate_partitions(10, None) {
            let conj = lambda.conjugate();
            let hooks: u64 = lambda
                .cells()
                .iter()
                .map(|c| (lambda.part(c.row - 1) - c.column + conj.part(c.column - 1) - c.row + 1) as u64)
                .product();
            let fact: u64 = (1..=lambda.size() as u64).product();
            assert_eq!(count_syt(&lambda), BigUint::from(fact / hooks), "{lambda}");
        }
    }

    #[test]
    fn spec_identity_examples() {
        let r = verify_identity(IdentityKind::Cauchy, &IdentityParams::new(2, 2, 6)).unwrap();
        assert!(r.equal && r.checked_terms > 0);
        let skew = IdentityParams::new(2, 2, 6).with_lambda(p(&[2, 1])).with_rho(p(&[1, 1]));
        assert!(verify_identity(IdentityKind::SkewCauchy, &skew).unwrap().equal);
        let sq = verify_identity(IdentityKind::Squarefree, &IdentityParams::new(5, 0, 0)).unwrap();
        assert!(sq.equal);
        assert_eq!(sq.lhs_sum, int(120));
        assert_eq!(sq.rhs_sum, int(120));
    }

    #[test]
    fn every_identity_holds_at_small_caps() {
        for kind in IdentityKind::all() {
            let base = IdentityParams::new(2, 2, 5);
            let params = match kind {
                IdentityKind::SkewCauchy | IdentityKind::SkewDualCauchy => base.with_lambda(p(&[2])).with_rho(p(&[1, 1])),
                IdentityKind::SkewLittlewood(_) => base.with_lambda(p(&[2, 1])),
                IdentityKind::Pieri | IdentityKind::DualPieri => base.with_lambda(p(&[2, 1])).with_k(2),
                IdentityKind::Squarefree => IdentityParams::new(4, 0, 0),
                _ => base,
            };
            let report = verify_identity(kind, &params).unwrap();
            assert!(report.equal, "{kind}: {:?}", report.mismatches.first());
        }
    }

    #[test]
    fn wrong_sides_are_reported() {
        let lhs = product_side(IdentityKind::Cauchy, 1, 1, 4);
        let rhs = product_side(IdentityKind::DualCauchy, 1, 1, 4);
        let r = compare(IdentityKind::Cauchy, &lhs, &rhs);
        assert!(!r.equal);
        assert_eq!(r.checked_terms, 3);
        assert_eq!(r.mismatches[0].exponents, vec![2, 2]);
        assert_eq!((r.mismatches[0].lhs.clone(), r.mismatches[0].rhs.clone()), (int(1), int(0)));
    }

    #[test]
    fn report_json_roundtrip() {
        let r = verify_identity(IdentityKind::Littlewood(Family::EvenRows), &IdentityParams::new(2, 0, 4)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"identity":"littlewood-even-rows","equal":true,"checked_terms":"#));
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let big = Mismatch {
            exponents: vec![1],
            lhs: BigInt::from(u64::MAX) * 3,
            rhs: int(-2),
        };
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<Mismatch>(&json).unwrap(), big);
    }

    #[test]
    fn identity_names_roundtrip() {
        for kind in IdentityKind::all() {
            assert_eq!(kind.to_string().parse::<IdentityKind>().unwrap(), kind);
        }
        assert!("littlewood-odd".parse::<IdentityKind>().is_err());
    }

    proptest! {
        #[test]
        fn permuting_variables_fixes_schur(parts in prop::collection::vec(0usize..4, 0..4), perm_seed in 0usize..6) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(parts).unwrap();
            let s = schur(&lambda, &Partition::empty(), 3, 12, SchurMode::Up).unwrap();
            let perm = (0..3).permutations(3).nth(perm_seed).unwrap();
            prop_assert_eq!(s.permute(&perm), s);
        }
    }
}
