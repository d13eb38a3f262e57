//! Integer partitions and symmetric functions in the power-sum basis.
//!
//! A [`PSymFunc`] is a finite integer combination of products
//! `p_λ = p_{λ1} p_{λ2} ⋯`, where `p_k = x_1^k + x_2^k + ⋯`. Monomial
//! expansions only exist at a finite number of variables ([`MonomialMap`]);
//! they back the brute-force checks.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{invalid, Result};
use crate::poly::IntPolynomial;

/// A weakly decreasing sequence of positive integers.
///
/// Ordered by size, then reverse-lexicographically, so that `(3) < (2,1) <
/// (1,1,1) < (4) < (3,1)`; this is the canonical output order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_sorted_sizes(sizes: &[usize]) -> Self {
        debug_assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
        Partition(sizes.iter().map(|&s| s as u32).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `n` where `λ ⊢ n`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Sorted concatenation, i.e. the index of `p_λ p_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = [self.0.as_slice(), other.0.as_slice()].concat();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A symmetric function as an integer combination of power sums `p_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PSymFunc {
    // Never holds a zero coefficient.
    terms: BTreeMap<Partition, BigInt>,
}

impl PSymFunc {
    pub fn zero() -> Self {
        PSymFunc::default()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · p_λ` in place.
    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &PSymFunc) -> PSymFunc {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> PSymFunc {
        if k.is_zero() {
            return PSymFunc::zero();
        }
        PSymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    // Only used to assemble p_λ from single power sums.
    pub(crate) fn mul(&self, other: &PSymFunc) -> PSymFunc {
        let mut out = PSymFunc::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// The common size of every supported partition, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// Collects signed counts keyed by partition.
    pub(crate) fn from_counts(counts: impl IntoIterator<Item = (Partition, i64)>) -> PSymFunc {
        let mut out = PSymFunc::zero();
        for (l, c) in counts {
            out.add_term(l, BigInt::from(c));
        }
        out
    }
}

impl fmt::Display for PSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            match (i, c.sign()) {
                (0, Sign::Minus) => f.write_str("-")?,
                (0, _) => {}
                (_, Sign::Minus) => f.write_str(" - ")?,
                _ => f.write_str(" + ")?,
            }
            write!(f, "{}*p{l}", c.magnitude())?;
        }
        Ok(())
    }
}

/// The basis element `p_λ`.
pub fn p_term(lambda: &Partition) -> PSymFunc {
    lambda
        .parts()
        .iter()
        .map(|&k| {
            let mut single = PSymFunc::zero();
            single.add_term(Partition(vec![k]), BigInt::one());
            single
        })
        .fold(
            {
                let mut unit = PSymFunc::zero();
                unit.add_term(Partition::empty(), BigInt::one());
                unit
            },
            |acc, pk| acc.mul(&pk),
        )
}

/// `ω(p_λ) = (-1)^{n-ℓ} p_λ`, extended linearly.
pub fn omega(f: &PSymFunc) -> PSymFunc {
    PSymFunc {
        terms: f
            .terms
            .iter()
            .map(|(l, c)| {
                let odd = (l.size() as usize - l.length()) % 2 == 1;
                (l.clone(), if odd { -c } else { c.clone() })
            })
            .collect(),
    }
}

/// Sets `x_1 = ⋯ = x_t = 1` and every other variable to 0, so that each
/// `p_k` becomes `t` and `p_λ` becomes `t^{ℓ(λ)}`.
pub fn specialize(f: &PSymFunc) -> IntPolynomial {
    let top = f.terms.keys().map(Partition::length).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (l, c) in &f.terms {
        coeffs[l.length()] += c;
    }
    IntPolynomial::new(coeffs)
}

/// A polynomial in the variables `x_1..x_μ`, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialMap {
    pub fn new(vars: usize) -> Self {
        MonomialMap {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Invariance under every adjacent transposition of variables, which
    /// generate the whole symmetric group.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (1..self.vars).all(|i| {
                let mut swapped = e.clone();
                swapped.swap(i - 1, i);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Total degrees of the supported monomials, deduplicated.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{k}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Substitutes `p_k = x_1^k + ⋯ + x_μ^k` and expands.
pub fn expand_monomials(f: &PSymFunc, mu: usize, budget: &Budget) -> Result<MonomialMap> {
    if mu < 1 {
        return Err(invalid("need at least one variable"));
    }
    let mut out = MonomialMap::new(mu);
    for (l, c) in &f.terms {
        budget.check_colorings("monomial expansion", mu as u64, l.length())?;
        // One variable choice per part.
        let parts = l.parts();
        let mut choice = vec![0usize; parts.len()];
        loop {
            let mut e = vec![0u32; mu];
            for (p, &v) in parts.iter().zip(&choice) {
                e[v] += p;
            }
            out.add_term(e, c.clone());
            let Some(i) = choice.iter().rposition(|&v| v + 1 < mu) else {
                break;
            };
            choice[i] += 1;
            choice[i + 1..].fill(0);
        }
    }
    Ok(out)
}
