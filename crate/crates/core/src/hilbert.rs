//! Hilbert series and Hilbert functions of `S/I`, and Macaulay's growth bound.
//!
//! The Hilbert series of `S/I` is kept as an exact integer numerator `N(t)`
//! with `HS(t) = N(t) / (1 - t)^n`. The numerator is computed by splitting on
//! a variable:
//!
//! ```text
//! N(I) = N(I + (x_j)) + t * N(I : x_j)
//! ```
//!
//! until only pure powers remain, where `N = prod (1 - t^deg)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal};

/// `C(n, k)` exactly, or `None` on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `dim_K S_d = C(n - 1 + d, d)`.
pub fn dim_degree(n: usize, d: u32) -> Result<u64> {
    if n == 0 {
        return Ok(u64::from(d == 0));
    }
    binomial(n as u64 - 1 + d as u64, d as u64)
        .and_then(|c| u64::try_from(c).ok())
        .ok_or(Error::Overflow("dim S_d"))
}

/// Integer polynomial in `t`, lowest coefficient first, no trailing zeros.
pub type Numerator = Vec<i64>;

fn trim(mut p: Numerator) -> Numerator {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut Numerator, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Multiplies by `(1 - t^k)`.
fn mul_one_minus(p: &[i64], k: usize) -> Numerator {
    let mut out = vec![0; p.len() + k];
    for (i, &c) in p.iter().enumerate() {
        out[i] += c;
        out[i + k] -= c;
    }
    trim(out)
}

/// Rule for choosing the splitting variable in the numerator recursion.
/// Every rule yields the same numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// The variable occurring in the most mixed generators.
    #[default]
    MostFrequent,
    /// The smallest-index variable of some mixed generator.
    First,
    /// The largest-index variable of some mixed generator.
    Last,
}

fn is_pure_power(g: &Monomial) -> bool {
    g.exponents().iter().filter(|&&e| e > 0).count() <= 1
}

fn choose_pivot(gens: &[Monomial], rule: PivotRule) -> Option<usize> {
    let n = gens.first()?.n();
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| !is_pure_power(g)) {
        for j in g.support() {
            counts[j] += 1;
        }
    }
    let candidates = (0..n).filter(|&j| counts[j] > 0);
    match rule {
        PivotRule::MostFrequent => candidates.max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a))),
        PivotRule::First => candidates.min(),
        PivotRule::Last => candidates.max(),
    }
}

/// Numerator for the ideal generated by the (minimal) list `gens`, which may
/// be the unit ideal.
fn numerator_rec(gens: Vec<Monomial>, rule: PivotRule) -> Numerator {
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let Some(j) = choose_pivot(&gens, rule) else {
        return gens
            .iter()
            .fold(vec![1], |acc, g| mul_one_minus(&acc, g.degree() as usize));
    };
    let n = gens[0].n();
    let mut plus = gens.clone();
    plus.push(Monomial::var(n, j));
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e[j] = e[j].saturating_sub(1);
            Monomial::new(e)
        })
        .collect();
    let mut out = numerator_rec(minimalize(plus), rule);
    let tail = numerator_rec(minimalize(colon), rule);
    add_shifted(&mut out, &tail, 1);
    trim(out)
}

/// Exact Hilbert data of `S/I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub n: usize,
    /// Coefficients of `N(t)`, constant term first.
    pub numerator: Numerator,
}

impl HilbertData {
    /// `H(d)`: coefficient of `t^d` in `N(t) / (1 - t)^n`.
    pub fn value(&self, d: u32) -> Result<u64> {
        let mut total: i128 = 0;
        for (k, &c) in self.numerator.iter().enumerate() {
            if k as u32 > d {
                break;
            }
            let dim = dim_degree(self.n, d - k as u32)? as i128;
            total = (c as i128)
                .checked_mul(dim)
                .and_then(|x| total.checked_add(x))
                .ok_or(Error::Overflow("Hilbert function value"))?;
        }
        u64::try_from(total).map_err(|_| {
            Error::internal(format!("Hilbert series gives negative value {total} in degree {d}"))
        })
    }

    /// `H(0), ..., H(max_degree)`.
    pub fn values(&self, max_degree: u32) -> Result<Vec<u64>> {
        (0..=max_degree).map(|d| self.value(d)).collect()
    }
}

pub fn hilbert_series_numerator(ideal: &MonomialIdeal) -> HilbertData {
    hilbert_series_numerator_with(ideal, PivotRule::default())
}

pub fn hilbert_series_numerator_with(ideal: &MonomialIdeal, rule: PivotRule) -> HilbertData {
    HilbertData {
        n: ideal.n(),
        numerator: numerator_rec(ideal.generators().to_vec(), rule),
    }
}

/// Numerator by inclusion–exclusion over subsets of `G(I)`; only for
/// cross-checking, and only for at most 12 generators.
pub fn numerator_inclusion_exclusion(ideal: &MonomialIdeal) -> Result<Numerator> {
    let gens = ideal.generators();
    if gens.len() > 12 {
        return Err(Error::InvalidArgument(
            "inclusion-exclusion limited to 12 generators".into(),
        ));
    }
    let mut out: Numerator = Vec::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut l = Monomial::one(ideal.n());
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l = l.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        add_shifted(&mut out, &[sign], l.degree() as usize);
    }
    Ok(trim(out))
}

pub fn hilbert_values(ideal: &MonomialIdeal, max_degree: u32) -> Result<Vec<u64>> {
    hilbert_series_numerator(ideal).values(max_degree)
}

/// Greedy `d`-th Macaulay representation `a = sum C(a_j, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub a: u64,
    pub d: u32,
    /// Pairs `(a_j, j)` for `j = d` down to some `j0 >= 1`.
    pub terms: Vec<(u64, u32)>,
}

pub fn macaulay_rep(a: u64, d: u32) -> Result<MacaulayRep> {
    if d < 1 {
        return Err(Error::InvalidArgument("Macaulay representation needs d >= 1".into()));
    }
    let mut rest = a as u128;
    let mut terms = Vec::new();
    let mut j = d as u64;
    while rest > 0 && j >= 1 {
        let top = if j == 1 {
            rest as u64
        } else {
            // largest k with C(k, j) <= rest; C(j, j) = 1 <= rest
            let mut k = j;
            while binomial(k + 1, j).is_some_and(|c| c <= rest) {
                k += 1;
            }
            k
        };
        rest -= binomial(top, j).ok_or(Error::Overflow("Macaulay representation"))?;
        terms.push((top, j as u32));
        j -= 1;
    }
    Ok(MacaulayRep { a, d, terms })
}

/// `a^{<d>} = sum C(a_j + 1, j + 1)`.
pub fn macaulay_growth(a: u64, d: u32) -> Result<u64> {
    let rep = macaulay_rep(a, d)?;
    let mut total: u128 = 0;
    for &(aj, j) in &rep.terms {
        let c = binomial(aj + 1, j as u64 + 1).ok_or(Error::Overflow("Macaulay growth"))?;
        total = total.checked_add(c).ok_or(Error::Overflow("Macaulay growth"))?;
    }
    u64::try_from(total).map_err(|_| Error::Overflow("Macaulay growth"))
}

/// Outcome of checking Macaulay's conditions on a Hilbert function prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OSequenceCheck {
    pub ok: bool,
    /// Index of the first entry violating a condition.
    pub first_violation: Option<usize>,
}

/// Checks `H(0) = 1`, `H(1) <= n` and `H(d+1) <= H(d)^{<d>}` on a prefix.
pub fn is_o_sequence(h: &[u64], n: usize) -> Result<OSequenceCheck> {
    let fail = |i| {
        Ok(OSequenceCheck {
            ok: false,
            first_violation: Some(i),
        })
    };
    if h.is_empty() {
        return Err(Error::InvalidArgument("empty Hilbert function prefix".into()));
    }
    if h[0] != 1 {
        return fail(0);
    }
    if h.len() > 1 && h[1] > n as u64 {
        return fail(1);
    }
    for d in 1..h.len().saturating_sub(1) {
        if h[d + 1] > macaulay_growth(h[d], d as u32)? {
            return fail(d + 1);
        }
    }
    Ok(OSequenceCheck {
        ok: true,
        first_violation: None,
    })
}
