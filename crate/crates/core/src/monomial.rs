//! Monomials of `K[x_1, ..., x_n]` as exponent vectors, and monomial ideals
//! given by their minimal generators.
//!
//! Everything here is combinatorial: the coefficient field never appears.
//! Orderings are pure exponent-lex with `x_1 > x_2 > ... > x_n`, and every
//! listing produced by this module is in descending lex order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent vector.
///
/// The derived `Ord` is exponent-lex: `a > b` iff at the first index where
/// they differ `a` has the larger exponent. Comparing monomials of different
/// ambient sizes through `Ord` is meaningless; use [`lex_compare`] for a
/// checked comparison.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_{j+1}` in `n` variables (`j` is zero-based).
    pub fn var(n: usize, j: usize) -> Self {
        let mut exps = vec![0; n];
        exps[j] = 1;
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Zero-based indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
            .collect()
    }

    /// Smallest zero-based index `k` with `x_{k+1} | self`.
    pub fn first_variable(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n(), "lcm of monomials in different rings");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n(), "product of monomials in different rings");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// Multiplies by `x_{j+1}`.
    pub fn mul_var(&self, j: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[j] += 1;
        Monomial { exps }
    }

    /// The same monomial read in `n + extra` variables.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(self.n() + extra, 0);
        Monomial { exps }
    }

    /// Relabels variables: `x_{j+1}` becomes `x_{perm[j]+1}`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.n()];
        for (j, &e) in self.exps.iter().enumerate() {
            exps[perm[j]] = e;
        }
        Monomial { exps }
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_ambient(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// Checked exponent-lex comparison.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_ambient(a, b)?;
    Ok(a.cmp(b))
}

/// `b / a`, provided `a | b`.
pub fn quotient(b: &Monomial, a: &Monomial) -> Result<Monomial> {
    check_ambient(a, b)?;
    if !a.divides(b) {
        return Err(Error::NotDivisible {
            divisor: a.to_string(),
            dividend: b.to_string(),
        });
    }
    Ok(Monomial {
        exps: b.exps.iter().zip(&a.exps).map(|(x, y)| x - y).collect(),
    })
}

/// All monomials of degree `d` in `n` variables, lex-descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; n];
    fill_degree(&mut exps, 0, d, &mut out);
    out
}

fn fill_degree(exps: &mut [u32], j: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if j + 1 == exps.len() {
        exps[j] = remaining;
        out.push(Monomial::new(exps.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[j] = e;
        fill_degree(exps, j + 1, remaining - e, out);
    }
    exps[j] = 0;
}

/// Keeps the divisibility-minimal elements of `gens`, deduplicated and sorted
/// lex-descending.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Sorting by degree first means a divisor is always seen before its multiples.
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// A proper, nonzero monomial ideal, stored as its minimal generating set
/// `G(I)` in lex-descending order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRecord", into = "IdealRecord")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Structured form of an ideal: `{"variables": n, "generators": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealRecord {
    pub variables: usize,
    pub generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealRecord> for MonomialIdeal {
    type Error = Error;

    fn try_from(rec: IdealRecord) -> Result<Self> {
        let mut raw = Vec::with_capacity(rec.generators.len());
        for g in rec.generators {
            if g.len() != rec.variables {
                return Err(Error::AmbientMismatch {
                    left: rec.variables,
                    right: g.len(),
                });
            }
            raw.push(Monomial::new(g));
        }
        minimal_generators(rec.variables, raw)
    }
}

impl From<MonomialIdeal> for IdealRecord {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealRecord {
            variables: ideal.n,
            generators: ideal.gens.into_iter().map(|g| g.exps).collect(),
        }
    }
}

/// Reduces `raw` to its minimal generators.
pub fn minimal_generators(n: usize, raw: Vec<Monomial>) -> Result<MonomialIdeal> {
    if raw.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    for m in &raw {
        if m.n() != n {
            return Err(Error::AmbientMismatch {
                left: n,
                right: m.n(),
            });
        }
        if m.is_one() {
            return Err(Error::UnitIdeal);
        }
    }
    Ok(MonomialIdeal {
        n,
        gens: minimalize(raw),
    })
}

impl MonomialIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `G(I)`, lex-descending.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.n(), self.n, "membership test across rings");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Degree-`d` monomials outside the ideal, lex-descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// lcm of all minimal generators.
    pub fn lcm_all(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    /// The extension of this ideal to `n + extra` variables.
    pub fn extend(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n + extra,
            gens: self.gens.iter().map(|g| g.extend(extra)).collect(),
        }
    }

    /// Relabels variables by `perm`, a permutation of `0..n`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        check_permutation(perm, self.n)?;
        minimal_generators(self.n, self.gens.iter().map(|g| g.permute(perm)).collect())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        seen[p] = true;
    }
    Ok(())
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&m(&[1, 1, 0]), &m(&[1, 0, 2])).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&m(&[0, 3]), &m(&[0, 3])).unwrap(), Ordering::Equal);
        assert!(matches!(
            lex_compare(&m(&[1]), &m(&[1, 0])),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn divisibility_examples() {
        assert!(m(&[1, 1, 0]).divides(&m(&[2, 1, 3])));
        assert_eq!(m(&[2, 0, 1]).lcm(&m(&[0, 3, 1])), m(&[2, 3, 1]));
        assert_eq!(quotient(&m(&[2, 1, 3]), &m(&[1, 1, 0])).unwrap(), m(&[1, 0, 3]));
        assert!(matches!(
            quotient(&m(&[1, 0]), &m(&[0, 1])),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn minimal_generator_examples() {
        let i = minimal_generators(2, vec![m(&[1, 0]), m(&[1, 1]), m(&[0, 2])]).unwrap();
        assert_eq!(i.generators(), &[m(&[1, 0]), m(&[0, 2])]);
        let i = minimal_generators(2, vec![m(&[1, 1])]).unwrap();
        assert_eq!(i.generators(), &[m(&[1, 1])]);
        let i = minimal_generators(1, vec![m(&[2]), m(&[2])]).unwrap();
        assert_eq!(i.generators(), &[m(&[2])]);
        assert_eq!(minimal_generators(2, vec![]), Err(Error::EmptyIdeal));
        assert_eq!(
            minimal_generators(2, vec![m(&[1, 0]), m(&[0, 0])]),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn membership_examples() {
        let i = minimal_generators(2, vec![m(&[1, 1])]).unwrap();
        assert!(i.contains(&m(&[2, 1])));
        assert!(!i.contains(&m(&[5, 0])));
        let max = minimal_generators(2, vec![m(&[1, 0]), m(&[0, 1])]).unwrap();
        assert!(!max.contains(&Monomial::one(2)));
    }

    #[test]
    fn standard_monomial_examples() {
        let i = minimal_generators(2, vec![m(&[1, 1])]).unwrap();
        assert_eq!(i.standard_monomials(2), vec![m(&[2, 0]), m(&[0, 2])]);
        let max = minimal_generators(2, vec![m(&[1, 0]), m(&[0, 1])]).unwrap();
        assert_eq!(max.standard_monomials(0), vec![Monomial::one(2)]);
        assert!(max.standard_monomials(1).is_empty());
    }

    #[test]
    fn degree_listing_is_descending_and_complete() {
        let all = monomials_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(all[0], m(&[2, 0, 0]));
        assert_eq!(all[5], m(&[0, 0, 2]));
    }

    #[test]
    fn permutation_relabels() {
        let i = minimal_generators(3, vec![m(&[1, 1, 0])]).unwrap();
        let p = i.permute_variables(&[2, 1, 0]).unwrap();
        assert_eq!(p.generators(), &[m(&[0, 1, 1])]);
        assert!(i.permute_variables(&[0, 0, 1]).is_err());
    }

    fn monomial_strategy(n: usize, max_e: u32) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0..=max_e, n).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn minimal_generators_form_an_antichain(
            raw in (1usize..=4).prop_flat_map(|n| prop::collection::vec(monomial_strategy(n, 3), 1..8)
                .prop_map(move |v| (n, v)))
        ) {
            let (n, raw) = raw;
            let raw: Vec<_> = raw.into_iter().filter(|g| !g.is_one()).collect();
            prop_assume!(!raw.is_empty());
            let ideal = minimal_generators(n, raw.clone()).unwrap();
            let g = ideal.generators();
            for (i, a) in g.iter().enumerate() {
                for (j, b) in g.iter().enumerate() {
                    prop_assert!(i == j || !a.divides(b));
                }
            }
            for r in &raw {
                prop_assert!(g.iter().any(|k| k.divides(r)));
            }
        }

        #[test]
        fn membership_matches_standard_monomials(
            raw in (1usize..=3).prop_flat_map(|n| prop::collection::vec(monomial_strategy(n, 2), 1..5)
                .prop_map(move |v| (n, v)))
        ) {
            let (n, raw) = raw;
            let raw: Vec<_> = raw.into_iter().filter(|g| !g.is_one()).collect();
            prop_assume!(!raw.is_empty());
            let ideal = minimal_generators(n, raw).unwrap();
            for d in 0..5 {
                let std = ideal.standard_monomials(d);
                for mono in monomials_of_degree(n, d) {
                    prop_assert_eq!(ideal.contains(&mono), !std.contains(&mono));
                }
            }
        }

        #[test]
        fn lex_is_a_total_order(a in monomial_strategy(3, 3), b in monomial_strategy(3, 3), c in monomial_strategy(3, 3)) {
            let ab = lex_compare(&a, &b).unwrap();
            prop_assert_eq!(ab.reverse(), lex_compare(&b, &a).unwrap());
            if ab == Ordering::Equal { prop_assert_eq!(&a, &b); }
            if a <= b && b <= c { prop_assert!(a <= c); }
        }
    }
}
