//! Multigraded Betti numbers from Koszul homology, and depth via
//! Auslander–Buchsbaum.
//!
//! For a multidegree `a`, the degree-`a` strand of the Koszul complex of
//! `S/I` has a basis `e_J` for the subsets `J` of variables with
//! `a - e_J >= 0` and `x^{a - e_J}` not in `I`. Its homology in index `k`
//! is `Tor_k(S/I, K)_a`, nonzero only on the lcm lattice of `G(I)`.
//! Table entries are indexed as Betti numbers of `I`:
//! `beta_i(I)_a = dim Tor_{i+1}(S/I, K)_a`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Strand bases are enumerated as subsets of the support.
const MAX_STRAND_VARIABLES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: Vec<u32>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub characteristic: u64,
    /// Nonzero entries, sorted by `(i, multidegree)`.
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    /// `pd(S/I) = 1 + max i`.
    pub fn projective_dimension_quotient(&self) -> usize {
        1 + self.entries.iter().map(|e| e.i).max().unwrap_or(0)
    }

    /// Total Betti numbers `beta_i(I)`, `i = 0..`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.projective_dimension_quotient()];
        for e in &self.entries {
            out[e.i] += e.rank;
        }
        out
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d <= p / d {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a dense matrix over GF(p); entries already reduced mod `p`.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let inv = |x: u64| pow_mod(x, p - 2, p);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, scale, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// The lcms of all nonempty subsets of `G(I)`.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier: Vec<Monomial> = ideal.generators().to_vec();
    seen.extend(frontier.iter().cloned());
    while let Some(l) = frontier.pop() {
        for g in ideal.generators() {
            let m = l.lcm(g);
            if seen.insert(m.clone()) {
                if seen.len() > cap {
                    return Err(Error::Resource {
                        what: "lcm lattice size".into(),
                        limit: cap as u64,
                    });
                }
                frontier.push(m);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Koszul homology dimensions `dim H_k` of the degree-`a` strand of `S/I`.
fn strand_homology(ideal: &MonomialIdeal, a: &Monomial, p: u64) -> Vec<usize> {
    let support = a.support();
    debug_assert!(support.len() <= MAX_STRAND_VARIABLES);
    let s = support.len();
    // basis[k]: subsets (bitmasks over `support`) of size k in the strand
    let mut basis: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        let mut e = a.exponents().to_vec();
        for (bit, &j) in support.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                e[j] -= 1;
            }
        }
        if !ideal.contains(&Monomial::new(e)) {
            basis[mask.count_ones() as usize].push(mask);
        }
    }
    let positions: Vec<BTreeMap<u32, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    // rank of d_k : C_k -> C_{k-1}
    let mut ranks = vec![0usize; s + 2];
    for k in 1..=s {
        if basis[k].is_empty() || basis[k - 1].is_empty() {
            continue;
        }
        let rows: Vec<Vec<u64>> = basis[k]
            .iter()
            .map(|&mask| {
                let mut row = vec![0u64; basis[k - 1].len()];
                let mut position = 0;
                for bit in 0..s {
                    if mask >> bit & 1 == 0 {
                        continue;
                    }
                    if let Some(&col) = positions[k - 1].get(&(mask & !(1 << bit))) {
                        row[col] = if position % 2 == 0 { 1 } else { p - 1 };
                    }
                    position += 1;
                }
                row
            })
            .collect();
        ranks[k] = rank_mod_p(rows, p);
    }
    (0..=s)
        .map(|k| basis[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Multigraded Betti numbers of `I` over GF(p).
pub fn betti_numbers(ideal: &MonomialIdeal, p: u64, limits: &Limits) -> Result<BettiTable> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if ideal.n() > MAX_STRAND_VARIABLES {
        return Err(Error::Resource {
            what: "variables in a Koszul strand".into(),
            limit: MAX_STRAND_VARIABLES as u64,
        });
    }
    let mut entries = Vec::new();
    for a in lcm_lattice(ideal, limits.lcm_cap)? {
        for (k, &h) in strand_homology(ideal, &a, p).iter().enumerate() {
            if h == 0 {
                continue;
            }
            if k == 0 {
                return Err(Error::internal(format!("Tor_0 nonzero in degree {a}")));
            }
            entries.push(BettiEntry {
                i: k - 1,
                multidegree: a.exponents().to_vec(),
                rank: h,
            });
        }
    }
    entries.sort_by(|x, y| (x.i, &x.multidegree).cmp(&(y.i, &y.multidegree)));
    Ok(BettiTable {
        characteristic: p,
        entries,
    })
}

/// `depth(S/I) = n - pd(S/I)`.
pub fn depth_quotient(ideal: &MonomialIdeal, p: u64, limits: &Limits) -> Result<usize> {
    let table = betti_numbers(ideal, p, limits)?;
    let pd = table.projective_dimension_quotient();
    ideal
        .n()
        .checked_sub(pd)
        .ok_or_else(|| Error::internal(format!("projective dimension {pd} exceeds n = {}", ideal.n())))
}

/// `depth(I) = 1 + depth(S/I)`.
pub fn depth_ideal(ideal: &MonomialIdeal, p: u64, limits: &Limits) -> Result<usize> {
    depth_quotient(ideal, p, limits).map(|d| d + 1)
}
