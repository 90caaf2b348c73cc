//! A Stanley ideal with the depth and Hilbert function of a non-critical
//! monomial ideal.
//!
//! With `b = depth(S/I)`, a generic linear regular sequence of length `b`
//! reduces `S/I` to an algebra over `S' = K[x_1..x_{n-b}]` whose Hilbert
//! function is the `b`-fold backward difference of `H_{S/I}`. Only that
//! numerical consequence is used: the lex ideal `J` of the difference
//! sequence in `S'`, read back in `S`, is the output `L`.

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::critical::Mode;
use crate::error::{Error, ErrorKind, Result};
use crate::hilbert::{binomial, hilbert_series_numerator, is_o_sequence, HilbertData};
use crate::homological::{depth_quotient, sdepth_oracle};
use crate::lex::{critical_from_lex, is_universal_lexsegment, lex_ideal_from_values, lex_ideal_of};
use crate::monomial::MonomialIdeal;

/// `H'(d) = sum_k (-1)^k C(b, k) H(d - k)`, with `H(d) = 0` for `d < 0`.
///
/// A negative value means `b` exceeds the depth.
pub fn difference_sequence(values: &[u64], b: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(values.len());
    for d in 0..values.len() {
        let mut acc: i128 = 0;
        for k in 0..=b.min(d) {
            let c = binomial(b as u64, k as u64).ok_or(Error::Overflow("difference sequence"))? as i128;
            let term = c * values[d - k] as i128;
            acc += if k % 2 == 0 { term } else { -term };
        }
        if acc < 0 {
            return Err(Error::DepthOverstated { degree: d, value: acc });
        }
        out.push(acc as u64);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyizeChecks {
    pub hilbert_equal: bool,
    pub depth_equal: bool,
    /// `depth(S'/J) = 0`.
    pub artinian_reduction: bool,
    /// `sdepth(S/L) >= depth(S/L)`; `None` when the search exceeded a limit.
    pub sdepth_ge_depth: Option<bool>,
    pub sdepth: Option<usize>,
    pub sdepth_note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyizeCertificate {
    pub input: MonomialIdeal,
    pub characteristic: u64,
    /// `b = depth(S/I)`.
    pub depth: usize,
    pub hilbert_prefix: Vec<u64>,
    pub difference_prefix: Vec<u64>,
    /// The lex ideal in `n - b` variables.
    pub j_lex: MonomialIdeal,
    /// `J` extended to `n` variables.
    pub stanley_ideal: MonomialIdeal,
    pub checks: StanleyizeChecks,
}

pub fn stanleyize(ideal: &MonomialIdeal, limits: &Limits) -> Result<StanleyizeCertificate> {
    let n = ideal.n();
    let p = limits.prime;
    let lex = lex_ideal_of(ideal, limits.degree_ceiling)?;
    if critical_from_lex(&lex.ideal)? {
        return Err(Error::CriticalInput);
    }
    let b = depth_quotient(ideal, p, limits)?;
    if b >= n {
        return Err(Error::internal(format!("depth {b} of a nonzero ideal in {n} variables")));
    }
    let series = hilbert_series_numerator(ideal);
    let values = series.values(limits.degree_ceiling)?;
    let diff = difference_sequence(&values, b)?;
    let reduced = HilbertData {
        n: n - b,
        numerator: series.numerator.clone(),
    };
    if reduced.values(limits.degree_ceiling)? != diff {
        return Err(Error::internal("difference sequence disagrees with the reduced series"));
    }
    if !is_o_sequence(&diff, n - b)?.ok {
        return Err(Error::internal(format!(
            "difference sequence is not an O-sequence in {} variables",
            n - b
        )));
    }
    let j = lex_ideal_from_values(n - b, |d| Ok(diff[d as usize]), &series.numerator, limits.degree_ceiling)?;
    let j_lex = j.ideal;
    if is_universal_lexsegment(&j_lex)? {
        return Err(Error::internal(format!("reduced lex ideal {j_lex} is universal lexsegment")));
    }
    if depth_quotient(&j_lex, p, limits)? != 0 {
        return Err(Error::internal(format!("reduced lex ideal {j_lex} has positive depth")));
    }
    let stanley_ideal = j_lex.extend(b);

    let hilbert_equal = hilbert_series_numerator(&stanley_ideal).numerator == series.numerator;
    let depth_equal = depth_quotient(&stanley_ideal, p, limits)? == b;
    let (sdepth, sdepth_ge_depth, sdepth_note) = match sdepth_oracle(&stanley_ideal, Mode::Quotient, limits) {
        Ok(s) => (Some(s), Some(s >= b), None),
        Err(e) if e.kind() == ErrorKind::Resource => (None, None, Some(format!("not verified: {e}"))),
        Err(e) => return Err(e),
    };
    if !hilbert_equal || !depth_equal || sdepth_ge_depth == Some(false) {
        return Err(Error::internal(format!(
            "certificate for {ideal} failed: hilbert {hilbert_equal}, depth {depth_equal}, sdepth {sdepth:?} vs {b}"
        )));
    }

    let horizon = (j_lex.max_generator_degree().max(ideal.lcm_all().degree()) + 1).min(limits.degree_ceiling);
    let cut = horizon as usize + 1;
    Ok(StanleyizeCertificate {
        input: ideal.clone(),
        characteristic: p,
        depth: b,
        hilbert_prefix: values[..cut].to_vec(),
        difference_prefix: diff[..cut].to_vec(),
        j_lex,
        stanley_ideal,
        checks: StanleyizeChecks {
            hilbert_equal,
            depth_equal,
            artinian_reduction: true,
            sdepth_ge_depth,
            sdepth,
            sdepth_note,
        },
    })
}
