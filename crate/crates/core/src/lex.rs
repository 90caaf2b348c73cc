//! Lexsegment ideals, the lex ideal with a given Hilbert function, and the
//! critical-ideal test.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{dim_degree, hilbert_series_numerator, HilbertData};
use crate::monomial::{minimal_generators, monomials_of_degree, Monomial, MonomialIdeal};

/// The `k` lex-greatest monomials of degree `d` in `n` variables.
pub fn lex_segment(n: usize, d: u32, k: usize) -> Result<Vec<Monomial>> {
    let all = monomials_of_degree(n, d);
    if k > all.len() {
        return Err(Error::InvalidArgument(format!(
            "lex segment of size {k} exceeds dim S_{d} = {}",
            all.len()
        )));
    }
    Ok(all.into_iter().take(k).collect())
}

/// Whether the degree-`d` part of `ideal` is an initial lex segment.
fn degree_is_lex(ideal: &MonomialIdeal, d: u32) -> bool {
    let mut left_segment = false;
    for m in monomials_of_degree(ideal.n(), d) {
        if ideal.contains(&m) {
            if left_segment {
                return false;
            }
        } else {
            left_segment = true;
        }
    }
    true
}

/// Whether `ideal` is a lexsegment ideal.
///
/// Degrees up to the largest generator degree decide the question; one more
/// degree is checked and a failure there is reported as an internal error.
pub fn is_lexsegment(ideal: &MonomialIdeal) -> Result<bool> {
    let top = ideal.max_generator_degree();
    if !(0..=top).all(|d| degree_is_lex(ideal, d)) {
        return Ok(false);
    }
    if !degree_is_lex(ideal, top + 1) {
        return Err(Error::internal(format!(
            "{ideal} is lex up to degree {top} but not in degree {}",
            top + 1
        )));
    }
    Ok(true)
}

/// `I^lex` together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexIdealResult {
    pub ideal: MonomialIdeal,
    pub generator_degrees: Vec<u32>,
    /// Exact numerator equality with the input was verified.
    pub certified: bool,
}

/// Builds the lex ideal in `n` variables whose Hilbert function is `value(d)`,
/// certifying against the numerator `target` over `(1 - t)^n`.
pub(crate) fn lex_ideal_from_values(
    n: usize,
    value: impl Fn(u32) -> Result<u64>,
    target: &[i64],
    ceiling: u32,
) -> Result<LexIdealResult> {
    let mut gens: Vec<Monomial> = Vec::new();
    for d in 0..=ceiling {
        let h = value(d)?;
        let dim = dim_degree(n, d)?;
        if h > dim {
            return Err(Error::internal(format!(
                "H({d}) = {h} exceeds dim S_{d} = {dim}"
            )));
        }
        let segment = lex_segment(n, d, (dim - h) as usize)?;
        let mut added = false;
        let mut inherited = 0usize;
        for m in segment {
            if gens.iter().any(|g| g.divides(&m)) {
                inherited += 1;
            } else {
                gens.push(m);
                added = true;
            }
        }
        // Everything the earlier generators reach in degree d must sit inside
        // the segment; otherwise the values are not a Hilbert function.
        let reached = monomials_of_degree(n, d)
            .iter()
            .filter(|m| gens.iter().any(|g| g.divides(m)))
            .count();
        if reached != inherited + gens.iter().filter(|g| g.degree() == d).count() {
            return Err(Error::internal(format!(
                "values are not a Hilbert function in {n} variables (degree {d})"
            )));
        }
        if !added && !gens.is_empty() {
            let candidate = minimal_generators(n, gens.clone())?;
            if hilbert_series_numerator(&candidate).numerator == target {
                let generator_degrees = candidate.generators().iter().map(Monomial::degree).collect();
                return Ok(LexIdealResult {
                    ideal: candidate,
                    generator_degrees,
                    certified: true,
                });
            }
        }
    }
    Err(Error::DegreeCeiling { ceiling })
}

/// The lex ideal of a Hilbert series given by its numerator.
pub fn lex_ideal_of_series(hilbert: &HilbertData, ceiling: u32) -> Result<LexIdealResult> {
    lex_ideal_from_values(hilbert.n, |d| hilbert.value(d), &hilbert.numerator, ceiling)
}

/// `I^lex`, the unique lexsegment ideal with the Hilbert function of `S/I`.
pub fn lex_ideal_of(ideal: &MonomialIdeal, ceiling: u32) -> Result<LexIdealResult> {
    lex_ideal_of_series(&hilbert_series_numerator(ideal), ceiling)
}

/// Exponents `a_1, ..., a_t` when `G(I)` has the universal lexsegment shape
/// `x_1^{a_1+1}, x_1^{a_1} x_2^{a_2+1}, ..., x_1^{a_1} ... x_t^{a_t}`.
pub fn universal_lex_exponents(ideal: &MonomialIdeal) -> Option<Vec<u32>> {
    let gens = ideal.generators();
    let t = gens.len();
    if t > ideal.n() {
        return None;
    }
    let mut a = Vec::with_capacity(t);
    for (i, u) in gens.iter().enumerate() {
        let e = u.exponent(i);
        let ai = if i + 1 < t { e.checked_sub(1)? } else { e };
        if i + 1 == t && ai == 0 {
            return None;
        }
        a.push(ai);
        let prefix_ok = (0..i).all(|k| u.exponent(k) == a[k]);
        let tail_ok = (i + 1..ideal.n()).all(|k| u.exponent(k) == 0);
        if !prefix_ok || !tail_ok {
            return None;
        }
    }
    Some(a)
}

/// Whether `ideal` stays lexsegment after adjoining any number of variables.
///
/// Decided by the generator shape; a shape match that fails to be lexsegment
/// in `n + 1` or `n + 2` variables is an internal error.
pub fn is_universal_lexsegment(ideal: &MonomialIdeal) -> Result<bool> {
    if universal_lex_exponents(ideal).is_none() {
        return Ok(false);
    }
    for extra in 1..=2 {
        if !is_lexsegment(&ideal.extend(extra))? {
            return Err(Error::internal(format!(
                "{ideal} has universal shape but is not lexsegment with {extra} more variables"
            )));
        }
    }
    Ok(true)
}

/// Whether `I^lex` is universal lexsegment.
pub fn is_critical(ideal: &MonomialIdeal, ceiling: u32) -> Result<bool> {
    let lex = lex_ideal_of(ideal, ceiling)?;
    critical_from_lex(&lex.ideal)
}

pub(crate) fn critical_from_lex(lex: &MonomialIdeal) -> Result<bool> {
    let few_generators = lex.num_generators() <= lex.n();
    let universal = is_universal_lexsegment(lex)?;
    if few_generators != universal {
        return Err(Error::internal(format!(
            "lex ideal {lex}: generator count test says {few_generators}, shape test says {universal}"
        )));
    }
    Ok(universal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s).unwrap()
    }

    #[test]
    fn segment_examples() {
        let seg = lex_segment(3, 2, 3).unwrap();
        let shown: Vec<String> = seg.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x1^2", "x1*x2", "x1*x3"]);
        assert!(lex_segment(2, 3, 0).unwrap().is_empty());
        assert_eq!(lex_segment(2, 2, 3).unwrap().len(), 3);
        assert!(lex_segment(2, 2, 4).is_err());
    }

    #[test]
    fn lexsegment_examples() {
        assert!(is_lexsegment(&ideal("n=2; x1^2, x1*x2, x2^2")).unwrap());
        assert!(!is_lexsegment(&ideal("n=2; x1*x2")).unwrap());
        assert!(is_lexsegment(&ideal("n=3; x1")).unwrap());
    }

    #[test]
    fn lex_ideal_examples() {
        let r = lex_ideal_of(&ideal("n=2; x1*x2"), 64).unwrap();
        assert_eq!(r.ideal, ideal("n=2; x1^2"));
        assert!(r.certified);
        assert_eq!(r.generator_degrees, vec![2]);
        let i = ideal("n=2; x1^2, x1*x2, x2^2");
        assert_eq!(lex_ideal_of(&i, 64).unwrap().ideal, i);
        let r = lex_ideal_of(&ideal("n=3; x1^2, x1*x2, x2^2"), 64).unwrap();
        assert_eq!(r.ideal, ideal("n=3; x1^2, x1*x2, x1*x3, x2^3"));
        assert_eq!(r.generator_degrees, vec![2, 2, 2, 3]);
    }

    #[test]
    fn ceiling_breach_is_an_error() {
        assert_eq!(
            lex_ideal_of(&ideal("n=2; x1^3, x2^3"), 3),
            Err(Error::DegreeCeiling { ceiling: 3 })
        );
    }

    #[test]
    fn universal_examples() {
        assert!(is_universal_lexsegment(&ideal("n=2; x1^2, x1*x2^3")).unwrap());
        assert_eq!(
            universal_lex_exponents(&ideal("n=2; x1^2, x1*x2^3")),
            Some(vec![1, 3])
        );
        assert!(!is_universal_lexsegment(&ideal("n=2; x1^2, x1*x2, x2^2")).unwrap());
        assert!(is_universal_lexsegment(&ideal("n=1; x1")).unwrap());
        assert!(!is_universal_lexsegment(&ideal("n=2; x1*x2")).unwrap());
    }

    #[test]
    fn critical_examples() {
        assert!(is_critical(&ideal("n=2; x1*x2"), 64).unwrap());
        assert!(!is_critical(&ideal("n=2; x1^2, x1*x2, x2^2"), 64).unwrap());
        assert!(is_critical(&ideal("n=3; x1*x2, x2*x3"), 64).unwrap());
    }
}
