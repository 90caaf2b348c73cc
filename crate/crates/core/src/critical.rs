//! Canonical critical ideals
//! `I = (x_1 m_1, x_2 m_1 m_2, ..., x_{t-1} m_1...m_{t-1}, m_1...m_t)`
//! and their explicit Stanley decompositions.
//!
//! For `S/I` the decomposition walks each `m_i` one variable at a time: with
//! `w_{i1} = m_i`, `w_{i,j+1} = w_{ij} / x_{v(w_{ij})}` where `v` is the
//! smallest variable index dividing, the pieces are
//! `u_{ij} n_i K[Z_{ij}]` with `u_{ij} = prod_{k<j} x_{v(w_{ik})}`,
//! `n_i = m_1 ... m_{i-1}` and `Z_{ij} = {x_i..x_n} \ {x_{v(w_{ij})}}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{check_permutation, minimal_generators, Monomial, MonomialIdeal};

/// The data `(m_1, ..., m_t)` of a canonical critical ideal in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCriticalSpec {
    n: usize,
    ms: Vec<Monomial>,
}

impl CanonicalCriticalSpec {
    /// Requires `1 <= t <= n`, `m_i` supported on `x_i..x_n` and `deg m_t > 0`.
    pub fn new(n: usize, ms: Vec<Monomial>) -> Result<Self> {
        let t = ms.len();
        if t == 0 || t > n {
            return Err(Error::InvalidSpec(format!("need 1 <= t <= n, got t={t}, n={n}")));
        }
        for (i, m) in ms.iter().enumerate() {
            if m.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: m.n() });
            }
            if m.exponents()[..i].iter().any(|&e| e > 0) {
                return Err(Error::InvalidSpec(format!(
                    "m{} = {m} must lie in K[x{}..x{n}]",
                    i + 1,
                    i + 1
                )));
            }
        }
        if ms[t - 1].is_one() {
            return Err(Error::InvalidSpec(format!("m{t} must have positive degree")));
        }
        Ok(CanonicalCriticalSpec { n, ms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ms(&self) -> &[Monomial] {
        &self.ms
    }

    pub fn t(&self) -> usize {
        self.ms.len()
    }

    /// `m_1 ... m_k` (the empty product for `k = 0`).
    fn prefix_product(&self, k: usize) -> Monomial {
        self.ms[..k]
            .iter()
            .fold(Monomial::one(self.n), |acc, m| acc.mul(m))
    }
}

impl fmt::Display for CanonicalCriticalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for (i, m) in self.ms.iter().enumerate() {
            write!(f, "; m{}={m}", i + 1)?;
        }
        Ok(())
    }
}

/// The canonical critical ideal of `spec`; its `t` generators are minimal.
pub fn build_canonical(spec: &CanonicalCriticalSpec) -> Result<MonomialIdeal> {
    let t = spec.t();
    let mut raw = Vec::with_capacity(t);
    for i in 1..t {
        raw.push(spec.prefix_product(i).mul_var(i - 1));
    }
    raw.push(spec.prefix_product(t));
    let ideal = minimal_generators(spec.n, raw)?;
    if ideal.num_generators() != t {
        return Err(Error::internal(format!(
            "canonical ideal of {spec} has {} minimal generators, expected {t}",
            ideal.num_generators()
        )));
    }
    Ok(ideal)
}

/// Whether a decomposition targets `S/I` or `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Quotient,
    Ideal,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Quotient => "quotient",
            Mode::Ideal => "ideal",
        })
    }
}

/// The Stanley space `u K[Z]`. `vars` holds zero-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StanleyPiece {
    pub shift: Monomial,
    pub vars: Vec<usize>,
}

impl StanleyPiece {
    pub fn new(shift: Monomial, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        StanleyPiece { shift, vars }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// Whether `m` lies in `u K[Z]`: `u | m` and `m / u` only uses `Z`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.contains_exps(m.exponents())
    }

    fn contains_exps(&self, a: &[u32]) -> bool {
        let u = self.shift.exponents();
        let mut free = self.vars.iter().peekable();
        for (j, (&aj, &uj)) in a.iter().zip(u).enumerate() {
            let is_free = free.next_if_eq(&&j).is_some();
            if aj < uj || (!is_free && aj != uj) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for StanleyPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*K[", self.shift)?;
        for (k, j) in self.vars.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", j + 1)?;
        }
        f.write_str("]")
    }
}

pub fn piece_contains(piece: &StanleyPiece, m: &Monomial) -> bool {
    piece.contains(m)
}

/// A finite list of Stanley spaces claimed to decompose `S/I` or `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    n: usize,
    mode: Mode,
    pieces: Vec<StanleyPiece>,
    sdepth: usize,
}

impl StanleyDecomposition {
    pub fn new(n: usize, mode: Mode, pieces: Vec<StanleyPiece>) -> Result<Self> {
        let Some(sdepth) = pieces.iter().map(StanleyPiece::dim).min() else {
            return Err(Error::InvalidArgument("empty Stanley decomposition".into()));
        };
        for p in &pieces {
            if p.shift.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: p.shift.n() });
            }
            if p.vars.iter().any(|&j| j >= n) {
                return Err(Error::InvalidArgument(format!("piece {p} uses a variable beyond x{n}")));
            }
        }
        Ok(StanleyDecomposition { n, mode, pieces, sdepth })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn pieces(&self) -> &[StanleyPiece] {
        &self.pieces
    }

    /// `min |Z|` over the pieces.
    pub fn sdepth(&self) -> usize {
        self.sdepth
    }

    /// Relabels variables: `x_{j+1}` becomes `x_{perm[j]+1}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<StanleyDecomposition> {
        check_permutation(perm, self.n)?;
        let pieces = self
            .pieces
            .iter()
            .map(|p| StanleyPiece::new(p.shift.permute(perm), p.vars.iter().map(|&j| perm[j]).collect()))
            .collect();
        StanleyDecomposition::new(self.n, self.mode, pieces)
    }
}

pub fn sdepth_of_decomposition(d: &StanleyDecomposition) -> usize {
    d.sdepth()
}

/// The direct sum decomposition of `I` itself:
/// `x_j m_1...m_j K[x_j..x_n]` for `j < t` and `m_1...m_t K[x_t..x_n]`.
pub fn ideal_direct_sum(spec: &CanonicalCriticalSpec) -> Result<StanleyDecomposition> {
    let (n, t) = (spec.n, spec.t());
    let mut pieces = Vec::with_capacity(t);
    for j in 1..t {
        pieces.push(StanleyPiece::new(
            spec.prefix_product(j).mul_var(j - 1),
            (j - 1..n).collect(),
        ));
    }
    pieces.push(StanleyPiece::new(spec.prefix_product(t), (t - 1..n).collect()));
    StanleyDecomposition::new(n, Mode::Ideal, pieces)
}

/// The chain data for one `m_i`. Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainScaffold {
    /// `w_{i1}, ..., w_{i d_i}`.
    pub chain: Vec<Monomial>,
    /// `v(w_{ij})` for each link.
    pub v: Vec<usize>,
    /// `u_{i1} = 1, ..., u_{i d_i}`.
    pub prefixes: Vec<Monomial>,
    /// `Z_{ij}`.
    pub vars: Vec<Vec<usize>>,
    /// `n_i = m_1 ... m_{i-1}`.
    pub shift: Monomial,
}

impl ChainScaffold {
    pub fn d(&self) -> usize {
        self.chain.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionScaffold {
    pub n: usize,
    pub chains: Vec<ChainScaffold>,
}

pub fn scaffold(spec: &CanonicalCriticalSpec) -> DecompositionScaffold {
    let n = spec.n;
    let chains = spec
        .ms
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let mut chain = Vec::new();
            let mut v = Vec::new();
            let mut prefixes = Vec::new();
            let mut vars = Vec::new();
            let mut w = m.clone();
            let mut u = Monomial::one(n);
            while let Some(k) = w.first_variable() {
                chain.push(w.clone());
                v.push(k);
                prefixes.push(u.clone());
                vars.push((i..n).filter(|&j| j != k).collect());
                let mut e = w.exponents().to_vec();
                e[k] -= 1;
                w = Monomial::new(e);
                u = u.mul_var(k);
            }
            ChainScaffold {
                chain,
                v,
                prefixes,
                vars,
                shift: spec.prefix_product(i),
            }
        })
        .collect();
    DecompositionScaffold { n, chains }
}

/// The decomposition `S/I = sum_i sum_j u_{ij} n_i K[Z_{ij}]`.
pub fn stanley_decomposition(spec: &CanonicalCriticalSpec) -> Result<StanleyDecomposition> {
    let sc = scaffold(spec);
    let pieces = sc
        .chains
        .iter()
        .flat_map(|c| {
            c.prefixes
                .iter()
                .zip(&c.vars)
                .map(|(u, z)| StanleyPiece::new(u.mul(&c.shift), z.clone()))
        })
        .collect();
    StanleyDecomposition::new(spec.n, Mode::Quotient, pieces)
}

/// Result of an exhaustive partition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCheck {
    pub ok: bool,
    /// Lex-least exponent vector covered the wrong number of times.
    pub counterexample: Option<Monomial>,
    pub points_checked: u64,
}

/// Checks that every monomial of the target set (standard monomials in
/// quotient mode, monomials of `I` in ideal mode) lies in exactly one piece
/// and every other monomial in none.
///
/// The check runs over the box `prod [0, B_j]` with `B_j` one more than the
/// largest `j`-th exponent among generators and shifts; all memberships only
/// compare `a_j` against smaller thresholds, so the box is exhaustive.
pub fn verify_partition(d: &StanleyDecomposition, ideal: &MonomialIdeal) -> Result<PartitionCheck> {
    let n = ideal.n();
    if d.n != n {
        return Err(Error::AmbientMismatch { left: d.n, right: n });
    }
    let mut bound = vec![0u32; n];
    for m in ideal.generators().iter().chain(d.pieces.iter().map(|p| &p.shift)) {
        for (b, &e) in bound.iter_mut().zip(m.exponents()) {
            *b = (*b).max(e);
        }
    }
    for b in &mut bound {
        *b += 1;
    }
    let mut a = vec![0u32; n];
    let mut checked = 0u64;
    // Odometer with x_n fastest visits the box in ascending lex order.
    loop {
        checked += 1;
        let m = Monomial::new(a.clone());
        let in_target = ideal.contains(&m) == (d.mode == Mode::Ideal);
        let hits = d.pieces.iter().filter(|p| p.contains_exps(&a)).count();
        if hits != usize::from(in_target) {
            return Ok(PartitionCheck {
                ok: false,
                counterexample: Some(m),
                points_checked: checked,
            });
        }
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(PartitionCheck {
                    ok: true,
                    counterexample: None,
                    points_checked: checked,
                });
            }
            j -= 1;
            if a[j] < bound[j] {
                a[j] += 1;
                break;
            }
            a[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_monomial, parse_spec};

    fn spec(s: &str) -> CanonicalCriticalSpec {
        parse_spec(s).unwrap()
    }

    fn shown(d: &StanleyDecomposition) -> Vec<String> {
        d.pieces().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn spec_validation() {
        let x = |s, n| parse_monomial(s, n).unwrap();
        assert!(CanonicalCriticalSpec::new(2, vec![]).is_err());
        assert!(CanonicalCriticalSpec::new(1, vec![x("x1", 1), x("x1", 1)]).is_err());
        assert!(CanonicalCriticalSpec::new(2, vec![x("x1", 2), x("1", 2)]).is_err());
        assert!(CanonicalCriticalSpec::new(2, vec![x("x1", 2), x("x1*x2", 2)]).is_err());
        assert!(CanonicalCriticalSpec::new(2, vec![x("1", 2), x("x2", 2)]).is_ok());
    }

    #[test]
    fn build_examples() {
        assert_eq!(
            build_canonical(&spec("n=3; m1=x2; m2=x3")).unwrap(),
            parse_ideal("n=3; x1*x2, x2*x3").unwrap()
        );
        assert_eq!(
            build_canonical(&spec("n=2; m1=x1*x2")).unwrap(),
            parse_ideal("n=2; x1*x2").unwrap()
        );
        assert_eq!(
            build_canonical(&spec("n=2; m1=1; m2=x2")).unwrap(),
            parse_ideal("n=2; x1, x2").unwrap()
        );
    }

    #[test]
    fn direct_sum_examples() {
        let s = spec("n=3; m1=x2; m2=x3");
        let d = ideal_direct_sum(&s).unwrap();
        assert_eq!(shown(&d), ["x1*x2*K[x1,x2,x3]", "x2*x3*K[x2,x3]"]);
        assert!(verify_partition(&d, &build_canonical(&s).unwrap()).unwrap().ok);

        let d = ideal_direct_sum(&spec("n=2; m1=x1*x2")).unwrap();
        assert_eq!(shown(&d), ["x1*x2*K[x1,x2]"]);

        let s = spec("n=2; m1=1; m2=x2");
        let d = ideal_direct_sum(&s).unwrap();
        assert_eq!(shown(&d), ["x1*K[x1,x2]", "x2*K[x2]"]);
        assert!(verify_partition(&d, &build_canonical(&s).unwrap()).unwrap().ok);
    }

    #[test]
    fn scaffold_examples() {
        let sc = scaffold(&spec("n=2; m1=x1*x2"));
        let c = &sc.chains[0];
        assert_eq!(c.v, vec![0, 1]);
        assert_eq!(c.prefixes[0].to_string(), "1");
        assert_eq!(c.prefixes[1].to_string(), "x1");
        assert_eq!(c.vars, vec![vec![1], vec![0]]);

        let sc = scaffold(&spec("n=2; m1=1; m2=x2"));
        assert_eq!(sc.chains[0].d(), 0);

        let sc = scaffold(&spec("n=3; m1=x2; m2=x3"));
        assert_eq!(sc.chains[0].vars[0], vec![0, 2]);
        assert_eq!(sc.chains[1].vars[0], vec![1]);
        assert_eq!(sc.chains[1].shift.to_string(), "x2");
    }

    #[test]
    fn decomposition_examples() {
        let s = spec("n=2; m1=x1*x2");
        let d = stanley_decomposition(&s).unwrap();
        assert_eq!(shown(&d), ["1*K[x2]", "x1*K[x1]"]);
        assert_eq!(d.sdepth(), 1);
        assert!(verify_partition(&d, &build_canonical(&s).unwrap()).unwrap().ok);

        let s = spec("n=3; m1=x2; m2=x3");
        let d = stanley_decomposition(&s).unwrap();
        assert_eq!(shown(&d), ["1*K[x1,x3]", "x2*K[x2]"]);
        assert_eq!(sdepth_of_decomposition(&d), 1);
        assert!(verify_partition(&d, &build_canonical(&s).unwrap()).unwrap().ok);

        let s = spec("n=2; m1=1; m2=x2");
        let d = stanley_decomposition(&s).unwrap();
        assert_eq!(shown(&d), ["1*K[]"]);
        assert_eq!(d.sdepth(), 0);
        assert!(verify_partition(&d, &build_canonical(&s).unwrap()).unwrap().ok);
    }

    #[test]
    fn piece_membership() {
        let n = 2;
        let x1 = parse_monomial("x1", n).unwrap();
        let p = StanleyPiece::new(x1.clone(), vec![0]);
        assert!(p.contains(&parse_monomial("x1^3", n).unwrap()));
        assert!(!p.contains(&parse_monomial("x1*x2", n).unwrap()));
        assert!(!p.contains(&Monomial::one(n)));
        let q = StanleyPiece::new(Monomial::one(n), vec![1]);
        assert!(piece_contains(&q, &Monomial::one(n)));
    }

    #[test]
    fn partition_failure_reports_lex_least_point() {
        let ideal = parse_ideal("n=2; x1*x2").unwrap();
        let whole = StanleyDecomposition::new(
            2,
            Mode::Quotient,
            vec![StanleyPiece::new(Monomial::one(2), vec![0, 1])],
        )
        .unwrap();
        let check = verify_partition(&whole, &ideal).unwrap();
        assert!(!check.ok);
        assert_eq!(check.counterexample.unwrap().to_string(), "x1*x2");
    }

    #[test]
    fn overlapping_pieces_are_caught() {
        let ideal = parse_ideal("n=1; x1^2").unwrap();
        let d = StanleyDecomposition::new(
            1,
            Mode::Quotient,
            vec![
                StanleyPiece::new(Monomial::one(1), vec![]),
                StanleyPiece::new(Monomial::one(1), vec![]),
                StanleyPiece::new(Monomial::var(1, 0), vec![]),
            ],
        )
        .unwrap();
        let check = verify_partition(&d, &ideal).unwrap();
        assert_eq!(check.counterexample, Some(Monomial::one(1)));
    }

    #[test]
    fn empty_decomposition_is_rejected() {
        assert!(StanleyDecomposition::new(2, Mode::Quotient, vec![]).is_err());
    }

    #[test]
    fn relabeling_preserves_partition() {
        let s = spec("n=3; m1=x2; m2=x3");
        let ideal = build_canonical(&s).unwrap();
        let perm = [2, 0, 1];
        let d = stanley_decomposition(&s).unwrap().permute_variables(&perm).unwrap();
        let relabeled = ideal.permute_variables(&perm).unwrap();
        assert!(verify_partition(&d, &relabeled).unwrap().ok);
    }
}
