use std::fmt::Write as _;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use stanley_critical::homological::{BettiTable, SdepthResult};
use stanley_critical::{
    CanonicalCriticalSpec, Error, ErrorKind, HilbertData, LexIdealResult, Limits, Monomial, MonomialIdeal,
    PartitionCheck, StanleyDecomposition, StanleyizeCertificate,
};

/// Human-readable rendering printed after the JSON under `--pretty`.
pub type Pretty = String;

type Rendered = Result<(Value, Pretty), Error>;

#[derive(Serialize)]
struct ErrorOut {
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
pub struct Report<'a> {
    command: &'a str,
    config: Limits,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorOut>,
    #[serde(skip)]
    pretty: Pretty,
}

impl<'a> Report<'a> {
    pub fn ok(command: &'a str, config: Limits, result: Value, pretty: Pretty) -> Self {
        Report {
            command,
            config,
            result: Some(result),
            error: None,
            pretty,
        }
    }

    pub fn error(command: &'a str, config: Limits, e: &Error) -> Self {
        let kind = match e.kind() {
            ErrorKind::Validation => "validation",
            ErrorKind::Precondition => "precondition",
            ErrorKind::Resource => "resource",
            ErrorKind::Internal => "internal",
        };
        let pretty = format!("error ({kind}): {e}\n");
        Report {
            command,
            config,
            result: None,
            error: Some(ErrorOut {
                kind,
                message: e.to_string(),
            }),
            pretty,
        }
    }

    pub fn write(&self, out: &mut impl Write, pretty: bool) -> io::Result<()> {
        serde_json::to_writer(&mut *out, self)?;
        writeln!(out)?;
        if pretty {
            out.write_all(self.pretty.as_bytes())?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct IdealOut {
    text: String,
    variables: usize,
    generators: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealOut {
    fn from(i: &MonomialIdeal) -> Self {
        IdealOut {
            text: i.to_string(),
            variables: i.n(),
            generators: i.generators().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

fn finish(value: impl Serialize, pretty: Pretty) -> Rendered {
    let value = serde_json::to_value(value).map_err(|e| Error::Internal(format!("serializing the report: {e}")))?;
    Ok((value, pretty))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn hilbert(ideal: &MonomialIdeal, series: &HilbertData, values: Vec<u64>) -> Rendered {
    #[derive(Serialize)]
    struct Out<'a> {
        input: IdealOut,
        n: usize,
        numerator: &'a [i64],
        values: &'a [u64],
    }
    let mut p = format!("ideal      {ideal}\n");
    let _ = writeln!(p, "numerator  {}  over (1-t)^{}", join(&series.numerator), series.n);
    let _ = writeln!(p, "degree     {}", join(0..values.len()));
    let _ = writeln!(p, "H(d)       {}", join(&values));
    finish(
        Out {
            input: ideal.into(),
            n: series.n,
            numerator: &series.numerator,
            values: &values,
        },
        p,
    )
}

pub fn lex(ideal: &MonomialIdeal, lex: &LexIdealResult) -> Rendered {
    #[derive(Serialize)]
    struct Out<'a> {
        input: IdealOut,
        lex: IdealOut,
        generator_degrees: &'a [u32],
        certified: bool,
    }
    let mut p = format!("ideal      {ideal}\n");
    let _ = writeln!(p, "lex ideal  {}", lex.ideal);
    let _ = writeln!(p, "degrees    {}", join(&lex.generator_degrees));
    let _ = writeln!(p, "certified  {}", lex.certified);
    finish(
        Out {
            input: ideal.into(),
            lex: (&lex.ideal).into(),
            generator_degrees: &lex.generator_degrees,
            certified: lex.certified,
        },
        p,
    )
}

pub fn is_critical(ideal: &MonomialIdeal, lex: &LexIdealResult, critical: bool) -> Rendered {
    #[derive(Serialize)]
    struct Out {
        input: IdealOut,
        critical: bool,
        lex: IdealOut,
        lex_generators: usize,
    }
    let mut p = format!("ideal           {ideal}\n");
    let _ = writeln!(p, "lex ideal       {}", lex.ideal);
    let _ = writeln!(p, "lex generators  {} (n = {})", lex.ideal.num_generators(), ideal.n());
    let _ = writeln!(p, "critical        {critical}");
    finish(
        Out {
            input: ideal.into(),
            critical,
            lex: (&lex.ideal).into(),
            lex_generators: lex.ideal.num_generators(),
        },
        p,
    )
}

pub fn build(spec: &CanonicalCriticalSpec, ideal: &MonomialIdeal) -> Rendered {
    #[derive(Serialize)]
    struct Out {
        spec: String,
        ideal: IdealOut,
        t: usize,
    }
    let mut p = format!("spec   {spec}\n");
    let _ = writeln!(p, "ideal  {ideal}");
    for g in ideal.generators() {
        let _ = writeln!(p, "  {g}");
    }
    finish(
        Out {
            spec: spec.to_string(),
            ideal: ideal.into(),
            t: spec.t(),
        },
        p,
    )
}

#[derive(Serialize)]
struct PieceOut {
    shift: Vec<u32>,
    /// One-based variable indices.
    variables: Vec<usize>,
    text: String,
}

#[derive(Serialize)]
struct DecompositionOut {
    mode: &'static str,
    sdepth: usize,
    pieces: Vec<PieceOut>,
}

fn mode_name(d: &StanleyDecomposition) -> &'static str {
    match d.mode() {
        stanley_critical::Mode::Quotient => "quotient",
        stanley_critical::Mode::Ideal => "ideal",
    }
}

impl From<&StanleyDecomposition> for DecompositionOut {
    fn from(d: &StanleyDecomposition) -> Self {
        DecompositionOut {
            mode: mode_name(d),
            sdepth: d.sdepth(),
            pieces: d
                .pieces()
                .iter()
                .map(|p| PieceOut {
                    shift: p.shift.exponents().to_vec(),
                    variables: p.vars.iter().map(|j| j + 1).collect(),
                    text: p.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct CheckOut {
    ok: bool,
    points_checked: u64,
    counterexample: Option<Vec<u32>>,
}

impl From<&PartitionCheck> for CheckOut {
    fn from(c: &PartitionCheck) -> Self {
        CheckOut {
            ok: c.ok,
            points_checked: c.points_checked,
            counterexample: c.counterexample.as_ref().map(|m| m.exponents().to_vec()),
        }
    }
}

fn render_decomposition(p: &mut String, d: &StanleyDecomposition) {
    let target = match d.mode() {
        stanley_critical::Mode::Quotient => "S/I",
        stanley_critical::Mode::Ideal => "I",
    };
    let _ = writeln!(p, "{target} = direct sum of {} pieces, sdepth {}", d.pieces().len(), d.sdepth());
    for piece in d.pieces() {
        let _ = writeln!(p, "  {piece}");
    }
}

pub fn decompose(
    spec: &CanonicalCriticalSpec,
    ideal: &MonomialIdeal,
    d: &StanleyDecomposition,
    check: Option<&PartitionCheck>,
) -> Rendered {
    #[derive(Serialize)]
    struct Out {
        spec: String,
        ideal: IdealOut,
        decomposition: DecompositionOut,
        #[serde(skip_serializing_if = "Option::is_none")]
        verification: Option<CheckOut>,
    }
    let mut p = format!("spec   {spec}\nideal  {ideal}\n");
    render_decomposition(&mut p, d);
    if let Some(c) = check {
        let _ = writeln!(p, "verified over {} points", c.points_checked);
    }
    finish(
        Out {
            spec: spec.to_string(),
            ideal: ideal.into(),
            decomposition: d.into(),
            verification: check.map(CheckOut::from),
        },
        p,
    )
}

pub fn verify(spec: &CanonicalCriticalSpec, ideal: &MonomialIdeal, rows: &[(StanleyDecomposition, PartitionCheck)]) -> Rendered {
    #[derive(Serialize)]
    struct Row {
        mode: &'static str,
        sdepth: usize,
        pieces: usize,
        #[serde(flatten)]
        check: CheckOut,
    }
    #[derive(Serialize)]
    struct Out {
        spec: String,
        ideal: IdealOut,
        ok: bool,
        checks: Vec<Row>,
    }
    let mut p = format!("spec   {spec}\nideal  {ideal}\n");
    let _ = writeln!(p, "{:<9} {:>7} {:>7} {:>8}  result", "mode", "pieces", "sdepth", "points");
    for (d, c) in rows {
        let verdict = match &c.counterexample {
            None => "ok".to_string(),
            Some(m) => format!("fails at {}", Monomial::to_string(m)),
        };
        let _ = writeln!(
            p,
            "{:<9} {:>7} {:>7} {:>8}  {verdict}",
            mode_name(d),
            d.pieces().len(),
            d.sdepth(),
            c.points_checked
        );
    }
    finish(
        Out {
            spec: spec.to_string(),
            ideal: ideal.into(),
            ok: rows.iter().all(|(_, c)| c.ok),
            checks: rows
                .iter()
                .map(|(d, c)| Row {
                    mode: mode_name(d),
                    sdepth: d.sdepth(),
                    pieces: d.pieces().len(),
                    check: c.into(),
                })
                .collect(),
        },
        p,
    )
}

pub fn sdepth(ideal: &MonomialIdeal, r: &SdepthResult) -> Rendered {
    #[derive(Serialize)]
    struct Interval<'a> {
        bottom: &'a [u32],
        top: &'a [u32],
    }
    #[derive(Serialize)]
    struct Out<'a> {
        input: IdealOut,
        mode: &'static str,
        sdepth: usize,
        p_independent: bool,
        nodes: u64,
        partition: Vec<Interval<'a>>,
    }
    let mode = match r.mode {
        stanley_critical::Mode::Quotient => "quotient",
        stanley_critical::Mode::Ideal => "ideal",
    };
    let mut p = format!("ideal   {ideal}\n");
    let _ = writeln!(p, "mode    {mode}");
    let _ = writeln!(p, "sdepth  {}", r.sdepth);
    let _ = writeln!(p, "witness partition ({} intervals, {} nodes)", r.partition.intervals.len(), r.nodes);
    for (a, b) in &r.partition.intervals {
        let _ = writeln!(p, "  [{}] .. [{}]", join(a), join(b));
    }
    finish(
        Out {
            input: ideal.into(),
            mode,
            sdepth: r.sdepth,
            p_independent: true,
            nodes: r.nodes,
            partition: r
                .partition
                .intervals
                .iter()
                .map(|(a, b)| Interval { bottom: a, top: b })
                .collect(),
        },
        p,
    )
}

pub fn depth(ideal: &MonomialIdeal, table: &BettiTable) -> Rendered {
    #[derive(Serialize)]
    struct Out<'a> {
        input: IdealOut,
        characteristic: u64,
        depth_quotient: usize,
        depth_ideal: usize,
        projective_dimension: usize,
        totals: Vec<usize>,
        betti: &'a [stanley_critical::homological::BettiEntry],
    }
    let pd = table.projective_dimension_quotient();
    let depth = ideal
        .n()
        .checked_sub(pd)
        .ok_or_else(|| Error::Internal(format!("projective dimension {pd} exceeds n = {}", ideal.n())))?;
    let totals = table.totals();
    let mut p = format!("ideal             {ideal}\n");
    let _ = writeln!(p, "characteristic    {}", table.characteristic);
    let _ = writeln!(p, "depth S/I         {depth}");
    let _ = writeln!(p, "depth I           {}", depth + 1);
    let _ = writeln!(p, "pd S/I            {pd}");
    let _ = writeln!(p, "betti_i(I)        {}", join(&totals));
    for e in &table.entries {
        let _ = writeln!(p, "  i={} [{}] rank {}", e.i, join(&e.multidegree), e.rank);
    }
    finish(
        Out {
            input: ideal.into(),
            characteristic: table.characteristic,
            depth_quotient: depth,
            depth_ideal: depth + 1,
            projective_dimension: pd,
            totals,
            betti: &table.entries,
        },
        p,
    )
}

pub fn stanleyize(cert: &StanleyizeCertificate) -> Rendered {
    #[derive(Serialize)]
    struct Out<'a> {
        input: IdealOut,
        characteristic: u64,
        depth: usize,
        hilbert_prefix: &'a [u64],
        difference_prefix: &'a [u64],
        j_lex: IdealOut,
        stanley_ideal: IdealOut,
        checks: &'a stanley_critical::stanleyize::StanleyizeChecks,
    }
    let c = &cert.checks;
    let show = |b: Option<bool>| b.map_or("not verified".to_string(), |b| b.to_string());
    let mut p = format!("ideal           {}\n", cert.input);
    let _ = writeln!(p, "characteristic  {}", cert.characteristic);
    let _ = writeln!(p, "depth b         {}", cert.depth);
    let _ = writeln!(p, "H               {}", join(&cert.hilbert_prefix));
    let _ = writeln!(p, "H'              {}", join(&cert.difference_prefix));
    let _ = writeln!(p, "J lex           {}", cert.j_lex);
    let _ = writeln!(p, "L               {}", cert.stanley_ideal);
    let _ = writeln!(p, "hilbert equal   {}", c.hilbert_equal);
    let _ = writeln!(p, "depth equal     {}", c.depth_equal);
    let _ = writeln!(p, "depth S'/J = 0  {}", c.artinian_reduction);
    let _ = writeln!(p, "sdepth >= b     {}", show(c.sdepth_ge_depth));
    if let Some(note) = &c.sdepth_note {
        let _ = writeln!(p, "  {note}");
    }
    finish(
        Out {
            input: (&cert.input).into(),
            characteristic: cert.characteristic,
            depth: cert.depth,
            hilbert_prefix: &cert.hilbert_prefix,
            difference_prefix: &cert.difference_prefix,
            j_lex: (&cert.j_lex).into(),
            stanley_ideal: (&cert.stanley_ideal).into(),
            checks: c,
        },
        p,
    )
}
