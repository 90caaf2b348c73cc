//! Text and structured input formats.
//!
//! ```text
//! monomial := "1" | factor ('*' factor)*
//! factor   := 'x' INT ('^' INT)?
//! ideal    := "n=" INT ";" monomial ("," monomial)*
//! spec     := "n=" INT (";" "m" INT "=" monomial)+
//! ```
//!
//! Whitespace is allowed between tokens. Repeated factors multiply, so
//! `x1*x1` reads as `x1^2`.

use crate::critical::CanonicalCriticalSpec;
use crate::error::{Error, Result};
use crate::monomial::{minimal_generators, IdealRecord, Monomial, MonomialIdeal};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    /// Byte offset of `src` inside the full input, for error positions.
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Cursor { src, pos: 0, base }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.at(),
            msg: msg.into(),
        }
    }

    fn done(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    /// A non-negative decimal integer. A leading '-' is reported separately so
    /// callers can turn it into a more specific error.
    fn uint(&mut self) -> Result<Option<u64>> {
        self.skip_ws();
        if self.peek() == Some('-') {
            return Ok(None);
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.src[start..self.pos]
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Syntax {
                pos: self.base + start,
                msg: "integer too large".into(),
            })
    }
}

fn parse_monomial_at(text: &str, n: usize, base: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(text, base);
    cur.skip_ws();
    if cur.peek() == Some('1') {
        cur.pos += 1;
        if cur.done() {
            return Ok(Monomial::one(n));
        }
        return Err(cur.error("unexpected input after '1'"));
    }
    let mut exps = vec![0u32; n];
    loop {
        cur.expect('x')?;
        let index_pos = cur.at();
        let index = match cur.uint()? {
            Some(i) => i,
            None => return Err(cur.error("variable index must be positive")),
        };
        if index == 0 || index > n as u64 {
            return Err(Error::VariableOutOfRange {
                index: usize::try_from(index).unwrap_or(usize::MAX),
                n,
            });
        }
        let mut e = 1u64;
        if cur.eat('^') {
            let exp_pos = cur.at();
            e = match cur.uint()? {
                Some(e) => e,
                None => return Err(Error::NegativeExponent { pos: exp_pos }),
            };
        }
        let slot = &mut exps[index as usize - 1];
        *slot = u32::try_from(*slot as u64 + e).map_err(|_| Error::Syntax {
            pos: index_pos,
            msg: "exponent too large".into(),
        })?;
        if cur.done() {
            break;
        }
        cur.expect('*')?;
    }
    Ok(Monomial::new(exps))
}

/// Parses a monomial in `n` variables, e.g. `x1^2*x2`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    parse_monomial_at(text, n, 0)
}

/// Inverse of [`parse_monomial`] up to factor order.
pub fn format_monomial(m: &Monomial) -> String {
    m.to_string()
}

/// Splits off the leading `n=<int>` header and returns `(n, rest_offset)`.
fn parse_header(text: &str) -> Result<(usize, usize)> {
    let mut cur = Cursor::new(text, 0);
    cur.expect('n')?;
    cur.expect('=')?;
    let n = match cur.uint()? {
        Some(n) => n,
        None => return Err(cur.error("variable count must be positive")),
    };
    if n == 0 {
        return Err(cur.error("variable count must be positive"));
    }
    let n = usize::try_from(n).map_err(|_| cur.error("variable count too large"))?;
    // Guards allocation of exponent vectors for absurd counts.
    if n > 1 << 16 {
        return Err(cur.error("variable count too large"));
    }
    cur.expect(';')?;
    Ok((n, cur.pos))
}

/// Parses the text form `n=<int>; <mon>, <mon>, ...`.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let (n, mut offset) = parse_header(text)?;
    let mut raw = Vec::new();
    for piece in text[offset..].split(',') {
        raw.push(parse_monomial_at(piece, n, offset)?);
        offset += piece.len() + 1;
    }
    minimal_generators(n, raw)
}

/// Parses the structured JSON form `{"variables": n, "generators": [[...]]}`.
pub fn parse_ideal_json(text: &str) -> Result<MonomialIdeal> {
    let rec: IdealRecord = serde_json::from_str(text).map_err(|e| Error::Syntax {
        pos: 0,
        msg: e.to_string(),
    })?;
    if rec.variables == 0 {
        return Err(Error::InvalidArgument("variable count must be positive".into()));
    }
    MonomialIdeal::try_from(rec)
}

/// Parses either form, choosing JSON when the text starts with `{`.
pub fn parse_ideal_any(text: &str) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        parse_ideal_json(text)
    } else {
        parse_ideal(text)
    }
}

/// Parses a canonical critical spec `n=<int>; m1=<mon>; m2=<mon>; ...`.
pub fn parse_spec(text: &str) -> Result<CanonicalCriticalSpec> {
    let (n, mut offset) = parse_header(text)?;
    let mut ms = Vec::new();
    for piece in text[offset..].split(';') {
        let mut cur = Cursor::new(piece, offset);
        cur.expect('m')?;
        let expected = ms.len() as u64 + 1;
        match cur.uint()? {
            Some(i) if i == expected => {}
            _ => return Err(cur.error(format!("expected m{expected}"))),
        }
        cur.expect('=')?;
        let rest = cur.pos;
        ms.push(parse_monomial_at(&piece[rest..], n, offset + rest)?);
        offset += piece.len() + 1;
    }
    CanonicalCriticalSpec::new(n, ms)
}
