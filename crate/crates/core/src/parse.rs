//! Text grammar for words, compositions and polys.
//!
//! ```text
//! letters     := [xy]+ | "1"
//! z-word      := z<int> (ws* z<int>)*
//! composition := "(" int ("," int)* ")" | "()"
//! poly        := term (("+" | "-") term)*   ;  term := [rational] [letters]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Poly};
use crate::word::{Composition, Letter, Word};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// A raw letter string; `1` and the empty string denote the unit.
pub fn parse_letters(s: &str) -> Result<Word> {
    let t = s.trim();
    if t.is_empty() || t == "1" {
        return Ok(Word::empty());
    }
    let offset = s.len() - s.trim_start().len();
    t.chars()
        .enumerate()
        .map(|(i, ch)| match ch {
            'x' => Ok(Letter::X),
            'y' => Ok(Letter::Y),
            other => Err(err(offset + i, format!("unexpected `{other}` in word"))),
        })
        .collect::<Result<Vec<_>>>()
        .map(Word::from_letters)
}

/// `(3,2)`; whitespace around parts is allowed.
pub fn parse_composition(s: &str) -> Result<Composition> {
    let t = s.trim();
    let offset = s.len() - s.trim_start().len();
    let inner = t
        .strip_prefix('(')
        .ok_or_else(|| err(offset, "composition must start with `(`"))?
        .strip_suffix(')')
        .ok_or_else(|| err(offset + t.len(), "composition must end with `)`"))?;
    if inner.trim().is_empty() {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::new();
    let mut pos = offset + 1;
    for piece in inner.split(',') {
        let k: u32 = piece
            .trim()
            .parse()
            .map_err(|_| err(pos, format!("`{}` is not a positive integer", piece.trim())))?;
        if k == 0 {
            return Err(err(pos, "composition parts must be positive"));
        }
        parts.push(k);
        pos += piece.len() + 1;
    }
    Composition::new(parts)
}

fn parse_z_word(s: &str) -> Result<Word> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut word = Word::empty();
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if bytes[i] != b'z' {
            return Err(err(
                i,
                format!("expected `z`, found `{}`", bytes[i] as char),
            ));
        }
        let start = i + 1;
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(err(start, "expected an index after `z`"));
        }
        let k: usize = s[start..end]
            .parse()
            .map_err(|_| err(start, "index too large"))?;
        if k == 0 {
            return Err(err(start, "z-index must be positive"));
        }
        word = word.concat(&Word::z(k)?);
        i = end;
    }
    Ok(word)
}

/// Any of the three word notations: letters, z-notation or a composition.
pub fn parse_word(s: &str) -> Result<Word> {
    let t = s.trim();
    if t.starts_with('(') {
        parse_composition(s).map(|c| c.to_word())
    } else if t.starts_with('z') {
        let offset = s.len() - s.trim_start().len();
        parse_z_word(t).map_err(|e| match e {
            Error::Parse { pos, msg } => err(pos + offset, msg),
            other => other,
        })
    } else {
        parse_letters(s)
    }
}

/// Composition given directly or as the z-decomposition of an `H1` word.
pub fn parse_composition_or_word(s: &str) -> Result<Composition> {
    if s.trim().starts_with('(') {
        parse_composition(s)
    } else {
        parse_word(s)?.to_composition()
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.i;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.i += 1;
        }
        (self.i > start).then(|| {
            std::str::from_utf8(&self.s[start..self.i])
                .unwrap()
                .parse()
                .unwrap()
        })
    }
}

/// Parses the text form produced by `Poly`'s `Display`.
pub fn parse_poly(s: &str) -> Result<Poly> {
    let mut cur = Cursor {
        s: s.as_bytes(),
        i: 0,
    };
    let mut poly = Poly::zero();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(err(cur.i, "empty poly"));
            }
            break;
        }
        let mut sign = Coeff::one();
        match cur.peek() {
            Some(b'+') if !first => cur.i += 1,
            Some(b'-') => {
                sign = -sign;
                cur.i += 1;
            }
            _ if !first => return Err(err(cur.i, "expected `+` or `-` between terms")),
            _ => {}
        }
        cur.skip_ws();
        let term_start = cur.i;
        let coeff = match cur.digits() {
            Some(num) => {
                if cur.peek() == Some(b'/') {
                    cur.i += 1;
                    let den = cur
                        .digits()
                        .ok_or_else(|| err(cur.i, "expected a denominator"))?;
                    if den.is_zero() {
                        return Err(err(cur.i, "zero denominator"));
                    }
                    Some(Coeff::new(num, den))
                } else {
                    Some(Coeff::from_integer(num))
                }
            }
            None => None,
        };
        cur.skip_ws();
        let word_start = cur.i;
        while matches!(cur.peek(), Some(b'x' | b'y')) {
            cur.i += 1;
        }
        let word = if cur.i > word_start {
            parse_letters(std::str::from_utf8(&cur.s[word_start..cur.i]).unwrap())?
        } else if coeff.is_some() {
            Word::empty()
        } else {
            return Err(err(term_start, "expected a coefficient or a word"));
        };
        poly.add_term(word, sign * coeff.unwrap_or_else(Coeff::one));
        first = false;
        cur.skip_ws();
        if let Some(b) = cur.peek() {
            if b != b'+' && b != b'-' {
                return Err(err(cur.i, format!("unexpected `{}`", b as char)));
            }
        }
    }
    Ok(poly)
}
