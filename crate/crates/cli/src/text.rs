//! Text grammar for Seifert forms: `SFS[S2; b; r1, r2, ...]` or `SFS[RP2]`.

use lspace_core::{normalize, ExtRational, Rational, SeifertForm};
use num_bigint::BigInt;

use crate::CliError;

/// A parsed but not yet normalized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawForm {
    S2 { b: BigInt, slopes: Vec<ExtRational> },
    RP2,
}

impl RawForm {
    pub fn normalized(&self) -> SeifertForm {
        match self {
            RawForm::S2 { b, slopes } => normalize(b.clone(), slopes),
            RawForm::RP2 => SeifertForm::rp2(),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn error(&self, at: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse { input: self.src.to_owned(), column: at + 1, message: msg.into() }
    }

    fn expect(&mut self, tok: &str) -> Result<(), CliError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(self.error(self.pos, format!("expected `{tok}`")))
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    /// The next run of characters that can form a number or `inf`.
    fn token(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '-' || c == '/')).unwrap_or(rest.len());
        self.pos += len;
        (start, &rest[..len])
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }
}

pub fn parse_form(src: &str) -> Result<RawForm, CliError> {
    let mut c = Cursor { src, pos: 0 };
    c.expect("SFS")?;
    c.expect("[")?;
    let form = if c.eat("RP2") {
        RawForm::RP2
    } else {
        c.expect("S2")?;
        c.expect(";")?;
        let (at, tok) = c.token();
        let b = parse_integer(tok).ok_or_else(|| c.error(at, format!("expected an integer, found `{tok}`")))?;
        let mut slopes = Vec::new();
        if c.eat(";") {
            loop {
                let (at, tok) = c.token();
                let s = tok.parse::<ExtRational>().map_err(|e| c.error(at, format!("bad slope `{tok}`: {e}")))?;
                slopes.push(s);
                if !c.eat(",") {
                    break;
                }
            }
        }
        RawForm::S2 { b, slopes }
    };
    c.expect("]")?;
    if !c.at_end() {
        return Err(c.error(c.pos, "unexpected trailing input"));
    }
    Ok(form)
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(|e| CliError::Usage(format!("bad rational `{s}`: {e}")))
}

/// `a..b`, inclusive on both ends.
pub fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("bad window `{s}`, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// `key=value` pairs separated by commas.
pub fn parse_params(s: &str) -> Result<Vec<(String, i64)>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let bad = || CliError::Usage(format!("bad parameter `{p}`, expected key=integer"));
            let (k, v) = p.split_once('=').ok_or_else(bad)?;
            let v: i64 = v.trim().parse().map_err(|_| bad())?;
            Ok((k.trim().to_owned(), v))
        })
        .collect()
}
