//! Curve file format. Five keys, any order, `#` starts a comment:
//!
//! ```text
//! c = -1
//! m = 1
//! r = [0, -25]          # x² + 0x − 25
//! s = [16, 48]
//! t = [[4, 0], [-12, 0]]
//! ```
//!
//! Each of r, s, t is a pair [b, c] standing for x² + bx + c. When m ≠ 1
//! the entries of s and t are pairs [a, b] meaning a + b√m; plain rational
//! entries are accepted there too and mean a + 0√m. Entries of r must be
//! plain rationals. Rationals are written p or p/q, never as decimals.
//! Whitespace (including line breaks inside brackets) is insignificant.

use super::curve::{C2D4Curve, MonicQuad};
use crate::arith::quad::Quad;
use crate::arith::{Int, Rat};
use crate::{Error, Result};
use num::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
enum Value {
    Rat(Rat),
    List(Vec<Value>),
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_rat(tok: &str) -> Result<Rat> {
    let clean: String = tok.chars().filter(|ch| !ch.is_whitespace()).collect();
    let (num, den) = match clean.split_once('/') {
        Some((n, d)) => (n, d),
        None => (clean.as_str(), "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| err(format!("bad integer {num:?}")))?;
    let d: Int = den
        .parse()
        .map_err(|_| err(format!("bad integer {den:?}")))?;
    if d.is_zero() {
        return Err(err(format!("zero denominator in {clean:?}")));
    }
    Ok(Rat::new(n, d))
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(ch) if ch.is_whitespace()) {
            self.chars.next();
        }
    }

    fn value(&mut self) -> Result<Value> {
        self.skip_ws();
        match self.chars.peek() {
            Some('[') => {
                self.chars.next();
                let mut items = Vec::new();
                loop {
                    items.push(self.value()?);
                    self.skip_ws();
                    match self.chars.next() {
                        Some(',') => continue,
                        Some(']') => break,
                        _ => return Err(err("expected , or ] in list")),
                    }
                }
                Ok(Value::List(items))
            }
            Some(ch) if ch.is_ascii_digit() || *ch == '-' || *ch == '+' => {
                // a rational runs until a delimiter or the next key letter
                let mut tok = String::new();
                while matches!(
                    self.chars.peek(),
                    Some(ch) if !"[],=".contains(*ch) && !ch.is_ascii_alphabetic()
                ) {
                    tok.push(self.chars.next().unwrap());
                }
                parse_rat(&tok).map(Value::Rat)
            }
            Some(ch) => Err(err(format!("unexpected character {ch:?}"))),
            None => Err(err("unexpected end of input")),
        }
    }
}

fn raw_values(text: &str) -> Result<BTreeMap<char, Value>> {
    let stripped: String = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let mut sc = Scanner {
        chars: stripped.chars().peekable(),
    };
    let mut out = BTreeMap::new();
    loop {
        sc.skip_ws();
        let key = match sc.chars.next() {
            None => break,
            Some(k @ ('c' | 'm' | 'r' | 's' | 't')) => k,
            Some(k) => return Err(err(format!("unknown key {k:?}"))),
        };
        sc.skip_ws();
        if sc.chars.next() != Some('=') {
            return Err(err(format!("expected = after key {key:?}")));
        }
        let val = sc.value()?;
        if out.insert(key, val).is_some() {
            return Err(err(format!("duplicate key {key:?}")));
        }
    }
    for key in ['c', 'm', 'r', 's', 't'] {
        if !out.contains_key(&key) {
            return Err(err(format!("missing key {key:?}")));
        }
    }
    Ok(out)
}

fn quad_entry(v: &Value, m: &Int, rational_only: bool) -> Result<Quad> {
    match v {
        Value::Rat(x) => Ok(Quad::from_rat(x.clone(), m.clone())),
        Value::List(items) => {
            if rational_only {
                return Err(err("entries of r must be plain rationals"));
            }
            match items.as_slice() {
                [Value::Rat(a), Value::Rat(b)] => Ok(Quad::new(a.clone(), b.clone(), m.clone())),
                _ => Err(err("a √m entry must be a pair [a, b] of rationals")),
            }
        }
    }
}

fn quad_poly(v: &Value, m: &Int, rational_only: bool) -> Result<MonicQuad> {
    match v {
        Value::List(items) if items.len() == 2 => Ok(MonicQuad::new(
            quad_entry(&items[0], m, rational_only)?,
            quad_entry(&items[1], m, rational_only)?,
        )),
        _ => Err(err("each polynomial must be a pair [b, c]")),
    }
}

pub fn parse_curve(text: &str) -> Result<C2D4Curve> {
    let vals = raw_values(text)?;
    let c = match &vals[&'c'] {
        Value::Rat(x) => x.clone(),
        _ => return Err(err("c must be a rational")),
    };
    let m = match &vals[&'m'] {
        Value::Rat(x) if x.is_integer() => x.to_integer(),
        _ => return Err(err("m must be an integer")),
    };
    let r = quad_poly(&vals[&'r'], &m, true)?;
    let s = quad_poly(&vals[&'s'], &m, false)?;
    let t = quad_poly(&vals[&'t'], &m, false)?;
    C2D4Curve::new(c, m, r, s, t)
}

fn show_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn show_entry(q: &Quad, rational_field: bool) -> String {
    if rational_field {
        show_rat(&q.a)
    } else {
        format!("[{}, {}]", show_rat(&q.a), show_rat(&q.b))
    }
}

fn show_poly(p: &MonicQuad, rational_field: bool) -> String {
    format!(
        "[{}, {}]",
        show_entry(&p.b, rational_field),
        show_entry(&p.c, rational_field)
    )
}

/// Canonical text form; `parse_curve` round-trips it.
pub fn render_curve(cur: &C2D4Curve) -> String {
    let plain = cur.m.is_one();
    format!(
        "c = {}\nm = {}\nr = [{}, {}]\ns = {}\nt = {}\n",
        show_rat(&cur.c),
        cur.m,
        show_rat(&cur.r.b.a),
        show_rat(&cur.r.c.a),
        show_poly(&cur.s, plain),
        show_poly(&cur.t, plain),
    )
}
