//! Text grammar for partitions, types and multi-types.
//!
//! ```text
//! partition  := "[" int ("," int)* "]"
//! entry      := "(" int "," partition ")" | partition      (degree 1)
//! type       := entry+
//! multitype  := type (";" type)*
//! ```
//! Whitespace is ignored between tokens.

use std::fmt;

use super::partition::{Partition, MAX_PARTITION_SIZE};
use super::types::{MultiType, TypeT};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    /// The input with a caret under the offending character.
    pub fn render(&self) -> String {
        let col = self.input[..self.pos.min(self.input.len())].chars().count();
        format!("parse error: {}\n  {}\n  {}^", self.msg, self.input, " ".repeat(col))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.msg, self.pos)
    }
}

impl std::error::Error for ParseError {}

pub(crate) struct Cursor<'a> {
    s: &'a str,
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        Cursor { s, pos: 0 }
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            input: self.s.to_string(),
            pos: self.pos,
            msg: msg.into(),
        })
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => self.err(format!("expected '{c}', found '{x}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    pub(crate) fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a non-negative integer");
        }
        self.s[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

pub(crate) fn partition(c: &mut Cursor) -> Result<Partition, ParseError> {
    c.expect('[')?;
    let mut parts = Vec::new();
    if c.peek() == Some(']') {
        c.expect(']')?;
        return Ok(Partition::empty());
    }
    loop {
        let at = c.pos;
        let x = c.int()?;
        if x == 0 || x > MAX_PARTITION_SIZE as u64 {
            c.pos = at;
            c.skip_ws();
            return c.err(format!("part must lie in 1..={MAX_PARTITION_SIZE}"));
        }
        parts.push(x as u32);
        match c.peek() {
            Some(',') => c.expect(',')?,
            Some(']') => {
                c.expect(']')?;
                break;
            }
            _ => return c.err("expected ',' or ']'"),
        }
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return c.err("parts must be weakly decreasing");
    }
    let p = Partition::new(parts);
    if p.size() > MAX_PARTITION_SIZE {
        return c.err(format!("partition size exceeds {MAX_PARTITION_SIZE}"));
    }
    Ok(p)
}

pub(crate) fn entry(c: &mut Cursor) -> Result<(u32, Partition), ParseError> {
    match c.peek() {
        Some('[') => {
            let at = c.pos;
            let p = partition(c)?;
            if p.is_empty() {
                c.pos = at;
                return c.err("type entries need a nonempty partition");
            }
            Ok((1, p))
        }
        Some('(') => {
            c.expect('(')?;
            let at = c.pos;
            let d = c.int()?;
            if d == 0 || d > MAX_PARTITION_SIZE as u64 {
                c.pos = at;
                c.skip_ws();
                return c.err("degree must be positive");
            }
            c.expect(',')?;
            let at = c.pos;
            let p = partition(c)?;
            if p.is_empty() {
                c.pos = at;
                c.skip_ws();
                return c.err("type entries need a nonempty partition");
            }
            c.expect(')')?;
            Ok((d as u32, p))
        }
        Some(x) => c.err(format!("expected '(' or '[', found '{x}'")),
        None => c.err("expected a type entry, found end of input"),
    }
}

fn type_t(c: &mut Cursor) -> Result<TypeT, ParseError> {
    let mut entries = vec![entry(c)?];
    while matches!(c.peek(), Some('(') | Some('[')) {
        entries.push(entry(c)?);
    }
    Ok(TypeT::new(entries))
}

pub fn parse_partition(s: &str) -> Result<Partition, ParseError> {
    let mut c = Cursor::new(s);
    let p = partition(&mut c)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(p)
}

pub fn parse_type(s: &str) -> Result<TypeT, ParseError> {
    let mut c = Cursor::new(s);
    let t = type_t(&mut c)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(t)
}

pub fn parse_multitype(s: &str) -> Result<MultiType, ParseError> {
    let mut c = Cursor::new(s);
    let mut types = Vec::new();
    let mut starts = Vec::new();
    loop {
        c.skip_ws();
        starts.push(c.pos);
        types.push(type_t(&mut c)?);
        match c.peek() {
            Some(';') => c.expect(';')?,
            None => break,
            Some(x) => return c.err(format!("expected ';' or end of input, found '{x}'")),
        }
    }
    let n = types[0].size();
    if let Some(i) = types.iter().position(|t| t.size() != n) {
        c.pos = starts[i];
        return c.err(format!(
            "component has size {} but the first component has size {n}",
            types[i].size()
        ));
    }
    Ok(MultiType::new(types).expect("sizes checked"))
}

/// Multipartition shorthand: each `;`-separated partition `μ` stands for the
/// semisimple type with eigenvalue multiplicities `μ₁, μ₂, …`.
pub fn parse_multipartition(s: &str) -> Result<MultiType, ParseError> {
    let mut c = Cursor::new(s);
    let mut types = Vec::new();
    let mut starts = Vec::new();
    loop {
        c.skip_ws();
        starts.push(c.pos);
        let at = c.pos;
        let p = partition(&mut c)?;
        if p.is_empty() {
            c.pos = at;
            return c.err("empty partition");
        }
        types.push(TypeT::semisimple(&p));
        match c.peek() {
            Some(';') => c.expect(';')?,
            None => break,
            Some(x) => return c.err(format!("expected ';' or end of input, found '{x}'")),
        }
    }
    let n = types[0].size();
    if let Some(i) = types.iter().position(|t| t.size() != n) {
        c.pos = starts[i];
        return c.err("components must have equal size");
    }
    Ok(MultiType::new(types).expect("sizes checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_partition("[2,1]").unwrap(), Partition::from([2, 1]));
        let t = parse_type("(1,[2])(2,[1,1])").unwrap();
        assert_eq!(t.size(), 6);
        assert_eq!(parse_type("[2,1]").unwrap(), TypeT::single(Partition::from([2, 1])));
        let m = parse_multitype("[1][1]; [1][1];[1][1];[1][1]").unwrap();
        assert_eq!(m.k(), 4);
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn multipartition_shorthand() {
        let a = parse_multipartition("[1,1];[1,1]").unwrap();
        let b = parse_multitype("[1][1];[1][1]").unwrap();
        assert_eq!(a, b);
        let c = parse_multipartition("[2]").unwrap();
        assert_eq!(c, parse_multitype("[1,1]").unwrap());
    }

    #[test]
    fn caret_positions() {
        let e = parse_multitype("[2,1];[1,x]").unwrap_err();
        assert_eq!(e.pos, 9);
        assert!(e.render().ends_with("         ^"), "{}", e.render());
        let e = parse_multitype("[2];[1]").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(parse_type("[1,2]").is_err());
        assert!(parse_type("(0,[1])").is_err());
        assert!(parse_type("[]").is_err());
        assert!(parse_type("[1]]").is_err());
    }
}
