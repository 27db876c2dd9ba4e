//! Recursive-descent parser for the term grammar.
//!
//! ```text
//! term := part ("+" part)*
//! part := NAT | "w" | "w*" | "w" "[" term "]" | "w*" "[" term "]" | "(" term ")"
//! ```
//! ASCII whitespace between tokens is ignored.

use thiserror::Error;

use super::OrderTerm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at position {position}: {message}")]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError { position: self.pos, message: message.into() }
    }

    fn expect(&mut self, c: u8) -> Result<(), SyntaxError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn term(&mut self) -> Result<OrderTerm, SyntaxError> {
        let mut parts = vec![self.part()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            parts.push(self.part()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { OrderTerm::Sum(parts) })
    }

    fn part(&mut self) -> Result<OrderTerm, SyntaxError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                digits.parse().map(OrderTerm::Fin).map_err(|_| SyntaxError {
                    position: start,
                    message: "number out of range".into(),
                })
            }
            Some(b'w') => {
                self.pos += 1;
                let star = self.src.get(self.pos) == Some(&b'*');
                if star {
                    self.pos += 1;
                }
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    let body = self.term()?;
                    self.expect(b']')?;
                    Ok(if star { OrderTerm::omega_star_rep(body) } else { OrderTerm::omega_rep(body) })
                } else {
                    Ok(if star { OrderTerm::OmegaStar } else { OrderTerm::Omega })
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(b')')?;
                Ok(t)
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses and normalizes a term.
pub fn parse_term(text: &str) -> Result<OrderTerm, SyntaxError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(t.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_term("w*+w").unwrap(), OrderTerm::zeta());
        assert_eq!(parse_term("w[w*]").unwrap(), OrderTerm::omega_rep(OrderTerm::OmegaStar));
        assert_eq!(parse_term("2+0+3").unwrap(), OrderTerm::Fin(5));
        assert_eq!(parse_term(" ( w ) + 1 ").unwrap(), parse_term("w+1").unwrap());
        assert_eq!(
            parse_term("w*[w+1]").unwrap(),
            OrderTerm::omega_star_rep(OrderTerm::Sum(vec![OrderTerm::Omega, OrderTerm::Fin(1)]))
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_term("w+").unwrap_err().position, 2);
        assert_eq!(parse_term("w[w").unwrap_err().position, 3);
        assert_eq!(parse_term("eta").unwrap_err().position, 0);
        assert_eq!(parse_term("w w").unwrap_err().message, "trailing input");
        assert!(parse_term("99999999999999999999999").is_err());
        assert!(parse_term("").is_err());
    }
}
