//! Expressions for `lunar eval`.
//!
//! ```text
//! expr   = term ('+' term)*
//! term   = factor ('*' factor)*
//! factor = atom ('^' exponent)?
//! atom   = literal | '(' expr ')'
//! ```
//!
//! Literals are digit strings in the chosen base; exponents are decimal.

use lunar_core::{LunarError, LunarNat};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ExprError {
    #[error("parse error at offset {at}: {msg}")]
    Syntax { at: usize, msg: String },
    #[error(transparent)]
    Lunar(#[from] LunarError),
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
    base: u32,
}

pub fn eval(src: &str, base: u32) -> Result<LunarNat, ExprError> {
    LunarNat::zero(base)?;
    let mut p = Parser { src, pos: 0, base };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ExprError {
        ExprError::Syntax {
            at: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
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

    fn expr(&mut self) -> Result<LunarNat, ExprError> {
        let mut value = self.term()?;
        while self.eat('+') {
            value = value.try_add(&self.term()?)?;
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<LunarNat, ExprError> {
        let mut value = self.factor()?;
        while self.eat('*') {
            value = value.try_mul(&self.factor()?)?;
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<LunarNat, ExprError> {
        let value = self.atom()?;
        if !self.eat('^') {
            return Ok(value);
        }
        self.skip_ws();
        let text = self.take_while(|c| c.is_ascii_digit());
        if text.is_empty() {
            return Err(self.error("expected a decimal exponent"));
        }
        let n: u32 = text.parse().map_err(|_| self.error("exponent too large"))?;
        Ok(value.pow(n))
    }

    fn atom(&mut self) -> Result<LunarNat, ExprError> {
        if self.eat('(') {
            let value = self.expr()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            return Ok(value);
        }
        self.skip_ws();
        let base = self.base;
        let text = self.take_while(|c| c.is_ascii_alphanumeric());
        if text.is_empty() {
            return Err(self.error("expected a number or '('"));
        }
        Ok(LunarNat::parse(text, base)?)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> String {
        eval(s, 10).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(ev("15+83"), "85");
        assert_eq!(ev("1134448^3"), "1111113334444444448");
        assert_eq!(ev("0+0"), "0");
        assert_eq!(ev("17 * 3"), "13");
        assert_eq!(ev("57^2"), "557");
        assert_eq!(ev("7^0"), "9");
    }

    #[test]
    fn precedence_and_parentheses() {
        // 2 + (3*4) = 2 + 3 = 3, while (2+3)*4 = 3*4 = 3.
        assert_eq!(ev("2+3*4"), "3");
        assert_eq!(ev("(2+3)*4"), "3");
        assert_eq!(ev("(12+3)^2"), ev("13*13"));
        assert_eq!(ev("2*3^2"), ev("2*(3*3)"));
    }

    #[test]
    fn other_bases() {
        assert_eq!(eval("11011^2", 2).unwrap(), eval("11111^2", 2).unwrap());
        assert_eq!(eval("zz+10", 36).unwrap().to_string(), "zz");
    }

    #[test]
    fn errors() {
        assert!(matches!(eval("1+", 10), Err(ExprError::Syntax { .. })));
        assert!(matches!(eval("(1+2", 10), Err(ExprError::Syntax { .. })));
        assert!(matches!(eval("1 2", 10), Err(ExprError::Syntax { .. })));
        assert!(matches!(eval("2^x", 10), Err(ExprError::Syntax { .. })));
        assert_eq!(
            eval("12", 2),
            Err(ExprError::Lunar(LunarError::InvalidDigit {
                ch: '2',
                base: 2
            }))
        );
        assert!(matches!(eval("1", 1), Err(ExprError::Lunar(_))));
    }
}
