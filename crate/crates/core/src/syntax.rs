//! Character cursor shared by the coefficient, polynomial and presentation
//! parsers.

use num_bigint::BigInt;

use crate::error::Error;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column_offset: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self::at(src, 1, 0)
    }

    /// A cursor over `src`, which starts at `column_offset` characters into
    /// line `line` of some larger document.
    pub(crate) fn at(src: &'a str, line: usize, column_offset: usize) -> Self {
        Cursor {
            src,
            pos: 0,
            line,
            column_offset,
        }
    }

    /// Line and 1-based column of the cursor.
    pub(crate) fn position(&self) -> (usize, usize) {
        (self.line, self.column_offset + self.src[..self.pos].chars().count() + 1)
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.position();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// Next non-whitespace character, without consuming it.
    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), Error> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// Identifier at the cursor, not consumed.
    pub(crate) fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        Some(&rest[..end])
    }

    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        let id = self.peek_ident()?;
        self.pos += id.len();
        Some(id)
    }

    /// Whether the input continues with `*` followed by exactly the
    /// identifier `name`.
    pub(crate) fn lookahead_star_ident(&mut self, name: &str) -> bool {
        let save = self.pos;
        let hit = self.eat('*') && self.peek_ident() == Some(name);
        self.pos = save;
        hit
    }

    pub(crate) fn peek_digit(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    pub(crate) fn nat(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error("expected a natural number"));
        }
        let value = rest[..end].parse::<BigInt>().expect("digits");
        self.pos += end;
        Ok(value)
    }

    pub(crate) fn int(&mut self) -> Result<BigInt, Error> {
        let negative = self.eat('-');
        let n = self.nat()?;
        Ok(if negative { -n } else { n })
    }

    pub(crate) fn small_nat(&mut self) -> Result<usize, Error> {
        let n = self.nat()?;
        usize::try_from(n).map_err(|_| self.error("number too large"))
    }

    pub(crate) fn small_int(&mut self) -> Result<i64, Error> {
        let n = self.int()?;
        i64::try_from(n).map_err(|_| self.error("exponent too large"))
    }
}
