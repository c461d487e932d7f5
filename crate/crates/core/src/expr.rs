//! Word expressions.
//!
//! Grammar, with whitespace-separated concatenation:
//!
//! ```text
//! expr := term*                       (empty input denotes the empty word)
//! term := atom ('^' signed-int)?
//! atom := generator-name | f<i>:<e> | '(' expr ')'
//! ```
//!
//! `^` binds tighter than concatenation, so `x y^-1 (x y x)^2` is
//! `x * y^-1 * (xyx)^2`. Raw tokens `f<i>:<e>` name element `e` of factor
//! `i` directly, which keeps specs without named generators usable. Parse
//! errors carry the byte offset of the offending token.

use crate::error::Error;
use crate::group::{GroupSpec, Letter, Order};
use crate::word::{concat, power, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Caret,
    Int(i64),
    Ident(String),
    RawLetter(usize, i64),
}

#[derive(Debug)]
struct Spanned {
    tok: Tok,
    offset: usize,
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, Error> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                toks.push(Spanned { tok: Tok::LParen, offset: i });
                i += 1;
            }
            ')' => {
                toks.push(Spanned { tok: Tok::RParen, offset: i });
                i += 1;
            }
            '^' => {
                toks.push(Spanned { tok: Tok::Caret, offset: i });
                i += 1;
            }
            '-' | '+' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: i64 = text[start..i]
                    .parse()
                    .map_err(|_| err(start, "integer out of range or malformed"))?;
                toks.push(Spanned { tok: Tok::Int(n), offset: start });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &text[start..i];
                // f<digits>: introduces a raw factor:element token
                if i < bytes.len()
                    && bytes[i] == b':'
                    && name.len() > 1
                    && name.starts_with('f')
                    && name[1..].bytes().all(|b| b.is_ascii_digit())
                {
                    let factor: usize = name[1..]
                        .parse()
                        .map_err(|_| err(start, "factor index out of range"))?;
                    i += 1; // ':'
                    let estart = i;
                    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if estart == i {
                        return Err(err(estart, "expected element id after ':'"));
                    }
                    let elem: i64 = text[estart..i]
                        .parse()
                        .map_err(|_| err(estart, "element id out of range or malformed"))?;
                    toks.push(Spanned {
                        tok: Tok::RawLetter(factor, elem),
                        offset: start,
                    });
                } else {
                    toks.push(Spanned {
                        tok: Tok::Ident(name.to_string()),
                        offset: start,
                    });
                }
            }
            _ => return Err(err(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    spec: &'a GroupSpec,
    toks: Vec<Spanned>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn parse_expr(&mut self) -> Result<Word, Error> {
        let mut acc = Word::empty();
        while matches!(
            self.peek().map(|s| &s.tok),
            Some(Tok::Ident(_)) | Some(Tok::RawLetter(..)) | Some(Tok::LParen)
        ) {
            let term = self.parse_term()?;
            acc = concat(self.spec, &acc, &term)?;
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Word, Error> {
        let atom = self.parse_atom()?;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            let caret_at = self.toks[self.pos].offset;
            self.pos += 1;
            match self.peek() {
                Some(Spanned { tok: Tok::Int(n), .. }) => {
                    let n = *n;
                    self.pos += 1;
                    return power(self.spec, &atom, n);
                }
                Some(s) => return Err(err(s.offset, "expected integer exponent after `^`")),
                None => return Err(err(caret_at + 1, "expected integer exponent after `^`")),
            }
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<Word, Error> {
        let s = match self.peek() {
            Some(s) => s,
            None => return Err(err(self.end, "expected generator, f<i>:<e>, or `(`")),
        };
        let offset = s.offset;
        match &s.tok {
            Tok::Ident(name) => {
                let letter = self
                    .spec
                    .generator(name)
                    .ok_or_else(|| err(offset, format!("unknown generator `{name}`")))?;
                self.pos += 1;
                Ok(Word::single(letter))
            }
            Tok::RawLetter(factor, elem) => {
                let letter = self
                    .spec
                    .letter(*factor, *elem)
                    .map_err(|e| err(offset, e.to_string()))?;
                self.pos += 1;
                Ok(Word::single(letter))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                match self.peek() {
                    Some(Spanned { tok: Tok::RParen, .. }) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(s) => Err(err(s.offset, "expected `)`")),
                    None => Err(err(offset, "unclosed `(`")),
                }
            }
            _ => Err(err(offset, "expected generator, f<i>:<e>, or `(`")),
        }
    }
}

/// Parse a word expression against a group spec. Empty (or all-whitespace)
/// input denotes the empty word.
pub fn parse_word(spec: &GroupSpec, text: &str) -> Result<Word, Error> {
    let toks = lex(text)?;
    let mut p = Parser {
        spec,
        toks,
        pos: 0,
        end: text.len(),
    };
    let word = p.parse_expr()?;
    match p.peek() {
        None => Ok(word),
        Some(s) => Err(err(s.offset, "expected generator, f<i>:<e>, or `(`")),
    }
}

fn format_letter(spec: &GroupSpec, l: Letter) -> String {
    for (name, gl) in spec.generators() {
        if gl == l {
            return name.to_string();
        }
    }
    // try small powers of a named generator from the same factor
    for (name, gl) in spec.generators() {
        if gl.factor() != l.factor() {
            continue;
        }
        match spec.letter_order(gl) {
            Order::Finite(ord) => {
                for k in 2..ord {
                    if spec.letter_pow(gl, k as i128).ok().flatten() == Some(l) {
                        return format!("{name}^{k}");
                    }
                }
            }
            Order::Infinite => {
                if l.elem() % gl.elem() == 0 {
                    let k = l.elem() / gl.elem();
                    return format!("{name}^{k}");
                }
            }
        }
    }
    format!("f{}:{}", l.factor(), l.elem())
}

/// Render a word so that re-parsing it yields the identical word. The empty
/// word prints as the empty string.
pub fn format_word(spec: &GroupSpec, w: &Word) -> String {
    w.letters()
        .iter()
        .map(|&l| format_letter(spec, l))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::reduce;

    fn z3z2() -> GroupSpec {
        GroupSpec::from_json_str(
            r#"{"factors":[{"kind":"cyclic","order":3},{"kind":"cyclic","order":2}],
                "generators":{"x":[0,1],"y":[1,1]}}"#,
        )
        .unwrap()
    }

    #[test]
    fn parses_powers_and_groups() {
        let g = z3z2();
        let w = parse_word(&g, "(x y)^3").unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(format_word(&g, &w), "x y x y x y");

        let inv = parse_word(&g, "x^-1").unwrap();
        assert_eq!(format_word(&g, &inv), "x^2");

        let mixed = parse_word(&g, "x y^-1 (x y x)^2").unwrap();
        assert_eq!(
            mixed,
            parse_word(&g, "x y x y x^2 y x").unwrap(),
            "x * y * (xyx)^2 with the middle letters merged"
        );
    }

    #[test]
    fn empty_input_is_identity() {
        let g = z3z2();
        assert!(parse_word(&g, "").unwrap().is_empty());
        assert!(parse_word(&g, "   ").unwrap().is_empty());
        assert!(parse_word(&g, "x^0").unwrap().is_empty());
    }

    #[test]
    fn raw_letter_tokens() {
        let g = z3z2();
        assert_eq!(parse_word(&g, "f0:2").unwrap(), parse_word(&g, "x^2").unwrap());
        let zz = GroupSpec::from_json_str(
            r#"{"factors":[{"kind":"cyclic","order":0},{"kind":"cyclic","order":2}]}"#,
        )
        .unwrap();
        let w = parse_word(&zz, "f0:-5 f1:1").unwrap();
        assert_eq!(format_word(&zz, &w), "f0:-5 f1:1");
        assert_eq!(parse_word(&zz, &format_word(&zz, &w)).unwrap(), w);
    }

    #[test]
    fn error_positions() {
        let g = z3z2();
        match parse_word(&g, "x (").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 2),
            other => panic!("unexpected error {other}"),
        }
        match parse_word(&g, "x q").unwrap_err() {
            Error::Parse { offset, message } => {
                assert_eq!(offset, 2);
                assert!(message.contains("unknown generator"));
            }
            other => panic!("unexpected error {other}"),
        }
        match parse_word(&g, "x ^ y").unwrap_err() {
            Error::Parse { offset, message } => {
                assert_eq!(offset, 4);
                assert!(message.contains("exponent"));
            }
            other => panic!("unexpected error {other}"),
        }
        assert!(parse_word(&g, "f0:0").is_err());
    }

    #[test]
    fn round_trips_named_and_unnamed_letters() {
        let g = z3z2();
        for text in ["", "x", "x^2", "y", "x y x^2", "y x y x y x^2"] {
            let w = parse_word(&g, text).unwrap();
            assert_eq!(parse_word(&g, &format_word(&g, &w)).unwrap(), w);
        }

        // spec without generator names falls back to raw tokens
        let anon = GroupSpec::from_json_str(
            r#"{"factors":[{"kind":"cyclic","order":3},{"kind":"cyclic","order":2}]}"#,
        )
        .unwrap();
        let w = reduce(
            &anon,
            [anon.letter(0, 2).unwrap(), anon.letter(1, 1).unwrap()],
        )
        .unwrap();
        assert_eq!(format_word(&anon, &w), "f0:2 f1:1");
        assert_eq!(parse_word(&anon, "f0:2 f1:1").unwrap(), w);
    }
}
