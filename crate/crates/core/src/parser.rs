//! Surface syntax for gross-numbers.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' unary)?
//! atom  := number | grossone | '(' expr ')' | number grossone ('^' unary)?
//! ```
//!
//! `grossone` is `①`, `G`, or `grossone` in any case. Decimal literals are
//! exact (`3.1` is `31/10`). A literal written directly before grossone binds
//! tighter than `^` on the left, so `5①^3.1` is `5·①^(31/10)`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{ArithError, ParseError};
use crate::number::{Exponent, GrossNumber, Rational};

const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Number(Rational),
    Grossone,
    Neg(Box<Ast>),
    BinOp(BinOp, Box<Ast>, Box<Ast>),
}

impl Ast {
    fn bin(op: BinOp, l: Ast, r: Ast) -> Ast {
        Ast::BinOp(op, Box::new(l), Box::new(r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Unicode,
    Ascii,
    /// JSON term record, see [`to_machine`].
    Machine,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Grossone,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::Num(_) => "number",
            Tok::Grossone => "grossone",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::Slash => "'/'",
            Tok::Caret => "'^'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::End => "end of input",
        }
    }
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

/// Tokens paired with their 1-based character positions.
fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{00d7}' | '\u{00b7}' => Some(Tok::Star),
            '/' | '\u{00f7}' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '\u{2460}' => Some(Tok::Grossone),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, pos));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let int_part: String = chars[start..i].iter().collect();
            let mut frac_part = String::new();
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                let fstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if fstart == i {
                    return Err(err(i + 1, "expected digit after '.'"));
                }
                frac_part = chars[fstart..i].iter().collect();
            }
            out.push((Tok::Num(decimal(&int_part, &frac_part)), pos));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word == "G" || word.to_lowercase() == "grossone" {
                out.push((Tok::Grossone, pos));
            } else {
                return Err(err(pos, format!("unknown identifier '{word}'")));
            }
        } else {
            return Err(err(pos, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

fn decimal(int_part: &str, frac_part: &str) -> Rational {
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().expect("ascii digits");
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    Rational::new(numer, denom)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.pos(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Ast::bin(op, lhs, rhs);
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Ast::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        self.enter()?;
        let out = if *self.peek() == Tok::Minus {
            self.bump();
            Ast::Neg(Box::new(self.unary()?))
        } else {
            self.power()?
        };
        self.depth -= 1;
        Ok(out)
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        self.caret_tail(base)
    }

    fn caret_tail(&mut self, base: Ast) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.unary()?;
            return Ok(Ast::bin(BinOp::Pow, base, exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(r) => {
                if *self.peek() == Tok::Grossone {
                    self.bump();
                    let g = self.caret_tail(Ast::Grossone)?;
                    return Ok(Ast::bin(BinOp::Mul, Ast::Number(r), g));
                }
                Ok(Ast::Number(r))
            }
            Tok::Grossone => Ok(Ast::Grossone),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(err(
                        self.pos(),
                        format!("expected ')', found {}", self.peek().describe()),
                    ));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(err(
                pos,
                format!(
                    "expected number, grossone or '(', found {}",
                    other.describe()
                ),
            )),
        }
    }
}

pub fn parse(text: &str) -> Result<Ast, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        depth: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(err(
            p.pos(),
            format!(
                "expected operator or end of input, found {}",
                p.peek().describe()
            ),
        ));
    }
    Ok(ast)
}

pub fn eval_ast(ast: &Ast) -> Result<GrossNumber, ArithError> {
    match ast {
        Ast::Number(r) => Ok(GrossNumber::from_rational(r.clone())),
        Ast::Grossone => Ok(GrossNumber::grossone()),
        Ast::Neg(inner) => Ok(-eval_ast(inner)?),
        Ast::BinOp(BinOp::Pow, base, exp) => {
            let base = eval_ast(base)?;
            if **exp == Ast::Grossone {
                return base.pow(&Exponent::Grossone);
            }
            let exp = eval_ast(exp)?
                .as_rational()
                .ok_or(ArithError::NotRepresentable)?;
            rational_power(&base, &exp)
        }
        Ast::BinOp(op, l, r) => {
            let (l, r) = (eval_ast(l)?, eval_ast(r)?);
            match op {
                BinOp::Add => Ok(&l + &r),
                BinOp::Sub => Ok(&l - &r),
                BinOp::Mul => Ok(&l * &r),
                BinOp::Div => l.div(&r),
                BinOp::Pow => unreachable!(),
            }
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str) -> Result<GrossNumber, crate::Error> {
    let ast = parse(text)?;
    Ok(eval_ast(&ast)?)
}

fn rational_power(base: &GrossNumber, exp: &Rational) -> Result<GrossNumber, ArithError> {
    if exp.is_integer() {
        let n = exp
            .to_integer()
            .to_i64()
            .ok_or(ArithError::NotRepresentable)?;
        return base.pow(&Exponent::Int(n));
    }
    if base.is_zero() {
        return if exp.is_positive() {
            Ok(GrossNumber::zero())
        } else {
            Err(ArithError::ZeroToNegativePower)
        };
    }
    let [t] = base.terms() else {
        return Err(ArithError::NotRepresentable);
    };
    // (c·①^p)^(a/b) needs an exact b-th root of c.
    let b = exp.denom().to_u32().ok_or(ArithError::NotRepresentable)?;
    let root = exact_root(&t.coeff, b).ok_or(ArithError::NotRepresentable)?;
    let a = exp.numer().to_i64().ok_or(ArithError::NotRepresentable)?;
    let coeff = GrossNumber::from_rational(root).pow(&Exponent::Int(a))?;
    let coeff = coeff.as_rational().expect("power of a rational");
    Ok(GrossNumber::term(coeff, &t.expo * exp))
}

fn exact_root(x: &Rational, n: u32) -> Option<Rational> {
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root_int = |v: &BigInt| -> Option<BigInt> {
        let r = v.nth_root(n);
        (num_traits::pow(r.clone(), n as usize) == *v).then_some(r)
    };
    Some(Rational::new(root_int(x.numer())?, root_int(x.denom())?))
}

fn write_rational(out: &mut String, r: &Rational) {
    if r.is_integer() {
        let _ = write!(out, "{}", r.numer());
    } else {
        let _ = write!(out, "{}/{}", r.numer(), r.denom());
    }
}

/// Renders `x`. Unicode and ASCII output parse back to the same value.
pub fn format(x: &GrossNumber, style: Style) -> String {
    let symbol = match style {
        Style::Unicode => "\u{2460}",
        Style::Ascii => "G",
        Style::Machine => return to_machine(x).to_string(),
    };
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in x.terms().iter().enumerate() {
        let negative = t.coeff.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = t.coeff.abs();
        if t.expo.is_zero() {
            write_rational(&mut out, &mag);
            continue;
        }
        if !mag.numer().is_one() {
            let _ = write!(out, "{}", mag.numer());
        }
        out.push_str(symbol);
        if !t.expo.is_one() {
            out.push('^');
            if t.expo.is_integer() {
                let _ = write!(out, "{}", t.expo.numer());
            } else {
                let _ = write!(out, "({}/{})", t.expo.numer(), t.expo.denom());
            }
        }
        if !mag.denom().is_one() {
            let _ = write!(out, "/{}", mag.denom());
        }
    }
    out
}

fn rational_record(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `{"terms":[{"c":"<num>/<den>","p":"<num>/<den>"}, ...]}`
pub fn to_machine(x: &GrossNumber) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|t| json!({"c": rational_record(&t.coeff), "p": rational_record(&t.expo)}))
        .collect();
    json!({ "terms": terms })
}

fn parse_rational_record(s: &str) -> Result<Rational, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in '{s}'"))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in '{s}'"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(Rational::new(n, d))
}

/// Inverse of [`to_machine`]. Accepts non-canonical term lists and
/// normalizes them.
pub fn from_machine(v: &Value) -> Result<GrossNumber, String> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or("missing 'terms' array")?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        let field = |k: &str| -> Result<Rational, String> {
            let s = t
                .get(k)
                .and_then(Value::as_str)
                .ok_or(format!("term missing '{k}'"))?;
            parse_rational_record(s)
        };
        pairs.push((field("c")?, field("p")?));
    }
    Ok(crate::number::normalize(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, ratio};

    fn num(n: i64) -> Ast {
        Ast::Number(rat(n))
    }

    #[test]
    fn implicit_multiplication() {
        let ast = parse("3①-2").unwrap();
        assert_eq!(
            ast,
            Ast::bin(
                BinOp::Sub,
                Ast::bin(BinOp::Mul, num(3), Ast::Grossone),
                num(2)
            )
        );
    }

    #[test]
    fn decimal_exponent() {
        let x = eval_str("①^3.1 + 4*①").unwrap();
        let want = &GrossNumber::term(rat(1), ratio(31, 10)) + &GrossNumber::term(rat(4), rat(1));
        assert_eq!(x, want);
        assert_eq!(parse("3.1").unwrap(), Ast::Number(ratio(31, 10)));
    }

    #[test]
    fn dangling_operator_position() {
        let e = parse("①^").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse("1 + * 2").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse("(G").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse("").is_err());
        assert!(parse("2①①").is_err());
        assert!(parse("x").is_err());
        assert!(parse("3.").is_err());
    }

    #[test]
    fn aliases() {
        let g = GrossNumber::grossone();
        assert_eq!(eval_str("G").unwrap(), g);
        assert_eq!(eval_str("grossone").unwrap(), g);
        assert_eq!(eval_str("GrossOne").unwrap(), g);
        assert_eq!(
            eval_str("2 × G · 3 ÷ 6 − 1").unwrap(),
            &g - &GrossNumber::one()
        );
    }

    #[test]
    fn power_rules() {
        assert_eq!(eval_str("①*①^-1").unwrap(), GrossNumber::one());
        assert_eq!(eval_str("2^3^2").unwrap(), GrossNumber::from_int(512));
        assert_eq!(eval_str("-2^2").unwrap(), GrossNumber::from_int(-4));
        assert_eq!(eval_str("1^G").unwrap(), GrossNumber::one());
        assert_eq!(eval_str("0^(G)").unwrap(), GrossNumber::zero());
        assert_eq!(
            eval_str("①^(1/2)").unwrap(),
            GrossNumber::term(rat(1), ratio(1, 2))
        );
        assert_eq!(
            eval_str("(4①^2)^(1/2)").unwrap(),
            GrossNumber::term(rat(2), rat(1))
        );
        assert!(matches!(
            eval_str("(2①)^(1/2)"),
            Err(crate::Error::Arith(ArithError::NotRepresentable))
        ));
        assert!(matches!(
            eval_str("2^G"),
            Err(crate::Error::Arith(ArithError::NotRepresentable))
        ));
        assert!(matches!(
            eval_str("1/(G+1)"),
            Err(crate::Error::Arith(ArithError::NotRepresentable))
        ));
        assert_eq!(
            eval_str("(①^2-1)/(①-1)").unwrap(),
            &GrossNumber::grossone() + &GrossNumber::one()
        );
    }

    #[test]
    fn formatting() {
        assert_eq!(format(&GrossNumber::one(), Style::Unicode), "1");
        assert_eq!(format(&GrossNumber::zero(), Style::Ascii), "0");
        let x = &GrossNumber::term(rat(5), ratio(31, 10)) + &GrossNumber::one();
        assert_eq!(format(&x, Style::Unicode), "5①^(31/10) + 1");
        assert_eq!(format(&x, Style::Ascii), "5G^(31/10) + 1");
        let y = eval_str("-G^2/7 + G - 1/2 + 3G^-1").unwrap();
        assert_eq!(format(&y, Style::Ascii), "-G^2/7 + G - 1/2 + 3G^-1");
        assert_eq!(
            format(&GrossNumber::grossone(), Style::Machine),
            r#"{"terms":[{"c":"1/1","p":"1/1"}]}"#
        );
    }

    #[test]
    fn machine_round_trip() {
        let x = eval_str("-G^2/7 + G^(1/3) - 1/2").unwrap();
        assert_eq!(from_machine(&to_machine(&x)).unwrap(), x);
        assert!(from_machine(&json!({"terms": [{"c": "1/0", "p": "1"}]})).is_err());
    }

    #[test]
    fn deep_nesting_is_an_error() {
        let s = "(".repeat(10_000);
        assert!(parse(&s).is_err());
        let s = "-".repeat(10_000);
        assert!(parse(&s).is_err());
    }
}
