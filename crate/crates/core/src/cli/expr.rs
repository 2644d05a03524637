//! Element expressions: `ua(x;y)`, `u2a(v)`, `uma(x;y)`, `at(l)`, `s`, `sj`,
//! `mat(a; …; i)`, products with `*` or juxtaposition, inverses with `^-1`.
//! Scalars are built from integers, `rt` (√t), `t`, `+ - * /` and `^k`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_arith::{Field, LElem, Mat3};
use crate::group_core::{elt_s, elt_sj, mk_atilde, mk_u2a, mk_ua, mk_uma, GroupElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LExpr {
    Num(BigInt),
    Rt,
    T,
    Neg(Box<LExpr>),
    Add(Box<LExpr>, Box<LExpr>),
    Sub(Box<LExpr>, Box<LExpr>),
    Mul(Box<LExpr>, Box<LExpr>),
    Div(Box<LExpr>, Box<LExpr>),
    Pow(Box<LExpr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemExpr {
    Ua(LExpr, LExpr),
    U2a(LExpr),
    Uma(LExpr, LExpr),
    At(LExpr),
    S,
    Sj,
    Mat(Box<[LExpr; 9]>),
    /// At least two factors.
    Prod(Vec<ElemExpr>),
    Inv(Box<ElemExpr>),
}

impl LExpr {
    fn prec(&self) -> u8 {
        match self {
            LExpr::Add(..) | LExpr::Sub(..) => 1,
            LExpr::Mul(..) | LExpr::Div(..) => 2,
            LExpr::Neg(_) => 3,
            LExpr::Pow(..) => 4,
            _ => 5,
        }
    }

    pub fn eval(&self, f: Field) -> Result<LElem> {
        Ok(match self {
            LExpr::Num(n) => LElem::scalar(f.from_bigint(n)),
            LExpr::Rt => LElem::r(f),
            LExpr::T => LElem::t(f),
            LExpr::Neg(a) => a.eval(f)?.neg(),
            LExpr::Add(a, b) => a.eval(f)?.add(&b.eval(f)?),
            LExpr::Sub(a, b) => a.eval(f)?.sub(&b.eval(f)?),
            LExpr::Mul(a, b) => a.eval(f)?.mul(&b.eval(f)?),
            LExpr::Div(a, b) => {
                let d = b.eval(f)?;
                if d.is_zero() {
                    return Err(Error::Invariant(format!("division by zero in {self}")));
                }
                a.eval(f)?.div(&d)
            }
            LExpr::Pow(a, k) => {
                let b = a.eval(f)?;
                if *k < 0 && b.is_zero() {
                    return Err(Error::Invariant(format!("division by zero in {self}")));
                }
                b.pow(*k)
            }
        })
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &LExpr, min: u8) -> fmt::Result {
    if e.prec() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for LExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bin = |f: &mut fmt::Formatter<'_>, a: &LExpr, op: &str, b: &LExpr, p: u8| {
            write_child(f, a, p)?;
            write!(f, "{op}")?;
            write_child(f, b, p + 1)
        };
        match self {
            LExpr::Num(n) => write!(f, "{n}"),
            LExpr::Rt => write!(f, "rt"),
            LExpr::T => write!(f, "t"),
            LExpr::Neg(a) => {
                write!(f, "-")?;
                write_child(f, a, 3)
            }
            LExpr::Add(a, b) => bin(f, a, " + ", b, 1),
            LExpr::Sub(a, b) => bin(f, a, " - ", b, 1),
            LExpr::Mul(a, b) => bin(f, a, "*", b, 2),
            LExpr::Div(a, b) => bin(f, a, "/", b, 2),
            LExpr::Pow(a, k) => {
                write_child(f, a, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl ElemExpr {
    pub fn eval(&self, f: Field) -> Result<GroupElem> {
        Ok(match self {
            ElemExpr::Ua(x, y) => mk_ua(x.eval(f)?, y.eval(f)?)?,
            ElemExpr::U2a(v) => mk_u2a(v.eval(f)?)?,
            ElemExpr::Uma(x, y) => mk_uma(x.eval(f)?, y.eval(f)?)?,
            ElemExpr::At(l) => mk_atilde(l.eval(f)?)?,
            ElemExpr::S => elt_s(f),
            ElemExpr::Sj => elt_sj(f),
            ElemExpr::Mat(es) => {
                let mut v = Vec::with_capacity(9);
                for e in es.iter() {
                    v.push(e.eval(f)?);
                }
                GroupElem::new(Mat3::from_fn(|i, j| v[3 * i + j].clone()))?
            }
            ElemExpr::Prod(fs) => {
                let mut g = GroupElem::identity(f);
                for x in fs {
                    g = g.mul(&x.eval(f)?);
                }
                g
            }
            ElemExpr::Inv(a) => a.eval(f)?.inv(),
        })
    }
}

impl fmt::Display for ElemExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemExpr::Ua(x, y) => write!(f, "ua({x}; {y})"),
            ElemExpr::U2a(v) => write!(f, "u2a({v})"),
            ElemExpr::Uma(x, y) => write!(f, "uma({x}; {y})"),
            ElemExpr::At(l) => write!(f, "at({l})"),
            ElemExpr::S => write!(f, "s"),
            ElemExpr::Sj => write!(f, "sj"),
            ElemExpr::Mat(es) => {
                let e: Vec<String> = es.iter().map(|x| x.to_string()).collect();
                write!(f, "mat({})", e.join("; "))
            }
            ElemExpr::Prod(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    if matches!(x, ElemExpr::Prod(_)) {
                        write!(f, "({x})")?;
                    } else {
                        write!(f, "{x}")?;
                    }
                }
                Ok(())
            }
            ElemExpr::Inv(a) => {
                if matches!(**a, ElemExpr::Prod(_)) {
                    write!(f, "({a})^-1")
                } else {
                    write!(f, "{a}^-1")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let cs: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[st..i].iter().collect();
            out.push((st, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((st, Tok::Ident(cs[st..i].iter().collect())));
        } else if "();*/+-^".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(syntax(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser { toks: lex(text)?, i: 0, end: text.chars().count() })
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected '{c}'")))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.i < self.toks.len() {
            return Err(syntax(self.pos(), "unexpected trailing input"));
        }
        Ok(())
    }

    fn sum(&mut self) -> Result<LExpr> {
        let mut a = self.term()?;
        loop {
            if self.eat('+') {
                a = LExpr::Add(Box::new(a), Box::new(self.term()?));
            } else if self.eat('-') {
                a = LExpr::Sub(Box::new(a), Box::new(self.term()?));
            } else {
                return Ok(a);
            }
        }
    }

    fn term(&mut self) -> Result<LExpr> {
        let mut a = self.unary()?;
        loop {
            if self.eat('*') {
                a = LExpr::Mul(Box::new(a), Box::new(self.unary()?));
            } else if self.eat('/') {
                a = LExpr::Div(Box::new(a), Box::new(self.unary()?));
            } else {
                return Ok(a);
            }
        }
    }

    fn unary(&mut self) -> Result<LExpr> {
        if self.eat('-') {
            return Ok(LExpr::Neg(Box::new(self.unary()?)));
        }
        let mut a = self.scalar_atom()?;
        while self.eat('^') {
            a = LExpr::Pow(Box::new(a), self.exponent()?);
        }
        Ok(a)
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                let k: i64 = n.try_into().map_err(|_| syntax(pos, "exponent too large"))?;
                Ok(if neg { -k } else { k })
            }
            _ => Err(syntax(pos, "expected an integer exponent")),
        }
    }

    fn scalar_atom(&mut self) -> Result<LExpr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                Ok(LExpr::Num(n))
            }
            Some(Tok::Ident(s)) if s == "rt" => {
                self.i += 1;
                Ok(LExpr::Rt)
            }
            Some(Tok::Ident(s)) if s == "t" => {
                self.i += 1;
                Ok(LExpr::T)
            }
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(s)) => Err(syntax(pos, format!("unknown symbol '{s}' in a scalar"))),
            _ => Err(syntax(pos, "expected a scalar")),
        }
    }

    fn args(&mut self, n: usize) -> Result<Vec<LExpr>> {
        self.expect('(')?;
        let mut out = vec![self.sum()?];
        while out.len() < n {
            self.expect(';')?;
            out.push(self.sum()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn product(&mut self) -> Result<ElemExpr> {
        let mut fs = vec![self.postfix()?];
        loop {
            let juxtaposed = matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('(')));
            if !(self.eat('*') || juxtaposed) {
                break;
            }
            fs.push(self.postfix()?);
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { ElemExpr::Prod(fs) })
    }

    fn postfix(&mut self) -> Result<ElemExpr> {
        let mut a = self.elem_atom()?;
        while self.eat('^') {
            let pos = self.pos();
            if self.exponent()? != -1 {
                return Err(syntax(pos, "only ^-1 is allowed on elements"));
            }
            a = ElemExpr::Inv(Box::new(a));
        }
        Ok(a)
    }

    fn elem_atom(&mut self) -> Result<ElemExpr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.product()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(s)) => {
                self.i += 1;
                let mut take = |n| self.args(n);
                Ok(match s.as_str() {
                    "s" => ElemExpr::S,
                    "sj" => ElemExpr::Sj,
                    "ua" => {
                        let mut a = take(2)?;
                        let y = a.pop().unwrap();
                        ElemExpr::Ua(a.pop().unwrap(), y)
                    }
                    "uma" => {
                        let mut a = take(2)?;
                        let y = a.pop().unwrap();
                        ElemExpr::Uma(a.pop().unwrap(), y)
                    }
                    "u2a" => ElemExpr::U2a(take(1)?.pop().unwrap()),
                    "at" => ElemExpr::At(take(1)?.pop().unwrap()),
                    "mat" => {
                        let a: [LExpr; 9] = take(9)?.try_into().expect("nine entries");
                        ElemExpr::Mat(Box::new(a))
                    }
                    _ => return Err(syntax(pos, format!("unknown generator '{s}'"))),
                })
            }
            _ => Err(syntax(pos, "expected a generator")),
        }
    }
}

pub fn parse_scalar_expr(text: &str) -> Result<LExpr> {
    let mut p = Parser::new(text)?;
    let e = p.sum()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_elem_expr(text: &str) -> Result<ElemExpr> {
    let mut p = Parser::new(text)?;
    let e = p.product()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_scalar(text: &str, f: Field) -> Result<LElem> {
    parse_scalar_expr(text)?.eval(f)
}

pub fn parse_elem(text: &str, f: Field) -> Result<GroupElem> {
    parse_elem_expr(text)?.eval(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Q;

    #[test]
    fn generators() {
        let g = parse_elem("ua(1;-1/2)", Q).unwrap();
        assert_eq!(g, mk_ua(LElem::one(Q), LElem::scalar(Q.ratio(-1, 2))).unwrap());
        assert!(parse_elem("s*s", Q).unwrap().is_identity());
        assert!(parse_elem("s s", Q).unwrap().is_identity());
        assert!(parse_elem("sj * sj^-1", Q).unwrap().is_identity());
        assert!(matches!(parse_elem("ua(rt; -t/2)", Q), Err(Error::Invariant(_))));
    }

    #[test]
    fn scalars() {
        let x = parse_scalar("rt^-2 + 3/2*t", Q).unwrap();
        let want = LElem::t(Q).inv().add(&LElem::t(Q).scale(&Q.ratio(3, 2)));
        assert_eq!(x, want);
        assert_eq!(parse_scalar("(1 + rt)^2", Q).unwrap(), parse_scalar("1 + 2*rt + t", Q).unwrap());
        assert!(parse_scalar("1/(rt - rt)", Q).is_err());
    }

    #[test]
    fn positioned_errors() {
        match parse_elem_expr("ua(1; 2") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        match parse_elem_expr("s * foo") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_elem_expr("s^2"), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn display_reparses() {
        let g = parse_elem("ua(rt; t/2) * at(1 + rt) * uma(rt^3; t^3/2)", Q).unwrap();
        assert_eq!(parse_elem(&g.to_string(), Q).unwrap(), g);
    }
}
