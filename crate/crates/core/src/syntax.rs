//! Text syntax for expressions, tempered symbols and parameters.
//!
//! ```text
//! gl      := term (('+' | '-') term)*
//! term    := '-'? factor (('x' | '*') factor)*
//! factor  := INT | 'd' SEG | 's' SEG | 't(' gl ')' | '{' SEG,* '}' | '(' gl ')'
//! classical := gl '|x' symbol | symbol
//! symbol  := 'sigma' | 'st(' INT ')' | 'dst(' INT ')'
//!          | 'tau(' [SEG ','] ('+'|'-') ')' | 'dpm(' SEG ',' ('+'|'-') ')'
//! param   := 'sigma' | 'd(' SEG ';sigma)' | 'L(' SEG,+ ';' ('sigma' | 'd(' SEG ';sigma)') ')'
//! ```
//!
//! `1` is the unit, `d[lo,hi]` is `δ`, `s[lo,hi]` is `𝔰` and `t(·)` the
//! involution. `tau(+)` abbreviates `tau([-α,α],+)`.

use num_bigint::BigInt;

use crate::classical::{induced, rtimes, ClassicalElement, Sign, TemperedSymbol};
use crate::error::{Error, Result};
use crate::gl;
use crate::langlands::SubquotientParam;
use crate::linear::GlElement;
use crate::seg::{CuspidalContext, Exponent, Multisegment, Segment, Word};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return self.err(format!("unexpected trailing input `{}`", self.rest()));
        }
        Ok(())
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let len: usize = self.rest().chars().take_while(|c| f(*c)).map(char::len_utf8).sum();
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn uint(&mut self) -> Result<u32> {
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().or_else(|_| self.err("expected a non-negative integer"))
    }

    fn exponent(&mut self) -> Result<Exponent> {
        let at = self.pos;
        let text = self.take_while(|c| c.is_ascii_digit() || c == '-' || c == '/' || c == ' ');
        Exponent::parse(text).map_err(|_| Error::Parse {
            pos: at,
            msg: format!("invalid exponent `{}`", text.trim()),
        })
    }

    fn segment(&mut self) -> Result<Segment> {
        self.expect("[")?;
        if self.eat("]") {
            return Ok(Segment::EMPTY);
        }
        let lo = self.exponent()?;
        let hi = if self.eat(",") { self.exponent()? } else { lo };
        self.expect("]")?;
        Segment::new(lo, hi)
    }

    fn segment_list(&mut self, close: &str) -> Result<Vec<Segment>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.segment()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn sign(&mut self) -> Result<Sign> {
        if self.eat("+") {
            Ok(Sign::Plus)
        } else if self.eat("-") {
            Ok(Sign::Minus)
        } else {
            self.err("expected `+` or `-`")
        }
    }

    fn gl(&mut self) -> Result<GlElement> {
        let mut acc = self.term()?;
        loop {
            if self.rest().trim_start().starts_with("|x") {
                return Ok(acc);
            }
            if self.eat("+") {
                acc = acc.add(&self.term()?);
            } else if self.eat("-") {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GlElement> {
        let negate = self.eat("-");
        let mut acc = self.factor()?;
        while self.eat("x") || self.eat("*") {
            acc = gl::gl_mul(&acc, &self.factor()?);
        }
        Ok(if negate { acc.scale(&BigInt::from(-1)) } else { acc })
    }

    fn factor(&mut self) -> Result<GlElement> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let k = self.uint()?;
                Ok(GlElement::term(Multisegment::unit(), k))
            }
            Some('d') => {
                self.expect("d")?;
                Ok(gl::delta(self.segment()?))
            }
            Some('s') => {
                self.expect("s")?;
                let s = self.segment()?;
                if s.is_empty() {
                    return Ok(gl::unit());
                }
                gl::expand_s_in_standard(s)
            }
            Some('t') => {
                self.expect("t(")?;
                let inner = self.gl()?;
                self.expect(")")?;
                gl::involution_ring(&inner)
            }
            Some('{') => {
                self.expect("{")?;
                let segs = self.segment_list("}")?;
                Ok(gl::standard(&Multisegment::new(
                    segs.into_iter().filter(|s| !s.is_empty()),
                )))
            }
            Some('(') => {
                self.expect("(")?;
                let inner = self.gl()?;
                self.expect(")")?;
                Ok(inner)
            }
            _ => self.err("expected a factor: integer, d[..], s[..], t(..), {..} or (..)"),
        }
    }

    fn symbol(&mut self, ctx: &CuspidalContext) -> Result<TemperedSymbol> {
        let at = self.pos;
        let sym = if self.eat("sigma") {
            TemperedSymbol::Cuspidal
        } else if self.eat("st(") {
            let k = self.uint()?;
            self.expect(")")?;
            TemperedSymbol::GenSteinberg(k)
        } else if self.eat("dst(") {
            let k = self.uint()?;
            self.expect(")")?;
            TemperedSymbol::DualSteinberg(k)
        } else if self.eat("tau(") {
            let seg = if self.peek() == Some('[') {
                let s = self.segment()?;
                self.expect(",")?;
                s
            } else {
                Segment::new(-ctx.alpha, ctx.alpha)?
            };
            let e = self.sign()?;
            self.expect(")")?;
            TemperedSymbol::TauPm(seg, e)
        } else if self.eat("dpm(") {
            let seg = self.segment()?;
            self.expect(",")?;
            let e = self.sign()?;
            self.expect(")")?;
            TemperedSymbol::DeltaPm(seg, e)
        } else {
            return self.err("expected sigma, st(n), dst(n), tau(..) or dpm(..)");
        };
        sym.validate(ctx).map_err(|e| Error::Parse {
            pos: at,
            msg: e.to_string(),
        })?;
        Ok(sym)
    }

    fn classical(&mut self, ctx: &CuspidalContext) -> Result<ClassicalElement> {
        let starts_symbol = ["sigma", "st(", "dst(", "tau(", "dpm("]
            .iter()
            .any(|t| self.rest().trim_start().starts_with(t));
        if starts_symbol {
            let sym = self.symbol(ctx)?;
            return Ok(induced(Multisegment::unit(), sym));
        }
        let x = self.gl()?;
        self.expect("|x")?;
        let sym = self.symbol(ctx)?;
        Ok(rtimes(&x, &induced(Multisegment::unit(), sym)))
    }

    fn temp_segment(&mut self) -> Result<Segment> {
        if self.eat("sigma") {
            return Ok(Segment::EMPTY);
        }
        self.expect("d(")?;
        let s = self.segment()?;
        self.expect(";")?;
        self.expect("sigma")?;
        self.expect(")")?;
        Ok(s)
    }

    fn param(&mut self, ctx: &CuspidalContext) -> Result<SubquotientParam> {
        let (segs, temp) = if self.eat("L(") {
            let mut segs = vec![self.segment()?];
            while self.eat(",") {
                segs.push(self.segment()?);
            }
            self.expect(";")?;
            let t = self.temp_segment()?;
            self.expect(")")?;
            (segs, t)
        } else {
            (Vec::new(), self.temp_segment()?)
        };
        SubquotientParam::new(segs, temp, ctx)
    }
}

fn run<T>(src: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(src);
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_gl(src: &str) -> Result<GlElement> {
    run(src, |p| p.gl())
}

pub fn parse_classical(src: &str, ctx: &CuspidalContext) -> Result<ClassicalElement> {
    run(src, |p| p.classical(ctx))
}

pub fn parse_symbol(src: &str, ctx: &CuspidalContext) -> Result<TemperedSymbol> {
    run(src, |p| p.symbol(ctx))
}

pub fn parse_param(src: &str, ctx: &CuspidalContext) -> Result<SubquotientParam> {
    run(src, |p| p.param(ctx))
}

pub fn parse_word(src: &str) -> Result<Word> {
    Word::parse(src)
}

/// A GL expression or a classical one, told apart by `|x` or a leading symbol.
pub enum Expr {
    Gl(GlElement),
    Classical(ClassicalElement),
}

pub fn parse_expr(src: &str, ctx: &CuspidalContext) -> Result<Expr> {
    let t = src.trim_start();
    let classical = src.contains("|x")
        || ["sigma", "st(", "dst(", "tau(", "dpm("]
            .iter()
            .any(|k| t.starts_with(k));
    if classical {
        parse_classical(src, ctx).map(Expr::Classical)
    } else {
        parse_gl(src).map(Expr::Gl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langlands::subquotient_enumerate;

    fn ctx(twice: i64) -> CuspidalContext {
        CuspidalContext::new(Exponent::from_twice(twice)).unwrap()
    }

    #[test]
    fn gl_expressions() {
        assert_eq!(parse_gl("d[0,1] x d[2,2]").unwrap().render(), "{[0,1],[2,2]}");
        assert_eq!(parse_gl("1").unwrap().render(), "1");
        assert_eq!(parse_gl("2*d[1,1] x d[1,1]").unwrap().render(), "2*{[1,1],[1,1]}");
        assert_eq!(parse_gl("s[0,1]").unwrap().render(), "{[0,0],[1,1]} - {[0,1]}");
        assert_eq!(parse_gl("t(t(d[0,2]))").unwrap(), parse_gl("d[0,2]").unwrap());
        assert_eq!(parse_gl("d[1/2] - d[1/2]").unwrap().render(), "0");
        assert_eq!(parse_gl("{[0,1],[2]}").unwrap(), parse_gl("d[2] x d[0,1]").unwrap());
        assert_eq!(parse_gl("-(d[0] + d[1])").unwrap().render(), "-{[0,0]} - {[1,1]}");
    }

    #[test]
    fn classical_expressions() {
        let c = ctx(2);
        assert_eq!(
            parse_classical("d[-1,1] |x sigma", &c).unwrap().render(),
            "{[-1,1]} |x sigma"
        );
        assert_eq!(parse_classical("st(1)", &c).unwrap().render(), "st(1)");
        assert_eq!(
            parse_classical("(d[0] + d[1]) |x sigma", &c).unwrap().render(),
            "{[0,0]} |x sigma + {[1,1]} |x sigma"
        );
        assert_eq!(
            parse_symbol("tau(+)", &c).unwrap(),
            TemperedSymbol::TauPm(Segment::ints(-1, 1), Sign::Plus)
        );
        assert_eq!(
            parse_symbol("dpm([-1,2],-)", &c).unwrap(),
            TemperedSymbol::DeltaPm(Segment::ints(-1, 2), Sign::Minus)
        );
        assert!(parse_symbol("dpm([-2,1],+)", &c).is_err());
        assert!(parse_symbol("tau([0,1],+)", &c).is_err());
    }

    #[test]
    fn params_round_trip() {
        for tw in [1, 2, 3] {
            let c = ctx(tw);
            for n in 1..=3 {
                for g in subquotient_enumerate(n, &c) {
                    assert_eq!(parse_param(&g.to_string(), &c).unwrap(), g);
                }
            }
        }
        assert!(parse_param("L([1,2];sigma)", &ctx(1)).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_gl("d[0,1] x q") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_gl("d[0,1] d[2,2]").is_err());
        assert!(parse_gl("d[3,1]").is_err());
    }
}
