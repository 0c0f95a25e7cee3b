use crate::algebra::{Algebra, AlgebraExpr};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::filters::{self, Filter};

/// Recursive-descent parser for the algebra/filter/element literal grammars.
/// Whitespace-insensitive; errors carry a byte offset and the expected
/// token set.
struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn found(&self) -> String {
        let rest = self.rest();
        if rest.is_empty() {
            "end of input".into()
        } else {
            let end = rest
                .char_indices()
                .nth(8)
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            format!("'{}'", &rest[..end])
        }
    }

    fn error<T>(&self, expected: Vec<&'static str>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            expected,
            found: self.found(),
        })
    }

    fn eat(&mut self, token: &'static str) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            self.error(vec![token])
        }
    }

    fn try_eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_lowercase())
            .unwrap_or(rest.len());
        let word = &rest[..end];
        self.pos += end;
        word
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return self.error(vec!["INT"]);
        }
        let n = rest[..end]
            .parse::<u64>()
            .map_err(|_| Error::Semantic(format!("integer '{}' is too large", &rest[..end])))?;
        self.pos += end;
        Ok(n)
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.error(vec!["end of input"])
        }
    }

    fn algebra(&mut self) -> Result<AlgebraExpr> {
        self.skip_ws();
        let start = self.pos;
        match self.ident() {
            "chain" => {
                self.eat(":")?;
                Ok(AlgebraExpr::Chain(self.int()?))
            }
            "chang" => Ok(AlgebraExpr::Chang),
            "lex" => {
                self.eat(":")?;
                Ok(AlgebraExpr::Lex(self.int()? as usize))
            }
            "product" => {
                self.eat("[")?;
                let mut children = vec![self.algebra()?];
                while self.try_eat(",") {
                    children.push(self.algebra()?);
                }
                self.eat("]")?;
                Ok(AlgebraExpr::Product(children))
            }
            _ => {
                self.pos = start;
                self.error(vec!["chain", "chang", "lex", "product"])
            }
        }
    }

    fn element(&mut self) -> Result<Element> {
        self.skip_ws();
        if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            return Ok(Element::Chain(self.int()?));
        }
        if self.try_eat("(") {
            let mut parts = vec![self.element()?];
            while self.try_eat(",") {
                parts.push(self.element()?);
            }
            self.eat(")")?;
            return Ok(Element::Tuple(parts));
        }
        let start = self.pos;
        let top = match self.ident() {
            "inf" => false,
            "coinf" => true,
            _ => {
                self.pos = start;
                return self.error(vec!["INT", "(", "inf", "coinf"]);
            }
        };
        self.eat("[")?;
        let mut vec = vec![self.int()?];
        while self.try_eat(",") {
            vec.push(self.int()?);
        }
        self.eat("]")?;
        Ok(Element::lex(top, vec))
    }

    fn filter(&mut self, a: &Algebra) -> Result<Filter> {
        self.skip_ws();
        let start = self.pos;
        match self.ident() {
            "one" => Ok(Filter::one(a)),
            "whole" => Ok(Filter::whole(a)),
            "rad" => Filter::rad(a),
            "m" => {
                self.eat("{")?;
                let mut indices = vec![self.int()? as usize];
                while self.try_eat(",") {
                    indices.push(self.int()? as usize);
                }
                self.eat("}")?;
                Filter::zero_set(a, indices)
            }
            "gen" => {
                self.eat("{")?;
                let mut elems = vec![self.element()?];
                while self.try_eat(";") {
                    elems.push(self.element()?);
                }
                self.eat("}")?;
                for e in &elems {
                    a.validate(e)?;
                }
                filters::generate_filter(a, &elems)
            }
            "pull" => {
                self.eat("{")?;
                let index = self.int()? as usize;
                self.eat(";")?;
                if index < 1 {
                    return Err(Error::Semantic("component indices start at 1".into()));
                }
                let comp = a.component(index - 1)?;
                let inner = self.filter(&comp)?;
                self.eat("}")?;
                Filter::pullback(a, index, inner.body().clone())
            }
            _ => {
                self.pos = start;
                self.error(vec!["one", "whole", "rad", "m", "gen", "pull"])
            }
        }
    }
}

/// Parses an algebra description: `chain:INT | chang | lex:INT |
/// product[algebra, ...]`.
pub fn parse_algebra(text: &str) -> Result<AlgebraExpr> {
    let mut p = Parser::new(text);
    let expr = p.algebra()?;
    p.end()?;
    Ok(expr)
}

/// Parses an element literal and validates it against `a`.
pub fn parse_element(text: &str, a: &Algebra) -> Result<Element> {
    let mut p = Parser::new(text);
    let e = p.element()?;
    p.end()?;
    a.validate(&e)?;
    Ok(e)
}

/// Parses a filter literal in the context of `a`.
pub fn parse_filter(text: &str, a: &Algebra) -> Result<Filter> {
    let mut p = Parser::new(text);
    let f = p.filter(a)?;
    p.end()?;
    Ok(f)
}
