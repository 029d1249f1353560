//! The ASCII expression grammar.
//!
//! ```text
//! expr   ::= ['-'] term (('+' | '-') term)*
//! term   ::= coeff ['*' atom] | atom
//! atom   ::= basis '[' [part (',' part)*] ']'
//! coeff  ::= integer ['/' integer]
//! basis  ::= 'm' | 'e' | 'h' | 'p' | 's'
//! ```
//!
//! Tensors in Λ⊗Λ use `slot '#' slot` in place of `atom`, where a slot is an
//! atom or a number. Whitespace is allowed between tokens.

use num_bigint::BigInt;
use num_traits::One;

use crate::birig::TensorElem;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::Q;
use crate::symfunc::{BasisTag, Lambda, SymFunc};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("`{}`", c as char)))
        }
    }

    fn error(&self, expected: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            expected: expected.into(),
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().expect("digits"))
    }

    fn coefficient(&mut self) -> Result<Option<Q>> {
        let Some(num) = self.integer() else {
            return Ok(None);
        };
        if !self.eat(b'/') {
            return Ok(Some(Q::from_integer(num)));
        }
        let den_at = self.pos;
        let den = self.integer().ok_or_else(|| self.error("denominator"))?;
        if den == BigInt::from(0) {
            return Err(Error::Parse {
                offset: den_at,
                expected: "nonzero denominator".into(),
            });
        }
        Ok(Some(Q::new(num, den)))
    }

    /// `basis '[' parts ']'`, if the next token is a letter.
    fn atom(&mut self) -> Result<Option<(BasisTag, Partition)>> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.peek().filter(u8::is_ascii_alphabetic) else {
            return Ok(None);
        };
        let mut end = start;
        while self.src.as_bytes().get(end).is_some_and(u8::is_ascii_alphanumeric) {
            end += 1;
        }
        let tag = &self.src[start..end];
        let basis = if tag.len() == 1 {
            (c as char).to_string().parse::<BasisTag>().ok()
        } else {
            None
        };
        let Some(basis) = basis else {
            return Err(Error::UnknownBasis {
                tag: tag.to_string(),
                offset: start,
            });
        };
        self.pos = end;
        self.expect(b'[')?;
        let parts_at = self.pos;
        let mut parts = Vec::new();
        if !self.eat(b']') {
            loop {
                let part = self.integer().ok_or_else(|| self.error("a positive part"))?;
                let part: usize = part.try_into().map_err(|_| self.error("a small part"))?;
                parts.push(part);
                if self.eat(b']') {
                    break;
                }
                self.expect(b',').map_err(|_| self.error("`,` or `]`"))?;
            }
        }
        let shape = Partition::new(parts).map_err(|_| Error::Parse {
            offset: parts_at,
            expected: "positive, weakly decreasing parts".into(),
        })?;
        Ok(Some((basis, shape)))
    }

    /// Leading sign of the first term, or the operator between terms.
    fn sign(&mut self, first: bool) -> Result<Option<bool>> {
        if self.eat(b'-') {
            return Ok(Some(true));
        }
        if self.eat(b'+') {
            return Ok(Some(false));
        }
        if first {
            Ok(Some(false))
        } else if self.at_end() {
            Ok(None)
        } else {
            Err(self.error("`+`, `-` or end of input"))
        }
    }
}

type Term<T> = (Q, T);

fn parse_terms<T>(
    src: &str,
    mut body: impl FnMut(&mut Cursor<'_>, Option<Q>) -> Result<Term<T>>,
) -> Result<Vec<Term<T>>> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(cur.error("an expression"));
    }
    let mut out = Vec::new();
    let mut first = true;
    while let Some(negative) = cur.sign(first)? {
        first = false;
        let coeff = cur.coefficient()?;
        let (c, value) = body(&mut cur, coeff)?;
        out.push((if negative { -c } else { c }, value));
    }
    Ok(out)
}

/// Parses a symmetric function. The result uses the basis of the first
/// basis-tagged term (the Schur basis if there is none); other terms are
/// converted into it.
pub fn parse_expression(src: &str, lambda: &Lambda) -> Result<SymFunc> {
    let terms = parse_terms(src, |cur, coeff| {
        let atom = match coeff {
            Some(_) if !cur.eat(b'*') => None,
            Some(_) => Some(cur.atom()?.ok_or_else(|| cur.error("a basis element"))?),
            None => Some(cur.atom()?.ok_or_else(|| cur.error("a number or a basis element"))?),
        };
        Ok((coeff.unwrap_or_else(Q::one), atom))
    })?;
    let target = terms
        .iter()
        .find_map(|(_, atom)| atom.as_ref().map(|(b, _)| *b))
        .unwrap_or(BasisTag::S);
    let mut acc = SymFunc::zero(target);
    for (c, atom) in terms {
        let term = match atom {
            Some((basis, shape)) => {
                lambda.check_degree(shape.size())?;
                SymFunc::from_terms(basis, [(shape, c)])
            }
            None => SymFunc::constant(target, c),
        };
        acc = lambda.add(&acc, &term)?;
    }
    Ok(acc)
}

type Slot = (Option<BasisTag>, Partition, Q);

fn slot(cur: &mut Cursor<'_>) -> Result<Slot> {
    if let Some((basis, shape)) = cur.atom()? {
        return Ok((Some(basis), shape, Q::one()));
    }
    let c = cur.coefficient()?.ok_or_else(|| cur.error("a tensor factor"))?;
    Ok((None, Partition::empty(), c))
}

/// Parses an element of Λ⊗Λ such as `s[2] # 1 + s[1] # s[1]`. Each slot
/// takes the basis of its first tagged factor.
pub fn parse_tensor(src: &str, lambda: &Lambda) -> Result<TensorElem> {
    let terms = parse_terms(src, |cur, coeff| {
        let (mut c, left) = match coeff {
            Some(c) if cur.eat(b'*') => (c, slot(cur)?),
            Some(c) => (Q::one(), (None, Partition::empty(), c)),
            None => (Q::one(), slot(cur)?),
        };
        cur.expect(b'#')?;
        let right = slot(cur)?;
        c = c * &left.2 * &right.2;
        Ok((c, (left.0, left.1, right.0, right.1)))
    })?;
    let left = terms.iter().find_map(|(_, t)| t.0).unwrap_or(BasisTag::S);
    let right = terms.iter().find_map(|(_, t)| t.2).unwrap_or(BasisTag::S);
    let mut merged = Vec::new();
    for (c, (lb, ls, rb, rs)) in terms {
        lambda.check_degree(ls.size())?;
        lambda.check_degree(rs.size())?;
        let bases = (lb.unwrap_or(left), rb.unwrap_or(right));
        let t = TensorElem::from_terms(bases, [((ls, rs), c)]);
        merged.extend(lambda.tensor_to_basis(&t, (left, right))?.terms().clone());
    }
    Ok(TensorElem::from_terms((left, right), merged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn parse(src: &str) -> Result<SymFunc> {
        parse_expression(src, &Lambda::new())
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn simple_expressions() {
        assert_eq!(parse("s[1]").unwrap(), SymFunc::s(&[1]));
        assert_eq!(
            parse("2*p[2] - 3").unwrap(),
            SymFunc::from_terms(BasisTag::P, [(part(&[2]), q(2)), (part(&[]), q(-3))])
        );
        assert_eq!(
            parse("3*s[2,1] - p[4] + 1").unwrap().basis(),
            BasisTag::S
        );
        assert_eq!(parse(" -1/2 * h[ 2 , 1 ] ").unwrap(), SymFunc::from_terms(BasisTag::H, [(part(&[2, 1]), q_frac(-1, 2))]));
        assert_eq!(parse("5").unwrap(), SymFunc::constant(BasisTag::S, q(5)));
        assert_eq!(parse("s[]").unwrap(), SymFunc::one(BasisTag::S));
        assert_eq!(parse("s[1] - s[1]").unwrap(), SymFunc::zero(BasisTag::S));
    }

    #[test]
    fn mixed_bases_convert_to_first() {
        let l = Lambda::new();
        let f = parse("s[2] + p[1,1]").unwrap();
        assert_eq!(f.basis(), BasisTag::S);
        assert!(l.equal(&f, &parse("2*s[2] + s[1,1]").unwrap()).unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse("x[1]"), Err(Error::UnknownBasis { offset: 0, .. })));
        assert!(matches!(parse("s[1] + q[2]"), Err(Error::UnknownBasis { offset: 7, .. })));
        assert!(matches!(parse("s[1"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse("s[1,2]"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("s[1] s[2]"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(
            parse_expression("s[3]", &Lambda::with_cap(2)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn render_round_trip() {
        for src in ["1 + 3*s[2,1] - s[1,1,1]", "-1/2*p[2] + 7/3*p[1,1]", "0", "-4"] {
            let f = parse(src).unwrap();
            assert_eq!(f.to_string(), src);
            assert_eq!(parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn tensors() {
        let l = Lambda::new();
        let t = parse_tensor("s[1] # 1 + 1 # s[1]", &l).unwrap();
        assert_eq!(t, l.coaddition(&SymFunc::s(&[1])).unwrap());
        let t = parse_tensor("s[1] # 1 - 2*1 # s[1]", &l).unwrap();
        assert_eq!(t.to_string(), "s[1] # 1 - 2*1 # s[1]");
        let u = l.comultiplication(&SymFunc::s(&[2, 1])).unwrap();
        assert_eq!(parse_tensor(&u.to_string(), &l).unwrap(), u);
        assert!(matches!(parse_tensor("s[1]", &l), Err(Error::Parse { offset: 4, .. })));
    }
}
