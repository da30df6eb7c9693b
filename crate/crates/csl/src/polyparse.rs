//! Polynomials in `X` with integer or rational coefficients, e.g. `X^3 - 1/2*X + 4`.

use csl_core::kernel::{BaseField, Poly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty polynomial")]
    Empty,
    #[error("unexpected {found:?} at offset {at}")]
    Unexpected { found: char, at: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("coefficient {0} is not defined over {1}")]
    NotInField(String, String),
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(found) => ParseError::Unexpected { found, at: self.offset() },
            None => ParseError::UnexpectedEnd,
        }
    }
}

fn is_var(c: char) -> bool {
    c == 'X' || c == 'x'
}

/// `coefficient? ('*'? X ('^' n)?)?` with at least one part present.
fn term(lex: &mut Lexer) -> Result<(BigRational, usize), ParseError> {
    let mut coeff = BigRational::from_integer(1.into());
    let mut has_coeff = false;
    if let Some(num) = lex.digits() {
        let n: BigInt = num.parse().map_err(|_| ParseError::BadNumber(num.clone()))?;
        coeff = BigRational::from_integer(n);
        if lex.peek() == Some('/') {
            lex.bump();
            let den = lex.digits().ok_or_else(|| lex.unexpected())?;
            let d: BigInt = den.parse().map_err(|_| ParseError::BadNumber(den.clone()))?;
            if d == BigInt::from(0) {
                return Err(ParseError::BadNumber(format!("{num}/{den}")));
            }
            coeff /= BigRational::from_integer(d);
        }
        has_coeff = true;
        if lex.peek() == Some('*') {
            lex.bump();
            if !lex.peek().is_some_and(is_var) {
                return Err(lex.unexpected());
            }
        }
    }
    let mut exp = 0;
    if lex.peek().is_some_and(is_var) {
        lex.bump();
        exp = 1;
        if lex.peek() == Some('^') {
            lex.bump();
            let e = lex.digits().ok_or_else(|| lex.unexpected())?;
            exp = e.parse().map_err(|_| ParseError::BadNumber(e.clone()))?;
        }
    } else if !has_coeff {
        return Err(lex.unexpected());
    }
    Ok((coeff, exp))
}

/// Parses over the rationals; see [`parse_poly_in`] for prime fields.
pub fn parse_rational_coeffs(src: &str) -> Result<Vec<BigRational>, ParseError> {
    let mut lex = Lexer::new(src);
    if lex.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut first = true;
    while lex.peek().is_some() {
        let mut negative = false;
        match lex.peek() {
            Some('+') if !first => {
                lex.bump();
            }
            Some('-') => {
                lex.bump();
                negative = true;
            }
            _ if first => {}
            _ => return Err(lex.unexpected()),
        }
        let (c, e) = term(&mut lex)?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigRational::from_integer(0.into()));
        }
        coeffs[e] = if negative { &coeffs[e] - c } else { &coeffs[e] + c };
        first = false;
    }
    Ok(coeffs)
}

pub fn parse_poly_in(src: &str, field: &BaseField) -> Result<Poly, ParseError> {
    let coeffs = parse_rational_coeffs(src)?;
    let reduced: Vec<Scalar> = coeffs
        .iter()
        .map(|c| field.reduce(c).map_err(|_| ParseError::NotInField(c.to_string(), field.to_string())))
        .collect::<Result<_, _>>()?;
    Ok(Poly::new(reduced))
}

/// Comma-separated list of polynomials.
pub fn parse_poly_list(src: &str, field: &BaseField) -> Result<Vec<Poly>, ParseError> {
    src.split(',').map(|p| parse_poly_in(p, field)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| BaseField::Rationals.from_i64(v)).collect())
    }

    #[test]
    fn parses_basic_forms() {
        let f = BaseField::Rationals;
        assert_eq!(parse_poly_in("X^2-1", &f).unwrap(), q(&[-1, 0, 1]));
        assert_eq!(parse_poly_in("-X^3 + 2*X", &f).unwrap(), q(&[0, 2, 0, -1]));
        assert_eq!(parse_poly_in("3X + X + 1", &f).unwrap(), q(&[1, 4]));
        assert_eq!(parse_poly_in("1", &f).unwrap(), Poly::one());
        assert_eq!(parse_poly_in("X - X", &f).unwrap(), Poly::zero());
        let half = parse_poly_in("1/2*X", &f).unwrap();
        assert_eq!(half.coeff(1), f.div(&f.one(), &f.from_i64(2)).unwrap());
    }

    #[test]
    fn display_round_trips() {
        let f = BaseField::Rationals;
        for p in [q(&[-1, 0, 1]), q(&[0, 2, 0, -1]), q(&[5]), q(&[0, 0, 0, 1])] {
            assert_eq!(parse_poly_in(&p.to_string(), &f).unwrap(), p);
        }
    }

    #[test]
    fn prime_field_reduction() {
        let f5 = BaseField::prime(5).unwrap();
        assert_eq!(parse_poly_in("X^2 - 1", &f5).unwrap().coeff(0), f5.from_i64(4));
        assert!(parse_poly_in("1/5*X", &f5).is_err());
    }

    #[test]
    fn rejects_garbage() {
        let f = BaseField::Rationals;
        assert_eq!(parse_poly_in("", &f), Err(ParseError::Empty));
        assert!(parse_poly_in("X^", &f).is_err());
        assert!(parse_poly_in("2*", &f).is_err());
        assert!(parse_poly_in("X + + 1", &f).is_err());
        assert!(parse_poly_in("Y", &f).is_err());
        assert!(parse_poly_in("1/0", &f).is_err());
        assert_eq!(parse_poly_list("X^2-1,X^3-1", &f).unwrap().len(), 2);
    }
}
