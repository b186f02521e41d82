//! Ordinals below epsilon-zero in Cantor normal form.
//!
//! An ordinal is a strictly decreasing sum of terms `w^e * c` with positive
//! integer coefficients; exponents are themselves ordinals of the same kind.
//! This class is closed under ordinal addition and left subtraction, which is
//! all the sequence machinery needs for lengths, positions and run splitting.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::parse::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    /// Left subtraction `a + x = b` was requested with `a > b`.
    #[error("ordinal underflow: minuend is smaller than subtrahend")]
    Underflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `0` counts as a limit ordinal here.
    Limit,
    Successor,
}

/// One CNF term `w^exponent * coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

/// An ordinal below epsilon-zero; the empty term list is `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::finite(1)
    }

    pub fn finite(n: u64) -> Ordinal {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exponent: Ordinal::zero(),
                    coefficient: n,
                }],
            }
        }
    }

    pub fn omega() -> Ordinal {
        Ordinal::power(Ordinal::one(), 1)
    }

    /// `w^exponent * coefficient`; zero coefficient gives `0`.
    pub fn power(exponent: Ordinal, coefficient: u64) -> Ordinal {
        if coefficient == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exponent,
                    coefficient,
                }],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The finite value, if this ordinal is below `w`.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    /// Ordinal sum. Terms of `self` below the leading exponent of `other`
    /// are absorbed; a shared leading exponent merges coefficients.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        if other.is_zero() {
            return self.clone();
        }
        let lead = &other.terms[0].exponent;
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent > *lead)
            .cloned()
            .collect();
        let mut rest = other.terms.clone();
        if let Some(t) = self.terms.get(terms.len()) {
            if t.exponent == *lead {
                rest[0].coefficient += t.coefficient;
            }
        }
        terms.extend(rest);
        Ordinal { terms }
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// The unique `x` with `self + x = larger`, or `Underflow` if `self > larger`.
    pub fn left_sub(&self, larger: &Ordinal) -> Result<Ordinal, OrdinalError> {
        let mut i = 0;
        while i < self.terms.len() && i < larger.terms.len() && self.terms[i] == larger.terms[i] {
            i += 1;
        }
        if i == self.terms.len() {
            return Ok(Ordinal {
                terms: larger.terms[i..].to_vec(),
            });
        }
        if i == larger.terms.len() {
            return Err(OrdinalError::Underflow);
        }
        let (ta, tb) = (&self.terms[i], &larger.terms[i]);
        match ta.exponent.cmp(&tb.exponent) {
            Ordering::Greater => Err(OrdinalError::Underflow),
            // self's tail from here on is absorbed by larger's leading term
            Ordering::Less => Ok(Ordinal {
                terms: larger.terms[i..].to_vec(),
            }),
            Ordering::Equal => {
                if ta.coefficient > tb.coefficient {
                    Err(OrdinalError::Underflow)
                } else {
                    let mut terms = vec![Term {
                        exponent: tb.exponent.clone(),
                        coefficient: tb.coefficient - ta.coefficient,
                    }];
                    terms.extend_from_slice(&larger.terms[i + 1..]);
                    Ok(Ordinal { terms })
                }
            }
        }
    }

    /// Successor iff the last CNF term is finite; `0` is a limit.
    pub fn classify(&self) -> Classification {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => Classification::Successor,
            _ => Classification::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        self.classify() == Classification::Limit
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        let last = self.terms.last()?;
        if !last.exponent.is_zero() {
            return None;
        }
        let mut terms = self.terms.clone();
        if last.coefficient == 1 {
            terms.pop();
        } else {
            terms.last_mut().unwrap().coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    /// Writes `self` as `x + w` if possible, returning `x`.
    pub fn strip_final_omega(&self) -> Option<Ordinal> {
        let last = self.terms.last()?;
        if last.exponent != Ordinal::one() {
            return None;
        }
        let mut terms = self.terms.clone();
        if last.coefficient == 1 {
            terms.pop();
        } else {
            terms.last_mut().unwrap().coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_finite() {
            write!(f, "{}", n)
        } else if *self == Ordinal::omega() {
            write!(f, "w")
        } else {
            write!(f, "({})", self)
        }
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    /// Lexicographic on CNF terms: exponents first, then coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.exponent.cmp(&b.exponent) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match a.coefficient.cmp(&b.coefficient) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
            } else {
                write!(f, "w")?;
                if t.exponent != Ordinal::one() {
                    write!(f, "^")?;
                    t.exponent.fmt_atom(f)?;
                }
                if t.coefficient > 1 {
                    write!(f, "*{}", t.coefficient)?;
                }
            }
        }
        Ok(())
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Ordinal {
        Ordinal::finite(n)
    }
}

fn parse_nat(cur: &mut Cursor<'_>) -> Result<u64, ParseError> {
    let start = cur.pos();
    match cur.peek() {
        Some(b'1'..=b'9') => {}
        _ => return Err(ParseError::syntax(start, "expected a positive integer")),
    }
    let mut value: u64 = 0;
    while let Some(b @ b'0'..=b'9') = cur.peek() {
        cur.bump();
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add((b - b'0') as u64))
            .ok_or_else(|| ParseError::syntax(start, "integer literal too large"))?;
    }
    Ok(value)
}

fn parse_atom(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    match cur.peek() {
        Some(b'1'..=b'9') => Ok(Ordinal::finite(parse_nat(cur)?)),
        Some(b'w') => {
            cur.bump();
            Ok(Ordinal::omega())
        }
        Some(b'(') => {
            cur.bump();
            let inner = parse_ordinal(cur)?;
            cur.expect(b')')?;
            Ok(inner)
        }
        _ => Err(ParseError::syntax(cur.pos(), "expected exponent atom")),
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    match cur.peek() {
        Some(b'1'..=b'9') => Ok(Ordinal::finite(parse_nat(cur)?)),
        Some(b'w') => {
            cur.bump();
            let exponent = if cur.eat(b'^') {
                parse_atom(cur)?
            } else {
                Ordinal::one()
            };
            let coefficient = if cur.eat(b'*') { parse_nat(cur)? } else { 1 };
            Ok(Ordinal::power(exponent, coefficient))
        }
        _ => Err(ParseError::syntax(cur.pos(), "expected ordinal term")),
    }
}

/// Parses an ordinal at the cursor. A `+` is consumed only when followed by a
/// term start, so the surreal run grammar can place a sign right after a count.
/// Non-canonical sums are normalized by folding ordinal addition left to right.
pub(crate) fn parse_ordinal(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    if cur.peek() == Some(b'0') {
        cur.bump();
        return Ok(Ordinal::zero());
    }
    let mut value = parse_term(cur)?;
    while cur.peek() == Some(b'+')
        && matches!(cur.peek_at(1), Some(b'1'..=b'9') | Some(b'w') | Some(b'('))
    {
        cur.bump();
        value = value.add(&parse_term(cur)?);
    }
    Ok(value)
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        cur.skip_ws();
        let value = parse_ordinal(&mut cur)?;
        cur.skip_ws();
        cur.expect_end()?;
        Ok(value)
    }
}
