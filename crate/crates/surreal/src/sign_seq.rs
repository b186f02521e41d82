//! Surreal numbers as sign sequences in canonical run-length form.
//!
//! A surreal is a function from an ordinal (its length) to `{+, -}`. We store
//! it as an alternating list of runs `(sign, count)` with ordinal counts; this
//! represents exactly the sequences with finitely many sign changes, which is
//! closed under every construction used here.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::parse::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    /// `prolong` was asked for a target length below the current one.
    #[error("target length is shorter than the sequence")]
    TooShort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// Result of querying a position: `Undefined` from the length on.
/// Ordered by the convention `- < undefined < +`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SignQuery {
    Minus,
    Undefined,
    Plus,
}

impl From<Sign> for SignQuery {
    fn from(s: Sign) -> SignQuery {
        match s {
            Sign::Minus => SignQuery::Minus,
            Sign::Plus => SignQuery::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Run {
    pub sign: Sign,
    pub count: Ordinal,
}

/// A surreal number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignSeq {
    runs: Vec<Run>,
}

impl SignSeq {
    pub fn empty() -> SignSeq {
        SignSeq { runs: Vec::new() }
    }

    /// Builds from raw runs, merging same-sign neighbours by ordinal addition
    /// of counts and dropping zero counts.
    pub fn from_runs<I>(runs: I) -> SignSeq
    where
        I: IntoIterator<Item = (Sign, Ordinal)>,
    {
        let mut seq = SignSeq::empty();
        for (sign, count) in runs {
            seq.push_run(sign, count);
        }
        seq
    }

    pub fn from_signs(signs: &[Sign]) -> SignSeq {
        SignSeq::from_runs(signs.iter().map(|&s| (s, Ordinal::one())))
    }

    fn push_run(&mut self, sign: Sign, count: Ordinal) {
        if count.is_zero() {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.sign == sign => {
                last.count = last.count.add(&count);
            }
            _ => self.runs.push(Run { sign, count }),
        }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn last_run(&self) -> Option<&Run> {
        self.runs.last()
    }

    /// The length `l(s)`: the ordinal sum of run counts, folded left to right.
    pub fn length(&self) -> Ordinal {
        self.runs
            .iter()
            .fold(Ordinal::zero(), |acc, r| acc.add(&r.count))
    }

    /// The sign at position `pos`, or `Undefined` when `pos >= l(s)`.
    pub fn value_at(&self, pos: &Ordinal) -> SignQuery {
        let mut start = Ordinal::zero();
        for run in &self.runs {
            let end = start.add(&run.count);
            if *pos < end {
                return run.sign.into();
            }
            start = end;
        }
        SignQuery::Undefined
    }

    /// The initial segment of length `min(cut, l(s))`; a run crossing the cut
    /// is split with ordinal left subtraction.
    pub fn restrict(&self, cut: &Ordinal) -> SignSeq {
        let mut runs = Vec::new();
        let mut start = Ordinal::zero();
        for run in &self.runs {
            let end = start.add(&run.count);
            if *cut >= end {
                runs.push(run.clone());
                start = end;
            } else {
                let partial = start
                    .left_sub(cut)
                    .expect("run starts at or before the cut");
                if !partial.is_zero() {
                    runs.push(Run {
                        sign: run.sign,
                        count: partial,
                    });
                }
                return SignSeq { runs };
            }
        }
        SignSeq { runs }
    }

    /// Adds one sign at the top of the string.
    pub fn append(&self, sign: Sign) -> SignSeq {
        let mut seq = self.clone();
        seq.push_run(sign, Ordinal::one());
        seq
    }

    /// Extends with `sign` up to total length `target`; identity when
    /// `target = l(s)`, `TooShort` when `target < l(s)`.
    pub fn prolong(&self, sign: Sign, target: &Ordinal) -> Result<SignSeq, SeqError> {
        let len = self.length();
        let extra = len.left_sub(target).map_err(|_| SeqError::TooShort)?;
        let mut seq = self.clone();
        seq.push_run(sign, extra);
        Ok(seq)
    }

    /// The least position where the two sequences differ, with one side
    /// defined and the other undefined counting as a difference; `None` iff
    /// the sequences are equal. Walks the two run lists, never positions.
    pub fn first_difference(&self, other: &SignSeq) -> Option<Ordinal> {
        let mut pos = Ordinal::zero();
        let (mut i, mut j) = (0, 0);
        let mut rem_a: Option<Ordinal> = self.runs.first().map(|r| r.count.clone());
        let mut rem_b: Option<Ordinal> = other.runs.first().map(|r| r.count.clone());
        loop {
            match (&rem_a, &rem_b) {
                (None, None) => return None,
                (None, Some(_)) | (Some(_), None) => return Some(pos),
                (Some(ra), Some(rb)) => {
                    let (sa, sb) = (self.runs[i].sign, other.runs[j].sign);
                    if sa != sb {
                        return Some(pos);
                    }
                    let common = if ra <= rb { ra.clone() } else { rb.clone() };
                    pos = pos.add(&common);
                    let ra = common.left_sub(ra).expect("common <= remainder");
                    let rb = common.left_sub(rb).expect("common <= remainder");
                    rem_a = if ra.is_zero() {
                        i += 1;
                        self.runs.get(i).map(|r| r.count.clone())
                    } else {
                        Some(ra)
                    };
                    rem_b = if rb.is_zero() {
                        j += 1;
                        other.runs.get(j).map(|r| r.count.clone())
                    } else {
                        Some(rb)
                    };
                }
            }
        }
    }

    /// True iff `self` is an initial segment of `s` (equality included).
    pub fn is_initial_segment_of(&self, s: &SignSeq) -> bool {
        s.restrict(&self.length()) == *self
    }

    /// The sequence with every sign flipped; an order anti-isomorphism.
    pub fn mirror(&self) -> SignSeq {
        SignSeq {
            runs: self
                .runs
                .iter()
                .map(|r| Run {
                    sign: r.sign.flip(),
                    count: r.count.clone(),
                })
                .collect(),
        }
    }

    /// The least position `>= from` carrying `sign`, if any.
    pub(crate) fn first_sign_at_or_after(&self, from: &Ordinal, sign: Sign) -> Option<Ordinal> {
        let mut start = Ordinal::zero();
        for run in &self.runs {
            let end = start.add(&run.count);
            if run.sign == sign && *from < end {
                return Some(if *from > start { from.clone() } else { start });
            }
            start = end;
        }
        None
    }
}

impl PartialOrd for SignSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignSeq {
    /// The sign-sequence order: compare at the first difference under
    /// `- < undefined < +`.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.first_difference(other) {
            None => Ordering::Equal,
            Some(pos) => self.value_at(&pos).cmp(&other.value_at(&pos)),
        }
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "0");
        }
        // single signs concatenate ("+-"); explicit counts get spaced out
        // ("+^w -^w") so the count is visually delimited
        let mut prev_bare = true;
        for (i, run) in self.runs.iter().enumerate() {
            let bare = run.count == Ordinal::one();
            if i > 0 && !(bare && prev_bare) {
                write!(f, " ")?;
            }
            write!(f, "{}", run.sign.as_char())?;
            if !bare {
                write!(f, "^{}", run.count)?;
            }
            prev_bare = bare;
        }
        Ok(())
    }
}

/// Parses a surreal at the cursor, stopping at the first character that
/// cannot continue a run.
pub(crate) fn parse_sign_seq(cur: &mut Cursor<'_>) -> Result<SignSeq, ParseError> {
    if cur.peek() == Some(b'0') {
        cur.bump();
        return Ok(SignSeq::empty());
    }
    let mut runs = Vec::new();
    loop {
        cur.skip_ws();
        let sign = match cur.peek() {
            Some(b'+') => Sign::Plus,
            Some(b'-') => Sign::Minus,
            _ => break,
        };
        cur.bump();
        let count = if cur.eat(b'^') {
            let at = cur.pos();
            // a parenthesized count is accepted for readability
            let count = if cur.eat(b'(') {
                let inner = crate::ordinal::parse_ordinal(cur)?;
                cur.expect(b')')?;
                inner
            } else {
                crate::ordinal::parse_ordinal(cur)?
            };
            if count.is_zero() {
                return Err(ParseError::ZeroRun { position: at });
            }
            count
        } else {
            Ordinal::one()
        };
        runs.push((sign, count));
    }
    if runs.is_empty() {
        return Err(ParseError::syntax(cur.pos(), "expected a sign sequence"));
    }
    Ok(SignSeq::from_runs(runs))
}

impl FromStr for SignSeq {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        cur.skip_ws();
        let seq = parse_sign_seq(&mut cur)?;
        cur.skip_ws();
        cur.expect_end()?;
        Ok(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSeq {
        s.parse().unwrap()
    }

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(seq("+^w -^3").length(), ord("w+3"));
        assert_eq!(seq("0").length(), ord("0"));
        assert_eq!(seq("+-+").length(), ord("3"));
    }

    #[test]
    fn value_at_examples() {
        assert_eq!(seq("+^w -^3").value_at(&ord("w+2")), SignQuery::Minus);
        assert_eq!(seq("+^w").value_at(&ord("w")), SignQuery::Undefined);
        assert_eq!(seq("+-").value_at(&ord("0")), SignQuery::Plus);
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(seq("+^w -^3").restrict(&ord("w")), seq("+^w"));
        assert_eq!(seq("+-").restrict(&ord("5")), seq("+-"));
        assert_eq!(seq("+^w -^3").restrict(&ord("0")), SignSeq::empty());
        assert_eq!(seq("+^w -^3").restrict(&ord("w+1")), seq("+^w -"));
        assert_eq!(seq("+^w*2").restrict(&ord("w")), seq("+^w"));
    }

    #[test]
    fn append_examples() {
        assert_eq!(seq("+").append(Sign::Plus), seq("++"));
        assert_eq!(seq("+^w").append(Sign::Minus), seq("+^w -"));
        assert_eq!(SignSeq::empty().append(Sign::Plus), seq("+"));
    }

    #[test]
    fn prolong_examples() {
        assert_eq!(seq("++").prolong(Sign::Minus, &ord("4")), Ok(seq("++--")));
        assert_eq!(
            seq("+^w").prolong(Sign::Minus, &ord("w*2")),
            Ok(seq("+^w -^w"))
        );
        let s = seq("+-+");
        assert_eq!(s.prolong(Sign::Plus, &s.length()), Ok(s.clone()));
        assert_eq!(s.prolong(Sign::Plus, &ord("2")), Err(SeqError::TooShort));
    }

    #[test]
    fn compare_examples() {
        assert!(seq("-") < seq("+"));
        assert!(seq("+-") < seq("+"));
        assert!(seq("+^w -") < seq("+^w"));
        assert!(seq("+") < seq("++"));
        assert_eq!(seq("+-+").cmp(&seq("+-+")), Ordering::Equal);
    }

    #[test]
    fn first_difference_examples() {
        assert_eq!(seq("+^w").first_difference(&seq("+^w -")), Some(ord("w")));
        assert_eq!(seq("+-+").first_difference(&seq("++-")), Some(ord("1")));
        assert_eq!(seq("+-+").first_difference(&seq("+-+")), None);
        // counts absorb: 1 + w = w, so the two notations denote one surreal
        assert_eq!(seq("+ +^w").first_difference(&seq("+^w")), None);
    }

    #[test]
    fn initial_segment_examples() {
        assert!(seq("+^w").is_initial_segment_of(&seq("+^w -^3")));
        assert!(SignSeq::empty().is_initial_segment_of(&seq("+-")));
        assert!(!seq("+-").is_initial_segment_of(&seq("++")));
    }

    #[test]
    fn parse_format_examples() {
        assert_eq!(seq("+++").runs().len(), 1);
        assert_eq!(seq("+++").to_string(), "+^3");
        assert_eq!(seq("+^w -^3").to_string(), "+^w -^3");
        assert_eq!(seq("+ +^w").to_string(), "+^w");
        assert_eq!(seq("+ - +").to_string(), "+-+");
        assert_eq!(seq("+^w --+").to_string(), "+^w -^2 +");
        assert_eq!(SignSeq::empty().to_string(), "0");
        assert_eq!(seq("+^w-^3"), seq("+^w -^3"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "+^0".parse::<SignSeq>(),
            Err(ParseError::ZeroRun { .. })
        ));
        assert!("".parse::<SignSeq>().is_err());
        assert!("+*".parse::<SignSeq>().is_err());
        assert!("x".parse::<SignSeq>().is_err());
    }

    #[test]
    fn mirror_flips_order() {
        let (a, b) = (seq("+^w -"), seq("+^w"));
        assert!(a < b);
        assert!(a.mirror() > b.mirror());
    }
}
