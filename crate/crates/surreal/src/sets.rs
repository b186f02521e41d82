//! Finitely described sets of surreals and the canonical bounds sup*/inf*.
//!
//! A set descriptor is a finite list of surreals plus a finite list of
//! omega-indexed chains `{base ^ tail^i : i < omega}`. Chains with tail `+`
//! are strictly increasing with no maximum; tail `-` symmetric.
//!
//! Majorization questions against an increasing chain are decided through its
//! limit `L = base ^ tail^omega`: a surreal `z` lies above every chain element
//! exactly when `z >= L` or `L` is an initial segment of `z`. The second
//! disjunct is essential: `z` may sit strictly between the whole chain and its
//! limit (for the chain of all `+^i`, take `z = +^w --`), so the naive rule
//! `z >= L` alone would misclassify such a `z`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ordinal::{Classification, Ordinal};
use crate::parse::{Cursor, ParseError};
use crate::sign_seq::{parse_sign_seq, Sign, SignSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    /// The surreal ends in a tail of minuses and is no sup* of anything.
    #[error("a surreal with a minus tail cannot be obtained as sup*")]
    MinusTail,
    /// The length is a limit not of the form `d + w`; a witness exists
    /// mathematically but is not expressible as an omega-chain descriptor.
    #[error("limit length is not of the form d+w; no omega-chain witness")]
    CofinalityGap,
}

/// The omega-indexed family `{base ^ tail^i : i < omega}`; index 0 is `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub base: SignSeq,
    pub tail: Sign,
}

impl ChainSpec {
    pub fn new(base: SignSeq, tail: Sign) -> ChainSpec {
        ChainSpec { base, tail }
    }

    pub fn is_increasing(&self) -> bool {
        self.tail == Sign::Plus
    }

    /// The element at index `i`.
    pub fn element(&self, i: u64) -> SignSeq {
        let mut runs: Vec<(Sign, Ordinal)> = self
            .base
            .runs()
            .iter()
            .map(|r| (r.sign, r.count.clone()))
            .collect();
        runs.push((self.tail, Ordinal::finite(i)));
        SignSeq::from_runs(runs)
    }

    /// The s-limit of the family: `base` with an omega-block of `tail` on top.
    /// For an increasing chain this is its sup*, for a decreasing one its inf*.
    pub fn limit(&self) -> SignSeq {
        let mut runs: Vec<(Sign, Ordinal)> = self
            .base
            .runs()
            .iter()
            .map(|r| (r.sign, r.count.clone()))
            .collect();
        runs.push((self.tail, Ordinal::omega()));
        SignSeq::from_runs(runs)
    }

    pub fn mirror(&self) -> ChainSpec {
        ChainSpec {
            base: self.base.mirror(),
            tail: self.tail.flip(),
        }
    }
}

/// A set of surreals: finitely many elements plus finitely many chains.
/// Duplication in the description is irrelevant; semantics are extensional.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurrealSet {
    pub elements: Vec<SignSeq>,
    pub chains: Vec<ChainSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetMax {
    Empty,
    NoMax,
    Max(SignSeq),
}

impl SurrealSet {
    pub fn empty() -> SurrealSet {
        SurrealSet::default()
    }

    pub fn of_elements<I>(elements: I) -> SurrealSet
    where
        I: IntoIterator<Item = SignSeq>,
    {
        SurrealSet {
            elements: elements.into_iter().collect(),
            chains: Vec::new(),
        }
    }

    pub fn of_chain(chain: ChainSpec) -> SurrealSet {
        SurrealSet {
            elements: Vec::new(),
            chains: vec![chain],
        }
    }

    pub fn is_empty_description(&self) -> bool {
        self.elements.is_empty() && self.chains.is_empty()
    }

    pub fn mirror(&self) -> SurrealSet {
        SurrealSet {
            elements: self.elements.iter().map(SignSeq::mirror).collect(),
            chains: self.chains.iter().map(ChainSpec::mirror).collect(),
        }
    }

    /// Attained candidates for the maximum: the finite elements and the bases
    /// of decreasing chains (an increasing chain never contains its own top).
    fn attained_candidates(&self) -> impl Iterator<Item = &SignSeq> {
        self.elements.iter().chain(
            self.chains
                .iter()
                .filter(|c| !c.is_increasing())
                .map(|c| &c.base),
        )
    }

    fn increasing_chains(&self) -> impl Iterator<Item = &ChainSpec> {
        self.chains.iter().filter(|c| c.is_increasing())
    }
}

/// True iff `z` is at or above every element of the increasing chain `c`.
/// Since no chain element equals the limit or prolongs it, this coincides
/// with `z` being strictly above every element.
fn above_increasing_chain(z: &SignSeq, c: &ChainSpec) -> bool {
    debug_assert!(c.is_increasing());
    let limit = c.limit();
    *z >= limit || limit.is_initial_segment_of(z)
}

/// True iff `z` is strictly below every element of the decreasing chain `d`.
fn below_decreasing_chain(z: &SignSeq, d: &ChainSpec) -> bool {
    debug_assert!(!d.is_increasing());
    let limit = d.limit();
    *z <= limit || limit.is_initial_segment_of(z)
}

/// True iff the tail of `c` eventually exceeds every element of `d` (both
/// increasing). Equivalently, no element of `d` lies at or above the whole
/// of `c`. Chains with equal limits dominate each other.
fn dominates(c: &ChainSpec, d: &ChainSpec) -> bool {
    debug_assert!(c.is_increasing() && d.is_increasing());
    let (lc, ld) = (c.limit(), d.limit());
    // some d_j >= limit(c) would contradict limit(c) being above all of d
    let no_escape_above = lc >= ld || ld.is_initial_segment_of(&lc);
    // some d_j prolonging limit(c) exists iff limit(c) is a segment of d's base
    let no_escape_segment = !lc.is_initial_segment_of(&d.base);
    no_escape_above && no_escape_segment
}

/// Maximum of the denoted set under the sign-sequence order.
pub fn set_max(s: &SurrealSet) -> SetMax {
    if s.is_empty_description() {
        return SetMax::Empty;
    }
    let best = s.attained_candidates().max().cloned();
    match best {
        None => SetMax::NoMax,
        Some(best) => {
            if s.increasing_chains().all(|c| above_increasing_chain(&best, c)) {
                SetMax::Max(best)
            } else {
                SetMax::NoMax
            }
        }
    }
}

pub fn set_min(s: &SurrealSet) -> SetMax {
    match set_max(&s.mirror()) {
        SetMax::Max(u) => SetMax::Max(u.mirror()),
        other => other,
    }
}

/// True iff every denoted element of `s` is strictly below `z`.
pub fn all_less_than(s: &SurrealSet, z: &SignSeq) -> bool {
    s.elements.iter().all(|e| e < z)
        && s.chains.iter().all(|c| {
            if c.is_increasing() {
                above_increasing_chain(z, c)
            } else {
                // base is the maximum of a decreasing chain
                c.base < *z
            }
        })
}

/// True iff every denoted element of `t` is strictly above `z`.
pub fn all_greater_than(t: &SurrealSet, z: &SignSeq) -> bool {
    all_less_than(&t.mirror(), &z.mirror())
}

/// `S < T`: every element of `S` is below every element of `T`.
pub fn set_less(s: &SurrealSet, t: &SurrealSet) -> bool {
    // elements and increasing-chain bases are the pointwise minima of their
    // descriptors in T
    let t_minima = t
        .elements
        .iter()
        .chain(t.increasing_chains().map(|c| &c.base));
    for v in t_minima {
        if !all_less_than(s, v) {
            return false;
        }
    }
    // decreasing chains in T have no minimum; check each S descriptor
    for d in t.chains.iter().filter(|c| !c.is_increasing()) {
        let s_maxima = s
            .elements
            .iter()
            .chain(s.chains.iter().filter(|c| !c.is_increasing()).map(|c| &c.base));
        for u in s_maxima {
            if !below_decreasing_chain(u, d) {
                return false;
            }
        }
        for c in s.increasing_chains() {
            let (lc, ld) = (c.limit(), d.limit());
            // either the whole of c sits below d's base, or d's tail stays
            // above c's limit
            let below = lc.is_initial_segment_of(&d.base)
                || lc <= ld
                || ld.is_initial_segment_of(&lc);
            if !below {
                return false;
            }
        }
    }
    true
}

/// All finite elements plus the first `n` members of every chain.
pub fn sample_elements(s: &SurrealSet, n: u64) -> Vec<SignSeq> {
    let mut out = s.elements.clone();
    for c in &s.chains {
        for i in 0..n {
            out.push(c.element(i));
        }
    }
    out
}

/// The canonical bounding element: `max ^ +` when the maximum is attained,
/// the empty sequence for the empty set, and otherwise the limit of a chain
/// whose tail is cofinal in the whole set.
pub fn sup_star(s: &SurrealSet) -> SignSeq {
    match set_max(s) {
        SetMax::Empty => SignSeq::empty(),
        SetMax::Max(u) => u.append(Sign::Plus),
        SetMax::NoMax => {
            let chains: Vec<&ChainSpec> = s.increasing_chains().collect();
            'candidates: for c in &chains {
                for x in s.attained_candidates() {
                    if above_increasing_chain(x, c) {
                        continue 'candidates;
                    }
                }
                for d in &chains {
                    if !dominates(c, d) {
                        continue 'candidates;
                    }
                }
                return c.limit();
            }
            unreachable!("a described set without maximum has a cofinal chain")
        }
    }
}

pub fn inf_star(t: &SurrealSet) -> SignSeq {
    sup_star(&t.mirror()).mirror()
}

/// A strict upper bound for the lengths of all denoted elements:
/// `l(e)+1` per finite element, `l(base)+w` per chain, `0` for the empty set.
pub fn length_bound(s: &SurrealSet) -> Ordinal {
    let mut bound = Ordinal::zero();
    for e in &s.elements {
        let b = e.length().succ();
        if b > bound {
            bound = b;
        }
    }
    for c in &s.chains {
        let b = c.base.length().add(&Ordinal::omega());
        if b > bound {
            bound = b;
        }
    }
    bound
}

/// Inverts sup*: a set `S` with `sup_star(S) = w`, when one is expressible.
pub fn witness_set(w: &SignSeq) -> Result<SurrealSet, SetError> {
    let Some(last) = w.last_run() else {
        return Ok(SurrealSet::empty());
    };
    if last.sign == Sign::Minus {
        return Err(SetError::MinusTail);
    }
    let len = w.length();
    match len.classify() {
        Classification::Successor => {
            let cut = len.pred().expect("successor length");
            Ok(SurrealSet::of_elements([w.restrict(&cut)]))
        }
        Classification::Limit => {
            // the final run count is a limit; peel one omega off it if possible
            match last.count.strip_final_omega() {
                None => Err(SetError::CofinalityGap),
                Some(kept) => {
                    // cut after all earlier runs plus the kept part of the last
                    let prefix = w
                        .runs()
                        .iter()
                        .take(w.runs().len() - 1)
                        .fold(Ordinal::zero(), |acc, r| acc.add(&r.count));
                    let base = w.restrict(&prefix.add(&kept));
                    Ok(SurrealSet::of_chain(ChainSpec::new(base, Sign::Plus)))
                }
            }
        }
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chain({};{})", self.base, self.tail.as_char())
    }
}

impl fmt::Display for SurrealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty_description() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        for e in &self.elements {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
            first = false;
        }
        for c in &self.chains {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
            first = false;
        }
        Ok(())
    }
}

fn parse_item(cur: &mut Cursor<'_>, set: &mut SurrealSet) -> Result<(), ParseError> {
    if cur.eat_str("chain(") {
        let base = parse_sign_seq(cur)?;
        cur.skip_ws();
        cur.expect(b';')?;
        cur.skip_ws();
        let tail = match cur.bump() {
            Some(b'+') => Sign::Plus,
            Some(b'-') => Sign::Minus,
            _ => return Err(ParseError::syntax(cur.pos(), "expected '+' or '-'")),
        };
        cur.expect(b')')?;
        set.chains.push(ChainSpec::new(base, tail));
    } else {
        set.elements.push(parse_sign_seq(cur)?);
    }
    Ok(())
}

impl FromStr for SurrealSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed == "{}" {
            return Ok(SurrealSet::empty());
        }
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .unwrap_or(trimmed);
        let mut cur = Cursor::new(inner);
        let mut set = SurrealSet::empty();
        loop {
            cur.skip_ws();
            parse_item(&mut cur, &mut set)?;
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            cur.expect(b',')?;
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSeq {
        s.parse().unwrap()
    }

    fn set(s: &str) -> SurrealSet {
        s.parse().unwrap()
    }

    fn chain(base: &str, tail: Sign) -> ChainSpec {
        ChainSpec::new(seq(base), tail)
    }

    #[test]
    fn chain_limit_examples() {
        assert_eq!(chain("0", Sign::Plus).limit(), seq("+^w"));
        assert_eq!(chain("+^w", Sign::Minus).limit(), seq("+^w -^w"));
        assert_eq!(chain("+^3", Sign::Plus).limit(), seq("+^w"));
    }

    #[test]
    fn sample_elements_examples() {
        assert_eq!(sample_elements(&set("-, +"), 5), vec![seq("-"), seq("+")]);
        assert_eq!(
            sample_elements(&set("chain(0;+)"), 3),
            vec![SignSeq::empty(), seq("+"), seq("++")]
        );
        assert!(sample_elements(&SurrealSet::empty(), 3).is_empty());
    }

    #[test]
    fn set_max_examples() {
        assert_eq!(set_max(&set("-, +")), SetMax::Max(seq("+")));
        assert_eq!(set_max(&set("chain(0;+)")), SetMax::NoMax);
        // an attained element strictly between a chain and its limit is
        // still the maximum of the union
        assert_eq!(
            set_max(&set("+^w --, chain(0;+)")),
            SetMax::Max(seq("+^w --"))
        );
        assert_eq!(set_max(&SurrealSet::empty()), SetMax::Empty);
        assert_eq!(set_max(&set("chain(+^w;-)")), SetMax::Max(seq("+^w")));
    }

    #[test]
    fn all_less_than_examples() {
        assert!(all_less_than(&set("-"), &SignSeq::empty()));
        assert!(all_less_than(&set("chain(0;+)"), &seq("+^w")));
        assert!(!all_less_than(&set("chain(0;+)"), &seq("+^5")));
        // between the chain and its limit
        assert!(all_less_than(&set("chain(0;+)"), &seq("+^w --")));
        // equal to a chain element
        assert!(!all_less_than(&set("chain(0;+)"), &seq("+")));
        assert!(!all_less_than(&set("chain(0;+)"), &SignSeq::empty()));
    }

    #[test]
    fn all_greater_than_examples() {
        assert!(all_greater_than(&set("+"), &SignSeq::empty()));
        assert!(all_greater_than(&set("chain(+^w;-)"), &seq("+^w -^w")));
        assert!(all_greater_than(&SurrealSet::empty(), &seq("+")));
        assert!(!all_greater_than(&set("chain(+^w;-)"), &seq("+^w")));
    }

    #[test]
    fn set_less_examples() {
        assert!(set_less(&set("-"), &set("+")));
        assert!(set_less(&set("chain(0;+)"), &set("chain(+^w;-)")));
        assert!(!set_less(&set("+"), &set("+")));
    }

    #[test]
    fn sup_star_examples() {
        assert_eq!(sup_star(&SurrealSet::empty()), SignSeq::empty());
        assert_eq!(sup_star(&set("-, +")), seq("++"));
        assert_eq!(sup_star(&set("chain(0;+)")), seq("+^w"));
        // the set with max between chain and limit: sup* = max ^ +
        assert_eq!(sup_star(&set("+^w --, chain(0;+)")), seq("+^w --+"));
    }

    #[test]
    fn sup_star_picks_cofinal_chain() {
        // chain(+^w --;+) sits entirely between chain(0;+) and its limit,
        // so the second chain is the cofinal one
        let s = set("chain(0;+), chain(+^w --;+)");
        assert_eq!(set_max(&s), SetMax::NoMax);
        assert_eq!(sup_star(&s), seq("+^w --+^w"));
    }

    #[test]
    fn inf_star_examples() {
        assert_eq!(inf_star(&set("+")), seq("+-"));
        assert_eq!(inf_star(&set("chain(+^w;-)")), seq("+^w -^w"));
        assert_eq!(inf_star(&SurrealSet::empty()), SignSeq::empty());
    }

    #[test]
    fn length_bound_examples() {
        assert_eq!(length_bound(&set("+, ++")), "3".parse().unwrap());
        assert_eq!(length_bound(&set("chain(+^w;-)")), "w*2".parse().unwrap());
        assert_eq!(length_bound(&SurrealSet::empty()), Ordinal::zero());
    }

    #[test]
    fn witness_set_examples() {
        assert_eq!(
            witness_set(&seq("+^w")),
            Ok(SurrealSet::of_chain(chain("0", Sign::Plus)))
        );
        assert_eq!(
            witness_set(&seq("++")),
            Ok(SurrealSet::of_elements([seq("+")]))
        );
        assert_eq!(witness_set(&seq("+-")), Err(SetError::MinusTail));
        assert_eq!(witness_set(&seq("+^(w^2)")), Err(SetError::CofinalityGap));
        assert_eq!(witness_set(&SignSeq::empty()), Ok(SurrealSet::empty()));
        assert_eq!(
            witness_set(&seq("+^w -^3 +^w")),
            Ok(SurrealSet::of_chain(chain("+^w -^3", Sign::Plus)))
        );
    }

    #[test]
    fn set_notation_round_trip() {
        for text in ["{}", "+^w -^3", "-, +, chain(+^w;-)", "chain(0;+)"] {
            let parsed = set(text);
            assert_eq!(set(&parsed.to_string()), parsed);
        }
    }
}
