//! Naive reference implementations used as ground truth at desk scale.
//!
//! Everything here works positionally on finite sign lists and shares no
//! logic with the run-encoded modules; that independence is the point.

use std::cmp::Ordering;

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::sets::ChainSpec;
use crate::sign_seq::{Sign, SignQuery, SignSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// No separator exists within the search bound.
    #[error("no separator found within the length bound")]
    NoneFound,
}

/// A finite sign sequence, stored position by position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FlatSeq {
    pub signs: Vec<Sign>,
}

impl FlatSeq {
    pub fn new(signs: Vec<Sign>) -> FlatSeq {
        FlatSeq { signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn to_sign_seq(&self) -> SignSeq {
        SignSeq::from_signs(&self.signs)
    }

    /// Converts a run-encoded surreal back to positional form; `None` for
    /// transfinite sequences.
    pub fn from_sign_seq(seq: &SignSeq) -> Option<FlatSeq> {
        let mut signs = Vec::new();
        for run in seq.runs() {
            let n = run.count.as_finite()?;
            signs.extend(std::iter::repeat_n(run.sign, n as usize));
        }
        Some(FlatSeq { signs })
    }

    fn is_prefix_of(&self, other: &FlatSeq) -> bool {
        other.signs.len() >= self.signs.len() && other.signs[..self.signs.len()] == self.signs[..]
    }
}

/// All sign lists of length up to `max_len`, ordered by length and then
/// lexicographically with `-` before `+`.
pub fn enumerate_surreals(max_len: usize) -> Vec<FlatSeq> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for word in 0u64..(1 << len) {
            let signs = (0..len)
                .map(|i| {
                    // most significant bit first for lexicographic order
                    if word >> (len - 1 - i) & 1 == 1 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            out.push(FlatSeq { signs });
        }
    }
    out
}

fn rank(sign: Option<Sign>) -> u8 {
    match sign {
        Some(Sign::Minus) => 0,
        None => 1,
        Some(Sign::Plus) => 2,
    }
}

/// The sign-sequence order evaluated character by character, with the
/// convention `- < undefined < +`.
pub fn naive_compare(s: &FlatSeq, t: &FlatSeq) -> Ordering {
    let positions = s.len().max(t.len());
    for i in 0..positions {
        let a = s.signs.get(i).copied();
        let b = t.signs.get(i).copied();
        if a != b {
            return rank(a).cmp(&rank(b));
        }
    }
    Ordering::Equal
}

fn naive_max(set: &[FlatSeq]) -> Option<FlatSeq> {
    let mut best: Option<&FlatSeq> = None;
    for s in set {
        match best {
            None => best = Some(s),
            Some(b) => {
                if naive_compare(s, b) == Ordering::Greater {
                    best = Some(s);
                }
            }
        }
    }
    best.cloned()
}

/// sup* by the literal definition; a finite nonempty set always takes the
/// maximum branch.
pub fn naive_sup_star(set: &[FlatSeq]) -> FlatSeq {
    match naive_max(set) {
        None => FlatSeq::default(),
        Some(mut max) => {
            max.signs.push(Sign::Plus);
            max
        }
    }
}

fn separates_naively(w: &FlatSeq, s: &[FlatSeq], t: &[FlatSeq]) -> bool {
    s.iter().all(|u| naive_compare(u, w) == Ordering::Less)
        && t.iter().all(|v| naive_compare(w, v) == Ordering::Less)
}

/// Exhaustive search for the shortest separator of two finite sets. Checks
/// that the minimum-length separator is unique and that every longer
/// separator within the bound extends it.
pub fn brute_min_separator(
    s: &[FlatSeq],
    t: &[FlatSeq],
    bound: usize,
) -> Result<FlatSeq, OracleError> {
    let separators: Vec<FlatSeq> = enumerate_surreals(bound)
        .into_iter()
        .filter(|w| separates_naively(w, s, t))
        .collect();
    let Some(shortest) = separators.first().cloned() else {
        return Err(OracleError::NoneFound);
    };
    let at_min = separators
        .iter()
        .filter(|w| w.len() == shortest.len())
        .count();
    assert_eq!(at_min, 1, "separator of minimal length must be unique");
    for w in &separators {
        assert!(
            shortest.is_prefix_of(w),
            "every separator must prolong the shortest one"
        );
    }
    Ok(shortest)
}

/// Evaluates the tail-stabilization clause of the sup* definition on one
/// increasing chain: the value at `pos` once the chain's restrictions have
/// stabilized, or `Undefined` at and beyond the limit length.
pub fn stabilization_probe(c: &ChainSpec, pos: &Ordinal) -> SignQuery {
    assert!(c.is_increasing(), "probe is defined for increasing chains");
    let base_len = c.base.length();
    if *pos >= base_len.add(&Ordinal::omega()) {
        return SignQuery::Undefined;
    }
    // pick an index whose element is defined past pos
    let index = if *pos < base_len {
        1
    } else {
        base_len
            .left_sub(pos)
            .expect("pos >= base length")
            .as_finite()
            .expect("pos below the limit differs from the base by a finite amount")
            + 1
    };
    let here = c.element(index);
    let next = c.element(index + 1);
    let through = pos.succ();
    assert_eq!(
        here.restrict(&through),
        next.restrict(&through),
        "successive elements must agree below the limit"
    );
    here.value_at(pos)
}
