//! Bounding and separating constructions.
//!
//! Everything here reduces to the canonical bounds: `S < z` holds exactly when
//! `sup* S` is at most the restriction of `z` to its own length, and the
//! shortest element separating `S < T` is read off the first difference of the
//! padded prolongments of `sup* S` and `inf* T`.

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::sets::{
    all_greater_than, all_less_than, inf_star, length_bound, sample_elements, set_less, set_max,
    sup_star, SetMax, SurrealSet,
};
use crate::sign_seq::{Sign, SignQuery, SignSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SepError {
    /// The precondition `S < T` fails; carries a violating pair when one was
    /// found by sampling.
    #[error("the sets are not separated: S < T does not hold")]
    NotSeparated {
        witness: Option<(SignSeq, SignSeq)>,
    },
}

/// Which endpoint separates in [`endpoint_separator`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    SupSide,
    InfSide,
    Both,
}

fn require_separated(s: &SurrealSet, t: &SurrealSet) -> Result<(), SepError> {
    if set_less(s, t) {
        return Ok(());
    }
    // look for a concrete violating pair at growing sampling depth
    let mut witness = None;
    'search: for n in 1..=64 {
        for u in sample_elements(s, n) {
            for v in sample_elements(t, n) {
                if u >= v {
                    witness = Some((u, v));
                    break 'search;
                }
            }
        }
    }
    Err(SepError::NotSeparated { witness })
}

/// `S < z`, decided through `sup* S` alone.
pub fn is_strict_upper_bound(s: &SurrealSet, z: &SignSeq) -> bool {
    let bound = sup_star(s);
    let alpha = bound.length();
    bound <= z.restrict(&alpha)
}

/// `S <= z`: either a strict upper bound or the maximum of `S` itself.
pub fn is_weak_upper_bound(s: &SurrealSet, z: &SignSeq) -> bool {
    is_strict_upper_bound(s, z) || set_max(s) == SetMax::Max(z.clone())
}

/// `S < w < T`, checked directly against the descriptors.
pub fn separates(w: &SignSeq, s: &SurrealSet, t: &SurrealSet) -> bool {
    all_less_than(s, w) && all_greater_than(t, w)
}

/// The minus-prolongment of `sup* S` that is long enough to clear every
/// element of `T`; always a separator, rarely the shortest one.
pub fn prolonged_separator(s: &SurrealSet, t: &SurrealSet) -> Result<SignSeq, SepError> {
    require_separated(s, t)?;
    let bound = sup_star(s);
    let alpha = bound.length();
    let mut eta = length_bound(t);
    if alpha > eta {
        eta = alpha;
    }
    Ok(bound
        .prolong(Sign::Minus, &eta)
        .expect("eta is at least the length of sup*"))
}

/// The longer of `sup* S` and `inf* T` separates; on equal lengths both do.
pub fn endpoint_separator(
    s: &SurrealSet,
    t: &SurrealSet,
) -> Result<(Endpoint, SignSeq), SepError> {
    require_separated(s, t)?;
    let lo = sup_star(s);
    let hi = inf_star(t);
    let (la, lb) = (lo.length(), hi.length());
    Ok(if la == lb {
        (Endpoint::Both, lo)
    } else if la > lb {
        (Endpoint::SupSide, lo)
    } else {
        (Endpoint::InfSide, hi)
    })
}

/// The shortest surreal separating `S` and `T`: pad `sup* S` with minuses and
/// `inf* T` with pluses to one past the common length, then cut both at their
/// first difference.
pub fn shortest_separator(s: &SurrealSet, t: &SurrealSet) -> Result<SignSeq, SepError> {
    require_separated(s, t)?;
    let lo = sup_star(s);
    let hi = inf_star(t);
    let mut eps = lo.length();
    let lb = hi.length();
    if lb > eps {
        eps = lb;
    }
    let target = eps.succ();
    let lo_hat = lo.prolong(Sign::Minus, &target).expect("target >= length");
    let hi_hat = hi.prolong(Sign::Plus, &target).expect("target >= length");
    let gamma = lo_hat
        .first_difference(&hi_hat)
        .expect("padded endpoints end in opposite signs");
    Ok(lo_hat.restrict(&gamma))
}

/// The four-case ordered separator of a pair of surreals.
pub fn sep(s: &SignSeq, t: &SignSeq) -> SignSeq {
    let Some(gamma) = s.first_difference(t) else {
        return s.clone();
    };
    let at_s = s.value_at(&gamma);
    let at_t = t.value_at(&gamma);
    if at_s != SignQuery::Undefined && at_t != SignQuery::Undefined {
        // both defined and distinct: cut at the first difference
        s.restrict(&gamma)
    } else if at_s == SignQuery::Undefined {
        // t prolongs s; cut just before the first + above l(s), if any
        match t.first_sign_at_or_after(&gamma, Sign::Plus) {
            Some(eps) => t.restrict(&eps),
            None => t.clone(),
        }
    } else {
        // s prolongs t; symmetric with minus
        match s.first_sign_at_or_after(&gamma, Sign::Minus) {
            Some(eps) => s.restrict(&eps),
            None => s.clone(),
        }
    }
}

/// The shortest separator obtained as `sep(sup* S, inf* T)`; agrees exactly
/// with [`shortest_separator`].
pub fn shortest_separator_via_sep(s: &SurrealSet, t: &SurrealSet) -> Result<SignSeq, SepError> {
    require_separated(s, t)?;
    Ok(sep(&sup_star(s), &inf_star(t)))
}

/// Exposes the epsilon of the length corollary: separators may be cut at the
/// longer of the two canonical bound lengths.
pub fn separation_length(s: &SurrealSet, t: &SurrealSet) -> Ordinal {
    let a = sup_star(s).length();
    let b = inf_star(t).length();
    if a >= b {
        a
    } else {
        b
    }
}
