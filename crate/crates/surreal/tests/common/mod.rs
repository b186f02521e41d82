//! Shared generators and helpers for the integration suites.

#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;

use surreal::sets::ChainSpec;
use surreal::{sup_star, Ordinal, Sign, SignSeq, SurrealSet};

pub fn assert_canonical(s: &SignSeq) {
    for run in s.runs() {
        assert!(!run.count.is_zero(), "zero run count in {:?}", s);
    }
    for pair in s.runs().windows(2) {
        assert_ne!(pair[0].sign, pair[1].sign, "adjacent equal signs in {:?}", s);
    }
}

/// Positions where order comparisons of the given sequences can change:
/// 0, every run boundary, boundary+1, boundary+omega, and the lengths with
/// their neighbours.
pub fn sample_positions(seqs: &[&SignSeq]) -> Vec<Ordinal> {
    let mut out = vec![Ordinal::zero()];
    for s in seqs {
        let mut prefix = Ordinal::zero();
        for run in s.runs() {
            prefix = prefix.add(&run.count);
            out.push(prefix.clone());
            out.push(prefix.succ());
            out.push(prefix.add(&Ordinal::omega()));
        }
        let len = s.length();
        if let Some(pred) = len.pred() {
            out.push(pred);
        }
        out.push(len.succ());
        out.push(len);
    }
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// proptest strategies

pub fn ordinal_strategy(depth: u32) -> BoxedStrategy<Ordinal> {
    if depth == 0 {
        (0u64..=9).prop_map(Ordinal::finite).boxed()
    } else {
        prop::collection::vec((ordinal_strategy(depth - 1), 1u64..=9), 0..=3)
            .prop_map(|terms| {
                terms
                    .into_iter()
                    .fold(Ordinal::zero(), |acc, (e, c)| acc.add(&Ordinal::power(e, c)))
            })
            .boxed()
    }
}

fn count_strategy() -> impl Strategy<Value = Ordinal> {
    ordinal_strategy(1).prop_filter("run counts are positive", |o| !o.is_zero())
}

pub fn sign_strategy() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Minus), Just(Sign::Plus)]
}

pub fn seq_strategy() -> impl Strategy<Value = SignSeq> {
    (
        sign_strategy(),
        prop::collection::vec(count_strategy(), 0..=4),
    )
        .prop_map(|(start, counts)| {
            let mut sign = start;
            SignSeq::from_runs(counts.into_iter().map(|c| {
                let s = sign;
                sign = sign.flip();
                (s, c)
            }))
        })
}

pub fn chain_strategy() -> impl Strategy<Value = ChainSpec> {
    (seq_strategy(), sign_strategy()).prop_map(|(base, tail)| ChainSpec::new(base, tail))
}

pub fn set_strategy() -> impl Strategy<Value = SurrealSet> {
    (
        prop::collection::vec(seq_strategy(), 0..=3),
        prop::collection::vec(chain_strategy(), 0..=2),
    )
        .prop_map(|(elements, chains)| SurrealSet { elements, chains })
}

// ---------------------------------------------------------------------------
// seeded plain-rand generators for the large sweeps

pub fn rand_ordinal<R: Rng>(rng: &mut R, depth: u32) -> Ordinal {
    let nterms = rng.gen_range(0..=2);
    let mut out = Ordinal::zero();
    for _ in 0..nterms {
        let exponent = if depth == 0 {
            Ordinal::finite(rng.gen_range(0..=2))
        } else {
            rand_ordinal(rng, depth - 1)
        };
        out = out.add(&Ordinal::power(exponent, rng.gen_range(1..=9)));
    }
    if depth == 0 || rng.gen_bool(0.4) {
        out = out.add(&Ordinal::finite(rng.gen_range(0..=9)));
    }
    out
}

pub fn rand_count<R: Rng>(rng: &mut R) -> Ordinal {
    loop {
        let c = rand_ordinal(rng, 1);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn rand_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn rand_seq<R: Rng>(rng: &mut R) -> SignSeq {
    let nruns = rng.gen_range(0..=4);
    let mut sign = rand_sign(rng);
    let mut runs = Vec::new();
    for _ in 0..nruns {
        runs.push((sign, rand_count(rng)));
        sign = sign.flip();
    }
    SignSeq::from_runs(runs)
}

/// A random sequence with all counts finite.
pub fn rand_finite_seq<R: Rng>(rng: &mut R, max_len: usize) -> SignSeq {
    let len = rng.gen_range(0..=max_len);
    let signs: Vec<Sign> = (0..len).map(|_| rand_sign(rng)).collect();
    SignSeq::from_signs(&signs)
}

pub fn rand_chain<R: Rng>(rng: &mut R) -> ChainSpec {
    ChainSpec::new(rand_seq(rng), rand_sign(rng))
}

pub fn rand_set<R: Rng>(rng: &mut R) -> SurrealSet {
    let elements = (0..rng.gen_range(0..=3)).map(|_| rand_seq(rng)).collect();
    let chains = (0..rng.gen_range(0..=2)).map(|_| rand_chain(rng)).collect();
    SurrealSet { elements, chains }
}

/// A random pair with `S < T` by construction: every descriptor of `T` is
/// grown above `sup* S`.
pub fn rand_separated_pair<R: Rng>(rng: &mut R) -> (SurrealSet, SurrealSet) {
    let left = rand_set(rng);
    let anchor = sup_star(&left);
    let above = |rng: &mut R| {
        // anchor ^ + ^ arbitrary suffix is above everything in S
        let mut runs: Vec<(Sign, Ordinal)> = anchor
            .runs()
            .iter()
            .map(|r| (r.sign, r.count.clone()))
            .collect();
        runs.push((Sign::Plus, Ordinal::one()));
        for run in rand_seq(rng).runs() {
            runs.push((run.sign, run.count.clone()));
        }
        SignSeq::from_runs(runs)
    };
    let mut right = SurrealSet::empty();
    let items = rng.gen_range(1..=3);
    for _ in 0..items {
        match rng.gen_range(0..4) {
            // sup* S itself is above every element of S
            0 => right.elements.push(anchor.clone()),
            1 => right.elements.push(above(rng)),
            2 => right
                .chains
                .push(ChainSpec::new(above(rng), Sign::Plus)),
            // a decreasing chain stays above S when its limit does
            _ => right
                .chains
                .push(ChainSpec::new(above(rng), Sign::Minus)),
        }
    }
    (left, right)
}
