//! Test-only oracles that share no code path with the library internals
//! they check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use qramsey::weyl::{Generator, Monomial, OperatorPoly, Scalar};

/// A polynomial as a sum of words in the generators, in written order.
pub type Words = Vec<(Scalar, Vec<Generator>)>;

fn axis_rank(g: Generator) -> usize {
    g.slot()
}

/// Normal-orders a sum of words by repeated adjacent swaps. The only
/// non-commuting swap is `p_i x_i = x_i p_i − iħ`.
pub fn normal_order_by_swaps(words: Words) -> OperatorPoly {
    let mut pending = words;
    let mut done: BTreeMap<[u32; 6], Scalar> = BTreeMap::new();
    while let Some((coef, mut word)) = pending.pop() {
        if coef.is_zero() {
            continue;
        }
        let out_of_order = (0..word.len().saturating_sub(1)).find(|&i| axis_rank(word[i]) > axis_rank(word[i + 1]));
        match out_of_order {
            None => {
                let mut e = [0u32; 6];
                for g in &word {
                    e[g.slot()] += 1;
                }
                let slot = done.entry(e).or_default();
                *slot = &*slot + &coef;
            }
            Some(i) => {
                let (a, b) = (word[i], word[i + 1]);
                let same_axis_pair = matches!(
                    (a, b),
                    (Generator::Momentum(p), Generator::Coordinate(x)) if p == x
                );
                if same_axis_pair {
                    let mut contracted = word.clone();
                    contracted.drain(i..i + 2);
                    let minus_i_hbar = -(Scalar::i() * Scalar::hbar_pow(1));
                    pending.push((&coef * &minus_i_hbar, contracted));
                }
                word.swap(i, i + 1);
                pending.push((coef, word));
            }
        }
    }
    done.into_iter()
        .map(|(e, s)| OperatorPoly::term(s, Monomial::new(e)))
        .fold(OperatorPoly::zero(), |acc, t| &acc + &t)
}

/// Expands a normal-ordered polynomial back into words.
pub fn to_words(p: &OperatorPoly) -> Words {
    p.terms()
        .map(|(m, s)| {
            let word = Generator::ALL
                .iter()
                .flat_map(|g| std::iter::repeat_n(*g, m.exponent(*g) as usize))
                .collect();
            (s.clone(), word)
        })
        .collect()
}

/// Product by concatenating words, then swap-normal-ordering.
pub fn mul_by_swaps(a: &OperatorPoly, b: &OperatorPoly) -> OperatorPoly {
    let mut words = Words::new();
    for (sa, wa) in to_words(a) {
        for (sb, wb) in to_words(b) {
            let mut w = wa.clone();
            w.extend(wb);
            words.push((&sa * &sb, w));
        }
    }
    normal_order_by_swaps(words)
}

pub fn word(gens: &[Generator]) -> OperatorPoly {
    normal_order_by_swaps(vec![(Scalar::one(), gens.to_vec())])
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3, -3i64..=3, -1i32..=1).prop_map(|(re, den, im, e)| {
        let re = Scalar::rational(re, den);
        let im = Scalar::rational(im, den) * Scalar::i();
        (re + im) * Scalar::hbar_pow(e)
    })
}

fn monomial_strategy(max_degree: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0usize..6, 0..=max_degree as usize).prop_map(|slots| {
        let mut e = [0u32; 6];
        for s in slots {
            e[s] += 1;
        }
        Monomial::new(e)
    })
}

/// Random polynomials with degree ≤ `max_degree` and ≤ `max_terms` terms.
pub fn poly_strategy(max_degree: u32, max_terms: usize) -> impl Strategy<Value = OperatorPoly> {
    proptest::collection::vec((scalar_strategy(), monomial_strategy(max_degree)), 1..=max_terms).prop_map(|terms| {
        terms
            .into_iter()
            .fold(OperatorPoly::zero(), |acc, (s, m)| &acc + &OperatorPoly::term(s, m))
    })
}

/// Hermitian part `(A + A†)/2`.
pub fn hermitian_part(a: &OperatorPoly) -> OperatorPoly {
    (a + &a.adjoint()).scale(&Scalar::rational(1, 2))
}

/// All monochromatic cliques (size ≥ 2) that no vertex can extend, found by
/// enumerating every vertex subset.
pub fn brute_force_maximal_cliques(n: usize, red: impl Fn(usize, usize) -> bool, want_red: bool) -> Vec<Vec<usize>> {
    let is_clique = |mask: u32| {
        (0..n).all(|i| (0..n).all(|j| i >= j || mask >> i & 1 == 0 || mask >> j & 1 == 0 || red(i, j) == want_red))
    };
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() < 2 || !is_clique(mask) {
            continue;
        }
        let extendable = (0..n).any(|v| mask >> v & 1 == 0 && is_clique(mask | 1 << v));
        if !extendable {
            out.push((0..n).filter(|v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}
