use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use nilmult_core::magnus::{group_commutator, lcs_valuation};
use nilmult_core::{
    chi, compare_commutators, enumerate_hall_basis, eval_commutator, integer_rank, is_basic, mobius,
    nilpotent_multiplier_rank, Commutator, CommutatorEvaluator, MagnusElement, Valuation,
};

fn commutator_strategy(letters: u32) -> impl Strategy<Value = Commutator> {
    let leaf = (1..=letters).prop_map(|i| Commutator::generator(i).unwrap());
    leaf.prop_recursive(4, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Commutator::pair(l, r))
    })
}

/// Lyndon words of length `w` over `d` letters: strictly smaller than every
/// proper rotation. Their number is an independent route to the Witt count.
fn count_lyndon_words(w: u32, d: u32) -> u64 {
    let total = (d as u64).pow(w);
    let mut count = 0;
    for code in 0..total {
        let mut word = vec![0u32; w as usize];
        let mut rest = code;
        for slot in word.iter_mut().rev() {
            *slot = (rest % d as u64) as u32;
            rest /= d as u64;
        }
        let is_lyndon = (1..w as usize).all(|k| {
            let rotated: Vec<u32> = word[k..].iter().chain(&word[..k]).copied().collect();
            word < rotated
        });
        if is_lyndon {
            count += 1;
        }
    }
    count
}

#[test]
fn witt_counts_match_lyndon_oracle() {
    for d in 1..=3 {
        for w in 1..=8 {
            assert_eq!(chi(w, d).unwrap(), BigUint::from(count_lyndon_words(w, d)), "w={w} d={d}");
        }
    }
}

#[test]
fn enumeration_counts_match_witt() {
    for d in 1..=3 {
        let basis = enumerate_hall_basis(d, 8).unwrap();
        for w in 1..=8 {
            assert_eq!(
                BigUint::from(basis.of_weight(w).len()),
                chi(w, d).unwrap(),
                "d={d} w={w}"
            );
        }
        assert!(basis.elements().windows(2).all(|p| p[0] < p[1]));
        assert!(basis.elements().iter().all(is_basic));
    }
}

#[test]
fn nilpotent_branches_agree_on_the_seam() {
    for n in 1..=4 {
        for m in 1..=4 {
            let r = nilpotent_multiplier_rank(n, n, m).unwrap();
            let ge: BigUint = (n + 1..=2 * n).map(|i| chi(i, m).unwrap()).sum();
            assert_eq!(r.rank, ge);
        }
    }
}

#[test]
fn basic_commutators_have_valuation_equal_to_weight() {
    let basis = enumerate_hall_basis(2, 6).unwrap();
    let mut ev = CommutatorEvaluator::new(2, 6).unwrap();
    for c in basis.elements() {
        assert_eq!(ev.eval(c).unwrap().valuation(), Valuation::Finite(c.weight()), "{c}");
    }
    let basis = enumerate_hall_basis(3, 4).unwrap();
    let mut ev = CommutatorEvaluator::new(3, 4).unwrap();
    for c in basis.elements() {
        assert_eq!(ev.eval(c).unwrap().valuation(), Valuation::Finite(c.weight()), "{c}");
    }
}

#[test]
fn leading_terms_of_basic_commutators_are_independent() {
    for (d, max_w) in [(2u32, 6u32), (3, 4)] {
        let basis = enumerate_hall_basis(d, max_w).unwrap();
        for w in 1..=max_w {
            let vectors: Vec<_> = basis
                .of_weight(w)
                .iter()
                .map(|c| eval_commutator(c, d as usize, w).unwrap().leading_term().unwrap())
                .collect();
            assert_eq!(integer_rank(&vectors).unwrap(), vectors.len(), "d={d} w={w}");
        }
    }
}

fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &pivot;
                let pivot_row = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn as_leading_term(row: &[i64], weight: u32) -> Option<nilmult_core::LeadingTermVector> {
    let terms = row.iter().enumerate().filter(|(_, &v)| v != 0).map(|(code, &v)| {
        let word: Vec<u32> = (0..weight).rev().map(|k| ((code >> k) & 1) as u32 + 1).collect();
        (word, BigInt::from(v))
    });
    let e = MagnusElement::from_terms(2, weight, std::iter::once((vec![], BigInt::one())).chain(terms))
        .unwrap();
    e.leading_term().ok()
}

fn random_element(
    ev: &mut CommutatorEvaluator,
    pool: &[Commutator],
    factors: &[(usize, i64)],
) -> MagnusElement {
    let mut acc = ev.identity();
    for &(i, e) in factors {
        acc = acc.mul(&ev.eval_power(&pool[i % pool.len()], e).unwrap()).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn comparison_is_a_total_order(
        a in commutator_strategy(3),
        b in commutator_strategy(3),
        c in commutator_strategy(3),
    ) {
        let ab = compare_commutators(&a, &b);
        prop_assert_eq!(ab, compare_commutators(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && compare_commutators(&b, &c) != Ordering::Greater {
            prop_assert_ne!(compare_commutators(&a, &c), Ordering::Greater);
        }
        if a.weight() < b.weight() {
            prop_assert_eq!(ab, Ordering::Less);
        }
    }

    #[test]
    fn basic_pairs_have_basic_parts(c in commutator_strategy(3)) {
        if let (true, Some((b, a))) = (is_basic(&c), c.as_pair()) {
            prop_assert!(is_basic(b) && is_basic(a));
            prop_assert_eq!(c.weight(), b.weight() + a.weight());
        }
    }

    #[test]
    fn mobius_is_multiplicative(a in 1u64..=10_000, b in 1u64..=10_000) {
        if num_integer::gcd(a, b) == 1 {
            prop_assert_eq!(mobius(a * b), mobius(a) * mobius(b));
        }
    }

    #[test]
    fn group_axioms_hold(
        d in 1usize..=3,
        depth in 1u32..=8,
        xs in prop::collection::vec((1u32..=3, -3i64..=3), 0..=8),
        ys in prop::collection::vec((1u32..=3, -3i64..=3), 0..=8),
        zs in prop::collection::vec((1u32..=3, -3i64..=3), 0..=8),
    ) {
        let build = |fs: &[(u32, i64)]| {
            fs.iter().fold(MagnusElement::identity(d, depth).unwrap(), |acc, &(i, e)| {
                let g = MagnusElement::generator((i - 1) % d as u32 + 1, d, depth).unwrap();
                acc.mul(&g.pow(e).unwrap()).unwrap()
            })
        };
        let (a, b, c) = (build(&xs), build(&ys), build(&zs));
        let id = MagnusElement::identity(d, depth).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(&a.mul(&id).unwrap(), &a);
        prop_assert_eq!(&id.mul(&a).unwrap(), &a);
        let ai = a.inv().unwrap();
        prop_assert!(a.mul(&ai).unwrap().is_identity());
        prop_assert!(ai.mul(&a).unwrap().is_identity());
        prop_assert_eq!(ai.inv().unwrap(), a.clone());
        // The shortcut commutator agrees with the literal product.
        let literal = ai.mul(&b.inv().unwrap()).unwrap().mul(&a).unwrap().mul(&b).unwrap();
        prop_assert_eq!(group_commutator(&a, &b).unwrap(), literal);
    }

    #[test]
    fn valuation_bounds(
        d in 2usize..=3,
        depth in 3u32..=7,
        xs in prop::collection::vec((0usize..200, -2i64..=2), 1..=3),
        ys in prop::collection::vec((0usize..200, -2i64..=2), 1..=3),
    ) {
        let basis = enumerate_hall_basis(d as u32, depth).unwrap();
        let mut ev = CommutatorEvaluator::new(d, depth).unwrap();
        let a = random_element(&mut ev, basis.elements(), &xs);
        let b = random_element(&mut ev, basis.elements(), &ys);
        let (va, vb) = (lcs_valuation(&a), lcs_valuation(&b));
        prop_assert!(lcs_valuation(&a.mul(&b).unwrap()) >= va.min(vb));
        if let (Valuation::Finite(x), Valuation::Finite(y)) = (va, vb) {
            if x + y <= depth + 1 {
                prop_assert!(lcs_valuation(&a.commutator(&b).unwrap()) >= Valuation::Finite(x + y));
            }
            if x < y {
                prop_assert_eq!(
                    a.mul(&b).unwrap().leading_term().unwrap(),
                    a.leading_term().unwrap()
                );
            }
        }
    }

    #[test]
    fn integer_rank_matches_rational_oracle(
        basis_rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 8), 1..=4),
        mixes in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=6),
    ) {
        // Rows are integer combinations of a few base rows, so rank deficiency is common.
        let rows: Vec<Vec<i64>> = mixes
            .iter()
            .map(|mix| {
                (0..8)
                    .map(|j| basis_rows.iter().zip(mix).map(|(r, k)| r[j] * k).sum())
                    .collect()
            })
            .collect();
        let vectors: Vec<_> = rows.iter().filter_map(|r| as_leading_term(r, 3)).collect();
        let nonzero: Vec<_> = rows.iter().filter(|r| r.iter().any(|&v| v != 0)).cloned().collect();
        prop_assert_eq!(integer_rank(&vectors).unwrap(), rational_rank(&nonzero));
    }
}
