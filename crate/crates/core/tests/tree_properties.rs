use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ucat_core::{
    caterpillar_view, chromatic_p_expansion, compositions_of, enumerate_free_trees,
    enumerate_proper_caterpillars, l_polynomial, phi, psi, u_polynomial_bruteforce,
    u_polynomial_tree, u_restricted, witness_theorem, CanonicalCode, Composition, Partition, Tree,
    FREE_TREE_COUNTS,
};

fn c(p: &[u32]) -> Composition {
    Composition::from_parts(p)
}

// Every labeled tree on n vertices via Prüfer sequences, deduplicated by
// canonical code.
fn prufer_classes(n: u32) -> BTreeSet<CanonicalCode> {
    if n == 1 {
        return [Tree::single_vertex().canonical_code()]
            .into_iter()
            .collect();
    }
    let len = (n - 2) as usize;
    let mut seq = vec![0u32; len];
    let mut out = BTreeSet::new();
    loop {
        out.insert(Tree::from_prufer(&seq).unwrap().canonical_code());
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

fn random_tree(rng: &mut ChaCha8Rng, n: u32) -> Tree {
    let seq: Vec<u32> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    Tree::from_prufer(&seq).unwrap()
}

fn shuffle_labels(rng: &mut ChaCha8Rng, t: &Tree) -> Tree {
    let mut perm: Vec<u32> = (0..t.vertex_count() as u32).collect();
    perm.shuffle(rng);
    t.relabel(&perm)
}

#[test]
fn generator_matches_prufer_oracle() {
    for n in 1..=8 {
        let generated: Vec<CanonicalCode> = enumerate_free_trees(n)
            .unwrap()
            .map(|t| t.canonical_code())
            .collect();
        let distinct: BTreeSet<_> = generated.iter().cloned().collect();
        assert_eq!(distinct.len(), generated.len());
        assert_eq!(distinct, prufer_classes(n), "n = {n}");
        assert_eq!(generated.len() as u64, FREE_TREE_COUNTS[n as usize - 1]);
    }
}

#[test]
fn seven_vertex_trees() {
    let codes: BTreeSet<_> = enumerate_free_trees(7)
        .unwrap()
        .map(|t| t.canonical_code())
        .collect();
    assert_eq!(codes.len(), 11);
}

#[test]
fn fast_u_matches_brute_force_exhaustively() {
    for n in 1..=9 {
        for t in enumerate_free_trees(n).unwrap() {
            let slow = u_polynomial_bruteforce(&t.to_graph()).unwrap();
            assert_eq!(slow.max_y_exponent(), 0);
            assert_eq!(u_polynomial_tree(&t), slow.x_part());
        }
    }
}

#[test]
fn fast_u_matches_brute_force_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(10..=15);
        let t = random_tree(&mut rng, n);
        assert_eq!(
            u_polynomial_tree(&t),
            u_polynomial_bruteforce(&t.to_graph()).unwrap().x_part()
        );
    }
}

#[test]
fn invariance_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=14);
        let t = random_tree(&mut rng, n);
        let r = shuffle_labels(&mut rng, &t);
        assert_eq!(t.canonical_code(), r.canonical_code());
        assert_eq!(u_polynomial_tree(&t), u_polynomial_tree(&r));
    }
}

#[test]
fn u_polynomial_mass_and_extremes() {
    for n in 1..=10u32 {
        for t in enumerate_free_trees(n).unwrap() {
            let u = u_polynomial_tree(&t);
            assert_eq!(u.mass(), 1 << (n - 1));
            assert_eq!(u.coeff(&Partition::new(vec![1; n as usize]).unwrap()), 1);
            assert_eq!(u.coeff(&Partition::new(vec![n]).unwrap()), 1);
        }
    }
}

#[test]
fn power_sum_sign_law() {
    for n in 1..=9u32 {
        for t in enumerate_free_trees(n).unwrap() {
            let p = chromatic_p_expansion(&t);
            let u = u_polynomial_tree(&t);
            assert_eq!(p.len(), u.len());
            for (lambda, coeff) in p.terms() {
                let sign = if (n as usize - lambda.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                assert_eq!(coeff, sign * u.coeff(lambda));
            }
        }
    }
}

#[test]
fn x1_evaluation_agrees_on_all_caterpillars() {
    for n in 4..=11 {
        for t in enumerate_free_trees(n).unwrap() {
            let Ok(view) = caterpillar_view(&t) else {
                continue;
            };
            let ul = u_restricted(&t).unwrap();
            assert_eq!(u_polynomial_tree(&t).drop_part_one(), ul.drop_part_one());
            if view.is_proper() {
                assert!(ul.terms().all(|(lambda, _)| !lambda.contains_part(1)));
            }
        }
    }
}

#[test]
fn restricted_polynomial_equals_l_of_phi() {
    for n in 4..=14 {
        for t in enumerate_proper_caterpillars(n) {
            let beta = phi(&t).unwrap();
            let ul = u_restricted(&t).unwrap();
            assert_eq!(ul, l_polynomial(&beta));
            let spine_edges = caterpillar_view(&t).unwrap().spine().len() - 1;
            assert_eq!(ul.mass(), 1 << spine_edges);
        }
    }
}

#[test]
fn phi_and_psi_are_inverse() {
    for n in 4..=16 {
        for beta in compositions_of(n, 2).into_iter().filter(|b| b.len() >= 2) {
            let t = psi(&beta).unwrap();
            assert_eq!(t.vertex_count() as u32, beta.size());
            assert_eq!(phi(&t).unwrap(), beta.reverse_class_rep());
            assert_eq!(
                t.canonical_code(),
                psi(&beta.reverse()).unwrap().canonical_code()
            );
        }
    }
    for n in 4..=12 {
        for t in enumerate_free_trees(n).unwrap() {
            let Ok(view) = caterpillar_view(&t) else {
                continue;
            };
            if view.is_proper() {
                let back = psi(&phi(&t).unwrap()).unwrap();
                assert_eq!(back.canonical_code(), t.canonical_code());
            }
        }
    }
}

#[test]
fn type_coefficient_is_one() {
    for n in 4..=14 {
        for beta in compositions_of(n, 2).into_iter().filter(|b| b.len() >= 2) {
            let u = u_polynomial_tree(&psi(&beta).unwrap());
            assert_eq!(u.coeff(&beta.partition_type()), 1, "{beta}");
        }
    }
}

#[test]
fn leaf_count_of_psi_is_leaf_functional() {
    for n in 4..=14 {
        for beta in compositions_of(n, 2).into_iter().filter(|b| b.len() >= 2) {
            assert_eq!(
                psi(&beta).unwrap().leaf_count() as u32,
                beta.leaf_functional()
            );
        }
    }
}

#[test]
fn worked_witness_against_brute_force() {
    let w = witness_theorem(&c(&[1, 1]), &c(&[2]), &c(&[2, 3])).unwrap();
    let s = psi(&c(&[2, 3, 2, 3])).unwrap();
    let t = psi(&c(&[2, 5, 3])).unwrap();
    assert_eq!(s.edges().len(), 9);
    let us = u_polynomial_bruteforce(&s.to_graph()).unwrap().x_part();
    let ut = u_polynomial_bruteforce(&t.to_graph()).unwrap().x_part();
    let lambda = Partition::new(vec![6, 3, 1]).unwrap();
    assert_eq!(us.coeff(&lambda), 4);
    assert_eq!(ut.coeff(&lambda), 5);
    assert_eq!((w.coeff_s, w.coeff_t), (4, 5));
}

#[test]
fn l_equal_u_distinct_pair() {
    let a = c(&[2, 5, 3, 2, 5, 5, 3]);
    let b = c(&[2, 5, 5, 3, 2, 5, 3]);
    assert_eq!(c(&[2, 3]).circ(&c(&[2, 3])), a);
    assert_eq!(c(&[3, 2]).circ(&c(&[2, 3])), b);
    assert_eq!(l_polynomial(&a), l_polynomial(&b));
    let ua = u_polynomial_tree(&psi(&a).unwrap());
    let ub = u_polynomial_tree(&psi(&b).unwrap());
    assert_ne!(ua, ub);
}
