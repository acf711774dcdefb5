use std::sync::Arc;

use num_rational::Ratio;

use lrc_core::analysis::{
    algorithm1, closure, columns_independent, expansion_ratio, find_expanding_set, lowest_index,
    rank_of, verify_recovering_sets, RecoveringGraph,
};
use lrc_core::bounds::RecoveryProfile;
use lrc_core::constructions::{construction1, construction2, presets, LinearCode, MatrixCode};
use lrc_core::matrix::Matrix;
use lrc_core::poly_spaces::DensePolynomial;
use lrc_core::{FieldElement, FiniteField};

#[test]
fn preset_parameters() {
    let c1 = presets::example1().default_code().unwrap();
    assert_eq!((c1.length(), c1.dimension()), (16, 9));
    let c3 = presets::example3().default_code().unwrap();
    assert_eq!((c3.length(), c3.dimension(), c3.designed_distance()), (32, 8, 23));
}

#[test]
fn zero_message_encodes_to_zero() {
    let code = presets::example2().default_code().unwrap();
    let c = code.encode(&[FieldElement::ZERO; 4]).unwrap();
    assert!(c.iter().all(|e| e.is_zero()));
    let c2 = construction2(2, 2, 2, 2, 2, None, None).unwrap();
    assert!(c2.encode(&[FieldElement::ZERO; 2]).unwrap().iter().all(|e| e.is_zero()));
}

#[test]
fn top_monomial_has_full_weight() {
    let code = presets::example2().default_code().unwrap();
    let idx = code.basis().degrees().iter().position(|&d| d == 6).unwrap();
    assert_eq!(code.basis().polys[idx], DensePolynomial::monomial(6));
    let mut msg = vec![FieldElement::ZERO; 4];
    msg[idx] = FieldElement::ONE;
    let c = code.encode(&msg).unwrap();
    assert_eq!(c.iter().filter(|e| !e.is_zero()).count(), 12);
}

#[test]
fn matrix_shapes() {
    let c1 = construction1(3, 1, 2).unwrap();
    let g = c1.generator_matrix();
    assert_eq!((g.k(), g.n()), (3, 9));
    let c2 = construction2(2, 2, 2, 2, 2, None, None).unwrap();
    assert_eq!((c2.h().rows(), c2.h().cols()), (8, 10));
    assert_eq!(c2.h().rank(c2.field()), 8);
}

#[test]
fn single_local_group_layout() {
    // t = 1, r = k, v = k
    for k in 1..=3 {
        let code = construction2(2, k, 1, k, k, None, None).unwrap();
        let p = code.params();
        assert_eq!(p.n, k * (k + 1));
        assert_eq!(code.h().rank(code.field()), p.n - p.k);
        assert!(code
            .generator_matrix()
            .matrix()
            .mul(code.field(), &code.h().transpose())
            .is_zero());
    }
}

#[test]
fn rank_extremes() {
    let code = presets::example2().default_code().unwrap();
    assert_eq!(rank_of(&code, &[]), 0);
    let all: Vec<usize> = (0..12).collect();
    assert_eq!(rank_of(&code, &all), 4);
}

#[test]
fn column_checks() {
    let f = FiniteField::prime(3).unwrap();
    let e = |v| f.from_u64(v);
    let h = Matrix::from_rows(vec![vec![e(1), e(0), e(2)], vec![e(0), e(1), e(1)]]);
    assert!(columns_independent(&f, &h, 1, 10).unwrap());
    assert!(columns_independent(&f, &h, 2, 10).unwrap());
    assert!(!columns_independent(&f, &h, 3, 10).unwrap());
}

#[test]
fn preset_graphs_verify() {
    let c1 = presets::example1().default_code().unwrap();
    let g1 = RecoveringGraph::from_evaluation_code(&c1).unwrap();
    assert!(verify_recovering_sets(&c1, &g1));
    assert_eq!(g1.profile().caps(), &[3, 3]);
    let c2 = presets::example2().default_code().unwrap();
    let g2 = RecoveringGraph::from_evaluation_code(&c2).unwrap();
    assert!(verify_recovering_sets(&c2, &g2));
    assert_eq!(g2.profile().caps(), &[2, 3]);
}

#[test]
fn unrelated_sets_do_not_verify() {
    let f = Arc::new(FiniteField::prime(11).unwrap());
    let pts: Vec<_> = f.elements().take(8).collect();
    let rs = MatrixCode::reed_solomon(f, &pts, 4).unwrap();
    let sets = (0..8)
        .map(|i| vec![vec![(i + 1) % 8, (i + 2) % 8]])
        .collect();
    let g = RecoveringGraph::new(8, RecoveryProfile::new(vec![2]).unwrap(), sets).unwrap();
    assert!(!verify_recovering_sets(&rs, &g));
}

#[test]
fn closure_completes_a_block() {
    let code = construction1(3, 1, 2).unwrap();
    let g = RecoveringGraph::from_evaluation_code(&code).unwrap();
    let block = {
        let mut b = g.sets(0)[0].clone();
        b.push(0);
        b.sort();
        b
    };
    let cl = closure(&g, &block[..2]);
    assert!(block.iter().all(|u| cl.contains(u)));
    let all: Vec<usize> = (0..9).collect();
    assert_eq!(closure(&g, &all), all);
    assert_eq!(expansion_ratio(&g, &all).unwrap(), Ratio::from_integer(1));
    assert!(closure(&g, &[]).is_empty());
}

#[test]
fn isolated_vertex_expansion() {
    let sets = vec![vec![vec![1]], vec![vec![2]], vec![vec![0]]];
    let g = RecoveringGraph::new(3, RecoveryProfile::new(vec![1]).unwrap(), sets).unwrap();
    // 0 <- 1 <- 2 <- 0: a single vertex closes the whole cycle
    assert_eq!(closure(&g, &[1]).len(), 3);
    let sets = vec![vec![vec![1, 2]], vec![vec![0, 2]], vec![vec![0, 1]]];
    let g = RecoveringGraph::new(3, RecoveryProfile::new(vec![2]).unwrap(), sets).unwrap();
    assert_eq!(expansion_ratio(&g, &[0]).unwrap(), Ratio::from_integer(1));
    assert_eq!(find_expanding_set(&g, 0).len(), 2);
}

#[test]
fn k1_codes_are_rejected_by_the_search() {
    let f = Arc::new(FiniteField::prime(2).unwrap());
    let code = MatrixCode::replication(f, 1, 3).unwrap();
    let sets = vec![vec![vec![1]], vec![vec![2]], vec![vec![0]]];
    let g = RecoveringGraph::new(3, RecoveryProfile::new(vec![1]).unwrap(), sets).unwrap();
    assert!(algorithm1(&code, &g, &mut lowest_index).is_err());
}
