mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use lrc_core::analysis::{closure, RecoveringGraph};
use lrc_core::bounds::RecoveryProfile;
use lrc_core::constructions::{construction2, LinearCode};
use lrc_core::finite_field::{
    additive_subgroup, annihilator_polynomial, coset_partition, multiplicative_subgroup,
};
use lrc_core::poly_spaces::{DensePolynomial, PolyBasis};
use lrc_core::{FieldElement, FiniteField};

fn field(i: usize) -> FiniteField {
    let mut fs = common::test_fields();
    fs.swap_remove(i % fs.len())
}

fn elem(f: &FiniteField, v: u32) -> FieldElement {
    f.element(v % f.order()).unwrap()
}

fn poly(f: &FiniteField, cs: &[u32]) -> DensePolynomial {
    DensePolynomial::from_coeffs(cs.iter().map(|&c| elem(f, c)).collect())
}

/// Random recovering graph: each vertex draws `t` disjoint sets from the
/// other vertices.
fn graph_strategy() -> impl Strategy<Value = (RecoveringGraph, Vec<usize>, Vec<usize>)> {
    (4usize..14, 1usize..4, any::<u64>()).prop_map(|(n, t, seed)| {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let cap = ((n - 1) / t).clamp(1, 3);
        let sets = (0..n)
            .map(|i| {
                let mut others: Vec<usize> = (0..n).filter(|&u| u != i).collect();
                others.shuffle(&mut rng);
                (0..t)
                    .map(|j| {
                        let size = rng.gen_range(1..=cap);
                        others[j * cap..j * cap + size].to_vec()
                    })
                    .collect()
            })
            .collect();
        let g = RecoveringGraph::new(n, RecoveryProfile::constant(cap, t).unwrap(), sets).unwrap();
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let extra: Vec<usize> = (0..n).filter(|u| s.contains(u) || rng.gen_bool(0.3)).collect();
        (g, s, extra)
    })
}

proptest! {
    #[test]
    fn field_ops_match_coefficient_arithmetic(i in 0usize..11, a in any::<u32>(), b in any::<u32>()) {
        let f = field(i);
        let (a, b) = (elem(&f, a), elem(&f, b));
        let prod = common::schoolbook_mul(&f, &f.coeffs(a), &f.coeffs(b));
        prop_assert_eq!(f.mul(a, b), f.from_coeffs(&prod).unwrap());
        prop_assert!(f.coeffs(a).iter().all(|&c| c < f.characteristic()));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            prop_assert_eq!(f.pow(a, f.order() as u64 - 1), FieldElement::ONE);
        }
    }

    #[test]
    fn polynomials_stay_normalized(i in 0usize..11, a in prop::collection::vec(any::<u32>(), 0..8), b in prop::collection::vec(any::<u32>(), 1..6)) {
        let f = field(i);
        let (pa, pb) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!pb.is_zero());
        for p in [&pa, &pb, &pa.mul(&f, &pb), &pa.add(&f, &pb)] {
            prop_assert!(p.coeffs().last().map_or(true, |c| !c.is_zero()));
        }
        let (q, r) = pa.div_rem(&f, &pb);
        prop_assert_eq!(q.mul(&f, &pb).add(&f, &r), pa.clone());
        prop_assert!(r.degree().map_or(true, |d| d < pb.degree().unwrap()));
        let g = pa.gcd(&f, &pb).unwrap();
        prop_assert!(pa.rem(&f, &g).is_zero() && pb.rem(&f, &g).is_zero());
    }

    #[test]
    fn additive_subgroups_close(i in 0usize..11, picks in prop::collection::vec(any::<u32>(), 0..3)) {
        let f = field(i);
        // an independent basis: greedily keep elements outside the current span
        let mut basis = Vec::new();
        for v in picks {
            let e = elem(&f, v);
            let span = additive_subgroup(&f, &basis).unwrap();
            if !span.contains(e) {
                basis.push(e);
            }
        }
        let h = additive_subgroup(&f, &basis).unwrap();
        prop_assert_eq!(h.len() as u32, f.characteristic().pow(basis.len() as u32));
        prop_assert_eq!(f.order() as usize % h.len(), 0);
        let set: HashSet<_> = h.elements.iter().copied().collect();
        prop_assert!(set.contains(&FieldElement::ZERO));
        for &x in &h.elements {
            for &y in &h.elements {
                prop_assert!(set.contains(&f.add(x, y)));
            }
        }
        let ground: Vec<_> = f.elements().collect();
        let part = coset_partition(&f, &h, &ground).unwrap();
        let mut seen = HashSet::new();
        for b in part.blocks() {
            prop_assert_eq!(b.len(), h.len());
            for &x in b {
                prop_assert!(seen.insert(x));
            }
        }
        prop_assert_eq!(seen.len(), ground.len());
        let ann = annihilator_polynomial(&f, &h);
        prop_assert_eq!(ann.degree(), Some(h.len()));
        for b in part.blocks() {
            let v = ann.eval(&f, b[0]);
            prop_assert!(b.iter().all(|&x| ann.eval(&f, x) == v));
        }
    }

    #[test]
    fn multiplicative_subgroups_close(i in 0usize..11, g in 1u32..u32::MAX) {
        let f = field(i);
        let g = elem(&f, g);
        prop_assume!(!g.is_zero());
        let h = multiplicative_subgroup(&f, g).unwrap();
        prop_assert_eq!((f.order() as usize - 1) % h.len(), 0);
        let set: HashSet<_> = h.elements.iter().copied().collect();
        prop_assert!(set.contains(&FieldElement::ONE));
        for &x in &h.elements {
            prop_assert!(set.contains(&f.mul(x, g)));
        }
        let ground: Vec<_> = f.nonzero_elements().collect();
        let part = coset_partition(&f, &h, &ground).unwrap();
        prop_assert_eq!(part.blocks().iter().map(Vec::len).sum::<usize>(), ground.len());
    }

    #[test]
    fn echelon_bases(i in 0usize..11, polys in prop::collection::vec(prop::collection::vec(any::<u32>(), 0..7), 0..6)) {
        let f = field(i);
        let ps: Vec<_> = polys.iter().map(|c| poly(&f, c)).collect();
        let b = PolyBasis::from_span(&f, &ps, 6);
        let d = b.degrees();
        prop_assert!(d.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(d.iter().all(|&x| x <= 6));
        for p in &ps {
            prop_assert!(b.contains(&f, p));
        }
        let again = PolyBasis::from_span(&f, &b.polys, 6);
        prop_assert_eq!(again, b);
    }

    #[test]
    fn closure_properties((g, s, t) in graph_strategy()) {
        let cs = closure(&g, &s);
        prop_assert!(s.iter().all(|u| cs.contains(u)));
        prop_assert_eq!(closure(&g, &cs), cs.clone());
        let ct = closure(&g, &t);
        prop_assert!(cs.iter().all(|u| ct.contains(u)));
        prop_assert_eq!(cs, common::naive_closure(&g, &s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parity_check_layout(q in prop::sample::select(vec![2u32, 3]), r in 1usize..3, t in 1usize..3, v in 1usize..3, k in 1usize..3) {
        let Ok(code) = construction2(q, r, t, v, k, None, None) else {
            return Ok(());
        };
        let p = code.params();
        prop_assert_eq!(p.n, v * (t * r + 1));
        prop_assert_eq!(p.u, p.n - p.k - v * t);
        let h = code.h();
        prop_assert_eq!(h.rank(code.field()), p.n - p.k);
        for row in 0..v * t {
            let support: Vec<_> = (0..p.n).filter(|&c| !h.get(row, c).is_zero()).collect();
            prop_assert_eq!(support.len(), r + 1);
            prop_assert!(support.iter().all(|&c| h.get(row, c) == FieldElement::ONE));
        }
        prop_assert!(code.generator_matrix().matrix().mul(code.field(), &h.transpose()).is_zero());
    }
}
