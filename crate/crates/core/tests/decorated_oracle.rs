//! Independent oracles for the decorated type-D composition.
//!
//! The coincidences `D_2 = A_1 × A_1` and `D_3 = A_3` (as Coxeter graphs)
//! give faithful reference models for the small type-D Brauer monoids in
//! terms of the classical type-A diagrams, with exact `δ` bookkeeping.
//! The decorated calculus implemented here is a homomorphic image of the
//! type-D monoid, so whenever two generator words agree in the reference
//! model they must agree in the decorated evaluation as well - scalars,
//! connector and decorations alike. These tests sweep all short words and
//! check exactly that, which pins the loop and parity rules against
//! something the decorated code does not share.

use dtl_core::diagrams_a::{compose, gen_e, gen_r, ScaledDiagramA};
use dtl_core::diagrams_d::{compose_l2, psi_gen, GenKind, ScaledDiagramD};
use std::collections::HashMap;

#[derive(Clone, PartialEq, Eq, Hash)]
struct PairElem(ScaledDiagramA, ScaledDiagramA);

fn sweep<O, D, FO, FD>(
    oracle_gens: &[O],
    decorated_gens: &[D],
    oracle_mul: FO,
    decorated_mul: FD,
    oracle_id: O,
    decorated_id: D,
    max_len: usize,
) where
    O: Clone + Eq + std::hash::Hash,
    D: Clone + PartialEq + std::fmt::Debug,
    FO: Fn(&O, &O) -> O + Copy,
    FD: Fn(&D, &D) -> D + Copy,
{
    assert_eq!(oracle_gens.len(), decorated_gens.len());
    let mut classes: HashMap<O, D> = HashMap::new();
    let mut frontier = vec![(oracle_id.clone(), decorated_id.clone())];
    classes.insert(oracle_id, decorated_id);
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (o_word, d_word) in &frontier {
            for (og, dg) in oracle_gens.iter().zip(decorated_gens) {
                let o = oracle_mul(o_word, og);
                let d = decorated_mul(d_word, dg);
                match classes.get(&o) {
                    Some(existing) => {
                        assert_eq!(
                            existing, &d,
                            "words equal in the reference model evaluate differently"
                        );
                    }
                    None => {
                        classes.insert(o.clone(), d.clone());
                        next.push((o, d));
                    }
                }
            }
        }
        frontier = next;
    }
}

#[test]
fn d2_factors_as_two_copies_of_a1() {
    // fork nodes 1 and 2 of D_2 commute outright; the reference model is a
    // pair of independent two-strand diagrams
    let id2 = ScaledDiagramA::identity(2);
    let oracle_gens = vec![
        PairElem(gen_r(1, 2).unwrap(), id2.clone()),
        PairElem(id2.clone(), gen_r(1, 2).unwrap()),
        PairElem(gen_e(1, 2).unwrap(), id2.clone()),
        PairElem(id2.clone(), gen_e(1, 2).unwrap()),
    ];
    let decorated_gens = vec![
        psi_gen(GenKind::R, 1, 1).unwrap(),
        psi_gen(GenKind::R, 2, 1).unwrap(),
        psi_gen(GenKind::E, 1, 1).unwrap(),
        psi_gen(GenKind::E, 2, 1).unwrap(),
    ];
    sweep(
        &oracle_gens,
        &decorated_gens,
        |a, b| PairElem(compose(&a.0, &b.0).unwrap(), compose(&a.1, &b.1).unwrap()),
        |a, b| compose_l2(a, b).unwrap(),
        PairElem(id2.clone(), id2),
        ScaledDiagramD::identity(2),
        8,
    );
}

#[test]
fn d3_matches_the_a3_diagram_monoid() {
    // D_3 node i maps to A_3 node: 1 -> 1, 2 -> 3, 3 -> 2
    let node_map = [1usize, 3, 2];
    let mut oracle_gens = Vec::new();
    let mut decorated_gens = Vec::new();
    for (d_node, &a_node) in node_map.iter().enumerate().map(|(k, v)| (k + 1, v)) {
        oracle_gens.push(gen_r(a_node, 4).unwrap());
        decorated_gens.push(psi_gen(GenKind::R, d_node, 2).unwrap());
        oracle_gens.push(gen_e(a_node, 4).unwrap());
        decorated_gens.push(psi_gen(GenKind::E, d_node, 2).unwrap());
    }
    sweep(
        &oracle_gens,
        &decorated_gens,
        |a, b| compose(a, b).unwrap(),
        |a, b| compose_l2(a, b).unwrap(),
        ScaledDiagramA::identity(4),
        ScaledDiagramD::identity(3),
        6,
    );
}
