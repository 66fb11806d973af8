use std::collections::BTreeMap;


use super::models::*;
use super::*;
use crate::field::rat;

#[test]
fn dga_satisfies_relations() {
    let dga = interval_dga();
    let report = dga.check_relations(3).unwrap();
    assert!(report.holds, "failed at {:?}", report.failing_tuple);
}

#[test]
fn exterior_algebra_satisfies_relations() {
    let t2 = t2_harmonic_model();
    assert!(t2.check_relations(3).unwrap().holds);
}

#[test]
fn broken_associativity_is_reported_with_the_triple() {
    // corrupt one pointwise-product entry of the delta algebra
    let (good, _) = delta_algebra_z3();
    let space = good.space().clone();
    let mut entries: Vec<(usize, OpEntry<Rat>)> = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            for (o, c, _) in good.apply_basis(2, &[x, y]) {
                entries.push((
                    2,
                    OpEntry {
                        inputs: vec![x, y],
                        output: o,
                        coeff: c,
                        energy: None,
                    },
                ));
            }
        }
    }
    // m₂(d0, d0) += d1: breaks associativity
    entries.push((
        2,
        OpEntry {
            inputs: vec![0, 0],
            output: 1,
            coeff: rat(1, 1),
            energy: None,
        },
    ));
    let bad = AInfStructure::new(space, 3, entries, None).unwrap();
    let report = bad.check_relations(3).unwrap();
    assert!(!report.holds);
    assert_eq!(report.failing_arity, Some(3));
    assert!(report.failing_tuple.is_some());
}

#[test]
fn relation_check_respects_energy_cutoff() {
    // m₂(x, x) = T¹·x alone violates nothing at arity 2; at arity 3 the
    // relation terms carry energy 2 and vanish below cutoff 2 but are
    // visible at cutoff 3... with a single generator in degree 0 the
    // k=3 terms cancel in pairs, so instead weight the associator
    let space = GradedSpace::new(vec![("x".into(), 0), ("y".into(), 0)]).unwrap();
    let weighted = |inputs: Vec<usize>, output: usize, e: i64| {
        (
            2usize,
            OpEntry {
                inputs,
                output,
                coeff: rat(1, 1),
                energy: Some(rat(e, 1)),
            },
        )
    };
    // m₂(x,x) = T·y, m₂(x,y) = T·y: associator on (x,x,x) is
    // m₂(m₂(x,x),x) - m₂(x,m₂(x,x)) = T·m₂(y,x) - T·m₂(x,y) = -T²·y
    let entries = vec![weighted(vec![0, 0], 1, 1), weighted(vec![0, 1], 1, 1)];
    let low = AInfStructure::new(space.clone(), 3, entries.clone(), Some(rat(2, 1))).unwrap();
    assert!(low.check_relations(3).unwrap().holds);
    let high = AInfStructure::new(space, 3, entries, Some(rat(3, 1))).unwrap();
    assert!(!high.check_relations(3).unwrap().holds);
}

#[test]
fn degree_shift_is_validated() {
    let space = GradedSpace::new(vec![("x".into(), 0), ("y".into(), 2)]).unwrap();
    // m₁ must shift degree by +1; x → y shifts by 2
    let bad = AInfStructure::new(
        space,
        2,
        vec![(
            1,
            OpEntry {
                inputs: vec![0],
                output: 1,
                coeff: rat(1, 1),
                energy: None,
            },
        )],
        None,
    );
    assert_eq!(bad.unwrap_err(), AInfError::DegreeShiftViolation(1));
}

#[test]
fn t2_model_is_equivariant_for_the_rotation() {
    let t2 = t2_harmonic_model();
    let rep = t2_z3_representation(&t2);
    assert!(check_equivariance(&t2, &rep));
    // degree-1 action matrix has trace -1 and determinant +1
    let g1 = rep.matrix(1);
    let trace = g1.get(1, 1).clone() + g1.get(2, 2).clone();
    assert_eq!(trace, rat(-1, 1));
    let det = g1.get(1, 1).clone() * g1.get(2, 2).clone()
        - g1.get(1, 2).clone() * g1.get(2, 1).clone();
    assert_eq!(det, rat(1, 1));
}

#[test]
fn flipping_the_top_degree_action_breaks_equivariance() {
    // the degree-1 block has determinant +1, so forcing -1 on the top
    // degree contradicts compatibility with the wedge product (and is
    // not even a character of Z/3, hence the unchecked constructor)
    let t2 = t2_harmonic_model();
    let group = crate::groupcoh::FiniteGroup::cyclic(3);
    let g1 = rep_matrix_with_top_sign(-1);
    let g2 = g1.mul(&g1);
    let rep =
        GRep::new_unchecked(group, t2.space(), vec![Matrix::identity(4), g1, g2]).unwrap();
    assert!(!check_equivariance(&t2, &rep));
}

fn rep_matrix_with_top_sign(sign: i64) -> Matrix<Rat> {
    Matrix::from_rows(
        [
            [1, 0, 0, 0],
            [0, 0, -1, 0],
            [0, 1, -1, 0],
            [0, 0, 0, sign],
        ]
        .iter()
        .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
        .collect(),
    )
}

#[test]
fn invariant_restriction_of_the_t2_model() {
    let t2 = t2_harmonic_model();
    let rep = t2_z3_representation(&t2);
    let inv = restrict_invariant(&t2, &rep).unwrap();
    // ranks per degree: (1, 0, 1) — no invariant 1-forms
    let dims: BTreeMap<i64, usize> = inv
        .space()
        .degrees()
        .into_iter()
        .map(|d| {
            (
                d,
                (0..inv.space().dim())
                    .filter(|&i| inv.space().degree(i) == d)
                    .count(),
            )
        })
        .collect();
    assert_eq!(dims.get(&0), Some(&1));
    assert_eq!(dims.get(&1), None);
    assert_eq!(dims.get(&2), Some(&1));
    // closure: the restricted structure still satisfies the relations
    assert!(inv.check_relations(3).unwrap().holds);
}

#[test]
fn invariant_restriction_of_delta_algebra() {
    let (a, rep) = delta_algebra_z3();
    assert!(check_equivariance(&a, &rep));
    let inv = restrict_invariant(&a, &rep).unwrap();
    assert_eq!(inv.space().dim(), 1);
    assert!(inv.check_relations(3).unwrap().holds);
    // the orbit sum is idempotent up to the projector normalization:
    // m₂ restricted to the line through δ₀+δ₁+δ₂ is nonzero
    assert!(!inv.apply_basis(2, &[0, 0]).is_empty());
}

#[test]
fn trivial_group_restriction_is_identity() {
    let dga = interval_dga();
    let group = crate::groupcoh::FiniteGroup::cyclic(1);
    let rep = GRep::new(group, dga.space(), vec![Matrix::identity(3)]).unwrap();
    let inv = restrict_invariant(&dga, &rep).unwrap();
    assert_eq!(inv.space().dim(), 3);
    assert!(inv.check_relations(3).unwrap().holds);
}

#[test]
fn averaging_the_projection_morphism() {
    let (a, rep) = swap_model();
    // f₁ = projection to the first basis vector
    let f = AInfMorphism::new(
        a.space(),
        a.space(),
        2,
        vec![(
            1,
            OpEntry {
                inputs: vec![0],
                output: 0,
                coeff: rat(1, 1),
                energy: None,
            },
        )],
    )
    .unwrap();
    assert!(!morphism_is_equivariant(&f, &rep, &rep));
    let avg = average_morphism(&f, &rep, &rep).unwrap();
    assert!(morphism_is_equivariant(&avg, &rep, &rep));
    // (1/2)(identity-symmetrized): f₁^avg = diag(1/2, 1/2)
    let terms = avg.normalized();
    assert_eq!(
        terms,
        vec![
            (1, vec![0], 0, rat(1, 2)),
            (1, vec![1], 1, rat(1, 2)),
        ]
    );
    // averaging is idempotent on morphism data
    let twice = average_morphism(&avg, &rep, &rep).unwrap();
    assert_eq!(twice.normalized(), avg.normalized());
}

#[test]
fn averaging_fixes_equivariant_morphisms() {
    let (a, rep) = swap_model();
    let id = AInfMorphism::identity(a.space(), 2);
    assert!(morphism_is_equivariant(&id, &rep, &rep));
    let avg = average_morphism(&id, &rep, &rep).unwrap();
    assert_eq!(avg.normalized(), id.normalized());
    // trivial group: any morphism is fixed
    let trivial = crate::groupcoh::FiniteGroup::cyclic(1);
    let trep = GRep::new(trivial, a.space(), vec![Matrix::identity(2)]).unwrap();
    let f = AInfMorphism::new(
        a.space(),
        a.space(),
        2,
        vec![(
            1,
            OpEntry {
                inputs: vec![0],
                output: 0,
                coeff: rat(1, 1),
                energy: None,
            },
        )],
    )
    .unwrap();
    let favg = average_morphism(&f, &trep, &trep).unwrap();
    assert_eq!(favg.normalized(), f.normalized());
}

#[test]
fn averaged_morphisms_stay_ainf_morphisms() {
    // source and target: the delta algebra with its Z/3 action; the
    // identity composed with the averaging projector is a morphism of
    // the underlying strict structures... build a morphism as the
    // averaging of a non-equivariant algebra endomorphism that is an
    // A∞-morphism: f₁ = the algebra map δᵢ ↦ δᵢ for i ≠ 2, δ₂ ↦ 0 is
    // not one, so instead use the identity times a scalar
    let (a, rep) = delta_algebra_z3();
    let id = AInfMorphism::identity(a.space(), 3);
    assert!(check_ainf_morphism(&id, &a, &a));
    let avg = average_morphism(&id, &rep, &rep).unwrap();
    assert!(check_ainf_morphism(&avg, &a, &a));
}

#[test]
fn gf2_average_is_rejected() {
    use crate::field::Gf2;
    let space = GradedSpace::new(vec![("a".into(), 0), ("b".into(), 0)]).unwrap();
    let group = crate::groupcoh::FiniteGroup::cyclic(2);
    let swap = Matrix::from_rows(vec![
        vec![Gf2(0), Gf2(1)],
        vec![Gf2(1), Gf2(0)],
    ]);
    let rep = GRep::new(group, &space, vec![Matrix::identity(2), swap]).unwrap();
    let f: AInfMorphism<Gf2> = AInfMorphism::identity(&space, 1);
    assert_eq!(
        average_morphism(&f, &rep, &rep).unwrap_err(),
        AInfError::FieldNotDivisible
    );
}

#[test]
fn average_composition_identities() {
    let (a, rep) = swap_model();
    // f equivariant (the identity), h arbitrary
    let f = AInfMorphism::identity(a.space(), 2);
    let h = AInfMorphism::new(
        a.space(),
        a.space(),
        2,
        vec![(
            1,
            OpEntry {
                inputs: vec![0],
                output: 0,
                coeff: rat(3, 1),
                energy: None,
            },
        )],
    )
    .unwrap();
    assert!(check_average_composition(&f, &h, &rep, &rep).unwrap());
    // f non-equivariant: the first identity fails for a generic h
    let f_bad = AInfMorphism::new(
        a.space(),
        a.space(),
        2,
        vec![(
            1,
            OpEntry {
                inputs: vec![0],
                output: 0,
                coeff: rat(1, 1),
                energy: None,
            },
        )],
    )
    .unwrap();
    assert!(!check_average_composition(&f_bad, &h, &rep, &rep).unwrap());
}

fn two_term_complex() -> ChainData<Rat> {
    // u in degree 0, v in degree 1, m₁(u) = v
    let space = GradedSpace::new(vec![("u".into(), 0), ("v".into(), 1)]).unwrap();
    let m1 = Matrix::from_rows(vec![
        vec![rat(0, 1), rat(0, 1)],
        vec![rat(1, 1), rat(0, 1)],
    ]);
    ChainData::new(space, m1).unwrap()
}

#[test]
fn strict_action_is_a_weak_action() {
    let c = two_term_complex();
    let group = crate::groupcoh::FiniteGroup::cyclic(2);
    let psi = vec![Matrix::identity(2), Matrix::identity(2)];
    let report = check_weak_action(&c, &group, &psi, &BTreeMap::new()).unwrap();
    assert!(report.holds);
}

#[test]
fn homotopy_corrected_action_passes() {
    let c = two_term_complex();
    let group = crate::groupcoh::FiniteGroup::cyclic(2);
    // Ψ_g = id + (m₁τ + τm₁) = 2·id for τ(v) = u
    let psi_g = Matrix::identity(2).scale(&rat(2, 1));
    let tau = Matrix::from_rows(vec![
        vec![rat(0, 1), rat(1, 1)],
        vec![rat(0, 1), rat(0, 1)],
    ]);
    // Ψ_gΨ_g - Ψ_e = 3·id = σ m₁ + m₁ σ with σ = 3τ
    let mut sigma = BTreeMap::new();
    sigma.insert((1, 1), tau.scale(&rat(3, 1)));
    let report =
        check_weak_action(&c, &group, &[Matrix::identity(2), psi_g], &sigma).unwrap();
    assert!(report.holds);
}

#[test]
fn weak_action_failing_on_homology_is_rejected() {
    // zero differential: homotopies vanish, so Ψ_g = 2·id cannot be
    // corrected and the defect is visible on homology
    let space = GradedSpace::new(vec![("u".into(), 0)]).unwrap();
    let c = ChainData::new(space, Matrix::zero(1, 1)).unwrap();
    let group = crate::groupcoh::FiniteGroup::cyclic(2);
    let psi = vec![Matrix::identity(1), Matrix::identity(1).scale(&rat(2, 1))];
    let report = check_weak_action(&c, &group, &psi, &BTreeMap::new()).unwrap();
    assert!(!report.holds);
    assert_eq!(report.failing_pair, Some((1, 1)));
}

#[test]
fn non_chain_map_is_rejected() {
    let c = two_term_complex();
    let group = crate::groupcoh::FiniteGroup::cyclic(2);
    // maps u ↦ 2u, v ↦ v: m₁ψ(u) = 2v but ψm₁(u) = v
    let bad = Matrix::from_rows(vec![
        vec![rat(2, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1)],
    ]);
    assert_eq!(
        check_weak_action(&c, &group, &[Matrix::identity(2), bad], &BTreeMap::new())
            .unwrap_err(),
        AInfError::NotChainMap(1)
    );
}

#[test]
fn bimodule_equivariance_from_algebra_structure() {
    // C acting on itself: n_{1,0}(a, ξ) = m₂(a, ξ), n_{0,0} = m₁ = 0
    let (a, rep) = delta_algebra_z3();
    let space = a.space().clone();
    let mut entries = Vec::new();
    for x in 0..3 {
        for m in 0..3 {
            for (o, c, _) in a.apply_basis(2, &[x, m]) {
                entries.push(BimoduleEntry {
                    a_inputs: vec![x],
                    m_input: m,
                    b_inputs: vec![],
                    output: o,
                    coeff: c,
                });
            }
            for (o, c, _) in a.apply_basis(2, &[m, x]) {
                entries.push(BimoduleEntry {
                    a_inputs: vec![],
                    m_input: m,
                    b_inputs: vec![x],
                    output: o,
                    coeff: c,
                });
            }
        }
    }
    let bimodule =
        BimoduleData::new(space.clone(), space.clone(), space.clone(), 2, entries).unwrap();
    assert!(check_bimodule_equivariance(&bimodule, &rep, &rep, &rep));
    // flip one sign in ρ_M: a single-entry mismatch appears
    let group = crate::groupcoh::FiniteGroup::cyclic(3);
    let twisted: Vec<Matrix<Rat>> = (0..3)
        .map(|g| {
            let mut m = rep.matrix(g).clone();
            if g > 0 {
                m = m.scale(&rat(-1, 1));
            }
            m
        })
        .collect();
    // -P(g) is still a representation of Z/3? (-1)² = 1 ≠ -1 breaks
    // the homomorphism, so twist by a genuine sign character instead:
    // Z/3 has none, so just scale the module action matrices without
    // rebuilding a GRep... a direct mismatched rep is simpler:
    drop(twisted);
    drop(group);
    let (_, rep_m_swapped) = delta_algebra_z3();
    // use a different (but valid) module representation: conjugate by
    // the permutation swapping δ₁ and δ₂ — pointwise product survives
    // but the bimodule built from the *original* action does not
    let swap = Matrix::from_rows(vec![
        vec![rat(1, 1), rat(0, 1), rat(0, 1)],
        vec![rat(0, 1), rat(0, 1), rat(1, 1)],
        vec![rat(0, 1), rat(1, 1), rat(0, 1)],
    ]);
    let conj: Vec<Matrix<Rat>> = (0..3)
        .map(|g| swap.mul(rep_m_swapped.matrix(g)).mul(&swap))
        .collect();
    let rep_m2 = GRep::new(
        crate::groupcoh::FiniteGroup::cyclic(3),
        a.space(),
        conj,
    )
    .unwrap();
    assert!(!check_bimodule_equivariance(&bimodule, &rep, &rep_m2, &rep));
}

#[test]
fn empty_bimodule_is_equivariant() {
    let (a, rep) = delta_algebra_z3();
    let space = a.space().clone();
    let bimodule =
        BimoduleData::new(space.clone(), space.clone(), space, 2, vec![]).unwrap();
    assert!(check_bimodule_equivariance(&bimodule, &rep, &rep, &rep));
}
