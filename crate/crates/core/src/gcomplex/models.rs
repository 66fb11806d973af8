//! Reusable desk-scale models: Morse-style circle and sphere complexes
//! with rotation actions, a sign-cancellation example, and the two
//! weighted graphs whose energy-zero subgroups are known in closed
//! form.

use num_traits::Zero;

use crate::field::{rat, Rat};
use crate::groupcoh::FiniteGroup;

use super::{EnergyGraph, GradedGComplex, Generator};

fn gen(id: &str, degree: i64) -> Generator {
    Generator {
        id: id.to_string(),
        degree,
        action_value: Rat::zero(),
    }
}

/// The circle subdivided into n arcs: n maxima in degree 1, n minima in
/// degree 0, with `∂ m_i = v_i - v_{i+1}` and Z/n rotating everything
/// with orientation signs +1. For n = 2 this is the square model, for
/// n = 3 the triangle model.
pub fn circle_zn(n: usize) -> GradedGComplex {
    assert!(n >= 2);
    let mut generators = Vec::new();
    for i in 0..n {
        generators.push(gen(&format!("m{i}"), 1));
    }
    for i in 0..n {
        generators.push(gen(&format!("v{i}"), 0));
    }
    let mut flows = Vec::new();
    for i in 0..n {
        flows.push((format!("m{i}"), format!("v{i}"), 1i8, Rat::zero()));
        flows.push((
            format!("m{i}"),
            format!("v{}", (i + 1) % n),
            -1i8,
            Rat::zero(),
        ));
    }
    let group = FiniteGroup::cyclic(n);
    let mut action = Vec::new();
    for g in 0..n {
        for i in 0..n {
            action.push((g, format!("m{i}"), format!("m{}", (i + g) % n), 1i8));
            action.push((g, format!("v{i}"), format!("v{}", (i + g) % n), 1i8));
        }
    }
    GradedGComplex::new(generators, flows, group, action).expect("circle model is valid")
}

/// Height function on the sphere: one maximum (degree 2), one minimum
/// (degree 0), no index-1 points. Z/2 rotation about the axis fixes
/// both critical points with signs +1.
pub fn sphere_z2() -> GradedGComplex {
    let generators = vec![gen("top", 2), gen("bottom", 0)];
    let group = FiniteGroup::cyclic(2);
    let action = vec![
        (0, "top".into(), "top".into(), 1),
        (0, "bottom".into(), "bottom".into(), 1),
        (1, "top".into(), "top".into(), 1),
        (1, "bottom".into(), "bottom".into(), 1),
    ];
    GradedGComplex::new(generators, vec![], group, action).expect("sphere model is valid")
}

/// A single generator fixed by the nontrivial element of Z/2 with
/// orientation sign -1: the averaging projector annihilates it.
pub fn cancellation_z2() -> GradedGComplex {
    let generators = vec![gen("p", 0)];
    let group = FiniteGroup::cyclic(2);
    let action = vec![
        (0, "p".into(), "p".into(), 1),
        (1, "p".into(), "p".into(), -1),
    ];
    GradedGComplex::new(generators, vec![], group, action).expect("cancellation model is valid")
}

/// An adversarial non-complex: one unbalanced square p → {q₁, q₂} → r
/// with all signs +1, so ∂² = 2 ≠ 0.
pub fn unbalanced_square() -> GradedGComplex {
    let generators = vec![gen("p", 2), gen("q1", 1), gen("q2", 1), gen("r", 0)];
    let flows = vec![
        ("p".into(), "q1".into(), 1, Rat::zero()),
        ("p".into(), "q2".into(), 1, Rat::zero()),
        ("q1".into(), "r".into(), 1, Rat::zero()),
        ("q2".into(), "r".into(), 1, Rat::zero()),
    ];
    let group = FiniteGroup::cyclic(1);
    let action = generators
        .iter()
        .map(|g| (0usize, g.id.clone(), g.id.clone(), 1i8))
        .collect();
    GradedGComplex::new(generators, flows, group, action).expect("square model is valid")
}

/// Triangle cycle graph: three vertices, each directed edge of energy
/// 1/3, Z/3 rotating. A path from v0 to its rotation image always
/// carries energy 1/3 + Z, so the energy-zero subgroup is trivial.
pub fn triangle_graph_z3() -> EnergyGraph {
    let vertices = vec!["v0".to_string(), "v1".to_string(), "v2".to_string()];
    let edges = (0..3)
        .map(|i| {
            (
                format!("v{i}"),
                format!("v{}", (i + 1) % 3),
                rat(1, 3),
                0i64,
                0u8,
            )
        })
        .collect();
    let group = FiniteGroup::cyclic(3);
    let mut vaction = Vec::new();
    for g in 0..3 {
        for i in 0..3 {
            vaction.push((g, format!("v{i}"), format!("v{}", (i + g) % 3)));
        }
    }
    EnergyGraph::new(vertices, edges, group, vaction, None, "v0".into())
        .expect("triangle graph is valid")
}

/// Star graph: a center fixed by all of Z/n with zero-energy spokes to
/// n freely permuted leaves. Every g admits the zero-energy path
/// leaf → center → g·leaf, so the energy-zero subgroup is all of G.
pub fn star_graph_zn(n: usize) -> EnergyGraph {
    assert!(n >= 2);
    let mut vertices = vec!["c".to_string()];
    for i in 0..n {
        vertices.push(format!("l{i}"));
    }
    let edges = (0..n)
        .map(|i| ("c".to_string(), format!("l{i}"), Rat::zero(), 0i64, 0u8))
        .collect();
    let group = FiniteGroup::cyclic(n);
    let mut vaction = Vec::new();
    for g in 0..n {
        vaction.push((g, "c".to_string(), "c".to_string()));
        for i in 0..n {
            vaction.push((g, format!("l{i}"), format!("l{}", (i + g) % n)));
        }
    }
    EnergyGraph::new(vertices, edges, group, vaction, None, "l0".into())
        .expect("star graph is valid")
}

/// Any graph with the trivial group: the subgroup can only be {e}.
pub fn trivial_group_graph() -> EnergyGraph {
    let vertices = vec!["a".to_string(), "b".to_string()];
    let edges = vec![("a".to_string(), "b".to_string(), rat(1, 2), 1i64, 1u8)];
    let group = FiniteGroup::cyclic(1);
    let vaction = vec![
        (0, "a".to_string(), "a".to_string()),
        (0, "b".to_string(), "b".to_string()),
    ];
    EnergyGraph::new(vertices, edges, group, vaction, None, "a".into())
        .expect("trivial graph is valid")
}
