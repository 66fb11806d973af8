//! Small A∞ fixtures used by the worked examples and the test suites.

use num_traits::One;

use crate::field::{rat, Rat};
use crate::groupcoh::FiniteGroup;
use crate::linalg::Matrix;

use super::{AInfStructure, GRep, GradedSpace, OpEntry};

fn entry(inputs: Vec<usize>, output: usize, coeff: Rat) -> OpEntry<Rat> {
    OpEntry {
        inputs,
        output,
        coeff,
        energy: None,
    }
}

/// A graded associative product carried into the A∞ sign convention:
/// `m₂(x, y) = (-1)^{deg x} x·y`. Entries are generated from a plain
/// multiplication table.
fn m2_entries(
    space: &GradedSpace,
    product: impl Fn(usize, usize) -> Vec<(usize, Rat)>,
) -> Vec<(usize, OpEntry<Rat>)> {
    let mut out = Vec::new();
    for x in 0..space.dim() {
        for y in 0..space.dim() {
            let sign = if space.degree(x).rem_euclid(2) == 1 {
                -Rat::one()
            } else {
                Rat::one()
            };
            for (o, c) in product(x, y) {
                out.push((2, entry(vec![x, y], o, c * sign.clone())));
            }
        }
    }
    out
}

/// Harmonic forms on the 2-torus: basis `1, dθ₁, dθ₂, dθ₁∧dθ₂` in
/// degrees 0, 1, 1, 2 with the wedge product and zero differential.
pub fn t2_harmonic_model() -> AInfStructure<Rat> {
    let space = GradedSpace::new(vec![
        ("1".into(), 0),
        ("dt1".into(), 1),
        ("dt2".into(), 1),
        ("dt1^dt2".into(), 2),
    ])
    .unwrap();
    // plain wedge table; 0 = unit, 3 = top form
    let wedge = |x: usize, y: usize| -> Vec<(usize, Rat)> {
        match (x, y) {
            (0, y) => vec![(y, rat(1, 1))],
            (x, 0) => vec![(x, rat(1, 1))],
            (1, 2) => vec![(3, rat(1, 1))],
            (2, 1) => vec![(3, rat(-1, 1))],
            _ => vec![],
        }
    };
    let entries = m2_entries(&space, wedge);
    AInfStructure::new(space, 3, entries, None).unwrap()
}

/// The Z/3-action on the torus model induced by the rotation sending
/// `dθᵢ ↦ dθ_{i+1}` with `dθ₀ + dθ₁ + dθ₂ = 0`: on (dθ₁, dθ₂) the
/// generator acts by the matrix [[0, -1], [1, -1]] (trace -1,
/// determinant +1), trivially in degrees 0 and 2.
pub fn t2_z3_representation(model: &AInfStructure<Rat>) -> GRep<Rat> {
    let group = FiniteGroup::cyclic(3);
    let rows = |m: [[i64; 4]; 4]| {
        Matrix::from_rows(
            m.iter()
                .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
    };
    // basis order: 1, dt1, dt2, dt1^dt2
    let g1 = rows([[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, -1, 0], [0, 0, 0, 1]]);
    let g2 = g1.mul(&g1);
    GRep::new(group, model.space(), vec![Matrix::identity(4), g1, g2]).unwrap()
}

/// Functions on Z/3 with the pointwise product (all in degree 0) and
/// the translation action permuting the delta-function basis.
pub fn delta_algebra_z3() -> (AInfStructure<Rat>, GRep<Rat>) {
    let space = GradedSpace::new(vec![
        ("d0".into(), 0),
        ("d1".into(), 0),
        ("d2".into(), 0),
    ])
    .unwrap();
    let pointwise = |x: usize, y: usize| -> Vec<(usize, Rat)> {
        if x == y {
            vec![(x, rat(1, 1))]
        } else {
            vec![]
        }
    };
    let entries = m2_entries(&space, pointwise);
    let a = AInfStructure::new(space, 3, entries, None).unwrap();
    let group = FiniteGroup::cyclic(3);
    let perm = |g: usize| {
        Matrix::from_fn(3, 3, |r, c| {
            if (c + g) % 3 == r {
                Rat::one()
            } else {
                Rat::from_integer(0.into())
            }
        })
    };
    let rep = GRep::new(group, a.space(), vec![perm(0), perm(1), perm(2)]).unwrap();
    (a, rep)
}

/// Truncated interval forms `1, t, dt` with `m₁(t) = dt` and all
/// products of non-unit elements zero: the smallest DGA with a
/// nonzero differential.
pub fn interval_dga() -> AInfStructure<Rat> {
    let space = GradedSpace::new(vec![
        ("1".into(), 0),
        ("t".into(), 0),
        ("dt".into(), 1),
    ])
    .unwrap();
    let product = |x: usize, y: usize| -> Vec<(usize, Rat)> {
        match (x, y) {
            (0, y) => vec![(y, rat(1, 1))],
            (x, 0) => vec![(x, rat(1, 1))],
            _ => vec![],
        }
    };
    let mut entries = m2_entries(&space, product);
    entries.push((1, entry(vec![1], 2, rat(1, 1)))); // m₁(t) = dt
    AInfStructure::new(space, 3, entries, None).unwrap()
}

/// A two-point space with the Z/2 swap action, used by the averaging
/// examples. All operations vanish, so any component data is a
/// morphism.
pub fn swap_model() -> (AInfStructure<Rat>, GRep<Rat>) {
    let space = GradedSpace::new(vec![("a".into(), 0), ("b".into(), 0)]).unwrap();
    let a = AInfStructure::new(space, 2, vec![], None).unwrap();
    let group = FiniteGroup::cyclic(2);
    let swap = Matrix::from_rows(vec![
        vec![rat(0, 1), rat(1, 1)],
        vec![rat(1, 1), rat(0, 1)],
    ]);
    let rep = GRep::new(group, a.space(), vec![Matrix::identity(2), swap]).unwrap();
    (a, rep)
}
