//! Laurent-polynomial matrix factorizations over cyclotomic fields,
//! character actions on them, and the rank bookkeeping of the worked
//! orbifold mirror-symmetry examples (projective line and plane with a
//! cyclic three-element action).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::ainfinity::{self, models as ainf_models};
use crate::field::{Cyc3, Cyclotomic, Rat, Scalar};
use crate::groupcoh::{invariant_rank, FiniteGroup};
use crate::linalg::Matrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MirrorError {
    #[error("operands use different variable sets")]
    VariableMismatch,
    #[error("substitution does not fix the potential minus its critical value")]
    PotentialNotInvariant,
    #[error("factors do not multiply to potential minus critical value")]
    NotAFactorization,
    #[error("character is not a homomorphism")]
    BadCharacter,
    #[error("model action does not preserve the data: {0}")]
    BadModelAction(String),
    #[error("substitution coefficient is not invertible")]
    NotInvertible,
}

/// A Laurent polynomial: finitely many terms with integer (possibly
/// negative) exponent vectors and nonzero scalar coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<F: Scalar> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, F>,
}

impl<F: Scalar> LaurentPoly<F> {
    pub fn new(vars: Vec<String>, terms: Vec<(Vec<i64>, F)>) -> Self {
        let nvars = vars.len();
        let mut map: BTreeMap<Vec<i64>, F> = BTreeMap::new();
        for (exp, c) in terms {
            assert_eq!(exp.len(), nvars, "exponent length must match variables");
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(exp).or_insert_with(F::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { vars, terms: map }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: F) -> Self {
        let n = vars.len();
        Self::new(vars, vec![(vec![0; n], c)])
    }

    /// Single monomial `c · x₁^{e₁} ⋯`.
    pub fn monomial(vars: Vec<String>, exps: Vec<i64>, c: F) -> Self {
        Self::new(vars, vec![(exps, c)])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_vars(&self, other: &Self) -> Result<(), MirrorError> {
        if self.vars != other.vars {
            return Err(MirrorError::VariableMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MirrorError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(F::zero);
            *entry = entry.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MirrorError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MirrorError> {
        self.check_vars(other)?;
        let mut terms: BTreeMap<Vec<i64>, F> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(F::zero);
                *entry = entry.clone() + c1.clone() * c2.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Monomial substitution: variable i ↦ coeffᵢ · Π xⱼ^{Mᵢⱼ}.
    /// Coefficients must be invertible when negative exponents occur.
    pub fn substitute(&self, map: &MonomialMap<F>) -> Result<Self, MirrorError> {
        if map.images.len() != self.vars.len() {
            return Err(MirrorError::VariableMismatch);
        }
        let mut out: BTreeMap<Vec<i64>, F> = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            let mut new_exp = vec![0i64; self.vars.len()];
            let mut new_coeff = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (c_i, m_row) = &map.images[i];
                new_coeff = new_coeff * scalar_pow(c_i, e)?;
                for (j, &mij) in m_row.iter().enumerate() {
                    new_exp[j] += e * mij;
                }
            }
            let entry = out.entry(new_exp).or_insert_with(F::zero);
            *entry = entry.clone() + new_coeff;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: out,
        })
    }
}

fn scalar_pow<F: Scalar>(base: &F, e: i64) -> Result<F, MirrorError> {
    let positive = {
        let mut acc = F::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    };
    if e >= 0 {
        Ok(positive)
    } else {
        positive.inverse().ok_or(MirrorError::NotInvertible)
    }
}

/// A monomial change of variables, one image per variable.
#[derive(Debug, Clone)]
pub struct MonomialMap<F: Scalar> {
    /// images[i] = (coefficient, exponent row): xᵢ ↦ c · Π xⱼ^{row[j]}
    pub images: Vec<(F, Vec<i64>)>,
}

impl<F: Scalar> MonomialMap<F> {
    /// Scaling map xᵢ ↦ cᵢ · xᵢ.
    pub fn scaling(coeffs: Vec<F>) -> Self {
        let n = coeffs.len();
        MonomialMap {
            images: coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut row = vec![0i64; n];
                    row[i] = 1;
                    (c, row)
                })
                .collect(),
        }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::scaling(vec![F::one(); nvars])
    }
}

/// A matrix factorization `a·b = (W - c)·Id` of a Laurent potential.
/// Rank one is the square case of size 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFactorization<F: Scalar> {
    pub potential: LaurentPoly<F>,
    pub critical_value: F,
    pub factor_a: Vec<Vec<LaurentPoly<F>>>,
    pub factor_b: Vec<Vec<LaurentPoly<F>>>,
}

impl<F: Scalar> MatrixFactorization<F> {
    pub fn rank_one(
        potential: LaurentPoly<F>,
        critical_value: F,
        a: LaurentPoly<F>,
        b: LaurentPoly<F>,
    ) -> Result<Self, MirrorError> {
        Self::new(potential, critical_value, vec![vec![a]], vec![vec![b]])
    }

    pub fn new(
        potential: LaurentPoly<F>,
        critical_value: F,
        factor_a: Vec<Vec<LaurentPoly<F>>>,
        factor_b: Vec<Vec<LaurentPoly<F>>>,
    ) -> Result<Self, MirrorError> {
        let mf = MatrixFactorization {
            potential,
            critical_value,
            factor_a,
            factor_b,
        };
        if !mf.verify()? {
            return Err(MirrorError::NotAFactorization);
        }
        Ok(mf)
    }

    /// Exact check of `a·b = (W - c)·Id`.
    pub fn verify(&self) -> Result<bool, MirrorError> {
        let n = self.factor_a.len();
        if n == 0
            || self.factor_a.iter().any(|r| r.len() != n)
            || self.factor_b.len() != n
            || self.factor_b.iter().any(|r| r.len() != n)
        {
            return Ok(false);
        }
        let vars = self.potential.vars().to_vec();
        let shifted = self.potential.sub(&LaurentPoly::constant(
            vars.clone(),
            self.critical_value.clone(),
        ))?;
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero(vars.clone());
                for k in 0..n {
                    acc = acc.add(&self.factor_a[i][k].mul(&self.factor_b[k][j])?)?;
                }
                let expected = if i == j {
                    shifted.clone()
                } else {
                    LaurentPoly::zero(vars.clone())
                };
                if acc != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Transport along a monomial change of variables that fixes
    /// `W - c`; the result verifies by construction.
    pub fn act(&self, map: &MonomialMap<F>) -> Result<Self, MirrorError> {
        let vars = self.potential.vars().to_vec();
        let shifted = self.potential.sub(&LaurentPoly::constant(
            vars.clone(),
            self.critical_value.clone(),
        ))?;
        if shifted.substitute(map)? != shifted {
            return Err(MirrorError::PotentialNotInvariant);
        }
        let sub_all = |m: &Vec<Vec<LaurentPoly<F>>>| -> Result<_, MirrorError> {
            m.iter()
                .map(|row| row.iter().map(|p| p.substitute(map)).collect())
                .collect::<Result<Vec<Vec<_>>, _>>()
        };
        Self::new(
            self.potential.clone(),
            self.critical_value.clone(),
            sub_all(&self.factor_a)?,
            sub_all(&self.factor_b)?,
        )
    }
}

/// Does every substitution in the list fix the potential exactly?
pub fn check_potential_invariance<F: Scalar>(
    potential: &LaurentPoly<F>,
    substitutions: &[MonomialMap<F>],
) -> Result<bool, MirrorError> {
    for map in substitutions {
        if &potential.substitute(map)? != potential {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A character G → μ_N given by exponents of the distinguished
/// primitive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    exps: Vec<i64>,
    modulus: i64,
}

impl Character {
    pub fn new(group: &FiniteGroup, exps: Vec<i64>, modulus: i64) -> Result<Self, MirrorError> {
        if exps.len() != group.order() || exps[0].rem_euclid(modulus) != 0 {
            return Err(MirrorError::BadCharacter);
        }
        for g in group.elements() {
            for h in group.elements() {
                let lhs = (exps[g] + exps[h]).rem_euclid(modulus);
                if exps[group.mul(g, h)].rem_euclid(modulus) != lhs {
                    return Err(MirrorError::BadCharacter);
                }
            }
        }
        Ok(Character { exps, modulus })
    }

    /// χ_k on Z/n: the generator is sent to ζ^k.
    pub fn cyclic(n: usize, k: i64) -> Self {
        Character {
            exps: (0..n as i64).map(|g| (g * k).rem_euclid(n as i64)).collect(),
            modulus: n as i64,
        }
    }

    pub fn value<const N: u64>(&self, g: usize) -> Cyclotomic<N> {
        assert_eq!(self.modulus, N as i64);
        Cyclotomic::<N>::zeta_pow(self.exps[g])
    }

    pub fn inverse_times(&self, other: &Character) -> Character {
        assert_eq!(self.modulus, other.modulus);
        Character {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| (b - a).rem_euclid(self.modulus))
                .collect(),
            modulus: self.modulus,
        }
    }
}

/// One object of the directed vanishing-cycle model: a G-orbit of
/// cycles with its set of connected components permuted by G.
#[derive(Debug, Clone)]
pub struct CycleObject {
    pub id: String,
    pub components: Vec<String>,
    /// component_action[g][c] = image component index
    pub component_action: Vec<Vec<usize>>,
}

/// Intersection points of an ordered pair of distinct objects.
#[derive(Debug, Clone)]
pub struct IntersectionSet {
    pub points: Vec<String>,
    /// point_action[g][p] = image point index
    pub point_action: Vec<Vec<usize>>,
}

/// The combinatorial model of a directed vanishing-cycle category:
/// objects are listed in vanishing-path order, morphisms only run from
/// lower to higher index (and endomorphisms of a single object).
#[derive(Debug, Clone)]
pub struct VanishingCycleModel {
    pub group: FiniteGroup,
    pub cycles: Vec<CycleObject>,
    pub intersections: BTreeMap<(usize, usize), IntersectionSet>,
}

impl VanishingCycleModel {
    pub fn validate(&self) -> Result<(), MirrorError> {
        let ord = self.group.order();
        let check_perm_action =
            |action: &Vec<Vec<usize>>, size: usize, what: &str| -> Result<(), MirrorError> {
                if action.len() != ord || action.iter().any(|row| row.len() != size) {
                    return Err(MirrorError::BadModelAction(format!(
                        "{what}: action has the wrong shape"
                    )));
                }
                if (0..size).any(|i| action[0][i] != i) {
                    return Err(MirrorError::BadModelAction(format!(
                        "{what}: identity must act trivially"
                    )));
                }
                for g in 0..ord {
                    let mut seen = vec![false; size];
                    for &img in &action[g] {
                        if img >= size || seen[img] {
                            return Err(MirrorError::BadModelAction(format!(
                                "{what}: element {g} is not a permutation"
                            )));
                        }
                        seen[img] = true;
                    }
                    for h in 0..ord {
                        let gh = self.group.mul(g, h);
                        for i in 0..size {
                            if action[g][action[h][i]] != action[gh][i] {
                                return Err(MirrorError::BadModelAction(format!(
                                    "{what}: not a homomorphism at ({g}, {h})"
                                )));
                            }
                        }
                    }
                }
                Ok(())
            };
        for c in &self.cycles {
            check_perm_action(&c.component_action, c.components.len(), &c.id)?;
        }
        for ((i1, i2), set) in &self.intersections {
            if i1 >= i2 || *i2 >= self.cycles.len() {
                return Err(MirrorError::BadModelAction(
                    "intersection keys must be ordered pairs of objects".into(),
                ));
            }
            check_perm_action(
                &set.point_action,
                set.points.len(),
                &format!("intersection ({i1}, {i2})"),
            )?;
        }
        Ok(())
    }
}

/// Morphism ranks in the directed category: for `i1 < i2` the full
/// rank is the number of intersection points and the invariant rank is
/// computed from the permutation representation on the points twisted
/// by χ₁⁻¹χ₂; for a repeated object the components play the role of
/// the points; for `i1 > i2` the directedness convention gives zero.
pub fn fs_hom_rank<const N: u64>(
    model: &VanishingCycleModel,
    source: (usize, &Character),
    target: (usize, &Character),
) -> Result<(usize, usize), MirrorError> {
    model.validate()?;
    let (i1, chi1) = source;
    let (i2, chi2) = target;
    let twist = chi1.inverse_times(chi2);
    let ord = model.group.order();
    let twisted_permutation_rank = |size: usize, action: &Vec<Vec<usize>>| {
        if size == 0 {
            return Ok(0usize);
        }
        let rep: Vec<Matrix<Cyclotomic<N>>> = (0..ord)
            .map(|g| {
                Matrix::from_fn(size, size, |r, c| {
                    if action[g][c] == r {
                        twist.value::<N>(g)
                    } else {
                        Cyclotomic::zero()
                    }
                })
            })
            .collect();
        invariant_rank(&model.group, &rep)
            .map_err(|e| MirrorError::BadModelAction(e.to_string()))
    };
    if i1 == i2 {
        let object = &model.cycles[i1];
        let size = object.components.len();
        let inv = twisted_permutation_rank(size, &object.component_action)?;
        Ok((size, inv))
    } else if i1 < i2 {
        match model.intersections.get(&(i1, i2)) {
            Some(set) => {
                let inv = twisted_permutation_rank(set.points.len(), &set.point_action)?;
                Ok((set.points.len(), inv))
            }
            None => Ok((0, 0)),
        }
    } else {
        Ok((0, 0))
    }
}

/// The projective-plane vanishing-cycle model: three invariant cycles
/// in the ordered fiber, each pair intersecting in three freely
/// permuted points.
pub fn cp2_vanishing_model() -> VanishingCycleModel {
    let group = FiniteGroup::cyclic(3);
    let rotation = vec![
        vec![0, 1, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
    ];
    let fixed = vec![vec![0], vec![0], vec![0]];
    let cycle = |id: &str| CycleObject {
        id: id.into(),
        components: vec![format!("{id}-circle")],
        component_action: fixed.clone(),
    };
    let points = |names: [&str; 3]| IntersectionSet {
        points: names.iter().map(|s| s.to_string()).collect(),
        point_action: rotation.clone(),
    };
    let mut intersections = BTreeMap::new();
    intersections.insert((0, 1), points(["x0", "y0", "z0"]));
    intersections.insert((1, 2), points(["x1", "y1", "z1"]));
    intersections.insert((0, 2), points(["xb0", "yb0", "zb0"]));
    VanishingCycleModel {
        group,
        cycles: vec![cycle("V0"), cycle("V1"), cycle("V2")],
        intersections,
    }
}

/// Invariant ranks of the Clifford-torus Floer algebra under the
/// coordinate rotation, together with the Z/2-graded totals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordReport {
    /// ranks in degrees 0, 1, 2 of the invariant part
    pub invariant_by_degree: [usize; 3],
    /// (even, odd) before taking invariants
    pub equivariant_even_odd: (usize, usize),
    /// (even, odd) of the invariant part
    pub invariant_even_odd: (usize, usize),
}

/// Floer cohomology of the Clifford torus with itself, modeled by
/// harmonic forms: full even/odd ranks (2, 2); the rotation leaves no
/// 1-forms invariant, so the invariant ranks are (1, 0, 1) per degree
/// and (2, 0) in the Z/2-grading. Cross-checked against the averaged
/// trace of each degree block.
pub fn clifford_floer_ranks() -> CliffordReport {
    let t2 = ainf_models::t2_harmonic_model();
    let rep = ainf_models::t2_z3_representation(&t2);
    assert!(ainfinity::check_equivariance(&t2, &rep));
    let inv = ainfinity::restrict_invariant(&t2, &rep).expect("rotation action is equivariant");
    let mut by_degree = [0usize; 3];
    for i in 0..inv.space().dim() {
        by_degree[inv.space().degree(i) as usize] += 1;
    }
    // independent route: invariant rank of each degree block
    let group = rep.group().clone();
    for (d, expected) in by_degree.iter().enumerate() {
        let idxs: Vec<usize> = (0..t2.space().dim())
            .filter(|&i| t2.space().degree(i) == d as i64)
            .collect();
        let block: Vec<Matrix<Rat>> = group
            .elements()
            .map(|g| {
                Matrix::from_fn(idxs.len(), idxs.len(), |r, c| {
                    rep.matrix(g).get(idxs[r], idxs[c]).clone()
                })
            })
            .collect();
        let rank = invariant_rank(&group, &block).expect("degree blocks form representations");
        assert_eq!(rank, *expected, "projector and restriction disagree");
    }
    CliffordReport {
        invariant_by_degree: by_degree,
        equivariant_even_odd: (2, 2),
        invariant_even_odd: (by_degree[0] + by_degree[2], by_degree[1]),
    }
}

/// Even/odd morphism ranks for the singularity-category side: the
/// degree-0 endomorphisms carry the trivial two-dimensional action,
/// the degree-1 ones are twisted by ρ and ρ⁻¹ under
/// `(x, y) ↦ (ρx, ρ⁻¹y)`, so their invariant part vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DbSingReport {
    pub equivariant_even_odd: (usize, usize),
    pub invariant_even_odd: (usize, usize),
}

pub fn dbsing_ranks() -> DbSingReport {
    let group = FiniteGroup::cyclic(3);
    let identity = || Matrix::<Cyc3>::identity(2);
    let even: Vec<Matrix<Cyc3>> = vec![identity(), identity(), identity()];
    let odd: Vec<Matrix<Cyc3>> = (0..3i64)
        .map(|g| {
            Matrix::from_fn(2, 2, |r, c| {
                if r != c {
                    Cyc3::zero()
                } else if r == 0 {
                    Cyc3::zeta_pow(g)
                } else {
                    Cyc3::zeta_pow(-g)
                }
            })
        })
        .collect();
    let even_rank = invariant_rank(&group, &even).expect("trivial action");
    let odd_rank = invariant_rank(&group, &odd).expect("diagonal character action");
    DbSingReport {
        equivariant_even_odd: (2, 2),
        invariant_even_odd: (even_rank, odd_rank),
    }
}

/// The balanced-fiber matrix factorization `(1 - w)(w⁻³ + w⁻² + w⁻¹ -
/// 1 - w - w²)` of `w³ + w⁻³ - 2`.
pub fn cp1_balanced_mf() -> MatrixFactorization<Cyc3> {
    let vars = vec!["w".to_string()];
    let c = |n: i64| Cyc3::from_int(n);
    let potential = LaurentPoly::new(
        vars.clone(),
        vec![(vec![3], c(1)), (vec![-3], c(1))],
    );
    let a = LaurentPoly::new(vars.clone(), vec![(vec![0], c(1)), (vec![1], c(-1))]);
    let b = LaurentPoly::new(
        vars,
        vec![
            (vec![-3], c(1)),
            (vec![-2], c(1)),
            (vec![-1], c(1)),
            (vec![0], c(-1)),
            (vec![1], c(-1)),
            (vec![2], c(-1)),
        ],
    );
    MatrixFactorization::rank_one(potential, c(2), a, b).expect("displayed identity holds")
}

/// The invariant factorization `(1 - w³)(w⁻³ - 1)` of the same
/// potential.
pub fn cp1_invariant_mf() -> MatrixFactorization<Cyc3> {
    let vars = vec!["w".to_string()];
    let c = |n: i64| Cyc3::from_int(n);
    let potential = LaurentPoly::new(
        vars.clone(),
        vec![(vec![3], c(1)), (vec![-3], c(1))],
    );
    let a = LaurentPoly::new(vars.clone(), vec![(vec![0], c(1)), (vec![3], c(-1))]);
    let b = LaurentPoly::new(vars, vec![(vec![-3], c(1)), (vec![0], c(-1))]);
    MatrixFactorization::rank_one(potential, c(2), a, b).expect("displayed identity holds")
}

/// The downstairs form `(1 - z)(z⁻¹ - 1)` of `z + z⁻¹ - 2`.
pub fn cp1_downstairs_mf() -> MatrixFactorization<Cyc3> {
    let vars = vec!["z".to_string()];
    let c = |n: i64| Cyc3::from_int(n);
    let potential = LaurentPoly::new(
        vars.clone(),
        vec![(vec![1], c(1)), (vec![-1], c(1))],
    );
    let a = LaurentPoly::new(vars.clone(), vec![(vec![0], c(1)), (vec![1], c(-1))]);
    let b = LaurentPoly::new(vars, vec![(vec![-1], c(1)), (vec![0], c(-1))]);
    MatrixFactorization::rank_one(potential, c(2), a, b).expect("displayed identity holds")
}

/// The dual-group generator acting on the covering coordinate:
/// `w ↦ ρw`.
pub fn cp1_rho_twist() -> MonomialMap<Cyc3> {
    MonomialMap::scaling(vec![Cyc3::zeta()])
}

/// The superpotential `x + y + 1/(xy)` of the plane and the
/// coordinate rotation `(x, y) ↦ (y, 1/(xy))` generating the mirror
/// action.
pub fn cp2_potential() -> LaurentPoly<Cyc3> {
    let vars = vec!["x".to_string(), "y".to_string()];
    let one = Cyc3::one;
    LaurentPoly::new(
        vars,
        vec![
            (vec![1, 0], one()),
            (vec![0, 1], one()),
            (vec![-1, -1], one()),
        ],
    )
}

pub fn cp2_rotation() -> MonomialMap<Cyc3> {
    MonomialMap {
        images: vec![
            (Cyc3::one(), vec![0, 1]),   // x ↦ y
            (Cyc3::one(), vec![-1, -1]), // y ↦ 1/(xy)
        ],
    }
}

#[cfg(test)]
mod tests;
