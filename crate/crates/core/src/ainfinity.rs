//! Finite-dimensional A∞-algebras, bimodules and morphisms with group
//! representations.
//!
//! Conventions, fixed once for the whole crate:
//! * operations `m_k` shift degree by `2 - k` (cohomological);
//! * the A∞-relation carries the sign `(-1)^{|x_1|+...+|x_{i-1}|+i-1}`
//!   on the summand inserting `m` at 1-based position `i`, with `|x|`
//!   the honest degree — equivalently the reduced-degree Koszul sign;
//! * morphism components `f_k` shift degree by `1 - k`;
//! * bimodule maps `n_{k1,k2}` shift degree by `1 - k1 - k2`, making
//!   `n_{0,0}` the differential;
//! * `m_0` is always zero (strict structures); filtered behavior is
//!   emulated by optional energy weights truncated at a cutoff.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::field::{Rat, Scalar};
use crate::groupcoh::FiniteGroup;
use crate::linalg::Matrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AInfError {
    #[error("duplicate basis id {0:?}")]
    DuplicateId(String),
    #[error("entry for m_{0} violates the degree shift")]
    DegreeShiftViolation(usize),
    #[error("entry references an out-of-range basis index")]
    BadIndex,
    #[error("energy weights require a cutoff (and vice versa)")]
    EnergyWithoutCutoff,
    #[error("arity exceeds the structure bound")]
    ArityOutOfRange,
    #[error("representation is not a degree-preserving homomorphism: {0}")]
    BadRepresentation(String),
    #[error("the operations are not equivariant for this representation")]
    NotEquivariant,
    #[error("|G| is not invertible in the coefficient field")]
    FieldNotDivisible,
    #[error("Ψ_{0} is not a chain map")]
    NotChainMap(usize),
    #[error("matrix shape does not match the graded space")]
    ShapeMismatch,
}

/// A finite graded basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSpace {
    basis: Vec<(String, i64)>,
}

impl GradedSpace {
    pub fn new(basis: Vec<(String, i64)>) -> Result<Self, AInfError> {
        let mut seen = std::collections::HashSet::new();
        for (id, _) in &basis {
            if !seen.insert(id.clone()) {
                return Err(AInfError::DuplicateId(id.clone()));
            }
        }
        Ok(GradedSpace { basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].1
    }

    pub fn id(&self, i: usize) -> &str {
        &self.basis[i].0
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.basis.iter().position(|(b, _)| b == id)
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.basis.iter().map(|(_, d)| *d).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// One sparse tensor entry of an operation or morphism component.
#[derive(Debug, Clone, PartialEq)]
pub struct OpEntry<F> {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub coeff: F,
    pub energy: Option<Rat>,
}

/// Terms of an evaluated expression: (basis index, accumulated energy)
/// → coefficient. Energy stays at zero for unweighted structures.
pub type Terms<F> = BTreeMap<(usize, Rat), F>;

/// Sparse tensor lookup: input tuple → (output, coefficient, energy).
type OpLookup<F> = HashMap<Vec<usize>, Vec<(usize, F, Rat)>>;

/// Morphism component lookup: input tuple → (output, coefficient).
type ComponentLookup<F> = HashMap<Vec<usize>, Vec<(usize, F)>>;

fn add_term<F: Scalar>(terms: &mut Terms<F>, idx: usize, energy: Rat, coeff: F) {
    let entry = terms.entry((idx, energy)).or_insert_with(F::zero);
    *entry = entry.clone() + coeff;
}

fn prune<F: Scalar>(terms: &mut Terms<F>) {
    terms.retain(|_, c| !c.is_zero());
}

/// A strict A∞-structure with operations up to a fixed arity bound.
#[derive(Debug, Clone)]
pub struct AInfStructure<F: Scalar> {
    space: GradedSpace,
    max_arity: usize,
    /// lookup[k-1]: entries of m_k
    lookup: Vec<OpLookup<F>>,
    cutoff: Option<Rat>,
}

impl<F: Scalar> AInfStructure<F> {
    pub fn new(
        space: GradedSpace,
        max_arity: usize,
        entries: Vec<(usize, OpEntry<F>)>,
        cutoff: Option<Rat>,
    ) -> Result<Self, AInfError> {
        let mut lookup: Vec<OpLookup<F>> = vec![HashMap::new(); max_arity];
        for (arity, entry) in entries {
            if arity == 0 || arity > max_arity || entry.inputs.len() != arity {
                return Err(AInfError::ArityOutOfRange);
            }
            if entry.output >= space.dim()
                || entry.inputs.iter().any(|&i| i >= space.dim())
            {
                return Err(AInfError::BadIndex);
            }
            let in_deg: i64 = entry.inputs.iter().map(|&i| space.degree(i)).sum();
            if space.degree(entry.output) != in_deg + 2 - arity as i64 {
                return Err(AInfError::DegreeShiftViolation(arity));
            }
            if entry.energy.is_some() && cutoff.is_none() {
                return Err(AInfError::EnergyWithoutCutoff);
            }
            let energy = entry.energy.unwrap_or_else(Rat::zero);
            lookup[arity - 1]
                .entry(entry.inputs)
                .or_default()
                .push((entry.output, entry.coeff, energy));
        }
        Ok(AInfStructure {
            space,
            max_arity,
            lookup,
            cutoff,
        })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn cutoff(&self) -> Option<&Rat> {
        self.cutoff.as_ref()
    }

    /// m_k on a tuple of basis indices.
    pub fn apply_basis(&self, k: usize, inputs: &[usize]) -> Vec<(usize, F, Rat)> {
        if k == 0 || k > self.max_arity {
            return Vec::new();
        }
        self.lookup[k - 1]
            .get(inputs)
            .cloned()
            .unwrap_or_default()
    }

    fn below_cutoff(&self, energy: &Rat) -> bool {
        match &self.cutoff {
            Some(c) => energy < c,
            None => true,
        }
    }

    /// The A∞-relation on every basis tuple of length ≤ `up_to`.
    /// Returns the first failing instance, if any.
    pub fn check_relations(&self, up_to: usize) -> Result<AInfRelationReport, AInfError> {
        if up_to > self.max_arity {
            return Err(AInfError::ArityOutOfRange);
        }
        let n = self.space.dim();
        for k in 1..=up_to {
            for tuple in tuples(n, k) {
                let mut acc: Terms<F> = Terms::new();
                for k2 in 1..=k {
                    let k1 = k - k2 + 1;
                    if k1 > self.max_arity || k2 > self.max_arity {
                        continue;
                    }
                    for i in 0..=(k - k2) {
                        let deg_sum: i64 = tuple[..i]
                            .iter()
                            .map(|&b| self.space.degree(b))
                            .sum();
                        let negative = (deg_sum + i as i64).rem_euclid(2) == 1;
                        for (mid, c_in, e_in) in self.apply_basis(k2, &tuple[i..i + k2]) {
                            let mut outer: Vec<usize> = Vec::with_capacity(k1);
                            outer.extend_from_slice(&tuple[..i]);
                            outer.push(mid);
                            outer.extend_from_slice(&tuple[i + k2..]);
                            for (out, c_out, e_out) in self.apply_basis(k1, &outer) {
                                let energy = &e_in + &e_out;
                                if !self.below_cutoff(&energy) {
                                    continue;
                                }
                                let mut coeff = c_in.clone() * c_out;
                                if negative {
                                    coeff = -coeff;
                                }
                                add_term(&mut acc, out, energy, coeff);
                            }
                        }
                    }
                }
                prune(&mut acc);
                if !acc.is_empty() {
                    return Ok(AInfRelationReport {
                        holds: false,
                        failing_arity: Some(k),
                        failing_tuple: Some(
                            tuple.iter().map(|&b| self.space.id(b).to_string()).collect(),
                        ),
                    });
                }
            }
        }
        Ok(AInfRelationReport {
            holds: true,
            failing_arity: None,
            failing_tuple: None,
        })
    }

    /// m_k extended multilinearly to sparse vectors (no input energies;
    /// representation images never carry them).
    fn apply_multi(&self, k: usize, vectors: &[Vec<(usize, F)>]) -> Terms<F> {
        assert_eq!(vectors.len(), k);
        let mut out = Terms::new();
        let mut choice = vec![0usize; k];
        loop {
            let mut coeff = F::one();
            let mut inputs = Vec::with_capacity(k);
            let mut dead = false;
            for (slot, vec) in choice.iter().zip(vectors) {
                if vec.is_empty() {
                    dead = true;
                    break;
                }
                let (idx, c) = &vec[*slot];
                inputs.push(*idx);
                coeff = coeff * c.clone();
            }
            if dead {
                return out;
            }
            if !coeff.is_zero() {
                for (o, c, e) in self.apply_basis(k, &inputs) {
                    if self.below_cutoff(&e) {
                        add_term(&mut out, o, e, coeff.clone() * c);
                    }
                }
            }
            // advance the mixed-radix counter
            let mut pos = 0;
            loop {
                if pos == k {
                    prune(&mut out);
                    return out;
                }
                choice[pos] += 1;
                if choice[pos] < vectors[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// All length-k tuples over 0..n in lexicographic order.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for b in 0..n {
                let mut t2 = t.clone();
                t2.push(b);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct AInfRelationReport {
    pub holds: bool,
    pub failing_arity: Option<usize>,
    pub failing_tuple: Option<Vec<String>>,
}

/// A degree-preserving invertible representation of a finite group on
/// a graded space.
#[derive(Debug, Clone)]
pub struct GRep<F: Scalar> {
    group: FiniteGroup,
    matrices: Vec<Matrix<F>>,
}

impl<F: Scalar> GRep<F> {
    pub fn new(
        group: FiniteGroup,
        space: &GradedSpace,
        matrices: Vec<Matrix<F>>,
    ) -> Result<Self, AInfError> {
        if matrices.len() != group.order() {
            return Err(AInfError::BadRepresentation(
                "one matrix per group element required".into(),
            ));
        }
        let n = space.dim();
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(AInfError::ShapeMismatch);
            }
            for r in 0..n {
                for c in 0..n {
                    if !m.get(r, c).is_zero() && space.degree(r) != space.degree(c) {
                        return Err(AInfError::BadRepresentation(format!(
                            "element {g} does not preserve degrees"
                        )));
                    }
                }
            }
        }
        if matrices[0] != Matrix::identity(n) {
            return Err(AInfError::BadRepresentation(
                "identity element must act as the identity".into(),
            ));
        }
        let rep = GRep { group, matrices };
        rep.check_homomorphism()?;
        Ok(rep)
    }

    /// Build without the homomorphism check. Exists so that defective
    /// matrix families (for example a sign flip that is not a
    /// character) can still be probed by `check_equivariance`.
    pub fn new_unchecked(
        group: FiniteGroup,
        space: &GradedSpace,
        matrices: Vec<Matrix<F>>,
    ) -> Result<Self, AInfError> {
        if matrices.len() != group.order() {
            return Err(AInfError::BadRepresentation(
                "one matrix per group element required".into(),
            ));
        }
        let n = space.dim();
        for m in &matrices {
            if m.rows() != n || m.cols() != n {
                return Err(AInfError::ShapeMismatch);
            }
        }
        Ok(GRep { group, matrices })
    }

    fn check_homomorphism(&self) -> Result<(), AInfError> {
        for g in self.group.elements() {
            for h in self.group.elements() {
                if self.matrices[g].mul(&self.matrices[h])
                    != self.matrices[self.group.mul(g, h)]
                {
                    return Err(AInfError::BadRepresentation(format!(
                        "homomorphism fails at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn matrix(&self, g: usize) -> &Matrix<F> {
        &self.matrices[g]
    }

    pub fn inverse_matrix(&self, g: usize) -> &Matrix<F> {
        &self.matrices[self.group.inverse(g)]
    }

    fn column_of(&self, g: usize, basis: usize) -> Vec<(usize, F)> {
        let m = &self.matrices[g];
        (0..m.rows())
            .filter_map(|r| {
                let v = m.get(r, basis);
                if v.is_zero() {
                    None
                } else {
                    Some((r, v.clone()))
                }
            })
            .collect()
    }
}

/// ρ(g) m_k(x₁..x_k) = m_k(ρ(g)x₁, ..., ρ(g)x_k) on all basis tuples
/// up to the arity bound.
pub fn check_equivariance<F: Scalar>(a: &AInfStructure<F>, rep: &GRep<F>) -> bool {
    let n = a.space.dim();
    for g in rep.group.elements() {
        for k in 1..=a.max_arity {
            for tuple in tuples(n, k) {
                // left side: apply m, then push through ρ(g)
                let mut lhs = Terms::new();
                for (out, c, e) in a.apply_basis(k, &tuple) {
                    for (r, v) in rep.column_of(g, out) {
                        add_term(&mut lhs, r, e.clone(), c.clone() * v);
                    }
                }
                prune(&mut lhs);
                // right side: push inputs through ρ(g), then apply m
                let vectors: Vec<Vec<(usize, F)>> =
                    tuple.iter().map(|&b| rep.column_of(g, b)).collect();
                let rhs = a.apply_multi(k, &vectors);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Restriction of an equivariant structure to the invariant subspace.
/// The invariant basis is computed per degree from the averaging
/// projector, so basis vectors are homogeneous.
pub fn restrict_invariant<F: Scalar>(
    a: &AInfStructure<F>,
    rep: &GRep<F>,
) -> Result<AInfStructure<F>, AInfError> {
    rep.check_homomorphism()?;
    if !check_equivariance(a, rep) {
        return Err(AInfError::NotEquivariant);
    }
    let n = a.space.dim();
    let ord = rep.group.order();
    let inv_order = invert_order::<F>(ord)?;
    // averaging projector on the whole space
    let mut sum = Matrix::<F>::zero(n, n);
    for g in rep.group.elements() {
        sum = sum.add(rep.matrix(g));
    }
    let projector = sum.scale(&inv_order);
    // homogeneous basis: project per degree
    let mut basis_vectors: Vec<Vec<F>> = Vec::new();
    let mut basis_degrees: Vec<i64> = Vec::new();
    for d in a.space.degrees() {
        let idxs: Vec<usize> = (0..n).filter(|&i| a.space.degree(i) == d).collect();
        let block = Matrix::from_fn(n, idxs.len(), |r, c| projector.get(r, idxs[c]).clone());
        for col in block.column_space_basis() {
            basis_vectors.push(col);
            basis_degrees.push(d);
        }
    }
    let inv_dim = basis_vectors.len();
    let basis_matrix = Matrix::from_columns_with_rows(basis_vectors.clone(), n);
    let space = GradedSpace::new(
        (0..inv_dim)
            .map(|i| (format!("inv{i}"), basis_degrees[i]))
            .collect(),
    )?;
    // restricted operations: evaluate m_k on invariant vectors and
    // re-express in invariant coordinates, energy level by energy level
    let mut entries: Vec<(usize, OpEntry<F>)> = Vec::new();
    for k in 1..=a.max_arity {
        for tuple in tuples(inv_dim, k) {
            let vectors: Vec<Vec<(usize, F)>> = tuple
                .iter()
                .map(|&i| {
                    basis_vectors[i]
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(r, c)| (r, c.clone()))
                        .collect()
                })
                .collect();
            let image = a.apply_multi(k, &vectors);
            let mut by_energy: BTreeMap<Rat, Vec<F>> = BTreeMap::new();
            for ((idx, energy), coeff) in image {
                by_energy
                    .entry(energy)
                    .or_insert_with(|| vec![F::zero(); n])[idx] = coeff;
            }
            for (energy, vector) in by_energy {
                let coords = basis_matrix
                    .solve(&vector)
                    .expect("image of invariants is invariant");
                for (out, coeff) in coords.into_iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    entries.push((
                        k,
                        OpEntry {
                            inputs: tuple.clone(),
                            output: out,
                            coeff,
                            energy: if energy.is_zero() && a.cutoff.is_none() {
                                None
                            } else {
                                Some(energy.clone())
                            },
                        },
                    ));
                }
            }
        }
    }
    AInfStructure::new(space, a.max_arity, entries, a.cutoff.clone())
}

fn invert_order<F: Scalar>(order: usize) -> Result<F, AInfError> {
    let inv = F::from_rat(&Rat::new(1.into(), (order as i64).into()));
    let mut check = F::zero();
    for _ in 0..order {
        check = check + inv.clone();
    }
    if check != F::one() {
        return Err(AInfError::FieldNotDivisible);
    }
    Ok(inv)
}

/// Components of an A∞-morphism between two structures on given
/// spaces; `f_k` shifts degree by `1 - k`.
#[derive(Debug, Clone, PartialEq)]
pub struct AInfMorphism<F: Scalar> {
    max_arity: usize,
    /// components[k-1]: entries of f_k
    components: Vec<ComponentLookup<F>>,
}

impl<F: Scalar> AInfMorphism<F> {
    pub fn new(
        source: &GradedSpace,
        target: &GradedSpace,
        max_arity: usize,
        entries: Vec<(usize, OpEntry<F>)>,
    ) -> Result<Self, AInfError> {
        let mut components: Vec<ComponentLookup<F>> = vec![HashMap::new(); max_arity];
        for (arity, entry) in entries {
            if arity == 0 || arity > max_arity || entry.inputs.len() != arity {
                return Err(AInfError::ArityOutOfRange);
            }
            if entry.output >= target.dim()
                || entry.inputs.iter().any(|&i| i >= source.dim())
            {
                return Err(AInfError::BadIndex);
            }
            let in_deg: i64 = entry.inputs.iter().map(|&i| source.degree(i)).sum();
            if target.degree(entry.output) != in_deg + 1 - arity as i64 {
                return Err(AInfError::DegreeShiftViolation(arity));
            }
            components[arity - 1]
                .entry(entry.inputs)
                .or_default()
                .push((entry.output, entry.coeff));
        }
        Ok(AInfMorphism {
            max_arity,
            components,
        })
    }

    /// The identity morphism (f₁ = id, higher components zero).
    pub fn identity(space: &GradedSpace, max_arity: usize) -> Self {
        let mut components: Vec<ComponentLookup<F>> = vec![HashMap::new(); max_arity];
        for i in 0..space.dim() {
            components[0].insert(vec![i], vec![(i, F::one())]);
        }
        AInfMorphism {
            max_arity,
            components,
        }
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn apply_basis(&self, k: usize, inputs: &[usize]) -> Vec<(usize, F)> {
        if k == 0 || k > self.max_arity {
            return Vec::new();
        }
        self.components[k - 1]
            .get(inputs)
            .cloned()
            .unwrap_or_default()
    }

    fn apply_multi(&self, k: usize, vectors: &[Vec<(usize, F)>]) -> Vec<(usize, F)> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        let mut choice = vec![0usize; k];
        if vectors.iter().any(Vec::is_empty) {
            return Vec::new();
        }
        loop {
            let mut coeff = F::one();
            let mut inputs = Vec::with_capacity(k);
            for (slot, vec) in choice.iter().zip(vectors) {
                let (idx, c) = &vec[*slot];
                inputs.push(*idx);
                coeff = coeff * c.clone();
            }
            if !coeff.is_zero() {
                for (o, c) in self.apply_basis(k, &inputs) {
                    let entry = acc.entry(o).or_insert_with(F::zero);
                    *entry = entry.clone() + coeff.clone() * c;
                }
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return acc
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                }
                choice[pos] += 1;
                if choice[pos] < vectors[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Canonical form for comparisons: sorted, merged, zero-free.
    pub fn normalized(&self) -> Vec<(usize, Vec<usize>, usize, F)> {
        let mut out = Vec::new();
        for (k, map) in self.components.iter().enumerate() {
            for (inputs, terms) in map {
                let mut merged: BTreeMap<usize, F> = BTreeMap::new();
                for (o, c) in terms {
                    let entry = merged.entry(*o).or_insert_with(F::zero);
                    *entry = entry.clone() + c.clone();
                }
                for (o, c) in merged {
                    if !c.is_zero() {
                        out.push((k + 1, inputs.clone(), o, c));
                    }
                }
            }
        }
        out.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
        out
    }
}

/// `f_k^{avg}(x₁..x_k) = (1/|G|) Σ_g ρ₂(g) f_k(ρ₁(g)⁻¹x₁, ..,
/// ρ₁(g)⁻¹x_k)` componentwise.
pub fn average_morphism<F: Scalar>(
    f: &AInfMorphism<F>,
    rep_source: &GRep<F>,
    rep_target: &GRep<F>,
) -> Result<AInfMorphism<F>, AInfError> {
    rep_source.check_homomorphism()?;
    rep_target.check_homomorphism()?;
    let ord = rep_source.group().order();
    let inv_order = invert_order::<F>(ord)?;
    let n = rep_source.matrix(0).rows();
    let mut components: Vec<ComponentLookup<F>> = vec![HashMap::new(); f.max_arity];
    for k in 1..=f.max_arity {
        for tuple in tuples(n, k) {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for g in rep_source.group().elements() {
                let vectors: Vec<Vec<(usize, F)>> = tuple
                    .iter()
                    .map(|&b| {
                        let m = rep_source.inverse_matrix(g);
                        (0..m.rows())
                            .filter_map(|r| {
                                let v = m.get(r, b);
                                if v.is_zero() {
                                    None
                                } else {
                                    Some((r, v.clone()))
                                }
                            })
                            .collect()
                    })
                    .collect();
                for (mid, c) in f.apply_multi(k, &vectors) {
                    for (out, v) in rep_target.column_of(g, mid) {
                        let entry = acc.entry(out).or_insert_with(F::zero);
                        *entry = entry.clone() + c.clone() * v;
                    }
                }
            }
            let terms: Vec<(usize, F)> = acc
                .into_iter()
                .map(|(o, c)| (o, c * inv_order.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                components[k - 1].insert(tuple, terms);
            }
        }
    }
    Ok(AInfMorphism {
        max_arity: f.max_arity,
        components,
    })
}

/// Is f equivariant: ρ₂(g) f_k(x) = f_k(ρ₁(g) x) for all g and basis
/// tuples?
pub fn morphism_is_equivariant<F: Scalar>(
    f: &AInfMorphism<F>,
    rep_source: &GRep<F>,
    rep_target: &GRep<F>,
) -> bool {
    let n = rep_source.matrix(0).rows();
    for g in rep_source.group().elements() {
        for k in 1..=f.max_arity {
            for tuple in tuples(n, k) {
                let mut lhs: BTreeMap<usize, F> = BTreeMap::new();
                for (mid, c) in f.apply_basis(k, &tuple) {
                    for (out, v) in rep_target.column_of(g, mid) {
                        let entry = lhs.entry(out).or_insert_with(F::zero);
                        *entry = entry.clone() + c.clone() * v;
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                let vectors: Vec<Vec<(usize, F)>> =
                    tuple.iter().map(|&b| rep_source.column_of(g, b)).collect();
                let rhs: BTreeMap<usize, F> = f
                    .apply_multi(k, &vectors)
                    .into_iter()
                    .collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Composite morphism `(h ∘ f)_k = Σ h_r(f_{i₁}(..), .., f_{i_r}(..))`
/// over all compositions i₁+..+i_r = k, truncated at the arity bound.
pub fn compose_morphisms<F: Scalar>(
    h: &AInfMorphism<F>,
    f: &AInfMorphism<F>,
    source_dim: usize,
) -> AInfMorphism<F> {
    let max_arity = h.max_arity.min(f.max_arity);
    let mut components: Vec<ComponentLookup<F>> = vec![HashMap::new(); max_arity];
    for k in 1..=max_arity {
        for tuple in tuples(source_dim, k) {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for partition in compositions(k) {
                if partition.len() > h.max_arity {
                    continue;
                }
                // evaluate each f block on its slice of the tuple
                let mut blocks: Vec<Vec<(usize, F)>> = Vec::with_capacity(partition.len());
                let mut offset = 0;
                let mut dead = false;
                for &size in &partition {
                    let block = f.apply_basis(size, &tuple[offset..offset + size]);
                    if block.is_empty() {
                        dead = true;
                        break;
                    }
                    blocks.push(block);
                    offset += size;
                }
                if dead {
                    continue;
                }
                for (out, c) in h.apply_multi(partition.len(), &blocks) {
                    let entry = acc.entry(out).or_insert_with(F::zero);
                    *entry = entry.clone() + c;
                }
            }
            let terms: Vec<(usize, F)> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                components[k - 1].insert(tuple, terms);
            }
        }
    }
    AInfMorphism {
        max_arity,
        components,
    }
}

/// Ordered compositions of k (k = i₁ + .. + i_r with iⱼ ≥ 1).
fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=k {
        for rest in compositions(k - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// The A∞-morphism equation for strict structures, checked on all
/// basis tuples up to the arity bound:
/// `Σ m^target_r(f(..), .., f(..)) = Σ ± f(.., m^source(..), ..)`.
pub fn check_ainf_morphism<F: Scalar>(
    f: &AInfMorphism<F>,
    source: &AInfStructure<F>,
    target: &AInfStructure<F>,
) -> bool {
    let n = source.space.dim();
    let arity = f.max_arity.min(source.max_arity).min(target.max_arity);
    for k in 1..=arity {
        for tuple in tuples(n, k) {
            // left: target operations applied to f-blocks
            let mut lhs: Terms<F> = Terms::new();
            for partition in compositions(k) {
                if partition.len() > target.max_arity {
                    continue;
                }
                let mut blocks: Vec<Vec<(usize, F)>> = Vec::with_capacity(partition.len());
                let mut offset = 0;
                let mut dead = false;
                for &size in &partition {
                    let block = f.apply_basis(size, &tuple[offset..offset + size]);
                    if block.is_empty() {
                        dead = true;
                        break;
                    }
                    blocks.push(block);
                    offset += size;
                }
                if dead {
                    continue;
                }
                for ((out, energy), c) in target.apply_multi(partition.len(), &blocks) {
                    add_term(&mut lhs, out, energy, c);
                }
            }
            prune(&mut lhs);
            // right: f applied after inserting a source operation
            let mut rhs: Terms<F> = Terms::new();
            for k2 in 1..=k.min(source.max_arity) {
                let k1 = k - k2 + 1;
                if k1 > f.max_arity {
                    continue;
                }
                for i in 0..=(k - k2) {
                    let deg_sum: i64 = tuple[..i]
                        .iter()
                        .map(|&b| source.space.degree(b))
                        .sum();
                    let negative = (deg_sum + i as i64).rem_euclid(2) == 1;
                    for (mid, c_in, e) in source.apply_basis(k2, &tuple[i..i + k2]) {
                        let mut outer: Vec<usize> = Vec::with_capacity(k1);
                        outer.extend_from_slice(&tuple[..i]);
                        outer.push(mid);
                        outer.extend_from_slice(&tuple[i + k2..]);
                        for (out, c_out) in f.apply_basis(k1, &outer) {
                            let mut coeff = c_in.clone() * c_out;
                            if negative {
                                coeff = -coeff;
                            }
                            add_term(&mut rhs, out, e.clone(), coeff);
                        }
                    }
                }
            }
            prune(&mut rhs);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Both identities of the averaging-composition lemma for
/// `f : A → B` and `h : B → A`:
/// `(h∘f)_avg = h_avg ∘ f` and `(f∘h)_avg = f ∘ h_avg`.
/// They hold whenever f is equivariant.
pub fn check_average_composition<F: Scalar>(
    f: &AInfMorphism<F>,
    h: &AInfMorphism<F>,
    rep_a: &GRep<F>,
    rep_b: &GRep<F>,
) -> Result<bool, AInfError> {
    let dim_a = rep_a.matrix(0).rows();
    let dim_b = rep_b.matrix(0).rows();
    let hf = compose_morphisms(h, f, dim_a);
    let lhs1 = average_morphism(&hf, rep_a, rep_a)?;
    let rhs1 = compose_morphisms(&average_morphism(h, rep_b, rep_a)?, f, dim_a);
    if lhs1.normalized() != rhs1.normalized() {
        return Ok(false);
    }
    let fh = compose_morphisms(f, h, dim_b);
    let lhs2 = average_morphism(&fh, rep_b, rep_b)?;
    let rhs2 = compose_morphisms(f, &average_morphism(h, rep_b, rep_a)?, dim_b);
    Ok(lhs2.normalized() == rhs2.normalized())
}

/// A plain chain complex (a graded space with m₁) used by the
/// weak-action checker.
#[derive(Debug, Clone)]
pub struct ChainData<F: Scalar> {
    space: GradedSpace,
    m1: Matrix<F>,
}

impl<F: Scalar> ChainData<F> {
    pub fn new(space: GradedSpace, m1: Matrix<F>) -> Result<Self, AInfError> {
        let n = space.dim();
        if m1.rows() != n || m1.cols() != n {
            return Err(AInfError::ShapeMismatch);
        }
        for r in 0..n {
            for c in 0..n {
                if !m1.get(r, c).is_zero() && space.degree(r) != space.degree(c) + 1 {
                    return Err(AInfError::DegreeShiftViolation(1));
                }
            }
        }
        if !m1.mul(&m1).is_zero() {
            return Err(AInfError::BadRepresentation("m₁² must vanish".into()));
        }
        Ok(ChainData { space, m1 })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn m1(&self) -> &Matrix<F> {
        &self.m1
    }

    /// Basis data of homology: boundary space basis and chosen class
    /// representatives, plus the combined solve matrix.
    fn homology_basis(&self) -> (Matrix<F>, usize, Vec<Vec<F>>) {
        let n = self.space.dim();
        let cycles = self.m1.kernel_basis();
        let boundaries = self.m1.column_space_basis();
        let mut staged = boundaries.clone();
        let mut reps: Vec<Vec<F>> = Vec::new();
        let mut rank = if staged.is_empty() {
            0
        } else {
            Matrix::from_columns_with_rows(staged.clone(), n).rank()
        };
        for z in &cycles {
            let mut trial = staged.clone();
            trial.push(z.clone());
            let r = Matrix::from_columns_with_rows(trial.clone(), n).rank();
            if r > rank {
                rank = r;
                staged = trial;
                reps.push(z.clone());
            }
        }
        let solve = Matrix::from_columns_with_rows(
            [boundaries.clone(), reps.clone()].concat(),
            n,
        );
        (solve, boundaries.len(), reps)
    }

    /// Map induced on homology by a chain map.
    pub fn induced_on_homology(&self, chain_map: &Matrix<F>) -> Matrix<F> {
        let (solve, n_bdry, reps) = self.homology_basis();
        let h = reps.len();
        let mut m = Matrix::zero(h, h);
        for (j, rep) in reps.iter().enumerate() {
            let image = chain_map.apply(rep);
            let x = solve
                .solve(&image)
                .expect("chain maps preserve cycles and boundaries");
            for i in 0..h {
                m.set(i, j, x[n_bdry + i].clone());
            }
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeakActionReport {
    pub holds: bool,
    /// Pair where the homotopy identity first failed.
    pub failing_pair: Option<(usize, usize)>,
}

/// The weak-action identity
/// `Ψ_g ∘ Ψ_h − Ψ_{gh} = σ_{g,h} ∘ m₁ + m₁ ∘ σ_{g,h}` for all pairs.
/// Each Ψ_g must be a chain map. When the identity holds, the induced
/// maps on homology are asserted to compose strictly.
pub fn check_weak_action<F: Scalar>(
    complex: &ChainData<F>,
    group: &FiniteGroup,
    psi: &[Matrix<F>],
    sigma: &BTreeMap<(usize, usize), Matrix<F>>,
) -> Result<WeakActionReport, AInfError> {
    let n = complex.space.dim();
    if psi.len() != group.order() {
        return Err(AInfError::ShapeMismatch);
    }
    for (g, m) in psi.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(AInfError::ShapeMismatch);
        }
        if m.mul(&complex.m1) != complex.m1.mul(m) {
            return Err(AInfError::NotChainMap(g));
        }
    }
    for s in sigma.values() {
        if s.rows() != n || s.cols() != n {
            return Err(AInfError::ShapeMismatch);
        }
        for r in 0..n {
            for c in 0..n {
                if !s.get(r, c).is_zero()
                    && complex.space.degree(r) != complex.space.degree(c) - 1
                {
                    return Err(AInfError::DegreeShiftViolation(1));
                }
            }
        }
    }
    let zero = Matrix::zero(n, n);
    for g in group.elements() {
        for h in group.elements() {
            let gh = group.mul(g, h);
            let lhs = psi[g].mul(&psi[h]).sub(&psi[gh]);
            let s = sigma.get(&(g, h)).unwrap_or(&zero);
            let rhs = s.mul(&complex.m1).add(&complex.m1.mul(s));
            if lhs != rhs {
                return Ok(WeakActionReport {
                    holds: false,
                    failing_pair: Some((g, h)),
                });
            }
        }
    }
    // homotopies act trivially on homology, so the induced maps must
    // form a strict action
    let induced: Vec<Matrix<F>> = psi
        .iter()
        .map(|m| complex.induced_on_homology(m))
        .collect();
    for g in group.elements() {
        for h in group.elements() {
            assert_eq!(
                induced[g].mul(&induced[h]),
                induced[group.mul(g, h)],
                "weak action must induce a strict action on homology"
            );
        }
    }
    Ok(WeakActionReport {
        holds: true,
        failing_pair: None,
    })
}

/// Bimodule maps `n_{k1,k2} : C₁^{k1} × M × C₂^{k2} → M` with degree
/// shift `1 - k1 - k2`.
#[derive(Debug, Clone)]
pub struct BimoduleData<F: Scalar> {
    c1: GradedSpace,
    module: GradedSpace,
    c2: GradedSpace,
    arity_bound: usize,
    /// (k1, k2) → (a-inputs, m-input, b-inputs) → terms
    maps: HashMap<(usize, usize), BimoduleLookup<F>>,
}

type BimoduleLookup<F> = HashMap<(Vec<usize>, usize, Vec<usize>), Vec<(usize, F)>>;

/// One bimodule tensor entry.
#[derive(Debug, Clone, PartialEq)]
pub struct BimoduleEntry<F> {
    pub a_inputs: Vec<usize>,
    pub m_input: usize,
    pub b_inputs: Vec<usize>,
    pub output: usize,
    pub coeff: F,
}

impl<F: Scalar> BimoduleData<F> {
    pub fn new(
        c1: GradedSpace,
        module: GradedSpace,
        c2: GradedSpace,
        arity_bound: usize,
        entries: Vec<BimoduleEntry<F>>,
    ) -> Result<Self, AInfError> {
        let mut maps: HashMap<(usize, usize), BimoduleLookup<F>> = HashMap::new();
        for e in entries {
            let (k1, k2) = (e.a_inputs.len(), e.b_inputs.len());
            if k1 + k2 > arity_bound {
                return Err(AInfError::ArityOutOfRange);
            }
            if e.a_inputs.iter().any(|&i| i >= c1.dim())
                || e.b_inputs.iter().any(|&i| i >= c2.dim())
                || e.m_input >= module.dim()
                || e.output >= module.dim()
            {
                return Err(AInfError::BadIndex);
            }
            let in_deg: i64 = e.a_inputs.iter().map(|&i| c1.degree(i)).sum::<i64>()
                + module.degree(e.m_input)
                + e.b_inputs.iter().map(|&i| c2.degree(i)).sum::<i64>();
            if module.degree(e.output) != in_deg + 1 - k1 as i64 - k2 as i64 {
                return Err(AInfError::DegreeShiftViolation(k1 + k2));
            }
            maps.entry((k1, k2))
                .or_default()
                .entry((e.a_inputs, e.m_input, e.b_inputs))
                .or_default()
                .push((e.output, e.coeff));
        }
        Ok(BimoduleData {
            c1,
            module,
            c2,
            arity_bound,
            maps,
        })
    }

    fn apply(
        &self,
        k1: usize,
        k2: usize,
        a: &[usize],
        m: usize,
        b: &[usize],
    ) -> Vec<(usize, F)> {
        self.maps
            .get(&(k1, k2))
            .and_then(|inner| inner.get(&(a.to_vec(), m, b.to_vec())))
            .cloned()
            .unwrap_or_default()
    }
}

/// `ρ_M(g) n(a₁..a_{k1}, ξ, b₁..b_{k2}) =
///  n(ρ_{C1}(g)a₁, .., ρ_M(g)ξ, .., ρ_{C2}(g)b_{k2})`
/// on every basis tuple with k1 + k2 ≤ the arity bound.
pub fn check_bimodule_equivariance<F: Scalar>(
    bimodule: &BimoduleData<F>,
    rep_c1: &GRep<F>,
    rep_m: &GRep<F>,
    rep_c2: &GRep<F>,
) -> bool {
    let (n1, nm, n2) = (
        bimodule.c1.dim(),
        bimodule.module.dim(),
        bimodule.c2.dim(),
    );
    for g in rep_m.group().elements() {
        for k1 in 0..=bimodule.arity_bound {
            for k2 in 0..=(bimodule.arity_bound - k1) {
                for a in tuples(n1, k1) {
                    for m in 0..nm {
                        for b in tuples(n2, k2) {
                            // lhs: apply n, then ρ_M(g)
                            let mut lhs: BTreeMap<usize, F> = BTreeMap::new();
                            for (out, c) in bimodule.apply(k1, k2, &a, m, &b) {
                                for (r, v) in rep_m.column_of(g, out) {
                                    let entry = lhs.entry(r).or_insert_with(F::zero);
                                    *entry = entry.clone() + c.clone() * v;
                                }
                            }
                            lhs.retain(|_, c| !c.is_zero());
                            // rhs: push all inputs through, then apply n
                            let a_vecs: Vec<Vec<(usize, F)>> =
                                a.iter().map(|&x| rep_c1.column_of(g, x)).collect();
                            let m_vec = rep_m.column_of(g, m);
                            let b_vecs: Vec<Vec<(usize, F)>> =
                                b.iter().map(|&x| rep_c2.column_of(g, x)).collect();
                            let mut rhs: BTreeMap<usize, F> = BTreeMap::new();
                            for_each_choice(&a_vecs, &mut |a_idx, a_coeff| {
                                for (mi, mc) in &m_vec {
                                    for_each_choice(&b_vecs, &mut |b_idx, b_coeff| {
                                        let scale = a_coeff.clone()
                                            * mc.clone()
                                            * b_coeff.clone();
                                        for (out, c) in
                                            bimodule.apply(k1, k2, a_idx, *mi, b_idx)
                                        {
                                            let entry =
                                                rhs.entry(out).or_insert_with(F::zero);
                                            *entry = entry.clone() + scale.clone() * c;
                                        }
                                    });
                                }
                            });
                            rhs.retain(|_, c| !c.is_zero());
                            if lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Iterate over all index choices of a list of sparse vectors,
/// invoking the callback with (chosen indices, product of coefficients).
fn for_each_choice<F: Scalar>(
    vectors: &[Vec<(usize, F)>],
    f: &mut impl FnMut(&[usize], &F),
) {
    if vectors.iter().any(Vec::is_empty) {
        return;
    }
    let k = vectors.len();
    let mut choice = vec![0usize; k];
    loop {
        let mut coeff = F::one();
        let mut idxs = Vec::with_capacity(k);
        for (slot, vec) in choice.iter().zip(vectors) {
            let (i, c) = &vec[*slot];
            idxs.push(*i);
            coeff = coeff * c.clone();
        }
        f(&idxs, &coeff);
        let mut pos = 0;
        loop {
            if pos == k {
                return;
            }
            choice[pos] += 1;
            if choice[pos] < vectors[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

pub mod models;

#[cfg(test)]
mod tests;
