//! Graded chain complexes with signed finite-group actions.
//!
//! Generators carry a degree and an energy level; flows carry a sign
//! and an energy gap and drop the degree by exactly one. The group acts
//! by signed permutations of generators: the sign records how the
//! group element acts on the one-dimensional orientation space of the
//! generator. Taking the invariant part under the averaging projector
//! models the quotient-orbifold complex: a generator fixed with sign
//! -1 cancels out of the invariants.
//!
//! The module also computes energy-zero subgroups of weighted graphs
//! (finite stand-ins for path spaces) and checks the spin-profile
//! obstruction to signed actions composing strictly.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::field::Rat;
use crate::groupcoh::{self, coboundary, is_cocycle, FiniteGroup, OneCochain, TwoCochain};
use crate::intlattice::{solve_integer, IntMatrix};
use crate::linalg::Matrix;
use crate::novikov::NovikovSeries;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate or unknown generator id {0:?}")]
    BadGeneratorId(String),
    #[error("flow {0} connects degrees {1} -> {2}, which are not adjacent")]
    DegreeGapViolation(usize, i64, i64),
    #[error("flow {0} has negative energy gap")]
    NegativeGap(usize),
    #[error("flow sign must be +1 or -1")]
    BadSign,
    #[error("group action is not a signed permutation action: {0}")]
    BadAction(String),
    #[error("the action is not equivariant or its signs do not compose")]
    NotEquivariant,
    #[error("graph is not connected from the basepoint")]
    Disconnected,
    #[error("basepoint has nontrivial isotropy")]
    BasepointFixed,
    #[error("graph action is not a weight-preserving automorphism: {0}")]
    BadGraphAction(String),
    #[error("input is not a 2-cocycle")]
    NotACocycle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub id: String,
    pub degree: i64,
    pub action_value: Rat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Flow {
    pub from: usize,
    pub to: usize,
    pub sign: i8,
    pub gap: Rat,
}

/// A graded complex with a signed G-action on its generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedGComplex {
    generators: Vec<Generator>,
    flows: Vec<Flow>,
    group: FiniteGroup,
    /// `gaction[g][p] = (q, sign)`: g sends generator p to q, acting on
    /// its orientation space by the sign.
    gaction: Vec<Vec<(usize, i8)>>,
}

impl GradedGComplex {
    /// Validate and build. Flow endpoints and action entries are given
    /// by generator ids.
    pub fn new(
        generators: Vec<Generator>,
        flows_by_id: Vec<(String, String, i8, Rat)>,
        group: FiniteGroup,
        action_by_id: Vec<(usize, String, String, i8)>,
    ) -> Result<Self, ComplexError> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(&g.id, i).is_some() {
                return Err(ComplexError::BadGeneratorId(g.id.clone()));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| ComplexError::BadGeneratorId(id.to_string()))
        };
        let mut flows = Vec::with_capacity(flows_by_id.len());
        for (i, (from, to, sign, gap)) in flows_by_id.into_iter().enumerate() {
            let from = lookup(&from)?;
            let to = lookup(&to)?;
            if sign != 1 && sign != -1 {
                return Err(ComplexError::BadSign);
            }
            if gap < Rat::zero() {
                return Err(ComplexError::NegativeGap(i));
            }
            let (d_from, d_to) = (generators[from].degree, generators[to].degree);
            if d_from - 1 != d_to {
                return Err(ComplexError::DegreeGapViolation(i, d_from, d_to));
            }
            flows.push(Flow {
                from,
                to,
                sign,
                gap,
            });
        }
        let n = generators.len();
        let ord = group.order();
        let mut gaction = vec![vec![(usize::MAX, 0i8); n]; ord];
        for (g, p, q, sign) in action_by_id {
            if g >= ord {
                return Err(ComplexError::BadAction(format!(
                    "group element {g} out of range"
                )));
            }
            if sign != 1 && sign != -1 {
                return Err(ComplexError::BadSign);
            }
            let p = lookup(&p)?;
            let q = lookup(&q)?;
            if gaction[g][p] != (usize::MAX, 0) {
                return Err(ComplexError::BadAction(format!(
                    "duplicate action entry for ({g}, {})",
                    generators[p].id
                )));
            }
            gaction[g][p] = (q, sign);
        }
        let complex = GradedGComplex {
            generators,
            flows,
            group,
            gaction,
        };
        complex.validate_action()?;
        Ok(complex)
    }

    fn validate_action(&self) -> Result<(), ComplexError> {
        let n = self.generators.len();
        let ord = self.group.order();
        for g in 0..ord {
            let mut seen = vec![false; n];
            for p in 0..n {
                let (q, sign) = self.gaction[g][p];
                if q == usize::MAX || sign == 0 {
                    return Err(ComplexError::BadAction(format!(
                        "missing action entry for ({g}, {})",
                        self.generators[p].id
                    )));
                }
                if seen[q] {
                    return Err(ComplexError::BadAction(format!(
                        "element {g} is not a permutation"
                    )));
                }
                seen[q] = true;
                if self.generators[p].degree != self.generators[q].degree
                    || self.generators[p].action_value != self.generators[q].action_value
                {
                    return Err(ComplexError::BadAction(format!(
                        "element {g} does not preserve degree/energy at {}",
                        self.generators[p].id
                    )));
                }
            }
        }
        for p in 0..n {
            if self.gaction[0][p] != (p, 1) {
                return Err(ComplexError::BadAction(
                    "identity must act trivially with sign +1".into(),
                ));
            }
        }
        // underlying permutations must compose strictly; only the signs
        // are allowed to deviate (that defect is the spin-profile story)
        for g in 0..ord {
            for h in 0..ord {
                let hg = self.group.mul(h, g);
                for p in 0..n {
                    let (q, _) = self.gaction[g][p];
                    let (r, _) = self.gaction[h][q];
                    if self.gaction[hg][p].0 != r {
                        return Err(ComplexError::BadAction(format!(
                            "permutations of {h}∘{g} and {hg} disagree at {}",
                            self.generators[p].id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn action(&self, g: usize, p: usize) -> (usize, i8) {
        self.gaction[g][p]
    }

    /// Sorted list of degrees that carry generators.
    pub fn degrees(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.generators.iter().map(|g| g.degree).collect();
        set.into_iter().collect()
    }

    pub fn generators_of_degree(&self, k: i64) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&i| self.generators[i].degree == k)
            .collect()
    }

    /// Boundary matrix from degree k to degree k-1 over the rationals:
    /// entry (q, p) sums the signs of flows p → q.
    pub fn boundary_matrix(&self, k: i64) -> Matrix<Rat> {
        let cols = self.generators_of_degree(k);
        let rows = self.generators_of_degree(k - 1);
        let row_of: HashMap<usize, usize> =
            rows.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let col_of: HashMap<usize, usize> =
            cols.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut m: Matrix<Rat> = Matrix::zero(rows.len(), cols.len());
        for f in &self.flows {
            if let (Some(&c), Some(&r)) = (col_of.get(&f.from), row_of.get(&f.to)) {
                let v = m.get(r, c).clone() + Rat::from(BigInt::from(f.sign));
                m.set(r, c, v);
            }
        }
        m
    }

    /// Novikov-weighted boundary: entry (q, p) is `Σ sign · T^{gap}`,
    /// truncated at the cutoff. Sparse, keyed by (row, col) positions
    /// within the degree-(k-1) and degree-k generator lists.
    pub fn boundary_matrix_novikov(
        &self,
        k: i64,
        cutoff: &Rat,
    ) -> BTreeMap<(usize, usize), NovikovSeries<Rat>> {
        let cols = self.generators_of_degree(k);
        let rows = self.generators_of_degree(k - 1);
        let row_of: HashMap<usize, usize> =
            rows.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let col_of: HashMap<usize, usize> =
            cols.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut entries: BTreeMap<(usize, usize), NovikovSeries<Rat>> = BTreeMap::new();
        for f in &self.flows {
            if let (Some(&c), Some(&r)) = (col_of.get(&f.from), row_of.get(&f.to)) {
                let term = NovikovSeries::monomial(
                    f.gap.clone(),
                    Rat::from(BigInt::from(f.sign)),
                    cutoff.clone(),
                );
                let entry = entries
                    .entry((r, c))
                    .or_insert_with(|| NovikovSeries::zero(cutoff.clone()));
                *entry = entry.add(&term).expect("equal cutoffs by construction");
            }
        }
        entries.retain(|_, s| !s.is_zero());
        entries
    }

    /// Does the composite of consecutive boundary maps vanish?
    pub fn check_dsq_zero(&self) -> bool {
        for k in self.degrees() {
            let d_k = self.boundary_matrix(k);
            let d_next = self.boundary_matrix(k + 1);
            if d_k.rows() > 0 && d_next.cols() > 0 && !d_k.mul(&d_next).is_zero() {
                return false;
            }
        }
        true
    }

    /// Novikov mode: ∂² = 0 up to the cutoff, i.e. for every pair of
    /// composable flows the signed sum per total energy gap vanishes.
    pub fn check_dsq_zero_novikov(&self, cutoff: &Rat) -> bool {
        let mut by_flow_start: HashMap<usize, Vec<&Flow>> = HashMap::new();
        for f in &self.flows {
            by_flow_start.entry(f.from).or_default().push(f);
        }
        let mut acc: HashMap<(usize, usize), BTreeMap<Rat, i64>> = HashMap::new();
        for f1 in &self.flows {
            if let Some(continuations) = by_flow_start.get(&f1.to) {
                for f2 in continuations {
                    let gap = &f1.gap + &f2.gap;
                    if &gap >= cutoff {
                        continue;
                    }
                    *acc.entry((f1.from, f2.to))
                        .or_default()
                        .entry(gap)
                        .or_insert(0) += (f1.sign * f2.sign) as i64;
                }
            }
        }
        acc.values()
            .all(|gaps| gaps.values().all(|&coeff| coeff == 0))
    }

    /// Signed permutation matrix of g restricted to degree k.
    pub fn action_matrix(&self, g: usize, k: i64) -> Matrix<Rat> {
        let gens = self.generators_of_degree(k);
        let pos: HashMap<usize, usize> =
            gens.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut m = Matrix::zero(gens.len(), gens.len());
        for (i, &p) in gens.iter().enumerate() {
            let (q, sign) = self.gaction[g][p];
            m.set(pos[&q], i, Rat::from(BigInt::from(sign)));
        }
        m
    }

    /// Is ρ(g)∂ = ∂ρ(g) for every group element and degree?
    pub fn check_equivariance(&self) -> bool {
        for k in self.degrees() {
            let d = self.boundary_matrix(k);
            if d.rows() == 0 || d.cols() == 0 {
                continue;
            }
            for g in self.group.elements() {
                let rho_k = self.action_matrix(g, k);
                let rho_km1 = self.action_matrix(g, k - 1);
                if rho_km1.mul(&d) != d.mul(&rho_k) {
                    return false;
                }
            }
        }
        true
    }

    /// Do the signed permutations compose strictly (a genuine
    /// representation, signs included)?
    pub fn signs_compose(&self) -> bool {
        let n = self.generators.len();
        for g in self.group.elements() {
            for h in self.group.elements() {
                let hg = self.group.mul(h, g);
                for p in 0..n {
                    let (q, s1) = self.gaction[g][p];
                    let (r, s2) = self.gaction[h][q];
                    let (r2, s3) = self.gaction[hg][p];
                    debug_assert_eq!(r, r2);
                    if s1 * s2 != s3 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Image of the averaging projector with the induced differential.
    pub fn invariant_subcomplex(&self) -> Result<SubComplex, ComplexError> {
        if !self.signs_compose() || !self.check_equivariance() {
            return Err(ComplexError::NotEquivariant);
        }
        let degrees = self.degrees();
        let mut bases: BTreeMap<i64, Vec<Vec<Rat>>> = BTreeMap::new();
        for &k in &degrees {
            let rep: Vec<Matrix<Rat>> = self
                .group
                .elements()
                .map(|g| self.action_matrix(g, k))
                .collect();
            let projector = groupcoh::averaging_projector(&self.group, &rep);
            bases.insert(k, projector.column_space_basis());
        }
        let mut differentials: BTreeMap<i64, Matrix<Rat>> = BTreeMap::new();
        for &k in &degrees {
            let basis_k = &bases[&k];
            let Some(basis_km1) = bases.get(&(k - 1)) else {
                continue;
            };
            let d = self.boundary_matrix(k);
            let b_km1 = Matrix::from_columns_with_rows(basis_km1.clone(), d.rows());
            let b_k = Matrix::from_columns_with_rows(basis_k.clone(), d.cols());
            let image = d.mul(&b_k);
            let induced = b_km1
                .solve_matrix(&image)
                .expect("differential preserves invariants when the action is equivariant");
            differentials.insert(k, induced);
        }
        Ok(SubComplex {
            dims: degrees.iter().map(|&k| (k, bases[&k].len())).collect(),
            bases,
            differentials,
        })
    }

    /// Per-degree homology ranks of the full complex and its invariant
    /// part.
    pub fn homology_ranks(&self) -> Result<HomologyReport, ComplexError> {
        let degrees = self.degrees();
        let mut total = BTreeMap::new();
        for &k in &degrees {
            let dim = self.generators_of_degree(k).len();
            let rank_out = self.boundary_matrix(k).rank();
            let rank_in = self.boundary_matrix(k + 1).rank();
            let rank = dim
                .checked_sub(rank_out + rank_in)
                .expect("homology ranks need ∂² = 0");
            total.insert(k, rank);
        }
        let sub = self.invariant_subcomplex()?;
        let invariant = sub.homology_ranks();
        Ok(HomologyReport { total, invariant })
    }

    /// The representation induced on rational homology, one matrix per
    /// group element, per degree. Used to cross-check that averaging
    /// commutes with passing to homology.
    pub fn homology_representation(&self) -> BTreeMap<i64, Vec<Matrix<Rat>>> {
        let mut out = BTreeMap::new();
        for k in self.degrees() {
            let d_k = self.boundary_matrix(k);
            let d_next = self.boundary_matrix(k + 1);
            let dim_k = d_k.cols();
            let cycles: Vec<Vec<Rat>> = if d_k.rows() == 0 {
                (0..dim_k)
                    .map(|i| {
                        let mut v = vec![Rat::zero(); dim_k];
                        v[i] = Rat::one();
                        v
                    })
                    .collect()
            } else {
                d_k.kernel_basis()
            };
            let boundaries = d_next.column_space_basis();
            // extend the boundary basis to the cycle space; the added
            // vectors represent homology classes
            let mut staged = boundaries.clone();
            let mut reps: Vec<Vec<Rat>> = Vec::new();
            let mut rank = if staged.is_empty() {
                0
            } else {
                Matrix::from_columns_with_rows(staged.clone(), dim_k).rank()
            };
            for z in &cycles {
                let mut trial = staged.clone();
                trial.push(z.clone());
                let r = Matrix::from_columns_with_rows(trial.clone(), dim_k).rank();
                if r > rank {
                    rank = r;
                    staged = trial;
                    reps.push(z.clone());
                }
            }
            let h_dim = reps.len();
            let solve_basis = Matrix::from_columns_with_rows(
                [boundaries.clone(), reps.clone()].concat(),
                dim_k,
            );
            let n_bdry = boundaries.len();
            let matrices: Vec<Matrix<Rat>> = self
                .group
                .elements()
                .map(|g| {
                    let rho = self.action_matrix(g, k);
                    let mut m = Matrix::zero(h_dim, h_dim);
                    for (j, rep) in reps.iter().enumerate() {
                        let image = rho.apply(rep);
                        let x = solve_basis
                            .solve(&image)
                            .expect("action preserves cycles and boundaries");
                        for i in 0..h_dim {
                            m.set(i, j, x[n_bdry + i].clone());
                        }
                    }
                    m
                })
                .collect();
            out.insert(k, matrices);
        }
        out
    }

    /// Quotient complex of a free action with all orientation signs +1:
    /// one generator per orbit, flows summed over the orbit of the
    /// target. Models the complex of the quotient space.
    pub fn quotient_complex(&self) -> Result<GradedGComplex, ComplexError> {
        let n = self.generators.len();
        let ord = self.group.order();
        for g in 1..ord {
            for p in 0..n {
                let (q, sign) = self.gaction[g][p];
                if q == p {
                    return Err(ComplexError::BadAction(format!(
                        "action is not free at {}",
                        self.generators[p].id
                    )));
                }
                if sign != 1 {
                    return Err(ComplexError::BadAction(
                        "quotient complex requires trivial orientation signs".into(),
                    ));
                }
            }
        }
        // orbit representatives in generator order
        let mut orbit_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for p in 0..n {
            if orbit_of[p] != usize::MAX {
                continue;
            }
            let rep_idx = reps.len();
            reps.push(p);
            for g in 0..ord {
                orbit_of[self.gaction[g][p].0] = rep_idx;
            }
        }
        let generators: Vec<Generator> = reps
            .iter()
            .map(|&p| Generator {
                id: format!("[{}]", self.generators[p].id),
                degree: self.generators[p].degree,
                action_value: self.generators[p].action_value.clone(),
            })
            .collect();
        // flows out of each orbit representative, targets folded to
        // their orbits
        let mut flow_sum: BTreeMap<(usize, usize, Rat), i64> = BTreeMap::new();
        for f in &self.flows {
            if reps[orbit_of[f.from]] != f.from {
                continue;
            }
            *flow_sum
                .entry((orbit_of[f.from], orbit_of[f.to], f.gap.clone()))
                .or_insert(0) += f.sign as i64;
        }
        let mut flows_by_id = Vec::new();
        for ((from, to, gap), total) in flow_sum {
            let sign = if total >= 0 { 1i8 } else { -1i8 };
            for _ in 0..total.unsigned_abs() {
                flows_by_id.push((
                    generators[from].id.clone(),
                    generators[to].id.clone(),
                    sign,
                    gap.clone(),
                ));
            }
        }
        let trivial = FiniteGroup::cyclic(1);
        let action = generators
            .iter()
            .map(|g| (0usize, g.id.clone(), g.id.clone(), 1i8))
            .collect();
        GradedGComplex::new(generators, flows_by_id, trivial, action)
    }
}

/// Basis of the invariant subcomplex with its induced differential,
/// expressed in the coordinates of the ambient complex.
#[derive(Debug, Clone)]
pub struct SubComplex {
    /// (degree, dimension) pairs, ascending.
    pub dims: Vec<(i64, usize)>,
    /// Per degree: basis vectors of the invariant subspace.
    pub bases: BTreeMap<i64, Vec<Vec<Rat>>>,
    /// Per degree k: matrix of the induced map into degree k-1.
    pub differentials: BTreeMap<i64, Matrix<Rat>>,
}

impl SubComplex {
    pub fn dim(&self, k: i64) -> usize {
        self.bases.get(&k).map_or(0, Vec::len)
    }

    pub fn homology_ranks(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &(k, dim) in &self.dims {
            let rank_out = self.differentials.get(&k).map_or(0, Matrix::rank);
            let rank_in = self.differentials.get(&(k + 1)).map_or(0, Matrix::rank);
            let rank = dim
                .checked_sub(rank_out + rank_in)
                .expect("homology ranks need ∂² = 0");
            out.insert(k, rank);
        }
        out
    }
}

/// Per-degree homology ranks of a complex and of its invariant part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub total: BTreeMap<i64, usize>,
    pub invariant: BTreeMap<i64, usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub energy: Rat,
    pub maslov: i64,
    pub sp: u8,
}

/// A finite weighted graph with a G-action: the desk-scale model of a
/// path space with its (energy, Maslov, sp) weights.
#[derive(Debug, Clone)]
pub struct EnergyGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    group: FiniteGroup,
    vertex_action: Vec<Vec<usize>>,
    edge_action: Vec<Vec<usize>>,
    basepoint: usize,
}

impl EnergyGraph {
    pub fn new(
        vertices: Vec<String>,
        edges_by_id: Vec<(String, String, Rat, i64, u8)>,
        group: FiniteGroup,
        vertex_action_by_id: Vec<(usize, String, String)>,
        edge_action: Option<Vec<Vec<usize>>>,
        basepoint: String,
    ) -> Result<Self, ComplexError> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(ComplexError::BadGeneratorId(v.clone()));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| ComplexError::BadGeneratorId(id.to_string()))
        };
        let edges: Vec<Edge> = edges_by_id
            .into_iter()
            .map(|(from, to, energy, maslov, sp)| {
                Ok(Edge {
                    from: lookup(&from)?,
                    to: lookup(&to)?,
                    energy,
                    maslov,
                    sp: sp & 1,
                })
            })
            .collect::<Result<_, ComplexError>>()?;
        let n = vertices.len();
        let ord = group.order();
        let mut vertex_action = vec![vec![usize::MAX; n]; ord];
        for (g, v, w) in vertex_action_by_id {
            if g >= ord {
                return Err(ComplexError::BadGraphAction(format!(
                    "group element {g} out of range"
                )));
            }
            vertex_action[g][lookup(&v)?] = lookup(&w)?;
        }
        let basepoint = lookup(&basepoint)?;
        let edge_action = match edge_action {
            Some(ea) => ea,
            None => derive_edge_action(&edges, &vertex_action)?,
        };
        let graph = EnergyGraph {
            vertices,
            edges,
            group,
            vertex_action,
            edge_action,
            basepoint,
        };
        graph.validate()?;
        Ok(graph)
    }

    fn validate(&self) -> Result<(), ComplexError> {
        let n = self.vertices.len();
        let ord = self.group.order();
        for g in 0..ord {
            let mut seen = vec![false; n];
            for v in 0..n {
                let w = self.vertex_action[g][v];
                if w == usize::MAX {
                    return Err(ComplexError::BadGraphAction(format!(
                        "missing vertex action for ({g}, {})",
                        self.vertices[v]
                    )));
                }
                if seen[w] {
                    return Err(ComplexError::BadGraphAction(format!(
                        "element {g} is not a vertex permutation"
                    )));
                }
                seen[w] = true;
            }
        }
        if (0..n).any(|v| self.vertex_action[0][v] != v) {
            return Err(ComplexError::BadGraphAction(
                "identity must fix every vertex".into(),
            ));
        }
        for g in 0..ord {
            for h in 0..ord {
                let hg = self.group.mul(h, g);
                for v in 0..n {
                    let w = self.vertex_action[h][self.vertex_action[g][v]];
                    if w != self.vertex_action[hg][v] {
                        return Err(ComplexError::BadGraphAction(format!(
                            "vertex actions of {h}∘{g} and {hg} disagree"
                        )));
                    }
                }
            }
        }
        if self.edge_action.len() != ord
            || self
                .edge_action
                .iter()
                .any(|row| row.len() != self.edges.len())
        {
            return Err(ComplexError::BadGraphAction(
                "edge action has the wrong shape".into(),
            ));
        }
        for g in 0..ord {
            let mut seen = vec![false; self.edges.len()];
            for (e, edge) in self.edges.iter().enumerate() {
                let img = self.edge_action[g][e];
                if img >= self.edges.len() || seen[img] {
                    return Err(ComplexError::BadGraphAction(format!(
                        "element {g} is not an edge permutation"
                    )));
                }
                seen[img] = true;
                let target = &self.edges[img];
                let endpoints_match = target.from == self.vertex_action[g][edge.from]
                    && target.to == self.vertex_action[g][edge.to];
                let weights_match = target.energy == edge.energy
                    && target.maslov == edge.maslov
                    && target.sp == edge.sp;
                if !endpoints_match || !weights_match {
                    return Err(ComplexError::BadGraphAction(format!(
                        "element {g} does not preserve edge {e} with its weights"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn vertex_action(&self, g: usize, v: usize) -> usize {
        self.vertex_action[g][v]
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

fn derive_edge_action(
    edges: &[Edge],
    vertex_action: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>, ComplexError> {
    let mut out = Vec::with_capacity(vertex_action.len());
    for (g, va) in vertex_action.iter().enumerate() {
        let mut row = Vec::with_capacity(edges.len());
        for (e, edge) in edges.iter().enumerate() {
            let (tf, tt) = (va[edge.from], va[edge.to]);
            let matches: Vec<usize> = edges
                .iter()
                .enumerate()
                .filter(|(_, cand)| {
                    cand.from == tf
                        && cand.to == tt
                        && cand.energy == edge.energy
                        && cand.maslov == edge.maslov
                        && cand.sp == edge.sp
                })
                .map(|(i, _)| i)
                .collect();
            match matches.as_slice() {
                [unique] => row.push(*unique),
                [] => {
                    return Err(ComplexError::BadGraphAction(format!(
                        "no image edge for ({g}, {e}); supply an explicit edge action"
                    )))
                }
                _ => {
                    return Err(ComplexError::BadGraphAction(format!(
                        "ambiguous image for ({g}, {e}); supply an explicit edge action"
                    )))
                }
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// One step of a witness path: an edge index and the direction of
/// traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStep {
    pub edge: usize,
    pub forward: bool,
}

/// Result of the energy-zero subgroup computation.
#[derive(Debug, Clone)]
pub struct EnergyZeroReport {
    /// Sorted members of the subgroup.
    pub members: Vec<usize>,
    /// A witness path per member: a walk from the basepoint to
    /// `g·basepoint` of total weight zero in every active component.
    pub witnesses: BTreeMap<usize, Vec<PathStep>>,
}

#[derive(Clone)]
struct WeightVector {
    energy: Rat,
    maslov: i64,
    sp: u8,
}

impl WeightVector {
    fn zero() -> Self {
        WeightVector {
            energy: Rat::zero(),
            maslov: 0,
            sp: 0,
        }
    }

    fn step(&self, edge: &Edge, forward: bool) -> Self {
        if forward {
            WeightVector {
                energy: &self.energy + &edge.energy,
                maslov: self.maslov + edge.maslov,
                sp: self.sp ^ edge.sp,
            }
        } else {
            WeightVector {
                energy: &self.energy - &edge.energy,
                maslov: self.maslov - edge.maslov,
                sp: self.sp ^ edge.sp,
            }
        }
    }
}

/// Elements of G that admit a path from the basepoint to its image
/// with zero energy (and zero Maslov index / trivial sp class when
/// those components are switched on). Decided exactly: achievable
/// weights form `potential + cycle lattice`, and lattice membership is
/// integer linear algebra over a cleared denominator.
///
/// Besides membership, the report carries an explicit witness walk per
/// member, assembled from the basepoint-based cycle basis. The walk is
/// re-traversed and its weight asserted to vanish before it is
/// returned, as are normality of the subgroup and the containment of
/// every isotropy group.
pub fn energy_zero_subgroup(
    graph: &EnergyGraph,
    use_maslov: bool,
    use_sp: bool,
) -> Result<EnergyZeroReport, ComplexError> {
    let n = graph.vertices.len();
    let ord = graph.group.order();
    for g in 1..ord {
        if graph.vertex_action[g][graph.basepoint] == graph.basepoint {
            return Err(ComplexError::BasepointFixed);
        }
    }

    // BFS tree from the basepoint over the underlying undirected graph
    let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n]; // (edge, forward)
    for (e, edge) in graph.edges.iter().enumerate() {
        adjacency[edge.from].push((e, true));
        adjacency[edge.to].push((e, false));
    }
    let mut parent_step: Vec<Option<PathStep>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[graph.basepoint] = true;
    let mut queue = VecDeque::from([graph.basepoint]);
    let mut order = Vec::new();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(e, forward) in &adjacency[v] {
            let next = if forward {
                graph.edges[e].to
            } else {
                graph.edges[e].from
            };
            if !visited[next] {
                visited[next] = true;
                parent_step[next] = Some(PathStep { edge: e, forward });
                queue.push_back(next);
            }
        }
    }
    if visited.iter().any(|&v| !v) {
        return Err(ComplexError::Disconnected);
    }

    // potentials along the tree
    let mut potential: Vec<WeightVector> = (0..n).map(|_| WeightVector::zero()).collect();
    for &v in &order {
        if let Some(step) = parent_step[v] {
            let prev = if step.forward {
                graph.edges[step.edge].from
            } else {
                graph.edges[step.edge].to
            };
            potential[v] = potential[prev].step(&graph.edges[step.edge], step.forward);
        }
    }

    // cycle weights, one per non-tree edge
    let tree_edges: BTreeSet<usize> = parent_step
        .iter()
        .flatten()
        .map(|step| step.edge)
        .collect();
    let cycle_edges: Vec<usize> = (0..graph.edges.len())
        .filter(|e| !tree_edges.contains(e))
        .collect();
    let cycle_weights: Vec<WeightVector> = cycle_edges
        .iter()
        .map(|&e| {
            let edge = &graph.edges[e];
            WeightVector {
                energy: &potential[edge.from].energy + &edge.energy
                    - &potential[edge.to].energy,
                maslov: potential[edge.from].maslov + edge.maslov - potential[edge.to].maslov,
                sp: potential[edge.from].sp ^ edge.sp ^ potential[edge.to].sp,
            }
        })
        .collect();

    // scale energies to integers over a common denominator
    let mut denom = BigInt::one();
    for w in cycle_weights.iter().chain(potential.iter()) {
        denom = num_integer::lcm(denom, w.energy.denom().clone());
    }
    let scaled = |r: &Rat| -> BigInt {
        let v = r * Rat::from(denom.clone());
        debug_assert!(v.denom().is_one());
        v.numer().clone()
    };

    // lattice columns: one per cycle, plus a parity generator because
    // sp lives in Z/2
    let mut dims = vec![0usize];
    if use_maslov {
        dims.push(1);
    }
    if use_sp {
        dims.push(2);
    }
    let project = |w: &WeightVector| -> Vec<BigInt> {
        dims.iter()
            .map(|&d| match d {
                0 => scaled(&w.energy),
                1 => BigInt::from(w.maslov),
                _ => BigInt::from(w.sp),
            })
            .collect()
    };
    let mut columns: Vec<Vec<BigInt>> = cycle_weights.iter().map(&project).collect();
    if use_sp {
        let mut parity = vec![BigInt::zero(); dims.len()];
        *parity.last_mut().unwrap() = BigInt::from(2);
        columns.push(parity);
    }
    let lattice = IntMatrix::from_columns(&columns, dims.len());

    let mut members = Vec::new();
    let mut witnesses = BTreeMap::new();
    for g in 0..ord {
        let target_vertex = graph.vertex_action[g][graph.basepoint];
        let target: Vec<BigInt> = project(&potential[target_vertex])
            .into_iter()
            .map(|v| -v)
            .collect();
        let Some(coeffs) = solve_integer(&lattice, &target) else {
            continue;
        };
        members.push(g);

        // witness: loops through the basepoint-based cycles, then the
        // tree path to the image vertex
        let tree_path_to = |v: usize| -> Vec<PathStep> {
            let mut path = Vec::new();
            let mut cur = v;
            while let Some(step) = parent_step[cur] {
                path.push(step);
                cur = if step.forward {
                    graph.edges[step.edge].from
                } else {
                    graph.edges[step.edge].to
                };
            }
            path.reverse();
            path
        };
        let reverse_path = |path: &[PathStep]| -> Vec<PathStep> {
            path.iter()
                .rev()
                .map(|s| PathStep {
                    edge: s.edge,
                    forward: !s.forward,
                })
                .collect()
        };
        let mut walk: Vec<PathStep> = Vec::new();
        for (j, &e) in cycle_edges.iter().enumerate() {
            let reps = coeffs[j].clone();
            if reps.is_zero() {
                continue;
            }
            let edge = &graph.edges[e];
            let count: usize = reps
                .abs()
                .try_into()
                .expect("witness multiplicity fits in usize");
            for _ in 0..count {
                if reps.is_negative() {
                    // reversed loop: basepoint → to, edge backwards,
                    // from → basepoint
                    walk.extend(tree_path_to(edge.to));
                    walk.push(PathStep {
                        edge: e,
                        forward: false,
                    });
                    walk.extend(reverse_path(&tree_path_to(edge.from)));
                } else {
                    walk.extend(tree_path_to(edge.from));
                    walk.push(PathStep {
                        edge: e,
                        forward: true,
                    });
                    walk.extend(reverse_path(&tree_path_to(edge.to)));
                }
            }
        }
        walk.extend(tree_path_to(target_vertex));

        // the walk must certify membership exactly
        let mut total = WeightVector::zero();
        let mut at = graph.basepoint;
        for step in &walk {
            let edge = &graph.edges[step.edge];
            let (src, dst) = if step.forward {
                (edge.from, edge.to)
            } else {
                (edge.to, edge.from)
            };
            assert_eq!(at, src, "witness walk must be connected");
            at = dst;
            total = total.step(edge, step.forward);
        }
        assert_eq!(at, target_vertex, "witness walk must reach g·basepoint");
        assert!(total.energy.is_zero(), "witness energy must vanish");
        if use_maslov {
            assert_eq!(total.maslov, 0, "witness Maslov index must vanish");
        }
        if use_sp {
            assert_eq!(total.sp, 0, "witness sp class must vanish");
        }
        witnesses.insert(g, walk);
    }

    // structural guarantees: the result is a normal subgroup and
    // contains every isotropy element
    let member_set: BTreeSet<usize> = members.iter().copied().collect();
    assert!(member_set.contains(&0), "identity must be energy-zero");
    for &a in &members {
        for &b in &members {
            assert!(
                member_set.contains(&graph.group.mul(a, b)),
                "energy-zero subgroup must be closed"
            );
        }
        assert!(
            member_set.contains(&graph.group.inverse(a)),
            "energy-zero subgroup must contain inverses"
        );
        for g in graph.group.elements() {
            let conj = graph
                .group
                .mul(graph.group.mul(g, a), graph.group.inverse(g));
            assert!(
                member_set.contains(&conj),
                "energy-zero subgroup must be normal"
            );
        }
    }
    for v in 0..n {
        for g in graph.group.elements() {
            if graph.vertex_action[g][v] == v {
                assert!(
                    member_set.contains(&g),
                    "isotropy elements must be energy-zero"
                );
            }
        }
    }

    Ok(EnergyZeroReport { members, witnesses })
}

/// Defect table of the signed action: `spf₀ + spf₁ + δ(sp)` as a
/// 2-cochain. The twisted maps Φ_g = (-1)^{sp(g)} ρ(g) compose
/// strictly iff every entry vanishes.
#[derive(Debug, Clone)]
pub struct SignedActionReport {
    pub holds: bool,
    pub defect: TwoCochain,
}

/// Check whether `sp : G → Z/2` trivializes the sum of the two spin
/// profiles. With matching profiles and sp ≡ 0 the sign errors cancel
/// and the check always holds.
pub fn signed_action_check(
    group: &FiniteGroup,
    spf0: &TwoCochain,
    spf1: &TwoCochain,
    sp: &OneCochain,
) -> Result<SignedActionReport, ComplexError> {
    if !is_cocycle(group, spf0) || !is_cocycle(group, spf1) {
        return Err(ComplexError::NotACocycle);
    }
    let defect = spf0.add(spf1).add(&coboundary(group, sp));
    let holds = defect
        .values
        .iter()
        .all(|row| row.iter().all(|&v| v == 0));
    Ok(SignedActionReport { holds, defect })
}

pub mod models;
