//! Finite group cohomology in degree ≤ 2 with `Z/2` coefficients:
//! cocycle identities, coboundaries, `H²(G; Z/2)` via the normalized
//! bar complex, central extensions by `Z/2`, classification of
//! lift-defect tables, and invariant ranks of representations over
//! cyclotomic fields.
//!
//! Groups are given by Cayley tables with the identity at index 0.
//! Coefficients are `Z/2` with the trivial action: the relevant `Z/2`
//! is central in the spin double cover, so conjugation acts trivially.

use thiserror::Error;

use crate::field::{Gf2, Rat, Scalar};
use crate::linalg::Matrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not square or has out-of-range entries")]
    MalformedTable,
    #[error("index 0 does not act as a two-sided identity")]
    NoIdentity,
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse (row is not a permutation)")]
    NoInverse(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CochainError {
    #[error("cochain table does not match the group order")]
    ShapeMismatch,
    #[error("cochain is not normalized at the identity")]
    NotNormalized,
    #[error("input is not a 2-cocycle")]
    NotACocycle,
    #[error("representation property fails at pair ({0}, {1})")]
    NotARepresentation(usize, usize),
}

/// A finite group presented by its Cayley table. `table[g][h]` is the
/// index of `g·h`; index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validate a Cayley table, reporting the first violated axiom.
    pub fn verify(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::MalformedTable);
        }
        if table
            .iter()
            .any(|row| row.iter().any(|&v| v >= n))
        {
            return Err(GroupError::MalformedTable);
        }
        for (g, row) in table.iter().enumerate() {
            if table[0][g] != g || row[0] != g {
                return Err(GroupError::NoIdentity);
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return Err(GroupError::NotAssociative(g, h, k));
                    }
                }
            }
        }
        for g in 0..n {
            let mut seen = vec![false; n];
            for h in 0..n {
                seen[table[g][h]] = true;
            }
            if seen.iter().any(|&s| !s) {
                return Err(GroupError::NoInverse(g));
            }
        }
        Ok(FiniteGroup { order: n, table })
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|g| (0..n).map(|h| (g + h) % n).collect())
            .collect();
        FiniteGroup { order: n, table }
    }

    /// Direct product, elements indexed as `a * |B| + b`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let n = a.order * b.order;
        let table = (0..n)
            .map(|x| {
                let (xa, xb) = (x / b.order, x % b.order);
                (0..n)
                    .map(|y| {
                        let (ya, yb) = (y / b.order, y % b.order);
                        a.mul(xa, ya) * b.order + b.mul(xb, yb)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup { order: n, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order)
            .find(|&h| self.table[g][h] == 0)
            .expect("validated group has inverses")
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Relabel elements by a permutation fixing the identity.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GroupError> {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "relabeling must fix the identity");
        let mut table = vec![vec![0; self.order]; self.order];
        for g in 0..self.order {
            for h in 0..self.order {
                table[perm[g]][perm[h]] = perm[self.table[g][h]];
            }
        }
        FiniteGroup::verify(table)
    }

    /// Brute-force isomorphism test. Intended for small orders (the
    /// extension examples have order ≤ 8).
    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        if self.order != other.order {
            return false;
        }
        let n = self.order;
        let self_orders: Vec<usize> = (0..n).map(|g| self.element_order(g)).collect();
        let other_orders: Vec<usize> = (0..n).map(|g| other.element_order(g)).collect();
        {
            let mut a = self_orders.clone();
            let mut b = other_orders.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut used = vec![false; n];
        used[0] = true;
        fn backtrack(
            a: &FiniteGroup,
            b: &FiniteGroup,
            a_orders: &[usize],
            b_orders: &[usize],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            next: usize,
        ) -> bool {
            let n = a.order;
            if next == n {
                // partial pruning cannot see products of late elements;
                // verify the whole homomorphism once the map is total
                return (0..n)
                    .all(|g| (0..n).all(|h| map[a.mul(g, h)] == b.mul(map[g], map[h])));
            }
            for cand in 0..n {
                if used[cand] || a_orders[next] != b_orders[cand] {
                    continue;
                }
                // consistency with everything already mapped
                let ok = (0..next).all(|g| {
                    let p = a.mul(g, next);
                    let q = a.mul(next, g);
                    let bp = b.mul(map[g], cand);
                    let bq = b.mul(cand, map[g]);
                    (map[p] == usize::MAX || map[p] == bp)
                        && (map[q] == usize::MAX || map[q] == bq)
                });
                if !ok {
                    continue;
                }
                map[next] = cand;
                used[cand] = true;
                if backtrack(a, b, a_orders, b_orders, map, used, next + 1) {
                    return true;
                }
                map[next] = usize::MAX;
                used[cand] = false;
            }
            false
        }
        backtrack(
            self,
            other,
            &self_orders,
            &other_orders,
            &mut map,
            &mut used,
            1,
        )
    }
}

/// A normalized function `G → Z/2` with `b(e) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCochain {
    pub values: Vec<u8>,
}

impl OneCochain {
    pub fn new(values: Vec<u8>) -> Result<Self, CochainError> {
        if values.first() != Some(&0) {
            return Err(CochainError::NotNormalized);
        }
        if values.iter().any(|&v| v > 1) {
            return Err(CochainError::ShapeMismatch);
        }
        Ok(OneCochain { values })
    }

    pub fn zero(order: usize) -> Self {
        OneCochain {
            values: vec![0; order],
        }
    }

    pub fn add(&self, other: &OneCochain) -> OneCochain {
        OneCochain {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }
}

/// A normalized function `G × G → Z/2` with `c(g,e) = c(e,g) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCochain {
    pub values: Vec<Vec<u8>>,
}

impl TwoCochain {
    pub fn new(group: &FiniteGroup, values: Vec<Vec<u8>>) -> Result<Self, CochainError> {
        let n = group.order();
        if values.len() != n || values.iter().any(|row| row.len() != n) {
            return Err(CochainError::ShapeMismatch);
        }
        if values.iter().any(|row| row.iter().any(|&v| v > 1)) {
            return Err(CochainError::ShapeMismatch);
        }
        for (g, row) in values.iter().enumerate() {
            if row[0] != 0 || values[0][g] != 0 {
                return Err(CochainError::NotNormalized);
            }
        }
        Ok(TwoCochain { values })
    }

    pub fn zero(order: usize) -> Self {
        TwoCochain {
            values: vec![vec![0; order]; order],
        }
    }

    pub fn get(&self, g: usize, h: usize) -> u8 {
        self.values[g][h]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|row| row.iter().all(|&v| v == 0))
    }

    pub fn add(&self, other: &TwoCochain) -> TwoCochain {
        TwoCochain {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a ^ b).collect())
                .collect(),
        }
    }
}

/// The 2-cocycle identity `c(g,h) + c(fg,h) + c(f,gh) + c(f,g) = 0`
/// for all triples (trivial coefficient action).
pub fn is_cocycle(group: &FiniteGroup, c: &TwoCochain) -> bool {
    let n = group.order();
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                let v = c.get(g, h)
                    ^ c.get(group.mul(f, g), h)
                    ^ c.get(f, group.mul(g, h))
                    ^ c.get(f, g);
                if v != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// `(δb)(g,h) = b(h) + b(gh) + b(g)` over `Z/2`.
pub fn coboundary(group: &FiniteGroup, b: &OneCochain) -> TwoCochain {
    let n = group.order();
    let mut values = vec![vec![0u8; n]; n];
    for (g, row) in values.iter_mut().enumerate() {
        for (h, slot) in row.iter_mut().enumerate() {
            *slot = b.values[h] ^ b.values[group.mul(g, h)] ^ b.values[g];
        }
    }
    TwoCochain { values }
}

/// Column index of the pair `(g, h)` among nonidentity pairs in
/// lexicographic order. Cochain values at identity pairs are forced to
/// zero by normalization and carry no unknowns.
fn pair_index(n: usize, g: usize, h: usize) -> usize {
    debug_assert!(g >= 1 && h >= 1);
    (g - 1) * (n - 1) + (h - 1)
}

fn cochain_to_vec(n: usize, c: &TwoCochain) -> Vec<Gf2> {
    let mut v = vec![Gf2(0); (n - 1) * (n - 1)];
    for g in 1..n {
        for h in 1..n {
            v[pair_index(n, g, h)] = Gf2(c.get(g, h));
        }
    }
    v
}

fn vec_to_cochain(n: usize, v: &[Gf2]) -> TwoCochain {
    let mut values = vec![vec![0u8; n]; n];
    for g in 1..n {
        for h in 1..n {
            values[g][h] = v[pair_index(n, g, h)].0;
        }
    }
    TwoCochain { values }
}

/// Matrix of the cocycle condition on normalized 2-cochains. Rows are
/// indexed by triples `(f,g,h)` of nonidentity elements (triples with
/// an identity entry hold identically), columns by nonidentity pairs.
fn cocycle_condition_matrix(group: &FiniteGroup) -> Matrix<Gf2> {
    let n = group.order();
    let cols = (n - 1) * (n - 1);
    let mut rows: Vec<Vec<Gf2>> = Vec::new();
    for f in 1..n {
        for g in 1..n {
            for h in 1..n {
                let mut row = vec![Gf2(0); cols];
                let mut toggle = |a: usize, b: usize| {
                    if a >= 1 && b >= 1 {
                        let i = pair_index(n, a, b);
                        row[i] = row[i] + Gf2(1);
                    }
                };
                toggle(g, h);
                toggle(group.mul(f, g), h);
                toggle(f, group.mul(g, h));
                toggle(f, g);
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        Matrix::zero(0, cols)
    } else {
        Matrix::from_rows(rows)
    }
}

/// Matrix whose columns are the coboundaries `δ(indicator of g)` for
/// each nonidentity g.
fn coboundary_matrix(group: &FiniteGroup) -> Matrix<Gf2> {
    let n = group.order();
    let cols: Vec<Vec<Gf2>> = (1..n)
        .map(|g| {
            let mut b = OneCochain::zero(n);
            b.values[g] = 1;
            cochain_to_vec(n, &coboundary(group, &b))
        })
        .collect();
    if cols.is_empty() {
        Matrix::zero((n - 1) * (n - 1), 0)
    } else {
        Matrix::from_columns(cols)
    }
}

/// Witness β with `c1 - c2 = δβ`, or `None` if the classes differ.
pub fn cohomologous(
    group: &FiniteGroup,
    c1: &TwoCochain,
    c2: &TwoCochain,
) -> Result<Option<OneCochain>, CochainError> {
    if !is_cocycle(group, c1) || !is_cocycle(group, c2) {
        return Err(CochainError::NotACocycle);
    }
    let n = group.order();
    let target = cochain_to_vec(n, &c1.add(c2));
    let mat = coboundary_matrix(group);
    Ok(mat.solve(&target).map(|x| {
        let mut values = vec![0u8; n];
        for g in 1..n {
            values[g] = x[g - 1].0;
        }
        OneCochain { values }
    }))
}

/// Dimension and representatives of `H²(G; Z/2)`.
#[derive(Debug, Clone)]
pub struct CohomologyClassReport {
    pub dimension: usize,
    /// Cocycle representatives of a basis of H², pairwise
    /// non-cohomologous, in row-echelon order.
    pub basis: Vec<TwoCochain>,
    /// Basis of the coboundary subspace.
    pub coboundary_basis: Vec<TwoCochain>,
}

/// Kernel-mod-image in degree 2 of the normalized bar complex, by
/// dense elimination over `F₂`. Deterministic: cocycle kernel vectors
/// in lexicographic pair order, quotient representatives chosen by
/// extending an echelon basis of the coboundaries.
pub fn compute_h2(group: &FiniteGroup) -> CohomologyClassReport {
    let n = group.order();
    if n == 1 {
        return CohomologyClassReport {
            dimension: 0,
            basis: vec![],
            coboundary_basis: vec![],
        };
    }
    let z_basis = cocycle_condition_matrix(group).kernel_basis();
    let b_matrix = coboundary_matrix(group);
    let b_basis = b_matrix.column_space_basis();

    // Extend the coboundary basis to a basis of the cocycle space: add
    // kernel vectors one by one, keeping those that grow the rank.
    let mut staged: Vec<Vec<Gf2>> = b_basis.clone();
    let mut reps: Vec<Vec<Gf2>> = Vec::new();
    let mut rank = if staged.is_empty() {
        0
    } else {
        Matrix::from_columns(staged.clone()).rank()
    };
    for z in &z_basis {
        let mut trial = staged.clone();
        trial.push(z.clone());
        let r = Matrix::from_columns(trial.clone()).rank();
        if r > rank {
            rank = r;
            staged = trial;
            reps.push(z.clone());
        }
    }
    CohomologyClassReport {
        dimension: reps.len(),
        basis: reps.iter().map(|v| vec_to_cochain(n, v)).collect(),
        coboundary_basis: b_basis.iter().map(|v| vec_to_cochain(n, v)).collect(),
    }
}

/// The class of a lift-defect table `ε` relative to the basis of
/// `compute_h2`: `ε(g,h) = 1` iff the chosen lifts satisfy
/// `T_g ∘ T_h = -T_{gh}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinProfileClass {
    /// Coefficients of the class in the `compute_h2` basis.
    pub coefficients: Vec<u8>,
}

impl SpinProfileClass {
    pub fn is_trivial(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

/// Verify the defect table is a normalized cocycle and decompose its
/// class in the `compute_h2` basis.
pub fn spin_profile_from_defects(
    group: &FiniteGroup,
    defects: &TwoCochain,
) -> Result<SpinProfileClass, CochainError> {
    if !is_cocycle(group, defects) {
        return Err(CochainError::NotACocycle);
    }
    let n = group.order();
    let report = compute_h2(group);
    if n == 1 {
        return Ok(SpinProfileClass {
            coefficients: vec![],
        });
    }
    // Solve [coboundaries | class reps] * x = ε; the representative
    // coefficients are the class id.
    let mut cols: Vec<Vec<Gf2>> = report
        .coboundary_basis
        .iter()
        .map(|c| cochain_to_vec(n, c))
        .collect();
    let n_cob = cols.len();
    cols.extend(report.basis.iter().map(|c| cochain_to_vec(n, c)));
    let mat = if cols.is_empty() {
        Matrix::zero((n - 1) * (n - 1), 0)
    } else {
        Matrix::from_columns(cols)
    };
    let x = mat
        .solve(&cochain_to_vec(n, defects))
        .expect("every cocycle decomposes over coboundaries and class representatives");
    Ok(SpinProfileClass {
        coefficients: x[n_cob..].iter().map(|v| v.0).collect(),
    })
}

/// The central extension `0 → Z/2 → G' → G → 1` classified by the
/// cocycle `c`: elements are pairs `(ε, g)` indexed as `ε·|G| + g`,
/// with `(ε₁,g)(ε₂,h) = (ε₁+ε₂+c(g,h), gh)`.
pub fn central_extension(
    group: &FiniteGroup,
    c: &TwoCochain,
) -> Result<FiniteGroup, CochainError> {
    if !is_cocycle(group, c) {
        return Err(CochainError::NotACocycle);
    }
    let n = group.order();
    let m = 2 * n;
    let idx = |eps: u8, g: usize| (eps as usize) * n + g;
    let mut table = vec![vec![0usize; m]; m];
    for e1 in 0..2u8 {
        for g in 0..n {
            for e2 in 0..2u8 {
                for h in 0..n {
                    let eps = e1 ^ e2 ^ c.get(g, h);
                    table[idx(e1, g)][idx(e2, h)] = idx(eps, group.mul(g, h));
                }
            }
        }
    }
    Ok(FiniteGroup::verify(table).expect("extension by a cocycle is a group"))
}

/// Rank of the invariant subspace of a representation, computed as the
/// rank of the averaging projector `(1/|G|) Σ_g rep(g)`. Also equal to
/// the average of the traces; both are computed and cross-checked.
pub fn invariant_rank<F: Scalar>(
    group: &FiniteGroup,
    rep: &[Matrix<F>],
) -> Result<usize, CochainError> {
    let n = group.order();
    assert_eq!(rep.len(), n, "one matrix per group element");
    let dim = rep[0].rows();
    for m in rep {
        assert_eq!((m.rows(), m.cols()), (dim, dim), "matrices must be square");
    }
    for g in 0..n {
        for h in 0..n {
            if rep[g].mul(&rep[h]) != rep[group.mul(g, h)] {
                return Err(CochainError::NotARepresentation(g, h));
            }
        }
    }
    let mut sum = Matrix::<F>::zero(dim, dim);
    let mut trace = F::zero();
    for m in rep {
        sum = sum.add(m);
        trace = trace + m.trace();
    }
    let inv_order = F::from_rat(&Rat::new(1.into(), (n as i64).into()));
    let projector = sum.scale(&inv_order);
    let rank = projector.rank();
    // character-theoretic cross-check: rank = (1/|G|) Σ_g tr rep(g)
    let avg_trace = trace * inv_order;
    let expected = (0..rank).fold(F::zero(), |acc, _| acc + F::one());
    assert_eq!(
        avg_trace, expected,
        "projector rank must equal the averaged trace"
    );
    Ok(rank)
}

/// Averaging projector of a representation (used by callers that need
/// the invariant subspace itself, not just its rank).
pub fn averaging_projector<F: Scalar>(group: &FiniteGroup, rep: &[Matrix<F>]) -> Matrix<F> {
    let n = group.order();
    let dim = rep[0].rows();
    let mut sum = Matrix::<F>::zero(dim, dim);
    for m in rep {
        sum = sum.add(m);
    }
    sum.scale(&F::from_rat(&Rat::new(1.into(), (n as i64).into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Cyc3};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn z2() -> FiniteGroup {
        FiniteGroup::verify(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn z3() -> FiniteGroup {
        FiniteGroup::cyclic(3)
    }

    /// ε with ε(g,g) = 1 on Z/2, the factor set of Z/4 over Z/2.
    fn z2_nontrivial() -> TwoCochain {
        TwoCochain::new(&z2(), vec![vec![0, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn verify_group_accepts_cyclic_tables() {
        assert_eq!(z2().order(), 2);
        assert_eq!(z3().order(), 3);
    }

    #[test]
    fn verify_group_rejects_non_permutation_row() {
        assert_eq!(
            FiniteGroup::verify(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoInverse(1))
        );
    }

    #[test]
    fn verify_group_rejects_broken_identity() {
        assert_eq!(
            FiniteGroup::verify(vec![vec![1, 0], vec![0, 1]]),
            Err(GroupError::NoIdentity)
        );
    }

    #[test]
    fn verify_group_rejects_nonassociative() {
        // order-3 "table" with two idempotent rows: 1·1 = 1 breaks
        // associativity before the inverse check sees it
        let t = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(matches!(
            FiniteGroup::verify(t),
            Err(GroupError::NotAssociative(..))
        ));
    }

    #[test]
    fn cocycle_checks() {
        assert!(is_cocycle(&z2(), &TwoCochain::zero(2)));
        assert!(is_cocycle(&z2(), &z2_nontrivial()));
        // single diagonal entry on Z/3 is not a cocycle
        let c = TwoCochain::new(&z3(), vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 0]])
            .unwrap();
        assert!(!is_cocycle(&z3(), &c));
    }

    #[test]
    fn coboundary_examples() {
        let n = coboundary(&z3(), &OneCochain::zero(3));
        assert_eq!(n, TwoCochain::zero(3));
        // Z/2, b(g) = 1: δb = 0
        let b = OneCochain::new(vec![0, 1]).unwrap();
        assert_eq!(coboundary(&z2(), &b), TwoCochain::zero(2));
        // Z/3, b(g) = 1, b(g²) = 0
        let b = OneCochain::new(vec![0, 1, 0]).unwrap();
        let db = coboundary(&z3(), &b);
        assert_eq!(db.get(1, 1), 0); // b(g)+b(g²)+b(g)
        assert_eq!(db.get(1, 2), 1); // b(g²)+b(e)+b(g)
        assert_eq!(db.get(2, 1), 1);
        assert_eq!(db.get(2, 2), 1); // b(g)+b(e)+b(g²)... = b(g²)+b(g)+b(g²)
        assert!(is_cocycle(&z3(), &db));
    }

    #[test]
    fn cohomologous_witnesses() {
        let c = z2_nontrivial();
        // same cochain: witness exists (zero works)
        let w = cohomologous(&z2(), &c, &c).unwrap().unwrap();
        assert_eq!(coboundary(&z2(), &w), TwoCochain::zero(2));
        // nontrivial class on Z/2
        assert!(cohomologous(&z2(), &c, &TwoCochain::zero(2))
            .unwrap()
            .is_none());
        // H²(Z/3; Z/2) = 0: diagonal-ones cocycle bounds
        let c3 = TwoCochain::new(&z3(), vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .unwrap();
        assert!(is_cocycle(&z3(), &c3));
        let w = cohomologous(&z3(), &c3, &TwoCochain::zero(3)).unwrap();
        let w = w.expect("every Z/3 cocycle is a coboundary");
        assert_eq!(coboundary(&z3(), &w), c3);
    }

    /// Exhaustive H² oracle for tiny groups: enumerate all normalized
    /// 2-cochains, filter cocycles, count classes mod all coboundaries.
    fn h2_dimension_by_enumeration(group: &FiniteGroup) -> usize {
        let n = group.order();
        let cells = (n - 1) * (n - 1);
        assert!(cells <= 16, "oracle is exponential");
        let mut cocycles = 0usize;
        for mask in 0u32..(1 << cells) {
            let mut values = vec![vec![0u8; n]; n];
            for (g, row) in values.iter_mut().enumerate().skip(1) {
                for (h, slot) in row.iter_mut().enumerate().skip(1) {
                    *slot = ((mask >> pair_index(n, g, h)) & 1) as u8;
                }
            }
            if is_cocycle(group, &TwoCochain { values }) {
                cocycles += 1;
            }
        }
        let mut coboundaries = std::collections::HashSet::new();
        for mask in 0u32..(1 << (n - 1)) {
            let mut b = OneCochain::zero(n);
            for g in 1..n {
                b.values[g] = ((mask >> (g - 1)) & 1) as u8;
            }
            coboundaries.insert(coboundary(group, &b).values);
        }
        let dim_z = (cocycles as f64).log2() as usize;
        let dim_b = (coboundaries.len() as f64).log2() as usize;
        dim_z - dim_b
    }

    #[test]
    fn h2_dimensions() {
        assert_eq!(compute_h2(&z2()).dimension, 1);
        assert_eq!(compute_h2(&z3()).dimension, 0);
        let klein = FiniteGroup::product(&z2(), &z2());
        let by_oracle = h2_dimension_by_enumeration(&klein);
        assert_eq!(by_oracle, 3);
        assert_eq!(compute_h2(&klein).dimension, 3);
        assert_eq!(compute_h2(&FiniteGroup::cyclic(4)).dimension, 1);
    }

    #[test]
    fn h2_basis_elements_are_cocycles_and_independent() {
        let klein = FiniteGroup::product(&z2(), &z2());
        let report = compute_h2(&klein);
        for b in &report.basis {
            assert!(is_cocycle(&klein, b));
        }
        for (i, b1) in report.basis.iter().enumerate() {
            for b2 in report.basis.iter().skip(i + 1) {
                assert!(cohomologous(&klein, b1, b2).unwrap().is_none());
            }
        }
    }

    #[test]
    fn h2_invariant_under_relabeling() {
        let klein = FiniteGroup::product(&z2(), &z2());
        let relabeled = klein.relabel(&[0, 2, 3, 1]).unwrap();
        assert_eq!(compute_h2(&relabeled).dimension, 3);
        let z6 = FiniteGroup::cyclic(6);
        let relabeled = z6.relabel(&[0, 3, 1, 4, 2, 5]).unwrap();
        assert_eq!(
            compute_h2(&z6).dimension,
            compute_h2(&relabeled).dimension
        );
    }

    #[test]
    fn spin_profile_classes() {
        // reflection lift with r = rank Ker(Id + A): ε(g,g) = r(r-1)/2 mod 2
        let defect_for_rank = |r: u64| {
            let e = ((r * (r.saturating_sub(1)) / 2) % 2) as u8;
            TwoCochain::new(&z2(), vec![vec![0, 0], vec![0, e]]).unwrap()
        };
        let class = spin_profile_from_defects(&z2(), &defect_for_rank(1)).unwrap();
        assert!(class.is_trivial());
        let class = spin_profile_from_defects(&z2(), &defect_for_rank(2)).unwrap();
        assert!(!class.is_trivial());
        let class = spin_profile_from_defects(&z3(), &TwoCochain::zero(3)).unwrap();
        assert!(class.is_trivial());
        // a non-cocycle defect table cannot come from lifts
        let bad = TwoCochain::new(&z3(), vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 0]])
            .unwrap();
        assert_eq!(
            spin_profile_from_defects(&z3(), &bad),
            Err(CochainError::NotACocycle)
        );
    }

    #[test]
    fn central_extensions() {
        let split = central_extension(&z2(), &TwoCochain::zero(2)).unwrap();
        assert!(split.is_isomorphic(&FiniteGroup::product(&z2(), &z2())));
        assert!(!split.is_isomorphic(&FiniteGroup::cyclic(4)));
        let twisted = central_extension(&z2(), &z2_nontrivial()).unwrap();
        assert!(twisted.is_isomorphic(&FiniteGroup::cyclic(4)));
        let z6 = central_extension(&z3(), &TwoCochain::zero(3)).unwrap();
        assert!(z6.is_isomorphic(&FiniteGroup::cyclic(6)));
    }

    #[test]
    fn extensions_of_cohomologous_cocycles_are_isomorphic() {
        // all four coboundaries on Z/2xZ/2 shifted by one cocycle
        let klein = FiniteGroup::product(&z2(), &z2());
        let report = compute_h2(&klein);
        let c = report.basis[0].clone();
        for mask in 0u32..8 {
            let mut b = OneCochain::zero(4);
            for g in 1..4 {
                b.values[g] = ((mask >> (g - 1)) & 1) as u8;
            }
            let shifted = c.add(&coboundary(&klein, &b));
            let e1 = central_extension(&klein, &c).unwrap();
            let e2 = central_extension(&klein, &shifted).unwrap();
            assert!(e1.is_isomorphic(&e2));
        }
    }

    fn regular_representation(group: &FiniteGroup) -> Vec<Matrix<Rat>> {
        let n = group.order();
        (0..n)
            .map(|g| {
                Matrix::from_fn(n, n, |r, c| {
                    if group.mul(g, c) == r {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect()
    }

    #[test]
    fn invariant_rank_examples() {
        let g = z3();
        // regular representation: one trivial summand
        assert_eq!(invariant_rank(&g, &regular_representation(&g)).unwrap(), 1);
        // character ρ^k on a 1-dim space: invariant iff k = 0
        for k in 0..3i64 {
            let rep: Vec<Matrix<Cyc3>> = (0..3)
                .map(|j| {
                    Matrix::from_rows(vec![vec![Cyc3::zeta_pow(k * j as i64)]])
                })
                .collect();
            let expect = usize::from(k == 0);
            assert_eq!(invariant_rank(&g, &rep).unwrap(), expect);
        }
        // non-homomorphisms are rejected
        let bad: Vec<Matrix<Rat>> = vec![
            Matrix::identity(2),
            Matrix::from_rows(vec![
                vec![rat(2, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
            ]),
            Matrix::identity(2),
        ];
        assert!(matches!(
            invariant_rank(&g, &bad),
            Err(CochainError::NotARepresentation(..))
        ));
    }

    #[test]
    fn invariant_rank_matches_fixed_space() {
        // independent oracle: stack (rep(g) - I) for all g and take the
        // kernel dimension
        let g = FiniteGroup::product(&z2(), &z3());
        let rep = regular_representation(&g);
        let n = g.order();
        let dim = rep[0].rows();
        let stacked = Matrix::from_fn(n * dim, dim, |r, c| {
            let (gi, row) = (r / dim, r % dim);
            let mut v = rep[gi].get(row, c).clone();
            if row == c {
                v -= Rat::one();
            }
            v
        });
        let fixed_dim = dim - stacked.rank();
        assert_eq!(invariant_rank(&g, &rep).unwrap(), fixed_dim);
    }

    proptest! {
        /// δ² = 0: the coboundary of any 1-cochain is a cocycle, over
        /// random groups of order ≤ 8 built as products of cyclics.
        #[test]
        fn coboundaries_are_cocycles(
            factors in prop::collection::vec(1usize..=4, 1..=2),
            bits in prop::collection::vec(any::<bool>(), 8),
        ) {
            let mut group = FiniteGroup::cyclic(1);
            for f in factors {
                group = FiniteGroup::product(&group, &FiniteGroup::cyclic(f));
            }
            let n = group.order();
            prop_assume!(n <= 8);
            let mut b = OneCochain::zero(n);
            for g in 1..n {
                b.values[g] = u8::from(bits[g % bits.len()]);
            }
            prop_assert!(is_cocycle(&group, &coboundary(&group, &b)));
        }

        /// cohomologous is an equivalence relation on shifted cocycles:
        /// reflexive with witness 0, symmetric with the same witness
        /// (its own inverse over F₂), transitive with the witness sum.
        #[test]
        fn cohomologous_equivalence(mask1 in 0u32..8, mask2 in 0u32..8, mask3 in 0u32..8) {
            let group = FiniteGroup::product(&z2(), &z2());
            let base = compute_h2(&group).basis[0].clone();
            let shift = |mask: u32| {
                let mut b = OneCochain::zero(4);
                for g in 1..4 {
                    b.values[g] = ((mask >> (g - 1)) & 1) as u8;
                }
                base.add(&coboundary(&group, &b))
            };
            let c1 = shift(mask1);
            let c2 = shift(mask2);
            let c3 = shift(mask3);
            // reflexive
            prop_assert!(cohomologous(&group, &c1, &c1).unwrap().is_some());
            // symmetric: a witness for (c1, c2) also bounds c2 - c1
            let w12 = cohomologous(&group, &c1, &c2).unwrap().unwrap();
            prop_assert_eq!(coboundary(&group, &w12), c1.add(&c2));
            prop_assert_eq!(coboundary(&group, &w12), c2.add(&c1));
            // transitive: witnesses add
            let w23 = cohomologous(&group, &c2, &c3).unwrap().unwrap();
            prop_assert_eq!(coboundary(&group, &w12.add(&w23)), c1.add(&c3));
            // and the class separates from zero
            let zero = TwoCochain::zero(4);
            prop_assert!(cohomologous(&group, &c1, &zero).unwrap().is_none());
        }
    }
}
