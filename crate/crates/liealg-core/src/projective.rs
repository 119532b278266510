//! Projective-representation diagnostics at the Lie-algebra level.
//!
//! An infinitesimal exponent is an antisymmetric bilinear form Ξ on the
//! algebra with dΞ = 0; those removable by a generator shift are exactly the
//! coboundaries Ξ(a, b) = Λ([a, b]). The quotient — second cohomology — counts
//! the central charges no redefinition can absorb. [`r_sets`] implements the
//! complementary reachability viewpoint: a generator outside the span of all
//! bracket values has an exponent the Jacobi machinery can never touch.
//!
//! Everything is computed by exact rank arithmetic over ℚ(i) with
//! lexicographic pivoting, so representatives are canonical.

use crate::algebra::LieAlgebra;
use crate::error::Error;
use crate::linalg::{Matrix, RowSpace};
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// Generator pairs (i, j) with i < j in lexicographic order: the coordinate
/// system for antisymmetric bilinear forms.
pub fn generator_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// An antisymmetric bilinear form bound to an algebra, stored on the upper
/// pair coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle<'a> {
    algebra: &'a LieAlgebra,
    upper: Vec<G>,
}

impl<'a> Cocycle<'a> {
    pub fn zero(algebra: &'a LieAlgebra) -> Self {
        let n = algebra.dim();
        Cocycle { algebra, upper: vec![G::zero(); n * (n - 1) / 2] }
    }

    /// Builds a form from signed entries; (j, i) entries contribute with the
    /// opposite sign, diagonal entries are rejected.
    pub fn from_entries(
        algebra: &'a LieAlgebra,
        entries: &[((usize, usize), G)],
    ) -> Result<Self, Error> {
        let n = algebra.dim();
        let mut form = Cocycle::zero(algebra);
        for ((i, j), value) in entries {
            let (i, j) = (*i, *j);
            if i == j || i >= n || j >= n {
                return Err(Error::InvalidAlgebra(format!("invalid cocycle entry ({i}, {j})")));
            }
            if i < j {
                let slot = &mut form.upper[pair_index(n, i, j)];
                *slot = &*slot + value;
            } else {
                let slot = &mut form.upper[pair_index(n, j, i)];
                *slot = &*slot - value;
            }
        }
        Ok(form)
    }

    pub(crate) fn from_pair_vector(algebra: &'a LieAlgebra, upper: Vec<G>) -> Self {
        debug_assert_eq!(upper.len(), algebra.dim() * (algebra.dim() - 1) / 2);
        Cocycle { algebra, upper }
    }

    pub fn algebra(&self) -> &'a LieAlgebra {
        self.algebra
    }

    /// Ξ(X_i, X_j) with the antisymmetric extension.
    pub fn get(&self, i: usize, j: usize) -> G {
        let n = self.algebra.dim();
        if i == j {
            G::zero()
        } else if i < j {
            self.upper[pair_index(n, i, j)].clone()
        } else {
            -&self.upper[pair_index(n, j, i)]
        }
    }

    pub fn pair_vector(&self) -> &[G] {
        &self.upper
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(G::is_zero)
    }

    /// The pairs carrying a nonzero entry.
    pub fn support(&self) -> Vec<(usize, usize)> {
        generator_pairs(self.algebra.dim())
            .into_iter()
            .zip(&self.upper)
            .filter(|(_, v)| !v.is_zero())
            .map(|(p, _)| p)
            .collect()
    }
}

/// A linear form on the algebra, the data of a generator shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm<'a> {
    algebra: &'a LieAlgebra,
    coeffs: Vec<G>,
}

impl<'a> LinearForm<'a> {
    pub fn new(algebra: &'a LieAlgebra, coeffs: Vec<G>) -> Result<Self, Error> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), got: coeffs.len() });
        }
        Ok(LinearForm { algebra, coeffs })
    }

    pub fn zero(algebra: &'a LieAlgebra) -> Self {
        LinearForm { algebra, coeffs: vec![G::zero(); algebra.dim()] }
    }

    pub fn coefficients(&self) -> &[G] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(G::is_zero)
    }
}

/// Evaluates the full coboundary dΞ(X_i, X_j, X_k) = Ξ([X_i,X_j], X_k)
/// plus cyclic terms on all i < j < k; the nonzero residuals are returned.
/// Empty output means Ξ is a 2-cocycle.
pub fn cocycle_condition<'a>(xi: &Cocycle<'a>) -> Vec<((usize, usize, usize), G)> {
    let algebra = xi.algebra;
    let n = algebra.dim();
    let mut residuals = Vec::new();
    let pair_with = |v: &[G], k: usize| -> G {
        let mut acc = G::zero();
        for (m, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &xi.get(m, k));
            }
        }
        acc
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut value = pair_with(&algebra.tensor().coefficients(i, j), k);
                value = &value + &pair_with(&algebra.tensor().coefficients(j, k), i);
                value = &value + &pair_with(&algebra.tensor().coefficients(k, i), j);
                if !value.is_zero() {
                    residuals.push(((i, j, k), value));
                }
            }
        }
    }
    residuals
}

/// The coboundary of a linear form: Ξ(X_i, X_j) = Λ([X_i, X_j]).
pub fn coboundary_from<'a>(lambda: &LinearForm<'a>) -> Cocycle<'a> {
    let algebra = lambda.algebra;
    let n = algebra.dim();
    let pairs = generator_pairs(n);
    let mut upper = vec![G::zero(); pairs.len()];
    for (slot, &(i, j)) in upper.iter_mut().zip(&pairs) {
        let bracket = algebra.tensor().coefficients(i, j);
        for (m, c) in bracket.iter().enumerate() {
            if !c.is_zero() {
                *slot = &*slot + &(c * &lambda.coeffs[m]);
            }
        }
    }
    Cocycle { algebra, upper }
}

/// The dΞ constraint matrix: one row per generator triple, one column per
/// pair coordinate.
fn constraint_matrix(algebra: &LieAlgebra) -> Matrix {
    let n = algebra.dim();
    let pairs = generator_pairs(n);
    let width = pairs.len();
    let mut rows = Vec::new();
    let add_term = |row: &mut Vec<G>, v: &[G], k: usize| {
        for (m, c) in v.iter().enumerate() {
            if c.is_zero() || m == k {
                continue;
            }
            if m < k {
                let idx = pair_index(n, m, k);
                row[idx] = &row[idx] + c;
            } else {
                let idx = pair_index(n, k, m);
                row[idx] = &row[idx] - c;
            }
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut row = vec![G::zero(); width];
                add_term(&mut row, &algebra.tensor().coefficients(i, j), k);
                add_term(&mut row, &algebra.tensor().coefficients(j, k), i);
                add_term(&mut row, &algebra.tensor().coefficients(k, i), j);
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows).expect("constraint rows share the pair width")
}

/// The coboundary images of the unit linear forms, as a tracked row space:
/// tags recover the generating Λ for each basis direction.
fn coboundary_space(algebra: &LieAlgebra) -> RowSpace {
    let n = algebra.dim();
    let width = n * (n - 1) / 2;
    let mut space = RowSpace::with_tracking(width, n);
    for m in 0..n {
        let mut unit = vec![G::zero(); n];
        unit[m] = G::one();
        let lambda = LinearForm { algebra, coeffs: unit };
        space.insert(coboundary_from(&lambda).upper);
    }
    space
}

/// Full second-cohomology report: cocycle and coboundary dimensions, the
/// canonical residual representatives of H², and for each removable
/// direction the linear form that removes it.
#[derive(Clone, Debug)]
pub struct CohomologyReport<'a> {
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub residual_basis: Vec<Cocycle<'a>>,
    pub elimination: Vec<(Cocycle<'a>, LinearForm<'a>)>,
}

/// Computes Z² as the exact nullspace of the dΞ operator, B² as the image of
/// the coboundary map, and canonical H² representatives by reducing the Z²
/// basis modulo B².
pub fn h2(algebra: &LieAlgebra) -> Result<CohomologyReport<'_>, Error> {
    if !algebra.jacobi_verified() {
        return Err(Error::InvalidAlgebra("cohomology requires a Jacobi-verified algebra".into()));
    }
    let z2_basis = constraint_matrix(algebra).nullspace();
    let coboundaries = coboundary_space(algebra);
    let dim_z2 = z2_basis.len();
    let dim_b2 = coboundaries.rank();

    let mut residual_space = RowSpace::new(algebra.dim() * (algebra.dim() - 1) / 2);
    for z in &z2_basis {
        residual_space.insert(coboundaries.reduce(z));
    }
    let residual_basis: Vec<Cocycle<'_>> = residual_space
        .basis()
        .map(|v| Cocycle::from_pair_vector(algebra, v.to_vec()))
        .collect();
    assert_eq!(dim_z2 - dim_b2, residual_basis.len(), "coboundaries must lie inside Z²");

    let elimination = coboundaries
        .tracked_basis()
        .map(|(vector, tag)| {
            let cocycle = Cocycle::from_pair_vector(algebra, vector.to_vec());
            let lambda = LinearForm { algebra, coeffs: tag.to_vec() };
            (cocycle, lambda)
        })
        .collect();

    Ok(CohomologyReport {
        dim_z2,
        dim_b2,
        dim_h2: dim_z2 - dim_b2,
        residual_basis,
        elimination,
    })
}

/// Splits a cocycle into a removable part and a canonical residual:
/// returns the shift Λ and the residual Ξ − dΛ, the latter supported away
/// from every coboundary pivot. Applying the operation to its own residual
/// is the identity with zero shift.
pub fn eliminate_charges<'a>(
    algebra: &'a LieAlgebra,
    xi: &Cocycle<'a>,
) -> Result<(LinearForm<'a>, Cocycle<'a>), Error> {
    if !cocycle_condition(xi).is_empty() {
        return Err(Error::NotACocycle);
    }
    let coboundaries = coboundary_space(algebra);
    let (residual, combo) = coboundaries.reduce_with_combination(xi.pair_vector());
    let lambda = LinearForm { algebra, coeffs: combo };
    Ok((lambda, Cocycle::from_pair_vector(algebra, residual)))
}

/// One row of the reduced Z² constraint system: Σ coeff · Ξ(pair) = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentRelation {
    pub terms: Vec<((usize, usize), G)>,
}

/// The row-reduced presentation of the cocycle constraints in terms of named
/// Ξ(g_a, g_b) entries. Pairs absent from every relation are unconstrained.
pub fn exponent_relations(algebra: &LieAlgebra) -> Result<Vec<ExponentRelation>, Error> {
    if !algebra.jacobi_verified() {
        return Err(Error::InvalidAlgebra(
            "exponent relations require a Jacobi-verified algebra".into(),
        ));
    }
    let mut matrix = constraint_matrix(algebra);
    matrix.rref();
    let pairs = generator_pairs(algebra.dim());
    let mut relations = Vec::new();
    for r in 0..matrix.rows() {
        let terms: Vec<((usize, usize), G)> = (0..matrix.cols())
            .filter(|&c| !matrix.get(r, c).is_zero())
            .map(|c| (pairs[c], matrix.get(r, c).clone()))
            .collect();
        if !terms.is_empty() {
            relations.push(ExponentRelation { terms });
        }
    }
    Ok(relations)
}

/// Per-generator bracket-value spans plus the list of generators lying
/// outside the derived subalgebra. Membership is a span test over ℚ(i), so
/// verdicts are invariant under generator rescaling.
#[derive(Clone, Debug)]
pub struct RSetReport {
    pub per_generator: Vec<Vec<Vec<G>>>,
    pub flagged: Vec<usize>,
}

pub fn r_sets(algebra: &LieAlgebra) -> RSetReport {
    let n = algebra.dim();
    let mut derived = RowSpace::new(n);
    let mut per_generator = Vec::with_capacity(n);
    for b in 0..n {
        let mut span = RowSpace::new(n);
        for j in 0..n {
            let coeffs = algebra.tensor().coefficients(b, j);
            span.insert(coeffs.clone());
            derived.insert(coeffs);
        }
        per_generator.push(span.basis().map(<[G]>::to_vec).collect());
    }
    let mut flagged = Vec::new();
    for g in 0..n {
        let mut unit = vec![G::zero(); n];
        unit[g] = G::one();
        if !derived.contains(&unit) {
            flagged.push(g);
        }
    }
    RSetReport { per_generator, flagged }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureTensor;
    use crate::catalog::{catalog, CATALOG_NAMES};

    fn named_pair(algebra: &LieAlgebra, a: &str, b: &str) -> (usize, usize) {
        (algebra.index_of(a).unwrap(), algebra.index_of(b).unwrap())
    }

    #[test]
    fn zero_form_is_a_cocycle() {
        let sim2 = catalog("sim2").unwrap();
        assert!(cocycle_condition(&Cocycle::zero(&sim2)).is_empty());
    }

    #[test]
    fn j3_k3_form_is_a_cocycle_but_t1_t2_is_not() {
        let sim2 = catalog("sim2").unwrap();
        let jk = Cocycle::from_entries(&sim2, &[(named_pair(&sim2, "J3", "K3"), G::one())]).unwrap();
        assert!(cocycle_condition(&jk).is_empty());
        let tt = Cocycle::from_entries(&sim2, &[(named_pair(&sim2, "T1", "T2"), G::one())]).unwrap();
        assert!(!cocycle_condition(&tt).is_empty());
    }

    #[test]
    fn coboundary_through_the_brackets() {
        let sim2 = catalog("sim2").unwrap();
        let t1 = sim2.index_of("T1").unwrap();
        let kappa = G::from_ratio(3, 7).unwrap();
        let mut coeffs = vec![G::zero(); 4];
        coeffs[t1] = kappa.clone();
        let lambda = LinearForm::new(&sim2, coeffs).unwrap();
        let xi = coboundary_from(&lambda);
        // Ξ(T1, K3) = Λ(iT1) = iκ and Ξ(T2, J3) = Λ(iT1) = iκ.
        let expected = &G::i() * &kappa;
        let (t1i, k3) = named_pair(&sim2, "T1", "K3");
        assert_eq!(xi.get(t1i, k3), expected);
        let (t2, j3) = named_pair(&sim2, "T2", "J3");
        assert_eq!(xi.get(t2, j3), expected);
        assert!(cocycle_condition(&xi).is_empty());

        assert!(coboundary_from(&LinearForm::zero(&sim2)).is_zero());

        let abelian = LieAlgebra::new(
            vec!["x".into(), "y".into()],
            StructureTensor::new(2),
        )
        .unwrap();
        let any = LinearForm::new(&abelian, vec![G::from_int(5), G::i()]).unwrap();
        assert!(coboundary_from(&any).is_zero());
    }

    #[test]
    fn coboundaries_are_cocycles_on_every_catalog_algebra() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x51a3);
        for name in CATALOG_NAMES {
            let algebra = catalog(name).unwrap();
            for _ in 0..5 {
                let coeffs: Vec<G> = (0..algebra.dim())
                    .map(|_| {
                        let re = rng.gen_range(-6i64..=6);
                        let im = rng.gen_range(-6i64..=6);
                        &G::from_int(re) + &G::int_i(im)
                    })
                    .collect();
                let lambda = LinearForm::new(&algebra, coeffs).unwrap();
                let xi = coboundary_from(&lambda);
                assert!(cocycle_condition(&xi).is_empty(), "dΛ must be a cocycle on {name}");
            }
        }
    }

    #[test]
    fn h2_dimensions_match_the_known_values() {
        let expectations = [
            ("sim2", 1),
            ("isim2", 1),
            ("lorentz-jk", 0),
            ("lorentz-t", 0),
            ("poincare31", 0),
            ("poincare11", 1),
        ];
        for (name, dim) in expectations {
            let algebra = catalog(name).unwrap();
            let report = h2(&algebra).unwrap();
            assert_eq!(report.dim_h2, dim, "dim H² for {name}");
            assert_eq!(report.dim_h2, report.dim_z2 - report.dim_b2);
        }
        let galilei = catalog("galilei").unwrap();
        assert!(h2(&galilei).unwrap().dim_h2 >= 1);
    }

    #[test]
    fn sim2_residual_is_supported_on_j3_k3() {
        let sim2 = catalog("sim2").unwrap();
        let report = h2(&sim2).unwrap();
        assert_eq!(report.residual_basis.len(), 1);
        assert_eq!(report.residual_basis[0].support(), vec![named_pair(&sim2, "J3", "K3")]);
        for (cocycle, lambda) in &report.elimination {
            assert_eq!(&coboundary_from(lambda), cocycle);
        }
    }

    #[test]
    fn eliminate_charges_reproduces_the_generator_shifts() {
        let sim2 = catalog("sim2").unwrap();
        let t1 = sim2.index_of("T1").unwrap();
        let t2 = sim2.index_of("T2").unwrap();
        let j3 = sim2.index_of("J3").unwrap();
        let k3 = sim2.index_of("K3").unwrap();
        // A generic cocycle: Ξ(T1,K3) = Ξ(T2,J3) = y, Ξ(T1,J3) = −Ξ(T2,K3) = x,
        // Ξ(J3,K3) = z.
        let (x, y, z) = (G::from_int(3), G::from_ratio(5, 2).unwrap(), G::int_i(7));
        let xi = Cocycle::from_entries(
            &sim2,
            &[
                ((t1, j3), x.clone()),
                ((t2, k3), -&x),
                ((t1, k3), y.clone()),
                ((t2, j3), y.clone()),
                ((j3, k3), z.clone()),
            ],
        )
        .unwrap();
        let (lambda, residual) = eliminate_charges(&sim2, &xi).unwrap();
        assert_eq!(residual.support(), vec![(j3, k3)]);
        assert_eq!(residual.get(j3, k3), z);
        // The shifts live on T1 and T2 with Λ(T) = Ξ(T, K3)/i, the
        // redefinition pattern that restores the standard table.
        assert_eq!(lambda.coefficients()[t1], &y / &G::i());
        assert_eq!(lambda.coefficients()[t2], &-&x / &G::i());
        assert!(lambda.coefficients()[j3].is_zero());
        assert!(lambda.coefficients()[k3].is_zero());

        // Idempotence: eliminating the residual changes nothing.
        let (again, final_residual) = eliminate_charges(&sim2, &residual).unwrap();
        assert!(again.is_zero());
        assert_eq!(final_residual, residual);

        // Coboundaries eliminate to zero.
        let lambda0 = LinearForm::new(&sim2, vec![G::from_int(2), G::i(), G::zero(), G::one()]).unwrap();
        let (_, nothing) = eliminate_charges(&sim2, &coboundary_from(&lambda0)).unwrap();
        assert!(nothing.is_zero());

        // Non-cocycles are rejected.
        let bad = Cocycle::from_entries(&sim2, &[((t1, t2), G::one())]).unwrap();
        assert_eq!(eliminate_charges(&sim2, &bad).unwrap_err(), Error::NotACocycle);
    }

    #[test]
    fn isim2_elimination_matches_the_momentum_shift_pattern() {
        let isim2 = catalog("isim2").unwrap();
        let report = h2(&isim2).unwrap();
        assert_eq!(report.dim_h2, 1);
        let (j3, k3) = named_pair(&isim2, "J3", "K3");
        assert_eq!(report.residual_basis[0].support(), vec![(j3, k3)]);

        // Build a generic cocycle as coboundary + residual direction.
        let mut coeffs = vec![G::zero(); isim2.dim()];
        for (idx, c) in coeffs.iter_mut().enumerate() {
            *c = G::from_int(idx as i64 + 1);
        }
        let lambda = LinearForm::new(&isim2, coeffs).unwrap();
        let mut xi_entries: Vec<((usize, usize), G)> = Vec::new();
        let base = coboundary_from(&lambda);
        for (pair, value) in generator_pairs(isim2.dim()).into_iter().zip(base.pair_vector()) {
            xi_entries.push((pair, value.clone()));
        }
        xi_entries.push(((j3, k3), G::from_int(9)));
        let xi = Cocycle::from_entries(&isim2, &xi_entries).unwrap();

        let (shift, residual) = eliminate_charges(&isim2, &xi).unwrap();
        assert_eq!(residual.support(), vec![(j3, k3)]);
        // Momentum shifts: each is pinned by the bracket producing it,
        // e.g. [K3, P3] = iP0 forces Λ(P0) = Ξ(K3, P3)/i and
        // [J3, P2] = −iP1 forces Λ(P1) = −Ξ(J3, P2)/i.
        let idx = |n: &str| isim2.index_of(n).unwrap();
        let i = G::i();
        assert_eq!(shift.coefficients()[idx("P0")], &xi.get(idx("K3"), idx("P3")) / &i);
        assert_eq!(shift.coefficients()[idx("P1")], &-&xi.get(idx("J3"), idx("P2")) / &i);
        assert_eq!(shift.coefficients()[idx("P2")], &xi.get(idx("J3"), idx("P1")) / &i);
        assert_eq!(shift.coefficients()[idx("P3")], &xi.get(idx("K3"), idx("P0")) / &i);
    }

    #[test]
    fn sim2_exponent_relations_match_the_derived_set() {
        let sim2 = catalog("sim2").unwrap();
        let relations = exponent_relations(&sim2).unwrap();
        assert_eq!(relations.len(), 3);
        let pairs = generator_pairs(4);
        let as_row = |rel: &ExponentRelation| -> Vec<G> {
            let mut row = vec![G::zero(); pairs.len()];
            for ((i, j), c) in &rel.terms {
                row[pairs.iter().position(|p| p == &(*i, *j)).unwrap()] = c.clone();
            }
            row
        };
        // Ξ(T1,T2) = 0; Ξ(T1,J3) + Ξ(T2,K3) = 0; Ξ(T1,K3) − Ξ(T2,J3) = 0.
        let rows: Vec<Vec<G>> = relations.iter().map(as_row).collect();
        let gi = G::from_int;
        assert_eq!(rows[0], vec![gi(1), gi(0), gi(0), gi(0), gi(0), gi(0)]);
        assert_eq!(rows[1], vec![gi(0), gi(1), gi(0), gi(0), gi(1), gi(0)]);
        assert_eq!(rows[2], vec![gi(0), gi(0), gi(1), gi(-1), gi(0), gi(0)]);
        // Ξ(J3, K3) appears in no relation.
        let jk = pairs.iter().position(|&p| p == (2, 3)).unwrap();
        for row in &rows {
            assert!(row[jk].is_zero());
        }
    }

    #[test]
    fn abelian_algebra_has_no_relations() {
        let abelian = LieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            StructureTensor::new(3),
        )
        .unwrap();
        assert!(exponent_relations(&abelian).unwrap().is_empty());
        let report = h2(&abelian).unwrap();
        assert_eq!(report.dim_z2, 3);
        assert_eq!(report.dim_b2, 0);
    }

    #[test]
    fn r_set_verdicts_follow_the_catalog() {
        let cases: [(&str, &[&str]); 5] = [
            ("poincare31", &[]),
            ("poincare11", &["K"]),
            ("galilei", &["f"]),
            ("sim2", &["J3", "K3"]),
            ("isim2", &["J3", "K3"]),
        ];
        for (name, expected) in cases {
            let algebra = catalog(name).unwrap();
            let report = r_sets(&algebra);
            let flagged: Vec<&str> =
                report.flagged.iter().map(|&g| algebra.name(g)).collect();
            assert_eq!(flagged, expected.to_vec(), "flagged set for {name}");
        }
    }

    #[test]
    fn sim2_r_set_spans_lie_inside_the_t_plane() {
        let sim2 = catalog("sim2").unwrap();
        let report = r_sets(&sim2);
        let t1 = sim2.index_of("T1").unwrap();
        let t2 = sim2.index_of("T2").unwrap();
        for span in &report.per_generator {
            for v in span {
                for (k, c) in v.iter().enumerate() {
                    assert!(c.is_zero() || k == t1 || k == t2);
                }
            }
        }
    }

    #[test]
    fn flags_are_invariant_under_generator_rescaling() {
        use crate::algebra::transform_basis;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0xf1a6);
        for name in CATALOG_NAMES {
            let algebra = catalog(name).unwrap();
            let baseline = r_sets(&algebra).flagged;
            let mut scale = Matrix::identity(algebra.dim());
            for d in 0..algebra.dim() {
                scale.set(d, d, G::from_ratio(rng.gen_range(1i64..9), rng.gen_range(1i64..5)).unwrap());
            }
            let rescaled = transform_basis(&algebra, &scale).unwrap();
            assert_eq!(r_sets(&rescaled).flagged, baseline, "rescaling must not change flags for {name}");
        }
    }

    #[test]
    fn flagged_generators_imply_an_unremovable_direction() {
        for name in CATALOG_NAMES {
            let algebra = catalog(name).unwrap();
            if !r_sets(&algebra).flagged.is_empty() {
                let report = h2(&algebra).unwrap();
                assert!(report.dim_h2 >= 1, "{name} is flagged but has trivial H²");
                assert!(!report.residual_basis[0].is_zero());
            }
        }
    }

    #[test]
    fn h2_dimension_is_basis_independent() {
        use crate::algebra::transform_basis;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0xc0c1);
        for name in CATALOG_NAMES {
            let algebra = catalog(name).unwrap();
            let n = algebra.dim();
            let baseline = h2(&algebra).unwrap().dim_h2;
            for _ in 0..2 {
                // A random product of shears and a diagonal rescaling:
                // invertible by construction and keeps the conjugated
                // constants small enough for exact elimination.
                let mut map = Matrix::identity(n);
                for _ in 0..n {
                    let r = rng.gen_range(0..n);
                    let c = rng.gen_range(0..n);
                    if r != c {
                        let mut shear = Matrix::identity(n);
                        shear.set(r, c, G::from_int(rng.gen_range(-2i64..=2)));
                        map = map.mul(&shear).unwrap();
                    }
                }
                let mut diag = Matrix::identity(n);
                for d in 0..n {
                    diag.set(d, d, G::from_ratio(rng.gen_range(1i64..4), rng.gen_range(1i64..3)).unwrap());
                }
                let map = map.mul(&diag).unwrap();
                assert!(map.is_invertible());
                let conjugated = transform_basis(&algebra, &map).unwrap();
                assert!(conjugated.jacobi_verified());
                assert_eq!(h2(&conjugated).unwrap().dim_h2, baseline, "dim H² must be basis-free for {name}");
            }
        }
    }
}
