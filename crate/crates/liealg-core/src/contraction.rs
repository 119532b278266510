//! Singular basis-family limits in normal form.
//!
//! The basis family is block-structured: the first `r` generators are kept
//! (up to an arbitrary ε-linear mix `v` among themselves), the remaining ones
//! are scaled by ε. Two independent routes compute the ε → 0 limit:
//!
//! - the *formula* route copies structure constants sector-by-sector
//!   (first/first kept into the first sector, first/second kept into the
//!   second, second/second zeroed);
//! - the *symbolic* route expands every bracket of the transformed generators
//!   as a Laurent series in ε and reads off the ε⁰ term, failing when a 1/ε
//!   term survives.
//!
//! Each public entry point runs both routes and records whether they agree.

use std::collections::BTreeMap;

use crate::algebra::{LieAlgebra, StructureTensor};
use crate::error::{Error, ViolatingTriples};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// The split into a kept first sector of size `r` and an ε-scaled second
/// sector, plus the optional `r×r` mixing matrix `v` (zero when absent).
/// Sector membership is positional: reorder generators with
/// [`crate::algebra::transform_basis`] first if needed.
#[derive(Clone, Debug)]
pub struct SectorSplit {
    r: usize,
    v: Option<Matrix>,
}

impl SectorSplit {
    pub fn new(r: usize) -> Self {
        SectorSplit { r, v: None }
    }

    pub fn with_v(r: usize, v: Matrix) -> Self {
        SectorSplit { r, v: Some(v) }
    }

    pub fn first_sector_size(&self) -> usize {
        self.r
    }

    fn validate(&self, dim: usize) -> Result<(), Error> {
        if self.r == 0 || self.r >= dim {
            return Err(Error::InvalidSplit { r: self.r, dim });
        }
        if let Some(v) = &self.v {
            if v.rows() != self.r || v.cols() != self.r {
                return Err(Error::DimensionMismatch { expected: self.r, got: v.rows().max(v.cols()) });
            }
        }
        Ok(())
    }

    fn v_entry(&self, row: usize, col: usize) -> G {
        match &self.v {
            Some(v) => v.get(row, col).clone(),
            None => G::zero(),
        }
    }
}

/// A finite Laurent expansion in ε with vector coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EpsilonSeries {
    terms: BTreeMap<i64, Vec<G>>,
}

impl EpsilonSeries {
    pub fn new() -> Self {
        EpsilonSeries::default()
    }

    pub fn add_term(&mut self, power: i64, coeffs: Vec<G>) {
        if coeffs.iter().all(G::is_zero) {
            return;
        }
        match self.terms.get_mut(&power) {
            None => {
                self.terms.insert(power, coeffs);
            }
            Some(existing) => {
                for (e, c) in existing.iter_mut().zip(&coeffs) {
                    *e = &*e + c;
                }
                if existing.iter().all(G::is_zero) {
                    self.terms.remove(&power);
                }
            }
        }
    }

    pub fn lowest_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coefficient(&self, power: i64, width: usize) -> Vec<G> {
        self.terms.get(&power).cloned().unwrap_or_else(|| vec![G::zero(); width])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Vec<G>)> {
        self.terms.iter().map(|(&p, v)| (p, v))
    }

    fn truncate_above(&mut self, max_power: i64) {
        self.terms.retain(|&p, _| p <= max_power);
    }
}

/// Result of a successful contraction. `condition_residuals` is empty here by
/// construction — failures surface as [`Error::NotContractible`] instead —
/// and `route_agreement` records that the formula and symbolic routes gave
/// bit-identical constants.
#[derive(Clone, Debug)]
pub struct ContractionReport {
    pub contracted: LieAlgebra,
    pub condition_residuals: Vec<(usize, usize, usize)>,
    pub route_agreement: bool,
}

/// Scans for first-sector pairs whose bracket has a second-sector component,
/// i.e. violations of the convergence condition. Empty means contractible.
pub fn check_contractible(
    algebra: &LieAlgebra,
    split: &SectorSplit,
) -> Result<Vec<(usize, usize, usize)>, Error> {
    split.validate(algebra.dim())?;
    let r = split.first_sector_size();
    let mut violations = Vec::new();
    for ((i, j), coeffs) in algebra.tensor().pairs() {
        if j >= r {
            continue;
        }
        for (k, c) in coeffs.iter().enumerate().skip(r) {
            if !c.is_zero() {
                violations.push((i, j, k));
            }
        }
    }
    Ok(violations)
}

fn formula_tensor(algebra: &LieAlgebra, r: usize) -> StructureTensor {
    let n = algebra.dim();
    let mut tensor = StructureTensor::new(n);
    for ((i, j), coeffs) in algebra.tensor().pairs() {
        if j < r {
            // first/first: keep first-sector components only.
            let kept: Vec<G> = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k < r { c.clone() } else { G::zero() })
                .collect();
            tensor.set(i, j, kept).expect("copying a valid pair");
        } else if i < r {
            // first/second: keep second-sector components only.
            let kept: Vec<G> = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k >= r { c.clone() } else { G::zero() })
                .collect();
            tensor.set(i, j, kept).expect("copying a valid pair");
        }
        // second/second: contracted to zero.
    }
    tensor
}

/// The transformed generators as Laurent series over the original basis.
fn transformed_generators(algebra: &LieAlgebra, split: &SectorSplit) -> Vec<EpsilonSeries> {
    let n = algebra.dim();
    let r = split.first_sector_size();
    (0..n)
        .map(|a| {
            let mut series = EpsilonSeries::new();
            let mut unit = vec![G::zero(); n];
            unit[a] = G::one();
            if a < r {
                series.add_term(0, unit);
                let mix: Vec<G> = (0..n)
                    .map(|c| if c < r { split.v_entry(a, c) } else { G::zero() })
                    .collect();
                series.add_term(1, mix);
            } else {
                series.add_term(1, unit);
            }
            series
        })
        .collect()
}

fn series_bracket(algebra: &LieAlgebra, a: &EpsilonSeries, b: &EpsilonSeries) -> EpsilonSeries {
    let mut out = EpsilonSeries::new();
    for (p, ap) in a.terms() {
        for (q, bq) in b.terms() {
            out.add_term(p + q, algebra.bracket_coeffs(ap, bq));
        }
    }
    out
}

/// Rewrites an X-basis series in the transformed basis via the inverse
/// relations: second-sector coordinates pick up 1/ε, first-sector ones go
/// through (1 + εv)⁻¹ ≈ 1 − εv. Terms above ε¹ are dropped; they cannot
/// influence the limit.
fn to_transformed_basis(series: &EpsilonSeries, split: &SectorSplit, n: usize) -> EpsilonSeries {
    let r = split.first_sector_size();
    let mut out = EpsilonSeries::new();
    for (p, coeffs) in series.terms() {
        let mut first = vec![G::zero(); n];
        let mut second = vec![G::zero(); n];
        for (k, c) in coeffs.iter().enumerate() {
            if k < r {
                first[k] = c.clone();
            } else {
                second[k] = c.clone();
            }
        }
        out.add_term(p - 1, second);
        if first.iter().all(G::is_zero) {
            continue;
        }
        out.add_term(p, first.clone());
        let mut corrected = vec![G::zero(); n];
        for mu in 0..r {
            if first[mu].is_zero() {
                continue;
            }
            for nu in 0..r {
                let vmn = split.v_entry(mu, nu);
                if !vmn.is_zero() {
                    corrected[nu] = &corrected[nu] - &(&first[mu] * &vmn);
                }
            }
        }
        out.add_term(p + 1, corrected);
    }
    out.truncate_above(1);
    out
}

fn symbolic_tensor(
    algebra: &LieAlgebra,
    split: &SectorSplit,
) -> Result<StructureTensor, Vec<(usize, usize, usize)>> {
    let n = algebra.dim();
    let generators = transformed_generators(algebra, split);
    let mut tensor = StructureTensor::new(n);
    let mut violations = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let in_x = series_bracket(algebra, &generators[a], &generators[b]);
            let in_y = to_transformed_basis(&in_x, split, n);
            for (power, coeffs) in in_y.terms() {
                if power >= 0 {
                    continue;
                }
                for (k, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        violations.push((a, b, k));
                    }
                }
            }
            if violations.is_empty() {
                tensor
                    .set(a, b, in_y.coefficient(0, n))
                    .expect("limit coefficients have full width");
            }
        }
    }
    if violations.is_empty() {
        Ok(tensor)
    } else {
        violations.sort_unstable();
        violations.dedup();
        Err(violations)
    }
}

fn contract(
    algebra: &LieAlgebra,
    split: &SectorSplit,
    use_formula_result: bool,
) -> Result<ContractionReport, Error> {
    split.validate(algebra.dim())?;
    let scan = check_contractible(algebra, split)?;
    let symbolic = symbolic_tensor(algebra, split);
    match symbolic {
        Err(triples) => {
            debug_assert_eq!(triples, scan, "routes must reject identically");
            Err(Error::NotContractible(ViolatingTriples(triples)))
        }
        Ok(_) if !scan.is_empty() => {
            // The direct scan found violations the series missed; impossible
            // by construction, but keep the verdicts tied together.
            Err(Error::NotContractible(ViolatingTriples(scan)))
        }
        Ok(symbolic_t) => {
            let formula_t = formula_tensor(algebra, split.first_sector_size());
            let route_agreement = symbolic_t == formula_t;
            let tensor = if use_formula_result { formula_t } else { symbolic_t };
            let contracted = LieAlgebra::new(algebra.names().to_vec(), tensor)?;
            Ok(ContractionReport { contracted, condition_residuals: scan, route_agreement })
        }
    }
}

/// Contracts via the sector-copy formulas, cross-checking the symbolic route.
pub fn contract_formula(algebra: &LieAlgebra, split: &SectorSplit) -> Result<ContractionReport, Error> {
    contract(algebra, split, true)
}

/// Contracts via the ε-Laurent expansion, cross-checking the formula route.
/// Rejection (a surviving 1/ε term) coincides exactly with
/// [`check_contractible`]'s verdict.
pub fn contract_symbolic(algebra: &LieAlgebra, split: &SectorSplit) -> Result<ContractionReport, Error> {
    contract(algebra, split, false)
}

/// Whether a set of generator indices spans an ideal, and whether that span
/// is abelian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCheck {
    pub is_ideal: bool,
    pub is_abelian: bool,
}

/// Tests closure of `span(subset)` under bracketing with every generator.
/// Because the subset is a set of coordinate directions, span membership is
/// exactly support inclusion.
pub fn verify_ideal(algebra: &LieAlgebra, subset: &[usize]) -> Result<IdealCheck, Error> {
    let n = algebra.dim();
    let mut member = vec![false; n];
    for &s in subset {
        if s >= n {
            return Err(Error::GeneratorIndex(s));
        }
        member[s] = true;
    }
    let mut is_ideal = true;
    let mut is_abelian = true;
    for &s in subset {
        for g in 0..n {
            let coeffs = algebra.tensor().coefficients(s, g);
            let stays_inside = coeffs.iter().enumerate().all(|(k, c)| c.is_zero() || member[k]);
            if !stays_inside {
                is_ideal = false;
            }
            if member[g] && coeffs.iter().any(|c| !c.is_zero()) {
                is_abelian = false;
            }
        }
    }
    Ok(IdealCheck { is_ideal, is_abelian })
}

/// Structure constants of the quotient by the ideal spanned by the given
/// generators, expressed in the complementary generator basis (names kept).
pub fn quotient_algebra(algebra: &LieAlgebra, ideal_subset: &[usize]) -> Result<LieAlgebra, Error> {
    if ideal_subset.is_empty() {
        return Ok(algebra.clone());
    }
    let check = verify_ideal(algebra, ideal_subset)?;
    if !check.is_ideal {
        return Err(Error::NotAnIdeal);
    }
    let n = algebra.dim();
    let complement: Vec<usize> = (0..n).filter(|k| !ideal_subset.contains(k)).collect();
    if complement.is_empty() {
        return Err(Error::InvalidAlgebra("quotient by the whole algebra is empty".into()));
    }
    let mut tensor = StructureTensor::new(complement.len());
    for (qi, &i) in complement.iter().enumerate() {
        for (qj, &j) in complement.iter().enumerate().skip(qi + 1) {
            let full = algebra.tensor().coefficients(i, j);
            let projected: Vec<G> = complement.iter().map(|&k| full[k].clone()).collect();
            tensor.set(qi, qj, projected)?;
        }
    }
    let names = complement.iter().map(|&k| algebra.name(k).to_string()).collect();
    LieAlgebra::new(names, tensor)
}
