//! Built-in algebra catalog.
//!
//! Structure constants are stored exactly as the source conventions write
//! them: the Lorentz/sim(2) family carries an explicit factor of i in every
//! nonzero bracket, while the Galilei and 1+1 Poincaré tables use plain real
//! constants. No normalization is applied — Jacobi checks, R-sets and
//! cohomology ranks are all insensitive to the i-rescaling, and literal
//! constants make table comparisons exact.

use crate::algebra::{LieAlgebra, StructureTensor};
use crate::error::Error;
use crate::scalar::GaussianRational;

type G = GaussianRational;

pub const CATALOG_NAMES: [&str; 7] =
    ["lorentz-jk", "lorentz-t", "sim2", "isim2", "poincare31", "poincare11", "galilei"];

/// Returns a catalog algebra by name. Every entry is Jacobi-verified at
/// construction; a failure here is a bug, not an input problem.
pub fn catalog(name: &str) -> Result<LieAlgebra, Error> {
    let algebra = match name {
        "lorentz-jk" => lorentz_jk(),
        "lorentz-t" => lorentz_t(),
        "sim2" => sim2(),
        "isim2" => isim2(),
        "poincare31" => poincare31(),
        "poincare11" => poincare11(),
        "galilei" => galilei(),
        other => return Err(Error::UnknownAlgebra(other.to_string())),
    }?;
    assert!(algebra.jacobi_verified(), "catalog algebra `{name}` fails the Jacobi identity");
    Ok(algebra)
}

/// Levi-Civita symbol on {1, 2, 3}.
pub fn eps3(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1,
        _ => 0,
    }
}

struct Builder {
    names: Vec<String>,
    tensor: StructureTensor,
}

impl Builder {
    fn new(names: &[&str]) -> Self {
        Builder {
            names: names.iter().map(|s| s.to_string()).collect(),
            tensor: StructureTensor::new(names.len()),
        }
    }

    fn index(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no generator {name}"))
    }

    /// Records `[a, b] = Σ coeff·gen`, canonicalizing to the stored `i < j`
    /// order with the sign flip antisymmetry demands.
    fn bracket<S: AsRef<str>>(
        &mut self,
        a: &str,
        b: &str,
        terms: impl IntoIterator<Item = (G, S)>,
    ) -> Result<(), Error> {
        let (ia, ib) = (self.index(a), self.index(b));
        let mut coeffs = vec![G::zero(); self.names.len()];
        for (scalar, gen) in terms {
            let k = self.index(gen.as_ref());
            coeffs[k] = &coeffs[k] + &scalar;
        }
        if ia < ib {
            self.tensor.set(ia, ib, coeffs)
        } else {
            self.tensor.set(ib, ia, coeffs.iter().map(|c| -c).collect())
        }
    }

    fn finish(self) -> Result<LieAlgebra, Error> {
        LieAlgebra::new(self.names, self.tensor)
    }
}

/// Lorentz algebra in the rotation/boost basis (J1, J2, J3, K1, K2, K3):
/// [J_a, J_b] = iε_ab^c J_c, [K_a, K_b] = −iε_ab^c J_c, [K_a, J_b] = iε_ab^c K_c.
fn lorentz_jk() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["J1", "J2", "J3", "K1", "K2", "K3"]);
    let eps_terms = |x: usize, y: usize, target: &str, sign: i64| -> Vec<(G, String)> {
        (1..=3)
            .filter(|&c| eps3(x, y, c) != 0)
            .map(|c| (G::int_i(sign * eps3(x, y, c)), format!("{target}{c}")))
            .collect()
    };
    for x in 1..=3usize {
        for y in (x + 1)..=3 {
            b.bracket(&format!("J{x}"), &format!("J{y}"), eps_terms(x, y, "J", 1))?;
            b.bracket(&format!("K{x}"), &format!("K{y}"), eps_terms(x, y, "J", -1))?;
        }
        for y in 1..=3 {
            let terms = eps_terms(x, y, "K", 1);
            if !terms.is_empty() {
                b.bracket(&format!("J{x}"), &format!("K{y}"), terms)?;
            }
        }
    }
    b.finish()
}

/// The transformed Lorentz basis (T1, T2, J3, K3, T~1, T~2) with
/// T1 = K1 + J2, T2 = K2 − J1, T~1 = K1 − J2, T~2 = K2 + J1.
fn lorentz_t() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["T1", "T2", "J3", "K3", "T~1", "T~2"]);
    let i = || G::i();
    let ni = || G::int_i(-1);
    b.bracket("T1", "T~1", [(G::int_i(-2), "K3")])?;
    b.bracket("T1", "T~2", [(G::int_i(-2), "J3")])?;
    b.bracket("T2", "T~1", [(G::int_i(2), "J3")])?;
    b.bracket("T2", "T~2", [(G::int_i(-2), "K3")])?;
    b.bracket("T1", "K3", [(i(), "T1")])?;
    b.bracket("T2", "K3", [(i(), "T2")])?;
    b.bracket("T1", "J3", [(ni(), "T2")])?;
    b.bracket("T2", "J3", [(i(), "T1")])?;
    // The T~ sector carries the opposite boost weight: [K1 ± J2, K3]
    // = iJ2 ± iK1 = ±i(K1 ± J2), so [T~1, K3] = −iT~1 (and likewise T~2).
    // With +i here the table would not close under Jacobi.
    b.bracket("T~1", "K3", [(ni(), "T~1")])?;
    b.bracket("T~2", "K3", [(ni(), "T~2")])?;
    b.bracket("T~1", "J3", [(ni(), "T~2")])?;
    b.bracket("T~2", "J3", [(i(), "T~1")])?;
    b.finish()
}

fn sim2() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["T1", "T2", "J3", "K3"]);
    b.bracket("T1", "K3", [(G::i(), "T1")])?;
    b.bracket("T2", "K3", [(G::i(), "T2")])?;
    b.bracket("T1", "J3", [(G::int_i(-1), "T2")])?;
    b.bracket("T2", "J3", [(G::i(), "T1")])?;
    b.finish()
}

/// sim(2) extended by spacetime translations, with the central charge set to
/// zero.
fn isim2() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["T1", "T2", "J3", "K3", "P0", "P1", "P2", "P3"]);
    let i = || G::i();
    let ni = || G::int_i(-1);
    b.bracket("T1", "K3", [(i(), "T1")])?;
    b.bracket("T2", "K3", [(i(), "T2")])?;
    b.bracket("T1", "J3", [(ni(), "T2")])?;
    b.bracket("T2", "J3", [(i(), "T1")])?;
    b.bracket("T1", "P0", [(i(), "P1")])?;
    b.bracket("T1", "P1", [(i(), "P0"), (ni(), "P3")])?;
    b.bracket("T1", "P3", [(i(), "P1")])?;
    b.bracket("T2", "P0", [(i(), "P2")])?;
    b.bracket("T2", "P2", [(i(), "P0"), (ni(), "P3")])?;
    b.bracket("T2", "P3", [(i(), "P2")])?;
    b.bracket("K3", "P0", [(i(), "P3")])?;
    b.bracket("K3", "P3", [(i(), "P0")])?;
    b.bracket("J3", "P1", [(i(), "P2")])?;
    b.bracket("J3", "P2", [(ni(), "P1")])?;
    b.finish()
}

/// Poincaré algebra in 3+1 dimensions, ordered (J, K, P, H).
fn poincare31() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["J1", "J2", "J3", "K1", "K2", "K3", "P1", "P2", "P3", "H"]);
    let eps_terms = |x: usize, y: usize, target: &str, sign: i64| -> Vec<(G, String)> {
        (1..=3)
            .filter(|&c| eps3(x, y, c) != 0)
            .map(|c| (G::int_i(sign * eps3(x, y, c)), format!("{target}{c}")))
            .collect()
    };
    for x in 1..=3usize {
        for y in (x + 1)..=3 {
            b.bracket(&format!("J{x}"), &format!("J{y}"), eps_terms(x, y, "J", 1))?;
            b.bracket(&format!("K{x}"), &format!("K{y}"), eps_terms(x, y, "J", -1))?;
        }
        for y in 1..=3 {
            let jk = eps_terms(x, y, "K", 1);
            if !jk.is_empty() {
                b.bracket(&format!("J{x}"), &format!("K{y}"), jk)?;
            }
            let jp = eps_terms(x, y, "P", 1);
            if !jp.is_empty() {
                b.bracket(&format!("J{x}"), &format!("P{y}"), jp)?;
            }
        }
        b.bracket(&format!("K{x}"), &format!("P{x}"), [(G::i(), "H".to_string())])?;
        b.bracket(&format!("K{x}"), "H", [(G::i(), format!("P{x}"))])?;
    }
    b.finish()
}

/// Poincaré algebra in 1+1 dimensions: [K, H] = P, [K, P] = H, [H, P] = 0.
/// Real constants, exactly as conventionally written.
fn poincare11() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["K", "H", "P"]);
    b.bracket("K", "H", [(G::one(), "P")])?;
    b.bracket("K", "P", [(G::one(), "H")])?;
    b.finish()
}

/// Galilei algebra with rotations a_ij, translations b, boosts d and time
/// translation f. Real constants.
fn galilei() -> Result<LieAlgebra, Error> {
    let mut b = Builder::new(&["a12", "a13", "a23", "b1", "b2", "b3", "d1", "d2", "d3", "f"]);
    let rot_pairs = [(1usize, 2usize), (1, 3), (2, 3)];
    let a_name = |i: usize, j: usize| format!("a{i}{j}");
    // Signed lookup implementing a_ji = −a_ij and a_ii = 0.
    let a_term = |i: usize, j: usize, scale: i64| -> Option<(G, String)> {
        if i == j || scale == 0 {
            None
        } else if i < j {
            Some((G::from_int(scale), a_name(i, j)))
        } else {
            Some((G::from_int(-scale), a_name(j, i)))
        }
    };
    let delta = |x: usize, y: usize| if x == y { 1i64 } else { 0 };
    for (n, &(i, j)) in rot_pairs.iter().enumerate() {
        // [a_ij, a_kl] = δ_jk a_il − δ_ik a_jl + δ_il a_jk − δ_jl a_ik
        for &(k, l) in rot_pairs.iter().skip(n + 1) {
            let terms: Vec<(G, String)> = [
                a_term(i, l, delta(j, k)),
                a_term(j, l, -delta(i, k)),
                a_term(j, k, delta(i, l)),
                a_term(i, k, -delta(j, l)),
            ]
            .into_iter()
            .flatten()
            .collect();
            b.bracket(&a_name(i, j), &a_name(k, l), terms)?;
        }
        // [a_ij, v_k] = δ_jk v_i − δ_ik v_j for the b and d vectors.
        for vector in ["b", "d"] {
            for k in 1..=3 {
                let mut terms: Vec<(G, String)> = Vec::new();
                if delta(j, k) != 0 {
                    terms.push((G::one(), format!("{vector}{i}")));
                }
                if delta(i, k) != 0 {
                    terms.push((G::from_int(-1), format!("{vector}{j}")));
                }
                if !terms.is_empty() {
                    b.bracket(&a_name(i, j), &format!("{vector}{k}"), terms)?;
                }
            }
        }
    }
    for k in 1..=3 {
        b.bracket(&format!("d{k}"), "f", [(G::one(), format!("b{k}"))])?;
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_jacobi;

    #[test]
    fn every_catalog_entry_is_jacobi_verified() {
        for name in CATALOG_NAMES {
            let algebra = catalog(name).unwrap();
            let report = check_jacobi(&algebra);
            assert!(report.passed(), "{name} violates Jacobi: {:?}", report.violations());
            assert!(algebra.jacobi_verified());
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert_eq!(catalog("su5"), Err(Error::UnknownAlgebra("su5".into())));
    }

    #[test]
    fn spot_checked_brackets() {
        let sim2 = catalog("sim2").unwrap();
        let t2 = sim2.index_of("T2").unwrap();
        let j3 = sim2.index_of("J3").unwrap();
        let t1 = sim2.index_of("T1").unwrap();
        let coeffs = sim2.tensor().coefficients(t2, j3);
        assert_eq!(coeffs[t1], G::i());

        let p11 = catalog("poincare11").unwrap();
        let h = p11.index_of("H").unwrap();
        let p = p11.index_of("P").unwrap();
        assert!(p11.tensor().coefficients(h, p).iter().all(G::is_zero));

        let gal = catalog("galilei").unwrap();
        let d1 = gal.index_of("d1").unwrap();
        let b2 = gal.index_of("b2").unwrap();
        assert!(gal.tensor().coefficients(d1, b2).iter().all(G::is_zero));
        let f = gal.index_of("f").unwrap();
        let b1 = gal.index_of("b1").unwrap();
        assert_eq!(gal.tensor().coefficients(d1, f)[b1], G::one());
    }

    #[test]
    fn real_convention_tables_have_no_imaginary_parts() {
        for name in ["poincare11", "galilei"] {
            let algebra = catalog(name).unwrap();
            for (_, coeffs) in algebra.tensor().pairs() {
                for c in coeffs {
                    assert!(c.im.is_zero(), "{name} should use real constants");
                }
            }
        }
    }

    #[test]
    fn lorentz_t_matches_automorphism_of_lorentz_jk() {
        use crate::algebra::transform_basis;
        use crate::linalg::Matrix;
        let lorentz = catalog("lorentz-jk").unwrap();
        let a = Matrix::from_int_rows(&[
            &[0, 1, 0, 1, 0, 0],
            &[-1, 0, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, -1, 0, 1, 0, 0],
            &[1, 0, 0, 0, 1, 0],
        ]);
        let transformed = transform_basis(&lorentz, &a).unwrap();
        assert_eq!(transformed.tensor(), catalog("lorentz-t").unwrap().tensor());
    }
}
