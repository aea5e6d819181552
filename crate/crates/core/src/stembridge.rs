//! The coefficients E^θ_{λ/μ}(y) of F_{λ/μ}(x, y) = Σ_θ E^θ_{λ/μ}(y) s_θ(x),
//! where F_{λ/μ}(x, y) = Σ_ν s_ν(y) Imm_ν H(λ, μ)(x).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    enumerate_compositions, meld_raw, partitions_of, refines, Composition, Partition, SkewShape,
};
use crate::error::{Error, Result};
use crate::matrices::jt_matrix;
use crate::poly::SparsePolynomial;
use crate::symmetric::{kostka, p_poly, schur_expand, schur_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EMethod {
    Definition,
    BorderFormula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EPolynomialTable {
    pub shape: SkewShape,
    pub theta: Partition,
    pub value: SparsePolynomial,
    pub method: EMethod,
}

/// E^θ for every θ ⊢ |λ/μ| with a nonzero coefficient, from the immanant expansion.
pub fn e_theta_all(
    shape: &SkewShape,
    y_vars: usize,
    x_vars: usize,
) -> Result<BTreeMap<Partition, SparsePolynomial>> {
    let size = shape.size();
    if x_vars < size {
        return Err(Error::InsufficientVariables {
            nvars: x_vars,
            degree: size,
        });
    }
    let h = jt_matrix(shape, x_vars);
    let imms: Vec<(Partition, SparsePolynomial)> = h.all_immanants().into_iter().collect();
    let expanded: Vec<(Partition, BTreeMap<Partition, BigInt>)> = imms
        .into_par_iter()
        .map(|(nu, imm)| Ok((nu, schur_expand(&imm)?)))
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<Partition, SparsePolynomial> = BTreeMap::new();
    for (nu, coeffs) in expanded {
        let s_nu = schur_poly(&nu, y_vars);
        for (theta, a) in coeffs {
            out.entry(theta)
                .or_insert_with(|| SparsePolynomial::zero(y_vars))
                .add_scaled(&s_nu, &a);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Σ_{ν ⊢ n} s_ν(y) · [s_θ] Imm_ν H(λ, μ)(x).
pub fn e_theta_definition(
    shape: &SkewShape,
    theta: &Partition,
    y_vars: usize,
    x_vars: usize,
) -> Result<SparsePolynomial> {
    if theta.size() != shape.size() {
        return Err(Error::SizeMismatch {
            left: theta.size(),
            right: shape.size(),
        });
    }
    Ok(e_theta_all(shape, y_vars, x_vars)?
        .remove(theta)
        .unwrap_or_else(|| SparsePolynomial::zero(y_vars)))
}

/// Coefficients K_{θ, γ|α} of p_α over compositions α of n, γ the row lengths.
pub fn border_p_expansion(
    shape: &SkewShape,
    theta: &Partition,
) -> Result<BTreeMap<Composition, u64>> {
    if !shape.is_border_strip() {
        return Err(Error::NotBorderStrip);
    }
    if theta.size() != shape.size() {
        return Err(Error::SizeMismatch {
            left: theta.size(),
            right: shape.size(),
        });
    }
    let gamma = shape.row_lengths();
    let mut out = BTreeMap::new();
    for alpha in enumerate_compositions(gamma.len()) {
        let k = kostka(theta, &meld_raw(&gamma, &alpha)?)?;
        if k != 0 {
            out.insert(alpha, k);
        }
    }
    Ok(out)
}

/// Σ_α K_{θ, γ|α} p_{α₁} ⋯ p_{α_m}(y) for a border strip.
pub fn e_theta_border_formula(
    shape: &SkewShape,
    theta: &Partition,
    y_vars: usize,
) -> Result<SparsePolynomial> {
    let mut out = SparsePolynomial::zero(y_vars);
    for (alpha, k) in border_p_expansion(shape, theta)? {
        let rho = Partition::from_unsorted(alpha.parts().iter().copied());
        out.add_scaled(&p_poly(&rho, y_vars), &BigInt::from(k));
    }
    Ok(out)
}

pub fn e_polynomial(
    shape: &SkewShape,
    theta: &Partition,
    y_vars: usize,
    method: EMethod,
) -> Result<EPolynomialTable> {
    let value = match method {
        EMethod::Definition => e_theta_definition(shape, theta, y_vars, shape.size())?,
        EMethod::BorderFormula => e_theta_border_formula(shape, theta, y_vars)?,
    };
    Ok(EPolynomialTable {
        shape: shape.clone(),
        theta: theta.clone(),
        value,
        method,
    })
}

/// K_{θ, γ|α} ≠ 0 ⇒ K_{θ, γ|β} ≠ 0 for β refining α.
pub fn refinement_kostka_check(
    theta: &Partition,
    gamma: &Composition,
    alpha: &Composition,
    beta: &Composition,
) -> Result<bool> {
    if !refines(beta, alpha)? {
        return Err(Error::NotARefinement {
            beta: beta.parts().to_vec(),
            alpha: alpha.parts().to_vec(),
        });
    }
    if theta.size() != gamma.size() {
        return Err(Error::SizeMismatch {
            left: theta.size(),
            right: gamma.size(),
        });
    }
    let coarse = kostka(theta, &meld_raw(gamma.parts(), alpha)?)?;
    if coarse == 0 {
        return Ok(true);
    }
    Ok(kostka(theta, &meld_raw(gamma.parts(), beta)?)? != 0)
}

/// A failed instance (θ, γ, α, β).
pub type RefinementFailure = (Partition, Composition, Composition, Composition);

/// Every refinement check with |θ| = |γ| = n, α, β compositions of ℓ(γ).
/// Returns (instances checked, failures).
pub fn refinement_kostka_exhaustive(n: usize) -> Result<(usize, Vec<RefinementFailure>)> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for gamma in enumerate_compositions(n) {
        let comps = enumerate_compositions(gamma.len());
        for theta in partitions_of(n) {
            for alpha in &comps {
                for beta in &comps {
                    if !refines(beta, alpha)? {
                        continue;
                    }
                    checked += 1;
                    if !refinement_kostka_check(&theta, &gamma, alpha, beta)? {
                        failures.push((theta.clone(), gamma.clone(), alpha.clone(), beta.clone()));
                    }
                }
            }
        }
    }
    Ok((checked, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::border_strips;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::from_parts(o, i).unwrap()
    }

    #[test]
    fn definition_examples() {
        let shape = sk(&[2, 1], &[]);
        let two = BigInt::from(2);
        assert_eq!(
            e_theta_definition(&shape, &p(&[3]), 2, 3).unwrap(),
            schur_poly(&p(&[2]), 2).scale(&two)
        );
        let want = schur_poly(&p(&[2]), 2)
            .add(&schur_poly(&p(&[1, 1]), 2))
            .unwrap();
        assert_eq!(e_theta_definition(&shape, &p(&[2, 1]), 2, 3).unwrap(), want);
        assert!(e_theta_definition(&shape, &p(&[1, 1, 1]), 2, 3)
            .unwrap()
            .is_zero());
        assert!(matches!(
            e_theta_definition(&shape, &p(&[3]), 2, 2),
            Err(Error::InsufficientVariables { .. })
        ));
    }

    #[test]
    fn border_formula_examples() {
        let shape = sk(&[2, 1], &[]);
        let p2 = p_poly(&p(&[2]), 2);
        let p11 = p_poly(&p(&[1, 1]), 2);
        assert_eq!(
            e_theta_border_formula(&shape, &p(&[3]), 2).unwrap(),
            p2.add(&p11).unwrap()
        );
        assert_eq!(e_theta_border_formula(&shape, &p(&[2, 1]), 2).unwrap(), p11);
        assert!(e_theta_border_formula(&shape, &p(&[1, 1, 1]), 2)
            .unwrap()
            .is_zero());
        assert_eq!(
            e_theta_border_formula(&sk(&[2, 2], &[]), &p(&[4]), 2),
            Err(Error::NotBorderStrip)
        );
    }

    #[test]
    fn methods_agree_on_border_strips() {
        for shape in (1..=4).flat_map(border_strips) {
            let all = e_theta_all(&shape, 2, shape.size()).unwrap();
            for theta in partitions_of(shape.size()) {
                let def = all
                    .get(&theta)
                    .cloned()
                    .unwrap_or_else(|| SparsePolynomial::zero(2));
                assert_eq!(
                    def,
                    e_theta_border_formula(&shape, &theta, 2).unwrap(),
                    "{shape} {theta}"
                );
            }
        }
    }

    #[test]
    fn finest_meld_is_present() {
        for shape in (1..=6).flat_map(border_strips) {
            for theta in partitions_of(shape.size()) {
                let exp = border_p_expansion(&shape, &theta).unwrap();
                if !exp.is_empty() {
                    assert!(
                        exp.contains_key(&Composition::ones(shape.rows())),
                        "{shape} {theta}"
                    );
                }
            }
        }
    }

    #[test]
    fn refinement_examples() {
        let gamma = c(&[2, 1]);
        assert!(refinement_kostka_check(&p(&[3]), &gamma, &c(&[2]), &c(&[1, 1])).unwrap());
        assert!(refinement_kostka_check(&p(&[2, 1]), &gamma, &c(&[1, 1]), &c(&[1, 1])).unwrap());
        assert!(refinement_kostka_check(&p(&[1, 1, 1]), &gamma, &c(&[2]), &c(&[1, 1])).unwrap());
        assert!(matches!(
            refinement_kostka_check(&p(&[3]), &gamma, &c(&[1, 1]), &c(&[2])),
            Err(Error::NotARefinement { .. })
        ));
    }

    #[test]
    fn refinement_exhaustive_small() {
        for n in 1..=5 {
            let (checked, failures) = refinement_kostka_exhaustive(n).unwrap();
            assert!(checked > 0);
            assert!(failures.is_empty(), "{failures:?}");
        }
    }
}
