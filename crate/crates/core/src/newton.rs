//! Supports, permutahedra, Newton polytopes and the SNP property.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{prefix_dominated, Partition};
use crate::error::{Error, Result};
use crate::lp;
use crate::poly::{ExponentVector, SparsePolynomial};
use crate::symmetric::{exponents_of_degree, orbit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SnpMethod {
    FastPermutahedron,
    GeneralHull,
}

/// Verdict of comparing a support with the lattice points of its Newton polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnpReport {
    pub degree: usize,
    pub nvars: usize,
    pub support_size: usize,
    pub lattice_point_count: usize,
    pub missing_points: Vec<ExponentVector>,
    pub is_snp: bool,
    pub dominance_max: Vec<Partition>,
    pub is_m_convex: bool,
    pub method: SnpMethod,
}

/// The λ-permutahedron, conv of all rearrangements of λ padded to `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutahedron {
    lambda: Partition,
    nvars: usize,
}

impl Permutahedron {
    pub fn new(lambda: Partition, nvars: usize) -> Result<Self> {
        if lambda.len() > nvars {
            return Err(Error::DimensionMismatch {
                left: lambda.len(),
                right: nvars,
            });
        }
        Ok(Permutahedron { lambda, nvars })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vertices(&self) -> Vec<ExponentVector> {
        orbit(&self.lambda, self.nvars)
    }
}

pub fn support(f: &SparsePolynomial) -> BTreeSet<ExponentVector> {
    f.exponents().cloned().collect()
}

/// Integer points of P_λ: vectors with sum |λ| whose decreasing rearrangement is
/// dominated by λ.
pub fn permutahedron_lattice_points(p: &Permutahedron) -> BTreeSet<ExponentVector> {
    exponents_of_degree(p.lambda.size(), p.nvars)
        .into_iter()
        .filter(|e| prefix_dominated(e.sorted().parts(), p.lambda.parts()))
        .collect()
}

/// Whether P_μ ⊆ P_λ, decided by exact hull membership of the vertex μ in
/// conv(S_n · λ). P_λ is convex and permutation invariant, so it contains P_μ
/// exactly when it contains μ; lattice-point containment follows because the
/// vertices of P_μ are lattice points.
pub fn rado_containment(mu: &Partition, lambda: &Partition, nvars: usize) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    if mu.len() > nvars || lambda.len() > nvars {
        return Err(Error::DimensionMismatch {
            left: mu.len().max(lambda.len()),
            right: nvars,
        });
    }
    let gens = orbit(lambda, nvars);
    point_in_hull(&ExponentVector::from_partition(mu, nvars), &gens)
}

/// Exact test of p ∈ conv(generators).
pub fn point_in_hull(p: &ExponentVector, generators: &[ExponentVector]) -> Result<bool> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    let dim = p.len();
    for g in generators {
        if g.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.len(),
            });
        }
    }
    if generators.contains(p) {
        return Ok(true);
    }
    // outside the coordinate bounding box
    for i in 0..dim {
        let lo = generators.iter().map(|g| g[i]).min().unwrap_or(first[i]);
        let hi = generators.iter().map(|g| g[i]).max().unwrap_or(first[i]);
        if p[i] < lo || p[i] > hi {
            return Ok(false);
        }
    }
    let mut a: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| generators.iter().map(|g| BigInt::from(g[i])).collect())
        .collect();
    a.push(vec![BigInt::from(1); generators.len()]);
    let mut b: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
    b.push(BigInt::from(1));
    Ok(lp::feasible(&a, &b))
}

/// Maximal elements under dominance among the sorted exponents of a homogeneous
/// support, in reverse lexicographic order.
pub fn dominance_maxima(sorted: &BTreeSet<Partition>) -> Vec<Partition> {
    let mut out: Vec<Partition> = sorted
        .iter()
        .filter(|a| {
            !sorted
                .iter()
                .any(|b| b != *a && prefix_dominated(a.parts(), b.parts()))
        })
        .cloned()
        .collect();
    out.sort_by(|x, y| y.cmp(x));
    out
}

/// Full SNP verdict; chooses the permutahedron shortcut when it is justified.
pub fn snp_check(f: &SparsePolynomial) -> Result<SnpReport> {
    snp_check_with(f, None)
}

/// SNP verdict computed by hull membership only, for cross-checking.
pub fn snp_check_general(f: &SparsePolynomial) -> Result<SnpReport> {
    snp_check_with(f, Some(SnpMethod::GeneralHull))
}

fn snp_check_with(f: &SparsePolynomial, force: Option<SnpMethod>) -> Result<SnpReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let nvars = f.nvars();
    let supp = support(f);
    let homogeneous = f.is_homogeneous();
    let degree = f.degree().unwrap_or(0);

    let dominance_max = if homogeneous {
        let sorted: BTreeSet<Partition> = supp.iter().map(|e| e.sorted()).collect();
        dominance_maxima(&sorted)
    } else {
        Vec::new()
    };

    // Newton(f) = P_λ* once the unique maximum's whole orbit is in the support
    let fast = match (force, dominance_max.as_slice()) {
        (Some(SnpMethod::GeneralHull), _) => None,
        (_, [top]) if homogeneous => {
            let verts = orbit(top, nvars);
            if verts.iter().all(|v| supp.contains(v)) {
                Some(top.clone())
            } else {
                None
            }
        }
        _ => None,
    };

    let (lattice, method) = match fast {
        Some(top) => {
            let p = Permutahedron::new(top, nvars)?;
            (
                permutahedron_lattice_points(&p),
                SnpMethod::FastPermutahedron,
            )
        }
        None => (
            general_lattice_points(&supp, homogeneous, degree)?,
            SnpMethod::GeneralHull,
        ),
    };

    let missing_points: Vec<ExponentVector> = lattice
        .iter()
        .filter(|e| !supp.contains(*e))
        .cloned()
        .collect();
    Ok(SnpReport {
        degree,
        nvars,
        support_size: supp.len(),
        lattice_point_count: lattice.len(),
        is_snp: missing_points.is_empty(),
        missing_points,
        dominance_max,
        is_m_convex: m_convex_check(&supp),
        method,
    })
}

/// Lattice points of conv(supp) from the bounding box (on the degree hyperplane
/// when homogeneous), filtered by exact hull membership.
fn general_lattice_points(
    supp: &BTreeSet<ExponentVector>,
    homogeneous: bool,
    degree: usize,
) -> Result<BTreeSet<ExponentVector>> {
    let gens: Vec<ExponentVector> = supp.iter().cloned().collect();
    let dim = gens[0].len();
    let lo: Vec<u32> = (0..dim)
        .map(|i| gens.iter().map(|g| g[i]).min().unwrap_or(0))
        .collect();
    let hi: Vec<u32> = (0..dim)
        .map(|i| gens.iter().map(|g| g[i]).max().unwrap_or(0))
        .collect();

    let mut candidates = Vec::new();
    let mut cur = lo.clone();
    box_points(
        0,
        &lo,
        &hi,
        &mut cur,
        homogeneous.then_some(degree),
        &mut candidates,
    );

    let verdicts: Vec<Result<bool>> = candidates
        .par_iter()
        .map(|c| {
            if supp.contains(c) {
                Ok(true)
            } else {
                point_in_hull(c, &gens)
            }
        })
        .collect();
    let mut out = BTreeSet::new();
    for (c, v) in candidates.into_iter().zip(verdicts) {
        if v? {
            out.insert(c);
        }
    }
    Ok(out)
}

fn box_points(
    i: usize,
    lo: &[u32],
    hi: &[u32],
    cur: &mut Vec<u32>,
    degree: Option<usize>,
    out: &mut Vec<ExponentVector>,
) {
    if i == lo.len() {
        if degree.is_none_or(|d| cur.iter().map(|&x| x as usize).sum::<usize>() == d) {
            out.push(ExponentVector(cur.clone()));
        }
        return;
    }
    for v in lo[i]..=hi[i] {
        cur[i] = v;
        if let Some(d) = degree {
            let partial: usize = cur[..=i].iter().map(|&x| x as usize).sum();
            let rest_min: usize = lo[i + 1..].iter().map(|&x| x as usize).sum();
            if partial + rest_min > d {
                break;
            }
        }
        box_points(i + 1, lo, hi, cur, degree, out);
    }
    cur[i] = lo[i];
}

/// Exchange axiom: for α, β ∈ S and α_i > β_i there is j with α_j < β_j and
/// α − e_i + e_j ∈ S. Sets with unequal coordinate sums are not M-convex.
pub fn m_convex_check(set: &BTreeSet<ExponentVector>) -> bool {
    let Some(first) = set.iter().next() else {
        return false;
    };
    let d = first.degree();
    if set.iter().any(|e| e.degree() != d) {
        return false;
    }
    let pts: Vec<&ExponentVector> = set.iter().collect();
    pts.par_iter().all(|alpha| {
        pts.iter().all(|beta| {
            (0..alpha.len()).filter(|&i| alpha[i] > beta[i]).all(|i| {
                (0..alpha.len()).filter(|&j| alpha[j] < beta[j]).any(|j| {
                    let mut g = alpha.0.clone();
                    g[i] -= 1;
                    g[j] += 1;
                    set.contains(&ExponentVector(g))
                })
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{dominance_leq, partitions_of, SkewShape};
    use crate::matrices::jt_matrix;
    use crate::symmetric::{h_poly, schur_poly};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn e(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            support(&h_poly(2, 2)),
            BTreeSet::from([e(&[2, 0]), e(&[1, 1]), e(&[0, 2])])
        );
        assert!(support(&SparsePolynomial::zero(3)).is_empty());
        assert_eq!(support(&schur_poly(&p(&[2, 1]), 3)).len(), 7);
    }

    #[test]
    fn permutahedron_examples() {
        let pts =
            |l: &[usize], n| permutahedron_lattice_points(&Permutahedron::new(p(l), n).unwrap());
        assert_eq!(pts(&[1, 1, 1], 3), BTreeSet::from([e(&[1, 1, 1])]));
        assert_eq!(
            pts(&[3], 2),
            BTreeSet::from([e(&[3, 0]), e(&[2, 1]), e(&[1, 2]), e(&[0, 3])])
        );
        assert_eq!(pts(&[2, 1], 3).len(), 7);
        assert!(Permutahedron::new(p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn permutahedron_points_match_hull_filter() {
        for d in 1..=5 {
            for lambda in partitions_of(d) {
                for nvars in lambda.len().max(1)..=4 {
                    let perm = Permutahedron::new(lambda.clone(), nvars).unwrap();
                    let gens = perm.vertices();
                    let via_hull: BTreeSet<ExponentVector> = exponents_of_degree(d, nvars)
                        .into_iter()
                        .filter(|c| point_in_hull(c, &gens).unwrap())
                        .collect();
                    assert_eq!(
                        permutahedron_lattice_points(&perm),
                        via_hull,
                        "{lambda} in {nvars}"
                    );
                }
            }
        }
    }

    #[test]
    fn rado_examples() {
        assert!(rado_containment(&p(&[2, 2]), &p(&[3, 1]), 2).unwrap());
        assert!(!rado_containment(&p(&[3, 1]), &p(&[2, 2]), 2).unwrap());
        assert!(rado_containment(&p(&[2, 1, 1]), &p(&[2, 1, 1]), 4).unwrap());
        assert!(rado_containment(&p(&[2]), &p(&[1, 1]), 2).is_ok());
        assert!(rado_containment(&p(&[2]), &p(&[1]), 2).is_err());
    }

    #[test]
    fn rado_matches_dominance_small() {
        for d in 1..=4 {
            for mu in partitions_of(d) {
                for lambda in partitions_of(d) {
                    assert_eq!(
                        rado_containment(&mu, &lambda, d).unwrap(),
                        dominance_leq(&mu, &lambda).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hull_examples() {
        let seg = [e(&[2, 0]), e(&[0, 2])];
        assert!(point_in_hull(&e(&[2, 0]), &seg).unwrap());
        assert!(point_in_hull(&e(&[1, 1]), &seg).unwrap());
        assert!(!point_in_hull(&e(&[3, 0]), &seg).unwrap());
        assert!(!point_in_hull(&e(&[1, 0]), &seg).unwrap());
        assert_eq!(
            point_in_hull(&e(&[1]), &seg),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
        assert_eq!(point_in_hull(&e(&[1]), &[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn snp_examples() {
        let r = snp_check(&schur_poly(&p(&[2, 1]), 3)).unwrap();
        assert!(r.is_snp);
        assert_eq!((r.support_size, r.lattice_point_count), (7, 7));
        assert_eq!(r.method, SnpMethod::FastPermutahedron);
        let g = snp_check_general(&schur_poly(&p(&[2, 1]), 3)).unwrap();
        assert_eq!((g.is_snp, g.lattice_point_count), (true, 7));

        let per = jt_matrix(&SkewShape::from_parts(&[2, 1], &[]).unwrap(), 2).permanent();
        let r = snp_check(&per).unwrap();
        assert!(r.is_snp);
        assert_eq!(r.dominance_max, vec![p(&[3])]);
        assert_eq!(r.support_size, 4);

        let f = SparsePolynomial::from_terms(2, [(vec![2, 0], 1.into()), (vec![0, 2], 1.into())])
            .unwrap();
        let r = snp_check(&f).unwrap();
        assert!(!r.is_snp);
        assert_eq!(r.missing_points, vec![e(&[1, 1])]);
        assert!(!r.is_m_convex);

        assert_eq!(
            snp_check(&SparsePolynomial::zero(2)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn non_homogeneous_uses_general_path() {
        // 1 + x1^2 x2^2 misses x1 x2
        let f = SparsePolynomial::from_terms(2, [(vec![0, 0], 1.into()), (vec![2, 2], 1.into())])
            .unwrap();
        let r = snp_check(&f).unwrap();
        assert_eq!(r.method, SnpMethod::GeneralHull);
        assert_eq!(r.missing_points, vec![e(&[1, 1])]);
    }

    #[test]
    fn m_convex_examples() {
        assert!(m_convex_check(&support(&schur_poly(&p(&[2, 1]), 3))));
        assert!(!m_convex_check(&BTreeSet::from([e(&[2, 0]), e(&[0, 2])])));
        assert!(m_convex_check(&BTreeSet::from([e(&[1, 2, 3])])));
        assert!(!m_convex_check(&BTreeSet::from([e(&[1, 0]), e(&[1, 1])])));
    }
}
