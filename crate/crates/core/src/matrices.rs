//! Jacobi-Trudi and Giambelli matrices and their immanants.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::characters::CharacterTable;
use crate::combinatorics::{cycle_type, frobenius, Partition, Permutation, SkewShape};
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::symmetric::{h_poly, ssyt_schur};

/// Square matrix of polynomials sharing one variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialMatrix {
    nvars: usize,
    entries: Vec<Vec<SparsePolynomial>>,
}

impl PolynomialMatrix {
    pub fn new(nvars: usize, entries: Vec<Vec<SparsePolynomial>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    left: row.len(),
                    right: n,
                });
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(Error::VariableMismatch {
                        left: nvars,
                        right: e.nvars(),
                    });
                }
            }
        }
        Ok(PolynomialMatrix { nvars, entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Entry (i, j), 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &SparsePolynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<SparsePolynomial>] {
        &self.entries
    }

    /// Σ over permutations of each cycle type ρ of ∏ a_{i,π(i)}.
    ///
    /// Rows are assigned depth first and branches through zero entries are cut,
    /// so sparse (Hessenberg-like) matrices cost far less than n!.
    pub fn class_sums(&self) -> BTreeMap<Partition, SparsePolynomial> {
        let n = self.order();
        let mut sums: BTreeMap<Partition, SparsePolynomial> = BTreeMap::new();
        let mut images = vec![0usize; n];
        let mut used = vec![false; n];
        self.class_sums_rec(
            0,
            &SparsePolynomial::one(self.nvars),
            &mut images,
            &mut used,
            &mut sums,
        );
        sums
    }

    fn class_sums_rec(
        &self,
        row: usize,
        prefix: &SparsePolynomial,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sums: &mut BTreeMap<Partition, SparsePolynomial>,
    ) {
        let n = self.order();
        if row == n {
            let rho = cycle_type(&Permutation::from_zero_based(images.clone()));
            sums.entry(rho)
                .or_insert_with(|| SparsePolynomial::zero(self.nvars))
                .add_scaled(prefix, &BigInt::from(1));
            return;
        }
        for col in 0..n {
            if used[col] || self.entries[row][col].is_zero() {
                continue;
            }
            let next = prefix.mul_unchecked(&self.entries[row][col]);
            used[col] = true;
            images[row] = col;
            self.class_sums_rec(row + 1, &next, images, used, sums);
            used[col] = false;
        }
    }

    /// Imm_ν for every ν ⊢ n, sharing one pass over the permutations.
    pub fn all_immanants(&self) -> BTreeMap<Partition, SparsePolynomial> {
        let n = self.order();
        let sums = self.class_sums();
        let table = CharacterTable::shared(n);
        table
            .classes()
            .iter()
            .map(|nu| (nu.clone(), combine(&table, nu, &sums, self.nvars)))
            .collect()
    }

    pub fn determinant(&self) -> SparsePolynomial {
        immanant(self, &Partition::column(self.order())).expect("order matches")
    }

    pub fn permanent(&self) -> SparsePolynomial {
        immanant(self, &Partition::row(self.order())).expect("order matches")
    }
}

fn combine(
    table: &CharacterTable,
    nu: &Partition,
    sums: &BTreeMap<Partition, SparsePolynomial>,
    nvars: usize,
) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(nvars);
    for (rho, s) in sums {
        let chi = table.value(nu, rho).expect("class of matching degree");
        out.add_scaled(s, &BigInt::from(chi));
    }
    out
}

/// Imm_ν A = Σ_π χ^ν(π) ∏ a_{i,π(i)}.
pub fn immanant(a: &PolynomialMatrix, nu: &Partition) -> Result<SparsePolynomial> {
    let n = a.order();
    if nu.size() != n {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: n,
        });
    }
    if n == 0 {
        return Ok(SparsePolynomial::one(a.nvars()));
    }
    let table = CharacterTable::shared(n);
    Ok(combine(&table, nu, &a.class_sums(), a.nvars()))
}

/// H(λ, μ) with entry (i, j) = h_{(λ_i − i) − (μ_j − j)}, order ℓ(λ).
pub fn jt_matrix(shape: &SkewShape, nvars: usize) -> PolynomialMatrix {
    let n = shape.rows();
    let lam = shape.outer();
    let mu = shape.inner();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = (lam.part(i) as i64 - i as i64) - (mu.part(j) as i64 - j as i64);
                    h_poly(k, nvars)
                })
                .collect()
        })
        .collect();
    PolynomialMatrix { nvars, entries }
}

/// The hook (a+1, 1^b), written (a | b) in Frobenius notation.
pub fn hook(arm: usize, leg: usize) -> Partition {
    let mut parts = vec![arm + 1];
    parts.extend(std::iter::repeat_n(1, leg));
    Partition::new(parts).expect("hooks are partitions")
}

/// G_λ with entry (i, j) = s_{(α_i | β_j)}, order rank(λ).
pub fn giambelli_matrix(lambda: &Partition, nvars: usize) -> Result<PolynomialMatrix> {
    let frob = frobenius(lambda)?;
    let k = frob.rank();
    let entries = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    ssyt_schur(
                        &SkewShape::straight(hook(frob.arms[i], frob.legs[j])),
                        nvars,
                    )
                })
                .collect()
        })
        .collect();
    Ok(PolynomialMatrix { nvars, entries })
}

/// Laplace expansion along the first row; independent of the character machinery.
pub fn cofactor_determinant(a: &PolynomialMatrix) -> SparsePolynomial {
    fn rec(rows: &[Vec<SparsePolynomial>], cols: &[usize], nvars: usize) -> SparsePolynomial {
        if rows.is_empty() {
            return SparsePolynomial::one(nvars);
        }
        let mut out = SparsePolynomial::zero(nvars);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &rows[0][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = rec(&rows[1..], &rest, nvars);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            out.add_scaled(&entry.mul_unchecked(&minor), &BigInt::from(sign));
        }
        out
    }
    let cols: Vec<usize> = (0..a.order()).collect();
    rec(&a.entries, &cols, a.nvars)
}
