//! The classical bases h, m, p, s in finitely many variables, Kostka numbers,
//! and conversions from polynomials back to the m and s bases.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{next_permutation, partitions_of, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, SparsePolynomial};

/// All exponent vectors of total degree `d` in `nvars` variables.
pub fn exponents_of_degree(d: usize, nvars: usize) -> Vec<ExponentVector> {
    fn go(rest: usize, slot: usize, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if slot + 1 == cur.len() {
            cur[slot] = rest as u32;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for v in (0..=rest).rev() {
            cur[slot] = v as u32;
            go(rest - v, slot + 1, cur, out);
        }
    }
    if nvars == 0 {
        return if d == 0 {
            vec![ExponentVector(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    go(d, 0, &mut vec![0; nvars], &mut out);
    out
}

/// Complete homogeneous h_k; 1 for k = 0 and 0 for k < 0.
pub fn h_poly(k: i64, nvars: usize) -> SparsePolynomial {
    if k < 0 {
        return SparsePolynomial::zero(nvars);
    }
    let mut f = SparsePolynomial::zero(nvars);
    for e in exponents_of_degree(k as usize, nvars) {
        f.add_term(e, BigInt::from(1));
    }
    f
}

/// Distinct rearrangements of λ padded to `nvars` entries.
pub fn orbit(lambda: &Partition, nvars: usize) -> Vec<ExponentVector> {
    if lambda.len() > nvars {
        return Vec::new();
    }
    let mut v: Vec<usize> = lambda.padded(nvars);
    v.sort_unstable();
    let mut out = vec![ExponentVector(v.iter().map(|&x| x as u32).collect())];
    while next_permutation(&mut v) {
        out.push(ExponentVector(v.iter().map(|&x| x as u32).collect()));
    }
    out
}

/// Monomial symmetric m_λ; zero when λ has more parts than variables.
pub fn m_poly(lambda: &Partition, nvars: usize) -> SparsePolynomial {
    let mut f = SparsePolynomial::zero(nvars);
    for e in orbit(lambda, nvars) {
        f.add_term(e, BigInt::from(1));
    }
    f
}

/// Power sum p_λ = p_{λ_1}⋯p_{λ_n}, with p_∅ = 1.
pub fn p_poly(lambda: &Partition, nvars: usize) -> SparsePolynomial {
    lambda
        .parts()
        .iter()
        .fold(SparsePolynomial::one(nvars), |acc, &k| {
            acc.mul_unchecked(&m_poly(&Partition::row(k), nvars))
        })
}

/// Weight generating function of semistandard fillings of `shape` with entries
/// in 1..=nvars, rows weakly increasing and columns strictly increasing.
pub fn ssyt_schur(shape: &SkewShape, nvars: usize) -> SparsePolynomial {
    let cells = shape.cells();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::with_capacity(cells.len());
    let mut content = vec![0u32; nvars];
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();

    // cells strictly below (r, c) in the same column bound the entry from above
    let below: Vec<usize> = cells
        .iter()
        .map(|&(r, c)| {
            ((r + 1)..=shape.rows())
                .take_while(|&rr| shape.contains(rr, c))
                .count()
        })
        .collect();

    #[allow(clippy::too_many_arguments)]
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        below: &[usize],
        nvars: usize,
        filling: &mut HashMap<(usize, usize), usize>,
        content: &mut Vec<u32>,
        counts: &mut HashMap<Vec<u32>, u64>,
    ) {
        if k == cells.len() {
            *counts.entry(content.clone()).or_default() += 1;
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if let Some(&left) = filling.get(&(r, c.wrapping_sub(1))) {
            lo = lo.max(left);
        }
        if let Some(&up) = filling.get(&(r.wrapping_sub(1), c)) {
            lo = lo.max(up + 1);
        }
        let hi = nvars.saturating_sub(below[k]);
        for v in lo..=hi {
            filling.insert((r, c), v);
            content[v - 1] += 1;
            fill(k + 1, cells, below, nvars, filling, content, counts);
            content[v - 1] -= 1;
        }
        filling.remove(&(r, c));
    }

    if nvars > 0 || cells.is_empty() {
        fill(
            0,
            &cells,
            &below,
            nvars,
            &mut filling,
            &mut content,
            &mut counts,
        );
    }
    let mut f = SparsePolynomial::zero(nvars);
    for (e, c) in counts {
        f.add_term(ExponentVector(e), BigInt::from(c));
    }
    f
}

/// Schur polynomial s_λ in `nvars` variables.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> SparsePolynomial {
    ssyt_schur(&SkewShape::straight(lambda.clone()), nvars)
}

/// Number of semistandard tableaux of skew shape with the given content
/// (content entries may be zero), counted by successive horizontal strips.
pub fn skew_kostka(shape: &SkewShape, content: &[usize]) -> Result<u64> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: total,
        });
    }
    let target = shape.outer().padded(shape.rows());
    let start = shape.inner().padded(shape.rows());
    let mut memo = HashMap::new();
    Ok(strips(&start, &target, content, &mut memo))
}

fn strips(
    cur: &[usize],
    target: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&size, rest)) = content.split_first() else {
        return u64::from(cur == target);
    };
    let key = (cur.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // choose how many cells to add in each row; row i may grow up to the old length of row i-1
    fn place(
        row: usize,
        left: usize,
        cur: &[usize],
        next: &mut Vec<usize>,
        target: &[usize],
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        if row == cur.len() {
            return if left == 0 {
                strips(next, target, rest, memo)
            } else {
                0
            };
        }
        let cap = if row == 0 {
            target[0]
        } else {
            target[row].min(cur[row - 1])
        };
        let room = cap.saturating_sub(cur[row]).min(left);
        let mut total = 0;
        for add in 0..=room {
            next[row] = cur[row] + add;
            total += place(row + 1, left - add, cur, next, target, rest, memo);
        }
        next[row] = cur[row];
        total
    }
    let mut next = cur.to_vec();
    let v = place(0, size, cur, &mut next, target, rest, memo);
    memo.insert(key, v);
    v
}

/// K_{λ,μ}: semistandard tableaux of shape λ and content μ (a partition or a
/// composition; zeros allowed).
pub fn kostka(lambda: &Partition, content: &[usize]) -> Result<u64> {
    skew_kostka(&SkewShape::straight(lambda.clone()), content)
}

/// Coefficients c_μ with f = Σ c_μ m_μ.
pub fn m_expand(f: &SparsePolynomial) -> Result<BTreeMap<Partition, BigInt>> {
    let nvars = f.nvars();
    let mut orbit_sizes: HashMap<Partition, usize> = HashMap::new();
    let mut out = BTreeMap::new();
    for (e, c) in f.terms() {
        let lambda = e.sorted();
        let rep = ExponentVector::from_partition(&lambda, nvars);
        if &f.coefficient(&rep) != c {
            return Err(Error::NotSymmetric { exponent: rep.0 });
        }
        *orbit_sizes.entry(lambda.clone()).or_default() += 1;
        out.insert(lambda, c.clone());
    }
    for (lambda, seen) in orbit_sizes {
        if orbit(&lambda, nvars).len() != seen {
            return Err(Error::NotSymmetric {
                exponent: ExponentVector::from_partition(&lambda, nvars).0,
            });
        }
    }
    Ok(out)
}

/// Coefficients a_λ with f = Σ a_λ s_λ, by peeling off Kostka rows along reverse
/// lexicographic order (a linear extension of dominance, largest first).
pub fn schur_expand(f: &SparsePolynomial) -> Result<BTreeMap<Partition, BigInt>> {
    if f.is_zero() {
        return Ok(BTreeMap::new());
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.degree().unwrap_or(0);
    if f.nvars() < d {
        return Err(Error::InsufficientVariables {
            nvars: f.nvars(),
            degree: d,
        });
    }
    let mut residual = m_expand(f)?;
    let mut out = BTreeMap::new();
    for lambda in partitions_of(d) {
        let Some(a) = residual.get(&lambda).cloned() else {
            continue;
        };
        if a.is_zero() {
            continue;
        }
        for mu in partitions_of(d) {
            let k = kostka(&lambda, mu.parts())?;
            if k == 0 {
                continue;
            }
            let entry = residual.entry(mu).or_insert_with(BigInt::zero);
            *entry -= &a * BigInt::from(k);
        }
        out.insert(lambda, a);
    }
    debug_assert!(residual.values().all(|v| v.is_zero()));
    Ok(out)
}

/// Σ a_λ s_λ as a polynomial in `nvars` variables.
pub fn from_schur(coeffs: &BTreeMap<Partition, BigInt>, nvars: usize) -> SparsePolynomial {
    let mut f = SparsePolynomial::zero(nvars);
    for (lambda, a) in coeffs {
        f.add_scaled(&schur_poly(lambda, nvars), a);
    }
    f
}

/// Σ c_μ m_μ as a polynomial in `nvars` variables.
pub fn from_monomial(coeffs: &BTreeMap<Partition, BigInt>, nvars: usize) -> SparsePolynomial {
    let mut f = SparsePolynomial::zero(nvars);
    for (mu, c) in coeffs {
        f.add_scaled(&m_poly(mu, nvars), c);
    }
    f
}
