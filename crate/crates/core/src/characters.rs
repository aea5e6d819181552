//! Irreducible characters of the symmetric groups.
//!
//! Values come from the Murnaghan-Nakayama rule on beta-sets (abacus form):
//! removing a rim hook of length r slides one bead r positions down, with sign
//! (−1)^(beads jumped over). Tables are memoized per degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::combinatorics::{cycle_type, factorial, partitions_of, Partition, Permutation};
use crate::error::{Error, Result};
use crate::symmetric::kostka;

/// χ^ν(ρ) for all ν, ρ ⊢ n.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<Partition>,
    values: HashMap<(Partition, Partition), i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterEntry {
    pub nu: Partition,
    pub rho: Partition,
    pub value: i64,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let classes = partitions_of(n);
        let mut memo = HashMap::new();
        let mut values = HashMap::with_capacity(classes.len() * classes.len());
        for nu in &classes {
            for rho in &classes {
                let v = mn_recursive(&beta_set(nu), rho.parts(), &mut memo);
                values.insert((nu.clone(), rho.clone()), v);
            }
        }
        CharacterTable { n, classes, values }
    }

    /// Shared, lazily built table for degree `n`.
    pub fn shared(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("character cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(CharacterTable::new(n));
        let mut guard = cache.lock().expect("character cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Partitions of n in reverse lexicographic order; they index both rows and columns.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn value(&self, nu: &Partition, rho: &Partition) -> Result<i64> {
        self.values
            .get(&(nu.clone(), rho.clone()))
            .copied()
            .ok_or(Error::SizeMismatch {
                left: nu.size(),
                right: rho.size().max(self.n),
            })
    }

    pub fn entries(&self) -> Vec<CharacterEntry> {
        let mut out = Vec::with_capacity(self.values.len());
        for nu in &self.classes {
            for rho in &self.classes {
                out.push(CharacterEntry {
                    nu: nu.clone(),
                    rho: rho.clone(),
                    value: self.values[&(nu.clone(), rho.clone())],
                });
            }
        }
        out
    }
}

/// n!/z_ρ, the number of permutations with cycle type ρ.
pub fn class_size(rho: &Partition) -> u128 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_default() += 1;
    }
    let z: u128 = mult
        .iter()
        .map(|(&i, &m)| (i as u128).pow(m as u32) * factorial(m))
        .product();
    factorial(rho.size()) / z
}

fn beta_set(nu: &Partition) -> Vec<usize> {
    let len = nu.len();
    (0..len).map(|i| nu.part(i) + len - 1 - i).collect()
}

fn mn_recursive(
    beta: &[usize],
    rho: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_recursive(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// χ^ν(ρ) by the Murnaghan-Nakayama rule.
pub fn mn_character(nu: &Partition, rho: &Partition) -> Result<i64> {
    if nu.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: rho.size(),
        });
    }
    CharacterTable::shared(nu.size()).value(nu, rho)
}

/// fix(π) − 1, the character of the standard representation.
pub fn standard_character(pi: &Permutation) -> i64 {
    pi.fixed_points() as i64 - 1
}

/// Every element of the Young subgroup S_μ acting on consecutive blocks of sizes μ_i.
pub fn young_subgroup_elements(mu: &Partition) -> Vec<Permutation> {
    let n = mu.size();
    let mut out = vec![Permutation::identity(n)];
    let mut offset = 0;
    for &block in mu.parts() {
        let local = Permutation::all(block);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for g in &out {
            for s in &local {
                let mut images = g.images_zero_based().to_vec();
                for i in 0..block {
                    images[offset + i] = offset + s.apply(i);
                }
                next.push(Permutation::from_zero_based(images));
            }
        }
        out = next;
        offset += block;
    }
    out
}

/// Σ_{g ∈ S_μ} χ^ν(g) by direct summation over the subgroup.
pub fn young_subgroup_character_sum(nu: &Partition, mu: &Partition) -> Result<i64> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: mu.size(),
        });
    }
    let table = CharacterTable::shared(nu.size());
    young_subgroup_elements(mu)
        .iter()
        .map(|g| table.value(nu, &cycle_type(g)))
        .sum()
}

/// The same sum through the closed form |S_μ| · K_{ν,μ}.
pub fn young_subgroup_character_sum_kostka(nu: &Partition, mu: &Partition) -> Result<i64> {
    let k = kostka(nu, mu.parts())?;
    Ok(mu.factorial_product() as i64 * k as i64)
}

/// The 2^(n−1) products σ_1σ_2⋯σ_{n−1}, σ_i ∈ S_{i,i+1}, duplicates kept.
pub fn adjacent_product_multiset(n: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let mut out = vec![Permutation::identity(n)];
    for i in 0..n - 1 {
        let t = Permutation::transposition(n, i, i + 1);
        let mut next = Vec::with_capacity(out.len() * 2);
        for g in out {
            next.push(g.compose(&t));
            next.push(g);
        }
        out = next;
    }
    Ok(out)
}

/// χ^ν evaluated on the product multiset S_{1,2}·S_{2,3}⋯S_{n−1,n}.
pub fn adjacent_product_character_sum(nu: &Partition) -> Result<i64> {
    let n = nu.size();
    let table = CharacterTable::shared(n);
    adjacent_product_multiset(n)?
        .iter()
        .map(|g| table.value(nu, &cycle_type(g)))
        .sum()
}

/// p_k(n): number of elements of the product multiset with exactly k fixed points.
pub fn fixed_point_histogram(n: usize) -> Result<BTreeMap<usize, u64>> {
    let mut hist = BTreeMap::new();
    for g in adjacent_product_multiset(n)? {
        *hist.entry(g.fixed_points()).or_default() += 1;
    }
    Ok(hist)
}
