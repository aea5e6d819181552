//! Exact sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Dense exponent vector x^α, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Entries sorted into a partition (the decreasing rearrangement).
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().map(|&e| e as usize))
    }

    /// The partition padded back to `nvars` entries as an exponent vector.
    pub fn from_partition(lambda: &Partition, nvars: usize) -> Self {
        ExponentVector(
            lambda
                .padded(nvars)
                .into_iter()
                .take(nvars)
                .map(|p| p as u32)
                .collect(),
        )
    }
}

impl Deref for ExponentVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Graded reverse lexicographic order: higher total degree is larger; on ties the
/// vector with the smaller entry at the last differing position is larger.
pub fn grevlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    pub fn monomial(exp: ExponentVector, c: BigInt) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        SparsePolynomial { nvars, terms }
    }

    /// The variable x_{i+1} (0-based index `i`).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(ExponentVector(e), BigInt::one())
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = SparsePolynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentVector(exp.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Exponents of nonzero terms.
    pub fn exponents(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Total degrees present, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &SparsePolynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        Ok(out)
    }

    pub fn neg(&self) -> SparsePolynomial {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> SparsePolynomial {
        if c.is_zero() {
            return SparsePolynomial::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// self += c · other; variable counts must already agree.
    pub(crate) fn add_scaled(&mut self, other: &SparsePolynomial, c: &BigInt) {
        debug_assert_eq!(self.nvars, other.nvars);
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &SparsePolynomial) -> SparsePolynomial {
        if self.is_zero() || other.is_zero() {
            return SparsePolynomial::zero(self.nvars);
        }
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.0.iter().zip(eb.0.iter()).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (ExponentVector(e), c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> SparsePolynomial {
        (0..k).fold(SparsePolynomial::one(self.nvars), |acc, _| {
            acc.mul_unchecked(self)
        })
    }

    /// Renames variables: x_i becomes x_{perm[i]} (0-based).
    pub fn permute_variables(&self, perm: &[usize]) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.0.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(ExponentVector(f), c.clone());
        }
        out
    }

    /// Invariance under the adjacent transpositions, which generate S_nvars.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.0.clone();
                f.swap(i, i + 1);
                self.terms.get(&ExponentVector(f)) == Some(c)
            })
        })
    }

    /// Terms sorted in descending graded reverse lexicographic order.
    pub fn canonical_terms(&self) -> Vec<(&ExponentVector, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex(b.0, a.0));
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }
}

pub fn poly_add(a: &SparsePolynomial, b: &SparsePolynomial) -> Result<SparsePolynomial> {
    a.add(b)
}

pub fn poly_mul(a: &SparsePolynomial, b: &SparsePolynomial) -> Result<SparsePolynomial> {
    a.mul(b)
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<(Vec<u32>, String)>,
}

/// Serializes an integer as its decimal string, matching polynomial coefficients.
pub fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|(e, c)| (e.0.clone(), c.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (e, c) in raw.terms {
            let c: BigInt = c.parse().map_err(de::Error::custom)?;
            terms.push((e, c));
        }
        SparsePolynomial::from_terms(raw.nvars, terms).map_err(de::Error::custom)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let constant = e.iter().all(|&x| x == 0);
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{}", i + 1, x)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nvars: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(nvars, i)
    }

    #[test]
    fn additive_inverse_is_zero() {
        let f = x(2, 0).add(&x(2, 1).pow(3)).unwrap();
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn one_is_identity() {
        let f = x(3, 0)
            .mul(&x(3, 2))
            .unwrap()
            .add(&SparsePolynomial::constant(3, 5.into()))
            .unwrap();
        assert_eq!(SparsePolynomial::one(3).mul(&f).unwrap(), f);
    }

    #[test]
    fn square_of_linear_form() {
        let h1 = x(2, 0).add(&x(2, 1)).unwrap();
        let sq = h1.mul(&h1).unwrap();
        let expected = SparsePolynomial::from_terms(
            2,
            [
                (vec![2, 0], 1.into()),
                (vec![1, 1], 2.into()),
                (vec![0, 2], 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn mismatched_variables() {
        assert!(matches!(
            x(2, 0).add(&x(3, 0)),
            Err(Error::VariableMismatch { .. })
        ));
        assert!(x(2, 0).mul(&x(3, 0)).is_err());
    }

    #[test]
    fn grevlex_order() {
        let e = |v: &[u32]| ExponentVector(v.to_vec());
        assert_eq!(grevlex(&e(&[2, 0]), &e(&[0, 1])), Ordering::Greater);
        // same degree: smaller last entry wins
        assert_eq!(grevlex(&e(&[1, 1, 0]), &e(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(grevlex(&e(&[2, 0, 0]), &e(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn json_shape() {
        let f =
            SparsePolynomial::from_terms(2, [(vec![0, 2], 1.into()), (vec![2, 0], (-3).into())])
                .unwrap();
        assert_eq!(
            f.to_json(),
            r#"{"nvars":2,"terms":[[[2,0],"-3"],[[0,2],"1"]]}"#
        );
        let back: SparsePolynomial = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_string(), "-3x1^2 + x2^2");
    }

    #[test]
    fn symmetry_detection() {
        let s = x(3, 0).add(&x(3, 1)).unwrap().add(&x(3, 2)).unwrap();
        assert!(s.is_symmetric());
        assert!(!x(3, 0).is_symmetric());
    }
}
