//! Partitions, skew shapes, compositions and permutations.
//!
//! Every value here is immutable once built. Partitions are stored without
//! trailing zeros; indexing past the last part reads as zero.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(entries: I) -> Self {
        let mut parts: Vec<usize> = entries.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition (n-1, 1) of the standard representation, or (1) when n = 1.
    pub fn standard(n: usize) -> Self {
        match n {
            0 => Partition::empty(),
            1 => Partition(vec![1]),
            _ => Partition(vec![n - 1, 1]),
        }
    }

    /// The single-column partition (1^n).
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The single-row partition (n).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Number of diagonal cells, max{i : λ_i ≥ i}.
    pub fn rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Parts padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len.max(self.len())).map(|i| self.part(i)).collect()
    }

    /// ∏ λ_i!, the order of the Young subgroup S_λ.
    pub fn factorial_product(&self) -> u128 {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&p| p == 1).count()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// μ ⊴ λ: every prefix sum of `mu` is at most the matching prefix sum of `lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    Ok(prefix_dominated(mu.parts(), lambda.parts()))
}

/// Prefix-sum comparison on raw sequences, padding with zeros.
pub(crate) fn prefix_dominated(mu: &[usize], lambda: &[usize]) -> bool {
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..len {
        a += mu.get(i).copied().unwrap_or(0);
        b += lambda.get(i).copied().unwrap_or(0);
        if a > b {
            return false;
        }
    }
    true
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(0);
    let parts = (1..=width)
        .map(|j| lambda.parts().iter().take_while(|&&p| p >= j).count())
        .collect();
    Partition(parts)
}

/// Arm and leg lengths of the diagonal hooks, written (α | β).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoordinates {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoordinates {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() {
            return Err(Error::SizeMismatch {
                left: arms.len(),
                right: legs.len(),
            });
        }
        if !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidPartition(arms));
        }
        Ok(FrobeniusCoordinates { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Rebuilds λ: λ_i = α_i + i on the diagonal rows, and below them row r
    /// counts the legs reaching it.
    pub fn to_partition(&self) -> Partition {
        let k = self.rank();
        let rows = self.legs.first().map_or(0, |b| b + 1).max(k);
        let parts: Vec<usize> = (1..=rows)
            .map(|r| {
                if r <= k {
                    self.arms[r - 1] + r
                } else {
                    (1..=k).filter(|&j| self.legs[j - 1] + j >= r).count()
                }
            })
            .collect();
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for FrobeniusCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({} | {})", join(&self.arms), join(&self.legs))
    }
}

pub fn frobenius(lambda: &Partition) -> Result<FrobeniusCoordinates> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let k = lambda.rank();
    let conj = lambda.conjugate();
    let arms = (0..k).map(|i| lambda.part(i) - (i + 1)).collect();
    let legs = (0..k).map(|i| conj.part(i) - (i + 1)).collect();
    Ok(FrobeniusCoordinates { arms, legs })
}

/// All partitions of `d` with at most `max_length` parts, in reverse lexicographic order.
pub fn enumerate_partitions(d: usize, max_length: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_length, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `d`, reverse lexicographic.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    enumerate_partitions(d, d.max(1))
}

/// A skew shape λ/μ in English convention; `inner` is padded with zeros to the
/// length of `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSkew", into = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawSkew {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(Partition::new(raw.outer)?, Partition::new(raw.inner)?)
    }
}

impl From<SkewShape> for RawSkew {
    fn from(s: SkewShape) -> Self {
        RawSkew {
            outer: s.outer.0,
            inner: s.inner.0,
        }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() {
            return Err(Error::InvalidSkewShape(format!(
                "inner {inner} is longer than outer {outer}"
            )));
        }
        if (0..outer.len()).any(|i| inner.part(i) > outer.part(i)) {
            return Err(Error::InvalidSkewShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewShape::new(
            Partition::new(outer.to_vec())?,
            Partition::new(inner.to_vec())?,
        )
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            outer: lambda,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows n = ℓ(outer); this is the Jacobi-Trudi matrix order.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Row lengths λ_i − μ_i (may contain zeros).
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.rows())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .collect()
    }

    /// Whether the 1-based cell (row, col) belongs to the shape.
    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && self.inner.part(row - 1) < col && col <= self.outer.part(row - 1)
    }

    /// Cells as 1-based (row, col) pairs, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .flat_map(|r| {
                ((self.inner.part(r - 1) + 1)..=self.outer.part(r - 1)).map(move |c| (r, c))
            })
            .collect()
    }

    /// λ_{i+1} = μ_i + 1 for every consecutive pair of rows, on a nonempty shape.
    pub fn is_border_strip(&self) -> bool {
        if self.size() == 0 {
            return false;
        }
        let n = self.rows();
        (0..n.saturating_sub(1)).all(|i| self.outer.part(i + 1) == self.inner.part(i) + 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

pub fn is_border_strip(shape: &SkewShape) -> bool {
    shape.is_border_strip()
}

/// Geometric ribbon test: nonempty, edgewise connected, no 2×2 block.
pub fn is_ribbon(cells: &[(i64, i64)]) -> bool {
    use std::collections::BTreeSet;
    if cells.is_empty() {
        return false;
    }
    let set: BTreeSet<(i64, i64)> = cells.iter().copied().collect();
    if set.len() != cells.len() {
        return false;
    }
    let has_block = set.iter().any(|&(r, c)| {
        set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1))
    });
    if has_block {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![cells[0]];
    while let Some((r, c)) = stack.pop() {
        if !seen.insert((r, c)) {
            continue;
        }
        for nb in [(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)] {
            if set.contains(&nb) && !seen.contains(&nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == set.len()
}

/// Every skew shape λ/μ with nonempty λ, |λ| ≤ `max_size`, ℓ(λ) ≤ `max_rows` and
/// |λ/μ| > 0, ordered by |λ|, then λ and μ in reverse lexicographic order.
pub fn enumerate_skew_shapes(max_size: usize, max_rows: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for d in 1..=max_size {
        for outer in enumerate_partitions(d, max_rows) {
            for e in 0..d {
                for inner in enumerate_partitions(e, outer.len()) {
                    if let Ok(s) = SkewShape::new(outer.clone(), inner) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// Every border strip with `n` cells up to translation, one per composition of
/// `n` read as row lengths from top to bottom, in the order of
/// `enumerate_compositions`.
pub fn border_strips(n: usize) -> Vec<SkewShape> {
    enumerate_compositions(n)
        .into_iter()
        .map(|rows| {
            let k = rows.len();
            let mut outer = vec![0; k];
            let mut inner = vec![0; k];
            outer[k - 1] = rows.0[k - 1];
            for i in (0..k - 1).rev() {
                inner[i] = outer[i + 1] - 1;
                outer[i] = inner[i] + rows.0[i];
            }
            inner.retain(|&x| x > 0);
            SkewShape::from_parts(&outer, &inner).expect("ribbons are skew shapes")
        })
        .collect()
}

/// An ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// (1, 1, …, 1) with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Block sums of `base` over consecutive blocks whose sizes are the parts of `index`.
///
/// Works on raw sequences so that `base` may carry zeros (row lengths of a skew
/// shape with empty rows).
pub fn meld_raw(base: &[usize], index: &Composition) -> Result<Vec<usize>> {
    if index.size() != base.len() {
        return Err(Error::SizeMismatch {
            left: index.size(),
            right: base.len(),
        });
    }
    let mut out = Vec::with_capacity(index.len());
    let mut pos = 0;
    for &block in index.parts() {
        out.push(base[pos..pos + block].iter().sum());
        pos += block;
    }
    Ok(out)
}

pub fn meld(gamma: &Composition, alpha: &Composition) -> Result<Composition> {
    Composition::new(meld_raw(gamma.parts(), alpha)?)
}

/// Whether `beta` splits into consecutive blocks summing to the parts of `alpha`.
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.size() != alpha.size() {
        return Err(Error::SizeMismatch {
            left: beta.size(),
            right: alpha.size(),
        });
    }
    let mut acc = 0;
    let mut targets = alpha.parts().iter();
    let mut target = targets.next().copied();
    for &b in beta.parts() {
        acc += b;
        match target {
            Some(t) if acc == t => {
                acc = 0;
                target = targets.next().copied();
            }
            Some(t) if acc < t => {}
            _ => return Ok(false),
        }
    }
    Ok(acc == 0 && target.is_none())
}

/// All compositions of `n` in reverse lexicographic order.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// A bijection of {1..n}, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From 1-based images, e.g. `[2, 1, 3]`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images.into_iter().map(|x| x - 1).collect()))
    }

    /// From 0-based images; the caller guarantees bijectivity.
    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Transposition of the 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Permutation(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 0-based image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images_zero_based(&self) -> &[usize] {
        &self.0
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &x)| *i == x).count()
    }

    pub fn cycle_type(&self) -> Partition {
        cycle_type(self)
    }

    /// All permutations of {0..n-1} in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn cycle_type(pi: &Permutation) -> Partition {
    let n = pi.degree();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = pi.0[x];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

/// Graded comparison used when a deterministic total order on partitions of
/// mixed sizes is needed: by size, then reverse lexicographic.
pub fn graded_revlex(a: &Partition, b: &Partition) -> Ordering {
    a.size()
        .cmp(&b.size())
        .then_with(|| b.parts().cmp(a.parts()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn border_strip_enumeration() {
        for n in 1..=6 {
            let strips = border_strips(n);
            assert_eq!(strips.len(), 1 << (n - 1));
            for s in &strips {
                assert!(s.is_border_strip(), "{s}");
                assert_eq!(s.size(), n);
            }
        }
        assert_eq!(
            border_strips(3)[1],
            SkewShape::from_parts(&[2, 1], &[]).unwrap()
        );
        assert_eq!(
            border_strips(3)[2],
            SkewShape::from_parts(&[2, 2], &[1]).unwrap()
        );
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert_eq!(p(&[]).size(), 0);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[2, 2, 2]), &p(&[3, 1, 1, 1])).unwrap());
        assert!(matches!(
            dominance_leq(&p(&[2]), &p(&[2, 1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(conjugate(&p(&[])), p(&[]));
        assert_eq!(conjugate(&p(&[6, 6, 4, 4, 1, 1])), p(&[6, 4, 4, 4, 2, 2]));
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius(&p(&[1])).unwrap();
        assert_eq!((f.arms, f.legs), (vec![0], vec![0]));
        let f = frobenius(&p(&[4, 3, 1])).unwrap();
        assert_eq!((f.arms, f.legs), (vec![3, 1], vec![2, 0]));
        let f = frobenius(&p(&[6, 6, 4, 4, 1, 1])).unwrap();
        assert_eq!(
            (f.arms.clone(), f.legs.clone()),
            (vec![5, 4, 1, 0], vec![5, 2, 1, 0])
        );
        assert_eq!(frobenius(&p(&[])), Err(Error::EmptyPartition));
    }

    #[test]
    fn frobenius_round_trip() {
        for d in 1..=10 {
            for lambda in partitions_of(d) {
                assert_eq!(
                    frobenius(&lambda).unwrap().to_partition(),
                    lambda,
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn border_strip_examples() {
        assert!(SkewShape::from_parts(&[2, 1], &[0, 0])
            .unwrap()
            .is_border_strip());
        assert!(!SkewShape::from_parts(&[2, 2], &[])
            .unwrap()
            .is_border_strip());
        assert!(SkewShape::from_parts(&[3, 3, 1], &[2, 0, 0])
            .unwrap()
            .is_border_strip());
        assert!(!SkewShape::from_parts(&[3, 1], &[2])
            .unwrap()
            .is_border_strip());
    }

    #[test]
    fn border_strip_agrees_with_ribbon_when_rows_nonempty() {
        for s in enumerate_skew_shapes(7, 4) {
            if s.row_lengths().contains(&0) {
                continue;
            }
            let cells: Vec<(i64, i64)> = s
                .cells()
                .iter()
                .map(|&(r, c)| (r as i64, c as i64))
                .collect();
            assert_eq!(s.is_border_strip(), is_ribbon(&cells), "{s}");
        }
    }

    #[test]
    fn meld_examples() {
        assert_eq!(meld(&c(&[2, 1]), &c(&[2])).unwrap(), c(&[3]));
        assert_eq!(meld(&c(&[2, 1]), &c(&[1, 1])).unwrap(), c(&[2, 1]));
        assert_eq!(meld(&c(&[3, 1, 2]), &c(&[2, 1])).unwrap(), c(&[4, 2]));
        assert!(meld(&c(&[3, 1, 2]), &c(&[2])).is_err());
    }

    #[test]
    fn refines_examples() {
        assert!(refines(&c(&[1, 1, 1]), &c(&[2, 1])).unwrap());
        assert!(!refines(&c(&[1, 2]), &c(&[2, 1])).unwrap());
        assert!(refines(&c(&[2, 1]), &c(&[2, 1])).unwrap());
        assert!(refines(&c(&[1, 1]), &c(&[2, 1])).is_err());
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(
            enumerate_partitions(3, 3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(0, 3), vec![p(&[])]);
        assert_eq!(
            enumerate_partitions(4, 2),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
        let counts: Vec<usize> = (0..=8).map(|d| partitions_of(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn composition_enumeration() {
        for n in 1..=6 {
            assert_eq!(enumerate_compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&Permutation::identity(3)), p(&[1, 1, 1]));
        assert_eq!(
            cycle_type(&Permutation::new(vec![2, 3, 1]).unwrap()),
            p(&[3])
        );
        assert_eq!(
            cycle_type(&Permutation::new(vec![2, 1, 3]).unwrap()),
            p(&[2, 1])
        );
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn serde_shapes() {
        let s = SkewShape::from_parts(&[3, 2], &[1]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"outer":[3,2],"inner":[1]}"#);
        let back: SkewShape = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(
            serde_json::to_string(&p(&[6, 6, 4, 4, 1, 1])).unwrap(),
            "[6,6,4,4,1,1]"
        );
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
