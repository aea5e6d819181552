//! Outside decompositions, cutting strips, the # operator, and the two planar
//! networks (Greene's Jacobi-Trudi network and the Hamel-Goulden Giambelli
//! network) with path-family enumeration and skeleton analysis.
//!
//! Contents are col − row with 1-based cells.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::characters::CharacterTable;
use crate::combinatorics::{
    conjugate, factorial, frobenius, prefix_dominated, Partition, Permutation, SkewShape,
};
use crate::error::{Error, Result};
use crate::matrices::{giambelli_matrix, PolynomialMatrix};
use crate::poly::{ExponentVector, SparsePolynomial};
use crate::symmetric::ssyt_schur;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Right,
}

/// Direction of a vertical line of the Giambelli network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineDirection {
    Up,
    Down,
}

fn content(cell: (usize, usize)) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// A border strip placed in the plane, read from its starting box (smallest
/// content) to its ending box (largest content).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Strip {
    cells: Vec<(usize, usize)>,
    start: i64,
    end: i64,
    directions: Vec<Direction>,
}

impl Strip {
    /// Validates a ribbon whose contents form an interval.
    pub fn from_cells(mut cells: Vec<(usize, usize)>) -> Result<Self> {
        let geo: Vec<(i64, i64)> = cells.iter().map(|&(r, c)| (r as i64, c as i64)).collect();
        if !crate::combinatorics::is_ribbon(&geo) {
            return Err(Error::InvalidDecomposition(format!(
                "{cells:?} is not a border strip"
            )));
        }
        cells.sort_by_key(|&cell| content(cell));
        let start = content(cells[0]);
        for (k, &cell) in cells.iter().enumerate() {
            if content(cell) != start + k as i64 {
                return Err(Error::InvalidDecomposition(format!(
                    "{cells:?} has repeated contents"
                )));
            }
        }
        let directions = cells
            .windows(2)
            .map(|w| {
                if w[1].0 == w[0].0 {
                    Direction::Right
                } else {
                    Direction::Up
                }
            })
            .collect();
        let end = start + cells.len() as i64 - 1;
        Ok(Strip {
            cells,
            start,
            end,
            directions,
        })
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Content p(θ) of the starting box.
    pub fn start_content(&self) -> i64 {
        self.start
    }

    /// Content q(θ) of the ending box.
    pub fn end_content(&self) -> i64 {
        self.end
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The strip as a translated skew shape.
    pub fn shape(&self) -> SkewShape {
        shape_of_walk(&self.directions)
    }
}

/// Skew shape traced by a walk of boxes moving right or up.
fn shape_of_walk(directions: &[Direction]) -> SkewShape {
    let ups = directions.iter().filter(|&&d| d == Direction::Up).count();
    let mut row = ups;
    let mut col = 1usize;
    let mut bounds: BTreeMap<usize, (usize, usize)> = BTreeMap::from([(row, (col, col))]);
    for d in directions {
        match d {
            Direction::Right => col += 1,
            Direction::Up => row -= 1,
        }
        let e = bounds.entry(row).or_insert((col, col));
        e.0 = e.0.min(col);
        e.1 = e.1.max(col);
    }
    let outer: Vec<usize> = bounds.values().map(|b| b.1).collect();
    let inner: Vec<usize> = bounds
        .values()
        .map(|b| b.0 - 1)
        .filter(|&x| x > 0)
        .collect();
    SkewShape::from_parts(&outer, &inner).expect("walks trace skew shapes")
}

/// Π = (θ₁, …, θ_k) ordered by decreasing end content.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutsideDecomposition {
    shape: SkewShape,
    strips: Vec<Strip>,
}

impl OutsideDecomposition {
    /// Validates that the strips tile the shape, each starting on the left or
    /// bottom perimeter and ending on the right or top perimeter, with distinct
    /// end contents.
    pub fn new(shape: SkewShape, strips: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let mut strips = strips
            .into_iter()
            .map(Strip::from_cells)
            .collect::<Result<Vec<_>>>()?;
        let all: BTreeSet<(usize, usize)> = shape.cells().into_iter().collect();
        let mut seen = BTreeSet::new();
        for s in &strips {
            for &cell in s.cells() {
                if !all.contains(&cell) {
                    return Err(Error::InvalidDecomposition(format!(
                        "cell {cell:?} is outside {shape}"
                    )));
                }
                if !seen.insert(cell) {
                    return Err(Error::InvalidDecomposition(format!(
                        "cell {cell:?} is covered twice"
                    )));
                }
            }
        }
        if seen.len() != all.len() {
            return Err(Error::InvalidDecomposition(
                "strips do not cover the shape".into(),
            ));
        }
        let inside = |r: usize, c: usize| r >= 1 && c >= 1 && shape.contains(r, c);
        for s in &strips {
            let (r, c) = s.cells()[0];
            if inside(r, c - 1) && inside(r + 1, c) {
                return Err(Error::InvalidDecomposition(format!(
                    "strip starting at {:?} is interior",
                    (r, c)
                )));
            }
            let (r, c) = *s.cells().last().expect("nonempty");
            if inside(r, c + 1) && inside(r - 1, c) {
                return Err(Error::InvalidDecomposition(format!(
                    "strip ending at {:?} is interior",
                    (r, c)
                )));
            }
        }
        strips.sort_by_key(|s| std::cmp::Reverse(s.end));
        if strips.windows(2).any(|w| w[0].end == w[1].end) {
            return Err(Error::InvalidDecomposition(
                "end contents are not distinct".into(),
            ));
        }
        Ok(OutsideDecomposition { shape, strips })
    }

    /// The whole shape as one strip.
    pub fn single(shape: SkewShape) -> Result<Self> {
        let cells = shape.cells();
        OutsideDecomposition::new(shape, vec![cells])
    }

    /// Each row a strip; every row must be nonempty.
    pub fn rows(shape: SkewShape) -> Result<Self> {
        let mut by_row: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for cell in shape.cells() {
            by_row.entry(cell.0).or_default().push(cell);
        }
        if by_row.len() != shape.rows() {
            return Err(Error::InvalidDecomposition(format!(
                "{shape} has an empty row"
            )));
        }
        OutsideDecomposition::new(shape, by_row.into_values().collect())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn strips(&self) -> &[Strip] {
        &self.strips
    }

    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }
}

/// The diagonal hooks of λ, θ_i = (λ_i − i + 1, 1^{λ'_i − i}).
pub fn giambelli_decomposition(lambda: &Partition) -> Result<OutsideDecomposition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let conj = conjugate(lambda);
    let strips = (1..=lambda.rank())
        .map(|i| {
            let mut cells: Vec<(usize, usize)> =
                (i..=conj.part(i - 1)).rev().map(|r| (r, i)).collect();
            cells.extend((i + 1..=lambda.part(i - 1)).map(|c| (i, c)));
            cells
        })
        .collect();
    OutsideDecomposition::new(SkewShape::straight(lambda.clone()), strips)
}

/// The strip φ over contents [c₁, c₂]; `directions[k]` is the step from content
/// c₁ + k to c₁ + k + 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuttingStrip {
    start: i64,
    end: i64,
    directions: Vec<Direction>,
}

impl CuttingStrip {
    pub fn start_content(&self) -> i64 {
        self.start
    }

    pub fn end_content(&self) -> i64 {
        self.end
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn direction_at(&self, c: i64) -> Option<Direction> {
        if c < self.start || c >= self.end {
            return None;
        }
        Some(self.directions[(c - self.start) as usize])
    }

    /// The piece of φ with contents [p, q], as a skew shape.
    pub fn segment(&self, p: i64, q: i64) -> Result<SkewShape> {
        if p > q || p < self.start || q > self.end {
            return Err(Error::InvalidDecomposition(format!(
                "[{p}, {q}] is not inside the cutting strip"
            )));
        }
        let lo = (p - self.start) as usize;
        let hi = (q - self.start) as usize;
        Ok(shape_of_walk(&self.directions[lo..hi]))
    }

    pub fn shape(&self) -> SkewShape {
        shape_of_walk(&self.directions)
    }
}

/// Reads each diagonal's direction off the non-final boxes of the strips.
/// Diagonals with no such box default to right.
pub fn cutting_strip(pi: &OutsideDecomposition) -> Result<CuttingStrip> {
    let start = pi
        .strips
        .iter()
        .map(|s| s.start)
        .min()
        .ok_or(Error::InvalidDecomposition("no strips".into()))?;
    let end = pi.strips.iter().map(|s| s.end).max().expect("nonempty");
    let mut dirs: Vec<Option<Direction>> = vec![None; (end - start) as usize];
    for s in &pi.strips {
        for (k, &d) in s.directions.iter().enumerate() {
            let slot = &mut dirs[(s.start + k as i64 - start) as usize];
            match slot {
                Some(prev) if *prev != d => {
                    return Err(Error::InvalidDecomposition(format!(
                        "diagonal {} has both directions",
                        s.start + k as i64
                    )))
                }
                _ => *slot = Some(d),
            }
        }
    }
    Ok(CuttingStrip {
        start,
        end,
        directions: dirs
            .into_iter()
            .map(|d| d.unwrap_or(Direction::Right))
            .collect(),
    })
}

/// θ_i # θ_j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sharp {
    Strip {
        start: i64,
        end: i64,
        shape: SkewShape,
    },
    Empty,
    Undefined,
}

/// The segment [p(θ_j), q(θ_i)] of φ; Empty when p = q + 1, Undefined when p > q + 1.
pub fn sharp(theta_i: &Strip, theta_j: &Strip, phi: &CuttingStrip) -> Result<Sharp> {
    let p = theta_j.start;
    let q = theta_i.end;
    if p == q + 1 {
        Ok(Sharp::Empty)
    } else if p > q + 1 {
        Ok(Sharp::Undefined)
    } else {
        Ok(Sharp::Strip {
            start: p,
            end: q,
            shape: phi.segment(p, q)?,
        })
    }
}

/// Matrix (s_{θ_i # θ_j}) with Empty ↦ 1 and Undefined ↦ 0.
pub fn hamel_goulden_matrix(pi: &OutsideDecomposition, nvars: usize) -> Result<PolynomialMatrix> {
    let phi = cutting_strip(pi)?;
    let mut rows = Vec::with_capacity(pi.len());
    for ti in &pi.strips {
        let mut row = Vec::with_capacity(pi.len());
        for tj in &pi.strips {
            row.push(match sharp(ti, tj, &phi)? {
                Sharp::Strip { shape, .. } => ssyt_schur(&shape, nvars),
                Sharp::Empty => SparsePolynomial::one(nvars),
                Sharp::Undefined => SparsePolynomial::zero(nvars),
            });
        }
        rows.push(row);
    }
    PolynomialMatrix::new(nvars, rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NetworkKind {
    GreeneJt,
    HamelGouldenGiambelli,
}

/// A path is one horizontal step per column c in [start, end − 1]; `levels[k]`
/// is the depth of the step leaving column start + k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Path {
    pub start: i64,
    pub end: i64,
    pub levels: Vec<i64>,
}

/// Terminals and weight rule of a planar network truncated to ℓ variables.
///
/// Greene: P_i = μ_i − i, Q_i = λ_i − i, levels 1..ℓ weakly increasing, weight
/// x_level. Giambelli: P_i = −β_i, Q_i = α_i + 1, vertical lines go up at
/// contents ≤ 0 and down at contents > 0, and the step leaving column c at
/// depth j has weight x_{j − min(c, 0) + c₁} with c₁ = −β₁.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarNetwork {
    kind: NetworkKind,
    nvars: usize,
    starts: Vec<i64>,
    ends: Vec<i64>,
    offset: i64,
}

pub fn greene_network(shape: &SkewShape, nvars: usize) -> PlanarNetwork {
    let n = shape.rows();
    let starts = (0..n)
        .map(|i| shape.inner().part(i) as i64 - (i as i64 + 1))
        .collect();
    let ends = (0..n)
        .map(|i| shape.outer().part(i) as i64 - (i as i64 + 1))
        .collect();
    PlanarNetwork {
        kind: NetworkKind::GreeneJt,
        nvars,
        starts,
        ends,
        offset: 0,
    }
}

pub fn giambelli_network(lambda: &Partition, nvars: usize) -> Result<PlanarNetwork> {
    let frob = frobenius(lambda)?;
    let starts: Vec<i64> = frob.legs.iter().map(|&b| -(b as i64)).collect();
    let ends = frob.arms.iter().map(|&a| a as i64 + 1).collect();
    let offset = starts[0];
    Ok(PlanarNetwork {
        kind: NetworkKind::HamelGouldenGiambelli,
        nvars,
        starts,
        ends,
        offset,
    })
}

impl PlanarNetwork {
    pub fn kind(&self) -> NetworkKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.starts.len()
    }

    /// Columns of P_1, …, P_n.
    pub fn starts(&self) -> &[i64] {
        &self.starts
    }

    /// Columns of Q_1, …, Q_n.
    pub fn ends(&self) -> &[i64] {
        &self.ends
    }

    /// Vertical line direction at column c (Giambelli only).
    pub fn line_direction(&self, c: i64) -> Option<LineDirection> {
        match self.kind {
            NetworkKind::GreeneJt => None,
            NetworkKind::HamelGouldenGiambelli => Some(if c <= 0 {
                LineDirection::Up
            } else {
                LineDirection::Down
            }),
        }
    }

    /// 1-based variable index of the step leaving column c at depth `level`,
    /// or None when the step is outside x₁..x_ℓ.
    pub fn weight_index(&self, c: i64, level: i64) -> Option<usize> {
        let idx = match self.kind {
            NetworkKind::GreeneJt => level,
            NetworkKind::HamelGouldenGiambelli => level - (c.min(0) - self.offset),
        };
        (1..=self.nvars as i64)
            .contains(&idx)
            .then_some(idx as usize)
    }

    fn level_of(&self, c: i64, idx: i64) -> i64 {
        match self.kind {
            NetworkKind::GreeneJt => idx,
            NetworkKind::HamelGouldenGiambelli => idx + c.min(0) - self.offset,
        }
    }

    /// Whether a step with index `next` may follow `prev` across the line at column c.
    fn admissible(&self, c: i64, prev: i64, next: i64) -> bool {
        match self.kind {
            NetworkKind::GreeneJt => next >= prev,
            NetworkKind::HamelGouldenGiambelli if c <= 0 => next < prev,
            NetworkKind::HamelGouldenGiambelli => next >= prev,
        }
    }

    /// All paths from P_j to Q_i (0-based).
    pub fn paths(&self, j: usize, i: usize) -> Vec<Path> {
        let (a, b) = (self.starts[j], self.ends[i]);
        if b < a {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx = Vec::with_capacity((b - a) as usize);
        self.extend_paths(a, b, &mut idx, &mut out);
        out
    }

    fn extend_paths(&self, a: i64, b: i64, idx: &mut Vec<i64>, out: &mut Vec<Path>) {
        let c = a + idx.len() as i64;
        if c == b {
            let levels = idx
                .iter()
                .enumerate()
                .map(|(k, &x)| self.level_of(a + k as i64, x))
                .collect();
            out.push(Path {
                start: a,
                end: b,
                levels,
            });
            return;
        }
        for x in 1..=self.nvars as i64 {
            if idx.last().is_none_or(|&prev| self.admissible(c, prev, x)) {
                idx.push(x);
                self.extend_paths(a, b, idx, out);
                idx.pop();
            }
        }
    }

    /// Exponent vector of a path's weight.
    pub fn path_weight(&self, path: &Path) -> Result<ExponentVector> {
        let mut e = ExponentVector::zero(self.nvars);
        for (k, &level) in path.levels.iter().enumerate() {
            let c = path.start + k as i64;
            let idx = self.weight_index(c, level).ok_or_else(|| {
                Error::InvalidConfig(format!("no step leaves column {c} at level {level}"))
            })?;
            e.0[idx - 1] += 1;
        }
        Ok(e)
    }

    /// Σ of path weights from P_j to Q_i.
    pub fn generating_function(&self, j: usize, i: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.nvars);
        for p in self.paths(j, i) {
            out.add_term(
                self.path_weight(&p).expect("enumerated paths are weighted"),
                BigInt::from(1),
            );
        }
        out
    }
}

/// Multiset of horizontal steps (column, level, count); vertical edges are
/// determined by these through flow conservation.
pub type Skeleton = Vec<(i64, i64, usize)>;

/// n paths with path i running P_{π(i)} → Q_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub pi: Permutation,
    pub paths: Vec<Path>,
    pub skeleton: Skeleton,
    pub weight: ExponentVector,
}

impl Serialize for PathFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dump<'a> {
            pi: Vec<usize>,
            weight: &'a [u32],
            skeleton: &'a Skeleton,
        }
        Dump {
            pi: self.pi.images(),
            weight: &self.weight.0,
            skeleton: &self.skeleton,
        }
        .serialize(s)
    }
}

/// Every family of the network; errors once more than `max_families` would be built.
pub fn enumerate_path_families(
    net: &PlanarNetwork,
    max_families: usize,
) -> Result<Vec<PathFamily>> {
    let n = net.order();
    let table: Vec<Vec<(Path, ExponentVector)>> = (0..n * n)
        .map(|k| {
            let (j, i) = (k / n, k % n);
            net.paths(j, i)
                .into_iter()
                .map(|p| {
                    let w = net.path_weight(&p).expect("enumerated paths are weighted");
                    (p, w)
                })
                .collect()
        })
        .collect();
    let pair = |j: usize, i: usize| &table[j * n + i];

    let mut total: u128 = 0;
    let perms = Permutation::all(n);
    for pi in &perms {
        let count: u128 = (0..n).map(|i| pair(pi.apply(i), i).len() as u128).product();
        total += count;
        if total > max_families as u128 {
            return Err(Error::ResourceBound(format!(
                "more than {max_families} path families"
            )));
        }
    }

    let mut out = Vec::with_capacity(total as usize);
    for pi in perms {
        let choices: Vec<&Vec<(Path, ExponentVector)>> =
            (0..n).map(|i| pair(pi.apply(i), i)).collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; n];
        loop {
            let mut weight = ExponentVector::zero(net.nvars);
            let mut steps: BTreeMap<(i64, i64), usize> = BTreeMap::new();
            let mut paths = Vec::with_capacity(n);
            for (i, &k) in pick.iter().enumerate() {
                let (p, w) = &choices[i][k];
                for (x, y) in weight.0.iter_mut().zip(&w.0) {
                    *x += y;
                }
                for (s, &level) in p.levels.iter().enumerate() {
                    *steps.entry((p.start + s as i64, level)).or_default() += 1;
                }
                paths.push(p.clone());
            }
            let skeleton = steps.into_iter().map(|((c, l), m)| (c, l, m)).collect();
            out.push(PathFamily {
                pi: pi.clone(),
                paths,
                skeleton,
                weight,
            });

            // odometer over the per-row choices
            let mut r = n;
            loop {
                if r == 0 {
                    break;
                }
                r -= 1;
                pick[r] += 1;
                if pick[r] < choices[r].len() {
                    break;
                }
                pick[r] = 0;
                if r == 0 {
                    r = usize::MAX;
                    break;
                }
            }
            if r == usize::MAX || n == 0 {
                break;
            }
        }
    }
    Ok(out)
}

/// Σ_F χ^ν(π_F) x^{α_F}.
pub fn family_immanant(
    families: &[PathFamily],
    nu: &Partition,
    nvars: usize,
) -> Result<SparsePolynomial> {
    let table = CharacterTable::shared(nu.size());
    let mut out = SparsePolynomial::zero(nvars);
    for f in families {
        if f.pi.degree() != nu.size() {
            return Err(Error::SizeMismatch {
                left: f.pi.degree(),
                right: nu.size(),
            });
        }
        let chi = table.value(nu, &f.pi.cycle_type())?;
        out.add_term(f.weight.clone(), BigInt::from(chi));
    }
    Ok(out)
}

/// Closed interval [first, last] of row indices, 1-based.
pub type Interval = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "intervals", rename_all = "kebab-case")]
pub enum SkeletonVerdict {
    /// The permutations form S_{J₁} · S_{J₂} ⋯ for these intervals.
    Verified(Vec<Interval>),
    /// No interval sequence reproduces the multiset.
    NoFactorization,
    /// The search budget ran out before a decision.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonGroup {
    pub skeleton: Skeleton,
    pub permutations: Vec<Permutation>,
    pub verdict: SkeletonVerdict,
}

const SKELETON_SEARCH_BUDGET: usize = 200_000;

/// Groups families by skeleton and searches, per group, for intervals whose
/// symmetric groups multiply to the group's permutation multiset.
pub fn skeleton_groups(families: &[PathFamily]) -> Vec<SkeletonGroup> {
    let mut groups: BTreeMap<Skeleton, Vec<Permutation>> = BTreeMap::new();
    for f in families {
        groups
            .entry(f.skeleton.clone())
            .or_default()
            .push(f.pi.clone());
    }
    groups
        .into_iter()
        .map(|(skeleton, mut permutations)| {
            permutations.sort();
            let verdict = factor_into_intervals(&permutations);
            SkeletonGroup {
                skeleton,
                permutations,
                verdict,
            }
        })
        .collect()
}

type Multiset = BTreeMap<Vec<usize>, u64>;

/// The multiset {σ₁σ₂⋯σ_m : σ_k ∈ S_{J_k}} for 1-based intervals.
pub fn interval_product(n: usize, intervals: &[Interval]) -> Vec<Permutation> {
    let mut m: Multiset = BTreeMap::from([((0..n).collect(), 1)]);
    for &(a, b) in intervals {
        m = times_interval(&m, a - 1, b - 1);
    }
    let mut out = Vec::new();
    for (p, k) in m {
        for _ in 0..k {
            out.push(Permutation::from_zero_based(p.clone()));
        }
    }
    out
}

fn times_interval(m: &Multiset, a: usize, b: usize) -> Multiset {
    let block: Vec<Permutation> = Permutation::all(b - a + 1);
    let mut out = Multiset::new();
    for (p, &k) in m {
        for s in &block {
            let mut q = p.clone();
            for i in a..=b {
                q[i] = p[a + s.apply(i - a)];
            }
            *out.entry(q).or_default() += k;
        }
    }
    out
}

fn factor_into_intervals(perms: &[Permutation]) -> SkeletonVerdict {
    let n = perms[0].degree();
    let mut target = Multiset::new();
    for p in perms {
        *target.entry(p.images_zero_based().to_vec()).or_default() += 1;
    }
    let count = perms.len() as u128;
    let moved: BTreeSet<usize> = perms
        .iter()
        .flat_map(|p| (0..n).filter(|&i| p.apply(i) != i).collect::<Vec<_>>())
        .collect();
    let intervals: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| (a..=b).all(|i| moved.contains(&i)))
        .collect();

    let start: Multiset = BTreeMap::from([((0..n).collect(), 1)]);
    let mut seen: HashSet<Vec<(Vec<usize>, u64)>> = HashSet::new();
    let mut budget = SKELETON_SEARCH_BUDGET;
    let mut seq = Vec::new();
    match search(
        &start,
        1,
        count,
        &target,
        &intervals,
        &mut seq,
        &mut seen,
        &mut budget,
    ) {
        Some(found) => {
            SkeletonVerdict::Verified(found.into_iter().map(|(a, b)| (a + 1, b + 1)).collect())
        }
        None if budget == 0 => SkeletonVerdict::Inconclusive,
        None => SkeletonVerdict::NoFactorization,
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    current: &Multiset,
    size: u128,
    count: u128,
    target: &Multiset,
    intervals: &[(usize, usize)],
    seq: &mut Vec<(usize, usize)>,
    seen: &mut HashSet<Vec<(Vec<usize>, u64)>>,
    budget: &mut usize,
) -> Option<Vec<(usize, usize)>> {
    if size == count {
        return (current == target).then(|| seq.clone());
    }
    for &(a, b) in intervals {
        let f = factorial(b - a + 1);
        if !count.is_multiple_of(size * f) {
            continue;
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let next = times_interval(current, a, b);
        if !seen.insert(next.iter().map(|(k, v)| (k.clone(), *v)).collect()) {
            continue;
        }
        seq.push((a, b));
        if let Some(found) = search(&next, size * f, count, target, intervals, seq, seen, budget) {
            return Some(found);
        }
        seq.pop();
    }
    None
}

/// Dominance-largest exponent of Imm_ν G_λ and its coefficient.
pub fn leading_coefficient(
    lambda: &Partition,
    nu: &Partition,
    nvars: usize,
) -> Result<(ExponentVector, BigInt)> {
    if nvars < lambda.size() {
        return Err(Error::InsufficientVariables {
            nvars,
            degree: lambda.size(),
        });
    }
    let g = giambelli_matrix(lambda, nvars)?;
    let imm = crate::matrices::immanant(&g, nu)?;
    leading_term(&imm)
}

/// Leading terms of every immanant of G_λ, computed from one set of class sums.
pub fn leading_coefficients(
    lambda: &Partition,
    nvars: usize,
) -> Result<BTreeMap<Partition, (ExponentVector, BigInt)>> {
    if nvars < lambda.size() {
        return Err(Error::InsufficientVariables {
            nvars,
            degree: lambda.size(),
        });
    }
    let g = giambelli_matrix(lambda, nvars)?;
    g.all_immanants()
        .into_iter()
        .map(|(nu, imm)| Ok((nu, leading_term(&imm)?)))
        .collect()
}

fn leading_term(f: &SparsePolynomial) -> Result<(ExponentVector, BigInt)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sorted: BTreeSet<Partition> = f.exponents().map(|e| e.sorted()).collect();
    let maxima: Vec<&Partition> = sorted
        .iter()
        .filter(|a| {
            !sorted
                .iter()
                .any(|b| b != *a && prefix_dominated(a.parts(), b.parts()))
        })
        .collect();
    if maxima.len() != 1 {
        return Err(Error::NonUniqueMaximum(
            maxima.iter().map(|p| p.parts().to_vec()).collect(),
        ));
    }
    let e = ExponentVector::from_partition(maxima[0], f.nvars());
    let c = f.coefficient(&e);
    Ok((e, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{immanant, jt_matrix};
    use crate::symmetric::h_poly;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::from_parts(o, i).unwrap()
    }

    /// The decomposition of (6,5,5,4,3)/(3,3,1,1) into six strips.
    fn fig1() -> OutsideDecomposition {
        OutsideDecomposition::new(
            sk(&[6, 5, 5, 4, 3], &[3, 3, 1, 1]),
            vec![
                vec![(1, 4), (1, 5), (1, 6)],
                vec![(2, 4), (2, 5)],
                vec![(4, 4), (3, 4), (3, 5)],
                vec![(4, 2), (4, 3), (3, 3)],
                vec![(3, 2)],
                vec![(5, 1), (5, 2), (5, 3)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn giambelli_decomposition_examples() {
        let d = giambelli_decomposition(&p(&[6, 6, 4, 4, 1, 1])).unwrap();
        let shapes: Vec<SkewShape> = d.strips().iter().map(|s| s.shape()).collect();
        assert_eq!(
            shapes,
            vec![
                SkewShape::straight(p(&[6, 1, 1, 1, 1, 1])),
                SkewShape::straight(p(&[5, 1, 1])),
                SkewShape::straight(p(&[2, 1])),
                SkewShape::straight(p(&[1])),
            ]
        );
        let d = giambelli_decomposition(&p(&[2, 2])).unwrap();
        assert_eq!(d.strips()[0].shape(), SkewShape::straight(p(&[2, 1])));
        assert_eq!(d.strips()[1].shape(), SkewShape::straight(p(&[1])));
        assert_eq!(giambelli_decomposition(&p(&[1])).unwrap().len(), 1);
        assert_eq!(
            giambelli_decomposition(&Partition::empty()),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn decomposition_validation() {
        let shape = sk(&[2, 2], &[]);
        // a 2×2 block is not a strip
        assert!(OutsideDecomposition::single(shape.clone()).is_err());
        // missing cell
        assert!(OutsideDecomposition::new(shape.clone(), vec![vec![(1, 1), (1, 2)]]).is_err());
        // columns are a valid decomposition
        assert!(OutsideDecomposition::new(
            shape.clone(),
            vec![vec![(2, 1), (1, 1)], vec![(1, 2), (2, 2)]]
        )
        .is_ok());
        assert!(OutsideDecomposition::rows(shape).is_ok());
        // the middle box of a 3×3 square is interior
        let square = sk(&[3, 3, 3], &[]);
        let strips = vec![
            vec![(1, 1), (1, 2), (1, 3)],
            vec![(2, 1)],
            vec![(2, 2)],
            vec![(2, 3)],
            vec![(3, 1), (3, 2), (3, 3)],
        ];
        let err = OutsideDecomposition::new(square, strips).unwrap_err();
        assert!(err.to_string().contains("interior"), "{err}");
    }

    #[test]
    fn fig1_cutting_strip() {
        let phi = cutting_strip(&fig1()).unwrap();
        assert_eq!((phi.start_content(), phi.end_content()), (-4, 5));
        use Direction::{Right as R, Up as U};
        assert_eq!(phi.directions(), &[R, R, R, U, U, R, R, R, R]);
        let ends: Vec<i64> = fig1().strips().iter().map(|s| s.end_content()).collect();
        assert_eq!(ends, vec![5, 3, 2, 0, -1, -2]);
    }

    #[test]
    fn fig1_sharp_table() {
        let d = fig1();
        let phi = cutting_strip(&d).unwrap();
        let s = |i: usize, j: usize| sharp(&d.strips()[i - 1], &d.strips()[j - 1], &phi).unwrap();
        let shape = |i, j| match s(i, j) {
            Sharp::Strip { shape, .. } => shape,
            other => panic!("{other:?}"),
        };
        assert_eq!(shape(1, 5), sk(&[5, 1, 1], &[]));
        assert_eq!(s(5, 1), Sharp::Undefined);
        assert_eq!(shape(2, 3), sk(&[3, 1], &[]));
        assert_eq!(shape(3, 2), sk(&[1], &[]));
        assert_eq!(shape(4, 6), sk(&[4, 4], &[3]));
        assert_eq!(shape(6, 4), sk(&[1], &[]));
        // p(θ_j) = q(θ_i) + 1
        assert_eq!(s(6, 5), Sharp::Empty);
    }

    #[test]
    fn giambelli_cutting_strip_is_largest_hook() {
        let d = giambelli_decomposition(&p(&[6, 6, 4, 4, 1, 1])).unwrap();
        assert_eq!(
            cutting_strip(&d).unwrap().shape(),
            SkewShape::straight(p(&[6, 1, 1, 1, 1, 1]))
        );
    }

    #[test]
    fn single_strip_cutting_strip() {
        let shape = sk(&[3, 3, 1], &[2, 0]);
        assert!(shape.is_border_strip());
        let d = OutsideDecomposition::single(shape.clone()).unwrap();
        assert_eq!(cutting_strip(&d).unwrap().shape(), shape);
        let m = hamel_goulden_matrix(&d, 3).unwrap();
        assert_eq!(m.order(), 1);
        assert_eq!(m.entry(0, 0), &ssyt_schur(&shape, 3));
    }

    #[test]
    fn hamel_goulden_fig1() {
        let d = fig1();
        let m = hamel_goulden_matrix(&d, 3).unwrap();
        assert_eq!(m.determinant(), ssyt_schur(d.shape(), 3));
    }

    #[test]
    fn hamel_goulden_giambelli_and_rows() {
        for size in 1..=8 {
            for lambda in crate::combinatorics::partitions_of(size) {
                let d = giambelli_decomposition(&lambda).unwrap();
                let hg = hamel_goulden_matrix(&d, 3).unwrap();
                assert_eq!(hg, giambelli_matrix(&lambda, 3).unwrap(), "{lambda}");
                assert_eq!(
                    hg.determinant(),
                    ssyt_schur(&SkewShape::straight(lambda.clone()), 3),
                    "{lambda}"
                );
            }
        }
        for shape in crate::combinatorics::enumerate_skew_shapes(5, 3) {
            if let Ok(d) = OutsideDecomposition::rows(shape.clone()) {
                assert_eq!(
                    hamel_goulden_matrix(&d, 2).unwrap(),
                    jt_matrix(&shape, 2),
                    "{shape}"
                );
            }
        }
    }

    #[test]
    fn greene_path_counts_and_weights() {
        let shape = sk(&[4, 2, 1], &[1, 1]);
        let net = greene_network(&shape, 3);
        for i in 0..3 {
            for j in 0..3 {
                let k = (shape.outer().part(i) as i64 - i as i64)
                    - (shape.inner().part(j) as i64 - j as i64);
                let expected = if k < 0 {
                    0
                } else {
                    (k as u128 + 2) * (k as u128 + 1) / 2
                };
                assert_eq!(net.paths(j, i).len() as u128, expected);
                assert_eq!(net.generating_function(j, i), h_poly(k, 3));
            }
        }
        let net = greene_network(&sk(&[2, 1], &[]), 2);
        assert_eq!(net.paths(0, 0).len(), 3);
        assert_eq!(net.generating_function(0, 0), h_poly(2, 2));
    }

    #[test]
    fn giambelli_terminals() {
        let net = giambelli_network(&p(&[6, 6, 4, 4, 1, 1]), 6).unwrap();
        assert_eq!(net.starts(), &[-5, -2, -1, 0]);
        assert_eq!(net.ends(), &[6, 5, 2, 1]);
        assert_eq!(net.line_direction(0), Some(LineDirection::Up));
        assert_eq!(net.line_direction(1), Some(LineDirection::Down));
    }

    #[test]
    fn fig3_family_weight() {
        let net = giambelli_network(&p(&[6, 6, 4, 4, 1, 1]), 6).unwrap();
        // figure height y corresponds to depth (1 − c₁) − y
        let depth = |y: i64| 6 - y;
        let path = |j: usize, y: i64| {
            let (a, b) = (net.starts()[j], net.ends()[j]);
            Path {
                start: a,
                end: b,
                levels: vec![depth(y); (b - a) as usize],
            }
        };
        let family = [path(0, 0), path(1, 0), path(2, -1), path(3, -2)];
        let weights: Vec<ExponentVector> =
            family.iter().map(|q| net.path_weight(q).unwrap()).collect();
        assert_eq!(weights[0].0, vec![6, 1, 1, 1, 1, 1]);
        assert_eq!(weights[1].0, vec![5, 1, 1, 0, 0, 0]);
        assert_eq!(weights[2].0, vec![0, 2, 1, 0, 0, 0]);
        assert_eq!(weights[3].0, vec![0, 0, 1, 0, 0, 0]);
        let total: Vec<u32> = (0..6).map(|v| weights.iter().map(|w| w[v]).sum()).collect();
        assert_eq!(total, vec![11, 4, 4, 1, 1, 1]);
        for (j, q) in family.iter().enumerate() {
            assert!(net.paths(j, j).contains(q));
        }
    }

    #[test]
    fn giambelli_paths_are_hooks() {
        let lambda = p(&[2, 2]);
        let net = giambelli_network(&lambda, 3).unwrap();
        let g = giambelli_matrix(&lambda, 3).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(&net.generating_function(j, i), g.entry(i, j));
            }
        }
        let d = giambelli_decomposition(&lambda).unwrap();
        let hg = hamel_goulden_matrix(&d, 3).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(&net.generating_function(j, i), hg.entry(i, j));
            }
        }
    }

    #[test]
    fn family_sum_matches_immanant() {
        let shape = sk(&[2, 1], &[]);
        let net = greene_network(&shape, 2);
        let fams = enumerate_path_families(&net, 10_000).unwrap();
        let m = jt_matrix(&shape, 2);
        for nu in crate::combinatorics::partitions_of(2) {
            assert_eq!(
                family_immanant(&fams, &nu, 2).unwrap(),
                immanant(&m, &nu).unwrap()
            );
        }
    }

    #[test]
    fn family_sums_small_cases() {
        for shape in crate::combinatorics::enumerate_skew_shapes(6, 3) {
            for nvars in 1..=3 {
                let net = greene_network(&shape, nvars);
                let fams = enumerate_path_families(&net, 200_000).unwrap();
                let m = jt_matrix(&shape, nvars);
                for nu in crate::combinatorics::partitions_of(shape.rows()) {
                    assert_eq!(
                        family_immanant(&fams, &nu, nvars).unwrap(),
                        immanant(&m, &nu).unwrap(),
                        "{shape} {nu}"
                    );
                }
            }
        }
        for size in 1..=6 {
            for lambda in crate::combinatorics::partitions_of(size) {
                for nvars in 1..=3 {
                    let net = giambelli_network(&lambda, nvars).unwrap();
                    let fams = enumerate_path_families(&net, 200_000).unwrap();
                    let m = giambelli_matrix(&lambda, nvars).unwrap();
                    for nu in crate::combinatorics::partitions_of(lambda.rank()) {
                        assert_eq!(
                            family_immanant(&fams, &nu, nvars).unwrap(),
                            immanant(&m, &nu).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn one_row_has_one_family() {
        let net = greene_network(&sk(&[3], &[]), 1);
        let fams = enumerate_path_families(&net, 10).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].pi, Permutation::identity(1));
        assert_eq!(fams[0].skeleton, vec![(-1, 1, 1), (0, 1, 1), (1, 1, 1)]);
    }

    #[test]
    fn resource_bound() {
        let net = greene_network(&sk(&[4, 4, 4], &[]), 3);
        assert!(matches!(
            enumerate_path_families(&net, 10),
            Err(Error::ResourceBound(_))
        ));
    }

    #[test]
    fn family_json() {
        let net = greene_network(&sk(&[1], &[]), 1);
        let fams = enumerate_path_families(&net, 10).unwrap();
        assert_eq!(
            serde_json::to_string(&fams[0]).unwrap(),
            r#"{"pi":[1],"weight":[1],"skeleton":[[-1,1,1]]}"#
        );
    }

    #[test]
    fn interval_products() {
        let prod = interval_product(3, &[(1, 2), (2, 3)]);
        assert_eq!(prod.len(), 4);
        assert_eq!(interval_product(3, &[]), vec![Permutation::identity(3)]);
        assert_eq!(interval_product(3, &[(1, 3)]).len(), 6);
    }

    #[test]
    fn one_level_skeleton_is_chain_of_transpositions() {
        // rows 1,2 and rows 2,3 overlap but rows 1,3 do not
        let net = greene_network(&sk(&[2, 2, 2], &[1, 1]), 1);
        let fams = enumerate_path_families(&net, 100).unwrap();
        let groups = skeleton_groups(&fams);
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].permutations.len(), 4);
        match &groups[0].verdict {
            SkeletonVerdict::Verified(js) => {
                let mut js = js.clone();
                js.sort();
                assert_eq!(js, vec![(1, 2), (2, 3)]);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn disjoint_skeleton_is_identity() {
        let net = greene_network(&sk(&[3, 1], &[]), 2);
        let fams = enumerate_path_families(&net, 1000).unwrap();
        let groups = skeleton_groups(&fams);
        let id = groups
            .iter()
            .find(|g| g.permutations == vec![Permutation::identity(2)])
            .unwrap();
        assert_eq!(id.verdict, SkeletonVerdict::Verified(vec![]));
    }

    #[test]
    fn skeletons_verify_small() {
        let net = greene_network(&sk(&[2, 1], &[]), 2);
        let fams = enumerate_path_families(&net, 1000).unwrap();
        for g in skeleton_groups(&fams) {
            assert!(matches!(g.verdict, SkeletonVerdict::Verified(_)), "{g:?}");
        }
        for shape in crate::combinatorics::enumerate_skew_shapes(5, 3) {
            let net = greene_network(&shape, 2);
            let fams = enumerate_path_families(&net, 100_000).unwrap();
            for g in skeleton_groups(&fams) {
                match &g.verdict {
                    SkeletonVerdict::Verified(js) => {
                        let prod: u128 = js.iter().map(|&(a, b)| factorial(b - a + 1)).product();
                        assert_eq!(prod, g.permutations.len() as u128);
                        let mut want = interval_product(shape.rows(), js);
                        want.sort();
                        assert_eq!(want, g.permutations);
                    }
                    v => panic!("{shape}: {v:?}"),
                }
            }
        }
    }

    #[test]
    fn leading_coefficient_examples() {
        let (e, c) = leading_coefficient(&p(&[2, 2]), &p(&[2]), 4).unwrap();
        assert_eq!((e.0, c), (vec![3, 1, 0, 0], BigInt::from(2)));
        let (e, c) = leading_coefficient(&p(&[2, 2]), &p(&[1, 1]), 4).unwrap();
        assert_eq!((e.0, c), (vec![2, 2, 0, 0], BigInt::from(1)));
        let (e, c) = leading_coefficient(&p(&[2, 1]), &p(&[1]), 3).unwrap();
        assert_eq!((e.0, c), (vec![2, 1, 0], BigInt::from(1)));
        assert!(leading_coefficient(&p(&[2, 1]), &p(&[1]), 2).is_err());
    }

    #[test]
    fn leading_coefficients_are_factorial_products() {
        for size in 1..=6 {
            for lambda in crate::combinatorics::partitions_of(size) {
                for (nu, (_, c)) in leading_coefficients(&lambda, size).unwrap() {
                    assert_eq!(c, BigInt::from(nu.factorial_product()), "{lambda} {nu}");
                }
            }
        }
    }
}
