//! Exact scalars and the combinatorial building blocks used everywhere else:
//! binomial coefficients with zero-fill, multi-indices and index sets.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// The scalar field. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn q(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `numer / denom` as a reduced rational. Panics on a zero denominator.
pub fn q_frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Binomial coefficient over the integers.
///
/// Returns `C(a, b)` when `0 <= b <= a` and zero otherwise, i.e. whenever
/// `a < b` or `b < 0`. Dimension formulas rely on this zero-fill.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// Exponent vector `α ∈ ℕⁿ` of a monomial `x^α`.
///
/// Ordered by total degree first, then reverse-lexicographically on the
/// exponents, so `x1²` sorts before `x1 x2` before `x2²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// `x_axis` in `n` variables.
    pub fn unit(n: usize, axis: usize) -> Self {
        let mut e = vec![0; n];
        e[axis] = 1;
        MultiIndex(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, axis: usize) -> u32 {
        self.0[axis]
    }

    pub fn with(&self, axis: usize, exponent: u32) -> Self {
        let mut e = self.0.clone();
        e[axis] = exponent;
        MultiIndex(e)
    }

    pub fn mul(&self, other: &MultiIndex) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Drops `axis` and shifts the later coordinates down by one.
    pub fn remove_axis(&self, axis: usize) -> Self {
        let mut e = self.0.clone();
        e.remove(axis);
        MultiIndex(e)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A strictly increasing set `σ ⊂ {0, …, n-1}` of axes (zero-based).
///
/// Ordered lexicographically on the element lists within one cardinality;
/// smaller sets sort first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    indices: Vec<usize>,
}

impl IndexSet {
    /// Builds an index set from strictly increasing axes below `n`.
    pub fn new(n: usize, indices: Vec<usize>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "index set must be strictly increasing: {indices:?}"
        );
        assert!(indices.iter().all(|&i| i < n), "index out of range for n={n}");
        IndexSet { n, indices }
    }

    pub fn empty(n: usize) -> Self {
        IndexSet { n, indices: Vec::new() }
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        IndexSet { n, indices: (0..n).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, axis: usize) -> bool {
        self.indices.binary_search(&axis).is_ok()
    }

    /// `σ* = {0, …, n-1} \ σ`.
    pub fn complement(&self) -> IndexSet {
        IndexSet {
            n: self.n,
            indices: (0..self.n).filter(|i| !self.contains(*i)).collect(),
        }
    }

    /// Removes the element at position `pos` (not the axis value).
    pub fn without_position(&self, pos: usize) -> IndexSet {
        let mut indices = self.indices.clone();
        indices.remove(pos);
        IndexSet { n: self.n, indices }
    }

    /// Drops `axis` (which must not be a member) and relabels later axes.
    pub fn remove_axis(&self, axis: usize) -> IndexSet {
        debug_assert!(!self.contains(axis));
        IndexSet {
            n: self.n - 1,
            indices: self
                .indices
                .iter()
                .map(|&i| if i > axis { i - 1 } else { i })
                .collect(),
        }
    }

    /// Sorted union with the sign of the shuffle `σ ++ τ → sorted`,
    /// or `None` if the sets intersect.
    pub fn concat_sorted(&self, other: &IndexSet) -> Option<(IndexSet, i32)> {
        debug_assert_eq!(self.n, other.n);
        let mut seq: Vec<usize> = self.indices.iter().chain(&other.indices).copied().collect();
        let sign = permutation_sign(&seq)?;
        seq.sort_unstable();
        Some((IndexSet { n: self.n, indices: seq }, sign))
    }

    /// `{axis} ∪ σ` with the sign of moving `dx_axis` from the front into place.
    pub fn insert_front(&self, axis: usize) -> Option<(IndexSet, i32)> {
        if self.contains(axis) {
            return None;
        }
        let before = self.indices.iter().filter(|&&i| i < axis).count();
        let mut indices = self.indices.clone();
        indices.insert(before, axis);
        let sign = if before % 2 == 0 { 1 } else { -1 };
        Some((IndexSet { n: self.n, indices }, sign))
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.indices.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// Sign of the permutation sorting `seq`, by inversion count. `None` on repeats.
pub fn permutation_sign(seq: &[usize]) -> Option<i32> {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                Ordering::Greater => inversions += 1,
                Ordering::Equal => return None,
                Ordering::Less => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// All `α ∈ ℕⁿ` with `|α| = r`, in lexicographically decreasing exponent order.
pub fn enumerate_multi_indices(n: usize, r: u32) -> Vec<MultiIndex> {
    fn fill(prefix: &mut Vec<u32>, slots: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(prefix, slots - 1, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(n), n, r, &mut out);
    out
}

/// All `k`-subsets of `{0, …, n-1}` in lexicographic order.
pub fn enumerate_index_sets(n: usize, k: usize) -> Vec<IndexSet> {
    fn fill(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if prefix.len() == k {
            out.push(IndexSet { n, indices: prefix.clone() });
            return;
        }
        for i in start..n {
            prefix.push(i);
            fill(i + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        fill(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}
