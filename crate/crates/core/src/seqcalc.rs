//! Exact calculus on integer sequences indexed by `ℤ≥0`: difference `∂`,
//! partial sums `Σ`, convolution `∗`, and the minimum convolution `⋄` of
//! counting functions.

use std::fmt;

use crate::error::{Error, Result};

/// Finitely supported integer sequence `a₀, a₁, …`; zero outside the stored
/// prefix. Trailing zeros are always trimmed, so `==` is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntSeq(Vec<i64>);

impl IntSeq {
    pub fn new(mut values: Vec<i64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        IntSeq(values)
    }

    pub fn zero() -> Self {
        IntSeq(Vec::new())
    }

    /// The unit impulse `(1, 0, 0, …)`.
    pub fn unit() -> Self {
        IntSeq(vec![1])
    }

    pub fn get(&self, j: i64) -> i64 {
        if j < 0 {
            return 0;
        }
        self.0.get(j as usize).copied().unwrap_or(0)
    }

    /// Stored prefix; its length is one past the last nonzero index.
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Values on `[0, n]`, zero padded.
    pub fn window(&self, n: usize) -> Vec<i64> {
        (0..=n as i64).map(|j| self.get(j)).collect()
    }

    /// Keeps indices `0..=n` only.
    pub fn truncate(&self, n: usize) -> IntSeq {
        IntSeq::new(self.0.iter().copied().take(n + 1).collect())
    }

    /// `(∂a)_j = a_j − a_{j−1}` with `a_{−1} = 0`.
    pub fn diff(&self) -> IntSeq {
        let n = self.0.len();
        IntSeq::new(
            (0..=n as i64)
                .map(|j| self.get(j) - self.get(j - 1))
                .collect(),
        )
    }

    /// `(Σa)_j = a₀ + … + a_j` evaluated on the window `[0, n]`.
    pub fn partial_sums(&self, n: usize) -> IntSeq {
        let mut acc = 0i64;
        IntSeq::new(
            (0..=n as i64)
                .map(|j| {
                    acc += self.get(j);
                    acc
                })
                .collect(),
        )
    }

    /// `(a ∗ b)_j = Σ_{k ≤ j} a_k b_{j−k}`.
    pub fn convolve(&self, other: &IntSeq) -> IntSeq {
        if self.is_zero() || other.is_zero() {
            return IntSeq::zero();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (k, &b) in other.0.iter().enumerate() {
                out[i + k] += a * b;
            }
        }
        IntSeq::new(out)
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Nondecreasing integer step function vanishing on `k ≤ 0` and equal to
/// `k − offset` for `k ≥ cutoff`.
///
/// Semigroup counting functions have `offset = δ` and `cutoff` the conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingFn {
    head: Vec<i64>,
    offset: i64,
}

impl CountingFn {
    /// `head` holds the values on `[0, cutoff]`; the tail continues with slope one.
    pub fn new(head: Vec<i64>, offset: i64) -> Result<Self> {
        if head.first() != Some(&0) {
            return Err(Error::InvalidInput(
                "counting function must vanish at 0".into(),
            ));
        }
        if head.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidInput(
                "counting function must be nondecreasing".into(),
            ));
        }
        let cutoff = head.len() as i64 - 1;
        if head[cutoff as usize] != cutoff - offset {
            return Err(Error::InvalidInput(format!(
                "head value {} at cutoff {cutoff} disagrees with tail {cutoff} - {offset}",
                head[cutoff as usize]
            )));
        }
        Ok(CountingFn { head, offset })
    }

    pub fn value(&self, k: i64) -> i64 {
        if k <= 0 {
            0
        } else if (k as usize) < self.head.len() {
            self.head[k as usize]
        } else {
            k - self.offset
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn cutoff(&self) -> i64 {
        self.head.len() as i64 - 1
    }

    /// `h_j = H(j+1)` on `[0, n]`.
    pub fn shifted_window(&self, n: usize) -> IntSeq {
        IntSeq::new((0..=n as i64).map(|j| self.value(j + 1)).collect())
    }

    /// Identity element of `⋄`: the counting function of `ℤ≥0`.
    pub fn identity() -> Self {
        CountingFn {
            head: vec![0],
            offset: 0,
        }
    }

    /// `(f ⋄ g)(j) = min_{j₁+j₂=j} f(j₁) + g(j₂)`.
    ///
    /// Both factors vanish on non-positive arguments and are nondecreasing, so
    /// `j₁ ∈ [0, j]` suffices. Past `cutoff_f + cutoff_g` the minimum is
    /// `j − offset_f − offset_g`.
    pub fn min_convolve(&self, other: &CountingFn) -> CountingFn {
        let cutoff = (self.cutoff() + other.cutoff()) as usize;
        let head = (0..=cutoff as i64)
            .map(|j| {
                (0..=j)
                    .map(|j1| self.value(j1) + other.value(j - j1))
                    .min()
                    .unwrap()
            })
            .collect();
        CountingFn {
            head,
            offset: self.offset + other.offset,
        }
    }

    /// `⋄` over any number of factors; the empty product is [`CountingFn::identity`].
    pub fn min_convolve_all<'a>(fns: impl IntoIterator<Item = &'a CountingFn>) -> CountingFn {
        fns.into_iter()
            .fold(CountingFn::identity(), |acc, f| acc.min_convolve(f))
    }
}
