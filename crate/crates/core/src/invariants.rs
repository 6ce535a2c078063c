//! Invariants of a cusp collection: Alexander polynomials `Δ`, the quotient
//! `Q` of `Δ(t) = 1 + δ(t−1) + (t−1)²Q(t)`, the functions `H` (min-convolution
//! of counting functions) and `F` (sequence calculus on the `Δ_i`
//! coefficients), the sparse polynomial `R`, and the normalized Euler
//! characteristics of the lattice cohomology of `S³₋d(K)`.
//!
//! Two independent routes are kept for `q`: polynomial division of `Δ`, and
//! `F(j) = q_{2δ−2−j}` from the sequence calculus.

use std::fmt;

use serde::Serialize;

use crate::cusp::CuspType;
use crate::error::{Error, Result};
use crate::semigroup::{MultSeq, Semigroup};
use crate::seqcalc::{CountingFn, IntSeq};

/// Integer polynomial in `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly(IntSeq);

impl IntPoly {
    pub fn new(coeffs: IntSeq) -> Self {
        IntPoly(coeffs)
    }

    pub fn coeffs(&self) -> &IntSeq {
        &self.0
    }

    pub fn coeff(&self, j: i64) -> i64 {
        self.0.get(j)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.support_len().checked_sub(1)
    }

    pub fn eval_one(&self) -> i64 {
        self.0.values().iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let v = self.0.values();
        v.iter().eq(v.iter().rev())
    }

    /// `t^n P(1/t) = P(t)`.
    pub fn is_symmetric_about(&self, n: usize) -> bool {
        self.0.support_len() <= n + 1
            && (0..=n as i64).all(|j| self.coeff(j) == self.coeff(n as i64 - j))
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        IntPoly(self.0.convolve(&other.0))
    }

    /// Exact division by `t − 1`; a nonzero remainder is reported.
    pub fn div_t_minus_one(&self) -> Result<IntPoly> {
        let a = self.0.values();
        if a.is_empty() {
            return Ok(IntPoly::default());
        }
        let n = a.len() - 1;
        let mut b = vec![0i64; n];
        let mut carry = 0i64;
        for k in (1..=n).rev() {
            carry += a[k];
            b[k - 1] = carry;
        }
        let remainder = a[0] + carry;
        if remainder != 0 {
            return Err(Error::Inconsistent(format!(
                "division by (t-1) leaves remainder {remainder}"
            )));
        }
        Ok(IntPoly(IntSeq::new(b)))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.0.values().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (j, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{j}")?,
                _ => write!(f, "{a}t^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Δ(t) = (1−t)·Σ_{k∈Γ} t^k`, computed as `(1−t)·Σ_{k∈Γ, k<c} t^k + t^c`
/// with `c` the conductor.
pub fn alexander(s: &Semigroup) -> IntPoly {
    let c = s.conductor() as usize;
    let mut coeffs = vec![0i64; c + 1];
    for k in 0..c {
        if s.contains(k as u64) {
            coeffs[k] += 1;
            coeffs[k + 1] -= 1;
        }
    }
    coeffs[c] += 1;
    IntPoly(IntSeq::new(coeffs))
}

/// One cusp: the literal it was given as and its semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cusp {
    pub ty: CuspType,
    pub semigroup: Semigroup,
}

/// The `ν ≥ 1` cusps of a (candidate) curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspCollection {
    cusps: Vec<Cusp>,
}

/// Euler characteristics for one Spin^c index, with the per-`j` terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuReport {
    pub d: u64,
    pub a: u64,
    pub eu_h0: i64,
    pub eu_hstar: i64,
    pub terms: Vec<EuTerm>,
}

/// `H(j+1) + δ−1−j` and `F(j) + δ−1−j` for one `j ≡ a (mod d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EuTerm {
    pub j: u64,
    pub h_term: i64,
    pub f_term: i64,
}

impl CuspCollection {
    pub fn new(types: Vec<CuspType>) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::InvalidInput(
                "a cusp collection needs at least one cusp".into(),
            ));
        }
        let cusps = types
            .into_iter()
            .map(|ty| {
                let semigroup = ty.semigroup()?;
                Ok(Cusp { ty, semigroup })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CuspCollection { cusps })
    }

    pub fn from_multseqs(seqs: &[MultSeq]) -> Result<Self> {
        CuspCollection::new(seqs.iter().cloned().map(CuspType::MultSeq).collect())
    }

    /// Whitespace- or comma-separated cusp literals, e.g. `"[6] [2_4] [2_2]"`.
    pub fn parse(text: &str) -> Result<Self> {
        CuspCollection::new(crate::cusp::parse_literals(text, 1, 1)?)
    }

    pub fn cusps(&self) -> &[Cusp] {
        &self.cusps
    }

    pub fn nu(&self) -> usize {
        self.cusps.len()
    }

    pub fn deltas(&self) -> Vec<u64> {
        self.cusps.iter().map(|c| c.semigroup.delta()).collect()
    }

    pub fn delta(&self) -> u64 {
        self.deltas().iter().sum()
    }

    /// Multiplicity sequences of all cusps.
    pub fn multseqs(&self) -> Vec<MultSeq> {
        self.cusps
            .iter()
            .map(|c| match &c.ty {
                CuspType::MultSeq(ms) => ms.clone(),
                _ => c.semigroup.multseq().expect("validated at construction"),
            })
            .collect()
    }

    pub fn alexander_product(&self) -> IntPoly {
        self.cusps
            .iter()
            .map(|c| alexander(&c.semigroup))
            .fold(IntPoly(IntSeq::unit()), |acc, p| acc.mul(&p))
    }

    /// Coefficients `q_0..q_{2δ−2}` of `Q` by exact division.
    pub fn q_coefficients(&self) -> Result<IntSeq> {
        let delta = self.delta() as i64;
        let mut v = self.alexander_product().coeffs().values().to_vec();
        v.resize(v.len().max(2), 0);
        v[0] -= 1 - delta;
        v[1] -= delta;
        IntPoly(IntSeq::new(v))
            .div_t_minus_one()?
            .div_t_minus_one()
            .map(|q| q.0)
    }

    pub fn h_fn(&self) -> CountingFn {
        let fns: Vec<CountingFn> = self
            .cusps
            .iter()
            .map(|c| c.semigroup.counting_fn())
            .collect();
        CountingFn::min_convolve_all(&fns)
    }

    /// `F = ΣΣ(∂∂h⁽¹⁾ ∗ … ∗ ∂∂h⁽ᵛ⁾)` on `[0, n]`, where `h⁽ⁱ⁾_j = H_i(j+1)`.
    pub fn f_values(&self, n: usize) -> IntSeq {
        let product = self
            .cusps
            .iter()
            .map(|c| {
                // ∂∂h is exact on any window: h is linear past the conductor
                let w = c.semigroup.conductor() as usize + 2;
                c.semigroup
                    .counting_fn()
                    .shifted_window(w)
                    .diff()
                    .diff()
                    .truncate(w)
            })
            .fold(IntSeq::unit(), |acc, c| acc.convolve(&c));
        product.partial_sums(n).partial_sums(n)
    }

    /// `2δ − 2`, the last index where `F` and `q` are compared.
    pub fn top_index(&self) -> usize {
        (2 * self.delta()).saturating_sub(2) as usize
    }

    /// `R(t) = Σ_{j=0}^{d−3} (q_{(d−3−j)d} − (j+1)(j+2)/2) t^{(d−3−j)d}`, with
    /// `q` read as zero outside `[0, 2δ−2]`.
    pub fn r_poly(&self, d: u64) -> Result<IntPoly> {
        if d < 3 {
            return Err(Error::InvalidDegree(d));
        }
        let q = self.q_coefficients()?;
        let top = (d * (d - 3)) as usize;
        let mut coeffs = vec![0i64; top + 1];
        for j in 0..=(d - 3) {
            let idx = ((d - 3 - j) * d) as usize;
            coeffs[idx] = q.get(idx as i64) - triangular(j);
        }
        Ok(IntPoly(IntSeq::new(coeffs)))
    }

    pub fn eu_report(&self, d: u64, a: u64) -> Result<EuReport> {
        if d == 0 {
            return Err(Error::InvalidDegree(d));
        }
        if a >= d {
            return Err(Error::SpincOutOfRange { a, d });
        }
        let delta = self.delta() as i64;
        let top = self.top_index();
        let h = self.h_fn();
        let f = self.f_values(top);
        let terms: Vec<EuTerm> = (a as usize..=top)
            .step_by(d as usize)
            .map(|j| {
                let shift = delta - 1 - j as i64;
                EuTerm {
                    j: j as u64,
                    h_term: h.value(j as i64 + 1) + shift,
                    f_term: f.get(j as i64) + shift,
                }
            })
            .collect();
        Ok(EuReport {
            d,
            a,
            eu_h0: terms.iter().map(|t| t.h_term).sum(),
            eu_hstar: terms.iter().map(|t| t.f_term).sum(),
            terms,
        })
    }

    /// `eu ℍ⁰(S³₋d(K), a) = Σ_{j≡a (d), 0≤j≤2δ−2} (H(j+1) + δ−1−j)`.
    pub fn eu_h0(&self, d: u64, a: u64) -> Result<i64> {
        Ok(self.eu_report(d, a)?.eu_h0)
    }

    /// `eu ℍ*(S³₋d(K), a) = Σ_{j≡a (d), 0≤j≤2δ−2} (F(j) + δ−1−j)`.
    pub fn eu_hstar(&self, d: u64, a: u64) -> Result<i64> {
        Ok(self.eu_report(d, a)?.eu_hstar)
    }

    /// Reports for every Spin^c index `a = 0..d−1`.
    pub fn eu_all_spinc(&self, d: u64) -> Result<Vec<EuReport>> {
        (0..d).map(|a| self.eu_report(d, a)).collect()
    }

    pub fn is_candidate_for(&self, d: u64) -> bool {
        d >= 1 && 2 * self.delta() == (d - 1) * d.saturating_sub(2)
    }

    fn require_candidate(&self, d: u64) -> Result<()> {
        if d < 3 || !self.is_candidate_for(d) {
            return Err(Error::NotCandidate {
                d,
                two_delta: 2 * self.delta(),
                expected: d.saturating_sub(1) * d.saturating_sub(2),
            });
        }
        Ok(())
    }

    /// Canonical `(eu ℍ⁰, eu ℍ*) = (Σ_{j≤d−3} H(jd+1), Σ_{j≤d−3} F(jd))`;
    /// only defined when `2δ = (d−1)(d−2)`.
    pub fn eu_canonical(&self, d: u64) -> Result<(i64, i64)> {
        self.eu_corollary(d, 0)
    }

    /// Candidate-only form `(Σ_{j≡−a} H(j+1), Σ_{j≡−a} F(j))` over
    /// `0 ≤ j ≤ 2δ−2`. By the symmetries of `H` and `q` it agrees with
    /// [`CuspCollection::eu_report`] for the same `a`.
    pub fn eu_corollary(&self, d: u64, a: u64) -> Result<(i64, i64)> {
        self.require_candidate(d)?;
        if a >= d {
            return Err(Error::SpincOutOfRange { a, d });
        }
        let top = self.top_index();
        let h = self.h_fn();
        let f = self.f_values(top);
        let start = ((d - a) % d) as usize;
        let (mut h0, mut hs) = (0, 0);
        for j in (start..=top).step_by(d as usize) {
            h0 += h.value(j as i64 + 1);
            hs += f.get(j as i64);
        }
        Ok((h0, hs))
    }
}

impl fmt::Display for CuspCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cusps.iter().map(|c| c.ty.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `(j+1)(j+2)/2`.
pub fn triangular(j: u64) -> i64 {
    ((j + 1) * (j + 2) / 2) as i64
}

/// `d(d−1)(d−2)/6`, also the geometric genus of the superisolated singularity.
pub fn tetrahedral(d: u64) -> i64 {
    (d * d.saturating_sub(1) * d.saturating_sub(2) / 6) as i64
}
