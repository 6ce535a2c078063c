//! Numerical semigroups of plane branches and the conversions between their
//! descriptions: multiplicity sequences, Newton pairs and generators.
//!
//! Conversions between semigroups and multiplicity sequences go through the
//! Apéry-set shift: if `Γ₂` has multiplicity `m` and `Γ₁` is its blowup, the
//! Apéry sets `Ap(m, Γ₁) = {a_j}` and `Ap(m, Γ₂) = {b_j}` (both sorted)
//! satisfy `b_j = a_j + j·m`.

use std::fmt;

use crate::error::{Error, Result};
use crate::seqcalc::CountingFn;

/// Multiplicity sequence `[n₁, …, n_r]` of a plane branch, trailing 1's omitted.
///
/// The empty sequence is the smooth-point sentinel.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultSeq(Vec<u64>);

impl MultSeq {
    /// Checks that the entries are non-increasing and at least 2. Admissibility
    /// (realizability by a branch) is only checked by [`Semigroup::from_multseq`].
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidInput(format!(
                "multiplicity sequence entries must be >= 2, got {bad}"
            )));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "multiplicity sequence {entries:?} is not non-increasing"
            )));
        }
        Ok(MultSeq(entries))
    }

    pub fn smooth() -> Self {
        MultSeq(Vec::new())
    }

    pub fn is_smooth(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ n(n−1)/2`, the delta invariant of any branch with this sequence.
    pub fn delta(&self) -> u64 {
        self.0.iter().map(|&n| n * (n - 1) / 2).sum()
    }
}

impl fmt::Display for MultSeq {
    /// Runs of equal entries use the `u_n` shorthand: `[3_2,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let u = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == u).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{u}_{run}")?;
            } else {
                write!(f, "{u}")?;
            }
            i += run;
        }
        write!(f, "]")
    }
}

/// Newton pairs `(p₁,q₁)…(p_r,q_r)` with `gcd(p_k,q_k) = 1`, `p_k ≥ 2`,
/// `q_k ≥ 1` and `q₁ > p₁` (so that `p₁⋯p_r` is the multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonPairs(Vec<(u64, u64)>);

impl NewtonPairs {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidNewtonPairs("no pairs given".into()));
        }
        for (k, &(p, q)) in pairs.iter().enumerate() {
            if p < 2 {
                return Err(Error::InvalidNewtonPairs(format!(
                    "pair {} has p = {p} < 2",
                    k + 1
                )));
            }
            if q < 1 {
                return Err(Error::InvalidNewtonPairs(format!(
                    "pair {} has q = 0",
                    k + 1
                )));
            }
            if gcd(p, q) != 1 {
                return Err(Error::InvalidNewtonPairs(format!(
                    "pair ({p},{q}) is not coprime"
                )));
            }
        }
        let (p1, q1) = pairs[0];
        if q1 <= p1 {
            return Err(Error::InvalidNewtonPairs(format!(
                "first pair ({p1},{q1}) needs q > p"
            )));
        }
        Ok(NewtonPairs(pairs))
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.0
    }

    /// Minimal generators `β̄₀, …, β̄_r` of the branch semigroup:
    /// `β̄₀ = p₁⋯p_r`, `β̄₁ = q₁·p₂⋯p_r` and
    /// `β̄_{k+1} = p_k·β̄_k + q_{k+1}·p_{k+2}⋯p_r`.
    pub fn semigroup_generators(&self) -> Vec<u64> {
        let p: Vec<u64> = self.0.iter().map(|&(p, _)| p).collect();
        let q: Vec<u64> = self.0.iter().map(|&(_, q)| q).collect();
        let r = p.len();
        // tail[k] = p_k ⋯ p_{r-1} (0-based), tail[r] = 1
        let mut tail = vec![1u64; r + 1];
        for k in (0..r).rev() {
            tail[k] = tail[k + 1] * p[k];
        }
        let mut gens = Vec::with_capacity(r + 1);
        gens.push(tail[0]);
        gens.push(q[0] * tail[1]);
        for k in 1..r {
            let next = p[k - 1] * gens[k] + q[k] * tail[k + 1];
            gens.push(next);
        }
        gens
    }
}

impl fmt::Display for NewtonPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(p, q) in &self.0 {
            write!(f, "({p},{q})")?;
        }
        Ok(())
    }
}

/// A numerical semigroup `Γ ⊆ ℤ≥0`, stored as its finite gap set and conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    gaps: Vec<u64>,
    conductor: u64,
}

/// Smallest element of each residue class modulo `modulus`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    modulus: u64,
    elements: Vec<u64>,
}

impl AperySet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Elements indexed by residue class.
    pub fn by_residue(&self) -> Vec<u64> {
        let mut out = vec![0; self.modulus as usize];
        for &b in &self.elements {
            out[(b % self.modulus) as usize] = b;
        }
        out
    }
}

impl Semigroup {
    /// `ℤ≥0`, the semigroup of a smooth branch.
    pub fn naturals() -> Self {
        Semigroup {
            gaps: Vec::new(),
            conductor: 0,
        }
    }

    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive".into()));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotNumerical {
                gens: gens.to_vec(),
                gcd: g,
            });
        }
        let min = *gens.iter().min().unwrap();
        if min == 1 {
            return Ok(Semigroup::naturals());
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let second = sorted.get(1).copied().unwrap_or(1);
        let mut bound = (sorted[0] * second).max(2 * min) as usize;
        loop {
            let len = bound + min as usize;
            let mut member = vec![false; len];
            member[0] = true;
            for s in 1..len {
                member[s] = gens
                    .iter()
                    .any(|&g| g as usize <= s && member[s - g as usize]);
            }
            let mut run = 0usize;
            for s in 0..len {
                if member[s] {
                    run += 1;
                    if run == min as usize {
                        let conductor = s + 1 - run;
                        let gaps = (1..conductor)
                            .filter(|&x| !member[x])
                            .map(|x| x as u64)
                            .collect();
                        return Ok(Semigroup {
                            gaps,
                            conductor: conductor as u64,
                        });
                    }
                } else {
                    run = 0;
                }
            }
            bound *= 2;
        }
    }

    /// Semigroup whose Apéry set modulo `m` is `by_residue` (indexed by
    /// residue). The caller guarantees closure under addition.
    fn from_apery_residues(m: u64, by_residue: &[u64]) -> Self {
        let mut gaps = Vec::new();
        for (r, &b) in by_residue.iter().enumerate() {
            let mut s = r as u64;
            while s < b {
                gaps.push(s);
                s += m;
            }
        }
        gaps.sort_unstable();
        let conductor = gaps.last().map_or(0, |&f| f + 1);
        Semigroup { gaps, conductor }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn delta(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn is_naturals(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, s: u64) -> bool {
        s >= self.conductor || self.gaps.binary_search(&s).is_err()
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        (1..).find(|&s| self.contains(s)).unwrap()
    }

    /// Minimal generating set, sorted.
    pub fn generators(&self) -> Vec<u64> {
        if self.is_naturals() {
            return vec![1];
        }
        let limit = self.conductor + self.multiplicity();
        let members: Vec<u64> = (1..limit).filter(|&s| self.contains(s)).collect();
        members
            .iter()
            .copied()
            .filter(|&s| {
                !members
                    .iter()
                    .take_while(|&&t| t < s)
                    .any(|&t| self.contains(s - t))
            })
            .collect()
    }

    /// `s ∈ Γ ⇔ 2δ−1−s ∉ Γ` for all `0 ≤ s ≤ 2δ−1`; equivalently the
    /// conductor is `2δ`.
    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.delta()
    }

    pub fn apery_set(&self, m: u64) -> Result<AperySet> {
        if m == 0 || !self.contains(m) {
            return Err(Error::ModulusNotInSemigroup(m));
        }
        let mut by_residue: Vec<Option<u64>> = vec![None; m as usize];
        let mut found = 0;
        let mut s = 0;
        while found < m {
            if self.contains(s) && by_residue[(s % m) as usize].is_none() {
                by_residue[(s % m) as usize] = Some(s);
                found += 1;
            }
            s += 1;
        }
        let mut elements: Vec<u64> = by_residue.into_iter().map(Option::unwrap).collect();
        elements.sort_unstable();
        Ok(AperySet {
            modulus: m,
            elements,
        })
    }

    /// Inverse blowup: the semigroup with multiplicity `m` whose blowup is `self`.
    pub fn unblowup(&self, m: u64) -> Result<Semigroup> {
        if m == 0 || !self.contains(m) {
            return Err(Error::InvalidMultiplicity {
                m,
                reason: "not an element of the blown-up semigroup".into(),
            });
        }
        let mult = self.multiplicity();
        if m < mult {
            return Err(Error::InvalidMultiplicity {
                m,
                reason: format!("smaller than the multiplicity {mult} of the blowup"),
            });
        }
        let ap = self.apery_set(m)?;
        let shifted: Vec<u64> = ap
            .elements()
            .iter()
            .enumerate()
            .map(|(j, &a)| a + j as u64 * m)
            .collect();
        let mut by_residue = vec![0; m as usize];
        for &b in &shifted {
            by_residue[(b % m) as usize] = b;
        }
        for &x in &shifted {
            for &y in &shifted {
                if x + y < by_residue[((x + y) % m) as usize] {
                    return Err(Error::NotASemigroup(shifted));
                }
            }
        }
        Ok(Semigroup::from_apery_residues(m, &by_residue))
    }

    /// Blowup: with `m` the multiplicity and `Ap(m,Γ) = {b_j}` sorted, the
    /// result is generated by `m` and the `b_j − j·m`.
    pub fn blowup(&self) -> Result<Semigroup> {
        if self.is_naturals() {
            return Err(Error::AlreadySmooth);
        }
        let m = self.multiplicity();
        let ap = self.apery_set(m)?;
        let mut gens = vec![m];
        let mut prev = 0i64;
        for (j, &b) in ap.elements().iter().enumerate().skip(1) {
            let a = b as i64 - (j as u64 * m) as i64;
            if a <= prev {
                return Err(Error::NotPlaneBranch(format!(
                    "shifted Apéry sequence of {self} is not increasing at index {j}"
                )));
            }
            prev = a;
            gens.push(a as u64);
        }
        Semigroup::from_generators(&gens)
    }

    /// Folds un-blowups from `ℤ≥0`: `Γ([n_r]) = ⟨n_r, n_r+1⟩` and
    /// `Γ([n_i,…]) = unblowup(Γ([n_{i+1},…]), n_i)`.
    pub fn from_multseq(ms: &MultSeq) -> Result<Semigroup> {
        if ms.is_smooth() {
            return Err(Error::InadmissibleMultSeq {
                seq: ms.to_string(),
                reason: "empty sequence describes a smooth point".into(),
            });
        }
        let mut s = Semigroup::naturals();
        for &n in ms.entries().iter().rev() {
            s = s.unblowup(n).map_err(|e| Error::InadmissibleMultSeq {
                seq: ms.to_string(),
                reason: e.to_string(),
            })?;
        }
        Ok(s)
    }

    /// Records multiplicities along the blowup chain down to `ℤ≥0`.
    pub fn multseq(&self) -> Result<MultSeq> {
        let mut entries = Vec::new();
        let mut s = self.clone();
        while !s.is_naturals() {
            entries.push(s.multiplicity());
            s = s.blowup()?;
        }
        let ms =
            MultSeq::new(entries).map_err(|e| Error::NotPlaneBranch(format!("{self}: {e}")))?;
        if !ms.is_smooth() && Semigroup::from_multseq(&ms).as_ref() != Ok(self) {
            return Err(Error::NotPlaneBranch(format!(
                "{self} is not rebuilt from its blowup chain {ms}"
            )));
        }
        Ok(ms)
    }

    pub fn from_newton_pairs(np: &NewtonPairs) -> Result<Semigroup> {
        Semigroup::from_generators(&np.semigroup_generators())
    }

    /// `H(k) = #{s ∈ Γ : s < k}`.
    pub fn counting_fn(&self) -> CountingFn {
        let c = self.conductor as i64;
        let mut head = Vec::with_capacity(c as usize + 1);
        let mut count = 0i64;
        for k in 0..=c {
            head.push(count);
            if self.contains(k as u64) {
                count += 1;
            }
        }
        CountingFn::new(head, self.delta() as i64)
            .expect("semigroup counting functions are well formed")
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        write!(f, "<")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
