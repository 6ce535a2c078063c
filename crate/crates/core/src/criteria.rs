//! Decision procedures on rational cuspidal curve candidates and the catalog
//! of known curves with three or more cusps.
//!
//! Every check compares "each `d`-th value" of `H` or `F` with the triangular
//! numbers `(j+1)(j+2)/2`, `j = 0..d−3`:
//!
//! | check            | compares                              |
//! |------------------|---------------------------------------|
//! | `Bezout`         | `H(jd+1) ≥ (j+1)(j+2)/2`              |
//! | `Bl`             | `H(jd+1) = (j+1)(j+2)/2`              |
//! | `ConjOriginal`   | `F(jd) ≤ (j+1)(j+2)/2`                |
//! | `ConjIndex`      | `Σ F(jd) ≤ Σ H(jd+1)`                 |
//!
//! The checks only make sense when `2δ = (d−1)(d−2)`; they refuse other
//! inputs unless the candidate was built with [`Candidate::forced`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{tetrahedral, triangular, CuspCollection};
use crate::semigroup::{MultSeq, NewtonPairs, Semigroup};

/// The unique `d ≥ 3` with `(d−1)(d−2) = 2δ`, if any.
pub fn candidate_degree(delta: u64) -> Option<u64> {
    (3..)
        .map(|d: u64| (d, (d - 1) * (d - 2)))
        .take_while(|&(_, v)| v <= 2 * delta)
        .find(|&(_, v)| v == 2 * delta)
        .map(|(d, _)| d)
}

#[derive(Clone, Debug)]
pub struct Candidate {
    collection: CuspCollection,
    d: u64,
    satisfies_equation: bool,
    forced: bool,
}

impl Candidate {
    /// Stores whether `2δ = (d−1)(d−2)` holds; it is not assumed.
    pub fn new(collection: CuspCollection, d: u64) -> Self {
        let satisfies_equation = d >= 3 && collection.is_candidate_for(d);
        Candidate {
            collection,
            d,
            satisfies_equation,
            forced: false,
        }
    }

    /// Uses [`candidate_degree`] to pick `d`.
    pub fn detect(collection: CuspCollection) -> Result<Self> {
        let delta = collection.delta();
        match candidate_degree(delta) {
            Some(d) => Ok(Candidate::new(collection, d)),
            None => Err(Error::InvalidInput(format!(
                "2*delta = {} is not of the form (d-1)(d-2)",
                2 * delta
            ))),
        }
    }

    /// Lets the checks run even when the degree equation fails.
    pub fn forced(mut self) -> Self {
        self.forced = true;
        self
    }

    pub fn collection(&self) -> &CuspCollection {
        &self.collection
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn satisfies_equation(&self) -> bool {
        self.satisfies_equation
    }

    fn require(&self) -> Result<()> {
        if self.satisfies_equation || (self.forced && self.d >= 1) {
            Ok(())
        } else {
            Err(Error::NotCandidate {
                d: self.d,
                two_delta: 2 * self.collection.delta(),
                expected: self.d.saturating_sub(1) * self.d.saturating_sub(2),
            })
        }
    }

    /// `j = 0..=d−3`; empty for `d < 3`.
    fn js(&self) -> impl Iterator<Item = u64> {
        0..self.d.saturating_sub(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Bezout,
    Bl,
    ConjOriginal,
    ConjIndex,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Bezout => "bezout",
            Criterion::Bl => "bl",
            Criterion::ConjOriginal => "conj_original",
            Criterion::ConjIndex => "conj_index",
        })
    }
}

/// One comparison `lhs ? rhs`; `j` is `None` for the summed index check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionRow {
    pub j: Option<u64>,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub d: u64,
    pub rows: Vec<CriterionRow>,
    pub pass: bool,
    /// `eu ℍ⁰ − eu ℍ*` for the index check.
    pub difference: Option<i64>,
}

impl CriterionReport {
    fn from_rows(criterion: Criterion, d: u64, rows: Vec<CriterionRow>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        CriterionReport {
            criterion,
            d,
            rows,
            pass,
            difference: None,
        }
    }

    /// `j` values whose comparison failed.
    pub fn failing_js(&self) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|r| !r.pass)
            .filter_map(|r| r.j)
            .collect()
    }
}

fn per_j(
    cand: &Candidate,
    criterion: Criterion,
    lhs: impl Fn(u64) -> i64,
    cmp: impl Fn(i64, i64) -> bool,
) -> Result<CriterionReport> {
    cand.require()?;
    let rows = cand
        .js()
        .map(|j| {
            let (l, r) = (lhs(j), triangular(j));
            CriterionRow {
                j: Some(j),
                lhs: l,
                rhs: r,
                pass: cmp(l, r),
            }
        })
        .collect();
    Ok(CriterionReport::from_rows(criterion, cand.d, rows))
}

/// `H(jd+1) ≥ (j+1)(j+2)/2` for `j = 0..d−3`.
pub fn check_bezout(cand: &Candidate) -> Result<CriterionReport> {
    let h = cand.collection.h_fn();
    let d = cand.d as i64;
    per_j(
        cand,
        Criterion::Bezout,
        |j| h.value(j as i64 * d + 1),
        |l, r| l >= r,
    )
}

/// `H(jd+1) = (j+1)(j+2)/2` for `j = 0..d−3`.
pub fn check_bl(cand: &Candidate) -> Result<CriterionReport> {
    let h = cand.collection.h_fn();
    let d = cand.d as i64;
    per_j(
        cand,
        Criterion::Bl,
        |j| h.value(j as i64 * d + 1),
        |l, r| l == r,
    )
}

/// `F(jd) ≤ (j+1)(j+2)/2` for `j = 0..d−3`.
pub fn check_conj_original(cand: &Candidate) -> Result<CriterionReport> {
    let d = cand.d as usize;
    let f = cand.collection.f_values((d.saturating_sub(3)) * d);
    per_j(
        cand,
        Criterion::ConjOriginal,
        |j| f.get(j as i64 * d as i64),
        |l, r| l <= r,
    )
}

/// `eu ℍ*_can ≤ eu ℍ⁰_can`, i.e. `Σ F(jd) ≤ Σ H(jd+1)`.
///
/// Forced non-candidates use the general formulas at `a = 0`.
pub fn check_conj_index(cand: &Candidate) -> Result<CriterionReport> {
    cand.require()?;
    let (h0, hs) = if cand.satisfies_equation {
        cand.collection.eu_canonical(cand.d)?
    } else {
        let r = cand.collection.eu_report(cand.d, 0)?;
        (r.eu_h0, r.eu_hstar)
    };
    let mut report = CriterionReport::from_rows(
        Criterion::ConjIndex,
        cand.d,
        vec![CriterionRow {
            j: None,
            lhs: hs,
            rhs: h0,
            pass: hs <= h0,
        }],
    );
    report.difference = Some(h0 - hs);
    Ok(report)
}

/// `H(jd+1) − F(jd)` for `j = 0..d−3`.
pub fn detailed_differences(collection: &CuspCollection, d: u64) -> Vec<i64> {
    let h = collection.h_fn();
    let f = collection.f_values((d.saturating_sub(3) * d) as usize);
    (0..d.saturating_sub(2))
        .map(|j| {
            let k = (j * d) as i64;
            h.value(k + 1) - f.get(k)
        })
        .collect()
}

/// Bag union of all multiplicity-sequence entries, sorted non-increasing.
pub fn multiplicity_multiset(collection: &CuspCollection) -> Vec<u64> {
    let mut out: Vec<u64> = collection
        .multseqs()
        .iter()
        .flat_map(|m| m.entries().to_vec())
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub const REGROUPING_CAP: usize = 10_000;

/// Partitions of a multiset into admissible multiplicity sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regroupings {
    pub collections: Vec<Vec<MultSeq>>,
    /// Set when enumeration stopped at [`REGROUPING_CAP`].
    pub truncated: bool,
}

/// Enumerates the ways of splitting `multiset` into at most `max_parts`
/// admissible multiplicity sequences. Parts are emitted in non-increasing
/// lexicographic order, so each grouping appears once.
pub fn regroupings(multiset: &[u64], max_parts: Option<usize>) -> Regroupings {
    let mut counts: BTreeMap<std::cmp::Reverse<u64>, usize> = BTreeMap::new();
    for &n in multiset {
        *counts.entry(std::cmp::Reverse(n)).or_default() += 1;
    }
    let values: Vec<u64> = counts.keys().map(|r| r.0).collect();
    let mut remaining: Vec<usize> = counts.values().copied().collect();
    let mut state = Enumeration {
        values,
        max_parts: max_parts.unwrap_or(usize::MAX),
        admissible: HashMap::new(),
        out: Vec::new(),
        truncated: false,
    };
    let mut parts = Vec::new();
    if !multiset.is_empty() {
        state.recurse(&mut remaining, &mut parts);
    }
    Regroupings {
        collections: state.out,
        truncated: state.truncated,
    }
}

struct Enumeration {
    values: Vec<u64>,
    max_parts: usize,
    admissible: HashMap<Vec<u64>, bool>,
    out: Vec<Vec<MultSeq>>,
    truncated: bool,
}

impl Enumeration {
    fn is_admissible(&mut self, part: &[u64]) -> bool {
        if let Some(&ok) = self.admissible.get(part) {
            return ok;
        }
        let ok = MultSeq::new(part.to_vec())
            .and_then(|m| Semigroup::from_multseq(&m))
            .is_ok();
        self.admissible.insert(part.to_vec(), ok);
        ok
    }

    fn recurse(&mut self, remaining: &mut Vec<usize>, parts: &mut Vec<Vec<u64>>) {
        if self.truncated {
            return;
        }
        let Some(lead) = remaining.iter().position(|&c| c > 0) else {
            if self.out.len() >= REGROUPING_CAP {
                self.truncated = true;
                return;
            }
            self.out.push(
                parts
                    .iter()
                    .map(|p| MultSeq::new(p.clone()).expect("checked when chosen"))
                    .collect(),
            );
            return;
        };
        if parts.len() >= self.max_parts {
            return;
        }
        // the next part takes at least one copy of the largest remaining value
        let mut take = vec![0usize; remaining.len()];
        take[lead] = 1;
        self.choose(lead, remaining, &mut take, parts);
    }

    /// Chooses how many copies of `values[idx..]` go into the next part.
    fn choose(
        &mut self,
        idx: usize,
        remaining: &mut Vec<usize>,
        take: &mut Vec<usize>,
        parts: &mut Vec<Vec<u64>>,
    ) {
        if idx == remaining.len() {
            let part: Vec<u64> = take
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| std::iter::repeat_n(self.values[i], c))
                .collect();
            if parts.last().is_some_and(|prev| part > *prev) {
                return;
            }
            if !self.is_admissible(&part) {
                return;
            }
            for (r, t) in remaining.iter_mut().zip(take.iter()) {
                *r -= t;
            }
            parts.push(part);
            self.recurse(remaining, parts);
            parts.pop();
            for (r, t) in remaining.iter_mut().zip(take.iter()) {
                *r += t;
            }
            return;
        }
        let lo = take[idx];
        for c in lo..=remaining[idx] {
            take[idx] = c;
            self.choose(idx + 1, remaining, take, parts);
            if self.truncated {
                break;
            }
        }
        take[idx] = lo;
    }
}

/// Agreement of `H`, the Borodzik–Livingston verdict and the `eu` values
/// across all regroupings of one multiset.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub multiset: Vec<u64>,
    pub d: Option<u64>,
    pub regroupings: Vec<StabilityRow>,
    pub truncated: bool,
    /// `H` agrees pointwise on `[0, 2δ]` across regroupings.
    pub h_equal: bool,
    /// The Borodzik–Livingston verdict is the same for every regrouping.
    pub bl_constant: Option<bool>,
    /// `eu ℍ⁰(a)` agrees for every Spin^c index `a`.
    pub eu_h0_constant: Option<bool>,
    /// `eu ℍ*(a)` agrees for every `a`; not expected in general.
    pub eu_hstar_constant: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityRow {
    pub cusps: Vec<String>,
    pub bl_pass: Option<bool>,
    pub eu_h0: Vec<i64>,
    pub eu_hstar: Vec<i64>,
}

/// `d` defaults to [`candidate_degree`]; a degree that does not satisfy the
/// candidate equation runs the checks in forced mode.
pub fn stability(
    collection: &CuspCollection,
    d: Option<u64>,
    max_parts: Option<usize>,
) -> Result<StabilityReport> {
    let multiset = multiplicity_multiset(collection);
    let groups = regroupings(&multiset, max_parts);
    let delta = collection.delta();
    let d = d.or_else(|| candidate_degree(delta));
    let reference = collection.h_fn();
    let mut h_equal = true;
    let mut rows = Vec::with_capacity(groups.collections.len());
    for g in &groups.collections {
        let c = CuspCollection::from_multseqs(g)?;
        h_equal &= (0..=2 * delta as i64).all(|k| c.h_fn().value(k) == reference.value(k));
        let (bl_pass, eu_h0, eu_hstar) = match d {
            Some(d) => {
                let bl = check_bl(&Candidate::new(c.clone(), d).forced())?.pass;
                let reports = c.eu_all_spinc(d)?;
                (
                    Some(bl),
                    reports.iter().map(|r| r.eu_h0).collect(),
                    reports.iter().map(|r| r.eu_hstar).collect(),
                )
            }
            None => (None, Vec::new(), Vec::new()),
        };
        rows.push(StabilityRow {
            cusps: g.iter().map(MultSeq::to_string).collect(),
            bl_pass,
            eu_h0,
            eu_hstar,
        });
    }
    let constant = |f: &dyn Fn(&StabilityRow) -> String| -> Option<bool> {
        d.map(|_| rows.windows(2).all(|w| f(&w[0]) == f(&w[1])))
    };
    let bl_constant = constant(&|r| format!("{:?}", r.bl_pass));
    let eu_h0_constant = constant(&|r| format!("{:?}", r.eu_h0));
    let eu_hstar_constant = constant(&|r| format!("{:?}", r.eu_hstar));
    Ok(StabilityReport {
        multiset,
        d,
        regroupings: rows,
        truncated: groups.truncated,
        h_equal,
        bl_constant,
        eu_h0_constant,
        eu_hstar_constant,
    })
}

/// Families of known rational cuspidal curves with at least three cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `C_{d,u}`, `d ≥ 4`, `1 ≤ u ≤ d−3`.
    C { d: u64, u: u64 },
    /// `D_l`, degree `2l+3`.
    D { l: u64 },
    /// `E_l`, degree `3l+4`.
    E { l: u64 },
    /// The tricuspidal quintic `[2_2],[2_2],[2_2]`.
    Sporadic3,
    /// The four-cusp quintic `[2_3],[2],[2],[2]`.
    Sporadic4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::C { d, u } => write!(f, "C_{{{d},{u}}}"),
            Family::D { l } => write!(f, "D_{l}"),
            Family::E { l } => write!(f, "E_{l}"),
            Family::Sporadic3 => write!(f, "sporadic3"),
            Family::Sporadic4 => write!(f, "sporadic4"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: Family,
    pub d: u64,
    pub cusps: Vec<MultSeq>,
    /// The same cusp types as Newton pairs, in the same order.
    pub newton: Vec<NewtonPairs>,
}

impl CatalogEntry {
    pub fn collection(&self) -> CuspCollection {
        CuspCollection::from_multseqs(&self.cusps).expect("catalog cusps are admissible")
    }
}

fn reps(u: u64, n: u64) -> Vec<u64> {
    vec![u; n as usize]
}

fn pairs(v: &[(u64, u64)]) -> NewtonPairs {
    NewtonPairs::new(v.to_vec()).expect("catalog Newton pairs are valid")
}

/// `(l, l+1)(p, 1)`, or the single pair `(p, p(l+1)+1)` it degenerates to at `l = 1`.
fn two_pair(l: u64, p: u64) -> NewtonPairs {
    if l == 1 {
        pairs(&[(p, 2 * p + 1)])
    } else {
        pairs(&[(l, l + 1), (p, 1)])
    }
}

pub fn catalog(family: Family) -> Result<CatalogEntry> {
    let ms = |v: Vec<u64>| MultSeq::new(v);
    let (d, cusps, newton) = match family {
        Family::C { d, u } => {
            if d < 4 || u < 1 || u > d - 3 {
                return Err(Error::CatalogParams(format!(
                    "C needs d >= 4 and 1 <= u <= d-3, got d = {d}, u = {u}"
                )));
            }
            (
                d,
                vec![ms(vec![d - 2])?, ms(reps(2, d - 2 - u))?, ms(reps(2, u))?],
                vec![
                    pairs(&[(d - 2, d - 1)]),
                    pairs(&[(2, 2 * d - 2 * u - 3)]),
                    pairs(&[(2, 2 * u + 1)]),
                ],
            )
        }
        Family::D { l } => {
            if l < 1 {
                return Err(Error::CatalogParams("D needs l >= 1".into()));
            }
            let mut first = vec![2 * l];
            first.extend(reps(2, l));
            (
                2 * l + 3,
                vec![ms(first)?, ms(reps(3, l))?, ms(vec![2])?],
                vec![two_pair(l, 2), pairs(&[(3, 3 * l + 1)]), pairs(&[(2, 3)])],
            )
        }
        Family::E { l } => {
            if l < 1 {
                return Err(Error::CatalogParams("E needs l >= 1".into()));
            }
            let mut first = vec![3 * l];
            first.extend(reps(3, l));
            let mut second = reps(4, l);
            second.extend([2, 2]);
            (
                3 * l + 4,
                vec![ms(first)?, ms(second)?, ms(vec![2])?],
                vec![
                    two_pair(l, 3),
                    pairs(&[(2, 2 * l + 1), (2, 1)]),
                    pairs(&[(2, 3)]),
                ],
            )
        }
        Family::Sporadic3 => (5, vec![ms(reps(2, 2))?; 3], vec![pairs(&[(2, 5)]); 3]),
        Family::Sporadic4 => (
            5,
            vec![ms(reps(2, 3))?, ms(vec![2])?, ms(vec![2])?, ms(vec![2])?],
            vec![
                pairs(&[(2, 7)]),
                pairs(&[(2, 3)]),
                pairs(&[(2, 3)]),
                pairs(&[(2, 3)]),
            ],
        ),
    };
    let delta: u64 = cusps.iter().map(MultSeq::delta).sum();
    if 2 * delta != (d - 1) * (d - 2) {
        return Err(Error::Inconsistent(format!(
            "{family}: 2*delta = {} but (d-1)(d-2) = {}",
            2 * delta,
            (d - 1) * (d - 2)
        )));
    }
    Ok(CatalogEntry {
        family,
        d,
        cusps,
        newton,
    })
}

/// Every catalog curve of degree at most `max_d`, both parameterizations
/// `u` and `d−2−u` of `C_{d,u}` included.
pub fn catalog_up_to(max_d: u64) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for d in 4..=max_d {
        for u in 1..=d - 3 {
            out.push(catalog(Family::C { d, u }).unwrap());
        }
    }
    out.extend(
        (1..)
            .map(|l| Family::D { l })
            .take_while(|f| matches!(f, Family::D { l } if 2 * l + 3 <= max_d))
            .map(|f| catalog(f).unwrap()),
    );
    out.extend(
        (1..)
            .map(|l| Family::E { l })
            .take_while(|f| matches!(f, Family::E { l } if 3 * l + 4 <= max_d))
            .map(|f| catalog(f).unwrap()),
    );
    if max_d >= 5 {
        out.push(catalog(Family::Sporadic3).unwrap());
        out.push(catalog(Family::Sporadic4).unwrap());
    }
    out
}

/// Published closed forms for `eu ℍ⁰_can − eu ℍ*_can` on the three series.
pub fn expected_eu_difference(entry: &CatalogEntry) -> Option<i64> {
    match entry.family {
        Family::C { d, u } => {
            let (d, u) = (d as i64, u as i64);
            if d % 2 == 1 {
                let l = (d - 1) / 2;
                Some(l * (l - 1))
            } else {
                let l = d / 2;
                // the formula is stated for u ≥ l−1; C_{d,u} = C_{d,d−2−u}
                let u = if u >= l - 1 { u } else { d - 2 - u };
                Some((u - l) * (u - l + 1))
            }
        }
        Family::D { l } => {
            let l = l as i64;
            Some(match l % 3 {
                2 => {
                    let p = (l + 1) / 3;
                    4 * p * (3 * p - 1) + 2
                }
                0 => {
                    let p = l / 3;
                    4 * p * (3 * p - 1)
                }
                _ => {
                    let p = (l - 1) / 3;
                    12 * p * (p + 1) + 2
                }
            })
        }
        Family::E { l } => {
            let l = l as i64;
            let p = l / 4;
            Some(match l % 4 {
                0 => 60 * p * p - 2 * p,
                1 => 60 * p * p + 46 * p + 10,
                2 => 60 * p * p + 62 * p + 16,
                _ => 60 * p * p + 100 * p + 42,
            })
        }
        Family::Sporadic3 | Family::Sporadic4 => None,
    }
}

/// `d(d−1)(d−2)/6`, the value the Borodzik–Livingston equalities force on
/// `eu ℍ⁰_can`.
pub fn canonical_h0_target(d: u64) -> i64 {
    tetrahedral(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(s: &str) -> CuspCollection {
        CuspCollection::parse(s).unwrap()
    }

    fn cand(s: &str, d: u64) -> Candidate {
        Candidate::new(coll(s), d)
    }

    fn ms(v: &[u64]) -> MultSeq {
        MultSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn candidate_degree_examples() {
        assert_eq!(candidate_degree(21), Some(8));
        assert_eq!(candidate_degree(3), Some(4));
        assert_eq!(candidate_degree(2), None);
        assert_eq!(candidate_degree(1), Some(3));
    }

    #[test]
    fn bezout_examples() {
        for (s, d, expect) in [
            ("[3] [2_2] [2]", 5, vec![1, 3, 6]),
            ("[3,2] [2] [2]", 5, vec![1, 3, 6]),
            ("[6] [2_4] [2_2]", 8, vec![1, 3, 6, 10, 15, 21]),
        ] {
            let r = check_bezout(&cand(s, d)).unwrap();
            assert!(r.pass, "{s}");
            assert_eq!(r.rows.iter().map(|r| r.lhs).collect::<Vec<_>>(), expect);
        }
    }

    #[test]
    fn bl_examples() {
        assert!(check_bl(&cand("[3,2] [2] [2]", 5)).unwrap().pass);
        assert!(check_bl(&cand("[6] [2_4] [2_2]", 8)).unwrap().pass);
        assert!(matches!(
            check_bl(&cand("[2]", 4)),
            Err(Error::NotCandidate {
                d: 4,
                two_delta: 2,
                expected: 6
            })
        ));
        let forced = check_bl(&cand("[2]", 4).forced()).unwrap();
        assert!(!forced.pass);
    }

    #[test]
    fn conj_original_examples() {
        let r = check_conj_original(&cand("[6] [2_4] [2_2]", 8)).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failing_js(), vec![1, 4]);
        assert_eq!((r.rows[1].lhs, r.rows[1].rhs), (4, 3));
        assert_eq!((r.rows[4].lhs, r.rows[4].rhs), (16, 15));

        let r = check_conj_original(&cand("[3] [2_2] [2]", 5)).unwrap();
        assert!(r.pass);
        assert_eq!(
            r.rows.iter().map(|r| r.lhs).collect::<Vec<_>>(),
            vec![1, 1, 6]
        );

        let c82 = catalog(Family::C { d: 8, u: 2 }).unwrap();
        assert_eq!(
            detailed_differences(&c82.collection(), 8),
            vec![0, -1, 1, 1, -1, 0]
        );
        let r = check_conj_original(&Candidate::new(c82.collection(), 8)).unwrap();
        assert_eq!(r.failing_js(), vec![1, 4]);
    }

    #[test]
    fn conj_index_examples() {
        let r = check_conj_index(&cand("[6] [2_4] [2_2]", 8)).unwrap();
        assert!(r.pass);
        assert_eq!(r.difference, Some(0));
        let r = check_conj_index(&cand("[3,2] [2] [2]", 5)).unwrap();
        assert!(!r.pass);
        let r = check_conj_index(&cand("[2_3] [2] [2] [2]", 5)).unwrap();
        assert!(r.pass);
        assert_eq!(r.difference, Some(8));
    }

    #[test]
    fn multiset_examples() {
        assert_eq!(multiplicity_multiset(&coll("[3] [2_3]")), vec![3, 2, 2, 2]);
        assert_eq!(
            multiplicity_multiset(&coll("[3,2] [2_2]")),
            vec![3, 2, 2, 2]
        );
        assert_eq!(multiplicity_multiset(&coll("[2]")), vec![2]);
        assert_eq!(
            multiplicity_multiset(&coll("[6] [2_4] [2_2]")),
            vec![6, 2, 2, 2, 2, 2, 2]
        );
    }

    #[test]
    fn regrouping_examples() {
        let r = regroupings(&[3, 2, 2, 2], None);
        assert!(!r.truncated);
        let as_strings: Vec<Vec<String>> = r
            .collections
            .iter()
            .map(|g| g.iter().map(MultSeq::to_string).collect())
            .collect();
        for expected in [
            vec!["[3]", "[2]", "[2]", "[2]"],
            vec!["[3,2]", "[2]", "[2]"],
            vec!["[3]", "[2_2]", "[2]"],
            vec!["[3]", "[2_3]"],
            vec!["[3,2]", "[2_2]"],
        ] {
            assert!(
                as_strings.contains(&expected.iter().map(|s| s.to_string()).collect()),
                "{expected:?}"
            );
        }
        let mut sorted = as_strings.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), as_strings.len());

        assert_eq!(regroupings(&[2], None).collections, vec![vec![ms(&[2])]]);
        assert_eq!(
            regroupings(&[6, 2], None).collections,
            vec![vec![ms(&[6]), ms(&[2])]]
        );
        assert_eq!(regroupings(&[3, 2, 2, 2], Some(2)).collections.len(), 2);
    }

    #[test]
    fn catalog_examples() {
        let e = catalog(Family::C { d: 8, u: 2 }).unwrap();
        assert_eq!(e.d, 8);
        assert_eq!(e.cusps, vec![ms(&[6]), ms(&[2; 4]), ms(&[2; 2])]);
        let e = catalog(Family::D { l: 1 }).unwrap();
        assert_eq!(e.d, 5);
        assert_eq!(e.cusps, vec![ms(&[2, 2]), ms(&[3]), ms(&[2])]);
        let e = catalog(Family::Sporadic4).unwrap();
        assert_eq!(e.cusps, vec![ms(&[2, 2, 2]), ms(&[2]), ms(&[2]), ms(&[2])]);
        assert!(catalog(Family::C { d: 5, u: 3 }).is_err());
        assert!(catalog(Family::C { d: 3, u: 1 }).is_err());
        assert!(catalog(Family::D { l: 0 }).is_err());
    }

    #[test]
    fn expected_difference_examples() {
        assert_eq!(
            expected_eu_difference(&catalog(Family::C { d: 9, u: 2 }).unwrap()),
            Some(12)
        );
        assert_eq!(
            expected_eu_difference(&catalog(Family::D { l: 1 }).unwrap()),
            Some(2)
        );
        assert_eq!(
            expected_eu_difference(&catalog(Family::E { l: 1 }).unwrap()),
            Some(10)
        );
        assert_eq!(
            expected_eu_difference(&catalog(Family::Sporadic3).unwrap()),
            None
        );
    }

    #[test]
    fn catalog_listing_counts() {
        let all = catalog_up_to(6);
        // C: d=4 (1), d=5 (2), d=6 (3); D_1; sporadic ×2
        assert_eq!(all.len(), 1 + 2 + 3 + 1 + 2);
        assert!(all.iter().all(|e| e.d <= 6));
    }
}
