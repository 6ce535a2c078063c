//! Brute-force lattice cohomology of a weighted rectangle `[0,m₁]×…×[0,m_ν]`.
//!
//! A cube `(l, I)` is a lattice point `l` together with a set `I` of
//! directions; its weight is the maximum over its vertices. `S_n` is the
//! union of cubes of weight at most `n`. Reduced Betti numbers of every `S_n`
//! are computed exactly over `ℚ` by fraction-free column reduction, either one
//! level at a time ([`level_betti`]) or all levels at once through a single
//! filtered reduction ([`WeightedRectangle::betti_table`]).

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::CuspCollection;
use crate::seqcalc::CountingFn;

pub const DEFAULT_POINT_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightKind {
    /// `w_a(x) = Σ H_i(x_i) + min(0, 1 + a − |x|)`.
    Wa { a: u64 },
    /// `W(x) = Σ #{s ∉ Γ_i : s ≥ x_i} = δ − |x| + Σ H_i(x_i)`.
    W,
}

#[derive(Clone, Debug)]
pub struct WeightedRectangle {
    dims: Vec<usize>,
    strides: Vec<usize>,
    weights: Vec<i64>,
    kind: WeightKind,
}

/// `m_i = 2δ_i + 1 + margin`.
pub fn default_dims(c: &CuspCollection, margin: usize) -> Vec<usize> {
    c.deltas()
        .iter()
        .map(|&d| 2 * d as usize + 1 + margin)
        .collect()
}

/// Number of lattice points of `[0,m₁]×…×[0,m_ν]`, saturating.
pub fn point_count(dims: &[usize]) -> usize {
    dims.iter()
        .fold(1usize, |acc, &m| acc.saturating_mul(m + 1))
}

/// Rectangle with default dimensions and weight `w_j`.
pub fn build_rectangle(c: &CuspCollection, j: u64, box_margin: usize) -> Result<WeightedRectangle> {
    WeightedRectangle::new(
        c,
        WeightKind::Wa { a: j },
        default_dims(c, box_margin),
        DEFAULT_POINT_CAP,
    )
}

impl WeightedRectangle {
    pub fn new(c: &CuspCollection, kind: WeightKind, dims: Vec<usize>, cap: usize) -> Result<Self> {
        if dims.len() != c.nu() {
            return Err(Error::InvalidInput(format!(
                "{} box dimensions given for {} cusps",
                dims.len(),
                c.nu()
            )));
        }
        let points = point_count(&dims);
        if points > cap {
            return Err(Error::RectangleTooLarge { points, cap });
        }
        let mut strides = Vec::with_capacity(dims.len());
        let mut s = 1;
        for &m in &dims {
            strides.push(s);
            s *= m + 1;
        }
        let hs: Vec<CountingFn> = c
            .cusps()
            .iter()
            .map(|cu| cu.semigroup.counting_fn())
            .collect();
        let delta = c.delta() as i64;
        let mut weights = Vec::with_capacity(points);
        let mut x = vec![0usize; dims.len()];
        for _ in 0..points {
            let size: i64 = x.iter().map(|&v| v as i64).sum();
            let hsum: i64 = x.iter().zip(&hs).map(|(&v, h)| h.value(v as i64)).sum();
            weights.push(match kind {
                WeightKind::Wa { a } => hsum + 0.min(1 + a as i64 - size),
                WeightKind::W => delta - size + hsum,
            });
            for (xi, &m) in x.iter_mut().zip(&dims) {
                if *xi < m {
                    *xi += 1;
                    break;
                }
                *xi = 0;
            }
        }
        Ok(WeightedRectangle {
            dims,
            strides,
            weights,
            kind,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn nu(&self) -> usize {
        self.dims.len()
    }

    pub fn num_points(&self) -> usize {
        self.weights.len()
    }

    pub fn coords(&self, p: usize) -> Vec<usize> {
        self.dims
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (p / s) % (m + 1))
            .collect()
    }

    pub fn point_weight(&self, x: &[usize]) -> i64 {
        let p: usize = x.iter().zip(&self.strides).map(|(a, b)| a * b).sum();
        self.weights[p]
    }

    pub fn min_weight(&self) -> i64 {
        *self.weights.iter().min().expect("rectangle has points")
    }

    /// Largest cube weight, i.e. the level where `S_n` becomes the whole rectangle.
    pub fn max_weight(&self) -> i64 {
        *self.weights.iter().max().expect("rectangle has points")
    }

    fn is_cube(&self, p: usize, mask: usize) -> bool {
        (0..self.nu()).all(|i| {
            mask & (1 << i) == 0 || (p / self.strides[i]) % (self.dims[i] + 1) < self.dims[i]
        })
    }

    fn cube_weight(&self, p: usize, mask: usize) -> i64 {
        let mut best = i64::MIN;
        let mut sub = mask;
        loop {
            let off: usize = (0..self.nu())
                .filter(|i| sub & (1 << i) != 0)
                .map(|i| self.strides[i])
                .sum();
            best = best.max(self.weights[p + off]);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        best
    }

    /// All cubes as `(point, direction mask, weight)`.
    fn cubes(&self) -> Vec<(usize, usize, i64)> {
        let masks = 1usize << self.nu();
        let mut out = Vec::new();
        for p in 0..self.num_points() {
            for mask in 0..masks {
                if self.is_cube(p, mask) {
                    out.push((p, mask, self.cube_weight(p, mask)));
                }
            }
        }
        out
    }

    /// Faces of a cube with their incidence signs.
    fn boundary(&self, p: usize, mask: usize) -> impl Iterator<Item = (usize, usize, i128)> + '_ {
        (0..self.nu())
            .filter(move |i| mask & (1 << i) != 0)
            .enumerate()
            .flat_map(move |(t, i)| {
                let sign: i128 = if t % 2 == 0 { 1 } else { -1 };
                let face = mask ^ (1 << i);
                [(p + self.strides[i], face, sign), (p, face, -sign)]
            })
    }

    /// Cube counts of `S_n` by dimension.
    pub fn cube_counts(&self, n: i64) -> Vec<u64> {
        let mut counts = vec![0u64; self.nu() + 1];
        for (_, mask, w) in self.cubes() {
            if w <= n {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    }

    /// Reduced Betti numbers of every `S_n`, `n ∈ [min w, max w]`, from one
    /// filtered column reduction.
    pub fn betti_table(&self) -> Result<BettiTable> {
        let mut cells = self.cubes();
        cells.sort_by_key(|&(p, mask, w)| (w, mask.count_ones(), p, mask));
        let masks = 1usize << self.nu();
        let mut position = vec![u32::MAX; self.num_points() * masks];
        for (k, &(p, mask, _)) in cells.iter().enumerate() {
            position[p * masks + mask] = k as u32;
        }
        let mut columns: Vec<Column> = cells
            .iter()
            .map(|&(p, mask, _)| {
                let mut col: Column = self
                    .boundary(p, mask)
                    .map(|(fp, fm, s)| (position[fp * masks + fm], s))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        let lows = reduce(&mut columns)?;

        let min = self.min_weight();
        let max = self.max_weight();
        let nu = self.nu();
        let mut rows = vec![vec![0u64; nu + 1]; (max - min + 1) as usize];
        let mut killed = vec![false; cells.len()];
        for (k, low) in lows.iter().enumerate() {
            if let Some(r) = *low {
                killed[r as usize] = true;
                let (birth_cell, death_cell) = (cells[r as usize], cells[k]);
                let q = birth_cell.1.count_ones() as usize;
                for n in birth_cell.2..death_cell.2 {
                    rows[(n - min) as usize][q] += 1;
                }
            }
        }
        let essential: Vec<usize> = (0..cells.len())
            .filter(|&k| lows[k].is_none() && !killed[k])
            .collect();
        if essential.len() != 1 || cells[essential[0]].1 != 0 {
            return Err(Error::Inconsistent(format!(
                "rectangle has {} essential classes; it should be contractible",
                essential.len()
            )));
        }
        Ok(BettiTable {
            min_level: min,
            rows,
        })
    }
}

type Column = Vec<(u32, i128)>;

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn overflow() -> Error {
    Error::Inconsistent("coefficient overflow in exact rank computation".into())
}

/// `b·x − a·y` for sorted sparse columns, content removed.
fn combine(x: &Column, b: i128, y: &Column, a: i128) -> Result<Column> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0, 0);
    while i < x.len() || k < y.len() {
        let (row, v) = match (x.get(i), y.get(k)) {
            (Some(&(rx, vx)), Some(&(ry, _))) if rx < ry => {
                i += 1;
                (rx, vx.checked_mul(b).ok_or_else(overflow)?)
            }
            (Some(&(rx, _)), Some(&(ry, vy))) if ry < rx => {
                k += 1;
                (ry, vy.checked_mul(-a).ok_or_else(overflow)?)
            }
            (Some(&(rx, vx)), Some(&(_, vy))) => {
                i += 1;
                k += 1;
                let l = vx.checked_mul(b).ok_or_else(overflow)?;
                let r = vy.checked_mul(a).ok_or_else(overflow)?;
                (rx, l.checked_sub(r).ok_or_else(overflow)?)
            }
            (Some(&(rx, vx)), None) => {
                i += 1;
                (rx, vx.checked_mul(b).ok_or_else(overflow)?)
            }
            (None, Some(&(ry, vy))) => {
                k += 1;
                (ry, vy.checked_mul(-a).ok_or_else(overflow)?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((row, v));
        }
    }
    let g = out.iter().fold(0, |g, e| gcd_i128(g, e.1));
    if g > 1 {
        for e in &mut out {
            e.1 /= g;
        }
    }
    Ok(out)
}

/// Left-to-right column reduction; returns the pivot row of each column.
/// The number of pivots is the rank over `ℚ`.
fn reduce(columns: &mut [Column]) -> Result<Vec<Option<u32>>> {
    let mut pivot_of: HashMap<u32, usize> = HashMap::new();
    let mut lows = vec![None; columns.len()];
    for j in 0..columns.len() {
        while let Some(&(low, a)) = columns[j].last() {
            let Some(&k) = pivot_of.get(&low) else {
                pivot_of.insert(low, j);
                lows[j] = Some(low);
                break;
            };
            let b = columns[k].last().expect("pivot column is nonzero").1;
            let g = gcd_i128(a, b);
            columns[j] = combine(&columns[j], b / g, &columns[k], a / g)?;
        }
    }
    Ok(lows)
}

/// Reduced Betti numbers `b̃_0..b̃_ν` of `S_n`, assembled level by level
/// from the boundary matrices `∂_q`.
pub fn level_betti(rect: &WeightedRectangle, n: i64) -> Result<Vec<u64>> {
    let nu = rect.nu();
    let masks = 1usize << nu;
    let cells: Vec<(usize, usize)> = rect
        .cubes()
        .into_iter()
        .filter(|c| c.2 <= n)
        .map(|c| (c.0, c.1))
        .collect();
    let mut index: HashMap<usize, u32> = HashMap::new();
    let mut by_dim: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nu + 1];
    for &(p, mask) in &cells {
        let q = mask.count_ones() as usize;
        index.insert(p * masks + mask, by_dim[q].len() as u32);
        by_dim[q].push((p, mask));
    }
    // rank ∂_q for q = 0..=ν, with ∂_0 the augmentation
    let mut ranks = vec![0u64; nu + 2];
    ranks[0] = u64::from(!by_dim[0].is_empty());
    for q in 1..=nu {
        let mut cols: Vec<Column> = by_dim[q]
            .iter()
            .map(|&(p, mask)| {
                let mut col: Column = rect
                    .boundary(p, mask)
                    .map(|(fp, fm, s)| (index[&(fp * masks + fm)], s))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        ranks[q] = reduce(&mut cols)?.iter().filter(|l| l.is_some()).count() as u64;
    }
    Ok((0..=nu)
        .map(|q| by_dim[q].len() as u64 - ranks[q] - ranks[q + 1])
        .collect())
}

/// Reduced Betti numbers per level; rows past the table are all zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub min_level: i64,
    /// `rows[k][q] = b̃_q(S_{min_level + k})`, `q = 0..=ν`.
    pub rows: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn max_level(&self) -> i64 {
        self.min_level + self.rows.len() as i64 - 1
    }

    pub fn row(&self, n: i64) -> Option<&[u64]> {
        if n < self.min_level {
            return None;
        }
        self.rows
            .get((n - self.min_level) as usize)
            .map(Vec::as_slice)
    }

    /// `Σ_n b̃_q(n)`.
    pub fn total(&self, q: usize) -> u64 {
        self.rows
            .iter()
            .map(|r| r.get(q).copied().unwrap_or(0))
            .sum()
    }

    /// `−min w + Σ_n Σ_q (−1)^q b̃_q(n)`.
    pub fn eu_hstar(&self) -> i64 {
        let alt: i64 = (0..self.width())
            .map(|q| {
                if q % 2 == 0 {
                    self.total(q) as i64
                } else {
                    -(self.total(q) as i64)
                }
            })
            .sum();
        -self.min_level + alt
    }

    /// `−min w + Σ_n b̃_0(n)`.
    pub fn eu_h0(&self) -> i64 {
        -self.min_level + self.total(0) as i64
    }

    fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `true` when `b̃_q(n) = 0` for all `q ≥ nu` and all levels.
    pub fn vanishes_from(&self, nu: usize) -> bool {
        self.rows.iter().all(|r| r.iter().skip(nu).all(|&b| b == 0))
    }

    /// Tab-separated rows `n b0 b1 …` with a header line.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("n");
        for q in 0..self.width() {
            write!(s, "\tb{q}").unwrap();
        }
        s.push('\n');
        for (k, r) in self.rows.iter().enumerate() {
            write!(s, "{}", self.min_level + k as i64).unwrap();
            for b in r {
                write!(s, "\t{b}").unwrap();
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuOracle {
    pub j: u64,
    pub dims: Vec<usize>,
    pub min_weight: i64,
    pub eu_h0: i64,
    pub eu_hstar: i64,
    pub table: BettiTable,
}

/// Oracle values on the rectangle for `w_j` with `m_i = 2δ_i + 1 + margin`.
pub fn oracle_eu(c: &CuspCollection, j: u64, box_margin: usize, cap: usize) -> Result<EuOracle> {
    oracle_eu_in(c, j, default_dims(c, box_margin), cap)
}

/// As [`oracle_eu`] with explicit box dimensions.
pub fn oracle_eu_in(c: &CuspCollection, j: u64, dims: Vec<usize>, cap: usize) -> Result<EuOracle> {
    let rect = WeightedRectangle::new(c, WeightKind::Wa { a: j }, dims, cap)?;
    let table = rect.betti_table()?;
    Ok(EuOracle {
        j,
        dims: rect.dims().to_vec(),
        min_weight: rect.min_weight(),
        eu_h0: table.eu_h0(),
        eu_hstar: table.eu_hstar(),
        table,
    })
}

/// `min W` over `T_j = {x : |x| = j+1}` inside the rectangle with the given margin.
pub fn min_w_over_diagonal(c: &CuspCollection, j: u64, box_margin: usize) -> Result<i64> {
    min_w_over_diagonal_in(c, j, &default_dims(c, box_margin))
}

/// As [`min_w_over_diagonal`] with explicit box dimensions.
pub fn min_w_over_diagonal_in(c: &CuspCollection, j: u64, dims: &[usize]) -> Result<i64> {
    let hs: Vec<CountingFn> = c
        .cusps()
        .iter()
        .map(|cu| cu.semigroup.counting_fn())
        .collect();
    let delta = c.delta() as i64;
    let target = j as usize + 1;
    // min over the slice of Σ H_i(x_i) by dynamic programming over coordinates
    let mut best: Vec<Option<i64>> = vec![Some(0)];
    for (h, &m) in hs.iter().zip(dims) {
        let mut next = vec![None; (best.len() + m).min(target + 1)];
        for (s, b) in best.iter().enumerate() {
            let Some(b) = b else { continue };
            for x in 0..=m.min(target.saturating_sub(s)) {
                let v = b + h.value(x as i64);
                let slot = &mut next[s + x];
                *slot = Some(slot.map_or(v, |o: i64| o.min(v)));
            }
        }
        best = next;
    }
    match best.get(target).copied().flatten() {
        Some(hmin) => Ok(delta - target as i64 + hmin),
        None => Err(Error::InvalidInput(format!(
            "no lattice point with |x| = {target} in the rectangle"
        ))),
    }
}

/// `true` when `b̃_q(n) = 0` for every `q ≥ ν` and every level.
pub fn check_vanishing(rect: &WeightedRectangle) -> Result<bool> {
    Ok(rect.betti_table()?.vanishes_from(rect.nu()))
}

/// Oracle results at one `j` compared with the closed formulas, over
/// several box margins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleAgreement {
    pub j: u64,
    pub expected_eu_h0: i64,
    pub expected_eu_hstar: i64,
    pub expected_min_w: i64,
    pub oracle_eu_h0: i64,
    pub oracle_eu_hstar: i64,
    pub min_w: i64,
    /// `Σ_n b̃_1(n)`; equals `eu ℍ⁰ − eu ℍ*` when `ν = 2`.
    pub h1_total: u64,
    pub vanishing: bool,
    pub margin_stable: bool,
    pub pass: bool,
    pub table: BettiTable,
}

pub fn verify_j(
    c: &CuspCollection,
    j: u64,
    margins: &[usize],
    cap: usize,
) -> Result<OracleAgreement> {
    let margins = if margins.is_empty() {
        &[0][..]
    } else {
        margins
    };
    let boxes: Vec<Vec<usize>> = margins.iter().map(|&m| default_dims(c, m)).collect();
    verify_j_in(c, j, &boxes, cap)
}

/// As [`verify_j`] with explicit box dimensions; stability is checked
/// across `boxes`.
pub fn verify_j_in(
    c: &CuspCollection,
    j: u64,
    boxes: &[Vec<usize>],
    cap: usize,
) -> Result<OracleAgreement> {
    if boxes.is_empty() {
        return Err(Error::InvalidInput("no box dimensions given".into()));
    }
    let delta = c.delta() as i64;
    let shift = delta - 1 - j as i64;
    let h = c.h_fn();
    let expected_eu_h0 = h.value(j as i64 + 1) + shift;
    let expected_eu_hstar = c.f_values(j as usize).get(j as i64) + shift;
    let expected_min_w = shift + h.value(j as i64 + 1);

    let runs: Vec<(EuOracle, i64)> = boxes
        .iter()
        .map(|dims| {
            Ok((
                oracle_eu_in(c, j, dims.clone(), cap)?,
                min_w_over_diagonal_in(c, j, dims)?,
            ))
        })
        .collect::<Result<_>>()?;
    let (first, min_w) = &runs[0];
    let margin_stable = runs
        .iter()
        .all(|(o, mw)| (o.eu_h0, o.eu_hstar, *mw) == (first.eu_h0, first.eu_hstar, *min_w));
    let vanishing = runs.iter().all(|(o, _)| o.table.vanishes_from(c.nu()));
    let pass = margin_stable
        && vanishing
        && first.eu_h0 == expected_eu_h0
        && first.eu_hstar == expected_eu_hstar
        && *min_w == expected_min_w;
    Ok(OracleAgreement {
        j,
        expected_eu_h0,
        expected_eu_hstar,
        expected_min_w,
        oracle_eu_h0: first.eu_h0,
        oracle_eu_hstar: first.eu_hstar,
        min_w: *min_w,
        h1_total: first.table.total(1),
        vanishing,
        margin_stable,
        pass,
        table: first.table.clone(),
    })
}

/// [`verify_j`] for every `j ∈ [0, 2δ−2]`, in parallel, ordered by `j`.
pub fn verify_sweep(
    c: &CuspCollection,
    margins: &[usize],
    cap: usize,
) -> Result<Vec<OracleAgreement>> {
    let top = c.top_index() as u64;
    (0..=top)
        .into_par_iter()
        .map(|j| verify_j(c, j, margins, cap))
        .collect()
}

/// `b̃` rows for every level computed independently with [`level_betti`].
pub fn betti_table_by_levels(rect: &WeightedRectangle) -> Result<BettiTable> {
    let (min, max) = (rect.min_weight(), rect.max_weight());
    let rows = (min..=max)
        .into_par_iter()
        .map(|n| level_betti(rect, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable {
        min_level: min,
        rows,
    })
}
