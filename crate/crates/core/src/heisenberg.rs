//! The Heisenberg crystal: flattened abaci, e-periods and the operators ã_σ.
//!
//! All per-component bead sets are merged into one sequence ordered by value,
//! larger first. A highest weight vertex for both Kashiwara crystals has a
//! totally periodic flattened abacus, and ã_σ shifts its k-th period up by
//! σ_k.

use serde::{Deserialize, Serialize};

use crate::crystal::is_hw;
use crate::error::{Error, Result};
use crate::levelrank::{k_generic, LrVariant};
use crate::partitions::{Charge, ChargedMultipartition, Multipartition, Partition};

/// Order among beads of equal value on different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TieRule {
    SmallerFirst,
    LargerFirst,
}

impl TieRule {
    pub const FROZEN: TieRule = TieRule::SmallerFirst;
}

/// A bead: value `b` on component `comp` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bead {
    pub value: i64,
    pub comp: usize,
}

/// The merged bead window of a charged multipartition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatAbacus {
    pub beads: Vec<Bead>,
    pub depth: usize,
    pub tie: TieRule,
}

/// Periods as index lists into [`FlatAbacus::beads`], with their top values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodDecomposition {
    pub periods: Vec<Vec<usize>>,
    pub tops: Vec<i64>,
}

pub fn flatten(x: &ChargedMultipartition, depth: usize) -> Result<FlatAbacus> {
    flatten_with(x, depth, TieRule::FROZEN)
}

pub fn flatten_with(x: &ChargedMultipartition, depth: usize, tie: TieRule) -> Result<FlatAbacus> {
    let mut beads = Vec::with_capacity(depth * x.level());
    for (j, (lam, &s)) in x
        .mp()
        .components()
        .iter()
        .zip(x.charge().entries())
        .enumerate()
    {
        for b in lam.beta_numbers(s, depth)? {
            beads.push(Bead {
                value: b,
                comp: j + 1,
            });
        }
    }
    beads.sort_by(|p, q| {
        q.value.cmp(&p.value).then(match tie {
            TieRule::SmallerFirst => p.comp.cmp(&q.comp),
            TieRule::LargerFirst => q.comp.cmp(&p.comp),
        })
    });
    Ok(FlatAbacus { beads, depth, tie })
}

/// Greedily extracts `count` periods: each starts at the top unused bead of
/// value `v` and takes, for `t = 0..e`, the first unused bead of value `v − t`.
pub fn peel_periods(a: &FlatAbacus, e: usize, count: usize) -> Result<PeriodDecomposition> {
    let n = a.beads.len();
    let mut used = vec![false; n];
    let mut periods = Vec::with_capacity(count);
    let mut tops = Vec::with_capacity(count);
    let mut first_unused = 0;
    for _ in 0..count {
        while first_unused < n && used[first_unused] {
            first_unused += 1;
        }
        if first_unused == n {
            return Err(Error::NotTotallyPeriodic);
        }
        let v = a.beads[first_unused].value;
        let mut period = Vec::with_capacity(e);
        let mut cursor = first_unused;
        for t in 0..e as i64 {
            let want = v - t;
            while cursor < n && (a.beads[cursor].value > want || used[cursor]) {
                cursor += 1;
            }
            if cursor == n || a.beads[cursor].value != want {
                return Err(Error::NotTotallyPeriodic);
            }
            used[cursor] = true;
            period.push(cursor);
        }
        periods.push(period);
        tops.push(v);
    }
    Ok(PeriodDecomposition { periods, tops })
}

fn window_depth(x: &ChargedMultipartition, periods: usize, e: usize) -> usize {
    let s = x.charge().entries();
    let spread = (s.iter().max().unwrap() - s.iter().min().unwrap()) as usize;
    let rows = x.mp().components().iter().map(Partition::len).max().unwrap_or(0);
    rows + e * (periods + 2) + spread + 5
}

/// `ã_σ|∅, r⟩`: the k-th period of the empty abacus at `r` moves up by `σ_k`.
pub fn a_sigma(r: &Charge, sigma: &Partition, e: usize) -> Result<ChargedMultipartition> {
    a_sigma_with(r, sigma, e, TieRule::FROZEN)
}

pub(crate) fn a_sigma_with(
    r: &Charge,
    sigma: &Partition,
    e: usize,
    tie: TieRule,
) -> Result<ChargedMultipartition> {
    if r.is_empty() {
        return Err(Error::Precondition("charge must have at least one entry".into()));
    }
    let base = ChargedMultipartition::empty(r.clone());
    let depth = window_depth(&base, sigma.len(), e);
    let flat = flatten_with(&base, depth, tie)?;
    let dec = peel_periods(&flat, e, sigma.len()).map_err(|_| {
        Error::Internal("the empty abacus must be totally periodic".into())
    })?;
    let mut values: Vec<Bead> = flat.beads.clone();
    for (k, period) in dec.periods.iter().enumerate() {
        for &idx in period {
            values[idx].value += sigma.parts()[k] as i64;
        }
    }
    let mut comps = Vec::with_capacity(r.len());
    for (j, &rj) in r.entries().iter().enumerate() {
        let mut vs: Vec<i64> = values
            .iter()
            .filter(|b| b.comp == j + 1)
            .map(|b| b.value)
            .collect();
        vs.sort_unstable_by(|a, b| b.cmp(a));
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::PeriodInsertionConflict);
        }
        comps.push(Partition::from_beta(&vs, rj).map_err(|_| Error::PeriodInsertionConflict)?);
    }
    Ok(ChargedMultipartition::from_parts_unchecked(
        Multipartition::new(comps),
        r.clone(),
    ))
}

/// Highest weight for both Kashiwara crystals.
pub fn is_doubly_hw(x: &ChargedMultipartition, e: usize) -> bool {
    is_doubly_hw_with(x, e, &LrVariant::FROZEN)
}

pub(crate) fn is_doubly_hw_with(x: &ChargedMultipartition, e: usize, v: &LrVariant) -> bool {
    if !is_hw(x, e) {
        return false;
    }
    let l = x.level();
    l < 2 || k_generic(x, e, v).is_some_and(|y| is_hw(&y, l))
}

/// Recovers `(σ, r)` with `ã_σ|∅, r⟩ = x` for a doubly highest weight `x`.
pub fn sigma_extract(x: &ChargedMultipartition, e: usize) -> Result<(Partition, Charge)> {
    sigma_extract_with(x, e, &LrVariant::FROZEN, TieRule::FROZEN)
}

pub(crate) fn sigma_extract_with(
    x: &ChargedMultipartition,
    e: usize,
    v: &LrVariant,
    tie: TieRule,
) -> Result<(Partition, Charge)> {
    if !is_doubly_hw_with(x, e, v) {
        return Err(Error::NotDoublyHighestWeight);
    }
    let count = x.size() / e + 1;
    let depth = window_depth(x, count, e);
    let here = peel_periods(&flatten_with(x, depth, tie)?, e, count)?;
    let base = ChargedMultipartition::empty(x.charge().clone());
    let there = peel_periods(&flatten_with(&base, depth, tie)?, e, count)
        .map_err(|_| Error::Internal("the empty abacus must be totally periodic".into()))?;
    let diffs: Vec<i64> = here
        .tops
        .iter()
        .zip(&there.tops)
        .map(|(a, b)| a - b)
        .collect();
    if diffs.iter().any(|&d| d < 0) || diffs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonPartitionTops);
    }
    let sigma = Partition::from_vec_unchecked(
        diffs.into_iter().filter(|&d| d > 0).map(|d| d as usize).collect(),
    );
    let r = x.charge().clone();
    if !r.in_fundamental_domain(e) {
        return Err(Error::BaseChargeNotInDomain);
    }
    if a_sigma_with(&r, &sigma, e, tie)? != *x {
        return Err(Error::Internal("period shift does not reproduce the vertex".into()));
    }
    Ok((sigma, r))
}
