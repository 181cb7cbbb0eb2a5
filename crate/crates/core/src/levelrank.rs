//! Level-rank duality between level-ℓ rank-e and level-e rank-ℓ charged
//! multipartitions, the dotted crystal it induces, and the charge maps θ.
//!
//! The duality reads every bead of a level-ℓ abacus as a bead of a single
//! global abacus and re-reads that abacus with level and rank exchanged,
//! after the twist `|λ, s⟩ ↦ |λ^tr_rev, −s_rev⟩`. The literature fixes the
//! offsets and component orders in several incompatible ways; the choices
//! are collected in [`LrVariant`], and [`convention_search`] reruns the anchor
//! battery that singles out [`LrVariant::FROZEN`].

use serde::{Deserialize, Serialize};

use crate::crystal::{apply_word, is_hw, lower, peel, ResidueWord};
use crate::error::{Error, Result};
use crate::partitions::{
    multipartitions_up_to, parse_charged, Charge, ChargedMultipartition, Multipartition, Partition,
};
use crate::rational::{int, Rational};

/// A level-e charged multipartition on the rank-ℓ side of the duality.
pub type DualChargedMultipartition = ChargedMultipartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwistPlacement {
    None,
    Input,
    Output,
    Both,
}

/// One reading of the global bead indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrVariant {
    /// `o` in `b_u = λ_u + s − u + o`; 0 or 1.
    pub bead_offset: i64,
    /// Source components numbered `ℓ, …, 1` instead of `1, …, ℓ`.
    pub source_reversed: bool,
    /// Dual components numbered `e, …, 1` instead of `1, …, e`.
    pub dual_reversed: bool,
    /// Source residues in `{0..e−1}` instead of `{1..e}`.
    pub source_residues_from_zero: bool,
    /// Dual residues in `{0..ℓ−1}` instead of `{1..ℓ}`.
    pub dual_residues_from_zero: bool,
    pub twist: TwistPlacement,
}

impl LrVariant {
    pub const FROZEN: LrVariant = LrVariant {
        bead_offset: 1,
        source_reversed: true,
        dual_reversed: true,
        source_residues_from_zero: false,
        dual_residues_from_zero: false,
        twist: TwistPlacement::Input,
    };

    /// All 128 readings.
    pub fn all() -> Vec<LrVariant> {
        let mut out = Vec::with_capacity(128);
        for bead_offset in [0, 1] {
            for source_reversed in [false, true] {
                for dual_reversed in [false, true] {
                    for source_residues_from_zero in [false, true] {
                        for dual_residues_from_zero in [false, true] {
                            for twist in [
                                TwistPlacement::None,
                                TwistPlacement::Input,
                                TwistPlacement::Output,
                                TwistPlacement::Both,
                            ] {
                                out.push(LrVariant {
                                    bead_offset,
                                    source_reversed,
                                    dual_reversed,
                                    source_residues_from_zero,
                                    dual_residues_from_zero,
                                    twist,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Re-reads the abacus of `x` (rank `e`) as a level-e, rank-ℓ abacus.
/// `None` when the variant produces an invalid bead configuration.
fn reread(x: &ChargedMultipartition, e: usize, v: &LrVariant) -> Option<ChargedMultipartition> {
    let l = x.level() as i64;
    let ei = e as i64;
    let off = v.bead_offset;
    let charge = x.charge().entries();
    let comps = x.mp().components();
    // every bead value up to floor[b] is present on component b
    let floor: Vec<i64> = (0..comps.len())
        .map(|b| charge[b] - comps[b].len() as i64 - 1 + off)
        .collect();
    let explicit: Vec<Vec<i64>> = comps
        .iter()
        .zip(charge)
        .map(|(lam, &s)| {
            lam.parts()
                .iter()
                .enumerate()
                .map(|(u, &p)| p as i64 + s - (u as i64 + 1) + off)
                .collect()
        })
        .collect();
    let present = |xv: i64, b: usize| xv <= floor[b] || explicit[b].contains(&xv);
    let cmin = if v.source_residues_from_zero { 0 } else { 1 };
    let dmin = if v.dual_residues_from_zero { 0 } else { 1 };
    let top = charge.iter().max().copied().unwrap_or(0)
        + comps.iter().map(|p| p.part(1) as i64).max().unwrap_or(0)
        + 2;

    let mut out: Vec<(i64, Partition, i64)> = Vec::with_capacity(e);
    for cidx in 0..ei {
        let c = cmin + cidx;
        let run = if v.dual_reversed { ei - cidx } else { cidx + 1 };
        let m0 = (0..comps.len())
            .map(|b| ceil_div(c - floor[b], ei))
            .max()
            .unwrap_or(0);
        let m_hi = ceil_div(c - top, ei) - 1;
        let mut ys = Vec::new();
        for m in m_hi..m0 {
            let xv = c - ei * m;
            for b in 0..comps.len() {
                if present(xv, b) {
                    let d = if v.source_reversed { l - b as i64 } else { b as i64 + 1 };
                    ys.push(d - 1 + dmin - l * m);
                }
            }
        }
        let y_floor = l - 1 + dmin - l * m0;
        ys.sort_unstable_by(|a, b| b.cmp(a));
        if ys.iter().any(|&y| y <= y_floor) {
            return None;
        }
        let t = y_floor + ys.len() as i64 + (1 - off);
        let mut parts = Vec::with_capacity(ys.len());
        for (u, &y) in ys.iter().enumerate() {
            let p = y - t + (u as i64 + 1) - off;
            if p < 0 {
                return None;
            }
            if p > 0 {
                parts.push(p as usize);
            }
        }
        out.push((run, Partition::new(parts).ok()?, t));
    }
    out.sort_by_key(|(run, _, _)| *run);
    let (mp, ch): (Vec<Partition>, Vec<i64>) = out.into_iter().map(|(_, p, t)| (p, t)).unzip();
    Some(ChargedMultipartition::from_parts_unchecked(
        Multipartition::new(mp),
        Charge::new(ch),
    ))
}

/// The duality under an arbitrary variant; `rank` is the rank of `x`.
pub fn k_generic(
    x: &ChargedMultipartition,
    rank: usize,
    v: &LrVariant,
) -> Option<ChargedMultipartition> {
    let input = match v.twist {
        TwistPlacement::Input | TwistPlacement::Both => x.twist(),
        _ => x.clone(),
    };
    let y = reread(&input, rank, v)?;
    Some(match v.twist {
        TwistPlacement::Output | TwistPlacement::Both => y.twist(),
        _ => y,
    })
}

fn frozen(x: &ChargedMultipartition, rank: usize, v: &LrVariant) -> ChargedMultipartition {
    // The frozen reading is total; a failure here is a bug, not bad input.
    k_generic(x, rank, v).expect("level-rank reading failed for a validated variant")
}

/// `k : Π^ℓ_s → Π^e_{−s}` for a level-ℓ vertex of rank `e`.
pub fn k_map(x: &ChargedMultipartition, e: usize) -> DualChargedMultipartition {
    frozen(x, e, &LrVariant::FROZEN)
}

/// `k̇`, the inverse of [`k_map`]; `l` is the level of the target side.
pub fn k_dot(y: &DualChargedMultipartition, l: usize) -> ChargedMultipartition {
    frozen(y, l, &LrVariant::FROZEN)
}

/// The charge `ṙ` of `k|∅, r⟩`, for `r ∈ A(s)`.
pub fn dual_charge(r: &Charge, e: usize) -> Result<Charge> {
    dual_charge_with(r, e, &LrVariant::FROZEN)
}

pub(crate) fn dual_charge_with(r: &Charge, e: usize, v: &LrVariant) -> Result<Charge> {
    if !r.in_fundamental_domain(e) {
        return Err(Error::BaseChargeNotInDomain);
    }
    let y = k_generic(&ChargedMultipartition::empty(r.clone()), e, v)
        .ok_or_else(|| Error::Internal("level-rank image of an empty vertex".into()))?;
    Ok(y.into_parts().1)
}

/// `r ∈ A(s)`.
pub fn in_a(r: &Charge, e: usize) -> bool {
    r.in_fundamental_domain(e)
}

/// `ṙ ∈ Ȧ(−s)` for a dual charge of length e and level ℓ.
pub fn in_a_dot(rd: &Charge, l: usize) -> bool {
    rd.in_fundamental_domain(l)
}

pub(crate) fn dotted_lower_with(
    x: &ChargedMultipartition,
    j: usize,
    e: usize,
    v: &LrVariant,
) -> Option<ChargedMultipartition> {
    let l = x.level();
    if l < 2 {
        return None;
    }
    let y = k_generic(x, e, v)?;
    let z = lower(&y, j, l)?;
    k_generic(&z, l, v)
}

pub(crate) fn dotted_raise_with(
    x: &ChargedMultipartition,
    j: usize,
    e: usize,
    v: &LrVariant,
) -> Option<ChargedMultipartition> {
    let l = x.level();
    if l < 2 {
        return None;
    }
    let y = k_generic(x, e, v)?;
    let z = crate::crystal::raise(&y, j, l)?;
    k_generic(&z, l, v)
}

/// `ḟ_j = k̇ ∘ f̃_j ∘ k` with the rank-ℓ engine; `None` at level 1.
pub fn dotted_lower(x: &ChargedMultipartition, j: usize, e: usize) -> Option<ChargedMultipartition> {
    dotted_lower_with(x, j, e, &LrVariant::FROZEN)
}

/// `ė_j = k̇ ∘ ẽ_j ∘ k`; `None` at level 1.
pub fn dotted_raise(x: &ChargedMultipartition, j: usize, e: usize) -> Option<ChargedMultipartition> {
    dotted_raise_with(x, j, e, &LrVariant::FROZEN)
}

pub(crate) fn dotted_peel_with(
    x: &ChargedMultipartition,
    e: usize,
    v: &LrVariant,
) -> Option<(ChargedMultipartition, ResidueWord)> {
    let l = x.level();
    if l < 2 {
        return Some((x.clone(), ResidueWord::empty(l.max(1))));
    }
    let (hw, word) = peel(&k_generic(x, e, v)?, l);
    Some((k_generic(&hw, l, v)?, word))
}

/// Peels the dotted crystal; the word has rank ℓ.
pub fn dotted_peel(x: &ChargedMultipartition, e: usize) -> (ChargedMultipartition, ResidueWord) {
    dotted_peel_with(x, e, &LrVariant::FROZEN)
        .expect("level-rank reading failed for a validated variant")
}

pub(crate) fn apply_dotted_word_with(
    x: &ChargedMultipartition,
    word: &ResidueWord,
    e: usize,
    v: &LrVariant,
) -> Option<ChargedMultipartition> {
    if word.is_empty() {
        return Some(x.clone());
    }
    let l = x.level();
    let y = apply_word(&k_generic(x, e, v)?, word)?;
    k_generic(&y, l, v)
}

/// Applies dotted lowering operators along a rank-ℓ word.
pub fn apply_dotted_word(
    x: &ChargedMultipartition,
    word: &ResidueWord,
    e: usize,
) -> Option<ChargedMultipartition> {
    apply_dotted_word_with(x, word, e, &LrVariant::FROZEN)
}

/// Highest weight for the dotted crystal.
pub fn is_dotted_hw(x: &ChargedMultipartition, e: usize) -> bool {
    x.level() < 2 || is_hw(&k_map(x, e), x.level())
}

/// `θ(s) = (e − s_1 + s_ℓ, s_1 − s_2, …, s_{ℓ−1} − s_ℓ)`.
pub fn theta(s: &[Rational], e: usize) -> Vec<Rational> {
    let l = s.len();
    let mut out = Vec::with_capacity(l);
    out.push(int(e as i64) - s[0] + s[l - 1]);
    for i in 0..l - 1 {
        out.push(s[i] - s[i + 1]);
    }
    out
}

/// Inverse of [`theta`] on the fibre of total charge `s_total`.
pub fn theta_inv(a: &[Rational], e: usize, s_total: Rational) -> Result<Vec<Rational>> {
    let l = a.len();
    if l == 0 {
        return Err(Error::Precondition("empty tuple".into()));
    }
    let sum: Rational = a.iter().copied().sum();
    if sum != int(e as i64) {
        return Err(Error::Precondition(format!(
            "entries must sum to e = {e}, got {}",
            crate::rational::format(&sum)
        )));
    }
    let weighted: Rational = (1..l).map(|j| int(j as i64) * a[j]).sum();
    let base = (s_total - weighted) / int(l as i64);
    Ok((0..l)
        .map(|i| base + a[i + 1..].iter().copied().sum::<Rational>())
        .collect())
}

/// [`theta_inv`] demanding an integral charge.
pub fn theta_inv_charge(a: &[Rational], e: usize, s_total: i64) -> Result<Charge> {
    let s = theta_inv(a, e, int(s_total))?;
    s.iter()
        .map(|r| {
            if r.is_integer() {
                Ok(*r.numer() as i64)
            } else {
                Err(Error::Precondition("preimage is not integral".into()))
            }
        })
        .collect::<Result<Vec<i64>>>()
        .map(Charge::new)
}

/// Outcome of rerunning the convention search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub survivors: Vec<LrVariant>,
    /// Survivors grouped by identical behaviour on the test domain.
    pub classes: Vec<Vec<LrVariant>>,
}

fn charges_in_box(level: usize, lo: i64, hi: i64) -> Vec<Charge> {
    let mut acc: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..level {
        acc = acc
            .into_iter()
            .flat_map(|c| {
                (lo..=hi).map(move |v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    acc.into_iter().map(Charge::new).collect()
}

fn sample_charges(level: usize) -> Vec<Charge> {
    vec![
        Charge::new(vec![0; level]),
        Charge::new((0..level as i64).collect()),
        Charge::new((0..level as i64).map(|i| -i).collect()),
    ]
}

fn passes_anchors(v: &LrVariant) -> bool {
    let empty_image = |r: &[i64], e: usize| {
        k_generic(&ChargedMultipartition::empty(Charge::new(r.to_vec())), e, v)
    };
    // anchors for the dual charge
    let want = |r: &[i64], e: usize, rd: &[i64]| {
        empty_image(r, e) == Some(ChargedMultipartition::empty(Charge::new(rd.to_vec())))
    };
    if !want(&[-1, 0, 0, 2], 3, &[-1, -1, 1]) || !want(&[0, 2], 3, &[-1, -1, 0]) {
        return false;
    }
    // empty vertices at base charges go to empty vertices at dual base charges
    for e in 2..=4 {
        for l in 2..=3 {
            for r in charges_in_box(l, -3, 3) {
                if !r.in_fundamental_domain(e) {
                    continue;
                }
                match empty_image(r.entries(), e) {
                    Some(y) if y.is_empty() && y.charge().in_fundamental_domain(l) => {}
                    _ => return false,
                }
            }
        }
    }
    // k̇ ∘ k = id
    for e in 2..=3 {
        for l in 2..=3 {
            for mp in multipartitions_up_to(3, l) {
                for s in sample_charges(l) {
                    let x = ChargedMultipartition::from_parts_unchecked(mp.clone(), s);
                    match k_generic(&x, e, v).and_then(|y| k_generic(&y, l, v)) {
                        Some(back) if back == x => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    // dotted and undotted lowering commute
    for e in 2..=3 {
        for mp in multipartitions_up_to(3, 2) {
            let x = ChargedMultipartition::from_parts_unchecked(mp, Charge::new(vec![0, 1]));
            for i in 0..e {
                for j in 0..2 {
                    let a = lower(&x, i, e).and_then(|y| dotted_lower_with(&y, j, e, v));
                    let b = dotted_lower_with(&x, j, e, v).and_then(|y| lower(&y, i, e));
                    if a != b {
                        return false;
                    }
                }
            }
        }
    }
    // end-to-end decomposition of the four-component example
    let conv = crate::triple::Conventions {
        lr: *v,
        tie: crate::heisenberg::TieRule::FROZEN,
    };
    let x = parse_charged("-|3.2^2|-|3", "-3,2,1,1").expect("literal");
    let expect = crate::triple::TripleCoordinates {
        e_side: parse_charged("-|-|-|3", "-1,0,0,2").expect("literal"),
        sigma: Partition::new(vec![2]).expect("literal"),
        l_side: parse_charged("2^2|2.1|-", "-1,-1,1").expect("literal"),
    };
    matches!(crate::triple::beta_decompose_with(&x, 3, &conv), Ok(c) if c == expect)
}

fn behaviour(v: &LrVariant) -> Vec<Option<ChargedMultipartition>> {
    let mut out = Vec::new();
    for e in 2..=3 {
        for l in 1..=3 {
            for mp in multipartitions_up_to(3, l) {
                for s in sample_charges(l) {
                    let x = ChargedMultipartition::from_parts_unchecked(mp.clone(), s);
                    out.push(k_generic(&x, e, v));
                }
            }
        }
    }
    out
}

/// Tests every [`LrVariant`] against the anchor battery and groups the
/// survivors into extensional equivalence classes.
pub fn convention_search() -> SearchReport {
    use rayon::prelude::*;
    let survivors: Vec<LrVariant> = LrVariant::all()
        .into_par_iter()
        .filter(passes_anchors)
        .collect();
    let mut classes: Vec<(Vec<Option<ChargedMultipartition>>, Vec<LrVariant>)> = Vec::new();
    for v in &survivors {
        let b = behaviour(v);
        match classes.iter_mut().find(|(bb, _)| *bb == b) {
            Some((_, members)) => members.push(*v),
            None => classes.push((b, vec![*v])),
        }
    }
    SearchReport {
        survivors,
        classes: classes.into_iter().map(|(_, m)| m).collect(),
    }
}
