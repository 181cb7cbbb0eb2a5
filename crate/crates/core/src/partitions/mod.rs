//! Partitions, multipartitions, charges and the elementary operations on them.

mod enumerate;
mod notation;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{
    count_partitions, multipartitions, multipartitions_up_to, partitions, regular_partitions,
};
pub use notation::{parse_charge, parse_charged, parse_multipartition, parse_partition};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, rejecting zero parts and increases.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    /// Sorts the input and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `a` (1-based); zero beyond the last row.
    pub fn part(&self, a: usize) -> usize {
        if a == 0 {
            return 0;
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let first = match self.0.first() {
            Some(&p) => p,
            None => return Partition::empty(),
        };
        let cols = (0..first)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(cols)
    }

    /// Multiset union of parts.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Each part repeated `e` times.
    pub fn power(&self, e: usize) -> Partition {
        let parts = self
            .0
            .iter()
            .flat_map(|&p| std::iter::repeat(p).take(e))
            .collect();
        Partition(parts)
    }

    /// Part value to multiplicity, in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True iff no part occurs `d` or more times.
    pub fn is_regular(&self, d: usize) -> bool {
        self.multiplicities().iter().all(|&(_, m)| m < d)
    }

    /// The unique `(σ, ρ)` with `self = σ^e ⊔ ρ` and `ρ` e-regular.
    pub fn euclid_div(&self, e: usize) -> (Partition, Partition) {
        assert!(e >= 2, "euclid_div needs e >= 2");
        let mut sigma = Vec::new();
        let mut rho = Vec::new();
        for (p, m) in self.multiplicities() {
            sigma.extend(std::iter::repeat(p).take(m / e));
            rho.extend(std::iter::repeat(p).take(m % e));
        }
        (Partition(sigma), Partition(rho))
    }

    /// Digits `λ_(0), λ_(1), …` with `λ = ⊔ λ_(i)^{d^i}`, each digit d-regular.
    ///
    /// The list always has at least one entry and never ends with an empty
    /// digit unless it is the only one.
    pub fn d_adic_expand(&self, d: usize) -> Vec<Partition> {
        assert!(d >= 2, "d_adic_expand needs d >= 2");
        let mut digits: Vec<BTreeMap<usize, usize>> = Vec::new();
        for (p, mut m) in self.multiplicities() {
            let mut i = 0;
            while m > 0 {
                if digits.len() <= i {
                    digits.push(BTreeMap::new());
                }
                let r = m % d;
                if r > 0 {
                    digits[i].insert(p, r);
                }
                m /= d;
                i += 1;
            }
        }
        if digits.is_empty() {
            return vec![Partition::empty()];
        }
        digits
            .into_iter()
            .map(|dig| {
                let parts = dig
                    .iter()
                    .rev()
                    .flat_map(|(&p, &m)| std::iter::repeat(p).take(m))
                    .collect();
                Partition(parts)
            })
            .collect()
    }

    /// Inverse of [`Partition::d_adic_expand`].
    pub fn from_d_adic(digits: &[Partition], d: usize) -> Partition {
        let mut acc = Partition::empty();
        let mut scale = 1usize;
        for dig in digits {
            acc = acc.concat(&dig.power(scale));
            scale *= d;
        }
        acc
    }

    /// β-numbers `b_u = λ_u + s − u + 1` for `u = 1..=depth`.
    pub fn beta_numbers(&self, s: i64, depth: usize) -> Result<Vec<i64>> {
        if depth < self.len() {
            return Err(Error::InsufficientDepth);
        }
        Ok((1..=depth)
            .map(|u| self.part(u) as i64 + s - u as i64 + 1)
            .collect())
    }

    /// Recovers the partition from a strictly decreasing bead window whose
    /// omitted tail is fully occupied below the last entry.
    pub fn from_beta(beads: &[i64], s: i64) -> Result<Partition> {
        if beads.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition);
        }
        let mut parts = Vec::with_capacity(beads.len());
        for (idx, &b) in beads.iter().enumerate() {
            let p = b - s + idx as i64;
            if p < 0 {
                return Err(Error::InvalidPartition);
            }
            if p > 0 {
                parts.push(p as usize);
            }
        }
        Partition::new(parts)
    }

    /// Adds a box at the end of row `a`; the caller guarantees addability.
    pub(crate) fn add_box(&mut self, a: usize) {
        if a == self.0.len() + 1 {
            self.0.push(1);
        } else {
            self.0[a - 1] += 1;
        }
        debug_assert!(a == 1 || self.0[a - 2] >= self.0[a - 1]);
    }

    /// Removes the last box of row `a`; the caller guarantees removability.
    pub(crate) fn remove_box(&mut self, a: usize) {
        self.0[a - 1] -= 1;
        if self.0[a - 1] == 0 {
            self.0.pop();
        }
        debug_assert!(self.0.get(a).map_or(true, |&n| n <= self.0[a - 1]));
    }

    /// Addable boxes as `(row, col)`, top row first.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let len = self.0.len();
        for a in 1..=len + 1 {
            let cur = self.part(a);
            if a == 1 || self.part(a - 1) > cur {
                out.push((a, cur + 1));
            }
        }
        out
    }

    /// Removable boxes as `(row, col)`, top row first.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.0.len() {
            if self.part(a) > self.part(a + 1) {
                out.push((a, self.part(a)));
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::format_partition(self))
    }
}

/// An ℓ-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    pub fn empty(level: usize) -> Self {
        Multipartition(vec![Partition::empty(); level])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.0[j]
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    pub(crate) fn components_mut(&mut self) -> &mut Vec<Partition> {
        &mut self.0
    }

    /// Components reversed and each transposed.
    pub fn transpose_reversed(&self) -> Multipartition {
        Multipartition(self.0.iter().rev().map(Partition::transpose).collect())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::format_multipartition(self))
    }
}

/// A multicharge `(s_1, …, s_ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(entries: Vec<i64>) -> Self {
        Charge(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `−s_rev`.
    pub fn neg_rev(&self) -> Charge {
        Charge(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// `−s`, no reversal.
    pub fn neg(&self) -> Charge {
        Charge(self.0.iter().map(|&x| -x).collect())
    }

    /// Membership in `A(s)`: `s_1 ≤ … ≤ s_ℓ ≤ s_1 + e`.
    pub fn in_fundamental_domain(&self, e: usize) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&first), Some(&last)) => {
                self.0.windows(2).all(|w| w[0] <= w[1]) && last <= first + e as i64
            }
            _ => true,
        }
    }
}

impl From<Vec<i64>> for Charge {
    fn from(v: Vec<i64>) -> Self {
        Charge(v)
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::format_charge(self))
    }
}

/// A box `(a, b, j)` of a Young diagram; all indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramBox {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl DiagramBox {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        DiagramBox { row, col, comp }
    }

    /// Content `b − a + s_j`.
    pub fn content(&self, charge: &Charge) -> i64 {
        self.col as i64 - self.row as i64 + charge.entries()[self.comp - 1]
    }
}

/// The symbol `|λ, s⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ChargedRepr", into = "ChargedRepr")]
pub struct ChargedMultipartition {
    mp: Multipartition,
    charge: Charge,
}

#[derive(Serialize, Deserialize)]
struct ChargedRepr {
    components: Vec<Partition>,
    charge: Vec<i64>,
}

impl TryFrom<ChargedRepr> for ChargedMultipartition {
    type Error = Error;
    fn try_from(r: ChargedRepr) -> Result<Self> {
        ChargedMultipartition::new(Multipartition(r.components), Charge(r.charge))
    }
}

impl From<ChargedMultipartition> for ChargedRepr {
    fn from(x: ChargedMultipartition) -> Self {
        ChargedRepr {
            components: x.mp.0,
            charge: x.charge.0,
        }
    }
}

impl ChargedMultipartition {
    pub fn new(mp: Multipartition, charge: Charge) -> Result<Self> {
        if mp.level() != charge.len() || mp.level() == 0 {
            return Err(Error::LengthMismatch {
                components: mp.level(),
                charge: charge.len(),
            });
        }
        Ok(ChargedMultipartition { mp, charge })
    }

    pub(crate) fn from_parts_unchecked(mp: Multipartition, charge: Charge) -> Self {
        debug_assert_eq!(mp.level(), charge.len());
        ChargedMultipartition { mp, charge }
    }

    /// `|∅, s⟩`.
    pub fn empty(charge: Charge) -> Self {
        ChargedMultipartition {
            mp: Multipartition::empty(charge.len()),
            charge,
        }
    }

    pub fn mp(&self) -> &Multipartition {
        &self.mp
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn into_parts(self) -> (Multipartition, Charge) {
        (self.mp, self.charge)
    }

    pub fn level(&self) -> usize {
        self.mp.level()
    }

    pub fn size(&self) -> usize {
        self.mp.size()
    }

    pub fn is_empty(&self) -> bool {
        self.mp.is_empty()
    }

    pub(crate) fn mp_mut(&mut self) -> &mut Multipartition {
        &mut self.mp
    }

    /// `|λ, s⟩^tr = |λ^tr, −s⟩`, components kept in place.
    pub fn charged_transpose(&self) -> ChargedMultipartition {
        ChargedMultipartition {
            mp: Multipartition(self.mp.0.iter().map(Partition::transpose).collect()),
            charge: self.charge.neg(),
        }
    }

    /// `|λ^tr_rev, −s_rev⟩`.
    pub fn twist(&self) -> ChargedMultipartition {
        ChargedMultipartition {
            mp: self.mp.transpose_reversed(),
            charge: self.charge.neg_rev(),
        }
    }

    /// Every box of the diagram, component by component, row by row.
    pub fn boxes(&self) -> Vec<DiagramBox> {
        let mut out = Vec::with_capacity(self.size());
        for (j, lam) in self.mp.0.iter().enumerate() {
            for (a, &p) in lam.parts().iter().enumerate() {
                for b in 1..=p {
                    out.push(DiagramBox::new(a + 1, b, j + 1));
                }
            }
        }
        out
    }
}

impl fmt::Display for ChargedMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}, ({})⟩", self.mp, self.charge)
    }
}
