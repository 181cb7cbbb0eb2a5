//! The bijection β onto triples (Uglov vertex, partition, dual Uglov vertex)
//! coming from the three commuting crystals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{apply_word, peel, ResidueWord};
use crate::error::{Error, Result};
use crate::heisenberg::{a_sigma_with, sigma_extract_with, TieRule};
use crate::levelrank::{apply_dotted_word_with, dotted_peel_with, dual_charge_with, LrVariant};
use crate::partitions::{ChargedMultipartition, Partition};

/// The convention choices that β depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conventions {
    pub lr: LrVariant,
    pub tie: TieRule,
}

impl Conventions {
    pub const FROZEN: Conventions = Conventions {
        lr: LrVariant::FROZEN,
        tie: TieRule::FROZEN,
    };
}

/// `β(x) = (e-side vertex, σ, ℓ-side dual vertex)`.
///
/// The e-side lies in the component of `|∅, r⟩` with `r ∈ A(s)`, the dual
/// vertex in the rank-ℓ component of `|∅, ṙ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleCoordinates {
    pub e_side: ChargedMultipartition,
    pub sigma: Partition,
    pub l_side: ChargedMultipartition,
}

impl fmt::Display for TripleCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.e_side, self.sigma, self.l_side)
    }
}

impl TripleCoordinates {
    /// `r`.
    pub fn base(&self) -> &crate::Charge {
        self.e_side.charge()
    }

    /// `ṙ`.
    pub fn dual_base(&self) -> &crate::Charge {
        self.l_side.charge()
    }
}

/// Decomposes `x` through the three crystals.
pub fn beta_decompose(x: &ChargedMultipartition, e: usize) -> Result<TripleCoordinates> {
    beta_decompose_with(x, e, &Conventions::FROZEN)
}

/// Path data of a decomposition, kept for callers that rebuild at other
/// charges.
pub(crate) struct Decomposition {
    pub coords: TripleCoordinates,
    pub e_word: ResidueWord,
}

pub(crate) fn decompose(
    x: &ChargedMultipartition,
    e: usize,
    conv: &Conventions,
) -> Result<Decomposition> {
    if e < 2 {
        return Err(Error::InvalidRank { min: 2, got: e });
    }
    let l = x.level();
    let (hw, e_word) = peel(x, e);
    let (dhw, l_word) = dotted_peel_with(&hw, e, &conv.lr)
        .ok_or_else(|| Error::Internal("level-rank reading failed".into()))?;
    let (sigma, r) = sigma_extract_with(&dhw, e, &conv.lr, conv.tie).map_err(|err| match err {
        Error::Internal(_) => err,
        other => Error::Internal(format!("doubly highest weight extraction: {other}")),
    })?;
    let e_side = apply_word(&ChargedMultipartition::empty(r.clone()), &e_word)
        .ok_or_else(|| Error::Internal("e-side word does not apply at the base".into()))?;
    let rd = dual_charge_with(&r, e, &conv.lr)?;
    let dual_empty = ChargedMultipartition::empty(rd);
    let l_side = if l < 2 {
        dual_empty
    } else {
        apply_word(&dual_empty, &l_word)
            .ok_or_else(|| Error::Internal("ℓ-side word does not apply at the base".into()))?
    };
    Ok(Decomposition {
        coords: TripleCoordinates {
            e_side,
            sigma,
            l_side,
        },
        e_word,
    })
}

pub(crate) fn beta_decompose_with(
    x: &ChargedMultipartition,
    e: usize,
    conv: &Conventions,
) -> Result<TripleCoordinates> {
    decompose(x, e, conv).map(|d| d.coords)
}

/// Inverse of [`beta_decompose`], validating the coordinates first.
pub fn beta_recompose(c: &TripleCoordinates, e: usize) -> Result<ChargedMultipartition> {
    beta_recompose_with(c, e, &Conventions::FROZEN)
}

fn invariant(msg: &str) -> Error {
    Error::CoordinateInvariant(msg.to_string())
}

pub(crate) fn beta_recompose_with(
    c: &TripleCoordinates,
    e: usize,
    conv: &Conventions,
) -> Result<ChargedMultipartition> {
    if e < 2 {
        return Err(Error::InvalidRank { min: 2, got: e });
    }
    let l = c.e_side.level();
    let r = c.e_side.charge();
    if c.l_side.level() != e {
        return Err(invariant("ℓ-side vertex must have e components"));
    }
    if !r.in_fundamental_domain(e) {
        return Err(invariant("base charge r is not in A(s)"));
    }
    if dual_charge_with(r, e, &conv.lr)? != *c.l_side.charge() {
        return Err(invariant("ℓ-side charge is not the dual charge of r"));
    }
    let (h, e_word) = peel(&c.e_side, e);
    if !h.is_empty() {
        return Err(invariant("e-side vertex is not in the component of the empty vertex"));
    }
    let l_word = if l < 2 {
        if !c.l_side.is_empty() {
            return Err(invariant("at level one the ℓ-side vertex must be empty"));
        }
        ResidueWord::empty(1)
    } else {
        let (h, w) = peel(&c.l_side, l);
        if !h.is_empty() {
            return Err(invariant("ℓ-side vertex is not in the component of the empty vertex"));
        }
        w
    };
    rebuild(r, &c.sigma, &e_word, &l_word, e, conv)
}

pub(crate) fn rebuild(
    r: &crate::Charge,
    sigma: &Partition,
    e_word: &ResidueWord,
    l_word: &ResidueWord,
    e: usize,
    conv: &Conventions,
) -> Result<ChargedMultipartition> {
    let x = a_sigma_with(r, sigma, e, conv.tie)?;
    let x = apply_word(&x, e_word)
        .ok_or_else(|| Error::Internal("e-side word vanishes after the period shift".into()))?;
    apply_dotted_word_with(&x, l_word, e, &conv.lr)
        .ok_or_else(|| Error::Internal("ℓ-side word vanishes on the dotted crystal".into()))
}
