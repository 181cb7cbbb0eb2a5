//! Mullineux-type involutions from level one up to the generalized Φ.

use serde::{Deserialize, Serialize};

use crate::crystal::{apply_word, lower, peel};
use crate::error::{Error, Result};
use crate::partitions::{ChargedMultipartition, Charge, Multipartition, Partition};
use crate::triple::{beta_decompose, beta_recompose, TripleCoordinates};

fn level_one(lam: &Partition, s: i64) -> ChargedMultipartition {
    ChargedMultipartition::from_parts_unchecked(
        Multipartition::new(vec![lam.clone()]),
        Charge::new(vec![s]),
    )
}

fn require_regular(lam: &Partition, e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidRank { min: 2, got: e });
    }
    if !lam.is_regular(e) {
        return Err(Error::NotRegular {
            partition: lam.to_string(),
            d: e,
        });
    }
    Ok(())
}

/// `m_e` through the crystal: peel to ∅ and rebuild with negated residues.
pub fn m_e_crystal(lam: &Partition, e: usize) -> Result<Partition> {
    require_regular(lam, e)?;
    let (hw, word) = peel(&level_one(lam, 0), e);
    if !hw.is_empty() {
        return Err(Error::Internal("e-regular partition is not Uglov".into()));
    }
    let img = apply_word(&level_one(&Partition::empty(), 0), &word.negated())
        .ok_or_else(|| Error::Internal("negated word vanishes".into()))?;
    Ok(img.mp().component(0).clone())
}

/// Rim cells `(row, col)` from the top-right end down to the bottom-left.
fn rim_cells(lam: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 1..=lam.len() {
        let stop = lam.part(r + 1).max(1);
        for c in (stop..=lam.part(r)).rev() {
            cells.push((r, c));
        }
    }
    cells
}

/// The e-rim: runs of `e` rim cells, each run restarting at the first rim
/// cell of the row below the previous run's last row.
fn e_rim(lam: &Partition, e: usize) -> Vec<(usize, usize)> {
    let cells = rim_cells(lam);
    let mut out = Vec::new();
    let mut i = 0;
    while i < cells.len() {
        let end = (i + e).min(cells.len());
        out.extend_from_slice(&cells[i..end]);
        let last_row = cells[end - 1].0;
        let mut j = end;
        while j < cells.len() && cells[j].0 <= last_row {
            j += 1;
        }
        i = j;
    }
    out
}

fn remove_cells(lam: &Partition, cells: &[(usize, usize)]) -> Partition {
    let mut parts = lam.parts().to_vec();
    for &(r, _) in cells {
        parts[r - 1] -= 1;
    }
    Partition::from_unsorted(parts)
}

/// Columns `(a_i, r_i)`: size of the i-th e-rim and number of rows before
/// its removal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MullineuxSymbol {
    pub rim_sizes: Vec<usize>,
    pub rows: Vec<usize>,
}

pub fn mullineux_symbol(lam: &Partition, e: usize) -> Result<MullineuxSymbol> {
    require_regular(lam, e)?;
    let mut rim_sizes = Vec::new();
    let mut rows = Vec::new();
    let mut cur = lam.clone();
    while !cur.is_empty() {
        let rim = e_rim(&cur, e);
        rim_sizes.push(rim.len());
        rows.push(cur.len());
        cur = remove_cells(&cur, &rim);
    }
    Ok(MullineuxSymbol { rim_sizes, rows })
}

/// The e-regular partition with the given symbol.
pub fn from_mullineux_symbol(sym: &MullineuxSymbol, e: usize) -> Result<Partition> {
    if sym.rim_sizes.len() != sym.rows.len() {
        return Err(Error::Precondition("symbol rows have different lengths".into()));
    }
    let mut mu = Partition::empty();
    for (&a, &r) in sym.rim_sizes.iter().zip(&sym.rows).rev() {
        mu = grow(&mu, a, r, e)
            .ok_or_else(|| Error::Precondition("not a Mullineux symbol".into()))?;
    }
    Ok(mu)
}

/// The e-regular `λ ⊇ μ` with `r` rows whose e-rim has `a` cells and
/// removes down to `μ`.
fn grow(mu: &Partition, a: usize, r: usize, e: usize) -> Option<Partition> {
    if mu.len() > r || r == 0 {
        return None;
    }
    let mut rows = vec![0usize; r];
    search(mu, a, e, 0, a, usize::MAX, &mut rows)
}

fn search(
    mu: &Partition,
    a: usize,
    e: usize,
    idx: usize,
    budget: usize,
    cap: usize,
    rows: &mut Vec<usize>,
) -> Option<Partition> {
    if idx == rows.len() {
        if budget != 0 {
            return None;
        }
        let lam = Partition::new(rows.clone()).ok()?;
        if !lam.is_regular(e) {
            return None;
        }
        let rim = e_rim(&lam, e);
        if rim.len() == a && remove_cells(&lam, &rim) == *mu {
            return Some(lam);
        }
        return None;
    }
    let lo = mu.part(idx + 1).max(1);
    let hi = cap.min(lo + budget);
    for v in lo..=hi {
        let used = v - mu.part(idx + 1);
        if used > budget {
            break;
        }
        rows[idx] = v;
        if let Some(found) = search(mu, a, e, idx + 1, budget - used, v, rows) {
            return Some(found);
        }
    }
    None
}

/// `m_e` by the Mullineux symbol: `r_i ↦ a_i − r_i + ε_i` with `ε_i = 1`
/// exactly when `e ∤ a_i`.
pub fn m_e_classical(lam: &Partition, e: usize) -> Result<Partition> {
    let sym = mullineux_symbol(lam, e)?;
    let rows = sym
        .rim_sizes
        .iter()
        .zip(&sym.rows)
        .map(|(&a, &r)| a + usize::from(a % e != 0) - r)
        .collect();
    from_mullineux_symbol(
        &MullineuxSymbol {
            rim_sizes: sym.rim_sizes,
            rows,
        },
        e,
    )
}

/// `Φ_{e,s}` on the component of `|∅, s⟩`; the image has charge `−s_rev`.
pub fn phi_uglov(x: &ChargedMultipartition, e: usize) -> Result<ChargedMultipartition> {
    if e == 0 {
        return Err(Error::InvalidRank { min: 1, got: 0 });
    }
    let (hw, word) = peel(x, e);
    if !hw.is_empty() {
        return Err(Error::NotUglov);
    }
    apply_word(&ChargedMultipartition::empty(x.charge().neg_rev()), &word.negated())
        .ok_or_else(|| Error::Internal("negated word vanishes".into()))
}

/// The image of Φ together with the coordinates on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MullineuxResult {
    pub image: ChargedMultipartition,
    pub coordinates_in: TripleCoordinates,
    pub coordinates_out: TripleCoordinates,
}

impl MullineuxResult {
    /// Same multipartition as `x`, charges differing by a constant vector.
    pub fn fixed_up_to_shift(&self, x: &ChargedMultipartition) -> bool {
        same_up_to_shift(&self.image, x)
    }
}

pub fn same_up_to_shift(a: &ChargedMultipartition, b: &ChargedMultipartition) -> bool {
    if a.mp() != b.mp() {
        return false;
    }
    let d: Vec<i64> = a
        .charge()
        .entries()
        .iter()
        .zip(b.charge().entries())
        .map(|(p, q)| p - q)
        .collect();
    d.windows(2).all(|w| w[0] == w[1])
}

fn outer_coordinates(c: &TripleCoordinates, e: usize, sigma: Partition) -> Result<TripleCoordinates> {
    let l = c.e_side.level();
    let e_side = phi_uglov(&c.e_side, e)?;
    let l_side = if l < 2 {
        ChargedMultipartition::empty(c.l_side.charge().neg_rev())
    } else {
        phi_uglov(&c.l_side, l)?
    };
    Ok(TripleCoordinates {
        e_side,
        sigma,
        l_side,
    })
}

/// `Φ = β⁻¹ ∘ (Φ_{e,r}, (·)^tr, Φ_{ℓ,ṙ}) ∘ β`, from charge `s` to `−s_rev`.
pub fn phi(x: &ChargedMultipartition, e: usize) -> Result<MullineuxResult> {
    let coordinates_in = beta_decompose(x, e)?;
    let coordinates_out =
        outer_coordinates(&coordinates_in, e, coordinates_in.sigma.transpose())?;
    let image = beta_recompose(&coordinates_out, e)?;
    Ok(MullineuxResult {
        image,
        coordinates_in,
        coordinates_out,
    })
}

/// `M_e(σ^e ⊔ ρ) = (σ^tr)^e ⊔ m_e(ρ)`.
pub fn big_m_e(lam: &Partition, e: usize) -> Result<Partition> {
    let (sigma, rho) = lam.euclid_div(e);
    Ok(sigma.transpose().power(e).concat(&m_e_crystal(&rho, e)?))
}

/// `f̃_{k,j}`: `f̃_k` of the rank-d crystal on digit `j` of the d-adic
/// expansion, other digits untouched. `None` when `f̃_k` vanishes there.
pub fn f_kj(lam: &Partition, k: usize, j: usize, d: usize) -> Option<Partition> {
    assert!(d >= 2 && k < d, "need d >= 2 and k < d");
    let mut digits = lam.d_adic_expand(d);
    if digits.len() <= j {
        digits.resize(j + 1, Partition::empty());
    }
    let lifted = lower(&level_one(&digits[j], 0), k, d)?;
    digits[j] = lifted.mp().component(0).clone();
    Some(Partition::from_d_adic(&digits, d))
}

/// The map applied to each digit of σ in [`phi_d`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DigitMode {
    /// `m_d` on the d-regular digits; an involution.
    #[default]
    Consistent,
    /// `m_e` on each digit, which must then be e-regular.
    Literal,
}

/// `Φ^(d)`: Φ with σ^tr replaced by `⊔_i mull(σ_(i))^{d^i}`.
pub fn phi_d(
    x: &ChargedMultipartition,
    e: usize,
    d: usize,
    mode: DigitMode,
) -> Result<ChargedMultipartition> {
    if d < 2 {
        return Err(Error::InvalidRank { min: 2, got: d });
    }
    let c = beta_decompose(x, e)?;
    let digits = c
        .sigma
        .d_adic_expand(d)
        .iter()
        .map(|dig| match mode {
            DigitMode::Consistent => m_e_crystal(dig, d),
            DigitMode::Literal => m_e_crystal(dig, e),
        })
        .collect::<Result<Vec<_>>>()?;
    let out = outer_coordinates(&c, e, Partition::from_d_adic(&digits, d))?;
    beta_recompose(&out, e)
}
