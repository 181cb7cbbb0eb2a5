//! Cherednik parameters, essential walls, the asymptotic wall-crossing
//! formulas and combinatorial Ringel duality.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::{apply_word, is_hw};
use crate::error::{Error, Result};
use crate::levelrank::dotted_peel;
use crate::mullineux::{big_m_e, m_e_crystal, phi};
use crate::partitions::{
    multipartitions, Charge, ChargedMultipartition, DiagramBox, Multipartition, Partition,
};
use crate::rational::{int, signum, Rational};
use crate::triple::{beta_decompose, beta_recompose, decompose, Conventions, Decomposition, TripleCoordinates};

/// `(κ, s)` for `n` boxes; `κ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CherednikParams {
    #[serde(with = "crate::rational::as_string")]
    kappa: Rational,
    #[serde(with = "crate::rational::vec_as_string")]
    charge: Vec<Rational>,
    n: usize,
}

impl CherednikParams {
    pub fn new(kappa: Rational, charge: Vec<Rational>, n: usize) -> Result<Self> {
        if kappa.is_zero() {
            return Err(Error::Precondition("κ must be nonzero".into()));
        }
        if charge.is_empty() {
            return Err(Error::Precondition("charge must have at least one entry".into()));
        }
        Ok(CherednikParams { kappa, charge, n })
    }

    /// `κ = 1/e` with the integral charge `s`.
    pub fn integral(s: &Charge, e: usize, n: usize) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidRank { min: 2, got: e });
        }
        Self::new(
            Rational::new(1, e as i128),
            s.entries().iter().map(|&v| int(v)).collect(),
            n,
        )
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn charge(&self) -> &[Rational] {
        &self.charge
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.charge.len()
    }

    fn l(&self) -> Rational {
        int(self.level() as i64)
    }

    /// `h_j = κ s_j − j/ℓ`, with `j` 1-based.
    pub fn h(&self, j: usize) -> Rational {
        self.kappa * self.charge[j - 1] - int(j as i64) / self.l()
    }

    /// `s_j − j/(κℓ)`, the quantity ordered by π-asymptoticity.
    fn x(&self, j: usize) -> Rational {
        self.charge[j - 1] - int(j as i64) / (self.kappa * self.l())
    }
}

/// `co_c(γ) = κℓ(b−a) + ℓ h_j`.
pub fn co_c(p: &CherednikParams, g: &DiagramBox) -> Rational {
    p.kappa * p.l() * int(g.col as i64 - g.row as i64) + p.l() * p.h(g.comp)
}

/// `c_λ`: the sum of `co_c` over the boxes of `λ`.
pub fn c_function(p: &CherednikParams, mp: &Multipartition) -> Rational {
    let x = ChargedMultipartition::from_parts_unchecked(
        mp.clone(),
        Charge::new(vec![0; mp.level()]),
    );
    x.boxes().iter().map(|g| co_c(p, g)).sum()
}

/// `π` is 0-based: `π[i]` is the component in position `i`.
pub fn is_pi_asymptotic(p: &CherednikParams, pi: &[usize]) -> bool {
    let gap = int(p.n as i64 - 1);
    pi.len() == p.level()
        && pi.windows(2).all(|w| p.x(w[0] + 1) - p.x(w[1] + 1) > gap)
}

/// The witnessing permutation, if any.
pub fn is_asymptotic(p: &CherednikParams) -> Option<Vec<usize>> {
    let mut pi: Vec<usize> = (0..p.level()).collect();
    pi.sort_by(|&a, &b| p.x(b + 1).cmp(&p.x(a + 1)));
    is_pi_asymptotic(p, &pi).then_some(pi)
}

/// Essential walls crossed on the way from one parameter to another.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallReport {
    /// `κ` changes sign.
    pub type_a: bool,
    /// `(i, j, m)` with `i < j` (1-based) and `|m| < n` where the sign of
    /// `h_i − h_j − κm` differs.
    pub type_b_witnesses: Vec<(usize, usize, i64)>,
}

impl WallReport {
    pub fn is_empty(&self) -> bool {
        !self.type_a && self.type_b_witnesses.is_empty()
    }
}

fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn wall_between(p: &CherednikParams, q: &CherednikParams) -> Result<WallReport> {
    if p.level() != q.level() || p.n != q.n {
        return Err(Error::Precondition(
            "parameters must share the level and the rank n".into(),
        ));
    }
    let l = p.level();
    if !is_integer(&(q.kappa - p.kappa)) {
        return Err(Error::NonIntegralDifference);
    }
    for i in 0..l {
        for j in 0..l {
            let d = q.kappa * (q.charge[i] - q.charge[j]) - p.kappa * (p.charge[i] - p.charge[j]);
            if !is_integer(&d) {
                return Err(Error::NonIntegralDifference);
            }
        }
    }
    let type_a = signum(&p.kappa) != signum(&q.kappa);
    let bound = p.n as i64;
    let mut type_b_witnesses = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            for m in (1 - bound)..bound {
                let side = |c: &CherednikParams| signum(&(c.h(i) - c.h(j) - c.kappa * int(m)));
                if side(p) != side(q) {
                    type_b_witnesses.push((i, j, m));
                }
            }
        }
    }
    Ok(WallReport {
        type_a,
        type_b_witnesses,
    })
}

/// Equal sign data: the sign of `κ` and the order of `co_c` on every pair
/// of boxes that fit in a multipartition of size `n`.
pub fn same_chamber(p: &CherednikParams, q: &CherednikParams) -> bool {
    if p.level() != q.level() || p.n != q.n {
        return false;
    }
    if signum(&p.kappa) != signum(&q.kappa) {
        return false;
    }
    let n = p.n;
    let mut boxes = Vec::new();
    for comp in 1..=p.level() {
        for row in 1..=n {
            for col in 1..=(n + 1 - row) {
                boxes.push(DiagramBox { row, col, comp });
            }
        }
    }
    let hook = |g: &DiagramBox| g.row + g.col - 1;
    let cp: Vec<Rational> = boxes.iter().map(|g| co_c(p, g)).collect();
    let cq: Vec<Rational> = boxes.iter().map(|g| co_c(q, g)).collect();
    for a in 0..boxes.len() {
        for b in a + 1..boxes.len() {
            let fits = if boxes[a].comp == boxes[b].comp {
                hook(&boxes[a]).max(hook(&boxes[b])) <= n
            } else {
                hook(&boxes[a]) + hook(&boxes[b]) <= n
            };
            if fits && cp[a].cmp(&cp[b]) != cq[a].cmp(&cq[b]) {
                return false;
            }
        }
    }
    true
}

/// `s_opp`: a charge in `s + eℤ^ℓ` that is π′-asymptotic for
/// `κ′ = 1/e − 1`, where `π′` reverses the π witnessing `(1/e, s)`.
///
/// The last component of `π′` is kept; each earlier one is moved by the
/// least multiple of `e` that opens the required gap.
pub fn opposite_charge(s: &Charge, e: usize, n: usize) -> Result<Charge> {
    let p = CherednikParams::integral(s, e, n)?;
    let pi = is_asymptotic(&p).ok_or(Error::NotAsymptotic)?;
    let l = s.len();
    let pi_opp: Vec<usize> = pi.iter().rev().copied().collect();
    let kappa_opp = *p.kappa() - int(1);
    let scale = kappa_opp * int(l as i64);
    let gap = int(n as i64 - 1);
    let x_opp = |v: i64, j: usize| int(v) - int(j as i64 + 1) / scale;
    let ei = e as i64;
    let mut t = s.entries().to_vec();
    for i in (0..l.saturating_sub(1)).rev() {
        let (j, next) = (pi_opp[i], pi_opp[i + 1]);
        let xn = x_opp(t[next], next);
        let ok = |v: i64| x_opp(v, j) - xn > gap;
        let mut v = s.entries()[j];
        while ok(v) {
            v -= ei;
        }
        while !ok(v) {
            v += ei;
        }
        t[j] = v;
    }
    Ok(Charge::new(t))
}

fn require_asymptotic(s: &Charge, e: usize, n: usize) -> Result<()> {
    let p = CherednikParams::integral(s, e, n)?;
    is_asymptotic(&p).map(|_| ()).ok_or(Error::NotAsymptotic)
}

/// `wc_{−←+}(λ) = (m_e(λ^1), …, M_e(λ^k), …, m_e(λ^ℓ))^tr` at an asymptotic
/// integral parameter, `k` the first index maximizing `s_k`. The image is
/// labelled at `s_opp`.
pub fn wc_asymptotic(x: &ChargedMultipartition, e: usize) -> Result<ChargedMultipartition> {
    let s = x.charge();
    let n = x.size();
    require_asymptotic(s, e, n)?;
    let entries = s.entries();
    let k = (0..entries.len())
        .max_by(|&a, &b| entries[a].cmp(&entries[b]).then(b.cmp(&a)))
        .unwrap_or(0);
    let comps = x
        .mp()
        .components()
        .iter()
        .enumerate()
        .map(|(j, lam)| {
            if j == k {
                big_m_e(lam, e)
            } else if !lam.is_regular(e) {
                Err(Error::Precondition(format!(
                    "component {} ({lam}) is not {e}-regular",
                    j + 1
                )))
            } else {
                m_e_crystal(lam, e)
            }
        })
        .collect::<Result<Vec<Partition>>>()?;
    let image = Multipartition::new(comps.iter().map(Partition::transpose).collect());
    Ok(ChargedMultipartition::from_parts_unchecked(
        image,
        opposite_charge(s, e, n)?,
    ))
}

/// Same residues mod `e` up to order, the orbit of the extended affine
/// symmetric group.
fn same_orbit(s: &Charge, t: &Charge, e: usize) -> bool {
    let key = |c: &Charge| {
        let mut v: Vec<i64> = c.entries().iter().map(|x| x.rem_euclid(e as i64)).collect();
        v.sort_unstable();
        v
    };
    s.len() == t.len() && key(s) == key(t)
}

/// `Ψ_{s→t}` on vertices `f̃-word · ã_σ |∅, r⟩`: the same word and σ are
/// replayed from the vacuum at `t`.
pub fn transport_psi(x: &ChargedMultipartition, t: &Charge, e: usize) -> Result<ChargedMultipartition> {
    let s = x.charge();
    if !same_orbit(s, t, e) {
        return Err(Error::ChargeNotInOrbit);
    }
    let Decomposition { coords: bx, e_word } = decompose(x, e, &Conventions::FROZEN)?;
    let b0 = beta_decompose(&ChargedMultipartition::empty(s.clone()), e)?;
    if bx.l_side != b0.l_side {
        return Err(Error::OutsideDomain(
            "vertex is not reached from the vacuum by f̃ and ã operators".into(),
        ));
    }
    let bt = beta_decompose(&ChargedMultipartition::empty(t.clone()), e)?;
    let e_side = apply_word(&bt.e_side, &e_word)
        .ok_or_else(|| Error::Internal("transported word vanishes".into()))?;
    beta_recompose(
        &TripleCoordinates {
            e_side,
            sigma: bx.sigma,
            l_side: bt.l_side,
        },
        e,
    )
}

/// Highest weight for the `ŝl_e`- and `sl_∞`-crystals: the labels of
/// finite-dimensional simples.
pub fn is_cuspidal(x: &ChargedMultipartition, e: usize) -> bool {
    is_hw(x, e) && dotted_peel(x, e).0.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingelImage {
    pub image: ChargedMultipartition,
    pub finite_dimensional: bool,
}

/// Combinatorial Ringel duality, which is Φ.
pub fn ringel_d(x: &ChargedMultipartition, e: usize) -> Result<RingelImage> {
    Ok(RingelImage {
        image: phi(x, e)?.image,
        finite_dimensional: is_cuspidal(x, e),
    })
}

/// Cuspidal vertices of size `n` at charge `s`, in enumeration order.
pub fn finite_dim_labels(s: &Charge, e: usize, n: usize) -> Vec<ChargedMultipartition> {
    multipartitions(n, s.len())
        .into_par_iter()
        .map(|mp| ChargedMultipartition::from_parts_unchecked(mp, s.clone()))
        .filter(|x| is_cuspidal(x, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::lower;
    use crate::heisenberg::{a_sigma, is_doubly_hw};
    use crate::mullineux::same_up_to_shift;
    use crate::partitions::{parse_charged, partitions, regular_partitions};
    use crate::rational::parse;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ch(v: &[i64]) -> Charge {
        Charge::new(v.to_vec())
    }

    fn q(s: &str) -> Rational {
        parse(s).unwrap()
    }

    const CHARGES: [[i64; 2]; 5] = [[0, 8], [8, 0], [1, 9], [-3, 5], [10, 1]];

    #[test]
    fn c_function_values() {
        let p = CherednikParams::new(q("1/2"), vec![q("0"), q("0")], 1).unwrap();
        let g = DiagramBox { row: 1, col: 1, comp: 1 };
        assert_eq!(co_c(&p, &g), q("-1"));
        assert_eq!(c_function(&p, &Multipartition::empty(2)), q("0"));
        let p = CherednikParams::new(q("-2/3"), vec![q("1/2"), q("3")], 5).unwrap();
        let x = parse_charged("2.1|1^2", "0,0").unwrap();
        let brute: Rational = x
            .boxes()
            .iter()
            .map(|g| {
                let k = *p.kappa();
                k * int(2) * int(g.col as i64 - g.row as i64)
                    + int(2) * (k * p.charge()[g.comp - 1] - int(g.comp as i64) / int(2))
            })
            .sum();
        assert_eq!(c_function(&p, x.mp()), brute);
        assert!(CherednikParams::new(q("0"), vec![q("1")], 1).is_err());
    }

    #[test]
    fn asymptotic_predicates() {
        let p = CherednikParams::integral(&ch(&[4]), 3, 10).unwrap();
        assert_eq!(is_asymptotic(&p), Some(vec![0]));
        for e in 2..=4 {
            for n in 0..=6 {
                let s = n as i64 + e as i64;
                let p = CherednikParams::integral(&ch(&[0, s]), e, n).unwrap();
                assert_eq!(is_asymptotic(&p), Some(vec![1, 0]));
                assert!(!is_pi_asymptotic(&p, &[0, 1]));
            }
        }
        let p = CherednikParams::integral(&ch(&[0, 1]), 2, 4).unwrap();
        assert_eq!(is_asymptotic(&p), None);
    }

    #[test]
    fn wall_reports() {
        let p = CherednikParams::integral(&ch(&[0, 8]), 2, 4).unwrap();
        assert!(wall_between(&p, &p).unwrap().is_empty());

        for e in 2..=3 {
            for s in CHARGES {
                for n in 1..=5 {
                    let s = Charge::new(s.to_vec());
                    let p = CherednikParams::integral(&s, e, n).unwrap();
                    let so = opposite_charge(&s, e, n).unwrap();
                    let k = *p.kappa() - int(1);
                    let qq = CherednikParams::new(k, so.entries().iter().map(|&v| int(v)).collect(), n).unwrap();
                    let rep = wall_between(&p, &qq).unwrap();
                    assert!(rep.type_a && rep.type_b_witnesses.is_empty(), "{s} e={e}");
                    assert!(!same_chamber(&p, &qq));
                }
            }
        }

        let a = CherednikParams::integral(&ch(&[0, 8]), 2, 4).unwrap();
        let b = CherednikParams::integral(&ch(&[0, 10]), 2, 4).unwrap();
        assert!(wall_between(&a, &b).unwrap().is_empty());
        assert!(same_chamber(&a, &b));

        let c = CherednikParams::new(q("1/2"), vec![q("0"), q("0")], 3).unwrap();
        let d = CherednikParams::new(q("1/2"), vec![q("0"), q("4")], 3).unwrap();
        let rep = wall_between(&c, &d).unwrap();
        assert!(!rep.type_a);
        assert_eq!(rep.type_b_witnesses, vec![(1, 2, -2), (1, 2, -1), (1, 2, 0), (1, 2, 1)]);
        assert_eq!(wall_between(&d, &c).unwrap(), rep);
        assert!(!same_chamber(&c, &d));

        let f = CherednikParams::new(q("1/2"), vec![q("0"), q("3")], 3).unwrap();
        assert_eq!(wall_between(&c, &f), Err(Error::NonIntegralDifference));
    }

    #[test]
    fn opposite_charges() {
        assert_eq!(opposite_charge(&ch(&[5]), 3, 4).unwrap(), ch(&[5]));
        assert_eq!(opposite_charge(&ch(&[0, 8]), 2, 3).unwrap(), ch(&[12, 8]));
        assert_eq!(opposite_charge(&ch(&[0, 1]), 2, 4), Err(Error::NotAsymptotic));
        for e in 2..=3usize {
            for s in CHARGES {
                for n in 0..=6 {
                    let s = Charge::new(s.to_vec());
                    if require_asymptotic(&s, e, n).is_err() {
                        continue;
                    }
                    let so = opposite_charge(&s, e, n).unwrap();
                    let pi = is_asymptotic(&CherednikParams::integral(&s, e, n).unwrap()).unwrap();
                    let pi_opp: Vec<usize> = pi.iter().rev().copied().collect();
                    let k = Rational::new(1, e as i128) - int(1);
                    let po = CherednikParams::new(k, so.entries().iter().map(|&v| int(v)).collect(), n).unwrap();
                    assert!(is_pi_asymptotic(&po, &pi_opp));
                    for (a, b) in s.entries().iter().zip(so.entries()) {
                        assert_eq!((a - b).rem_euclid(e as i64), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn wc_level_one_and_empty() {
        let z = ChargedMultipartition::empty(ch(&[0, 8]));
        let w = wc_asymptotic(&z, 2).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.charge(), &opposite_charge(&ch(&[0, 8]), 2, 0).unwrap());
        for e in 2..=3 {
            for n in 0..=8 {
                for lam in partitions(n) {
                    let x = ChargedMultipartition::new(Multipartition::new(vec![lam.clone()]), ch(&[0])).unwrap();
                    let w = wc_asymptotic(&x, e).unwrap();
                    assert_eq!(w.mp().component(0), &big_m_e(&lam, e).unwrap().transpose());
                }
            }
        }
        let x = parse_charged("1^2|1^2", "0,8").unwrap();
        assert!(matches!(wc_asymptotic(&x, 2), Err(Error::Precondition(_))));
        let x = parse_charged("1|-", "0,1").unwrap();
        assert_eq!(wc_asymptotic(&x, 2), Err(Error::NotAsymptotic));
    }

    #[test]
    fn wc_level_two_hw_example() {
        let e = 3;
        for n in 0..=6 {
            let s = ch(&[0, n as i64 + e as i64]);
            for lam in regular_partitions(n, e) {
                let x = ChargedMultipartition::new(Multipartition::new(vec![lam.clone(), Partition::empty()]), s.clone()).unwrap();
                if !is_cuspidal(&x, e) {
                    continue;
                }
                let w = wc_asymptotic(&x, e).unwrap();
                assert_eq!(w.mp().component(0), &m_e_crystal(&lam, e).unwrap().transpose());
                assert!(w.mp().component(1).is_empty());
                assert!(is_cuspidal(&w.charged_transpose(), e));
            }
        }
    }

    fn in_wcmul1_domain(x: &ChargedMultipartition, e: usize) -> bool {
        let b = beta_decompose(x, e).unwrap();
        let b0 = beta_decompose(&ChargedMultipartition::empty(x.charge().clone()), e).unwrap();
        b.l_side == b0.l_side
    }

    #[test]
    fn wc_via_phi_and_transport() {
        let mut checked = 0;
        for e in 2..=3 {
            for s in CHARGES {
                let s = Charge::new(s.to_vec());
                let k = if s.entries()[0] >= s.entries()[1] { 0 } else { 1 };
                for n in 0..=5 {
                    let target = opposite_charge(&s, e, n).unwrap().neg();
                    for mp in multipartitions(n, 2) {
                        let x = ChargedMultipartition::new(mp, s.clone()).unwrap();
                        if (0..2).any(|j| j != k && !x.mp().component(j).is_regular(e)) {
                            continue;
                        }
                        if !in_wcmul1_domain(&x, e) {
                            assert!(matches!(
                                transport_psi(&phi(&x, e).unwrap().image, &target, e),
                                Err(Error::OutsideDomain(_))
                            ));
                            continue;
                        }
                        let lhs = transport_psi(&phi(&x, e).unwrap().image, &target, e).unwrap();
                        let rhs = wc_asymptotic(&x, e).unwrap().charged_transpose();
                        assert_eq!(lhs, rhs, "{x} e={e}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn hw_preserved_at_opposite_parameter() {
        for e in 2..=3 {
            for s in CHARGES {
                let s = Charge::new(s.to_vec());
                for n in 0..=6 {
                    for mp in multipartitions(n, 2) {
                        let x = ChargedMultipartition::new(mp, s.clone()).unwrap();
                        if !is_hw(&x, e) || !x.mp().components().iter().all(|c| c.is_regular(e)) {
                            continue;
                        }
                        let w = wc_asymptotic(&x, e).unwrap();
                        assert!(is_hw(&w.charged_transpose(), e), "{x} e={e}");
                    }
                }
            }
        }
    }

    #[test]
    fn wc_commutes_with_crystals() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let e = 2;
        let s = ch(&[0, 12]);
        let mut tested = 0;
        while tested < 200 {
            let n = rng.gen_range(0..=5);
            let mps = multipartitions(n, 2);
            let x = ChargedMultipartition::new(mps[rng.gen_range(0..mps.len())].clone(), s.clone()).unwrap();
            let i = rng.gen_range(0..e);
            let Some(y) = lower(&x, i, e) else { continue };
            let (Ok(wx), Ok(wy)) = (wc_asymptotic(&x, e), wc_asymptotic(&y, e)) else { continue };
            let moved = lower(&wx.charged_transpose(), (e - i) % e, e).unwrap();
            assert_eq!(moved.mp(), wy.charged_transpose().mp());
            tested += 1;
        }
        for sigma in partitions(2).into_iter().chain(partitions(3)) {
            let x = a_sigma(&s, &sigma, e).unwrap();
            let w = wc_asymptotic(&x, e).unwrap().charged_transpose();
            let want = a_sigma(&w.charge().clone(), &sigma.transpose(), e).unwrap();
            assert_eq!(w.mp(), want.mp());
        }
    }

    #[test]
    fn transport_basics() {
        let s = ch(&[0, 8]);
        let x = apply_word(
            &ChargedMultipartition::empty(s.clone()),
            &crate::crystal::ResidueWord::new(2, vec![0, 1, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(transport_psi(&x, &s, 2).unwrap(), x);
        let t = ch(&[4, -2]);
        assert_eq!(
            transport_psi(&ChargedMultipartition::empty(s.clone()), &t, 2).unwrap(),
            ChargedMultipartition::empty(t.clone())
        );
        assert_eq!(transport_psi(&x, &ch(&[1, 8]), 2), Err(Error::ChargeNotInOrbit));
        let y = transport_psi(&x, &t, 2).unwrap();
        assert_eq!(transport_psi(&y, &s, 2).unwrap(), x);
    }

    #[test]
    fn ringel_examples() {
        let x = parse_charged("3.3|-", "-1,3").unwrap();
        let r = ringel_d(&x, 3).unwrap();
        assert!(r.finite_dimensional);
        assert!(same_up_to_shift(&r.image, &x));
        assert_eq!(r.image, phi(&x, 3).unwrap().image);
        let z = ChargedMultipartition::empty(ch(&[0, 1, 1]));
        let r = ringel_d(&z, 3).unwrap();
        assert!(r.finite_dimensional);
        assert_eq!(r.image, ChargedMultipartition::empty(ch(&[-1, -1, 0])));
    }

    #[test]
    fn finite_dimensional_labels() {
        assert_eq!(
            finite_dim_labels(&ch(&[2, -1]), 3, 0),
            vec![ChargedMultipartition::empty(ch(&[2, -1]))]
        );
        // cuspidal labels need not have size divisible by e
        assert_eq!(
            finite_dim_labels(&ch(&[-2, -2]), 2, 1),
            vec![parse_charged("-|1", "-2,-2").unwrap()]
        );
        let labels = finite_dim_labels(&ch(&[-1, 3]), 3, 6);
        assert!(labels.contains(&parse_charged("3.3|-", "-1,3").unwrap()));
        for e in 2..=3usize {
            for a in -2..=2 {
                for b in -2..=2 {
                    let r = ch(&[a, b]);
                    if !r.in_fundamental_domain(e) {
                        continue;
                    }
                    for n in 0..=6 {
                        let labels = finite_dim_labels(&r, e, n);
                        if n % e != 0 {
                            let doubly = multipartitions(n, 2).into_iter().filter(|mp| {
                                is_doubly_hw(&ChargedMultipartition::new(mp.clone(), r.clone()).unwrap(), e)
                            });
                            assert_eq!(doubly.count(), 0, "{r} e={e} n={n}");
                        }
                        for x in labels {
                            assert!(same_up_to_shift(&phi(&x, e).unwrap().image, &x));
                        }
                    }
                }
            }
        }
    }
}
