//! The Kashiwara crystal of rank `e` on charged multipartitions.
//!
//! Every function takes the rank explicitly, so the same engine serves the
//! level-rank dual side with rank ℓ.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{multipartitions_up_to, Charge, ChargedMultipartition, DiagramBox};

/// Residues of a path of crystal operators, in the order they are applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueWord {
    rank: usize,
    residues: Vec<usize>,
}

impl ResidueWord {
    pub fn new(rank: usize, residues: Vec<usize>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank { min: 1, got: 0 });
        }
        if let Some(&bad) = residues.iter().find(|&&i| i >= rank) {
            return Err(Error::ResidueOutOfRange { residue: bad, rank });
        }
        Ok(ResidueWord { rank, residues })
    }

    pub fn empty(rank: usize) -> Self {
        ResidueWord {
            rank,
            residues: Vec::new(),
        }
    }

    /// From operator notation: `f_{w_1} f_{w_2} ⋯ f_{w_p}` acts right to left,
    /// so `written = [w_1, …, w_p]` is applied starting from `w_p`.
    pub fn from_written(rank: usize, written: &[usize]) -> Result<Self> {
        let mut r = written.to_vec();
        r.reverse();
        ResidueWord::new(rank, r)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// Operator notation, leftmost operator first.
    pub fn written(&self) -> Vec<usize> {
        self.residues.iter().rev().copied().collect()
    }

    /// The word `−i_1, …, −i_p` mod rank.
    pub fn negated(&self) -> ResidueWord {
        ResidueWord {
            rank: self.rank,
            residues: self
                .residues
                .iter()
                .map(|&i| (self.rank - i) % self.rank)
                .collect(),
        }
    }
}

impl fmt::Display for ResidueWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ops: Vec<String> = self.written().iter().map(|i| format!("f{i}")).collect();
        if ops.is_empty() {
            f.write_str("id")
        } else {
            f.write_str(&ops.join(" "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoxKind {
    Addable,
    Removable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub node: DiagramBox,
    pub key: i64,
    pub kind: BoxKind,
}

/// `(b − a + s_j) mod e`.
pub fn residue(node: &DiagramBox, charge: &Charge, e: usize) -> usize {
    node.content(charge).rem_euclid(e as i64) as usize
}

/// Addable and removable `i`-boxes, ordered by content ascending and, on
/// equal content, by component descending.
pub fn signature(x: &ChargedMultipartition, i: usize, e: usize) -> Vec<SignatureEntry> {
    assert!(i < e, "residue {i} out of range for rank {e}");
    let mut out = Vec::new();
    let e = e as i64;
    for (j, lam) in x.mp().components().iter().enumerate() {
        let s = x.charge().entries()[j];
        let mut push = |a: usize, b: usize, kind| {
            let key = b as i64 - a as i64 + s;
            if key.rem_euclid(e) as usize == i {
                out.push(SignatureEntry {
                    node: DiagramBox::new(a, b, j + 1),
                    key,
                    kind,
                });
            }
        };
        for (a, b) in lam.addable() {
            push(a, b, BoxKind::Addable);
        }
        for (a, b) in lam.removable() {
            push(a, b, BoxKind::Removable);
        }
    }
    out.sort_by(|p, q| p.key.cmp(&q.key).then(q.node.comp.cmp(&p.node.comp)));
    out
}

/// Cancels adjacent (removable, addable) pairs until none remain.
pub fn reduce_signature(sig: &[SignatureEntry]) -> Vec<SignatureEntry> {
    let mut stack: Vec<SignatureEntry> = Vec::with_capacity(sig.len());
    for &entry in sig {
        match (entry.kind, stack.last()) {
            (BoxKind::Addable, Some(top)) if top.kind == BoxKind::Removable => {
                stack.pop();
            }
            _ => stack.push(entry),
        }
    }
    stack
}

pub fn good_addable(x: &ChargedMultipartition, i: usize, e: usize) -> Option<DiagramBox> {
    reduce_signature(&signature(x, i, e))
        .iter()
        .rev()
        .find(|s| s.kind == BoxKind::Addable)
        .map(|s| s.node)
}

pub fn good_removable(x: &ChargedMultipartition, i: usize, e: usize) -> Option<DiagramBox> {
    reduce_signature(&signature(x, i, e))
        .iter()
        .find(|s| s.kind == BoxKind::Removable)
        .map(|s| s.node)
}

/// `f̃_i`; `None` stands for the zero vector.
pub fn lower(x: &ChargedMultipartition, i: usize, e: usize) -> Option<ChargedMultipartition> {
    let node = good_addable(x, i, e)?;
    let mut y = x.clone();
    y.mp_mut().components_mut()[node.comp - 1].add_box(node.row);
    Some(y)
}

/// `ẽ_i`; `None` stands for the zero vector.
pub fn raise(x: &ChargedMultipartition, i: usize, e: usize) -> Option<ChargedMultipartition> {
    let node = good_removable(x, i, e)?;
    let mut y = x.clone();
    y.mp_mut().components_mut()[node.comp - 1].remove_box(node.row);
    Some(y)
}

/// Applies the lowering operators of `word` in order, using the word's rank.
pub fn apply_word(x: &ChargedMultipartition, word: &ResidueWord) -> Option<ChargedMultipartition> {
    let mut cur = x.clone();
    for &i in word.residues() {
        cur = lower(&cur, i, word.rank())?;
    }
    Some(cur)
}

/// Raises greedily, smallest residue first, until highest weight.
///
/// Returns the highest weight vertex and the word rebuilding `x` from it.
pub fn peel(x: &ChargedMultipartition, e: usize) -> (ChargedMultipartition, ResidueWord) {
    peel_by(x, e, |avail| avail[0])
}

/// Peels with a caller-chosen residue among those whose raise is nonzero.
pub fn peel_by(
    x: &ChargedMultipartition,
    e: usize,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> (ChargedMultipartition, ResidueWord) {
    let mut cur = x.clone();
    let mut removed = Vec::new();
    loop {
        let avail: Vec<(usize, ChargedMultipartition)> = (0..e)
            .filter_map(|i| raise(&cur, i, e).map(|y| (i, y)))
            .collect();
        if avail.is_empty() {
            break;
        }
        let residues: Vec<usize> = avail.iter().map(|(i, _)| *i).collect();
        let pick = choose(&residues);
        let (i, y) = avail
            .into_iter()
            .find(|(i, _)| *i == pick)
            .expect("chosen residue must be available");
        removed.push(i);
        cur = y;
    }
    removed.reverse();
    (cur, ResidueWord { rank: e, residues: removed })
}

pub fn is_hw(x: &ChargedMultipartition, e: usize) -> bool {
    (0..e).all(|i| good_removable(x, i, e).is_none())
}

/// Membership in the component of the empty multipartition.
pub fn is_uglov(x: &ChargedMultipartition, e: usize) -> bool {
    peel(x, e).0.is_empty()
}

/// Lift `t` of `s` with `t_i ≡ s_i mod e` and `t_i − t_{i−1} > n − 1`:
/// `t_1 = s_1`, and each later entry is raised by the least multiple of `e`.
pub fn kleshchev_charge(s: &Charge, e: usize, n: usize) -> Charge {
    let e = e as i64;
    let gap = n as i64 - 1;
    let mut out: Vec<i64> = Vec::with_capacity(s.len());
    for &si in s.entries() {
        let t = match out.last() {
            None => si,
            Some(&prev) => {
                let need = prev + gap + 1 - si;
                if need <= 0 {
                    si
                } else {
                    si + e * ((need + e - 1) / e)
                }
            }
        };
        out.push(t);
    }
    Charge::new(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub residue: usize,
}

/// Vertices and `f̃_i`-arrows, with vertices in a fixed canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub rank: usize,
    pub vertices: Vec<ChargedMultipartition>,
    pub edges: Vec<Edge>,
}

fn edges_among(vertices: &[ChargedMultipartition], e: usize, n_max: usize) -> Vec<Edge> {
    let index: HashMap<&ChargedMultipartition, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let per_vertex: Vec<Vec<Edge>> = vertices
        .par_iter()
        .enumerate()
        .map(|(k, v)| {
            if v.size() >= n_max {
                return Vec::new();
            }
            (0..e)
                .filter_map(|i| {
                    let w = lower(v, i, e)?;
                    index.get(&w).map(|&to| Edge {
                        from: k,
                        to,
                        residue: i,
                    })
                })
                .collect()
        })
        .collect();
    per_vertex.into_iter().flatten().collect()
}

/// Every vertex of size at most `n_max` at charge `s`.
pub fn crystal_graph(s: &Charge, e: usize, n_max: usize) -> CrystalGraph {
    let vertices: Vec<ChargedMultipartition> = multipartitions_up_to(n_max, s.len())
        .into_iter()
        .map(|mp| ChargedMultipartition::from_parts_unchecked(mp, s.clone()))
        .collect();
    let edges = edges_among(&vertices, e, n_max);
    CrystalGraph {
        rank: e,
        vertices,
        edges,
    }
}

/// The component containing `x`, truncated at size `n_max`.
pub fn crystal_component(x: &ChargedMultipartition, e: usize, n_max: usize) -> CrystalGraph {
    let (hw, _) = peel(x, e);
    let mut levels: Vec<BTreeSet<ChargedMultipartition>> = Vec::new();
    if hw.size() <= n_max {
        levels.push(BTreeSet::from([hw.clone()]));
        for _ in hw.size()..n_max {
            let next: BTreeSet<ChargedMultipartition> = levels
                .last()
                .unwrap()
                .iter()
                .flat_map(|v| (0..e).filter_map(move |i| lower(v, i, e)))
                .collect();
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
    }
    let vertices: Vec<ChargedMultipartition> = levels.into_iter().flatten().collect();
    let edges = edges_among(&vertices, e, n_max);
    CrystalGraph {
        rank: e,
        vertices,
        edges,
    }
}

/// Box counts per residue and the indices `s_j mod e` of the fundamental
/// weights; the δ-coefficient is not part of this.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteWeight {
    pub box_counts: Vec<usize>,
    pub lambda_indices: Vec<usize>,
}

pub fn finite_weight(x: &ChargedMultipartition, e: usize) -> FiniteWeight {
    let mut box_counts = vec![0; e];
    for node in x.boxes() {
        box_counts[residue(&node, x.charge(), e)] += 1;
    }
    let lambda_indices = x
        .charge()
        .entries()
        .iter()
        .map(|&s| s.rem_euclid(e as i64) as usize)
        .collect();
    FiniteWeight {
        box_counts,
        lambda_indices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{
        multipartitions, parse_charge, parse_charged, regular_partitions, Multipartition,
        Partition,
    };
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ch(v: &[i64]) -> Charge {
        Charge::new(v.to_vec())
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(&DiagramBox::new(1, 1, 2), &ch(&[5, -1, 0]), 4), 3);
        assert_eq!(residue(&DiagramBox::new(1, 1, 1), &ch(&[0, 7]), 5), 0);
        assert_eq!(residue(&DiagramBox::new(1, 1, 4), &ch(&[-1, 0, 0, 2]), 3), 2);
    }

    #[test]
    fn signature_examples() {
        let x = parse_charged("-|1.1|-", "5,-1,0").unwrap();
        let sig = signature(&x, 0, 4);
        assert_eq!(
            sig,
            vec![
                SignatureEntry { node: DiagramBox::new(1, 1, 3), key: 0, kind: BoxKind::Addable },
                SignatureEntry { node: DiagramBox::new(1, 2, 2), key: 0, kind: BoxKind::Addable },
            ]
        );
        let y = parse_charged("2", "0").unwrap();
        assert_eq!(
            signature(&y, 1, 2),
            vec![
                SignatureEntry { node: DiagramBox::new(2, 1, 1), key: -1, kind: BoxKind::Addable },
                SignatureEntry { node: DiagramBox::new(1, 2, 1), key: 1, kind: BoxKind::Removable },
            ]
        );
        let s = ch(&[0, 2, 4, 1]);
        let empty = ChargedMultipartition::empty(s.clone());
        for i in 0..2 {
            let sig = signature(&empty, i, 2);
            let expect = s.entries().iter().filter(|&&v| v.rem_euclid(2) == i as i64).count();
            assert_eq!(sig.len(), expect);
            assert!(sig.iter().all(|x| x.kind == BoxKind::Addable));
        }
    }

    #[test]
    fn golden_words() {
        let w = ResidueWord::from_written(4, &[1, 1, 3, 0, 2, 3]).unwrap();
        let x = apply_word(&ChargedMultipartition::empty(ch(&[5, -1, 0])), &w).unwrap();
        assert_eq!(x, parse_charged("1|3.2|-", "5,-1,0").unwrap());

        let w = ResidueWord::from_written(3, &[1, 0, 2]).unwrap();
        assert_eq!(w.residues(), &[2, 0, 1]);
        let x = apply_word(&ChargedMultipartition::empty(ch(&[-1, 0, 0, 2])), &w).unwrap();
        assert_eq!(x, parse_charged("-|-|-|3", "-1,0,0,2").unwrap());
    }

    #[test]
    fn empty_has_no_raise() {
        let x = ChargedMultipartition::empty(ch(&[1, -2, 0]));
        assert!((0..3).all(|i| raise(&x, i, 3).is_none()));
        assert!(is_hw(&x, 3) && is_uglov(&x, 3));
        let (hw, w) = peel(&x, 3);
        assert_eq!(hw, x);
        assert!(w.is_empty());
    }

    #[test]
    fn peel_example() {
        let x = parse_charged("1|3.2|-", "5,-1,0").unwrap();
        let (hw, w) = peel(&x, 4);
        assert_eq!(hw, ChargedMultipartition::empty(ch(&[5, -1, 0])));
        assert_eq!(w.len(), 6);
        assert_eq!(apply_word(&hw, &w).unwrap(), x);
    }

    #[test]
    fn hw_but_not_uglov() {
        let x = parse_charged("1.1", "0").unwrap();
        assert!(is_hw(&x, 2));
        assert!(!is_uglov(&x, 2));
    }

    #[test]
    fn level_one_uglov_is_regular() {
        for &e in &[2usize, 3, 5] {
            for n in 0..=12 {
                let regs: BTreeSet<Partition> = regular_partitions(n, e).into_iter().collect();
                for lam in crate::partitions::partitions(n) {
                    let x = ChargedMultipartition::new(
                        Multipartition::new(vec![lam.clone()]),
                        ch(&[0]),
                    )
                    .unwrap();
                    assert_eq!(is_uglov(&x, e), regs.contains(&lam), "{lam} e={e}");
                }
            }
        }
    }

    fn all_vertices(level: usize, n_max: usize, lo: i64, hi: i64) -> Vec<ChargedMultipartition> {
        let mut charges = vec![vec![]];
        for _ in 0..level {
            charges = charges
                .into_iter()
                .flat_map(|c: Vec<i64>| {
                    (lo..=hi).map(move |v| {
                        let mut c = c.clone();
                        c.push(v);
                        c
                    })
                })
                .collect();
        }
        let mps = multipartitions_up_to(n_max, level);
        charges
            .iter()
            .flat_map(|c| {
                mps.iter().map(move |m| {
                    ChargedMultipartition::new(m.clone(), Charge::new(c.clone())).unwrap()
                })
            })
            .collect()
    }

    #[test]
    fn raise_lower_inverse_exhaustive() {
        for level in 1..=3 {
            let n_max = if level == 3 { 4 } else { 6 };
            let verts = all_vertices(level, n_max, -3, 3);
            for &e in &[2usize, 3, 4] {
                for x in &verts {
                    for i in 0..e {
                        if let Some(y) = lower(x, i, e) {
                            assert_eq!(y.size(), x.size() + 1);
                            assert_eq!(raise(&y, i, e).as_ref(), Some(x));
                        }
                        if let Some(y) = raise(x, i, e) {
                            assert_eq!(y.size() + 1, x.size());
                            assert_eq!(lower(&y, i, e).as_ref(), Some(x));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn peel_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &e in &[2usize, 3] {
            for n in 0..=6 {
                for mp in multipartitions(n, 2) {
                    let x = ChargedMultipartition::new(mp, ch(&[0, 1])).unwrap();
                    let (hw, _) = peel(&x, e);
                    for _ in 0..3 {
                        let (hw2, w2) = peel_by(&x, e, |avail| avail[rng.gen_range(0..avail.len())]);
                        assert_eq!(hw2, hw);
                        assert_eq!(apply_word(&hw2, &w2).unwrap(), x);
                    }
                }
            }
        }
    }

    #[test]
    fn kleshchev_examples() {
        assert_eq!(kleshchev_charge(&ch(&[0, 0]), 3, 4), ch(&[0, 6]));
        assert_eq!(kleshchev_charge(&ch(&[0, 1, 5]), 3, 1), ch(&[0, 1, 5]));
        assert_eq!(kleshchev_charge(&ch(&[0, 2]), 3, 0), ch(&[0, 2]));
        let t = kleshchev_charge(&ch(&[2, -1, 0]), 4, 5);
        for (a, b) in t.entries().iter().zip([2i64, -1, 0]) {
            assert_eq!((a - b).rem_euclid(4), 0);
        }
        assert!(t.entries().windows(2).all(|w| w[1] - w[0] > 4));
    }

    #[test]
    fn graph_small() {
        let g = crystal_graph(&ch(&[0]), 2, 0);
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());

        let c = crystal_component(&ChargedMultipartition::empty(ch(&[0])), 2, 3);
        let names: Vec<String> = c.vertices.iter().map(|v| v.mp().to_string()).collect();
        let got: BTreeSet<&str> = names.iter().map(String::as_str).collect();
        assert_eq!(got, BTreeSet::from(["-", "1", "2", "2.1", "3"]));

        let g = crystal_graph(&ch(&[0, 1]), 3, 4);
        let mut out_deg = vec![0; g.vertices.len()];
        for ed in &g.edges {
            out_deg[ed.from] += 1;
            assert_eq!(g.vertices[ed.to].size(), g.vertices[ed.from].size() + 1);
        }
        assert!(out_deg.iter().all(|&d| d <= 3));
        assert_eq!(g, crystal_graph(&ch(&[0, 1]), 3, 4));
    }

    #[test]
    fn weight_examples() {
        let x = ChargedMultipartition::empty(ch(&[5, -1, 0]));
        let w = finite_weight(&x, 4);
        assert_eq!(w.box_counts, vec![0; 4]);
        assert_eq!(w.lambda_indices, vec![1, 3, 0]);
        let y = parse_charged("1|3.2|-", "5,-1,0").unwrap();
        let wy = finite_weight(&y, 4);
        assert_eq!(wy.box_counts.iter().sum::<usize>(), y.size());
        let z = raise(&lower(&y, 1, 4).unwrap(), 1, 4).unwrap();
        assert_eq!(finite_weight(&z, 4), wy);
    }

    #[test]
    fn word_validation() {
        assert!(ResidueWord::new(3, vec![0, 3]).is_err());
        let w = ResidueWord::from_written(4, &[1, 0, 3]).unwrap();
        assert_eq!(w.negated().residues(), &[1, 0, 3]);
        assert_eq!(w.to_string(), "f1 f0 f3");
        assert!(parse_charge("1,2").is_ok());
    }

    proptest! {
        #[test]
        fn at_most_one_good_box_per_residue(
            parts in proptest::collection::vec(proptest::collection::vec(1usize..5, 0..4), 2),
            s0 in -3i64..4, s1 in -3i64..4, e in 2usize..5,
        ) {
            let comps = parts.into_iter().map(Partition::from_unsorted).collect();
            let x = ChargedMultipartition::new(Multipartition::new(comps), ch(&[s0, s1])).unwrap();
            for i in 0..e {
                let red = reduce_signature(&signature(&x, i, e));
                // reduced words read A…A R…R
                let first_r = red.iter().position(|t| t.kind == BoxKind::Removable).unwrap_or(red.len());
                prop_assert!(red[first_r..].iter().all(|t| t.kind == BoxKind::Removable));
                if let Some(y) = lower(&x, i, e) {
                    prop_assert_eq!(raise(&y, i, e), Some(x.clone()));
                }
            }
        }
    }
}
