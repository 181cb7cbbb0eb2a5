use super::{Multipartition, Partition};

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_vec_unchecked(cur.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        fill(n - p, p, cur, out);
        cur.pop();
    }
}

/// The d-regular partitions of `n`.
pub fn regular_partitions(n: usize, d: usize) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|p| p.is_regular(d))
        .collect()
}

/// All ℓ-multipartitions of total size `n`.
pub fn multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    assert!(level >= 1, "level must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(level);
    fill_multi(n, level, &by_size, &mut cur, &mut out);
    out
}

fn fill_multi(
    n: usize,
    level: usize,
    by_size: &[Vec<Partition>],
    cur: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if level == 1 {
        for p in &by_size[n] {
            cur.push(p.clone());
            out.push(Multipartition::new(cur.clone()));
            cur.pop();
        }
        return;
    }
    for k in 0..=n {
        for p in &by_size[k] {
            cur.push(p.clone());
            fill_multi(n - k, level - 1, by_size, cur, out);
            cur.pop();
        }
    }
}

/// All ℓ-multipartitions of size at most `n`, by increasing size.
pub fn multipartitions_up_to(n: usize, level: usize) -> Vec<Multipartition> {
    (0..=n).flat_map(|k| multipartitions(k, level)).collect()
}

/// Number of partitions of `n`.
pub fn count_partitions(n: usize) -> u64 {
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}
