use crate::bijections::NCPartition;
use crate::error::{Error, Result};

pub const PARTITION_GUARD: usize = 14;

/// Every non-crossing partition of `0..n`, generated as restricted growth
/// strings and pruned as soon as a crossing appears. Independent of the
/// tree and pairing bijections.
pub fn all_nc_partitions(n: usize) -> Result<Vec<NCPartition>> {
    if n == 0 {
        return Err(Error::Range("partitions need n >= 1".into()));
    }
    if n > PARTITION_GUARD {
        return Err(Error::SizeGuard {
            requested: n,
            limit: PARTITION_GUARD,
        });
    }
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(n);
    extend(n, &mut labels, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `first[b]` and `last[b]` track the extent of block `b` in the prefix.
fn extend(
    n: usize,
    labels: &mut Vec<u32>,
    extent: &mut Vec<(usize, usize)>,
    out: &mut Vec<NCPartition>,
) {
    let i = labels.len();
    if i == n {
        out.push(NCPartition::from_canonical_unchecked(labels.clone()));
        return;
    }
    for b in 0..=extent.len() {
        if b < extent.len() && crosses(labels, extent, b, i) {
            continue;
        }
        labels.push(b as u32);
        let saved = extent.get(b).copied();
        if b == extent.len() {
            extent.push((i, i));
        } else {
            extent[b].1 = i;
        }
        extend(n, labels, extent, out);
        labels.pop();
        match saved {
            Some(e) => extent[b] = e,
            None => {
                extent.pop();
            }
        }
    }
}

/// Whether adding `i` to block `b` creates `a < x < c < i` with `a`, `c` in
/// another block and `x` in `b`. It suffices to test `x = last(b)`.
fn crosses(labels: &[u32], extent: &[(usize, usize)], b: usize, i: usize) -> bool {
    let last = extent[b].1;
    labels[last + 1..i]
        .iter()
        .any(|&other| other as usize != b && extent[other as usize].0 < last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_many() {
        let counts: Vec<usize> = (1..=9)
            .map(|n| all_nc_partitions(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn every_output_validates() {
        for p in all_nc_partitions(7).unwrap() {
            let ids: Vec<usize> = p.block_ids().iter().map(|&b| b as usize).collect();
            assert_eq!(NCPartition::from_block_ids(&ids).unwrap(), p);
        }
    }
}
