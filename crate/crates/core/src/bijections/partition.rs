use crate::bijections::comb_pairing;
use crate::error::{Error, Result};
use crate::model::{MeanderSystem, Pairing, PlanarTree};

/// A non-crossing set partition of `0..n`.
///
/// Stored as a block label per element, with blocks numbered in order of
/// their smallest element, so two partitions are equal exactly when their
/// label sequences are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCPartition {
    block_of: Vec<u32>,
}

impl NCPartition {
    /// Accepts arbitrary block labels and renumbers them canonically.
    pub fn from_block_ids(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("no elements".into()));
        }
        let mut rename = std::collections::HashMap::new();
        let block_of: Vec<u32> = labels
            .iter()
            .map(|&l| {
                let next = rename.len() as u32;
                *rename.entry(l).or_insert(next)
            })
            .collect();
        check_non_crossing(&block_of)?;
        Ok(NCPartition { block_of })
    }

    /// Builds a partition from its blocks, which must cover `0..n` exactly
    /// once.
    pub fn from_blocks(blocks: &[Vec<usize>]) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &e in block {
                if e >= n || labels[e] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} is out of range or repeated"
                    )));
                }
                labels[e] = b;
            }
        }
        NCPartition::from_block_ids(&labels)
    }

    pub(crate) fn from_canonical_unchecked(block_of: Vec<u32>) -> Self {
        debug_assert!(check_non_crossing(&block_of).is_ok());
        NCPartition { block_of }
    }

    /// All singletons.
    pub fn discrete(n: usize) -> Self {
        NCPartition {
            block_of: (0..n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_ids(&self) -> &[u32] {
        &self.block_of
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks in canonical order, each sorted increasingly.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (e, &b) in self.block_of.iter().enumerate() {
            blocks[b as usize].push(e);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &b in &self.block_of {
            sizes[b as usize] += 1;
        }
        sizes
    }

    pub fn max_block_size(&self) -> usize {
        self.block_sizes().into_iter().max().unwrap_or(0)
    }

    /// For each element, the next element of its block, or `None` for the
    /// largest one.
    fn successors(&self) -> Vec<Option<usize>> {
        let mut next = vec![None; self.n()];
        let mut last = vec![usize::MAX; self.block_count()];
        for (e, &b) in self.block_of.iter().enumerate() {
            let prev = last[b as usize];
            if prev != usize::MAX {
                next[prev] = Some(e);
            }
            last[b as usize] = e;
        }
        next
    }
}

/// Linear scan with a stack of blocks that have been entered but not
/// finished. Revisiting a block that is not on top means some block opened
/// inside it is still unfinished, which is a crossing.
fn check_non_crossing(block_of: &[u32]) -> Result<()> {
    let blocks = block_of.iter().max().map_or(0, |&m| m as usize + 1);
    let mut last = vec![0usize; blocks];
    for (e, &b) in block_of.iter().enumerate() {
        last[b as usize] = e;
    }
    let mut seen = vec![false; blocks];
    let mut open: Vec<u32> = Vec::new();
    for (e, &b) in block_of.iter().enumerate() {
        if seen[b as usize] {
            if open.last() != Some(&b) {
                return Err(Error::InvalidPartition(format!(
                    "element {e} crosses block {}",
                    open.last().copied().unwrap_or(b)
                )));
            }
        } else {
            seen[b as usize] = true;
            open.push(b);
        }
        if last[b as usize] == e {
            open.pop();
        }
    }
    Ok(())
}

/// Comb-like system of a partition: element `i` owns the lower arc
/// `(2i, 2i+1)`, and each block `b_1 < .. < b_k` is closed into one cycle by
/// upper arcs `(2b_j + 1, 2b_{j+1})` and `(2b_k + 1, 2b_1)`.
pub fn ncpartition_to_comb_meander(p: &NCPartition) -> MeanderSystem {
    let n = p.n();
    let mut partner = vec![0u32; 2 * n];
    for block in p.blocks() {
        let k = block.len();
        for j in 0..k {
            let from = 2 * block[j] + 1;
            let to = 2 * block[(j + 1) % k];
            partner[from] = to as u32;
            partner[to] = from as u32;
        }
    }
    MeanderSystem::new(Pairing::new_unchecked(partner), comb_pairing(n))
        .expect("both sides have n arcs")
}

/// Inverse of [`ncpartition_to_comb_meander`].
pub fn comb_meander_to_ncpartition(ms: &MeanderSystem) -> Result<NCPartition> {
    let n = ms.n();
    if *ms.lower() != comb_pairing(n) {
        return Err(Error::NotCombLike);
    }
    // arcs of a non-crossing pairing join points of opposite parity, so the
    // upper partner of 2b+1 is the even point of the next element
    let mut labels = vec![usize::MAX; n];
    let mut block = 0;
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        let mut e = start;
        while labels[e] == usize::MAX {
            labels[e] = block;
            e = ms.upper().partner(2 * e + 1) / 2;
        }
        block += 1;
    }
    NCPartition::from_block_ids(&labels)
}

/// Tree of a partition of `0..n`, on `n + 1` vertices.
///
/// The interval `lo..hi` becomes a leaf when empty. Otherwise the block of
/// `lo`, say `lo = e_1 < .. < e_k`, becomes a vertex with `k` children, the
/// trees of the gaps `e_j + 1 .. e_{j+1}` followed by that of `e_k + 1 .. hi`.
/// Blocks of size `k` are thus exactly the vertices of out-degree `k`.
pub fn ncpartition_to_tree(p: &NCPartition) -> PlanarTree {
    let next = p.successors();
    let mut degrees = Vec::with_capacity(p.n() + 1);
    // intervals are pushed right to left so they pop in preorder
    let mut stack = vec![(0usize, p.n())];
    let mut gaps = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        if lo == hi {
            degrees.push(0);
            continue;
        }
        gaps.clear();
        let mut e = lo;
        loop {
            match next[e] {
                Some(f) => {
                    gaps.push((e + 1, f));
                    e = f;
                }
                None => {
                    gaps.push((e + 1, hi));
                    break;
                }
            }
        }
        degrees.push(gaps.len() as u32);
        stack.extend(gaps.iter().rev());
    }
    PlanarTree::from_preorder_degrees_unchecked(degrees)
}

/// Inverse of [`ncpartition_to_tree`].
pub fn tree_to_ncpartition(t: &PlanarTree) -> Result<NCPartition> {
    let n = t.edge_count();
    if n == 0 {
        return Err(Error::InvalidPartition("tree has no edges".into()));
    }
    let sizes = t.subtree_sizes();
    let mut start = vec![0usize; t.vertex_count()];
    let mut block_of = vec![0u32; n];
    let mut block = 0u32;
    for (v, kids) in t.children_lists().into_iter().enumerate() {
        if kids.is_empty() {
            continue;
        }
        let mut pos = start[v];
        for c in kids {
            block_of[pos] = block;
            start[c] = pos + 1;
            pos += sizes[c];
        }
        block += 1;
    }
    // preorder numbering of internal vertices visits blocks by smallest
    // element, so the labels are already canonical
    Ok(NCPartition::from_canonical_unchecked(block_of))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::rainbow_pairing;

    #[test]
    fn detects_crossings() {
        assert!(NCPartition::from_block_ids(&[0, 1, 0, 1]).is_err());
        assert!(NCPartition::from_block_ids(&[0, 1, 1, 0]).is_ok());
        assert!(NCPartition::from_block_ids(&[5, 5, 2]).is_ok());
        assert_eq!(
            NCPartition::from_block_ids(&[5, 5, 2]).unwrap().block_ids(),
            &[0, 0, 1]
        );
    }

    #[test]
    fn from_blocks_checks_cover() {
        assert!(NCPartition::from_blocks(&[vec![0, 2], vec![1]]).is_ok());
        assert!(NCPartition::from_blocks(&[vec![0, 0], vec![1]]).is_err());
        assert!(NCPartition::from_blocks(&[vec![0, 3]]).is_err());
    }

    #[test]
    fn comb_images() {
        let ms = ncpartition_to_comb_meander(&NCPartition::discrete(3));
        assert_eq!(*ms.upper(), comb_pairing(3));
        let single = NCPartition::from_blocks(&[vec![0, 1]]).unwrap();
        let ms = ncpartition_to_comb_meander(&single);
        assert_eq!(*ms.upper(), rainbow_pairing(&[2]));
        assert_eq!(comb_meander_to_ncpartition(&ms).unwrap(), single);
    }

    #[test]
    fn non_comb_lower_is_rejected() {
        let ms = MeanderSystem::new(comb_pairing(2), rainbow_pairing(&[2])).unwrap();
        assert!(matches!(
            comb_meander_to_ncpartition(&ms),
            Err(Error::NotCombLike)
        ));
    }

    #[test]
    fn blocks_become_out_degrees() {
        let single = NCPartition::from_blocks(&[(0..5).collect()]).unwrap();
        assert_eq!(
            ncpartition_to_tree(&single).preorder_degrees(),
            &[5, 0, 0, 0, 0, 0]
        );
        let t = ncpartition_to_tree(&NCPartition::discrete(3));
        assert_eq!(t.preorder_degrees(), &[1, 1, 1, 0]);
    }

    #[test]
    fn ten_points_four_blocks() {
        let p = NCPartition::from_blocks(&[vec![0, 4, 9], vec![1, 2, 3], vec![5, 8], vec![6, 7]])
            .unwrap();
        let t = ncpartition_to_tree(&p);
        assert_eq!(t.vertex_count(), 11);
        assert_eq!(t.vertex_count() - t.leaf_count(), 4);
        assert_eq!(t.leaf_count(), 7);
        assert_eq!(tree_to_ncpartition(&t).unwrap(), p);
    }
}
