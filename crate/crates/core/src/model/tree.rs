use crate::error::{Error, Result};

/// A rooted ordered (planar) tree.
///
/// Vertices are labelled in depth-first preorder, so the root is `0` and
/// the tree is determined by its preorder out-degree sequence. Any tree
/// passed to [`PlanarTree::from_children`] is relabelled into this form,
/// which makes structural equality plain `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    degrees: Vec<u32>,
}

impl PlanarTree {
    /// The one-vertex tree.
    pub fn singleton() -> Self {
        PlanarTree { degrees: vec![0] }
    }

    /// Builds a tree from its preorder out-degree sequence.
    ///
    /// The sequence is valid when `d[0] + .. + d[j] - j >= 1` for every
    /// proper prefix and the total equals `len - 1`.
    pub fn from_preorder_degrees(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        // `open` counts children announced but not yet visited.
        let mut open: i64 = 1;
        for (i, &d) in degrees.iter().enumerate() {
            if open <= 0 {
                return Err(Error::InvalidTree(format!("vertex {i} is unreachable")));
            }
            open += d as i64 - 1;
        }
        if open != 0 {
            return Err(Error::InvalidTree(format!(
                "degree sum does not match {} vertices",
                degrees.len()
            )));
        }
        Ok(PlanarTree { degrees })
    }

    pub(crate) fn from_preorder_degrees_unchecked(degrees: Vec<u32>) -> Self {
        debug_assert!(PlanarTree::from_preorder_degrees(degrees.clone()).is_ok());
        PlanarTree { degrees }
    }

    /// Builds a tree from arbitrary vertex labels: `children[v]` lists the
    /// children of `v` from left to right.
    pub fn from_children(root: usize, children: &[Vec<usize>]) -> Result<Self> {
        let v = children.len();
        if root >= v {
            return Err(Error::InvalidTree(format!("root {root} out of range")));
        }
        let mut seen = vec![false; v];
        let mut degrees = Vec::with_capacity(v);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            if seen[u] {
                return Err(Error::InvalidTree(format!("vertex {u} reached twice")));
            }
            seen[u] = true;
            degrees.push(children[u].len() as u32);
            for &c in children[u].iter().rev() {
                if c >= v {
                    return Err(Error::InvalidTree(format!("child {c} out of range")));
                }
                stack.push(c);
            }
        }
        if degrees.len() != v {
            return Err(Error::InvalidTree("tree is not connected".into()));
        }
        Ok(PlanarTree { degrees })
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    /// Number of edges, `vertex_count - 1`.
    pub fn edge_count(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn preorder_degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 0).count()
    }

    /// Ordered children of every vertex.
    pub fn children_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.degrees.len()];
        // stack of (vertex, children still to attach)
        let mut stack: Vec<(usize, u32)> = Vec::new();
        for (v, &d) in self.degrees.iter().enumerate() {
            if let Some(top) = stack.last_mut() {
                lists[top.0].push(v);
                top.1 -= 1;
            }
            while matches!(stack.last(), Some(&(_, 0))) {
                stack.pop();
            }
            if d > 0 {
                stack.push((v, d));
            }
        }
        lists
    }

    /// Parent of each vertex; `None` for the root.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parents = vec![None; self.degrees.len()];
        for (u, kids) in self.children_lists().into_iter().enumerate() {
            for c in kids {
                parents[c] = Some(u);
            }
        }
        parents
    }

    /// Number of vertices in the subtree rooted at each vertex.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1usize; self.degrees.len()];
        let parents = self.parents();
        // preorder labels: children have larger labels than their parent
        for v in (1..self.degrees.len()).rev() {
            let p = parents[v].expect("non-root vertex has a parent");
            sizes[p] += sizes[v];
        }
        sizes
    }
}
