//! Independent cycle counter used to cross-check [`super::decompose`].

use crate::model::MeanderSystem;

struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
        true
    }
}

/// Number of connected components of the graph on `0..2n` whose edges are
/// the arcs of both pairings.
pub fn count_cycles_union_find(ms: &MeanderSystem) -> usize {
    let len = 2 * ms.n();
    let mut dsu = Dsu::new(len);
    let mut components = len;
    for (x, y) in ms.upper().arcs().chain(ms.lower().arcs()) {
        components -= dsu.union(x, y) as usize;
    }
    components
}
