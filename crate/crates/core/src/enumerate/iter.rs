use crate::bijections::{dyck_to_tree, pairing_from_steps};
use crate::error::{Error, Result};
use crate::model::{DyckPath, Pairing, PlanarTree};

/// Largest half-size accepted by the pairing and path iterators.
pub const PAIRING_GUARD: usize = 12;

/// Dyck paths of half-length `n` in lexicographic order, up-step first.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    current: Option<Vec<i8>>,
}

impl DyckPaths {
    fn new(n: usize) -> Self {
        let mut first = vec![1i8; n];
        first.extend(std::iter::repeat_n(-1, n));
        DyckPaths {
            current: Some(first),
        }
    }
}

/// Lexicographic successor: the rightmost up-step that can turn into a
/// down-step does so, and the tail becomes the smallest completion, all
/// up-steps then all down-steps.
fn successor(path: &mut [i8]) -> bool {
    let len = path.len();
    let mut height: Vec<i32> = Vec::with_capacity(len + 1);
    height.push(0);
    for &s in path.iter() {
        height.push(height[height.len() - 1] + s as i32);
    }
    for i in (0..len).rev() {
        if path[i] == 1 && height[i] >= 1 {
            let rest = len - i - 1;
            let h = (height[i] - 1) as usize;
            if h > rest {
                continue;
            }
            path[i] = -1;
            let ups = (rest - h) / 2;
            for (j, s) in path[i + 1..].iter_mut().enumerate() {
                *s = if j < ups { 1 } else { -1 };
            }
            return true;
        }
    }
    false
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if successor(&mut next) {
            self.current = Some(next);
        }
        Some(DyckPath::new_unchecked(cur))
    }
}

fn guard(n: usize) -> Result<()> {
    if n > PAIRING_GUARD {
        return Err(Error::SizeGuard {
            requested: n,
            limit: PAIRING_GUARD,
        });
    }
    Ok(())
}

pub fn all_dyck_paths(n: usize) -> Result<DyckPaths> {
    guard(n)?;
    Ok(DyckPaths::new(n))
}

/// Every non-crossing pairing of `2n` points, each exactly once.
pub fn all_nc_pairings(n: usize) -> Result<impl Iterator<Item = Pairing>> {
    if n == 0 {
        return Err(Error::Range("pairings need n >= 1".into()));
    }
    Ok(all_dyck_paths(n)?.map(|p| pairing_from_steps(p.steps())))
}

/// Every planar tree on `vertices` vertices.
pub fn all_planar_trees(vertices: usize) -> Result<impl Iterator<Item = PlanarTree>> {
    if vertices == 0 {
        return Err(Error::Range("trees need at least one vertex".into()));
    }
    Ok(all_dyck_paths(vertices - 1)?.map(|p| dyck_to_tree(&p)))
}
