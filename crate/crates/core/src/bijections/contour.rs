use crate::error::{Error, PairingError, Result};
use crate::model::{DyckPath, Pairing, PlanarTree};

/// Depth-first contour of a tree: `+1` when descending an edge, `-1` when
/// climbing back. A tree on `n + 1` vertices gives a path of length `2n`.
pub fn tree_to_dyck(t: &PlanarTree) -> DyckPath {
    DyckPath::new_unchecked(contour_steps(t.preorder_degrees()))
}

fn contour_steps(degrees: &[u32]) -> Vec<i8> {
    let mut steps = Vec::with_capacity(2 * (degrees.len() - 1));
    // children still to visit, per vertex on the current root path
    let mut remaining: Vec<u32> = vec![degrees[0]];
    for &d in &degrees[1..] {
        steps.push(1);
        *remaining.last_mut().expect("parent on stack") -= 1;
        remaining.push(d);
        while remaining.len() > 1 && remaining.last() == Some(&0) {
            remaining.pop();
            steps.push(-1);
        }
    }
    steps
}

/// Inverse of [`tree_to_dyck`].
pub fn dyck_to_tree(p: &DyckPath) -> PlanarTree {
    let mut degrees = vec![0u32];
    let mut path = vec![0usize];
    for &s in p.steps() {
        if s > 0 {
            let parent = *path.last().expect("root never left");
            degrees[parent] += 1;
            path.push(degrees.len());
            degrees.push(0);
        } else {
            path.pop();
        }
    }
    PlanarTree::from_preorder_degrees_unchecked(degrees)
}

/// Stack matching: an up-step opens an arc, a down-step closes the most
/// recently opened one.
pub fn dyck_to_pairing(p: &DyckPath) -> Result<Pairing> {
    if p.steps().is_empty() {
        return Err(Error::Pairing(PairingError::Empty));
    }
    Ok(pairing_from_steps(p.steps()))
}

/// Same as [`dyck_to_pairing`] for step arrays known to be Dyck paths.
pub(crate) fn pairing_from_steps(steps: &[i8]) -> Pairing {
    let mut partner = vec![0u32; steps.len()];
    let mut open: Vec<u32> = Vec::with_capacity(steps.len() / 2);
    for (i, &s) in steps.iter().enumerate() {
        if s > 0 {
            open.push(i as u32);
        } else {
            let j = open.pop().expect("Dyck path never dips below zero");
            partner[i] = j;
            partner[j as usize] = i as u32;
        }
    }
    Pairing::new_unchecked(partner)
}

/// Inverse of [`dyck_to_pairing`]: left endpoints become up-steps.
pub fn pairing_to_dyck(p: &Pairing) -> DyckPath {
    let steps = (0..p.len())
        .map(|i| if p.partner(i) > i { 1 } else { -1 })
        .collect();
    DyckPath::new_unchecked(steps)
}

/// Tree to pairing through the contour path. A leaf becomes an arc
/// `(x, x + 1)`; in general the arc opened when entering a vertex with
/// `d` descendants is `(x, x + 2d + 1)`.
pub fn tree_to_pairing(t: &PlanarTree) -> Result<Pairing> {
    dyck_to_pairing(&tree_to_dyck(t))
}

pub(crate) fn pairing_from_tree_unchecked(degrees: &[u32]) -> Pairing {
    pairing_from_steps(&contour_steps(degrees))
}

/// `(0 1)(2 3)...(2n-2 2n-1)`.
pub fn comb_pairing(n: usize) -> Pairing {
    assert!(n >= 1, "comb pairing needs n >= 1");
    let partner = (0..2 * n as u32).map(|i| i ^ 1).collect();
    Pairing::new_unchecked(partner)
}

/// Consecutive fully nested blocks of sizes `2 * parts[i]`.
pub fn rainbow_pairing(parts: &[u64]) -> Pairing {
    let total: u64 = parts.iter().sum();
    assert!(
        total >= 1 && !parts.contains(&0),
        "rainbow needs positive parts"
    );
    let mut partner = vec![0u32; 2 * total as usize];
    let mut offset = 0u32;
    for &a in parts {
        let width = 2 * a as u32;
        for j in 0..width {
            partner[(offset + j) as usize] = offset + width - 1 - j;
        }
        offset += width;
    }
    Pairing::new_unchecked(partner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(d: &[u32]) -> PlanarTree {
        PlanarTree::from_preorder_degrees(d.to_vec()).unwrap()
    }

    #[test]
    fn contour_of_small_trees() {
        assert_eq!(tree_to_dyck(&tree(&[0])).steps(), &[] as &[i8]);
        assert_eq!(tree_to_dyck(&tree(&[1, 1, 0])).steps(), &[1, 1, -1, -1]);
        assert_eq!(tree_to_dyck(&tree(&[2, 0, 0])).steps(), &[1, -1, 1, -1]);
        assert_eq!(
            tree_to_dyck(&tree(&[2, 1, 0, 0])).steps(),
            &[1, 1, -1, -1, 1, -1]
        );
    }

    #[test]
    fn stack_matching() {
        let p = |s: &[i8]| dyck_to_pairing(&DyckPath::new(s.to_vec()).unwrap()).unwrap();
        assert_eq!(p(&[1, -1]).as_slice(), &[1, 0]);
        assert_eq!(p(&[1, 1, -1, -1]).as_slice(), &[3, 2, 1, 0]);
        assert!(dyck_to_pairing(&DyckPath::empty()).is_err());
    }

    #[test]
    fn inverse_round_trips() {
        let t = tree(&[3, 0, 2, 1, 0, 0, 0]);
        let d = tree_to_dyck(&t);
        assert_eq!(dyck_to_tree(&d), t);
        let p = dyck_to_pairing(&d).unwrap();
        assert_eq!(pairing_to_dyck(&p), d);
    }

    #[test]
    fn combs_and_rainbows() {
        assert_eq!(comb_pairing(1).as_slice(), &[1, 0]);
        assert_eq!(comb_pairing(2).as_slice(), &[1, 0, 3, 2]);
        assert_eq!(comb_pairing(3).as_slice(), &[1, 0, 3, 2, 5, 4]);
        assert_eq!(rainbow_pairing(&[2]).as_slice(), &[3, 2, 1, 0]);
        assert_eq!(rainbow_pairing(&[1, 1]).as_slice(), &[1, 0, 3, 2]);
        assert_eq!(rainbow_pairing(&[2, 1]).as_slice(), &[3, 2, 1, 0, 5, 4]);
    }
}
