//! Goodness-of-fit checks of the exact samplers on small sizes, with fixed
//! seeds and critical values at level 0.001.

use std::collections::HashMap;
use std::hash::Hash;

use meanders::samplers::*;
use meanders::{serialize, RngStream};

fn frequencies<T: Hash + Eq>(draws: impl Iterator<Item = T>) -> HashMap<T, u64> {
    let mut h = HashMap::new();
    for d in draws {
        *h.entry(d).or_insert(0) += 1;
    }
    h
}

/// Pearson statistic against the uniform law on `cells` outcomes.
fn chi_square_uniform<T>(h: &HashMap<T, u64>, cells: usize, draws: u64) -> f64 {
    assert_eq!(
        h.len(),
        cells,
        "some outcome never appeared or an extra one did"
    );
    let e = draws as f64 / cells as f64;
    h.values().map(|&o| (o as f64 - e).powi(2) / e).sum()
}

#[test]
fn uniform_pairings_on_eight_points() {
    let draws = 14_000;
    let h = frequencies(
        (0..draws).map(|i| sample_uniform_pairing(4, &mut RngStream::new(1, i)).into_vec()),
    );
    let chi = chi_square_uniform(&h, 14, draws);
    assert!(chi < 34.53, "chi-square {chi}");
}

#[test]
fn uniform_systems_on_six_points() {
    let draws = 25_000;
    let h = frequencies(
        (0..draws).map(|i| serialize(&sample_uniform_meander(3, &mut RngStream::new(2, i)))),
    );
    let chi = chi_square_uniform(&h, 25, draws);
    assert!(chi < 51.18, "chi-square {chi}");
}

#[test]
fn unrestricted_weights_give_uniform_trees() {
    let sampler = SgTreeSampler::new(&WeightSequence::uniform(8), 5).unwrap();
    let draws = 14_000;
    let h = frequencies((0..draws).map(|i| sampler.sample(&mut RngStream::new(3, i))));
    let chi = chi_square_uniform(&h, 14, draws);
    assert!(chi < 34.53, "chi-square {chi}");
}

#[test]
fn binary_weights_give_uniform_full_binary_trees() {
    let sampler = SgTreeSampler::new(&WeightSequence::parse("1,0,1").unwrap(), 7).unwrap();
    let draws = 10_000;
    let h = frequencies((0..draws).map(|i| sampler.sample(&mut RngStream::new(4, i))));
    for t in h.keys() {
        assert!(t.preorder_degrees().iter().all(|&d| d == 0 || d == 2));
    }
    let chi = chi_square_uniform(&h, 5, draws);
    assert!(chi < 18.47, "chi-square {chi}");
}

#[test]
fn equivalent_weights_give_the_same_law() {
    // w_k and a b^k w_k define the same conditioned law
    let w = WeightSequence::parse("1,1,1").unwrap();
    let v = w.scaled(2.0, 3.0).unwrap();
    let (a, b) = (
        SgTreeSampler::new(&w, 6).unwrap(),
        SgTreeSampler::new(&v, 6).unwrap(),
    );
    let draws = 20_000;
    let ha = frequencies((0..draws).map(|i| a.sample(&mut RngStream::new(5, i))));
    let hb = frequencies((0..draws).map(|i| b.sample(&mut RngStream::new(6, i))));
    // Motzkin trees on six vertices: 21
    assert_eq!(ha.len(), 21);
    let chi: f64 = ha
        .iter()
        .map(|(t, &x)| {
            let y = *hb.get(t).unwrap_or(&0) as f64;
            let x = x as f64;
            (x - y).powi(2) / (x + y)
        })
        .sum();
    assert!(chi < 45.31, "two-sample chi-square {chi}");
}

#[test]
fn compositions_are_uniform() {
    let draws = 10_000;
    let h = frequencies(
        (0..draws).map(|i| sample_composition(6, 3, &mut RngStream::new(7, i)).unwrap()),
    );
    let chi = chi_square_uniform(&h, 10, draws);
    assert!(chi < 27.88, "chi-square {chi}");
}

#[test]
fn sampled_systems_are_valid_and_sized() {
    let mut rng = RngStream::new(8, 0);
    for n in [1, 2, 17, 400] {
        for ms in [
            sample_uniform_meander(n, &mut rng),
            sample_comb_meander(n, &mut rng),
            sample_semimeander(n, &mut rng),
        ] {
            assert_eq!(ms.n(), n);
            meanders::validate_pairing(ms.upper().as_slice()).unwrap();
            meanders::validate_pairing(ms.lower().as_slice()).unwrap();
        }
    }
}
