mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn interior_arcs_into_a_cycle_are_bounded() {
    let samples = common::cycle_samples(&mut ChaCha8Rng::seed_from_u64(31), 50);
    assert_eq!(samples.len(), 50);
    for s in &samples {
        assert!(s.n >= 3);
        assert!(s.m + 3 <= s.n, "{s:?}");
        // every interior vertex has in-degree three
        assert_eq!(s.edges, 3 * (s.vertices - s.n) + s.m + s.n, "{s:?}");
    }
    assert!(samples.iter().any(|s| s.vertices > s.n), "no sample has interior vertices");
    assert!(samples.iter().any(|s| s.n > 3));
}
