//! Shared generators for the in-crate test suites.

use rand::rngs::StdRng;
use rand::Rng;


/// A random unimodular matrix built from a few elementary shears.
pub(crate) fn random_unimodular(rng: &mut StdRng) -> [[i64; 2]; 2] {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..3 {
        let s = rng.gen_range(-2i64..=2);
        if rng.gen_bool(0.5) {
            m = [[m[0][0] + s * m[1][0], m[0][1] + s * m[1][1]], m[1]];
        } else {
            m = [m[0], [m[1][0] + s * m[0][0], m[1][1] + s * m[0][1]]];
        }
    }
    if rng.gen_bool(0.5) {
        m.swap(0, 1);
    }
    m
}
