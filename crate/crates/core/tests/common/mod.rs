//! Seeded random rank-2 families: arity ≤ 4, horizontal ≤ 2, coefficients in {−1, 0, 1}.

use dainf_core::catalog::family_from_coefficients;
use dainf_core::exact::{Bidegree, BigradedBasis, Ring};
use dainf_core::structure::{Bounds, Convention, StructureFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BOUNDS: Bounds = Bounds {
    max_horizontal: 2,
    max_arity: 4,
};

pub const FAMILY_COUNT: u64 = 60;

/// Bidegrees and sparsity vary with the seed so that both passing and failing families occur.
pub fn random_family(seed: u64, convention: Convention) -> StructureFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degree = |rng: &mut ChaCha8Rng| Bidegree::new(rng.gen_range(-1..=0), rng.gen_range(-1..=1));
    let a = degree(&mut rng);
    let b = degree(&mut rng);
    let b = if a == b { b + Bidegree::new(0, 1) } else { b };
    let basis = BigradedBasis::new([("a", a), ("b", b)]).unwrap();
    let density = [0.1, 0.3, 0.6][rng.gen_range(0..3)];
    family_from_coefficients(basis, Ring::Integers, BOUNDS, convention, || {
        if rng.gen_bool(density) {
            if rng.gen_bool(0.5) {
                1
            } else {
                -1
            }
        } else {
            0
        }
    })
    .unwrap()
}
