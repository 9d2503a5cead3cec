use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{MatrixElement, Tag};

pub const DEFAULT_SEED: u64 = 0x5eed_0001;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal))
}

/// Gaussian matrix moved into `SL_n(R)`: the first column is negated when
/// the determinant is negative, then the matrix is scaled by `det^(-1/n)`.
pub fn random_sl(rng: &mut impl Rng, n: usize) -> DMatrix<f64> {
    loop {
        let mut g = gaussian(rng, n);
        let mut det = g.determinant();
        if det.abs() < 1e-6 {
            continue;
        }
        if det < 0.0 {
            g.column_mut(0).neg_mut();
            det = -det;
        }
        return g * det.powf(-1.0 / n as f64);
    }
}

/// Gaussian element of `sl_n(R)`.
pub fn random_traceless(rng: &mut impl Rng, n: usize) -> MatrixElement {
    let mut g = gaussian(rng, n);
    let shift = g.trace() / n as f64;
    for i in 0..n {
        g[(i, i)] -= shift;
    }
    MatrixElement::raw(g, Some(Tag::G))
}
