use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::{MeasurementScheme, Povm, Variant};
use crate::error::{Error, Result};

pub const MAX_MUB_DIM: usize = 31;

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

/// Basis vectors of a complete MUB set in prime dimension `d`.
///
/// For `d = 2` these are the eigenbases of `sigma_z`, `sigma_x`, `sigma_y`.
/// For odd primes: the computational basis and, for `r = 1..d`, the bases
/// with components `omega^(r k^2 + j k) / sqrt(d)`.
pub fn mub_vectors(d: usize) -> Result<Vec<Vec<Vec<Complex64>>>> {
    if !(2..=MAX_MUB_DIM).contains(&d) || !is_prime(d) {
        return Err(Error::Unsupported(format!(
            "complete MUB sets are built only for prime 2 <= d <= {MAX_MUB_DIM}, got {d}"
        )));
    }
    let c = |re: f64, im: f64| Complex64::new(re, im);
    if d == 2 {
        let s = FRAC_1_SQRT_2;
        return Ok(vec![
            vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]],
            vec![vec![c(s, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(-s, 0.0)]],
            vec![vec![c(s, 0.0), c(0.0, s)], vec![c(s, 0.0), c(0.0, -s)]],
        ]);
    }
    let norm = 1.0 / (d as f64).sqrt();
    let mut bases = Vec::with_capacity(d + 1);
    bases.push(
        (0..d)
            .map(|j| (0..d).map(|k| c(if j == k { 1.0 } else { 0.0 }, 0.0)).collect())
            .collect(),
    );
    for r in 1..=d {
        let basis = (0..d)
            .map(|j| {
                (0..d)
                    .map(|k| {
                        // exponent reduced mod d keeps the phase argument small
                        let e = (r * k * k + j * k) % d;
                        Complex64::from_polar(norm, 2.0 * PI * e as f64 / d as f64)
                    })
                    .collect()
            })
            .collect();
        bases.push(basis);
    }
    Ok(bases)
}

/// Complete set of `d + 1` MUBs as rank-one projective POVMs.
pub fn build_mub_set(d: usize) -> Result<MeasurementScheme> {
    let povms = mub_vectors(d)?
        .iter()
        .enumerate()
        .map(|(r, basis)| Povm::from_basis(basis, format!("mub-{r}")))
        .collect::<Result<Vec<_>>>()?;
    MeasurementScheme::new(Variant::MubSet, povms, None, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::inner;

    #[test]
    fn primality() {
        let primes: Vec<usize> = (0..32).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
    }

    #[test]
    fn composite_dimension_is_unsupported() {
        assert!(matches!(build_mub_set(6), Err(Error::Unsupported(_))));
        assert!(matches!(build_mub_set(4), Err(Error::Unsupported(_))));
        assert!(matches!(build_mub_set(37), Err(Error::Unsupported(_))));
    }

    #[test]
    fn qubit_overlaps_are_one_half() {
        let b = mub_vectors(2).unwrap();
        for r in 0..3 {
            for s in (r + 1)..3 {
                for u in &b[r] {
                    for v in &b[s] {
                        assert!((inner(u, v).norm_sqr() - 0.5).abs() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn qutrit_exhaustive_overlaps() {
        // 6 basis pairs x 9 vector pairs = 54 overlap checks
        let b = mub_vectors(3).unwrap();
        let mut checks = 0;
        for r in 0..4 {
            for s in (r + 1)..4 {
                for u in &b[r] {
                    for v in &b[s] {
                        assert!((inner(u, v).norm_sqr() - 1.0 / 3.0).abs() < 1e-10);
                        checks += 1;
                    }
                }
            }
        }
        assert_eq!(checks, 54);
    }

    #[test]
    fn bases_are_orthonormal() {
        for d in [2, 5, 7, 31] {
            for basis in mub_vectors(d).unwrap() {
                for (j, u) in basis.iter().enumerate() {
                    for (k, v) in basis.iter().enumerate() {
                        let expect = if j == k { 1.0 } else { 0.0 };
                        assert!((inner(u, v).norm() - expect).abs() < 1e-12);
                    }
                }
            }
        }
    }
}
