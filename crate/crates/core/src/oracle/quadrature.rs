//! Generalized Gauss-Laguerre rules by Golub-Welsch in arbitrary precision.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::Float;

use crate::error::{Error, Result};
use crate::numeric;
use crate::rational::{self, Rational};

/// Nodes and weights for `int_0^inf x^alpha e^{-x} f(x) dx`; exact for
/// polynomial `f` of degree up to `2 * count - 1`.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub alpha: Rational,
    pub nodes: Vec<Float>,
    pub weights: Vec<Float>,
    pub bits: u32,
}

impl QuadratureRule {
    pub fn count(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate<F: Fn(&Float) -> Float>(&self, f: F) -> Float {
        let mut acc = Float::with_val(self.bits, 0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += Float::with_val(self.bits, w * &f(x));
        }
        acc
    }
}

type Key = (Rational, usize, u32);

fn cache() -> &'static RwLock<HashMap<Key, Arc<QuadratureRule>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<QuadratureRule>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized rule for weight `x^alpha e^{-x}`; `alpha` must be a half-integer > -1.
pub fn gauss_laguerre(alpha: &Rational, count: usize, bits: u32) -> Result<Arc<QuadratureRule>> {
    let key = (alpha.clone(), count, bits);
    if let Some(rule) = cache().read().expect("quadrature cache poisoned").get(&key) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(build(alpha, count, bits)?);
    cache().write().expect("quadrature cache poisoned").entry(key).or_insert(rule.clone());
    Ok(rule)
}

fn build(alpha: &Rational, count: usize, bits: u32) -> Result<QuadratureRule> {
    if count == 0 {
        return Err(Error::Domain("quadrature needs at least one node".into()));
    }
    let twice_alpha_plus_2 = alpha * rational::int(2) + rational::int(2);
    if !rational::is_integer(&twice_alpha_plus_2) || twice_alpha_plus_2 <= rational::int(0) {
        return Err(Error::Domain(format!("alpha={} must be a half-integer above -1", rational::to_pq(alpha))));
    }
    let work = bits + 32;
    let a = numeric::float(work, alpha);

    // Jacobi matrix: diag 2k + alpha + 1, off-diagonal sqrt(k (k + alpha)).
    let mut diag: Vec<Float> = (0..count).map(|k| Float::with_val(work, &a + (2 * k + 1) as u64)).collect();
    let mut off: Vec<Float> = (0..count)
        .map(|k| {
            if k + 1 < count {
                let k1 = (k + 1) as u64;
                Float::with_val(work, Float::with_val(work, &a + k1) * k1).sqrt()
            } else {
                Float::with_val(work, 0)
            }
        })
        .collect();
    let mut first_row: Vec<Float> = (0..count).map(|k| Float::with_val(work, u32::from(k == 0))).collect();

    tridiagonal_ql(&mut diag, &mut off, &mut first_row, work)?;

    let twice = twice_alpha_plus_2.to_integer();
    let twice: u64 = u64::try_from(&twice).map_err(|_| Error::Domain("alpha too large".into()))?;
    let mu0 = numeric::gamma_half_integer(twice, work);

    let mut pairs: Vec<(Float, Float)> = diag
        .into_iter()
        .zip(first_row)
        .map(|(x, z)| {
            let w = Float::with_val(work, &z * &z) * &mu0;
            (Float::with_val(bits, &x), Float::with_val(bits, &w))
        })
        .collect();
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).expect("finite nodes"));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule { alpha: alpha.clone(), nodes, weights, bits })
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix,
/// carrying along only the first component of each eigenvector.
///
/// `off[i]` couples rows `i` and `i + 1`. On return `diag` holds the
/// eigenvalues and `z` the first eigenvector components.
fn tridiagonal_ql(diag: &mut [Float], off: &mut [Float], z: &mut [Float], bits: u32) -> Result<()> {
    let n = diag.len();
    let eps = Float::with_val(bits, Float::i_exp(1, 4 - bits as i32));
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let scale = Float::with_val(bits, diag[m].abs_ref()) + Float::with_val(bits, diag[m + 1].abs_ref());
                if Float::with_val(bits, off[m].abs_ref()) <= Float::with_val(bits, &eps * &scale) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(Error::NonConvergence(format!("QL iteration stalled at row {l} of {n}")));
            }
            let mut g = Float::with_val(bits, &diag[l + 1] - &diag[l]) / Float::with_val(bits, &off[l] * 2u32);
            let mut r = Float::with_val(bits, g.hypot_ref(&Float::with_val(bits, 1)));
            let shifted = if g.is_sign_negative() {
                Float::with_val(bits, &g - &r)
            } else {
                Float::with_val(bits, &g + &r)
            };
            g = Float::with_val(bits, &diag[m] - &diag[l]) + Float::with_val(bits, &off[l] / &shifted);
            let mut s = Float::with_val(bits, 1);
            let mut c = Float::with_val(bits, 1);
            let mut p = Float::with_val(bits, 0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = Float::with_val(bits, &s * &off[i]);
                let b = Float::with_val(bits, &c * &off[i]);
                r = Float::with_val(bits, f.hypot_ref(&g));
                off[i + 1] = r.clone();
                if r.is_zero() {
                    diag[i + 1] -= &p;
                    off[m] = Float::with_val(bits, 0);
                    deflated = true;
                    break;
                }
                s = Float::with_val(bits, &f / &r);
                c = Float::with_val(bits, &g / &r);
                g = Float::with_val(bits, &diag[i + 1] - &p);
                r = Float::with_val(bits, &diag[i] - &g) * &s + Float::with_val(bits, &c * &b) * 2u32;
                p = Float::with_val(bits, &s * &r);
                diag[i + 1] = Float::with_val(bits, &g + &p);
                g = Float::with_val(bits, &c * &r) - &b;

                let zf = z[i + 1].clone();
                z[i + 1] = Float::with_val(bits, &s * &z[i]) + Float::with_val(bits, &c * &zf);
                z[i] = Float::with_val(bits, &c * &z[i]) - Float::with_val(bits, &s * &zf);
            }
            if deflated {
                continue;
            }
            diag[l] -= &p;
            off[l] = g;
            off[m] = Float::with_val(bits, 0);
        }
    }
    Ok(())
}
