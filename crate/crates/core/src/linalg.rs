//! Flat row-major kernels behind the network passes. All hot loops reduce to
//! contiguous dot products and axpy updates so the compiler can vectorize.

use crate::nn::Real;

/// Dot product with four independent accumulators; the reassociation is what
/// lets LLVM emit SIMD reductions.
#[inline]
pub(crate) fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    let chunks = a.len() / 4;
    let (mut s0, mut s1, mut s2, mut s3) = (F::zero(), F::zero(), F::zero(), F::zero());
    for i in 0..chunks {
        let j = i * 4;
        s0 = s0 + a[j] * b[j];
        s1 = s1 + a[j + 1] * b[j + 1];
        s2 = s2 + a[j + 2] * b[j + 2];
        s3 = s3 + a[j + 3] * b[j + 3];
    }
    let mut tail = F::zero();
    for j in chunks * 4..a.len() {
        tail = tail + a[j] * b[j];
    }
    (s0 + s1) + (s2 + s3) + tail
}

/// `out += alpha * x`.
#[inline]
pub(crate) fn axpy<F: Real>(out: &mut [F], alpha: F, x: &[F]) {
    debug_assert_eq!(out.len(), x.len());
    for (o, &v) in out.iter_mut().zip(x.iter()) {
        *o = *o + alpha * v;
    }
}

/// `z[b, o] = dot(x[b, :], w[o, :]) + bias[o]` for a row-major weight matrix
/// `w` of shape `[rows_out x cols_in]` and a flat batch `x` of shape
/// `[batch x cols_in]`.
pub(crate) fn dense_forward<F: Real>(
    z: &mut [F],
    x: &[F],
    batch: usize,
    w: &[F],
    bias: &[F],
    cols_in: usize,
    rows_out: usize,
) {
    debug_assert_eq!(z.len(), batch * rows_out);
    debug_assert_eq!(x.len(), batch * cols_in);
    debug_assert_eq!(w.len(), rows_out * cols_in);
    for b in 0..batch {
        let xr = &x[b * cols_in..(b + 1) * cols_in];
        let zr = &mut z[b * rows_out..(b + 1) * rows_out];
        for o in 0..rows_out {
            zr[o] = dot(xr, &w[o * cols_in..(o + 1) * cols_in]) + bias[o];
        }
    }
}

/// Accumulates `dw[o, i] += sum_b dz[b, o] * x[b, i]` and `db[o] += sum_b dz[b, o]`.
pub(crate) fn dense_backward_params<F: Real>(
    dw: &mut [F],
    db: &mut [F],
    dz: &[F],
    x: &[F],
    batch: usize,
    cols_in: usize,
    rows_out: usize,
) {
    for b in 0..batch {
        let xr = &x[b * cols_in..(b + 1) * cols_in];
        let dzr = &dz[b * rows_out..(b + 1) * rows_out];
        for o in 0..rows_out {
            let g = dzr[o];
            if g != F::zero() {
                axpy(&mut dw[o * cols_in..(o + 1) * cols_in], g, xr);
            }
            db[o] = db[o] + g;
        }
    }
}

/// `dx[b, i] = sum_o dz[b, o] * w[o, i]`, overwriting `dx`.
pub(crate) fn dense_backward_input<F: Real>(
    dx: &mut [F],
    dz: &[F],
    w: &[F],
    batch: usize,
    cols_in: usize,
    rows_out: usize,
) {
    debug_assert_eq!(dx.len(), batch * cols_in);
    for v in dx.iter_mut() {
        *v = F::zero();
    }
    for b in 0..batch {
        let dxr = &mut dx[b * cols_in..(b + 1) * cols_in];
        let dzr = &dz[b * rows_out..(b + 1) * rows_out];
        for o in 0..rows_out {
            let g = dzr[o];
            if g != F::zero() {
                axpy(dxr, g, &w[o * cols_in..(o + 1) * cols_in]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_matches_naive() {
        let a: Vec<f64> = (0..13).map(|i| i as f64 * 0.5).collect();
        let b: Vec<f64> = (0..13).map(|i| 1.0 - i as f64).collect();
        let naive: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        assert!((dot(&a, &b) - naive).abs() < 1e-12);
    }

    #[test]
    fn dense_forward_small() {
        // w = [[1, 2], [3, 4]], bias = [10, 20], x = [1, 1]
        let w = [1.0f64, 2.0, 3.0, 4.0];
        let bias = [10.0, 20.0];
        let x = [1.0, 1.0];
        let mut z = [0.0; 2];
        dense_forward(&mut z, &x, 1, &w, &bias, 2, 2);
        assert_eq!(z, [13.0, 27.0]);
    }
}
