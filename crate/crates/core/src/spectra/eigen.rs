//! Real symmetric eigensolver: Householder reduction to tridiagonal form,
//! then implicit-shift QL. Follows the classic EISPACK `tred2` / `tql2`
//! pair, accumulating eigenvectors so callers can measure residuals.

#![allow(clippy::needless_range_loop)]

/// QL sweeps allowed per eigenvalue before giving up.
pub const MAX_SWEEPS: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    /// Eigenvalues in the order the QL pass leaves them (unsorted).
    pub values: Vec<f64>,
    /// Column `j` of this row-major `m x m` matrix is the unit eigenvector
    /// of `values[j]`.
    pub vectors: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoConvergence {
    /// Index of the eigenvalue that failed to settle.
    pub index: usize,
    /// Size of the off-diagonal element left when the cap was hit.
    pub off_diagonal: f64,
}

struct Square {
    m: usize,
    a: Vec<f64>,
}

impl Square {
    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.m + j]
    }
    #[inline]
    fn set(&mut self, i: usize, j: usize, x: f64) {
        self.a[i * self.m + j] = x;
    }
}

/// Eigen-decomposition of the symmetric `m x m` row-major matrix `a`.
/// Only the lower triangle is read.
pub fn symmetric_eigen(m: usize, a: &[f64]) -> Result<SymmetricEigen, NoConvergence> {
    assert_eq!(a.len(), m * m);
    if m == 0 {
        return Ok(SymmetricEigen {
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }
    let mut v = Square { m, a: a.to_vec() };
    let mut d = vec![0.0; m];
    let mut e = vec![0.0; m];
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e)?;
    Ok(SymmetricEigen {
        values: d,
        vectors: v.a,
    })
}

fn tred2(v: &mut Square, d: &mut [f64], e: &mut [f64]) {
    let n = v.m;
    for j in 0..n {
        d[j] = v.at(n - 1, j);
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for dk in d.iter().take(i) {
            scale += dk.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v.at(i - 1, j);
                v.set(i, j, 0.0);
                v.set(j, i, 0.0);
            }
        } else {
            for dk in d.iter_mut().take(i) {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v.set(j, i, f);
                g = e[j] + v.at(j, j) * f;
                for k in j + 1..i {
                    g += v.at(k, j) * d[k];
                    e[k] += v.at(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    let x = v.at(k, j) - (f * e[k] + g * d[k]);
                    v.set(k, j, x);
                }
                d[j] = v.at(i - 1, j);
                v.set(i, j, 0.0);
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..n - 1 {
        let x = v.at(i, i);
        v.set(n - 1, i, x);
        v.set(i, i, 1.0);
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v.at(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v.at(k, i + 1) * v.at(k, j);
                }
                for k in 0..=i {
                    let x = v.at(k, j) - g * d[k];
                    v.set(k, j, x);
                }
            }
        }
        for k in 0..=i {
            v.set(k, i + 1, 0.0);
        }
    }
    for j in 0..n {
        d[j] = v.at(n - 1, j);
        v.set(n - 1, j, 0.0);
    }
    v.set(n - 1, n - 1, 1.0);
    e[0] = 0.0;
}

fn tql2(v: &mut Square, d: &mut [f64], e: &mut [f64]) -> Result<(), NoConvergence> {
    let n = v.m;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(NoConvergence {
                        index: l,
                        off_diagonal: e[l].abs(),
                    });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let vk1 = v.at(k, i + 1);
                        let vk = v.at(k, i);
                        v.set(k, i + 1, s * vk + c * vk1);
                        v.set(k, i, c * vk - s * vk1);
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
