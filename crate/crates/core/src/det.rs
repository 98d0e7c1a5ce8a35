//! Determinants of the string matrices A_L built from contraction tables.
//!
//! (A_L)_{ij} = 2 g_{i-j+1} - delta_{i,j-1}, an L x L Toeplitz matrix whose
//! entries need the table at indices 2-L ..= L. The real branch uses the even
//! extension g_{-m} = g_m; the complex branch uses g_{-m} = conj(g_m).

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Det(A_L) from a real contraction table `g[0..=L]` (even-extended).
///
/// `g` must contain at least `l + 1` entries.
pub fn string_determinant(g: &[f64], l: usize) -> f64 {
    assert!(l >= 1 && g.len() > l, "table must cover g_0..=g_L");
    match l {
        1 => 2.0 * g[1],
        2 => 4.0 * (g[1] * g[1] - g[2] * (g[0] - 0.5)),
        _ => {
            let a = DMatrix::from_fn(l, l, |i, j| {
                let m = i as isize - j as isize + 1;
                let val = 2.0 * g[m.unsigned_abs()];
                if m == 0 {
                    val - 1.0
                } else {
                    val
                }
            });
            a.lu().determinant()
        }
    }
}

/// Det(A_L) from a complex table `g[0..=L]` with conjugate-even extension.
pub fn string_determinant_complex(g: &[Complex64], l: usize) -> Complex64 {
    assert!(l >= 1 && g.len() > l, "table must cover g_0..=g_L");
    let entry = |m: isize| -> Complex64 {
        let base = g[m.unsigned_abs()];
        if m >= 0 {
            base
        } else {
            base.conj()
        }
    };
    if l == 1 {
        return 2.0 * entry(1);
    }
    let a = DMatrix::from_fn(l, l, |i, j| {
        let m = i as isize - j as isize + 1;
        let val = 2.0 * entry(m);
        if m == 0 {
            val - Complex64::new(1.0, 0.0)
        } else {
            val
        }
    });
    a.lu().determinant()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cofactor-expansion determinant, O(L!); the independent oracle for
    /// small orders.
    fn naive_det(m: &[Vec<f64>]) -> f64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut acc = 0.0;
        let mut sign = 1.0;
        for col in 0..n {
            let minor: Vec<Vec<f64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            acc += sign * m[0][col] * naive_det(&minor);
            sign = -sign;
        }
        acc
    }

    fn string_matrix(g: &[f64], l: usize) -> Vec<Vec<f64>> {
        (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let m = i as isize - j as isize + 1;
                        let v = 2.0 * g[m.unsigned_abs()];
                        if m == 0 {
                            v - 1.0
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn low_order_identities() {
        let g = [0.4, 0.3, -0.2, 0.1];
        assert!((string_determinant(&g, 1) - 2.0 * g[1]).abs() < 1e-15);
        let expected = 4.0 * (g[1] * g[1] - g[2] * (g[0] - 0.5));
        assert!((string_determinant(&g, 2) - expected).abs() < 1e-15);
    }

    #[test]
    fn matches_cofactor_oracle() {
        // deterministic pseudo-random table
        let mut x = 0.37_f64;
        let mut g = vec![0.0; 8];
        for gi in g.iter_mut() {
            x = (x * 997.0 + 0.1234).fract();
            *gi = x - 0.5;
        }
        for l in 1..=6 {
            let fast = string_determinant(&g, l);
            let slow = naive_det(&string_matrix(&g, l));
            assert!(
                (fast - slow).abs() <= 1e-12 * slow.abs().max(1.0),
                "L={l}: {fast} vs {slow}"
            );
        }
    }

    #[test]
    fn complex_reduces_to_real_on_real_tables() {
        let g = [0.45, 0.21, -0.11, 0.07, 0.02, -0.01];
        let gc: Vec<Complex64> = g.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        for l in 1..=5 {
            let re = string_determinant(&g, l);
            let z = string_determinant_complex(&gc, l);
            assert!((z.re - re).abs() < 1e-13 && z.im.abs() < 1e-13, "L={l}");
        }
    }

    /// Hermitian-Toeplitz structure: the determinant of A_L built from a
    /// conjugate-even table is not generally real (the -delta breaks it), but
    /// conjugating the table must conjugate the determinant.
    #[test]
    fn conjugate_table_conjugates_determinant() {
        let g: Vec<Complex64> = (0..6)
            .map(|m| Complex64::from_polar(0.4 / (m as f64 + 1.0), 0.3 * m as f64))
            .collect();
        let gc: Vec<Complex64> = g.iter().map(|z| z.conj()).collect();
        for l in 1..=5 {
            let d1 = string_determinant_complex(&g, l);
            let d2 = string_determinant_complex(&gc, l);
            assert!((d1 - d2.conj()).norm() < 1e-13, "L={l}");
        }
    }
}
