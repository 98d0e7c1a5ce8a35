//! Closed-form ground-state contractions and concurrences for every
//! N-fermion sector, including the degenerate odd antiferromagnetic branch.

use crate::det::{string_determinant, string_determinant_complex};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Ground-state contraction g_L = sin(N L pi / n) / (n sin(L pi / n)),
/// with g_0 = N/n.
pub fn gs_contraction(n: usize, fermions: usize, l: usize) -> f64 {
    assert!(fermions <= n && l <= n - 1);
    if l == 0 {
        return fermions as f64 / n as f64;
    }
    let nf = n as f64;
    let theta = l as f64 * std::f64::consts::PI / nf;
    (fermions as f64 * theta).sin() / (nf * theta.sin())
}

fn gs_table(n: usize, fermions: usize, lmax: usize) -> Vec<f64> {
    (0..=lmax).map(|l| gs_contraction(n, fermions, l)).collect()
}

/// T = 0 concurrence of the pair at separation `l` in the N-fermion ground
/// state. `odd_af` selects the degenerate antiferromagnetic branch (odd n
/// only), evaluated as the real part of the complex string determinant with
/// phase-dressed contractions.
pub fn gs_concurrence(n: usize, fermions: usize, l: usize, odd_af: bool) -> Result<f64> {
    if n < 2 || l < 1 || l > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "separation L = {l} outside 1..={} for n = {n}",
            n.saturating_sub(1)
        )));
    }
    if fermions > n {
        return Err(Error::InvalidArgument(format!("fermion number {fermions} > n = {n}")));
    }
    if odd_af && n % 2 == 0 {
        return Err(Error::InvalidArgument(
            "odd antiferromagnetic branch requested on an even ring".into(),
        ));
    }
    if fermions == 0 || fermions == n {
        return Ok(0.0); // product states
    }
    let g = gs_table(n, fermions, l);
    let alpha_mag = if odd_af {
        let phase = std::f64::consts::PI / n as f64;
        let gc: Vec<Complex64> = g
            .iter()
            .enumerate()
            .map(|(m, &gm)| Complex64::from_polar(gm, m as f64 * phase))
            .collect();
        string_determinant_complex(&gc, l).re.abs()
    } else {
        string_determinant(&g, l).abs()
    };
    let g0 = g[0];
    let gl = g[l];
    let plus = (g0 * g0 - gl * gl).max(0.0);
    let minus = ((1.0 - g0) * (1.0 - g0) - gl * gl).max(0.0);
    Ok((alpha_mag - 2.0 * (plus * minus).sqrt()).max(0.0))
}

/// Largest separation L <= [n/2] with nonzero ground-state concurrence;
/// 0 when no pair is entangled.
pub fn entanglement_range(n: usize, fermions: usize, odd_af: bool) -> Result<usize> {
    let mut range = 0;
    for l in 1..=n / 2 {
        if gs_concurrence(n, fermions, l, odd_af)? > 1e-14 {
            range = l;
        }
    }
    Ok(range)
}
