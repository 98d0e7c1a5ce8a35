//! Composite Gauss-Legendre quadrature with panel-doubling refinement.

use crate::error::{Error, Result};
use once_cell::sync::Lazy;

const ORDER: usize = 32;
const MAX_PANELS_PER_SEGMENT: usize = 512;

/// Nodes and weights of the 32-point rule on [-1, 1], computed once by
/// Newton iteration on the Legendre polynomial.
static GL32: Lazy<Vec<(f64, f64)>> = Lazy::new(|| gauss_legendre(ORDER));

fn gauss_legendre(order: usize) -> Vec<(f64, f64)> {
    let n = order as f64;
    (1..=order)
        .map(|i| {
            // Tricomi-style initial guess, then Newton
            let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (n + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_and_derivative(order, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_and_derivative(order, x);
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

fn legendre_and_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=order {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = order as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn panel_sum<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        let mut local = 0.0;
        for &(x, w) in GL32.iter() {
            local += w * f(mid + half * x);
        }
        acc += half * local;
    }
    acc
}

/// Integrate `f` over the union of `segments` (consecutive breakpoints),
/// doubling panel counts per segment until the whole-integral change is below
/// `tol_rel * max(|I|, scale_floor)`.
pub fn integrate_segmented<F: Fn(f64) -> f64>(
    f: F,
    segments: &[f64],
    tol_rel: f64,
    scale_floor: f64,
) -> Result<f64> {
    assert!(segments.len() >= 2);
    let mut panels = 1usize;
    let mut prev = f64::NAN;
    while panels <= MAX_PANELS_PER_SEGMENT {
        let total: f64 = segments
            .windows(2)
            .map(|w| panel_sum(&f, w[0], w[1], panels))
            .sum();
        if !prev.is_nan() {
            let scale = total.abs().max(scale_floor);
            if (total - prev).abs() <= tol_rel * scale {
                return Ok(total);
            }
        }
        prev = total;
        panels *= 2;
    }
    Err(Error::QuadratureNoConvergence(format!(
        "tolerance {tol_rel:.1e} not reached with {MAX_PANELS_PER_SEGMENT} panels per segment"
    )))
}

/// Segment breakpoints for [0, pi], geometrically graded into a boundary
/// layer of width `layer` around `focus` when one is given.
pub fn graded_segments(focus: Option<f64>, layer: f64) -> Vec<f64> {
    let pi = std::f64::consts::PI;
    let Some(omega) = focus else {
        return vec![0.0, pi];
    };
    debug_assert!((0.0..=pi).contains(&omega));
    let mut pts = vec![0.0, pi];
    if omega > 0.0 && omega < pi {
        pts.push(omega);
    }
    // approach omega from both sides halving the distance each step
    let mut left = omega;
    while left > layer.max(1e-14) {
        left *= 0.5;
        pts.push(omega - left);
    }
    let mut right = pi - omega;
    while right > layer.max(1e-14) {
        right *= 0.5;
        pts.push(omega + right);
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_symmetric_and_normalized() {
        let nodes = &*GL32;
        assert_eq!(nodes.len(), 32);
        let wsum: f64 = nodes.iter().map(|&(_, w)| w).sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        for i in 0..16 {
            assert!((nodes[i].0 + nodes[31 - i].0).abs() < 1e-14);
            assert!((nodes[i].1 - nodes[31 - i].1).abs() < 1e-14);
        }
    }

    #[test]
    fn exact_on_high_degree_polynomials() {
        // GL32 integrates degree <= 63 exactly; x^40 on [0,1] = 1/41
        let val = integrate_segmented(|x| x.powi(40), &[0.0, 1.0], 1e-13, 0.0).unwrap();
        assert!((val - 1.0 / 41.0).abs() < 1e-15);
    }

    #[test]
    fn smooth_oscillatory_integral() {
        // int_0^pi cos(3x) e^{cos x} dx = pi * I_3(1)
        let val =
            integrate_segmented(|x| (3.0 * x).cos() * x.cos().exp(), &[0.0, std::f64::consts::PI], 1e-12, 0.0)
                .unwrap();
        let i3 = crate::special::bessel_i(3, 1.0).unwrap();
        assert!((val - std::f64::consts::PI * i3).abs() < 1e-12);
    }

    #[test]
    fn graded_segments_cover_interval() {
        let segs = graded_segments(Some(1.0), 1e-6);
        assert_eq!(segs[0], 0.0);
        assert_eq!(*segs.last().unwrap(), std::f64::consts::PI);
        assert!(segs.windows(2).all(|w| w[1] > w[0]));
        assert!(segs.contains(&1.0));
        // finest spacing near the focus reaches the layer scale
        let min_gap = segs.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        assert!(min_gap < 2e-6);
    }

    #[test]
    fn sharp_fermi_step_converges_with_grading() {
        // steep logistic step at omega_f: without grading this needs far more
        // panels than the cap allows
        let beta = 1e5;
        let omega_f = 1.1_f64;
        let f = |w: f64| 1.0 / (1.0 + (beta * (omega_f.cos() - w.cos())).exp());
        let segs = graded_segments(Some(omega_f), 1.0 / beta);
        let val = integrate_segmented(f, &segs, 1e-11, 0.0).unwrap();
        // T -> 0 limit: integral over [0, omega_f] of 1 = omega_f, plus
        // an O(1/beta) thermal correction
        assert!((val - omega_f).abs() < 1e-4);
    }
}
