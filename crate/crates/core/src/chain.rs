//! Physical chain definition: parity-sector momentum sets, the single-fermion
//! spectrum, ground-state sector identification and critical-field tables.

use crate::error::{Error, Result};

/// A cyclic XX chain instance: `n` qubits, coupling `v`, transverse field `b`.
/// Energies are measured in the same units as `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainSpec {
    n: usize,
    v: f64,
    b: f64,
}

impl ChainSpec {
    pub fn new(n: usize, v: f64, b: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidChain(format!("chain size n = {n}, need n >= 2")));
        }
        if v == 0.0 || !v.is_finite() {
            return Err(Error::InvalidChain(format!(
                "coupling v = {v}; the v = 0 chain is trivially separable"
            )));
        }
        if !b.is_finite() {
            return Err(Error::InvalidChain(format!("non-finite field b = {b}")));
        }
        Ok(ChainSpec { n, v, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Same chain at a different field.
    pub fn with_field(&self, b: f64) -> Result<Self> {
        ChainSpec::new(self.n, self.v, b)
    }

    /// Antiferromagnetic coupling on an odd ring: the only case whose
    /// observable formulas differ (degenerate ground states).
    pub fn odd_antiferro(&self) -> bool {
        self.v < 0.0 && self.n % 2 == 1
    }
}

/// Fermion-number parity sector. `Even` is sigma = +1 (half-integer momenta),
/// `Odd` is sigma = -1 (integer momenta).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn sigma(&self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// One of the four projected sectors entering the parity-projected traces:
/// parity sigma and projector power nu (`projected` <=> nu = 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectorKey {
    pub parity: Parity,
    pub projected: bool,
}

impl SectorKey {
    pub const ALL: [SectorKey; 4] = [
        SectorKey { parity: Parity::Even, projected: false },
        SectorKey { parity: Parity::Even, projected: true },
        SectorKey { parity: Parity::Odd, projected: false },
        SectorKey { parity: Parity::Odd, projected: true },
    ];

    /// Sign sigma^nu carried by this sector in the parity-projected sum.
    pub fn combination_sign(&self) -> i8 {
        if self.projected {
            self.parity.sigma()
        } else {
            1
        }
    }
}

/// Momentum index stored as a doubled integer so half-integers stay exact:
/// `Momentum(m)` represents k = m/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Momentum(pub i32);

impl Momentum {
    /// The angle omega_k = 2 pi k / n.
    pub fn angle(&self, n: usize) -> f64 {
        std::f64::consts::PI * f64::from(self.0) / n as f64
    }
}

/// The n momentum indices of a parity sector, ascending. Half-integers for
/// the even-parity sector, integers for the odd one.
pub fn momentum_set(n: usize, parity: Parity) -> Vec<Momentum> {
    let offset = if parity == Parity::Even { 1 } else { 0 };
    let start = -2 * (n as i32 / 2) + offset;
    (0..n as i32).map(|i| Momentum(start + 2 * i)).collect()
}

/// Single-fermion energy lambda_k = b - v cos(omega_k).
pub fn single_fermion_energy(spec: &ChainSpec, k: Momentum) -> f64 {
    spec.b() - spec.v() * k.angle(spec.n()).cos()
}

/// All lambda_k of one parity sector, in momentum order.
pub fn sector_energies(spec: &ChainSpec, parity: Parity) -> Vec<f64> {
    momentum_set(spec.n(), parity)
        .into_iter()
        .map(|k| single_fermion_energy(spec, k))
        .collect()
}

/// Which of the two critical-field formulas applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Ferromagnetic coupling, or antiferromagnetic on an even ring.
    FerroOrEven,
    /// Antiferromagnetic coupling on an odd ring (degenerate ground states).
    OddAntiferro,
}

/// The n ground-state transition fields b_1 > b_2 > ... > b_n.
#[derive(Debug, Clone)]
pub struct CriticalFieldTable {
    fields: Vec<f64>,
    branch: Branch,
}

impl CriticalFieldTable {
    pub fn fields(&self) -> &[f64] {
        &self.fields
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// b_N for N = 1..=n.
    pub fn field(&self, n_transition: usize) -> f64 {
        self.fields[n_transition - 1]
    }
}

/// Critical fields for the chain's coupling branch. For v > 0 (and v < 0 on
/// even rings, whose spectrum is sign-symmetric in v) these are
/// b_N = |v| cos[(N - 1/2) pi / n] / cos[pi/(2n)]; the odd antiferromagnetic
/// branch carries an extra factor cos(pi/n).
pub fn critical_fields(spec: &ChainSpec) -> CriticalFieldTable {
    let n = spec.n();
    let vmag = spec.v().abs();
    let branch = if spec.odd_antiferro() { Branch::OddAntiferro } else { Branch::FerroOrEven };
    let shrink = match branch {
        Branch::FerroOrEven => 1.0,
        Branch::OddAntiferro => (std::f64::consts::PI / n as f64).cos(),
    };
    let half_angle = std::f64::consts::PI / (2.0 * n as f64);
    let fields = (1..=n)
        .map(|big_n| {
            let angle = (big_n as f64 - 0.5) * std::f64::consts::PI / n as f64;
            vmag * shrink * angle.cos() / half_angle.cos()
        })
        .collect();
    CriticalFieldTable { fields, branch }
}

/// Ground-state fermion sector at the chain's field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundSector {
    /// Fermion number N, 0..=n.
    pub fermions: usize,
    /// True when the ground manifold is two-fold degenerate
    /// (odd antiferromagnetic branch, 0 < N < n).
    pub degenerate: bool,
}

/// Locate N with b_{N+1} < b < b_N (conventions b_0 = +inf, b_{n+1} = -inf).
/// Errors with `LevelCrossing` when b sits within 1e-12 |v| of a transition.
pub fn ground_sector(spec: &ChainSpec) -> Result<GroundSector> {
    let table = critical_fields(spec);
    let tol = 1e-12 * spec.v().abs();
    let b = spec.b();
    for &bc in table.fields() {
        if (b - bc).abs() < tol {
            return Err(Error::LevelCrossing { field: b });
        }
    }
    let fermions = table.fields().iter().filter(|&&bc| b < bc).count();
    let degenerate =
        table.branch() == Branch::OddAntiferro && fermions >= 1 && fermions <= spec.n() - 1;
    Ok(GroundSector { fermions, degenerate })
}

/// Every many-body energy of the chain: occupation sums over each parity
/// sector restricted to occupation patterns of matching parity. Returns all
/// 2^n energies. Intended for cross-checks at small n.
pub fn enumerate_spectrum(spec: &ChainSpec) -> Result<Vec<f64>> {
    let n = spec.n();
    if n > 20 {
        return Err(Error::SizeLimit(format!("spectrum enumeration capped at n = 20, got {n}")));
    }
    let mut energies = Vec::with_capacity(1usize << n);
    for parity in Parity::BOTH {
        let lambdas = sector_energies(spec, parity);
        let want_odd = parity == Parity::Odd;
        for occ in 0u32..(1u32 << n) {
            if (occ.count_ones() % 2 == 1) != want_odd {
                continue;
            }
            let e: f64 = lambdas
                .iter()
                .enumerate()
                .map(|(i, &l)| if occ & (1 << i) != 0 { 0.5 * l } else { -0.5 * l })
                .sum();
            energies.push(e);
        }
    }
    Ok(energies)
}
