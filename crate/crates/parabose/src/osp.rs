//! The osp(1|2) representation oracle.
//!
//! Positive-discrete-series representations (μ, ε) act on basis vectors
//! |n, μ, ε⟩ by
//!
//! ```text
//! J₀|n⟩ = (n + μ + 1/2)|n⟩        R|n⟩  = ε(−1)ⁿ|n⟩
//! J₊|n⟩ = √[n+1]_μ |n+1⟩          J₋|n⟩ = √[n]_μ |n−1⟩
//! ```
//!
//! and the tensor product (μ₁,ε₁)⊗(μ₂,ε₂) carries the twisted coproduct
//! Δ(J±) = J± ⊗ R + 1 ⊗ J±, Δ(R) = R ⊗ R. Coupled states |n₁₂, j⟩ are built
//! with no closed form anywhere: the lowest-weight vector of the j-th summand
//! is solved from the two-term recursion that Δ(J₋)·v = 0 forces along the
//! level diagonal, and the rest of the irrep is generated by applying Δ(J₊)
//! and normalizing. The resulting [`CgcTable`] is the numerical authority the
//! closed forms in [`crate::cgc`] and [`crate::genfun`] are verified against.
//!
//! Phase convention: every stored row has a positive coefficient at n₁ = 0
//! (raising preserves this automatically, since the twisted term cannot reach
//! n₁ = 0). Magnitudes are convention-free; signs are only meaningful
//! relative to this choice.

use crate::arith::{mu_number, rat, to_f64, Rational};
use num::Signed;

/// Positive-discrete-series label (μ ≥ 0, ε = ±1).
#[derive(Debug, Clone, PartialEq)]
pub struct RepLabel {
    pub mu: Rational,
    pub eps: i8,
}

impl RepLabel {
    pub fn new(mu: Rational, eps: i8) -> Self {
        assert!(!mu.is_negative(), "representation label requires mu >= 0");
        assert!(eps == 1 || eps == -1, "epsilon must be +1 or -1");
        Self { mu, eps }
    }
}

/// The pair of factors of a tensor product (μ₁,ε₁)⊗(μ₂,ε₂).
#[derive(Debug, Clone, PartialEq)]
pub struct RepPair {
    pub first: RepLabel,
    pub second: RepLabel,
}

impl RepPair {
    pub fn new(mu1: Rational, eps1: i8, mu2: Rational, eps2: i8) -> Self {
        Self {
            first: RepLabel::new(mu1, eps1),
            second: RepLabel::new(mu2, eps2),
        }
    }

    /// μ₁₂ = μ₁ + μ₂ + 1/2 + j of the j-th summand.
    pub fn mu12(&self, j: u32) -> Rational {
        &self.first.mu + &self.second.mu + rat(1, 2) + crate::arith::rat_u(j)
    }

    /// ε₁₂ = (−1)^j ε₁ε₂ of the j-th summand.
    pub fn eps12(&self, j: u32) -> i8 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        sign * self.first.eps * self.second.eps
    }
}

/// Algebra generators; `Casimir` is (J₊J₋ − J₀ + 1/2)R.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    J0,
    JPlus,
    JMinus,
    R,
    Casimir,
}

/// Action of a generator on |n, μ, ε⟩ as a list of (coefficient, n′) terms;
/// at most one term for this algebra, and empty for J₋|0⟩.
pub fn rep_apply(generator: Generator, n: u32, rep: &RepLabel) -> Vec<(f64, u32)> {
    match generator {
        Generator::J0 => vec![(to_f64(&(crate::arith::rat_u(n) + &rep.mu + rat(1, 2))), n)],
        Generator::R => {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            vec![(f64::from(rep.eps) * sign, n)]
        }
        Generator::JPlus => vec![(to_f64(&mu_number(n + 1, &rep.mu)).sqrt(), n + 1)],
        Generator::JMinus => {
            if n == 0 {
                vec![]
            } else {
                vec![(to_f64(&mu_number(n, &rep.mu)).sqrt(), n - 1)]
            }
        }
        Generator::Casimir => vec![(-f64::from(rep.eps) * to_f64(&rep.mu), n)],
    }
}

/// A vector in the tensor product supported on one Δ(J₀) level E:
/// coefficient `coeffs[n₁]` multiplies |n₁⟩⊗|E−n₁⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorState {
    pub level: u32,
    pub coeffs: Vec<f64>,
}

impl TensorState {
    pub fn zero(level: u32) -> Self {
        Self {
            level,
            coeffs: vec![0.0; level as usize + 1],
        }
    }

    /// Basis vector |n₁⟩⊗|n₂⟩.
    pub fn basis(n1: u32, n2: u32) -> Self {
        let mut s = Self::zero(n1 + n2);
        s.coeffs[n1 as usize] = 1.0;
        s
    }

    pub fn coeff(&self, n1: u32, n2: u32) -> f64 {
        if n1 + n2 != self.level {
            return 0.0;
        }
        self.coeffs[n1 as usize]
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        if self.level != other.level {
            return 0.0;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            level: self.level,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level);
        Self {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

/// Δ(g) on a level-homogeneous state. Δ(J±) move level E to E±1 and carry the
/// ε₂(−1)^{n₂} twist on the first-factor term; Δ(J₀), Δ(R), Δ(C) preserve E.
pub fn coproduct_apply(generator: Generator, state: &TensorState, reps: &RepPair) -> TensorState {
    let e = state.level;
    let (mu1, mu2) = (&reps.first.mu, &reps.second.mu);
    let eps2 = f64::from(reps.second.eps);
    match generator {
        Generator::J0 => {
            let shift = to_f64(&(mu1 + mu2)) + 1.0;
            state.scaled(f64::from(e) + shift)
        }
        Generator::R => {
            let eps12 = f64::from(reps.first.eps) * eps2;
            let sign = if e % 2 == 0 { 1.0 } else { -1.0 };
            state.scaled(eps12 * sign)
        }
        Generator::JPlus => {
            let mut out = TensorState::zero(e + 1);
            for n1 in 0..=e {
                let c = state.coeffs[n1 as usize];
                if c == 0.0 {
                    continue;
                }
                let n2 = e - n1;
                let twist = eps2 * if n2 % 2 == 0 { 1.0 } else { -1.0 };
                out.coeffs[n1 as usize + 1] += c * twist * to_f64(&mu_number(n1 + 1, mu1)).sqrt();
                out.coeffs[n1 as usize] += c * to_f64(&mu_number(n2 + 1, mu2)).sqrt();
            }
            out
        }
        Generator::JMinus => {
            if e == 0 {
                return TensorState::zero(0);
            }
            let mut out = TensorState::zero(e - 1);
            for n1 in 0..=e {
                let c = state.coeffs[n1 as usize];
                if c == 0.0 {
                    continue;
                }
                let n2 = e - n1;
                let twist = eps2 * if n2 % 2 == 0 { 1.0 } else { -1.0 };
                if n1 > 0 {
                    out.coeffs[n1 as usize - 1] += c * twist * to_f64(&mu_number(n1, mu1)).sqrt();
                }
                if n2 > 0 {
                    out.coeffs[n1 as usize] += c * to_f64(&mu_number(n2, mu2)).sqrt();
                }
            }
            out
        }
        Generator::Casimir => {
            // Δ(C) = (Δ(J₊)Δ(J₋) − Δ(J₀) + 1/2)Δ(R)
            let rd = coproduct_apply(Generator::R, state, reps);
            let jpjm = if e == 0 {
                TensorState::zero(0)
            } else {
                let jm = coproduct_apply(Generator::JMinus, &rd, reps);
                coproduct_apply(Generator::JPlus, &jm, reps)
            };
            let j0 = coproduct_apply(Generator::J0, &rd, reps);
            jpjm.add(&j0.scaled(-1.0)).add(&rd.scaled(0.5))
        }
    }
}

/// Unit-norm lowest-weight vector of the j-th irreducible summand: the state
/// at level E = j annihilated by Δ(J₋), solved from the explicit two-term
/// recursion along the level diagonal and normalized with a positive
/// coefficient at (0, j).
pub fn lowest_weight(j: u32, reps: &RepPair) -> TensorState {
    let mut coeffs = vec![0.0_f64; j as usize + 1];
    coeffs[0] = 1.0;
    let eps2 = f64::from(reps.second.eps);
    for n in 0..j {
        // c(n+1) = −(−1)^{j−n−1} ε₂ √([j−n]_{μ₂}/[n+1]_{μ₁}) c(n)
        let sign = if (j - n - 1) % 2 == 0 { 1.0 } else { -1.0 };
        let ratio = to_f64(&mu_number(j - n, &reps.second.mu))
            / to_f64(&mu_number(n + 1, &reps.first.mu));
        coeffs[n as usize + 1] = -sign * eps2 * ratio.sqrt() * coeffs[n as usize];
    }
    let mut state = TensorState { level: j, coeffs };
    state = state.scaled(1.0 / state.norm());
    let residual = coproduct_apply(Generator::JMinus, &state, reps).max_abs();
    assert!(
        residual < 1e-12,
        "lowest-weight solve failed to annihilate the lowering operator: residual {residual:e}"
    );
    state
}

/// Brute-force null-space solve of Δ(J₋) at level j (Gaussian elimination),
/// kept as an independent cross-check of `lowest_weight`.
pub fn lowest_weight_nullspace(j: u32, reps: &RepPair) -> TensorState {
    if j == 0 {
        return TensorState::basis(0, 0);
    }
    let rows = j as usize; // image level j−1 has j basis entries
    let cols = j as usize + 1;
    let mut m = vec![vec![0.0_f64; cols]; rows];
    for n1 in 0..=j {
        let basis = TensorState::basis(n1, j - n1);
        let image = coproduct_apply(Generator::JMinus, &basis, reps);
        for (r, v) in image.coeffs.iter().enumerate() {
            m[r][n1 as usize] = *v;
        }
    }
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let p = (row..rows)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap());
        let Some(p) = p else { break };
        if m[p][col].abs() < 1e-13 {
            continue;
        }
        m.swap(row, p);
        let inv = 1.0 / m[row][col];
        for entry in &mut m[row][col..] {
            *entry *= inv;
        }
        for r in 0..rows {
            if r != row {
                let f = m[r][col];
                for c in col..cols {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let free_col = (0..cols)
        .find(|c| !pivot_cols.contains(c))
        .expect("null space is one-dimensional");
    let mut coeffs = vec![0.0; cols];
    coeffs[free_col] = 1.0;
    for (r, &pc) in pivot_cols.iter().enumerate() {
        coeffs[pc] = -m[r][free_col];
    }
    let mut state = TensorState { level: j, coeffs };
    let sign = if state.coeffs[0] < 0.0 { -1.0 } else { 1.0 };
    state = state.scaled(sign / state.norm());
    state
}

/// Clebsch-Gordan tables per level E = n₁ + n₂ = n₁₂ + j: `rows[j]` of level
/// E holds ⟨n₁, E−n₁ | n₁₂ = E−j, j⟩ indexed by n₁.
#[derive(Debug, Clone)]
pub struct CgcTable {
    pub reps: RepPair,
    pub phase_convention: &'static str,
    levels: Vec<Vec<Vec<f64>>>,
}

pub const ORACLE_PHASE_CONVENTION: &str =
    "coefficient at n1 = 0 positive real in every coupled vector";

impl CgcTable {
    pub fn from_levels(
        reps: RepPair,
        phase_convention: &'static str,
        levels: Vec<Vec<Vec<f64>>>,
    ) -> Self {
        Self {
            reps,
            phase_convention,
            levels,
        }
    }

    pub fn max_level(&self) -> u32 {
        self.levels.len() as u32 - 1
    }

    /// The (E+1)×(E+1) change-of-basis matrix at level E; row index j,
    /// column index n₁.
    pub fn level_matrix(&self, level: u32) -> &Vec<Vec<f64>> {
        &self.levels[level as usize]
    }

    /// ⟨n₁, n₂ | n₁₂, j⟩; zero when n₁ + n₂ ≠ n₁₂ + j.
    pub fn entry(&self, n1: u32, n2: u32, n12: u32, j: u32) -> f64 {
        if n1 + n2 != n12 + j {
            return 0.0;
        }
        let level = (n1 + n2) as usize;
        self.levels[level][j as usize][n1 as usize]
    }

    /// Row of the coupled vector |n₁₂, j⟩ over n₁ = 0..=n₁₂+j.
    pub fn row(&self, n12: u32, j: u32) -> &[f64] {
        &self.levels[(n12 + j) as usize][j as usize]
    }

    /// Max |MᵀM − I| entry at one level.
    pub fn unitarity_residual(&self, level: u32) -> f64 {
        let m = self.level_matrix(level);
        let dim = m.len();
        let mut worst = 0.0_f64;
        for a in 0..dim {
            for b in 0..dim {
                let dot: f64 = (0..dim).map(|c| m[a][c] * m[b][c]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Builds the oracle table up to level `emax`: for each j ≤ emax, solve the
/// lowest weight and raise with Δ(J₊)/√[n₁₂]_{μ₁₂} up to level emax.
pub fn oracle_cgc(reps: &RepPair, emax: u32) -> CgcTable {
    let mut levels: Vec<Vec<Vec<f64>>> = (0..=emax)
        .map(|e| vec![Vec::new(); e as usize + 1])
        .collect();
    for j in 0..=emax {
        let mu12 = reps.mu12(j);
        let mut state = lowest_weight(j, reps);
        levels[j as usize][j as usize] = state.coeffs.clone();
        for n12 in 1..=(emax - j) {
            let raised = coproduct_apply(Generator::JPlus, &state, reps);
            state = raised.scaled(1.0 / to_f64(&mu_number(n12, &mu12)).sqrt());
            debug_assert!(state.coeffs[0] > 0.0);
            levels[(n12 + j) as usize][j as usize] = state.coeffs.clone();
        }
    }
    CgcTable {
        reps: reps.clone(),
        phase_convention: ORACLE_PHASE_CONVENTION,
        levels,
    }
}
