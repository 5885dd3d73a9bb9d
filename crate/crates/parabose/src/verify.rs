//! Verification sweeps: every cross-route identity in the crate, run over
//! parameter grids, with residuals against pinned tolerances and an erratum
//! ledger of closed-form constants that disagree with unitarity or the
//! oracle.
//!
//! Suites: `orthogonality` (exact dual −1 Hahn data), `unitarity` (oracle
//! tables and the closed-form/oracle match), `genfun` (the four
//! generating-function parity cases), `su11` (the untwisted analogue),
//! `wavefun` (the position-realization route), and `all`. Parameter points
//! are independent, so sweeps parallelize with rayon; set the
//! `PARABOSE_THREADS` environment variable (honored by the command-line
//! front end) to cap the pool.

use crate::arith::{rat, to_f64, Rational};
use crate::cgc::{closed_cgc_table, vacuum_norm_report};
use crate::genfun::{
    hypergeom_sum, hypergeom_sum_direct, odd_prefactor_report, verify_genfun, GenFunCase,
};
use crate::orthopoly::{
    display_hyper_mismatch, dm1h_data, dm1h_u, dual_m1_hahn, dual_m1_hahn_hyper,
};
use crate::osp::{coproduct_apply, oracle_cgc, Generator, RepPair, TensorState};
use crate::report::{CheckResult, ErratumFinding};
use crate::su11::{su11_oracle_cgc, su11_vacuum_norm_report, su11_verify, Su11Pair};
use crate::wavefun::{
    angular_genfun_coeffs, decomposition_residual, psi1d, realize_apply, verify_angular_genfun,
};
use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

/// Parameter grids for a sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub mu_grid: Vec<Rational>,
    pub eps_grid: Vec<(i8, i8)>,
    pub max_level: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            mu_grid: vec![rat(1, 4), rat(1, 2), rat(3, 4), rat(3, 2)],
            eps_grid: vec![(1, 1), (1, -1), (-1, 1), (-1, -1)],
            max_level: 8,
        }
    }
}

impl SweepConfig {
    pub fn with_max_level(mut self, max_level: u32) -> Self {
        self.max_level = max_level;
        self
    }

    fn rep_pairs(&self) -> Vec<RepPair> {
        let mut pairs = Vec::new();
        for mu1 in &self.mu_grid {
            for mu2 in &self.mu_grid {
                for &(e1, e2) in &self.eps_grid {
                    pairs.push(RepPair::new(mu1.clone(), e1, mu2.clone(), e2));
                }
            }
        }
        pairs
    }

    fn positive_pairs(&self) -> Vec<RepPair> {
        let mut pairs = Vec::new();
        for mu1 in &self.mu_grid {
            for mu2 in &self.mu_grid {
                pairs.push(RepPair::new(mu1.clone(), 1, mu2.clone(), 1));
            }
        }
        pairs
    }
}

/// Result of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub findings: Vec<ErratumFinding>,
    pub pass: bool,
}

impl SuiteOutcome {
    fn new(suite: &str, checks: Vec<CheckResult>, findings: Vec<ErratumFinding>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self {
            suite: suite.to_string(),
            checks,
            findings,
            pass,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orthogonality,
    Unitarity,
    GenFun,
    Su11,
    WaveFun,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "orthogonality" => Self::Orthogonality,
            "unitarity" => Self::Unitarity,
            "genfun" => Self::GenFun,
            "su11" => Self::Su11,
            "wavefun" => Self::WaveFun,
            "all" => Self::All,
            _ => return None,
        })
    }
}

/// Runs one suite (or all of them) on a configuration.
pub fn run_suite(suite: Suite, config: &SweepConfig) -> Vec<SuiteOutcome> {
    match suite {
        Suite::Orthogonality => vec![orthogonality_suite(config)],
        Suite::Unitarity => vec![unitarity_suite(config)],
        Suite::GenFun => vec![genfun_suite(config)],
        Suite::Su11 => vec![su11_suite(config)],
        Suite::WaveFun => vec![wavefun_suite(config)],
        Suite::All => vec![
            orthogonality_suite(config),
            unitarity_suite(config),
            genfun_suite(config),
            su11_suite(config),
            wavefun_suite(config),
        ],
    }
}

/// Exact dual −1 Hahn orthogonality and the recurrence/₃F₂ agreement.
pub fn orthogonality_suite(config: &SweepConfig) -> SuiteOutcome {
    let params: Vec<(Rational, Rational)> = config
        .mu_grid
        .iter()
        .flat_map(|eta| config.mu_grid.iter().map(move |xi| (eta.clone(), xi.clone())))
        .collect();
    let results: Vec<(bool, bool)> = params
        .par_iter()
        .map(|(eta, xi)| {
            let mut ortho_ok = true;
            let mut hyper_ok = true;
            for big_n in 0..=config.max_level {
                let data = dm1h_data(eta, xi, big_n).expect("admissible parameters");
                let polys: Vec<_> = (0..=big_n)
                    .map(|n| dual_m1_hahn(n, eta, xi, big_n))
                    .collect();
                let values: Vec<Vec<Rational>> = polys
                    .iter()
                    .map(|p| data.grid.iter().map(|y| p.eval(y)).collect())
                    .collect();
                for n in 0..=big_n as usize {
                    for m in 0..=n {
                        let s: Rational = (0..data.grid.len())
                            .map(|g| &data.weights[g] * &values[n][g] * &values[m][g])
                            .sum();
                        let expected = if n == m {
                            let uprod: Rational = (1..=n as u32)
                                .map(|i| dm1h_u(i, eta, xi, big_n))
                                .product();
                            &data.kappa0 * uprod
                        } else {
                            Rational::zero()
                        };
                        if s != expected {
                            ortho_ok = false;
                        }
                    }
                }
                for n in 0..=big_n {
                    for (g, y) in data.grid.iter().enumerate() {
                        match dual_m1_hahn_hyper(n, y, eta, xi, big_n) {
                            Ok(v) => {
                                if v != values[n as usize][g] {
                                    hyper_ok = false;
                                }
                            }
                            Err(_) => hyper_ok = false,
                        }
                    }
                }
            }
            (ortho_ok, hyper_ok)
        })
        .collect();
    let ortho_ok = results.iter().all(|r| r.0);
    let hyper_ok = results.iter().all(|r| r.1);

    let mut findings = Vec::new();
    {
        // printed explicit-form parameters vs the recurrence, at a probe point
        let (eta, xi, big_n, n) = (rat(1, 4), rat(1, 2), 3u32, 2u32);
        let data = dm1h_data(&eta, &xi, big_n).unwrap();
        let (printed, forced) = display_hyper_mismatch(n, &data.grid[0], &eta, &xi, big_n);
        findings.push(ErratumFinding {
            location: format!(
                "explicit 3F2 form of R_{n}(y_0; eta={eta}, xi={xi}, N={big_n}): printed prefactor/denominator parameters vs recurrence"
            ),
            expected: printed.map_or("evaluation error".into(), |v| v.to_string()),
            observed: forced.to_string(),
            absorbed_constant: None,
        });
    }

    SuiteOutcome::new(
        "orthogonality",
        vec![
            CheckResult::exact("dual -1 Hahn orthogonality (rational)", ortho_ok),
            CheckResult::exact("recurrence vs 3F2 evaluation on the grid (rational)", hyper_ok),
        ],
        findings,
    )
}

/// Oracle unitarity, closed-form unitarity and the row-constant match.
pub fn unitarity_suite(config: &SweepConfig) -> SuiteOutcome {
    let oracle_residual = config
        .rep_pairs()
        .par_iter()
        .map(|reps| {
            let table = oracle_cgc(reps, config.max_level);
            (0..=config.max_level)
                .map(|e| table.unitarity_residual(e))
                .fold(0.0_f64, f64::max)
        })
        .reduce(|| 0.0, f64::max);

    let pairs = config.positive_pairs();
    let closed_stats: Vec<Result<(f64, f64, f64), String>> = pairs
        .par_iter()
        .map(|reps| {
            // a negative weight under the square root is a domain finding,
            // not a panic
            let closed = match closed_cgc_table(reps, config.max_level) {
                Ok(t) => t,
                Err(e) => return Err(e.to_string()),
            };
            let oracle = oracle_cgc(reps, config.max_level);
            let mut closed_unitarity = 0.0_f64;
            let mut constant_drift = 0.0_f64;
            let mut constant_off_one = 0.0_f64;
            for e in 0..=config.max_level {
                closed_unitarity = closed_unitarity.max(closed.unitarity_residual(e));
                for j in 0..=e {
                    let crow = closed.row(e - j, j);
                    let orow = oracle.row(e - j, j);
                    let mut constant: Option<f64> = None;
                    for (a, b) in crow.iter().zip(orow) {
                        if b.abs() > 1e-9 {
                            let ratio = a / b;
                            match constant {
                                None => constant = Some(ratio),
                                Some(c) => constant_drift = constant_drift.max((ratio - c).abs()),
                            }
                        } else {
                            constant_drift = constant_drift.max(a.abs());
                        }
                    }
                    if let Some(c) = constant {
                        constant_off_one = constant_off_one.max((c.abs() - 1.0).abs());
                    }
                }
            }
            Ok((closed_unitarity, constant_drift, constant_off_one))
        })
        .collect();
    let ok_stats: Vec<&(f64, f64, f64)> = closed_stats.iter().filter_map(|r| r.as_ref().ok()).collect();
    let domain_errors: Vec<&String> = closed_stats.iter().filter_map(|r| r.as_ref().err()).collect();
    let closed_ok = domain_errors.is_empty();
    let closed_unitarity = ok_stats.iter().map(|s| s.0).fold(0.0, f64::max);
    let constant_drift = ok_stats.iter().map(|s| s.1).fold(0.0, f64::max);
    let constant_off_one = ok_stats.iter().map(|s| s.2).fold(0.0, f64::max);

    let mut findings = vec![
        ErratumFinding {
            location: "closed-form coefficient grid index at even levels N".into(),
            expected: "w_j, y_j read at grid index j".into(),
            observed: "grid index N - j carries the eigenvalue 2*mu12(j) = 2mu1+2mu2+2j+1".into(),
            absorbed_constant: None,
        },
        ErratumFinding {
            location: "closed-form coefficient column signs".into(),
            expected: "sign of 2^{-n1} sqrt(...) R_{n1}(y_j) as printed".into(),
            observed: "extra factor (-1)^{n1 N - n1(n1+1)/2} required to match the coproduct-built coefficients".into(),
            absorbed_constant: None,
        },
    ];
    for message in &domain_errors {
        findings.push(ErratumFinding {
            location: "closed-form table construction".into(),
            expected: "non-negative orthogonality weights".into(),
            observed: (*message).clone(),
            absorbed_constant: None,
        });
    }

    SuiteOutcome::new(
        "unitarity",
        vec![
            CheckResult::float("oracle table unitarity", oracle_residual, 1e-10),
            CheckResult::exact("closed-form weights non-negative", closed_ok),
            CheckResult::float("closed-form table unitarity", closed_unitarity, 1e-9),
            CheckResult::float(
                "closed/oracle ratio constant across each coupled vector",
                constant_drift,
                1e-9,
            ),
            CheckResult::float("closed/oracle constants of unit magnitude", constant_off_one, 1e-9),
        ],
        findings,
    )
}

/// The four generating-function parity cases against the oracle.
pub fn genfun_suite(config: &SweepConfig) -> SuiteOutcome {
    let stats: Vec<(f64, f64, bool)> = config
        .rep_pairs()
        .par_iter()
        .map(|reps| {
            let table = oracle_cgc(reps, config.max_level);
            let mut residual = 0.0_f64;
            let mut constant_off = 0.0_f64;
            let mut bracket_ok = true;
            for n12 in 0..=config.max_level {
                for j in 0..=(config.max_level - n12) {
                    let case = GenFunCase {
                        n12,
                        j,
                        reps: reps.clone(),
                    };
                    let check = verify_genfun(&case, &table);
                    residual = residual.max(check.residual);
                    constant_off = constant_off.max((check.absorbed_constant.abs() - 1.0).abs());
                    if n12 <= 1 && hypergeom_sum(&case) != hypergeom_sum_direct(&case) {
                        bracket_ok = false;
                    }
                }
            }
            (residual, constant_off, bracket_ok)
        })
        .collect();
    let residual = stats.iter().map(|s| s.0).fold(0.0, f64::max);
    let constant_off = stats.iter().map(|s| s.1).fold(0.0, f64::max);
    let bracket_ok = stats.iter().all(|s| s.2);

    let mut findings = Vec::new();
    // vacuum anchor: closed product form vs unitarity (the j = 1 probe first)
    for (j, mu1, mu2) in [
        (1u32, rat(1, 2), rat(1, 2)),
        (2, rat(1, 2), rat(1, 2)),
        (1, rat(1, 4), rat(3, 2)),
    ] {
        let reps = RepPair::new(mu1.clone(), 1, mu2.clone(), 1);
        let (anchor, closed) = vacuum_norm_report(j, &reps);
        if anchor != closed {
            findings.push(ErratumFinding {
                location: format!(
                    "|<0,j|0,j>|^2 closed product form at j={j}, mu1={mu1}, mu2={mu2}"
                ),
                expected: closed.to_string(),
                observed: anchor.to_string(),
                absorbed_constant: Some(to_f64(&(&closed / &anchor))),
            });
        }
    }
    // odd-level prefactor of the closed generating function
    {
        let case = GenFunCase {
            n12: 3,
            j: 1,
            reps: RepPair::new(rat(1, 4), 1, rat(3, 4), 1),
        };
        if let Some((printed, corrected)) = odd_prefactor_report(&case) {
            findings.push(ErratumFinding {
                location: "odd-level generating-function prefactor at n12=3, j=1, mu=(1/4,3/4)"
                    .into(),
                expected: format!("1/sqrt([n12-1]![1]) = {printed}"),
                observed: format!("1/sqrt([n12]!) = {corrected}"),
                absorbed_constant: Some(printed / corrected),
            });
        }
    }
    // first-excited closed form at its n = 0 boundary
    {
        let reps = RepPair::new(rat(1, 2), 1, rat(3, 4), 1);
        let lit = crate::cgc::first_cgc_literal(0, 2, &reps);
        let op = crate::cgc::first_cgc(0, 2, &reps);
        findings.push(ErratumFinding {
            location: "first-excited coefficient <0, 1+j | 1, j> at j=2, mu=(1/2,3/4): falling-product boundary".into(),
            expected: format!("literal bracket evaluation {lit}"),
            observed: format!("ladder route {op}"),
            absorbed_constant: Some(lit / op),
        });
    }

    SuiteOutcome::new(
        "genfun",
        vec![
            CheckResult::float("generating-function coefficient residual", residual, 1e-10),
            CheckResult::float("absorbed constants of unit magnitude", constant_off, 1e-9),
            CheckResult::exact("bracket closed form vs direct sum (rational)", bracket_ok),
        ],
        findings,
    )
}

/// su(1,1): oracle, vacuum norms, generating function.
pub fn su11_suite(config: &SweepConfig) -> SuiteOutcome {
    let l_grid = [rat(1, 2), rat(1, 1), rat(3, 2)];
    let bound = config.max_level;
    let pairs: Vec<Su11Pair> = l_grid
        .iter()
        .flat_map(|l1| l_grid.iter().map(move |l2| Su11Pair::new(l1.clone(), l2.clone())))
        .collect();
    let stats: Vec<(f64, f64, bool)> = pairs
        .par_iter()
        .map(|pair| {
            let table = su11_oracle_cgc(pair, 2 * bound);
            let mut residual = 0.0_f64;
            let mut unitarity = 0.0_f64;
            for e in 0..=2 * bound {
                unitarity = unitarity.max(table.unitarity_residual(e));
            }
            for k in 0..=bound {
                for m12 in 0..=bound {
                    residual = residual.max(su11_verify(k, m12, &table));
                }
            }
            // vacuum norm must invert the unitarity sum exactly
            let mut norm_ok = true;
            for k in 0..=bound {
                let total: Rational = (0..=k)
                    .map(|m| {
                        crate::arith::binomial(k, m)
                            * crate::arith::pochhammer(&(&pair.l2 + &pair.l2), k)
                            / (crate::arith::pochhammer(&(&pair.l1 + &pair.l1), m)
                                * crate::arith::pochhammer(&(&pair.l2 + &pair.l2), k - m))
                    })
                    .sum();
                if total * crate::su11::su11_vacuum_norm_sq(k, pair)
                    != Rational::from_integer(1.into())
                {
                    norm_ok = false;
                }
            }
            (residual, unitarity, norm_ok)
        })
        .collect();
    let residual = stats.iter().map(|s| s.0).fold(0.0, f64::max);
    let unitarity = stats.iter().map(|s| s.1).fold(0.0, f64::max);
    let norm_ok = stats.iter().all(|s| s.2);

    let mut findings = Vec::new();
    {
        let pair = Su11Pair::new(rat(1, 2), rat(1, 2));
        let (anchor, printed) = su11_vacuum_norm_report(2, &pair);
        if anchor != printed {
            findings.push(ErratumFinding {
                location: "su(1,1) vacuum norm |<0,l1,k,l2|0,l12>|^2 at k=2, l1=l2=1/2".into(),
                expected: printed.to_string(),
                observed: anchor.to_string(),
                absorbed_constant: Some(to_f64(&(&printed / &anchor))),
            });
        }
    }

    SuiteOutcome::new(
        "su11",
        vec![
            CheckResult::float("su(1,1) generating-function residual", residual, 1e-10),
            CheckResult::float("su(1,1) oracle unitarity", unitarity, 1e-10),
            CheckResult::exact("su(1,1) vacuum norm inverts the unitarity sum (rational)", norm_ok),
        ],
        findings,
    )
}

/// Position-realization route: ladders, eigenvalues, decomposition, angular
/// generating functions and their concordance with the coherent-state route.
pub fn wavefun_suite(config: &SweepConfig) -> SuiteOutcome {
    let pairs = config.positive_pairs();
    let level = config.max_level.min(8);
    let stats: Vec<(f64, f64, f64, f64)> = pairs
        .par_iter()
        .map(|reps| {
            let (mu1, mu2) = (&reps.first.mu, &reps.second.mu);
            let table = oracle_cgc(reps, level);
            let mut decomposition = 0.0_f64;
            let mut eigen = 0.0_f64;
            let mut angular = 0.0_f64;
            let mut concord = 0.0_f64;
            for n12 in 0..=level {
                for j in 0..=(level - n12) {
                    decomposition = decomposition.max(decomposition_residual(n12, j, &table));
                    let psi = crate::wavefun::coupled_psi(n12, j, mu1, mu2);
                    let scale = psi.poly.max_abs_coeff().max(1.0);
                    let h = psi.hamiltonian();
                    let ev = f64::from(n12) + to_f64(&reps.mu12(j)) + 0.5;
                    eigen = eigen
                        .max(h.poly.sub(&psi.poly.scale(&ev)).max_abs_coeff() / scale);
                    let c = psi.casimir();
                    let ev = -f64::from(reps.eps12(j)) * to_f64(&reps.mu12(j));
                    eigen = eigen
                        .max(c.poly.sub(&psi.poly.scale(&ev)).max_abs_coeff() / scale);
                    angular = angular.max(verify_angular_genfun(n12, j, &table).residual);
                    // proportionality between the two closed forms
                    let av = angular_genfun_coeffs(n12, j, mu1, mu2);
                    let case = GenFunCase {
                        n12,
                        j,
                        reps: RepPair::new(mu1.clone(), 1, mu2.clone(), 1),
                    };
                    let cv = crate::genfun::genfun_rhs_coeffs(&case);
                    let mut constant: Option<f64> = None;
                    for (a, c) in av.iter().zip(&cv) {
                        if c.abs() > 1e-9 {
                            let ratio = a / c;
                            match constant {
                                None => constant = Some(ratio),
                                Some(r0) => concord = concord.max((ratio - r0).abs()),
                            }
                        } else {
                            concord = concord.max(a.abs());
                        }
                    }
                }
            }
            (decomposition, eigen, angular, concord)
        })
        .collect();
    let decomposition = stats.iter().map(|s| s.0).fold(0.0, f64::max);
    let eigen = stats.iter().map(|s| s.1).fold(0.0, f64::max);
    let angular = stats.iter().map(|s| s.2).fold(0.0, f64::max);
    let concord = stats.iter().map(|s| s.3).fold(0.0, f64::max);

    // 1D ladder exactness against the abstract module actions
    let ladder = config
        .mu_grid
        .par_iter()
        .map(|mu| {
            let mut worst = 0.0_f64;
            for n in 0..=8u32 {
                let psi = psi1d(n, mu);
                let up = realize_apply(Generator::JPlus, &psi);
                let amp = to_f64(&crate::arith::mu_number(n + 1, mu)).sqrt();
                let target = psi1d(n + 1, mu).poly.scale(&amp);
                worst = worst.max(up.poly.sub(&target).max_abs_coeff());
            }
            worst
        })
        .reduce(|| 0.0, f64::max);

    // anticommutator on the tensor oracle states (defining relation)
    let anticommutator = {
        let reps = RepPair::new(rat(1, 4), 1, rat(3, 4), -1);
        let mut worst = 0.0_f64;
        let mut seed = 23_u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((seed >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        for e in 1..=10u32 {
            let state = TensorState {
                level: e,
                coeffs: (0..=e).map(|_| next()).collect(),
            };
            let a = coproduct_apply(
                Generator::JPlus,
                &coproduct_apply(Generator::JMinus, &state, &reps),
                &reps,
            );
            let b = coproduct_apply(
                Generator::JMinus,
                &coproduct_apply(Generator::JPlus, &state, &reps),
                &reps,
            );
            let two_j0 = coproduct_apply(Generator::J0, &state, &reps).scaled(2.0);
            worst = worst.max(a.add(&b).add(&two_j0.scaled(-1.0)).max_abs());
        }
        worst
    };

    SuiteOutcome::new(
        "wavefun",
        vec![
            CheckResult::float("wavefunction decomposition residual", decomposition, 1e-10),
            CheckResult::float("plane Hamiltonian/Casimir eigenvalue residual", eigen, 1e-11),
            CheckResult::float("angular generating-function residual", angular, 1e-10),
            CheckResult::float(
                "angular/coherent-state closed-form proportionality",
                concord,
                1e-10,
            ),
            CheckResult::float("Dunkl-realization ladder residual", ladder, 1e-11),
            CheckResult::float("anticommutator {J+,J-} = 2J0 residual", anticommutator, 1e-11),
        ],
        Vec::new(),
    )
}
