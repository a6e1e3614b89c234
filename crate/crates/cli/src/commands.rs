use rayon::prelude::*;

use sae_radial::bound::{bound_energy, bound_wavefunction, node_radius, unit_norm_amplitude};
use sae_radial::oracle::suite::{self, Suite};
use sae_radial::potential::{additional_window, compute_p};
use sae_radial::scattering::{phase_shift, pole_energy, s_matrix};
use sae_radial::{Error, PParameter64, PotentialSpec64, Regime, SaeParam64};

use crate::args::{Command, Format, PotentialArgs, Spacing};
use crate::render::{Cell, Report, Table};

#[derive(Debug)]
pub enum CliError {
    /// Bad flag values; exit code 2.
    Usage(String),
    /// The physics rejected the input, or output failed; exit code 1.
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub struct Artifact {
    pub report: Report,
    pub default_format: Format,
    /// False when verification found a failing criterion.
    pub success: bool,
}

fn artifact(report: Report, default_format: Format) -> Artifact {
    Artifact { report, default_format, success: true }
}

fn spec(args: &PotentialArgs) -> Result<PotentialSpec64, CliError> {
    let s = match (args.v0, args.two_m_v0) {
        (Some(v0), None) => PotentialSpec64::new(args.mass, v0, args.l),
        (None, Some(x)) => PotentialSpec64::from_two_m_v0(args.mass, x, args.l),
        _ => return Err(CliError::Usage("give exactly one of --v0 and --two-m-v0".into())),
    };
    s.map_err(|e| CliError::Usage(e.to_string()))
}

// P for solvers that need the additional branch.
fn transitive(args: &PotentialArgs) -> Result<(PotentialSpec64, PParameter64, f64), CliError> {
    let s = spec(args)?;
    let pp = compute_p(&s);
    let p = pp.transitive()?;
    Ok((s, pp, p))
}

// P for scattering, where τ = 0 is also allowed for P >= 1/2.
fn scattering_p(args: &PotentialArgs) -> Result<(PParameter64, f64), CliError> {
    let pp = compute_p(&spec(args)?);
    match (pp.regime, pp.p()) {
        (Regime::Falling | Regime::Critical, _) | (_, None) => Err(pp.regime_error().into()),
        (_, Some(p)) => Ok((pp, p)),
    }
}

fn tau_cell(t: SaeParam64) -> Cell {
    match t.value() {
        Some(v) => Cell::Num(v),
        None => Cell::Text(t.to_string()),
    }
}

fn potential_fields(mut r: Report, s: &PotentialSpec64, pp: &PParameter64) -> Report {
    r = r
        .field("mass", Cell::Num(s.mass))
        .field("v0", Cell::Num(s.v0))
        .field("two_m_v0", Cell::Num(s.two_m_v0()))
        .field("l", Cell::Int(s.l.into()))
        .field("p_squared", Cell::Num(pp.p_squared));
    match pp.p() {
        Some(p) => r.field("p", Cell::Num(p)),
        None => r.field("p", Cell::Text("imaginary".into())),
    }
    .field("regime", Cell::Text(pp.regime.name().into()))
}

pub fn grid(start: f64, stop: f64, count: usize, spacing: Spacing) -> Result<Vec<f64>, CliError> {
    if count < 1 {
        return Err(CliError::Usage("grid count must be at least 1".into()));
    }
    if !start.is_finite() || !stop.is_finite() {
        return Err(CliError::Usage("grid endpoints must be finite".into()));
    }
    if spacing == Spacing::Log && !(start > 0.0 && stop > 0.0) {
        return Err(CliError::Usage(format!(
            "log spacing needs positive endpoints, got {start} and {stop}"
        )));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let n = (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            let t = i as f64 / n;
            match spacing {
                Spacing::Linear => start + (stop - start) * t,
                Spacing::Log => (start.ln() + (stop.ln() - start.ln()) * t).exp(),
            }
        })
        .collect())
}

pub fn run(command: &Command) -> Result<Artifact, CliError> {
    match command {
        Command::Classify { potential, .. } => {
            let s = spec(potential)?;
            let pp = compute_p(&s);
            let (lo, hi) = additional_window::<f64>(s.l);
            let r = potential_fields(Report::default(), &s, &pp)
                .field("window", Cell::Pair(lo, hi))
                .field("additional_solution", Cell::Bool(pp.regime == Regime::Transitive));
            Ok(artifact(r, Format::Json))
        }
        Command::BoundState { potential, tau, .. } => {
            let (s, pp, p) = transitive(potential)?;
            let state = bound_energy(&pp, s.mass, *tau)?;
            let node = node_radius(1.0, tau.to_float(), p)?;
            let r = potential_fields(Report::default(), &s, &pp)
                .field("tau", tau_cell(*tau))
                .field("energy", Cell::Num(state.energy))
                .field("kappa", Cell::Num(state.kappa))
                .field("node_free", Cell::Bool(state.node_free))
                .field("unit_norm_amplitude", Cell::Num(unit_norm_amplitude(&state)?))
                .field("zero_energy_node", Cell::Num(node));
            Ok(artifact(r, Format::Json))
        }
        Command::Wavefunction { potential, tau, grid: g, amplitude, normalize, .. } => {
            let (s, pp, _) = transitive(potential)?;
            let state = bound_energy(&pp, s.mass, *tau)?;
            if g.r_start.is_nan() || g.r_start <= 0.0 {
                return Err(CliError::Usage(format!("--r-start must be positive, got {}", g.r_start)));
            }
            let radii = grid(g.r_start, g.r_stop, g.count, g.spacing)?;
            let a = if *normalize { unit_norm_amplitude(&state)? } else { *amplitude };
            let rows = radii
                .iter()
                .map(|&r| {
                    let v = bound_wavefunction(&state, a, r)?;
                    Ok(vec![Cell::Num(r), Cell::Num(v), Cell::Num(r * v)])
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let r = potential_fields(Report::default(), &s, &pp)
                .field("tau", tau_cell(*tau))
                .field("energy", Cell::Num(state.energy))
                .field("amplitude", Cell::Num(a));
            let report = Report {
                table: Some(Table { name: "points", columns: vec!["r", "R", "u"], rows }),
                ..r
            };
            Ok(artifact(report, Format::Csv))
        }
        Command::PhaseShift { potential, tau, k, .. } => {
            let (_, p) = scattering_p(potential)?;
            let pw = phase_shift(potential.l, p, *k, *tau)?;
            let r = Report::default()
                .field("l", Cell::Int(pw.l.into()))
                .field("p", Cell::Num(pw.p))
                .field("k", Cell::Num(pw.k))
                .field("tau", tau_cell(pw.tau))
                .field("delta_standard", Cell::Num(pw.delta_standard))
                .field("delta_sae", Cell::Num(pw.delta_sae))
                .field("delta_total", Cell::Num(pw.delta_total))
                .field("re_s", Cell::Num(pw.s_matrix.re))
                .field("im_s", Cell::Num(pw.s_matrix.im))
                .field("attractive", Cell::Bool(pw.attractive()));
            Ok(artifact(r, Format::Json))
        }
        Command::SMatrix { potential, tau, k, .. } => {
            let (_, p) = scattering_p(potential)?;
            let s = s_matrix(potential.l, p, *k, *tau)?;
            let r = Report::default()
                .field("l", Cell::Int(potential.l.into()))
                .field("p", Cell::Num(p))
                .field("k", Cell::Num(*k))
                .field("tau", tau_cell(*tau))
                .field("re", Cell::Num(s.re))
                .field("im", Cell::Num(s.im))
                .field("abs", Cell::Num(s.norm()))
                .field("arg", Cell::Num(s.arg()));
            Ok(artifact(r, Format::Json))
        }
        Command::Pole { potential, tau, .. } => {
            let (s, _, p) = transitive(potential)?;
            let e = pole_energy(*tau, p, s.mass)?;
            let r = Report::default()
                .field("p", Cell::Num(p))
                .field("mass", Cell::Num(s.mass))
                .field("tau", tau_cell(*tau))
                .field("energy", Cell::Num(e))
                .field("kappa", Cell::Num((-2.0 * s.mass * e).sqrt()));
            Ok(artifact(r, Format::Json))
        }
        Command::Scan { potential, tau, k, k_start, k_stop, tau_start, tau_stop, count, spacing, .. } => {
            let (_, p) = scattering_p(potential)?;
            let l = potential.l;
            let (axis, points): (&'static str, Vec<(f64, f64, SaeParam64)>) =
                match (k_start.zip(*k_stop), tau_start.zip(*tau_stop)) {
                    (Some((a, b)), None) => {
                        let t = tau.ok_or_else(|| CliError::Usage("a k sweep needs --tau".into()))?;
                        if k.is_some() {
                            return Err(CliError::Usage("--k is fixed only in a tau sweep".into()));
                        }
                        let ks = grid(a, b, *count, *spacing)?;
                        ("k", ks.into_iter().map(|x| (x, x, t)).collect())
                    }
                    (None, Some((a, b))) => {
                        let kk = k.ok_or_else(|| CliError::Usage("a tau sweep needs --k".into()))?;
                        if tau.is_some() {
                            return Err(CliError::Usage("--tau is fixed only in a k sweep".into()));
                        }
                        let ts = grid(a, b, *count, *spacing)?;
                        let pts = ts
                            .into_iter()
                            .map(|t| Ok((t, kk, SaeParam64::finite(t)?)))
                            .collect::<Result<Vec<_>, Error>>()?;
                        ("tau", pts)
                    }
                    _ => {
                        return Err(CliError::Usage(
                            "give either --k-start/--k-stop or --tau-start/--tau-stop".into(),
                        ))
                    }
                };
            let rows = points
                .par_iter()
                .map(|&(x, kk, t)| {
                    let pw = phase_shift(l, p, kk, t)?;
                    Ok(vec![
                        Cell::Num(x),
                        Cell::Num(pw.delta_standard),
                        Cell::Num(pw.delta_sae),
                        Cell::Num(pw.delta_total),
                        Cell::Num(pw.s_matrix.re),
                        Cell::Num(pw.s_matrix.im),
                    ])
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let report = Report {
                fields: vec![("l", Cell::Int(l.into())), ("p", Cell::Num(p))],
                table: Some(Table {
                    name: "points",
                    columns: vec![axis, "delta_standard", "delta_sae", "delta_total", "re_S", "im_S"],
                    rows,
                }),
            };
            Ok(artifact(report, Format::Csv))
        }
        Command::Verify { suite: name, .. } => {
            let which = Suite::parse(name).ok_or_else(|| CliError::Usage(format!("unknown suite {name}")))?;
            let reports = suite::run(which);
            let success = reports.iter().all(|r| r.passed);
            let passed = reports.iter().filter(|r| r.passed).count();
            let rows = reports
                .iter()
                .map(|r| {
                    vec![
                        Cell::Int(r.id.into()),
                        Cell::Text(r.name.into()),
                        Cell::Text(if r.passed { "PASS" } else { "FAIL" }.into()),
                        Cell::Num(r.worst),
                        Cell::Num(r.tolerance),
                        Cell::Text(r.detail.clone()),
                    ]
                })
                .collect();
            let report = Report {
                fields: vec![
                    ("suite", Cell::Text(name.clone())),
                    ("passed", Cell::Int(passed as i64)),
                    ("total", Cell::Int(reports.len() as i64)),
                ],
                table: Some(Table {
                    name: "criteria",
                    columns: vec!["id", "criterion", "status", "worst", "tolerance", "detail"],
                    rows,
                }),
            };
            Ok(Artifact { report, default_format: Format::Table, success })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(grid(1.0, 3.0, 3, Spacing::Linear).unwrap(), vec![1.0, 2.0, 3.0]);
        let g = grid(1.0, 100.0, 3, Spacing::Log).unwrap();
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(grid(2.0, 5.0, 1, Spacing::Log).unwrap(), vec![2.0]);
        assert!(matches!(grid(0.0, 1.0, 3, Spacing::Log), Err(CliError::Usage(_))));
        assert!(matches!(grid(1.0, 2.0, 0, Spacing::Linear), Err(CliError::Usage(_))));
    }
}
