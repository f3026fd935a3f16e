//! The four commands. Each computes, writes its files, and returns what it
//! computed so callers (and tests) can inspect it.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use geodesic_core::continuum::{integrate_to_times, OdeSample, PhaseState};
use geodesic_core::orbit::{detect_apsides, orbit_series, orbit_series_from_positions, ApsisKind, OrbitSample};
use geodesic_core::solver::{initial_points, run_geodesic};
use geodesic_core::{ContinuousPoint, Displacement, GeodesicError, Trajectory};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{self, num, ApsisLine};

/// Apsides of a series with their shift figures.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub series: Vec<OrbitSample>,
    pub apsides: Vec<ApsisLine>,
    pub report: String,
}

pub fn analyze_series(series: Vec<OrbitSample>, m: Option<f64>) -> Analysis {
    let apsides = output::annotate(&detect_apsides(&series), m);
    let report = output::apsides_report(&apsides);
    Analysis { series, apsides, report }
}

/// Lattice trajectory for a config, no files written.
pub fn lattice(cfg: &RunConfig) -> Result<Trajectory<3>, GeodesicError> {
    let (e0, e1) = initial_points::<3>(&[cfg.x0_cm, cfg.y0_cm], &[cfg.vx_c, cfg.vy_c], cfg.delta_cm, cfg.a)?;
    let field = cfg.metric.field();
    run_geodesic(&field.as_ref(), e0, e1, cfg.steps, &cfg.solver())
}

/// Continuum geodesic with the same start, sampled at `t = k tau` for every
/// lattice row.
pub fn reference(cfg: &RunConfig) -> Result<Vec<OdeSample<3>>, GeodesicError> {
    let field = cfg.metric.field();
    let x = ContinuousPoint::new([0.0, cfg.x0_cm, cfg.y0_cm])?;
    let start = PhaseState::normalized(field.as_ref(), x, Displacement::new([1.0, cfg.vx_c, cfg.vy_c]))?;
    let times: Vec<f64> = (0..cfg.steps + 2).map(|k| k as f64 * cfg.tau()).collect();
    integrate_to_times(field.as_ref(), start, &times, &cfg.ode())
}

fn positions(samples: &[OdeSample<3>]) -> Vec<(f64, f64, f64)> {
    samples.iter().map(|o| (o.state.x.coords[0], o.state.x.coords[1], o.state.x.coords[2])).collect()
}

fn write_file(dir: &Path, name: &str, contents: &str, written: &mut Vec<PathBuf>) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(CliError::io(dir))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(CliError::io(&path))?;
    written.push(path);
    Ok(())
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub trajectory: Trajectory<3>,
    pub analysis: Analysis,
    pub files: Vec<PathBuf>,
}

/// Lattice run: `trajectory.csv`, `apsides.txt`, `apsides.csv`.
pub fn cmd_run(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    let trajectory = lattice(cfg)?;
    let analysis = analyze_series(orbit_series(&trajectory)?, cfg.metric.mass());
    let table = output::trajectory_table(output::TRAJECTORY_HEADER, &analysis.series, |i| {
        match i.checked_sub(2).and_then(|k| trajectory.records.get(k)) {
            Some(r) => (num(r.final_deviation), r.descent_iterations.to_string()),
            None => (String::new(), String::new()),
        }
    });
    let mut files = Vec::new();
    write_file(&cfg.output_dir, "trajectory.csv", &table, &mut files)?;
    write_file(&cfg.output_dir, "apsides.txt", &analysis.report, &mut files)?;
    write_file(&cfg.output_dir, "apsides.csv", &output::apsides_table(&analysis.apsides), &mut files)?;
    Ok(RunOutput { trajectory, analysis, files })
}

#[derive(Debug, Clone)]
pub struct ReferenceOutput {
    pub samples: Vec<OdeSample<3>>,
    pub analysis: Analysis,
    pub files: Vec<PathBuf>,
}

/// Continuum run: `reference.csv`, `reference_apsides.txt`, `reference_apsides.csv`.
pub fn cmd_reference(cfg: &RunConfig) -> Result<ReferenceOutput, CliError> {
    let samples = reference(cfg)?;
    let analysis = analyze_series(orbit_series_from_positions(&positions(&samples))?, cfg.metric.mass());
    let field = cfg.metric.field();
    let mut norm = Vec::with_capacity(samples.len());
    for o in &samples {
        norm.push(o.state.norm_error(field.as_ref())?);
    }
    let table = output::trajectory_table(output::REFERENCE_HEADER, &analysis.series, |i| {
        (num(samples[i].s), num(norm[i]))
    });
    let mut files = Vec::new();
    write_file(&cfg.output_dir, "reference.csv", &table, &mut files)?;
    write_file(&cfg.output_dir, "reference_apsides.txt", &analysis.report, &mut files)?;
    write_file(&cfg.output_dir, "reference_apsides.csv", &output::apsides_table(&analysis.apsides), &mut files)?;
    Ok(ReferenceOutput { samples, analysis, files })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareRow {
    pub step: usize,
    pub t: f64,
    pub lattice: (f64, f64),
    pub ode: (f64, f64),
    pub diff_cm: f64,
    /// `diff_cm` over the distance of the reference point from the origin.
    pub rel_diff: f64,
}

/// Per-step position differences between two `(t, x, y)` series.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub rows: Vec<CompareRow>,
    pub delta_cm: f64,
    /// `(lattice rows, reference rows)` when the two differ in length.
    pub truncated: Option<(usize, usize)>,
}

impl Comparison {
    pub fn new(lattice: &[(f64, f64, f64)], ode: &[(f64, f64, f64)], delta_cm: f64) -> Self {
        let n = lattice.len().min(ode.len());
        let truncated = (lattice.len() != ode.len()).then_some((lattice.len(), ode.len()));
        let rows = lattice[..n]
            .iter()
            .zip(&ode[..n])
            .enumerate()
            .map(|(step, (l, o))| {
                let diff_cm = (l.1 - o.1).hypot(l.2 - o.2);
                let norm = o.1.hypot(o.2);
                let rel_diff = if norm > 0.0 { diff_cm / norm } else if diff_cm == 0.0 { 0.0 } else { f64::INFINITY };
                CompareRow { step, t: l.0, lattice: (l.1, l.2), ode: (o.1, o.2), diff_cm, rel_diff }
            })
            .collect();
        Self { rows, delta_cm, truncated }
    }

    pub fn max_diff_cm(&self) -> f64 {
        self.rows.iter().map(|r| r.diff_cm).fold(0.0, f64::max)
    }

    pub fn mean_diff_cm(&self) -> f64 {
        if self.rows.is_empty() {
            return 0.0;
        }
        self.rows.iter().map(|r| r.diff_cm).sum::<f64>() / self.rows.len() as f64
    }

    /// Largest relative difference over rows `0..=last`.
    pub fn max_rel_diff_through(&self, last: usize) -> f64 {
        self.rows.iter().take(last + 1).map(|r| r.rel_diff).fold(0.0, f64::max)
    }

    pub fn table(&self) -> String {
        let mut out = String::from(output::COMPARE_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.step,
                num(r.t),
                num(r.lattice.0),
                num(r.lattice.1),
                num(r.ode.0),
                num(r.ode.1),
                num(r.diff_cm),
                num(r.diff_cm / self.delta_cm),
                num(r.rel_diff)
            );
        }
        out
    }
}

/// The latest per-revolution shift in an analysis, preferring aphelia.
pub fn revolution_shift(analysis: &Analysis) -> Option<(ApsisKind, usize, f64)> {
    let latest = |kind: ApsisKind| {
        analysis
            .apsides
            .iter()
            .rev()
            .find(|l| l.event.kind == kind && l.observed.is_some())
            .map(|l| (kind, l.event.index, l.observed.unwrap_or_default()))
    };
    latest(ApsisKind::Aphelion).or_else(|| latest(ApsisKind::Perihelion))
}

#[derive(Debug, Clone)]
pub struct CompareOutput {
    pub comparison: Comparison,
    pub lattice: Analysis,
    pub reference: Analysis,
    /// Last row of the first quarter orbit: half the step of the reference's
    /// first perihelion. `None` when the reference has no perihelion.
    pub quarter_orbit_end: Option<usize>,
    pub lattice_shift: Option<(ApsisKind, usize, f64)>,
    pub reference_shift: Option<(ApsisKind, usize, f64)>,
    pub summary: String,
    pub files: Vec<PathBuf>,
}

impl CompareOutput {
    pub fn shift_difference(&self) -> Option<f64> {
        Some((self.lattice_shift?.2 - self.reference_shift?.2).abs())
    }
}

/// Both engines from the same start: `compare.csv`, `compare_summary.txt`.
pub fn cmd_compare(cfg: &RunConfig) -> Result<CompareOutput, CliError> {
    let trajectory = lattice(cfg)?;
    let samples = reference(cfg)?;
    let lattice = analyze_series(orbit_series(&trajectory)?, cfg.metric.mass());
    let reference = analyze_series(orbit_series_from_positions(&positions(&samples))?, cfg.metric.mass());
    let as_triples = |s: &[OrbitSample]| s.iter().map(|o| (o.t, o.x, o.y)).collect::<Vec<_>>();
    let comparison = Comparison::new(&as_triples(&lattice.series), &as_triples(&reference.series), cfg.delta_cm);

    let quarter_orbit_end = reference
        .apsides
        .iter()
        .find(|l| l.event.kind == ApsisKind::Perihelion)
        .map(|l| l.event.index / 2);
    let lattice_shift = revolution_shift(&lattice);
    let reference_shift = revolution_shift(&reference);

    let mut summary = String::new();
    let _ = writeln!(summary, "compared rows = {}", comparison.rows.len());
    if let Some((l, o)) = comparison.truncated {
        let _ = writeln!(summary, "note: lattice has {l} rows and reference {o}; compared the first {}", l.min(o));
    }
    let cells = |cm: f64| num(cm / cfg.delta_cm);
    let (max, mean) = (comparison.max_diff_cm(), comparison.mean_diff_cm());
    let _ = writeln!(summary, "max deviation = {} cm ({} cells)", num(max), cells(max));
    let _ = writeln!(summary, "mean deviation = {} cm ({} cells)", num(mean), cells(mean));
    match quarter_orbit_end {
        Some(end) => {
            let _ = writeln!(summary, "quarter orbit = rows 0..={end}");
            let _ = writeln!(summary, "max relative deviation over quarter orbit = {}", num(comparison.max_rel_diff_through(end)));
        }
        None => {
            let _ = writeln!(summary, "quarter orbit = n/a (no perihelion in the reference)");
        }
    }
    let shift_line = |name: &str, s: Option<(ApsisKind, usize, f64)>| match s {
        Some((kind, index, deg)) => format!("{name} shift = {} deg ({} at row {index})\n", num(deg), kind.name().to_ascii_lowercase()),
        None => format!("{name} shift = n/a\n"),
    };
    summary.push_str(&shift_line("lattice", lattice_shift));
    summary.push_str(&shift_line("reference", reference_shift));
    let mut out = CompareOutput {
        comparison,
        lattice,
        reference,
        quarter_orbit_end,
        lattice_shift,
        reference_shift,
        summary: String::new(),
        files: Vec::new(),
    };
    if let Some(d) = out.shift_difference() {
        let _ = writeln!(summary, "shift difference = {} deg", num(d));
    }
    out.summary = summary;
    write_file(&cfg.output_dir, "compare.csv", &out.comparison.table(), &mut out.files)?;
    write_file(&cfg.output_dir, "compare_summary.txt", &out.summary, &mut out.files)?;
    Ok(out)
}

/// Reads the `t_cm`, `x_cm`, `y_cm` columns of a trajectory or reference table.
pub fn read_table(path: &Path) -> Result<Vec<(f64, f64, f64)>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read table {}: {e}", path.display())))?;
    let bad = |line: usize, message: String| CliError::Table { path: path.to_path_buf(), line, message };
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().ok_or_else(|| bad(1, "empty table".into()))?.split(',').collect();
    let column = |name: &str| header.iter().position(|h| h.trim() == name).ok_or_else(|| bad(1, format!("no `{name}` column")));
    let cols = [column("t_cm")?, column("x_cm")?, column("y_cm")?];
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let mut v = [0.0; 3];
        for (slot, &c) in v.iter_mut().zip(&cols) {
            let raw = fields.get(c).ok_or_else(|| bad(i + 2, format!("expected {} fields", header.len())))?;
            *slot = raw.trim().parse().map_err(|_| bad(i + 2, format!("`{raw}` is not a number")))?;
        }
        out.push((v[0], v[1], v[2]));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct AnalyzeOutput {
    pub analysis: Analysis,
    pub files: Vec<PathBuf>,
}

/// Apsis analysis of an existing table; files go to `output_dir` as
/// `<stem>_apsides.txt` and `<stem>_apsides.csv` when it is given.
pub fn cmd_analyze(table: &Path, m: Option<f64>, output_dir: Option<&Path>) -> Result<AnalyzeOutput, CliError> {
    if let Some(m) = m {
        if !(m > 0.0 && m.is_finite()) {
            return Err(CliError::Usage(format!("--m-cm must be positive, got {m}")));
        }
    }
    let points = read_table(table)?;
    let series = orbit_series_from_positions(&points).map_err(|e| CliError::Table {
        path: table.to_path_buf(),
        line: points.len() + 1,
        message: e.to_string(),
    })?;
    let analysis = analyze_series(series, m);
    let mut files = Vec::new();
    if let Some(dir) = output_dir {
        let stem = table.file_stem().and_then(|s| s.to_str()).unwrap_or("table");
        write_file(dir, &format!("{stem}_apsides.txt"), &analysis.report, &mut files)?;
        write_file(dir, &format!("{stem}_apsides.csv"), &output::apsides_table(&analysis.apsides), &mut files)?;
    }
    Ok(AnalyzeOutput { analysis, files })
}
