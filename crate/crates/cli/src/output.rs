//! Tables and the apsides report.
//!
//! Numbers are written in the shortest form that parses back to the same
//! `f64`, so re-reading a table loses nothing.

use std::fmt::Write as _;

use geodesic_core::orbit::{observed_shift, theoretical_shift, ApsisEvent, ApsisKind, OrbitSample};

pub const TRAJECTORY_HEADER: &str = "step,t_cm,x_cm,y_cm,r_cm,angle_deg,speed_c,deviation,descent_iters";
pub const REFERENCE_HEADER: &str = "step,t_cm,x_cm,y_cm,r_cm,angle_deg,speed_c,s_cm,norm_error";
pub const APSIDES_HEADER: &str =
    "kind,step,t_cm,x_cm,y_cm,r_cm,angle_deg,speed_c,theoretical_shift_deg,observed_shift_deg";
pub const COMPARE_HEADER: &str = "step,t_cm,lattice_x_cm,lattice_y_cm,ode_x_cm,ode_y_cm,diff_cm,diff_cells,rel_diff";

const SEPARATOR: &str = "---------------------------------------------";

/// Shortest round-trip representation; exponent form for very large or small magnitudes.
pub fn num(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn sample_fields(out: &mut String, step: usize, s: &OrbitSample) {
    let _ = write!(
        out,
        "{step},{},{},{},{},{},{}",
        num(s.t),
        num(s.x),
        num(s.y),
        num(s.r),
        opt(s.angle),
        num(s.speed)
    );
}

/// Trajectory table; `extra` supplies the two trailing columns per row.
pub fn trajectory_table(header: &str, series: &[OrbitSample], extra: impl Fn(usize) -> (String, String)) -> String {
    let mut out = String::with_capacity(series.len() * 96);
    out.push_str(header);
    out.push('\n');
    for (i, s) in series.iter().enumerate() {
        sample_fields(&mut out, i, s);
        let (a, b) = extra(i);
        let _ = writeln!(out, ",{a},{b}");
    }
    out
}

/// An apsis with the shift figures printed under it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApsisLine {
    pub event: ApsisEvent,
    /// At an aphelion: the weak-field prediction from its distance and the preceding perihelion.
    pub theoretical: Option<f64>,
    /// Advance since the previous apsis of the same kind.
    pub observed: Option<f64>,
}

pub fn annotate(events: &[ApsisEvent], m: Option<f64>) -> Vec<ApsisLine> {
    let observed = observed_shift(events).unwrap_or_default();
    let mut last_perihelion: Option<f64> = None;
    events
        .iter()
        .map(|ev| {
            let theoretical = match ev.kind {
                ApsisKind::Perihelion => {
                    last_perihelion = Some(ev.sample.r);
                    None
                }
                ApsisKind::Aphelion => match (m, last_perihelion) {
                    (Some(m), Some(p)) => theoretical_shift(m, ev.sample.r, p).ok(),
                    _ => None,
                },
            };
            let observed = observed.iter().find(|(_, index, _)| *index == ev.index).map(|&(_, _, d)| d);
            ApsisLine { event: *ev, theoretical, observed }
        })
        .collect()
}

/// Human-readable report, one block per apsis.
pub fn apsides_report(lines: &[ApsisLine]) -> String {
    if lines.is_empty() {
        return String::from("no apsides detected\n");
    }
    let mut out = String::new();
    for (i, line) in lines.iter().enumerate() {
        if i > 0 {
            out.push_str(SEPARATOR);
            out.push('\n');
        }
        let s = &line.event.sample;
        let _ = writeln!(out, "{}", line.event.kind.name());
        let _ = writeln!(out, "t = {} cm x = {} cm y = {} cm", num(s.t), num(s.x), num(s.y));
        if let Some(angle) = s.angle {
            let _ = writeln!(out, "angle = {} deg", num(angle));
        }
        let _ = writeln!(out, "distance = {} cm", num(s.r));
        let _ = writeln!(out, "velocity = {} c", num(s.speed));
        if let Some(t) = line.theoretical {
            let _ = writeln!(out, "theoretical shift = {} deg", num(t));
        }
        if let Some(o) = line.observed {
            let _ = writeln!(out, "observed shift = {} deg", num(o));
        }
    }
    out
}

pub fn apsides_table(lines: &[ApsisLine]) -> String {
    let mut out = String::from(APSIDES_HEADER);
    out.push('\n');
    for line in lines {
        let _ = write!(out, "{},", line.event.kind.name().to_ascii_lowercase());
        sample_fields(&mut out, line.event.index, &line.event.sample);
        let _ = writeln!(out, ",{},{}", opt(line.theoretical), opt(line.observed));
    }
    out
}
