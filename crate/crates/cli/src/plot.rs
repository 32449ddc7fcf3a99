//! gnuplot scripts for the emitted CSVs. Scripts only read the CSV; nothing is computed in them.

use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    /// n,increment,resolved
    DecaySweep,
    /// t,hs_<s>[,ref_<s>]...
    Growth,
    /// t,mass,energy,...
    Trajectory,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaMismatch(pub String);

impl std::fmt::Display for SchemaMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "schema mismatch: {}", self.0)
    }
}

impl std::error::Error for SchemaMismatch {}

fn header(kind: ReportKind, cols: &[&str]) -> Result<(), SchemaMismatch> {
    let ok = match kind {
        ReportKind::DecaySweep => cols == ["n", "increment", "resolved"],
        ReportKind::Growth => cols.len() >= 2 && cols[0] == "t" && cols[1..].iter().all(|c| c.starts_with("hs_") || c.starts_with("ref_")),
        ReportKind::Trajectory => cols.len() >= 3 && cols[..3] == ["t", "mass", "energy"],
    };
    if ok {
        Ok(())
    } else {
        Err(SchemaMismatch(format!("{kind:?} report cannot have columns {cols:?}")))
    }
}

/// Script for one CSV report. `slope` is printed as an annotation on decay sweeps.
pub fn emit_plot_script(kind: ReportKind, csv_name: &str, csv_text: &str, slope: Option<f64>) -> Result<String, SchemaMismatch> {
    let mut lines = csv_text.lines();
    let head = lines.next().ok_or_else(|| SchemaMismatch("empty file".into()))?;
    let cols: Vec<&str> = head.split(',').map(str::trim).collect();
    header(kind, &cols)?;
    let rows = lines.filter(|l| !l.trim().is_empty()).count();
    let stem = csv_name.trim_end_matches(".csv");
    let mut s = String::new();
    let _ = writeln!(s, "# generated for {csv_name}");
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set terminal pngcairo size 900,600");
    let _ = writeln!(s, "set output '{stem}.png'");
    let _ = writeln!(s, "set key top right");
    if rows == 0 {
        let _ = writeln!(s, "set label 1 'no data' at graph 0.5, graph 0.5 center");
        let _ = writeln!(s, "plot NaN notitle");
        return Ok(s);
    }
    match kind {
        ReportKind::DecaySweep => {
            let _ = writeln!(s, "set logscale xy");
            let _ = writeln!(s, "set xlabel 'N'");
            let _ = writeln!(s, "set ylabel '|increment|'");
            if let Some(m) = slope {
                let _ = writeln!(s, "set label 1 sprintf('fitted slope %.3f', {m:.6}) at graph 0.05, graph 0.1");
            }
            let _ = writeln!(
                s,
                "plot '{csv_name}' every ::1 using 1:($3 > 0 ? $2 : NaN) with linespoints title 'resolved', \\\n     '' every ::1 using 1:($3 > 0 ? NaN : $2) with points title 'below noise floor'"
            );
        }
        ReportKind::Growth => {
            let _ = writeln!(s, "set logscale x");
            let _ = writeln!(s, "set xlabel '1 + t'");
            let _ = writeln!(s, "set ylabel 'H^s norm'");
            let terms: Vec<String> = cols
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    let style = if c.starts_with("ref_") { "lines dashtype 2" } else { "lines" };
                    let title = c.replace('_', " ");
                    format!("'{csv_name}' every ::1 using (1+$1):{} with {style} title '{title}'", i + 1)
                })
                .collect();
            let _ = writeln!(s, "plot {}", terms.join(", \\\n     "));
        }
        ReportKind::Trajectory => {
            let _ = writeln!(s, "set xlabel 't'");
            let _ = writeln!(s, "set ylabel 'mass'");
            let _ = writeln!(s, "set y2label 'energy'");
            let _ = writeln!(s, "set y2tics");
            let _ = writeln!(s, "plot '{csv_name}' every ::1 using 1:2 with lines title 'mass', '' every ::1 using 1:3 axes x1y2 with lines title 'energy'");
        }
    }
    Ok(s)
}
