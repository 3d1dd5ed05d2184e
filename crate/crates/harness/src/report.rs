//! Rendering of experiment reports as CSV or as markdown tables laid out like
//! the published ones: `n, m`, the bound, then one ratio column per
//! algorithm.

use std::io::Write;
use std::str::FromStr;

use anyhow::{bail, Result};

use domset_core::arboricity::ArboricityEstimate;

use crate::experiment::{BoundKind, ExperimentReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Emit {
    #[default]
    Csv,
    Markdown,
}

impl FromStr for Emit {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Emit::Csv),
            "markdown" | "md" => Ok(Emit::Markdown),
            other => bail!("unknown output format `{other}` (expected csv or markdown)"),
        }
    }
}

/// Rounds half-up to `places` decimals. The nudge absorbs binary error so
/// that ratios like 9/8 computed as 32 / 28.444… print as 1.13.
pub fn round_half_up(x: f64, places: i32) -> f64 {
    let scale = 10f64.powi(places);
    ((x * scale) + 0.5 + 1e-7).floor() / scale
}

pub fn format_ratio(x: f64) -> String {
    if x.is_finite() {
        format!("{:.2}", round_half_up(x, 2))
    } else {
        "inf".into()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    /// Adds a wall-clock seconds column per algorithm. Off by default so that
    /// reruns produce identical bytes.
    pub timings: bool,
    /// Adds a size column per algorithm.
    pub sizes: bool,
}

fn bound_kind(kind: BoundKind) -> String {
    match kind {
        BoundKind::Lp1 => "lp1".into(),
        BoundKind::Decomposition { prefix_fraction, .. } => format!("decomposition:{prefix_fraction}"),
    }
}

fn arboricity(est: &Option<ArboricityEstimate>) -> String {
    match est {
        Some(e) => format!("{}:{}", e.value, e.kind.name()),
        None => String::new(),
    }
}

pub fn write_csv<W: Write>(report: &ExperimentReport, out: W, opts: RenderOptions) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let Some(first) = report.rows.first() else {
        w.flush()?;
        return Ok(());
    };
    let mut header: Vec<String> = ["graph", "n", "m", "bound_kind", "bound", "arboricity"].map(String::from).to_vec();
    for o in &first.outcomes {
        if opts.sizes {
            header.push(format!("{} size", o.label));
        }
        header.push(format!("{}/bound", o.label));
        if opts.timings {
            header.push(format!("{} secs", o.label));
        }
    }
    header.push("valid".into());
    w.write_record(&header)?;
    for row in &report.rows {
        let mut rec = vec![
            row.graph_id.clone(),
            row.n.to_string(),
            row.m.to_string(),
            bound_kind(row.bound.kind),
            format_ratio(row.bound.value),
            arboricity(&row.arboricity),
        ];
        for o in &row.outcomes {
            if opts.sizes {
                rec.push(o.size.to_string());
            }
            rec.push(format_ratio(o.ratio));
            if opts.timings {
                rec.push(format!("{:.3}", o.elapsed_secs));
            }
        }
        rec.push(if row.outcomes.iter().all(|o| o.valid) { "yes" } else { "no" }.into());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_markdown<W: Write>(report: &ExperimentReport, mut out: W, opts: RenderOptions) -> Result<()> {
    let Some(first) = report.rows.first() else {
        return Ok(());
    };
    let bound = first.bound.label();
    let mut header = vec!["n, m".to_string(), bound.to_string()];
    for o in &first.outcomes {
        if opts.sizes {
            header.push(o.label.clone());
        }
        header.push(format!("{}/{bound}", o.label));
        if opts.timings {
            header.push(format!("{} (s)", o.label));
        }
    }
    writeln!(out, "| {} |", header.join(" | "))?;
    let align: Vec<&str> = std::iter::once(":--").chain(header[1..].iter().map(|_| "--:")).collect();
    writeln!(out, "| {} |", align.join(" | "))?;
    for row in &report.rows {
        let mut cells = vec![format!("{}, {}", row.n, row.m), format_ratio(row.bound.value)];
        if row.bound.label() != bound {
            cells[1].push_str(&format!(" ({})", row.bound.label()));
        }
        for o in &row.outcomes {
            if opts.sizes {
                cells.push(o.size.to_string());
            }
            cells.push(format_ratio(o.ratio));
            if opts.timings {
                cells.push(format!("{:.3}", o.elapsed_secs));
            }
        }
        writeln!(out, "| {} |", cells.join(" | "))?;
    }
    Ok(())
}

pub fn render(report: &ExperimentReport, emit: Emit, opts: RenderOptions) -> Result<String> {
    let mut buf = Vec::new();
    match emit {
        Emit::Csv => write_csv(report, &mut buf, opts)?,
        Emit::Markdown => write_markdown(report, &mut buf, opts)?,
    }
    Ok(String::from_utf8(buf)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{AlgorithmOutcome, LowerBound, ReportRow};
    use domset_core::VertexSet;

    #[test]
    fn half_up() {
        assert_eq!(format_ratio(1.125), "1.13");
        assert_eq!(format_ratio(32.0 / (256.0 / 9.0)), "1.13");
        assert_eq!(format_ratio(1.124999), "1.12");
        assert_eq!(format_ratio(512.0 / (4096.0 / 13.0)), "1.63");
        assert_eq!(format_ratio(16.0 / 3.0), "5.33");
        assert_eq!(format_ratio(1.0), "1.00");
        assert_eq!(format_ratio(f64::INFINITY), "inf");
    }

    fn sample() -> ExperimentReport {
        let outcome = |label: &str, size: usize| AlgorithmOutcome {
            name: label.to_lowercase(),
            label: label.into(),
            size,
            ratio: size as f64 / (16.0 / 3.0),
            elapsed_secs: 0.25,
            valid: true,
            set: VertexSet::new(0),
        };
        ExperimentReport {
            rows: vec![ReportRow {
                graph_id: "hypercube(d=5)".into(),
                n: 32,
                m: 80,
                bound: LowerBound {
                    value: 16.0 / 3.0,
                    kind: BoundKind::Lp1,
                },
                arboricity: Some(ArboricityEstimate {
                    value: 3,
                    kind: domset_core::arboricity::EstimateKind::FamilyUpperBound,
                    family: Some("hypercube d=5".into()),
                }),
                outcomes: vec![outcome("Greedy", 8), outcome("A1", 16)],
            }],
        }
    }

    #[test]
    fn csv_layout() {
        let text = render(&sample(), Emit::Csv, RenderOptions::default()).unwrap();
        assert_eq!(
            text,
            "graph,n,m,bound_kind,bound,arboricity,Greedy/bound,A1/bound,valid\nhypercube(d=5),32,80,lp1,5.33,3:family,1.50,3.00,yes\n"
        );
        let timed = render(&sample(), Emit::Csv, RenderOptions { timings: true, sizes: true }).unwrap();
        assert!(timed.starts_with("graph,n,m,bound_kind,bound,arboricity,Greedy size,Greedy/bound,Greedy secs,"));
    }

    #[test]
    fn markdown_layout() {
        let text = render(&sample(), Emit::Markdown, RenderOptions::default()).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "| n, m | L* | Greedy/L* | A1/L* |");
        assert_eq!(lines[2], "| 32, 80 | 5.33 | 1.50 | 3.00 |");
    }
}
