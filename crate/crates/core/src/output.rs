//! CSV and SVG writers. All reals go out with 17 significant digits so a
//! file re-parses to the same `f64` values.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::bonk::{BonkDisc, ExtremalFunction};
use crate::certify::{CertReport, Sharpness};
use crate::error::Result;
use crate::regions::{BoundaryCurve, RegionId};
use crate::solver::Method;

const SVG_BOUNDARY_SAMPLES: usize = 2048;
const SVG_CURVE_SAMPLES: usize = 720;

pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Columns `t,re,im`; the first sample is repeated at `t = 2π` to close the
/// curve.
pub fn write_curve_csv<W: Write>(curve: &BoundaryCurve, mut out: W) -> io::Result<()> {
    writeln!(out, "t,re,im")?;
    let rows = curve
        .params
        .iter()
        .zip(&curve.points)
        .chain(std::iter::once((&(2.0 * PI), &curve.points[0])));
    for (t, p) in rows {
        writeln!(
            out,
            "{},{},{}",
            format_real(*t),
            format_real(p.re),
            format_real(p.im)
        )?;
    }
    Ok(())
}

/// One row per region and solver method, in catalog order.
pub fn write_report_csv<W: Write>(report: &CertReport, mut out: W) -> io::Result<()> {
    writeln!(out, "region,method,radius,residual,sharpness,flip")?;
    for entry in &report.entries {
        let sharpness = match &entry.sharpness {
            Sharpness::NotClaimed => "not claimed".to_string(),
            Sharpness::Residual(x) => format_real(*x),
            Sharpness::Failed(_) => "failed".to_string(),
        };
        for outcome in &entry.radii {
            let (radius, residual) = match &outcome.result {
                Ok(r) => (format_real(r.value), format_real(r.residual)),
                Err(_) => ("failed".to_string(), "failed".to_string()),
            };
            writeln!(
                out,
                "{},{},{},{},{},{}",
                entry.region, outcome.method, radius, residual, sharpness, entry.flip
            )?;
        }
    }
    Ok(())
}

/// One row of the radius table; `None` where a method does not apply or
/// failed.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub region: RegionId,
    pub closed_form: Option<f64>,
    pub branch: Option<f64>,
    pub oracle: Option<f64>,
}

impl TableRow {
    pub fn get(&self, method: Method) -> Option<f64> {
        match method {
            Method::ClosedForm => self.closed_form,
            Method::Branch => self.branch,
            Method::Oracle => self.oracle,
        }
    }
}

pub fn write_table_csv<W: Write>(rows: &[TableRow], mut out: W) -> io::Result<()> {
    writeln!(out, "region,closed_form,branch,oracle")?;
    let cell = |x: Option<f64>| x.map(format_real).unwrap_or_default();
    for row in rows {
        writeln!(
            out,
            "{},{},{},{}",
            row.region,
            cell(row.closed_form),
            cell(row.branch),
            cell(row.oracle)
        )?;
    }
    Ok(())
}

fn polyline(points: &[Complex64], closed: bool, color: &str, width: f64) -> String {
    let mut s = String::new();
    for p in points.iter().chain(closed.then(|| &points[0])) {
        // SVG y grows downward.
        let _ = write!(s, "{:.6},{:.6} ", p.re, -p.im);
    }
    format!(
        "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"{width:.6}\" points=\"{}\"/>\n",
        s.trim_end()
    )
}

/// Region boundary, the disc bound at `r`, and the image of `|z| = r` under
/// the extremal quotient `w₀`, each as its own polyline.
pub fn render_svg(id: RegionId, r: f64) -> Result<String> {
    let disc = BonkDisc::at(r)?;
    let boundary = id.boundary(SVG_BOUNDARY_SAMPLES)?;
    let circle = disc.circle(SVG_CURVE_SAMPLES);
    let image = (0..SVG_CURVE_SAMPLES)
        .map(|k| {
            let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / SVG_CURVE_SAMPLES as f64);
            ExtremalFunction.ratio(z)
        })
        .collect::<Result<Vec<_>>>()?;

    let (x0, x1, y0, y1) = boundary.bounding_box();
    let (mx, my) = (0.1 * (x1 - x0), 0.1 * (y1 - y0));
    let (vx, vy, vw, vh) = (
        x0 - mx,
        -(y1 + my),
        (x1 - x0) + 2.0 * mx,
        (y1 - y0) + 2.0 * my,
    );
    let stroke = 0.003 * vw.max(vh);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx:.6} {vy:.6} {vw:.6} {vh:.6}\" width=\"800\" height=\"{:.0}\">",
        800.0 * vh / vw
    );
    let _ = writeln!(
        svg,
        "  <title>{id} region, disc bound and extremal image at r = {r:.6}</title>"
    );
    svg.push_str(&polyline(&boundary.points, true, "#1f77b4", stroke));
    svg.push_str(&polyline(&circle, true, "#d62728", stroke));
    svg.push_str(&polyline(&image, true, "#2ca02c", stroke));
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

pub fn emit_curve_csv(curve: &BoundaryCurve, path: &Path) -> Result<()> {
    let mut out = create(path)?;
    write_curve_csv(curve, &mut out)?;
    out.flush()?;
    Ok(())
}

pub fn emit_report_csv(report: &CertReport, path: &Path) -> Result<()> {
    let mut out = create(path)?;
    write_report_csv(report, &mut out)?;
    out.flush()?;
    Ok(())
}

pub fn emit_table_csv(rows: &[TableRow], path: &Path) -> Result<()> {
    let mut out = create(path)?;
    write_table_csv(rows, &mut out)?;
    out.flush()?;
    Ok(())
}

pub fn emit_svg(id: RegionId, r: f64, path: &Path) -> Result<()> {
    std::fs::write(path, render_svg(id, r)?)?;
    Ok(())
}
