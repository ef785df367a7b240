use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::persistence::{Bar, Barcode};

/// A barcode with the context needed to interpret it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarcodeReport {
    pub field: u32,
    pub degree: usize,
    pub mode: String,
    pub bars: Vec<Bar>,
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl BarcodeReport {
    pub fn new(
        code: &Barcode,
        field: PrimeField,
        degree: usize,
        mode: impl Into<String>,
        seed: Option<u64>,
    ) -> Self {
        BarcodeReport {
            field: field.modulus(),
            degree,
            mode: mode.into(),
            bars: code.bars().to_vec(),
            dims: code.dims(),
            seed,
        }
    }

    /// Rebuilds the barcode, checking that the bars reproduce `dims`.
    pub fn barcode(&self) -> Result<Barcode> {
        let code = Barcode::new(self.dims.len(), self.bars.iter().copied())?;
        if code.dims() != self.dims {
            return Err(Error::invalid(
                "bars do not reproduce the recorded dimensions",
            ));
        }
        Ok(code)
    }

    /// `# field=.. degree=.. mode=.. [seed=..]`.
    pub fn header(&self) -> String {
        let mut h = format!(
            "# field={} degree={} mode={}",
            self.field, self.degree, self.mode
        );
        if let Some(s) = self.seed {
            let _ = write!(h, " seed={s}");
        }
        h
    }
}

/// Output encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Svg,
}

/// One line `[b,d) ×m` per bar, or `(empty)`.
pub fn barcode_text(report: &BarcodeReport) -> String {
    if report.bars.is_empty() {
        return "(empty)".to_string();
    }
    report
        .bars
        .iter()
        .map(|b| format!("[{},{}) ×{}", b.birth, b.death, b.mult))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Pretty JSON with keys in lexicographic order and a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json::Map is ordered by key unless `preserve_order` is enabled
    let v = serde_json::to_value(value).map_err(|e| Error::invalid(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Single barcode in the requested format.
pub fn emit_barcode(report: &BarcodeReport, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(barcode_text(report) + "\n"),
        Format::Json => canonical_json(report),
        Format::Svg => Ok(barcodes_svg(&[("barcode".to_string(), report)])),
    }
}

const MARGIN: usize = 40;
const TITLE_H: usize = 22;
const AXIS_H: usize = 22;
const ROW_H: usize = 16;
const BAR_H: usize = 10;

/// Horizontal bars on an integer axis, one panel per barcode and one row per
/// bar. Layout uses integer coordinates only.
pub fn barcodes_svg(panels: &[(String, &BarcodeReport)]) -> String {
    let len = panels
        .iter()
        .map(|(_, r)| r.dims.len())
        .max()
        .unwrap_or(1)
        .max(1);
    let unit = (400 / len).max(24);
    let width = 2 * MARGIN + unit * len;
    let panel_height = |r: &BarcodeReport| TITLE_H + r.bars.len().max(1) * ROW_H + AXIS_H;
    let height = MARGIN + panels.iter().map(|(_, r)| panel_height(r)).sum::<usize>();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
    let mut y = MARGIN / 2;
    for (title, r) in panels {
        let _ = writeln!(
            s,
            r#"<text x="{MARGIN}" y="{}">{} {}</text>"#,
            y + 14,
            escape(title),
            escape(&r.header()[2..])
        );
        y += TITLE_H;
        if r.bars.is_empty() {
            let _ = writeln!(
                s,
                r#"<text x="{MARGIN}" y="{}" fill="gray">(empty)</text>"#,
                y + 11
            );
            y += ROW_H;
        }
        for b in &r.bars {
            let x = MARGIN + b.birth * unit;
            let w = (b.death - b.birth) * unit;
            let _ = writeln!(
                s,
                r#"<rect x="{x}" y="{}" width="{w}" height="{BAR_H}" fill="steelblue"/>"#,
                y + 3
            );
            if b.mult > 1 {
                let _ = writeln!(
                    s,
                    r#"<text x="{}" y="{}">×{}</text>"#,
                    x + w + 4,
                    y + 12,
                    b.mult
                );
            }
            y += ROW_H;
        }
        let axis_y = y + 4;
        let _ = writeln!(
            s,
            r#"<line x1="{MARGIN}" y1="{axis_y}" x2="{}" y2="{axis_y}" stroke="black"/>"#,
            MARGIN + unit * len
        );
        for t in 0..=len {
            let x = MARGIN + t * unit;
            let _ = writeln!(
                s,
                r#"<line x1="{x}" y1="{axis_y}" x2="{x}" y2="{}" stroke="black"/>"#,
                axis_y + 4
            );
            let _ = writeln!(
                s,
                r#"<text x="{x}" y="{}" text-anchor="middle">{t}</text>"#,
                axis_y + 15
            );
        }
        y += AXIS_H;
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
