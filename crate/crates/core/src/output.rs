//! CSV and SVG emission for measure records.
//!
//! Numbers are written in Rust's shortest round-trip form, so parsing a file
//! back yields bit-identical values and repeated runs are byte-identical.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::measures::MeasureRecord;

pub const CSV_HEADER: &str = "t,b,inv_t,x_eff,c,e_f,s_vn,h_vn,j_js,c_js,r";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    T,
    B,
    InvT,
    XEff,
    C,
    EF,
    SVn,
    HVn,
    JJs,
    CJs,
    R,
}

impl Column {
    pub const ALL: [Column; 11] = [
        Column::T,
        Column::B,
        Column::InvT,
        Column::XEff,
        Column::C,
        Column::EF,
        Column::SVn,
        Column::HVn,
        Column::JJs,
        Column::CJs,
        Column::R,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::T => "t",
            Column::B => "b",
            Column::InvT => "inv_t",
            Column::XEff => "x_eff",
            Column::C => "c",
            Column::EF => "e_f",
            Column::SVn => "s_vn",
            Column::HVn => "h_vn",
            Column::JJs => "j_js",
            Column::CJs => "c_js",
            Column::R => "r",
        }
    }

    pub fn value(self, r: &MeasureRecord) -> Option<f64> {
        match self {
            Column::T => r.t,
            Column::B => r.b,
            Column::InvT => r.inv_t,
            Column::XEff => Some(r.x_eff),
            Column::C => Some(r.c),
            Column::EF => Some(r.e_f),
            Column::SVn => Some(r.s_vn),
            Column::HVn => Some(r.h_vn),
            Column::JJs => Some(r.j_js),
            Column::CJs => Some(r.c_js),
            Column::R => Some(r.r),
        }
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Column::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown column '{s}' (expected one of {CSV_HEADER})"
                ))
            })
    }
}

fn push_number(line: &mut String, v: f64) {
    write!(line, "{v:?}").expect("writing to a String");
}

pub fn csv_line(r: &MeasureRecord) -> String {
    let mut line = String::new();
    for (i, col) in Column::ALL.iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        if let Some(v) = col.value(r) {
            push_number(&mut line, v);
        }
    }
    line
}

/// Writes header and rows. Invariants are checked by [`emit_csv`].
pub fn write_csv<W: Write>(records: &[MeasureRecord], mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(w, "{}", csv_line(r))?;
    }
    w.flush()
}

pub fn emit_csv(records: &[MeasureRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::Usage("no records to write".into()));
    }
    for r in records {
        r.check()?;
    }
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(records, BufWriter::new(file)).map_err(|e| Error::io(path, e))
}

/// Parses a file written by [`write_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<MeasureRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(Error::validation(format!(
                "unexpected CSV header {:?}",
                other.unwrap_or("")
            )))
        }
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != Column::ALL.len() {
                return Err(Error::validation(format!(
                    "row {} has {} fields, expected {}",
                    i + 1,
                    fields.len(),
                    Column::ALL.len()
                )));
            }
            let opt = |s: &str| -> Result<Option<f64>> {
                if s.is_empty() {
                    Ok(None)
                } else {
                    s.parse()
                        .map(Some)
                        .map_err(|_| Error::validation(format!("row {}: bad number '{s}'", i + 1)))
                }
            };
            let req = |s: &str| -> Result<f64> {
                opt(s)?.ok_or_else(|| Error::validation(format!("row {}: missing value", i + 1)))
            };
            Ok(MeasureRecord {
                t: opt(fields[0])?,
                b: opt(fields[1])?,
                inv_t: opt(fields[2])?,
                x_eff: req(fields[3])?,
                c: req(fields[4])?,
                e_f: req(fields[5])?,
                s_vn: req(fields[6])?,
                h_vn: req(fields[7])?,
                j_js: req(fields[8])?,
                c_js: req(fields[9])?,
                r: req(fields[10])?,
            })
        })
        .collect()
}

/// Side-by-side `C_JS` of each thermal row and of the Werner state at its
/// mapped `x`.
pub fn emit_transport_csv(rows: &[(MeasureRecord, f64)], path: &Path) -> Result<()> {
    let mut out = String::from("b,t,x_eff,c_js_thermal,c_js_werner,difference\n");
    for (r, werner) in rows {
        for v in [
            r.b.unwrap_or(f64::NAN),
            r.t.unwrap_or(f64::NAN),
            r.x_eff,
            r.c_js,
            *werner,
        ] {
            push_number(&mut out, v);
            out.push(',');
        }
        push_number(&mut out, r.c_js - werner);
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}

const SVG_W: f64 = 640.0;
const SVG_H: f64 = 480.0;
const MARGIN: f64 = 60.0;

/// Renders one column against another as a single polyline. Rows where
/// either column is empty are skipped.
pub fn render_svg(records: &[MeasureRecord], x_col: &str, y_col: &str) -> Result<String> {
    let xc: Column = x_col.parse()?;
    let yc: Column = y_col.parse()?;
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter_map(|r| Some((xc.value(r)?, yc.value(r)?)))
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    if pts.is_empty() {
        return Err(Error::Usage(format!(
            "no rows have both {x_col} and {y_col}"
        )));
    }
    let range = |vals: &mut dyn Iterator<Item = f64>| {
        let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        if hi > lo {
            (lo, hi)
        } else {
            (lo - 0.5, hi + 0.5)
        }
    };
    let (x0, x1) = range(&mut pts.iter().map(|p| p.0));
    let (y0, y1) = range(&mut pts.iter().map(|p| p.1));
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (SVG_W - 2.0 * MARGIN);
    let sy = |y: f64| SVG_H - MARGIN - (y - y0) / (y1 - y0) * (SVG_H - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_W}" height="{SVG_H}" viewBox="0 0 {SVG_W} {SVG_H}">"#
    );
    let _ = writeln!(
        s,
        r#"<path d="M{m} {b} H{r} M{m} {b} V{m}" stroke="black" fill="none"/>"#,
        m = MARGIN,
        b = SVG_H - MARGIN,
        r = SVG_W - MARGIN
    );
    let _ = write!(s, r#"<polyline fill="none" stroke="steelblue" points=""#);
    for (i, (x, y)) in pts.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{:.2},{:.2}", sx(*x), sy(*y));
    }
    s.push_str("\"/>\n");
    let label = |s: &mut String, x: f64, y: f64, anchor: &str, text: &str| {
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" text-anchor="{anchor}" font-size="12">{text}</text>"#
        );
    };
    label(&mut s, SVG_W / 2.0, SVG_H - 15.0, "middle", x_col);
    label(&mut s, 15.0, SVG_H / 2.0, "middle", y_col);
    label(
        &mut s,
        MARGIN,
        SVG_H - MARGIN + 18.0,
        "middle",
        &format!("{x0:.4}"),
    );
    label(
        &mut s,
        SVG_W - MARGIN,
        SVG_H - MARGIN + 18.0,
        "middle",
        &format!("{x1:.4}"),
    );
    label(
        &mut s,
        MARGIN - 6.0,
        SVG_H - MARGIN,
        "end",
        &format!("{y0:.4}"),
    );
    label(&mut s, MARGIN - 6.0, MARGIN, "end", &format!("{y1:.4}"));
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn emit_svg(records: &[MeasureRecord], x_col: &str, y_col: &str, path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::Usage("no records to plot".into()));
    }
    let svg = render_svg(records, x_col, y_col)?;
    std::fs::write(path, svg).map_err(|e| Error::io(path, e))
}
