//! Per-point evaluation, grid sweeps, and the figure presets.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mapping::{critical_constants, x_of_temperature};
use crate::measures::{concurrence_wootters, entropic_nontriviality, MeasureRecord};
use crate::model::{check_temperature, thermal_state, werner_state, BellChoice, ModelParams};
use crate::output::{emit_csv, emit_svg, Column};

/// Measures of the Gibbs state at `(p, t)`, plus the Werner state with the
/// mapped mixing parameter on the given Bell state.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalPoint {
    pub record: MeasureRecord,
    /// `C_JS` of `werner_state(x_eff, bell)`. Equals `record.c_js` at `B = 0`
    /// but not in general.
    pub werner_c_js: f64,
    pub in_bijection_domain: bool,
}

pub fn evaluate_point(p: &ModelParams, t: f64, bell: BellChoice) -> Result<ThermalPoint> {
    check_temperature(t)?;
    let rho = thermal_state(p, t)?;
    let c = concurrence_wootters(&rho)?;
    debug_assert!(
        (c - crate::measures::concurrence_thermal(p, t)?).abs() < 1e-6,
        "Wootters and analytic concurrence disagree at B={} T={t}",
        p.b()
    );
    let mapped = x_of_temperature(p, t)?;
    let mut record = MeasureRecord::from_state(&rho, c, mapped.x)?;
    record.t = Some(t);
    record.b = Some(p.b());
    record.inv_t = Some(1.0 / t);
    let werner = werner_state(mapped.x.clamp(0.0, 1.0), bell)?;
    Ok(ThermalPoint {
        record,
        werner_c_js: entropic_nontriviality(&werner)?,
        in_bijection_domain: mapped.in_bijection_domain,
    })
}

pub fn evaluate_werner(x: f64, bell: BellChoice) -> Result<MeasureRecord> {
    let rho = werner_state(x, bell)?;
    let c = concurrence_wootters(&rho)?;
    MeasureRecord::from_state(&rho, c, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Temperature,
    InverseTemperature,
    Field,
    WernerX,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Temperature => "t",
            Axis::InverseTemperature => "invt",
            Axis::Field => "b",
            Axis::WernerX => "x",
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(Axis::Temperature),
            "invt" => Ok(Axis::InverseTemperature),
            "b" => Ok(Axis::Field),
            "x" => Ok(Axis::WernerX),
            other => Err(Error::Usage(format!(
                "unknown axis '{other}' (expected t, invt, b or x)"
            ))),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

/// A one-dimensional sweep. `params` holds `J_H`, `k_B` and (for temperature
/// axes) the field; `t` is the held temperature for a field sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: Axis,
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub spacing: Spacing,
    pub params: ModelParams,
    pub t: Option<f64>,
    pub bell: BellChoice,
    /// Axis values merged into the grid in addition to the `n` samples.
    pub extra: Vec<f64>,
}

impl SweepSpec {
    pub fn new(axis: Axis, lo: f64, hi: f64, n: usize, params: ModelParams) -> Self {
        SweepSpec {
            axis,
            lo,
            hi,
            n,
            spacing: Spacing::Linear,
            params,
            t: None,
            bell: BellChoice::default(),
            extra: Vec::new(),
        }
    }

    pub fn log(mut self) -> Self {
        self.spacing = Spacing::Log;
        self
    }

    pub fn at_temperature(mut self, t: f64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_bell(mut self, bell: BellChoice) -> Self {
        self.bell = bell;
        self
    }

    pub fn with_extra(mut self, values: impl IntoIterator<Item = f64>) -> Self {
        self.extra.extend(values);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::validation(format!(
                "sweep bounds must be finite with lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.n < 2 {
            return Err(Error::validation(format!(
                "sweep needs n >= 2, got {}",
                self.n
            )));
        }
        if self.spacing == Spacing::Log && self.lo <= 0.0 {
            return Err(Error::validation("log spacing requires lo > 0"));
        }
        if self.axis == Axis::Field {
            match self.t {
                Some(t) => check_temperature(t)?,
                None => return Err(Error::validation("a field sweep needs a fixed temperature")),
            }
        }
        if let Some(v) = self.extra.iter().find(|v| !v.is_finite()) {
            return Err(Error::validation(format!(
                "extra grid value {v} is not finite"
            )));
        }
        Ok(())
    }

    /// Axis values in ascending order: `n` samples by index arithmetic plus
    /// any extra values not already on the grid.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.n - 1) as f64;
        let mut values: Vec<f64> = match self.spacing {
            Spacing::Linear => (0..self.n)
                .map(|i| self.lo + i as f64 * (self.hi - self.lo) / last)
                .collect(),
            Spacing::Log => {
                let (a, b) = (self.lo.ln(), self.hi.ln());
                (0..self.n)
                    .map(|i| (a + i as f64 * (b - a) / last).exp())
                    .collect()
            }
        };
        for &v in &self.extra {
            if !values.contains(&v) {
                values.push(v);
            }
        }
        values.sort_by(f64::total_cmp);
        values
    }
}

fn evaluate_axis_value(spec: &SweepSpec, v: f64) -> Result<(MeasureRecord, f64)> {
    let thermal = |p: &ModelParams, t: f64| {
        evaluate_point(p, t, spec.bell).map(|pt| (pt.record, pt.werner_c_js))
    };
    match spec.axis {
        Axis::Temperature => thermal(&spec.params, v),
        Axis::InverseTemperature => {
            if v.is_nan() || v <= 0.0 {
                return Err(Error::validation(format!(
                    "inverse temperature must be > 0, got {v}"
                )));
            }
            thermal(&spec.params, 1.0 / v)
        }
        Axis::Field => {
            let p = spec.params.with_field(v)?;
            thermal(&p, spec.t.expect("validated"))
        }
        Axis::WernerX => {
            let r = evaluate_werner(v, spec.bell)?;
            let c_js = r.c_js;
            Ok((r, c_js))
        }
    }
}

/// Evaluates every grid point (possibly in parallel) and returns rows in grid
/// order together with the Werner-counterpart `C_JS` of each row.
pub fn run_sweep_detailed(spec: &SweepSpec) -> Result<Vec<(MeasureRecord, f64)>> {
    spec.validate()?;
    let grid = spec.grid();
    let results: Vec<Result<(MeasureRecord, f64)>> = grid
        .par_iter()
        .map(|&v| evaluate_axis_value(spec, v))
        .collect();
    results
        .into_iter()
        .zip(&grid)
        .map(|(r, &v)| {
            r.map_err(|e| Error::AtPoint {
                axis: spec.axis.name(),
                value: v,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<MeasureRecord>> {
    Ok(run_sweep_detailed(spec)?
        .into_iter()
        .map(|(r, _)| r)
        .collect())
}

/// Temperature grid used by the figure presets.
pub const PRESET_T_LO: f64 = 1e-3;
pub const PRESET_T_HI: f64 = 20.0;
pub const PRESET_T_POINTS: usize = 400;
pub const FIG2_FIELDS: [f64; 5] = [0.0, 1.0, 2.0, 3.0, 4.0];
pub const FIG3_FIELDS: [f64; 6] = [3.8, 3.9, 3.99, 4.001, 4.05, 4.1];
pub const FIG4_FIELDS: [f64; 2] = [3.99, 4.001];
pub const FIG5_T: f64 = 1e-3;
pub const FIG5_B_LO: f64 = 3.9;
pub const FIG5_B_HI: f64 = 4.1;
pub const FIG5_POINTS: usize = 401;

#[derive(Debug, Clone, Copy, Default)]
pub struct FigureOptions {
    pub svg: bool,
}

/// One output file of a figure preset.
#[derive(Debug, Clone)]
pub struct PresetSweep {
    pub name: String,
    pub spec: SweepSpec,
    pub plot: (Column, Column),
}

fn unit_params(b: f64) -> ModelParams {
    ModelParams::new(1.0, b).expect("preset parameters are valid")
}

fn temperature_sweep(b: f64) -> SweepSpec {
    SweepSpec::new(
        Axis::Temperature,
        PRESET_T_LO,
        PRESET_T_HI,
        PRESET_T_POINTS,
        unit_params(b),
    )
    .log()
}

/// The sweeps behind figure `id` (1..=5), all at `J_H = k_B = 1`.
pub fn figure_preset(id: u8) -> Result<Vec<PresetSweep>> {
    let sweep = |name: String, spec: SweepSpec, x: Column, y: Column| PresetSweep {
        name,
        spec,
        plot: (x, y),
    };
    let sweeps = match id {
        1 => vec![
            sweep(
                "fig1_thermal".into(),
                temperature_sweep(0.0),
                Column::T,
                Column::CJs,
            ),
            sweep(
                "fig1_werner".into(),
                SweepSpec::new(Axis::WernerX, 0.0, 1.0, 401, unit_params(0.0)),
                Column::XEff,
                Column::CJs,
            ),
        ],
        2 => FIG2_FIELDS
            .iter()
            .map(|&b| {
                let p = unit_params(b);
                let t_c = critical_constants(&p).t_c;
                let spec = SweepSpec::new(
                    Axis::InverseTemperature,
                    1.0 / PRESET_T_HI,
                    1.0 / PRESET_T_LO,
                    PRESET_T_POINTS,
                    p,
                )
                .log()
                .with_extra([1.0 / t_c]);
                sweep(format!("fig2_b{b}"), spec, Column::InvT, Column::XEff)
            })
            .collect(),
        3 => FIG3_FIELDS
            .iter()
            .map(|&b| {
                sweep(
                    format!("fig3_b{b}"),
                    temperature_sweep(b),
                    Column::EF,
                    Column::CJs,
                )
            })
            .collect(),
        4 => FIG4_FIELDS
            .iter()
            .map(|&b| {
                sweep(
                    format!("fig4_b{b}"),
                    temperature_sweep(b),
                    Column::EF,
                    Column::CJs,
                )
            })
            .collect(),
        5 => vec![sweep(
            "fig5".into(),
            SweepSpec::new(
                Axis::Field,
                FIG5_B_LO,
                FIG5_B_HI,
                FIG5_POINTS,
                unit_params(FIG5_B_LO),
            )
            .at_temperature(FIG5_T),
            Column::EF,
            Column::CJs,
        )],
        other => return Err(Error::Usage(format!("figure id must be 1..5, got {other}"))),
    };
    Ok(sweeps)
}

/// Runs figure preset `id` and writes its CSVs (and optional SVGs) into
/// `out_dir`. Returns the written paths.
pub fn figure(id: u8, out_dir: &Path, opts: FigureOptions) -> Result<Vec<PathBuf>> {
    let presets = figure_preset(id)?;
    std::fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut written = Vec::new();
    let mut transport = Vec::new();
    for preset in &presets {
        let rows = run_sweep_detailed(&preset.spec)?;
        let records: Vec<MeasureRecord> = rows.iter().map(|(r, _)| r.clone()).collect();
        let csv = out_dir.join(format!("{}.csv", preset.name));
        emit_csv(&records, &csv)?;
        written.push(csv);
        if opts.svg {
            let svg = out_dir.join(format!("{}.svg", preset.name));
            emit_svg(&records, preset.plot.0.name(), preset.plot.1.name(), &svg)?;
            written.push(svg);
        }
        if id == 3 {
            transport.extend(rows);
        }
    }
    if id == 3 {
        let path = out_dir.join("fig3_cjs_transport.csv");
        crate::output::emit_transport_csv(&transport, &path)?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: f64) -> ModelParams {
        ModelParams::new(1.0, b).unwrap()
    }

    #[test]
    fn point_at_high_temperature() {
        let r = evaluate_point(&p(0.0), 1e9, BellChoice::PsiMinus)
            .unwrap()
            .record;
        assert_eq!(r.c, 0.0);
        assert_eq!(r.e_f, 0.0);
        assert!(r.c_js < 1e-12);
        assert!((r.r - 4.0).abs() < 1e-9);
        assert!(r.x_eff < 1e-8);
        assert_eq!(r.t, Some(1e9));
        assert_eq!(r.b, Some(0.0));
        r.check().unwrap();
    }

    #[test]
    fn point_at_low_temperature() {
        let r = evaluate_point(&p(0.0), 1e-3, BellChoice::PsiMinus)
            .unwrap()
            .record;
        assert!((r.c - 1.0).abs() < 1e-6);
        assert!((r.e_f - 1.0).abs() < 1e-6);
        assert!(r.c_js < 1e-9);
        assert!((r.r - 1.0).abs() < 1e-9);
        assert!((r.x_eff - 1.0).abs() < 1e-12);

        let r = evaluate_point(&p(4.0), 1e-3, BellChoice::PsiMinus)
            .unwrap()
            .record;
        assert!((r.c - 0.5).abs() < 1e-6);
        assert!((r.r - 2.0).abs() < 1e-6);
    }

    #[test]
    fn werner_counterpart_matches_at_zero_field_only() {
        let pt = evaluate_point(&p(0.0), 3.0, BellChoice::PsiMinus).unwrap();
        assert!((pt.werner_c_js - pt.record.c_js).abs() < 1e-10);
        let pt = evaluate_point(&p(3.0), 3.0, BellChoice::PsiMinus).unwrap();
        assert!((pt.werner_c_js - pt.record.c_js).abs() > 1e-6);
    }

    #[test]
    fn werner_records() {
        let r = evaluate_werner(1.0, BellChoice::PhiPlus).unwrap();
        assert!((r.c - 1.0).abs() < 1e-7);
        assert!((r.e_f - 1.0).abs() < 1e-6);
        assert!(r.c_js < 1e-12);
        assert!((r.r - 1.0).abs() < 1e-15);
        assert_eq!(r.t, None);

        let r = evaluate_werner(0.0, BellChoice::PhiPlus).unwrap();
        assert_eq!((r.c, r.e_f, r.j_js, r.c_js), (0.0, 0.0, 0.0, 0.0));
        assert_eq!(r.r, 4.0);
        assert!((r.s_vn - 4f64.ln()).abs() < 1e-15);

        let r = evaluate_werner(1.0 / 3.0, BellChoice::PhiPlus).unwrap();
        assert!(r.c < 1e-12);
        assert_eq!(r.e_f, 0.0);
        assert!(r.c_js > 0.0);

        assert!(evaluate_werner(1.5, BellChoice::PhiPlus).is_err());
    }

    #[test]
    fn temperature_sweep_two_points() {
        let spec = SweepSpec::new(Axis::Temperature, 1.0, 2.0, 2, p(0.0));
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].t, Some(1.0));
        assert_eq!(rows[1].t, Some(2.0));
    }

    #[test]
    fn werner_sweep_grid() {
        let spec = SweepSpec::new(Axis::WernerX, 0.0, 1.0, 11, p(0.0));
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 11);
        assert!(rows[3].c < 1e-10);
        assert!((rows[4].c - 0.1).abs() < 1e-10);
    }

    #[test]
    fn field_sweep_peaks_near_critical_field() {
        let spec = SweepSpec::new(Axis::Field, 3.9, 4.1, 41, p(0.0)).at_temperature(1e-3);
        let rows = run_sweep(&spec).unwrap();
        let (i, _) = rows
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.c_js.total_cmp(&b.1.c_js))
            .unwrap();
        assert!((rows[i].b.unwrap() - 4.0).abs() <= 0.2 / 40.0 + 1e-12);
    }

    #[test]
    fn spec_validation() {
        let base = SweepSpec::new(Axis::Temperature, 1.0, 2.0, 2, p(0.0));
        assert!(SweepSpec {
            n: 1,
            ..base.clone()
        }
        .validate()
        .is_err());
        assert!(SweepSpec {
            lo: 2.0,
            ..base.clone()
        }
        .validate()
        .is_err());
        assert!(SweepSpec {
            lo: 0.0,
            ..base.clone()
        }
        .log()
        .validate()
        .is_err());
        assert!(SweepSpec {
            axis: Axis::Field,
            ..base.clone()
        }
        .validate()
        .is_err());
        assert!(base.validate().is_ok());
    }

    #[test]
    fn failing_point_reports_coordinates() {
        let spec = SweepSpec::new(Axis::Temperature, -1.0, 1.0, 3, p(0.0));
        match run_sweep(&spec) {
            Err(Error::AtPoint {
                axis,
                value,
                source,
            }) => {
                assert_eq!(axis, "t");
                assert_eq!(value, -1.0);
                assert!(matches!(*source, Error::Validation(_)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn log_grid_and_extras() {
        let spec = SweepSpec::new(Axis::Temperature, 1.0, 100.0, 3, p(0.0))
            .log()
            .with_extra([5.0, 1.0]);
        let g = spec.grid();
        assert_eq!(g.len(), 4);
        assert_eq!(g[0], 1.0);
        assert_eq!(g[1], 5.0);
        assert!((g[2] - 10.0).abs() < 1e-12);
        assert!((g[3] - 100.0).abs() < 1e-12);
    }

    #[test]
    fn presets_exist() {
        assert_eq!(figure_preset(1).unwrap().len(), 2);
        assert_eq!(figure_preset(2).unwrap().len(), 5);
        assert_eq!(figure_preset(3).unwrap().len(), 6);
        assert_eq!(figure_preset(4).unwrap().len(), 2);
        assert_eq!(figure_preset(5).unwrap().len(), 1);
        assert!(matches!(figure_preset(0), Err(Error::Usage(_))));
        assert!(matches!(figure_preset(6), Err(Error::Usage(_))));
    }
}
