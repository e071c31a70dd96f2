// Copyright 2026 The qpurify Authors
// SPDX-License-Identifier: Apache-2.0

//! CSV, JSON and binary PPM renderings of sweep rows.

use crate::error::{Error, Result};
use crate::sweep::config::{GridSpec, HeatmapField};
use crate::sweep::run::SweepRow;
use crate::thermo::{ColdTemperature, ModeTag};

pub const CSV_HEADER: &str = "T_H_mK,T_C_mK,dE_H,dE_C,W,mode,T_C_final_mK,p_g_final,purifier";

/// Nine significant digits, `%g` style.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..9).contains(&exp) {
        let s = format!("{:.*}", (8 - exp).max(0) as usize, x);
        // rounding may add a digit (9.99999999995 -> 10.00000000)
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        s
    } else {
        let s = format!("{x:.8e}");
        let (mant, e) = s.split_once('e').expect("exponent");
        let mant = if mant.contains('.') {
            mant.trim_end_matches('0').trim_end_matches('.')
        } else {
            mant
        };
        format!("{mant}e{e}")
    }
}

fn cold_field(t: ColdTemperature<f64>) -> String {
    match t {
        ColdTemperature::Finite(x) => format_sig9(x),
        ColdTemperature::Infinite => "inf".into(),
        ColdTemperature::Inverted => "inverted".into(),
    }
}

pub fn write_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let fields = [
            format_sig9(r.t_hot),
            format_sig9(r.t_cold),
            format_sig9(r.d_e_h),
            format_sig9(r.d_e_c),
            format_sig9(r.w),
            r.mode.to_string(),
            cold_field(r.t_cold_final),
            format_sig9(r.p_g_final),
            r.purifier.to_string(),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn write_json(rows: &[SweepRow]) -> Result<String> {
    Ok(serde_json::to_string_pretty(rows)?)
}

pub type Rgb = [u8; 3];

/// Mode palette. `P` marks purifying points inside `R`.
pub fn mode_color(tag: ModeTag, purifier: bool) -> Rgb {
    match (tag, purifier) {
        (ModeTag::R, true) => [158, 202, 225],
        (ModeTag::R, false) => [31, 119, 180],
        (ModeTag::E, _) => [46, 160, 67],
        (ModeTag::A, _) => [255, 221, 0],
        (ModeTag::H, _) => [214, 39, 40],
        (ModeTag::Boundary, _) => [128, 128, 128],
    }
}

/// Ramp endpoints for scalar fields; values outside the finite range are
/// drawn black.
pub const RAMP_LOW: Rgb = [20, 20, 120];
pub const RAMP_HIGH: Rgb = [255, 230, 40];
pub const NON_FINITE: Rgb = [0, 0, 0];

fn ramp(t: f64) -> Rgb {
    let mut c = [0u8; 3];
    for (ch, (lo, hi)) in c.iter_mut().zip(RAMP_LOW.iter().zip(RAMP_HIGH)) {
        *ch = (f64::from(*lo) + t * (f64::from(hi) - f64::from(*lo))).round() as u8;
    }
    c
}

pub struct Heatmap {
    pub width: usize,
    pub height: usize,
    /// Binary P6 image.
    pub ppm: Vec<u8>,
    /// `min`/`max` of the ramp for scalar fields.
    pub sidecar: Option<String>,
}

fn scalar(row: &SweepRow, field: HeatmapField) -> Option<f64> {
    match field {
        HeatmapField::TColdFinal => row.t_cold_final.finite(),
        HeatmapField::GroundPopulation => Some(row.p_g_final),
        HeatmapField::Mode => None,
    }
}

/// Renders `rows` (hot-major over `grid`) with `T_H` along x and `T_C`
/// increasing upward.
pub fn write_heatmap(rows: &[SweepRow], grid: &GridSpec, field: HeatmapField) -> Result<Heatmap> {
    if rows.len() != grid.len() {
        return Err(Error::IncompleteGrid {
            expected: grid.len(),
            found: rows.len(),
        });
    }
    let (w, h) = (grid.n_h, grid.n_c);
    let values: Vec<Option<f64>> = rows.iter().map(|r| scalar(r, field)).collect();
    let (lo, hi) = values
        .iter()
        .flatten()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
            (a.min(v), b.max(v))
        });
    let mut ppm = format!("P6\n{w} {h}\n255\n").into_bytes();
    for y in 0..h {
        let ic = h - 1 - y;
        for ih in 0..w {
            let idx = ih * h + ic;
            let row = &rows[idx];
            let rgb = match field {
                HeatmapField::Mode => mode_color(row.mode, row.purifier),
                _ => match values[idx] {
                    Some(v) if hi > lo => ramp((v - lo) / (hi - lo)),
                    Some(_) => ramp(0.0),
                    None => NON_FINITE,
                },
            };
            ppm.extend_from_slice(&rgb);
        }
    }
    let sidecar = (field != HeatmapField::Mode).then(|| {
        format!(
            "field = {}\nmin = {}\nmax = {}\nlow_rgb = {:?}\nhigh_rgb = {:?}\n",
            field.name(),
            format_sig9(lo),
            format_sig9(hi),
            RAMP_LOW,
            RAMP_HIGH
        )
    });
    Ok(Heatmap {
        width: w,
        height: h,
        ppm,
        sidecar,
    })
}
