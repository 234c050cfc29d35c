//! Text and JSON rendering.

use std::io::Write;

use serde::Serialize;

use bfcorr::algebra::{expand as expand_series, Alphabet, LaurentSeries, RationalFn};
use bfcorr::boson::{boson_character_a, boson_character_b};
use bfcorr::correspondence::{IdentityReport, Model, Side, Symbol, VevSpec};
use bfcorr::fock::{character_a, character_b};
use bfcorr::{Error, Result};

use crate::Format;

fn io(e: std::io::Error) -> Error {
    Error::Invalid(format!("cannot write output: {e}"))
}

fn json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Invalid(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

pub fn reports(out: &mut impl Write, reports: &[IdentityReport], format: Format) -> Result<()> {
    if format == Format::Json {
        for r in reports {
            json(out, r)?;
        }
        return Ok(());
    }
    for r in reports {
        let mut params = Vec::new();
        if let Some(m) = r.params.model {
            params.push(format!("model {m}"));
        }
        if let Some(n) = r.params.n {
            params.push(format!("n {n}"));
        }
        params.push(format!("D {}", r.params.cutoff));
        params.push(format!("seed {}", r.params.seed));
        let time = if r.elapsed_ms > 0 { format!(" {} ms", r.elapsed_ms) } else { String::new() };
        writeln!(out, "{} {} ({}){time}", r.status, r.check, params.join(", ")).map_err(io)?;
        for w in r.witnesses.iter().filter(|w| !w.agree) {
            match &w.first_difference {
                Some(d) if !d.monomial.is_empty() => {
                    writeln!(out, "  {}: first difference at {}: {} vs {}", w.label, d.monomial, d.left, d.right)
                }
                _ => writeln!(out, "  {}: {} vs {}", w.label, w.left, w.right),
            }
            .map_err(io)?;
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    writeln!(out, "{passed} passed, {} failed", reports.len() - passed).map_err(io)
}

#[derive(Serialize)]
struct Term {
    exponents: Vec<i32>,
    coefficient: String,
}

#[derive(Serialize)]
struct SeriesJson {
    vars: Vec<String>,
    cutoff: u32,
    text: String,
    terms: Vec<Term>,
}

impl From<&LaurentSeries> for SeriesJson {
    fn from(s: &LaurentSeries) -> Self {
        SeriesJson {
            vars: s.vars().to_vec(),
            cutoff: s.cutoff(),
            text: s.to_string(),
            terms: s
                .terms()
                .iter()
                .map(|(e, c)| Term {
                    exponents: e.clone(),
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }
}

pub fn series(out: &mut impl Write, s: &LaurentSeries, format: Format) -> Result<()> {
    match format {
        Format::Json => json(out, &SeriesJson::from(s)),
        Format::Text => writeln!(out, "{s}").map_err(io),
    }
}

fn word_text(spec: &VevSpec) -> Vec<String> {
    spec.word
        .iter()
        .map(|(sym, v)| match (spec.side, spec.model, sym) {
            (Side::Fermion, _, Symbol::Phi) => format!("phi({v})"),
            (Side::Fermion, _, Symbol::Psi) => format!("psi({v})"),
            (Side::Boson, Model::A, Symbol::Psi) => format!("e^{{-a}}({v})"),
            (Side::Boson, _, _) => format!("e^{{a}}({v})"),
        })
        .collect()
}

#[derive(Serialize)]
struct VevJson {
    model: Model,
    side: &'static str,
    word: Vec<String>,
    cutoff: u32,
    series: SeriesJson,
}

pub fn vev(out: &mut impl Write, spec: &VevSpec, s: &LaurentSeries, format: Format) -> Result<()> {
    let side = match spec.side {
        Side::Fermion => "fermion",
        Side::Boson => "boson",
    };
    match format {
        Format::Json => json(
            out,
            &VevJson {
                model: spec.model,
                side,
                word: word_text(spec),
                cutoff: spec.cutoff,
                series: s.into(),
            },
        ),
        Format::Text => {
            writeln!(out, "<0| {} |0>", word_text(spec).join(" ")).map_err(io)?;
            writeln!(out, "{s}").map_err(io)
        }
    }
}

#[derive(Serialize)]
struct Level {
    level: i64,
    fermion: usize,
    boson: usize,
}

#[derive(Serialize)]
struct CharacterJson {
    model: Model,
    #[serde(skip_serializing_if = "Option::is_none")]
    charge: Option<i64>,
    levels: Vec<Level>,
}

/// Graded dimensions by level: `d` with energy `k^2/2 + d` in type A, the
/// degree in type B.
pub fn character(out: &mut impl Write, model: Model, charge: i64, max_level: i64, format: Format) -> Result<()> {
    let levels: Vec<Level> = match model {
        Model::A => {
            let top = charge * charge + 2 * max_level;
            let f = character_a(charge, top);
            let b = boson_character_a(charge, top);
            let at = |v: &[(i64, usize)], e: i64| v.iter().find(|(x, _)| *x == e).map_or(0, |(_, c)| *c);
            (0..=max_level)
                .map(|d| {
                    let e = charge * charge + 2 * d;
                    Level {
                        level: d,
                        fermion: at(&f, e),
                        boson: at(&b, e),
                    }
                })
                .collect()
        }
        Model::B => character_b(max_level)
            .into_iter()
            .zip(boson_character_b(max_level))
            .map(|((d, f), (_, b))| Level {
                level: d,
                fermion: f,
                boson: b,
            })
            .collect(),
    };
    match format {
        Format::Json => json(
            out,
            &CharacterJson {
                model,
                charge: (model == Model::A).then_some(charge),
                levels,
            },
        ),
        Format::Text => {
            writeln!(out, "level fermion boson").map_err(io)?;
            for l in levels {
                writeln!(out, "{} {} {}", l.level, l.fermion, l.boson).map_err(io)?;
            }
            Ok(())
        }
    }
}

pub fn expand(expr: &str, order: &[String], cutoff: u32) -> Result<LaurentSeries> {
    let alphabet = Alphabet::new(order)?;
    let f = RationalFn::parse(expr, &alphabet)?;
    expand_series(&f, order, cutoff)
}
