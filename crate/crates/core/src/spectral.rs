//! Spectral analysis of partially ranked data.
//!
//! A ballot is a partial permutation `σ` sending candidate `c` to the
//! position `σ(c)` it was ranked in; unranked candidates are outside the
//! domain. Counts of ballots form a function on `R_n`, which becomes an
//! element of `CR_n` under one of two association models: `Σ f(s) s`
//! (semigroup) or `Σ f(s) ⌊s⌋` (groupoid). Each isotypic component is found by
//! transforming, zeroing every other block and inverting, and its energy is
//! `⟨p, p⟩₂`. The isotypic components are orthogonal for `⟨·,·⟩₂`, so the
//! energies add up to `⟨f, f⟩₂`.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{inner2, to_groupoid, AlgebraElement, Basis};
use crate::error::{Result, RookError};
use crate::fft::{FourierCoefficients, RookFourier};
use crate::reps::RookLabel;
use crate::rook::{parse_flat, print_flat, PartialPermutation};

/// Ballot counts on `R_n`, merged and in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    n: usize,
    records: BTreeMap<PartialPermutation, f64>,
}

impl Dataset {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            records: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `count` voters for `ballot`, merging with earlier records.
    pub fn add(&mut self, ballot: PartialPermutation, count: f64) -> Result<()> {
        if ballot.n() != self.n {
            return Err(RookError::Dimension(format!(
                "ballot {ballot} is not on {} candidates",
                self.n
            )));
        }
        if !count.is_finite() || count < 0.0 {
            return Err(RookError::InvalidArgument(format!(
                "count {count} must be a nonnegative real"
            )));
        }
        *self.records.entry(ballot).or_default() += count;
        Ok(())
    }

    pub fn records(&self) -> impl Iterator<Item = (&PartialPermutation, f64)> {
        self.records.iter().map(|(b, c)| (b, *c))
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The element of `CR_n` whose coefficient on the `association` basis
    /// vector of each ballot is its count.
    pub fn to_function(&self, association: Basis) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.n,
            association,
            self.records.iter().map(|(b, c)| (*b, Complex64::new(*c, 0.0))),
        )
        .expect("ballots have the dataset's size")
    }

    /// CSV with header `ballot,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ballot,count\n");
        for (b, c) in &self.records {
            out.push_str(&format!("{},{c}\n", print_flat(b)));
        }
        out
    }
}

/// Reads a ballot CSV (`ballot,count` header, ballots in the flat `a->b;c->d`
/// form, empty for the zero map).
pub fn ingest(path: impl AsRef<Path>, n: usize) -> Result<Dataset> {
    let file = std::fs::File::open(path.as_ref())?;
    ingest_reader(file, n)
}

/// [`ingest`] from any reader. Blank lines are skipped; errors carry the
/// 1-based line number.
pub fn ingest_reader(mut reader: impl Read, n: usize) -> Result<Dataset> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let header = lines.next().map_or("", |(_, l)| l);
    if header.replace(' ', "") != "ballot,count" {
        return Err(RookError::Ingest {
            line: 1,
            msg: format!("expected header `ballot,count`, found `{header}`"),
        });
    }
    let mut data = Dataset::new(n);
    for (line, content) in lines.filter(|(_, l)| !l.is_empty()) {
        let err = |msg: String| RookError::Ingest { line, msg };
        let fields: Vec<&str> = content.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(err(format!("expected 2 fields, found {}", fields.len())));
        }
        let ballot = parse_flat(fields[0], n).map_err(|e| err(e.to_string()))?;
        let count: f64 = fields[1]
            .parse()
            .map_err(|_| err(format!("count `{}` is not a number", fields[1])))?;
        data.add(ballot, count).map_err(|e| err(e.to_string()))?;
    }
    Ok(data)
}

/// Projection of `f` onto the isotypic component of `label`, in groupoid
/// coordinates.
pub fn isotypic_project(f: &AlgebraElement, label: &RookLabel) -> Result<AlgebraElement> {
    let plan = RookFourier::new(f.n());
    let hat = transform_any(&plan, f)?;
    plan.invert(&hat.isolate(label)?)
}

fn transform_any(plan: &RookFourier, f: &AlgebraElement) -> Result<FourierCoefficients> {
    match f.basis() {
        Basis::Groupoid => plan.stein_fft(f),
        Basis::Semigroup => plan.stein_fft_semigroup(f),
    }
}

/// Energy in one isotypic component.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabelEnergy {
    pub lambda: Vec<usize>,
    pub k: usize,
    pub energy: f64,
    pub fraction: f64,
}

/// Per-label energies `⟨p_λ, p_λ⟩₂` of a function, with their share of the total `⟨f, f⟩₂`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub association: Basis,
    pub total: f64,
    pub labels: Vec<LabelEnergy>,
}

/// Energy spectrum of the ballot function `f` under `association`.
pub fn spectrum(data: &Dataset, association: Basis) -> Result<SpectrumReport> {
    spectrum_of(&data.to_function(association))
}

/// Energy spectrum of an algebra element; the association is its basis.
pub fn spectrum_of(f: &AlgebraElement) -> Result<SpectrumReport> {
    let plan = RookFourier::new(f.n());
    let hat = transform_any(&plan, f)?;
    let g = to_groupoid_any(f)?;
    let total = inner2(&g, &g)?.re;
    let mut labels = Vec::with_capacity(plan.labels().len());
    for label in plan.labels() {
        let p = plan.invert(&hat.isolate(label)?)?;
        let energy = inner2(&p, &p)?.re;
        labels.push(LabelEnergy {
            lambda: label.lambda().parts().to_vec(),
            k: label.k(),
            energy,
            fraction: if total > 0.0 { energy / total } else { 0.0 },
        });
    }
    Ok(SpectrumReport {
        n: f.n(),
        association: f.basis(),
        total,
        labels,
    })
}

fn to_groupoid_any(f: &AlgebraElement) -> Result<AlgebraElement> {
    match f.basis() {
        Basis::Groupoid => Ok(f.clone()),
        Basis::Semigroup => to_groupoid(f),
    }
}

impl SpectrumReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// CSV with columns `lambda,k,energy,fraction`; `lambda` is written as `(2,1)`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["lambda", "k", "energy", "fraction"])
            .expect("in-memory write");
        for l in &self.labels {
            let parts: Vec<String> = l.lambda.iter().map(|p| p.to_string()).collect();
            w.write_record([
                format!("({})", parts.join(",")),
                l.k.to_string(),
                format!("{:.12e}", l.energy),
                format!("{:.12e}", l.fraction),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }

    /// The label carrying the most energy.
    pub fn dominant(&self) -> Option<&LabelEnergy> {
        self.labels
            .iter()
            .max_by(|a, b| a.energy.total_cmp(&b.energy))
    }
}
