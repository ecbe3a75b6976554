use std::fmt::Write as _;

use serde::Serialize;

use cubicode::analysis::GriesmerReport;
use cubicode::code::{CodeSpec, WeightDistribution};
use cubicode::ring::{Parity, RingContext};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionEntry {
    pub weight: u64,
    pub frequency: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GriesmerSummary {
    pub sum: u64,
    pub optimal: bool,
}

impl From<&GriesmerReport> for GriesmerSummary {
    fn from(r: &GriesmerReport) -> Self {
        GriesmerSummary {
            sum: r.sum,
            optimal: r.optimal,
        }
    }
}

/// The single JSON envelope shared by every command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub m: u32,
    pub parity: String,
    pub field_polynomial: String,
    pub ring_length: u64,
    pub binary_length: u64,
    pub dimension: u32,
    pub method: Option<String>,
    pub distribution: Vec<DistributionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crt_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub griesmer: Option<GriesmerSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_lee_distance: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sss_class: Option<String>,
    pub erratum_flags: Vec<String>,
}

/// `F_{2^m}+F_{4^m}` or `F_{2^m}^3`, with the field sizes written out.
pub fn crt_type(ring: &RingContext) -> String {
    let q = 1u64 << ring.degree();
    match ring.parity() {
        Parity::Odd => format!("F_{q}⊕F_{}", q * q),
        Parity::Even => format!("F_{q}³"),
    }
}

impl CodeSummary {
    pub fn skeleton(ring: &RingContext) -> Self {
        CodeSummary {
            m: ring.degree(),
            parity: ring.parity().as_str().to_string(),
            field_polynomial: format!("{:#x}", ring.field().polynomial()),
            ring_length: ring.unit_count(),
            binary_length: 3 * ring.unit_count(),
            dimension: 3 * ring.degree(),
            method: None,
            distribution: Vec::new(),
            crt_type: None,
            griesmer: None,
            dual_lee_distance: None,
            all_minimal: None,
            sss_class: None,
            erratum_flags: Vec::new(),
        }
    }

    pub fn for_spec(spec: &CodeSpec) -> Self {
        let mut s = Self::skeleton(spec.ring());
        s.ring_length = spec.len() as u64;
        s.binary_length = spec.binary_len() as u64;
        s
    }

    pub fn set_distribution(&mut self, dist: &WeightDistribution) {
        self.method = Some(dist.method.as_str().to_string());
        self.dimension = dist.dimension;
        self.distribution = dist
            .entries
            .iter()
            .map(|&(weight, frequency)| DistributionEntry { weight, frequency })
            .collect();
    }

    pub fn add_flags(&mut self, flags: impl IntoIterator<Item = String>) {
        for f in flags {
            if !self.erratum_flags.contains(&f) {
                self.erratum_flags.push(f);
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,frequency\n");
        for e in &self.distribution {
            writeln!(out, "{},{}", e.weight, e.frequency).unwrap();
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: String| writeln!(out, "{k:<18} {v}").unwrap();
        row("m", self.m.to_string());
        row("parity", self.parity.clone());
        row("field polynomial", self.field_polynomial.clone());
        if let Some(crt) = &self.crt_type {
            row("crt", crt.clone());
        }
        row("ring length", self.ring_length.to_string());
        row("binary length", self.binary_length.to_string());
        row("dimension", self.dimension.to_string());
        if let Some(method) = &self.method {
            row("method", method.clone());
        }
        if let Some(g) = &self.griesmer {
            row("griesmer sum", g.sum.to_string());
            row("optimal", g.optimal.to_string());
        }
        if let Some(d) = self.dual_lee_distance {
            row("dual lee distance", d.to_string());
        }
        if let Some(a) = self.all_minimal {
            row("all minimal", a.to_string());
        }
        if let Some(s) = &self.sss_class {
            row("sss class", s.clone());
        }
        if !self.erratum_flags.is_empty() {
            row("errata", self.erratum_flags.join(", "));
        }
        if !self.distribution.is_empty() {
            let width = self
                .distribution
                .iter()
                .map(|e| e.weight.to_string().len())
                .max()
                .unwrap_or(0)
                .max("weight".len());
            writeln!(out, "\n{:>width$}  frequency", "weight").unwrap();
            for e in &self.distribution {
                writeln!(out, "{:>width$}  {}", e.weight, e.frequency).unwrap();
            }
        }
        out
    }
}
