//! The trace code `C_m = { (Tr(a x))_{x in R_m^*} : a in R_m }` and its
//! binary Gray image.
//!
//! Weight distributions come from two independent routes: exhaustive
//! enumeration of all `2^(3m)` codewords, and the closed forms indexed by
//! which CRT components of `a` vanish.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;

use crate::gray::{gray_word, BinaryWord, RingWord};
use crate::linalg::rank_gf2;
use crate::ring::{Parity, RingContext, RingElement};
use crate::{Error, Result};

/// Largest `m` enumerated exhaustively without an explicit override.
pub const BRUTE_FORCE_LIMIT: u32 = 5;

pub const TABLE_II_FREQUENCIES: &str = "TableII-frequencies";
pub const PROP_3_7_MARGIN: &str = "Prop3.7-margin";

/// Coordinates of the code: the unit group of `R_m` in a fixed order.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    ring: RingContext,
    positions: Vec<RingElement>,
}

impl CodeSpec {
    /// Units in canonical (lexicographic) order.
    pub fn new(ring: RingContext) -> Self {
        CodeSpec {
            positions: ring.units(),
            ring,
        }
    }

    /// Uses a caller-chosen ordering, which must be a permutation of the units.
    pub fn with_positions(ring: RingContext, positions: Vec<RingElement>) -> Result<Self> {
        let mut sorted = positions.clone();
        sorted.sort_unstable();
        if sorted != ring.units() {
            return Err(Error::InvalidPositions);
        }
        Ok(CodeSpec { ring, positions })
    }

    pub fn from_degree(m: u32, poly: Option<u32>) -> Result<Self> {
        Ok(Self::new(RingContext::from_degree(m, poly)?))
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.ring.degree()
    }

    pub fn positions(&self) -> &[RingElement] {
        &self.positions
    }

    /// Ring length `n = |R_m^*|`.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn binary_len(&self) -> usize {
        3 * self.len()
    }

    /// `Ev(a)`: the word `(Tr(a x))_x` over `R`.
    pub fn evaluate(&self, a: RingElement) -> RingWord {
        let r = &self.ring;
        RingWord::new(
            self.positions
                .iter()
                .map(|&x| r.trace(r.mul(a, x)))
                .collect(),
        )
    }

    /// Gray image of `Ev(a)`.
    pub fn evaluate_binary(&self, a: RingElement) -> BinaryWord {
        gray_word(&self.evaluate(a)).expect("trace values lie in R")
    }

    /// F2-basis `beta_j v^k` of `R_m`, ordered by `(k, j)`.
    pub fn basis(&self) -> Vec<RingElement> {
        let m = self.degree();
        (0..3)
            .flat_map(|k| {
                (0..m).map(move |j| {
                    let mut c = [0; 3];
                    c[k] = 1 << j;
                    RingElement::new(c[0], c[1], c[2])
                })
            })
            .collect()
    }

    pub fn generator_matrix(&self) -> GeneratorMatrix {
        GeneratorMatrix {
            m: self.degree(),
            poly: self.ring.field().polynomial(),
            n: self.len(),
            rows: self
                .basis()
                .into_iter()
                .map(|e| self.evaluate_binary(e))
                .collect(),
        }
    }

    /// Positions packed as `x1 | x2 << m | x3 << 2m`.
    fn packed_positions(&self) -> Vec<u64> {
        let m = self.degree();
        self.positions
            .iter()
            .map(|x| x.a1 as u64 | (x.a2 as u64) << m | (x.a3 as u64) << (2 * m))
            .collect()
    }

    /// Lee weight of `Ev(a)` against packed positions.
    ///
    /// `tr(y x) = parity(x & t_y)` for a linear form `t_y`, so each Trace
    /// component of `a x` is a parity of the packed position against a
    /// 3m-bit mask built from the forms of `a1, a2, a3`.
    fn packed_lee_weight(&self, packed: &[u64], a: RingElement) -> u64 {
        let f = self.ring.field();
        let m = self.degree();
        let (t1, t2, t3) = (
            f.trace_form(a.a1) as u64,
            f.trace_form(a.a2) as u64,
            f.trace_form(a.a3) as u64,
        );
        // A1 = a1 x1 + a2 x3 + a3 x2, A2 = a1 x2 + a2 x1 + a3 x3, A3 = a1 x3 + a2 x2 + a3 x1
        let m1 = t1 | t3 << m | t2 << (2 * m);
        let m2 = t2 | t1 << m | t3 << (2 * m);
        let m3 = t3 | t2 << m | t1 << (2 * m);
        packed
            .iter()
            .map(|&x| {
                ((x & m1).count_ones() & 1) as u64
                    + ((x & m2).count_ones() & 1) as u64
                    + ((x & m3).count_ones() & 1) as u64
            })
            .sum()
    }
}

/// Generator matrix of the binary image, one row per F2-basis element of `R_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub m: u32,
    pub poly: u32,
    /// Ring length; rows have `3n` bits.
    pub n: usize,
    pub rows: Vec<BinaryWord>,
}

impl GeneratorMatrix {
    pub fn rank(&self) -> usize {
        rank_gf2(&self.rows)
    }

    pub fn header(&self) -> String {
        format!(
            "cubicode-genmat v1 m={} poly={:#x} n={} rows={}",
            self.m,
            self.poly,
            self.n,
            self.rows.len()
        )
    }

    /// Header line, then each row as `ceil(3n / 8)` little-endian packed bytes.
    pub fn write_dump<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{}", self.header())?;
        for row in &self.rows {
            out.write_all(&row.to_le_bytes())?;
        }
        out.flush()
    }

    pub fn read_dump<R: BufRead>(mut input: R) -> Result<Self> {
        let mut header = String::new();
        input
            .read_line(&mut header)
            .map_err(|e| Error::MalformedDump(e.to_string()))?;
        let mut fields = header.trim_end().split(' ');
        if fields.next() != Some("cubicode-genmat") || fields.next() != Some("v1") {
            return Err(Error::MalformedDump(format!("bad header {header:?}")));
        }
        let mut kv = BTreeMap::new();
        for f in fields {
            let (k, v) = f
                .split_once('=')
                .ok_or_else(|| Error::MalformedDump(format!("bad field {f:?}")))?;
            kv.insert(k, v);
        }
        let get = |k: &str| -> Result<&str> {
            kv.get(k)
                .copied()
                .ok_or_else(|| Error::MalformedDump(format!("missing {k}")))
        };
        let bad = |k: &str| Error::MalformedDump(format!("bad value for {k}"));
        let m: u32 = get("m")?.parse().map_err(|_| bad("m"))?;
        let poly = u32::from_str_radix(get("poly")?.trim_start_matches("0x"), 16)
            .map_err(|_| bad("poly"))?;
        let n: usize = get("n")?.parse().map_err(|_| bad("n"))?;
        let nrows: usize = get("rows")?.parse().map_err(|_| bad("rows"))?;
        let row_bytes = (3 * n).div_ceil(8);
        let mut body = Vec::new();
        input
            .read_to_end(&mut body)
            .map_err(|e| Error::MalformedDump(e.to_string()))?;
        if body.len() != row_bytes * nrows {
            return Err(Error::MalformedDump(format!(
                "expected {} payload bytes, found {}",
                row_bytes * nrows,
                body.len()
            )));
        }
        let rows = body
            .chunks(row_bytes.max(1))
            .take(nrows)
            .map(|c| BinaryWord::from_le_bytes(c, 3 * n))
            .collect::<Result<_>>()?;
        Ok(GeneratorMatrix { m, poly, n, rows })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Formula,
    /// The frequency tables exactly as printed in the source literature.
    Published,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Formula => "formula",
            Method::Published => "published",
        }
    }
}

/// Lee weight histogram of `C_m` (weight 0 included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    /// `(weight, frequency)` sorted by weight.
    pub entries: Vec<(u64, u64)>,
    pub n_ring: u64,
    pub dimension: u32,
    pub method: Method,
}

impl WeightDistribution {
    fn from_histogram(
        hist: BTreeMap<u64, u64>,
        n_ring: u64,
        dimension: u32,
        method: Method,
    ) -> Self {
        let entries = hist.into_iter().filter(|&(_, f)| f > 0).collect();
        WeightDistribution {
            entries,
            n_ring,
            dimension,
            method,
        }
    }

    pub fn n_binary(&self) -> u64 {
        3 * self.n_ring
    }

    /// Total number of codewords counted, weight 0 included.
    pub fn mass(&self) -> u64 {
        self.entries.iter().map(|&(_, f)| f).sum()
    }

    pub fn frequency(&self, weight: u64) -> u64 {
        self.entries
            .iter()
            .find(|&&(w, _)| w == weight)
            .map_or(0, |&(_, f)| f)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().copied().filter(|&(w, _)| w > 0)
    }

    pub fn nonzero_weights(&self) -> Vec<u64> {
        self.nonzero().map(|(w, _)| w).collect()
    }

    pub fn min_nonzero(&self) -> Option<u64> {
        self.nonzero().map(|(w, _)| w).min()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.nonzero().map(|(w, _)| w).max()
    }

    /// Same weights and frequencies, ignoring the method tag.
    pub fn same_counts(&self, other: &WeightDistribution) -> bool {
        self.entries == other.entries && self.n_ring == other.n_ring
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    /// Enumerate beyond [`BRUTE_FORCE_LIMIT`].
    pub force: bool,
}

fn guard(m: u32, opts: EnumOptions) -> Result<()> {
    if m > BRUTE_FORCE_LIMIT && !opts.force {
        return Err(Error::ResourceGuard {
            m,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

/// Exact Lee weight histogram over all `2^(3m)` messages.
///
/// Work is split into fixed-size chunks of the message index range; each
/// chunk fills a private histogram and histograms are summed, so the result
/// does not depend on the number of worker threads.
pub fn brute_weight_distribution(spec: &CodeSpec, opts: EnumOptions) -> Result<WeightDistribution> {
    let m = spec.degree();
    guard(m, opts)?;
    const CHUNK: u64 = 64;
    let packed = spec.packed_positions();
    let total = spec.ring().size();
    let hist = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut local = BTreeMap::new();
            for i in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let w = spec.packed_lee_weight(&packed, spec.ring().element_at(i));
                *local.entry(w).or_insert(0u64) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (w, f) in b {
                *a.entry(w).or_insert(0) += f;
            }
            a
        });
    // Ev is F2-linear, so the zero weight counts the kernel, a power of two.
    let kernel = hist.get(&0).copied().unwrap_or(0);
    let dimension = 3 * m - kernel.trailing_zeros();
    Ok(WeightDistribution::from_histogram(
        hist,
        spec.len() as u64,
        dimension,
        Method::Brute,
    ))
}

/// Nonzero weights and their message classes for degree `m`.
///
/// Odd `m`: units, `a = a1(1+v+v^2)`, and `a(1) = 0`.
/// Even `m`: units, exactly one zero CRT component, exactly two.
pub fn closed_form_weights(m: u32) -> [u64; 3] {
    let p = |e: u32| 1u64 << e;
    let (a, b, c) = (p(3 * m - 1), p(2 * m - 1), p(m - 1));
    if m % 2 == 1 {
        [3 * (a - b - c), 3 * (a - c), 3 * (a - b)]
    } else {
        [
            3 * (a - 3 * b + 3 * c),
            3 * (a - 3 * b + p(m)),
            3 * (a - p(2 * m) + c),
        ]
    }
}

fn closed_form_distribution(
    ring: &RingContext,
    freqs: [u64; 3],
    method: Method,
) -> WeightDistribution {
    let m = ring.degree();
    let mut hist = BTreeMap::from([(0u64, 1u64)]);
    for (w, f) in closed_form_weights(m).into_iter().zip(freqs) {
        *hist.entry(w).or_insert(0) += f;
    }
    WeightDistribution::from_histogram(hist, ring.unit_count(), 3 * m, method)
}

/// Weights from the closed forms; frequencies are the CRT class sizes.
pub fn formula_weight_distribution(ring: &RingContext) -> WeightDistribution {
    let q = 1u64 << ring.degree();
    let freqs = match ring.parity() {
        Parity::Odd => [(q - 1) * (q * q - 1), q - 1, q * q - 1],
        Parity::Even => [(q - 1).pow(3), 3 * (q - 1).pow(2), 3 * (q - 1)],
    };
    closed_form_distribution(ring, freqs, Method::Formula)
}

/// The weight tables as printed, frequencies included verbatim.
pub fn published_weight_distribution(ring: &RingContext) -> WeightDistribution {
    let q = 1u64 << ring.degree();
    let freqs = match ring.parity() {
        Parity::Odd => [(q - 1) * (q * q - 1), q - 1, q * q - 1],
        Parity::Even => [(q - 1).pow(3), (q - 1).pow(2), q - 1],
    };
    closed_form_distribution(ring, freqs, Method::Published)
}

/// Outcome of comparing brute force, CRT counts and the printed tables.
#[derive(Debug, Clone)]
pub struct DistributionReport {
    pub brute: WeightDistribution,
    pub formula: WeightDistribution,
    pub published: WeightDistribution,
    /// Brute force equals the CRT-count prediction. False means a bug.
    pub brute_matches_formula: bool,
    pub published_matches: bool,
    pub erratum_flags: Vec<String>,
}

impl DistributionReport {
    /// Weights in the printed table that disagree with the brute count,
    /// as `(weight, printed, counted)`.
    pub fn published_mismatches(&self) -> Vec<(u64, u64, u64)> {
        self.published
            .entries
            .iter()
            .filter(|&&(w, f)| self.brute.frequency(w) != f)
            .map(|&(w, f)| (w, f, self.brute.frequency(w)))
            .collect()
    }
}

/// Erratum flags raised by the printed tables at degree `m`.
pub fn table_errata(ring: &RingContext, brute: &WeightDistribution) -> Vec<String> {
    let published = published_weight_distribution(ring);
    if ring.parity() == Parity::Even && !published.same_counts(brute) {
        vec![TABLE_II_FREQUENCIES.to_string()]
    } else {
        Vec::new()
    }
}

pub fn verify_distribution(spec: &CodeSpec, opts: EnumOptions) -> Result<DistributionReport> {
    let brute = brute_weight_distribution(spec, opts)?;
    let formula = formula_weight_distribution(spec.ring());
    let published = published_weight_distribution(spec.ring());
    let brute_matches_formula = brute.same_counts(&formula) && brute.dimension == formula.dimension;
    let published_matches = brute.same_counts(&published);
    let mut erratum_flags = Vec::new();
    if brute_matches_formula && !published_matches {
        erratum_flags = table_errata(spec.ring(), &brute);
    }
    Ok(DistributionReport {
        brute,
        formula,
        published,
        brute_matches_formula,
        published_matches,
        erratum_flags,
    })
}
