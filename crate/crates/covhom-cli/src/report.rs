//! Output documents. Every field is deterministic: lists keep a fixed
//! order, big integers are decimal strings, and nothing depends on the run
//! environment, so the same invocation always yields identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use covhom::{
    ArrangementCharacter, Certificate, CharMode, CoverHomologyReport, MarkedArrangement, Verdict,
};

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Analyze(AnalyzeReport),
    Bound(BoundReport),
    Certify(CertifyReport),
    Divisor(DivisorReport),
    Lemma(LemmaReport),
    Milnor(AnalyzeReport),
    Oracle(OracleReport),
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ArrangementInfo {
    pub lines: usize,
    pub multiplicities: Vec<usize>,
}

impl ArrangementInfo {
    pub fn new(a: &MarkedArrangement) -> Self {
        ArrangementInfo { lines: a.line_count(), multiplicities: a.multiplicities().to_vec() }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CharacterInfo {
    pub eps: i64,
    pub point_weights: Vec<Vec<i64>>,
    pub point_totals: Vec<i64>,
    pub modulus: Option<u64>,
}

impl CharacterInfo {
    pub fn new(chi: &ArrangementCharacter) -> Self {
        CharacterInfo {
            eps: chi.eps(),
            point_weights: chi.point_weights().to_vec(),
            point_totals: chi.point_totals(),
            modulus: match chi.mode() {
                CharMode::Integral => None,
                CharMode::ModN(n) => Some(n),
            },
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct HomologySummary {
    pub free_rank: usize,
    /// Invariant factors > 1 as decimal strings, in divisibility order.
    pub torsion: Vec<String>,
    /// (characteristic, dim H1 over that field), one pair per requested
    /// field, in request order. Pairs rather than a map so the document
    /// survives a parse and re-serialize byte for byte.
    pub betti: Vec<(u64, usize)>,
}

impl HomologySummary {
    pub fn new(r: &CoverHomologyReport) -> Self {
        HomologySummary {
            free_rank: r.free_rank,
            torsion: r.torsion.iter().map(|t| t.to_string()).collect(),
            betti: r.field_betti.iter().copied().collect(),
        }
    }

    fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CertificateInfo {
    pub verdict: String,
    pub rank: Option<usize>,
    pub bound: Option<usize>,
    pub hypotheses: Vec<String>,
}

impl CertificateInfo {
    pub fn new(c: &Certificate) -> Self {
        let (verdict, rank) = match c.verdict {
            Verdict::TorsionFree { rank } => ("torsion_free".to_string(), Some(rank)),
            Verdict::BoundOnly { .. } => ("bound_only".to_string(), None),
            Verdict::Inconclusive => ("inconclusive".to_string(), None),
        };
        CertificateInfo { verdict, rank, bound: c.bound, hypotheses: c.hypotheses.clone() }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct OracleComparison {
    pub generators: usize,
    pub relators: usize,
    pub homology: HomologySummary,
    pub agrees: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CoverSection {
    pub sheets: u64,
    pub connected: bool,
    pub betti_bound: usize,
    pub certificate: CertificateInfo,
    pub homology: HomologySummary,
    pub oracle: Option<OracleComparison>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct AnalyzeReport {
    pub arrangement: ArrangementInfo,
    pub character: CharacterInfo,
    pub covers: Vec<CoverSection>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct BoundEntry {
    pub sheets: u64,
    pub betti_bound: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct BoundReport {
    pub arrangement: ArrangementInfo,
    pub character: CharacterInfo,
    pub covers: Vec<BoundEntry>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CertifyEntry {
    pub sheets: u64,
    pub certificate: CertificateInfo,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CertifyReport {
    pub arrangement: ArrangementInfo,
    pub character: CharacterInfo,
    pub covers: Vec<CertifyEntry>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DivisorCheckEntry {
    pub characteristic: u64,
    pub free_rank: usize,
    pub delta1: String,
    pub divides: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DivisorReport {
    pub arrangement: ArrangementInfo,
    pub character: CharacterInfo,
    pub divisor: String,
    pub checks: Vec<DivisorCheckEntry>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct LemmaMismatch {
    pub n: u64,
    pub k: i64,
    pub characteristic: u64,
    pub got: usize,
    pub expected: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct LemmaReport {
    pub max_n: u64,
    pub characteristics: Vec<u64>,
    pub cases: usize,
    pub mismatches: Vec<LemmaMismatch>,
    pub ok: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct OracleCoverSection {
    pub sheets: u64,
    pub generators: usize,
    pub relators: usize,
    pub homology: HomologySummary,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct OracleReport {
    pub arrangement: ArrangementInfo,
    pub character: CharacterInfo,
    pub covers: Vec<OracleCoverSection>,
}

fn field_name(c: u64) -> String {
    if c == 0 {
        "Q".to_string()
    } else {
        format!("F{}", c)
    }
}

fn write_header(out: &mut String, a: &ArrangementInfo, chi: &CharacterInfo) {
    let mults: Vec<String> = a.multiplicities.iter().map(|m| m.to_string()).collect();
    let _ = writeln!(out, "arrangement: {} lines, multiplicities ({})", a.lines, mults.join(", "));
    let totals: Vec<String> = chi.point_totals.iter().map(|t| t.to_string()).collect();
    let mode = match chi.modulus {
        None => "integral".to_string(),
        Some(m) => format!("mod {}", m),
    };
    let _ = writeln!(out, "character: eps = {}, point totals ({}), {}", chi.eps, totals.join(", "), mode);
}

fn write_betti(out: &mut String, h: &HomologySummary) {
    let fields: Vec<String> =
        h.betti.iter().map(|(c, b)| format!("{} {}", field_name(*c), b)).collect();
    if !fields.is_empty() {
        let _ = writeln!(out, "  betti: {}", fields.join(", "));
    }
}

/// Plain-text rendering of any report, one fact per line.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Analyze(r) | Report::Milnor(r) => {
            write_header(&mut out, &r.arrangement, &r.character);
            for c in &r.covers {
                let _ = writeln!(
                    out,
                    "N = {}: {}, H1 = {}, b1 bound {}",
                    c.sheets,
                    if c.connected { "connected" } else { "disconnected" },
                    c.homology.describe(),
                    c.betti_bound,
                );
                write_betti(&mut out, &c.homology);
                let _ = writeln!(out, "  certificate: {}", describe_certificate(&c.certificate));
                if let Some(o) = &c.oracle {
                    let _ = writeln!(
                        out,
                        "  oracle: H1 = {} from {} generators, {} relators; {}",
                        o.homology.describe(),
                        o.generators,
                        o.relators,
                        if o.agrees { "agrees" } else { "DISAGREES" },
                    );
                }
            }
        }
        Report::Bound(r) => {
            write_header(&mut out, &r.arrangement, &r.character);
            for c in &r.covers {
                let _ = writeln!(out, "N = {}: b1 bound {}", c.sheets, c.betti_bound);
            }
        }
        Report::Certify(r) => {
            write_header(&mut out, &r.arrangement, &r.character);
            for c in &r.covers {
                let _ = writeln!(out, "N = {}: {}", c.sheets, describe_certificate(&c.certificate));
                for h in &c.certificate.hypotheses {
                    let _ = writeln!(out, "  {}", h);
                }
            }
        }
        Report::Divisor(r) => {
            write_header(&mut out, &r.arrangement, &r.character);
            let _ = writeln!(out, "divisor: {}", r.divisor);
            for c in &r.checks {
                let _ = writeln!(
                    out,
                    "over {}: Delta_1 = {}, free rank {}, {}",
                    field_name(c.characteristic),
                    c.delta1,
                    c.free_rank,
                    if c.divides { "divides" } else { "DOES NOT DIVIDE" },
                );
            }
        }
        Report::Lemma(r) => {
            let chars: Vec<String> = r.characteristics.iter().map(|c| field_name(*c)).collect();
            let _ = writeln!(
                out,
                "rank identity rank(C_n^k - I) = n - gcd(k, n): {} cases, n <= {}, over {}",
                r.cases,
                r.max_n,
                chars.join(", "),
            );
            for m in &r.mismatches {
                let _ = writeln!(
                    out,
                    "MISMATCH at n = {}, k = {}, {}: got {}, expected {}",
                    m.n,
                    m.k,
                    field_name(m.characteristic),
                    m.got,
                    m.expected,
                );
            }
            let _ = writeln!(out, "{}", if r.ok { "all cases agree" } else { "IDENTITY FAILED" });
        }
        Report::Oracle(r) => {
            write_header(&mut out, &r.arrangement, &r.character);
            for c in &r.covers {
                let _ = writeln!(
                    out,
                    "N = {}: H1 = {} from {} generators, {} relators",
                    c.sheets,
                    c.homology.describe(),
                    c.generators,
                    c.relators,
                );
                write_betti(&mut out, &c.homology);
            }
        }
    }
    out.truncate(out.trim_end().len());
    out
}

fn describe_certificate(c: &CertificateInfo) -> String {
    match c.verdict.as_str() {
        "torsion_free" => format!(
            "torsion free, H1 = Z^{}",
            c.rank.expect("torsion_free always carries a rank")
        ),
        "bound_only" => format!(
            "bound only, b1 <= {}",
            c.bound.expect("bound_only always carries a bound")
        ),
        _ => "inconclusive".to_string(),
    }
}

/// Deterministic JSON: pretty-printed with a trailing newline stripped by
/// the caller's println.
pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports contain no unserializable values")
}
