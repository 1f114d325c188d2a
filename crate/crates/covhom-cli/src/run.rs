//! Command runners. Each returns a `Report` plus the process exit code:
//! 0 for success, 2 when a mathematical cross-check failed (rank identity,
//! oracle agreement, divisibility); input problems surface as `AppError`
//! with code 1.

use num_integer::Integer;

use covhom::{
    betti_bound, certify, divisor_check, h1_cover, lemma_rank, oracle_h1, schreier_presentation,
    williams_parameters, ArrangementCharacter, CharMode, Error, FieldSelector, MarkedArrangement,
};

use crate::jobspec::JobSpec;
use crate::report::{
    AnalyzeReport, ArrangementInfo, BoundEntry, BoundReport, CertificateInfo, CertifyEntry,
    CertifyReport, CharacterInfo, CoverSection, DivisorCheckEntry, DivisorReport, HomologySummary,
    LemmaMismatch, LemmaReport, OracleComparison, OracleCoverSection, OracleReport, Report,
};

pub struct AppError {
    pub code: i32,
    pub message: String,
}

impl AppError {
    pub fn input(message: String) -> Self {
        AppError { code: 1, message }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Internal(_) | Error::ChainCondition { .. } => 2,
            _ => 1,
        };
        AppError { code, message: e.to_string() }
    }
}

pub struct Output {
    pub report: Report,
    pub code: i32,
}

const SHEET_CAP: u64 = 64;
const SIZE_CAP: u64 = 4096;

fn guard_sizes(lines: usize, sheets: &[u64], force: bool) -> Result<(), AppError> {
    if force {
        return Ok(());
    }
    for &n in sheets {
        if n > SHEET_CAP {
            return Err(AppError::input(format!(
                "N = {} exceeds the sheet cap of {}; pass --force to run anyway",
                n, SHEET_CAP
            )));
        }
        if lines as u64 * n > SIZE_CAP {
            return Err(AppError::input(format!(
                "problem size n*N = {} exceeds {}; pass --force to run anyway",
                lines as u64 * n,
                SIZE_CAP
            )));
        }
    }
    Ok(())
}

fn fields_from(chars: &[u64]) -> Result<Vec<FieldSelector>, AppError> {
    chars.iter().map(|&c| FieldSelector::new(c).map_err(AppError::from)).collect()
}

fn default_sheets(chi: &ArrangementCharacter) -> Vec<u64> {
    match chi.mode() {
        CharMode::ModN(m) => vec![m],
        CharMode::Integral => (1..=8).collect(),
    }
}

fn load_pair(
    spec: &JobSpec,
    integral: bool,
    milnor: bool,
) -> Result<(MarkedArrangement, ArrangementCharacter), AppError> {
    let a = spec.arrangement()?;
    let chi = if milnor { williams_parameters(&a).0 } else { spec.character(&a, integral)? };
    Ok((a, chi))
}

#[allow(clippy::too_many_arguments)]
pub fn analyze(
    spec: &JobSpec,
    sheets: &[u64],
    primes: &[u64],
    integral: bool,
    oracle: bool,
    force: bool,
    milnor: bool,
) -> Result<Output, AppError> {
    let (a, chi) = load_pair(spec, integral, milnor)?;
    let sheets = if sheets.is_empty() { default_sheets(&chi) } else { sheets.to_vec() };
    guard_sizes(a.line_count(), &sheets, force)?;
    let fields = fields_from(primes)?;
    let p = a.boundary_presentation();
    let pchi = chi.presentation_character(&a);

    let mut covers = Vec::new();
    let mut code = 0;
    for &n in &sheets {
        let h = h1_cover(&p, &pchi, n, &fields)?;
        let cert = certify(&a, &chi, n)?;
        let oracle_section = if oracle && h.connected {
            let sp = schreier_presentation(&p, &pchi, n)?;
            let oh = oracle_h1(&p, &pchi, n, &fields)?;
            let agrees = oh == h;
            if !agrees {
                code = 2;
            }
            Some(OracleComparison {
                generators: sp.generator_count(),
                relators: sp.relator_count(),
                homology: HomologySummary::new(&oh),
                agrees,
            })
        } else {
            None
        };
        covers.push(CoverSection {
            sheets: n,
            connected: h.connected,
            betti_bound: betti_bound(&a, &chi, n)?,
            certificate: CertificateInfo::new(&cert),
            homology: HomologySummary::new(&h),
            oracle: oracle_section,
        });
    }

    let body = AnalyzeReport {
        arrangement: ArrangementInfo::new(&a),
        character: CharacterInfo::new(&chi),
        covers,
    };
    let report = if milnor { Report::Milnor(body) } else { Report::Analyze(body) };
    Ok(Output { report, code })
}

pub fn bound(spec: &JobSpec, sheets: &[u64], integral: bool, force: bool) -> Result<Output, AppError> {
    let (a, chi) = load_pair(spec, integral, false)?;
    let sheets = if sheets.is_empty() { default_sheets(&chi) } else { sheets.to_vec() };
    guard_sizes(a.line_count(), &sheets, force)?;
    let covers = sheets
        .iter()
        .map(|&n| Ok(BoundEntry { sheets: n, betti_bound: betti_bound(&a, &chi, n)? }))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Output {
        report: Report::Bound(BoundReport {
            arrangement: ArrangementInfo::new(&a),
            character: CharacterInfo::new(&chi),
            covers,
        }),
        code: 0,
    })
}

pub fn certify_covers(
    spec: &JobSpec,
    sheets: &[u64],
    integral: bool,
    force: bool,
) -> Result<Output, AppError> {
    let (a, chi) = load_pair(spec, integral, false)?;
    let sheets = if sheets.is_empty() { default_sheets(&chi) } else { sheets.to_vec() };
    guard_sizes(a.line_count(), &sheets, force)?;
    let covers = sheets
        .iter()
        .map(|&n| {
            Ok(CertifyEntry { sheets: n, certificate: CertificateInfo::new(&certify(&a, &chi, n)?) })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Output {
        report: Report::Certify(CertifyReport {
            arrangement: ArrangementInfo::new(&a),
            character: CharacterInfo::new(&chi),
            covers,
        }),
        code: 0,
    })
}

pub fn divisor(spec: &JobSpec, chars: &[u64], integral: bool) -> Result<Output, AppError> {
    let (a, chi) = load_pair(spec, integral, false)?;
    let fields = fields_from(chars)?;
    let rep = divisor_check(&a, &chi, &fields)?;
    let checks: Vec<DivisorCheckEntry> = rep
        .checks
        .iter()
        .map(|c| DivisorCheckEntry {
            characteristic: c.characteristic,
            free_rank: c.free_rank,
            delta1: c.delta1.to_string(),
            divides: c.divides,
        })
        .collect();
    let code = if checks.iter().all(|c| c.divides) { 0 } else { 2 };
    Ok(Output {
        report: Report::Divisor(DivisorReport {
            arrangement: ArrangementInfo::new(&a),
            character: CharacterInfo::new(&chi),
            divisor: rep.divisor.to_string(),
            checks,
        }),
        code,
    })
}

pub fn lemma(max_n: u64, chars: &[u64], force: bool) -> Result<Output, AppError> {
    if !force && max_n > SHEET_CAP {
        return Err(AppError::input(format!(
            "--max-n {} exceeds the cap of {}; pass --force to run anyway",
            max_n, SHEET_CAP
        )));
    }
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for n in 1..=max_n {
        for k in 0..=(2 * n) as i64 {
            for &c in chars {
                let field = FieldSelector::new(c)?;
                let got = lemma_rank(n, k, field)?;
                let expected = (n - (k as u64 % n).gcd(&n)) as usize;
                cases += 1;
                if got != expected {
                    mismatches.push(LemmaMismatch { n, k, characteristic: c, got, expected });
                }
            }
        }
    }
    let ok = mismatches.is_empty();
    Ok(Output {
        report: Report::Lemma(LemmaReport {
            max_n,
            characteristics: chars.to_vec(),
            cases,
            mismatches,
            ok,
        }),
        code: if ok { 0 } else { 2 },
    })
}

pub fn oracle(
    spec: &JobSpec,
    sheets: &[u64],
    primes: &[u64],
    integral: bool,
    force: bool,
) -> Result<Output, AppError> {
    let (a, chi) = load_pair(spec, integral, false)?;
    let sheets = if sheets.is_empty() { default_sheets(&chi) } else { sheets.to_vec() };
    guard_sizes(a.line_count(), &sheets, force)?;
    let fields = fields_from(primes)?;
    let p = a.boundary_presentation();
    let pchi = chi.presentation_character(&a);
    let mut covers = Vec::new();
    for &n in &sheets {
        let sp = schreier_presentation(&p, &pchi, n)?;
        let oh = oracle_h1(&p, &pchi, n, &fields)?;
        covers.push(OracleCoverSection {
            sheets: n,
            generators: sp.generator_count(),
            relators: sp.relator_count(),
            homology: HomologySummary::new(&oh),
        });
    }
    Ok(Output {
        report: Report::Oracle(OracleReport {
            arrangement: ArrangementInfo::new(&a),
            character: CharacterInfo::new(&chi),
            covers,
        }),
        code: 0,
    })
}
