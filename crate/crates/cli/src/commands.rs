use std::time::Instant;

use serde_json::{Map, Value};
use unimod::configsystem::{
    build_system, rank_diagnostic, verify_theorem_with, ExpectedDeterminant, Formulation, SystemInputs,
    SystemSpec, Verdict,
};
use unimod::exactmath::{format_rational, int};
use unimod::harmonics::sphere_moment_const;
use unimod::latoracle::{enumerate_shell, power_sum, shell_counts, weighted_theta_sum, GramLattice};
use unimod::modforms::{dim_modular_forms, extremal_theta};
use unimod::{Error, PolyT, Rational};

use crate::report::{list, s, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Exit code for a library error: bad input or exhausted budgets are usage
/// errors, anything else is a mathematical failure.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Invalid(_)
        | Error::Unsupported(_)
        | Error::Resource(_)
        | Error::EmptySpace(_)
        | Error::Truncation { .. }
        | Error::DegreeBound { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Which formulations `verify` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    One(Formulation),
    Both,
}

impl Selection {
    pub fn formulations(self) -> Vec<Formulation> {
        match self {
            Self::One(f) => vec![f],
            Self::Both => Formulation::ALL.to_vec(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::One(f) => f.name(),
            Self::Both => "both",
        }
    }
}

/// Runs `body`, stamping timing and turning library errors into an error
/// report with the matching exit code.
fn timed(mut report: Report, body: impl FnOnce(&mut Report) -> Result<u8, Error>) -> Report {
    let start = Instant::now();
    match body(&mut report) {
        Ok(code) => {
            report.exit_code = code;
            if report.status.is_empty() {
                report.status = if code == EXIT_OK { "ok" } else { "failed" }.into();
            }
        }
        Err(e) => {
            report.exit_code = exit_code_for(&e);
            report.status = if report.exit_code == EXIT_USAGE { "usage-error" } else { "error" }.into();
            report.note(e.to_string());
        }
    }
    report
        .timing
        .insert("elapsed_ms".into(), s(start.elapsed().as_millis()));
    report
}

/// Coefficients `a(0), a(2), …, a(2·terms)` of the extremal theta series.
pub fn cmd_theta(rank: u64, terms: Option<usize>) -> Report {
    let terms = terms.unwrap_or(rank as usize / 24 + 3);
    let mut report = Report::new(format!("theta --rank {rank} --terms {terms}"));
    report.input("rank", rank).input("terms", terms);
    timed(report, |rep| {
        let theta = extremal_theta(rank, terms + 1)?;
        let mut coeffs = Map::new();
        for (k, a) in theta.counts().iter().enumerate() {
            coeffs.insert(format!("a({})", 2 * k), s(a));
        }
        rep.result("weight", s(rank / 2))
            .result("space_dimension", s(dim_modular_forms(rank as i64 / 2)))
            .result("min_norm", s(theta.min_norm()))
            .result("coefficients", Value::Object(coeffs))
            .result("nonnegative_integral", s(theta.is_nonnegative_integral()));
        Ok(EXIT_OK)
    })
}

fn verdict_value(v: &Verdict) -> Value {
    let r = v.r;
    let mut m = Map::new();
    m.insert("formulation".into(), s(v.formulation));
    m.insert("determinant".into(), s(&v.determinant));
    m.insert("primitive_determinant".into(), s(v.determinant.primitive()));
    let structural = &PolyT::t() * &PolyT::from_ints(&[-2 * r as i64, 1]);
    if let Ok(rest) = v.determinant.exact_divide(&structural) {
        m.insert("cofactor_of_t(t-2r)".into(), s(rest.primitive()));
    }
    let fm = &v.factor_match;
    m.insert("factor_match".into(), s(if fm.success { "matched" } else { "mismatch" }));
    if let Some(c) = &fm.constant {
        m.insert("proportionality_constant".into(), s(format_rational(c)));
    }
    if let Some(f) = &fm.failing_factor {
        m.insert("first_non_dividing_factor".into(), s(f));
    }
    if !fm.success {
        m.insert("leftover".into(), s(&fm.leftover));
    }
    m.insert("rational_roots".into(), list(v.rational_roots.iter().map(format_rational)));
    m.insert(
        format!("integer_roots_at_least_{}", 2 * r + 2),
        list(&v.offending_roots),
    );
    m.insert("structural_roots_present".into(), s(v.structural_roots_present));
    m.insert("theorem_verified".into(), s(v.theorem_verified));
    m.insert("notes".into(), list(&v.notes));
    Value::Object(m)
}

pub fn cmd_verify(r: u32, selection: Selection) -> Report {
    let mut report = Report::new(format!("verify --r {r} --formulation {}", selection.name()));
    report.input("r", r).input("formulation", selection.name());
    timed(report, |rep| {
        let spec = SystemSpec::new(r, Formulation::Rigorous)?;
        rep.input("rank", spec.rank());
        if !spec.theorem_mode() {
            return diagnostic(rep, r);
        }
        let inputs = SystemInputs::compute(r)?;
        rep.result(&format!("a({})", spec.min_norm()), s(&inputs.a_min))
            .result(&format!("a({})", spec.next_norm()), s(&inputs.a_next))
            .result("c_4r", s(format_rational(&inputs.cusp.c_4r)))
            .result("c_4r+4", s(format_rational(&inputs.cusp.c_4r_plus_4)));
        if let Some(expected) = ExpectedDeterminant::for_r(r) {
            rep.result("reference_factors", list(&expected.factors))
                .result("reference_prefactor", s(expected.prefactor_value()));
        }
        let theorem = verify_theorem_with(r, &selection.formulations())?;
        rep.result(
            "verdicts",
            Value::Array(theorem.verdicts.iter().map(verdict_value).collect()),
        );
        rep.result("theorem_verified", s(theorem.verified()));
        match theorem.accepted() {
            Some(f) => {
                rep.result("accepted_formulation", s(f));
                rep.status = "verified".into();
                Ok(EXIT_OK)
            }
            None => {
                rep.status = "not-verified".into();
                rep.note("no formulation reproduced the reference factorization with no integer root >= 2r+2");
                Ok(EXIT_FAILURE)
            }
        }
    })
}

fn diagnostic(rep: &mut Report, r: u32) -> Result<u8, Error> {
    let d = rank_diagnostic(r)?;
    rep.result("min_norm", s(d.min_norm))
        .result("first_shell_norm_required", s(4 * r))
        .result("unknowns", s(d.unknowns))
        .result("equations", s(d.equations));
    let by_degree = d
        .by_degree
        .iter()
        .map(|b| {
            let mut m = Map::new();
            m.insert("degree".into(), s(b.degree));
            m.insert("quotient_weight".into(), s(b.quotient_weight));
            m.insert("quotient_dim".into(), s(b.quotient_dim));
            m.insert("equations".into(), s(b.equations));
            Value::Object(m)
        })
        .collect();
    rep.result("by_degree", Value::Array(by_degree))
        .result("applicable", s(d.applicable));
    rep.status = "diagnostic-only".into();
    rep.note(format!(
        "r = {r}: an extremal lattice of rank {} has minimal norm {}, not {}, and the two lowest shells \
         receive {} conditions for {} unknowns, so the determinant method does not apply",
        d.rank,
        d.min_norm,
        4 * r,
        d.equations,
        d.unknowns
    ));
    Ok(EXIT_USAGE)
}

pub fn cmd_system(r: u32, formulation: Formulation, dump: bool) -> Report {
    let mut cmd = format!("system --r {r} --formulation {formulation}");
    if dump {
        cmd.push_str(" --dump");
    }
    let mut report = Report::new(cmd);
    report.input("r", r).input("formulation", formulation);
    timed(report, |rep| {
        let sys = build_system(SystemSpec::new(r, formulation)?)?;
        let m = &sys.matrix;
        let rhs = sys.rhs_col();
        rep.result("rows", s(m.rows()))
            .result("cols", s(m.cols()))
            .result("diagnostic_only", s(sys.diagnostic_only))
            .result("row_labels", list(&sys.row_labels))
            .result("col_labels", list(&sys.col_labels));
        let cusp_rhs: Vec<String> = (0..2)
            .map(|i| m.get(4 * r as usize + i, rhs).to_string())
            .collect();
        rep.result("cusp_rows_rhs", list(cusp_rhs));
        if dump {
            let rows = (0..m.rows())
                .map(|i| {
                    let mut entries = Map::new();
                    for (j, label) in sys.col_labels.iter().enumerate() {
                        entries.insert(label.clone(), s(m.get(i, j)));
                    }
                    let mut row = Map::new();
                    row.insert("label".into(), s(&sys.row_labels[i]));
                    row.insert("entries".into(), Value::Object(entries));
                    Value::Object(row)
                })
                .collect();
            rep.result("matrix", Value::Array(rows));
        }
        if sys.diagnostic_only {
            rep.note("outside r = 1, 2, 3 the system is built for inspection only");
        }
        Ok(EXIT_OK)
    })
}

pub fn cmd_oracle(lattice: &str, norm: u32, x0: Option<usize>, degree: Option<u32>) -> Report {
    let mut cmd = format!("oracle --lattice {lattice} --norm {norm}");
    if let Some(i) = x0 {
        cmd.push_str(&format!(" --x0 {i}"));
    }
    if let Some(d) = degree {
        cmd.push_str(&format!(" --degree {d}"));
    }
    let mut report = Report::new(cmd);
    report.input("lattice", lattice).input("norm", norm);
    if let Some(i) = x0 {
        report.input("x0", i);
    }
    if let Some(d) = degree {
        report.input("degree", d);
    }
    timed(report, |rep| {
        let lat = GramLattice::by_name(lattice)?;
        let shell = enumerate_shell(&lat, norm)?;
        rep.result("rank", s(lat.rank()))
            .result("determinant", s(format_rational(&lat.determinant())))
            .result("shell_size", s(shell.len()))
            .result("closed_under_negation", s(shell.is_closed_under_negation()));
        if x0.is_none() && degree.is_none() {
            return Ok(EXIT_OK);
        }
        let idx = x0.unwrap_or(0);
        let v = shell.vectors.get(idx).ok_or_else(|| {
            Error::Invalid(format!("x0 index {idx} out of range for a shell of {} vectors", shell.len()))
        })?;
        let x0_norm = lat.norm(v);
        rep.result("x0_vector", list(v.iter()))
            .result("x0_norm", s(x0_norm));
        let mut hist = Map::new();
        for (j, c) in shell_counts(&lat, &shell, v) {
            hist.insert(j.to_string(), s(c));
        }
        rep.result("inner_product_counts", Value::Object(hist));

        let size = int(shell.len() as i64);
        let scale = int(norm as i64 * x0_norm);
        let mut moments = Vec::new();
        for k in 1..=3u32 {
            let got = Rational::from_integer(power_sum(&lat, &shell, v, 2 * k));
            let predicted = &size * sphere_moment_const(k, lat.rank() as u32) * scale.pow(k as i32);
            let mut m = Map::new();
            m.insert("exponent".into(), s(2 * k));
            m.insert("enumerated".into(), s(format_rational(&got)));
            m.insert("predicted".into(), s(format_rational(&predicted)));
            m.insert("equal".into(), s(got == predicted));
            moments.push(Value::Object(m));
        }
        rep.result("power_sums", Value::Array(moments));
        rep.note("predicted power sums assume the design property; they can differ once a nonzero cusp form of the matching weight exists");
        if let Some(d) = degree {
            let w = weighted_theta_sum(&lat, &shell, v, d)?;
            rep.result("weighted_theta_sum", s(format_rational(&w)));
        }
        Ok(EXIT_OK)
    })
}
