//! The overdetermined linear system in the shell counts of a hypothetical
//! minimal class representative, and its certification.
//!
//! Let `L` be extremal even unimodular of rank `40r`, `r ≤ 3`, so its
//! minimal norm is `4r`. Suppose some class of `L` modulo the sublattice
//! generated by the norm-`4r` and norm-`(4r+2)` vectors has a minimal
//! representative `x₀` with `⟨x₀, x₀⟩ = 2t`, `t ≥ 2r + 2`. Minimality
//! bounds `|⟨x₀, x⟩|` by `2r` on the first shell and `2r + 1` on the
//! second, leaving the `4r + 3` unknowns
//!
//! ```text
//! N_j = #{x : ⟨x,x⟩ = 4r,   ⟨x,x₀⟩ = j},  j = 0..=2r
//! M_j = #{x : ⟨x,x⟩ = 4r+2, ⟨x,x₀⟩ = j},  j = 0..=2r+1
//! ```
//!
//! Weighted theta series give `4r + 4` linear equations in these unknowns
//! with coefficients in `Q[t]`. Appending the negated right-hand side as a
//! final column yields a square matrix whose determinant must vanish at
//! `t` for the system to be solvable. A determinant without integer roots
//! `t ≥ 2r + 2` rules out every such class.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{int, linalg, rational_roots, PolyMatrix, PolyT, Rational};
use crate::harmonics::{pure_moment_row, zonal_shell_row, MomentRow};
use crate::modforms::{cusp_leading, dim_modular_forms, extremal_theta, min_norm, CuspLeading};

/// Which equations close the system once the moment and cusp rows are in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formulation {
    /// Spherical-moment identity at exponent `4r + 2` on both shells.
    PaperLiteral,
    /// Vanishing of the degree-`(4r+2)` zonal harmonic sum on both shells.
    Rigorous,
}

impl Formulation {
    pub const ALL: [Formulation; 2] = [Formulation::PaperLiteral, Formulation::Rigorous];

    pub fn name(self) -> &'static str {
        match self {
            Self::PaperLiteral => "literal",
            Self::Rigorous => "rigorous",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "literal" | "paper-literal" => Ok(Self::PaperLiteral),
            "rigorous" => Ok(Self::Rigorous),
            other => Err(Error::Invalid(format!(
                "unknown formulation {other:?} (expected literal or rigorous)"
            ))),
        }
    }
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SystemSpec {
    pub r: u32,
    pub formulation: Formulation,
}

impl SystemSpec {
    pub fn new(r: u32, formulation: Formulation) -> Result<Self> {
        if r == 0 {
            return Err(Error::Invalid("r must be at least 1".into()));
        }
        Ok(Self { r, formulation })
    }

    pub fn rank(&self) -> u32 {
        40 * self.r
    }

    /// Norm of the first shell, `4r`.
    pub fn min_norm(&self) -> u32 {
        4 * self.r
    }

    pub fn next_norm(&self) -> u32 {
        4 * self.r + 2
    }

    /// `N_0..N_{2r}`.
    pub fn n_unknowns(&self) -> usize {
        2 * self.r as usize + 1
    }

    /// `M_0..M_{2r+1}`.
    pub fn m_unknowns(&self) -> usize {
        2 * self.r as usize + 2
    }

    pub fn unknowns(&self) -> usize {
        self.n_unknowns() + self.m_unknowns()
    }

    /// Only `r ≤ 3` has minimal norm `4r`; larger `r` is diagnostic only.
    pub fn theorem_mode(&self) -> bool {
        (1..=3).contains(&self.r)
    }
}

/// Modular-form data the system is built from, always recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemInputs {
    /// `a(4r, L)`.
    pub a_min: BigInt,
    /// `a(4r+2, L)`.
    pub a_next: BigInt,
    pub cusp: CuspLeading,
}

impl SystemInputs {
    pub fn compute(r: u32) -> Result<Self> {
        let terms = 2 * r as usize + 3;
        let theta = extremal_theta(40 * r as u64, terms)?;
        let shell = |norm: u64| {
            theta
                .shell_count(norm)
                .ok_or(Error::Truncation {
                    needed: norm as usize / 2 + 1,
                    available: terms,
                })
        };
        Ok(Self {
            a_min: shell(4 * r as u64)?,
            a_next: shell(4 * r as u64 + 2)?,
            cusp: cusp_leading(r, terms)?,
        })
    }
}

/// `(4r+4) × (4r+4)` matrix over `Q[t]`: columns `N_*`, `M_*`, then the
/// negated right-hand side.
#[derive(Clone, Debug)]
pub struct ExtendedMatrix {
    pub spec: SystemSpec,
    pub inputs: SystemInputs,
    pub matrix: PolyMatrix,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Set when `r > 3`: the rows are formed but prove nothing.
    pub diagnostic_only: bool,
}

impl ExtendedMatrix {
    pub fn rhs_col(&self) -> usize {
        self.matrix.cols() - 1
    }

    /// Coefficient matrix and right-hand side at `t = t0`.
    pub fn scalar_system(&self, t0: &Rational) -> (linalg::RatMatrix, Vec<Rational>) {
        let rhs_col = self.rhs_col();
        let full = self.matrix.evaluate(t0);
        let b = full.iter().map(|row| -row[rhs_col].clone()).collect();
        let a = full.into_iter().map(|mut row| {
            row.truncate(rhs_col);
            row
        });
        (a.collect(), b)
    }

    /// Whether the system has any rational solution at `t = t0`.
    pub fn is_consistent_at(&self, t0: &Rational) -> Result<bool> {
        let (a, b) = self.scalar_system(t0);
        linalg::is_consistent(&a, &b)
    }
}

struct RowBuilder {
    spec: SystemSpec,
    rows: Vec<Vec<PolyT>>,
    labels: Vec<String>,
}

impl RowBuilder {
    fn width(&self) -> usize {
        self.spec.unknowns() + 1
    }

    /// Offset of the unknown block belonging to `shell_norm`.
    fn offset(&self, shell_norm: u32) -> usize {
        if shell_norm == self.spec.min_norm() {
            0
        } else {
            self.spec.n_unknowns()
        }
    }

    fn place(&self, out: &mut [PolyT], row: &MomentRow, scale: &Rational) {
        let off = self.offset(row.shell_norm);
        for (j, c) in row.coeffs.iter().enumerate() {
            out[off + j] = &out[off + j] + &c.scale(scale);
        }
        let rhs = self.width() - 1;
        out[rhs] = &out[rhs] - &row.rhs.scale(scale);
    }

    fn push(&mut self, label: String, parts: &[(&MomentRow, Rational)]) {
        let mut out = vec![PolyT::zero(); self.width()];
        for (row, scale) in parts {
            self.place(&mut out, row, scale);
        }
        self.rows.push(out);
        self.labels.push(label);
    }
}

pub fn build_system(spec: SystemSpec) -> Result<ExtendedMatrix> {
    let inputs = SystemInputs::compute(spec.r)?;
    build_system_with(spec, inputs)
}

/// Builds the rows from explicit inputs. Row order: zeroth moments, pure
/// moments `k = 1..2r−1` per shell, the two cusp rows, then the two
/// formulation-dependent rows.
pub fn build_system_with(spec: SystemSpec, inputs: SystemInputs) -> Result<ExtendedMatrix> {
    let r = spec.r;
    let n = spec.rank();
    let (s1, s2) = (spec.min_norm(), spec.next_norm());
    let (i1, i2) = (spec.n_unknowns() - 1, spec.m_unknowns() - 1);
    let a1 = Rational::from_integer(inputs.a_min.clone());
    let a2 = Rational::from_integer(inputs.a_next.clone());
    let one = Rational::one();

    let mut b = RowBuilder {
        spec,
        rows: Vec::new(),
        labels: Vec::new(),
    };

    for k in 0..2 * r {
        b.push(
            format!("moment 2k={} shell {s1}", 2 * k),
            &[(&pure_moment_row(k, s1, n, &a1, i1), one.clone())],
        );
        b.push(
            format!("moment 2k={} shell {s2}", 2 * k),
            &[(&pure_moment_row(k, s2, n, &a2, i2), one.clone())],
        );
    }

    for (d, c) in [(4 * r, &inputs.cusp.c_4r), (4 * r + 4, &inputs.cusp.c_4r_plus_4)] {
        let on_first = zonal_shell_row(d, s1, n, i1)?;
        let on_second = zonal_shell_row(d, s2, n, i2)?;
        b.push(
            format!("zonal d={d}: shell {s2} - ({}) shell {s1}", crate::exactmath::format_rational(c)),
            &[(&on_second, one.clone()), (&on_first, -c.clone())],
        );
    }

    let top = 4 * r + 2;
    match spec.formulation {
        Formulation::Rigorous => {
            b.push(
                format!("zonal d={top} shell {s1}"),
                &[(&zonal_shell_row(top, s1, n, i1)?, one.clone())],
            );
            b.push(
                format!("zonal d={top} shell {s2}"),
                &[(&zonal_shell_row(top, s2, n, i2)?, one.clone())],
            );
        }
        Formulation::PaperLiteral => {
            let k = 2 * r + 1;
            b.push(
                format!("moment 2k={} shell {s1}", 2 * k),
                &[(&pure_moment_row(k, s1, n, &a1, i1), one.clone())],
            );
            b.push(
                format!("moment 2k={} shell {s2}", 2 * k),
                &[(&pure_moment_row(k, s2, n, &a2, i2), one.clone())],
            );
        }
    }

    let mut col_labels: Vec<String> = (0..spec.n_unknowns()).map(|j| format!("N{j}")).collect();
    col_labels.extend((0..spec.m_unknowns()).map(|j| format!("M{j}")));
    col_labels.push("RHS".into());

    let RowBuilder { rows, labels, .. } = b;
    debug_assert_eq!(rows.len(), spec.unknowns() + 1);
    Ok(ExtendedMatrix {
        spec,
        inputs,
        matrix: PolyMatrix::from_rows(rows)?,
        row_labels: labels,
        col_labels,
        diagnostic_only: !spec.theorem_mode(),
    })
}

/// Determinant by both algorithms, run concurrently; they must agree.
pub fn determinant_of(system: &ExtendedMatrix) -> Result<PolyT> {
    let m = &system.matrix;
    let (interp, bareiss) = rayon::join(|| m.det_interp(m.degree_bound()), || m.det_bareiss());
    let (interp, bareiss) = (interp?, bareiss?);
    if interp != bareiss {
        return Err(Error::Consistency(format!(
            "interpolation and Bareiss determinants disagree for r = {}",
            system.spec.r
        )));
    }
    Ok(interp)
}

pub fn determinant(spec: SystemSpec) -> Result<PolyT> {
    determinant_of(&build_system(spec)?)
}

/// Reference factorization of the determinant for `r = 1, 2, 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedDeterminant {
    pub r: u32,
    pub factors: Vec<PolyT>,
    /// `(prime, exponent)` of the printed integer prefactor.
    pub prefactor: Vec<(u32, u32)>,
}

impl ExpectedDeterminant {
    pub fn for_r(r: u32) -> Option<Self> {
        let t = PolyT::t();
        let shift = |c: i64| PolyT::from_ints(&[-c, 1]);
        let (factors, prefactor): (Vec<PolyT>, Vec<(u32, u32)>) = match r {
            1 => (
                vec![
                    shift(2),
                    t,
                    PolyT::from_ints(&[-13, 6]),
                    PolyT::from_ints(&[77, -55, 10]),
                ],
                vec![(2, 55), (3, 7), (5, 8), (7, 4), (11, 4), (13, 1), (19, 6), (23, 3)],
            ),
            2 => (
                vec![shift(4), t, quintic()],
                vec![
                    (2, 132), (3, 27), (5, 16), (7, 10), (11, 6), (13, 10), (23, 4), (41, 8),
                    (43, 6), (47, 3),
                ],
            ),
            3 => (
                vec![shift(6), t, septic()],
                vec![
                    (2, 244), (3, 48), (5, 26), (7, 13), (11, 7), (13, 7), (17, 6), (23, 4),
                    (31, 11), (37, 1), (59, 14), (61, 11), (67, 5), (71, 3), (73, 1),
                ],
            ),
            _ => return None,
        };
        Some(Self {
            r,
            factors,
            prefactor,
        })
    }

    pub fn prefactor_value(&self) -> BigInt {
        self.prefactor
            .iter()
            .fold(BigInt::one(), |acc, &(p, e)| acc * BigInt::from(p).pow(e))
    }

    pub fn product(&self) -> PolyT {
        self.factors.iter().fold(PolyT::one(), |acc, f| &acc * f)
    }
}

/// The irreducible quintic factor for `r = 2`.
pub fn quintic() -> PolyT {
    PolyT::from_ints(&[-21771246i64, 23361877, -10101795, 2202310, -242280, 10768])
}

/// The irreducible septic factor for `r = 3`.
pub fn septic() -> PolyT {
    PolyT::from_descending_decimal(&[
        "19989882674056909935",
        "-892881426107875310430",
        "17258039601222654151533",
        "-187053310321121904306075",
        "1227398249908229181423784",
        "-4874010945909263810320032",
        "10840974078436271024624064",
        "-10414527769923133690990080",
    ])
    .expect("literal coefficients parse")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorMatch {
    pub success: bool,
    /// `det / ∏ factors` when that quotient is a constant.
    pub constant: Option<Rational>,
    /// First factor that did not divide.
    pub failing_factor: Option<PolyT>,
    /// Quotient left after dividing out every factor that did divide.
    pub leftover: PolyT,
    pub printed_prefactor: BigInt,
}

pub fn match_expected_factors(det: &PolyT, r: u32) -> Result<FactorMatch> {
    if det.is_zero() {
        return Err(Error::Invalid("cannot match factors of the zero determinant".into()));
    }
    let expected = ExpectedDeterminant::for_r(r)
        .ok_or_else(|| Error::Unsupported(format!("no reference determinant for r = {r}")))?;
    let mut rest = det.clone();
    let mut failing_factor = None;
    for f in &expected.factors {
        match rest.exact_divide(f) {
            Ok(q) => rest = q,
            Err(Error::InexactDivision { .. }) => {
                failing_factor = Some(f.clone());
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let success = failing_factor.is_none() && rest.is_constant();
    Ok(FactorMatch {
        success,
        constant: success.then(|| rest.coeff(0)),
        failing_factor,
        leftover: rest,
        printed_prefactor: expected.prefactor_value(),
    })
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub r: u32,
    pub formulation: Formulation,
    pub determinant: PolyT,
    pub factor_match: FactorMatch,
    pub rational_roots: Vec<Rational>,
    /// Integer roots `t ≥ 2r + 2`; each would leave room for a class.
    pub offending_roots: Vec<BigInt>,
    /// `t = 0` and `t = 2r` are roots, as every construction predicts.
    pub structural_roots_present: bool,
    pub theorem_verified: bool,
    pub notes: Vec<String>,
}

pub fn verify_formulation(r: u32, formulation: Formulation) -> Result<Verdict> {
    let spec = SystemSpec::new(r, formulation)?;
    if !spec.theorem_mode() {
        return Err(Error::Unsupported(format!(
            "r = {r}: the method applies only to r = 1, 2, 3"
        )));
    }
    let system = build_system(spec)?;
    let det = determinant_of(&system)?;
    let mut notes = vec![
        format!(
            "a({}) = {}, a({}) = {}",
            spec.min_norm(),
            system.inputs.a_min,
            spec.next_norm(),
            system.inputs.a_next
        ),
        format!(
            "cusp constants from Delta^{} and E4*Delta^{}: c_4r = {}, c_4r+4 = {}",
            2 * r,
            2 * r,
            system.inputs.cusp.c_4r,
            system.inputs.cusp.c_4r_plus_4
        ),
    ];
    if det.is_zero() {
        notes.push("determinant vanishes identically; no conclusion".into());
        return Ok(Verdict {
            r,
            formulation,
            determinant: det,
            factor_match: FactorMatch {
                success: false,
                constant: None,
                failing_factor: None,
                leftover: PolyT::zero(),
                printed_prefactor: ExpectedDeterminant::for_r(r)
                    .map(|e| e.prefactor_value())
                    .unwrap_or_default(),
            },
            rational_roots: Vec::new(),
            offending_roots: Vec::new(),
            structural_roots_present: false,
            theorem_verified: false,
            notes,
        });
    }
    let factor_match = match_expected_factors(&det, r)?;
    match (&factor_match.constant, &factor_match.failing_factor) {
        (Some(c), _) => notes.push(format!(
            "determinant / reference factors = {} (printed prefactor {})",
            crate::exactmath::format_rational(c),
            factor_match.printed_prefactor
        )),
        (None, Some(f)) => notes.push(format!("reference factor {f} does not divide")),
        (None, None) => notes.push(format!(
            "reference factors divide but leave {}",
            factor_match.leftover
        )),
    }
    let roots = rational_roots(&det)?;
    let floor = int(2 * r + 2);
    let offending: Vec<BigInt> = roots
        .iter()
        .filter(|x| x.is_integer() && **x >= floor)
        .map(|x| x.to_integer())
        .collect();
    let structural = roots.contains(&Rational::zero()) && roots.contains(&int(2 * r));
    let verified = offending.is_empty() && factor_match.success;
    Ok(Verdict {
        r,
        formulation,
        determinant: det,
        factor_match,
        rational_roots: roots,
        offending_roots: offending,
        structural_roots_present: structural,
        theorem_verified: verified,
        notes,
    })
}

/// Verdicts for each requested formulation; the theorem holds if any of
/// them verifies.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub r: u32,
    pub verdicts: Vec<Verdict>,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.verdicts.iter().any(|v| v.theorem_verified)
    }

    pub fn accepted(&self) -> Option<Formulation> {
        self.verdicts
            .iter()
            .find(|v| v.theorem_verified)
            .map(|v| v.formulation)
    }
}

pub fn verify_theorem(r: u32) -> Result<TheoremReport> {
    verify_theorem_with(r, &Formulation::ALL)
}

pub fn verify_theorem_with(r: u32, formulations: &[Formulation]) -> Result<TheoremReport> {
    use rayon::prelude::*;
    let verdicts = formulations
        .par_iter()
        .map(|&f| verify_formulation(r, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport { r, verdicts })
}

/// Linear conditions one harmonic degree contributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBudget {
    pub degree: u32,
    /// Weight of `Θ_{L,P_d} / Δ^v`, with `v` the order of vanishing.
    pub quotient_weight: i64,
    pub quotient_dim: usize,
    pub equations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDiagnostic {
    pub r: u32,
    pub rank: u64,
    pub min_norm: u64,
    pub unknowns: usize,
    /// Two zeroth moments plus every degree's contribution.
    pub equations: usize,
    pub by_degree: Vec<DegreeBudget>,
    pub applicable: bool,
}

/// Counts the conditions the two lowest shells can receive from weighted
/// theta series of a rank-`40r` extremal lattice.
///
/// With minimal norm `2v`, `Θ_{L,P_d} = Δ^v · g`, `g ∈ M_{20r+d−12v}`. Only
/// the `q^v`, `q^{v+1}` coefficients involve the two lowest shells, so a
/// zero quotient space yields two equations, a one-dimensional one yields
/// their fixed ratio, and anything larger yields none. The unknowns are the
/// inner-product counts `0..=v` and `0..=v+1` on those shells.
pub fn rank_diagnostic(r: u32) -> Result<RankDiagnostic> {
    if r == 0 {
        return Err(Error::Invalid("r must be at least 1".into()));
    }
    let rank = 40 * r as u64;
    let min_norm = min_norm(rank);
    let v = (min_norm / 2) as i64;
    let base = (rank / 2) as i64 - 12 * v;
    let mut by_degree = Vec::new();
    let mut d = 2u32;
    // Quotient dimensions are >= 2 for every weight >= 16.
    while base + (d as i64) < 16 {
        let k = base + d as i64;
        let dim = dim_modular_forms(k);
        let equations = match dim {
            0 => 2,
            1 => 1,
            _ => 0,
        };
        if equations > 0 {
            by_degree.push(DegreeBudget {
                degree: d,
                quotient_weight: k,
                quotient_dim: dim,
                equations,
            });
        }
        d += 2;
    }
    let equations = 2 + by_degree.iter().map(|b| b.equations).sum::<usize>();
    let unknowns = (v as usize + 1) + (v as usize + 2);
    Ok(RankDiagnostic {
        r,
        rank,
        min_norm,
        unknowns,
        equations,
        by_degree,
        applicable: equations > unknowns && min_norm == 4 * r as u64,
    })
}
