use salpeter::basis::QuantumNumbers;
use salpeter::kramers::{first_order_method1, radial_moment};
use salpeter::laguerre_me::{eta2_matrix_element, eta_matrix_element, first_order_method2, second_order_method2, second_order_part2};
use salpeter::numeric::to_scientific;
use salpeter::rational::{parse_rational, Rational};
use salpeter::spectrum::diagram_data;
use salpeter::verify::{self, GridSize, VerifyOptions};
use salpeter::{
    energy_unperturbed, epsilon1_general, epsilon2_general, ladder2d, level_table, oracle, Amplitude, FockState2D,
    Report, ReportEntry, Status,
};
use serde_json::json;

use crate::output::{emit, precision_from_env, report_json, report_text, Failure};
use crate::{CorrectArgs, DiagramArgs, DiagramFormat, Method, OracleArgs, ReportFormat, TableArgs, TableFormat, VerifyArgs};

/// Significant digits for quadrature values.
const ORACLE_DIGITS: usize = 30;

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn agree(ok: bool) -> Status {
    if ok {
        Status::Agree
    } else {
        Status::Disagree
    }
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn parse_lambda(raw: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(raw)?)
}

fn radial_state(args: &CorrectArgs) -> Result<QuantumNumbers, Failure> {
    if args.d == 0 {
        return Err(usage("invalid quantum numbers: dimension d must be at least 1"));
    }
    if args.d == 1 {
        if args.l.unwrap_or(0) != 0 || args.n.is_some() {
            return Err(usage("d=1 states are labelled by --N alone"));
        }
        let level = args.level.ok_or_else(|| usage("d=1 needs --N"))?;
        return Ok(QuantumNumbers::one_dimensional(level));
    }
    match (args.n, args.l, args.level) {
        (Some(n), Some(l), None) => Ok(QuantumNumbers::new(args.d, n, l)?),
        (None, Some(l), Some(level)) => Ok(QuantumNumbers::from_level(args.d, level, l)?),
        _ => Err(usage("radial mode needs --n and --l (or --N and --l)")),
    }
}

fn state_label(q: &QuantumNumbers) -> String {
    if q.d() == 1 {
        format!("d=1 N={}", q.level())
    } else {
        format!("d={} n={} l={} (N={})", q.d(), q.twice_n() / 2, q.l(), q.level())
    }
}

fn ladder_rows(s: FockState2D, e1: &Rational, e2: &Rational) -> Result<Vec<ReportEntry>, Failure> {
    let first = ladder2d::first_order_2d(s)?;
    let second = ladder2d::second_order_2d(s)?;
    Ok(vec![
        ReportEntry::exact("", "eps1 ladder", &first, agree(&first == e1)),
        ReportEntry::exact("", "eps2 ladder", &second, agree(&second == e2)),
    ])
}

pub fn correct(args: &CorrectArgs) -> Result<(), Failure> {
    let (case, q, rows) = if let Some(m) = args.m {
        if args.d != 2 {
            return Err(usage(format!("--m selects the 2D ladder basis, which needs --d 2 (got --d {})", args.d)));
        }
        if args.n.is_some() || args.l.is_some() {
            return Err(usage("ladder mode takes --N and --m, not --n/--l"));
        }
        if !matches!(args.method, Method::All | Method::Closed | Method::Ladder) {
            return Err(usage("ladder mode supports --method all, closed or ladder"));
        }
        let level = args.level.ok_or_else(|| usage("ladder mode needs --N"))?;
        let s = FockState2D::new(level, m)?;
        let q = ladder2d::map_nm_to_nl(s);
        let (e1, e2) = (epsilon1_general(&q), epsilon2_general(&q));
        let mut rows = vec![
            ReportEntry::exact("", "eps1 closed form", &e1, Status::Agree),
            ReportEntry::exact("", "eps2 closed form", &e2, Status::Agree),
        ];
        if args.method != Method::Closed {
            rows.extend(ladder_rows(s, &e1, &e2)?);
        }
        (format!("d=2 N={level} m={m} (n={}, l={})", q.twice_n() / 2, q.l()), q, rows)
    } else {
        let q = radial_state(args)?;
        if args.method == Method::Ladder && q.d() != 2 {
            return Err(usage("the ladder method is only available for d=2"));
        }
        let (e1, e2) = (epsilon1_general(&q), epsilon2_general(&q));
        let show = |m: Method| args.method == Method::All || args.method == m;
        let mut rows = vec![ReportEntry::exact("", "eps1 closed form", &e1, Status::Agree)];
        if show(Method::Kramers) {
            let v = first_order_method1(&q);
            rows.push(ReportEntry::exact("", "eps1 kramers", &v, agree(v == e1)));
        }
        if show(Method::Laguerre) {
            let v = first_order_method2(&q);
            rows.push(ReportEntry::exact("", "eps1 laguerre", &v, agree(v == e1)));
        }
        rows.push(ReportEntry::exact("", "eps2 closed form", &e2, Status::Agree));
        if show(Method::Laguerre) {
            let v = second_order_method2(&q);
            rows.push(ReportEntry::exact("", "eps2 laguerre parts I+II", &v, agree(v == e2)));
        }
        if show(Method::Ladder) && q.d() == 2 {
            let s = FockState2D::new(q.level(), i64::from(q.l())).expect("l <= N");
            rows.extend(ladder_rows(s, &e1, &e2)?);
        }
        (state_label(&q), q, rows)
    };

    let eps0 = energy_unperturbed(&q);
    let mut entries = vec![ReportEntry::exact("", "eps0", &eps0, Status::Pass)];
    entries.extend(rows);
    for e in &mut entries {
        e.case.clone_from(&case);
    }
    let report = Report::new(entries);
    let verdict = if report.all_ok() { Status::Agree } else { Status::Disagree };

    let text = match args.format {
        ReportFormat::Text => format!("{}verdict: {}\n", report_text(&report), verdict.as_str()),
        ReportFormat::Json => {
            let v = json!({ "case": case, "entries": report.entries, "verdict": verdict });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
        }
    };
    emit(&text, args.output.as_deref())?;
    if report.all_ok() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("methods disagree for {case}")))
    }
}

pub fn table(args: &TableArgs) -> Result<(), Failure> {
    let table = level_table(args.n_max, args.d, &parse_lambda(&args.lambda)?)?;
    let text = match args.format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => table.to_json(),
    };
    emit(&text, args.output.as_deref())
}

pub fn diagram(args: &DiagramArgs) -> Result<(), Failure> {
    let table = level_table(args.n_max, args.d, &parse_lambda(&args.lambda)?)?;
    let exaggeration = args.exaggeration.as_deref().map(parse_lambda).transpose()?;
    let diagram = diagram_data(&table, exaggeration);
    let text = match args.format {
        DiagramFormat::Svg => diagram.to_svg(),
        DiagramFormat::Text => diagram.to_text(),
    };
    emit(&text, args.output.as_deref())
}

pub fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let size: GridSize = args.grid.parse()?;
    let mut options = VerifyOptions::new(size);
    options.perturb = args.perturb;
    options.include_oracle = !args.no_oracle;
    options.precision = precision_from_env()?;
    let report = verify::run(&options);
    let text = match args.format {
        ReportFormat::Json => report_json(&report),
        ReportFormat::Text => report_text(&report),
    };
    emit(&text, args.output.as_deref())?;
    match report.first_failure() {
        None => Ok(()),
        Some(e) => Err(Failure::Verification(format!(
            "{} of {} checks failed; first failing case: {} [{}] {}",
            report.failed,
            report.entries.len(),
            e.case,
            e.method,
            e.status.as_str()
        ))),
    }
}

fn quadrature_entry(case: &str, method: String, decimal: String, exact: Option<String>, ok: bool) -> ReportEntry {
    ReportEntry { case: case.to_string(), method, value_pq: exact, value_dec: Some(decimal), status: pass(ok) }
}

pub fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    let q = QuantumNumbers::new(args.d, args.n, args.l)?;
    let precision = precision_from_env()?;
    let case = state_label(&q);
    let mut entries = Vec::new();

    for s in 0..=args.smax {
        let exact = radial_moment(&q, 2 * s)?.value;
        let v = oracle::quad_expectation(&q, s, precision)?;
        let ok = oracle::relative_error(&v, &exact) <= verify::MOMENT_TOLERANCE;
                entries.push(quadrature_entry(&case, format!("<eta^{s}>"), to_scientific(&v, ORACLE_DIGITS), Some(salpeter::rational::to_pq(&exact)), ok));
    }

    let part2 = second_order_part2(&q);
    let v = oracle::sum_over_states_check(&q, args.n + 4, precision)?;
    let ok = oracle::relative_error(&v, &part2) <= verify::SUM_OVER_STATES_TOLERANCE;
        entries.push(quadrature_entry(
        &case,
        "sum over states (eps2 part II)".into(),
        to_scientific(&v, ORACLE_DIGITS),
        Some(salpeter::rational::to_pq(&part2)),
        ok,
    ));

    let residual = oracle::radial_residual(&q, &verify::RESIDUAL_SAMPLES, precision)?;
    entries.push(ReportEntry::approximate(
        case.clone(),
        "radial residual",
        format!("{residual:.3e}"),
        pass(residual <= verify::RESIDUAL_TOLERANCE),
    ));

    if let Some(target) = args.target {
        let delta = target as i64 - args.n as i64;
        let exact = match args.s {
            0 => Amplitude::from_rational(&Rational::from_integer(i64::from(delta == 0).into())),
            1 => eta_matrix_element(&q, delta),
            2 => eta2_matrix_element(&q, delta),
            s if delta.unsigned_abs() > u64::from(s) => Amplitude::zero(),
            s => return Err(usage(format!("no exact reference for <n'|eta^{s}|n> with |n'-n| <= {s}; use --s 0, 1 or 2"))),
        };
        let v = oracle::quad_matrix_element(target, args.n, args.l, args.d, args.s, precision)?;
        let reference = exact.to_f64();
        let gap = (v.to_f64() - reference).abs();
        let ok = gap <= verify::MOMENT_TOLERANCE * reference.abs().max(1.0);
                entries.push(quadrature_entry(&case, format!("<n={target}|eta^{}|n={}>", args.s, args.n), to_scientific(&v, ORACLE_DIGITS), Some(exact.to_string()), ok));
    }

    let report = Report::new(entries);
    let text = match args.format {
        ReportFormat::Text => report_text(&report),
        ReportFormat::Json => report_json(&report),
    };
    emit(&text, args.output.as_deref())?;
    match report.first_failure() {
        None => Ok(()),
        Some(e) => Err(Failure::Verification(format!("quadrature check failed: {} [{}]", e.case, e.method))),
    }
}
