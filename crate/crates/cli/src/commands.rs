use std::path::Path;

use keli::analysis::{
    finite_difference, fit_log_factor, lambda_sum_zeros_range, perturb_zeros, rescale_for_plot,
    rh_first_negative, stride, Normalization, ZetaZeroList,
};
use keli::combinatorics::CMatrix;
use keli::lambda::{alpha_table, lambda_table, solve_alphas, Deviation, LambdaEvaluator};
use keli::mp::{format_real, parse_real};
use keli::nodes::{build_node_table, load_node_table, persist_node_table, NodeValueTable};
use keli::table::Table;
use keli::zeros::{
    certify_zero, product_partial, refine_zero, seed_zero, verify_against_fixture, ComplexZero,
    Provenance, ReportStatus, ZeroTable,
};
use keli::{make_context, Field, PrecisionContext};
use rug::{Complex, Float};

use crate::output::{command_line, emit, write_text, CliError};
use crate::{Cli, Command, Norm, Source};

const DEFAULT_DIGITS: u32 = 600;
const DEFAULT_NODES: usize = 60;
/// Precision for reading tabulated zeros and ordinates.
const TABLE_BITS: u32 = 256;

type Outcome = Result<(), CliError>;

/// Header lines shared by every output: the command line, then `key=value` lines.
struct Header(Vec<String>);

impl Header {
    fn new(argv: &[String]) -> Self {
        Self(vec![command_line(argv)])
    }

    fn add(&mut self, key: &str, value: impl std::fmt::Display) {
        self.0.push(format!("{key}={value}"));
    }
}

/// The evaluator and what it was built from.
struct Pipeline {
    ctx: PrecisionContext,
    ev: LambdaEvaluator,
    node_digits: u32,
    node_count: usize,
    warning: Option<String>,
}

impl Pipeline {
    fn build(source: &Source) -> Result<Self, CliError> {
        let (table, node_ctx, warning) = match &source.nodes {
            Some(path) => {
                let table = load_node_table(path)?;
                let ctx = make_context(source.node_digits.unwrap_or(table.digits()))?;
                let (table, warning) = table.coerce_to(&ctx)?;
                (table, ctx, warning)
            }
            None => {
                let digits = source
                    .node_digits
                    .unwrap_or(source.digits.unwrap_or(0).max(DEFAULT_DIGITS));
                let ctx = make_context(digits)?;
                let count = source.k_max.unwrap_or(DEFAULT_NODES);
                (build_node_table(count, &ctx)?, ctx, None)
            }
        };
        let k = source.k_max.unwrap_or(table.count());
        if k == 0 || k > table.count() {
            return Err(CliError::usage(format!(
                "--k-max {k} needs 1..={} node values",
                table.count()
            )));
        }
        let alphas = solve_alphas(&table.truncated(k), &CMatrix::new(k), &node_ctx)?;
        let mut ev = LambdaEvaluator::new(alphas, &node_ctx)?.with_target_digits(source.target);
        let ctx = match source.digits {
            Some(d) if d > node_ctx.working_digits() => {
                return Err(keli::Error::InsufficientPrecision(format!(
                    "--digits {d} exceeds the {} digits of the node values",
                    node_ctx.working_digits()
                ))
                .into())
            }
            Some(d) => {
                let ctx = make_context(d)?;
                ev = ev.with_context(&ctx);
                ctx
            }
            None => node_ctx,
        };
        Ok(Self {
            ctx,
            node_digits: node_ctx.working_digits(),
            ev,
            node_count: table.count(),
            warning,
        })
    }

    fn describe(&self, header: &mut Header) {
        header.add("digits", self.ctx.working_digits());
        header.add("node_digits", self.node_digits);
        header.add("nodes", self.node_count);
        header.add("k_max", self.ev.alphas().k_max());
        header.add("target", self.ev.target_digits());
        header.add("reliable_radius", format!("{:.3}", self.ev.reliable_radius()));
        if let Some(w) = &self.warning {
            header.add("warning", w);
        }
    }
}

/// `a..b` (inclusive) or a single value.
fn parse_range(text: &str, what: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::usage(format!("{what}: expected `a..b` or `n`, got `{text}`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if a == 0 || b < a {
        return Err(bad());
    }
    Ok((a, b))
}

fn parse_number(text: &str, bits: u32, what: &str) -> Result<Float, CliError> {
    parse_real(text, bits).map_err(|_| CliError::usage(format!("{what}: `{text}` is not a number")))
}

/// `re` or `re,im`.
fn parse_point(text: &str, bits: u32) -> Result<Complex, CliError> {
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re, im),
        None => (text, "0"),
    };
    Ok(Complex::with_val(
        bits,
        (parse_number(re, bits, "--s")?, parse_number(im, bits, "--s")?),
    ))
}

/// `x` rounded to `digits` significant digits, for display next to the full value.
fn rounded(x: &Float, digits: f64) -> String {
    let d = digits.floor().clamp(1.0, 1e6) as usize;
    x.to_string_radix(10, Some(d))
}

fn fixture(path: Option<&Path>) -> Result<ZeroTable, CliError> {
    Ok(match path {
        Some(p) => ZeroTable::load(p, TABLE_BITS)?,
        None => ZeroTable::reference(TABLE_BITS),
    })
}

/// `σ_1..σ_last`, each seeded from the ones before it.
fn find_zeros(p: &Pipeline, last: usize, tol: &Float) -> Result<ZeroTable, CliError> {
    let mut found: Vec<ComplexZero> = Vec::new();
    for k in 1..=last {
        let prior = ZeroTable::new(found.clone(), Provenance::Computed)?;
        let seed = seed_zero(k, &prior, p.ctx.bits());
        let mut z = refine_zero(&seed, &p.ev, tol)?;
        z.index = k;
        if z.derivative_underflow {
            log::warn!("σ_{k}: derivative underflow, possible multiple zero");
        }
        log::info!("σ_{k} after {} Newton steps", z.newton_steps);
        found.push(z);
    }
    Ok(ZeroTable::new(found, Provenance::Computed)?)
}

fn select(table: &ZeroTable, first: usize) -> Result<ZeroTable, CliError> {
    let kept = table.zeros().iter().filter(|z| z.index >= first).cloned().collect();
    Ok(ZeroTable::new(kept, Provenance::Computed)?)
}

pub fn run(cli: &Cli, argv: &[String]) -> Outcome {
    let format = cli.global.format;
    let out = cli.global.out.as_deref();
    let mut header = Header::new(argv);

    match &cli.command {
        Command::Nodes { count, digits } => {
            let ctx = make_context(*digits)?;
            let table = build_node_table(*count, &ctx)?;
            match out {
                Some(path) => persist_node_table(&table, path)?,
                None => write_text(&table.to_text(), None)?,
            }
            Ok(())
        }

        Command::Alphas { source } => {
            let p = Pipeline::build(source)?;
            p.describe(&mut header);
            emit(&alpha_table(p.ev.alphas()), &header.0, format, out)
        }

        Command::Nu { source, q_max } => {
            let p = Pipeline::build(source)?;
            p.describe(&mut header);
            let nus = p.ev.nus();
            header.add("truncation_k", nus.truncation_k());
            for w in nus.warnings() {
                header.add("warning", w);
            }
            let mut t = Table::new(["q", "nu_q", "significance"]);
            for (q, v) in nus.entries().filter(|(q, _)| q <= q_max) {
                t.push(vec![q.to_string(), format_real(v), format!("{:.1}", nus.significance(q))]);
            }
            emit(&t, &header.0, format, out)
        }

        Command::Lambda { source, n } => {
            let (a, b) = parse_range(n, "--n")?;
            let p = Pipeline::build(source)?;
            p.describe(&mut header);
            let values = (a..=b)
                .map(|n| Ok((n, p.ev.lambda_int(n)?)))
                .collect::<Result<Vec<_>, keli::Error>>()?;
            emit(&lambda_table(&values), &header.0, format, out)
        }

        Command::Eval { source, points, derivative, series } => {
            let p = Pipeline::build(source)?;
            p.describe(&mut header);
            header.add("route", if *series { "nu_series" } else { "beta_alpha" });
            let mut columns = vec!["s_re", "s_im", "re", "im", "significance", "rounded"];
            if *derivative {
                columns.extend(["d_re", "d_im", "d_significance"]);
            }
            let mut t = Table::new(columns);
            for text in points {
                let s = parse_point(text, p.ctx.bits())?;
                let v = if *series { p.ev.lambda_series(&s)? } else { p.ev.lambda_at(&s)? };
                let shown = if v.value.imag().is_zero() {
                    rounded(v.value.real(), v.significance)
                } else {
                    format!(
                        "{}{}{}i",
                        rounded(v.value.real(), v.significance),
                        if v.value.imag().is_sign_negative() { "" } else { "+" },
                        rounded(v.value.imag(), v.significance)
                    )
                };
                let mut row = vec![
                    format_real(s.real()),
                    format_real(s.imag()),
                    format_real(v.value.real()),
                    format_real(v.value.imag()),
                    format!("{:.1}", v.significance),
                    shown,
                ];
                if *derivative {
                    let d = p.ev.lambda_prime(&s)?;
                    row.extend([
                        format_real(d.derivative.real()),
                        format_real(d.derivative.imag()),
                        format!("{:.1}", d.derivative_significance),
                    ]);
                }
                t.push(row);
            }
            emit(&t, &header.0, format, out)
        }

        Command::Zeros { source, k, tol } => {
            let (a, b) = parse_range(k, "--k")?;
            let tol = parse_number(tol, 64, "--tol")?;
            let p = Pipeline::build(source)?;
            p.describe(&mut header);
            header.add("tol", format_real(&tol));
            let found = find_zeros(&p, b as usize, &tol)?;
            emit(&select(&found, a as usize)?.to_table(), &header.0, format, out)
        }

        Command::Verify { source, fixture: path, k, tol, cache_only } => {
            if *cache_only {
                return verify_cache(source, &mut header, format, out);
            }
            let (a, b) = parse_range(k, "--k")?;
            let tol = parse_number(tol, 64, "--tol")?;
            let reference = fixture(path.as_deref())?;
            let p = Pipeline::build(source)?;
            p.describe(&mut header);
            header.add("tol", format_real(&tol));
            let found = select(&find_zeros(&p, b as usize, &tol)?, a as usize)?;
            let report = verify_against_fixture(&found, &reference);
            let mut t = Table::new(["k", "fixture_k", "re", "im", "rel_re", "rel_im", "certified", "pass"]);
            let mut certified_all = true;
            for c in &report.comparisons {
                let z = found.by_index(c.index).expect("compared zeros come from the table");
                let certified = certify_zero(z, &p.ev, &tol)?;
                certified_all &= certified;
                t.push(vec![
                    c.index.to_string(),
                    c.fixture_index.to_string(),
                    format_real(&z.re),
                    format_real(&z.im),
                    format!("{:.3e}", c.rel_re),
                    format!("{:.3e}", c.rel_im),
                    certified.to_string(),
                    c.pass.to_string(),
                ]);
            }
            header.add("status", format!("{:?}", report.status));
            if !report.misaligned.is_empty() {
                header.add("misaligned", format!("{:?}", report.misaligned));
            }
            emit(&t, &header.0, format, out)?;
            match report.status {
                ReportStatus::Pass if certified_all => Ok(()),
                ReportStatus::Pass => Err(CliError::verification("a computed zero failed certification")),
                ReportStatus::Fail => Err(CliError::verification("computed zeros differ from the fixture")),
                ReportStatus::NoOverlap => Err(CliError::verification("no fixture rows overlap the computed zeros")),
            }
        }

        Command::Product { source, fixture: path, point, count, constant } => {
            let reference = fixture(path.as_deref())?;
            let n = count.unwrap_or(reference.len());
            let mut t = Table::new(["s_re", "s_im", "factors", "re", "im"]);
            let (s, c, lambda) = match constant {
                Some(c) => {
                    let bits = TABLE_BITS;
                    (parse_point(point, bits)?, parse_number(c, bits, "--constant")?, None)
                }
                None => {
                    let p = Pipeline::build(source)?;
                    p.describe(&mut header);
                    let s = parse_point(point, p.ctx.bits())?;
                    let c = p
                        .ev
                        .nus()
                        .get(2)
                        .cloned()
                        .ok_or_else(|| CliError::from(keli::Error::InsufficientData("no ν_2".into())))?;
                    let l = p.ev.lambda_at(&s)?.value;
                    (s, c, Some(l))
                }
            };
            header.add("constant", format_real(&c));
            let v = product_partial(&s, &reference, n, &c)?;
            if let Some(l) = lambda {
                let rel = Complex::with_val(s.prec().0, &v - &l) / &l;
                header.add("lambda_re", format_real(l.real()));
                header.add("lambda_im", format_real(l.imag()));
                header.add("relative_deviation", format!("{:.3e}", rel.abs().real().to_f64()));
            }
            t.push(vec![
                format_real(s.real()),
                format_real(s.imag()),
                n.to_string(),
                format_real(v.real()),
                format_real(v.imag()),
            ]);
            emit(&t, &header.0, format, out)
        }

        Command::Fit { fixture: path, k_min, rescale } => {
            let reference = fixture(path.as_deref())?;
            if *rescale {
                let mut t = Table::new(["re", "rescaled"]);
                for (x, y) in rescale_for_plot(&reference) {
                    t.push(vec![format_real(&x), format_real(&y)]);
                }
                return emit(&t, &header.0, format, out);
            }
            let c = fit_log_factor(&reference, *k_min)?;
            header.add("rows", reference.len());
            let mut t = Table::new(["k_min", "c"]);
            t.push(vec![k_min.to_string(), format_real(&c)]);
            emit(&t, &header.0, format, out)
        }

        Command::Fdiff { fixture: path, order, stride: step, offset, normalize, perturb, seed } => {
            if *step == 0 {
                return Err(CliError::usage("--stride must be at least 1"));
            }
            let reference = fixture(path.as_deref())?;
            let mut seq: Vec<Complex> = reference.zeros().iter().map(ComplexZero::value).collect();
            if let Some(amp) = perturb {
                let amp = parse_number(amp, TABLE_BITS, "--perturb")?;
                seq = perturb_zeros(&seq, &amp, *seed)?;
                header.add("perturb", format_real(&amp));
                header.add("seed", seed);
            }
            let seq = stride(&seq, *step, *offset);
            let norm = match normalize {
                Norm::None => Normalization::None,
                Norm::Pow2 => Normalization::PowerOfTwo,
            };
            let d = finite_difference(&seq, *order, norm)?;
            header.add("order", order);
            header.add("input_length", seq.len());
            let mut t = Table::new(["i", "re", "im"]);
            for (i, v) in d.values.iter().enumerate() {
                t.push(vec![(i + 1).to_string(), format_real(v.real()), format_real(v.imag())]);
            }
            emit(&t, &header.0, format, out)
        }

        Command::Rhsim { gammas, index, delta, n_max, digits, values } => {
            let ctx = make_context(*digits)?;
            let list = match gammas {
                Some(p) => ZetaZeroList::load(p, ctx.bits())?,
                None => ZetaZeroList::bundled(ctx.bits()),
            };
            let delta = parse_number(delta, ctx.bits(), "--delta")?;
            header.add("zeros", list.len());
            header.add("digits", digits);
            if *values {
                let deviation = Deviation { index: *index, delta };
                let sums = lambda_sum_zeros_range(1, *n_max, &list, Some(&deviation), &ctx)?;
                let mut t = Table::new(["n", "sum"]);
                for (i, v) in sums.iter().enumerate() {
                    t.push(vec![(i + 1).to_string(), format_real(v)]);
                }
                return emit(&t, &header.0, format, out);
            }
            let hit = rh_first_negative(&list, *index, &delta, *n_max, &ctx)?;
            let mut t = Table::new(["index", "delta", "n_max", "first_negative"]);
            t.push(vec![
                index.to_string(),
                format_real(&delta),
                n_max.to_string(),
                hit.map_or_else(|| "none".to_owned(), |n| n.to_string()),
            ]);
            emit(&t, &header.0, format, out)
        }
    }
}

/// Parses a node cache and recomputes its first entries from scratch.
fn verify_cache(source: &Source, header: &mut Header, format: crate::Format, out: Option<&Path>) -> Outcome {
    let path = source
        .nodes
        .as_ref()
        .ok_or_else(|| CliError::usage("--cache-only needs --nodes FILE"))?;
    let table: NodeValueTable = load_node_table(path)?;
    let ctx = make_context(table.digits())?;
    let m = table.count().min(source.k_max.unwrap_or(5)).max(1);
    let fresh = build_node_table(m, &ctx)?;
    header.add("digits", table.digits());
    header.add("nodes", table.count());
    let mut t = Table::new(["j", "log10_rel_diff", "pass"]);
    let mut all = true;
    let limit = -f64::from(table.digits()) + 5.0;
    for ((j, a), b) in table.entries().zip(fresh.values()) {
        let d = Float::with_val(ctx.bits(), a - b);
        let rel = if d.is_zero() { f64::NEG_INFINITY } else { d.log10_abs() - b.log10_abs() };
        let pass = rel <= limit;
        all &= pass;
        t.push(vec![j.to_string(), format!("{rel:.1}"), pass.to_string()]);
    }
    emit(&t, &header.0, format, out)?;
    if all {
        Ok(())
    } else {
        Err(CliError::verification("node cache disagrees with a fresh computation"))
    }
}
