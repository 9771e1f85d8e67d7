use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use sombor_core::verify::{
    self, check_constant, check_lemma, default_grids, extremal_search_with, report, AlphaSampler,
    Grid, LemmaId, LemmaReport, Verdict, CATALOG,
};
use sombor_core::{
    apply_swap, closed_form_u, general_sombor, relocate, Alpha, EdgeSwap, EnumFilter, Enumerator,
    FamilySpec,
};

use crate::io::{graph6_lines, read_graphs, read_one, write_output};
use crate::{Cli, Command};

/// Runs one subcommand. `Ok(false)` means a verification check failed.
pub fn run(cli: Cli) -> Result<bool> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("starting worker pool")?;
    }
    match cli.command {
        Command::Index { input, alpha } => index(&input, alpha),
        Command::Family {
            spec,
            out,
            closed_form,
            alpha,
        } => family(&spec, out.as_deref(), closed_form, alpha),
        Command::Enumerate {
            n,
            diameter,
            girth,
            count_only,
            out,
            max_n,
        } => enumerate(n, diameter, girth, count_only, out.as_deref(), max_n),
        Command::Transform {
            input,
            relocate,
            swap,
            out,
        } => transform(&input, relocate.as_deref(), swap.as_deref(), out.as_deref()),
        Command::Extremal {
            n,
            d,
            alpha,
            tol,
            report,
            timing,
        } => extremal(n, d, alpha, tol, report.as_deref(), timing),
        Command::CheckLemma {
            id,
            alpha_start,
            alpha_stop,
            alpha_step,
            x_start,
            x_stop,
            x_step,
            report,
        } => {
            let overrides = [alpha_start, alpha_stop, alpha_step, x_start, x_stop, x_step];
            lemma(&id, overrides, report.as_deref())
        }
        Command::CheckConstant {
            id,
            alpha_max,
            step,
        } => constant(&id, alpha_max, step),
        Command::PropTest {
            samples,
            seed,
            alpha,
        } => prop_test(samples, seed, alpha),
    }
}

fn alpha(value: f64) -> Result<Alpha<f64>> {
    Ok(Alpha::new(value)?)
}

fn index(input: &Path, a: f64) -> Result<bool> {
    let a = alpha(a)?;
    let mut out = String::new();
    for g in read_graphs(input)? {
        out.push_str(&format!("{}\n", general_sombor(&g, a)));
    }
    write_output(None, out.as_bytes())?;
    Ok(true)
}

fn family(spec: &str, out: Option<&Path>, closed_form: bool, a: Option<f64>) -> Result<bool> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    if closed_form {
        let FamilySpec::U { n, d, i: 1 } = spec else {
            bail!("the closed form covers U:n,d,1 only, got {spec}");
        };
        let a = alpha(a.ok_or_else(|| anyhow!("--closed-form needs --alpha"))?)?;
        println!("{}", closed_form_u(n, d, a)?);
    }
    write_output(out, graph6_lines([&g]).as_bytes())?;
    Ok(true)
}

fn enumerate(
    n: usize,
    diameter: Option<usize>,
    girth: Option<usize>,
    count_only: bool,
    out: Option<&Path>,
    max_n: usize,
) -> Result<bool> {
    let limit = sombor_core::graph::CANON_MAX_N;
    if max_n > limit {
        bail!("--max-n is limited to {limit}");
    }
    let filter = EnumFilter { n, diameter, girth };
    let enumerator = Enumerator::new().max_n(max_n);
    if count_only {
        let count = enumerator.codes(&filter)?.len();
        write_output(out, format!("{count}\n").as_bytes())?;
    } else {
        let res = enumerator.unicyclic(&filter)?;
        write_output(out, graph6_lines(&res.graphs).as_bytes())?;
    }
    Ok(true)
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (u, v) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("expected u,v, got {s:?}"))?;
    Ok((u.trim().parse()?, v.trim().parse()?))
}

fn transform(
    input: &Path,
    reloc: Option<&str>,
    swap: Option<&str>,
    out: Option<&Path>,
) -> Result<bool> {
    let g = read_one(input)?;
    let h = match (reloc, swap) {
        (Some(r), None) => {
            let (u, v) = parse_pair(r)?;
            relocate(&g, u, v)?
        }
        (None, Some(s)) => apply_swap(&g, &s.parse::<EdgeSwap>()?)?,
        _ => bail!("give exactly one of --relocate and --swap"),
    };
    write_output(out, graph6_lines([&h]).as_bytes())?;
    Ok(true)
}

fn extremal(
    n: usize,
    d: usize,
    a: f64,
    tol: f64,
    report_path: Option<&Path>,
    timing: bool,
) -> Result<bool> {
    let a = Alpha::in_open_unit(a)?;
    let r = extremal_search_with(&Enumerator::new(), n, d, a, tol)?;
    println!(
        "n={} d={} alpha={} class_size={} max={} predicted={} predicted_value={}",
        r.n, r.d, r.alpha, r.class_size, r.max_value, r.predicted_code, r.predicted_value
    );
    for code in &r.argmax_codes {
        println!("argmax {code}");
    }
    println!("verdict {}", r.verdict);
    if let Some(path) = report_path {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        report::write_extremal_csv(BufWriter::new(file), std::slice::from_ref(&r), timing)?;
    }
    Ok(r.verdict == Verdict::ConfirmedUnique)
}

fn lemma_grids(id: LemmaId, o: [Option<f64>; 6]) -> Result<(Grid, Grid)> {
    let (a, x) = default_grids(id);
    let pick = |v: Option<f64>, d: f64| v.unwrap_or(d);
    Ok((
        Grid::new(pick(o[0], a.start), pick(o[1], a.stop), pick(o[2], a.step))?,
        Grid::new(pick(o[3], x.start), pick(o[4], x.stop), pick(o[5], x.step))?,
    ))
}

fn lemma(id: &str, overrides: [Option<f64>; 6], report_path: Option<&Path>) -> Result<bool> {
    let ids: Vec<LemmaId> = if id.eq_ignore_ascii_case("all") {
        LemmaId::ALL.to_vec()
    } else {
        vec![id.parse()?]
    };
    let reports: Vec<LemmaReport> = ids
        .into_iter()
        .map(|id| {
            let (a, x) = lemma_grids(id, overrides)?;
            Ok(check_lemma(id, a, x)?)
        })
        .collect::<Result<_>>()?;
    for r in &reports {
        println!(
            "{}: alpha {} x {}: {} points, {} violations, {} boundary, min |value| {:e} ({})",
            r.lemma,
            r.alpha_grid,
            r.x_grid,
            r.points_checked,
            r.violations.len(),
            r.boundary.len(),
            r.min_margin,
            if r.passed() { "pass" } else { "FAIL" }
        );
    }
    println!("grid evidence only, not a proof");
    if let Some(path) = report_path {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        report::write_lemma_csv(BufWriter::new(file), &reports)?;
    }
    Ok(reports.iter().all(LemmaReport::passed))
}

fn constant(id: &str, alpha_max: Option<f64>, step: Option<f64>) -> Result<bool> {
    let ids: Vec<&str> = if id.eq_ignore_ascii_case("all") {
        CATALOG.iter().map(|c| c.id).collect()
    } else {
        vec![verify::lookup_constant(id)?.id]
    };
    let mut ok = true;
    for id in ids {
        let r = check_constant(id, alpha_max, step)?;
        let (at, max) = r.max_value;
        print!(
            "{}: {} < 0 on alpha in {}: {} points, max {max:.6e} at alpha={at}, {}",
            id,
            r.constant.expression(),
            r.grid,
            r.points_checked,
            if r.passed() { "pass" } else { "FAIL" }
        );
        if let Some(root) = r.sign_change {
            print!(", sign change at alpha={root:.6}");
        }
        println!();
        for (a, v) in &r.violations {
            println!("  violation alpha={a} value={v:e}");
        }
        ok &= r.passed();
    }
    Ok(ok)
}

fn prop_test(samples: usize, seed: u64, a: Option<f64>) -> Result<bool> {
    let sampler = match a {
        Some(v) => AlphaSampler::Fixed(Alpha::in_open_unit(v)?),
        None => AlphaSampler::Uniform {
            low: 0.001,
            high: 0.999,
        },
    };
    let r = verify::verify_transform_monotonicity(samples, sampler, seed)?;
    println!(
        "seed {}: {} instances, {} graphs skipped, {} counterexamples, min gain {:e}",
        r.seed,
        r.checked,
        r.skipped,
        r.counterexamples.len(),
        r.min_gain
    );
    for c in &r.counterexamples {
        println!(
            "counterexample {} u={} v={} alpha={} before={} after={}",
            c.graph6, c.u, c.v, c.alpha, c.before, c.after
        );
    }
    Ok(r.passed() && r.checked == samples)
}
