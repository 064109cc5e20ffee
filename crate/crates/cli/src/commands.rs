//! One function per subcommand, each returning a [`Report`].

use std::collections::HashMap;
use std::sync::Mutex;

use hurwitz_core::arith::{factorial, int, Rational};
use hurwitz_core::belyi::{belyi_quasipolynomial, enumerate_fatgraphs, gw_eval, lattice_count, GraphMode};
use hurwitz_core::intersection::{extract_brackets, wk_intersection};
use hurwitz_core::pruning::{transform_belyi, transform_orbifold, transform_simple, Direction};
use hurwitz_core::recursion::{
    pruned_orbifold_quasipolynomial, pruned_orbifold_value, pruned_simple_polynomial, unpruned_value,
};
use hurwitz_core::symgroup::{count_cycle, count_orbifold, count_simple, transposition_count, validate_mu};
use hurwitz_core::{format_rational, BracketKey, Budget, Error, MultiPolynomial, QuasiPolynomial, Result};
use serde_json::{json, Map, Value};

use crate::output::{mu_header, Report};
use crate::suites::{run_suite, Status};
use crate::tables;
use crate::{
    Command, ComputeArgs, DirectionArg, FamilyArg, IntersectArgs, PolyArgs, Source, TableArg, TableArgs, TransformArgs,
    TransformFamily, VerifyArgs,
};

pub fn dispatch(command: &Command, budget: &Budget) -> Result<Report> {
    match command {
        Command::Compute(args) => compute(args, budget),
        Command::Poly(args) => poly(args, budget),
        Command::Transform(args) => transform(args, budget),
        Command::Intersect(args) => intersect(args),
        Command::Verify(args) => verify(args, budget),
        Command::Table(args) => table(args),
    }
}

fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::Simple => "simple",
        FamilyArg::PrunedSimple => "pruned-simple",
        FamilyArg::Orbifold => "orbifold",
        FamilyArg::PrunedOrbifold => "pruned-orbifold",
        FamilyArg::Belyi => "belyi",
        FamilyArg::PrunedBelyi => "pruned-belyi",
        FamilyArg::Cycle => "cycle",
        FamilyArg::Gw => "gw",
    }
}

fn incompatible(what: &str, family: &str) -> Error {
    Error::domain(format!("{what} is not available for family {family}"))
}

/// `--a` is required for orbifold families and refused elsewhere.
fn orbifold_parameter(a: Option<usize>, orbifold: bool, family: &str) -> Result<usize> {
    match (a, orbifold) {
        (Some(0), _) => Err(Error::domain("orbifold parameter a must be positive")),
        (Some(a), true) => Ok(a),
        (None, true) => Err(Error::domain(format!("family {family} needs --a"))),
        (Some(_), false) => Err(incompatible("--a", family)),
        (None, false) => Ok(1),
    }
}

fn show(r: &Rational) -> String {
    format_rational(r)
}

fn compute(args: &ComputeArgs, budget: &Budget) -> Result<Report> {
    let family = family_name(args.family);
    let mu = &args.mu.0;
    let g = args.g;
    let orbifold = matches!(args.family, FamilyArg::Orbifold | FamilyArg::PrunedOrbifold);
    let a = orbifold_parameter(args.a, orbifold, family)?;
    if args.family != FamilyArg::Gw {
        validate_mu(mu)?;
    }
    let source = args.source.unwrap_or(match args.family {
        FamilyArg::Belyi | FamilyArg::PrunedBelyi => Source::Enumeration,
        FamilyArg::Cycle => Source::Oracle,
        _ => Source::Recursion,
    });
    let refuse = || Err(incompatible(&format!("source {source:?}").to_lowercase(), family));
    let mut fields: Vec<(&str, String)> = Vec::new();
    match args.family {
        FamilyArg::Simple | FamilyArg::PrunedSimple | FamilyArg::Orbifold | FamilyArg::PrunedOrbifold => {
            let pruned = matches!(args.family, FamilyArg::PrunedSimple | FamilyArg::PrunedOrbifold);
            let m = transposition_count(a, g, mu);
            let value = match (source, m) {
                (Source::Recursion, _) if pruned => pruned_orbifold_value(a, g, mu),
                (Source::Recursion, _) => unpruned_value(a, g, mu),
                (Source::Oracle, None) => Rational::from_integer(0.into()),
                (Source::Oracle, Some(m)) => {
                    let count = if orbifold {
                        count_orbifold(a, g, mu, pruned, budget)?
                    } else {
                        count_simple(g, mu, pruned, budget)?
                    };
                    Rational::new(count.into(), factorial(m as u32))
                }
                _ => return refuse(),
            };
            let count = match m {
                Some(m) => &value * Rational::from_integer(factorial(m as u32)),
                None => Rational::from_integer(0.into()),
            };
            fields.push(("value", show(&value)));
            fields.push(("m", m.map(|m| m.to_string()).unwrap_or_default()));
            fields.push((if pruned { "K" } else { "H" }, show(&count)));
        }
        FamilyArg::Belyi | FamilyArg::PrunedBelyi => {
            let pruned = args.family == FamilyArg::PrunedBelyi;
            let value = match source {
                Source::Enumeration => {
                    let mode = if pruned { GraphMode::Pruned } else { GraphMode::All };
                    enumerate_fatgraphs(g, mu, mode, budget)?.weighted
                }
                Source::Lattice if pruned => lattice_count(g, mu, budget)?,
                _ => return refuse(),
            };
            let prod: i64 = mu.iter().map(|&x| x as i64).product();
            fields.push(("value", show(&value)));
            fields.push(("value_times_prod_mu", show(&(&value * int(prod)))));
        }
        FamilyArg::Cycle => {
            if source != Source::Oracle {
                return refuse();
            }
            fields.push(("value", show(&count_cycle(g, mu, budget)?)));
        }
        FamilyArg::Gw => {
            if args.source.is_some() {
                return refuse();
            }
            let g = u32::try_from(g).map_err(|_| Error::domain("genus out of range"))?;
            let mu32: Vec<u32> = mu.iter().map(|&x| x as u32).collect();
            fields.push(("value", show(&gw_eval(g, &mu32)?)));
        }
    }
    let mut obj = Map::new();
    for (k, v) in &fields {
        let value = if *k == "m" && v.is_empty() { Value::Null } else { Value::String(v.clone()) };
        obj.insert(k.to_string(), value);
    }
    let extra: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let row = mu.iter().map(|x| x.to_string()).chain(fields.iter().map(|(_, v)| v.clone())).collect();
    Ok(Report::new(Value::Object(obj), mu_header(mu.len(), &extra), vec![row]))
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("mu{i}")).collect()
}

fn poly_rows(p: &MultiPolynomial, prefix: &[String]) -> Vec<Vec<String>> {
    p.graded_lex_terms()
        .into_iter()
        .map(|(e, c)| prefix.iter().cloned().chain(e.iter().map(|x| x.to_string())).chain([show(c)]).collect())
        .collect()
}

fn quasi_report(q: &QuasiPolynomial, mut json: Map<String, Value>) -> Report {
    let n = q.nvars();
    json.insert("quasipolynomial".into(), q.to_json());
    let mut header: Vec<String> = (1..=n).map(|i| format!("r{i}")).collect();
    header.extend((1..=n).map(|i| format!("e{i}")));
    header.push("coef".into());
    let mut rows = Vec::new();
    for (r, p) in q.branches() {
        let prefix: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        rows.extend(poly_rows(p, &prefix));
    }
    Report::new(Value::Object(json), header, rows)
}

fn poly(args: &PolyArgs, budget: &Budget) -> Result<Report> {
    let family = family_name(args.family);
    let orbifold = args.family == FamilyArg::PrunedOrbifold;
    let a = orbifold_parameter(args.a, orbifold, family)?;
    let mut json = Map::new();
    json.insert("family".into(), json!(family));
    if orbifold {
        json.insert("a".into(), json!(a));
    }
    json.insert("g".into(), json!(args.g));
    json.insert("n".into(), json!(args.n));
    match args.family {
        FamilyArg::PrunedSimple => {
            let p = pruned_simple_polynomial(args.g, args.n)?;
            json.insert("poly".into(), p.to_json());
            let mut header: Vec<String> = (1..=args.n).map(|i| format!("e{i}")).collect();
            header.push("coef".into());
            Ok(Report::new(Value::Object(json), header, poly_rows(&p, &[])))
        }
        FamilyArg::PrunedOrbifold => {
            json.insert("scale".into(), json!(format!("{a}^(|mu|/{a})")));
            Ok(quasi_report(&pruned_orbifold_quasipolynomial(a, args.g, args.n)?, json))
        }
        FamilyArg::PrunedBelyi => Ok(quasi_report(&belyi_quasipolynomial(args.g, args.n, budget)?, json)),
        _ => Err(incompatible("poly", family)),
    }
}

fn transform(args: &TransformArgs, budget: &Budget) -> Result<Report> {
    let (family, orbifold) = match args.family {
        TransformFamily::Simple => ("simple", false),
        TransformFamily::Orbifold => ("orbifold", true),
        TransformFamily::Belyi => ("belyi", false),
    };
    let a = orbifold_parameter(args.a, orbifold, family)?;
    let (g, mu) = (args.g, &args.mu.0);
    validate_mu(mu)?;
    let direction = match args.direction {
        DirectionArg::PrunedToFull => Direction::PrunedToFull,
        DirectionArg::FullToPruned => Direction::FullToPruned,
    };
    let to_pruned = direction == Direction::FullToPruned;
    let (value, direct) = match args.family {
        TransformFamily::Simple | TransformFamily::Orbifold => {
            let source = move |nu: &[usize]| -> Result<Rational> {
                Ok(if to_pruned { unpruned_value(a, g, nu) } else { pruned_orbifold_value(a, g, nu) })
            };
            let value = if orbifold {
                transform_orbifold(a, direction, g, mu, &source)?
            } else {
                transform_simple(direction, g, mu, &source)?
            };
            let direct = if to_pruned { pruned_orbifold_value(a, g, mu) } else { unpruned_value(a, g, mu) };
            (value, direct)
        }
        TransformFamily::Belyi => {
            let memo: Mutex<HashMap<(Vec<usize>, bool), Rational>> = Mutex::new(HashMap::new());
            let count = |nu: &[usize], pruned: bool| -> Result<Rational> {
                if let Some(v) = memo.lock().expect("memo").get(&(nu.to_vec(), pruned)) {
                    return Ok(v.clone());
                }
                let mode = if pruned { GraphMode::Pruned } else { GraphMode::All };
                let v = enumerate_fatgraphs(g, nu, mode, budget)?.weighted;
                memo.lock().expect("memo").insert((nu.to_vec(), pruned), v.clone());
                Ok(v)
            };
            let value = transform_belyi(direction, g, mu, &|nu: &[usize]| count(nu, !to_pruned))?;
            (value, count(mu, to_pruned)?)
        }
    };
    let direction_name = if to_pruned { "full-to-pruned" } else { "pruned-to-full" };
    let mut json = Map::new();
    json.insert("family".into(), json!(family));
    if orbifold {
        json.insert("a".into(), json!(a));
    }
    json.insert("direction".into(), json!(direction_name));
    json.insert("g".into(), json!(g));
    json.insert("mu".into(), json!(mu));
    json.insert("value".into(), json!(show(&value)));
    json.insert("direct".into(), json!(show(&direct)));
    json.insert("agrees".into(), json!(value == direct));
    let row =
        mu.iter().map(|x| x.to_string()).chain([show(&value), show(&direct), (value == direct).to_string()]).collect();
    Ok(Report::new(Value::Object(json), mu_header(mu.len(), &["value", "direct", "agrees"]), vec![row]))
}

fn bracket_report(entries: Vec<(BracketKey, Rational)>, single: bool) -> Report {
    let n = entries.first().map(|(k, _)| k.d.len()).unwrap_or(0);
    let mut header = vec!["g".to_string()];
    header.extend((1..=n).map(|i| format!("d{i}")));
    header.extend(["lambda".to_string(), "value".to_string()]);
    let rows = entries
        .iter()
        .map(|(k, v)| {
            std::iter::once(k.g.to_string())
                .chain(k.d.iter().map(|x| x.to_string()))
                .chain([k.ell.to_string(), show(v)])
                .collect()
        })
        .collect();
    let json = if single {
        entries[0].0.to_json(&entries[0].1)
    } else {
        Value::Array(entries.iter().map(|(k, v)| k.to_json(v)).collect())
    };
    Report::new(json, header, rows)
}

fn intersect(args: &IntersectArgs) -> Result<Report> {
    let g = args.g;
    match &args.d {
        Some(d) => {
            if let Some(n) = args.n {
                if n != d.len() {
                    return Err(Error::domain(format!("--n {n} disagrees with {} entries of --d", d.len())));
                }
            }
            let key = BracketKey::new(g, d.clone(), args.lambda);
            let value = if args.lambda == 0 {
                wk_intersection(g, d)
            } else if !key.is_dimensional() {
                Rational::from_integer(0.into())
            } else {
                let p = pruned_simple_polynomial(g as usize, d.len())?;
                extract_brackets(g, d.len(), &p)?.remove(&key).unwrap_or_else(|| Rational::from_integer(0.into()))
            };
            Ok(bracket_report(vec![(key, value)], true))
        }
        None => {
            let n = args.n.ok_or_else(|| Error::domain("intersect needs --d or --n"))?;
            let p = pruned_simple_polynomial(g as usize, n)?;
            let entries: Vec<_> = extract_brackets(g, n, &p)?.into_iter().collect();
            Ok(bracket_report(entries, false))
        }
    }
}

fn verify(args: &VerifyArgs, budget: &Budget) -> Result<Report> {
    let checks = run_suite(&args.suite, budget)?;
    let failed = checks.iter().any(|c| c.status == Status::Fail);
    let json = json!({
        "suite": args.suite,
        "passed": !failed,
        "checks": checks.iter().map(|c| json!({
            "suite": c.suite, "name": c.name, "status": c.status.as_str(), "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    let header = ["status", "suite", "check", "detail"].map(String::from).to_vec();
    let rows = checks
        .iter()
        .map(|c| vec![c.status.as_str().to_string(), c.suite.to_string(), c.name.clone(), c.detail.clone()])
        .collect();
    let mut report = Report::new(json, header, rows);
    report.failed = failed;
    Ok(report)
}

fn table(args: &TableArgs) -> Result<Report> {
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match args.which {
        TableArg::Khat => (
            vec!["g", "n", "printed", "recomputed", "match"],
            tables::compare_khat()?
                .iter()
                .map(|c| {
                    let names = var_names(c.row.n);
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    vec![
                        c.row.g.to_string(),
                        c.row.n.to_string(),
                        c.row.printed.display_with(&refs),
                        c.recomputed.display_with(&refs),
                        c.matches().to_string(),
                    ]
                })
                .collect(),
        ),
        TableArg::Q => (
            vec!["d", "printed", "recomputed", "match"],
            tables::Q_ROWS
                .iter()
                .map(|&(d, _, _)| {
                    let printed = tables::q_printed(d).expect("row exists");
                    let recomputed = tables::q_recomputed(d);
                    vec![
                        d.to_string(),
                        printed.display_with(&["nu"]),
                        recomputed.display_with(&["nu"]),
                        (printed == recomputed).to_string(),
                    ]
                })
                .collect(),
        ),
        TableArg::Gw => {
            let rows = tables::gw_rows();
            (
                vec!["g", "n", "odd", "formula", "mu", "printed", "recomputed", "match"],
                tables::compare_gw()?
                    .iter()
                    .map(|(idx, mu, printed, recomputed)| {
                        let row = &rows[*idx];
                        let odd: Vec<String> = row.odd.iter().map(|x| x.to_string()).collect();
                        let mu: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
                        vec![
                            row.g.to_string(),
                            row.n.to_string(),
                            odd.join("|"),
                            row.text.to_string(),
                            mu.join(" "),
                            show(printed),
                            show(recomputed),
                            (printed == recomputed).to_string(),
                        ]
                    })
                    .collect(),
            )
        }
    };
    let json = Value::Array(
        rows.iter()
            .map(|r| {
                let mut obj = Map::new();
                for (h, v) in header.iter().zip(r) {
                    let value = if *h == "match" { json!(v == "true") } else { json!(v) };
                    obj.insert(h.to_string(), value);
                }
                Value::Object(obj)
            })
            .collect(),
    );
    Ok(Report::new(json, header.iter().map(|s| s.to_string()).collect(), rows))
}
