//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use anyhow::{bail, Context, Result};
use euler_trace::chi::{construct_g_rho, BetaStatus, Evaluator, GroupExpr};
use euler_trace::fusion::INFINITE_ORDER_NOTE;
use euler_trace::io::{self, element_ref_to_spec, expr_to_spec, format_rational};
use euler_trace::ring::{hs_trace_raw, product_class, restrict_matrix, tensor_matrix};
use euler_trace::{ClassFunction, FiniteGroup, QExpr, QMatrix, Rational};
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::report::{eval_value, q, rule_tags, Check, Report};

pub const DEFAULT_PRIME_BOUND: u64 = 100;

fn class_rows(g: &FiniteGroup, values: &ClassFunction<Rational>) -> Value {
    Value::Array(
        g.classes()
            .iter()
            .enumerate()
            .map(|(c, class)| {
                json!({
                    "class": c,
                    "representative": g.label(class.representative),
                    "size": class.len(),
                    "value": q(values.get(c)),
                })
            })
            .collect(),
    )
}

pub fn group_info(path: &Path, prime_bound: u64) -> Result<Report> {
    let g = io::load_group(path).with_context(|| format!("loading group {}", path.display()))?;
    let mut r = Report::new(format!("group {}", base_name(path)));
    r.input_file(path)?;
    r.result("order", json!(g.order()));
    r.result("num_classes", json!(g.num_classes()));
    r.result("abelian", json!(g.is_abelian()));
    r.result("associativity_fully_verified", json!(g.fully_verified()));
    if !g.fully_verified() {
        r.warn("associativity spot-checked only (order above the full-check limit)");
    }
    let mut rows = Vec::new();
    let mut class_total = 0;
    for (c, class) in g.classes().iter().enumerate() {
        let s = class.representative;
        let centralizer = g.centralizer_order(s);
        let power = g.power_conjugacy_check(s, prime_bound);
        class_total += class.len();
        rows.push(json!({
            "class": c,
            "representative": g.label(s),
            "size": class.len(),
            "element_order": g.element_order(s),
            "centralizer_order": centralizer,
            "power_conjugacy_holds": power.holds,
            "power_conjugacy_n": power.witness_n,
        }));
        r.check(Check::new(
            format!("|class {c}| * |C_G({})| = |G|", g.label(s)),
            (class.len() * centralizer).to_string(),
            g.order().to_string(),
            class.len() * centralizer == g.order(),
            "orbit-stabilizer",
        ));
        r.check(Check::new(
            format!("s^(p^N) conjugate to s for p <= {prime_bound} coprime to |G|, s = {}", g.label(s)),
            power.witness_n.map_or("no N found".to_string(), |n| format!("N = {n}")),
            "some N in 1..|G|",
            power.holds,
            "power-conjugacy",
        ));
    }
    r.result("classes", Value::Array(rows));
    r.check(Check::new(
        "sum of class sizes = |G|",
        class_total.to_string(),
        g.order().to_string(),
        class_total == g.order(),
        "class-equation",
    ));
    Ok(r)
}

fn parse_elements(g: &FiniteGroup, list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(i) if i < g.order() => Ok(i),
            Ok(i) => bail!("element {i} outside a group of order {}", g.order()),
            Err(_) => g
                .element_by_label(s)
                .with_context(|| format!("no element labelled {s:?}")),
        })
        .collect()
}

/// Sum rule and idempotency are checked in every report.
fn trace_checks(r: &mut Report, m: &QMatrix, prefix: &str) -> ClassFunction<Rational> {
    let idempotent = m.is_idempotent();
    r.check(Check::new(
        format!("{prefix}M * M = M"),
        if idempotent { "M * M" } else { "M * M (differs)" },
        "M",
        idempotent,
        "idempotent",
    ));
    let hs = hs_trace_raw(m);
    let aug = (0..m.size()).fold(Rational::zero(), |acc, i| acc + m.entry(i, i).augmentation());
    r.check(Check::rational(
        format!("{prefix}sum over classes of HS(M) = augmentation rank"),
        &hs.sum(),
        &aug,
        "class-sum-rule",
    ));
    hs
}

pub fn hs(path: &Path, restrict: Option<&str>, tensor: Option<&Path>, raw: bool) -> Result<Report> {
    let m = io::load_matrix(path).with_context(|| format!("loading matrix {}", path.display()))?;
    let mut echo = format!("hs {}", base_name(path));
    if let Some(h) = restrict {
        echo.push_str(&format!(" --restrict {h}"));
    }
    if let Some(t) = tensor {
        echo.push_str(&format!(" --tensor {}", base_name(t)));
    }
    if raw {
        echo.push_str(" --raw");
    }
    let mut r = Report::new(echo);
    r.input_file(path)?;
    let g = m.group().clone();
    let hs = trace_checks(&mut r, &m, "");
    if !m.is_idempotent() {
        if raw {
            r.warn("matrix is not idempotent; the raw trace is reported");
        } else {
            r.warn("matrix is not idempotent; HS is defined only for idempotents (use --raw to inspect)");
        }
    }
    r.result("group_order", json!(g.order()));
    r.result("size", json!(m.size()));
    r.result("hs", class_rows(&g, &hs));
    r.result("kaplansky_trace", q(hs.get(0)));
    r.check(Check::new(
        "HS(M)(s) = 0 at every s of infinite order",
        "no elements of infinite order",
        "0 classes to check",
        true,
        "vacuous-for-finite-groups",
    ));

    if let Some(list) = restrict {
        let elems = parse_elements(&g, list)?;
        let res = restrict_matrix(&m, &elems)?;
        let h = res.subgroup.group();
        let small = trace_checks(&mut r, &res.matrix, "restricted: ");
        let mut rows = Vec::new();
        for (c, class) in h.classes().iter().enumerate() {
            let s = res.subgroup.to_parent(class.representative);
            let index = res.centralizer_index(&g, class.representative);
            let scaled = hs.get(g.class_of(s)).clone() * Rational::from_integer(index.into());
            rows.push(json!({
                "class": c,
                "element": g.label(s),
                "centralizer_index": index,
                "value": q(small.get(c)),
            }));
            r.check(Check::rational(
                format!("HS_H(res M)({}) = [C_G(s):C_H(s)] * HS_G(M)(s)", g.label(s)),
                small.get(c),
                &scaled,
                "restriction-index",
            ));
        }
        r.result("restricted_hs", Value::Array(rows));
        r.result("subgroup_order", json!(h.order()));
    }

    if let Some(other) = tensor {
        r.input_file(other)?;
        let n = io::load_matrix(other)
            .with_context(|| format!("loading matrix {}", other.display()))?;
        let hn = trace_checks(&mut r, &n, "second factor: ");
        let t = tensor_matrix(&m, &n);
        let ht = trace_checks(&mut r, &t.matrix, "tensor: ");
        let b = n.group();
        let mut rows = Vec::new();
        for (ca, a) in g.classes().iter().enumerate() {
            for (cb, bc) in b.classes().iter().enumerate() {
                let c = product_class(&t.group, b.order(), a.representative, bc.representative);
                let prod = hs.get(ca).clone() * hn.get(cb).clone();
                rows.push(json!({
                    "a": g.label(a.representative),
                    "b": b.label(bc.representative),
                    "value": q(ht.get(c)),
                }));
                r.check(Check::rational(
                    format!(
                        "HS(M x N)({}, {}) = HS(M)(a) * HS(N)(b)",
                        g.label(a.representative),
                        b.label(bc.representative)
                    ),
                    ht.get(c),
                    &prod,
                    "tensor-multiplicativity",
                ));
            }
        }
        r.result("tensor_hs", Value::Array(rows));
    }
    Ok(r)
}

pub fn graph(path: &Path, verify: bool) -> Result<Report> {
    let g = io::load_graph(path).with_context(|| format!("loading graph {}", path.display()))?;
    let mut r = Report::new(format!("graph {}{}", base_name(path), if verify { " --verify" } else { "" }));
    r.input_file(path)?;
    let report = g.verify_fusion::<Rational>();
    r.result("vertices", json!(g.vertices().len()));
    r.result("edges", json!(g.edges().len()));
    r.result("euler_characteristic", q(&report.euler_characteristic));
    r.result(
        "fusion_classes",
        Value::Array(
            report
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "class": row.class,
                        "label": row.label,
                        "element_order": row.element_order,
                        "complete_euler": q(&row.euler),
                        "chi2_centralizer": q(&row.chi2_centralizer),
                    })
                })
                .collect(),
        ),
    );
    r.result("class_sum", q(&report.class_sum));
    r.result("note", json!(INFINITE_ORDER_NOTE));
    let identity = &report.rows[0];
    r.check(Check::rational(
        "E(G)(1) = e(G)",
        &identity.euler,
        &report.euler_characteristic,
        "identity-class-coherence",
    ));
    r.check(Check::new(
        "sum over fusion classes of E(G) = |V| - |E|",
        format_rational(&report.class_sum),
        format!("{}/1", report.naive_euler),
        report.class_sum_ok,
        "fusion-global-sum",
    ));
    if verify {
        for row in &report.rows {
            r.check(Check::rational(
                format!("E(G)(s) = chi2(C_G(s)) at {}", row.label),
                &row.euler,
                &row.chi2_centralizer,
                "fusion-pushforward vs fusion-fixed-tree",
            ));
        }
    }
    for w in &report.warnings {
        r.warn(w.clone());
    }
    Ok(r)
}

fn beta_value(ev: &mut Evaluator, e: &QExpr) -> Value {
    match ev.beta(e) {
        BetaStatus::Known(b) => Value::Array(b.entries().iter().map(q).collect()),
        BetaStatus::Convergent => json!("convergent (entries not computed)"),
        BetaStatus::Unknown => json!("unknown"),
    }
}

pub fn expr(path: &Path, mark: Option<&str>) -> Result<Report> {
    let file = io::load_expr(path).with_context(|| format!("loading expression {}", path.display()))?;
    let mut echo = format!("expr {}", base_name(path));
    if let Some(m) = mark {
        echo.push_str(&format!(" --mark {m}"));
    }
    let mut r = Report::new(echo);
    r.input_file(path)?;
    let e = &file.expr;
    let mut ev = Evaluator::new();
    let chi2 = ev.eval_chi2(e);
    let chi2_rules = ev.take_rules();
    let euler = ev.eval_e(e);
    ev.take_rules();
    r.result("kind", json!(e.kind()));
    r.result("type_fp", json!(Evaluator::is_type_fp(e)));
    r.result("beta", beta_value(&mut ev, e));
    r.result("chi2", eval_value(&chi2));
    r.result("chi2_justification", json!(rule_tags(&chi2_rules)));
    r.result("e", eval_value(&euler));
    if let Some(beta) = ev.eval_beta(e) {
        r.check(Check::eval(
            "chi2(G) = alternating sum of beta(G)",
            &chi2,
            &Ok(beta.alternating_sum()),
            "kunneth-convolution",
        ));
    }
    if euler.is_ok() {
        r.check(Check::eval("e(G) = chi2(G)", &euler, &chi2, "fp-chi-equals-e"));
    }
    if let GroupExpr::Product(fs) = e {
        let factors: Vec<_> = fs.iter().map(|f| ev.eval_chi2(f)).collect();
        if factors.iter().all(Result::is_ok) {
            let prod = factors
                .iter()
                .fold(Rational::from_integer(1.into()), |acc, f| acc * f.clone().expect("checked"));
            r.check(Check::eval(
                "chi2(product) = product of chi2(factors)",
                &chi2,
                &Ok(prod),
                "product-multiplicativity",
            ));
        }
        r.result("factor_chi2", Value::Array(factors.iter().map(eval_value).collect()));
    }
    let marks: Vec<_> = match mark {
        None => file.marks.iter().collect(),
        Some(name) => {
            let found: Vec<_> = file.marks.iter().filter(|m| m.name == name).collect();
            if found.is_empty() {
                bail!("no mark named {name:?} in {}", path.display());
            }
            found
        }
    };
    let mut rows = Vec::new();
    for m in marks {
        let me = ev.evaluate_mark(e, m);
        rows.push(json!({
            "mark": m.name,
            "order": m.order,
            "complete_euler": eval_value(&me.euler),
            "chi2_centralizer": eval_value(&me.chi2_centralizer),
            "centralizer_type_fp": me.centralizer_type_fp.map_or(json!("unknown"), Value::Bool),
        }));
        r.check(Check::eval(
            format!("E(G)({}) = chi2(C_G({}))", m.name, m.name),
            &me.euler,
            &me.chi2_centralizer,
            format!("{} | {}", rule_tags(&me.euler_rules), rule_tags(&me.chi2_rules)),
        ));
        for n in me.notes {
            r.warn(format!("mark {}: {n}", m.name));
        }
    }
    if !rows.is_empty() {
        r.result("marks", Value::Array(rows));
    }
    Ok(r)
}

pub fn construct_rho(rho: &str) -> Result<Report> {
    let value = io::parse_rational(rho)?;
    let (Some(num), Some(den)) = (value.numer().to_i64(), value.denom().to_i64()) else {
        bail!("rho = {rho} does not fit 64-bit numerator and denominator");
    };
    if num.checked_mul(2).is_none() {
        bail!("rho = {rho} is too large");
    }
    let mut r = Report::new(format!("construct-rho {rho}"));
    r.input_text("rho", rho);
    let c = construct_g_rho::<Rational>(num, den)?;
    let ev = &c.evaluation;
    let target = Ok(value.clone());
    r.result("rho", q(&value));
    r.result("expression", serde_json::to_value(expr_to_spec(&c.expr))?);
    r.result("mark", serde_json::to_value(element_ref_to_spec(&c.mark.at))?);
    r.result("complete_euler", eval_value(&ev.euler));
    r.result("chi2_centralizer", eval_value(&ev.chi2_centralizer));
    r.result(
        "centralizer_type_fp",
        ev.centralizer_type_fp.map_or(json!("unknown"), Value::Bool),
    );
    let GroupExpr::Product(parts) = &c.expr else {
        unreachable!("G(rho) is a product");
    };
    let mut sub = Evaluator::new();
    let k_side = sub.chi2_centralizer(&parts[0], &euler_trace::ElementRef::Declared("t".into()));
    let k_rules = sub.take_rules();
    let factor = sub.eval_chi2(&parts[1]);
    let factor_rules = sub.take_rules();
    r.check(Check::eval(
        "chi2(C_K(t)) = -1/2",
        &k_side,
        &Ok(Rational::new((-1).into(), 2.into())),
        rule_tags(&k_rules),
    ));
    r.check(Check::eval(
        "chi2(G_{-2 rho}) = -2 rho",
        &factor,
        &Ok(value.clone() * Rational::from_integer((-2).into())),
        rule_tags(&factor_rules),
    ));
    r.check(Check::eval("E(G)(t) = rho", &ev.euler, &target, rule_tags(&ev.euler_rules)));
    r.check(Check::eval(
        "chi2(C_G(t)) = rho",
        &ev.chi2_centralizer,
        &target,
        rule_tags(&ev.chi2_rules),
    ));
    r.check(Check::eval(
        "E(G)(t) = chi2(C_G(t))",
        &ev.euler,
        &ev.chi2_centralizer,
        "structural recursions agree",
    ));
    let fp = ev
        .centralizer_type_fp
        .map_or("unknown".to_string(), |b| b.to_string());
    r.check(Check::new(
        "C_G(t) is not of type FP",
        format!("type FP: {fp}"),
        "type FP: false",
        ev.centralizer_type_fp == Some(false),
        "declared",
    ));
    for n in &ev.notes {
        r.warn(n.clone());
    }
    Ok(r)
}

pub fn base_name(path: &Path) -> String {
    path.file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}
