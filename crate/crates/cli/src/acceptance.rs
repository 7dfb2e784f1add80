//! The acceptance criteria, shared by `selftest` and the acceptance test
//! target. Every comparison is an exact rational equality.

use std::sync::Arc;

use euler_trace::chi::{
    construct_g_rho, free_product_family, rho::amalgam_k, BettiVector, ElementRef, Evaluator,
};
use euler_trace::fusion::{models, GraphOfGroups};
use euler_trace::group::zoo;
use euler_trace::io::format_rational;
use euler_trace::ring::{
    augmentation_dim, hs_trace, product_class, restrict_matrix, tensor_matrix,
    wall_element_finite,
};
use euler_trace::sampling::{
    conjugate, random_block_idempotent, random_elementary, random_graph, random_idempotent,
};
use euler_trace::{FiniteGroup, GroupRingElement, QMatrix, Rational, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::report::{eval_string, Check};

pub const DEFAULT_SEED: u64 = 20_260_101;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub run: fn(u64) -> Vec<Check>,
}

pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.equal)
    }

    pub fn line(&self) -> String {
        let failed = self.checks.iter().filter(|c| !c.equal).count();
        format!(
            "criterion {:>2} {:<26} {} ({} checks, {failed} failed)",
            self.id,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len()
        )
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "finite-wall-element", run: finite_wall_element },
        Criterion { id: 2, name: "sum-rule", run: sum_rule },
        Criterion { id: 3, name: "restriction-formula", run: restriction_formula },
        Criterion { id: 4, name: "tensor-formula", run: tensor_formula },
        Criterion { id: 5, name: "graph-psl2z", run: graph_psl2z },
        Criterion { id: 6, name: "graph-sl2z", run: graph_sl2z },
        Criterion { id: 7, name: "graph-d-infinity", run: graph_d_infinity },
        Criterion { id: 8, name: "free-product-family-sweep", run: free_product_sweep },
        Criterion { id: 9, name: "rho-construction", run: rho_pipeline },
        Criterion { id: 10, name: "property-suites", run: property_suites },
    ]
}

/// Criteria whose name contains `filter`, or whose id equals it.
pub fn run(filter: Option<&str>, seed: u64) -> Vec<Outcome> {
    criteria()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f) || c.id.to_string() == f))
        .map(|c| Outcome {
            id: c.id,
            name: c.name,
            checks: (c.run)(seed),
        })
        .collect()
}

fn q(n: i64, d: i64) -> Rational {
    <Rational as Scalar>::ratio(n, d)
}

fn rng_for(seed: u64, criterion: u64) -> StdRng {
    StdRng::seed_from_u64(seed ^ criterion.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn e_g(g: &Arc<FiniteGroup>) -> QMatrix {
    let all: Vec<_> = g.elements().collect();
    QMatrix::scalar(GroupRingElement::averaging(g.clone(), &all))
}

fn zoo_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    zoo::standard().into_iter().map(|(n, g)| (n, Arc::new(g))).collect()
}

fn finite_wall_element(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, g) in zoo_groups() {
        // coefficient sums of e_G against commuting pairs counted directly
        let wall = wall_element_finite::<Rational>(&g);
        for (c, class) in g.classes().iter().enumerate() {
            let s = class.representative;
            let commuting = g.elements().filter(|&x| g.mul(x, s) == g.mul(s, x)).count();
            out.push(Check::rational(
                format!("{name}: E(G)({}) = 1/|C_G(s)|", g.label(s)),
                wall.get(c),
                &<Rational as Scalar>::recip(commuting),
                "finite-wall-element vs finite-centralizer-brute-force",
            ));
        }
    }
    out
}

fn sum_rule_check(label: String, p: &QMatrix) -> (bool, String) {
    let hs = hs_trace(p).expect("idempotent sample");
    let aug = augmentation_dim(p).expect("idempotent sample");
    let ok = hs.sum() == aug;
    (ok, format!("{label}: {} vs {}", format_rational(&hs.sum()), format_rational(&aug)))
}

fn sum_rule(seed: u64) -> Vec<Check> {
    let mut rng = rng_for(seed, 2);
    let mut out = Vec::new();
    for (name, g) in zoo_groups() {
        let e = e_g(&g);
        let hs = hs_trace(&e).expect("e_G is idempotent");
        out.push(Check::rational(
            format!("{name}: sum over classes of HS(e_G) = augmentation rank"),
            &hs.sum(),
            &augmentation_dim(&e).expect("idempotent"),
            "class-sum-rule",
        ));
        let mut agreeing = 0;
        let mut first = None;
        for trial in 0..100 {
            let size = rng.gen_range(1..=3);
            let p = random_idempotent::<Rational, _>(&mut rng, &g, size, 2);
            let (ok, detail) = sum_rule_check(format!("trial {trial}"), &p);
            if ok {
                agreeing += 1;
            } else {
                first.get_or_insert(detail);
            }
        }
        out.push(Check::tally(
            format!("{name}: sum rule on random similarity-conjugates of block idempotents"),
            agreeing,
            100,
            first,
            "class-sum-rule",
        ));
    }
    out
}

/// `(G, H elements)` for the restriction pairs.
fn restriction_pairs() -> Vec<(&'static str, Arc<FiniteGroup>, Vec<usize>)> {
    let s4 = zoo::symmetric(4);
    let s3: Vec<usize> = s4
        .elements()
        .filter(|&x| s4.permutation(x).expect("permutation group")[3] == 3)
        .collect();
    let d4 = zoo::dihedral(4);
    let rotation = d4.elements().find(|&x| d4.element_order(x) == 4).expect("rotation");
    let rotations = d4.generated(&[rotation]);
    vec![
        ("S4 > S3", Arc::new(s4), s3),
        ("Z/4 > Z/2", Arc::new(zoo::cyclic(4)), vec![0, 2]),
        ("D4 > Z/4", Arc::new(d4), rotations),
    ]
}

/// Mismatch description, if any, of the restriction identity on `p`.
fn restriction_mismatch(g: &FiniteGroup, p: &QMatrix, h: &[usize]) -> Option<String> {
    let res = restrict_matrix(p, h).expect("subgroup");
    let small = hs_trace(&res.matrix).expect("restriction keeps idempotents");
    let big = hs_trace(p).expect("idempotent");
    for (c, class) in res.subgroup.group().classes().iter().enumerate() {
        let s = res.subgroup.to_parent(class.representative);
        let index = res.centralizer_index(g, class.representative);
        let rhs = big.get(g.class_of(s)).clone() * q(index as i64, 1);
        if small.get(c) != &rhs {
            return Some(format!(
                "at {}: {} vs {}",
                g.label(s),
                format_rational(small.get(c)),
                format_rational(&rhs)
            ));
        }
    }
    None
}

fn restriction_formula(seed: u64) -> Vec<Check> {
    let mut rng = rng_for(seed, 3);
    let mut out = Vec::new();
    for (name, g, h) in restriction_pairs() {
        let e = e_g(&g);
        let res = restrict_matrix(&e, &h).expect("subgroup");
        let small = hs_trace(&res.matrix).expect("idempotent");
        let big = hs_trace(&e).expect("idempotent");
        for (c, class) in res.subgroup.group().classes().iter().enumerate() {
            let s = res.subgroup.to_parent(class.representative);
            let index = res.centralizer_index(&g, class.representative);
            out.push(Check::rational(
                format!("{name}: HS_H(res e_G)({}) = [C_G(s):C_H(s)] HS_G(e_G)(s)", g.label(s)),
                small.get(c),
                &(big.get(g.class_of(s)).clone() * q(index as i64, 1)),
                "restriction-index",
            ));
        }
        let mut agreeing = 0;
        let mut first = None;
        for _ in 0..20 {
            let size = rng.gen_range(1..=2);
            let p = random_idempotent::<Rational, _>(&mut rng, &g, size, 2);
            match restriction_mismatch(&g, &p, &h) {
                None => agreeing += 1,
                Some(m) => {
                    first.get_or_insert(m);
                }
            }
        }
        out.push(Check::tally(
            format!("{name}: restriction identity on random idempotents"),
            agreeing,
            20,
            first,
            "restriction-index",
        ));
    }
    out
}

fn tensor_formula(seed: u64) -> Vec<Check> {
    let mut rng = rng_for(seed, 4);
    let a = Arc::new(zoo::symmetric(3));
    let b = Arc::new(zoo::cyclic(4));
    let mut agreeing = 0;
    let mut total = 0;
    let mut first = None;
    for _ in 0..20 {
        let size = rng.gen_range(1..=2);
        let p = random_idempotent::<Rational, _>(&mut rng, &a, size, 2);
        let size = rng.gen_range(1..=2);
        let r = random_idempotent::<Rational, _>(&mut rng, &b, size, 2);
        let t = tensor_matrix(&p, &r);
        let (hp, hr) = (hs_trace(&p).expect("idempotent"), hs_trace(&r).expect("idempotent"));
        let ht = hs_trace(&t.matrix).expect("tensor of idempotents");
        for (ca, x) in a.classes().iter().enumerate() {
            for (cb, y) in b.classes().iter().enumerate() {
                total += 1;
                let c = product_class(&t.group, b.order(), x.representative, y.representative);
                let rhs = hp.get(ca).clone() * hr.get(cb).clone();
                if ht.get(c) == &rhs {
                    agreeing += 1;
                } else {
                    first.get_or_insert(format!(
                        "({}, {}): {} vs {}",
                        a.label(x.representative),
                        b.label(y.representative),
                        format_rational(ht.get(c)),
                        format_rational(&rhs)
                    ));
                }
            }
        }
    }
    vec![Check::tally(
        "S3 x Z/4: HS(P x Q)(a, b) = HS(P)(a) HS(Q)(b) over all class pairs",
        agreeing,
        total,
        first,
        "tensor-multiplicativity",
    )]
}

/// Checks shared by the three graph models.
fn graph_checks(name: &str, g: &GraphOfGroups, e: Rational) -> (Vec<Check>, Vec<(u64, Rational)>) {
    let report = g.verify_fusion::<Rational>();
    let mut out = vec![Check::rational(
        format!("{name}: e(G)"),
        &report.euler_characteristic,
        &e,
        "finite-graph-euler-formula",
    )];
    for row in &report.rows {
        out.push(Check::rational(
            format!("{name}: E(G)(s) = chi2(C_G(s)) at {}", row.label),
            &row.euler,
            &row.chi2_centralizer,
            "fusion-pushforward vs fusion-fixed-tree",
        ));
    }
    out.push(Check::rational(
        format!("{name}: sum over fusion classes of E(G) = |V| - |E|"),
        &report.class_sum,
        &q(report.naive_euler, 1),
        "fusion-global-sum",
    ));
    out.push(Check::rational(
        format!("{name}: sum over fusion classes of E(G)"),
        &report.class_sum,
        &q(1, 1),
        "fusion-global-sum",
    ));
    let values = report
        .rows
        .iter()
        .filter(|r| r.element_order != 1)
        .map(|r| (r.element_order, r.euler.clone()))
        .collect();
    (out, values)
}

fn sorted_values(values: &[(u64, Rational)], order: u64) -> Vec<Rational> {
    let mut v: Vec<_> = values.iter().filter(|(o, _)| *o == order).map(|(_, x)| x.clone()).collect();
    v.sort();
    v
}

fn list(xs: &[Rational]) -> String {
    let parts: Vec<_> = xs.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn graph_psl2z(_: u64) -> Vec<Check> {
    let (mut out, values) = graph_checks("Z/2 * Z/3", &models::psl2z(), q(-1, 6));
    let mut nontrivial: Vec<_> = values.iter().map(|(_, x)| x.clone()).collect();
    nontrivial.sort();
    let expected = vec![q(1, 3), q(1, 3), q(1, 2)];
    out.push(Check::new(
        "Z/2 * Z/3: E(G) on the non-identity classes",
        list(&nontrivial),
        list(&expected),
        nontrivial == expected,
        "fusion-pushforward",
    ));
    out
}

fn graph_sl2z(_: u64) -> Vec<Check> {
    let g = models::sl2z();
    let (mut out, values) = graph_checks("Z/4 *_Z/2 Z/6", &g, q(-1, 12));
    let table = g.fusion_classes();
    let z4 = &g.vertices()[0];
    let central = table.class_of((0, z4.class_of(2)));
    let euler = g.complete_euler_char::<Rational>(&table);
    out.push(Check::rational(
        "Z/4 *_Z/2 Z/6: E(G) at the central involution = e(G)",
        euler.get(central),
        &g.e_of_graph::<Rational>(),
        "central-element",
    ));
    out.push(Check::rational(
        "Z/4 *_Z/2 Z/6: E(G) at the central involution",
        euler.get(central),
        &q(-1, 12),
        "fusion-pushforward",
    ));
    let order4 = sorted_values(&values, 4);
    out.push(Check::new(
        "Z/4 *_Z/2 Z/6: E(G) on the order-4 classes",
        list(&order4),
        list(&[q(1, 4), q(1, 4)]),
        order4 == vec![q(1, 4), q(1, 4)],
        "fusion-pushforward",
    ));
    out
}

fn graph_d_infinity(_: u64) -> Vec<Check> {
    let (mut out, values) = graph_checks("Z/2 * Z/2", &models::d_infinity(), q(0, 1));
    let involutions = sorted_values(&values, 2);
    out.push(Check::new(
        "Z/2 * Z/2: E(G) on the involution classes",
        list(&involutions),
        list(&[q(1, 2), q(1, 2)]),
        involutions == vec![q(1, 2), q(1, 2)],
        "fusion-pushforward",
    ));
    out
}

fn free_product_sweep(_: u64) -> Vec<Check> {
    let mut agreeing = 0;
    let mut total = 0;
    let mut first = None;
    for n in 0..=5u64 {
        for k in 0..=5u64 {
            for l in 1..=6u64 {
                total += 1;
                let e = free_product_family::<Rational>(n, k, l);
                let got = Evaluator::new().eval_chi2(&e);
                let want = q(n as i64 - k as i64, l as i64);
                if matches!(&got, Ok(v) if *v == want) {
                    agreeing += 1;
                } else {
                    first.get_or_insert(format!(
                        "n={n} k={k} l={l}: {} vs {}",
                        eval_string(&got),
                        format_rational(&want)
                    ));
                }
            }
        }
    }
    vec![Check::tally(
        "chi2(((F2 x F_{n+1}) * F_k) x Z/l) = (n - k)/l for 0 <= n, k <= 5, 1 <= l <= 6",
        agreeing,
        total,
        first,
        "graph-alternating-sum, product-multiplicativity",
    )]
}

fn rho_pipeline(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let k = amalgam_k::<Rational>();
    let mut ev = Evaluator::new();
    let c = ev.chi2_centralizer(&k, &ElementRef::Declared("t".into()));
    out.push(Check::eval(
        "chi2(C_K(t)) from the fixed-tree declaration",
        &c,
        &Ok(q(-1, 2)),
        "fixed-tree-alternating-sum",
    ));
    for (n, d) in [(0, 1), (1, 1), (-1, 1), (3, 7), (-22, 5), (5, 2)] {
        let rho = q(n, d);
        let built = construct_g_rho::<Rational>(n, d).expect("positive denominator");
        let ev = &built.evaluation;
        let label = format_rational(&rho);
        out.push(Check::eval(
            format!("rho = {label}: E(G)(t)"),
            &ev.euler,
            &Ok(rho.clone()),
            "wall-element-product, incidence-pushforward, h-times-z-wall-vanishing",
        ));
        out.push(Check::eval(
            format!("rho = {label}: chi2(C_G(t))"),
            &ev.chi2_centralizer,
            &Ok(rho.clone()),
            "centralizer-splitting, fixed-tree-alternating-sum, cheeger-gromov-vanishing",
        ));
    }
    out
}

fn property_suites(seed: u64) -> Vec<Check> {
    let mut rng = rng_for(seed, 10);
    let mut out = Vec::new();
    for (name, g) in zoo_groups() {
        let mut agreeing = 0;
        let mut first = None;
        let bases: Vec<QMatrix> = (0..4)
            .map(|_| random_block_idempotent(&mut rng, &g, 2))
            .collect();
        let traces: Vec<_> = bases.iter().map(|p| hs_trace(p).expect("idempotent")).collect();
        for trial in 0..200 {
            let i = trial % bases.len();
            let a = random_elementary(&mut rng, &g, 2);
            let c = conjugate(&bases[i], &a);
            match hs_trace(&c) {
                Ok(h) if h.same(&traces[i]) => agreeing += 1,
                _ => {
                    first.get_or_insert(format!("trial {trial}"));
                }
            }
        }
        out.push(Check::tally(
            format!("{name}: HS(A P A^-1) = HS(P) under elementary conjugation"),
            agreeing,
            200,
            first,
            "similarity-invariance",
        ));
    }
    let mut agreeing = 0;
    let mut first = None;
    for trial in 0..50 {
        let g = random_graph(&mut rng, 24, 4, 2);
        let report = g.verify_fusion::<Rational>();
        if report.class_sum_ok && report.identity_coherent {
            agreeing += 1;
        } else {
            first.get_or_insert(format!(
                "graph {trial}: {} vs {}",
                format_rational(&report.class_sum),
                report.naive_euler
            ));
        }
    }
    out.push(Check::tally(
        "random graphs of groups: sum over fusion classes of E(G) = |V| - |E|",
        agreeing,
        50,
        first,
        "fusion-global-sum",
    ));
    let mut agreeing = 0;
    let mut first = None;
    for trial in 0..200 {
        let (x, y) = (random_betti(&mut rng), random_betti(&mut rng));
        let lhs = x.convolve(&y).alternating_sum();
        let rhs = x.alternating_sum() * y.alternating_sum();
        if lhs == rhs {
            agreeing += 1;
        } else {
            first.get_or_insert(format!("pair {trial}"));
        }
    }
    out.push(Check::tally(
        "Kunneth: alternating sum of a convolution = product of alternating sums",
        agreeing,
        200,
        first,
        "kunneth-convolution",
    ));
    out
}

fn random_betti(rng: &mut StdRng) -> BettiVector<Rational> {
    let len = rng.gen_range(1..=6);
    let entries = (0..len).map(|_| q(rng.gen_range(0..40), rng.gen_range(1..9))).collect();
    BettiVector::new(entries).expect("non-negative entries")
}
