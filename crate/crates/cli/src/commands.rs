//! One function per subcommand. Each returns the JSON payload, the checks
//! it performed and a human-readable rendering.

use std::collections::HashMap;
use std::fmt::Write;

use serde_json::{json, Value};

use galois_kit::exact_poly::{Polynomial, Rationals};
use galois_kit::expr::{parse_expr, parse_poly};
use galois_kit::galois::{galois_group, GaloisGroup};
use galois_kit::numfield::{minimal_polynomial, FieldElement};
use galois_kit::permgroup::{ChainCertificate, EmbeddingTarget, PermGroup, Permutation};
use galois_kit::qfactor::{factor_over_q, is_irreducible_over_q};
use galois_kit::radical::{
    associated_group_chain, layer_embeddings, necessary_condition_verdict, normalize_chain, realize_chain,
    verify_nested_normal_radical, NormalRadicalTower, QuinticConclusion, RadicalSpec, VerdictKind, VerdictMethod,
};
use galois_kit::splitting::{splitting_field, SplittingField};
use galois_kit::{Config, Error, Result};

use crate::report::CheckLine;

/// What a successful command hands back to the driver.
#[derive(Debug, Default)]
pub struct Output {
    pub result: Value,
    pub checks: Vec<CheckLine>,
    pub text: String,
}

impl Output {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine::new(name, passed, detail));
    }

    /// Appends the check list to the human-readable text.
    fn finish(mut self) -> Self {
        if !self.checks.is_empty() {
            self.text.push_str("checks:\n");
            for c in &self.checks {
                let mark = if c.passed { "pass" } else { "FAIL" };
                if c.detail.is_empty() {
                    let _ = writeln!(self.text, "  [{mark}] {}", c.name);
                } else {
                    let _ = writeln!(self.text, "  [{mark}] {}: {}", c.name, c.detail);
                }
            }
        }
        self
    }
}

fn cycles(ps: &[Permutation]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

/// A small generating set: elements in order, kept when they enlarge the
/// group generated so far.
pub fn generating_set(g: &PermGroup) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(g.degree());
    for p in g.elements() {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(p) {
            gens.push(p.clone());
            current = PermGroup::generate(g.degree(), &gens).expect("subgroup of a bounded group");
        }
    }
    gens
}

fn orders(series: &[PermGroup]) -> Vec<usize> {
    series.iter().map(PermGroup::order).collect()
}

pub fn factor(text: &str, config: &Config) -> Result<Output> {
    let p = parse_poly(text)?;
    let f = factor_over_q(&p, config)?;
    let factors: Vec<Value> = f
        .factors()
        .iter()
        .map(|(q, m)| json!({"polynomial": q.to_string(), "degree": q.deg(), "multiplicity": m}))
        .collect();
    let mut out = Output {
        result: json!({
            "input": p.to_string(),
            "unit": f.unit().to_string(),
            "factors": factors,
            "irreducible": f.is_irreducible(),
        }),
        ..Output::default()
    };
    let _ = writeln!(out.text, "input: {p}");
    let _ = writeln!(out.text, "unit: {}", f.unit());
    for (q, m) in f.factors() {
        let _ = writeln!(out.text, "factor: ({q})^{m}");
    }
    let _ = writeln!(out.text, "irreducible: {}", f.is_irreducible());
    out.check("product of the factors equals the input", f.expand() == p, format!("{} factor(s)", f.factors().len()));
    Ok(out.finish())
}

fn split_value(e: &SplittingField) -> Value {
    let stages: Vec<Value> = e
        .tower()
        .stages()
        .iter()
        .map(|s| json!({"name": s.name(), "polynomial": s.poly().to_string(), "degree": s.degree()}))
        .collect();
    json!({
        "input": e.input().to_string(),
        "squarefree_part": e.source().to_string(),
        "degree": e.degree(),
        "primitive_element": e.field().theta_name(),
        "defining_polynomial": e.field().min_poly().display_with(e.field().theta_name()).to_string(),
        "stages": stages,
        "roots": root_strings(e),
    })
}

fn root_strings(e: &SplittingField) -> Vec<String> {
    e.roots().iter().map(ToString::to_string).collect()
}

fn write_field(text: &mut String, e: &SplittingField) {
    let t = e.field().theta_name();
    let _ = writeln!(text, "splitting field: Q({t}), {}", e.field().min_poly().display_with(t));
    let _ = writeln!(text, "degree: {}", e.degree());
    for (i, r) in e.roots().iter().enumerate() {
        let _ = writeln!(text, "  x{i} = {r}");
    }
}

fn root_checks(out: &mut Output, e: &SplittingField) {
    let src = e.source();
    let all = e.roots().iter().all(|r| e.field().lift_poly(src).eval(r).is_zero());
    out.check("every root annihilates the squarefree part", all, src.to_string());
    out.check(
        "the number of roots equals the degree of the squarefree part",
        e.roots().len() == src.deg(),
        format!("{} roots", e.roots().len()),
    );
    let product: usize = e.tower().stages().iter().map(|s| s.degree()).product();
    out.check(
        "[E:Q] equals the product of the stage degrees",
        product == e.degree(),
        format!("{product}"),
    );
}

pub fn split(text: &str, config: &Config) -> Result<Output> {
    let e = splitting_field(&parse_poly(text)?, config)?;
    let mut out = Output {
        result: split_value(&e),
        ..Output::default()
    };
    let _ = writeln!(out.text, "input: {}", e.input());
    write_field(&mut out.text, &e);
    for s in e.tower().stages() {
        let _ = writeln!(out.text, "stage {}: {} (degree {})", s.name(), s.poly(), s.degree());
    }
    root_checks(&mut out, &e);
    Ok(out.finish())
}

fn group_value(g: &GaloisGroup) -> Value {
    let elements: Vec<Value> = g
        .elements()
        .iter()
        .enumerate()
        .map(|(i, a)| json!({"index": i, "theta_image": a.theta_image().to_string(), "permutation": a.permutation().to_string()}))
        .collect();
    let pg = g.perm_group();
    let (solvable, series) = pg.is_solvable();
    json!({
        "order": g.order(),
        "generators": cycles(&generating_set(&pg)),
        "elements": elements,
        "abelian": pg.is_abelian(),
        "solvable": solvable,
        "derived_series_orders": orders(&series),
    })
}

fn order_check(out: &mut Output, g: &GaloisGroup) {
    let e = g.splitting_field();
    out.check(
        "#G = [E:Q]",
        g.order() == e.degree(),
        format!("#G = {}, [E:Q] = {}", g.order(), e.degree()),
    );
}

pub fn group(text: &str, config: &Config) -> Result<Output> {
    let e = splitting_field(&parse_poly(text)?, config)?;
    let g = galois_group(&e)?;
    let mut result = split_value(&e);
    result["group"] = group_value(&g);
    let mut out = Output {
        result,
        ..Output::default()
    };
    let _ = writeln!(out.text, "input: {}", e.input());
    write_field(&mut out.text, &e);
    let pg = g.perm_group();
    let (solvable, series) = pg.is_solvable();
    let _ = writeln!(out.text, "group order: {}", g.order());
    let _ = writeln!(out.text, "generators: {}", cycles(&generating_set(&pg)).join(", "));
    for (i, a) in g.elements().iter().enumerate() {
        let _ = writeln!(out.text, "  g{i}: t -> {}  {}", a.theta_image(), a.permutation());
    }
    let _ = writeln!(out.text, "abelian: {}", pg.is_abelian());
    let _ = writeln!(out.text, "derived series orders: {:?}", orders(&series));
    let _ = writeln!(out.text, "solvable: {solvable}");
    order_check(&mut out, &g);
    Ok(out.finish())
}

/// Names usable in `--element`: the primitive element, the tower
/// generators and the roots `x0, x1, …`.
pub fn element_names(e: &SplittingField) -> HashMap<String, FieldElement> {
    let f = e.field();
    let mut names: HashMap<String, FieldElement> = f.generators().into_iter().collect();
    names.insert(f.theta_name().to_string(), f.theta());
    for (i, r) in e.roots().iter().enumerate() {
        names.insert(format!("x{i}"), r.clone());
    }
    names
}

pub fn minpoly(text: &str, elements: &[String], config: &Config) -> Result<Output> {
    let e = splitting_field(&parse_poly(text)?, config)?;
    let g = galois_group(&e)?;
    let names = element_names(&e);
    let requested: Vec<String> = if elements.is_empty() {
        std::iter::once(e.field().theta_name().to_string())
            .chain((0..e.roots().len()).map(|i| format!("x{i}")))
            .collect()
    } else {
        elements.to_vec()
    };
    let mut out = Output::default();
    let _ = writeln!(out.text, "input: {}", e.input());
    write_field(&mut out.text, &e);
    let mut rows = Vec::new();
    for src in &requested {
        let a = parse_expr(src)?.eval_in(e.field(), &names)?;
        let orbit = g.orbit_min_poly(&a)?;
        let linear = minimal_polynomial(&a)?;
        let agree = orbit == linear;
        let irreducible = is_irreducible_over_q(&orbit, config)?;
        let squarefree = orbit.is_squarefree()?;
        let _ = writeln!(out.text, "{src} = {a}");
        let _ = writeln!(out.text, "  orbit product:  {orbit}");
        let _ = writeln!(out.text, "  linear algebra: {linear}");
        out.check(format!("orbit polynomial equals the minimal polynomial of {src}"), agree, orbit.to_string());
        out.check(format!("minimal polynomial of {src} is monic"), orbit.is_monic(), "");
        out.check(format!("minimal polynomial of {src} is irreducible"), irreducible, "");
        out.check(format!("minimal polynomial of {src} is squarefree"), squarefree, "");
        rows.push(json!({
            "expression": src,
            "value": a.to_string(),
            "orbit_size": orbit.deg(),
            "orbit_method": orbit.to_string(),
            "linear_algebra": linear.to_string(),
            "agree": agree,
        }));
    }
    out.result = json!({
        "input": e.input().to_string(),
        "degree": e.degree(),
        "defining_polynomial": e.field().min_poly().display_with(e.field().theta_name()).to_string(),
        "roots": root_strings(&e),
        "elements": rows,
    });
    Ok(out.finish())
}

pub fn fixed(text: &str, subgroup: &[usize], config: &Config) -> Result<Output> {
    let e = splitting_field(&parse_poly(text)?, config)?;
    let g = galois_group(&e)?;
    if let Some(&bad) = subgroup.iter().find(|&&i| i >= g.order()) {
        return Err(Error::InvalidInput(format!(
            "automorphism index {bad} out of range; the group has order {}",
            g.order()
        )));
    }
    let gens: Vec<Permutation> = subgroup.iter().map(|&i| g.elements()[i].permutation().clone()).collect();
    let h = PermGroup::generate(e.roots().len(), &gens)?;
    let indices = g.indices_of(&h)?;
    let b = g.fixed_field(&indices)?;
    let back = g.subgroup_fixing(&b)?;
    let basis: Vec<String> = b.basis().iter().map(ToString::to_string).collect();
    let mut out = Output {
        result: json!({
            "input": e.input().to_string(),
            "group_order": g.order(),
            "generator_indices": subgroup,
            "subgroup": {"order": h.order(), "indices": indices, "elements": cycles(h.elements())},
            "fixed_field": {
                "degree": b.degree(),
                "primitive_element": b.primitive_element().to_string(),
                "minimal_polynomial": b.min_poly().to_string(),
                "basis": basis,
            },
            "fixing_subgroup": back,
        }),
        ..Output::default()
    };
    let _ = writeln!(out.text, "input: {}", e.input());
    write_field(&mut out.text, &e);
    let _ = writeln!(out.text, "group order: {}", g.order());
    let _ = writeln!(out.text, "subgroup H of order {}: {}", h.order(), cycles(h.elements()).join(", "));
    let _ = writeln!(out.text, "fixed field degree: {}", b.degree());
    let _ = writeln!(out.text, "primitive element: {}", b.primitive_element());
    let _ = writeln!(out.text, "minimal polynomial: {}", b.min_poly());
    out.check(
        "#H * [B:Q] = #G",
        h.order() * b.degree() == g.order(),
        format!("{} * {} = {}", h.order(), b.degree(), g.order()),
    );
    out.check("the subgroup fixing B is H", back == indices, format!("{back:?}"));
    Ok(out.finish())
}

fn normalized(specs: &[RadicalSpec], config: &Config) -> Result<NormalRadicalTower> {
    let chain = realize_chain(specs, config)?;
    normalize_chain(&chain, config)
}

fn tower_value(t: &NormalRadicalTower) -> Result<Value> {
    let chain = t.chain().expect("normalized from a chain");
    let stages: Vec<Value> = chain
        .stages()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            json!({
                "name": format!("r{}", i + 1),
                "k": s.k(),
                "radicand": s.radicand_text(),
                "degree": s.degree(),
                "factor": s.factor().to_string(),
            })
        })
        .collect();
    let fields: Vec<Value> = t
        .fields()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            json!({
                "index": i,
                "degree": f.degree(),
                "splitting_polynomial": f.source().to_string(),
                "defining_polynomial": f.field().min_poly().display_with(f.field().theta_name()).to_string(),
            })
        })
        .collect();
    let mut layers = Vec::new();
    for (i, l) in t.layers().iter().enumerate() {
        layers.push(json!({
            "field": i + 1,
            "k": l.k(),
            "polynomial": l.polynomial()?.to_string(),
            "rational_polynomial": l.rational_polynomial()?.map(|p| p.to_string()),
        }));
    }
    let images: Vec<Value> = t
        .images()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            json!({
                "name": format!("r{}", i + 1),
                "field": i + 2,
                "radicand": m.radicand.to_string(),
                "root": m.root.to_string(),
                "theta": m.theta.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "chain": {"stages": stages, "degree": chain.degree(), "lcm": chain.lcm()},
        "n": t.n(),
        "degrees": t.degrees(),
        "fields": fields,
        "layers": layers,
        "images": images,
    }))
}

fn write_tower(text: &mut String, t: &NormalRadicalTower) {
    let chain = t.chain().expect("normalized from a chain");
    for (i, s) in chain.stages().iter().enumerate() {
        let _ = writeln!(text, "r{} = ({})^(1/{}), [R{}:R{}] = {}", i + 1, s.radicand_text(), s.k(), i + 1, i, s.degree());
    }
    let _ = writeln!(text, "N = {}", t.n());
    for (i, f) in t.fields().iter().enumerate() {
        let _ = writeln!(text, "E{i}: degree {}, splitting field of {}", f.degree(), f.source());
    }
}

pub fn normalize(specs: &[RadicalSpec], config: &Config) -> Result<Output> {
    let t = normalized(specs, config)?;
    let mut out = Output {
        result: tower_value(&t)?,
        ..Output::default()
    };
    write_tower(&mut out.text, &t);
    for (i, (m, s)) in t.images().iter().zip(t.chain().expect("chain").stages()).enumerate() {
        let _ = writeln!(out.text, "r{} -> {} in E{}", i + 1, m.root, i + 2);
        out.check(
            format!("image of r{} is a root of x^{} - image of its radicand", i + 1, s.k()),
            m.root.pow(u64::from(s.k())) == m.radicand,
            format!("in E{}", i + 2),
        );
    }
    for (i, pair) in t.degrees().windows(2).enumerate() {
        out.check(
            format!("[E{}:Q] is a multiple of [E{i}:Q]", i + 1),
            pair[1] % pair[0] == 0,
            format!("{} / {}", pair[1], pair[0]),
        );
    }
    Ok(out.finish())
}

fn target_value(t: &EmbeddingTarget) -> String {
    match *t {
        EmbeddingTarget::Units(n) => format!("U({n})"),
        EmbeddingTarget::Cyclic(n) => format!("Z/{n}"),
        EmbeddingTarget::CyclicPower { modulus, copies } => format!("(Z/{modulus})^{copies}"),
    }
}

pub fn verify_tower(specs: &[RadicalSpec], config: &Config) -> Result<Output> {
    let t = normalized(specs, config)?;
    let report = verify_nested_normal_radical(&t, config)?;
    let embeddings = layer_embeddings(&t)?;
    let mut out = Output::default();
    write_tower(&mut out.text, &t);
    let conditions: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({"condition": c.condition, "subject": c.subject, "passed": c.passed, "detail": c.detail}))
        .collect();
    for c in &report.checks {
        out.check(format!("condition {} for {}", c.condition, c.subject), c.passed, c.detail.clone());
    }
    let mut rows = Vec::new();
    for l in &embeddings {
        let target = target_value(&l.target);
        let images: Vec<Value> = l
            .embedding
            .iter()
            .flat_map(|e| e.images.iter())
            .map(|(p, v)| json!({"element": p.to_string(), "image": v}))
            .collect();
        let _ = writeln!(out.text, "G({}) of order {} -> {target}: {}", l.layer, l.group_order, if l.embedding.is_some() { "embedded" } else { "no embedding" });
        out.check(
            format!("G({}) embeds into {target}", l.layer),
            l.embedding.is_some(),
            format!("order {}", l.group_order),
        );
        rows.push(json!({
            "layer": l.layer,
            "group_order": l.group_order,
            "target": target,
            "found": l.embedding.is_some(),
            "images": images,
        }));
    }
    out.result = json!({
        "n": t.n(),
        "degrees": t.degrees(),
        "conditions": conditions,
        "embeddings": rows,
    });
    Ok(out.finish())
}

fn certificate_value(c: &ChainCertificate) -> Value {
    let steps: Vec<Value> = c
        .steps
        .iter()
        .map(|s| {
            json!({
                "order": s.order,
                "next_order": s.next_order,
                "quotient_order": s.quotient_order(),
                "normal": s.normal,
                "abelian": s.noncommuting_pair.is_none(),
            })
        })
        .collect();
    json!({"accepted": c.accepted(), "steps": steps})
}

pub fn chain_groups(specs: &[RadicalSpec], config: &Config) -> Result<Output> {
    let t = normalized(specs, config)?;
    let ac = associated_group_chain(&t)?;
    let mut out = Output::default();
    write_tower(&mut out.text, &t);
    let _ = writeln!(out.text, "G = G(E{}, Q) of order {}", t.fields().len() - 1, ac.group.order());
    let subgroups: Vec<Value> = ac
        .groups
        .iter()
        .zip(&ac.subgroups)
        .enumerate()
        .map(|(i, (h, idx))| {
            let gens = cycles(&generating_set(h));
            let shown = if gens.is_empty() { "()".to_string() } else { gens.join(", ") };
            let _ = writeln!(out.text, "G{i} = G(E, E{i}): order {}, generators {shown}", h.order());
            json!({"field": i, "order": h.order(), "generators": cycles(&generating_set(h)), "indices": idx})
        })
        .collect();
    let degrees = t.degrees();
    for (i, s) in ac.certificate.steps.iter().enumerate() {
        out.check(
            format!("G{} is normal in G{i}", i + 1),
            s.normal,
            format!("{} in {}", s.next_order, s.order),
        );
        out.check(
            format!("G{i}/G{} is abelian", i + 1),
            s.noncommuting_pair.is_none(),
            format!("quotient of order {}", s.quotient_order()),
        );
        out.check(
            format!("#(G{i}/G{}) = [E{}:E{i}]", i + 1, i + 1),
            s.quotient_order() * degrees[i] == degrees[i + 1],
            format!("{} = {} / {}", s.quotient_order(), degrees[i + 1], degrees[i]),
        );
    }
    out.check("abelian-quotient certificate accepted", ac.certificate.accepted(), "");
    out.result = json!({
        "group_order": ac.group.order(),
        "degrees": degrees,
        "subgroups": subgroups,
        "certificate": certificate_value(&ac.certificate),
    });
    Ok(out.finish())
}

pub fn solvable(text: &str, config: &Config) -> Result<Output> {
    let p: Polynomial<Rationals> = parse_poly(text)?;
    let v = necessary_condition_verdict(&p, config)?;
    let kind = match v.kind {
        VerdictKind::SolvableGroup => "SOLVABLE_GROUP",
        VerdictKind::NotSolvableByRadicals => "NOT_SOLVABLE_BY_RADICALS",
    };
    let method = match v.method {
        VerdictMethod::SplittingField => "splitting_field",
        VerdictMethod::QuinticFrobenius => "quintic_frobenius",
    };
    let series: Vec<Value> = v
        .derived_series
        .iter()
        .map(|h| json!({"order": h.order(), "generators": cycles(&generating_set(h))}))
        .collect();
    let quintic = v.quintic.as_ref().map(|w| {
        let observations: Vec<Value> = w
            .observations
            .iter()
            .map(|o| {
                let factors: Vec<String> = o.factors.iter().map(ToString::to_string).collect();
                json!({"prime": o.prime, "factors": factors, "cycle_type": o.cycle_type})
            })
            .collect();
        let (conclusion, lower_bound) = match w.conclusion {
            QuinticConclusion::NotSolvable { lower_bound } => ("not_solvable", Some(lower_bound.name())),
            QuinticConclusion::Inconclusive => ("inconclusive", None),
        };
        let candidates: Vec<&str> = w.candidates.iter().map(|c| c.name()).collect();
        json!({
            "observations": observations,
            "skipped_primes": w.skipped_primes,
            "candidates": candidates,
            "conclusion": conclusion,
            "lower_bound": lower_bound,
        })
    });
    let note = "only the necessary condition is decided: a solvable group does not by itself exhibit a solution in radicals";
    let mut out = Output {
        result: json!({
            "input": p.to_string(),
            "verdict": kind,
            "method": method,
            "group_order": v.group_order,
            "splitting_degree": v.splitting_degree,
            "generators": cycles(&generating_set(&v.group)),
            "derived_series": series,
            "derived_series_orders": orders(&v.derived_series),
            "certificate": v.certificate.as_ref().map(certificate_value),
            "quintic": quintic,
            "note": note,
        }),
        ..Output::default()
    };
    let _ = writeln!(out.text, "input: {p}");
    let _ = writeln!(out.text, "verdict: {kind} (via {method})");
    if let Some(n) = v.group_order {
        let _ = writeln!(out.text, "group order: {n}");
    }
    if let Some(w) = &v.quintic {
        for o in &w.observations {
            let factors: Vec<String> = o.factors.iter().map(|f| format!("({f})")).collect();
            let _ = writeln!(out.text, "  mod {}: {}  cycle type {:?}", o.prime, factors.join(""), o.cycle_type);
        }
        let names: Vec<&str> = w.candidates.iter().map(|c| c.name()).collect();
        let _ = writeln!(out.text, "surviving transitive groups: {}", names.join(", "));
    }
    let _ = writeln!(out.text, "derived series orders: {:?}", orders(&v.derived_series));
    let _ = writeln!(out.text, "note: {note}");
    if let (Some(n), Some(d)) = (v.group_order, v.splitting_degree) {
        out.check("#G = [E:Q]", n == d, format!("#G = {n}, [E:Q] = {d}"));
    }
    match (&v.certificate, v.kind) {
        (Some(c), _) => out.check("derived series has normal steps with abelian quotients", c.accepted(), format!("{} steps", c.steps.len())),
        (None, VerdictKind::NotSolvableByRadicals) => {
            let s = &v.derived_series;
            let stalled = s.len() >= 2 && s[s.len() - 1] == s[s.len() - 2] && !s[s.len() - 1].is_trivial();
            out.check("derived series stalls at a nontrivial perfect group", stalled, format!("{:?}", orders(s)));
        }
        (None, VerdictKind::SolvableGroup) => out.check("solvable verdict carries a certificate", false, ""),
    }
    Ok(out.finish())
}
