use crate::error::{invalid, CliError};
use crate::input::{parse_vector, parse_weights};
use crate::session::{Command, Session};
use invar_core::arith::CycNum;
use invar_core::geometry::{fiber_report, fixed_space_atlas, point_singular, singularity_report, COMPLEX_NOTE};
use invar_core::group::{AbstractQuotient, Representation, Subgroup};
use invar_core::invariant::{
    covariant_generators, min_generators, molien, regular_first_degree, sym_vs_invariant, Caps, Setting,
};
use invar_core::poly::{Monomial, PolySpace};
use invar_core::reflection::{fundamental_group, mirror_data, pi1_surjection, reflection_report};
use invar_core::toric::{
    binomial_relations, character_decomposition, hilbert_basis, normalization_check, pullback_check, vertex_fiber,
    AbelianGrading, NormalizationVerdict,
};
use serde_json::{json, Value};

/// Caps shared by all commands; `None` means the command's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub cap: Option<u32>,
    pub relation_cap: Option<u32>,
}

pub struct Output {
    pub text: Vec<String>,
    pub result: Value,
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn members(s: &Subgroup) -> Vec<usize> {
    s.members().to_vec()
}

fn quotient_json(q: &AbstractQuotient) -> Value {
    json!({"order": q.order, "abelian": q.is_abelian, "invariant_factors": q.invariant_factors})
}

fn quotient_text(q: &AbstractQuotient) -> String {
    if q.order == 1 {
        "trivial".into()
    } else if q.is_abelian {
        let factors: Vec<String> = q.invariant_factors.iter().map(|f| format!("Z/{}", f)).collect();
        format!("{} (order {})", factors.join(" x "), q.order)
    } else {
        format!("nonabelian of order {}", q.order)
    }
}

fn vector_text(v: &[CycNum]) -> String {
    format!("({})", join(v))
}

fn cap_or(limits: &Limits, default: usize) -> Result<u32, CliError> {
    let cap = limits.cap.unwrap_or(default as u32);
    if cap == 0 {
        return Err(invalid("--cap must be positive"));
    }
    Ok(cap)
}

fn toric_space(g: &AbelianGrading) -> PolySpace {
    PolySpace::new(g.d(), g.m(), 1)
}

pub fn run(s: &Session, command: &Command, limits: &Limits) -> Result<Output, CliError> {
    match command {
        Command::Group => group(s),
        Command::Character => character(s),
        Command::Invariants { degree, w_degree } => invariants(s, *degree, *w_degree),
        Command::Algebra => algebra(s, limits),
        Command::HilbertBasis => toric_presentation(s, limits, true),
        Command::Relations => toric_presentation(s, limits, false),
        Command::VertexFiber => vertex(s, limits),
        Command::CharacterDecomp => char_decomp(s, limits),
        Command::Fiber { point } => fiber(s, point),
        Command::Singularities { point, fiber_point } => singularities(s, point, fiber_point.as_deref()),
        Command::Pi1 => pi1(s),
        Command::Reflections => reflections(s),
        Command::Molien => molien_cmd(s, limits),
        Command::CompareSym => compare_sym(s, limits),
        Command::CheckNormalization { with_ww } => check_normalization(s, with_ww),
        Command::CheckPullback => {
            let g = s.require_grading()?;
            let v = pullback_check(g)?;
            Ok(normalization_output(&v, &toric_space(g), "pullback"))
        }
    }
}

fn rep_json(r: &Representation) -> Value {
    let g = r.group();
    json!({
        "dim": r.dim(),
        "level": r.level(),
        "faithful": r.is_faithful(),
        "trivial": r.is_trivial(),
        "kernel_order": r.kernel().order(),
        "generator_images": g.generator_indices().iter().map(|&i| r.image(i).to_string()).collect::<Vec<_>>(),
    })
}

fn group(s: &Session) -> Result<Output, CliError> {
    let g = s.beta.group();
    let mut text = vec![
        format!("order: {}", g.order()),
        format!("abelian: {}", g.is_abelian()),
        format!("level: {}", s.beta.level()),
    ];
    for &i in g.generator_indices() {
        text.push(format!("beta generator: {}", s.beta.image(i)));
    }
    text.push(format!("beta faithful: {}", s.beta.is_faithful()));
    if let Some(rho) = &s.rho {
        for &i in g.generator_indices() {
            text.push(format!("rho generator: {}", rho.image(i)));
        }
        text.push(format!("rho kernel order: {}", rho.kernel().order()));
    }
    let result = json!({
        "order": g.order(),
        "abelian": g.is_abelian(),
        "beta": rep_json(&s.beta),
        "rho": s.rho.as_ref().map(rep_json),
    });
    Ok(Output { text, result })
}

fn character(s: &Session) -> Result<Output, CliError> {
    let beta_chi = s.beta.character();
    let rho_chi = s.rho.as_ref().map(|r| r.character());
    let mut text = vec![format!("beta character: {}", join(&beta_chi.values))];
    if let Some(c) = &rho_chi {
        text.push(format!("rho character: {}", join(&c.values)));
    }
    let mut irreducibles = Vec::new();
    for (i, irr) in s.irreducibles.iter().enumerate() {
        let chi = irr.character();
        let in_beta = beta_chi.multiplicity(&chi)?;
        let in_rho = rho_chi.as_ref().map(|c| c.multiplicity(&chi)).transpose()?;
        text.push(format!(
            "irreducible {} (dim {}): multiplicity {} in beta{}",
            i,
            irr.dim(),
            in_beta,
            in_rho.map_or(String::new(), |m| format!(", {} in rho", m))
        ));
        irreducibles.push(json!({"dim": irr.dim(), "in_beta": in_beta, "in_rho": in_rho}));
    }
    let regular = if s.irreducibles.is_empty() {
        None
    } else {
        let r = regular_first_degree(&s.beta, &s.irreducibles, s.order() as u32)?;
        text.push(format!(
            "regular representation: {} degree-1 generators, weighted sum over irreducibles {}, embedding verified: {}",
            r.regular_generators, r.weighted_sum, r.embedding_verified
        ));
        Some(r)
    };
    let result = json!({
        "beta": beta_chi.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "rho": rho_chi.map(|c| c.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        "irreducibles": irreducibles,
        "regular_first_degree": regular,
    });
    Ok(Output { text, result })
}

fn invariants(s: &Session, degree: u32, w_degree: u32) -> Result<Output, CliError> {
    if s.rho.is_none() && w_degree > 0 {
        return Err(invalid("--w-degree needs a W representation"));
    }
    let setting = Setting::new(&s.beta, s.rho.as_ref())?;
    let basis: Vec<String> = setting.basis(degree, w_degree).iter().map(|p| setting.space.format(p)).collect();
    let mut text = vec![format!("bidegree ({}, {}): dimension {}", degree, w_degree, basis.len())];
    text.extend(basis.iter().map(|p| format!("  {}", p)));
    Ok(Output {
        text,
        result: json!({"bidegree": [degree, w_degree], "basis": basis}),
    })
}

fn algebra(s: &Session, limits: &Limits) -> Result<Output, CliError> {
    let setting = Setting::new(&s.beta, s.rho.as_ref())?;
    let cap = cap_or(limits, s.order())?;
    let relation_cap = limits.relation_cap.unwrap_or(2 * s.order() as u32);
    let pres = min_generators(&setting, Caps::uniform(cap), relation_cap)?;
    let symbols = pres.symbols(setting.level());
    let names: Vec<&String> = symbols.names().collect();
    let mut text = vec![format!(
        "generators up to degree {} (complete: {}):",
        cap, pres.complete_generators
    )];
    let mut gens = Vec::new();
    for (name, g) in names.iter().zip(&pres.generators) {
        let poly = setting.space.format(&g.poly);
        text.push(format!("  {} = {}    bidegree ({}, {})", name, poly, g.bidegree.0, g.bidegree.1));
        gens.push(json!({"symbol": name, "poly": poly, "bidegree": [g.bidegree.0, g.bidegree.1]}));
    }
    let rels: Vec<String> = pres.relations.iter().map(|r| symbols.format(r)).collect();
    text.push(format!("relations up to degree {}:{}", relation_cap, if rels.is_empty() { " none" } else { "" }));
    text.extend(rels.iter().map(|r| format!("  {} = 0", r)));
    let result = json!({
        "generators": gens,
        "relations": rels,
        "relation_cap": relation_cap,
        "generator_cap": cap,
        "complete_generators": pres.complete_generators,
    });
    Ok(Output { text, result })
}

fn toric_presentation(s: &Session, limits: &Limits, with_generators: bool) -> Result<Output, CliError> {
    let g = s.require_grading()?;
    let hb = hilbert_basis(g)?;
    let space = toric_space(g);
    let symbols = PolySpace::symbols(hb.generators.len(), 1);
    let names: Vec<String> = symbols.names().cloned().collect();
    let cap = limits.relation_cap.unwrap_or(2 * g.order() as u32);
    if cap < 2 {
        return Err(invalid("--relation-cap must be at least 2"));
    }
    let relations = binomial_relations(&hb, cap);
    let rels: Vec<String> = relations.iter().map(|b| b.format(&names)).collect();
    let mut text = Vec::new();
    let mut gens = Vec::new();
    if with_generators {
        text.push(format!("Hilbert basis ({} generators):", hb.generators.len()));
        for (name, v) in names.iter().zip(&hb.generators) {
            let mono = space.format_monomial(&Monomial(v.clone()));
            text.push(format!("  {} = {}", name, mono));
            gens.push(json!({"symbol": name, "monomial": mono, "exponents": v}));
        }
    }
    text.push(format!("relations up to degree {}:{}", cap, if rels.is_empty() { " none" } else { "" }));
    text.extend(rels.iter().map(|r| format!("  {} = 0", r)));
    let mut result = json!({"relations": rels, "relation_cap": cap});
    if with_generators {
        result["generators"] = json!(gens);
    }
    Ok(Output { text, result })
}

fn vertex(s: &Session, limits: &Limits) -> Result<Output, CliError> {
    let g = s.require_grading()?;
    let cap = cap_or(limits, (g.order() as usize).max(3))?;
    let f = vertex_fiber(g, cap)?;
    let space = toric_space(g);
    let mono = |v: &Vec<u32>| space.format_monomial(&Monomial(v.clone()));
    let mut text = vec![
        format!("associated graded dims (degree 0..{}): {}", cap - 1, join(&f.assoc_graded_dims)),
        format!("dims modulo m^i (i = 0..{}): {}", cap, join(&f.trunc_dims)),
        format!("reduction generated by: {}", join(f.reduction_generators.iter().map(mono))),
    ];
    if f.nilpotent_witnesses.is_empty() {
        text.push("no nilpotent generators: the fiber is reduced".into());
    }
    for (v, e) in &f.nilpotent_witnesses {
        text.push(format!("  nilpotent: {} with ({})^{} = 0", mono(v), mono(v), e));
    }
    let result = json!({
        "cap": cap,
        "assoc_graded_dims": f.assoc_graded_dims,
        "trunc_dims": f.trunc_dims,
        "reduction_generators": f.reduction_generators.iter().map(mono).collect::<Vec<_>>(),
        "nilpotent_witnesses": f.nilpotent_witnesses.iter().map(|(v, e)| json!({"monomial": mono(v), "exponent": e})).collect::<Vec<_>>(),
    });
    Ok(Output { text, result })
}

fn char_decomp(s: &Session, limits: &Limits) -> Result<Output, CliError> {
    let g = s.require_grading()?;
    let cap = cap_or(limits, g.order() as usize)?;
    let dec = character_decomposition(g, cap, cap);
    let space = toric_space(g);
    let mono = |v: &Vec<u32>| space.format_monomial(&Monomial(v.clone()));
    let mut text = vec![format!("pieces up to degree {} (verified: {}):", cap, dec.verified)];
    let mut pieces = Vec::new();
    for p in &dec.pieces {
        let xs: Vec<String> = p.x_monomials.iter().map(mono).collect();
        let ws: Vec<String> = p.w_monomials.iter().map(mono).collect();
        text.push(format!("  degree {:?}: S = <{}>, K[W] = <{}>", p.lambda, xs.join(", "), ws.join(", ")));
        pieces.push(json!({"lambda": p.lambda, "x": xs, "w": ws}));
    }
    Ok(Output {
        text,
        result: json!({"cap": cap, "verified": dec.verified, "pieces": pieces}),
    })
}

fn point(s: &Session, text: &str) -> Result<Vec<CycNum>, CliError> {
    let q = parse_vector(text, s.beta.level())?;
    if q.len() != s.beta.dim() {
        return Err(invalid(format!("point has {} coordinates, expected {}", q.len(), s.beta.dim())));
    }
    Ok(q)
}

fn fiber(s: &Session, p: &str) -> Result<Output, CliError> {
    let rho = s.require_rho()?;
    let q = point(s, p)?;
    let f = fiber_report(&s.beta, rho, &q)?;
    let text = vec![
        format!("point: {}", vector_text(&q)),
        format!("stabilizer order: {}", f.stabilizer_order()),
        format!("rho trivial on stabilizer: {}", f.rho_restricted_trivial),
        format!("fiber reduced: {}", f.reduced),
        format!("geometric fiber: A^{} modulo a group of order {}", f.geometric_fiber.m, f.geometric_fiber.image_order),
    ];
    let result = json!({
        "point": q.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "stabilizer": members(&f.stabilizer),
        "rho_restricted_trivial": f.rho_restricted_trivial,
        "reduced": f.reduced,
        "geometric_fiber": {"m": f.geometric_fiber.m, "image_order": f.geometric_fiber.image_order},
    });
    Ok(Output { text, result })
}

fn singularities(s: &Session, p: &str, fiber_point: Option<&str>) -> Result<Output, CliError> {
    let rho = s.require_rho()?;
    let q = point(s, p)?;
    let r = singularity_report(&s.beta, rho, &q)?;
    let mut text = vec![
        format!("point: {}", vector_text(&q)),
        format!("stabilizer order: {}", r.stabilizer.order()),
        format!("fiber contains a singular point: {}", r.contains_singular),
        format!("zero section point singular: {}", r.zero_section_singular),
        format!("all points of the fiber singular: {}", r.all_singular),
    ];
    let mut result = json!({
        "point": q.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "stabilizer": members(&r.stabilizer),
        "stabilizer_in_kernel": members(&r.stabilizer_in_kernel),
        "contains_singular": r.contains_singular,
        "zero_section_singular": r.zero_section_singular,
        "all_singular": r.all_singular,
        "note": r.note,
    });
    if let Some(v) = fiber_point {
        let v = parse_vector(v, rho.level())?;
        if v.len() != rho.dim() {
            return Err(invalid(format!("fiber point has {} coordinates, expected {}", v.len(), rho.dim())));
        }
        let singular = point_singular(&s.beta, rho, &q, &v)?;
        text.push(format!("point {} of the fiber singular: {}", vector_text(&v), singular));
        result["fiber_point"] = json!({"coordinates": v.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "singular": singular});
    }
    text.push(format!("note: {}", r.note));
    Ok(Output { text, result })
}

fn pi1(s: &Session) -> Result<Output, CliError> {
    match &s.rho {
        Some(rho) => {
            let p = pi1_surjection(&s.beta, rho)?;
            let text = vec![
                format!("total space: {}", quotient_text(&p.total)),
                format!("base: {}", quotient_text(&p.base)),
                format!("surjection on cosets: {}", join(&p.map)),
                format!("note: {}", COMPLEX_NOTE),
            ];
            let result = json!({
                "total": quotient_json(&p.total),
                "base": quotient_json(&p.base),
                "map": p.map,
                "note": COMPLEX_NOTE,
            });
            Ok(Output { text, result })
        }
        None => {
            let q = fundamental_group(&s.beta)?;
            Ok(Output {
                text: vec![format!("base: {}", quotient_text(&q)), format!("note: {}", COMPLEX_NOTE)],
                result: json!({"base": quotient_json(&q), "note": COMPLEX_NOTE}),
            })
        }
    }
}

fn reflection_json(r: &Representation) -> (Value, Vec<String>) {
    let rep = reflection_report(r);
    let text = vec![
        format!("  reflections: {}", rep.reflections.len()),
        format!("  reflection subgroup order: {}", rep.refl_subgroup.order()),
        format!("  small: {}", rep.is_small),
        format!("  reflection group: {}", rep.is_reflection_group),
    ];
    let value = json!({
        "reflections": rep.reflections,
        "reflection_subgroup": members(&rep.refl_subgroup),
        "small": rep.is_small,
        "reflection_group": rep.is_reflection_group,
    });
    (value, text)
}

fn reflections(s: &Session) -> Result<Output, CliError> {
    let mut text = vec!["beta:".to_string()];
    let (beta_json, t) = reflection_json(&s.beta);
    text.extend(t);
    let mut result = json!({"beta": beta_json});
    if let Some(rho) = &s.rho {
        let (v, t) = reflection_json(&Representation::product(&s.beta, rho)?);
        text.push("beta x rho:".into());
        text.extend(t);
        result["product"] = v;
    }
    let mirrors = mirror_data(&s.beta)?;
    let space = PolySpace::new(s.beta.dim(), 0, s.beta.level());
    let disc = space.format(&mirrors.discriminant(s.beta.dim(), s.beta.level()));
    text.push(format!("mirrors: {}", mirrors.mirrors.len()));
    let mut mirror_json = Vec::new();
    for m in &mirrors.mirrors {
        text.push(format!("  form {} with pointwise stabilizer of order {}", vector_text(&m.form), m.order));
        mirror_json.push(json!({"form": m.form.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "order": m.order}));
    }
    text.push(format!("discriminant: {}", disc));
    result["mirrors"] = json!(mirror_json);
    result["discriminant"] = json!(disc);
    if s.beta.is_faithful() {
        let atlas = fixed_space_atlas(&s.beta)?;
        text.push(format!("fixed spaces of nontrivial elements (small: {}):", atlas.is_small));
        let mut spaces = Vec::new();
        for f in &atlas.spaces {
            text.push(format!("  element {}: dimension {}", f.element, f.basis.len()));
            spaces.push(json!({"element": f.element, "dimension": f.basis.len()}));
        }
        result["fixed_spaces"] = json!(spaces);
    }
    Ok(Output { text, result })
}

fn molien_cmd(s: &Session, limits: &Limits) -> Result<Output, CliError> {
    let trunc = cap_or(limits, s.order())? as usize;
    let trunc_w = if s.rho.is_some() { trunc } else { 0 };
    let series = molien(&s.beta, s.rho.as_ref(), trunc, trunc_w);
    let mut text = vec![format!("coefficients by X-degree (rows) and W-degree (columns), up to {}:", trunc)];
    for (a, row) in series.coeffs.iter().enumerate() {
        text.push(format!("  {}: {}", a, join(row)));
    }
    Ok(Output {
        text,
        result: json!({"trunc_x": trunc, "trunc_w": trunc_w, "coefficients": series.coeffs}),
    })
}

fn compare_sym(s: &Session, limits: &Limits) -> Result<Output, CliError> {
    let rho = s.require_rho()?;
    let setting = Setting::new(&s.beta, Some(rho))?;
    let cap = cap_or(limits, s.order())?;
    let cap_w = limits.relation_cap.unwrap_or(cap).max(2);
    let cov = covariant_generators(&setting, cap);
    let report = sym_vs_invariant(&setting, cap, cap_w)?;
    let mut text = vec![
        format!("covariant module: {} generators in X-degrees {}", cov.polys.len(), join(&cov.degrees)),
        format!("generic rank: {}", cov.generic_rank),
    ];
    let mut degrees = Vec::new();
    for d in &report.degrees {
        let witness = d.witness.as_ref().map(|w| setting.space.format(w));
        text.push(format!(
            "  W-degree {}: {} module generators, Sym onto: {}{}",
            d.n,
            d.mu,
            d.surjective,
            witness.as_ref().map_or(String::new(), |w| format!(" (missing {})", w))
        ));
        degrees.push(json!({"n": d.n, "mu": d.mu, "surjective": d.surjective, "witness": witness}));
    }
    text.push(match report.first_failure {
        Some(n) => format!("first failure at W-degree {}", n),
        None => format!("no failure up to W-degree {}", cap_w),
    });
    if let Some(check) = report.reflection_hilbert_check {
        text.push(format!("binomial generator counts for a reflection group: {}", check));
    }
    let result = json!({
        "caps": [report.caps.0, report.caps.1],
        "covariant_degrees": cov.degrees,
        "generic_rank": cov.generic_rank,
        "degrees": degrees,
        "first_failure": report.first_failure,
        "reflection_hilbert_check": report.reflection_hilbert_check,
    });
    Ok(Output { text, result })
}

fn check_normalization(s: &Session, with_ww: &str) -> Result<Output, CliError> {
    let g1 = s.require_grading()?;
    let x: Vec<Vec<i64>> = g1.x_weights.iter().map(|w| w.iter().map(|&c| c as i64).collect()).collect();
    let g2 = AbelianGrading::new(g1.factors.clone(), x, parse_weights(with_ww, g1.factors.len())?)?;
    let v = normalization_check(g1, &g2)?;
    let mut space = PolySpace::new(g1.d(), g1.m(), 1);
    space.w_vars.extend((1..=g2.m()).map(|i| if g2.m() == 1 { "V".to_string() } else { format!("V{}", i) }));
    Ok(normalization_output(&v, &space, "tensor product"))
}

fn normalization_output(v: &NormalizationVerdict, space: &PolySpace, what: &str) -> Output {
    let mono = |e: &Vec<u32>| space.format_monomial(&Monomial(e.clone()));
    let mut text = vec![
        format!("{} generators: {}", what, join(v.sub_generators.iter().map(mono))),
        format!("target Hilbert basis: {}", join(v.target_generators.iter().map(mono))),
        format!("normalization: {}", v.is_normalization),
    ];
    for c in &v.certificates {
        text.push(format!("  integral: ({})^{} lies in the {}", mono(&c.generator), c.multiple, what));
    }
    for w in &v.lattice_witnesses {
        let terms: Vec<String> = w
            .coefficients
            .iter()
            .zip(&v.sub_generators)
            .filter(|(c, _)| **c != 0)
            .map(|(c, g)| format!("{}*[{}]", c, mono(g)))
            .collect();
        text.push(format!("  lattice: {} = {}", mono(&w.target), terms.join(" + ")));
    }
    let result = json!({
        "is_normalization": v.is_normalization,
        "sub_generators": v.sub_generators.iter().map(mono).collect::<Vec<_>>(),
        "target_generators": v.target_generators.iter().map(mono).collect::<Vec<_>>(),
        "non_surjective": v.non_surjective.iter().map(mono).collect::<Vec<_>>(),
        "certificates": v.certificates.iter().map(|c| json!({"generator": mono(&c.generator), "multiple": c.multiple, "factorization": c.factorization})).collect::<Vec<_>>(),
        "lattice_witnesses": v.lattice_witnesses.iter().map(|w| json!({"target": mono(&w.target), "coefficients": w.coefficients})).collect::<Vec<_>>(),
    });
    Output { text, result }
}
