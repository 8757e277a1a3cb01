use crate::config::Config;
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Field, Polynomial, Rationals};
use crate::galois::{algebra_span, galois_group, GaloisGroup};
use crate::numfield::{eval_rational, factor_over_number_field, FieldElement, NumberField, Primitive};
use crate::permgroup::{find_embedding, solvable_via_abelian_chain, ChainCertificate, Embedding, EmbeddingTarget, PermGroup};
use crate::splitting::{splitting_field, SplittingField};

use super::chain::RadicalChain;

/// The data defining `E_{i+1}` over `E_i`: the splitting field of
/// `Q_i(x) = ∏_{ω ∈ O_i} (x^{k} - ω)`.
#[derive(Clone, Debug)]
pub struct KummerLayer {
    k: u32,
    orbit: Vec<FieldElement>,
}

impl KummerLayer {
    /// `orbit` lives in the lower field `E_i`.
    pub fn new(k: u32, orbit: Vec<FieldElement>) -> Self {
        KummerLayer { k, orbit }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn orbit(&self) -> &[FieldElement] {
        &self.orbit
    }

    /// `∏ (x^k - ω)` over `E_i`.
    pub fn polynomial(&self) -> Result<Polynomial<NumberField>> {
        let field = self.orbit.first().ok_or_else(|| Error::invalid("empty orbit"))?.field().clone();
        let mut q = Polynomial::one(field.clone());
        for w in &self.orbit {
            let xk = Polynomial::monomial(field.clone(), field.one(), self.k as usize);
            q = q.try_mul(&xk.try_sub(&Polynomial::constant(field.clone(), w.clone()))?)?;
        }
        Ok(q)
    }

    /// `Q_i` with its coefficients recognized as rationals, if they are.
    pub fn rational_polynomial(&self) -> Result<Option<Polynomial<Rationals>>> {
        let q = self.polynomial()?;
        Ok(q.coeffs()
            .iter()
            .map(FieldElement::as_rational)
            .collect::<Option<Vec<_>>>()
            .map(|cs| Polynomial::new(Rationals, cs)))
    }
}

/// Where the normalization sends the `i`-th radical: images in `E_{i+1}`.
#[derive(Clone, Debug)]
pub struct RadicalImage {
    /// `φ(b_i)`.
    pub radicand: FieldElement,
    /// `φ(a_i)`, a root of `x^{k_i} - φ(b_i)`.
    pub root: FieldElement,
    /// `φ(θ_i)` for the primitive element `θ_i` of `R_i`; it determines the embedding.
    pub theta: FieldElement,
}

/// A nested set of normal radical extensions `ℚ = E_0 ⊂ E_1 ⊂ … ⊂ E_{n+1}`.
///
/// Each field is a [`SplittingField`] whose tower extends the one below, so
/// `E_i` sits inside `E_j` through the tower embedding.
#[derive(Clone, Debug)]
pub struct NormalRadicalTower {
    n: u64,
    fields: Vec<SplittingField>,
    layers: Vec<KummerLayer>,
    chain: Option<RadicalChain>,
    images: Vec<RadicalImage>,
}

impl NormalRadicalTower {
    /// Assembles a tower by hand; nothing beyond the shape is checked here
    /// ([`verify_nested_normal_radical`] does the rest).
    pub fn from_parts(n: u64, fields: Vec<SplittingField>, layers: Vec<KummerLayer>) -> Result<Self> {
        if fields.len() < 2 || layers.len() + 2 != fields.len() {
            return Err(Error::invalid("need fields E_0, E_1 and one Kummer layer per further field"));
        }
        if fields[0].degree() != 1 {
            return Err(Error::invalid("E_0 must be the rationals"));
        }
        for pair in fields.windows(2) {
            let level = pair[0].tower().stages().len();
            if pair[1].tower().stages().len() < level || !pair[1].tower().level(level).same(pair[0].field()) {
                return Err(Error::invalid("fields are not nested towers"));
            }
        }
        for (i, layer) in layers.iter().enumerate() {
            if layer.orbit.is_empty() || layer.orbit.iter().any(|w| !w.field().same(fields[i + 1].field())) {
                return Err(Error::invalid(format!("layer {} orbit must be a nonempty subset of E_{}", i + 1, i + 1)));
            }
        }
        Ok(NormalRadicalTower {
            n,
            fields,
            layers,
            chain: None,
            images: Vec::new(),
        })
    }

    /// The `N` of the cyclotomic layer.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `E_0, E_1, …, E_{n+1}`.
    pub fn fields(&self) -> &[SplittingField] {
        &self.fields
    }

    /// Layer `i` (0-based) describes `E_{i+2}` over `E_{i+1}`.
    pub fn layers(&self) -> &[KummerLayer] {
        &self.layers
    }

    /// The chain this tower normalizes, when built by [`normalize_chain`].
    pub fn chain(&self) -> Option<&RadicalChain> {
        self.chain.as_ref()
    }

    /// Images of the radicals; entry `i` (0-based) lives in `E_{i+2}`.
    pub fn images(&self) -> &[RadicalImage] {
        &self.images
    }

    pub fn top(&self) -> &SplittingField {
        self.fields.last().expect("at least two fields")
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.fields.iter().map(SplittingField::degree).collect()
    }

    /// Embeds an element of `E_i` into `E_j` (`i <= j`).
    pub fn embed(&self, i: usize, j: usize, a: &FieldElement) -> Result<FieldElement> {
        if i > j {
            return Err(Error::invalid("can only embed upwards"));
        }
        let level = self.fields[i].tower().stages().len();
        self.fields[j].tower().embed(level, a)
    }

    /// The primitive element of `E_i` as an element of `E_j`.
    fn theta_in(&self, i: usize, j: usize) -> FieldElement {
        self.embed(i, j, &self.fields[i].field().theta()).expect("nested towers")
    }
}

/// `x^n - 1`.
fn cyclotomic_source(n: u64) -> Polynomial<Rationals> {
    let q = Rationals;
    Polynomial::monomial(q, q.one(), n as usize).try_sub(&Polynomial::one(q)).expect("same field")
}

fn annotate_cap(e: Error, what: String) -> Error {
    match e {
        Error::DegreeCapExceeded { required, cap, context } => Error::DegreeCapExceeded {
            required,
            cap,
            context: format!("{what}: {context}"),
        },
        e => e,
    }
}

/// The normalization of a radical chain: `E_1` splits `x^N - 1` with `N` the
/// lcm of the characteristic degrees, and `E_{i+1}` splits `Q_b(x^{k_i})`
/// over `E_i`, where `Q_b` is the orbit polynomial of the image of `b_i`.
///
/// The embedding `R_i → E_{i+1}` is carried along: at each stage the image
/// of `a_i` is the first root (canonical order) of the image of its minimal
/// polynomial over `R_{i-1}`.
pub fn normalize_chain(chain: &RadicalChain, config: &Config) -> Result<NormalRadicalTower> {
    let n = chain.lcm();
    let e1 = splitting_field(&cyclotomic_source(n), config)
        .map_err(|e| annotate_cap(e, format!("cyclotomic field for N = {n}")))?;
    let mut fields = vec![SplittingField::rationals(), e1];
    let mut layers = Vec::new();
    let mut images: Vec<RadicalImage> = Vec::new();
    let mut phi_theta = fields[1].field().one();
    let total = chain.stages().len();
    for (idx, stage) in chain.stages().iter().enumerate() {
        let i = idx + 1;
        let e = fields.last().expect("nonempty").clone();
        let b = eval_rational(&stage.radicand().to_poly(), &phi_theta);

        // the radicand expression evaluated at the images of a_1..a_{i-1} must agree
        let names = images
            .iter()
            .enumerate()
            .map(|(j, im)| {
                let up = e.tower().embed(fields[j + 2].tower().stages().len(), &im.root)?;
                Ok((RadicalChain::radical_name(j + 1), up))
            })
            .collect::<Result<_>>()?;
        ensure_sound!(
            stage.radicand_expr().eval_in(e.field(), &names)? == b,
            "stage {i}: embedding does not respect the radicand"
        );

        let g = galois_group(&e)?;
        let orbit = g.orbit(&b)?;
        let q_b = g.orbit_min_poly(&b)?;
        let q = q_b.compose_power(stage.k() as usize)?;
        let next = e
            .extend(&q, config)
            .map_err(|err| annotate_cap(err, format!("normalization stage {i} of {total}")))?;

        let q_roots = next.roots().iter().filter(|r| eval_rational(&q, r).is_zero()).count();
        ensure_sound!(q_roots == q.deg(), "stage {i}: E_{} does not contain all roots of Q_b(x^k)", i + 1);

        let level = e.tower().stages().len();
        let theta_up = next.tower().embed(level, &phi_theta)?;
        let top = next.field().clone();
        let f_phi = stage.factor().map(top.clone(), |c| eval_rational(&c.to_poly(), &theta_up));
        let root = next
            .roots()
            .iter()
            .find(|r| f_phi.eval(r).is_zero())
            .cloned()
            .ok_or_else(|| Error::soundness(format!("stage {i}: R_{i} does not embed into E_{}", i + 1)))?;
        let b_up = next.tower().embed(level, &b)?;
        ensure_sound!(root.pow(stage.k().into()) == b_up, "stage {i}: image of a_{i} is not a k-th root");
        let r_stage = &chain.tower().stages()[idx];
        phi_theta = match r_stage.primitive() {
            Primitive::Generator => root.clone(),
            Primitive::Shifted(c) => &theta_up + &(&top.int(c) * &root),
            Primitive::Unchanged => theta_up,
        };
        ensure_sound!(
            eval_rational(chain.tower().level(i).min_poly(), &phi_theta).is_zero(),
            "stage {i}: image of the primitive element of R_{i} is not a conjugate"
        );
        ensure_sound!(
            eval_rational(&stage.root().to_poly(), &phi_theta) == root,
            "stage {i}: embedding does not send a_{i} to its chosen image"
        );
        layers.push(KummerLayer::new(stage.k(), orbit));
        images.push(RadicalImage {
            radicand: b_up,
            root,
            theta: phi_theta.clone(),
        });
        fields.push(next);
    }
    Ok(NormalRadicalTower {
        n,
        fields,
        layers,
        chain: Some(chain.clone()),
        images,
    })
}

/// One line of a [`TowerReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// `"1"`, `"2"`, `"3"` for the nested-set conditions, `"N1"`, `"N2"`
    /// for the normalization conditions.
    pub condition: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`verify_nested_normal_radical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerReport {
    pub checks: Vec<Check>,
}

impl TowerReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, condition: &str, subject: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            condition: condition.to_string(),
            subject: subject.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Whether `gens` generate all of their field as a ℚ-algebra.
fn generates(field_degree: usize, gens: &[FieldElement]) -> bool {
    match gens.first() {
        None => field_degree == 1,
        Some(g) => algebra_span(g.field(), gens).len() == field_degree,
    }
}

/// Roots of `p` in `e`: from the stored root list when it has them all,
/// otherwise by factoring over `e`.
fn roots_of(e: &SplittingField, p: &Polynomial<NumberField>, config: &Config) -> Result<Vec<FieldElement>> {
    let stored: Vec<FieldElement> = e.roots().iter().filter(|r| p.eval(r).is_zero()).cloned().collect();
    if stored.len() == p.deg() {
        return Ok(stored);
    }
    let f = factor_over_number_field(p, config)?;
    Ok(f.factors().iter().filter(|(h, _)| h.deg() == 1).map(|(h, _)| -h.coeff(0)).collect())
}

/// Re-checks the defining conditions of a nested set of normal radical
/// extensions, plus the normalization conditions when the tower carries its
/// chain:
///
/// 1. `E_1` is the splitting field of `x^N - 1` over ℚ, with `N >= 2`;
/// 2. every `E_i` is normal over ℚ (it is generated by all roots of a
///    rational polynomial);
/// 3. every `E_{i+1}` is the splitting field over `E_i` of
///    `∏ (x^{k_i} - ω)` for the stored set `O_i ⊂ E_i`, with `k_i | N`.
///
/// `N1`: `N` is the lcm of the characteristic degrees. `N2`: the stored
/// images define embeddings `R_i → E_{i+1}`.
pub fn verify_nested_normal_radical(t: &NormalRadicalTower, config: &Config) -> Result<TowerReport> {
    let mut report = TowerReport { checks: Vec::new() };
    let n = t.n;

    let e1 = &t.fields[1];
    if n < 2 {
        report.push("1", "E1", false, format!("N = {n}: x^N - 1 needs N >= 2, since every characteristic degree is at least 2"));
    } else {
        let p = e1.field().lift_poly(&cyclotomic_source(n));
        let roots = roots_of(e1, &p, config)?;
        let splits = roots.len() == n as usize;
        let gen = generates(e1.degree(), &roots);
        report.push(
            "1",
            "E1",
            splits && gen,
            format!(
                "x^{n} - 1 has {} of {n} roots in E1; they {} E1 (degree {})",
                roots.len(),
                if gen { "generate" } else { "do not generate" },
                e1.degree()
            ),
        );
    }

    for (i, e) in t.fields.iter().enumerate().skip(1) {
        let src = e.source();
        let annihilate = e.roots().iter().all(|r| eval_rational(src, r).is_zero());
        let mut distinct = e.roots().to_vec();
        distinct.sort_by(|a, b| a.cmp_canonical(b));
        distinct.dedup();
        let splits = annihilate && distinct.len() == src.deg();
        let gen = generates(e.degree(), e.roots());
        report.push(
            "2",
            format!("E{i}"),
            splits && gen,
            format!(
                "{} distinct roots of {src} (degree {}); they {} E{i} (degree {})",
                distinct.len(),
                src.deg(),
                if gen { "generate" } else { "do not generate" },
                e.degree()
            ),
        );
    }

    for (idx, layer) in t.layers.iter().enumerate() {
        let (lo, hi) = (idx + 1, idx + 2);
        let subject = format!("E{hi}/E{lo}");
        let divides = n >= 1 && n % u64::from(layer.k) == 0;
        report.push("3", subject.clone(), divides, format!("k = {} {} N = {n}", layer.k, if divides { "divides" } else { "does not divide" }));
        let q = layer.polynomial()?;
        let upper = &t.fields[hi];
        let q_up = q.map(upper.field().clone(), |c| t.embed(lo, hi, c).expect("nested"));
        let squarefree = q_up.is_squarefree()?;
        let roots = roots_of(upper, &q_up, config)?;
        let splits = squarefree && roots.len() == q_up.deg();
        let mut gens = vec![t.theta_in(lo, hi)];
        gens.extend(roots.iter().cloned());
        let gen = generates(upper.degree(), &gens);
        report.push(
            "3",
            subject,
            splits && gen,
            format!(
                "Q(x) of degree {} has {} roots in E{hi}; with E{lo} they {} E{hi}",
                q_up.deg(),
                roots.len(),
                if gen { "generate" } else { "do not generate" }
            ),
        );
    }

    if let Some(chain) = &t.chain {
        let lcm = chain.lcm();
        report.push("N1", "N", lcm == n, format!("lcm of characteristic degrees {:?} is {lcm}, N = {n}", chain.characteristic_degrees()));
        for (idx, (stage, im)) in chain.stages().iter().zip(&t.images).enumerate() {
            let i = idx + 1;
            let conj = eval_rational(chain.tower().level(i).min_poly(), &im.theta).is_zero();
            let root_ok = eval_rational(&stage.root().to_poly(), &im.theta) == im.root
                && im.root.pow(stage.k().into()) == im.radicand;
            report.push(
                "N2",
                format!("R{i} -> E{}", i + 1),
                conj && root_ok,
                format!("a{i} -> {}", im.root),
            );
        }
    }
    Ok(report)
}

/// `G = G(E_top, ℚ)` with the chain `G_i = G(E_top, E_i)`, one entry per
/// field (repeats kept when consecutive fields coincide).
#[derive(Clone, Debug)]
pub struct AssociatedChain {
    pub group: GaloisGroup,
    /// Element indices of each `G_i` in `group`.
    pub subgroups: Vec<Vec<usize>>,
    pub groups: Vec<PermGroup>,
    pub certificate: ChainCertificate,
}

/// Computes the associated group chain and checks that each step is normal
/// with `#(G_i / G_{i+1}) = [E_{i+1} : E_i]`.
pub fn associated_group_chain(t: &NormalRadicalTower) -> Result<AssociatedChain> {
    let top = t.fields.len() - 1;
    let g = galois_group(t.top())?;
    let mut subgroups = Vec::new();
    let mut groups = Vec::new();
    for i in 0..t.fields.len() {
        let theta = t.theta_in(i, top);
        let fixing: Vec<usize> = (0..g.order())
            .filter(|&s| g.elements()[s].apply(&theta) == theta)
            .collect();
        ensure_sound!(
            fixing.len() * t.fields[i].degree() == g.order(),
            "#G(E, E{i}) = {} but [E:E{i}] = {}",
            fixing.len(),
            g.order() / t.fields[i].degree()
        );
        groups.push(g.perm_subgroup(&fixing)?);
        subgroups.push(fixing);
    }
    for (i, pair) in groups.windows(2).enumerate() {
        ensure_sound!(pair[1].is_normal_in(&pair[0])?, "G_{} is not normal in G_{i}", i + 1);
        ensure_sound!(
            pair[0].order() / pair[1].order() == t.fields[i + 1].degree() / t.fields[i].degree(),
            "#(G_{i}/G_{}) differs from [E{}:E{i}]",
            i + 1,
            i + 1
        );
    }
    let certificate = solvable_via_abelian_chain(&groups)?;
    Ok(AssociatedChain {
        group: g,
        subgroups,
        groups,
        certificate,
    })
}

/// A layer group and the abelian target it was embedded into.
#[derive(Clone, Debug)]
pub struct LayerEmbedding {
    pub layer: String,
    pub group_order: usize,
    pub target: EmbeddingTarget,
    pub embedding: Option<Embedding>,
}

/// `G(E_1, ℚ) ↪ U(N)` and `G(E_{i+1}, E_i) ↪ ℤ_{k_i}^{#O_i}`, each searched
/// for explicitly.
pub fn layer_embeddings(t: &NormalRadicalTower) -> Result<Vec<LayerEmbedding>> {
    let mut out = Vec::new();
    let g1 = galois_group(&t.fields[1])?;
    let target = EmbeddingTarget::Units(t.n.max(2));
    out.push(LayerEmbedding {
        layer: "E1/E0".into(),
        group_order: g1.order(),
        embedding: find_embedding(&g1.perm_group(), &target)?,
        target,
    });
    for (idx, layer) in t.layers.iter().enumerate() {
        let (lo, hi) = (idx + 1, idx + 2);
        let g = galois_group(&t.fields[hi])?;
        let theta = t.theta_in(lo, hi);
        let fixing: Vec<usize> = (0..g.order())
            .filter(|&s| g.elements()[s].apply(&theta) == theta)
            .collect();
        let h = g.perm_subgroup(&fixing)?;
        let target = EmbeddingTarget::CyclicPower {
            modulus: u64::from(layer.k),
            copies: layer.orbit.len(),
        };
        out.push(LayerEmbedding {
            layer: format!("E{hi}/E{lo}"),
            group_order: h.order(),
            embedding: find_embedding(&h, &target)?,
            target,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{realize_chain, RadicalSpec};

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    fn normalize(specs: &[(u32, &str)]) -> NormalRadicalTower {
        let specs: Vec<RadicalSpec> = specs.iter().map(|&(k, b)| RadicalSpec::new(k, b)).collect();
        let c = realize_chain(&specs, &Config::default()).unwrap();
        normalize_chain(&c, &Config::default()).unwrap()
    }

    #[test]
    fn square_root_of_two() {
        let t = normalize(&[(2, "2")]);
        assert_eq!(t.n(), 2);
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert_eq!(t.layers()[0].orbit().len(), 1);
        assert_eq!(t.layers()[0].rational_polynomial().unwrap(), Some(q(&[-2, 0, 1])));
        assert!(verify_nested_normal_radical(&t, &Config::default()).unwrap().all_passed());
        let chain = associated_group_chain(&t).unwrap();
        let orders: Vec<usize> = chain.groups.iter().map(PermGroup::order).collect();
        assert_eq!(orders, vec![2, 2, 1]);
        assert!(chain.certificate.accepted());
    }

    #[test]
    fn nested_square_roots_reach_degree_eight() {
        let t = normalize(&[(2, "2"), (2, "1 + r1")]);
        assert_eq!(t.degrees(), vec![1, 1, 2, 8]);
        assert_eq!(t.layers()[1].rational_polynomial().unwrap(), Some(q(&[-1, 0, -2, 0, 1])));
        let want = crate::splitting::splitting_degree(&q(&[-1, 0, -2, 0, 1]), &Config::default()).unwrap();
        assert_eq!(t.top().degree(), want);
        let report = verify_nested_normal_radical(&t, &Config::default()).unwrap();
        assert!(report.all_passed(), "{report:#?}");
        assert_eq!(report.checks.iter().filter(|c| c.condition == "N2").count(), 2);
        for l in layer_embeddings(&t).unwrap() {
            assert!(l.embedding.is_some(), "{}", l.layer);
        }
    }

    #[test]
    fn cube_root_chain_matches_splitting_field() {
        let t = normalize(&[(3, "2")]);
        assert_eq!(t.degrees(), vec![1, 2, 6]);
        let chain = associated_group_chain(&t).unwrap();
        let orders: Vec<usize> = chain.groups.iter().map(PermGroup::order).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert!(chain.groups[1].is_abelian());
        assert!(chain.certificate.accepted());
        let q: Vec<usize> = chain.certificate.steps.iter().map(|s| s.quotient_order()).collect();
        assert_eq!(q, vec![2, 3]);
    }

    #[test]
    fn planted_violations_are_reported() {
        let c = Config::default();
        let e1 = SplittingField::rationals().extend(&q(&[-1, 0, 1]), &c).unwrap();
        let e2 = e1.extend(&q(&[-2, 0, 0, 1]), &c).unwrap();
        let two = e1.field().int(2);
        let t = NormalRadicalTower::from_parts(2, vec![SplittingField::rationals(), e1, e2], vec![KummerLayer::new(3, vec![two])]).unwrap();
        let report = verify_nested_normal_radical(&t, &c).unwrap();
        let failed: Vec<&str> = report.failures().map(|c| c.condition.as_str()).collect();
        assert_eq!(failed, vec!["3"]);

        let trivial = NormalRadicalTower::from_parts(1, vec![SplittingField::rationals(), SplittingField::rationals()], vec![]).unwrap();
        let report = verify_nested_normal_radical(&trivial, &c).unwrap();
        assert!(!report.all_passed());
        assert_eq!(report.failures().next().unwrap().condition, "1");
    }

    #[test]
    fn degree_cap_reports_the_stage() {
        let specs = [RadicalSpec::new(2, "2"), RadicalSpec::new(2, "1 + r1")];
        let c = realize_chain(&specs, &Config::default()).unwrap();
        let err = normalize_chain(&c, &Config::default().with_degree_cap(4)).unwrap_err();
        match err {
            Error::DegreeCapExceeded { required, cap, context } => {
                assert_eq!((required, cap), (8, 4));
                assert!(context.starts_with("normalization stage 2 of 2"), "{context}");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn orbit_layer_polynomial_is_linear_for_rationals() {
        let t = normalize(&[(2, "3")]);
        let w = &t.layers()[0];
        assert_eq!(w.orbit(), &[t.fields()[1].field().int(3)]);
        let p = w.polynomial().unwrap();
        assert_eq!(p, t.fields()[1].field().lift_poly(&q(&[-3, 0, 1])));
    }
}
