use crate::config::Config;
use crate::error::{ensure_sound, Error, Result};
use crate::exact_poly::{Polynomial, PrimeField, Rationals};
use crate::galois::galois_group;
use crate::permgroup::{solvable_via_abelian_chain, ChainCertificate, PermGroup, Permutation};
use crate::qfactor::{factor_mod_p, factor_over_q, primitive_integer, squarefree_mod_p};
use crate::splitting::splitting_field;

/// The transitive subgroups of `S_5`, up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TransitiveQuintic {
    C5,
    D5,
    F20,
    A5,
    S5,
}

impl TransitiveQuintic {
    pub const ALL: [TransitiveQuintic; 5] = [Self::C5, Self::D5, Self::F20, Self::A5, Self::S5];

    pub fn name(self) -> &'static str {
        match self {
            Self::C5 => "C5",
            Self::D5 => "D5",
            Self::F20 => "F20",
            Self::A5 => "A5",
            Self::S5 => "S5",
        }
    }

    /// A representative acting on `{0, …, 4}`.
    pub fn group(self) -> PermGroup {
        let cyc = |cs: &[&[usize]]| Permutation::from_cycles(5, cs).expect("valid cycles");
        let five = cyc(&[&[0, 1, 2, 3, 4]]);
        match self {
            Self::C5 => PermGroup::generate(5, &[five]),
            Self::D5 => PermGroup::generate(5, &[five, cyc(&[&[1, 4], &[2, 3]])]),
            // x -> 2x mod 5
            Self::F20 => PermGroup::generate(5, &[five, cyc(&[&[1, 2, 4, 3]])]),
            Self::A5 => PermGroup::alternating(5),
            Self::S5 => PermGroup::symmetric(5),
        }
        .expect("small group")
    }

    pub fn is_solvable(self) -> bool {
        !matches!(self, Self::A5 | Self::S5)
    }
}

/// Factorization pattern of the quintic modulo one good prime: the cycle
/// type of a Frobenius element.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusObservation {
    pub prime: u64,
    /// Monic irreducible factors mod `prime`, in canonical order.
    pub factors: Vec<Polynomial<PrimeField>>,
    /// Factor degrees, sorted ascending.
    pub cycle_type: Vec<usize>,
}

/// What the sampled cycle types prove.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuinticConclusion {
    /// Every candidate group is non-solvable; the group contains (a conjugate
    /// of) `lower_bound`.
    NotSolvable { lower_bound: TransitiveQuintic },
    /// A solvable candidate survives; nothing is claimed.
    Inconclusive,
}

/// Evidence gathered by [`quintic_group_witness`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuinticWitness {
    pub observations: Vec<FrobeniusObservation>,
    /// Primes from the list that divide the leading coefficient or discriminant.
    pub skipped_primes: Vec<u64>,
    /// Transitive groups containing every observed cycle type.
    pub candidates: Vec<TransitiveQuintic>,
    pub conclusion: QuinticConclusion,
}

fn has_cycle_type(g: &PermGroup, t: &[usize]) -> bool {
    g.elements().iter().any(|p| p.cycle_type() == t)
}

/// Samples Frobenius cycle types of an irreducible quintic at the configured
/// primes and keeps the transitive subgroups of `S_5` that contain them all.
/// This only ever certifies non-solvability; a surviving solvable candidate
/// yields [`QuinticConclusion::Inconclusive`].
pub fn quintic_group_witness(p: &Polynomial<Rationals>, config: &Config) -> Result<QuinticWitness> {
    if p.degree() != Some(5) {
        return Err(Error::invalid("the quintic witness needs a polynomial of degree 5"));
    }
    if !factor_over_q(p, config)?.is_irreducible() {
        return Err(Error::Reducible);
    }
    let zs = primitive_integer(p);
    let groups: Vec<(TransitiveQuintic, PermGroup)> = TransitiveQuintic::ALL.iter().map(|&t| (t, t.group())).collect();
    let mut candidates: Vec<TransitiveQuintic> = TransitiveQuintic::ALL.to_vec();
    let mut observations = Vec::new();
    let mut skipped_primes = Vec::new();
    for &prime in &config.witness_primes {
        let field = PrimeField::new(prime)?;
        if !squarefree_mod_p(&zs, prime) {
            skipped_primes.push(prime);
            continue;
        }
        let image = Polynomial::new(field, zs.iter().map(|c| field.from_bigint(c)).collect());
        let f = factor_mod_p(&image, config.seed)?;
        let factors: Vec<Polynomial<PrimeField>> = f.factors().iter().map(|(g, _)| g.clone()).collect();
        let mut cycle_type: Vec<usize> = factors.iter().map(Polynomial::deg).collect();
        cycle_type.sort_unstable();
        candidates.retain(|t| has_cycle_type(&groups.iter().find(|(u, _)| u == t).expect("listed").1, &cycle_type));
        observations.push(FrobeniusObservation {
            prime,
            factors,
            cycle_type,
        });
    }
    ensure_sound!(!candidates.is_empty(), "no transitive subgroup of S5 fits the observed cycle types");
    let conclusion = if observations.is_empty() || candidates.iter().any(|t| t.is_solvable()) {
        QuinticConclusion::Inconclusive
    } else {
        QuinticConclusion::NotSolvable {
            lower_bound: candidates[0],
        }
    };
    Ok(QuinticWitness {
        observations,
        skipped_primes,
        candidates,
        conclusion,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    /// The Galois group is solvable: the necessary condition holds. Whether
    /// the equation is actually solvable by radicals is not decided here.
    SolvableGroup,
    NotSolvableByRadicals,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMethod {
    /// The Galois group was enumerated on an explicit splitting field.
    SplittingField,
    /// Frobenius cycle types pinned the group of an irreducible quintic.
    QuinticFrobenius,
}

/// Outcome of [`necessary_condition_verdict`].
#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub method: VerdictMethod,
    /// The Galois group on the roots, or on the quintic path the certified
    /// transitive subgroup.
    pub group: PermGroup,
    /// Exact `#G` when known.
    pub group_order: Option<usize>,
    pub splitting_degree: Option<usize>,
    /// Derived series; a non-solvable one ends with its repeated stall.
    pub derived_series: Vec<PermGroup>,
    /// Abelian-quotient check of the derived series (solvable case only).
    pub certificate: Option<ChainCertificate>,
    pub quintic: Option<QuinticWitness>,
}

/// If `p = 0` were solvable by radicals its Galois group would be solvable;
/// this decides the group side. Irreducible quintics first try the Frobenius
/// fast path, which can only prove non-solvability.
pub fn necessary_condition_verdict(p: &Polynomial<Rationals>, config: &Config) -> Result<Verdict> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let sf = p.squarefree_part()?;
    let mut quintic = None;
    if sf.deg() == 5 && factor_over_q(&sf, config)?.is_irreducible() {
        let w = quintic_group_witness(&sf, config)?;
        if let QuinticConclusion::NotSolvable { lower_bound } = w.conclusion {
            let group = lower_bound.group();
            let (solvable, derived_series) = group.is_solvable();
            ensure_sound!(!solvable, "{} reported solvable", lower_bound.name());
            return Ok(Verdict {
                kind: VerdictKind::NotSolvableByRadicals,
                method: VerdictMethod::QuinticFrobenius,
                group_order: (w.candidates.len() == 1).then(|| group.order()),
                group,
                splitting_degree: None,
                derived_series,
                certificate: None,
                quintic: Some(w),
            });
        }
        quintic = Some(w);
    }
    let e = splitting_field(p, config)?;
    let g = galois_group(&e)?;
    let group = g.perm_group();
    let (solvable, derived_series) = group.is_solvable();
    let certificate = if solvable {
        let cert = solvable_via_abelian_chain(&derived_series)?;
        ensure_sound!(cert.accepted(), "derived series of a solvable group failed the abelian-quotient check");
        Some(cert)
    } else {
        None
    };
    Ok(Verdict {
        kind: if solvable {
            VerdictKind::SolvableGroup
        } else {
            VerdictKind::NotSolvableByRadicals
        },
        method: VerdictMethod::SplittingField,
        group_order: Some(group.order()),
        splitting_degree: Some(e.degree()),
        group,
        derived_series,
        certificate,
        quintic,
    })
}
