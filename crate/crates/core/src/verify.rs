//! The verification harness: a replayable witness language, per-ring
//! contexts bundling lattices with quotient and localization data, the
//! check runner, and the counterexample search.
//!
//! A witness names everything symbolically (element names, not indices),
//! so replaying one rebuilds the scene from the ring's public operations
//! alone and must reproduce the recorded violation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bijection::bijection_maps;
use crate::bitset::BitSet;
use crate::cache::{lattice_for, LatticeCache};
use crate::gcd::{gcd_table, satisfies_star, GcdOutcome, StarError};
use crate::hollow::{all_hollow_profiles, HollowProfile};
use crate::ideal::{
    ideal_colon, ideal_intersect, ideal_power, ideal_product, ideal_span, ideal_sum,
    unit_ideal, zero_ideal, Ideal,
};
use crate::irreducible::{all_irreducibility_profiles, IrreducibilityProfile};
use crate::lattice::{enumerate_ideals, ideal_generators, IdealLattice};
use crate::quotient::{
    hom_image, hom_preimage, localize_at_maximal, make_quotient, RingHom,
};
use crate::ring::FiniteRing;
use crate::vecspace::{m_mod_m2, split_postconditions_hold, vs_split};

/// Where a claim is evaluated: the ring itself, a quotient by the ideal the
/// named elements generate, or the localization at the maximal ideal they
/// generate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scene {
    Base,
    Quotient { by: Vec<String> },
    Localization { at: Vec<String> },
}

/// An ideal of the scene ring, written in terms of element names and
/// lattice-free operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdealExpr {
    Gens(Vec<String>),
    Zero,
    Unit,
    Jacobson,
    Nilradical,
    Gamma(Box<IdealExpr>),
    Colon(Box<IdealExpr>, Box<IdealExpr>),
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Meet(Box<IdealExpr>, Box<IdealExpr>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Power(Box<IdealExpr>, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pred {
    Sh,
    Csh,
    Si,
    Csi,
    Waist,
    Principal,
    Maximal,
    Prime,
    MinimalPrime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    Subset(IdealExpr, IdealExpr),
    NotSubset(IdealExpr, IdealExpr),
    Equals(IdealExpr, IdealExpr),
    StrictSubset(IdealExpr, IdealExpr),
    Holds(Pred, IdealExpr),
    PrimaryWithRadical(IdealExpr, IdealExpr),
    SceneIsField,
    SceneIsLocal,
    /// At most `at_most` maximal ideals fail to contain the ideal.
    CountEscapedMaximals { ideal: IdealExpr, at_most: usize },
    /// At most `at_most` maximal ideals have a power failing to contain the
    /// ideal, and each first escape happens at exponent >= `from_exponent`.
    CountPowerEscapes {
        ideal: IdealExpr,
        at_most: usize,
        from_exponent: u32,
    },
    /// The cotangent space at the given maximal splits as line plus
    /// hyperplane avoiding the subspace spanned by vectors `w`.
    CotangentSplit { at: IdealExpr, w: Vec<u64> },
    /// The hollow-to-irreducible correspondence is a mutually inverse pair
    /// on this scene.
    CshCsiMatch,
    SatisfiesStar(IdealExpr),
    And(Box<Claim>, Box<Claim>),
    Or(Box<Claim>, Box<Claim>),
    Not(Box<Claim>),
}

impl Claim {
    pub fn and(a: Claim, b: Claim) -> Claim {
        Claim::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Claim, b: Claim) -> Claim {
        Claim::Or(Box::new(a), Box::new(b))
    }

    pub fn not(a: Claim) -> Claim {
        Claim::Not(Box::new(a))
    }
}

/// A self-contained violation record: evaluating `claim` in `scene` must
/// disagree with `expected`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub scene: Scene,
    pub claim: Claim,
    pub expected: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("no element named {0:?} in this scene")]
    UnknownElement(String),
    #[error("scene construction failed: {0}")]
    Scene(String),
    #[error("gcds are not defined for every element pair in this scene")]
    NoGcd,
    #[error("cotangent claim is malformed: {0}")]
    Split(String),
}

fn resolve_names(ring: &FiniteRing, names: &[String]) -> Result<Vec<usize>, ReplayError> {
    names
        .iter()
        .map(|n| {
            ring.element_by_name(n)
                .ok_or_else(|| ReplayError::UnknownElement(n.clone()))
        })
        .collect()
}

fn scene_ring(ring: &FiniteRing, scene: &Scene) -> Result<FiniteRing, ReplayError> {
    match scene {
        Scene::Base => Ok(ring.clone()),
        Scene::Quotient { by } => {
            let gens = resolve_names(ring, by)?;
            let kernel = ideal_span(ring, &gens);
            let (target, _) =
                make_quotient(ring, &kernel).map_err(|e| ReplayError::Scene(e.to_string()))?;
            Ok(target)
        }
        Scene::Localization { at } => {
            let gens = resolve_names(ring, at)?;
            let m = ideal_span(ring, &gens);
            let lat = enumerate_ideals(ring);
            let idx = lat
                .index_of(&m)
                .expect("every ideal appears in the lattice");
            let (target, _) =
                localize_at_maximal(&lat, idx).map_err(|e| ReplayError::Scene(e.to_string()))?;
            Ok(target)
        }
    }
}

struct Replayer {
    ring: FiniteRing,
    lat: IdealLattice,
    hp: Vec<HollowProfile>,
    ip: Vec<IrreducibilityProfile>,
}

impl Replayer {
    fn new(ring: FiniteRing) -> Replayer {
        let lat = enumerate_ideals(&ring);
        let hp = all_hollow_profiles(&lat);
        let ip = all_irreducibility_profiles(&lat);
        Replayer { ring, lat, hp, ip }
    }

    fn idx(&self, i: &Ideal) -> usize {
        self.lat
            .index_of(i)
            .expect("expression results are ideals of the scene ring")
    }

    fn eval_expr(&self, e: &IdealExpr) -> Result<Ideal, ReplayError> {
        let r = &self.ring;
        Ok(match e {
            IdealExpr::Gens(names) => ideal_span(r, &resolve_names(r, names)?),
            IdealExpr::Zero => zero_ideal(r),
            IdealExpr::Unit => unit_ideal(r),
            IdealExpr::Jacobson => self.lat.ideal(self.lat.summary().jacobson).clone(),
            IdealExpr::Nilradical => self.lat.ideal(self.lat.summary().nilradical).clone(),
            IdealExpr::Gamma(inner) => {
                let i = self.idx(&self.eval_expr(inner)?);
                self.lat.ideal(self.hp[i].gamma).clone()
            }
            IdealExpr::Colon(a, b) => {
                ideal_colon(r, &self.eval_expr(a)?, &self.eval_expr(b)?).expect("same ring")
            }
            IdealExpr::Sum(a, b) => {
                ideal_sum(r, &self.eval_expr(a)?, &self.eval_expr(b)?).expect("same ring")
            }
            IdealExpr::Meet(a, b) => {
                ideal_intersect(r, &self.eval_expr(a)?, &self.eval_expr(b)?).expect("same ring")
            }
            IdealExpr::Product(a, b) => {
                ideal_product(r, &self.eval_expr(a)?, &self.eval_expr(b)?).expect("same ring")
            }
            IdealExpr::Power(a, n) => {
                ideal_power(r, &self.eval_expr(a)?, *n).expect("same ring")
            }
        })
    }

    fn eval_claim(&self, c: &Claim) -> Result<bool, ReplayError> {
        Ok(match c {
            Claim::Subset(a, b) => self.eval_expr(a)?.is_subset(&self.eval_expr(b)?),
            Claim::NotSubset(a, b) => !self.eval_expr(a)?.is_subset(&self.eval_expr(b)?),
            Claim::Equals(a, b) => self.eval_expr(a)? == self.eval_expr(b)?,
            Claim::StrictSubset(a, b) => {
                let (x, y) = (self.eval_expr(a)?, self.eval_expr(b)?);
                x.is_subset(&y) && x != y
            }
            Claim::Holds(p, e) => {
                let i = self.idx(&self.eval_expr(e)?);
                match p {
                    Pred::Sh => self.hp[i].is_sh,
                    Pred::Csh => self.hp[i].is_csh,
                    Pred::Si => self.ip[i].is_si,
                    Pred::Csi => self.ip[i].is_csi,
                    Pred::Waist => self.ip[i].is_waist,
                    Pred::Principal => self.lat.is_principal(i),
                    Pred::Maximal => self.lat.classification(i).is_maximal,
                    Pred::Prime => self.lat.classification(i).is_prime,
                    Pred::MinimalPrime => self.lat.classification(i).is_minimal_prime,
                }
            }
            Claim::PrimaryWithRadical(e, rad) => {
                let i = self.idx(&self.eval_expr(e)?);
                let r = self.idx(&self.eval_expr(rad)?);
                let cls = self.lat.classification(i);
                cls.is_primary && cls.radical == r
            }
            Claim::SceneIsField => self.lat.summary().is_field,
            Claim::SceneIsLocal => self.lat.summary().is_local,
            Claim::CountEscapedMaximals { ideal, at_most } => {
                let i = self.idx(&self.eval_expr(ideal)?);
                let escaped = self
                    .lat
                    .summary()
                    .maximals
                    .iter()
                    .filter(|&&m| !self.lat.le(i, m))
                    .count();
                escaped <= *at_most
            }
            Claim::CountPowerEscapes {
                ideal,
                at_most,
                from_exponent,
            } => {
                let i = self.idx(&self.eval_expr(ideal)?);
                let mut escapes = 0usize;
                let mut ok = true;
                for &m in &self.lat.summary().maximals {
                    let first = self
                        .lat
                        .power_chain(m)
                        .iter()
                        .position(|&p| !self.lat.le(i, p));
                    if let Some(j) = first {
                        escapes += 1;
                        if (j as u32 + 1) < *from_exponent {
                            ok = false;
                        }
                    }
                }
                ok && escapes <= *at_most
            }
            Claim::CotangentSplit { at, w } => {
                let m = self.idx(&self.eval_expr(at)?);
                let v = m_mod_m2(&self.lat, m).map_err(|e| ReplayError::Split(e.to_string()))?;
                let mut mask = BitSet::empty(v.len());
                for &x in w {
                    let x = x as usize;
                    if x >= v.len() {
                        return Err(ReplayError::Split(format!(
                            "vector index {x} out of range"
                        )));
                    }
                    mask.insert(x);
                }
                if !v.is_subspace(&mask) {
                    return Err(ReplayError::Split("not a subspace".into()));
                }
                let split =
                    vs_split(&v, &mask).map_err(|e| ReplayError::Split(e.to_string()))?;
                split_postconditions_hold(&v, &mask, &split)
            }
            Claim::CshCsiMatch => {
                let r = bijection_maps(&self.lat, &self.hp, &self.ip);
                r.forward_lands_in_csi && r.backward_lands_in_csh && r.mutually_inverse
            }
            Claim::SatisfiesStar(e) => {
                let i = self.idx(&self.eval_expr(e)?);
                let table = gcd_table(&self.lat);
                match satisfies_star(&self.lat, &table, i) {
                    Ok(b) => b,
                    Err(StarError::NotGcdRing) => return Err(ReplayError::NoGcd),
                }
            }
            Claim::And(a, b) => self.eval_claim(a)? && self.eval_claim(b)?,
            Claim::Or(a, b) => self.eval_claim(a)? || self.eval_claim(b)?,
            Claim::Not(a) => !self.eval_claim(a)?,
        })
    }
}

/// Rebuilds the scene from scratch and evaluates the claim. The witness is
/// confirmed when the result differs from `expected`.
pub fn replay(ring: &FiniteRing, w: &Witness) -> Result<bool, ReplayError> {
    let scene = scene_ring(ring, &w.scene)?;
    Replayer::new(scene).eval_claim(&w.claim)
}

/// Generator-name expression for a lattice member, with the zero and unit
/// ideals folded to their symbolic forms.
pub fn expr_at(lat: &IdealLattice, i: usize) -> IdealExpr {
    if i == lat.zero_index() {
        return IdealExpr::Zero;
    }
    if i == lat.ring_index() {
        return IdealExpr::Unit;
    }
    let ring = lat.ring();
    IdealExpr::Gens(
        ideal_generators(ring, &lat.ideal(i).members)
            .iter()
            .map(|&g| ring.name(g).to_string())
            .collect(),
    )
}

fn gen_names(lat: &IdealLattice, i: usize) -> Vec<String> {
    let ring = lat.ring();
    ideal_generators(ring, &lat.ideal(i).members)
        .iter()
        .map(|&g| ring.name(g).to_string())
        .collect()
}

pub fn quotient_scene(lat: &IdealLattice, by: usize) -> Scene {
    Scene::Quotient {
        by: gen_names(lat, by),
    }
}

pub fn localization_scene(lat: &IdealLattice, at: usize) -> Scene {
    Scene::Localization {
        at: gen_names(lat, at),
    }
}

/// Quotient of the base ring by one of its proper ideals, with the lattice
/// and profiles of the quotient and index transport tables both ways.
pub struct QuotientContext {
    /// Base lattice index of the kernel.
    pub by: usize,
    pub hom: RingHom,
    pub lat: IdealLattice,
    pub hp: Vec<HollowProfile>,
    pub ip: Vec<IrreducibilityProfile>,
    /// Base lattice index to target lattice index of the image.
    pub image_idx: Vec<usize>,
    /// Target lattice index to base lattice index of the preimage.
    pub preimage_idx: Vec<usize>,
}

/// Localization at one of the maximal ideals, same shape as a quotient
/// context.
pub struct LocalizationContext {
    /// Base lattice index of the maximal ideal.
    pub at: usize,
    pub hom: RingHom,
    pub lat: IdealLattice,
    pub hp: Vec<HollowProfile>,
    pub ip: Vec<IrreducibilityProfile>,
    pub image_idx: Vec<usize>,
    pub preimage_idx: Vec<usize>,
}

/// Everything the checks consume for one ring, computed up front.
pub struct RingContext {
    pub ring: FiniteRing,
    pub lat: IdealLattice,
    pub hp: Vec<HollowProfile>,
    pub ip: Vec<IrreducibilityProfile>,
    /// Elements whose product with every nonzero element stays nonzero,
    /// found by direct scan.
    pub nzds: Vec<usize>,
    /// One entry per proper ideal; `quotients[j].by == j`.
    pub quotients: Vec<QuotientContext>,
    /// Aligned with `lat.summary().maximals`.
    pub locs: Vec<LocalizationContext>,
    /// Element-pair gcd table, row major.
    pub gcds: Vec<GcdOutcome>,
}

impl RingContext {
    pub fn expr(&self, i: usize) -> IdealExpr {
        expr_at(&self.lat, i)
    }

    pub fn jacobson(&self) -> usize {
        self.lat.summary().jacobson
    }

    pub fn nilradical(&self) -> usize {
        self.lat.summary().nilradical
    }
}

fn transport_tables(
    base: &IdealLattice,
    hom: &RingHom,
    target: &IdealLattice,
) -> (Vec<usize>, Vec<usize>) {
    let image_idx = base
        .ideals()
        .iter()
        .map(|i| {
            target
                .index_of(&hom_image(hom, i).expect("ids match"))
                .expect("surjective image of an ideal is an ideal")
        })
        .collect();
    let preimage_idx = target
        .ideals()
        .iter()
        .map(|t| {
            base.index_of(&hom_preimage(hom, t).expect("ids match"))
                .expect("preimage of an ideal is an ideal")
        })
        .collect();
    (image_idx, preimage_idx)
}

pub fn build_ring_context(ring: &FiniteRing, cache: Option<&LatticeCache>) -> RingContext {
    let lat = lattice_for(ring, cache);
    let hp = all_hollow_profiles(&lat);
    let ip = all_irreducibility_profiles(&lat);
    let zero = ring.zero();
    let nzds = (0..ring.order())
        .filter(|&r| (0..ring.order()).all(|s| s == zero || ring.mul(r, s) != zero))
        .collect();
    let quotients = (0..lat.len() - 1)
        .map(|j| {
            let (_, hom) = make_quotient(ring, lat.ideal(j)).expect("lattice member");
            let qlat = lattice_for(&hom.target, cache);
            let qhp = all_hollow_profiles(&qlat);
            let qip = all_irreducibility_profiles(&qlat);
            let (image_idx, preimage_idx) = transport_tables(&lat, &hom, &qlat);
            QuotientContext {
                by: j,
                hom,
                lat: qlat,
                hp: qhp,
                ip: qip,
                image_idx,
                preimage_idx,
            }
        })
        .collect();
    let locs = lat
        .summary()
        .maximals
        .clone()
        .into_iter()
        .map(|m| {
            let (_, hom) = localize_at_maximal(&lat, m).expect("maximal ideal");
            let llat = lattice_for(&hom.target, cache);
            let lhp = all_hollow_profiles(&llat);
            let lip = all_irreducibility_profiles(&llat);
            let (image_idx, preimage_idx) = transport_tables(&lat, &hom, &llat);
            LocalizationContext {
                at: m,
                hom,
                lat: llat,
                hp: lhp,
                ip: lip,
                image_idx,
                preimage_idx,
            }
        })
        .collect();
    let gcds = gcd_table(&lat);
    RingContext {
        ring: ring.clone(),
        lat,
        hp,
        ip,
        nzds,
        quotients,
        locs,
        gcds,
    }
}

/// Tally of one check on one ring. `hits` counts hypothesis instances,
/// `checked` counts individual conclusions; the first failed conclusion
/// pins its witness.
#[derive(Debug, Default)]
pub struct CheckOutcome {
    pub hits: usize,
    pub checked: usize,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn hit(&mut self) {
        self.hits += 1;
    }

    /// Records one conclusion. On failure the witness is built and, in
    /// debug builds, replayed immediately to confirm it reproduces the
    /// violation.
    pub fn require(&mut self, ring: &FiniteRing, ok: bool, wit: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            let w = wit();
            debug_assert!(
                matches!(replay(ring, &w), Ok(b) if b != w.expected),
                "witness failed to replay as a violation: {w:?}"
            );
            self.witness = Some(w);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

/// One registered check: an id, a statement of what is being verified, and
/// the runner. `degenerate` marks checks whose hypotheses cannot be
/// populated by finite rings at all; `fixed_hypotheses` marks checks whose
/// side conditions hold for every finite ring automatically.
pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub degenerate: bool,
    pub fixed_hypotheses: bool,
    pub run: fn(&RingContext) -> CheckOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceCounts {
    pub hypothesis_hits: usize,
    pub conclusions_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub ring: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub instances: InstanceCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tags: Vec<String>,
}

pub fn run_check(def: &CheckDef, ctx: &RingContext) -> VerificationReport {
    let out = (def.run)(ctx);
    let status = if out.witness.is_some() {
        Status::Fail
    } else if out.hits == 0 {
        Status::Vacuous
    } else {
        Status::Pass
    };
    let mut tags = Vec::new();
    if def.degenerate {
        tags.push("degenerate".to_string());
    }
    if def.fixed_hypotheses {
        tags.push("fixed-hypotheses".to_string());
    }
    VerificationReport {
        check: def.id.to_string(),
        ring: ctx.ring.provenance().to_string(),
        status,
        witness: out.witness,
        instances: InstanceCounts {
            hypothesis_hits: out.hits,
            conclusions_checked: out.checked,
        },
        note: out.note,
        tags,
    }
}

/// Suite result over a whole corpus. A check that never leaves vacuous
/// status on any ring and is not tagged degenerate counts as a failure:
/// it verified nothing.
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
    pub passes: usize,
    pub fails: usize,
    pub vacuous: usize,
    pub untagged_vacuous: Vec<String>,
    pub failed: bool,
}

pub fn run_suite(
    defs: &[CheckDef],
    rings: &[FiniteRing],
    cache: Option<&LatticeCache>,
) -> SuiteReport {
    let contexts: Vec<RingContext> = rings
        .par_iter()
        .map(|r| build_ring_context(r, cache))
        .collect();
    let reports: Vec<VerificationReport> = defs
        .par_iter()
        .flat_map_iter(|d| contexts.iter().map(move |c| run_check(d, c)))
        .collect();
    let passes = reports.iter().filter(|r| r.status == Status::Pass).count();
    let fails = reports.iter().filter(|r| r.status == Status::Fail).count();
    let vacuous = reports
        .iter()
        .filter(|r| r.status == Status::Vacuous)
        .count();
    let untagged_vacuous: Vec<String> = defs
        .iter()
        .filter(|d| !d.degenerate)
        .filter(|d| {
            !reports
                .iter()
                .any(|r| r.check == d.id && r.status != Status::Vacuous)
        })
        .map(|d| d.id.to_string())
        .collect();
    let failed = fails > 0 || !untagged_vacuous.is_empty();
    SuiteReport {
        reports,
        passes,
        fails,
        vacuous,
        untagged_vacuous,
        failed,
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("unknown search property {0:?}")]
    UnknownProperty(String),
}

pub const SEARCH_PROPERTIES: &[&str] = &[
    "sh-not-csh",
    "si-not-csi",
    "csh-not-principal",
    "csh-nonlocal",
    "sh-proper-escapes-jacobson",
];

/// A found example: the property holds at this ideal, and the attached
/// witness replays to true.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchHit {
    pub ring: String,
    pub ideal: String,
    pub witness: Witness,
}

/// Scans the corpus in order for the first ideal exhibiting the named
/// property. Within a ring, candidates are tried by their generator name
/// sequence, so smaller generators win over lattice position.
pub fn search_counterexample(
    property: &str,
    rings: &[FiniteRing],
    cache: Option<&LatticeCache>,
) -> Result<Option<SearchHit>, VerifyError> {
    if !SEARCH_PROPERTIES.contains(&property) {
        return Err(VerifyError::UnknownProperty(property.to_string()));
    }
    for ring in rings {
        let lat = lattice_for(ring, cache);
        let hp = all_hollow_profiles(&lat);
        let ip = all_irreducibility_profiles(&lat);
        let jac = lat.summary().jacobson;
        let mut order: Vec<usize> = (0..lat.len()).collect();
        order.sort_by_cached_key(|&i| ideal_generators(ring, &lat.ideal(i).members));
        for &i in &order {
            let found = match property {
                "sh-not-csh" => hp[i].is_sh && !hp[i].is_csh,
                "si-not-csi" => ip[i].is_si && !ip[i].is_csi,
                "csh-not-principal" => hp[i].is_csh && !lat.is_principal(i),
                "csh-nonlocal" => !lat.summary().is_local && hp[i].is_csh,
                "sh-proper-escapes-jacobson" => {
                    i != lat.ring_index() && hp[i].is_sh && !lat.le(i, jac)
                }
                _ => unreachable!("property list is closed"),
            };
            if !found {
                continue;
            }
            let e = expr_at(&lat, i);
            let claim = match property {
                "sh-not-csh" => Claim::and(
                    Claim::Holds(Pred::Sh, e.clone()),
                    Claim::not(Claim::Holds(Pred::Csh, e.clone())),
                ),
                "si-not-csi" => Claim::and(
                    Claim::Holds(Pred::Si, e.clone()),
                    Claim::not(Claim::Holds(Pred::Csi, e.clone())),
                ),
                "csh-not-principal" => Claim::and(
                    Claim::Holds(Pred::Csh, e.clone()),
                    Claim::not(Claim::Holds(Pred::Principal, e.clone())),
                ),
                "csh-nonlocal" => Claim::and(
                    Claim::Holds(Pred::Csh, e.clone()),
                    Claim::not(Claim::SceneIsLocal),
                ),
                "sh-proper-escapes-jacobson" => Claim::and(
                    Claim::Holds(Pred::Sh, e.clone()),
                    Claim::and(
                        Claim::StrictSubset(e.clone(), IdealExpr::Unit),
                        Claim::NotSubset(e.clone(), IdealExpr::Jacobson),
                    ),
                ),
                _ => unreachable!("property list is closed"),
            };
            let witness = Witness {
                scene: Scene::Base,
                claim,
                expected: true,
            };
            debug_assert_eq!(
                replay(ring, &witness),
                Ok(true),
                "search hit must replay to true"
            );
            return Ok(Some(SearchHit {
                ring: ring.provenance().to_string(),
                ideal: lat.label(i).to_string(),
                witness,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::preset_f2xy_mod_square;
    use crate::ring::make_zmod;

    fn base(claim: Claim, expected: bool) -> Witness {
        Witness {
            scene: Scene::Base,
            claim,
            expected,
        }
    }

    #[test]
    fn replay_subset_and_holds() {
        let r = make_zmod(6).unwrap();
        let two = IdealExpr::Gens(vec!["2".into()]);
        let three = IdealExpr::Gens(vec!["3".into()]);
        let w = base(Claim::Subset(three.clone(), two.clone()), true);
        assert_eq!(replay(&r, &w), Ok(false));
        assert_eq!(
            replay(&r, &base(Claim::Holds(Pred::Sh, two.clone()), true)),
            Ok(true)
        );
        assert_eq!(
            replay(&r, &base(Claim::Holds(Pred::Sh, IdealExpr::Zero), true)),
            Ok(false)
        );
        assert_eq!(
            replay(
                &r,
                &base(Claim::Equals(IdealExpr::Gamma(Box::new(two)), three), true)
            ),
            Ok(true)
        );
        assert_eq!(
            replay(&r, &base(Claim::Holds(Pred::Sh, IdealExpr::Gens(vec!["9".into()])), true)),
            Err(ReplayError::UnknownElement("9".into()))
        );
    }

    #[test]
    fn replay_quotient_and_localization_scenes() {
        let r = make_zmod(12).unwrap();
        let wq = Witness {
            scene: Scene::Quotient { by: vec!["4".into()] },
            claim: Claim::Holds(Pred::Maximal, IdealExpr::Gens(vec!["2".into()])),
            expected: true,
        };
        assert_eq!(replay(&r, &wq), Ok(true));
        let wl3 = Witness {
            scene: Scene::Localization { at: vec!["3".into()] },
            claim: Claim::SceneIsField,
            expected: true,
        };
        assert_eq!(replay(&r, &wl3), Ok(true));
        let wl2 = Witness {
            scene: Scene::Localization { at: vec!["2".into()] },
            claim: Claim::SceneIsField,
            expected: true,
        };
        assert_eq!(replay(&r, &wl2), Ok(false));
        let bad = Witness {
            scene: Scene::Localization { at: vec!["4".into()] },
            claim: Claim::SceneIsField,
            expected: true,
        };
        assert!(matches!(replay(&r, &bad), Err(ReplayError::Scene(_))));
    }

    #[test]
    fn replay_count_claims() {
        let r = make_zmod(6).unwrap();
        let two = IdealExpr::Gens(vec!["2".into()]);
        let w = base(
            Claim::CountEscapedMaximals {
                ideal: two.clone(),
                at_most: 1,
            },
            true,
        );
        assert_eq!(replay(&r, &w), Ok(true));
        let w0 = base(
            Claim::CountEscapedMaximals {
                ideal: two,
                at_most: 0,
            },
            true,
        );
        assert_eq!(replay(&r, &w0), Ok(false));
        // (4) in Z/8 first escapes M = (2) at exponent 3.
        let r8 = make_zmod(8).unwrap();
        let four = IdealExpr::Gens(vec!["4".into()]);
        let w3 = base(
            Claim::CountPowerEscapes {
                ideal: four.clone(),
                at_most: 1,
                from_exponent: 3,
            },
            true,
        );
        assert_eq!(replay(&r8, &w3), Ok(true));
        let w4 = base(
            Claim::CountPowerEscapes {
                ideal: four,
                at_most: 1,
                from_exponent: 4,
            },
            true,
        );
        assert_eq!(replay(&r8, &w4), Ok(false));
    }

    #[test]
    fn replay_cotangent_split() {
        let r = preset_f2xy_mod_square();
        let lat = enumerate_ideals(&r);
        let m = lat.summary().maximals[0];
        let v = m_mod_m2(&lat, m).unwrap();
        let x = r.element_by_name("x").unwrap();
        let vx = v.surjection().unwrap().map[x].unwrap();
        let w_mask = v.span(&[vx]);
        let w = base(
            Claim::CotangentSplit {
                at: expr_at(&lat, m),
                w: w_mask.iter().map(|i| i as u64).collect(),
            },
            true,
        );
        assert_eq!(replay(&r, &w), Ok(true));
        let not_subspace = base(
            Claim::CotangentSplit {
                at: expr_at(&lat, m),
                w: vec![vx as u64],
            },
            true,
        );
        assert!(matches!(replay(&r, &not_subspace), Err(ReplayError::Split(_))));
    }

    #[test]
    fn replay_star_and_match() {
        let r = make_zmod(6).unwrap();
        let lat = enumerate_ideals(&r);
        let table = gcd_table(&lat);
        let two_idx = lat
            .index_of(&ideal_span(&r, &[2]))
            .unwrap();
        let expect = satisfies_star(&lat, &table, two_idx).unwrap();
        let w = base(
            Claim::SatisfiesStar(IdealExpr::Gens(vec!["2".into()])),
            true,
        );
        assert_eq!(replay(&r, &w), Ok(expect));
        assert_eq!(replay(&r, &base(Claim::CshCsiMatch, true)), Ok(true));
    }

    #[test]
    fn context_shape_z12() {
        let r = make_zmod(12).unwrap();
        let ctx = build_ring_context(&r, None);
        assert_eq!(ctx.lat.len(), 6);
        assert_eq!(ctx.quotients.len(), 5);
        assert_eq!(ctx.locs.len(), 2);
        // Unit group of Z/12 is exactly the non-zero-divisors.
        assert_eq!(ctx.nzds, vec![1, 5, 7, 11]);
        for (j, q) in ctx.quotients.iter().enumerate() {
            assert_eq!(q.by, j);
            assert!(q.hom.verify());
            // Transport round trip: preimage of image contains the kernel.
            for i in 0..ctx.lat.len() {
                let img = q.image_idx[i];
                let back = q.preimage_idx[img];
                assert!(ctx.lat.le(i, back));
                assert!(ctx.lat.le(q.by, back));
            }
        }
        let at: Vec<usize> = ctx.locs.iter().map(|l| l.at).collect();
        assert_eq!(&at, ctx.lat.summary().maximals.as_slice());
        // Maximals in lattice order: (3) has four members, (2) has six.
        let orders: Vec<usize> = ctx.locs.iter().map(|l| l.hom.target.order()).collect();
        assert_eq!(orders, vec![3, 4]);
    }

    #[test]
    fn search_finds_nonlocal_csh() {
        let rings = vec![
            make_zmod(2).unwrap(),
            make_zmod(4).unwrap(),
            make_zmod(6).unwrap(),
        ];
        let hit = search_counterexample("csh-nonlocal", &rings, None)
            .unwrap()
            .expect("Z/6 has a hollow ideal and two maximals");
        assert_eq!(hit.ring, "Z/6");
        assert_eq!(hit.ideal, "(2)");
        let hit2 = search_counterexample("sh-proper-escapes-jacobson", &rings, None)
            .unwrap()
            .unwrap();
        assert_eq!((hit2.ring.as_str(), hit2.ideal.as_str()), ("Z/6", "(2)"));
    }

    #[test]
    fn search_honest_none_and_unknown() {
        let rings: Vec<FiniteRing> = (2..=12).map(|n| make_zmod(n).unwrap()).collect();
        // Finite rings leave no daylight between the pair and family forms.
        assert!(search_counterexample("sh-not-csh", &rings, None)
            .unwrap()
            .is_none());
        assert!(search_counterexample("si-not-csi", &rings, None)
            .unwrap()
            .is_none());
        assert!(matches!(
            search_counterexample("bogus", &rings, None),
            Err(VerifyError::UnknownProperty(_))
        ));
    }

    #[test]
    fn witness_json_round_trip() {
        let w = Witness {
            scene: Scene::Localization { at: vec!["2".into()] },
            claim: Claim::and(
                Claim::Holds(Pred::Csh, IdealExpr::Gens(vec!["2".into()])),
                Claim::not(Claim::SceneIsField),
            ),
            expected: true,
        };
        let s = serde_json::to_string(&w).unwrap();
        let back: Witness = serde_json::from_str(&s).unwrap();
        assert_eq!(w, back);
    }
}
