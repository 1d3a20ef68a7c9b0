//! Randomized verification harness.
//!
//! Each statement has a generator that builds a configuration meant to
//! satisfy its hypotheses, a hypothesis check and a conclusion check, all
//! evaluated with the defined relations. A trial draws up to
//! [`MAX_ATTEMPTS`] configurations from its own RNG stream; the first one
//! whose hypotheses hold is checked. Trials are independent, so they run in
//! parallel and the report order is the trial order.

mod appendix;
mod assignment;
pub(crate) mod gen;
mod lemmas;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::figures::{equal_quadrilaterals, equal_rectangles, first_circumscribed_rectangle, RectWH, Triangle};
use crate::plane::{between, foot_of_perpendicular, GeomResult, Segment};

pub use assignment::Assignment;
use gen::Sampler;

/// Configurations drawn per trial before giving up on its hypotheses.
pub const MAX_ATTEMPTS: usize = 20;

macro_rules! statements {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum StatementId {
            $($variant),*
        }

        impl StatementId {
            pub const ALL: &'static [StatementId] = &[$(StatementId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(StatementId::$variant => $name),*
                }
            }
        }
    };
}

statements! {
    CongruentEqual => "congruentequal",
    EtPermutation => "ETpermutation",
    EtSymmetric => "ETsymmetric",
    EtTransitive => "ETtransitive",
    EfPermutation => "EFpermutation",
    EfSymmetric => "EFsymmetric",
    EfTransitive => "EFtransitive",
    HalvesOfEquals => "halvesofequals",
    Cutoff1 => "cutoff1",
    Cutoff2 => "cutoff2",
    Paste1 => "paste1",
    Paste2 => "paste2",
    Paste3 => "paste3",
    Paste4 => "paste4",
    DeZolt1 => "deZolt1",
    DeZolt2 => "deZolt2",
    ErProportion => "ERproportion",
    ErEquivalence => "ERequivalence",
    Er1 => "ER1",
    Er2 => "ER2",
    Er3 => "ER3",
    Er4 => "ER4",
    Er5 => "ER5",
    EtForward => "ETforward",
    I35 => "I.35",
    I37 => "I.37",
    I42Doubles => "I.42-doubles",
    I43 => "I.43",
    AddEquals => "addequals",
    Paste5Helper => "paste5helper",
    HalvesOfRectangles => "halvesofrectangles",
    EqualRectanglesEqualFigures => "equalrectanglesequalfigures",
    AreaCompleteness => "area_completeness",
    AreaAdditivity => "area_additivity",
    Interchange => "interchange",
    Fundamental => "fundamental",
    PascalKupffer => "pascal_kupffer",
    CyclicQuad => "cyclic_quad",
    ParallelPasch => "parallelpasch",
    OrthocenterConcurrence => "orthocenter_concurrence",
    ProportionFlip => "proportion_flip",
    ProportionTransitive => "proportion_transitive",
    FourthProportionalUnique => "fourth_proportional_unique",
    ProportionalLegs => "proportional_legs",
    HypotenuseLeg => "hypotenuse_leg",
}

/// Names of the axioms of the equal-figures theory, in listing order.
pub const APPENDIX_AXIOMS: [&str; 16] = [
    "congruentequal",
    "ETpermutation",
    "ETsymmetric",
    "ETtransitive",
    "EFpermutation",
    "EFsymmetric",
    "EFtransitive",
    "halvesofequals",
    "cutoff1",
    "cutoff2",
    "paste1",
    "paste2",
    "paste3",
    "paste4",
    "deZolt1",
    "deZolt2",
];

impl StatementId {
    pub fn from_name(name: &str) -> Option<StatementId> {
        match name {
            "I.45" => Some(StatementId::AddEquals),
            "doublesofequals" => Some(StatementId::I42Doubles),
            _ => StatementId::ALL.iter().copied().find(|s| s.name() == name),
        }
    }

    pub fn axioms() -> Vec<StatementId> {
        APPENDIX_AXIOMS.iter().map(|n| StatementId::from_name(n).expect("listed axiom")).collect()
    }

    pub fn is_axiom(self) -> bool {
        APPENDIX_AXIOMS.contains(&self.name())
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatementId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        StatementId::from_name(s).ok_or_else(|| format!("unknown statement {s}"))
    }
}

impl Serialize for StatementId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for StatementId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "hypothesis_unconstructible")]
    HypothesisUnconstructible,
    #[serde(rename = "VIOLATED")]
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::HypothesisUnconstructible => "hypothesis_unconstructible",
            Verdict::Violated => "VIOLATED",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialReport {
    pub statement: StatementId,
    pub seed: u64,
    pub trial: u64,
    pub verdict: Verdict,
    pub witness: Option<Assignment>,
}

impl TrialReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "statement": self.statement,
            "seed": self.seed,
            "trial": self.trial,
            "verdict": self.verdict,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.to_json();
        }
        v
    }

    pub fn to_json_line(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json_line(line: &str) -> Result<Self, String> {
        let v: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let field = |k: &str| v.get(k).cloned().ok_or_else(|| format!("missing field {k}"));
        let de = |e: serde_json::Error| e.to_string();
        Ok(TrialReport {
            statement: serde_json::from_value(field("statement")?).map_err(de)?,
            seed: serde_json::from_value(field("seed")?).map_err(de)?,
            trial: serde_json::from_value(field("trial")?).map_err(de)?,
            verdict: serde_json::from_value(field("verdict")?).map_err(de)?,
            witness: v.get("witness").map(Assignment::from_json).transpose()?,
        })
    }
}

/// The equal-triangles relation the harness checks against.
///
/// Swapping in a different relation is how the harness is shown to catch a
/// broken build.
#[derive(Clone, Copy)]
pub struct Model {
    pub name: &'static str,
    pub equal_triangles: fn(&Triangle, &Triangle) -> GeomResult<bool>,
}

impl Model {
    pub fn standard() -> Model {
        Model {
            name: "standard",
            equal_triangles: crate::figures::equal_triangles,
        }
    }

    /// Deliberately wrong: side `BC` paired with the height over `AB`.
    pub fn mismatched_base() -> Model {
        Model {
            name: "mismatched_base",
            equal_triangles: mismatched_equal_triangles,
        }
    }
}

impl fmt::Debug for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Model").field("name", &self.name).finish()
    }
}

fn mismatched_rectangle(t: &Triangle) -> GeomResult<RectWH> {
    first_circumscribed_rectangle(t)?;
    let foot = foot_of_perpendicular(&t.c, &t.a, &t.b)?;
    RectWH::new(
        Segment::new(t.b.clone(), t.c.clone()).length(),
        Segment::new(t.c.clone(), foot).length(),
    )
}

fn mismatched_equal_triangles(t1: &Triangle, t2: &Triangle) -> GeomResult<bool> {
    Ok(equal_rectangles(&mismatched_rectangle(t1)?, &mismatched_rectangle(t2)?))
}

pub(crate) fn all(checks: impl IntoIterator<Item = GeomResult<bool>>) -> GeomResult<bool> {
    for c in checks {
        if !c? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn be(a: &Assignment, x: &str, y: &str, z: &str) -> GeomResult<bool> {
    Ok(between(&a.p(x)?, &a.p(y)?, &a.p(z)?))
}

pub(crate) fn et(m: &Model, a: &Assignment, t1: [&str; 3], t2: [&str; 3]) -> GeomResult<bool> {
    (m.equal_triangles)(&a.tri(t1[0], t1[1], t1[2])?, &a.tri(t2[0], t2[1], t2[2])?)
}

pub(crate) fn ef(a: &Assignment, q1: [&str; 4], q2: [&str; 4]) -> GeomResult<bool> {
    equal_quadrilaterals(&a.quad(q1[0], q1[1], q1[2], q1[3])?, &a.quad(q2[0], q2[1], q2[2], q2[3])?)
}

type Generator = fn(&mut Sampler, u64) -> Option<Assignment>;
type Check = fn(&Model, &Assignment) -> GeomResult<bool>;

struct Statement {
    generate: Generator,
    hypotheses: Check,
    conclusion: Check,
}

fn statement(id: StatementId) -> Statement {
    use appendix as ax;
    use lemmas as lm;
    use StatementId::*;
    let (generate, hypotheses, conclusion): (Generator, Check, Check) = match id {
        CongruentEqual => (ax::gen_congruent, ax::hyp_congruent, ax::concl_congruent),
        EtPermutation => (ax::gen_equal_triangles, ax::hyp_et_pair, ax::concl_et_permutation),
        EtSymmetric => (ax::gen_equal_triangles, ax::hyp_et_pair, ax::concl_et_symmetric),
        EtTransitive => (ax::gen_equal_triangles, ax::hyp_et_chain, ax::concl_et_transitive),
        EfPermutation => (ax::gen_equal_quads, ax::hyp_ef_pair, ax::concl_ef_permutation),
        EfSymmetric => (ax::gen_equal_quads, ax::hyp_ef_pair, ax::concl_ef_symmetric),
        EfTransitive => (ax::gen_equal_quads, ax::hyp_ef_chain, ax::concl_ef_transitive),
        HalvesOfEquals => (ax::gen_halves_of_equals, ax::hyp_halves_of_equals, ax::concl_halves_of_equals),
        Cutoff1 => (ax::gen_cut_triangle, ax::hyp_cutoff1, ax::concl_cutoff1),
        Cutoff2 => (ax::gen_cut_quad, ax::hyp_cutoff2, ax::concl_cutoff2),
        Paste1 => (ax::gen_cut_triangle, ax::hyp_paste1, ax::concl_paste1),
        Paste2 => (ax::gen_cut_quad, ax::hyp_paste2, ax::concl_paste2),
        Paste3 => (ax::gen_paste3, ax::hyp_paste3, ax::concl_paste3),
        Paste4 => (ax::gen_paste4, ax::hyp_paste4, ax::concl_paste4),
        DeZolt1 => (ax::gen_dezolt1, ax::hyp_dezolt1, ax::concl_dezolt1),
        DeZolt2 => (ax::gen_dezolt2, ax::hyp_dezolt2, ax::concl_dezolt2),
        ErProportion => (lm::gen_er_proportion, lm::hyp_er_proportion, lm::concl_er_proportion),
        ErEquivalence => (lm::gen_er_triple, lm::hyp_er_equivalence, lm::concl_er_equivalence),
        Er1 => (lm::gen_er_proportion, lm::hyp_any_rect, lm::concl_er1),
        Er2 => (lm::gen_er2, lm::hyp_er2, lm::concl_er2),
        Er3 => (lm::gen_er3, lm::hyp_er3, lm::concl_er3),
        Er4 => (lm::gen_er_pieces, lm::hyp_er_pieces, lm::concl_er4),
        Er5 => (lm::gen_er_pieces, lm::hyp_er_pieces, lm::concl_er5),
        EtForward => (lm::gen_triangle, lm::hyp_triangle, lm::concl_et_forward),
        I35 => (lm::gen_i35, lm::hyp_i35, lm::concl_i35),
        I37 => (lm::gen_i37, lm::hyp_i37, lm::concl_i37),
        I42Doubles => (lm::gen_doubles, lm::hyp_doubles, lm::concl_doubles),
        I43 => (lm::gen_i43, lm::hyp_i43, lm::concl_i43),
        AddEquals => (lm::gen_addequals, lm::hyp_addequals, lm::concl_addequals),
        Paste5Helper => (lm::gen_paste5helper, lm::hyp_figure_x, lm::concl_paste5helper),
        HalvesOfRectangles => (
            lm::gen_equal_rect_figures,
            lm::hyp_equal_rect_figures,
            lm::concl_halves_of_rectangles,
        ),
        EqualRectanglesEqualFigures => (
            lm::gen_equal_rect_figures,
            lm::hyp_equal_rect_figures,
            lm::concl_equal_rect_figures,
        ),
        AreaCompleteness => (lm::gen_completeness, lm::hyp_completeness, lm::concl_completeness),
        AreaAdditivity => (lm::gen_additivity, lm::hyp_additivity, lm::concl_additivity),
        Interchange => (lm::gen_interchange, lm::hyp_interchange, lm::concl_interchange),
        Fundamental => (lm::gen_fundamental, lm::hyp_fundamental, lm::concl_fundamental),
        PascalKupffer => (lm::gen_pascal_kupffer, lm::hyp_pascal_kupffer, lm::concl_pascal_kupffer),
        CyclicQuad => (lm::gen_cyclic_quad, lm::hyp_cyclic_quad, lm::concl_cyclic_quad),
        ParallelPasch => (lm::gen_parallelpasch, lm::hyp_parallelpasch, lm::concl_parallelpasch),
        OrthocenterConcurrence => (lm::gen_triangle, lm::hyp_triangle, lm::concl_orthocenter),
        ProportionFlip => (lm::gen_proportion_flip, lm::hyp_always, lm::concl_proportion_flip),
        ProportionTransitive => (
            lm::gen_proportion_transitive,
            lm::hyp_proportion_transitive,
            lm::concl_proportion_transitive,
        ),
        FourthProportionalUnique => (lm::gen_fourth_unique, lm::hyp_always, lm::concl_fourth_unique),
        ProportionalLegs => (lm::gen_similar_right, lm::hyp_proportional_legs, lm::concl_proportional_legs),
        HypotenuseLeg => (lm::gen_similar_right, lm::hyp_hypotenuse_leg, lm::concl_hypotenuse_leg),
    };
    Statement {
        generate,
        hypotheses,
        conclusion,
    }
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0100_0000_01b3;

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(FNV_OFFSET, |h, b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The RNG for one trial; depends only on the seed, the statement and the index.
pub fn trial_rng(id: StatementId, seed: u64, trial: u64) -> ChaCha8Rng {
    let mixed = splitmix(splitmix(seed ^ fnv1a(id.name())) ^ trial);
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Generated configuration for one trial, if one satisfying the hypotheses
/// turned up within [`MAX_ATTEMPTS`] draws.
pub fn generate_case(id: StatementId, seed: u64, trial: u64, model: &Model) -> Option<Assignment> {
    let st = statement(id);
    let mut sampler = Sampler::new(trial_rng(id, seed, trial));
    for _ in 0..MAX_ATTEMPTS {
        if let Some(a) = (st.generate)(&mut sampler, trial) {
            if let Ok(true) = (st.hypotheses)(model, &a) {
                return Some(a);
            }
        }
    }
    None
}

/// Verdict of a statement on a given assignment: hypotheses must hold, and
/// then the conclusion must hold too. An error in the conclusion counts as a
/// violation since the hypotheses were supposed to rule it out.
pub fn check_assignment(id: StatementId, model: &Model, a: &Assignment) -> Verdict {
    let st = statement(id);
    match (st.hypotheses)(model, a) {
        Ok(true) => {}
        _ => return Verdict::HypothesisUnconstructible,
    }
    match (st.conclusion)(model, a) {
        Ok(true) => Verdict::Holds,
        _ => Verdict::Violated,
    }
}

pub fn run_trial(id: StatementId, seed: u64, trial: u64, model: &Model) -> TrialReport {
    let (verdict, witness) = match generate_case(id, seed, trial, model) {
        None => (Verdict::HypothesisUnconstructible, None),
        Some(a) => match check_assignment(id, model, &a) {
            Verdict::Violated => (Verdict::Violated, Some(a)),
            v => (v, None),
        },
    };
    TrialReport {
        statement: id,
        seed,
        trial,
        verdict,
        witness,
    }
}

/// Reports for trials `0..trials`, in trial order.
pub fn verify(id: StatementId, trials: u64, seed: u64, model: &Model) -> Vec<TrialReport> {
    (0..trials)
        .into_par_iter()
        .map(|t| run_trial(id, seed, t, model))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub holds: u64,
    pub hypothesis_unconstructible: u64,
    #[serde(rename = "VIOLATED")]
    pub violated: u64,
}

impl Counts {
    pub fn of(reports: &[TrialReport]) -> Counts {
        let mut c = Counts::default();
        for r in reports {
            match r.verdict {
                Verdict::Holds => c.holds += 1,
                Verdict::HypothesisUnconstructible => c.hypothesis_unconstructible += 1,
                Verdict::Violated => c.violated += 1,
            }
        }
        c
    }
}

#[derive(Clone, Debug)]
pub struct StatementRun {
    pub statement: StatementId,
    pub counts: Counts,
    pub reports: Vec<TrialReport>,
}

impl StatementRun {
    pub fn first_violation(&self) -> Option<&TrialReport> {
        self.reports.iter().find(|r| r.verdict == Verdict::Violated)
    }
}

pub fn verify_many(ids: &[StatementId], trials: u64, seed: u64, model: &Model) -> Vec<StatementRun> {
    ids.iter()
        .map(|&id| {
            let reports = verify(id, trials, seed, model);
            StatementRun {
                statement: id,
                counts: Counts::of(&reports),
                reports,
            }
        })
        .collect()
}

pub fn verify_all(trials: u64, seed: u64, model: &Model) -> Vec<StatementRun> {
    verify_many(StatementId::ALL, trials, seed, model)
}
