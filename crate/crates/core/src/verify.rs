//! Exhaustive desk-scale verification of the gallery model against the
//! oracle, reported check by check.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::chimney::Chimney;
use crate::cosets::{
    count_vertex, is_two_sided_reduced, min_coset_rep, min_right_coset_rep, parahoric_histogram,
    ParahoricFace,
};
use crate::coxeter::{AffineElement, CorootVector, CoxeterSystem};
use crate::gallery::{
    end_histogram_with, enumerate_folded_with, shadow_alcove, shadow_vertex, FoldRule, GalleryType,
    Shadow,
};
use crate::geometry::fundamental_coweights;
use crate::oracle::{
    abstract_galleries, enumerate_labeled, fold_abstract, oracle_histogram, polytope_points,
    unfold, GateLabelRule, LabelAlphabets,
};
use crate::polynomial::CountPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub types: Vec<String>,
    /// Longest gallery type in the sweeps.
    pub max_length: usize,
    /// Longest `y` twisting the chimneys.
    pub y_max_length: usize,
    pub q_values: Vec<u32>,
    /// Seed for the alternative gate-label rule.
    pub seed: u64,
    pub fold_rule: FoldRule,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            types: vec!["A1".into(), "A2".into(), "C2".into()],
            max_length: 5,
            y_max_length: 2,
            q_values: vec![2, 3],
            seed: 0x5eed,
            fold_rule: FoldRule::Positive,
        }
    }
}

impl VerifyConfig {
    /// A quick pass over one type.
    pub fn smoke(label: &str) -> Self {
        Self {
            types: vec![label.into()],
            max_length: 4,
            y_max_length: 1,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_text(&self, color: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match (c.status, color) {
                (CheckStatus::Pass, true) => "\x1b[32mPASS\x1b[0m",
                (CheckStatus::Fail, true) => "\x1b[31mFAIL\x1b[0m",
                (CheckStatus::Pass, false) => "PASS",
                (CheckStatus::Fail, false) => "FAIL",
            };
            let _ = write!(out, "{tag}  {}", c.name);
            if let Some(ce) = &c.counterexample {
                let _ = write!(out, "\n      counterexample: {ce}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// First counterexample found, if any.
type Outcome = Result<(), String>;

fn record(checks: &mut Vec<CheckResult>, name: String, outcome: Outcome) {
    let (status, counterexample) = match outcome {
        Ok(()) => (CheckStatus::Pass, None),
        Err(ce) => (CheckStatus::Fail, Some(ce)),
    };
    checks.push(CheckResult {
        name,
        status,
        counterexample,
    });
}

pub fn verify_suite(config: &VerifyConfig) -> Report {
    let mut checks = Vec::new();
    for label in &config.types {
        match CoxeterSystem::from_label(label) {
            Ok(sys) => TypeSweep::new(&sys, config).run(&mut checks),
            Err(e) => record(
                &mut checks,
                format!("{label}: build system"),
                Err(e.to_string()),
            ),
        }
    }
    Report { checks }
}

pub fn index_subsets(rank: usize) -> Vec<Vec<usize>> {
    (0..1u32 << rank)
        .map(|m| (1..=rank).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect()
}

struct TypeSweep<'a> {
    sys: &'a CoxeterSystem,
    cfg: &'a VerifyConfig,
    name: String,
    chimneys: Vec<Chimney>,
    xs: Vec<AffineElement>,
}

impl<'a> TypeSweep<'a> {
    fn new(sys: &'a CoxeterSystem, cfg: &'a VerifyConfig) -> Self {
        let mut chimneys = Vec::new();
        for j in index_subsets(sys.rank()) {
            for y in sys.ball(cfg.y_max_length) {
                chimneys.push(Chimney::new(sys, &j, y).expect("valid subset"));
            }
        }
        Self {
            sys,
            cfg,
            name: sys.affine_type().to_string(),
            chimneys,
            xs: sys.ball(cfg.max_length),
        }
    }

    fn describe(&self, ch: &Chimney, x: &AffineElement) -> String {
        format!(
            "J={:?} y={} x={}",
            ch.j(),
            self.sys.format_element(ch.y()),
            self.sys.format_element(x)
        )
    }

    fn counts(&self, ch: &Chimney, x: &AffineElement) -> BTreeMap<AffineElement, CountPolynomial> {
        end_histogram_with(
            self.sys,
            ch,
            &GalleryType::of_element(self.sys, x),
            self.cfg.fold_rule,
        )
    }

    fn alphabets(&self, q: u32, rule: GateLabelRule) -> LabelAlphabets {
        LabelAlphabets::uniform(self.sys, q, rule).expect("q >= 2 is validated by the caller")
    }

    fn run(&self, checks: &mut Vec<CheckResult>) {
        let n = &self.name;
        record(
            checks,
            format!("{n}: wall-count length = greedy word length = BFS distance"),
            self.lengths(),
        );
        if let Some(&bad) = self.cfg.q_values.iter().find(|&&q| q < 2) {
            record(
                checks,
                format!("{n}: alphabet sizes"),
                Err(format!("q = {bad} < 2")),
            );
            return;
        }
        record(
            checks,
            format!("{n}: oracle histogram = count polynomial at q"),
            self.histograms(),
        );
        record(checks, format!("{n}: sum rule"), self.sum_rule());
        record(
            checks,
            format!("{n}: step signs and replay"),
            self.sign_soundness(),
        );
        record(
            checks,
            format!("{n}: singleton shadow for the base alcove chimney"),
            self.singleton(),
        );
        record(
            checks,
            format!("{n}: alcove shadow = nonzero counts = oracle ends"),
            self.alcove_nonempty(),
        );
        record(
            checks,
            format!("{n}: fold and unfold are inverse"),
            self.fold_unfold(),
        );
        record(
            checks,
            format!("{n}: histograms independent of gate labels"),
            self.reseeding(),
        );
        record(
            checks,
            format!("{n}: vertex shadow = Weyl polytope points"),
            self.polytope(),
        );
        record(
            checks,
            format!("{n}: vertex counts nonzero iff in vertex shadow"),
            self.vertex_nonempty(),
        );
        record(
            checks,
            format!("{n}: parahoric counts nonzero iff in face shadow"),
            self.parahoric_nonempty(),
        );
    }

    fn lengths(&self) -> Outcome {
        let sys = self.sys;
        let mut dist: HashMap<AffineElement, usize> = HashMap::from([(sys.identity(), 0)]);
        let mut layer = vec![sys.identity()];
        for d in 1..=self.cfg.max_length + 1 {
            let mut next = Vec::new();
            for x in &layer {
                for i in 0..=sys.rank() {
                    let y = sys.mul_generator(x, i);
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), d);
                        next.push(y);
                    }
                }
            }
            layer = next;
        }
        for (x, &d) in &dist {
            let word = sys.reduced_word(x);
            let len = sys.length(x);
            if len != d || word.len() != d || sys.from_word(&word).ok().as_ref() != Some(x) {
                return Err(format!("{x:?}: walls {len}, word {word:?}, distance {d}"));
            }
        }
        Ok(())
    }

    fn histograms(&self) -> Outcome {
        for ch in &self.chimneys {
            for x in &self.xs {
                let counts = self.counts(ch, x);
                let ty = GalleryType::of_element(self.sys, x);
                for &q in &self.cfg.q_values {
                    let oracle = oracle_histogram(
                        self.sys,
                        ch,
                        &ty,
                        &self.alphabets(q, GateLabelRule::Zero),
                    );
                    let evaluated: BTreeMap<AffineElement, u64> = counts
                        .iter()
                        .map(|(z, p)| (z.clone(), p.evaluate_uniform(i64::from(q))))
                        .filter(|(_, v)| *v != 0)
                        .map(|(z, v)| (z, v as u64))
                        .collect();
                    if evaluated != oracle {
                        return Err(format!("{} q={q}", self.describe(ch, x)));
                    }
                }
            }
        }
        Ok(())
    }

    fn sum_rule(&self) -> Outcome {
        let nvars = self.sys.rank() + 1;
        for ch in &self.chimneys {
            for x in &self.xs {
                let total = self
                    .counts(ch, x)
                    .into_values()
                    .fold(CountPolynomial::zero(nvars), |a, b| a + b);
                let expected = CountPolynomial::product_of_q(nvars, &self.sys.reduced_word(x));
                if total != expected {
                    return Err(format!(
                        "{}: total {total}, expected {expected}",
                        self.describe(ch, x)
                    ));
                }
            }
        }
        Ok(())
    }

    fn sign_soundness(&self) -> Outcome {
        for ch in &self.chimneys {
            for x in &self.xs {
                let ty = GalleryType::of_element(self.sys, x);
                let leaves = enumerate_folded_with(self.sys, ch, &ty, self.cfg.fold_rule);
                let ends: BTreeSet<AffineElement> = self.counts(ch, x).into_keys().collect();
                for (g, _) in &leaves {
                    if !g.is_positively_folded() || g.reclassify(self.sys, ch) != g.steps {
                        return Err(format!("{}: steps {:?}", self.describe(ch, x), g.steps));
                    }
                    if !ends.contains(&g.end(self.sys)) {
                        return Err(format!(
                            "{}: end of {:?} missing from counts",
                            self.describe(ch, x),
                            g.steps
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn singleton(&self) -> Outcome {
        let ch = Chimney::base_alcove(self.sys);
        for x in self.sys.ball(self.cfg.max_length + 1) {
            let ends: Vec<AffineElement> = self.counts(&ch, &x).into_keys().collect();
            if ends != [x.clone()] {
                return Err(format!(
                    "x={}: {} end alcoves",
                    self.sys.format_element(&x),
                    ends.len()
                ));
            }
        }
        Ok(())
    }

    fn alcove_nonempty(&self) -> Outcome {
        let alph = self.alphabets(2, GateLabelRule::Zero);
        for ch in &self.chimneys {
            for x in &self.xs {
                let nonzero: BTreeSet<AffineElement> = self.counts(ch, x).into_keys().collect();
                let Shadow::Alcoves(shadow) = shadow_alcove(self.sys, ch, x) else {
                    return Err("alcove shadow of wrong kind".into());
                };
                let ty = GalleryType::of_element(self.sys, x);
                let oracle: BTreeSet<AffineElement> = oracle_histogram(self.sys, ch, &ty, &alph)
                    .into_keys()
                    .collect();
                if shadow != nonzero || shadow != oracle {
                    return Err(self.describe(ch, x));
                }
            }
        }
        Ok(())
    }

    fn fold_unfold(&self) -> Outcome {
        let sys = self.sys;
        let xs = sys.ball(self.cfg.max_length.min(4));
        for ch in self.chimneys.iter().filter(|c| sys.length(c.y()) <= 1) {
            for x in &xs {
                let ty = GalleryType::of_element(sys, x);
                for &q in &self.cfg.q_values {
                    for rule in [GateLabelRule::Zero, GateLabelRule::Seeded(self.cfg.seed)] {
                        let alph = self.alphabets(q, rule);
                        let abs = abstract_galleries(&ty, &alph);
                        let labeled = enumerate_labeled(sys, ch, &ty, &alph);
                        if abs.len() != labeled.len() {
                            return Err(format!(
                                "{} q={q}: {} abstract vs {} labeled",
                                self.describe(ch, x),
                                abs.len(),
                                labeled.len()
                            ));
                        }
                        for g in &abs {
                            let back = unfold(sys, ch, &fold_abstract(sys, ch, g, &alph), &alph);
                            if back.as_ref() != Ok(g) {
                                return Err(format!(
                                    "{} q={q} choices {:?}",
                                    self.describe(ch, x),
                                    g.choices
                                ));
                            }
                        }
                        for lg in &labeled {
                            let again = unfold(sys, ch, lg, &alph)
                                .map(|g| fold_abstract(sys, ch, &g, &alph));
                            if again.as_ref() != Ok(lg) {
                                return Err(format!(
                                    "{} q={q} labels {:?}",
                                    self.describe(ch, x),
                                    lg.labels
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn reseeding(&self) -> Outcome {
        for ch in &self.chimneys {
            for x in &self.xs {
                let ty = GalleryType::of_element(self.sys, x);
                for &q in &self.cfg.q_values {
                    let a = self.alphabets(q, GateLabelRule::Zero);
                    let b = a.with_rule(GateLabelRule::Seeded(self.cfg.seed));
                    if oracle_histogram(self.sys, ch, &ty, &a)
                        != oracle_histogram(self.sys, ch, &ty, &b)
                    {
                        return Err(format!("{} q={q}", self.describe(ch, x)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dominant coweights with small coordinates, plus fundamental coweights
    /// lying in the coroot lattice.
    fn small_dominant(&self, bound: i64) -> Vec<CorootVector> {
        let n = self.sys.rank();
        let mut out = BTreeSet::new();
        let mut point = vec![0i64; n];
        loop {
            let v = CorootVector(point.clone());
            if self.sys.is_dominant(&v) {
                out.insert(v);
            }
            let mut k = 0;
            loop {
                if k == n {
                    out.extend(
                        fundamental_coweights(self.sys)
                            .iter()
                            .filter_map(|w| w.as_coroot()),
                    );
                    return out.into_iter().collect();
                }
                if point[k] < bound {
                    point[k] += 1;
                    break;
                }
                point[k] = 0;
                k += 1;
            }
        }
    }

    fn polytope(&self) -> Outcome {
        let ch = Chimney::antidominant(self.sys);
        let bound = if self.sys.rank() <= 2 { 2 } else { 1 };
        for lambda in self.small_dominant(bound) {
            let shadow = shadow_vertex(self.sys, &ch, &lambda).map_err(|e| e.to_string())?;
            let points = polytope_points(self.sys, &lambda).map_err(|e| e.to_string())?;
            if shadow != Shadow::Vertices(points) {
                return Err(format!("lambda={lambda}"));
            }
        }
        Ok(())
    }

    fn vertex_nonempty(&self) -> Outcome {
        let sys = self.sys;
        for lambda in self.small_dominant(1) {
            let hull = polytope_points(sys, &lambda).map_err(|e| e.to_string())?;
            let mut candidates = hull.clone();
            for v in &hull {
                for i in 0..sys.rank() {
                    for d in [-1, 1] {
                        let mut w = v.clone();
                        w.0[i] += d;
                        candidates.insert(w);
                    }
                }
            }
            for ch in self.chimneys.iter().filter(|c| c.y() == &sys.identity()) {
                let Shadow::Vertices(shadow) =
                    shadow_vertex(sys, ch, &lambda).map_err(|e| e.to_string())?
                else {
                    return Err("vertex shadow of wrong kind".into());
                };
                for mu in &candidates {
                    let nonzero = !count_vertex(sys, ch, &lambda, mu)
                        .map_err(|e| e.to_string())?
                        .is_zero();
                    if nonzero != shadow.contains(mu) {
                        return Err(format!("J={:?} lambda={lambda} mu={mu}", ch.j()));
                    }
                }
            }
        }
        Ok(())
    }

    fn parahoric_nonempty(&self) -> Outcome {
        let sys = self.sys;
        let faces = [ParahoricFace::alcove(), ParahoricFace::origin(sys)];
        let xs = sys.ball(self.cfg.max_length.min(4));
        let alph = self.alphabets(2, GateLabelRule::Zero);
        for ch in self.chimneys.iter().filter(|c| sys.length(c.y()) <= 1) {
            for sigma in &faces {
                for tau in &faces {
                    let tau_group = tau.group(sys).map_err(|e| e.to_string())?;
                    let sigma_group = sigma.group(sys).map_err(|e| e.to_string())?;
                    for x in xs
                        .iter()
                        .filter(|x| is_two_sided_reduced(sys, x, sigma, tau))
                    {
                        let counts = parahoric_histogram(sys, ch, sigma, tau, x)
                            .map_err(|e| e.to_string())?;
                        let mut oracle_faces = BTreeSet::new();
                        for w in &sigma_group {
                            let wx = sys.mul(&sys.spherical(w.clone()), x);
                            let ty = GalleryType::of_element(sys, &wx);
                            for end in oracle_histogram(sys, ch, &ty, &alph).into_keys() {
                                oracle_faces.insert(min_right_coset_rep(sys, &end, tau.types()));
                            }
                        }
                        let mut reps: BTreeSet<AffineElement> = counts
                            .keys()
                            .map(|z| min_right_coset_rep(sys, z, tau.types()))
                            .collect();
                        reps.extend(oracle_faces.iter().cloned());
                        for rep in reps {
                            let mut coset_total = CountPolynomial::zero(sys.rank() + 1);
                            for u in &tau_group {
                                let z = sys.mul(&rep, &sys.spherical(u.clone()));
                                if let Some(p) = counts.get(&z) {
                                    coset_total += p;
                                }
                            }
                            if coset_total.is_zero() == oracle_faces.contains(&rep) {
                                return Err(format!(
                                    "{} sigma={:?} tau={:?} z={}",
                                    self.describe(ch, x),
                                    sigma.types(),
                                    tau.types(),
                                    sys.format_element(&rep)
                                ));
                            }
                        }
                    }
                }
            }
        }
        // x_λ is reduced on the right by W₀ for every dominant λ.
        let v0 = ParahoricFace::origin(sys);
        for lambda in self.small_dominant(1) {
            if !is_two_sided_reduced(sys, &min_coset_rep(sys, &lambda), &faces[0], &v0) {
                return Err(format!("x_lambda not reduced for lambda={lambda}"));
            }
        }
        Ok(())
    }
}
