//! Brute-force model of a thick panel-regular building along minimal
//! galleries from `𝕗`, retracted one panel at a time through chimney gates.
//!
//! An abstract minimal gallery is a choice sequence: at its `j`-th panel the
//! next alcove is one of `q_{i_j}` alcoves other than the current one, named by
//! a label in `0..q_{i_j}`. One of those labels marks the chimney gate of that
//! panel. Which label it is depends on the labeling bijections, which are
//! arbitrary; [`GateLabelRule::Seeded`] picks them pseudo-randomly per panel.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chimney::{Chimney, Orientation};
use crate::coxeter::{AffineElement, CorootVector, CoxeterSystem};
use crate::error::{Error, Result};
use crate::gallery::{classify_step, FoldedGallery, GalleryType, StepKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateLabelRule {
    /// The gate always carries label 0.
    Zero,
    /// The gate label at a panel is drawn from a generator seeded by this
    /// value, the step index and the choices leading to the panel.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelAlphabets {
    q: Vec<u32>,
    rule: GateLabelRule,
}

impl LabelAlphabets {
    /// `q_i` for `i = 0..=n`, each at least 2.
    pub fn new(q: Vec<u32>, rule: GateLabelRule) -> Result<Self> {
        if let Some(&bad) = q.iter().find(|&&v| v < 2) {
            return Err(Error::Parse {
                what: "alphabet sizes",
                input: format!("{q:?}"),
                reason: format!("{bad} < 2; every panel needs at least three alcoves"),
            });
        }
        Ok(Self { q, rule })
    }

    pub fn uniform(sys: &CoxeterSystem, q: u32, rule: GateLabelRule) -> Result<Self> {
        Self::new(vec![q; sys.rank() + 1], rule)
    }

    pub fn size(&self, i: usize) -> u32 {
        self.q[i]
    }

    pub fn sizes(&self) -> &[u32] {
        &self.q
    }

    pub fn rule(&self) -> GateLabelRule {
        self.rule
    }

    pub fn with_rule(&self, rule: GateLabelRule) -> Self {
        Self {
            q: self.q.clone(),
            rule,
        }
    }

    /// Label of the chimney gate at the `j`-th panel, reached via `prefix`.
    pub fn gate_label(&self, j: usize, prefix: &[u32], i: usize) -> u32 {
        match self.rule {
            GateLabelRule::Zero => 0,
            GateLabelRule::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ j as u64);
                for &e in prefix {
                    rng = ChaCha8Rng::seed_from_u64(rng.next_u64() ^ u64::from(e));
                }
                rng.gen_range(0..self.q[i])
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractMinimalGallery {
    pub ty: GalleryType,
    pub choices: Vec<u32>,
}

/// `labels[j]` is `Some` on positive crossings and positive folds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledFoldedGallery {
    pub gallery: FoldedGallery,
    pub labels: Vec<Option<u32>>,
}

/// All `∏ q_{i_j}` choice sequences, in lexicographic order.
pub fn abstract_galleries(ty: &GalleryType, alph: &LabelAlphabets) -> Vec<AbstractMinimalGallery> {
    let mut out = vec![Vec::new()];
    for &i in ty.word() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..alph.size(i as usize)).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|choices| AbstractMinimalGallery {
            ty: ty.clone(),
            choices,
        })
        .collect()
}

/// Retract an abstract gallery into the standard apartment.
pub fn fold_abstract(
    sys: &CoxeterSystem,
    ch: &Chimney,
    g: &AbstractMinimalGallery,
    alph: &LabelAlphabets,
) -> LabeledFoldedGallery {
    let mut c = g.ty.start().clone();
    let mut steps = Vec::with_capacity(g.choices.len());
    let mut labels = Vec::with_capacity(g.choices.len());
    for (j, (&i, &e)) in g.ty.word().iter().zip(&g.choices).enumerate() {
        let i = i as usize;
        if ch.orientation(sys, &c, i) == Orientation::Minus {
            steps.push(StepKind::PositiveCross);
            labels.push(Some(e));
            c = sys.mul_generator(&c, i);
        } else if e == alph.gate_label(j, &g.choices[..j], i) {
            steps.push(StepKind::NegativeCross);
            labels.push(None);
            c = sys.mul_generator(&c, i);
        } else {
            steps.push(StepKind::PositiveFold);
            labels.push(Some(e));
        }
    }
    LabeledFoldedGallery {
        gallery: FoldedGallery {
            ty: g.ty.clone(),
            steps,
        },
        labels,
    }
}

/// The unique abstract gallery folding to `lg`.
pub fn unfold(
    sys: &CoxeterSystem,
    ch: &Chimney,
    lg: &LabeledFoldedGallery,
    alph: &LabelAlphabets,
) -> Result<AbstractMinimalGallery> {
    let ty = &lg.gallery.ty;
    if lg.gallery.steps.len() != ty.len() || lg.labels.len() != ty.len() {
        return Err(Error::LabelConstraint {
            step: 0,
            reason: "step and label counts must match the gallery type".into(),
        });
    }
    let mut c = ty.start().clone();
    let mut choices = Vec::with_capacity(ty.len());
    for (j, &i) in ty.word().iter().enumerate() {
        let i = i as usize;
        let step = lg.gallery.steps[j];
        let expected = classify_step(sys, ch, &c, i, step.is_fold());
        if expected != step {
            return Err(Error::LabelConstraint {
                step: j,
                reason: format!("step recorded as {step} but the chimney makes it {expected}"),
            });
        }
        let gate = alph.gate_label(j, &choices, i);
        let e = match (step, lg.labels[j]) {
            (StepKind::NegativeCross, None) => gate,
            (StepKind::PositiveCross, Some(e)) if e < alph.size(i) => e,
            (StepKind::PositiveFold, Some(e)) if e < alph.size(i) && e != gate => e,
            (StepKind::NegativeFold, _) => {
                return Err(Error::LabelConstraint {
                    step: j,
                    reason: "negative fold".into(),
                })
            }
            (_, label) => {
                return Err(Error::LabelConstraint {
                    step: j,
                    reason: format!("label {label:?} not allowed on a {step} (gate label {gate})"),
                })
            }
        };
        choices.push(e);
        if step.is_cross() {
            c = sys.mul_generator(&c, i);
        }
    }
    Ok(AbstractMinimalGallery {
        ty: ty.clone(),
        choices,
    })
}

/// Every labeled positively folded gallery of type `ty`.
pub fn enumerate_labeled(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
    alph: &LabelAlphabets,
) -> Vec<LabeledFoldedGallery> {
    let mut out = Vec::new();
    let mut state = LabeledDfs {
        sys,
        ch,
        ty,
        alph,
        steps: Vec::new(),
        labels: Vec::new(),
        choices: Vec::new(),
    };
    state.run(ty.start().clone(), &mut out);
    out
}

struct LabeledDfs<'a> {
    sys: &'a CoxeterSystem,
    ch: &'a Chimney,
    ty: &'a GalleryType,
    alph: &'a LabelAlphabets,
    steps: Vec<StepKind>,
    labels: Vec<Option<u32>>,
    choices: Vec<u32>,
}

impl LabeledDfs<'_> {
    fn push(&mut self, step: StepKind, label: Option<u32>, choice: u32) {
        self.steps.push(step);
        self.labels.push(label);
        self.choices.push(choice);
    }

    fn pop(&mut self) {
        self.steps.pop();
        self.labels.pop();
        self.choices.pop();
    }

    fn run(&mut self, c: AffineElement, out: &mut Vec<LabeledFoldedGallery>) {
        let j = self.steps.len();
        if j == self.ty.len() {
            out.push(LabeledFoldedGallery {
                gallery: FoldedGallery {
                    ty: self.ty.clone(),
                    steps: self.steps.clone(),
                },
                labels: self.labels.clone(),
            });
            return;
        }
        let i = self.ty.word()[j] as usize;
        let crossed = self.sys.mul_generator(&c, i);
        if self.ch.orientation(self.sys, &c, i) == Orientation::Minus {
            for e in 0..self.alph.size(i) {
                self.push(StepKind::PositiveCross, Some(e), e);
                self.run(crossed.clone(), out);
                self.pop();
            }
        } else {
            let gate = self.alph.gate_label(j, &self.choices, i);
            self.push(StepKind::NegativeCross, None, gate);
            self.run(crossed, out);
            self.pop();
            for e in (0..self.alph.size(i)).filter(|&e| e != gate) {
                self.push(StepKind::PositiveFold, Some(e), e);
                self.run(c.clone(), out);
                self.pop();
            }
        }
    }
}

/// End alcove ↦ number of abstract galleries of type `ty` retracting there.
pub fn oracle_histogram(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
    alph: &LabelAlphabets,
) -> BTreeMap<AffineElement, u64> {
    let mut hist = BTreeMap::new();
    for g in abstract_galleries(ty, alph) {
        *hist
            .entry(fold_abstract(sys, ch, &g, alph).gallery.end(sys))
            .or_insert(0) += 1;
    }
    hist
}

/// `W₀`-orbit of a coroot vector, by closure under simple reflections.
pub fn coroot_orbit(sys: &CoxeterSystem, lambda: &CorootVector) -> BTreeSet<CorootVector> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for i in 1..=sys.rank() {
            let s = sys.simple_reflection(i).expect("index in range");
            let nu = sys.act_on_coroot(s, &mu);
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen
}

/// The dominant element of the `W₀`-orbit of `mu`.
pub fn dominant_representative(sys: &CoxeterSystem, mu: &CorootVector) -> CorootVector {
    let mut cur = mu.clone();
    while let Some(i) = (1..=sys.rank()).find(|&i| sys.pair(&cur, i - 1) < 0) {
        cur = sys.act_on_coroot(sys.simple_reflection(i).expect("index in range"), &cur);
    }
    cur
}

/// Coroot-lattice points of the convex hull of `W₀λ`.
///
/// `μ` lies in the hull iff `λ − μ⁺` is a nonnegative combination of simple
/// coroots, where `μ⁺` is the dominant representative of `μ`.
pub fn polytope_points(
    sys: &CoxeterSystem,
    lambda: &CorootVector,
) -> Result<BTreeSet<CorootVector>> {
    if !sys.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let orbit = coroot_orbit(sys, lambda);
    let n = sys.rank();
    let lo: Vec<i64> = (0..n)
        .map(|k| orbit.iter().map(|v| v.0[k]).min().unwrap_or(0))
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|k| orbit.iter().map(|v| v.0[k]).max().unwrap_or(0))
        .collect();
    let mut out = BTreeSet::new();
    let mut point = lo.clone();
    loop {
        let mu = CorootVector(point.clone());
        let plus = dominant_representative(sys, &mu);
        if lambda.0.iter().zip(&plus.0).all(|(a, b)| a >= b) {
            out.insert(mu);
        }
        // odometer step through the bounding box
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            if point[k] < hi[k] {
                point[k] += 1;
                break;
            }
            point[k] = lo[k];
            k += 1;
        }
    }
}
