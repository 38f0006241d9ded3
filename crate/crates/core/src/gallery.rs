//! Combinatorial galleries in the standard apartment, folding, weighted
//! enumeration of positively folded galleries, and shadows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::chimney::{Chimney, Orientation};
use crate::cosets::min_coset_rep;
use crate::coxeter::{AffineElement, CorootVector, CoxeterSystem};
use crate::error::{Error, Result};
use crate::polynomial::CountPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    PositiveCross,
    NegativeCross,
    PositiveFold,
    NegativeFold,
}

impl StepKind {
    pub fn is_cross(self) -> bool {
        matches!(self, StepKind::PositiveCross | StepKind::NegativeCross)
    }

    pub fn is_fold(self) -> bool {
        !self.is_cross()
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::PositiveCross => "+cross",
            StepKind::NegativeCross => "-cross",
            StepKind::PositiveFold => "+fold",
            StepKind::NegativeFold => "-fold",
        })
    }
}

/// Classify leaving (or staying in) `current` through its type-`i` panel.
pub fn classify_step(
    sys: &CoxeterSystem,
    ch: &Chimney,
    current: &AffineElement,
    i: usize,
    stay: bool,
) -> StepKind {
    match (ch.orientation(sys, current, i), stay) {
        (Orientation::Plus, true) => StepKind::PositiveFold,
        (Orientation::Minus, true) => StepKind::NegativeFold,
        (Orientation::Minus, false) => StepKind::PositiveCross,
        (Orientation::Plus, false) => StepKind::NegativeCross,
    }
}

/// Which folds the enumerator accepts.
///
/// `CorruptedSign` reads the orientation with the wrong sign when deciding
/// whether a fold is allowed. It exists only so the verifier can show that
/// it catches a broken enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FoldRule {
    #[default]
    Positive,
    CorruptedSign,
}

/// A reduced word together with the alcove the gallery starts in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GalleryType {
    word: Vec<u8>,
    start: AffineElement,
}

impl GalleryType {
    pub fn new(sys: &CoxeterSystem, word: Vec<u8>, start: AffineElement) -> Result<Self> {
        if !sys.is_reduced(&word)? {
            return Err(Error::NotReduced(word));
        }
        Ok(Self { word, start })
    }

    /// The type of the minimal gallery from `𝕗` to `x𝕗`.
    pub fn of_element(sys: &CoxeterSystem, x: &AffineElement) -> Self {
        Self {
            word: sys.reduced_word(x),
            start: sys.identity(),
        }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn start(&self) -> &AffineElement {
        &self.start
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// A gallery recorded as its cross/fold decisions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoldedGallery {
    pub ty: GalleryType,
    pub steps: Vec<StepKind>,
}

impl FoldedGallery {
    /// `c_0, c_1, …, c_l`.
    pub fn alcoves(&self, sys: &CoxeterSystem) -> Vec<AffineElement> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut c = self.ty.start.clone();
        out.push(c.clone());
        for (&i, step) in self.ty.word.iter().zip(&self.steps) {
            if step.is_cross() {
                c = sys.mul_generator(&c, i as usize);
            }
            out.push(c.clone());
        }
        out
    }

    pub fn end(&self, sys: &CoxeterSystem) -> AffineElement {
        self.alcoves(sys).pop().expect("nonempty alcove list")
    }

    /// Recompute each step's kind from the chimney.
    pub fn reclassify(&self, sys: &CoxeterSystem, ch: &Chimney) -> Vec<StepKind> {
        let alcoves = self.alcoves(sys);
        self.ty
            .word
            .iter()
            .zip(&self.steps)
            .enumerate()
            .map(|(j, (&i, s))| classify_step(sys, ch, &alcoves[j], i as usize, s.is_fold()))
            .collect()
    }

    pub fn is_positively_folded(&self) -> bool {
        !self.steps.contains(&StepKind::NegativeFold)
    }
}

/// Weight of one step: `q_i` for a positive crossing, `1` for a negative
/// crossing, `q_i − 1` for a positive fold.
pub fn step_weight(nvars: usize, i: usize, kind: StepKind) -> CountPolynomial {
    match kind {
        StepKind::PositiveCross => CountPolynomial::q(nvars, i),
        StepKind::NegativeCross => CountPolynomial::one(nvars),
        StepKind::PositiveFold | StepKind::NegativeFold => CountPolynomial::q_minus_one(nvars, i),
    }
}

fn fold_allowed(o: Orientation, rule: FoldRule) -> bool {
    match rule {
        FoldRule::Positive => o == Orientation::Plus,
        FoldRule::CorruptedSign => o == Orientation::Minus,
    }
}

/// Every positively folded gallery of type `ty`, with its weight.
///
/// Depth first, crossing before folding.
pub fn enumerate_folded(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
) -> Vec<(FoldedGallery, CountPolynomial)> {
    enumerate_folded_with(sys, ch, ty, FoldRule::Positive)
}

pub fn enumerate_folded_with(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
    rule: FoldRule,
) -> Vec<(FoldedGallery, CountPolynomial)> {
    let nvars = sys.rank() + 1;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(ty.len());
    dfs(
        sys,
        ch,
        ty,
        rule,
        &ty.start,
        CountPolynomial::one(nvars),
        &mut steps,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
    rule: FoldRule,
    current: &AffineElement,
    weight: CountPolynomial,
    steps: &mut Vec<StepKind>,
    out: &mut Vec<(FoldedGallery, CountPolynomial)>,
) {
    let j = steps.len();
    if j == ty.len() {
        out.push((
            FoldedGallery {
                ty: ty.clone(),
                steps: steps.clone(),
            },
            weight,
        ));
        return;
    }
    let nvars = weight.nvars();
    let i = ty.word[j] as usize;
    let o = ch.orientation(sys, current, i);
    let cross = classify_step(sys, ch, current, i, false);
    steps.push(cross);
    let next = sys.mul_generator(current, i);
    dfs(
        sys,
        ch,
        ty,
        rule,
        &next,
        &weight * &step_weight(nvars, i, cross),
        steps,
        out,
    );
    steps.pop();
    if fold_allowed(o, rule) {
        let fold = classify_step(sys, ch, current, i, true);
        steps.push(fold);
        dfs(
            sys,
            ch,
            ty,
            rule,
            current,
            &weight * &step_weight(nvars, i, fold),
            steps,
            out,
        );
        steps.pop();
    }
}

/// End alcove ↦ total weight of positively folded galleries of type `ty`
/// ending there. Alcoves with zero total are omitted.
pub fn end_histogram(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
) -> BTreeMap<AffineElement, CountPolynomial> {
    end_histogram_with(sys, ch, ty, FoldRule::Positive)
}

/// Same totals as summing [`enumerate_folded_with`] per end alcove, computed
/// by merging galleries that reach the same alcove after each step.
pub fn end_histogram_with(
    sys: &CoxeterSystem,
    ch: &Chimney,
    ty: &GalleryType,
    rule: FoldRule,
) -> BTreeMap<AffineElement, CountPolynomial> {
    let nvars = sys.rank() + 1;
    let mut layer: BTreeMap<AffineElement, CountPolynomial> = BTreeMap::new();
    layer.insert(ty.start.clone(), CountPolynomial::one(nvars));
    for &i in &ty.word {
        let i = i as usize;
        let mut next: BTreeMap<AffineElement, CountPolynomial> = BTreeMap::new();
        for (c, w) in layer {
            let o = ch.orientation(sys, &c, i);
            let cross = classify_step(sys, ch, &c, i, false);
            let crossed = sys.mul_generator(&c, i);
            let cw = &w * &step_weight(nvars, i, cross);
            accumulate(&mut next, crossed, cw);
            if fold_allowed(o, rule) {
                let fw = &w * &step_weight(nvars, i, StepKind::PositiveFold);
                accumulate(&mut next, c, fw);
            }
        }
        layer = next;
    }
    layer.retain(|_, p| !p.is_zero());
    layer
}

fn accumulate(
    map: &mut BTreeMap<AffineElement, CountPolynomial>,
    key: AffineElement,
    value: CountPolynomial,
) {
    match map.get_mut(&key) {
        Some(p) => *p += &value,
        None => {
            map.insert(key, value);
        }
    }
}

/// A set of alcoves or of coroot-lattice vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shadow {
    Alcoves(BTreeSet<AffineElement>),
    Vertices(BTreeSet<CorootVector>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ShadowElementJson {
    Alcove(String),
    Vertex(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowJson {
    pub kind: &'static str,
    pub elements: Vec<ShadowElementJson>,
}

impl Shadow {
    pub fn len(&self) -> usize {
        match self {
            Shadow::Alcoves(s) => s.len(),
            Shadow::Vertices(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_alcove(&self, x: &AffineElement) -> bool {
        matches!(self, Shadow::Alcoves(s) if s.contains(x))
    }

    pub fn contains_vertex(&self, v: &CorootVector) -> bool {
        matches!(self, Shadow::Vertices(s) if s.contains(v))
    }

    /// Alcoves in shortlex order of their reduced words; vertices in
    /// lexicographic order.
    pub fn sorted_alcoves(&self, sys: &CoxeterSystem) -> Vec<AffineElement> {
        match self {
            Shadow::Alcoves(s) => {
                let mut v: Vec<(_, AffineElement)> =
                    s.iter().map(|x| (sys.sort_key(x), x.clone())).collect();
                v.sort();
                v.into_iter().map(|(_, x)| x).collect()
            }
            Shadow::Vertices(_) => Vec::new(),
        }
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> ShadowJson {
        match self {
            Shadow::Alcoves(_) => ShadowJson {
                kind: "alcove",
                elements: self
                    .sorted_alcoves(sys)
                    .iter()
                    .map(|x| ShadowElementJson::Alcove(sys.format_element(x)))
                    .collect(),
            },
            Shadow::Vertices(s) => ShadowJson {
                kind: "vertex",
                elements: s
                    .iter()
                    .map(|v| ShadowElementJson::Vertex(v.0.clone()))
                    .collect(),
            },
        }
    }
}

/// `Sh_{J,y}(x𝕗)`: end alcoves of positively folded galleries of type `x⃗`.
pub fn shadow_alcove(sys: &CoxeterSystem, ch: &Chimney, x: &AffineElement) -> Shadow {
    let ty = GalleryType::of_element(sys, x);
    Shadow::Alcoves(end_histogram(sys, ch, &ty).into_keys().collect())
}

/// `Sh_{J,y}(λ)` for dominant `λ`: end vertices of galleries of type
/// `(w x_λ)⃗` over all `w ∈ W₀`.
pub fn shadow_vertex(sys: &CoxeterSystem, ch: &Chimney, lambda: &CorootVector) -> Result<Shadow> {
    if !sys.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let x = min_coset_rep(sys, lambda);
    let mut out = BTreeSet::new();
    for w in sys.spherical_elements()? {
        let wx = sys.mul(&sys.spherical(w.clone()), &x);
        let ty = GalleryType::of_element(sys, &wx);
        for end in end_histogram(sys, ch, &ty).into_keys() {
            out.insert(end.translation);
        }
    }
    Ok(Shadow::Vertices(out))
}
