//! Point counts of double-coset intersections, computed as weighted counts of
//! positively folded galleries.

use std::collections::{BTreeMap, BTreeSet};

use crate::chimney::Chimney;
use crate::coxeter::{AffineElement, CorootVector, CoxeterSystem, SphericalElement};
use crate::error::{Error, Result};
use crate::gallery::{end_histogram, GalleryType};
use crate::polynomial::CountPolynomial;

/// A face of `𝕗` containing the origin, given by the generators fixing it.
/// The empty set is `𝕗` itself; `[n]` is the vertex `v₀`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParahoricFace {
    j: Vec<usize>,
}

impl ParahoricFace {
    pub fn new(sys: &CoxeterSystem, j: &[usize]) -> Result<Self> {
        for &i in j {
            if i == 0 || i > sys.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: sys.rank(),
                });
            }
        }
        let mut j = j.to_vec();
        j.sort_unstable();
        j.dedup();
        Ok(Self { j })
    }

    pub fn alcove() -> Self {
        Self { j: Vec::new() }
    }

    pub fn origin(sys: &CoxeterSystem) -> Self {
        Self {
            j: (1..=sys.rank()).collect(),
        }
    }

    pub fn types(&self) -> &[usize] {
        &self.j
    }

    /// `W_σ`.
    pub fn group(&self, sys: &CoxeterSystem) -> Result<Vec<SphericalElement>> {
        sys.parabolic_subgroup(&self.j)
    }
}

/// End alcove ↦ count polynomial for galleries of type `x⃗` from `𝕗`.
pub fn count_histogram(
    sys: &CoxeterSystem,
    ch: &Chimney,
    x: &AffineElement,
) -> BTreeMap<AffineElement, CountPolynomial> {
    end_histogram(sys, ch, &GalleryType::of_element(sys, x))
}

/// `|IxI ∩ (I_P)^y zI|` as a polynomial in the `q_i`.
pub fn count_intersection(
    sys: &CoxeterSystem,
    ch: &Chimney,
    x: &AffineElement,
    z: &AffineElement,
) -> CountPolynomial {
    count_histogram(sys, ch, x)
        .remove(z)
        .unwrap_or_else(|| CountPolynomial::zero(sys.rank() + 1))
}

/// `ℓ(s_j x) ≥ ℓ(x)` for `j ∈ J_σ` and `ℓ(x s_j) ≥ ℓ(x)` for `j ∈ J_τ`.
pub fn is_two_sided_reduced(
    sys: &CoxeterSystem,
    x: &AffineElement,
    sigma: &ParahoricFace,
    tau: &ParahoricFace,
) -> bool {
    let len = sys.length(x);
    let left_ok = sigma.j.iter().all(|&j| {
        let g = sys.generator(j).expect("validated index");
        sys.length(&sys.mul(&g, x)) >= len
    });
    let right_ok = tau
        .j
        .iter()
        .all(|&j| sys.length(&sys.mul_generator(x, j)) >= len);
    left_ok && right_ok
}

/// `Σ_{w ∈ W_σ}` of [`count_intersection`] for `wx`, with `z` used exactly as given.
pub fn count_parahoric(
    sys: &CoxeterSystem,
    ch: &Chimney,
    sigma: &ParahoricFace,
    tau: &ParahoricFace,
    x: &AffineElement,
    z: &AffineElement,
) -> Result<CountPolynomial> {
    Ok(parahoric_histogram(sys, ch, sigma, tau, x)?
        .remove(z)
        .unwrap_or_else(|| CountPolynomial::zero(sys.rank() + 1)))
}

/// [`count_parahoric`] for every `z` at once; zero entries are omitted.
pub fn parahoric_histogram(
    sys: &CoxeterSystem,
    ch: &Chimney,
    sigma: &ParahoricFace,
    tau: &ParahoricFace,
    x: &AffineElement,
) -> Result<BTreeMap<AffineElement, CountPolynomial>> {
    if !is_two_sided_reduced(sys, x, sigma, tau) {
        return Err(Error::NotTwoSidedReduced(sys.format_element(x)));
    }
    let mut total: BTreeMap<AffineElement, CountPolynomial> = BTreeMap::new();
    for w in sigma.group(sys)? {
        let wx = sys.mul(&sys.spherical(w), x);
        for (z, p) in count_histogram(sys, ch, &wx) {
            match total.get_mut(&z) {
                Some(acc) => *acc += &p,
                None => {
                    total.insert(z, p);
                }
            }
        }
    }
    total.retain(|_, p| !p.is_zero());
    Ok(total)
}

/// `|Kt^λK ∩ (I_P)^y t^μ K|`: galleries of type `(w x_λ)⃗`, `w ∈ W₀`, ending in
/// an alcove of `star(μ)`.
pub fn count_vertex(
    sys: &CoxeterSystem,
    ch: &Chimney,
    lambda: &CorootVector,
    mu: &CorootVector,
) -> Result<CountPolynomial> {
    if !sys.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let x = min_coset_rep(sys, lambda);
    let mut total = CountPolynomial::zero(sys.rank() + 1);
    for w in sys.spherical_elements()? {
        let wx = sys.mul(&sys.spherical(w.clone()), &x);
        for (end, p) in count_histogram(sys, ch, &wx) {
            if &end.translation == mu {
                total += &p;
            }
        }
    }
    Ok(total)
}

/// Minimal-length element of `x W_J`, by right descents in `J`.
pub fn min_right_coset_rep(sys: &CoxeterSystem, x: &AffineElement, j: &[usize]) -> AffineElement {
    let mut cur = x.clone();
    let mut len = sys.length(&cur);
    'outer: loop {
        for &i in j {
            let next = sys.mul_generator(&cur, i);
            let l = sys.length(&next);
            if l < len {
                cur = next;
                len = l;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// `x_λ`, the minimal-length element of `t^λ W₀`.
pub fn min_coset_rep(sys: &CoxeterSystem, lambda: &CorootVector) -> AffineElement {
    let all: Vec<usize> = (1..=sys.rank()).collect();
    min_right_coset_rep(sys, &sys.translation(lambda.clone()), &all)
}

/// `Sh_{J,y}(xτ, σ)`: faces `zτ` reached by galleries of type `(wx)⃗`,
/// `w ∈ W_σ`, each face represented by the minimal element of `z W_τ`.
pub fn shadow_face(
    sys: &CoxeterSystem,
    ch: &Chimney,
    sigma: &ParahoricFace,
    tau: &ParahoricFace,
    x: &AffineElement,
) -> Result<BTreeSet<AffineElement>> {
    let mut out = BTreeSet::new();
    for w in sigma.group(sys)? {
        let wx = sys.mul(&sys.spherical(w), x);
        for end in count_histogram(sys, ch, &wx).into_keys() {
            out.insert(min_right_coset_rep(sys, &end, &tau.j));
        }
    }
    Ok(out)
}
