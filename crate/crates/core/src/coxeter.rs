//! Exact data for one irreducible affine Coxeter system: root system,
//! coroots, the spherical Weyl group acting on roots by permutations, and the
//! affine Weyl group in its `t^λ w` model.
//!
//! Cartan convention: `cartan[i][j] = ⟨α_i^∨, α_j⟩`, rows indexed by coroots.
//! Roots are integer vectors in the simple-root basis and coroot-lattice
//! points are integer vectors in the simple-coroot basis, so the pairing
//! `⟨λ, α⟩` is `λᵀ · cartan · α`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest spherical Weyl group we are willing to enumerate element by element.
pub const MAX_ENUMERATED_WEYL_ORDER: u128 = 200_000;

/// Cartan-Killing family of the underlying finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// An irreducible affine type such as `A~2` or `G~2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineType {
    pub family: Family,
    pub rank: usize,
}

impl AffineType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 3,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > 64 {
            return Err(Error::UnsupportedType(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }
}

impl FromStr for AffineType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('~');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        Self::new(family, rank).map_err(|_| bad())
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}~{}", self.family, self.rank)
    }
}

/// A point of the coroot lattice `R^∨`, in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CorootVector(pub Vec<i64>);

impl CorootVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for CorootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Element of the spherical Weyl group `W₀`, stored as the permutation it
/// induces on the indexed root set. Equality is equality of permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphericalElement {
    perm: Box<[u16]>,
    inv: Box<[u16]>,
}

impl SphericalElement {
    fn from_perm(perm: Vec<u16>) -> Self {
        let mut inv = vec![0u16; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        Self {
            perm: perm.into_boxed_slice(),
            inv: inv.into_boxed_slice(),
        }
    }

    fn identity(nroots: usize) -> Self {
        Self::from_perm((0..nroots as u16).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Index of `w(α_r)`.
    #[inline]
    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// Index of `w⁻¹(α_r)`.
    #[inline]
    pub fn apply_inverse(&self, root: usize) -> usize {
        self.inv[root] as usize
    }

    /// `self · other`, acting as `self(other(α))`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm: Vec<u16> = other.perm.iter().map(|&r| self.perm[r as usize]).collect();
        Self::from_perm(perm)
    }

    pub fn inverse(&self) -> Self {
        Self {
            perm: self.inv.clone(),
            inv: self.perm.clone(),
        }
    }

    pub fn permutation(&self) -> &[u16] {
        &self.perm
    }
}

/// Element `x = t^λ w` of the affine Weyl group; also names the alcove `x·𝕗`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub translation: CorootVector,
    pub linear: SphericalElement,
}

/// One irreducible affine Coxeter system. Immutable after construction.
#[derive(Debug)]
pub struct CoxeterSystem {
    ty: AffineType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    npos: usize,
    highest: usize,
    // pairing[r][i] = ⟨α_i^∨, root r⟩
    pairing: Vec<Vec<i64>>,
    simple: Vec<SphericalElement>,
    highest_reflection: SphericalElement,
    weyl_order: u128,
    weyl: OnceLock<Vec<SphericalElement>>,
}

fn dynkin(ty: AffineType) -> (Vec<(usize, usize)>, Vec<i64>) {
    let n = ty.rank;
    let chain = |len: usize| {
        (0..len.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>()
    };
    match ty.family {
        Family::A => (chain(n), vec![1; n]),
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (chain(n), d)
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (chain(n), d)
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![1; n])
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            (e, vec![1; n])
        }
        Family::F => (chain(4), vec![2, 2, 1, 1]),
        Family::G => (chain(2), vec![1, 3]),
    }
}

fn weyl_order(ty: AffineType) -> u128 {
    let n = ty.rank as u128;
    let fact = |k: u128| (1..=k).fold(1u128, |a, b| a.saturating_mul(b));
    match ty.family {
        Family::A => fact(n + 1),
        Family::B | Family::C => fact(n).saturating_mul(1u128 << n.min(127)),
        Family::D => fact(n).saturating_mul(1u128 << (n - 1).min(127)),
        Family::E => match ty.rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

impl CoxeterSystem {
    /// Builds the system for `ty`: Cartan matrix, root closure, coroots and
    /// the permutation representation of the simple reflections.
    pub fn new(ty: AffineType) -> Self {
        let n = ty.rank;
        let (edges, symmetrizer) = dynkin(ty);
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            cartan[i][j] = -(symmetrizer[j] / symmetrizer[i]).max(1);
            cartan[j][i] = -(symmetrizer[i] / symmetrizer[j]).max(1);
        }

        let reflect_root = |i: usize, beta: &[i64]| -> Vec<i64> {
            let c: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
            let mut out = beta.to_vec();
            out[i] -= c;
            out
        };
        let reflect_coroot = |i: usize, lam: &[i64]| -> Vec<i64> {
            let c: i64 = (0..n).map(|k| lam[k] * cartan[k][i]).sum();
            let mut out = lam.to_vec();
            out[i] -= c;
            out
        };

        // Close the simple roots under simple reflections, carrying coroots.
        let mut found: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            found.insert(e.clone(), e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            let cov = found[&beta].clone();
            for i in 0..n {
                let b = reflect_root(i, &beta);
                if b.iter().all(|&c| c >= 0) && !found.contains_key(&b) {
                    found.insert(b.clone(), reflect_coroot(i, &cov));
                    queue.push_back(b);
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Vec<i64>)> = found.into_iter().collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let npos = positive.len();
        let mut roots = Vec::with_capacity(2 * npos);
        let mut coroots = Vec::with_capacity(2 * npos);
        for (r, c) in &positive {
            roots.push(r.clone());
            coroots.push(c.clone());
        }
        for (r, c) in &positive {
            roots.push(r.iter().map(|x| -x).collect());
            coroots.push(c.iter().map(|x| -x).collect());
        }
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let pairing: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| {
                (0..n)
                    .map(|i| (0..n).map(|j| cartan[i][j] * r[j]).sum())
                    .collect()
            })
            .collect();
        let highest = npos - 1;

        let simple = (0..n)
            .map(|i| {
                let perm = roots
                    .iter()
                    .map(|r| index[&reflect_root(i, r)] as u16)
                    .collect();
                SphericalElement::from_perm(perm)
            })
            .collect();

        let mut sys = Self {
            ty,
            cartan,
            symmetrizer,
            roots,
            coroots,
            index,
            npos,
            highest,
            pairing,
            simple,
            highest_reflection: SphericalElement::identity(0),
            weyl_order: weyl_order(ty),
            weyl: OnceLock::new(),
        };
        sys.highest_reflection = sys.reflection(highest);
        sys
    }

    /// Parses a type label such as `"A2"`, `"C~2"` or `"G2"` and builds it.
    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn affine_type(&self) -> AffineType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared root lengths `(α_i, α_i)` of the simple roots, up to a common scale.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn num_positive_roots(&self) -> usize {
        self.npos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Root with index `r`, in the simple-root basis. Indices `0..npos` are
    /// the positive roots sorted by height; `r + npos` is `-root(r)`.
    pub fn root(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    pub fn coroot(&self, r: usize) -> &[i64] {
        &self.coroots[r]
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    #[inline]
    pub fn is_positive(&self, r: usize) -> bool {
        r < self.npos
    }

    #[inline]
    pub fn negate(&self, r: usize) -> usize {
        if r < self.npos {
            r + self.npos
        } else {
            r - self.npos
        }
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    /// Coefficients `m_i` of the highest root `α̃ = Σ m_i α_i`.
    pub fn marks(&self) -> &[i64] {
        &self.roots[self.highest]
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// `⟨λ, α_r⟩`.
    #[inline]
    pub fn pair(&self, lambda: &CorootVector, r: usize) -> i64 {
        lambda
            .0
            .iter()
            .zip(&self.pairing[r])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `⟨α_i^∨, α_r⟩` for a simple coroot.
    pub fn simple_pairing(&self, i: usize, r: usize) -> i64 {
        self.pairing[r][i]
    }

    pub fn is_dominant(&self, lambda: &CorootVector) -> bool {
        (0..self.rank()).all(|i| self.pair(lambda, i) >= 0)
    }

    // ---- spherical group ----

    pub fn spherical_identity(&self) -> SphericalElement {
        SphericalElement::identity(self.roots.len())
    }

    /// Simple reflection `s_i`, `i ∈ 1..=n`.
    pub fn simple_reflection(&self, i: usize) -> Result<&SphericalElement> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(&self.simple[i - 1])
    }

    /// Reflection `s_α` in the root with index `r`.
    pub fn reflection(&self, r: usize) -> SphericalElement {
        let n = self.rank();
        let cov = &self.coroots[r];
        let alpha = &self.roots[r];
        let perm = self
            .roots
            .iter()
            .enumerate()
            .map(|(b, beta)| {
                let c: i64 = (0..n).map(|i| cov[i] * self.pairing[b][i]).sum();
                let img: Vec<i64> = beta.iter().zip(alpha).map(|(x, a)| x - c * a).collect();
                self.index[&img] as u16
            })
            .collect();
        SphericalElement::from_perm(perm)
    }

    /// `w·λ` for the linear action on coroots.
    pub fn act_on_coroot(&self, w: &SphericalElement, lambda: &CorootVector) -> CorootVector {
        let n = self.rank();
        let mut out = vec![0i64; n];
        for (i, &li) in lambda.0.iter().enumerate() {
            if li == 0 {
                continue;
            }
            let img = &self.coroots[w.apply(i)];
            for k in 0..n {
                out[k] += li * img[k];
            }
        }
        CorootVector(out)
    }

    /// Number of positive roots sent to negative roots.
    pub fn spherical_length(&self, w: &SphericalElement) -> usize {
        (0..self.npos)
            .filter(|&r| !self.is_positive(w.apply(r)))
            .count()
    }

    /// Shortlex-minimal reduced word over `1..=n`.
    pub fn spherical_word(&self, w: &SphericalElement) -> Vec<u8> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'outer: loop {
            for i in 0..self.rank() {
                // s_i is a left descent iff w⁻¹(α_i) < 0.
                if !self.is_positive(cur.apply_inverse(i)) {
                    word.push(i as u8 + 1);
                    cur = self.simple[i].compose(&cur);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    pub fn longest_element(&self) -> SphericalElement {
        let mut w = self.spherical_identity();
        'outer: loop {
            for i in 0..self.rank() {
                if self.is_positive(w.apply(i)) {
                    w = w.compose(&self.simple[i]);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The parabolic subgroup `W_J` generated by `s_j`, `j ∈ J ⊆ 1..=n`.
    pub fn parabolic_subgroup(&self, j: &[usize]) -> Result<Vec<SphericalElement>> {
        for &i in j {
            self.simple_reflection(i)?;
        }
        let gens: Vec<&SphericalElement> = j.iter().map(|&i| &self.simple[i - 1]).collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let id = self.spherical_identity();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let v = w.compose(g);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
            out.push(w);
            if out.len() as u128 > MAX_ENUMERATED_WEYL_ORDER {
                return Err(Error::TooLarge(self.weyl_order.min(u64::MAX as u128) as u64));
            }
        }
        Ok(out)
    }

    /// All of `W₀`, in breadth-first order from the identity. Cached.
    pub fn spherical_elements(&self) -> Result<&[SphericalElement]> {
        if self.weyl_order > MAX_ENUMERATED_WEYL_ORDER {
            return Err(Error::TooLarge(self.weyl_order.min(u64::MAX as u128) as u64));
        }
        if let Some(w) = self.weyl.get() {
            return Ok(w);
        }
        let all: Vec<usize> = (1..=self.rank()).collect();
        let elems = self.parabolic_subgroup(&all)?;
        if elems.len() as u128 != self.weyl_order {
            return Err(Error::Internal(format!(
                "enumerated {} spherical elements, expected {}",
                elems.len(),
                self.weyl_order
            )));
        }
        Ok(self.weyl.get_or_init(|| elems))
    }

    // ---- affine group ----

    pub fn identity(&self) -> AffineElement {
        AffineElement {
            translation: CorootVector::zero(self.rank()),
            linear: self.spherical_identity(),
        }
    }

    pub fn translation(&self, lambda: CorootVector) -> AffineElement {
        AffineElement {
            translation: lambda,
            linear: self.spherical_identity(),
        }
    }

    pub fn spherical(&self, w: SphericalElement) -> AffineElement {
        AffineElement {
            translation: CorootVector::zero(self.rank()),
            linear: w,
        }
    }

    /// Affine generator `s_i`, `i ∈ 0..=n`; `s_0 = t^{α̃^∨} s_{α̃}`.
    pub fn generator(&self, i: usize) -> Result<AffineElement> {
        if i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        if i == 0 {
            Ok(AffineElement {
                translation: CorootVector(self.coroots[self.highest].clone()),
                linear: self.highest_reflection.clone(),
            })
        } else {
            Ok(self.spherical(self.simple[i - 1].clone()))
        }
    }

    /// `(t^λ u)(t^μ v) = t^{λ + uμ} (uv)`.
    pub fn mul(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        AffineElement {
            translation: x
                .translation
                .add(&self.act_on_coroot(&x.linear, &y.translation)),
            linear: x.linear.compose(&y.linear),
        }
    }

    /// `x · s_i`, i.e. the alcove adjacent to `x𝕗` across its type-`i` panel.
    pub fn mul_generator(&self, x: &AffineElement, i: usize) -> AffineElement {
        let g = self
            .generator(i)
            .expect("generator index checked by caller");
        self.mul(x, &g)
    }

    pub fn inverse(&self, x: &AffineElement) -> AffineElement {
        let winv = x.linear.inverse();
        AffineElement {
            translation: self.act_on_coroot(&winv, &x.translation).neg(),
            linear: winv,
        }
    }

    pub fn from_word(&self, word: &[u8]) -> Result<AffineElement> {
        let mut x = self.identity();
        for &i in word {
            x = self.mul(&x, &self.generator(i as usize)?);
        }
        Ok(x)
    }

    /// Number of walls `H_{α,k}` separating `𝕗` from `x𝕗`.
    ///
    /// For `x = t^λ w` and `α > 0`, the alcove `x𝕗` lies in the open slab
    /// `m - χ < ⟨·, α⟩ < m - χ + 1` with `m = ⟨λ, α⟩` and `χ = [w⁻¹α < 0]`,
    /// while `𝕗` lies in `0 < ⟨·, α⟩ < 1`.
    pub fn length(&self, x: &AffineElement) -> usize {
        (0..self.npos)
            .map(|r| {
                let m = self.pair(&x.translation, r);
                let chi = i64::from(!self.is_positive(x.linear.apply_inverse(r)));
                (m - chi).unsigned_abs() as usize
            })
            .sum()
    }

    /// True when `ℓ(x s_i) < ℓ(x)`.
    pub fn is_right_descent(&self, x: &AffineElement, i: usize) -> bool {
        self.length(&self.mul_generator(x, i)) < self.length(x)
    }

    /// Reduced word by greedy descent, always taking the smallest right descent.
    pub fn reduced_word(&self, x: &AffineElement) -> Vec<u8> {
        let mut word = Vec::new();
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let (i, next, nlen) = (0..=self.rank())
                .find_map(|i| {
                    let y = self.mul_generator(&cur, i);
                    let l = self.length(&y);
                    (l < len).then_some((i, y, l))
                })
                .expect("nonidentity element has a right descent");
            word.push(i as u8);
            cur = next;
            len = nlen;
        }
        word.reverse();
        word
    }

    pub fn is_reduced(&self, word: &[u8]) -> Result<bool> {
        Ok(self.length(&self.from_word(word)?) == word.len())
    }

    /// All elements of length at most `max_len`, grouped by length.
    pub fn ball(&self, max_len: usize) -> Vec<AffineElement> {
        let mut seen = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &layer {
                for i in 0..=self.rank() {
                    let y = self.mul_generator(x, i);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Reduced word rendered as `s1 s2 s0`; the identity renders as `e`.
    pub fn format_element(&self, x: &AffineElement) -> String {
        format_word(&self.reduced_word(x))
    }

    /// `(length, reduced word)` key giving a deterministic shortlex order on elements.
    pub fn sort_key(&self, x: &AffineElement) -> (usize, Vec<u8>) {
        let w = self.reduced_word(x);
        (w.len(), w)
    }
}

pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: &str) -> CoxeterSystem {
        CoxeterSystem::from_label(label).unwrap()
    }

    #[test]
    fn parses_type_labels() {
        assert_eq!(
            "A~2".parse::<AffineType>().unwrap(),
            AffineType::new(Family::A, 2).unwrap()
        );
        assert_eq!("g2".parse::<AffineType>().unwrap().family, Family::G);
        assert!("B2".parse::<AffineType>().is_err());
        assert!("E9".parse::<AffineType>().is_err());
        assert!("X3".parse::<AffineType>().is_err());
        assert!("A0".parse::<AffineType>().is_err());
    }

    #[test]
    fn standard_root_data() {
        let a2 = sys("A2");
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.marks(), &[1, 1]);
        assert_eq!(a2.weyl_order(), 6);
        let g2 = sys("G2");
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.weyl_order(), 12);
        assert_eq!(g2.marks(), &[3, 2]);
        assert_eq!(sys("C2").marks(), &[2, 1]);
        assert_eq!(sys("B3").marks(), &[1, 2, 2]);
        assert_eq!(sys("F4").marks(), &[2, 3, 4, 2]);
        assert_eq!(sys("E8").num_positive_roots(), 120);
        assert_eq!(sys("E6").marks(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(sys("D5").num_positive_roots(), 20);
    }

    #[test]
    fn cartan_matrices_are_valid() {
        for label in ["A1", "A3", "B4", "C3", "D4", "E6", "E7", "E8", "F4", "G2"] {
            let s = sys(label);
            let n = s.rank();
            for i in 0..n {
                assert_eq!(s.cartan()[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(s.cartan()[i][j] <= 0);
                        assert_eq!(s.cartan()[i][j] == 0, s.cartan()[j][i] == 0);
                        let d = s.symmetrizer();
                        assert_eq!(d[i] * s.cartan()[i][j], d[j] * s.cartan()[j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn highest_root_dominates_every_positive_root() {
        for label in ["A3", "B3", "C2", "C3", "D4", "F4", "G2", "E6"] {
            let s = sys(label);
            let top = s.root(s.highest_root()).to_vec();
            for r in 0..s.num_positive_roots() {
                assert!(top.iter().zip(s.root(r)).all(|(a, b)| a >= b), "{label}");
            }
        }
    }

    #[test]
    fn simple_reflections_permute_positive_roots_other_than_their_own() {
        for label in ["A2", "C2", "G2", "B3", "F4"] {
            let s = sys(label);
            for i in 1..=s.rank() {
                let w = s.simple_reflection(i).unwrap();
                assert_eq!(w.apply(i - 1), s.negate(i - 1));
                for r in 0..s.num_roots() {
                    if r != i - 1 && s.is_positive(r) {
                        assert!(s.is_positive(w.apply(r)));
                    }
                    assert_eq!(w.apply(s.negate(r)), s.negate(w.apply(r)));
                }
            }
        }
    }

    #[test]
    fn weyl_group_enumeration_matches_order() {
        for label in ["A1", "A2", "A3", "C2", "G2", "B3", "F4"] {
            let s = sys(label);
            assert_eq!(
                s.spherical_elements().unwrap().len() as u128,
                s.weyl_order()
            );
        }
        assert!(matches!(
            sys("E8").spherical_elements(),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn spherical_word_length_is_inversion_count() {
        let s = sys("C3");
        for w in s.spherical_elements().unwrap() {
            let word = s.spherical_word(w);
            assert_eq!(word.len(), s.spherical_length(w));
            let mut v = s.spherical_identity();
            for &i in &word {
                v = v.compose(s.simple_reflection(i as usize).unwrap());
            }
            assert_eq!(&v, w);
        }
        assert_eq!(
            s.spherical_length(&s.longest_element()),
            s.num_positive_roots()
        );
    }

    #[test]
    fn affine_generators() {
        let s = sys("A2");
        let s1 = s.generator(1).unwrap();
        assert!(s1.translation.is_zero());
        assert_eq!(&s1.linear, s.simple_reflection(1).unwrap());
        let s0 = s.generator(0).unwrap();
        assert_eq!(s0.translation, CorootVector(vec![1, 1]));
        assert_eq!(s0.linear, s.reflection(s.highest_root()));
        assert!(matches!(s.generator(3), Err(Error::IndexOutOfRange { .. })));

        let a1 = sys("A1");
        let t = a1.from_word(&[0, 1]).unwrap();
        assert_eq!(t, a1.translation(CorootVector(vec![1])));
    }

    #[test]
    fn generators_are_involutions() {
        for label in ["A2", "C2", "G2", "D4"] {
            let s = sys(label);
            for i in 0..=s.rank() {
                let g = s.generator(i).unwrap();
                assert_eq!(s.mul(&g, &g), s.identity());
                assert_eq!(s.length(&g), 1);
            }
        }
    }

    #[test]
    fn lengths_of_small_elements() {
        let s = sys("A2");
        assert_eq!(s.length(&s.identity()), 0);
        assert_eq!(s.length(&s.translation(CorootVector(vec![1, 1]))), 4);
        assert_eq!(s.reduced_word(&s.identity()), Vec::<u8>::new());
        assert_eq!(s.reduced_word(&s.generator(2).unwrap()), vec![2]);
    }

    #[test]
    fn coroot_action() {
        let s = sys("A2");
        let lam = CorootVector(vec![3, -1]);
        assert_eq!(s.act_on_coroot(&s.spherical_identity(), &lam), lam);
        let s1 = s.simple_reflection(1).unwrap();
        assert_eq!(
            s.act_on_coroot(s1, &CorootVector(vec![1, 0])),
            CorootVector(vec![-1, 0])
        );
        // w₀ sends the dominant α₁^∨+α₂^∨ to its antidominant negative.
        let w0 = s.longest_element();
        assert_eq!(
            s.act_on_coroot(&w0, &CorootVector(vec![1, 1])),
            CorootVector(vec![-1, -1])
        );
    }

    #[test]
    fn conjugating_a_translation_translates_by_the_image() {
        let s = sys("C2");
        for w in s.spherical_elements().unwrap() {
            let wa = s.spherical(w.clone());
            let winv = s.inverse(&wa);
            for a in -3..=3 {
                for b in -3..=3 {
                    let lam = CorootVector(vec![a, b]);
                    let lhs = s.mul(&s.mul(&wa, &s.translation(lam.clone())), &winv);
                    assert_eq!(lhs, s.translation(s.act_on_coroot(w, &lam)));
                }
            }
        }
    }

    #[test]
    fn format_identity_and_words() {
        let s = sys("A2");
        assert_eq!(s.format_element(&s.identity()), "e");
        assert_eq!(s.format_element(&s.from_word(&[1, 2]).unwrap()), "s1 s2");
    }
}
