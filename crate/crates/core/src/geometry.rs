//! Walls, half-apartments and side tests in the standard apartment.
//!
//! All side tests are exact. Points of `V*` are rational vectors in the
//! simple-coroot basis; alcove tests evaluate the barycenter of `x𝕗` with a
//! common denominator so they stay in integer arithmetic.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::coxeter::{AffineElement, CorootVector, CoxeterSystem};

pub type Rational = Ratio<i64>;

/// Which closed side of a wall: `{⟨·,α⟩ ≥ k}` or `{⟨·,α⟩ ≤ k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Geq,
    Leq,
}

impl Side {
    pub fn flip(self) -> Self {
        match self {
            Side::Geq => Side::Leq,
            Side::Leq => Side::Geq,
        }
    }
}

/// The wall `H_{α,k}` with `α` a positive root (index into the root table).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub root: usize,
    pub level: i64,
}

impl Hyperplane {
    /// Canonical form of `H_{α,k}` for any root index; `H_{-α,-k} = H_{α,k}`.
    pub fn new(sys: &CoxeterSystem, root: usize, level: i64) -> Self {
        if sys.is_positive(root) {
            Self { root, level }
        } else {
            Self {
                root: sys.negate(root),
                level: -level,
            }
        }
    }

    pub fn half(self, side: Side) -> HalfSpace {
        HalfSpace {
            root: self.root,
            level: self.level,
            side,
        }
    }
}

/// A closed half-apartment, canonicalized so that `root` is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub root: usize,
    pub level: i64,
    pub side: Side,
}

impl HalfSpace {
    pub fn new(sys: &CoxeterSystem, root: usize, level: i64, side: Side) -> Self {
        if sys.is_positive(root) {
            Self { root, level, side }
        } else {
            Self {
                root: sys.negate(root),
                level: -level,
                side: side.flip(),
            }
        }
    }

    /// The half-space `α^{k,w}` bounded by `H_{α,k}` containing a subsector
    /// of the chamber `w𝒞`.
    pub fn from_chamber(
        sys: &CoxeterSystem,
        root: usize,
        level: i64,
        w: &crate::coxeter::SphericalElement,
    ) -> Self {
        let side = if sys.is_positive(w.apply_inverse(root)) {
            Side::Geq
        } else {
            Side::Leq
        };
        Self::new(sys, root, level, side)
    }

    pub fn boundary(self) -> Hyperplane {
        Hyperplane {
            root: self.root,
            level: self.level,
        }
    }

    pub fn opposite(self) -> Self {
        Self {
            side: self.side.flip(),
            ..self
        }
    }
}

/// `(t^λ v)·α^{k,w} = (vα)^{k + ⟨λ, vα⟩, vw}`, followed by canonicalization.
pub fn act_on_halfspace(sys: &CoxeterSystem, x: &AffineElement, h: HalfSpace) -> HalfSpace {
    let image = x.linear.apply(h.root);
    let level = h.level + sys.pair(&x.translation, image);
    HalfSpace::new(sys, image, level, h.side)
}

pub fn act_on_hyperplane(sys: &CoxeterSystem, x: &AffineElement, h: Hyperplane) -> Hyperplane {
    act_on_halfspace(sys, x, h.half(Side::Geq)).boundary()
}

/// Position of an alcove relative to a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlcoveSide {
    Plus,
    Minus,
    On,
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Common denominator `D` with `D·⟨b, α⟩ ∈ ℤ` for the barycenter `b` of `𝕗`.
pub fn barycenter_scale(sys: &CoxeterSystem) -> i64 {
    let l = sys.marks().iter().fold(1, |acc, &m| lcm(acc, m));
    l * (sys.rank() as i64 + 1)
}

/// `D·⟨b, α_r⟩`, where `b` averages `0` and the vertices `ω_i^∨ / m_i`.
pub fn barycenter_pairing(sys: &CoxeterSystem, r: usize) -> i64 {
    let l = barycenter_scale(sys) / (sys.rank() as i64 + 1);
    sys.root(r)
        .iter()
        .zip(sys.marks())
        .map(|(c, m)| c * (l / m))
        .sum()
}

/// Side of `x𝕗` relative to `H`: `Plus` when `⟨x·b, α⟩ > k`.
pub fn alcove_side(sys: &CoxeterSystem, x: &AffineElement, h: Hyperplane) -> AlcoveSide {
    let d = barycenter_scale(sys);
    let value = barycenter_pairing(sys, x.linear.apply_inverse(h.root))
        + d * sys.pair(&x.translation, h.root);
    match value.cmp(&(d * h.level)) {
        std::cmp::Ordering::Greater => AlcoveSide::Plus,
        std::cmp::Ordering::Less => AlcoveSide::Minus,
        std::cmp::Ordering::Equal => AlcoveSide::On,
    }
}

/// The closed half-apartment bounded by `h` that contains `x𝕗`.
pub fn halfspace_containing(sys: &CoxeterSystem, x: &AffineElement, h: Hyperplane) -> HalfSpace {
    match alcove_side(sys, x, h) {
        AlcoveSide::Plus => h.half(Side::Geq),
        AlcoveSide::Minus => h.half(Side::Leq),
        AlcoveSide::On => panic!("alcove barycenter lies on wall {h:?}"),
    }
}

/// A panel of the standard apartment: the type-`ty` face of `alcove·𝕗`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Panel {
    pub alcove: AffineElement,
    pub ty: usize,
}

impl Panel {
    pub fn new(alcove: AffineElement, ty: usize) -> Self {
        Self { alcove, ty }
    }

    /// The two apartment alcoves containing the panel: `x𝕗` and `x s_i 𝕗`.
    pub fn star(&self, sys: &CoxeterSystem) -> [AffineElement; 2] {
        [
            self.alcove.clone(),
            sys.mul_generator(&self.alcove, self.ty),
        ]
    }
}

/// Wall of the base alcove's type-`i` panel: `H_{α_i,0}`, or `H_{α̃,1}` for `i = 0`.
pub fn base_wall(sys: &CoxeterSystem, i: usize) -> Hyperplane {
    if i == 0 {
        Hyperplane {
            root: sys.highest_root(),
            level: 1,
        }
    } else {
        Hyperplane {
            root: i - 1,
            level: 0,
        }
    }
}

pub fn wall_of_panel(sys: &CoxeterSystem, p: &Panel) -> Hyperplane {
    act_on_hyperplane(sys, &p.alcove, base_wall(sys, p.ty))
}

/// The alcove of `star(p)` nearest `d𝕗`: the one on the same side of the
/// panel's wall as `d𝕗`.
pub fn gate_in_apartment(sys: &CoxeterSystem, p: &Panel, d: &AffineElement) -> AffineElement {
    let wall = wall_of_panel(sys, p);
    let target = alcove_side(sys, d, wall);
    let [a, b] = p.star(sys);
    if alcove_side(sys, &a, wall) == target {
        a
    } else {
        b
    }
}

/// A point of `V*` in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    pub fn origin(rank: usize) -> Self {
        Self(vec![Rational::zero(); rank])
    }

    pub fn from_coroot(lambda: &CorootVector) -> Self {
        Self(
            lambda
                .0
                .iter()
                .map(|&c| Rational::from_integer(c))
                .collect(),
        )
    }

    /// `⟨p, α_r⟩`.
    pub fn pair(&self, sys: &CoxeterSystem, r: usize) -> Rational {
        self.0
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from_integer(sys.simple_pairing(i, r)))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `x·p = w p + λ` for `x = t^λ w`.
    pub fn act(&self, sys: &CoxeterSystem, x: &AffineElement) -> Self {
        let n = sys.rank();
        let mut out: Vec<Rational> = x
            .translation
            .0
            .iter()
            .map(|&c| Rational::from_integer(c))
            .collect();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = sys.coroot(x.linear.apply(i));
            for k in 0..n {
                out[k] += c * Rational::from_integer(img[k]);
            }
        }
        Self(out)
    }

    pub fn side(&self, sys: &CoxeterSystem, h: Hyperplane) -> AlcoveSide {
        let v = self.pair(sys, h.root);
        let k = Rational::from_integer(h.level);
        if v > k {
            AlcoveSide::Plus
        } else if v < k {
            AlcoveSide::Minus
        } else {
            AlcoveSide::On
        }
    }

    pub fn as_coroot(&self) -> Option<CorootVector> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(CorootVector)
    }
}

/// Fundamental coweights `ω_i^∨` (with `⟨ω_i^∨, α_j⟩ = δ_ij`) in the coroot basis.
pub fn fundamental_coweights(sys: &CoxeterSystem) -> Vec<RationalPoint> {
    let n = sys.rank();
    // Solve cᵀ A = e_iᵀ, i.e. Aᵀ c = e_i, by Gauss-Jordan on [Aᵀ | I].
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = (0..n)
                .map(|c| Rational::from_integer(sys.cartan()[c][r]))
                .collect();
            row.extend((0..n).map(|c| {
                if c == r {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (v, p) in m[r].iter_mut().zip(&pivot_row) {
                    *v -= *p * f;
                }
            }
        }
    }
    (0..n)
        .map(|i| RationalPoint((0..n).map(|r| m[r][n + i]).collect()))
        .collect()
}

/// Vertices of `𝕗`, indexed by type: `v₀ = 0` and `v_i = ω_i^∨ / m_i`.
pub fn base_vertices(sys: &CoxeterSystem) -> Vec<RationalPoint> {
    let mut out = vec![RationalPoint::origin(sys.rank())];
    for (w, &m) in fundamental_coweights(sys).into_iter().zip(sys.marks()) {
        out.push(RationalPoint(
            w.0.into_iter()
                .map(|c| c / Rational::from_integer(m))
                .collect(),
        ));
    }
    out
}

/// Vertices of `x𝕗`, indexed by type.
pub fn alcove_vertices(sys: &CoxeterSystem, x: &AffineElement) -> Vec<RationalPoint> {
    base_vertices(sys).iter().map(|v| v.act(sys, x)).collect()
}
