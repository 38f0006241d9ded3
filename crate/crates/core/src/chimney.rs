//! The `(J, y)`-chimney as a predicate on half-apartments, the orientation it
//! induces on the standard apartment, and chimney gates of panels.

use std::fmt;

use crate::coxeter::{AffineElement, CoxeterSystem};
use crate::error::{Error, Result};
use crate::geometry::{
    act_on_halfspace, halfspace_containing, wall_of_panel, HalfSpace, Panel, Side,
};

/// Sign assigned to an (alcove, panel) pair. `Plus` means the alcove lies on
/// the side of the panel facing away from the chimney.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Plus => Orientation::Minus,
            Orientation::Minus => Orientation::Plus,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Plus => "+",
            Orientation::Minus => "-",
        })
    }
}

/// The chimney `ξ_{J,y} = y·ξ_J` for a standard parabolic `J ⊆ [n]`.
#[derive(Debug, Clone)]
pub struct Chimney {
    j: Vec<usize>,
    y: AffineElement,
    y_inv: AffineElement,
    // in_j[r] for positive root r: r lies in the span of Δ_J.
    in_j: Vec<bool>,
}

impl Chimney {
    pub fn new(sys: &CoxeterSystem, j: &[usize], y: AffineElement) -> Result<Self> {
        let n = sys.rank();
        let mut mask = vec![false; n];
        for &i in j {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            mask[i - 1] = true;
        }
        let in_j = (0..sys.num_positive_roots())
            .map(|r| {
                sys.root(r)
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || mask[k])
            })
            .collect();
        let mut js: Vec<usize> = j.to_vec();
        js.sort_unstable();
        js.dedup();
        Ok(Self {
            j: js,
            y_inv: sys.inverse(&y),
            y,
            in_j,
        })
    }

    /// `J = [n]`, `y = id`: the chimney of half-apartments containing `𝕗`.
    pub fn base_alcove(sys: &CoxeterSystem) -> Self {
        let all: Vec<usize> = (1..=sys.rank()).collect();
        Self::new(sys, &all, sys.identity()).expect("full index set is valid")
    }

    /// `J = ∅`, `y = id`: the antidominant chamber at infinity.
    pub fn antidominant(sys: &CoxeterSystem) -> Self {
        Self::new(sys, &[], sys.identity()).expect("empty index set is valid")
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn y(&self) -> &AffineElement {
        &self.y
    }

    /// Positive roots in `Φ_J⁺`.
    pub fn in_parabolic(&self, root: usize) -> bool {
        self.in_j[root]
    }

    /// Membership of a half-apartment in `ξ_{J,y}`.
    ///
    /// After pulling back by `y⁻¹` to `(β, k, side)` with `β > 0`: for
    /// `β ∈ Φ_J⁺` the chimney holds `{≥ k}` for `k ≤ 0` and `{≤ k}` for
    /// `k ≥ 1`; for every other `β` it holds exactly the `{≤ k}` sides.
    pub fn contains(&self, sys: &CoxeterSystem, h: HalfSpace) -> bool {
        let pulled = act_on_halfspace(sys, &self.y_inv, h);
        if self.in_j[pulled.root] {
            match pulled.side {
                Side::Geq => pulled.level <= 0,
                Side::Leq => pulled.level >= 1,
            }
        } else {
            pulled.side == Side::Leq
        }
    }

    /// `φ_{J,y}(c, p)` for the type-`i` panel of `c𝕗`.
    pub fn orientation(&self, sys: &CoxeterSystem, c: &AffineElement, i: usize) -> Orientation {
        let wall = wall_of_panel(sys, &Panel::new(c.clone(), i));
        if self.contains(sys, halfspace_containing(sys, c, wall)) {
            Orientation::Minus
        } else {
            Orientation::Plus
        }
    }

    /// The alcove of `star(p)` on the negative side, `gate_{J,y}(p)`.
    pub fn gate(&self, sys: &CoxeterSystem, p: &Panel) -> Result<AffineElement> {
        let [a, b] = p.star(sys);
        let sa = self.orientation(sys, &a, p.ty);
        let sb = self.orientation(sys, &b, p.ty);
        match (sa, sb) {
            (Orientation::Minus, Orientation::Plus) => Ok(a),
            (Orientation::Plus, Orientation::Minus) => Ok(b),
            _ => Err(Error::Internal(format!(
                "panel of type {} has orientations ({sa}, {sb}) on its two sides",
                p.ty
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CorootVector;
    use crate::geometry::{alcove_side, gate_in_apartment, AlcoveSide, Hyperplane};

    fn sys(label: &str) -> CoxeterSystem {
        CoxeterSystem::from_label(label).unwrap()
    }

    #[test]
    fn antidominant_chimney_holds_every_leq_side() {
        let s = sys("A2");
        let ch = Chimney::antidominant(&s);
        for r in 0..s.num_positive_roots() {
            for k in -4..=4 {
                assert!(ch.contains(
                    &s,
                    HalfSpace {
                        root: r,
                        level: k,
                        side: Side::Leq
                    }
                ));
                assert!(!ch.contains(
                    &s,
                    HalfSpace {
                        root: r,
                        level: k,
                        side: Side::Geq
                    }
                ));
            }
        }
    }

    #[test]
    fn base_alcove_chimney_examples() {
        let s = sys("A2");
        let ch = Chimney::base_alcove(&s);
        assert!(ch.contains(
            &s,
            HalfSpace {
                root: 0,
                level: 0,
                side: Side::Geq
            }
        ));
        assert!(!ch.contains(
            &s,
            HalfSpace {
                root: 0,
                level: 0,
                side: Side::Leq
            }
        ));
    }

    #[test]
    fn translated_chimney_example() {
        let s = sys("A2");
        let y = s.translation(CorootVector(vec![1, 0]));
        let ch = Chimney::new(&s, &[1], y).unwrap();
        assert!(ch.contains(
            &s,
            HalfSpace {
                root: 0,
                level: 1,
                side: Side::Geq
            }
        ));
    }

    #[test]
    fn rejects_bad_index_sets() {
        let s = sys("A2");
        assert!(Chimney::new(&s, &[0], s.identity()).is_err());
        assert!(Chimney::new(&s, &[3], s.identity()).is_err());
    }

    #[test]
    fn orientation_examples() {
        let s = sys("A2");
        let ch = Chimney::base_alcove(&s);
        assert_eq!(
            ch.orientation(&s, &s.generator(0).unwrap(), 0),
            Orientation::Plus
        );
        assert_eq!(ch.orientation(&s, &s.identity(), 0), Orientation::Minus);
    }

    #[test]
    fn periodic_orientation_is_geq_side() {
        let s = sys("C2");
        let ch = Chimney::antidominant(&s);
        for c in s.ball(4) {
            for i in 0..=2 {
                let wall = wall_of_panel(&s, &Panel::new(c.clone(), i));
                let plus = alcove_side(&s, &c, wall) == AlcoveSide::Plus;
                assert_eq!(ch.orientation(&s, &c, i) == Orientation::Plus, plus);
            }
        }
    }

    #[test]
    fn chimney_gate_examples() {
        let s = sys("A2");
        let f = s.identity();
        let base = Chimney::base_alcove(&s);
        assert_eq!(base.gate(&s, &Panel::new(f.clone(), 0)).unwrap(), f);
        let anti = Chimney::antidominant(&s);
        assert_eq!(
            anti.gate(&s, &Panel::new(f, 1)).unwrap(),
            s.generator(1).unwrap()
        );
    }

    #[test]
    fn exactly_one_side_is_in_every_chimney() {
        for label in ["A2", "C2", "G2"] {
            let s = sys(label);
            let ys = s.ball(3);
            let subsets: Vec<Vec<usize>> = (0..1u32 << s.rank())
                .map(|m| (1..=s.rank()).filter(|i| m & (1 << (i - 1)) != 0).collect())
                .collect();
            for j in &subsets {
                for y in &ys {
                    let ch = Chimney::new(&s, j, y.clone()).unwrap();
                    for r in 0..s.num_positive_roots() {
                        for k in -4..=4 {
                            let h = Hyperplane { root: r, level: k };
                            let a = ch.contains(&s, h.half(Side::Geq));
                            let b = ch.contains(&s, h.half(Side::Leq));
                            assert!(a ^ b, "{label} J={j:?} root {r} level {k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chimney_is_equivariant() {
        let s = sys("A2");
        for y in s.ball(3) {
            let twisted = Chimney::new(&s, &[2], y.clone()).unwrap();
            let plain = Chimney::new(&s, &[2], s.identity()).unwrap();
            let yinv = s.inverse(&y);
            for r in 0..3 {
                for k in -3..=3 {
                    for side in [Side::Geq, Side::Leq] {
                        let h = HalfSpace {
                            root: r,
                            level: k,
                            side,
                        };
                        assert_eq!(
                            twisted.contains(&s, h),
                            plain.contains(&s, act_on_halfspace(&s, &yinv, h))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn alcove_chimney_orientation_is_separation_from_y() {
        let s = sys("C2");
        let all = [1, 2];
        for y in s.ball(3) {
            let ch = Chimney::new(&s, &all, y.clone()).unwrap();
            for c in s.ball(4) {
                for i in 0..=2 {
                    let p = Panel::new(c.clone(), i);
                    let wall = wall_of_panel(&s, &p);
                    let separated = alcove_side(&s, &c, wall) != alcove_side(&s, &y, wall);
                    assert_eq!(ch.orientation(&s, &c, i) == Orientation::Plus, separated);
                    assert_eq!(ch.gate(&s, &p).unwrap(), gate_in_apartment(&s, &p, &y));
                }
            }
        }
    }
}
