//! SVG pictures of rank-2 apartments with a shadow, a target alcove and a
//! chimney's sector.
//!
//! Geometry stays exact until the final coordinate formatting. The Euclidean
//! embedding uses the Gram matrix `(α_i^∨, α_j^∨) = A[i][j] / d_j`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use crate::chimney::Chimney;
use crate::coxeter::{AffineElement, CoxeterSystem};
use crate::error::{Error, Result};
use crate::gallery::Shadow;
use crate::geometry::{
    alcove_side, alcove_vertices, wall_of_panel, AlcoveSide, Hyperplane, Panel, Rational,
    RationalPoint,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FillClass {
    Sector,
    Shadow,
    Base,
    Target,
}

impl FillClass {
    fn css(self) -> &'static str {
        match self {
            FillClass::Sector => "sector",
            FillClass::Shadow => "shadow",
            FillClass::Base => "base",
            FillClass::Target => "target",
        }
    }
}

/// Which alcoves to draw: those whose vertices all satisfy `|p|² ≤ r²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Window {
    /// Large enough to hold the base alcove, the target and the shadow.
    Auto,
    RadiusSquared(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneAlcove {
    pub element: AffineElement,
    pub vertices: Vec<RationalPoint>,
    pub classes: BTreeSet<FillClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneWall {
    pub hyperplane: Hyperplane,
    pub from: RationalPoint,
    pub to: RationalPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderScene {
    pub alcoves: Vec<SceneAlcove>,
    pub walls: Vec<SceneWall>,
    /// Shadow vertices, for vertex shadows.
    pub points: Vec<RationalPoint>,
}

struct Embedding {
    gram: Vec<Vec<Rational>>,
    e1: (f64, f64),
    e2: (f64, f64),
}

impl Embedding {
    fn new(sys: &CoxeterSystem) -> Self {
        let a = sys.cartan();
        let d = sys.symmetrizer();
        let gram: Vec<Vec<Rational>> = (0..2)
            .map(|i| (0..2).map(|j| Rational::new(a[i][j], d[j])).collect())
            .collect();
        let g = |i: usize, j: usize| gram[i][j].to_f64().expect("finite");
        let e1x = g(0, 0).sqrt();
        let e2x = g(0, 1) / e1x;
        let e2y = (g(1, 1) - e2x * e2x).sqrt();
        Self {
            gram,
            e1: (e1x, 0.0),
            e2: (e2x, e2y),
        }
    }

    fn norm_sq(&self, p: &RationalPoint) -> Rational {
        let mut s = Rational::zero();
        for i in 0..2 {
            for j in 0..2 {
                s += p.0[i] * self.gram[i][j] * p.0[j];
            }
        }
        s
    }

    /// SVG user coordinates (y grows downward).
    fn project(&self, p: &RationalPoint, scale: f64) -> (f64, f64) {
        let c0 = p.0[0].to_f64().expect("finite");
        let c1 = p.0[1].to_f64().expect("finite");
        let x = c0 * self.e1.0 + c1 * self.e2.0;
        let y = c0 * self.e1.1 + c1 * self.e2.1;
        (x * scale, -y * scale)
    }
}

fn fmt_coord(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

/// Alcove in the `(J, y)`-sector: after pulling back by `y⁻¹` it lies in the
/// slab `0 ≤ ⟨·, β⟩ ≤ 1` for `β ∈ Φ_J⁺` and below `H_{β,0}` otherwise.
pub fn in_sector(sys: &CoxeterSystem, ch: &Chimney, x: &AffineElement) -> bool {
    let pulled = sys.mul(&sys.inverse(ch.y()), x);
    let side = |r: usize, k: i64| alcove_side(sys, &pulled, Hyperplane { root: r, level: k });
    (0..sys.num_positive_roots()).all(|r| {
        if ch.in_parabolic(r) {
            side(r, 0) == AlcoveSide::Plus && side(r, 1) == AlcoveSide::Minus
        } else {
            side(r, 0) == AlcoveSide::Minus
        }
    })
}

/// Build the scene for `shadow` under `ch`, highlighting `𝕗` and `target`.
pub fn build_scene(
    sys: &CoxeterSystem,
    shadow: &Shadow,
    ch: &Chimney,
    target: Option<&AffineElement>,
    window: &Window,
) -> Result<RenderScene> {
    if sys.rank() != 2 {
        return Err(Error::UnsupportedRender(sys.rank()));
    }
    let emb = Embedding::new(sys);
    let radius_sq = match window {
        Window::RadiusSquared(r) => *r,
        Window::Auto => auto_radius(sys, &emb, shadow, target),
    };
    let inside = |x: &AffineElement| {
        alcove_vertices(sys, x)
            .iter()
            .all(|p| emb.norm_sq(p) <= radius_sq)
    };

    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    if inside(&sys.identity()) {
        seen.insert(sys.identity());
        queue.push_back(sys.identity());
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..=2 {
            let y = sys.mul_generator(&x, i);
            if !seen.contains(&y) && inside(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }

    let draw_sector = ch.j().len() < sys.rank();
    let mut keyed: Vec<((usize, Vec<u8>), SceneAlcove)> = seen
        .into_iter()
        .map(|x| {
            let mut classes = BTreeSet::new();
            if draw_sector && in_sector(sys, ch, &x) {
                classes.insert(FillClass::Sector);
            }
            if shadow.contains_alcove(&x) {
                classes.insert(FillClass::Shadow);
            }
            if x == sys.identity() {
                classes.insert(FillClass::Base);
            }
            if target == Some(&x) {
                classes.insert(FillClass::Target);
            }
            let alcove = SceneAlcove {
                vertices: alcove_vertices(sys, &x),
                element: x.clone(),
                classes,
            };
            (sys.sort_key(&x), alcove)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let alcoves: Vec<SceneAlcove> = keyed.into_iter().map(|(_, a)| a).collect();

    // Each wall is drawn once, spanning the panels of window alcoves on it.
    let mut on_wall: BTreeMap<Hyperplane, Vec<RationalPoint>> = BTreeMap::new();
    for a in &alcoves {
        for i in 0..=2 {
            let h = wall_of_panel(sys, &Panel::new(a.element.clone(), i));
            let pts = on_wall.entry(h).or_default();
            for (t, v) in a.vertices.iter().enumerate() {
                if t != i {
                    pts.push(v.clone());
                }
            }
        }
    }
    let walls = on_wall
        .into_iter()
        .filter_map(|(h, mut pts)| {
            pts.sort();
            let from = pts.first()?.clone();
            let to = pts.last()?.clone();
            Some(SceneWall {
                hyperplane: h,
                from,
                to,
            })
        })
        .collect();

    let points = match shadow {
        Shadow::Vertices(vs) => vs.iter().map(RationalPoint::from_coroot).collect(),
        Shadow::Alcoves(_) => Vec::new(),
    };
    Ok(RenderScene {
        alcoves,
        walls,
        points,
    })
}

fn auto_radius(
    sys: &CoxeterSystem,
    emb: &Embedding,
    shadow: &Shadow,
    target: Option<&AffineElement>,
) -> Rational {
    let mut max = Rational::zero();
    let mut consider = |p: &RationalPoint| {
        let n = emb.norm_sq(p);
        if n > max {
            max = n;
        }
    };
    let mut alcoves: Vec<AffineElement> = vec![sys.identity()];
    alcoves.extend(target.cloned());
    match shadow {
        Shadow::Alcoves(s) => alcoves.extend(s.iter().cloned()),
        Shadow::Vertices(vs) => vs
            .iter()
            .for_each(|v| consider(&RationalPoint::from_coroot(v))),
    }
    for x in &alcoves {
        alcove_vertices(sys, x).iter().for_each(&mut consider);
    }
    let highest = RationalPoint::from_coroot(&crate::coxeter::CorootVector(
        sys.coroot(sys.highest_root()).to_vec(),
    ));
    // Pad by a few coroot lengths so the picture has context around it.
    max * Rational::new(3, 2) + emb.norm_sq(&highest) * Rational::from_integer(2)
}

/// Render a deterministic SVG document.
pub fn render_svg(
    sys: &CoxeterSystem,
    shadow: &Shadow,
    ch: &Chimney,
    target: Option<&AffineElement>,
    window: &Window,
) -> Result<String> {
    let scene = build_scene(sys, shadow, ch, target, window)?;
    Ok(scene_to_svg(sys, &scene))
}

pub fn scene_to_svg(sys: &CoxeterSystem, scene: &RenderScene) -> String {
    let emb = Embedding::new(sys);
    let scale = 40.0;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for a in &scene.alcoves {
        for v in &a.vertices {
            let (x, y) = emb.project(v, scale);
            xs.push(x);
            ys.push(y);
        }
    }
    let min = |v: &[f64]| v.iter().copied().fold(0.0f64, f64::min) - 10.0;
    let max = |v: &[f64]| v.iter().copied().fold(0.0f64, f64::max) + 10.0;
    let (x0, y0) = (min(&xs), min(&ys));
    let (w, h) = (max(&xs) - x0, max(&ys) - y0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        fmt_coord(x0),
        fmt_coord(y0),
        fmt_coord(w),
        fmt_coord(h),
        fmt_coord(w),
        fmt_coord(h)
    );
    out.push_str(
        "<style>\
polygon{fill:#ffffff;stroke:none}\
polygon.sector{fill:#d6e6f5}\
polygon.shadow{fill:#202020}\
polygon.base{fill:#e8a317}\
polygon.target{stroke:#d62728;stroke-width:3}\
line{stroke:#8c8c8c;stroke-width:0.6}\
circle{fill:#202020}\
</style>\n",
    );
    out.push_str("<g class=\"alcoves\">\n");
    for a in &scene.alcoves {
        let pts: Vec<String> = a
            .vertices
            .iter()
            .map(|v| {
                let (x, y) = emb.project(v, scale);
                format!("{},{}", fmt_coord(x), fmt_coord(y))
            })
            .collect();
        let classes: Vec<&str> = a.classes.iter().map(|c| c.css()).collect();
        let _ = write!(out, r#"<polygon points="{}""#, pts.join(" "));
        if !classes.is_empty() {
            let _ = write!(out, r#" class="{}""#, classes.join(" "));
        }
        let _ = writeln!(
            out,
            r#"><title>{}</title></polygon>"#,
            sys.format_element(&a.element)
        );
    }
    out.push_str("</g>\n<g class=\"walls\">\n");
    for wall in &scene.walls {
        let (x1, y1) = emb.project(&wall.from, scale);
        let (x2, y2) = emb.project(&wall.to, scale);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt_coord(x1),
            fmt_coord(y1),
            fmt_coord(x2),
            fmt_coord(y2)
        );
    }
    out.push_str("</g>\n");
    if !scene.points.is_empty() {
        out.push_str("<g class=\"vertices\">\n");
        for p in &scene.points {
            let (x, y) = emb.project(p, scale);
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="4"/>"#,
                fmt_coord(x),
                fmt_coord(y)
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
