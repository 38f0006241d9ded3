//! Browser bindings for the shadow and count operations.
//!
//! Each exported function has a plain Rust counterpart in [`api`] so the
//! logic can be tested without a JavaScript host.

use wasm_bindgen::prelude::*;

pub mod api {
    use chimney::chimney::Chimney;
    use chimney::cosets::{count_parahoric, ParahoricFace};
    use chimney::coxeter::CoxeterSystem;
    use chimney::gallery::{shadow_alcove, shadow_vertex};
    use chimney::parse::{parse_coroot, parse_element, parse_index_set};
    use chimney::render::{render_svg, Window};

    fn setup(ty: &str, j: &str, y: &str) -> chimney::error::Result<(CoxeterSystem, Chimney)> {
        let sys = CoxeterSystem::from_label(ty)?;
        let j = parse_index_set(&sys, j)?;
        let y = parse_element(&sys, y)?;
        let ch = Chimney::new(&sys, &j, y)?;
        Ok((sys, ch))
    }

    pub fn alcove_shadow_svg(ty: &str, j: &str, y: &str, x: &str) -> Result<String, String> {
        let run = || {
            let (sys, ch) = setup(ty, j, y)?;
            let x = parse_element(&sys, x)?;
            let shadow = shadow_alcove(&sys, &ch, &x);
            render_svg(&sys, &shadow, &ch, Some(&x), &Window::Auto)
        };
        run().map_err(|e| e.to_string())
    }

    pub fn vertex_shadow_svg(ty: &str, j: &str, y: &str, lambda: &str) -> Result<String, String> {
        let run = || {
            let (sys, ch) = setup(ty, j, y)?;
            let lambda = parse_coroot(&sys, lambda)?;
            let shadow = shadow_vertex(&sys, &ch, &lambda)?;
            render_svg(&sys, &shadow, &ch, None, &Window::Auto)
        };
        run().map_err(|e| e.to_string())
    }

    /// Returns the count polynomial and, when `q >= 2`, its value at uniform `q`.
    pub fn count(
        ty: &str,
        j: &str,
        y: &str,
        x: &str,
        z: &str,
        q: u32,
    ) -> Result<(String, Option<i128>), String> {
        let run = || {
            let (sys, ch) = setup(ty, j, y)?;
            let x = parse_element(&sys, x)?;
            let z = parse_element(&sys, z)?;
            let empty = ParahoricFace::new(&sys, &[])?;
            let poly = count_parahoric(&sys, &ch, &empty, &empty, &x, &z)?;
            let value = (q >= 2).then(|| poly.evaluate_uniform(i64::from(q)));
            Ok::<_, chimney::error::Error>((poly.to_string(), value))
        };
        run().map_err(|e| e.to_string())
    }
}

#[wasm_bindgen(js_name = alcoveShadowSvg)]
pub fn alcove_shadow_svg(ty: &str, j: &str, y: &str, x: &str) -> Result<String, JsError> {
    api::alcove_shadow_svg(ty, j, y, x).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = vertexShadowSvg)]
pub fn vertex_shadow_svg(ty: &str, j: &str, y: &str, lambda: &str) -> Result<String, JsError> {
    api::vertex_shadow_svg(ty, j, y, lambda).map_err(|e| JsError::new(&e))
}

/// Formats as `"<polynomial>"` or `"<polynomial> = <value>"`.
#[wasm_bindgen(js_name = countPolynomial)]
pub fn count_polynomial(
    ty: &str,
    j: &str,
    y: &str,
    x: &str,
    z: &str,
    q: u32,
) -> Result<String, JsError> {
    let (poly, value) = api::count(ty, j, y, x, z, q).map_err(|e| JsError::new(&e))?;
    Ok(match value {
        Some(v) => format!("{poly} = {v}"),
        None => poly,
    })
}
