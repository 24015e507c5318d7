//! Browser bindings: property check, transformations and the vertices of
//! the set covering polyhedron for a clutter typed into the page.

use serde_json::json;
use wasm_bindgen::prelude::*;

use clutterlab::harness::{check_clutter, CheckOptions, Prop};
use clutterlab::polyhedra::{enumerate_q_vertices, format_rational};
use clutterlab::transform::{adjoin_whisker_edge, graft, parallelization};
use clutterlab::{parse_clutter, Clutter};

// Cheap enough to run on every keystroke.
const PROPS: [Prop; 8] =
    [Prop::Covers, Prop::Alpha0, Prop::Beta1, Prop::Konig, Prop::Pp, Prop::Ideal, Prop::Mfmc, Prop::Ntf];

fn parse(text: &str) -> Result<Clutter, String> {
    parse_clutter(text).map_err(|e| e.to_string())
}

pub fn check_json(text: &str) -> Result<String, String> {
    let c = parse(text)?;
    let opts = CheckOptions { props: PROPS.to_vec(), max_w: 2, max_power: 2, ..CheckOptions::default() };
    let mut r = check_clutter(&c, &[], &opts).map_err(|e| e.to_string())?;
    r.timings_us.clear();
    serde_json::to_string_pretty(&r).map_err(|e| e.to_string())
}

pub fn transform_text(op: &str, arg: &str, text: &str) -> Result<String, String> {
    let c = parse(text)?;
    let out = match op {
        "graft" => graft(&c),
        "parallelize" => {
            let w = arg
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad weight '{t}'")))
                .collect::<Result<Vec<_>, _>>()?;
            parallelization(&c, &w)
        }
        "whisker" => {
            let v = c.index_of(arg.trim()).map_err(|e| e.to_string())?;
            adjoin_whisker_edge(&c, v, 1)
        }
        _ => return Err(format!("unknown operation '{op}'")),
    };
    out.map(|c| c.to_text()).map_err(|e| e.to_string())
}

pub fn vertices_json(text: &str) -> Result<String, String> {
    let c = parse(text)?;
    let vs = enumerate_q_vertices(&c, 10).map_err(|e| e.to_string())?;
    let rows: Vec<_> = vs
        .vertices
        .iter()
        .map(|v| {
            let integral = v.iter().all(|x| x.is_integer());
            json!({ "x": v.iter().map(format_rational).collect::<Vec<_>>(), "integral": integral })
        })
        .collect();
    Ok(json!({ "labels": c.labels(), "vertices": rows }).to_string())
}

#[wasm_bindgen]
pub fn check(text: &str) -> Result<String, JsValue> {
    check_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn transform(op: &str, arg: &str, text: &str) -> Result<String, JsValue> {
    transform_text(op, arg, text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn vertices(text: &str) -> Result<String, JsValue> {
    vertices_json(text).map_err(|e| JsValue::from_str(&e))
}
