//! WebAssembly bindings for the browser demo in `www/`.

pub mod plot;

use wasm_bindgen::prelude::*;

/// A sampled curve handed to JavaScript.
#[wasm_bindgen]
pub struct Plot(plot::Series);

#[wasm_bindgen]
impl Plot {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> Vec<f64> {
        self.0.x.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn y(&self) -> Vec<f64> {
        self.0.y.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn marks(&self) -> Vec<f64> {
        self.0.marks.clone()
    }

    #[wasm_bindgen(getter, js_name = statNames)]
    pub fn stat_names(&self) -> Vec<String> {
        self.0.stats.iter().map(|(k, _)| k.to_string()).collect()
    }

    #[wasm_bindgen(getter, js_name = statValues)]
    pub fn stat_values(&self) -> Vec<f64> {
        self.0.stats.iter().map(|(_, v)| *v).collect()
    }
}

fn js<T>(r: splinequad::Result<T>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = presetKnots)]
pub fn preset_knots(kind: &str, n: usize) -> Result<Vec<f64>, JsError> {
    js(plot::preset_knots(kind, n))
}

#[wasm_bindgen(js_name = peanoKernel)]
pub fn peano_kernel(n: usize, samples: usize) -> Result<Plot, JsError> {
    js(plot::kernel(n, samples)).map(Plot)
}

#[wasm_bindgen(js_name = lebesgueFunction)]
pub fn lebesgue_function(knots: &[f64], per_interval: usize) -> Result<Plot, JsError> {
    js(plot::lebesgue(knots, per_interval)).map(Plot)
}

#[wasm_bindgen(js_name = qiWeights)]
pub fn qi_weights(knots: &[f64], simplified_moments: bool) -> Result<Plot, JsError> {
    js(plot::weights(knots, simplified_moments)).map(Plot)
}
