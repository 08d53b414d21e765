//! Grids of classification verdicts.
//!
//! For `SL(2,C)` every reducible point `(σ, λ)` lies in the orbit
//! `{(σ,λ), (−σ,−λ), (λ,σ), (−λ,−σ)}`; points sharing an orbit share an id.
//! The two vertices with `|σ| > |λ|` are the swapped ("dual") parameters.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{int, json::rat_str, rat, BigRat};
use crate::sl2c::{diamond, reducibility_c, VerdictC};
use crate::sl2r::{composition_series_r, SeriesVerdict, SigmaR};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    /// `H^{σ,λ}` is reducible.
    Reducible,
    /// `(λ, σ)` is reducible: same parity, `|σ| > |λ|`, `σ ≠ 0`.
    Dual,
    Irreducible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasPointC {
    pub sigma: i64,
    pub lambda: i64,
    pub class: PointClass,
    pub orbit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictC>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitC {
    pub id: usize,
    /// Sorted `(σ, λ)` pairs.
    pub vertices: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasC {
    pub sigma_max: i64,
    pub lambda_max: i64,
    /// Sorted by `(σ, λ)`.
    pub points: Vec<AtlasPointC>,
    pub orbits: Vec<OrbitC>,
}

/// Integer grid `|σ| ≤ sigma_max`, `|λ| ≤ lambda_max`.
pub fn atlas_c(sigma_max: i64, lambda_max: i64) -> AtlasC {
    let in_grid = |(s, l): (i64, i64)| s.abs() <= sigma_max && l.abs() <= lambda_max;

    let mut keys: Vec<Vec<(i64, i64)>> = Vec::new();
    for s in -sigma_max..=sigma_max {
        for l in -lambda_max..=lambda_max {
            if let Ok(d) = diamond(s, &int(l)) {
                let key: Vec<_> = d.orbit_key().into_iter().filter(|&v| in_grid(v)).collect();
                if !keys.contains(&key) {
                    keys.push(key);
                }
            }
        }
    }
    keys.sort();
    let orbits: Vec<OrbitC> = keys.into_iter().enumerate().map(|(id, vertices)| OrbitC { id, vertices }).collect();
    let orbit_of: BTreeMap<(i64, i64), usize> =
        orbits.iter().flat_map(|o| o.vertices.iter().map(move |&v| (v, o.id))).collect();

    let grid: Vec<(i64, i64)> =
        (-sigma_max..=sigma_max).flat_map(|s| (-lambda_max..=lambda_max).map(move |l| (s, l))).collect();
    // collect() on an indexed parallel iterator keeps grid order
    let points = grid
        .into_par_iter()
        .map(|(s, l)| {
            let r = reducibility_c(s, &int(l));
            let class = if r.is_reducible() {
                PointClass::Reducible
            } else if reducibility_c(l, &int(s)).is_reducible() {
                PointClass::Dual
            } else {
                PointClass::Irreducible
            };
            AtlasPointC {
                sigma: s,
                lambda: l,
                class,
                orbit: orbit_of.get(&(s, l)).copied(),
                verdict: r.is_reducible().then_some(r.verdict),
            }
        })
        .collect();
    AtlasC { sigma_max, lambda_max, points, orbits }
}

impl AtlasC {
    pub fn point(&self, sigma: i64, lambda: i64) -> Option<&AtlasPointC> {
        self.points.iter().find(|p| p.sigma == sigma && p.lambda == lambda)
    }

    /// Graphviz rendering with pinned positions `(x, y) = (λ, σ)`; reducible
    /// points black, dual points gray, diamond arrows between them.
    /// Output is deterministic.
    pub fn to_dot(&self) -> String {
        let id = |s: i64, l: i64| format!("s{}_l{}", s, l).replace('-', "m");
        let mut out = String::new();
        let _ = writeln!(out, "digraph atlas_sl2c {{");
        let _ = writeln!(out, "  node [shape=circle, style=filled, fixedsize=true, width=0.3, fontsize=8];");
        for p in self.points.iter().filter(|p| p.class != PointClass::Irreducible) {
            let color = if p.class == PointClass::Reducible { "black" } else { "gray" };
            let orbit = p.orbit.map(|o| format!(", orbit={o}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "  {} [pos=\"{},{}!\", fillcolor={color}, label=\"\", tooltip=\"({},{})\"{orbit}];",
                id(p.sigma, p.lambda),
                p.lambda,
                p.sigma,
                p.sigma,
                p.lambda
            );
        }
        let mut edges = Vec::new();
        for p in self.points.iter().filter(|p| p.class == PointClass::Reducible && p.lambda > 0) {
            let d = diamond(p.sigma, &int(p.lambda)).expect("reducible");
            for a in d.arrows {
                let (f, t) = (a.from, a.to);
                let inside = |(s, l): (i64, i64)| s.abs() <= self.sigma_max && l.abs() <= self.lambda_max;
                if inside(f) && inside(t) {
                    edges.push((id(f.0, f.1), id(t.0, t.1), a.label));
                }
            }
        }
        edges.sort();
        edges.dedup();
        for (f, t, label) in edges {
            let _ = writeln!(out, "  {f} -> {t} [label=\"{label}\"];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasPointR {
    pub sigma: SigmaR,
    #[serde(with = "rat_str")]
    pub lambda: BigRat,
    pub reducible: bool,
    /// Factor labels per layer, socle first; empty when irreducible.
    pub layers: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasR {
    pub points: Vec<AtlasPointR>,
}

/// Both principal series at `λ ∈ {−L, −L+½, …, L}`.
pub fn atlas_r(lambda_max: i64) -> AtlasR {
    let mut points = Vec::new();
    for sigma in [SigmaR::Plus, SigmaR::Minus] {
        for twice in -2 * lambda_max..=2 * lambda_max {
            let lambda = rat(twice, 2);
            let (reducible, layers) = match composition_series_r(sigma, &lambda) {
                SeriesVerdict::Irreducible => (false, Vec::new()),
                SeriesVerdict::Reducible(s) => {
                    (true, s.layers.iter().map(|l| l.iter().map(|f| f.label()).collect()).collect())
                }
            };
            points.push(AtlasPointR { sigma, lambda, reducible, layers });
        }
    }
    AtlasR { points }
}

impl AtlasR {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph atlas_sl2r {\n  node [shape=box, fontsize=8];\n");
        for p in &self.points {
            let y = if p.sigma == SigmaR::Plus { 1 } else { 0 };
            let label = if p.reducible {
                p.layers.iter().map(|l| l.join(" ")).collect::<Vec<_>>().join(" | ")
            } else {
                "irr".into()
            };
            let fill = if p.reducible { "black" } else { "white" };
            let fontcolor = if p.reducible { "white" } else { "black" };
            let _ = writeln!(
                out,
                "  \"{:?}_{}\" [pos=\"{},{}!\", label=\"{label}\", style=filled, fillcolor={fill}, fontcolor={fontcolor}];",
                p.sigma,
                crate::algebra::rat_to_string(&p.lambda),
                crate::algebra::to_f64(&p.lambda),
                y
            );
        }
        out.push_str("}\n");
        out
    }
}
