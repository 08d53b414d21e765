use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::SigmaR;
use crate::algebra::{int, json::rat_str, rat, rat_to_string, to_i64, BigRat};

/// An irreducible composition factor, identified by its K-types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k")]
pub enum CompFactorR {
    /// `F_k`: K-types `−(k−1), −(k−3), …, k−1`.
    FiniteDim(i64),
    /// `D_k`: K-types `k+1, k+3, …`.
    DiscretePlus(i64),
    /// `D_{−k}`: K-types `−(k+1), −(k+3), …`.
    DiscreteMinus(i64),
    /// `D_+`: K-types `1, 3, …`.
    LimitPlus,
    /// `D_−`: K-types `−1, −3, …`.
    LimitMinus,
    /// The whole (irreducible) space.
    FullIrreducible,
}

impl CompFactorR {
    /// Whether K-type `n` occurs, given that `n` has the right parity.
    pub fn contains(self, n: i64) -> bool {
        match self {
            CompFactorR::FiniteDim(k) => n.abs() < k,
            CompFactorR::DiscretePlus(k) => n > k,
            CompFactorR::DiscreteMinus(k) => n < -k,
            CompFactorR::LimitPlus => n > 0,
            CompFactorR::LimitMinus => n < 0,
            CompFactorR::FullIrreducible => true,
        }
    }

    pub fn label(self) -> String {
        match self {
            CompFactorR::FiniteDim(k) => format!("F{k}"),
            CompFactorR::DiscretePlus(k) => format!("D{k}"),
            CompFactorR::DiscreteMinus(k) => format!("D-{k}"),
            CompFactorR::LimitPlus => "D+".into(),
            CompFactorR::LimitMinus => "D-".into(),
            CompFactorR::FullIrreducible => "H".into(),
        }
    }
}

/// A K-type predicate given as a union of composition factors, or the whole
/// space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubmoduleR {
    Full,
    Proper(Vec<CompFactorR>),
}

impl SubmoduleR {
    pub fn contains(&self, n: i64) -> bool {
        match self {
            SubmoduleR::Full => true,
            SubmoduleR::Proper(fs) => fs.iter().any(|f| f.contains(n)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            SubmoduleR::Full => "Full".into(),
            SubmoduleR::Proper(fs) => fs.iter().map(|f| f.label()).collect::<Vec<_>>().join("+"),
        }
    }
}

/// Layered composition series of a reducible principal series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSeriesR {
    pub sigma: SigmaR,
    #[serde(with = "rat_str")]
    pub lambda: BigRat,
    /// Socle first.
    pub layers: Vec<Vec<CompFactorR>>,
    pub proper_submodules: Vec<Vec<CompFactorR>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum SeriesVerdict {
    Irreducible,
    Reducible(CompositionSeriesR),
}

/// `2λ` when the series at `(σ, λ)` is reducible.
fn reducible_k(sigma: SigmaR, lambda: &BigRat) -> Option<i64> {
    let two_l = to_i64(&(lambda * int(2)))?;
    let ok = match sigma {
        SigmaR::Plus => two_l.rem_euclid(2) == 1,
        SigmaR::Minus => two_l.rem_euclid(2) == 0,
    };
    ok.then_some(two_l)
}

/// Composition series of the principal series `H^{σ,λ}` for real rational
/// `λ`: reducible exactly for `λ ∈ ½+ℤ` (Plus) and `λ ∈ ℤ` (Minus).
pub fn composition_series_r(sigma: SigmaR, lambda: &BigRat) -> SeriesVerdict {
    let Some(two_l) = reducible_k(sigma, lambda) else {
        return SeriesVerdict::Irreducible;
    };
    let k = two_l.abs();
    use CompFactorR::*;
    let (layers, proper_submodules) = if two_l == 0 {
        (vec![vec![LimitMinus, LimitPlus]], vec![vec![LimitPlus], vec![LimitMinus]])
    } else if two_l > 0 {
        (
            vec![vec![DiscreteMinus(k), DiscretePlus(k)], vec![FiniteDim(k)]],
            vec![vec![DiscreteMinus(k)], vec![DiscretePlus(k)], vec![DiscreteMinus(k), DiscretePlus(k)]],
        )
    } else {
        (
            vec![vec![FiniteDim(k)], vec![DiscreteMinus(k), DiscretePlus(k)]],
            vec![vec![FiniteDim(k)], vec![FiniteDim(k), DiscreteMinus(k)], vec![FiniteDim(k), DiscretePlus(k)]],
        )
    };
    SeriesVerdict::Reducible(CompositionSeriesR { sigma, lambda: lambda.clone(), layers, proper_submodules })
}

/// Smallest closed invariant submodule of `H^{σ,λ}` containing K-type `m`,
/// where `σ` is the parity of `m`.
pub fn smallest_submodule_r(m: i64, lambda: &BigRat) -> SubmoduleR {
    match composition_series_r(SigmaR::of_ktype(m), lambda) {
        SeriesVerdict::Irreducible => SubmoduleR::Full,
        SeriesVerdict::Reducible(s) => s
            .proper_submodules
            .iter()
            .filter(|fs| fs.iter().any(|f| f.contains(m)))
            .min_by_key(|fs| fs.len())
            .map(|fs| SubmoduleR::Proper(fs.clone()))
            .unwrap_or(SubmoduleR::Full),
    }
}

/// Reducibility points `λ` of the series containing K-type parity `sigma`,
/// with `|λ| ≤ bound`, in increasing order.
pub fn reducibility_points_r(sigma: SigmaR, bound: &BigRat) -> Vec<BigRat> {
    let mut out = Vec::new();
    let start = match sigma {
        SigmaR::Plus => rat(1, 2),
        SigmaR::Minus => BigRat::zero(),
    };
    let mut l = start;
    while &l <= bound {
        if !l.is_zero() {
            out.push(-l.clone());
        }
        out.push(l.clone());
        l += int(1);
    }
    out.sort();
    out
}

/// A box picture: the layered series with the submodule generated by K-type
/// `m` highlighted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxPictureR {
    pub m: i64,
    #[serde(with = "rat_str")]
    pub lambda: BigRat,
    /// Socle first; an irreducible point is a single box `H`.
    pub boxes: Vec<Vec<CompFactorR>>,
    pub highlighted: Vec<CompFactorR>,
}

pub fn box_picture_r(m: i64, lambda: &BigRat) -> BoxPictureR {
    let boxes = match composition_series_r(SigmaR::of_ktype(m), lambda) {
        SeriesVerdict::Irreducible => vec![vec![CompFactorR::FullIrreducible]],
        SeriesVerdict::Reducible(s) => s.layers,
    };
    let highlighted = match smallest_submodule_r(m, lambda) {
        SubmoduleR::Full => boxes.iter().flatten().copied().collect(),
        SubmoduleR::Proper(fs) => fs,
    };
    BoxPictureR { m, lambda: lambda.clone(), boxes, highlighted }
}

impl BoxPictureR {
    pub fn is_highlighted(&self, f: CompFactorR) -> bool {
        self.highlighted.contains(&f)
    }

    /// Graphviz rendering: one subgraph per layer, highlighted boxes filled
    /// blue, edges from each layer to the one above.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph box_m{}_lambda{} {{", self.m, dot_id(&self.lambda));
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=box];");
        for (i, layer) in self.boxes.iter().enumerate() {
            let _ = writeln!(s, "  subgraph layer{i} {{");
            let _ = writeln!(s, "    rank=same;");
            for f in layer {
                let attrs = if self.is_highlighted(*f) { " [style=filled, fillcolor=blue]" } else { "" };
                let _ = writeln!(s, "    \"{}\"{attrs};", f.label());
            }
            let _ = writeln!(s, "  }}");
        }
        for pair in self.boxes.windows(2) {
            for a in &pair[0] {
                for b in &pair[1] {
                    let _ = writeln!(s, "  \"{}\" -> \"{}\";", a.label(), b.label());
                }
            }
        }
        s.push_str("}\n");
        s
    }

    /// Fixed-width text rendering with the socle at the bottom. Highlighted
    /// boxes are wrapped in `*`.
    pub fn to_ascii(&self) -> String {
        let cell = |f: &CompFactorR| {
            if self.is_highlighted(*f) {
                format!("*{}*", f.label())
            } else {
                f.label()
            }
        };
        let w = self.boxes.iter().flatten().map(|f| f.label().len() + 2).max().unwrap_or(1);
        let cols = self.boxes.iter().map(Vec::len).max().unwrap_or(1);
        let inner = cols * w + (cols - 1);
        let border = |n: usize| {
            let seg = (inner - (n - 1)) / n;
            let mut line = String::from("+");
            for i in 0..n {
                let width = if i + 1 == n { inner - (n - 1) - seg * (n - 1) } else { seg };
                line.push_str(&"-".repeat(width));
                line.push('+');
            }
            line
        };
        let rows: Vec<&Vec<CompFactorR>> = self.boxes.iter().rev().collect();
        let mut lines = vec![border(rows[0].len())];
        for (r, layer) in rows.iter().enumerate() {
            let n = layer.len();
            let seg = (inner - (n - 1)) / n;
            let mut row = String::from("|");
            for (i, f) in layer.iter().enumerate() {
                let width = if i + 1 == n { inner - (n - 1) - seg * (n - 1) } else { seg };
                row.push_str(&format!("{:^width$}|", cell(f)));
            }
            lines.push(row);
            let below = rows.get(r + 1).map_or(n, |l| l.len());
            lines.push(border(n.max(below)));
        }
        let mut out = format!("m={} lambda={}\n", self.m, rat_to_string(&self.lambda));
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

fn dot_id(r: &BigRat) -> String {
    rat_to_string(r).replace('-', "m").replace('/', "_")
}
