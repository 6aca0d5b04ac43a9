//! Chains of cycles `B = D_1 ∪ ... ∪ D_r` and their whiskered versions.
//!
//! Consecutive segments share one edge `{w_i, u_i}`; the `w` vertices form one rail and
//! the `u` vertices the other. Labels are assigned left to right:
//!
//! * `D_1 = K_k`: the other vertices get `1..=k-2`, then `w_1 = k-1`, `u_1 = k`.
//! * `D_1 = C_4`: `w_0 = 1`, `u_0 = 2`, `w_1 = 3`, `u_1 = 4`.
//! * a later `C_3` adds its apex, a later `C_4` adds `w_i` then `u_i`.
//!
//! Whisker pendants follow in the order of `ChainSpec::whiskers`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Segment {
    /// `K_k`, allowed only as the first segment.
    Complete(usize),
    C3,
    C4,
}

impl Segment {
    fn is_c4(self) -> bool {
        self == Segment::C4
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Segment::Complete(k) => write!(f, "K{k}"),
            Segment::C3 => f.write_str("C3"),
            Segment::C4 => f.write_str("C4"),
        }
    }
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C3" => Ok(Segment::C3),
            "C4" => Ok(Segment::C4),
            _ => s
                .strip_prefix('K')
                .and_then(|k| k.parse().ok())
                .map(Segment::Complete)
                .ok_or_else(|| Error::Parse(format!("unknown segment {s:?}"))),
        }
    }
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How the shared edge `{w_i, u_i}` of `D_i` and `D_{i+1}` continues inside `D_{i+1}`:
/// `w_merge` means `w_{i+1} = w_i`, `u_merge` means `u_{i+1} = u_i`, neither means both
/// rails advance along edges of `D_{i+1}`.
///
/// An interior `C3` needs exactly one merge; a `C4` and a final `C3` take none.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Join {
    #[serde(default)]
    pub w_merge: bool,
    #[serde(default)]
    pub u_merge: bool,
}

impl Join {
    pub const EDGE: Join = Join {
        w_merge: false,
        u_merge: false,
    };
    pub const W: Join = Join {
        w_merge: true,
        u_merge: false,
    };
    pub const U: Join = Join {
        w_merge: false,
        u_merge: true,
    };
}

/// Declarative description of a whiskered chain of cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub segments: Vec<Segment>,
    /// One entry per consecutive pair; empty means all [`Join::EDGE`].
    #[serde(default)]
    pub joins: Vec<Join>,
    /// Whisker anchors as vertex labels of the block.
    #[serde(default, rename = "whiskers")]
    pub whiskers: Vec<usize>,
}

/// The realized block together with its segment and rail structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLayout {
    pub block: Graph,
    /// Vertex labels of each `D_i`, in order.
    pub segments: Vec<Vec<usize>>,
    /// `w[i]` for `i = 0..=r` where defined: `w_0` only when `D_1 = C_4`, `w_r` only
    /// when `D_r = C_4`.
    pub w: Vec<Option<usize>>,
    pub u: Vec<Option<usize>>,
}

impl ChainLayout {
    /// The `w` rail: vertices designated to carry whiskers.
    pub fn w_rail(&self) -> Vec<usize> {
        let mut rail: Vec<usize> = self.w.iter().flatten().copied().collect();
        rail.dedup();
        rail
    }

    pub fn u_rail(&self) -> Vec<usize> {
        let mut rail: Vec<usize> = self.u.iter().flatten().copied().collect();
        rail.dedup();
        rail
    }

    /// Number of segments containing `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.segments.iter().filter(|s| s.contains(&v)).count()
    }
}

impl ChainSpec {
    pub fn new(segments: Vec<Segment>, joins: Vec<Join>, whiskers: Vec<usize>) -> Self {
        ChainSpec {
            segments,
            joins,
            whiskers,
        }
    }

    /// A spec whose whiskers sit on every `w`-rail vertex.
    pub fn on_rail(segments: Vec<Segment>, joins: Vec<Join>) -> Result<Self> {
        let mut spec = ChainSpec::new(segments, joins, Vec::new());
        spec.whiskers = spec.layout()?.w_rail();
        Ok(spec)
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub(crate) fn join(&self, i: usize) -> Result<Join> {
        let r = self.segments.len();
        if self.joins.is_empty() {
            return Ok(Join::EDGE);
        }
        if self.joins.len() != r.saturating_sub(1) {
            return Err(Error::InvalidChain(format!(
                "{} segments need {} joins, got {}",
                r,
                r.saturating_sub(1),
                self.joins.len()
            )));
        }
        Ok(self.joins[i])
    }

    /// Realizes the block `B`.
    pub fn layout(&self) -> Result<ChainLayout> {
        let r = self.segments.len();
        if r == 0 {
            return Err(Error::InvalidChain("no segments".into()));
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut segments = Vec::with_capacity(r);
        let mut w = vec![None; r + 1];
        let mut u = vec![None; r + 1];
        let mut next;
        match self.segments[0] {
            s @ (Segment::Complete(_) | Segment::C3) if k_of(s) >= 3 => {
                let k = k_of(s);
                for a in 1..=k {
                    for b in a + 1..=k {
                        edges.push((a, b));
                    }
                }
                segments.push((1..=k).collect());
                if r > 1 {
                    w[1] = Some(k - 1);
                    u[1] = Some(k);
                }
                next = k;
            }
            Segment::C4 => {
                let (w0, u0, w1, u1) = (1, 2, 3, 4);
                edges.extend([(w0, u0), (w0, w1), (u0, u1), (w1, u1)]);
                segments.push(vec![1, 2, 3, 4]);
                w[0] = Some(w0);
                u[0] = Some(u0);
                w[1] = Some(w1);
                u[1] = Some(u1);
                next = 4;
            }
            s => {
                return Err(Error::InvalidChain(format!(
                    "complete segment {s} needs at least 3 vertices"
                )));
            }
        }
        for i in 1..r {
            // D_{i+1} in 1-based terms; shared edge with D_i is {w_i, u_i}
            let join = self.join(i - 1)?;
            let (wi, ui) = (w[i].expect("rail defined"), u[i].expect("rail defined"));
            let last = i + 1 == r;
            match self.segments[i] {
                Segment::C3 => {
                    next += 1;
                    let apex = next;
                    edges.extend([(wi, apex), (ui, apex)]);
                    segments.push(vec![wi, ui, apex]);
                    match (join.w_merge, join.u_merge, last) {
                        (false, false, true) => {}
                        (true, false, false) => {
                            w[i + 1] = Some(wi);
                            u[i + 1] = Some(apex);
                        }
                        (false, true, false) => {
                            w[i + 1] = Some(apex);
                            u[i + 1] = Some(ui);
                        }
                        (_, _, true) => {
                            return Err(Error::InvalidChain(format!(
                                "segment {} is a final C3 and takes no merge flag",
                                i + 1
                            )))
                        }
                        _ => {
                            return Err(Error::InvalidChain(format!(
                                "interior C3 segment {} needs exactly one merge flag",
                                i + 1
                            )))
                        }
                    }
                }
                Segment::C4 => {
                    if join.w_merge || join.u_merge {
                        return Err(Error::InvalidChain(format!(
                            "C4 segment {} cannot merge a rail",
                            i + 1
                        )));
                    }
                    let (wn, un) = (next + 1, next + 2);
                    next += 2;
                    edges.extend([(wi, wn), (ui, un), (wn, un)]);
                    segments.push(vec![wi, ui, wn, un]);
                    w[i + 1] = Some(wn);
                    u[i + 1] = Some(un);
                }
                Segment::Complete(k) => {
                    return Err(Error::InvalidChain(format!(
                        "complete segment K{k} is only allowed first, found at position {}",
                        i + 1
                    )));
                }
            }
        }
        let block = Graph::from_edges(next, edges)?;
        Ok(ChainLayout {
            block,
            segments,
            w,
            u,
        })
    }
}

fn k_of(s: Segment) -> usize {
    match s {
        Segment::Complete(k) => k,
        Segment::C3 => 3,
        Segment::C4 => 4,
    }
}

/// The block `B` of a chain spec.
pub fn chain_of_cycles(spec: &ChainSpec) -> Result<Graph> {
    Ok(spec.layout()?.block)
}

/// `B` with a pendant attached at every anchor of `spec.whiskers`.
pub fn whiskered_chain(spec: &ChainSpec) -> Result<Graph> {
    chain_of_cycles(spec)?.whisker(&spec.whiskers)
}

/// One of the seven structural conditions a whiskered chain must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
    Vii,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "i",
            Condition::Ii => "ii",
            Condition::Iii => "iii",
            Condition::Iv => "iv",
            Condition::V => "v",
            Condition::Vi => "vi",
            Condition::Vii => "vii",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub detail: String,
}

fn violation(condition: Condition, detail: impl Into<String>) -> Violation {
    Violation {
        condition,
        detail: detail.into(),
    }
}

/// Distinct violated conditions, in numeral order.
pub fn violated_conditions(violations: &[Violation]) -> Vec<Condition> {
    let mut c: Vec<Condition> = violations.iter().map(|v| v.condition).collect();
    c.sort();
    c.dedup();
    c
}

/// Checks conditions (i)-(vii). An empty result means the whiskered chain belongs to
/// the Cohen-Macaulay family the regularity formula covers.
///
/// Whiskers off the `w` rail are reported under (iii): they create cut vertices
/// outside the shared edges. A lone complete segment is exempt, since it is then a
/// whiskered complete graph.
pub fn validate_setup(spec: &ChainSpec) -> Vec<Violation> {
    use Condition::*;
    let mut out = Vec::new();
    let r = spec.segments.len();
    if r == 0 {
        out.push(violation(I, "no segments"));
        return out;
    }
    match spec.segments[0] {
        Segment::Complete(k) if k < 3 => out.push(violation(I, format!("D_1 = K{k} needs k >= 3"))),
        _ => {}
    }
    for (i, s) in spec.segments.iter().enumerate().skip(1) {
        if let Segment::Complete(k) = s {
            out.push(violation(I, format!("D_{} = K{k} must be C3 or C4", i + 1)));
        }
    }
    for i in 0..r.saturating_sub(1) {
        if spec.segments[i].is_c4() && spec.segments[i + 1].is_c4() {
            out.push(violation(
                Ii,
                format!("D_{} = C4 is followed by D_{} = C4", i + 1, i + 2),
            ));
        }
    }
    if !out.iter().any(|v| v.condition == I) {
        if let Err(e) = spec.layout() {
            out.push(violation(Iv, e.to_string()));
        }
    }
    if !out.is_empty() && out.iter().any(|v| matches!(v.condition, I | Iv)) {
        return out;
    }
    let layout = spec.layout().expect("structure checked above");
    let n = layout.block.n();
    let mut whiskered = vec![false; n + 1];
    for &a in &spec.whiskers {
        if a == 0 || a > n {
            out.push(violation(
                Iii,
                format!("whisker anchor {a} is not a vertex of B"),
            ));
            return out;
        }
        if whiskered[a] {
            out.push(violation(Iii, format!("whisker anchor {a} repeated")));
            return out;
        }
        whiskered[a] = true;
    }
    let cut = |v: Option<usize>| v.is_some_and(|v| whiskered[v]);

    for i in 1..r {
        let (wi, ui) = (layout.w[i], layout.u[i]);
        if !cut(wi) {
            out.push(violation(
                Iii,
                format!("w_{i} = {} is not a cut vertex", wi.unwrap_or(0)),
            ));
        }
        if cut(ui) {
            out.push(violation(
                Iii,
                format!("u_{i} = {} is a cut vertex", ui.unwrap_or(0)),
            ));
        }
    }
    let lone_complete = r == 1 && !spec.segments[0].is_c4();
    if !lone_complete {
        let rail = layout.w_rail();
        let u_rail = layout.u_rail();
        for &a in &spec.whiskers {
            if !rail.contains(&a) && !u_rail.contains(&a) {
                out.push(violation(
                    Iii,
                    format!("whisker at {a}, which is on neither rail"),
                ));
            }
        }
    }
    if spec.segments[0].is_c4() {
        for (name, v, want) in [
            ("w_0", layout.w[0], true),
            ("w_1", layout.w[1], true),
            ("u_0", layout.u[0], false),
            ("u_1", layout.u[1], false),
        ] {
            if cut(v) != want {
                out.push(violation(
                    V,
                    format!(
                        "{name} = {} {}",
                        v.unwrap_or(0),
                        if want {
                            "is not a cut vertex"
                        } else {
                            "is a cut vertex"
                        }
                    ),
                ));
            }
        }
    }
    if spec.segments[r - 1].is_c4() {
        let (a, b) = (r - 1, r);
        for (name, v, want) in [
            (format!("w_{a}"), layout.w[a], true),
            (format!("w_{b}"), layout.w[b], true),
            (format!("u_{a}"), layout.u[a], false),
            (format!("u_{b}"), layout.u[b], false),
        ] {
            if cut(v) != want {
                out.push(violation(
                    Vi,
                    format!(
                        "{name} = {} {}",
                        v.unwrap_or(0),
                        if want {
                            "is not a cut vertex"
                        } else {
                            "is a cut vertex"
                        }
                    ),
                ));
            }
        }
    }
    for (v, &is_cut) in whiskered.iter().enumerate().skip(1) {
        let count = layout.multiplicity(v);
        let in_c4 = layout
            .segments
            .iter()
            .zip(&spec.segments)
            .any(|(verts, s)| s.is_c4() && verts.contains(&v));
        if (count >= 4 || (count == 3 && in_c4)) && !is_cut {
            out.push(violation(
                Vii,
                format!("vertex {v} lies in {count} segments but is not a cut vertex"),
            ));
        }
    }
    out
}

/// The first cut vertex: `w_0` when `D_1 = C_4`, otherwise `w_1`, or the smallest
/// anchor of a lone complete segment.
pub fn first_cut_vertex(spec: &ChainSpec) -> Result<Option<usize>> {
    let layout = spec.layout()?;
    if spec.segments[0].is_c4() {
        return Ok(layout.w[0].filter(|w| spec.whiskers.contains(w)));
    }
    if spec.segments.len() == 1 {
        return Ok(spec.whiskers.iter().min().copied());
    }
    Ok(layout.w[1].filter(|w| spec.whiskers.contains(w)))
}
