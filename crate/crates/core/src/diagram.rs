//! Planar diagrams of plat closures: PD and Gauss codes, Seifert circles,
//! the Goeritz determinant, and an SVG drawing.
//!
//! Strands sit at horizontal positions `1..2n` (left to right) and letters
//! are drawn top to bottom, `σ_i` crossing positions `i` and `i+1`. In a
//! positive letter the strand running from the upper left to the lower
//! right passes over. Caps join positions `2i−1, 2i` above and below.
//!
//! Each component is traversed from its top cap, starting at the left foot
//! heading down. Edges are numbered consecutively along the traversal. A
//! PD tuple starts at the incoming under-edge and lists the remaining edges
//! counterclockwise.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linalg::{determinant, IntMatrix};

/// Crossing corners in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Corner {
    Nw = 0,
    Sw = 1,
    Se = 2,
    Ne = 3,
}

impl Corner {
    fn from_index(i: usize) -> Corner {
        [Corner::Nw, Corner::Sw, Corner::Se, Corner::Ne][i % 4]
    }

    fn opposite(self) -> Corner {
        Corner::from_index(self as usize + 2)
    }

    fn xy(self) -> (i64, i64) {
        match self {
            Corner::Nw => (-1, 1),
            Corner::Sw => (-1, -1),
            Corner::Se => (1, -1),
            Corner::Ne => (1, 1),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Visit {
    crossing: usize,
    corner_in: Corner,
    over: bool,
    edge_in: usize,
    edge_out: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatDiagram {
    pub strands: usize,
    /// One tuple per crossing, in row order.
    pub pd: Vec<[usize; 4]>,
    /// One signed sequence per component with crossings; `+c` over, `−c` under.
    pub gauss: Vec<Vec<i64>>,
    /// Writhe sign of each crossing.
    pub crossing_signs: Vec<i8>,
    /// Components that meet no crossing at all.
    pub free_loops: usize,
    pub seifert_circles: usize,
}

impl PlatDiagram {
    pub fn crossings(&self) -> usize {
        self.pd.len()
    }

    pub fn components(&self) -> usize {
        self.gauss.len() + self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs.iter().map(|&s| s as i64).sum()
    }

    /// Seifert's bound `(c − s + 1)/2` on the genus of a knot diagram.
    pub fn seifert_genus_bound(&self) -> Option<usize> {
        (self.components() == 1).then(|| (self.crossings() + 1 - self.seifert_circles) / 2)
    }

    /// `|det|` of the link via a Goeritz matrix.
    pub fn determinant(&self) -> BigInt {
        if self.free_loops > 0 {
            let single = self.free_loops == 1 && self.pd.is_empty();
            return if single { BigInt::from(1) } else { BigInt::zero() };
        }
        goeritz_determinant(&self.pd)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Down,
    Up,
}

fn partner(p: usize) -> usize {
    if p % 2 == 1 {
        p + 1
    } else {
        p - 1
    }
}

/// Diagram of the freely reduced word.
pub fn plat_diagram(w: &BraidWord) -> Result<PlatDiagram> {
    let w = &w.free_reduce();
    let k = w.strands();
    if k % 2 == 1 {
        return Err(Error::OddStrands(k));
    }
    let letters = w.letters();
    let rows = letters.len();
    let touches = |t: usize, p: usize| letters[t].generator == p || letters[t].generator + 1 == p;

    let mut cap_seen = vec![false; k + 1];
    let mut components: Vec<Vec<Visit>> = Vec::new();
    let mut free_loops = 0;
    let mut next_edge = 1;
    for start in (1..=k).step_by(2) {
        if cap_seen[start] {
            continue;
        }
        let mut visits = Vec::new();
        let (mut r, mut p, mut dir) = (0usize, start, Dir::Down);
        loop {
            match dir {
                Dir::Down => match (r..rows).find(|&t| touches(t, p)) {
                    Some(t) => {
                        let g = letters[t].generator;
                        let corner_in = if p == g { Corner::Nw } else { Corner::Ne };
                        let over = (corner_in == Corner::Nw) == letters[t].positive;
                        visits.push(Visit { crossing: t, corner_in, over, edge_in: 0, edge_out: 0 });
                        p = if p == g { g + 1 } else { g };
                        r = t + 1;
                    }
                    None => {
                        p = partner(p);
                        dir = Dir::Up;
                        r = rows;
                    }
                },
                Dir::Up => match (0..r).rev().find(|&t| touches(t, p)) {
                    Some(t) => {
                        let g = letters[t].generator;
                        let corner_in = if p == g { Corner::Sw } else { Corner::Se };
                        let over = (corner_in == Corner::Se) == letters[t].positive;
                        visits.push(Visit { crossing: t, corner_in, over, edge_in: 0, edge_out: 0 });
                        p = if p == g { g + 1 } else { g };
                        r = t;
                    }
                    None => {
                        cap_seen[p] = true;
                        p = partner(p);
                        cap_seen[p] = true;
                        dir = Dir::Down;
                        r = 0;
                        if p == start {
                            break;
                        }
                    }
                },
            }
        }
        if visits.is_empty() {
            free_loops += 1;
            continue;
        }
        let v = visits.len();
        for (t, visit) in visits.iter_mut().enumerate() {
            visit.edge_in = next_edge + t;
            visit.edge_out = next_edge + (t + 1) % v;
        }
        next_edge += v;
        components.push(visits);
    }

    let mut labels = vec![[0usize; 4]; rows];
    let mut under_in = vec![Corner::Nw; rows];
    let mut dirs: Vec<[Option<(i64, i64)>; 2]> = vec![[None, None]; rows];
    for visit in components.iter().flatten() {
        let c = visit.crossing;
        labels[c][visit.corner_in as usize] = visit.edge_in;
        labels[c][visit.corner_in.opposite() as usize] = visit.edge_out;
        let (x0, y0) = visit.corner_in.xy();
        let (x1, y1) = visit.corner_in.opposite().xy();
        dirs[c][visit.over as usize] = Some((x1 - x0, y1 - y0));
        if !visit.over {
            under_in[c] = visit.corner_in;
        }
    }
    let pd = (0..rows)
        .map(|c| {
            let s = under_in[c] as usize;
            [0, 1, 2, 3].map(|j| labels[c][Corner::from_index(s + j) as usize])
        })
        .collect();
    let crossing_signs = dirs
        .iter()
        .map(|d| {
            let (o, u) = (d[1].expect("over visit"), d[0].expect("under visit"));
            if o.0 * u.1 - o.1 * u.0 > 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    let gauss = components
        .iter()
        .map(|vs| vs.iter().map(|v| if v.over { v.crossing as i64 + 1 } else { -(v.crossing as i64 + 1) }).collect())
        .collect();

    // oriented smoothing: incoming under joins outgoing over and vice versa
    let edges = next_edge - 1;
    let mut succ = vec![0usize; edges + 1];
    let mut by_crossing: Vec<[Option<Visit>; 2]> = vec![[None, None]; rows];
    for visit in components.iter().flatten() {
        by_crossing[visit.crossing][visit.over as usize] = Some(*visit);
    }
    for pair in &by_crossing {
        let (u, o) = (pair[0].expect("under visit"), pair[1].expect("over visit"));
        succ[u.edge_in] = o.edge_out;
        succ[o.edge_in] = u.edge_out;
    }
    let mut seen = vec![false; edges + 1];
    let mut circles = free_loops;
    for e in 1..=edges {
        if seen[e] {
            continue;
        }
        circles += 1;
        let mut x = e;
        while !seen[x] {
            seen[x] = true;
            x = succ[x];
        }
    }

    Ok(PlatDiagram { strands: k, pd, gauss, crossing_signs, free_loops, seifert_circles: circles })
}

/// `|det|` of the link from a PD code, via the Goeritz matrix of a
/// checkerboard colouring. Split diagrams give `0`; the empty code gives `1`.
pub fn goeritz_determinant(pd: &[[usize; 4]]) -> BigInt {
    let n = pd.len();
    if n == 0 {
        return BigInt::from(1);
    }
    // where each label occurs: (crossing, slot)
    let max_label = pd.iter().flatten().copied().max().unwrap_or(0);
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); max_label + 1];
    for (c, x) in pd.iter().enumerate() {
        for (s, &l) in x.iter().enumerate() {
            occ[l].push((c, s));
        }
    }
    let other_end = |c: usize, s: usize| -> (usize, usize) {
        let l = pd[c][s];
        *occ[l].iter().find(|&&o| o != (c, s)).expect("every label occurs twice")
    };

    // connectivity of the crossing graph
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(comp: &mut [usize], mut x: usize) -> usize {
        while comp[x] != x {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        x
    }
    for c in 0..n {
        for s in 0..4 {
            let (d, _) = other_end(c, s);
            let (a, b) = (root(&mut comp, c), root(&mut comp, d));
            comp[a] = b;
        }
    }
    let r0 = root(&mut comp, 0);
    if (0..n).any(|c| root(&mut comp, c) != r0) {
        return BigInt::zero();
    }

    // faces: corner (c, s) sits between slots s and s+1
    let mut face = vec![[usize::MAX; 4]; n];
    let mut faces = 0;
    for c in 0..n {
        for s in 0..4 {
            if face[c][s] != usize::MAX {
                continue;
            }
            let (mut x, mut t) = (c, s);
            while face[x][t] == usize::MAX {
                face[x][t] = faces;
                let (y, u) = other_end(x, (t + 1) % 4);
                x = y;
                t = u;
            }
            faces += 1;
        }
    }

    // checkerboard: corners s and s+1 of a crossing share edge s+1 with the
    // opposite colour; corners (c, s) and (c, s+2) have the same colour
    let mut colour = vec![None; faces];
    colour[face[0][0]] = Some(0u8);
    let mut changed = true;
    while changed {
        changed = false;
        for c in 0..n {
            for s in 0..4 {
                let (f, g) = (face[c][s], face[c][(s + 1) % 4]);
                match (colour[f], colour[g]) {
                    (Some(a), None) => {
                        colour[g] = Some(1 - a);
                        changed = true;
                    }
                    (None, Some(b)) => {
                        colour[f] = Some(1 - b);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
    }
    let shaded: Vec<usize> = (0..faces).filter(|&f| colour[f] == Some(0)).collect();
    let index = |f: usize| shaded.iter().position(|&g| g == f);
    let m = shaded.len();
    let mut g = vec![vec![0i64; m]; m];
    for c in 0..n {
        let (eta, a, b) = if colour[face[c][0]] == Some(0) {
            (1, face[c][0], face[c][2])
        } else {
            (-1, face[c][1], face[c][3])
        };
        if a == b {
            continue;
        }
        let (i, j) = (index(a).expect("shaded"), index(b).expect("shaded"));
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }
    if m <= 1 {
        return BigInt::from(1);
    }
    let minor: Vec<Vec<i64>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    determinant(&IntMatrix::from_rows(&minor)).abs()
}

pub fn pd_text(d: &PlatDiagram) -> String {
    let body: Vec<String> = d.pd.iter().map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])).collect();
    format!("PD[{}]", body.join(", "))
}

pub fn gauss_text(d: &PlatDiagram) -> String {
    d.gauss
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

const COL: f64 = 40.0;
const ROW: f64 = 40.0;
const GAP: f64 = 0.22;

/// A plain SVG drawing of the plat.
pub fn svg(w: &BraidWord) -> String {
    let k = w.strands();
    let rows = w.len();
    let top = COL;
    let width = COL * (k as f64 + 1.0);
    let height = top * 2.0 + ROW * rows as f64;
    let x = |p: usize| COL * p as f64;
    let y = |r: usize| top + ROW * r as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="3" stroke-linecap="round">"#);
    for i in (1..k).step_by(2) {
        let rad = COL / 2.0;
        let (x0, x1) = (x(i), x(i + 1));
        let _ = writeln!(out, r#"<path d="M {x0} {} A {rad} {rad} 0 0 1 {x1} {}"/>"#, y(0), y(0));
        let _ = writeln!(out, r#"<path d="M {x0} {} A {rad} {rad} 0 0 0 {x1} {}"/>"#, y(rows), y(rows));
    }
    for (r, l) in w.letters().iter().enumerate() {
        let g = l.generator;
        for p in (1..=k).filter(|&p| p != g && p != g + 1) {
            let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(p), y(r), x(p), y(r + 1));
        }
        // over strand drawn whole, under strand with a gap around the middle
        let (over, under) = if l.positive {
            ((x(g), x(g + 1)), (x(g + 1), x(g)))
        } else {
            ((x(g + 1), x(g)), (x(g), x(g + 1)))
        };
        let (y0, y1) = (y(r), y(r + 1));
        let _ = writeln!(out, r#"<line x1="{}" y1="{y0}" x2="{}" y2="{y1}"/>"#, over.0, over.1);
        let lerp = |t: f64| (under.0 + (under.1 - under.0) * t, y0 + (y1 - y0) * t);
        let (a, b) = (lerp(0.5 - GAP), lerp(0.5 + GAP));
        let _ = writeln!(out, r#"<line x1="{}" y1="{y0}" x2="{}" y2="{}"/>"#, under.0, a.0, a.1);
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{y1}"/>"#, b.0, b.1, under.1);
    }
    if rows == 0 {
        for p in 1..=k {
            let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(p), y(0), x(p), y(0));
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Pd,
    Gauss,
    Svg,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pd" => Ok(ExportFormat::Pd),
            "gauss" => Ok(ExportFormat::Gauss),
            "svg" => Ok(ExportFormat::Svg),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

pub fn export(w: &BraidWord, format: ExportFormat) -> Result<String> {
    Ok(match format {
        ExportFormat::Pd => pd_text(&plat_diagram(w)?),
        ExportFormat::Gauss => gauss_text(&plat_diagram(w)?),
        ExportFormat::Svg => {
            if w.strands() % 2 == 1 {
                return Err(Error::OddStrands(w.strands()));
            }
            svg(&w.free_reduce())
        }
    })
}
