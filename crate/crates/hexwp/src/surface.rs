//! Combinatorial surfaces: right-angled hexagons glued along oriented arcs.
//!
//! Each hexagon lists its three arcs in the cyclic order induced by the
//! surface orientation. An oriented arc runs from its tail to its head; the
//! head is its *foot* on the boundary. Walking the boundary from the foot of
//! `x` along the hexagon of `x` reaches the foot of the reverse of the next
//! arc of that hexagon; the segment crossed is the hexagon side opposite the
//! arc preceding `x`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "+")]
    Forward,
    #[serde(rename = "-")]
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    fn symbol(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Backward => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientedArc {
    pub arc: usize,
    pub dir: Direction,
}

impl OrientedArc {
    pub fn new(arc: usize, dir: Direction) -> Self {
        OrientedArc { arc, dir }
    }

    pub fn forward(arc: usize) -> Self {
        OrientedArc::new(arc, Direction::Forward)
    }

    pub fn backward(arc: usize) -> Self {
        OrientedArc::new(arc, Direction::Backward)
    }

    pub fn reverse(self) -> Self {
        OrientedArc {
            arc: self.arc,
            dir: self.dir.reversed(),
        }
    }

    /// Dense index in `0..2A`: `2·arc` forward, `2·arc + 1` backward.
    pub fn index(self) -> usize {
        2 * self.arc + usize::from(self.dir == Direction::Backward)
    }

    pub fn from_index(k: usize) -> Self {
        OrientedArc::new(
            k / 2,
            if k.is_multiple_of(2) {
                Direction::Forward
            } else {
                Direction::Backward
            },
        )
    }
}

impl fmt::Display for OrientedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.arc, self.dir.symbol())
    }
}

/// Three oriented arcs in the cyclic order compatible with the orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hexagon {
    pub sides: [OrientedArc; 3],
}

impl Hexagon {
    pub fn new(a: OrientedArc, b: OrientedArc, c: OrientedArc) -> Self {
        Hexagon { sides: [a, b, c] }
    }

    /// Sides starting from `slot`, preserving the cyclic order.
    pub fn rotated(&self, slot: usize) -> [OrientedArc; 3] {
        [
            self.sides[slot % 3],
            self.sides[(slot + 1) % 3],
            self.sides[(slot + 2) % 3],
        ]
    }
}

/// Position of an oriented arc: hexagon index and slot within it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Slot {
    pub hexagon: usize,
    pub position: usize,
}

/// A boundary segment: the side of `hexagon` opposite the arc `opposite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SegmentRef {
    pub hexagon: usize,
    pub opposite: OrientedArc,
}

/// A foot followed by the segment leading to the next foot of the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryStep {
    pub foot: OrientedArc,
    pub segment: SegmentRef,
}

/// One boundary component, listed in the positive walk direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCycle {
    pub steps: Vec<BoundaryStep>,
}

impl BoundaryCycle {
    pub fn feet(&self) -> impl Iterator<Item = OrientedArc> + '_ {
        self.steps.iter().map(|s| s.foot)
    }
}

/// Derived topology of a valid surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Topology {
    pub genus: usize,
    pub boundary_count: usize,
    pub euler_characteristic: i64,
    pub arc_count: usize,
    pub hexagon_count: usize,
}

/// The on-disk document; no invariants are checked at this level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDocument {
    pub name: String,
    pub hexagons: Vec<Hexagon>,
}

/// A validated surface together with its boundary walk.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangulatedSurface {
    name: String,
    hexagons: Vec<Hexagon>,
    arc_count: usize,
    slots: Vec<Slot>,
    cycles: Vec<BoundaryCycle>,
    component: Vec<usize>,
    topology: Topology,
}

struct Analysis {
    arc_count: usize,
    slots: Vec<Slot>,
    cycles: Vec<BoundaryCycle>,
    component: Vec<usize>,
    topology: Topology,
}

fn analyze(hexagons: &[Hexagon]) -> std::result::Result<Analysis, Vec<String>> {
    let mut problems = Vec::new();
    if hexagons.is_empty() {
        return Err(vec!["surface has no hexagons".into()]);
    }
    let arc_count = hexagons
        .iter()
        .flat_map(|h| h.sides.iter())
        .map(|x| x.arc)
        .max()
        .unwrap_or(0)
        + 1;
    let mut seen: Vec<Vec<Slot>> = vec![Vec::new(); 2 * arc_count];
    for (t, h) in hexagons.iter().enumerate() {
        for (k, x) in h.sides.iter().enumerate() {
            seen[x.index()].push(Slot {
                hexagon: t,
                position: k,
            });
        }
    }
    for arc in 0..arc_count {
        let (f, b) = (seen[2 * arc].len(), seen[2 * arc + 1].len());
        if f == 0 && b == 0 {
            problems.push(format!(
                "arc id {arc} is missing (ids must be 0..{})",
                arc_count - 1
            ));
            continue;
        }
        if f > 1 {
            problems.push(format!("arc {arc} used {f} times in direction +"));
        }
        if b > 1 {
            problems.push(format!("arc {arc} used {b} times in direction -"));
        }
        if f + b != 2 {
            problems.push(format!(
                "arc {arc} appears {} times, expected exactly twice",
                f + b
            ));
        } else if f != 1 {
            problems.push(format!("arc {arc} appears twice in the same direction"));
        }
    }
    let h = hexagons.len();
    if 3 * h != 2 * arc_count {
        problems.push(format!(
            "3·H = {} differs from 2·A = {}",
            3 * h,
            2 * arc_count
        ));
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    let slots: Vec<Slot> = seen.iter().map(|v| v[0]).collect();

    // Connectivity through shared arcs.
    let mut reached = vec![false; h];
    let mut queue = VecDeque::from([0usize]);
    reached[0] = true;
    while let Some(t) = queue.pop_front() {
        for x in hexagons[t].sides {
            let u = slots[x.reverse().index()].hexagon;
            if !reached[u] {
                reached[u] = true;
                queue.push_back(u);
            }
        }
    }
    if reached.iter().any(|r| !r) {
        problems.push("hexagons do not form a connected surface".into());
        return Err(problems);
    }

    let mut component = vec![usize::MAX; 2 * arc_count];
    let mut cycles = Vec::new();
    for start in 0..2 * arc_count {
        if component[start] != usize::MAX {
            continue;
        }
        let mut steps = Vec::new();
        let mut x = OrientedArc::from_index(start);
        while component[x.index()] == usize::MAX {
            component[x.index()] = cycles.len();
            let Slot { hexagon, position } = slots[x.index()];
            let [_, next, prev] = hexagons[hexagon].rotated(position);
            steps.push(BoundaryStep {
                foot: x,
                segment: SegmentRef {
                    hexagon,
                    opposite: prev,
                },
            });
            x = next.reverse();
        }
        if x.index() != start {
            problems.push(format!(
                "boundary walk from {} is not a cycle",
                OrientedArc::from_index(start)
            ));
        }
        cycles.push(BoundaryCycle { steps });
    }
    let n = cycles.len();
    let chi = -(h as i64) / 2;
    let twice_genus = 2 - chi - n as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        problems.push(format!("non-integer or negative genus: 2g = {twice_genus}"));
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    let genus = (twice_genus / 2) as usize;
    debug_assert_eq!(arc_count as i64, 6 * genus as i64 - 6 + 3 * n as i64);
    Ok(Analysis {
        arc_count,
        slots,
        cycles,
        component,
        topology: Topology {
            genus,
            boundary_count: n,
            euler_characteristic: chi,
            arc_count,
            hexagon_count: h,
        },
    })
}

/// Checks every surface invariant and reports the topology, or lists all violations.
pub fn validate(hexagons: &[Hexagon]) -> Result<Topology> {
    analyze(hexagons)
        .map(|a| a.topology)
        .map_err(Error::InvalidSurface)
}

impl TriangulatedSurface {
    pub fn new(name: impl Into<String>, hexagons: Vec<Hexagon>) -> Result<Self> {
        let a = analyze(&hexagons).map_err(Error::InvalidSurface)?;
        Ok(TriangulatedSurface {
            name: name.into(),
            hexagons,
            arc_count: a.arc_count,
            slots: a.slots,
            cycles: a.cycles,
            component: a.component,
            topology: a.topology,
        })
    }

    pub fn from_document(doc: SurfaceDocument) -> Result<Self> {
        TriangulatedSurface::new(doc.name, doc.hexagons)
    }

    pub fn to_document(&self) -> SurfaceDocument {
        SurfaceDocument {
            name: self.name.clone(),
            hexagons: self.hexagons.clone(),
        }
    }

    /// Parses a JSON surface document and validates it.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SurfaceDocument = serde_json::from_str(text).map_err(|e| Error::Input {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        TriangulatedSurface::from_document(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document())
            .expect("surface documents always serialize")
    }

    /// Symmetric one-holed torus gluing `(0+,1+,2+), (0−,1−,2−)`.
    pub fn one_holed_torus() -> Self {
        use OrientedArc as O;
        TriangulatedSurface::new(
            "one-holed torus",
            vec![
                Hexagon::new(O::forward(0), O::forward(1), O::forward(2)),
                Hexagon::new(O::backward(0), O::backward(1), O::backward(2)),
            ],
        )
        .expect("fixture is valid")
    }

    /// Pair of pants gluing `(0+,1+,2+), (0−,2−,1−)`.
    pub fn pair_of_pants() -> Self {
        use OrientedArc as O;
        TriangulatedSurface::new(
            "pair of pants",
            vec![
                Hexagon::new(O::forward(0), O::forward(1), O::forward(2)),
                Hexagon::new(O::backward(0), O::backward(2), O::backward(1)),
            ],
        )
        .expect("fixture is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hexagons(&self) -> &[Hexagon] {
        &self.hexagons
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn boundary_cycles(&self) -> &[BoundaryCycle] {
        &self.cycles
    }

    pub fn locate(&self, x: OrientedArc) -> Slot {
        self.slots[x.index()]
    }

    /// Boundary component containing the foot of `x`.
    pub fn component_of(&self, x: OrientedArc) -> usize {
        self.component[x.index()]
    }

    /// Successor of the foot of `x` in the boundary walk.
    pub fn successor(&self, x: OrientedArc) -> OrientedArc {
        let Slot { hexagon, position } = self.locate(x);
        self.hexagons[hexagon].sides[(position + 1) % 3].reverse()
    }

    /// Renames arc `k` to `perm[k]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let hexagons = self
            .hexagons
            .iter()
            .map(|h| Hexagon {
                sides: h.sides.map(|x| OrientedArc::new(perm[x.arc], x.dir)),
            })
            .collect();
        TriangulatedSurface::new(self.name.clone(), hexagons)
    }

    /// Replaces `arc` by the other diagonal of the union of its two hexagons.
    ///
    /// With hexagons `(e, x, y)` and `(ē, u, v)` the result holds `(f, v, x)`
    /// and `(f̄, y, u)` in the same two positions; `f` reuses the id of `e`.
    pub fn flip_combinatorial(&self, arc: usize) -> Result<Self> {
        if arc >= self.arc_count {
            return Err(Error::Configuration(format!("arc {arc} does not exist")));
        }
        let e = OrientedArc::forward(arc);
        let (s, s2) = (self.locate(e), self.locate(e.reverse()));
        if s.hexagon == s2.hexagon {
            return Err(Error::Configuration(format!(
                "arc {arc} has both sides on hexagon {}; flipping it would not yield an arc system",
                s.hexagon
            )));
        }
        let [e, x, y] = self.hexagons[s.hexagon].rotated(s.position);
        let [e_bar, u, v] = self.hexagons[s2.hexagon].rotated(s2.position);
        let mut hexagons = self.hexagons.clone();
        hexagons[s.hexagon] = Hexagon::new(e, v, x);
        hexagons[s2.hexagon] = Hexagon::new(e_bar, y, u);
        let flipped = TriangulatedSurface::new(self.name.clone(), hexagons)?;
        if flipped.topology() != self.topology {
            return Err(Error::Consistency(format!(
                "flip of arc {arc} changed the topology"
            )));
        }
        Ok(flipped)
    }

    /// Relabeling-invariant code: the smallest breadth-first encoding over all
    /// starting hexagons and rotations. Arcs are renumbered by first
    /// appearance and each arc's first appearance is declared forward.
    pub fn canonical_form(&self) -> CanonicalForm {
        let mut best: Option<Vec<(usize, bool)>> = None;
        for t in 0..self.hexagons.len() {
            for r in 0..3 {
                let code = self.traversal_code(t, r);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        CanonicalForm(best.unwrap_or_default())
    }

    fn traversal_code(&self, start: usize, rotation: usize) -> Vec<(usize, bool)> {
        let mut label: Vec<Option<(usize, Direction)>> = vec![None; self.arc_count];
        let mut visited = vec![false; self.hexagons.len()];
        let mut next_label = 0;
        let mut code = Vec::with_capacity(3 * self.hexagons.len());
        let mut queue = VecDeque::from([(start, rotation)]);
        visited[start] = true;
        while let Some((t, r)) = queue.pop_front() {
            for x in self.hexagons[t].rotated(r) {
                let (l, first_dir) = *label[x.arc].get_or_insert_with(|| {
                    next_label += 1;
                    (next_label - 1, x.dir)
                });
                code.push((l, x.dir == first_dir));
                let s = self.locate(x.reverse());
                if !visited[s.hexagon] {
                    visited[s.hexagon] = true;
                    queue.push_back((s.hexagon, s.position));
                }
            }
        }
        code
    }
}

/// Canonical encoding; two surfaces are isomorphic exactly when their forms agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<(usize, bool)>);

pub fn read_surface(path: impl AsRef<Path>) -> Result<TriangulatedSurface> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input {
        location: path.display().to_string(),
        message: e.to_string(),
    })?;
    TriangulatedSurface::from_json(&text).map_err(|e| match e {
        Error::Input { location, message } => Error::Input {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => Error::Input {
            location: path.display().to_string(),
            message: other.to_string(),
        },
    })
}

pub fn write_surface(surface: &TriangulatedSurface, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, surface.to_json() + "\n").map_err(|e| Error::Input {
        location: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Per-arc values keyed by arc id, as stored in length files.
pub fn arc_map_to_vec(map: &BTreeMap<usize, f64>, arc_count: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(arc_count);
    for arc in 0..arc_count {
        match map.get(&arc) {
            Some(v) => out.push(*v),
            None => {
                return Err(Error::Input {
                    location: format!("arc {arc}"),
                    message: "missing value".into(),
                })
            }
        }
    }
    if let Some(extra) = map.keys().find(|k| **k >= arc_count) {
        return Err(Error::Input {
            location: format!("arc {extra}"),
            message: format!("surface has only {arc_count} arcs"),
        });
    }
    Ok(out)
}
