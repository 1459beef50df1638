//! Meander graphs of seaweed subalgebras.
//!
//! Vertices `1..=n` sit on a line. Each block of `a` is reversed by an
//! involution whose non-trivial orbits are drawn as arcs below the line;
//! blocks of `b` likewise give arcs above. Every vertex meets at most one
//! arc on each side, so connected components are simple paths (segments)
//! or closed curves (cycles), and the index is `2·#cycles + #segments`.
//!
//! The vertices of a cycle, sorted, come in pairs `x_i < x_i + s - 1` with a
//! common gap; `s` is the dimension of the cycle. A component is inside the
//! cycle when it has a vertex strictly between the two ends of some pair.

use serde::{Serialize, Serializer};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// Largest vertex count a meander will be built for.
pub const MAX_VERTICES: u64 = 1 << 26;

/// Block-reversal involution of `{1..n}` attached to a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    image: Vec<usize>,
}

impl Involution {
    /// Maps `x` in block `i` to `2(c₁+…+c_{i−1}) + c_i − x + 1`.
    pub fn of(c: &Composition) -> Self {
        let mut image = Vec::with_capacity(c.n() as usize);
        let mut offset = 0usize;
        for &p in c.parts() {
            let p = p as usize;
            for x in offset + 1..=offset + p {
                image.push(2 * offset + p + 1 - x);
            }
            offset += p;
        }
        Self { image }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based vertex `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1]
    }

    pub fn is_fixed(&self, x: usize) -> bool {
        self.apply(x) == x
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&x| self.is_fixed(x)).collect()
    }

    /// The non-trivial orbits `{x, θ(x)}` as arcs, sorted by left end.
    pub fn arcs(&self) -> Vec<Arc> {
        (1..=self.n())
            .filter_map(|x| {
                let y = self.apply(x);
                (x < y).then_some(Arc { u: x, v: y })
            })
            .collect()
    }
}

/// An arc joining vertices `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub u: usize,
    pub v: usize,
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Arcs from the first composition.
    Lower,
    /// Arcs from the second composition.
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Cycle,
    Segment,
}

/// One orbit of the group generated by the two involutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Ascending.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

impl Component {
    pub fn is_cycle(&self) -> bool {
        self.kind == ComponentKind::Cycle
    }

    pub fn min(&self) -> usize {
        self.vertices[0]
    }

    pub fn max(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    /// Consecutive pairs `(x_1, x_1+s−1), (x_2, x_2+s−1), …` of the sorted
    /// vertex list. Only meaningful for cycles, which have an even number
    /// of vertices.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.chunks_exact(2).map(|w| (w[0], w[1]))
    }

    /// Gap `s − 1` shared by all pairs of a cycle, or `None` when the pairs
    /// disagree or the component is a segment.
    pub fn pair_gap(&self) -> Option<usize> {
        if !self.is_cycle() {
            return None;
        }
        let mut pairs = self.pairs();
        let (p, q) = pairs.next()?;
        let gap = q - p;
        pairs.all(|(p, q)| q - p == gap).then_some(gap)
    }
}

/// An arc of a maximal cycle joining the two ends of one of its pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Bout {
    pub side: Side,
    pub arc: Arc,
}

/// A cycle not inside any other cycle, or a segment not inside any cycle
/// (the latter promoted with dimension 1 and no bouts).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCycle {
    pub core: Component,
    /// `2·#cycles inside + #segments inside + 2` for cycles, 1 for segments.
    pub dimension: u64,
    /// Components nested inside the core, ordered by smallest vertex.
    pub inside: Vec<Component>,
    pub bouts: Vec<Bout>,
}

/// The meander Γ(a|b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meander {
    a: Composition,
    b: Composition,
    theta_a: Involution,
    theta_b: Involution,
}

impl Meander {
    pub fn new(a: &Composition, b: &Composition) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::SumMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        if a.n() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "meander vertex count",
                got: a.n(),
                limit: MAX_VERTICES,
            });
        }
        Ok(Self {
            a: a.clone(),
            b: b.clone(),
            theta_a: Involution::of(a),
            theta_b: Involution::of(b),
        })
    }

    /// Γ(a) = Γ(a | n).
    pub fn parabolic(a: &Composition) -> Result<Self> {
        Self::new(a, &Composition::single(a.n())?)
    }

    pub fn n(&self) -> usize {
        self.theta_a.n()
    }

    pub fn a(&self) -> &Composition {
        &self.a
    }

    pub fn b(&self) -> &Composition {
        &self.b
    }

    pub fn theta_a(&self) -> &Involution {
        &self.theta_a
    }

    pub fn theta_b(&self) -> &Involution {
        &self.theta_b
    }

    pub fn lower(&self) -> Vec<Arc> {
        self.theta_a.arcs()
    }

    pub fn upper(&self) -> Vec<Arc> {
        self.theta_b.arcs()
    }

    /// Number of lower plus upper arcs.
    pub fn arc_count(&self) -> usize {
        let side = |t: &Involution| (1..=t.n()).filter(|&x| t.apply(x) > x).count();
        side(&self.theta_a) + side(&self.theta_b)
    }

    fn is_endpoint(&self, x: usize) -> bool {
        self.theta_a.is_fixed(x) || self.theta_b.is_fixed(x)
    }

    /// Orbits in order of their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        self.label_components().1
    }

    /// Component id of every vertex (index `x − 1`) together with the components.
    fn label_components(&self) -> (Vec<usize>, Vec<Component>) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 1..=n {
            if label[start - 1] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut vertices = Vec::new();
            let mut segment = false;
            label[start - 1] = id;
            stack.push(start);
            while let Some(x) = stack.pop() {
                vertices.push(x);
                segment |= self.is_endpoint(x);
                for y in [self.theta_a.apply(x), self.theta_b.apply(x)] {
                    if label[y - 1] == usize::MAX {
                        label[y - 1] = id;
                        stack.push(y);
                    }
                }
            }
            vertices.sort_unstable();
            let kind = if segment {
                ComponentKind::Segment
            } else {
                ComponentKind::Cycle
            };
            out.push(Component { vertices, kind });
        }
        (label, out)
    }

    /// `(#cycles, #segments)`.
    pub fn cycle_segment_counts(&self) -> (u64, u64) {
        self.components()
            .iter()
            .fold((0, 0), |(c, s), comp| match comp.kind {
                ComponentKind::Cycle => (c + 1, s),
                ComponentKind::Segment => (c, s + 1),
            })
    }

    /// `2·#cycles + #segments`.
    pub fn index(&self) -> u64 {
        let (c, s) = self.cycle_segment_counts();
        2 * c + s
    }

    pub fn maximal_cycles(&self) -> Vec<MaximalCycle> {
        let (label, comps) = self.label_components();
        let mut container: Vec<Option<usize>> = vec![None; comps.len()];

        // A cycle can only sit inside a cycle with a strictly larger gap, so
        // visiting cycles outermost-first lets us skip anything already
        // claimed and scan each vertex at most once.
        let mut cycles: Vec<(usize, usize)> = comps
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_cycle())
            .map(|(id, c)| (id, c.pairs().map(|(p, q)| q - p).max().unwrap_or(0)))
            .collect();
        cycles.sort_by_key(|&(id, gap)| (std::cmp::Reverse(gap), id));
        for &(id, _) in &cycles {
            if container[id].is_some() {
                continue;
            }
            for (p, q) in comps[id].pairs() {
                for y in p + 1..q {
                    let other = label[y - 1];
                    if other != id && container[other].is_none() {
                        container[other] = Some(id);
                    }
                }
            }
        }

        let mut inside: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
        for (id, c) in container.iter().enumerate() {
            if let Some(root) = c {
                inside[*root].push(id);
            }
        }

        comps
            .iter()
            .enumerate()
            .filter(|(id, _)| container[*id].is_none())
            .map(|(id, core)| {
                if !core.is_cycle() {
                    return MaximalCycle {
                        core: core.clone(),
                        dimension: 1,
                        inside: Vec::new(),
                        bouts: Vec::new(),
                    };
                }
                let nested: Vec<Component> = inside[id].iter().map(|&j| comps[j].clone()).collect();
                let nested_cycles = nested.iter().filter(|c| c.is_cycle()).count() as u64;
                let nested_segments = nested.len() as u64 - nested_cycles;
                MaximalCycle {
                    dimension: 2 * nested_cycles + nested_segments + 2,
                    bouts: self.bouts_of(core),
                    core: core.clone(),
                    inside: nested,
                }
            })
            .collect()
    }

    fn bouts_of(&self, core: &Component) -> Vec<Bout> {
        let mut bouts = Vec::new();
        for (p, q) in core.pairs() {
            if self.theta_a.apply(p) == q {
                bouts.push(Bout {
                    side: Side::Lower,
                    arc: Arc { u: p, v: q },
                });
            }
            if self.theta_b.apply(p) == q {
                bouts.push(Bout {
                    side: Side::Upper,
                    arc: Arc { u: p, v: q },
                });
            }
        }
        bouts
    }

    /// Sorted multiset of maximal-cycle dimensions. Two meanders are
    /// equivalent exactly when their signatures are equal.
    pub fn equivalence_signature(&self) -> Vec<u64> {
        let mut dims: Vec<u64> = self.maximal_cycles().iter().map(|m| m.dimension).collect();
        dims.sort_unstable();
        dims
    }

    pub fn is_equivalent(&self, other: &Meander) -> bool {
        self.equivalence_signature() == other.equivalence_signature()
    }

    pub fn report(&self) -> MeanderReport {
        MeanderReport {
            n: self.n(),
            a: self.a.clone(),
            b: self.b.clone(),
            lower: self.lower(),
            upper: self.upper(),
            components: self.components(),
            maximal_cycles: self
                .maximal_cycles()
                .into_iter()
                .map(|m| MaximalCycleReport {
                    vertices: m.core.vertices,
                    dimension: m.dimension,
                    bouts: m.bouts.into_iter().map(|b| b.arc).collect(),
                })
                .collect(),
        }
    }
}

/// JSON form of a meander.
#[derive(Clone, Debug, Serialize)]
pub struct MeanderReport {
    pub n: usize,
    pub a: Composition,
    pub b: Composition,
    pub lower: Vec<Arc>,
    pub upper: Vec<Arc>,
    pub components: Vec<Component>,
    pub maximal_cycles: Vec<MaximalCycleReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximalCycleReport {
    pub vertices: Vec<usize>,
    pub dimension: u64,
    pub bouts: Vec<Arc>,
}
