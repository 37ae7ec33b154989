//! Immersed diagrams of graphs in the plane.
//!
//! A diagram records a generic immersion combinatorially:
//! - an oriented edge list over a vertex set (the orientation fixes each
//!   edge's traversal direction; the underlying simple graph forgets it),
//! - a rotation system: the counterclockwise cyclic order of edge-ends at
//!   every vertex,
//! - per-edge traversals: the sequence of crossings met along each edge, and
//! - a crossing table: for each crossing, its two passage slots `(edge,
//!   index)` and a handedness (`L` means the second slot's strand crosses the
//!   first slot's strand left to right).
//!
//! Whether such data describes a picture in the plane (rather than a
//! higher-genus surface) is decided by tracing face orbits and checking
//! Euler's formula.

use crate::curve::{Hand, PlaneCurve};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

pub type CrossingId = u32;

/// One crossing: its two passage slots and handedness. Slot order is
/// significant (handedness is relative to it).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub slots: [(EdgeId, usize); 2],
    pub hand: Hand,
}

/// A dart on an edge segment: segment `seg` of edge `edge` (segments are the
/// gaps between consecutive crossings, so an edge with `k` crossings has
/// `k + 1` segments), travelled with (`+1`) or against (`-1`) the edge's
/// listed orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegDart {
    pub edge: EdgeId,
    pub seg: usize,
    pub dir: i8,
}

/// What a dart runs into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Station {
    Vertex(VertexId),
    Crossing(CrossingId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub(crate) vertex_count: u32,
    pub(crate) edges: Vec<(VertexId, VertexId)>,
    pub(crate) rotations: Vec<Vec<(EdgeId, u8)>>,
    pub(crate) traversals: Vec<Vec<CrossingId>>,
    pub(crate) crossings: BTreeMap<CrossingId, Crossing>,
}

impl Diagram {
    pub fn new(
        vertex_count: u32,
        edges: Vec<(VertexId, VertexId)>,
        rotations: Vec<Vec<(EdgeId, u8)>>,
        traversals: Vec<Vec<CrossingId>>,
        crossings: BTreeMap<CrossingId, Crossing>,
    ) -> Result<Diagram> {
        let d = Diagram {
            vertex_count,
            edges,
            rotations,
            traversals,
            crossings,
        };
        d.check_structure()?;
        Ok(d)
    }

    pub(crate) fn check_structure(&self) -> Result<()> {
        let n = self.vertex_count as usize;
        for &(u, v) in &self.edges {
            if u == v {
                return Err(Error::structural(format!("loop edge at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::structural(format!(
                    "edge ({u}, {v}) exceeds vertex count {}",
                    self.vertex_count
                )));
            }
        }
        let mut pairs: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::structural("duplicate edge".to_string()));
        }
        if self.rotations.len() != n {
            return Err(Error::structural(format!(
                "expected {n} rotation lists, found {}",
                self.rotations.len()
            )));
        }
        if self.traversals.len() != self.edges.len() {
            return Err(Error::structural(format!(
                "expected {} traversal lists, found {}",
                self.edges.len(),
                self.traversals.len()
            )));
        }
        // Every edge-end appears exactly once, at the right vertex.
        let mut seen_ends: BTreeSet<(EdgeId, u8)> = BTreeSet::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for &(e, w) in rot {
                if e >= self.edges.len() || w > 1 {
                    return Err(Error::structural(format!(
                        "rotation at vertex {v} names invalid edge end ({e}, {w})"
                    )));
                }
                let (a, b) = self.edges[e];
                let expect = if w == 0 { a } else { b };
                if expect != v as u32 {
                    return Err(Error::structural(format!(
                        "edge end ({e}, {w}) listed at vertex {v}, belongs at {expect}"
                    )));
                }
                if !seen_ends.insert((e, w)) {
                    return Err(Error::structural(format!(
                        "edge end ({e}, {w}) appears twice in rotations"
                    )));
                }
            }
        }
        if seen_ends.len() != 2 * self.edges.len() {
            return Err(Error::structural(format!(
                "rotations list {} edge ends, expected {}",
                seen_ends.len(),
                2 * self.edges.len()
            )));
        }
        // Crossing occurrences and slot references agree.
        let mut occ: BTreeMap<CrossingId, Vec<(EdgeId, usize)>> = BTreeMap::new();
        for (e, trav) in self.traversals.iter().enumerate() {
            for (i, &x) in trav.iter().enumerate() {
                occ.entry(x).or_default().push((e, i));
            }
        }
        let occ_keys: Vec<CrossingId> = occ.keys().copied().collect();
        let table_keys: Vec<CrossingId> = self.crossings.keys().copied().collect();
        if occ_keys != table_keys {
            return Err(Error::structural(
                "traversal crossing ids and crossing table keys differ".to_string(),
            ));
        }
        for (&x, c) in &self.crossings {
            let mut slots = c.slots.to_vec();
            slots.sort_unstable();
            let mut seen = occ[&x].clone();
            seen.sort_unstable();
            if slots != seen {
                return Err(Error::structural(format!(
                    "crossing {x} slots {:?} do not match traversal occurrences {:?}",
                    c.slots, occ[&x]
                )));
            }
            if c.slots[0] == c.slots[1] {
                return Err(Error::structural(format!(
                    "crossing {x} has two identical slots"
                )));
            }
        }
        Ok(())
    }

    /// Human-readable violations: structural first, then the planarity check.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Err(e) = self.check_structure() {
            out.push(e.to_string());
            return out;
        }
        let (chi, faces) = self.euler();
        if chi != 2 {
            let genus = (2 - chi) / 2;
            out.push(format!(
                "not a planar immersion: Euler characteristic {chi} ({faces} faces, genus {genus})"
            ));
        }
        out
    }

    pub fn is_planar(&self) -> bool {
        self.euler().0 == 2
    }

    pub fn require_planar(&self) -> Result<&Self> {
        let (chi, faces) = self.euler();
        if chi == 2 {
            Ok(self)
        } else {
            Err(Error::Topological(format!(
                "diagram has Euler characteristic {chi} ({faces} faces), expected 2"
            )))
        }
    }

    // ------------------------------------------------------------ accessors

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_list(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn rotations(&self) -> &[Vec<(EdgeId, u8)>] {
        &self.rotations
    }

    pub fn traversals(&self) -> &[Vec<CrossingId>] {
        &self.traversals
    }

    pub fn crossings(&self) -> &BTreeMap<CrossingId, Crossing> {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v as usize].len()
    }

    pub fn max_crossing_id(&self) -> CrossingId {
        self.crossings.keys().next_back().copied().unwrap_or(0)
    }

    /// Underlying simple graph (edge ids may differ: the graph sorts its
    /// edge list; use [`Diagram::edge_between`] for diagram ids).
    pub fn graph(&self) -> Graph {
        Graph::new(self.vertex_count, self.edges.iter().copied())
            .expect("diagram edges form a simple graph")
    }

    /// Diagram edge id joining `u` and `v`, in either orientation.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Crossings whose two strands lie on vertex-disjoint edges.
    pub fn d_value(&self) -> usize {
        self.crossings
            .values()
            .filter(|c| {
                let (a, b) = self.edges[c.slots[0].0];
                let (p, q) = self.edges[c.slots[1].0];
                a != p && a != q && b != p && b != q
            })
            .count()
    }

    // --------------------------------------------------------- face tracing

    /// Station at the head of a dart.
    pub fn station(&self, d: SegDart) -> Station {
        let trav = &self.traversals[d.edge];
        if d.dir > 0 {
            if d.seg == trav.len() {
                Station::Vertex(self.edges[d.edge].1)
            } else {
                Station::Crossing(trav[d.seg])
            }
        } else if d.seg == 0 {
            Station::Vertex(self.edges[d.edge].0)
        } else {
            Station::Crossing(trav[d.seg - 1])
        }
    }

    /// Face orbits: each face is the cyclic dart list along its boundary,
    /// with the face on the left of every dart.
    pub fn face_orbits(&self) -> Vec<Vec<SegDart>> {
        // Germ: (edge, seg, at_start_side). CCW germ list per station.
        type Germ = (EdgeId, usize, bool);
        let mut germs: BTreeMap<Station, Vec<Germ>> = BTreeMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            let list = rot
                .iter()
                .map(|&(e, w)| {
                    if w == 0 {
                        (e, 0, true)
                    } else {
                        (e, self.traversals[e].len(), false)
                    }
                })
                .collect();
            germs.insert(Station::Vertex(v as u32), list);
        }
        for (&x, c) in &self.crossings {
            let (e1, i1) = c.slots[0];
            let (e2, i2) = c.slots[1];
            let fi = (e1, i1, false);
            let fo = (e1, i1 + 1, true);
            let si = (e2, i2, false);
            let so = (e2, i2 + 1, true);
            let list = match c.hand {
                Hand::L => vec![fo, si, fi, so],
                Hand::R => vec![fo, so, fi, si],
            };
            germs.insert(Station::Crossing(x), list);
        }

        let phi = |d: SegDart| -> SegDart {
            let (st, germ) = if d.dir > 0 {
                (self.station(d), (d.edge, d.seg, false))
            } else {
                (self.station(d), (d.edge, d.seg, true))
            };
            let list = &germs[&st];
            let idx = list.iter().position(|&g| g == germ).expect("germ present");
            let (e2, j2, at_start) = list[(idx + list.len() - 1) % list.len()];
            SegDart {
                edge: e2,
                seg: j2,
                dir: if at_start { 1 } else { -1 },
            }
        };

        let mut seen: BTreeSet<SegDart> = BTreeSet::new();
        let mut orbits = Vec::new();
        for e in 0..self.edges.len() {
            for j in 0..=self.traversals[e].len() {
                for dir in [1i8, -1] {
                    let d0 = SegDart {
                        edge: e,
                        seg: j,
                        dir,
                    };
                    if seen.contains(&d0) {
                        continue;
                    }
                    let mut orb = Vec::new();
                    let mut d = d0;
                    while seen.insert(d) {
                        orb.push(d);
                        d = phi(d);
                    }
                    orbits.push(orb);
                }
            }
        }
        orbits
    }

    pub fn face_count(&self) -> usize {
        self.face_orbits().len()
    }

    /// `(Euler characteristic, face count)` of the closed-up surface.
    pub fn euler(&self) -> (i64, usize) {
        let v = self.vertex_count as i64 + self.crossings.len() as i64;
        let e: i64 = self.traversals.iter().map(|t| t.len() as i64 + 1).sum();
        let f = self.face_count();
        (v - e + f as i64, f)
    }

    // ---------------------------------------------------------- restriction

    /// Restrict the immersion to a cycle of the graph: walk the cycle's
    /// edges in order, keep exactly the crossings met twice (both strands on
    /// the cycle), and return the resulting plane curve. Labels are assigned
    /// 1, 2, ... in order of first appearance along the walk.
    pub fn restrict_to_cycle(&self, cycle: &[VertexId]) -> Result<PlaneCurve> {
        if cycle.len() < 3 {
            return Err(Error::invalid("cycle must have at least 3 vertices"));
        }
        let mut walk: Vec<(CrossingId, EdgeId, usize, bool)> = Vec::new();
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            let e = self.edge_between(u, v).ok_or_else(|| {
                Error::invalid(format!("no edge between {u} and {v} on the cycle"))
            })?;
            let along = self.edges[e] == (u, v);
            let trav = &self.traversals[e];
            if along {
                for (j, &x) in trav.iter().enumerate() {
                    walk.push((x, e, j, true));
                }
            } else {
                for (j, &x) in trav.iter().enumerate().rev() {
                    walk.push((x, e, j, false));
                }
            }
        }
        let mut count: BTreeMap<CrossingId, usize> = BTreeMap::new();
        for &(x, ..) in &walk {
            *count.entry(x).or_insert(0) += 1;
        }
        let kept: Vec<(CrossingId, EdgeId, usize, bool)> =
            walk.into_iter().filter(|&(x, ..)| count[&x] == 2).collect();
        let mut label: BTreeMap<CrossingId, u32> = BTreeMap::new();
        let mut seq: Vec<u32> = Vec::with_capacity(kept.len());
        for &(x, ..) in &kept {
            let next = label.len() as u32 + 1;
            let l = *label.entry(x).or_insert(next);
            seq.push(l);
        }
        let mut hand: BTreeMap<u32, Hand> = BTreeMap::new();
        for (&x, &l) in &label {
            let c = self.crossings[&x];
            let occ: Vec<&(CrossingId, EdgeId, usize, bool)> =
                kept.iter().filter(|&&(y, ..)| y == x).collect();
            let (_, e1, j1, al1) = *occ[0];
            let (_, e2, j2, al2) = *occ[1];
            let (flip1, flip2, swapped) = if c.slots[0] == (e1, j1) && c.slots[1] == (e2, j2) {
                (!al1, !al2, false)
            } else if c.slots[1] == (e1, j1) && c.slots[0] == (e2, j2) {
                (!al2, !al1, true)
            } else {
                return Err(Error::structural(format!(
                    "crossing {x} slots do not match its cycle occurrences"
                )));
            };
            let flips = flip1 as usize + flip2 as usize + swapped as usize;
            let h = if flips % 2 == 1 {
                c.hand.flip()
            } else {
                c.hand
            };
            hand.insert(l, h);
        }
        PlaneCurve::new(seq, hand)
    }
}

// ------------------------------------------------------------ convex layout

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow2(i: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(1) << i)
}

type Pt = (BigRational, BigRational);

fn sub(a: &Pt, b: &Pt) -> Pt {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross(a: &Pt, b: &Pt) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// CCW angular order starting just above the positive x-axis.
fn angle_cmp(dp: &Pt, dq: &Pt) -> Ordering {
    let upper = |d: &Pt| -> u8 {
        let zero = BigRational::zero();
        if d.1 > zero || (d.1 == zero && d.0 > zero) {
            0
        } else {
            1
        }
    };
    let (hp, hq) = (upper(dp), upper(dq));
    if hp != hq {
        return hp.cmp(&hq);
    }
    let cr = cross(dp, dq);
    if cr.is_positive() {
        Ordering::Less
    } else if cr.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Generic straight-line drawing of a graph with vertices in convex position.
///
/// Vertex `order[i]` sits at `(i, 2^i)`; edges are straight segments, and all
/// intersection arithmetic is exact. Two crossings coinciding on an edge is
/// rejected with an error rather than perturbed (it cannot happen for the
/// doubling positions with n ≤ 16, which is checked by tests).
pub fn convex_drawing(graph: &Graph, order: Option<&[VertexId]>) -> Result<Diagram> {
    let n = graph.vertex_count() as usize;
    let default_order: Vec<VertexId> = (0..n as u32).collect();
    let order = match order {
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != default_order {
                return Err(Error::invalid(format!(
                    "order must be a permutation of 0..{n}"
                )));
            }
            o.to_vec()
        }
        None => default_order,
    };
    // Position of each vertex: index in `order`.
    let mut slot = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        slot[v as usize] = i;
    }
    let point = |v: VertexId| -> Pt {
        let i = slot[v as usize];
        (rat_int(i as i64), pow2(i))
    };

    let edges: Vec<(VertexId, VertexId)> = graph.edges().to_vec();
    let mut percross: Vec<(EdgeId, BigRational, EdgeId, BigRational, Hand)> = Vec::new();
    for e in 0..edges.len() {
        for f in e + 1..edges.len() {
            let (a, b) = edges[e];
            let (c, d) = edges[f];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            // Interleaving around the convex position order.
            let (amin, amax) = {
                let (x, y) = (slot[a as usize], slot[b as usize]);
                (x.min(y), x.max(y))
            };
            let (cmin, cmax) = {
                let (x, y) = (slot[c as usize], slot[d as usize]);
                (x.min(y), x.max(y))
            };
            let interleaved = (amin < cmin && cmin < amax && amax < cmax)
                || (cmin < amin && amin < cmax && cmax < amax);
            if !interleaved {
                continue;
            }
            let (pa, pb, pc, pd) = (point(a), point(b), point(c), point(d));
            let dir_e = sub(&pb, &pa);
            let dir_f = sub(&pd, &pc);
            let den = cross(&dir_e, &dir_f);
            debug_assert!(!den.is_zero(), "interleaved segments cannot be parallel");
            let te = cross(&sub(&pc, &pa), &dir_f) / den.clone();
            let tf = -(cross(&sub(&pa, &pc), &dir_e)) / den.clone();
            let hand = if den.is_negative() { Hand::L } else { Hand::R };
            percross.push((e, te, f, tf, hand));
        }
    }
    let mut traversals: Vec<Vec<CrossingId>> = vec![Vec::new(); edges.len()];
    let mut per_edge: Vec<Vec<(BigRational, CrossingId)>> = vec![Vec::new(); edges.len()];
    for (k, (e, te, f, tf, _)) in percross.iter().enumerate() {
        per_edge[*e].push((te.clone(), k as CrossingId));
        per_edge[*f].push((tf.clone(), k as CrossingId));
    }
    for e in 0..edges.len() {
        per_edge[e].sort_by(|(t1, k1), (t2, k2)| t1.cmp(t2).then(k1.cmp(k2)));
        for w in per_edge[e].windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::structural(format!(
                    "crossings {} and {} coincide on edge {e}; drawing is not generic",
                    w[0].1, w[1].1
                )));
            }
        }
        traversals[e] = per_edge[e].iter().map(|&(_, k)| k).collect();
    }
    let mut crossings: BTreeMap<CrossingId, Crossing> = BTreeMap::new();
    for (k, (e, _, f, _, hand)) in percross.iter().enumerate() {
        let k32 = k as CrossingId;
        let i1 = traversals[*e].iter().position(|&x| x == k32).unwrap();
        let i2 = traversals[*f].iter().position(|&x| x == k32).unwrap();
        crossings.insert(
            k32,
            Crossing {
                slots: [(*e, i1), (*f, i2)],
                hand: *hand,
            },
        );
    }
    let mut rotations: Vec<Vec<(EdgeId, u8)>> = Vec::with_capacity(n);
    for v in 0..n as u32 {
        let mut ends: Vec<(EdgeId, u8, Pt)> = Vec::new();
        for (e, &(u, w)) in edges.iter().enumerate() {
            if u == v {
                ends.push((e, 0, sub(&point(w), &point(v))));
            } else if w == v {
                ends.push((e, 1, sub(&point(u), &point(v))));
            }
        }
        ends.sort_by(|p, q| angle_cmp(&p.2, &q.2));
        rotations.push(ends.into_iter().map(|(e, w, _)| (e, w)).collect());
    }
    Diagram::new(
        graph.vertex_count(),
        edges,
        rotations,
        traversals,
        crossings,
    )
}

// -------------------------------------------------------------- fixtures

/// Triangle whose cycle restriction is the standard trefoil projection.
pub fn trefoil_triangle() -> Diagram {
    Diagram::new(
        3,
        vec![(0, 1), (1, 2), (2, 0)],
        vec![
            vec![(0, 0), (2, 1)],
            vec![(0, 1), (1, 0)],
            vec![(1, 1), (2, 0)],
        ],
        vec![vec![0, 1], vec![2, 0], vec![1, 2]],
        BTreeMap::from([
            (
                0,
                Crossing {
                    slots: [(0, 0), (1, 1)],
                    hand: Hand::L,
                },
            ),
            (
                1,
                Crossing {
                    slots: [(0, 1), (2, 0)],
                    hand: Hand::R,
                },
            ),
            (
                2,
                Crossing {
                    slots: [(1, 0), (2, 1)],
                    hand: Hand::L,
                },
            ),
        ]),
    )
    .expect("fixture is structurally sound")
}

/// A drawing of K3,3 (parts = odd/even vertices) with a single crossing.
pub fn k33_one_crossing() -> Diagram {
    let edges = vec![
        (0, 1),
        (0, 3),
        (0, 5),
        (1, 2),
        (1, 4),
        (2, 3),
        (2, 5),
        (3, 4),
        (4, 5),
    ];
    let eid = |u: VertexId, v: VertexId| -> (EdgeId, u8) {
        match edges.iter().position(|&(a, b)| (a, b) == (u, v)) {
            Some(e) => (e, 0),
            None => (
                edges.iter().position(|&(a, b)| (a, b) == (v, u)).unwrap(),
                1,
            ),
        }
    };
    let rot = vec![
        vec![eid(0, 1), eid(0, 3), eid(0, 5)],
        vec![eid(1, 4), eid(1, 2), eid(1, 0)],
        vec![eid(2, 1), eid(2, 5), eid(2, 3)],
        vec![eid(3, 0), eid(3, 2), eid(3, 4)],
        vec![eid(4, 5), eid(4, 3), eid(4, 1)],
        vec![eid(5, 0), eid(5, 4), eid(5, 2)],
    ];
    let e25 = 6; // (2, 5)
    let e14 = 4; // (1, 4)
    let mut trav = vec![Vec::new(); edges.len()];
    trav[e25] = vec![0];
    trav[e14] = vec![0];
    Diagram::new(
        6,
        edges,
        rot,
        trav,
        BTreeMap::from([(
            0,
            Crossing {
                slots: [(e25, 0), (e14, 0)],
                hand: Hand::R,
            },
        )]),
    )
    .expect("fixture is structurally sound")
}

/// A drawing of K5 with a single crossing (edges (1,3) × (2,4)).
pub fn k5_one_crossing() -> Diagram {
    let edges = vec![
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
    ];
    let eid = |u: VertexId, v: VertexId| -> (EdgeId, u8) {
        match edges.iter().position(|&(a, b)| (a, b) == (u, v)) {
            Some(e) => (e, 0),
            None => (
                edges.iter().position(|&(a, b)| (a, b) == (v, u)).unwrap(),
                1,
            ),
        }
    };
    let rot = vec![
        vec![eid(0, 1), eid(0, 4), eid(0, 3), eid(0, 2)],
        vec![eid(1, 2), eid(1, 3), eid(1, 4), eid(1, 0)],
        vec![eid(2, 0), eid(2, 3), eid(2, 4), eid(2, 1)],
        vec![eid(3, 2), eid(3, 0), eid(3, 4), eid(3, 1)],
        vec![eid(4, 2), eid(4, 3), eid(4, 0), eid(4, 1)],
    ];
    let e13 = 5; // (1, 3)
    let e24 = 8; // (2, 4)
    let mut trav = vec![Vec::new(); edges.len()];
    trav[e13] = vec![0];
    trav[e24] = vec![0];
    Diagram::new(
        5,
        edges,
        rot,
        trav,
        BTreeMap::from([(
            0,
            Crossing {
                slots: [(e13, 0), (e24, 0)],
                hand: Hand::R,
            },
        )]),
    )
    .expect("fixture is structurally sound")
}

/// Trigons of a diagram whose three corners are distinct crossings (no
/// vertex corners).
pub fn vertex_free_trigons(diag: &Diagram) -> Vec<Vec<SegDart>> {
    diag.face_orbits()
        .into_iter()
        .filter(|orb| {
            orb.len() == 3 && {
                let sts: Vec<Station> = orb.iter().map(|&d| diag.station(d)).collect();
                sts.iter().all(|s| matches!(s, Station::Crossing(_)))
                    && sts.iter().collect::<BTreeSet<_>>().len() == 3
            }
        })
        .collect()
}
