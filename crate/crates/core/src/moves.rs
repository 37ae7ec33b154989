//! Local moves on immersed graph diagrams, and seeded random walks.
//!
//! The move family:
//! - `R1±` curl / uncurl one strand (±1 crossing, monogon face),
//! - `R2±` push one strand over another across a shared face / pull a
//!   two-crossing bigon apart (±2 crossings),
//! - `R3` slide a strand across a crossing-bounded trigon (0 crossings,
//!   self-inverse),
//! - `R4` slide a graph vertex across a strand bounding a shared face
//!   (+deg(v) crossings, one per edge-end at the vertex),
//! - `R5±` twist / untwist two cyclically adjacent edge-ends at a vertex
//!   (±1 crossing between the two edges).
//!
//! Creation moves are deterministic: the insertion pattern and handedness
//! are derived from the site's dart directions (for `R2+`, the directions
//! the two strands run along the shared face; for `R4`, the strand direction
//! against each edge-end's attachment side; for `R5+`, whether the two
//! edge-ends point the same way). These rules are the unique choices that
//! keep the diagram planar, which `apply_move` re-checks after every
//! surgery. At a degree-2 vertex both `R5+` chiralities are legal and both
//! are enumerated.

use crate::curve::Hand;
use crate::diagram::{Crossing, CrossingId, Diagram, SegDart, Station};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ops::ControlFlow;

pub const DEFAULT_MAX_CROSSINGS: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GraphMove {
    /// Curl segment `seg` of `edge` into a small loop of the given chirality.
    R1Plus {
        edge: EdgeId,
        seg: usize,
        hand: Hand,
    },
    /// Remove the crossing bounding a monogon face.
    R1Minus { crossing: CrossingId },
    /// Push the strand at dart `first` across the strand at `second` (both
    /// darts border a common face; stored sorted).
    R2Plus { first: SegDart, second: SegDart },
    /// Pull apart the two crossings bounding a bigon face.
    R2Minus { crossings: (CrossingId, CrossingId) },
    /// Slide across the trigon face with this dart boundary.
    R3 { trigon: [SegDart; 3] },
    /// Slide `vertex` across the strand at `strand`; `corner` is the
    /// rotation index of the edge-end whose departing face contains the
    /// strand.
    R4 {
        vertex: VertexId,
        corner: usize,
        strand: SegDart,
    },
    /// Twist the edge-ends at rotation positions `position, position+1`.
    R5Plus {
        vertex: VertexId,
        position: usize,
        hand: Hand,
    },
    /// Untwist the crossing bounding a bigon face together with `vertex`.
    R5Minus {
        vertex: VertexId,
        crossing: CrossingId,
    },
}

impl GraphMove {
    /// Change in crossing count when applied to `d`.
    pub fn crossing_delta(&self, d: &Diagram) -> i64 {
        match self {
            GraphMove::R1Plus { .. } => 1,
            GraphMove::R1Minus { .. } => -1,
            GraphMove::R2Plus { .. } => 2,
            GraphMove::R2Minus { .. } => -2,
            GraphMove::R3 { .. } => 0,
            GraphMove::R4 { vertex, .. } => d.degree(*vertex) as i64,
            GraphMove::R5Plus { .. } => 1,
            GraphMove::R5Minus { .. } => -1,
        }
    }
}

fn fresh_ids(d: &Diagram, k: usize) -> Vec<CrossingId> {
    let base = d.crossings().keys().next_back().map_or(0, |&m| m + 1);
    (0..k as CrossingId).map(|i| base + i).collect()
}

fn shift_refs(d: &mut Diagram, e: EdgeId, idx: usize, delta: isize) {
    for c in d.crossings.values_mut() {
        for s in c.slots.iter_mut() {
            if s.0 == e && s.1 >= idx {
                s.1 = (s.1 as isize + delta) as usize;
            }
        }
    }
}

fn remove_crossing(d: &mut Diagram, x: CrossingId) -> Result<()> {
    let c = d
        .crossings
        .remove(&x)
        .ok_or_else(|| Error::invalid(format!("no crossing {x}")))?;
    let mut slots = c.slots;
    slots.sort_by_key(|s| std::cmp::Reverse(s.1));
    for (e, i) in slots {
        if d.traversals[e].get(i) != Some(&x) {
            return Err(Error::invalid(format!(
                "stale site: crossing {x} not at edge {e} position {i}"
            )));
        }
        d.traversals[e].remove(i);
        shift_refs(d, e, i + 1, -1);
    }
    Ok(())
}

/// Faces whose boundary is a given number of darts, as `(orbit, stations)`.
fn faces_of_size(d: &Diagram, size: usize) -> Vec<(Vec<SegDart>, Vec<Station>)> {
    d.face_orbits()
        .into_iter()
        .filter(|o| o.len() == size)
        .map(|o| {
            let sts = o.iter().map(|&dd| d.station(dd)).collect();
            (o, sts)
        })
        .collect()
}

fn is_crossing(s: Station) -> Option<CrossingId> {
    match s {
        Station::Crossing(x) => Some(x),
        Station::Vertex(_) => None,
    }
}

/// All applicable move sites, in a fixed deterministic order.
pub fn enumerate_moves(d: &Diagram) -> Vec<GraphMove> {
    let orbits = d.face_orbits();
    let mut out = Vec::new();

    // R1+: every segment, both chiralities.
    for e in 0..d.edge_list().len() {
        for seg in 0..=d.traversals()[e].len() {
            for hand in [Hand::L, Hand::R] {
                out.push(GraphMove::R1Plus { edge: e, seg, hand });
            }
        }
    }
    // R1-: monogon faces cornered on a crossing.
    for orb in &orbits {
        if orb.len() == 1 {
            if let Some(x) = is_crossing(d.station(orb[0])) {
                out.push(GraphMove::R1Minus { crossing: x });
            }
        }
    }
    // R2+: unordered pairs of darts on a common face, distinct segments.
    for orb in &orbits {
        for i in 0..orb.len() {
            for j in i + 1..orb.len() {
                let (d1, d2) = (orb[i], orb[j]);
                if (d1.edge, d1.seg) == (d2.edge, d2.seg) {
                    continue;
                }
                let (first, second) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
                out.push(GraphMove::R2Plus { first, second });
            }
        }
    }
    // R2-: bigon faces cornered on two distinct crossings.
    for orb in &orbits {
        if orb.len() == 2 {
            let (a, b) = (d.station(orb[0]), d.station(orb[1]));
            if let (Some(x), Some(y)) = (is_crossing(a), is_crossing(b)) {
                if x != y {
                    out.push(GraphMove::R2Minus {
                        crossings: (x.min(y), x.max(y)),
                    });
                }
            }
        }
    }
    // R3: trigon faces cornered on three distinct crossings.
    for orb in &orbits {
        if orb.len() == 3 {
            let sts: Vec<Station> = orb.iter().map(|&dd| d.station(dd)).collect();
            let xs: Vec<CrossingId> = sts.iter().filter_map(|&s| is_crossing(s)).collect();
            if xs.len() == 3 && xs.iter().collect::<std::collections::BTreeSet<_>>().len() == 3 {
                out.push(GraphMove::R3 {
                    trigon: [orb[0], orb[1], orb[2]],
                });
            }
        }
    }
    // R4: vertex corner sharing a face with a strand on a non-incident edge.
    for v in 0..d.vertex_count() {
        for corner in 0..d.degree(v) {
            let dep = departing_dart(d, v, corner);
            let orb = orbits
                .iter()
                .find(|o| o.contains(&dep))
                .expect("every dart lies on a face");
            for &sd in orb {
                let (u1, u2) = d.edge_list()[sd.edge];
                if u1 == v || u2 == v {
                    continue;
                }
                out.push(GraphMove::R4 {
                    vertex: v,
                    corner,
                    strand: sd,
                });
            }
        }
    }
    // R5+: cyclically adjacent edge-end pairs. The planar chirality is
    // determined by the end types except at degree-2 vertices, where both
    // work.
    for v in 0..d.vertex_count() {
        let deg = d.degree(v);
        for position in 0..deg {
            let (ea, wa) = d.rotations()[v as usize][position];
            let (eb, wb) = d.rotations()[v as usize][(position + 1) % deg];
            if ea == eb {
                continue;
            }
            let rule = if wa == wb { Hand::R } else { Hand::L };
            out.push(GraphMove::R5Plus {
                vertex: v,
                position,
                hand: rule,
            });
            if deg == 2 {
                out.push(GraphMove::R5Plus {
                    vertex: v,
                    position,
                    hand: rule.flip(),
                });
            }
        }
    }
    // R5-: bigon faces cornered on a vertex and a crossing.
    for orb in &orbits {
        if orb.len() == 2 {
            let (a, b) = (d.station(orb[0]), d.station(orb[1]));
            let site = match (a, b) {
                (Station::Vertex(v), Station::Crossing(x)) => Some((v, x)),
                (Station::Crossing(x), Station::Vertex(v)) => Some((v, x)),
                _ => None,
            };
            if let Some((vertex, crossing)) = site {
                out.push(GraphMove::R5Minus { vertex, crossing });
            }
        }
    }
    out
}

/// The dart leaving `v` along the edge-end at rotation index `corner`.
fn departing_dart(d: &Diagram, v: VertexId, corner: usize) -> SegDart {
    let (e, w) = d.rotations()[v as usize][corner];
    if w == 0 {
        SegDart {
            edge: e,
            seg: 0,
            dir: 1,
        }
    } else {
        SegDart {
            edge: e,
            seg: d.traversals()[e].len(),
            dir: -1,
        }
    }
}

fn stale(msg: impl Into<String>) -> Error {
    Error::invalid(format!("stale move site: {}", msg.into()))
}

/// Apply a move. The site must be currently applicable (typically one
/// returned by [`enumerate_moves`] on the same diagram); the result is
/// re-validated structurally and topologically.
pub fn apply_move(d: &Diagram, m: &GraphMove) -> Result<Diagram> {
    let mut nd = d.clone();
    match *m {
        GraphMove::R1Plus { edge, seg, hand } => {
            if edge >= nd.traversals.len() || seg > nd.traversals[edge].len() {
                return Err(stale(format!("no segment {seg} on edge {edge}")));
            }
            let lab = fresh_ids(d, 1)[0];
            shift_refs(&mut nd, edge, seg, 2);
            nd.traversals[edge].splice(seg..seg, [lab, lab]);
            nd.crossings.insert(
                lab,
                Crossing {
                    slots: [(edge, seg), (edge, seg + 1)],
                    hand,
                },
            );
        }
        GraphMove::R1Minus { crossing } => {
            let has_monogon = faces_of_size(d, 1)
                .iter()
                .any(|(_, sts)| sts[0] == Station::Crossing(crossing));
            if !has_monogon {
                return Err(stale(format!("crossing {crossing} bounds no monogon")));
            }
            remove_crossing(&mut nd, crossing)?;
        }
        GraphMove::R2Plus { first, second } => {
            apply_r2_plus(d, &mut nd, first, second)?;
        }
        GraphMove::R2Minus { crossings: (x, y) } => {
            let has_bigon = faces_of_size(d, 2).iter().any(|(_, sts)| {
                let mut c: Vec<CrossingId> = sts.iter().filter_map(|&s| is_crossing(s)).collect();
                c.sort_unstable();
                c == vec![x.min(y), x.max(y)] && x != y
            });
            if !has_bigon {
                return Err(stale(format!("crossings {x}, {y} bound no bigon")));
            }
            remove_crossing(&mut nd, x)?;
            remove_crossing(&mut nd, y)?;
        }
        GraphMove::R3 { trigon } => {
            apply_r3(d, &mut nd, &trigon)?;
        }
        GraphMove::R4 {
            vertex,
            corner,
            strand,
        } => {
            apply_r4(d, &mut nd, vertex, corner, strand)?;
        }
        GraphMove::R5Plus {
            vertex,
            position,
            hand,
        } => {
            apply_r5_plus(&mut nd, vertex, position, hand)?;
        }
        GraphMove::R5Minus { vertex, crossing } => {
            apply_r5_minus(d, &mut nd, vertex, crossing)?;
        }
    }
    nd.check_structure()?;
    nd.require_planar()?;
    Ok(nd)
}

fn apply_r2_plus(d: &Diagram, nd: &mut Diagram, first: SegDart, second: SegDart) -> Result<()> {
    if !(first < second) || (first.edge, first.seg) == (second.edge, second.seg) {
        return Err(stale("doubled-strand site must be a sorted distinct pair"));
    }
    let on_common_face = d
        .face_orbits()
        .iter()
        .any(|o| o.contains(&first) && o.contains(&second));
    if !on_common_face {
        return Err(stale("darts do not border a common face"));
    }
    let ids = fresh_ids(d, 2);
    let (la, lb) = (ids[0], ids[1]);
    let (e1, j1) = (first.edge, first.seg);
    let (e2, j2) = (second.edge, second.seg);
    let swap2 = first.dir == second.dir;
    let ha = if second.dir > 0 { Hand::R } else { Hand::L };
    let hb = ha.flip();
    let ins1 = [la, lb];
    let ins2 = if swap2 { [lb, la] } else { [la, lb] };
    if e1 == e2 {
        let (lo, hi) = (j1.min(j2), j1.max(j2));
        let j1_is_lo = lo == j1;
        let ins_lo = if j1_is_lo { ins1 } else { ins2 };
        let ins_hi = if j1_is_lo { ins2 } else { ins1 };
        shift_refs(nd, e1, hi, 2);
        nd.traversals[e1].splice(hi..hi, ins_hi);
        shift_refs(nd, e1, lo, 2);
        nd.traversals[e1].splice(lo..lo, ins_lo);
        let pos_of = |lab: CrossingId| -> Vec<usize> {
            nd.traversals[e1]
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == lab)
                .map(|(i, _)| i)
                .collect()
        };
        let (pa, pb) = (pos_of(la), pos_of(lb));
        // First slot = the passage in the `first`-dart block.
        let pick = |p: &[usize]| if j1_is_lo { (p[0], p[1]) } else { (p[1], p[0]) };
        let (af, asnd) = pick(&pa);
        let (bf, bsnd) = pick(&pb);
        nd.crossings.insert(
            la,
            Crossing {
                slots: [(e1, af), (e1, asnd)],
                hand: ha,
            },
        );
        nd.crossings.insert(
            lb,
            Crossing {
                slots: [(e1, bf), (e1, bsnd)],
                hand: hb,
            },
        );
    } else {
        shift_refs(nd, e2, j2, 2);
        nd.traversals[e2].splice(j2..j2, ins2);
        shift_refs(nd, e1, j1, 2);
        nd.traversals[e1].splice(j1..j1, ins1);
        let ia2 = j2 + ins2.iter().position(|&x| x == la).unwrap();
        let ib2 = j2 + ins2.iter().position(|&x| x == lb).unwrap();
        nd.crossings.insert(
            la,
            Crossing {
                slots: [(e1, j1), (e2, ia2)],
                hand: ha,
            },
        );
        nd.crossings.insert(
            lb,
            Crossing {
                slots: [(e1, j1 + 1), (e2, ib2)],
                hand: hb,
            },
        );
    }
    Ok(())
}

fn apply_r3(d: &Diagram, nd: &mut Diagram, trigon: &[SegDart; 3]) -> Result<()> {
    let site: std::collections::BTreeSet<SegDart> = trigon.iter().copied().collect();
    let current = d.face_orbits().into_iter().any(|o| {
        o.len() == 3 && o.iter().copied().collect::<std::collections::BTreeSet<_>>() == site
    });
    let stations: std::collections::BTreeSet<Station> =
        trigon.iter().map(|&dd| d.station(dd)).collect();
    if !current
        || stations.len() != 3
        || !stations.iter().all(|&s| matches!(s, Station::Crossing(_)))
    {
        return Err(stale("darts do not bound a crossing-cornered trigon"));
    }
    for &SegDart {
        edge: e, seg: j, ..
    } in trigon
    {
        if j == 0 || j > nd.traversals[e].len() {
            return Err(stale("trigon dart touches an edge endpoint"));
        }
        let (i, k) = (j - 1, j);
        let x = nd.traversals[e][i];
        let y = nd.traversals[e][k];
        if x == y {
            return Err(stale("trigon side with equal corners"));
        }
        nd.traversals[e].swap(i, k);
        for (lab, old, new) in [(x, i, k), (y, k, i)] {
            let old_slot = (e, old);
            let new_slot = (e, new);
            let c = nd
                .crossings
                .get_mut(&lab)
                .ok_or_else(|| stale(format!("crossing {lab} missing")))?;
            let [s1, s2] = c.slots;
            c.slots = if s1 == old_slot && s2 == new_slot {
                [new_slot, old_slot]
            } else if s2 == old_slot && s1 == new_slot {
                [old_slot, new_slot]
            } else if s1 == old_slot {
                [new_slot, s2]
            } else if s2 == old_slot {
                [s1, new_slot]
            } else {
                return Err(stale(format!(
                    "crossing {lab} has no passage at {old_slot:?}"
                )));
            };
        }
    }
    Ok(())
}

fn apply_r4(
    d: &Diagram,
    nd: &mut Diagram,
    v: VertexId,
    corner: usize,
    strand: SegDart,
) -> Result<()> {
    let k = d.degree(v);
    if corner >= k {
        return Err(stale(format!("vertex {v} has no edge-end {corner}")));
    }
    let (u1, u2) = d.edge_list()[strand.edge];
    if u1 == v || u2 == v {
        return Err(stale("strand edge is incident to the sliding vertex"));
    }
    let dep = departing_dart(d, v, corner);
    let shares_face = d
        .face_orbits()
        .iter()
        .any(|o| o.contains(&dep) && o.contains(&strand));
    if !shares_face {
        return Err(stale(
            "vertex corner and strand do not border a common face",
        ));
    }
    let (es, js, ds) = (strand.edge, strand.seg, strand.dir);
    // Order the edge-ends as the strand direction meets them.
    let germ_order: Vec<usize> = if ds > 0 {
        (0..k).map(|i| (corner + k - i) % k).collect()
    } else {
        (0..k).map(|i| (corner + 1 + i) % k).collect()
    };
    let names = fresh_ids(d, k);
    shift_refs(nd, es, js, k as isize);
    nd.traversals[es].splice(js..js, names.iter().copied());
    for (i, &gi) in germ_order.iter().enumerate() {
        let (eg, wg) = nd.rotations[v as usize][gi];
        debug_assert_ne!(eg, es);
        let head = wg == 1;
        let hand = if (ds > 0) != head { Hand::R } else { Hand::L };
        let ig = if wg == 0 { 0 } else { nd.traversals[eg].len() };
        shift_refs(nd, eg, ig, 1);
        nd.traversals[eg].insert(ig, names[i]);
        nd.crossings.insert(
            names[i],
            Crossing {
                slots: [(es, js + i), (eg, ig)],
                hand,
            },
        );
    }
    Ok(())
}

fn apply_r5_plus(nd: &mut Diagram, v: VertexId, position: usize, hand: Hand) -> Result<()> {
    let deg = nd.degree(v);
    if position >= deg {
        return Err(stale(format!("vertex {v} has no edge-end {position}")));
    }
    let next = (position + 1) % deg;
    let (ea, wa) = nd.rotations[v as usize][position];
    let (eb, wb) = nd.rotations[v as usize][next];
    if ea == eb {
        return Err(stale("twist needs two distinct edges"));
    }
    let lab = fresh_ids(nd, 1)[0];
    let ia = if wa == 0 { 0 } else { nd.traversals[ea].len() };
    shift_refs(nd, ea, ia, 1);
    nd.traversals[ea].insert(ia, lab);
    let ib = if wb == 0 { 0 } else { nd.traversals[eb].len() };
    shift_refs(nd, eb, ib, 1);
    nd.traversals[eb].insert(ib, lab);
    nd.crossings.insert(
        lab,
        Crossing {
            slots: [(ea, ia), (eb, ib)],
            hand,
        },
    );
    nd.rotations[v as usize].swap(position, next);
    Ok(())
}

fn apply_r5_minus(d: &Diagram, nd: &mut Diagram, v: VertexId, x: CrossingId) -> Result<()> {
    let twist_face = faces_of_size(d, 2).iter().any(|(_, sts)| {
        let mut want = vec![Station::Vertex(v), Station::Crossing(x)];
        want.sort_unstable();
        let mut got = sts.clone();
        got.sort_unstable();
        got == want
    });
    if !twist_face {
        return Err(stale(format!(
            "no twist bigon on vertex {v} and crossing {x}"
        )));
    }
    let c = *nd
        .crossings
        .get(&x)
        .ok_or_else(|| stale(format!("crossing {x} missing")))?;
    let (ea, eb) = (c.slots[0].0, c.slots[1].0);
    let rot = &nd.rotations[v as usize];
    let deg = rot.len();
    let pa = rot
        .iter()
        .position(|&(e, _)| e == ea)
        .ok_or_else(|| stale("twisted edge not at vertex"))?;
    let pb = rot
        .iter()
        .position(|&(e, _)| e == eb)
        .ok_or_else(|| stale("twisted edge not at vertex"))?;
    if (pa + 1) % deg != pb && (pb + 1) % deg != pa {
        return Err(stale("twisted edge-ends are not cyclically adjacent"));
    }
    remove_crossing(nd, x)?;
    nd.rotations[v as usize].swap(pa, pb);
    Ok(())
}

// ---------------------------------------------------------------- walks

/// Caps applied during a random walk.
#[derive(Clone, Copy, Debug)]
pub struct WalkLimits {
    /// Hard bound on total crossings after any step.
    pub max_crossings: usize,
    /// Optional `(cycle length, max crossings)` bound on every cycle
    /// restriction of the result — keeps averaged invariants computable.
    pub cycle_cap: Option<(usize, usize)>,
}

impl Default for WalkLimits {
    fn default() -> Self {
        WalkLimits {
            max_crossings: DEFAULT_MAX_CROSSINGS,
            cycle_cap: None,
        }
    }
}

fn respects_cycle_cap(d: &Diagram, cap: Option<(usize, usize)>) -> bool {
    let Some((len, max)) = cap else {
        return true;
    };
    let g = d.graph();
    let mut ok = true;
    let _ = g.for_each_cycle(len, |cyc| match d.restrict_to_cycle(cyc) {
        Ok(c) if c.crossing_count() <= max => ControlFlow::Continue(()),
        _ => {
            ok = false;
            ControlFlow::Break(())
        }
    });
    ok
}

/// Seeded random walk: each step draws uniformly from the applicable moves
/// that respect `limits.max_crossings`, retrying (without replacement) any
/// draw that violates the cycle cap; a step with no viable move is skipped.
/// Deterministic for a fixed seed.
pub fn random_walk(
    start: &Diagram,
    steps: usize,
    seed: u64,
    limits: WalkLimits,
) -> Result<Diagram> {
    start.require_planar()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = start.clone();
    for _ in 0..steps {
        let mut pool: Vec<GraphMove> = enumerate_moves(&cur)
            .into_iter()
            .filter(|m| {
                cur.crossing_count() as i64 + m.crossing_delta(&cur) <= limits.max_crossings as i64
            })
            .collect();
        while !pool.is_empty() {
            let i = rng.gen_range(0..pool.len());
            let m = pool.swap_remove(i);
            let Ok(next) = apply_move(&cur, &m) else {
                continue;
            };
            if respects_cycle_cap(&next, limits.cycle_cap) {
                cur = next;
                break;
            }
        }
    }
    Ok(cur)
}
