//! Based plane curves as combinatorial data.
//!
//! A curve is an oriented circle immersed generically in the plane, recorded
//! as the based sequence of its double-point passages (each label appears
//! exactly twice) plus a handedness per double point. Handedness is stored
//! relative to the based order: `L` means that while traversing the *first*
//! passage of the label, the other strand crosses left to right. Moving the
//! base point past a passage swaps which passage is "first" and therefore
//! flips that label's stored handedness; [`PlaneCurve::rotate`] applies that
//! bookkeeping.
//!
//! Realizability in the sphere is decided purely combinatorially by tracing
//! face orbits: a curve with `c` double points is planar iff it has exactly
//! `c + 2` faces.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Handedness of a double point, relative to the based first passage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Hand {
    L,
    R,
}

impl Hand {
    pub fn flip(self) -> Hand {
        match self {
            Hand::L => Hand::R,
            Hand::R => Hand::L,
        }
    }

    /// `L = -1`, `R = +1`.
    pub fn value(self) -> i64 {
        match self {
            Hand::L => -1,
            Hand::R => 1,
        }
    }
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hand::L => "L",
            Hand::R => "R",
        })
    }
}

impl FromStr for Hand {
    type Err = Error;
    fn from_str(s: &str) -> Result<Hand> {
        match s {
            "L" => Ok(Hand::L),
            "R" => Ok(Hand::R),
            _ => Err(Error::invalid(format!(
                "handedness must be L or R, got {s:?}"
            ))),
        }
    }
}

/// A dart on the curve: arc index `a` (the arc between based positions `a`
/// and `a+1 mod n`) and a direction (`+1` along the orientation, `-1`
/// against). The tuple ordering is part of the move-site contract.
pub type CurveDart = (usize, i8);

/// Arc-insertion site for a doubled-strand move: two darts of the same face
/// on distinct arcs, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct R2Site {
    pub a: usize,
    pub da: i8,
    pub b: usize,
    pub db: i8,
}

/// A chord diagram: a double-occurrence word up to rotation and relabeling.
/// Stored in canonical form (first-occurrence labels `0..k`, minimal over
/// rotations).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    word: Vec<u32>,
}

impl ChordDiagram {
    pub fn new(word: impl Into<Vec<u32>>) -> Result<ChordDiagram> {
        let word = word.into();
        check_double_occurrence(&word)?;
        Ok(ChordDiagram {
            word: canonical_word(&word),
        })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    /// The single interleaved pair: the minimal self-crossing obstruction.
    pub fn interleaved_pair() -> ChordDiagram {
        ChordDiagram::new(vec![1, 2, 1, 2]).unwrap()
    }

    /// The three-chord "path" diagram `(1,2,1,3,2,3)`.
    pub fn path_three() -> ChordDiagram {
        ChordDiagram::new(vec![1, 2, 1, 3, 2, 3]).unwrap()
    }
}

/// Canonical form of a double-occurrence word: minimum over all rotations of
/// the first-occurrence relabeling.
pub fn canonical_word(word: &[u32]) -> Vec<u32> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u32>> = None;
    for r in 0..n {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = word[(i + r) % n];
            let next = map.len() as u32;
            let k = *map.entry(x).or_insert(next);
            out.push(k);
        }
        if best.as_ref().is_none_or(|b| out < *b) {
            best = Some(out);
        }
    }
    best.unwrap()
}

fn check_double_occurrence(word: &[u32]) -> Result<()> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in word {
        *counts.entry(x).or_insert(0) += 1;
    }
    for (x, c) in counts {
        if c != 2 {
            return Err(Error::structural(format!(
                "label {x} occurs {c} times (every label must occur exactly twice)"
            )));
        }
    }
    Ok(())
}

/// Witness that a pattern occurs as a sub-chord-diagram: which host labels
/// realize it and how pattern chords map onto them.
#[derive(Clone, Debug, Serialize)]
pub struct SubchordWitness {
    /// Chosen host labels, sorted.
    pub labels: Vec<u32>,
    /// `(pattern canonical chord, host label)` pairs.
    pub mapping: Vec<(u32, u32)>,
    /// Rotation of the induced subword that realizes the pattern's canonical
    /// form.
    pub rotation: usize,
}

/// Generic immersion of a circle: based double-occurrence sequence plus
/// handedness per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    seq: Vec<u32>,
    hand: BTreeMap<u32, Hand>,
}

impl PlaneCurve {
    pub fn new(
        seq: impl Into<Vec<u32>>,
        hand: impl IntoIterator<Item = (u32, Hand)>,
    ) -> Result<PlaneCurve> {
        let seq = seq.into();
        let hand: BTreeMap<u32, Hand> = hand.into_iter().collect();
        check_double_occurrence(&seq)?;
        let labels: Vec<u32> = {
            let mut l: Vec<u32> = seq.to_vec();
            l.sort_unstable();
            l.dedup();
            l
        };
        if labels.iter().ne(hand.keys()) {
            return Err(Error::structural(
                "handedness keys must be exactly the sequence labels".to_string(),
            ));
        }
        Ok(PlaneCurve { seq, hand })
    }

    /// The embedded circle (no double points).
    pub fn circle() -> PlaneCurve {
        PlaneCurve {
            seq: Vec::new(),
            hand: BTreeMap::new(),
        }
    }

    /// One-crossing curl.
    pub fn kink(hand: Hand) -> PlaneCurve {
        PlaneCurve::new(vec![1, 1], [(1, hand)]).unwrap()
    }

    /// The standard trefoil projection `(1,2,3,1,2,3)` with handedness L,R,L.
    pub fn trefoil() -> PlaneCurve {
        PlaneCurve::new(
            vec![1, 2, 3, 1, 2, 3],
            [(1, Hand::L), (2, Hand::R), (3, Hand::L)],
        )
        .unwrap()
    }

    /// The standard figure-eight projection `(1,2,3,4,2,1,4,3)`.
    pub fn figure_eight() -> PlaneCurve {
        PlaneCurve::new(
            vec![1, 2, 3, 4, 2, 1, 4, 3],
            [(1, Hand::L), (2, Hand::R), (3, Hand::R), (4, Hand::L)],
        )
        .unwrap()
    }

    pub fn sequence(&self) -> &[u32] {
        &self.seq
    }

    pub fn handedness(&self) -> &BTreeMap<u32, Hand> {
        &self.hand
    }

    pub fn hand_of(&self, label: u32) -> Option<Hand> {
        self.hand.get(&label).copied()
    }

    pub fn crossing_count(&self) -> usize {
        self.seq.len() / 2
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.hand.keys().copied()
    }

    pub fn max_label(&self) -> u32 {
        self.hand.keys().next_back().copied().unwrap_or(0)
    }

    /// Based positions `(first, second)` of every label.
    pub fn positions(&self) -> BTreeMap<u32, (usize, usize)> {
        let mut pos: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        let mut first: BTreeMap<u32, usize> = BTreeMap::new();
        for (i, &x) in self.seq.iter().enumerate() {
            match first.get(&x) {
                None => {
                    first.insert(x, i);
                }
                Some(&p) => {
                    pos.insert(x, (p, i));
                }
            }
        }
        pos
    }

    /// Station (label) a dart runs into.
    pub fn dart_station(&self, d: CurveDart) -> u32 {
        let n = self.seq.len();
        let (a, dr) = d;
        if dr > 0 {
            self.seq[(a + 1) % n]
        } else {
            self.seq[a]
        }
    }

    /// Face orbits of the immersed circle: each face is the cyclic list of
    /// darts along its boundary (faces on the left of each dart).
    pub fn face_orbits(&self) -> Vec<Vec<CurveDart>> {
        let n = self.seq.len();
        if n == 0 {
            return Vec::new();
        }
        let pos = self.positions();
        // Germ: (is_out, arc). CCW germ lists per label.
        let mut germs: BTreeMap<u32, [(bool, usize); 4]> = BTreeMap::new();
        for (&x, &(p1, p2)) in &pos {
            let fi = (false, (p1 + n - 1) % n);
            let fo = (true, p1);
            let si = (false, (p2 + n - 1) % n);
            let so = (true, p2);
            let list = match self.hand[&x] {
                Hand::L => [fo, si, fi, so],
                Hand::R => [fo, so, fi, si],
            };
            germs.insert(x, list);
        }
        let phi = |d: CurveDart| -> CurveDart {
            let (a, dr) = d;
            let (station, germ) = if dr > 0 {
                (self.seq[(a + 1) % n], (false, a))
            } else {
                (self.seq[a], (true, a))
            };
            let list = &germs[&station];
            let idx = list.iter().position(|&g| g == germ).expect("germ present");
            let (out, arc) = list[(idx + 3) % 4];
            if out {
                (arc, 1)
            } else {
                (arc, -1)
            }
        };
        let mut seen: std::collections::BTreeSet<CurveDart> = Default::default();
        let mut orbits = Vec::new();
        for a in 0..n {
            for s in [1i8, -1] {
                let d0 = (a, s);
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
        orbits
    }

    pub fn face_count(&self) -> usize {
        if self.seq.is_empty() {
            2
        } else {
            self.face_orbits().len()
        }
    }

    /// Planarity test: `c` double points need exactly `c + 2` faces.
    pub fn is_realizable(&self) -> bool {
        self.face_count() == self.crossing_count() + 2
    }

    /// Human-readable violations; empty iff the curve is a generic immersion
    /// of the circle in the plane.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let faces = self.face_count();
        let expect = self.crossing_count() + 2;
        if faces != expect {
            let genus = (2 + self.crossing_count() - faces) / 2;
            out.push(format!(
                "not planar: {faces} faces where {expect} are required (genus {genus})"
            ));
        }
        out
    }

    fn ensure_realizable(&self) -> Result<()> {
        if self.is_realizable() {
            Ok(())
        } else {
            Err(Error::Topological(format!(
                "curve is not planar: {} faces, expected {}",
                self.face_count(),
                self.crossing_count() + 2
            )))
        }
    }

    // ------------------------------------------------------------ structure

    /// Do chords `x` and `y` interleave around the circle?
    pub fn interleaves(&self, x: u32, y: u32) -> bool {
        let pos = self.positions();
        interleave_in(&pos, x, y)
    }

    /// For each label, the sorted list of labels interleaving it.
    pub fn interleave_lists(&self) -> BTreeMap<u32, Vec<u32>> {
        let pos = self.positions();
        let labels: Vec<u32> = pos.keys().copied().collect();
        let mut il: BTreeMap<u32, Vec<u32>> = labels.iter().map(|&x| (x, Vec::new())).collect();
        for (i, &x) in labels.iter().enumerate() {
            for &y in &labels[i + 1..] {
                if interleave_in(&pos, x, y) {
                    il.get_mut(&x).unwrap().push(y);
                    il.get_mut(&y).unwrap().push(x);
                }
            }
        }
        il
    }

    /// Every chord interleaves an even number of others (holds for every
    /// planar curve).
    pub fn gauss_evenness(&self) -> bool {
        self.interleave_lists().values().all(|v| v.len() % 2 == 0)
    }

    /// Does iterated removal of isolated (cyclically adjacent-passage) chords
    /// empty the word?
    pub fn r1_reducible(&self) -> bool {
        r1_reducible_word(&self.seq)
    }

    /// The underlying chord diagram, forgetting handedness.
    pub fn chord_diagram(&self) -> ChordDiagram {
        ChordDiagram {
            word: canonical_word(&self.seq),
        }
    }

    /// Move the base point forward past `r` passages. Chords with exactly one
    /// passage in the rotated-away prefix get their stored handedness flipped
    /// (their first/second passages swap roles).
    pub fn rotate(&self, r: usize) -> PlaneCurve {
        let n = self.seq.len();
        if n == 0 {
            return self.clone();
        }
        let r = r % n;
        let pos = self.positions();
        let mut seq = Vec::with_capacity(n);
        seq.extend_from_slice(&self.seq[r..]);
        seq.extend_from_slice(&self.seq[..r]);
        let hand = pos
            .iter()
            .map(|(&x, &(p1, p2))| {
                let h = self.hand[&x];
                (x, if p1 < r && r <= p2 { h.flip() } else { h })
            })
            .collect();
        PlaneCurve { seq, hand }
    }

    /// Canonical form under base-point moves: the minimal (word, handedness)
    /// pair over all rotations, with first-occurrence labels `0..c`.
    pub fn canonical(&self) -> (Vec<u32>, Vec<Hand>) {
        let n = self.seq.len();
        if n == 0 {
            return (Vec::new(), Vec::new());
        }
        let mut best: Option<(Vec<u32>, Vec<Hand>)> = None;
        for r in 0..n {
            let rot = self.rotate(r);
            let mut map: BTreeMap<u32, u32> = BTreeMap::new();
            let mut word = Vec::with_capacity(n);
            for &x in &rot.seq {
                let next = map.len() as u32;
                let k = *map.entry(x).or_insert(next);
                word.push(k);
            }
            let mut hv = vec![Hand::L; n / 2];
            for (&x, &k) in &map {
                hv[k as usize] = rot.hand[&x];
            }
            let cand = (word, hv);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }

    /// Rebuild a curve from a canonical class representative.
    pub fn from_canonical(word: &[u32], hands: &[Hand]) -> Result<PlaneCurve> {
        if hands.len() != word.len() / 2 {
            return Err(Error::structural(
                "canonical handedness length must be half the word length".to_string(),
            ));
        }
        PlaneCurve::new(
            word.to_vec(),
            word.iter()
                .map(|&x| (x, hands[x as usize]))
                .collect::<BTreeMap<_, _>>(),
        )
    }

    /// Same curve up to moving the base point.
    pub fn equivalent(&self, other: &PlaneCurve) -> bool {
        self.canonical() == other.canonical()
    }

    /// Search for the pattern as a sub-chord-diagram: choose `k` chords whose
    /// induced subword matches the pattern up to rotation and relabeling.
    pub fn contains(&self, pattern: &ChordDiagram) -> Option<SubchordWitness> {
        contains_in_word(&self.seq, pattern)
    }

    // ---------------------------------------------------------------- faces

    /// Trigons: faces of size 3 whose three corners are distinct double
    /// points. Returned as sorted `[arc; 3]` lists.
    pub fn trigons(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for orb in self.face_orbits() {
            if orb.len() != 3 {
                continue;
            }
            let stations: Vec<u32> = orb.iter().map(|&d| self.dart_station(d)).collect();
            let mut uniq = stations.clone();
            uniq.sort_unstable();
            uniq.dedup();
            if uniq.len() == 3 {
                let mut arcs = [orb[0].0, orb[1].0, orb[2].0];
                arcs.sort_unstable();
                out.push(arcs);
            }
        }
        out
    }

    /// How many of the trigon's boundary darts run along the curve
    /// orientation (0..=3); the move delta's sign groups by this class.
    pub fn trigon_class(&self, arcs: &[usize; 3]) -> Result<usize> {
        for orb in self.face_orbits() {
            if orb.len() == 3 {
                let mut oa = [orb[0].0, orb[1].0, orb[2].0];
                oa.sort_unstable();
                if oa == *arcs {
                    return Ok(orb.iter().filter(|&&(_, dr)| dr > 0).count());
                }
            }
        }
        Err(Error::invalid(format!("no trigon with arcs {arcs:?}")))
    }

    pub fn monogon_on(&self, label: u32) -> bool {
        self.face_orbits()
            .iter()
            .any(|orb| orb.len() == 1 && self.dart_station(orb[0]) == label)
    }

    pub fn bigon_on(&self, x: u32, y: u32) -> bool {
        self.face_orbits().iter().any(|orb| {
            orb.len() == 2 && {
                let mut sts = [self.dart_station(orb[0]), self.dart_station(orb[1])];
                sts.sort_unstable();
                sts == [x.min(y), x.max(y)]
            }
        })
    }

    // ---------------------------------------------------------------- moves

    /// Add a curl on arc `arc` (insert an adjacent passage pair). Both
    /// chiralities are always legal. Returns the new curve and the fresh
    /// label.
    pub fn r1_plus(&self, arc: usize, hand: Hand) -> Result<(PlaneCurve, u32)> {
        let n = self.seq.len();
        if n > 0 && arc >= n {
            return Err(Error::invalid(format!("arc {arc} out of range (<{n})")));
        }
        let lab = self.max_label() + 1;
        let mut seq = self.seq.clone();
        let at = if n == 0 { 0 } else { arc + 1 };
        seq.splice(at..at, [lab, lab]);
        let mut h = self.hand.clone();
        h.insert(lab, hand);
        Ok((PlaneCurve { seq, hand: h }, lab))
    }

    /// Remove the curl at `label` (its passages must be cyclically adjacent
    /// and bound a monogon).
    pub fn r1_minus(&self, label: u32) -> Result<PlaneCurve> {
        let pos = self.positions();
        let &(p1, p2) = pos
            .get(&label)
            .ok_or_else(|| Error::invalid(format!("no label {label}")))?;
        let n = self.seq.len();
        if (p2 - p1) % n != 1 && (p1 + n - p2) % n != 1 {
            return Err(Error::invalid(format!(
                "label {label} passages are not adjacent"
            )));
        }
        if !self.monogon_on(label) {
            return Err(Error::invalid(format!("label {label} bounds no monogon")));
        }
        Ok(self.remove_labels(&[label]))
    }

    /// Insertion sites for the doubled-strand move: unordered pairs of
    /// same-face darts on distinct arcs, sorted.
    pub fn r2_sites(&self) -> Vec<R2Site> {
        let mut sites: std::collections::BTreeSet<R2Site> = Default::default();
        for orb in self.face_orbits() {
            for i in 0..orb.len() {
                for j in i + 1..orb.len() {
                    let (d1, d2) = (orb[i], orb[j]);
                    if d1.0 == d2.0 {
                        continue;
                    }
                    let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
                    sites.insert(R2Site {
                        a: lo.0,
                        da: lo.1,
                        b: hi.0,
                        db: hi.1,
                    });
                }
            }
        }
        sites.into_iter().collect()
    }

    /// Push one strand across another at `site`, creating a cancelling
    /// passage pair (labels `X < Y`, returned). The insertion pattern and
    /// handedness are determined by the site's dart directions; the result is
    /// always planar and carries a bigon on `{X, Y}`.
    pub fn r2_plus(&self, site: R2Site) -> Result<(PlaneCurve, u32, u32)> {
        let n = self.seq.len();
        if site.a >= site.b || site.b >= n {
            return Err(Error::invalid(format!("bad insertion site {site:?}")));
        }
        let x = self.max_label() + 1;
        let y = x + 1;
        let ins_a = [x, y];
        let ins_b = if site.da == site.db { [y, x] } else { [x, y] };
        let hx = if site.db > 0 { Hand::R } else { Hand::L };
        let hy = hx.flip();
        let mut seq = self.seq.clone();
        seq.splice(site.b + 1..site.b + 1, ins_b);
        seq.splice(site.a + 1..site.a + 1, ins_a);
        let mut h = self.hand.clone();
        h.insert(x, hx);
        h.insert(y, hy);
        Ok((PlaneCurve { seq, hand: h }, x, y))
    }

    /// Cancel the passage pair `{x, y}` (they must bound a bigon).
    pub fn r2_minus(&self, x: u32, y: u32) -> Result<PlaneCurve> {
        if !self.hand.contains_key(&x) || !self.hand.contains_key(&y) || x == y {
            return Err(Error::invalid(format!("labels {x}, {y} not a chord pair")));
        }
        if !self.bigon_on(x, y) {
            return Err(Error::invalid(format!("labels {x}, {y} bound no bigon")));
        }
        Ok(self.remove_labels(&[x, y]))
    }

    /// Triangle move across the trigon with the given arcs: swap the two
    /// corner passages on each of the three strands. A swap that wraps past
    /// the base point moves both of its passages across the base, so their
    /// stored handedness flips.
    pub fn r3(&self, arcs: &[usize; 3]) -> Result<PlaneCurve> {
        if !self.trigons().contains(arcs) {
            return Err(Error::invalid(format!("no trigon with arcs {arcs:?}")));
        }
        let n = self.seq.len();
        let mut seq = self.seq.clone();
        let mut hand = self.hand.clone();
        for &a in arcs {
            let i = a;
            let j = (a + 1) % n;
            debug_assert_ne!(seq[i], seq[j]);
            if j == 0 {
                let hi = hand[&seq[i]].flip();
                hand.insert(seq[i], hi);
                let hj = hand[&seq[j]].flip();
                hand.insert(seq[j], hj);
            }
            seq.swap(i, j);
        }
        Ok(PlaneCurve { seq, hand })
    }

    fn remove_labels(&self, labels: &[u32]) -> PlaneCurve {
        let seq = self
            .seq
            .iter()
            .copied()
            .filter(|x| !labels.contains(x))
            .collect();
        let hand = self
            .hand
            .iter()
            .filter(|(k, _)| !labels.contains(k))
            .map(|(&k, &v)| (k, v))
            .collect();
        PlaneCurve { seq, hand }
    }

    /// All curve moves require a planar host; call before applying batches.
    pub fn require_planar(&self) -> Result<&Self> {
        self.ensure_realizable()?;
        Ok(self)
    }
}

fn interleave_in(pos: &BTreeMap<u32, (usize, usize)>, x: u32, y: u32) -> bool {
    let (a1, a2) = pos[&x];
    let (b1, b2) = pos[&y];
    (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2)
}

fn r1_reducible_word(word: &[u32]) -> bool {
    let mut s: Vec<u32> = word.to_vec();
    let mut changed = true;
    while changed && !s.is_empty() {
        changed = false;
        let n = s.len();
        for i in 0..n {
            if s[i] == s[(i + 1) % n] {
                let lab = s[i];
                s.retain(|&y| y != lab);
                changed = true;
                break;
            }
        }
    }
    s.is_empty()
}

/// Pattern containment in an arbitrary double-occurrence word.
pub fn contains_in_word(word: &[u32], pattern: &ChordDiagram) -> Option<SubchordWitness> {
    let mut labels: Vec<u32> = word.to_vec();
    labels.sort_unstable();
    labels.dedup();
    let k = pattern.chord_count();
    if k > labels.len() || k == 0 {
        return None;
    }
    let target = pattern.word();
    let mut found: Option<SubchordWitness> = None;
    for_each_combination(labels.len(), k, &mut |choice| {
        let chosen: Vec<u32> = choice.iter().map(|&i| labels[i]).collect();
        let induced: Vec<u32> = word
            .iter()
            .copied()
            .filter(|x| chosen.contains(x))
            .collect();
        let m = induced.len();
        for r in 0..m {
            let mut map: BTreeMap<u32, u32> = BTreeMap::new();
            let mut ok = true;
            for i in 0..m {
                let x = induced[(i + r) % m];
                let next = map.len() as u32;
                let lab = *map.entry(x).or_insert(next);
                if lab != target[i] {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mapping: Vec<(u32, u32)> =
                    map.iter().map(|(&host, &pat)| (pat, host)).collect();
                let mut mapping = mapping;
                mapping.sort_unstable();
                found = Some(SubchordWitness {
                    labels: chosen.clone(),
                    mapping,
                    rotation: r,
                });
                return false;
            }
        }
        true
    });
    found
}

/// Verify a containment witness against the host word and pattern.
pub fn verify_subchord(word: &[u32], pattern: &ChordDiagram, w: &SubchordWitness) -> bool {
    let chosen: Vec<u32> = w.labels.clone();
    if chosen.len() != pattern.chord_count() {
        return false;
    }
    let induced: Vec<u32> = word
        .iter()
        .copied()
        .filter(|x| chosen.contains(x))
        .collect();
    let m = induced.len();
    if m != pattern.word().len() || w.rotation >= m {
        return false;
    }
    let back: BTreeMap<u32, u32> = w.mapping.iter().map(|&(pat, host)| (host, pat)).collect();
    if back.len() != chosen.len() {
        return false;
    }
    for i in 0..m {
        let host = induced[(i + w.rotation) % m];
        match back.get(&host) {
            Some(&pat) if pat == pattern.word()[i] => {}
            _ => return false,
        }
    }
    true
}

/// Visit k-subsets of `0..n` in lexicographic order; callback returns
/// `false` to stop.
fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        if !f(&idx) {
            return;
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
