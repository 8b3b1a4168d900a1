//! Combinatorial diagram of a braid closure.
//!
//! Strand positions `1..=b` run left to right, the braid is read bottom to
//! top, and every strand closes up around the right with strand 1 outermost.
//! Between crossings a strand keeps its position, so each arc lives at one
//! position `p` and separates gap `p - 1` (on its left, looking along the
//! orientation) from gap `p` (on its right). Gap 0 is the unbounded region.
//!
//! Each crossing has four ports in counterclockwise order: `S` (lower left),
//! `E` (lower right), `N` (upper right), `W` (upper left). The strand entering
//! at `S` leaves at `N`; the one entering at `E` leaves at `W`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::{BraidWord, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    S = 0,
    E = 1,
    N = 2,
    W = 3,
}

impl Port {
    pub const ALL: [Port; 4] = [Port::S, Port::E, Port::N, Port::W];

    fn from_index(i: usize) -> Port {
        Port::ALL[i % 4]
    }

    /// Next port clockwise.
    pub fn clockwise(self) -> Port {
        Port::from_index(self as usize + 3)
    }

    /// Outgoing ports carry arcs leaving the crossing.
    pub fn is_outgoing(self) -> bool {
        matches!(self, Port::N | Port::W)
    }
}

/// Which side of an arc, relative to its orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: usize,
    /// Generator index `k` of the letter `a_k`.
    pub column: u32,
    /// Index of the letter in the word.
    pub position: usize,
    /// Arc id attached at each port, indexed by `Port as usize`.
    pub ports: [usize; 4],
}

impl Crossing {
    pub fn arc_at(&self, port: Port) -> usize {
        self.ports[port as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: usize,
    /// Strand position `p` the arc runs along.
    pub position: usize,
    /// `(crossing, port)` the arc leaves from; `None` for a crossingless loop.
    pub tail: Option<(usize, Port)>,
    pub head: Option<(usize, Port)>,
}

impl Arc {
    pub fn is_loop(&self) -> bool {
        self.tail.is_none()
    }

    /// Gap index of the region on the given side.
    pub fn gap(&self, side: Side) -> usize {
        match side {
            Side::Left => self.position - 1,
            Side::Right => self.position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    strands: usize,
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
}

/// A region of the diagram. Regions of unused gaps are annuli and have two
/// boundary cycles; every other region has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub gap: usize,
    pub boundary: Vec<Vec<(usize, Side)>>,
    /// Position in the word of the crossing just below the face, when the
    /// face sits in a gap that carries crossings.
    pub floor: Option<usize>,
}

impl Face {
    pub fn arcs(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().flatten().map(|(a, _)| *a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub faces: Vec<Face>,
    pub unbounded: usize,
    /// `[left face, right face]` of every arc.
    pub arc_faces: Vec<[usize; 2]>,
}

impl Faces {
    pub fn face_of(&self, arc: usize, side: Side) -> usize {
        self.arc_faces[arc][side as usize]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Shaded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<Color>,
    pub unbounded: usize,
}

impl Coloring {
    pub fn color(&self, face: usize) -> Color {
        self.colors[face]
    }

    pub fn is_white(&self, face: usize) -> bool {
        self.colors[face] == Color::White
    }

    pub fn white_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.colors.len()).filter(|&f| self.is_white(f))
    }

    pub fn shaded_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.colors.len()).filter(|&f| !self.is_white(f))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingType {
    I,
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingClass {
    pub crossing: usize,
    pub kind: CrossingType,
    pub eta: i64,
}

/// Faces at the four corners of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corners {
    pub south: usize,
    pub east: usize,
    pub north: usize,
    pub west: usize,
}

/// Local sign `eta` of a positive crossing whose shaded corners are south
/// and north. The other shading gives the opposite sign.
const ETA_SHADED_VERTICAL: i64 = 1;

type Boundary = Vec<(usize, Side)>;

impl PlanarDiagram {
    /// Builds the closure diagram; crossings are the letters, bottom to top.
    pub fn closure(word: &BraidWord) -> PlanarDiagram {
        let b = word.strands();
        let letters = word.letters();
        let mut crossings: Vec<Crossing> = letters
            .iter()
            .enumerate()
            .map(|(i, &k)| Crossing {
                id: i,
                column: k,
                position: i,
                ports: [usize::MAX; 4],
            })
            .collect();
        let mut arcs = Vec::new();
        for p in 1..=b {
            let events: Vec<usize> = letters
                .iter()
                .enumerate()
                .filter(|(_, &k)| k as usize == p || k as usize + 1 == p)
                .map(|(i, _)| i)
                .collect();
            if events.is_empty() {
                arcs.push(Arc {
                    id: arcs.len(),
                    position: p,
                    tail: None,
                    head: None,
                });
                continue;
            }
            for (j, &from) in events.iter().enumerate() {
                let to = events[(j + 1) % events.len()];
                let left_of = |c: usize| letters[c] as usize == p;
                let out = if left_of(from) { Port::W } else { Port::N };
                let inc = if left_of(to) { Port::S } else { Port::E };
                let id = arcs.len();
                crossings[from].ports[out as usize] = id;
                crossings[to].ports[inc as usize] = id;
                arcs.push(Arc {
                    id,
                    position: p,
                    tail: Some((from, out)),
                    head: Some((to, inc)),
                });
            }
        }
        PlanarDiagram {
            strands: b,
            crossings,
            arcs,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.is_loop()).count()
    }

    /// Checks 4-valence and that every arc has both ends attached consistently.
    pub fn validate(&self) -> Result<()> {
        let mut ends = vec![0usize; self.arcs.len()];
        for c in &self.crossings {
            for port in Port::ALL {
                let a = c.arc_at(port);
                let arc = self
                    .arcs
                    .get(a)
                    .ok_or(Error::MalformedDiagram("crossing port without an arc"))?;
                let end = if port.is_outgoing() {
                    arc.tail
                } else {
                    arc.head
                };
                if end != Some((c.id, port)) {
                    return Err(Error::MalformedDiagram("arc end does not match port"));
                }
                ends[a] += 1;
            }
        }
        for arc in &self.arcs {
            let expected = if arc.is_loop() { 0 } else { 2 };
            if ends[arc.id] != expected {
                return Err(Error::MalformedDiagram("arc without exactly two ends"));
            }
        }
        Ok(())
    }

    /// Connected components of the diagram as a plane graph.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.arcs.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in &self.crossings {
            let root = find(&mut parent, c.ports[0]);
            for &a in &c.ports[1..] {
                let r = find(&mut parent, a);
                parent[r] = root;
            }
        }
        (0..self.arcs.len())
            .filter(|&a| find(&mut parent, a) == a)
            .count()
    }

    /// Traces the boundary cycle containing `(arc, side)`: keep the face on
    /// the left, leave every crossing through the port clockwise from the one
    /// we arrived at.
    fn trace(&self, start: (usize, Side)) -> Result<Vec<(usize, Side)>> {
        let mut cycle = vec![start];
        if self.arcs[start.0].is_loop() {
            return Ok(cycle);
        }
        let limit = 2 * self.arcs.len() + 1;
        let mut cur = start;
        loop {
            let arc = &self.arcs[cur.0];
            let (c, port) = match cur.1 {
                Side::Left => arc.head,
                Side::Right => arc.tail,
            }
            .ok_or(Error::MalformedDiagram("open arc"))?;
            let next_port = port.clockwise();
            let next_arc = self.crossings[c].arc_at(next_port);
            let side = if next_port.is_outgoing() {
                Side::Left
            } else {
                Side::Right
            };
            cur = (next_arc, side);
            if cur == start {
                return Ok(cycle);
            }
            cycle.push(cur);
            if cycle.len() > limit {
                return Err(Error::MalformedDiagram("face boundary does not close"));
            }
        }
    }

    /// Faces of the diagram, ordered by gap and then bottom to top. Boundary
    /// cycles lying in a gap without crossings (including the outer gap 0 and
    /// the inner gap `b`) belong to a single region.
    pub fn faces(&self) -> Result<Faces> {
        self.validate()?;
        let mut visited = vec![[false; 2]; self.arcs.len()];
        let mut cycles: Vec<(usize, Vec<(usize, Side)>)> = Vec::new();
        for arc in &self.arcs {
            for side in [Side::Left, Side::Right] {
                if visited[arc.id][side as usize] {
                    continue;
                }
                let cycle = self.trace((arc.id, side))?;
                let gap = arc.gap(side);
                for &(a, s) in &cycle {
                    if visited[a][s as usize] {
                        return Err(Error::MalformedDiagram("arc side on two boundaries"));
                    }
                    if self.arcs[a].gap(s) != gap {
                        return Err(Error::MalformedDiagram("boundary crosses a strand"));
                    }
                    visited[a][s as usize] = true;
                }
                cycles.push((gap, cycle));
            }
        }

        let mut column_used = vec![false; self.strands + 1];
        for c in &self.crossings {
            column_used[c.column as usize] = true;
        }
        // Group cycles into regions keyed by (gap, index within the gap).
        let mut regions: BTreeMap<(usize, usize), Vec<Boundary>> = BTreeMap::new();
        let mut per_gap = vec![0usize; self.strands + 1];
        for (gap, cycle) in cycles {
            let key = if column_used[gap] {
                per_gap[gap] += 1;
                (gap, per_gap[gap])
            } else {
                (gap, 0)
            };
            regions.entry(key).or_default().push(cycle);
        }

        let mut faces: Vec<Face> = regions
            .into_iter()
            .map(|((gap, _), boundary)| {
                let floor = self.floor_of(gap, &boundary);
                Face {
                    id: 0,
                    gap,
                    boundary,
                    floor,
                }
            })
            .collect();
        faces.sort_by_key(|f| (f.gap, f.floor));
        let mut arc_faces = vec![[usize::MAX; 2]; self.arcs.len()];
        for (id, face) in faces.iter_mut().enumerate() {
            face.id = id;
            for &(a, s) in face.boundary.iter().flatten() {
                arc_faces[a][s as usize] = id;
            }
        }
        let unbounded = faces
            .iter()
            .position(|f| f.gap == 0)
            .ok_or(Error::MalformedDiagram("no outer region"))?;
        let traced = Faces {
            faces,
            unbounded,
            arc_faces,
        };
        if !self.euler_holds(&traced) {
            return Err(Error::MalformedDiagram("Euler characteristic mismatch"));
        }
        Ok(traced)
    }

    /// The crossing of column `gap` directly below a face in that gap: the one
    /// whose north corner lies on the boundary.
    fn floor_of(&self, gap: usize, boundary: &[Vec<(usize, Side)>]) -> Option<usize> {
        boundary.iter().flatten().find_map(|&(a, s)| {
            let arc = &self.arcs[a];
            // The north corner of crossing c is the left side of its N arc.
            match (s, arc.tail) {
                (Side::Left, Some((c, Port::N))) if self.crossings[c].column as usize == gap => {
                    Some(self.crossings[c].position)
                }
                _ => None,
            }
        })
    }

    /// `F = E - V + 1 + K`, counting every crossingless loop as one vertex
    /// and one edge.
    pub fn euler_holds(&self, faces: &Faces) -> bool {
        let edges = self.arcs.len();
        let vertices = self.crossings.len() + self.loop_count();
        faces.len() + vertices == edges + 1 + self.component_count()
    }

    pub fn corners(&self, faces: &Faces, crossing: usize) -> Corners {
        let c = &self.crossings[crossing];
        Corners {
            south: faces.face_of(c.arc_at(Port::S), Side::Right),
            east: faces.face_of(c.arc_at(Port::N), Side::Right),
            north: faces.face_of(c.arc_at(Port::N), Side::Left),
            west: faces.face_of(c.arc_at(Port::W), Side::Left),
        }
    }

    /// Two-colors the faces with the unbounded face white.
    pub fn checkerboard(&self, faces: &Faces) -> Result<Coloring> {
        let n = faces.len();
        let mut adjacency = vec![Vec::new(); n];
        for [l, r] in &faces.arc_faces {
            adjacency[*l].push(*r);
            adjacency[*r].push(*l);
        }
        let mut colors: Vec<Option<Color>> = vec![None; n];
        colors[faces.unbounded] = Some(Color::White);
        let mut queue = alloc::collections::VecDeque::from([faces.unbounded]);
        while let Some(f) = queue.pop_front() {
            let other = match colors[f] {
                Some(Color::White) => Color::Shaded,
                _ => Color::White,
            };
            for &g in &adjacency[f] {
                match colors[g] {
                    None => {
                        colors[g] = Some(other);
                        queue.push_back(g);
                    }
                    Some(c) if c != other => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        let colors = colors
            .into_iter()
            .map(|c| {
                c.ok_or(Error::MalformedDiagram(
                    "face unreachable from outer region",
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Coloring {
            colors,
            unbounded: faces.unbounded,
        })
    }

    /// Type and sign of a crossing from the coloring and strand orientations.
    ///
    /// A crossing is of type II when a shaded corner is bounded by two
    /// strand ends pointing the same way (both into or both out of the
    /// crossing), so the shaded surface cannot be oriented compatibly there.
    pub fn classify_crossing(
        &self,
        faces: &Faces,
        coloring: &Coloring,
        crossing: usize,
    ) -> Result<CrossingClass> {
        let corners = self.corners(faces, crossing);
        let shaded = |f: usize| !coloring.is_white(f);
        let vertical = shaded(corners.south) && shaded(corners.north);
        let horizontal = shaded(corners.east) && shaded(corners.west);
        if vertical == horizontal {
            return Err(Error::NotBipartite);
        }
        // Corner between ports (q, q+1 counterclockwise): south = (S, E),
        // east = (E, N), north = (N, W), west = (W, S).
        let shaded_corner = if vertical { Port::S } else { Port::E };
        let next = Port::from_index(shaded_corner as usize + 1);
        let parallel = shaded_corner.is_outgoing() == next.is_outgoing();
        let kind = if parallel {
            CrossingType::II
        } else {
            CrossingType::I
        };
        let eta = if vertical {
            ETA_SHADED_VERTICAL
        } else {
            -ETA_SHADED_VERTICAL
        };
        Ok(CrossingClass {
            crossing,
            kind,
            eta,
        })
    }

    /// Text dump: one line per crossing, then one line per face.
    pub fn dump(&self, faces: &Faces, coloring: &Coloring) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let _ = writeln!(
                out,
                "c{} col={} ports=(N:{},E:{},S:{},W:{})",
                c.id,
                c.column,
                c.arc_at(Port::N),
                c.arc_at(Port::E),
                c.arc_at(Port::S),
                c.arc_at(Port::W)
            );
        }
        for f in &faces.faces {
            let color = match coloring.color(f.id) {
                Color::White => "white",
                Color::Shaded => "shaded",
            };
            let _ = write!(out, "f{} gap={} color={} arcs=", f.id, f.gap, color);
            for (i, a) in f.arcs().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{a}");
            }
            out.push('\n');
        }
        out
    }
}

/// A closure diagram together with its faces, coloring and crossing classes.
#[derive(Debug, Clone)]
pub struct ColoredDiagram {
    pub diagram: PlanarDiagram,
    pub faces: Faces,
    pub coloring: Coloring,
    pub classes: Vec<CrossingClass>,
}

impl ColoredDiagram {
    pub fn new(word: &BraidWord) -> Result<ColoredDiagram> {
        let diagram = PlanarDiagram::closure(word);
        let faces = diagram.faces()?;
        let coloring = diagram.checkerboard(&faces)?;
        let classes = (0..diagram.crossings().len())
            .map(|c| diagram.classify_crossing(&faces, &coloring, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(ColoredDiagram {
            diagram,
            faces,
            coloring,
            classes,
        })
    }

    /// The two white corners of a crossing.
    pub fn white_corners(&self, crossing: usize) -> (usize, usize) {
        let c = self.diagram.corners(&self.faces, crossing);
        if self.coloring.is_white(c.south) {
            (c.south, c.north)
        } else {
            (c.west, c.east)
        }
    }

    /// Sum of `eta` over type II crossings.
    pub fn mu(&self) -> i64 {
        self.classes
            .iter()
            .filter(|c| c.kind == CrossingType::II)
            .map(|c| c.eta)
            .sum()
    }

    pub fn dump(&self) -> String {
        self.diagram.dump(&self.faces, &self.coloring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(strands: usize, letters: &[u32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn census(word: &BraidWord) -> (usize, usize, usize, usize, usize) {
        let cd = ColoredDiagram::new(word).unwrap();
        (
            cd.diagram.crossings().len(),
            cd.diagram.arcs().len(),
            cd.faces.len(),
            cd.coloring.white_faces().count(),
            cd.coloring.shaded_faces().count(),
        )
    }

    #[test]
    fn trefoil_census() {
        assert_eq!(census(&w(2, &[1, 1, 1])), (3, 6, 5, 2, 3));
    }

    #[test]
    fn unknot_census() {
        let d = PlanarDiagram::closure(&w(1, &[]));
        assert_eq!(d.loop_count(), 1);
        assert_eq!(census(&w(1, &[])), (0, 1, 2, 1, 1));
    }

    #[test]
    fn hopf_census() {
        assert_eq!(census(&w(2, &[1, 1])).2, 4);
    }

    #[test]
    fn four_braid_census() {
        let beta = w(4, &[1, 3, 2, 1, 3, 2, 2, 1, 3, 2]);
        assert_eq!(census(&beta), (10, 20, 12, 6, 6));
        let cd = ColoredDiagram::new(&beta).unwrap();
        let white_gaps: Vec<usize> = cd
            .coloring
            .white_faces()
            .map(|f| cd.faces.faces[f].gap)
            .collect();
        assert_eq!(white_gaps, vec![0, 2, 2, 2, 2, 4]);
        assert_eq!(cd.faces.faces[cd.faces.unbounded].gap, 0);
    }

    #[test]
    fn split_diagrams_are_handled() {
        // Hopf link, an unused strand, then a trefoil.
        let word = w(5, &[1, 1, 4, 4, 4]);
        let cd = ColoredDiagram::new(&word).unwrap();
        assert_eq!(cd.diagram.component_count(), 3);
        assert_eq!(cd.diagram.loop_count(), 1);
        let word = w(3, &[]);
        let cd = ColoredDiagram::new(&word).unwrap();
        assert_eq!(cd.diagram.loop_count(), 3);
        assert_eq!(cd.faces.len(), 4);
        assert_eq!(cd.faces.faces[0].boundary.len(), 1);
        assert_eq!(cd.faces.faces[1].boundary.len(), 2);
    }

    #[test]
    fn four_braid_crossing_classes() {
        let beta = w(4, &[1, 3, 2, 1, 3, 2, 2, 1, 3, 2]);
        let cd = ColoredDiagram::new(&beta).unwrap();
        for class in &cd.classes {
            let col = beta.letters()[class.crossing];
            if col == 2 {
                assert_eq!(class.kind, CrossingType::I);
            } else {
                assert_eq!((class.kind, class.eta), (CrossingType::II, 1));
            }
        }
        assert_eq!(cd.mu(), 6);
    }

    #[test]
    fn trefoil_crossings_are_type_two() {
        let cd = ColoredDiagram::new(&w(2, &[1, 1, 1])).unwrap();
        assert!(cd
            .classes
            .iter()
            .all(|c| c.kind == CrossingType::II && c.eta == 1));
        assert_eq!(cd.mu(), 3);
    }

    #[test]
    fn dump_is_stable() {
        let word = w(2, &[1, 1, 1]);
        let a = ColoredDiagram::new(&word).unwrap().dump();
        let b = ColoredDiagram::new(&word).unwrap().dump();
        assert_eq!(a, b);
        assert!(a.starts_with("c0 col=1 ports=(N:"));
        assert_eq!(a.lines().count(), 3 + 5);
    }

    fn word_strategy() -> impl Strategy<Value = BraidWord> {
        (1usize..7).prop_flat_map(|b| {
            let max = if b == 1 { 0 } else { 12 };
            proptest::collection::vec(1u32..(b.max(2) as u32), 0..=max)
                .prop_map(move |letters| BraidWord::new(b, letters).unwrap())
        })
    }

    proptest! {
        #[test]
        fn structural_invariants(word in word_strategy()) {
            let cd = ColoredDiagram::new(&word).unwrap();
            let d = &cd.diagram;
            let loops = d.loop_count();
            prop_assert_eq!(d.arcs().len(), 2 * d.crossings().len() + loops);
            prop_assert_eq!(d.component_count(), word.split_blocks().len());
            // Every arc side is on exactly one face and the two sides differ.
            for [l, r] in &cd.faces.arc_faces {
                prop_assert!(l != r);
                prop_assert_ne!(cd.coloring.color(*l), cd.coloring.color(*r));
            }
            // White faces are exactly the even gaps.
            for f in &cd.faces.faces {
                prop_assert_eq!(cd.coloring.is_white(f.id), f.gap % 2 == 0);
            }
            // Type II exactly at odd columns, with eta = +1.
            for class in &cd.classes {
                let col = word.letters()[class.crossing];
                prop_assert_eq!(class.kind == CrossingType::II, col % 2 == 1);
                prop_assert_eq!(class.eta, if col % 2 == 1 { 1 } else { -1 });
            }
        }

        #[test]
        fn face_count_per_gap(word in word_strategy()) {
            let cd = ColoredDiagram::new(&word).unwrap();
            let counts = word.generator_counts();
            for g in 0..=word.strands() {
                let expected = if g >= 1 && g < word.strands() && counts[g - 1] > 0 { counts[g - 1] } else { 1 };
                let found = cd.faces.faces.iter().filter(|f| f.gap == g).count();
                prop_assert_eq!(found, expected);
            }
        }

        #[test]
        fn four_braid_face_census(letters in proptest::collection::vec(1u32..4, 3..14)) {
            let word = BraidWord::new(4, letters).unwrap();
            prop_assume!(word.uses_all_generators());
            let cd = ColoredDiagram::new(&word).unwrap();
            prop_assert_eq!(cd.coloring.white_faces().count(), 2 + word.count_of(2));
            prop_assert_eq!(cd.coloring.shaded_faces().count(), word.count_of(1) + word.count_of(3));
        }

        #[test]
        fn classes_invariant_under_rotation(word in word_strategy(), shift in 0usize..12) {
            prop_assume!(!word.is_empty());
            let rotated = word.rotate(shift);
            let a = ColoredDiagram::new(&word).unwrap();
            let b = ColoredDiagram::new(&rotated).unwrap();
            let s = shift % word.len();
            for (i, class) in a.classes.iter().enumerate() {
                let j = (i + word.len() - s) % word.len();
                prop_assert_eq!((class.kind, class.eta), (b.classes[j].kind, b.classes[j].eta));
            }
        }
    }
}
