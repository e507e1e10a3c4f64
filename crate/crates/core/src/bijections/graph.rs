//! Planar graphs of annular matchings.
//!
//! One vertex per region of the annulus, one edge per arc separating two
//! regions. Without cross-cuts or inner half-circles this gives a tree with
//! the hole's region distinguished. With `k >= 1` cross-cuts the regions
//! between cross-cuts form a `k`-cycle; forests of outer half-circles hang
//! inside the cycle and forests of inner half-circles outside it.
//!
//! Graphs are rotation systems. Edge `e` has half-edges `2e` (at its tail)
//! and `2e + 1` (at its head); `rotation[v]` lists the half-edges at `v` in
//! counter-clockwise order.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AnnularMatching, Bead, DyckWord, GapCell, Step};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Marker {
    /// Tree case: the vertex of the region touching the hole.
    Distinguished(usize),
    /// Unicyclic case: cycle edges in order, each traversed tail to head.
    Cycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarGraph {
    pub vertex_count: usize,
    /// `(tail, head)` per edge.
    pub edges: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<usize>>,
    pub marker: Marker,
}

const fn tail(edge: usize) -> usize {
    2 * edge
}

const fn head(edge: usize) -> usize {
    2 * edge + 1
}

struct Builder {
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    fn edge(&mut self, from: usize, to: usize) -> usize {
        self.edges.push((from, to));
        self.edges.len() - 1
    }

    /// Hang the ordered forest of `word` below `parent`, appending the root
    /// half-edges to `parent`'s rotation in word order.
    fn forest(&mut self, parent: usize, word: &DyckWord) {
        let mut stack = vec![parent];
        for step in word.steps() {
            match step {
                Step::U => {
                    let top = *stack.last().expect("balanced word");
                    let child = self.vertex();
                    let e = self.edge(top, child);
                    self.rotation[top].push(tail(e));
                    self.rotation[child].push(head(e));
                    stack.push(child);
                }
                Step::D => {
                    stack.pop();
                }
            }
        }
    }
}

/// The marked tree of a matching with no cross-cuts and no inner half-circles.
pub fn to_tree(matching: &AnnularMatching) -> Result<PlanarGraph> {
    let outer = match matching {
        AnnularMatching::Free { outer, inner } if inner.is_empty() => outer,
        _ => return Err(Error::WrongClass("tree map needs no cross-cuts and no inner half-circles".into())),
    };
    // Read the boundary from just after the lowest point of its height
    // profile; from there it is a Dyck word (L = U, R = D).
    let beads = outer.beads();
    let mut height = 0i64;
    let mut low = (0i64, 0usize);
    for (i, b) in beads.iter().enumerate() {
        height += if *b == Bead::Black { 1 } else { -1 };
        if height < low.0 {
            low = (height, i + 1);
        }
    }
    let start = low.1;
    let steps = (0..beads.len())
        .map(|j| match beads[(start + j) % beads.len()] {
            Bead::Black => Step::U,
            Bead::White => Step::D,
        })
        .collect();
    let word = DyckWord::new(steps)?;
    let mut b = Builder { edges: Vec::new(), rotation: Vec::new() };
    let root = b.vertex();
    b.forest(root, &word);
    Ok(PlanarGraph {
        vertex_count: b.rotation.len(),
        edges: b.edges,
        rotation: b.rotation,
        marker: Marker::Distinguished(root),
    })
}

/// Planar graph of a matching: a marked tree when there are no cross-cuts,
/// otherwise a unicyclic graph whose cycle has length `k`.
pub fn to_graph(matching: &AnnularMatching) -> Result<PlanarGraph> {
    let cells = match matching {
        AnnularMatching::Free { .. } => return to_tree(matching),
        AnnularMatching::Crosscut { cells } => cells,
    };
    let k = cells.len();
    let mut b = Builder { edges: Vec::new(), rotation: Vec::new() };
    let cycle: Vec<usize> = (0..k).map(|_| b.vertex()).collect();
    let cycle_edges: Vec<usize> = (0..k).map(|i| b.edge(cycle[i], cycle[(i + 1) % k])).collect();
    for (i, cell) in cells.iter().enumerate() {
        let v = cycle[i];
        b.rotation[v].push(tail(cycle_edges[i]));
        b.forest(v, &cell.outer);
        b.rotation[v].push(head(cycle_edges[(i + k - 1) % k]));
        b.forest(v, &cell.inner);
    }
    Ok(PlanarGraph {
        vertex_count: b.rotation.len(),
        edges: b.edges,
        rotation: b.rotation,
        marker: Marker::Cycle(cycle_edges),
    })
}

impl PlanarGraph {
    fn vertex_of(&self, half_edge: usize) -> usize {
        let (t, h) = self.edges[half_edge / 2];
        if half_edge % 2 == 0 {
            t
        } else {
            h
        }
    }

    /// Rotation system well-formed and graph connected.
    pub fn check_structure(&self) -> Result<()> {
        let bad = |m: String| Error::MalformedGraph(m);
        if self.rotation.len() != self.vertex_count {
            return Err(bad("rotation list per vertex required".into()));
        }
        if let Some(&(t, h)) = self.edges.iter().find(|(t, h)| *t >= self.vertex_count || *h >= self.vertex_count) {
            return Err(bad(format!("edge ({t}, {h}) names a missing vertex")));
        }
        let mut seen = vec![false; 2 * self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &h in rot {
                if h >= seen.len() || seen[h] {
                    return Err(bad(format!("half-edge {h} missing or repeated")));
                }
                seen[h] = true;
                if self.vertex_of(h) != v {
                    return Err(bad(format!("half-edge {h} listed at the wrong vertex {v}")));
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(bad("some half-edge is absent from every rotation".into()));
        }
        if self.vertex_count == 0 {
            return Err(bad("graph has no vertices".into()));
        }
        let mut reached = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        reached[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotation[v] {
                let w = self.vertex_of(h ^ 1);
                if !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if reached.iter().any(|&r| !r) {
            return Err(bad("graph is disconnected".into()));
        }
        Ok(())
    }

    /// Edges whose both ends lie at or inside the cycle / in the
    /// interior forests, for the unicyclic case: `(inside, outside)` counts.
    pub fn side_edge_counts(&self) -> Option<(usize, usize)> {
        let Marker::Cycle(cycle) = &self.marker else { return None };
        let k = cycle.len();
        let mut inside = 0;
        let mut outside = 0;
        for i in 0..k {
            let (interior, exterior) = self.cycle_vertex_sides(cycle, i).ok()?;
            inside += interior.iter().map(|&h| self.subtree_size(h)).sum::<usize>();
            outside += exterior.iter().map(|&h| self.subtree_size(h)).sum::<usize>();
        }
        Some((inside, outside))
    }

    fn subtree_size(&self, down: usize) -> usize {
        let mut size = 0;
        let mut stack = vec![down];
        while let Some(h) = stack.pop() {
            size += 1;
            let child = self.vertex_of(h ^ 1);
            stack.extend(self.rotation[child].iter().copied().filter(|&x| x != h ^ 1));
        }
        size
    }

    /// Half-edges at the `i`-th cycle vertex strictly between the outgoing
    /// and incoming cycle half-edges (interior), and the rest (exterior).
    fn cycle_vertex_sides(&self, cycle: &[usize], i: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        let k = cycle.len();
        let v = self.edges[cycle[i]].0;
        let rot = &self.rotation[v];
        let out = tail(cycle[i]);
        let inc = head(cycle[(i + k - 1) % k]);
        let pos = |h: usize| {
            rot.iter()
                .position(|&x| x == h)
                .ok_or_else(|| Error::MalformedGraph(format!("cycle half-edge {h} not at vertex {v}")))
        };
        let (po, pi) = (pos(out)?, pos(inc)?);
        let len = rot.len();
        let interior = (1..len).map(|j| rot[(po + j) % len]).take_while(|&h| h != inc).collect();
        let exterior = (1..len).map(|j| rot[(pi + j) % len]).take_while(|&h| h != out).collect();
        Ok((interior, exterior))
    }

    /// Dyck word of the forest reached through the given downward half-edges.
    fn forest_word(&self, roots: &[usize], visited: &mut [bool]) -> Result<DyckWord> {
        let mut steps = Vec::new();
        // explicit stack of (half-edge into child, rotation cursor)
        for &root in roots {
            let mut stack: Vec<(usize, usize)> = Vec::new();
            let enter = |h: usize, visited: &mut [bool], steps: &mut Vec<Step>| -> Result<usize> {
                let child = self.vertex_of(h ^ 1);
                if visited[child] {
                    return Err(Error::MalformedGraph(format!("vertex {child} reached twice")));
                }
                visited[child] = true;
                steps.push(Step::U);
                Ok(child)
            };
            enter(root, visited, &mut steps)?;
            stack.push((root ^ 1, 1));
            while let Some(&(up, cursor)) = stack.last() {
                let v = self.vertex_of(up);
                let rot = &self.rotation[v];
                let start = rot.iter().position(|&x| x == up).expect("checked structure");
                if cursor < rot.len() {
                    stack.last_mut().expect("nonempty").1 += 1;
                    let h = rot[(start + cursor) % rot.len()];
                    enter(h, visited, &mut steps)?;
                    stack.push((h ^ 1, 1));
                } else {
                    steps.push(Step::D);
                    stack.pop();
                }
            }
        }
        DyckWord::new(steps)
    }
}

/// Inverse of [`to_tree`]; rejects unicyclic graphs.
pub fn from_tree(graph: &PlanarGraph) -> Result<AnnularMatching> {
    match graph.marker {
        Marker::Distinguished(_) => from_graph(graph),
        Marker::Cycle(_) => Err(Error::WrongClass("expected a tree with a distinguished vertex".into())),
    }
}

/// Inverse of [`to_graph`] (and [`to_tree`]).
pub fn from_graph(graph: &PlanarGraph) -> Result<AnnularMatching> {
    graph.check_structure()?;
    let bad = |m: String| Error::MalformedGraph(m);
    let (v_count, e_count) = (graph.vertex_count, graph.edges.len());
    let mut visited = vec![false; v_count];
    match &graph.marker {
        Marker::Distinguished(root) => {
            if *root >= v_count {
                return Err(bad(format!("distinguished vertex {root} missing")));
            }
            if e_count + 1 != v_count {
                return Err(bad(format!("{v_count} vertices and {e_count} edges is not a tree")));
            }
            visited[*root] = true;
            let word = graph.forest_word(&graph.rotation[*root], &mut visited)?;
            let beads = word
                .steps()
                .iter()
                .map(|s| if *s == Step::U { Bead::Black } else { Bead::White })
                .collect();
            Ok(AnnularMatching::from_boundary_words(beads, Vec::new()))
        }
        Marker::Cycle(cycle) => {
            let k = cycle.len();
            if k == 0 {
                return Err(bad("empty cycle marker".into()));
            }
            if e_count != v_count {
                return Err(bad(format!(
                    "{v_count} vertices and {e_count} edges: not exactly one cycle"
                )));
            }
            if cycle.iter().any(|&e| e >= e_count) {
                return Err(bad("cycle names a missing edge".into()));
            }
            for i in 0..k {
                let (_, h) = graph.edges[cycle[i]];
                let (t_next, _) = graph.edges[cycle[(i + 1) % k]];
                if h != t_next {
                    return Err(bad("cycle marker is not a closed oriented walk".into()));
                }
                let v = graph.edges[cycle[i]].0;
                if visited[v] {
                    return Err(bad("cycle marker repeats a vertex".into()));
                }
                visited[v] = true;
            }
            let mut cells = Vec::with_capacity(k);
            for i in 0..k {
                let (interior, exterior) = graph.cycle_vertex_sides(cycle, i)?;
                let outer = graph.forest_word(&interior, &mut visited)?;
                let inner = graph.forest_word(&exterior, &mut visited)?;
                cells.push(GapCell::new(outer, inner));
            }
            if visited.iter().any(|&v| !v) {
                return Err(bad("vertices not reachable from the cycle".into()));
            }
            AnnularMatching::from_cells(cells)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(code: &str) -> AnnularMatching {
        AnnularMatching::parse(code).unwrap()
    }

    #[test]
    fn pure_crosscuts_give_bare_cycle() {
        let g = to_graph(&AnnularMatching::pure_crosscuts(5)).unwrap();
        assert_eq!(g.vertex_count, 5);
        assert_eq!(g.edges.len(), 5);
        assert_eq!(g.side_edge_counts(), Some((0, 0)));
        assert_eq!(from_graph(&g).unwrap(), AnnularMatching::pure_crosscuts(5));
    }

    #[test]
    fn single_half_circle_tree() {
        let g = to_tree(&parse("outer:LR;inner:")).unwrap();
        assert_eq!(g.vertex_count, 2);
        assert_eq!(g.edges, vec![(0, 1)]);
        assert_eq!(g.marker, Marker::Distinguished(0));
        assert_eq!(from_graph(&g).unwrap(), parse("outer:LR;inner:"));
        assert_eq!(from_tree(&g).unwrap(), parse("outer:LR;inner:"));
        assert!(from_tree(&to_graph(&parse("(|)")).unwrap()).is_err());
    }

    #[test]
    fn two_half_circle_trees() {
        let path = to_tree(&parse("outer:LLRR;inner:")).unwrap();
        let star = to_tree(&parse("outer:LRLR;inner:")).unwrap();
        assert_eq!(path.rotation[0].len(), 1);
        assert_eq!(star.rotation[0].len(), 2);
    }

    #[test]
    fn loops_and_parallel_edges() {
        for code in ["(UD|UD)", "(UD|)(|UD)", "(UUDD|UD)(|)", "(|)(|)"] {
            let m = parse(code);
            let g = to_graph(&m).unwrap();
            let (n, mm, _) = m.shape();
            assert_eq!(g.side_edge_counts(), Some((n, mm)));
            assert_eq!(from_graph(&g).unwrap(), m, "{code}");
        }
    }

    #[test]
    fn relabelled_rotation_still_decodes() {
        let m = parse("(UUDUDD|UD)(UD|)(|)");
        let mut g = to_graph(&m).unwrap();
        // starting each rotation list elsewhere describes the same embedding
        for rot in &mut g.rotation {
            if rot.len() > 1 {
                rot.rotate_left(1);
            }
        }
        assert_eq!(from_graph(&g).unwrap(), m);
    }

    #[test]
    fn malformed_graphs_are_rejected() {
        let m = parse("(UD|)(|)");
        let good = to_graph(&m).unwrap();

        let mut g = good.clone();
        g.rotation[0].pop();
        assert!(from_graph(&g).is_err());

        let mut g = good.clone();
        g.marker = Marker::Cycle(vec![0]);
        assert!(from_graph(&g).is_err());

        // extra isolated vertex: disconnected
        let mut g = good.clone();
        g.vertex_count += 1;
        g.rotation.push(Vec::new());
        assert!(from_graph(&g).is_err());

        // a second cycle: add a chord edge between the two cycle vertices
        let mut g = good.clone();
        let e = g.edges.len();
        g.edges.push((0, 1));
        g.rotation[0].push(2 * e);
        g.rotation[1].push(2 * e + 1);
        assert!(matches!(from_graph(&g), Err(Error::MalformedGraph(_))));

        let tree = to_tree(&parse("outer:LR;inner:")).unwrap();
        let mut g = tree.clone();
        g.marker = Marker::Distinguished(7);
        assert!(from_graph(&g).is_err());
        assert!(to_tree(&m).is_err());
        assert!(to_graph(&parse("outer:LR;inner:LR")).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = to_graph(&parse("(UD|UD)(|)")).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.contains("\"cycle\""));
        let back: PlanarGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }
}
