//! Reaction-graph structure: linkage classes, terminal strong linkage
//! classes, nonterminal complexes, and deficiency.

use serde::Serialize;

use crate::net_core::{Complex, Network};

/// Directed graph whose vertices are the distinct complexes of a network and
/// whose edges are its reactions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReactionGraph {
    vertices: Vec<Complex>,
    /// One `(reactant_vertex, product_vertex)` pair per reaction, in reaction
    /// order.
    edges: Vec<(usize, usize)>,
}

impl ReactionGraph {
    /// Vertices are deduplicated complexes in first-appearance order
    /// (reactant before product, reaction by reaction).
    pub fn new(net: &Network) -> Self {
        let mut vertices: Vec<Complex> = Vec::new();
        let index_of = |vertices: &mut Vec<Complex>, c: &Complex| -> usize {
            match vertices.iter().position(|v| v == c) {
                Some(i) => i,
                None => {
                    vertices.push(c.clone());
                    vertices.len() - 1
                }
            }
        };
        let mut edges = Vec::with_capacity(net.n_reactions());
        for r in net.reactions() {
            let from = index_of(&mut vertices, &r.reactant);
            let to = index_of(&mut vertices, &r.product);
            edges.push((from, to));
        }
        ReactionGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &[Complex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_index(&self, c: &Complex) -> Option<usize> {
        self.vertices.iter().position(|v| v == c)
    }

    /// DOT rendering with vertices labeled by rendered complexes.
    pub fn to_dot(&self, net: &Network) -> String {
        let mut out = String::from("digraph reaction_graph {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i, v.render(net.species())));
        }
        for &(from, to) in &self.edges {
            out.push_str(&format!("  v{from} -> v{to};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Boolean reachability closure; `reach[i][j]` iff a directed path
    /// i → … → j exists (including the empty path i = j).
    fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(from, to) in &self.edges {
            reach[from][to] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    /// Strongly connected components (mutual reachability classes), each
    /// sorted internally, the list sorted by smallest member.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let reach = self.reachability();
        let mut assigned = vec![false; n];
        let mut components = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let component: Vec<usize> =
                (i..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
            for &j in &component {
                assigned[j] = true;
            }
            components.push(component);
        }
        components
    }

    /// Weakly connected components, each sorted internally, the list sorted
    /// by smallest member.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &(from, to) in &self.edges {
            let a = find(&mut parent, from);
            let b = find(&mut parent, to);
            parent[a.max(b)] = a.min(b);
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if root_slot[r] == usize::MAX {
                root_slot[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[root_slot[r]].push(i);
        }
        classes
    }
}

/// Full linkage/deficiency summary of a network's reaction graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    /// p: number of distinct complexes.
    pub complex_count: usize,
    /// ℓ: number of linkage classes.
    pub linkage_class_count: usize,
    pub linkage_classes: Vec<Vec<usize>>,
    pub terminal_sccs: Vec<Vec<usize>>,
    /// Vertices outside every terminal strong linkage class.
    pub nonterminal_complexes: Vec<usize>,
    pub stoichiometric_dimension: usize,
    /// p − ℓ − dim(S); a signed value, since nonnegativity is a theorem
    /// about networks, not an invariant of this arithmetic.
    pub deficiency: i64,
}

pub fn linkage_report(net: &Network) -> LinkageReport {
    let graph = ReactionGraph::new(net);
    let linkage_classes = graph.weak_components();
    let sccs = graph.strong_components();
    let mut in_component = vec![usize::MAX; graph.vertices().len()];
    for (c, comp) in sccs.iter().enumerate() {
        for &v in comp {
            in_component[v] = c;
        }
    }
    let terminal_sccs: Vec<Vec<usize>> = sccs
        .iter()
        .filter(|comp| {
            graph
                .edges()
                .iter()
                .all(|&(from, to)| !comp.contains(&from) || in_component[to] == in_component[from])
        })
        .cloned()
        .collect();
    let mut terminal = vec![false; graph.vertices().len()];
    for comp in &terminal_sccs {
        for &v in comp {
            terminal[v] = true;
        }
    }
    let nonterminal_complexes: Vec<usize> =
        (0..graph.vertices().len()).filter(|&v| !terminal[v]).collect();
    let dim = net.stoichiometric_dimension();
    let complex_count = graph.vertices().len();
    let linkage_class_count = linkage_classes.len();
    LinkageReport {
        complex_count,
        linkage_class_count,
        linkage_classes,
        terminal_sccs,
        nonterminal_complexes,
        stoichiometric_dimension: dim,
        deficiency: complex_count as i64 - linkage_class_count as i64 - dim as i64,
    }
}

/// p − ℓ − dim(S).
pub fn deficiency(net: &Network) -> i64 {
    linkage_report(net).deficiency
}
