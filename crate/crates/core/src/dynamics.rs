//! Asynchronous transition graphs over the full configuration space.
//!
//! Nodes are configuration encodings `0..2^N`; only effective transitions
//! (those that change the configuration) are stored, in CSR form ordered by
//! `(configuration, automaton)`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::badc::{DoubleCycle, Kind, Layout};
use crate::network::{Configuration, NetworkSpec, DEFAULT_ENUMERATION_CAP};

/// Graphs address nodes with `u32`, so this is a hard ceiling regardless of
/// the cap a caller asks for.
pub const MAX_GRAPH_AUTOMATA: usize = 31;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a transition graph over {count} automata exceeds the enumeration cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub target: u32,
    pub automaton: u8,
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub cap: usize,
    pub parallel: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionGraph {
    automata: usize,
    offsets: Vec<usize>,
    edges: Vec<Edge>,
}

/// Effective successors of the encodings in `range`, appended in order.
fn successors_of(net: &NetworkSpec, range: std::ops::Range<u64>, degrees: &mut Vec<u8>, edges: &mut Vec<Edge>) {
    let count = net.count();
    for x in range {
        let before = edges.len();
        for i in 0..count {
            let y = net.step_raw(x, i);
            if y != x {
                edges.push(Edge {
                    target: y as u32,
                    automaton: i as u8,
                });
            }
        }
        degrees.push((edges.len() - before) as u8);
    }
}

const PARALLEL_CHUNK: u64 = 1 << 14;

impl TransitionGraph {
    pub fn build(net: &NetworkSpec) -> Result<Self, GraphError> {
        Self::build_with(net, BuildOptions::default())
    }

    pub fn build_with(net: &NetworkSpec, options: BuildOptions) -> Result<Self, GraphError> {
        let count = net.count();
        let cap = options.cap.min(MAX_GRAPH_AUTOMATA);
        if count > cap {
            return Err(GraphError::CapExceeded { count, cap });
        }
        let states = 1u64 << count;
        let (degrees, edges) = if options.parallel && states > PARALLEL_CHUNK {
            let parts: Vec<(Vec<u8>, Vec<Edge>)> = (0..states.div_ceil(PARALLEL_CHUNK))
                .into_par_iter()
                .map(|chunk| {
                    let start = chunk * PARALLEL_CHUNK;
                    let end = (start + PARALLEL_CHUNK).min(states);
                    let mut degrees = Vec::with_capacity((end - start) as usize);
                    let mut edges = Vec::new();
                    successors_of(net, start..end, &mut degrees, &mut edges);
                    (degrees, edges)
                })
                .collect();
            let mut degrees = Vec::with_capacity(states as usize);
            let mut edges = Vec::with_capacity(parts.iter().map(|p| p.1.len()).sum());
            for (d, e) in parts {
                degrees.extend(d);
                edges.extend(e);
            }
            (degrees, edges)
        } else {
            let mut degrees = Vec::with_capacity(states as usize);
            let mut edges = Vec::new();
            successors_of(net, 0..states, &mut degrees, &mut edges);
            (degrees, edges)
        };
        let mut offsets = Vec::with_capacity(states as usize + 1);
        offsets.push(0);
        let mut acc = 0usize;
        for d in degrees {
            acc += d as usize;
            offsets.push(acc);
        }
        Ok(TransitionGraph {
            automata: count,
            offsets,
            edges,
        })
    }

    pub fn automata(&self) -> usize {
        self.automata
    }

    pub fn state_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn successors(&self, x: u32) -> &[Edge] {
        let x = x as usize;
        &self.edges[self.offsets[x]..self.offsets[x + 1]]
    }

    pub fn configuration(&self, x: u32) -> Configuration {
        Configuration::from_bits(x as u64, self.automata).expect("node inside the state space")
    }

    /// All edges as `(source, target, automaton)` in storage order.
    pub fn edge_list(&self) -> impl Iterator<Item = (u32, u32, u8)> + '_ {
        (0..self.state_count() as u32)
            .flat_map(move |x| self.successors(x).iter().map(move |e| (x, e.target, e.automaton)))
    }

    fn reversed(&self) -> (Vec<usize>, Vec<u32>) {
        let n = self.state_count();
        let mut indegree = vec![0usize; n + 1];
        for e in &self.edges {
            indegree[e.target as usize + 1] += 1;
        }
        for i in 0..n {
            indegree[i + 1] += indegree[i];
        }
        let offsets = indegree;
        let mut fill = offsets.clone();
        let mut sources = vec![0u32; self.edges.len()];
        for x in 0..n as u32 {
            for e in self.successors(x) {
                let slot = &mut fill[e.target as usize];
                sources[*slot] = x;
                *slot += 1;
            }
        }
        (offsets, sources)
    }

    /// Strongly connected components by an iterative Tarjan traversal.
    pub fn condensation(&self) -> Condensation {
        const UNVISITED: u32 = u32::MAX;
        let n = self.state_count();
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0u32; n];
        let mut on_stack = vec![false; n];
        let mut component = vec![UNVISITED; n];
        let mut stack: Vec<u32> = Vec::new();
        let mut call: Vec<(u32, usize)> = Vec::new();
        let mut next_index = 0u32;
        let mut sizes: Vec<u32> = Vec::new();

        for root in 0..n as u32 {
            if index[root as usize] != UNVISITED {
                continue;
            }
            call.push((root, 0));
            index[root as usize] = next_index;
            low[root as usize] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root as usize] = true;

            while let Some(&mut (v, ref mut cursor)) = call.last_mut() {
                let succ = self.successors(v);
                if *cursor < succ.len() {
                    let w = succ[*cursor].target;
                    *cursor += 1;
                    if index[w as usize] == UNVISITED {
                        index[w as usize] = next_index;
                        low[w as usize] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w as usize] = true;
                        call.push((w, 0));
                    } else if on_stack[w as usize] {
                        low[v as usize] = low[v as usize].min(index[w as usize]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    let id = sizes.len() as u32;
                    let mut size = 0;
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w as usize] = false;
                        component[w as usize] = id;
                        size += 1;
                        if w == v {
                            break;
                        }
                    }
                    sizes.push(size);
                }
            }
        }

        let mut terminal = vec![true; sizes.len()];
        for x in 0..n as u32 {
            let cx = component[x as usize];
            if self.successors(x).iter().any(|e| component[e.target as usize] != cx) {
                terminal[cx as usize] = false;
            }
        }
        Condensation {
            component,
            sizes,
            terminal,
        }
    }

    pub fn attractors(&self) -> Vec<Attractor> {
        self.condensation().attractors(self)
    }

    pub fn recurrent(&self) -> Vec<Configuration> {
        let c = self.condensation();
        (0..self.state_count() as u32)
            .filter(|&x| c.is_recurrent(x))
            .map(|x| self.configuration(x))
            .collect()
    }

    pub fn transient(&self) -> Vec<Configuration> {
        let c = self.condensation();
        (0..self.state_count() as u32)
            .filter(|&x| !c.is_recurrent(x))
            .map(|x| self.configuration(x))
            .collect()
    }

    /// Breadth-first distances from `x` to every node; `None` when unreachable.
    pub fn distances_from(&self, x: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.state_count()];
        let mut queue = VecDeque::new();
        dist[x as usize] = Some(0);
        queue.push_back(x);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize].unwrap();
            for e in self.successors(v) {
                if dist[e.target as usize].is_none() {
                    dist[e.target as usize] = Some(d + 1);
                    queue.push_back(e.target);
                }
            }
        }
        dist
    }

    /// Number of effective transitions on a shortest trajectory from `x` to `y`.
    pub fn distance(&self, x: &Configuration, y: &Configuration) -> Option<u32> {
        let (x, y) = (x.bits() as u32, y.bits() as u32);
        if x == y {
            return Some(0);
        }
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([(x, 0u32)]);
        seen[x as usize] = true;
        while let Some((v, d)) = queue.pop_front() {
            for e in self.successors(v) {
                if e.target == y {
                    return Some(d + 1);
                }
                if !seen[e.target as usize] {
                    seen[e.target as usize] = true;
                    queue.push_back((e.target, d + 1));
                }
            }
        }
        None
    }

    pub fn reachable(&self, x: &Configuration, y: &Configuration) -> bool {
        self.distance(x, y).is_some()
    }

    /// Shortest distance from every configuration to the recurrent set.
    pub fn convergence(&self) -> ConvergenceReport {
        self.convergence_with(&self.condensation())
    }

    pub fn convergence_with(&self, condensation: &Condensation) -> ConvergenceReport {
        let (offsets, sources) = self.reversed();
        let n = self.state_count();
        let mut per_config = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        for x in 0..n as u32 {
            if condensation.is_recurrent(x) {
                per_config[x as usize] = 0;
                queue.push_back(x);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = per_config[v as usize];
            for &u in &sources[offsets[v as usize]..offsets[v as usize + 1]] {
                if per_config[u as usize] == u32::MAX {
                    per_config[u as usize] = d + 1;
                    queue.push_back(u);
                }
            }
        }
        let network_time = per_config.iter().copied().max().unwrap_or(0);
        ConvergenceReport {
            per_config,
            network_time,
        }
    }

    /// Transient configuration that no trajectory can return to once it is
    /// left: its strongly connected component is the configuration alone.
    pub fn is_irreversible(&self, x: &Configuration) -> bool {
        self.condensation().is_irreversible(x.bits() as u32)
    }
}

/// Strongly connected components of a transition graph and which of them
/// are terminal.
#[derive(Debug, Clone)]
pub struct Condensation {
    component: Vec<u32>,
    sizes: Vec<u32>,
    terminal: Vec<bool>,
}

impl Condensation {
    pub fn component_of(&self, x: u32) -> u32 {
        self.component[x as usize]
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn component_size(&self, id: u32) -> u32 {
        self.sizes[id as usize]
    }

    pub fn is_recurrent(&self, x: u32) -> bool {
        self.terminal[self.component[x as usize] as usize]
    }

    pub fn is_irreversible(&self, x: u32) -> bool {
        !self.is_recurrent(x) && self.sizes[self.component[x as usize] as usize] == 1
    }

    /// Terminal components, each sorted, ordered by smallest member.
    pub fn attractors(&self, graph: &TransitionGraph) -> Vec<Attractor> {
        let mut groups: Vec<Vec<u32>> = vec![Vec::new(); self.sizes.len()];
        for x in 0..self.component.len() as u32 {
            let c = self.component[x as usize] as usize;
            if self.terminal[c] {
                groups[c].push(x);
            }
        }
        let mut out: Vec<Attractor> = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|g| Attractor::new(g.into_iter().map(|x| graph.configuration(x)).collect()))
            .collect();
        out.sort_by_key(|a| a.members[0]);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum AttractorKind {
    StableConfiguration,
    StableOscillation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attractor {
    pub members: Vec<Configuration>,
    pub kind: AttractorKind,
}

impl Attractor {
    fn new(members: Vec<Configuration>) -> Self {
        let kind = if members.len() == 1 {
            AttractorKind::StableConfiguration
        } else {
            AttractorKind::StableOscillation
        };
        Attractor { members, kind }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: &Configuration) -> bool {
        self.members.binary_search(x).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub per_config: Vec<u32>,
    pub network_time: u32,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AttractorSummary {
    pub size: usize,
    pub kind: AttractorKind,
    pub sample_members: Vec<String>,
}

/// Summary of the asymptotic behaviour of a double-cycle.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DynamicsReport {
    pub schema_version: u32,
    pub kind: Kind,
    pub n: usize,
    pub m: usize,
    pub attractors: Vec<AttractorSummary>,
    pub transient_count: usize,
    pub network_convergence_time: u32,
}

const SAMPLE_MEMBERS: usize = 8;

impl DynamicsReport {
    pub fn new(system: &DoubleCycle, graph: &TransitionGraph) -> Self {
        let condensation = graph.condensation();
        let attractors = condensation.attractors(graph);
        let recurrent: usize = attractors.iter().map(Attractor::size).sum();
        let layout = system.layout();
        DynamicsReport {
            schema_version: REPORT_SCHEMA_VERSION,
            kind: system.kind(),
            n: layout.n,
            m: layout.m,
            attractors: attractors
                .iter()
                .map(|a| AttractorSummary {
                    size: a.size(),
                    kind: a.kind,
                    sample_members: a
                        .members
                        .iter()
                        .take(SAMPLE_MEMBERS)
                        .map(|x| layout.format(x))
                        .collect(),
                })
                .collect(),
            transient_count: graph.state_count() - recurrent,
            network_convergence_time: graph.convergence_with(&condensation).network_time,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let count = self.attractors.len();
        let _ = writeln!(
            out,
            "{} double-cycle n={} m={}: {count} attractor{}",
            self.kind,
            self.n,
            self.m,
            if count == 1 { "" } else { "s" }
        );
        for (i, a) in self.attractors.iter().enumerate() {
            match a.kind {
                AttractorKind::StableConfiguration => {
                    let _ = writeln!(out, "  attractor {}: size 1: {}", i + 1, a.sample_members[0]);
                }
                AttractorKind::StableOscillation => {
                    let _ = writeln!(out, "  attractor {}: size {}, oscillation", i + 1, a.size);
                }
            }
        }
        let _ = writeln!(out, "transient configurations: {}", self.transient_count);
        let _ = writeln!(out, "network convergence time: {}", self.network_convergence_time);
        out
    }
}

/// Graphviz rendering; recurrent configurations are filled.
pub fn to_dot(layout: &Layout, graph: &TransitionGraph) -> String {
    let condensation = graph.condensation();
    let mut out = String::from("digraph transitions {\n  node [shape=box, fontname=\"monospace\"];\n");
    for x in 0..graph.state_count() as u32 {
        let label = layout.format(&graph.configuration(x));
        if condensation.is_recurrent(x) {
            let _ = writeln!(out, "  s{x} [label=\"{label}\", style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(out, "  s{x} [label=\"{label}\"];");
        }
    }
    for (x, y, i) in graph.edge_list() {
        let _ = writeln!(out, "  s{x} -> s{y} [label=\"{}\"];", layout.automaton_name(i as usize));
    }
    out.push_str("}\n");
    out
}
