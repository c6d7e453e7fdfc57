//! Vertex-move engine over a one-deficient coloring: legality-checked single
//! moves, atomic move groups, witness path shifting, insertion of the
//! held-out vertex, and the accessibility-improvement pipeline.
//!
//! Every improvement candidate is applied speculatively and kept only if the
//! number of accessible classes strictly increases; otherwise the state is
//! rolled back. The structured patterns mirror the exchange arguments that
//! make a stuck one-deficient coloring impossible on graphs satisfying the
//! edge bounds, so on such inputs one of them fires without the fallback.

use crate::coloring::Coloring;
use crate::digraph::{solo_analysis, ClassCounts, ClassDigraph, ClassId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

/// One recorded vertex move. `from` is `None` when the vertex was held out.
/// Moves sharing a nonzero `group` were validated as one atomic step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub vertex: u32,
    pub from: Option<usize>,
    pub to: usize,
    pub tag: String,
    pub group: u32,
}

/// Caps for the improvement search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Speculative candidate applications per structured pattern.
    pub max_pattern_attempts: usize,
    /// Depth limit of the fallback move search.
    pub max_fallback_depth: usize,
    /// Node limit of the fallback move search.
    pub max_fallback_nodes: usize,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            max_pattern_attempts: 32,
            max_fallback_depth: 4,
            max_fallback_nodes: 200_000,
        }
    }
}

/// A one-deficient coloring under repair, with the incremental neighbor
/// counts and the accumulated move trace.
#[derive(Debug)]
pub struct FixState<'g> {
    pub g: &'g Graph,
    pub coloring: Coloring,
    pub counts: ClassCounts,
    pub deficient: ClassId,
    pub trace: Vec<Move>,
    next_group: u32,
}

struct Snapshot {
    coloring: Coloring,
    counts: ClassCounts,
    deficient: ClassId,
    trace_len: usize,
    next_group: u32,
}

impl<'g> FixState<'g> {
    /// Wraps an existing one-deficient coloring.
    pub fn new(g: &'g Graph, coloring: Coloring, deficient: ClassId) -> Result<FixState<'g>> {
        let profile = coloring.profile();
        if profile.deficient != Some(deficient) {
            return Err(Error::invalid(format!(
                "not one-deficient at class {deficient}: sizes {:?}",
                profile.sizes
            )));
        }
        let counts = ClassCounts::build(g, &coloring);
        Ok(FixState {
            g,
            coloring,
            counts,
            deficient,
            trace: Vec::new(),
            next_group: 1,
        })
    }

    /// Unassigns `x` from a fully balanced coloring; its old class becomes
    /// the deficient one.
    pub fn hold_out(g: &'g Graph, mut coloring: Coloring, x: u32) -> Result<FixState<'g>> {
        let home = coloring
            .class_of(x)
            .ok_or_else(|| Error::invalid(format!("vertex {x} already unassigned")))?;
        coloring.unassign(x);
        FixState::new(g, coloring, home)
    }

    pub fn s(&self) -> usize {
        self.coloring.class_size(self.deficient) + 1
    }

    pub fn digraph(&self) -> Result<ClassDigraph> {
        ClassDigraph::build(&self.coloring, &self.counts, self.deficient)
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            coloring: self.coloring.clone(),
            counts: self.counts.clone(),
            deficient: self.deficient,
            trace_len: self.trace.len(),
            next_group: self.next_group,
        }
    }

    fn restore(&mut self, snap: Snapshot) {
        self.coloring = snap.coloring;
        self.counts = snap.counts;
        self.deficient = snap.deficient;
        self.trace.truncate(snap.trace_len);
        self.next_group = snap.next_group;
    }

    /// Applies one move without profile bookkeeping; legality = no neighbor
    /// in the target class right now.
    fn raw_move(&mut self, v: u32, to: ClassId, tag: &str, group: u32) -> Result<()> {
        let from = self
            .coloring
            .class_of(v)
            .ok_or_else(|| Error::invalid(format!("vertex {v} unassigned")))?;
        if from == to {
            return Err(Error::IllegalMove {
                vertex: v,
                to,
                reason: "already there".into(),
            });
        }
        if !self.counts.movable(v, to) {
            return Err(Error::IllegalMove {
                vertex: v,
                to,
                reason: format!("{} neighbors in target", self.counts.count(v, to)),
            });
        }
        self.counts.on_unassign(self.g, v, from);
        self.coloring.assign(v, to);
        self.counts.on_assign(self.g, v, to);
        self.trace.push(Move {
            vertex: v,
            from: Some(from),
            to,
            tag: tag.to_string(),
            group,
        });
        Ok(())
    }

    /// Restores the one-deficient invariant after a sequence; errors if the
    /// profile is broken.
    fn finish_sequence(&mut self) -> Result<()> {
        let profile = self.coloring.profile();
        match profile.deficient {
            Some(d) => {
                self.deficient = d;
                Ok(())
            }
            None => Err(Error::invalid(format!(
                "sequence broke the one-deficient profile: {:?}",
                profile.sizes
            ))),
        }
    }

    /// Applies moves in order, each legal at its application time, and
    /// requires the final profile to be one-deficient. Rolls back entirely
    /// on any failure.
    pub fn apply_sequence(&mut self, steps: &[(u32, ClassId)], tag: &str) -> Result<()> {
        let snap = self.snapshot();
        for &(v, to) in steps {
            if let Err(e) = self.raw_move(v, to, tag, 0) {
                self.restore(snap);
                return Err(e);
            }
        }
        if let Err(e) = self.finish_sequence() {
            self.restore(snap);
            return Err(e);
        }
        Ok(())
    }

    /// Applies a set of moves as one atomic step: legality is checked
    /// against the final assignment, so moves may mutually unblock each
    /// other. Rolls back entirely on failure.
    pub fn apply_atomic(&mut self, steps: &[(u32, ClassId)], tag: &str) -> Result<()> {
        let mut moved: Vec<u32> = steps.iter().map(|&(v, _)| v).collect();
        moved.sort_unstable();
        moved.dedup();
        if moved.len() != steps.len() {
            return Err(Error::invalid("atomic group moves a vertex twice"));
        }
        let final_class = |u: u32| -> Option<usize> {
            steps
                .iter()
                .find(|&&(v, _)| v == u)
                .map(|&(_, to)| Some(to))
                .unwrap_or_else(|| self.coloring.class_of(u))
        };
        for &(v, to) in steps {
            for &u in self.g.neighbors(v) {
                if final_class(u) == Some(to) {
                    return Err(Error::IllegalMove {
                        vertex: v,
                        to,
                        reason: format!("neighbor {u} lands in target"),
                    });
                }
            }
        }
        let snap = self.snapshot();
        let group = self.next_group;
        self.next_group += 1;
        for &(v, to) in steps {
            let from = self.coloring.class_of(v).expect("atomic move of colored vertex");
            self.counts.on_unassign(self.g, v, from);
            self.coloring.assign(v, to);
            self.counts.on_assign(self.g, v, to);
            self.trace.push(Move {
                vertex: v,
                from: Some(from),
                to,
                tag: tag.to_string(),
                group,
            });
        }
        if let Err(e) = self.finish_sequence() {
            self.restore(snap);
            return Err(e);
        }
        Ok(())
    }

    /// Shifts one vertex along a class path: for each consecutive arc the
    /// lowest-id live witness moves from its home to its target class. The
    /// net effect moves one unit of slack from the end of the path to its
    /// start.
    pub fn shift_path(&mut self, path: &[ClassId], tag: &str) -> Result<()> {
        let snap = self.snapshot();
        for win in path.windows(2) {
            let (p, q) = (win[0], win[1]);
            let witness = self
                .coloring
                .members(p)
                .iter()
                .copied()
                .find(|&v| self.counts.movable(v, q));
            match witness {
                Some(v) => {
                    if let Err(e) = self.raw_move(v, q, tag, 0) {
                        self.restore(snap);
                        return Err(e);
                    }
                }
                None => {
                    self.restore(snap);
                    return Err(Error::invalid(format!("no witness for arc {p} -> {q}")));
                }
            }
        }
        if let Err(e) = self.finish_sequence() {
            self.restore(snap);
            return Err(e);
        }
        Ok(())
    }

    /// Inserts the held-out vertex `x`: picks an accessible class with no
    /// neighbor of `x`, shifts its slack toward the deficient class, and
    /// assigns `x`. Returns false when every accessible class is blocked.
    /// After a successful insert the coloring is balanced and the state is
    /// no longer one-deficient.
    pub fn insert_heldout(&mut self, x: u32) -> Result<bool> {
        if self.coloring.class_of(x).is_some() {
            return Err(Error::invalid(format!("vertex {x} is not held out")));
        }
        let d = self.digraph()?;
        let mut best: Option<(usize, ClassId, Vec<ClassId>)> = None;
        for i in d.accessible_classes() {
            if !self.counts.movable(x, i) {
                continue;
            }
            let path = d.path_to_deficient(i).expect("accessible class has a path");
            if best.as_ref().is_none_or(|(len, cls, _)| (path.len(), i) < (*len, *cls)) {
                best = Some((path.len(), i, path));
            }
        }
        let Some((_, class, path)) = best else {
            return Ok(false);
        };
        if path.len() > 1 {
            self.shift_path(&path, "insert-shift")?;
        }
        self.coloring.assign(x, class);
        self.counts.on_assign(self.g, x, class);
        self.trace.push(Move {
            vertex: x,
            from: None,
            to: class,
            tag: "insert".to_string(),
            group: 0,
        });
        Ok(true)
    }

    /// A vertex is ordinary when its class is the sole accessible class, or
    /// its class is terminal and some other member is movable to another
    /// accessible class.
    fn is_ordinary(&self, d: &ClassDigraph, v: u32) -> bool {
        let Some(home) = self.coloring.class_of(v) else {
            return false;
        };
        if d.a() == 1 {
            return home == self.deficient;
        }
        if !d.is_terminal(home) {
            return false;
        }
        self.coloring.members(home).iter().any(|&z| {
            z != v
                && d.accessible_classes()
                    .iter()
                    .any(|&l| l != home && self.counts.movable(z, l))
        })
    }

    /// Speculative application: keep the work of `attempt` only if the
    /// accessible count strictly exceeds `a0`.
    fn try_improving(
        &mut self,
        a0: usize,
        attempt: impl FnOnce(&mut FixState<'g>) -> Result<()>,
    ) -> Result<bool> {
        let snap = self.snapshot();
        match attempt(self) {
            Ok(()) => {
                let a1 = self.digraph()?.a();
                if a1 > a0 {
                    Ok(true)
                } else {
                    self.restore(snap);
                    Ok(false)
                }
            }
            Err(Error::IllegalMove { .. }) | Err(Error::InvalidInput(_)) => {
                self.restore(snap);
                Ok(false)
            }
            Err(e) => {
                self.restore(snap);
                Err(e)
            }
        }
    }

    /// Arc reversal toward a terminal class with an arc into the deficient
    /// one: repeatedly moves the witness of the last arc of a longest
    /// shortest path into the deficient class, as long as the accessible
    /// count is preserved. Returns such a terminal class if one exists
    /// afterwards.
    pub fn normalize_terminal(&mut self) -> Result<Option<ClassId>> {
        for _ in 0..=self.coloring.r() {
            let d = self.digraph()?;
            let a = d.a();
            if let Some(t) = d
                .terminal_set()
                .into_iter()
                .find(|&t| d.has_arc(t, self.deficient))
            {
                return Ok(Some(t));
            }
            if a <= 1 {
                return Ok(None);
            }
            // reverse the last arc of some shortest path of length >= 2
            let far = d
                .accessible_classes()
                .into_iter()
                .filter(|&i| i != self.deficient)
                .filter_map(|i| d.path_to_deficient(i).map(|p| (p.len(), i, p)))
                .max_by_key(|&(len, i, _)| (len, std::cmp::Reverse(i)));
            let Some((len, _, path)) = far else {
                return Ok(None);
            };
            if len < 2 {
                return Ok(None);
            }
            let before_last = path[path.len() - 2];
            let witness = d
                .first_witness(before_last, self.deficient)
                .expect("arc on path has a witness");
            let snap = self.snapshot();
            self.raw_move(witness, self.deficient, "normalize", 0)?;
            self.finish_sequence()?;
            if self.digraph()?.a() < a {
                self.restore(snap);
                return Ok(None);
            }
        }
        Ok(None)
    }

    /// One accessibility-improvement round. Tries the structured patterns
    /// in order, then the bounded fallback search; returns the tag of the
    /// pattern that fired.
    pub fn improve_accessibility(
        &mut self,
        budget: &SearchBudget,
        allow_fallback: bool,
    ) -> Result<&'static str> {
        let a0 = self.digraph()?.a();
        if self.pattern_deficient_shift(a0)? {
            return Ok("deficient-shift");
        }
        if self.pattern_solo_swap(a0)? {
            return Ok("solo-swap");
        }
        if self.pattern_solo_path_exchange(a0, budget)? {
            return Ok("solo-path-exchange");
        }
        if self.pattern_spread_solo(a0)? {
            return Ok("spread-solo");
        }
        if self.pattern_case_compound(a0, budget)? {
            return Ok("case-compound");
        }
        if self.pattern_solo_pair_relocate(a0)? {
            return Ok("solo-pair-relocate");
        }
        if allow_fallback && self.fallback_search(a0, budget)? {
            return Ok("fallback");
        }
        Err(Error::ImprovementNotFound(format!(
            "no pattern raised the accessible count above {a0}"
        )))
    }

    /// Move any vertex into the deficient class; the deficiency relocates to
    /// its old class, which can change what is accessible.
    fn pattern_deficient_shift(&mut self, a0: usize) -> Result<bool> {
        let deficient = self.deficient;
        let candidates: Vec<u32> = self
            .g
            .vertices()
            .filter(|&v| {
                self.coloring.class_of(v).is_some_and(|c| c != deficient)
                    && self.counts.movable(v, deficient)
            })
            .collect();
        for v in candidates {
            let ok = self.try_improving(a0, |st| {
                st.apply_sequence(&[(v, deficient)], "deficient-shift")
            })?;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Swap an ordinary vertex v with a nice solo neighbor u when u is v's
    /// only neighbor in its class; u's nonadjacent partner then opens an arc
    /// from its class back into v's home.
    fn pattern_solo_swap(&mut self, a0: usize) -> Result<bool> {
        let d = self.digraph()?;
        for (v, solo) in self.ordinary_solo_vertices(&d)? {
            let home = self.coloring.class_of(v).unwrap();
            for &u in &solo.qp {
                let j = self.coloring.class_of(u).unwrap();
                if self.counts.count(v, j) != 1 {
                    continue;
                }
                let ok = self.try_improving(a0, |st| {
                    st.apply_atomic(&[(v, j), (u, home)], "solo-swap")
                })?;
                if ok {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Exchange along a path: move ordinary v to a class with none of its
    /// neighbors, route that class's slack to the class of a nice solo
    /// neighbor u, then pull u into v's home. The partner of u opens an arc
    /// from its own class into the home afterwards.
    fn pattern_solo_path_exchange(&mut self, a0: usize, budget: &SearchBudget) -> Result<bool> {
        let d = self.digraph()?;
        let b_classes = d.nonaccessible_classes();
        let mut attempts = 0usize;
        for (v, solo) in self.ordinary_solo_vertices(&d)? {
            let home = self.coloring.class_of(v).unwrap();
            for &u in &solo.qp {
                let j = self.coloring.class_of(u).unwrap();
                let partner = solo
                    .q
                    .iter()
                    .copied()
                    .find(|&w| w != u && !self.g.has_edge(u, w));
                let Some(w) = partner else { continue };
                let m = self.coloring.class_of(w).unwrap();
                for &k in &solo.bp {
                    if k == j {
                        continue;
                    }
                    let Some(path) = d.shortest_path(k, j, Some(m).filter(|&m| m != j && m != k), Some(&b_classes))
                    else {
                        continue;
                    };
                    attempts += 1;
                    if attempts > budget.max_pattern_attempts {
                        return Ok(false);
                    }
                    let ok = self.try_improving(a0, |st| {
                        st.apply_sequence(&[(v, k)], "solo-path-exchange")?;
                        st.shift_path(&path, "solo-path-exchange")?;
                        st.apply_sequence(&[(u, home)], "solo-path-exchange")
                    })?;
                    if ok {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    /// Move a solo vertex of a terminal class into another accessible class
    /// it has no neighbors in, rerouting that class's slack to the deficient
    /// one; the vacated terminal class becomes deficient and its solo
    /// neighbors' classes gain arcs into it.
    fn pattern_spread_solo(&mut self, a0: usize) -> Result<bool> {
        let d = self.digraph()?;
        for t in d.terminal_set() {
            for v in self.coloring.members(t).to_vec() {
                let solo = solo_analysis(self.g, &self.coloring, &self.counts, &d, v)?;
                if solo.q.is_empty() {
                    continue;
                }
                for l in d.accessible_classes() {
                    if l == t || !self.counts.movable(v, l) {
                        continue;
                    }
                    let Some(path) = d.shortest_path(l, self.deficient, Some(t), None) else {
                        continue;
                    };
                    let ok = self.try_improving(a0, |st| {
                        if path.len() > 1 {
                            st.shift_path(&path, "spread-solo")?;
                        }
                        st.apply_sequence(&[(v, l)], "spread-solo")
                    })?;
                    if ok {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    /// The compound exchange used when few classes are accessible: two
    /// heavy vertices v3, v2 of one terminal (or sole) class move out to
    /// classes free of their neighbors, and two of their solo neighbors
    /// z1, z0 move in, with a witness path rebalancing the non-accessible
    /// side. Afterwards the vacated class stays accessible and the classes
    /// of the moved solo neighbors join the accessible part.
    fn pattern_case_compound(&mut self, a0: usize, budget: &SearchBudget) -> Result<bool> {
        if a0 > 4 {
            return Ok(false);
        }
        if a0 >= 2 {
            self.normalize_terminal()?;
        }
        let d = self.digraph()?;
        let homes: Vec<ClassId> = if d.a() == 1 {
            vec![self.deficient]
        } else {
            d.terminal_set()
                .into_iter()
                .filter(|&t| d.has_arc(t, self.deficient))
                .collect()
        };
        let b_classes = d.nonaccessible_classes();
        let (comps, largest) = d.strong_components_b();
        let u_comp: Vec<ClassId> = largest.map(|i| comps[i].clone()).unwrap_or_default();
        let mut attempts = 0usize;
        for home in homes {
            let members = self.coloring.members(home).to_vec();
            for &v3 in &members {
                let solo3 = solo_analysis(self.g, &self.coloring, &self.counts, &d, v3)?;
                if solo3.q.is_empty() || solo3.bp.is_empty() {
                    continue;
                }
                for &v2 in &members {
                    if v2 == v3 {
                        continue;
                    }
                    let solo2 = solo_analysis(self.g, &self.coloring, &self.counts, &d, v2)?;
                    for &c in &solo3.bp {
                        let z1s: Vec<u32> = solo2
                            .q
                            .iter()
                            .copied()
                            .filter(|&z| self.coloring.class_of(z) == Some(c))
                            .collect();
                        for &z1 in &z1s {
                            for &z0 in &solo3.q {
                                let zc = self.coloring.class_of(z0).unwrap();
                                if z0 == z1 || zc == c || self.g.has_edge(z0, z1) {
                                    continue;
                                }
                                if !u_comp.is_empty() && !u_comp.contains(&zc) {
                                    continue;
                                }
                                for &vi in &solo2.bp {
                                    if vi == c {
                                        continue;
                                    }
                                    let Some(path) =
                                        d.shortest_path(vi, zc, None, Some(&b_classes))
                                    else {
                                        continue;
                                    };
                                    attempts += 1;
                                    if attempts > budget.max_pattern_attempts {
                                        return Ok(false);
                                    }
                                    let ok = self.try_improving(a0, |st| {
                                        st.apply_sequence(
                                            &[(v3, c), (v2, vi), (z1, home), (z0, home)],
                                            "case-compound",
                                        )?;
                                        if path.len() > 1 {
                                            st.shift_path(&path, "case-compound")?;
                                        }
                                        Ok(())
                                    })?;
                                    if ok {
                                        return Ok(true);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(false)
    }

    /// Trade a vertex of the deficient class for a nonadjacent pair of its
    /// nice solo neighbors sharing a class: the pair moves in, the vertex
    /// takes their class, and the deficiency relocates there.
    fn pattern_solo_pair_relocate(&mut self, a0: usize) -> Result<bool> {
        let d = self.digraph()?;
        if !d.is_accessible(self.deficient) {
            return Ok(false);
        }
        let deficient = self.deficient;
        for v3 in self.coloring.members(deficient).to_vec() {
            let solo = solo_analysis(self.g, &self.coloring, &self.counts, &d, v3)?;
            for (i, &w1) in solo.qp.iter().enumerate() {
                let c = self.coloring.class_of(w1).unwrap();
                for &w2 in &solo.qp[i + 1..] {
                    if self.coloring.class_of(w2) != Some(c) || self.g.has_edge(w1, w2) {
                        continue;
                    }
                    // v3 must end up with no other neighbor left in c
                    if self.counts.count(v3, c) != 2 {
                        continue;
                    }
                    let ok = self.try_improving(a0, |st| {
                        st.apply_atomic(
                            &[(w1, deficient), (w2, deficient), (v3, c)],
                            "solo-pair-relocate",
                        )
                    })?;
                    if ok {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    /// Bounded iterative-deepening search over deficiency-relocating single
    /// moves. Profile-preserving by construction; succeeds on the first
    /// state whose accessible count exceeds `a0`.
    fn fallback_search(&mut self, a0: usize, budget: &SearchBudget) -> Result<bool> {
        for depth in 1..=budget.max_fallback_depth {
            let mut nodes = 0usize;
            let mut visited = HashSet::new();
            if self.fallback_dfs(a0, depth, &mut nodes, budget.max_fallback_nodes, &mut visited)? {
                return Ok(true);
            }
            if nodes >= budget.max_fallback_nodes {
                break;
            }
        }
        Ok(false)
    }

    fn fallback_dfs(
        &mut self,
        a0: usize,
        depth: usize,
        nodes: &mut usize,
        node_cap: usize,
        visited: &mut HashSet<u64>,
    ) -> Result<bool> {
        let deficient = self.deficient;
        let candidates: Vec<u32> = self
            .g
            .vertices()
            .filter(|&v| {
                self.coloring.class_of(v).is_some_and(|c| c != deficient)
                    && self.counts.movable(v, deficient)
            })
            .collect();
        for v in candidates {
            if *nodes >= node_cap {
                return Ok(false);
            }
            *nodes += 1;
            let snap = self.snapshot();
            self.raw_move(v, deficient, "fallback", 0)?;
            self.finish_sequence()?;
            if self.digraph()?.a() > a0 {
                return Ok(true);
            }
            if depth > 1 && visited.insert(self.assignment_hash())
                && self.fallback_dfs(a0, depth - 1, nodes, node_cap, visited)? {
                    return Ok(true);
                }
            self.restore(snap);
        }
        Ok(false)
    }

    fn assignment_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        for v in self.g.vertices() {
            self.coloring.class_of(v).hash(&mut h);
        }
        self.deficient.hash(&mut h);
        h.finish()
    }

    /// Ordinary vertices of terminal classes (or of the sole accessible
    /// class) together with their solo data, skipping non-solo vertices.
    fn ordinary_solo_vertices(
        &self,
        d: &ClassDigraph,
    ) -> Result<Vec<(u32, crate::digraph::SoloData)>> {
        let homes: Vec<ClassId> = if d.a() == 1 {
            vec![self.deficient]
        } else {
            d.terminal_set()
        };
        let mut out = Vec::new();
        for home in homes {
            for &v in self.coloring.members(home) {
                if !self.is_ordinary(d, v) {
                    continue;
                }
                let solo = solo_analysis(self.g, &self.coloring, &self.counts, d, v)?;
                if !solo.q.is_empty() {
                    out.push((v, solo));
                }
            }
        }
        Ok(out)
    }
}

/// Structural invariants that must hold at every improvement entry when the
/// input satisfies the edge bounds: caps on the accessible count, the
/// cross-edge inequality, the big strong component, the nice-solo lower
/// bound, and the exact weight-sum identity. Returns human-readable
/// violations; empty means all checks passed.
pub fn claim_audit(st: &FixState<'_>, d: &ClassDigraph) -> Result<Vec<String>> {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    let mut violations = Vec::new();
    let r = st.coloring.r();
    let s = st.s();
    let a = d.a();
    let b = d.b();

    if a > 7 {
        violations.push(format!("accessible count {a} exceeds 7"));
    }
    if a > 4 {
        violations.push(format!("accessible count {a} exceeds 4"));
    }

    // every vertex of a non-accessible class has a neighbor in every
    // accessible class
    'outer: for j in d.nonaccessible_classes() {
        for &w in st.coloring.members(j) {
            for i in d.accessible_classes() {
                if st.counts.count(w, i) == 0 {
                    violations.push(format!(
                        "vertex {w} of non-accessible class {j} has no neighbor in accessible class {i}"
                    ));
                    break 'outer;
                }
            }
        }
    }

    // a*b*s <= |E(A,B)| <= 3(rs-1) - 8
    let acc: Vec<bool> = (0..r).map(|i| d.is_accessible(i)).collect();
    let cross = st
        .g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            match (st.coloring.class_of(u), st.coloring.class_of(v)) {
                (Some(cu), Some(cv)) => acc[cu] != acc[cv],
                _ => false,
            }
        })
        .count();
    let abs = a * b * s;
    let rhs = 3 * (r * s - 1) - 8;
    if abs > cross {
        violations.push(format!("a*b*s = {abs} exceeds |E(A,B)| = {cross}"));
    }
    if cross > rhs {
        violations.push(format!("|E(A,B)| = {cross} exceeds 3(rs-1)-8 = {rhs}"));
    }

    if b > 0 && r >= 13 {
        let (comps, largest) = d.strong_components_b();
        let max = largest.map(|i| comps[i].len()).unwrap_or(0);
        if max + 4 < r {
            violations.push(format!(
                "largest strong component of the non-accessible part has {max} < r-4 classes"
            ));
        }
    }

    for i in d.accessible_classes() {
        for &v in st.coloring.members(i) {
            let solo = solo_analysis(st.g, &st.coloring, &st.counts, d, v)?;
            if solo.q_len() >= 7 && solo.qp_len() + 3 < solo.q_len() {
                violations.push(format!(
                    "vertex {v}: q = {} but q' = {} < q-3",
                    solo.q_len(),
                    solo.qp_len()
                ));
            }
        }
    }

    for i in d.accessible_classes() {
        let wq = crate::digraph::weight(st.g, &st.coloring, &st.counts, d, i, &[])?;
        let expected = BigRational::from(BigInt::from((s * b) as i64));
        if wq.total() != expected {
            violations.push(format!(
                "weight sum over class {i} is {} instead of {expected}",
                wq.total()
            ));
        }
    }

    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Coloring;
    use crate::graph::Graph;

    /// Nine vertices, five classes of sizes (1,2,2,2,2): classes 0..2
    /// accessible, classes 3 and 4 not; swapping vertex 1 with its nice solo
    /// neighbor 5 makes everything accessible.
    fn swap_instance() -> (Graph, Coloring) {
        let g = Graph::from_edges(
            9,
            &[
                (5, 0),
                (5, 1),
                (5, 4),
                (6, 0),
                (6, 2),
                (6, 4),
                (7, 0),
                (7, 1),
                (7, 4),
                (8, 0),
                (8, 2),
                (8, 4),
            ],
        )
        .unwrap();
        let c = Coloring::from_assignment(&[0, 1, 1, 2, 2, 3, 3, 4, 4], 5).unwrap();
        (g, c)
    }

    #[test]
    fn swap_instance_shape() {
        let (g, c) = swap_instance();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let d = st.digraph().unwrap();
        assert_eq!(d.accessible_classes(), vec![0, 1, 2]);
        assert!(st.is_ordinary(&d, 1));
        let solo = solo_analysis(&g, &st.coloring, &st.counts, &d, 1).unwrap();
        assert_eq!(solo.q, vec![5, 7]);
        assert_eq!(solo.qp, vec![5, 7]);
        // the atomic swap 1 <-> 5 raises a from 3 to 5
        st.apply_atomic(&[(1, 3), (5, 1)], "solo-swap").unwrap();
        assert_eq!(st.digraph().unwrap().a(), 5);
    }

    #[test]
    fn improve_fires_solo_swap() {
        let (g, c) = swap_instance();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let tag = st
            .improve_accessibility(&SearchBudget::default(), false)
            .unwrap();
        // deficient-shift is tried first and happens to succeed here too;
        // either structured pattern is acceptable as long as a grows
        assert!(tag == "deficient-shift" || tag == "solo-swap", "tag = {tag}");
        assert!(st.digraph().unwrap().a() > 3);
    }

    #[test]
    fn sequence_rolls_back_on_illegal_move() {
        let (g, c) = swap_instance();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let before = st.coloring.clone();
        // vertex 3 is isolated (legal first step); vertex 5 is adjacent to
        // 0, so moving it to class 0 is illegal
        let err = st.apply_sequence(&[(3, 1), (5, 0)], "test").unwrap_err();
        assert!(matches!(err, Error::IllegalMove { vertex: 5, .. }));
        assert_eq!(st.coloring, before);
        assert!(st.trace.is_empty());
        assert!(st.counts.verify_against(&g, &st.coloring));
    }

    #[test]
    fn sequence_rejects_broken_profile() {
        let (g, c) = swap_instance();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let before = st.coloring.clone();
        // a lone legal move out of class 2 leaves sizes (1,2,1,3,2)... the
        // profile check must reject and roll back
        let err = st.apply_sequence(&[(3, 3)], "test").unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        assert_eq!(st.coloring, before);
    }

    #[test]
    fn atomic_group_validates_against_final_state() {
        let (g, c) = swap_instance();
        let mut st = FixState::new(&g, c, 0).unwrap();
        // 1 and 5 are adjacent and mutually block each other's target, so no
        // sequential order works, but the atomic group does
        assert!(st.apply_sequence(&[(5, 1), (1, 3)], "test").is_err());
        st.apply_atomic(&[(1, 3), (5, 1)], "test").unwrap();
        let group = st.trace[0].group;
        assert!(group > 0);
        assert!(st.trace.iter().all(|m| m.group == group));
    }

    #[test]
    fn shift_path_moves_one_unit_of_slack() {
        // chain: class2 -> class1 -> class0 (deficient)
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (2, 4)]).unwrap();
        let c = Coloring::from_assignment(&[0, 1, 1, 2, 2], 3).unwrap();
        let mut st = FixState::new(&g, c, 0).unwrap();
        st.shift_path(&[2, 1, 0], "test").unwrap();
        assert_eq!(st.deficient, 2);
        assert_eq!(st.coloring.class_sizes(), vec![2, 2, 1]);
        assert!(st.counts.verify_against(&g, &st.coloring));
        assert_eq!(st.trace.len(), 2);
    }

    #[test]
    fn shift_path_fails_without_witness_and_rolls_back() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        // class1 = {1, 2}, both adjacent to the only vertex of class 0
        let c = Coloring::from_assignment(&[0, 1, 1], 2).unwrap();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let before = st.coloring.clone();
        assert!(st.shift_path(&[1, 0], "test").is_err());
        assert_eq!(st.coloring, before);
    }

    #[test]
    fn hold_out_and_insert_round_trip() {
        let g = Graph::edgeless(8);
        let c = Coloring::from_assignment(&[0, 0, 1, 1, 2, 2, 3, 3], 4).unwrap();
        let mut st = FixState::hold_out(&g, c, 5).unwrap();
        assert_eq!(st.deficient, 2);
        assert!(st.insert_heldout(5).unwrap());
        assert!(st.coloring.is_total());
        assert!(st.coloring.profile().is_equitable());
    }

    #[test]
    fn insert_routes_through_a_path() {
        // x (=4) is adjacent to everything in the deficient class's
        // neighborhood... build: classes {0}, {1,2}, {3} + x. r=3, s=...
        // sizes must be one-deficient: {0} size1, {1,2} size2, {3} size...
        // use 7 vertices: V0={0} deficient, V1={1,2}, V2={3,5}, x=6 extra,
        // plus vertex 4 in V1? Keep simple: x adjacent to deficient class
        // vertex only, so it must enter a full class and shift slack out.
        let g = Graph::from_edges(6, &[(5, 0), (2, 0), (4, 0), (2, 4)]).unwrap();
        // V0={0} (deficient after holdout), V1={1,2}, V2={3,4}; x=5
        let c = Coloring::from_assignment(&[0, 1, 1, 2, 2, 0], 3).unwrap();
        let mut st = FixState::hold_out(&g, c, 5).unwrap();
        // x=5 is adjacent to 0, so class 0 is blocked; classes 1 and 2 are
        // open and must route their slack into class 0
        assert!(st.insert_heldout(5).unwrap());
        assert!(st.coloring.is_total());
        assert!(st.coloring.profile().is_equitable());
        assert!(crate::coloring::verify_proper(&g, &st.coloring).unwrap());
    }

    #[test]
    fn normalize_reaches_terminal_with_arc() {
        // chain class2 -> class1 -> class0: no terminal class has an arc to
        // the deficient class 0 (class 2 is terminal but only reaches 1), so
        // normalization reverses the last arc
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (2, 4)]).unwrap();
        let c = Coloring::from_assignment(&[0, 1, 1, 2, 2], 3).unwrap();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let t = st.normalize_terminal().unwrap();
        assert!(t.is_some());
        let d = st.digraph().unwrap();
        assert!(d.has_arc(t.unwrap(), st.deficient));
        assert!(d.is_terminal(t.unwrap()));
    }

    #[test]
    fn improvement_not_found_on_hopeless_state() {
        // two classes, complete bipartite: nothing is movable anywhere
        let g = crate::gen::gen_complete_bipartite(2, 1);
        let c = Coloring::from_assignment(&[1, 1, 0], 2).unwrap();
        let mut st = FixState::new(&g, c, 0).unwrap();
        let err = st
            .improve_accessibility(&SearchBudget::default(), true)
            .unwrap_err();
        assert!(matches!(err, Error::ImprovementNotFound(_)));
    }

    #[test]
    fn improve_fails_gracefully_when_everything_is_accessible() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (2, 4)]).unwrap();
        let c = Coloring::from_assignment(&[0, 1, 1, 2, 2], 3).unwrap();
        let mut st = FixState::new(&g, c, 0).unwrap();
        assert_eq!(st.digraph().unwrap().a(), 3);
        assert!(matches!(
            st.improve_accessibility(&SearchBudget::default(), true),
            Err(Error::ImprovementNotFound(_))
        ));
    }

    #[test]
    fn claim_audit_clean_on_balanced_random_state() {
        // an honest one-deficient state on an edgeless graph: everything
        // accessible, no cross edges, all checks trivially pass except the
        // a<=4 cap, which only applies with a non-accessible side
        let g = Graph::edgeless(7);
        let c = Coloring::from_assignment(&[0, 1, 1, 2, 2, 3, 3], 4).unwrap();
        let st = FixState::new(&g, c, 0).unwrap();
        let d = st.digraph().unwrap();
        let violations = claim_audit(&st, &d).unwrap();
        // a = 4 here, so both caps hold; weight sums are zero on both sides
        assert!(violations.is_empty(), "{violations:?}");
    }

    #[test]
    fn trace_records_tags_and_groups() {
        let (g, c) = swap_instance();
        let mut st = FixState::new(&g, c, 0).unwrap();
        st.improve_accessibility(&SearchBudget::default(), false)
            .unwrap();
        assert!(!st.trace.is_empty());
        for m in &st.trace {
            assert!(m.from.is_some());
            assert!(!m.tag.is_empty());
        }
    }
}
