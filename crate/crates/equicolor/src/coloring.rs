//! Vertex colorings, equitability checks, and the one-deficient profile the
//! class-digraph machinery operates on.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Vertex -> class assignment together with per-class member lists.
///
/// Properness is deliberately *not* an invariant: fix phases hold one vertex
/// out (assignment `None`), and intermediate states inside compound moves
/// may be improper until the whole sequence lands. Use [`verify_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<Option<usize>>,
    classes: Vec<Vec<u32>>,
    r: usize,
}

impl Coloring {
    pub fn empty(n: usize, r: usize) -> Coloring {
        Coloring {
            assignment: vec![None; n],
            classes: vec![Vec::new(); r],
            r,
        }
    }

    /// From a total assignment vector.
    pub fn from_assignment(assignment: &[usize], r: usize) -> Result<Coloring> {
        let mut c = Coloring::empty(assignment.len(), r);
        for (v, &cls) in assignment.iter().enumerate() {
            if cls >= r {
                return Err(Error::invalid(format!("class {cls} out of range")));
            }
            c.assign(v as u32, cls);
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn class_of(&self, v: u32) -> Option<usize> {
        self.assignment[v as usize]
    }

    pub fn members(&self, class: usize) -> &[u32] {
        &self.classes[class]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes[class].len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// Assigns `v` to `class`, unassigning it first if needed.
    pub fn assign(&mut self, v: u32, class: usize) {
        self.unassign(v);
        self.assignment[v as usize] = Some(class);
        let pos = self.classes[class].binary_search(&v).unwrap_err();
        self.classes[class].insert(pos, v);
    }

    pub fn unassign(&mut self, v: u32) {
        if let Some(old) = self.assignment[v as usize].take() {
            let pos = self.classes[old].binary_search(&v).unwrap();
            self.classes[old].remove(pos);
        }
    }

    /// Total assignment as a plain vector; errors if any vertex is held out.
    pub fn total_assignment(&self) -> Result<Vec<usize>> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(v, a)| a.ok_or_else(|| Error::invalid(format!("vertex {v} unassigned"))))
            .collect()
    }

    pub fn profile(&self) -> BalanceProfile {
        BalanceProfile::of(&self.class_sizes())
    }
}

/// Multiset of class sizes, plus the unique deficient class when the
/// coloring is in the one-deficient shape |V_1| = s-1, |V_i| = s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceProfile {
    pub sizes: Vec<usize>,
    /// Index of the unique class of size s-1, when exactly one class is one
    /// short of all the others.
    pub deficient: Option<usize>,
}

impl BalanceProfile {
    pub fn of(sizes: &[usize]) -> BalanceProfile {
        let max = sizes.iter().copied().max().unwrap_or(0);
        let small: Vec<usize> = sizes
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s + 1 == max)
            .map(|(i, _)| i)
            .collect();
        let all_max_or_one_less = sizes.iter().all(|&s| s == max || s + 1 == max);
        let deficient = if all_max_or_one_less && small.len() == 1 {
            Some(small[0])
        } else {
            None
        };
        BalanceProfile {
            sizes: sizes.to_vec(),
            deficient,
        }
    }

    pub fn is_equitable(&self) -> bool {
        let max = self.sizes.iter().copied().max().unwrap_or(0);
        let min = self.sizes.iter().copied().min().unwrap_or(0);
        max - min <= 1
    }

    pub fn is_one_deficient(&self) -> bool {
        self.deficient.is_some()
    }
}

/// True iff no edge of `g` is monochromatic. Errors on partial assignments.
pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    if !c.is_total() {
        return Err(Error::invalid("partial assignment"));
    }
    for (u, v) in g.edges() {
        if c.class_of(u) == c.class_of(v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff class sizes pairwise differ by at most one.
pub fn verify_equitable(c: &Coloring) -> bool {
    c.profile().is_equitable()
}

/// Extends a partial coloring over the uncolored vertices in `order`,
/// choosing for each vertex a class that avoids its colored neighbors and
/// stays below `cap`. Ties break toward the smallest class, then the lowest
/// class index, so runs are reproducible.
pub fn greedy_balanced_extend(
    g: &Graph,
    mut c: Coloring,
    order: &[u32],
    cap: usize,
) -> Result<Coloring> {
    let r = c.r();
    for &v in order {
        if c.class_of(v).is_some() {
            continue;
        }
        let mut forbidden = vec![false; r];
        for &u in g.neighbors(v) {
            if let Some(cls) = c.class_of(u) {
                forbidden[cls] = true;
            }
        }
        let choice = (0..r)
            .filter(|&j| !forbidden[j] && c.class_size(j) < cap)
            .min_by_key(|&j| (c.class_size(j), j));
        match choice {
            Some(j) => c.assign(v, j),
            None => return Err(Error::StuckVertex(v)),
        }
    }
    Ok(c)
}

/// Serialized coloring: `{"schema":1,"r":..,"assignment":[..],"class_sizes":[..]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringJson {
    pub schema: u32,
    pub r: usize,
    pub assignment: Vec<usize>,
    pub class_sizes: Vec<usize>,
}

impl ColoringJson {
    pub fn from_coloring(c: &Coloring) -> Result<ColoringJson> {
        Ok(ColoringJson {
            schema: 1,
            r: c.r(),
            assignment: c.total_assignment()?,
            class_sizes: c.class_sizes(),
        })
    }

    pub fn into_coloring(&self) -> Result<Coloring> {
        let c = Coloring::from_assignment(&self.assignment, self.r)?;
        if c.class_sizes() != self.class_sizes {
            return Err(Error::invalid("class_sizes disagree with assignment"));
        }
        Ok(c)
    }
}
