//! Abstract oriented virtual knot diagrams.
//!
//! A diagram is a list of signed classical crossings over named edges.
//! Virtual crossings are never encoded: they are artifacts of planar
//! projection, and the detour move makes any two planar realizations of
//! the same abstract code equivalent, so the code itself is the knot.
//!
//! Each crossing records the left and right incoming arcs together with
//! their continuations: `l_in` continues as `r_out` (it crosses to the
//! right) and `r_in` continues as `l_out`. A valid knot uses every edge
//! exactly once as an input and once as an output, and the successor
//! map `input edge -> its continuation` is a single cycle of length
//! `2m` — multi-component codes are rejected.
//!
//! Knot-file grammar: one crossing per line,
//! `<sign> <l_in> <r_in> <r_out> <l_out>` with sign `+` or `-`;
//! `#` starts a comment; blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// Name of an arc between two classical crossings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(String);

impl EdgeId {
    pub fn new(name: impl Into<String>) -> Self {
        EdgeId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        EdgeId::new(s)
    }
}

/// One signed classical crossing. `l_in` continues as `r_out`, `r_in`
/// continues as `l_out`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub l_in: EdgeId,
    pub r_in: EdgeId,
    pub r_out: EdgeId,
    pub l_out: EdgeId,
}

impl Crossing {
    /// The role an input edge plays at this crossing, if any.
    pub fn input_role(&self, e: &EdgeId) -> Option<InputRole> {
        if &self.l_in == e {
            Some(InputRole::Left)
        } else if &self.r_in == e {
            Some(InputRole::Right)
        } else {
            None
        }
    }

    /// Continuation of an input edge through this crossing.
    pub fn continuation(&self, role: InputRole) -> &EdgeId {
        match role {
            InputRole::Left => &self.r_out,
            InputRole::Right => &self.l_out,
        }
    }

    /// R1 kink test: one of the input edges is also an output edge.
    pub fn is_kink(&self) -> bool {
        self.r_in == self.r_out || self.l_in == self.l_out
    }
}

/// Which side an edge enters a crossing on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputRole {
    Left,
    Right,
}

/// Validation failures for diagram codes.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ValidationError {
    #[error("edge {0} is used more than once as an input")]
    EdgeUsedTwiceAsInput(EdgeId),
    #[error("edge {0} lacks an input or output role")]
    EdgeUnused(EdgeId),
    #[error("the diagram has more than one component")]
    NotSingleComponent,
    #[error("crossing {0} repeats edge {1} on the same side")]
    DuplicateEdge(usize, EdgeId),
}

/// Errors from reading a knot file.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// An oriented virtual knot diagram in abstract form.
///
/// Immutable after construction; transforms return new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
}

impl Diagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new() }
    }

    /// Builds and validates a diagram from its crossing list.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, ValidationError> {
        let d = Diagram { crossings };
        d.validate()?;
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// All edge names mentioned by the crossings, sorted.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut set: Vec<EdgeId> = self
            .crossings
            .iter()
            .flat_map(|c| [&c.l_in, &c.r_in, &c.r_out, &c.l_out])
            .cloned()
            .collect();
        set.sort();
        set.dedup();
        set
    }

    /// Successor map: each input edge to its continuation.
    pub fn successor_map(&self) -> BTreeMap<EdgeId, EdgeId> {
        let mut map = BTreeMap::new();
        for c in &self.crossings {
            map.insert(c.l_in.clone(), c.r_out.clone());
            map.insert(c.r_in.clone(), c.l_out.clone());
        }
        map
    }

    /// The crossing at which `e` is consumed, with its role there.
    pub fn forward_crossing(&self, e: &EdgeId) -> Option<(usize, InputRole)> {
        self.crossings
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.input_role(e).map(|r| (i, r)))
    }

    /// Checks the knot invariants: within-crossing distinctness, every
    /// edge once as input and once as output, single traversal cycle.
    pub fn validate(&self) -> Result<(), ValidationError> {
        for (i, c) in self.crossings.iter().enumerate() {
            if c.l_in == c.r_in {
                return Err(ValidationError::DuplicateEdge(i, c.l_in.clone()));
            }
            if c.r_out == c.l_out {
                return Err(ValidationError::DuplicateEdge(i, c.r_out.clone()));
            }
        }
        let mut in_count: BTreeMap<&EdgeId, usize> = BTreeMap::new();
        let mut out_count: BTreeMap<&EdgeId, usize> = BTreeMap::new();
        for c in &self.crossings {
            for e in [&c.l_in, &c.r_in] {
                let n = in_count.entry(e).or_insert(0);
                *n += 1;
                if *n > 1 {
                    return Err(ValidationError::EdgeUsedTwiceAsInput((*e).clone()));
                }
            }
            for e in [&c.r_out, &c.l_out] {
                *out_count.entry(e).or_insert(0) += 1;
            }
        }
        for e in self.edges() {
            if in_count.get(&e).copied().unwrap_or(0) == 0
                || out_count.get(&e).copied().unwrap_or(0) == 0
            {
                return Err(ValidationError::EdgeUnused(e));
            }
        }
        // Input counts are all 1, so out_count > 1 somewhere would force
        // out_count = 0 elsewhere; after the loop above only the cycle
        // structure remains to check.
        let edges = self.edges();
        if edges.is_empty() {
            return Ok(());
        }
        let succ = self.successor_map();
        let start = &edges[0];
        let mut seen = 1usize;
        let mut cur = &succ[start];
        while cur != start {
            seen += 1;
            if seen > edges.len() {
                return Err(ValidationError::NotSingleComponent);
            }
            cur = &succ[cur];
        }
        if seen != edges.len() {
            return Err(ValidationError::NotSingleComponent);
        }
        Ok(())
    }

    /// Edges in orientation order, starting from the lexicographically
    /// smallest edge. Empty for the unknot.
    pub fn traversal_order(&self) -> Vec<EdgeId> {
        let edges = self.edges();
        if edges.is_empty() {
            return Vec::new();
        }
        let succ = self.successor_map();
        let mut order = Vec::with_capacity(edges.len());
        let mut cur = edges[0].clone();
        for _ in 0..edges.len() {
            let next = succ[&cur].clone();
            order.push(cur);
            cur = next;
        }
        order
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// Switches every crossing; the underlying flat diagram is
    /// unchanged.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    sign: c.sign.flip(),
                    ..c.clone()
                })
                .collect(),
        }
    }

    /// Reverses the orientation: inputs and outputs swap roles at every
    /// crossing, signs are preserved.
    pub fn reverse(&self) -> Diagram {
        Diagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    sign: c.sign,
                    l_in: c.r_out.clone(),
                    r_in: c.l_out.clone(),
                    r_out: c.l_in.clone(),
                    l_out: c.r_in.clone(),
                })
                .collect(),
        }
    }

    /// Serializes to the knot-file grammar, one crossing per line in
    /// crossing order.
    pub fn to_knot_text(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                c.sign, c.l_in, c.r_in, c.r_out, c.l_out
            ));
        }
        out
    }
}

/// Equality of diagrams up to renaming edges and rotating the
/// traversal start (crossing order is ignored).
pub fn isomorphic(a: &Diagram, b: &Diagram) -> bool {
    canonical_code(a) == canonical_code(b)
}

/// Minimal crossing code over all rotations of the traversal cycle,
/// with edges replaced by their cycle positions.
fn canonical_code(d: &Diagram) -> Vec<(i64, usize, usize, usize, usize)> {
    let order = d.traversal_order();
    let n = order.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<(i64, usize, usize, usize, usize)>> = None;
    for rot in 0..n {
        let pos: BTreeMap<&EdgeId, usize> = order
            .iter()
            .enumerate()
            .map(|(i, e)| (e, (i + n - rot) % n))
            .collect();
        let mut code: Vec<_> = d
            .crossings
            .iter()
            .map(|c| {
                (
                    c.sign.value(),
                    pos[&c.l_in],
                    pos[&c.r_in],
                    pos[&c.r_out],
                    pos[&c.l_out],
                )
            })
            .collect();
        code.sort_unstable();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap()
}

/// Parses and validates a knot file.
pub fn parse_knot(text: &str) -> Result<Diagram, DiagramError> {
    let mut crossings = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let err = |message: String| DiagramError::Parse {
            line: idx + 1,
            message,
        };
        if fields.len() != 5 {
            return Err(err(format!(
                "expected `<sign> <l_in> <r_in> <r_out> <l_out>`, found {} fields",
                fields.len()
            )));
        }
        let sign = match fields[0] {
            "+" => Sign::Pos,
            "-" => Sign::Neg,
            other => return Err(err(format!("bad sign {other:?}"))),
        };
        let mut names = [const { String::new() }; 4];
        for (slot, field) in names.iter_mut().zip(&fields[1..]) {
            if field.is_empty() || !field.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(format!("bad edge name {field:?}")));
            }
            *slot = (*field).to_string();
        }
        let [l_in, r_in, r_out, l_out] = names;
        crossings.push(Crossing {
            sign,
            l_in: EdgeId::new(l_in),
            r_in: EdgeId::new(r_in),
            r_out: EdgeId::new(r_out),
            l_out: EdgeId::new(l_out),
        });
    }
    Ok(Diagram::new(crossings)?)
}

/// Deterministic random knot with `m >= 1` crossings.
///
/// Places `2m` edges in a single oriented cycle, pairs the `2m`
/// crossing slots (edge -> next edge transitions) into `m` crossings by
/// a uniformly random perfect matching, and assigns the left/right
/// input roles and the sign of each crossing uniformly. Every code
/// produced this way is a valid virtual knot.
pub fn random_knot(m: usize, seed: u64) -> Diagram {
    assert!(m >= 1, "random_knot needs at least one crossing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * m;
    let width = n.to_string().len();
    let edge = |i: usize| EdgeId::new(format!("e{:0width$}", i + 1));
    let mut slots: Vec<usize> = (0..n).collect();
    slots.shuffle(&mut rng);
    let mut crossings = Vec::with_capacity(m);
    for pair in slots.chunks_exact(2) {
        let (left_slot, right_slot) = if rng.gen::<bool>() {
            (pair[0], pair[1])
        } else {
            (pair[1], pair[0])
        };
        let sign = if rng.gen::<bool>() { Sign::Pos } else { Sign::Neg };
        crossings.push(Crossing {
            sign,
            l_in: edge(left_slot),
            r_in: edge(right_slot),
            r_out: edge((left_slot + 1) % n),
            l_out: edge((right_slot + 1) % n),
        });
    }
    let d = Diagram { crossings };
    debug_assert_eq!(d.validate(), Ok(()));
    d
}
