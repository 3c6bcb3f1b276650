//! Membership in the Higman–Thompson group, arithmetic of outer classes
//! through cores, and subgroup flags.

use std::collections::HashSet;
use std::fmt;

use crate::algebra::{identity_core, product, Permutation};
use crate::error::{Error, Result};
use crate::machine::{StateId, Transducer};
use crate::minimize::minimize;
use crate::synchro::{core_of, core_of_synchronizing, is_bisynchronizing, sync_level};
use crate::words::{Letter, Word};

/// The minimal core of the minimal form of `t`, with states renamed
/// canonically. Two maps lie in the same outer class exactly when these
/// agree.
pub fn outer_core(t: &Transducer) -> Result<Transducer> {
    let core = core_of(&minimize(t)?)?;
    minimize(&core)?.canonical_machine()
}

fn is_identity_core(core: &Transducer) -> bool {
    core.state_count() == 1 && core.row(0).all(|(x, tr)| tr.target == 0 && tr.output == Word::letter(x))
}

/// Whether `t` is a prefix-code map: bi-synchronizing with an identity core.
pub fn is_in_gnr(t: &Transducer) -> Result<bool> {
    if !is_bisynchronizing(t)?.0 {
        return Ok(false);
    }
    Ok(is_identity_core(&outer_core(t)?))
}

/// Whether the two maps have strongly isomorphic cores.
pub fn outer_class_equal(a: &Transducer, b: &Transducer) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(outer_core(a)?.canonical_form()? == outer_core(b)?.canonical_form()?)
}

/// The group operation on cores: the core of the minimal pair product,
/// acting as `a` then `b`. Both inputs must synchronize.
pub fn outer_product(a: &Transducer, b: &Transducer) -> Result<Transducer> {
    if !a.is_core() || !b.is_core() {
        return Err(Error::Mode { expected: "core transducers" });
    }
    if !sync_level(a).is_synchronizing() || !sync_level(b).is_synchronizing() {
        return Err(Error::NotSynchronizing);
    }
    outer_product_of_synchronizing(a, b)
}

/// Products of synchronizing machines synchronize, so the core is found as
/// the closed component without rebuilding the pair graph.
fn outer_product_of_synchronizing(a: &Transducer, b: &Transducer) -> Result<Transducer> {
    let core = core_of_synchronizing(&minimize(&product(a, b)?)?)?;
    minimize(&core)?.canonical_machine()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    /// The powers repeat without reaching the identity.
    Infinite,
    /// The cap was reached first.
    Unknown,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
            Order::Unknown => f.write_str("unknown"),
        }
    }
}

pub const DEFAULT_ORDER_CAP: usize = 64;

/// Order of the outer class of `a` among the first `cap` powers.
pub fn order_in_on(a: &Transducer, cap: usize) -> Result<Order> {
    let base = outer_core(a)?;
    let identity = identity_core(a.n()).canonical_form()?;
    let mut seen = HashSet::new();
    let mut power = base.clone();
    for k in 1..=cap {
        let form = power.canonical_form()?;
        if form == identity {
            return Ok(Order::Finite(k));
        }
        if !seen.insert(form) {
            return Ok(Order::Infinite);
        }
        if k < cap {
            power = outer_product_of_synchronizing(&power, &base)?;
        }
    }
    Ok(Order::Unknown)
}

/// A closed walk in a transducer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    /// Visited states; the walk returns to the first.
    pub states: Vec<StateId>,
    pub input: Word,
    pub output: Word,
}

impl Cycle {
    pub fn is_balanced(&self) -> bool {
        self.input.len() == self.output.len()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.states.iter().map(|q| q.to_string()).collect();
        write!(f, "{} reads `{}` writes `{}`", s.join(" -> "), self.input, self.output)
    }
}

fn digit_edges(t: &Transducer) -> Vec<(StateId, Letter, StateId, i64)> {
    t.states()
        .filter(|&q| Some(q) != t.initial())
        .flat_map(|q| t.row(q).map(move |(x, tr)| (q, x, tr.target, tr.output.len() as i64 - 1)))
        .collect()
}

fn cycle_through(t: &Transducer, edges: &[(StateId, Letter)]) -> Cycle {
    let mut states = Vec::new();
    let mut input = Word::empty();
    let mut output = Word::empty();
    for &(q, x) in edges {
        states.push(q);
        input.push(x);
        output = output.concat(&t.step(q, x).unwrap().output);
    }
    Cycle { states, input, output }
}

/// Bellman–Ford search for a cycle of negative total weight `sign·(|out| − 1)`.
fn negative_cycle(t: &Transducer, sign: i64) -> Option<Cycle> {
    let edges = digit_edges(t);
    let n = t.state_count();
    let mut dist = vec![0i64; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut last = None;
    for _ in 0..n {
        last = None;
        for (e, &(p, _, q, w)) in edges.iter().enumerate() {
            if dist[p] + sign * w < dist[q] {
                dist[q] = dist[p] + sign * w;
                pred[q] = Some(e);
                last = Some(q);
            }
        }
        last?;
    }
    let mut q = last?;
    for _ in 0..n {
        q = edges[pred[q].unwrap()].0;
    }
    let start = q;
    let mut walk = Vec::new();
    loop {
        let (p, x, _, _) = edges[pred[q].unwrap()];
        walk.push((p, x));
        q = p;
        if q == start {
            break;
        }
    }
    walk.reverse();
    Some(cycle_through(t, &walk))
}

/// A simple cycle among digit-reading states whose output length differs
/// from its input length, if any.
pub fn unbalanced_cycle(t: &Transducer) -> Option<Cycle> {
    negative_cycle(t, 1).or_else(|| negative_cycle(t, -1))
}

/// Simple cycles among digit-reading states, one per choice of letters,
/// each listed once starting from its least state. Stops after `limit`.
pub fn simple_cycles(t: &Transducer, limit: usize) -> Vec<Cycle> {
    fn go(
        t: &Transducer,
        start: StateId,
        q: StateId,
        on_path: &mut Vec<bool>,
        path: &mut Vec<(StateId, Letter)>,
        out: &mut Vec<Cycle>,
        limit: usize,
    ) {
        for (x, tr) in t.row(q) {
            if out.len() >= limit {
                return;
            }
            path.push((q, x));
            if tr.target == start {
                out.push(cycle_through(t, path));
            } else if tr.target > start && !on_path[tr.target] && Some(tr.target) != t.initial() {
                on_path[tr.target] = true;
                go(t, start, tr.target, on_path, path, out, limit);
                on_path[tr.target] = false;
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; t.state_count()];
    for start in t.states().filter(|&q| Some(q) != t.initial()) {
        on_path[start] = true;
        go(t, start, start, &mut on_path, &mut Vec::new(), &mut out, limit);
        on_path[start] = false;
    }
    out
}

/// Subgroup memberships of a bi-synchronizing map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupFlags {
    /// The core is the identity.
    pub in_gnr: bool,
    /// The core is synchronous: every core transition writes one letter.
    pub in_pn: bool,
    /// The core is cycle-balanced: every simple cycle of the core writes
    /// exactly as many letters as it reads. This is the criterion used for
    /// the bi-Lipschitz subgroup.
    pub in_ln: bool,
    pub in_on: bool,
    /// Synchronization level of the minimal machine.
    pub sync_level: usize,
    pub core_states: usize,
}

impl fmt::Display for SubgroupFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "y" } else { "n" };
        write!(
            f,
            "G:{} P:{} L:{} sync-level:{} core-states:{}",
            yn(self.in_gnr),
            yn(self.in_pn),
            yn(self.in_ln),
            self.sync_level,
            self.core_states
        )
    }
}

pub fn classify_subgroup(t: &Transducer) -> Result<SubgroupFlags> {
    if !is_bisynchronizing(t)?.0 {
        return Err(Error::NotBisynchronizing);
    }
    let level = sync_level(&minimize(t)?).level().ok_or(Error::NotSynchronizing)?;
    let core = outer_core(t)?;
    let in_gnr = is_identity_core(&core);
    let in_pn = core.states().all(|q| core.row(q).all(|(_, tr)| tr.output.len() == 1));
    let in_ln = unbalanced_cycle(&core).is_none();
    Ok(SubgroupFlags { in_gnr, in_pn, in_ln, in_on: true, sync_level: level, core_states: core.state_count() })
}

/// How a digit-reading state acts on single letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationState {
    /// The map on digits when every output is one digit and they are distinct.
    pub permutation: Option<Permutation>,
    /// Set when additionally every transition loops back, so the state acts
    /// as a digit twist.
    pub twist: bool,
}

pub fn check_permutation_state(t: &Transducer, q: StateId) -> Result<PermutationState> {
    if t.initial() == Some(q) {
        return Err(Error::Mode { expected: "a digit-reading state" });
    }
    let images: Option<Vec<u32>> = t
        .row(q)
        .map(|(_, tr)| match tr.output.letters() {
            [Letter::Digit(d)] => Some(*d),
            _ => None,
        })
        .collect();
    let permutation = images.and_then(|i| Permutation::new(i).ok());
    let twist = permutation.is_some() && t.row(q).all(|(_, tr)| tr.target == q);
    Ok(PermutationState { permutation, twist })
}
