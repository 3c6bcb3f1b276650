//! Synchronization levels, cores, and the bi-synchronizing test.
//!
//! The tracked states are those reached once the root has been written: all
//! states of a core machine, the states outside the pre-root region of an
//! initial one. Pre-root states are visited once, at the start of a point,
//! and do not take part in synchronization.

use std::collections::VecDeque;
use std::fmt;

use crate::algebra::{invert, root_core};
use crate::error::{Error, Result};
use crate::machine::{StateId, Transducer};
use crate::minimize::minimize;
use crate::words::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Synchronization {
    /// Every digit word of this length sends all tracked states to one state.
    Level(usize),
    /// Reading `word` from `pair` returns to the same two states, so no power
    /// of it synchronizes them.
    NotSynchronizing { pair: (StateId, StateId), word: Word },
}

impl Synchronization {
    pub fn level(&self) -> Option<usize> {
        match self {
            Synchronization::Level(m) => Some(*m),
            Synchronization::NotSynchronizing { .. } => None,
        }
    }

    pub fn is_synchronizing(&self) -> bool {
        self.level().is_some()
    }
}

impl fmt::Display for Synchronization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Synchronization::Level(m) => write!(f, "synchronizing at level {m}"),
            Synchronization::NotSynchronizing { pair, word } => {
                write!(f, "not synchronizing: states {} and {} cycle under `{word}`", pair.0, pair.1)
            }
        }
    }
}

/// States whose synchronization is tracked.
pub fn tracked_states(t: &Transducer) -> Vec<StateId> {
    let pre_root = t.pre_root_states();
    t.states().filter(|&q| !pre_root[q]).collect()
}

/// Unordered pairs of distinct tracked states and their digit successors.
struct PairGraph {
    pairs: Vec<(StateId, StateId)>,
    /// `succ[i][d]` is the successor pair index, `None` when it is diagonal.
    succ: Vec<Vec<Option<usize>>>,
}

impl PairGraph {
    fn new(t: &Transducer) -> Self {
        let tracked = tracked_states(t);
        let mut slot = vec![usize::MAX; t.state_count()];
        for (i, &q) in tracked.iter().enumerate() {
            slot[q] = i;
        }
        let k = tracked.len();
        let id = |a: usize, b: usize| -> usize {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            a * k + b - (a + 1) * (a + 2) / 2
        };
        let mut pairs = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for a in 0..k {
            for b in a + 1..k {
                pairs.push((tracked[a], tracked[b]));
            }
        }
        let succ = pairs
            .iter()
            .map(|&(p, q)| {
                (0..t.n())
                    .map(|d| {
                        let x = Letter::Digit(d);
                        let p2 = slot[t.step(p, x).expect("complete table").target];
                        let q2 = slot[t.step(q, x).expect("complete table").target];
                        (p2 != q2).then(|| id(p2, q2))
                    })
                    .collect()
            })
            .collect();
        PairGraph { pairs, succ }
    }

    /// Shortest nonempty word returning pair `i` to itself.
    fn shortest_return(&self, i: usize) -> Option<Vec<u32>> {
        let mut parent: Vec<Option<(usize, u32)>> = vec![None; self.pairs.len()];
        let mut queue = VecDeque::new();
        for (d, s) in self.succ[i].iter().enumerate() {
            if let Some(j) = *s {
                if j == i {
                    return Some(vec![d as u32]);
                }
                if parent[j].is_none() {
                    parent[j] = Some((i, d as u32));
                    queue.push_back(j);
                }
            }
        }
        while let Some(u) = queue.pop_front() {
            for (d, s) in self.succ[u].iter().enumerate() {
                let Some(j) = *s else { continue };
                if j == i {
                    let mut word = vec![d as u32];
                    let mut at = u;
                    while at != i {
                        let (p, x) = parent[at].unwrap();
                        word.push(x);
                        at = p;
                    }
                    word.reverse();
                    return Some(word);
                }
                if parent[j].is_none() && j != i {
                    parent[j] = Some((u, d as u32));
                    queue.push_back(j);
                }
            }
        }
        None
    }
}

/// The least `m` such that every digit word of length `m` synchronizes the
/// tracked states, found as one more than the longest path in the acyclic
/// graph of non-diagonal pairs. A single tracked state has level 0.
pub fn sync_level(t: &Transducer) -> Synchronization {
    let g = PairGraph::new(t);
    let count = g.pairs.len();
    if count == 0 {
        return Synchronization::Level(0);
    }
    // Kahn's algorithm on reversed edges, so pairs come out sinks first.
    let mut out_degree: Vec<usize> = g.succ.iter().map(|s| s.iter().flatten().count()).collect();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (i, s) in g.succ.iter().enumerate() {
        for &j in s.iter().flatten() {
            preds[j].push(i);
        }
    }
    let mut height = vec![0usize; count];
    let mut queue: VecDeque<usize> = (0..count).filter(|&i| out_degree[i] == 0).collect();
    let mut done = 0;
    while let Some(j) = queue.pop_front() {
        done += 1;
        for &i in &preds[j] {
            height[i] = height[i].max(height[j] + 1);
            out_degree[i] -= 1;
            if out_degree[i] == 0 {
                queue.push_back(i);
            }
        }
    }
    if done == count {
        return Synchronization::Level(1 + height.into_iter().max().unwrap_or(0));
    }
    // Some pair lies on a cycle; report the shortest one.
    let (i, word) = (0..count)
        .filter(|&i| out_degree[i] > 0)
        .filter_map(|i| g.shortest_return(i).map(|w| (i, w)))
        .min_by_key(|(i, w)| (w.len(), *i))
        .expect("a pair left after sorting lies on a cycle");
    Synchronization::NotSynchronizing { pair: g.pairs[i], word: Word::digits(word) }
}

/// The state reached from every tracked state by any digit word of the
/// synchronizing length, or `None` when not synchronizing.
pub fn sync_target(t: &Transducer) -> Option<StateId> {
    let level = sync_level(t).level()?;
    let start = *tracked_states(t).first()?;
    let (_, q) = t.run_word(start, &Word::digits(std::iter::repeat_n(0, level))).ok()?;
    Some(q)
}

/// The sub-machine on the image of the synchronizing map, as a core machine.
///
/// It is closed under digits and strongly connected.
pub fn core_of(t: &Transducer) -> Result<Transducer> {
    let q = sync_target(t).ok_or(Error::NotSynchronizing)?;
    let (core, _) = t.forward_closure(q)?;
    Ok(core)
}

/// A state of a closed strongly connected component reachable from `from`:
/// the first component completed by Tarjan's algorithm.
fn sink_component_state(t: &Transducer, from: StateId) -> StateId {
    let count = t.state_count();
    let mut index = vec![usize::MAX; count];
    let mut low = vec![0; count];
    let mut on_stack = vec![false; count];
    let mut stack = Vec::new();
    let mut next = 0;
    // (state, position in its row)
    let mut calls: Vec<(StateId, usize)> = vec![(from, 0)];
    index[from] = next;
    low[from] = next;
    next += 1;
    stack.push(from);
    on_stack[from] = true;
    while let Some(&mut (q, ref mut pos)) = calls.last_mut() {
        let row: Vec<StateId> = t.row(q).map(|(_, tr)| tr.target).collect();
        if *pos < row.len() {
            let p = row[*pos];
            *pos += 1;
            if index[p] == usize::MAX {
                index[p] = next;
                low[p] = next;
                next += 1;
                stack.push(p);
                on_stack[p] = true;
                calls.push((p, 0));
            } else if on_stack[p] {
                low[q] = low[q].min(index[p]);
            }
            continue;
        }
        calls.pop();
        if low[q] == index[q] {
            return q;
        }
        if let Some(&(parent, _)) = calls.last() {
            low[parent] = low[parent].min(low[q]);
        }
    }
    unreachable!("the root completes a component")
}

/// [`core_of`] for a machine already known to synchronize: the core is its
/// only closed strongly connected component.
pub(crate) fn core_of_synchronizing(t: &Transducer) -> Result<Transducer> {
    let start = *tracked_states(t).first().ok_or(Error::NotSynchronizing)?;
    let (core, _) = t.forward_closure(sink_component_state(t, start))?;
    Ok(core)
}

/// Whether the map and its inverse are both given by synchronizing
/// transducers, with the larger of the two levels.
///
/// A core machine is tested as the map on the one-root space that enters it
/// at its first state with an invertible local map. A map without a finite
/// inverse is reported as `false`.
pub fn is_bisynchronizing(t: &Transducer) -> Result<(bool, Option<usize>)> {
    if t.is_core() {
        for q in t.states() {
            let verdict = is_bisynchronizing(&root_core(t, q)?)?;
            if verdict.0 {
                return Ok(verdict);
            }
        }
        return Ok((false, None));
    }
    let Some(forward) = sync_level(&minimize(t)?).level() else {
        return Ok((false, None));
    };
    let inverse = match invert(t) {
        Ok(inv) => inv,
        Err(Error::NotInvertible(_)) => return Ok((false, None)),
        Err(e) => return Err(e),
    };
    match sync_level(&minimize(&inverse)?).level() {
        Some(backward) => Ok((true, Some(forward.max(backward)))),
        None => Ok((false, None)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::identity_transducer;
    use crate::fixtures;
    use crate::words::Alphabet;

    #[test]
    fn levels_of_fixtures() {
        assert_eq!(sync_level(&fixtures::two_root_ternary()), Synchronization::Level(2));
        assert_eq!(sync_level(&fixtures::unbalanced_ternary()), Synchronization::Level(2));
        assert_eq!(sync_level(&fixtures::synchronous_ternary()), Synchronization::Level(1));
        assert_eq!(sync_level(&fixtures::binary_involution()), Synchronization::Level(3));
        let id = identity_transducer(Alphabet::new(2, 1).unwrap());
        assert_eq!(sync_level(&id), Synchronization::Level(0));
    }

    #[test]
    fn witness_cycles() {
        // two states swapped by every digit never merge
        let mut t = Transducer::new_core(2, 2);
        for q in 0..2 {
            for d in 0..2 {
                t.set(q, Letter::Digit(d), Word::digits([d]), 1 - q).unwrap();
            }
        }
        let s = sync_level(&t);
        assert_eq!(s, Synchronization::NotSynchronizing { pair: (0, 1), word: Word::digits([0]) });
        assert!(core_of(&t).is_err());
    }

    #[test]
    fn core_of_two_root_ternary() {
        let f1 = fixtures::two_root_ternary();
        let core = core_of(&f1).unwrap();
        assert!(core.is_core());
        let mut names = core.names().to_vec();
        names.sort();
        assert_eq!(names, ["q2", "q3", "q4"]);
    }

    #[test]
    fn core_of_core_is_itself() {
        let f2 = fixtures::unbalanced_ternary();
        let core = core_of(&f2).unwrap();
        assert_eq!(core.canonical_form().unwrap(), f2.canonical_form().unwrap());
    }

    #[test]
    fn core_of_identity_is_echo() {
        let core = core_of(&identity_transducer(Alphabet::new(3, 2).unwrap())).unwrap();
        assert_eq!(core.state_count(), 1);
        assert!(core.row(0).all(|(x, tr)| tr.output == Word::letter(x)));
    }

    #[test]
    fn bisynchronizing_fixtures() {
        assert_eq!(is_bisynchronizing(&fixtures::two_root_ternary()).unwrap(), (true, Some(2)));
        assert_eq!(is_bisynchronizing(&fixtures::unbalanced_ternary()).unwrap(), (true, Some(2)));
        assert_eq!(is_bisynchronizing(&fixtures::sync_not_bisync()).unwrap(), (false, None));
    }
}
