//! Reduction to the unique minimal ω-equivalent transducer.
//!
//! Three passes, always in this order: shift guaranteed output back onto
//! incoming transitions, drop states the initial state cannot reach, then
//! merge states with identical local maps by partition refinement.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::machine::{Mode, StateId, Transducer, Transition};
use crate::words::Word;

/// Rewrites outputs so no state has pending guaranteed output.
///
/// Non-initial transitions become `λ(x,q)·v(π(x,q)) − v(q)`; transitions of the
/// initial state become `λ(x,q0)·v(π(x,q0))`.
pub fn remove_incomplete_response(t: &Transducer) -> Result<Transducer> {
    let v = t.guaranteed_output()?;
    let q0 = t.initial();
    let rows = t
        .states()
        .map(|q| {
            t.row(q)
                .map(|(_, tr)| {
                    let extended = tr.output.concat(&v[tr.target]);
                    let output = if Some(q) == q0 {
                        extended
                    } else {
                        extended.subtract(&v[q]).expect("guaranteed output prefixes every transition")
                    };
                    Ok(Some(Transition { output, target: tr.target }))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Transducer::from_parts(t.mode(), t.names().to_vec(), rows))
}

/// Keeps the states reachable from the initial state, in their original
/// relative order. Core machines are returned unchanged.
pub fn remove_inaccessible(t: &Transducer) -> Result<Transducer> {
    t.ensure_valid()?;
    let Some(q0) = t.initial() else {
        return Ok(t.clone());
    };
    let mut keep = t.bfs_order(q0);
    keep.sort_unstable();
    Ok(t.restrict(&keep))
}

/// Identifies states with equal local maps.
///
/// Sound only once incomplete responses are gone, when two states are
/// equivalent exactly if they emit the same words letter by letter and move
/// to equivalent states; callers that skip that pass get
/// [`Error::IncompleteResponse`]. The initial state is never merged.
pub fn merge_equivalent_states(t: &Transducer) -> Result<Transducer> {
    let v = t.guaranteed_output()?;
    if let Some(q) = t.states().find(|&q| Some(q) != t.initial() && !v[q].is_empty()) {
        return Err(Error::IncompleteResponse { state: q });
    }
    let block_of = refine(t);
    Ok(quotient(t, &block_of))
}

/// Full pipeline; the result is the minimal representative of the ω-class.
pub fn minimize(t: &Transducer) -> Result<Transducer> {
    let t = remove_incomplete_response(t)?;
    let t = remove_inaccessible(&t)?;
    merge_equivalent_states(&t)
}

/// Hopcroft-style refinement of the partition by one-step output rows.
/// Returns the block index of every state.
fn refine(t: &Transducer) -> Vec<usize> {
    let n = t.n() as usize;
    let count = t.state_count();
    let q0 = t.initial();

    let mut blocks: Vec<Vec<StateId>> = Vec::new();
    let mut block_of = vec![0; count];
    let mut by_row: HashMap<Vec<&Word>, usize> = HashMap::new();
    for q in t.states() {
        let b = if Some(q) == q0 {
            blocks.push(Vec::new());
            blocks.len() - 1
        } else {
            let key: Vec<&Word> = t.row(q).map(|(_, tr)| &tr.output).collect();
            *by_row.entry(key).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            })
        };
        blocks[b].push(q);
        block_of[q] = b;
    }

    // preimages[d][p] = digit readers q with π(d, q) = p
    let mut preimages = vec![vec![Vec::new(); count]; n];
    for q in t.states().filter(|&q| Some(q) != q0) {
        for (d, (_, tr)) in t.row(q).enumerate() {
            preimages[d][tr.target].push(q);
        }
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut work: Vec<(usize, usize)> = Vec::new();
    for b in 0..blocks.len() {
        for d in 0..n {
            pending.insert((b, d));
            work.push((b, d));
        }
    }

    while let Some((splitter, d)) = work.pop() {
        if !pending.remove(&(splitter, d)) {
            continue;
        }
        let mut hit: HashMap<usize, Vec<StateId>> = HashMap::new();
        for &p in &blocks[splitter] {
            for &q in &preimages[d][p] {
                hit.entry(block_of[q]).or_default().push(q);
            }
        }
        let mut touched: Vec<usize> = hit.keys().copied().collect();
        touched.sort_unstable();
        for b in touched {
            let inside = &hit[&b];
            if inside.len() == blocks[b].len() {
                continue;
            }
            let inside_set: HashSet<StateId> = inside.iter().copied().collect();
            let (stay, moved): (Vec<_>, Vec<_>) =
                blocks[b].iter().partition(|q| !inside_set.contains(q));
            let fresh = blocks.len();
            for &q in &moved {
                block_of[q] = fresh;
            }
            blocks[b] = stay;
            blocks.push(moved);
            for c in 0..n {
                if pending.contains(&(b, c)) {
                    pending.insert((fresh, c));
                    work.push((fresh, c));
                } else {
                    let smaller = if blocks[fresh].len() <= blocks[b].len() { fresh } else { b };
                    pending.insert((smaller, c));
                    work.push((smaller, c));
                }
            }
        }
    }
    block_of
}

/// Builds the quotient machine. Initial machines name each class by its
/// shortlex-least access word (the initial state is `q0`); core machines
/// keep the name of the lowest-numbered member.
fn quotient(t: &Transducer, block_of: &[usize]) -> Transducer {
    let blocks = block_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut rep = vec![usize::MAX; blocks];
    for q in t.states() {
        if rep[block_of[q]] == usize::MAX {
            rep[block_of[q]] = q;
        }
    }
    let rows: Vec<Vec<Option<Transition>>> = rep
        .iter()
        .map(|&q| {
            t.row(q)
                .map(|(_, tr)| Some(Transition { output: tr.output.clone(), target: block_of[tr.target] }))
                .collect()
        })
        .collect();
    let names: Vec<String> = rep.iter().map(|&q| t.name(q).to_string()).collect();
    let mode = match t.mode() {
        Mode::Initial { alphabet, initial } => Mode::Initial { alphabet, initial: block_of[initial] },
        m => m,
    };
    let merged = Transducer::from_parts(mode, names, rows);
    match merged.initial() {
        Some(q0) => name_by_access_words(&merged, q0),
        None => {
            let mut order: Vec<usize> = (0..blocks).collect();
            order.sort_by_key(|&b| rep[b]);
            merged.restrict(&order)
        }
    }
}

fn name_by_access_words(t: &Transducer, q0: StateId) -> Transducer {
    let mut access: Vec<Option<Word>> = vec![None; t.state_count()];
    access[q0] = Some(Word::empty());
    let order = t.bfs_order(q0);
    for &q in &order {
        let here = access[q].clone().expect("visited in bfs order");
        for (letter, tr) in t.row(q) {
            if access[tr.target].is_none() {
                let mut w = here.clone();
                w.push(letter);
                access[tr.target] = Some(w);
            }
        }
    }
    let mut out = t.restrict(&order);
    for (i, &q) in order.iter().enumerate() {
        let name = if q == q0 {
            "q0".to_string()
        } else {
            let w = access[q].as_ref().unwrap();
            w.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>().join("_")
        };
        out.set_name(i, name);
    }
    out
}
