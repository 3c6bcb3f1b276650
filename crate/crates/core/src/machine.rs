//! The transducer type: validity, evaluation, guaranteed outputs, the root
//! function and canonical forms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result, Violation, ViolationKind};
use crate::words::{Alphabet, EventuallyPeriodicPoint, Letter, Word};

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transition {
    pub output: Word,
    pub target: StateId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Acts on the space with roots: the initial state reads root letters,
    /// every other state reads digits.
    Initial { alphabet: Alphabet, initial: StateId },
    /// Non-initial machine on digit sequences; every state reads digits.
    Core { n: u32 },
}

/// A finite asynchronous transducer.
///
/// Rows may be incomplete while a machine is being assembled or parsed;
/// [`Transducer::validate`] reports every broken rule and all algorithms
/// check validity on entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transducer {
    mode: Mode,
    names: Vec<String>,
    rows: Vec<Vec<Option<Transition>>>,
}

impl Transducer {
    pub fn new_initial(alphabet: Alphabet, states: usize, initial: StateId) -> Self {
        assert!(initial < states, "initial state out of range");
        let mode = Mode::Initial { alphabet, initial };
        let rows = (0..states)
            .map(|q| {
                let width = if q == initial { alphabet.r() } else { alphabet.n() };
                vec![None; width as usize]
            })
            .collect();
        Transducer { mode, names: default_names(states), rows }
    }

    pub fn new_core(n: u32, states: usize) -> Self {
        assert!(n >= 2, "need at least two digits");
        Transducer {
            mode: Mode::Core { n },
            names: default_names(states),
            rows: vec![vec![None; n as usize]; states],
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.rows.len());
        self.names = names;
        self
    }

    pub fn set_name(&mut self, q: StateId, name: impl Into<String>) {
        self.names[q] = name.into();
    }

    /// Sets the transition of `q` on `letter`.
    pub fn set(&mut self, q: StateId, letter: Letter, output: Word, target: StateId) -> Result<()> {
        let idx = self.letter_index(q, letter).ok_or_else(|| Error::Inadmissible {
            state: q,
            word: Word::letter(letter),
        })?;
        self.rows[q][idx] = Some(Transition { output, target });
        Ok(())
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_core(&self) -> bool {
        matches!(self.mode, Mode::Core { .. })
    }

    pub fn n(&self) -> u32 {
        match self.mode {
            Mode::Initial { alphabet, .. } => alphabet.n(),
            Mode::Core { n } => n,
        }
    }

    pub fn alphabet(&self) -> Option<Alphabet> {
        match self.mode {
            Mode::Initial { alphabet, .. } => Some(alphabet),
            Mode::Core { .. } => None,
        }
    }

    pub fn initial(&self) -> Option<StateId> {
        match self.mode {
            Mode::Initial { initial, .. } => Some(initial),
            Mode::Core { .. } => None,
        }
    }

    pub(crate) fn require_initial(&self) -> Result<(Alphabet, StateId)> {
        match self.mode {
            Mode::Initial { alphabet, initial } => Ok((alphabet, initial)),
            Mode::Core { .. } => Err(Error::Mode { expected: "an initial transducer" }),
        }
    }

    pub fn state_count(&self) -> usize {
        self.rows.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.rows.len()
    }

    pub fn name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|s| s == name)
    }

    /// The input letters state `q` reads, in canonical order.
    pub fn letters_of(&self, q: StateId) -> Vec<Letter> {
        let width = self.rows[q].len() as u32;
        if self.initial() == Some(q) {
            (0..width).map(Letter::Root).collect()
        } else {
            (0..width).map(Letter::Digit).collect()
        }
    }

    pub fn letter_index(&self, q: StateId, letter: Letter) -> Option<usize> {
        let root_reader = self.initial() == Some(q);
        match letter {
            Letter::Root(k) if root_reader => Some(k as usize),
            Letter::Digit(d) if !root_reader => Some(d as usize),
            _ => None,
        }
        .filter(|&i| q < self.rows.len() && i < self.rows[q].len())
    }

    pub fn transition(&self, q: StateId, letter: Letter) -> Option<&Transition> {
        self.letter_index(q, letter).and_then(|i| self.rows[q][i].as_ref())
    }

    /// All transitions of `q` as (letter, transition) pairs. Panics on a hole,
    /// so only call on validated machines.
    pub fn row(&self, q: StateId) -> impl Iterator<Item = (Letter, &Transition)> + '_ {
        self.letters_of(q)
            .into_iter()
            .zip(self.rows[q].iter().map(|t| t.as_ref().expect("incomplete row")))
    }

    pub(crate) fn from_parts(mode: Mode, names: Vec<String>, rows: Vec<Vec<Option<Transition>>>) -> Self {
        Transducer { mode, names, rows }
    }

    pub fn max_output_len(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .flatten()
            .map(|t| t.output.len())
            .max()
            .unwrap_or(0)
    }

    /// The set of states reachable from `q0` by ε-output paths; these are the
    /// states that have not yet written a root letter.
    pub fn pre_root_states(&self) -> Vec<bool> {
        let mut region = vec![false; self.state_count()];
        let Some(q0) = self.initial() else { return region };
        let mut stack = vec![q0];
        region[q0] = true;
        while let Some(q) = stack.pop() {
            for t in self.rows[q].iter().flatten() {
                if t.output.is_empty() && t.target < region.len() && !region[t.target] {
                    region[t.target] = true;
                    stack.push(t.target);
                }
            }
        }
        region
    }

    /// Checks every non-degeneracy rule; an empty list means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let count = self.state_count();
        let v = |kind, state, letter: Option<Letter>, detail: String| Violation {
            kind,
            state: Some(state),
            letter,
            detail,
        };
        let mut structurally_ok = true;
        for q in self.states() {
            for (letter, t) in self.letters_of(q).into_iter().zip(&self.rows[q]) {
                match t {
                    None => {
                        structurally_ok = false;
                        out.push(v(ViolationKind::IncompleteTable, q, Some(letter), String::new()));
                    }
                    Some(t) if t.target >= count => {
                        structurally_ok = false;
                        out.push(v(
                            ViolationKind::TargetOutOfRange,
                            q,
                            Some(letter),
                            format!("target {}", t.target),
                        ));
                    }
                    Some(t) => {
                        let bad = t.output.letters().iter().find(|l| match (l, self.mode) {
                            (Letter::Digit(d), _) => *d >= self.n(),
                            (Letter::Root(k), Mode::Initial { alphabet, .. }) => *k >= alphabet.r(),
                            (Letter::Root(_), Mode::Core { .. }) => true,
                        });
                        if let Some(l) = bad {
                            out.push(v(
                                ViolationKind::OutputOutOfAlphabet,
                                q,
                                Some(letter),
                                format!("letter {l}"),
                            ));
                        }
                    }
                }
            }
        }
        if !structurally_ok {
            return out;
        }

        if let Some(q0) = self.initial() {
            let region = self.pre_root_states();
            for q in self.states() {
                for (letter, t) in self.row(q) {
                    if t.target == q0 {
                        out.push(v(ViolationKind::InitialHasIncoming, q, Some(letter), String::new()));
                    } else if region[t.target] {
                        if !region[q] || !t.output.is_empty() {
                            out.push(v(ViolationKind::EntersRootRegion, q, Some(letter), String::new()));
                        }
                    } else if region[q] {
                        if !t.output.is_rooted() {
                            out.push(v(
                                ViolationKind::MissingRootOutput,
                                q,
                                Some(letter),
                                format!("output `{}`", t.output),
                            ));
                        }
                    } else if !t.output.is_digit_word() {
                        out.push(v(
                            ViolationKind::StrayRootOutput,
                            q,
                            Some(letter),
                            format!("output `{}`", t.output),
                        ));
                    }
                }
            }
        }

        if let Some(q) = self.epsilon_cycle_state() {
            out.push(Violation {
                kind: ViolationKind::EpsilonCycle,
                state: Some(q),
                letter: None,
                detail: String::new(),
            });
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let vs = self.validate();
        if vs.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(vs))
        }
    }

    /// Some state lying on a cycle of ε-output transitions, if any.
    fn epsilon_cycle_state(&self) -> Option<StateId> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut color = vec![0u8; self.state_count()];
        for start in self.states() {
            if color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (q, ref mut i)) = stack.last_mut() {
                let row = &self.rows[q];
                if *i < row.len() {
                    let t = row[*i].as_ref();
                    *i += 1;
                    if let Some(t) = t.filter(|t| t.output.is_empty()) {
                        match color[t.target] {
                            0 => {
                                color[t.target] = 1;
                                stack.push((t.target, 0));
                            }
                            1 => return Some(t.target),
                            _ => {}
                        }
                    }
                } else {
                    color[q] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// One step; `None` when the letter is not read by `q` or the row has a hole.
    pub fn step(&self, q: StateId, letter: Letter) -> Option<&Transition> {
        self.transition(q, letter)
    }

    /// Extended output and transition functions on a finite word.
    pub fn run_word(&self, q: StateId, word: &Word) -> Result<(Word, StateId)> {
        let mut out = Word::empty();
        let mut state = q;
        for &letter in word.letters() {
            let t = self.step(state, letter).ok_or_else(|| Error::Inadmissible {
                state: q,
                word: word.clone(),
            })?;
            out = out.concat(&t.output);
            state = t.target;
        }
        Ok((out, state))
    }

    /// Image of an eventually periodic point read from the initial state.
    pub fn eval_point(&self, x: &EventuallyPeriodicPoint) -> Result<EventuallyPeriodicPoint> {
        let (_, q0) = self.require_initial()?;
        if !x.preperiod().is_rooted() {
            return Err(Error::Inadmissible { state: q0, word: x.preperiod().clone() });
        }
        self.eval_point_from(q0, x)
    }

    /// Image of an eventually periodic point read from state `q`.
    pub fn eval_point_from(&self, q: StateId, x: &EventuallyPeriodicPoint) -> Result<EventuallyPeriodicPoint> {
        self.ensure_valid()?;
        let (mut pre, mut state) = self.run_word(q, x.preperiod())?;
        let period = x.period();
        let mut seen: HashMap<StateId, usize> = HashMap::new();
        let mut outputs: Vec<Word> = Vec::new();
        loop {
            if let Some(&first) = seen.get(&state) {
                for w in &outputs[..first] {
                    pre = pre.concat(w);
                }
                let cycle = outputs[first..].iter().fold(Word::empty(), |acc, w| acc.concat(w));
                assert!(!cycle.is_empty(), "valid transducers have no ε-output cycles");
                return Ok(EventuallyPeriodicPoint::new(pre, cycle)?);
            }
            seen.insert(state, outputs.len());
            let (w, next) = self.run_word(state, period)?;
            outputs.push(w);
            state = next;
        }
    }

    /// For every state, the longest word that prefixes the output of every
    /// infinite input read from that state.
    ///
    /// Computed as the least fixpoint of
    /// `v(q) = lcp over letters x of λ(x,q) · v(π(x,q))` from `v ≡ ε`. The
    /// iteration is capped at `|Q| · (1 + max output length)` passes; a state
    /// whose word keeps growing past that maps onto a single point.
    pub fn guaranteed_output(&self) -> Result<Vec<Word>> {
        self.ensure_valid()?;
        let cap = self.state_count() * (1 + self.max_output_len());
        let mut v = vec![Word::empty(); self.state_count()];
        for _ in 0..=cap {
            let next: Vec<Word> = self
                .states()
                .map(|q| {
                    let mut acc: Option<Word> = None;
                    for (_, t) in self.row(q) {
                        let w = t.output.concat(&v[t.target]);
                        acc = Some(match acc {
                            None => w,
                            Some(a) => a.common_prefix(&w),
                        });
                    }
                    acc.unwrap_or_default()
                })
                .collect();
            if next == v {
                return Ok(v);
            }
            v = next;
        }
        let state = self
            .states()
            .max_by_key(|&q| v[q].len())
            .unwrap_or(0);
        Err(Error::GuaranteedOutputUnbounded { state })
    }

    /// The root function: the longest common prefix of the images of all
    /// points starting with `nu`.
    ///
    /// By convention the empty word maps to the empty word.
    pub fn theta(&self, nu: &Word) -> Result<Word> {
        let (_, q0) = self.require_initial()?;
        if nu.is_empty() {
            return Ok(Word::empty());
        }
        let v = self.guaranteed_output()?;
        let (out, q) = self.run_word(q0, nu)?;
        Ok(out.concat(&v[q]))
    }

    /// Renumbers states: `order[i]` becomes state `i`. States left out of
    /// `order` are dropped, so every kept transition must stay inside it.
    pub fn restrict(&self, order: &[StateId]) -> Transducer {
        self.restrict_with_mode(order, None)
    }

    /// Like [`Transducer::restrict`] but the result is a core machine, so the
    /// initial state may be dropped.
    pub fn restrict_to_core(&self, order: &[StateId]) -> Transducer {
        self.restrict_with_mode(order, Some(Mode::Core { n: self.n() }))
    }

    fn restrict_with_mode(&self, order: &[StateId], mode: Option<Mode>) -> Transducer {
        let mut index = vec![usize::MAX; self.state_count()];
        for (i, &q) in order.iter().enumerate() {
            index[q] = i;
        }
        let rows = order
            .iter()
            .map(|&q| {
                self.rows[q]
                    .iter()
                    .map(|t| {
                        t.as_ref().map(|t| {
                            assert!(index[t.target] != usize::MAX, "restriction is not closed");
                            Transition { output: t.output.clone(), target: index[t.target] }
                        })
                    })
                    .collect()
            })
            .collect();
        let names = order.iter().map(|&q| self.names[q].clone()).collect();
        let mode = match mode.unwrap_or(self.mode) {
            Mode::Initial { alphabet, initial } => {
                assert!(index[initial] != usize::MAX, "restriction drops the initial state");
                Mode::Initial { alphabet, initial: index[initial] }
            }
            m => m,
        };
        Transducer { mode, names, rows }
    }

    /// States reachable from `from` (inclusive) in breadth-first order with
    /// letters taken in canonical order.
    pub fn bfs_order(&self, from: StateId) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![from];
        seen[from] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for t in self.rows[q].iter().flatten() {
                if !seen[t.target] {
                    seen[t.target] = true;
                    order.push(t.target);
                }
            }
        }
        order
    }

    /// The sub-machine read from `q` as a core-mode transducer together with
    /// the index of `q` in it.
    pub fn forward_closure(&self, q: StateId) -> Result<(Transducer, StateId)> {
        if self.initial() == Some(q) {
            return Err(Error::Mode { expected: "a digit-reading state" });
        }
        let order = self.bfs_order(q);
        Ok((self.restrict_to_core(&order), 0))
    }

    /// The local action at `nu` after incomplete responses are removed: a
    /// digit machine `h_nu` with `(nu x)h = theta(nu) (x h_nu)`.
    ///
    /// Fails when `nu` is empty or still inside the pre-root region, where the
    /// local action does not map digit sequences to digit sequences.
    pub fn local_action(&self, nu: &Word) -> Result<LocalAction> {
        let (_, q0) = self.require_initial()?;
        let shifted = crate::minimize::remove_incomplete_response(self)?;
        let (_, q) = shifted.run_word(q0, nu)?;
        if shifted.pre_root_states()[q] {
            return Err(Error::Inadmissible { state: q0, word: nu.clone() });
        }
        let (machine, start) = shifted.forward_closure(q)?;
        Ok(LocalAction { machine, start })
    }

    /// State-renaming invariant serialization. See [`CanonicalForm`].
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.canonical_machine().map(|t| CanonicalForm(crate::io::serialize(&t)))
    }

    /// The machine whose serialization is the canonical form: states renamed
    /// `s0, s1, ...` in the canonical breadth-first order.
    pub fn canonical_machine(&self) -> Result<Transducer> {
        self.ensure_valid()?;
        match self.mode {
            Mode::Initial { initial, .. } => {
                let order = self.bfs_order(initial);
                if order.len() != self.state_count() {
                    return Err(Error::Unreachable);
                }
                Ok(self.canonical_relabel(&order))
            }
            Mode::Core { .. } => {
                if !self.is_strongly_connected() {
                    return Err(Error::DisconnectedCore);
                }
                Ok(self.canonical_relabel(&self.least_core_order()))
            }
        }
    }

    /// Every state reaches every other.
    pub fn is_strongly_connected(&self) -> bool {
        let count = self.state_count();
        if count == 0 {
            return false;
        }
        if self.bfs_order(0).len() != count {
            return false;
        }
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); count];
        for q in self.states() {
            for t in self.rows[q].iter().flatten() {
                preds[t.target].push(q);
            }
        }
        let mut seen = vec![false; count];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// The breadth-first order, over all roots, whose relabelled
    /// serialization is least. Roots are compared one state's block of
    /// transition lines at a time and dropped as soon as they lose; blocks
    /// end in newlines, so this agrees with comparing whole documents.
    fn least_core_order(&self) -> Vec<StateId> {
        struct Walk {
            order: Vec<StateId>,
            index: HashMap<StateId, usize>,
        }
        let mut walks: Vec<Walk> =
            self.states().map(|r| Walk { order: vec![r], index: HashMap::from([(r, 0)]) }).collect();
        for i in 0..self.state_count() {
            let source = format!("s{i}");
            let blocks: Vec<String> = walks
                .iter_mut()
                .map(|walk| {
                    let q = walk.order[i];
                    let mut block = String::new();
                    for (x, tr) in self.row(q) {
                        let next = walk.order.len();
                        let t = *walk.index.entry(tr.target).or_insert_with(|| {
                            walk.order.push(tr.target);
                            next
                        });
                        block.push_str(&crate::io::transition_line(&source, x, &format!("s{t}"), &tr.output));
                    }
                    block
                })
                .collect();
            let least = blocks.iter().min().expect("at least one root").clone();
            let mut keep = blocks.iter().map(|b| *b == least);
            walks.retain(|_| keep.next().unwrap());
        }
        walks.swap_remove(0).order
    }

    fn canonical_relabel(&self, order: &[StateId]) -> Transducer {
        let mut t = self.restrict(order);
        t.names = default_names_with(order.len(), "s");
        t
    }

    /// Applies a permutation to state indices: state `q` moves to `perm[q]`.
    pub fn permute_states(&self, perm: &[StateId]) -> Transducer {
        let mut order = vec![0; perm.len()];
        for (q, &p) in perm.iter().enumerate() {
            order[p] = q;
        }
        self.restrict(&order)
    }
}

impl fmt::Display for Transducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::serialize(self))
    }
}

fn default_names(count: usize) -> Vec<String> {
    default_names_with(count, "q")
}

fn default_names_with(count: usize, prefix: &str) -> Vec<String> {
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

/// A state-renaming invariant serialization of a transducer.
///
/// Initial machines are numbered in breadth-first order from the initial
/// state, reading letters `.0 < .1 < ... < 0 < 1 < ...`. Core machines take
/// the lexicographically least such serialization over all choices of root
/// state. Equal forms mean strongly isomorphic machines.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A local map of a homeomorphism, as a digit machine with a start state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAction {
    pub machine: Transducer,
    pub start: StateId,
}

impl LocalAction {
    pub fn eval_point(&self, x: &EventuallyPeriodicPoint) -> Result<EventuallyPeriodicPoint> {
        self.machine.eval_point_from(self.start, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn two_root_ternary_is_valid() {
        assert!(fixtures::two_root_ternary().validate().is_empty());
    }

    #[test]
    fn epsilon_loop_is_reported() {
        let mut t = Transducer::new_core(2, 1);
        t.set(0, Letter::Digit(0), Word::empty(), 0).unwrap();
        t.set(0, Letter::Digit(1), w("1"), 0).unwrap();
        let vs = t.validate();
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].kind, ViolationKind::EpsilonCycle);
        assert_eq!(vs[0].kind.describe(), "ε-output cycle");
    }

    #[test]
    fn missing_transition_is_reported() {
        let mut t = Transducer::new_core(2, 1);
        t.set(0, Letter::Digit(0), w("0"), 0).unwrap();
        let vs = t.validate();
        assert_eq!(vs[0].kind, ViolationKind::IncompleteTable);
        assert_eq!(vs[0].state, Some(0));
        assert_eq!(vs[0].letter, Some(Letter::Digit(1)));
    }

    #[test]
    fn root_region_rules() {
        let a = Alphabet::new(2, 1).unwrap();
        // q0 -> q1 with ε, q1 leaves for q2 writing digits only
        let mut t = Transducer::new_initial(a, 3, 0);
        t.set(0, Letter::Root(0), Word::empty(), 1).unwrap();
        t.set(1, Letter::Digit(0), w("0"), 2).unwrap();
        t.set(1, Letter::Digit(1), w(".0 1"), 2).unwrap();
        t.set(2, Letter::Digit(0), w("0"), 2).unwrap();
        t.set(2, Letter::Digit(1), w("1"), 2).unwrap();
        let kinds: Vec<_> = t.validate().into_iter().map(|v| v.kind).collect();
        assert_eq!(kinds, [ViolationKind::MissingRootOutput]);

        // a pre-root state looping on itself with output
        let mut t = Transducer::new_initial(a, 2, 0);
        t.set(0, Letter::Root(0), Word::empty(), 1).unwrap();
        t.set(1, Letter::Digit(0), w("0"), 1).unwrap();
        t.set(1, Letter::Digit(1), w("1"), 1).unwrap();
        let kinds: Vec<_> = t.validate().into_iter().map(|v| v.kind).collect();
        assert!(kinds.contains(&ViolationKind::EntersRootRegion));

        // root emitted twice
        let mut t = Transducer::new_initial(a, 2, 0);
        t.set(0, Letter::Root(0), w(".0"), 1).unwrap();
        t.set(1, Letter::Digit(0), w(".0"), 1).unwrap();
        t.set(1, Letter::Digit(1), w("1"), 1).unwrap();
        let kinds: Vec<_> = t.validate().into_iter().map(|v| v.kind).collect();
        assert!(kinds.contains(&ViolationKind::StrayRootOutput));

        // transition back into the initial state
        let mut t = Transducer::new_initial(a, 2, 0);
        t.set(0, Letter::Root(0), w(".0"), 1).unwrap();
        t.set(1, Letter::Digit(0), w("0"), 0).unwrap();
        t.set(1, Letter::Digit(1), w("1"), 1).unwrap();
        let kinds: Vec<_> = t.validate().into_iter().map(|v| v.kind).collect();
        assert!(kinds.contains(&ViolationKind::InitialHasIncoming));
    }

    #[test]
    fn run_word_examples() {
        let f1 = fixtures::two_root_ternary();
        let q0 = f1.initial().unwrap();
        let (out, end) = f1.run_word(q0, &w(".0 0")).unwrap();
        assert_eq!(out, w(".0"));
        assert_eq!(f1.name(end), "q3");
        assert_eq!(f1.run_word(2, &Word::empty()).unwrap(), (Word::empty(), 2));

        let f4 = fixtures::synchronous_ternary();
        let (out, end) = f4.run_word(0, &w("2 2")).unwrap();
        assert_eq!(out, w("0 0"));
        assert_eq!(f4.name(end), "b");
    }

    #[test]
    fn run_word_rejects_digits_at_initial() {
        let f1 = fixtures::two_root_ternary();
        assert!(matches!(f1.run_word(0, &w("0")), Err(Error::Inadmissible { .. })));
        assert!(matches!(f1.run_word(1, &w(".0")), Err(Error::Inadmissible { .. })));
    }

    #[test]
    fn eval_two_root_ternary() {
        let f1 = fixtures::two_root_ternary();
        let x: EventuallyPeriodicPoint = ".0 | 0".parse().unwrap();
        let y = f1.eval_point(&x).unwrap();
        assert_eq!(y, ".0 0 | 1".parse().unwrap());
    }

    #[test]
    fn guaranteed_output_examples() {
        let f5 = fixtures::binary_involution();
        let v = f5.guaranteed_output().unwrap();
        assert!(v.iter().all(Word::is_empty));

        // loop state with outputs 00 and 01
        let mut t = Transducer::new_core(2, 1);
        t.set(0, Letter::Digit(0), w("0 0"), 0).unwrap();
        t.set(0, Letter::Digit(1), w("0 1"), 0).unwrap();
        assert_eq!(t.guaranteed_output().unwrap(), vec![w("0")]);
    }

    #[test]
    fn guaranteed_output_unbounded_for_constant_map() {
        let mut t = Transducer::new_core(2, 1);
        t.set(0, Letter::Digit(0), w("0"), 0).unwrap();
        t.set(0, Letter::Digit(1), w("0"), 0).unwrap();
        assert!(matches!(t.guaranteed_output(), Err(Error::GuaranteedOutputUnbounded { .. })));
    }

    #[test]
    fn theta_examples() {
        let f1 = fixtures::two_root_ternary();
        assert_eq!(f1.theta(&w(".0")).unwrap(), Word::empty());
        assert_eq!(f1.theta(&w(".0 0")).unwrap(), w(".0"));
        assert_eq!(f1.theta(&w(".1")).unwrap(), w(".1 1"));
        assert_eq!(f1.theta(&Word::empty()).unwrap(), Word::empty());
    }

    #[test]
    fn local_action_of_two_root_ternary() {
        let f1 = fixtures::two_root_ternary();
        let la = f1.local_action(&w(".0 0")).unwrap();
        // (.0 0 x)h = .0 (x h_{.0 0}); state q3 maps 0 -> 0 then q2 loops 0 -> 1
        let y = la.eval_point(&"- | 0".parse().unwrap()).unwrap();
        assert_eq!(y, "0 | 1".parse().unwrap());
        assert!(f1.local_action(&w(".0")).is_err());
    }

    #[test]
    fn canonical_form_ignores_names_and_order() {
        let f1 = fixtures::two_root_ternary();
        let moved = f1.permute_states(&[4, 2, 0, 1, 3]);
        assert_ne!(f1, moved);
        assert_eq!(f1.canonical_form().unwrap(), moved.canonical_form().unwrap());

        let f4 = fixtures::synchronous_ternary();
        let swapped = f4.permute_states(&[1, 0]).with_names(vec!["x".into(), "y".into()]);
        assert_eq!(f4.canonical_form().unwrap(), swapped.canonical_form().unwrap());
        assert_ne!(f4.canonical_form().unwrap(), fixtures::unbalanced_ternary().canonical_form().unwrap());
    }

    #[test]
    fn canonical_form_rejects_unreachable() {
        let a = Alphabet::new(2, 1).unwrap();
        let mut t = Transducer::new_initial(a, 3, 0);
        t.set(0, Letter::Root(0), w(".0"), 1).unwrap();
        for q in 1..3 {
            t.set(q, Letter::Digit(0), w("0"), q).unwrap();
            t.set(q, Letter::Digit(1), w("1"), q).unwrap();
        }
        assert_eq!(t.canonical_form(), Err(Error::Unreachable));
    }

    #[test]
    fn canonical_form_rejects_disconnected_core() {
        let mut t = Transducer::new_core(2, 2);
        for q in 0..2 {
            t.set(q, Letter::Digit(0), w("0"), q).unwrap();
            t.set(q, Letter::Digit(1), w("1"), q).unwrap();
        }
        assert_eq!(t.canonical_form(), Err(Error::DisconnectedCore));
    }
}
