//! Group operations on transducers and constructors for prefix-code maps and
//! digit twists.
//!
//! Maps act on the right: `compose(a, b)` is the map `x ↦ (x·a)·b`.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::machine::{Mode, StateId, Transducer, Transition};
use crate::minimize::minimize;
use crate::words::{Alphabet, EventuallyPeriodicPoint, Letter, PrefixCode, Word};

/// The minimal transducer of the identity map.
pub fn identity_transducer(a: Alphabet) -> Transducer {
    twist_transducer(&Permutation::identity(a.n()), a).expect("identity has the right size")
}

/// The single-state core that echoes every digit.
pub fn identity_core(n: u32) -> Transducer {
    let mut t = Transducer::new_core(n, 1).with_names(vec!["id".into()]);
    for d in 0..n {
        t.set(0, Letter::Digit(d), Word::digits([d]), 0).unwrap();
    }
    t
}

/// Pair-product machine realizing `x ↦ (x·a)·b`, without minimization.
///
/// Initial machines keep only pairs reachable from the pair of initial
/// states; core machines use every pair.
pub fn product(a: &Transducer, b: &Transducer) -> Result<Transducer> {
    a.ensure_valid()?;
    b.ensure_valid()?;
    let starts: Vec<(StateId, StateId)> = match (a.mode(), b.mode()) {
        (Mode::Initial { alphabet: x, initial: qa }, Mode::Initial { alphabet: y, initial: qb }) => {
            if x != y {
                return Err(Error::AlphabetMismatch);
            }
            vec![(qa, qb)]
        }
        (Mode::Core { n: x }, Mode::Core { n: y }) => {
            if x != y {
                return Err(Error::AlphabetMismatch);
            }
            a.states().flat_map(|p| b.states().map(move |q| (p, q))).collect()
        }
        _ => return Err(Error::Mode { expected: "two machines of the same mode" }),
    };

    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut queue = VecDeque::new();
    for s in starts {
        index.insert(s, pairs.len());
        pairs.push(s);
        queue.push_back(s);
    }
    let mut edges: Vec<Vec<(Word, (StateId, StateId))>> = Vec::new();
    while let Some((p, q)) = queue.pop_front() {
        let mut row = Vec::new();
        for (_, ta) in a.row(p) {
            let (out, q2) = b.run_word(q, &ta.output)?;
            let next = (ta.target, q2);
            if let Entry::Vacant(slot) = index.entry(next) {
                slot.insert(pairs.len());
                pairs.push(next);
                queue.push_back(next);
            }
            row.push((out, next));
        }
        edges.push(row);
    }

    let rows = edges
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|(output, next)| Some(Transition { output, target: index[&next] }))
                .collect()
        })
        .collect();
    let names = pairs
        .iter()
        .map(|&(p, q)| format!("({},{})", a.name(p), b.name(q)))
        .collect();
    let mode = match a.mode() {
        Mode::Initial { alphabet, .. } => Mode::Initial { alphabet, initial: 0 },
        m => m,
    };
    let t = Transducer::from_parts(mode, names, rows);
    let violations = t.validate();
    if !violations.is_empty() {
        return Err(Error::DegenerateProduct(violations));
    }
    Ok(t)
}

/// The minimal transducer of `x ↦ (x·a)·b`.
pub fn compose(a: &Transducer, b: &Transducer) -> Result<Transducer> {
    minimize(&product(a, b)?)
}

/// Which first letters of input can explain a pending piece of output.
struct Compatibility<'a> {
    t: &'a Transducer,
    memo: HashMap<(StateId, Word), bool>,
}

impl<'a> Compatibility<'a> {
    fn new(t: &'a Transducer) -> Self {
        Compatibility { t, memo: HashMap::new() }
    }

    /// Does some input starting with `x` make `q` write a word beginning with `u`?
    fn letter(&mut self, q: StateId, x: Letter, u: &Word) -> bool {
        let tr = self.t.step(q, x).expect("validated machine");
        if u.is_prefix_of(&tr.output) {
            return true;
        }
        if !tr.output.is_prefix_of(u) {
            return false;
        }
        let rest = u.subtract(&tr.output).unwrap();
        let target = tr.target;
        self.reaches(target, &rest)
    }

    /// Does some input make `q` write a word beginning with `u`?
    fn reaches(&mut self, q: StateId, u: &Word) -> bool {
        if u.is_empty() {
            return true;
        }
        if let Some(&hit) = self.memo.get(&(q, u.clone())) {
            return hit;
        }
        let hit = self.t.letters_of(q).into_iter().any(|x| self.letter(q, x, u));
        self.memo.insert((q, u.clone()), hit);
        hit
    }
}

/// Inverse by the pending-output construction.
///
/// States of the inverse are pairs `(q, u)`: the forward machine sits in `q`
/// and `u` is output already read but not yet attributed to input. An input
/// letter is emitted once it is the only letter compatible with `u` and its
/// whole output has been read. Pending words are bounded by
/// `|Q| · (1 + max output length)`; the result is minimized and checked by
/// composing with the original.
pub fn invert(a: &Transducer) -> Result<Transducer> {
    let (alphabet, _) = a.require_initial()?;
    let m = minimize(a)?;
    let q0 = m.initial().expect("initial mode");
    let bound = m.state_count() * (1 + m.max_output_len());
    let mut compat = Compatibility::new(&m);

    let mut index: HashMap<(StateId, Word), StateId> = HashMap::new();
    let mut states: Vec<(StateId, Word)> = vec![(q0, Word::empty())];
    index.insert((q0, Word::empty()), 0);
    let mut rows: Vec<Vec<Option<Transition>>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (q, u) = states[i].clone();
        let letters: Vec<Letter> = if i == 0 {
            alphabet.roots().collect()
        } else {
            alphabet.digits().collect()
        };
        let mut row = Vec::new();
        for y in letters {
            let mut pending = u.clone();
            pending.push(y);
            let (emitted, q2, rest) = resolve(&m, &mut compat, q, pending)?;
            if rest.len() > bound {
                return Err(Error::NotInvertible(format!(
                    "pending output `{rest}` exceeds the bound {bound}"
                )));
            }
            let key = (q2, rest);
            let target = *index.entry(key.clone()).or_insert_with(|| {
                states.push(key);
                states.len() - 1
            });
            row.push(Some(Transition { output: emitted, target }));
        }
        rows.push(row);
        i += 1;
    }

    let names = states
        .iter()
        .map(|(q, u)| {
            let pending: Vec<String> = u.letters().iter().map(|l| l.to_string()).collect();
            format!("{}:{}", m.name(*q), pending.join("_"))
        })
        .collect();
    let raw = Transducer::from_parts(Mode::Initial { alphabet, initial: 0 }, names, rows);
    if !raw.is_valid() {
        return Err(Error::NotInvertible("inverse construction is degenerate".into()));
    }
    let inverse = minimize(&raw)?;
    let round_trip = compose(&m, &inverse)?;
    if round_trip.canonical_form()? != identity_transducer(alphabet).canonical_form()? {
        return Err(Error::NotInvertible("round trip is not the identity".into()));
    }
    Ok(inverse)
}

/// Emits every input letter forced by the pending output `u` read at `q`.
fn resolve(
    m: &Transducer,
    compat: &mut Compatibility<'_>,
    mut q: StateId,
    mut u: Word,
) -> Result<(Word, StateId, Word)> {
    let mut emitted = Word::empty();
    loop {
        let candidates: Vec<Letter> =
            m.letters_of(q).into_iter().filter(|&x| compat.letter(q, x, &u)).collect();
        match candidates.as_slice() {
            [] => {
                return Err(Error::NotInvertible(format!(
                    "output `{u}` is not written from state {}",
                    m.name(q)
                )))
            }
            &[x] => {
                let tr = m.step(q, x).unwrap();
                if !tr.output.is_prefix_of(&u) {
                    break;
                }
                u = u.subtract(&tr.output).unwrap();
                emitted.push(x);
                q = tr.target;
            }
            _ => break,
        }
    }
    Ok((emitted, q, u))
}

/// A bijection of `{0, ..., n-1}` stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || seen[i as usize] {
                return Err(Error::Permutation(format!("{images:?} is not a bijection")));
            }
            seen[i as usize] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: u32) -> Self {
        Permutation((0..n).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn apply(&self, d: u32) -> u32 {
        self.0[d as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation(self.0.iter().map(|&x| other.apply(x)).collect())
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: u32) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x as u32);
                    go(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n as usize], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

/// The map applying `σ` to every digit and fixing root letters.
pub fn twist_transducer(sigma: &Permutation, a: Alphabet) -> Result<Transducer> {
    if sigma.degree() != a.n() {
        return Err(Error::Permutation(format!("degree {} on {} digits", sigma.degree(), a.n())));
    }
    let mut t = Transducer::new_initial(a, 2, 0).with_names(vec!["q0".into(), "t".into()]);
    for k in 0..a.r() {
        t.set(0, Letter::Root(k), Word::rooted(k, []), 1)?;
    }
    for d in 0..a.n() {
        t.set(1, Letter::Digit(d), Word::digits([sigma.apply(d)]), 1)?;
    }
    Ok(t)
}

/// An element of the Higman–Thompson group given by two complete prefix
/// codes of equal size, paired by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixCodeMap {
    alphabet: Alphabet,
    domain: PrefixCode,
    range: PrefixCode,
}

impl PrefixCodeMap {
    pub fn new(alphabet: Alphabet, domain: PrefixCode, range: PrefixCode) -> Result<Self> {
        if domain.len() != range.len() {
            return Err(Error::PrefixCodeMap(format!(
                "domain has {} words, range has {}",
                domain.len(),
                range.len()
            )));
        }
        domain
            .validate(alphabet)
            .map_err(|e| Error::PrefixCodeMap(format!("domain: {e}")))?;
        range
            .validate(alphabet)
            .map_err(|e| Error::PrefixCodeMap(format!("range: {e}")))?;
        Ok(PrefixCodeMap { alphabet, domain, range })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn domain(&self) -> &PrefixCode {
        &self.domain
    }

    pub fn range(&self) -> &PrefixCode {
        &self.range
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Word, &Word)> {
        self.domain.words().iter().zip(self.range.words())
    }

    pub fn inverse(&self) -> Self {
        PrefixCodeMap { alphabet: self.alphabet, domain: self.range.clone(), range: self.domain.clone() }
    }

    /// Replaces the domain prefix of `x` by the paired range word.
    pub fn apply(&self, x: &EventuallyPeriodicPoint) -> Result<EventuallyPeriodicPoint> {
        let (alpha, beta) = self
            .pairs()
            .find(|(alpha, _)| x.prefix(alpha.len()) == **alpha)
            .ok_or_else(|| Error::Inadmissible { state: 0, word: x.preperiod().clone() })?;
        let (u, v) = (x.preperiod(), x.period());
        if alpha.len() <= u.len() {
            let tail = u.subtract(alpha)?;
            Ok(EventuallyPeriodicPoint::new(beta.concat(&tail), v.clone())?)
        } else {
            let skip = (alpha.len() - u.len()) % v.len();
            let mut rotated = v.letters().to_vec();
            rotated.rotate_left(skip);
            Ok(EventuallyPeriodicPoint::new(beta.clone(), Word::new(rotated)?)?)
        }
    }
}

/// Builds the minimal transducer of a prefix-code map.
///
/// Domain words that are a single root letter are split into their `n`
/// children first, so every domain word has at least one digit. States are
/// the proper prefixes of domain words plus an identity state; walking the
/// prefix tree writes nothing until a domain word is complete, which writes
/// its range word and moves to the identity state.
pub fn from_prefix_code_map(m: &PrefixCodeMap) -> Result<Transducer> {
    let a = m.alphabet;
    let mut pairs: Vec<(Word, Word)> = Vec::new();
    for (alpha, beta) in m.pairs() {
        if alpha.len() < 2 {
            for d in 0..a.n() {
                let child = Word::digits([d]);
                pairs.push((alpha.concat(&child), beta.concat(&child)));
            }
        } else {
            pairs.push((alpha.clone(), beta.clone()));
        }
    }

    let mut prefixes: Vec<Word> = vec![Word::empty()];
    let mut index: HashMap<Word, StateId> = HashMap::from([(Word::empty(), 0)]);
    for (alpha, _) in &pairs {
        for len in 1..alpha.len() {
            let p = alpha.truncate_to(len);
            if !index.contains_key(&p) {
                index.insert(p.clone(), prefixes.len());
                prefixes.push(p);
            }
        }
    }
    let identity = prefixes.len();
    let mut names: Vec<String> = prefixes
        .iter()
        .map(|p| {
            if p.is_empty() {
                "q0".to_string()
            } else {
                p.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>().join("_")
            }
        })
        .collect();
    names.push("id".into());

    let mut t = Transducer::new_initial(a, prefixes.len() + 1, 0).with_names(names);
    let leaves: HashMap<&Word, &Word> = pairs.iter().map(|(x, y)| (x, y)).collect();
    for (q, p) in prefixes.iter().enumerate() {
        for letter in t.letters_of(q) {
            let mut next = p.clone();
            next.push(letter);
            if let Some(&beta) = leaves.get(&next) {
                t.set(q, letter, beta.clone(), identity)?;
            } else {
                let target = *index.get(&next).ok_or_else(|| {
                    Error::PrefixCodeMap(format!("`{next}` is not covered by the domain"))
                })?;
                t.set(q, letter, Word::empty(), target)?;
            }
        }
    }
    for d in 0..a.n() {
        t.set(identity, Letter::Digit(d), Word::digits([d]), identity)?;
    }
    minimize(&t)
}

/// Views a core machine as an initial machine on the one-root space that
/// enters the core at `state`.
pub fn root_core(core: &Transducer, state: StateId) -> Result<Transducer> {
    if !core.is_core() {
        return Err(Error::Mode { expected: "a core transducer" });
    }
    core.ensure_valid()?;
    let n = core.n();
    let alphabet = Alphabet::new(n, 1)?;
    let mut name = "q0".to_string();
    while core.state_by_name(&name).is_some() {
        name.push('\'');
    }
    let mut names = vec![name];
    names.extend(core.names().iter().cloned());
    let mut rows: Vec<Vec<Option<Transition>>> = vec![vec![Some(Transition {
        output: Word::rooted(0, []),
        target: state + 1,
    })]];
    for q in core.states() {
        rows.push(
            core.row(q)
                .map(|(_, tr)| Some(Transition { output: tr.output.clone(), target: tr.target + 1 }))
                .collect(),
        );
    }
    Ok(Transducer::from_parts(Mode::Initial { alphabet, initial: 0 }, names, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> EventuallyPeriodicPoint {
        s.parse().unwrap()
    }

    #[test]
    fn identity_is_minimal_and_fixes_points() {
        let a = Alphabet::new(2, 1).unwrap();
        let id = identity_transducer(a);
        assert_eq!(id.state_count(), 2);
        assert_eq!(minimize(&id).unwrap().state_count(), 2);
        for p in [".0 | 0", ".0 1 1 | 0 1", ".0 | 1 1 0"] {
            assert_eq!(id.eval_point(&pt(p)).unwrap(), pt(p));
        }
    }

    #[test]
    fn compose_with_identity() {
        let f1 = fixtures::two_root_ternary();
        let id = identity_transducer(f1.alphabet().unwrap());
        let c = compose(&id, &f1).unwrap();
        assert_eq!(c.canonical_form().unwrap(), f1.canonical_form().unwrap());
        let c = compose(&f1, &id).unwrap();
        assert_eq!(c.canonical_form().unwrap(), f1.canonical_form().unwrap());
    }

    #[test]
    fn swap_squared_is_identity() {
        let a = Alphabet::new(2, 1).unwrap();
        let s = twist_transducer(&Permutation::new(vec![1, 0]).unwrap(), a).unwrap();
        let c = compose(&s, &s).unwrap();
        assert_eq!(c.canonical_form().unwrap(), identity_transducer(a).canonical_form().unwrap());
    }

    #[test]
    fn compose_rejects_mixed_inputs() {
        let f1 = fixtures::two_root_ternary();
        let f4 = fixtures::synchronous_ternary();
        assert!(matches!(compose(&f1, &f4), Err(Error::Mode { .. })));
        let other = identity_transducer(Alphabet::new(3, 1).unwrap());
        assert_eq!(compose(&f1, &other), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn invert_twist() {
        let a = Alphabet::new(3, 2).unwrap();
        let sigma = Permutation::new(vec![1, 2, 0]).unwrap();
        let inv = invert(&twist_transducer(&sigma, a).unwrap()).unwrap();
        let expected = twist_transducer(&sigma.inverse(), a).unwrap();
        assert_eq!(inv.canonical_form().unwrap(), expected.canonical_form().unwrap());
    }

    #[test]
    fn invert_two_root_ternary_round_trips() {
        let f1 = fixtures::two_root_ternary();
        let inv = invert(&f1).unwrap();
        let id = identity_transducer(f1.alphabet().unwrap()).canonical_form().unwrap();
        assert_eq!(compose(&f1, &inv).unwrap().canonical_form().unwrap(), id);
        assert_eq!(compose(&inv, &f1).unwrap().canonical_form().unwrap(), id);
    }

    #[test]
    fn invert_rejects_non_surjective() {
        let a = Alphabet::new(2, 1).unwrap();
        let mut t = Transducer::new_initial(a, 2, 0);
        t.set(0, Letter::Root(0), w(".0"), 1).unwrap();
        t.set(1, Letter::Digit(0), w("0 0"), 1).unwrap();
        t.set(1, Letter::Digit(1), w("1"), 1).unwrap();
        assert!(matches!(invert(&t), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn invert_rejects_non_injective() {
        // both digits of the loop state write 0 then 1 ... : never resolves
        let a = Alphabet::new(2, 1).unwrap();
        let mut t = Transducer::new_initial(a, 3, 0);
        t.set(0, Letter::Root(0), w(".0"), 1).unwrap();
        t.set(1, Letter::Digit(0), w("0"), 1).unwrap();
        t.set(1, Letter::Digit(1), w("0"), 2).unwrap();
        t.set(2, Letter::Digit(0), w("1"), 1).unwrap();
        t.set(2, Letter::Digit(1), w("1"), 2).unwrap();
        assert!(matches!(invert(&t), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn prefix_map_eval() {
        let a = Alphabet::new(3, 2).unwrap();
        let code = |s: &[&str]| PrefixCode(s.iter().map(|x| w(x)).collect());
        let m = PrefixCodeMap::new(a, code(&[".0 0", ".0 1", ".0 2", ".1"]), code(&[".1", ".0 0", ".0 1", ".0 2"]))
            .unwrap();
        let t = from_prefix_code_map(&m).unwrap();
        assert_eq!(t.eval_point(&pt(".0 0 | 1")).unwrap(), pt(".1 | 1"));
        assert_eq!(m.apply(&pt(".0 0 | 1")).unwrap(), pt(".1 | 1"));
        assert_eq!(t.eval_point(&pt(".1 | 0 1")).unwrap(), pt(".0 2 | 0 1"));
        assert_eq!(m.apply(&pt(".0 | 2")).unwrap(), pt(".0 1 | 2"));
    }

    #[test]
    fn identity_prefix_map_minimizes_to_identity() {
        let a = Alphabet::new(3, 2).unwrap();
        let code = PrefixCode(vec![w(".0 0"), w(".0 1"), w(".0 2"), w(".1")]);
        let m = PrefixCodeMap::new(a, code.clone(), code).unwrap();
        let t = from_prefix_code_map(&m).unwrap();
        assert_eq!(t.canonical_form().unwrap(), identity_transducer(a).canonical_form().unwrap());
    }

    #[test]
    fn prefix_map_rejects_bad_codes() {
        let a = Alphabet::new(2, 1).unwrap();
        let m = PrefixCodeMap::new(a, PrefixCode(vec![w(".0")]), PrefixCode(vec![w(".0 0")]));
        assert!(matches!(m, Err(Error::PrefixCodeMap(_))));
        let m = PrefixCodeMap::new(a, PrefixCode(vec![w(".0")]), PrefixCode(vec![w(".0 0"), w(".0 1")]));
        assert!(matches!(m, Err(Error::PrefixCodeMap(_))));
    }

    #[test]
    fn invert_prefix_map_swaps_codes() {
        let a = Alphabet::new(3, 2).unwrap();
        let code = |s: &[&str]| PrefixCode(s.iter().map(|x| w(x)).collect());
        let m = PrefixCodeMap::new(a, code(&[".0 0", ".0 1", ".0 2", ".1"]), code(&[".1", ".0 0", ".0 1", ".0 2"]))
            .unwrap();
        let inv = invert(&from_prefix_code_map(&m).unwrap()).unwrap();
        let expected = from_prefix_code_map(&m.inverse()).unwrap();
        assert_eq!(inv.canonical_form().unwrap(), expected.canonical_form().unwrap());
    }

    #[test]
    fn twist_examples() {
        let a = Alphabet::new(3, 1).unwrap();
        let id = twist_transducer(&Permutation::identity(3), a).unwrap();
        assert_eq!(id.canonical_form().unwrap(), identity_transducer(a).canonical_form().unwrap());
        let cycle = twist_transducer(&Permutation::new(vec![1, 2, 0]).unwrap(), a).unwrap();
        assert_eq!(cycle.eval_point(&pt(".0 | 0")).unwrap(), pt(".0 | 1"));
        assert!(twist_transducer(&Permutation::identity(2), a).is_err());
    }

    #[test]
    fn permutations() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        let s = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(s.then(&s.inverse()).is_identity());
        assert_eq!(Permutation::all(3).len(), 6);
        let t = Permutation::new(vec![1, 0, 2]).unwrap();
        // s then t: 0 -> 1 -> 0
        assert_eq!(s.then(&t).apply(0), 0);
    }

    #[test]
    fn root_core_enters_at_state() {
        let f4 = fixtures::synchronous_ternary();
        let r = root_core(&f4, 1).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.eval_point(&pt(".0 | 2")).unwrap(), pt(".0 | 0"));
        assert_eq!(r.eval_point(&pt(".0 0 | 2")).unwrap(), pt(".0 2 | 0"));
    }
}
