//! Seeded generators of machines, prefix codes and group elements.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{from_prefix_code_map, Permutation, PrefixCodeMap};
use crate::error::{Error, Result};
use crate::machine::Transducer;
use crate::words::{Alphabet, Letter, PrefixCode, Word};

/// Attempts before a generator gives up.
pub const REJECTION_BUDGET: usize = 10_000;

fn digit_word(rng: &mut impl Rng, n: u32, lengths: std::ops::RangeInclusive<usize>) -> Word {
    let len = rng.gen_range(lengths);
    Word::digits((0..len).map(|_| rng.gen_range(0..n)))
}

/// A random valid initial machine with `states` states, outputs of length at
/// most `max_out` and bounded guaranteed output.
///
/// Up to two states besides the initial one may sit before the root is
/// written; they read digits, write nothing, and leave with a rooted word.
pub fn random_transducer(a: Alphabet, states: usize, max_out: usize, seed: u64) -> Result<Transducer> {
    assert!(states >= 2, "need the initial state and a digit state");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let pre_root = rng.gen_range(0..=2.min(states - 2));
        let body = 1 + pre_root..states;
        let mut t = Transducer::new_initial(a, states, 0);
        for k in 0..a.r() {
            let x = Letter::Root(k);
            if pre_root > 0 && rng.gen_bool(0.5) {
                t.set(0, x, Word::empty(), rng.gen_range(1..=pre_root))?;
            } else {
                let tail = digit_word(&mut rng, a.n(), 0..=max_out);
                let root = Word::rooted(rng.gen_range(0..a.r()), []);
                t.set(0, x, root.concat(&tail), rng.gen_range(body.clone()))?;
            }
        }
        for p in 1..=pre_root {
            for d in 0..a.n() {
                let x = Letter::Digit(d);
                if p < pre_root && rng.gen_bool(0.3) {
                    t.set(p, x, Word::empty(), rng.gen_range(p + 1..=pre_root))?;
                } else {
                    let tail = digit_word(&mut rng, a.n(), 0..=max_out.saturating_sub(1));
                    let root = Word::rooted(rng.gen_range(0..a.r()), []);
                    t.set(p, x, root.concat(&tail), rng.gen_range(body.clone()))?;
                }
            }
        }
        for q in body.clone() {
            for d in 0..a.n() {
                let out = digit_word(&mut rng, a.n(), 0..=max_out);
                t.set(q, Letter::Digit(d), out, rng.gen_range(body.clone()))?;
            }
        }
        if t.is_valid() && t.guaranteed_output().is_ok() {
            return Ok(t);
        }
    }
    Err(Error::RejectionBudget(REJECTION_BUDGET))
}

/// A random synchronous machine: every state permutes the digits, and the
/// initial state writes a root letter.
pub fn random_permutation_transducer(a: Alphabet, states: usize, seed: u64) -> Result<Transducer> {
    assert!(states >= 2, "need the initial state and a digit state");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Transducer::new_initial(a, states, 0);
    let mut roots: Vec<u32> = (0..a.r()).collect();
    roots.shuffle(&mut rng);
    for k in 0..a.r() {
        t.set(0, Letter::Root(k), Word::rooted(roots[k as usize], []), rng.gen_range(1..states))?;
    }
    for q in 1..states {
        let mut images: Vec<u32> = (0..a.n()).collect();
        images.shuffle(&mut rng);
        for d in 0..a.n() {
            t.set(q, Letter::Digit(d), Word::digits([images[d as usize]]), rng.gen_range(1..states))?;
        }
    }
    Ok(t)
}

/// A random core machine on `n` digits (not necessarily
/// strongly connected or synchronizing).
pub fn random_core(n: u32, states: usize, max_out: usize, seed: u64) -> Result<Transducer> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let mut t = Transducer::new_core(n, states);
        for q in 0..states {
            for d in 0..n {
                let out = digit_word(&mut rng, n, 0..=max_out);
                t.set(q, Letter::Digit(d), out, rng.gen_range(0..states))?;
            }
        }
        if t.is_valid() && t.guaranteed_output().is_ok() {
            return Ok(t);
        }
    }
    Err(Error::RejectionBudget(REJECTION_BUDGET))
}

/// A complete prefix code obtained from the root letters by `splits`
/// random one-step expansions.
pub fn random_prefix_code(a: Alphabet, splits: usize, rng: &mut impl Rng) -> PrefixCode {
    let mut leaves: Vec<Word> = PrefixCode::roots(a).0;
    for _ in 0..splits {
        let i = rng.gen_range(0..leaves.len());
        let leaf = leaves.swap_remove(i);
        leaves.extend((0..a.n()).map(|d| leaf.concat(&Word::digits([d]))));
    }
    leaves.sort_by(|x, y| x.shortlex_cmp(y));
    PrefixCode(leaves)
}

/// A random element of the Higman–Thompson group: two random codes of equal
/// size and a random pairing.
pub fn random_prefix_code_map(a: Alphabet, splits: usize, seed: u64) -> Result<PrefixCodeMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let domain = random_prefix_code(a, splits, &mut rng);
    let mut range = random_prefix_code(a, splits, &mut rng).0;
    range.shuffle(&mut rng);
    PrefixCodeMap::new(a, domain, PrefixCode(range))
}

/// The minimal transducer of [`random_prefix_code_map`].
pub fn random_group_element(a: Alphabet, splits: usize, seed: u64) -> Result<Transducer> {
    from_prefix_code_map(&random_prefix_code_map(a, splits, seed)?)
}

/// A uniformly random permutation of `n` points.
pub fn random_permutation(n: u32, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut images: Vec<u32> = (0..n).collect();
    images.shuffle(&mut rng);
    Permutation::new(images).expect("shuffle is a bijection")
}

/// A uniformly random relabelling of `count` states that keeps state 0
/// fixed when `keep_first` is set.
pub fn random_state_permutation(count: usize, keep_first: bool, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..count).collect();
    let skip = usize::from(keep_first && count > 0);
    perm[skip..].shuffle(&mut rng);
    perm
}
