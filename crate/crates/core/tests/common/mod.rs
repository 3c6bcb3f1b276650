//! Independent reference computations used by the integration tests.

#![allow(dead_code)]

use cantor_core::{Alphabet, EventuallyPeriodicPoint, PrefixCode, PrefixCodeMap, Transducer, Word};

/// All digit words of length `len` over `n` digits.
pub fn words_of_length(n: u32, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (0..n).map(move |d| {
                    let mut v = w.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::digits).collect()
}

/// States that take part in synchronization: those outside the pre-root
/// region.
pub fn tracked(t: &Transducer) -> Vec<usize> {
    let pre = t.pre_root_states();
    t.states().filter(|&q| !pre[q]).collect()
}

/// Whether every tracked state reaches one state on every word of length
/// `len`, by exhaustive enumeration.
pub fn all_words_synchronize(t: &Transducer, len: usize) -> bool {
    let states = tracked(t);
    words_of_length(t.n(), len).iter().all(|w| {
        let mut ends = states.iter().map(|&q| t.run_word(q, w).unwrap().1);
        let first = ends.next();
        ends.all(|e| Some(e) == first)
    })
}

/// The least level up to `max`, by enumeration.
pub fn brute_force_level(t: &Transducer, max: usize) -> Option<usize> {
    (0..=max).find(|&m| all_words_synchronize(t, m))
}

fn longer(a: &Word, b: &Word) -> Word {
    if a.len() >= b.len() {
        a.clone()
    } else {
        b.clone()
    }
}

/// `x ↦ (x·g)·h` for prefix-code maps, by refining the range of `g` and the
/// domain of `h` to their common antichain.
pub fn compose_prefix_maps(g: &PrefixCodeMap, h: &PrefixCodeMap) -> PrefixCodeMap {
    let mut domain = Vec::new();
    let mut range = Vec::new();
    for (gamma, rho) in g.pairs() {
        for (delta, zeta) in h.pairs() {
            if !rho.is_comparable(delta) {
                continue;
            }
            let c = longer(rho, delta);
            domain.push(gamma.concat(&c.subtract(rho).unwrap()));
            range.push(zeta.concat(&c.subtract(delta).unwrap()));
        }
    }
    PrefixCodeMap::new(g.alphabet(), PrefixCode(domain), PrefixCode(range)).expect("refinement is a prefix-code map")
}

/// Eventually periodic points `u · v^ω` with short random-looking parts,
/// enumerated deterministically.
pub fn sample_points(a: Alphabet, count: usize) -> Vec<EventuallyPeriodicPoint> {
    let mut out = Vec::new();
    let mut x: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut next = || {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        x
    };
    while out.len() < count {
        let root = (next() % a.r() as u64) as u32;
        let ulen = (next() % 5) as usize;
        let vlen = 1 + (next() % 3) as usize;
        let u = Word::rooted(root, (0..ulen).map(|_| (next() % a.n() as u64) as u32).collect::<Vec<_>>());
        let v = Word::digits((0..vlen).map(|_| (next() % a.n() as u64) as u32).collect::<Vec<_>>());
        out.push(EventuallyPeriodicPoint::new(u, v).unwrap());
    }
    out
}
