//! Reference machines used by tests, benches and the CLI.

use crate::io::parse;
use crate::machine::Transducer;

/// A bi-synchronizing map on three digits and two roots whose core is a
/// three-state permutation machine.
pub const TWO_ROOT_TERNARY: &str = "\
cantor-transducer 1
alphabet n=3 r=2
states q0 q1 q2 q3 q4
initial q0
q0 .0 -> q1 : -
q0 .1 -> q2 : .1 1
q1 0 -> q3 : .0
q1 1 -> q2 : .1 0
q1 2 -> q4 : .1 2
q2 0 -> q2 : 1
q2 1 -> q3 : 2
q2 2 -> q4 : 0
q3 0 -> q2 : 0
q3 1 -> q3 : 2
q3 2 -> q4 : 1
q4 0 -> q3 : 2
q4 1 -> q2 : 1
q4 2 -> q4 : 0
";

/// A minimal core on three digits; the cycle `a -2-> b -0-> a` reads two
/// letters and writes three.
pub const UNBALANCED_TERNARY: &str = "\
cantor-transducer 1
alphabet n=3 core
states a b c
a 0 -> a : 2
a 1 -> a : 0
a 2 -> b : 1
b 0 -> a : 0 0
b 1 -> c : -
b 2 -> b : 1
c 0 -> a : 0 2
c 1 -> a : 2
c 2 -> b : 0 1
";

/// The core of [`UNBALANCED_TERNARY`] extended to four digits and two roots.
pub const FOUR_DIGIT_UNBALANCED: &str = "\
cantor-transducer 1
alphabet n=4 r=2
states q0 a b c
initial q0
q0 .0 -> a : .0
q0 .1 -> a : .1
a 0 -> a : 2
a 1 -> a : 0
a 2 -> b : 1
a 3 -> a : 3
b 0 -> a : 0 0
b 1 -> c : -
b 2 -> b : 1
b 3 -> a : 3
c 0 -> a : 0 2
c 1 -> a : 2
c 2 -> b : 0 1
c 3 -> a : 0 3
";

/// A cycle-balanced, asynchronous binary core of infinite order.
pub const BALANCED_BINARY: &str = "\
cantor-transducer 1
alphabet n=2 core
states a b c d e f g h i j
a 0 -> b : -
a 1 -> e : -
b 0 -> c : 1 0 0
b 1 -> g : 0 1
c 0 -> c : 0
c 1 -> d : 1
d 0 -> a : -
d 1 -> g : -
e 0 -> a : 0 1
e 1 -> d : 1 0 1
f 0 -> a : 1
f 1 -> d : 0 1
g 0 -> j : 0 0
g 1 -> h : 1 1
h 0 -> j : 0
h 1 -> h : 1
i 0 -> c : 0 0
i 1 -> g : 1
j 0 -> i : -
j 1 -> f : -
";

/// A synchronous ternary core of infinite order.
pub const SYNCHRONOUS_TERNARY: &str = "\
cantor-transducer 1
alphabet n=3 core
states a b
a 0 -> a : 1
a 1 -> a : 2
a 2 -> b : 0
b 0 -> a : 2
b 1 -> a : 1
b 2 -> b : 0
";

/// A binary core of order two that is not cycle-balanced.
pub const BINARY_INVOLUTION: &str = "\
cantor-transducer 1
alphabet n=2 core
states a b c d
a 0 -> a : 0
a 1 -> b : 1
b 0 -> a : 1 0
b 1 -> c : -
c 0 -> a : 0
c 1 -> d : 1 1
d 0 -> a : 0
d 1 -> d : 1
";

/// Digit-wise difference map `y_i = x_i + x_{i-1} mod 2`: synchronizing at
/// level 1, but its inverse (running parity) never synchronizes.
pub const SYNC_NOT_BISYNC: &str = "\
cantor-transducer 1
alphabet n=2 r=1
states q0 a b
initial q0
q0 .0 -> a : .0
a 0 -> a : 0
a 1 -> b : 1
b 0 -> a : 1
b 1 -> b : 0
";

/// Doubles every `0`, so no image has a maximal block of `0`s of odd
/// length; not surjective.
pub const NOT_SURJECTIVE: &str = "\
cantor-transducer 1
alphabet n=2 r=1
states q0 s
initial q0
q0 .0 -> s : .0
s 0 -> s : 0 0
s 1 -> s : 1
";

pub const ALL: [&str; 8] = [TWO_ROOT_TERNARY, UNBALANCED_TERNARY, FOUR_DIGIT_UNBALANCED, BALANCED_BINARY, SYNCHRONOUS_TERNARY, BINARY_INVOLUTION, SYNC_NOT_BISYNC, NOT_SURJECTIVE];

fn load(text: &str) -> Transducer {
    parse(text).expect("bundled fixture is valid")
}

pub fn two_root_ternary() -> Transducer {
    load(TWO_ROOT_TERNARY)
}

pub fn unbalanced_ternary() -> Transducer {
    load(UNBALANCED_TERNARY)
}

pub fn four_digit_unbalanced() -> Transducer {
    load(FOUR_DIGIT_UNBALANCED)
}

pub fn balanced_binary() -> Transducer {
    load(BALANCED_BINARY)
}

pub fn synchronous_ternary() -> Transducer {
    load(SYNCHRONOUS_TERNARY)
}

pub fn binary_involution() -> Transducer {
    load(BINARY_INVOLUTION)
}

pub fn sync_not_bisync() -> Transducer {
    load(SYNC_NOT_BISYNC)
}

pub fn not_surjective() -> Transducer {
    load(NOT_SURJECTIVE)
}
