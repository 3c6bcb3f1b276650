//! Line-oriented text format for transducers and prefix-code maps.
//!
//! ```text
//! cantor-transducer 1
//! alphabet n=3 r=2          # or: alphabet n=3 core
//! states q0 q1 q2           # optional; otherwise order of first use
//! initial q0                # initial mode only
//! q0 .0 -> q1 : -           # state letter -> target : output word
//! q1 0 -> q2 : .0 1
//! ```
//!
//! `#` starts a comment. Directives precede transitions. Prefix-code maps
//! use an `alphabet n=<n> r=<r>` line followed by `domain-word -> range-word`
//! lines.

use std::collections::HashMap;

use crate::algebra::{Permutation, PrefixCodeMap};
use crate::error::{Error, Result, Violation};
use crate::machine::{Mode, StateId, Transducer};
use crate::words::{Alphabet, Letter, PrefixCode, Word};

pub const HEADER: &str = "cantor-transducer";
pub const VERSION: &str = "1";

/// Writes the document for `t`. Missing transitions are omitted.
pub fn serialize(t: &Transducer) -> String {
    let mut s = String::new();
    s.push_str(HEADER);
    s.push(' ');
    s.push_str(VERSION);
    s.push('\n');
    match t.mode() {
        Mode::Initial { alphabet, .. } => s.push_str(&format!("alphabet n={} r={}\n", alphabet.n(), alphabet.r())),
        Mode::Core { n } => s.push_str(&format!("alphabet n={n} core\n")),
    }
    s.push_str("states");
    for name in t.names() {
        s.push(' ');
        s.push_str(name);
    }
    s.push('\n');
    if let Some(q0) = t.initial() {
        s.push_str(&format!("initial {}\n", t.name(q0)));
    }
    for q in t.states() {
        for x in t.letters_of(q) {
            if let Some(tr) = t.transition(q, x) {
                s.push_str(&transition_line(t.name(q), x, t.name(tr.target), &tr.output));
            }
        }
    }
    s
}

pub(crate) fn transition_line(source: &str, letter: Letter, target: &str, output: &Word) -> String {
    format!("{source} {letter} -> {target} : {output}\n")
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    let mut column = 0;
    let mut start_column = 0;
    for (i, c) in body.char_indices() {
        column += 1;
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &body[s..i], column: start_column });
            }
        } else if start.is_none() {
            start = Some(i);
            start_column = column;
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &body[s..], column: start_column });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn parse_alphabet(toks: &[Token<'_>], line: usize) -> Result<(u32, Option<u32>)> {
    let field = |t: &Token<'_>, key: &str| -> Result<u32> {
        t.text
            .strip_prefix(key)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| syntax(line, t.column, format!("expected `{key}<number>`, found `{}`", t.text)))
    };
    match toks {
        [_, n, last] => {
            let n = field(n, "n=")?;
            if last.text == "core" {
                if n < 2 {
                    return Err(syntax(line, toks[1].column, "need at least two digits"));
                }
                Ok((n, None))
            } else {
                Ok((n, Some(field(last, "r=")?)))
            }
        }
        _ => Err(syntax(line, toks[0].column, "expected `alphabet n=<n> r=<r>` or `alphabet n=<n> core`")),
    }
}

fn parse_word_tokens(toks: &[Token<'_>], line: usize) -> Result<Word> {
    if toks.len() == 1 && toks[0].text == "-" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for t in toks {
        let l: Letter = t.text.parse().map_err(|_| syntax(line, t.column, format!("bad letter `{}`", t.text)))?;
        if l.is_root() && !letters.is_empty() {
            return Err(syntax(line, t.column, "a root letter may only start a word"));
        }
        letters.push(l);
    }
    Ok(Word::new(letters)?)
}

struct Line {
    source: String,
    letter: Letter,
    target: String,
    output: Word,
    line: usize,
    columns: [usize; 3],
}

/// Parses a document without checking the non-degeneracy rules.
pub fn parse_unchecked(text: &str) -> Result<Transducer> {
    parse_with_lines(text).map(|(t, _)| t)
}

/// Parses and validates a document; violations are reported against the
/// lines they concern.
pub fn parse(text: &str) -> Result<Transducer> {
    let (t, lines) = parse_with_lines(text)?;
    let violations = t.validate();
    if violations.is_empty() {
        return Ok(t);
    }
    Err(Error::Document(violations.iter().map(|v| describe_violation(&t, v, &lines)).collect()))
}

/// Source lines of each transition and each state's first mention.
struct LineMap {
    transitions: HashMap<(StateId, Letter), usize>,
    states: Vec<usize>,
}

fn describe_violation(t: &Transducer, v: &Violation, lines: &LineMap) -> String {
    let line = match (v.state, v.letter) {
        (Some(q), Some(x)) => lines.transitions.get(&(q, x)).copied().unwrap_or(lines.states[q]),
        (Some(q), None) => lines.states[q],
        _ => 0,
    };
    let mut s = format!("line {line}: {}", v.kind.describe());
    match (v.state, v.letter) {
        (Some(q), Some(x)) => s.push_str(&format!(" (state {}, letter {x})", t.name(q))),
        (Some(q), None) => s.push_str(&format!(" (state {})", t.name(q))),
        _ => {}
    }
    if !v.detail.is_empty() {
        s.push_str(": ");
        s.push_str(&v.detail);
    }
    s
}

fn parse_with_lines(text: &str) -> Result<(Transducer, LineMap)> {
    let mut header = false;
    let mut alphabet: Option<(u32, Option<u32>)> = None;
    let mut declared: Option<Vec<String>> = None;
    let mut initial: Option<(String, usize, usize)> = None;
    let mut names: Vec<String> = Vec::new();
    let mut first_use: Vec<usize> = Vec::new();
    let mut index: HashMap<String, StateId> = HashMap::new();
    let mut transitions: Vec<Line> = Vec::new();
    let mut last_line = 0;

    fn mention(
        index: &mut HashMap<String, StateId>,
        names: &mut Vec<String>,
        first_use: &mut Vec<usize>,
        name: &str,
        line: usize,
    ) -> StateId {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            first_use.push(line);
            names.len() - 1
        })
    }

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };
        if !header {
            if first.text != HEADER || toks.len() != 2 {
                return Err(syntax(line, first.column, format!("expected `{HEADER} {VERSION}`")));
            }
            if toks[1].text != VERSION {
                return Err(syntax(line, toks[1].column, format!("unsupported version `{}`", toks[1].text)));
            }
            header = true;
            continue;
        }
        let directive_allowed = transitions.is_empty();
        match first.text {
            "alphabet" | "states" | "initial" if !directive_allowed => {
                return Err(syntax(line, first.column, format!("`{}` must precede transitions", first.text)));
            }
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax(line, first.column, "duplicate `alphabet`"));
                }
                alphabet = Some(parse_alphabet(&toks, line)?);
            }
            "states" => {
                if declared.is_some() || !names.is_empty() {
                    return Err(syntax(line, first.column, "duplicate `states`"));
                }
                for t in &toks[1..] {
                    if names.iter().any(|n| n == t.text) {
                        return Err(syntax(line, t.column, format!("state `{}` declared twice", t.text)));
                    }
                    mention(&mut index, &mut names, &mut first_use, t.text, line);
                }
                declared = Some(names.clone());
            }
            "initial" => {
                if initial.is_some() {
                    return Err(syntax(line, first.column, "duplicate `initial`"));
                }
                let [_, name] = toks.as_slice() else {
                    return Err(syntax(line, first.column, "expected `initial <state>`"));
                };
                initial = Some((name.text.to_string(), line, name.column));
            }
            _ => {
                if alphabet.is_none() {
                    return Err(syntax(line, first.column, "`alphabet` must come first"));
                }
                if toks.len() < 6 || toks[2].text != "->" || toks[4].text != ":" {
                    return Err(syntax(line, first.column, "expected `<state> <letter> -> <target> : <word>`"));
                }
                let letter: Letter = toks[1]
                    .text
                    .parse()
                    .map_err(|_| syntax(line, toks[1].column, format!("bad letter `{}`", toks[1].text)))?;
                let output = parse_word_tokens(&toks[5..], line)?;
                transitions.push(Line {
                    source: toks[0].text.to_string(),
                    letter,
                    target: toks[3].text.to_string(),
                    output,
                    line,
                    columns: [toks[0].column, toks[1].column, toks[3].column],
                });
            }
        }
    }

    if !header {
        return Err(syntax(last_line.max(1), 1, format!("missing `{HEADER} {VERSION}` header")));
    }
    let Some((n, r)) = alphabet else {
        return Err(syntax(last_line.max(1), 1, "missing `alphabet` line"));
    };

    let initial_state = match (&initial, r) {
        (Some((name, line, column)), Some(_)) => {
            if declared.is_some() && !index.contains_key(name) {
                return Err(syntax(*line, *column, format!("undeclared state `{name}`")));
            }
            Some(mention(&mut index, &mut names, &mut first_use, name, *line))
        }
        (None, Some(_)) => return Err(syntax(last_line.max(1), 1, "missing `initial` line")),
        (Some((_, line, column)), None) => {
            return Err(syntax(*line, *column, "core machines have no initial state"));
        }
        (None, None) => None,
    };
    for tr in &transitions {
        for (name, column) in [(&tr.source, tr.columns[0]), (&tr.target, tr.columns[2])] {
            if declared.is_some() && !index.contains_key(name.as_str()) {
                return Err(syntax(tr.line, column, format!("undeclared state `{name}`")));
            }
            mention(&mut index, &mut names, &mut first_use, name, tr.line);
        }
    }
    if names.is_empty() {
        return Err(syntax(last_line.max(1), 1, "no states"));
    }

    let mut t = match (r, initial_state) {
        (Some(r), Some(q0)) => {
            let a = Alphabet::new(n, r).map_err(|e| syntax(1, 1, e.to_string()))?;
            Transducer::new_initial(a, names.len(), q0)
        }
        _ => Transducer::new_core(n, names.len()),
    }
    .with_names(names.clone());

    let mut lines = LineMap { transitions: HashMap::new(), states: first_use.clone() };
    for tr in transitions {
        let q = index[&tr.source];
        let target = index[&tr.target];
        if t.letter_index(q, tr.letter).is_none() {
            return Err(syntax(tr.line, tr.columns[1], format!("state `{}` does not read `{}`", tr.source, tr.letter)));
        }
        if let Some(&earlier) = lines.transitions.get(&(q, tr.letter)) {
            return Err(syntax(
                tr.line,
                tr.columns[1],
                format!("transition of `{}` on `{}` already given on line {earlier}", tr.source, tr.letter),
            ));
        }
        lines.transitions.insert((q, tr.letter), tr.line);
        t.set(q, tr.letter, tr.output, target)?;
    }
    Ok((t, lines))
}

/// Writes a prefix-code map as an alphabet line and one `domain -> range`
/// line per pair.
pub fn serialize_prefix_code_map(m: &PrefixCodeMap) -> String {
    let mut s = format!("alphabet n={} r={}\n", m.alphabet().n(), m.alphabet().r());
    for (x, y) in m.pairs() {
        s.push_str(&format!("{x} -> {y}\n"));
    }
    s
}

pub fn parse_prefix_code_map(text: &str) -> Result<PrefixCodeMap> {
    let mut alphabet = None;
    let mut domain = Vec::new();
    let mut range = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };
        if alphabet.is_none() {
            if first.text != "alphabet" {
                return Err(syntax(line, first.column, "expected `alphabet n=<n> r=<r>`"));
            }
            let (n, r) = parse_alphabet(&toks, line)?;
            let r = r.ok_or_else(|| syntax(line, toks[2].column, "prefix-code maps need a root count"))?;
            alphabet = Some(Alphabet::new(n, r).map_err(|e| syntax(line, first.column, e.to_string()))?);
            continue;
        }
        let Some(arrow) = toks.iter().position(|t| t.text == "->") else {
            return Err(syntax(line, first.column, "expected `<domain word> -> <range word>`"));
        };
        if arrow == 0 || arrow + 1 == toks.len() {
            return Err(syntax(line, toks[arrow].column, "both sides of `->` need a word"));
        }
        domain.push(parse_word_tokens(&toks[..arrow], line)?);
        range.push(parse_word_tokens(&toks[arrow + 1..], line)?);
    }
    let alphabet = alphabet.ok_or_else(|| syntax(1, 1, "missing `alphabet` line"))?;
    PrefixCodeMap::new(alphabet, PrefixCode(domain), PrefixCode(range))
}

/// Parses a permutation given by its images, e.g. `1 2 0`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let images = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| Error::Permutation(format!("bad image `{s}`"))))
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips_fixtures() {
        for text in fixtures::ALL {
            let t = parse(text).unwrap();
            let s = serialize(&t);
            assert_eq!(serialize(&parse(&s).unwrap()), s);
            assert_eq!(parse(&s).unwrap(), t);
        }
    }

    #[test]
    fn binary_involution_has_four_states() {
        let t = parse(fixtures::BINARY_INVOLUTION).unwrap();
        assert_eq!(t.state_count(), 4);
        assert!(t.is_valid());
    }

    #[test]
    fn missing_transition_names_state_and_letter() {
        let text = "cantor-transducer 1\nalphabet n=2 core\na 0 -> a : 0\n";
        let Err(Error::Document(msgs)) = parse(text) else { panic!() };
        assert_eq!(msgs.len(), 1);
        assert!(msgs[0].contains("state a, letter 1"), "{}", msgs[0]);
        assert!(msgs[0].starts_with("line 3"), "{}", msgs[0]);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let bad = [
            ("", 1, 1),
            ("cantor-transducer 2\n", 1, 19),
            ("cantor-transducer 1\nalphabet n=2 q=1\n", 2, 14),
            ("cantor-transducer 1\nalphabet n=2 core\na 0 => a : 0\n", 3, 1),
            ("cantor-transducer 1\nalphabet n=2 core\na x -> a : 0\n", 3, 3),
            ("cantor-transducer 1\nalphabet n=2 core\na 0 -> a : 0 .1\n", 3, 14),
            ("cantor-transducer 1\nalphabet n=2 core\nstates a\na 0 -> b : 0\n", 4, 8),
            ("cantor-transducer 1\nalphabet n=2 core\na 0 -> a : 0\na 0 -> a : 1\n", 4, 3),
            ("cantor-transducer 1\nalphabet n=2 core\na .0 -> a : 0\n", 3, 3),
            ("cantor-transducer 1\nalphabet n=2 r=1\na 0 -> a : 0\n", 3, 1),
        ];
        for (text, line, column) in bad {
            match parse(text) {
                Err(Error::Syntax { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_implicit_states() {
        let text = "# identity\ncantor-transducer 1\nalphabet n=2 r=1\ninitial s\ns .0 -> t : .0  # root\nt 0 -> t : 0\nt 1 -> t : 1\n";
        let t = parse(text).unwrap();
        assert_eq!(t.names(), ["s", "t"]);
        assert_eq!(t.initial(), Some(0));
    }

    #[test]
    fn prefix_map_round_trip() {
        let text = "alphabet n=2 r=1\n.0 0 -> .0 0 0\n.0 1 0 -> .0 0 1\n.0 1 1 -> .0 1\n";
        let m = parse_prefix_code_map(text).unwrap();
        assert_eq!(serialize_prefix_code_map(&m), text);
        assert!(parse_prefix_code_map("alphabet n=2 r=1\n.0 0 -> .0\n").is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(parse_permutation("1 2 0").unwrap().images(), [1, 2, 0]);
        assert_eq!(parse_permutation("1,0").unwrap().images(), [1, 0]);
        assert!(parse_permutation("1 1").is_err());
    }
}
