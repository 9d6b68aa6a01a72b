//! Regular expressions over the board alphabet {0, 1}.

use std::fmt;

/// Expression tree. `Plus` is kept as its own node rather than being
/// rewritten to `w w*`; the rewrite happens when building the NFA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Sym(u8),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
}

impl Regex {
    /// A literal word such as `"1011"`.
    pub fn word(text: &str) -> Regex {
        let syms: Vec<Regex> = text
            .bytes()
            .map(|b| match b {
                b'0' => Regex::Sym(0),
                b'1' => Regex::Sym(1),
                _ => panic!("regex literals use only '0' and '1'"),
            })
            .collect();
        if syms.len() == 1 {
            syms.into_iter().next().unwrap()
        } else {
            Regex::Concat(syms)
        }
    }

    pub fn star(self) -> Regex {
        Regex::Star(Box::new(self))
    }

    pub fn plus(self) -> Regex {
        Regex::Plus(Box::new(self))
    }

    /// Brute-force membership by structural recursion. Exponential in the
    /// worst case; used only to cross-check automata on short strings.
    pub fn matches(&self, input: &[u8]) -> bool {
        self.ends(input, 0).contains(&input.len())
    }

    // Every end offset reachable by matching `self` starting at `start`.
    fn ends(&self, input: &[u8], start: usize) -> Vec<usize> {
        let mut out = match self {
            Regex::Sym(s) => {
                if input.get(start) == Some(s) {
                    vec![start + 1]
                } else {
                    vec![]
                }
            }
            Regex::Concat(parts) => {
                let mut cur = vec![start];
                for p in parts {
                    let mut next: Vec<usize> = cur.iter().flat_map(|&i| p.ends(input, i)).collect();
                    next.sort_unstable();
                    next.dedup();
                    cur = next;
                }
                cur
            }
            Regex::Union(alts) => alts.iter().flat_map(|a| a.ends(input, start)).collect(),
            Regex::Star(inner) | Regex::Plus(inner) => {
                let mut seen = vec![false; input.len() + 1];
                let mut frontier = vec![start];
                let mut reached = Vec::new();
                if matches!(self, Regex::Star(_)) {
                    seen[start] = true;
                    reached.push(start);
                }
                while let Some(i) = frontier.pop() {
                    for j in inner.ends(input, i) {
                        if !seen[j] {
                            seen[j] = true;
                            reached.push(j);
                            frontier.push(j);
                        }
                    }
                }
                reached
            }
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn atom(r: &Regex, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match r {
                Regex::Sym(_) => write!(f, "{r}"),
                _ => write!(f, "({r})"),
            }
        }
        match self {
            Regex::Sym(s) => write!(f, "{s}"),
            Regex::Concat(parts) => {
                for p in parts {
                    match p {
                        Regex::Union(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            Regex::Union(alts) => {
                for (i, a) in alts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{a}")?;
                }
                Ok(())
            }
            Regex::Star(inner) => {
                atom(inner, f)?;
                f.write_str("*")
            }
            Regex::Plus(inner) => {
                atom(inner, f)?;
                f.write_str("+")
            }
        }
    }
}

/// The single-peg-reducible words, without surrounding holes:
///
/// ```text
/// L = 1 + 011 + 110
///   + 11 (01)* [ 00 + 00 (11)+ + (11)+ 00 + (11)* 1011 + 1101 (11)* ] (10)* 11
///   + 11 (01)* (11)* 01
///   + 10 (11)* (10)* 11
/// ```
pub fn core_language() -> Regex {
    use Regex as R;
    let w = R::word;
    let middle = R::Union(vec![
        w("00"),
        R::Concat(vec![w("00"), w("11").plus()]),
        R::Concat(vec![w("11").plus(), w("00")]),
        R::Concat(vec![w("11").star(), w("1011")]),
        R::Concat(vec![w("1101"), w("11").star()]),
    ]);
    R::Union(vec![
        w("1"),
        w("011"),
        w("110"),
        R::Concat(vec![
            w("11"),
            w("01").star(),
            middle,
            w("10").star(),
            w("11"),
        ]),
        R::Concat(vec![w("11"), w("01").star(), w("11").star(), w("01")]),
        R::Concat(vec![w("10"), w("11").star(), w("10").star(), w("11")]),
    ])
}

/// `0* L 0*`: every configuration that can be reduced to one peg.
pub fn solvable_language() -> Regex {
    Regex::Concat(vec![
        Regex::word("0").star(),
        core_language(),
        Regex::word("0").star(),
    ])
}
