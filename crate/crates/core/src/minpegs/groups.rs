//! Product automaton for splitting a board into independently reducible
//! groups of consecutive pegs.
//!
//! A group is a run of consecutive pegs whose window (first peg to last
//! peg) is one of:
//!
//! - `1`: a single peg that never moves;
//! - `11`: a pair, reduced by one hop into a hole beside it;
//! - a longer word of the core language: a block reduced in place, whose
//!   last peg ends strictly inside the window.
//!
//! Pairs may land in a cell that a neighbouring group has vacated, so the
//! automaton tracks which pair directions the gap to the left still admits.
//! Hops are played blocks first, then left-hopping pairs left to right, then
//! right-hopping pairs right to left.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use super::layered::{LayeredDag, StateId};
use crate::automaton::{regex, Dfa, Nfa};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Single,
    PairLeft,
    PairRight,
    Block,
}

// Which group kinds may start after the current gap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Allowed {
    All,
    NoPairLeft,
    BlockOrPairRight,
}

impl Allowed {
    fn admits(self, kind: GroupKind) -> bool {
        match self {
            Allowed::All => true,
            Allowed::NoPairLeft => kind != GroupKind::PairLeft,
            Allowed::BlockOrPairRight => matches!(kind, GroupKind::Block | GroupKind::PairRight),
        }
    }

    fn after_hole(self) -> Allowed {
        match self {
            Allowed::BlockOrPairRight => Allowed::NoPairLeft,
            _ => Allowed::All,
        }
    }

    fn after_group(kind: GroupKind) -> Allowed {
        match kind {
            GroupKind::Single => Allowed::NoPairLeft,
            GroupKind::PairRight => Allowed::BlockOrPairRight,
            GroupKind::PairLeft | GroupKind::Block => Allowed::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Window {
    One,
    Two,
    Longer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    // Before the first peg; `hole` once a leading hole has been read.
    Fresh {
        hole: bool,
    },
    Gap(Allowed),
    Group {
        allowed: Allowed,
        q: usize,
        window: Window,
        peg_last: bool,
    },
}

/// The layered DAG for group partitions, plus enough bookkeeping to read
/// group kinds off its restart arcs.
#[derive(Clone, Debug)]
pub struct GroupAutomaton {
    dag: LayeredDag,
    nodes: Vec<Node>,
}

impl GroupAutomaton {
    pub fn build() -> GroupAutomaton {
        let core = Dfa::minimal(&Nfa::from_regex(&regex::core_language()));
        let dead = core.dead_states();

        let mut ids: HashMap<Node, StateId> = HashMap::new();
        let mut nodes: Vec<Node> = Vec::new();
        let mut symbol: Vec<[Vec<StateId>; 2]> = Vec::new();
        let mut restart: Vec<Vec<StateId>> = Vec::new();
        let mut stack = Vec::new();

        let mut intern = |node: Node, nodes: &mut Vec<Node>, stack: &mut Vec<Node>| -> StateId {
            *ids.entry(node).or_insert_with(|| {
                nodes.push(node);
                stack.push(node);
                (nodes.len() - 1) as StateId
            })
        };

        let source = intern(Node::Fresh { hole: false }, &mut nodes, &mut stack);
        let mut edges: Vec<(StateId, [Option<Node>; 2], Vec<Node>)> = Vec::new();
        while let Some(node) = stack.pop() {
            let id = intern(node, &mut nodes, &mut stack);
            let open = |allowed: Allowed| Node::Group {
                allowed,
                q: core.step(core.start(), 1),
                window: Window::One,
                peg_last: true,
            };
            let (on0, on1, closes) = match node {
                Node::Fresh { hole } => {
                    let allowed = if hole {
                        Allowed::All
                    } else {
                        Allowed::NoPairLeft
                    };
                    (
                        Some(Node::Fresh { hole: true }),
                        Some(open(allowed)),
                        vec![],
                    )
                }
                Node::Gap(allowed) => (
                    Some(Node::Gap(allowed.after_hole())),
                    Some(open(allowed)),
                    vec![],
                ),
                Node::Group {
                    allowed,
                    q,
                    window,
                    peg_last,
                } => {
                    let grow = |sym: u8| {
                        let q = core.step(q, sym);
                        let window = match (window, sym) {
                            (Window::One, 1) => Window::Two,
                            _ => Window::Longer,
                        };
                        (!dead[q] || window != Window::Longer).then_some(Node::Group {
                            allowed,
                            q,
                            window,
                            peg_last: sym == 1,
                        })
                    };
                    let kinds: &[GroupKind] = match window {
                        _ if !peg_last => &[],
                        Window::One => &[GroupKind::Single],
                        Window::Two => &[GroupKind::PairLeft, GroupKind::PairRight],
                        Window::Longer if core.is_accepting(q) => &[GroupKind::Block],
                        Window::Longer => &[],
                    };
                    let closes = kinds
                        .iter()
                        .filter(|&&k| allowed.admits(k))
                        .map(|&k| Node::Gap(Allowed::after_group(k)))
                        .collect();
                    (grow(0), grow(1), closes)
                }
            };
            edges.push((id, [on0, on1], closes));
            let succ: Vec<Node> = edges.last().unwrap().1.iter().flatten().copied().collect();
            for n in succ.into_iter().chain(edges.last().unwrap().2.clone()) {
                intern(n, &mut nodes, &mut stack);
            }
        }

        symbol.resize(nodes.len(), [vec![], vec![]]);
        restart.resize(nodes.len(), vec![]);
        for (id, next, closes) in edges {
            for sym in 0..2 {
                if let Some(n) = next[sym] {
                    symbol[id as usize][sym].push(ids[&n]);
                }
            }
            for n in closes {
                restart[id as usize].push(ids[&n]);
            }
        }

        // Groups first so every close points forward in the scan.
        let mut order: Vec<StateId> = (0..nodes.len() as StateId).collect();
        order.sort_by_key(|&s| !matches!(nodes[s as usize], Node::Group { .. }));
        let finals = nodes
            .iter()
            .map(|n| matches!(n, Node::Gap(Allowed::All | Allowed::NoPairLeft)))
            .collect();
        GroupAutomaton {
            dag: LayeredDag::new(symbol, restart, order, source, finals),
            nodes,
        }
    }

    pub fn dag(&self) -> &LayeredDag {
        &self.dag
    }

    /// Kind of the group closed by the restart arc `from -> to`.
    pub fn kind_of(&self, from: StateId, to: StateId) -> GroupKind {
        let Node::Group { window, .. } = self.nodes[from as usize] else {
            panic!("restart arcs leave group states only");
        };
        match window {
            Window::One => GroupKind::Single,
            Window::Longer => GroupKind::Block,
            Window::Two => match self.nodes[to as usize] {
                Node::Gap(Allowed::BlockOrPairRight) => GroupKind::PairRight,
                _ => GroupKind::PairLeft,
            },
        }
    }
}
