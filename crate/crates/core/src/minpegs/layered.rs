//! Shortest paths through a layered DAG over automaton states × board
//! positions.
//!
//! Vertex `(a, i)` is automaton state `a` after reading `i` cells. Symbol
//! arcs go from layer `i` to `i + 1` on cell `c_i`; restart arcs stay inside
//! a layer. Restart arcs are never materialized per layer: one relaxation
//! pass per layer, in a fixed scan order, stands in for them. Every arc has
//! length 1, so a path ending at layer `n` that used `k` restart arcs has
//! length `n + k`.
//!
//! Only checkpoint layers are kept during the forward scan. The optimal path
//! is recovered block by block, recomputing predecessors inside one block at
//! a time, which keeps memory at O(S * sqrt(n)) for `S` states.

pub type StateId = u32;

/// The automaton side of a layered DAG.
#[derive(Clone, Debug)]
pub struct LayeredDag {
    symbol: Vec<[Vec<StateId>; 2]>,
    restart: Vec<Vec<StateId>>,
    order: Vec<StateId>,
    source: StateId,
    finals: Vec<bool>,
}

/// A restart arc `(from, position) -> (to, position)` on a chosen path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestartArc {
    pub position: usize,
    pub from: StateId,
    pub to: StateId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    /// Number of arcs: `n` symbol arcs plus one per restart.
    pub length: usize,
    pub restarts: Vec<RestartArc>,
    pub end: StateId,
}

const INF: u32 = u32::MAX;

// Distance, then the two most recent restart positions (plus one; zero means
// none). Among equally short paths the one whose last restarts are latest
// wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Label {
    dist: u32,
    last: u32,
    prev: u32,
}

const UNREACHED: Label = Label {
    dist: INF,
    last: 0,
    prev: 0,
};

impl Label {
    fn beats(self, other: Label) -> bool {
        self.dist < other.dist
            || (self.dist == other.dist && (self.last, self.prev) > (other.last, other.prev))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pred {
    None,
    Symbol(StateId),
    Restart(StateId),
}

impl LayeredDag {
    /// `order` must list every state so that each restart arc points
    /// forward in it.
    pub fn new(
        symbol: Vec<[Vec<StateId>; 2]>,
        restart: Vec<Vec<StateId>>,
        order: Vec<StateId>,
        source: StateId,
        finals: Vec<bool>,
    ) -> LayeredDag {
        let n = symbol.len();
        assert_eq!(restart.len(), n);
        assert_eq!(order.len(), n);
        assert_eq!(finals.len(), n);
        let mut rank = vec![usize::MAX; n];
        for (r, &s) in order.iter().enumerate() {
            rank[s as usize] = r;
        }
        for (u, targets) in restart.iter().enumerate() {
            for &v in targets {
                assert!(
                    rank[u] < rank[v as usize],
                    "restart arc {u} -> {v} breaks the scan order"
                );
            }
        }
        LayeredDag {
            symbol,
            restart,
            order,
            source,
            finals,
        }
    }

    pub fn num_states(&self) -> usize {
        self.symbol.len()
    }

    pub fn source(&self) -> StateId {
        self.source
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s as usize]
    }

    /// Vertices of the full DAG for an input of `n` cells.
    pub fn vertex_count(&self, n: usize) -> usize {
        self.num_states() * (n + 1)
    }

    /// Arcs of the full DAG for `input`, restart arcs counted in every layer.
    pub fn arc_count(&self, input: &[u8]) -> usize {
        let per_layer: usize = self.restart.iter().map(Vec::len).sum();
        let symbol: usize = input
            .iter()
            .map(|&c| {
                self.symbol
                    .iter()
                    .map(|row| row[c as usize].len())
                    .sum::<usize>()
            })
            .sum();
        symbol + per_layer * (input.len() + 1)
    }

    fn relax_restarts(&self, layer: &mut [Label], position: usize, mut preds: Option<&mut [Pred]>) {
        let mark = position as u32 + 1;
        for &u in &self.order {
            let from = layer[u as usize];
            if from.dist == INF {
                continue;
            }
            for &v in &self.restart[u as usize] {
                let cand = Label {
                    dist: from.dist + 1,
                    last: mark,
                    prev: from.last,
                };
                if cand.beats(layer[v as usize]) {
                    layer[v as usize] = cand;
                    if let Some(p) = preds.as_deref_mut() {
                        p[v as usize] = Pred::Restart(u);
                    }
                }
            }
        }
    }

    fn advance(&self, from: &[Label], sym: u8, to: &mut [Label], mut preds: Option<&mut [Pred]>) {
        to.fill(UNREACHED);
        if let Some(p) = preds.as_deref_mut() {
            p.fill(Pred::None);
        }
        for (u, label) in from.iter().enumerate() {
            if label.dist == INF {
                continue;
            }
            let cand = Label {
                dist: label.dist + 1,
                ..*label
            };
            for &v in &self.symbol[u][sym as usize] {
                if cand.beats(to[v as usize]) {
                    to[v as usize] = cand;
                    if let Some(p) = preds.as_deref_mut() {
                        p[v as usize] = Pred::Symbol(u as StateId);
                    }
                }
            }
        }
    }

    fn first_layer(&self, preds: Option<&mut [Pred]>) -> Vec<Label> {
        let mut layer = vec![UNREACHED; self.num_states()];
        layer[self.source as usize] = Label {
            dist: 0,
            last: 0,
            prev: 0,
        };
        self.relax_restarts(&mut layer, 0, preds);
        layer
    }

    /// Shortest path from `(source, 0)` to any final state at layer `n`,
    /// or `None` when no such path exists.
    pub fn shortest_path(&self, input: &[u8]) -> Option<Path> {
        let n = input.len();
        let s = self.num_states();
        let block = ((n as f64).sqrt() as usize).max(64);

        let mut checkpoints = vec![self.first_layer(None)];
        let mut cur = checkpoints[0].clone();
        let mut next = vec![UNREACHED; s];
        for (i, &sym) in input.iter().enumerate() {
            self.advance(&cur, sym, &mut next, None);
            self.relax_restarts(&mut next, i + 1, None);
            std::mem::swap(&mut cur, &mut next);
            if (i + 1) % block == 0 {
                checkpoints.push(cur.clone());
            }
        }

        let mut end: Option<StateId> = None;
        for &q in &self.order {
            let lbl = cur[q as usize];
            if self.finals[q as usize]
                && lbl.dist != INF
                && end.is_none_or(|e| lbl.beats(cur[e as usize]))
            {
                end = Some(q);
            }
        }
        let end = end?;
        let length = cur[end as usize].dist as usize;

        let mut restarts = Vec::new();
        let mut layer = n;
        let mut state = end;
        let mut preds = vec![Pred::None; s * block];
        let mut scratch_a = vec![UNREACHED; s];
        let mut scratch_b = vec![UNREACHED; s];
        while layer > 0 {
            let blk = (layer - 1) / block;
            let base = blk * block;
            scratch_a.copy_from_slice(&checkpoints[blk]);
            for l in base + 1..=layer {
                let row = &mut preds[(l - base - 1) * s..(l - base) * s];
                self.advance(&scratch_a, input[l - 1], &mut scratch_b, Some(row));
                self.relax_restarts(&mut scratch_b, l, Some(row));
                std::mem::swap(&mut scratch_a, &mut scratch_b);
            }
            while layer > base {
                match preds[(layer - base - 1) * s + state as usize] {
                    Pred::Restart(u) => {
                        restarts.push(RestartArc {
                            position: layer,
                            from: u,
                            to: state,
                        });
                        state = u;
                    }
                    Pred::Symbol(u) => {
                        layer -= 1;
                        state = u;
                    }
                    Pred::None => unreachable!("reached vertex without predecessor"),
                }
            }
        }
        let mut layer0 = vec![Pred::None; s];
        self.first_layer(Some(&mut layer0));
        while let Pred::Restart(u) = layer0[state as usize] {
            restarts.push(RestartArc {
                position: 0,
                from: u,
                to: state,
            });
            state = u;
        }
        debug_assert_eq!(state, self.source);
        restarts.reverse();
        Some(Path {
            length,
            restarts,
            end,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Two states: 0 = start, 1 = "just read a 1". Restart 1 -> 0 counts ones.
    fn ones_counter() -> LayeredDag {
        LayeredDag::new(
            vec![[vec![0], vec![1]], [vec![], vec![]]],
            vec![vec![], vec![0]],
            vec![1, 0],
            0,
            vec![true, false],
        )
    }

    #[test]
    fn path_length_counts_restarts() {
        let dag = ones_counter();
        let input = [1, 0, 1, 1, 0];
        let path = dag.shortest_path(&input).unwrap();
        assert_eq!(path.length, input.len() + 3);
        let at: Vec<usize> = path.restarts.iter().map(|r| r.position).collect();
        assert_eq!(at, [1, 3, 4]);
    }

    #[test]
    fn long_inputs_cross_checkpoints() {
        let dag = ones_counter();
        let input: Vec<u8> = (0..10_000).map(|i| u8::from(i % 7 == 3)).collect();
        let ones = input.iter().filter(|&&b| b == 1).count();
        let path = dag.shortest_path(&input).unwrap();
        assert_eq!(path.length, input.len() + ones);
        assert_eq!(path.restarts.len(), ones);
        for r in &path.restarts {
            assert_eq!(input[r.position - 1], 1);
        }
    }

    #[test]
    fn unreachable_finals() {
        let dag = LayeredDag::new(
            vec![[vec![], vec![0]]],
            vec![vec![]],
            vec![0],
            0,
            vec![true],
        );
        assert!(dag.shortest_path(&[1, 0]).is_none());
        assert_eq!(dag.shortest_path(&[]).unwrap().length, 0);
    }

    #[test]
    #[should_panic(expected = "scan order")]
    fn rejects_backward_restart() {
        LayeredDag::new(
            vec![[vec![], vec![]], [vec![], vec![]]],
            vec![vec![], vec![0]],
            vec![0, 1],
            0,
            vec![true, true],
        );
    }
}
