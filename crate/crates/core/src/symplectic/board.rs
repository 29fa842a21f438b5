use std::fmt::Write as _;

use super::{partitions_in_box, Partition};
use crate::digraph::{Color, ColoredDigraph};
use crate::error::{Error, Result};

/// `(row, column)`, 1-based, matrix orientation.
pub type Square = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoardKind {
    Full,
    Ballot,
    Staircase,
}

/// The `k × (2n-k)` domino board of the given kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Board {
    pub kind: BoardKind,
    pub k: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    Remove,
    Add,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoMove {
    pub kind: MoveKind,
    pub squares: Vec<Square>,
    pub color: Color,
    pub result: Partition,
}

impl Board {
    pub fn new(kind: BoardKind, k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidObject(format!("need 1 <= k <= n, got k={} n={}", k, n)));
        }
        Ok(Self { kind, k, n })
    }

    pub fn width(&self) -> usize {
        2 * self.n - self.k
    }

    pub fn contains(&self, (r, c): Square) -> bool {
        let w = self.width();
        if r < 1 || r > self.k || c < 1 || c > w {
            return false;
        }
        match self.kind {
            BoardKind::Full => true,
            BoardKind::Ballot => c + r <= w + 1,
            BoardKind::Staircase => c + r > self.k,
        }
    }

    /// Checkering anchored at a red north-east corner.
    pub fn is_red(&self, (r, c): Square) -> bool {
        (r + c) % 2 == (1 + self.width()) % 2
    }

    /// Removing-diagonal index of a red square: `col - row = 2i - k - 1`.
    pub fn removing_diag(&self, sq: Square) -> Option<u32> {
        if !self.contains(sq) || !self.is_red(sq) {
            return None;
        }
        let (r, c) = sq;
        Some(((c + self.k + 1 - r) / 2) as u32)
    }

    /// Adding-diagonal label of a white square: `col - row = 2i - k`, with
    /// index `i` relabelled `2n - i` on the full board.
    pub fn adding_diag(&self, sq: Square) -> Option<u32> {
        if !self.contains(sq) || self.is_red(sq) {
            return None;
        }
        let (r, c) = sq;
        let i = ((c + self.k - r) / 2) as u32;
        Some(match self.kind {
            BoardKind::Full => 2 * self.n as u32 - i,
            _ => i,
        })
    }

    /// Whether `p` is an object of this puzzle.
    pub fn fits(&self, p: &Partition) -> bool {
        p.fits(self.k, self.n)
            && match self.kind {
                BoardKind::Full => true,
                BoardKind::Ballot => p.is_ballot(self.n),
                BoardKind::Staircase => p.is_staircase(),
            }
    }

    pub fn partitions(&self) -> Vec<Partition> {
        partitions_in_box(self.k, self.width()).into_iter().filter(|p| self.fits(p)).collect()
    }

    /// ASCII grid: `R`/`W` checkering followed by the diagonal label.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.k {
            let cells: Vec<String> = (1..=self.width())
                .map(|c| {
                    let sq = (r, c);
                    if !self.contains(sq) {
                        "  . ".to_string()
                    } else if self.is_red(sq) {
                        format!("R{:<2} ", self.removing_diag(sq).unwrap())
                    } else {
                        format!("W{:<2} ", self.adding_diag(sq).unwrap())
                    }
                })
                .collect();
            writeln!(out, "{}", cells.concat().trim_end()).unwrap();
        }
        out
    }
}

/// Every legal removal and addition on `p`.
pub fn legal_moves(board: &Board, p: &Partition) -> Result<Vec<DominoMove>> {
    if !board.fits(p) {
        return Err(Error::InvalidObject(format!("{} does not fit the board", p)));
    }
    let k = board.k;
    let w = board.width();
    let mut out = Vec::new();
    let mut push = |kind: MoveKind, squares: Vec<Square>, color: Option<u32>, parts: Vec<u32>| {
        let result = Partition(parts);
        if let Some(color) = color {
            if squares.iter().all(|&s| board.contains(s)) && board.fits(&result) {
                out.push(DominoMove { kind, squares, color, result });
            }
        }
    };
    for r in 1..=k {
        let len = p.part(r) as usize;
        if len >= 2 {
            let (a, b) = ((r, len - 1), (r, len));
            if board.is_red(a) {
                let mut q = p.0.clone();
                q[r - 1] -= 2;
                push(MoveKind::Remove, vec![a, b], board.removing_diag(a), q);
            }
        }
        if r < k && len >= 1 && p.part(r + 1) as usize == len {
            let (a, b) = ((r, len), (r + 1, len));
            if board.is_red(b) {
                let mut q = p.0.clone();
                q[r - 1] -= 1;
                q[r] -= 1;
                push(MoveKind::Remove, vec![a, b], board.removing_diag(b), q);
            }
        }
        if len + 2 <= w {
            let (a, b) = ((r, len + 1), (r, len + 2));
            if !board.is_red(a) {
                let mut q = p.0.clone();
                q[r - 1] += 2;
                push(MoveKind::Add, vec![a, b], board.adding_diag(a), q);
            }
        }
        if r < k && len < w && p.part(r + 1) as usize == len {
            let (a, b) = ((r, len + 1), (r + 1, len + 1));
            if board.is_red(a) {
                let mut q = p.0.clone();
                q[r - 1] += 1;
                q[r] += 1;
                push(MoveKind::Add, vec![a, b], board.adding_diag(b), q);
            }
        }
    }
    if p.part(1) as usize == w {
        let mut q = p.0.clone();
        q[0] -= 1;
        push(MoveKind::Remove, vec![(1, w)], Some(board.n as u32), q);
    }
    Ok(out)
}

/// Puzzle digraph: vertices are the board's partitions, edges its legal moves.
pub fn domino_digraph(kind: BoardKind, k: usize, n: usize) -> Result<ColoredDigraph<Partition>> {
    let board = Board::new(kind, k, n)?;
    let verts = board.partitions();
    let mut g = ColoredDigraph::new(verts.iter().cloned())?;
    for (s, p) in verts.iter().enumerate() {
        for m in legal_moves(&board, p)? {
            let t = g.require(&m.result)?;
            g.add_edge(s, t, m.color)?;
        }
    }
    Ok(g)
}
