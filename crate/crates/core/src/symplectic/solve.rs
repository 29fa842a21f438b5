use std::collections::BTreeMap;

use super::{a_lattice, dec_lattice, kn_lattice, l_inv, l_map, legal_moves, Board, BoardKind, DominoMove, Partition};
use crate::digraph::Color;
use crate::error::{Error, Result};
use crate::lattice::DiamondLattice;
use crate::puzzle::{self, Direction, PathCertificate, Via, Walk};

/// The lattice that `l_map` identifies with the board's puzzle digraph.
pub fn board_lattice(kind: BoardKind, k: usize, n: usize) -> Result<DiamondLattice<Partition>> {
    match kind {
        BoardKind::Full => a_lattice(k, n),
        BoardKind::Staircase => kn_lattice(k, n),
        BoardKind::Ballot => dec_lattice(k, n),
    }
}

/// Re-derive each step of `walk` as a legal domino move; a downward step is
/// a move from its end back to its start.
pub fn replay_dominoes(board: &Board, start: &Partition, walk: &Walk<Partition>) -> Result<Vec<DominoMove>> {
    if walk.sequence.first() != Some(start) {
        return Err(Error::Inconsistent("walk does not start at the given partition".into()));
    }
    let mut out = Vec::with_capacity(walk.len());
    for (pair, &(color, dir)) in walk.sequence.windows(2).zip(&walk.color_trace) {
        let (from, to) = match dir {
            Direction::Up => (&pair[0], &pair[1]),
            Direction::Down => (&pair[1], &pair[0]),
        };
        let mv = legal_moves(board, from)?
            .into_iter()
            .find(|m| m.result == *to && m.color == color)
            .ok_or_else(|| Error::Inconsistent(format!("no domino move {} -> {} of color {}", from, to, color)))?;
        out.push(mv);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct DominoSolution {
    pub distance: u32,
    pub color_counts: BTreeMap<Color, u32>,
    pub path: PathCertificate<Partition>,
    /// Moves in walk order; downward steps are listed as the forward move they undo.
    pub moves: Vec<DominoMove>,
}

/// Optimal domino solution through `l_map`, where join and meet are
/// component-wise and rank is the size of the partition.
pub fn solve_domino(
    kind: BoardKind,
    k: usize,
    n: usize,
    s: &Partition,
    t: &Partition,
    via: Via,
) -> Result<DominoSolution> {
    let board = Board::new(kind, k, n)?;
    for y in [s, t] {
        if y.k() != k || !board.fits(y) {
            return Err(Error::InvalidObject(format!("{} is not a partition of the {:?} board", y, kind)));
        }
    }
    let l = board_lattice(kind, k, n)?;
    let (x, y) = (l_map(s, k, n)?, l_map(t, k, n)?);
    let join: u32 = x.0.iter().zip(&y.0).map(|(a, b)| *a.max(b)).sum();
    let meet: u32 = x.0.iter().zip(&y.0).map(|(a, b)| *a.min(b)).sum();
    let distance = 2 * join - x.size() - y.size();
    if distance != x.size() + y.size() - 2 * meet {
        return Err(Error::Inconsistent("rank formulas disagree".into()));
    }
    let (si, ti) = (l.index_of(&x)?, l.index_of(&y)?);
    let cert = puzzle::shortest_path_idx(&l, si, ti, via)?;
    let color_counts = puzzle::color_counts_idx(&l, si, ti)?;
    let path = cert.map(|p| l_inv(p, k, n).expect("lattice partition"));
    let moves = replay_dominoes(&board, s, &path.walk)?;
    if moves.len() as u32 != distance || path.walk.sequence.last() != Some(t) {
        return Err(Error::Inconsistent("certificate does not replay".into()));
    }
    Ok(DominoSolution { distance, color_counts, path, moves })
}
