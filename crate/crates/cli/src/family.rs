use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use anyhow::Result;
use clap::ValueEnum;
use latpuzzle_core::catalan::{enumerate_tilings, ming_digraph, search_isomorphism, solve_snakes, MingantuTiling};
use latpuzzle_core::minuscule::{binary_seqs, mixedmiddleswitch_digraph, solve_mixedmiddleswitch, BinarySeq};
use latpuzzle_core::symplectic::{domino_digraph, solve_domino, Board, BoardKind, MoveKind, Partition};
use latpuzzle_core::{Color, Vertex, Via};
use serde::Serialize;

use crate::Usage;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Mixedmiddleswitch,
    DominoBallot,
    DominoStaircase,
    DominoFull,
    Snakes,
}

impl Family {
    pub fn needs_k(self) -> bool {
        self.board_kind().is_some()
    }

    fn board_kind(self) -> Option<BoardKind> {
        match self {
            Family::DominoBallot => Some(BoardKind::Ballot),
            Family::DominoStaircase => Some(BoardKind::Staircase),
            Family::DominoFull => Some(BoardKind::Full),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Clone, Copy, Serialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.k {
            write!(f, "k={} ", k)?;
        }
        write!(f, "n={}", self.n)
    }
}

#[derive(Serialize)]
pub struct SolveReport {
    pub family: String,
    pub params: Params,
    pub distance: u32,
    pub color_counts: BTreeMap<Color, u32>,
    pub path: Vec<String>,
    #[serde(skip)]
    certificate: String,
    #[serde(skip)]
    moves: Vec<String>,
}

impl SolveReport {
    fn new<V: Vertex>(
        family: Family,
        params: Params,
        distance: u32,
        color_counts: BTreeMap<Color, u32>,
        path: &latpuzzle_core::PathCertificate<V>,
        moves: Vec<String>,
    ) -> Self {
        Self {
            family: family.to_string(),
            params,
            distance,
            color_counts,
            path: path.walk.sequence.iter().map(ToString::to_string).collect(),
            certificate: path.to_text(),
            moves,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.family, self.params).unwrap();
        let counts: Vec<String> = self.color_counts.iter().map(|(c, m)| format!("{}:{}", c, m)).collect();
        writeln!(out, "colors {}", counts.join(" ")).unwrap();
        out.push_str(&self.certificate);
        for m in &self.moves {
            writeln!(out, "  {}", m).unwrap();
        }
        out
    }
}

fn verb(kind: MoveKind) -> &'static str {
    match kind {
        MoveKind::Add => "add",
        MoveKind::Remove => "remove",
    }
}

pub fn solve(family: Family, p: Params, from: &str, to: &str, via: Via) -> Result<SolveReport> {
    let n = p.n;
    if let Some(kind) = family.board_kind() {
        let k = p.k.expect("checked by caller");
        let (s, t): (Partition, Partition) = (from.parse()?, to.parse()?);
        let sol = solve_domino(kind, k, n, &s, &t, via)?;
        let moves = sol
            .moves
            .iter()
            .map(|m| {
                let squares: Vec<String> = m.squares.iter().map(|(r, c)| format!("({},{})", r, c)).collect();
                format!("{} {} color {} -> {}", verb(m.kind), squares.join(" "), m.color, m.result)
            })
            .collect();
        return Ok(SolveReport::new(family, p, sol.distance, sol.color_counts, &sol.path, moves));
    }
    match family {
        Family::Mixedmiddleswitch => {
            let (s, t): (BinarySeq, BinarySeq) = (from.parse()?, to.parse()?);
            let sol = solve_mixedmiddleswitch(n, &s, &t, via)?;
            Ok(SolveReport::new(family, p, sol.distance, sol.color_counts, &sol.path, Vec::new()))
        }
        Family::Snakes => {
            let (s, t): (MingantuTiling, MingantuTiling) = (from.parse()?, to.parse()?);
            let sol = solve_snakes(n, &s, &t, via)?;
            let moves =
                sol.moves.iter().map(|m| format!("{} snake {} -> {}", verb(m.kind), m.snake, m.result)).collect();
            Ok(SolveReport::new(family, p, sol.distance, sol.color_counts, &sol.path, moves))
        }
        _ => unreachable!("domino families handled above"),
    }
}

pub fn dot(family: Family, p: Params) -> Result<String> {
    let name = family.to_string().replace('-', "_");
    Ok(match family.board_kind() {
        Some(kind) => domino_digraph(kind, p.k.expect("checked by caller"), p.n)?.to_dot(&name),
        None if family == Family::Snakes => ming_digraph(p.n)?.to_dot(&name),
        None => mixedmiddleswitch_digraph(p.n)?.to_dot(&name),
    })
}

pub fn board(family: Family, p: Params, object: Option<&str>) -> Result<String> {
    if let Some(kind) = family.board_kind() {
        return Ok(Board::new(kind, p.k.expect("checked by caller"), p.n)?.render());
    }
    if family != Family::Snakes {
        return Err(Usage(format!("{} has no board", family)).into());
    }
    let tiling = match object {
        Some(s) => s.parse::<MingantuTiling>()?.validate()?,
        None => MingantuTiling(vec![0; p.n]),
    };
    if tiling.n() != p.n {
        return Err(latpuzzle_core::Error::InvalidObject(format!("{} is not a tiling of size {}", tiling, p.n)).into());
    }
    Ok(tiling.render())
}

pub fn iso_table(family: Family, p: Params) -> Result<String> {
    if family != Family::Snakes {
        return Err(Usage(format!("iso-table is only defined for snakes, not {}", family)).into());
    }
    Ok(search_isomorphism(p.n)?.to_table())
}

pub fn enumerate(family: Family, p: Params) -> Result<Vec<String>> {
    fn strings<T: ToString>(xs: Vec<T>) -> Vec<String> {
        xs.iter().map(ToString::to_string).collect()
    }
    Ok(match family.board_kind() {
        Some(kind) => strings(Board::new(kind, p.k.expect("checked by caller"), p.n)?.partitions()),
        None if family == Family::Snakes => strings(enumerate_tilings(p.n)),
        None => strings(binary_seqs(p.n)),
    })
}
