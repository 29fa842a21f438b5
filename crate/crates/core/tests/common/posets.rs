use latpuzzle_core::{Color, OrderIdeal, VertexColoredPoset};

/// Strict order relation `rel[b][a]` (a < b) as a transitive closure.
pub fn closure(n: usize, pairs: &[bool]) -> Vec<Vec<bool>> {
    let mut rel = vec![vec![false; n]; n];
    let mut k = 0;
    for b in 0..n {
        for a in 0..b {
            rel[b][a] = pairs[k];
            k += 1;
        }
    }
    for b in 0..n {
        for a in 0..b {
            if rel[b][a] {
                for c in 0..a {
                    if rel[a][c] {
                        rel[b][c] = true;
                    }
                }
            }
        }
    }
    rel
}

pub fn covers(rel: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = rel.len();
    let mut out = Vec::new();
    for b in 0..n {
        for a in 0..b {
            if rel[b][a] && !(a + 1..b).any(|c| rel[b][c] && rel[c][a]) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn build(rel: &[Vec<bool>], colors: &[Color]) -> VertexColoredPoset<u32> {
    let n = rel.len();
    VertexColoredPoset::new((0..n as u32).collect(), colors.to_vec(), covers(rel)).unwrap()
}

pub fn down_closed(rel: &[Vec<bool>], mask: u32) -> bool {
    let n = rel.len();
    (0..n).all(|b| mask >> b & 1 == 0 || (0..b).all(|a| !rel[b][a] || mask >> a & 1 == 1))
}

pub fn members(x: &OrderIdeal) -> u32 {
    x.members().fold(0, |m, i| m | 1 << i)
}
