//! Plain 0/1 adjacency matrices, several per file, as distributed in the
//! usual strongly regular graph collections.

use std::path::Path;

use super::{read_graph6_file, Graph};
use crate::{Error, Result};

fn matrix_row(line: &str) -> Option<Vec<bool>> {
    let digits: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    if digits.is_empty() || !digits.chars().all(|c| c == '0' || c == '1') {
        return None;
    }
    Some(digits.chars().map(|c| c == '1').collect())
}

/// Consecutive rows of `0`/`1` digits (spaces allowed) form a matrix; any
/// other line, blank or not, is a separator.
pub fn decode_adjacency_matrices(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut block: Vec<Vec<bool>> = Vec::new();
    let flush = |block: &mut Vec<Vec<bool>>, out: &mut Vec<Graph>| -> Result<()> {
        if block.is_empty() {
            return Ok(());
        }
        let n = block[0].len();
        if !block.len().is_multiple_of(n) || block.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("ragged {}x{} adjacency block", block.len(), n)));
        }
        for m in block.chunks(n) {
            let mut g = Graph::empty(n);
            for a in 0..n {
                if m[a][a] {
                    return Err(Error::Parse(format!("loop at vertex {a}")));
                }
                for b in a + 1..n {
                    if m[a][b] != m[b][a] {
                        return Err(Error::Parse(format!("asymmetric entry ({a},{b})")));
                    }
                    if m[a][b] {
                        g.add_edge(a, b);
                    }
                }
            }
            out.push(g);
        }
        block.clear();
        Ok(())
    };
    for line in text.lines() {
        match matrix_row(line) {
            Some(r) => block.push(r),
            None => flush(&mut block, &mut out)?,
        }
    }
    flush(&mut block, &mut out)?;
    Ok(out)
}

/// Adjacency matrices when the file has `0`/`1` rows, graph6 lines
/// otherwise.
pub fn read_graph_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;
    // graph6 bytes start at `?`, so a row of digits can only be a matrix row
    if text.lines().any(|l| matrix_row(l).is_some_and(|r| r.len() > 1)) {
        decode_adjacency_matrices(&text)
    } else {
        read_graph6_file(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{encode_graph6, GraphSpec};

    #[test]
    fn two_blocks_with_headers() {
        let text = "Graph 1\n0 1 1\n1 0 1\n1 1 0\n\nGraph 2\n010\n101\n010\n";
        let gs = decode_adjacency_matrices(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].edge_count(), 3);
        assert_eq!(gs[1].edge_count(), 2);
    }

    #[test]
    fn back_to_back_blocks_split_by_width() {
        let text = "01\n10\n00\n00\n";
        let gs = decode_adjacency_matrices(text).unwrap();
        assert_eq!(gs.iter().map(Graph::edge_count).collect::<Vec<_>>(), vec![1, 0]);
    }

    #[test]
    fn rejects_asymmetry_and_loops() {
        assert!(decode_adjacency_matrices("01\n00\n").is_err());
        assert!(decode_adjacency_matrices("10\n00\n").is_err());
        assert!(decode_adjacency_matrices("011\n101\n").is_err());
    }

    #[test]
    fn file_formats_are_detected() {
        let dir = std::env::temp_dir().join(format!("srconf-matrix-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = GraphSpec::Petersen.build().unwrap();
        let mut m = String::new();
        for a in 0..10 {
            let row: String = (0..10).map(|b| if p.has_edge(a, b) { '1' } else { '0' }).collect();
            m.push_str(&row);
            m.push('\n');
        }
        std::fs::write(dir.join("p.mat"), &m).unwrap();
        std::fs::write(dir.join("p.g6"), format!(">>graph6<<{}\n", encode_graph6(&p))).unwrap();
        assert_eq!(read_graph_file(&dir.join("p.mat")).unwrap(), vec![p.clone()]);
        assert_eq!(read_graph_file(&dir.join("p.g6")).unwrap(), vec![p]);
        assert!(matches!(read_graph_file(&dir.join("none")), Err(Error::FileNotFound(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
