//! DIMACS edge files and relational model files.
//!
//! DIMACS: `c` comments, one `p edge <n> <m>` line, then `m` lines
//! `e <u> <v>` with 1-based ids. A line `e v v` marks `v` as eligible
//! (reflexive); other vertices are not.
//!
//! Model files: `#` comments, one `n <size>` line, then `S <a> <b>` lines
//! with 0-based ids.

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::graph::Graph;
use super::model::Model;
use super::StructureError;

fn format_error(line: usize, msg: impl Into<String>) -> StructureError {
    StructureError::Format { line, msg: msg.into() }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, StructureError> {
    let tok = tok.ok_or_else(|| format_error(line, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| format_error(line, format!("invalid {what} '{tok}'")))
}

fn expect_end<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), StructureError> {
    match toks.next() {
        None => Ok(()),
        Some(t) => Err(format_error(line, format!("unexpected token '{t}'"))),
    }
}

pub fn read_dimacs(reader: impl BufRead) -> Result<Graph, StructureError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = HashSet::new();
    let mut lines_read = 0;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(format_error(lineno, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(format_error(
                            lineno,
                            format!("expected 'p edge', found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                let n = parse_num(toks.next(), lineno, "vertex count")?;
                let m = parse_num(toks.next(), lineno, "edge count")?;
                expect_end(toks, lineno)?;
                let mut g = Graph::empty(n);
                for v in 0..n {
                    g.set_eligible(v, false);
                }
                graph = Some((g, m));
            }
            Some("e") => {
                let Some((g, _)) = graph.as_mut() else {
                    return Err(format_error(lineno, "edge before problem line"));
                };
                let u = parse_num(toks.next(), lineno, "vertex id")?;
                let v = parse_num(toks.next(), lineno, "vertex id")?;
                expect_end(toks, lineno)?;
                for w in [u, v] {
                    if w == 0 || w > g.size() {
                        return Err(format_error(
                            lineno,
                            format!("vertex id {w} out of range 1..={}", g.size()),
                        ));
                    }
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(format_error(lineno, format!("duplicate edge {u} {v}")));
                }
                if u == v {
                    g.set_eligible(u - 1, true);
                } else {
                    g.add_edge(u - 1, v - 1);
                }
                lines_read += 1;
            }
            Some(other) => return Err(format_error(lineno, format!("unknown line type '{other}'"))),
        }
    }
    let (g, m) = graph.ok_or_else(|| format_error(0, "missing problem line"))?;
    if m != lines_read {
        return Err(format_error(
            0,
            format!("problem line declares {m} edges, found {lines_read}"),
        ));
    }
    Ok(g)
}

pub fn write_dimacs(mut w: impl Write, g: &Graph) -> io::Result<()> {
    let loops: Vec<usize> = g.eligible().iter().collect();
    writeln!(w, "p edge {} {}", g.size(), g.edge_count() + loops.len())?;
    for (u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    for v in loops {
        writeln!(w, "e {} {}", v + 1, v + 1)?;
    }
    Ok(())
}

pub fn read_model(reader: impl BufRead) -> Result<Model, StructureError> {
    let mut size = None;
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        match toks.next() {
            None => continue,
            Some("n") => {
                if size.is_some() {
                    return Err(format_error(lineno, "duplicate size line"));
                }
                let n = parse_num(toks.next(), lineno, "universe size")?;
                expect_end(toks, lineno)?;
                if n == 0 {
                    return Err(format_error(lineno, "universe must be nonempty"));
                }
                size = Some(n);
            }
            Some("S") => {
                let Some(n) = size else {
                    return Err(format_error(lineno, "pair before size line"));
                };
                let a = parse_num(toks.next(), lineno, "element")?;
                let b = parse_num(toks.next(), lineno, "element")?;
                expect_end(toks, lineno)?;
                if a >= n || b >= n {
                    return Err(format_error(
                        lineno,
                        format!("element {} out of range 0..{n}", a.max(b)),
                    ));
                }
                if !seen.insert((a, b)) {
                    return Err(format_error(lineno, format!("duplicate pair {a} {b}")));
                }
                pairs.push((a, b));
            }
            Some(other) => return Err(format_error(lineno, format!("unknown line type '{other}'"))),
        }
    }
    let size = size.ok_or_else(|| format_error(0, "missing size line"))?;
    Model::new(size, pairs)
}

pub fn write_model(mut w: impl Write, m: &Model) -> io::Result<()> {
    writeln!(w, "n {}", m.size())?;
    for &(a, b) in m.relation() {
        writeln!(w, "S {a} {b}")?;
    }
    Ok(())
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph, StructureError> {
    read_dimacs(BufReader::new(File::open(path)?))
}

pub fn load_model(path: impl AsRef<Path>) -> Result<Model, StructureError> {
    read_model(BufReader::new(File::open(path)?))
}

pub fn save_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), StructureError> {
    let mut w = BufWriter::new(File::create(path)?);
    write_dimacs(&mut w, g)?;
    w.flush()?;
    Ok(())
}

pub fn save_model(path: impl AsRef<Path>, m: &Model) -> Result<(), StructureError> {
    let mut w = BufWriter::new(File::create(path)?);
    write_model(&mut w, m)?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::generate;

    fn dimacs(text: &str) -> Result<Graph, StructureError> {
        read_dimacs(text.as_bytes())
    }

    fn line_of(e: StructureError) -> usize {
        match e {
            StructureError::Format { line, .. } => line,
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn path_graph() {
        let g = dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.eligible_count(), 0);
    }

    #[test]
    fn comments_and_loops() {
        let g = dimacs("c hello\np edge 2 3\ne 1 2\nc mid\ne 1 1\ne 2 2\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        assert_eq!(line_of(dimacs("p edge 3 1\ne 1 x\n").unwrap_err()), 2);
        assert_eq!(line_of(dimacs("p edge 3 1\ne 1 4\n").unwrap_err()), 2);
        assert_eq!(line_of(dimacs("p edge 3 1\ne 0 1\n").unwrap_err()), 2);
        assert_eq!(line_of(dimacs("c\np edge 3 2\ne 1 2\ne 2 1\n").unwrap_err()), 4);
        assert_eq!(line_of(dimacs("e 1 2\n").unwrap_err()), 1);
        assert_eq!(line_of(dimacs("p edge 3 2\nx 1 2\n").unwrap_err()), 2);
        assert_eq!(line_of(dimacs("p edge 3 1 5\n").unwrap_err()), 1);
        assert!(dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(dimacs("").is_err());
    }

    #[test]
    fn model_file() {
        let m = read_model("n 2\nS 0 1\n".as_bytes()).unwrap();
        assert_eq!(m, Model::new(2, [(0, 1)]).unwrap());
        let m = read_model("# a model\nn 3 # three\nS 0 0\n\nS 2 1\n".as_bytes()).unwrap();
        assert_eq!(m, Model::new(3, [(0, 0), (2, 1)]).unwrap());
    }

    #[test]
    fn model_errors_carry_line_numbers() {
        let err = |t: &str| line_of(read_model(t.as_bytes()).unwrap_err());
        assert_eq!(err("n 2\nS 0 2\n"), 2);
        assert_eq!(err("n 2\nS 0 1\nS 0 1\n"), 3);
        assert_eq!(err("S 0 1\n"), 1);
        assert_eq!(err("n 2\nS 0\n"), 2);
        assert_eq!(err("n 0\n"), 1);
    }

    #[test]
    fn random_graphs_round_trip() {
        let mut rng = generate::rng(11);
        for i in 0..100 {
            let mut g = generate::gnp(i % 25, 0.4, &mut rng);
            if i % 3 == 0 {
                g.set_eligible(0.min(g.size().saturating_sub(1)), false);
            }
            let mut buf = Vec::new();
            write_dimacs(&mut buf, &g).unwrap();
            assert_eq!(read_dimacs(buf.as_slice()).unwrap(), g);
        }
    }

    #[test]
    fn files_round_trip() {
        let dir = std::env::temp_dir().join(format!("ramsey-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let g = Graph::cycle(6);
        save_graph(dir.join("c6.dimacs"), &g).unwrap();
        assert_eq!(load_graph(dir.join("c6.dimacs")).unwrap(), g);
        let m = Model::from_graph(&g).unwrap();
        save_model(dir.join("c6.model"), &m).unwrap();
        assert_eq!(load_model(dir.join("c6.model")).unwrap(), m);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
