//! Graph adjacency spectra from edge-list files.

use super::load::RawSpectrum;
use crate::ensembles::{eigenvalues_symmetric, HermitianMatrix};
use crate::error::{Error, Result};
use std::io::BufRead;
use std::path::Path;

/// Read an undirected edge list ("u v" per line, 1-indexed, no self-loops),
/// build the dense 0/1 adjacency matrix, and return its spectrum.
pub fn adjacency_spectrum(path: impl AsRef<Path>, n_vertices: usize) -> Result<RawSpectrum> {
    if n_vertices == 0 || n_vertices > 4000 {
        return Err(Error::domain(format!(
            "adjacency_spectrum: n_vertices must be in [1, 4000], got {n_vertices}"
        )));
    }
    let path = path.as_ref();
    let display = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|e| Error::Io {
        path: display.clone(),
        message: e.to_string(),
    })?;
    let reader = std::io::BufReader::new(file);

    let n = n_vertices;
    let mut data = vec![0.0f64; n * n];
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Io {
            path: display.clone(),
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let parse_vertex = |tok: Option<&str>, lineno: usize| -> Result<usize> {
            let tok = tok.ok_or_else(|| Error::Parse {
                path: display.clone(),
                line: lineno + 1,
                message: "expected two vertex indices".into(),
            })?;
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                path: display.clone(),
                line: lineno + 1,
                message: format!("not a vertex index: {tok:?}"),
            })?;
            if v == 0 || v > n {
                return Err(Error::Parse {
                    path: display.clone(),
                    line: lineno + 1,
                    message: format!("vertex {v} outside 1..={n}"),
                });
            }
            Ok(v - 1)
        };
        let u = parse_vertex(it.next(), lineno)?;
        let v = parse_vertex(it.next(), lineno)?;
        if u == v {
            return Err(Error::Parse {
                path: display.clone(),
                line: lineno + 1,
                message: format!("self-loop at vertex {}", u + 1),
            });
        }
        data[u * n + v] = 1.0;
        data[v * n + u] = 1.0;
    }

    let matrix = HermitianMatrix::real(n, data)?;
    let values = eigenvalues_symmetric(&matrix)?;
    Ok(RawSpectrum::from_computed(values, display))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::io::Write;

    fn temp_file(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn path_graph_on_three_vertices() {
        let f = temp_file("1 2\n2 3\n");
        let raw = adjacency_spectrum(f.path(), 3).unwrap();
        let expected = [-(2.0f64.sqrt()), 0.0, 2.0f64.sqrt()];
        for (a, b) in raw.values().iter().zip(&expected) {
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn complete_graph_k4() {
        let f = temp_file("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
        let raw = adjacency_spectrum(f.path(), 4).unwrap();
        let expected = [-1.0, -1.0, -1.0, 3.0];
        assert_eq!(raw.len(), 4);
        for (a, b) in raw.values().iter().zip(&expected) {
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn cycle_c6_matches_circulant_formula() {
        let f = temp_file("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
        let raw = adjacency_spectrum(f.path(), 6).unwrap();
        // 2cos(2πk/6): (−2, −1, −1, 1, 1, 2)
        let expected = [-2.0, -1.0, -1.0, 1.0, 1.0, 2.0];
        assert_eq!(raw.len(), 6);
        for (a, b) in raw.values().iter().zip(&expected) {
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn malformed_inputs_error_with_line_numbers() {
        let f = temp_file("1 2\n2 7\n");
        match adjacency_spectrum(f.path(), 3) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let f = temp_file("1 1\n");
        assert!(matches!(
            adjacency_spectrum(f.path(), 3),
            Err(Error::Parse { line: 1, .. })
        ));
        let f = temp_file("1\n");
        assert!(adjacency_spectrum(f.path(), 3).is_err());
    }
}
