//! Plain text edge lists: an `n m` header line followed by `m` lines of
//! `u v` pairs, whitespace-separated, 0-based ids.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq)]
pub enum EdgeListError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("token '{0}' is not a vertex count or id")]
    BadToken(String),
    #[error("header promises {expected} edges, found {got}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut tokens = text.split_whitespace();
    let mut next_int = |required: bool| -> Result<Option<usize>, EdgeListError> {
        match tokens.next() {
            None if required => Err(EdgeListError::MissingHeader),
            None => Ok(None),
            Some(t) => t
                .parse::<usize>()
                .map(Some)
                .map_err(|_| EdgeListError::BadToken(t.to_string())),
        }
    };
    let n = next_int(true)?.unwrap();
    let m = next_int(true)?.unwrap();
    let mut edges = Vec::with_capacity(m);
    while let Some(u) = next_int(false)? {
        let v = match next_int(false)? {
            Some(v) => v,
            None => {
                return Err(EdgeListError::WrongEdgeCount {
                    expected: m,
                    got: edges.len(),
                })
            }
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::WrongEdgeCount {
            expected: m,
            got: edges.len(),
        });
    }
    Ok(Graph::build(n, &edges)?)
}

pub fn format(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_a_path() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = format(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse(""), Err(EdgeListError::MissingHeader));
        assert_eq!(parse("3"), Err(EdgeListError::MissingHeader));
        assert_eq!(
            parse("3 2\n0 1"),
            Err(EdgeListError::WrongEdgeCount { expected: 2, got: 1 })
        );
        assert_eq!(
            parse("3 1\n0 1\n1 2"),
            Err(EdgeListError::WrongEdgeCount { expected: 1, got: 2 })
        );
        assert_eq!(parse("3 1\n0 x"), Err(EdgeListError::BadToken("x".into())));
        assert!(matches!(parse("2 1\n0 0"), Err(EdgeListError::Graph(_))));
    }
}
