//! Reading graphs from graph6 streams.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::graph6::{self, Graph6Error};
use crate::graph::Graph;

use super::GraphFilter;

#[derive(Debug, Error)]
pub enum IngestErrorKind {
    #[error(transparent)]
    Decode(#[from] Graph6Error),
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// A failure tied to a 1-based input line.
#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct IngestError {
    pub line: usize,
    pub kind: IngestErrorKind,
}

/// Iterator over the graphs of a graph6 stream that pass a filter.
///
/// Blank lines are skipped. In strict mode the first error ends the stream;
/// otherwise malformed lines are reported and reading continues.
pub struct Ingest<R> {
    reader: R,
    filter: GraphFilter,
    strict: bool,
    line: usize,
    buf: String,
    done: bool,
}

pub fn ingest_graph6<R: BufRead>(reader: R, filter: GraphFilter, strict: bool) -> Ingest<R> {
    Ingest { reader, filter, strict, line: 0, buf: String::new(), done: false }
}

impl<R: BufRead> Iterator for Ingest<R> {
    type Item = Result<Graph, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            self.buf.clear();
            self.line += 1;
            let line = self.line;
            let res = match self.reader.read_line(&mut self.buf) {
                Ok(0) => {
                    self.done = true;
                    return None;
                }
                Ok(_) => {
                    let text = self.buf.trim();
                    if text.is_empty() {
                        continue;
                    }
                    graph6::decode(text).map_err(IngestErrorKind::from)
                }
                Err(e) => {
                    // a read error leaves the stream position unknown
                    self.done = true;
                    Err(IngestErrorKind::from(e))
                }
            };
            match res {
                Ok(g) if self.filter.matches(&g) => return Some(Ok(g)),
                Ok(_) => continue,
                Err(kind) => {
                    self.done |= self.strict;
                    return Some(Err(IngestError { line, kind }));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_filters() {
        let input = ">>graph6<<C~\n\nCr\nC^\nCF\n";
        let all: Vec<_> = ingest_graph6(input.as_bytes(), GraphFilter::default(), true).map(|r| r.unwrap()).collect();
        assert_eq!(all.len(), 4);
        let f = GraphFilter { cut_vertices: Some(1), ..Default::default() };
        let some: Vec<_> = ingest_graph6(input.as_bytes(), f, true).map(|r| r.unwrap()).collect();
        assert_eq!(some.len(), 1);
        assert_eq!(some[0].degree(3), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let input = "C~\nC!\nCr\n";
        let lenient: Vec<_> = ingest_graph6(input.as_bytes(), GraphFilter::default(), false).collect();
        assert_eq!(lenient.len(), 3);
        let err = lenient[1].as_ref().unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, IngestErrorKind::Decode(Graph6Error::InvalidCharacter { .. })));
        let strict: Vec<_> = ingest_graph6(input.as_bytes(), GraphFilter::default(), true).collect();
        assert_eq!(strict.len(), 2);
        assert!(strict[1].is_err());
    }
}
