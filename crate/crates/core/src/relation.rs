//! Dense boolean relations over a fixed, ordered label set.

use std::fmt::{Display, Write as _};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<T> {
    labels: Vec<T>,
    matrix: Vec<Vec<bool>>,
}

impl<T: Clone + PartialEq + Display> Relation<T> {
    pub fn empty(labels: Vec<T>) -> Self {
        let n = labels.len();
        Relation {
            labels,
            matrix: vec![vec![false; n]; n],
        }
    }

    pub fn identity(labels: Vec<T>) -> Self {
        let mut r = Relation::empty(labels);
        for i in 0..r.len() {
            r.matrix[i][i] = true;
        }
        r
    }

    /// Relation given by a predicate on every ordered pair.
    pub fn from_fn(labels: Vec<T>, mut related: impl FnMut(&T, &T) -> bool) -> Self {
        let matrix = labels
            .iter()
            .map(|x| labels.iter().map(|y| related(x, y)).collect())
            .collect();
        Relation { labels, matrix }
    }

    pub fn labels(&self) -> &[T] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.labels.iter().position(|y| y == x)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.matrix[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.matrix[i][j] = true;
    }

    /// Whether `x` is related to `y`; `None` if either label is unknown.
    pub fn relates(&self, x: &T, y: &T) -> Option<bool> {
        Some(self.matrix[self.position(x)?][self.position(y)?])
    }

    /// Adds the diagonal and closes under composition (Warshall).
    pub fn close(&mut self) {
        let n = self.len();
        for i in 0..n {
            self.matrix[i][i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if self.matrix[i][k] {
                    let (row_k, row_i) = if i < k {
                        let (lo, hi) = self.matrix.split_at_mut(k);
                        (&hi[0], &mut lo[i])
                    } else if i > k {
                        let (lo, hi) = self.matrix.split_at_mut(i);
                        (&lo[k], &mut hi[0])
                    } else {
                        continue;
                    };
                    for (dst, &src) in row_i.iter_mut().zip(row_k.iter()) {
                        *dst |= src;
                    }
                }
            }
        }
    }

    /// Ordered pairs on which the two relations differ.
    pub fn disagreements(&self, other: &Relation<T>) -> Vec<(T, T)> {
        assert!(self.labels == other.labels, "relations over different labels");
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.matrix[i][j] != other.matrix[i][j] {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }

    /// Square 0/1 matrix; the header row holds the labels.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            let _ = write!(out, "\t{l}");
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.matrix) {
            let _ = write!(out, "{l}");
            for &x in row {
                out.push('\t');
                out.push(if x { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}
