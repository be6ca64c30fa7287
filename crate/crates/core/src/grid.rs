//! The integer node grid `{(i, j) : 1 <= i <= m, 1 <= j <= n}` and the
//! linear form `t = alpha*x + beta*y` that projects it onto a line.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A 1-based grid node `(i, j)`.
pub type Node = (usize, usize);

/// Dimension of the space of bivariate polynomials of total degree `<= k`.
pub fn pi2_dimension(k: usize) -> usize {
    (k + 1) * (k + 2) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeGrid {
    m: usize,
    n: usize,
    nodes: Vec<Node>,
}

impl NodeGrid {
    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes in row-major order.
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn transpose(&self) -> NodeGrid {
        NodeGrid {
            m: self.n,
            n: self.m,
            nodes: row_major(self.n, self.m),
        }
    }
}

fn row_major(m: usize, n: usize) -> Vec<Node> {
    (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
}

pub fn grid_nodes(m: usize, n: usize) -> Result<NodeGrid> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidShape { rows: m, cols: n });
    }
    Ok(NodeGrid {
        m,
        n,
        nodes: row_major(m, n),
    })
}

/// Coefficients `(alpha, beta)` of the linear form `alpha*x + beta*y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectionPair {
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl DirectionPair {
    pub fn new(alpha: impl Into<Scalar>, beta: impl Into<Scalar>) -> Self {
        DirectionPair {
            alpha: alpha.into(),
            beta: beta.into(),
        }
    }

    /// `(n, 1)`: row-major order maps to consecutive integers.
    pub fn row_wise(n: usize) -> Self {
        DirectionPair::new(n, 1usize)
    }

    /// `(1, m)`: column-major order maps to consecutive integers.
    pub fn col_wise(m: usize) -> Self {
        DirectionPair::new(1usize, m)
    }

    pub fn swapped(&self) -> Self {
        DirectionPair {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    /// Value of the linear form at an arbitrary point.
    pub fn at(&self, x: &Scalar, y: &Scalar) -> Scalar {
        &self.alpha * x + &self.beta * y
    }

    /// Renders the linear form the way it reads in formulas: `2x+y`,
    /// `x+2y`, `3x-y`, `(1/2)x+y`.
    pub fn linear_form(&self) -> String {
        let mut out = String::new();
        for (coef, var) in [(&self.alpha, 'x'), (&self.beta, 'y')] {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            if coef.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if mag != Scalar::one() {
                if mag.is_integer() {
                    out.push_str(&mag.to_string());
                } else {
                    out.push_str(&format!("({mag})"));
                }
            }
            out.push(var);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for DirectionPair {
    /// `alpha/beta`, with non-integer components parenthesized so the
    /// separator stays unambiguous: `2/1`, `(1/2)/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |s: &Scalar| {
            if s.is_integer() {
                s.to_string()
            } else {
                format!("({s})")
            }
        };
        write!(f, "{}/{}", part(&self.alpha), part(&self.beta))
    }
}

impl std::str::FromStr for DirectionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "direction pair",
            input: s.to_string(),
        };
        let s = s.trim();
        let (a, b) = if let Some(rest) = s.strip_prefix('(') {
            let (a, rest) = rest.split_once(')').ok_or_else(bad)?;
            let b = rest.strip_prefix('/').ok_or_else(bad)?;
            (a, b)
        } else {
            s.split_once('/').ok_or_else(bad)?
        };
        let b = b
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(b);
        Ok(DirectionPair {
            alpha: a.parse().map_err(|_| bad())?,
            beta: b.parse().map_err(|_| bad())?,
        })
    }
}

pub fn project(node: Node, dir: &DirectionPair) -> Scalar {
    &dir.alpha * Scalar::from(node.0) + &dir.beta * Scalar::from(node.1)
}

/// Projections of every node, in the grid's row-major order.
pub fn projections(grid: &NodeGrid, dir: &DirectionPair) -> Vec<Scalar> {
    grid.nodes().iter().map(|&nd| project(nd, dir)).collect()
}

/// First pair of nodes (in row-major scan order) whose projections coincide.
pub fn find_collision(grid: &NodeGrid, dir: &DirectionPair) -> Option<(Node, Node, Scalar)> {
    let mut seen: HashMap<Scalar, Node> = HashMap::with_capacity(grid.len());
    for &node in grid.nodes() {
        let t = project(node, dir);
        if let Some(&earlier) = seen.get(&t) {
            return Some((earlier, node, t));
        }
        seen.insert(t, node);
    }
    None
}

/// True iff all `mn` projections are pairwise distinct.
pub fn direction_valid(grid: &NodeGrid, dir: &DirectionPair) -> bool {
    find_collision(grid, dir).is_none()
}

/// Like [`direction_valid`], but reports the collision as an error.
pub fn check_direction(grid: &NodeGrid, dir: &DirectionPair) -> Result<()> {
    match find_collision(grid, dir) {
        None => Ok(()),
        Some((first, second, value)) => Err(Error::DirectionCollision {
            alpha: dir.alpha.to_string(),
            beta: dir.beta.to_string(),
            first,
            second,
            value: value.to_string(),
        }),
    }
}
