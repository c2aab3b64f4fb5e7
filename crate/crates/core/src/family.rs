//! Deterministic graph families.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A parameterized graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// P_n on `n >= 1` vertices.
    Path(usize),
    /// C_n, `n >= 3`.
    Cycle(usize),
    /// K_n, `n >= 1`.
    Complete(usize),
    /// K_{a,b}; the first part is `0..a`.
    CompleteBipartite(usize, usize),
    /// K_{1,leaves} with center 0.
    Star(usize),
    /// Hub 0 joined to a rim cycle `1..=rim`, `rim >= 3`.
    Wheel(usize),
    /// K_n × K_n; vertex `(r, c)` is `r * n + c`.
    Rook(usize),
    /// Q_d on 2^d vertices.
    Hypercube(usize),
    /// G(n, p) with p = num/den, drawn from a splitmix64 stream.
    Gnp {
        n: usize,
        num: u64,
        den: u64,
        seed: u64,
    },
}

impl FamilySpec {
    /// Parses a family name plus integer parameters, as given on the
    /// command line.
    pub fn parse(name: &str, params: &[u64], seed: u64) -> Result<Self> {
        let want = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let p = |i: usize| params[i] as usize;
        let spec = match name {
            "path" => want(1).map(|_| FamilySpec::Path(p(0))),
            "cycle" => want(1).map(|_| FamilySpec::Cycle(p(0))),
            "complete" => want(1).map(|_| FamilySpec::Complete(p(0))),
            "complete_bipartite" | "complete-bipartite" => {
                want(2).map(|_| FamilySpec::CompleteBipartite(p(0), p(1)))
            }
            "star" => want(1).map(|_| FamilySpec::Star(p(0))),
            "wheel" => want(1).map(|_| FamilySpec::Wheel(p(0))),
            "rook" => want(1).map(|_| FamilySpec::Rook(p(0))),
            "hypercube" => want(1).map(|_| FamilySpec::Hypercube(p(0))),
            "gnp" => want(3).map(|_| FamilySpec::Gnp {
                n: p(0),
                num: params[1],
                den: params[2],
                seed,
            }),
            other => Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        }?;
        Ok(spec)
    }

    /// Number of vertices the family member will have.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match *self {
            Path(n) | Cycle(n) | Complete(n) | Gnp { n, .. } => n,
            CompleteBipartite(a, b) => a.saturating_add(b),
            Star(l) | Wheel(l) => l.saturating_add(1),
            Rook(n) => n.saturating_mul(n),
            Hypercube(d) => {
                if d >= 7 {
                    usize::MAX
                } else {
                    1 << d
                }
            }
        }
    }

    fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            Cycle(n) if n < 3 => return bad("cycle needs at least 3 vertices"),
            Wheel(r) if r < 3 => return bad("wheel rim needs at least 3 vertices"),
            CompleteBipartite(a, b) if a == 0 || b == 0 => {
                return bad("both parts must be non-empty")
            }
            Gnp { den: 0, .. } => return bad("probability denominator is zero"),
            Gnp { num, den, .. } if num > den => return bad("probability exceeds 1"),
            _ => {}
        }
        let n = self.order();
        if n == 0 {
            return bad("family member would be empty");
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "{self} has more than {MAX_VERTICES} vertices"
            )));
        }
        Ok(())
    }

    /// Builds the family member.
    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        self.validate()?;
        let n = self.order();
        let mut edges = Vec::new();
        match *self {
            Path(n) => edges.extend((1..n).map(|i| (i - 1, i))),
            Cycle(n) => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
            Complete(n) => {
                for j in 1..n {
                    edges.extend((0..j).map(|i| (i, j)));
                }
            }
            CompleteBipartite(a, b) => {
                for i in 0..a {
                    edges.extend((a..a + b).map(|j| (i, j)));
                }
            }
            Star(l) => edges.extend((1..=l).map(|i| (0, i))),
            Wheel(r) => {
                for i in 1..=r {
                    edges.push((0, i));
                    edges.push((i, i % r + 1));
                }
            }
            Rook(k) => {
                for a in 0..n {
                    for b in a + 1..n {
                        if (a / k == b / k) != (a % k == b % k) {
                            edges.push((a, b));
                        }
                    }
                }
            }
            Hypercube(d) => {
                for v in 0..n {
                    edges.extend(
                        (0..d)
                            .map(|bit| (v, v ^ (1 << bit)))
                            .filter(|&(a, b)| a < b),
                    );
                }
            }
            Gnp { n, num, den, seed } => {
                let mut rng = SplitMix64::new(seed);
                for j in 1..n {
                    for i in 0..j {
                        if rng.next_u64() % den < num {
                            edges.push((i, j));
                        }
                    }
                }
            }
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Star(l) => write!(f, "star({l})"),
            Wheel(r) => write!(f, "wheel({r})"),
            Rook(n) => write!(f, "rook({n})"),
            Hypercube(d) => write!(f, "hypercube({d})"),
            Gnp { n, num, den, seed } => write!(f, "gnp({n},{num}/{den},seed={seed})"),
        }
    }
}

/// The splitmix64 generator. Small, fast, and trivially portable, so a
/// seed reproduces the same G(n, p) sample in any implementation.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("static graph")
}
