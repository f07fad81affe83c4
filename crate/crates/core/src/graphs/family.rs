//! Named graph constructions and a small expression syntax for them.
//!
//! ```text
//! K4  K3,3  K2,2,2  C5  P4  E6  petersen  circ(7;2,3)  spider(2,2,1)
//! prod(K3,K3)  comp(union(K3,C5))  copies(3,K4)  blowup(2,C5)  g6:C~
//! ```

use super::{parse_graph6, write_graph6, Graph};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Edgeless graph.
    Empty(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Cycle(usize),
    /// Path on the given number of vertices.
    Path(usize),
    Petersen,
    /// `C_n(S)`: vertex `i` is adjacent to `i ± s (mod n)` for `s` in `S`.
    Circulant(usize, Vec<usize>),
    /// Tree with one centre and pendant paths of the given lengths.
    Spider(Vec<usize>),
    Cartesian(Box<Family>, Box<Family>),
    Complement(Box<Family>),
    DisjointUnion(Vec<Family>),
    Copies(Box<Family>, usize),
    /// Every vertex replaced by an independent set of the given size, every
    /// edge by a complete bipartite graph.
    Blowup(Box<Family>, usize),
    Graph6(String),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

pub fn construct_family(spec: &Family) -> Result<Graph> {
    match spec {
        Family::Empty(n) => Graph::empty(*n).map_err(|_| invalid("E_n needs n >= 1")),
        Family::Complete(n) => {
            let mut g = Graph::empty(*n).map_err(|_| invalid("K_n needs n >= 1"))?;
            for u in 0..*n {
                for v in u + 1..*n {
                    g.set(u, v, true);
                }
            }
            Ok(g)
        }
        Family::CompleteBipartite(a, b) => {
            if *a == 0 || *b == 0 {
                return Err(invalid(format!("K_{{{a},{b}}} needs both sides nonempty")));
            }
            construct_family(&Family::CompleteMultipartite(vec![*a, *b]))
        }
        Family::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(invalid("complete multipartite graph needs nonempty parts"));
            }
            let n: usize = parts.iter().sum();
            let mut side = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                side.extend(std::iter::repeat_n(i, p));
            }
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    if side[u] != side[v] {
                        g.set(u, v, true);
                    }
                }
            }
            Ok(g)
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(invalid(format!("C_{n} needs n >= 3")));
            }
            let mut g = Graph::empty(*n)?;
            for i in 0..*n {
                g.set(i, (i + 1) % n, true);
            }
            Ok(g)
        }
        Family::Path(n) => {
            let mut g = Graph::empty(*n).map_err(|_| invalid("P_n needs n >= 1"))?;
            for i in 1..*n {
                g.set(i - 1, i, true);
            }
            Ok(g)
        }
        Family::Petersen => {
            let mut g = Graph::empty(10)?;
            for i in 0..5 {
                g.set(i, (i + 1) % 5, true);
                g.set(i, i + 5, true);
                g.set(5 + i, 5 + (i + 2) % 5, true);
            }
            Ok(g)
        }
        Family::Circulant(n, conn) => {
            if *n == 0 {
                return Err(invalid("circulant needs n >= 1"));
            }
            let mut g = Graph::empty(*n)?;
            for &s in conn {
                if s % n == 0 {
                    return Err(invalid(format!("connection {s} is 0 mod {n}")));
                }
                for i in 0..*n {
                    g.set(i, (i + s) % n, true);
                }
            }
            Ok(g)
        }
        Family::Spider(legs) => {
            let n = 1 + legs.iter().sum::<usize>();
            let mut g = Graph::empty(n)?;
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    g.set(prev, next, true);
                    prev = next;
                    next += 1;
                }
            }
            Ok(g)
        }
        Family::Cartesian(a, b) => {
            let (ga, gb) = (construct_family(a)?, construct_family(b)?);
            let (na, nb) = (ga.order(), gb.order());
            let mut g = Graph::empty(na * nb)?;
            for x in 0..na {
                for (u, v) in gb.edges() {
                    g.set(x * nb + u, x * nb + v, true);
                }
            }
            for (u, v) in ga.edges() {
                for y in 0..nb {
                    g.set(u * nb + y, v * nb + y, true);
                }
            }
            Ok(g)
        }
        Family::Complement(a) => Ok(construct_family(a)?.complement()),
        Family::DisjointUnion(parts) => {
            let graphs = parts.iter().map(construct_family).collect::<Result<Vec<_>>>()?;
            disjoint_union(&graphs)
        }
        Family::Copies(a, t) => {
            if *t == 0 {
                return Err(invalid("copies needs t >= 1"));
            }
            let g = construct_family(a)?;
            disjoint_union(&vec![g; *t])
        }
        Family::Blowup(a, t) => {
            if *t == 0 {
                return Err(invalid("blowup needs t >= 1"));
            }
            let base = construct_family(a)?;
            let mut g = Graph::empty(base.order() * t)?;
            for (u, v) in base.edges() {
                for i in 0..*t {
                    for j in 0..*t {
                        g.set(u * t + i, v * t + j, true);
                    }
                }
            }
            Ok(g)
        }
        Family::Graph6(s) => parse_graph6(s),
    }
}

/// Disjoint union with the parts laid out consecutively.
pub(crate) fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(invalid("union needs at least one part"));
    }
    let mut g = Graph::empty(parts.iter().map(Graph::order).sum())?;
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.set(offset + u, offset + v, true);
        }
        offset += p.order();
    }
    Ok(g)
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Empty(n) => write!(f, "E{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Family::CompleteMultipartite(p) => write!(f, "K{}", join(p)),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::Petersen => f.write_str("petersen"),
            Family::Circulant(n, s) => write!(f, "circ({n};{})", join(s)),
            Family::Spider(legs) => write!(f, "spider({})", join(legs)),
            Family::Cartesian(a, b) => write!(f, "prod({a},{b})"),
            Family::Complement(a) => write!(f, "comp({a})"),
            Family::DisjointUnion(p) => write!(f, "union({})", join(p)),
            Family::Copies(a, t) => write!(f, "copies({t},{a})"),
            Family::Blowup(a, t) => write!(f, "blowup({t},{a})"),
            Family::Graph6(s) => write!(f, "g6:{s}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn error(&self, what: &str) -> Error {
        invalid(format!("{what} at position {} in {:?}", self.pos, self.src))
    }

    fn eat(&mut self, c: char) -> Result<()> {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..len].parse().map_err(|_| self.error("number too large"))?;
        self.pos += len;
        Ok(n)
    }

    fn numbers(&mut self, sep: char) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        while self.rest().starts_with(sep) && self.rest()[1..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn family(&mut self) -> Result<Family> {
        let name_len = self.rest().bytes().take_while(u8::is_ascii_alphabetic).count();
        let name = self.rest()[..name_len].to_string();
        self.pos += name_len;
        match name.as_str() {
            "g" if self.rest().starts_with("6:") => {
                self.pos += 2;
                let len = self.rest().bytes().take_while(|b| (63..=126).contains(b)).count();
                let s = self.rest()[..len].to_string();
                self.pos += len;
                Ok(Family::Graph6(s))
            }
            "K" => {
                let parts = self.numbers(',')?;
                Ok(match parts.as_slice() {
                    [n] => Family::Complete(*n),
                    [a, b] => Family::CompleteBipartite(*a, *b),
                    _ => Family::CompleteMultipartite(parts),
                })
            }
            "E" => Ok(Family::Empty(self.number()?)),
            "C" => Ok(Family::Cycle(self.number()?)),
            "P" => Ok(Family::Path(self.number()?)),
            "petersen" => Ok(Family::Petersen),
            "circ" => {
                self.eat('(')?;
                let n = self.number()?;
                self.eat(';')?;
                let s = self.numbers(',')?;
                self.eat(')')?;
                Ok(Family::Circulant(n, s))
            }
            "spider" => {
                self.eat('(')?;
                let legs = self.numbers(',')?;
                self.eat(')')?;
                Ok(Family::Spider(legs))
            }
            "prod" | "union" => {
                self.eat('(')?;
                let mut parts = vec![self.family()?];
                while self.rest().starts_with(',') {
                    self.pos += 1;
                    parts.push(self.family()?);
                }
                self.eat(')')?;
                if name == "union" {
                    Ok(Family::DisjointUnion(parts))
                } else if parts.len() == 2 {
                    let b = parts.pop().expect("two parts");
                    let a = parts.pop().expect("two parts");
                    Ok(Family::Cartesian(Box::new(a), Box::new(b)))
                } else {
                    Err(self.error("prod takes two graphs"))
                }
            }
            "comp" => {
                self.eat('(')?;
                let a = self.family()?;
                self.eat(')')?;
                Ok(Family::Complement(Box::new(a)))
            }
            "copies" | "blowup" => {
                self.eat('(')?;
                let t = self.number()?;
                self.eat(',')?;
                let a = Box::new(self.family()?);
                self.eat(')')?;
                Ok(if name == "copies" {
                    Family::Copies(a, t)
                } else {
                    Family::Blowup(a, t)
                })
            }
            _ => Err(self.error(&format!("unknown family {name:?}"))),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { src: &compact, pos: 0 };
        let f = p.family()?;
        if p.pos != compact.len() {
            return Err(p.error("trailing input"));
        }
        Ok(f)
    }
}

impl From<&Graph> for Family {
    fn from(g: &Graph) -> Family {
        Family::Graph6(write_graph6(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::canonical_graph6;

    fn build(s: &str) -> Graph {
        construct_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn complete_graph() {
        let k4 = build("K4");
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regular_degree(), Some(3));
    }

    #[test]
    fn complement_of_triangle_plus_pentagon() {
        let g = build("comp(union(K3,C5))");
        assert_eq!(g.order(), 8);
        assert_eq!(g.regular_degree(), Some(5));
    }

    #[test]
    fn circulant_two_three() {
        let g = build("circ(7;2,3)");
        assert_eq!(g.order(), 7);
        assert_eq!(g.regular_degree(), Some(4));
        assert!(construct_family(&Family::Circulant(7, vec![7])).is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(construct_family(&Family::CompleteBipartite(0, 3)).is_err());
        assert!(construct_family(&Family::Cycle(2)).is_err());
        assert!(construct_family(&Family::Copies(Box::new(Family::Complete(3)), 0)).is_err());
        assert!("K".parse::<Family>().is_err());
        assert!("circ(7;2,3".parse::<Family>().is_err());
        assert!("hexagon".parse::<Family>().is_err());
    }

    #[test]
    fn named_isomorphisms() {
        let iso = |a: &str, b: &str| canonical_graph6(&build(a)).unwrap() == canonical_graph6(&build(b)).unwrap();
        assert!(iso("K2,2,2", "comp(copies(3,K2))"));
        assert!(iso("prod(K3,K3)", "comp(prod(K3,K3))"));
        assert!(iso("blowup(3,K2)", "K3,3"));
        assert!(iso("circ(5;1)", "C5"));
        assert!(iso("comp(petersen)", "comp(comp(comp(petersen)))"));
        assert!(iso("spider(1,1,1)", "K1,3"));
        assert!(!iso("prod(K2,C4)", "K4,4"));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "K4",
            "K3,3",
            "K2,2,2",
            "circ(12;2,3)",
            "comp(union(K3,C5))",
            "copies(2,petersen)",
            "blowup(2,C5)",
            "prod(K3,K3)",
            "spider(2,2,1)",
            "g6:C~",
            "E3",
            "P4",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
    }
}
