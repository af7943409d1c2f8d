//! Permutations of `{0, .., n-1}` with 1-based cycle and one-line notation.
//!
//! Products are read left to right: `p.then(&q)` sends `x` to `q(p(x))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u8).collect())
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::Usage(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All permutations of the given degree in lexicographic one-line order.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut current: Vec<u8> = (0..degree as u8).collect();
        let mut out = vec![Permutation(current.clone())];
        // Standard next-permutation step.
        while let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) {
            let pivot = i - 1;
            let j = (pivot + 1..current.len())
                .rev()
                .find(|&j| current[j] > current[pivot])
                .expect("successor exists");
            current.swap(pivot, j);
            current[pivot + 1..].reverse();
            out.push(Permutation(current.clone()));
        }
        out
    }

    /// Parses `()`, `(1 2 3)(4 5)`, `(1,2,3)` or `[2 3 1]` on `degree` points.
    ///
    /// A run of cycles is multiplied left to right.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        if let Some(body) = text.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::Usage(format!("unterminated one-line permutation `{text}`")))?;
            let points = parse_points(body, degree, text)?;
            if points.len() != degree {
                return Err(Error::Usage(format!(
                    "`{text}` lists {} images, expected {degree}",
                    points.len()
                )));
            }
            return Permutation::from_images(points.into_iter().map(|p| p as u8).collect())
                .map_err(|_| Error::Usage(format!("`{text}` is not a permutation")));
        }
        if !text.starts_with('(') {
            return Err(Error::Usage(format!("`{text}` is not a permutation literal")));
        }
        let mut result = Permutation::identity(degree);
        let mut rest = text;
        while !rest.is_empty() {
            let body_end = rest
                .find(')')
                .ok_or_else(|| Error::Usage(format!("unbalanced parentheses in `{text}`")))?;
            if !rest.starts_with('(') {
                return Err(Error::Usage(format!("unexpected text in `{text}`")));
            }
            let body = &rest[1..body_end];
            let points = parse_points(body, degree, text)?;
            let mut seen = vec![false; degree];
            for &p in &points {
                if seen[p] {
                    return Err(Error::Usage(format!("repeated point in cycle `{text}`")));
                }
                seen[p] = true;
            }
            let mut images: Vec<u8> = (0..degree as u8).collect();
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()] as u8;
            }
            result = result.then(&Permutation(images));
            rest = rest[body_end + 1..].trim_start();
        }
        Ok(result)
    }
}

fn parse_points(body: &str, degree: usize, whole: &str) -> Result<Vec<usize>> {
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            let p: usize = s
                .parse()
                .map_err(|_| Error::Usage(format!("bad point `{s}` in `{whole}`")))?;
            if p == 0 || p > degree {
                return Err(Error::Usage(format!(
                    "point {p} out of range 1..={degree} in `{whole}`"
                )));
            }
            Ok(p - 1)
        })
        .collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all = Permutation::all(3);
        let shown: Vec<String> = all.iter().map(|p| format!("{:?}", p.images())).collect();
        assert_eq!(
            shown,
            [
                "[0, 1, 2]",
                "[0, 2, 1]",
                "[1, 0, 2]",
                "[1, 2, 0]",
                "[2, 0, 1]",
                "[2, 1, 0]"
            ]
        );
        assert_eq!(Permutation::all(5).len(), 120);
        assert_eq!(Permutation::all(1).len(), 1);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        let q = Permutation::parse("[2 3 1]", 3).unwrap();
        assert_eq!(q.to_string(), "(1 2 3)");
        assert_eq!(Permutation::parse("(1,2,3)", 3).unwrap(), q);
        assert_eq!(Permutation::parse("()", 3).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn products_read_left_to_right() {
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        let a = Permutation::parse("(1 2 3)", 3).unwrap();
        let b = Permutation::parse("(1 2)", 3).unwrap();
        assert_eq!(a.then(&b).to_string(), "(2 3)");
        assert_eq!(Permutation::parse("(1 2)(2 3)", 3).unwrap().to_string(), "(1 3 2)");
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(1 1)", 3).is_err());
        assert!(Permutation::parse("[1 1 2]", 3).is_err());
        assert!(Permutation::parse("[1 2]", 3).is_err());
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("12", 3).is_err());
    }
}
