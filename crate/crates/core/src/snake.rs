//! Lattice-path models: q-binomials and snake graphs.
//!
//! Paths run north-east along box edges from the lower-left corner of a
//! region to its upper-right corner; a path's area is the number of boxes
//! of the region lying below it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::contfrac::{CfKind, ContinuedFraction, Fraction, Parity};
use crate::error::{Error, Result};
use crate::ring::IntPoly;

/// Gaussian binomial `(n choose m)_q` by the weighted Pascal rule
/// `C(n, m) = C(n-1, m-1) + q^m C(n-1, m)`.
pub fn q_binomial(n: i64, m: i64) -> Result<IntPoly> {
    if n < 0 || m < 0 || m > n {
        return Err(Error::InvalidArguments(format!(
            "need 0 <= m <= n, got n = {n}, m = {m}"
        )));
    }
    let (n, m) = (n as usize, m as usize);
    // row[j] = C(i, j) for the current i
    let mut row = vec![IntPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i.min(m) {
            let left = if j > 0 { row[j - 1].clone() } else { IntPoly::zero() };
            let right = row.get(j).map(|p| p.shift(j)).unwrap_or_else(IntPoly::zero);
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row[m].clone())
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, k| &acc * &IntPoly::q_int(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionKind {
    Rectangle,
    Snake,
}

/// Unit boxes `(x, y)`, each the square `[x, x+1] x [y, y+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridRegion {
    kind: RegionKind,
    boxes: Vec<(i64, i64)>,
}

impl GridRegion {
    /// `width x height` boxes.
    pub fn rectangle(width: usize, height: usize) -> Self {
        let boxes = (0..height as i64)
            .flat_map(|y| (0..width as i64).map(move |x| (x, y)))
            .collect();
        GridRegion {
            kind: RegionKind::Rectangle,
            boxes,
        }
    }

    /// A chain of boxes, each directly above or right of its predecessor.
    pub fn snake(boxes: Vec<(i64, i64)>) -> Result<Self> {
        let distinct: BTreeSet<_> = boxes.iter().collect();
        if distinct.len() != boxes.len() {
            return Err(Error::InvalidSnakeInput("repeated box".into()));
        }
        for w in boxes.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b != (a.0, a.1 + 1) && b != (a.0 + 1, a.1) {
                return Err(Error::InvalidSnakeInput(format!(
                    "box {b:?} is not above or right of {a:?}"
                )));
            }
        }
        Ok(GridRegion {
            kind: RegionKind::Snake,
            boxes,
        })
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn boxes(&self) -> &[(i64, i64)] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Rows from top to bottom, `[]` for a box and spaces elsewhere.
    pub fn to_ascii(&self) -> String {
        if self.boxes.is_empty() {
            return String::new();
        }
        let set: BTreeSet<_> = self.boxes.iter().copied().collect();
        let (x0, x1) = bounds(self.boxes.iter().map(|b| b.0));
        let (y0, y1) = bounds(self.boxes.iter().map(|b| b.1));
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            let mut line = String::new();
            for x in x0..=x1 {
                line.push_str(if set.contains(&(x, y)) { "[]" } else { "  " });
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

fn bounds(it: impl Iterator<Item = i64>) -> (i64, i64) {
    it.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// The snake of an even-length regular expansion `[a1, ..., a_2l]` of a
/// value at least 1: starting from one box, go `a1 - 1` up, `a2` right,
/// `a3` up, ..., `a_{2l-1}` up and finally `a_2l - 1` right.
pub fn snake_graph(cf: &ContinuedFraction) -> Result<GridRegion> {
    if cf.kind() != CfKind::Regular {
        return Err(Error::InvalidSnakeInput("expected a regular continued fraction".into()));
    }
    let t = cf.terms();
    if t.len() % 2 == 1 {
        return Err(Error::InvalidSnakeInput(format!(
            "odd length {}; normalize to even length first",
            t.len()
        )));
    }
    // 1 = [0; 1] is the empty snake
    if t == [0, 1] {
        return GridRegion::snake(Vec::new());
    }
    if t[0] < 1 {
        return Err(Error::InvalidSnakeInput("value must be at least 1".into()));
    }
    let last = t.len() - 1;
    let mut boxes = vec![(0i64, 0i64)];
    for (i, &a) in t.iter().enumerate() {
        let steps = if i == 0 || i == last { a - 1 } else { a };
        let (dx, dy) = if i % 2 == 0 { (0, 1) } else { (1, 0) };
        for _ in 0..steps {
            let (x, y) = *boxes.last().expect("nonempty");
            boxes.push((x + dx, y + dy));
        }
    }
    GridRegion::snake(boxes)
}

/// The snake of `x >= 1` from its even-length expansion.
pub fn snake_of(x: &Fraction) -> Result<GridRegion> {
    if x.is_infinite() || *x < Fraction::from_int(1) {
        return Err(Error::InvalidSnakeInput(format!("{x} is not at least 1")));
    }
    let cf = ContinuedFraction::of_regular(x)?.normalize(Parity::Even)?;
    snake_graph(&cf)
}

/// Area generating polynomial of the north-east paths through `region`.
pub fn count_paths_by_area(region: &GridRegion) -> IntPoly {
    if region.is_empty() {
        return IntPoly::one();
    }
    let boxes: BTreeSet<(i64, i64)> = region.boxes.iter().copied().collect();
    let has_edge_h = |x: i64, y: i64| boxes.contains(&(x, y)) || boxes.contains(&(x, y - 1));
    let has_edge_v = |x: i64, y: i64| boxes.contains(&(x, y)) || boxes.contains(&(x - 1, y));
    // boxes of column x strictly below height y
    let below = |x: i64, y: i64| boxes.iter().filter(|b| b.0 == x && b.1 < y).count();

    let (x0, x1) = bounds(boxes.iter().map(|b| b.0));
    let (y0, y1) = bounds(boxes.iter().map(|b| b.1));
    let (start, end) = ((x0, y0), (x1 + 1, y1 + 1));

    // vertices in order of x + y, so predecessors are finished first
    let mut table: BTreeMap<(i64, (i64, i64)), IntPoly> = BTreeMap::new();
    table.insert((start.0 + start.1, start), IntPoly::one());
    let mut result = IntPoly::zero();
    while let Some(((_, v), poly)) = table.pop_first() {
        if v == end {
            result = &result + &poly;
            continue;
        }
        let (x, y) = v;
        if has_edge_h(x, y) {
            let step = poly.shift(below(x, y));
            let e = table.entry((x + y + 1, (x + 1, y))).or_insert_with(IntPoly::zero);
            *e = &*e + &step;
        }
        if has_edge_v(x, y) {
            let e = table.entry((x + y + 1, (x, y + 1))).or_insert_with(IntPoly::zero);
            *e = &*e + &poly;
        }
    }
    result
}

/// The denominator of `[x]_q` from a smaller snake. Writing `x = a1 + 1/y`,
/// the denominator is the numerator of `[y]_q` with `q -> 1/q`, up to a
/// power of `q`; returned here without that power.
pub fn snake_denominator(x: &Fraction) -> Result<IntPoly> {
    if x.is_infinite() || *x < Fraction::from_int(1) {
        return Err(Error::InvalidSnakeInput(format!("{x} is not at least 1")));
    }
    if x.is_integer() {
        return Ok(IntPoly::one());
    }
    let y = (x - &Fraction::from_int(x.floor())).recip();
    let ny = if y == Fraction::from_int(1) {
        IntPoly::one()
    } else {
        count_paths_by_area(&snake_of(&y)?)
    };
    Ok(ny.reversed().strip_q_power().0)
}

/// Number of lattice paths in `region` (the value at `q = 1`).
pub fn path_count(region: &GridRegion) -> BigInt {
    count_paths_by_area(region)
        .coeffs()
        .iter()
        .fold(BigInt::zero(), |a, c| a + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrational::{q_rational, Method};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0).unwrap(), IntPoly::one());
        assert_eq!(q_binomial(5, 2).unwrap(), p(&[1, 1, 2, 2, 2, 1, 1]));
        assert!(q_binomial(3, 4).is_err());
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..=12usize {
            for m in 0..=n {
                let den = &q_factorial(m) * &q_factorial(n - m);
                let expected = q_factorial(n).div_exact(&den).unwrap();
                assert_eq!(q_binomial(n as i64, m as i64).unwrap(), expected);
            }
        }
    }

    #[test]
    fn rectangles_give_binomials() {
        assert_eq!(count_paths_by_area(&GridRegion::rectangle(2, 2)), p(&[1, 1, 2, 1, 1]));
        for a in 0..=5 {
            for b in 0..=5 {
                let r = GridRegion::rectangle(a, b);
                let want = q_binomial((a + b) as i64, a as i64).unwrap();
                assert_eq!(count_paths_by_area(&r), want, "{a}x{b}");
            }
        }
    }

    #[test]
    fn snake_shapes() {
        let s = snake_of(&"5/2".parse().unwrap()).unwrap();
        assert_eq!(s.boxes(), &[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(s.to_ascii(), "[][]\n[]\n");
        let t = snake_of(&"5/3".parse().unwrap()).unwrap();
        assert_eq!(t.boxes(), &[(0, 0), (1, 0), (1, 1)]);
        let n = snake_of(&Fraction::from_int(5)).unwrap();
        assert_eq!(n.len(), 4);
        assert_eq!(count_paths_by_area(&n), IntPoly::q_int(5));
    }

    #[test]
    fn snake_counts_numerators() {
        assert_eq!(
            count_paths_by_area(&snake_of(&"5/2".parse().unwrap()).unwrap()),
            p(&[1, 2, 1, 1])
        );
        assert_eq!(count_paths_by_area(&GridRegion::snake(vec![]).unwrap()), IntPoly::one());
        for n in 1..=25i64 {
            for m in 1..=n {
                let x = Fraction::new(n, m).unwrap();
                if x.den() != &BigInt::from(m) {
                    continue;
                }
                let q = q_rational(&x, Method::Negcf);
                let s = snake_of(&x).unwrap();
                assert_eq!(s.len() as i64, ContinuedFraction::of_regular(&x).unwrap().terms().iter().sum::<i64>() - 1);
                assert_eq!(&count_paths_by_area(&s), q.num(), "{x}");
                assert_eq!(&snake_denominator(&x).unwrap(), &q.den().strip_q_power().0, "{x}");
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        let odd = ContinuedFraction::regular(vec![2, 3, 1]).unwrap();
        assert!(snake_graph(&odd).is_err());
        assert!(snake_of(&"1/2".parse().unwrap()).is_err());
        assert!(GridRegion::snake(vec![(0, 0), (2, 0)]).is_err());
    }
}
