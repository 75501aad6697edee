//! Rational Dyck paths, the area and sweep statistics, rational q,t-Catalan
//! polynomials, and signed path counts on staircase-like Young shapes.
//!
//! An `(a, b)` grid is `a` boxes high and `b` boxes wide. A path uses `a`
//! north and `b` east steps from `(0, 0)` to `(b, a)` and never goes below the
//! line through those corners: every lattice point `(x, y)` it visits has
//! `y * b >= x * a`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result, SieveError};
use crate::polyqt::BivariatePolynomial;
use crate::util::gcd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    height: u32,
    width: u32,
    steps: Vec<Step>,
}

/// Smallest height an east step in column `col` may sit at.
fn floor_height(a: u32, b: u32, col: u32) -> u32 {
    let num = (col as u64 + 1) * a as u64;
    num.div_ceil(b as u64) as u32
}

impl DyckPath {
    pub fn new(height: u32, width: u32, steps: Vec<Step>) -> Result<Self> {
        let path = Self { height, width, steps };
        if !path.is_valid() {
            return domain(format!("{path} is not a ({height},{width}) Dyck path"));
        }
        Ok(path)
    }

    pub fn grid(&self) -> (u32, u32) {
        (self.height, self.width)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<(u32, u32)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    pub fn is_valid(&self) -> bool {
        let n = self.steps.iter().filter(|&&s| s == Step::N).count();
        if n != self.height as usize || self.steps.len() != (self.height + self.width) as usize {
            return false;
        }
        let (a, b) = (self.height as u64, self.width as u64);
        self.points().iter().all(|&(x, y)| y as u64 * b >= x as u64 * a)
    }

    /// Full boxes between the path and the diagonal.
    pub fn area(&self) -> u32 {
        let mut area = 0;
        let (mut x, mut y) = (0, 0);
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => {
                    area += y - floor_height(self.height, self.width, x);
                    x += 1;
                }
            }
        }
        area
    }

    /// Level of the lattice point `(x, y)`: `b*y - a*x`, nonnegative on or
    /// above the diagonal.
    fn level(&self, x: u32, y: u32) -> i64 {
        self.width as i64 * y as i64 - self.height as i64 * x as i64
    }

    /// Sweep map: each step is labelled by the level of its starting point
    /// (north adds `b`, east subtracts `a`), and the steps are re-read in
    /// increasing label order.
    pub fn sweep(&self) -> Result<DyckPath> {
        if gcd(self.height as u64, self.width as u64) != 1 {
            return Err(SieveError::Unsupported(format!(
                "sweep needs coprime grid dimensions, got ({}, {})",
                self.height, self.width
            )));
        }
        let pts = self.points();
        let mut labelled: Vec<(i64, Step)> = self
            .steps
            .iter()
            .zip(&pts)
            .map(|(&s, &(x, y))| (self.level(x, y), s))
            .collect();
        labelled.sort_unstable();
        let steps = labelled.into_iter().map(|(_, s)| s).collect();
        DyckPath::new(self.height, self.width, steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::N { 'N' } else { 'E' })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = SieveError;

    /// Parses an N/E word; the grid is read off the step counts.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(SieveError::Domain(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let a = steps.iter().filter(|&&s| s == Step::N).count() as u32;
        let b = steps.len() as u32 - a;
        DyckPath::new(a, b, steps)
    }
}

/// Iterator over all `(a, b)` Dyck paths, lexicographic in the heights of
/// the east steps.
pub struct DyckPaths {
    a: u32,
    b: u32,
    heights: Option<Vec<u32>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let hs = self.heights.as_mut()?;
        let mut steps = Vec::with_capacity((self.a + self.b) as usize);
        let mut y = 0;
        for &h in hs.iter() {
            steps.extend(std::iter::repeat_n(Step::N, (h - y) as usize));
            steps.push(Step::E);
            y = h;
        }
        steps.extend(std::iter::repeat_n(Step::N, (self.a - y) as usize));
        let path = DyckPath { height: self.a, width: self.b, steps };

        let mut advanced = false;
        for j in (0..hs.len()).rev() {
            if hs[j] < self.a {
                hs[j] += 1;
                let base = hs[j];
                for (i, h) in hs.iter_mut().enumerate().skip(j + 1) {
                    *h = base.max(floor_height(self.a, self.b, i as u32));
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.heights = None;
        }
        Some(path)
    }
}

pub fn enumerate_dyck(a: u32, b: u32) -> Result<DyckPaths> {
    if a == 0 || b == 0 {
        return domain("Dyck path grids need a, b >= 1");
    }
    let heights = (0..b).map(|j| floor_height(a, b, j)).collect();
    Ok(DyckPaths { a, b, heights: Some(heights) })
}

/// `Cat_{a,b}(q,t) = sum over paths of q^area t^area(sweep)`.
pub fn rational_qt_catalan(a: u32, b: u32) -> Result<BivariatePolynomial> {
    if gcd(a as u64, b as u64) != 1 {
        return Err(SieveError::Unsupported(format!(
            "rational q,t-Catalan needs coprime (a, b), got ({a}, {b})"
        )));
    }
    let mut terms = Vec::new();
    for p in enumerate_dyck(a, b)? {
        let swept = p.sweep()?;
        terms.push(((p.area(), swept.area()), BigInt::one()));
    }
    Ok(BivariatePolynomial::from_terms(terms))
}

/// Young shape given by row lengths, top row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungShape {
    rows: Vec<u32>,
}

impl YoungShape {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("row lengths {rows:?} are not weakly decreasing"));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cell_count(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }
}

impl fmt::Display for YoungShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `Y_s(l, m)`: rows `l + (m-1)s, l + (m-2)s, ..., l`. `m = 0` gives the
/// empty shape.
pub fn young_shape(s: u32, l: u32, m: u32) -> YoungShape {
    YoungShape {
        rows: (1..=m).map(|k| l + (m - k) * s).collect(),
    }
}

/// Boxes of the `(a, b)` grid lying entirely above the diagonal, read as
/// column heights from left to right.
///
/// Transposing a grid path maps it to a path in this shape with the same
/// area, so `signed_shape_count(cells_above_diagonal(a, b))` is the signed
/// area census of the `(a, b)` Dyck paths.
pub fn cells_above_diagonal(a: u32, b: u32) -> YoungShape {
    YoungShape {
        rows: (0..b).map(|j| a - floor_height(a, b, j)).collect(),
    }
}

/// Sum of `(-1)^area` over monotone paths through the shape, where a path
/// picks, for each row from the bottom up, a weakly increasing cut position
/// no larger than the row length, and the area is the number of cells to the
/// right of the cuts.
pub fn signed_shape_count(shape: &YoungShape) -> BigInt {
    let rows: Vec<usize> = shape.rows.iter().rev().map(|&r| r as usize).collect();
    if rows.is_empty() {
        return BigInt::one();
    }
    let sign = |r: usize, x: usize| if (r - x).is_multiple_of(2) { 1 } else { -1 };
    let mut weights: Vec<BigInt> = (0..=rows[0]).map(|x| BigInt::from(sign(rows[0], x))).collect();
    for &r in &rows[1..] {
        let mut next = Vec::with_capacity(r + 1);
        let mut prefix = BigInt::zero();
        for x in 0..=r {
            if let Some(w) = weights.get(x) {
                prefix += w;
            }
            next.push(if sign(r, x) == 1 { prefix.clone() } else { -prefix.clone() });
        }
        weights = next;
    }
    weights.into_iter().sum()
}

/// `D_s(l, m)`: the signed path count of `Y_s(l, m)`.
pub fn signed_staircase(s: u32, l: u32, m: u32) -> BigInt {
    signed_shape_count(&young_shape(s, l, m))
}
