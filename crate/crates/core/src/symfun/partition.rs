use std::fmt;

use crate::error::{Error, Result};

/// Integer partition stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts any weakly decreasing sequence; zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(width, ..., width)` with `rows` parts.
    pub fn rectangle(rows: usize, width: u32) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 0-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn fits_in(&self, rows: usize, width: u32) -> bool {
        self.len() <= rows && self.part(0) <= width
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `(height − λ_rows, ..., height − λ_1)`: the complement inside the
    /// `rows × height` box, read backwards.
    pub fn box_complement(&self, rows: usize, height: u32) -> Result<Partition> {
        if !self.fits_in(rows, height) {
            return Err(Error::Domain(format!(
                "{self} does not fit in a {rows}x{height} box"
            )));
        }
        Partition::new(
            (0..rows)
                .rev()
                .map(|i| height - self.part(i))
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn box_complement(lambda: &Partition, rows: usize, height: u32) -> Result<Partition> {
    lambda.box_complement(rows, height)
}

/// All partitions with at most `rows` parts, each at most `width`, in
/// lexicographic order of their parts.
pub fn partitions_in_box(rows: usize, width: u32) -> Vec<Partition> {
    fn fill(rows: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if prefix.len() == rows {
            out.push(Partition::new(prefix.clone()).expect("built decreasing"));
            return;
        }
        for v in (0..=cap).rev() {
            prefix.push(v);
            fill(rows, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(rows, width, &mut Vec::with_capacity(rows), &mut out);
    out.sort();
    out
}
