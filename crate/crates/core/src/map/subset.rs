use std::fmt;

use super::MapError;

/// Largest edge count an [`EdgeSubset`] can address.
pub const MAX_SUBSET_WIDTH: usize = 64;

/// A set of edge indices of a ribbon graph with `width` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    bits: u64,
    width: usize,
}

impl EdgeSubset {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_SUBSET_WIDTH, "subset width {width} too large");
        EdgeSubset { bits: 0, width }
    }

    pub fn full(width: usize) -> Self {
        Self::empty(width).complement()
    }

    /// Builds a subset from raw bits, rejecting bits at or above `width`.
    pub fn from_bits(bits: u64, width: usize) -> Result<Self, MapError> {
        if width > MAX_SUBSET_WIDTH {
            return Err(MapError::SubsetTooWide(width));
        }
        if bits & !mask(width) != 0 {
            return Err(MapError::EdgeOutOfRange {
                edge: 63 - bits.leading_zeros() as usize,
                edges: width,
            });
        }
        Ok(EdgeSubset { bits, width })
    }

    pub fn from_edges<I: IntoIterator<Item = usize>>(
        edges: I,
        width: usize,
    ) -> Result<Self, MapError> {
        if width > MAX_SUBSET_WIDTH {
            return Err(MapError::SubsetTooWide(width));
        }
        let mut bits = 0u64;
        for k in edges {
            if k >= width {
                return Err(MapError::EdgeOutOfRange {
                    edge: k,
                    edges: width,
                });
            }
            bits |= 1 << k;
        }
        Ok(EdgeSubset { bits, width })
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width
    }

    pub fn contains(self, k: usize) -> bool {
        k < self.width && self.bits >> k & 1 == 1
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn complement(self) -> Self {
        EdgeSubset {
            bits: !self.bits & mask(self.width),
            width: self.width,
        }
    }

    pub fn with(self, k: usize) -> Self {
        assert!(k < self.width);
        EdgeSubset {
            bits: self.bits | 1 << k,
            width: self.width,
        }
    }

    pub fn without(self, k: usize) -> Self {
        EdgeSubset {
            bits: self.bits & !(1u64.checked_shl(k as u32).unwrap_or(0)),
            width: self.width,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let k = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k)
            }
        })
    }

    /// Parses a comma-separated edge list such as `0,2,5` (empty string is the empty set).
    pub fn parse_list(text: &str, width: usize) -> Result<Self, MapError> {
        let text = text.trim();
        if text.is_empty() {
            return Self::from_edges(std::iter::empty(), width);
        }
        let mut edges = Vec::new();
        for item in text.split(',') {
            let k = item
                .trim()
                .parse::<usize>()
                .map_err(|_| MapError::BadSubset(item.trim().to_string()))?;
            edges.push(k);
        }
        Self::from_edges(edges, width)
    }

    /// Every subset of a `width`-edge set, in binary order.
    pub fn all(width: usize) -> impl Iterator<Item = EdgeSubset> {
        assert!(width < MAX_SUBSET_WIDTH);
        (0..1u64 << width).map(move |bits| EdgeSubset { bits, width })
    }
}

fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_stays_in_width() {
        let a = EdgeSubset::from_edges([0, 2], 4).unwrap();
        let c = a.complement();
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(c.complement(), a);
        assert_eq!(EdgeSubset::full(3).len(), 3);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(EdgeSubset::from_edges([3], 3).is_err());
        assert!(EdgeSubset::from_bits(0b1000, 3).is_err());
        assert!(EdgeSubset::parse_list("0,x", 3).is_err());
    }

    #[test]
    fn list_round_trip() {
        let a = EdgeSubset::parse_list("5, 0,2", 6).unwrap();
        assert_eq!(a.to_string(), "0,2,5");
        assert!(EdgeSubset::parse_list("", 4).unwrap().is_empty());
    }
}
