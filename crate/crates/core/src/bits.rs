//! Small helpers for subsets encoded as bitmasks.

pub type Mask = u32;

#[inline]
pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (32 - n)
    }
}

#[inline]
pub fn popcount(m: Mask) -> u32 {
    m.count_ones()
}

/// Bit positions of `m`, lowest first.
pub fn positions(m: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    let mut rest = m;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

/// Iterates over all submasks of `m`, in increasing numeric order.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == m {
            None
        } else {
            Some(((cur | !m).wrapping_add(1)) & m)
        };
        Some(cur)
    })
}

/// For every local mask `b` over `positions.len()` bits, the global mask obtained by
/// sending local bit `j` to global bit `positions[j]`.
pub fn expansion_table(positions: &[usize]) -> Vec<Mask> {
    let k = positions.len();
    let mut table = vec![0 as Mask; 1usize << k];
    for b in 1..table.len() {
        let low = b.trailing_zeros() as usize;
        table[b] = table[b & (b - 1)] | (1 << positions[low]);
    }
    table
}

/// Inverse of [`expansion_table`]: the local index of a global submask of `sub`.
pub fn compress(mask: Mask, sub: Mask) -> Mask {
    let mut out = 0;
    let mut j = 0;
    let mut rest = sub;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if mask & bit != 0 {
            out |= 1 << j;
        }
        j += 1;
        rest &= rest - 1;
    }
    out
}

/// Renders a mask as the sorted 1-based element list.
pub fn to_elements(m: Mask) -> Vec<usize> {
    positions(m).into_iter().map(|p| p + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_enumerates_all() {
        let subs: Vec<Mask> = submasks(0b1010).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(submasks(full(5)).count(), 32);
    }

    #[test]
    fn expansion_and_compression_are_inverse() {
        let sub = 0b10110;
        let table = expansion_table(&positions(sub));
        for (b, &g) in table.iter().enumerate() {
            assert_eq!(g & !sub, 0);
            assert_eq!(compress(g, sub), b as Mask);
        }
    }

    #[test]
    fn full_masks() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(16), 0xffff);
    }
}
