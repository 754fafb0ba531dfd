//! Named lattices: √2 times the standard root-lattice Gram matrices.

use super::{e8_cartan, IntegralLattice};
use crate::error::{Error, Result};

/// Catalog entries; `sqrt2A1xN` stands for `N` orthogonal copies, e.g. `sqrt2A1x3`.
pub const PRESET_NAMES: &[&str] = &["sqrt2A1", "sqrt2A1xN", "sqrt2A2", "sqrt2D4", "sqrt2E8", "sqrt2E8_A1"];

pub fn preset_names() -> &'static [&'static str] {
    PRESET_NAMES
}

fn doubled(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    cartan.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect()
}

fn block_sum(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len() + b.len();
    let mut g = vec![vec![0; n]; n];
    for (i, r) in a.iter().enumerate() {
        g[i][..a.len()].copy_from_slice(r);
    }
    for (i, r) in b.iter().enumerate() {
        g[a.len() + i][a.len()..].copy_from_slice(r);
    }
    g
}

fn scaled_identity(n: usize, s: i64) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { s } else { 0 }).collect()).collect()
}

pub fn preset(name: &str) -> Result<IntegralLattice> {
    let gram = match name {
        "sqrt2A1" => vec![vec![4]],
        "sqrt2A2" => doubled(&[vec![2, -1], vec![-1, 2]]),
        "sqrt2D4" => doubled(&[vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]]),
        "sqrt2E8" => doubled(&e8_cartan()),
        "sqrt2E8_A1" => block_sum(&doubled(&e8_cartan()), &[vec![4]]),
        _ => match name.strip_prefix("sqrt2A1x").and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=16).contains(&n) => scaled_identity(n, 4),
            _ => return Err(Error::UnknownPreset(name.to_string())),
        },
    };
    let lattice = IntegralLattice::validate(gram, name)?;
    lattice.require_rootless()?;
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_load() {
        for name in ["sqrt2A1", "sqrt2A1x1", "sqrt2A1x4", "sqrt2A2", "sqrt2D4", "sqrt2E8", "sqrt2E8_A1"] {
            let l = preset(name).unwrap();
            assert!(l.is_rootless(), "{name}");
        }
        assert!(matches!(preset("E8"), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("sqrt2A1x0"), Err(Error::UnknownPreset(_))));
        assert_eq!(preset("sqrt2E8_A1").unwrap().rank(), 9);
    }

    #[test]
    fn shell_sizes() {
        assert_eq!(preset("sqrt2A2").unwrap().shell(4).len(), 6);
        assert_eq!(preset("sqrt2D4").unwrap().shell(4).len(), 24);
        assert_eq!(preset("sqrt2A1x3").unwrap().shell(4).len(), 6);
        assert_eq!(preset("sqrt2E8_A1").unwrap().shell(4).len(), 242);
    }
}
