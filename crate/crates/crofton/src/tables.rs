//! The five reference tables, regenerated from the formula layer.

use crofton_core::arrays::{ArrayCache, Arrays};
use crofton_core::closed_forms::{sylvester_probability, zero_cell_f_vector};

use crate::formats::{Entry, Listing};

pub const TABLE_COUNT: u8 = 5;

fn title(which: u8) -> &'static str {
    match which {
        1 => "Expected f-vector E f_0, ..., E f_(d-1) of the Poisson zero cell, d = 1..10",
        2 => "A[n,k] for n = 1..14 and even k = 0..14",
        3 => "A[n,k] for n = 0..8 and k = 0..5",
        4 => "B{n,k} for n = 1..10 and k = 1..4",
        5 => "P(d), probability that d+2 uniform points on the upper half-sphere span a simplex, d = 1..10",
        _ => unreachable!(),
    }
}

/// Table `which` in `1..=5`, or `None` for any other number.
pub fn table(which: u8, cache: &ArrayCache) -> Option<Listing> {
    let (key_names, entries): (Vec<&'static str>, Vec<Entry>) = match which {
        1 => (
            vec!["d"],
            (1..=10)
                .map(|d| Entry { keys: vec![d as i64], values: zero_cell_f_vector(cache, d).into_entries() })
                .collect(),
        ),
        2 => (
            vec!["n", "k"],
            (1..=14u32)
                .flat_map(|n| (0..=14).step_by(2).map(move |k| (n, k)))
                .map(|(n, k)| Entry { keys: vec![n as i64, k as i64], values: vec![cache.a(n, k)] })
                .collect(),
        ),
        3 => (
            vec!["n", "k"],
            (0..=8u32)
                .flat_map(|n| (0..=5).map(move |k| (n, k)))
                .map(|(n, k)| Entry { keys: vec![n as i64, k as i64], values: vec![cache.a(n, k)] })
                .collect(),
        ),
        4 => (
            vec!["n", "k"],
            (1..=10u32)
                .flat_map(|n| (1..=4).map(move |k| (n, k)))
                .map(|(n, k)| Entry { keys: vec![n as i64, k as i64], values: vec![cache.b(n, k)] })
                .collect(),
        ),
        5 => (
            vec!["d"],
            (1..=10).map(|d| Entry { keys: vec![d as i64], values: vec![sylvester_probability(cache, d)] }).collect(),
        ),
        _ => return None,
    };
    Some(Listing { title: Some(title(which).to_string()), key_names, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::OutputFormat;

    #[test]
    fn shapes() {
        let c = ArrayCache::new();
        let sizes: Vec<usize> = (1..=TABLE_COUNT).map(|w| table(w, &c).unwrap().entries.len()).collect();
        assert_eq!(sizes, [10, 112, 54, 40, 10]);
        assert!(table(0, &c).is_none());
        assert!(table(6, &c).is_none());
    }

    #[test]
    fn spot_values() {
        let c = ArrayCache::new();
        let t2 = table(2, &c).unwrap().render(OutputFormat::Exact).unwrap();
        assert!(t2.contains("n=14 k=14: 18261468225\n"));
        let t5 = table(5, &c).unwrap().render(OutputFormat::Exact).unwrap();
        assert!(t5.contains("d=2: 24/pi^2 - 2\n"));
    }
}
