use deficit_takagi::floor_log2;
use deficit_takagi::identities::{
    a026644_recurrence, half_value_indices, interval_minimum, lichtenberg, power4_fixed_points,
};

#[test]
fn one_half_value_per_dyadic_interval() {
    let found = half_value_indices(1 << 16).unwrap();
    for k in 1..16u32 {
        let inside = found
            .iter()
            .filter(|&&n| (1u64 << k) <= n && n < (1u64 << (k + 1)))
            .count();
        assert_eq!(inside, 1, "k={k}");
    }
    assert_eq!(found.len(), 15);
    // the strict bound n < 3*2^(j-1) - 1 holds from the second term on; 2 sits on it
    for &n in &found[1..] {
        let j = floor_log2(n);
        assert!(n + 1 < 3 << (j - 1), "n={n}");
    }
    assert_eq!(found[0], 2);
}

#[test]
fn recurrence_reproduces_scan() {
    let found = half_value_indices(1 << 16).unwrap();
    assert_eq!(a026644_recurrence(found.len()).unwrap(), found);
    let halves: Vec<u64> = found.iter().map(|n| n / 2).collect();
    assert_eq!(lichtenberg(found.len()).unwrap(), halves);
}

#[test]
fn interval_minima_respect_half_value_terms() {
    let terms = a026644_recurrence(14).unwrap();
    let lich = lichtenberg(14).unwrap();
    for k in 1..=14u32 {
        let m = interval_minimum(k).unwrap();
        let j = (k - 1) as usize;
        assert!((1u64 << k) <= terms[j] && terms[j] < (1u64 << (k + 1)));
        assert!(m.argmin <= terms[j], "k={k}");
        assert!(m.min as u64 <= lich[j], "k={k}");
        assert_eq!(m.argmin, m.argmins[0]);
    }
}

#[test]
fn power_of_four_fixed_points() {
    let points = power4_fixed_points(12).unwrap();
    assert!(points.iter().all(|p| p.holds()));
    assert_eq!(points[12].expected, 1 << 24);
}
