//! Small shared helpers.

/// Advances `values` through `{1..n}^len` in odometer order (last slot
/// fastest). Returns `false` once the odometer wraps past the final tuple.
pub(crate) fn advance_odometer(values: &mut [usize], n: usize) -> bool {
    for slot in (0..values.len()).rev() {
        if values[slot] < n {
            values[slot] += 1;
            return true;
        }
        values[slot] = 1;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_visits_every_tuple_once() {
        let mut values = vec![1usize; 3];
        let mut seen = Vec::new();
        loop {
            seen.push(values.clone());
            if !advance_odometer(&mut values, 2) {
                break;
            }
        }
        assert_eq!(seen.len(), 8);
        assert_eq!(seen[0], vec![1, 1, 1]);
        assert_eq!(seen[1], vec![1, 1, 2]);
        assert_eq!(seen[7], vec![2, 2, 2]);
    }
}
