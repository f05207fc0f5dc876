/// Smallest p ≥ 1 with `stream[i + p] == stream[i]` for every valid i,
/// provided the stream holds at least `min_repeats` full periods.
pub fn detect_period<T: PartialEq>(stream: &[T], min_repeats: usize) -> Option<usize> {
    let min_repeats = min_repeats.max(1);
    (1..=stream.len() / min_repeats)
        .find(|&p| (0..stream.len() - p).all(|i| stream[i + p] == stream[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let s = [0, 0, 1, 0, 0, 2, 0, 0, 1, 0, 0, 2, 0, 0, 1, 0, 0, 2];
        assert_eq!(detect_period(&s, 3), Some(6));
        assert_eq!(detect_period(&[1, 1, 1, 1], 2), Some(1));
        assert_eq!(detect_period(&[1, 2, 3], 2), None);
        assert_eq!(detect_period::<u8>(&[], 2), None);
    }

    proptest! {
        #[test]
        fn finds_planted_period(base in proptest::collection::vec(0u8..4, 1..8), reps in 2usize..5) {
            let stream: Vec<u8> = base.iter().cycle().take(base.len() * reps).cloned().collect();
            let p = detect_period(&stream, reps).unwrap();
            prop_assert!(base.len() % p == 0);
            prop_assert!(stream.windows(p + 1).all(|w| w[0] == w[p]));
        }
    }
}
