use crate::trace::Partition;

/// Number of standard Young tableaux of shape `lambda`, by placing
/// `1, 2, ..., n` one cell at a time.
pub fn count_standard_tableaux(lambda: &Partition) -> u64 {
    fn go(shape: &[usize], filled: &mut Vec<usize>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let ok = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if ok {
                filled[r] += 1;
                total += go(shape, filled, left - 1);
                filled[r] -= 1;
            }
        }
        total
    }
    let shape = lambda.parts();
    go(shape, &mut vec![0; shape.len()], lambda.size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::partitions_of;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_shapes() {
        assert_eq!(count_standard_tableaux(&pt(&[4])), 1);
        assert_eq!(count_standard_tableaux(&pt(&[2, 1])), 2);
        assert_eq!(count_standard_tableaux(&pt(&[2, 2])), 2);
        assert_eq!(count_standard_tableaux(&pt(&[3, 2])), 5);
        assert_eq!(count_standard_tableaux(&pt(&[])), 1);
    }

    #[test]
    fn squares_sum_to_factorial() {
        for n in 0..=7u64 {
            let sum: u64 = partitions_of(n as usize)
                .iter()
                .map(|l| count_standard_tableaux(l).pow(2))
                .sum();
            assert_eq!(sum, (1..=n).product::<u64>());
        }
    }
}
