use super::GroupStructure;

/// All set partitions of `0..n` (Bell(n) of them), generated as restricted
/// growth strings in lexicographic order.
pub fn set_partitions(n: usize) -> impl Iterator<Item = GroupStructure> {
    let mut rgs = vec![0usize; n];
    let mut done = n == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = GroupStructure::from_assignment(&rgs);
        // advance: bump the rightmost position that may grow
        done = true;
        for i in (1..n).rev() {
            let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                done = false;
                break;
            }
        }
        Some(current)
    })
}
