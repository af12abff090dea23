//! Drives the reduction by hand, one step at a time.
//!
//! Run with `cargo run --example reduction_trace -- 31 12 18 24 29`
//! (order first, then offsets). Without arguments the values above are used.

use toeplitz_fnf::{alpha_reduce, beta_reduce, da, reduce, OffsetSet};

fn main() -> toeplitz_fnf::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("arguments must be integers"))
        .collect();
    let (n, offsets) = match args.split_first() {
        Some((&n, rest)) => (n, rest.to_vec()),
        None => (31, vec![12, 18, 24, 29]),
    };

    let initial = OffsetSet::from_unsorted(n, offsets)?;
    let mut set = initial.clone();
    let mut components = 0;
    while !set.is_empty() {
        let s0 = set.min().unwrap();
        if 2 * s0 > set.order() {
            let step = alpha_reduce(&set)?;
            components += step.removed;
            println!(
                "alpha  n = {:>3}  S = {:?}  -> drop {} isolated vertices",
                set.order(),
                set.as_slice(),
                step.removed
            );
            set = step.reduced;
        } else {
            let d = da(&set)?;
            println!("beta   n = {:>3}  S = {:?}  -> d = {}", set.order(), set.as_slice(), d);
            set = beta_reduce(&set, d)?;
        }
    }
    components += set.order();
    println!("final  n = {:>3}  S = {{}}", set.order());
    println!("components: {components}");

    assert_eq!(reduce(&initial).c_total, components);
    Ok(())
}
