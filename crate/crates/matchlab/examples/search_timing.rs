use matchlab::search::{max_stable, SearchOptions};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: u32 = args.get(1).map(|a| a.parse().unwrap()).unwrap_or(10);
    let s: u32 = args.get(2).map(|a| a.parse().unwrap()).unwrap_or(2);
    let threads: usize = args.get(3).map(|a| a.parse().unwrap()).unwrap_or(1);
    let t0 = Instant::now();
    let opts = SearchOptions { threads, allow_deep: true, ..Default::default() };
    let res = max_stable(n, 3, s, &opts).unwrap();
    println!(
        "({n},3,{s}): max={} matched={} nodes={} in {:?}",
        res.max_size,
        res.matched.label(),
        res.nodes_explored,
        t0.elapsed()
    );
}
