use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(4);
    let sys = modgb::systems::cyclic(n);
    let t = Instant::now();
    let gb = modgb::reference::buchberger_rational(&sys);
    println!("cyclic{n}: {} elements in {:.2?}", gb.len(), t.elapsed());
}
