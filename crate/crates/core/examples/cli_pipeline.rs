//! Parses an input file, runs `rank` and `gens`, and checks the generators
//! with the brute-force oracle, all in process.

use semigroup_rank::cli::{oracle_check, parse_input, run};

const INPUT: &str = "\
# two blocks over C_4
rms
group cyc 4
matrix 2 3
g1 0 0
0 e g2
";

fn main() -> semigroup_rank::Result<()> {
    let job = parse_input(INPUT)?;
    print!("{}", job.to_text());
    print!("{}", run(&job, "rank")?.text);
    let gens = run(&job, "gens")?.text;
    print!("{}", oracle_check(&job, &gens)?.text);
    Ok(())
}
