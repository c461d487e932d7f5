//! Shared fixtures for the benchmark targets.

use freeprod_core::{GroupSpec, Letter, Word};

pub fn z3z2() -> GroupSpec {
    GroupSpec::from_json_str(
        r#"{"factors":[{"kind":"cyclic","order":3},{"kind":"cyclic","order":2}],
            "generators":{"x":[0,1],"y":[1,1]}}"#,
    )
    .unwrap()
}

pub fn z7z2() -> GroupSpec {
    GroupSpec::from_json_str(
        r#"{"factors":[{"kind":"cyclic","order":7},{"kind":"cyclic","order":2}],
            "generators":{"x":[0,1],"y":[1,1]}}"#,
    )
    .unwrap()
}

/// Deterministic pseudo-random letter stream; enough churn for reduction
/// benchmarks without pulling in an RNG.
pub fn churn_letters(spec: &GroupSpec, count: usize) -> Vec<Letter> {
    let alphabet = spec.alphabet(3);
    let mut state = 0x243f_6a88_85a3_08d3u64;
    (0..count)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            alphabet[(state >> 33) as usize % alphabet.len()]
        })
        .collect()
}

pub fn parse(spec: &GroupSpec, text: &str) -> Word {
    freeprod_core::parse_word(spec, text).unwrap()
}
