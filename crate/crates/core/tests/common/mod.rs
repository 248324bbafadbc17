#![allow(dead_code)]

use codefglm::{BinaryCode, BitMatrix, BitVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EXAMPLE: &str = "6 3\n1 1 1\n1 0 1\n0 1 1\n1 0 0\n0 1 0\n0 0 1\n";

/// The reduced basis of the worked [6,3] example, as printed there.
pub const EXAMPLE_GB: [&str; 20] = [
    "x1^2 - 1",
    "x1*x2 - x5",
    "x1*x3 - x4",
    "x1*x4 - x3",
    "x1*x5 - x2",
    "x2^2 - 1",
    "x2*x3 - x1*x6",
    "x2*x4 - x6",
    "x2*x5 - x1",
    "x2*x6 - x4",
    "x3^2 - 1",
    "x3*x4 - x1",
    "x3*x5 - x6",
    "x3*x6 - x5",
    "x4^2 - 1",
    "x4*x5 - x1*x6",
    "x6*x4 - x2",
    "x5^2 - 1",
    "x5*x6 - x3",
    "x6^2 - 1",
];

pub fn example() -> BinaryCode {
    BinaryCode::parse(EXAMPLE, false).unwrap()
}

pub fn random_code(rng: &mut impl Rng, n: usize, r: usize) -> BinaryCode {
    loop {
        let rows = (0..n)
            .map(|_| BitVector::from_bools(&(0..r).map(|_| rng.gen()).collect::<Vec<bool>>()))
            .collect();
        if let Ok(code) = BinaryCode::new(BitMatrix::from_rows(r, rows).unwrap()) {
            return code;
        }
    }
}

/// Full-rank codes with `2 <= n <= 12` and `1 <= r <= min(8, n - 1)`.
pub fn random_codes(seed: u64, count: usize) -> Vec<BinaryCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=12);
            let r = rng.gen_range(1..=8.min(n - 1));
            random_code(&mut rng, n, r)
        })
        .collect()
}

/// The suite of codes used by the exhaustive checks: the worked example,
/// a few hand-picked degenerate shapes and a batch of random codes.
pub fn test_codes() -> Vec<BinaryCode> {
    let mut codes = vec![
        example(),
        BinaryCode::parse("2 1\n1\n1\n", false).unwrap(),
        BinaryCode::parse("3 2\n1 0\n0 0\n0 1\n", false).unwrap(),
        BinaryCode::parse("3 2\n1 1\n1 0\n1 0\n", false).unwrap(),
        // [7,4] Hamming
        BinaryCode::parse(
            "7 3\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n",
            false,
        )
        .unwrap(),
        // [5,1] repetition, d = 5
        BinaryCode::parse("5 4\n1 1 1 1\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n", false).unwrap(),
    ];
    codes.extend(random_codes(0x5eed, 60));
    codes
}

pub fn all_vectors(n: usize) -> impl Iterator<Item = BitVector> {
    (0u64..(1u64 << n)).map(move |raw| BitVector::from_u64(n, raw))
}
