#![allow(dead_code)]

use lunar_core::{Grid3, LunarNat};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn nat(base: u32, s: &str) -> LunarNat {
    LunarNat::parse(s, base).unwrap()
}

pub fn grid(base: u32, rows: [[&str; 3]; 3]) -> Grid3 {
    Grid3::parse(base, rows).unwrap()
}

/// Grid of `k`-th powers of the given roots.
pub fn powers(base: u32, roots: [[&str; 3]; 3], k: u32) -> Grid3 {
    Grid3::new(base, roots.map(|r| r.map(|s| nat(base, s).pow(k)))).unwrap()
}

pub struct Named {
    pub name: String,
    pub grid: Grid3,
}

pub const ROOTS_448: [[&str; 3]; 3] = [["44", "38", "45"], ["46", "0", "28"], ["18", "47", "8"]];
pub const ROOTS_1447: [[&str; 3]; 3] = [
    ["1447", "1347", "1444"],
    ["1446", "0", "1247"],
    ["1147", "1445", "1"],
];
pub const ROOTS_224: [[&str; 3]; 3] = [["22", "0", "14"], ["1", "24", "2"], ["4", "3", "23"]];
pub const ROOTS_439: [[&str; 3]; 3] = [["39", "40", "29"], ["19", "33", "41"], ["42", "9", "43"]];
pub const ROOTS_BINARY: [[&str; 3]; 3] = [
    ["11", "101", "1001"],
    ["110", "1011", "1"],
    ["1010", "0", "111"],
];
pub const ROOTS_SUM_FIRST: [[&str; 3]; 3] = [
    ["5789", "5778", "6778"],
    ["6678", "6789", "5689"],
    ["6788", "5678", "6689"],
];
pub const ROOTS_SUM_SECOND: [[&str; 3]; 3] = [
    ["13458", "13348", "23348"],
    ["22348", "23458", "12458"],
    ["23448", "12348", "22458"],
];
pub const ROOTS_SUM_RESULT: [[&str; 3]; 3] = [
    ["15789", "15778", "26778"],
    ["26678", "26789", "15689"],
    ["26788", "15678", "26689"],
];

pub fn square_22() -> Grid3 {
    grid(
        10,
        [["12", "0", "20"], ["1", "22", "10"], ["21", "20", "2"]],
    )
}

pub fn square_binary_1111() -> Grid3 {
    grid(
        2,
        [
            ["1111", "1110", "1011"],
            ["1010", "0", "111"],
            ["110", "1001", "1"],
        ],
    )
}

pub fn square_44() -> Grid3 {
    grid(
        10,
        [["40", "34", "41"], ["42", "0", "24"], ["14", "43", "4"]],
    )
}

pub fn square_448() -> Grid3 {
    grid(
        10,
        [
            ["444", "338", "445"],
            ["446", "0", "228"],
            ["118", "447", "8"],
        ],
    )
}

pub fn square_binary_squares() -> Grid3 {
    grid(
        2,
        [
            ["111", "10101", "1001001"],
            ["11100", "1011111", "1"],
            ["1010100", "0", "11111"],
        ],
    )
}

/// Every explicitly displayed grid, plus the two power families for
/// exponents 2..=5.
pub fn displayed_grids() -> Vec<Named> {
    let mut out = vec![
        Named {
            name: "total 22".into(),
            grid: square_22(),
        },
        Named {
            name: "binary total 1111".into(),
            grid: square_binary_1111(),
        },
        Named {
            name: "total 44".into(),
            grid: square_44(),
        },
        Named {
            name: "total 448".into(),
            grid: square_448(),
        },
        Named {
            name: "squares total 224".into(),
            grid: powers(10, ROOTS_224, 2),
        },
        Named {
            name: "binary squares".into(),
            grid: square_binary_squares(),
        },
        Named {
            name: "squares total 439".into(),
            grid: powers(10, ROOTS_439, 2),
        },
        Named {
            name: "sum first".into(),
            grid: powers(10, ROOTS_SUM_FIRST, 2),
        },
        Named {
            name: "sum second".into(),
            grid: powers(10, ROOTS_SUM_SECOND, 2),
        },
        Named {
            name: "sum result".into(),
            grid: powers(10, ROOTS_SUM_RESULT, 2),
        },
    ];
    for k in 2..=5 {
        out.push(Named {
            name: format!("48-family n={k}"),
            grid: powers(10, ROOTS_448, k),
        });
        out.push(Named {
            name: format!("1447-family n={k}"),
            grid: powers(10, ROOTS_1447, k),
        });
    }
    out
}

// Independent digit-level models of the operations.

pub fn model_add(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let get = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    let mut out: Vec<u32> = (0..n).map(|i| get(a, i).max(get(b, i))).collect();
    trim(&mut out);
    out
}

pub fn model_mul(a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].max(x.min(y));
        }
    }
    trim(&mut out);
    out
}

pub fn model_dominates(a: &[u32], b: &[u32]) -> bool {
    (0..a.len().max(b.len()))
        .all(|i| a.get(i).copied().unwrap_or(0) >= b.get(i).copied().unwrap_or(0))
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

// Strategies.

pub fn digits_in(base: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..base, 0..=max_len)
}

pub fn nat_in(base: u32, max_len: usize) -> impl Strategy<Value = LunarNat> {
    digits_in(base, max_len).prop_map(move |d| LunarNat::from_digits(base, d).unwrap())
}

/// A base in 2..=10 with three numbers in it.
pub fn triple_any_base(max_len: usize) -> impl Strategy<Value = (LunarNat, LunarNat, LunarNat)> {
    (2u32..=10).prop_flat_map(move |b| (nat_in(b, max_len), nat_in(b, max_len), nat_in(b, max_len)))
}

/// A non-decreasing number (digits never fall, read most significant first).
pub fn nondecreasing_any_base(max_len: usize) -> impl Strategy<Value = LunarNat> {
    (2u32..=10).prop_flat_map(move |b| {
        digits_in(b, max_len).prop_map(move |mut d| {
            // Little-endian: non-increasing from index 0 upward.
            d.sort_unstable_by(|x, y| y.cmp(x));
            LunarNat::from_digits(b, d).unwrap()
        })
    })
}

// Law checks shared by the proptest suites and the acceptance runner.

pub fn check_semiring(a: &LunarNat, b: &LunarNat, c: &LunarNat) -> Result<(), TestCaseError> {
    let base = a.base();
    let zero = LunarNat::zero(base).unwrap();
    let one = LunarNat::identity(base).unwrap();
    let (sum, product) = (a + b, a * b);
    prop_assert_eq!(sum.digits().to_vec(), model_add(a.digits(), b.digits()));
    prop_assert_eq!(product.digits().to_vec(), model_mul(a.digits(), b.digits()));
    prop_assert_eq!(a + a, a.clone());
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &zero, a.clone());
    prop_assert_eq!(a * &one, a.clone());
    prop_assert_eq!(a * &zero, zero);
    Ok(())
}

pub fn check_domination(a: &LunarNat, b: &LunarNat, c: &LunarNat) -> Result<(), TestCaseError> {
    let dom = a.dominates(b).unwrap();
    prop_assert_eq!(dom, &(a + b) == a);
    prop_assert_eq!(dom, model_dominates(a.digits(), b.digits()));
    if dom {
        let (ac, bc) = (a + c, b + c);
        prop_assert!(ac.dominates(&bc).unwrap());
        let (ac, bc) = (a * c, b * c);
        prop_assert!(ac.dominates(&bc).unwrap());
    }
    // The sum dominates both parts.
    let s = a + b;
    prop_assert!(s.dominates(a).unwrap() && s.dominates(b).unwrap());
    Ok(())
}

pub fn check_powers(a: &LunarNat, n: u32) -> Result<(), TestCaseError> {
    prop_assert!(a.is_nondecreasing());
    prop_assert_eq!(a.pow_nondecreasing(n).unwrap(), a.pow(n));
    if !a.is_zero() {
        prop_assert_eq!(a.pow(2).len(), 2 * a.len() - 1);
    }
    Ok(())
}

// Naive search oracle: plain cell-by-cell backtracking using only the
// public arithmetic, testing a line only once all its cells are set.

const LINES: [[usize; 3]; 8] = [
    [0, 1, 2],
    [3, 4, 5],
    [6, 7, 8],
    [0, 3, 6],
    [1, 4, 7],
    [2, 5, 8],
    [0, 4, 8],
    [2, 4, 6],
];

pub fn naive_search(total: &LunarNat, distinct: bool, limit: usize) -> Vec<Grid3> {
    let base = total.base();
    let width = total.len();
    // Every digit vector of the total's width that it dominates, padded.
    let mut values: Vec<Vec<u32>> = Vec::new();
    let mut digits = vec![0u32; width];
    loop {
        if model_dominates(total.digits(), &digits) {
            values.push(digits.clone());
        }
        let mut i = 0;
        while i < width && digits[i] == base - 1 {
            digits[i] = 0;
            i += 1;
        }
        if i == width {
            break;
        }
        digits[i] += 1;
    }
    let nats: Vec<LunarNat> = values
        .iter()
        .map(|d| LunarNat::from_digits(base, d.clone()).unwrap())
        .collect();
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&x, &y| nats[x].cmp(&nats[y]));

    let mut search = Naive {
        total: total.digits().to_vec(),
        values: order.iter().map(|&i| values[i].clone()).collect(),
        distinct,
        limit,
        cells: Vec::with_capacity(9),
        found: Vec::new(),
    };
    search.fill();
    search
        .found
        .iter()
        .map(|cells| {
            let arr: [LunarNat; 9] = std::array::from_fn(|k| nats[order[cells[k]]].clone());
            Grid3::from_flat(base, arr).unwrap()
        })
        .collect()
}

struct Naive {
    total: Vec<u32>,
    values: Vec<Vec<u32>>,
    distinct: bool,
    limit: usize,
    cells: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Naive {
    fn line_ok(&self, line: &[usize; 3]) -> bool {
        let [x, y, z] = line.map(|k| &self.values[self.cells[k]]);
        (0..self.total.len()).all(|i| x[i].max(y[i]).max(z[i]) == self.total[i])
    }

    fn fill(&mut self) {
        if self.cells.len() == 9 {
            self.found.push(self.cells.clone());
            return;
        }
        for v in 0..self.values.len() {
            if self.distinct && self.cells.contains(&v) {
                continue;
            }
            self.cells.push(v);
            let k = self.cells.len() - 1;
            if LINES.iter().filter(|l| l[2] == k).all(|l| self.line_ok(l)) {
                self.fill();
            }
            self.cells.pop();
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}
