//! Small named algebras used by tests, the CLI fixtures and the benchmarks.

use crate::algebra::{lattice_tables, Algebra, ElementId, OpTable, Tables};

const A7_NAMES: [&str; 7] = ["0", "a", "b", "c", "d", "e", "1"];

// Hasse diagram covers of the seven-element example lattice.
const A7_COVERS: [(usize, usize); 8] = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6)];

const A7_PROD: [[&str; 7]; 7] = [
    ["0", "0", "0", "0", "0", "0", "0"],
    ["0", "a", "a", "a", "a", "a", "a"],
    ["0", "a", "b", "a", "b", "a", "b"],
    ["0", "a", "a", "a", "a", "c", "c"],
    ["0", "a", "b", "a", "b", "c", "d"],
    ["0", "a", "a", "c", "c", "e", "e"],
    ["0", "a", "b", "c", "d", "e", "1"],
];

const A7_IMP: [[&str; 7]; 7] = [
    ["1", "1", "1", "1", "1", "1", "1"],
    ["0", "1", "1", "1", "1", "1", "1"],
    ["0", "e", "1", "e", "1", "e", "1"],
    ["0", "d", "d", "1", "1", "1", "1"],
    ["0", "c", "d", "e", "1", "e", "1"],
    ["0", "b", "b", "d", "d", "1", "1"],
    ["0", "a", "b", "c", "d", "e", "1"],
];

/// Reflexive-transitive closure of a cover relation, as a dense matrix.
pub fn order_from_covers(n: usize, covers: &[(ElementId, ElementId)]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for (x, row) in leq.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(x, y) in covers {
        leq[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    leq
}

fn table_by_name(names: &[&str], rows: &[[&str; 7]; 7]) -> OpTable {
    let idx = |s: &str| names.iter().position(|n| *n == s).unwrap();
    OpTable::from_fn(names.len(), |x, y| idx(rows[x][y]))
}

/// The seven-element residuated lattice with the published ⊙ and → tables.
/// Join and meet come from its Hasse diagram.
pub fn a7() -> Algebra {
    let n = A7_NAMES.len();
    let leq = order_from_covers(n, &A7_COVERS);
    let (join, meet) = lattice_tables(n, |x, y| leq[x][y], &names(&A7_NAMES)).expect("A7 reduct is a lattice");
    let tables = Tables {
        join,
        meet,
        prod: table_by_name(&A7_NAMES, &A7_PROD),
        imp: table_by_name(&A7_NAMES, &A7_IMP),
    };
    Algebra::new(names(&A7_NAMES), tables, 0, n - 1).expect("A7 is a residuated lattice")
}

/// Chain `0 < a_1 < ... < 1` with `⊙ = ∧` (a Gödel chain).
pub fn goedel_chain(n: usize) -> Algebra {
    Algebra::from_order_and_prod(chain_names(n), |x, y| x <= y, OpTable::from_fn(n, |x, y| x.min(y)))
        .expect("Gödel chains are residuated")
}

/// Chain with Łukasiewicz product `x⊙y = max(0, x+y-(n-1))`.
pub fn lukasiewicz_chain(n: usize) -> Algebra {
    let top = n - 1;
    Algebra::from_order_and_prod(
        chain_names(n),
        |x, y| x <= y,
        OpTable::from_fn(n, |x, y| (x + y).saturating_sub(top)),
    )
    .expect("Łukasiewicz chains are residuated")
}

pub fn chain2() -> Algebra {
    goedel_chain(2)
}

/// Four-element Boolean algebra `{0, a, b, 1}` with `⊙ = ∧`.
pub fn boolean4() -> Algebra {
    // bit encoding: 0 = 00, a = 01, b = 10, 1 = 11
    Algebra::from_order_and_prod(
        names(&["0", "a", "b", "1"]),
        |x, y| x & y == x,
        OpTable::from_fn(4, |x, y| x & y),
    )
    .expect("Boolean algebras are residuated")
}

/// Desk-scale algebras every check is expected to pass on.
pub fn exemplars() -> Vec<Algebra> {
    vec![
        a7(),
        chain2(),
        goedel_chain(3),
        lukasiewicz_chain(3),
        boolean4(),
        lukasiewicz_chain(5),
    ]
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `0, a, b, ..., 1` for a chain of length `n`.
pub fn chain_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ => inner_name(i - 1),
        })
        .collect()
}

/// Name of the `i`-th element strictly between `0` and `1`.
pub fn inner_name(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("x{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a7_implication_is_the_residual_of_its_product() {
        let a7 = a7();
        let leq = order_from_covers(7, &A7_COVERS);
        let derived =
            Algebra::from_order_and_prod(names(&A7_NAMES), |x, y| leq[x][y], a7.tables().prod.clone()).unwrap();
        assert_eq!(derived.tables(), a7.tables());
    }

    #[test]
    fn a7_order_matches_implication_table() {
        let a7 = a7();
        for x in a7.elements() {
            for y in a7.elements() {
                assert_eq!(a7.leq(x, y), a7.imp(x, y) == a7.top());
            }
        }
    }

    #[test]
    fn chains_and_boolean_build() {
        assert_eq!(goedel_chain(3).size(), 3);
        let l3 = lukasiewicz_chain(3);
        assert_eq!(l3.prod(1, 1), 0);
        assert_eq!(boolean4().neg(1), 2);
        assert_eq!(chain_names(4), vec!["0", "a", "b", "1"]);
    }
}
