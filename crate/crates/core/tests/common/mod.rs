//! Worked examples shared by the integration and acceptance tests.
#![allow(dead_code)]

use supermatrix::union::make_union;
use supermatrix::{DenseMatrix, SuperMatrix, SuperNMatrix};

pub fn dense<R: AsRef<[i64]>>(rows: &[R]) -> DenseMatrix {
    DenseMatrix::from_int_rows(rows).unwrap()
}

pub fn sm<R: AsRef<[i64]>>(rows: &[R], row_cuts: &[usize], col_cuts: &[usize]) -> SuperMatrix {
    SuperMatrix::with_cuts(dense(rows), row_cuts.to_vec(), col_cuts.to_vec()).unwrap()
}

pub fn simple<R: AsRef<[i64]>>(rows: &[R]) -> SuperMatrix {
    SuperMatrix::simple(dense(rows))
}

pub fn union(components: Vec<SuperMatrix>) -> SuperNMatrix {
    make_union(components).unwrap()
}

fn column(values: &[i64], row_cuts: &[usize]) -> SuperMatrix {
    let rows: Vec<[i64; 1]> = values.iter().map(|&v| [v]).collect();
    sm(&rows, row_cuts, &[])
}

/// Two 9-entry column supervectors cut after entries 3 and 7; `vaᵀ vb = -14`.
pub fn column_vector_pair() -> (SuperMatrix, SuperMatrix) {
    (
        column(&[0, 1, 2, 4, 0, 1, -1, 1, 2], &[3, 7]),
        column(&[1, -1, 0, -4, 1, 2, 0, -1, 1], &[3, 7]),
    )
}

/// Row-partitioned 3x2 times column-partitioned 2x2.
pub fn small_product_operands() -> (SuperMatrix, SuperMatrix) {
    (
        sm(&[[2, 1], [3, 5], [6, 1]], &[], &[1]),
        sm(&[[1, 2], [3, 1]], &[1], &[]),
    )
}

pub fn small_product() -> DenseMatrix {
    dense(&[[5, 5], [18, 11], [9, 13]])
}

/// 3x6 by 6x2 with inner cuts [2, 3].
pub fn reversal_operands() -> (SuperMatrix, SuperMatrix) {
    (
        sm(
            &[[2, 3, 4, 2, 2, 2], [-1, 1, 1, 1, 0, 1], [0, 0, 2, -4, 0, 0]],
            &[],
            &[2, 3],
        ),
        sm(
            &[[2, 0], [1, 1], [2, 1], [5, 3], [1, -1], [0, 2]],
            &[2, 3],
            &[],
        ),
    )
}

pub fn reversal_product() -> DenseMatrix {
    dense(&[[27, 15], [6, 7], [-16, -10]])
}

/// 3x7 row supervector; its right Gram product is below.
pub fn wide_gram_operand() -> SuperMatrix {
    sm(
        &[
            [2, 3, 4, 3, 4, 5, 0],
            [1, 4, 1, 1, 1, -1, 6],
            [2, 1, 2, 0, 2, 1, 1],
        ],
        &[],
        &[2, 3],
    )
}

pub fn wide_gram() -> DenseMatrix {
    dense(&[[79, 20, 28], [20, 57, 15], [28, 15, 15]])
}

/// 9x2 column supervector; its left Gram product is below.
pub fn tall_gram_operand() -> SuperMatrix {
    let t = dense(&[[2, 3, 1, 0, 1, 2, 1, 5, 1], [0, 1, 5, 2, 0, 3, 0, 1, 0]]).transpose();
    SuperMatrix::with_cuts(t, vec![3, 4], vec![]).unwrap()
}

pub fn tall_gram() -> DenseMatrix {
    dense(&[[46, 19], [19, 40]])
}

/// Same entries, different partitions: addition must fail.
pub fn mismatched_addends() -> (SuperMatrix, SuperMatrix) {
    (
        sm(&[[3, 0, 1], [1, 2, 7], [4, 3, 6]], &[2], &[2]),
        sm(&[[2, 1, 3], [5, 4, 1], [2, 0, 2]], &[1], &[1]),
    )
}

/// A 6x6 matrix partitioned after row 4 and column 2.
pub fn six_by_six() -> SuperMatrix {
    sm(
        &[
            [3, 0, 1, 1, 2, 0],
            [1, 0, 0, 3, 5, 2],
            [5, -1, 6, 7, 8, 4],
            [0, 9, 1, 2, 0, -1],
            [2, 5, 2, 3, 4, 6],
            [1, 6, 1, 2, 3, 9],
        ],
        &[4],
        &[2],
    )
}

/// One 5x5 matrix partitioned two ways.
pub fn two_partitionings() -> (SuperMatrix, SuperMatrix) {
    let rows = [
        [3, 6, 0, 4, 5],
        [2, 1, 6, 3, 0],
        [1, 1, 1, 2, 1],
        [0, 1, 0, 1, 0],
        [2, 0, 1, 2, 1],
    ];
    (sm(&rows, &[3], &[3]), sm(&rows, &[4], &[4]))
}

/// 7x5 with row cuts [3, 5] and column cut [3], plus its transpose.
pub fn transpose_pair() -> (SuperMatrix, SuperMatrix) {
    (
        sm(
            &[
                [2, 1, 3, 5, 6],
                [0, 2, 0, 1, 1],
                [1, 1, 1, 0, 2],
                [2, 2, 0, 1, 1],
                [5, 6, 1, 0, 1],
                [2, 0, 0, 0, 4],
                [1, 0, 1, 1, 5],
            ],
            &[3, 5],
            &[3],
        ),
        sm(
            &[
                [2, 0, 1, 2, 5, 2, 1],
                [1, 2, 1, 2, 6, 0, 0],
                [3, 0, 1, 0, 1, 0, 1],
                [5, 1, 0, 1, 0, 0, 1],
                [6, 1, 2, 1, 1, 4, 5],
            ],
            &[3],
            &[3, 5],
        ),
    )
}

pub fn symmetric_four() -> SuperMatrix {
    sm(
        &[[4, 3, 2, 7], [3, 6, 1, 4], [2, 1, 5, 2], [7, 4, 2, 7]],
        &[2],
        &[2],
    )
}

pub fn scaled_pair() -> (SuperNMatrix, SuperNMatrix) {
    (
        union(vec![
            simple(&[[2, 0, 1], [3, 3, -1]]),
            simple(&[[0, 1, -1], [2, 1, 0]]),
        ]),
        union(vec![
            simple(&[[6, 0, 3], [9, 9, -3]]),
            simple(&[[0, 3, -3], [6, 3, 0]]),
        ]),
    )
}

fn four_by_four() -> [[i64; 4]; 4] {
    [[3, 0, 1, 2], [0, 1, 0, 3], [1, 1, 5, 2], [0, 0, 2, -1]]
}

/// Same entries, different column cuts: a proper union.
pub fn proper_pair() -> SuperNMatrix {
    union(vec![
        sm(&four_by_four(), &[2], &[2]),
        sm(&four_by_four(), &[2], &[3]),
    ])
}

pub fn proper_pair_first_text() -> &'static str {
    "[ 3 0 | 1 2 \n 0 1 | 0 3 \n ----+---- \n 1 1 | 5 2 \n 0 0 | 2 -1 ]"
}

/// Two identical components: not proper.
pub fn improper_pair() -> SuperNMatrix {
    let a = sm(&[[3, 0, 1], [2, 1, 1], [5, 2, 0]], &[2], &[1]);
    union(vec![a.clone(), a])
}

pub fn union_addends() -> (SuperNMatrix, SuperNMatrix, SuperNMatrix) {
    (
        union(vec![
            sm(&[[3, 1, 2, 0, 1, 5, 1]], &[], &[3]),
            sm(&[[3, 0, 1], [2, 1, 1]], &[], &[2]),
        ]),
        union(vec![
            sm(&[[0, -1, 0, 1, 0, -1, 5]], &[], &[3]),
            sm(&[[0, 0, 1], [-2, 0, 5]], &[], &[2]),
        ]),
        union(vec![
            sm(&[[3, 0, 2, 1, 1, 4, 6]], &[], &[3]),
            sm(&[[3, 0, 2], [0, 1, 6]], &[], &[2]),
        ]),
    )
}

/// Second components agree, first components are cut differently.
pub fn union_addends_mismatched() -> (SuperNMatrix, SuperNMatrix) {
    let second = sm(&[[0, 1], [5, 2]], &[], &[1]);
    (
        union(vec![sm(&[[3, 1, 1, 2]], &[], &[3]), second.clone()]),
        union(vec![sm(&[[3, 1, 1, 2]], &[], &[1]), second]),
    )
}

pub fn union_scale_by_eight() -> (SuperNMatrix, SuperNMatrix) {
    (
        union(vec![
            sm(&[[3, 2], [1, 0], [0, 5]], &[], &[1]),
            sm(
                &[[1, 1, 3, 0, 2], [3, 0, 5, 2, -1], [1, 1, 3, 2, -5]],
                &[2],
                &[2],
            ),
        ]),
        union(vec![
            sm(&[[24, 16], [8, 0], [0, 40]], &[], &[1]),
            sm(
                &[[8, 8, 24, 0, 16], [24, 0, 40, 16, -8], [8, 8, 24, 16, -40]],
                &[2],
                &[2],
            ),
        ]),
    )
}

/// Two row supervectors and their transposes.
pub fn row_vector_union() -> (SuperNMatrix, SuperNMatrix) {
    (
        union(vec![
            sm(&[[3, 0, 1, 1, -1, 5, 2, 3, 1]], &[], &[4]),
            sm(&[[1, 0, 1, 5, 2, 0, 1, 1, 1, 0, 2]], &[], &[3, 6]),
        ]),
        union(vec![
            column(&[3, 0, 1, 1, -1, 5, 2, 3, 1], &[4]),
            column(&[1, 0, 1, 5, 2, 0, 1, 1, 1, 0, 2], &[3, 6]),
        ]),
    )
}

pub fn semi_super_pair() -> SuperNMatrix {
    union(vec![
        simple(&[[3, 1, 1, 2], [0, 5, 1, 0]]),
        sm(
            &[[3, 1, 2, 0], [5, 1, 1, 1], [2, 0, 2, 6], [1, 0, 1, 5]],
            &[2],
            &[1],
        ),
    ])
}

pub fn union_product_pair() -> (SuperNMatrix, SuperNMatrix, SuperNMatrix) {
    (
        union(vec![
            sm(
                &[[2, 0, 3, 0, 1, 4], [1, 1, 1, 1, 0, 1], [1, 2, 0, 1, 1, 0]],
                &[],
                &[2, 5],
            ),
            sm(
                &[
                    [3, 1, 0, 3, 3, 0, 1],
                    [4, 5, 1, 1, 0, 1, 1],
                    [3, 4, 1, 0, 1, 0, 1],
                    [1, 2, 2, 4, 2, 5, 6],
                ],
                &[],
                &[3],
            ),
        ]),
        union(vec![
            sm(
                &[[0, 1], [3, 0], [1, 0], [1, 1], [2, 0], [0, 1]],
                &[2, 5],
                &[],
            ),
            sm(
                &[
                    [1, 0, 3],
                    [3, 1, 1],
                    [5, 1, 2],
                    [1, 1, 0],
                    [0, 1, 1],
                    [1, 0, 0],
                    [0, 1, 0],
                ],
                &[3],
                &[],
            ),
        ]),
        union(vec![
            simple(&[[5, 6], [5, 3], [9, 2]]),
            simple(&[[9, 8, 13], [26, 8, 19], [20, 7, 16], [26, 16, 11]]),
        ]),
    )
}

pub fn union_product_triple() -> (SuperNMatrix, SuperNMatrix, SuperNMatrix) {
    (
        union(vec![
            sm(&[[3, 0, 5, 1, 0, 2, 3]], &[], &[2, 6]),
            sm(&[[1, 1, 0, 1, 2, 3], [0, 2, 6, 0, 4, 5]], &[], &[1, 3]),
            sm(
                &[
                    [1, 2, 3, 2, 0, 1, 3, 2, 1],
                    [1, 1, 0, 1, 5, 0, 1, 0, 1],
                    [1, 1, 5, 0, 4, 0, 7, 3, 0],
                ],
                &[],
                &[3, 7],
            ),
        ]),
        union(vec![
            sm(
                &[[2, 1], [1, 0], [1, 2], [2, 1], [3, 4], [4, 3], [1, 0]],
                &[2, 6],
                &[],
            ),
            sm(
                &[
                    [1, 2, 3, 4],
                    [0, 1, 2, 5],
                    [1, 3, 0, 1],
                    [1, 1, 0, 2],
                    [2, 0, 2, 1],
                    [5, 1, 0, 2],
                ],
                &[1, 3],
                &[],
            ),
            sm(
                &[
                    [1, 0, 1, 1, 1],
                    [0, 1, 0, 1, 0],
                    [2, 0, 1, 2, 0],
                    [1, 0, 1, 0, 0],
                    [0, 0, 0, 1, 0],
                    [1, 0, 0, 0, 1],
                    [0, 1, 1, 1, 0],
                    [3, 1, 0, 0, 1],
                    [1, 0, 1, 0, 1],
                ],
                &[3, 7],
                &[],
            ),
        ]),
        union(vec![
            simple(&[[24, 20]]),
            simple(&[[21, 7, 9, 19], [39, 25, 12, 30]]),
            simple(&[[17, 7, 10, 12, 5], [3, 2, 4, 8, 2], [20, 11, 13, 23, 4]]),
        ]),
    )
}

pub fn special_row_pair() -> SuperNMatrix {
    union(vec![
        sm(
            &[
                [3, 0, 1, 2, 1, 3, 3, 2, 1],
                [1, 1, 1, 3, 1, 0, 1, 1, 0],
                [2, 1, 1, 4, 1, 0, 0, 1, 0],
            ],
            &[],
            &[3, 5],
        ),
        sm(
            &[
                [3, 1, 5, 1, 0, 1, 1, 1, 1, 0],
                [1, 1, 7, 2, 1, 2, 0, 0, 1, 1],
                [0, 0, 8, 3, 2, 3, 2, 5, 7, 8],
                [2, 1, 9, 4, 3, 4, 1, 2, 3, 4],
            ],
            &[],
            &[3, 6],
        ),
    ])
}

pub fn special_column_pair() -> SuperNMatrix {
    union(vec![
        sm(
            &[
                [1, 0, 1, 1],
                [2, 1, 2, 0],
                [0, 1, 0, 1],
                [3, 1, 2, 5],
                [1, 2, 3, 4],
                [5, 6, 7, 8],
                [0, 1, 2, 3],
                [1, 1, 0, 5],
                [2, 5, 7, 1],
            ],
            &[3],
            &[],
        ),
        sm(
            &[
                [1, 1, 0],
                [1, 1, 1],
                [0, 1, 2],
                [3, 4, 5],
                [6, 7, 8],
                [9, 0, 1],
                [0, 1, 1],
                [1, 0, 1],
                [1, 1, 0],
                [1, 2, 3],
                [4, 5, 6],
            ],
            &[1, 6, 9],
            &[],
        ),
    ])
}

pub fn column_pair_with_different_cuts() -> SuperNMatrix {
    union(vec![
        sm(
            &[
                [3, 1, 0],
                [-1, 1, 6],
                [0, 1, 1],
                [2, 1, 0],
                [1, 2, 3],
                [1, 0, 1],
                [0, 1, 0],
                [1, 0, 1],
            ],
            &[3, 4],
            &[],
        ),
        sm(
            &[
                [2, 1, 0, 4],
                [1, 1, 6, 0],
                [0, 0, 1, 1],
                [1, 0, 1, 1],
                [0, 5, 2, 3],
                [1, 1, 0, 1],
                [2, 0, 2, 1],
            ],
            &[3, 6],
            &[],
        ),
    ])
}

/// A simple component next to a general one; the two Gram products differ.
pub fn gram_witness() -> SuperNMatrix {
    union(vec![
        simple(&[
            [3, 0, 2, 4],
            [1, 1, 0, 1],
            [2, 2, 1, 0],
            [6, 0, 0, 2],
            [1, 1, 0, 1],
        ]),
        sm(
            &[
                [0, 1, 2, 3, 4, 1],
                [2, 3, 4, 1, 0, 0],
                [3, 4, 1, 0, 1, 0],
                [4, 1, 0, 1, 0, 3],
                [1, 0, 1, 0, 3, 4],
                [0, 1, 0, 1, 0, 1],
                [1, 0, 1, 0, 1, 0],
                [1, 1, 1, 0, 0, 1],
            ],
            &[5],
            &[2, 4],
        ),
    ])
}

/// Symmetric entries, but rows and columns are cut differently.
pub fn symmetric_entries_asymmetric_cuts() -> SuperMatrix {
    sm(
        &[
            [0, 1, 2, 3, 0, 6],
            [1, 2, 1, 0, 1, 2],
            [2, 1, 9, 6, 0, 3],
            [3, 0, 6, 1, 2, 1],
            [0, 1, 0, 2, 5, 8],
            [6, 2, 3, 1, 8, 7],
        ],
        &[4],
        &[2],
    )
}

/// Three square components; only the second is a symmetric supermatrix.
pub fn mixed_square_triple() -> SuperNMatrix {
    union(vec![
        sm(
            &[
                [1, 1, 0, 2, 3],
                [1, 7, 9, 0, 6],
                [0, 9, 1, 2, 1],
                [2, 0, 2, 0, 2],
                [3, 6, 1, 1, 1],
            ],
            &[2],
            &[2],
        ),
        sm(
            &[
                [4, 1, 0, 2, 3, 1],
                [1, 0, 8, 9, 6, 3],
                [0, 8, 7, 1, 2, 3],
                [2, 9, 1, 2, 0, 1],
                [3, 6, 2, 0, 5, 3],
                [1, 3, 3, 1, 3, 0],
            ],
            &[3],
            &[3],
        ),
        sm(
            &[
                [3, 1, 0, 1, 3, 1],
                [1, 2, 1, 2, 3, 4],
                [0, 1, 5, 1, 2, 3],
                [1, 2, 1, 0, 1, 2],
                [3, 3, 2, 1, 7, 5],
                [1, 4, 3, 2, 5, 3],
            ],
            &[3],
            &[3],
        ),
    ])
}

pub fn six_row_vectors() -> SuperNMatrix {
    union(vec![
        sm(&[[0, 1, 0, 1, 2, 3, 4]], &[], &[1, 4]),
        sm(&[[1, 2, 3, 4, 5, 5, 7, 8, 9, 0]], &[], &[1, 5, 8]),
        sm(&[[0, 1, 3, 4, 5, 7, 8, 9, 10]], &[], &[3, 5]),
        sm(&[[6, 1, 2, 3, 0, 1, 4, 6, 1]], &[], &[1, 3]),
        sm(&[[3, 1, 0, 2, 2, 5, 0, 1]], &[], &[3]),
        sm(&[[1, 2, 3, 4, 5, 6, 7, 1, 8, 1]], &[], &[1, 3, 6]),
    ])
}

pub fn five_squares_of_mixed_order() -> SuperNMatrix {
    union(vec![
        sm(&[[2, 1], [0, 1]], &[], &[1]),
        sm(&[[1, 1], [0, 2]], &[], &[1]),
        sm(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]], &[1], &[1]),
        sm(
            &[[1, 2, 3, 4], [0, 1, 2, 5], [7, 8, 1, 0], [9, 6, 4, 2]],
            &[2],
            &[3],
        ),
        sm(
            &[
                [1, 2, 0, 1, 1],
                [0, 1, 2, 0, 1],
                [1, 4, 0, 1, 3],
                [2, 5, 1, 2, 1],
                [3, 6, 1, 0, 0],
            ],
            &[2],
            &[1, 4],
        ),
    ])
}

pub fn four_by_four_squares() -> SuperNMatrix {
    union(vec![
        sm(
            &[[1, 2, 3, 4], [5, 6, 7, 8], [9, 0, 1, 2], [3, 4, 5, 6]],
            &[1],
            &[3],
        ),
        sm(
            &[[0, 1, 2, 3], [1, 0, 1, 1], [0, 1, 0, 1], [1, 0, 0, 1]],
            &[3],
            &[2],
        ),
        sm(
            &[[1, 2, 3, 4], [0, 1, 0, 1], [1, 1, 1, 1], [1, 1, 0, 0]],
            &[1],
            &[1],
        ),
        sm(
            &[[1, 0, 2, 4], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]],
            &[2],
            &[3],
        ),
    ])
}

/// Tall components, two of which also carry column cuts.
pub fn tall_with_vertical_cuts() -> SuperNMatrix {
    union(vec![
        sm(
            &[
                [2, 1, 4, 1],
                [0, 3, 1, 5],
                [1, 2, 3, 4],
                [5, 6, 7, 8],
                [9, 0, 1, 8],
                [1, 1, 1, 4],
                [4, 4, 1, 2],
            ],
            &[1, 3],
            &[2],
        ),
        sm(
            &[
                [3, 1, 1],
                [0, 2, 4],
                [1, 3, 1],
                [1, 4, 6],
                [7, 8, 9],
                [1, 0, 4],
                [4, 1, 2],
                [1, 1, 6],
            ],
            &[1, 3, 7],
            &[],
        ),
        sm(
            &[
                [1, 2, 3, 4, 5],
                [6, 7, 8, 9, 0],
                [3, 2, 1, 4, 8],
                [1, 1, 1, 4, 1],
                [7, 0, 8, 1, 3],
                [3, 1, 2, 5, 6],
                [1, 1, 0, 1, 1],
            ],
            &[1, 4],
            &[3],
        ),
        sm(
            &[
                [1, 2, 3, 1],
                [1, 1, 0, 1],
                [1, 0, 1, 1],
                [2, 1, 1, 1],
                [4, 2, 3, 1],
                [1, 1, 0, 1],
                [1, 5, 0, 3],
                [1, 7, 2, 3],
            ],
            &[1, 4],
            &[],
        ),
    ])
}

pub fn five_symmetric() -> SuperNMatrix {
    union(vec![
        sm(&[[3, 10], [10, 1]], &[1], &[1]),
        sm(&[[3, 1, 1], [1, 0, 1], [1, 1, 8]], &[1], &[1]),
        sm(
            &[[1, 2, 0, 4], [2, 1, 5, 2], [0, 5, 1, 6], [4, 2, 6, 4]],
            &[1],
            &[1],
        ),
        sm(&[[1, 2, 3], [2, 5, 7], [3, 7, 1]], &[2], &[2]),
        sm(
            &[
                [1, 2, 3, 4, 5, 6],
                [2, 0, 1, 1, 0, 1],
                [3, 1, 2, 7, 1, 2],
                [4, 1, 7, 0, 3, 5],
                [5, 0, 1, 3, 1, 2],
                [6, 1, 2, 5, 2, 0],
            ],
            &[2, 5],
            &[2, 5],
        ),
    ])
}

pub fn six_quasi_symmetric() -> SuperNMatrix {
    union(vec![
        sm(
            &[[3, 1, 2, 0], [1, 1, 0, 1], [2, 0, 5, 7], [0, 1, 7, 0]],
            &[2],
            &[2],
        ),
        sm(
            &[
                [7, 8, 1, 0, 1],
                [8, 1, 5, 1, 3],
                [1, 5, 1, 0, 1],
                [0, 1, 0, 2, 5],
                [1, 3, 1, 5, 0],
            ],
            &[4],
            &[4],
        ),
        sm(&[[3, 4], [5, 7]], &[1], &[1]),
        sm(
            &[[1, 2, 1, 0], [2, 1, 1, 2], [1, 1, 3, 0], [0, 2, 0, 3]],
            &[1],
            &[3],
        ),
        sm(
            &[
                [1, 1, 1, 0, 1, 0],
                [1, 2, 0, 1, 0, 0],
                [1, 0, 5, 3, 1, 2],
                [0, 1, 3, 0, 1, 7],
                [1, 0, 1, 1, 0, 1],
                [0, 0, 2, 7, 1, 0],
            ],
            &[2],
            &[2],
        ),
        sm(
            &[
                [1, 0, 1, 3, 5],
                [0, 1, 2, 0, 1],
                [1, 2, 7, 2, 5],
                [3, 0, 2, 1, 3],
                [5, 1, 5, 3, 0],
            ],
            &[3],
            &[2],
        ),
    ])
}

/// Three partitioned components and one simple one.
pub fn four_semi_super() -> SuperNMatrix {
    union(vec![
        sm(
            &[
                [3, 1, 2, 5, 6],
                [1, 3, 0, 1, 1],
                [2, 0, 2, 1, 0],
                [5, 1, 3, 2, 1],
                [6, 1, 4, 5, 6],
            ],
            &[4],
            &[2],
        ),
        sm(
            &[[0, 1, 2, 3, 4, 5], [6, 7, 8, 9, 0, 1], [3, 0, 1, 0, 5, 7]],
            &[2],
            &[4],
        ),
        simple(&[[2, 1], [0, 3], [1, 2]]),
        sm(
            &[
                [3, 1, 2, 1, 5],
                [1, 0, 1, 3, 2],
                [3, 1, 3, 5, 7],
                [0, 2, 4, 0, 6],
            ],
            &[3],
            &[4],
        ),
    ])
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

/// Each case compares against `tests/golden/<name>.stdout` and `<name>.stderr`.
pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "product",
        args: &["mul", "product_a.smx", "product_b.smx"],
        exit: 0,
    },
    GoldenCase {
        name: "mismatch",
        args: &["add", "mismatch_a.smx", "mismatch_b.smx"],
        exit: 2,
    },
    GoldenCase {
        name: "improper",
        args: &["check", "improper.smx"],
        exit: 3,
    },
];

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the `smx` binary on a golden case; `Err` describes the first difference.
pub fn run_golden(case: &GoldenCase) -> Result<(), String> {
    let dir = golden_dir();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_smx"))
        .args(case.args)
        .current_dir(&dir)
        .output()
        .map_err(|e| format!("cannot run smx: {e}"))?;
    let expected = |ext: &str| {
        std::fs::read(dir.join(format!("{}.{ext}", case.name)))
            .map_err(|e| format!("{}.{ext}: {e}", case.name))
    };
    if out.status.code() != Some(case.exit) {
        return Err(format!(
            "{}: exit {:?}, expected {}",
            case.name,
            out.status.code(),
            case.exit
        ));
    }
    if out.stdout != expected("stdout")? {
        return Err(format!(
            "{}: stdout differs:\n{}",
            case.name,
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    if out.stderr != expected("stderr")? {
        return Err(format!(
            "{}: stderr differs:\n{}",
            case.name,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(())
}
