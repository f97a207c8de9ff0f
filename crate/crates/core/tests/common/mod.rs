#![allow(dead_code)]

use k3auto::classifier::ClassificationRow;

// r, l, m, k_sigma2, #C, rkPic, k_sigma4, N, (n2, n3, n4), k, labels
pub type Fixture<'a> = (u32, u32, u32, u32, u32, u32, u32, u32, (u32, u32, u32), u32, &'a str, &'a str);

pub const TABLE: [Fixture<'static>; 16] = [
    (3, 3, 2, 0, 2, 10, 0, 2, (2, 0, 0), 0, "identity", "order four"),
    (3, 3, 2, 0, 2, 10, 0, 2, (2, 0, 0), 0, "translation of order two", "order four"),
    (3, 3, 2, 0, 2, 10, 0, 2, (2, 0, 0), 0, "translation of order four", "order four"),
    (5, 1, 2, 0, 2, 10, 0, 6, (0, 2, 4), 0, "involution", "order four"),
    (6, 4, 2, 1, 1, 14, 4, 4, (1, 1, 2), 0, "identity", "reflection of IV*"),
    (6, 4, 2, 1, 1, 14, 4, 4, (1, 1, 2), 0, "translation of order two", "reflection of IV*"),
    (6, 4, 2, 1, 1, 14, 4, 4, (1, 1, 2), 0, "translation of order four", "reflection of IV*"),
    (6, 6, 1, 2, 1, 14, 4, 2, (2, 0, 0), 0, "order four", "rotation of order 2 on I_8"),
    (4, 4, 3, 0, 1, 14, 4, 2, (2, 0, 0), 0, "order four", "rotation of order 4 on I_8"),
    (8, 4, 1, 2, 1, 14, 4, 6, (0, 2, 4), 0, "order four", "reflection on I_8"),
    (10, 0, 2, 1, 1, 14, 4, 10, (3, 3, 4), 1, "involution", "preserves each curve of IV*"),
    (10, 2, 1, 2, 1, 14, 4, 8, (4, 2, 2), 1, "order four", "preserves each curve of I_8"),
    (9, 9, 0, 4, 1, 18, 8, 2, (2, 0, 0), 0, "order four", "rotation of order 2 on I_16"),
    (5, 5, 4, 0, 1, 18, 8, 2, (2, 0, 0), 0, "order four", "rotation of order 4 on I_16"),
    (11, 7, 0, 4, 1, 18, 8, 6, (0, 2, 4), 0, "order four", "reflection on I_16"),
    (17, 1, 0, 4, 1, 18, 8, 14, (6, 4, 4), 2, "order four", "preserves each curve of I_16"),
];

pub fn row_tuple(row: &ClassificationRow) -> Fixture<'_> {
    (
        row.r,
        row.l,
        row.m,
        row.k_sigma2,
        row.num_c,
        row.rk_pic,
        row.k_sigma4,
        row.n,
        (row.n2, row.n3, row.n4),
        row.k,
        row.action.0.as_str(),
        row.action.1.as_str(),
    )
}
