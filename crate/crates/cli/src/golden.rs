//! Reference matrices and sequences from the literature, transcribed as printed.

/// An integer matrix given by its leading rows; entries above the diagonal
/// (zero in a triangle) are omitted.
pub struct IntMatrix {
    pub name: &'static str,
    pub rows: &'static [&'static [i64]],
}

/// A matrix over `Q[y]`, entries in the expression grammar.
pub struct PolyMatrix {
    pub name: &'static str,
    pub rows: &'static [&'static [&'static str]],
}

pub const THRON_ARRAY: IntMatrix = IntMatrix {
    name: "thron_array",
    rows: &[&[1], &[1, 1], &[1, 4, 1], &[1, 13, 7, 1], &[1, 44, 34, 10, 1]],
};

pub const SCHROEDER_PEAKS: IntMatrix = IntMatrix {
    name: "schroeder_peaks",
    rows: &[
        &[1],
        &[1, 1],
        &[3, 2, 1],
        &[11, 7, 3, 1],
        &[45, 28, 12, 4, 1],
        &[197, 121, 52, 18, 5, 1],
    ],
};

/// Square production matrices list full rows.
pub const SCHROEDER_PEAKS_PRODUCTION: IntMatrix = IntMatrix {
    name: "schroeder_peaks_production",
    rows: &[
        &[1, 1, 0, 0, 0, 0],
        &[2, 1, 1, 0, 0, 0],
        &[4, 2, 1, 1, 0, 0],
        &[8, 4, 2, 1, 1, 0],
        &[16, 8, 4, 2, 1, 1],
        &[32, 16, 8, 4, 2, 1],
    ],
};

pub const MOTZKIN_EXAMPLE: IntMatrix = IntMatrix {
    name: "motzkin_example",
    rows: &[&[1], &[2, 1], &[7, 5, 1], &[23, 23, 8, 1], &[88, 101, 48, 11, 1]],
};

pub const SCHROEDER_SHIFT: IntMatrix = IntMatrix {
    name: "schroeder_shift",
    rows: &[
        &[1],
        &[0, 1],
        &[0, 2, 1],
        &[0, 6, 4, 1],
        &[0, 22, 16, 6, 1],
        &[0, 90, 68, 30, 8, 1],
    ],
};

pub const SCHROEDER_SHIFT_PRODUCTION: IntMatrix = IntMatrix {
    name: "schroeder_shift_production",
    rows: &[
        &[0, 1, 0, 0, 0, 0],
        &[0, 2, 1, 0, 0, 0],
        &[0, 2, 2, 1, 0, 0],
        &[0, 2, 2, 2, 1, 0],
        &[0, 2, 2, 2, 2, 1],
        &[0, 2, 2, 2, 2, 2],
    ],
};

pub const SCHROEDER_PLUS_ONE_PRODUCTION: IntMatrix = IntMatrix {
    name: "schroeder_plus_one_production",
    rows: &[
        &[1, 1, 0, 0, 0, 0],
        &[1, 2, 1, 0, 0, 0],
        &[1, 2, 2, 1, 0, 0],
        &[1, 2, 2, 2, 1, 0],
        &[1, 2, 2, 2, 2, 1],
        &[1, 2, 2, 2, 2, 2],
    ],
};

pub const SCHROEDER_PLUS_ONE: IntMatrix = IntMatrix {
    name: "schroeder_plus_one",
    rows: &[
        &[1],
        &[1, 1],
        &[2, 3, 1],
        &[6, 10, 5, 1],
        &[22, 38, 22, 7, 1],
        &[90, 158, 98, 38, 9, 1],
    ],
};

pub const DELANNOY_SIGNED: IntMatrix = IntMatrix {
    name: "delannoy_signed",
    rows: &[
        &[1],
        &[-1, 1],
        &[1, -3, 1],
        &[-1, 5, -5, 1],
        &[1, -7, 13, -7, 1],
        &[-1, 9, -25, 25, -9, 1],
    ],
};

pub const SCHROEDER_BELL_PRODUCTION: IntMatrix = IntMatrix {
    name: "schroeder_bell_production",
    rows: &[
        &[2, 1, 0, 0, 0, 0],
        &[2, 2, 1, 0, 0, 0],
        &[2, 2, 2, 1, 0, 0],
        &[2, 2, 2, 2, 1, 0],
        &[2, 2, 2, 2, 2, 1],
        &[2, 2, 2, 2, 2, 2],
    ],
};

pub const NO_LEVEL_ONE_HORIZONTALS: IntMatrix = IntMatrix {
    name: "no_level_one_horizontals",
    rows: &[
        &[1],
        &[1, 1],
        &[2, 2, 1],
        &[6, 5, 3, 1],
        &[22, 16, 9, 4, 1],
        &[90, 60, 31, 14, 5, 1],
    ],
};

pub const INVOLUTION_1: IntMatrix = IntMatrix {
    name: "involution_1_1",
    rows: &[
        &[1],
        &[0, -1],
        &[0, -1, 1],
        &[0, -1, 2, -1],
        &[0, -2, 3, -3, 1],
        &[0, -4, 6, -6, 4, -1],
    ],
};

pub const INVOLUTION_PRODUCTION: PolyMatrix = PolyMatrix {
    name: "involution_moment_production",
    rows: &[
        &["-y", "1", "0", "0", "0"],
        &["-y", "1", "1", "0", "0"],
        &["0", "1", "1", "1", "0"],
        &["0", "0", "1", "1", "1"],
        &["0", "0", "0", "1", "1"],
    ],
};

pub const INVOLUTION_2: IntMatrix = IntMatrix {
    name: "involution_2_2",
    rows: &[
        &[1],
        &[2, -1],
        &[5, -5, 1],
        &[14, -20, 8, -1],
        &[43, -76, 44, -11, 1],
        &[142, -287, 210, -77, 14, -1],
    ],
};

pub const LBP_ARRAY: IntMatrix = IntMatrix {
    name: "laurent_biorthogonal_array",
    rows: &[
        &[1],
        &[-1, 1],
        &[-1, -3, 1],
        &[-1, -1, -5, 1],
        &[-1, 1, 3, -7, 1],
        &[-1, 3, 7, 11, -9, 1],
    ],
};

pub const LBP_MOMENTS: IntMatrix = IntMatrix {
    name: "laurent_biorthogonal_moments",
    rows: &[
        &[1],
        &[1, 1],
        &[4, 3, 1],
        &[22, 16, 5, 1],
        &[142, 102, 32, 7, 1],
        &[1006, 718, 226, 52, 9, 1],
    ],
};

pub const SQUARES_ARRAY: IntMatrix = IntMatrix {
    name: "square_multipliers",
    rows: &[
        &[1],
        &[2, 1],
        &[6, 4, 1],
        &[26, 18, 6, 1],
        &[150, 104, 36, 8, 1],
        &[1082, 750, 260, 60, 10, 1],
        &[9366, 6492, 2250, 520, 90, 12, 1],
    ],
};

pub const TRIANGULARS_ARRAY: IntMatrix = IntMatrix {
    name: "triangular_multipliers",
    rows: &[
        &[1],
        &[2, 1],
        &[6, 4, 1],
        &[26, 18, 6, 1],
        &[146, 104, 36, 8, 1],
        &[994, 730, 260, 60, 10, 1],
    ],
};

pub const NATURALS_ARRAY: IntMatrix = IntMatrix {
    name: "natural_multipliers",
    rows: &[
        &[1],
        &[2, 1],
        &[6, 4, 1],
        &[26, 18, 6, 1],
        &[142, 104, 36, 8, 1],
        &[906, 710, 260, 60, 10, 1],
    ],
};

pub const EXP_MOMENT_PRODUCTION: PolyMatrix = PolyMatrix {
    name: "exponential_moment_production",
    rows: &[
        &["y+2", "1", "0", "0", "0", "0"],
        &["2", "y+5", "1", "0", "0", "0"],
        &["0", "4", "y+8", "1", "0", "0"],
        &["0", "0", "6", "y+11", "1", "0"],
        &["0", "0", "0", "8", "y+14", "1"],
        &["0", "0", "0", "0", "10", "y+17"],
    ],
};

pub const NARAYANA: IntMatrix = IntMatrix {
    name: "narayana",
    rows: &[
        &[1],
        &[1, 1],
        &[1, 3, 1],
        &[1, 6, 6, 1],
        &[1, 10, 20, 10, 1],
        &[1, 15, 50, 50, 15, 1],
    ],
};

pub const NARAYANA_SHIFTED: IntMatrix = IntMatrix {
    name: "narayana_shifted",
    rows: &[
        &[1],
        &[0, 1],
        &[0, 1, 1],
        &[0, 1, 3, 1],
        &[0, 1, 6, 6, 1],
        &[0, 1, 10, 20, 10, 1],
    ],
};

pub const NB_PRODUCT: IntMatrix = IntMatrix {
    name: "nb_product",
    rows: &[
        &[1],
        &[2, 1],
        &[5, 5, 1],
        &[14, 21, 9, 1],
        &[42, 84, 56, 14, 1],
        &[132, 330, 300, 120, 20, 1],
    ],
};

pub const LITTLE_Q_SCHROEDER: IntMatrix = IntMatrix {
    name: "little_q_schroeder",
    rows: &[
        &[1],
        &[1, 0],
        &[2, 1, 0],
        &[5, 5, 1, 0],
        &[14, 21, 9, 1, 0],
        &[42, 84, 56, 14, 1, 0],
    ],
};

pub const NB_CONJUGATE: IntMatrix = IntMatrix {
    name: "nb_conjugate",
    rows: &[
        &[1],
        &[1, 1],
        &[2, 3, 1],
        &[4, 9, 6, 1],
        &[9, 26, 26, 10, 1],
        &[21, 75, 100, 60, 15, 1],
    ],
};

pub const FTRA_POWERS_OF_THREE: [i64; 5] = [1, 4, 22, 130, 790];
pub const MOTZKIN_EXAMPLE_POWERS_OF_TWO: [i64; 5] = [1, 4, 21, 109, 586];
pub const INVOLUTION_ALTERNATING: [i64; 6] = [1, 3, 11, 43, 175, 731];
pub const INVOLUTION_Y_MINUS_TWO: [i64; 7] = [1, 2, 6, 18, 56, 176, 558];
pub const LBP_MOMENT_SEQUENCE: [i64; 9] = [1, 1, 4, 22, 142, 1006, 7570, 59410, 480910];
pub const TRIANGULAR_ROW_SUMS: [i64; 6] = [1, 3, 11, 51, 295, 2055];
pub const CONJUGATE_DIAGONAL_SUMS: [i64; 11] = [1, 1, 3, 7, 19, 53, 153, 453, 1367, 4191, 13015];
pub const CONJUGATE_ROW_SUMS: [i64; 10] = [1, 2, 6, 20, 72, 272, 1064, 4272, 17504, 72896];

pub const INT_MATRICES: [&IntMatrix; 23] = [
    &THRON_ARRAY,
    &SCHROEDER_PEAKS,
    &SCHROEDER_PEAKS_PRODUCTION,
    &MOTZKIN_EXAMPLE,
    &SCHROEDER_SHIFT,
    &SCHROEDER_SHIFT_PRODUCTION,
    &SCHROEDER_PLUS_ONE_PRODUCTION,
    &SCHROEDER_PLUS_ONE,
    &DELANNOY_SIGNED,
    &SCHROEDER_BELL_PRODUCTION,
    &NO_LEVEL_ONE_HORIZONTALS,
    &INVOLUTION_1,
    &INVOLUTION_2,
    &LBP_ARRAY,
    &LBP_MOMENTS,
    &SQUARES_ARRAY,
    &TRIANGULARS_ARRAY,
    &NATURALS_ARRAY,
    &NARAYANA,
    &NARAYANA_SHIFTED,
    &NB_PRODUCT,
    &LITTLE_Q_SCHROEDER,
    &NB_CONJUGATE,
];
