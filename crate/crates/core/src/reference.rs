//! Published data for q = 5 that the computations are compared against.
//! Equations use `w` for the generator α with α² = 2.

/// The 21 conics of the decomposition containing x² + y² + z² = 0, each with
/// its T(7) label {i, j} ⊂ {1, …, 7}.
pub const BASE_DECOMPOSITION: [(u8, u8, &str); 21] = [
    (1, 2, "x^2+y^2+z^2"),
    (1, 3, "(2w+2)x^2+(3w+2)y^2+z^2"),
    (1, 4, "(3w+3)x^2+4y^2+(2w+3)z^2+(2w+3)xy+(2w+2)yz+zx"),
    (1, 5, "(2w+2)x^2+y^2+(3w+2)z^2+(3w+2)xy+(2w+2)yz+zx"),
    (1, 6, "(3w+3)x^2+4y^2+(2w+3)z^2+(3w+2)xy+(3w+3)yz+zx"),
    (1, 7, "(2w+2)x^2+y^2+(3w+2)z^2+(2w+3)xy+(3w+3)yz+zx"),
    (2, 3, "(3w+2)x^2+(2w+2)y^2+z^2"),
    (2, 4, "(2w+3)x^2+4y^2+(3w+3)z^2+(3w+3)xy+(3w+2)yz+zx"),
    (2, 5, "(3w+2)x^2+y^2+(2w+2)z^2+(2w+2)xy+(3w+2)yz+zx"),
    (2, 6, "(2w+3)x^2+4y^2+(3w+3)z^2+(2w+2)xy+(2w+3)yz+zx"),
    (2, 7, "(3w+2)x^2+y^2+(2w+2)z^2+(3w+3)xy+(2w+3)yz+zx"),
    (3, 4, "4x^2+4y^2+4z^2+4xy+yz+zx"),
    (3, 5, "x^2+y^2+z^2+xy+yz+zx"),
    (3, 6, "4x^2+4y^2+4z^2+xy+4yz+zx"),
    (3, 7, "x^2+y^2+z^2+4xy+4yz+zx"),
    (4, 5, "2z^2+xy"),
    (4, 6, "3y^2+zx"),
    (4, 7, "3x^2+yz"),
    (5, 6, "2x^2+yz"),
    (5, 7, "2y^2+zx"),
    (6, 7, "3z^2+xy"),
];

/// The partners of the two 6-cliques through x² + y² + z² = 0: the cliques
/// with labels containing 1 and 2 respectively, paired in that order.
pub const PARTNER_CLIQUES: [[&str; 6]; 2] = [
    [
        "3wx^2+(3w+4)y^2+(3w+1)z^2+yz",
        "2wx^2+(2w+1)y^2+(2w+4)z^2+yz",
        "(2w+4)x^2+2wy^2+(2w+1)z^2+zx",
        "(3w+1)x^2+3wy^2+(3w+4)z^2+zx",
        "(3w+4)x^2+(3w+1)y^2+3wz^2+xy",
        "(2w+1)x^2+(2w+4)y^2+2wz^2+xy",
    ],
    [
        "2wx^2+(2w+4)y^2+(2w+1)z^2+yz",
        "3wx^2+(3w+1)y^2+(3w+4)z^2+yz",
        "(3w+4)x^2+3wy^2+(3w+1)z^2+zx",
        "(2w+1)x^2+2wy^2+(2w+4)z^2+zx",
        "(2w+4)x^2+(2w+1)y^2+2wz^2+xy",
        "(3w+1)x^2+(3w+4)y^2+3wz^2+xy",
    ],
];

/// A conic meeting x² + y² + z² = 0 in one point of multiplicity 4 that lies
/// in no partner clique of the base conic.
pub const EXTRA_FOURFOLD_CONIC: &str = "4wx^2+(4w+4)y^2+(4w+1)z^2+yz";

/// (shared curve points, shared secants, [ν₁, ν₂, ν₃, ν₄], number of conics)
/// relative to x² + y² + z² = 0.
pub const INTERSECTION_CLASSES: [(u8, u8, [usize; 4], usize); 10] = [
    (0, 3, [4, 0, 0, 0], 10),
    (0, 3, [0, 2, 0, 0], 20),
    (1, 5, [0, 0, 0, 1], 24),
    (0, 0, [0, 2, 0, 0], 30),
    (2, 3, [0, 2, 0, 0], 30),
    (2, 1, [0, 2, 0, 0], 45),
    (1, 0, [1, 0, 1, 0], 120),
    (0, 1, [4, 0, 0, 0], 390),
    (1, 1, [2, 1, 0, 0], 600),
    (0, 0, [4, 0, 0, 0], 1880),
];

/// (shared curve points, shared secants, pattern, pair stabilizer, N) for
/// the orbits of stab(x² + y² + z² = 0) on the other conics.
pub const PAIR_STABILIZER_ROWS: [(u8, u8, [usize; 4], &str, usize); 14] = [
    (0, 3, [4, 0, 0, 0], "A4", 10),
    (0, 3, [0, 2, 0, 0], "D12", 20),
    (1, 5, [0, 0, 0, 1], "D10", 24),
    (2, 3, [0, 2, 0, 0], "D8", 30),
    (0, 0, [0, 2, 0, 0], "D12", 30),
    (2, 1, [0, 2, 0, 0], "D8", 45),
    (1, 0, [1, 0, 1, 0], "1", 120),
    (0, 1, [4, 0, 0, 0], "Z2", 180),
    (0, 1, [4, 0, 0, 0], "Z2^2", 210),
    (1, 1, [2, 1, 0, 0], "Z2", 600),
    (0, 0, [4, 0, 0, 0], "1", 720),
    (0, 0, [4, 0, 0, 0], "Z2", 900),
    (0, 0, [4, 0, 0, 0], "Z3", 80),
    (0, 0, [4, 0, 0, 0], "Z2^2", 180),
];
