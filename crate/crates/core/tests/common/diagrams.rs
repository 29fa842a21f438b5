/// Name, zero-cushioned subset, binary sequence, exactly as drawn.
pub const Z5_VERTICES: [(&str, &str, &str); 32] = [
    ("L0ll", "00000", "00000"),
    ("L1l", "10000", "00001"),
    ("L2c", "20000", "00011"),
    ("L3l", "30000", "00111"),
    ("L3r", "21000", "00010"),
    ("L4ll", "40000", "01111"),
    ("L4c", "31000", "00110"),
    ("L5ll", "50000", "11110"),
    ("L5l", "41000", "01110"),
    ("L5r", "32000", "00100"),
    ("L6l", "51000", "11110"),
    ("L6c", "42000", "01100"),
    ("L6rr", "32100", "00101"),
    ("L7l", "43000", "01000"),
    ("L7c", "52000", "11100"),
    ("L7r", "42100", "01101"),
    ("L8l", "53000", "11000"),
    ("L8c", "43100", "01001"),
    ("L8r", "52100", "11101"),
    ("L9ll", "54000", "10000"),
    ("L9c", "53100", "11001"),
    ("L9r", "43200", "01011"),
    ("L10l", "54100", "10001"),
    ("L10r", "53200", "11011"),
    ("L10rr", "43210", "01010"),
    ("L11c", "54200", "10011"),
    ("L11rr", "53210", "11010"),
    ("L12l", "54300", "10111"),
    ("L12r", "54210", "10010"),
    ("L13c", "54310", "10110"),
    ("L14r", "54320", "10100"),
    ("L15rr", "54321", "10101"),
];

pub const Z5_EDGES: [(&str, &str, u32); 48] = [
    ("L0ll", "L1l", 5),
    ("L1l", "L2c", 4),
    ("L2c", "L3l", 3),
    ("L2c", "L3r", 5),
    ("L3l", "L4ll", 2),
    ("L3l", "L4c", 5),
    ("L3r", "L4c", 3),
    ("L4ll", "L5ll", 1),
    ("L4ll", "L5l", 5),
    ("L4c", "L5l", 2),
    ("L4c", "L5r", 4),
    ("L5ll", "L6l", 5),
    ("L5l", "L6l", 1),
    ("L5l", "L6c", 4),
    ("L5r", "L6c", 2),
    ("L5r", "L6rr", 5),
    ("L6l", "L7c", 4),
    ("L6c", "L7l", 3),
    ("L6c", "L7c", 1),
    ("L6c", "L7r", 5),
    ("L6rr", "L7r", 2),
    ("L7l", "L8l", 1),
    ("L7c", "L8l", 3),
    ("L7c", "L8r", 5),
    ("L7l", "L8c", 5),
    ("L7r", "L8c", 3),
    ("L7r", "L8r", 1),
    ("L8l", "L9ll", 2),
    ("L8l", "L9c", 5),
    ("L8c", "L9c", 1),
    ("L8c", "L9r", 4),
    ("L8r", "L9c", 5),
    ("L9ll", "L10l", 5),
    ("L9c", "L10l", 2),
    ("L9c", "L10r", 4),
    ("L9r", "L10r", 1),
    ("L9r", "L10rr", 5),
    ("L10l", "L11c", 4),
    ("L10r", "L11c", 2),
    ("L10r", "L11rr", 5),
    ("L10rr", "L11rr", 1),
    ("L11c", "L12l", 3),
    ("L11c", "L12r", 5),
    ("L11rr", "L12r", 2),
    ("L12l", "L13c", 5),
    ("L12r", "L13c", 3),
    ("L13c", "L14r", 4),
    ("L14r", "L15rr", 5),
];

/// Partition, tableau, weight for D_C^ballot(3, 3).
pub const BALLOT33_VERTICES: [(&str, &str, [i64; 3]); 14] = [
    ("3,2,1", "2,4,6", [0, 0, -1]),
    ("2,2,1", "2,4,5", [0, -2, 1]),
    ("1,1,1", "2,3,4", [-1, 0, 0]),
    ("1,0,0", "1,2,4", [1, -1, 0]),
    ("0,0,0", "1,2,3", [-1, 1, 0]),
    ("1,1,0", "1,3,4", [1, 0, 0]),
    ("3,1,0", "1,3,6", [0, 2, -1]),
    ("2,1,0", "1,3,5", [0, 0, 1]),
    ("3,1,1", "2,3,6", [-2, 2, -1]),
    ("2,1,1", "2,3,5", [-2, 0, 1]),
    ("3,2,0", "1,4,6", [2, 0, -1]),
    ("2,2,0", "1,4,5", [2, -2, 1]),
    ("3,0,0", "1,2,6", [0, 1, -1]),
    ("2,0,0", "1,2,5", [0, -1, 1]),
];

pub const BALLOT33_EDGES: [(&str, &str, u32); 17] = [
    ("3,2,1", "2,2,1", 3),
    ("2,2,1", "1,1,1", 2),
    ("1,1,1", "3,1,1", 2),
    ("1,1,1", "1,0,0", 1),
    ("3,1,1", "2,1,1", 3),
    ("3,1,1", "3,0,0", 1),
    ("1,0,0", "3,0,0", 2),
    ("3,0,0", "2,0,0", 3),
    ("3,2,0", "2,2,0", 3),
    ("2,0,0", "2,2,0", 1),
    ("2,0,0", "0,0,0", 2),
    ("2,2,0", "1,1,0", 2),
    ("0,0,0", "1,1,0", 1),
    ("1,1,0", "3,1,0", 2),
    ("3,1,0", "2,1,0", 3),
    ("2,1,1", "2,0,0", 1),
    ("3,0,0", "3,2,0", 1),
];
