//! Transcribed parameter tables.

/// (z, x, k, n_(k-1), n_k) for T4 when z >= 53.
pub(crate) const LARGE_Z: [(i64, i64, i64, i64, i64); 79] = [
    (53, 261, 52, 104, 164),
    (54, 131, 52, 103, 35),
    (55, 90, 52, 95, 2),
    (56, 72, 52, 77, 2),
    (57, 60, 52, 65, 2),
    (58, 52, 52, 53, 6),
    (59, 45, 52, 50, 2),
    (60, 40, 52, 45, 2),
    (61, 36, 52, 41, 2),
    (62, 33, 52, 35, 5),
    (63, 30, 52, 35, 2),
    (64, 28, 52, 29, 6),
    (65, 26, 52, 27, 6),
    (66, 25, 52, 15, 17),
    (67, 23, 52, 20, 10),
    (68, 22, 52, 13, 16),
    (69, 21, 52, 8, 20),
    (70, 21, 53, 15, 13),
    (71, 20, 53, 12, 15),
    (72, 19, 53, 11, 15),
    (73, 19, 54, 18, 8),
    (74, 18, 54, 19, 6),
    (75, 17, 54, 22, 2),
    (76, 17, 54, 5, 19),
    (77, 17, 55, 12, 12),
    (78, 16, 55, 18, 5),
    (79, 16, 55, 2, 21),
    (80, 16, 56, 9, 14),
    (81, 15, 56, 18, 4),
    (82, 15, 56, 3, 19),
    (83, 15, 57, 10, 12),
    (84, 15, 58, 17, 5),
    (85, 15, 58, 2, 20),
    (86, 14, 58, 15, 6),
    (87, 14, 58, 1, 20),
    (88, 13, 58, 17, 3),
    (89, 13, 58, 4, 16),
    (90, 13, 59, 11, 9),
    (91, 13, 60, 18, 2),
    (92, 13, 60, 5, 15),
    (93, 13, 61, 12, 8),
    (94, 13, 62, 19, 1),
    (95, 13, 62, 6, 14),
    (96, 13, 63, 13, 7),
    (97, 13, 63, 0, 20),
    (98, 13, 64, 7, 13),
    (99, 13, 65, 14, 6),
    (100, 13, 65, 1, 19),
    (101, 13, 66, 8, 12),
    (102, 13, 67, 15, 5),
    (103, 13, 67, 2, 18),
    (104, 13, 68, 9, 11),
    (105, 13, 69, 16, 4),
    (106, 13, 69, 3, 17),
    (107, 13, 70, 10, 10),
    (108, 13, 71, 17, 3),
    (109, 13, 71, 4, 16),
    (110, 13, 72, 11, 9),
    (111, 13, 73, 18, 2),
    (112, 13, 73, 5, 15),
    (113, 13, 74, 12, 8),
    (114, 13, 75, 19, 1),
    (115, 13, 75, 6, 14),
    (116, 13, 76, 13, 7),
    (117, 13, 76, 0, 20),
    (118, 13, 77, 7, 13),
    (119, 13, 78, 14, 6),
    (120, 13, 78, 1, 19),
    (121, 13, 79, 8, 12),
    (122, 13, 80, 15, 5),
    (123, 13, 80, 2, 18),
    (124, 13, 81, 9, 11),
    (125, 13, 82, 16, 4),
    (126, 13, 82, 3, 17),
    (127, 13, 83, 10, 10),
    (128, 13, 84, 17, 3),
    (129, 13, 84, 4, 16),
    (130, 13, 85, 11, 9),
    (131, 13, 86, 18, 2),
];

/// (z, x, lowest d(v) or None for d(v) >= x, k, n_(k-1), n_k) for T5 when z <= 51, as printed.
pub(crate) const SMALL_Z: [(i64, i64, Option<i64>, i64, i64, i64); 37] = [
    (51, 365, Some(3249), 52, 0, 358),
    (50, 183, Some(1358), 52, 0, 358),
    (49, 122, Some(825), 52, 1, 114),
    (48, 92, Some(572), 52, 3, 82),
    (47, 73, Some(430), 52, 0, 66),
    (46, 61, Some(333), 52, 1, 53),
    (45, 53, Some(263), 52, 6, 40),
    (44, 46, Some(215), 52, 3, 36),
    (43, 41, Some(177), 52, 4, 30),
    (42, 37, Some(146), 52, 5, 25),
    (41, 34, Some(120), 52, 9, 18),
    (40, 31, Some(100), 52, 7, 17),
    (39, 29, Some(80), 52, 12, 10),
    (38, 27, Some(64), 52, 13, 7),
    (37, 25, Some(47), 52, 10, 8),
    (36, 23, None, 52, 3, 13),
    (35, 22, None, 52, 9, 6),
    (34, 21, None, 52, 13, 1),
    (33, 20, None, 51, 2, 11),
    (32, 19, None, 51, 3, 9),
    (31, 18, None, 51, 2, 9),
    (30, 18, None, 50, 9, 2),
    (29, 17, None, 50, 6, 4),
    (28, 16, None, 50, 1, 8),
    (27, 16, None, 49, 8, 1),
    (26, 15, None, 49, 1, 7),
    (25, 15, None, 48, 8, 0),
    (24, 15, None, 46, 7, 1),
    (23, 15, None, 44, 6, 2),
    (22, 15, None, 42, 5, 3),
    (21, 15, None, 40, 4, 4),
    (20, 15, None, 38, 3, 5),
    (19, 15, None, 36, 2, 6),
    (18, 15, None, 34, 1, 7),
    (17, 15, None, 32, 0, 8),
    (16, 15, None, 31, 7, 1),
    (15, 14, None, 31, 6, 1),
];

/// Largest admissible number of B3-branches at the root when the D-branches
/// are D_(k-1) and D_k, for k = 53, 54, ...
pub(crate) const MAX_B3_LARGE: [i64; 79] = [
    919, 882, 798, 749, 717, 693, 672, 654,
    639, 627, 615, 605, 597, 591, 584, 577,
    573, 571, 569, 564, 562, 560, 554, 552,
    553, 550, 547, 548, 545, 542, 543, 544,
    545, 541, 538, 535, 531, 532, 533, 533,
    534, 535, 535, 536, 536, 537, 538, 538,
    539, 539, 540, 540, 541, 541, 542, 543,
    543, 544, 544, 545, 545, 546, 546, 547,
    547, 548, 548, 549, 549, 550, 550, 551,
    551, 552, 552, 553, 553, 553, 554,
];

/// Same bound for k = 52, 51, ..., 15 (the last entry has only D_15).
pub(crate) const MAX_B3_SMALL: [i64; 38] = [
    916, 908, 900, 824, 723, 688, 661, 638,
    618, 601, 587, 574, 563, 553, 543, 533,
    525, 519, 513, 507, 500, 496, 492, 486,
    482, 478, 474, 472, 469, 467, 465, 462,
    460, 457, 454, 451, 449, 426,
];

/// Variants of the two tables above when one D-branch carries a B2-branch.
pub(crate) const MAX_B3_LARGE_B2: [i64; 79] = [
    919, 882, 798, 749, 718, 694, 673, 655,
    640, 628, 617, 607, 599, 593, 586, 579,
    575, 573, 571, 566, 564, 562, 557, 554,
    555, 553, 550, 551, 548, 545, 546, 547,
    548, 544, 541, 538, 535, 535, 536, 537,
    537, 538, 538, 539, 540, 540, 541, 542,
    542, 543, 543, 544, 544, 545, 546, 546,
    547, 547, 548, 548, 549, 549, 550, 550,
    551, 551, 552, 553, 553, 554, 554, 554,
    555, 555, 556, 556, 557, 557, 558,
];

pub(crate) const MAX_B3_SMALL_B2: [i64; 38] = [
    916, 908, 900, 824, 724, 688, 661, 639,
    618, 602, 588, 575, 564, 554, 544, 534,
    526, 520, 514, 508, 501, 497, 493, 487,
    483, 479, 475, 472, 470, 468, 465, 463,
    460, 457, 454, 451, 448, 426,
];
