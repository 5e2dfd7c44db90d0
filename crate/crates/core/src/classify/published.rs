//! Rows of the published classification table for `n ≤ 208`, transcribed
//! verbatim (including its misprints; see the acceptance diff).

use super::Rule;

pub struct PublishedRow {
    pub n: (u32, u32),
    pub lambda: u64,
    pub pairs: &'static [(u32, u32)],
    pub arot: Option<(u32, u32)>,
    pub srot: Option<(u32, u32)>,
    pub amir: Option<(u32, u32)>,
    pub sharp: bool,
    pub rule: Rule,
}

#[rustfmt::skip]
pub const PUBLISHED: &[PublishedRow] = &[
    PublishedRow { n: (1, 1), lambda: 0, pairs: &[(0, 0)], arot: None, srot: Some((1, 1)), amir: None, sharp: true, rule: Rule::DefinitionSharp },
    PublishedRow { n: (2, 3), lambda: 1, pairs: &[(1, 0), (0, 1)], arot: Some((1, 2)), srot: None, amir: None, sharp: true, rule: Rule::DefinitionSharp },
    PublishedRow { n: (4, 4), lambda: 2, pairs: &[(1, 1)], arot: None, srot: Some((2, 2)), amir: Some((1, 1)), sharp: true, rule: Rule::DefinitionSharp },
    PublishedRow { n: (5, 6), lambda: 4, pairs: &[(2, 0), (0, 2)], arot: None, srot: Some((3, 4)), amir: None, sharp: true, rule: Rule::DefinitionSharp },
    PublishedRow { n: (7, 8), lambda: 5, pairs: &[(2, 1), (1, 2)], arot: Some((3, 4)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (9, 9), lambda: 8, pairs: &[(2, 2)], arot: None, srot: Some((5, 5)), amir: None, sharp: true, rule: Rule::DefinitionSharp },
    PublishedRow { n: (10, 11), lambda: 9, pairs: &[(3, 0), (0, 3)], arot: Some((5, 6)), srot: None, amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (12, 13), lambda: 10, pairs: &[(3, 1), (1, 3)], arot: None, srot: Some((6, 7)), amir: Some((2, 3)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (14, 15), lambda: 13, pairs: &[(3, 2), (2, 3)], arot: Some((7, 8)), srot: None, amir: None, sharp: false, rule: Rule::SpecialCase32 },
    PublishedRow { n: (16, 17), lambda: 16, pairs: &[(4, 0), (0, 4)], arot: None, srot: Some((8, 9)), amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (18, 19), lambda: 17, pairs: &[(4, 1), (1, 4)], arot: Some((9, 10)), srot: None, amir: None, sharp: false, rule: Rule::SpecialCase41 },
    PublishedRow { n: (20, 20), lambda: 18, pairs: &[(3, 3)], arot: None, srot: Some((10, 10)), amir: Some((4, 4)), sharp: false, rule: Rule::PpFamily },
    PublishedRow { n: (21, 22), lambda: 20, pairs: &[(4, 2), (2, 4)], arot: None, srot: Some((11, 12)), amir: None, sharp: false, rule: Rule::SpecialCase42 },
    PublishedRow { n: (23, 26), lambda: 25, pairs: &[(5, 0), (4, 3), (3, 4), (0, 5)], arot: Some((11, 14)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (27, 28), lambda: 26, pairs: &[(5, 1), (1, 5)], arot: None, srot: Some((13, 14)), amir: Some((5, 6)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (29, 30), lambda: 29, pairs: &[(5, 2), (2, 5)], arot: Some((15, 16)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (31, 31), lambda: 32, pairs: &[(4, 4)], arot: None, srot: Some((15, 15)), amir: None, sharp: false, rule: Rule::PpFamily },
    PublishedRow { n: (32, 33), lambda: 34, pairs: &[(5, 3), (3, 5)], arot: None, srot: Some((16, 17)), amir: Some((7, 8)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (34, 35), lambda: 36, pairs: &[(6, 0), (0, 6)], arot: None, srot: Some((18, 19)), amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (36, 37), lambda: 37, pairs: &[(6, 1), (1, 6)], arot: Some((17, 18)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (38, 39), lambda: 40, pairs: &[(6, 2), (2, 6)], arot: None, srot: Some((20, 21)), amir: None, sharp: false, rule: Rule::Doubling },
    PublishedRow { n: (40, 41), lambda: 41, pairs: &[(5, 4), (4, 5)], arot: Some((19, 20)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (42, 43), lambda: 45, pairs: &[(6, 3), (3, 6)], arot: Some((21, 22)), srot: None, amir: None, sharp: false, rule: Rule::SpecialCase63 },
    PublishedRow { n: (44, 45), lambda: 49, pairs: &[(7, 0), (0, 7)], arot: Some((23, 24)), srot: None, amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (46, 48), lambda: 50, pairs: &[(7, 1), (5, 5), (1, 7)], arot: None, srot: Some((22, 24)), amir: Some((9, 11)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (49, 50), lambda: 52, pairs: &[(6, 4), (4, 6)], arot: None, srot: Some((25, 26)), amir: None, sharp: false, rule: Rule::SpecialCase64 },
    PublishedRow { n: (51, 52), lambda: 53, pairs: &[(7, 2), (2, 7)], arot: Some((25, 26)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (53, 54), lambda: 58, pairs: &[(7, 3), (3, 7)], arot: None, srot: Some((27, 28)), amir: Some((12, 13)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (55, 56), lambda: 61, pairs: &[(6, 5), (5, 6)], arot: Some((27, 28)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (57, 58), lambda: 64, pairs: &[(8, 0), (0, 8)], arot: None, srot: Some((29, 30)), amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (59, 62), lambda: 65, pairs: &[(8, 1), (7, 4), (4, 7), (1, 8)], arot: Some((29, 32)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (63, 64), lambda: 68, pairs: &[(8, 2), (2, 8)], arot: None, srot: Some((31, 32)), amir: None, sharp: false, rule: Rule::SRot },
    PublishedRow { n: (65, 65), lambda: 72, pairs: &[(6, 6)], arot: None, srot: Some((33, 33)), amir: None, sharp: false, rule: Rule::PpFamily },
    PublishedRow { n: (66, 67), lambda: 73, pairs: &[(8, 3), (3, 8)], arot: Some((33, 34)), srot: None, amir: None, sharp: false, rule: Rule::SpecialCase83 },
    PublishedRow { n: (68, 69), lambda: 74, pairs: &[(7, 5), (5, 7)], arot: None, srot: Some((34, 35)), amir: Some((14, 15)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (70, 71), lambda: 80, pairs: &[(8, 4), (4, 8)], arot: None, srot: Some((36, 37)), amir: None, sharp: false, rule: Rule::SpecialCase84 },
    PublishedRow { n: (72, 73), lambda: 81, pairs: &[(9, 0), (0, 9)], arot: Some((35, 36)), srot: None, amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (74, 75), lambda: 82, pairs: &[(9, 1), (1, 9)], arot: None, srot: Some((38, 39)), amir: Some((16, 17)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (76, 79), lambda: 85, pairs: &[(9, 2), (7, 6), (6, 7), (2, 9)], arot: Some((37, 40)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (80, 81), lambda: 89, pairs: &[(8, 5), (5, 8)], arot: Some((41, 42)), srot: None, amir: Some((18, 19)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (82, 83), lambda: 90, pairs: &[(9, 3), (3, 9)], arot: None, srot: Some((40, 41)), amir: Some((20, 21)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (84, 85), lambda: 97, pairs: &[(9, 4), (4, 9)], arot: Some((43, 44)), srot: None, amir: None, sharp: false, rule: Rule::SpecialCase94 },
    PublishedRow { n: (86, 86), lambda: 98, pairs: &[(7, 7)], arot: None, srot: Some((42, 42)), amir: Some((22, 22)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (87, 90), lambda: 100, pairs: &[(10, 0), (8, 6), (6, 8), (0, 10)], arot: None, srot: Some((43, 46)), amir: None, sharp: false, rule: Rule::SRot },
    PublishedRow { n: (91, 92), lambda: 101, pairs: &[(10, 1), (1, 10)], arot: Some((45, 46)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (93, 94), lambda: 104, pairs: &[(10, 2), (2, 10)], arot: None, srot: Some((47, 48)), amir: None, sharp: false, rule: Rule::Doubling },
    PublishedRow { n: (95, 96), lambda: 106, pairs: &[(9, 5), (5, 9)], arot: None, srot: Some((49, 50)), amir: Some((23, 24)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (97, 98), lambda: 109, pairs: &[(10, 3), (3, 10)], arot: Some((47, 48)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (99, 100), lambda: 113, pairs: &[(8, 7), (7, 8)], arot: Some((49, 50)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (101, 102), lambda: 116, pairs: &[(10, 4), (4, 10)], arot: None, srot: Some((51, 52)), amir: None, sharp: false, rule: Rule::SpecialCase104 },
    PublishedRow { n: (103, 104), lambda: 117, pairs: &[(9, 6), (6, 9)], arot: Some((51, 52)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (105, 106), lambda: 121, pairs: &[(11, 0), (0, 11)], arot: Some((53, 54)), srot: None, amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (107, 108), lambda: 122, pairs: &[(11, 1), (1, 11)], arot: None, srot: Some((53, 54)), amir: Some((25, 26)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (109, 112), lambda: 125, pairs: &[(11, 2), (10, 5), (5, 10), (2, 11)], arot: Some((55, 58)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (113, 113), lambda: 128, pairs: &[(8, 8)], arot: None, srot: Some((55, 55)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (114, 117), lambda: 130, pairs: &[(11, 3), (9, 7), (7, 9), (3, 11)], arot: None, srot: Some((56, 59)), amir: Some((27, 30)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (118, 119), lambda: 136, pairs: &[(10, 6), (6, 10)], arot: None, srot: Some((60, 61)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (120, 121), lambda: 137, pairs: &[(11, 4), (4, 11)], arot: Some((59, 60)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (122, 123), lambda: 144, pairs: &[(12, 0), (0, 12)], arot: None, srot: Some((62, 63)), amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (124, 127), lambda: 145, pairs: &[(12, 1), (9, 8), (8, 9), (1, 12)], arot: Some((61, 64)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (128, 129), lambda: 146, pairs: &[(11, 5), (5, 11)], arot: None, srot: Some((64, 65)), amir: Some((31, 32)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (130, 131), lambda: 148, pairs: &[(12, 2), (2, 12)], arot: None, srot: Some((66, 67)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (132, 133), lambda: 149, pairs: &[(10, 7), (7, 10)], arot: Some((65, 66)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (134, 135), lambda: 153, pairs: &[(12, 3), (3, 12)], arot: Some((67, 68)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (136, 137), lambda: 157, pairs: &[(11, 6), (6, 11)], arot: Some((69, 70)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (138, 139), lambda: 160, pairs: &[(12, 4), (4, 12)], arot: None, srot: Some((68, 69)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (140, 140), lambda: 162, pairs: &[(9, 9)], arot: None, srot: Some((70, 70)), amir: Some((33, 33)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (141, 142), lambda: 164, pairs: &[(10, 8), (8, 10)], arot: None, srot: Some((71, 72)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (143, 146), lambda: 169, pairs: &[(13, 0), (12, 5), (5, 12), (0, 13)], arot: Some((71, 74)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (147, 150), lambda: 170, pairs: &[(13, 1), (11, 7), (7, 11), (1, 13)], arot: None, srot: Some((73, 76)), amir: Some((34, 37)), sharp: false, rule: Rule::AMir },
    PublishedRow { n: (151, 152), lambda: 173, pairs: &[(13, 2), (2, 13)], arot: Some((75, 76)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (153, 154), lambda: 178, pairs: &[(13, 3), (3, 13)], arot: None, srot: Some((77, 78)), amir: Some((38, 39)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (155, 156), lambda: 180, pairs: &[(12, 6), (6, 12)], arot: None, srot: Some((79, 80)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (157, 158), lambda: 181, pairs: &[(10, 9), (9, 10)], arot: Some((77, 78)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (159, 162), lambda: 185, pairs: &[(13, 4), (11, 8), (8, 11), (4, 13)], arot: Some((79, 82)), srot: None, amir: None, sharp: false, rule: Rule::ARot },
    PublishedRow { n: (163, 164), lambda: 193, pairs: &[(12, 7), (7, 12)], arot: Some((83, 84)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (165, 166), lambda: 194, pairs: &[(13, 5), (5, 13)], arot: None, srot: Some((81, 82)), amir: Some((40, 41)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (167, 168), lambda: 196, pairs: &[(14, 0), (0, 14)], arot: None, srot: Some((83, 84)), amir: None, sharp: false, rule: Rule::P0Family },
    PublishedRow { n: (169, 170), lambda: 197, pairs: &[(14, 1), (1, 14)], arot: Some((85, 86)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (171, 173), lambda: 200, pairs: &[(14, 2), (10, 10), (2, 14)], arot: None, srot: Some((85, 87)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (174, 175), lambda: 202, pairs: &[(11, 9), (9, 11)], arot: None, srot: Some((88, 89)), amir: Some((42, 43)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (176, 179), lambda: 205, pairs: &[(14, 3), (13, 6), (6, 13), (3, 14)], arot: Some((87, 90)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (180, 181), lambda: 208, pairs: &[(12, 8), (8, 12)], arot: None, srot: Some((90, 91)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (182, 183), lambda: 212, pairs: &[(14, 4), (4, 14)], arot: None, srot: Some((92, 93)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (184, 185), lambda: 218, pairs: &[(13, 7), (7, 13)], arot: None, srot: Some((94, 95)), amir: Some((44, 45)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (186, 189), lambda: 221, pairs: &[(14, 5), (11, 10), (10, 11), (5, 14)], arot: Some((91, 94)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (190, 193), lambda: 225, pairs: &[(15, 0), (12, 9), (9, 12), (0, 15)], arot: Some((96, 99)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (194, 195), lambda: 226, pairs: &[(15, 1), (1, 15)], arot: None, srot: Some((95, 96)), amir: Some((46, 47)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (196, 197), lambda: 229, pairs: &[(15, 2), (2, 15)], arot: Some((99, 100)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (198, 199), lambda: 232, pairs: &[(14, 6), (6, 14)], arot: None, srot: Some((97, 98)), amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (200, 201), lambda: 233, pairs: &[(13, 8), (8, 13)], arot: Some((101, 102)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (202, 203), lambda: 234, pairs: &[(15, 3), (3, 15)], arot: None, srot: Some((100, 101)), amir: Some((48, 49)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (204, 205), lambda: 241, pairs: &[(15, 4), (4, 15)], arot: Some((103, 104)), srot: None, amir: None, sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (206, 206), lambda: 242, pairs: &[(11, 11)], arot: None, srot: Some((102, 102)), amir: Some((50, 50)), sharp: false, rule: Rule::MaxP },
    PublishedRow { n: (207, 208), lambda: 244, pairs: &[(12, 10), (10, 12)], arot: None, srot: Some((103, 104)), amir: None, sharp: false, rule: Rule::MaxP },
];
