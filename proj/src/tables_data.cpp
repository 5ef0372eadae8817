#include "cubics/detail/tables_raw.hpp"

// Embedded generator tables for the nef cone and the two reference subcones,
// together with the per-row annotations used by the verifier.

namespace cubics::detail {

const RawRow1 kTable1[99] = {
    { 1, { 2,-1,-1,-1, 0, 0, 0}},
    { 2, { 2,-1,-1, 0,-1, 0, 0}},
    { 3, { 2,-1,-1, 0, 0,-1, 0}},
    { 4, { 2,-1,-1, 0, 0, 0,-1}},
    { 5, { 2,-1, 0,-1,-1, 0, 0}},
    { 6, { 2,-1, 0,-1, 0,-1, 0}},
    { 7, { 2,-1, 0,-1, 0, 0,-1}},
    { 8, { 2,-1, 0, 0,-1,-1, 0}},
    { 9, { 2,-1, 0, 0,-1, 0,-1}},
    {10, { 2,-1, 0, 0, 0,-1,-1}},
    {11, { 1, 0, 0, 0, 0, 0, 0}},
    {12, { 3,-2,-1,-1,-1,-1, 0}},
    {13, { 3,-2,-1,-1,-1, 0,-1}},
    {14, { 3,-2,-1,-1, 0,-1,-1}},
    {15, { 3,-2,-1, 0,-1,-1,-1}},
    {16, { 3,-2, 0,-1,-1,-1,-1}},
    {17, { 1,-1, 0, 0, 0, 0, 0}},
    {18, { 1, 0,-1, 0, 0, 0, 0}},
    {19, { 1, 0, 0,-1, 0, 0, 0}},
    {20, { 1, 0, 0, 0,-1, 0, 0}},
    {21, { 1, 0, 0, 0, 0,-1, 0}},
    {22, { 1, 0, 0, 0, 0, 0,-1}},
    {23, { 2, 0,-1,-1,-1, 0, 0}},
    {24, { 2, 0,-1,-1, 0,-1, 0}},
    {25, { 2, 0,-1,-1, 0, 0,-1}},
    {26, { 2, 0,-1, 0,-1,-1, 0}},
    {27, { 2, 0,-1, 0,-1, 0,-1}},
    {28, { 2, 0,-1, 0, 0,-1,-1}},
    {29, { 2, 0, 0,-1,-1,-1, 0}},
    {30, { 2, 0, 0,-1,-1, 0,-1}},
    {31, { 2, 0, 0,-1, 0,-1,-1}},
    {32, { 2, 0, 0, 0,-1,-1,-1}},
    {33, { 2,-1,-1,-1,-1, 0, 0}},
    {34, { 2,-1,-1,-1, 0,-1, 0}},
    {35, { 2,-1,-1,-1, 0, 0,-1}},
    {36, { 2,-1,-1, 0,-1,-1, 0}},
    {37, { 2,-1,-1, 0,-1, 0,-1}},
    {38, { 2,-1,-1, 0, 0,-1,-1}},
    {39, { 2,-1, 0,-1,-1,-1, 0}},
    {40, { 2,-1, 0,-1,-1, 0,-1}},
    {41, { 2,-1, 0,-1, 0,-1,-1}},
    {42, { 2,-1, 0, 0,-1,-1,-1}},
    {43, { 2, 0,-1,-1,-1,-1, 0}},
    {44, { 2, 0,-1,-1,-1, 0,-1}},
    {45, { 2, 0,-1,-1, 0,-1,-1}},
    {46, { 2, 0,-1, 0,-1,-1,-1}},
    {47, { 2, 0, 0,-1,-1,-1,-1}},
    {48, { 3,-1,-2,-1,-1,-1, 0}},
    {49, { 3,-1,-2,-1,-1, 0,-1}},
    {50, { 3,-1,-2,-1, 0,-1,-1}},
    {51, { 3,-1,-2, 0,-1,-1,-1}},
    {52, { 3,-1,-1,-2,-1,-1, 0}},
    {53, { 3,-1,-1,-2,-1, 0,-1}},
    {54, { 3,-1,-1,-2, 0,-1,-1}},
    {55, { 3,-1,-1,-1,-2,-1, 0}},
    {56, { 3,-1,-1,-1,-2, 0,-1}},
    {57, { 3,-1,-1,-1,-1,-2, 0}},
    {58, { 3,-1,-1,-1,-1, 0,-2}},
    {59, { 3,-1,-1,-1, 0,-2,-1}},
    {60, { 3,-1,-1,-1, 0,-1,-2}},
    {61, { 3,-1,-1, 0,-2,-1,-1}},
    {62, { 3,-1,-1, 0,-1,-2,-1}},
    {63, { 3,-1,-1, 0,-1,-1,-2}},
    {64, { 3,-1, 0,-2,-1,-1,-1}},
    {65, { 3,-1, 0,-1,-2,-1,-1}},
    {66, { 3,-1, 0,-1,-1,-2,-1}},
    {67, { 3,-1, 0,-1,-1,-1,-2}},
    {68, { 3, 0,-2,-1,-1,-1,-1}},
    {69, { 3, 0,-1,-2,-1,-1,-1}},
    {70, { 3, 0,-1,-1,-2,-1,-1}},
    {71, { 3, 0,-1,-1,-1,-2,-1}},
    {72, { 3, 0,-1,-1,-1,-1,-2}},
    {73, { 3,-2,-1,-1,-1,-1,-1}},
    {74, { 3,-1,-2,-1,-1,-1,-1}},
    {75, { 3,-1,-1,-2,-1,-1,-1}},
    {76, { 3,-1,-1,-1,-2,-1,-1}},
    {77, { 3,-1,-1,-1,-1,-2,-1}},
    {78, { 3,-1,-1,-1,-1,-1,-2}},
    {79, { 4,-2,-2,-2,-1,-1,-1}},
    {80, { 4,-2,-2,-1,-2,-1,-1}},
    {81, { 4,-2,-2,-1,-1,-2,-1}},
    {82, { 4,-2,-2,-1,-1,-1,-2}},
    {83, { 4,-2,-1,-2,-2,-1,-1}},
    {84, { 4,-2,-1,-2,-1,-2,-1}},
    {85, { 4,-2,-1,-2,-1,-1,-2}},
    {86, { 4,-2,-1,-1,-2,-2,-1}},
    {87, { 4,-2,-1,-1,-2,-1,-2}},
    {88, { 4,-2,-1,-1,-1,-2,-2}},
    {89, { 4,-1,-2,-2,-2,-1,-1}},
    {90, { 4,-1,-2,-2,-1,-2,-1}},
    {91, { 4,-1,-2,-2,-1,-1,-2}},
    {92, { 4,-1,-2,-1,-2,-2,-1}},
    {93, { 4,-1,-2,-1,-2,-1,-2}},
    {94, { 4,-1,-2,-1,-1,-2,-2}},
    {95, { 4,-1,-1,-2,-2,-2,-1}},
    {96, { 4,-1,-1,-2,-2,-1,-2}},
    {97, { 4,-1,-1,-2,-1,-2,-2}},
    {98, { 4,-1,-1,-1,-2,-2,-2}},
    {99, { 5,-2,-2,-2,-2,-2,-2}},
};

const RawRow2 kTable2[99] = {
    { 1, { 4,-3,-1,-1,-1,-1,-1}, RD(1)},
    { 2, { 2,-1,-1, 0, 0, 0, 0}, RD(1)},
    { 3, { 2,-1, 0,-1, 0, 0, 0}, RD(1)},
    { 4, { 2,-1, 0, 0,-1, 0, 0}, RD(1)},
    { 5, { 2,-1, 0, 0, 0,-1, 0}, RD(1)},
    { 6, { 2,-1, 0, 0, 0, 0,-1}, RD(1)},
    { 7, { 1, 0, 0, 0, 0, 0, 0}, RD(1)},
    { 8, { 3,-2,-1,-1,-1, 0, 0}, RD(1)},
    { 9, { 3,-2,-1,-1, 0,-1, 0}, RD(1)},
    {10, { 3,-2,-1,-1, 0, 0,-1}, RD(1)},
    {11, { 3,-2,-1, 0,-1,-1, 0}, RD(1)},
    {12, { 3,-2,-1, 0,-1, 0,-1}, RD(1)},
    {13, { 3,-2,-1, 0, 0,-1,-1}, RD(1)},
    {14, { 3,-2, 0,-1,-1,-1, 0}, RD(1)},
    {15, { 3,-2, 0,-1,-1, 0,-1}, RD(1)},
    {16, { 3,-2, 0,-1, 0,-1,-1}, RD(1)},
    {17, { 3,-2, 0, 0,-1,-1,-1}, RD(1)},
    {18, { 1,-1, 0, 0, 0, 0, 0}, RD(0)},
    {19, { 2,-1,-1,-1, 0, 0, 0}, RD(1)},
    {20, { 2,-1,-1, 0,-1, 0, 0}, RD(1)},
    {21, { 2,-1,-1, 0, 0,-1, 0}, RD(1)},
    {22, { 2,-1,-1, 0, 0, 0,-1}, RD(1)},
    {23, { 2,-1, 0,-1,-1, 0, 0}, RD(1)},
    {24, { 2,-1, 0,-1, 0,-1, 0}, RD(1)},
    {25, { 2,-1, 0,-1, 0, 0,-1}, RD(1)},
    {26, { 2,-1, 0, 0,-1,-1, 0}, RD(1)},
    {27, { 2,-1, 0, 0,-1, 0,-1}, RD(1)},
    {28, { 2,-1, 0, 0, 0,-1,-1}, RD(1)},
    {29, { 3,-1,-1,-1,-1, 0, 0}, RS(TL(), TLij(5,6))},
    {30, { 3,-1,-1,-1, 0,-1, 0}, RS(TL(), TLij(4,6))},
    {31, { 3,-1,-1,-1, 0, 0,-1}, RS(TL(), TLij(4,5))},
    {32, { 3,-1,-1, 0,-1,-1, 0}, RS(TL(), TLij(3,6))},
    {33, { 3,-1,-1, 0,-1, 0,-1}, RS(TL(), TLij(3,5))},
    {34, { 3,-1,-1, 0, 0,-1,-1}, RS(TL(), TLij(3,4))},
    {35, { 3,-1, 0,-1,-1,-1, 0}, RS(TL(), TLij(2,6))},
    {36, { 3,-1, 0,-1,-1, 0,-1}, RS(TL(), TLij(2,5))},
    {37, { 3,-1, 0,-1, 0,-1,-1}, RS(TL(), TLij(2,4))},
    {38, { 3,-1, 0, 0,-1,-1,-1}, RS(TL(), TLij(2,3))},
    {39, { 3,-1,-1,-1,-1,-1, 0}, RS(TLi(2), TLij(2,6))},
    {40, { 3,-1,-1,-1,-1, 0,-1}, RS(TLi(2), TLij(2,5))},
    {41, { 3,-1,-1,-1, 0,-1,-1}, RS(TLi(2), TLij(2,4))},
    {42, { 3,-1,-1, 0,-1,-1,-1}, RS(TLi(2), TLij(2,3))},
    {43, { 3,-1, 0,-1,-1,-1,-1}, RS(TLi(3), TLij(2,3))},
    {44, { 4,-1,-1,-1,-1,-1,-1}, RS(TLij(2,3), TLi(2), TLi(3))},
    {45, { 3,-2,-1,-1,-1,-1, 0}, RD(1)},
    {46, { 3,-2,-1,-1,-1, 0,-1}, RD(1)},
    {47, { 3,-2,-1,-1, 0,-1,-1}, RD(1)},
    {48, { 3,-2,-1, 0,-1,-1,-1}, RD(1)},
    {49, { 3,-2, 0,-1,-1,-1,-1}, RD(1)},
    {50, { 4,-2,-2,-1,-1,-1, 0}, RS(TRow(45), TLi(2))},
    {51, { 4,-2,-2,-1,-1, 0,-1}, RS(TRow(46), TLi(2))},
    {52, { 4,-2,-2,-1, 0,-1,-1}, RS(TRow(47), TLi(2))},
    {53, { 4,-2,-2, 0,-1,-1,-1}, RS(TRow(48), TLi(2))},
    {54, { 4,-2,-1,-2,-1,-1, 0}, RS(TRow(45), TLi(3))},
    {55, { 4,-2,-1,-2,-1, 0,-1}, RS(TRow(46), TLi(3))},
    {56, { 4,-2,-1,-2, 0,-1,-1}, RS(TRow(47), TLi(3))},
    {57, { 4,-2,-1,-1,-2,-1, 0}, RS(TRow(45), TLi(4))},
    {58, { 4,-2,-1,-1,-2, 0,-1}, RS(TRow(46), TLi(4))},
    {59, { 4,-2,-1,-1,-1,-2, 0}, RS(TRow(45), TLi(5))},
    {60, { 4,-2,-1,-1,-1, 0,-2}, RS(TRow(46), TLi(6))},
    {61, { 4,-2,-1,-1, 0,-2,-1}, RS(TRow(47), TLi(5))},
    {62, { 4,-2,-1,-1, 0,-1,-2}, RS(TRow(47), TLi(6))},
    {63, { 4,-2,-1, 0,-2,-1,-1}, RS(TRow(48), TLi(4))},
    {64, { 4,-2,-1, 0,-1,-2,-1}, RS(TRow(48), TLi(5))},
    {65, { 4,-2,-1, 0,-1,-1,-2}, RS(TRow(48), TLi(6))},
    {66, { 4,-2, 0,-2,-1,-1,-1}, RS(TRow(49), TLi(3))},
    {67, { 4,-2, 0,-1,-2,-1,-1}, RS(TRow(49), TLi(4))},
    {68, { 4,-2, 0,-1,-1,-2,-1}, RS(TRow(49), TLi(5))},
    {69, { 4,-2, 0,-1,-1,-1,-2}, RS(TRow(49), TLi(6))},
    {70, { 4,-2,-2,-1,-1,-1,-1}, RS(TB(1), TLi(2))},
    {71, { 4,-2,-1,-2,-1,-1,-1}, RS(TB(1), TLi(3))},
    {72, { 4,-2,-1,-1,-2,-1,-1}, RS(TB(1), TLi(4))},
    {73, { 4,-2,-1,-1,-1,-2,-1}, RS(TB(1), TLi(5))},
    {74, { 4,-2,-1,-1,-1,-1,-2}, RS(TB(1), TLi(6))},
    {75, { 5,-2,-2,-2,-1,-1,-1}, RS(TLi(3), TLij(3,4), TLij(5,6))},
    {76, { 5,-2,-2,-1,-2,-1,-1}, RS(TLi(2), TLij(2,3), TLij(5,6))},
    {77, { 5,-2,-2,-1,-1,-2,-1}, RS(TLi(2), TLij(2,3), TLij(4,6))},
    {78, { 5,-2,-2,-1,-1,-1,-2}, RS(TLi(2), TLij(2,3), TLij(4,5))},
    {79, { 5,-2,-1,-2,-2,-1,-1}, RS(TLi(3), TLij(2,3), TLij(5,6))},
    {80, { 5,-2,-1,-2,-1,-2,-1}, RS(TLi(3), TLij(2,3), TLij(4,6))},
    {81, { 5,-2,-1,-2,-1,-1,-2}, RS(TLi(3), TLij(2,3), TLij(4,5))},
    {82, { 5,-2,-1,-1,-2,-2,-1}, RS(TLi(4), TLij(2,3), TLij(4,6))},
    {83, { 5,-2,-1,-1,-2,-1,-2}, RS(TLi(4), TLij(2,3), TLij(4,5))},
    {84, { 5,-2,-1,-1,-1,-2,-2}, RS(TLi(5), TLij(2,3), TLij(4,5))},
    {85, { 5,-3,-2,-2,-1,-1,-1}, RS(TRow(45), TLij(4,5))},
    {86, { 5,-3,-2,-1,-2,-1,-1}, RS(TRow(45), TLij(3,5))},
    {87, { 5,-3,-2,-1,-1,-2,-1}, RS(TRow(45), TLij(3,4))},
    {88, { 5,-3,-2,-1,-1,-1,-2}, RS(TRow(46), TLij(3,4))},
    {89, { 5,-3,-1,-2,-2,-1,-1}, RS(TRow(45), TLij(2,5))},
    {90, { 5,-3,-1,-2,-1,-2,-1}, RS(TRow(45), TLij(2,4))},
    {91, { 5,-3,-1,-2,-1,-1,-2}, RS(TRow(46), TLij(2,4))},
    {92, { 5,-3,-1,-1,-2,-2,-1}, RS(TRow(45), TLij(2,3))},
    {93, { 5,-3,-1,-1,-2,-1,-2}, RS(TRow(46), TLij(2,3))},
    {94, { 5,-3,-1,-1,-1,-2,-2}, RS(TRow(47), TLij(2,3))},
    {95, { 6,-3,-2,-2,-2,-2,-1}, RS(TLij(2,3), TLij(4,6), TLij(5,6))},
    {96, { 6,-3,-2,-2,-2,-1,-2}, RS(TLij(2,3), TLij(4,5), TLij(5,6))},
    {97, { 6,-3,-2,-2,-1,-2,-2}, RS(TLij(2,3), TLij(4,5), TLij(4,6))},
    {98, { 6,-3,-2,-1,-2,-2,-2}, RS(TLij(2,3), TLij(3,4), TLij(5,6))},
    {99, { 6,-3,-1,-2,-2,-2,-2}, RS(TLij(2,3), TLij(2,4), TLij(5,6))},
};

const RawRow3 kTable3[99] = {
    { 1, { 8,-3,-3,-3,-3,-3,-3}, 1, 1},
    { 2, { 4,-1,-1,-1,-1,-1,-1}, 0, 1},
    { 3, { 4,-2,-2,-1,-1,-1,-1}, 0, 1},
    { 4, { 4,-2,-1,-2,-1,-1,-1}, 0, 1},
    { 5, { 4,-2,-1,-1,-2,-1,-1}, 0, 1},
    { 6, { 4,-2,-1,-1,-1,-2,-1}, 0, 1},
    { 7, { 4,-2,-1,-1,-1,-1,-2}, 0, 1},
    { 8, { 4,-1,-2,-2,-1,-1,-1}, 0, 2},
    { 9, { 4,-1,-2,-1,-2,-1,-1}, 0, 2},
    {10, { 4,-1,-2,-1,-1,-2,-1}, 0, 2},
    {11, { 4,-1,-2,-1,-1,-1,-2}, 0, 2},
    {12, { 4,-1,-1,-2,-2,-1,-1}, 0, 3},
    {13, { 4,-1,-1,-2,-1,-2,-1}, 0, 3},
    {14, { 4,-1,-1,-2,-1,-1,-2}, 0, 3},
    {15, { 4,-1,-1,-1,-2,-2,-1}, 0, 4},
    {16, { 4,-1,-1,-1,-2,-1,-2}, 0, 4},
    {17, { 4,-1,-1,-1,-1,-2,-2}, 0, 5},
    {18, { 5,-2,-2,-2,-1,-1,-1}, 0, 1},
    {19, { 5,-2,-2,-1,-2,-1,-1}, 0, 1},
    {20, { 5,-2,-2,-1,-1,-2,-1}, 0, 1},
    {21, { 5,-2,-2,-1,-1,-1,-2}, 0, 1},
    {22, { 5,-2,-1,-2,-2,-1,-1}, 0, 1},
    {23, { 5,-2,-1,-2,-1,-2,-1}, 0, 1},
    {24, { 5,-2,-1,-2,-1,-1,-2}, 0, 1},
    {25, { 5,-2,-1,-1,-2,-2,-1}, 0, 1},
    {26, { 5,-2,-1,-1,-2,-1,-2}, 0, 1},
    {27, { 5,-2,-1,-1,-1,-2,-2}, 0, 1},
    {28, { 5,-1,-2,-2,-2,-1,-1}, 0, 2},
    {29, { 5,-1,-2,-2,-1,-2,-1}, 0, 2},
    {30, { 5,-1,-2,-2,-1,-1,-2}, 0, 2},
    {31, { 5,-1,-2,-1,-2,-2,-1}, 0, 2},
    {32, { 5,-1,-2,-1,-2,-1,-2}, 0, 2},
    {33, { 5,-1,-2,-1,-1,-2,-2}, 0, 2},
    {34, { 5,-1,-1,-2,-2,-2,-1}, 0, 3},
    {35, { 5,-1,-1,-2,-2,-1,-2}, 0, 3},
    {36, { 5,-1,-1,-2,-1,-2,-2}, 0, 3},
    {37, { 5,-1,-1,-1,-2,-2,-2}, 0, 4},
    {38, { 7,-3,-3,-3,-2,-2,-2}, 1, 1},
    {39, { 7,-3,-3,-2,-3,-2,-2}, 1, 1},
    {40, { 7,-3,-3,-2,-2,-3,-2}, 1, 1},
    {41, { 7,-3,-3,-2,-2,-2,-3}, 1, 1},
    {42, { 7,-3,-2,-3,-3,-2,-2}, 1, 1},
    {43, { 7,-3,-2,-3,-2,-3,-2}, 1, 1},
    {44, { 7,-3,-2,-3,-2,-2,-3}, 1, 1},
    {45, { 7,-3,-2,-2,-3,-3,-2}, 1, 1},
    {46, { 7,-3,-2,-2,-3,-2,-3}, 1, 1},
    {47, { 7,-3,-2,-2,-2,-3,-3}, 1, 1},
    {48, { 7,-2,-3,-3,-3,-2,-2}, 1, 2},
    {49, { 7,-2,-3,-3,-2,-3,-2}, 1, 2},
    {50, { 7,-2,-3,-3,-2,-2,-3}, 1, 2},
    {51, { 7,-2,-3,-2,-3,-3,-2}, 1, 2},
    {52, { 7,-2,-3,-2,-3,-2,-3}, 1, 2},
    {53, { 7,-2,-3,-2,-2,-3,-3}, 1, 2},
    {54, { 7,-2,-2,-3,-3,-3,-2}, 1, 3},
    {55, { 7,-2,-2,-3,-3,-2,-3}, 1, 3},
    {56, { 7,-2,-2,-3,-2,-3,-3}, 1, 3},
    {57, { 7,-2,-2,-2,-3,-3,-3}, 1, 4},
    {58, { 6,-3,-2,-2,-2,-2,-1}, 1, 1},
    {59, { 6,-3,-2,-2,-2,-1,-2}, 1, 1},
    {60, { 6,-3,-2,-2,-1,-2,-2}, 1, 1},
    {61, { 6,-3,-2,-1,-2,-2,-2}, 1, 1},
    {62, { 6,-3,-1,-2,-2,-2,-2}, 1, 1},
    {63, { 6,-2,-3,-2,-2,-2,-1}, 1, 2},
    {64, { 6,-2,-3,-2,-2,-1,-2}, 1, 2},
    {65, { 6,-2,-3,-2,-1,-2,-2}, 1, 2},
    {66, { 6,-2,-3,-1,-2,-2,-2}, 1, 2},
    {67, { 6,-2,-2,-3,-2,-2,-1}, 1, 3},
    {68, { 6,-2,-2,-3,-2,-1,-2}, 1, 3},
    {69, { 6,-2,-2,-3,-1,-2,-2}, 1, 3},
    {70, { 6,-2,-2,-2,-3,-2,-1}, 1, 4},
    {71, { 6,-2,-2,-2,-3,-1,-2}, 1, 4},
    {72, { 6,-2,-2,-2,-2,-3,-1}, 1, 5},
    {73, { 6,-2,-2,-2,-2,-1,-3}, 1, 6},
    {74, { 6,-2,-2,-2,-1,-3,-2}, 1, 5},
    {75, { 6,-2,-2,-2,-1,-2,-3}, 1, 6},
    {76, { 6,-2,-2,-1,-3,-2,-2}, 1, 4},
    {77, { 6,-2,-2,-1,-2,-3,-2}, 1, 5},
    {78, { 6,-2,-2,-1,-2,-2,-3}, 1, 6},
    {79, { 6,-2,-1,-3,-2,-2,-2}, 1, 3},
    {80, { 6,-2,-1,-2,-3,-2,-2}, 1, 4},
    {81, { 6,-2,-1,-2,-2,-3,-2}, 1, 5},
    {82, { 6,-2,-1,-2,-2,-2,-3}, 1, 6},
    {83, { 6,-1,-3,-2,-2,-2,-2}, 1, 2},
    {84, { 6,-1,-2,-3,-2,-2,-2}, 1, 3},
    {85, { 6,-1,-2,-2,-3,-2,-2}, 1, 4},
    {86, { 6,-1,-2,-2,-2,-3,-2}, 1, 5},
    {87, { 6,-1,-2,-2,-2,-2,-3}, 1, 6},
    {88, { 5,-2,-2,-2,-2,-2,-1}, 1, 1},
    {89, { 5,-2,-2,-2,-2,-1,-2}, 1, 1},
    {90, { 5,-2,-2,-2,-1,-2,-2}, 1, 1},
    {91, { 5,-2,-2,-1,-2,-2,-2}, 1, 1},
    {92, { 5,-2,-1,-2,-2,-2,-2}, 1, 1},
    {93, { 5,-1,-2,-2,-2,-2,-2}, 1, 2},
    {94, { 3,-1,-1,-1,-1,-1, 0}, 0, 1},
    {95, { 3,-1,-1,-1,-1, 0,-1}, 0, 1},
    {96, { 3,-1,-1,-1, 0,-1,-1}, 0, 1},
    {97, { 3,-1,-1, 0,-1,-1,-1}, 0, 1},
    {98, { 3,-1, 0,-1,-1,-1,-1}, 0, 1},
    {99, { 3, 0,-1,-1,-1,-1,-1}, 0, 2},
};

}  // namespace cubics::detail
