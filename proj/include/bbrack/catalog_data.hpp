// Embedded diagram catalog: PD codes for the unknot(s), prime knots up to
// eight crossings, prime links up to seven crossings (Knot Atlas
// conventions), and the Square and Granny composite knots.
#pragma once
#include <array>
#include <string_view>

namespace bbrack {

struct CatalogEntry { std::string_view name; std::string_view pd; };

inline constexpr std::array<CatalogEntry, 57> kCatalog{{
    CatalogEntry{"Unknot", "U"},
    CatalogEntry{"U2", "U U"},
    CatalogEntry{"3_1", "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]"},
    CatalogEntry{"4_1", "X[6,1,7,2] X[2,5,3,6] X[8,4,1,3] X[4,8,5,7]"},
    CatalogEntry{"5_1", "X[6,2,7,1] X[2,8,3,7] X[8,4,9,3] X[4,10,5,9] X[10,6,1,5]"},
    CatalogEntry{"5_2", "X[6,2,7,1] X[2,8,3,7] X[10,4,1,3] X[4,10,5,9] X[8,6,9,5]"},
    CatalogEntry{"6_1", "X[1,9,2,8] X[7,3,8,2] X[3,12,4,1] X[11,4,12,5] X[5,10,6,11] X[9,6,10,7]"},
    CatalogEntry{"6_2", "X[1,9,2,8] X[7,3,8,2] X[9,6,10,7] X[3,10,4,11] X[11,4,12,5] X[5,12,6,1]"},
    CatalogEntry{"6_3", "X[6,2,7,1] X[2,8,3,7] X[12,4,1,3] X[8,11,9,12] X[4,9,5,10] X[10,5,11,6]"},
    CatalogEntry{"7_1", "X[8,2,9,1] X[2,10,3,9] X[10,4,11,3] X[4,12,5,11] X[12,6,13,5] X[6,14,7,13] X[14,8,1,7]"},
    CatalogEntry{"7_2", "X[1,8,2,9] X[9,2,10,3] X[3,14,4,1] X[13,4,14,5] X[5,12,6,13] X[11,6,12,7] X[7,10,8,11]"},
    CatalogEntry{"7_3", "X[1,11,2,10] X[9,3,10,2] X[3,9,4,8] X[7,1,8,14] X[13,7,14,6] X[5,13,6,12] X[11,5,12,4]"},
    CatalogEntry{"7_4", "X[1,11,2,10] X[9,3,10,2] X[3,9,4,8] X[11,5,12,4] X[7,13,8,12] X[13,7,14,6] X[5,1,6,14]"},
    CatalogEntry{"7_5", "X[1,8,2,9] X[9,2,10,3] X[7,10,8,11] X[11,6,12,7] X[3,12,4,13] X[13,4,14,5] X[5,14,6,1]"},
    CatalogEntry{"7_6", "X[1,6,2,7] X[7,2,8,3] X[3,14,4,1] X[13,9,14,8] X[9,13,10,12] X[11,4,12,5] X[5,10,6,11]"},
    CatalogEntry{"7_7", "X[1,11,2,10] X[9,3,10,2] X[11,8,12,9] X[3,12,4,13] X[7,4,8,5] X[13,7,14,6] X[5,1,6,14]"},
    CatalogEntry{"8_1", "X[1,11,2,10] X[9,3,10,2] X[3,16,4,1] X[15,4,16,5] X[5,14,6,15] X[13,6,14,7] X[7,12,8,13] X[11,8,12,9]"},
    CatalogEntry{"8_2", "X[1,11,2,10] X[9,3,10,2] X[11,8,12,9] X[3,12,4,13] X[13,4,14,5] X[5,14,6,15] X[15,6,16,7] X[7,16,8,1]"},
    CatalogEntry{"8_3", "X[12,1,13,2] X[2,11,3,12] X[10,3,11,4] X[4,9,5,10] X[16,6,1,5] X[6,16,7,15] X[14,8,15,7] X[8,14,9,13]"},
    CatalogEntry{"8_4", "X[1,10,2,11] X[11,2,12,3] X[3,12,4,13] X[9,4,10,5] X[13,9,14,8] X[7,15,8,14] X[15,7,16,6] X[5,1,6,16]"},
    CatalogEntry{"8_5", "X[6,2,7,1] X[2,8,3,7] X[8,4,9,3] X[16,12,1,11] X[10,16,11,15] X[14,10,15,9] X[12,5,13,6] X[4,13,5,14]"},
    CatalogEntry{"8_6", "X[1,11,2,10] X[9,3,10,2] X[11,8,12,9] X[7,12,8,13] X[13,6,14,7] X[3,14,4,15] X[15,4,16,5] X[5,16,6,1]"},
    CatalogEntry{"8_7", "X[1,8,2,9] X[9,2,10,3] X[3,16,4,1] X[15,11,16,10] X[11,5,12,4] X[5,13,6,12] X[13,7,14,6] X[7,15,8,14]"},
    CatalogEntry{"8_8", "X[1,6,2,7] X[7,2,8,3] X[3,16,4,1] X[15,9,16,8] X[9,15,10,14] X[13,11,14,10] X[11,5,12,4] X[5,13,6,12]"},
    CatalogEntry{"8_9", "X[8,2,9,1] X[2,10,3,9] X[10,4,11,3] X[16,12,1,11] X[4,15,5,16] X[12,5,13,6] X[6,13,7,14] X[14,7,15,8]"},
    CatalogEntry{"8_10", "X[12,2,13,1] X[2,14,3,13] X[14,4,15,3] X[4,7,5,8] X[8,16,9,15] X[16,10,1,9] X[10,5,11,6] X[6,11,7,12]"},
    CatalogEntry{"8_11", "X[1,11,2,10] X[9,3,10,2] X[3,16,4,1] X[15,8,16,9] X[7,14,8,15] X[13,4,14,5] X[5,12,6,13] X[11,6,12,7]"},
    CatalogEntry{"8_12", "X[12,1,13,2] X[2,11,3,12] X[16,4,1,3] X[4,16,5,15] X[10,5,11,6] X[6,9,7,10] X[14,8,15,7] X[8,14,9,13]"},
    CatalogEntry{"8_13", "X[1,10,2,11] X[11,2,12,3] X[9,12,10,13] X[3,9,4,8] X[13,5,14,4] X[7,15,8,14] X[15,7,16,6] X[5,1,6,16]"},
    CatalogEntry{"8_14", "X[1,13,2,12] X[11,3,12,2] X[13,10,14,11] X[3,14,4,15] X[9,4,10,5] X[5,8,6,9] X[15,6,16,7] X[7,16,8,1]"},
    CatalogEntry{"8_15", "X[12,1,13,2] X[2,11,3,12] X[4,15,5,16] X[16,5,1,6] X[6,3,7,4] X[8,13,9,14] X[14,9,15,10] X[10,7,11,8]"},
    CatalogEntry{"8_16", "X[1,12,2,13] X[13,2,14,3] X[7,15,8,14] X[3,8,4,9] X[9,4,10,5] X[15,11,16,10] X[5,16,6,1] X[11,7,12,6]"},
    CatalogEntry{"8_17", "X[12,2,13,1] X[2,14,3,13] X[14,7,15,8] X[8,4,9,3] X[4,15,5,16] X[16,10,1,9] X[10,5,11,6] X[6,11,7,12]"},
    CatalogEntry{"8_18", "X[12,2,13,1] X[2,7,3,8] X[8,14,9,13] X[14,3,15,4] X[4,10,5,9] X[10,15,11,16] X[16,6,1,5] X[6,11,7,12]"},
    CatalogEntry{"8_19", "X[6,2,7,1] X[2,8,3,7] X[8,4,9,3] X[16,12,1,11] X[10,16,11,15] X[14,10,15,9] X[5,13,6,12] X[13,5,14,4]"},
    CatalogEntry{"8_20", "X[6,2,7,1] X[2,8,3,7] X[8,4,9,3] X[11,16,12,1] X[15,10,16,11] X[9,14,10,15] X[12,5,13,6] X[4,13,5,14]"},
    CatalogEntry{"8_21", "X[1,12,2,13] X[13,2,14,3] X[3,14,4,15] X[4,7,5,8] X[8,16,9,15] X[16,10,1,9] X[10,5,11,6] X[6,11,7,12]"},
    CatalogEntry{"Square", "X[3,1,4,12] X[5,3,6,2] X[1,5,2,4] X[6,9,7,10] X[8,11,9,12] X[10,7,11,8]"},
    CatalogEntry{"Granny", "X[3,1,4,12] X[5,3,6,2] X[1,5,2,4] X[9,7,10,6] X[11,9,12,8] X[7,11,8,10]"},
    CatalogEntry{"L2a1", "X[1,3,2,4] X[3,1,4,2]"},
    CatalogEntry{"L4a1", "X[1,8,2,7] X[6,3,7,2] X[3,6,4,5] X[8,1,5,4]"},
    CatalogEntry{"L5a1", "X[1,5,2,6] X[6,2,7,3] X[10,7,5,8] X[3,10,4,9] X[8,1,9,4]"},
    CatalogEntry{"L6a1", "X[1,12,2,11] X[10,3,11,2] X[12,9,5,10] X[8,5,9,6] X[3,8,4,7] X[6,1,7,4]"},
    CatalogEntry{"L6a2", "X[7,2,8,1] X[2,9,3,8] X[9,4,10,3] X[6,11,1,10] X[11,6,12,5] X[4,7,5,12]"},
    CatalogEntry{"L6a3", "X[7,2,8,1] X[2,9,3,8] X[9,4,10,3] X[4,11,5,10] X[11,6,12,5] X[6,7,1,12]"},
    CatalogEntry{"L6a4", "X[5,2,6,1] X[2,9,3,10] X[10,7,11,6] X[7,3,8,4] X[4,12,1,11] X[12,8,9,5]"},
    CatalogEntry{"L6a5", "X[1,8,2,7] X[6,3,7,2] X[9,1,10,4] X[3,11,4,10] X[8,9,5,12] X[11,6,12,5]"},
    CatalogEntry{"L6n1", "X[5,2,6,1] X[9,3,10,2] X[10,7,11,6] X[3,8,4,7] X[4,12,1,11] X[8,9,5,12]"},
    CatalogEntry{"L7a1", "X[1,6,2,7] X[7,2,8,3] X[3,8,4,9] X[11,1,12,10] X[9,13,10,12] X[5,14,6,11] X[13,4,14,5]"},
    CatalogEntry{"L7a2", "X[6,2,7,1] X[2,8,3,7] X[10,4,1,3] X[11,6,12,5] X[4,13,5,12] X[8,11,9,14] X[13,10,14,9]"},
    CatalogEntry{"L7a3", "X[1,5,2,6] X[6,2,7,3] X[14,7,5,8] X[8,13,9,14] X[12,9,13,10] X[3,12,4,11] X[10,1,11,4]"},
    CatalogEntry{"L7a4", "X[1,6,2,7] X[7,2,8,3] X[11,9,12,8] X[3,12,4,13] X[9,5,10,4] X[13,10,14,1] X[5,11,6,14]"},
    CatalogEntry{"L7a5", "X[1,7,2,8] X[8,2,9,3] X[3,9,4,10] X[10,4,11,5] X[14,11,7,12] X[5,14,6,13] X[12,1,13,6]"},
    CatalogEntry{"L7a6", "X[13,1,14,2] X[2,12,3,13] X[11,3,12,4] X[8,10,1,11] X[4,7,5,8] X[9,6,10,5] X[6,9,7,14]"},
    CatalogEntry{"L7a7", "X[1,5,2,6] X[6,2,7,3] X[11,1,12,4] X[3,13,4,12] X[8,11,9,14] X[13,10,14,9] X[10,7,5,8]"},
    CatalogEntry{"L7n1", "X[1,6,2,7] X[7,2,8,3] X[3,8,4,9] X[11,1,12,10] X[9,13,10,12] X[14,6,11,5] X[4,14,5,13]"},
    CatalogEntry{"L7n2", "X[1,5,2,6] X[6,2,7,3] X[10,1,11,4] X[3,12,4,11] X[9,5,10,14] X[13,9,14,8] X[7,13,8,12]"},
}};

}  // namespace bbrack
