// Generated by tools/gen_knot_table.py from the KnotInfo database. Do not edit.
#pragma once

#include <array>
#include <string_view>

namespace bridgekit {

struct TabulatedKnot {
    std::string_view name;
    std::string_view code;  // minimal-crossing diagram, "" for the unknot
    int crossing_number;
    int bridge_index;
};

inline constexpr std::array<TabulatedKnot, 250> kKnotTable{{
    {"0_1", "", 0, 1},
    {"3_1", "O1U2O3U1O2U3", 3, 2},
    {"4_1", "U1O2U3O1U4O3U2O4", 4, 2},
    {"5_1", "U1O2U3O4U5O1U2O3U4O5", 5, 2},
    {"5_2", "O1U2O3U1O4U5O2U3O5U4", 5, 2},
    {"6_1", "O1U2O3U4O2U1O5U6O4U3O6U5", 6, 2},
    {"6_2", "O1U2O3U4O5U6O2U1O6U3O4U5", 6, 2},
    {"6_3", "U1O2U3O1U4O5U2O3U6O4U5O6", 6, 2},
    {"7_1", "O1U2O3U4O5U6O7U1O2U3O4U5O6U7", 7, 2},
    {"7_2", "U1O2U3O4U5O6U7O1U2O7U6O5U4O3", 7, 2},
    {"7_3", "O1U2O3U4O5U6O7U1O2U3O4U7O6U5", 7, 2},
    {"7_4", "U1O2U3O4U5O6U7O3U2O1U4O7U6O5", 7, 2},
    {"7_5", "U1O2U3O1U4O5U6O7U2O3U7O4U5O6", 7, 2},
    {"7_6", "O1U2O3U4O5U6O7U3O2U7O6U1O4U5", 7, 2},
    {"7_7", "O1U2O3U4O5U6O4U7O2U1O7U3O6U5", 7, 2},
    {"8_1", "O1U2O3U4O5U3O2U1O6U7O8U5O4U8O7U6", 8, 2},
    {"8_2", "O1U2O3U4O5U6O7U8O2U1O8U3O4U5O6U7", 8, 2},
    {"8_3", "U1O2U3O4U5O1U6O7U8O5U4O3U2O8U7O6", 8, 2},
    {"8_4", "U1O2U3O4U5O6U7O8U4O1U2O3U8O7U6O5", 8, 2},
    {"8_5", "O1U2O3U4O5U1O2U3O6U7O8U5O4U6O7U8", 8, 3},
    {"8_6", "U1O2U3O4U5O6U7O8U2O1U8O7U4O5U6O3", 8, 2},
    {"8_7", "U1O2U3O4U5O6U7O1U2O5U8O3U4O8U6O7", 8, 2},
    {"8_8", "O1U2O3U4O5U1O2U5O6U7O8U3O4U8O7U6", 8, 2},
    {"8_9", "U1O2U3O4U5O1U6O7U8O3U4O5U2O6U7O8", 8, 2},
    {"8_10", "U1O2U3O4U5O6U7O8U4O5U6O1U2O7U8O3", 8, 3},
    {"8_11", "O1U2O3U4O5U6O7U8O2U1O8U3O6U5O4U7", 8, 2},
    {"8_12", "U1O2U3O1U4O5U6O3U2O6U7O8U5O4U8O7", 8, 2},
    {"8_13", "O1U2O3U4O5U6O7U1O2U7O8U5O4U3O6U8", 8, 2},
    {"8_14", "U1O2U3O4U5O6U4O7U8O1U2O8U7O3U6O5", 8, 2},
    {"8_15", "O1U2O3U4O5U1O2U5O6U7O8U6O4U3O7U8", 8, 3},
    {"8_16", "U1O2U3O4U5O1U2O6U4O7U8O5U6O3U7O8", 8, 3},
    {"8_17", "U1O2U3O4U5O1U6O3U4O7U8O5U2O6U7O8", 8, 3},
    {"8_18", "U1O2U3O4U5O1U6O3U7O5U8O6U2O7U4O8", 8, 3},
    {"8_19", "U1O2U3U4O5U6O7U8O4U5O6O1U2U7O8O3", 8, 3},
    {"8_20", "O1U2U3O4O5U1O2U5U6O7U8O6U4O3U7O8", 8, 3},
    {"8_21", "O1U2U3O4O5U1O2U5O6U7O8U6U4O3O7U8", 8, 3},
    {"9_1", "O1U2O3U4O5U6O7U8O9U1O2U3O4U5O6U7O8U9", 9, 2},
    {"9_2", "U1O2U3O4U5O3U2O1U6O7U8O9U4O5U9O8U7O6", 9, 2},
    {"9_3", "O1U2O3U4O5U6O7U8O9U1O2U5O4U3O6U7O8U9", 9, 2},
    {"9_4", "U1O2U3O4U5O6U7O8U9O5U4O3U2O1U6O7U8O9", 9, 2},
    {"9_5", "U1O2U3O4U5O6U7O8U9O5U4O3U2O1U6O9U8O7", 9, 2},
    {"9_6", "O1U2O3U4O5U3O2U6O7U8O9U1O4U5O6U7O8U9", 9, 2},
    {"9_7", "U1O2U3O4U5O6U7O5U2O3U4O1U8O9U6O7U9O8", 9, 2},
    {"9_8", "O1U2O3U4O5U6O7U8O9U5O6U9O4U3O2U1O8U7", 9, 2},
    {"9_9", "O1U2O3U4O5U6O7U3O2U8O9U1O4U5O6U7O8U9", 9, 2},
    {"9_10", "O1U2O3U4O5U6O7U8O9U3O2U1O4U7O6U5O8U9", 9, 2},
    {"9_11", "U1O2U3O4U5O6U2O7U8O9U7O3U4O5U6O1U9O8", 9, 2},
    {"9_12", "U1O2U3O4U5O6U7O3U2O8U9O7U6O5U4O1U8O9", 9, 2},
    {"9_13", "U1O2U3O4U5O6U7O8U9O5U2O3U4O1U6O9U8O7", 9, 2},
    {"9_14", "O1U2O3U4O5U6O7U8O4U3O2U1O8U9O6U5O9U7", 9, 2},
    {"9_15", "U1O2U3O4U5O6U4O3U2O7U8O9U7O5U6O1U9O8", 9, 2},
    {"9_16", "O1U2O3U4O5U6O4U1O2U3O7U8O9U5O6U7O8U9", 9, 3},
    {"9_17", "O1U2O3U4O5U6O7U1O2U8O4U3O8U9O6U5O9U7", 9, 2},
    {"9_18", "U1O2U3O1U4O5U6O7U8O9U2O3U7O6U5O8U9O4", 9, 2},
    {"9_19", "U1O2U3O4U5O3U6O7U8O5U4O6U2O1U9O8U7O9", 9, 2},
    {"9_20", "O1U2O3U4O5U6O2U7O8U1O9U5O6U9O4U3O7U8", 9, 2},
    {"9_21", "U1O2U3O4U5O6U2O7U8O9U7O5U4O3U6O1U9O8", 9, 2},
    {"9_22", "O1U2O3U4O5U1O6U3O2U6O7U8O9U5O4U7O8U9", 9, 3},
    {"9_23", "U1O2U3O4U5O3U6O7U8O9U4O5U9O6U2O1U7O8", 9, 2},
    {"9_24", "O1U2O3U4O5U3O6U7O8U9O2U1O9U6O7U8O4U5", 9, 3},
    {"9_25", "U1O2U3O4U5O6U7O3U2O8U6O7U8O1U9O5U4O9", 9, 3},
    {"9_26", "U1O2U3O4U5O6U7O8U2O9U4O3U9O1U8O5U6O7", 9, 2},
    {"9_27", "U1O2U3O4U5O6U4O7U2O8U9O3U6O5U7O1U8O9", 9, 2},
    {"9_28", "O1U2O3U4O2U5O6U7O5U8O9U6O7U3O4U1O8U9", 9, 3},
    {"9_29", "U1O2U3O4U5O6U7O3U2O8U6O5U9O1U8O7U4O9", 9, 3},
    {"9_30", "O1U2O3U4O5U6O7U1O2U8O6U7O8U9O4U3O9U5", 9, 3},
    {"9_31", "O1U2O3U4O5U6O7U1O8U3O9U5O6U9O4U8O2U7", 9, 2},
    {"9_32", "U1O2U3O4U5O6U2O7U4O5U8O9U6O3U7O1U9O8", 9, 3},
    {"9_33", "O1U2O3U4O5U6O4U7O2U8O6U5O9U1O8U3O7U9", 9, 3},
    {"9_34", "U1O2U3O4U5O6U7O3U8O5U9O7U2O1U6O9U4O8", 9, 3},
    {"9_35", "U1O2U3O4U5O6U7O8U9O3U2O1U6O5U4O9U8O7", 9, 3},
    {"9_36", "U1O2U3O4U5O3U6O7U8O5U4O8U9O1U2O6U7O9", 9, 3},
    {"9_37", "O1U2O3U4O5U6O7U8O2U1O8U9O4U3O9U7O6U5", 9, 3},
    {"9_38", "U1O2U3O4U5O6U7O3U4O8U9O5U2O1U6O9U8O7", 9, 3},
    {"9_39", "O1U2O3U4O5U6O7U8O9U5O2U1O6U9O4U3O8U7", 9, 3},
    {"9_40", "O1U2O3U4O5U6O2U7O8U5O9U3O7U1O6U9O4U8", 9, 3},
    {"9_41", "O1U2O3U4O5U6O2U7O8U9O4U3O7U1O6U5O9U8", 9, 3},
    {"9_42", "O1U2O3U1O4O5U6U3O2U4U7O8U9O6U5O7U8O9", 9, 3},
    {"9_43", "O1U2O3U4O5O6U7U1O2O8U6O7U8U9O4U3O9U5", 9, 3},
    {"9_44", "U1O2O3U4O5O6U7O1U2O8U6O7U8U9O4U3O9U5", 9, 3},
    {"9_45", "U1O2O3U4O5U6O7O1U2U8O6U7O8U9O4U3O9U5", 9, 3},
    {"9_46", "U1O2O3U4U5O6U7O8U2O1U8U9O4U3O9O7U6O5", 9, 3},
    {"9_47", "O1U2U3O4U5O6U7O3U8O5U9O7O2U1U6O9U4O8", 9, 3},
    {"9_48", "O1U2O3U4U5O6U7U8O2U1O8U9O4U3O9O7U6O5", 9, 3},
    {"9_49", "O1U2U3O4U5O6O2U7U8O9U4O3O7U1U6O5U9O8", 9, 3},
    {"10_1", "U1O2U3O4U5O6U7O8U9O10U2O1U10O9U8O7U6O5U4O3", 10, 2},
    {"10_2", "O1U2O3U4O2U5O6U7O8U9O10U1O4U3O5U6O7U8O9U10", 10, 2},
    {"10_3", "U1O2U3O4U5O6U7O3U2O1U8O9U10O7U6O5U4O10U9O8", 10, 2},
    {"10_4", "U1O2U3O4U5O6U7O8U9O10U4O1U2O3U10O9U8O7U6O5", 10, 2},
    {"10_5", "U1O2U3O4U5O6U7O5U8O9U10O1U2O3U6O7U4O8U9O10", 10, 2},
    {"10_6", "U1O2U3O4U5O6U7O8U9O10U2O1U10O9U4O5U6O7U8O3", 10, 2},
    {"10_7", "O1U2O3U4O5U6O7U8O9U10O2U1O10U3O8U7O6U5O4U9", 10, 2},
    {"10_8", "O1U2O3U4O5U6O7U8O9U3O2U1O10U5O6U7O8U9O4U10", 10, 2},
    {"10_9", "O1U2O3U4O5U6O2U7O8U9O10U1O4U5O6U3O7U8O9U10", 10, 2},
    {"10_10", "O1U2O3U4O5U6O7U8O9U1O2U9O10U7O6U5O4U3O8U10", 10, 2},
    {"10_11", "U1O2U3O4U5O1U6O7U8O9U10O5U4O3U2O10U7O8U9O6", 10, 2},
    {"10_12", "U1O2U3O4U5O6U7O8U9O1U2O7U6O5U10O3U4O10U8O9", 10, 2},
    {"10_13", "U1O2U3O4U5O6U4O1U7O8U9O10U6O5U10O3U2O9U8O7", 10, 2},
    {"10_14", "O1U2O3U4O5U6O7U8O9U5O4U10O2U1O10U3O6U7O8U9", 10, 2},
    {"10_15", "U1O2U3O4U2O1U5O6U7O8U9O5U10O3U4O10U6O7U8O9", 10, 2},
    {"10_16", "O1U2O3U4O5U6O7U8O2U1O9U10O8U3O6U5O4U7O10U9", 10, 2},
    {"10_17", "U1O2U3O4U5O1U6O7U8O9U2O3U4O5U10O6U7O8U9O10", 10, 2},
    {"10_18", "U1O2U3O4U5O6U7O8U4O9U10O1U2O10U8O7U6O5U9O3", 10, 2},
    {"10_19", "O1U2O3U4O5U6O7U8O9U5O10U1O2U3O8U7O6U9O4U10", 10, 2},
    {"10_20", "U1O2U3O4U5O3U2O1U6O7U8O9U10O5U4O10U7O8U9O6", 10, 2},
    {"10_21", "O1U2O3U4O5U6O7U8O9U7O10U3O2U1O4U5O6U9O8U10", 10, 2},
    {"10_22", "U1O2U3O4U5O6U7O8U9O1U2O10U8O5U6O7U4O3U10O9", 10, 2},
    {"10_23", "U1O2U3O4U5O6U7O8U9O1U4O3U2O7U10O5U6O10U8O9", 10, 2},
    {"10_24", "U1O2U3O4U5O6U7O5U4O3U8O9U2O1U10O7U6O8U9O10", 10, 2},
    {"10_25", "O1U2O3U4O5U6O7U8O9U1O4U5O6U3O2U10O8U7O10U9", 10, 2},
    {"10_26", "O1U2O3U4O5U6O7U8O9U10O4U1O2U3O10U5O8U7O6U9", 10, 2},
    {"10_27", "O1U2O3U4O5U6O7U8O9U1O2U9O10U7O4U5O6U3O8U10", 10, 2},
    {"10_28", "O1U2O3U4O5U6O7U1O2U7O8U9O10U5O4U3O6U10O9U8", 10, 2},
    {"10_29", "U1O2U3O1U4O5U6O7U8O9U5O4U10O3U2O10U7O8U9O6", 10, 2},
    {"10_30", "O1U2O3U4O5U6O7U8O9U5O4U10O2U1O10U3O8U7O6U9", 10, 2},
    {"10_31", "U1O2U3O4U2O1U5O6U7O8U9O5U10O3U4O10U6O9U8O7", 10, 2},
    {"10_32", "U1O2U3O4U5O6U7O8U4O9U10O1U2O10U6O7U8O5U9O3", 10, 2},
    {"10_33", "U1O2U3O4U5O1U6O7U8O9U4O3U2O5U10O6U9O8U7O10", 10, 2},
    {"10_34", "O1U2O3U4O5U1O2U5O6U7O8U9O10U3O4U10O9U8O7U6", 10, 2},
    {"10_35", "O1U2O3U4O2U5O6U7O8U1O9U8O7U6O5U10O4U3O10U9", 10, 2},
    {"10_36", "U1O2U3O4U5O6U7O8U9O7U6O5U4O10U2O1U8O9U10O3", 10, 2},
    {"10_37", "U1O2U3O1U4O5U6O7U2O3U7O6U8O9U10O4U5O10U9O8", 10, 2},
    {"10_38", "U1O2U3O4U5O6U7O8U6O5U4O9U10O1U2O10U8O7U9O3", 10, 2},
    {"10_39", "O1U2O3U4O5U6O7U8O9U7O6U10O2U1O10U3O4U5O8U9", 10, 2},
    {"10_40", "U1O2U3O4U5O6U7O8U9O1U2O9U8O5U10O3U4O10U6O7", 10, 2},
    {"10_41", "O1U2O3U4O5U6O7U8O6U5O9U10O2U1O10U3O8U7O4U9", 10, 2},
    {"10_42", "O1U2O3U4O5U6O7U1O2U7O8U9O10U5O4U10O9U3O6U8", 10, 2},
    {"10_43", "U1O2U3O1U4O5U6O7U2O3U8O9U7O6U10O4U5O10U9O8", 10, 2},
    {"10_44", "O1U2O3U4O5U6O7U8O6U9O4U10O2U1O10U3O9U7O8U5", 10, 2},
    {"10_45", "U1O2U3O1U4O5U6O7U8O3U2O4U9O6U10O8U7O10U5O9", 10, 2},
    {"10_46", "O1U2O3U4O5U6O7U3O4U5O8U9O10U1O2U7O6U8O9U10", 10, 3},
    {"10_47", "U1O2U3O4U5O6U7O1U2O3U4O5U8O9U10O8U6O7U9O10", 10, 3},
    {"10_48", "U1O2U3O4U5O1U2O3U6O7U8O9U4O5U10O6U7O8U9O10", 10, 3},
    {"10_49", "O1U2O3U4O5U1O2U5O6U7O8U9O10U6O4U3O7U8O9U10", 10, 3},
    {"10_50", "O1U2O3U4O5U6O7U8O9U1O10U5O8U7O6U9O2U3O4U10", 10, 3},
    {"10_51", "U1O2U3O4U5O6U7O8U9O10U4O7U6O5U8O1U2O9U10O3", 10, 3},
    {"10_52", "O1U2O3U4O5U6O7U8O9U5O10U1O8U7O6U9O2U3O4U10", 10, 3},
    {"10_53", "O1U2O3U4O5U1O2U5O6U7O8U9O10U6O4U3O9U8O7U10", 10, 3},
    {"10_54", "U1O2U3O4U5O6U7O8U4O5U6O9U10O1U2O10U9O7U8O3", 10, 3},
    {"10_55", "U1O2U3O4U5O6U7O1U2O7U6O5U8O9U10O8U4O3U9O10", 10, 3},
    {"10_56", "U1O2U3O4U5O6U7O8U4O5U6O9U10O1U2O10U8O7U9O3", 10, 3},
    {"10_57", "O1U2O3U1O4U5O6U7O5U8O9U6O7U10O2U3O8U9O10U4", 10, 3},
    {"10_58", "U1O2U3O4U5O6U7O5U4O8U9O7U6O10U2O1U10O9U8O3", 10, 3},
    {"10_59", "O1U2O3U1O4U5O6U7O5U8O9U10O7U6O8U3O2U9O10U4", 10, 3},
    {"10_60", "U1O2U3O4U5O6U4O7U8O9U6O5U7O10U2O1U9O8U10O3", 10, 3},
    {"10_61", "O1U2O3U4O5U6O7U1O2U8O9U10O6U5O4U3O8U9O10U7", 10, 3},
    {"10_62", "U1O2U3O4U5O6U7O8U9O1U2O5U6O7U10O3U4O10U8O9", 10, 3},
    {"10_63", "O1U2O3U4O5U6O7U1O2U7O8U9O10U8O6U5O4U3O9U10", 10, 3},
    {"10_64", "U1O2U3O4U5O6U7O8U9O1U2O10U6O7U8O3U4O5U10O9", 10, 3},
    {"10_65", "O1U2O3U4O5U6O7U1O2U7O8U9O10U5O4U3O6U8O9U10", 10, 3},
    {"10_66", "O1U2O3U4O5U6O7U8O4U1O2U3O9U7O8U9O10U5O6U10", 10, 3},
    {"10_67", "O1U2O3U4O5U6O7U8O9U7O6U10O2U1O10U5O4U3O8U9", 10, 3},
    {"10_68", "O1U2O3U4O5U6O7U8O9U1O2U9O10U5O4U3O8U7O6U10", 10, 3},
    {"10_69", "U1O2U3O4U5O1U6O7U8O6U9O3U2O9U10O5U4O10U7O8", 10, 3},
    {"10_70", "U1O2U3O4U5O6U7O8U9O7U4O5U6O10U2O1U10O9U8O3", 10, 3},
    {"10_71", "O1U2O3U1O4U5O2U3O6U7O8U4O5U8O9U10O7U6O10U9", 10, 3},
    {"10_72", "U1O2U3O4U5O6U7O8U9O7U4O5U6O10U2O1U8O9U10O3", 10, 3},
    {"10_73", "U1O2U3O4U5O6U4O7U8O9U7O5U6O10U2O1U9O8U10O3", 10, 3},
    {"10_74", "O1U2O3U4O5U6O7U8O9U10O2U1O10U3O6U5O4U9O8U7", 10, 3},
    {"10_75", "O1U2O3U4O5U6O4U7O8U9O7U10O2U1O10U3O6U5O9U8", 10, 3},
    {"10_76", "U1O2U3O4U5O6U7O8U9O10U2O1U8O9U10O7U4O5U6O3", 10, 3},
    {"10_77", "O1U2O3U4O5U1O2U5O6U7O8U9O10U3O4U10O9U6O7U8", 10, 3},
    {"10_78", "O1U2O3U4O5U1O2U5O6U7O8U6O9U10O4U3O10U9O7U8", 10, 3},
    {"10_79", "U1O2U3O4U5O1U2O3U6O7U4O5U8O9U10O6U7O8U9O10", 10, 3},
    {"10_80", "O1U2O3U4O5U6O7U8O4U3O9U7O8U9O10U1O2U5O6U10", 10, 3},
    {"10_81", "U1O2U3O1U4O5U2O3U6O7U5O4U8O9U7O6U10O8U9O10", 10, 3},
    {"10_82", "O1U2O3U4O5U6O7U8O2U9O10U1O8U3O9U10O4U5O6U7", 10, 3},
    {"10_83", "U1O2U3O4U5O1U2O6U4O7U8O9U10O5U6O3U7O10U9O8", 10, 3},
    {"10_84", "U1O2U3O1U4O5U6O7U2O3U7O8U5O9U10O6U8O4U9O10", 10, 3},
    {"10_85", "U1O2U3O4U5O1U2O6U4O7U8O9U10O5U6O3U7O8U9O10", 10, 3},
    {"10_86", "U1O2U3O4U5O1U2O6U4O7U8O9U10O3U6O5U7O10U9O8", 10, 3},
    {"10_87", "U1O2U3O4U5O1U6O7U8O6U2O9U4O10U7O8U10O3U9O5", 10, 3},
    {"10_88", "U1O2U3O1U4O5U6O3U2O7U8O4U9O6U10O8U7O10U5O9", 10, 3},
    {"10_89", "U1O2U3O4U5O6U2O1U7O8U6O9U4O10U8O7U10O5U9O3", 10, 3},
    {"10_90", "U1O2U3O4U5O6U7O8U2O3U9O10U4O1U8O9U10O7U6O5", 10, 3},
    {"10_91", "U1O2U3O4U5O1U6O7U8O3U9O10U4O6U7O8U2O9U10O5", 10, 3},
    {"10_92", "O1U2O3U4O5U6O7U1O2U7O8U5O4U9O10U8O6U3O9U10", 10, 3},
    {"10_93", "U1O2U3O4U5O6U7O8U9O5U4O3U10O7U8O1U2O10U6O9", 10, 3},
    {"10_94", "O1U2O3U4O5U6O7U1O8U3O4U9O10U5O2U8O9U10O6U7", 10, 3},
    {"10_95", "U1O2U3O4U5O6U7O8U9O10U4O7U8O1U2O9U6O5U10O3", 10, 3},
    {"10_96", "O1U2O3U4O5U6O7U8O4U3O9U7O6U10O2U1O10U9O8U5", 10, 3},
    {"10_97", "U1O2U3O4U5O6U7O5U8O9U2O7U6O1U10O8U4O3U9O10", 10, 3},
    {"10_98", "O1U2O3U4O5U6O7U8O9U1O10U5O6U9O2U3O8U7O4U10", 10, 3},
    {"10_99", "U1O2U3O4U5O1U6O7U2O3U8O9U10O6U7O8U4O5U9O10", 10, 3},
    {"10_100", "U1O2U3O4U5O6U7O1U2O8U6O9U10O7U8O3U4O5U9O10", 10, 3},
    {"10_101", "U1O2U3O4U5O6U7O8U9O5U2O1U6O9U10O3U4O10U8O7", 10, 3},
    {"10_102", "U1O2U3O4U5O6U7O8U2O9U4O5U10O1U8O7U6O3U9O10", 10, 3},
    {"10_103", "U1O2U3O4U5O6U7O1U2O8U6O9U10O7U8O5U4O3U9O10", 10, 3},
    {"10_104", "U1O2U3O4U5O1U6O7U8O9U4O5U10O6U2O3U7O8U9O10", 10, 3},
    {"10_105", "O1U2O3U4O5U6O7U8O9U1O2U9O6U10O4U3O8U7O10U5", 10, 3},
    {"10_106", "O1U2O3U4O5U6O7U8O2U3O9U7O10U1O4U5O6U9O8U10", 10, 3},
    {"10_107", "O1U2O3U4O5U6O7U8O9U1O2U9O10U7O4U3O8U10O6U5", 10, 3},
    {"10_108", "O1U2O3U4O5U6O7U8O2U3O9U5O10U1O8U7O6U9O4U10", 10, 3},
    {"10_109", "U1O2U3O4U5O1U6O7U2O3U8O9U4O5U10O6U7O8U9O10", 10, 3},
    {"10_110", "O1U2O3U4O5U6O7U8O4U3O9U10O2U1O6U7O10U9O8U5", 10, 3},
    {"10_111", "O1U2O3U4O5U6O7U1O2U5O8U9O10U7O6U8O4U3O9U10", 10, 3},
    {"10_112", "U1O2U3O4U5O6U7O8U2O9U4O10U8O1U9O3U10O5U6O7", 10, 3},
    {"10_113", "U1O2U3O4U5O6U2O7U8O1U6O9U4O10U7O8U10O3U9O5", 10, 3},
    {"10_114", "O1U2O3U4O5U6O7U1O8U3O9U7O6U5O10U8O2U9O4U10", 10, 3},
    {"10_115", "U1O2U3O4U5O1U6O7U4O3U8O9U2O5U10O6U9O8U7O10", 10, 3},
    {"10_116", "U1O2U3O4U5O6U7O1U8O3U6O9U10O7U2O8U4O5U9O10", 10, 3},
    {"10_117", "O1U2O3U4O5U6O7U3O8U9O4U10O6U1O2U7O10U5O9U8", 10, 3},
    {"10_118", "U1O2U3O4U5O1U6O3U7O8U4O9U10O6U2O7U8O5U9O10", 10, 3},
    {"10_119", "O1U2O3U4O5U6O2U7O8U3O9U10O4U8O7U1O6U9O10U5", 10, 3},
    {"10_120", "U1O2U3O4U5O6U7O3U2O8U6O9U10O7U8O1U4O10U9O5", 10, 3},
    {"10_121", "U1O2U3O4U5O1U6O7U4O8U2O6U9O10U7O3U8O5U10O9", 10, 3},
    {"10_122", "O1U2O3U4O5U6O7U1O8U3O9U5O10U8O2U7O6U9O4U10", 10, 3},
    {"10_123", "U1O2U3O4U5O6U7O1U8O3U9O5U10O7U2O8U4O9U6O10", 10, 3},
    {"10_124", "O1U2O3U4O5U6O7U1O2U3O4U5U8O9U10O8O6U7U9O10", 10, 3},
    {"10_125", "O1U2O3U1O4U5O2U3U6O7U8O9O5U4U10O6U7O8U9O10", 10, 3},
    {"10_126", "O1U2U3O4O5U1O2U5U6O7U8O9U10O6U4O3U7O8U9O10", 10, 3},
    {"10_127", "O1U2U3O4O5U1O2U5O6U7O8U9O10U6U4O3O7U8O9U10", 10, 3},
    {"10_128", "O1U2O3U4O5U6O7U1O4U3O2U5U8O9U10O8O6U7U9O10", 10, 3},
    {"10_129", "O1U2O3U4O5U1O2U5U6O7U8O9U10O6O4U3U9O8U7O10", 10, 3},
    {"10_130", "O1U2U3O4O5U1O2U5U6O7U8O9U10O6U4O3U9O8U7O10", 10, 3},
    {"10_131", "O1U2U3O4O5U1O2U5O6U7O8U9O10U6U4O3O9U8O7U10", 10, 3},
    {"10_132", "O1U2O3U4O5U6O7U1O2U7O6U5U8O9U10O8O4U3U9O10", 10, 3},
    {"10_133", "U1O2U3O1U4U5O6U7O5U8O9U6O7O10U2O3O8U9U10O4", 10, 3},
    {"10_134", "U1O2U3O1U4U5O6U7O5O8U9U6O7O10U2O3U8O9U10O4", 10, 3},
    {"10_135", "O1U2O3U1O4U5O6U7O5O8U9U6O7U10O2U3U8O9O10U4", 10, 3},
    {"10_136", "U1O2U3O1U4U5O6U7O5U8U9O10O7U6O8O3U2O9U10O4", 10, 3},
    {"10_137", "O1U2U3O4U5O6U4U7O8U9O7U10O2U1O9U8O10O3U6O5", 10, 3},
    {"10_138", "O1U2U3O4U5O6U4O7U8O9U7O10O2U1U9O8U10O3U6O5", 10, 3},
    {"10_139", "O1U2U3O4O5U6O7U8O9U1O2U5O6U7U10O3U4O10O8U9", 10, 3},
    {"10_140", "O1U2O3U4O5O6U7O8U9U3O4U5O10U1U8O7U6O9O2U10", 10, 3},
    {"10_141", "U1O2U3O4O5U6O7U8U4O1U2O3O9U7O8U9O10U5O6U10", 10, 3},
    {"10_142", "O1U2U3O4U5O6U7O8U9O3U4O5O10U1U8O7U6O9O2U10", 10, 3},
    {"10_143", "U1O2U3O4U5O6O7U8U4O1U2O3O9U7O8U9U10O5U6O10", 10, 3},
    {"10_144", "O1U2O3U4O5U6O7U1O2U7U8O9U10U5O4U3O6O8U9O10", 10, 3},
    {"10_145", "O1U2O3U4U5O6U7O5O8U9O2O7U6U1O10U8O4U3O9U10", 10, 3},
    {"10_146", "O1U2U3O4U5O6U7O8U4O3U9O7U6U1O10O9U8O5O2U10", 10, 3},
    {"10_147", "U1O2O3U4U5O6U2O7U8O1U6U9O4O10U7O8U10U3O9O5", 10, 3},
    {"10_148", "U1O2U3O4U5O6O7U8U4O3O9U7O8U9U10O1U2O5U6O10", 10, 3},
    {"10_149", "O1U2U3O4O5U6O7U8U4O3O9U7O8U9O10U1O2U5O6U10", 10, 3},
    {"10_150", "O1U2O3U4O5U3U6O7U8O6O9U10U7O8O2U1O10U9O4U5", 10, 3},
    {"10_151", "U1O2U3O4U5O3U6O7U8O6O9U10U7O8U2O1O10U9U4O5", 10, 3},
    {"10_152", "O1U2O3U4O5U1O2U3U6O7U8O9U10O6U7O8O4U5U9O10", 10, 3},
    {"10_153", "U1O2O3U4U5O6O7U8O4U3O9U7O8U9U10O1U2O5U6O10", 10, 3},
    {"10_154", "O1U2O3U4O5U3U6O7U8O6U9O10U7O8O2U1U10O9O4U5", 10, 3},
    {"10_155", "O1U2O3U4O5O6U7U8O9U1O2U3O10U5O8U9O4U10U6O7", 10, 3},
    {"10_156", "O1U2O3U4O5U6O7U3U8O9O10U1O6U5U9O8O4U7O2U10", 10, 3},
    {"10_157", "U1O2O3U4O5U6U2O7U8U3O4U9U10O1U7O8O9U5O6O10", 10, 3},
    {"10_158", "U1U2O3O4U5O6U7U3O8U9U4O5U10O1O9U8O2O7U6O10", 10, 3},
    {"10_159", "U1O2U3O4O5U6O7O8U2O9U4O10U8O1U9O3U10U5O6U7", 10, 3},
    {"10_160", "O1U2U3O4U5O6U7O3U8O9O10U1U6O5U9O8U4O7O2U10", 10, 3},
    {"10_161", "O1U2U3O4U5O6U7O3O8U9O10U1U6O5O9U8U4O7O2U10", 10, 3},
    {"10_162", "U1O2U3U4O5O6U7O8U2O9O4U5U10O1U8O7U6O3U9O10", 10, 3},
    {"10_163", "O1U2O3U4U5O6U7U1O8U3O9O7U6O5O10U8O2U9O4U10", 10, 3},
    {"10_164", "U1O2O3U4U5O6U7O8O4U9U2O1U6O10U8U3O9O5U10O7", 10, 3},
    {"10_165", "O1U2O3O4U5U6O2U1O7U8O9U3O6U7O10U9U4O5O8U10", 10, 3},
}};

}  // namespace bridgekit
