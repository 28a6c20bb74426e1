#pragma once

// Expected census values for orders up to 8. Rows for n = 8 are only
// checked by extended runs.

namespace molscope::golden {

struct CountRow {
  int n, k;
  const char* equality;
  long isotopism, trisotopism, paratopism;
};

inline constexpr CountRow kMaxSets[] = {
    {2, 1, "1", 1, 1, 1},
    {3, 2, "1", 1, 1, 1},
    {4, 1, "3", 1, 1, 1},
    {4, 3, "1", 1, 1, 1},
    {5, 1, "50", 1, 1, 1},
    {5, 4, "6", 1, 1, 1},
    {6, 1, "9408", 22, 17, 12},
    {7, 1, "16765350", 549, 314, 141},
    {7, 2, "341880", 17, 11, 5},
    {7, 6, "120", 1, 1, 1},
    {8, 1, "532807827816", 1665394, 836595, 281633},
    {8, 2, "7832534400", 23005, 11704, 2127},
    {8, 3, "14923440", 221, 147, 38},
    {8, 7, "240", 1, 1, 1},
};

inline constexpr CountRow kAllSets[] = {
    {2, 1, "1", 1, 1, 1},
    {3, 1, "1", 1, 1, 1},
    {3, 2, "1", 1, 1, 1},
    {4, 1, "4", 2, 2, 2},
    {4, 2, "2", 1, 1, 1},
    {4, 3, "1", 1, 1, 1},
    {5, 1, "56", 2, 2, 2},
    {5, 2, "18", 2, 2, 1},
    {5, 3, "18", 1, 1, 1},
    {5, 4, "6", 1, 1, 1},
    {6, 1, "9408", 22, 17, 12},
    {7, 1, "16942080", 564, 324, 147},
    {7, 2, "342480", 20, 14, 7},
    {7, 3, "1200", 4, 3, 1},
    {7, 4, "1200", 3, 3, 1},
    {7, 5, "600", 1, 1, 1},
    {7, 6, "120", 1, 1, 1},
    {8, 1, "535281401856", 1676267, 842227, 283657},
    {8, 2, "7850589120", 23362, 11887, 2165},
    {8, 3, "14927040", 224, 149, 39},
    {8, 4, "4800", 3, 2, 1},
    {8, 5, "3600", 1, 1, 1},
    {8, 6, "1440", 1, 1, 1},
    {8, 7, "240", 1, 1, 1},
};

inline constexpr CountRow kMaxLists[] = {
    {2, 1, "1", 1, 1, 1},
    {3, 2, "1", 1, 1, 1},
    {4, 1, "3", 1, 1, 1},
    {4, 3, "2", 1, 1, 1},
    {5, 1, "50", 1, 1, 1},
    {5, 4, "36", 6, 3, 1},
    {6, 1, "9408", 22, 17, 12},
    {7, 1, "16765350", 549, 314, 141},
    {7, 2, "341880", 29, 17, 5},
    {7, 6, "14400", 120, 60, 1},
    {8, 1, "532807827816", 1665394, 836595, 281633},
    {8, 2, "7832534400", 45222, 23005, 2127},
    {8, 3, "29846880", 1217, 616, 38},
    {8, 7, "172800", 240, 120, 1},
};

inline constexpr CountRow kAllLists[] = {
    {2, 1, "1", 1, 1, 1},
    {3, 1, "1", 1, 1, 1},
    {3, 2, "1", 1, 1, 1},
    {4, 1, "4", 2, 2, 2},
    {4, 2, "2", 1, 1, 1},
    {4, 3, "2", 1, 1, 1},
    {5, 1, "56", 2, 2, 2},
    {5, 2, "18", 3, 2, 1},
    {5, 3, "36", 6, 3, 1},
    {5, 4, "36", 6, 3, 1},
    {6, 1, "9408", 22, 17, 12},
    {7, 1, "16942080", 564, 324, 147},
    {7, 2, "342480", 34, 20, 7},
    {7, 3, "2400", 20, 10, 1},
    {7, 4, "7200", 60, 30, 1},
    {7, 5, "14400", 120, 60, 1},
    {7, 6, "14400", 120, 60, 1},
    {8, 1, "535281401856", 1676267, 842227, 283657},
    {8, 2, "7850589120", 45927, 23362, 2165},
    {8, 3, "29854080", 1227, 621, 39},
    {8, 4, "28800", 40, 20, 1},
    {8, 5, "86400", 120, 60, 1},
    {8, 6, "172800", 240, 120, 1},
    {8, 7, "172800", 240, 120, 1},
};

// (n, k, #common transversals, #max disjoint, species)
struct CommonRow {
  int n, k, common, disjoint, species;
};
inline constexpr CommonRow kCommonTransversals[] = {
    {7, 2, 0, 0, 1}, {7, 2, 1, 1, 1}, {7, 2, 2, 1, 1}, {7, 2, 4, 1, 2},
    {8, 2, 0, 0, 1980}, {8, 2, 1, 1, 23}, {8, 2, 2, 1, 10}, {8, 2, 2, 2, 60},
    {8, 2, 3, 1, 1}, {8, 2, 4, 2, 16}, {8, 2, 4, 4, 26}, {8, 2, 8, 2, 1},
    {8, 2, 8, 4, 7}, {8, 2, 12, 2, 1}, {8, 2, 12, 4, 1}, {8, 2, 19, 2, 1},
    {8, 3, 0, 0, 38},
};

// (n, k, #latin square species involved, species of maximal k-MOLS)
struct InvolvementRow {
  int n, k, ls_species, species;
};
inline constexpr InvolvementRow kInvolvement[] = {
    {3, 2, 1, 1}, {4, 3, 1, 1}, {5, 4, 1, 1},
    {7, 2, 1, 2}, {7, 2, 2, 2}, {7, 2, 3, 1}, {7, 6, 1, 1},
    {8, 2, 1, 4}, {8, 2, 2, 82}, {8, 2, 3, 512}, {8, 2, 4, 1529},
    {8, 3, 1, 1}, {8, 3, 2, 6}, {8, 3, 3, 13}, {8, 3, 4, 16}, {8, 3, 5, 2},
    {8, 7, 1, 1},
};

// (n, floor(log2 theta), species)
struct Log2Row {
  int n, r, species;
};
inline constexpr Log2Row kLog2Theta[] = {
    {7, 0, 1}, {7, 1, 3}, {7, 3, 1}, {7, 9, 1},
    {8, 0, 1223}, {8, 1, 329}, {8, 2, 175}, {8, 3, 90}, {8, 4, 67}, {8, 5, 49},
    {8, 6, 31}, {8, 7, 17}, {8, 8, 15}, {8, 9, 7}, {8, 10, 4}, {8, 11, 6},
    {8, 12, 5}, {8, 13, 1}, {8, 14, 3}, {8, 15, 1}, {8, 16, 1},
};

// Proportion of species with a mate, probability that a random latin
// square has a mate, expected number of mates.
struct MateRow {
  int n;
  const char* species_with_mate;
  const char* p_mate;
  const char* e_theta;
};
inline constexpr MateRow kMateStats[] = {
    {3, "1", "1", "1"},
    {4, "1/2", "1/4", "1/2"},
    {5, "1/2", "3/28", "9/28"},
    {6, "0", "0", "0"},
    {7, "2/49", "5891/564736", "1427/70592"},
    {8, "2024/283657", "103065585/22303391744", "40888485/2787923968"},
};

}  // namespace molscope::golden
