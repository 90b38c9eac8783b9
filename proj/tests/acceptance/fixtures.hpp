#pragma once

// Reference tables. Unions use the --maxima syntax; "n" stands for the point
// count of the whole Grassmannian.

#include <string>
#include <vector>

namespace fixtures {

struct UnionRow {
  const char* maxima;
  int span;
  int krull;
  const char* mset;  // "" when not listed
  const char* points;
  bool maximal;
};

inline const std::vector<UnionRow> g25 = {
    {"empty", 0, -1, "", "0", true},
    {"1,2", 1, 0, "1", "1", true},
    {"1,3", 2, 1, "2", "q+1", true},
    {"1,4", 3, 2, "3", "q^2+q+1", true},
    {"1,5", 4, 3, "4", "q^3+q^2+q+1", true},
    {"2,3", 3, 2, "1,2", "q^2+q+1", true},
    {"1,4;2,3", 4, 2, "1,3", "2q^2+q+1", false},
    {"1,5;2,3", 5, 3, "1,4", "q^3+2q^2+q+1", true},
    {"2,4", 5, 3, "2,3", "q^3+2q^2+q+1", true},
    {"1,5;2,4", 6, 3, "2,4", "2q^3+2q^2+q+1", false},
    {"2,5", 7, 4, "3,4", "q^4+2q^3+2q^2+q+1", true},
    {"3,4", 6, 4, "1,2,3", "q^4+q^3+2q^2+q+1", true},
    {"1,5;3,4", 7, 4, "1,2,4", "q^4+2q^3+2q^2+q+1", true},
    {"2,5;3,4", 8, 4, "1,3,4", "2q^4+2q^3+2q^2+q+1", true},
    {"3,5", 9, 5, "2,3,4", "q^5+2q^4+2q^3+2q^2+q+1", true},
    {"4,5", 10, 6, "1,2,3,4", "q^6+q^5+2q^4+2q^3+2q^2+q+1", true},
};

inline const std::vector<UnionRow> g26 = {
    {"empty", 0, -1, "", "0", true},
    {"1,2", 1, 0, "1", "1", true},
    {"1,3", 2, 1, "2", "q+1", true},
    {"1,4", 3, 2, "3", "q^2+q+1", true},
    {"1,5", 4, 3, "4", "q^3+q^2+q+1", true},
    {"1,6", 5, 4, "5", "q^4+q^3+q^2+q+1", true},
    {"2,3", 3, 2, "1,2", "q^2+q+1", true},
    {"1,4;2,3", 4, 2, "1,3", "2q^2+q+1", false},
    {"1,5;2,3", 5, 3, "1,4", "q^3+2q^2+q+1", false},
    {"1,6;2,3", 6, 4, "1,5", "q^4+q^3+2q^2+q+1", true},
    {"2,4", 5, 3, "2,3", "q^3+2q^2+q+1", false},
    {"1,5;2,4", 6, 3, "2,4", "2q^3+2q^2+q+1", false},
    {"1,6;2,4", 7, 4, "2,5", "q^4+2q^3+2q^2+q+1", true},
    {"2,5", 7, 4, "3,4", "q^4+2q^3+2q^2+q+1", true},
    {"1,6;2,5", 8, 4, "3,5", "2q^4+2q^3+2q^2+q+1", true},
    {"2,6", 9, 5, "4,5", "q^5+2q^4+2q^3+2q^2+q+1", true},
    {"3,4", 6, 4, "1,2,3", "q^4+q^3+2q^2+q+1", true},
    {"1,5;3,4", 7, 4, "1,2,4", "q^4+2q^3+2q^2+q+1", true},
    {"1,6;3,4", 8, 4, "1,2,5", "2q^4+2q^3+2q^2+q+1", true},
    {"2,5;3,4", 8, 4, "1,3,4", "2q^4+2q^3+2q^2+q+1", true},
    {"1,6;2,5;3,4", 9, 4, "1,3,5", "3q^4+2q^3+2q^2+q+1", false},
    {"2,6;3,4", 10, 5, "1,4,5", "q^5+3q^4+2q^3+2q^2+q+1", false},
    {"3,5", 9, 5, "2,3,4", "q^5+2q^4+2q^3+2q^2+q+1", true},
    {"1,6;3,5", 10, 5, "2,3,5", "q^5+3q^4+2q^3+2q^2+q+1", false},
    {"2,6;3,5", 11, 5, "2,4,5", "2q^5+3q^4+2q^3+2q^2+q+1", false},
    {"3,6", 12, 6, "3,4,5", "q^6+2q^5+3q^4+2q^3+2q^2+q+1", true},
    {"4,5", 10, 6, "1,2,3,4", "q^6+q^5+2q^4+2q^3+2q^2+q+1", true},
    {"1,6;4,5", 11, 6, "1,2,3,5", "q^6+q^5+3q^4+2q^3+2q^2+q+1", true},
    {"2,6;4,5", 12, 6, "1,2,4,5", "q^6+2q^5+3q^4+2q^3+2q^2+q+1", true},
    {"3,6;4,5", 13, 6, "1,3,4,5", "2q^6+2q^5+3q^4+2q^3+2q^2+q+1", true},
    {"4,6", 14, 7, "2,3,4,5", "q^7+2q^6+2q^5+3q^4+2q^3+2q^2+q+1", true},
    {"5,6", 15, 8, "1,2,3,4,5", "n", true},
};

// Partial listing.
inline const std::vector<UnionRow> g36 = {
    {"empty", 0, -1, "", "0", true},
    {"1,2,3", 1, 0, "", "1", true},
    {"1,2,4", 2, 1, "", "q+1", true},
    {"1,2,5", 3, 2, "", "q^2+q+1", true},
    {"1,2,6", 4, 3, "", "q^3+q^2+q+1", true},
    {"1,3,4", 3, 2, "", "q^2+q+1", true},
    {"1,3,5", 5, 3, "", "q^3+2q^2+q+1", true},
    {"1,3,6", 7, 4, "", "q^4+2q^3+2q^2+q+1", true},
    {"1,4,5", 6, 4, "", "q^4+q^3+2q^2+q+1", true},
    {"1,4,6", 9, 5, "", "q^5+2q^4+2q^3+2q^2+q+1", true},
    {"1,5,6", 10, 6, "", "q^6+q^5+2q^4+2q^3+2q^2+q+1", true},
    {"2,3,4", 4, 3, "", "q^3+q^2+q+1", true},
    {"2,3,5", 7, 4, "", "q^4+2q^3+2q^2+q+1", true},
    {"2,3,6", 10, 5, "", "q^5+2q^4+3q^3+2q^2+q+1", false},
    {"2,4,5", 9, 5, "", "q^5+2q^4+2q^3+2q^2+q+1", true},
    {"2,4,6", 14, 6, "", "q^6+3q^5+3q^4+3q^3+2q^2+q+1", false},
    {"2,5,6", 16, 7, "", "q^7+2q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"3,4,5", 10, 6, "", "q^6+q^5+2q^4+2q^3+2q^2+q+1", true},
    {"3,4,6", 16, 7, "", "q^7+2q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"3,5,6", 19, 8, "", "q^8+2q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"4,5,6", 20, 9, "", "q^9+q^8+2q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,2,5;1,3,4", 4, 2, "", "2q^2+q+1", false},
    {"1,2,5;2,3,4", 5, 3, "", "q^3+2q^2+q+1", true},
    {"1,2,6;1,3,4", 5, 3, "", "q^3+2q^2+q+1", true},
    {"1,2,6;1,3,5", 6, 3, "", "2q^3+2q^2+q+1", false},
    {"1,2,6;1,4,5", 7, 4, "", "q^4+2q^3+2q^2+q+1", true},
    {"1,2,6;2,3,4", 6, 3, "", "2q^3+2q^2+q+1", false},
    {"1,2,6;2,3,5", 8, 4, "", "q^4+3q^3+2q^2+q+1", false},
    {"1,2,6;2,4,5", 10, 5, "", "q^5+2q^4+3q^3+2q^2+q+1", false},
    {"1,3,5;2,3,4", 6, 3, "", "2q^3+2q^2+q+1", false},
    {"1,3,6;1,4,5", 8, 4, "", "2q^4+2q^3+2q^2+q+1", true},
    {"1,3,6;3,4,5", 12, 6, "", "q^6+q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,3,6;2,3,4", 8, 4, "", "q^4+3q^3+2q^2+q+1", false},
    {"1,3,6;2,3,5", 9, 4, "", "2q^4+3q^3+2q^2+q+1", false},
    {"1,3,6;2,4,5", 11, 5, "", "q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;2,3,4", 10, 5, "", "q^5+2q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;2,3,5", 11, 5, "", "q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;2,3,6", 12, 5, "", "2q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;2,4,5", 12, 5, "", "2q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;3,4,5", 13, 6, "", "q^6+2q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;2,3,4", 11, 6, "", "q^6+q^5+2q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;2,3,5", 12, 6, "", "q^6+q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;2,3,6", 13, 6, "", "q^6+2q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;2,4,5", 13, 6, "", "q^6+2q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;2,4,6", 15, 6, "", "2q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;3,4,5", 14, 6, "", "2q^6+2q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;3,4,6", 17, 7, "", "q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"2,3,6;2,4,5", 12, 5, "", "2q^5+3q^4+3q^3+2q^2+q+1", false},
    {"2,3,6;3,4,5", 13, 6, "", "q^6+2q^5+3q^4+3q^3+2q^2+q+1", true},
    {"2,4,6;3,4,5", 15, 6, "", "2q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"2,5,6;3,4,5", 17, 7, "", "q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"2,5,6;3,4,6", 18, 7, "", "2q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,4,5;2,3,5", 8, 4, "", "2q^4+2q^3+2q^2+q+1", true},
    {"1,4,5;2,3,4", 7, 4, "", "q^4+2q^3+2q^2+q+1", true},
    {"1,2,6;3,4,5", 11, 6, "", "q^6+q^5+2q^4+3q^3+2q^2+q+1", true},
    {"1,4,5;2,3,6", 11, 5, "", "q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,3,6;1,4,5;2,3,4", 9, 4, "", "2q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;2,3,6;2,4,5", 13, 5, "", "3q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,4,6;2,3,6;3,4,5", 14, 6, "", "q^6+3q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,5,6;2,3,6;2,4,5", 14, 6, "", "q^6+3q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,5,6;2,3,6;3,4,5", 15, 6, "", "2q^6+3q^5+3q^4+3q^3+2q^2+q+1", true},
    {"1,5,6;2,4,6;3,4,5", 16, 6, "", "3q^6+3q^5+3q^4+3q^3+2q^2+q+1", false},
    {"1,2,6;1,3,5;2,3,4", 7, 3, "", "3q^3+2q^2+q+1", false},
    {"1,2,6;1,4,5;2,3,5", 9, 4, "", "2q^4+3q^3+2q^2+q+1", false},
    {"1,2,6;1,4,5;2,3,4", 8, 4, "", "q^4+3q^3+2q^2+q+1", false},
    {"1,3,6;1,4,5;2,3,5", 10, 4, "", "3q^4+3q^3+2q^2+q+1", false},
};

struct DualRow {
  const char* maxima;
  int span;
  const char* dual;
  bool maximal;
};

// G(3,6) dual pairs up to half span.
inline const std::vector<DualRow> g36_duals = {
    {"empty", 0, "4,5,6", true},
    {"1,2,3", 1, "3,5,6", true},
    {"1,2,4", 2, "2,5,6;3,4,6", true},
    {"1,2,5", 3, "1,5,6;3,4,6", true},
    {"1,3,4", 3, "2,5,6;3,4,5", true},
    {"1,2,6", 4, "3,4,6", true},
    {"2,3,4", 4, "2,5,6", true},
    {"1,2,5;1,3,4", 4, "1,5,6;2,4,6;3,4,5", false},
    {"1,3,5", 5, "1,5,6;2,3,6;3,4,5", true},
    {"1,2,5;2,3,4", 5, "1,5,6;2,4,6", true},
    {"1,2,6;1,3,4", 5, "2,4,6;3,4,5", true},
    {"1,4,5", 6, "1,5,6;3,4,5", true},
    {"1,2,6;1,3,5", 6, "1,4,6;2,3,6;3,4,5", false},
    {"1,2,6;2,3,4", 6, "2,4,6", false},
    {"1,3,5;2,3,4", 6, "1,5,6;2,3,6;2,4,5", false},
    {"1,3,6", 7, "2,3,6;3,4,5", true},
    {"2,3,5", 7, "1,5,6;2,3,6", true},
    {"1,2,6;1,4,5", 7, "1,4,6;3,4,5", true},
    {"1,4,5;2,3,4", 7, "1,5,6;2,4,5", true},
    {"1,2,6;1,3,5;2,3,4", 7, "1,4,6;2,3,6;2,4,5", false},
    {"1,3,6;1,4,5", 8, "1,3,6;3,4,5", true},
    {"1,4,5;2,3,5", 8, "1,5,6;2,3,5", true},
    {"1,2,6;2,3,5", 8, "1,4,6;2,3,6", false},
    {"1,3,6;2,3,4", 8, "2,3,6;2,4,5", false},
    {"1,2,6;1,4,5;2,3,4", 8, "1,4,6;2,4,5", false},
    {"1,4,6", 9, "1,2,6;3,4,5", true},
    {"2,4,5", 9, "1,5,6;2,3,4", true},
    {"1,3,6;2,3,5", 9, "1,4,5;2,3,6", false},
    {"1,3,6;1,4,5;2,3,4", 9, "1,3,6;2,4,5", false},
    {"1,2,6;1,4,5;2,3,5", 9, "1,4,6;2,3,5", false},
    {"1,5,6", 10, "3,4,5", true},
    {"2,3,6", 10, "2,3,6", false},
    {"1,2,6;2,4,5", 10, "1,4,6;2,3,4", false},
    {"1,3,6;1,4,5;2,3,5", 10, "1,3,6;1,4,5;2,3,5", false},
};

// E_r for r = 1..k.
inline const std::vector<std::string> e26 = {"q^8", "q^7", "q^6", "q^5", "q^4", "q^6", "q^5", "q^4",
                                             "q^3", "q^2", "q^4", "q^3", "q^2", "q",   "1"};
inline const std::vector<std::string> e27 = {"q^10", "q^9", "q^8", "q^7", "q^6", "q^5", "q^8",
                                             "q^7",  "q^6", "q^4", "q^5", "q^6", "q^4", "q^3",
                                             "q^2",  "q^5", "q^4", "q^3", "q^2", "q",   "1"};
inline const std::vector<std::string> e28 = {"q^12", "q^11", "q^10", "q^9", "q^8", "q^7", "q^6",
                                             "q^10", "q^9",  "q^8",  "q^7", "q^6", "q^5", "q^8",
                                             "q^4",  "q^7",  "q^6",  "q^5", "q^4", "q^3", "q^2",
                                             "q^6",  "q^5",  "q^4",  "q^3", "q^2", "q",   "1"};
inline const std::vector<std::string> e36 = {"q^9", "q^8", "q^7", "q^6", "q^7", "q^5", "q^6",
                                             "q^5", "q^4", "q^3", "q^6", "q^5", "q^4", "q^3",
                                             "q^4", "q^2", "q^3", "q^2", "q",   "1"};

// Directions by codimension 0..k.
inline const char* dir27 = "LR LR LR LR R R R R R LR L R LR L L L L L LR LR LR LR";
inline const char* dir29 =
    "LR LR LR LR R R R R R R R R R R R R R R LR L L L L L L L L L L L L L L LR LR LR LR";
inline const char* dir210 =
    "LR LR LR LR R R R R R R R R R R R R R R R R LR L R R R LR L L L L L L L L L L L L L L L L LR LR LR LR";

// Delta_r for r = 1..k.
inline const std::vector<std::string> delta24 = {"q^4", "q^3", "q^2", "q^2", "q", "1"};

}  // namespace fixtures
