// The n = 4 matrices as printed in the source article, entry for entry.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "locinv/matrix.hpp"

namespace tables {

struct Printed {
  std::string name;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::string> body;  // one whitespace-separated line per row
};

inline locinv::IndexedMatrix to_matrix(const Printed& t) {
  std::vector<locinv::Composition> rk, ck;
  for (const auto& r : t.rows) rk.push_back(locinv::parse_composition(r));
  for (const auto& c : t.cols) ck.push_back(locinv::parse_composition(c));
  locinv::IndexedMatrix m(rk, ck);
  for (std::size_t i = 0; i < t.body.size(); ++i) {
    std::istringstream in(t.body[i]);
    std::string tok;
    for (std::size_t j = 0; in >> tok; ++j) m.at(i, j) = locinv::parse_rational(tok);
  }
  return m;
}

inline const std::vector<std::string> kC4{"4", "31", "22", "211", "13", "121", "112", "1111"};
inline const std::vector<std::string> kP4{"4", "31", "22", "211", "1111"};

inline const Printed kostka_A4{"kostka A4", kP4, kC4,
                               {"1 1 1 1 1 1 1 1", "0 1 1 2 1 2 2 3", "0 0 1 1 0 1 1 2",
                                "0 0 0 1 0 1 1 3", "0 0 0 0 0 0 0 1"}};
inline const Printed kostka_B4{"kostka B4", kC4, kP4,
                               {"1 -1 0 1 -1", "0 1 0 -1 1", "0 0 1 -1 1", "0 0 0 1 -1",
                                "0 0 -1 0 1", "0 0 0 0 -1", "0 0 0 0 -1", "0 0 0 0 1"}};

inline const Printed rimhook_A4{"rimhook A4", kP4, kC4,
                                {"1 1 1 1 1 1 1 1", "-1 0 -1 1 0 1 1 3", "0 -1 2 0 -1 0 0 2",
                                 "1 0 -1 -1 0 -1 -1 3", "-1 1 1 -1 1 -1 -1 1"}};
inline const Printed rimhook_B4{"rimhook B4", kC4, kP4,
                                {"1/4 -1/4 0 1/4 -1/4", "1/12 0 -1/12 0 1/12",
                                 "1/8 -1/8 2/8 -1/8 1/8", "1/24 1/24 0 -1/24 -1/24",
                                 "1/4 0 -1/4 0 1/4", "1/12 1/12 0 -1/12 -1/12",
                                 "1/8 1/8 0 -1/8 -1/8", "1/24 3/24 2/24 3/24 1/24"}};

inline const Printed refine_A4{"refine A4", kC4, kC4,
                               {"1 0 0 0 0 0 0 0", "1 1 0 0 0 0 0 0", "1 0 1 0 0 0 0 0",
                                "1 1 1 1 0 0 0 0", "1 0 0 0 1 0 0 0", "1 1 0 0 1 1 0 0",
                                "1 0 1 0 1 0 1 0", "1 1 1 1 1 1 1 1"}};
inline const Printed refine_B4{"refine B4", kC4, kC4,
                               {"1 0 0 0 0 0 0 0", "-1 1 0 0 0 0 0 0", "-1 0 1 0 0 0 0 0",
                                "1 -1 -1 1 0 0 0 0", "-1 0 0 0 1 0 0 0", "1 -1 0 0 -1 1 0 0",
                                "1 0 -1 0 -1 0 1 0", "-1 1 1 -1 1 -1 -1 1"}};

inline const Printed brick_A4{"brick A4", kP4, kC4,
                              {"1 1 1 1 1 1 1 1", "0 1 0 2 1 2 2 4", "0 0 2 2 0 2 2 6",
                               "0 0 0 2 0 2 2 12", "0 0 0 0 0 0 0 24"}};
inline const Printed brick_B4{"brick B4", kC4, kP4,
                              {"1 -1 -1/2 1 -1/4", "0 1/4 0 -1/4 1/12", "0 0 1/2 -1/2 1/8",
                               "0 0 0 1/12 -1/24", "0 3/4 0 -3/4 1/4", "0 0 0 1/6 -1/12",
                               "0 0 0 1/4 -1/8", "0 0 0 0 1/24"}};
inline const Printed brick_A4sq{"brick A4'", kP4, kP4,
                                {"1 1 1 1 1", "0 1 0 2 4", "0 0 2 2 6", "0 0 0 2 12", "0 0 0 0 24"}};
inline const Printed brick_B4sq{"brick B4'", kP4, kP4,
                                {"1 -1 -1/2 1 -1/4", "0 1 0 -1 1/3", "0 0 1/2 -1/2 1/8",
                                 "0 0 0 1/2 -1/4", "0 0 0 0 1/24"}};

}  // namespace tables
