#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "locinv/brick.hpp"
#include "locinv/framework.hpp"
#include "locinv/involutions.hpp"
#include "locinv/kostka.hpp"
#include "locinv/matrix.hpp"
#include "locinv/permutation.hpp"
#include "locinv/refine.hpp"
#include "locinv/rimhook.hpp"

namespace locinv {

using json = nlohmann::json;

/// Raised when input JSON does not match the expected schema.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Composition& c);
json to_json(const Partition& p);
/// [numerator, denominator]; integers that overflow 64 bits become strings.
json to_json(const Rational& q);
json to_json(const IndexedMatrix& m);
json to_json(const Filling& f);
json to_json(const CBT& t);
json to_json(const OBT& t);
json to_json(const BrickTabloid& t);
json to_json(const Abacus& a);
json to_json(const Permutation& p);
json to_json(const KostkaObject& x);
json to_json(const RhtTriple& x);
json to_json(const std::vector<TraceStep>& trace);
json to_json(const PairingReport& r);
json to_json(const LocalReport& r);

Composition composition_from_json(const json& j);
Partition partition_from_json(const json& j);
Rational rational_from_json(const json& j);
IndexedMatrix matrix_from_json(const json& j);
Filling filling_from_json(const json& j);
Abacus abacus_from_json(const json& j);
Permutation permutation_from_json(const json& j);
KostkaObject kostka_object_from_json(const json& j);
RhtTriple rht_triple_from_json(const json& j);

/// Header row of keys, then one row per key with "p/q" entries.
std::string to_csv(const IndexedMatrix& m);
/// Aligned grid with compact key strings, as in the printed tables. The
/// 1 x 1 matrix of n = 0 prints as its single entry.
std::string to_ascii(const IndexedMatrix& m);

}  // namespace locinv
