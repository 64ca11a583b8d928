#include "locinv/io.hpp"

#include <algorithm>
#include <sstream>

namespace locinv {

namespace {

json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw MalformedInput("expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> int_list(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of integers, got " + j.dump());
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MalformedInput("expected an integer, got " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

template <typename Fn>
auto guarded(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedInput(e.what());
  }
}

}  // namespace

json to_json(const Composition& c) { return json(std::vector<int>(c.begin(), c.end())); }
json to_json(const Partition& p) { return to_json(p.composition()); }

json to_json(const Rational& q) { return json::array({big_to_json(q.get_num()), big_to_json(q.get_den())}); }

json to_json(const IndexedMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& k : m.row_keys()) rows.push_back(to_json(k));
  for (const auto& k : m.col_keys()) cols.push_back(to_json(k));
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.num_cols(); ++c) row.push_back(to_json(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

json to_json(const Filling& f) { return {{"shape", to_json(f.shape)}, {"rows", f.rows}}; }

namespace {

json bricks_json(const std::vector<Brick>& bricks) {
  json out = json::array();
  for (const auto& b : bricks)
    out.push_back({{"label", b.label}, {"row", b.row}, {"start_col", b.start_col}, {"len", b.len}});
  return out;
}

}  // namespace

json to_json(const CBT& t) {
  return {{"shape", to_json(t.shape)}, {"content", to_json(t.content)}, {"bricks", bricks_json(t.bricks)}};
}

json to_json(const OBT& t) {
  return {{"shape", to_json(t.shape)},
          {"content", to_json(t.content)},
          {"type", to_json(sort_comp(t.content))},
          {"bricks", bricks_json(t.bricks())}};
}

json to_json(const BrickTabloid& t) {
  json j = to_json(t.underlying);
  j["type"] = to_json(t.type);
  j["weight"] = big_to_json(t.weight);
  return j;
}

json to_json(const Abacus& a) { return {{"beads", a.beads()}, {"word", a.word()}}; }

json to_json(const Permutation& p) { return {{"ground", p.ground()}, {"cycles", p.canonical_cycles()}}; }

json to_json(const KostkaObject& x) {
  return {{"lambda", to_json(x.lambda)}, {"mu", to_json(x.mu)}, {"S", to_json(x.S)}, {"T", to_json(x.T)}};
}

json to_json(const RhtTriple& x) {
  return {{"lambda", to_json(x.lambda)},
          {"mu", to_json(x.mu)},
          {"S", to_json(x.S)},
          {"T", to_json(x.T)},
          {"sigma", to_json(x.sigma)}};
}

json to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"action", s.action}, {"before", s.before}, {"after", s.after}});
  return out;
}

json to_json(const PairingReport& r) {
  return {{"app", r.app},
          {"lambda", to_json(r.lambda)},
          {"mu", to_json(r.mu)},
          {"objects", r.objects},
          {"fixed_points", r.fixed_points},
          {"paired", r.paired},
          {"signed_fixed", r.signed_fixed},
          {"expected_fixed", r.expected_fixed},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

json to_json(const LocalReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"lambda", to_json(v.lambda)}, {"mu", to_json(v.mu)}, {"value", to_json(v.value)}});
  return {{"n", r.n}, {"pairs_checked", r.pairs_checked}, {"violations", violations}, {"passed", r.passed()}};
}

Composition composition_from_json(const json& j) {
  return guarded([&] { return Composition(int_list(j)); });
}

Partition partition_from_json(const json& j) {
  return guarded([&] { return Partition(int_list(j)); });
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return guarded([&] { return parse_rational(j.get<std::string>()); });
  if (!j.is_array() || j.size() != 2) throw MalformedInput("expected [numerator, denominator], got " + j.dump());
  const BigInt num = big_from_json(j[0]), den = big_from_json(j[1]);
  if (den <= 0) throw MalformedInput("denominator must be positive");
  return make_rational(num, den);
}

IndexedMatrix matrix_from_json(const json& j) {
  std::vector<Composition> rows, cols;
  for (const auto& k : field(j, "rows")) rows.push_back(composition_from_json(k));
  for (const auto& k : field(j, "cols")) cols.push_back(composition_from_json(k));
  auto m = guarded([&] { return IndexedMatrix(rows, cols); });
  const auto& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows.size()) throw MalformedInput("entries do not match rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols.size()) throw MalformedInput("entries do not match cols");
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = rational_from_json(entries[r][c]);
  }
  return m;
}

Filling filling_from_json(const json& j) {
  Filling f;
  f.shape = composition_from_json(field(j, "shape"));
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw MalformedInput("rows must be an array");
  for (const auto& r : rows) f.rows.push_back(int_list(r));
  if (!f.congruent()) throw MalformedInput("rows do not match shape");
  return f;
}

Abacus abacus_from_json(const json& j) {
  const auto& word = field(j, "word");
  if (!word.is_string()) throw MalformedInput("word must be a string");
  auto a = guarded([&] { return Abacus::from_word(word.get<std::string>()); });
  if (j.contains("beads") && j.at("beads") != a.beads()) throw MalformedInput("bead count does not match word");
  return a;
}

Permutation permutation_from_json(const json& j) {
  const auto ground = int_list(field(j, "ground"));
  std::vector<std::vector<int>> cycles;
  const auto& cs = field(j, "cycles");
  if (!cs.is_array()) throw MalformedInput("cycles must be an array");
  for (const auto& c : cs) cycles.push_back(int_list(c));
  return guarded([&] { return Permutation::from_cycles(ground, cycles); });
}

KostkaObject kostka_object_from_json(const json& j) {
  KostkaObject x{partition_from_json(field(j, "lambda")), partition_from_json(field(j, "mu")),
                 filling_from_json(field(j, "S")), filling_from_json(field(j, "T"))};
  if (x.S.shape != x.lambda.composition() || x.T.shape != x.mu.composition())
    throw MalformedInput("filling shapes do not match lambda and mu");
  return x;
}

RhtTriple rht_triple_from_json(const json& j) {
  RhtTriple x{partition_from_json(field(j, "lambda")), partition_from_json(field(j, "mu")),
              filling_from_json(field(j, "S")), filling_from_json(field(j, "T")),
              permutation_from_json(field(j, "sigma"))};
  if (x.S.shape != x.lambda.composition() || x.T.shape != x.mu.composition())
    throw MalformedInput("filling shapes do not match lambda and mu");
  return x;
}

namespace {

std::string parenthesized(const Composition& c) {
  std::string out = "(";
  for (int p : c) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + ")";
}

}  // namespace

std::string to_csv(const IndexedMatrix& m) {
  std::ostringstream out;
  out << "key";
  for (const auto& c : m.col_keys()) out << ",\"" << parenthesized(c) << '"';
  out << '\n';
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    out << '"' << parenthesized(m.row_keys()[r]) << '"';
    for (std::size_t c = 0; c < m.num_cols(); ++c) out << ',' << to_string(m.at(r, c));
    out << '\n';
  }
  return out.str();
}

namespace {

std::string compact(const Composition& c) {
  std::string out;
  const bool digits = std::all_of(c.begin(), c.end(), [](int p) { return p < 10; });
  for (int p : c) {
    if (!digits && !out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace

std::string to_ascii(const IndexedMatrix& m) {
  if (m.num_rows() == 1 && m.num_cols() == 1 && m.row_keys()[0].empty() && m.col_keys()[0].empty())
    return to_string(m.at(0, 0)) + "\n";
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"~"});
  for (const auto& c : m.col_keys()) cells[0].push_back(compact(c));
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    std::vector<std::string> row{compact(m.row_keys()[r])};
    for (std::size_t c = 0; c < m.num_cols(); ++c) row.push_back(to_string(m.at(r, c)));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace locinv
