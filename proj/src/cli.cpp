#include "locinv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "locinv/apps.hpp"
#include "locinv/io.hpp"

namespace locinv {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string app;
  int n = 0;
  std::string side = "A";
  std::string format = "json";
  std::string lambda, mu, shape, content, kind, input;
  std::string partition;
  int beads = -1;
  std::vector<int> move;
  bool trace = false;
  bool involution = false;
};

Partition partition_arg(const std::string& text, const char* what) {
  try {
    return parse_partition(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

Composition composition_arg(const std::string& text, const char* what) {
  try {
    return parse_composition(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

LocalSystem system_arg(const std::string& app) {
  try {
    return system_for(app);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_matrix(const Options& o, std::ostream& out) {
  MatrixFamily fam(system_arg(o.app));
  if ((o.side == "Asq" || o.side == "Bsq") && !has_square_form(o.app))
    throw UsageError("app '" + o.app + "' has no square form");
  IndexedMatrix m;
  if (o.side == "A") m = fam.A(o.n);
  else if (o.side == "B") m = fam.B(o.n);
  else if (o.side == "Asq") m = square_restrict_A(fam.A(o.n));
  else m = square_fold_B(fam.B(o.n));
  if (o.format == "json") print(out, to_json(m));
  else if (o.format == "csv") out << to_csv(m);
  else out << to_ascii(m);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto sys = system_arg(o.app);
  MatrixFamily fam(sys);
  const bool inversion = verify_inversion(fam, o.n);
  json report{{"app", o.app}, {"n", o.n}, {"inversion", inversion}};
  bool ok = inversion;
  if (o.n >= 1) {
    const auto local = verify_local(sys, o.n);
    report["local"] = to_json(local);
    ok = ok && local.passed();
  }
  if (has_square_form(o.app)) {
    const bool square = (square_restrict_A(fam.A(o.n)) * square_fold_B(fam.B(o.n))).is_identity();
    report["square"] = square;
    ok = ok && square;
  }
  report["passed"] = ok;
  print(out, report);
  return ok ? kOk : kVerificationFailed;
}

int cmd_local(const Options& o, std::ostream& out) {
  const auto sys = system_arg(o.app);
  const Composition lambda = composition_arg(o.lambda, "--lambda");
  const Composition mu = composition_arg(o.mu, "--mu");
  if (lambda.size() != mu.size() || lambda.size() == 0) throw UsageError("lambda and mu must have the same positive size");
  const auto shapes = sys.shapes(lambda.size());
  for (const auto* s : {&lambda, &mu})
    if (std::find(shapes.begin(), shapes.end(), *s) == shapes.end())
      throw UsageError(s->str() + " is not a valid index for app '" + o.app + "'");
  json terms = json::array();
  Rational sum = 0;
  for (const auto& t : local_terms(sys, lambda, mu)) {
    terms.push_back({{"gamma", to_json(t.gamma)},
                     {"L", t.L},
                     {"weight_a", to_json(t.weight_a)},
                     {"weight_b", to_json(t.weight_b)},
                     {"product", to_json(t.product())}});
    sum += t.product();
  }
  const Rational expected = lambda == mu ? 1 : 0;
  print(out, {{"app", o.app}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"terms", terms},
              {"sum", to_json(sum)}, {"holds", sum == expected}});
  return sum == expected ? kOk : kVerificationFailed;
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") out << j.dump() << '\n';
  else out << text << '\n';
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Composition content = composition_arg(o.content, "--content");
  auto signed_fillings = [&](const std::vector<SignedFilling>& fs) {
    for (const auto& f : fs)
      emit(out, o, {{"filling", to_json(f.filling)}, {"sign", f.sign}},
           f.filling.str() + " " + (f.sign > 0 ? "+" : "-"));
  };
  try {
    if (o.kind == "ssyt") {
      for (const auto& f : enumerate_ssyt(partition_arg(o.shape, "--shape"), content))
        emit(out, o, {{"filling", to_json(f)}}, f.str());
    } else if (o.kind == "srht") {
      if (auto f = srht_find(partition_arg(o.shape, "--shape"), content)) signed_fillings({*f});
    } else if (o.kind == "rht") {
      signed_fillings(enumerate_rht(partition_arg(o.shape, "--shape"), content));
    } else if (o.kind == "cbt") {
      if (auto t = cbt_find(composition_arg(o.shape, "--shape"), content)) {
        json j = to_json(*t);
        j["sign"] = t->sign();
        emit(out, o, j, t->filling().str() + " " + (t->sign() > 0 ? "+" : "-"));
      }
    } else if (o.kind == "obt") {
      for (const auto& t : enumerate_obt(partition_arg(o.shape, "--shape"), content))
        emit(out, o, to_json(t), t.filling().str());
    } else if (o.kind == "bt") {
      for (const auto& t : enumerate_bt(composition_arg(o.shape, "--shape"), partition_arg(o.content, "--content")))
        emit(out, o, to_json(t), t.underlying.filling().str() + " " + t.weight.get_str());
    } else {
      throw UsageError("unknown kind '" + o.kind + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int cmd_pair(const Options& o, std::ostream& out) {
  const Partition lambda = partition_arg(o.lambda, "--lambda");
  const Partition mu = partition_arg(o.mu, "--mu");
  if (lambda.size() != mu.size()) throw UsageError("lambda and mu must have the same size");
  if (o.involution) {
    if (o.app != "kostka" && o.app != "rimhook") throw UsageError("involutions exist for kostka and rimhook");
    const auto report = verify_pairing(o.app, lambda, mu);
    print(out, to_json(report));
    return report.passed() ? kOk : kVerificationFailed;
  }
  if (lambda.size() == 0) throw UsageError("pairing needs n > 0");
  json j{{"app", o.app}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
  if (o.app == "kostka") {
    const auto p = kostka_pair(lambda, mu);
    static const char* kinds[] = {"empty", "diagonal", "matched"};
    j["kind"] = kinds[static_cast<int>(p.kind)];
    json g = json::array();
    if (p.kind != KostkaPairing::Kind::Empty) g.push_back({{"gamma", to_json(p.first)}, {"sign", p.first_sign}});
    if (p.kind == KostkaPairing::Kind::Matched) g.push_back({{"gamma", to_json(p.second)}, {"sign", p.second_sign}});
    j["G"] = g;
  } else if (o.app == "rimhook") {
    const auto p = rimhook_pair(lambda, mu);
    static const char* kinds[] = {"empty", "diagonal", "matched"};
    j["kind"] = kinds[static_cast<int>(p.kind)];
    json g = json::array();
    for (const auto& w : p.ways)
      g.push_back({{"gamma", to_json(w.gamma)}, {"L", w.L}, {"sign_lambda", w.sign_lambda}, {"sign_mu", w.sign_mu}});
    j["G"] = g;
  } else if (o.app == "brick") {
    const auto r = brick_local_g(lambda, mu);
    json g = json::array();
    for (const auto& t : r.terms)
      g.push_back({{"gamma", to_json(t.gamma)}, {"multiplicity", t.multiplicity}, {"sign", t.sign},
                   {"W", t.w.get_si()}, {"value", to_json(t.value)}});
    j["G"] = g;
    j["total"] = to_json(r.total);
  } else {
    throw UsageError("pair supports kostka, rimhook and brick; use local for other apps");
  }
  print(out, j);
  return kOk;
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(e.what());
  }
}

int cmd_involute(const Options& o, std::ostream& out) {
  const json in = read_input(o.input);
  json result;
  auto checked = [](auto fn) {
    try {
      return fn();
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what());
    }
  };
  if (o.app == "kostka") {
    const auto x = kostka_object_from_json(in);
    const auto r = checked([&] { return kostka_involution(x); });
    result = {{"fixed_point", r.fixed_point}, {"input_sign", x.sign()}, {"output", to_json(r.image)},
              {"output_sign", r.image.sign()}};
    if (o.trace) result["trace"] = to_json(r.trace);
  } else if (o.app == "rimhook") {
    const auto x = rht_triple_from_json(in);
    const auto r = checked([&] { return rht_involution(x); });
    result = {{"fixed_point", r.fixed_point}, {"input_sign", x.sign()}, {"output", to_json(r.image)},
              {"output_sign", r.image.sign()}};
    if (o.trace) result["trace"] = to_json(r.trace);
  } else {
    throw UsageError("involutions exist for kostka and rimhook");
  }
  print(out, result);
  return kOk;
}

int cmd_abacus(const Options& o, std::ostream& out) {
  const Partition lambda = partition_arg(o.partition, "--partition");
  const int beads = o.beads < 0 ? lambda.length() : o.beads;
  Abacus a;
  try {
    a = Abacus::from_partition(lambda, beads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = to_json(a);
  j["partition"] = to_json(lambda);
  if (!o.move.empty()) {
    try {
      const auto [b, sign] = a.move_bead(o.move[0], o.move[1]);
      json after = to_json(b);
      after["partition"] = to_json(b.decode());
      j["move"] = {{"from", o.move[0]}, {"to", o.move[1]}, {"after", after}, {"sign", sign}};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  print(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local identities and matrix inversion"};
  app.require_subcommand(1);
  Options o;
  const auto apps = app_names();

  auto* matrix = app.add_subcommand("matrix", "Print A_n, B_n or their square forms");
  matrix->add_option("--app", o.app)->required()->check(CLI::IsMember(apps));
  matrix->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  matrix->add_option("--side", o.side)->check(CLI::IsMember({"A", "B", "Asq", "Bsq"}));
  matrix->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "ascii"}));

  auto* verify = app.add_subcommand("verify", "Check A_n B_n = I and the local identities");
  verify->add_option("--app", o.app)->required()->check(CLI::IsMember(apps));
  verify->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);

  auto* local = app.add_subcommand("local", "Evaluate the local identity at (lambda, mu)");
  local->add_option("--app", o.app)->required()->check(CLI::IsMember(apps));
  local->add_option("--lambda", o.lambda)->required();
  local->add_option("--mu", o.mu)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List tableaux of a given shape and content");
  enumerate->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"ssyt", "srht", "rht", "cbt", "obt", "bt"}));
  enumerate->add_option("--shape", o.shape)->required();
  enumerate->add_option("--content", o.content)->required();
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"json", "ascii"}));

  auto* pair = app.add_subcommand("pair", "Show G(lambda, mu) or check a whole involution");
  pair->add_option("--app", o.app)->required()->check(CLI::IsMember({"kostka", "rimhook", "brick"}));
  pair->add_option("--lambda", o.lambda)->required();
  pair->add_option("--mu", o.mu)->required();
  pair->add_flag("--involution", o.involution, "Run the involution over all of P(lambda, mu)");

  auto* involute = app.add_subcommand("involute", "Apply the sign-reversing involution to a JSON object");
  involute->add_option("--app", o.app)->required()->check(CLI::IsMember({"kostka", "rimhook"}));
  involute->add_option("--input", o.input)->required();
  involute->add_flag("--trace", o.trace);

  auto* abacus = app.add_subcommand("abacus", "Abacus word of a partition, optionally moving a bead");
  abacus->add_option("--partition", o.partition)->required();
  abacus->add_option("--beads", o.beads);
  abacus->add_option("--move", o.move)->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*matrix) return cmd_matrix(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*local) return cmd_local(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*pair) return cmd_pair(o, out);
    if (*involute) return cmd_involute(o, out);
    return cmd_abacus(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  }
}

}  // namespace locinv
