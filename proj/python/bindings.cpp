#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "locinv/apps.hpp"
#include "locinv/cli.hpp"
#include "locinv/io.hpp"
#include "locinv/scalars.hpp"

namespace py = pybind11;
using namespace locinv;

namespace {

IndexedMatrix side_matrix(const std::string& app, int n, const std::string& side) {
  MatrixFamily fam(system_for(app));
  if (side == "A") return fam.A(n);
  if (side == "B") return fam.B(n);
  if (!has_square_form(app)) throw std::invalid_argument("no square form for " + app);
  if (side == "Asq") return square_restrict_A(fam.A(n));
  if (side == "Bsq") return square_fold_B(fam.B(n));
  throw std::invalid_argument("side must be A, B, Asq or Bsq");
}

std::string local_terms_json(const std::string& app, const std::vector<int>& lambda, const std::vector<int>& mu) {
  json out = json::array();
  for (const auto& t : local_terms(system_for(app), Composition(lambda), Composition(mu)))
    out.push_back({{"gamma", to_json(t.gamma)},
                   {"L", t.L},
                   {"weight_a", to_json(t.weight_a)},
                   {"weight_b", to_json(t.weight_b)}});
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact inverse-pair matrices and their sign-reversing involutions";
  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);

  m.def("app_names", &app_names);
  m.def("matrix_json", [](const std::string& app, int n, const std::string& side) {
    return to_json(side_matrix(app, n, side)).dump();
  });
  m.def("matrix_ascii", [](const std::string& app, int n, const std::string& side) {
    return to_ascii(side_matrix(app, n, side));
  });
  m.def("verify_inversion", [](const std::string& app, int n) { return verify_inversion(system_for(app), n); });
  m.def("verify_local_json", [](const std::string& app, int n) {
    return to_json(verify_local(system_for(app), n)).dump();
  });
  m.def("local_terms_json", &local_terms_json);
  m.def("pairing_json", [](const std::string& app, const std::vector<int>& lambda, const std::vector<int>& mu) {
    return to_json(verify_pairing(app, Partition(lambda), Partition(mu))).dump();
  });
  m.def("kostka_involution_json", [](const std::string& text) {
    const auto r = kostka_involution(kostka_object_from_json(json::parse(text)));
    return json{{"fixed_point", r.fixed_point}, {"image", to_json(r.image)}, {"trace", to_json(r.trace)}}.dump();
  });
  m.def("rht_involution_json", [](const std::string& text) {
    const auto r = rht_involution(rht_triple_from_json(json::parse(text)));
    return json{{"fixed_point", r.fixed_point}, {"image", to_json(r.image)}, {"trace", to_json(r.trace)}}.dump();
  });
  m.def("big_z", [](const std::vector<int>& beta) { return big_z(Composition(beta)).get_str(); });
  m.def("little_z", [](const std::vector<int>& lambda) { return little_z(Partition(lambda)).get_str(); });
  m.def("big_w", [](const std::vector<int>& mu) { return big_w(Partition(mu)).get_str(); });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = locinv::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
