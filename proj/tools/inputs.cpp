#include "inputs.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "rigidity/errors.hpp"
#include "rigidity/formats.hpp"

namespace rigidity::cli {

namespace {

constexpr std::string_view kCatalog = "catalog:";

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplePolytope load_polytope(const std::string& spec) {
  if (starts_with(spec, kCatalog)) return parse_expression(spec.substr(kCatalog.size()));
  const Parsed parsed = parse_any(read_file(spec));
  if (const auto* p = std::get_if<SimplePolytope>(&parsed)) return *p;
  fail(ErrorKind::InvalidInput, "'" + spec + "' does not describe a polytope");
}

CombinatorialBase load_base(const std::string& spec) {
  static const std::regex polygon_re(R"(catalog:\s*polygon\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, polygon_re)) return polygon(std::stoi(m[1]));
  return base_of(load_polytope(spec));
}

SimplicialComplex load_complex(const std::string& spec) {
  if (starts_with(spec, kCatalog)) return dual_complex(load_polytope(spec));
  const Parsed parsed = parse_any(read_file(spec));
  if (const auto* k = std::get_if<SimplicialComplex>(&parsed)) return *k;
  if (const auto* p = std::get_if<SimplePolytope>(&parsed)) return dual_complex(*p);
  fail(ErrorKind::InvalidInput, "'" + spec + "' does not describe a complex or polytope");
}

CharMatrix load_matrix(const std::string& spec, const CombinatorialBase& base, Coefficients c) {
  if (starts_with(spec, "matrix:")) {
    std::string rows = spec.substr(7);
    for (char& ch : rows)
      if (ch == ';' || ch == '/') ch = '\n';
    return char_matrix_from_text(rows, c);
  }
  if (starts_with(spec, "colouring:")) {
    if (!base.polytope) throw UsageError("colouring matrices need a 3-polytope base");
    const int k = std::stoi(spec.substr(10));
    const auto reps = colouring_class_representatives(*base.polytope);
    if (k < 1 || k > static_cast<int>(reps.size()))
      fail(ErrorKind::OutOfRange, "colouring class " + std::to_string(k) + " outside 1.." + std::to_string(reps.size()));
    const CharMatrix l = colouring_to_matrix(reps[k - 1]);
    return c == Coefficients::Z2 ? reduce_mod2(l) : l;
  }
  return char_matrix_from_text(read_file(spec), c);
}

}  // namespace rigidity::cli
