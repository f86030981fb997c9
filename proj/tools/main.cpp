#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inputs.hpp"
#include "render.hpp"
#include "rigidity/belts.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/formats.hpp"
#include "rigidity/macohomology.hpp"
#include "rigidity/manifolds.hpp"

using namespace rigidity;
using rigidity::cli::Report;
using rigidity::cli::UsageError;

namespace {

// Everything printed is 1-based.
Report one_based(const std::vector<int>& v) {
  Report a = Report::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

Report one_based(Mask s) { return one_based(elements(s)); }

Report matrix_rows(const Matrix& a) {
  Report rows = Report::array();
  for (int r = 0; r < a.rows(); ++r) {
    Report row = Report::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> parse_facet_list(const std::string& s, int m) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty() && (tok[0] == 'F' || tok[0] == 'f')) tok.erase(0, 1);
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw UsageError("bad facet '" + tok + "' in '" + s + "'");
    }
    if (v < 1 || v > m) fail(ErrorKind::OutOfRange, "facet " + std::to_string(v) + " outside 1.." + std::to_string(m));
    out.push_back(v - 1);
  }
  return out;
}

Report polytope_summary(const SimplePolytope& p) {
  const PkVector pk = pk_vector(p);
  Report r;
  r["kind"] = "polytope";
  r["m"] = p.m();
  r["f0"] = pk.f0;
  r["f1"] = pk.f1;
  r["f2"] = pk.f2;
  Report pks;
  for (const auto& [k, count] : pk.p) pks["p" + std::to_string(k)] = count;
  r["pk"] = pks;
  r["flag"] = is_flag_polytope(p);
  r["pogorelov"] = is_pogorelov(p);
  r["canonical_code"] = canonical_code(p);
  return r;
}

struct Options {
  bool json = false;
  std::string coeffs = "z";
  Coefficients c() const { return coeffs == "z2" ? Coefficients::Z2 : Coefficients::Z; }
};

Report cmd_validate(const std::string& in, const Options& o) {
  if (in.rfind("catalog:", 0) == 0) return polytope_summary(cli::load_polytope(in));
  const Parsed parsed = parse_any(cli::read_file(in), o.c());
  if (const auto* p = std::get_if<SimplePolytope>(&parsed)) return polytope_summary(*p);
  Report r;
  if (const auto* k = std::get_if<SimplicialComplex>(&parsed)) {
    r["kind"] = "complex";
    r["m"] = k->m();
    r["dimension"] = k->dimension();
    r["maximal_faces"] = static_cast<int>(k->maximal_faces().size());
    r["flag"] = is_flag(*k);
    return r;
  }
  const auto& l = std::get<CharMatrix>(parsed);
  r["kind"] = "matrix";
  r["n"] = l.n();
  r["m"] = l.m();
  r["coeffs"] = std::string(to_string(l.coeffs));
  return r;
}

Report cmd_catalog(const std::vector<std::string>& exprs) {
  Report r;
  if (exprs.empty()) {
    r["polytopes"] = {"simplex", "cube", "dodecahedron", "prism(k)", "barrel(k)", "polygon(k)"};
    r["operations"] = {"edgecut(P)", "vt(P,F1,F2,F3)", "et(P,Fa,Fb)", "sk(P,F,G1,...,Gs)",
                       "sum(P@Fi,Q@Fj,fwd:n|rev:n)"};
    return r;
  }
  Report list = Report::array();
  for (const auto& e : exprs) {
    const std::string spec = e.rfind("catalog:", 0) == 0 ? e : "catalog:" + e;
    Report entry;
    entry["expression"] = spec.substr(8);
    const SimplePolytope p = cli::load_polytope(spec);
    const PkVector pk = pk_vector(p);
    entry["m"] = p.m();
    entry["f0"] = pk.f0;
    entry["flag"] = is_flag_polytope(p);
    entry["pogorelov"] = is_pogorelov(p);
    list.push_back(entry);
  }
  r["entries"] = list;
  return r;
}

Report cmd_belts(const std::string& in, int length) {
  const SimplePolytope p = cli::load_polytope(in);
  const auto belts = enumerate_belts(p, length);
  Report r;
  r["m"] = p.m();
  r["count"] = static_cast<long>(belts.size());
  std::map<int, int> by_len;
  for (const auto& b : belts) ++by_len[static_cast<int>(b.size())];
  Report counts;
  for (const auto& [k, c] : by_len) counts[std::to_string(k)] = c;
  r["by_length"] = counts;
  Report list = Report::array();
  for (const auto& b : belts) list.push_back(one_based(b));
  r["belts"] = list;
  return r;
}

Report cmd_pogorelov(const std::string& in) {
  const SimplePolytope p = cli::load_polytope(in);
  Report r;
  r["pogorelov"] = is_pogorelov(p);
  r["flag"] = is_flag_polytope(p);
  r["m"] = p.m();
  Report b3 = Report::array(), b4 = Report::array();
  for (const auto& b : enumerate_belts(p, 3)) b3.push_back(one_based(b));
  for (const auto& b : enumerate_belts(p, 4)) b4.push_back(one_based(b));
  r["belts3"] = b3;
  r["belts4"] = b4;
  return r;
}

Report cmd_construct(const std::string& expr, bool emit_json) {
  const std::string spec = expr.rfind("catalog:", 0) == 0 ? expr : "catalog:" + expr;
  const SimplePolytope p = cli::load_polytope(spec);
  Report r = polytope_summary(p);
  r["text"] = emit_json ? Report::parse(to_json(p)) : Report(to_text(p));
  return r;
}

Report spot_entries(const MomentAngleCohomology& h) {
  Report list = Report::array();
  for (const auto& [j, level] : h.nonzero_spots()) {
    const SpotCohomology& s = h.spot(j, level);
    Report e;
    e["J"] = one_based(j);
    e["i"] = level - popcount(j);
    e["degree"] = popcount(j) + level;
    e["rank"] = s.free_rank();
    if (!s.torsion().empty()) e["torsion"] = s.torsion();
    list.push_back(e);
  }
  return list;
}

Report cmd_zk_betti(const std::string& in, const Options& o) {
  const MomentAngleCohomology h(cli::load_complex(in), o.c());
  Report r;
  r["m"] = h.m();
  r["coeffs"] = std::string(to_string(o.c()));
  const auto b = h.betti();
  for (std::size_t l = 0; l < b.size(); ++l)
    if (b[l] != 0) r["b" + std::to_string(l)] = b[l];
  r["spots"] = spot_entries(h);
  return r;
}

std::pair<int, int> pick_h3(const SimplicialComplex& k, const std::string& cls) {
  const auto basis = h3_basis(k);
  if (basis.empty()) fail(ErrorKind::NotFound, "H^3 is zero: the complex has no missing edges");
  if (cls.empty()) return basis.front();
  const auto f = parse_facet_list(cls, k.m());
  if (f.size() != 2) throw UsageError("--class expects two facets, e.g. 1,3");
  const std::pair<int, int> e{std::min(f[0], f[1]), std::max(f[0], f[1])};
  if (k.has_edge(e.first, e.second) || e.first == e.second)
    fail(ErrorKind::InvalidInput, "u_i v_j needs a non-edge {i, j}");
  return e;
}

Report cmd_zk_ann(const std::string& in, const std::string& cls, const Options& o) {
  const MomentAngleCohomology h(cli::load_complex(in), o.c());
  const auto [i, j] = pick_h3(h.complex(), cls);
  Report r;
  r["m"] = h.m();
  r["coeffs"] = std::string(to_string(o.c()));
  r["class"] = one_based(std::vector<int>{i, j});
  r["total_dimension"] = h.total_dimension();
  r["annihilator_dim"] = annihilator_dim(h, h3_class(h, i, j));
  return r;
}

Report cmd_h3prod(const std::string& in, const Options& o) {
  const SimplePolytope p = cli::load_polytope(in);
  const MomentAngleCohomology h(dual_complex(p), o.c());
  const auto basis = h3_basis(h.complex());
  std::vector<RingElement> classes;
  for (const auto& [i, j] : basis) classes.push_back(h3_class(h, i, j));
  Report nonzero = Report::array();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (!h.cup_product(classes[a], classes[b]).is_zero())
        nonzero.push_back({one_based(std::vector<int>{basis[a].first, basis[a].second}),
                           one_based(std::vector<int>{basis[b].first, basis[b].second})});
  Report r;
  r["m"] = p.m();
  r["h3_dim"] = static_cast<long>(basis.size());
  r["square_trivial"] = nonzero.empty();
  r["nonzero_products"] = nonzero;
  return r;
}

Report cmd_colourings(const std::string& in) {
  const SimplePolytope p = cli::load_polytope(in);
  const auto reps = colouring_class_representatives(p);
  Report r;
  r["m"] = p.m();
  r["colourings"] = static_cast<long>(enumerate_colourings(p).size());
  r["classes"] = static_cast<long>(reps.size());
  Report list = Report::array();
  for (const auto& chi : reps) list.push_back(one_based(chi));
  r["representatives"] = list;
  return r;
}

Report cmd_charlift(const std::string& base_in, const std::string& mat_in) {
  const CombinatorialBase base = cli::load_base(base_in);
  const CharMatrix l2 = cli::load_matrix(mat_in, base, Coefficients::Z2);
  const CharMatrix l = lift_mod2(base, l2);
  Report r;
  r["lift"] = matrix_rows(l.entries);
  r["characteristic"] = is_characteristic(base, l).ok;
  return r;
}

Report cmd_char_enum(const std::string& in) {
  const SimplePolytope p = cli::load_polytope(in);
  const CharZ2Census census = enumerate_char_z2(p);
  Report r;
  r["m"] = p.m();
  r["count"] = census.count;
  r["classes"] = census.classes;
  return r;
}

struct PairInput {
  CombinatorialBase base;
  CharMatrix lambda;
};

PairInput load_pair(const std::string& base_in, const std::string& mat_in, Coefficients c) {
  PairInput in{cli::load_base(base_in), {}};
  in.lambda = cli::load_matrix(mat_in, in.base, c);
  return in;
}

Report cmd_pair_equiv(const std::vector<std::string>& a, const Options& o) {
  const PairInput x = load_pair(a[0], a[1], o.c());
  const PairInput y = load_pair(a[2], a[3], o.c());
  const auto w = pairs_equivalent(x.base, x.lambda, y.base, y.lambda);
  Report r;
  r["equivalent"] = w.has_value();
  if (w) {
    r["sigma"] = one_based(w->sigma);
    r["A"] = matrix_rows(w->a);
    r["signs"] = w->signs;
  }
  return r;
}

Report evaluation_table(const ToricRing& ring) {
  Report table = Report::array();
  for (const auto& [facets, value] : ring.evaluation) {
    Report e;
    e["facets"] = one_based(facets);
    e["value"] = value;
    table.push_back(e);
  }
  return table;
}

Report cmd_qt_ring(const std::string& base_in, const std::string& mat_in) {
  const PairInput x = load_pair(base_in, mat_in, Coefficients::Z);
  const QtRing ring = qt_ring(x.base, x.lambda);
  const CharacteristicClasses cls = pontryagin_w(ring);
  Report r;
  r["n"] = ring.n();
  r["m"] = ring.m();
  r["base_vertex"] = one_based(ring.base_vertex);
  r["free_facets"] = one_based(ring.free_facets);
  if (cls.p1_number) r["p1_number"] = *cls.p1_number;
  if (!cls.p1_pairing.empty()) r["p1_pairing"] = cls.p1_pairing;
  r["w_top"] = cls.w_top;
  r["evaluation"] = evaluation_table(ring);
  return r;
}

IsoMode parse_mode(const std::string& s) {
  if (s == "pair") return IsoMode::PairEquivalence;
  if (s == "generator") return IsoMode::GeneratorRestricted;
  return IsoMode::Lattice;
}

Report iso_report(const RingIsoResult& res) {
  Report r;
  r["isomorphic"] = res.isomorphic;
  r["mode"] = to_string(res.mode);
  r["conclusive"] = res.conclusive;
  if (res.pair) {
    r["sigma"] = one_based(res.pair->sigma);
    r["A"] = matrix_rows(res.pair->a);
    r["signs"] = res.pair->signs;
  }
  if (res.generator) {
    r["sigma"] = one_based(res.generator->sigma);
    r["signs"] = res.generator->signs;
    r["orientation"] = res.generator->orientation;
  }
  if (res.lattice) r["lattice_map"] = matrix_rows(*res.lattice);
  return r;
}

Report cmd_qt_iso(const std::vector<std::string>& a, const std::string& mode) {
  const PairInput x = load_pair(a[0], a[1], Coefficients::Z);
  const PairInput y = load_pair(a[2], a[3], Coefficients::Z);
  return iso_report(ring_isomorphic(qt_ring(x.base, x.lambda), qt_ring(y.base, y.lambda), parse_mode(mode)));
}

Report cmd_sc_iso(const std::vector<std::string>& a) {
  const PairInput x = load_pair(a[0], a[1], Coefficients::Z2);
  const PairInput y = load_pair(a[2], a[3], Coefficients::Z2);
  return iso_report(sc_isomorphic(sc_ring(x.base, x.lambda), sc_ring(y.base, y.lambda)));
}

Report cmd_surface_homology(const std::string& in, const std::string& facets) {
  const SimplePolytope p = cli::load_polytope(in);
  Mask s = 0;
  for (int f : parse_facet_list(facets, p.m())) s |= bit(f);
  if (s == 0) throw UsageError("--facets needs at least one facet");
  const SurfacePieceHomology h = surface_piece_homology(p, s);
  Report r;
  r["facets"] = one_based(s);
  r["H2_hat_rank"] = h.r2;
  r["H1_rank"] = h.r1;
  r["H0_rank"] = h.r0;
  Report comps = Report::array();
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    Report c;
    c["facets"] = one_based(h.components[i]);
    c["boundary_cycles"] = h.boundary_cycles[i];
    comps.push_back(c);
  }
  r["components"] = comps;
  return r;
}

void print_error(const std::string& kind, const std::string& message) {
  Report e;
  e["error"] = kind;
  e["message"] = message;
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial rigidity toolkit for simple 3-polytopes and toric spaces"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON instead of text");
  app.add_option("--coeffs", opt.coeffs, "Coefficient ring")->check(CLI::IsMember({"z", "z2"}))->capture_default_str();

  std::function<Report()> run;
  std::string input, cls, facets, mode = "pair";
  std::vector<std::string> inputs;
  int length = 0;
  bool construct_json = false;

  auto one_input = [&](const std::string& name, const std::string& desc, std::function<Report()> body) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("input", input, "File path or catalog:<expression>")->required();
    sub->callback([&run, body] { run = body; });
    return sub;
  };
  auto four_inputs = [&](const std::string& name, const std::string& desc, std::function<Report()> body) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("inputs", inputs, "baseA matrixA baseB matrixB")->required()->expected(4);
    sub->callback([&run, body] { run = body; });
    return sub;
  };

  one_input("validate", "Parse a file and report its invariants", [&] { return cmd_validate(input, opt); });
  {
    auto* sub = app.add_subcommand("catalog", "List catalog expressions or summarize the given ones");
    sub->add_option("expressions", inputs, "Catalog expressions");
    sub->callback([&] { run = [&] { return cmd_catalog(inputs); }; });
  }
  one_input("belts", "Enumerate belts", [&] { return cmd_belts(input, length); })
      ->add_option("--length", length, "Only belts of this length (0: all)");
  one_input("pogorelov", "Decide flagness and the Pogorelov class", [&] { return cmd_pogorelov(input); });
  {
    auto* sub = app.add_subcommand("construct", "Build a polytope from a catalog expression");
    sub->add_option("expression", input, "Catalog expression")->required();
    sub->add_flag("--as-json", construct_json, "Embed the JSON polytope format instead of text");
    sub->callback([&] { run = [&] { return cmd_construct(input, construct_json); }; });
  }
  one_input("zk-betti", "Betti numbers and bigraded ranks of the moment-angle manifold",
            [&] { return cmd_zk_betti(input, opt); });
  one_input("zk-ann", "Annihilator dimension of a degree-3 class", [&] { return cmd_zk_ann(input, cls, opt); })
      ->add_option("--class", cls, "Non-edge i,j selecting u_i v_j (default: first)");
  one_input("h3prod", "Products of degree-3 classes", [&] { return cmd_h3prod(input, opt); });
  one_input("colourings", "Proper 4-colourings up to symmetry", [&] { return cmd_colourings(input); });
  {
    auto* sub = app.add_subcommand("charlift", "Lift a Z2 characteristic matrix to Z");
    sub->add_option("inputs", inputs, "base matrix")->required()->expected(2);
    sub->callback([&] { run = [&] { return cmd_charlift(inputs[0], inputs[1]); }; });
  }
  one_input("char-enum", "Count Z2 characteristic matrices", [&] { return cmd_char_enum(input); });
  four_inputs("pair-equiv", "Decide equivalence of characteristic pairs", [&] { return cmd_pair_equiv(inputs, opt); });
  {
    auto* sub = app.add_subcommand("qt-ring", "Cohomology ring of a quasitoric manifold");
    sub->add_option("inputs", inputs, "base matrix")->required()->expected(2);
    sub->callback([&] { run = [&] { return cmd_qt_ring(inputs[0], inputs[1]); }; });
  }
  four_inputs("qt-iso", "Decide isomorphism of quasitoric cohomology rings", [&] { return cmd_qt_iso(inputs, mode); })
      ->add_option("--mode", mode, "pair | generator | lattice")
      ->check(CLI::IsMember({"pair", "generator", "lattice"}))
      ->capture_default_str();
  four_inputs("sc-iso", "Decide isomorphism of small cover cohomology rings", [&] { return cmd_sc_iso(inputs); });
  one_input("surface-homology", "Homology of the surface piece spanned by facets",
            [&] { return cmd_surface_homology(input, facets); })
      ->add_option("--facets", facets, "Comma-separated facets, e.g. 1,2,5")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return 2;
  }

  try {
    const Report r = run();
    std::cout << (opt.json ? r.dump(2) + "\n" : cli::render_text(r));
    return 0;
  } catch (const UsageError& e) {
    print_error("UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    print_error(std::string(to_string(e.kind())), e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    print_error("UsageError", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    print_error("UsageError", e.what());
    return 2;
  }
}
