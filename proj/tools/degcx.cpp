#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "degcx/cohomology.hpp"
#include "degcx/io.hpp"
#include "degcx/primes.hpp"
#include "degcx/verify.hpp"

namespace {

using namespace degcx;

std::vector<MonomialIdeal> load_ideals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<MonomialIdeal> ideals = parse_ideal_lines(buf.str());
  if (ideals.empty()) throw std::runtime_error("no ideals in '" + path + "'");
  return ideals;
}

MonomialIdeal load_single(const std::string& path) {
  std::vector<MonomialIdeal> ideals = load_ideals(path);
  if (ideals.size() != 1)
    throw std::runtime_error("expected exactly one ideal in '" + path + "'");
  return ideals[0];
}

ExponentVector gamma_for(const std::string& text, int n) {
  std::vector<int> g = parse_int_list(text);
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("--gamma needs exactly " + std::to_string(n) + " entries");
  return ExponentVector(std::move(g));
}

std::size_t lattice_cap() {
  if (const char* env = std::getenv("DEGCX_MAX_LATTICE")) {
    std::size_t idx = 0;
    unsigned long long v = std::stoull(env, &idx);
    if (idx != std::string(env).size() || v == 0)
      throw std::invalid_argument("bad DEGCX_MAX_LATTICE value");
    return static_cast<std::size_t>(v);
  }
  return kDefaultMaxLattice;
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

nlohmann::json gamma_json(const std::vector<int>& g) {
  return nlohmann::json(g);
}

struct DegreeComplexArgs {
  std::string file;
  std::string gamma;
  std::string formula;
  std::string mode = "ordinary";
  int split = 0;
  int s = 1;
  bool m2 = false;
};

int run_degree_complex(const DegreeComplexArgs& args) {
  std::vector<MonomialIdeal> ideals = load_ideals(args.file);
  const int n = ideals[0].vars();
  ExponentVector g = gamma_for(args.gamma, n);

  auto need = [&](std::size_t count) {
    if (ideals.size() != count)
      throw std::invalid_argument("this formula needs " + std::to_string(count) +
                                  " ideals in the file, got " + std::to_string(ideals.size()));
  };
  auto need_split = [&]() {
    if (args.split < 1 || args.split >= n)
      throw std::invalid_argument("--split must name a block boundary inside the ring");
    return args.split;
  };

  SimplicialComplex result = SimplicialComplex::void_complex(n);
  if (args.formula.empty()) {
    need(1);
    result = degree_complex(ideals[0], g);
  } else if (args.formula == "sum") {
    need(2);
    result = args.split > 0 ? formula_sum_disjoint(ideals[0], ideals[1], need_split(), g)
                            : formula_sum(ideals[0], ideals[1], g);
  } else if (args.formula == "intersection") {
    need(2);
    result = formula_intersection(ideals[0], ideals[1], g);
  } else if (args.formula == "product") {
    need(2);
    result = formula_product(ideals[0], ideals[1], need_split(), g);
  } else if (args.formula == "power-of-sum") {
    need(2);
    result = formula_power_of_sum(ideals[0], ideals[1], need_split(), args.s, g);
  } else if (args.formula == "symbolic-sum") {
    need(2);
    result = formula_symbolic_sum(ideals[0], ideals[1], need_split(), args.s, g);
  } else if (args.formula == "fiber") {
    need(2);
    PowerMode mode = args.mode == "symbolic" ? PowerMode::Symbolic : PowerMode::Ordinary;
    FiberProductFaces faces =
        formula_fiber_product(ideals[0], ideals[1], need_split(), args.s, mode, g);
    if (args.m2) throw std::invalid_argument("--m2 does not apply to the fiber formula");
    nlohmann::json j;
    j["n"] = n;
    j["empty_face_present"] = faces.empty_face_present;
    j["nonempty_facets"] = complex_to_json(faces.nonempty)["facets"];
    emit(j);
    return 0;
  } else if (args.formula == "mixed") {
    need(4);
    result = formula_mixed_product(ideals[0], ideals[1], ideals[2], ideals[3], need_split(), g);
  } else {
    throw std::invalid_argument("unknown formula '" + args.formula + "'");
  }

  if (args.m2)
    std::cout << complex_to_m2(result) << "\n";
  else
    emit(complex_to_json(result));
  return 0;
}

struct CohomologyArgs {
  std::string file;
  std::string gamma;
  bool scan = false;
  int p = -1;
};

int run_cohomology(const CohomologyArgs& args) {
  MonomialIdeal ideal = load_single(args.file);
  nlohmann::json out = nlohmann::json::array();
  if (args.scan) {
    CohomologyTable table = scan_cohomology(ideal, lattice_cap());
    for (const auto& [key, dim] : table.entries)
      out.push_back({{"p", key.first}, {"gamma", gamma_json(key.second)}, {"dim", dim}});
  } else {
    if (args.gamma.empty())
      throw std::invalid_argument("cohomology needs --gamma or --scan");
    ExponentVector g = gamma_for(args.gamma, ideal.vars());
    HomologyDims dims = local_cohomology_all(ideal, g);
    if (args.p >= 0) {
      out.push_back({{"p", args.p}, {"gamma", gamma_json(g.entries())}, {"dim", dim_at(dims, args.p)}});
    } else {
      for (const auto& [p, dim] : dims)
        out.push_back({{"p", p}, {"gamma", gamma_json(g.entries())}, {"dim", dim}});
    }
  }
  emit(out);
  return 0;
}

int run_extreme(const std::string& file, bool want_reg) {
  MonomialIdeal ideal = load_single(file);
  CohomologyExtreme e =
      want_reg ? reg_of_quotient(ideal, lattice_cap()) : depth_of_quotient(ideal, lattice_cap());
  nlohmann::json j;
  j[want_reg ? "reg" : "depth"] = e.value;
  if (e.zero_ideal_convention) {
    j["convention"] = "zero-ideal";
  } else {
    j["p"] = e.p;
    j["gamma"] = gamma_json(e.gamma);
  }
  emit(j);
  return 0;
}

int run_verify_cmd(const std::string& id, const VerifyOptions& opts) {
  std::vector<std::string> ids;
  if (id == "all")
    ids = verify_registry();
  else
    ids.push_back(id);

  bool all_ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const std::string& one : ids) {
    VerifyReport report = run_verify(one, opts);
    all_ok = all_ok && report.ok();
    reports.push_back(report.to_json());
  }
  emit(ids.size() == 1 ? reports[0] : reports);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree complexes and graded local cohomology of monomial ideals"};
  app.require_subcommand(1);

  DegreeComplexArgs dc;
  CLI::App* cmd_dc = app.add_subcommand("degree-complex",
                                        "facets of a degree complex (direct or by formula)");
  cmd_dc->add_option("ideal-file", dc.file, "ideal file, one ideal per line")->required();
  cmd_dc->add_option("--gamma", dc.gamma, "degree, comma-separated integers")->required();
  cmd_dc->add_option("--formula", dc.formula,
                     "sum|intersection|product|power-of-sum|symbolic-sum|fiber|mixed");
  cmd_dc->add_option("--split", dc.split, "block boundary m (variables 1..m vs m+1..n)");
  cmd_dc->add_option("--s", dc.s, "power exponent");
  cmd_dc->add_option("--mode", dc.mode, "ordinary|symbolic (fiber formula)")
      ->check(CLI::IsMember({"ordinary", "symbolic"}));
  cmd_dc->add_flag("--m2", dc.m2, "emit a Macaulay2 constructor expression");

  CohomologyArgs ch;
  CLI::App* cmd_ch = app.add_subcommand("cohomology",
                                        "graded local cohomology dimensions of the quotient");
  cmd_ch->add_option("ideal-file", ch.file)->required();
  cmd_ch->add_option("--gamma", ch.gamma, "single degree to evaluate");
  cmd_ch->add_flag("--scan", ch.scan, "scan the whole finite window");
  cmd_ch->add_option("--p", ch.p, "cohomological degree (with --gamma)");

  std::string reg_file, depth_file, symb_file, primes_file;
  int symb_s = 1;
  CLI::App* cmd_reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of the quotient");
  cmd_reg->add_option("ideal-file", reg_file)->required();
  CLI::App* cmd_depth = app.add_subcommand("depth", "depth of the quotient");
  cmd_depth->add_option("ideal-file", depth_file)->required();
  CLI::App* cmd_symb = app.add_subcommand("symbolic-power", "symbolic power of a squarefree ideal");
  cmd_symb->add_option("ideal-file", symb_file)->required();
  cmd_symb->add_option("--s", symb_s, "exponent")->required();
  CLI::App* cmd_primes = app.add_subcommand("minimal-primes", "minimal primes of a squarefree ideal");
  cmd_primes->add_option("ideal-file", primes_file)->required();

  std::string verify_id;
  VerifyOptions vopts;
  CLI::App* cmd_verify = app.add_subcommand("verify", "randomized identity checks");
  cmd_verify->add_option("id", verify_id, "registry id, alias, or 'all'")->required();
  cmd_verify->add_option("--seed", vopts.seed);
  cmd_verify->add_option("--instances", vopts.instances);
  cmd_verify->add_option("--max-n", vopts.max_n);
  cmd_verify->add_option("--max-s", vopts.max_s);
  cmd_verify->add_option("--max-degree", vopts.max_degree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_dc->parsed()) return run_degree_complex(dc);
    if (cmd_ch->parsed()) return run_cohomology(ch);
    if (cmd_reg->parsed()) return run_extreme(reg_file, true);
    if (cmd_depth->parsed()) return run_extreme(depth_file, false);
    if (cmd_symb->parsed()) {
      MonomialIdeal ideal = load_single(symb_file);
      std::cout << print_ideal(symbolic_power_ideal(ideal, symb_s)) << "\n";
      return 0;
    }
    if (cmd_primes->parsed()) {
      MonomialIdeal ideal = load_single(primes_file);
      nlohmann::json out = nlohmann::json::array();
      for (VertexSet p : minimal_primes(ideal)) {
        nlohmann::json one = nlohmann::json::array();
        for (int v : set_to_list(p)) one.push_back(v + 1);
        out.push_back(std::move(one));
      }
      emit(out);
      return 0;
    }
    if (cmd_verify->parsed()) return run_verify_cmd(verify_id, vopts);
  } catch (const ScanLimitError& e) {
    std::cerr << "error: " << e.what() << "; raise DEGCX_MAX_LATTICE to allow it\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
