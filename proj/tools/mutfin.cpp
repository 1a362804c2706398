// Command line front end. All vertex indices on the command line and in JSON
// output are 1-based.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mutfin/io.hpp"
#include "mutfin/quivers.hpp"
#include "mutfin/unfolding.hpp"

using namespace mutfin;
using nlohmann::json;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCaps = 3;

ExchangeMatrix load_matrix(const std::string& path) {
  if (path == "-") return parse_matrix_file(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return parse_matrix_file(in);
}

std::vector<std::int64_t> parse_csv(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoll(item));
  return out;
}

int exit_code(const Error& e) {
  if (e.code() == Errc::ParseError) return kExitParse;
  return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exchange matrix mutation toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "fix randomized tie-breaking (results are seed-independent)");

  std::string in_path = "-";
  std::vector<int> seq;
  std::string bspec, fixture = "rank2_d14";
  int genus = 0, punctures = 0;
  std::string boundary = "1";

  auto* c_mutate = app.add_subcommand("mutate", "apply a mutation sequence");
  c_mutate->add_option("file", in_path, "matrix file, - for stdin");
  c_mutate->add_option("-k,--at", seq, "1-based mutation indices, in order")->required();

  auto* c_class = app.add_subcommand("class", "enumerate the mutation class");
  c_class->add_option("file", in_path);

  auto* c_finite = app.add_subcommand("finite", "test mutation finiteness");
  c_finite->add_option("file", in_path);

  auto* c_classify = app.add_subcommand("classify", "name the mutation class");
  c_classify->add_option("file", in_path);

  auto* c_adm = app.add_subcommand("admissible", "decide coefficient admissibility");
  c_adm->add_option("file", in_path);
  c_adm->add_option("-b", bspec, "coefficient vector b1,b2,... appended as a frozen row");

  auto* c_std = app.add_subcommand("standard", "standard quiver of a surface");
  c_std->add_option("--genus", genus)->required();
  c_std->add_option("--boundary", boundary, "marked points per component, outer first")->required();
  c_std->add_option("--punctures", punctures);
  c_std->add_option("-b", bspec, "evaluate the closed-form predicate on b");

  auto* c_unfold = app.add_subcommand("unfold", "extend a canned unfolding fixture");
  c_unfold->add_option("--fixture", fixture, "rank2_d14|g2_affine|f4_affine|b_affine|c_affine");
  c_unfold->add_option("-b", bspec, "base coefficient vector to lift")->required();

  auto* c_dot = app.add_subcommand("export-dot", "write the quiver in DOT format");
  c_dot->add_option("file", in_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_mutate) {
      auto m = load_matrix(in_path);
      for (int k : seq) m = m.mutate(k - 1);
      std::cout << print_matrix_file(m);
    } else if (*c_class) {
      auto cls = enumerate_class(load_matrix(in_path));
      json j{{"members", cls.size()}, {"caps_hit", !cls.complete}};
      std::cout << j.dump() << "\n";
      if (!cls.complete) return kExitCaps;
    } else if (*c_finite) {
      auto r = is_mutation_finite_mutable(load_matrix(in_path));
      json j{{"finite", r.finite}, {"caps_hit", r.capped}};
      if (r.finite) j["members"] = r.cls->size();
      std::cout << j.dump() << "\n";
      if (r.capped) return kExitCaps;
    } else if (*c_classify) {
      auto l = classify(load_matrix(in_path));
      std::cout << label_json(l).dump() << "\n";
      if (l.kind == TypeLabel::Undecided) return kExitCaps;
    } else if (*c_adm) {
      auto m = load_matrix(in_path);
      if (!bspec.empty()) m = m.with_coefficients(parse_csv(bspec));
      if (m.num_frozen() == 0)
        throw Error(Errc::DimensionMismatch, "no coefficient row: pass -b or a file with frozen rows");
      auto v = decide_admissible(m);
      std::cout << verdict_json(v).dump() << "\n";
      if (v.kind == Verdict::Undecided) return kExitCaps;
    } else if (*c_std) {
      SurfaceSpec spec;
      spec.genus = genus;
      spec.punctures = punctures;
      for (auto c : parse_csv(boundary)) spec.boundary.push_back(static_cast<int>(c));
      auto [t, meta] = standard_triangulation(spec);
      json j;
      j["arcs"] = t.num_arcs;
      j["matrix_file"] = print_matrix_file(meta.matrix);
      j["labels"] = std::vector<std::string>(t.labels.begin(), t.labels.begin() + t.num_arcs);
      j["v1"] = meta.v1 + 1;
      j["v2"] = meta.v2 + 1;
      auto up = [](const std::vector<int>& v) {
        std::vector<int> o;
        for (int i : v) o.push_back(i + 1);
        return o;
      };
      j["I"] = up(meta.I);
      j["I_in"] = up(meta.I_in);
      j["I_out"] = up(meta.I_out);
      if (!bspec.empty()) j["admissible"] = standard_admissible(meta, parse_csv(bspec));
      std::cout << j.dump() << "\n";
    } else if (*c_unfold) {
      UnfoldingSpec u = [&] {
        if (fixture == "rank2_d14") return unfoldings::rank2_d14();
        if (fixture == "g2_affine") return unfoldings::g2_affine();
        if (fixture == "f4_affine") return unfoldings::f4_affine();
        if (fixture == "b_affine") return unfoldings::b_affine();
        if (fixture == "c_affine") return unfoldings::c_affine();
        throw Error(Errc::ParseError, "unknown fixture " + fixture);
      }();
      validate_unfolding(u);
      std::cout << print_matrix_file(unfold_extended(u, parse_csv(bspec)));
    } else if (*c_dot) {
      std::cout << to_dot(load_matrix(in_path));
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
