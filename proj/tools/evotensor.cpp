// evotensor: exact construction, analysis, tensor multiplication, and
// classification of finite-dimensional evolution algebras given by their
// structure matrices.
//
// Subcommands: analyze, kron, decompose, classify, graph.
// Exit codes: 0 success, 2 parse error, 3 precondition violation.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evo/classify.hpp"
#include "evo/decompose.hpp"
#include "evo/evolution.hpp"
#include "evo/graph.hpp"
#include "evo/io.hpp"

namespace {

using nlohmann::json;

const char* yn(bool b) { return b ? "yes" : "no"; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string indices_str(const std::vector<int>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

evo::EvoAlg load_evolution(const std::string& path) {
  return evo::parse_evolution(evo::read_input(path));
}

std::vector<std::string> labels_of(const evo::EvoAlg& e) {
  return e.labels().empty() ? evo::default_labels(e.dim()) : e.labels();
}

int orbit_guard(int max_dim_flag) {
  if (const char* env = std::getenv("EVOTENSOR_MAX_ORBIT")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw std::invalid_argument("EVOTENSOR_MAX_ORBIT must be an integer");
    }
  }
  return max_dim_flag;
}

void print_witness_text(const evo::Witness& w) {
  std::cout << "witness permutation:";
  for (int i = 0; i < w.sigma.size(); ++i) std::cout << ' ' << w.sigma(i);
  std::cout << "\nwitness split: left " << w.k << "x" << w.k << ", right "
            << w.n << "x" << w.n << '\n';
  std::cout << "changed matrix:\n" << evo::matrix_to_text(w.changed);
  std::cout << "left factor:\n" << evo::matrix_to_text(w.left);
  std::cout << "right factor:\n" << evo::matrix_to_text(w.right);
}

int run_analyze(const evo::EvoAlg& e, bool as_json) {
  const evo::Mat& m = e.matrix();
  const bool perfect = evo::is_perfect(e);
  const bool nondeg = evo::is_nondegenerate(e);
  const std::vector<int> ann = evo::annihilator(e);
  const evo::ZeroProfile prof = evo::zero_profile(m);
  const evo::Digraph g = evo::support_graph(e);
  const int stab = evo::stabilizing_index(g.adj);
  const bool sc = evo::is_strongly_connected(g);
  std::optional<bool> simple;
  if (perfect) simple = evo::is_simple(e);
  std::optional<int> per;
  if (sc && g.adj.any()) per = evo::period(g);

  if (as_json) {
    json j;
    j["dim"] = e.dim();
    j["matrix"] = evo::matrix_to_json(m);
    j["labels"] = labels_of(e);
    j["perfect"] = perfect;
    j["nondegenerate"] = nondeg;
    j["annihilator"] = ann;
    j["profile"] = evo::profile_to_json(prof);
    j["stabilizing_index"] = stab;
    j["strongly_connected"] = sc;
    j["simple"] = simple ? json(*simple) : json(nullptr);
    j["period"] = per ? json(*per) : json(nullptr);
    emit(j);
    return 0;
  }
  std::cout << "dim: " << e.dim() << '\n';
  std::cout << "perfect: " << yn(perfect) << '\n';
  std::cout << "nondegenerate: " << yn(nondeg) << '\n';
  std::cout << "annihilator indices: " << indices_str(ann) << '\n';
  std::cout << "zero profile: z=" << prof.z << ", z_d=" << prof.z_d
            << ", z_c=" << prof.z_c << ", z_r=" << prof.z_r
            << ", rank=" << prof.rank << '\n';
  std::cout << "stabilizing index: " << stab << '\n';
  std::cout << "strongly connected: " << yn(sc) << '\n';
  if (simple)
    std::cout << "simple: " << yn(*simple) << '\n';
  else
    std::cout << "simple: n/a (not perfect)\n";
  if (per)
    std::cout << "period: " << *per << '\n';
  else
    std::cout << "period: n/a (not strongly connected)\n";
  return 0;
}

int run_kron(const evo::EvoAlg& a, const evo::EvoAlg& b, bool as_json) {
  const evo::EvoAlg p = evo::tensor_evolution(a, b);
  const int m2 = b.dim();

  const bool perfect_direct = evo::is_perfect(p);
  const bool perfect_derived = evo::is_perfect(a) && evo::is_perfect(b);
  const bool nondeg_direct = evo::is_nondegenerate(p);
  const bool nondeg_derived =
      evo::is_nondegenerate(a) && evo::is_nondegenerate(b);
  const std::vector<int> ann_a = evo::annihilator(a);
  const std::vector<int> ann_b = evo::annihilator(b);
  std::vector<int> ann_derived;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      const bool ia = std::find(ann_a.begin(), ann_a.end(), i) != ann_a.end();
      const bool jb = std::find(ann_b.begin(), ann_b.end(), j) != ann_b.end();
      if (ia || jb) ann_derived.push_back(i * m2 + j);
    }
  const std::vector<int> ann_direct = evo::annihilator(p);
  const bool consistent = perfect_direct == perfect_derived &&
                          nondeg_direct == nondeg_derived &&
                          ann_direct == ann_derived;

  if (as_json) {
    json j = evo::evolution_to_json(p);
    j["dim"] = p.dim();
    j["perfect"] = perfect_direct;
    j["nondegenerate"] = nondeg_direct;
    j["annihilator"] = ann_direct;
    j["transfer_consistent"] = consistent;
    emit(j);
    return 0;
  }
  std::cout << evo::matrix_to_text(p.matrix());
  std::cout << "dim: " << p.dim() << '\n';
  std::cout << "perfect: " << yn(perfect_direct) << '\n';
  std::cout << "nondegenerate: " << yn(nondeg_direct) << '\n';
  std::cout << "annihilator indices: " << indices_str(ann_direct) << '\n';
  std::cout << "transfer check (derived from factors vs direct): "
            << (consistent ? "consistent" : "INCONSISTENT") << '\n';
  return 0;
}

int run_decompose(const evo::EvoAlg& e,
                  const std::optional<std::pair<int, int>>& split, int guard,
                  bool as_json) {
  const int dim = e.dim();
  int n = 2, k = 2;
  if (split) {
    n = split->first;
    k = split->second;
    if (n * k != dim)
      throw std::invalid_argument(
          "--split " + std::to_string(n) + "," + std::to_string(k) +
          " does not match dimension " + std::to_string(dim));
  } else if (dim != 4) {
    throw std::invalid_argument(
        "--split n,k is required for dimension " + std::to_string(dim));
  }
  if (dim > guard)
    throw std::invalid_argument(
        "dimension " + std::to_string(dim) +
        " exceeds the orbit-search guard (" + std::to_string(guard) +
        "); raise --max-dim or set EVOTENSOR_MAX_ORBIT");
  if (!evo::is_perfect(e))
    throw std::invalid_argument(
        "decompose requires a perfect algebra (invertible structure matrix)");

  const evo::ZeroProfile prof = evo::zero_profile(e.matrix());
  std::optional<evo::Screen> scr;
  if (dim == 4 && n == 2 && k == 2) scr = evo::screen(e.matrix());
  const int ex_rank = evo::rank(evo::extended_matrix(e.matrix(), n, k));

  std::optional<evo::Witness> w;
  const bool search = !scr || scr->passes();
  if (search) w = evo::orbit_search(e, n, k);

  if (as_json) {
    json reasons = json::array();
    if (scr)
      for (evo::ScreenReason r : scr->violations)
        reasons.push_back(evo::screen_reason_text(r, scr->profile));
    json j;
    j["dim"] = dim;
    j["split"] = json::array({n, k});
    j["profile"] = evo::profile_to_json(prof);
    j["screen"] = std::move(reasons);
    j["screen_passes"] = search;
    j["extended_rank"] = ex_rank;
    j["witness"] = w ? evo::witness_to_json(*w) : json(nullptr);
    j["decomposable"] = w.has_value();
    emit(j);
    return 0;
  }
  std::cout << "dim: " << dim << " (left " << k << "x" << k << ", right " << n
            << "x" << n << ")\n";
  std::cout << "zero profile: z=" << prof.z << ", z_d=" << prof.z_d
            << ", z_c=" << prof.z_c << ", z_r=" << prof.z_r
            << ", rank=" << prof.rank << '\n';
  if (scr) {
    if (scr->passes()) {
      std::cout << "screen: passes\n";
    } else {
      for (evo::ScreenReason r : scr->violations)
        std::cout << "screen: " << evo::screen_reason_text(r, scr->profile)
                  << '\n';
    }
  }
  std::cout << "extended matrix rank (identity basis): " << ex_rank << '\n';
  if (w) {
    std::cout << "decomposable: yes\n";
    print_witness_text(*w);
  } else if (search) {
    std::cout << "decomposable: no (permutation orbit exhausted)\n";
  } else {
    std::cout << "decomposable: no (screened out)\n";
  }
  return 0;
}

int run_classify(const evo::EvoAlg& e, bool as_json) {
  const evo::Report r = evo::classify(e);
  if (as_json) {
    emit(evo::report_to_json(r));
    return 0;
  }
  std::cout << "perfect: " << yn(r.perfect) << '\n';
  if (r.inv) {
    std::cout << "z: " << r.inv->z << ", z_d: " << r.inv->z_d
              << ", simple: " << yn(r.inv->simple) << '\n';
    std::cout << "p_c: " << r.inv->p_c.str() << '\n';
    std::cout << "p_m: " << r.inv->p_m.str() << '\n';
  }
  if (r.screen_result) {
    if (r.screen_result->passes()) {
      std::cout << "screen: passes\n";
    } else {
      for (evo::ScreenReason v : r.screen_result->violations)
        std::cout << "screen: "
                  << evo::screen_reason_text(v, r.screen_result->profile)
                  << '\n';
    }
    std::cout << "candidate families: ";
    if (r.candidates.empty()) {
      std::cout << "none\n";
    } else {
      for (size_t i = 0; i < r.candidates.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << evo::family_name(r.candidates[i]);
      }
      std::cout << '\n';
    }
  }
  std::cout << "verdict: " << evo::verdict_name(r.verdict) << '\n';
  if (r.witness) print_witness_text(*r.witness);
  if (r.confirmed)
    std::cout << "confirmed family: " << evo::family_name(*r.confirmed)
              << '\n';
  return 0;
}

int run_graph(const evo::EvoAlg& e, bool as_json) {
  const evo::Digraph g = evo::support_graph(e);
  if (as_json) {
    emit(evo::digraph_to_json(g));
    return 0;
  }
  std::cout << evo::to_dot(g, labels_of(e));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "evotensor: exact analysis, tensor products, and classification of "
      "evolution algebras via structure matrices"};
  app.require_subcommand(1);

  bool as_json = false;
  int max_dim = 9;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--max-dim", max_dim,
                 "orbit-search dimension guard (n! permutations are scanned)")
      ->capture_default_str();

  std::string in_analyze = "-";
  std::string in_kron_a;
  std::string in_kron_b;
  std::string in_decompose = "-";
  std::string in_classify = "-";
  std::string in_graph = "-";
  std::string split_text;

  CLI::App* c_an = app.add_subcommand(
      "analyze", "predicates, annihilator, zero profile, graph facts");
  c_an->add_option("input", in_analyze, "matrix file, or - for stdin");
  c_an->fallthrough();

  CLI::App* c_kr =
      app.add_subcommand("kron", "tensor product of two evolution algebras");
  c_kr->add_option("a", in_kron_a, "left factor file, or - for stdin")
      ->required();
  c_kr->add_option("b", in_kron_b, "right factor file")->required();
  c_kr->fallthrough();

  CLI::App* c_de = app.add_subcommand(
      "decompose", "screening and permutation-orbit Kronecker factorization");
  c_de->add_option("input", in_decompose, "matrix file, or - for stdin");
  c_de->add_option("--split", split_text,
                   "block split n,k: view as k x k grid of n x n blocks");
  c_de->fallthrough();

  CLI::App* c_cl = app.add_subcommand(
      "classify", "13-family classification of 4x4 perfect algebras");
  c_cl->add_option("input", in_classify, "matrix file, or - for stdin");
  c_cl->fallthrough();

  CLI::App* c_gr = app.add_subcommand(
      "graph", "associated digraph as DOT, or JSON adjacency with --json");
  c_gr->add_option("input", in_graph, "matrix file, or - for stdin");
  c_gr->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<std::pair<int, int>> split;
    if (!split_text.empty()) {
      int n = 0, k = 0;
      char extra = 0;
      if (std::sscanf(split_text.c_str(), "%d,%d%c", &n, &k, &extra) != 2 ||
          n < 1 || k < 1)
        throw evo::parse_error("--split expects n,k (two positive integers)");
      split = std::make_pair(n, k);
    }
    if (c_an->parsed()) return run_analyze(load_evolution(in_analyze), as_json);
    if (c_kr->parsed())
      return run_kron(load_evolution(in_kron_a), load_evolution(in_kron_b),
                      as_json);
    if (c_de->parsed())
      return run_decompose(load_evolution(in_decompose), split,
                           orbit_guard(max_dim), as_json);
    if (c_cl->parsed())
      return run_classify(load_evolution(in_classify), as_json);
    if (c_gr->parsed()) return run_graph(load_evolution(in_graph), as_json);
  } catch (const evo::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
