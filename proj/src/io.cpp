#include "evo/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace evo {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return rat_of(v.get<long>());
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw parse_error("entries must be integers or \"p/q\" strings");
}

json rat_to_json(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return json(q.get_num().get_si());
  return json(rat_str(q));
}

Mat matrix_from_rows(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw parse_error("matrix must be a nonempty array of rows");
  if (!rows[0].is_array() || rows[0].empty())
    throw parse_error("matrix rows must be nonempty arrays");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
      throw parse_error("matrix rows must all have the same length");
    for (int j = 0; j < c; ++j) m.at(i, j) = rat_from_json(rows[i][j]);
  }
  return m;
}

std::vector<std::string> labels_from_json(const json& j, int dim) {
  if (!j.contains("labels") || j.at("labels").is_null()) return {};
  const json& ls = j.at("labels");
  if (!ls.is_array() || static_cast<int>(ls.size()) != dim)
    throw parse_error("labels must be an array matching the dimension");
  std::vector<std::string> out;
  for (const json& l : ls) {
    if (!l.is_string()) throw parse_error("labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

json families_to_json(const std::vector<Family>& fs) {
  json arr = json::array();
  for (Family f : fs) arr.push_back(family_name(f));
  return arr;
}

}  // namespace

Mat parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Rat> row;
    std::string tok;
    while (fields >> tok) row.push_back(rat_parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("no matrix rows found");
  const size_t c = rows[0].size();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(c));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw parse_error("matrix rows must all have the same length");
    for (size_t j = 0; j < c; ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

Mat parse_matrix_json(const nlohmann::json& j) {
  if (j.is_array()) return matrix_from_rows(j);
  if (j.is_object() && j.contains("matrix"))
    return matrix_from_rows(j.at("matrix"));
  throw parse_error("expected {\"matrix\": [[...]]} or a bare array of rows");
}

EvoAlg parse_evolution(const std::string& content) {
  size_t i = 0;
  while (i < content.size() &&
         std::isspace(static_cast<unsigned char>(content[i])))
    ++i;
  Mat m;
  std::vector<std::string> labels;
  if (i < content.size() && (content[i] == '{' || content[i] == '[')) {
    json j;
    try {
      j = json::parse(content);
    } catch (const json::parse_error& e) {
      throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    m = parse_matrix_json(j);
    if (j.is_object()) labels = labels_from_json(j, m.rows());
  } else {
    m = parse_matrix_text(content);
  }
  if (!m.is_square())
    throw std::invalid_argument("structure matrix must be square");
  return EvoAlg(std::move(m), std::move(labels));
}

std::string matrix_to_text(const Mat& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << rat_str(m.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json evolution_to_json(const EvoAlg& e) {
  json j;
  j["matrix"] = matrix_to_json(e.matrix());
  j["labels"] = e.labels().empty() ? default_labels(e.dim()) : e.labels();
  return j;
}

Algebra parse_algebra_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("constants"))
    throw parse_error("expected {\"dim\": n, \"constants\": [[[...]]]}");
  if (!j.at("dim").is_number_integer())
    throw parse_error("\"dim\" must be an integer");
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw parse_error("\"dim\" must be positive");
  const json& c = j.at("constants");
  if (!c.is_array() || static_cast<int>(c.size()) != n)
    throw parse_error("\"constants\" must be a dim^3 nested array");
  std::vector<Rat> flat;
  flat.reserve(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    if (!c[i].is_array() || static_cast<int>(c[i].size()) != n)
      throw parse_error("\"constants\" must be a dim^3 nested array");
    for (int jj = 0; jj < n; ++jj) {
      const json& row = c[i][jj];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw parse_error("\"constants\" must be a dim^3 nested array");
      for (int k = 0; k < n; ++k) flat.push_back(rat_from_json(row[k]));
    }
  }
  return Algebra(n, std::move(flat), labels_from_json(j, n));
}

nlohmann::json algebra_to_json(const Algebra& a) {
  const int n = a.dim();
  json c = json::array();
  for (int i = 0; i < n; ++i) {
    json ci = json::array();
    for (int j = 0; j < n; ++j) {
      json cij = json::array();
      for (int k = 0; k < n; ++k) cij.push_back(rat_to_json(a.c(i, j, k)));
      ci.push_back(std::move(cij));
    }
    c.push_back(std::move(ci));
  }
  json j;
  j["dim"] = n;
  j["constants"] = std::move(c);
  j["labels"] = a.labels().empty() ? default_labels(n) : a.labels();
  return j;
}

nlohmann::json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(rat_str(c));
  return arr;
}

nlohmann::json profile_to_json(const ZeroProfile& p) {
  return json{{"z", p.z},
              {"z_d", p.z_d},
              {"z_c", p.z_c},
              {"z_r", p.z_r},
              {"rank", p.rank}};
}

nlohmann::json witness_to_json(const Witness& w) {
  json sigma = json::array();
  for (int i = 0; i < w.sigma.size(); ++i) sigma.push_back(w.sigma(i));
  json scales = json::array();
  for (const Rat& s : w.scales) scales.push_back(rat_to_json(s));
  json j;
  j["sigma"] = std::move(sigma);
  j["scales"] = std::move(scales);
  j["split"] = json::array({w.n, w.k});
  j["changed"] = matrix_to_json(w.changed);
  j["left"] = matrix_to_json(w.left);
  j["right"] = matrix_to_json(w.right);
  return j;
}

nlohmann::json screen_to_json(const Screen& s) {
  json reasons = json::array();
  for (ScreenReason r : s.violations)
    reasons.push_back(screen_reason_text(r, s.profile));
  json j;
  j["profile"] = profile_to_json(s.profile);
  j["violations"] = std::move(reasons);
  j["passes"] = s.passes();
  return j;
}

nlohmann::json report_to_json(const Report& r) {
  json j;
  j["perfect"] = r.perfect;
  j["verdict"] = verdict_name(r.verdict);
  if (r.inv) {
    j["invariants"] = json{{"z", r.inv->z},
                           {"z_d", r.inv->z_d},
                           {"simple", r.inv->simple},
                           {"p_c", poly_to_json(r.inv->p_c)},
                           {"p_c_text", r.inv->p_c.str()},
                           {"p_m", poly_to_json(r.inv->p_m)},
                           {"p_m_text", r.inv->p_m.str()}};
  } else {
    j["invariants"] = nullptr;
  }
  json reasons = json::array();
  if (r.screen_result) {
    for (ScreenReason v : r.screen_result->violations)
      reasons.push_back(screen_reason_text(v, r.screen_result->profile));
    j["profile"] = profile_to_json(r.screen_result->profile);
  } else {
    j["profile"] = nullptr;
  }
  j["screen"] = std::move(reasons);
  j["candidates"] = families_to_json(r.candidates);
  j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  j["confirmed"] =
      r.confirmed ? json(family_name(*r.confirmed)) : json(nullptr);
  return j;
}

nlohmann::json digraph_to_json(const Digraph& g) {
  json adj = json::array();
  for (int i = 0; i < g.size(); ++i) {
    json out = json::array();
    for (int j = 0; j < g.size(); ++j)
      if (g.adj.get(i, j)) out.push_back(j);
    adj.push_back(std::move(out));
  }
  json j;
  j["size"] = g.size();
  j["adjacency"] = std::move(adj);
  return j;
}

std::string read_input(const std::string& path_or_dash) {
  if (path_or_dash == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path_or_dash, std::ios::binary);
  if (!in) throw parse_error("cannot read input file: " + path_or_dash);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace evo
