#pragma once

// Text formats: matrix files, triangulation files, DOT export, JSON reports.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mutfin/admissible.hpp"
#include "mutfin/enumerate.hpp"
#include "mutfin/matrix.hpp"
#include "mutfin/surfaces.hpp"

namespace mutfin {

namespace detail {

// Strips a trailing '#' comment and surrounding whitespace.
inline std::string strip_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::int64_t> parse_ints(const std::string& s, int line_no) {
  std::istringstream in(s);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (in >> v) out.push_back(v);
  if (!in.eof())
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected integers");
  return out;
}

}  // namespace detail

// Matrix file: header "n m" (mutable columns, total rows), then m rows of n
// integers, then an optional "d: d_1 .. d_n" symmetrizer line. '#' starts a
// comment anywhere.
inline ExchangeMatrix parse_matrix_file(std::istream& in) {
  std::string raw;
  int line_no = 0;
  auto next = [&]() -> std::string {
    while (std::getline(in, raw)) {
      ++line_no;
      auto s = detail::strip_line(raw);
      if (!s.empty()) return s;
    }
    return "";
  };

  auto header = next();
  if (header.empty()) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": missing header");
  auto hv = detail::parse_ints(header, line_no);
  if (hv.size() != 2 || hv[0] < 1 || hv[1] < hv[0])
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": header must be \"n m\" with 1 <= n <= m");
  const int n = static_cast<int>(hv[0]), m = static_cast<int>(hv[1]);

  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < m; ++i) {
    auto s = next();
    if (s.empty())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(m) + " rows, got " + std::to_string(i));
    auto r = detail::parse_ints(s, line_no);
    if (static_cast<int>(r.size()) != n)
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": row has " + std::to_string(r.size()) +
                      " entries, expected " + std::to_string(n));
    rows.push_back(std::move(r));
  }

  std::optional<std::vector<std::int64_t>> d;
  auto tail = next();
  if (!tail.empty()) {
    if (tail.rfind("d:", 0) != 0)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unexpected trailing content");
    d = detail::parse_ints(tail.substr(2), line_no);
  }
  try {
    return ExchangeMatrix::create(std::move(rows), n, std::move(d));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("matrix file: ") + e.what());
  }
}

inline ExchangeMatrix parse_matrix_file(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_file(in);
}

inline std::string print_matrix_file(const ExchangeMatrix& m) {
  std::ostringstream out;
  out << m.num_mutable() << " " << m.num_rows() << "\n";
  for (int i = 0; i < m.num_rows(); ++i) {
    for (int j = 0; j < m.num_mutable(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << "\n";
  }
  out << "d:";
  for (auto v : m.symmetrizer()) out << " " << v;
  out << "\n";
  return out.str();
}

// Triangulation file: one line per triangle with three signed labels in
// cyclic order. Positive k is internal arc k, negative k is boundary segment
// k (both 1-based). '#' starts a comment.
inline Triangulation parse_triangulation_file(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::vector<std::array<std::int64_t, 3>> tris;
  int max_arc = 0, max_bd = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto s = detail::strip_line(raw);
    if (s.empty()) continue;
    auto v = detail::parse_ints(s, line_no);
    if (v.size() != 3)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": a triangle has three sides");
    for (auto x : v) {
      if (x == 0)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": labels are nonzero");
      if (x > 0) max_arc = std::max<int>(max_arc, static_cast<int>(x));
      else max_bd = std::max<int>(max_bd, static_cast<int>(-x));
    }
    tris.push_back({v[0], v[1], v[2]});
  }
  Triangulation t;
  t.num_arcs = max_arc;
  t.num_boundary = max_bd;
  for (const auto& tr : tris) {
    std::array<int, 3> sides;
    for (int k = 0; k < 3; ++k)
      sides[k] = tr[k] > 0 ? static_cast<int>(tr[k]) - 1
                           : max_arc + static_cast<int>(-tr[k]) - 1;
    t.triangles.push_back(sides);
  }
  for (int a = 1; a <= max_arc; ++a) t.labels.push_back(std::to_string(a));
  for (int b = 1; b <= max_bd; ++b) t.labels.push_back("-" + std::to_string(b));
  return t;
}

inline Triangulation parse_triangulation_file(const std::string& text) {
  std::istringstream in(text);
  return parse_triangulation_file(in);
}

// DOT export: mutable vertices as circles, frozen as boxes, each edge
// labeled with the entry pair (b_ij, -b_ji).
inline std::string to_dot(const ExchangeMatrix& m) {
  std::ostringstream out;
  out << "digraph exchange {\n";
  const int n = m.num_mutable();
  for (int i = 0; i < n; ++i)
    out << "  v" << i + 1 << " [shape=circle];\n";
  for (int r = 0; r < m.num_frozen(); ++r)
    out << "  f" << r + 1 << " [shape=box];\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto bij = m.at(i, j);
      if (bij == 0) continue;
      const int a = bij > 0 ? i : j, b = bij > 0 ? j : i;
      out << "  v" << a + 1 << " -> v" << b + 1 << " [label=\"(" << m.at(a, b) << ","
          << -m.at(b, a) << ")\"];\n";
    }
  for (int r = 0; r < m.num_frozen(); ++r)
    for (int j = 0; j < n; ++j) {
      const auto e = m.at(n + r, j);
      if (e == 0) continue;
      // frozen row stores -b; b_j > 0 means arrows from v_j to the frozen vertex
      if (e < 0)
        out << "  v" << j + 1 << " -> f" << r + 1 << " [label=\"(" << -e << "," << -e << ")\"];\n";
      else
        out << "  f" << r + 1 << " -> v" << j + 1 << " [label=\"(" << e << "," << e << ")\"];\n";
    }
  out << "}\n";
  return out.str();
}

inline nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  switch (v.kind) {
    case Verdict::Admissible:
      j["verdict"] = "admissible";
      if (v.class_size) j["class_size"] = v.class_size;
      if (v.trivial) j["trivial"] = true;
      break;
    case Verdict::NotAdmissible: {
      j["verdict"] = "not_admissible";
      nlohmann::json w = nlohmann::json::array();
      for (int k : v.witness) w.push_back(k + 1);
      j["witness"] = w;
      if (v.violation) {
        j["violation"] = {{"i", v.violation->i + 1},
                          {"j", v.violation->j + 1},
                          {"required", v.violation->required}};
      }
      if (v.growth) {
        nlohmann::json gw = nlohmann::json::array();
        for (int k : v.growth->witness) gw.push_back(k + 1);
        j["growth"] = {{"witness", gw}, {"weight", v.growth->weight}};
      }
      break;
    }
    case Verdict::Undecided:
      j["verdict"] = "undecided";
      j["cap"] = v.cap;
      break;
  }
  return j;
}

inline nlohmann::json label_json(const TypeLabel& l) {
  nlohmann::json j;
  j["label"] = l.to_string();
  j["caps_hit"] = (l.kind == TypeLabel::Undecided);
  return j;
}

}  // namespace mutfin
