#include "reciproca/algebra.hpp"

#include <cmath>
#include <cstdlib>

#include "reciproca/quaplectic.hpp"

namespace reciproca {

namespace {

std::string term_list_text(const std::vector<std::pair<int, double>>& terms,
                           const std::vector<std::string>& names) {
  std::string out;
  bool first = true;
  for (const auto& [k, v] : terms) {
    if (v == 0.0) continue;
    out += detail::format_coeff_term(v, names[static_cast<std::size_t>(k)], first);
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace

TableDiff diff_against_reference(const StructureTable& t,
                                 const std::vector<ReferenceBracket>& ref) {
  TableDiff diff;
  const int n = t.n;
  std::vector<double> expected(static_cast<std::size_t>(n) * n * n, 0.0);
  for (const auto& r : ref) {
    if (r.i < 0 || r.j < 0 || r.i >= n || r.j >= n || r.i >= r.j)
      fail(errc::invalid_argument, "reference bracket indices must satisfy 0 <= i < j < n");
    for (const auto& [k, v] : r.terms) {
      if (k < 0 || k >= n) fail(errc::invalid_argument, "reference term index out of range");
      expected[(static_cast<std::size_t>(r.i) * n + r.j) * n + k] = v;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool same = true;
      std::vector<std::pair<int, double>> exp_terms;
      for (int k = 0; k < n; ++k) {
        const double e = expected[(static_cast<std::size_t>(i) * n + j) * n + k];
        if (e != 0.0) exp_terms.emplace_back(k, e);
        if (std::fabs(e - t.c(i, j, k)) > 1e-9) same = false;
      }
      if (same) continue;
      diff.identical = false;
      diff.lines.push_back("[" + t.names[static_cast<std::size_t>(i)] + "," +
                           t.names[static_cast<std::size_t>(j)] + "]: computed " +
                           t.entry_text(i, j) + ", tabulated " +
                           term_list_text(exp_terms, t.names));
    }
  }
  return diff;
}

std::vector<ReferenceBracket> reference_brackets(const std::string& which) {
  using RB = ReferenceBracket;
  if (which == "hamilton") {
    // names: G F R
    return {RB{0, 1, {{2, 2.0}}}};
  }
  if (which == "su11") {
    // names: K N M U
    return {RB{0, 1, {{2, 2.0}}}, RB{0, 2, {{1, 2.0}}}, RB{1, 2, {{0, -2.0}}}};
  }
  if (which == "contracted") {
    // names: G F Mhat R
    return {RB{0, 1, {{3, 2.0}}}, RB{0, 2, {{1, 1.0}}}};
  }
  if (which == "heisenberg") {
    // names: T Q P E I
    return {RB{1, 2, {{4, 1.0}}}, RB{0, 3, {{4, -1.0}}}};
  }
  if (which == "inhom") {
    // names: K N M U T Q P E; the four [U, translation] rows carry the
    // opposite sign in the tabulated source, kept verbatim for the diff.
    return {RB{0, 1, {{2, 2.0}}},  RB{0, 2, {{1, 2.0}}},  RB{1, 2, {{0, -2.0}}},
            RB{0, 4, {{5, 1.0}}},  RB{0, 5, {{4, 1.0}}},  RB{0, 6, {{7, 1.0}}},
            RB{0, 7, {{6, 1.0}}},  RB{1, 4, {{6, 1.0}}},  RB{1, 5, {{7, -1.0}}},
            RB{1, 6, {{4, 1.0}}},  RB{1, 7, {{5, -1.0}}}, RB{2, 4, {{7, 1.0}}},
            RB{2, 5, {{6, -1.0}}}, RB{2, 6, {{5, 1.0}}},  RB{2, 7, {{4, -1.0}}},
            RB{3, 4, {{7, -1.0}}}, RB{3, 5, {{6, -1.0}}}, RB{3, 6, {{5, 1.0}}},
            RB{3, 7, {{4, 1.0}}}};
  }
  if (which == "quaplectic") {
    // names: K N M U T Q P E I; same tabulated [U, translation] signs plus
    // the two central brackets.
    return {RB{0, 1, {{2, 2.0}}},  RB{0, 2, {{1, 2.0}}},  RB{1, 2, {{0, -2.0}}},
            RB{0, 4, {{5, 1.0}}},  RB{0, 5, {{4, 1.0}}},  RB{0, 6, {{7, 1.0}}},
            RB{0, 7, {{6, 1.0}}},  RB{1, 4, {{6, 1.0}}},  RB{1, 5, {{7, -1.0}}},
            RB{1, 6, {{4, 1.0}}},  RB{1, 7, {{5, -1.0}}}, RB{2, 4, {{7, 1.0}}},
            RB{2, 5, {{6, -1.0}}}, RB{2, 6, {{5, 1.0}}},  RB{2, 7, {{4, -1.0}}},
            RB{3, 4, {{7, -1.0}}}, RB{3, 5, {{6, -1.0}}}, RB{3, 6, {{5, 1.0}}},
            RB{3, 7, {{4, 1.0}}},  RB{5, 6, {{8, 1.0}}},  RB{4, 7, {{8, -1.0}}}};
  }
  fail(errc::invalid_argument, "unknown reference table name: " + which);
}

}  // namespace reciproca
