#include "sctree/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "sctree/error.hpp"

namespace sctree {

Field Field::gf(unsigned p) {
  if (p != 2 && p != 3 && p != 5) fail(ErrorCode::InvalidArgument, "unsupported characteristic " + std::to_string(p));
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "0") return rationals();
  if (text == "GF2" || text == "2") return gf(2);
  if (text == "GF3" || text == "3") return gf(3);
  if (text == "GF5" || text == "5") return gf(5);
  fail(ErrorCode::InvalidArgument, "unknown field '" + std::string(text) + "'");
}

std::string Field::name() const { return characteristic == 0 ? "Q" : "GF" + std::to_string(characteristic); }

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflowed {};

// Checked 64-bit arithmetic; throws Overflowed so the caller can restart.
struct Checked {
  using value_type = std::int64_t;
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflowed{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflowed{};
    return r;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
  static value_type div(value_type a, value_type b) { return a / b; }
  static bool is_zero(const value_type& a) { return a == 0; }
};

struct Big {
  using value_type = BigInt;
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) { return boost::multiprecision::gcd(a, b); }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
  static bool is_zero(const value_type& a) { return a == 0; }
};

template <class Ops>
using Row = std::vector<std::pair<std::uint32_t, typename Ops::value_type>>;

template <class Ops>
void normalize(Row<Ops>& row) {
  using T = typename Ops::value_type;
  T g = 0;
  for (const auto& [c, v] : row) {
    g = Ops::gcd(g, v);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& e : row) e.second = Ops::div(e.second, g);
}

// row := a * row - b * pivot, with a = pivot lead, b = row lead, both
// divided by their gcd first.
template <class Ops>
Row<Ops> eliminate(const Row<Ops>& row, const Row<Ops>& pivot) {
  using T = typename Ops::value_type;
  T a = pivot.front().second;
  T b = row.front().second;
  T g = Ops::gcd(a, b);
  if (g < 0) g = -g;
  a = Ops::div(a, g);
  b = Ops::div(b, g);
  Row<Ops> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, Ops::mul(a, row[i].second));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, Ops::sub(T(0), Ops::mul(b, pivot[j].second)));
      ++j;
    } else {
      T v = Ops::sub(Ops::mul(a, row[i].second), Ops::mul(b, pivot[j].second));
      if (!Ops::is_zero(v)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize<Ops>(out);
  return out;
}

template <class Ops>
std::size_t integer_rank(const std::vector<SparseRow>& input) {
  std::vector<Row<Ops>> pivots;
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  for (const auto& src : input) {
    Row<Ops> row;
    row.reserve(src.size());
    for (const auto& [c, v] : src)
      if (v != 0) row.emplace_back(c, typename Ops::value_type(v));
    normalize<Ops>(row);
    while (!row.empty()) {
      auto it = pivot_of.find(row.front().first);
      if (it == pivot_of.end()) {
        pivot_of.emplace(row.front().first, pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      row = eliminate<Ops>(row, pivots[it->second]);
    }
  }
  return pivots.size();
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  fail(ErrorCode::InconsistentState, "no inverse mod p");
}

std::size_t modular_rank(const std::vector<SparseRow>& input, std::int64_t p) {
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  std::vector<Row> pivots;  // monic
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  for (const auto& src : input) {
    Row row;
    for (const auto& [c, v] : src)
      if (mod(v, p) != 0) row.emplace_back(c, mod(v, p));
    while (!row.empty()) {
      auto it = pivot_of.find(row.front().first);
      if (it == pivot_of.end()) {
        std::int64_t inv = inverse_mod(row.front().second, p);
        for (auto& e : row) e.second = (e.second * inv) % p;
        pivot_of.emplace(row.front().first, pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      const Row& piv = pivots[it->second];
      std::int64_t b = row.front().second;
      Row out;
      out.reserve(row.size() + piv.size());
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          out.emplace_back(piv[j].first, mod(-b * piv[j].second, p));
          ++j;
        } else {
          std::int64_t v = mod(row[i].second - b * piv[j].second, p);
          if (v != 0) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseRow> rows, Field field) {
  for (auto& r : rows) std::sort(r.begin(), r.end());
  if (field.characteristic != 0) return modular_rank(rows, field.characteristic);
  try {
    return integer_rank<Checked>(rows);
  } catch (const Overflowed&) {
    return integer_rank<Big>(rows);
  }
}

std::vector<std::size_t> reduced_homology_of_faces(std::vector<std::vector<std::uint64_t>> faces, Field field) {
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  if (faces.empty()) return {};  // void complex
  for (auto& level : faces) std::sort(level.begin(), level.end());

  // ranks[k] = rank of the boundary from faces with k vertices to k - 1.
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& lower = faces[k - 1];
    std::vector<SparseRow> rows;
    rows.reserve(faces[k].size());
    for (std::uint64_t face : faces[k]) {
      SparseRow row;
      std::int64_t sign = 1;
      for (std::size_t v : VertexSet(face)) {
        std::uint64_t sub = face & ~(std::uint64_t{1} << v);
        auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        if (it == lower.end() || *it != sub) fail(ErrorCode::InconsistentState, "face list is not closed");
        row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
        sign = -sign;
      }
      rows.push_back(std::move(row));
    }
    ranks[k] = matrix_rank(std::move(rows), field);
  }
  std::vector<std::size_t> out(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) out[k] = faces[k].size() - ranks[k] - ranks[k + 1];
  return out;
}

std::vector<std::vector<std::uint64_t>> faces_from_facets(const std::vector<VertexSet>& facets) {
  std::vector<std::unordered_set<std::uint64_t>> levels;
  for (VertexSet facet : facets) {
    std::uint64_t m = facet.bits();
    for (std::uint64_t s = m;; s = (s - 1) & m) {
      std::size_t k = static_cast<std::size_t>(__builtin_popcountll(s));
      if (levels.size() <= k) levels.resize(k + 1);
      levels[k].insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<std::uint64_t>> out(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) out[k].assign(levels[k].begin(), levels[k].end());
  return out;
}

std::vector<std::vector<std::uint64_t>> faces_avoiding(VertexSet ground, const std::vector<VertexSet>& forbidden) {
  for (VertexSet f : forbidden)
    if (f.empty()) return {};
  std::vector<std::size_t> verts = ground.to_vector();
  // by_max[v]: forbidden sets whose largest vertex is v
  std::vector<std::vector<std::uint64_t>> by_max(kMaxVertices);
  for (VertexSet f : forbidden)
    if (f.subset_of(ground)) by_max[f.back()].push_back(f.bits());

  std::vector<std::vector<std::uint64_t>> out(1, std::vector<std::uint64_t>{0});
  std::vector<std::pair<std::uint64_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [face, from] = stack.back();
    stack.pop_back();
    for (std::size_t i = from; i < verts.size(); ++i) {
      std::size_t v = verts[i];
      std::uint64_t next = face | (std::uint64_t{1} << v);
      bool ok = true;
      for (std::uint64_t f : by_max[v])
        if ((f & next) == f) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::size_t k = static_cast<std::size_t>(__builtin_popcountll(next));
      if (out.size() <= k) out.resize(k + 1);
      out[k].push_back(next);
      stack.emplace_back(next, i + 1);
    }
  }
  return out;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& complex, Field field) {
  return reduced_homology_of_faces(faces_from_facets(complex.facets()), field);
}

}  // namespace sctree
