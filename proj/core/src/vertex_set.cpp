#include "sctree/vertex_set.hpp"

#include <algorithm>

#include "sctree/error.hpp"

namespace sctree {

VertexSet::VertexSet(std::initializer_list<std::size_t> vertices) {
  for (std::size_t v : vertices) {
    if (v >= kMaxVertices) fail(ErrorCode::SizeLimitExceeded, "vertex index beyond 63");
    insert(v);
  }
}

VertexSet VertexSet::from_indices(const std::vector<std::size_t>& vertices) {
  VertexSet s;
  for (std::size_t v : vertices) {
    if (v >= kMaxVertices) fail(ErrorCode::SizeLimitExceeded, "vertex index beyond 63");
    s.insert(v);
  }
  return s;
}

std::vector<std::size_t> VertexSet::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t v : *this) out.push_back(v);
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::size_t m = static_cast<std::size_t>(std::countr_zero(diff));
  // Everything below m is shared. Whoever holds m is smaller unless the other
  // side stops there (then the other is a prefix).
  const std::uint64_t above = m == 63 ? 0 : (~std::uint64_t{0} << (m + 1));
  if (a.contains(m)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

void sort_lex(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), LexLess{}); }

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  sort_lex(kept);
  return kept;
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  sort_lex(kept);
  return kept;
}

bool is_antichain(const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].subset_of(sets[j])) return false;
  return true;
}

std::string format_set(VertexSet s, const Labels& labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : s) {
    if (!first) out += ",";
    first = false;
    out += v < labels.size() ? labels[v] : std::to_string(v);
  }
  return out + "}";
}

}  // namespace sctree
