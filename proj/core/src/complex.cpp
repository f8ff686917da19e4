#include "sctree/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sctree/error.hpp"

namespace sctree {

namespace {

void check_labels(const Labels& labels) {
  if (labels.size() > kMaxVertices) fail(ErrorCode::SizeLimitExceeded, "more than 64 vertices");
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::InvalidArgument, "duplicate vertex label");
}

// Branches of facet f among the facets listed in `ids`.
std::vector<std::size_t> branches_of(const std::vector<VertexSet>& facets, const std::vector<std::size_t>& ids,
                                     std::size_t f) {
  std::vector<std::size_t> out;
  const VertexSet F = facets[f];
  for (std::size_t g : ids) {
    if (g == f) continue;
    const VertexSet FG = F & facets[g];
    bool dominates = std::all_of(ids.begin(), ids.end(), [&](std::size_t h) {
      return h == f || (F & facets[h]).subset_of(FG);
    });
    if (dominates) out.push_back(g);
  }
  return out;
}

bool leaf_in(const std::vector<VertexSet>& facets, const std::vector<std::size_t>& ids, std::size_t f) {
  if (ids.size() == 1) return true;
  return !branches_of(facets, ids, f).empty();
}

bool good_leaf_in(const std::vector<VertexSet>& facets, const std::vector<std::size_t>& ids, std::size_t f) {
  if (ids.size() == 1) return true;
  const VertexSet F = facets[f];
  for (std::size_t a : ids) {
    if (a == f) continue;
    for (std::size_t b : ids) {
      if (b == f || b <= a) continue;
      const VertexSet A = F & facets[a];
      const VertexSet B = F & facets[b];
      if (!A.subset_of(B) && !B.subset_of(A)) return false;
    }
  }
  return leaf_in(facets, ids, f);
}

std::vector<std::size_t> all_ids(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return ids;
}

void check_facet_index(const SimplicialComplex& c, std::size_t f) {
  if (f >= c.facet_count()) fail(ErrorCode::InvalidArgument, "facet index out of range");
}

}  // namespace

SimplicialComplex::SimplicialComplex(Labels labels, std::vector<VertexSet> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {
  check_labels(labels_);
  if (facets_.empty()) fail(ErrorCode::InvalidArgument, "a complex needs at least one facet");
  const VertexSet universe = VertexSet::range(labels_.size());
  for (VertexSet f : facets_)
    if (!f.subset_of(universe)) fail(ErrorCode::InvalidArgument, "facet uses an unknown vertex");
  if (!is_antichain(facets_)) fail(ErrorCode::InvalidArgument, "facets must form an antichain");
}

SimplicialComplex SimplicialComplex::from_generators(Labels labels, std::vector<VertexSet> generators) {
  if (generators.empty()) generators.push_back(VertexSet{});
  return SimplicialComplex(std::move(labels), maximal_sets(std::move(generators)));
}

SimplicialComplex SimplicialComplex::from_numbers(std::size_t n, const std::vector<std::vector<std::size_t>>& facets) {
  Labels labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<VertexSet> fs;
  for (const auto& f : facets) {
    VertexSet s;
    for (std::size_t v : f) {
      if (v == 0 || v > n) fail(ErrorCode::InvalidArgument, "vertex number out of range");
      s.insert(v - 1);
    }
    fs.push_back(s);
  }
  return SimplicialComplex(std::move(labels), std::move(fs));
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

bool SimplicialComplex::is_facet(VertexSet face) const {
  return std::find(facets_.begin(), facets_.end(), face) != facets_.end();
}

VertexSet SimplicialComplex::support() const {
  VertexSet s;
  for (VertexSet f : facets_) s |= f;
  return s;
}

int SimplicialComplex::dimension() const {
  std::size_t m = 0;
  for (VertexSet f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::same_as(const SimplicialComplex& other) const {
  if (labels_ != other.labels_ || facets_.size() != other.facets_.size()) return false;
  std::vector<VertexSet> a = facets_, b = other.facets_;
  sort_lex(a);
  sort_lex(b);
  return a == b;
}

std::string SimplicialComplex::format() const {
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ",";
    out += format_set(facets_[i], labels_);
  }
  return out + ">";
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
  if (!complex.contains_face(face)) fail(ErrorCode::FaceNotInComplex, format_set(face, complex.labels()));
  std::vector<VertexSet> gens;
  for (VertexSet f : complex.facets())
    if (face.subset_of(f)) gens.push_back(f - face);
  return SimplicialComplex::from_generators(complex.labels(), std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& complex, VertexSet face) {
  if (!complex.contains_face(face)) fail(ErrorCode::FaceNotInComplex, format_set(face, complex.labels()));
  std::vector<VertexSet> gens;
  for (VertexSet f : complex.facets()) gens.push_back(f - face);
  return SimplicialComplex::from_generators(complex.labels(), std::move(gens));
}

SimplicialComplex subcollection(const SimplicialComplex& complex, const std::vector<std::size_t>& facets) {
  std::vector<VertexSet> fs;
  for (std::size_t i : facets) {
    check_facet_index(complex, i);
    fs.push_back(complex.facet(i));
  }
  return SimplicialComplex(complex.labels(), std::move(fs));
}

std::optional<std::size_t> smallest_branch(const SimplicialComplex& complex, std::size_t facet) {
  check_facet_index(complex, facet);
  auto b = branches_of(complex.facets(), all_ids(complex.facet_count()), facet);
  if (b.empty()) return std::nullopt;
  return b.front();
}

bool is_leaf(const SimplicialComplex& complex, std::size_t facet) {
  check_facet_index(complex, facet);
  return leaf_in(complex.facets(), all_ids(complex.facet_count()), facet);
}

std::vector<LeafInfo> find_leaves(const SimplicialComplex& complex) {
  std::vector<LeafInfo> out;
  if (complex.facet_count() == 1) {
    out.push_back({0, std::nullopt});
    return out;
  }
  const auto ids = all_ids(complex.facet_count());
  for (std::size_t f : ids) {
    auto b = branches_of(complex.facets(), ids, f);
    if (!b.empty()) out.push_back({f, b.front()});
  }
  return out;
}

std::optional<GoodLeafCertificate> good_leaf_certificate(const SimplicialComplex& complex, std::size_t facet) {
  check_facet_index(complex, facet);
  const auto ids = all_ids(complex.facet_count());
  if (!good_leaf_in(complex.facets(), ids, facet)) return std::nullopt;
  GoodLeafCertificate cert{facet, {}, {}};
  const VertexSet F = complex.facet(facet);
  for (std::size_t g : ids)
    if (g != facet) cert.chain.push_back(g);
  std::stable_sort(cert.chain.begin(), cert.chain.end(), [&](std::size_t a, std::size_t b) {
    return (F & complex.facet(a)).size() > (F & complex.facet(b)).size();
  });
  for (std::size_t g : cert.chain) cert.intersections.push_back(F & complex.facet(g));
  return cert;
}

namespace {

// Shells innermost first: S_g, S_{g-1} \ S_g, ..., S_1 \ S_2.
std::vector<std::vector<std::size_t>> shells_of(const SimplicialComplex& complex, std::size_t facet) {
  auto cert = good_leaf_certificate(complex, facet);
  if (!cert) fail(ErrorCode::NotAGoodLeaf, "facet " + std::to_string(facet) + " is not a good leaf");
  std::vector<VertexSet> distinct;
  for (VertexSet s : cert->intersections)
    if (!s.empty() && (distinct.empty() || distinct.back() != s)) distinct.push_back(s);
  std::vector<std::vector<std::size_t>> shells;
  VertexSet inner;
  for (auto it = distinct.rbegin(); it != distinct.rend(); ++it) {
    shells.push_back((*it - inner).to_vector());
    inner = *it;
  }
  return shells;
}

}  // namespace

std::vector<std::vector<std::size_t>> good_vertex_sequences(const SimplicialComplex& complex, std::size_t facet) {
  auto shells = shells_of(complex, facet);
  std::vector<std::vector<std::size_t>> out{{}};
  for (auto& shell : shells) {
    std::vector<std::vector<std::size_t>> next;
    std::sort(shell.begin(), shell.end());
    do {
      for (const auto& prefix : out) {
        auto seq = prefix;
        seq.insert(seq.end(), shell.begin(), shell.end());
        next.push_back(std::move(seq));
      }
    } while (std::next_permutation(shell.begin(), shell.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> canonical_good_vertex_sequence(const SimplicialComplex& complex, std::size_t facet) {
  std::vector<std::size_t> seq;
  for (const auto& shell : shells_of(complex, facet)) seq.insert(seq.end(), shell.begin(), shell.end());
  return seq;
}

std::optional<std::vector<std::size_t>> good_leaf_order(const SimplicialComplex& complex) {
  std::vector<std::size_t> remaining = all_ids(complex.facet_count());
  std::vector<std::size_t> order;
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](std::size_t f) { return good_leaf_in(complex.facets(), remaining, f); });
    if (it == remaining.end()) return std::nullopt;
    order.push_back(*it);
    remaining.erase(it);
  }
  return order;
}

bool is_good_leaf_order(const SimplicialComplex& complex, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != all_ids(complex.facet_count())) return false;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    std::vector<std::size_t> tail(order.begin() + static_cast<std::ptrdiff_t>(i), order.end());
    if (!good_leaf_in(complex.facets(), tail, order[i])) return false;
  }
  return true;
}

bool is_connected(const SimplicialComplex& complex) {
  const std::size_t t = complex.facet_count();
  std::vector<bool> seen(t, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < t; ++g) {
      if (!seen[g] && complex.facet(f).intersects(complex.facet(g))) {
        seen[g] = true;
        ++count;
        stack.push_back(g);
      }
    }
  }
  return count == t;
}

bool is_forest(const SimplicialComplex& complex) { return good_leaf_order(complex).has_value(); }

bool is_simplicial_tree(const SimplicialComplex& complex) { return is_connected(complex) && is_forest(complex); }

namespace {

class GraftingSearch {
 public:
  explicit GraftingSearch(const SimplicialComplex& c) : facets_(c.facets()) {}

  bool grafted(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    bool result = compute(mask);
    memo_.emplace(mask, result);
    return result;
  }

 private:
  bool compute(std::uint32_t mask) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if ((mask >> i) & 1U) ids.push_back(i);
    if (ids.size() == 1) return true;

    std::vector<std::size_t> leaves;
    std::uint32_t joints = 0;
    for (std::size_t f : ids) {
      auto branches = branches_of(facets_, ids, f);
      if (branches.empty()) continue;
      leaves.push_back(f);
      for (std::size_t g : branches)
        if (facets_[f].intersects(facets_[g])) joints |= std::uint32_t{1} << g;
    }

    std::unordered_map<std::size_t, bool> joint_ok;
    auto joint_removal_ok = [&](std::size_t g) {
      auto it = joint_ok.find(g);
      if (it != joint_ok.end()) return it->second;
      bool r = grafted(mask & ~(std::uint32_t{1} << g));
      joint_ok.emplace(g, r);
      return r;
    };

    const std::size_t L = leaves.size();
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << L); ++pick) {
      std::uint32_t chosen = 0;
      VertexSet covered;
      bool disjoint = true;
      for (std::size_t a = 0; a < L && disjoint; ++a) {
        if (!((pick >> a) & 1U)) continue;
        const VertexSet F = facets_[leaves[a]];
        if (F.intersects(covered)) disjoint = false;
        covered |= F;
        chosen |= std::uint32_t{1} << leaves[a];
      }
      if (!disjoint) continue;
      const std::uint32_t rest = mask & ~chosen;
      VertexSet rest_vertices;
      for (std::size_t g : ids)
        if ((rest >> g) & 1U) rest_vertices |= facets_[g];
      if (!rest_vertices.subset_of(covered)) continue;
      bool ok = true;
      for (std::size_t g : ids) {
        if (((rest & joints) >> g) & 1U) {
          if (!joint_removal_ok(g)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return true;
    }
    return false;
  }

  const std::vector<VertexSet>& facets_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

}  // namespace

bool is_grafted(const SimplicialComplex& complex, const GraftingOptions& options) {
  const std::size_t t = complex.facet_count();
  if (t > options.max_facets || t > 31)
    fail(ErrorCode::SizeLimitExceeded, "grafting search limited to " + std::to_string(options.max_facets) + " facets");
  GraftingSearch search(complex);
  return search.grafted(static_cast<std::uint32_t>((std::uint64_t{1} << t) - 1));
}

}  // namespace sctree
