#include "sctree/betti.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "sctree/error.hpp"

namespace sctree {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t beta) {
  if (beta != 0) entries[{i, j}] += beta;
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> reg;
  for (const auto& [ij, beta] : entries)
    if (!reg || ij.second - ij.first > *reg) reg = ij.second - ij.first;
  return reg;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [ij, beta] : entries) pd = std::max(pd, ij.first);
  return pd;
}

namespace {

void require_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) fail(ErrorCode::InvalidArgument, "the zero ideal has no Betti table");
}

std::size_t polarized_size(const MonomialIdeal& ideal) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < ideal.nvars(); ++v) n += ideal.max_exponent(v);
  return n;
}

// Closure of the generator supports under union, without ∅.
std::vector<VertexSet> lcm_lattice(const std::vector<VertexSet>& gens, std::size_t cap) {
  std::unordered_set<VertexSet> seen(gens.begin(), gens.end());
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::vector<VertexSet> distinct = out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexSet g : distinct) {
      VertexSet u = out[i] | g;
      if (seen.insert(u).second) {
        out.push_back(u);
        if (out.size() > cap) fail(ErrorCode::SizeLimitExceeded, "lcm lattice exceeds " + std::to_string(cap));
      }
    }
  }
  return out;
}

BettiTable hochster(const MonomialIdeal& squarefree, Field field, const BettiOptions& options) {
  std::vector<VertexSet> supports;
  VertexSet used;
  for (const Monomial& g : squarefree.generators()) {
    supports.push_back(g.support());
    used |= g.support();
  }
  if (used.size() > options.max_polarized)
    fail(ErrorCode::SizeLimitExceeded, "Hochster needs " + std::to_string(used.size()) + " variables, limit " +
                                           std::to_string(options.max_polarized));
  BettiTable table{field, {}};
  if (used.empty()) {  // unit ideal
    table.add(0, 0, 1);
    return table;
  }
  for (VertexSet sigma : lcm_lattice(supports, options.max_lattice)) {
    std::vector<VertexSet> inside;
    for (VertexSet g : supports)
      if (g.subset_of(sigma)) inside.push_back(g);
    auto h = reduced_homology_of_faces(faces_avoiding(sigma, inside), field);
    int size = static_cast<int>(sigma.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
      int d = static_cast<int>(k) - 1;
      table.add(size - 2 - d, size, h[k]);
    }
  }
  return table;
}

// β_{i,b}(I) = dim H̃_{i-1}(K^b), where K^b is generated by the sets
// {v : g_v < b_v} over the generators g dividing x^b. Only multidegrees b
// that are lcms of generators can contribute.
class KoszulEngine {
 public:
  KoszulEngine(const MonomialIdeal& ideal, Field field, std::size_t cap)
      : gens_(ideal.generators()), n_(ideal.nvars()), field_(field), cap_(cap), table_{field, {}} {
    for (std::size_t v = 0; v < n_; ++v) rho_.push_back(static_cast<std::uint32_t>(ideal.max_exponent(v)));
  }

  BettiTable run() {
    std::vector<std::size_t> all(gens_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    b_.assign(n_, 0);
    descend(0, all);
    return table_;
  }

 private:
  void descend(std::size_t v, const std::vector<std::size_t>& candidates) {
    if (v == n_) {
      leaf(candidates);
      return;
    }
    std::vector<std::size_t> next;
    for (std::uint32_t e = 0; e <= rho_[v]; ++e) {
      next.clear();
      bool attained = e == 0;
      for (std::size_t g : candidates) {
        if (gens_[g][v] > e) continue;
        next.push_back(g);
        if (gens_[g][v] == e) attained = true;
      }
      if (next.empty() || !attained) continue;
      b_[v] = e;
      descend(v + 1, next);
    }
    b_[v] = 0;
  }

  void leaf(const std::vector<std::size_t>& dividing) {
    if (++visited_ > cap_) fail(ErrorCode::SizeLimitExceeded, "lcm lattice exceeds " + std::to_string(cap_));
    std::uint64_t degree = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (b_[v] == 0) continue;
      degree += b_[v];
      bool attained = false;
      for (std::size_t g : dividing)
        if (gens_[g][v] == b_[v]) {
          attained = true;
          break;
        }
      if (!attained) return;
    }
    std::vector<VertexSet> slack;
    slack.reserve(dividing.size());
    for (std::size_t g : dividing) {
      VertexSet s;
      for (std::size_t v = 0; v < n_; ++v)
        if (gens_[g][v] < b_[v]) s.insert(v);
      slack.push_back(s);
    }
    slack = maximal_sets(std::move(slack));
    VertexSet apex = slack.front();
    for (VertexSet s : slack) apex &= s;
    if (!apex.empty()) return;  // a cone
    auto h = reduced_homology_of_faces(faces_from_facets(slack), field_);
    for (std::size_t k = 0; k < h.size(); ++k) table_.add(static_cast<int>(k), static_cast<int>(degree), h[k]);
  }

  const std::vector<Monomial>& gens_;
  std::size_t n_;
  Field field_;
  std::size_t cap_;
  BettiTable table_;
  std::vector<std::uint32_t> rho_;
  std::vector<std::uint32_t> b_;
  std::size_t visited_ = 0;
};

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, Field field, const BettiOptions& options) {
  require_nonzero(ideal);
  BettiMethod method = options.method;
  if (method == BettiMethod::Auto)
    method = polarized_size(ideal) <= options.auto_hochster ? BettiMethod::Hochster : BettiMethod::Koszul;
  if (method == BettiMethod::Koszul) return KoszulEngine(ideal, field, options.max_lattice).run();
  if (ideal.is_squarefree()) return hochster(ideal, field, options);
  return hochster(polarize(ideal).ideal, field, options);
}

int regularity(const MonomialIdeal& ideal, Field field, const BettiOptions& options) {
  return *betti_numbers(ideal, field, options).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field field, const BettiOptions& options) {
  require_nonzero(ideal);
  if (!ideal.is_equigenerated()) return false;
  return regularity(ideal, field, options) == static_cast<int>(ideal.min_degree());
}

ComponentwiseResult componentwise_linearity(const MonomialIdeal& ideal, Field field,
                                            const ComponentwiseOptions& options) {
  require_nonzero(ideal);
  ComponentwiseResult result;
  std::uint64_t lo = ideal.min_degree();
  std::uint64_t hi = ideal.max_degree();
  if (options.method == ComponentwiseMethod::Truncation) {
    std::set<std::uint64_t> degrees;
    for (const Monomial& g : ideal.generators()) degrees.insert(g.degree());
    for (std::uint64_t j : degrees) {
      if (regularity(generators_up_to_degree(ideal, j), field, options.betti) > static_cast<int>(j)) {
        result.linear = false;
        result.failing_degree = j;
        return result;
      }
    }
  } else {
    for (std::uint64_t j = lo; j <= hi; ++j) {
      if (!has_linear_resolution(degree_component(ideal, j), field, options.betti)) {
        result.linear = false;
        result.failing_degree = j;
        return result;
      }
    }
  }
  if (options.spot_check_generators > 0) {
    try {
      MonomialIdeal above = degree_component(ideal, hi + 1, options.spot_check_generators);
      result.spot_checked = true;
      if (!has_linear_resolution(above, field, options.betti)) {
        result.linear = false;
        result.failing_degree = hi + 1;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeLimitExceeded) throw;
    }
  }
  return result;
}

bool is_componentwise_linear(const MonomialIdeal& ideal, Field field, const ComponentwiseOptions& options) {
  return componentwise_linearity(ideal, field, options).linear;
}

bool is_cohen_macaulay_facet_ring(const SimplicialComplex& complex, Field field, const BettiOptions& options) {
  return has_linear_resolution(cover_ideal(complex), field, options);
}

bool is_sequentially_cm(const SimplicialComplex& complex, Field field, const ComponentwiseOptions& options) {
  std::size_t n = complex.vertex_count();
  VertexSet all = VertexSet::range(n);
  std::vector<Monomial> gens;
  for (VertexSet f : complex.facets()) gens.push_back(Monomial::squarefree(n, all - f));
  return is_componentwise_linear(MonomialIdeal(complex.labels(), std::move(gens)), field, options);
}

}  // namespace sctree
