#include "sctree/linear_quotients.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sctree/decomposability.hpp"
#include "sctree/error.hpp"

namespace sctree {

namespace {

// Colon (before) : u is generated by variables iff every lcm(v, u)/u is
// divisible by one of the degree-one quotients.
bool linear_colon(const std::vector<const Monomial*>& before, const Monomial& u) {
  std::size_t n = u.nvars();
  std::vector<char> linear(n, 0);
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(before.size());
  for (const Monomial* v : before) {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x)
      if ((*v)[x] > u[x]) s.push_back(x);
    if (s.size() == 1 && (*v)[s[0]] == u[s[0]] + 1) linear[s[0]] = 1;
    supports.push_back(std::move(s));
  }
  return std::all_of(supports.begin(), supports.end(), [&](const std::vector<std::size_t>& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t x) { return linear[x] != 0; });
  });
}

void require_permutation(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
  std::vector<Monomial> a = order, b = ideal.generators();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) fail(ErrorCode::NotAPermutation, "order is not a permutation of the minimal generators");
}

}  // namespace

std::vector<Monomial> colon_generators(const std::vector<Monomial>& before, const Monomial& u) {
  std::vector<Monomial> out;
  for (const Monomial& v : before) out.push_back(quotient(lcm(v, u), u));
  return minimalize(std::move(out));
}

LinearQuotientCheck check_linear_quotients(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
  require_permutation(ideal, order);
  std::vector<const Monomial*> before;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!linear_colon(before, order[i])) return {false, i};
    before.push_back(&order[i]);
  }
  return {};
}

bool has_linear_quotients(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
  return check_linear_quotients(ideal, order).ok;
}

std::optional<std::vector<Monomial>> find_linear_quotients_order(const MonomialIdeal& ideal,
                                                                  const LinearQuotientOptions& options) {
  const auto& gens = ideal.generators();  // canonical: degree ascending
  if (gens.size() > options.max_generators || gens.size() > 64)
    fail(ErrorCode::SizeLimitExceeded, std::to_string(gens.size()) + " generators, limit " +
                                           std::to_string(options.max_generators));
  std::set<std::uint64_t> dead;
  std::vector<const Monomial*> chosen;
  std::function<bool(std::uint64_t)> extend = [&](std::uint64_t used) {
    if (chosen.size() == gens.size()) return true;
    if (dead.count(used)) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((used >> i) & 1U) continue;
      if (!linear_colon(chosen, gens[i])) continue;
      chosen.push_back(&gens[i]);
      if (extend(used | (std::uint64_t{1} << i))) return true;
      chosen.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::vector<Monomial> out;
  for (const Monomial* m : chosen) out.push_back(*m);
  return out;
}

std::vector<Monomial> shelling_to_linear_quotients(const Hypergraph& h, const std::vector<VertexSet>& shelling) {
  if (!is_shelling_of(independence_complex(h), shelling))
    fail(ErrorCode::NotAShelling, "not a shelling of the independence complex");
  std::vector<Monomial> out;
  for (VertexSet f : shelling) out.push_back(Monomial::squarefree(h.universe_size(), h.vertices() - f));
  return out;
}

}  // namespace sctree
