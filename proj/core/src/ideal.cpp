#include "sctree/ideal.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "sctree/error.hpp"

namespace sctree {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

Monomial Monomial::squarefree(std::size_t nvars, VertexSet support) {
  Monomial m(nvars);
  for (std::size_t v : support) {
    if (v >= nvars) fail(ErrorCode::VariableNotPresent, "support outside the variable set");
    m.exps_[v] = 1;
  }
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) fail(ErrorCode::VariableNotPresent, std::to_string(var));
  Monomial m(nvars);
  m.exps_[var] = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.insert(i);
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (a[i] > std::numeric_limits<std::uint32_t>::max() - b[i]) fail(ErrorCode::Overflow, "exponent overflow");
    e[i] = a[i] + b[i];
  }
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) fail(ErrorCode::InvalidArgument, "quotient of non-divisible monomials");
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::string format_monomial(const Monomial& m, const Labels& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < vars.size() ? vars[i] : "v" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  std::vector<std::uint64_t> kept_support;
  for (auto& g : gens) {
    const std::uint64_t sg = g.support().bits();
    bool dominated = false;
    for (std::size_t i = 0; i < kept.size() && !dominated; ++i)
      dominated = (kept_support[i] & ~sg) == 0 && kept[i].divides(g);
    if (!dominated) {
      kept_support.push_back(sg);
      kept.push_back(std::move(g));
    }
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(Labels variables, std::vector<Monomial> generators) : vars_(std::move(variables)) {
  if (vars_.size() > kMaxVertices) fail(ErrorCode::SizeLimitExceeded, "more than 64 variables");
  for (const auto& g : generators)
    if (g.nvars() != vars_.size()) fail(ErrorCode::InvalidArgument, "generator over a different variable count");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const { return gens_.empty() || min_degree() == max_degree(); }

std::uint64_t MonomialIdeal::min_degree() const {
  std::uint64_t d = std::numeric_limits<std::uint64_t>::max();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return gens_.empty() ? 0 : d;
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::size_t MonomialIdeal::max_exponent(std::size_t var) const {
  std::size_t m = 0;
  for (const auto& g : gens_) m = std::max<std::size_t>(m, g[var]);
  return m;
}

std::optional<std::size_t> MonomialIdeal::variable_index(const std::string& label) const {
  auto it = std::find(vars_.begin(), vars_.end(), label);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::string MonomialIdeal::format() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(gens_[i], vars_);
  }
  return out + ")";
}

namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.variables() != b.variables()) fail(ErrorCode::InvalidArgument, "ideals live over different variables");
}

void check_pairs(std::size_t a, std::size_t b, const IdealLimits& limits) {
  if (a != 0 && b > limits.max_pairs / a)
    fail(ErrorCode::SizeLimitExceeded, "pairwise expansion of " + std::to_string(a) + " x " + std::to_string(b));
}

void require_squarefree(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) fail(ErrorCode::NotSquarefree, ideal.format());
}

MonomialIdeal unit_ideal(const Labels& vars) { return MonomialIdeal(vars, {Monomial(vars.size())}); }

// All monomials of degree d in the variables of `support`.
void monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& support, std::uint64_t d,
                         std::vector<Monomial>& out) {
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == support.size()) {
      m.set(support[pos], static_cast<std::uint32_t>(left));
      out.push_back(m);
      m.set(support[pos], 0);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      m.set(support[pos], static_cast<std::uint32_t>(e));
      self(self, pos + 1, left - e);
    }
    m.set(support[pos], 0);
  };
  if (support.empty()) {
    if (d == 0) out.push_back(m);
    return;
  }
  rec(rec, 0, d);
}

}  // namespace

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (VertexSet f : complex.facets()) gens.push_back(Monomial::squarefree(complex.vertex_count(), f));
  return MonomialIdeal(complex.labels(), std::move(gens));
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  for (VertexSet e : h.edges()) gens.push_back(Monomial::squarefree(h.universe_size(), e));
  return MonomialIdeal(h.labels(), std::move(gens));
}

MonomialIdeal cover_ideal(const Hypergraph& h) {
  if (h.edges().empty()) fail(ErrorCode::NoEdges, "cover ideal of a hypergraph without edges");
  const std::size_t n = h.universe_size();
  std::vector<Monomial> from_covers;
  for (VertexSet c : minimal_vertex_covers(h)) from_covers.push_back(Monomial::squarefree(n, c));
  MonomialIdeal by_covers(h.labels(), std::move(from_covers));

  std::vector<unsigned> ones(h.edges().size(), 1);
  MonomialIdeal by_primes = intersect_prime_powers(h.labels(), h.edges(), ones);
  if (!(by_covers == by_primes))
    fail(ErrorCode::InconsistentState, "cover ideal: transversals and prime intersection disagree");
  return by_covers;
}

MonomialIdeal cover_ideal(const SimplicialComplex& complex) { return cover_ideal(hypergraph_of(complex)); }

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b, const IdealLimits& limits) {
  check_same_ring(a, b);
  check_pairs(a.size(), b.size(), limits);
  std::vector<Monomial> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) prods.push_back(x * y);
  return MonomialIdeal(a.variables(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k, const IdealLimits& limits) {
  MonomialIdeal result = unit_ideal(a.variables());
  for (unsigned i = 0; i < k; ++i) result = multiply(result, a, limits);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const IdealLimits& limits) {
  check_same_ring(a, b);
  check_pairs(a.size(), b.size(), limits);
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) lcms.push_back(lcm(x, y));
  return MonomialIdeal(a.variables(), std::move(lcms));
}

MonomialIdeal prime_power(const Labels& vars, VertexSet support, unsigned k) {
  if (support.empty() && k > 0) return MonomialIdeal(vars, {});
  std::vector<Monomial> gens;
  monomials_of_degree(vars.size(), support.to_vector(), k, gens);
  return MonomialIdeal(vars, std::move(gens));
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& squarefree) {
  require_squarefree(squarefree);
  std::vector<VertexSet> supports;
  for (const auto& g : squarefree.generators()) supports.push_back(g.support());
  return minimal_transversals(supports);
}

MonomialIdeal intersect_prime_powers(const Labels& vars, const std::vector<VertexSet>& primes,
                                     const std::vector<unsigned>& exponents, const IdealLimits& limits) {
  if (primes.size() != exponents.size()) fail(ErrorCode::KVectorLengthMismatch, "one exponent per prime");
  MonomialIdeal acc = unit_ideal(vars);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (exponents[i] == 0) continue;
    acc = intersect(acc, prime_power(vars, primes[i], exponents[i]), limits);
  }
  return acc;
}

MonomialIdeal symbolic_power(const MonomialIdeal& squarefree, unsigned k, const IdealLimits& limits) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "symbolic power needs k >= 1");
  auto primes = minimal_primes(squarefree);
  return intersect_prime_powers(squarefree.variables(), primes, std::vector<unsigned>(primes.size(), k), limits);
}

MonomialIdeal alexander_dual(const MonomialIdeal& squarefree) {
  require_squarefree(squarefree);
  if (squarefree.is_zero()) fail(ErrorCode::InvalidArgument, "Alexander dual of the zero ideal");
  std::vector<Monomial> gens;
  for (VertexSet c : minimal_primes(squarefree)) gens.push_back(Monomial::squarefree(squarefree.nvars(), c));
  return MonomialIdeal(squarefree.variables(), std::move(gens));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree) {
  require_squarefree(squarefree);
  auto covers = minimal_primes(squarefree);
  if (covers.empty()) fail(ErrorCode::InvalidArgument, "the unit ideal has no Stanley-Reisner complex");
  const VertexSet all = VertexSet::range(squarefree.nvars());
  std::vector<VertexSet> facets;
  for (VertexSet c : covers) facets.push_back(all - c);
  return SimplicialComplex::from_generators(squarefree.variables(), std::move(facets));
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.nvars()) fail(ErrorCode::VariableNotPresent, std::to_string(var));
  std::vector<Monomial> gens;
  for (Monomial g : ideal.generators()) {
    if (g[var] > 0) g.set(var, g[var] - 1);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal eliminate_variable(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.nvars()) fail(ErrorCode::VariableNotPresent, std::to_string(var));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators())
    if (g[var] == 0) gens.push_back(g);
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, std::uint64_t j, std::size_t max_generators) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<std::size_t> all_vars(ideal.nvars());
  for (std::size_t i = 0; i < all_vars.size(); ++i) all_vars[i] = i;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > j) continue;
    std::vector<Monomial> fills;
    monomials_of_degree(ideal.nvars(), all_vars, j - g.degree(), fills);
    for (const auto& f : fills) {
      seen.insert(g * f);
      if (seen.size() > max_generators)
        fail(ErrorCode::SizeLimitExceeded, "degree component has more than " + std::to_string(max_generators) + " generators");
    }
  }
  return MonomialIdeal(ideal.variables(), std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal generators_up_to_degree(const MonomialIdeal& ideal, std::uint64_t j) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators())
    if (g.degree() <= j) gens.push_back(g);
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

std::string layered_label(const std::string& base, std::size_t layer) { return base + "_" + std::to_string(layer); }

std::size_t PolarizationMap::index(std::size_t var, std::size_t layer) const {
  auto it = target.find({var, layer});
  if (it == target.end())
    fail(ErrorCode::VariableNotPresent, "no polarized variable for layer " + std::to_string(layer));
  return it->second;
}

PolarizationMap polarization_map(const Labels& base, const std::vector<std::size_t>& layers) {
  PolarizationMap map;
  map.base = base;
  map.layers = layers;
  for (std::size_t j = 0; j < base.size(); ++j) {
    for (std::size_t f = 1; f <= layers[j]; ++f) {
      map.target[{j, f}] = map.polarized.size();
      map.source.emplace_back(j, f);
      map.polarized.push_back(layered_label(base[j], f));
    }
  }
  if (map.polarized.size() > kMaxVertices)
    fail(ErrorCode::SizeLimitExceeded, "polarization needs " + std::to_string(map.polarized.size()) + " variables");
  return map;
}

Monomial polarize_monomial(const Monomial& m, const PolarizationMap& map) {
  Monomial out(map.polarized.size());
  for (std::size_t j = 0; j < m.nvars(); ++j) {
    if (m[j] > map.layers[j]) fail(ErrorCode::InvalidArgument, "exponent exceeds the polarization layers");
    for (std::size_t f = 1; f <= m[j]; ++f) out.set(map.index(j, f), 1);
  }
  return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
  std::vector<std::size_t> layers(ideal.nvars(), 1);
  for (std::size_t j = 0; j < ideal.nvars(); ++j) layers[j] = std::max<std::size_t>(1, ideal.max_exponent(j));
  Polarization p{MonomialIdeal(), polarization_map(ideal.variables(), layers)};
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(polarize_monomial(g, p.map));
  p.ideal = MonomialIdeal(p.map.polarized, std::move(gens));
  return p;
}

Monomial depolarize_monomial(const Monomial& m, const PolarizationMap& map) {
  if (m.nvars() != map.polarized.size()) fail(ErrorCode::NotAPolarizedGenerator, "wrong variable count");
  Monomial out(map.base.size());
  for (std::size_t j = 0; j < map.base.size(); ++j) {
    std::uint32_t e = 0;
    bool gap = false;
    for (std::size_t f = 1; f <= map.layers[j]; ++f) {
      const bool present = m[map.index(j, f)] != 0;
      if (m[map.index(j, f)] > 1) fail(ErrorCode::NotAPolarizedGenerator, "not squarefree");
      if (present && gap) fail(ErrorCode::NotAPolarizedGenerator, "layers of a variable must be 1..a");
      if (present) ++e;
      else gap = true;
    }
    out.set(j, e);
  }
  return out;
}

std::vector<Monomial> depolarize_order(const std::vector<Monomial>& order, const PolarizationMap& map) {
  std::vector<Monomial> out;
  out.reserve(order.size());
  for (const auto& m : order) out.push_back(depolarize_monomial(m, map));
  return out;
}

std::vector<std::map<std::string, std::uint32_t>> named_generators(const MonomialIdeal& ideal) {
  std::vector<std::map<std::string, std::uint32_t>> out;
  for (const auto& g : ideal.generators()) {
    std::map<std::string, std::uint32_t> named;
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (g[i] != 0) named[ideal.variables()[i]] = g[i];
    out.push_back(std::move(named));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_generators_by_name(const MonomialIdeal& a, const MonomialIdeal& b) {
  return named_generators(a) == named_generators(b);
}

}  // namespace sctree
