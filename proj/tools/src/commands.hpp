#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace sctree::cli {

Report cmd_analyze(const std::string& path, const Options& options);
Report cmd_cover_power(const std::string& path, unsigned k, const Options& options);
Report cmd_construct(const std::string& path, std::optional<std::vector<unsigned>> k,
                     std::optional<std::string> letters, const Options& options);
Report cmd_betti(const std::string& path, unsigned power, BettiMethod method, const Options& options);
Report cmd_check_vd(const std::string& path, std::optional<std::vector<unsigned>> k, const Options& options);
Report cmd_check_shellable(const std::string& path, std::optional<std::vector<unsigned>> k, const Options& options);
Report cmd_verify_paper(const std::string& suite, const Options& options);

// Linear-quotient order of J(Δ)^k for a tree: shelling of Δ(H(k)) read off a
// vertex decomposition, then depolarized. Empty when no decomposition exists.
std::optional<std::vector<Monomial>> tree_power_order(const SimplicialComplex& tree, unsigned k, const Limits& limits);

}  // namespace sctree::cli
