#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <string>
#include <vector>

#include "sctree/betti.hpp"
#include "sctree/io.hpp"

namespace sctree::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kSizeLimit = 3;

struct Limits {
  std::size_t max_vertices = 24;
  std::size_t max_generators = 20;
  std::size_t max_polarized = 22;
};

struct Options {
  Limits limits;
  Field field;
  bool trace = false;
  bool symbolic = false;
  std::string output;  // empty: stdout
};

// Everything but "timings" is a function of the inputs.
class Report {
 public:
  explicit Report(std::string command);

  Json& inputs() { return inputs_; }
  Json& verdicts() { return verdicts_; }
  Json& certificates() { return certificates_; }
  void time(const std::string& name, double seconds) { timings_[name] = seconds; }
  bool failed = false;
  bool size_limited = false;  // a suite check hit a cap; exit 3 unless something failed

  Json to_json() const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  Json verdicts_ = Json::object();
  Json certificates_ = Json::object();
  Json timings_ = Json::object();
};

std::string sha1_hex(const std::string& text);

// Runs f and records its wall time under `name`.
template <class F>
auto timed(Report& report, const std::string& name, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&] { report.time(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()); };
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    finish();
  } else {
    auto r = f();
    finish();
    return r;
  }
}

Json betti_json(const BettiTable& table);
Json monomials_json(const std::vector<Monomial>& ms, const Labels& vars);

}  // namespace sctree::cli
