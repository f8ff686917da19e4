#include "report.hpp"

#include <cstdio>

#include <boost/uuid/detail/sha1.hpp>

namespace sctree::cli {

Report::Report(std::string command) : command_(std::move(command)) {}

Json Report::to_json() const {
  Json j;
  j["tool"] = "sctree";
  j["version"] = SCTREE_VERSION;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["inputsDigest"] = sha1_hex(inputs_.dump());
  j["verdicts"] = verdicts_;
  j["certificates"] = certificates_;
  j["timings"] = timings_;
  return j;
}

std::string sha1_hex(const std::string& text) {
  boost::uuids::detail::sha1 h;
  h.process_bytes(text.data(), text.size());
  boost::uuids::detail::sha1::digest_type d;
  h.get_digest(d);
  std::string out;
  char buf[9];
  for (unsigned word : d) {
    std::snprintf(buf, sizeof buf, "%08x", word);
    out += buf;
  }
  return out;
}

Json betti_json(const BettiTable& table) {
  Json j = sctree::to_json(table);
  if (auto reg = table.regularity()) j["regularity"] = *reg;
  j["projectiveDimension"] = table.projective_dimension();
  return j;
}

Json monomials_json(const std::vector<Monomial>& ms, const Labels& vars) {
  Json arr = Json::array();
  for (const Monomial& m : ms) arr.push_back(format_monomial(m, vars));
  return arr;
}

}  // namespace sctree::cli
