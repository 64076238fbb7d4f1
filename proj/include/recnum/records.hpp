#pragma once

// Output formatting shared by the CLI and the corpus runner: newline-delimited
// JSON records (full values, sorted keys) and human-readable text with long
// numerals elided.

#include <json.hpp>

#include <string>

#include "bounds.hpp"
#include "families.hpp"
#include "search.hpp"

namespace recnum {

using json = nlohmann::json;

inline std::string elide(const std::string& numeral, std::size_t threshold, std::size_t keep = 20) {
  if (threshold == 0 || numeral.size() <= threshold || numeral.size() <= 2 * keep) return numeral;
  return numeral.substr(0, keep) + "..." + numeral.substr(numeral.size() - keep) + " (" +
         std::to_string(numeral.size()) + " digits)";
}

inline json hit_record(const SearchHit& hit, const std::string& fn_text, const natural& bound_used) {
  json decomposition = json::array();
  for (std::size_t i = 0; i < hit.blocks.blocks.size(); ++i) {
    json part = {{"block", hit.blocks.blocks[i].get_str()}};
    if (hit.family == Family::hardy || hit.family == Family::armstrong) part["image"] = hit.images[i].get_str();
    decomposition.push_back(std::move(part));
  }
  json rec = {
      {"family", to_string(hit.family)},
      {"base", hit.blocks.base.value()},
      {"k", hit.blocks.width},
      {"fn", fn_text},
      {"value", hit.value.get_str()},
      {"decomposition", std::move(decomposition)},
      {"bound_used", bound_used.get_str()},
  };
  if (hit.family != Family::hardy && hit.family != Family::armstrong) rec["image"] = hit.images.at(0).get_str();
  return rec;
}

inline json reversal_record(const ReversalHit& hit, Base b, unsigned digits) {
  return {
      {"family", "reversal"},
      {"base", b.value()},
      {"k", 1},
      {"fn", nullptr},
      {"value", hit.value.get_str()},
      {"decomposition", {{"reversal", hit.reversal.get_str()}, {"multiplier", hit.multiplier}}},
      {"bound_used", "digits=" + std::to_string(digits)},
  };
}

inline json witness_json(const CutoffWitness& w) {
  return {{"n", w.n.get_str()}, {"lhs", w.lhs.get_str()}, {"relation", w.relation},
          {"rhs", w.rhs.get_str()}, {"holds", w.holds}};
}

inline json bound_record(const BoundReport& r, Base b, unsigned k, const std::string& fn_text) {
  return {{"family", "hardy"}, {"base", b.value()},      {"k", k},
          {"fn", fn_text},     {"s_k", r.s_k.get_str()}, {"M", r.M},
          {"n_max", r.n_max.get_str()}, {"justification", r.justification}};
}

inline json cutoff_record(const CutoffReport& r, const char* family, Base b, const std::string& fn_text) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(witness_json(x));
  return {{"family", family},  {"base", b.value()}, {"fn", fn_text},       {"cutoff", r.cutoff.get_str()},
          {"method", to_string(r.method)}, {"rule", r.rule}, {"witnesses", std::move(w)}};
}

inline json powersum_bound_record(const PowersumBound& r, unsigned long p, Base b) {
  return {{"family", "powersum"}, {"base", b.value()}, {"p", p}, {"coarse", r.coarse.get_str()},
          {"s_max", r.s_max.get_str()}, {"s_scan", r.s_scan.get_str()}};
}

inline json pair_record(const ConcatSquarePair& pair, unsigned fermat_index, std::uint64_t t) {
  return {{"family", "piezas"}, {"fermat_index", fermat_index}, {"t", t},
          {"block_length", pair.block_length}, {"x", pair.x.get_str()}, {"y", pair.y.get_str()},
          {"verified", verify_concat_square(pair.x, pair.y, pair.block_length)}};
}

inline json cube_record(const CubeTriple& c, std::uint64_t l) {
  return {{"family", "vitalis"}, {"l", l}, {"x", c.x.get_str()}, {"y", c.y.get_str()}, {"z", c.z.get_str()},
          {"n", c.n.get_str()}, {"verified", c.x * c.x * c.x + c.y * c.y * c.y + c.z * c.z * c.z == c.n}};
}

}  // namespace recnum
