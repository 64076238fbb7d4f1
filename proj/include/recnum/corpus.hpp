#pragma once

// Ground-truth regression corpus: one JSON object per line (blank lines and
// lines starting with '#' are skipped).
//
//   id        unique name
//   family    hardy | armstrong | wells | wells-reverse | dudeney | powersum |
//             reversal | concat-square | piezas | vitalis
//   expect    array of decimal values (strings or integers); reversal values
//             are written "n:lambda". Strictly increasing for search families.
//   erratum   optional, true when `expect` reproduces a known-wrong published
//             list or pair; the entry passes only if it does NOT reproduce.
//   source    provenance note
// plus the family's parameters: base, k, fn, zero_pow_zero (0|1), cap,
// include_zero, engine, max_order, min_order, digits, fermat_index, t, l,
// x, y, block_length.

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "families.hpp"
#include "search.hpp"

namespace recnum {

struct CorpusEntry {
  std::string id;
  std::string family;
  nlohmann::json params;
  std::vector<std::string> expect;
  bool erratum = false;
  std::string source;

  bool is_search_family() const {
    return family != "concat-square" && family != "piezas" && family != "vitalis";
  }
};

struct CorpusOutcome {
  std::string id;
  bool erratum = false;
  std::vector<std::string> expected;
  std::vector<std::string> actual;

  bool reproduced() const { return expected == actual; }
  bool ok() const { return erratum ? !reproduced() : reproduced(); }
};

struct CorpusReport {
  std::vector<CorpusOutcome> outcomes;

  std::size_t mismatches() const {
    std::size_t n = 0;
    for (const auto& o : outcomes) n += o.ok() ? 0 : 1;
    return n;
  }
};

namespace detail {

inline std::string json_numeral(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return std::to_string(v.get<std::int64_t>());
  if (v.is_string()) return v.get<std::string>();
  throw malformed_input(where + ": expected a natural number or numeral string");
}

inline natural leading_natural(const std::string& s, const std::string& where) {
  try {
    return parse_natural(s.substr(0, s.find(':')));
  } catch (const malformed_input&) {
    throw malformed_input(where + ": bad value '" + s + "'");
  }
}

inline Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::automatic;
  if (s == "scan") return Engine::scan;
  if (s == "multiset") return Engine::multiset;
  if (s == "preimage") return Engine::preimage;
  throw config_error("unknown engine '" + s + "'");
}

}  // namespace detail

inline CorpusEntry parse_corpus_line(std::string_view line, std::size_t line_no) {
  const std::string where = "corpus line " + std::to_string(line_no);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed_input(where + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string() || !j.contains("family") ||
      !j["family"].is_string() || !j.contains("expect") || !j["expect"].is_array())
    throw malformed_input(where + ": entries need string 'id', string 'family' and array 'expect'");
  CorpusEntry e;
  e.id = j["id"].get<std::string>();
  const std::string named = where + " (" + e.id + ")";
  e.family = j["family"].get<std::string>();
  e.erratum = j.value("erratum", false);
  e.source = j.value("source", "");
  for (const auto& v : j["expect"]) e.expect.push_back(detail::json_numeral(v, named));
  e.params = j;

  static const std::vector<std::string> families = {"hardy",    "armstrong",     "wells",  "wells-reverse",
                                                    "dudeney",  "powersum",      "reversal", "concat-square",
                                                    "piezas",   "vitalis"};
  if (std::find(families.begin(), families.end(), e.family) == families.end())
    throw malformed_input(named + ": unknown family '" + e.family + "'");
  if (j.contains("fn")) {
    try {
      (void)FunctionSpec::parse(j["fn"].get<std::string>());
    } catch (const std::exception& ex) {
      throw malformed_input(named + ": " + ex.what());
    }
  }
  if (e.is_search_family()) {
    for (std::size_t i = 1; i < e.expect.size(); ++i)
      if (!(detail::leading_natural(e.expect[i - 1], named) < detail::leading_natural(e.expect[i], named)))
        throw malformed_input(named + ": expected values are not strictly increasing");
  }
  return e;
}

inline std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_corpus_line(line, line_no));
  }
  return out;
}

inline std::vector<std::string> evaluate_entry(const CorpusEntry& e, unsigned jobs = 1) {
  const auto& p = e.params;
  const Base base(p.value("base", 10));
  const ZeroPowZero zpz = p.value("zero_pow_zero", 1) == 0 ? ZeroPowZero::zero : ZeroPowZero::one;
  auto spec = [&] { return FunctionSpec::parse(p.at("fn").get<std::string>(), zpz); };
  auto cap = [&]() -> std::optional<natural> {
    if (!p.contains("cap")) return std::nullopt;
    return parse_natural(detail::json_numeral(p["cap"], e.id));
  };
  const bool include_zero = p.value("include_zero", false);
  std::vector<std::string> out;
  auto take = [&](const std::vector<SearchHit>& hits) {
    for (const auto& h : hits) out.push_back(h.value.get_str());
  };

  if (e.family == "hardy") {
    SearchConfig cfg{base, p.value("k", 1u), spec(), detail::parse_engine(p.value("engine", "auto")), cap(),
                     include_zero, jobs};
    take(search_hardy(cfg));
  } else if (e.family == "armstrong") {
    ArmstrongOptions opts;
    if (p.contains("max_order")) opts.max_order = p["max_order"].get<std::uint64_t>();
    opts.min_order = p.value("min_order", std::uint64_t{2});
    opts.jobs = jobs;
    take(search_armstrong(base, opts));
  } else if (e.family == "wells") {
    take(search_wells(spec(), base, cap()));
  } else if (e.family == "wells-reverse") {
    const auto c = cap();
    if (!c) throw config_error(e.id + ": wells-reverse needs a cap");
    take(search_wells_reverse(spec(), base, *c, include_zero));
  } else if (e.family == "dudeney") {
    take(search_dudeney(spec(), base, cap(), include_zero));
  } else if (e.family == "powersum") {
    const FunctionSpec f = spec();
    const auto* pw = std::get_if<fn::Power>(&f.kind());
    if (!pw) throw config_error(e.id + ": powersum needs fn pow:<p>");
    PowersumOptions opts{detail::parse_engine(p.value("engine", "auto")), cap(), include_zero, true, jobs};
    take(search_powersum(pw->exponent, base, opts));
  } else if (e.family == "reversal") {
    for (const auto& h : search_reversal(base, p.at("digits").get<unsigned>(), jobs))
      out.push_back(h.value.get_str() + ":" + std::to_string(h.multiplier));
  } else if (e.family == "concat-square") {
    const natural x = parse_natural(detail::json_numeral(p.at("x"), e.id));
    const natural y = parse_natural(detail::json_numeral(p.at("y"), e.id));
    if (verify_concat_square(x, y, p.at("block_length").get<std::uint64_t>())) out = {x.get_str(), y.get_str()};
  } else if (e.family == "piezas") {
    const auto pair = piezas_generate(p.at("fermat_index").get<unsigned>(), p.at("t").get<std::uint64_t>());
    if (verify_concat_square(pair.x, pair.y, pair.block_length)) out = {pair.x.get_str(), pair.y.get_str()};
  } else if (e.family == "vitalis") {
    out.push_back(vitalis_generate(p.at("l").get<std::uint64_t>()).n.get_str());
  }
  return out;
}

inline CorpusReport corpus_check(const std::vector<CorpusEntry>& entries, unsigned jobs = 1) {
  CorpusReport report;
  for (const auto& e : entries) {
    CorpusOutcome o{e.id, e.erratum, e.expect, {}};
    try {
      o.actual = evaluate_entry(e, jobs);
    } catch (const nlohmann::json::exception& ex) {
      throw malformed_input("corpus entry " + e.id + ": " + ex.what());
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace recnum
