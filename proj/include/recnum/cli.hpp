#pragma once

// Command-line front end.
//
//   recnum search {hardy|armstrong|wells|wells-reverse|dudeney|powersum|reversal} [flags]
//   recnum bound  {hardy|wells|dudeney|powersum} [flags]
//   recnum family {piezas|vitalis} [flags]
//   recnum corpus check [--file PATH]
//
// Exit codes: 0 success, 1 corpus mismatch, 2 usage/configuration error,
// 3 unsupported function (no finiteness argument and no cap), 4 internal
// invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "records.hpp"

namespace recnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitInternal = 4;

inline constexpr const char* kJobsEnv = "RECNUM_JOBS";

inline unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
  std::uint64_t base = 10;
  unsigned k = 1;
  std::string fn;
  std::string engine = "auto";
  std::string cap;
  bool include_zero = false;
  int zero_pow_zero = 1;
  unsigned jobs = default_jobs();
  std::string format = "text";
  std::optional<std::uint64_t> max_order;
  std::uint64_t min_order = 2;
  unsigned digits = 4;
  unsigned fermat_index = 2;
  std::uint64_t t = 0;
  std::uint64_t l = 0;
  std::size_t elide = 1000;
  std::string file;
  std::string embedded_corpus;

  bool records() const { return format == "records"; }
  Base base_value() const { return Base(base); }
  std::optional<natural> cap_value() const {
    if (cap.empty()) return std::nullopt;
    natural c = parse_natural(cap);
    if (c < 1) throw config_error("--cap must be >= 1");
    return c;
  }
  FunctionSpec spec() const {
    if (fn.empty()) throw config_error("--fn is required");
    return FunctionSpec::parse(fn, zero_pow_zero == 0 ? ZeroPowZero::zero : ZeroPowZero::one);
  }
  unsigned long powersum_exponent() const {
    const FunctionSpec f = spec();
    const auto* p = std::get_if<fn::Power>(&f.kind());
    if (!p || p->exponent < 2) throw config_error("powersum takes --fn pow:<p> with p >= 2");
    return p->exponent;
  }
};

namespace detail {

inline std::string join(const std::vector<natural>& v, const char* sep, std::size_t elide_at) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += elide(v[i].get_str(), elide_at);
  }
  return out;
}

inline void print_hits(std::ostream& out, const Options& o, const std::vector<SearchHit>& hits, const std::string& header,
                       const std::string& fn_text, const natural& bound_used) {
  if (o.records()) {
    for (const auto& h : hits) out << hit_record(h, fn_text, bound_used).dump() << '\n';
    return;
  }
  out << "# " << header << '\n';
  for (const auto& h : hits) {
    out << elide(h.value.get_str(), o.elide) << '\t';
    switch (h.family) {
      case Family::hardy:
      case Family::armstrong: {
        out << "= " << join({h.images.rbegin(), h.images.rend()}, " + ", o.elide) << "  [blocks";
        for (auto it = h.blocks.blocks.rbegin(); it != h.blocks.blocks.rend(); ++it) out << ' ' << it->get_str();
        out << ']';
        break;
      }
      case Family::wells: out << "F(n) = " << elide(h.images[0].get_str(), o.elide) << " has n digits"; break;
      case Family::wells_reverse: out << "= F(D(n)) = " << h.images[0].get_str(); break;
      case Family::dudeney: out << "digit sum of F(n) = " << elide(h.images[0].get_str(), o.elide); break;
      case Family::powersum: out << "digit sum " << h.images[0].get_str(); break;
    }
    out << '\n';
  }
  out << "# " << hits.size() << " hits\n";
}

inline Engine engine_of(const Options& o) { return ::recnum::detail::parse_engine(o.engine); }

inline int do_search(const std::string& which, const Options& o, std::ostream& out) {
  const Base b = o.base_value();
  if (which == "hardy") {
    SearchConfig cfg{b, o.k, o.spec(), engine_of(o), o.cap_value(), o.include_zero, o.jobs};
    const Engine engine = resolve_hardy_engine(cfg);
    cfg.engine = engine;
    const auto hits = search_hardy(cfg);
    const natural ceiling = hardy_ceiling(cfg);
    print_hits(out, o, hits,
               "hardy base=" + std::to_string(o.base) + " k=" + std::to_string(o.k) + " fn=" + cfg.fn.to_string() +
                   " engine=" + to_string(engine) + " ceiling=" + ceiling.get_str(),
               cfg.fn.to_string(), ceiling);
  } else if (which == "armstrong") {
    ArmstrongOptions ao{o.max_order, o.min_order, o.jobs};
    const std::uint64_t ceiling = armstrong_order_ceiling(b);
    const auto hits = search_armstrong(b, ao);
    print_hits(out, o, hits,
               "armstrong base=" + std::to_string(o.base) + " order ceiling=" + std::to_string(ceiling) +
                   (o.max_order ? " max_order=" + std::to_string(*o.max_order) : std::string()),
               "pow:order", from_u64(ceiling));
  } else if (which == "wells") {
    const FunctionSpec f = o.spec();
    const auto cap = o.cap_value();
    const natural stop = cap ? natural(*cap + 1) : wells_cutoff(f, b).cutoff;
    print_hits(out, o, search_wells(f, b, cap),
               "wells base=" + std::to_string(o.base) + " fn=" + f.to_string() + " cutoff=" + stop.get_str(),
               f.to_string(), stop);
  } else if (which == "wells-reverse") {
    const FunctionSpec f = o.spec();
    const auto cap = o.cap_value();
    if (!cap) throw config_error("wells-reverse requires --cap");
    print_hits(out, o, search_wells_reverse(f, b, *cap, o.include_zero),
               "wells-reverse base=" + std::to_string(o.base) + " fn=" + f.to_string() + " cap=" + cap->get_str(),
               f.to_string(), *cap);
  } else if (which == "dudeney") {
    const FunctionSpec f = o.spec();
    if (engine_of(o) == Engine::multiset) throw config_error("the multiset engine applies to hardy searches only");
    const auto cap = o.cap_value();
    const natural stop = dudeney_cutoff(f, b, cap).cutoff;
    print_hits(out, o, search_dudeney(f, b, cap, o.include_zero),
               "dudeney base=" + std::to_string(o.base) + " fn=" + f.to_string() + " cutoff=" + stop.get_str(),
               f.to_string(), stop);
  } else if (which == "powersum") {
    const unsigned long p = o.powersum_exponent();
    PowersumOptions po{engine_of(o), o.cap_value(), o.include_zero, true, o.jobs};
    const PowersumBound pb = powersum_bound(p, b);
    print_hits(out, o, search_powersum(p, b, po),
               "powersum base=" + std::to_string(o.base) + " p=" + std::to_string(p) + " s_max=" +
                   pb.s_max.get_str() + " coarse=" + elide(pb.coarse.get_str(), o.elide),
               "pow:" + std::to_string(p), pb.coarse);
  } else if (which == "reversal") {
    const auto hits = search_reversal(b, o.digits, o.jobs);
    if (o.records()) {
      for (const auto& h : hits) out << reversal_record(h, b, o.digits).dump() << '\n';
    } else {
      out << "# reversal base=" << o.base << " digits=" << o.digits << '\n';
      for (const auto& h : hits) out << h.value.get_str() << "\t= " << h.multiplier << " x " << h.reversal.get_str() << '\n';
      out << "# " << hits.size() << " hits\n";
    }
  }
  return kExitOk;
}

inline void print_cutoff(std::ostream& out, const Options& o, const CutoffReport& r, const char* family,
                         const FunctionSpec& f) {
  if (o.records()) {
    out << cutoff_record(r, family, o.base_value(), f.to_string()).dump() << '\n';
    return;
  }
  out << "cutoff=" << r.cutoff.get_str() << "\nmethod=" << to_string(r.method) << "\nrule: " << r.rule << '\n';
  for (const auto& w : r.witnesses)
    out << "  n=" << w.n.get_str() << ": " << elide(w.lhs.get_str(), o.elide) << ' ' << w.relation << ' '
        << elide(w.rhs.get_str(), o.elide) << (w.holds ? "  (holds)" : "  (fails)") << '\n';
}

inline int do_bound(const std::string& which, const Options& o, std::ostream& out) {
  const Base b = o.base_value();
  if (which == "hardy") {
    const FunctionSpec f = o.spec();
    const BoundReport r = hardy_bound(f, b, o.k);
    if (o.records()) {
      out << bound_record(r, b, o.k, f.to_string()).dump() << '\n';
    } else {
      out << "s=" << r.s_k.get_str() << "\nM=" << r.M << "\nn_max=" << r.n_max.get_str() << '\n';
      for (const auto& line : r.justification) out << "  " << line << '\n';
    }
  } else if (which == "wells") {
    const FunctionSpec f = o.spec();
    print_cutoff(out, o, wells_cutoff(f, b), "wells", f);
  } else if (which == "dudeney") {
    const FunctionSpec f = o.spec();
    print_cutoff(out, o, dudeney_cutoff(f, b, o.cap_value()), "dudeney", f);
  } else if (which == "powersum") {
    const unsigned long p = o.powersum_exponent();
    const PowersumBound r = powersum_bound(p, b);
    if (o.records()) {
      out << powersum_bound_record(r, p, b).dump() << '\n';
    } else {
      out << "coarse=" << elide(r.coarse.get_str(), o.elide) << "\ns_max=" << r.s_max.get_str()
          << "\ns_scan=" << r.s_scan.get_str() << '\n';
    }
  }
  return kExitOk;
}

inline int do_family(const std::string& which, const Options& o, std::ostream& out) {
  if (which == "piezas") {
    const auto pair = piezas_generate(o.fermat_index, o.t);
    const bool ok = verify_concat_square(pair.x, pair.y, pair.block_length);
    if (o.records()) {
      out << pair_record(pair, o.fermat_index, o.t).dump() << '\n';
    } else {
      out << "fermat_index=" << o.fermat_index << " t=" << o.t << " block_length=" << pair.block_length << '\n'
          << "x=" << elide(pair.x.get_str(), o.elide) << '\n'
          << "y=" << elide(pair.y.get_str(), o.elide) << '\n'
          << "verified=" << (ok ? "yes" : "no") << '\n';
    }
    if (!ok) throw invariant_violation("generated pair failed verification");
  } else if (which == "vitalis") {
    const CubeTriple c = vitalis_generate(o.l);
    if (o.records()) {
      out << cube_record(c, o.l).dump() << '\n';
    } else {
      out << "l=" << o.l << " x=" << elide(c.x.get_str(), o.elide) << " y=" << elide(c.y.get_str(), o.elide)
          << " z=" << elide(c.z.get_str(), o.elide) << " n=" << elide(c.n.get_str(), o.elide) << " verified=yes\n";
    }
  }
  return kExitOk;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read corpus file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string list(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + elide(v[i], 60, 12);
  return out + "]";
}

inline int do_corpus(const Options& o, std::ostream& out) {
  const std::string text = o.file.empty() ? o.embedded_corpus : read_file(o.file);
  const auto entries = parse_corpus(text);
  const CorpusReport report = corpus_check(entries, o.jobs);
  for (const auto& oc : report.outcomes) {
    if (o.records()) {
      out << nlohmann::json{{"id", oc.id},           {"ok", oc.ok()},         {"erratum", oc.erratum},
                            {"expected", oc.expected}, {"actual", oc.actual}}
                 .dump()
          << '\n';
      continue;
    }
    if (!oc.ok())
      out << "MISMATCH " << oc.id << (oc.erratum ? " (erratum reproduced)" : "") << ": expected " << list(oc.expected)
          << " actual " << list(oc.actual) << '\n';
    else if (oc.erratum)
      out << "erratum confirmed " << oc.id << ": printed " << list(oc.expected) << " does not verify\n";
  }
  if (!o.records()) out << report.outcomes.size() << " entries, " << report.mismatches() << " mismatches\n";
  return report.mismatches() == 0 ? kExitOk : kExitMismatch;
}

}  // namespace detail

// Runs one command line (args excludes the program name). `embedded_corpus`
// is the corpus used by `corpus check` when no --file is given.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::string& embedded_corpus = {}) {
  Options o;
  o.embedded_corpus = embedded_corpus;
  CLI::App app{"Digit-defined fixed points: bounded searches, cutoffs and identity families", "recnum"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> engines = {"auto", "scan", "multiset", "preimage"};
  auto common = [&](CLI::App* sc) {
    sc->add_option("--jobs", o.jobs, "worker threads (default $RECNUM_JOBS or hardware threads)")
        ->check(CLI::PositiveNumber);
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "records"}));
    sc->add_option("--elide", o.elide, "text mode: elide numerals longer than this (0 = never)");
  };
  auto searchish = [&](CLI::App* sc) {
    common(sc);
    sc->add_option("--base", o.base, "radix b >= 2");
    sc->add_option("--k", o.k, "block width")->check(CLI::PositiveNumber);
    sc->add_option("--fn", o.fn, "function: pow:<e> selfpow expbase:<c> factorial subfactorial fib poly:<q>,...");
    sc->add_option("--engine", o.engine, "search engine")->check(CLI::IsMember(engines));
    sc->add_option("--cap", o.cap, "hard inclusive ceiling overriding derived bounds");
    sc->add_flag("--include-zero", o.include_zero, "admit n = 0");
    sc->add_option("--zero-pow-zero", o.zero_pow_zero, "value of 0^0 for selfpow")->check(CLI::IsMember({0, 1}));
  };

  std::string group, leaf;
  auto leaf_of = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sc = parent->add_subcommand(name, desc);
    sc->callback([&group, &leaf, parent, name] {
      group = parent->get_name();
      leaf = name;
    });
    return sc;
  };

  CLI::App* search = app.add_subcommand("search", "exhaustive bounded searches");
  search->require_subcommand(1);
  for (const char* name : {"hardy", "wells", "wells-reverse", "dudeney", "powersum"}) searchish(leaf_of(search, name, ""));
  {
    CLI::App* a = leaf_of(search, "armstrong", "Armstrong numbers of every order");
    searchish(a);
    a->add_option("--max-order", o.max_order, "highest order to search");
    a->add_option("--min-order", o.min_order, "lowest order to search (default 2)");
    CLI::App* r = leaf_of(search, "reversal", "integral multiples of their reversals");
    searchish(r);
    r->add_option("--digits", o.digits, "digit count m >= 2");
  }
  CLI::App* bound = app.add_subcommand("bound", "derived search cutoffs");
  bound->require_subcommand(1);
  for (const char* name : {"hardy", "wells", "dudeney", "powersum"}) searchish(leaf_of(bound, name, ""));
  CLI::App* family = app.add_subcommand("family", "constructive identity families");
  family->require_subcommand(1);
  {
    CLI::App* p = leaf_of(family, "piezas", "concatenated squares from Fermat primes");
    common(p);
    p->add_option("--fermat-index", o.fermat_index, "i with Fermat prime 2^(2^i)+1, i in 2..4");
    p->add_option("--t", o.t, "step t >= 0 (u = 4t+3)");
    CLI::App* v = leaf_of(family, "vitalis", "the 153-seeded cube family");
    common(v);
    v->add_option("--l", o.l, "repeat count l >= 0");
  }
  CLI::App* corpus = app.add_subcommand("corpus", "ground-truth regression corpus");
  corpus->require_subcommand(1);
  {
    CLI::App* c = leaf_of(corpus, "check", "re-run every corpus entry");
    common(c);
    c->add_option("--file", o.file, "corpus file (default: the embedded corpus)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (group == "search") return detail::do_search(leaf, o, out);
    if (group == "bound") return detail::do_bound(leaf, o, out);
    if (group == "family") return detail::do_family(leaf, o, out);
    if (group == "corpus") return detail::do_corpus(o, out);
    err << "no command\n";
    return kExitUsage;
  } catch (const unsupported_function& e) {
    err << "unsupported function: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace recnum::cli
