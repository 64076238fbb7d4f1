#include <recnum/search.hpp>

#include <gtest/gtest.h>

using namespace recnum;

namespace {

using Values = std::vector<natural>;

FunctionSpec spec(std::string_view text) { return FunctionSpec::parse(text); }

Values hardy(const char* fn, Engine engine = Engine::automatic, unsigned k = 1, std::uint64_t b = 10,
             unsigned jobs = 1) {
  SearchConfig cfg{Base(b), k, spec(fn), engine, std::nullopt, false, jobs};
  return values_of(search_hardy(cfg));
}

Values armstrong_order(std::uint64_t b, std::uint64_t order) {
  return values_of(search_armstrong(Base(b), {order, order, 1}));
}

}  // namespace

TEST(SearchHardy, Factorions) {
  EXPECT_EQ(hardy("factorial"), (Values{1, 2, 145, 40585}));
  EXPECT_EQ(hardy("factorial", Engine::scan), (Values{1, 2, 145, 40585}));
}

TEST(SearchHardy, Cubes) { EXPECT_EQ(hardy("pow:3"), (Values{1, 153, 370, 371, 407})); }

TEST(SearchHardy, GroupedCubes) {
  const Values v = hardy("pow:3", Engine::automatic, 2);
  const Values expected{1,      407,    1000,   1001,   41833,  165033, 221859, 336700, 336701,
                        340067, 341067, 407000, 407001, 444664, 487215, 982827, 983221, 1268784};
  EXPECT_EQ(v, expected);
}

TEST(SearchHardy, ExponentialAndSubfactorial) {
  EXPECT_EQ(hardy("expbase:2"), Values{});
  EXPECT_EQ(hardy("expbase:3"), Values{12});
  EXPECT_EQ(hardy("expbase:4"), (Values{4624, 595968}));
  EXPECT_EQ(hardy("subfactorial"), Values{148349});
}

TEST(SearchHardy, ZeroIsOptIn) {
  SearchConfig cfg{Base(10), 1, spec("pow:3"), Engine::scan, natural(1000), true, 1};
  EXPECT_EQ(values_of(search_hardy(cfg)).front(), 0);
  cfg.engine = Engine::multiset;
  EXPECT_EQ(values_of(search_hardy(cfg)).front(), 0);
}

TEST(SearchHardy, ConfigErrors) {
  SearchConfig cfg{Base(10), 2, spec("pow:3"), Engine::multiset, std::nullopt, false, 1};
  EXPECT_THROW(search_hardy(cfg), config_error);
  cfg.k = 1;
  cfg.engine = Engine::preimage;
  EXPECT_THROW(search_hardy(cfg), config_error);
  cfg.engine = Engine::scan;
  cfg.fn = spec("selfpow");
  cfg.k = 9;
  EXPECT_THROW(search_hardy(cfg), config_error);
  cfg.base = Base(37);
  cfg.k = 1;
  EXPECT_THROW(search_hardy(cfg), config_error);
}

TEST(SearchHardy, HitsStayBelowBoundAndReverify) {
  for (const char* fn : {"factorial", "pow:4", "pow:5", "expbase:4"}) {
    const natural n_max = hardy_bound(spec(fn), Base(10), 1).n_max;
    for (const SearchHit& h : search_hardy({Base(10), 1, spec(fn), Engine::automatic, std::nullopt, false, 1})) {
      EXPECT_LE(h.value, n_max);
      natural sum = 0;
      for (const auto& d : to_digits(h.value, Base(10)).digits) sum += spec(fn).eval(std::uint64_t{d});
      EXPECT_EQ(sum, h.value);
    }
  }
  EXPECT_THROW(make_hardy_hit(natural(146), spec("factorial"), Base(10), 1), invariant_violation);
}

// Catalog specs with a derived ceiling up to 10^7, across several bases.
TEST(EngineEquivalence, ScanMatchesMultiset) {
  int compared = 0;
  for (std::uint64_t b : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16}) {
    for (const char* fn : {"pow:1", "pow:2", "pow:3", "pow:4", "pow:5", "pow:6", "pow:7", "factorial", "subfactorial",
                           "expbase:2", "expbase:3", "expbase:4", "expbase:5", "selfpow", "poly:1,1,1"}) {
      const FunctionSpec f = spec(fn);
      const natural n_max = hardy_bound(f, Base(b), 1).n_max;
      if (n_max > 10000000) continue;
      ++compared;
      ASSERT_EQ(hardy(fn, Engine::scan, 1, b), hardy(fn, Engine::multiset, 1, b)) << fn << " base " << b;
    }
  }
  EXPECT_GT(compared, 60);
}

TEST(Determinism, JobCountDoesNotChangeOutput) {
  for (Engine e : {Engine::scan, Engine::multiset}) {
    const Values one = hardy("pow:5", e, 1, 10, 1);
    EXPECT_EQ(hardy("pow:5", e, 1, 10, 2), one);
    EXPECT_EQ(hardy("pow:5", e, 1, 10, 8), one);
  }
  const Values k2 = hardy("pow:3", Engine::scan, 2, 10, 1);
  EXPECT_EQ(hardy("pow:3", Engine::scan, 2, 10, 8), k2);
  const auto rev = [](unsigned jobs) {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    for (const auto& h : search_reversal(Base(10), 6, jobs)) out.emplace_back(h.value.get_str(), h.multiplier);
    return out;
  };
  EXPECT_EQ(rev(2), rev(1));
  EXPECT_EQ(rev(8), rev(1));
}

TEST(SearchArmstrong, SmallBases) {
  EXPECT_EQ(values_of(search_armstrong(Base(3))), (Values{5, 8, 17}));
  // Base-4 numerals 130 131 203 223 313 332 1103 3303.
  EXPECT_EQ(values_of(search_armstrong(Base(4))), (Values{28, 29, 35, 43, 55, 62, 83, 243}));
  EXPECT_EQ(armstrong_order(10, 4), (Values{1634, 8208, 9474}));
  EXPECT_EQ(armstrong_order(10, 3), (Values{153, 370, 371, 407}));
}

TEST(SearchWells, Catalog) {
  EXPECT_EQ(values_of(search_wells(spec("factorial"), Base(10))), (Values{1, 22, 23, 24}));
  EXPECT_EQ(values_of(search_wells(spec("selfpow"), Base(10))), (Values{1, 8, 9}));
  EXPECT_EQ(values_of(search_wells(spec("subfactorial"), Base(10))), (Values{24, 25}));
  EXPECT_EQ(values_of(search_wells(spec("pow:4"), Base(10))), (Values{1, 2}));
  EXPECT_EQ(values_of(search_wells(spec("factorial"), Base(10), natural(23))), (Values{1, 22, 23}));
}

TEST(SearchWellsReverse, Catalog) {
  const natural cap("1000000000");
  EXPECT_EQ(values_of(search_wells_reverse(spec("pow:5"), Base(10), cap)), (Values{1, 32, 243, 1024}));
  EXPECT_EQ(values_of(search_wells_reverse(spec("pow:5"), Base(10), cap, true)), (Values{0, 1, 32, 243, 1024}));
  EXPECT_EQ(values_of(search_wells_reverse(spec("pow:4"), Base(10), cap)), (Values{1, 16}));
  EXPECT_NE(values_of(search_wells_reverse(spec("pow:4"), Base(10), cap, true)), (Values{0, 1, 32, 243, 1024}));
}

TEST(SearchWellsReverse, LengthOne) {
  for (const char* fn : {"pow:2", "factorial", "expbase:9", "expbase:10", "selfpow"}) {
    const Values v = values_of(search_wells_reverse(spec(fn), Base(10), natural(9)));
    const bool one_digit = spec(fn).eval(1) < 10;
    EXPECT_EQ(!v.empty() && v.front() == spec(fn).eval(1), one_digit) << fn;
  }
}

TEST(SearchDudeney, Catalog) {
  EXPECT_EQ(values_of(search_dudeney(spec("pow:3"), Base(10))), (Values{1, 8, 17, 18, 26, 27}));
  EXPECT_EQ(values_of(search_dudeney(spec("pow:2"), Base(10))), (Values{1, 9}));
  EXPECT_EQ(values_of(search_dudeney(spec("fib"), Base(10), natural(100))), (Values{1, 5, 10, 31, 35, 62, 72}));
  EXPECT_THROW(search_dudeney(spec("fib"), Base(10)), unsupported_function);
}

TEST(SearchPowersum, Catalog) {
  const Values cubes{1, 512, 4913, 5832, 17576, 19683};
  EXPECT_EQ(values_of(search_powersum(3, Base(10))), cubes);
  EXPECT_EQ(values_of(search_powersum(2, Base(10))), (Values{1, 81}));
  EXPECT_EQ(values_of(search_powersum(2, Base(2))), (Values{1}));
  PowersumOptions with_zero;
  with_zero.include_zero = true;
  EXPECT_EQ(values_of(search_powersum(3, Base(10), with_zero)).front(), 0);
}

TEST(SearchPowersum, DualityWithDudeney) {
  for (unsigned long p = 2; p <= 5; ++p) {
    Values cubes;
    for (const auto& s : values_of(search_dudeney(spec("pow:" + std::to_string(p)), Base(10)))) cubes.push_back(pow_nat(s, p));
    EXPECT_EQ(values_of(search_powersum(p, Base(10))), cubes) << p;
  }
}

TEST(SearchPowersum, EnginesAgree) {
  for (std::uint64_t b : {2, 3, 7, 10}) {
    for (unsigned long p = 2; p <= 3; ++p) {
      PowersumOptions scan;
      scan.engine = Engine::scan;
      scan.jobs = 2;
      EXPECT_EQ(values_of(search_powersum(p, Base(b), scan)), values_of(search_powersum(p, Base(b)))) << b << " " << p;
    }
  }
}

TEST(SearchPowersum, CongruenceFilterIsSound) {
  PowersumOptions filtered, plain;
  filtered.engine = plain.engine = Engine::scan;
  plain.congruence_filter = false;
  EXPECT_EQ(values_of(search_powersum(3, Base(10), filtered)), values_of(search_powersum(3, Base(10), plain)));
  const auto ok = powersum_admissible_residues(3, Base(10));
  for (std::uint64_t r = 0; r < 9; ++r) EXPECT_EQ(ok[r], (r * r * r) % 9 == r) << r;
}

TEST(SearchReversal, Catalog) {
  const auto four = search_reversal(Base(10), 4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].value, 8712);
  EXPECT_EQ(four[0].multiplier, 4u);
  EXPECT_EQ(four[0].reversal, 2178);
  EXPECT_EQ(four[1].value, 9801);
  EXPECT_EQ(four[1].multiplier, 9u);
  EXPECT_TRUE(search_reversal(Base(10), 2).empty());
  EXPECT_TRUE(search_reversal(Base(10), 3).empty());
  const auto five = search_reversal(Base(10), 5);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five[0].value, 87912);
  EXPECT_EQ(five[1].value, 98901);
}
