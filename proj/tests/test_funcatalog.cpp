#include <recnum/funcatalog.hpp>

#include <gtest/gtest.h>

using namespace recnum;

namespace {

FunctionSpec spec(std::string_view text) { return FunctionSpec::parse(text); }

}  // namespace

TEST(Eval, KnownValues) {
  EXPECT_EQ(spec("selfpow").eval(5), 3125);
  EXPECT_EQ(spec("expbase:4").eval(6), 4096);
  EXPECT_EQ(spec("pow:3").eval(50), 125000);
  EXPECT_EQ(spec("poly:1/2,1/2,0").eval(10), 55);
  EXPECT_THROW(spec("poly:1/2,0").eval(3), domain_error);
  EXPECT_THROW(spec("poly:1,-5").eval(2), domain_error);
}

TEST(Factorial, KnownValues) {
  EXPECT_EQ(factorial(8), 40320);
  EXPECT_EQ(factorial(0), 1);
}

TEST(Subfactorial, KnownValues) {
  EXPECT_EQ(subfactorial(0), 1);
  EXPECT_EQ(subfactorial(1), 0);
  EXPECT_EQ(subfactorial(4), 9);
}

TEST(Fibonacci, KnownValues) {
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(55), natural("139583862445"));
  EXPECT_THROW(fibonacci(0), domain_error);
}

TEST(Factorial, Recurrence) {
  for (unsigned long x = 0; x <= 200; ++x) ASSERT_EQ(factorial(x + 1), natural(x + 1) * factorial(x));
}

TEST(Subfactorial, RecurrenceAndAlternatingSum) {
  for (unsigned long x = 0; x <= 50; ++x) {
    if (x >= 2) ASSERT_EQ(subfactorial(x), natural(x - 1) * (subfactorial(x - 1) + subfactorial(x - 2)));
    // x! * sum (-1)^i / i!  ==  sum (-1)^i x!/i!
    natural alt = 0;
    for (unsigned long i = 0; i <= x; ++i) {
      const natural term = factorial(x) / factorial(i);
      alt += (i % 2 == 0) ? term : natural(-term);
    }
    ASSERT_EQ(subfactorial(x), alt) << x;
  }
}

TEST(Fibonacci, MatchesIteration) {
  natural a = 1, b = 1;  // F(1), F(2)
  for (unsigned long x = 1; x <= 500; ++x) {
    ASSERT_EQ(fibonacci(x), a) << x;
    natural next = a + b;
    a = b;
    b = next;
  }
}

TEST(SelfPower, ZeroConvention) {
  const auto one = FunctionSpec::parse("selfpow", ZeroPowZero::one);
  const auto zero = FunctionSpec::parse("selfpow", ZeroPowZero::zero);
  EXPECT_EQ(one.eval(0), 1);
  EXPECT_EQ(zero.eval(0), 0);
  for (std::uint64_t x = 1; x <= 40; ++x) ASSERT_EQ(one.eval(x), zero.eval(x));
  EXPECT_EQ(one.with_zero_pow_zero(ZeroPowZero::zero), zero);
  EXPECT_NE(one, zero);
}

TEST(Parse, CanonicalRoundTrip) {
  for (const char* text : {"pow:5", "selfpow", "expbase:4", "factorial", "subfactorial", "fib", "poly:1,0,0",
                           "poly:1/2,-3,7"}) {
    EXPECT_EQ(spec(text).to_string(), text);
    EXPECT_EQ(spec(spec(text).to_string()), spec(text));
  }
  EXPECT_EQ(spec("poly:0,0,2,1").to_string(), "poly:2,1");
  EXPECT_EQ(spec("poly:2/4").to_string(), "poly:1/2");
}

TEST(Parse, RejectsEverythingElse) {
  for (const char* text : {"", "pow", "pow:", "pow:0", "pow:05", "pow:-1", "pow:3 ", "Pow:3", "expbase:1", "expbase:x",
                           "poly:", "poly:1,,2", "poly:1/0", "poly:a", "fact", "fib:2", "selfpow:1"}) {
    EXPECT_THROW(spec(text), malformed_input) << '"' << text << '"';
  }
}

TEST(Growth, Classes) {
  using K = GrowthClass::Kind;
  EXPECT_EQ(spec("pow:3").growth(), (GrowthClass{K::polynomial, 3, 0}));
  EXPECT_EQ(spec("poly:1,0,0").growth(), (GrowthClass{K::polynomial, 2, 0}));
  EXPECT_EQ(spec("factorial").growth().kind, K::factorial_like);
  EXPECT_EQ(spec("subfactorial").growth().kind, K::factorial_like);
  EXPECT_EQ(spec("expbase:4").growth(), (GrowthClass{K::exponential, 0, 4}));
  EXPECT_EQ(spec("fib").growth(), (GrowthClass{K::exponential, 0, 0}));
  EXPECT_EQ(spec("selfpow").growth().kind, K::self_exponential);
}
