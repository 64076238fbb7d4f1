#include <recnum/families.hpp>

#include <gtest/gtest.h>

using namespace recnum;

TEST(VerifyConcatSquare, KnownPairs) {
  EXPECT_TRUE(verify_concat_square(12, 33, 2));
  EXPECT_TRUE(verify_concat_square(88, 33, 2));
  EXPECT_FALSE(verify_concat_square(12, 34, 2));
  EXPECT_FALSE(verify_concat_square(9412, 2352, 4));
  EXPECT_TRUE(verify_concat_square(natural("941176470588"), natural("235294117648"), 12));
  EXPECT_FALSE(verify_concat_square(100, 0, 2));
}

TEST(ReflectPair, Values) {
  EXPECT_EQ(reflect_pair(12, 2), 88);
  EXPECT_EQ(reflect_pair(9412, 4), 588);
  EXPECT_EQ(reflect_pair(1, 1), 9);
  EXPECT_THROW(reflect_pair(100, 2), config_error);
}

TEST(ReflectPair, KnownPairSymmetry) {
  for (const natural x : {natural(12), natural(88)}) {
    ASSERT_TRUE(verify_concat_square(x, 33, 2));
    EXPECT_TRUE(verify_concat_square(reflect_pair(x, 2), 33, 2));
    EXPECT_EQ(reflect_pair(reflect_pair(x, 2), 2), x);
  }
}

TEST(Piezas, Seventeen) {
  const auto t0 = piezas_generate(2, 0);
  EXPECT_EQ(t0.x, natural("941176470588"));
  EXPECT_EQ(t0.y, natural("235294117648"));
  EXPECT_EQ(t0.block_length, 12u);
  const auto t1 = piezas_generate(2, 1);
  EXPECT_EQ(t1.x, natural("9411764705882352941176470588"));
  EXPECT_EQ(t1.y, natural("2352941176470588235294117648"));
  EXPECT_EQ(t1.block_length, 28u);
}

TEST(Piezas, TwoFiftySeven) {
  const auto p = piezas_generate(3, 0);
  EXPECT_EQ(p.block_length, 192u);
  const std::string x = p.x.get_str();
  EXPECT_EQ(x.size(), 192u);
  EXPECT_EQ(x.substr(0, 12), "996108949416");
  EXPECT_EQ(x.substr(180), "544747081712");
  EXPECT_EQ(p.y.get_str().size(), 191u);
  EXPECT_TRUE(verify_concat_square(p.x, p.y, p.block_length));
}

TEST(Piezas, ParamsValidated) {
  EXPECT_THROW(PiezasParams(1, 0), config_error);
  EXPECT_THROW(PiezasParams(5, 0), config_error);
  const PiezasParams p(4, 2);
  EXPECT_EQ(p.fe(), 65537);
  EXPECT_EQ(p.a(), 256);
  EXPECT_EQ(p.l(), 16384u);
  EXPECT_EQ(p.u(), 11u);
}

// Every (i, t) in {2,3,4} x {0,1,2}: exact division, verification, and digit
// lengths. x always fills its block; y does for i = 2 and is one digit short
// (a leading zero inside its block) for the larger primes.
TEST(Piezas, FamilyVerifiesExactly) {
  for (unsigned i = 2; i <= 4; ++i) {
    for (std::uint64_t t = 0; t <= 2; ++t) {
      const PiezasParams params(i, t);
      const auto pair = piezas_generate(params);
      ASSERT_EQ(pair.block_length, params.l() * params.u());
      ASSERT_TRUE(verify_concat_square(pair.x, pair.y, pair.block_length)) << i << "," << t;
      const Base ten(10);
      EXPECT_EQ(digit_count(pair.x, ten), pair.block_length) << i << "," << t;
      const std::size_t ylen = digit_count(pair.y, ten);
      EXPECT_LE(ylen, pair.block_length);
      if (i == 2) EXPECT_EQ(ylen, pair.block_length);
    }
  }
}

TEST(Vitalis, KnownValues) {
  const auto c0 = vitalis_generate(0);
  EXPECT_EQ(c0.n, 153);
  EXPECT_EQ(c0.x, 1);
  EXPECT_EQ(c0.y, 5);
  EXPECT_EQ(c0.z, 3);
  const auto c1 = vitalis_generate(1);
  EXPECT_EQ(c1.n, 165033);
  const auto c2 = vitalis_generate(2);
  EXPECT_EQ(c2.x, 166);
  EXPECT_EQ(c2.n, 166500333);
  EXPECT_EQ(vitalis_generate(3).n, natural("166650003333"));
}

TEST(Vitalis, IdentityHoldsForManyLengths) {
  for (std::uint64_t l = 0; l <= 50; ++l) {
    const auto c = vitalis_generate(l);
    ASSERT_EQ(c.x * c.x * c.x + c.y * c.y * c.y + c.z * c.z * c.z, c.n) << l;
    ASSERT_EQ(digit_count(c.n, Base(10)), 3 * (l + 1));
  }
}
