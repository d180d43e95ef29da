#include "wordship/tokenize.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

using namespace wordship;

namespace {

TokenSeq decompose_default(const std::string& raw) {
  return decompose(raw, fixtures::golden_rules(), Lexicons::default_form_words());
}

std::vector<std::string> surfaces(const TokenSeq& seq) {
  std::vector<std::string> out;
  for (const Token& t : seq.tokens) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST(Decompose, HyphenGroupShared) {
  TokenSeq seq = decompose_default("Aharonov-Bohm effect");
  ASSERT_EQ(seq.tokens.size(), 3u);
  EXPECT_EQ(surfaces(seq), (std::vector<std::string>{"aharonov", "bohm", "effect"}));
  ASSERT_TRUE(seq.tokens[0].hyphen_group.has_value());
  EXPECT_EQ(seq.tokens[0].hyphen_group, seq.tokens[1].hyphen_group);
  EXPECT_FALSE(seq.tokens[2].hyphen_group.has_value());
}

TEST(Decompose, FiveWordedKeyword) {
  TokenSeq seq = decompose_default("Nuclear spin-lattice relaxation effect");
  EXPECT_EQ(surfaces(seq),
            (std::vector<std::string>{"nuclear", "spin", "lattice", "relaxation", "effect"}));
  EXPECT_FALSE(seq.tokens[0].hyphen_group.has_value());
  EXPECT_TRUE(seq.tokens[1].hyphen_group.has_value());
  EXPECT_EQ(seq.tokens[1].hyphen_group, seq.tokens[2].hyphen_group);
  EXPECT_FALSE(seq.tokens[3].hyphen_group.has_value());
  EXPECT_EQ(wordship::wordship(seq), 5);
}

TEST(Decompose, FormWordFlagged) {
  TokenSeq seq = decompose_default("Defect of absorption-spectra");
  EXPECT_EQ(surfaces(seq), (std::vector<std::string>{"defect", "of", "absorption", "spectra"}));
  EXPECT_FALSE(seq.tokens[0].is_form_word);
  EXPECT_TRUE(seq.tokens[1].is_form_word);
  EXPECT_EQ(wordship::wordship(seq), 3);
}

TEST(Wordship, CountsNonFormWords) {
  EXPECT_EQ(wordship::wordship(decompose_default("Surface of acoustic wave")), 3);
  EXPECT_EQ(wordship::wordship(decompose_default("Wide band-gap semiconductor")), 4);
  EXPECT_EQ(wordship::wordship(decompose_default("laser")), 1);
}

TEST(Decompose, CanonicalMergesHyphenVariants) {
  TokenSeq spaced = decompose_default("Wide band gap semiconductor");
  TokenSeq hyphened = decompose_default("Wide band-gap semiconductor");
  EXPECT_EQ(spaced.canonical(), hyphened.canonical());
  EXPECT_NE(spaced.display(), hyphened.display());
  EXPECT_EQ(hyphened.display(), "wide band-gap semiconductor");
}

TEST(Decompose, PluralVariantMerges) {
  TokenSeq a = decompose_default("Defects of absorption spectra");
  TokenSeq b = decompose_default("Defect of absorption-spectra");
  EXPECT_EQ(a.canonical(), b.canonical());
}

TEST(Decompose, Errors) {
  EXPECT_THROW(decompose_default("   "), Error);
  EXPECT_THROW(decompose_default("()"), Error);
  EXPECT_THROW(decompose_default("\"'"), Error);
  EXPECT_THROW(decompose_default("of the"), Error);  // no meaning-bearing word
}

TEST(Decompose, HyphenSplitsOff) {
  NormalizationRules rules;
  rules.hyphen_splits = false;
  TokenSeq seq = decompose("Nuclear spin-lattice relaxation", rules, Lexicons::default_form_words());
  EXPECT_EQ(surfaces(seq), (std::vector<std::string>{"nuclear", "spin-lattice", "relaxation"}));
}

TEST(Decompose, ConsecutiveHyphensAndEdges) {
  TokenSeq seq = decompose_default("spin--lattice -wave- gap");
  EXPECT_EQ(surfaces(seq), (std::vector<std::string>{"spin", "lattice", "wave", "gap"}));
  EXPECT_EQ(seq.tokens[0].hyphen_group, seq.tokens[1].hyphen_group);
  EXPECT_TRUE(seq.tokens[0].hyphen_group.has_value());
  EXPECT_FALSE(seq.tokens[2].hyphen_group.has_value());  // single survivor loses the group
}

TEST(Decompose, DeterministicAndTotal) {
  std::mt19937 rng(42);
  const std::string alphabet = "abcXYZ 0-()\"'e s";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 24);
  int produced = 0;
  for (int i = 0; i < 2000; ++i) {
    std::string raw;
    int n = len(rng);
    for (int j = 0; j < n; ++j) raw.push_back(alphabet[pick(rng)]);
    try {
      TokenSeq once = decompose_default(raw);
      TokenSeq twice = decompose_default(raw);
      ASSERT_EQ(once, twice);
      ASSERT_FALSE(once.tokens.empty());
      ASSERT_GE(wordship::wordship(once), 1);
      ++produced;
    } catch (const Error&) {
      // rejection is an acceptable outcome; it must also be stable
      EXPECT_THROW(decompose_default(raw), Error);
    }
  }
  EXPECT_GT(produced, 0);
}
