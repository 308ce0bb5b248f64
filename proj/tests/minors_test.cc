// Copyright 2026 The circ Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circ/minors.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace circ {
namespace {

bool RowsAvoidedByComplement(const CirculantInstance& inst, const IndexSet& w) {
  for (int j = 0; j < inst.n(); ++j) {
    if (RowSupport(inst, j).is_subset_of(w)) return false;
  }
  return true;
}

TEST(GraphArcsTest, Examples) {
  const auto arcs = GraphArcs(CirculantInstance(6, 3));
  EXPECT_EQ(arcs.size(), 12u);
  EXPECT_NE(std::find(arcs.begin(), arcs.end(), Arc{0, 3, 3}), arcs.end());
  EXPECT_NE(std::find(arcs.begin(), arcs.end(), Arc{5, 3, 4}), arcs.end());
}

TEST(DicycleParamsTest, Examples) {
  const CirculantInstance c105(10, 5);
  EXPECT_EQ(ComputeDicycleParams({{0, 6, 2, 8, 4}, {6, 6, 6, 6, 6}}, c105),
            (DicycleParams{3, 0, 5}));
  EXPECT_EQ(ComputeDicycleParams({{0, 3}, {3, 3}}, CirculantInstance(6, 3)),
            (DicycleParams{1, 2, 0}));
}

TEST(DicycleParamsTest, RejectsNonCycles) {
  const CirculantInstance c105(10, 5);
  EXPECT_THROW(ComputeDicycleParams({{0, 6, 2}, {6, 6, 6}}, c105), InvalidInput);
  EXPECT_THROW(ComputeDicycleParams({{0, 7}, {7, 3}}, c105), InvalidInput);
  EXPECT_THROW(ComputeDicycleParams({{0, 5, 0}, {5, 5, 0}}, c105), InvalidInput);
  EXPECT_THROW(ComputeDicycleParams({{}, {}}, c105), InvalidInput);
}

TEST(TransversalMinorTest, Construction30By6) {
  const CirculantInstance inst(30, 6);
  const IndexSet w(30, {0, 5, 8, 15, 16, 19});
  const auto built = BuildTransversalMinor(inst, w);
  EXPECT_EQ(built.offsets, (std::vector<int>{0, 3, 1, 2, 2, 0}));
  EXPECT_EQ(built.short_arcs, (std::vector<int>{2, 2, 0, 4, 2, 3}));
  const MinorCert& cert = built.cert;
  EXPECT_EQ(cert.n1, 4);
  EXPECT_EQ(cert.n2, 13);
  EXPECT_EQ(cert.n3, 6);
  EXPECT_EQ(cert.n1 * 30, 6 * cert.n2 + 7 * cert.n3);
  EXPECT_EQ(cert.n_prime, 11);
  EXPECT_EQ(cert.k_prime, 2);
  EXPECT_EQ(cert.n_prime, 5 * cert.k_prime + 1);
  EXPECT_EQ(cert.w, w);
  EXPECT_EQ(cert.contracted.size(), 19);
  ASSERT_EQ(cert.cycles.size(), 1u);
  EXPECT_EQ(ComputeDicycleParams(cert.cycles[0], inst), (DicycleParams{4, 13, 6}));
  EXPECT_TRUE(ValidateCert(cert));
  EXPECT_EQ(ContractionIsCirculant(cert), std::make_pair(11, 2));
}

TEST(TransversalMinorTest, LongArcHeadsDifferFromChordTest) {
  // N carries a (k+1)-chord 15 -> 22 that is not an arc of the dicycle, so W
  // is read off the dicycle, not off N alone.
  const auto cert =
      CertFromWPartition(CirculantInstance(30, 6), IndexSet(30, {0, 5, 8, 15, 16, 19}));
  EXPECT_TRUE(cert.contracted.contains(15));
  EXPECT_TRUE(cert.contracted.contains(22));
  EXPECT_FALSE(cert.w.contains(22));
}

TEST(TransversalMinorTest, SmallExamples) {
  const auto built = BuildTransversalMinor(CirculantInstance(10, 5),
                                           IndexSet(10, {0, 2, 4, 6, 8}));
  EXPECT_EQ(built.offsets, (std::vector<int>{0, 1, 0, 1, 0}));
  EXPECT_EQ(built.short_arcs, (std::vector<int>{0, 0, 0, 0, 0}));
  EXPECT_EQ((DicycleParams{built.cert.n1, built.cert.n2, built.cert.n3}),
            (DicycleParams{3, 0, 5}));
  EXPECT_EQ(built.cert.n_prime, 5);
  EXPECT_EQ(built.cert.k_prime, 2);
  EXPECT_EQ(ContractionIsCirculant(built.cert), std::make_pair(5, 2));

  const auto c63 = CertFromWPartition(CirculantInstance(6, 3), IndexSet(6, {0, 2, 4}));
  EXPECT_GE(c63.n_prime, 1);
  EXPECT_GE(c63.k_prime, 1);
  EXPECT_EQ(c63.n_prime, 2 * c63.k_prime + 1);
}

TEST(TransversalMinorTest, RejectsBadW) {
  const CirculantInstance inst(10, 5);
  // Two elements of x^0.
  EXPECT_THROW(CertFromWPartition(inst, IndexSet(10, {0, 5, 2, 3, 4})), InvalidInput);
  // W contains the row C^0 = {0,...,4}.
  EXPECT_THROW(CertFromWPartition(inst, IndexSet(10, {0, 1, 2, 3, 4})), InvalidInput);
  EXPECT_THROW(CertFromWPartition(CirculantInstance(8, 3), IndexSet(8, {0})),
               InvalidInput);
}

// Every transversal with complement meeting all rows, across several (s, k).
TEST(TransversalMinorTest, ConstructionPropertiesExhaustive) {
  for (auto [s, k] : {std::pair{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4},
                      {3, 5}, {4, 3}, {4, 4}, {5, 3}, {2, 7}}) {
    const CirculantInstance inst(s * k, k);
    int built_count = 0;
    ForEachTransversal(inst, [&](const IndexSet& w) {
      if (!RowsAvoidedByComplement(inst, w)) return true;
      const auto built = BuildTransversalMinor(inst, w);
      const MinorCert& cert = built.cert;
      ++built_count;
      // Piecewise lengths agree with the closing congruence.
      EXPECT_EQ(built.short_arcs, oracle::ShortArcsByCongruence(s, k, built.heads));
      int total = 0;
      for (const auto& b : built.blocks) total += b.size();
      EXPECT_EQ(total, cert.contracted.size());  // blocks are disjoint
      EXPECT_EQ(cert.contracted.size(), cert.n2 + cert.n3);
      EXPECT_EQ(cert.w, w);
      EXPECT_EQ(cert.n3, k);
      EXPECT_EQ(cert.n1 * s, cert.n2 + k + 1);
      EXPECT_LE(cert.n1, k - 1);
      EXPECT_EQ(cert.n_prime, s * cert.k_prime + 1);
      const int low = static_cast<int>(std::count_if(
          built.short_arcs.begin(), built.short_arcs.end(),
          [&](int v) { return v <= s - 2; }));
      EXPECT_GE(low, 2);
      EXPECT_TRUE(ValidateCert(cert));
      EXPECT_EQ(ContractionIsCirculant(cert),
                std::make_pair(cert.n_prime, cert.k_prime));
      return true;
    });
    EXPECT_GT(built_count, 0);
  }
}

TEST(ValidateCertTest, TamperedAndNonCycle) {
  MinorCert cert = CertFromWPartition(CirculantInstance(10, 5),
                                      IndexSet(10, {0, 2, 4, 6, 8}));
  cert.cycles.clear();
  EXPECT_TRUE(ValidateCert(cert));
  MinorCert bad = cert;
  bad.n1 += 1;
  EXPECT_FALSE(ValidateCert(bad));
  bad = cert;
  bad.contracted = IndexSet(10, {0, 1, 2, 3, 4});
  bad.w = bad.contracted;
  EXPECT_FALSE(ValidateCert(bad));
  bad = cert;
  bad.w = IndexSet(10, {0, 2, 4, 6, 9});
  EXPECT_FALSE(ValidateCert(bad));
  EXPECT_THROW(ContractionIsCirculant(bad), InvalidInput);
}

TEST(ValidateCertTest, AcceptsTwoDicycles) {
  // 0 -> 6 -> 0 and 3 -> 9 -> 3 in G(C_12^5), both with (n1,n2,n3) = (1,0,2).
  MinorCert cert;
  cert.n = 12;
  cert.k = 5;
  cert.contracted = IndexSet(12, {0, 3, 6, 9});
  cert.w = cert.contracted;
  cert.d = 2;
  cert.n1 = 1;
  cert.n2 = 0;
  cert.n3 = 2;
  cert.n_prime = 8;
  cert.k_prime = 3;
  EXPECT_TRUE(ValidateCert(cert));
  EXPECT_EQ(ContractionIsCirculant(cert), std::make_pair(8, 3));
  cert.d = 1;
  EXPECT_FALSE(ValidateCert(cert));
}

TEST(EmbeddableTest, Examples) {
  const auto w73 = EmbeddableInSk(7, 3);
  ASSERT_TRUE(w73.has_value());
  EXPECT_EQ(w73->s, 2);
  EXPECT_EQ(w73->k, 7);
  EXPECT_FALSE(EmbeddableInSk(5, 3).has_value());
  const auto w112 = EmbeddableInSk(11, 2);
  ASSERT_TRUE(w112.has_value());
  EXPECT_EQ(w112->s, 5);
  EXPECT_THROW(EmbeddableInSk(6, 3), InvalidInput);
}

TEST(EmbeddableTest, AgreesWithMinorConditionScan) {
  for (int kp = 2; kp <= 10; ++kp) {
    for (int np = kp + 1; np <= 30; ++np) {
      if (np % kp == 0) continue;
      const auto witness = EmbeddableInSk(np, kp);
      ASSERT_EQ(witness.has_value(), oracle::ExistsSkHost(np, kp)) << np << ' ' << kp;
      if (witness) {
        const long long n = static_cast<long long>(witness->s) * witness->k;
        EXPECT_TRUE(oracle::MinorCondition(n, witness->k, np, kp));
      }
    }
  }
}

TEST(FindTransversalMinorTest, EmbeddingWitnessGivesSevenThree) {
  const auto witness = EmbeddableInSk(7, 3);
  ASSERT_TRUE(witness.has_value());
  const CirculantInstance host(witness->s * witness->k, witness->k);
  const auto cert = FindTransversalMinor(host, 7, 3);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(host.n(), 14);
  EXPECT_EQ(ContractionIsCirculant(*cert), std::make_pair(7, 3));
  EXPECT_FALSE(FindTransversalMinor(host, 9, 4).has_value());
}

}  // namespace
}  // namespace circ
