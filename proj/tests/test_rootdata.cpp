#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "liecert/rootdata.hpp"

using namespace liecert;

namespace {

Vec wsum(const std::vector<Weight>& fw, std::initializer_list<std::pair<int, Rat>> terms) {
  Vec v(fw[0].coords.size(), Rat(0));
  for (auto [i, c] : terms)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * fw[i - 1].coords[j];
  return v;
}

}  // namespace

TEST_CASE("positive root counts and highest roots") {
  auto a3 = build_root_datum('A', 3);
  CHECK(a3->positive_roots.size() == 6);
  Vec theta_a{Rat(1), Rat(0), Rat(0), Rat(-1)};
  CHECK(a3->highest_root() == theta_a);

  auto d5 = build_root_datum('D', 5);
  CHECK(d5->positive_roots.size() == 20);
  Vec theta_d{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK(d5->highest_root() == theta_d);

  auto a1 = build_root_datum('A', 1);
  CHECK(a1->positive_roots.size() == 1);
  Vec alpha{Rat(1), Rat(-1)};
  CHECK(a1->positive_roots[0] == alpha);

  auto g2 = build_root_datum('G', 2);
  CHECK(g2->positive_roots.size() == 6);
  CHECK(g2->inner(g2->highest_root(), g2->highest_root()) == 2);
}

TEST_CASE("every positive root is a nonnegative integer combination of simple roots") {
  for (auto [t, r] : {std::pair<char, int>{'A', 4}, {'D', 5}, {'G', 2}}) {
    auto d = build_root_datum(t, r);
    Mat m(d->ambient_dim, Vec(d->rank, Rat(0)));
    for (int i = 0; i < d->rank; ++i)
      for (int j = 0; j < d->ambient_dim; ++j) m[j][i] = d->simple_roots[i][j];
    for (const auto& a : d->positive_roots) {
      auto c = solve(m, a);
      REQUIRE(c.has_value());
      for (const auto& x : *c) {
        CHECK(x >= 0);
        CHECK(denominator(x) == 1);
      }
    }
  }
}

TEST_CASE("Cartan matrices match the standard ones") {
  auto a3 = build_root_datum('A', 3);
  std::vector<std::vector<int>> ca{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(a3->cartan_matrix == ca);
  auto d4 = build_root_datum('D', 4);
  std::vector<std::vector<int>> cd{
      {2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  CHECK(d4->cartan_matrix == cd);
  auto g2 = build_root_datum('G', 2);
  // alpha_1 short, alpha_2 long.
  std::vector<std::vector<int>> cg{{2, -1}, {-3, 2}};
  CHECK(g2->cartan_matrix == cg);
}

TEST_CASE("unsupported type/rank combinations are rejected") {
  CHECK_THROWS(build_root_datum('D', 2));
  CHECK_THROWS(build_root_datum('A', 0));
  CHECK_THROWS(build_root_datum('G', 3));
  CHECK_THROWS(build_root_datum('X', 4));
}

TEST_CASE("fundamental weights pair to the identity with simple coroots") {
  for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'A', 5}, {'D', 5}, {'D', 6}, {'G', 2}}) {
    auto d = build_root_datum(t, r);
    auto fw = fundamental_weights(d);
    for (int i = 0; i < d->rank; ++i)
      for (int j = 0; j < d->rank; ++j)
        CHECK(d->pair_coroot(fw[i].coords, d->simple_roots[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("explicit fundamental weight coordinates") {
  auto d5 = build_root_datum('D', 5);
  auto fw5 = fundamental_weights(d5);
  Vec w5{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  CHECK(fw5[4].coords == w5);
  Vec w4{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)};
  CHECK(fw5[3].coords == w4);

  auto a3 = build_root_datum('A', 3);
  auto fwa = fundamental_weights(a3);
  Vec w1{Rat(3, 4), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4)};
  CHECK(fwa[0].coords == w1);
}

TEST_CASE("weyl_conjugate examples") {
  auto a3 = build_root_datum('A', 3);
  auto fwa = fundamental_weights(a3);
  Weight perm{{Rat(-1, 4), Rat(-1, 4), Rat(-1, 4), Rat(3, 4)}, a3};
  CHECK(weyl_conjugate(fwa[0], perm));

  auto d5 = build_root_datum('D', 5);
  auto fwd = fundamental_weights(d5);
  Vec m5 = fwd[4].coords;
  for (auto& x : m5) x = -x;
  CHECK(weyl_conjugate(fwd[3], Weight{m5, d5}));  // varpi_4 ~ -varpi_5, r odd

  auto d6 = build_root_datum('D', 6);
  auto fwd6 = fundamental_weights(d6);
  CHECK_FALSE(weyl_conjugate(fwd6[4], fwd6[5]));  // varpi_5 vs varpi_6, r even
}

TEST_CASE("cone_membership examples") {
  auto a3 = build_root_datum('A', 3);
  auto fw = fundamental_weights(a3);
  CHECK(cone_membership(Weight{wsum(fw, {{1, 1}, {2, -1}}), a3}, fw[0]).has_value());
  CHECK_FALSE(cone_membership(fw[1], fw[0]).has_value());
  Weight zero{Vec(4, Rat(0)), a3};
  CHECK_FALSE(cone_membership(zero, fw[0]).has_value());
}

TEST_CASE("weyl_conjugate agrees with brute force") {
  std::mt19937 rng(12345);
  auto rand_weight = [&](int ambient, bool tracefree) {
    Vec v(ambient);
    Rat s(0);
    for (auto& x : v) {
      x = Rat(int(rng() % 7) - 3, 1 + int(rng() % 2));
      s += x;
    }
    if (tracefree) v.back() -= s;
    return v;
  };
  SUBCASE("type A, n <= 5") {
    for (int rank = 2; rank <= 4; ++rank) {
      auto d = build_root_datum('A', rank);
      for (int trial = 0; trial < 6; ++trial) {
        Vec v = rand_weight(d->ambient_dim, true);
        Vec w = rand_weight(d->ambient_dim, true);
        auto orbit = weyl_orbit_bruteforce(*d, v);
        bool brute = std::find(orbit.begin(), orbit.end(), w) != orbit.end();
        CHECK(weyl_conjugate(Weight{v, d}, Weight{w, d}) == brute);
        // Also check a genuine orbit member.
        CHECK(weyl_conjugate(Weight{v, d}, Weight{orbit[trial % orbit.size()], d}));
      }
    }
  }
  SUBCASE("type D, r <= 4") {
    for (int rank = 3; rank <= 4; ++rank) {
      auto d = build_root_datum('D', rank);
      for (int trial = 0; trial < 6; ++trial) {
        Vec v = rand_weight(d->ambient_dim, false);
        Vec w = rand_weight(d->ambient_dim, false);
        auto orbit = weyl_orbit_bruteforce(*d, v);
        bool brute = std::find(orbit.begin(), orbit.end(), w) != orbit.end();
        CHECK(weyl_conjugate(Weight{v, d}, Weight{w, d}) == brute);
        CHECK(weyl_conjugate(Weight{v, d}, Weight{orbit[trial % orbit.size()], d}));
      }
    }
  }
}

TEST_CASE("weyl conjugacy is an equivalence relation on sampled weights") {
  std::mt19937 rng(777);
  for (auto [t, r] : {std::pair<char, int>{'A', 6}, {'D', 6}}) {
    auto d = build_root_datum(t, r);
    std::vector<Vec> sample;
    for (int i = 0; i < 8; ++i) {
      Vec v(d->ambient_dim);
      Rat s(0);
      for (auto& x : v) {
        x = Rat(int(rng() % 5) - 2);
        s += x;
      }
      if (t == 'A') v.back() -= s;
      sample.push_back(v);
    }
    for (const auto& v : sample) CHECK(weyl_conjugate(Weight{v, d}, Weight{v, d}));
    for (const auto& v : sample)
      for (const auto& w : sample) {
        bool vw = weyl_conjugate(Weight{v, d}, Weight{w, d});
        bool wv = weyl_conjugate(Weight{w, d}, Weight{v, d});
        CHECK(vw == wv);
        if (!vw) continue;
        for (const auto& u : sample) {
          if (weyl_conjugate(Weight{w, d}, Weight{u, d}))
            CHECK(weyl_conjugate(Weight{v, d}, Weight{u, d}));
        }
      }
  }
}

TEST_CASE("weyl_dimension sanity: adjoint representations") {
  auto a3 = build_root_datum('A', 3);
  CHECK(weyl_dimension(*a3, a3->highest_root()) == 15);
  auto d5 = build_root_datum('D', 5);
  CHECK(weyl_dimension(*d5, d5->highest_root()) == 45);
  auto g2 = build_root_datum('G', 2);
  CHECK(weyl_dimension(*g2, g2->highest_root()) == 14);
}
