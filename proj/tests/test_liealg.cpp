#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecert/liealg.hpp"

using namespace liecert;

namespace {

LieElement sym(const LieAlgebra& g, int s) { return LieElement{{s, Rat(1)}}; }

Mat form_matrix_J(int n2) {
  Mat j = zeros(n2, n2);
  for (int i = 0; i < n2; ++i) j[i][n2 - 1 - i] = 1;
  return j;
}

bool preserves_form(const Mat& x, const Mat& j) {
  return is_zero_mat(mat_add(mat_mul(transpose(x), j), mat_mul(j, x)));
}

}  // namespace

TEST_CASE("sl_n basics") {
  auto g = build_sl(4);
  CHECK(g->dim == 15);
  CHECK(g->dual_coxeter == 4);
  // [e_{1,2}, e_{2,1}] = h_1
  int a12 = g->datum->positive_root_index({Rat(1), Rat(-1), Rat(0), Rat(0)});
  REQUIRE(a12 >= 0);
  LieElement h1 = bracket(*g, sym(*g, g->e_index(a12)), sym(*g, g->f_index(a12)));
  LieElement h1_expect{{g->h_index(0), Rat(1)}};
  CHECK(h1 == h1_expect);
  // (theta|theta) = 2
  int th = g->datum->positive_root_index(g->datum->highest_root());
  LieElement etheta = sym(*g, g->e_index(th));
  LieElement ftheta = sym(*g, g->f_index(th));
  LieElement htheta = bracket(*g, etheta, ftheta);
  CHECK(g->form(htheta, htheta) == 2);
  CHECK(g->form(etheta, ftheta) == 1);
}

TEST_CASE("so_{2r} basics") {
  auto g8 = build_so_even(4);
  CHECK(g8->dim == 28);
  auto g10 = build_so_even(5);
  CHECK(g10->dual_coxeter == 8);
  int th = g10->datum->positive_root_index(g10->datum->highest_root());
  LieElement htheta =
      bracket(*g10, sym(*g10, g10->e_index(th)), sym(*g10, g10->f_index(th)));
  CHECK(g10->form(htheta, htheta) == 2);
  // Realization matrices are antisymmetric w.r.t. the antidiagonal form.
  Mat j = form_matrix_J(10);
  for (const auto& m : g10->matrix_realization) CHECK(preserves_form(m, j));
}

TEST_CASE("bracket properties: antisymmetry, Jacobi, invariance, faithfulness") {
  for (auto g : {build_sl(4), build_sl(5), build_so_even(4)}) {
    int d = g->dim;
    // Faithful homomorphism: matrix bracket equals structure-constant bracket.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        LieElement b = bracket(*g, sym(*g, i), sym(*g, j));
        CHECK(g->realize(b) ==
              bracket_mat(g->matrix_realization[i], g->matrix_realization[j]));
      }
    // Integer structure constants.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (const auto& [s, c] : g->structure_constants[i][j])
          CHECK(denominator(c) == 1);
    // Jacobi + invariance of the form on a deterministic sample of triples.
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      int x = rng() % d, y = rng() % d, z = rng() % d;
      LieElement ex = sym(*g, x), ey = sym(*g, y), ez = sym(*g, z);
      LieElement jac = lie_add(
          lie_add(bracket(*g, ex, bracket(*g, ey, ez)),
                  bracket(*g, ey, bracket(*g, ez, ex))),
          bracket(*g, ez, bracket(*g, ex, ey)));
      CHECK(jac.empty());
      CHECK(g->form(bracket(*g, ez, ex), ey) + g->form(ex, bracket(*g, ez, ey)) == 0);
    }
  }
}

TEST_CASE("normalized form equals Killing form over 2 h_vee") {
  for (auto g : {build_sl(3), build_sl(4), build_so_even(4)}) {
    int d = g->dim;
    // ad matrices
    std::vector<Mat> ad(d, zeros(d, d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (const auto& [s, c] : g->structure_constants[i][j]) ad[i][s][j] = c;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        Rat killing = trace_mul(ad[i], ad[j]);
        CHECK(killing == Rat(2 * g->dual_coxeter) * g->bilinear_form[i][j]);
      }
  }
}

TEST_CASE("jordan_type examples") {
  auto g = build_sl(4);
  // e_{1,2} + e_{3,4} -> (2,2)
  int a12 = g->datum->positive_root_index({Rat(1), Rat(-1), Rat(0), Rat(0)});
  int a34 = g->datum->positive_root_index({Rat(0), Rat(0), Rat(1), Rat(-1)});
  LieElement x = lie_add(sym(*g, g->e_index(a12)), sym(*g, g->e_index(a34)));
  CHECK(jordan_type(*g, x).parts == std::vector<int>{2, 2});
  int th = g->datum->positive_root_index(g->datum->highest_root());
  CHECK(jordan_type(*g, sym(*g, g->e_index(th))).parts == std::vector<int>{2, 1, 1});
  // Non-nilpotent input is rejected.
  CHECK_THROWS(jordan_type(*g, LieElement{{g->h_index(0), Rat(1)}}));

  auto g10 = build_so_even(5);
  int thd = g10->datum->positive_root_index(g10->datum->highest_root());
  std::vector<int> min10{2, 2, 1, 1, 1, 1, 1, 1};
  CHECK(jordan_type(*g10, sym(*g10, g10->f_index(thd))).parts == min10);
}

TEST_CASE("nilpotent_rep builds valid sl2 triples") {
  SUBCASE("type A") {
    auto g = build_sl(4);
    for (std::vector<int> parts :
         {std::vector<int>{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}) {
      Partition p{parts, std::nullopt};
      auto tri = nilpotent_rep(*g, p);
      CHECK(bracket_mat(tri.h, tri.e) == mat_scale(tri.e, Rat(2)));
      CHECK(bracket_mat(tri.h, tri.f) == mat_scale(tri.f, Rat(-2)));
      CHECK(bracket_mat(tri.e, tri.f) == tri.h);
      CHECK(jordan_type_matrix(*g, tri.e).parts == parts);
      // h diagonal and dominant
      for (int i = 0; i + 1 < 4; ++i) CHECK(tri.h[i][i] >= tri.h[i + 1][i + 1]);
    }
    // The (2^m) triple of sl_4 is the displayed one.
    auto tri = nilpotent_rep(*g, Partition{{2, 2}, std::nullopt});
    Mat e = zeros(4, 4), h = zeros(4, 4);
    e[0][2] = 1;
    e[1][3] = 1;
    h[0][0] = h[1][1] = 1;
    h[2][2] = h[3][3] = -1;
    CHECK(tri.e == e);
    CHECK(tri.h == h);
  }
  SUBCASE("type D") {
    auto g = build_so_even(4);
    Mat j = form_matrix_J(8);
    for (Partition p : {Partition{{7, 1}, std::nullopt},
                        Partition{{5, 3}, std::nullopt},
                        Partition{{5, 1, 1, 1}, std::nullopt},
                        Partition{{4, 4}, '1'},
                        Partition{{4, 4}, '2'},
                        Partition{{3, 3, 1, 1}, std::nullopt},
                        Partition{{3, 2, 2, 1}, std::nullopt},
                        Partition{{3, 1, 1, 1, 1, 1}, std::nullopt},
                        Partition{{2, 2, 2, 2}, '1'},
                        Partition{{2, 2, 2, 2}, '2'},
                        Partition{{2, 2, 1, 1, 1, 1}, std::nullopt}}) {
      auto tri = nilpotent_rep(*g, p);
      CHECK(preserves_form(tri.e, j));
      CHECK(preserves_form(tri.h, j));
      CHECK(preserves_form(tri.f, j));
      CHECK(bracket_mat(tri.h, tri.e) == mat_scale(tri.e, Rat(2)));
      CHECK(bracket_mat(tri.h, tri.f) == mat_scale(tri.f, Rat(-2)));
      CHECK(bracket_mat(tri.e, tri.f) == tri.h);
      Partition got = jordan_type_matrix(*g, tri.e);
      CHECK(got == p);
    }
  }
}

TEST_CASE("very even labels are swapped by the outer automorphism") {
  auto g = build_so_even(4);
  auto tri = nilpotent_rep(*g, Partition{{2, 2, 2, 2}, '1'});
  Partition p1 = jordan_type_matrix(*g, tri.e);
  Partition p2 = jordan_type_matrix(*g, outer_swap(*g, tri.e));
  CHECK(p1.very_even_label == '1');
  CHECK(p2.very_even_label == '2');
}

TEST_CASE("jordan_type is constant under exact adjoint-group conjugations") {
  auto g = build_so_even(4);
  auto tri = nilpotent_rep(*g, Partition{{3, 2, 2, 1}, std::nullopt});
  std::mt19937 rng(7);
  Mat m = tri.e;
  for (int step = 0; step < 4; ++step) {
    // exp(ad z) realized as exp(z) (.) exp(-z) for nilpotent z = root vector.
    int a = rng() % g->n_pos();
    int s = (rng() % 2) ? g->e_index(a) : g->f_index(a);
    Mat z = g->matrix_realization[s];
    Mat ez = identity(g->mat_size), term = identity(g->mat_size);
    Rat fact(1);
    for (int k = 1; k <= g->mat_size; ++k) {
      term = mat_mul(term, z);
      fact *= k;
      if (is_zero_mat(term)) break;
      ez = mat_add(ez, mat_scale(term, Rat(1) / fact));
    }
    Mat ezi = inverse(ez);
    m = mat_mul(mat_mul(ez, m), ezi);
    CHECK(jordan_type_matrix(*g, m).parts == std::vector<int>{3, 2, 2, 1});
  }
}
