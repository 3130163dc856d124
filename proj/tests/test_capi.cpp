#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "ordertype.h"

TEST_CASE("sequence parse, accessors, serialize") {
  ot_seq* seq = nullptr;
  REQUIRE(ot_seq_parse("dim 2\n0 0\n1 0\n0 1\n", &seq) == OT_OK);
  CHECK(ot_seq_dim(seq) == 2);
  CHECK(ot_seq_size(seq) == 3);

  char* coord = nullptr;
  REQUIRE(ot_seq_coord(seq, 2, 1, &coord) == OT_OK);
  CHECK(std::string(coord) == "1");
  ot_string_free(coord);

  double x = -1;
  REQUIRE(ot_seq_coord_double(seq, 1, 0, &x) == OT_OK);
  CHECK(x == 1.0);

  CHECK(ot_seq_coord(seq, 3, 0, &coord) == OT_ERR_INVALID);
  CHECK(std::string(ot_last_error()).find("out of range") !=
        std::string::npos);

  char* text = nullptr;
  REQUIRE(ot_seq_serialize(seq, &text) == OT_OK);
  ot_seq* again = nullptr;
  REQUIRE(ot_seq_parse(text, &again) == OT_OK);
  CHECK(ot_seq_size(again) == 3);
  ot_string_free(text);
  ot_seq_free(again);
  ot_seq_free(seq);
}

TEST_CASE("parse failures set the thread error message") {
  ot_seq* seq = nullptr;
  CHECK(ot_seq_parse("no header\n", &seq) == OT_ERR_PARSE);
  CHECK(std::strlen(ot_last_error()) > 0);
  CHECK(ot_seq_parse(nullptr, &seq) == OT_ERR_INVALID);
}

TEST_CASE("validation reports degeneracy with a witness") {
  ot_seq* seq = nullptr;
  REQUIRE(ot_seq_parse("dim 2\n0 0\n1 1\n2 2\n", &seq) == OT_OK);
  int state = -1;
  char* witness = nullptr;
  REQUIRE(ot_seq_validate(seq, &state, &witness) == OT_OK);
  CHECK(state == 2);
  REQUIRE(witness != nullptr);
  CHECK(std::strlen(witness) > 0);
  ot_string_free(witness);
  ot_seq_free(seq);

  REQUIRE(ot_seq_parse("dim 2\n0 0\n3 1\n1 4\n", &seq) == OT_OK);
  witness = nullptr;
  REQUIRE(ot_seq_validate(seq, &state, &witness) == OT_OK);
  CHECK(state == 0);
  CHECK(witness == nullptr);
  ot_seq_free(seq);
}

TEST_CASE("generators through the C boundary") {
  ot_seq* m = nullptr;
  REQUIRE(ot_gen_moment(3, 6, "1/2", "1", &m) == OT_OK);
  CHECK(ot_seq_dim(m) == 3);
  CHECK(ot_seq_size(m) == 6);
  char* c = nullptr;
  REQUIRE(ot_seq_coord(m, 0, 1, &c) == OT_OK);
  CHECK(std::string(c) == "1/4");
  ot_string_free(c);
  ot_seq_free(m);

  ot_seq* mono = nullptr;
  REQUIRE(ot_gen_es_monotone(4, &mono) == OT_OK);
  CHECK(ot_seq_dim(mono) == 1);
  CHECK(ot_seq_size(mono) == 9);
  ot_seq_free(mono);

  ot_seq* cc = nullptr;
  REQUIRE(ot_gen_es_capcup(5, &cc) == OT_OK);
  CHECK(ot_seq_size(cc) == 20);
  ot_seq_free(cc);

  ot_seq* r1 = nullptr;
  ot_seq* r2 = nullptr;
  REQUIRE(ot_gen_random(2, 8, 42, "1000", &r1) == OT_OK);
  REQUIRE(ot_gen_random(2, 8, 42, "1000", &r2) == OT_OK);
  char *s1 = nullptr, *s2 = nullptr;
  REQUIRE(ot_seq_serialize(r1, &s1) == OT_OK);
  REQUIRE(ot_seq_serialize(r2, &s2) == OT_OK);
  CHECK(std::string(s1) == std::string(s2));
  ot_string_free(s1);
  ot_string_free(s2);
  ot_seq_free(r1);
  ot_seq_free(r2);

  CHECK(ot_gen_random(2, 10, 1, "3", &r1) == OT_ERR_RETRIES);
  CHECK(ot_gen_random(2, 5, 1, "oops", &r1) == OT_ERR_PARSE);
}

TEST_CASE("analysis of the moment curve") {
  ot_seq* m = nullptr;
  REQUIRE(ot_gen_moment(2, 6, nullptr, nullptr, &m) == OT_OK);
  ot_analysis a;
  REQUIRE(ot_analyze(m, 0, 2, &a) == OT_OK);
  CHECK(a.dim == 2);
  CHECK(a.n_points == 6);
  CHECK(a.plus_tuples == 20);
  CHECK(a.minus_tuples == 0);
  CHECK(a.homogeneous == 1);
  CHECK(a.sign == 1);
  CHECK(a.gp_state == 0);
  ot_seq_free(m);

  ot_seq* bad = nullptr;
  REQUIRE(ot_seq_parse("dim 2\n0 0\n1 1\n2 2\n", &bad) == OT_OK);
  CHECK(ot_analyze(bad, 0, 1, &a) == OT_ERR_DEGENERATE);
  ot_seq_free(bad);
}

TEST_CASE("extraction algorithms and result accessors") {
  ot_seq* seq = nullptr;
  REQUIRE(ot_gen_random(2, 12, 7, "1000000", &seq) == OT_OK);

  ot_result* res = nullptr;
  REQUIRE(ot_extract(seq, OT_ALGO_AUTO, 4, &res) == OT_OK);
  CHECK(ot_result_size(res) >= 4);
  CHECK(ot_result_verified(res) == 1);
  int sign = ot_result_sign(res);
  CHECK((sign == 1 || sign == -1));
  CHECK(std::strlen(ot_result_algorithm(res)) > 0);

  size_t n = ot_result_size(res);
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) {
    idx[i] = ot_result_index(res, i);
    CHECK(idx[i] < 12);
  }
  CHECK(ot_result_index(res, n) == SIZE_MAX);

  int hom = 0, hsign = 0;
  char* cex = nullptr;
  REQUIRE(ot_check_homogeneous(seq, idx.data(), n, &hom, &hsign, &cex) ==
          OT_OK);
  CHECK(hom == 1);
  CHECK(hsign == sign);
  CHECK(cex == nullptr);
  ot_result_free(res);

  ot_result* brute = nullptr;
  REQUIRE(ot_extract(seq, OT_ALGO_BRUTE, 0, &brute) == OT_OK);
  CHECK(ot_result_size(brute) >= n);
  ot_result_free(brute);

  CHECK(ot_extract(seq, OT_ALGO_MONOTONE, 3, &res) == OT_ERR_INVALID);
  ot_seq_free(seq);

  REQUIRE(ot_gen_es_monotone(4, &seq) == OT_OK);
  REQUIRE(ot_extract(seq, OT_ALGO_MONOTONE, 0, &res) == OT_OK);
  CHECK(ot_result_size(res) == 3);
  ot_result_free(res);
  ot_seq_free(seq);
}

TEST_CASE("homogeneity counterexample crosses the boundary") {
  ot_seq* seq = nullptr;
  REQUIRE(ot_seq_parse("dim 1\n1\n3\n2\n", &seq) == OT_OK);
  size_t idx[] = {0, 1, 2};
  int hom = 1, sign = 0;
  char* cex = nullptr;
  REQUIRE(ot_check_homogeneous(seq, idx, 3, &hom, &sign, &cex) == OT_OK);
  CHECK(hom == 0);
  REQUIRE(cex != nullptr);
  CHECK(std::string(cex) == "{0,1} vs {1,2}");
  ot_string_free(cex);
  ot_seq_free(seq);
}

TEST_CASE("polytope checks") {
  ot_seq* m = nullptr;
  REQUIRE(ot_gen_moment(3, 6, nullptr, nullptr, &m) == OT_OK);
  size_t idx[] = {0, 1, 2, 3, 4, 5};
  int out = 0;
  REQUIRE(ot_check_convex_position(m, idx, 6, &out) == OT_OK);
  CHECK(out == 1);
  REQUIRE(ot_check_cyclic_polytope(m, idx, 6, &out) == OT_OK);
  CHECK(out == 1);
  ot_seq_free(m);
}

TEST_CASE("threshold bounds over the C boundary") {
  ot_bound* b = nullptr;
  REQUIRE(ot_guarantee_threshold(1, 5, &b) == OT_OK);
  CHECK(ot_bound_kind(b) == 0);
  char* s = nullptr;
  REQUIRE(ot_bound_render(b, &s) == OT_OK);
  CHECK(std::string(s) == "17");
  ot_string_free(s);
  ot_bound_free(b);

  REQUIRE(ot_guarantee_threshold(2, 4, &b) == OT_OK);
  CHECK(ot_bound_kind(b) == 1);
  REQUIRE(ot_bound_render(b, &s) == OT_OK);
  CHECK(std::string(s) == "2^186");
  ot_string_free(s);
  ot_bound_free(b);

  REQUIRE(ot_guarantee_threshold(3, 10, &b) == OT_OK);
  CHECK(ot_bound_kind(b) == 2);
  ot_bound_free(b);

  CHECK(ot_guarantee_threshold(0, 5, &b) == OT_ERR_INVALID);
}
