#include "doctest.h"

#include <cstring>
#include <string>

#include "latintrade/latintrade.h"

namespace {

constexpr const char* kRef7A =
    "1 2 0 6 3 4 5\n"
    "6 1 5 4 0 2 3\n"
    "0 5 4 2 1 3 6\n"
    "3 4 2 1 5 6 0\n"
    "4 3 1 5 6 0 2\n"
    "2 6 3 0 4 5 1\n"
    "5 0 6 3 2 1 4\n";

constexpr const char* kRef7B =
    "2 1 0 6 3 4 5\n"
    "6 5 4 1 0 2 3\n"
    "0 2 5 4 1 3 6\n"
    "3 4 2 5 6 0 1\n"
    "4 3 1 2 5 6 0\n"
    "1 6 3 0 4 5 2\n"
    "5 0 6 3 2 1 4\n";

}  // namespace

TEST_CASE("capi: version and status names") {
  CHECK(lt_version() != nullptr);
  CHECK(std::string(lt_status_name(LT_OK)) == "ok");
  CHECK(std::string(lt_status_name(LT_ERR_ORDER_MISMATCH)) == "order_mismatch");
}

TEST_CASE("capi: parse, format, getters") {
  lt_square* sq = nullptr;
  REQUIRE(lt_square_parse(kRef7A, &sq) == LT_OK);
  CHECK(lt_square_order(sq) == 7);
  CHECK(lt_square_cell(sq, 0, 0) == 1);
  CHECK(lt_square_cell(sq, 7, 0) == -1);

  char* text = nullptr;
  REQUIRE(lt_square_format(sq, &text) == LT_OK);
  lt_square* again = nullptr;
  REQUIRE(lt_square_parse(text, &again) == LT_OK);
  CHECK(lt_square_equal(sq, again) == 1);
  lt_string_free(text);
  lt_square_free(again);
  lt_square_free(sq);
}

TEST_CASE("capi: parse failures set the thread error message") {
  lt_square* sq = nullptr;
  CHECK(lt_square_parse("0 1\n0 1\n", &sq) == LT_ERR_DUPLICATE_IN_COLUMN);
  CHECK(std::strlen(lt_last_error()) > 0);
  CHECK(lt_square_parse("garbage", &sq) == LT_ERR_PARSE);
  CHECK(lt_square_parse(nullptr, &sq) == LT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capi: distance and trade of the reference pair") {
  lt_square *a = nullptr, *b = nullptr;
  REQUIRE(lt_square_parse(kRef7A, &a) == LT_OK);
  REQUIRE(lt_square_parse(kRef7B, &b) == LT_OK);

  int d = 0;
  REQUIRE(lt_distance(a, b, &d) == LT_OK);
  CHECK(d == 18);

  lt_trade* t = nullptr;
  REQUIRE(lt_as_trade(a, b, &t) == LT_OK);
  CHECK(lt_trade_size(t) == 18);
  CHECK(lt_trade_order(t) == 7);
  int row, col, from, to;
  REQUIRE(lt_trade_cell(t, 0, &row, &col, &from, &to) == LT_OK);
  CHECK(row == 0);
  CHECK(col == 0);
  CHECK(from == 1);
  CHECK(to == 2);

  CHECK(lt_verify_trade(a, t, nullptr) == LT_OK);
  char* report = nullptr;
  CHECK(lt_verify_trade(b, t, &report) == LT_ERR_VERIFICATION);
  CHECK(std::string(report).find("contained: fail") != std::string::npos);
  lt_string_free(report);

  lt_square* applied = nullptr;
  REQUIRE(lt_apply_trade(a, t, &applied) == LT_OK);
  CHECK(lt_square_equal(applied, b) == 1);

  char* json = nullptr;
  REQUIRE(lt_trade_to_json(t, &json) == LT_OK);
  lt_trade* parsed = nullptr;
  REQUIRE(lt_trade_parse_json(json, &parsed) == LT_OK);
  CHECK(lt_trade_size(parsed) == 18);
  lt_string_free(json);
  lt_trade_free(parsed);
  lt_trade_free(t);
  lt_square_free(applied);
  lt_square_free(a);
  lt_square_free(b);
}

TEST_CASE("capi: find trade with defaults and with a fixed pair") {
  lt_square* a = nullptr;
  REQUIRE(lt_square_parse(kRef7A, &a) == LT_OK);

  lt_trade* t = nullptr;
  REQUIRE(lt_find_trade(a, nullptr, &t) == LT_OK);
  CHECK(lt_trade_size(t) <= 14);
  CHECK(lt_verify_trade(a, t, nullptr) == LT_OK);
  lt_trade_free(t);

  lt_finder_options opts;
  lt_finder_options_init(&opts);
  opts.pair_a = 1;
  opts.pair_b = 2;
  lt_trade* pt = nullptr;
  REQUIRE(lt_find_trade(a, &opts, &pt) == LT_OK);
  CHECK(lt_verify_trade(a, pt, nullptr) == LT_OK);
  lt_trade_free(pt);
  lt_square_free(a);
}

TEST_CASE("capi: generators and determinism") {
  lt_square* bc = nullptr;
  REQUIRE(lt_back_circulant(3, &bc) == LT_OK);
  CHECK(lt_square_cell(bc, 1, 2) == 0);
  lt_square_free(bc);

  lt_square *r1 = nullptr, *r2 = nullptr;
  REQUIRE(lt_random_square(9, 42, -1, &r1) == LT_OK);
  REQUIRE(lt_random_square(9, 42, -1, &r2) == LT_OK);
  CHECK(lt_square_equal(r1, r2) == 1);
  lt_square_free(r1);
  lt_square_free(r2);

  lt_square* bad = nullptr;
  CHECK(lt_back_circulant(0, &bad) == LT_ERR_INVALID_ARGUMENT);
  CHECK(lt_random_square(1, 0, -1, &bad) == LT_ERR_ORDER_TOO_SMALL);
}

TEST_CASE("capi: oracles") {
  lt_square* b3 = nullptr;
  REQUIRE(lt_back_circulant(3, &b3) == LT_OK);
  int size = 0;
  REQUIRE(lt_min_trade_exhaustive(b3, &size, nullptr) == LT_OK);
  CHECK(size == 6);

  int bnb_size = 0;
  lt_trade* witness = nullptr;
  REQUIRE(lt_min_trade_bnb(b3, 6, &bnb_size, &witness) == LT_OK);
  CHECK(bnb_size == 6);
  CHECK(lt_verify_trade(b3, witness, nullptr) == LT_OK);
  lt_trade_free(witness);

  lt_partial* empty = nullptr;
  REQUIRE(lt_partial_empty(3, &empty) == LT_OK);
  long long completions = 0;
  REQUIRE(lt_count_completions(empty, 100, &completions) == LT_OK);
  CHECK(completions == 12);

  int is_def = -1;
  lt_square* other = nullptr;
  REQUIRE(lt_is_defining_set(b3, empty, &is_def, &other) == LT_OK);
  CHECK(is_def == 0);
  REQUIRE(other != nullptr);
  CHECK(lt_square_equal(other, b3) == 0);
  lt_square_free(other);
  lt_partial_free(empty);

  int scs = -1;
  lt_partial* d = nullptr;
  REQUIRE(lt_smallest_defining_set(b3, &scs, &d) == LT_OK);
  CHECK(scs == 2);
  CHECK(lt_partial_size(d) == 2);
  lt_partial_free(d);

  int intercalates = -1;
  REQUIRE(lt_intercalate_count(b3, &intercalates) == LT_OK);
  CHECK(intercalates == 0);
  lt_square_free(b3);
}

TEST_CASE("capi: square minus trade feeds defining-set checks") {
  lt_square *a = nullptr, *b = nullptr;
  REQUIRE(lt_square_parse(kRef7A, &a) == LT_OK);
  REQUIRE(lt_square_parse(kRef7B, &b) == LT_OK);
  lt_trade* t = nullptr;
  REQUIRE(lt_as_trade(a, b, &t) == LT_OK);
  lt_partial* rest = nullptr;
  REQUIRE(lt_square_minus_trade(a, t, &rest) == LT_OK);
  CHECK(lt_partial_size(rest) == 49 - 18);
  int is_def = -1;
  REQUIRE(lt_is_defining_set(a, rest, &is_def, nullptr) == LT_OK);
  CHECK(is_def == 0);  // both reference squares complete it
  lt_partial_free(rest);
  lt_trade_free(t);
  lt_square_free(a);
  lt_square_free(b);
}
