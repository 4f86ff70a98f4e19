#include "latintrade/latintrade.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "core/finder.hpp"
#include "core/generators.hpp"
#include "core/io.hpp"
#include "core/oracle.hpp"

struct lt_square {
  latin::LatinSquare impl;
};
struct lt_partial {
  latin::PartialLatinSquare impl;
};
struct lt_trade {
  latin::LatinTrade impl;
};

namespace {

thread_local std::string g_last_error;

int status_of(latin::Errc code) {
  using latin::Errc;
  switch (code) {
    case Errc::invalid_argument: return LT_ERR_INVALID_ARGUMENT;
    case Errc::parse_error: return LT_ERR_PARSE;
    case Errc::symbol_out_of_range: return LT_ERR_SYMBOL_OUT_OF_RANGE;
    case Errc::duplicate_in_row: return LT_ERR_DUPLICATE_IN_ROW;
    case Errc::duplicate_in_column: return LT_ERR_DUPLICATE_IN_COLUMN;
    case Errc::order_mismatch: return LT_ERR_ORDER_MISMATCH;
    case Errc::identical_squares: return LT_ERR_IDENTICAL_SQUARES;
    case Errc::trade_not_contained: return LT_ERR_TRADE_NOT_CONTAINED;
    case Errc::same_row: return LT_ERR_SAME_ROW;
    case Errc::order_too_small: return LT_ERR_ORDER_TOO_SMALL;
    case Errc::order_too_large: return LT_ERR_ORDER_TOO_LARGE;
    case Errc::not_contained: return LT_ERR_NOT_CONTAINED;
    case Errc::not_a_cycle: return LT_ERR_NOT_A_CYCLE;
    case Errc::bad_symbols: return LT_ERR_BAD_SYMBOLS;
    case Errc::path_too_short: return LT_ERR_PATH_TOO_SHORT;
    case Errc::malformed_associated_square: return LT_ERR_MALFORMED_SQUARE;
    case Errc::verification_failed: return LT_ERR_VERIFICATION;
    case Errc::internal: return LT_ERR_INTERNAL;
  }
  return LT_ERR_INTERNAL;
}

int fail(int status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const latin::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LT_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* lt_version(void) { return "1.0.0"; }

const char* lt_status_name(int status) {
  switch (status) {
    case LT_OK: return "ok";
    case LT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LT_ERR_PARSE: return "parse_error";
    case LT_ERR_SYMBOL_OUT_OF_RANGE: return "symbol_out_of_range";
    case LT_ERR_DUPLICATE_IN_ROW: return "duplicate_in_row";
    case LT_ERR_DUPLICATE_IN_COLUMN: return "duplicate_in_column";
    case LT_ERR_ORDER_MISMATCH: return "order_mismatch";
    case LT_ERR_IDENTICAL_SQUARES: return "identical_squares";
    case LT_ERR_TRADE_NOT_CONTAINED: return "trade_not_contained";
    case LT_ERR_SAME_ROW: return "same_row";
    case LT_ERR_ORDER_TOO_SMALL: return "order_too_small";
    case LT_ERR_ORDER_TOO_LARGE: return "order_too_large";
    case LT_ERR_NOT_CONTAINED: return "not_contained";
    case LT_ERR_NOT_A_CYCLE: return "not_a_cycle";
    case LT_ERR_BAD_SYMBOLS: return "bad_symbols";
    case LT_ERR_PATH_TOO_SHORT: return "path_too_short";
    case LT_ERR_MALFORMED_SQUARE: return "malformed_associated_square";
    case LT_ERR_VERIFICATION: return "verification_failed";
    case LT_ERR_NO_CYCLE: return "no_cycle";
    case LT_ERR_NOMEM: return "out_of_memory";
    case LT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { delete[] s; }

int lt_square_parse(const char* text, lt_square** out) {
  if (!text || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_square{latin::parse_square_text(text)};
    return LT_OK;
  });
}

int lt_square_from_cells(int order, const int* cells, lt_square** out) {
  if (!cells || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  if (order < 1) return fail(LT_ERR_INVALID_ARGUMENT, "order must be >= 1");
  return guarded([&] {
    std::vector<int> v(cells, cells + static_cast<size_t>(order) * order);
    *out = new lt_square{latin::LatinSquare::from_cells(order, std::move(v))};
    return LT_OK;
  });
}

int lt_square_format(const lt_square* sq, char** out_text) {
  if (!sq || !out_text) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_text = dup_string(latin::format_square_text(sq->impl));
    return LT_OK;
  });
}

int lt_square_order(const lt_square* sq) { return sq ? sq->impl.order() : -1; }

int lt_square_cell(const lt_square* sq, int row, int col) {
  if (!sq) return -1;
  const int n = sq->impl.order();
  if (row < 0 || row >= n || col < 0 || col >= n) return -1;
  return sq->impl.at(row, col);
}

int lt_square_equal(const lt_square* a, const lt_square* b) {
  if (!a || !b) return -1;
  return a->impl == b->impl ? 1 : 0;
}

void lt_square_free(lt_square* sq) { delete sq; }

int lt_back_circulant(int order, lt_square** out) {
  if (!out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_square{latin::back_circulant(order)};
    return LT_OK;
  });
}

int lt_random_square(int order, uint64_t seed, int64_t burn_in, lt_square** out) {
  if (!out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<long long> steps;
    if (burn_in >= 0) steps = burn_in;
    *out = new lt_square{latin::random_square(order, seed, steps)};
    return LT_OK;
  });
}

int lt_distance(const lt_square* a, const lt_square* b, int* out) {
  if (!a || !b || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = latin::hamming_distance(a->impl, b->impl);
    return LT_OK;
  });
}

int lt_as_trade(const lt_square* a, const lt_square* b, lt_trade** out) {
  if (!a || !b || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_trade{latin::as_trade(a->impl, b->impl)};
    return LT_OK;
  });
}

int lt_apply_trade(const lt_square* sq, const lt_trade* t, lt_square** out) {
  if (!sq || !t || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_square{latin::apply_trade(sq->impl, t->impl)};
    return LT_OK;
  });
}

int lt_intercalate_count(const lt_square* sq, int* out) {
  if (!sq || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = static_cast<int>(latin::intercalates(sq->impl).size());
    return LT_OK;
  });
}

int lt_trade_size(const lt_trade* t) { return t ? t->impl.size() : -1; }

int lt_trade_order(const lt_trade* t) { return t ? t->impl.order() : -1; }

int lt_trade_cell(const lt_trade* t, int index, int* row, int* col, int* from, int* to) {
  if (!t || index < 0 || index >= t->impl.size())
    return fail(LT_ERR_INVALID_ARGUMENT, "bad trade cell index");
  const auto& a = t->impl.trade().triples()[index];
  const auto& b = t->impl.mate().triples()[index];
  if (row) *row = a.row;
  if (col) *col = a.col;
  if (from) *from = a.sym;
  if (to) *to = b.sym;
  return LT_OK;
}

int lt_trade_to_json(const lt_trade* t, char** out_text) {
  if (!t || !out_text) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_text = dup_string(latin::format_trade_json(t->impl));
    return LT_OK;
  });
}

int lt_trade_parse_json(const char* text, lt_trade** out) {
  if (!text || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_trade{latin::parse_trade_json(text)};
    return LT_OK;
  });
}

void lt_trade_free(lt_trade* t) { delete t; }

int lt_verify_trade(const lt_square* sq, const lt_trade* t, char** report_out) {
  if (!sq || !t) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto checks = latin::trade_check_report(sq->impl, t->impl.trade(), t->impl.mate());
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& c : checks) {
      all_ok = all_ok && c.ok;
      os << c.name << ": " << (c.ok ? "ok" : "fail") << '\n';
    }
    os << "result: " << (all_ok ? "ok" : "fail") << '\n';
    if (report_out) *report_out = dup_string(os.str());
    if (!all_ok) {
      g_last_error = "trade verification failed";
      return LT_ERR_VERIFICATION;
    }
    return LT_OK;
  });
}

void lt_finder_options_init(lt_finder_options* opts) {
  if (!opts) return;
  opts->strategy = LT_STRATEGY_GREEDY;
  opts->b_const = 4.0;
  opts->k_const = 4.0 / 3.0;
  opts->d_const = 19.0 / 6.0;
  opts->f = 0;
  opts->pair_a = -1;
  opts->pair_b = -1;
}

int lt_find_trade(const lt_square* sq, const lt_finder_options* opts, lt_trade** out) {
  if (!sq || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> int {
    lt_finder_options defaults;
    lt_finder_options_init(&defaults);
    const lt_finder_options& o = opts ? *opts : defaults;

    latin::FinderConfig cfg;
    cfg.b_const = o.b_const;
    cfg.k_const = o.k_const;
    cfg.d_const = o.d_const;
    cfg.f_override = o.f;
    switch (o.strategy) {
      case LT_STRATEGY_GREEDY: cfg.strategy = latin::FinderStrategy::greedy; break;
      case LT_STRATEGY_PROOF: cfg.strategy = latin::FinderStrategy::proof; break;
      case LT_STRATEGY_EXHAUSTIVE_PAIRS:
        cfg.strategy = latin::FinderStrategy::exhaustive_pairs;
        break;
      default: return fail(LT_ERR_INVALID_ARGUMENT, "unknown strategy");
    }

    if (o.pair_a >= 0 || o.pair_b >= 0) {
      auto t = latin::pair_trade(sq->impl, o.pair_a, o.pair_b, cfg.f_for(sq->impl.order()));
      if (!t) return fail(LT_ERR_NO_CYCLE, "the digraph of this symbol pair has no cycle");
      *out = new lt_trade{*t};
      return LT_OK;
    }
    *out = new lt_trade{latin::find_small_trade(sq->impl, cfg)};
    return LT_OK;
  });
}

int lt_partial_parse(const char* text, lt_partial** out) {
  if (!text || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_partial{latin::parse_partial_text(text)};
    return LT_OK;
  });
}

int lt_partial_format(const lt_partial* p, char** out_text) {
  if (!p || !out_text) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_text = dup_string(latin::format_partial_text(p->impl));
    return LT_OK;
  });
}

int lt_partial_order(const lt_partial* p) { return p ? p->impl.order() : -1; }

int lt_partial_size(const lt_partial* p) { return p ? p->impl.size() : -1; }

int lt_partial_triple(const lt_partial* p, int index, int* row, int* col, int* sym) {
  if (!p || index < 0 || index >= p->impl.size())
    return fail(LT_ERR_INVALID_ARGUMENT, "bad triple index");
  const auto& t = p->impl.triples()[index];
  if (row) *row = t.row;
  if (col) *col = t.col;
  if (sym) *sym = t.sym;
  return LT_OK;
}

int lt_partial_empty(int order, lt_partial** out) {
  if (!out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lt_partial{latin::PartialLatinSquare(order)};
    return LT_OK;
  });
}

int lt_square_minus_trade(const lt_square* sq, const lt_trade* t, lt_partial** out) {
  if (!sq || !t || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const int n = sq->impl.order();
    std::vector<latin::Triple> keep;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!t->impl.trade().cell_occupied(r, c)) keep.push_back({r, c, sq->impl.at(r, c)});
    *out = new lt_partial{latin::PartialLatinSquare::from_triples(n, std::move(keep))};
    return LT_OK;
  });
}

void lt_partial_free(lt_partial* p) { delete p; }

int lt_min_trade_exhaustive(const lt_square* sq, int* size, lt_trade** witness) {
  if (!sq || !size) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto [s, t] = latin::min_trade_exhaustive(sq->impl);
    *size = s;
    if (witness) *witness = new lt_trade{std::move(t)};
    return LT_OK;
  });
}

int lt_min_trade_bnb(const lt_square* sq, int size_cap, int* size, lt_trade** witness) {
  if (!sq || !size) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = latin::min_trade_bnb(sq->impl, size_cap);
    if (!result) {
      *size = -1;
      if (witness) *witness = nullptr;
      return LT_OK;
    }
    *size = result->first;
    if (witness) *witness = new lt_trade{std::move(result->second)};
    return LT_OK;
  });
}

int lt_count_completions(const lt_partial* p, long long cap, long long* out) {
  if (!p || !out) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = latin::count_completions(p->impl, cap);
    return LT_OK;
  });
}

int lt_is_defining_set(const lt_square* sq, const lt_partial* d, int* is_defining,
                       lt_square** witness) {
  if (!sq || !d || !is_defining) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto rep = latin::is_defining_set(sq->impl, d->impl);
    *is_defining = rep.is_defining ? 1 : 0;
    if (witness) *witness = rep.witness ? new lt_square{*rep.witness} : nullptr;
    return LT_OK;
  });
}

int lt_smallest_defining_set(const lt_square* sq, int* size, lt_partial** out) {
  if (!sq || !size) return fail(LT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto [s, d] = latin::smallest_defining_set(sq->impl);
    *size = s;
    if (out) *out = new lt_partial{std::move(d)};
    return LT_OK;
  });
}

}  // extern "C"
