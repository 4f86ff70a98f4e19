// Command-line front end for the latintrade shared library. Talks to the
// library exclusively through its C interface.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latintrade/latintrade.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(int status) {
  switch (status) {
    case LT_OK: return kExitOk;
    case LT_ERR_VERIFICATION:
    case LT_ERR_NO_CYCLE:
    case LT_ERR_TRADE_NOT_CONTAINED: return kExitVerificationFailure;
    default: return kExitUsage;
  }
}

int complain(int status) {
  std::cerr << "error: " << lt_last_error() << " (" << lt_status_name(status) << ")\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

struct SquareHandle {
  lt_square* ptr = nullptr;
  ~SquareHandle() { lt_square_free(ptr); }
};
struct TradeHandle {
  lt_trade* ptr = nullptr;
  ~TradeHandle() { lt_trade_free(ptr); }
};
struct PartialHandle {
  lt_partial* ptr = nullptr;
  ~PartialHandle() { lt_partial_free(ptr); }
};

int load_square(const std::string& path, SquareHandle& sq) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  if (int st = lt_square_parse(text.c_str(), &sq.ptr); st != LT_OK) return complain(st);
  return kExitOk;
}

int bound_8sqrt(int n) { return static_cast<int>(std::ceil(8.0 * std::sqrt(double(n)) - 1e-9)); }

void print_trade_text(const lt_trade* t) {
  std::cout << "n=" << lt_trade_order(t) << "\n";
  for (int i = 0; i < lt_trade_size(t); ++i) {
    int r, c, from, to;
    lt_trade_cell(t, i, &r, &c, &from, &to);
    std::cout << "(" << r << "," << c << ") " << from << "->" << to << "\n";
  }
}

int print_trade_json(const lt_trade* t) {
  char* json = nullptr;
  if (int st = lt_trade_to_json(t, &json); st != LT_OK) return complain(st);
  std::cout << json << "\n";
  lt_string_free(json);
  return kExitOk;
}

uint64_t sample_seed(uint64_t seed, int order, int sample) {
  uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (uint64_t(order) * 100003ULL + sample + 1));
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

int cmd_find_trade(const std::string& square_file, const std::string& strategy,
                   const std::vector<int>& pair, double b_const, double k_const, double d_const,
                   int f, bool json) {
  SquareHandle sq;
  if (int rc = load_square(square_file, sq); rc != kExitOk) return rc;
  const int n = lt_square_order(sq.ptr);
  if (n < 2) {
    std::cerr << "error: no trade exists for n<2\n";
    return kExitUsage;
  }

  lt_finder_options opts;
  lt_finder_options_init(&opts);
  if (strategy == "proof")
    opts.strategy = LT_STRATEGY_PROOF;
  else if (strategy == "greedy")
    opts.strategy = LT_STRATEGY_GREEDY;
  else if (strategy == "exhaustive-pairs")
    opts.strategy = LT_STRATEGY_EXHAUSTIVE_PAIRS;
  else {
    std::cerr << "error: unknown strategy '" << strategy << "'\n";
    return kExitUsage;
  }
  opts.b_const = b_const;
  opts.k_const = k_const;
  opts.d_const = d_const;
  opts.f = f;
  if (!pair.empty()) {
    opts.pair_a = pair[0];
    opts.pair_b = pair[1];
  }

  TradeHandle trade;
  if (int st = lt_find_trade(sq.ptr, &opts, &trade.ptr); st != LT_OK) return complain(st);

  // Everything printed here must re-verify.
  if (int st = lt_verify_trade(sq.ptr, trade.ptr, nullptr); st != LT_OK) {
    std::cerr << "error: found trade failed re-verification\n";
    return kExitVerificationFailure;
  }
  if (json) {
    if (int rc = print_trade_json(trade.ptr); rc != kExitOk) return rc;
  } else {
    print_trade_text(trade.ptr);
  }
  const int bound = std::min(2 * n, bound_8sqrt(n));
  std::cout << "size=" << lt_trade_size(trade.ptr) << " bound=" << bound << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& square_file, const std::string& trade_file) {
  SquareHandle sq;
  if (int rc = load_square(square_file, sq); rc != kExitOk) return rc;
  std::string text;
  if (!read_file(trade_file, text)) {
    std::cerr << "error: cannot read '" << trade_file << "'\n";
    return kExitUsage;
  }
  TradeHandle trade;
  if (int st = lt_trade_parse_json(text.c_str(), &trade.ptr); st != LT_OK) return complain(st);

  char* report = nullptr;
  const int st = lt_verify_trade(sq.ptr, trade.ptr, &report);
  if (report) {
    std::cout << report;
    lt_string_free(report);
  }
  if (st == LT_OK) return kExitOk;
  if (st == LT_ERR_VERIFICATION) return kExitVerificationFailure;
  return complain(st);
}

int cmd_distance(const std::string& file1, const std::string& file2) {
  SquareHandle a, b;
  if (int rc = load_square(file1, a); rc != kExitOk) return rc;
  if (int rc = load_square(file2, b); rc != kExitOk) return rc;
  int d = 0;
  if (int st = lt_distance(a.ptr, b.ptr, &d); st != LT_OK) return complain(st);
  std::cout << d << "\n";
  return kExitOk;
}

int cmd_oracle_min_trade(const std::string& square_file) {
  SquareHandle sq;
  if (int rc = load_square(square_file, sq); rc != kExitOk) return rc;
  const int n = lt_square_order(sq.ptr);
  int size = -1;
  TradeHandle witness;
  int st;
  if (n <= 5)
    st = lt_min_trade_exhaustive(sq.ptr, &size, &witness.ptr);
  else
    st = lt_min_trade_bnb(sq.ptr, 2 * n, &size, &witness.ptr);
  if (st != LT_OK) return complain(st);
  std::cout << "min_trade n=" << n << " size=" << size << "\n";
  if (witness.ptr) return print_trade_json(witness.ptr);
  return kExitOk;
}

int cmd_oracle_defining_check(const std::string& square_file, const std::string& partial_file) {
  SquareHandle sq;
  if (int rc = load_square(square_file, sq); rc != kExitOk) return rc;
  std::string text;
  if (!read_file(partial_file, text)) {
    std::cerr << "error: cannot read '" << partial_file << "'\n";
    return kExitUsage;
  }
  PartialHandle d;
  if (int st = lt_partial_parse(text.c_str(), &d.ptr); st != LT_OK) return complain(st);
  int is_defining = 0;
  if (int st = lt_is_defining_set(sq.ptr, d.ptr, &is_defining, nullptr); st != LT_OK)
    return complain(st);
  if (is_defining) {
    std::cout << "completions=1 defining=yes\n";
    return kExitOk;
  }
  std::cout << "completions=2+ defining=no\n";
  return kExitVerificationFailure;
}

int cmd_oracle_scs(const std::string& square_file) {
  SquareHandle sq;
  if (int rc = load_square(square_file, sq); rc != kExitOk) return rc;
  int size = -1;
  PartialHandle d;
  if (int st = lt_smallest_defining_set(sq.ptr, &size, &d.ptr); st != LT_OK) return complain(st);
  std::cout << "scs=" << size << "\n";
  char* text = nullptr;
  if (int st = lt_partial_format(d.ptr, &text); st != LT_OK) return complain(st);
  std::cout << text;
  lt_string_free(text);
  return kExitOk;
}

int cmd_gen_back_circulant(int n) {
  SquareHandle sq;
  if (int st = lt_back_circulant(n, &sq.ptr); st != LT_OK) return complain(st);
  char* text = nullptr;
  if (int st = lt_square_format(sq.ptr, &text); st != LT_OK) return complain(st);
  std::cout << "# kind=back_circulant n=" << n << "\n" << text;
  lt_string_free(text);
  return kExitOk;
}

int cmd_gen_random(int n, uint64_t seed, int64_t burn_in) {
  SquareHandle sq;
  if (int st = lt_random_square(n, seed, burn_in, &sq.ptr); st != LT_OK) return complain(st);
  char* text = nullptr;
  if (int st = lt_square_format(sq.ptr, &text); st != LT_OK) return complain(st);
  const int64_t effective = burn_in >= 0 ? burn_in : int64_t(n) * n * n;
  std::cout << "# kind=random n=" << n << " seed=" << seed << " burn_in=" << effective
            << " rng=mt19937_64\n"
            << text;
  lt_string_free(text);
  return kExitOk;
}

int cmd_stats(const std::vector<int>& orders, int samples, uint64_t seed) {
  std::cout << "order,sample,found_size,intercalates,bound_8sqrt,bound_2n\n";
  for (int n : orders) {
    if (n < 2) {
      std::cerr << "error: orders must be >= 2\n";
      return kExitUsage;
    }
    for (int i = 0; i < samples; ++i) {
      SquareHandle sq;
      if (int st = lt_random_square(n, sample_seed(seed, n, i), -1, &sq.ptr); st != LT_OK)
        return complain(st);
      TradeHandle trade;
      if (int st = lt_find_trade(sq.ptr, nullptr, &trade.ptr); st != LT_OK) return complain(st);
      int inter = 0;
      if (int st = lt_intercalate_count(sq.ptr, &inter); st != LT_OK) return complain(st);
      std::cout << n << ',' << i << ',' << lt_trade_size(trade.ptr) << ',' << inter << ','
                << bound_8sqrt(n) << ',' << 2 * n << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latin squares, Latin trades and defining sets"};
  app.require_subcommand(1);

  // find-trade
  std::string ft_square, ft_strategy = "greedy";
  std::vector<int> ft_pair;
  double ft_b = 4.0, ft_k = 4.0 / 3.0, ft_d = 19.0 / 6.0;
  int ft_f = 0;
  bool ft_json = false;
  auto* find_trade = app.add_subcommand("find-trade", "Find a small Latin trade in a square");
  find_trade->add_option("square", ft_square, "square file")->required();
  find_trade->add_option("--strategy", ft_strategy, "proof | greedy | exhaustive-pairs");
  find_trade->add_option("--pair", ft_pair, "restrict to one symbol pair a b")->expected(2);
  find_trade->add_option("--b-const", ft_b, "bound coefficient");
  find_trade->add_option("--k-const", ft_k, "path-length coefficient");
  find_trade->add_option("--d-const", ft_d, "cutoff coefficient");
  find_trade->add_option("--f", ft_f, "zig-zag cutoff override");
  find_trade->add_flag("--json", ft_json, "structured output");

  // verify
  std::string v_square, v_trade;
  auto* verify = app.add_subcommand("verify", "Check a trade against a square");
  verify->add_option("square", v_square, "square file")->required();
  verify->add_option("trade", v_trade, "trade file (json)")->required();

  // distance
  std::string d_file1, d_file2;
  auto* distance = app.add_subcommand("distance", "Hamming distance of two squares");
  distance->add_option("square1", d_file1)->required();
  distance->add_option("square2", d_file2)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground-truth checks");
  oracle->require_subcommand(1);
  std::string omt_square;
  auto* omt = oracle->add_subcommand("min-trade", "True minimum trade size (order <= 8)");
  omt->add_option("square", omt_square)->required();
  std::string odc_square, odc_partial;
  auto* odc = oracle->add_subcommand("defining-check", "Unique-completion check");
  odc->add_option("square", odc_square)->required();
  odc->add_option("partial", odc_partial)->required();
  std::string oscs_square;
  auto* oscs = oracle->add_subcommand("scs", "Smallest defining set (order <= 5)");
  oscs->add_option("square", oscs_square)->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate squares");
  gen->require_subcommand(1);
  int gbc_n = 0;
  auto* gbc = gen->add_subcommand("back-circulant", "Addition table mod n");
  gbc->add_option("n", gbc_n, "order")->required();
  int gr_n = 0;
  uint64_t gr_seed = 0;
  int64_t gr_burn = -1;
  auto* gr = gen->add_subcommand("random", "Seeded random square");
  gr->add_option("n", gr_n, "order")->required();
  gr->add_option("--seed", gr_seed, "64-bit seed");
  gr->add_option("--burn-in", gr_burn, "chain steps (default n^3)");

  // stats
  std::vector<int> st_orders;
  int st_samples = 10;
  uint64_t st_seed = 0;
  auto* stats = app.add_subcommand("stats", "Trade-size statistics over random squares (CSV)");
  stats->add_option("--orders", st_orders, "orders to sample")->delimiter(',')->required();
  stats->add_option("--samples", st_samples, "samples per order");
  stats->add_option("--seed", st_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (find_trade->parsed())
      return cmd_find_trade(ft_square, ft_strategy, ft_pair, ft_b, ft_k, ft_d, ft_f, ft_json);
    if (verify->parsed()) return cmd_verify(v_square, v_trade);
    if (distance->parsed()) return cmd_distance(d_file1, d_file2);
    if (oracle->parsed()) {
      if (omt->parsed()) return cmd_oracle_min_trade(omt_square);
      if (odc->parsed()) return cmd_oracle_defining_check(odc_square, odc_partial);
      if (oscs->parsed()) return cmd_oracle_scs(oscs_square);
    }
    if (gen->parsed()) {
      if (gbc->parsed()) return cmd_gen_back_circulant(gbc_n);
      if (gr->parsed()) return cmd_gen_random(gr_n, gr_seed, gr_burn);
    }
    if (stats->parsed()) return cmd_stats(st_orders, st_samples, st_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
