#include "core/generators.hpp"

#include <random>

namespace latin {

LatinSquare back_circulant(int n) {
  if (n < 1) raise(Errc::invalid_argument, "order must be >= 1");
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells[i * n + j] = (i + j) % n;
  return LatinSquare::from_cells(n, std::move(cells));
}

const char* random_square_rng_name() { return "mt19937_64"; }

namespace {

// Unbiased bounded draw; mt19937_64 output is specified, so results are
// portable across platforms.
int draw_below(std::mt19937_64& rng, int m) {
  const uint64_t bound = static_cast<uint64_t>(m);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % bound);
}

// Mutable square with at most one improper cell: that cell carries two
// present symbols and one missing symbol. The missing symbol then occurs
// twice in the improper cell's row and twice in its column; those four
// positions are tracked explicitly, all other lookups stay exact.
struct ChainState {
  int n;
  std::vector<int> grid;    // -1 marks the improper cell
  std::vector<int> col_map;  // (row, sym) -> col
  std::vector<int> row_map;  // (col, sym) -> row
  bool improper = false;
  int ir = -1, ic = -1;      // improper cell
  int pos1 = -1, pos2 = -1;  // its two present symbols
  int neg = -1;              // its missing symbol
  int neg_cols[2] = {-1, -1};  // columns of `neg` in row ir
  int neg_rows[2] = {-1, -1};  // rows of `neg` in column ic

  int& cell(int r, int c) { return grid[r * n + c]; }
  int& col(int r, int s) { return col_map[r * n + s]; }
  int& row(int c, int s) { return row_map[c * n + s]; }

  explicit ChainState(const LatinSquare& l) : n(l.order()), grid(l.cells()) {
    col_map.assign(static_cast<size_t>(n) * n, -1);
    row_map.assign(static_cast<size_t>(n) * n, -1);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        col(r, cell(r, c)) = c;
        row(c, cell(r, c)) = r;
      }
  }

  // One +-1 flip on rows {r, r2}, columns {c, c2}, symbols {z, x}: z moves
  // into (r, c) displacing x into (r, c2) and (r2, c). The corner (r2, c2)
  // ends proper when it held x, improper otherwise.
  void flip(int r, int c, int z, int x, int c2, int r2) {
    const int prev_col_x = col(r2, x);
    const int prev_row_x = row(c2, x);

    if (improper) {
      cell(r, c) = (pos1 == x) ? pos2 : pos1;  // the other present symbol stays
      improper = false;
    } else {
      cell(r, c) = z;
      col(r, z) = c;
      row(c, z) = r;
    }
    cell(r, c2) = x;
    cell(r2, c) = x;
    col(r, x) = c2;
    row(c2, x) = r;
    row(c, x) = r2;
    col(r2, x) = c;

    int& corner = cell(r2, c2);
    if (corner == x) {
      corner = z;
      col(r2, z) = c2;
      row(c2, z) = r2;
    } else {
      improper = true;
      ir = r2;
      ic = c2;
      pos1 = corner;
      pos2 = z;
      neg = x;
      neg_cols[0] = prev_col_x;
      neg_cols[1] = c;
      neg_rows[0] = prev_row_x;
      neg_rows[1] = r;
      col(r2, z) = c2;
      row(c2, z) = r2;
      corner = -1;
    }
  }

  void proper_step(std::mt19937_64& rng) {
    const int r = draw_below(rng, n);
    const int c = draw_below(rng, n);
    const int x = cell(r, c);
    int z = draw_below(rng, n - 1);
    if (z >= x) ++z;
    flip(r, c, z, x, col(r, z), row(c, z));
  }

  void improper_step(std::mt19937_64& rng) {
    const int r = ir, c = ic, z = neg;
    const int x = (draw_below(rng, 2) == 0) ? pos1 : pos2;
    const int c2 = neg_cols[draw_below(rng, 2)];
    const int r2 = neg_rows[draw_below(rng, 2)];
    const int other_col = (neg_cols[0] == c2) ? neg_cols[1] : neg_cols[0];
    const int other_row = (neg_rows[0] == r2) ? neg_rows[1] : neg_rows[0];
    flip(r, c, z, x, c2, r2);
    // The duplicated occurrences of z collapse back to one per line.
    col(r, z) = other_col;
    row(c, z) = other_row;
  }
};

}  // namespace

LatinSquare random_square(int n, uint64_t seed, std::optional<long long> burn_in) {
  if (n < 2) raise(Errc::order_too_small, "random squares need order >= 2");
  const long long steps = burn_in.value_or(static_cast<long long>(n) * n * n);
  if (steps < 0) raise(Errc::invalid_argument, "burn_in must be >= 0");

  ChainState state(back_circulant(n));
  std::mt19937_64 rng(seed);
  for (long long i = 0; i < steps; ++i) {
    state.proper_step(rng);
    while (state.improper) state.improper_step(rng);
  }
  return LatinSquare::from_cells(n, std::move(state.grid));
}

LatinSquare perturb(const LatinSquare& l, const LatinTrade& t) { return apply_trade(l, t); }

}  // namespace latin
