#pragma once

#include <cstdint>
#include <optional>

#include "core/trade.hpp"

namespace latin {

/// The addition table of the integers mod n: cell (i, j) holds (i+j) mod n.
LatinSquare back_circulant(int n);

/// Name of the pseudo-random generator driving random_square, for output
/// metadata ("mt19937_64").
const char* random_square_rng_name();

/// Random Latin square: starts from back_circulant(n) and applies `burn_in`
/// steps of the +-1 move chain (each step displaces one symbol along an
/// intercalate-like flip, allowing one temporarily improper cell that the
/// step then resolves). Deterministic per seed; burn_in defaults to n^3.
LatinSquare random_square(int n, uint64_t seed,
                          std::optional<long long> burn_in = std::nullopt);

/// apply_trade, under the name fixture builders use.
LatinSquare perturb(const LatinSquare& l, const LatinTrade& t);

}  // namespace latin
