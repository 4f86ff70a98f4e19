/* Compiled as C89-compatible C: the public header must work without C++. */
#include <stdio.h>
#include <string.h>

#include "latintrade/latintrade.h"

int main(void) {
  lt_square* sq = NULL;
  lt_trade* t = NULL;
  int d = 0;
  int status;

  if (strlen(lt_version()) == 0) return 1;

  status = lt_back_circulant(4, &sq);
  if (status != LT_OK) return 1;
  if (lt_square_order(sq) != 4) return 1;
  if (lt_square_cell(sq, 2, 3) != 1) return 1;

  status = lt_find_trade(sq, NULL, &t);
  if (status != LT_OK) return 1;
  if (lt_trade_size(t) < 4) return 1;
  if (lt_verify_trade(sq, t, NULL) != LT_OK) return 1;

  status = lt_distance(sq, NULL, &d);
  if (status != LT_ERR_INVALID_ARGUMENT) return 1;
  if (strlen(lt_last_error()) == 0) return 1;

  lt_trade_free(t);
  lt_square_free(sq);
  printf("ok\n");
  return 0;
}
