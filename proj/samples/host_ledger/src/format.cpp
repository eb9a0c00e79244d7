#include "format.h"

#include <cstdio>
#include <cstdlib>

namespace ledger {

std::string format_cents(long cents) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%c%ld.%02ld", sign_of(cents), std::labs(cents) / 100,
                std::labs(cents) % 100);
  return buf;
}

char sign_of(long cents) {
  return cents < 0 ? '-' : '+';
}

}  // namespace ledger
