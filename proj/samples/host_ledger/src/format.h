#ifndef LEDGER_FORMAT_H
#define LEDGER_FORMAT_H

#include <string>

namespace ledger {

std::string format_cents(long cents);
char sign_of(long cents);

}  // namespace ledger

#endif  // LEDGER_FORMAT_H
