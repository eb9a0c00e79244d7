#ifndef LEDGER_LEDGER_H
#define LEDGER_LEDGER_H

#include <cstddef>
#include <string>
#include <vector>

#include "account.h"

namespace ledger {

class Ledger {
 public:
  void add(Account account);
  long total() const;
  std::size_t size() const { return accounts_.size(); }
  Account* find(const std::string& owner);

 private:
  std::vector<Account> accounts_;
};

}  // namespace ledger

#endif  // LEDGER_LEDGER_H
