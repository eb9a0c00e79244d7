#include "ledger.h"

namespace ledger {

void Ledger::add(Account account) {
  accounts_.push_back(std::move(account));
}

long Ledger::total() const {
  long sum = 0;
  for (const auto& a : accounts_) sum += a.balance();
  return sum;
}

Account* Ledger::find(const std::string& owner) {
  for (auto& a : accounts_) {
    if (a.owner() == owner) return &a;
  }
  return nullptr;
}

}  // namespace ledger
