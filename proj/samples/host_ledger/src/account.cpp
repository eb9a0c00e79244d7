#include "account.h"

#include <cmath>

namespace ledger {

Account::Account(std::string owner) : owner_(std::move(owner)) {}

void Account::deposit(long cents) {
  if (closed_ || cents <= 0) return;
  balance_ += cents;
  record_audit("deposit " + std::to_string(cents));
}

bool Account::withdraw(long cents) {
  if (!can_withdraw(cents)) return false;
  balance_ -= cents;
  record_audit("withdraw " + std::to_string(cents));
  return true;
}

bool Account::can_withdraw(long cents) const {
  return !closed_ && cents > 0 && balance_ - cents >= -overdraft_limit_;
}

bool Account::is_overdrawn() const {
  return balance_ < 0;
}

void Account::apply_interest(double rate) {
  balance_ += static_cast<long>(std::lround(interest_for(rate)));
}

double Account::interest_for(double rate) const {
  return static_cast<double>(balance_) * rate;
}

void Account::close() {
  closed_ = true;
  record_audit("close");
}

void Account::record_audit(const std::string& entry) {
  audit_.push_back(entry);
}

}  // namespace ledger
