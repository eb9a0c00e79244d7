// Copyright 2026 The pseudotest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace pseudotest {
namespace {

using cpp::scan_source;

const cpp::ScannedFunction* find(const std::vector<cpp::ScannedFunction>& fns,
                                 const std::string& key) {
  for (const auto& f : fns)
    if (f.info.id.key() == key) return &f;
  return nullptr;
}

TEST(CppScanner, TokenizerDropsCommentsAndDirectives) {
  const auto toks = cpp::tokenize("#include <x>\n// a { b\nint /* } */ f() { return R\"(})\"; }");
  std::string joined;
  for (const auto& t : toks) joined += t.text + " ";
  EXPECT_EQ(joined, "int f ( ) { return R\"(})\" ; } ");
}

TEST(CppScanner, FreeAndMemberFunctions) {
  const std::string src = R"(
namespace bank {
class Account {
 public:
  Account(std::string owner, long cents) : owner_(std::move(owner)), cents_{cents} {}
  ~Account() { close(); }
  const std::string& owner() const { return owner_; }
  long cents() const { return this->cents_; }
  void set_cents(long c) { cents_ = c; }
  bool empty() const { return cents_ == 0 && owner_.empty(); }
  constexpr int zero() const { return 0; }
 private:
  std::string owner_;
  long cents_;
};
double ratio(int a, int b) {
  if (b == 0) return 0.0;
  return static_cast<double>(a) / b;
}
char initial(const std::string& s) { return s.empty() ? ' ' : s[0]; }
std::string label() { return "x"; }
void noop() {}
auto sum(int a, int b) -> int { return a + b; }
bool operator==(const Account& a, const Account& b) { return a.cents() == b.cents(); }
}  // namespace bank
long bank::Account_total(int n) { long t = 0; for (int i = 0; i < n; ++i) { t += i; } return t; }
)";
  const auto fns = scan_source(src, "a.cpp");
  const auto* ctor = find(fns, "bank::Account::Account(std::string,long)");
  ASSERT_TRUE(ctor);
  EXPECT_TRUE(ctor->info.is_constructor);
  EXPECT_EQ(ctor->info.statement_count, 0);
  const auto* dtor = find(fns, "bank::Account::~Account()");
  ASSERT_TRUE(dtor);
  EXPECT_TRUE(dtor->info.is_constructor);
  const auto* owner = find(fns, "bank::Account::owner()");
  ASSERT_TRUE(owner);
  EXPECT_EQ(owner->info.return_type.kind, ReturnKind::kObject);
  EXPECT_TRUE(owner->info.is_trivial_accessor);
  EXPECT_TRUE(find(fns, "bank::Account::cents()")->info.is_trivial_accessor);
  EXPECT_TRUE(find(fns, "bank::Account::set_cents(long)")->info.is_trivial_accessor);
  const auto* empty = find(fns, "bank::Account::empty()");
  ASSERT_TRUE(empty);
  EXPECT_FALSE(empty->info.is_trivial_accessor);
  EXPECT_EQ(empty->info.return_type.kind, ReturnKind::kBoolean);
  EXPECT_TRUE(find(fns, "bank::Account::zero()")->is_constexpr);
  const auto* ratio = find(fns, "bank::ratio(int,int)");
  ASSERT_TRUE(ratio);
  EXPECT_EQ(ratio->info.return_type.kind, ReturnKind::kFloating);
  EXPECT_EQ(ratio->info.statement_count, 2);
  EXPECT_EQ(ratio->info.id.source_locator.line_begin, 16);
  EXPECT_EQ(find(fns, "bank::initial(const std::string&)")->info.return_type.kind,
            ReturnKind::kCharacter);
  EXPECT_EQ(find(fns, "bank::label()")->info.return_type.kind, ReturnKind::kString);
  EXPECT_EQ(find(fns, "bank::noop()")->info.statement_count, 0);
  EXPECT_EQ(find(fns, "bank::sum(int,int)")->info.return_type.kind, ReturnKind::kInteger);
  EXPECT_TRUE(find(fns, "bank::operator==(const Account&,const Account&)"));
  const auto* total = find(fns, "bank::Account_total(int)");
  ASSERT_TRUE(total);
  EXPECT_EQ(total->info.statement_count, 3);
}

TEST(CppScanner, DeclarationsAndLambdasAreNotFunctions) {
  const auto fns = scan_source(R"(
int declared(int x);
struct S { int f(); int v = 3; };
int use() { auto l = [](int a) { return a * 2; }; return l(2); }
)",
                               "b.cpp");
  ASSERT_EQ(fns.size(), 1u);
  EXPECT_EQ(fns[0].info.id.name, "use");
  EXPECT_EQ(fns[0].info.statement_count, 2);
}

TEST(CppScanner, RepeatedKeysGetSuffix) {
  const auto fns = scan_source(R"(
struct V {
  int& at(int i) { return data[i]; }
  const int& at(int i) const { return data[i]; }
  int data[4];
};
)",
                               "c.h");
  ASSERT_EQ(fns.size(), 2u);
  EXPECT_EQ(fns[0].info.id.key(), "V::at(int)");
  EXPECT_EQ(fns[1].info.id.key(), "V::at(int#2)");
}

TEST(CppScanner, ReplaceBody) {
  const std::string src = "int f(int x) {\n  return x + 1;\n}\nvoid g() { h(); }\n";
  const auto fns = scan_source(src, "d.cpp");
  ASSERT_EQ(fns.size(), 2u);
  EXPECT_EQ(cpp::replace_body(src, fns[0], "return 0;"),
            "int f(int x) { return 0; }\nvoid g() { h(); }\n");
  EXPECT_EQ(cpp::replace_body(src, fns[1], ""), "int f(int x) {\n  return x + 1;\n}\nvoid g() {}\n");
}

TEST(CppScanner, SourceExtensions) {
  EXPECT_TRUE(cpp::is_cpp_source("a/b.cpp"));
  EXPECT_TRUE(cpp::is_cpp_source("a/b.hpp"));
  EXPECT_FALSE(cpp::is_cpp_source("a/b.txt"));
  EXPECT_FALSE(cpp::is_cpp_source("CMakeLists.txt"));
}

}  // namespace
}  // namespace pseudotest
