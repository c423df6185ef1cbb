// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/hilbert.hpp"

#include <algorithm>
#include <ostream>
#include <numeric>

namespace agsum {

void HilbertFunction::trim() {
  while (!h_.empty() && h_.back() == 0) h_.pop_back();
}

long HilbertFunction::total() const { return std::accumulate(h_.begin(), h_.end(), 0L); }

HilbertFunction HilbertFunction::shifted(int n) const {
  int len = std::max(0, length() + n);
  std::vector<long> out(len, 0);
  for (int i = 0; i < len; ++i) out[i] = (*this)[i - n];
  return HilbertFunction(out);
}

HilbertFunction HilbertFunction::operator+(const HilbertFunction& o) const {
  int len = std::max(length(), o.length());
  std::vector<long> out(len);
  for (int i = 0; i < len; ++i) out[i] = (*this)[i] + o[i];
  return HilbertFunction(out);
}

HilbertFunction HilbertFunction::operator-(const HilbertFunction& o) const {
  int len = std::max(length(), o.length());
  std::vector<long> out(len);
  for (int i = 0; i < len; ++i) out[i] = (*this)[i] - o[i];
  return HilbertFunction(out);
}

bool HilbertFunction::is_symmetric() const {
  for (int i = 0; i < length(); ++i)
    if (h_[i] != h_[length() - 1 - i]) return false;
  return true;
}

bool HilbertFunction::is_nonnegative() const {
  return std::all_of(h_.begin(), h_.end(), [](long x) { return x >= 0; });
}

std::string HilbertFunction::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < h_.size(); ++i) s += (i ? " " : "") + std::to_string(h_[i]);
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const HilbertFunction& h) { return os << "(" << h.to_string() << ")"; }

HilbertFunction closure_increment(int k, int d) {
  std::vector<long> w(d + 1, 0);
  for (int i = 1; i < d; ++i) w[i] = std::min({i, d - i, k + 1});
  return HilbertFunction(w);
}

Partition conjugate(const Partition& p) {
  Partition out;
  int largest = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  for (int s = 1; s <= largest; ++s)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [s](int x) { return x >= s; })));
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace agsum
