// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agsum {

// h_0, h_1, ...; entries past the end are zero.
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<long> h) : h_(std::move(h)) { trim(); }

  long operator[](int i) const {
    return i >= 0 && i < static_cast<int>(h_.size()) ? h_[i] : 0;
  }
  int length() const { return static_cast<int>(h_.size()); }
  const std::vector<long>& values() const { return h_; }
  long total() const;

  // H[n]_i = H_{i-n}
  HilbertFunction shifted(int n) const;
  HilbertFunction operator+(const HilbertFunction& o) const;
  HilbertFunction operator-(const HilbertFunction& o) const;
  bool is_symmetric() const;
  bool is_nonnegative() const;

  friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) {
    return a.h_ == b.h_;
  }
  std::string to_string() const;  // "1 3 5 4 2"

 private:
  void trim();
  std::vector<long> h_;
};

std::ostream& operator<<(std::ostream& os, const HilbertFunction& h);

// The sequence (0,1,...,k,k+1,...,k+1,k,...,1,0) of length d+1.
HilbertFunction closure_increment(int k, int d);

using Partition = std::vector<int>;
Partition conjugate(const Partition& p);
// a dominates b (same total assumed).
bool dominates(const Partition& a, const Partition& b);
std::string to_string(const Partition& p);

}  // namespace agsum
