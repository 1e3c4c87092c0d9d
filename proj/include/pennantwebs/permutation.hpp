#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pennantwebs {

// A permutation of {1..n} in one-line notation w(1), w(2), ..., w(n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation of {1..n}: " + to_string_of(images_));
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(check_n(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  // s_i: swaps i and i+1.
  static Permutation simple_transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
    Permutation w = identity(n);
    std::swap(w.images_[i - 1], w.images_[i]);
    return w;
  }

  // The long cycle c = n 1 2 ... (n-1), so c(i) = i-1 for i > 1 and c(1) = n.
  static Permutation long_cycle(int n) {
    std::vector<int> im(check_n(n));
    im[0] = n;
    for (int i = 2; i <= n; ++i) im[i - 1] = i - 1;
    return Permutation(std::move(im));
  }

  // The long element w0: i -> n+1-i.
  static Permutation reversal(int n) {
    std::vector<int> im(check_n(n));
    for (int i = 1; i <= n; ++i) im[i - 1] = n + 1 - i;
    return Permutation(std::move(im));
  }

  int n() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    if (i < 1 || i > n()) throw std::invalid_argument("permutation applied outside domain");
    return images_[i - 1];
  }

  // (w.compose(v))(i) = w(v(i)).
  Permutation compose(const Permutation& inner) const {
    if (inner.n() != n()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= n(); ++i) im[i - 1] = images_[inner(i) - 1];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= n(); ++i) im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
  }

  Permutation power(int k) const {
    Permutation r = identity(n());
    Permutation base = k >= 0 ? *this : inverse();
    for (int t = std::abs(k); t > 0; --t) r = base.compose(r);
    return r;
  }

  long long inversions() const {
    long long inv = 0;
    for (size_t a = 0; a < images_.size(); ++a)
      for (size_t b = a + 1; b < images_.size(); ++b)
        if (images_[a] > images_[b]) ++inv;
    return inv;
  }

  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  static Permutation parse(const std::string& text) {
    std::vector<int> im;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument("bad permutation entry: " + item);
      im.push_back(v);
    }
    return Permutation(std::move(im));
  }

  std::string to_string() const { return to_string_of(images_); }

 private:
  static int check_n(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    return n;
  }
  static std::string to_string_of(const std::vector<int>& im) {
    std::string s;
    for (size_t i = 0; i < im.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(im[i]);
    }
    return s;
  }

  std::vector<int> images_;
};

}  // namespace pennantwebs
