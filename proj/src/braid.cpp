#include "tpk/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tpk/error.hpp"

namespace tpk {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw InvalidInput("braid needs at least one strand");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int e = letters_[i];
    if (e == 0 || std::abs(e) > strands_ - 1)
      throw InvalidInput("generator " + std::to_string(e) + " at index " + std::to_string(i) +
                         " is out of range for " + std::to_string(strands_) + " strands");
  }
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands_ != strands_)
    throw InvalidInput("cannot concatenate braids on different strand counts");
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::reverse_inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& e : out)
    e = -e;
  return BraidWord(strands_, std::move(out));
}

std::vector<int> BraidWord::permutation() const {
  // at[pos] = bottom position of the strand currently at pos
  std::vector<int> at(strands_);
  std::iota(at.begin(), at.end(), 1);
  for (int e : letters_) {
    const int i = std::abs(e) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(strands_);
  for (int pos = 0; pos < strands_; ++pos)
    perm[at[pos] - 1] = pos + 1;
  return perm;
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int e : letters_) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s + "]";
}

} // namespace tpk
