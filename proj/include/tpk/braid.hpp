#pragma once

#include <span>
#include <string>
#include <vector>

namespace tpk {

/// A word in the Artin generators on a fixed number of strands. Letter e
/// stands for sigma_|e|^sign(e); a positive letter means the strand at
/// position |e| passes over the strand at position |e|+1. Words are read
/// bottom to top.
class BraidWord {
public:
  /// Throws InvalidInput if strands < 1 or any letter is 0 or out of range.
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_.at(i); }

  /// this followed by other (other sits above). Strand counts must agree.
  BraidWord concat(const BraidWord& other) const;

  /// Letters reversed and negated; the group inverse.
  BraidWord reverse_inverse() const;

  /// perm[p-1] is the top position reached by the strand entering at
  /// bottom position p.
  std::vector<int> permutation() const;

  /// Repeatedly deletes adjacent e,-e pairs.
  BraidWord freely_reduced() const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<int> letters_;
};

} // namespace tpk
