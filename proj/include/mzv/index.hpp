#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

/// A finite sequence of positive integers (k_1, ..., k_r). The empty index is
/// valid but never admissible.
class Index {
 public:
  using part_type = std::uint32_t;

  Index() = default;
  Index(std::initializer_list<part_type> parts);
  explicit Index(std::vector<part_type> parts);

  const std::vector<part_type>& parts() const noexcept { return parts_; }
  std::size_t depth() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  part_type operator[](std::size_t i) const { return parts_[i]; }
  part_type back() const { return parts_.back(); }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<part_type> parts_;
};

/// One block ({1}^{a-1}, b+1) of an admissible index.
struct Run {
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  friend bool operator==(const Run&, const Run&) = default;
};

using RunDecomposition = std::vector<Run>;

std::uint64_t weight(const Index& k) noexcept;
bool is_admissible(const Index& k) noexcept;

/// Splits an admissible index into its (a_i, b_i) runs.
RunDecomposition decompose(const Index& k);
Index compose(const RunDecomposition& runs);

/// The dual index: runs reversed with a and b exchanged.
Index dual(const Index& k);

/// All admissible indices of weight w (optionally of fixed depth), in
/// lexicographic order.
std::vector<Index> enumerate_admissible(unsigned w, std::optional<unsigned> depth = {});

/// All r-tuples of non-negative integers summing to c, lexicographic.
std::vector<std::vector<unsigned>> compositions(unsigned c, unsigned r);

/// k with each part k_i raised by shift_i.
Index elevate(const Index& k, const std::vector<unsigned>& shift);

/// "1,2" <-> (1,2); the empty index is the empty string.
std::string to_string(const Index& k);
Index parse_index(std::string_view text);

}  // namespace mzv
