#include "mzv/index.hpp"

#include <charconv>
#include <numeric>

namespace mzv {

namespace {

void require_positive(const std::vector<Index::part_type>& parts) {
  for (auto p : parts)
    if (p == 0) throw DomainError("index parts must be positive integers");
}

void require_admissible(const Index& k, const char* what) {
  if (!is_admissible(k))
    throw DomainError(std::string(what) + ": index (" + to_string(k) + ") is not admissible");
}

void extend_compositions(unsigned remaining, unsigned slots, std::vector<unsigned>& prefix,
                         std::vector<std::vector<unsigned>>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned head = 0; head <= remaining; ++head) {
    prefix.push_back(head);
    extend_compositions(remaining - head, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

// Compositions of `remaining` whose last part is >= 2, first part ascending.
void extend_admissible(unsigned remaining, std::optional<unsigned> slots,
                       std::vector<Index::part_type>& prefix, std::vector<Index>& out) {
  if (slots && *slots == 0) return;
  for (unsigned head = 1; head <= remaining; ++head) {
    const unsigned rest = remaining - head;
    if (rest == 0) {
      if (head >= 2 && (!slots || *slots == 1)) {
        prefix.push_back(head);
        out.emplace_back(prefix);
        prefix.pop_back();
      }
      continue;
    }
    prefix.push_back(head);
    extend_admissible(rest, slots ? std::optional<unsigned>(*slots - 1) : std::nullopt, prefix,
                      out);
    prefix.pop_back();
  }
}

}  // namespace

Index::Index(std::initializer_list<part_type> parts) : parts_(parts) { require_positive(parts_); }

Index::Index(std::vector<part_type> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
}

std::uint64_t weight(const Index& k) noexcept {
  return std::accumulate(k.begin(), k.end(), std::uint64_t{0});
}

bool is_admissible(const Index& k) noexcept { return !k.empty() && k.back() >= 2; }

RunDecomposition decompose(const Index& k) {
  require_admissible(k, "decompose");
  RunDecomposition runs;
  std::uint32_t ones = 0;
  for (auto part : k) {
    if (part == 1) {
      ++ones;
    } else {
      runs.push_back({ones + 1, part - 1});
      ones = 0;
    }
  }
  return runs;
}

Index compose(const RunDecomposition& runs) {
  std::vector<Index::part_type> parts;
  for (const auto& [a, b] : runs) {
    if (a == 0 || b == 0) throw DomainError("compose: run lengths must be positive");
    parts.insert(parts.end(), a - 1, 1);
    parts.push_back(b + 1);
  }
  return Index(std::move(parts));
}

Index dual(const Index& k) {
  require_admissible(k, "dual");
  const auto runs = decompose(k);
  RunDecomposition flipped;
  flipped.reserve(runs.size());
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) flipped.push_back({it->b, it->a});
  return compose(flipped);
}

std::vector<Index> enumerate_admissible(unsigned w, std::optional<unsigned> depth) {
  std::vector<Index> out;
  if (w < 2) return out;
  if (depth && (*depth == 0 || *depth >= w)) return out;
  std::vector<Index::part_type> prefix;
  extend_admissible(w, depth, prefix, out);
  return out;
}

std::vector<std::vector<unsigned>> compositions(unsigned c, unsigned r) {
  if (r == 0) throw DomainError("compositions: number of parts must be positive");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  extend_compositions(c, r, prefix, out);
  return out;
}

Index elevate(const Index& k, const std::vector<unsigned>& shift) {
  if (shift.size() != k.depth()) throw DomainError("elevate: shift length differs from depth");
  std::vector<Index::part_type> parts(k.begin(), k.end());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += shift[i];
  return Index(std::move(parts));
}

std::string to_string(const Index& k) {
  std::string out;
  for (std::size_t i = 0; i < k.depth(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out;
}

Index parse_index(std::string_view text) {
  std::vector<Index::part_type> parts;
  if (text.empty()) return Index{};
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    Index::part_type value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size() || value == 0)
      throw DomainError("malformed index '" + std::string(text) +
                        "': expected comma-separated positive integers");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Index(std::move(parts));
}

}  // namespace mzv
